use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use above::oracles::{self, OracleLimits};
use above::planar::{self, PlanarWidthOptions};
use above::solve::{AboveOptions, SearchLimits, SolveResult};
use above::verify::{self, Suite, VerifyConfig};
use above::{fvs, io, params, reductions, vc, Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

/// Exact and above-guarantee solvers for Vertex Cover and Feedback Vertex
/// Set, structural parameters, hardness reductions, brute-force oracles and
/// randomized verification suites.
///
/// Graphs are read as DIMACS ("p edge n m", 1-indexed "e u v" lines) or as a
/// plain edge list (first line "n m", then 0-indexed pairs); formulas as
/// DIMACS CNF. A path of "-" reads standard input. All results are JSON on
/// standard output; diagnostics go to standard error.
///
/// Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
/// error, 3 capacity or time limit exceeded.
#[derive(Parser)]
#[command(name = "above", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural parameters of a graph.
    Params {
        file: PathBuf,
        /// Vertex limit for the exact treewidth computation; larger graphs
        /// omit the treewidth key.
        #[arg(long, default_value_t = params::DEFAULT_TREEWIDTH_LIMIT)]
        treewidth_limit: usize,
    },
    /// Decide whether a vertex cover / feedback vertex set of size k exists.
    Solve {
        problem: Problem,
        file: PathBuf,
        #[arg(short = 'k', long)]
        k: usize,
        /// Branch once on a structural guarantee before solving.
        #[arg(long, value_enum)]
        above: Option<Above>,
        /// Give up after this many seconds (exit code 3).
        #[arg(long)]
        timeout: Option<f64>,
        /// Run every guarantee branch, even after a solution is found.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Run a reduction and write the output graph (DIMACS) plus a JSON
    /// sidecar with budget, certificates, claimed parameters and gadget map.
    Reduce {
        name: Reduction,
        /// Input graph, or CNF formula for the sat-cvd reductions.
        file: PathBuf,
        /// Source budget: clique size, cover budget, independent set size,
        /// or feedback vertex set size depending on the reduction.
        #[arg(short = 'k', long)]
        k: Option<usize>,
        /// Clique order for is-krfree.
        #[arg(short = 'r', long, default_value_t = 3)]
        r: usize,
        /// Output DIMACS path; the sidecar goes to `<out>.json`. Without it
        /// the sidecar is printed with the DIMACS text embedded.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Brute-force ground truth for a graph parameter.
    Oracle {
        param: OracleParam,
        file: PathBuf,
        /// Clique order for dist-kr.
        #[arg(short = 'r', long, default_value_t = 3)]
        r: usize,
        /// Cap on the number of subsets an enumeration may test.
        #[arg(long, env = "ABOVE_WORK_BUDGET", default_value_t = 1_000_000_000)]
        work_budget: u64,
    },
    /// Run a randomized verification suite ("all" runs every suite).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances; defaults to the suite's standard size.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, env = "ABOVE_WORK_BUDGET", default_value_t = 1_000_000_000)]
        work_budget: u64,
        /// Print every check, not only failures and skips.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Vc,
    Fvs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Above {
    Plain,
    HIndex,
    Degeneracy,
    TreewidthPlanar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    CliqueComplement,
    VcFvsTriangle,
    IsKrfree,
    SatCvd,
    SatCvdExtended,
    FvsBelowVc,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleParam {
    Vc,
    Is,
    Fvs,
    Cvd,
    DistKr,
}

/// Failure of a command, carrying the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } | Error::Timeout(_) => EXIT_CAPACITY,
            Error::Input(_) | Error::Parse { .. } => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<(Value, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Params {
            file,
            treewidth_limit,
        } => cmd_params(&file, treewidth_limit),
        Command::Solve {
            problem,
            file,
            k,
            above,
            timeout,
            exhaustive,
        } => cmd_solve(problem, &file, k, above.unwrap_or(Above::Plain), timeout, exhaustive),
        Command::Reduce { name, file, k, r, out } => cmd_reduce(name, &file, k, r, out.as_deref()),
        Command::Oracle {
            param,
            file,
            r,
            work_budget,
        } => cmd_oracle(param, &file, r, work_budget),
        Command::Verify {
            suite,
            seed,
            count,
            work_budget,
            verbose,
        } => cmd_verify(&suite, seed, count, work_budget, verbose),
    };
    match outcome {
        Ok((value, code)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

struct Input {
    text: String,
    sha256: String,
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let mut bytes = Vec::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        fs::read(path).map(|b| bytes = b)
    };
    res.map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| usage(format!("{} is not valid UTF-8", path.display())))?;
    Ok(Input {
        text,
        sha256: hex(&Sha256::digest(&bytes)),
    })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn read_graph(path: &Path) -> Result<(Graph, String), Failure> {
    let input = read_input(path)?;
    Ok((io::parse_graph(&input.text)?, input.sha256))
}

/// Wraps a payload with the tool version and input hash.
fn envelope(command: &str, sha256: &str, payload: Value) -> Value {
    let mut out = Map::new();
    out.insert("tool".into(), json!("above"));
    out.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    out.insert("command".into(), json!(command));
    out.insert("input_sha256".into(), json!(sha256));
    if let Value::Object(m) = payload {
        out.extend(m);
    }
    Value::Object(out)
}

fn cmd_params(path: &Path, treewidth_limit: usize) -> CmdResult {
    let (g, sha) = read_graph(path)?;
    let mut p = Map::new();
    p.insert("n".into(), json!(g.n()));
    p.insert("m".into(), json!(g.edge_count()));
    if let Ok((min, max)) = params::degree_profile(&g) {
        p.insert("min_degree".into(), json!(min));
        p.insert("max_degree".into(), json!(max));
    }
    p.insert("h_index".into(), json!(params::h_index(&g).h));
    p.insert("degeneracy".into(), json!(params::degeneracy_core(&g).degeneracy));
    match params::clique_number(&g) {
        Ok(c) => {
            p.insert("clique_number".into(), json!(c.omega));
        }
        Err(e) => eprintln!("note: clique number omitted: {e}"),
    }
    match params::treewidth_exact_with_limit(&g, treewidth_limit) {
        Ok(tw) => {
            p.insert("treewidth".into(), json!(tw));
        }
        Err(e) => eprintln!("note: treewidth omitted: {e}"),
    }
    p.insert("planar".into(), json!(planar::is_planar(&g)));
    Ok((envelope("params", &sha, Value::Object(p)), EXIT_OK))
}

fn solve_json(r: &SolveResult) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("feasible".into(), json!(r.feasible));
    m.insert("certificate".into(), json!(r.certificate));
    m.insert("nodes".into(), json!(r.nodes_explored));
    m.insert("time_ms".into(), json!(r.wall_time.as_secs_f64() * 1e3));
    m
}

fn cmd_solve(
    problem: Problem,
    path: &Path,
    k: usize,
    above: Above,
    timeout: Option<f64>,
    exhaustive: bool,
) -> CmdResult {
    let compatible = matches!(
        (problem, above),
        (_, Above::Plain)
            | (Problem::Vc, Above::HIndex | Above::TreewidthPlanar)
            | (Problem::Fvs, Above::Degeneracy)
    );
    if !compatible {
        return Err(usage(format!(
            "--above {} is not available for {}",
            above.to_possible_value().unwrap().get_name(),
            problem.to_possible_value().unwrap().get_name()
        )));
    }
    let limits = match timeout {
        Some(s) if s.is_finite() && s >= 0.0 => SearchLimits::with_timeout(Duration::from_secs_f64(s)),
        Some(_) => return Err(usage("--timeout must be a non-negative number of seconds")),
        None => SearchLimits::unlimited(),
    };
    let (g, sha) = read_graph(path)?;
    let opts = AboveOptions { exhaustive, limits };
    let ki = k as i64;
    let (mut out, parameter) = match (problem, above) {
        (Problem::Vc, Above::Plain) => (solve_json(&vc::vc_decide_with_limits(&g, k, limits)?), json!({"k": k})),
        (Problem::Fvs, Above::Plain) => (solve_json(&fvs::fvs_decide_with_limits(&g, k, limits)?), json!({"k": k})),
        (Problem::Vc, Above::HIndex) => {
            let r = vc::vc_above_h_index_with(&g, k, opts)?;
            let mut m = solve_json(&r.result);
            m.insert("branches".into(), json!(r.branches));
            (m, json!({"k": k, "h": r.guarantee, "ell": r.ell}))
        }
        (Problem::Fvs, Above::Degeneracy) => {
            let r = fvs::fvs_above_degeneracy_with(&g, k, opts)?;
            let mut m = solve_json(&r.result);
            m.insert("branches".into(), json!(r.branches));
            (m, json!({"k": k, "d": r.guarantee, "ell": r.ell}))
        }
        (Problem::Vc, Above::TreewidthPlanar) => {
            let popts = PlanarWidthOptions {
                limits,
                ..Default::default()
            };
            let r = planar::vc_above_treewidth_planar_with(&g, k, &popts)?;
            let mut m = solve_json(&r.result);
            let rep = &r.report;
            m.insert("width".into(), json!(rep.width));
            m.insert("width_kind".into(), json!(rep.width_kind));
            m.insert("beta_lower_bound".into(), json!(rep.beta_lower_bound));
            m.insert("r".into(), json!(rep.r));
            m.insert("rejected".into(), json!(rep.rejected));
            m.insert("ell".into(), json!(rep.ell));
            (m, json!({"k": k, "tw": rep.width, "ell": ki - rep.width as i64}))
        }
        _ => unreachable!("compatibility checked above"),
    };
    out.insert("parameter".into(), parameter);
    Ok((envelope("solve", &sha, Value::Object(out)), EXIT_OK))
}

fn cmd_reduce(name: Reduction, path: &Path, k: Option<usize>, r: usize, out: Option<&Path>) -> CmdResult {
    let input = read_input(path)?;
    let need_k = || k.ok_or_else(|| usage("this reduction needs -k"));
    let art = match name {
        Reduction::SatCvd | Reduction::SatCvdExtended => {
            let phi = io::parse_cnf(&input.text)?;
            reductions::sat3_to_vc_above_cvd(&phi, matches!(name, Reduction::SatCvdExtended))?
        }
        _ => {
            let g = io::parse_graph(&input.text)?;
            match name {
                Reduction::CliqueComplement => reductions::clique_to_vc_complement(&g, need_k()?)?,
                Reduction::VcFvsTriangle => reductions::vc_to_fvs_triangles(&g, need_k()?),
                Reduction::IsKrfree => reductions::is_to_vc_above_krfree(&g, need_k()?, r)?,
                Reduction::FvsBelowVc => reductions::fvs_to_fvs_below_vc(&g, need_k()?)?,
                Reduction::SatCvd | Reduction::SatCvdExtended => unreachable!(),
            }
        }
    };
    let dimacs = io::write_dimacs(&art.graph);
    let mut side = Map::new();
    side.insert("reduction".into(), json!(art.name));
    side.insert("num_vertices".into(), json!(art.graph.n()));
    side.insert("num_edges".into(), json!(art.graph.edge_count()));
    for (key, v) in &art.claimed_params {
        side.insert(key.clone(), json!(v));
    }
    side.insert(art.budget_name.into(), json!(art.budget));
    side.insert("budget".into(), json!(art.budget));
    side.insert("budget_name".into(), json!(art.budget_name));
    side.insert("claimed_params".into(), json!(art.claimed_params));
    side.insert("certificates".into(), json!(art.certificates));
    side.insert("gadget_map".into(), json!(art.gadget_map));
    match out {
        Some(out) => {
            let mut sidecar = out.as_os_str().to_owned();
            sidecar.push(".json");
            let sidecar = PathBuf::from(sidecar);
            side.insert("graph_file".into(), json!(out.display().to_string()));
            let value = envelope("reduce", &input.sha256, Value::Object(side));
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            fs::write(out, dimacs).map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
            fs::write(&sidecar, text)
                .map_err(|e| usage(format!("cannot write {}: {e}", sidecar.display())))?;
            eprintln!("wrote {} and {}", out.display(), sidecar.display());
            Ok((value, EXIT_OK))
        }
        None => {
            side.insert("dimacs".into(), json!(dimacs));
            Ok((envelope("reduce", &input.sha256, Value::Object(side)), EXIT_OK))
        }
    }
}

fn cmd_oracle(param: OracleParam, path: &Path, r: usize, work_budget: u64) -> CmdResult {
    let (g, sha) = read_graph(path)?;
    let lim = OracleLimits {
        work_budget,
        ..Default::default()
    };
    let v = match param {
        OracleParam::Vc => oracles::brute_min_vertex_cover_with(&g, &lim)?,
        OracleParam::Is => oracles::brute_max_independent_set_with(&g, &lim)?,
        OracleParam::Fvs => oracles::brute_min_fvs_with(&g, &lim)?,
        OracleParam::Cvd => oracles::brute_cluster_deletion_number_with(&g, &lim)?,
        OracleParam::DistKr => oracles::brute_distance_to_kr_free_with(&g, r, &lim)?,
    };
    Ok((envelope("oracle", &sha, json!({"value": v.value, "witness": v.witness})), EXIT_OK))
}

fn cmd_verify(suite: &str, seed: u64, count: Option<usize>, work_budget: u64, verbose: bool) -> CmdResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|e: Error| usage(e.to_string()))?]
    };
    let mut cfg = VerifyConfig::default();
    cfg.oracle.work_budget = work_budget;
    let mut reports = Vec::new();
    let mut all_ok = true;
    for s in suites {
        let rep = verify::run_suite(s, seed, count.unwrap_or(s.default_count()), &cfg);
        eprintln!(
            "{}: {} passed, {} failed, {} skipped",
            s, rep.passed, rep.failed, rep.skipped
        );
        for c in rep.failures() {
            eprintln!("  {:?} {} (seed {:?}): {}", c.status, c.id, c.instance_seed, c.detail);
        }
        all_ok &= rep.ok();
        let mut v = serde_json::to_value(&rep).expect("reports serialize");
        if !verbose {
            let kept: Vec<&verify::CheckRecord> = rep.failures().collect();
            v["checks"] = json!(kept);
        }
        reports.push(v);
    }
    let args = format!("verify {suite} seed={seed} count={count:?}");
    let value = envelope(
        "verify",
        &hex(&Sha256::digest(args.as_bytes())),
        json!({"ok": all_ok, "seed": seed, "reports": reports}),
    );
    Ok((value, if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED }))
}
