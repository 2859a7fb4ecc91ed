//! Result and instrumentation types shared by the VC and FVS solvers.

use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub feasible: bool,
    /// Present iff `feasible`; valid against the caller's input graph.
    pub certificate: Option<VertexSet>,
    pub nodes_explored: u64,
    #[serde(rename = "time_ms", serialize_with = "as_millis")]
    pub wall_time: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl SolveResult {
    pub(crate) fn infeasible(nodes: u64, started: Instant) -> Self {
        SolveResult {
            feasible: false,
            certificate: None,
            nodes_explored: nodes,
            wall_time: started.elapsed(),
        }
    }

    pub(crate) fn feasible(cert: VertexSet, nodes: u64, started: Instant) -> Self {
        SolveResult {
            feasible: true,
            certificate: Some(cert),
            nodes_explored: nodes,
            wall_time: started.elapsed(),
        }
    }
}

/// Optional caps on a search. Exceeding one yields [`Error::Timeout`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    pub deadline: Option<Instant>,
    pub max_nodes: Option<u64>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(d: Duration) -> Self {
        SearchLimits {
            deadline: Some(Instant::now() + d),
            max_nodes: None,
        }
    }

    pub(crate) fn check(&self, nodes: u64, what: &'static str) -> Result<()> {
        if self.max_nodes.is_some_and(|m| nodes > m) {
            return Err(Error::Timeout(what));
        }
        if nodes % 256 == 0 && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::Timeout(what));
        }
        Ok(())
    }
}

/// Which case of a one-round guarantee branching a subcall belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum BranchCase {
    /// Every h-index witness is in the cover.
    TakeWitnesses,
    /// Witness `vertex` is outside the cover, so all its neighbors are in.
    ExcludeWitness { vertex: usize },
    /// The whole core is in the feedback vertex set.
    DeleteCore,
    /// `vertex` is isolated in the surviving part of the core.
    IsolatedInCore { vertex: usize },
    /// `vertex` is a leaf of the surviving core forest, attached to `parent`.
    LeafInCore { vertex: usize, parent: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Branch {
    #[serde(flatten)]
    pub case: BranchCase,
    /// Vertices deleted (committed to the solution) by this branch.
    pub removed: VertexSet,
    /// Remaining budget handed to the subcall; may be negative, in which
    /// case the subcall is skipped.
    pub budget: i64,
    /// `None` when the branch was skipped or never reached.
    pub outcome: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AboveGuaranteeResult {
    #[serde(flatten)]
    pub result: SolveResult,
    /// The lower-bound parameter value (h-index, degeneracy, treewidth).
    pub guarantee: usize,
    /// `k - guarantee`.
    pub ell: i64,
    pub branches: Vec<Branch>,
}

impl AboveGuaranteeResult {
    pub fn max_subcall_budget(&self) -> Option<i64> {
        self.branches.iter().map(|b| b.budget).max()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AboveOptions {
    /// Run every branch even after one succeeds (for instrumentation).
    pub exhaustive: bool,
    pub limits: SearchLimits,
}
