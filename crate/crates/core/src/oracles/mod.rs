//! Exhaustive ground-truth checks.
//!
//! Everything here is exponential and meant for small graphs only. Each
//! oracle refuses instances beyond its size guard instead of running for
//! hours; see [`OracleLimits`].

mod clique;
mod detect;
mod lemmas;
mod paths;
mod snake;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Path, VertexId, VertexSet};

pub use clique::max_clique;
pub use detect::{Witness, WitnessKind};
pub use lemmas::OutcomeReport;
pub use snake::Snake;

/// Environment variable that overrides every vertex-count guard at once.
pub const ORACLE_MAX_N_ENV: &str = "EVENPAIR_ORACLE_MAX_N";

/// Hard ceiling imposed by the 64-bit mask representation.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{oracle} oracle refuses n = {n} (limit {limit})")]
    TooLarge { oracle: &'static str, n: usize, limit: usize },
    #[error("more than {cap} chordless paths; instance too large for enumeration")]
    PathCapExceeded { cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Size guards for the exhaustive oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    /// Even-pair, 2-pair and chordless-path enumeration.
    pub pair_max_n: usize,
    /// Enumerated-path cap for the pair oracles.
    pub max_paths: usize,
    pub snake_max_n: usize,
    pub chromatic_max_n: usize,
    /// Hole, antihole and prism detection.
    pub detector_max_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            pair_max_n: 20,
            max_paths: 1_000_000,
            snake_max_n: 14,
            chromatic_max_n: 16,
            detector_max_n: 24,
        }
    }
}

impl OracleLimits {
    /// Same vertex bound for every oracle.
    pub fn uniform(max_n: usize) -> Self {
        let max_n = max_n.min(MASK_LIMIT);
        OracleLimits {
            pair_max_n: max_n,
            snake_max_n: max_n,
            chromatic_max_n: max_n,
            detector_max_n: max_n,
            ..Default::default()
        }
    }

    /// Defaults, unless `EVENPAIR_ORACLE_MAX_N` holds a number.
    pub fn from_env() -> Self {
        match std::env::var(ORACLE_MAX_N_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            Some(n) => Self::uniform(n),
            None => Self::default(),
        }
    }

    pub(crate) fn guard(&self, oracle: &'static str, n: usize, limit: usize) -> Result<(), OracleError> {
        let limit = limit.min(MASK_LIMIT);
        if n > limit {
            Err(OracleError::TooLarge { oracle, n, limit })
        } else {
            Ok(())
        }
    }
}

/// Adjacency as one `u64` per vertex position. Requires `n <= 64`.
#[derive(Clone, Debug)]
pub(crate) struct MaskGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= MASK_LIMIT, "mask graphs hold at most 64 vertices");
        let adj = (0..g.n())
            .map(|i| g.row(i).ones().fold(0u64, |m, j| m | (1 << j)))
            .collect();
        MaskGraph { n: g.n(), adj }
    }

    pub fn complement(&self) -> Self {
        let all = full(self.n);
        let adj = (0..self.n).map(|i| !self.adj[i] & all & !(1 << i)).collect();
        MaskGraph { n: self.n, adj }
    }

    #[inline]
    pub fn has(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn edges_within(&self, w: u64) -> usize {
        ones(w).map(|i| (self.adj[i] & w).count_ones() as usize).sum::<usize>() / 2
    }
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Set bits of a mask in ascending order.
pub(crate) fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub(crate) fn ids_of(g: &Graph, idx: &[usize]) -> Vec<VertexId> {
    idx.iter().map(|&i| g.id(i)).collect()
}

/// Oracle entry points sharing one set of size guards.
#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    pub fn from_env() -> Self {
        Oracle::new(OracleLimits::from_env())
    }

    pub fn find_odd_hole(&self, g: &Graph) -> Result<Option<Witness>, OracleError> {
        self.limits.guard("odd-hole", g.n(), self.limits.detector_max_n)?;
        Ok(detect::find_odd_hole(g))
    }

    pub fn find_long_antihole(&self, g: &Graph) -> Result<Option<Witness>, OracleError> {
        self.limits.guard("antihole", g.n(), self.limits.detector_max_n)?;
        Ok(detect::find_long_antihole(g))
    }

    pub fn find_prism(&self, g: &Graph) -> Result<Option<Witness>, OracleError> {
        self.limits.guard("prism", g.n(), self.limits.detector_max_n)?;
        Ok(detect::find_prism(g))
    }

    /// `None` iff `g` has no odd hole, no antihole of length at least 5 and
    /// no prism. Detectors run odd hole, prism, antihole, so a graph that is
    /// both a prism and an antihole (such as the complement of C6) reports
    /// the prism.
    pub fn class_a_witness(&self, g: &Graph) -> Result<Option<Witness>, OracleError> {
        self.limits.guard("class-A", g.n(), self.limits.detector_max_n)?;
        Ok(detect::find_odd_hole(g)
            .or_else(|| detect::find_prism(g))
            .or_else(|| detect::find_long_antihole(g)))
    }

    pub fn is_weakly_triangulated(&self, g: &Graph) -> Result<bool, OracleError> {
        self.limits.guard("weakly-triangulated", g.n(), self.limits.detector_max_n)?;
        Ok(detect::is_weakly_triangulated(g))
    }

    pub fn enumerate_chordless_paths(&self, g: &Graph, x: VertexId, y: VertexId, cap: usize) -> Result<Vec<Path>, OracleError> {
        self.limits.guard("chordless-paths", g.n(), self.limits.pair_max_n)?;
        paths::enumerate_chordless_paths(g, x, y, cap)
    }

    pub fn is_even_pair(&self, g: &Graph, x: VertexId, y: VertexId) -> Result<bool, OracleError> {
        self.limits.guard("even-pair", g.n(), self.limits.pair_max_n)?;
        paths::is_even_pair(g, x, y, self.limits.max_paths)
    }

    pub fn is_two_pair(&self, g: &Graph, x: VertexId, y: VertexId) -> Result<bool, OracleError> {
        self.limits.guard("two-pair", g.n(), self.limits.pair_max_n)?;
        paths::is_two_pair(g, x, y, self.limits.max_paths)
    }

    pub fn find_proper_snake(&self, g: &Graph, a: VertexId, b: VertexId) -> Result<Option<Snake>, OracleError> {
        self.limits.guard("snake", g.n(), self.limits.snake_max_n)?;
        snake::find_proper_snake(g, a, b)
    }

    /// Even pair with no proper snake between its vertices.
    pub fn is_special_even_pair(&self, g: &Graph, a: VertexId, b: VertexId) -> Result<bool, OracleError> {
        if !self.is_even_pair(g, a, b)? {
            return Ok(false);
        }
        Ok(self.find_proper_snake(g, a, b)?.is_none())
    }

    pub fn max_clique(&self, g: &Graph) -> VertexSet {
        clique::max_clique(g)
    }

    pub fn chromatic_number_exact(&self, g: &Graph) -> Result<usize, OracleError> {
        self.limits.guard("chromatic-number", g.n(), self.limits.chromatic_max_n)?;
        Ok(clique::chromatic_number(g))
    }

    pub fn check_parity_lemma(&self, g: &Graph, p: &Path, t: &VertexSet) -> Result<bool, OracleError> {
        self.limits.guard("parity-lemma", g.n(), MASK_LIMIT)?;
        lemmas::check_parity_lemma(g, p, t)
    }

    pub fn check_roussel_rubio(&self, g: &Graph, p: &Path, t: &VertexSet) -> Result<OutcomeReport, OracleError> {
        self.limits.guard("roussel-rubio", g.n(), self.limits.pair_max_n)?;
        lemmas::check_roussel_rubio(g, p, t, self.limits.max_paths)
    }
}

// Free-function forms using the default guards.

pub fn find_odd_hole(g: &Graph) -> Result<Option<Witness>, OracleError> {
    Oracle::default().find_odd_hole(g)
}

pub fn find_long_antihole(g: &Graph) -> Result<Option<Witness>, OracleError> {
    Oracle::default().find_long_antihole(g)
}

pub fn find_prism(g: &Graph) -> Result<Option<Witness>, OracleError> {
    Oracle::default().find_prism(g)
}

pub fn class_a_witness(g: &Graph) -> Result<Option<Witness>, OracleError> {
    Oracle::default().class_a_witness(g)
}

pub fn is_weakly_triangulated(g: &Graph) -> Result<bool, OracleError> {
    Oracle::default().is_weakly_triangulated(g)
}

pub fn enumerate_chordless_paths(g: &Graph, x: VertexId, y: VertexId, cap: usize) -> Result<Vec<Path>, OracleError> {
    Oracle::default().enumerate_chordless_paths(g, x, y, cap)
}

pub fn is_even_pair(g: &Graph, x: VertexId, y: VertexId) -> Result<bool, OracleError> {
    Oracle::default().is_even_pair(g, x, y)
}

pub fn is_two_pair(g: &Graph, x: VertexId, y: VertexId) -> Result<bool, OracleError> {
    Oracle::default().is_two_pair(g, x, y)
}

pub fn find_proper_snake(g: &Graph, a: VertexId, b: VertexId) -> Result<Option<Snake>, OracleError> {
    Oracle::default().find_proper_snake(g, a, b)
}

pub fn is_special_even_pair(g: &Graph, a: VertexId, b: VertexId) -> Result<bool, OracleError> {
    Oracle::default().is_special_even_pair(g, a, b)
}

pub fn chromatic_number_exact(g: &Graph) -> Result<usize, OracleError> {
    Oracle::default().chromatic_number_exact(g)
}

pub fn check_parity_lemma(g: &Graph, p: &Path, t: &VertexSet) -> Result<bool, OracleError> {
    Oracle::default().check_parity_lemma(g, p, t)
}

pub fn check_roussel_rubio(g: &Graph, p: &Path, t: &VertexSet) -> Result<OutcomeReport, OracleError> {
    Oracle::default().check_roussel_rubio(g, p, t)
}
