//! Brute-force checkers for the parity statements about chordless paths
//! whose ends are complete to a co-connected set.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::paths::for_each_chordless_path;
use super::{ids_of, MaskGraph, OracleError};
use crate::graph::{Graph, Path, VertexId, VertexSet};

/// Which of the four possible outcomes hold for a (path, set) configuration.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OutcomeReport {
    pub length: usize,
    pub t_edges: usize,
    /// Outcome 0: even length, even number of T-edges.
    pub even_even: bool,
    /// Outcome 1: odd length, odd number of T-edges.
    pub odd_odd: bool,
    /// Outcome 2: a leap `{u, v}` in T, `u` seeing `x'` and `v` seeing `y'`.
    pub leap: Option<(VertexId, VertexId)>,
    /// Outcome 3: an odd chordless path of the complement between the two
    /// internal vertices of a length-3 path, with interior in T.
    pub hop: Option<Path>,
}

impl OutcomeReport {
    pub fn outcomes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        if self.even_even {
            out.push(0);
        }
        if self.odd_odd {
            out.push(1);
        }
        if self.leap.is_some() {
            out.push(2);
        }
        if self.hop.is_some() {
            out.push(3);
        }
        out
    }

    pub fn any(&self) -> bool {
        !self.outcomes().is_empty()
    }
}

/// Checks the shared preconditions and returns the T-complete vertices.
fn check_config(g: &Graph, p: &Path, t: &VertexSet) -> Result<VertexSet, OracleError> {
    if !p.is_chordless(g) {
        return Err(OracleError::Precondition("path is not a chordless path of the graph".into()));
    }
    if t.is_empty() {
        return Err(OracleError::Precondition("T is empty".into()));
    }
    if !g.is_co_connected(t)? {
        return Err(OracleError::Precondition("T is not co-connected".into()));
    }
    if p.vertices().iter().any(|v| t.contains(v)) {
        return Err(OracleError::Precondition("path meets T".into()));
    }
    let complete = g.complete_set(t)?;
    let (x, y) = (p.first().unwrap(), p.last().unwrap());
    for end in [x, y] {
        if !complete.contains(&end) {
            return Err(OracleError::Precondition(format!("endpoint {end} is not T-complete")));
        }
    }
    Ok(complete)
}

fn count_t_edges(p: &Path, complete: &VertexSet) -> usize {
    p.vertices()
        .windows(2)
        .filter(|w| complete.contains(&w[0]) && complete.contains(&w[1]))
        .count()
}

/// True iff the number of T-edges of `p` has the parity of its length.
pub(crate) fn check_parity_lemma(g: &Graph, p: &Path, t: &VertexSet) -> Result<bool, OracleError> {
    let complete = check_config(g, p, t)?;
    Ok(count_t_edges(p, &complete) % 2 == p.len() % 2)
}

pub(crate) fn check_roussel_rubio(g: &Graph, p: &Path, t: &VertexSet, cap: usize) -> Result<OutcomeReport, OracleError> {
    let complete = check_config(g, p, t)?;
    let length = p.len();
    let t_edges = count_t_edges(p, &complete);
    let mut report = OutcomeReport {
        length,
        t_edges,
        even_even: length % 2 == 0 && t_edges % 2 == 0,
        odd_odd: length % 2 == 1 && t_edges % 2 == 1,
        ..Default::default()
    };

    let vs = p.vertices();
    if length >= 3 && length % 2 == 1 {
        let (x, x1, y1, y) = (vs[0], vs[1], vs[vs.len() - 2], vs[vs.len() - 1]);
        let on_path = |u: VertexId| -> VertexSet {
            vs.iter().copied().filter(|&w| g.has_edge(u, w)).collect()
        };
        let want_u: VertexSet = [x, x1, y].into_iter().collect();
        let want_v: VertexSet = [x, y1, y].into_iter().collect();
        'scan: for &u in t {
            if on_path(u) != want_u {
                continue;
            }
            for &v in t {
                if v != u && !g.has_edge(u, v) && on_path(v) == want_v {
                    report.leap = Some((u, v));
                    break 'scan;
                }
            }
        }
    }

    if length == 3 {
        let (x1, y1) = (vs[1], vs[2]);
        let mut keep = t.clone();
        keep.insert(x1);
        keep.insert(y1);
        let h = g.induced_subgraph(&keep)?.complement();
        let m = MaskGraph::new(&h);
        let (i, j) = (h.idx(x1)?, h.idx(y1)?);
        let mut found = None;
        let mut seen = 0usize;
        let mut overflow = false;
        let _ = for_each_chordless_path(&m, i, j, &mut |q| {
            seen += 1;
            if seen > cap {
                overflow = true;
                return ControlFlow::Break(());
            }
            if (q.len() - 1) % 2 == 1 {
                found = Some(Path::new(ids_of(&h, q)));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if overflow {
            return Err(OracleError::PathCapExceeded { cap });
        }
        report.hop = found;
    }
    Ok(report)
}
