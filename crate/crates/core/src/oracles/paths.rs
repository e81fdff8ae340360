//! Chordless path enumeration and the pair oracles built on it.

use std::ops::ControlFlow;

use super::{ids_of, ones, MaskGraph, OracleError};
use crate::graph::{Graph, GraphError, Path, VertexId};

/// Visits every chordless `x`-`y` path as a position list. A vertex may
/// only be appended if it misses every path vertex except the current end,
/// so each emitted path is induced.
pub(crate) fn for_each_chordless_path(
    m: &MaskGraph,
    x: usize,
    y: usize,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn step(
        m: &MaskGraph,
        y: usize,
        path: &mut Vec<usize>,
        blocked: u64,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let last = *path.last().unwrap();
        if m.has(last, y) {
            // Any other continuation would leave the chord last–y.
            if blocked >> y & 1 == 0 {
                path.push(y);
                let flow = visit(path);
                path.pop();
                return flow;
            }
            return ControlFlow::Continue(());
        }
        // Blocked for the next vertex: the path itself and the neighbours of
        // every vertex before the new end.
        let next_blocked = blocked | m.adj[last] | 1 << last;
        for v in ones(m.adj[last] & !blocked) {
            path.push(v);
            step(m, y, path, next_blocked | 1 << v, visit)?;
            path.pop();
        }
        ControlFlow::Continue(())
    }

    let mut path = vec![x];
    step(m, y, &mut path, 1 << x, visit)
}

fn positions(g: &Graph, x: VertexId, y: VertexId) -> Result<(usize, usize), OracleError> {
    let i = g.idx(x)?;
    let j = g.idx(y)?;
    if i == j {
        return Err(OracleError::Precondition(format!("endpoints coincide ({x})")));
    }
    Ok((i, j))
}

fn non_adjacent(g: &Graph, x: VertexId, y: VertexId) -> Result<(usize, usize), OracleError> {
    let (i, j) = positions(g, x, y)?;
    if g.adjacent(i, j) {
        return Err(GraphError::AdjacentPair(x, y).into());
    }
    Ok((i, j))
}

pub(crate) fn enumerate_chordless_paths(g: &Graph, x: VertexId, y: VertexId, cap: usize) -> Result<Vec<Path>, OracleError> {
    let (i, j) = positions(g, x, y)?;
    let m = MaskGraph::new(g);
    let mut out = Vec::new();
    let mut overflow = false;
    let _ = for_each_chordless_path(&m, i, j, &mut |p| {
        if out.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(Path::new(ids_of(g, p)));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(OracleError::PathCapExceeded { cap });
    }
    Ok(out)
}

/// Scans all chordless paths until `bad` fires on one of them.
fn any_path(g: &Graph, i: usize, j: usize, cap: usize, bad: impl Fn(usize) -> bool) -> Result<bool, OracleError> {
    let m = MaskGraph::new(g);
    let mut count = 0usize;
    let mut found = false;
    let mut overflow = false;
    let _ = for_each_chordless_path(&m, i, j, &mut |p| {
        count += 1;
        if count > cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        if bad(p.len() - 1) {
            found = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(OracleError::PathCapExceeded { cap });
    }
    Ok(found)
}

pub(crate) fn is_even_pair(g: &Graph, x: VertexId, y: VertexId, cap: usize) -> Result<bool, OracleError> {
    let (i, j) = non_adjacent(g, x, y)?;
    Ok(!any_path(g, i, j, cap, |len| len % 2 == 1)?)
}

/// All chordless paths have length exactly 2. Holds vacuously when `x` and
/// `y` lie in different components.
pub(crate) fn is_two_pair(g: &Graph, x: VertexId, y: VertexId, cap: usize) -> Result<bool, OracleError> {
    let (i, j) = non_adjacent(g, x, y)?;
    Ok(!any_path(g, i, j, cap, |len| len != 2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn ids(v: &[u32]) -> Vec<VertexId> {
        v.iter().copied().map(VertexId).collect()
    }

    #[test]
    fn enumeration_examples() {
        let c6 = cycle(6);
        let mut got: Vec<Vec<VertexId>> = enumerate_chordless_paths(&c6, VertexId(1), VertexId(5), 100)
            .unwrap()
            .into_iter()
            .map(Path::into_vertices)
            .collect();
        got.sort();
        assert_eq!(got, vec![ids(&[1, 0, 5]), ids(&[1, 2, 3, 4, 5])]);

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let paths = enumerate_chordless_paths(&k2, VertexId(0), VertexId(1), 10).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].len(), 1);

        assert!(enumerate_chordless_paths(&Graph::empty(2), VertexId(0), VertexId(1), 10).unwrap().is_empty());
        assert_eq!(
            enumerate_chordless_paths(&c6, VertexId(1), VertexId(5), 1),
            Err(OracleError::PathCapExceeded { cap: 1 })
        );
    }

    #[test]
    fn enumerated_paths_are_chordless() {
        // K4 minus an edge plus a pendant path creates several chords to avoid.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        for p in enumerate_chordless_paths(&g, VertexId(0), VertexId(3), 100).unwrap() {
            assert!(p.is_chordless(&g), "{p:?}");
        }
    }

    #[test]
    fn even_pair_examples() {
        let c6 = cycle(6);
        assert!(is_even_pair(&c6, VertexId(1), VertexId(5), 1000).unwrap());
        assert!(!is_even_pair(&c6, VertexId(0), VertexId(3), 1000).unwrap());
        assert!(is_even_pair(&Graph::empty(2), VertexId(0), VertexId(1), 1000).unwrap());
        assert!(matches!(
            is_even_pair(&c6, VertexId(0), VertexId(1), 1000),
            Err(OracleError::Graph(GraphError::AdjacentPair(..)))
        ));
    }

    #[test]
    fn two_pair_examples() {
        assert!(is_two_pair(&cycle(4), VertexId(0), VertexId(2), 1000).unwrap());
        assert!(!is_two_pair(&cycle(6), VertexId(1), VertexId(5), 1000).unwrap());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_two_pair(&p4, VertexId(0), VertexId(3), 1000).unwrap());
        assert!(is_two_pair(&Graph::empty(2), VertexId(0), VertexId(1), 1000).unwrap());
    }
}
