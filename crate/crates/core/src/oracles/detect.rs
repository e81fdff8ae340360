//! Exhaustive detection of odd holes, long antiholes and prisms.

use serde::{Deserialize, Serialize};

use super::{ids_of, ones, MaskGraph};
use crate::graph::{Graph, Path, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    OddHole,
    Antihole,
    Prism,
}

/// Certificate that a graph lies outside the class.
///
/// Holes list their vertices in cyclic order, antiholes in cyclic order of
/// the complementary hole. Prisms list the three connecting paths one
/// after another; `paths[k]` runs from the k-th vertex of the first
/// triangle to the k-th vertex of the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<VertexId>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub paths: Vec<Path>,
}

impl Witness {
    fn cycle(kind: WitnessKind, vertices: Vec<VertexId>) -> Self {
        Witness { kind, vertices, paths: Vec::new() }
    }

    /// Re-checks the certificate against `g` by inducing its vertex set.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        match self.kind {
            WitnessKind::OddHole => {
                if self.vertices.len() < 5 || self.vertices.len() % 2 == 0 {
                    return Err(format!("odd hole needs odd length >= 5, got {}", self.vertices.len()));
                }
                check_hole(g, &self.vertices)
            }
            WitnessKind::Antihole => {
                if self.vertices.len() < 5 {
                    return Err(format!("antihole needs length >= 5, got {}", self.vertices.len()));
                }
                check_hole(&g.complement(), &self.vertices)
            }
            WitnessKind::Prism => check_prism(g, &self.paths, &self.vertices),
        }
    }
}

/// The listed vertices induce exactly the cycle in that order.
fn check_hole(g: &Graph, cyc: &[VertexId]) -> Result<(), String> {
    let k = cyc.len();
    let set: VertexSet = cyc.iter().copied().collect();
    if set.len() != k {
        return Err("repeated vertex".into());
    }
    for (i, &u) in cyc.iter().enumerate() {
        if !g.contains(u) {
            return Err(format!("unknown vertex {u}"));
        }
        for (j, &v) in cyc.iter().enumerate().skip(i + 1) {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(u, v) != consecutive {
                return Err(format!("pair {u},{v}: edge={} expected={consecutive}", g.has_edge(u, v)));
            }
        }
    }
    Ok(())
}

fn check_prism(g: &Graph, paths: &[Path], vertices: &[VertexId]) -> Result<(), String> {
    if paths.len() != 3 {
        return Err("prism needs three paths".into());
    }
    let mut expected: Vec<(VertexId, VertexId)> = Vec::new();
    let mut all = VertexSet::new();
    for p in paths {
        if p.len() < 1 {
            return Err("prism paths have length >= 1".into());
        }
        for &v in p.vertices() {
            if !all.insert(v) {
                return Err(format!("vertex {v} used twice"));
            }
        }
        for w in p.vertices().windows(2) {
            expected.push((w[0], w[1]));
        }
    }
    let concat: Vec<VertexId> = paths.iter().flat_map(|p| p.vertices().iter().copied()).collect();
    if concat != vertices {
        return Err("vertex list must be the concatenated paths".into());
    }
    let firsts: Vec<VertexId> = paths.iter().map(|p| p.first().unwrap()).collect();
    let lasts: Vec<VertexId> = paths.iter().map(|p| p.last().unwrap()).collect();
    for tri in [&firsts, &lasts] {
        expected.push((tri[0], tri[1]));
        expected.push((tri[1], tri[2]));
        expected.push((tri[0], tri[2]));
    }
    compare_edges(g, &all, expected)
}

/// The subgraph induced by `set` has exactly the `expected` edges.
pub(crate) fn compare_edges(g: &Graph, set: &VertexSet, expected: Vec<(VertexId, VertexId)>) -> Result<(), String> {
    let mut want: Vec<(VertexId, VertexId)> = expected.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
    want.sort_unstable();
    want.dedup();
    let h = g.induced_subgraph(set).map_err(|e| e.to_string())?;
    let got = h.edges();
    if got != want {
        return Err(format!("induced edges {got:?} differ from required {want:?}"));
    }
    Ok(())
}

/// Depth-first search over chordless cycles with `start` as their lowest
/// vertex. Calls `accept` with the cycle length; returns the first accepted
/// hole (length >= 4) in cyclic order.
fn search_holes(m: &MaskGraph, accept: &dyn Fn(usize) -> bool) -> Option<Vec<usize>> {
    fn grow(m: &MaskGraph, allowed: u64, path: &mut Vec<usize>, in_path: u64, accept: &dyn Fn(usize) -> bool) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        // Vertices strictly inside the path; a new vertex must miss all of them.
        let inner = in_path & !(1 << s) & !(1 << last);
        for v in ones(m.adj[last] & allowed & !in_path) {
            if m.adj[v] & inner != 0 {
                continue;
            }
            if m.has(v, s) {
                // v closes a cycle of path.len() + 1 vertices; the orientation
                // check keeps one of the two traversals.
                if path.len() >= 3 && path[1] < v && accept(path.len() + 1) {
                    path.push(v);
                    return true;
                }
                continue;
            }
            path.push(v);
            if grow(m, allowed, path, in_path | 1 << v, accept) {
                return true;
            }
            path.pop();
        }
        false
    }

    for s in 0..m.n {
        let allowed = above(s);
        for a in ones(m.adj[s] & allowed) {
            let mut path = vec![s, a];
            if grow(m, allowed, &mut path, 1 << s | 1 << a, accept) {
                return Some(path);
            }
        }
    }
    None
}

pub(crate) fn find_odd_hole(g: &Graph) -> Option<Witness> {
    let m = MaskGraph::new(g);
    search_holes(&m, &|len| len >= 5 && len % 2 == 1).map(|c| Witness::cycle(WitnessKind::OddHole, ids_of(g, &c)))
}

pub(crate) fn find_long_antihole(g: &Graph) -> Option<Witness> {
    let m = MaskGraph::new(g).complement();
    search_holes(&m, &|len| len >= 5).map(|c| Witness::cycle(WitnessKind::Antihole, ids_of(g, &c)))
}

pub(crate) fn is_weakly_triangulated(g: &Graph) -> bool {
    let m = MaskGraph::new(g);
    search_holes(&m, &|len| len >= 5).is_none() && search_holes(&m.complement(), &|len| len >= 5).is_none()
}

/// Positions strictly greater than `i`.
pub(crate) fn above(i: usize) -> u64 {
    if i >= 63 {
        0
    } else {
        !0u64 << (i + 1)
    }
}

fn triangles(m: &MaskGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..m.n {
        for b in ones(m.adj[a] & above(a)) {
            for c in ones(m.adj[a] & m.adj[b] & above(b)) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Grows vertex-disjoint paths `pairs[k].0 -> pairs[k].1` one at a time so
/// that the whole structure stays induced: every new vertex sees only the
/// current end of its path (and, when it completes the path, the target).
pub(crate) fn link_induced(m: &MaskGraph, pairs: &[(usize, usize)], used: u64, paths: &mut Vec<Vec<usize>>) -> bool {
    fn extend(m: &MaskGraph, pairs: &[(usize, usize)], used: u64, paths: &mut Vec<Vec<usize>>) -> bool {
        let k = paths.len() - 1;
        let (_, t) = pairs[k];
        let e = *paths[k].last().unwrap();
        if m.has(e, t) {
            paths[k].push(t);
            if link_induced(m, pairs, used, paths) {
                return true;
            }
            paths[k].pop();
            return false;
        }
        let ok = 1u64 << e | 1u64 << t;
        for v in ones(m.adj[e] & !used) {
            if m.adj[v] & used & !ok != 0 {
                continue;
            }
            paths[k].push(v);
            if extend(m, pairs, used | 1 << v, paths) {
                return true;
            }
            paths[k].pop();
        }
        false
    }

    if paths.len() == pairs.len() {
        return true;
    }
    paths.push(vec![pairs[paths.len()].0]);
    if extend(m, pairs, used, paths) {
        return true;
    }
    paths.pop();
    false
}

pub(crate) fn find_prism(g: &Graph) -> Option<Witness> {
    let m = MaskGraph::new(g);
    let tris = triangles(&m);
    for (i, t1) in tris.iter().enumerate() {
        let m1 = t1.iter().fold(0u64, |acc, &v| acc | 1 << v);
        for t2 in &tris[i + 1..] {
            let m2 = t2.iter().fold(0u64, |acc, &v| acc | 1 << v);
            if m1 & m2 != 0 {
                continue;
            }
            'perm: for perm in PERMS {
                let b = [t2[perm[0]], t2[perm[1]], t2[perm[2]]];
                for k in 0..3 {
                    for l in 0..3 {
                        if k != l && m.has(t1[k], b[l]) {
                            continue 'perm;
                        }
                    }
                }
                let pairs = [(t1[0], b[0]), (t1[1], b[1]), (t1[2], b[2])];
                let mut paths = Vec::new();
                if link_induced(&m, &pairs, m1 | m2, &mut paths) {
                    let paths: Vec<Path> = paths.iter().map(|p| Path::new(ids_of(g, p))).collect();
                    let vertices = paths.iter().flat_map(|p| p.vertices().iter().copied()).collect();
                    return Some(Witness { kind: WitnessKind::Prism, vertices, paths });
                }
            }
        }
    }
    None
}
