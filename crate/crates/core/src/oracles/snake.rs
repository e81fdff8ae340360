//! (a,b)-snakes: two triangles `a'cd` and `b'c'd'` joined by chordless
//! paths `c..c'` and `d..d'`, with tails `a..a'` and `b..b'`.
//!
//! The search enumerates every vertex subset containing `a` and `b`,
//! reads the would-be snake off the induced degrees, and accepts it only if
//! the induced edge set is exactly the required one.

use serde::{Deserialize, Serialize};

use super::detect::compare_edges;
use super::{ids_of, ones, MaskGraph, OracleError};
use crate::graph::{Graph, Path, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snake {
    /// `a .. a'`
    pub s1: Path,
    /// `b .. b'`
    pub s2: Path,
    /// `c .. c'`
    pub s3: Path,
    /// `d .. d'`
    pub s4: Path,
}

impl Snake {
    pub fn a(&self) -> VertexId {
        self.s1.first().unwrap()
    }

    pub fn b(&self) -> VertexId {
        self.s2.first().unwrap()
    }

    pub fn is_proper(&self) -> bool {
        self.s1.len() >= 1 || self.s2.len() >= 1
    }

    pub fn vertex_set(&self) -> VertexSet {
        [&self.s1, &self.s2, &self.s3, &self.s4]
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .collect()
    }

    /// Checks that the four paths are disjoint, `s3` and `s4` are nonempty,
    /// and `g` induces exactly the snake's edges on their union.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let paths = [&self.s1, &self.s2, &self.s3, &self.s4];
        if paths.iter().any(|p| p.is_empty()) {
            return Err("empty path".into());
        }
        if self.s3.len() < 1 || self.s4.len() < 1 {
            return Err("S3 and S4 need length >= 1".into());
        }
        let total: usize = paths.iter().map(|p| p.vertices().len()).sum();
        let set = self.vertex_set();
        if set.len() != total {
            return Err("paths are not disjoint".into());
        }
        let mut expected = Vec::new();
        for p in paths {
            for w in p.vertices().windows(2) {
                expected.push((w[0], w[1]));
            }
        }
        let a1 = self.s1.last().unwrap();
        let b1 = self.s2.last().unwrap();
        let (c, c1) = (self.s3.first().unwrap(), self.s3.last().unwrap());
        let (d, d1) = (self.s4.first().unwrap(), self.s4.last().unwrap());
        expected.extend([(a1, c), (a1, d), (c, d), (b1, c1), (b1, d1), (c1, d1)]);
        compare_edges(g, &set, expected)
    }
}

/// Reads a snake off the subgraph induced by `w`, or `None`.
fn recognize(m: &MaskGraph, w: u64, a: usize, b: usize) -> Option<[Vec<usize>; 4]> {
    let deg = |v: usize| (m.adj[v] & w).count_ones();
    let nbrs = |v: usize| m.adj[v] & w;

    // Tail from an endpoint to its triangle apex; returns (tail, apex's two triangle mates).
    let tail = |x: usize| -> Option<(Vec<usize>, u64)> {
        match deg(x) {
            2 => {
                let pair = nbrs(x);
                let mut it = ones(pair);
                let (c, d) = (it.next()?, it.next()?);
                m.has(c, d).then_some((vec![x], pair))
            }
            1 => {
                let mut path = vec![x];
                let mut prev = x;
                let mut cur = ones(nbrs(x)).next()?;
                loop {
                    path.push(cur);
                    match deg(cur) {
                        2 => {
                            let next = ones(nbrs(cur) & !(1 << prev)).next()?;
                            if path.contains(&next) {
                                return None;
                            }
                            prev = cur;
                            cur = next;
                        }
                        3 => {
                            let pair = nbrs(cur) & !(1 << prev);
                            let mut it = ones(pair);
                            let (c, d) = (it.next()?, it.next()?);
                            return m.has(c, d).then_some((path, pair));
                        }
                        _ => return None,
                    }
                }
            }
            _ => None,
        }
    };

    let (s1, cd) = tail(a)?;
    let (s2, cd2) = tail(b)?;
    let apex_a = *s1.last().unwrap();
    let s1_mask = s1.iter().fold(0u64, |acc, &v| acc | 1 << v);
    let s2_mask = s2.iter().fold(0u64, |acc, &v| acc | 1 << v);
    if s1_mask & s2_mask != 0 || (s1_mask | s2_mask) & (cd | cd2) != 0 || cd & cd2 != 0 {
        return None;
    }

    // From c (resp. d) walk the side path until it reaches {c', d'}.
    let side = |start: usize, mate: usize| -> Option<Vec<usize>> {
        if deg(start) != 3 {
            return None;
        }
        let mut path = vec![start];
        let mut prev = start;
        let mut cur = ones(nbrs(start) & !(1 << apex_a) & !(1 << mate)).next()?;
        loop {
            path.push(cur);
            if cd2 >> cur & 1 == 1 {
                return Some(path);
            }
            if deg(cur) != 2 {
                return None;
            }
            let next = ones(nbrs(cur) & !(1 << prev)).next()?;
            if path.contains(&next) {
                return None;
            }
            prev = cur;
            cur = next;
        }
    };

    let mut it = ones(cd);
    let (c, d) = (it.next()?, it.next()?);
    let s3 = side(c, d)?;
    let s4 = side(d, c)?;
    if s3.last() == s4.last() {
        return None;
    }
    let covered = [&s1, &s2, &s3, &s4].iter().map(|p| p.len()).sum::<usize>();
    if covered != w.count_ones() as usize {
        return None;
    }
    Some([s1, s2, s3, s4])
}

pub(crate) fn find_proper_snake(g: &Graph, a: VertexId, b: VertexId) -> Result<Option<Snake>, OracleError> {
    search(g, a, b, true)
}

/// Any (a,b)-snake, proper or not.
#[cfg(test)]
pub(crate) fn find_any_snake(g: &Graph, a: VertexId, b: VertexId) -> Result<Option<Snake>, OracleError> {
    search(g, a, b, false)
}

fn search(g: &Graph, a: VertexId, b: VertexId, proper_only: bool) -> Result<Option<Snake>, OracleError> {
    let ia = g.idx(a)?;
    let ib = g.idx(b)?;
    if ia == ib {
        return Err(OracleError::Precondition(format!("snake endpoints coincide ({a})")));
    }
    let m = MaskGraph::new(g);
    let rest: Vec<usize> = (0..m.n).filter(|&v| v != ia && v != ib).collect();
    let base = 1u64 << ia | 1u64 << ib;
    // Besides a and b a snake has at least four vertices, a proper one five.
    let min_rest = if proper_only { 5 } else { 4 };
    for bits in 0u64..(1u64 << rest.len()) {
        if bits.count_ones() < min_rest {
            continue;
        }
        let w = ones(bits).fold(base, |acc, k| acc | 1 << rest[k]);
        if m.edges_within(w) != w.count_ones() as usize + 2 {
            continue;
        }
        if let Some([s1, s2, s3, s4]) = recognize(&m, w, ia, ib) {
            let snake = Snake {
                s1: Path::new(ids_of(g, &s1)),
                s2: Path::new(ids_of(g, &s2)),
                s3: Path::new(ids_of(g, &s3)),
                s4: Path::new(ids_of(g, &s4)),
            };
            if (!proper_only || snake.is_proper()) && snake.validate(g).is_ok() {
                return Ok(Some(snake));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_instance;
    use crate::oracles::paths::is_even_pair;

    fn ends(g: &Graph) -> (VertexId, VertexId) {
        (g.vertex_by_label("a").unwrap(), g.vertex_by_label("b").unwrap())
    }

    #[test]
    fn improper_snake_is_found_but_not_proper() {
        let g = named_instance("snake-improper").unwrap();
        let (a, b) = ends(&g);
        let s = find_any_snake(&g, a, b).unwrap().unwrap();
        assert!(!s.is_proper());
        assert_eq!(s.vertex_set().len(), 12);
        s.validate(&g).unwrap();
        assert_eq!(find_proper_snake(&g, a, b).unwrap(), None);
        assert!(is_even_pair(&g, a, b, 1000).unwrap());
    }

    #[test]
    fn proper_snake_is_recovered() {
        let g = named_instance("snake-proper").unwrap();
        let (a, b) = ends(&g);
        let s = find_proper_snake(&g, a, b).unwrap().unwrap();
        assert!(s.is_proper());
        assert_eq!((s.s1.len(), s.s2.len()), (1, 2));
        let mut sides = [s.s3.len(), s.s4.len()];
        sides.sort();
        assert_eq!(sides, [2, 5]);
        assert_eq!(s.a(), a);
        assert_eq!(s.b(), b);
        s.validate(&g).unwrap();
    }

    #[test]
    fn no_snake_in_a_cycle() {
        let g = named_instance("c6").unwrap();
        assert_eq!(find_any_snake(&g, VertexId(0), VertexId(3)).unwrap(), None);
    }

    #[test]
    fn damaged_snake_fails_validation() {
        let g = named_instance("snake-proper").unwrap();
        let (a, b) = ends(&g);
        let s = find_proper_snake(&g, a, b).unwrap().unwrap();
        let extra = g.vertex_by_label("c").unwrap();
        let mut edges = g.edges();
        edges.push((a, extra));
        let raw: Vec<(u32, u32)> = edges.iter().map(|&(u, v)| (u.0, v.0)).collect();
        let h = Graph::from_edges(g.n(), &raw).unwrap();
        assert!(s.validate(&h).is_err());
        assert_eq!(find_proper_snake(&h, a, b).unwrap(), None);
    }
}
