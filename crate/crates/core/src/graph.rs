//! Immutable simple undirected graphs with stable vertex identifiers.
//!
//! Vertices are kept in ascending id order and adjacency is stored as one
//! dense bitset row per vertex, indexed by *position* in that order. Every
//! public operation speaks [`VertexId`]; the position-level helpers are
//! crate-internal and used by the algorithms and oracles.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Stable identifier of a vertex. Internally 0-based; `Display` and serde
/// use the external 1-based numbering.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn external(self) -> u64 {
        self.0 as u64 + 1
    }

    /// From a 1-based id; `None` for 0 or out of range.
    pub fn from_external(v: u64) -> Option<Self> {
        v.checked_sub(1).and_then(|i| u32::try_from(i).ok()).map(VertexId)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.external())
    }
}

impl Serialize for VertexId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.external())
    }
}

/// Accepts a number or, for JSON object keys, a decimal string.
impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = VertexId;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a 1-based vertex id")
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<VertexId, E> {
                VertexId::from_external(v).ok_or_else(|| E::custom(format!("vertex ids are 1-based, got {v}")))
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<VertexId, E> {
                u64::try_from(v).map_err(|_| E::custom(format!("negative vertex id {v}"))).and_then(|v| self.visit_u64(v))
            }

            fn visit_str<E: serde::de::Error>(self, s: &str) -> Result<VertexId, E> {
                s.parse::<u64>().map_err(|_| E::custom(format!("bad vertex id {s:?}"))).and_then(|v| self.visit_u64(v))
            }
        }
        d.deserialize_any(Visitor)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Sorted set of vertex ids.
pub type VertexSet = BTreeSet<VertexId>;

/// Builds a [`VertexSet`] from raw ids.
pub fn vset<I: IntoIterator<Item = u32>>(ids: I) -> VertexSet {
    ids.into_iter().map(VertexId).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(VertexId, VertexId),
    #[error("cannot contract a vertex with itself ({0})")]
    SameVertex(VertexId),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("not a path: {0}")]
    InvalidPath(String),
}

/// A path given by its vertex sequence. Its length is the number of edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    /// Wraps a vertex sequence without checking it against any graph.
    pub fn new(vertices: Vec<VertexId>) -> Self {
        Path { vertices }
    }

    /// Builds a path and checks it is a path of `g` (consecutive vertices
    /// adjacent, no repeated vertex).
    pub fn checked(g: &Graph, vertices: Vec<VertexId>) -> Result<Self, GraphError> {
        let p = Path { vertices };
        p.validate(g)?;
        Ok(p)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    /// Interior vertices (all but the two ends).
    pub fn interior(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.vertices.clone();
        v.reverse();
        Path { vertices: v }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::InvalidPath("empty vertex list".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            g.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
            if !seen.insert(v) {
                return Err(GraphError::InvalidPath(format!("vertex {v} repeated")));
            }
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::InvalidPath(format!("{} and {} not adjacent", w[0], w[1])));
            }
        }
        Ok(())
    }

    /// True iff this is a path of `g` with no edge between non-consecutive
    /// vertices.
    pub fn is_chordless(&self, g: &Graph) -> bool {
        if self.validate(g).is_err() {
            return false;
        }
        let vs = &self.vertices;
        for i in 0..vs.len() {
            for j in i + 2..vs.len() {
                if g.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, Debug)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<FixedBitSet>,
    labels: Vec<Option<String>>,
}

impl PartialEq for Graph {
    /// Two graphs are equal when they have the same vertex ids and edges;
    /// labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Edgeless graph on ids `0..n`.
    pub fn empty(n: usize) -> Self {
        let ids = (0..n as u32).map(VertexId).collect();
        Graph {
            ids,
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels: vec![None; n],
        }
    }

    /// Graph on ids `0..n` with the given edges. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let ids: Vec<u32> = (0..n as u32).collect();
        Self::from_parts(&ids, edges)
    }

    /// Graph with arbitrary (unique) vertex ids and edges between them.
    pub fn from_parts(ids: &[u32], edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut sorted: Vec<VertexId> = ids.iter().copied().map(VertexId).collect();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        let n = sorted.len();
        let mut g = Graph {
            ids: sorted,
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels: vec![None; n],
        };
        for &(u, v) in edges {
            let (u, v) = (VertexId(u), VertexId(v));
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let i = g.index_of(u).ok_or(GraphError::UnknownVertex(u))?;
            let j = g.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    /// Attaches human-readable names, in ascending-id order.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let mut labels: Vec<Option<String>> = labels.into_iter().map(|s| Some(s.into())).collect();
        labels.resize(self.n(), None);
        self.labels = labels;
        self
    }

    pub(crate) fn from_rows(ids: Vec<VertexId>, adj: Vec<FixedBitSet>, labels: Vec<Option<String>>) -> Self {
        debug_assert_eq!(ids.len(), adj.len());
        Graph { ids, adj, labels }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.ids.iter().copied().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.ids.last().copied()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.index_of(v).and_then(|i| self.labels[i].as_deref())
    }

    /// Looks a vertex up by its label.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels
            .iter()
            .position(|l| l.as_deref() == Some(label))
            .map(|i| self.ids[i])
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n() {
            for j in self.adj[i].ones().filter(|&j| j > i) {
                out.push((self.ids[i], self.ids[j]));
            }
        }
        out
    }

    /// False when either endpoint is unknown.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i].contains(j),
            _ => false,
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        Ok(self.adj[self.idx(v)?].count_ones(..))
    }

    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        let i = self.idx(v)?;
        Ok(self.adj[i].ones().map(|j| self.ids[j]).collect())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|i| {
                let mut row = self.adj[i].clone();
                row.toggle_range(..);
                row.set(i, false);
                row
            })
            .collect();
        Graph::from_rows(self.ids.clone(), adj, self.labels.clone())
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        let idx = self.indices(s)?;
        Ok(self.induced_by_positions(&idx))
    }

    /// Contracts the non-adjacent pair `{x, y}` into a fresh vertex
    /// `max id + 1` adjacent to `N(x) ∪ N(y)`.
    pub fn contract(&self, x: VertexId, y: VertexId) -> Result<(Graph, VertexId), GraphError> {
        let i = self.idx(x)?;
        let j = self.idx(y)?;
        if i == j {
            return Err(GraphError::SameVertex(x));
        }
        if self.adj[i].contains(j) {
            return Err(GraphError::AdjacentPair(x, y));
        }
        let fresh = VertexId(self.max_id().map_or(0, |m| m.0 + 1));
        let keep: Vec<usize> = (0..self.n()).filter(|&k| k != i && k != j).collect();
        let m = keep.len() + 1;
        let mut adj = Vec::with_capacity(m);
        let mut merged = FixedBitSet::with_capacity(m);
        for (new_k, &k) in keep.iter().enumerate() {
            let mut row = FixedBitSet::with_capacity(m);
            for (new_l, &l) in keep.iter().enumerate() {
                if self.adj[k].contains(l) {
                    row.insert(new_l);
                }
            }
            if self.adj[k].contains(i) || self.adj[k].contains(j) {
                row.insert(m - 1);
                merged.insert(new_k);
            }
            adj.push(row);
        }
        adj.push(merged);
        let mut ids: Vec<VertexId> = keep.iter().map(|&k| self.ids[k]).collect();
        ids.push(fresh);
        let mut labels: Vec<Option<String>> = keep.iter().map(|&k| self.labels[k].clone()).collect();
        labels.push(None);
        Ok((Graph::from_rows(ids, adj, labels), fresh))
    }

    /// The empty set and singletons are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool, GraphError> {
        let bits = self.bits_of(s)?;
        Ok(self.is_clique_bits(&bits))
    }

    /// True iff the complement restricted to `t` is connected.
    pub fn is_co_connected(&self, t: &VertexSet) -> Result<bool, GraphError> {
        if t.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let bits = self.bits_of(t)?;
        Ok(self.is_co_connected_bits(&bits))
    }

    /// Vertices outside `t` adjacent to every vertex of `t`.
    pub fn complete_set(&self, t: &VertexSet) -> Result<VertexSet, GraphError> {
        if t.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let bits = self.bits_of(t)?;
        Ok(self.set_of(&self.complete_bits(&bits)))
    }

    pub fn is_simplicial(&self, v: VertexId) -> Result<bool, GraphError> {
        let i = self.idx(v)?;
        Ok(self.is_clique_bits(&self.adj[i]))
    }

    /// Every connected component is complete.
    pub fn is_disjoint_union_of_cliques(&self) -> bool {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        for i in 0..n {
            if seen.contains(i) {
                continue;
            }
            // In a union of cliques the component of i is its closed neighborhood.
            let mut comp = self.adj[i].clone();
            comp.insert(i);
            for j in comp.ones() {
                let mut closed = self.adj[j].clone();
                closed.insert(j);
                if closed != comp {
                    return false;
                }
            }
            seen.union_with(&comp);
        }
        true
    }

    pub fn is_clique_graph(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|r| r.count_ones(..) + 1 == n)
    }

    /// A shortest `u`-`v` path avoiding `forbidden`. Ties are broken by
    /// expanding lower ids first, so the result is deterministic. Shortest
    /// paths are always chordless.
    pub fn shortest_path(&self, u: VertexId, v: VertexId, forbidden: &VertexSet) -> Result<Option<Path>, GraphError> {
        let s = self.idx(u)?;
        let t = self.idx(v)?;
        let mut allowed = FixedBitSet::with_capacity(self.n());
        allowed.insert_range(..);
        for &f in forbidden {
            allowed.set(self.idx(f)?, false);
        }
        allowed.insert(s);
        allowed.insert(t);
        Ok(self.bfs_path(s, t, &allowed).map(|p| self.path_of(&p)))
    }

    // ---- position-level helpers ----

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn idx(&self, v: VertexId) -> Result<usize, GraphError> {
        self.index_of(v).ok_or(GraphError::UnknownVertex(v))
    }

    pub(crate) fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub(crate) fn row(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub(crate) fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub(crate) fn indices(&self, s: &VertexSet) -> Result<Vec<usize>, GraphError> {
        s.iter().map(|&v| self.idx(v)).collect()
    }

    pub(crate) fn bits_of(&self, s: &VertexSet) -> Result<FixedBitSet, GraphError> {
        let mut b = FixedBitSet::with_capacity(self.n());
        for &v in s {
            b.insert(self.idx(v)?);
        }
        Ok(b)
    }

    pub(crate) fn set_of(&self, bits: &FixedBitSet) -> VertexSet {
        bits.ones().map(|i| self.ids[i]).collect()
    }

    pub(crate) fn path_of(&self, p: &[usize]) -> Path {
        Path::new(p.iter().map(|&i| self.ids[i]).collect())
    }

    pub(crate) fn is_clique_bits(&self, s: &FixedBitSet) -> bool {
        let size = s.count_ones(..);
        s.ones().all(|i| self.adj[i].intersection_count(s) + 1 == size)
    }

    pub(crate) fn is_co_connected_bits(&self, t: &FixedBitSet) -> bool {
        let Some(start) = t.ones().next() else {
            return false;
        };
        let mut seen = FixedBitSet::with_capacity(self.n());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in t.ones() {
                if j != i && !seen.contains(j) && !self.adj[i].contains(j) {
                    seen.insert(j);
                    stack.push(j);
                }
            }
        }
        seen.count_ones(..) == t.count_ones(..)
    }

    pub(crate) fn complete_bits(&self, t: &FixedBitSet) -> FixedBitSet {
        let mut c = FixedBitSet::with_capacity(self.n());
        c.insert_range(..);
        for i in t.ones() {
            c.intersect_with(&self.adj[i]);
        }
        c.difference_with(t);
        c
    }

    pub(crate) fn induced_by_positions(&self, idx: &[usize]) -> Graph {
        let m = idx.len();
        let mut adj = Vec::with_capacity(m);
        for &k in idx {
            let mut row = FixedBitSet::with_capacity(m);
            for (new_l, &l) in idx.iter().enumerate() {
                if self.adj[k].contains(l) {
                    row.insert(new_l);
                }
            }
            adj.push(row);
        }
        let ids = idx.iter().map(|&k| self.ids[k]).collect();
        let labels = idx.iter().map(|&k| self.labels[k].clone()).collect();
        Graph::from_rows(ids, adj, labels)
    }

    /// BFS from `s` to `t` through `allowed` (which should contain both).
    /// Neighbors are discovered in ascending position order.
    pub(crate) fn bfs_path(&self, s: usize, t: usize, allowed: &FixedBitSet) -> Option<Vec<usize>> {
        if s == t {
            return Some(vec![s]);
        }
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut unseen = allowed.clone();
        unseen.set(s, false);
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let mut fresh = self.adj[i].clone();
            fresh.intersect_with(&unseen);
            for j in fresh.ones() {
                parent[j] = i;
                if j == t {
                    let mut path = vec![t];
                    let mut k = t;
                    while k != s {
                        k = parent[k];
                        path.push(k);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(j);
            }
            unseen.difference_with(&fresh);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut edges = vec![];
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn c6bar() -> Graph {
        cycle(6).complement()
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(cycle(4).neighbors(VertexId(0)).unwrap(), vset([1, 3]));
        assert!(Graph::empty(1).neighbors(VertexId(0)).unwrap().is_empty());
        let g = c6bar();
        for &v in g.vertices() {
            assert_eq!(g.neighbors(v).unwrap().len(), 3);
        }
        assert_eq!(cycle(4).neighbors(VertexId(9)), Err(GraphError::UnknownVertex(VertexId(9))));
    }

    #[test]
    fn complement_examples() {
        let c5 = cycle(5);
        let cc = c5.complement();
        // the complement of 0-1-2-3-4 is the cycle 0-2-4-1-3
        let relabeled = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(cc, relabeled);
        assert_eq!(complete(4).complement(), Graph::empty(4));
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c6 = cycle(6);
        let p = c6.induced_subgraph(&vset([0, 1, 2])).unwrap();
        assert_eq!(p, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(c6.induced_subgraph(&c6.vertex_set()).unwrap(), c6);
        let g = c6bar();
        let tri = g.induced_subgraph(&vset([0, 2, 4])).unwrap();
        assert!(tri.is_clique_graph());
        assert_eq!(tri.n(), 3);
        assert!(c6.induced_subgraph(&vset([7])).is_err());
    }

    #[test]
    fn contract_examples() {
        let (g, m) = cycle(4).contract(VertexId(0), VertexId(2)).unwrap();
        assert_eq!(m, VertexId(4));
        assert_eq!(g.vertices(), &[VertexId(1), VertexId(3), VertexId(4)]);
        assert_eq!(g.edges(), vec![(VertexId(1), VertexId(4)), (VertexId(3), VertexId(4))]);

        let (k1, m) = Graph::empty(2).contract(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(m, VertexId(2));
        assert_eq!(k1.edge_count(), 0);

        // C6 with 1 and 5 merged: m sees 0 (from both), 2 (from 1) and 4 (from 5).
        let (g, m) = cycle(6).contract(VertexId(1), VertexId(5)).unwrap();
        assert_eq!(g.n(), 5);
        let expected = Graph::from_parts(&[0, 2, 3, 4, 6], &[(2, 3), (3, 4), (0, 6), (2, 6), (4, 6)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.neighbors(m).unwrap(), vset([0, 2, 4]));

        assert_eq!(
            cycle(4).contract(VertexId(0), VertexId(1)),
            Err(GraphError::AdjacentPair(VertexId(0), VertexId(1)))
        );
        assert!(cycle(4).contract(VertexId(0), VertexId(0)).is_err());
        assert!(cycle(4).contract(VertexId(0), VertexId(8)).is_err());
    }

    #[test]
    fn clique_examples() {
        assert!(complete(4).is_clique(&vset([0, 1, 2, 3])).unwrap());
        assert!(!cycle(4).is_clique(&vset([0, 2])).unwrap());
        assert!(cycle(5).is_clique(&VertexSet::new()).unwrap());
        assert!(cycle(5).is_clique(&vset([3])).unwrap());
    }

    #[test]
    fn co_connected_examples() {
        assert!(!complete(3).is_co_connected(&vset([0, 1, 2])).unwrap());
        assert!(Graph::empty(3).is_co_connected(&vset([0, 1, 2])).unwrap());
        assert!(cycle(6).is_co_connected(&vset([0])).unwrap());
        assert_eq!(cycle(6).is_co_connected(&VertexSet::new()), Err(GraphError::EmptySet));
    }

    #[test]
    fn complete_set_examples() {
        assert_eq!(cycle(6).complete_set(&vset([0])).unwrap(), vset([1, 5]));
        assert_eq!(complete(4).complete_set(&vset([0])).unwrap(), vset([1, 2, 3]));
        assert!(cycle(6).complete_set(&vset([0, 3])).unwrap().is_empty());
    }

    #[test]
    fn simplicial_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p3.is_simplicial(VertexId(0)).unwrap());
        assert!(!p3.is_simplicial(VertexId(1)).unwrap());
        let k5 = complete(5);
        assert!(k5.vertices().iter().all(|&v| k5.is_simplicial(v).unwrap()));
        let c5 = cycle(5);
        assert!(c5.vertices().iter().all(|&v| !c5.is_simplicial(v).unwrap()));
    }

    #[test]
    fn disjoint_union_examples() {
        let k3k1 = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3k1.is_disjoint_union_of_cliques());
        assert!(!Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap().is_disjoint_union_of_cliques());
        assert!(Graph::empty(0).is_disjoint_union_of_cliques());
    }

    #[test]
    fn shortest_path_examples() {
        let c6 = cycle(6);
        let p = c6.shortest_path(VertexId(0), VertexId(3), &VertexSet::new()).unwrap().unwrap();
        assert_eq!(p.vertices(), &[VertexId(0), VertexId(1), VertexId(2), VertexId(3)]);
        let p = c6.shortest_path(VertexId(1), VertexId(5), &vset([0])).unwrap().unwrap();
        assert_eq!(p.vertices(), vset([1, 2, 3, 4, 5]).into_iter().collect::<Vec<_>>().as_slice());
        assert_eq!(p.len(), 4);
        assert!(Graph::empty(2).shortest_path(VertexId(0), VertexId(1), &VertexSet::new()).unwrap().is_none());
    }

    #[test]
    fn path_helpers() {
        let c6 = cycle(6);
        let p = Path::checked(&c6, vec![VertexId(1), VertexId(0), VertexId(5)]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.interior(), &[VertexId(0)]);
        assert!(p.is_chordless(&c6));
        assert!(Path::checked(&c6, vec![VertexId(1), VertexId(3)]).is_err());
        let c4 = cycle(4);
        let q = Path::new(vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3)]);
        assert!(!q.is_chordless(&c4));
    }
}
