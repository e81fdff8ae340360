//! Exact clique number and chromatic number.

use fixedbitset::FixedBitSet;

use super::MaskGraph;
#[cfg(test)]
use super::ones;
use crate::graph::{Graph, VertexSet};

/// A maximum clique, by branch and bound with a greedy-colouring bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    let mut best = Vec::new();
    let mut cur = Vec::new();
    expand(g, &mut cur, cand, &mut best);
    best.into_iter().map(|i| g.id(i)).collect()
}

/// Greedy colour classes over `cand` in ascending order; returns vertices
/// sorted by class together with the class number, which bounds the clique
/// size among that vertex and its predecessors.
fn color_sort(g: &Graph, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut left = cand.clone();
    let mut color = 0;
    while !left.is_clear() {
        color += 1;
        let mut avail = left.clone();
        while let Some(v) = avail.ones().next() {
            order.push(v);
            bounds.push(color);
            left.set(v, false);
            avail.set(v, false);
            avail.difference_with(g.row(v));
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, cur: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, &cand);
    for k in (0..order.len()).rev() {
        if cur.len() + bounds[k] <= best.len() {
            return;
        }
        let v = order[k];
        cur.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        if next.is_clear() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
        } else {
            expand(g, cur, next, best);
        }
        cur.pop();
        cand.set(v, false);
    }
}

/// Smallest k admitting a proper k-colouring, by backtracking. Does not use
/// the clique number, so it stays an independent check of it.
pub(crate) fn chromatic_number(g: &Graph) -> usize {
    let m = MaskGraph::new(g);
    if m.n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..m.n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(m.adj[v].count_ones()), v));
    (1..=m.n).find(|&k| colorable(&m, &order, k)).unwrap_or(m.n)
}

fn colorable(m: &MaskGraph, order: &[usize], k: usize) -> bool {
    // classes[c] = vertices currently holding colour c
    fn go(m: &MaskGraph, order: &[usize], pos: usize, classes: &mut Vec<u64>, k: usize) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let used = classes.len();
        for c in 0..used {
            if m.adj[v] & classes[c] == 0 {
                classes[c] |= 1 << v;
                if go(m, order, pos + 1, classes, k) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        if used < k {
            classes.push(1 << v);
            if go(m, order, pos + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let mut classes = Vec::with_capacity(k);
    go(m, order, 0, &mut classes, k)
}

/// Brute-force clique number for cross-checks.
#[cfg(test)]
pub(crate) fn clique_number_brute(g: &Graph) -> usize {
    let m = MaskGraph::new(g);
    let mut best = 0;
    for s in 0u64..(1u64 << m.n) {
        let k = s.count_ones() as usize;
        if k > best && ones(s).all(|v| m.adj[v] & s == s & !(1 << v)) {
            best = k;
        }
    }
    best
}
