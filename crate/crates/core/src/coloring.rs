//! Optimal colouring by repeated contraction of special even pairs.
//!
//! The graph is contracted until it becomes a disjoint union of cliques, that
//! graph is coloured directly, and colours are pulled back through the trace:
//! both vertices of a merged pair take the colour of the vertex they became.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::evenpair::{find_special_even_pair, EvenPairError};
use crate::graph::{Graph, GraphError, VertexId};
use crate::oracles::{Oracle, OracleError, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionStep {
    pub merged: (VertexId, VertexId),
    pub fresh: VertexId,
    pub graph_size_after: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Terminal {
    DisjointCliques,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionTrace {
    pub steps: Vec<ContractionStep>,
    pub terminal: Terminal,
    pub original_n: usize,
}

impl ContractionTrace {
    /// The graphs `G0 = g, G1, ..., Gk`, checking every recorded step.
    pub fn replay(&self, g: &Graph) -> Result<Vec<Graph>, ColorError> {
        if g.n() != self.original_n {
            return Err(ColorError::Inconsistent(format!("trace is for n = {}, graph has {}", self.original_n, g.n())));
        }
        if self.steps.len() + 1 > self.original_n.max(1) {
            return Err(ColorError::Inconsistent("trace longer than n - 1".into()));
        }
        let mut graphs = vec![g.clone()];
        for (i, step) in self.steps.iter().enumerate() {
            let cur = graphs.last().unwrap();
            let (x, y) = step.merged;
            let (next, fresh) = cur.contract(x, y)?;
            if fresh != step.fresh || next.n() != step.graph_size_after {
                return Err(ColorError::Inconsistent(format!("step {i} does not replay")));
            }
            graphs.push(next);
        }
        if !graphs.last().unwrap().is_disjoint_union_of_cliques() {
            return Err(ColorError::Inconsistent("terminal graph is not a disjoint union of cliques".into()));
        }
        Ok(graphs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: BTreeMap<VertexId, usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn new(colors: BTreeMap<VertexId, usize>) -> Self {
        let num_colors = colors.values().collect::<BTreeSet<_>>().len();
        Coloring { colors, num_colors }
    }

    pub fn color_of(&self, v: VertexId) -> Option<usize> {
        self.colors.get(&v).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is not a disjoint union of cliques")]
    NotDisjointCliques,
    #[error("contraction step {step}: {source}")]
    NotInClassA { step: usize, source: EvenPairError },
    #[error("vertex {0} has no colour")]
    Uncovered(VertexId),
    #[error("colouring is not proper: edge {0}-{1}")]
    Improper(VertexId, VertexId),
    #[error("colour map inconsistent with trace: {0}")]
    Inconsistent(String),
    #[error("intermediate graph after step {step} left the class ({:?})", witness.kind)]
    ClosureViolated { step: usize, witness: Box<Witness> },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per component, colours `0, 1, 2, ...` in ascending id order.
pub fn color_disjoint_cliques(g: &Graph) -> Result<Coloring, ColorError> {
    if !g.is_disjoint_union_of_cliques() {
        return Err(ColorError::NotDisjointCliques);
    }
    let mut colors = BTreeMap::new();
    for &v in g.vertices() {
        // Neighbours form v's clique minus v; lower ones are already coloured.
        let rank = g.neighbors(v)?.range(..v).count();
        colors.insert(v, rank);
    }
    Ok(Coloring::new(colors))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ColorOptions {
    /// Run the class detectors on every intermediate graph.
    pub verify_trace: bool,
    pub oracle: Oracle,
}

impl ColorOptions {
    /// Trace verification on when the input is small enough, as the CLI does
    /// by default.
    pub fn for_graph(g: &Graph) -> Self {
        ColorOptions { verify_trace: g.n() <= 12, oracle: Oracle::from_env() }
    }
}

pub fn color(g: &Graph) -> Result<(Coloring, ContractionTrace), ColorError> {
    color_with(g, ColorOptions::default())
}

pub fn color_with(g: &Graph, opts: ColorOptions) -> Result<(Coloring, ContractionTrace), ColorError> {
    let mut steps = Vec::new();
    let mut cur = g.clone();
    while !cur.is_disjoint_union_of_cliques() {
        let step = steps.len();
        let r = find_special_even_pair(&cur).map_err(|source| ColorError::NotInClassA { step, source })?;
        let (x, y) = r.pair;
        let (next, fresh) = cur.contract(x, y)?;
        steps.push(ContractionStep { merged: (x, y), fresh, graph_size_after: next.n() });
        if opts.verify_trace {
            if let Some(w) = opts.oracle.class_a_witness(&next)? {
                return Err(ColorError::ClosureViolated { step, witness: Box::new(w) });
            }
        }
        cur = next;
    }
    let trace = ContractionTrace { steps, terminal: Terminal::DisjointCliques, original_n: g.n() };
    let coloring = lift_coloring(g, &trace, &color_disjoint_cliques(&cur)?)?;
    Ok((coloring, trace))
}

/// Walks the trace backwards; the result is checked to be a proper
/// colouring of `g`.
pub fn lift_coloring(g: &Graph, trace: &ContractionTrace, terminal: &Coloring) -> Result<Coloring, ColorError> {
    let mut colors = terminal.colors.clone();
    for step in trace.steps.iter().rev() {
        let c = colors
            .remove(&step.fresh)
            .ok_or_else(|| ColorError::Inconsistent(format!("fresh vertex {} is uncoloured", step.fresh)))?;
        let (x, y) = step.merged;
        for v in [x, y] {
            if colors.insert(v, c).is_some() {
                return Err(ColorError::Inconsistent(format!("merged vertex {v} already coloured")));
            }
        }
    }
    if let Some(&v) = colors.keys().find(|v| !g.contains(**v)) {
        return Err(ColorError::Inconsistent(format!("vertex {v} is not in the graph")));
    }
    let out = Coloring::new(colors);
    if !verify_coloring(g, &out)? {
        let (u, v) = g.edges().into_iter().find(|&(u, v)| out.colors[&u] == out.colors[&v]).unwrap();
        return Err(ColorError::Improper(u, v));
    }
    Ok(out)
}

pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColorError> {
    if let Some(&v) = g.vertices().iter().find(|v| !c.colors.contains_key(v)) {
        return Err(ColorError::Uncovered(v));
    }
    Ok(g.edges().iter().all(|(u, v)| c.colors[u] != c.colors[v]))
}
