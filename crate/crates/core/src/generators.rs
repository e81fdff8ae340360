//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a [`GenSpec`] reproduces the same graph on every
//! platform. Edges are sampled pair by pair in ascending `(u, v)` order.
//! Rejection samplers draw all attempts from one stream and stop after
//! `max_tries`; they refuse sizes beyond the detector guard.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::oracles::{Oracle, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    NamedInstance,
    Bipartite,
    RejectionClassA,
    WeaklyTriangulatedPrismFree,
    RandomGnp,
}

fn default_max_tries() -> usize {
    1000
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    pub family: Family,
    #[serde(default)]
    pub n: usize,
    #[serde(default)]
    pub p: f64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "default_max_tries")]
    pub max_tries: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown named instance {0:?}")]
    UnknownInstance(String),
    #[error("family NamedInstance needs a name")]
    MissingName,
    #[error("edge probability must lie in [0, 1]")]
    BadProbability,
    #[error("n must be at least 1")]
    EmptyGraph,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Names accepted by [`named_instance`].
pub const CATALOG: &[&str] = &[
    "odd-prism-c6bar",
    "odd-prism-10",
    "even-prism-9",
    "snake-improper",
    "snake-proper",
    "c4",
    "c5",
    "c6",
    "c7bar",
    "p3",
    "k4",
];

fn cycle(n: u32) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n as usize, &edges).expect("valid cycle")
}

/// Triangles `0 1 2` and `3 4 5`; path `i` runs from `i` to `3 + i` with
/// the given length, interior vertices numbered from 6 on.
fn prism(lens: [usize; 3]) -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    let mut next = 6u32;
    for (i, &len) in lens.iter().enumerate() {
        let mut prev = i as u32;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 3 + i as u32));
    }
    Graph::from_edges(next as usize, &edges).expect("valid prism")
}

/// An `(a, b)`-snake with path lengths `l1..l4`, labelled `a`, `a'`, `c`,
/// `c'`, `d`, `d'`, `b'`, `b` on the named vertices. Vertices are numbered
/// along `S1`, `S3`, `S4`, then `S2` from `b'` to `b`.
fn snake(l1: usize, l2: usize, l3: usize, l4: usize) -> Graph {
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let run = |len: usize, first: &str, last: &str, labels: &mut Vec<String>, edges: &mut Vec<(u32, u32)>| {
        let start = labels.len() as u32;
        for k in 0..=len {
            let name = if k == 0 {
                first.to_string()
            } else if k == len {
                last.to_string()
            } else {
                format!("{first}{k}")
            };
            labels.push(name);
            if k > 0 {
                edges.push((start + k as u32 - 1, start + k as u32));
            }
        }
        (start, start + len as u32)
    };
    let (_, a1) = run(l1, "a", "a'", &mut labels, &mut edges);
    let (c, c1) = run(l3, "c", "c'", &mut labels, &mut edges);
    let (d, d1) = run(l4, "d", "d'", &mut labels, &mut edges);
    let (b1, _) = run(l2, "b'", "b", &mut labels, &mut edges);
    if l1 == 0 {
        labels[a1 as usize] = "a".into();
    }
    if l2 == 0 {
        labels[b1 as usize] = "b".into();
    }
    edges.extend([(a1, c), (a1, d), (c, d), (b1, c1), (b1, d1), (c1, d1)]);
    Graph::from_edges(labels.len(), &edges).expect("valid snake").with_labels(labels)
}

pub fn named_instance(name: &str) -> Result<Graph, GenError> {
    let g = match name {
        "odd-prism-c6bar" => cycle(6).complement(),
        // Drawn with 10 vertices: paths of lengths 1, 3 and 3.
        "odd-prism-10" | "odd-prism-8" => prism([1, 3, 3]),
        "even-prism-9" => prism([2, 2, 2]),
        "snake-improper" => snake(0, 0, 4, 4),
        "snake-proper" => snake(1, 2, 5, 2),
        "c4" => cycle(4),
        "c5" => cycle(5),
        "c6" => cycle(6),
        "c7bar" => cycle(7).complement(),
        "p3" => Graph::from_edges(3, &[(0, 1), (1, 2)]).expect("valid path"),
        "k4" => Graph::empty(4).complement(),
        _ => return Err(GenError::UnknownInstance(name.to_string())),
    };
    Ok(g)
}

fn check_p(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::BadProbability)
    }
}

fn sample_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid sample")
}

pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    check_p(p)?;
    Ok(sample_gnp(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

/// Vertices are shuffled and split into halves of sizes `ceil(n/2)` and
/// `floor(n/2)`; each cross pair is an edge with probability `p`.
pub fn random_bipartite(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    check_p(p)?;
    if n == 0 {
        return Err(GenError::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(&mut rng);
    let mut side = vec![false; n];
    for &v in &order[n.div_ceil(2)..] {
        side[v as usize] = true;
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if side[u as usize] != side[v as usize] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("valid sample"))
}

fn rejection(
    n: usize,
    p: f64,
    seed: u64,
    max_tries: usize,
    oracle: &Oracle,
    accept: impl Fn(&Graph) -> Result<bool, OracleError>,
) -> Result<Option<Graph>, GenError> {
    check_p(p)?;
    oracle.limits.guard("generator filter", n, oracle.limits.detector_max_n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let g = sample_gnp(&mut rng, n, p);
        if accept(&g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// First `G(n, p)` sample with no odd hole, no long antihole and no prism.
pub fn random_class_a(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<Option<Graph>, GenError> {
    let oracle = Oracle::from_env();
    rejection(n, p, seed, max_tries, &oracle, |g| Ok(oracle.class_a_witness(g)?.is_none()))
}

/// First `G(n, p)` sample that is weakly triangulated and prism-free.
pub fn random_wt_prism_free(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<Option<Graph>, GenError> {
    let oracle = Oracle::from_env();
    rejection(n, p, seed, max_tries, &oracle, |g| {
        Ok(oracle.is_weakly_triangulated(g)? && oracle.find_prism(g)?.is_none())
    })
}

/// `None` only when a rejection sampler ran out of tries.
pub fn generate(spec: &GenSpec) -> Result<Option<Graph>, GenError> {
    match spec.family {
        Family::NamedInstance => named_instance(spec.name.as_deref().ok_or(GenError::MissingName)?).map(Some),
        Family::Bipartite => random_bipartite(spec.n, spec.p, spec.seed).map(Some),
        Family::RandomGnp => random_gnp(spec.n, spec.p, spec.seed).map(Some),
        Family::RejectionClassA => random_class_a(spec.n, spec.p, spec.seed, spec.max_tries),
        Family::WeaklyTriangulatedPrismFree => random_wt_prism_free(spec.n, spec.p, spec.seed, spec.max_tries),
    }
}
