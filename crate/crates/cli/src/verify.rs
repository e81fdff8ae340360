//! Independent re-checking of a [`ResultEnvelope`] against its input graph.
//!
//! Certificates (pairs, colourings, witnesses) are checked directly;
//! diagnostics and oracle answers are checked by recomputation.

use std::collections::BTreeMap;

use evenpair::coloring::{color_disjoint_cliques, verify_coloring, Coloring, ContractionTrace};
use evenpair::oracles::{max_clique, Oracle};
use evenpair::{EvenPairResult, Graph, VertexId};

use crate::envelope::{input_digest, Outcome, ResultEnvelope, SCHEMA_VERSION};
use crate::exec::{self, OracleArgs};

/// Every problem found; empty means the envelope checks out.
pub fn verify_envelope(g: &Graph, env: &ResultEnvelope, oracle: &Oracle) -> Vec<String> {
    let mut problems = Vec::new();
    if env.schema_version != SCHEMA_VERSION {
        problems.push(format!("schema_version {} (expected {SCHEMA_VERSION})", env.schema_version));
    }
    if env.input_digest != input_digest(g) {
        problems.push("input digest does not match the graph".into());
    }
    match &env.outcome {
        Outcome::Pair { result, .. } => check_pair(g, result, oracle, &mut problems),
        Outcome::Coloring { coloring, trace, omega, chromatic_number, .. } => {
            check_coloring(g, coloring, trace, &mut problems);
            let w = max_clique(g).len();
            if *omega != w {
                problems.push(format!("omega recorded as {omega}, actual {w}"));
            }
            if coloring.num_colors != w {
                problems.push(format!("{} colours used, omega is {w}", coloring.num_colors));
            }
            if let Some(k) = chromatic_number {
                match oracle.chromatic_number_exact(g) {
                    Ok(actual) if actual == *k => {}
                    Ok(actual) => problems.push(format!("chromatic number recorded as {k}, actual {actual}")),
                    Err(e) => problems.push(format!("cannot check chromatic number: {e}")),
                }
            }
        }
        Outcome::Witness { in_class, witness } => match (in_class, witness) {
            (false, Some(w)) => {
                if let Err(e) = w.validate(g) {
                    problems.push(format!("witness invalid: {e}"));
                }
            }
            (true, None) => match oracle.class_a_witness(g) {
                Ok(None) => {}
                Ok(Some(w)) => problems.push(format!("graph has a {:?} witness", w.kind)),
                Err(e) => problems.push(format!("cannot check membership: {e}")),
            },
            _ => problems.push("in_class must be true exactly when no witness is given".into()),
        },
        Outcome::Diagnostic { .. } | Outcome::Oracle { .. } => {
            match recompute(g, &env.command, &env.outcome, oracle) {
                Ok(outcome) if outcome == env.outcome => {}
                Ok(_) => problems.push("recomputation gives a different outcome".into()),
                Err(e) => problems.push(e),
            }
        }
        Outcome::Verification { .. } => problems.push("verification outcomes are not themselves verifiable".into()),
    }
    problems
}

fn recompute(g: &Graph, command: &str, outcome: &Outcome, oracle: &Oracle) -> Result<Outcome, String> {
    Ok(match command {
        "classify" => exec::classify(g, oracle).outcome,
        "evenpair" => exec::evenpair(g, false, oracle).outcome,
        "color" => exec::color(g, false, oracle).outcome,
        "oracle" => {
            let Outcome::Oracle { op, args, .. } = outcome else {
                return Err("oracle diagnostics cannot be recomputed".into());
            };
            exec::oracle(g, op, &OracleArgs::parse(args)?, oracle)?.outcome
        }
        other => return Err(format!("unknown command {other:?}")),
    })
}

fn check_pair(g: &Graph, r: &EvenPairResult, oracle: &Oracle, problems: &mut Vec<String>) {
    let (a, b) = r.pair;
    for v in [a, b] {
        if !g.contains(v) {
            problems.push(format!("vertex {v} is not in the graph"));
            return;
        }
    }
    if let Err(e) = r.audit(g) {
        problems.push(format!("structural audit: {e}"));
    }
    // Within oracle range the claim itself is checked as well.
    if let Ok(special) = oracle.is_special_even_pair(g, a, b) {
        if !special {
            problems.push(format!("{{{a}, {b}}} is not a special even pair"));
        }
    }
}

fn check_coloring(g: &Graph, c: &Coloring, trace: &ContractionTrace, problems: &mut Vec<String>) {
    match verify_coloring(g, c) {
        Ok(true) => {}
        Ok(false) => problems.push("colouring is not proper".into()),
        Err(e) => problems.push(e.to_string()),
    }
    if let Some(v) = c.colors.keys().find(|v| !g.contains(**v)) {
        problems.push(format!("colour given to unknown vertex {v}"));
    }
    if c.num_colors != Coloring::new(c.colors.clone()).num_colors {
        problems.push("num_colors does not match the colour map".into());
    }
    let graphs = match trace.replay(g) {
        Ok(gs) => gs,
        Err(e) => {
            problems.push(format!("trace: {e}"));
            return;
        }
    };
    // Push colours forward through the trace; the terminal graph must come
    // out properly coloured with merged pairs sharing a colour.
    let mut colors: BTreeMap<VertexId, usize> = c.colors.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        let (x, y) = step.merged;
        match (colors.remove(&x), colors.remove(&y)) {
            (Some(cx), Some(cy)) if cx == cy => {
                colors.insert(step.fresh, cx);
            }
            _ => {
                problems.push(format!("step {i}: merged vertices {x} and {y} differ in colour"));
                return;
            }
        }
    }
    let terminal = graphs.last().unwrap();
    let pushed = Coloring::new(colors);
    if !matches!(verify_coloring(terminal, &pushed), Ok(true)) {
        problems.push("colouring does not descend to the terminal graph".into());
    }
    if let Ok(direct) = color_disjoint_cliques(terminal) {
        if direct.num_colors > c.num_colors {
            problems.push("terminal graph needs more colours than were used".into());
        }
    }
}
