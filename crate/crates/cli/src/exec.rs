//! Command bodies, independent of argument parsing. Each returns the outcome
//! to print and the exit code.

use evenpair::coloring::{color_with, ColorError, ColorOptions};
use evenpair::evenpair::find_special_even_pair;
use evenpair::oracles::{max_clique, Oracle, OracleError};
use evenpair::{EvenPairError, Graph, Path, VertexId, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};

use crate::envelope::{Outcome, PairAudit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub struct Executed {
    pub outcome: Outcome,
    pub code: i32,
    /// Human-readable line for standard error.
    pub note: Option<String>,
}

fn ok(outcome: Outcome) -> Executed {
    Executed { outcome, code: EXIT_OK, note: None }
}

fn diagnostic(code: &str, message: String, detail: Option<Value>, exit: i32) -> Executed {
    Executed {
        outcome: Outcome::Diagnostic { code: code.to_string(), message: message.clone(), detail },
        code: exit,
        note: Some(message),
    }
}

fn oracle_bound(e: &OracleError) -> Executed {
    diagnostic("oracle-bound", e.to_string(), None, EXIT_USAGE)
}

pub fn classify(g: &Graph, oracle: &Oracle) -> Executed {
    match oracle.class_a_witness(g) {
        Ok(None) => ok(Outcome::Witness { in_class: true, witness: None }),
        Ok(Some(w)) => Executed {
            note: Some(format!("{:?} witness on {} vertices", w.kind, w.vertices.len())),
            outcome: Outcome::Witness { in_class: false, witness: Some(w) },
            code: EXIT_NEGATIVE,
        },
        Err(e) => oracle_bound(&e),
    }
}

fn evenpair_failure(e: &EvenPairError) -> Executed {
    let (code, detail) = match e {
        EvenPairError::Clique => ("clique", None),
        EvenPairError::NotInClassA { violation, level } => {
            ("not-in-class", Some(json!({ "level": level, "violation": violation })))
        }
        EvenPairError::NoInterestingSet | EvenPairError::Graph(_) => ("internal", None),
    };
    diagnostic(code, e.to_string(), detail, EXIT_NEGATIVE)
}

pub fn evenpair(g: &Graph, audit: bool, oracle: &Oracle) -> Executed {
    let result = match find_special_even_pair(g) {
        Ok(r) => r,
        Err(e) => return evenpair_failure(&e),
    };
    if !audit {
        return ok(Outcome::Pair { result, audit: None });
    }
    let structural = result.audit(g);
    let mut report = PairAudit {
        structural: structural.is_ok(),
        even_pair: None,
        proper_snake: None,
        special: None,
        skipped: None,
    };
    let (a, b) = result.pair;
    match oracle.is_even_pair(g, a, b).and_then(|even| Ok((even, oracle.find_proper_snake(g, a, b)?))) {
        Ok((even, snake)) => {
            report.special = Some(even && snake.is_none());
            report.even_pair = Some(even);
            report.proper_snake = snake;
        }
        Err(e) => report.skipped = Some(e.to_string()),
    }
    let passed = report.structural && report.special != Some(false);
    let note = match (&structural, passed) {
        (Err(msg), _) => Some(format!("structural audit failed: {msg}")),
        (Ok(()), false) => Some("pair failed the special-even-pair oracle".to_string()),
        _ => report.skipped.as_ref().map(|s| format!("oracle audit skipped: {s}")),
    };
    Executed {
        outcome: Outcome::Pair { result, audit: Some(report) },
        code: if passed { EXIT_OK } else { EXIT_NEGATIVE },
        note,
    }
}

pub fn color(g: &Graph, verify_trace: bool, oracle: &Oracle) -> Executed {
    let opts = ColorOptions { verify_trace: verify_trace || g.n() <= 12, oracle: *oracle };
    let (coloring, trace) = match color_with(g, opts) {
        Ok(r) => r,
        Err(ColorError::Oracle(e)) => return oracle_bound(&e),
        Err(ColorError::NotInClassA { step, source }) => {
            let mut d = evenpair_failure(&source);
            if let Outcome::Diagnostic { detail, message, .. } = &mut d.outcome {
                *message = format!("contraction step {step}: {message}");
                d.note = Some(message.clone());
                let mut obj = detail.take().unwrap_or_else(|| json!({}));
                obj["step"] = json!(step);
                *detail = Some(obj);
            }
            return d;
        }
        Err(e) => return diagnostic("coloring-failed", e.to_string(), None, EXIT_NEGATIVE),
    };
    let omega = max_clique(g).len();
    let chromatic_number = oracle.chromatic_number_exact(g).ok();
    let optimal = coloring.num_colors == omega && chromatic_number.is_none_or(|k| k == omega);
    let note = (!optimal).then(|| format!("{} colours used but omega = {omega}", coloring.num_colors));
    Executed {
        code: if optimal { EXIT_OK } else { EXIT_NEGATIVE },
        note,
        outcome: Outcome::Coloring { coloring, trace, omega, chromatic_number, trace_verified: opts.verify_trace },
    }
}

/// Operation names accepted by `oracle --op`.
pub const ORACLE_OPS: &[&str] = &[
    "odd-hole",
    "antihole",
    "prism",
    "class-a",
    "weakly-triangulated",
    "chordless-paths",
    "even-pair",
    "two-pair",
    "proper-snake",
    "special-even-pair",
    "max-clique",
    "chromatic-number",
    "parity-lemma",
    "roussel-rubio",
];

/// Inputs for `oracle`; vertex numbers are 1-based.
#[derive(Debug, Clone, Default)]
pub struct OracleArgs {
    pub vertices: Vec<u64>,
    pub path: Vec<u64>,
    pub set: Vec<u64>,
}

impl OracleArgs {
    pub fn describe(&self) -> Vec<String> {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let mut out: Vec<String> = self.vertices.iter().map(u64::to_string).collect();
        if !self.path.is_empty() {
            out.push(format!("--path={}", join(&self.path)));
        }
        if !self.set.is_empty() {
            out.push(format!("--set={}", join(&self.set)));
        }
        out
    }

    pub fn parse(args: &[String]) -> Result<Self, String> {
        let mut out = OracleArgs::default();
        let list = |s: &str| -> Result<Vec<u64>, String> {
            s.split(',').map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad vertex {t:?}"))).collect()
        };
        for a in args {
            if let Some(rest) = a.strip_prefix("--path=") {
                out.path = list(rest)?;
            } else if let Some(rest) = a.strip_prefix("--set=") {
                out.set = list(rest)?;
            } else {
                out.vertices.push(a.parse().map_err(|_| format!("bad vertex {a:?}"))?);
            }
        }
        Ok(out)
    }
}

fn vertex(g: &Graph, v: u64) -> Result<VertexId, String> {
    VertexId::from_external(v)
        .filter(|&id| g.contains(id))
        .ok_or_else(|| format!("vertex {v} is not in the graph"))
}

fn two(g: &Graph, args: &OracleArgs) -> Result<(VertexId, VertexId), String> {
    match args.vertices.as_slice() {
        [x, y] => Ok((vertex(g, *x)?, vertex(g, *y)?)),
        _ => Err("expected two vertices".into()),
    }
}

fn path_and_set(g: &Graph, args: &OracleArgs) -> Result<(Path, VertexSet), String> {
    if args.path.is_empty() {
        return Err("--path is required".into());
    }
    let p = args.path.iter().map(|&v| vertex(g, v)).collect::<Result<Vec<_>, _>>()?;
    let t = args.set.iter().map(|&v| vertex(g, v)).collect::<Result<VertexSet, _>>()?;
    Ok((Path::new(p), t))
}

fn to_value<T: Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("oracle result serializes")
}

/// `Err` is a usage problem (bad op or arguments).
pub fn oracle(g: &Graph, op: &str, args: &OracleArgs, oracle: &Oracle) -> Result<Executed, String> {
    let none = || args.vertices.is_empty() && args.path.is_empty() && args.set.is_empty();
    let no_args = || if none() { Ok(()) } else { Err(format!("{op} takes no arguments")) };
    let result: Result<Value, OracleError> = match op {
        "odd-hole" => no_args().map(|_| oracle.find_odd_hole(g).map(to_value))?,
        "antihole" => no_args().map(|_| oracle.find_long_antihole(g).map(to_value))?,
        "prism" => no_args().map(|_| oracle.find_prism(g).map(to_value))?,
        "class-a" => no_args().map(|_| oracle.class_a_witness(g).map(to_value))?,
        "weakly-triangulated" => no_args().map(|_| oracle.is_weakly_triangulated(g).map(to_value))?,
        "max-clique" => no_args().map(|_| Ok(to_value(oracle.max_clique(g))))?,
        "chromatic-number" => no_args().map(|_| oracle.chromatic_number_exact(g).map(to_value))?,
        "chordless-paths" => {
            let (x, y) = two(g, args)?;
            oracle.enumerate_chordless_paths(g, x, y, oracle.limits.max_paths).map(to_value)
        }
        "even-pair" | "two-pair" | "special-even-pair" => {
            let (x, y) = two(g, args)?;
            if g.has_edge(x, y) || x == y {
                return Err(format!("{op} needs two distinct non-adjacent vertices"));
            }
            match op {
                "even-pair" => oracle.is_even_pair(g, x, y),
                "two-pair" => oracle.is_two_pair(g, x, y),
                _ => oracle.is_special_even_pair(g, x, y),
            }
            .map(to_value)
        }
        "proper-snake" => {
            let (a, b) = two(g, args)?;
            if a == b {
                return Err("proper-snake needs two distinct vertices".into());
            }
            oracle.find_proper_snake(g, a, b).map(to_value)
        }
        "parity-lemma" | "roussel-rubio" => {
            let (p, t) = path_and_set(g, args)?;
            if !args.vertices.is_empty() {
                return Err(format!("{op} takes only --path and --set"));
            }
            if op == "parity-lemma" {
                oracle.check_parity_lemma(g, &p, &t).map(to_value)
            } else {
                oracle.check_roussel_rubio(g, &p, &t).map(to_value)
            }
        }
        _ => return Err(format!("unknown oracle op {op:?}; expected one of {}", ORACLE_OPS.join(", "))),
    };
    Ok(match result {
        Ok(result) => ok(Outcome::Oracle { op: op.to_string(), args: args.describe(), result }),
        Err(OracleError::Precondition(msg)) => diagnostic("precondition", msg, None, EXIT_USAGE),
        Err(e) => oracle_bound(&e),
    })
}
