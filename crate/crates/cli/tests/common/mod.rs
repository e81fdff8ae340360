//! Fixed-seed corpus shared by the integration and acceptance tests.

#![allow(dead_code)]

use evenpair::generators::{named_instance, random_class_a, random_wt_prism_free};
use evenpair::oracles::class_a_witness;
use evenpair::Graph;

pub struct Entry {
    pub label: String,
    pub graph: Graph,
}

/// Named class members that are not cliques, then `random_class_a`
/// samples with n in 5..=14 and p cycling through seven values, until
/// `target` entries exist.
pub fn class_a_corpus(target: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for name in ["p3", "c4", "c6", "snake-improper"] {
        let g = named_instance(name).unwrap();
        assert!(class_a_witness(&g).unwrap().is_none(), "{name} should be in the class");
        out.push(Entry { label: name.to_string(), graph: g });
    }
    const PS: [f64; 7] = [0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75];
    let mut i: u64 = 0;
    while out.len() < target {
        let n = 5 + (i % 10) as usize;
        let p = PS[(i / 10 % 7) as usize];
        let seed = 0x5eed_0000 + i;
        i += 1;
        assert!(i < 50_000, "corpus generation is not converging");
        if let Some(g) = random_class_a(n, p, seed, 200).unwrap() {
            if !g.is_clique_graph() {
                out.push(Entry { label: format!("class-a n={n} p={p} seed={seed:#x}"), graph: g });
            }
        }
    }
    out
}

/// Weakly triangulated prism-free non-cliques with n in 5..=14.
pub fn wt_corpus(target: usize) -> Vec<Entry> {
    const PS: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];
    let mut out = Vec::new();
    let mut i: u64 = 0;
    while out.len() < target {
        let n = 5 + (i % 10) as usize;
        let p = PS[(i / 10 % 5) as usize];
        let seed = 0x0077_0000 + i;
        i += 1;
        assert!(i < 50_000, "corpus generation is not converging");
        if let Some(g) = random_wt_prism_free(n, p, seed, 200).unwrap() {
            if !g.is_clique_graph() {
                out.push(Entry { label: format!("wt n={n} p={p} seed={seed:#x}"), graph: g });
            }
        }
    }
    out
}

pub fn write_temp(dir: &std::path::Path, name: &str, body: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("evenpair").chain(args.iter().copied());
    let code = evenpair_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
