//! Program fixtures shared by the benchmarks.

use lpfix::generate::{generate, GenConfig};
use lpfix::{parse_program, GroundProgram};

/// A seeded random propositional program.
pub fn random_program(seed: u64, atoms: usize, clauses: usize) -> GroundProgram {
    let cfg = GenConfig {
        seed,
        atoms,
        clauses,
        ..GenConfig::default()
    };
    let text = generate(&cfg).expect("valid generator config");
    parse_program(&text)
        .expect("generated text parses")
        .ground()
}

/// Transitive closure over a chain `e(c0,c1), .., e(c{n-2},c{n-1})`, with
/// a negated reachability test so that grounding produces negation.
pub fn chain_program(n: usize) -> GroundProgram {
    let mut text = String::from(
        "t(X,Y) :- e(X,Y).\nt(X,Z) :- e(X,Y), t(Y,Z).\nu(X,Y) :- e(X,Y), not t(Y,X).\n",
    );
    for i in 0..n.saturating_sub(1) {
        text.push_str(&format!("e(c{i},c{}).\n", i + 1));
    }
    parse_program(&text).expect("fixture parses").ground()
}
