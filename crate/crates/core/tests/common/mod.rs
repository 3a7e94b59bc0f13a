#![allow(dead_code)]

use lpfix::generate::{generate, GenConfig};
use lpfix::interp::PartialInterpretation;
use lpfix::syntax::GroundClause;
use lpfix::{parse_program, AtomId, AtomSet, GroundProgram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn program(cfg: &GenConfig) -> GroundProgram {
    let text = generate(cfg).expect("valid config");
    parse_program(&text)
        .expect("generated text parses")
        .ground()
}

/// A program with a seed-dependent size: `1..=max_atoms` atoms and
/// `0..=max_clauses` clauses.
pub fn sized_program(
    seed: u64,
    max_atoms: usize,
    max_clauses: usize,
    neg_prob: f64,
    stratified: bool,
) -> GroundProgram {
    let mut r = rng(seed ^ 0x5eed_5a1e);
    let cfg = GenConfig {
        seed,
        atoms: r.random_range(1..=max_atoms),
        clauses: r.random_range(0..=max_clauses),
        max_body: 3,
        neg_prob,
        stratified,
    };
    program(&cfg)
}

pub fn random_set(r: &mut impl Rng, n: usize) -> AtomSet {
    (0..n)
        .filter(|_| r.random_bool(0.5))
        .map(AtomId::from)
        .collect()
}

pub fn random_partial(r: &mut impl Rng, n: usize) -> PartialInterpretation {
    let mut pos = AtomSet::new();
    let mut neg = AtomSet::new();
    for a in 0..n {
        match r.random_range(0..3) {
            1 => pos.insert(AtomId::from(a)),
            2 => neg.insert(AtomId::from(a)),
            _ => false,
        };
    }
    PartialInterpretation::new(pos, neg).unwrap()
}

/// Forgets a random part of what `j` decides.
pub fn random_below(r: &mut impl Rng, j: &PartialInterpretation) -> PartialInterpretation {
    let pos = j.pos().iter().filter(|_| r.random_bool(0.5)).collect();
    let neg = j.neg().iter().filter(|_| r.random_bool(0.5)).collect();
    PartialInterpretation::new(pos, neg).unwrap()
}

pub fn random_subset(r: &mut impl Rng, s: &AtomSet) -> AtomSet {
    s.iter().filter(|_| r.random_bool(0.5)).collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = AtomSet> {
    (0..1u64 << n).map(AtomSet::from_mask)
}

fn lit_false(i: &PartialInterpretation, c: &GroundClause) -> bool {
    c.pos.iter().any(|&b| i.neg().contains(b)) || c.neg.iter().any(|&b| i.pos().contains(b))
}

/// Every member has, for each clause, a false body literal or a positive
/// body atom inside `u`.
pub fn is_unfounded(g: &GroundProgram, i: &PartialInterpretation, u: &AtomSet) -> bool {
    u.iter().all(|a| {
        g.clauses_for(a)
            .all(|c| lit_false(i, c) || c.pos.iter().any(|&b| u.contains(b)))
    })
}

/// Consistent with `i`, and every member has a clause whose negated atoms
/// are false in `i` and whose positive atoms are true in `i` or in `s`.
pub fn is_self_founded(g: &GroundProgram, i: &PartialInterpretation, s: &AtomSet) -> bool {
    s.is_disjoint(i.neg())
        && s.iter().all(|a| {
            g.clauses_for(a).any(|c| {
                c.neg.iter().all(|&b| i.neg().contains(b))
                    && c.pos.iter().all(|&b| i.pos().contains(b) || s.contains(b))
            })
        })
}
