//! Seeded random propositional programs for fuzzing the oracles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub atoms: usize,
    pub clauses: usize,
    pub max_body: usize,
    /// Probability that a body literal is negated.
    pub neg_prob: f64,
    /// Assign each atom a stratum and only let negation point to lower
    /// strata, so the output is locally stratified.
    pub stratified: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            atoms: 4,
            clauses: 6,
            max_body: 3,
            neg_prob: 0.5,
            stratified: false,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.atoms == 0 {
            return Err(Error::Config("atom count must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.neg_prob) {
            return Err(Error::Config(format!(
                "negation probability {} is outside [0, 1]",
                self.neg_prob
            )));
        }
        Ok(())
    }
}

fn atom_name(i: usize) -> String {
    format!("p{i}")
}

/// Program text in the input grammar, identical for identical configs.
///
/// Atoms are named `p0 .. p{atoms-1}`; the Herbrand base of the parsed
/// program holds the ones that occur, so it has at most `atoms` elements.
pub fn generate(cfg: &GenConfig) -> Result<String> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.atoms;
    let strata: Vec<usize> = (0..n)
        .map(|_| {
            if cfg.stratified {
                rng.random_range(0..n)
            } else {
                0
            }
        })
        .collect();

    let mut lines = Vec::with_capacity(cfg.clauses);
    for _ in 0..cfg.clauses {
        let head = rng.random_range(0..n);
        let len = rng.random_range(0..=cfg.max_body);
        let mut body = Vec::with_capacity(len);
        for _ in 0..len {
            let negated = rng.random_bool(cfg.neg_prob);
            let pool: Vec<usize> = (0..n)
                .filter(|&b| {
                    !cfg.stratified
                        || if negated {
                            strata[b] < strata[head]
                        } else {
                            strata[b] <= strata[head]
                        }
                })
                .collect();
            if pool.is_empty() {
                continue;
            }
            let b = pool[rng.random_range(0..pool.len())];
            body.push(if negated {
                format!("not {}", atom_name(b))
            } else {
                atom_name(b)
            });
        }
        if body.is_empty() {
            lines.push(format!("{}.", atom_name(head)));
        } else {
            lines.push(format!("{} :- {}.", atom_name(head), body.join(", ")));
        }
    }
    let mut text = lines.join("\n");
    text.push('\n');
    Ok(text)
}
