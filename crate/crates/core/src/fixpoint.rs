//! Finite Kleene iteration with a retained trace.

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::interp::{knowledge_leq, PartialInterpretation};

/// A partial order on iteration states.
pub trait Poset {
    fn leq(&self, other: &Self) -> bool;
}

impl Poset for AtomSet {
    fn leq(&self, other: &Self) -> bool {
        self.is_subset(other)
    }
}

impl Poset for PartialInterpretation {
    fn leq(&self, other: &Self) -> bool {
        knowledge_leq(self, other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Every stage of an iteration, ending with two equal stages.
///
/// `stages[k]` is the operator applied `k` times to the start value, and
/// `closure_index` is the first `k` with `stages[k] == stages[k + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointTrace<T> {
    pub stages: Vec<T>,
    pub closure_index: usize,
}

impl<T> FixpointTrace<T> {
    pub fn fixpoint(&self) -> &T {
        &self.stages[self.closure_index]
    }

    pub fn into_fixpoint(mut self) -> T {
        self.stages.swap_remove(self.closure_index)
    }
}

/// Applies `op` from `start` until two consecutive stages coincide.
///
/// Each stage must lie above (`Up`) or below (`Down`) its predecessor.
/// Iteration stops with [`Error::NoConvergence`] after `2 * base_len + 2`
/// transitions, which no operator on a base of that size needs when it is
/// monotone in the stated direction.
pub fn iterate_to_fixpoint<T, F>(
    mut op: F,
    start: T,
    direction: Direction,
    base_len: usize,
) -> Result<FixpointTrace<T>>
where
    T: Poset + PartialEq + Clone,
    F: FnMut(&T) -> Result<T>,
{
    let cap = 2 * base_len + 2;
    let mut stages = vec![start];
    for k in 0..cap {
        let cur = &stages[k];
        let next = op(cur)?;
        let ordered = match direction {
            Direction::Up => cur.leq(&next),
            Direction::Down => next.leq(cur),
        };
        if !ordered {
            return Err(Error::NonMonotone { stage: k + 1 });
        }
        let done = &next == cur;
        stages.push(next);
        if done {
            return Ok(FixpointTrace {
                stages,
                closure_index: k,
            });
        }
    }
    Err(Error::NoConvergence { cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::AtomId;

    #[test]
    fn counts_up_to_closure() {
        let t = iterate_to_fixpoint(
            |s: &AtomSet| {
                let mut n = s.clone();
                n.insert(AtomId(s.len().min(2) as u32));
                Ok(n)
            },
            AtomSet::new(),
            Direction::Up,
            3,
        )
        .unwrap();
        assert_eq!(t.closure_index, 3);
        assert_eq!(t.fixpoint(), &AtomSet::full(3));
        assert_eq!(t.stages.len(), 5);
    }

    #[test]
    fn descending_iteration() {
        let t = iterate_to_fixpoint(
            |s: &AtomSet| Ok(s.difference(&AtomSet::full(1))),
            AtomSet::full(2),
            Direction::Down,
            2,
        )
        .unwrap();
        assert_eq!(t.into_fixpoint(), [AtomId(1)].into_iter().collect());
    }

    #[test]
    fn wrong_direction_is_reported() {
        let r = iterate_to_fixpoint(
            |s: &AtomSet| Ok(s.union(&AtomSet::full(1))),
            AtomSet::new(),
            Direction::Down,
            1,
        );
        assert_eq!(r, Err(Error::NonMonotone { stage: 1 }));
    }

    #[test]
    fn oscillation_hits_cap() {
        // never settles; the order relates every pair so only the cap stops it
        #[derive(Clone, PartialEq)]
        struct Flip(bool);
        impl Poset for Flip {
            fn leq(&self, _: &Self) -> bool {
                true
            }
        }
        let r = iterate_to_fixpoint(|f: &Flip| Ok(Flip(!f.0)), Flip(false), Direction::Up, 3);
        assert!(matches!(r, Err(Error::NoConvergence { cap: 8 })));
    }
}
