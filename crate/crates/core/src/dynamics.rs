//! Threshold neurons and network dynamics.
//!
//! A neuron outputs `+1` when its local field is `>= 0` and `-1` otherwise.
//! The zero-field tie maps to `+1`; this is load-bearing for the memory
//! counts (it is why a zero-row-sum matrix keeps all-`+` but not all-`-`).

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circulant::{BipolarState, CirculantWeightMatrix, Spin};
use crate::error::{Error, Result};

#[inline]
pub fn threshold(field: i64) -> Spin {
    if field >= 0 {
        Spin::Plus
    } else {
        Spin::Minus
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpdateMode {
    Synchronous,
    /// One sweep updates neurons in `order`, each seeing earlier updates.
    AsynchronousSweep(Vec<usize>),
}

impl UpdateMode {
    /// Sweep in identity order `0, 1, ..., n-1`.
    pub fn identity_sweep(n: usize) -> Self {
        UpdateMode::AsynchronousSweep((0..n).collect())
    }

    /// Sweep in an order shuffled by a seeded generator.
    pub fn random_sweep(n: usize, seed: u64) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        UpdateMode::AsynchronousSweep(order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TrajectoryOutcome {
    FixedPoint {
        #[serde(serialize_with = "crate::serialize_state")]
        state: BipolarState,
        steps: usize,
    },
    Cycle {
        period: usize,
        #[serde(serialize_with = "crate::serialize_state")]
        first_state: BipolarState,
        steps_to_enter: usize,
    },
    MaxItersExceeded {
        #[serde(serialize_with = "crate::serialize_state")]
        last_state: BipolarState,
    },
}

pub fn sync_update(w: &CirculantWeightMatrix, s: &BipolarState) -> Result<BipolarState> {
    let field = w.local_field(s)?;
    let spins: Vec<Spin> = field.0.iter().map(|&f| threshold(f)).collect();
    BipolarState::from_spins(&spins)
}

pub fn async_sweep(
    w: &CirculantWeightMatrix,
    s: &BipolarState,
    order: &[usize],
) -> Result<BipolarState> {
    w.check_size(s.n())?;
    check_permutation(order, s.n())?;
    let n = s.n();
    let mut spins: Vec<i64> = s.spins().iter().map(|x| x.value()).collect();
    for &i in order {
        let field: i64 = (0..n).map(|j| w.entry(i, j) * spins[j]).sum();
        spins[i] = threshold(field).value();
    }
    let spins: Vec<Spin> = spins
        .into_iter()
        .map(|v| if v > 0 { Spin::Plus } else { Spin::Minus })
        .collect();
    BipolarState::from_spins(&spins)
}

pub fn is_fixed_point(w: &CirculantWeightMatrix, s: &BipolarState) -> Result<bool> {
    let field = w.local_field(s)?;
    Ok(field
        .0
        .iter()
        .enumerate()
        .all(|(i, &f)| threshold(f) == s.spin(i)))
}

pub fn update(w: &CirculantWeightMatrix, s: &BipolarState, mode: &UpdateMode) -> Result<BipolarState> {
    match mode {
        UpdateMode::Synchronous => sync_update(w, s),
        UpdateMode::AsynchronousSweep(order) => async_sweep(w, s, order),
    }
}

/// Iterates `mode` from `start` until a state repeats or `max_iters` updates
/// have been applied.
pub fn converge(
    w: &CirculantWeightMatrix,
    start: &BipolarState,
    mode: &UpdateMode,
    max_iters: usize,
) -> Result<TrajectoryOutcome> {
    w.check_size(start.n())?;
    if max_iters == 0 {
        return Err(Error::ZeroIterations);
    }
    if let UpdateMode::AsynchronousSweep(order) = mode {
        check_permutation(order, start.n())?;
    }

    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut history = vec![*start];
    seen.insert(start.index(), 0);
    let mut current = *start;
    for _ in 0..max_iters {
        let next = update(w, &current, mode)?;
        if next == current {
            return Ok(TrajectoryOutcome::FixedPoint {
                state: current,
                steps: history.len() - 1,
            });
        }
        if let Some(&at) = seen.get(&next.index()) {
            return Ok(TrajectoryOutcome::Cycle {
                period: history.len() - at,
                first_state: history[at],
                steps_to_enter: at,
            });
        }
        seen.insert(next.index(), history.len());
        history.push(next);
        current = next;
    }
    Ok(TrajectoryOutcome::MaxItersExceeded {
        last_state: current,
    })
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidPermutation { n });
    }
    for &i in order {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidPermutation { n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> CirculantWeightMatrix {
        CirculantWeightMatrix::from_weights(c.to_vec()).unwrap()
    }

    fn st(s: &str) -> BipolarState {
        s.parse().unwrap()
    }

    /// Sequential hand evaluation over the dense matrix.
    fn sweep_oracle(entries: &[Vec<i64>], mut s: Vec<i64>, order: &[usize]) -> Vec<i64> {
        for &i in order {
            let f: i64 = entries[i].iter().zip(&s).map(|(a, b)| a * b).sum();
            s[i] = if f >= 0 { 1 } else { -1 };
        }
        s
    }

    #[test]
    fn threshold_tie_is_plus() {
        assert_eq!(threshold(0), Spin::Plus);
        assert_eq!(threshold(6), Spin::Plus);
        assert_eq!(threshold(-6), Spin::Minus);
    }

    #[test]
    fn sync_update_examples() {
        let class1 = w(&[0, 2, -5, 3]);
        assert_eq!(sync_update(&class1, &st("++--")).unwrap(), st("++--"));
        assert_eq!(sync_update(&class1, &st("----")).unwrap(), st("++++"));
        assert_eq!(sync_update(&class1, &st("+-+-")).unwrap(), st("-+-+"));
    }

    #[test]
    fn async_sweep_examples() {
        let class1 = w(&[0, 2, -5, 3]);
        let order = [0, 1, 2, 3];
        let expected = sweep_oracle(&class1.entries(), vec![-1, -1, -1, -1], &order);
        assert_eq!(expected, vec![1, 1, -1, -1]);
        assert_eq!(async_sweep(&class1, &st("----"), &order).unwrap(), st("++--"));

        for order in [[3, 2, 1, 0], [1, 3, 0, 2]] {
            assert_eq!(async_sweep(&class1, &st("-++-"), &order).unwrap(), st("-++-"));
        }
        assert_eq!(async_sweep(&w(&[0]), &st("-"), &[0]).unwrap(), st("+"));
    }

    #[test]
    fn async_sweep_rejects_bad_orders() {
        let class1 = w(&[0, 2, -5, 3]);
        for bad in [vec![0, 1, 2], vec![0, 1, 1, 2], vec![0, 1, 2, 4]] {
            assert_eq!(
                async_sweep(&class1, &st("++++"), &bad),
                Err(Error::InvalidPermutation { n: 4 })
            );
        }
    }

    #[test]
    fn fixed_point_predicate() {
        assert!(is_fixed_point(&w(&[0, 2, -5, 3]), &st("++--")).unwrap());
        assert!(!is_fixed_point(&w(&[0, 2, -5, 3]), &st("----")).unwrap());
        assert!(is_fixed_point(&w(&[0, 2, -5, 4]), &st("----")).unwrap());
        assert!(is_fixed_point(&w(&[0, 2, -5, 4]), &st("++")).is_err());
    }

    #[test]
    fn converge_examples() {
        let class1 = w(&[0, 2, -5, 3]);
        assert_eq!(
            converge(&class1, &st("++--"), &UpdateMode::Synchronous, 10).unwrap(),
            TrajectoryOutcome::FixedPoint {
                state: st("++--"),
                steps: 0
            }
        );
        assert_eq!(
            converge(&class1, &st("+-+-"), &UpdateMode::Synchronous, 10).unwrap(),
            TrajectoryOutcome::Cycle {
                period: 2,
                first_state: st("+-+-"),
                steps_to_enter: 0
            }
        );
        assert_eq!(
            converge(&class1, &st("----"), &UpdateMode::Synchronous, 10).unwrap(),
            TrajectoryOutcome::FixedPoint {
                state: st("++++"),
                steps: 1
            }
        );
        assert_eq!(
            converge(&class1, &st("++--"), &UpdateMode::Synchronous, 0),
            Err(Error::ZeroIterations)
        );
        assert_eq!(
            converge(&class1, &st("+-+-"), &UpdateMode::Synchronous, 1).unwrap(),
            TrajectoryOutcome::MaxItersExceeded {
                last_state: st("-+-+")
            }
        );
    }

    #[test]
    fn converge_async_reaches_fixed_point() {
        let class1 = w(&[0, 2, -5, 3]);
        let out = converge(&class1, &st("----"), &UpdateMode::identity_sweep(4), 10).unwrap();
        assert_eq!(
            out,
            TrajectoryOutcome::FixedPoint {
                state: st("++--"),
                steps: 1
            }
        );
    }

    #[test]
    fn random_sweep_is_seeded_permutation() {
        let a = UpdateMode::random_sweep(12, 7);
        assert_eq!(a, UpdateMode::random_sweep(12, 7));
        let UpdateMode::AsynchronousSweep(order) = a else {
            unreachable!()
        };
        assert!(check_permutation(&order, 12).is_ok());
    }
}
