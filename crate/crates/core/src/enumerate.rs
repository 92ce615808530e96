//! Exhaustive fixed-point search over `{+1, -1}^n`.
//!
//! Three routes produce the same set:
//!
//! * [`enumerate_naive`] evaluates the full local field of every state
//!   (`O(n^2)` per state). It is the reference.
//! * [`enumerate_gray`] walks the binary-reflected Gray code, so consecutive
//!   states differ in one spin. Flipping spin `j` shifts the field by
//!   `-2 * s_j * column_j(W)`, and a running count of sign-violating neurons
//!   makes the fixed-point test constant time. Total cost `O(n * 2^n)`.
//! * [`enumerate_partitioned`] splits the Gray index range into contiguous
//!   blocks, scans each block from a freshly seeded field vector and merges
//!   the sorted results. The output does not depend on the block count or
//!   on scheduling.
//!
//! Every [`CHECKPOINT_INTERVAL`] steps the incrementally maintained field is
//! compared to a fresh evaluation; any divergence is an error.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::circulant::{BipolarState, CirculantWeightMatrix};
use crate::dynamics::is_fixed_point;
use crate::error::{Error, Result};
use crate::symmetry::rotate_bits;

pub const NAIVE_CAP: usize = 22;
pub const GRAY_CAP: usize = 28;
/// Ceiling even with `force_large`; `2^n` must fit the 64-bit counters.
pub const ABSOLUTE_CAP: usize = 62;
pub const CHECKPOINT_INTERVAL: u64 = 1 << 16;

/// Sorted, duplicate-free packed indices of fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointSet {
    n: usize,
    states: Vec<u64>,
}

impl FixedPointSet {
    /// Sorts and dedups `indices`.
    pub fn from_indices(n: usize, mut indices: Vec<u64>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { n, states: indices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn indices(&self) -> &[u64] {
        &self.states
    }

    pub fn contains_index(&self, index: u64) -> bool {
        self.states.binary_search(&index).is_ok()
    }

    pub fn contains(&self, s: &BipolarState) -> bool {
        s.n() == self.n && self.contains_index(s.index())
    }

    pub fn iter(&self) -> impl Iterator<Item = BipolarState> + '_ {
        self.states
            .iter()
            .map(move |&i| BipolarState::from_index(self.n, i).expect("valid size"))
    }

    /// First member whose one-step rotation is missing, if any.
    pub fn rotation_closure_violation(&self) -> Option<u64> {
        self.states
            .iter()
            .copied()
            .find(|&s| !self.contains_index(rotate_bits(s, self.n, 1)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Naive,
    GrayCode,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationStats {
    pub method: Method,
    pub states_examined: u64,
    pub fixed_found: u64,
    /// Scheduling detail; excluded from serialized reports.
    #[serde(skip)]
    pub partitions: usize,
    #[serde(skip)]
    pub checkpoints_verified: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

// wall_time is measurement noise, not part of the result
impl PartialEq for EnumerationStats {
    fn eq(&self, other: &Self) -> bool {
        self.method == other.method
            && self.states_examined == other.states_examined
            && self.fixed_found == other.fixed_found
            && self.partitions == other.partitions
            && self.checkpoints_verified == other.checkpoints_verified
    }
}

impl Eq for EnumerationStats {}

/// Size caps and parallelism for one enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub partitions: usize,
    /// Lifts the naive/Gray caps up to [`ABSOLUTE_CAP`].
    pub force_large: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            partitions: 1,
            force_large: false,
        }
    }
}

fn check_cap(n: usize, cap: usize, method: &'static str, force_large: bool) -> Result<()> {
    let cap = if force_large { ABSOLUTE_CAP } else { cap };
    if n > cap {
        return Err(Error::SizeTooLarge { n, cap, method });
    }
    Ok(())
}

fn finish(
    w: &CirculantWeightMatrix,
    found: Vec<u64>,
    method: Method,
    partitions: usize,
    checkpoints_verified: u64,
    started: Instant,
) -> Result<(FixedPointSet, EnumerationStats)> {
    let n = w.n();
    let set = FixedPointSet::from_indices(n, found);
    if let Some(state) = set.rotation_closure_violation() {
        return Err(Error::RotationClosureViolated { state });
    }
    let stats = EnumerationStats {
        method,
        states_examined: 1u64 << n,
        fixed_found: set.len() as u64,
        partitions,
        checkpoints_verified,
        wall_time: started.elapsed(),
    };
    Ok((set, stats))
}

/// Reference enumerator: full field evaluation of every state.
pub fn enumerate_naive(w: &CirculantWeightMatrix) -> Result<(FixedPointSet, EnumerationStats)> {
    enumerate_naive_with(w, false)
}

pub fn enumerate_naive_with(
    w: &CirculantWeightMatrix,
    force_large: bool,
) -> Result<(FixedPointSet, EnumerationStats)> {
    let n = w.n();
    check_cap(n, NAIVE_CAP, "naive", force_large)?;
    let started = Instant::now();
    let mut found = Vec::new();
    for index in 0..1u64 << n {
        let s = BipolarState::from_index(n, index)?;
        if is_fixed_point(w, &s)? {
            found.push(index);
        }
    }
    finish(w, found, Method::Naive, 1, 0, started)
}

pub fn enumerate_gray(w: &CirculantWeightMatrix) -> Result<(FixedPointSet, EnumerationStats)> {
    enumerate_with(w, EnumerationConfig::default())
}

pub fn enumerate_partitioned(
    w: &CirculantWeightMatrix,
    partitions: usize,
) -> Result<(FixedPointSet, EnumerationStats)> {
    enumerate_with(
        w,
        EnumerationConfig {
            partitions,
            force_large: false,
        },
    )
}

/// Gray-code enumeration, split into `config.partitions` blocks.
pub fn enumerate_with(
    w: &CirculantWeightMatrix,
    config: EnumerationConfig,
) -> Result<(FixedPointSet, EnumerationStats)> {
    let n = w.n();
    if config.partitions == 0 {
        return Err(Error::ZeroPartitions);
    }
    check_cap(n, GRAY_CAP, "gray-code", config.force_large)?;
    let started = Instant::now();

    let total = 1u64 << n;
    let blocks = block_bounds(total, config.partitions);
    let scanner = GrayScanner::new(w);
    let results: Vec<Result<BlockResult>> = blocks
        .par_iter()
        .map(|&(lo, hi)| scanner.scan(lo, hi))
        .collect();

    let mut found = Vec::new();
    let mut checkpoints = 0;
    for r in results {
        let r = r?;
        found.extend(r.found);
        checkpoints += r.checkpoints;
    }
    finish(w, found, Method::GrayCode, config.partitions, checkpoints, started)
}

/// Contiguous `[lo, hi)` blocks covering `0..total`; empty blocks are dropped.
fn block_bounds(total: u64, partitions: usize) -> Vec<(u64, u64)> {
    let p = partitions as u128;
    let t = total as u128;
    (0..p)
        .map(|k| ((k * t / p) as u64, ((k + 1) * t / p) as u64))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

#[inline]
fn gray(t: u64) -> u64 {
    t ^ (t >> 1)
}

struct BlockResult {
    found: Vec<u64>,
    checkpoints: u64,
}

struct GrayScanner<'a> {
    w: &'a CirculantWeightMatrix,
    n: usize,
    /// `columns[j][i] = 2 * W[i][j]`, the field change when spin `j` goes from -1 to +1.
    columns: Vec<Vec<i64>>,
}

impl<'a> GrayScanner<'a> {
    fn new(w: &'a CirculantWeightMatrix) -> Self {
        let n = w.n();
        let columns = (0..n)
            .map(|j| (0..n).map(|i| 2 * w.entry(i, j)).collect())
            .collect();
        Self { w, n, columns }
    }

    fn scan(&self, lo: u64, hi: u64) -> Result<BlockResult> {
        let n = self.n;
        let mut bits = gray(lo);
        // negative[i] holds whether spin i is -1
        let mut negative: Vec<bool> = (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect();
        let mut field = vec![0i64; n];
        self.w.field_of_packed(bits, &mut field);
        let mut violations = (0..n)
            .filter(|&i| (field[i] < 0) != negative[i])
            .count();

        let mut fresh = vec![0i64; n];
        let mut found = Vec::new();
        let mut checkpoints = 0;
        if violations == 0 {
            found.push(bits);
        }

        for t in lo + 1..hi {
            let b = t.trailing_zeros() as usize;
            let j = n - 1 - b;
            bits ^= 1 << b;
            // old spin -1 -> field += col; old spin +1 -> field -= col
            let was_negative = negative[j];
            negative[j] = !was_negative;
            let col = &self.columns[j];
            if was_negative {
                for i in 0..n {
                    let before = (field[i] < 0) != negative[i] ^ (i == j);
                    field[i] += col[i];
                    let after = (field[i] < 0) != negative[i];
                    violations = violations + after as usize - before as usize;
                }
            } else {
                for i in 0..n {
                    let before = (field[i] < 0) != negative[i] ^ (i == j);
                    field[i] -= col[i];
                    let after = (field[i] < 0) != negative[i];
                    violations = violations + after as usize - before as usize;
                }
            }
            if violations == 0 {
                found.push(bits);
            }
            if (t - lo).is_multiple_of(CHECKPOINT_INTERVAL) {
                self.w.field_of_packed(bits, &mut fresh);
                if fresh != field {
                    return Err(Error::FieldCheckpointMismatch { state: bits });
                }
                checkpoints += 1;
            }
        }
        Ok(BlockResult { found, checkpoints })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> CirculantWeightMatrix {
        CirculantWeightMatrix::from_weights(c.to_vec()).unwrap()
    }

    fn pats(set: &FixedPointSet) -> Vec<String> {
        set.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn naive_class1_and_class2() {
        let (set, stats) = enumerate_naive(&w(&[0, 2, -5, 3])).unwrap();
        assert_eq!(pats(&set), vec!["++++", "++--", "+--+", "-++-", "--++"]);
        assert_eq!(stats.states_examined, 16);
        assert_eq!(stats.fixed_found, 5);

        let (set, _) = enumerate_naive(&w(&[0, 2, -5, 4])).unwrap();
        assert_eq!(pats(&set), vec!["++++", "++--", "+--+", "-++-", "--++", "----"]);
    }

    #[test]
    fn zero_matrix_keeps_only_all_plus() {
        let (set, _) = enumerate_naive(&w(&[0, 0])).unwrap();
        assert_eq!(pats(&set), vec!["++"]);
        let (set, _) = enumerate_gray(&w(&[0])).unwrap();
        assert_eq!(pats(&set), vec!["+"]);
    }

    #[test]
    fn gray_counts() {
        assert_eq!(enumerate_gray(&w(&[0, -2, 3, 3, -2])).unwrap().0.len(), 7);
        assert_eq!(
            enumerate_gray(&w(&[0, -2, -1, 4, 5, 1, -2, -4])).unwrap().0.len(),
            16
        );
    }

    #[test]
    fn partitions_agree() {
        let m = w(&[0, -4, -1, -2, 3, 11, 2, -1, -3, -4]);
        let (one, _) = enumerate_partitioned(&m, 1).unwrap();
        for k in [2, 3, 7, 8, 1000, 5000] {
            assert_eq!(enumerate_partitioned(&m, k).unwrap().0, one, "k={k}");
        }
        assert_eq!(enumerate_partitioned(&m, 0), Err(Error::ZeroPartitions));
    }

    #[test]
    fn caps() {
        let big = CirculantWeightMatrix::from_weights(vec![0; 23]).unwrap();
        assert!(matches!(
            enumerate_naive(&big),
            Err(Error::SizeTooLarge { n: 23, cap: 22, .. })
        ));
        let huge = CirculantWeightMatrix::from_weights(vec![0; 29]).unwrap();
        assert!(matches!(
            enumerate_gray(&huge),
            Err(Error::SizeTooLarge { n: 29, cap: 28, .. })
        ));
    }

    #[test]
    fn block_bounds_cover_range() {
        assert_eq!(block_bounds(16, 3), vec![(0, 5), (5, 10), (10, 16)]);
        assert_eq!(block_bounds(2, 8), vec![(0, 1), (1, 2)]);
        assert_eq!(block_bounds(8, 1), vec![(0, 8)]);
    }

    #[test]
    fn checkpoints_run_on_long_scans() {
        let m = w(&[0, 3, -1, 4, -1, -5, 9, -2, 6, -5, 3, 5, -8, 9, -7, 9, 3, -2]);
        let (set, stats) = enumerate_partitioned(&m, 2).unwrap();
        assert!(stats.checkpoints_verified >= 2);
        assert_eq!(set, enumerate_naive(&m).unwrap().0);
    }
}
