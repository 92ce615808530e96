//! Rotation and complement symmetry of bipolar states.
//!
//! Circulant dynamics commute with cyclic shifts, so every fixed-point set is
//! a union of rotation orbits. Complement is only a symmetry away from
//! zero-field ties; it is used here for counting, not as a dynamical claim.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::circulant::{mask, BipolarState};
use crate::enumerate::FixedPointSet;
use crate::error::{Error, Result};

/// Right cyclic shift of the packed bits: position `i` moves to `i + k`.
#[inline]
pub(crate) fn rotate_bits(bits: u64, n: usize, k: usize) -> u64 {
    let k = k % n;
    if k == 0 {
        return bits;
    }
    ((bits >> k) | (bits << (n - k))) & mask(n)
}

/// `result[i] = s[(i - k) mod n]`; negative `k` rotates left.
pub fn rotate(s: &BipolarState, k: i64) -> BipolarState {
    let n = s.n();
    let k = k.rem_euclid(n as i64) as usize;
    BipolarState::from_index(n, rotate_bits(s.index(), n, k)).expect("same size")
}

pub fn complement(s: &BipolarState) -> BipolarState {
    BipolarState::from_index(s.n(), !s.index()).expect("same size")
}

pub(crate) fn canonical_bits(bits: u64, n: usize) -> u64 {
    (0..n).map(|k| rotate_bits(bits, n, k)).min().unwrap_or(bits)
}

/// The rotation of `s` with the smallest packed index.
pub fn canonical_rotation(s: &BipolarState) -> BipolarState {
    BipolarState::from_index(s.n(), canonical_bits(s.index(), s.n())).expect("same size")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymmetryGroup {
    RotationOnly,
    ComplementOnly,
    RotationAndComplement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    /// Minimum packed index in the class.
    pub representative: u64,
    /// Sorted packed indices.
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub group: SymmetryGroup,
    pub classes: Vec<OrbitClass>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Groups `states` into classes connected by the chosen generators, with
/// links only between states that are both present.
pub fn group_states(states: &[BipolarState], group: SymmetryGroup) -> Result<OrbitPartition> {
    let Some(first) = states.first() else {
        return Ok(OrbitPartition {
            group,
            classes: Vec::new(),
        });
    };
    let n = first.n();
    if let Some(other) = states.iter().find(|s| s.n() != n) {
        return Err(Error::MixedSizes {
            first: n,
            other: other.n(),
        });
    }

    let mut keys: Vec<u64> = states.iter().map(|s| s.index()).collect();
    keys.sort_unstable();
    keys.dedup();
    let lookup = |bits: u64| keys.binary_search(&bits).ok();

    let mut uf = UnionFind::<usize>::new(keys.len());
    let rotations = matches!(
        group,
        SymmetryGroup::RotationOnly | SymmetryGroup::RotationAndComplement
    );
    let complements = matches!(
        group,
        SymmetryGroup::ComplementOnly | SymmetryGroup::RotationAndComplement
    );
    for (idx, &bits) in keys.iter().enumerate() {
        if rotations {
            if let Some(j) = lookup(rotate_bits(bits, n, 1)) {
                uf.union(idx, j);
            }
        }
        if complements {
            if let Some(j) = lookup(!bits & mask(n)) {
                uf.union(idx, j);
            }
        }
    }

    // keys are sorted, so the first member seen for each root is the minimum
    let mut classes: Vec<OrbitClass> = Vec::new();
    let mut slot_of_root: Vec<Option<usize>> = vec![None; keys.len()];
    for (idx, &bits) in keys.iter().enumerate() {
        let root = uf.find(idx);
        match slot_of_root[root] {
            Some(slot) => classes[slot].members.push(bits),
            None => {
                slot_of_root[root] = Some(classes.len());
                classes.push(OrbitClass {
                    representative: bits,
                    members: vec![bits],
                });
            }
        }
    }
    Ok(OrbitPartition { group, classes })
}

pub fn group_orbits(states: &FixedPointSet, group: SymmetryGroup) -> OrbitPartition {
    let states: Vec<BipolarState> = states.iter().collect();
    group_states(&states, group).expect("a fixed-point set has a single size")
}

/// Memories counted once per complement pair.
pub fn unique_memory_count(states: &FixedPointSet) -> usize {
    let n = states.n();
    let pairs = states
        .indices()
        .iter()
        .filter(|&&bits| {
            let c = !bits & mask(n);
            c > bits && states.contains_index(c)
        })
        .count();
    states.len() - pairs
}
