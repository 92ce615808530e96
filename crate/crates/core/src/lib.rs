//! Memory capacity of feedback networks with circulant weight matrices.
//!
//! A network of `n` threshold neurons uses the circulant matrix generated by
//! a first row `c` (with `c[0] = 0`). Its memories are the fixed points of
//! the update `s_i <- sign(sum_j W[i][j] s_j)` with `sign(0) = +1`. This crate
//! finds all of them exhaustively and analyzes their rotation and
//! complement structure.
//!
//! ```
//! use circmem_core::{enumerate_gray, CirculantWeightMatrix};
//!
//! let w = CirculantWeightMatrix::from_weights(vec![0, 2, -5, 3]).unwrap();
//! let (memories, _) = enumerate_gray(&w).unwrap();
//! assert_eq!(memories.len(), 5);
//! ```

pub mod circulant;
pub mod dynamics;
pub mod enumerate;
mod error;
pub mod lab;
pub mod symmetry;

use serde::{Serialize, Serializer};

pub use circulant::{
    build_circulant, local_field, row_sum, BipolarState, CirculantWeightMatrix, GeneratorRow,
    LocalFieldVector, Spin, MAX_STATE_NEURONS, MAX_WEIGHT_MAGNITUDE,
};
pub use dynamics::{
    async_sweep, converge, is_fixed_point, sync_update, threshold, TrajectoryOutcome, UpdateMode,
};
pub use enumerate::{
    enumerate_gray, enumerate_naive, enumerate_naive_with, enumerate_partitioned, enumerate_with,
    EnumerationConfig, EnumerationStats, FixedPointSet, Method, ABSOLUTE_CAP, GRAY_CAP, NAIVE_CAP,
};
pub use error::{Error, Result};
pub use symmetry::{
    canonical_rotation, complement, group_orbits, group_states, rotate, unique_memory_count,
    OrbitClass, OrbitPartition, SymmetryGroup,
};

/// A state as it appears in reports: packed index plus `+`/`-` pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateEntry {
    pub index: u64,
    pub pattern: String,
}

impl From<BipolarState> for StateEntry {
    fn from(s: BipolarState) -> Self {
        Self {
            index: s.index(),
            pattern: s.to_string(),
        }
    }
}

pub(crate) fn serialize_state<S: Serializer>(s: &BipolarState, ser: S) -> Result<S::Ok, S::Error> {
    StateEntry::from(*s).serialize(ser)
}
