use serde::Serialize;

use crate::circulant::{build_circulant, GeneratorRow};
use crate::enumerate::{enumerate_with, EnumerationConfig, EnumerationStats, FixedPointSet};
use crate::error::Result;
use crate::symmetry::{group_orbits, unique_memory_count, SymmetryGroup};
use crate::StateEntry;

/// Explicit state lists are attached up to this size unless forced.
pub const LIST_STATES_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum ClassTag {
    ZeroSum,
    PositiveSum(i64),
    NegativeSum(i64),
}

impl ClassTag {
    pub fn of(row_sum: i64) -> Self {
        match row_sum {
            0 => ClassTag::ZeroSum,
            s if s > 0 => ClassTag::PositiveSum(s),
            s => ClassTag::NegativeSum(s),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassTag::ZeroSum => "ZeroSum",
            ClassTag::PositiveSum(_) => "PositiveSum",
            ClassTag::NegativeSum(_) => "NegativeSum",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacityReport {
    pub label: String,
    pub n: usize,
    pub row: GeneratorRow,
    pub row_sum: i64,
    pub class_tag: ClassTag,
    pub total_states: u64,
    pub fixed_count: u64,
    pub unique_count: u64,
    pub rotation_orbit_count: u64,
    pub fixed_points: Option<Vec<StateEntry>>,
    pub expected_fixed: Option<u64>,
    pub fixed_match: Option<bool>,
    pub expected_unique: Option<u64>,
    pub unique_match: Option<bool>,
    pub stats: EnumerationStats,
    #[serde(skip)]
    pub set: FixedPointSet,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub label: Option<String>,
    pub enumeration: EnumerationConfig,
    /// Attach the state list even above [`LIST_STATES_MAX_N`].
    pub list_states: bool,
    pub expected_fixed: Option<u64>,
    pub expected_unique: Option<u64>,
}

pub fn analyze(row: &GeneratorRow, options: &AnalyzeOptions) -> Result<CapacityReport> {
    let w = build_circulant(row.clone());
    let (set, stats) = enumerate_with(&w, options.enumeration)?;
    Ok(report_from_set(row, set, stats, options))
}

pub(crate) fn report_from_set(
    row: &GeneratorRow,
    set: FixedPointSet,
    stats: EnumerationStats,
    options: &AnalyzeOptions,
) -> CapacityReport {
    let n = row.n();
    let row_sum = row.row_sum();
    let fixed_count = set.len() as u64;
    let unique_count = unique_memory_count(&set) as u64;
    let rotation_orbit_count = group_orbits(&set, SymmetryGroup::RotationOnly).len() as u64;
    let fixed_points = (n <= LIST_STATES_MAX_N || options.list_states)
        .then(|| set.iter().map(StateEntry::from).collect());
    CapacityReport {
        label: options.label.clone().unwrap_or_else(|| format!("{n}x{n}")),
        n,
        row: row.clone(),
        row_sum,
        class_tag: ClassTag::of(row_sum),
        total_states: 1u64 << n,
        fixed_count,
        unique_count,
        rotation_orbit_count,
        fixed_points,
        expected_fixed: options.expected_fixed,
        fixed_match: options.expected_fixed.map(|e| e == fixed_count),
        expected_unique: options.expected_unique,
        unique_match: options.expected_unique.map(|e| e == unique_count),
        stats,
        set,
    }
}
