//! Reproduction run over the whole catalog.
//!
//! Each entry is enumerated twice (naive reference and Gray-code scan). The
//! two must agree exactly; that is a hard requirement. A count that differs
//! from the stated value is a failure when the expectation is trusted and a
//! documented discrepancy otherwise.

use rayon::prelude::*;
use serde::Serialize;

use crate::circulant::build_circulant;
use crate::enumerate::{enumerate_naive, enumerate_with, EnumerationConfig};
use crate::error::Result;
use crate::lab::analyze::{report_from_set, AnalyzeOptions, CapacityReport};
use crate::lab::catalog::{paper_catalog, CatalogEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Match,
    Mismatch,
    Discrepancy,
    NotStated,
}

impl CheckStatus {
    fn judge(expected: Option<u64>, actual: u64, trusted: bool) -> Self {
        match expected {
            None => CheckStatus::NotStated,
            Some(e) if e == actual => CheckStatus::Match,
            Some(_) if trusted => CheckStatus::Mismatch,
            Some(_) => CheckStatus::Discrepancy,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CheckStatus::Match => "match",
            CheckStatus::Mismatch => "MISMATCH",
            CheckStatus::Discrepancy => "discrepancy",
            CheckStatus::NotStated => "-",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SuiteStatus {
    Pass,
    Discrepancy,
    Fail,
}

impl SuiteStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Discrepancy => "DISCREPANCY",
            SuiteStatus::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub label: String,
    pub source: String,
    pub enumerators_agree: bool,
    pub naive_fixed_count: u64,
    pub fixed_trusted: bool,
    pub fixed_status: CheckStatus,
    pub unique_rule_trusted: bool,
    pub unique_status: CheckStatus,
    pub status: SuiteStatus,
    pub report: CapacityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub status: SuiteStatus,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn entry(&self, label: &str) -> Option<&SuiteEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

pub fn run_paper_suite(partitions: usize) -> Result<SuiteReport> {
    run_suite(&paper_catalog(), partitions)
}

pub fn run_suite(catalog: &[CatalogEntry], partitions: usize) -> Result<SuiteReport> {
    let entries = catalog
        .par_iter()
        .map(|e| run_entry(e, partitions))
        .collect::<Result<Vec<_>>>()?;
    let status = entries
        .iter()
        .map(|e| e.status)
        .max()
        .unwrap_or(SuiteStatus::Pass);
    Ok(SuiteReport { status, entries })
}

fn run_entry(entry: &CatalogEntry, partitions: usize) -> Result<SuiteEntry> {
    let w = build_circulant(entry.row.clone());
    let (naive, _) = enumerate_naive(&w)?;
    let (gray, stats) = enumerate_with(
        &w,
        EnumerationConfig {
            partitions,
            force_large: false,
        },
    )?;
    let enumerators_agree = naive == gray;
    let naive_fixed_count = naive.len() as u64;

    let options = AnalyzeOptions {
        label: Some(entry.label.to_string()),
        expected_fixed: entry.expected_fixed,
        expected_unique: entry.expected_unique,
        ..Default::default()
    };
    let report = report_from_set(&entry.row, gray, stats, &options);

    let fixed_status = CheckStatus::judge(entry.expected_fixed, report.fixed_count, entry.fixed_trusted);
    let unique_status = CheckStatus::judge(
        entry.expected_unique,
        report.unique_count,
        entry.unique_rule_trusted,
    );
    let status = if !enumerators_agree
        || fixed_status == CheckStatus::Mismatch
        || unique_status == CheckStatus::Mismatch
    {
        SuiteStatus::Fail
    } else if fixed_status == CheckStatus::Discrepancy || unique_status == CheckStatus::Discrepancy {
        SuiteStatus::Discrepancy
    } else {
        SuiteStatus::Pass
    };

    Ok(SuiteEntry {
        label: entry.label.to_string(),
        source: entry.source.to_string(),
        enumerators_agree,
        naive_fixed_count,
        fixed_trusted: entry.fixed_trusted,
        fixed_status,
        unique_rule_trusted: entry.unique_rule_trusted,
        unique_status,
        status,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::GeneratorRow;

    #[test]
    fn judge_rules() {
        assert_eq!(CheckStatus::judge(None, 3, true), CheckStatus::NotStated);
        assert_eq!(CheckStatus::judge(Some(3), 3, false), CheckStatus::Match);
        assert_eq!(CheckStatus::judge(Some(4), 3, true), CheckStatus::Mismatch);
        assert_eq!(CheckStatus::judge(Some(4), 3, false), CheckStatus::Discrepancy);
    }

    #[test]
    fn trusted_mismatch_fails_the_suite() {
        let bogus = CatalogEntry {
            label: "4x4-bogus",
            row: GeneratorRow::new(vec![0, 2, -5, 3]).unwrap(),
            expected_fixed: Some(6),
            expected_unique: None,
            fixed_trusted: true,
            unique_rule_trusted: false,
            source: "test",
        };
        let report = run_suite(std::slice::from_ref(&bogus), 1).unwrap();
        assert_eq!(report.status, SuiteStatus::Fail);

        let untrusted = CatalogEntry {
            fixed_trusted: false,
            ..bogus
        };
        let report = run_suite(&[untrusted], 1).unwrap();
        assert_eq!(report.status, SuiteStatus::Discrepancy);
        assert!(report.entries[0].enumerators_agree);
    }

    #[test]
    fn empty_suite_passes() {
        assert_eq!(run_suite(&[], 1).unwrap().status, SuiteStatus::Pass);
    }
}
