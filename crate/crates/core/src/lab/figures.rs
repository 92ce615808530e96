//! Capacity-versus-size datasets: all sizes, even sizes, odd sizes.

use serde::Serialize;

use crate::lab::suite::SuiteReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureRow {
    pub n: usize,
    pub fixed_count: u64,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FigureData {
    pub all_sizes: Vec<FigureRow>,
    pub even_sizes: Vec<FigureRow>,
    pub odd_sizes: Vec<FigureRow>,
}

/// One row per size, taken from the first suite entry of that size. The
/// catalog lists the zero-sum class first, so n = 4 and n = 8 use class 1.
pub fn figure_data(suite: &SuiteReport) -> FigureData {
    let mut all_sizes: Vec<FigureRow> = Vec::new();
    for e in &suite.entries {
        if all_sizes.iter().any(|r| r.n == e.report.n) {
            continue;
        }
        all_sizes.push(FigureRow {
            n: e.report.n,
            fixed_count: e.report.fixed_count,
            label: e.label.clone(),
        });
    }
    all_sizes.sort_by_key(|r| r.n);
    let pick = |even: bool| -> Vec<FigureRow> {
        all_sizes
            .iter()
            .filter(|r| (r.n % 2 == 0) == even)
            .cloned()
            .collect()
    };
    FigureData {
        even_sizes: pick(true),
        odd_sizes: pick(false),
        all_sizes,
    }
}

/// An even size whose count falls below a neighbouring odd size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceViolation {
    pub even_n: usize,
    pub even_count: u64,
    pub neighbor_n: usize,
    pub neighbor_count: u64,
}

/// Checks `count(n) >= count(n - 1)` and `count(n) >= count(n + 1)` for every
/// even `n`, skipping neighbours that are absent.
pub fn even_dominance_violations(rows: &[FigureRow]) -> Vec<DominanceViolation> {
    let count_at = |n: usize| rows.iter().find(|r| r.n == n).map(|r| r.fixed_count);
    let mut out = Vec::new();
    for r in rows.iter().filter(|r| r.n % 2 == 0) {
        for neighbor_n in [r.n.wrapping_sub(1), r.n + 1] {
            if let Some(neighbor_count) = count_at(neighbor_n) {
                if r.fixed_count < neighbor_count {
                    out.push(DominanceViolation {
                        even_n: r.n,
                        even_count: r.fixed_count,
                        neighbor_n,
                        neighbor_count,
                    });
                }
            }
        }
    }
    out
}
