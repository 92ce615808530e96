//! Seeded random search over generator rows.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::circulant::{GeneratorRow, MAX_WEIGHT_MAGNITUDE};
use crate::enumerate::EnumerationConfig;
use crate::error::{Error, Result};
use crate::lab::analyze::{analyze, AnalyzeOptions, CapacityReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub trials: u32,
    pub weight_min: i64,
    pub weight_max: i64,
    pub row_sum_target: Option<i64>,
    pub seed: u64,
    pub max_rejections_per_trial: u32,
    #[serde(skip)]
    pub force_large: bool,
}

impl SearchConfig {
    pub fn new(n: usize, trials: u32, weight_min: i64, weight_max: i64, seed: u64) -> Self {
        Self {
            n,
            trials,
            weight_min,
            weight_max,
            row_sum_target: None,
            seed,
            max_rejections_per_trial: 10_000,
            force_large: false,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSearchConfig(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.weight_min > self.weight_max {
            return bad(format!(
                "weight_min {} exceeds weight_max {}",
                self.weight_min, self.weight_max
            ));
        }
        if self.weight_min.abs() > MAX_WEIGHT_MAGNITUDE || self.weight_max.abs() > MAX_WEIGHT_MAGNITUDE {
            return bad(format!("weights must lie within +/-{MAX_WEIGHT_MAGNITUDE}"));
        }
        if self.max_rejections_per_trial == 0 {
            return bad("max_rejections_per_trial must be at least 1".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistogramBin {
    pub fixed_count: u64,
    pub matrices: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub accepted: u64,
    pub rejected: u64,
    pub histogram: Vec<HistogramBin>,
    pub mean_fixed: Option<f64>,
    pub max_fixed: Option<u64>,
    /// Earliest trial reaching `max_fixed`.
    pub best: Option<CapacityReport>,
    /// One report per accepted trial, labelled `trial-<index>`, without state lists.
    pub trials: Vec<CapacityReport>,
}

/// Draws `c[1..n]` uniformly from the weight interval; `None` if the row-sum
/// target was not hit within the rejection budget.
fn draw_row(rng: &mut ChaCha8Rng, config: &SearchConfig) -> Option<GeneratorRow> {
    for _ in 0..config.max_rejections_per_trial {
        let mut weights = Vec::with_capacity(config.n);
        weights.push(0);
        for _ in 1..config.n {
            weights.push(rng.random_range(config.weight_min..=config.weight_max));
        }
        let sum: i64 = weights.iter().sum();
        if config.row_sum_target.is_none_or(|t| t == sum) {
            return Some(GeneratorRow::new(weights).expect("weights validated"));
        }
    }
    None
}

pub fn random_search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let drawn: Vec<(u32, GeneratorRow)> = (0..config.trials)
        .filter_map(|t| draw_row(&mut rng, config).map(|row| (t, row)))
        .collect();
    if config.trials > 0 && drawn.is_empty() {
        return Err(Error::RowSumUnsatisfiable {
            target: config.row_sum_target.unwrap_or_default(),
            budget: config.max_rejections_per_trial,
        });
    }

    let enumeration = EnumerationConfig {
        partitions: 1,
        force_large: config.force_large,
    };
    let mut reports = drawn
        .par_iter()
        .map(|(t, row)| {
            let options = AnalyzeOptions {
                label: Some(format!("trial-{t}")),
                enumeration,
                ..Default::default()
            };
            analyze(row, &options)
        })
        .collect::<Result<Vec<_>>>()?;

    let best = reports
        .iter()
        .enumerate()
        .max_by_key(|(i, r)| (r.fixed_count, std::cmp::Reverse(*i)))
        .map(|(_, r)| r.clone());
    for r in &mut reports {
        r.fixed_points = None;
    }

    let mut histogram: Vec<HistogramBin> = Vec::new();
    let mut counts: Vec<u64> = reports.iter().map(|r| r.fixed_count).collect();
    counts.sort_unstable();
    for c in counts {
        match histogram.last_mut() {
            Some(bin) if bin.fixed_count == c => bin.matrices += 1,
            _ => histogram.push(HistogramBin {
                fixed_count: c,
                matrices: 1,
            }),
        }
    }

    let accepted = reports.len() as u64;
    let total: u64 = reports.iter().map(|r| r.fixed_count).sum();
    Ok(SearchReport {
        config: config.clone(),
        accepted,
        rejected: u64::from(config.trials) - accepted,
        histogram,
        mean_fixed: (accepted > 0).then(|| total as f64 / accepted as f64),
        max_fixed: best.as_ref().map(|b| b.fixed_count),
        best,
        trials: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_is_empty() {
        let r = random_search(&SearchConfig::new(4, 0, -9, 9, 1)).unwrap();
        assert!(r.histogram.is_empty());
        assert_eq!(r.accepted, 0);
        assert!(r.best.is_none());
    }

    #[test]
    fn row_sum_target_is_respected() {
        let mut cfg = SearchConfig::new(4, 50, -9, 9, 3);
        cfg.row_sum_target = Some(0);
        let r = random_search(&cfg).unwrap();
        assert!(r.accepted > 0);
        assert!(r.trials.iter().all(|t| t.row_sum == 0));
        assert_eq!(r.histogram.iter().map(|b| b.matrices).sum::<u64>(), r.accepted);
    }

    #[test]
    fn same_seed_same_report() {
        let cfg = SearchConfig::new(7, 40, -5, 5, 99);
        let a = random_search(&cfg).unwrap();
        let b = random_search(&cfg).unwrap();
        assert_eq!(a.trials, b.trials);
        assert_eq!(a.histogram, b.histogram);
    }

    #[test]
    fn unsatisfiable_target() {
        let mut cfg = SearchConfig::new(3, 5, 0, 1, 0);
        cfg.row_sum_target = Some(10);
        cfg.max_rejections_per_trial = 20;
        assert_eq!(
            random_search(&cfg).unwrap_err(),
            Error::RowSumUnsatisfiable {
                target: 10,
                budget: 20
            }
        );
    }

    #[test]
    fn invalid_configs() {
        assert!(random_search(&SearchConfig::new(0, 1, 0, 1, 0)).is_err());
        assert!(random_search(&SearchConfig::new(3, 1, 2, 1, 0)).is_err());
        assert!(random_search(&SearchConfig::new(3, 1, 0, MAX_WEIGHT_MAGNITUDE + 1, 0)).is_err());
    }

    #[test]
    fn single_neuron_rows() {
        let r = random_search(&SearchConfig::new(1, 3, -2, 2, 5)).unwrap();
        assert_eq!(r.histogram, vec![HistogramBin { fixed_count: 1, matrices: 3 }]);
    }
}
