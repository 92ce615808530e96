//! Experiment layer: published matrices, per-matrix analysis, the
//! reproduction suite, random search and capacity-versus-size datasets.

pub mod analyze;
pub mod catalog;
pub mod figures;
pub mod search;
pub mod suite;

pub use analyze::{analyze, AnalyzeOptions, CapacityReport, ClassTag, LIST_STATES_MAX_N};
pub use catalog::{catalog_entry, paper_catalog, CatalogEntry};
pub use figures::{even_dominance_violations, figure_data, DominanceViolation, FigureData, FigureRow};
pub use search::{random_search, HistogramBin, SearchConfig, SearchReport};
pub use suite::{run_paper_suite, run_suite, CheckStatus, SuiteEntry, SuiteReport, SuiteStatus};
