//! Experiment orchestration: configuration, epsilon-ladder scans, the
//! property suite, slope fitting, and result persistence.

mod config;
mod lemmas;
mod report;
mod scan;
mod slope;

pub use config::{AmplitudeSpec, KernelsSpec, Overrides, RunConfig};
pub use lemmas::{run_lemma_suite, LemmaCheck, LemmaReport};
pub use report::{atomic_write, config_digest, scan_csv, to_json_pretty, Manifest};
pub use scan::{
    run_residual_scan, run_single_member, run_validity_scan, snapshot_columns, ScanResult, ScanRow,
    ScanSlopes,
};
pub use slope::{fit_slope, SlopeFit};
