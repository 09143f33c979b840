//! Persistence: scan CSV, slopes JSON, run manifest, atomic writes.

use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::Result;

use super::config::RunConfig;
use super::scan::{ScanResult, ScanRow};

/// Write via a temp file in the same directory, then rename.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// SHA-256 of the canonical JSON serialization of the configuration.
pub fn config_digest(config: &RunConfig) -> String {
    let json = serde_json::to_string(config).expect("config serializes");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt).unwrap_or_default()
}

/// One CSV row per ladder member, epsilon descending. Full-precision floats.
pub fn scan_csv(result: &ScanResult) -> String {
    let mut out = String::from(
        "eps,M,gamma,es_res_c1,ec_res_c1,delta_s_c1,delta_c_c1,remainder_c1,phi_psi_c4,\
         err_psi_c4,err_phi_c4,rc_c4,rs_c4,error_ball_c4,outcome\n",
    );
    for row in &result.rows {
        let ScanRow {
            eps,
            m,
            gamma,
            es_res_c1,
            ec_res_c1,
            delta_s_c1,
            delta_c_c1,
            remainder_c1,
            phi_psi_c4,
            err_psi_c4,
            err_phi_c4,
            rc_c4,
            rs_c4,
            error_ball_c4,
            outcome,
            ..
        } = row;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            fmt(*eps),
            m,
            fmt(*gamma),
            fmt(*es_res_c1),
            fmt(*ec_res_c1),
            fmt(*delta_s_c1),
            fmt(*delta_c_c1),
            fmt(*remainder_c1),
            fmt(*phi_psi_c4),
            fmt_opt(*err_psi_c4),
            fmt_opt(*err_phi_c4),
            fmt_opt(*rc_c4),
            fmt_opt(*rs_c4),
            fmt_opt(*error_ball_c4),
            outcome,
        ));
    }
    out
}

#[derive(Serialize)]
pub struct Manifest<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub config_digest: String,
    pub seed: u64,
    /// Wall-clock seconds per ladder member, epsilon descending.
    pub timings: Vec<(f64, f64)>,
    pub outcomes: Vec<String>,
}

impl<'a> Manifest<'a> {
    pub fn for_scan(command: &'a str, config: &RunConfig, result: &ScanResult) -> Self {
        Self {
            tool: "shlab",
            version: env!("CARGO_PKG_VERSION"),
            command,
            config_digest: config_digest(config),
            seed: config.seed,
            timings: result.rows.iter().map(|r| (r.eps, r.seconds)).collect(),
            outcomes: result.rows.iter().map(|r| r.outcome.clone()).collect(),
        }
    }
}

/// Serialize any report as pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}
