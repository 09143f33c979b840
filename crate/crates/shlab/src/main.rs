//! Command-line front end: coefficient inspection, filter export, single
//! simulations, epsilon-ladder scans, and the lemma property suite.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use shlab::glsolver::{gl_cubic_coefficient, simulate_gl, GLSystem};
use shlab::harness::{
    atomic_write, run_lemma_suite, run_residual_scan, run_single_member, run_validity_scan,
    scan_csv, snapshot_columns, to_json_pretty, Manifest, RunConfig, ScanResult,
};
use shlab::spectral::{make_cutoff, CutoffKind, TorusGrid};

type CliResult<T> = std::result::Result<T, shlab::Error>;

#[derive(Parser)]
#[command(
    name = "shlab",
    version,
    about = "Nonlocal pattern-formation laboratory"
)]
struct Cli {
    /// Run-configuration file (JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Override the configuration seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for ladder runs (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print kernel Fourier coefficients and the cubic coefficient as JSON.
    Coeffs,
    /// Mode-filter profile utilities.
    Filters {
        #[command(subcommand)]
        action: FilterAction,
    },
    /// Integrate the full equation for one ladder member.
    SimulateSh(MemberArgs),
    /// Integrate the amplitude equation for one ladder member.
    SimulateGl(MemberArgs),
    /// Residual-order scan over the epsilon ladder.
    Residual,
    /// Full validity scan over the epsilon ladder.
    Validate,
    /// Run the filter/cancellation/semigroup property suite.
    Lemmas,
}

#[derive(Subcommand)]
enum FilterAction {
    /// Write profile samples as CSV (kappa ascending).
    Export {
        /// Domain factor; defaults to the first ladder member.
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(Args)]
struct MemberArgs {
    /// Domain factor; defaults to the first ladder member.
    #[arg(long)]
    m: Option<usize>,
}

fn load_config(cli: &Cli) -> CliResult<RunConfig> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| shlab::Error::Config("--config <path> is required".into()))?;
    let mut config = RunConfig::load(path)?;
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    Ok(config)
}

fn write_scan_outputs(
    out: &Path,
    command: &str,
    config: &RunConfig,
    result: &ScanResult,
) -> CliResult<()> {
    atomic_write(&out.join("scan.csv"), scan_csv(result).as_bytes())?;
    atomic_write(
        &out.join("slopes.json"),
        to_json_pretty(&result.slopes)?.as_bytes(),
    )?;
    let manifest = Manifest::for_scan(command, config, result);
    atomic_write(
        &out.join("manifest.json"),
        to_json_pretty(&manifest)?.as_bytes(),
    )?;
    for row in &result.rows {
        println!(
            "eps = {:<7} outcome = {} ({:.1} s)",
            row.eps, row.outcome, row.seconds
        );
    }
    println!("wrote {}", out.join("scan.csv").display());
    Ok(())
}

fn cmd_coeffs(config: &RunConfig) -> CliResult<()> {
    let (q, k) = config.build_kernels()?;
    let qt = q.coefficient_table(3);
    let kt = k.coefficient_table(3);
    let gamma = gl_cubic_coefficient(&q, &k);
    let out = json!({
        "q": { "0": qt.get(0), "1": qt.get(1), "2": qt.get(2), "3": qt.get(3) },
        "k": { "0": kt.get(0), "1": kt.get(1), "2": kt.get(2), "3": kt.get(3) },
        "gamma": gamma,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("serializes")
    );
    Ok(())
}

fn cmd_filters_export(config: &RunConfig, out: &Path, m: Option<usize>) -> CliResult<()> {
    let m = m.unwrap_or(config.m_list[0]);
    let grid = config.fast_grid(m)?;
    let profiles = [
        make_cutoff(CutoffKind::ChiC, grid),
        make_cutoff(CutoffKind::Chi0, grid),
        make_cutoff(CutoffKind::ChiS, grid),
        make_cutoff(CutoffKind::ChiCH, grid),
        make_cutoff(CutoffKind::ChiSH, grid),
    ];
    let mut bins: Vec<usize> = (0..grid.len()).collect();
    bins.sort_by(|&a, &b| grid.wavenumber(a).total_cmp(&grid.wavenumber(b)));
    let mut csv = String::from("kappa,chi_c,chi_0,chi_s,chi_c_h,chi_s_h\n");
    for bin in bins {
        csv.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            grid.wavenumber(bin),
            profiles[0].value(bin),
            profiles[1].value(bin),
            profiles[2].value(bin),
            profiles[3].value(bin),
            profiles[4].value(bin),
        ));
    }
    let path = out.join("filters.csv");
    atomic_write(&path, csv.as_bytes())?;
    println!("wrote {}", path.display());
    Ok(())
}

fn write_snapshots(
    out: &Path,
    prefix: &str,
    header: &str,
    times: &[f64],
    fields: &[shlab::spectral::SpectralField],
    complex_valued: bool,
) -> CliResult<()> {
    for (idx, field) in fields.iter().enumerate() {
        let mut csv = String::from(header);
        for (x, re, im) in snapshot_columns(field) {
            if complex_valued {
                csv.push_str(&format!("{x:.16e},{re:.16e},{im:.16e}\n"));
            } else {
                csv.push_str(&format!("{x:.16e},{re:.16e}\n"));
            }
        }
        atomic_write(&out.join(format!("{prefix}_{idx:04}.csv")), csv.as_bytes())?;
    }
    let index = json!({ "times": times, "snapshots": times.len(), "prefix": prefix });
    atomic_write(
        &out.join(format!("{prefix}_index.json")),
        to_json_pretty(&index)?.as_bytes(),
    )?;
    println!("wrote {} snapshots under {}", times.len(), out.display());
    Ok(())
}

fn cmd_simulate_sh(config: &RunConfig, out: &Path, m: Option<usize>) -> CliResult<()> {
    let m = m.unwrap_or(config.m_list[0]);
    let (_, _, traj) = run_single_member(config, m)?;
    println!("outcome: {:?}", traj.outcome);
    write_snapshots(out, "u", "x,u\n", &traj.times, &traj.fields, false)
}

fn cmd_simulate_gl(config: &RunConfig, out: &Path, m: Option<usize>) -> CliResult<()> {
    let m = m.unwrap_or(config.m_list[0]);
    let fast = config.fast_grid(m)?;
    let slow: TorusGrid = config.slow_grid(fast)?;
    let (q, k) = config.build_kernels()?;
    let gamma = gl_cubic_coefficient(&q, &k);
    let initial = config.initial_amplitude(slow, gamma)?;
    let steps = (config.t_star / config.dt_slow()).ceil().max(1.0) as usize;
    let system = GLSystem {
        gamma,
        grid_x: slow,
        initial,
        t_end: config.t_star,
        dt: config.t_star / steps as f64,
    };
    let stride = (steps / config.snapshots).max(1);
    let traj = simulate_gl(&system, stride)?;
    println!("gamma = {gamma}, outcome: {:?}", traj.outcome);
    write_snapshots(
        out,
        "amplitude",
        "X,re_a,im_a\n",
        &traj.times,
        &traj.fields,
        true,
    )
}

fn cmd_lemmas(config: &RunConfig, out: &Path) -> CliResult<()> {
    let report = run_lemma_suite(config)?;
    for line in report.lines() {
        println!("{line}");
    }
    atomic_write(
        &out.join("lemmas.json"),
        to_json_pretty(&report)?.as_bytes(),
    )?;
    println!("wrote {}", out.join("lemmas.json").display());
    if !report.all_pass {
        std::process::exit(1);
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| shlab::Error::Config(format!("thread pool: {e}")))?;
    }
    let config = load_config(&cli)?;
    match &cli.command {
        Command::Coeffs => cmd_coeffs(&config),
        Command::Filters {
            action: FilterAction::Export { m },
        } => cmd_filters_export(&config, &cli.out, *m),
        Command::SimulateSh(args) => cmd_simulate_sh(&config, &cli.out, args.m),
        Command::SimulateGl(args) => cmd_simulate_gl(&config, &cli.out, args.m),
        Command::Residual => {
            let result = run_residual_scan(&config)?;
            write_scan_outputs(&cli.out, "residual", &config, &result)
        }
        Command::Validate => {
            let result = run_validity_scan(&config)?;
            write_scan_outputs(&cli.out, "validate", &config, &result)
        }
        Command::Lemmas => cmd_lemmas(&config, &cli.out),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(2);
    }
}
