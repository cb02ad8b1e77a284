//! Command-line interface: graph emission, formula tables, witnesses,
//! certificates, oracle runs, and verification sweeps.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewrank::io::{graph_from_json, graph_to_dot, graph_to_json, matrix_to_json, SCHEMA_VERSION};
use skewrank::{
    certify, mrs_spec, oracle_search, run_check, CheckId, OracleOutcome, PowerSpec, DEFAULT_SEED,
};

/// Largest order the CLI accepts; keeps exact-arithmetic sweeps immediate.
const MAX_ORDER: usize = 100;

#[derive(Parser)]
#[command(
    name = "skewrank",
    version,
    about = "Minimum skew rank of powers and strict powers of paths",
    long_about = "Computes powers and strict powers of paths, evaluates closed-form minimum \
                  skew rank values, constructs exact rational witness matrices, certifies \
                  lower bounds, and cross-checks everything with a search oracle.\n\n\
                  Randomized searches take their seed from --seed, else the SKEWRANK_SEED \
                  environment variable, else the fixed default 424242, so runs reproduce \
                  byte for byte."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueFormat {
    Json,
}

#[derive(Args)]
struct SpecArgs {
    /// Path order n (vertices 1..=n)
    #[arg(long)]
    n: usize,
    /// Power r
    #[arg(long)]
    r: usize,
    /// Use the strict power (walks of length exactly r)
    #[arg(long)]
    strict: bool,
}

impl SpecArgs {
    fn spec(&self) -> Result<PowerSpec, String> {
        if self.n < 2 || self.n > MAX_ORDER {
            return Err(format!("--n must be in 2..={MAX_ORDER}"));
        }
        if self.r < 1 {
            return Err("--r must be at least 1".into());
        }
        PowerSpec::new(self.n, self.r, self.strict).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the (strict) power of a path and emit it as JSON or DOT
    Power {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alias for `power --strict`
    StrictPower {
        /// Path order n (vertices 1..=n)
        #[arg(long)]
        n: usize,
        /// Power r
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form minimum skew rank value with its case tag
    Mrs {
        #[command(flatten)]
        spec: SpecArgs,
        /// Output format (only json is defined)
        #[arg(long, value_enum, default_value = "json")]
        format: ValueFormat,
    },
    /// CSV table of values, case tags, lower bounds, and witness ranks
    Table {
        /// Largest path order to tabulate
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a witness matrix achieving the closed-form value
    Witness {
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the matrix JSON to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-sided certificate: witness rank, lower bound, and formula value
    Certify {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Search for a low-rank realization of an arbitrary graph
    Oracle {
        /// Graph JSON file: `{"n": 5, "edges": [[1,2], ...]}`
        #[arg(long)]
        graph: PathBuf,
        /// Even target rank
        #[arg(long)]
        target: usize,
        /// Restart budget per search
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        /// Seed (overrides SKEWRANK_SEED and the default)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run named verification sweeps; exits nonzero if any check fails
    Verify {
        /// Check ids to run (default: all). See --list.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Grid ceiling for the sweeps
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// List available checks and exit
        #[arg(long)]
        list: bool,
    },
}

fn seed_from(cli_seed: Option<u64>) -> u64 {
    if let Some(s) = cli_seed {
        return s;
    }
    match std::env::var("SKEWRANK_SEED") {
        Ok(v) => v.parse().unwrap_or(DEFAULT_SEED),
        Err(_) => DEFAULT_SEED,
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn json_escape(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn cmd_power(spec: PowerSpec, format: GraphFormat, out: Option<PathBuf>) -> Result<(), String> {
    let g = spec.graph();
    let text = match format {
        GraphFormat::Json => graph_to_json(&g) + "\n",
        GraphFormat::Dot => graph_to_dot(&g),
    };
    emit(&out, &text)
}

fn cmd_mrs(spec: PowerSpec) -> Result<(), String> {
    let f = mrs_spec(&spec);
    println!(
        "{{\"schema_version\":{SCHEMA_VERSION},\"n\":{},\"r\":{},\"strict\":{},\"value\":{},\"case_tag\":\"{}\"}}",
        spec.n, spec.r, spec.strict, f.value, f.case_tag
    );
    Ok(())
}

fn cmd_table(max_n: usize, out: Option<PathBuf>) -> Result<(), String> {
    if !(2..=MAX_ORDER).contains(&max_n) {
        return Err(format!("--max-n must be in 2..={MAX_ORDER}"));
    }
    let mut csv =
        String::from("schema_version,n,r,strict,value,case_tag,lower_bound,witness_rank\n");
    for n in 2..=max_n {
        for r in 1..=n {
            for strict in [false, true] {
                let cert = certify(&PowerSpec { n, r, strict });
                csv.push_str(&format!(
                    "{SCHEMA_VERSION},{n},{r},{strict},{},{},{},{}\n",
                    cert.formula.value, cert.formula.case_tag, cert.lower_bound, cert.value
                ));
            }
        }
    }
    emit(&out, &csv)
}

fn cmd_witness(spec: PowerSpec, out: Option<PathBuf>) -> Result<(), String> {
    let cert = certify(&spec);
    emit(&out, &(matrix_to_json(&cert.upper_witness) + "\n"))
}

fn cmd_certify(spec: PowerSpec) -> Result<(), String> {
    let cert = certify(&spec);
    let ok = cert.lower_bound == cert.value && cert.value == cert.formula.value;
    println!(
        "{{\"schema_version\":{SCHEMA_VERSION},\"n\":{},\"r\":{},\"strict\":{},\"value\":{},\"lower_bound\":{},\"lower_kind\":\"{}\",\"formula\":{},\"ok\":{}}}",
        spec.n,
        spec.r,
        spec.strict,
        cert.value,
        cert.lower_bound,
        cert.lower_kind,
        cert.formula.value,
        ok
    );
    if ok {
        Ok(())
    } else {
        Err("certificate inconsistency".into())
    }
}

fn cmd_oracle(
    graph: PathBuf,
    target: usize,
    restarts: usize,
    seed: Option<u64>,
) -> Result<(), String> {
    let text = fs::read_to_string(&graph).map_err(|e| format!("{}: {e}", graph.display()))?;
    let g = graph_from_json(&text).map_err(|e| e.to_string())?;
    let seed = seed_from(seed);
    let outcome = oracle_search(&g, target, restarts, seed).map_err(|e| e.to_string())?;
    match outcome {
        OracleOutcome::Found(m) => {
            println!(
                "{{\"schema_version\":{SCHEMA_VERSION},\"target\":{target},\"outcome\":\"found\",\"rank\":{},\"matrix\":{}}}",
                m.rank(),
                matrix_to_json(&m)
            );
        }
        OracleOutcome::Impossible { reason } => {
            println!(
                "{{\"schema_version\":{SCHEMA_VERSION},\"target\":{target},\"outcome\":\"impossible\",\"reason\":{}}}",
                json_escape(&reason)
            );
        }
        OracleOutcome::NotFound { restarts } => {
            println!(
                "{{\"schema_version\":{SCHEMA_VERSION},\"target\":{target},\"outcome\":\"not-found\",\"restarts\":{restarts},\"note\":\"evidence only, not a proof of impossibility\"}}",
            );
        }
    }
    Ok(())
}

fn cmd_verify(checks: Vec<String>, max_n: usize, list: bool) -> Result<bool, String> {
    if list {
        for c in CheckId::all() {
            println!("{:<16} {}", c.id(), c.describe());
        }
        return Ok(true);
    }
    if !(2..=MAX_ORDER).contains(&max_n) {
        return Err(format!("--max-n must be in 2..={MAX_ORDER}"));
    }
    let selected: Vec<CheckId> = if checks.is_empty() {
        CheckId::all().to_vec()
    } else {
        checks
            .iter()
            .map(|s| CheckId::parse(s).ok_or_else(|| format!("unknown check id: {s}")))
            .collect::<Result<_, _>>()?
    };
    let mut all_ok = true;
    for check in selected {
        let report = run_check(check, max_n);
        for l in &report.lines {
            println!(
                "[{}] {}: {} {}",
                check.id(),
                l.instance,
                if l.ok { "ok" } else { "FAIL" },
                l.detail
            );
        }
        let (ok, fail) = report.counts();
        println!("[{}] summary: {} ok, {} failed", check.id(), ok, fail);
        all_ok &= report.passed();
    }
    Ok(all_ok)
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Power { spec, format, out } => cmd_power(spec.spec()?, format, out).map(|_| true),
        Cmd::StrictPower { n, r, format, out } => {
            let args = SpecArgs { n, r, strict: true };
            cmd_power(args.spec()?, format, out).map(|_| true)
        }
        Cmd::Mrs {
            spec,
            format: ValueFormat::Json,
        } => cmd_mrs(spec.spec()?).map(|_| true),
        Cmd::Table { max_n, out } => cmd_table(max_n, out).map(|_| true),
        Cmd::Witness { spec, out } => cmd_witness(spec.spec()?, out).map(|_| true),
        Cmd::Certify { spec } => cmd_certify(spec.spec()?).map(|_| true),
        Cmd::Oracle {
            graph,
            target,
            restarts,
            seed,
        } => cmd_oracle(graph, target, restarts, seed).map(|_| true),
        Cmd::Verify {
            checks,
            max_n,
            list,
        } => cmd_verify(checks, max_n, list),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
