use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use negder::analysis::{has_negative_derivations, DerivationOracle};
use negder::counterexample::{build_counterexample, verify_counterexample, CounterexampleParams};
use negder::poly::default_names;
use negder::report::analyze;
use negder::singularity::{infer_weights, is_normal_icis, validate_named_system};
use negder::Rational;
use negder_cli::render::report_text;
use negder_cli::{FileError, SystemFile};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "negder", version)]
#[command(about = "Negative-degree derivations on quasihomogeneous complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis on a system file
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify a member of the six-variable counter-example family
    Counterexample {
        #[arg(long)]
        n: usize,
        /// Constants c7,...,cn (integers or fractions); defaults to 2,3,...
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Option<Vec<String>>,
        /// Write the system file here instead of printing it
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of the graded pieces of the derivation module
    Oracle {
        file: PathBuf,
        /// Inclusive range LO..HI
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        #[arg(long)]
        json: bool,
    },
    /// Positive weights making every equation quasihomogeneous
    InferWeights {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Resource(String),
    Theory(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Resource(_) => 2,
            Failure::Theory(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Resource(m) | Failure::Theory(m) => m,
        }
    }
}

impl From<negder::Error> for Failure {
    fn from(e: negder::Error) -> Self {
        if e.is_theory_violation() {
            Failure::Theory(e.to_string())
        } else if e.is_resource_error() {
            Failure::Resource(format!("{e} (raise it with NEGDER_GB_BUDGET)"))
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file, json } => cmd_analyze(&file, json),
        Command::Counterexample { n, c, out, json } => cmd_counterexample(n, c, out.as_deref(), json),
        Command::Oracle { file, degrees, json } => cmd_oracle(&file, &degrees, json),
        Command::InferWeights { file, json } => cmd_infer_weights(&file, json),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_system(path: &Path) -> Result<SystemFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    SystemFile::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_analyze(path: &Path, json: bool) -> Result<String, Failure> {
    let file = read_system(path)?;
    let report = analyze(&file.equations, &file.weight_system()?, &file.variables)?;
    Ok(if json { to_json(&report) } else { report_text(&report) })
}

fn cmd_counterexample(n: usize, c: Option<Vec<String>>, out: Option<&Path>, json: bool) -> Result<String, Failure> {
    let params = match c {
        None => CounterexampleParams::with_default_constants(n)?,
        Some(values) => {
            let parsed = values
                .iter()
                .map(|v| {
                    v.trim()
                        .parse::<Rational>()
                        .map_err(|_| Failure::Input(format!("`{v}` is not a rational number")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            CounterexampleParams::new(n, parsed)?
        }
    };
    let (s, _) = build_counterexample(&params)?;
    let c_text: Vec<String> = params.c().iter().map(ToString::to_string).collect();
    let file = SystemFile::render(
        &default_names(n),
        s.weights().as_slice(),
        s.equations(),
        &format!("counter-example family, n = {n}, c = ({})", c_text.join(", ")),
    );
    let report = verify_counterexample(&params)?;
    let mut text = String::new();
    match out {
        Some(path) => {
            std::fs::write(path, &file).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
        None if !json => {
            text.push_str(&file);
            text.push('\n');
        }
        None => {}
    }
    text.push_str(&if json { to_json(&report) } else { report_text(&report) });
    Ok(text)
}

#[derive(Serialize)]
struct OracleRow {
    degree: i64,
    dimension: usize,
    /// The generator rule contradicts this dimension.
    disagreement: bool,
}

#[derive(Serialize)]
struct OracleTable {
    rule_applies: bool,
    rule_exists: Option<bool>,
    min_trivial_degree: Option<i64>,
    rows: Vec<OracleRow>,
}

fn parse_range(text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Input(format!("degree range `{text}` is not of the form LO..HI"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn cmd_oracle(path: &Path, degrees: &str, json: bool) -> Result<String, Failure> {
    let (lo, hi) = parse_range(degrees)?;
    let file = read_system(path)?;
    let s = validate_named_system(&file.equations, &file.weight_system()?, &file.variables)?;
    let verdict = if s.t() < s.n() && is_normal_icis(&s)? {
        Some(has_negative_derivations(&s)?)
    } else {
        None
    };
    let oracle = DerivationOracle::new(&s)?;
    let rows: Vec<OracleRow> = (lo..=hi)
        .map(|d| {
            let dimension = oracle.space(d).dimension();
            let disagreement = match &verdict {
                Some(v) if d < 0 => (dimension > 0 && (!v.exists || d < v.min_degree))
                    || (v.exists && d == v.min_degree && dimension == 0),
                _ => false,
            };
            OracleRow {
                degree: d,
                dimension,
                disagreement,
            }
        })
        .collect();
    let table = OracleTable {
        rule_applies: verdict.is_some(),
        rule_exists: verdict.as_ref().map(|v| v.exists),
        min_trivial_degree: verdict.as_ref().map(|v| v.min_degree),
        rows,
    };
    if json {
        return Ok(to_json(&table));
    }
    let mut out = String::from("degree  dimension\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{:>6}  {:>9}{}\n",
            row.degree,
            row.dimension,
            if row.disagreement { "  DISAGREES WITH RULE" } else { "" }
        ));
    }
    match table.rule_exists {
        Some(e) => out.push_str(&format!(
            "rule: negative derivations {} (minimal generator degree {})\n",
            if e { "exist" } else { "do not exist" },
            table.min_trivial_degree.unwrap_or_default()
        )),
        None => out.push_str("rule: not applicable (not a normal ICIS)\n"),
    }
    Ok(out)
}

fn cmd_infer_weights(path: &Path, json: bool) -> Result<String, Failure> {
    let file = read_system(path)?;
    let found: Vec<Vec<u32>> = infer_weights(&file.equations)
        .iter()
        .map(|w| w.as_slice().to_vec())
        .collect();
    if json {
        return Ok(to_json(&found));
    }
    if found.is_empty() {
        return Ok("no positive weights make every equation quasihomogeneous\n".into());
    }
    Ok(found
        .iter()
        .map(|w| {
            let ws: Vec<String> = w.iter().map(u32::to_string).collect();
            format!("weights: {}\n", ws.join(" "))
        })
        .collect())
}
