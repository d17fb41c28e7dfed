//! Command-line front end: argument parsing, dispatch and rendering.
//!
//! Every subcommand renders to a string before anything is written, so a
//! failed run never leaves partial output behind.

use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use algdens_core::algnum::{
    arno_members_of_class, canonicalize, nonarno_witnesses, profile, sqrt2_family_row, AlgProfile,
    ClassEntry, MinPoly,
};
use algdens_core::density::{
    decimal, zeta3_inverse, zeta3_terms, DensityReport, ReportOptions, Weight,
};
use algdens_core::partition::{evens_density, verify_partition, PartitionReport};
use algdens_core::{Error, IntPoly, Rat};

/// Exhaustive partition checks allocate one counter per integer.
pub const MAX_VERIFY_LIMIT: u64 = 100_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "algdens",
    version,
    about = "Denominators, Arno numbers and density counts of algebraic numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `density` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads.
    #[arg(long, global = true, env = "ALGDENS_JOBS")]
    pub jobs: Option<NonZeroUsize>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolyArg {
    /// Descending coefficients, e.g. "9,0,-2" for 9x^2 - 2.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Denominator, leading coefficient, numerator and norm.
    Profile(PolyArg),
    /// Arno numbers sharing the numerator of a monic polynomial's root.
    ClassScan(PolyArg),
    /// Non-Arno numbers theta/p sharing the numerator theta.
    Witnesses {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Arno ratios over canonical polynomials of bounded degree and height.
    Density {
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        height: u64,
        #[arg(long, default_value = "roots")]
        weight: Weight,
        /// Count degree one in the cumulative ratio; pass `=false` to drop it.
        #[arg(long, num_args = 0..=1, default_value_t = true, default_missing_value = "true")]
        include_degree_1: bool,
    },
    /// Share of evens in [2, limit], optionally checking the partition there.
    Partition {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        verify: bool,
    },
    /// 1/zeta(3) to a given tolerance.
    Zeta3 {
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Closed form against computation for sqrt(2) / (2^k q).
    Example3 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u32,
    },
}

/// A parsed, validated invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub jobs: NonZeroUsize,
    pub output: Option<PathBuf>,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let format = cli.format.unwrap_or(match cli.command {
            Command::Density { .. } => Format::Csv,
            _ => Format::Json,
        });
        let jobs = cli
            .jobs
            .or_else(|| std::thread::available_parallelism().ok())
            .unwrap_or(NonZeroUsize::MIN);
        RunConfig {
            command: cli.command,
            format,
            jobs,
            output: cli.output,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Verification(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// A rendered result. `verified` is false when the computation finished but
/// a check it performs did not hold.
struct Rendered {
    body: String,
    verified: bool,
}

/// Runs one invocation; diagnostics go to standard error.
pub fn run(config: RunConfig) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.get())
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start {} workers: {e}", config.jobs);
            return EXIT_INPUT;
        }
    };
    let result = pool.install(|| dispatch(&config.command, config.format));
    let rendered = match result {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT;
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            return EXIT_VERIFICATION;
        }
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, &rendered.body),
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(rendered.body.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    if rendered.verified {
        EXIT_OK
    } else {
        eprintln!("verification failed");
        EXIT_VERIFICATION
    }
}

fn dispatch(command: &Command, format: Format) -> Result<Rendered, Failure> {
    let body = match command {
        Command::Profile(p) => render_profile(&canonical_input(&p.poly)?, format)?,
        Command::ClassScan(p) => {
            let f = canonical_input(&p.poly)?;
            render_class_scan(&f, format)?
        }
        Command::Witnesses { poly, count } => {
            let f = canonical_input(&poly.poly)?;
            render_witnesses(&nonarno_witnesses(&f, *count)?, format)?
        }
        Command::Density {
            max_degree,
            height,
            weight,
            include_degree_1,
        } => {
            let report = DensityReport::build(&ReportOptions {
                max_degree: *max_degree,
                height: *height,
                weight: *weight,
                include_degree_1: *include_degree_1,
            })?;
            match format {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            }
        }
        Command::Partition { limit, verify } => return render_partition(*limit, *verify, format),
        Command::Zeta3 { tolerance } => render_zeta3(*tolerance, format)?,
        Command::Example3 { q, k } => return render_example3(*q, *k, format),
    };
    Ok(Rendered {
        body,
        verified: true,
    })
}

fn canonical_input(text: &str) -> Result<MinPoly, Failure> {
    let p: IntPoly = text.parse()?;
    Ok(canonicalize(&p)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

/// CSV field, quoted when it holds a comma.
fn field(s: impl ToString) -> String {
    let s = s.to_string();
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s
    }
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(field).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// `key  value` lines for a single record.
fn text_record(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        writeln!(out, "{k:<width$}  {v}").unwrap();
    }
    out
}

#[derive(Serialize)]
struct ProfileOut<'a> {
    minpoly: &'a MinPoly,
    #[serde(flatten)]
    profile: &'a AlgProfile,
}

const PROFILE_COLUMNS: [&str; 8] = [
    "minpoly",
    "degree",
    "height",
    "denom",
    "lead",
    "arno",
    "numerator_poly",
    "norm",
];

fn profile_cells(g: &MinPoly, p: &AlgProfile) -> Vec<String> {
    vec![
        g.to_string(),
        p.degree.to_string(),
        p.height.to_string(),
        p.denom.to_string(),
        p.lead.to_string(),
        p.arno.to_string(),
        p.numerator_poly.to_string(),
        p.norm.to_string(),
    ]
}

fn render_profile(g: &MinPoly, format: Format) -> Result<String, Failure> {
    let prof = profile(g)?;
    Ok(match format {
        Format::Json => json(&ProfileOut {
            minpoly: g,
            profile: &prof,
        }),
        Format::Csv => csv(&PROFILE_COLUMNS, &[profile_cells(g, &prof)]),
        Format::Text => {
            let pairs: Vec<(&str, String)> = PROFILE_COLUMNS
                .into_iter()
                .zip(profile_cells(g, &prof))
                .collect();
            text_record(&pairs)
        }
    })
}

fn render_class_scan(f: &MinPoly, format: Format) -> Result<String, Failure> {
    let scan = arno_members_of_class(f, true)?;
    let tagged = || {
        scan.members
            .iter()
            .map(|e| ("member", e))
            .chain(scan.witnesses.iter().map(|e| ("witness", e)))
    };
    Ok(match format {
        Format::Json => json(&scan),
        Format::Csv => {
            let rows: Vec<Vec<String>> = tagged()
                .map(|(role, e)| vec![role.to_string(), e.q.to_string(), e.minpoly.to_string()])
                .collect();
            csv(&["role", "q", "minpoly"], &rows)
        }
        Format::Text => {
            let mut out = format!("numerator {}  norm {}\n", scan.numerator_poly, scan.norm);
            for (role, e) in tagged() {
                writeln!(out, "{role:<8} q={:<6} {}", e.q, e.minpoly).unwrap();
            }
            out
        }
    })
}

#[derive(Serialize)]
struct WitnessOut<'a> {
    #[serde(flatten)]
    entry: &'a ClassEntry,
    #[serde(flatten)]
    profile: AlgProfile,
}

fn render_witnesses(entries: &[ClassEntry], format: Format) -> Result<String, Failure> {
    let rows: Vec<WitnessOut> = entries
        .iter()
        .map(|entry| {
            Ok(WitnessOut {
                entry,
                profile: profile(&entry.minpoly)?,
            })
        })
        .collect::<Result<_, Error>>()?;
    let cells = |w: &WitnessOut| {
        vec![
            w.entry.q.to_string(),
            w.entry.minpoly.to_string(),
            w.profile.denom.to_string(),
            w.profile.lead.to_string(),
            w.profile.arno.to_string(),
        ]
    };
    Ok(match format {
        Format::Json => json(&rows),
        Format::Csv => csv(
            &["q", "minpoly", "denom", "lead", "arno"],
            &rows.iter().map(cells).collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut out = String::new();
            for w in &rows {
                writeln!(
                    out,
                    "q={:<6} {}  d={} c={}",
                    w.entry.q, w.entry.minpoly, w.profile.denom, w.profile.lead
                )
                .unwrap();
            }
            out
        }
    })
}

#[derive(Serialize)]
struct PartitionOut {
    limit: u64,
    evens: u64,
    total: u64,
    density: String,
    density_decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<PartitionReport>,
}

fn render_partition(limit: u64, verify: bool, format: Format) -> Result<Rendered, Failure> {
    let dens = evens_density(limit)?;
    if verify && limit > MAX_VERIFY_LIMIT {
        return Err(Failure::Input(format!(
            "--verify supports limits up to {MAX_VERIFY_LIMIT}, got {limit}"
        )));
    }
    let verification = verify.then(|| verify_partition(limit)).transpose()?;
    let verified = verification.as_ref().is_none_or(|r| r.ok);
    let exact = Rat::new((*dens.numer()).into(), (*dens.denom()).into());
    let out = PartitionOut {
        limit,
        evens: limit / 2,
        total: limit - 1,
        density: format!("{}/{}", dens.numer(), dens.denom()),
        density_decimal: decimal(&exact, 6),
        verification,
    };
    let status = out.verification.as_ref().map(|r| {
        if r.ok {
            "ok".to_string()
        } else {
            format!("{} violations", r.violations.len())
        }
    });
    let cells = vec![
        out.limit.to_string(),
        out.evens.to_string(),
        out.total.to_string(),
        out.density.clone(),
        out.density_decimal.clone(),
        status.clone().unwrap_or_else(|| "skipped".into()),
    ];
    let header = [
        "limit",
        "evens",
        "total",
        "density",
        "density_decimal",
        "verification",
    ];
    let body = match format {
        Format::Json => json(&out),
        Format::Csv => csv(&header, &[cells]),
        Format::Text => {
            let pairs: Vec<(&str, String)> = header.into_iter().zip(cells).collect();
            text_record(&pairs)
        }
    };
    Ok(Rendered { body, verified })
}

#[derive(Serialize)]
struct Zeta3Out {
    tolerance: f64,
    terms: u64,
    value: f64,
}

fn render_zeta3(tolerance: f64, format: Format) -> Result<String, Failure> {
    let out = Zeta3Out {
        tolerance,
        terms: zeta3_terms(tolerance),
        value: zeta3_inverse(tolerance)?,
    };
    let cells = vec![
        format!("{tolerance:e}"),
        out.terms.to_string(),
        format!("{:.15}", out.value),
    ];
    let header = ["tolerance", "terms", "value"];
    Ok(match format {
        Format::Json => json(&out),
        Format::Csv => csv(&header, &[cells]),
        Format::Text => {
            let pairs: Vec<(&str, String)> = header.into_iter().zip(cells).collect();
            text_record(&pairs)
        }
    })
}

fn render_example3(q: u64, k: u32, format: Format) -> Result<Rendered, Failure> {
    let row = sqrt2_family_row(q, k)?;
    let cells = vec![
        row.q.to_string(),
        row.k.to_string(),
        row.expected_poly.to_string(),
        row.expected_denom.to_string(),
        row.expected_lead.to_string(),
        row.computed_poly.to_string(),
        row.computed_denom.to_string(),
        row.computed_lead.to_string(),
        row.arno.to_string(),
        row.matches.to_string(),
    ];
    let header = [
        "q",
        "k",
        "expected_poly",
        "expected_denom",
        "expected_lead",
        "computed_poly",
        "computed_denom",
        "computed_lead",
        "arno",
        "matches",
    ];
    let body = match format {
        Format::Json => json(&row),
        Format::Csv => csv(&header, &[cells]),
        Format::Text => {
            let pairs: Vec<(&str, String)> = header.into_iter().zip(cells).collect();
            text_record(&pairs)
        }
    };
    Ok(Rendered {
        body,
        verified: row.matches,
    })
}
