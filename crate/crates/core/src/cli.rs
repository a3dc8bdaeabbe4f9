//! Command-line front end. [`run`] returns everything the process would
//! print so that output is only emitted once a command has fully succeeded.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use crate::construction::{construct, Parameters, Route};
use crate::error::Error;
use crate::record::{self, Format, JsonInt, TriangleRecord, VerifyRecord};
use crate::search::{self, CoverageHit, CoverageReport, SearchBound};
use crate::triangle::{self, MedianTriangle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ARITHMETIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "euler-medians", version, about = "Integer triangles with integer medians")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = Format::from_str)]
    pub format: Format,

    /// Include construction intermediates in generated records.
    #[arg(long, global = true)]
    pub trace: bool,

    /// Only emit valid (non-degenerate) constructions.
    #[arg(long, global = true)]
    pub primitive_only: bool,

    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct triangles over a grid of (f, g) parameters.
    Generate {
        /// Single value `N` or inclusive range `LO..HI`.
        #[arg(long)]
        f: IntRange,
        #[arg(long)]
        g: IntRange,
        #[arg(long, default_value = "rational-pipeline", value_parser = Route::from_str)]
        route: Route,
    },
    /// Check sextuples `a b c x y z` against the median identities.
    Verify {
        /// Inline sextuple.
        #[arg(num_args = 0.., allow_negative_numbers = true)]
        values: Vec<String>,
        /// File of JSON lines, CSV records or plain sextuples (`-` for stdin).
        #[arg(long, short)]
        input: Option<PathBuf>,
    },
    /// The median triangle of a sextuple `a b c x y z`.
    Dual {
        #[arg(num_args = 6, allow_negative_numbers = true)]
        values: Vec<String>,
    },
    /// Exhaustively list primitive median triangles.
    Search {
        #[arg(long)]
        max_half_side: u64,
    },
    /// Compare the construction over a parameter grid with exhaustive search.
    Coverage {
        #[arg(long)]
        max_half_side: u64,
        #[arg(long)]
        f_max: u64,
        #[arg(long)]
        g_max: u64,
    },
}

/// Inclusive range of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("invalid integer {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo == 0 {
            return Err("values must be >= 1".into());
        }
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl IntRange {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, msg: impl fmt::Display) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code: EXIT_USAGE }
            } else {
                Output::ok(text)
            };
        }
    };
    match cli.threads {
        Some(0) => Output::fail(EXIT_USAGE, "--threads must be >= 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Output::fail(EXIT_USAGE, e),
        },
        None => execute(&cli),
    }
}

fn execute(cli: &Cli) -> Output {
    match &cli.command {
        Command::Generate { f, g, route } => generate(cli, *f, *g, *route),
        Command::Verify { values, input } => verify(cli, values, input.as_ref()),
        Command::Dual { values } => dual(cli, values),
        Command::Search { max_half_side } => search(cli, *max_half_side),
        Command::Coverage { max_half_side, f_max, g_max } => coverage(cli, *max_half_side, *f_max, *g_max),
    }
}

fn render(records: &[TriangleRecord], format: Format) -> String {
    let mut buf = Vec::new();
    record::write_records(&mut buf, records, format).expect("writing to memory");
    String::from_utf8(buf).expect("utf-8 output")
}

fn generate(cli: &Cli, f: IntRange, g: IntRange, route: Route) -> Output {
    let pairs: Vec<(u64, u64)> = f.iter().flat_map(|f| g.iter().map(move |g| (f, g))).collect();
    let results: Vec<Result<Option<TriangleRecord>, (u64, u64, Error)>> = pairs
        .into_par_iter()
        .map(|(f, g)| {
            let params = Parameters::new(f, g).map_err(|e| (f, g, e))?;
            let out = construct(&params, route).map_err(|e| (f, g, e))?;
            if cli.primitive_only && !out.is_valid() {
                return Ok(None);
            }
            Ok(Some(TriangleRecord::from_outcome(&params, route, &out, cli.trace)))
        })
        .collect();

    let mut records = Vec::new();
    for r in results {
        match r {
            Ok(Some(rec)) => records.push(rec),
            Ok(None) => {}
            Err((f, g, e)) => return Output::fail(EXIT_ARITHMETIC, format!("(f={f}, g={g}): {e}")),
        }
    }
    Output::ok(render(&records, cli.format))
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        record::read_to_string(std::io::stdin().lock()).map_err(|e| format!("stdin: {e}"))
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn verify(cli: &Cli, values: &[String], input: Option<&PathBuf>) -> Output {
    let entries = match (values.is_empty(), input) {
        (false, Some(_)) => return Output::fail(EXIT_USAGE, "give either an inline sextuple or --input, not both"),
        (true, None) => return Output::fail(EXIT_USAGE, "nothing to verify: give a b c x y z or --input FILE"),
        (false, None) => match record::parse_plain(&values.join(" ")) {
            Ok(e) => e,
            Err(e) => return Output::fail(EXIT_USAGE, e.message),
        },
        (true, Some(path)) => {
            let text = match read_input(path) {
                Ok(t) => t,
                Err(e) => return Output::fail(EXIT_USAGE, e),
            };
            match record::parse_any(&text) {
                Ok(e) => e,
                Err(e) => return Output::fail(EXIT_USAGE, e),
            }
        }
    };

    let mut all_pass = true;
    let mut reports = Vec::new();
    for (line, rec) in &entries {
        // Records of failed constructions carry no sextuple.
        let Some(s) = rec.sextuple() else { continue };
        let report = triangle::verify(&s);
        all_pass &= report.all_pass();
        reports.push(VerifyRecord::new(*line, &s, &report));
    }

    let stdout = match cli.format {
        Format::Json => reports.iter().map(|r| serde_json::to_string(r).expect("serializable") + "\n").collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(VerifyRecord::CSV_HEADER).expect("memory write");
            for r in &reports {
                w.write_record(r.csv_row()).expect("memory write");
            }
            String::from_utf8(w.into_inner().expect("memory flush")).expect("utf-8")
        }
    };
    Output { stdout, stderr: String::new(), code: if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED } }
}

fn dual(cli: &Cli, values: &[String]) -> Output {
    let s = match record::parse_sextuple(&values.join(" ")) {
        Ok(s) => s,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    let t = match MedianTriangle::new(s) {
        Ok(t) => t,
        Err(e) => return Output::fail(EXIT_VERIFY_FAILED, e),
    };
    match triangle::dual(&t) {
        Ok(d) => Output::ok(render(&[TriangleRecord::from_triangle(&d.canonical())], cli.format)),
        Err(e) => Output::fail(EXIT_ARITHMETIC, e),
    }
}

fn search(cli: &Cli, max_half_side: u64) -> Output {
    let bound = match SearchBound::new(max_half_side) {
        Ok(b) => b,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    let records: Vec<TriangleRecord> = search::enumerate(bound).iter().map(TriangleRecord::from_triangle).collect();
    Output::ok(render(&records, cli.format))
}

fn triangle_json(t: &MedianTriangle) -> serde_json::Value {
    let [a, b, c] = t.half_sides().map(JsonInt::from);
    let [x, y, z] = t.medians().map(JsonInt::from);
    json!({ "half_sides": [a, b, c], "medians": [x, y, z] })
}

fn hit_json(h: &CoverageHit) -> serde_json::Value {
    let mut v = triangle_json(&h.triangle);
    v["provenance"] = json!(h.provenance.iter().map(|&(f, g)| [f, g]).collect::<Vec<_>>());
    v
}

fn coverage_json(rep: &CoverageReport) -> String {
    let v = json!({
        "max_half_side": rep.bound,
        "f_max": rep.f_max,
        "g_max": rep.g_max,
        "oracle_count": rep.oracle_count,
        "hit_count": rep.euler_hits.len(),
        "miss_count": rep.euler_misses.len(),
        "beyond_bound": rep.beyond_bound,
        "euler_hits": rep.euler_hits.iter().map(hit_json).collect::<Vec<_>>(),
        "euler_misses": rep.euler_misses.iter().map(triangle_json).collect::<Vec<_>>(),
        "unmatched": rep.unmatched.iter().map(hit_json).collect::<Vec<_>>(),
    });
    serde_json::to_string(&v).expect("serializable") + "\n"
}

fn coverage_csv(rep: &CoverageReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["a", "b", "c", "x", "y", "z", "status", "provenance"]).expect("memory write");
    let mut row = |t: &MedianTriangle, status: &str, prov: &[(u64, u64)]| {
        let mut r: Vec<String> = t.sextuple().iter().map(ToString::to_string).collect();
        r.push(status.to_owned());
        r.push(prov.iter().map(|(f, g)| format!("{f}:{g}")).collect::<Vec<_>>().join(" "));
        w.write_record(&r).expect("memory write");
    };
    for h in &rep.euler_hits {
        row(&h.triangle, "hit", &h.provenance);
    }
    for t in &rep.euler_misses {
        row(t, "miss", &[]);
    }
    for h in &rep.unmatched {
        row(&h.triangle, "unmatched", &h.provenance);
    }
    String::from_utf8(w.into_inner().expect("memory flush")).expect("utf-8")
}

fn coverage(cli: &Cli, max_half_side: u64, f_max: u64, g_max: u64) -> Output {
    let bound = match SearchBound::new(max_half_side) {
        Ok(b) => b,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    if f_max == 0 || g_max == 0 {
        return Output::fail(EXIT_USAGE, "--f-max and --g-max must be >= 1");
    }
    match search::coverage(bound, f_max, g_max) {
        Ok(rep) => Output::ok(match cli.format {
            Format::Json => coverage_json(&rep),
            Format::Csv => coverage_csv(&rep),
        }),
        Err(e) => Output::fail(EXIT_ARITHMETIC, e),
    }
}
