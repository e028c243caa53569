use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superschur::characters::{reduction_char_capped, su_zhang_char_capped, typical_constant_delta_char, DEFAULT_CAP};
use superschur::combinatorics::CompositePartition;
use superschur::jacobi_trudi::{general_char, jt_matrix};
use superschur::symfunc::{Entry, SymFuncContext};
use superschur::verify::{self, GridSpec, Suite};
use superschur::weights::{normalize_to_special, special_class, Weight};
use superschur::{Error, LaurentPoly, Result};

#[derive(Parser)]
#[command(name = "superschur", version, about = "Characters of gl(m|n) irreducible modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character of V(Λ).
    Char {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Bound on m!·n! for the alternating sum; SUPERSCHUR_CAP wins if set.
        #[arg(long)]
        cap: Option<u128>,
        /// Also print the symbolic determinant (jt only).
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Run an identity suite and print a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// e.g. "m<=3,n<=2,entry<=3"; `=` pins a value, `samples=N` subsamples.
        #[arg(long, default_value = "")]
        grid: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print dim V(Λ).
    Dim {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "auto")]
        method: DimMethod,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Print the supersymmetric S-function of a composite partition "ν|μ".
    Schur {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(clap::Args)]
struct WeightArgs {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// "λ_1,…,λ_m;μ_1,…,μ_n"
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Jt,
    Suzhang,
    Typical,
    Reduction,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DimMethod {
    Auto,
    Jt,
    Suzhang,
    Typical,
    Reduction,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

const ROUTES: [Method; 4] = [Method::Jt, Method::Suzhang, Method::Typical, Method::Reduction];

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Jt => "jt",
            Method::Suzhang => "suzhang",
            Method::Typical => "typical",
            Method::Reduction => "reduction",
            Method::All => "all",
        }
    }
}

impl WeightArgs {
    fn parse(&self) -> Result<Weight> {
        let w: Weight = self.weight.parse()?;
        match (self.m, self.n) {
            (Some(m), Some(n)) => Weight::parse_with_arity(&self.weight, m, n),
            (Some(m), None) if m != w.m() => Weight::parse_with_arity(&self.weight, m, w.n()),
            (None, Some(n)) if n != w.n() => Weight::parse_with_arity(&self.weight, w.m(), n),
            _ => Ok(w),
        }
    }
}

fn effective_cap(flag: Option<u128>) -> Result<u128> {
    match std::env::var("SUPERSCHUR_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("SUPERSCHUR_CAP=`{v}`"))),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_CAP)),
    }
}

fn route(w: &Weight, method: Method, cap: u128) -> Result<LaurentPoly> {
    match method {
        Method::Jt => general_char(w),
        Method::Suzhang => su_zhang_char_capped(w, cap),
        Method::Typical => typical_constant_delta_char(w),
        Method::Reduction => {
            let c = special_class(w)
                .ok_or_else(|| Error::Hypothesis(format!("{w}: β₁ = −k with α_{{m−k}} ≥ 0 ≥ α_{{m−k+1}} violated")))?;
            reduction_char_capped(&c, cap)
        }
        Method::All => unreachable!("expanded by the caller"),
    }
}

/// The determinant of the σ-normalized weight and the shift used.
fn matrix_of(w: &Weight) -> Result<(i64, Weight, Vec<Vec<Entry>>)> {
    let (j, class) = normalize_to_special(w)?;
    let entries = jt_matrix(&class.weight)?;
    Ok((j, class.weight, entries))
}

fn print_matrix(w: &Weight, j: i64, base: &Weight, entries: &[Vec<Entry>]) {
    if j != 0 {
        println!("{w} = {base} shifted by {j}σ");
    }
    let names: Vec<Vec<String>> = entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    let width = names.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    for row in &names {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        println!("| {} |", cells.join("  "));
    }
    let ctx = SymFuncContext::new(base.m(), base.n());
    let mut seen: Vec<&Entry> = entries.iter().flatten().collect();
    seen.sort_by_key(|e| e.to_string());
    seen.dedup();
    for e in seen {
        let value = match e {
            Entry::H(r) => ctx.super_h(*r),
            Entry::HDot(r) => ctx.dual_super_h(*r),
        };
        println!("  {e} = {value}");
    }
}

fn cmd_char(args: &WeightArgs, method: Method, format: Format, cap: Option<u128>, emit: bool) -> Result<ExitCode> {
    let w = args.parse()?;
    let cap = effective_cap(cap)?;
    let matrix = if emit { Some(matrix_of(&w)?) } else { None };
    if method != Method::All {
        let ch = route(&w, method, cap)?;
        match format {
            Format::Text => {
                if let Some((j, base, entries)) = &matrix {
                    print_matrix(&w, *j, base, entries);
                }
                println!("{ch}");
            }
            Format::Json => {
                let mut out = json!({
                    "weight": w.to_string(),
                    "method": method.name(),
                    "character": ch.to_json_value(),
                    "dimension": ch.coefficient_sum().to_string(),
                });
                if let Some((j, base, entries)) = &matrix {
                    out["matrix"] = matrix_json(*j, base, entries);
                }
                println!("{}", serde_json::to_string(&out).expect("json"));
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    // every route that applies must give the same polynomial
    let mut results: BTreeMap<&str, Result<LaurentPoly>> = BTreeMap::new();
    for m in ROUTES {
        results.insert(m.name(), route(&w, m, cap));
    }
    let oracle = results["suzhang"].clone()?;
    let agree = results.values().all(|r| r.as_ref().map_or(true, |p| *p == oracle));
    match format {
        Format::Text => {
            if let Some((j, base, entries)) = &matrix {
                print_matrix(&w, *j, base, entries);
            }
            for (name, r) in &results {
                match r {
                    Ok(p) if *p == oracle => println!("{name}: agrees"),
                    Ok(p) => println!("{name}: DISAGREES: {p}"),
                    Err(e) => println!("{name}: not applicable ({e})"),
                }
            }
            println!("{oracle}");
            println!("{}", if agree { "all applicable routes agree" } else { "routes disagree" });
        }
        Format::Json => {
            let routes: serde_json::Map<String, Value> = results
                .iter()
                .map(|(name, r)| {
                    let v = match r {
                        Ok(p) => p.to_json_value(),
                        Err(e) => json!({ "error": e.to_string() }),
                    };
                    (name.to_string(), v)
                })
                .collect();
            let mut out = json!({
                "weight": w.to_string(),
                "method": "all",
                "agree": agree,
                "routes": routes,
                "dimension": oracle.coefficient_sum().to_string(),
            });
            if let Some((j, base, entries)) = &matrix {
                out["matrix"] = matrix_json(*j, base, entries);
            }
            println!("{}", serde_json::to_string(&out).expect("json"));
        }
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn matrix_json(j: i64, base: &Weight, entries: &[Vec<Entry>]) -> Value {
    let names: Vec<Vec<String>> = entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    json!({ "shift": j, "weight": base.to_string(), "entries": names })
}

fn cmd_verify(suite: &str, grid: &str, seed: u64) -> Result<ExitCode> {
    let suite: Suite = suite.parse()?;
    let spec: GridSpec = grid.parse()?;
    let report = verify::run(suite, &spec, seed);
    println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_dim(args: &WeightArgs, method: DimMethod, cap: Option<u128>) -> Result<ExitCode> {
    let w = args.parse()?;
    let cap = effective_cap(cap)?;
    let ch = match method {
        DimMethod::Auto if w.has_constant_delta() && w.n() > 0 => general_char(&w)?,
        DimMethod::Auto | DimMethod::Suzhang => route(&w, Method::Suzhang, cap)?,
        DimMethod::Jt => route(&w, Method::Jt, cap)?,
        DimMethod::Typical => route(&w, Method::Typical, cap)?,
        DimMethod::Reduction => route(&w, Method::Reduction, cap)?,
    };
    println!("{}", ch.coefficient_sum());
    Ok(ExitCode::SUCCESS)
}

fn cmd_schur(m: usize, n: usize, partition: &str, format: Format) -> Result<ExitCode> {
    let c: CompositePartition = partition.parse()?;
    let s = SymFuncContext::new(m, n).composite_super_schur(&c);
    match format {
        Format::Text => println!("{s}"),
        Format::Json => println!("{}", s.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Char { weight, method, format, cap, emit_matrix } => {
            cmd_char(weight, *method, *format, *cap, *emit_matrix)
        }
        Command::Verify { suite, grid, seed } => cmd_verify(suite, grid, *seed),
        Command::Dim { weight, method, cap } => cmd_dim(weight, *method, *cap),
        Command::Schur { m, n, partition, format } => cmd_schur(*m, *n, partition, *format),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
