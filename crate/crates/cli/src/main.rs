//! `mjohnson`: classify merged Johnson graphs, run censuses, export graphs and
//! witness groups, and run the verification suites.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use merged_johnson::classify::{classify, CayleyVerdict, Verdict};
use merged_johnson::complement;
use merged_johnson::nearfield::{affine_group, exceptional_group, AffineKind, ExceptionalSpec, NearField};
use merged_johnson::verify::{run_suite, Suite};
use merged_johnson::{Error, MergeSet, MergedJohnsonGraph, PermutationGroup};

const CENSUS_N_MAX: usize = 14;
const THREADS_ENV: &str = "MJOHNSON_THREADS";

#[derive(Parser)]
#[command(name = "mjohnson", version, about = "Merged Johnson graphs J(n,k)_I")]
struct Cli {
    /// Accepted for interface stability; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Instance {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
    /// Merged distances, 1-based and comma separated, e.g. `1,3`.
    #[arg(short = 'I', value_delimiter = ',', required = true)]
    merge: Vec<usize>,
}

impl Instance {
    fn merge_set(&self) -> Result<MergeSet, Error> {
        MergeSet::new(self.k, &self.merge)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full verdict record for one graph.
    Classify(Instance),
    /// Verdicts for every (n, k, I) with n <= n_max.
    Census {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = CensusFormat::Json)]
        format: CensusFormat,
    },
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Runs a verification suite; exits 1 if any claim is refuted.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    Export {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    Build {
        #[arg(value_enum)]
        kind: GroupKind,
        /// Field order for ahl/agl/agammal, or the base field for dickson.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        variant: u8,
        #[arg(long, default_value_t = 1)]
        delta: u8,
        /// Induce the action on k-subsets.
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Edges,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupKind {
    Ahl,
    Agl,
    Agammal,
    Dickson,
    Exceptional,
    Psl28Complement,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

enum Failure {
    Usage(String),
    Refuted,
    Runtime(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Runtime(e.into()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var(THREADS_ENV) {
        match threads.parse::<usize>() {
            Ok(t) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            Err(_) => {
                eprintln!("error: {THREADS_ENV} must be a number, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Classify(inst) => {
            let verdict = classify(inst.n, inst.k, &inst.merge_set()?)?;
            writeln!(out, "{}", verdict.to_json())?;
        }
        Command::Census { n_max, format } => census(n_max, format, &mut out)?,
        Command::Graph { command: GraphCommand::Export { instance, format, output } } => {
            let graph = MergedJohnsonGraph::build(instance.n, instance.k, &instance.merge_set()?)?;
            if !graph.is_materialized() {
                return Err(Failure::Usage(format!("J({},{}) is too large to export", instance.n, instance.k)));
            }
            let text = match format {
                GraphFormat::Json => format!("{}\n", graph.to_json()),
                GraphFormat::Edges => graph.to_edge_list(),
                GraphFormat::Dimacs => graph.to_dimacs(),
            };
            emit(&text, output, &mut out)?;
        }
        Command::Group { command: GroupCommand::Build { kind, q, d, p, variant, delta, k, output } } => {
            let value = build_group(kind, q, d, p, variant, delta, k)?;
            emit(&format!("{value}\n"), output, &mut out)?;
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Fast => Suite::Fast,
                SuiteArg::Full => Suite::Full,
            };
            let reports = run_suite(suite);
            let refuted = reports.iter().filter(|r| !r.is_confirmed()).count();
            for r in &reports {
                writeln!(out, "{}", r.to_json())?;
            }
            writeln!(out, "{}", json!({ "summary": { "claims": reports.len(), "refuted": refuted } }))?;
            out.flush()?;
            if refuted > 0 {
                return Err(Failure::Refuted);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn emit(text: &str, output: Option<PathBuf>, out: &mut impl Write) -> Result<(), Failure> {
    match output {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            f.write_all(text.as_bytes())?;
            f.flush()?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Every `(n, k, I)` with `4 <= n <= n_max`, `2 <= k <= n/2`, sorted.
fn census_instances(n_max: usize) -> Vec<(usize, usize, MergeSet)> {
    let mut out = Vec::new();
    for n in 4..=n_max {
        for k in 2..=n / 2 {
            for bits in 1u64..1 << k {
                let idx: Vec<usize> = (1..=k).filter(|i| bits >> (i - 1) & 1 == 1).collect();
                out.push((n, k, MergeSet::new(k, &idx).expect("nonempty subset")));
            }
        }
    }
    out.sort_by(|a, b| (a.0, a.1, a.2.indices()).cmp(&(b.0, b.1, b.2.indices())));
    out
}

fn census(n_max: usize, format: CensusFormat, out: &mut impl Write) -> Result<(), Failure> {
    if n_max > CENSUS_N_MAX {
        return Err(Failure::Usage(format!("census needs n_max <= {CENSUS_N_MAX}, got {n_max}")));
    }
    let verdicts: Vec<Verdict> = census_instances(n_max)
        .par_iter()
        .map(|(n, k, merge)| classify(*n, *k, merge))
        .collect::<Result<_, _>>()?;
    let disconnected = |v: &Verdict| matches!(v.cayley, CayleyVerdict::Yes { disconnected: true, .. });
    let cayley = verdicts.iter().filter(|v| v.cayley.is_yes() && !disconnected(v)).count();
    let cayley_disconnected = verdicts.iter().filter(|v| disconnected(v)).count();
    let two_regular = verdicts.iter().filter(|v| v.two_regular.is_yes()).count();
    let neither = verdicts.iter().filter(|v| !v.cayley.is_yes() && !v.two_regular.is_yes()).count();
    match format {
        CensusFormat::Json => {
            for v in &verdicts {
                writeln!(out, "{}", v.to_json())?;
            }
        }
        CensusFormat::Table => {
            // YES* marks a disconnected matching, which has a regular group but no connection set.
            writeln!(out, "{:>3} {:>3} {:<16} {:<10} {:<8} {:<12} {}", "n", "k", "I", "aut", "cayley", "2-regular", "deficiency")?;
            for v in &verdicts {
                let j = v.to_json();
                let i = v.merge.indices().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                writeln!(
                    out,
                    "{:>3} {:>3} {:<16} {:<10} {:<8} {:<12} {}",
                    v.n,
                    v.k,
                    format!("{{{i}}}"),
                    format!("case {}", v.aut.case_id),
                    match (v.cayley.is_yes(), disconnected(v)) {
                        (true, true) => "YES*",
                        (true, false) => "YES",
                        _ => "NO",
                    },
                    if v.two_regular.is_yes() { "YES" } else { "NO" },
                    deficiency_cell(&j["deficiency"]),
                )?;
            }
        }
    }
    let summary = json!({ "summary": { "instances": verdicts.len(), "cayley": cayley,
        "cayley_disconnected": cayley_disconnected,
        "two_regular": two_regular, "neither": neither } });
    writeln!(out, "{summary}")?;
    Ok(())
}

fn deficiency_cell(d: &Value) -> String {
    match (&d["exact"], &d["lower"], &d["upper"]) {
        (Value::String(x), _, _) => x.clone(),
        (_, Value::String(lo), Value::String(hi)) => format!("[{lo}, {hi}]"),
        _ => d.to_string(),
    }
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this group")))
}

fn build_group(
    kind: GroupKind,
    q: Option<u64>,
    d: Option<u32>,
    p: Option<u64>,
    variant: u8,
    delta: u8,
    k: Option<usize>,
) -> Result<Value, Failure> {
    let (name, points) = match kind {
        GroupKind::Ahl | GroupKind::Agl | GroupKind::Agammal => {
            let q = require(q, "q")?;
            let (name, affine) = match kind {
                GroupKind::Ahl => ("AHL", AffineKind::Ahl),
                GroupKind::Agl => ("AGL", AffineKind::Agl),
                _ => ("AΓL", AffineKind::AGammaL),
            };
            (format!("{name}_1({q})"), affine_group(&NearField::field_of_order(q)?, affine)?)
        }
        GroupKind::Dickson => {
            let (q, d) = (require(q, "q")?, require(d, "d")?);
            let f = NearField::dickson(q, d)?;
            let kind = if f.order() % 4 == 3 { AffineKind::Ahl } else { AffineKind::Agl };
            let name = if kind == AffineKind::Ahl { "AHL" } else { "AGL" };
            (format!("{name}_1(Dickson({q},{d}))"), affine_group(&f, kind)?)
        }
        GroupKind::Exceptional => {
            let spec = ExceptionalSpec::find(require(p, "p")?, variant)?;
            let g = exceptional_group(&spec)?;
            (format!("exceptional({},{})", spec.p, spec.variant), g.group)
        }
        GroupKind::Psl28Complement => {
            let data = complement::equipartition_setup(&complement::build_pointed_psl28()?)?.with_delta(delta)?;
            let mut v = complement::complement_group(&data)?.to_json()?;
            v["name"] = json!(format!("PSL_2(8) complement δ={delta}"));
            return Ok(v);
        }
    };
    let group = match k {
        Some(k) => points.induced_subset_action(k)?,
        None => points,
    };
    Ok(group_json(&name, &group, k))
}

fn group_json(name: &str, g: &PermutationGroup, k: Option<usize>) -> Value {
    json!({
        "name": name,
        "degree": g.degree(),
        "order": g.order().to_string(),
        "acting_on": k.map_or("points".to_string(), |k| format!("{k}-subsets")),
        "generators": g.generators().iter().map(|p| p.to_one_based()).collect::<Vec<_>>(),
    })
}
