use std::fs;
use std::io::Write;
use std::path::Path;

use bei_multidegree::census::{
    compute_records, read_graph6_file, summarize, CensusError, CensusRecord, CensusSummary,
};
use bei_multidegree::engine::{family_multidegree, multidegree, EngineError};
use bei_multidegree::graph::{
    generate_connected, parse_graph6, to_graph6, EnumerationError, Family, Graph, Graph6Error,
    GraphError,
};
use bei_multidegree::minsets::{min_sets, MinSetError};
use bei_multidegree::oracle::{verify, OracleConfig, OracleError, VerifyReport};
use bei_multidegree::BiPoly;
use serde::Serialize;
use thiserror::Error;

use crate::args::{CensusArgs, Command, Format, GraphSource, OracleArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    MinSets(#[from] MinSetError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Mismatch = 2,
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command, out: &mut impl Write) -> Result<Status> {
    match command {
        Command::Compute { source, format } => compute(&source, format, out),
        Command::Minsets { source, format } => minsets(&source, format, out),
        Command::Verify { target, oracle, format } => {
            let config = oracle_config(&oracle);
            match (target.single(), target.all_n) {
                (Some(source), _) => verify_one(&source, &config, format, out),
                (None, Some(n)) => verify_all(n, &config, format, out),
                (None, None) => unreachable!("clap requires one target"),
            }
        }
        Command::Census { source, workers, out: dir } => census(&source, workers, dir.as_deref(), out),
        Command::Families { family, format } => families(family, format, out),
    }
}

fn load(source: &GraphSource) -> Result<Graph> {
    if let Some(s) = &source.graph6 {
        Ok(parse_graph6(s)?)
    } else if let Some(s) = &source.edges {
        Ok(Graph::parse_edge_list(s)?)
    } else if let Some(f) = &source.family {
        Ok(f.build().map_err(EngineError::from)?)
    } else {
        unreachable!("clap requires one graph source")
    }
}

fn oracle_config(args: &OracleArgs) -> OracleConfig {
    OracleConfig { guard: args.oracle_guard, order: args.term_order.into() }
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    graph6: String,
    n: usize,
    h_min: i64,
    codim: i64,
    witness_count: u64,
    multidegree: &'a BiPoly,
}

fn compute(source: &GraphSource, format: Format, out: &mut impl Write) -> Result<Status> {
    let g = load(source)?;
    let r = multidegree(&g)?;
    match format {
        Format::Latex => writeln!(out, "{}", r.poly.to_latex())?,
        Format::Json => json_line(
            out,
            &ComputeJson {
                graph6: to_graph6(&g),
                n: g.order(),
                h_min: r.h_min,
                codim: r.codim,
                witness_count: r.witness_count,
                multidegree: &r.poly,
            },
        )?,
        Format::Text => {
            writeln!(out, "graph: {} (n = {})", describe(&g), g.order())?;
            writeln!(out, "h_min: {}", r.h_min)?;
            writeln!(out, "codim: {}", r.codim)?;
            writeln!(out, "minimum-height primes: {}", r.witness_count)?;
            writeln!(out, "multidegree: {}", r.poly)?;
        }
    }
    Ok(Status::Success)
}

fn describe(g: &Graph) -> String {
    if g.edge_count() == 0 {
        "no edges".to_string()
    } else {
        g.to_edge_list_string()
    }
}

fn minsets(source: &GraphSource, format: Format, out: &mut impl Write) -> Result<Status> {
    let g = load(source)?;
    let report = min_sets(&g)?.labelled();
    match format {
        Format::Json => json_line(out, &report)?,
        Format::Text => {
            writeln!(out, "h_min: {}", report.h_min)?;
            writeln!(out, "height_min: {}", report.height_min)?;
            for m in &report.members {
                writeln!(out, "S = {:?}  L = {:?}", m.set, m.sizes)?;
            }
        }
        Format::Latex => {
            return Err(CliError::Usage("minsets supports --format text or json".into()));
        }
    }
    Ok(Status::Success)
}

fn write_verdict(out: &mut impl Write, label: &str, rep: &VerifyReport) -> Result<()> {
    match &rep.first_difference {
        None => writeln!(out, "{label}: equal ({})", rep.engine)?,
        Some(d) => writeln!(
            out,
            "{label}: MISMATCH at t1^{} t2^{}: engine {}, oracle {}\n  engine: {}\n  oracle: {}",
            d.i, d.j, d.engine, d.oracle, rep.engine, rep.oracle
        )?,
    }
    Ok(())
}

fn verify_one(
    source: &GraphSource,
    config: &OracleConfig,
    format: Format,
    out: &mut impl Write,
) -> Result<Status> {
    let g = load(source)?;
    let rep = verify(&g, config)?;
    match format {
        Format::Json => json_line(out, &rep)?,
        Format::Text => write_verdict(out, &to_graph6(&g), &rep)?,
        Format::Latex => return Err(CliError::Usage("verify supports --format text or json".into())),
    }
    Ok(if rep.equal { Status::Success } else { Status::Mismatch })
}

#[derive(Serialize)]
struct Mismatch {
    graph6: String,
    report: VerifyReport,
}

#[derive(Serialize)]
struct VerifyAllJson {
    n: usize,
    total: usize,
    verified: usize,
    mismatches: Vec<Mismatch>,
}

fn verify_all(n: usize, config: &OracleConfig, format: Format, out: &mut impl Write) -> Result<Status> {
    if format == Format::Latex {
        return Err(CliError::Usage("verify supports --format text or json".into()));
    }
    let graphs = generate_connected(n)?;
    let mut mismatches = Vec::new();
    for g in &graphs {
        let rep = verify(g, config)?;
        if !rep.equal {
            mismatches.push(Mismatch { graph6: to_graph6(g), report: rep });
        }
    }
    let total = graphs.len();
    let verified = total - mismatches.len();
    if format == Format::Json {
        json_line(out, &VerifyAllJson { n, total, verified, mismatches })?;
    } else {
        for m in &mismatches {
            write_verdict(out, &m.graph6, &m.report)?;
        }
        writeln!(out, "{verified}/{total} verified")?;
    }
    Ok(if verified == total { Status::Success } else { Status::Mismatch })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    n: usize,
    codim: i64,
    multiplicity_free: u8,
    leading_coeff: String,
    multidegree: String,
}

/// Orders at or above this take hours or more.
const SLOW_ORDER: usize = 9;

fn census(
    source: &CensusArgs,
    workers: usize,
    dir: Option<&Path>,
    out: &mut impl Write,
) -> Result<Status> {
    let graphs = match (source.n, &source.file) {
        (Some(n), _) => generate_connected(n)?.into_iter().map(|g| (to_graph6(&g), g)).collect(),
        (None, Some(path)) => read_graph6_file(path)?,
        (None, None) => unreachable!("clap requires one census source"),
    };
    if let Some((_, g)) = graphs.first() {
        if g.order() >= SLOW_ORDER {
            eprintln!(
                "warning: {} graphs on {} vertices; this census is long-running",
                graphs.len(),
                g.order()
            );
        }
    }
    let records = compute_records(graphs, workers)?;
    let summary = summarize(&records)?;
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
        let csv_path = dir.join(format!("census_n{}.csv", summary.n));
        write_csv(&csv_path, &records)?;
        let json_path = dir.join(format!("summary_n{}.json", summary.n));
        fs::write(&json_path, serde_json::to_string_pretty(&summary)? + "\n")?;
        writeln!(out, "wrote {} and {}", csv_path.display(), json_path.display())?;
    }
    write_summary(out, &summary)?;
    Ok(Status::Success)
}

fn write_csv(path: &Path, records: &[CensusRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for r in records {
        w.serialize(CsvRow {
            graph6: &r.graph6,
            n: r.n,
            codim: r.codim,
            multiplicity_free: r.multiplicity_free as u8,
            leading_coeff: r.leading_coeff.to_string(),
            multidegree: r.multidegree.to_latex(),
        })?;
    }
    w.flush()?;
    Ok(())
}

fn write_summary(out: &mut impl Write, s: &CensusSummary) -> Result<()> {
    writeln!(out, "n: {}", s.n)?;
    writeln!(out, "connected graphs: {}", s.total)?;
    writeln!(out, "multiplicity-free: {}", s.multiplicity_free)?;
    writeln!(out, "leading coefficient 1: {}", s.leading_1)?;
    writeln!(out, "leading coefficient 2: {}", s.leading_2)?;
    writeln!(out, "leading coefficient 3: {}", s.leading_3)?;
    for (c, k) in &s.leading_other {
        writeln!(out, "leading coefficient {c}: {k}")?;
    }
    Ok(())
}

const FAMILY_TABLE: [(&str, &str, &str); 9] = [
    ("path:n", "n >= 1", "n"),
    ("cycle:n", "n >= 3", "n"),
    ("complete:n", "n >= 1", "n"),
    ("star:n", "n >= 1", "n"),
    ("wheel:n", "n >= 4", "n"),
    ("barbell:n", "n >= 3", "2n"),
    ("horned:n", "n >= 1", "3n"),
    ("friendship:n", "n >= 1", "2n+1"),
    ("windmill:n,m", "n >= 2, m >= 1", "m(n-1)+1"),
];

#[derive(Serialize)]
struct FamilyJson<'a> {
    family: String,
    n: usize,
    multidegree: &'a BiPoly,
}

fn families(family: Option<Family>, format: Format, out: &mut impl Write) -> Result<Status> {
    let Some(f) = family else {
        if format == Format::Latex {
            return Err(CliError::Usage("the family list supports --format text or json".into()));
        }
        if format == Format::Json {
            let names: Vec<_> = FAMILY_TABLE
                .iter()
                .map(|(syntax, range, order)| {
                    serde_json::json!({"syntax": syntax, "range": range, "order": order})
                })
                .collect();
            json_line(out, &names)?;
        } else {
            writeln!(out, "{:<14} {:<16} order", "family", "parameters")?;
            for (syntax, range, order) in FAMILY_TABLE {
                writeln!(out, "{syntax:<14} {range:<16} {order}")?;
            }
        }
        return Ok(Status::Success);
    };
    let poly = family_multidegree(f)?;
    match format {
        Format::Latex => writeln!(out, "{}", poly.to_latex())?,
        Format::Json => json_line(out, &FamilyJson { family: f.to_string(), n: f.order(), multidegree: &poly })?,
        Format::Text => writeln!(out, "{f} ({} vertices): {poly}", f.order())?,
    }
    Ok(Status::Success)
}
