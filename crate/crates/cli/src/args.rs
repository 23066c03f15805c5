use std::path::PathBuf;

use bei_multidegree::graph::Family;
use bei_multidegree::oracle::{TermOrder, ORACLE_GUARD};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "multideg", version, about = "Multidegree calculator for binomial edge ideals of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multidegree of one graph.
    Compute {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Minimum-height vertex subsets of one connected graph.
    Minsets {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare the multidegree against the Groebner basis computation.
    Verify {
        #[command(flatten)]
        target: VerifyTarget,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Statistics over every connected graph of one order.
    Census {
        #[command(flatten)]
        source: CensusArgs,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Write census_n<N>.csv and summary_n<N>.json into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the named families, or print one family's closed form.
    Families {
        /// `name:p1[,p2]`, e.g. `windmill:4,3`.
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Comma-separated 1-indexed edges, e.g. "1-2,2-3".
    #[arg(long)]
    pub edges: Option<String>,
    /// Named family `name:p1[,p2]`, e.g. `star:6`.
    #[arg(long)]
    pub family: Option<Family>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VerifyTarget {
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long)]
    pub edges: Option<String>,
    #[arg(long)]
    pub family: Option<Family>,
    /// Verify every connected graph of this order (1..=7).
    #[arg(long)]
    pub all_n: Option<usize>,
}

impl VerifyTarget {
    pub fn single(&self) -> Option<GraphSource> {
        if self.all_n.is_some() {
            return None;
        }
        Some(GraphSource {
            graph6: self.graph6.clone(),
            edges: self.edges.clone(),
            family: self.family,
        })
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest order the Groebner computation accepts.
    #[arg(long, env = "MULTIDEG_ORACLE_GUARD", default_value_t = ORACLE_GUARD)]
    pub oracle_guard: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
    pub term_order: OrderArg,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CensusArgs {
    /// Built-in enumeration of this order (1..=7).
    #[arg(long)]
    pub n: Option<usize>,
    /// graph6 file, one connected graph per line, all of one order.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Drl,
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => TermOrder::Lex,
            OrderArg::Drl => TermOrder::DegRevLex,
        }
    }
}
