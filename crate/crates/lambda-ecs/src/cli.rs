//! Command-line surface over the library.
//!
//! Exit codes: 0 success/YES, 1 valid NO, 2 input error, 3 enumeration
//! budget exceeded, 4 internal inconsistency (a theorem-backed assertion
//! failed, which means a defect, not bad input).

use crate::error::Error;
use crate::gen::{gen_blob_cycle, gen_ham_union};
use crate::graph::{EdgeId, Graph};
use crate::io::{parse_file, write_file, Report, Status};
use crate::oracle::{oracle_max_deletion, oracle_max_weight};
use crate::pipeline::{find_deletion_set_with_report, minimum_equivalent_digraph, SolveConfig};
use crate::solver::solve_weighted;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeSet;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "lambda-ecs",
    about = "Edge deletion preserving lambda-edge-connectivity",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct InputArg {
    /// Graph file (`p ecs` format)
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Per-edge deletable/undeletable listing
    Classify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        lambda: usize,
        /// File with 1-based edge indices restricting the classification
        #[arg(long, value_name = "FILE")]
        restrict: Option<PathBuf>,
    },
    /// Decide whether k edges can be deleted, with a witness
    Solve {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        lambda: usize,
        #[arg(short)]
        k: usize,
        /// Node cap for the exhaustive candidate enumeration
        #[arg(long, default_value_t = 100_000_000)]
        enum_budget: u64,
    },
    /// Maximum-weight deletion set of size at most k
    SolveWeighted {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        lambda: usize,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 100_000_000)]
        enum_budget: u64,
    },
    /// Check a proposed removal set
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        lambda: usize,
        /// Comma-separated 1-based edge indices
        #[arg(long, value_delimiter = ',', required = true)]
        remove: Vec<usize>,
    },
    /// Minimum-equivalent-digraph deletion of at least k arcs
    Med {
        #[command(flatten)]
        input: InputArg,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 100_000_000)]
        enum_budget: u64,
    },
    /// Generate a lambda-connected instance
    Gen {
        #[arg(long, value_enum)]
        model: GenModel,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        blocks: Option<usize>,
        #[arg(long)]
        block_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = false)]
        directed: bool,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
    /// Brute-force mirrors of solve and solve-weighted
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum GenModel {
    HamUnion,
    BlobCycle,
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    Solve {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        lambda: usize,
        #[arg(short)]
        k: usize,
        /// Lift the small-instance guard
        #[arg(long, default_value_t = false)]
        allow_large: bool,
    },
    SolveWeighted {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        lambda: usize,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = false)]
        allow_large: bool,
    },
}

/// Parses argv, runs the command, prints its report, returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{}", e);
            return EXIT_OK;
        }
        Err(e) => {
            eprint!("{}", e);
            return EXIT_INPUT;
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            let code = match err {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                Error::InternalInconsistency(_) => EXIT_INCONSISTENT,
                _ => EXIT_INPUT,
            };
            let report = Report {
                status: Some(Status::Error),
                message: Some(err.to_string()),
                ..Default::default()
            };
            print!("{}", report);
            code
        }
    }
}

fn dispatch(cmd: Cmd) -> crate::Result<i32> {
    match cmd {
        Cmd::Classify {
            input,
            lambda,
            restrict,
        } => {
            let g = parse_file(&input.input)?;
            let restrict_set = match restrict {
                Some(path) => Some(read_edge_list(&path, &g)?),
                None => None,
            };
            let classification = crate::classify::classify_edges(
                &g,
                &crate::graph::EdgeMask::empty(&g),
                lambda,
                restrict_set.as_ref(),
            )?;
            for e in g.edge_ids() {
                if classification.deletable.contains(&e) {
                    println!("edge {} deletable", e.index() + 1);
                } else if classification.undeletable.contains(&e) {
                    println!("edge {} undeletable", e.index() + 1);
                }
            }
            println!("deletable_count {}", classification.deletable.len());
            println!("undeletable_count {}", classification.undeletable.len());
            Ok(EXIT_OK)
        }
        Cmd::Solve {
            input,
            lambda,
            k,
            enum_budget,
        } => {
            let g = parse_file(&input.input)?;
            let cfg = SolveConfig { enum_budget };
            let (found, info) = find_deletion_set_with_report(&g, lambda, k, &cfg)?;
            let mut report = Report {
                lambda: Some(lambda),
                k: Some(k),
                irrelevant_count: Some(info.irrelevant_count),
                candidate_count: info.candidate_count,
                ..Default::default()
            };
            match found {
                Some(ds) => {
                    report.status = Some(Status::DeletionSet);
                    report.edges = Some(ds.edges.iter().map(|e| e.index() + 1).collect());
                    report.verified = Some(ds.verified);
                    print!("{}", report);
                    Ok(EXIT_OK)
                }
                None => {
                    report.status = Some(Status::NoSolution);
                    print!("{}", report);
                    Ok(EXIT_NO)
                }
            }
        }
        Cmd::SolveWeighted {
            input,
            lambda,
            k,
            enum_budget,
        } => {
            let g = parse_file(&input.input)?;
            let sol = solve_weighted(&g, lambda, k, enum_budget)?;
            let report = Report {
                status: Some(Status::DeletionSet),
                lambda: Some(lambda),
                k: Some(k),
                edges: Some(sol.edges.iter().map(|e| e.index() + 1).collect()),
                weight: Some(sol.weight),
                verified: Some(sol.verified),
                ..Default::default()
            };
            print!("{}", report);
            Ok(EXIT_OK)
        }
        Cmd::Verify {
            input,
            lambda,
            remove,
        } => {
            let g = parse_file(&input.input)?;
            let edges = to_edge_ids(&remove, &g)?;
            let mask = crate::graph::EdgeMask::from_edges(&g, &edges)?;
            let ok = crate::flow::is_lambda_connected(&g, &mask, lambda)?;
            let report = Report {
                status: Some(if ok {
                    Status::DeletionSet
                } else {
                    Status::NoSolution
                }),
                lambda: Some(lambda),
                edges: Some(remove.clone()),
                verified: Some(ok),
                ..Default::default()
            };
            print!("{}", report);
            Ok(if ok { EXIT_OK } else { EXIT_NO })
        }
        Cmd::Med {
            input,
            k,
            enum_budget,
        } => {
            let g = parse_file(&input.input)?;
            let cfg = SolveConfig { enum_budget };
            match minimum_equivalent_digraph(&g, k, &cfg)? {
                Some(med) => {
                    let report = Report {
                        status: Some(Status::DeletionSet),
                        k: Some(k),
                        edges: Some(med.edges.iter().map(|e| e.index() + 1).collect()),
                        verified: Some(med.verified),
                        ..Default::default()
                    };
                    print!("{}", report);
                    Ok(EXIT_OK)
                }
                None => {
                    let report = Report {
                        status: Some(Status::NoSolution),
                        k: Some(k),
                        ..Default::default()
                    };
                    print!("{}", report);
                    Ok(EXIT_NO)
                }
            }
        }
        Cmd::Gen {
            model,
            n,
            lambda,
            blocks,
            block_size,
            extra,
            seed,
            directed,
            output,
        } => {
            let g = match model {
                GenModel::HamUnion => {
                    let n = n.ok_or_else(|| {
                        Error::Precondition("--n is required for ham-union".into())
                    })?;
                    gen_ham_union(n, lambda, extra, seed, directed)?
                }
                GenModel::BlobCycle => {
                    let blocks = blocks.ok_or_else(|| {
                        Error::Precondition("--blocks is required for blob-cycle".into())
                    })?;
                    let block_size = block_size.ok_or_else(|| {
                        Error::Precondition("--block-size is required for blob-cycle".into())
                    })?;
                    gen_blob_cycle(blocks, block_size, lambda, seed)?
                }
            };
            write_file(&g, &output)?;
            println!(
                "generated n {} m {} directed {}",
                g.vertex_count(),
                g.edge_count(),
                g.is_directed() as u8
            );
            Ok(EXIT_OK)
        }
        Cmd::Oracle { cmd } => match cmd {
            OracleCmd::Solve {
                input,
                lambda,
                k,
                allow_large,
            } => {
                let g = parse_file(&input.input)?;
                let (best, witness) =
                    oracle_max_deletion(&g, lambda, k, &BTreeSet::new(), allow_large)?;
                let mut report = Report {
                    lambda: Some(lambda),
                    k: Some(k),
                    ..Default::default()
                };
                if best >= k {
                    report.status = Some(Status::DeletionSet);
                    report.edges = Some(witness.iter().map(|e| e.index() + 1).collect());
                    report.verified = Some(true);
                    print!("{}", report);
                    Ok(EXIT_OK)
                } else {
                    report.status = Some(Status::NoSolution);
                    print!("{}", report);
                    Ok(EXIT_NO)
                }
            }
            OracleCmd::SolveWeighted {
                input,
                lambda,
                k,
                allow_large,
            } => {
                let g = parse_file(&input.input)?;
                let (weight, witness) =
                    oracle_max_weight(&g, lambda, k, &BTreeSet::new(), allow_large)?;
                let report = Report {
                    status: Some(Status::DeletionSet),
                    lambda: Some(lambda),
                    k: Some(k),
                    edges: Some(witness.iter().map(|e| e.index() + 1).collect()),
                    weight: Some(weight),
                    verified: Some(true),
                    ..Default::default()
                };
                print!("{}", report);
                Ok(EXIT_OK)
            }
        },
    }
}

fn to_edge_ids(one_based: &[usize], g: &Graph) -> crate::Result<Vec<EdgeId>> {
    one_based
        .iter()
        .map(|&i| {
            if i == 0 || i > g.edge_count() {
                Err(Error::Precondition(format!(
                    "edge index {} out of range 1..={}",
                    i,
                    g.edge_count()
                )))
            } else {
                Ok(EdgeId(i - 1))
            }
        })
        .collect()
}

fn read_edge_list(path: &PathBuf, g: &Graph) -> crate::Result<BTreeSet<EdgeId>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = BTreeSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        for token in line.split_ascii_whitespace() {
            let idx: usize = token.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("invalid edge index `{}`", token),
            })?;
            if idx == 0 || idx > g.edge_count() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("edge index {} out of range 1..={}", idx, g.edge_count()),
                });
            }
            out.insert(EdgeId(idx - 1));
        }
    }
    Ok(out)
}

