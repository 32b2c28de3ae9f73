//! Text file format and the machine-readable result schema.
//!
//! ```text
//! c optional comment
//! p ecs <n> <m> <directed:0|1> <weighted:0|1>
//! e <u> <v> [weight]
//! ```
//!
//! Vertices are 1-based in files, 0-based in memory; edge order in the file
//! defines edge ids. `parse(emit(g))` reproduces the graph exactly,
//! including edge order and weights.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::path::Path;

pub fn parse_str(input: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, bool, bool)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut weights: Vec<f64> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = lineno + 1;
        let text = raw.trim();
        if text.is_empty() || text == "c" || text.starts_with("c ") {
            continue;
        }
        let fields: Vec<&str> = text.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: "duplicate problem line".into(),
                    });
                }
                if fields.len() != 6 || fields[1] != "ecs" {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `p ecs <n> <m> <directed> <weighted>`".into(),
                    });
                }
                let n = parse_num::<usize>(fields[2], line, "vertex count")?;
                let m = parse_num::<usize>(fields[3], line, "edge count")?;
                let directed = parse_bit(fields[4], line, "directed flag")?;
                let weighted = parse_bit(fields[5], line, "weighted flag")?;
                header = Some((n, m, directed, weighted));
            }
            "e" => {
                let (n, _, _, weighted) = header.ok_or(Error::Parse {
                    line,
                    msg: "edge before problem line".into(),
                })?;
                let expect = if weighted { 4 } else { 3 };
                if fields.len() != expect {
                    return Err(Error::Parse {
                        line,
                        msg: format!(
                            "expected `e <u> <v>{}`",
                            if weighted { " <weight>" } else { "" }
                        ),
                    });
                }
                let u = parse_num::<usize>(fields[1], line, "tail")?;
                let v = parse_num::<usize>(fields[2], line, "head")?;
                if u < 1 || u > n || v < 1 || v > n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("endpoint out of range 1..={}", n),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: "self-loops are not allowed".into(),
                    });
                }
                if weighted {
                    let w = parse_num::<f64>(fields[3], line, "weight")?;
                    if !w.is_finite() || w < 0.0 {
                        return Err(Error::Parse {
                            line,
                            msg: "weight must be a non-negative real".into(),
                        });
                    }
                    weights.push(w);
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown record `{}`", fields[0]),
                })
            }
        }
    }
    let (n, m, directed, weighted) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header promises {} edges, file has {}", m, edges.len()),
        });
    }
    Graph::with_weights(n, edges, directed, weighted.then_some(weights)).map_err(|e| {
        Error::Parse {
            line: 0,
            msg: e.to_string(),
        }
    })
}

pub fn parse_file<P: AsRef<Path>>(path: P) -> Result<Graph> {
    parse_str(&std::fs::read_to_string(path)?)
}

pub fn emit(g: &Graph) -> String {
    let weighted = g.weights().is_some();
    let mut out = format!(
        "p ecs {} {} {} {}\n",
        g.vertex_count(),
        g.edge_count(),
        g.is_directed() as u8,
        weighted as u8
    );
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        if weighted {
            out.push_str(&format!("e {} {} {}\n", u + 1, v + 1, g.weight(e)));
        } else {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
    }
    out
}

pub fn write_file<P: AsRef<Path>>(g: &Graph, path: P) -> Result<()> {
    Ok(std::fs::write(path, emit(g))?)
}

/// Result schema statuses.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Status {
    DeletionSet,
    NoSolution,
    BoundCertificate,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::DeletionSet => "deletion_set",
            Status::NoSolution => "no_solution",
            Status::BoundCertificate => "bound_certificate",
            Status::Error => "error",
        }
    }
}

/// Machine-readable report printed by the CLI: `key value` lines in a fixed
/// order, edges ascending and 1-based.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub status: Option<Status>,
    pub lambda: Option<usize>,
    pub k: Option<usize>,
    pub edges: Option<Vec<usize>>,
    pub weight: Option<f64>,
    pub verified: Option<bool>,
    pub irrelevant_count: Option<usize>,
    pub candidate_count: Option<usize>,
    pub message: Option<String>,
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(s) = self.status {
            writeln!(f, "status {}", s.as_str())?;
        }
        if let Some(l) = self.lambda {
            writeln!(f, "lambda {}", l)?;
        }
        if let Some(k) = self.k {
            writeln!(f, "k {}", k)?;
        }
        if let Some(edges) = &self.edges {
            let list: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
            writeln!(f, "edges {}", list.join(","))?;
        }
        if let Some(w) = self.weight {
            writeln!(f, "weight {}", w)?;
        }
        if let Some(v) = self.verified {
            writeln!(f, "verified {}", v)?;
        }
        if let Some(i) = self.irrelevant_count {
            writeln!(f, "irrelevant_count {}", i)?;
        }
        if let Some(c) = self.candidate_count {
            writeln!(f, "candidate_count {}", c)?;
        }
        if let Some(m) = &self.message {
            writeln!(f, "message {}", m)?;
        }
        Ok(())
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {}: `{}`", what, s),
    })
}

fn parse_bit(s: &str, line: usize, what: &str) -> Result<bool> {
    match s {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::Parse {
            line,
            msg: format!("{} must be 0 or 1, got `{}`", what, s),
        }),
    }
}
