//! Line-oriented instance format.
//!
//! ```text
//! # comment
//! problem msl
//! n 4
//! terminals 0 2
//! age 3
//! budget 5
//! e 0 1
//! l 0 1 : 1 3
//! ```
//!
//! Directed graphs add a `directed` line and use `a u v` arc lines. Emission
//! is canonical (fixed header order, sorted edges and labels), so parsing an
//! emitted file and emitting it again reproduces the same bytes.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Edge, StaticGraph, Vertex};
use crate::temporal::{Host, Labeling, TemporalGraph, Time};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Ml,
    Mal,
    Msl,
    Masl,
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ml" => Ok(Problem::Ml),
            "mal" => Ok(Problem::Mal),
            "msl" => Ok(Problem::Msl),
            "masl" => Ok(Problem::Masl),
            other => Err(format!("unknown problem '{other}'")),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Ml => "ml",
            Problem::Mal => "mal",
            Problem::Msl => "msl",
            Problem::Masl => "masl",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub problem: Option<Problem>,
    pub host: Host,
    pub terminals: Option<Vec<Vertex>>,
    pub age: Option<Time>,
    pub budget: Option<usize>,
    pub labeling: Labeling,
}

impl InstanceFile {
    pub fn from_graph(g: StaticGraph) -> Self {
        InstanceFile {
            problem: None,
            host: Host::Undirected(g),
            terminals: None,
            age: None,
            budget: None,
            labeling: Labeling::new(),
        }
    }

    pub fn from_temporal(tg: TemporalGraph) -> Self {
        let (host, labeling) = tg.into_parts();
        InstanceFile {
            problem: None,
            host,
            terminals: None,
            age: None,
            budget: None,
            labeling,
        }
    }

    pub fn graph(&self) -> Result<&StaticGraph> {
        match &self.host {
            Host::Undirected(g) => Ok(g),
            Host::Directed(_) => Err(Error::InvalidInput("expected an undirected graph".into())),
        }
    }

    pub fn digraph(&self) -> Result<&DirectedGraph> {
        match &self.host {
            Host::Directed(d) => Ok(d),
            Host::Undirected(_) => Err(Error::InvalidInput("expected a directed graph".into())),
        }
    }

    pub fn temporal(&self) -> Result<TemporalGraph> {
        TemporalGraph::with_host(self.host.clone(), self.labeling.clone())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

fn no_more<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match toks.next() {
        Some(t) => Err(parse_err(line, format!("unexpected token '{t}'"))),
        None => Ok(()),
    }
}

pub fn parse(text: &str) -> Result<InstanceFile> {
    let mut problem = None;
    let mut n: Option<usize> = None;
    let mut directed = false;
    let mut host: Option<Host> = None;
    let mut terminals = None;
    let mut age = None;
    let mut budget = None;
    let mut lists: Vec<(usize, Edge, Vec<Time>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(key) = toks.next() else { continue };
        match key {
            "problem" => {
                let p = toks
                    .next()
                    .ok_or_else(|| parse_err(line, "missing problem name"))?;
                problem = Some(p.parse().map_err(|m| parse_err(line, m))?);
                no_more(toks, line)?;
            }
            "n" => {
                if n.is_some() {
                    return Err(parse_err(line, "repeated 'n' line"));
                }
                n = Some(num(toks.next(), line, "vertex count")?);
                no_more(toks, line)?;
            }
            "directed" => {
                if host.is_some() {
                    return Err(parse_err(line, "'directed' must precede edges"));
                }
                directed = true;
                no_more(toks, line)?;
            }
            "terminals" => {
                let ts = toks
                    .map(|t| num(Some(t), line, "terminal"))
                    .collect::<Result<Vec<Vertex>>>()?;
                terminals = Some(ts);
            }
            "age" => {
                age = Some(num(toks.next(), line, "age")?);
                no_more(toks, line)?;
            }
            "budget" => {
                budget = Some(num(toks.next(), line, "budget")?);
                no_more(toks, line)?;
            }
            "e" | "a" => {
                let n = n.ok_or_else(|| parse_err(line, "'n' must precede edges"))?;
                if (key == "a") != directed {
                    return Err(parse_err(
                        line,
                        if directed {
                            "use 'a' lines in a directed file"
                        } else {
                            "use 'e' lines in an undirected file"
                        },
                    ));
                }
                let u: Vertex = num(toks.next(), line, "endpoint")?;
                let v: Vertex = num(toks.next(), line, "endpoint")?;
                no_more(toks, line)?;
                let h = host.get_or_insert_with(|| {
                    if directed {
                        Host::Directed(DirectedGraph::new(n, []).expect("empty digraph"))
                    } else {
                        Host::Undirected(StaticGraph::empty(n))
                    }
                });
                let added = match h {
                    Host::Directed(d) => d.add_arc(u, v),
                    Host::Undirected(g) => g.add_edge(u, v),
                };
                added.map_err(|e| parse_err(line, e.to_string()))?;
            }
            "l" => {
                let u: Vertex = num(toks.next(), line, "endpoint")?;
                let v: Vertex = num(toks.next(), line, "endpoint")?;
                if toks.next() != Some(":") {
                    return Err(parse_err(line, "expected ':' after the edge"));
                }
                let times = toks
                    .map(|t| num(Some(t), line, "label"))
                    .collect::<Result<Vec<Time>>>()?;
                let e = if directed {
                    Edge::arc(u, v)
                } else {
                    Edge::undirected(u, v)
                };
                lists.push((line, e, times));
            }
            other => return Err(parse_err(line, format!("unknown keyword '{other}'"))),
        }
    }

    let n = n.ok_or_else(|| parse_err(0, "missing 'n' line"))?;
    let host = host.unwrap_or_else(|| {
        if directed {
            Host::Directed(DirectedGraph::new(n, []).expect("empty digraph"))
        } else {
            Host::Undirected(StaticGraph::empty(n))
        }
    });
    let mut labeling = Labeling::new();
    for (line, e, times) in lists {
        let one =
            Labeling::from_lists([(e, times)]).map_err(|err| parse_err(line, err.to_string()))?;
        if one.iter().next().is_some() && !labeling.labels(e).is_empty() {
            return Err(parse_err(line, format!("labels for {e} given twice")));
        }
        labeling.merge(&one);
    }
    if let Some(ts) = &terminals {
        if let Some(&v) = ts.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    // keys must be edges of the host
    TemporalGraph::with_host(host.clone(), labeling.clone())?;
    Ok(InstanceFile {
        problem,
        host,
        terminals,
        age,
        budget,
        labeling,
    })
}

pub fn emit(file: &InstanceFile) -> String {
    let mut out = String::new();
    if let Some(p) = file.problem {
        writeln!(out, "problem {p}").unwrap();
    }
    writeln!(out, "n {}", file.host.n()).unwrap();
    if file.host.is_directed() {
        out.push_str("directed\n");
    }
    if let Some(ts) = &file.terminals {
        out.push_str("terminals");
        for t in ts {
            write!(out, " {t}").unwrap();
        }
        out.push('\n');
    }
    if let Some(a) = file.age {
        writeln!(out, "age {a}").unwrap();
    }
    if let Some(k) = file.budget {
        writeln!(out, "budget {k}").unwrap();
    }
    match &file.host {
        Host::Undirected(g) => {
            for e in g.edges() {
                writeln!(out, "e {} {}", e.0, e.1).unwrap();
            }
        }
        Host::Directed(d) => {
            for e in d.arcs() {
                writeln!(out, "a {} {}", e.0, e.1).unwrap();
            }
        }
    }
    out.push_str(&emit_labeling(&file.labeling));
    out
}

/// `l u v : t1 t2 ...` lines in edge order.
pub fn emit_labeling(lab: &Labeling) -> String {
    let mut out = String::new();
    for (e, ts) in lab.iter() {
        write!(out, "l {} {} :", e.0, e.1).unwrap();
        for t in ts {
            write!(out, " {t}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Host> {
    Ok(parse(text)?.host)
}
