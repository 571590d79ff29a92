//! JSON curve and graph files.
//!
//! Curve file:
//!
//! ```json
//! {"name": "cusp", "branches": [{"x": [[2, "1"]], "y": [[3, "1"]]}]}
//! ```
//!
//! Graph file (branches numbered from 1):
//!
//! ```json
//! {"r": 1, "vertices": [{"id": 1, "m": [2]}], "edges": [],
//!  "arrows": [{"vertex": 1, "branch": 1}], "root": 1}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::{BranchParam, Curve};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rat, UniPoly};
use crate::resolution::{Arrow, ResGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub branches: Vec<BranchFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchFile {
    pub x: Vec<(u32, String)>,
    pub y: Vec<(u32, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub r: usize,
    pub vertices: Vec<VertexFile>,
    pub edges: Vec<(u32, u32)>,
    pub arrows: Vec<ArrowFile>,
    pub root: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexFile {
    pub id: u32,
    pub m: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowFile {
    pub vertex: u32,
    pub branch: usize,
}

fn parse_poly(terms: &[(u32, String)]) -> Result<UniPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        let c = parse_rat(c).ok_or_else(|| Error::Parse(format!("bad coefficient {c:?}")))?;
        out.push((*e, c));
    }
    Ok(UniPoly::from_terms(out))
}

fn emit_poly(p: &UniPoly) -> Vec<(u32, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

impl CurveFile {
    pub fn to_curve(&self) -> Result<Curve> {
        let branches = self
            .branches
            .iter()
            .map(|b| Ok(BranchParam::new(parse_poly(&b.x)?, parse_poly(&b.y)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut c = Curve::new(branches)?;
        c.name = self.name.clone();
        Ok(c)
    }

    pub fn from_curve(c: &Curve) -> Self {
        Self {
            name: c.name.clone(),
            branches: c
                .branches()
                .iter()
                .map(|b| BranchFile {
                    x: emit_poly(&b.x),
                    y: emit_poly(&b.y),
                })
                .collect(),
        }
    }
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<ResGraph> {
        if self.r == 0 {
            return Err(Error::Parse("r must be positive".into()));
        }
        let arrows = self
            .arrows
            .iter()
            .map(|a| match a.branch {
                0 => Err(Error::Parse("branches are numbered from 1".into())),
                b => Ok(Arrow {
                    vertex: a.vertex,
                    branch: b - 1,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        ResGraph::new(
            self.r,
            self.vertices
                .iter()
                .map(|v| Vertex {
                    id: v.id,
                    m: v.m.clone(),
                })
                .collect(),
            self.edges.iter().copied(),
            arrows,
            self.root,
        )
    }

    pub fn from_graph(g: &ResGraph) -> Self {
        Self {
            r: g.r(),
            vertices: g
                .vertices()
                .iter()
                .map(|v| VertexFile {
                    id: v.id,
                    m: v.m.clone(),
                })
                .collect(),
            edges: g.edges().collect(),
            arrows: g
                .arrows()
                .iter()
                .map(|a| ArrowFile {
                    vertex: a.vertex,
                    branch: a.branch + 1,
                })
                .collect(),
            root: g.root(),
        }
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_curve(text: &str) -> Result<Curve> {
    from_json::<CurveFile>(text)?.to_curve()
}

pub fn parse_graph(text: &str) -> Result<ResGraph> {
    from_json::<GraphFile>(text)?.to_graph()
}

pub fn parse_curve_file(path: impl AsRef<Path>) -> Result<Curve> {
    parse_curve(&read(path.as_ref())?)
}

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<ResGraph> {
    parse_graph(&read(path.as_ref())?)
}

pub fn emit_curve(c: &Curve) -> String {
    let mut s = serde_json::to_string_pretty(&CurveFile::from_curve(c)).expect("serializable");
    s.push('\n');
    s
}

pub fn emit_graph(g: &ResGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("serializable");
    s.push('\n');
    s
}

/// Either kind of input file, told apart by its fields.
#[derive(Debug)]
pub enum Input {
    Curve(Curve),
    Graph(ResGraph),
}

pub fn parse_input(text: &str) -> Result<Input> {
    let value: serde_json::Value = from_json(text)?;
    if value.get("branches").is_some() {
        Ok(Input::Curve(parse_curve(text)?))
    } else if value.get("vertices").is_some() {
        Ok(Input::Graph(parse_graph(text)?))
    } else {
        Err(Error::Parse("neither a curve nor a graph file".into()))
    }
}

pub fn parse_input_file(path: impl AsRef<Path>) -> Result<Input> {
    parse_input(&read(path.as_ref())?)
}
