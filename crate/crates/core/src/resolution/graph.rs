use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactmath::ExpVec;

/// An exceptional divisor `E_sigma` with its multiplicity vector `m^sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: u32,
    pub m: Vec<u64>,
}

impl Vertex {
    pub fn m_vec(&self) -> ExpVec {
        ExpVec::new(self.m.iter().map(|&a| a as i64).collect())
    }
}

/// Strict transform of branch `branch` (0-based) meeting divisor `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arrow {
    pub vertex: u32,
    pub branch: usize,
}

/// Dual graph of an embedded resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResGraph {
    r: usize,
    vertices: Vec<Vertex>,
    edges: BTreeSet<(u32, u32)>,
    arrows: Vec<Arrow>,
    root: u32,
}

fn edge(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

impl ResGraph {
    /// Builds a graph and checks that it is a tree with one arrow per branch
    /// and positive multiplicities.
    pub fn new(
        r: usize,
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = (u32, u32)>,
        mut arrows: Vec<Arrow>,
        root: u32,
    ) -> Result<Self> {
        arrows.sort();
        let g = Self {
            r,
            vertices,
            edges: edges.into_iter().map(|(a, b)| edge(a, b)).collect(),
            arrows,
            root,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.id) {
                return Err(Error::DuplicateVertex(v.id));
            }
            if v.m.len() != self.r {
                return Err(Error::DimensionMismatch {
                    expected: self.r,
                    found: v.m.len(),
                });
            }
            if v.m.contains(&0) {
                return Err(Error::InvalidMultiplicity { vertex: v.id });
            }
        }
        if !seen.contains(&self.root) {
            return Err(Error::UnknownVertex(self.root));
        }
        for &(a, b) in &self.edges {
            for id in [a, b] {
                if !seen.contains(&id) {
                    return Err(Error::UnknownVertex(id));
                }
            }
            if a == b {
                return Err(Error::NotATree(format!("loop at vertex {a}")));
            }
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err(Error::NotATree(format!(
                "{} vertices but {} edges",
                self.vertices.len(),
                self.edges.len()
            )));
        }
        // n - 1 edges and connected implies acyclic
        let reached = self.bfs_order().len();
        if reached != self.vertices.len() {
            return Err(Error::NotATree(format!(
                "only {reached} of {} vertices reachable from the root",
                self.vertices.len()
            )));
        }
        for a in &self.arrows {
            if !seen.contains(&a.vertex) {
                return Err(Error::UnknownVertex(a.vertex));
            }
        }
        let mut counts = vec![0usize; self.r];
        for a in &self.arrows {
            if a.branch >= self.r {
                return Err(Error::ArrowCountMismatch {
                    branch: a.branch + 1,
                    count: 1,
                });
            }
            counts[a.branch] += 1;
        }
        if let Some((i, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 1) {
            return Err(Error::ArrowCountMismatch {
                branch: i + 1,
                count,
            });
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, id: u32) -> Result<&Vertex> {
        self.vertices
            .iter()
            .find(|v| v.id == id)
            .ok_or(Error::UnknownVertex(id))
    }

    /// Vertex carrying the arrow of `branch` (0-based).
    pub fn arrow_vertex(&self, branch: usize) -> u32 {
        self.arrows
            .iter()
            .find(|a| a.branch == branch)
            .map(|a| a.vertex)
            .expect("validated: one arrow per branch")
    }

    pub fn neighbors(&self, id: u32) -> Vec<u32> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn arrow_count(&self, id: u32) -> usize {
        self.arrows.iter().filter(|a| a.vertex == id).count()
    }

    /// Number of other components of the total transform meeting `E_id`.
    pub fn degree(&self, id: u32) -> usize {
        self.neighbors(id).len() + self.arrow_count(id)
    }

    /// Euler characteristic of `E_id` minus its intersection points with the
    /// rest of the total transform.
    pub fn chi_open(&self, id: u32) -> Result<i64> {
        self.vertex(id)?;
        Ok(2 - self.degree(id) as i64)
    }

    /// Vertices in breadth-first order from the root, with parents.
    pub(crate) fn bfs_order(&self) -> Vec<(u32, Option<u32>)> {
        let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut out = vec![(self.root, None)];
        let mut seen = BTreeSet::from([self.root]);
        let mut i = 0;
        while i < out.len() {
            let (v, _) = out[i];
            for &w in adj.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
                if seen.insert(w) {
                    out.push((w, Some(v)));
                }
            }
            i += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: u32, m: &[u64]) -> Vertex {
        Vertex { id, m: m.to_vec() }
    }

    fn cusp_graph() -> ResGraph {
        ResGraph::new(
            1,
            vec![v(1, &[2]), v(2, &[3]), v(3, &[6])],
            [(1, 3), (2, 3)],
            vec![Arrow {
                vertex: 3,
                branch: 0,
            }],
            1,
        )
        .unwrap()
    }

    #[test]
    fn chi_values() {
        let node = ResGraph::new(
            2,
            vec![v(1, &[1, 1])],
            [],
            vec![
                Arrow {
                    vertex: 1,
                    branch: 0,
                },
                Arrow {
                    vertex: 1,
                    branch: 1,
                },
            ],
            1,
        )
        .unwrap();
        assert_eq!(node.chi_open(1).unwrap(), 0);
        assert_eq!(cusp_graph().chi_open(3).unwrap(), -1);
        assert_eq!(cusp_graph().chi_open(1).unwrap(), 1);
        assert_eq!(
            cusp_graph().chi_open(9).unwrap_err(),
            Error::UnknownVertex(9)
        );
    }

    #[test]
    fn isolated_vertex_has_chi_two() {
        // Not a valid resolution graph (no arrow), so build it raw.
        let g = ResGraph {
            r: 1,
            vertices: vec![v(1, &[1])],
            edges: BTreeSet::new(),
            arrows: vec![],
            root: 1,
        };
        assert_eq!(g.chi_open(1).unwrap(), 2);
    }

    #[test]
    fn rejects_non_trees() {
        let err = ResGraph::new(
            1,
            vec![v(1, &[2]), v(2, &[3]), v(3, &[6])],
            [(1, 2), (2, 3), (1, 3)],
            vec![Arrow {
                vertex: 3,
                branch: 0,
            }],
            1,
        )
        .unwrap_err();
        assert_eq!(err.name(), "NotATree");
        let err = ResGraph::new(
            1,
            vec![v(1, &[2]), v(2, &[3]), v(3, &[6]), v(4, &[1])],
            [(1, 2), (2, 3), (1, 3)],
            vec![Arrow {
                vertex: 3,
                branch: 0,
            }],
            1,
        )
        .unwrap_err();
        assert_eq!(err.name(), "NotATree");
    }

    #[test]
    fn rejects_missing_arrows() {
        let err = ResGraph::new(
            2,
            vec![v(1, &[1, 1])],
            [],
            vec![Arrow {
                vertex: 1,
                branch: 0,
            }],
            1,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::ArrowCountMismatch {
                branch: 2,
                count: 0
            }
        );
    }

    #[test]
    fn chi_bookkeeping() {
        let g = cusp_graph();
        let total: i64 = g.vertices().iter().map(|x| g.chi_open(x.id).unwrap()).sum();
        let n = g.vertices().len() as i64;
        let e = g.edges().count() as i64;
        assert_eq!(total, 2 * n - 2 * e - g.arrows().len() as i64);
    }
}
