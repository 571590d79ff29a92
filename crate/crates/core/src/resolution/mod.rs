//! Embedded resolution, the dual graph, and the Alexander polynomial read off
//! the resolution.

mod classify;
mod engine;
mod graph;
mod series;

pub use classify::{classify_graph, Tail, VertexClass};
pub use engine::{resolve, Center, Resolution, ResolveOptions, DEFAULT_BUDGET};
pub use graph::{Arrow, ResGraph, Vertex};

use crate::error::Result;
use crate::exactmath::{expand_truncated, ExpVec, MultiPoly, Order};

/// Alexander polynomial from a resolution graph:
/// `prod_sigma (1 - t^{m^sigma})^{-chi(E°_sigma)}`.
///
/// For `r > 1` the quotient is computed exactly and is a polynomial with
/// constant term 1. For `r = 1` the product is the monodromy zeta function, a
/// power series, returned truncated to exponents `<= bound`.
pub fn en_alexander(g: &ResGraph, bound: i64) -> Result<MultiPoly> {
    let r = g.r();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for v in g.vertices() {
        let chi = g.chi_open(v.id)?;
        match chi {
            c if c < 0 => num.push((v.m_vec(), (-c) as u32)),
            c if c > 0 => den.push((v.m_vec(), c as u32)),
            _ => {}
        }
    }
    if r == 1 {
        return Ok(expand_truncated(1, &num, &den, bound));
    }
    let mut numerator = MultiPoly::one(r);
    for (m, k) in &num {
        numerator = numerator.mul(&MultiPoly::one_minus(m).pow(*k))?;
    }
    let mut denominator = MultiPoly::one(r);
    for (m, k) in &den {
        denominator = denominator.mul(&MultiPoly::one_minus(m).pow(*k))?;
    }
    numerator.exact_div(&denominator)
}

/// Intersection multiplicities `(C_i . C_j)` by Noether's formula: the sum of
/// `mult_i * mult_j` over the infinitely near points shared by both branches.
/// The diagonal is `Infinite`.
pub fn noether_intersections(res: &Resolution) -> Vec<Vec<Order>> {
    let r = res.graph.r();
    let mut table = vec![vec![Order::Finite(0); r]; r];
    for center in &res.centers {
        let m = &center.multiplicities;
        for i in 0..r {
            for j in 0..r {
                if i != j {
                    table[i][j] = table[i][j] + Order::Finite(m[i] * m[j]);
                }
            }
        }
    }
    for (i, row) in table.iter_mut().enumerate() {
        row[i] = Order::Infinite;
    }
    table
}

/// Conductor of branch `i` alone, `sum mult (mult - 1)` over its infinitely
/// near points.
pub fn branch_conductor(res: &Resolution, i: usize) -> u64 {
    res.centers
        .iter()
        .map(|c| c.multiplicities[i])
        .filter(|&k| k > 0)
        .map(|k| k * (k - 1))
        .sum()
}

/// Upper bound for the conductor of the semigroup of values:
/// `B_i = c(C_i) + sum_{j != i} (C_i . C_j)`.
pub fn conductor_bound(res: &Resolution) -> ExpVec {
    let r = res.graph.r();
    let inter = noether_intersections(res);
    ExpVec::new(
        (0..r)
            .map(|i| {
                let cross: u64 = (0..r)
                    .filter(|&j| j != i)
                    .map(|j| inter[i][j].finite().expect("distinct branches"))
                    .sum();
                (branch_conductor(res, i) + cross) as i64
            })
            .collect(),
    )
}

/// Resolution data of an irreducible branch read from its dual graph: the
/// multiplicities at the dead ends and the integers `n_j` with
/// `m^{st_j} = (n_j + 1) m^{alpha_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeadEndData {
    /// `m` at the root dead end followed by the other dead ends, ascending.
    pub generators: Vec<u64>,
    /// `n_j` for each non-root dead end; `None` where the star multiplicity is
    /// not a multiple of the dead-end multiplicity.
    pub n: Vec<Option<u64>>,
}

impl DeadEndData {
    /// `sum n_j g_j - g_0 + 1`, the conductor predicted by the graph.
    pub fn conductor(&self) -> Option<i64> {
        let mut acc = -(self.generators[0] as i64) + 1;
        for (g, n) in self.generators[1..].iter().zip(&self.n) {
            acc += (*n)? as i64 * *g as i64;
        }
        Some(acc)
    }
}

/// Dead-end data of a single-branch graph. `None` if `r != 1`.
pub fn dead_end_data(g: &ResGraph) -> Option<DeadEndData> {
    if g.r() != 1 {
        return None;
    }
    let class = classify_graph(g);
    let m = |id: u32| g.vertex(id).expect("known vertex").m[0];
    let root = g.root();
    let mut others: Vec<(u64, Option<u64>)> = class
        .tails()
        .into_iter()
        .filter(|t| t.dead_end != root)
        .map(|t| {
            let (md, ms) = (m(t.dead_end), m(t.star));
            let n = (ms % md == 0).then(|| ms / md - 1);
            (md, n)
        })
        .collect();
    others.sort();
    let mut generators = vec![m(root)];
    generators.extend(others.iter().map(|x| x.0));
    Some(DeadEndData {
        generators,
        n: others.into_iter().map(|x| x.1).collect(),
    })
}
