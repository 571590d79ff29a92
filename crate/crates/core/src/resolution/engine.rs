//! Embedded resolution by iterated point blow-ups of parametrized branches.
//!
//! Every infinitely near point is tracked in local coordinates `(u, v)` in
//! which the exceptional divisors through the point are among the axes
//! `{u = 0}` and `{v = 0}`. Blowing up the origin of such a chart:
//!
//! * if `ord u(tau) <= ord v(tau)` the branch moves to the chart
//!   `(u, v/u)` and meets the new divisor `{u = 0}` at `v/u = c`;
//! * otherwise it moves to `(u/v, v)` and meets the new divisor `{v = 0}`
//!   at the point where the old `{u = 0}` axis crosses it.

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exactmath::Rat;

use super::graph::{Arrow, ResGraph, Vertex};
use super::series::{Series, Unknown};

pub const DEFAULT_BUDGET: usize = 64;

const START_PRECISION: usize = 64;
const MAX_PRECISION: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    /// Maximal number of blow-up generations above the origin.
    pub budget: usize,
    /// Extra blow-ups of free points (points of a single divisor lying on no
    /// other component of the total transform), performed after resolving.
    pub extra_free_points: usize,
    /// Extra blow-ups at the points where strict transforms cross the
    /// exceptional divisor, cycling through the branches.
    pub extra_branch_points: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            extra_free_points: 0,
            extra_branch_points: 0,
        }
    }
}

impl ResolveOptions {
    pub fn with_budget(budget: usize) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

/// A blown-up point: the divisor it produced and the multiplicity of every
/// branch at it (0 for branches not passing through).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Center {
    pub vertex: u32,
    pub multiplicities: Vec<u64>,
}

/// Result of [`resolve`]: the dual graph plus the record of blown-up centers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub graph: ResGraph,
    pub centers: Vec<Center>,
}

#[derive(Clone, Debug)]
struct Resident {
    branch: usize,
    u: Series,
    v: Series,
}

#[derive(Clone, Debug)]
struct Point {
    residents: Vec<Resident>,
    u_axis: Option<usize>,
    v_axis: Option<usize>,
    generation: usize,
}

#[derive(Debug)]
enum Failure {
    Precision(usize),
    Hard(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Hard(e)
    }
}

struct Engine {
    r: usize,
    cap: usize,
    budget: usize,
    m: Vec<Vec<u64>>,
    edges: Vec<(usize, usize)>,
    centers: Vec<Center>,
    /// Final point of every branch.
    finals: Vec<Option<Point>>,
}

fn known<T>(x: std::result::Result<T, Unknown>, branch: usize) -> std::result::Result<T, Failure> {
    x.map_err(|_| Failure::Precision(branch))
}

fn order_of(s: &Series, branch: usize) -> std::result::Result<Option<usize>, Failure> {
    Ok(known(s.ord_lead(), branch)?.map(|(k, _)| k))
}

impl Engine {
    fn new(r: usize, cap: usize, budget: usize) -> Self {
        Self {
            r,
            cap,
            budget,
            m: Vec::new(),
            edges: Vec::new(),
            centers: Vec::new(),
            finals: vec![None; r],
        }
    }

    /// A point is resolved when a single smooth branch crosses exactly one
    /// divisor transversally.
    fn is_resolved(p: &Point) -> std::result::Result<bool, Failure> {
        if p.residents.len() != 1 {
            return Ok(false);
        }
        let res = &p.residents[0];
        let ou = order_of(&res.u, res.branch)?;
        let ov = order_of(&res.v, res.branch)?;
        let smooth = ou == Some(1) || ov == Some(1);
        let transverse = match (p.u_axis, p.v_axis) {
            (Some(_), None) => ou == Some(1),
            (None, Some(_)) => ov == Some(1),
            _ => false,
        };
        Ok(smooth && transverse)
    }

    /// Blows up `p`, returning the points of the new divisor that carry
    /// branches.
    fn blow_up(&mut self, p: Point) -> std::result::Result<(usize, Vec<Point>), Failure> {
        let new = self.m.len();
        let mut mult = vec![0u64; self.r];
        for res in &p.residents {
            let ou = order_of(&res.u, res.branch)?;
            let ov = order_of(&res.v, res.branch)?;
            let k = match (ou, ov) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => unreachable!("validated branches are nonzero"),
            };
            mult[res.branch] = k as u64;
        }
        let mut m = mult.clone();
        for axis in [p.u_axis, p.v_axis].into_iter().flatten() {
            for (mi, a) in m.iter_mut().zip(&self.m[axis]) {
                *mi += a;
            }
        }
        self.m.push(m);
        self.centers.push(Center {
            vertex: new as u32 + 1,
            multiplicities: mult,
        });
        if let (Some(a), Some(b)) = (p.u_axis, p.v_axis) {
            self.edges.retain(|&e| e != (a.min(b), a.max(b)));
        }
        for axis in [p.u_axis, p.v_axis].into_iter().flatten() {
            self.edges.push((axis.min(new), axis.max(new)));
        }

        // Group residents by their point on the new divisor; `None` is the
        // point at infinity of the u-chart.
        let mut groups: Vec<(Option<Rat>, Vec<Resident>)> = Vec::new();
        for res in p.residents {
            let b = res.branch;
            let ou = order_of(&res.u, b)?;
            let ov = order_of(&res.v, b)?;
            let u_chart = match (ou, ov) {
                (Some(a), Some(c)) => a <= c,
                (Some(_), None) => true,
                _ => false,
            };
            let (key, moved) = if u_chart {
                let shift = ou.unwrap();
                let q = Series::divide(&res.v, &res.u, shift, self.cap);
                let c = known(q.coeff(0), b)?;
                let v = q.sub_constant(&c);
                (
                    Some(c),
                    Resident {
                        branch: b,
                        u: res.u,
                        v,
                    },
                )
            } else {
                let shift = ov.unwrap();
                let q = Series::divide(&res.u, &res.v, shift, self.cap);
                (
                    None,
                    Resident {
                        branch: b,
                        u: q,
                        v: res.v,
                    },
                )
            };
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, list)) => list.push(moved),
                None => groups.push((key, vec![moved])),
            }
        }

        let points = groups
            .into_iter()
            .map(|(key, residents)| {
                let (u_axis, v_axis) = match &key {
                    Some(c) if num_traits::Zero::is_zero(c) => (Some(new), p.v_axis),
                    Some(_) => (Some(new), None),
                    None => (p.u_axis, Some(new)),
                };
                Point {
                    residents,
                    u_axis,
                    v_axis,
                    generation: p.generation + 1,
                }
            })
            .collect();
        Ok((new, points))
    }

    fn run(&mut self, curve: &Curve) -> std::result::Result<(), Failure> {
        let root = Point {
            residents: curve
                .branches()
                .iter()
                .enumerate()
                .map(|(i, b)| Resident {
                    branch: i,
                    u: Series::exact(&b.x),
                    v: Series::exact(&b.y),
                })
                .collect(),
            u_axis: None,
            v_axis: None,
            generation: 0,
        };
        let mut stack = vec![root];
        while let Some(p) = stack.pop() {
            if Self::is_resolved(&p)? {
                let b = p.residents[0].branch;
                self.finals[b] = Some(p);
                continue;
            }
            if p.generation >= self.budget {
                let first = p.residents[0].branch + 1;
                let second = p.residents.get(1).map_or(first, |r| r.branch + 1);
                return Err(Failure::Hard(Error::BudgetExceeded {
                    first,
                    second,
                    budget: self.budget,
                }));
            }
            let (_, children) = self.blow_up(p)?;
            // reverse keeps the traversal in creation order
            stack.extend(children.into_iter().rev());
        }
        Ok(())
    }

    fn extra_free_point(&mut self) {
        let host = self.m.len() - 1;
        let free = Point {
            residents: Vec::new(),
            u_axis: Some(host),
            v_axis: None,
            generation: 0,
        };
        self.blow_up(free)
            .expect("no residents, nothing to evaluate");
    }

    fn extra_branch_point(&mut self, branch: usize) -> std::result::Result<(), Failure> {
        let p = self.finals[branch].take().expect("resolved branch");
        let (_, mut children) = self.blow_up(p)?;
        debug_assert_eq!(children.len(), 1);
        let child = children.pop().unwrap();
        debug_assert!(Self::is_resolved(&child)?);
        self.finals[branch] = Some(child);
        Ok(())
    }

    fn into_resolution(self) -> Result<Resolution> {
        let vertices = self
            .m
            .iter()
            .enumerate()
            .map(|(i, m)| Vertex {
                id: i as u32 + 1,
                m: m.clone(),
            })
            .collect();
        let arrows = self
            .finals
            .iter()
            .enumerate()
            .map(|(b, p)| {
                let p = p.as_ref().expect("every branch resolved");
                let axis = p.u_axis.or(p.v_axis).unwrap();
                Arrow {
                    vertex: axis as u32 + 1,
                    branch: b,
                }
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (a as u32 + 1, b as u32 + 1));
        let graph = ResGraph::new(self.r, vertices, edges, arrows, 1)?;
        Ok(Resolution {
            graph,
            centers: self.centers,
        })
    }
}

/// Minimal embedded resolution of a validated curve.
///
/// Blows up until every strict transform is smooth and crosses exactly one
/// exceptional divisor transversally at a point on no other component.
/// Branches that never separate within `budget` generations are reported as
/// `BudgetExceeded`; this is how duplicated branches are detected.
pub fn resolve(curve: &Curve, opts: &ResolveOptions) -> Result<Resolution> {
    crate::curve::validate_curve(curve)?;
    let mut cap = START_PRECISION;
    loop {
        let mut engine = Engine::new(curve.r(), cap, opts.budget);
        let outcome = engine.run(curve).and_then(|_| {
            for _ in 0..opts.extra_free_points {
                engine.extra_free_point();
            }
            for k in 0..opts.extra_branch_points {
                engine.extra_branch_point(k % curve.r())?;
            }
            Ok(())
        });
        match outcome {
            Ok(()) => return engine.into_resolution(),
            Err(Failure::Hard(e)) => return Err(e),
            Err(Failure::Precision(branch)) => {
                if cap >= MAX_PRECISION {
                    return Err(Error::PrecisionExhausted {
                        branch: branch + 1,
                        precision: cap,
                    });
                }
                cap *= 2;
            }
        }
    }
}
