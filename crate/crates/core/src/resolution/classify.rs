use std::collections::{BTreeMap, BTreeSet};

use super::graph::ResGraph;

/// Combinatorial structure of a dual graph: dead ends, star points,
/// separation points and the partial order given by geodesics from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClass {
    pub dead_ends: BTreeSet<u32>,
    /// Vertices meeting at least three components, plus the first separation
    /// point when there is one.
    pub star_points: BTreeSet<u32>,
    /// Separation point for every pair `(i, j)`, `i < j`, of 0-based branches.
    pub separation_points: BTreeMap<(usize, usize), u32>,
    parent: BTreeMap<u32, Option<u32>>,
    depth: BTreeMap<u32, usize>,
}

/// A dead end together with the nearest star point below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tail {
    pub dead_end: u32,
    pub star: u32,
}

impl VertexClass {
    pub fn parent(&self, id: u32) -> Option<u32> {
        self.parent.get(&id).copied().flatten()
    }

    /// Vertices on the geodesic from the root to `id`, root first.
    pub fn root_path(&self, id: u32) -> Vec<u32> {
        let mut path = vec![id];
        let mut cur = id;
        while let Some(p) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// `a <= b`: the geodesic from the root to `b` passes through `a`.
    pub fn le(&self, a: u32, b: u32) -> bool {
        let (Some(&da), Some(&db)) = (self.depth.get(&a), self.depth.get(&b)) else {
            return false;
        };
        if da > db {
            return false;
        }
        let mut cur = b;
        for _ in da..db {
            cur = self.parent(cur).expect("depth > 0 has a parent");
        }
        cur == a
    }

    /// The minimal separation point, `None` for a single branch.
    pub fn first_separation_point(&self) -> Option<u32> {
        self.separation_points
            .values()
            .copied()
            .min_by_key(|v| self.depth[v])
    }

    /// Nearest star point strictly below `id` on its root geodesic.
    pub fn star_below(&self, id: u32) -> Option<u32> {
        let mut cur = self.parent(id);
        while let Some(v) = cur {
            if self.star_points.contains(&v) {
                return Some(v);
            }
            cur = self.parent(v);
        }
        None
    }

    /// Dead ends that have a star point below them, with that star point.
    pub fn tails(&self) -> Vec<Tail> {
        self.dead_ends
            .iter()
            .filter_map(|&d| self.star_below(d).map(|star| Tail { dead_end: d, star }))
            .collect()
    }
}

pub fn classify_graph(g: &ResGraph) -> VertexClass {
    let order = g.bfs_order();
    let mut parent = BTreeMap::new();
    let mut depth = BTreeMap::new();
    for (v, p) in &order {
        parent.insert(*v, *p);
        let d = p.map_or(0, |p| depth[&p] + 1);
        depth.insert(*v, d);
    }
    let dead_ends = g
        .vertices()
        .iter()
        .map(|v| v.id)
        .filter(|&id| g.degree(id) == 1)
        .collect();
    let mut star_points: BTreeSet<u32> = g
        .vertices()
        .iter()
        .map(|v| v.id)
        .filter(|&id| g.degree(id) >= 3)
        .collect();

    let mut class = VertexClass {
        dead_ends,
        star_points: BTreeSet::new(),
        separation_points: BTreeMap::new(),
        parent,
        depth,
    };
    let paths: Vec<Vec<u32>> = (0..g.r())
        .map(|i| class.root_path(g.arrow_vertex(i)))
        .collect();
    for i in 0..g.r() {
        for j in i + 1..g.r() {
            let common = paths[i]
                .iter()
                .zip(&paths[j])
                .take_while(|(a, b)| a == b)
                .last()
                .map(|(a, _)| *a)
                .expect("paths share the root");
            class.separation_points.insert((i, j), common);
        }
    }
    if let Some(st1) = class.first_separation_point() {
        star_points.insert(st1);
    }
    class.star_points = star_points;
    class
}
