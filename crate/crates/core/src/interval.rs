//! Exact MEG-sets of interval graphs.
//!
//! On an interval graph a vertex `v` belongs to every MEG-set exactly when
//! its neighborhood has diameter at most 4 in `G - v`, and the set of all
//! such vertices is itself an MEG-set. That set is therefore the unique
//! minimum one, computable with one BFS per neighbor.

use rayon::prelude::*;

use crate::error::{MegError, Result};
use crate::graph::{Graph, Vertex, UNREACHABLE};
use crate::monitor::{MegResult, Method};

/// Closed integer intervals, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        if let Some((index, &(left, right))) =
            intervals.iter().enumerate().find(|(_, (l, r))| l > r)
        {
            return Err(MegError::InvalidInterval { index, left, right });
        }
        Ok(IntervalModel { intervals })
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Shifts every endpoint by `offset`.
    pub fn translate(&self, offset: i64) -> Self {
        IntervalModel {
            intervals: self
                .intervals
                .iter()
                .map(|&(l, r)| (l + offset, r + offset))
                .collect(),
        }
    }

    /// Intersection graph: `i ~ j` iff `max(l_i, l_j) <= min(r_i, r_j)`.
    /// Edges are listed in canonical pair order.
    pub fn to_graph(&self) -> Graph {
        let iv = &self.intervals;
        let mut pairs = Vec::new();
        for i in 0..iv.len() {
            for j in i + 1..iv.len() {
                if iv[i].0.max(iv[j].0) <= iv[i].1.min(iv[j].1) {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_edge_list(iv.len(), &pairs).expect("intersection graph is simple")
    }
}

/// Builds the intersection graph of an interval list, rejecting `l > r`.
pub fn graph_of_model(intervals: &[(i64, i64)]) -> Result<Graph> {
    Ok(IntervalModel::new(intervals.to_vec())?.to_graph())
}

/// Maximum pairwise distance within a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, bound: u32) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

/// `max { d(x, y) : x, y in set }`, zero for sets of size at most one.
pub fn set_diameter(g: &Graph, set: &[Vertex]) -> Result<Diameter> {
    for &v in set {
        g.check_vertex(v)?;
    }
    let mut best = 0;
    for (i, &x) in set.iter().enumerate() {
        let row = g.bfs_distances(x);
        for &y in &set[i + 1..] {
            match row.dist[y] {
                UNREACHABLE => return Ok(Diameter::Infinite),
                d => best = best.max(d),
            }
        }
    }
    Ok(Diameter::Finite(best))
}

/// Whether `N(v)` has diameter at most 4 in `G - v`.
///
/// This decides membership in every MEG-set only on interval graphs; on
/// other graphs the test is necessary but not sufficient.
pub fn is_mandatory_interval(g: &Graph, v: Vertex) -> Result<bool> {
    let sub = g.delete_vertex(v)?;
    let nbrs: Vec<Vertex> = g
        .neighbors(v)
        .map(|w| sub.old_to_new[w].expect("neighbor survives"))
        .collect();
    Ok(set_diameter(&sub.graph, &nbrs)?.at_most(4))
}

/// Minimum MEG-set of a connected interval graph.
///
/// When `model` is given it must induce exactly `g` (same vertex ids, same
/// edge set). The edgeless single-vertex graph yields the empty set.
pub fn interval_min_meg(g: &Graph, model: Option<&IntervalModel>) -> Result<MegResult> {
    g.require_connected()?;
    if let Some(model) = model {
        if !same_edge_set(&model.to_graph(), g) {
            return Err(MegError::ModelMismatch);
        }
    }
    let meg: Vec<Vertex> = if g.m() == 0 {
        Vec::new()
    } else {
        let flags: Vec<bool> = (0..g.n())
            .into_par_iter()
            .map(|v| is_mandatory_interval(g, v))
            .collect::<Result<_>>()?;
        (0..g.n()).filter(|&v| flags[v]).collect()
    };
    MegResult::certify(g, meg, Method::Interval, true)
}

fn same_edge_set(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && a.edges().iter().all(|&(u, v)| b.has_edge(u, v))
}
