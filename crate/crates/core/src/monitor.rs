//! Monitoring semantics.
//!
//! A pair `{u, v}` monitors an edge `e` when `e` lies on every shortest
//! `u`–`v` path, i.e. deleting `e` increases `d(u, v)`. A vertex set is an
//! MEG-set when every edge is monitored by some pair inside it.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{MegError, Result};
use crate::graph::{DistanceRow, EdgeSet, Graph, Vertex, UNREACHABLE};
use crate::subsets::Combinations;

/// Vertex limit for [`min_meg_exact`].
pub const EXACT_MAX_VERTICES: usize = 20;
/// Vertex limit for [`enumerate_min_meg`].
pub const ENUMERATE_MAX_VERTICES: usize = 14;

/// How [`monitored_edges`] decides which edges a pair monitors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonitorMethod {
    /// Bridges of the union of all shortest `u`–`v` paths.
    Bridge,
    /// Edges whose deletion increases `d(u, v)`, one BFS per edge.
    Removal,
}

/// Which solver produced an [`MegResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Interval,
    Greedy,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Interval => "interval",
            Method::Greedy => "greedy",
        }
    }
}

/// For each edge id, the first pair (in canonical order) found monitoring it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessMap {
    pairs: Vec<Option<(Vertex, Vertex)>>,
}

impl WitnessMap {
    fn new(m: usize) -> Self {
        WitnessMap {
            pairs: vec![None; m],
        }
    }

    pub fn get(&self, edge: usize) -> Option<(Vertex, Vertex)> {
        self.pairs[edge]
    }

    pub fn as_slice(&self) -> &[Option<(Vertex, Vertex)>] {
        &self.pairs
    }

    pub fn unmonitored(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(e, _)| e)
    }

    /// Re-checks every recorded witness with the removal method.
    pub fn verify(&self, g: &Graph) -> bool {
        self.pairs.len() == g.m()
            && self.pairs.iter().enumerate().all(|(e, p)| match *p {
                Some((u, v)) => removal_monitors(g, u, v, e),
                None => true,
            })
    }
}

/// A vertex set together with how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct MegResult {
    /// Sorted vertex ids.
    pub meg: Vec<Vertex>,
    pub optimal: bool,
    pub method: Method,
    pub witnesses: WitnessMap,
}

impl MegResult {
    pub fn size(&self) -> usize {
        self.meg.len()
    }

    /// Builds a result for `meg`, failing if it is not an MEG-set of `g`.
    pub(crate) fn certify(
        g: &Graph,
        mut meg: Vec<Vertex>,
        method: Method,
        optimal: bool,
    ) -> Result<Self> {
        meg.sort_unstable();
        meg.dedup();
        let (ok, witnesses) = is_meg_set(g, &meg)?;
        if !ok {
            return Err(MegError::NotMegSet);
        }
        Ok(MegResult {
            meg,
            optimal,
            method,
            witnesses,
        })
    }
}

fn check_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(MegError::SamePair(u));
    }
    Ok(())
}

/// Edges monitored by the pair `{u, v}`.
pub fn monitored_edges(g: &Graph, u: Vertex, v: Vertex, method: MonitorMethod) -> Result<EdgeSet> {
    g.require_connected()?;
    check_pair(g, u, v)?;
    Ok(match method {
        MonitorMethod::Bridge => bridge_monitored(g, &g.bfs_distances(u), &g.bfs_distances(v)),
        MonitorMethod::Removal => {
            EdgeSet::from_ids(g.m(), (0..g.m()).filter(|&e| removal_monitors(g, u, v, e)))
        }
    })
}

pub(crate) fn bridge_monitored(g: &Graph, from_u: &DistanceRow, from_v: &DistanceRow) -> EdgeSet {
    let union = g
        .shortest_path_edges_with(from_u, from_v)
        .expect("connected graph");
    g.bridges(&union)
}

fn removal_monitors(g: &Graph, u: Vertex, v: Vertex, edge: usize) -> bool {
    let before = g.bfs_distances(u).dist[v];
    let after = g.bfs_avoiding(u, Some(edge)).dist[v];
    before != UNREACHABLE && (after == UNREACHABLE || after > before)
}

/// Monitored edge sets for every unordered pair, indexed in canonical
/// order `(0,1), (0,2), …, (1,2), …`.
#[derive(Clone, Debug)]
pub struct MonitorTable {
    n: usize,
    sets: Vec<EdgeSet>,
}

impl MonitorTable {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let n = g.n();
        let rows = g.distance_matrix();
        let pairs: Vec<(Vertex, Vertex)> = canonical_pairs(n).collect();
        let sets = pairs
            .par_iter()
            .map(|&(u, v)| bridge_monitored(g, &rows[u], &rows[v]))
            .collect();
        Ok(MonitorTable { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_index(&self, u: Vertex, v: Vertex) -> usize {
        let (a, b) = (u.min(v), u.max(v));
        debug_assert!(a != b && b < self.n);
        a * (2 * self.n - a - 1) / 2 + (b - a - 1)
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> &EdgeSet {
        &self.sets[self.pair_index(u, v)]
    }

    /// `(pair, monitored edges)` in canonical pair order.
    pub fn iter(&self) -> impl Iterator<Item = ((Vertex, Vertex), &EdgeSet)> {
        canonical_pairs(self.n).zip(&self.sets)
    }

    /// Whether the pairs inside `set` (sorted, distinct) monitor every edge.
    pub fn covers(&self, set: &[Vertex], m: usize) -> bool {
        let mut acc = EdgeSet::new(m);
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                acc.union_with(self.get(a, b));
                if acc.is_full() {
                    return true;
                }
            }
        }
        acc.is_full()
    }
}

pub fn canonical_pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

/// Whether `set` is an MEG-set of `g`, with a witness pair for every
/// monitored edge.
pub fn is_meg_set(g: &Graph, set: &[Vertex]) -> Result<(bool, WitnessMap)> {
    g.require_connected()?;
    let mut members: Vec<Vertex> = set.to_vec();
    for &v in &members {
        g.check_vertex(v)?;
    }
    members.sort_unstable();
    members.dedup();

    let rows: Vec<DistanceRow> = members.iter().map(|&v| g.bfs_distances(v)).collect();
    let mut witnesses = WitnessMap::new(g.m());
    let mut remaining = g.m();
    'outer: for i in 0..members.len() {
        for j in i + 1..members.len() {
            if remaining == 0 {
                break 'outer;
            }
            let monitored = bridge_monitored(g, &rows[i], &rows[j]);
            for e in monitored.iter() {
                if witnesses.pairs[e].is_none() {
                    witnesses.pairs[e] = Some((members[i], members[j]));
                    remaining -= 1;
                }
            }
        }
    }
    Ok((remaining == 0, witnesses))
}

/// Vertices that have a neighbor `u` such that every induced 2-path
/// `u v x` closes into a 4-cycle `u v x w` (the cycle need not be induced).
pub fn mandatory_vertices(g: &Graph) -> Result<Vec<Vertex>> {
    g.require_connected()?;
    Ok((0..g.n()).filter(|&v| has_support(g, v)).collect())
}

/// Returns a support of `v`, if any.
pub fn support_of(g: &Graph, v: Vertex) -> Option<Vertex> {
    g.neighbors(v).find(|&u| {
        g.neighbors(v)
            .filter(|&x| x != u && !g.has_edge(u, x))
            .all(|x| g.neighbors(u).any(|w| w != v && w != x && g.has_edge(w, x)))
    })
}

fn has_support(g: &Graph, v: Vertex) -> bool {
    support_of(g, v).is_some()
}

/// Vertices `v` for which `V \ {v}` is not an MEG-set. Since supersets of
/// MEG-sets are MEG-sets, these are exactly the vertices in every MEG-set.
pub fn mandatory_oracle(g: &Graph) -> Result<Vec<Vertex>> {
    g.require_connected()?;
    let n = g.n();
    let flags: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|v| {
            let rest: Vec<Vertex> = (0..n).filter(|&w| w != v).collect();
            is_meg_set(g, &rest).map(|(ok, _)| !ok)
        })
        .collect::<Result<_>>()?;
    Ok((0..n).filter(|&v| flags[v]).collect())
}

/// Smallest MEG-set by exhaustive search over supersets of the mandatory
/// vertices, increasing in size and lexicographic within a size.
///
/// With a `budget`, sizes above it are not searched and `Ok(None)` means
/// no MEG-set of at most that size exists.
pub fn min_meg_exact(g: &Graph, budget: Option<usize>) -> Result<Option<MegResult>> {
    g.require_connected()?;
    if g.n() > EXACT_MAX_VERTICES {
        return Err(MegError::TooLarge {
            n: g.n(),
            limit: EXACT_MAX_VERTICES,
        });
    }
    let search = ExactSearch::new(g)?;
    let max_size = budget.unwrap_or(g.n()).min(g.n());
    for size in search.forced.len()..=max_size {
        if let Some(found) = search
            .candidates(size)
            .find(|s| search.table.covers(s, g.m()))
        {
            return MegResult::certify(g, found, Method::Exact, true).map(Some);
        }
    }
    Ok(None)
}

/// All minimum MEG-sets in lexicographic order.
pub fn enumerate_min_meg(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    g.require_connected()?;
    if g.n() > ENUMERATE_MAX_VERTICES {
        return Err(MegError::TooLarge {
            n: g.n(),
            limit: ENUMERATE_MAX_VERTICES,
        });
    }
    let search = ExactSearch::new(g)?;
    for size in search.forced.len()..=g.n() {
        let found: Vec<Vec<Vertex>> = search
            .candidates(size)
            .filter(|s| search.table.covers(s, g.m()))
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("V(G) is always an MEG-set")
}

struct ExactSearch {
    table: MonitorTable,
    forced: Vec<Vertex>,
    free: Vec<Vertex>,
}

impl ExactSearch {
    fn new(g: &Graph) -> Result<Self> {
        let forced = mandatory_vertices(g)?;
        let free = (0..g.n())
            .filter(|v| forced.binary_search(v).is_err())
            .collect();
        Ok(ExactSearch {
            table: MonitorTable::new(g)?,
            forced,
            free,
        })
    }

    /// Sorted candidate sets of the given total size. Lexicographic order on
    /// the free part matches lexicographic order on the whole set, since the
    /// forced part is shared.
    fn candidates(&self, size: usize) -> impl Iterator<Item = Vec<Vertex>> + '_ {
        let extra = size.checked_sub(self.forced.len()).unwrap_or(usize::MAX);
        Combinations::new(&self.free, extra).map(|chosen| {
            let mut set = self.forced.clone();
            set.extend(chosen);
            set.sort_unstable();
            set
        })
    }
}
