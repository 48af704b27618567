//! Immutable simple undirected graphs with dense vertex and edge ids, plus the
//! shortest-path and connectivity primitives everything else is built on.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{MegError, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Hop count used for "no path".
pub const UNREACHABLE: u32 = u32::MAX;

/// A simple undirected graph on vertices `0..n`.
///
/// Edge ids are assigned in insertion order. Each stored edge is normalized
/// so that the smaller endpoint comes first.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // sorted by neighbor id
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting out-of-range ids,
    /// self-loops and duplicate edges.
    pub fn from_edge_list(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(MegError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(MegError::SelfLoop(u));
            }
            let id = edges.len();
            edges.push((u.min(v), u.max(v)));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let v = w[0].0;
                return Err(MegError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph { n, edges, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbors of `v` paired with the id of the connecting edge.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(MegError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Unweighted distances from `source`.
    pub fn bfs_distances(&self, source: Vertex) -> DistanceRow {
        self.bfs_avoiding(source, None)
    }

    /// BFS from `source` that treats edge `skip` as absent.
    pub(crate) fn bfs_avoiding(&self, source: Vertex, skip: Option<EdgeId>) -> DistanceRow {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &(w, e) in &self.adj[u] {
                if Some(e) != skip && dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        DistanceRow { source, dist }
    }

    /// All-pairs distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<DistanceRow> {
        (0..self.n).map(|s| self.bfs_distances(s)).collect()
    }

    /// Whether a single BFS from vertex 0 reaches every vertex. The empty
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Errors unless the graph is non-empty and connected.
    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            Err(MegError::Empty)
        } else if !self.is_connected() {
            Err(MegError::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Edges lying on at least one shortest `u`–`v` path.
    pub fn shortest_path_edge_union(&self, u: Vertex, v: Vertex) -> Result<EdgeSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(MegError::SamePair(u));
        }
        let from_u = self.bfs_distances(u);
        let from_v = self.bfs_distances(v);
        self.shortest_path_edges_with(&from_u, &from_v)
    }

    /// Same as [`Graph::shortest_path_edge_union`] but reuses precomputed
    /// BFS rows for both endpoints.
    pub(crate) fn shortest_path_edges_with(
        &self,
        from_u: &DistanceRow,
        from_v: &DistanceRow,
    ) -> Result<EdgeSet> {
        let (u, v) = (from_u.source, from_v.source);
        let d = from_u.dist[v];
        if d == UNREACHABLE {
            return Err(MegError::NoPath(u, v));
        }
        let mut set = EdgeSet::new(self.m());
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            let on_path = |x: Vertex, y: Vertex| {
                let (dx, dy) = (from_u.dist[x], from_v.dist[y]);
                dx != UNREACHABLE && dy != UNREACHABLE && dx + 1 + dy == d
            };
            if on_path(a, b) || on_path(b, a) {
                set.insert(id);
            }
        }
        Ok(set)
    }

    /// Bridges of the spanning subgraph `(V, active)`, via an iterative
    /// lowpoint DFS.
    pub fn bridges(&self, active: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(active.universe(), self.m());
        let mut result = EdgeSet::new(self.m());
        let mut order = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut timer = 0;
        // (vertex, edge used to enter it, next adjacency index)
        let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = Vec::new();

        for root in 0..self.n {
            if order[root] != usize::MAX {
                continue;
            }
            order[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, parent_edge, idx) = *frame;
                if idx < self.adj[v].len() {
                    frame.2 += 1;
                    let (w, e) = self.adj[v][idx];
                    if !active.contains(e) || Some(e) == parent_edge {
                        continue;
                    }
                    if order[w] == usize::MAX {
                        order[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > order[p] {
                            result.insert(e);
                        }
                    }
                }
            }
        }
        result
    }

    /// Induced subgraph on `V \ {v}` with the id maps between old and new
    /// vertex ids.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Subgraph> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = (0..self.n).filter(|&w| w != v).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep` (in the given order).
    pub fn induced(&self, keep: &[Vertex]) -> Subgraph {
        let mut old_to_new = vec![None; self.n];
        for (i, &w) in keep.iter().enumerate() {
            old_to_new[w] = Some(i);
        }
        let pairs: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((old_to_new[a]?, old_to_new[b]?)))
            .collect();
        let graph = Graph::from_edge_list(keep.len(), &pairs)
            .expect("induced subgraph of a simple graph is simple");
        Subgraph {
            graph,
            new_to_old: keep.to_vec(),
            old_to_new,
        }
    }

    /// Smallest `k` such that repeatedly deleting a minimum-degree vertex
    /// never meets a degree above `k`.
    pub fn degeneracy(&self) -> usize {
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut k = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| degree[v])
                .expect("a vertex remains");
            k = k.max(degree[v]);
            removed[v] = true;
            for w in self.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                }
            }
        }
        k
    }

    /// 2-coloring by BFS from every uncolored vertex.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Result of [`Graph::delete_vertex`] / [`Graph::induced`].
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub new_to_old: Vec<Vertex>,
    pub old_to_new: Vec<Option<Vertex>>,
}

/// Distances from one source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Vertex,
    /// Hop counts, [`UNREACHABLE`] where there is no path.
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: Vertex) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

/// Dense set of edge ids over a fixed universe `0..m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: Vec<u64>,
    universe: usize,
    size: usize,
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        EdgeSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
            size: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = EdgeSet::new(universe);
        for id in 0..universe {
            set.insert(id);
        }
        set
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut set = EdgeSet::new(universe);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn is_full(&self) -> bool {
        self.size == self.universe
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        id < self.universe && self.words[id / 64] & (1 << (id % 64)) != 0
    }

    /// Returns whether the id was newly inserted. Panics if out of range.
    pub fn insert(&mut self, id: EdgeId) -> bool {
        assert!(
            id < self.universe,
            "edge id {id} out of range {}",
            self.universe
        );
        let word = &mut self.words[id / 64];
        let bit = 1 << (id % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        self.size += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, id: EdgeId) -> bool {
        if id >= self.universe {
            return false;
        }
        let word = &mut self.words[id / 64];
        let bit = 1 << (id % 64);
        let present = *word & bit != 0;
        *word &= !bit;
        self.size -= present as usize;
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.universe, other.universe);
        let mut size = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
            size += a.count_ones() as usize;
        }
        self.size = size;
    }

    /// Number of ids in `self` that are not in `other`.
    pub fn count_missing_from(&self, other: &EdgeSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.count_missing_from(other) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    #[test]
    fn construction() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(MegError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(MegError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(MegError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edge_lookup_agrees_with_list() {
        let g = Graph::from_edge_list(4, &[(2, 1), (0, 3), (3, 1)]).unwrap();
        for (id, &(a, b)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_id(a, b), Some(id));
            assert_eq!(g.edge_id(b, a), Some(id));
        }
        assert_eq!(g.edge(0), (1, 2));
        assert_eq!(g.edge_id(0, 1), None);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path(3).bfs_distances(0).dist, vec![0, 1, 2]);
        assert_eq!(cycle(4).bfs_distances(0).dist, vec![0, 1, 2, 1]);
        let two = Graph::empty(2).bfs_distances(0);
        assert_eq!(two.get(0), Some(0));
        assert_eq!(two.get(1), None);
    }

    #[test]
    fn distance_matrix_examples() {
        let k3 = complete(3).distance_matrix();
        for (i, row) in k3.iter().enumerate() {
            for (j, &d) in row.dist.iter().enumerate() {
                assert_eq!(d, (i != j) as u32);
            }
        }
        assert_eq!(path(4).distance_matrix()[0].dist[3], 3);
        assert_eq!(cycle(4).distance_matrix()[0].dist[2], 2);
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn shortest_path_union_examples() {
        assert!(path(4).shortest_path_edge_union(0, 3).unwrap().is_full());
        assert!(cycle(4).shortest_path_edge_union(0, 2).unwrap().is_full());
        let k3 = complete(3);
        let s = k3.shortest_path_edge_union(0, 1).unwrap();
        assert_eq!(
            s.iter().collect::<Vec<_>>(),
            vec![k3.edge_id(0, 1).unwrap()]
        );
        assert_eq!(
            Graph::empty(2).shortest_path_edge_union(0, 1),
            Err(MegError::NoPath(0, 1))
        );
        assert_eq!(
            path(2).shortest_path_edge_union(1, 1),
            Err(MegError::SamePair(1))
        );
    }

    #[test]
    fn bridges_examples() {
        let p4 = path(4);
        assert!(p4.bridges(&EdgeSet::full(3)).is_full());
        let c4 = cycle(4);
        assert!(c4.bridges(&EdgeSet::full(4)).is_empty());
        let mut active = EdgeSet::full(4);
        active.remove(0);
        assert_eq!(c4.bridges(&active), EdgeSet::from_ids(4, [1, 2, 3]));
    }

    #[test]
    fn delete_vertex_examples() {
        let sub = path(3).delete_vertex(1).unwrap();
        assert_eq!((sub.graph.n(), sub.graph.m()), (2, 0));
        assert_eq!(sub.new_to_old, vec![0, 2]);
        for v in 0..3 {
            let sub = complete(3).delete_vertex(v).unwrap();
            assert_eq!((sub.graph.n(), sub.graph.m()), (2, 1));
            let sub = cycle(4).delete_vertex(v).unwrap();
            assert_eq!((sub.graph.n(), sub.graph.m()), (3, 2));
            assert!(sub.graph.is_connected());
        }
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(path(4).degeneracy(), 1);
        assert_eq!(cycle(4).degeneracy(), 2);
        assert_eq!(complete(4).degeneracy(), 3);
        assert_eq!(Graph::empty(3).degeneracy(), 0);
    }

    #[test]
    fn bipartite() {
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(!complete(4).is_bipartite());
    }

    #[test]
    fn edge_set_ops() {
        let mut s = EdgeSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
        let t = EdgeSet::from_ids(130, [1, 129]);
        assert_eq!(t.count_missing_from(&s), 1);
        s.union_with(&t);
        assert_eq!(s.len(), 3);
        assert!(t.is_subset(&s));
        assert!(s.remove(0));
        assert!(!s.remove(0));
        assert_eq!(s.len(), 2);
    }
}
