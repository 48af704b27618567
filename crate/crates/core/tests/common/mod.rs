#![allow(dead_code)]

use meg::generators::{generate, rng_for, Family, GenSpec};
use meg::Graph;
use rand::Rng;

/// Every connected labelled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).filter_map(move |mask| {
        let chosen: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edge_list(n, &chosen).unwrap();
        g.is_connected().then_some(g)
    })
}

/// Seeded connected graph with `n` drawn from `lo..=hi` and a random edge
/// density.
pub fn random_connected(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut rng = rng_for(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.15..0.9);
    generate(&GenSpec::new(Family::RandomConnected { n, p }, seed)).unwrap()
}

pub fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, pairs).unwrap()
}

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    graph(n, &pairs)
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &pairs)
}
