//! Named graph families and seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{MegError, Result};
use crate::graph::{Graph, Vertex};
use crate::interval::IntervalModel;

/// Retry limit for rejection sampling.
pub const MAX_RETRIES: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
    Hypercube {
        dim: usize,
    },
    /// `G(n, p)` conditioned on being connected.
    RandomConnected {
        n: usize,
        p: f64,
    },
    /// Intersection graph of [`random_interval_model`]; may be disconnected.
    RandomInterval {
        n: usize,
        span: usize,
    },
    /// Uniform pairing model with rejection of loops and multi-edges.
    RandomCubic {
        n: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GenSpec { family, seed }
    }
}

fn invalid(msg: impl Into<String>) -> MegError {
    MegError::InvalidParams(msg.into())
}

fn build(n: usize, pairs: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edge_list(n, pairs).expect("generator emits simple graphs")
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let mut rng = rng_for(spec.seed);
    match spec.family {
        Family::Path { n } => {
            if n == 0 {
                return Err(invalid("path needs n >= 1"));
            }
            let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(build(n, &pairs))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(build(n, &pairs))
        }
        Family::Complete { n } => {
            if n == 0 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            let pairs: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            Ok(build(n, &pairs))
        }
        Family::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(invalid("complete bipartite graph needs both sides >= 1"));
            }
            let pairs: Vec<_> = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                .collect();
            Ok(build(a + b, &pairs))
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(invalid("grid needs rows, cols >= 1"));
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut pairs = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        pairs.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        pairs.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Ok(build(rows * cols, &pairs))
        }
        Family::Hypercube { dim } => {
            if !(1..=16).contains(&dim) {
                return Err(invalid("hypercube dimension must be in 1..=16"));
            }
            let n = 1usize << dim;
            let pairs: Vec<_> = (0..n)
                .flat_map(|v| (0..dim).map(move |b| (v, v ^ (1 << b))))
                .filter(|&(v, w)| v < w)
                .collect();
            Ok(build(n, &pairs))
        }
        Family::RandomConnected { n, p } => {
            if n == 0 {
                return Err(invalid("random graph needs n >= 1"));
            }
            if !(0.0..=1.0).contains(&p) || (n > 1 && p == 0.0) {
                return Err(invalid("edge probability must be in (0, 1]"));
            }
            for _ in 0..MAX_RETRIES {
                let mut pairs = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        if rng.gen_bool(p) {
                            pairs.push((i, j));
                        }
                    }
                }
                let g = build(n, &pairs);
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(MegError::GenerationFailed(MAX_RETRIES))
        }
        Family::RandomInterval { n, span } => {
            Ok(random_interval_model(n, span, spec.seed)?.to_graph())
        }
        Family::RandomCubic { n } => {
            if n < 4 || n % 2 == 1 {
                return Err(invalid("cubic graph needs an even n >= 4"));
            }
            let mut points: Vec<Vertex> = (0..3 * n).map(|i| i / 3).collect();
            for _ in 0..MAX_RETRIES {
                points.shuffle(&mut rng);
                let pairs: Vec<_> = points.chunks(2).map(|c| (c[0], c[1])).collect();
                if let Ok(g) = Graph::from_edge_list(n, &pairs) {
                    return Ok(g);
                }
            }
            Err(MegError::GenerationFailed(MAX_RETRIES))
        }
    }
}

/// `n` intervals with endpoints uniform in `[0, span]`, swapped so that
/// `l <= r`.
pub fn random_interval_model(n: usize, span: usize, seed: u64) -> Result<IntervalModel> {
    if n == 0 || span == 0 {
        return Err(invalid("random interval model needs n >= 1 and span >= 1"));
    }
    let mut rng = rng_for(seed);
    let span = span as i64;
    let intervals = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=span);
            let b = rng.gen_range(0..=span);
            (a.min(b), a.max(b))
        })
        .collect();
    IntervalModel::new(intervals)
}
