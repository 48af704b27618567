//! Greedy approximation through Set Cover.
//!
//! Every vertex pair contributes the set of edges it monitors; a greedy
//! cover of `E(G)` by those sets yields an MEG-set made of the chosen
//! pairs' endpoints.

use crate::error::{MegError, Result};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::monitor::{MegResult, Method, MonitorTable};

/// Universe `0..universe_size` and one candidate set per vertex pair, in
/// canonical pair order.
#[derive(Clone, Debug)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub family: Vec<((Vertex, Vertex), EdgeSet)>,
}

/// Pairs chosen by the greedy cover, in selection order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub chosen: Vec<(Vertex, Vertex)>,
    pub covered: EdgeSet,
}

/// One entry per unordered pair, holding the edges that pair monitors.
/// Pairs monitoring nothing are kept.
pub fn build_cover_instance(g: &Graph) -> Result<SetCoverInstance> {
    let table = MonitorTable::new(g)?;
    Ok(SetCoverInstance {
        universe_size: g.m(),
        family: table
            .iter()
            .map(|(pair, set)| (pair, set.clone()))
            .collect(),
    })
}

/// Repeatedly takes the set with the most uncovered elements; among equal
/// gains the earliest entry in the family wins.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> Result<CoverResult> {
    let mut covered = EdgeSet::new(inst.universe_size);
    let mut chosen = Vec::new();
    while !covered.is_full() {
        let mut best: Option<(usize, usize)> = None;
        for (i, (_, set)) in inst.family.iter().enumerate() {
            let gain = set.count_missing_from(&covered);
            if gain > best.map_or(0, |(_, g)| g) {
                best = Some((i, gain));
            }
        }
        let Some((i, _)) = best else {
            return Err(MegError::Uncoverable {
                uncovered: inst.universe_size - covered.len(),
            });
        };
        let (pair, set) = &inst.family[i];
        covered.union_with(set);
        chosen.push(*pair);
    }
    Ok(CoverResult { chosen, covered })
}

/// MEG-set formed by the endpoints of a greedy pair cover.
pub fn approx_meg(g: &Graph) -> Result<MegResult> {
    Ok(approx_meg_with_cover(g)?.0)
}

/// Like [`approx_meg`], also returning the underlying cover.
pub fn approx_meg_with_cover(g: &Graph) -> Result<(MegResult, CoverResult)> {
    let cover = greedy_set_cover(&build_cover_instance(g)?)?;
    let meg: Vec<Vertex> = cover.chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
    Ok((MegResult::certify(g, meg, Method::Greedy, false)?, cover))
}

/// Greedy Set Cover ratio used by the bound: `ln m - ln ln m + 0.78` for
/// `m >= 3`, the harmonic number `H_m` below that.
pub fn greedy_factor(m: usize) -> f64 {
    if m >= 3 {
        let ln = (m as f64).ln();
        ln - ln.ln() + 0.78
    } else {
        (1..=m).map(|i| 1.0 / i as f64).sum()
    }
}

/// Upper bound on the size of the greedy MEG-set:
/// `min(alpha * (opt - 1), sqrt(n ln m)) * opt`, or 0 when `m = 0`.
pub fn approx_ratio_bound(n: usize, m: usize, opt: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let alpha = greedy_factor(m);
    let factor = (alpha * (opt as f64 - 1.0)).min((n as f64 * (m as f64).ln()).sqrt());
    factor * opt as f64
}
