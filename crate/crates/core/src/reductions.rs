//! Vertex Cover to MEG-set gadget.
//!
//! From `G` on `n >= 2` vertices the gadget keeps a copy `U` of `G`, hangs
//! a pendant path `u - u' - u''` off every `u`, joins a hub `x` to all of
//! `U'`, a hub `y` to all of `U`, and a pendant `y*` to `y`. `G` has a
//! vertex cover of size `k` iff the gadget has an MEG-set of size
//! `k + n + 1`.
//!
//! Vertex ids: `U = 0..n`, `u'_i = n + i`, `u''_i = 2n + i`, `x = 3n`,
//! `y = 3n + 1`, `y* = 3n + 2`.

use serde::Serialize;

use crate::error::{MegError, Result};
use crate::graph::{Graph, Vertex};
use crate::monitor::is_meg_set;
use crate::subsets::Combinations;

/// Vertex limit for [`min_vertex_cover_exact`].
pub const VC_MAX_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Role {
    #[serde(rename = "U")]
    U,
    #[serde(rename = "U'")]
    UPrime,
    #[serde(rename = "U''")]
    UDoublePrime,
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "y*")]
    YStar,
}

#[derive(Clone, Debug)]
pub struct GadgetMap {
    pub ghat: Graph,
    pub roles: Vec<Role>,
    /// `back_map[i]` is the original vertex copied to gadget vertex `i`.
    pub back_map: Vec<Vertex>,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    schema: &'static str,
    original_n: usize,
    original_m: usize,
    n: usize,
    m: usize,
    roles: &'a [Role],
    back_map: &'a [Vertex],
}

impl GadgetMap {
    pub fn original_n(&self) -> usize {
        self.back_map.len()
    }

    pub fn x(&self) -> Vertex {
        3 * self.original_n()
    }

    pub fn y(&self) -> Vertex {
        3 * self.original_n() + 1
    }

    pub fn y_star(&self) -> Vertex {
        3 * self.original_n() + 2
    }

    pub fn with_role(&self, role: Role) -> Vec<Vertex> {
        (0..self.roles.len())
            .filter(|&v| self.roles[v] == role)
            .collect()
    }

    /// JSON sidecar carrying the role of every gadget vertex and the
    /// back-map of `U` to the original graph.
    pub fn sidecar_json(&self) -> String {
        let sidecar = Sidecar {
            schema: "meg-gadget/1",
            original_n: self.original_n(),
            original_m: self.ghat.m() - 4 * self.original_n() - 1,
            n: self.ghat.n(),
            m: self.ghat.m(),
            roles: &self.roles,
            back_map: &self.back_map,
        };
        serde_json::to_string_pretty(&sidecar).expect("sidecar serializes") + "\n"
    }
}

/// Builds the gadget for `g` (which needs at least two vertices).
pub fn vc_gadget(g: &Graph) -> Result<GadgetMap> {
    let n = g.n();
    if n < 2 {
        return Err(MegError::InvalidParams(format!(
            "gadget needs at least 2 vertices, got {n}"
        )));
    }
    let (x, y, y_star) = (3 * n, 3 * n + 1, 3 * n + 2);
    let mut pairs: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    for u in 0..n {
        pairs.push((u, n + u));
        pairs.push((n + u, 2 * n + u));
    }
    pairs.extend((0..n).map(|u| (n + u, x)));
    pairs.extend((0..n).map(|u| (u, y)));
    pairs.push((y, y_star));
    let ghat = Graph::from_edge_list(3 * n + 3, &pairs)?;

    let mut roles = vec![Role::U; n];
    roles.extend(std::iter::repeat_n(Role::UPrime, n));
    roles.extend(std::iter::repeat_n(Role::UDoublePrime, n));
    roles.extend([Role::X, Role::Y, Role::YStar]);
    Ok(GadgetMap {
        ghat,
        roles,
        back_map: (0..n).collect(),
    })
}

/// Whether `cover` touches every edge of `g`.
pub fn is_vertex_cover(g: &Graph, cover: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        if v < g.n() {
            inside[v] = true;
        }
    }
    g.edges().iter().all(|&(a, b)| inside[a] || inside[b])
}

/// Minimum vertex cover by size-increasing lexicographic search.
pub fn min_vertex_cover_exact(g: &Graph) -> Result<Vec<Vertex>> {
    if g.n() > VC_MAX_VERTICES {
        return Err(MegError::TooLarge {
            n: g.n(),
            limit: VC_MAX_VERTICES,
        });
    }
    let all: Vec<Vertex> = (0..g.n()).collect();
    for k in 0..=g.n() {
        if let Some(c) = Combinations::new(&all, k).find(|c| is_vertex_cover(g, c)) {
            return Ok(c);
        }
    }
    unreachable!("V(G) is a vertex cover")
}

/// Vertex cover of the original graph read off an MEG-set of the gadget:
/// the `U` part of `meg`, mapped back.
pub fn vc_from_meg(map: &GadgetMap, meg: &[Vertex]) -> Result<Vec<Vertex>> {
    let (ok, _) = is_meg_set(&map.ghat, meg)?;
    if !ok {
        return Err(MegError::NotMegSet);
    }
    let mut cover: Vec<Vertex> = meg
        .iter()
        .filter(|&&v| map.roles[v] == Role::U)
        .map(|&v| map.back_map[v])
        .collect();
    cover.sort_unstable();
    cover.dedup();
    Ok(cover)
}

/// `n/2 + 1`, a lower bound on the vertex cover number of a cubic
/// non-bipartite graph.
pub fn cubic_vc_lower_bound(g: &Graph) -> Result<usize> {
    if g.n() == 0 || (0..g.n()).any(|v| g.degree(v) != 3) {
        return Err(MegError::NotCubic);
    }
    if g.is_bipartite() {
        return Err(MegError::Bipartite);
    }
    Ok(g.n() / 2 + 1)
}
