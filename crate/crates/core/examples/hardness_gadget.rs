//! The Vertex Cover gadget: build it, solve it, and read a cover back.

use meg::io::write_edge_list;
use meg::monitor::min_meg_exact;
use meg::reductions::{min_vertex_cover_exact, vc_from_meg, vc_gadget, Role};
use meg::Graph;

fn main() -> meg::Result<()> {
    // a triangle with a pendant
    let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])?;
    let map = vc_gadget(&g)?;
    println!("gadget: {} vertices, {} edges", map.ghat.n(), map.ghat.m());
    println!(
        "x = {}, y = {}, y* = {}, U'' = {:?}",
        map.x(),
        map.y(),
        map.y_star(),
        map.with_role(Role::UDoublePrime)
    );

    let meg = min_meg_exact(&map.ghat, None)?.unwrap();
    let vc = min_vertex_cover_exact(&g)?;
    println!("MEG {} = vc {} + n {} + 1", meg.size(), vc.len(), g.n());

    let cover = vc_from_meg(&map, &meg.meg)?;
    println!("cover recovered from the MEG-set: {cover:?}");

    print!("{}", write_edge_list(&map.ghat));
    println!("{}", map.sidecar_json());
    Ok(())
}
