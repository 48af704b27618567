//! Which edges does a pair of probes watch? Compares the two ways of
//! computing it on a small graph with a triangle and a pendant.

use meg::monitor::monitored_edges;
use meg::{Graph, MonitorMethod};

fn main() -> meg::Result<()> {
    // triangle 0-1-2 with a tail 2-3-4
    let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])?;

    for (u, v) in [(0, 4), (0, 1), (1, 3)] {
        let bridge = monitored_edges(&g, u, v, MonitorMethod::Bridge)?;
        let removal = monitored_edges(&g, u, v, MonitorMethod::Removal)?;
        assert_eq!(bridge, removal);
        let edges: Vec<_> = bridge.iter().map(|e| g.edge(e)).collect();
        println!("pair ({u},{v}) monitors {edges:?}");
    }
    Ok(())
}
