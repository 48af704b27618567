//! Seeded instance families. The same seed always gives the same graph.

use meg::generators::{generate, random_interval_model, Family, GenSpec};
use meg::io::{write_edge_list, write_intervals};
use meg::reductions::cubic_vc_lower_bound;

fn main() -> meg::Result<()> {
    for family in [
        Family::CompleteBipartite { a: 3, b: 4 },
        Family::Grid { rows: 3, cols: 4 },
        Family::RandomConnected { n: 12, p: 0.2 },
        Family::RandomCubic { n: 10 },
    ] {
        let spec = GenSpec::new(family, 42);
        let g = generate(&spec)?;
        assert_eq!(g, generate(&spec)?);
        println!(
            "{:?}: n={} m={} degeneracy={}",
            spec.family,
            g.n(),
            g.m(),
            g.degeneracy()
        );
    }

    let cubic = generate(&GenSpec::new(Family::RandomCubic { n: 10 }, 42))?;
    match cubic_vc_lower_bound(&cubic) {
        Ok(b) => println!("cubic vertex cover is at least {b}"),
        Err(e) => println!("no bound: {e}"),
    }
    print!("{}", write_edge_list(&cubic));

    let model = random_interval_model(6, 10, 42)?;
    print!("{}", write_intervals(&model));
    Ok(())
}
