//! Vertices every MEG-set must contain, via the local neighborhood test and
//! via brute force.

use meg::generators::{generate, Family, GenSpec};
use meg::monitor::{mandatory_oracle, mandatory_vertices, min_meg_exact, support_of};

fn main() -> meg::Result<()> {
    for (name, family) in [
        ("P5", Family::Path { n: 5 }),
        ("C5", Family::Cycle { n: 5 }),
        ("K4", Family::Complete { n: 4 }),
        ("K2,3", Family::CompleteBipartite { a: 2, b: 3 }),
        ("G(9, 0.35)", Family::RandomConnected { n: 9, p: 0.35 }),
    ] {
        let g = generate(&GenSpec::new(family, 3))?;
        let lemma = mandatory_vertices(&g)?;
        assert_eq!(lemma, mandatory_oracle(&g)?);
        let supports: Vec<_> = lemma
            .iter()
            .map(|&v| (v, support_of(&g, v).unwrap()))
            .collect();
        let opt = min_meg_exact(&g, None)?.unwrap();
        println!(
            "{name}: mandatory {lemma:?}, supports {supports:?}, optimum {:?}",
            opt.meg
        );
    }
    Ok(())
}
