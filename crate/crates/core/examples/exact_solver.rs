//! Minimum MEG-sets by exhaustive search, plus the budgeted decision form.

use meg::generators::{generate, Family, GenSpec};
use meg::monitor::{enumerate_min_meg, is_meg_set, min_meg_exact};

fn main() -> meg::Result<()> {
    for family in [
        Family::Path { n: 6 },
        Family::Cycle { n: 6 },
        Family::Complete { n: 5 },
        Family::Grid { rows: 2, cols: 3 },
        Family::Hypercube { dim: 3 },
    ] {
        let g = generate(&GenSpec::new(family.clone(), 0))?;
        let best = min_meg_exact(&g, None)?.expect("unbounded search always answers");
        let count = enumerate_min_meg(&g)?.len();
        println!(
            "{family:?}: size {} e.g. {:?} ({count} optimal sets)",
            best.size(),
            best.meg
        );
    }

    let c6 = generate(&GenSpec::new(Family::Cycle { n: 6 }, 0))?;
    for k in 2..=4 {
        let answer = min_meg_exact(&c6, Some(k))?.is_some();
        println!("C6 has an MEG-set of size <= {k}: {answer}");
    }

    // a failed check reports the edges no pair watches
    let (ok, witnesses) = is_meg_set(&c6, &[0, 3])?;
    let missed: Vec<_> = witnesses.unmonitored().map(|e| c6.edge(e)).collect();
    println!("{{0,3}} on C6: {ok}, unmonitored {missed:?}");
    Ok(())
}
