//! Greedy set cover over vertex pairs, compared with the exact optimum and
//! the worst-case bound.

use meg::approx::{approx_meg_with_cover, approx_ratio_bound, greedy_factor};
use meg::generators::{generate, Family, GenSpec};
use meg::monitor::min_meg_exact;

fn main() -> meg::Result<()> {
    println!(
        "{:>4} {:>4} {:>6} {:>5} {:>8} {:>8}",
        "n", "m", "greedy", "opt", "alpha", "bound"
    );
    for seed in 0..8 {
        let n = 8 + seed as usize;
        let g = generate(&GenSpec::new(Family::RandomConnected { n, p: 0.3 }, seed))?;
        let (res, cover) = approx_meg_with_cover(&g)?;
        let opt = min_meg_exact(&g, None)?.unwrap().size();
        let bound = approx_ratio_bound(g.n(), g.m(), opt);
        assert!(res.size() as f64 <= bound && res.size() <= 2 * cover.chosen.len());
        println!(
            "{:>4} {:>4} {:>6} {:>5} {:>8.3} {:>8.2}",
            g.n(),
            g.m(),
            res.size(),
            opt,
            greedy_factor(g.m()),
            bound
        );
    }

    // larger than the exact solver accepts
    let g = generate(&GenSpec::new(Family::Grid { rows: 6, cols: 6 }, 0))?;
    let (res, cover) = approx_meg_with_cover(&g)?;
    println!(
        "6x6 grid: {} vertices from {} pairs: {:?}",
        res.size(),
        cover.chosen.len(),
        res.meg
    );
    Ok(())
}
