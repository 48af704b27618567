//! On interval graphs the mandatory vertices already form the unique
//! optimum, found in polynomial time.

use meg::generators::rng_for;
use meg::interval::{interval_min_meg, is_mandatory_interval};
use meg::monitor::min_meg_exact;
use meg::IntervalModel;
use rand::Rng;

fn main() -> meg::Result<()> {
    let model = IntervalModel::new(vec![(0, 2), (1, 4), (3, 5), (3, 8), (6, 9), (9, 10)])?;
    let g = model.to_graph();
    println!("edges: {:?}", g.edges());
    for v in 0..g.n() {
        println!("  vertex {v} mandatory: {}", is_mandatory_interval(&g, v)?);
    }
    let fast = interval_min_meg(&g, Some(&model))?;
    let exact = min_meg_exact(&g, None)?.unwrap();
    println!("interval rule {:?}, exhaustive {:?}", fast.meg, exact.meg);

    // short intervals walking to the right stay connected but sparse
    let mut rng = rng_for(7);
    let mut left = 0i64;
    let mut intervals = Vec::new();
    for _ in 0..60 {
        let len = rng.gen_range(2..=6);
        intervals.push((left, left + len));
        left += rng.gen_range(1..=len);
    }
    let big = IntervalModel::new(intervals)?;
    let res = interval_min_meg(&big.to_graph(), Some(&big))?;
    println!(
        "60 short intervals: optimum size {}, {:?}",
        res.size(),
        res.meg
    );
    Ok(())
}
