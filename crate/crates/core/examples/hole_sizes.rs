// Sizes of individual holes, from the formula and by enumeration.

use std::error::Error;

use infraholes::curve::validate_curve;
use infraholes::holesize::{hole_context, hole_size, hole_size_bounds, max_hole_check, MaxHoleVerdict};
use infraholes::oracle::{enumerate_hole, enumerate_red};
use infraholes::places::{enumerate_places, PlaceSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let curve = validate_curve(5, &[1, 1, 0, 0, 0, 0, 4], 2)?;
    let ones = enumerate_places(&curve, 1);
    let s = PlaceSet::new(ones[..4].to_vec(), ones[0].clone())?;
    println!("S = {}", s.members().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));

    let reduced = enumerate_red(&curve, s.members(), 2, true)?.divisors.unwrap_or_default();
    let mut total = 0;
    for d in &reduced {
        let ctx = hole_context(&s, d, 2)?;
        let size = hole_size(&ctx);
        let listed = enumerate_hole(d, &s, 2)?.len();
        assert_eq!(size, listed.into());
        total += listed;
        if listed > 0 {
            let (lo, hi) = hole_size_bounds(&ctx).expect("|S| > 1");
            println!("  |h({d})| = {size}   ({lo} <= . <= {hi})");
        }
    }
    println!("{} reduced divisors, {total} hole elements", reduced.len());

    if let MaxHoleVerdict::Confirmed { size, runner_up } = max_hole_check(&s, &reduced, 2)? {
        println!("largest hole belongs to 0: {size} (next {runner_up})");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
