// Hole counts from the generating functions, with the inequalities they satisfy.

use std::error::Error;

use num_traits::ToPrimitive;

use infraholes::curve::{l_polynomial_of, validate_curve};
use infraholes::places::{enumerate_places, parse_place_list, Place, PlaceSet};
use infraholes::redcount::{hole_count, red_difference_decomposition, verify_bounds};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let curve = validate_curve(3, &[0, 1, 0, 1], 1)?;
    let l = l_polynomial_of(&curve)?;
    let s = PlaceSet::new(parse_place_list(&curve, "inf,u=0,1;branch=ram")?, Place::parse(&curve, "inf")?)?;
    let r = hole_count(&l, &s)?;
    println!("y^2 = x^3 + x over F_3, S = {{inf, x = 0}}: H = {}, C(S) = {:?}", r.hole_count, r.set_counts);
    assert_eq!(r.hole_count, 1.into());

    // genus 2 over F_53 with all hypotheses of the deviation bounds in force
    let curve = validate_curve(53, &[7, 21, 29, 48, 44, 1], 2)?;
    let l = l_polynomial_of(&curve)?;
    let ones = enumerate_places(&curve, 1);
    let s = PlaceSet::new(ones[..3].to_vec(), ones[0].clone())?;
    let r = hole_count(&l, &s)?;
    println!("q = 53, g = 2, |S| = 3: H = {}, main term {}, h = {}", r.hole_count, r.main_term, r.class_number);
    let f = |x: &num_rational::BigRational| x.to_f64().unwrap_or(f64::NAN);
    println!("H/h = {:.5}, (|S_1| - 1)/q = {:.5}", f(&r.ratio), f(&r.target_ratio));
    let dec = red_difference_decomposition(&l, &s)?;
    assert_eq!(dec.reconstructed, r.hole_count);

    let ledger = verify_bounds(&r, &l);
    for c in ledger.applicable() {
        println!("  {:<26} {:>12.3} <= {:<12.3} {}", c.name, c.lhs, c.rhs, if c.holds { "ok" } else { "VIOLATED" });
    }
    assert!(ledger.all_hold());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
