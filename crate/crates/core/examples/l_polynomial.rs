// Point counts, the L-polynomial and the class number of y^2 = x^3 + x over F_3.

use std::error::Error;

use infraholes::curve::{l_polynomial, validate_curve, zeta_series, PointCounts};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let curve = validate_curve(3, &[0, 1, 0, 1], 1)?;
    let counts = PointCounts::compute(&curve, 2);
    println!("N_1 = {}, N_2 = {}", counts.get(1), counts.get(2));

    let l = l_polynomial(&curve, &counts)?;
    println!("L(t) = {l}");
    println!("class number L(1) = {}", l.class_number());
    assert_eq!(l.class_number(), 4.into());

    // the functional equation recovers N_2 from N_1 alone
    let predicted = l.predicted_counts(2);
    assert_eq!(predicted[1], counts.get(2).into());

    let (lo, hi) = l.class_number_interval();
    println!("Weil interval [{:.3}, {:.3}]", lo.to_f64(), hi.to_f64());

    let zeta = zeta_series(&l, 4);
    let a: Vec<String> = (0..=4).map(|d| zeta.a_k(d).to_string()).collect();
    println!("effective divisors by degree: {}", a.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
