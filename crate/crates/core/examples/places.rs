// Places of a genus-2 curve up to degree 2, the involution, and a place set.

use std::error::Error;

use infraholes::curve::validate_curve;
use infraholes::places::{enumerate_places, parse_place_list, sigma, Place, PlaceSet, Splitting};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // even degree, leading coefficient 4 = 2^2: two places at infinity
    let curve = validate_curve(5, &[1, 1, 0, 0, 0, 0, 4], 2)?;
    let places = enumerate_places(&curve, 2);
    for p in places.iter().filter(|p| p.degree() == 1) {
        println!("{:<24} {}  sigma -> {}", p.to_string(), p.splitting(), sigma(p));
    }
    let by = |s: Splitting| places.iter().filter(|p| p.splitting() == s).count();
    println!(
        "{} places of degree <= 2: {} split, {} ramified, {} inert",
        places.len(),
        by(Splitting::Split),
        by(Splitting::Ramified),
        by(Splitting::Inert)
    );

    let members = parse_place_list(&curve, "inf+,inf-")?;
    let base = Place::parse(&curve, "inf+")?;
    let s = PlaceSet::new(members, base)?;
    let st = s.stats();
    println!("S = {{inf+, inf-}}: {} conjugate pair(s) of degree 1", st.at(1).pairs);
    assert_eq!(st.at(1).pairs, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
