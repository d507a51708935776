// Generating-function counts against brute-force enumeration on seeded curves.

use std::error::Error;

use num_bigint::BigInt;

use infraholes::matrix::{matrix_curves, set_configurations};
use infraholes::oracle::red_counts;
use infraholes::redcount::{h_empty, transform_hs};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for mc in matrix_curves(5, 2, 1, 11)? {
        let empty = h_empty(&mc.l, 7);
        println!("{}  f = {:?}  L = {}", mc.id, mc.coeffs, mc.l);
        for cfg in set_configurations(&mc.curve) {
            let series = transform_hs(&empty, &cfg.set.stats());
            let counted = red_counts(&mc.curve, &cfg.set)?;
            let agree = counted.iter().enumerate().all(|(d, &c)| *series.coeff(d) == BigInt::from(c));
            println!("  {:<16} |S| = {}  C = {:?}  {}", cfg.name, cfg.set.len(), counted, if agree { "ok" } else { "MISMATCH" });
            assert!(agree);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
