// Largest-hole size against |S|: the normalized ratio tends to 1.

use std::error::Error;

use infraholes::matrix::{sweep, write_sweep_csv};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rows = sweep(&[13, 29, 53, 101], &[1, 2], &[4, 8, 16, 32], 1)?;
    for g in [1, 2] {
        let mut last = None;
        for r in rows.iter().filter(|r| r.genus == g && r.q == 101) {
            println!("g = {g}  |S| = {:>2}  |h(0)| = {:>4}  ratio {:.6}", r.set_size, r.hole_size, r.asymptotic_ratio);
            let gap = (r.asymptotic_ratio - 1.0).abs();
            if let Some(prev) = last {
                assert!(gap < prev);
            }
            last = Some(gap);
        }
    }
    let mut csv = Vec::new();
    write_sweep_csv(&rows, &mut csv)?;
    println!("{} CSV rows", String::from_utf8(csv)?.lines().count() - 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
