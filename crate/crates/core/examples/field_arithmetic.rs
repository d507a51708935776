// Arithmetic in F_9 = F_3[x]/(x^2 + 1), square roots and irreducible counts.

use std::error::Error;

use infraholes::algebra::{field_arith, monic_irreducibles, necklace_count, FieldCtx, FieldOp};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f9 = FieldCtx::extension(3, 2)?;
    println!("F_{} with modulus {}", f9.order(), f9.modulus());

    let a = f9.from_coeffs(&[1, 1]);
    let b = f9.from_coeffs(&[2, 1]);
    let prod = field_arith(&a, &b, FieldOp::Mul)?;
    let quot = field_arith(&prod, &b, FieldOp::Div)?;
    assert_eq!(quot, a);
    println!("({}) * ({}) = {}", a.to_poly(), b.to_poly(), prod.to_poly());

    let mut squares = 0;
    for e in f9.elements().filter(|e| !e.is_zero()) {
        if let Some(r) = e.sqrt() {
            assert_eq!(field_arith(&r, &r, FieldOp::Mul)?, e);
            assert_eq!(e.quadratic_character(), 1);
            squares += 1;
        }
    }
    println!("{squares} nonzero squares in F_9");
    assert_eq!(squares, 4);

    let f3 = FieldCtx::prime(3)?;
    for d in 1..=4 {
        let listed = monic_irreducibles(&f3, d).len() as u128;
        assert_eq!(listed, necklace_count(3, d as u64));
        println!("monic irreducibles of degree {d} over F_3: {listed}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
