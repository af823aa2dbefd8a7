//! The three orthogonal families attached to the LBP array and the
//! factorizations that link them.

use lbp_riordan::algebra::scalar::int;
use lbp_riordan::algebra::RationalFunction;
use lbp_riordan::orthopoly::{verify_factorizations, OrthoFamily, OrthoKind};

fn main() -> lbp_riordan::Result<()> {
    let (b, c) = (int(1), int(2));
    for kind in OrthoKind::ALL {
        let family = OrthoFamily::new(kind, b.clone(), c.clone(), 4)?;
        println!("{} at b = {b}, c = {c}:", kind.name());
        for (n, row) in family.rows().iter().enumerate() {
            let coeffs: Vec<String> = row.coeffs().iter().map(ToString::to_string).collect();
            println!("  n = {n}: {}", coeffs.join(", "));
        }
    }

    println!();
    println!(
        "{}",
        verify_factorizations(&RationalFunction::b(), &RationalFunction::c(), 5)
    );
    Ok(())
}
