//! S-, J- and T-fraction expansions of the moment series, and J-fraction
//! extraction from a moment sequence.

use lbp_riordan::algebra::{RationalFunction, Scalar, TruncatedSeries};
use lbp_riordan::cfrac::{
    jfraction_from_moments, verify_uv_equality, ContinuedFraction, JFraction, SFraction, TFraction,
};
use lbp_riordan::lbp::moment_gf;

fn line<S: Scalar>(name: &str, s: &TruncatedSeries<S>) {
    let terms: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("{name:>12}: {}", terms.join(", "));
}

fn main() -> lbp_riordan::Result<()> {
    let (b, c) = (RationalFunction::b(), RationalFunction::c());
    let order = 4;

    line("closed form", &moment_gf(&b, &c, order)?);
    line("S-fraction", &SFraction::lbp(&b, &c, order).expand(order)?);
    line("J-fraction", &JFraction::lbp(&b, &c, order).expand(order)?);
    let tilde = TFraction::constant(&b, &c, order).expand(order)?;
    line("T-fraction", &tilde);
    line(
        "1 + c t mu~",
        &(&TruncatedSeries::one(order) + &tilde.mul_t().scale(&c)),
    );

    let mu = moment_gf(&b, &c, 6)?;
    let j = jfraction_from_moments(mu.coeffs(), 3)?;
    println!("\nextracted from mu_0..mu_6:");
    for (k, d) in j.diag.iter().enumerate() {
        println!("  d_{k} = {d}");
    }
    for (k, l) in j.sub.iter().enumerate() {
        println!("  l_{} = {l}", k + 1);
    }

    println!("\n{}", verify_uv_equality(&c, 10));
    Ok(())
}
