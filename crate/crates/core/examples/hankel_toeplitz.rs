//! Hankel and Toeplitz determinants of the moments, recovery of (b, c), and
//! P_n as a bordered Toeplitz determinant.

use lbp_riordan::algebra::RationalFunction;
use lbp_riordan::hankel_toeplitz::{
    extend_moments, hankel_closed_form, hankel_transform, lbp_by_determinant, recover_parameters, toeplitz_dets,
};
use lbp_riordan::lbp::moment_gf;

fn main() -> lbp_riordan::Result<()> {
    let (b, c) = (RationalFunction::b(), RationalFunction::c());

    let mu = moment_gf(&b, &c, 8)?;
    for (n, h) in hankel_transform(mu.coeffs(), 4)?.iter().enumerate() {
        let ok = *h == hankel_closed_form(&b, &c, n);
        println!("h_{n} = {h}  (closed form: {ok})");
    }

    let bm = extend_moments(mu.coeffs(), &c, 5)?;
    println!("\nmu_-1 = {}", bm.get(-1).expect("extended"));
    println!("mu_-2 = {}", bm.get(-2).expect("extended"));

    let (t, tp) = toeplitz_dets(&bm, 4)?;
    for n in 0..t.len() {
        println!("t_{n} = {}   t'_{n} = {}", t[n], tp[n]);
    }
    for n in 1..t.len() - 1 {
        let (rb, rc) = recover_parameters(&t, &tp, n)?;
        println!("recovered at n = {n}: b = {rb}, c = {rc}");
    }

    println!();
    for n in 0..=3 {
        let p = lbp_by_determinant(&bm, n)?;
        let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        println!("P_{n} coefficients: [{}]", coeffs.join("; "));
    }
    Ok(())
}
