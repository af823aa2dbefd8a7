//! A family with b_n = 1, 2, 1, 2, ... and c = 1: its moment matrix is not a
//! Riordan array.

use lbp_riordan::algebra::scalar::int;
use lbp_riordan::lbp::{CoefficientSeq, LbpFamily};
use lbp_riordan::riordan::has_riordan_column_shift;

fn main() -> lbp_riordan::Result<()> {
    let family = LbpFamily::new(
        CoefficientSeq::Periodic(vec![int(1), int(2)]),
        CoefficientSeq::Constant(int(1)),
        7,
    )?;
    let m = family.moment_matrix()?;
    println!("moment matrix:");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>7}")).collect();
        println!("{}", cells.join(""));
    }

    let p = m.production_matrix()?;
    println!("\nproduction matrix:");
    for row in p.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        println!("{}", cells.join(""));
    }
    println!("\ncolumn-shift test: {}", has_riordan_column_shift(&p));
    Ok(())
}
