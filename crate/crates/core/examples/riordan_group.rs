//! The coefficient array of the LBP family as a Riordan array: inverse,
//! products and production matrices.

use lbp_riordan::algebra::scalar::int;
use lbp_riordan::algebra::Scalar;
use lbp_riordan::lbp::lbp_array;
use lbp_riordan::riordan::{has_riordan_column_shift, LowerTriangularMatrix, Matrix, RiordanArray};

fn show<S: Scalar>(rows: &[Vec<S>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>6}")).collect();
        println!("  {}", cells.join(""));
    }
}

fn main() -> lbp_riordan::Result<()> {
    let (b, c) = (int(1), int(1));
    let l = lbp_array(&b, &c, 6)?;
    println!("L = (1/(1+ct), t(1-bt)/(1+ct)) at b = c = 1:");
    show(l.matrix().rows());

    let inv = l.inverse()?;
    println!("L^-1 (first column holds the moments):");
    show(inv.matrix().rows());

    let id = RiordanArray::identity(6);
    println!("L * L^-1 = I: {}", l.multiply(&inv)? == id);
    let by_matrix: LowerTriangularMatrix<_> = l.matrix().mul(&inv.matrix())?;
    println!("matrix product agrees: {}", by_matrix == id.matrix());

    let p: Matrix<_> = inv.matrix().production_matrix()?;
    println!("production matrix of L^-1:");
    show(p.rows());
    println!("columns shift like a Riordan array: {}", has_riordan_column_shift(&p));

    let binomial = RiordanArray::binomial(&int(2), 6);
    println!("binomial array (1/(1-2t), t/(1-2t)):");
    show(binomial.matrix().rows());
    Ok(())
}
