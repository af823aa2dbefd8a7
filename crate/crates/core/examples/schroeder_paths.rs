//! Schroeder paths with colored level steps against the T-fraction moments.

use lbp_riordan::algebra::scalar::int;
use lbp_riordan::cfrac::tfraction_closed_form;
use lbp_riordan::paths;

fn main() -> lbp_riordan::Result<()> {
    for c in 1..=3 {
        let series = tfraction_closed_form(&int(1), &int(c), 7)?;
        println!("c = {c}:");
        for n in 0..=7 {
            let counted = paths::weighted_count(n, &int(1), &int(c));
            println!("  n = {n}: paths {counted:>8}, mu~ {:>8}", series.coeff(n));
        }
    }

    println!("\nby peaks and by level steps:");
    for n in 0..=6 {
        println!(
            "  n = {n}: {:?} {:?}",
            paths::count_by_peaks(n),
            paths::count_by_level_steps(n)
        );
    }
    Ok(())
}
