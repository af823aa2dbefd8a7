//! Every registered generator against its vendored OEIS fixture.

use lbp_riordan::oeis::{default_fixture_dir, oeis_check, GENERATORS};

fn main() -> lbp_riordan::Result<()> {
    let dir = default_fixture_dir();
    for g in GENERATORS {
        let report = oeis_check(&dir, g.id, Some(g.name))?;
        let verdict = if report.passed() { "ok" } else { "MISMATCH" };
        println!("{} {:<14} {:<9} {}", g.id, g.name, verdict, g.description);
    }
    Ok(())
}
