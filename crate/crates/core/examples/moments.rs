//! Moments of the constant-coefficient LBP family by every route.
//!
//! cargo run --example moments -- 3/2 -1

use lbp_riordan::algebra::{parse_rational, Rational, RationalFunction};
use lbp_riordan::lbp::{LbpFamily, MomentRoute};

fn main() -> lbp_riordan::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pick = |i: usize, default: i64| -> Rational {
        args.get(i)
            .and_then(|s| parse_rational(s))
            .unwrap_or_else(|| Rational::from_integer(default.into()))
    };
    let (b, c) = (pick(0, 1), pick(1, 1));

    let family = LbpFamily::constant(b.clone(), c.clone(), 10)?;
    println!("b = {b}, c = {c}");
    for route in MomentRoute::ALL {
        let mu = family.moments(route)?;
        let shown: Vec<String> = mu.values.iter().map(ToString::to_string).collect();
        println!("{:>18}: {}", route.name(), shown.join(", "));
    }

    let symbolic = LbpFamily::constant(RationalFunction::b(), RationalFunction::c(), 4)?;
    println!("\nsymbolic:");
    for (n, m) in symbolic.moments(MomentRoute::CatalanSum)?.values.iter().enumerate() {
        println!("  mu_{n} = {m}");
    }
    Ok(())
}
