//! Named verification suites: the four worked examples, the factorizations,
//! and the Hankel, Toeplitz and continued-fraction identities.
//!
//! Tables below are transcribed displays; everything else is recomputed and
//! compared across independent routes.

use std::fmt;

use crate::algebra::combin::{binomial, catalan, delannoy, large_schroeder};
use crate::algebra::scalar::int;
use crate::algebra::{Poly, Rational, RationalFunction, Scalar, TruncatedSeries};
use crate::cfrac::{
    cycled, jfraction_from_moments, tfraction_by_iteration, tfraction_closed_form, verify_uv_equality,
    ContinuedFraction, JFraction, SFraction, TFraction,
};
use crate::error::Result;
use crate::hankel_toeplitz::{
    extend_moments, hankel_closed_form, hankel_transform, lbp_by_determinant, recover_parameters, toeplitz_closed_form,
    toeplitz_dets,
};
use crate::lbp::{lbp_array, moment_catalan_sum, moment_gf, CoefficientSeq, LbpFamily, MomentRoute};
use crate::orthopoly::{verify_factorizations, OrthoFamily, OrthoKind};
use crate::paths;
use crate::report::{Check, ScenarioReport};
use crate::riordan::{has_riordan_column_shift, LowerTriangularMatrix, Matrix, RiordanArray};

type R = RationalFunction;

pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    All,
    Example1,
    Example2,
    Example3,
    Example4,
    Factorizations,
    Hankel,
    Toeplitz,
    Cfrac,
}

impl Scenario {
    pub const ALL: [Scenario; 9] = [
        Scenario::All,
        Scenario::Example1,
        Scenario::Example2,
        Scenario::Example3,
        Scenario::Example4,
        Scenario::Factorizations,
        Scenario::Hankel,
        Scenario::Toeplitz,
        Scenario::Cfrac,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::All => "all",
            Scenario::Example1 => "example1",
            Scenario::Example2 => "example2",
            Scenario::Example3 => "example3",
            Scenario::Example4 => "example4",
            Scenario::Factorizations => "factorizations",
            Scenario::Hankel => "hankel",
            Scenario::Toeplitz => "toeplitz",
            Scenario::Cfrac => "cfrac",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn run(self, order: usize) -> ScenarioReport {
        match self {
            Scenario::All => {
                let mut report = ScenarioReport::new("all");
                for s in &Self::ALL[1..] {
                    report.extend(s.run(order));
                }
                report
            }
            Scenario::Example1 => example1(order),
            Scenario::Example2 => example2(order),
            Scenario::Example3 => example3(order),
            Scenario::Example4 => example4(order),
            Scenario::Factorizations => factorizations(order),
            Scenario::Hankel => hankel(order),
            Scenario::Toeplitz => toeplitz(order),
            Scenario::Cfrac => cfrac(order),
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn big(v: num_bigint::BigInt) -> Rational {
    Rational::from_integer(v)
}

fn table(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| ints(r)).collect()
}

/// Rows of `a * c^(n-k)` for a table of integers `a`.
fn c_table(rows: &[&[i64]], c: &R) -> Vec<Vec<R>> {
    rows.iter()
        .enumerate()
        .map(|(n, r)| {
            r.iter()
                .enumerate()
                .map(|(k, &a)| R::from_i64(a) * c.pow((n - k) as u32))
                .collect()
        })
        .collect()
}

fn poly(coeffs: &[i64]) -> Poly<Rational> {
    Poly::new(ints(coeffs))
}

fn push<T>(report: &mut ScenarioReport, name: &str, result: Result<T>, check: impl FnOnce(T) -> Check) {
    report.push(match result {
        Ok(v) => check(v),
        Err(e) => Check::error(name, &e),
    });
}

fn rows_of<S: Scalar>(m: &LowerTriangularMatrix<S>) -> Vec<Vec<S>> {
    m.rows().to_vec()
}

const PEAK_TRIANGLE: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[2, 3, 1],
    &[5, 10, 6, 1],
    &[14, 35, 30, 10, 1],
    &[42, 126, 140, 70, 15, 1],
    &[132, 462, 630, 420, 140, 21, 1],
];

const SCHROEDER_PREFIX: &[i64] = &[1, 2, 6, 22, 90, 394, 1806, 8558, 41586];

/// `b = 1`: the T-fraction and S-fraction of the colored Schröder numbers.
pub fn example1(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("example1");
    let one = int(1);

    push(
        &mut report,
        "mu~ at b = c = 1",
        tfraction_by_iteration(&one, &one, 8),
        |s| Check::sequences("mu~ at b = c = 1", s.coeffs(), &ints(SCHROEDER_PREFIX)),
    );
    let mut mu_prefix = vec![1];
    mu_prefix.extend_from_slice(SCHROEDER_PREFIX);
    push(
        &mut report,
        "mu at b = c = 1",
        LbpFamily::constant(one.clone(), one.clone(), 9).and_then(|f| f.moments(MomentRoute::MatrixInverse)),
        |m| Check::sequences("mu at b = c = 1", &m.values, &ints(&mu_prefix)),
    );
    let schroeder: Vec<Rational> = (0..=order).map(|n| big(large_schroeder(n))).collect();
    push(
        &mut report,
        "mu~_n = S_n",
        tfraction_closed_form(&one, &one, order),
        |s| Check::sequences("mu~_n = S_n", s.coeffs(), &schroeder),
    );

    let c = R::c();
    let r1 = R::one();
    let cp = |k: i64| c.clone() + R::from_i64(k);
    let tilde_expected = vec![
        R::one(),
        cp(1),
        cp(1) * cp(2),
        cp(1) * (c.pow(2) + R::from_i64(5) * c.clone() + R::from_i64(5)),
        cp(1) * (c.pow(3) + R::from_i64(9) * c.pow(2) + R::from_i64(21) * c.clone() + R::from_i64(14)),
    ];
    push(
        &mut report,
        "mu~ symbolic in c",
        tfraction_closed_form(&r1, &c, 4),
        |s| Check::sequences("mu~ symbolic in c", s.coeffs(), &tilde_expected),
    );
    let mu_expected: Vec<R> = std::iter::once(R::one())
        .chain(tilde_expected[..4].iter().map(|v| c.clone() * v.clone()))
        .collect();
    push(&mut report, "mu symbolic in c", moment_gf(&r1, &c, 4), |s| {
        Check::sequences("mu symbolic in c", s.coeffs(), &mu_expected)
    });

    let x = Poly::<Rational>::x();
    let rows = PEAK_TRIANGLE.len() - 1;
    push(
        &mut report,
        "coefficient triangle in c",
        tfraction_by_iteration(&Poly::one(), &x, rows),
        |s| {
            let got: Vec<Vec<Rational>> = (0..=rows).map(|n| s.coeff(n).padded(n)).collect();
            Check::rows("coefficient triangle in c", &got, &table(PEAK_TRIANGLE))
        },
    );
    let formula: Vec<Vec<Rational>> = (0..=rows as i64)
        .map(|n| {
            (0..=n)
                .map(|k| big(binomial(2 * n - k, k) * catalan((n - k) as usize)))
                .collect()
        })
        .collect();
    report.push(Check::rows(
        "triangle = binom(2n-k,k) C_(n-k)",
        &formula,
        &table(PEAK_TRIANGLE),
    ));
    let by_peaks: Vec<Vec<Rational>> = (0..=rows)
        .map(|n| paths::count_by_peaks(n).into_iter().map(|v| int(v as i64)).collect())
        .collect();
    report.push(Check::rows(
        "triangle counts paths by peaks",
        &by_peaks,
        &table(PEAK_TRIANGLE),
    ));

    for cv in [1, 2, 3] {
        let name = format!("colored paths, c = {cv}");
        push(&mut report, &name, tfraction_closed_form(&one, &int(cv), 8), |s| {
            let counted: Vec<Rational> = (0..=8).map(|n| paths::weighted_count(n, &one, &int(cv))).collect();
            Check::sequences(&name, &counted, s.coeffs())
        });
    }

    report.extend(verify_uv_equality(&c, order));
    for cv in [0, 1] {
        let mut sub = verify_uv_equality(&int(cv), order);
        sub.scenario = format!("uv-equality at c = {cv}");
        report.extend(sub);
    }
    let catalans: Vec<Rational> = (0..=order).map(|n| big(catalan(n))).collect();
    push(
        &mut report,
        "u at c = 0 is Catalan",
        TFraction::constant(&one, &int(0), order).expand(order),
        |s| Check::sequences("u at c = 0 is Catalan", s.coeffs(), &catalans),
    );
    report
}

const PERIODIC_MOMENTS: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[3, 4, 1],
    &[13, 18, 6, 1],
    &[65, 91, 34, 9, 1],
    &[355, 500, 199, 64, 11, 1],
    &[2061, 2914, 1206, 430, 90, 14, 1],
    &[12501, 17721, 7526, 2856, 670, 135, 16, 1],
];

const PERIODIC_PRODUCTION: &[&[i64]] = &[
    &[1, 1, 0, 0, 0, 0, 0],
    &[2, 3, 1, 0, 0, 0, 0],
    &[2, 3, 2, 1, 0, 0, 0],
    &[4, 6, 4, 3, 1, 0, 0],
    &[4, 6, 4, 3, 2, 1, 0],
    &[8, 12, 8, 6, 4, 3, 1],
    &[8, 12, 8, 6, 4, 3, 2],
];

/// The displayed `6 x 6` production matrix of the symbolic moment matrix:
/// `b^n c` in column 0, `b^(n-k)(b+c)` below the superdiagonal of ones.
fn symbolic_production_table(dim: usize) -> Vec<Vec<R>> {
    let (b, c) = (R::b(), R::c());
    (0..dim)
        .map(|n| {
            (0..dim)
                .map(|k| match k {
                    0 => b.pow(n as u32) * c.clone(),
                    _ if k == n + 1 => R::one(),
                    _ if k <= n => b.pow((n - k) as u32) * (b.clone() + c.clone()),
                    _ => R::zero(),
                })
                .collect()
        })
        .collect()
}

/// The production matrix of the moment matrix of order `order + 1`, as an
/// `(order + 1) x (order + 1)` block.
pub fn symbolic_production(b: &R, c: &R, order: usize) -> Result<Vec<Vec<R>>> {
    let m = lbp_array(b, c, order + 1)?.inverse()?.matrix();
    Ok(m.production_matrix()?.rows().to_vec())
}

/// Production matrix of the LBP moment matrix, then the periodic family
/// `b_n = 1, 2, 1, 2, ...`, `c = 1`.
pub fn example2(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("example2");
    let (b, c) = (R::b(), R::c());
    push(
        &mut report,
        "symbolic production matrix",
        symbolic_production(&b, &c, 5),
        |p| Check::rows("symbolic production matrix", &p, &symbolic_production_table(6)),
    );

    let periodic = LbpFamily::new(
        CoefficientSeq::Periodic(vec![int(1), int(2)]),
        CoefficientSeq::Constant(int(1)),
        PERIODIC_MOMENTS.len() - 1,
    );
    let moment_matrix = periodic.as_ref().map_err(Clone::clone).and_then(|f| f.moment_matrix());
    push(&mut report, "periodic moment matrix", moment_matrix.clone(), |m| {
        Check::rows("periodic moment matrix", &rows_of(&m), &table(PERIODIC_MOMENTS))
    });
    let production = moment_matrix.and_then(|m| m.production_matrix());
    push(&mut report, "periodic production matrix", production.clone(), |p| {
        Check::rows("periodic production matrix", p.rows(), &table(PERIODIC_PRODUCTION))
    });
    push(
        &mut report,
        "periodic production matrix is not Riordan",
        production,
        |p| {
            Check::bool(
                "periodic production matrix is not Riordan",
                !has_riordan_column_shift(&p),
            )
        },
    );
    let lbp_production = lbp_array(&b, &c, 7).and_then(|l| l.matrix().production_matrix());
    push(&mut report, "L production matrix is Riordan", lbp_production, |p| {
        Check::bool("L production matrix is Riordan", has_riordan_column_shift(&p))
    });
    push(
        &mut report,
        "moment matrix production matrix is Riordan",
        symbolic_production(&b, &c, 7),
        |p| {
            let m = Matrix::from_rows(p);
            Check::bool(
                "moment matrix production matrix is Riordan",
                has_riordan_column_shift(&m),
            )
        },
    );

    let family = LbpFamily::new(
        CoefficientSeq::Periodic(vec![int(1), int(2)]),
        CoefficientSeq::Constant(int(1)),
        order + 1,
    );
    push(
        &mut report,
        "mu_(n+1) = sum binom(n+k,2k) S_k",
        family.and_then(|f| f.moments(MomentRoute::MatrixInverse)),
        |m| {
            let sums: Vec<Rational> = (0..=order as i64)
                .map(|n| {
                    (0..=n)
                        .map(|k| big(binomial(n + k, 2 * k) * large_schroeder(k as usize)))
                        .sum()
                })
                .collect();
            Check::sequences("mu_(n+1) = sum binom(n+k,2k) S_k", &m.values[1..], &sums)
        },
    );
    report.push(Check::sequences(
        "first column 1, 3, 13, 65, 355, 2061",
        &PERIODIC_MOMENTS[1..7].iter().map(|r| int(r[0])).collect::<Vec<_>>(),
        &ints(&[1, 3, 13, 65, 355, 2061]),
    ));
    report
}

const SHIFTED_TRIANGLE: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, -1, 2],
    &[0, 2, -7, 6],
    &[0, -5, 25, -41, 22],
    &[0, 14, -91, 219, -231, 90],
];

/// Moments with `b = c + shift`, as coefficient rows of polynomials in `c`.
pub fn moments_on_line(shift: i64, n_max: usize) -> Vec<Vec<Rational>> {
    let c = Poly::<Rational>::x();
    let b = c.clone() + Poly::constant(int(shift));
    (0..=n_max).map(|n| moment_catalan_sum(n, &b, &c).padded(n)).collect()
}

/// `b = c - 1` and `b = c + 1`.
pub fn example3(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("example3");
    let rows = SHIFTED_TRIANGLE.len() - 1;
    let signed = moments_on_line(-1, order.max(rows));
    report.push(Check::rows(
        "b = c - 1 triangle",
        &signed[..=rows],
        &table(SHIFTED_TRIANGLE),
    ));
    let sums: Vec<Rational> = signed.iter().map(|r| r.iter().cloned().sum()).collect();
    report.push(Check::sequences(
        "b = c - 1 row sums are 1",
        &sums,
        &vec![int(1); sums.len()],
    ));
    let general: Vec<Vec<Rational>> = (0..signed.len() as i64)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let s: num_bigint::BigInt = (0..=n)
                        .map(|j| binomial(n + j - 1, 2 * j) * binomial(j, n - k) * catalan(j as usize))
                        .sum();
                    big(if (n - k) % 2 == 0 { s } else { -s })
                })
                .collect()
        })
        .collect();
    report.push(Check::rows("b = c - 1 general term", &general, &signed));

    let x = Poly::<Rational>::x();
    let lin = |a: i64, b0: i64| poly(&[b0, a]);
    let factored = vec![
        Poly::one(),
        x.clone(),
        x.clone() * lin(2, -1),
        x.clone() * lin(2, -1) * lin(3, -2),
        x.clone() * lin(2, -1) * poly(&[5, -15, 11]),
        x.clone() * lin(2, -1) * poly(&[-14, 63, -93, 45]),
    ];
    let got: Vec<Poly<Rational>> = signed[..=rows].iter().map(|r| Poly::new(r.clone())).collect();
    report.push(Check::sequences("b = c - 1 moments factored", &got, &factored));

    let unsigned = moments_on_line(1, order.max(rows));
    let abs_table: Vec<Vec<Rational>> = table(SHIFTED_TRIANGLE)
        .into_iter()
        .map(|r| r.into_iter().map(|v| if v < int(0) { -v } else { v }).collect())
        .collect();
    report.push(Check::rows("b = c + 1 triangle", &unsigned[..=rows], &abs_table));
    let sums: Vec<Rational> = unsigned.iter().map(|r| r.iter().cloned().sum()).collect();
    report.push(Check::sequences(
        "b = c + 1 row sums",
        &sums[..=rows],
        &ints(&[1, 1, 3, 15, 93, 645]),
    ));
    let t = TruncatedSeries::<Rational>::t(order.max(rows));
    let target = &t * &TruncatedSeries::new(ints(&[1, -2]), order.max(rows));
    let f = target.checked_div(&TruncatedSeries::new(ints(&[1, 1]), order.max(rows)));
    push(
        &mut report,
        "reversion of t(1-2t)/(1+t)",
        f.and_then(|f| f.reversion()),
        |r| {
            let ok = Check::sequences("reversion prefix", &r.coeffs()[..=rows], &ints(&[0, 1, 3, 15, 93, 645]));
            let tail: Vec<Rational> = std::iter::once(int(1)).chain(r.coeffs()[1..].iter().cloned()).collect();
            let sums = Check::sequences("reversion = row sums", &tail, &sums);
            Check::bool("reversion of t(1-2t)/(1+t)", ok.passed && sums.passed).with_detail(
                ok.detail
                    .or(sums.detail)
                    .unwrap_or_else(|| "0, 1, 3, 15, 93, 645, ...".into()),
            )
        },
    );
    report
}

const DELANNOY_SIGNED: &[&[i64]] = &[
    &[1],
    &[-1, 1],
    &[1, -3, 1],
    &[-1, 5, -5, 1],
    &[1, -7, 13, -7, 1],
    &[-1, 9, -25, 25, -9, 1],
];

const SCALED_SCHROEDER_MOMENTS: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[2, 3, 1],
    &[6, 10, 5, 1],
    &[22, 38, 22, 7, 1],
    &[90, 158, 98, 38, 9, 1],
];

/// `b = c`: the signed Delannoy triangle and scaled Schröder moments.
pub fn example4(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("example4");
    let c = R::c();
    let dim = DELANNOY_SIGNED.len();
    push(
        &mut report,
        "signed Delannoy coefficients",
        lbp_array(&c, &c, dim - 1),
        |l| {
            Check::rows(
                "signed Delannoy coefficients",
                &rows_of(&l.matrix()),
                &c_table(DELANNOY_SIGNED, &c),
            )
        },
    );
    push(
        &mut report,
        "moment matrix",
        lbp_array(&c, &c, dim - 1).and_then(|l| l.inverse()),
        |m| {
            Check::rows(
                "moment matrix",
                &rows_of(&m.matrix()),
                &c_table(SCALED_SCHROEDER_MOMENTS, &c),
            )
        },
    );
    push(
        &mut report,
        "|a_(n,k)| = D(n-k, k) at c = 1",
        lbp_array(&int(1), &int(1), order),
        |l| {
            let got: Vec<Vec<Rational>> = rows_of(&l.matrix())
                .into_iter()
                .map(|r| r.into_iter().map(|v| if v < int(0) { -v } else { v }).collect())
                .collect();
            let expected: Vec<Vec<Rational>> = (0..=order)
                .map(|n| (0..=n).map(|k| big(delannoy(n - k, k))).collect())
                .collect();
            Check::rows("|a_(n,k)| = D(n-k, k) at c = 1", &got, &expected)
        },
    );
    push(&mut report, "mu_n = c^n S_(n-1)", moment_gf(&c, &c, order), |m| {
        let expected: Vec<R> = (0..=order)
            .map(|n| {
                if n == 0 {
                    R::one()
                } else {
                    c.pow(n as u32) * R::from_rational(&big(large_schroeder(n - 1)))
                }
            })
            .collect();
        Check::sequences("mu_n = c^n S_(n-1)", m.coeffs(), &expected)
    });
    report
}

/// The array factorizations at symbolic `(b, c)` through row 6 and at a few
/// rational points through `order`.
pub fn factorizations(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("factorizations");
    let (b, c) = (R::b(), R::c());
    let mut sym = verify_factorizations(&b, &c, order.min(6));
    sym.scenario = "symbolic".into();
    report.extend(sym);
    for (bv, cv) in [
        (int(1), int(1)),
        (Rational::new(3.into(), 2.into()), int(-2)),
        (int(-3), int(5)),
    ] {
        let mut sub = verify_factorizations(&bv, &cv, order);
        sub.scenario = format!("b = {bv}, c = {cv}");
        report.extend(sub);
    }
    push(
        &mut report,
        "Q_2 = x^2 - 2x(b+c) + c(b+c)",
        OrthoFamily::new(OrthoKind::Q, b.clone(), c.clone(), 2),
        |fam| {
            let bc = b.clone() + c.clone();
            let q2 = Poly::new(vec![c.clone() * bc.clone(), -(R::from_i64(2) * bc), R::one()]);
            Check::bool("Q_2 = x^2 - 2x(b+c) + c(b+c)", fam.rows()[2] == q2)
        },
    );
    report
}

fn symbolic_moments(order: usize) -> Result<Vec<R>> {
    Ok(moment_gf(&R::b(), &R::c(), order)?.into_coeffs())
}

/// Hankel transform against its closed form and the J-fraction product.
pub fn hankel(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("hankel");
    let (b, c) = (R::b(), R::c());
    let n_max = (order / 2).min(5);
    let mu = symbolic_moments(2 * n_max);
    push(
        &mut report,
        "h_n = (bc)^n (b(b+c))^binom(n,2)",
        mu.clone().and_then(|m| hankel_transform(&m, n_max)),
        |h| {
            let expected: Vec<R> = (0..=n_max).map(|n| hankel_closed_form(&b, &c, n)).collect();
            Check::sequences("h_n = (bc)^n (b(b+c))^binom(n,2)", &h, &expected)
        },
    );
    push(
        &mut report,
        "Heilermann product from extracted J-fraction",
        mu.and_then(|m| Ok((hankel_transform(&m, n_max)?, jfraction_from_moments(&m, n_max)?))),
        |(h, j)| {
            let prod: Vec<R> = (0..=n_max).map(|n| j.hankel_product(n)).collect();
            Check::sequences("Heilermann product from extracted J-fraction", &prod, &h)
        },
    );
    for (bv, cv) in [(2, 3), (-1, 4)] {
        let (bq, cq) = (int(bv), int(cv));
        let name = format!("h_n closed form at b = {bv}, c = {cv}");
        push(
            &mut report,
            &name,
            moment_gf(&bq, &cq, 2 * order).and_then(|m| hankel_transform(m.coeffs(), order)),
            |h| {
                let expected: Vec<Rational> = (0..=order).map(|n| hankel_closed_form(&bq, &cq, n)).collect();
                Check::sequences(&name, &h, &expected)
            },
        );
    }
    report
}

/// Toeplitz transform, parameter recovery and the determinantal `P_n`.
pub fn toeplitz(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("toeplitz");
    let (b, c) = (R::b(), R::c());
    let n_max = order.min(5);
    let bm = symbolic_moments(n_max + 3).and_then(|m| extend_moments(&m, &c, n_max + 1));
    let dets = bm.clone().and_then(|bm| toeplitz_dets(&bm, n_max));
    push(&mut report, "t_n = (-b/c)^binom(n+1,2)", dets.clone(), |(t, _)| {
        let expected: Result<Vec<R>> = (0..=n_max).map(|n| toeplitz_closed_form(&b, &c, n)).collect();
        match expected {
            Ok(e) => Check::sequences("t_n = (-b/c)^binom(n+1,2)", &t, &e),
            Err(e) => Check::error("t_n = (-b/c)^binom(n+1,2)", &e),
        }
    });
    for n in 1..n_max {
        let name = format!("recover (b, c) from n = {n}");
        push(
            &mut report,
            &name,
            dets.clone().and_then(|(t, tp)| recover_parameters(&t, &tp, n)),
            |got| Check::sequences(&name, &[got.0, got.1], &[b.clone(), c.clone()]),
        );
    }
    for (bv, cv) in [(1, 1), (2, 3), (-2, 5)] {
        let (bq, cq) = (int(bv), int(cv));
        let name = format!("recover (b, c) at ({bv}, {cv})");
        let result = moment_gf(&bq, &cq, 12)
            .and_then(|m| extend_moments(m.coeffs(), &cq, 10))
            .and_then(|bm| toeplitz_dets(&bm, 5))
            .and_then(|(t, tp)| {
                (1..=4)
                    .map(|n| recover_parameters(&t, &tp, n))
                    .collect::<Result<Vec<_>>>()
            });
        push(&mut report, &name, result, |pairs| {
            Check::bool(&name, pairs.iter().all(|p| p.0 == bq && p.1 == cq))
        });
    }
    let rows = LbpFamily::constant(b.clone(), c.clone(), n_max).and_then(|f| f.rows(n_max));
    push(
        &mut report,
        "determinantal P_n = recurrence P_n",
        bm.and_then(|bm| {
            Ok((
                (0..=n_max)
                    .map(|n| lbp_by_determinant(&bm, n))
                    .collect::<Result<Vec<_>>>()?,
                rows?,
            ))
        }),
        |(det, rec)| Check::sequences("determinantal P_n = recurrence P_n", &det, &rec),
    );
    report
}

/// Continued fractions against the closed-form moment series.
pub fn cfrac(order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("cfrac");
    let (b, c) = (R::b(), R::c());
    let mu = moment_gf(&b, &c, order);
    let mu_tilde = tfraction_closed_form(&b, &c, order);
    let compare = |report: &mut ScenarioReport,
                   name: &str,
                   got: Result<TruncatedSeries<R>>,
                   want: &Result<TruncatedSeries<R>>| {
        push(report, name, got.and_then(|g| Ok((g, want.clone()?))), |(g, w)| {
            Check::sequences(name, g.coeffs(), w.coeffs())
        });
    };
    compare(
        &mut report,
        "S-fraction = mu",
        SFraction::lbp(&b, &c, order).expand(order),
        &mu,
    );
    compare(
        &mut report,
        "J-fraction = mu",
        JFraction::lbp(&b, &c, JFraction::<R>::levels_for(order)).expand(order),
        &mu,
    );
    compare(
        &mut report,
        "T-fraction = mu~",
        TFraction::constant(&b, &c, order).expand(order),
        &mu_tilde,
    );
    compare(
        &mut report,
        "iterated T-fraction = mu~",
        tfraction_by_iteration(&b, &c, order),
        &mu_tilde,
    );
    compare(
        &mut report,
        "1 + c t mu~ = mu",
        mu_tilde
            .clone()
            .map(|m| &TruncatedSeries::one(order) + &m.mul_t().scale(&c)),
        &mu,
    );
    let prop12: Vec<R> = (0..=order as i64)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    R::from_rational(&big(binomial(n + k, 2 * k) * catalan(k as usize)))
                        * c.pow((n - k) as u32)
                        * b.pow(k as u32)
                })
                .fold(R::zero(), |a, x| a + x)
        })
        .collect();
    push(
        &mut report,
        "mu~_n = sum binom(n+k,2k) c^(n-k) b^k C_k",
        mu_tilde.clone(),
        |m| Check::sequences("mu~_n = sum binom(n+k,2k) c^(n-k) b^k C_k", m.coeffs(), &prop12),
    );
    let transform = (|| -> Result<TruncatedSeries<R>> {
        let geo = TruncatedSeries::new(vec![R::one(), -c.clone()], order).recip()?;
        let array = RiordanArray::new(geo.clone(), (&geo * &geo).mul_t())?;
        let bc = SFraction {
            alphas: cycled(&[], std::slice::from_ref(&b), order),
        }
        .expand(order)?;
        let m = array.matrix();
        Ok(TruncatedSeries::new(
            (0..=order)
                .map(|n| {
                    (0..=n)
                        .map(|k| m.get(n, k) * bc.coeff(k).clone())
                        .fold(R::zero(), |a, x| a + x)
                })
                .collect(),
            order,
        ))
    })();
    compare(
        &mut report,
        "(1/(1-ct), t/(1-ct)^2) applied to b^n C_n",
        transform,
        &mu_tilde,
    );
    let depth = order / 2;
    push(
        &mut report,
        "J-fraction extracted from mu",
        mu.clone().and_then(|m| jfraction_from_moments(m.coeffs(), depth)),
        |j| {
            let expected = JFraction::lbp(&b, &c, depth);
            Check::sequences(
                "J-fraction extracted from mu",
                &[j.diag, j.sub].concat(),
                &[expected.diag, expected.sub].concat(),
            )
        },
    );
    let report_uv = verify_uv_equality(&c, order);
    report.extend(report_uv);
    push(
        &mut report,
        "extra levels keep the prefix",
        SFraction::lbp(&b, &c, order + 3).expand(order),
        |s| match &mu {
            Ok(m) => Check::sequences("extra levels keep the prefix", s.coeffs(), m.coeffs()),
            Err(e) => Check::error("extra levels keep the prefix", e),
        },
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(Scenario::from_name(s.name()), Some(s));
        }
        assert_eq!(Scenario::from_name("example5"), None);
    }

    #[test]
    fn each_scenario_passes() {
        for s in &Scenario::ALL[1..] {
            let report = s.run(8);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn line_moments() {
        let rows = moments_on_line(-1, 3);
        assert_eq!(rows[2], ints(&[0, -1, 2]));
    }

    #[test]
    fn production_table_shape() {
        let p = symbolic_production_table(3);
        assert_eq!(p[0][1], R::one());
        assert_eq!(p[2][1], R::b() * (R::b() + R::c()));
    }
}
