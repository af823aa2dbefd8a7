//! Vendored OEIS fixtures and generators that reproduce them.
//!
//! A fixture file holds lines `<index> <integer>`. Triangles and square arrays
//! are stored flattened by rows (or antidiagonals), indexed from 0.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::algebra::combin::{binomial, large_schroeder};
use crate::algebra::scalar::int;
use crate::algebra::{Poly, Rational, Scalar, TruncatedSeries};
use crate::cfrac::tfraction_by_iteration;
use crate::error::{Error, Result};
use crate::lbp::{lbp_array, moment_catalan_sum, CoefficientSeq, LbpFamily, MomentRoute};
use crate::paths;
use crate::report::{Check, ScenarioReport};

pub const DEFAULT_FIXTURE_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/oeis");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisFixture {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl OeisFixture {
    pub fn parse(id: &str, text: &str) -> Result<Self> {
        let mut offset = None;
        let mut terms = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Fixture(format!("{id} line {}: expected `<index> <integer>`", line_no + 1));
            let (idx, val) = line.split_once(' ').ok_or_else(bad)?;
            let idx: i64 = idx.parse().map_err(|_| bad())?;
            let val: BigInt = val.parse().map_err(|_| bad())?;
            let start = *offset.get_or_insert(idx);
            if idx != start + terms.len() as i64 {
                return Err(Error::Fixture(format!(
                    "{id} line {}: index {idx} is not consecutive",
                    line_no + 1
                )));
            }
            terms.push(val);
        }
        let offset = offset.ok_or_else(|| Error::Fixture(format!("{id}: no terms")))?;
        Ok(Self {
            id: id.to_string(),
            offset,
            terms,
        })
    }

    pub fn load(dir: &Path, id: &str) -> Result<Self> {
        let path = dir.join(format!("{id}.txt"));
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Fixture(format!("missing fixture {}: {e}", path.display())))?;
        Self::parse(id, &text)
    }
}

pub fn default_fixture_dir() -> PathBuf {
    PathBuf::from(DEFAULT_FIXTURE_DIR)
}

/// A way of producing the first `len` terms of a sequence, starting at `offset`.
#[derive(Clone, Copy, Debug)]
pub struct Generator {
    pub id: &'static str,
    pub name: &'static str,
    pub description: &'static str,
    pub offset: i64,
    generate: fn(usize) -> Result<Vec<BigInt>>,
}

impl Generator {
    pub fn generate(&self, len: usize) -> Result<Vec<BigInt>> {
        (self.generate)(len)
    }
}

pub const GENERATORS: &[Generator] = &[
    Generator {
        id: "A006318",
        name: "mu-tilde",
        description: "T-fraction moments at b = c = 1",
        offset: 0,
        generate: gen_schroeder,
    },
    Generator {
        id: "A006318",
        name: "paths",
        description: "brute-force Schröder path count",
        offset: 0,
        generate: gen_schroeder_paths,
    },
    Generator {
        id: "A000108",
        name: "mu-tilde-c0",
        description: "T-fraction moments at b = 1, c = 0",
        offset: 0,
        generate: gen_catalan,
    },
    Generator {
        id: "A060693",
        name: "triangle",
        description: "coefficients of c^k in mu~_n at b = 1",
        offset: 0,
        generate: gen_peak_triangle,
    },
    Generator {
        id: "A060693",
        name: "peaks",
        description: "Schröder paths counted by peaks",
        offset: 0,
        generate: gen_peak_paths,
    },
    Generator {
        id: "A103210",
        name: "moments",
        description: "LBP moments at b = 2, c = 1 (row sums of the b = c+1 triangle)",
        offset: 0,
        generate: gen_reversion_moments,
    },
    Generator {
        id: "A103210",
        name: "reversion",
        description: "1 + reversion of t(1-2t)/(1+t)",
        offset: 0,
        generate: gen_reversion,
    },
    Generator {
        id: "A155867",
        name: "periodic",
        description: "moments of b_n = 1,2,1,2,..., c = 1, from mu_1",
        offset: 0,
        generate: gen_periodic,
    },
    Generator {
        id: "A155867",
        name: "schroeder-sum",
        description: "sum_k binom(n+k,2k) S_k",
        offset: 0,
        generate: gen_schroeder_sum,
    },
    Generator {
        id: "A008288",
        name: "delannoy",
        description: "unsigned LBP coefficients at b = c = 1, by antidiagonals",
        offset: 0,
        generate: gen_delannoy,
    },
];

/// Generators for `id`; the first is the default.
pub fn generators_for(id: &str) -> Vec<&'static Generator> {
    GENERATORS.iter().filter(|g| g.id == id).collect()
}

pub fn find_generator(id: &str, name: Option<&str>) -> Result<&'static Generator> {
    let all = generators_for(id);
    let found = match name {
        None => all.first().copied(),
        Some(n) => all.iter().copied().find(|g| g.name == n),
    };
    found.ok_or_else(|| match name {
        Some(n) => Error::Parse(format!("no generator `{n}` for {id}")),
        None => Error::Parse(format!("no generator for {id}")),
    })
}

/// Compares a generator against a fixture over their common prefix.
pub fn check_against(generator: &Generator, fixture: &OeisFixture) -> Result<ScenarioReport> {
    if generator.offset != fixture.offset {
        return Err(Error::Fixture(format!(
            "{}: fixture offset {} but generator offset {}",
            fixture.id, fixture.offset, generator.offset
        )));
    }
    let got = generator.generate(fixture.terms.len())?;
    let overlap = got.len().min(fixture.terms.len());
    let mut report = ScenarioReport::new(format!("oeis-{}", fixture.id));
    let got: Vec<Rational> = got[..overlap].iter().cloned().map(Rational::from_integer).collect();
    let expected: Vec<Rational> = fixture.terms[..overlap]
        .iter()
        .cloned()
        .map(Rational::from_integer)
        .collect();
    let check = Check::sequences(format!("{} vs {}", generator.name, fixture.id), &got, &expected);
    let detail = match &check.detail {
        Some(d) => format!("{d}; overlap {overlap} terms"),
        None => format!("overlap {overlap} terms"),
    };
    report.push(check.with_detail(detail));
    Ok(report)
}

pub fn oeis_check(dir: &Path, id: &str, generator: Option<&str>) -> Result<ScenarioReport> {
    let fixture = OeisFixture::load(dir, id)?;
    check_against(find_generator(id, generator)?, &fixture)
}

fn to_integers(values: &[Rational]) -> Result<Vec<BigInt>> {
    values
        .iter()
        .map(|v| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::Fixture(format!("generated term {v} is not an integer")))
            }
        })
        .collect()
}

/// Rows of a triangle until `len` entries are available, flattened.
fn flatten(len: usize, mut row: impl FnMut(usize) -> Result<Vec<BigInt>>) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(len);
    let mut n = 0;
    while out.len() < len {
        out.extend(row(n)?);
        n += 1;
    }
    out.truncate(len);
    Ok(out)
}

fn rows_needed(len: usize) -> usize {
    (0..).find(|n| (n + 1) * (n + 2) / 2 >= len).unwrap_or(0)
}

fn last(len: usize) -> usize {
    len.saturating_sub(1)
}

fn gen_schroeder(len: usize) -> Result<Vec<BigInt>> {
    to_integers(tfraction_by_iteration(&int(1), &int(1), last(len))?.coeffs())
}

fn gen_schroeder_paths(len: usize) -> Result<Vec<BigInt>> {
    // enumeration is exponential; stop at semilength 9
    Ok((0..len.min(10))
        .map(|n| BigInt::from(paths::count_by_level_steps(n).iter().sum::<u64>()))
        .collect())
}

fn gen_catalan(len: usize) -> Result<Vec<BigInt>> {
    to_integers(tfraction_by_iteration(&int(1), &int(0), last(len))?.coeffs())
}

fn gen_peak_triangle(len: usize) -> Result<Vec<BigInt>> {
    let n_max = rows_needed(len);
    let c = Poly::<Rational>::x();
    let series = tfraction_by_iteration(&Poly::one(), &c, n_max)?;
    flatten(len, |n| to_integers(&series.coeff(n).padded(n)))
}

fn gen_peak_paths(len: usize) -> Result<Vec<BigInt>> {
    let n_max = rows_needed(len).min(9);
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.extend(paths::count_by_peaks(n).into_iter().map(BigInt::from));
    }
    out.truncate(len);
    Ok(out)
}

fn gen_reversion_moments(len: usize) -> Result<Vec<BigInt>> {
    to_integers(
        &(0..len)
            .map(|n| moment_catalan_sum(n, &int(2), &int(1)))
            .collect::<Vec<_>>(),
    )
}

fn gen_reversion(len: usize) -> Result<Vec<BigInt>> {
    let order = last(len);
    let fbar = lbp_array(&int(2), &int(1), order.max(1))?
        .inverse()?
        .f()
        .truncate(order);
    to_integers((&TruncatedSeries::one(order) + &fbar).coeffs())
}

fn gen_periodic(len: usize) -> Result<Vec<BigInt>> {
    let family = LbpFamily::new(
        CoefficientSeq::Periodic(vec![int(1), int(2)]),
        CoefficientSeq::Constant(int(1)),
        len,
    )?;
    let mu = family.moments(MomentRoute::MatrixInverse)?.values;
    to_integers(&mu[1..])
}

fn gen_schroeder_sum(len: usize) -> Result<Vec<BigInt>> {
    Ok((0..len as i64)
        .map(|n| {
            (0..=n)
                .map(|k| binomial(n + k, 2 * k) * large_schroeder(k as usize))
                .sum()
        })
        .collect())
}

fn gen_delannoy(len: usize) -> Result<Vec<BigInt>> {
    let n_max = rows_needed(len);
    let l = lbp_array(&int(1), &int(1), n_max)?.matrix();
    flatten(len, |n| {
        let row: Vec<Rational> = l.rows()[n]
            .iter()
            .map(|v| if v < &int(0) { -v.clone() } else { v.clone() })
            .collect();
        to_integers(&row)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fixture() {
        let f = OeisFixture::parse("X", "3 1\n4 -2\n5 30000000000000000000000\n").unwrap();
        assert_eq!(f.offset, 3);
        assert_eq!(f.terms[2], "30000000000000000000000".parse::<BigInt>().unwrap());
        assert!(OeisFixture::parse("X", "0 1\n2 3\n").is_err());
        assert!(OeisFixture::parse("X", "0 x\n").is_err());
        assert!(OeisFixture::parse("X", "").is_err());
    }

    #[test]
    fn every_generator_matches_its_fixture() {
        let dir = default_fixture_dir();
        for g in GENERATORS {
            let report = oeis_check(&dir, g.id, Some(g.name)).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn errors() {
        let dir = default_fixture_dir();
        assert!(matches!(oeis_check(&dir, "A999999", None), Err(Error::Fixture(_))));
        assert!(oeis_check(&dir, "A000108", Some("nope")).is_err());
        let shifted = OeisFixture {
            id: "A000108".into(),
            offset: 1,
            terms: vec![BigInt::from(1)],
        };
        assert!(check_against(find_generator("A000108", None).unwrap(), &shifted).is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let fixture = OeisFixture::parse("A000108", "0 1\n1 1\n2 3\n").unwrap();
        let report = check_against(find_generator("A000108", None).unwrap(), &fixture).unwrap();
        assert!(!report.passed());
        assert_eq!(report.checks[0].first_mismatch, Some(2));
    }
}
