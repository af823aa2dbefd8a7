//! Polynomials in the two recurrence parameters `b` and `c` with rational
//! coefficients, including an exact gcd.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Rational;

/// Sparse polynomial in `b` and `c`, keyed by the exponent pair
/// `(deg_b, deg_c)`. Zero coefficients are never stored.
///
/// The `BTreeMap` order on keys is lexicographic with `b > c`, so the last
/// entry is the leading term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::monomial(0, 0, q)
    }

    pub fn monomial(deg_b: u32, deg_c: u32, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert((deg_b, deg_c), q);
        }
        Self { terms }
    }

    pub fn var_b() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn var_c() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, v) in it {
            p.add_term(k, v);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_b: u32, deg_c: u32) -> Rational {
        self.terms.get(&(deg_b, deg_c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.last_key_value().map(|(k, v)| (*k, v))
    }

    pub fn degree_b(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * q)).collect(),
        }
    }

    pub fn evaluate(&self, b: &Rational, c: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), q)| q * num_traits::pow(b.clone(), i as usize) * num_traits::pow(c.clone(), j as usize))
            .fold(Rational::zero(), |a, x| a + x)
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// Gcd of the numerators, meaningful once the polynomial is integral.
    pub fn numerator_gcd(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, q| acc.gcd(q.numer()))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &BivarPoly) -> Option<BivarPoly> {
        let ((db, dc), dlc) = d.leading()?;
        let dlc = dlc.clone();
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some(((rb, rc), rlc)) = rem.leading() {
            if rb < db || rc < dc {
                return None;
            }
            let m = BivarPoly::monomial(rb - db, rc - dc, rlc / &dlc);
            rem = &rem - &(&m * d);
            quot = &quot + &m;
        }
        Some(quot)
    }

    /// Monic (in the lexicographic leading coefficient) greatest common
    /// divisor. `gcd(0, 0) = 0`.
    pub fn gcd(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return BivarPoly::one();
        }
        let ra = to_recursive(a);
        let rb = to_recursive(b);
        let ca = r_content(&ra);
        let cb = r_content(&rb);
        let gc = u_gcd(&ca, &cb);
        let mut p = r_div_u(&ra, &ca);
        let mut q = r_div_u(&rb, &cb);
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_empty() {
            let r = r_prem(&p, &q);
            p = q;
            q = if r.is_empty() {
                Vec::new()
            } else {
                let cr = r_content(&r);
                r_div_u(&r, &cr)
            };
        }
        let cp = r_content(&p);
        let p = r_div_u(&p, &cp);
        let g = r_mul_u(&p, &gc);
        from_recursive(&g).monic()
    }

    pub fn monic(&self) -> BivarPoly {
        match self.leading() {
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => BivarPoly::zero(),
        }
    }
}

// --- univariate helpers over Q[c] -------------------------------------------

type UPoly = Vec<Rational>;

fn u_trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|x| x.is_zero()) {
        a.pop();
    }
    a
}

fn u_mul(a: &[Rational], b: &[Rational]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_sub(a: &[Rational], b: &[Rational]) -> UPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    u_trim(out)
}

fn u_divrem(a: &[Rational], b: &[Rational]) -> (UPoly, UPoly) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lc;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &f * y;
        }
        q[shift] = f;
        r.pop();
        r = u_trim(r);
    }
    (u_trim(q), r)
}

fn u_monic(a: UPoly) -> UPoly {
    match a.last() {
        Some(lc) => {
            let inv = lc.recip();
            a.iter().map(|x| x * &inv).collect()
        }
        None => a,
    }
}

fn u_gcd(a: &[Rational], b: &[Rational]) -> UPoly {
    let mut x = u_monic(a.to_vec());
    let mut y = u_monic(b.to_vec());
    while !y.is_empty() {
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = u_monic(r);
    }
    u_monic(x)
}

// --- recursive representation Q[c][b] ---------------------------------------

type RPoly = Vec<UPoly>;

fn to_recursive(p: &BivarPoly) -> RPoly {
    let mut out: RPoly = vec![Vec::new(); p.degree_b() as usize + 1];
    for (&(i, j), q) in p.terms() {
        let slot = &mut out[i as usize];
        if slot.len() <= j as usize {
            slot.resize(j as usize + 1, Rational::zero());
        }
        slot[j as usize] = q.clone();
    }
    out
}

fn from_recursive(r: &[UPoly]) -> BivarPoly {
    BivarPoly::from_terms(r.iter().enumerate().flat_map(|(i, u)| {
        u.iter()
            .enumerate()
            .map(move |(j, q)| ((i as u32, j as u32), q.clone()))
    }))
}

fn r_trim(mut r: RPoly) -> RPoly {
    while r.last().is_some_and(|u| u.is_empty()) {
        r.pop();
    }
    r
}

fn r_content(r: &[UPoly]) -> UPoly {
    r.iter().filter(|u| !u.is_empty()).fold(Vec::new(), |acc, u| {
        if acc.is_empty() {
            u_monic(u.clone())
        } else {
            u_gcd(&acc, u)
        }
    })
}

fn r_div_u(r: &[UPoly], u: &[Rational]) -> RPoly {
    r.iter()
        .map(|x| if x.is_empty() { Vec::new() } else { u_divrem(x, u).0 })
        .collect()
}

fn r_mul_u(r: &[UPoly], u: &[Rational]) -> RPoly {
    r.iter().map(|x| u_mul(x, u)).collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in `b` over `Q[c]`.
fn r_prem(a: &[UPoly], b: &[UPoly]) -> RPoly {
    let lb = b.last().unwrap().clone();
    let mut r: RPoly = a.to_vec();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let mut next: RPoly = r.iter().map(|x| u_mul(x, &lb)).collect();
        for (i, y) in b.iter().enumerate() {
            let t = u_mul(&lr, y);
            next[shift + i] = u_sub(&next[shift + i], &t);
        }
        next.pop();
        r = r_trim(next);
    }
    r
}

// --- arithmetic -------------------------------------------------------------

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: BivarPoly) -> BivarPoly {
        &self - &rhs
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

// --- rendering --------------------------------------------------------------

/// Terms in descending total degree, ties broken by the higher power of `b`
/// first; coefficients as reduced rationals, `*` between factors.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|(k, _)| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (idx, (&(i, j), q)) in keys.into_iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("b", i), ("c", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}
