//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A value is stored as an integer coefficient vector over a common positive
//! denominator, in the power basis 1, ζ, …, ζ^{φ(N)-1} reduced modulo Φ_N.
//! That form is canonical, so equality is a field-by-field comparison once
//! both operands share a conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{rational_string, Field, RootField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

struct Cyclo {
    n: u64,
    phi: usize,
    /// ζ^j in the power basis for j in 0..n, stored sparsely.
    powers: Vec<Vec<(usize, i64)>>,
    /// Coefficients of Φ_n, lowest degree first (monic).
    poly: Vec<i64>,
}

fn cyclotomic_poly(n: u64) -> Vec<i64> {
    // X^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclo_data(d).poly.clone();
            num = poly_div_exact(&num, &div);
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (k, &dk) in den.iter().enumerate() {
                rem[i + k] -= c * dk;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn build_cyclo(n: u64) -> Cyclo {
    let poly = if n == 1 { vec![-1, 1] } else { cyclotomic_poly(n) };
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        );
        // multiply by X and reduce the overflow with the monic Φ_n
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * poly[i];
            }
        }
    }
    Cyclo { n, phi, powers, poly }
}

fn cyclo_data(n: u64) -> Arc<Cyclo> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Cyclo>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = cache.read().unwrap().get(&n) {
        return c.clone();
    }
    let built = Arc::new(build_cyclo(n));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

/// Euler's totient.
pub fn totient(n: u64) -> usize {
    cyclo_data(n).phi
}

#[derive(Clone)]
pub struct CycRational {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycRational {
    pub fn zero_in(n: u64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        CycRational { conductor: n, num: vec![BigInt::zero(); totient(n)], den: BigInt::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        CycRational { conductor: 1, num: vec![r.numer().clone()], den: r.denom().clone() }
    }

    pub fn from_int(n: i64) -> Self {
        CycRational { conductor: 1, num: vec![BigInt::from(n)], den: BigInt::one() }
    }

    /// ζ_N^k.
    pub fn zeta(n: u64, k: i64) -> Self {
        let cy = cyclo_data(n);
        let j = k.rem_euclid(n as i64) as usize;
        let mut num = vec![BigInt::zero(); cy.phi];
        for &(i, c) in &cy.powers[j] {
            num[i] = BigInt::from(c);
        }
        CycRational { conductor: n, num, den: BigInt::one() }
    }

    /// Builds a value from rational coordinates in the power basis; the
    /// sequence may be longer than φ(N) and is reduced.
    pub fn from_coeffs(n: u64, coeffs: &[BigRational]) -> Self {
        let cy = cyclo_data(n);
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num = vec![BigInt::zero(); cy.phi];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            for &(i, v) in &cy.powers[k % cy.n as usize] {
                num[i] += &scaled * v;
            }
        }
        let mut out = CycRational { conductor: n, num, den };
        out.normalize();
        out
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Rational coordinates in the power basis, length φ(N).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Embeds into ℚ(ζ_m); `m` must be a multiple of the conductor.
    pub fn promote(&self, m: u64) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.conductor), "conductor {} does not divide {}", self.conductor, m);
        let step = (m / self.conductor) as usize;
        let cy = cyclo_data(m);
        let mut num = vec![BigInt::zero(); cy.phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, v) in &cy.powers[(k * step) % m as usize] {
                num[i] += c * v;
            }
        }
        CycRational { conductor: m, num, den: self.den.clone() }
    }

    fn degree(&self) -> Option<usize> {
        self.num.iter().rposition(|c| !c.is_zero())
    }

    fn normalize(&mut self) {
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.conductor.lcm(&b.conductor);
        (a.promote(m), b.promote(m))
    }

    fn add_same(&self, other: &Self, negate: bool) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let mut out = self.clone();
        out.add_assign_same(other, negate);
        out
    }

    fn add_assign_same(&mut self, other: &Self, negate: bool) {
        if other.degree().is_none() {
            return;
        }
        if self.den == other.den {
            for (a, b) in self.num.iter_mut().zip(&other.num) {
                if negate {
                    *a -= b;
                } else {
                    *a += b;
                }
            }
        } else {
            let l = self.den.lcm(&other.den);
            let fa = &l / &self.den;
            let fb = &l / &other.den;
            for (a, b) in self.num.iter_mut().zip(&other.num) {
                if !fa.is_one() {
                    *a *= &fa;
                }
                if negate {
                    *a -= b * &fb;
                } else {
                    *a += b * &fb;
                }
            }
            self.den = l;
        }
        self.normalize();
    }

    fn mul_same(&self, other: &Self) -> Self {
        let n = self.conductor;
        let (da, db) = match (self.degree(), other.degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Self::zero_in(n),
        };
        let cy = cyclo_data(n);
        let mut res = vec![BigInt::zero(); cy.phi];
        if da == 0 && db == 0 {
            res[0] = &self.num[0] * &other.num[0];
        } else {
            let mut prod = vec![BigInt::zero(); da + db + 1];
            for i in 0..=da {
                if self.num[i].is_zero() {
                    continue;
                }
                for j in 0..=db {
                    if !other.num[j].is_zero() {
                        prod[i + j] += &self.num[i] * &other.num[j];
                    }
                }
            }
            for (k, c) in prod.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if k < cy.phi {
                    res[k] += c;
                } else {
                    for &(i, v) in &cy.powers[k % n as usize] {
                        res[i] += &c * v;
                    }
                }
            }
        }
        let mut out = CycRational { conductor: n, num: res, den: &self.den * &other.den };
        out.normalize();
        out
    }

    /// Inverse through the extended Euclidean algorithm against Φ_N.
    fn inverse(&self) -> Option<Self> {
        let deg = self.degree()?;
        if deg == 0 {
            let r = BigRational::new(self.den.clone(), self.num[0].clone());
            return Some(Self::from_rational(&r).promote(self.conductor));
        }
        let cy = cyclo_data(self.conductor);
        let a: Vec<BigRational> = self.coeffs();
        let m: Vec<BigRational> =
            cy.poly.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        // invariant: s_i * a ≡ r_i (mod Φ)
        let (mut r0, mut r1) = (m, trim(a));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ_N is irreducible
        let c = r1[0].clone();
        let s: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
        Some(Self::from_coeffs(self.conductor, &s))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let inv = rhs.inverse().ok_or(ScalarError::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }

    /// Least m with a^m = 1, if `self` is a root of unity.
    pub fn unity_order(&self) -> Option<u64> {
        self.degree()?;
        let l = 2u64.lcm(&self.conductor);
        let one = Self::one();
        (1..=l).filter(|m| l.is_multiple_of(*m)).find(|&m| Field::pow(self, m) == one)
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (k, bk) in b.iter().enumerate() {
                r[i + k] -= &c * bk;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (q, trim(r))
}

impl PartialEq for CycRational {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = Self::align(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycRational {}

impl Zero for CycRational {
    fn zero() -> Self {
        Self::zero_in(1)
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
}

impl One for CycRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycRational> for &CycRational {
            type Output = CycRational;
            fn $m(self, rhs: &CycRational) -> CycRational {
                let f: fn(&CycRational, &CycRational) -> CycRational = $body;
                if self.conductor == rhs.conductor {
                    f(self, rhs)
                } else {
                    let (a, b) = CycRational::align(self, rhs);
                    f(&a, &b)
                }
            }
        }
        impl $tr<CycRational> for CycRational {
            type Output = CycRational;
            fn $m(self, rhs: CycRational) -> CycRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycRational> for CycRational {
            type Output = CycRational;
            fn $m(self, rhs: &CycRational) -> CycRational {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_same(b, false));
binop!(Sub, sub, |a, b| a.add_same(b, true));
binop!(Mul, mul, |a, b| a.mul_same(b));
binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl Neg for CycRational {
    type Output = CycRational;
    fn neg(mut self) -> CycRational {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &CycRational {
    type Output = CycRational;
    fn neg(self) -> CycRational {
        -self.clone()
    }
}

impl AddAssign<&CycRational> for CycRational {
    fn add_assign(&mut self, rhs: &CycRational) {
        if self.conductor == rhs.conductor {
            self.add_assign_same(rhs, false);
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycRational> for CycRational {
    fn sub_assign(&mut self, rhs: &CycRational) {
        if self.conductor == rhs.conductor {
            self.add_assign_same(rhs, true);
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Field for CycRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        self.inverse()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *self += &p;
    }
}

impl RootField for CycRational {
    fn zeta(n: u64, k: i64) -> Option<Self> {
        Some(CycRational::zeta(n, k))
    }

    fn unity_order(&self) -> Option<u64> {
        CycRational::unity_order(self)
    }

    fn with_conductor(&self, n: u64) -> Self {
        if n.is_multiple_of(self.conductor) {
            self.promote(n)
        } else {
            self.clone()
        }
    }
}

impl fmt::Debug for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `a0 + a1*z + a2*z^2 @N`, zero terms omitted, `0 @N` for zero.
impl fmt::Display for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = rational_string(c);
            terms.push(match k {
                0 => coef,
                1 => format!("{}*z", coef),
                _ => format!("{}*z^{}", coef, k),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} @{}", terms.join(" + "), self.conductor)
    }
}

impl FromStr for CycRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ScalarError::Parse { text: s.to_string(), reason: reason.into() };
        let (body, cond) = s.rsplit_once('@').ok_or_else(|| err("missing @N conductor"))?;
        let n: u64 = cond.trim().parse().map_err(|_| err("bad conductor"))?;
        if n == 0 {
            return Err(err("conductor must be positive"));
        }
        let mut coeffs: Vec<BigRational> = Vec::new();
        for term in body.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef, power) = match term.split_once('*') {
                None if term.ends_with('z') || term.contains("z^") => {
                    let (sign, rest) =
                        if let Some(r) = term.strip_prefix('-') { ("-1", r) } else { ("1", term) };
                    (sign.to_string(), parse_power(rest).ok_or_else(|| err("bad power"))?)
                }
                None => (term.to_string(), 0),
                Some((c, p)) => (c.trim().to_string(), parse_power(p.trim()).ok_or_else(|| err("bad power"))?),
            };
            let value: BigRational = coef.parse().map_err(|_| err("bad rational coefficient"))?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRational::zero());
            }
            coeffs[power] += value;
        }
        Ok(Self::from_coeffs(n, &coeffs))
    }
}

fn parse_power(p: &str) -> Option<usize> {
    if p == "z" {
        Some(1)
    } else {
        p.strip_prefix("z^")?.parse().ok()
    }
}

impl serde::Serialize for CycRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for CycRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sign helper: (-1)^e.
pub fn sign<F: Field>(e: usize) -> F {
    if e.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> CycRational {
        CycRational::zeta(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclo_data(4).poly, vec![1, 0, 1]);
        assert_eq!(cyclo_data(3).poly, vec![1, 1, 1]);
        assert_eq!(cyclo_data(12).poly, vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(10), 4);
        assert_eq!(totient(1), 1);
    }

    #[test]
    fn zeta_examples() {
        let minus_one = CycRational::from_int(-1);
        assert_eq!(&z(4, 1) * &z(4, 1), minus_one);
        assert_eq!(&z(3, 1) + &z(3, 2), minus_one);
        assert_eq!(z(2, 1), minus_one);
        assert_eq!(z(7, 0), CycRational::one());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&z(8, 1) * &z(8, 7), CycRational::one());
        let a = CycRational::one() - z(3, 1);
        let inv = (&CycRational::one() / &a).clone();
        assert_eq!(&inv * &a, CycRational::one());
        let mixed = &z(2, 1) * &z(3, 1);
        assert_eq!(mixed.conductor(), 6);
        assert_eq!(mixed, z(6, 5));
        // independent check by repeated multiplication
        let mut p = CycRational::one();
        for i in 1..=6 {
            p = &p * &mixed;
            if i == 3 {
                assert_eq!(p, CycRational::from_int(-1));
            }
        }
        assert_eq!(p, CycRational::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(CycRational::one().checked_div(&CycRational::zero_in(5)), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn unity_orders() {
        assert_eq!(CycRational::from_int(-1).unity_order(), Some(2));
        assert_eq!((-z(5, 1)).unity_order(), Some(10));
        // brute force over powers up to 2N
        let a = -z(5, 1);
        let brute = (1..=10u64).find(|&m| Field::pow(&a, m) == CycRational::one());
        assert_eq!(brute, Some(10));
        assert_eq!(CycRational::from_int(2).unity_order(), None);
        assert_eq!(CycRational::zero().unity_order(), None);
        assert_eq!((CycRational::one() + z(4, 1)).unity_order(), None);
    }

    #[test]
    fn display_round_trip() {
        let samples = [
            z(4, 1),
            CycRational::from_ratio(-3, 7),
            &z(5, 2) * &CycRational::from_ratio(1, 2) + CycRational::from_int(3),
            CycRational::zero_in(12),
        ];
        for s in samples {
            let text = s.to_string();
            let back: CycRational = text.parse().unwrap();
            assert_eq!(back.to_string(), text);
            assert_eq!(back, s);
        }
        assert_eq!(z(4, 1).to_string(), "1*z @4");
        assert_eq!(CycRational::from_ratio(-1, 2).to_string(), "-1/2 @1");
        assert_eq!("-z^2 @4".parse::<CycRational>().unwrap(), CycRational::one());
    }

    #[test]
    fn rejects_garbage() {
        assert!("1 + @4".parse::<CycRational>().is_err());
        assert!("1/0 @4".parse::<CycRational>().is_err());
        assert!("2".parse::<CycRational>().is_err());
    }
}
