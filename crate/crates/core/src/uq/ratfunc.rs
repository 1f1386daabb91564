//! Exact elements of ℚ(q) with integer-coefficient numerator and denominator.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::json::JsonInt;

/// Dense polynomial in `q` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly(vec![c]).trimmed()
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        Poly(c).trimmed()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    /// Number of factors of `q`.
    fn low_order(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn shift_down(&self, k: usize) -> Self {
        Poly(self.0[k..].to_vec())
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar(&self, c: &BigInt) -> Self {
        Poly(self.0.iter().map(|x| x / c).collect())
    }

    fn scale(&self, c: &BigInt) -> Self {
        Poly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lc();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lc();
            // r ← lc·r − c·q^{rd−dd}·d
            let mut next: Vec<BigInt> = r.0.iter().map(|x| x * &lc).collect();
            for (i, x) in d.0.iter().enumerate() {
                next[i + rd - dd] -= &c * x;
            }
            r = Poly(next).trimmed();
        }
        r
    }

    /// Exact quotient; `self` must be divisible by `d` in ℤ[q].
    fn div_exact(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lc();
        let mut r = self.0.clone();
        let Some(sd) = self.degree() else {
            return Poly::zero();
        };
        let mut quot = vec![BigInt::zero(); sd + 1 - dd.min(sd)];
        let mut top = sd;
        while top >= dd {
            if !r[top].is_zero() {
                let (c, rem) = r[top].div_rem(&lc);
                debug_assert!(rem.is_zero(), "inexact polynomial division");
                for (i, x) in d.0.iter().enumerate() {
                    r[i + top - dd] -= &c * x;
                }
                quot[top - dd] = c;
            }
            if top == 0 {
                break;
            }
            top -= 1;
        }
        debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Poly(quot).trimmed()
    }

    /// Greatest common divisor in ℤ[q] with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive().scale(&c)
    }

    pub fn neg(&self) -> Self {
        Poly(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, x) in self.0.iter().enumerate() {
            v[i] += x;
        }
        for (i, x) in other.0.iter().enumerate() {
            v[i] += x;
        }
        Poly(v).trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.0.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        Poly(v).trimmed()
    }

    /// Value at an integer point.
    fn eval_i64(&self, q: i64) -> BigInt {
        let qb = BigInt::from(q);
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * &qb + c)
    }
}

/// `q^{qpow} · num(q) / den(q)` in canonical form.
///
/// Canonical: `gcd(num, den) = 1`, `lc(den) > 0`, and `q` divides neither
/// `num` nor `den`. Zero is `0/1` with `qpow = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionQ {
    num: Poly,
    den: Poly,
    qpow: i64,
}

impl Default for RationalFunctionQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunctionQ {
    pub fn zero() -> Self {
        RationalFunctionQ {
            num: Poly::zero(),
            den: Poly::constant(BigInt::one()),
            qpow: 0,
        }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(Poly::constant(c), Poly::constant(BigInt::one()), 0).expect("nonzero denominator")
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        RationalFunctionQ {
            num: Poly::constant(BigInt::one()),
            den: Poly::constant(BigInt::one()),
            qpow: k,
        }
    }

    /// `c · q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::int(c).mul_q_pow(k)
    }

    /// The Laurent polynomial `Σ c_i q^{low+i}`.
    pub fn laurent(low: i64, coeffs: &[i64]) -> Self {
        let num = Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        Self::new(num, Poly::constant(BigInt::one()), low).expect("nonzero denominator")
    }

    pub fn new(num: Poly, den: Poly, qpow: i64) -> Result<Self> {
        if den.is_zero() {
            return domain("zero denominator");
        }
        Ok(Self::canonical(num, den, qpow))
    }

    fn canonical(num: Poly, den: Poly, mut qpow: i64) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let kn = num.low_order();
        let kd = den.low_order();
        let (mut num, mut den) = (num.shift_down(kn), den.shift_down(kd));
        qpow += kn as i64 - kd as i64;
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
            if den.lc().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        RationalFunctionQ { num, den, qpow }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn q_exponent(&self) -> i64 {
        self.qpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.qpow == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. `self ∈ ℤ[q, q⁻¹]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The integer value if `self` does not depend on `q`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        (self.qpow == 0 && self.den.is_one() && self.num.0.len() == 1).then(|| self.num.0[0].clone())
    }

    /// Laurent coefficients as `(lowest exponent, coefficients)`.
    pub fn laurent_coeffs(&self) -> Option<(i64, Vec<BigInt>)> {
        self.is_laurent().then(|| (self.qpow, self.num.0.clone()))
    }

    pub fn mul_q_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        RationalFunctionQ {
            qpow: self.qpow + k,
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunctionQ {
            num: self.num.neg(),
            ..self.clone()
        }
    }

    fn shifted_num(&self, low: i64) -> Poly {
        let k = (self.qpow - low) as usize;
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.num.0.iter().cloned());
        Poly(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.qpow.min(other.qpow);
        let a = self.shifted_num(low);
        let b = other.shifted_num(low);
        if self.den == other.den {
            return Self::canonical(a.add(&b), self.den.clone(), low);
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        Self::canonical(num, self.den.mul(&other.den), low)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let qpow = self.qpow + other.qpow;
        if self.den.is_one() && other.den.is_one() {
            return RationalFunctionQ {
                num: self.num.mul(&other.num),
                den: self.den.clone(),
                qpow,
            };
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den), qpow)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("inverse of zero");
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone(), -self.qpow))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at an integer `q ≠ 0`, as a reduced fraction `(num, den)`.
    pub fn eval(&self, q: i64) -> Option<(BigInt, BigInt)> {
        assert!(q != 0);
        let mut n = self.num.eval_i64(q);
        let mut d = self.den.eval_i64(q);
        if d.is_zero() {
            return None;
        }
        let qb = BigInt::from(q);
        match self.qpow.cmp(&0) {
            Ordering::Greater => n *= qb.pow(self.qpow as u32),
            Ordering::Less => d *= qb.pow((-self.qpow) as u32),
            Ordering::Equal => {}
        }
        let g = n.gcd(&d);
        if !g.is_zero() {
            n /= &g;
            d /= &g;
        }
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Some((n, d))
    }

    pub fn record(&self) -> RationalFunctionRecord {
        RationalFunctionRecord {
            num: self.num.0.iter().map(JsonInt::from).collect(),
            den: self.den.0.iter().map(JsonInt::from).collect(),
            qpow: self.qpow,
        }
    }

    pub fn from_record(r: &RationalFunctionRecord) -> Result<Self> {
        let conv = |v: &[JsonInt]| -> Result<Poly> {
            Ok(Poly::from_coeffs(v.iter().map(JsonInt::to_bigint).collect::<Result<_>>()?))
        };
        Self::new(conv(&r.num)?, conv(&r.den)?, r.qpow)
    }
}

/// `[n]_q = (q^n − q^{−n})/(q − q^{−1})`.
pub fn q_integer(n: i64) -> RationalFunctionQ {
    if n == 0 {
        return RationalFunctionQ::zero();
    }
    let k = n.unsigned_abs() as usize;
    // q^{1−k} + q^{3−k} + … + q^{k−1}
    let mut coeffs = vec![0i64; 2 * k - 1];
    for i in (0..coeffs.len()).step_by(2) {
        coeffs[i] = n.signum();
    }
    RationalFunctionQ::laurent(1 - k as i64, &coeffs)
}

/// `[n]_q! = [1]_q[2]_q⋯[n]_q`.
pub fn q_factorial(n: u32) -> RationalFunctionQ {
    (1..=n as i64).fold(RationalFunctionQ::one(), |acc, i| acc.mul(&q_integer(i)))
}

/// `q − q⁻¹`.
pub fn q_minus_qinv() -> RationalFunctionQ {
    RationalFunctionQ::laurent(-1, &[-1, 0, 1])
}

/// JSON form `{num, den, qpow}`, coefficient lists lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionRecord {
    pub num: Vec<JsonInt>,
    pub den: Vec<JsonInt>,
    pub qpow: i64,
}

fn fmt_laurent(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], low: i64) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = low + i as i64;
        let abs = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match (abs.is_one(), e) {
            (_, 0) => write!(f, "{abs}")?,
            (true, 1) => write!(f, "q")?,
            (true, _) => write!(f, "q^{e}")?,
            (false, 1) => write!(f, "{abs}q")?,
            (false, _) => write!(f, "{abs}q^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RationalFunctionQ {
    /// Laurent form `q^2 - 2 + q^-2`; non-Laurent values as `(…)/(…)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt_laurent(f, &self.num.0, self.qpow);
        }
        write!(f, "(")?;
        fmt_laurent(f, &self.num.0, self.qpow)?;
        write!(f, ")/(")?;
        fmt_laurent(f, &self.den.0, 0)?;
        write!(f, ")")
    }
}

impl Add for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn add(self, rhs: Self) -> RationalFunctionQ {
        RationalFunctionQ::add(self, rhs)
    }
}

impl Sub for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn sub(self, rhs: Self) -> RationalFunctionQ {
        RationalFunctionQ::sub(self, rhs)
    }
}

impl Mul for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn mul(self, rhs: Self) -> RationalFunctionQ {
        RationalFunctionQ::mul(self, rhs)
    }
}

impl Neg for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn neg(self) -> RationalFunctionQ {
        RationalFunctionQ::neg(self)
    }
}
