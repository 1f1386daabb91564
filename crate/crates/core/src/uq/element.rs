//! Normally ordered elements of U_q(sl₂) in the PBW basis `F^a K^b E^c`.
//!
//! Internally the basis uses `Ẽ = (q − q⁻¹)E`, for which the commutation
//! relation `ẼF − FẼ = K − K⁻¹` has Laurent-polynomial coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use super::ratfunc::{q_integer, q_minus_qinv, RationalFunctionQ, RationalFunctionRecord};
use crate::error::Result;

/// Exponents `(a, b, c)` of `F^a K^b Ẽ^c`.
pub(crate) type Mono = (u32, i64, u32);

type Terms = Vec<(Mono, RationalFunctionQ)>;

static STRAIGHTEN: LazyLock<RwLock<HashMap<(u32, u32), Arc<Terms>>>> = LazyLock::new(Default::default);

/// Normal form of `Ẽ^c F^a`.
fn straighten(c: u32, a: u32) -> Arc<Terms> {
    if let Some(t) = STRAIGHTEN.read().unwrap().get(&(c, a)) {
        return t.clone();
    }
    let value: Terms = if c == 0 {
        vec![((a, 0, 0), RationalFunctionQ::one())]
    } else {
        // Ẽ·F^{a'}K^bẼ^{c'} = q^{−2b}F^{a'}K^bẼ^{c'+1}
        //                    + [a'](q^{1−a'}F^{a'−1}K^{b+1} − q^{a'−1}F^{a'−1}K^{b−1})Ẽ^{c'}
        let prev = straighten(c - 1, a);
        let mut acc: HashMap<Mono, RationalFunctionQ> = HashMap::new();
        let mut push = |m: Mono, x: RationalFunctionQ| {
            let e = acc.entry(m).or_default();
            *e = e.add(&x);
        };
        for ((a1, b, c1), s) in prev.iter().map(|(m, s)| (*m, s)) {
            push((a1, b, c1 + 1), s.mul_q_pow(-2 * b));
            if a1 > 0 {
                let qa = s.mul(&q_integer(a1 as i64));
                push((a1 - 1, b + 1, c1), qa.mul_q_pow(1 - a1 as i64));
                push((a1 - 1, b - 1, c1), qa.mul_q_pow(a1 as i64 - 1).neg());
            }
        }
        let mut v: Terms = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        v
    };
    let value = Arc::new(value);
    STRAIGHTEN
        .write()
        .unwrap()
        .entry((c, a))
        .or_insert_with(|| value.clone())
        .clone()
}

/// Product of two basis monomials.
pub(crate) fn mul_mono(x: Mono, y: Mono) -> Arc<Terms> {
    let (a1, b1, c1) = x;
    let (a2, b2, c2) = y;
    if c1 == 0 || a2 == 0 {
        let k = -2 * (b1 * a2 as i64) - 2 * (b2 * c1 as i64);
        return Arc::new(vec![((a1 + a2, b1 + b2, c1 + c2), RationalFunctionQ::q_pow(k))]);
    }
    let s = straighten(c1, a2);
    Arc::new(
        s.iter()
            .map(|&((a, b, c), ref v)| {
                let k = -2 * b1 * a as i64 - 2 * b2 * c as i64;
                ((a1 + a, b1 + b + b2, c + c2), v.mul_q_pow(k))
            })
            .collect(),
    )
}

/// A finite sum `Σ coeff·F^a K^b E^c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UqElement {
    terms: BTreeMap<Mono, RationalFunctionQ>,
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunctionQ::one())
    }

    pub fn scalar(c: RationalFunctionQ) -> Self {
        Self::from_internal([((0, 0, 0), c)])
    }

    pub(crate) fn from_internal(terms: impl IntoIterator<Item = (Mono, RationalFunctionQ)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    fn add_term(&mut self, m: Mono, c: &RationalFunctionQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `F^a K^b E^c`.
    pub fn monomial(a: u32, b: i64, c: u32) -> Self {
        let s = q_minus_qinv().pow(c).inv().expect("q − q⁻¹ is invertible");
        Self::from_internal([((a, b, c), s)])
    }

    /// `coeff · F^a K^b E^c`.
    pub fn term(coeff: RationalFunctionQ, a: u32, b: i64, c: u32) -> Self {
        Self::monomial(a, b, c).scale(&coeff)
    }

    pub fn e() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn f() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn k() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn k_pow(b: i64) -> Self {
        Self::monomial(0, b, 0)
    }

    pub(crate) fn internal_terms(&self) -> &BTreeMap<Mono, RationalFunctionQ> {
        &self.terms
    }

    /// Coefficient of `F^a K^b E^c`.
    pub fn coeff(&self, a: u32, b: i64, c: u32) -> RationalFunctionQ {
        match self.terms.get(&(a, b, c)) {
            Some(x) => x.mul(&q_minus_qinv().pow(c)),
            None => RationalFunctionQ::zero(),
        }
    }

    /// Nonzero terms `((a, b, c), coeff)` of `F^a K^b E^c`, sorted by exponents.
    pub fn terms(&self) -> Vec<((u32, i64, u32), RationalFunctionQ)> {
        self.terms
            .iter()
            .map(|(&m, x)| (m, x.mul(&q_minus_qinv().pow(m.2))))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, x) in &other.terms {
            out.add_term(m, x);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, x) in &other.terms {
            out.add_term(m, &x.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        UqElement {
            terms: self.terms.iter().map(|(&m, x)| (m, x.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunctionQ) -> Self {
        Self::from_internal(self.terms.iter().map(|(&m, x)| (m, x.mul(c))))
    }

    /// Normally ordered product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Mono, RationalFunctionQ> = HashMap::new();
        for (&m1, x) in &self.terms {
            for (&m2, y) in &other.terms {
                let xy = x.mul(y);
                for (m, s) in mul_mono(m1, m2).iter() {
                    let e = acc.entry(*m).or_default();
                    *e = e.add(&xy.mul(s));
                }
            }
        }
        Self::from_internal(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `xy − yx`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// `[x, E] = [x, F] = [x, K] = 0`.
    pub fn is_central(&self) -> bool {
        [Self::e(), Self::f(), Self::k()].iter().all(|g| self.commutator(g).is_zero())
    }

    /// True when every coefficient in the `F^a K^b E^c` basis lies in ℤ[q, q⁻¹].
    pub fn is_laurent(&self) -> bool {
        self.terms().iter().all(|(_, x)| x.is_laurent())
    }

    /// Sum of terms with `a = c`; the remaining part has nonzero weight.
    pub fn degree_zero_part(&self) -> Self {
        UqElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0 == m.2)
                .map(|(&m, x)| (m, x.clone()))
                .collect(),
        }
    }

    pub fn record(&self) -> UqElementRecord {
        UqElementRecord(self.terms().into_iter().map(|(m, x)| (m, x.record())).collect())
    }

    pub fn from_record(r: &UqElementRecord) -> Result<Self> {
        let mut out = Self::zero();
        for (&(a, b, c), x) in r.0.iter().map(|(m, x)| (m, x)) {
            out = out.add(&Self::term(RationalFunctionQ::from_record(x)?, a, b, c));
        }
        Ok(out)
    }
}

/// JSON form: a list of `[[a, b, c], {num, den, qpow}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UqElementRecord(pub Vec<((u32, i64, u32), RationalFunctionRecord)>);

fn fmt_mono(a: u32, b: i64, c: u32) -> String {
    let mut parts = Vec::new();
    let pw = |s: &str, e: i64| if e == 1 { s.to_string() } else { format!("{s}^{e}") };
    if a > 0 {
        parts.push(pw("F", a as i64));
    }
    if b != 0 {
        parts.push(pw("K", b));
    }
    if c > 0 {
        parts.push(pw("E", c as i64));
    }
    parts.join("·")
}

impl fmt::Display for UqElement {
    /// `coeff·F^a·K^b·E^c` terms; multi-term coefficients are parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by_key(|((a, b, c), _)| (*a, *c, std::cmp::Reverse(*b)));
        for (n, ((a, b, c), x)) in terms.into_iter().enumerate() {
            let mono = fmt_mono(a, b, c);
            let single = x.laurent_coeffs().is_some_and(|(_, v)| v.len() == 1);
            let negative = single && x.numerator().lc() < num_bigint::BigInt::from(0);
            let shown = if negative { x.neg() } else { x };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if single { shown.to_string() } else { format!("({shown})") };
            match (shown.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{coeff}")?,
                (false, false) => write!(f, "{coeff}·{mono}")?,
            }
        }
        Ok(())
    }
}
