//! The monoid `M⁺ = ½Q ∩ P⁺` of dominant weights in the half root lattice.
//!
//! Membership, the Hilbert basis (its irreducible elements), the diagram
//! involution and the two families of weight identities that become the
//! relations of the monoid algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::root_system::{Family, RootSystem, Weight};

/// The split of the simple types by the shape of `Hilb(M⁺)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TypeClass {
    /// `Hilb(M⁺)` is the set of fundamental weights.
    TypeI,
    /// `A_n (n ≥ 2)`, `D_{2k+1} (k ≥ 2)` and `E_6`: a nontrivial diagram involution.
    TypeII,
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeClass::TypeI => f.write_str("I"),
            TypeClass::TypeII => f.write_str("II"),
        }
    }
}

pub fn classify_type(rs: &RootSystem) -> TypeClass {
    let n = rs.rank();
    match rs.family() {
        Family::A if n >= 2 => TypeClass::TypeII,
        Family::D if n % 2 == 1 => TypeClass::TypeII,
        Family::E if n == 6 => TypeClass::TypeII,
        _ => TypeClass::TypeI,
    }
}

/// `λ ∈ M⁺`: dominant, and every simple-root coordinate lies in ½ℤ.
pub fn in_monoid(rs: &RootSystem, lambda: &Weight) -> bool {
    lambda.is_dominant() && in_half_root_lattice(rs, lambda)
}

/// `λ ∈ ½Q`, with no dominance requirement (the lattice `M = ½Q ∩ P`).
pub fn in_half_root_lattice(rs: &RootSystem, lambda: &Weight) -> bool {
    let det = rs.det();
    rs.scaled_root_coords(lambda).iter().all(|&x| (2 * x) % det == 0)
}

/// `r_{n+1} = (n+1) / gcd(n+1, 2)`.
pub fn type_a_modulus(n: usize) -> i64 {
    let m = n as i64 + 1;
    m / m.gcd(&2)
}

/// Type-A membership criterion: a dominant `λ` lies in `M⁺` iff
/// `Σ i·a_i ∈ r_{n+1} ℤ`.
pub fn type_a_membership(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    if rs.family() != Family::A {
        return domain(format!("type-A membership criterion called for {rs}"));
    }
    let r = type_a_modulus(rs.rank());
    let weighted: i64 = lambda.0.iter().enumerate().map(|(i, &a)| (i as i64 + 1) * a).sum();
    Ok(lambda.is_dominant() && weighted % r == 0)
}

/// A weight certified to lie in `M⁺`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonoidElement(Weight);

impl MonoidElement {
    pub fn new(rs: &RootSystem, lambda: Weight) -> Result<Self> {
        if lambda.rank() != rs.rank() {
            return domain(format!("weight {lambda} has the wrong rank for {rs}"));
        }
        if !in_monoid(rs, &lambda) {
            return domain(format!("{lambda} is not in M+ for {rs}"));
        }
        Ok(MonoidElement(lambda))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn coords(&self) -> &[i64] {
        &self.0 .0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }

    /// Sum of two monoid elements (the monoid is closed under addition).
    pub fn add(&self, other: &MonoidElement) -> MonoidElement {
        MonoidElement(self.0.add(&other.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An automorphism `σ` of the Dynkin diagram with `σ² = id` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramInvolution {
    sigma: Vec<usize>,
}

impl DiagramInvolution {
    pub fn identity(n: usize) -> Self {
        DiagramInvolution { sigma: (0..n).collect() }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.sigma[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// `λ̄ = Σ a_{σ(i)} ϖ_i`.
    pub fn conjugate_weight(&self, lambda: &Weight) -> Weight {
        Weight((0..self.sigma.len()).map(|i| lambda.0[self.sigma[i]]).collect())
    }

    pub fn conjugate(&self, lambda: &MonoidElement) -> MonoidElement {
        MonoidElement(self.conjugate_weight(&lambda.0))
    }

    /// The nontrivial σ-orbits `{i, σ(i)}` with `i < σ(i)`, plus the fixed points.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        (0..self.sigma.len()).filter(|&i| i <= self.sigma[i]).collect()
    }

    /// Checks `a_{σ(i)σ(j)} = a_{ij}`.
    pub fn preserves_cartan(&self, rs: &RootSystem) -> bool {
        let a = rs.cartan();
        let n = rs.rank();
        (0..n).all(|i| (0..n).all(|j| a[self.sigma[i]][self.sigma[j]] == a[i][j]))
    }
}

/// The involution of the Dynkin diagram; the identity for type I.
pub fn involution(rs: &RootSystem) -> DiagramInvolution {
    let n = rs.rank();
    if classify_type(rs) == TypeClass::TypeI {
        return DiagramInvolution::identity(n);
    }
    let sigma = match rs.family() {
        Family::A => (0..n).map(|i| n - 1 - i).collect(),
        Family::D => {
            let mut s: Vec<usize> = (0..n).collect();
            s.swap(n - 2, n - 1);
            s
        }
        Family::E => vec![5, 1, 4, 3, 2, 0],
        _ => unreachable!("type II families are A, D and E"),
    };
    DiagramInvolution { sigma }
}

/// `λ ↦ λ̄` on `M⁺`.
pub fn conjugate(rs: &RootSystem, lambda: &MonoidElement) -> MonoidElement {
    involution(rs).conjugate(lambda)
}

/// The minimal positive `s_i` with `s_i ϖ_i ∈ M⁺`, for each node.
pub fn min_multipliers(rs: &RootSystem) -> Vec<i64> {
    let n = rs.rank();
    let s: Vec<i64> = (0..n)
        .map(|i| {
            let w = rs.fundamental_weight(i);
            (1..=rs.det())
                .find(|&k| in_half_root_lattice(rs, &w.scale(k)))
                .expect("det · ϖ_i always lies in Q")
        })
        .collect();
    if rs.family() == Family::A && n >= 2 {
        for (i, &si) in s.iter().enumerate() {
            let m = n as i64 + 1;
            debug_assert_eq!(si, m / m.gcd(&(2 * (i as i64 + 1))));
        }
    }
    s
}

/// `ℓ(λ)`: the lcm of `s_i` over the support of `λ`.
pub fn ell(rs: &RootSystem, lambda: &Weight) -> Result<i64> {
    ell_with(&min_multipliers(rs), lambda)
}

fn ell_with(s: &[i64], lambda: &Weight) -> Result<i64> {
    if lambda.is_zero() {
        return domain("ell is undefined for the zero weight");
    }
    Ok(lambda
        .0
        .iter()
        .zip(s)
        .filter(|(&a, _)| a != 0)
        .fold(1i64, |acc, (_, &si)| acc.lcm(&si)))
}

/// A term `exponent · generator` in a weight identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTerm {
    /// 0-based node index the generator is attached to.
    pub index: usize,
    pub generator: MonoidElement,
    pub exponent: u32,
}

/// The identity `ℓ(λ)·λ = Σ (ℓ(λ)a_i/s_i)·ν_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rel2 {
    pub ell: i64,
    pub terms: Vec<WeightTerm>,
}

/// The Hilbert basis of `M⁺` together with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    family: Family,
    rank: usize,
    class: TypeClass,
    sigma: DiagramInvolution,
    s: Vec<i64>,
    /// All irreducible elements, sorted lexicographically.
    all: Vec<MonoidElement>,
    /// `μ_i`, keyed by the smaller index of each σ-orbit.
    self_conjugate: Vec<(usize, MonoidElement)>,
    /// `ν_i = s_i ϖ_i` for every node.
    scaled_fundamentals: Vec<MonoidElement>,
    /// Non-self-conjugate pairs `(λ, λ̄)`; `λ` is the lexicographically larger member.
    pairs: Vec<(MonoidElement, MonoidElement)>,
}

/// Enumerates every nonzero candidate inside the box `0 ≤ a_i ≤ bound_i`,
/// optionally with `Σ a_i ≤ sum_cap`.
fn box_points(bounds: &[i64], sum_cap: Option<i64>) -> Vec<Weight> {
    fn rec(i: usize, bounds: &[i64], cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if i == bounds.len() {
            out.push(Weight(cur.clone()));
            return;
        }
        let used: i64 = cur.iter().sum();
        for a in 0..=bounds[i].min(cap - used) {
            cur.push(a);
            rec(i + 1, bounds, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, bounds, sum_cap.unwrap_or(i64::MAX / 4), &mut Vec::new(), &mut out);
    out.retain(|w| !w.is_zero());
    out
}

/// Computes `Hilb(M⁺)` by bounded enumeration.
///
/// Every basis element satisfies `a_i ≤ s_i` (and `Σ a_i ≤ r_{n+1}` in type A),
/// so only that box is searched. A candidate `λ` is decomposable iff some
/// `μ ∈ M⁺` with `0 < μ < λ` componentwise exists (then `λ − μ` is dominant and
/// in ½Q). It suffices to try `μ` among the irreducible elements already found,
/// because any such `μ` has an irreducible summand of smaller coordinate sum.
pub fn hilbert_basis(rs: &RootSystem) -> HilbertBasis {
    let s = min_multipliers(rs);
    let sum_cap = (rs.family() == Family::A).then(|| type_a_modulus(rs.rank()));
    let mut candidates: Vec<Weight> = box_points(&s, sum_cap)
        .into_iter()
        .filter(|w| in_monoid(rs, w))
        .collect();
    candidates.sort_by_key(|w| (w.0.iter().sum::<i64>(), w.0.clone()));

    let mut irreducible: Vec<Weight> = Vec::new();
    for lambda in candidates {
        let reducible = irreducible
            .iter()
            .any(|h| h != &lambda && h.le_componentwise(&lambda));
        if !reducible {
            irreducible.push(lambda);
        }
    }
    irreducible.sort();
    HilbertBasis::classify(rs, irreducible.into_iter().map(MonoidElement).collect(), s)
}

impl HilbertBasis {
    fn classify(rs: &RootSystem, all: Vec<MonoidElement>, s: Vec<i64>) -> Self {
        let class = classify_type(rs);
        let sigma = involution(rs);
        let n = rs.rank();
        let scaled_fundamentals: Vec<MonoidElement> = (0..n)
            .map(|i| MonoidElement(rs.fundamental_weight(i).scale(s[i])))
            .collect();

        let mut self_conjugate = Vec::new();
        let mut pairs = Vec::new();
        for lambda in &all {
            let bar = sigma.conjugate(lambda);
            if &bar == lambda {
                let key = lambda
                    .coords()
                    .iter()
                    .position(|&a| a != 0)
                    .expect("basis elements are nonzero");
                self_conjugate.push((key, lambda.clone()));
            } else if lambda > &bar {
                pairs.push((lambda.clone(), bar));
            }
        }
        self_conjugate.sort_by_key(|(k, _)| *k);
        pairs.sort();
        HilbertBasis {
            family: rs.family(),
            rank: n,
            class,
            sigma,
            s,
            all,
            self_conjugate,
            scaled_fundamentals,
            pairs,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> TypeClass {
        self.class
    }

    pub fn involution(&self) -> &DiagramInvolution {
        &self.sigma
    }

    pub fn s(&self) -> &[i64] {
        &self.s
    }

    pub fn elements(&self) -> &[MonoidElement] {
        &self.all
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn self_conjugate(&self) -> &[(usize, MonoidElement)] {
        &self.self_conjugate
    }

    pub fn scaled_fundamentals(&self) -> &[MonoidElement] {
        &self.scaled_fundamentals
    }

    pub fn pairs(&self) -> &[(MonoidElement, MonoidElement)] {
        &self.pairs
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        self.index_of(lambda).is_some()
    }

    /// Position of `λ` in [`elements`](Self::elements).
    pub fn index_of(&self, lambda: &Weight) -> Option<usize> {
        self.all.binary_search_by(|m| m.weight().cmp(lambda)).ok()
    }

    /// `μ_i` for the σ-orbit whose smaller index is `i`.
    pub fn mu(&self, i: usize) -> Option<&MonoidElement> {
        self.self_conjugate.iter().find(|(k, _)| *k == i).map(|(_, m)| m)
    }

    pub fn nu(&self, i: usize) -> &MonoidElement {
        &self.scaled_fundamentals[i]
    }

    /// Index `i` with `λ = ν_i`, if any.
    pub fn nu_index(&self, lambda: &Weight) -> Option<usize> {
        self.scaled_fundamentals.iter().position(|m| m.weight() == lambda)
    }

    pub fn ell(&self, lambda: &Weight) -> Result<i64> {
        ell_with(&self.s, lambda)
    }

    /// `λ + λ̄ = Σ_{i<σ(i)} max{a_i, a_σ(i)} μ_i` for non-self-conjugate basis elements.
    pub fn rel1(&self, lambda: &Weight) -> Result<Vec<WeightTerm>> {
        if !self.contains(lambda) {
            return domain(format!("{lambda} is not in Hilb(M+)"));
        }
        let bar = self.sigma.conjugate_weight(lambda);
        if &bar == lambda {
            return domain(format!("{lambda} is self-conjugate; the conjugate-pair relation does not apply"));
        }
        let mut terms = Vec::new();
        for i in 0..self.rank {
            let j = self.sigma.apply(i);
            if i < j {
                let e = lambda.0[i].max(lambda.0[j]);
                if e > 0 {
                    let mu = self
                        .mu(i)
                        .ok_or_else(|| Error::Invariant(format!("missing self-conjugate generator mu_{}", i + 1)))?;
                    terms.push(WeightTerm {
                        index: i,
                        generator: mu.clone(),
                        exponent: e as u32,
                    });
                }
            }
        }
        let rhs = terms.iter().fold(Weight::zero(self.rank), |acc, t| {
            acc.add(&t.generator.weight().scale(t.exponent as i64))
        });
        if rhs != lambda.add(&bar) {
            return Err(Error::Invariant(format!(
                "conjugate-pair identity fails for {lambda}: {} != {}",
                lambda.add(&bar),
                rhs
            )));
        }
        Ok(terms)
    }

    /// `ℓ(λ)λ = Σ (ℓ(λ)a_i/s_i) ν_i`.
    pub fn rel2(&self, lambda: &Weight) -> Result<Rel2> {
        let ell = self.ell(lambda)?;
        let mut terms = Vec::new();
        for i in 0..self.rank {
            let a = lambda.0[i];
            if a == 0 {
                continue;
            }
            let num = ell * a;
            if num % self.s[i] != 0 {
                return Err(Error::Invariant(format!(
                    "exponent ell*a_{}/s_{} = {num}/{} is not integral",
                    i + 1,
                    i + 1,
                    self.s[i]
                )));
            }
            terms.push(WeightTerm {
                index: i,
                generator: self.scaled_fundamentals[i].clone(),
                exponent: (num / self.s[i]) as u32,
            });
        }
        let rhs = terms.iter().fold(Weight::zero(self.rank), |acc, t| {
            acc.add(&t.generator.weight().scale(t.exponent as i64))
        });
        if rhs != lambda.scale(ell) {
            return Err(Error::Invariant(format!("power identity fails for {lambda}")));
        }
        Ok(Rel2 { ell, terms })
    }

    pub fn record(&self) -> HilbertBasisRecord {
        HilbertBasisRecord {
            family: self.family,
            rank: self.rank,
            class: self.class,
            elements: self.all.iter().map(|m| m.coords().to_vec()).collect(),
            self_conjugate: self.self_conjugate.iter().map(|(_, m)| m.coords().to_vec()).collect(),
            scaled_fundamentals: self.scaled_fundamentals.iter().map(|m| m.coords().to_vec()).collect(),
            pairs: self
                .pairs
                .iter()
                .map(|(a, b)| [a.coords().to_vec(), b.coords().to_vec()])
                .collect(),
            s: self.s.clone(),
        }
    }
}

/// JSON form of a [`HilbertBasis`]; also the golden-data format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasisRecord {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub class: TypeClass,
    pub elements: Vec<Vec<i64>>,
    pub self_conjugate: Vec<Vec<i64>>,
    pub scaled_fundamentals: Vec<Vec<i64>>,
    pub pairs: Vec<[Vec<i64>; 2]>,
    pub s: Vec<i64>,
}

/// Every way of writing `λ` as a multiset of basis elements, up to `limit`
/// factorizations. Factorizations are exponent vectors indexed like `basis`.
pub fn factorizations(basis: &[Weight], lambda: &Weight, limit: usize) -> Vec<Vec<u32>> {
    fn rec(
        basis: &[Weight],
        start: usize,
        rest: &Weight,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        limit: usize,
        dead: &mut BTreeMap<(usize, Weight), ()>,
    ) -> bool {
        if out.len() >= limit {
            return true;
        }
        if rest.is_zero() {
            out.push(cur.clone());
            return true;
        }
        if start == basis.len() || dead.contains_key(&(start, rest.clone())) {
            return false;
        }
        let mut found = false;
        let b = &basis[start];
        let mut k = 0u32;
        let mut r = rest.clone();
        loop {
            cur[start] = k;
            if rec(basis, start + 1, &r, cur, out, limit, dead) {
                found = true;
            }
            let next = r.sub(b);
            if !next.is_dominant() || b.is_zero() {
                break;
            }
            r = next;
            k += 1;
        }
        cur[start] = 0;
        if !found {
            dead.insert((start, rest.clone()), ());
        }
        found
    }
    let mut out = Vec::new();
    let mut cur = vec![0; basis.len()];
    let mut dead = BTreeMap::new();
    rec(basis, 0, lambda, &mut cur, &mut out, limit, &mut dead);
    out
}
