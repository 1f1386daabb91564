//! The monoid algebra ℂ[M⁺] and its binomial presentation.
//!
//! Generators are the variables `x_λ`, `λ ∈ Hilb(M⁺)`; the map
//! `φ: x_λ ↦ X^λ` sends every emitted binomial to zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::monoid::{factorizations, hilbert_basis, in_monoid, HilbertBasis, MonoidElement, TypeClass};
use crate::root_system::{Family, RootSystem, Weight};

/// A finite sum `Σ c_λ X^λ` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonoidAlgebraElement {
    terms: BTreeMap<Weight, BigRational>,
}

impl MonoidAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank))
    }

    pub fn monomial(lambda: Weight) -> Self {
        Self::term(lambda, BigRational::one())
    }

    pub fn term(lambda: Weight, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        MonoidAlgebraElement { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, lambda: Weight, c: BigRational) {
        let e = self.terms.entry(lambda).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            // re-fetch to drop the zero entry
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(k.clone(), -v.clone());
        }
        out
    }

    /// `X^λ · X^μ = X^{λ+μ}`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.accumulate(a.add(b), x * y);
            }
        }
        out
    }
}

/// A monomial `Π x_λ^{e_λ}` in the polynomial algebra on `Hilb(M⁺)`.
/// Keys index into [`HilbertBasis::elements`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GeneratorMonomial(BTreeMap<usize, u32>);

impl GeneratorMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m = Self::one();
        for (g, e) in pairs {
            m.mul_generator(g, e);
        }
        m
    }

    pub fn mul_generator(&mut self, g: usize, e: u32) {
        if e > 0 {
            *self.0.entry(g).or_insert(0) += e;
        }
    }

    pub fn exponents(&self) -> &BTreeMap<usize, u32> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }
}

/// `φ(Π x_λ^{e_λ}) = X^{Σ e_λ λ}`.
pub fn phi(basis: &HilbertBasis, m: &GeneratorMonomial) -> Result<MonoidAlgebraElement> {
    Ok(MonoidAlgebraElement::monomial(exponent_weight(basis, m)?))
}

/// The weight `Σ e_λ λ` of a generator monomial.
pub fn exponent_weight(basis: &HilbertBasis, m: &GeneratorMonomial) -> Result<Weight> {
    let mut acc = Weight::zero(basis.rank());
    for (&g, &e) in m.exponents() {
        let lambda = basis.elements().get(g).ok_or(Error::UnknownGenerator(g))?;
        acc = acc.add(&lambda.weight().scale(e as i64));
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    /// `x_λ x_λ̄ = Π x_{μ_i}^{max{a_i, a_σ(i)}}`
    Rel1,
    /// `x_λ^{ℓ(λ)} = Π x_{ν_i}^{ℓ(λ)a_i/s_i}`
    Rel2,
}

/// A binomial `lhs − rhs` of the ideal of relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialRelation {
    pub kind: RelationKind,
    pub source: MonoidElement,
    pub lhs: GeneratorMonomial,
    pub rhs: GeneratorMonomial,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    basis: HilbertBasis,
    relations: Vec<BinomialRelation>,
}

fn index(basis: &HilbertBasis, lambda: &Weight) -> Result<usize> {
    basis
        .index_of(lambda)
        .ok_or_else(|| Error::Invariant(format!("{lambda} is not a Hilbert basis element")))
}

fn rel2_monomial(basis: &HilbertBasis, lambda: &Weight) -> Result<(GeneratorMonomial, GeneratorMonomial)> {
    let r2 = basis.rel2(lambda)?;
    let lhs = GeneratorMonomial::from_pairs([(index(basis, lambda)?, r2.ell as u32)]);
    let mut rhs = GeneratorMonomial::one();
    for t in &r2.terms {
        rhs.mul_generator(index(basis, t.generator.weight())?, t.exponent);
    }
    Ok((lhs, rhs))
}

/// Builds the presentation of ℂ[M⁺]: no relations in type I; in type II one
/// conjugate-pair relation per pair `{λ, λ̄}` and one power relation for `λ`
/// unless `λ` is some `ν_i`. Within a pair, `λ` is the lexicographically
/// larger member.
pub fn presentation(rs: &RootSystem) -> Result<Presentation> {
    build_presentation(hilbert_basis(rs))
}

pub fn build_presentation(basis: HilbertBasis) -> Result<Presentation> {
    let mut relations = Vec::new();
    if basis.class() == TypeClass::TypeII {
        for (lambda, bar) in basis.pairs() {
            let terms = basis.rel1(lambda.weight())?;
            let lhs = GeneratorMonomial::from_pairs([
                (index(&basis, lambda.weight())?, 1),
                (index(&basis, bar.weight())?, 1),
            ]);
            let mut rhs = GeneratorMonomial::one();
            for t in &terms {
                rhs.mul_generator(index(&basis, t.generator.weight())?, t.exponent);
            }
            relations.push(BinomialRelation {
                kind: RelationKind::Rel1,
                source: lambda.clone(),
                lhs,
                rhs,
            });
        }
        for (lambda, _) in basis.pairs() {
            if basis.nu_index(lambda.weight()).is_some() {
                continue;
            }
            let (lhs, rhs) = rel2_monomial(&basis, lambda.weight())?;
            relations.push(BinomialRelation {
                kind: RelationKind::Rel2,
                source: lambda.clone(),
                lhs,
                rhs,
            });
        }
    }
    Ok(Presentation { basis, relations })
}

impl Presentation {
    pub fn basis(&self) -> &HilbertBasis {
        &self.basis
    }

    pub fn relations(&self) -> &[BinomialRelation] {
        &self.relations
    }

    pub fn count(&self, kind: RelationKind) -> usize {
        self.relations.iter().filter(|r| r.kind == kind).count()
    }

    /// Display label of generator `g`: `mu_i` for self-conjugate elements,
    /// `nu_i` for scaled fundamentals, otherwise the weight itself.
    pub fn label(&self, g: usize) -> String {
        let lambda = self.basis.elements()[g].weight();
        if let Some((i, _)) = self.basis.self_conjugate().iter().find(|(_, m)| m.weight() == lambda) {
            return format!("mu{}", i + 1);
        }
        if let Some(i) = self.basis.nu_index(lambda) {
            return format!("nu{}", i + 1);
        }
        lambda.pretty()
    }

    pub fn render_monomial(&self, m: &GeneratorMonomial) -> String {
        if m.exponents().is_empty() {
            return "1".to_string();
        }
        m.exponents()
            .iter()
            .map(|(&g, &e)| {
                let base = format!("x_{{{}}}", self.label(g));
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn render_relation(&self, r: &BinomialRelation) -> String {
        format!("{} = {}", self.render_monomial(&r.lhs), self.render_monomial(&r.rhs))
    }

    pub fn record(&self) -> PresentationRecord {
        let generators = self
            .basis
            .elements()
            .iter()
            .enumerate()
            .map(|(i, m)| GeneratorRecord {
                index: i,
                coords: m.coords().to_vec(),
                label: self.label(i),
            })
            .collect();
        let mono = |m: &GeneratorMonomial| m.exponents().iter().map(|(g, e)| (g.to_string(), *e)).collect();
        let relations = self
            .relations
            .iter()
            .map(|r| RelationRecord {
                kind: r.kind,
                source: r.source.coords().to_vec(),
                lhs: mono(&r.lhs),
                rhs: mono(&r.rhs),
            })
            .collect();
        PresentationRecord {
            family: self.basis.family(),
            rank: self.basis.rank(),
            generators,
            relations,
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators ({}):", self.basis.len())?;
        for (i, m) in self.basis.elements().iter().enumerate() {
            writeln!(f, "  x_{{{}}}  <->  {}", self.label(i), m.weight().pretty())?;
        }
        writeln!(f, "relations ({}):", self.relations.len())?;
        for r in &self.relations {
            writeln!(f, "  [{:?}] {}", r.kind, self.render_relation(r))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub index: usize,
    pub coords: Vec<i64>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub kind: RelationKind,
    pub source: Vec<i64>,
    pub lhs: BTreeMap<String, u32>,
    pub rhs: BTreeMap<String, u32>,
}

/// JSON form of a [`Presentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub generators: Vec<GeneratorRecord>,
    pub relations: Vec<RelationRecord>,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}

/// Checks `φ(lhs) = φ(rhs)` for every relation, plus the power relation of
/// each `λ̄` (which the presentation omits).
pub fn verify_relations(p: &Presentation) -> Report {
    let basis = p.basis();
    let mut report = Report::default();
    let results: Vec<Check> = p
        .relations()
        .par_iter()
        .map(|r| {
            let ok = match (phi(basis, &r.lhs), phi(basis, &r.rhs)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            Check {
                name: format!("phi: {}", p.render_relation(r)),
                passed: ok,
            }
        })
        .collect();
    report.checks.extend(results);
    for (lambda, bar) in basis.pairs() {
        if basis.nu_index(lambda.weight()).is_some() {
            continue;
        }
        let ok = match rel2_monomial(basis, bar.weight()) {
            Ok((lhs, rhs)) => matches!((phi(basis, &lhs), phi(basis, &rhs)), (Ok(a), Ok(b)) if a == b),
            Err(_) => false,
        };
        report.push(format!("phi: power relation of conjugate {}", bar.weight().pretty()), ok);
    }
    report
}

/// Number of factorizations over `Hilb(M⁺)` found for one element, capped at
/// [`FACTORIZATION_LIMIT`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationCount {
    pub weight: Weight,
    pub count: usize,
}

/// Search stops after this many distinct factorizations of one element.
pub const FACTORIZATION_LIMIT: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub bound: i64,
    pub elements: Vec<FactorizationCount>,
}

impl GenerationReport {
    pub fn all_factor(&self) -> bool {
        self.elements.iter().all(|e| e.count > 0)
    }

    pub fn count_for(&self, lambda: &Weight) -> Option<usize> {
        self.elements.iter().find(|e| &e.weight == lambda).map(|e| e.count)
    }
}

/// Factorizes every `λ ∈ M⁺` with all coordinates `≤ bound` over `Hilb(M⁺)`.
pub fn generation_check(rs: &RootSystem, bound: i64) -> GenerationReport {
    let basis = hilbert_basis(rs);
    let gens: Vec<Weight> = basis.elements().iter().map(|m| m.weight().clone()).collect();
    let n = rs.rank();
    let mut points = vec![Weight::zero(n)];
    for i in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=bound.max(0)).map(move |a| {
                    let mut q = p.clone();
                    q.0[i] = a;
                    q
                })
            })
            .collect();
    }
    points.retain(|p| in_monoid(rs, p));
    let elements = points
        .into_par_iter()
        .map(|w| {
            let count = factorizations(&gens, &w, FACTORIZATION_LIMIT).len();
            FactorizationCount { weight: w, count }
        })
        .collect();
    GenerationReport { bound, elements }
}

/// The set `{μ_i : i < σ(i)} ∪ {ν_i : i not < σ(i)}` used to embed a
/// polynomial subalgebra.
pub fn upsilon(basis: &HilbertBasis) -> Vec<MonoidElement> {
    let sigma = basis.involution();
    let mut out = Vec::new();
    for i in 0..basis.rank() {
        if i < sigma.apply(i) {
            if let Some(mu) = basis.mu(i) {
                out.push(mu.clone());
            }
        } else {
            out.push(basis.nu(i).clone());
        }
    }
    out
}

/// Rank of the weight vectors in `upsilon`.
pub fn upsilon_rank(basis: &HilbertBasis) -> usize {
    let rows = upsilon(basis)
        .iter()
        .map(|m| m.coords().iter().map(|&a| BigRational::from_integer(BigInt::from(a))).collect())
        .collect();
    linalg::rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn phi_examples() {
        let p = presentation(&rs(Family::A, 2)).unwrap();
        let b = p.basis();
        let nu1 = b.index_of(&w(&[3, 0])).unwrap();
        let nu2 = b.index_of(&w(&[0, 3])).unwrap();
        let mu1 = b.index_of(&w(&[1, 1])).unwrap();
        let lhs = phi(b, &GeneratorMonomial::from_pairs([(nu1, 1), (nu2, 1)])).unwrap();
        let rhs = phi(b, &GeneratorMonomial::from_pairs([(mu1, 3)])).unwrap();
        assert_eq!(lhs, MonoidAlgebraElement::monomial(w(&[3, 3])));
        assert_eq!(lhs, rhs);
        assert_eq!(phi(b, &GeneratorMonomial::one()).unwrap(), MonoidAlgebraElement::one(2));
        assert!(matches!(
            phi(b, &GeneratorMonomial::from_pairs([(7, 1)])),
            Err(Error::UnknownGenerator(7))
        ));
    }

    #[test]
    fn a2_presentation() {
        let p = presentation(&rs(Family::A, 2)).unwrap();
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.render_relation(&p.relations()[0]), "x_{nu2}·x_{nu1} = x_{mu1}^3");
    }

    #[test]
    fn d5_presentation() {
        let p = presentation(&rs(Family::D, 5)).unwrap();
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.render_relation(&p.relations()[0]), "x_{nu5}·x_{nu4} = x_{mu4}^2");
    }

    #[test]
    fn type_one_has_no_relations() {
        let p = presentation(&rs(Family::G, 2)).unwrap();
        assert_eq!(p.basis().len(), 2);
        assert!(p.relations().is_empty());
        assert!(verify_relations(&p).all_passed());
    }

    #[test]
    fn generation_small() {
        let r = generation_check(&rs(Family::A, 2), 4);
        assert!(r.all_factor());
        assert!(r.count_for(&w(&[3, 3])).unwrap() >= 2);
        let r0 = generation_check(&rs(Family::A, 2), 0);
        assert_eq!(r0.elements.len(), 1);
        assert_eq!(r0.elements[0].count, 1);
    }

    #[test]
    fn upsilon_is_independent() {
        for (f, n) in [(Family::A, 2), (Family::A, 5), (Family::D, 5), (Family::E, 6)] {
            let b = hilbert_basis(&rs(f, n));
            assert_eq!(upsilon(&b).len(), n);
            assert_eq!(upsilon_rank(&b), n, "{f}{n}");
        }
    }

    #[test]
    fn algebra_element_ops() {
        let x = MonoidAlgebraElement::monomial(w(&[1, 1]));
        let y = MonoidAlgebraElement::term(w(&[3, 0]), BigRational::new(2.into(), 3.into()));
        let s = x.add(&y);
        assert_eq!(s.sub(&y), x);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.mul(&MonoidAlgebraElement::one(2)), x);
    }
}
