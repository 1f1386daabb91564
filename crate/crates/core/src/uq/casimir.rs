//! Casimir elements `C^{(k)}_V = Tr₁((K_{2ρ} ⊗ 1)Γ_V^k)` and their checks.

use num_bigint::BigInt;
use num_traits::Signed;

use super::element::UqElement;
use super::module::{coproduct, gamma, k_operator, quasi_r, simple_module, Generator, SimpleModule, Tensor2, UqMatrix};
use super::ratfunc::RationalFunctionQ;
use crate::character::TorusInvariant;
use crate::error::{domain, Error, Result};
use crate::presentation::Report;
use crate::root_system::Weight;

/// `Tr₁((K ⊗ 1)X)` where `K` acts on `e_j` by `q^{m−2j}`.
pub fn partial_trace(v: &SimpleModule, x: &UqMatrix) -> UqElement {
    (0..v.dim()).fold(UqElement::zero(), |acc, j| {
        acc.add(&x.entry(j, j).scale(&RationalFunctionQ::q_pow(v.weight(j))))
    })
}

/// `C^{(k)}` for `V = L(mϖ)`.
pub fn casimir(m: u32, k: u32) -> Result<UqElement> {
    if k < 1 {
        return domain("the Casimir power k must be at least 1");
    }
    let v = simple_module(m);
    let c = partial_trace(&v, &gamma(&v).pow(k));
    if !c.is_laurent() {
        return Err(Error::Invariant(format!("C^({k}) for m = {m} has non-Laurent coefficients")));
    }
    Ok(c)
}

/// Harish-Chandra image `γ_{−ρ}∘π(x)` as `Σ m(b)·K^b`, keyed by `Weight([b])`.
///
/// Rejects monomials of nonzero weight and requires integer coefficients
/// after the shift `K^b ↦ q^{−b}K^b`.
pub fn hc_project(x: &UqElement) -> Result<TorusInvariant> {
    let mut out = TorusInvariant::zero();
    for ((a, b, c), coeff) in x.terms() {
        if a != c {
            return domain(format!("term F^{a}K^{b}E^{c} has nonzero weight; input is not in U_0"));
        }
        if a > 0 {
            continue;
        }
        let shifted = coeff.mul_q_pow(-b);
        let Some(n) = shifted.as_integer() else {
            return Err(Error::Invariant(format!(
                "coefficient {shifted} of K^{b} in the Harish-Chandra image depends on q"
            )));
        };
        out.add_term(Weight(vec![b]), n);
    }
    Ok(out)
}

/// Coefficients `α_i` with `target = Σ α_i base^i`, `i ≤ max_power`, or `None`.
///
/// Elimination runs on the top power of `K`, so `base` must have a nonzero
/// `K^1` term and no higher power of `K` (true for `C_V`, `V = L(ϖ)`).
pub fn express_in_powers(target: &UqElement, base: &UqElement, max_power: u32) -> Option<Vec<RationalFunctionQ>> {
    let lead = base.coeff(0, 1, 0);
    if lead.is_zero() {
        return None;
    }
    let powers: Vec<UqElement> = (0..=max_power).map(|i| base.pow(i)).collect();
    let mut rest = target.clone();
    let mut coeffs = vec![RationalFunctionQ::zero(); max_power as usize + 1];
    for i in (0..=max_power).rev() {
        let top = powers[i as usize].coeff(0, i as i64, 0);
        let alpha = rest.coeff(0, i as i64, 0).div(&top).ok()?;
        rest = rest.sub(&powers[i as usize].scale(&alpha));
        coeffs[i as usize] = alpha;
    }
    rest.is_zero().then_some(coeffs)
}

/// Evaluates `Σ α_i base^i`.
pub fn combine_powers(coeffs: &[RationalFunctionQ], base: &UqElement) -> UqElement {
    let mut acc = UqElement::zero();
    let mut p = UqElement::one();
    for c in coeffs {
        acc = acc.add(&p.scale(c));
        p = p.mul(base);
    }
    acc
}

/// Renders `Σ α_i C^i` from the highest power down, skipping zero coefficients.
pub fn render_powers(coeffs: &[RationalFunctionQ], name: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| match i {
            0 => format!("({x})"),
            1 => format!("({x})·{name}"),
            _ => format!("({x})·{name}^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `[Γ_V, (ζ ⊗ id)Δ(x)] = 0` for `x ∈ {E, F, K, K⁻¹}`.
pub fn check_gamma_intertwines(v: &SimpleModule) -> Report {
    let g = gamma(v);
    let mut report = Report::default();
    for x in Generator::ALL {
        let d = coproduct(&x).apply_zeta(v);
        report.push(
            format!("m={}: [Gamma, Delta({x})] = 0", v.highest_weight()),
            g.commutator(&d).is_zero(),
        );
    }
    report
}

/// The intertwining identities of `𝒦_V` with `ζ ⊗ id` of simple tensors, and
/// `𝒦_V φ²(Δ(x)) = Δ(x) 𝒦_V`.
pub fn check_k_intertwining(v: &SimpleModule) -> Report {
    let kv = k_operator(v);
    let m = v.highest_weight();
    let one = UqElement::one();
    let pure = |x: &UqElement, y: &UqElement| Tensor2::pure(x, y).apply_zeta(v);
    let (e, f) = (UqElement::e(), UqElement::f());
    let kp = UqElement::k_pow;
    let mut cases: Vec<(String, UqMatrix, UqMatrix)> = vec![
        ("K(K⊗K) = (K⊗K)K".into(), pure(&kp(1), &kp(1)), pure(&kp(1), &kp(1))),
        ("K(K^-1⊗K^-1) = (K^-1⊗K^-1)K".into(), pure(&kp(-1), &kp(-1)), pure(&kp(-1), &kp(-1))),
        ("K(E⊗1) = (E⊗K^2)K".into(), pure(&e, &one), pure(&e, &kp(2))),
        ("K(1⊗E) = (K^2⊗E)K".into(), pure(&one, &e), pure(&kp(2), &e)),
        ("K(F⊗1) = (F⊗K^-2)K".into(), pure(&f, &one), pure(&f, &kp(-2))),
        ("K(1⊗F) = (K^-2⊗F)K".into(), pure(&one, &f), pure(&kp(-2), &f)),
    ];
    for x in Generator::ALL {
        let delta = coproduct(&x);
        cases.push((
            format!("K phi^2(Delta({x})) = Delta({x}) K"),
            delta.phi(2).apply_zeta(v),
            delta.apply_zeta(v),
        ));
    }
    let mut report = Report::default();
    for (name, left, right) in cases {
        report.push(format!("m={m}: {name}"), kv.mul(&left) == right.mul(&kv));
    }
    report
}

/// `ℛ_V (ζ⊗id)Δ(x) = (ζ⊗id)φ(Δ'(x)) ℛ_V` for `x ∈ {E, F, K, K⁻¹}`.
pub fn check_quasi_r_intertwining(v: &SimpleModule) -> Report {
    let r = quasi_r(v);
    let mut report = Report::default();
    for x in Generator::ALL {
        let delta = coproduct(&x);
        let lhs = r.mul(&delta.apply_zeta(v));
        let rhs = delta.flip().phi(1).apply_zeta(v).mul(&r);
        report.push(format!("m={}: R Delta({x}) = phi(Delta'({x})) R", v.highest_weight()), lhs == rhs);
    }
    report
}

/// True when every coefficient of `t` is a positive integer.
pub fn all_positive(t: &TorusInvariant) -> bool {
    t.terms().values().all(BigInt::is_positive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::ratfunc::q_minus_qinv;

    fn q(k: i64) -> RationalFunctionQ {
        RationalFunctionQ::q_pow(k)
    }

    fn c1() -> UqElement {
        UqElement::term(q(1), 0, 1, 0)
            .add(&UqElement::term(q(-1), 0, -1, 0))
            .add(&UqElement::term(q_minus_qinv().pow(2), 1, 0, 1))
    }

    #[test]
    fn casimir_dim2() {
        assert_eq!(casimir(1, 1).unwrap(), c1());
        assert_eq!(casimir(0, 1).unwrap(), UqElement::one());
        assert_eq!(casimir(0, 3).unwrap(), UqElement::one());
        assert!(matches!(casimir(1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn higher_casimirs_dim2() {
        let c = c1();
        let c2 = c.pow(2).scale(&q(-1)).sub(&UqElement::scalar(q(-1).add(&q(-3))));
        assert_eq!(casimir(1, 2).unwrap(), c2);
        let c3 = c.pow(3).scale(&q(-2)).sub(&c.scale(&RationalFunctionQ::monomial(2, -2).add(&q(-4))));
        assert_eq!(casimir(1, 3).unwrap(), c3);
    }

    #[test]
    fn hc_images() {
        let h = hc_project(&casimir(1, 1).unwrap()).unwrap();
        let expect = TorusInvariant::from_terms([(Weight(vec![1]), BigInt::from(1)), (Weight(vec![-1]), BigInt::from(1))]);
        assert_eq!(h, expect);
        let h = hc_project(&casimir(2, 1).unwrap()).unwrap();
        assert_eq!(h.len(), 3);
        assert!(all_positive(&h));
        assert_eq!(hc_project(&UqElement::one()).unwrap(), TorusInvariant::one(1));
        assert!(matches!(hc_project(&UqElement::e()), Err(Error::Domain(_))));
        assert!(matches!(hc_project(&UqElement::k()), Err(Error::Invariant(_))));
    }

    #[test]
    fn intertwining_small() {
        for m in 0..=2 {
            let v = simple_module(m);
            assert!(check_gamma_intertwines(&v).all_passed());
            assert!(check_k_intertwining(&v).all_passed());
            assert!(check_quasi_r_intertwining(&v).all_passed());
        }
    }

    #[test]
    fn powers_of_c() {
        let c = c1();
        let c2 = casimir(2, 1).unwrap();
        let coeffs = express_in_powers(&c2, &c, 2).unwrap();
        assert_eq!(combine_powers(&coeffs, &c), c2);
        assert!(express_in_powers(&UqElement::e(), &c, 2).is_none());
    }
}
