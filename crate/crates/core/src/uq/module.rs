//! Simple modules, `End(V) ⊗ U` matrices and elements of `U ⊗ U`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::element::{mul_mono, Mono, UqElement};
use super::ratfunc::{q_integer, q_minus_qinv, RationalFunctionQ};

/// Square matrix over ℚ(q).
pub type ScalarMatrix = Vec<Vec<RationalFunctionQ>>;

fn identity_scalar(d: usize) -> ScalarMatrix {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { RationalFunctionQ::one() } else { RationalFunctionQ::zero() })
                .collect()
        })
        .collect()
}

fn scalar_mul(x: &ScalarMatrix, y: &ScalarMatrix) -> ScalarMatrix {
    let d = x.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(RationalFunctionQ::zero(), |acc, k| acc.add(&x[i][k].mul(&y[k][j]))))
                .collect()
        })
        .collect()
}

fn scalar_pow(x: &ScalarMatrix, k: u32) -> ScalarMatrix {
    (0..k).fold(identity_scalar(x.len()), |acc, _| scalar_mul(&acc, x))
}

/// The simple module `L(mϖ)` with basis `e_0, …, e_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleModule {
    m: u32,
    e: ScalarMatrix,
    f: ScalarMatrix,
    k: ScalarMatrix,
}

/// `ζ(K)e_j = q^{m−2j}e_j`, `ζ(E)e_j = [j]e_{j−1}`, `ζ(F)e_j = [m−j]e_{j+1}`.
pub fn simple_module(m: u32) -> SimpleModule {
    let d = m as usize + 1;
    let zero = || vec![vec![RationalFunctionQ::zero(); d]; d];
    let (mut e, mut f, mut k) = (zero(), zero(), zero());
    for j in 0..d {
        k[j][j] = RationalFunctionQ::q_pow(m as i64 - 2 * j as i64);
        if j > 0 {
            e[j - 1][j] = q_integer(j as i64);
        }
        if j < m as usize {
            f[j + 1][j] = q_integer(m as i64 - j as i64);
        }
    }
    SimpleModule { m, e, f, k }
}

impl SimpleModule {
    pub fn highest_weight(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.m as usize + 1
    }

    pub fn zeta_e(&self) -> &ScalarMatrix {
        &self.e
    }

    pub fn zeta_f(&self) -> &ScalarMatrix {
        &self.f
    }

    pub fn zeta_k(&self) -> &ScalarMatrix {
        &self.k
    }

    /// Weight `m − 2j` of `e_j`.
    pub fn weight(&self, j: usize) -> i64 {
        self.m as i64 - 2 * j as i64
    }

    /// `ζ(K^b)`.
    pub fn zeta_k_pow(&self, b: i64) -> ScalarMatrix {
        let mut out = identity_scalar(self.dim());
        for (j, row) in out.iter_mut().enumerate() {
            row[j] = RationalFunctionQ::q_pow(b * self.weight(j));
        }
        out
    }

    /// `ζ(F^a K^b Ẽ^c)`.
    pub(crate) fn zeta_mono(&self, (a, b, c): Mono) -> ScalarMatrix {
        let mut x = scalar_mul(&scalar_pow(&self.f, a), &self.zeta_k_pow(b));
        x = scalar_mul(&x, &scalar_pow(&self.e, c));
        let s = q_minus_qinv().pow(c);
        x.iter().map(|row| row.iter().map(|v| v.mul(&s)).collect()).collect()
    }

    pub fn zeta(&self, x: &UqElement) -> ScalarMatrix {
        let d = self.dim();
        let mut out = vec![vec![RationalFunctionQ::zero(); d]; d];
        for (&m, c) in x.internal_terms() {
            let z = self.zeta_mono(m);
            for i in 0..d {
                for j in 0..d {
                    if !z[i][j].is_zero() {
                        out[i][j] = out[i][j].add(&z[i][j].mul(c));
                    }
                }
            }
        }
        out
    }

    /// `ζ(K)ζ(E)ζ(K)⁻¹ = q²ζ(E)`, `ζ(K)ζ(F)ζ(K)⁻¹ = q⁻²ζ(F)`,
    /// `[ζ(E), ζ(F)] = (ζ(K) − ζ(K)⁻¹)/(q − q⁻¹)` and `ζ(F)^{m+1} = 0`.
    pub fn check_relations(&self) -> bool {
        let k = &self.k;
        let kinv = self.zeta_k_pow(-1);
        let sc = |x: &ScalarMatrix, c: &RationalFunctionQ| -> ScalarMatrix {
            x.iter().map(|r| r.iter().map(|v| v.mul(c)).collect()).collect()
        };
        let sub = |x: &ScalarMatrix, y: &ScalarMatrix| -> ScalarMatrix {
            x.iter()
                .zip(y)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.sub(b)).collect())
                .collect()
        };
        let ke = scalar_mul(&scalar_mul(k, &self.e), &kinv);
        let kf = scalar_mul(&scalar_mul(k, &self.f), &kinv);
        let comm = sub(&scalar_mul(&self.e, &self.f), &scalar_mul(&self.f, &self.e));
        let rhs = sc(&sub(k, &kinv), &q_minus_qinv().inv().expect("nonzero"));
        let zero = vec![vec![RationalFunctionQ::zero(); self.dim()]; self.dim()];
        ke == sc(&self.e, &RationalFunctionQ::q_pow(2))
            && kf == sc(&self.f, &RationalFunctionQ::q_pow(-2))
            && comm == rhs
            && scalar_pow(&self.f, self.m + 1) == zero
            && scalar_pow(&self.e, self.m + 1) == zero
    }
}

/// Element of `End(V) ⊗ U_q(sl₂)` as a matrix with entries in `U_q(sl₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqMatrix {
    entries: Vec<Vec<UqElement>>,
}

impl UqMatrix {
    pub fn zero(d: usize) -> Self {
        UqMatrix {
            entries: vec![vec![UqElement::zero(); d]; d],
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::kron(&identity_scalar(d), &UqElement::one())
    }

    /// `X ⊗ u`.
    pub fn kron(x: &ScalarMatrix, u: &UqElement) -> Self {
        UqMatrix {
            entries: x
                .iter()
                .map(|row| row.iter().map(|c| if c.is_zero() { UqElement::zero() } else { u.scale(c) }).collect())
                .collect(),
        }
    }

    pub fn from_entries(entries: Vec<Vec<UqElement>>) -> Self {
        UqMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &UqElement {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<UqElement>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(UqElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        UqMatrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.add(b)).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        UqMatrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.sub(b)).collect())
                .collect(),
        }
    }

    /// Matrix product; entries multiply in `U_q(sl₂)` in order.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim();
        let entries = (0..d * d)
            .into_par_iter()
            .map(|ij| {
                let (i, j) = (ij / d, ij % d);
                (0..d).fold(UqElement::zero(), |acc, k| {
                    let (x, y) = (&self.entries[i][k], &other.entries[k][j]);
                    if x.is_zero() || y.is_zero() {
                        acc
                    } else {
                        acc.add(&x.mul(y))
                    }
                })
            })
            .collect::<Vec<_>>();
        UqMatrix {
            entries: entries.chunks(d).map(<[UqElement]>::to_vec).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.dim()), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

impl fmt::Display for UqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    writeln!(f, "[{i},{j}] {x}")?;
                }
            }
        }
        Ok(())
    }
}

/// Element of `U_q(sl₂) ⊗ U_q(sl₂)` in the tensor PBW basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(Mono, Mono), RationalFunctionQ>,
}

impl Tensor2 {
    /// `x ⊗ y`.
    pub fn pure(x: &UqElement, y: &UqElement) -> Self {
        let mut out = Tensor2::default();
        for (&m1, c1) in x.internal_terms() {
            for (&m2, c2) in y.internal_terms() {
                out.add_term((m1, m2), &c1.mul(c2));
            }
        }
        out
    }

    fn add_term(&mut self, key: (Mono, Mono), c: &RationalFunctionQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn scale(&self, c: &RationalFunctionQ) -> Self {
        let mut out = Tensor2::default();
        for (&k, x) in &self.terms {
            out.add_term(k, &x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Tensor2::default();
        for (&(x1, y1), c1) in &self.terms {
            for (&(x2, y2), c2) in &other.terms {
                let c = c1.mul(c2);
                for (mx, sx) in mul_mono(x1, x2).iter() {
                    for (my, sy) in mul_mono(y1, y2).iter() {
                        out.add_term((*mx, *my), &c.mul(sx).mul(sy));
                    }
                }
            }
        }
        out
    }

    /// `x ⊗ y ↦ y ⊗ x`.
    pub fn flip(&self) -> Self {
        Tensor2 {
            terms: self.terms.iter().map(|(&(x, y), c)| ((y, x), c.clone())).collect(),
        }
    }

    /// `φ(x ⊗ y) = xK^{−wt(y)} ⊗ K^{−wt(x)}y`, with `wt(F^aK^bE^c) = c − a`;
    /// applied `times` times.
    pub fn phi(&self, times: i64) -> Self {
        let mut out = Tensor2::default();
        for (&((a1, b1, c1), (a2, b2, c2)), c) in &self.terms {
            let s_left = times * (a2 as i64 - c2 as i64);
            let s_right = times * (a1 as i64 - c1 as i64);
            // Ẽ^{c1}K^s = q^{−2sc1}K^sẼ^{c1};  K^sF^{a2} = q^{−2sa2}F^{a2}K^s
            let k = -2 * s_left * c1 as i64 - 2 * s_right * a2 as i64;
            out.add_term(((a1, b1 + s_left, c1), (a2, b2 + s_right, c2)), &c.mul_q_pow(k));
        }
        out
    }

    /// `(ζ ⊗ id)(self)`.
    pub fn apply_zeta(&self, v: &SimpleModule) -> UqMatrix {
        let mut out = UqMatrix::zero(v.dim());
        for (&(x, y), c) in &self.terms {
            let z = v.zeta_mono(x);
            if z.iter().flatten().all(RationalFunctionQ::is_zero) {
                continue;
            }
            let u = UqElement::from_internal([(y, c.clone())]);
            out = out.add(&UqMatrix::kron(&z, &u));
        }
        out
    }
}

/// `Δ(x)` for a generator; `Δ(K^b) = K^b ⊗ K^b`.
pub fn coproduct(x: &Generator) -> Tensor2 {
    let one = UqElement::one();
    match *x {
        Generator::E => Tensor2::pure(&UqElement::k(), &UqElement::e()).add(&Tensor2::pure(&UqElement::e(), &one)),
        Generator::F => Tensor2::pure(&UqElement::f(), &UqElement::k_pow(-1)).add(&Tensor2::pure(&one, &UqElement::f())),
        Generator::K(b) => Tensor2::pure(&UqElement::k_pow(b), &UqElement::k_pow(b)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K(i64),
}

impl Generator {
    pub fn element(&self) -> UqElement {
        match *self {
            Generator::E => UqElement::e(),
            Generator::F => UqElement::f(),
            Generator::K(b) => UqElement::k_pow(b),
        }
    }

    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::K(1), Generator::K(-1)];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E => write!(f, "E"),
            Generator::F => write!(f, "F"),
            Generator::K(1) => write!(f, "K"),
            Generator::K(b) => write!(f, "K^{b}"),
        }
    }
}

/// `c_n = q^{n(n+1)/2}(1 − q⁻²)^n/[n]!`.
pub fn quasi_r_coefficient(n: u32) -> RationalFunctionQ {
    let n64 = n as i64;
    RationalFunctionQ::laurent(-2, &[-1, 0, 1])
        .pow(n)
        .mul_q_pow(n64 * (n64 + 1) / 2)
        .div(&super::ratfunc::q_factorial(n))
        .expect("[n]! is nonzero")
}

/// `Σ_{n ≤ nmax} c_n F^n ⊗ E^n`.
pub fn quasi_r_truncated(nmax: u32) -> Tensor2 {
    (0..=nmax).fold(Tensor2::default(), |acc, n| {
        acc.add(&Tensor2::pure(&UqElement::f().pow(n), &UqElement::e().pow(n)).scale(&quasi_r_coefficient(n)))
    })
}

/// `(ζ ⊗ id)(𝕽)`, exact since `ζ(F)^{dim V} = 0`.
pub fn quasi_r(v: &SimpleModule) -> UqMatrix {
    quasi_r_truncated(v.highest_weight()).apply_zeta(v)
}

/// `(ζ ⊗ id)φ(𝕽ᵀ)`.
pub fn quasi_r_tilde_t(v: &SimpleModule) -> UqMatrix {
    quasi_r_truncated(v.highest_weight()).flip().phi(1).apply_zeta(v)
}

/// `𝒦_V = Σ_η P_η ⊗ K_{2η}`, i.e. `diag(K^{m−2j})`.
pub fn k_operator(v: &SimpleModule) -> UqMatrix {
    let d = v.dim();
    let mut out = UqMatrix::zero(d);
    for j in 0..d {
        out.entries[j][j] = UqElement::k_pow(v.weight(j));
    }
    out
}

/// `Γ_V = 𝒦_V ℛ̃ᵀ_V ℛ_V`.
pub fn gamma(v: &SimpleModule) -> UqMatrix {
    k_operator(v).mul(&quasi_r_tilde_t(v)).mul(&quasi_r(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> RationalFunctionQ {
        RationalFunctionQ::q_pow(k)
    }

    fn int(c: i64) -> RationalFunctionQ {
        RationalFunctionQ::int(c)
    }

    #[test]
    fn two_dimensional_module() {
        let v = simple_module(1);
        assert_eq!(v.zeta_e(), &vec![vec![int(0), int(1)], vec![int(0), int(0)]]);
        assert_eq!(v.zeta_f(), &vec![vec![int(0), int(0)], vec![int(1), int(0)]]);
        assert_eq!(v.zeta_k(), &vec![vec![q(1), int(0)], vec![int(0), q(-1)]]);
        let t = simple_module(0);
        assert_eq!(t.zeta_k(), &vec![vec![int(1)]]);
        assert!(t.zeta_e()[0][0].is_zero());
    }

    #[test]
    fn module_relations() {
        for m in 0..=6 {
            assert!(simple_module(m).check_relations(), "m = {m}");
        }
        assert_eq!(simple_module(2).zeta_k()[1][1], int(1));
    }

    #[test]
    fn zeta_is_a_homomorphism() {
        let v = simple_module(3);
        let x = UqElement::e().mul(&UqElement::f()).add(&UqElement::k_pow(-2));
        let y = UqElement::f().pow(2).add(&UqElement::e());
        assert_eq!(v.zeta(&x.mul(&y)), scalar_mul(&v.zeta(&x), &v.zeta(&y)));
    }

    #[test]
    fn quasi_r_dim2() {
        let v = simple_module(1);
        let expected = UqMatrix::identity(2).add(&UqMatrix::kron(v.zeta_f(), &UqElement::e().scale(&q_minus_qinv())));
        assert_eq!(quasi_r(&v), expected);
        // 1⊗1 + (q − q⁻¹)ζ(EK)⊗K⁻¹F
        let ek = scalar_mul(v.zeta_e(), v.zeta_k());
        let kf = UqElement::k_pow(-1).mul(&UqElement::f()).scale(&q_minus_qinv());
        assert_eq!(quasi_r_tilde_t(&v), UqMatrix::identity(2).add(&UqMatrix::kron(&ek, &kf)));
        assert_eq!(quasi_r(&simple_module(0)), UqMatrix::identity(1));
        assert_eq!(quasi_r_tilde_t(&simple_module(0)), UqMatrix::identity(1));
    }

    #[test]
    fn quasi_r_coefficients() {
        assert!(quasi_r_coefficient(0).is_one());
        assert_eq!(quasi_r_coefficient(1), q_minus_qinv());
        let c2 = RationalFunctionQ::laurent(-2, &[-1, 0, 1])
            .pow(2)
            .mul_q_pow(3)
            .div(&q_integer(2))
            .unwrap();
        assert_eq!(quasi_r_coefficient(2), c2);
    }

    #[test]
    fn quasi_r_tilde_closed_form() {
        for m in 0..=3 {
            let v = simple_module(m);
            let mut expected = UqMatrix::zero(v.dim());
            for n in 0..=m {
                let z = scalar_mul(&scalar_pow(v.zeta_e(), n), &v.zeta_k_pow(n as i64));
                let u = UqElement::k_pow(-(n as i64))
                    .mul(&UqElement::f().pow(n))
                    .scale(&quasi_r_coefficient(n));
                expected = expected.add(&UqMatrix::kron(&z, &u));
            }
            assert_eq!(quasi_r_tilde_t(&v), expected, "m = {m}");
        }
    }

    #[test]
    fn k_operator_small() {
        let v = simple_module(2);
        let k = k_operator(&v);
        assert_eq!(k.entry(0, 0), &UqElement::k_pow(2));
        assert_eq!(k.entry(1, 1), &UqElement::one());
        assert_eq!(k.entry(2, 2), &UqElement::k_pow(-2));
        assert!(k.entry(0, 1).is_zero());
    }

    #[test]
    fn gamma_dim2() {
        let v = simple_module(1);
        let p1 = vec![vec![int(1), int(0)], vec![int(0), int(0)]];
        let pm1 = vec![vec![int(0), int(0)], vec![int(0), int(1)]];
        let e = UqElement::e();
        let f = UqElement::f();
        let qq = q_minus_qinv();
        let expected = UqMatrix::kron(&p1, &UqElement::k())
            .add(&UqMatrix::kron(&pm1, &UqElement::k_pow(-1)))
            .add(&UqMatrix::kron(v.zeta_f(), &UqElement::k_pow(-1).mul(&e).scale(&qq)))
            .add(&UqMatrix::kron(v.zeta_e(), &f.scale(&RationalFunctionQ::laurent(-2, &[-1, 0, 1]))))
            .add(&UqMatrix::kron(&p1, &f.mul(&e).scale(&qq.pow(2).mul_q_pow(-1))));
        assert_eq!(gamma(&v), expected);
        assert_eq!(gamma(&simple_module(0)), UqMatrix::identity(1));
    }

    #[test]
    fn phi_on_generators() {
        let one = UqElement::one();
        let (e, f, k) = (UqElement::e(), UqElement::f(), UqElement::k());
        let kinv = UqElement::k_pow(-1);
        assert_eq!(Tensor2::pure(&e, &one).phi(1), Tensor2::pure(&e, &kinv));
        assert_eq!(Tensor2::pure(&f, &one).phi(1), Tensor2::pure(&f, &k));
        assert_eq!(Tensor2::pure(&one, &e).phi(1), Tensor2::pure(&kinv, &e));
        assert_eq!(Tensor2::pure(&one, &f).phi(1), Tensor2::pure(&k, &f));
        assert_eq!(Tensor2::pure(&k, &one).phi(1), Tensor2::pure(&k, &one));
        // φ is multiplicative
        let x = Tensor2::pure(&e.mul(&f), &k.add(&e));
        let y = Tensor2::pure(&f.pow(2), &e);
        assert_eq!(x.mul(&y).phi(1), x.phi(1).mul(&y.phi(1)));
        assert_eq!(x.phi(2), x.phi(1).phi(1));
    }
}
