//! Cartan data of the simple root systems.
//!
//! Conventions used throughout the crate:
//!
//! * Nodes are labelled as in Bourbaki. For `E6` node 2 is the branch node
//!   attached to node 4; the chain is 1-3-4-5-6.
//! * `cartan[i][j] = 2(α_i, α_j) / (α_i, α_i)`, i.e. row `i` is indexed by
//!   the coroot. For the non-simply-laced families this gives
//!
//!   | type | short roots        | entry equal to −2 or −3 |
//!   |------|--------------------|-------------------------|
//!   | B_n  | α_n                | `cartan[n][n-1] = −2`   |
//!   | C_n  | α_1 .. α_{n-1}     | `cartan[n-1][n] = −2`   |
//!   | F_4  | α_3, α_4           | `cartan[3][2] = −2`     |
//!   | G_2  | α_1                | `cartan[1][2] = −3`     |
//!
//!   (1-based indices in the table.) So `G2` is `[[2, −3], [−1, 2]]`.
//! * Short roots have `(α, α) = 2`; `sym[i] = (α_i, α_i) / 2`.
//! * Weights are integer vectors in the basis of fundamental weights, and
//!   the simple root `α_j` has weight coordinates given by column `j` of the
//!   Cartan matrix.
//!
//! Indices in the API are 0-based; rendered output is 1-based.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Default cap on the number of elements produced by a Weyl-orbit closure.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => domain(format!("unknown Lie type '{other}' (expected one of A..G)")),
        }
    }
}

/// A weight in fundamental-weight coordinates: `λ = Σ a_i ϖ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight ϖ_i (0-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Weight) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Renders the weight as a sum of fundamental weights, e.g. `w1+2w5`.
    pub fn pretty(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| match a {
                1 => format!("w{}", i + 1),
                -1 => format!("-w{}", i + 1),
                _ => format!("{a}w{}", i + 1),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+").replace("+-", "-")
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// An element of ℚ ⊗ Q in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_ratios(entries: &[(i64, i64)]) -> Self {
        RationalVector(
            entries
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn all_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn all_half_integral(&self) -> bool {
        let two = BigRational::from_integer(BigInt::from(2));
        self.0.iter().all(|c| (c * &two).is_integer())
    }
}

/// A positive root, stored in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the basis of simple roots (all ≥ 0).
    pub root_coords: Vec<i64>,
    /// Coordinates in the basis of fundamental weights.
    pub weight: Weight,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }
}

/// Cartan data of one simple Lie algebra. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    det: i64,
    /// Adjugate of the Cartan matrix, so that `A⁻¹ = adj / det`.
    adj: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn check_rank(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::B => rank >= 2,
        Family::C => rank >= 3,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if ok {
        return Ok(());
    }
    let constraint = match family {
        Family::A => "A_n requires n >= 1",
        Family::B => "B_n requires n >= 2",
        Family::C => "C_n requires n >= 3",
        Family::D => "D_n requires n >= 4",
        Family::E => "E_n requires n in {6, 7, 8}",
        Family::F => "F_n requires n = 4",
        Family::G => "G_n requires n = 2",
    };
    domain(format!("invalid simple type {family}{rank}: {constraint}"))
}

fn build_cartan(family: Family, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut sym = vec![1i64; n];
    match family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for i in 3..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => {
            link(0, 1);
        }
    }
    match family {
        Family::B => {
            a[n - 1][n - 2] = -2;
            sym = vec![2; n];
            sym[n - 1] = 1;
        }
        Family::C => {
            a[n - 2][n - 1] = -2;
            sym[n - 1] = 2;
        }
        Family::F => {
            a[2][1] = -2;
            sym = vec![2, 2, 1, 1];
        }
        Family::G => {
            a[0][1] = -3;
            sym = vec![1, 3];
        }
        _ => {}
    }
    (a, sym)
}

/// Exact inverse of an integer matrix by Gauss-Jordan over ℚ.
fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (x, y) in aug[r].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by fraction-free (Bareiss) elimination.
fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

impl RootSystem {
    /// Builds the root system of type `family` and rank `rank`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        check_rank(family, rank)?;
        let (cartan, sym) = build_cartan(family, rank);
        let det = determinant(&cartan);
        let inv = rational_inverse(&cartan)
            .ok_or_else(|| Error::Invariant(format!("Cartan matrix of {family}{rank} is singular")))?;
        let adj = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let v = x * BigRational::from_integer(det.into());
                        v.to_integer().to_i64().expect("adjugate entry fits in i64")
                    })
                    .collect()
            })
            .collect();
        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            sym,
            det,
            adj,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs.compute_positive_roots();
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn sym(&self) -> &[i64] {
        &self.sym
    }

    /// Determinant of the Cartan matrix, the index of Q in P.
    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    /// Weight coordinates of the simple root α_j (column `j` of the Cartan matrix).
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank).map(|i| self.cartan[i][j]).collect())
    }

    /// `det · c` where `c` are the simple-root coordinates of `λ`.
    pub(crate) fn scaled_root_coords(&self, lambda: &Weight) -> Vec<i64> {
        self.adj
            .iter()
            .map(|row| row.iter().zip(&lambda.0).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Simple-root coordinates when `λ ∈ Q`, `None` otherwise.
    pub fn integral_root_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        let scaled = self.scaled_root_coords(lambda);
        scaled
            .iter()
            .map(|&x| if x % self.det == 0 { Some(x / self.det) } else { None })
            .collect()
    }

    /// Expresses `λ` in simple-root coordinates, `λ = Σ c_j α_j`.
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> RationalVector {
        let det = BigInt::from(self.det);
        RationalVector(
            self.scaled_root_coords(lambda)
                .into_iter()
                .map(|x| BigRational::new(BigInt::from(x), det.clone()))
                .collect(),
        )
    }

    /// Inverse of [`weight_to_root_coords`](Self::weight_to_root_coords):
    /// fundamental-weight coordinates of `Σ c_j α_j`.
    pub fn root_coords_to_weight_coords(&self, c: &RationalVector) -> RationalVector {
        RationalVector(
            (0..self.rank)
                .map(|i| {
                    (0..self.rank)
                        .map(|j| BigRational::from_integer(self.cartan[i][j].into()) * &c.0[j])
                        .fold(BigRational::zero(), |acc, x| acc + x)
                })
                .collect(),
        )
    }

    /// The invariant form `(λ, μ)`, normalised so that short roots have length 2.
    pub fn bilinear_form(&self, lambda: &Weight, mu: &Weight) -> BigRational {
        // (λ, α_j) = λ_j · d_j, so (λ, μ) = Σ_j c_j(μ) λ_j d_j.
        let scaled = self.scaled_root_coords(mu);
        let num: i64 = (0..self.rank).map(|j| scaled[j] * lambda.0[j] * self.sym[j]).sum();
        BigRational::new(BigInt::from(num), BigInt::from(self.det))
    }

    /// `(λ, β)` for `β ∈ Q` given in simple-root coordinates; always an integer.
    pub(crate) fn pair_with_root(&self, lambda: &Weight, root_coords: &[i64]) -> i64 {
        (0..self.rank).map(|j| root_coords[j] * lambda.0[j] * self.sym[j]).sum()
    }

    /// Half the sum of the positive roots, `ρ = Σ ϖ_i`.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Simple reflection `s_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        let k = mu.0[i];
        if k == 0 {
            return mu.clone();
        }
        Weight((0..self.rank).map(|r| mu.0[r] - k * self.cartan[r][i]).collect())
    }

    /// The unique dominant weight in the Weyl orbit of `μ`.
    pub fn dominant_representative(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        while let Some(i) = w.0.iter().position(|&a| a < 0) {
            w = self.reflect(i, &w);
        }
        w
    }

    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        self.weyl_orbit_capped(lambda, DEFAULT_ORBIT_CAP)
    }

    /// Breadth-first closure of `{λ}` under the simple reflections.
    pub fn weyl_orbit_capped(&self, lambda: &Weight, cap: usize) -> Result<BTreeSet<Weight>> {
        Ok(self.orbit_hashset(lambda, cap)?.into_iter().collect())
    }

    pub(crate) fn orbit_hashset(&self, lambda: &Weight, cap: usize) -> Result<HashSet<Weight>> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank {
                if mu.0[i] == 0 {
                    continue;
                }
                let nu = self.reflect(i, &mu);
                if seen.insert(nu.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Resource(format!(
                            "Weyl orbit of {} in {} exceeds {cap} elements",
                            lambda, self
                        )));
                    }
                    queue.push_back(nu);
                }
            }
        }
        Ok(seen)
    }

    /// Number of elements in the Weyl orbit of `λ`.
    pub fn orbit_size(&self, lambda: &Weight) -> Result<u64> {
        Ok(self.orbit_hashset(lambda, DEFAULT_ORBIT_CAP)?.len() as u64)
    }

    pub fn weyl_group_order(&self) -> Result<u64> {
        self.weyl_group_order_capped(DEFAULT_ORBIT_CAP)
    }

    /// |W|, computed as the size of the (regular) orbit of ρ.
    pub fn weyl_group_order_capped(&self, cap: usize) -> Result<u64> {
        Ok(self.orbit_hashset(&self.rho(), cap)?.len() as u64)
    }

    /// Reflexive dominance: `λ − μ` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        match self.integral_root_coords(&lambda.sub(mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// Sum of the simple-root coordinates of `λ`, scaled by `det`.
    pub(crate) fn scaled_height(&self, lambda: &Weight) -> i64 {
        self.scaled_root_coords(lambda).iter().sum()
    }

    fn compute_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut c = vec![0; n];
                c[j] = 1;
                c
            })
            .collect();
        let mut out = Vec::new();
        while !layer.is_empty() {
            for c in &layer {
                known.insert(c.clone());
            }
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for c in &layer {
                let weight = self.root_weight(c);
                for i in 0..n {
                    // length of the α_i-string below β
                    let mut p = 0;
                    let mut down = c.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - weight.0[i] > 0 {
                        let mut up = c.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            out.extend(layer.drain(..));
            layer = next.into_iter().collect();
        }
        out.into_iter()
            .map(|c| Root {
                weight: self.root_weight(&c),
                root_coords: c,
            })
            .collect()
    }

    fn root_weight(&self, c: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * c[j]).sum())
                .collect(),
        )
    }

    pub fn record(&self) -> RootSystemRecord {
        RootSystemRecord {
            family: self.family,
            rank: self.rank,
            cartan: self.cartan.clone(),
            sym: self.sym.clone(),
        }
    }

    pub fn weight_record(&self, lambda: &Weight) -> WeightRecord {
        WeightRecord {
            family: self.family,
            rank: self.rank,
            cartan: self.cartan.clone(),
            coords: lambda.0.clone(),
        }
    }
}

/// JSON form of a [`RootSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemRecord {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub sym: Vec<i64>,
}

impl RootSystemRecord {
    /// Rebuilds the root system, checking that the stored Cartan data matches.
    pub fn to_root_system(&self) -> Result<RootSystem> {
        let rs = RootSystem::new(self.family, self.rank)?;
        if rs.cartan != self.cartan || rs.sym != self.sym {
            return domain(format!("stored Cartan data does not match {rs}"));
        }
        Ok(rs)
    }
}

/// JSON form of a weight together with the root system it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub coords: Vec<i64>,
}
