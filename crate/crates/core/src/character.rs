//! Characters of simple modules as W-invariant elements of the even torus.
//!
//! A [`TorusInvariant`] `Σ m(μ) K_{2μ}` is stored as the map `μ ↦ m(μ)`.
//! Most computations work on the restriction to the dominant chamber
//! ([`WInvariant`]), which determines a W-invariant function completely.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::json::JsonInt;
use crate::linalg;
use crate::monoid::{classify_type, in_half_root_lattice, in_monoid, TypeClass};
use crate::presentation::{presentation, verify_relations, GeneratorMonomial, Presentation, Report};
use crate::root_system::{Family, RootSystem, Weight, DEFAULT_ORBIT_CAP};

/// Upper bound on the number of dominant weights tracked for one module.
pub const MAX_DOMINANT_WEIGHTS: usize = 1_000_000;

/// `Σ m(μ) K_{2μ}` with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TorusInvariant {
    terms: BTreeMap<Weight, BigInt>,
}

impl TorusInvariant {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::from_terms([(Weight::zero(rank), BigInt::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Self {
        let mut t = Self::zero();
        for (k, v) in terms {
            t.add_term(k, v);
        }
        t
    }

    pub fn add_term(&mut self, mu: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn get(&self, mu: &Weight) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// `K_{2μ}·K_{2ν} = K_{2(μ+ν)}`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Weight, BigInt> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a.add(b)).or_insert_with(BigInt::zero) += x * y;
            }
        }
        Self::from_terms(acc)
    }

    /// Sum of all coefficients; the dimension when `self` is a character.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        self.terms
            .iter()
            .all(|(mu, c)| (0..rs.rank()).all(|i| self.terms.get(&rs.reflect(i, mu)) == Some(c)))
    }

    pub fn keys_in_half_root_lattice(&self, rs: &RootSystem) -> bool {
        self.terms.keys().all(|mu| in_half_root_lattice(rs, mu))
    }

    /// Restriction to dominant keys.
    pub fn dominant_part(&self) -> BTreeMap<Weight, BigInt> {
        self.terms
            .iter()
            .filter(|(k, _)| k.is_dominant())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    /// Terms in ascending key order, as `(coords, coefficient)`.
    pub fn record(&self) -> TorusInvariantRecord {
        TorusInvariantRecord(
            self.terms
                .iter()
                .map(|(k, v)| (k.0.clone(), JsonInt::from(v)))
                .collect(),
        )
    }

    pub fn from_record(r: &TorusInvariantRecord) -> Result<Self> {
        let mut out = Self::zero();
        for (k, v) in &r.0 {
            out.add_term(Weight(k.clone()), v.to_bigint()?);
        }
        Ok(out)
    }
}

/// JSON form of a [`TorusInvariant`]: a list of `[coords, coefficient]` sorted by coords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusInvariantRecord(pub Vec<(Vec<i64>, JsonInt)>);

impl fmt::Display for TorusInvariant {
    /// `m·K_{2μ}` terms, highest keys first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, v)) in self.terms.iter().rev().enumerate() {
            let neg = v.is_negative();
            let abs = v.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "K_{{2{k}}}")?;
        }
        Ok(())
    }
}

/// A W-invariant function stored through its values on dominant weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WInvariant {
    dominant: BTreeMap<Weight, BigInt>,
}

impl WInvariant {
    pub fn from_dominant(terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Self {
        let mut dominant = BTreeMap::new();
        for (k, v) in terms {
            debug_assert!(k.is_dominant());
            if !v.is_zero() {
                dominant.insert(k, v);
            }
        }
        WInvariant { dominant }
    }

    /// Restricts a W-invariant torus element; errors if `t` is not W-invariant.
    pub fn from_torus(rs: &RootSystem, t: &TorusInvariant) -> Result<Self> {
        if !t.is_w_invariant(rs) {
            return domain("torus element is not W-invariant");
        }
        Ok(Self::from_dominant(t.dominant_part()))
    }

    pub fn dominant(&self) -> &BTreeMap<Weight, BigInt> {
        &self.dominant
    }

    pub fn is_zero(&self) -> bool {
        self.dominant.is_empty()
    }

    pub fn get(&self, rs: &RootSystem, mu: &Weight) -> BigInt {
        let d = rs.dominant_representative(mu);
        self.dominant.get(&d).cloned().unwrap_or_default()
    }

    /// Expands every dominant key to its full Weyl orbit.
    pub fn to_torus(&self, rs: &RootSystem) -> Result<TorusInvariant> {
        Ok(TorusInvariant::from_terms(self.full_terms(rs)?))
    }

    fn full_terms(&self, rs: &RootSystem) -> Result<Vec<(Weight, BigInt)>> {
        let mut out = Vec::new();
        for (k, v) in &self.dominant {
            for w in rs.orbit_hashset(k, DEFAULT_ORBIT_CAP)? {
                out.push((w, v.clone()));
                if out.len() > DEFAULT_ORBIT_CAP {
                    return Err(Error::Resource(format!(
                        "torus element support exceeds {DEFAULT_ORBIT_CAP} weights"
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Sum of coefficients over the full support.
    pub fn total(&self, rs: &RootSystem) -> Result<BigInt> {
        let mut s = BigInt::zero();
        for (k, v) in &self.dominant {
            s += v * BigInt::from(rs.orbit_size(k)?);
        }
        Ok(s)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.dominant.clone();
        for (k, v) in &other.dominant {
            *out.entry(k.clone()).or_insert_with(BigInt::zero) += v;
        }
        Self::from_dominant(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dominant(self.dominant.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Product of W-invariant functions, computed on dominant targets only.
    pub fn mul(&self, rs: &RootSystem, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::default());
        }
        // iterate over the full support of the smaller factor
        let (big, small) = if self.support_estimate(rs)? >= other.support_estimate(rs)? {
            (self, other)
        } else {
            (other, self)
        };
        let small_full = small.full_terms(rs)?;
        let seeds: Vec<Weight> = big
            .dominant
            .keys()
            .flat_map(|a| small.dominant.keys().map(move |b| a.add(b)))
            .collect();
        let targets = dominant_weights_below(rs, &seeds, MAX_DOMINANT_WEIGHTS)?;
        let terms: Vec<(Weight, BigInt)> = targets
            .into_par_iter()
            .map(|nu| {
                let mut acc = BigInt::zero();
                for (kappa, c) in &small_full {
                    let d = rs.dominant_representative(&nu.sub(kappa));
                    if let Some(x) = big.dominant.get(&d) {
                        acc += x * c;
                    }
                }
                (nu, acc)
            })
            .collect();
        Ok(Self::from_dominant(terms))
    }

    fn support_estimate(&self, rs: &RootSystem) -> Result<u64> {
        let mut s = 0u64;
        for k in self.dominant.keys() {
            s += rs.orbit_size(k)?;
        }
        Ok(s)
    }

    /// A dominant key of maximal height; it is maximal for dominance.
    pub fn leading_key(&self, rs: &RootSystem) -> Option<&Weight> {
        self.dominant.keys().max_by_key(|k| (rs.scaled_height(k), (*k).clone()))
    }
}

/// All dominant weights `ν` with `ν ≤ s` for some seed `s`, in the same
/// coset of `Q` as that seed, ordered by increasing depth below the seeds.
pub fn dominant_weights_below(rs: &RootSystem, seeds: &[Weight], cap: usize) -> Result<Vec<Weight>> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    for s in seeds {
        let s = rs.dominant_representative(s);
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(mu) = queue.pop_front() {
        for alpha in rs.positive_roots() {
            let nu = mu.sub(&alpha.weight);
            if nu.is_dominant() && seen.insert(nu.clone()) {
                if seen.len() > cap {
                    return Err(Error::Resource(format!("more than {cap} dominant weights")));
                }
                queue.push_back(nu);
            }
        }
        out.push(mu);
    }
    Ok(out)
}

/// Dominant weight multiplicities of the simple module `L(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub highest: Weight,
    /// `(μ, dim L(λ)_μ)` for dominant `μ`, sorted by `μ`.
    pub multiplicities: Vec<(Weight, u64)>,
}

impl CharacterTable {
    pub fn multiplicity(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        let d = rs.dominant_representative(mu);
        self.multiplicities
            .binary_search_by(|(k, _)| k.cmp(&d))
            .map(|i| self.multiplicities[i].1)
            .unwrap_or(0)
    }

    pub fn dimension(&self, rs: &RootSystem) -> Result<u64> {
        let mut s = 0u64;
        for (k, m) in &self.multiplicities {
            s += m * rs.orbit_size(k)?;
        }
        Ok(s)
    }

    pub fn invariant(&self) -> WInvariant {
        WInvariant::from_dominant(self.multiplicities.iter().map(|(k, m)| (k.clone(), BigInt::from(*m))))
    }
}

/// Freudenthal's recursion over the dominant chamber.
fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable> {
    let doms = dominant_weights_below(rs, std::slice::from_ref(lambda), MAX_DOMINANT_WEIGHTS)?;
    let mut doms: Vec<(i64, Weight, Vec<i64>)> = doms
        .into_iter()
        .map(|mu| {
            let diff = rs
                .integral_root_coords(&lambda.sub(&mu))
                .expect("weights below lambda differ by roots");
            (diff.iter().sum(), mu, diff)
        })
        .collect();
    doms.sort();
    let two_rho = rs.rho().scale(2);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for (_, mu, diff) in doms.iter().skip(1) {
        let denom = rs.pair_with_root(&lambda.add(mu).add(&two_rho), diff);
        let mut num: i64 = 0;
        for alpha in rs.positive_roots() {
            let mut rest = diff.clone();
            let mut nu = mu.clone();
            loop {
                for (r, a) in rest.iter_mut().zip(&alpha.root_coords) {
                    *r -= a;
                }
                if rest.iter().any(|&r| r < 0) {
                    break;
                }
                nu = nu.add(&alpha.weight);
                let m = mult.get(&rs.dominant_representative(&nu)).copied().unwrap_or(0);
                num += m * rs.pair_with_root(&nu, &alpha.root_coords);
            }
        }
        if denom <= 0 || (2 * num) % denom != 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal step at {mu} gives 2·{num}/{denom}"
            )));
        }
        mult.insert(mu.clone(), 2 * num / denom);
    }
    let mut multiplicities: Vec<(Weight, u64)> = mult
        .into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(k, m)| (k, m as u64))
        .collect();
    multiplicities.sort();
    Ok(CharacterTable {
        family: rs.family(),
        rank: rs.rank(),
        highest: lambda.clone(),
        multiplicities,
    })
}

type CacheKey = (Family, usize, Weight);

/// Memo table for character tables, optionally mirrored to a directory of JSON files.
#[derive(Default)]
pub struct CharacterCache {
    tables: RwLock<HashMap<CacheKey, Arc<CharacterTable>>>,
    dir: RwLock<Option<PathBuf>>,
}

static GLOBAL_CACHE: LazyLock<CharacterCache> = LazyLock::new(CharacterCache::default);

pub fn global_cache() -> &'static CharacterCache {
    &GLOBAL_CACHE
}

impl CharacterCache {
    pub fn set_dir(&self, dir: Option<PathBuf>) {
        *self.dir.write().unwrap() = dir;
    }

    pub fn dir(&self) -> Option<PathBuf> {
        self.dir.read().unwrap().clone()
    }

    pub fn len(&self) -> usize {
        self.tables.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.tables.write().unwrap().clear();
    }

    /// Snapshot of every table held in memory, in no particular order.
    pub fn tables(&self) -> Vec<Arc<CharacterTable>> {
        self.tables.read().unwrap().values().cloned().collect()
    }

    fn file_name(key: &CacheKey) -> String {
        let coords: Vec<String> = key.2 .0.iter().map(i64::to_string).collect();
        format!("{}{}_{}.json", key.0, key.1, coords.join("_"))
    }

    fn load(dir: &Path, key: &CacheKey) -> Option<CharacterTable> {
        let text = fs::read_to_string(dir.join(Self::file_name(key))).ok()?;
        let t: CharacterTable = serde_json::from_str(&text).ok()?;
        (t.family == key.0 && t.rank == key.1 && t.highest == key.2).then_some(t)
    }

    fn store(dir: &Path, key: &CacheKey, t: &CharacterTable) -> Result<()> {
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{}.tmp", Self::file_name(key)));
        fs::write(&tmp, serde_json::to_string(t)?)?;
        fs::rename(tmp, dir.join(Self::file_name(key)))?;
        Ok(())
    }

    pub fn get_or_compute(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<CharacterTable>> {
        let key = (rs.family(), rs.rank(), lambda.clone());
        if let Some(t) = self.tables.read().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let dir = self.dir();
        let table = match dir.as_deref().and_then(|d| Self::load(d, &key)) {
            Some(t) => t,
            None => {
                let t = freudenthal(rs, lambda)?;
                if let Some(d) = &dir {
                    Self::store(d, &key, &t)?;
                }
                t
            }
        };
        let mut w = self.tables.write().unwrap();
        Ok(w.entry(key).or_insert_with(|| Arc::new(table)).clone())
    }
}

/// Multiplicities of `L(λ)` on all dominant weights.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<Arc<CharacterTable>> {
    if lambda.rank() != rs.rank() || !lambda.is_dominant() {
        return domain(format!("{lambda} is not a dominant weight of {rs}"));
    }
    global_cache().get_or_compute(rs, lambda)
}

fn check_monoid(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() || !in_monoid(rs, lambda) {
        return domain(format!("{lambda} is not in M+ for {rs}"));
    }
    Ok(())
}

/// `ξ([L(λ)]) = Σ_μ m(μ) K_{2μ}` for `λ ∈ M⁺`.
pub fn xi_simple(rs: &RootSystem, lambda: &Weight) -> Result<TorusInvariant> {
    xi_simple_invariant(rs, lambda)?.to_torus(rs)
}

pub fn xi_simple_invariant(rs: &RootSystem, lambda: &Weight) -> Result<WInvariant> {
    check_monoid(rs, lambda)?;
    Ok(weight_multiplicities(rs, lambda)?.invariant())
}

/// Character of `⊗_i L(ϖ_i)^{⊗a_i}` as a product of fundamental characters.
/// The fundamental factors may have keys outside `M`.
pub fn tensor_character(rs: &RootSystem, exponents: &[i64]) -> Result<WInvariant> {
    if exponents.len() != rs.rank() || exponents.iter().any(|&a| a < 0) {
        return domain(format!("invalid tensor exponents {exponents:?}"));
    }
    let mut acc = WInvariant::from_dominant([(Weight::zero(rs.rank()), BigInt::one())]);
    for (i, &a) in exponents.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let f = weight_multiplicities(rs, &rs.fundamental_weight(i))?.invariant();
        for _ in 0..a {
            acc = acc.mul(rs, &f)?;
        }
    }
    Ok(acc)
}

/// `ξ([T(λ)])` for `λ ∈ M⁺`; every key of the result lies in `M`.
pub fn xi_tensor(rs: &RootSystem, lambda: &Weight) -> Result<TorusInvariant> {
    xi_tensor_invariant(rs, lambda)?.to_torus(rs)
}

pub fn xi_tensor_invariant(rs: &RootSystem, lambda: &Weight) -> Result<WInvariant> {
    check_monoid(rs, lambda)?;
    let t = tensor_character(rs, &lambda.0)?;
    if let Some(k) = t.dominant().keys().find(|k| !in_half_root_lattice(rs, k)) {
        return Err(Error::Invariant(format!("xi_tensor({lambda}) has key {k} outside M")));
    }
    Ok(t)
}

/// `av(λ) = Σ_{w∈W} K_{2wλ}`.
pub fn av_basis_element(rs: &RootSystem, lambda: &Weight) -> Result<TorusInvariant> {
    av_invariant(rs, lambda)?.to_torus(rs)
}

pub fn av_invariant(rs: &RootSystem, lambda: &Weight) -> Result<WInvariant> {
    check_monoid(rs, lambda)?;
    let stab = rs.weyl_group_order()? / rs.orbit_size(lambda)?;
    Ok(WInvariant::from_dominant([(lambda.clone(), BigInt::from(stab))]))
}

/// Coefficients of `t` in the av-basis: `t(λ)·|Wλ|/|W|` on each dominant key.
pub fn expand_in_av(rs: &RootSystem, t: &TorusInvariant) -> Result<BTreeMap<Weight, BigRational>> {
    let inv = WInvariant::from_torus(rs, t)?;
    let order = BigInt::from(rs.weyl_group_order()?);
    let mut out = BTreeMap::new();
    for (k, v) in inv.dominant() {
        let orbit = BigInt::from(rs.orbit_size(k)?);
        out.insert(k.clone(), BigRational::new(v * orbit, order.clone()));
    }
    Ok(out)
}

/// `T(λ) = L(λ) ⊕ ⊕_{μ<λ} L(μ)^{m_{λ,μ}}`, recovered by triangular solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub lambda: Weight,
    /// `(μ, m_{λ,μ})` in the order found, leading term first.
    pub terms: Vec<(Weight, i64)>,
    pub ok: bool,
}

impl Decomposition {
    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.terms.iter().find(|(k, _)| k == mu).map_or(0, |(_, m)| *m)
    }
}

/// Expands a W-invariant `t` over simple characters.
pub fn decompose(rs: &RootSystem, t: &WInvariant) -> Result<Vec<(Weight, BigInt)>> {
    let mut rest = t.clone();
    let mut out = Vec::new();
    while let Some(top) = rest.leading_key(rs).cloned() {
        let c = rest.dominant[&top].clone();
        let ch = weight_multiplicities(rs, &top)?.invariant();
        rest = rest.sub(&ch.scale(&c));
        out.push((top, c));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitriangularityReport {
    pub bound: i64,
    pub decompositions: Vec<Decomposition>,
}

impl UnitriangularityReport {
    pub fn all_ok(&self) -> bool {
        self.decompositions.iter().all(|d| d.ok)
    }

    pub fn get(&self, lambda: &Weight) -> Option<&Decomposition> {
        self.decompositions.iter().find(|d| &d.lambda == lambda)
    }
}

/// Checks `[T(λ)] = [L(λ)] + Σ_{μ<λ} m_{λ,μ}[L(μ)]` with `m_{λ,μ} ≥ 0` for every
/// `λ ∈ M⁺` with coordinates `≤ bound`.
pub fn unitriangularity_check(rs: &RootSystem, bound: i64) -> Result<UnitriangularityReport> {
    let mut decompositions = Vec::new();
    for lambda in monoid_box(rs, bound) {
        let t = xi_tensor_invariant(rs, &lambda)?;
        let parts = decompose(rs, &t)?;
        let mut ok = parts.first().is_some_and(|(k, c)| k == &lambda && c.is_one());
        let mut terms = Vec::new();
        for (k, c) in parts {
            if k != lambda {
                ok &= c.is_positive() && rs.dominates(&lambda, &k);
            }
            let Some(c) = c.to_i64() else {
                return Err(Error::Resource(format!("multiplicity {c} exceeds i64")));
            };
            terms.push((k, c));
        }
        decompositions.push(Decomposition { lambda, terms, ok });
    }
    Ok(UnitriangularityReport { bound, decompositions })
}

/// All `λ ∈ M⁺` with coordinates in `0..=bound`, in lexicographic order.
pub fn monoid_box(rs: &RootSystem, bound: i64) -> Vec<Weight> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    if bound < 0 {
        return out;
    }
    loop {
        let w = Weight(cur.clone());
        if in_monoid(rs, &w) {
            out.push(w);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Writes `av(λ)` as a rational combination `Σ c_μ ξ([L(μ)])` over `μ ≤ λ`.
pub fn av_from_simple(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, BigRational)>> {
    let target = av_invariant(rs, lambda)?;
    Ok(decompose(rs, &target)?
        .into_iter()
        .map(|(k, c)| (k, BigRational::from_integer(c)))
        .collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CentreOptions {
    /// Compare full characters for E6 instead of exponent identities.
    pub e6_full_characters: bool,
}

fn monomial_character(rs: &RootSystem, p: &Presentation, m: &GeneratorMonomial) -> Result<WInvariant> {
    let mut acc = WInvariant::from_dominant([(Weight::zero(rs.rank()), BigInt::one())]);
    for (&g, &e) in m.exponents() {
        let lambda = p.basis().elements().get(g).ok_or(Error::UnknownGenerator(g))?;
        let x = xi_tensor_invariant(rs, lambda.weight())?;
        for _ in 0..e {
            acc = acc.mul(rs, &x)?;
        }
    }
    Ok(acc)
}

/// Checks every relation of the presentation on ξ-images of tensor modules.
pub fn verify_centre_relations(rs: &RootSystem, opts: CentreOptions) -> Result<Report> {
    if classify_type(rs) == TypeClass::TypeI {
        return domain(format!("{rs} is of type I; the centre is a polynomial algebra without relations"));
    }
    let p = presentation(rs)?;
    if rs.family() == Family::E && !opts.e6_full_characters {
        let mut report = Report::default();
        for c in verify_relations(&p).checks {
            report.push(format!("exponent level {}", c.name), c.passed);
        }
        return Ok(report);
    }
    let mut report = Report::default();
    for r in p.relations() {
        let lhs = monomial_character(rs, &p, &r.lhs)?;
        let rhs = monomial_character(rs, &p, &r.rhs)?;
        report.push(format!("xi: {}", p.render_relation(r)), lhs == rhs);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub degree_bound: u32,
    pub monomials: usize,
    pub rank: usize,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.monomials == self.rank
    }
}

fn exponent_vectors(n: usize, max_degree: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for e in 0..=max_degree {
        for mut rest in exponent_vectors(n - 1, max_degree - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Rank of the monomials `Π ξ([L(ϖ_i)])^{e_i}`, `Σ e_i ≤ degree_bound`, over ℚ.
pub fn independence_check(rs: &RootSystem, degree_bound: u32) -> Result<IndependenceReport> {
    if classify_type(rs) == TypeClass::TypeII {
        return domain(format!("{rs} is of type II; fundamental weights are not all in M+"));
    }
    let n = rs.rank();
    let fundamentals: Vec<WInvariant> = (0..n)
        .map(|i| xi_simple_invariant(rs, &rs.fundamental_weight(i)))
        .collect::<Result<_>>()?;
    // memoised by exponent vector; each monomial extends one of lower degree
    let mut memo: HashMap<Vec<u32>, WInvariant> = HashMap::new();
    let mut vectors = exponent_vectors(n, degree_bound);
    vectors.sort_by_key(|v| v.iter().sum::<u32>());
    for v in &vectors {
        let value = match v.iter().position(|&e| e > 0) {
            None => WInvariant::from_dominant([(Weight::zero(n), BigInt::one())]),
            Some(i) => {
                let mut prev = v.clone();
                prev[i] -= 1;
                memo[&prev].mul(rs, &fundamentals[i])?
            }
        };
        memo.insert(v.clone(), value);
    }
    let columns: Vec<Weight> = {
        let mut keys: Vec<Weight> = memo.values().flat_map(|w| w.dominant().keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        keys
    };
    let rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| {
            let d = memo[v].dominant();
            columns
                .iter()
                .map(|k| BigRational::from_integer(d.get(k).cloned().unwrap_or_default()))
                .collect()
        })
        .collect();
    Ok(IndependenceReport {
        degree_bound,
        monomials: vectors.len(),
        rank: linalg::rank(rows),
    })
}

/// Dominant weights of `t` sorted from the top, for display.
pub fn leading_terms(rs: &RootSystem, t: &WInvariant) -> Vec<(Weight, BigInt)> {
    let mut v: Vec<_> = t.dominant().iter().map(|(k, c)| (k.clone(), c.clone())).collect();
    v.sort_by_key(|(k, _)| Reverse((rs.scaled_height(k), k.clone())));
    v
}
