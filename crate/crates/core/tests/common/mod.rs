//! Independent oracles for integration tests. They only read the simple roots
//! of a `RootSystem` and recompute everything else from scratch.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use qcentre::root_system::{Family, RootSystem, Weight};

pub fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).unwrap()
}

pub fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

/// `A[i][j] = ⟨α_j, α_i^∨⟩`, read off the simple roots in weight coordinates.
fn pairing_matrix(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let cols: Vec<Weight> = (0..n).map(|j| rs.simple_root(j)).collect();
    (0..n).map(|i| (0..n).map(|j| cols[j].0[i]).collect()).collect()
}

/// Squared lengths of simple roots up to a common factor, from
/// `|α_i|² A[i][j] = |α_j|² A[j][i]` propagated along the diagram.
fn simple_lengths(a: &[Vec<i64>]) -> Vec<BigRational> {
    let n = a.len();
    let mut len: Vec<Option<BigRational>> = vec![None; n];
    len[0] = Some(BigRational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if j != i && a[i][j] != 0 && len[j].is_none() {
                let li = len[i].clone().unwrap();
                len[j] = Some(li * BigRational::new(a[i][j].into(), a[j][i].into()));
                queue.push_back(j);
            }
        }
    }
    len.into_iter().map(Option::unwrap).collect()
}

/// Positive roots in simple-root coordinates by closing the simple roots under
/// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`.
pub fn positive_roots_by_closure(rs: &RootSystem) -> Vec<Vec<i64>> {
    let a = pairing_matrix(rs);
    let n = a.len();
    let pair = |beta: &[i64], i: usize| -> i64 { (0..n).map(|j| beta[j] * a[i][j]).sum() };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let mut next = beta.clone();
            next[i] -= pair(&beta, i);
            if next.iter().all(|&x| x >= 0) && next.iter().any(|&x| x > 0) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// `dim L(λ) = Π_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> BigInt {
    let a = pairing_matrix(rs);
    let len = simple_lengths(&a);
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for beta in positive_roots_by_closure(rs) {
        let mut top = BigRational::zero();
        let mut bottom = BigRational::zero();
        for j in 0..beta.len() {
            let c = &len[j] * BigRational::from_integer(beta[j].into());
            top += &c * BigRational::from_integer((lambda.0[j] + 1).into());
            bottom += c;
        }
        num *= top;
        den *= bottom;
    }
    let d = num / den;
    assert!(d.is_integer());
    d.to_integer()
}

/// Solves `Σ_j c_j α_j = 2λ` over ℚ and tests integrality.
pub fn in_half_lattice_oracle(rs: &RootSystem, lambda: &Weight) -> bool {
    let a = pairing_matrix(rs);
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a[i].iter().map(|&x| BigRational::from_integer(x.into())).collect();
            row.push(BigRational::from_integer((2 * lambda.0[i]).into()));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).unwrap();
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.iter().all(|row| row[n].is_integer())
}

/// Dominant weights with every coordinate `≤ bound`.
pub fn dominant_box(n: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// Irreducible elements of the monoid among weights with coordinates `≤ bound`.
pub fn brute_force_hilbert(rs: &RootSystem, bound: i64) -> BTreeSet<Vec<i64>> {
    let members: BTreeSet<Vec<i64>> = dominant_box(rs.rank(), bound)
        .into_iter()
        .filter(|l| !l.is_zero() && in_half_lattice_oracle(rs, l))
        .map(|l| l.0)
        .collect();
    members
        .iter()
        .filter(|l| {
            !members.iter().any(|m| {
                m != *l && m.iter().zip(l.iter()).all(|(x, y)| x <= y) && {
                    let rest: Vec<i64> = l.iter().zip(m).map(|(y, x)| y - x).collect();
                    members.contains(&rest)
                }
            })
        })
        .cloned()
        .collect()
}

/// `s_i = (n+1)/gcd(n+1, 2i)` for `A_n`.
pub fn type_a_s(n: usize) -> Vec<i64> {
    (1..=n as i64)
        .map(|i| {
            let m = n as i64 + 1;
            m / num_integer::gcd(m, 2 * i)
        })
        .collect()
}

pub fn is_positive_int(x: &BigInt) -> bool {
    x.is_positive()
}
