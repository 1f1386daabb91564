//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{brute_force_hilbert, dominant_box, rs, type_a_s, w, weyl_dimension};
use num_bigint::BigInt;
use num_traits::Signed;
use qcentre::character::{
    self, global_cache, independence_check, unitriangularity_check, xi_simple, CentreOptions,
};
use qcentre::monoid::{hilbert_basis, in_monoid, min_multipliers, type_a_membership, TypeClass};
use qcentre::presentation::{
    exponent_weight, generation_check, presentation, verify_relations, GeneratorMonomial, Presentation,
};
use qcentre::root_system::{Family, RootSystem};
use qcentre::uq::casimir::{check_gamma_intertwines, check_k_intertwining, check_quasi_r_intertwining};
use qcentre::uq::{casimir, hc_project, simple_module, RationalFunctionQ, UqElement};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn set(v: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    v.iter().map(|x| x.to_vec()).collect()
}

fn hilb_set(r: &RootSystem) -> BTreeSet<Vec<i64>> {
    hilbert_basis(r).elements().iter().map(|e| e.coords().to_vec()).collect()
}

fn fundamentals(n: usize) -> BTreeSet<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

fn d_odd_expected(n: usize) -> BTreeSet<Vec<i64>> {
    let mut out: BTreeSet<Vec<i64>> = fundamentals(n).into_iter().filter(|v| v[n - 2] == 0 && v[n - 1] == 0).collect();
    for tail in [[2, 0], [0, 2], [1, 1]] {
        let mut v = vec![0; n];
        v[n - 2] = tail[0];
        v[n - 1] = tail[1];
        out.insert(v);
    }
    out
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let cases: Vec<(Family, usize, BTreeSet<Vec<i64>>)> = vec![
        (Family::A, 2, set(&[&[3, 0], &[0, 3], &[1, 1]])),
        (Family::A, 3, set(&[&[1, 0, 1], &[0, 1, 0], &[2, 0, 0], &[0, 0, 2]])),
        (
            Family::A,
            4,
            set(&[
                &[1, 0, 0, 1],
                &[0, 1, 1, 0],
                &[5, 0, 0, 0],
                &[0, 5, 0, 0],
                &[2, 0, 1, 0],
                &[1, 2, 0, 0],
                &[3, 1, 0, 0],
                &[1, 0, 3, 0],
                &[0, 0, 0, 5],
                &[0, 0, 5, 0],
                &[0, 1, 0, 2],
                &[0, 0, 2, 1],
                &[0, 0, 1, 3],
                &[0, 3, 0, 1],
            ]),
        ),
        (Family::D, 5, d_odd_expected(5)),
        (Family::D, 7, d_odd_expected(7)),
        (
            Family::E,
            6,
            set(&[
                &[3, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 3, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 3, 0],
                &[0, 0, 0, 0, 0, 3],
                &[1, 0, 1, 0, 0, 0],
                &[1, 0, 0, 0, 0, 1],
                &[0, 0, 1, 0, 1, 0],
                &[0, 0, 0, 0, 1, 1],
                &[1, 0, 0, 0, 2, 0],
                &[2, 0, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, 2],
                &[0, 0, 2, 0, 0, 1],
            ]),
        ),
    ];
    let type_one = [
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 4),
        (Family::G, 2),
        (Family::F, 4),
    ];
    for (f, n, expected) in cases {
        ensure(hilb_set(&rs(f, n)) == expected, format!("{f}{n} basis differs"))?;
    }
    for (f, n) in type_one {
        ensure(hilb_set(&rs(f, n)) == fundamentals(n), format!("{f}{n} basis is not the fundamental weights"))?;
    }
    let t = within(start, Duration::from_secs(10), "Hilbert bases without E7")?;
    let e7_start = Instant::now();
    ensure(hilb_set(&rs(Family::E, 7)) == fundamentals(7), "E7 basis is not the fundamental weights")?;
    Ok(format!("15 types, {t:?} (E7 {:?})", e7_start.elapsed()))
}

fn criterion_2() -> Check {
    for n in 1..=8 {
        let got = min_multipliers(&rs(Family::A, n));
        ensure(got == type_a_s(n), format!("A{n}: s = {got:?}"))?;
    }
    for n in [5, 7] {
        let mut expected = vec![1; n];
        expected[n - 2] = 2;
        expected[n - 1] = 2;
        ensure(min_multipliers(&rs(Family::D, n)) == expected, format!("D{n} s-vector"))?;
    }
    ensure(min_multipliers(&rs(Family::E, 6)) == vec![3, 1, 3, 1, 3, 3], "E6 s-vector")?;
    Ok("A1..A8, D5, D7, E6".into())
}

type Side = BTreeMap<Vec<i64>, u32>;

fn side(p: &Presentation, m: &GeneratorMonomial) -> Side {
    m.exponents()
        .iter()
        .map(|(&g, &e)| (p.basis().elements()[g].coords().to_vec(), e))
        .collect()
}

fn relation_set(p: &Presentation) -> BTreeSet<BTreeSet<Side>> {
    p.relations()
        .iter()
        .map(|r| [side(p, &r.lhs), side(p, &r.rhs)].into_iter().collect())
        .collect()
}

fn binomial(lhs: &[(&[i64], u32)], rhs: &[(&[i64], u32)]) -> BTreeSet<Side> {
    let to_side = |s: &[(&[i64], u32)]| s.iter().map(|(c, e)| (c.to_vec(), *e)).collect::<Side>();
    [to_side(lhs), to_side(rhs)].into_iter().collect()
}

fn criterion_3() -> Check {
    let a2: BTreeSet<_> = [binomial(&[(&[3, 0], 1), (&[0, 3], 1)], &[(&[1, 1], 3)])].into();
    let d5: BTreeSet<_> =
        [binomial(&[(&[0, 0, 0, 2, 0], 1), (&[0, 0, 0, 0, 2], 1)], &[(&[0, 0, 0, 1, 1], 2)])].into();
    let mu1: &[i64] = &[1, 0, 0, 0, 0, 1];
    let mu3: &[i64] = &[0, 0, 1, 0, 1, 0];
    let nu1: &[i64] = &[3, 0, 0, 0, 0, 0];
    let nu3: &[i64] = &[0, 0, 3, 0, 0, 0];
    let nu5: &[i64] = &[0, 0, 0, 0, 3, 0];
    let nu6: &[i64] = &[0, 0, 0, 0, 0, 3];
    let w13: &[i64] = &[1, 0, 1, 0, 0, 0];
    let w56: &[i64] = &[0, 0, 0, 0, 1, 1];
    let w1_25: &[i64] = &[1, 0, 0, 0, 2, 0];
    let w23_6: &[i64] = &[0, 0, 2, 0, 0, 1];
    let w21_5: &[i64] = &[2, 0, 0, 0, 1, 0];
    let w3_26: &[i64] = &[0, 0, 1, 0, 0, 2];
    let e6: BTreeSet<_> = [
        binomial(&[(nu1, 1), (nu6, 1)], &[(mu1, 3)]),
        binomial(&[(nu3, 1), (nu5, 1)], &[(mu3, 3)]),
        binomial(&[(w13, 1), (w56, 1)], &[(mu1, 1), (mu3, 1)]),
        binomial(&[(w1_25, 1), (w23_6, 1)], &[(mu1, 1), (mu3, 2)]),
        binomial(&[(w21_5, 1), (w3_26, 1)], &[(mu1, 2), (mu3, 1)]),
        binomial(&[(w13, 3)], &[(nu1, 1), (nu3, 1)]),
        binomial(&[(w1_25, 3)], &[(nu1, 1), (nu5, 2)]),
        binomial(&[(w21_5, 3)], &[(nu1, 2), (nu5, 1)]),
    ]
    .into();
    for (f, n, expected) in [(Family::A, 2, a2), (Family::D, 5, d5), (Family::E, 6, e6)] {
        let p = presentation(&rs(f, n)).map_err(|e| e.to_string())?;
        ensure(relation_set(&p) == expected, format!("{f}{n}: relations differ:\n{p}"))?;
    }
    Ok("A2 (1), D5 (1), E6 (8) binomials".into())
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut total = 0;
    let types: Vec<(Family, usize)> = (2..=6).map(|n| (Family::A, n)).chain([(Family::D, 5), (Family::E, 6)]).collect();
    for (f, n) in types {
        let p = presentation(&rs(f, n)).map_err(|e| e.to_string())?;
        for r in p.relations() {
            let l = exponent_weight(p.basis(), &r.lhs).map_err(|e| e.to_string())?;
            let rr = exponent_weight(p.basis(), &r.rhs).map_err(|e| e.to_string())?;
            ensure(l == rr, format!("{f}{n}: {}", p.render_relation(r)))?;
        }
        ensure(verify_relations(&p).all_passed(), format!("{f}{n}: verify_relations failed"))?;
        total += p.relations().len();
    }
    let t = within(start, Duration::from_secs(1), "kernel check")?;
    Ok(format!("{total} relations over A2..A6, D5, E6 in {t:?}"))
}

fn criterion_5() -> Check {
    let mut count = 0;
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 5)] {
        let g = generation_check(&rs(f, n), 4);
        ensure(g.all_factor(), format!("{f}{n}: some element does not factor"))?;
        ensure(g.elements.iter().all(|e| in_monoid(&rs(f, n), &e.weight)), "non-member in report")?;
        count += g.elements.len();
    }
    let g = generation_check(&rs(Family::A, 2), 4);
    let c = g.count_for(&w(&[3, 3])).unwrap_or(0);
    ensure(c >= 2, format!("A2 (3,3) has {c} factorizations"))?;
    Ok(format!("{count} elements factor; A2 (3,3) has {c} factorizations"))
}

fn q(k: i64) -> RationalFunctionQ {
    RationalFunctionQ::q_pow(k)
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let qq = q(1).sub(&q(-1));
    let c = UqElement::term(q(1), 0, 1, 0)
        .add(&UqElement::term(q(-1), 0, -1, 0))
        .add(&UqElement::term(qq.mul(&qq), 1, 0, 1));
    let got = casimir(1, 1).map_err(|e| e.to_string())?;
    ensure(got == c, format!("C = {got}"))?;
    let c2 = c.pow(2).scale(&q(-1)).sub(&UqElement::scalar(q(-1).add(&q(-3))));
    let c3 = c.pow(3).scale(&q(-2)).sub(&c.scale(&RationalFunctionQ::monomial(2, -2).add(&q(-4))));
    let c4 = c
        .pow(4)
        .scale(&q(-3))
        .sub(&c.pow(2).scale(&RationalFunctionQ::monomial(3, -3).add(&q(-5))))
        .add(&UqElement::scalar(q(-3).add(&q(-5))));
    for (k, expected) in [(2, c2), (3, c3), (4, c4)] {
        ensure(casimir(1, k).map_err(|e| e.to_string())? == expected, format!("C^({k}) identity"))?;
    }
    let t = within(start, Duration::from_secs(1), "dim-2 Casimirs")?;
    Ok(format!("C and C^(2..4) identities in {t:?}"))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let gens = [UqElement::e(), UqElement::f(), UqElement::k(), UqElement::k_pow(-1)];
    for m in 0..=4 {
        for k in 1..=3 {
            let c = casimir(m, k).map_err(|e| e.to_string())?;
            for g in &gens {
                ensure(c.commutator(g).is_zero(), format!("[C^({k}), {g}] != 0 for m = {m}"))?;
            }
        }
        let v = simple_module(m);
        ensure(v.check_relations(), format!("m={m}: module relations"))?;
        for r in [check_gamma_intertwines(&v), check_k_intertwining(&v), check_quasi_r_intertwining(&v)] {
            ensure(r.all_passed(), format!("{r}"))?;
        }
    }
    let t = within(start, Duration::from_secs(30), "centrality suite")?;
    Ok(format!("m <= 4, k <= 3 central; Gamma and K identities hold; {t:?}"))
}

fn criterion_8() -> Check {
    let a1 = rs(Family::A, 1);
    for m in 0..=4u32 {
        let h = hc_project(&casimir(m, 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let x = xi_simple(&a1, &w(&[m as i64])).map_err(|e| e.to_string())?;
        ensure(h == x, format!("m={m}: HC {h} vs xi {x}"))?;
        ensure(h.terms().values().all(BigInt::is_positive), "non-positive HC coefficient")?;
        ensure(h.len() == m as usize + 1, "wrong HC support")?;
    }
    Ok("HC image equals xi([L(m)]) for m <= 4".into())
}

fn criterion_9() -> Check {
    let mut checks = 0;
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 5), (Family::E, 6)] {
        let r = character::verify_centre_relations(&rs(f, n), CentreOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.all_passed() && !r.checks.is_empty(), format!("{f}{n}:\n{r}"))?;
        checks += r.checks.len();
    }
    Ok(format!("{checks} relation checks (E6 at exponent level)"))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (f, n) in [(Family::A, 1), (Family::B, 2), (Family::G, 2), (Family::C, 3)] {
        let r = independence_check(&rs(f, n), 4).map_err(|e| e.to_string())?;
        ensure(r.independent(), format!("{f}{n}: rank {} of {}", r.rank, r.monomials))?;
        parts.push(format!("{f}{n} {}/{}", r.rank, r.monomials));
    }
    let t = within(start, Duration::from_secs(30), "independence")?;
    Ok(format!("{} in {t:?}", parts.join(", ")))
}

fn criterion_11() -> Check {
    let r = unitriangularity_check(&rs(Family::A, 2), 3).map_err(|e| e.to_string())?;
    ensure(r.all_ok(), "some T(lambda) is not unitriangular")?;
    let d = r.get(&w(&[1, 1])).ok_or("missing (1,1)")?;
    ensure(d.multiplicity(&w(&[1, 1])) == 1, "diagonal of (1,1)")?;
    ensure(d.multiplicity(&w(&[0, 0])) == 1, "trivial multiplicity in T(1,1)")?;
    Ok(format!("{} decompositions over A2, coords <= 3", r.decompositions.len()))
}

fn criterion_12() -> Check {
    let mut agree = 0;
    for n in 1..=5 {
        let a = rs(Family::A, n);
        for l in dominant_box(n, 6) {
            ensure(type_a_membership(&a, &l).map_err(|e| e.to_string())? == in_monoid(&a, &l), format!("A{n} {l:?}"))?;
            agree += 1;
        }
    }
    let mut types: Vec<(Family, usize)> = (1..=5).map(|n| (Family::A, n)).collect();
    types.extend((2..=5).map(|n| (Family::B, n)));
    types.extend((3..=5).map(|n| (Family::C, n)));
    types.extend([(Family::D, 4), (Family::D, 5), (Family::G, 2), (Family::F, 4)]);
    for (f, n) in &types {
        let r = rs(*f, *n);
        let bound = min_multipliers(&r).into_iter().max().unwrap() + 2;
        ensure(brute_force_hilbert(&r, bound) == hilb_set(&r), format!("{f}{n}: brute-force basis differs"))?;
        let class = hilbert_basis(&r).class();
        ensure((class == TypeClass::TypeI) == (hilb_set(&r) == fundamentals(*n)), format!("{f}{n}: class"))?;
    }
    let tables = global_cache().tables();
    for t in &tables {
        let r = rs(t.family, t.rank);
        let d = t.dimension(&r).map_err(|e| e.to_string())?;
        ensure(BigInt::from(d) == weyl_dimension(&r, &t.highest), format!("{}{} {:?}", t.family, t.rank, t.highest))?;
    }
    ensure(!tables.is_empty(), "no characters were computed")?;
    Ok(format!(
        "{agree} type-A memberships, {} brute-force bases, {} character dimensions",
        types.len(),
        tables.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("Hilbert-basis golden sets", criterion_1),
        ("s-vector closed form", criterion_2),
        ("presentation golden binomials", criterion_3),
        ("relations lie in ker phi", criterion_4),
        ("generation by the Hilbert basis", criterion_5),
        ("dim-2 Casimir and C^(k) identities", criterion_6),
        ("centrality suite", criterion_7),
        ("Harish-Chandra consistency", criterion_8),
        ("centre relations on characters", criterion_9),
        ("algebraic independence", criterion_10),
        ("unitriangularity", criterion_11),
        ("oracle cross-checks", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
