//! Acceptance gate: runs each criterion and prints one PASS/FAIL line.

use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use voacorr::corr::random::{random_insertion_list, random_vector, rng};
use voacorr::corr::wick::{brute_product, wick_product};
use voacorr::corr::{
    corr_check, corr_diagram_sum, corr_closed_form, corr_direct, corr_recursion, diagram_term,
    enum_derangements, enum_diagrams, CheckItem, CheckOptions, Diagram, InsertionList, Side,
    Vertex,
};
use voacorr::exact::{binomial, frac, factorial, rat, CorrFn, DiffExponent, PolyR, Rational};
use voacorr::fock::{Fock, FockState};
use voacorr::jordan::{endo_from_pair, jordan_product, JordanElement, RatMatrix};
use voacorr::lca::{Lca, LcaElement, Quadratic};
use voacorr::superlinear::{make_level_space, make_type_space, tensor, FormedSpace, JType, Vector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- engines

struct Matrix {
    engines: Vec<CheckItem>,
    degree: Vec<CheckItem>,
    permutation: Vec<CheckItem>,
    instances: usize,
}

fn run_matrix() -> Result<Matrix, String> {
    let mut jobs = Vec::new();
    for (ti, jt) in JType::ALL.into_iter().enumerate() {
        for d in 1..=2usize {
            for n in 2..=4usize {
                for i in 0..10u64 {
                    jobs.push((jt, d, n, 1000 * ti as u64 + 100 * d as u64 + 10 * n as u64 + i));
                }
            }
        }
    }
    let reports = jobs
        .par_iter()
        .map(|&(jt, d, n, seed)| {
            let t = random_insertion_list(&mut rng(seed), jt, d, n).map_err(|e| e.to_string())?;
            let opts = CheckOptions {
                permutations: 5,
                seed,
                ..Default::default()
            };
            corr_check(&t, &opts)
                .map(|r| (format!("{jt} d={d} n={n} seed={seed}"), r))
                .map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, String>>()?;
    let mut m = Matrix {
        engines: vec![],
        degree: vec![],
        permutation: vec![],
        instances: reports.len(),
    };
    for (label, rep) in reports {
        for mut item in rep.items {
            item.name = format!("{label}: {}", item.name);
            if item.name.contains("degree") {
                m.degree.push(item);
            } else if item.name.contains("permuted") {
                m.permutation.push(item);
            } else {
                m.engines.push(item);
            }
        }
    }
    Ok(m)
}

fn summarize(items: &[CheckItem], instances: usize) -> Outcome {
    match items.iter().find(|i| !i.pass) {
        None => Ok(format!("{} checks over {instances} insertion lists", items.len())),
        Some(f) => Err(format!("{} (witness: {})", f.name, f.witness.clone().unwrap_or_default())),
    }
}

// ---------------------------------------------------------------- criterion 2

fn criterion_2() -> Outcome {
    let mut g = rng(52);
    let t = loop {
        let t = random_insertion_list(&mut g, JType::B, 3, 4).map_err(|e| e.to_string())?;
        let (sp, e) = (t.space(), t.entries());
        let pairs = [(&e[0].0, &e[3].1), (&e[1].0, &e[0].1), (&e[1].1, &e[2].1), (&e[2].0, &e[3].0)];
        if pairs.iter().all(|(x, y)| !sp.form_eval(x, y).unwrap().is_zero()) {
            break t;
        }
    };
    let v = |pos, side| Vertex { pos, side };
    let d = Diagram {
        edges: vec![
            (v(0, Side::A), v(3, Side::B)),
            (v(0, Side::B), v(1, Side::A)),
            (v(1, Side::B), v(2, Side::B)),
            (v(2, Side::A), v(3, Side::A)),
        ],
    };
    let sp = t.space();
    let e = t.entries();
    let form = |x: &Vector, y: &Vector| sp.form_eval(x, y).unwrap();
    let num = form(&e[0].0, &e[3].1) * form(&e[1].0, &e[0].1) * form(&e[1].1, &e[2].1)
        * form(&e[2].0, &e[3].0);
    let den = DiffExponent::from_triples([(0, 3, 2), (0, 1, 2), (1, 2, 2), (2, 3, 2)]);
    let want = CorrFn::term(4, den, PolyR::monomial(num * frac(1, 16), 1));
    let got = diagram_term(&d, &t).map_err(|e| e.to_string())?;
    ensure(got == want, || format!("got {}, want {}", got, want))?;
    Ok(format!("{got}"))
}

// ---------------------------------------------------------------- criterion 3

fn two_point(c: Rational) -> CorrFn {
    CorrFn::term(2, DiffExponent::from_triples([(0, 1, 4)]), PolyR::monomial(c, 1))
}

fn all_engines_equal(t: &InsertionList, want: &CorrFn) -> Result<(), String> {
    let err = |e: voacorr::Error| e.to_string();
    ensure(corr_closed_form(t).map_err(err)? == *want, || "closed form".into())?;
    ensure(corr_diagram_sum(t).map_err(err)? == *want, || "diagram sum".into())?;
    ensure(corr_recursion(t).map_err(err)? == *want, || "recursion".into())?;
    for r in 1..=3u32 {
        let d = corr_direct(t, r).map_err(err)?;
        ensure(d == want.specialize(&rat(r as i64)), || format!("direct at r={r}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let b = InsertionList::parse(JType::B, 1, &[("e1", "e1"), ("e1", "e1")]).map_err(|e| e.to_string())?;
    all_engines_equal(&b, &two_point(frac(1, 2)))?;
    let a = InsertionList::parse(JType::A, 1, &[("e1", "e1*"), ("e1", "e1*")]).map_err(|e| e.to_string())?;
    all_engines_equal(&a, &two_point(frac(1, 4)))?;
    let mut g = rng(3);
    for _ in 0..5 {
        let t = random_insertion_list(&mut g, JType::A, 2, 2).map_err(|e| e.to_string())?;
        let sp = t.space();
        let ((a1, b1), (a2, b2)) = (&t.entries()[0], &t.entries()[1]);
        let c = sp.form_eval(b1, a2).unwrap() * sp.form_eval(b2, a1).unwrap() * frac(1, 4);
        all_engines_equal(&t, &two_point(c))?;
    }
    Ok("B: r/(2(z1-z2)^4); A: r/(4(z1-z2)^4) and r(b1*,a2)(b2*,a1)/4 on random pairs".into())
}

// ---------------------------------------------------------------- criterion 5

fn random_quadratic(g: &mut ChaCha8Rng, lca: &Lca) -> LcaElement {
    loop {
        let sp = lca.space();
        let a = random_vector(g, sp, false).unwrap();
        let b = random_vector(g, sp, true).unwrap();
        let (m, n) = (g.gen_range(1..=3u32), g.gen_range(1..=3u32));
        if let Ok(q) = lca.quadratic(&a, &b, m, n) {
            let x = lca.element(&q).unwrap();
            if !x.is_zero() {
                return x;
            }
        }
    }
}

fn random_state(g: &mut ChaCha8Rng, fock: &Fock) -> FockState {
    let dim = fock.space().dim();
    let len = g.gen_range(0..=3);
    let factors: Vec<(usize, i32)> = (0..len)
        .map(|_| (g.gen_range(0..dim), -g.gen_range(1..=3)))
        .collect();
    let s = fock.product_state(&factors);
    if s.is_zero() {
        FockState::vacuum()
    } else {
        s
    }
}

fn translate_n(lca: &Lca, x: &LcaElement, j: u32) -> LcaElement {
    (0..j).fold(x.clone(), |acc, _| lca.translation(&acc))
}

/// Full Fock state of an element (the central part becomes the vacuum).
fn as_state(x: &LcaElement) -> FockState {
    let mut s = x.state().clone();
    s.add_term(voacorr::fock::FockMonomial::vacuum(), x.central().clone());
    s
}

fn criterion_5() -> Outcome {
    let err = |e: voacorr::Error| e.to_string();
    let mut checks = 0usize;
    for (ti, jt) in JType::ALL.into_iter().enumerate() {
        let lca = Lca::new(jt, 2).map_err(err)?;
        let mut g = rng(500 + ti as u64);
        for _ in 0..50 {
            let x = random_quadratic(&mut g, &lca);
            let y = random_quadratic(&mut g, &lca);
            let top = x.max_degree() + y.max_degree();
            // sesquilinearity
            let tx = lca.translation(&x);
            for k in 0..=top {
                let lhs = lca.kth_product(&tx, k, &y).map_err(err)?;
                let rhs = if k == 0 {
                    LcaElement::zero()
                } else {
                    lca.kth_product(&x, k - 1, &y).map_err(err)?.scale(&rat(-(k as i64)))
                };
                ensure(lhs == rhs, || format!("{jt}: sesquilinearity at k={k}"))?;
                checks += 1;
            }
            // skew-symmetry
            for k in 0..top {
                let lhs = lca.kth_product(&x, k, &y).map_err(err)?;
                let mut rhs = LcaElement::zero();
                for j in 0..top - k {
                    let p = lca.kth_product(&y, k + j, &x).map_err(err)?;
                    let sign = if (k + j) % 2 == 0 { -1 } else { 1 };
                    let c = frac(sign, 1) / Rational::from_integer(factorial(j as u64));
                    rhs = rhs.add(&translate_n(&lca, &p, j).scale(&c));
                }
                ensure(lhs == rhs, || format!("{jt}: skew-symmetry at k={k}"))?;
                checks += 1;
            }
            // Borcherds commutator formula on a random state
            let fock = lca.fock();
            let (xs, ys) = (x.state(), y.state());
            let s = random_state(&mut g, fock);
            let p = g.gen_range(-3i64..=3);
            let q = g.gen_range(-3i64..=3);
            let lhs = fock
                .nth_product(xs, p, &fock.nth_product(ys, q, &s))
                .sub(&fock.nth_product(ys, q, &fock.nth_product(xs, p, &s)));
            let mut rhs = FockState::zero();
            for k in 0..top {
                let b = binomial(p, k as u64);
                if b.is_zero() {
                    continue;
                }
                let xy = as_state(&lca.kth_product(&x, k, &y).map_err(err)?);
                rhs.add_scaled(&fock.nth_product(&xy, p + q - k as i64, &s), &Rational::from_integer(b));
            }
            ensure(lhs == rhs, || format!("{jt}: commutator formula at p={p}, q={q}"))?;
            checks += 1;
        }
    }

    // quadratic bracket identities, type B with orthonormal a, b
    let sp = Arc::new(make_type_space(JType::B, 2).map_err(err)?);
    let fock = Fock::new(sp.clone());
    let (a, b) = (sp.basis_vector(0), sp.basis_vector(1));
    let p = |x: &Vector, y: &Vector, m: u32, n: u32| fock.quadratic_state(x, m, y, n).unwrap();
    let half = frac(1, 2);
    for m in 1..=4u32 {
        for n in 1..=4u32 {
            let (mr, nr) = (rat(m as i64), rat(n as i64));
            let lhs1 = fock.nth_product(&p(&b, &a, 1, 1), 1, &p(&a, &b, m, n));
            let rhs1 = p(&b, &b, m, n).scale(&mr).add(&p(&a, &a, m, n).scale(&nr));
            let lhs2 = fock.nth_product(&p(&b, &a, 2, 1), 2, &p(&a, &b, m, n));
            let rhs2 = p(&b, &b, m, n)
                .scale(&(&mr * (&mr - Rational::one())))
                .sub(&p(&a, &a, m, n).scale(&(&nr * (&nr + Rational::one()))));
            ensure(lhs1 == rhs1, || format!("first quadratic identity at m={m}, n={n}"))?;
            ensure(lhs2 == rhs2, || format!("second quadratic identity at m={m}, n={n}"))?;
            // with L = a(-m)b(-n)|0>/2 the left side is quadratic in the
            // normalization and the right side linear
            let (l1, r1) = (lhs1.scale(&frac(1, 4)), rhs1.scale(&half));
            let (l2, r2) = (lhs2.scale(&frac(1, 4)), rhs2.scale(&half));
            ensure(l1 == r1.scale(&half) && l2 == r2.scale(&half), || {
                format!("halved quadratic identities at m={m}, n={n}")
            })?;
            checks += 3;
        }
    }
    Ok(format!(
        "{checks} checks; the identities hold verbatim for a(-m)b(-n)|0>, and with the 1/2 normalization up to a factor 1/2"
    ))
}

// ---------------------------------------------------------------- criterion 6

fn to_jordan(lca: &Lca, x: &LcaElement) -> Result<JordanElement, String> {
    let sp = lca.space();
    let size = match lca.jtype() {
        JType::A => sp.dim() / 2,
        _ => sp.dim(),
    };
    let mut m = RatMatrix::zeros(size);
    for (key, c) in lca.quads(x) {
        if key.m != 1 || key.n != 1 {
            return Err(format!("non-generator {key} in a (1)-product"));
        }
        let e = endo_from_pair(sp, &sp.basis_vector(key.a), &sp.basis_vector(key.b))
            .map_err(|e| e.to_string())?;
        m = &m + &e.matrix.scale(&c);
    }
    Ok(JordanElement { matrix: m })
}

fn criterion_6() -> Outcome {
    let err = |e: voacorr::Error| e.to_string();
    let mut count = 0;
    for (ti, jt) in JType::ALL.into_iter().enumerate() {
        for d in 1..=3usize {
            let lca = Lca::new(jt, d).map_err(err)?;
            let sp = lca.space();
            let mut g = rng(600 + 10 * ti as u64 + d as u64);
            let per_rank = if d == 3 { 18 } else { 16 };
            for _ in 0..per_rank {
                let v: Vec<Vector> = (0..4)
                    .map(|i| random_vector(&mut g, sp, i % 2 == 1).unwrap())
                    .collect();
                let gen = |a: &Vector, b: &Vector| {
                    lca.element(&Quadratic { a: a.clone(), b: b.clone(), m: 1, n: 1, jtype: jt })
                };
                let x = gen(&v[0], &v[1]).map_err(err)?;
                let y = gen(&v[2], &v[3]).map_err(err)?;
                let prod = lca.kth_product(&x, 1, &y).map_err(err)?;
                ensure(prod.central().is_zero(), || format!("{jt} d={d}: central term at k=1"))?;
                let lhs = to_jordan(&lca, &prod)?;
                let jx = endo_from_pair(sp, &v[0], &v[1]).map_err(err)?;
                let jy = endo_from_pair(sp, &v[2], &v[3]).map_err(err)?;
                let rhs = jordan_product(&jx, &jy).map_err(err)?;
                ensure(lhs == rhs, || format!("{jt} d={d}: {} vs {}", lhs.matrix, rhs.matrix))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} random quadruples (50 per type over d = 1, 2, 3)"))
}

// ---------------------------------------------------------------- criterion 7

fn criterion_7() -> Outcome {
    let err = |e: voacorr::Error| e.to_string();
    let lca = Lca::new(JType::B, 1).map_err(err)?;
    let e1 = lca.space().basis_vector(0);
    let w = lca.element(&lca.generator(&e1, &e1).map_err(err)?).map_err(err)?;
    let p = |k| lca.kth_product(&w, k, &w).unwrap();
    ensure(p(0) == lca.translation(&w), || "w(0)w != Tw".into())?;
    ensure(p(1) == w.scale(&rat(2)), || "w(1)w != 2w".into())?;
    ensure(p(2).is_zero(), || "w(2)w != 0".into())?;
    ensure(p(3) == LcaElement::central_only(frac(1, 2)), || "w(3)w != r/2".into())?;
    Ok("w(0)w = Tw, w(1)w = 2w, w(2)w = 0, w(3)w = (1/2) r".into())
}

// ---------------------------------------------------------------- criterion 8

fn criterion_8() -> Outcome {
    let der: Vec<usize> = (2..=5).map(|n| enum_derangements(n).len()).collect();
    ensure(der == [1, 2, 9, 44], || format!("derangements {der:?}"))?;
    let bc: Vec<usize> = (2..=3).map(|n| enum_diagrams(n, JType::B).len()).collect();
    ensure(bc == [2, 8], || format!("BC diagrams {bc:?}"))?;
    let c: Vec<usize> = (2..=3).map(|n| enum_diagrams(n, JType::C).len()).collect();
    ensure(c == [2, 8], || format!("type C diagrams {c:?}"))?;
    let a = enum_diagrams(2, JType::A).len();
    ensure(a == 1, || format!("A diagrams {a}"))?;
    Ok("derangements 1, 2, 9, 44; BC diagrams 2, 8; A diagrams 1".into())
}

// ---------------------------------------------------------------- criterion 9

fn big_space(jt: JType, d: usize, r: u32) -> (Arc<FormedSpace>, Fock) {
    let h = make_type_space(jt, d).unwrap();
    let level = make_level_space(r).unwrap();
    let big = Arc::new(tensor(&h, &level));
    (big.clone(), Fock::new(big))
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for (ti, jt) in JType::ALL.into_iter().enumerate() {
        let (big, fock) = big_space(jt, 1, 2);
        let mut g = rng(900 + ti as u64);
        for _ in 0..10 {
            let m = g.gen_range(1..=3usize);
            let n = g.gen_range(1..=3usize);
            let vec_of = |g: &mut ChaCha8Rng| -> Vector {
                loop {
                    let comps: Vec<Rational> = (0..big.dim()).map(|_| frac(g.gen_range(-2..=2), 1)).collect();
                    if comps.iter().any(|c| !c.is_zero()) {
                        return big.vector_from_comps(comps).unwrap();
                    }
                }
            };
            let a: Vec<Vector> = (0..m).map(|_| vec_of(&mut g)).collect();
            let b: Vec<Vector> = (0..n).map(|_| vec_of(&mut g)).collect();
            for k in -2..=(2 * m.min(n) as i64) {
                let w = wick_product(&fock, &a, k, &b).map_err(|e| e.to_string())?;
                let f = brute_product(&fock, &a, k, &b).map_err(|e| e.to_string())?;
                ensure(w == f, || format!("{jt}: m={m}, n={n}, k={k}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} random instances in h (x) h' with r = 2"))
}

// ---------------------------------------------------------------- driver

fn main() {
    let start = Instant::now();
    let matrix = run_matrix();
    let matrix_time = start.elapsed();
    let from_matrix = |pick: fn(&Matrix) -> &Vec<CheckItem>| -> Outcome {
        match &matrix {
            Ok(m) => summarize(pick(m), m.instances),
            Err(e) => Err(e.clone()),
        }
    };
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "four-engine agreement", from_matrix(|m| &m.engines).map(|s| format!("{s} in {:.1?}", matrix_time))),
        (2, "single diagram term", criterion_2()),
        (3, "two-point functions", criterion_3()),
        (4, "degree bound in r", from_matrix(|m| &m.degree)),
        (5, "LCA axioms and quadratic identities", criterion_5()),
        (6, "Griess product = Jordan product", criterion_6()),
        (7, "Virasoro at d = 1", criterion_7()),
        (8, "combinatorial counts", criterion_8()),
        (9, "Wick consistency", criterion_9()),
        (10, "permutation symmetry", from_matrix(|m| &m.permutation)),
    ];
    let mut failed = 0;
    for (i, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {i:>2} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {i:>2} FAIL  {name}: {why}");
            }
        }
    }
    println!("total time {:.1?}", start.elapsed());
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
