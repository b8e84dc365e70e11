//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use csalg::algebra::{
    direct_product, group_algebra, matrix_algebra, tensor_product, upper_triangular, zero_product_algebra, FiniteGroup,
};
use csalg::linalg::Subspace;
use csalg::maps::{
    cubic_condition_check, derivation_space, jordan_derivation_space, jordan_homomorphism_check, local_derivation_test,
    local_inner_automorphism_test, multiplicativity_check, theorem31_hypothesis_space, verify_theorem31,
    verify_theorem41, LinearMap, LocalDerivationOutcome, Multiplicativity, SimilarityOutcome, Verdict,
};
use csalg::random::{random_element, random_invertible, random_vector, rng_from_seed};
use csalg::structure::{
    has_nondegenerate_trace, is_commutator_simple, is_nondegenerate_trace, largest_ideal_within, power_chain, radical,
    trace_functional_space, CommutatorSimplicity, TraceFunctional, TraceSearch,
};
use csalg::{Element, FinAlgebra, Rational};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Name, algebra, and known ideals given by spanning vectors.
type IdealCase = (&'static str, FinAlgebra, Vec<Vec<Vec<Rational>>>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn m(n: usize) -> FinAlgebra {
    matrix_algebra(n).unwrap()
}

fn qg(g: &FiniteGroup) -> FinAlgebra {
    group_algebra(g).unwrap()
}

fn c2() -> FiniteGroup {
    FiniteGroup::cyclic(2).unwrap()
}

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric(3).unwrap()
}

fn d4() -> FiniteGroup {
    FiniteGroup::dihedral(4).unwrap()
}

fn m2_x_qc2() -> FinAlgebra {
    direct_product(&m(2), &qg(&c2())).unwrap()
}

fn m2_t_qc2() -> FinAlgebra {
    tensor_product(&m(2), &qg(&c2())).unwrap()
}

/// The seven families that should be commutator-simple, each with a trace
/// functional written down by hand: the matrix trace, the coefficient of
/// the identity, and their sums and products on the composites.
fn simple_families() -> Vec<(&'static str, FinAlgebra, Vec<Rational>)> {
    let matrix_trace = |n: usize| {
        (0..n * n)
            .map(|k| if k % (n + 1) == 0 { q(1) } else { q(0) })
            .collect::<Vec<_>>()
    };
    let identity_coeff = |order: usize| unit(order, 0);
    let mut sum_trace = matrix_trace(2);
    sum_trace.extend(identity_coeff(2));
    // e_pq ⊗ g at index (2p + q)·2 + g
    let tensor_trace = (0..8).map(|k| if k == 0 || k == 6 { q(1) } else { q(0) }).collect();
    vec![
        ("M2", m(2), matrix_trace(2)),
        ("M3", m(3), matrix_trace(3)),
        ("Q[C2]", qg(&c2()), identity_coeff(2)),
        ("Q[S3]", qg(&s3()), identity_coeff(6)),
        ("Q[D4]", qg(&d4()), identity_coeff(8)),
        ("M2xQ[C2]", m2_x_qc2(), sum_trace),
        ("M2⊗Q[C2]", m2_t_qc2(), tensor_trace),
    ]
}

/// Oracle: `τ` is tracial on basis pairs and its Gram matrix is invertible.
fn hand_trace_nondegenerate(a: &FinAlgebra, tau: &[Rational]) -> bool {
    let n = a.dim();
    let val = |v: Vec<Rational>| v.iter().zip(tau).fold(q(0), |acc, (x, t)| acc + x * t);
    let gram: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| val(product(a, &unit(n, i), &unit(n, j)))).collect())
        .collect();
    let tracial = (0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i]));
    tracial && !num_traits::Zero::is_zero(&det(&gram))
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    for (name, a, tau) in simple_families() {
        // a nondegenerate trace kills [A,A] and so rules out ideals inside it
        ensure(hand_trace_nondegenerate(&a, &tau), || {
            format!("oracle trace degenerate on {name}")
        })?;
        ensure(is_commutator_simple(&a).holds(), || {
            format!("{name} not reported commutator-simple")
        })?;
    }
    for n in 2..=3 {
        let t = upper_triangular(n).unwrap();
        let CommutatorSimplicity::NotSimple(w) = is_commutator_simple(&t) else {
            return Err(format!("T{n} reported commutator-simple"));
        };
        let comm = commutators(&t);
        ensure(!w.ideal.is_zero(), || format!("T{n}: empty witness"))?;
        ensure(is_ideal(&t, w.ideal.basis()), || {
            format!("T{n}: witness is not an ideal")
        })?;
        ensure(w.ideal.basis().iter().all(|v| comm.contains(v)), || {
            format!("T{n}: witness not inside [A,A]")
        })?;
        // [T_n, T_n] is the strictly upper triangular part, itself an ideal
        ensure(w.ideal.dim() == n * (n - 1) / 2, || {
            format!("T{n}: witness dim {}", w.ideal.dim())
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("7 families simple, T2/T3 witnessed, {:.2?}", elapsed))
}

fn criterion2() -> Outcome {
    let mut algebras = vec![("M2", m(2)), ("M3", m(3))];
    let groups = [("C2", c2()), ("S3", s3()), ("D4", d4())];
    for (name, g) in &groups {
        let a = qg(g);
        let tau = TraceFunctional::from_covector(&a, &unit(a.dim(), g.identity())).map_err(|e| e.to_string())?;
        ensure(is_nondegenerate_trace(&a, &tau), || {
            format!("identity coefficient degenerate on Q[{name}]")
        })?;
        ensure(hand_trace_nondegenerate(&a, tau.coeffs()), || {
            format!("oracle rejects identity trace on Q[{name}]")
        })?;
        algebras.push((name, a));
    }
    for (name, a) in &algebras {
        match has_nondegenerate_trace(a, 0, 32).map_err(|e| e.to_string())? {
            TraceSearch::Found { functional, .. } => ensure(hand_trace_nondegenerate(a, functional.coeffs()), || {
                format!("{name}: returned trace fails the oracle")
            })?,
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    let t2 = upper_triangular(2).unwrap();
    let TraceSearch::DefiniteNegative { common_radical } = has_nondegenerate_trace(&t2, 0, 32).unwrap() else {
        return Err("T2: no definite negative".into());
    };
    ensure(!common_radical.is_zero(), || "T2: empty common radical".into())?;

    let qs3 = qg(&s3());
    let classes = class_count(s3().table());
    let traces = trace_functional_space(&qs3).len();
    let comm = commutators(&qs3).rank();
    ensure(classes == 3 && traces == classes, || {
        format!("trace space dim {traces}, classes {classes}")
    })?;
    ensure(comm == 3 && comm == 6 - classes, || format!("dim [A,A] = {comm}"))?;
    ensure(traces + comm == qs3.dim(), || "rank-nullity mismatch".into())?;
    Ok("traces found on M2, M3, Q[C2], Q[S3], Q[D4]; T2 negative; Q[S3]: 3 + 3 = 6".into())
}

fn criterion3() -> Outcome {
    let qc2_center = class_count(c2().table());
    // Der = Inn for semisimple algebras, and dim Inn = dim A − dim Z(A)
    let cases: Vec<(&str, FinAlgebra, usize)> = vec![
        ("M2", m(2), 3),
        ("M3", m(3), 8),
        ("Q[S3]", qg(&s3()), 6 - class_count(s3().table())),
        ("Q[D4]", qg(&d4()), 8 - class_count(d4().table())),
        ("M2xQ[C2]", m2_x_qc2(), 6 - (1 + qc2_center)),
        ("M2⊗Q[C2]", m2_t_qc2(), 8 - qc2_center),
        ("M4", m(4), 15),
    ];
    let mut summary = Vec::new();
    for (name, a, expected) in cases {
        let start = Instant::now();
        let r = verify_theorem31(&a);
        let elapsed = start.elapsed();
        ensure(!matches!(r.verdict, Verdict::Refutation(_)), || {
            format!("{name}: REFUTATION")
        })?;
        ensure(r.verdict == Verdict::Verified, || {
            format!("{name}: {}", r.verdict.label())
        })?;
        let (h, d) = (r.space("hypothesis"), r.space("derivations"));
        ensure(h == Some(expected) && d == Some(expected), || {
            format!("{name}: H {h:?}, Der {d:?}, want {expected}")
        })?;
        let limit = if a.dim() <= 9 {
            Duration::from_secs(10)
        } else {
            Duration::from_secs(120)
        };
        ensure(elapsed < limit, || format!("{name}: {elapsed:?}"))?;
        summary.push(format!("{name}={expected}"));
    }
    let t2 = verify_theorem31(&upper_triangular(2).unwrap());
    ensure(t2.verdict == Verdict::HypothesesNotMet, || {
        format!("T2: {}", t2.verdict.label())
    })?;
    Ok(format!("verified {}; T2 hypotheses-not-met", summary.join(" ")))
}

fn corpus() -> Vec<(&'static str, FinAlgebra)> {
    vec![
        ("M2", m(2)),
        ("M3", m(3)),
        ("Q[C2]", qg(&c2())),
        ("Q[S3]", qg(&s3())),
        ("Q[D4]", qg(&d4())),
        ("M2xQ[C2]", m2_x_qc2()),
        ("M2⊗Q[C2]", m2_t_qc2()),
        ("T2", upper_triangular(2).unwrap()),
        ("T3", upper_triangular(3).unwrap()),
    ]
}

fn criterion4() -> Outcome {
    let mut rng = rng_from_seed(2024);
    let mut maps = 0;
    let mut samples = 0;
    for (name, a) in corpus() {
        let n = a.dim();
        let hyp = theorem31_hypothesis_space(&a);
        let der = derivation_space(&a);
        let comm = commutators(&a);
        for _ in 0..23 {
            let mm = random_element(&mut rng, n);
            let d = LinearMap::inner_derivation(&a, &mm).map_err(|e| e.to_string())?;
            let ad = |x: &[Rational]| sub(&product(&a, x, mm.coeffs()), &product(&a, mm.coeffs(), x));
            for i in 0..n {
                ensure(
                    d.apply(&Element::basis(n, i)).coeffs() == ad(&unit(n, i)).as_slice(),
                    || format!("{name}: ad_m matrix disagrees with [x, m]"),
                )?;
            }
            ensure(hyp.contains_map(&d), || {
                format!("{name}: ad_m outside the hypothesis space")
            })?;
            ensure(der.contains_map(&d), || format!("{name}: ad_m outside Der"))?;
            for _ in 0..100 {
                let x = random_vector(&mut rng, n);
                let dx = ad(&x);
                let deg2 = product(&a, &dx, &x);
                let deg3 = product(&a, &dx, &product(&a, &x, &x));
                ensure(comm.contains(&deg2) && comm.contains(&deg3), || {
                    format!("{name}: sampled D(x)x ∉ [A,A]")
                })?;
                samples += 1;
            }
            maps += 1;
        }
    }
    ensure(maps >= 200, || format!("only {maps} maps"))?;
    Ok(format!("{maps} inner derivations, {samples} sampled x"))
}

fn criterion5() -> Outcome {
    let mut cases = corpus();
    cases.push(("M2xT2", direct_product(&m(2), &upper_triangular(2).unwrap()).unwrap()));
    cases.push(("Z2", zero_product_algebra(2).unwrap()));
    let mut notes = Vec::new();
    for (name, a) in cases {
        // semisimple by construction: matrix algebras, group algebras in
        // characteristic zero, and their sums and tensor products
        let semiprime_oracle = !matches!(name, "T2" | "T3" | "M2xT2" | "Z2");
        let rad = radical(&a);
        ensure(rad.is_zero() == semiprime_oracle, || {
            format!("{name}: radical dim {}", rad.dim())
        })?;
        let der = derivation_space(&a);
        let jd = jordan_derivation_space(&a);
        ensure(jd.contains(&der), || format!("{name}: Der ⊄ JDer"))?;
        if semiprime_oracle {
            ensure(jd == der, || format!("{name}: JDer {} ≠ Der {}", jd.dim(), der.dim()))?;
        } else {
            notes.push(format!("{name} {}/{}", der.dim(), jd.dim()));
        }
    }
    Ok(format!(
        "equal on semiprime algebras; non-semiprime Der/JDer: {}",
        notes.join(", ")
    ))
}

fn criterion6() -> Outcome {
    for n in 2..=3 {
        let a = m(n);
        let t = LinearMap::transpose(n);
        let mt = |v: &[Rational]| flatten(&transpose(&reshape(v, n)));
        for i in 0..n * n {
            ensure(
                t.apply(&Element::basis(n * n, i)).coeffs() == mt(&unit(n * n, i)).as_slice(),
                || "transpose matrix is wrong".into(),
            )?;
        }
        ensure(cubic_condition_check(&a, &t).unwrap().holds(), || {
            format!("M{n}: cubic condition")
        })?;
        let r = verify_theorem41(&a, &t).unwrap();
        ensure(r.verdict == Verdict::Verified, || {
            format!("M{n}: {}", r.verdict.label())
        })?;
        ensure(jordan_homomorphism_check(&a, &t).unwrap().holds(), || {
            format!("M{n}: Jordan")
        })?;
        let homo = multiplicativity_check(&a, &t, Multiplicativity::Homomorphism).unwrap();
        let w = homo
            .witness()
            .ok_or_else(|| format!("M{n}: transpose reported multiplicative"))?;
        let (x, y) = (reshape(w[0].coeffs(), n), reshape(w[1].coeffs(), n));
        // (xy)ᵀ versus xᵀyᵀ on actual matrices
        let lhs = transpose(&mat_mul(&x, &y));
        let rhs = mat_mul(&transpose(&x), &transpose(&y));
        ensure(lhs != rhs, || format!("M{n}: homomorphism witness does not witness"))?;
        ensure(
            multiplicativity_check(&a, &t, Multiplicativity::Antihomomorphism)
                .unwrap()
                .holds(),
            || format!("M{n}: antihomomorphism"),
        )?;
    }
    let a = m(2);
    let doubling = LinearMap::scalar(4, &q(2));
    let r = verify_theorem41(&a, &doubling).unwrap();
    ensure(r.verdict == Verdict::HypothesesNotMet, || {
        format!("2·id: {}", r.verdict.label())
    })?;
    ensure(r.check("unit-preserving").is_some_and(|c| !c.holds), || {
        "2·id: T(1) = 1 reported".into()
    })?;
    ensure(!cubic_condition_check(&a, &doubling).unwrap().holds(), || {
        "2·id passes cubic condition".into()
    })?;
    Ok("transpose on M2, M3: Jordan, anti, not multiplicative; 2·id rejected".into())
}

fn criterion7() -> Outcome {
    let mut checked = 0;
    for (name, a) in corpus() {
        for d in derivation_space(&a).basis_maps() {
            match local_derivation_test(&a, &d, 7, 10).unwrap() {
                LocalDerivationOutcome::Pass { .. } => checked += 1,
                other => return Err(format!("{name}: basis derivation failed: {other:?}")),
            }
        }
    }
    let a = m(2);
    let one = vec![q(1), q(0), q(0), q(1)];
    let LocalDerivationOutcome::Counterexample { x } =
        local_derivation_test(&a, &LinearMap::identity(4), 7, 10).unwrap()
    else {
        return Err("identity passed the local derivation test".into());
    };
    ensure(x.coeffs() == one.as_slice(), || {
        format!("identity counterexample at {x}, want 1")
    })?;

    let outcomes = local_inner_automorphism_test(&a, &LinearMap::transpose(2), 7, 3, 16).unwrap();
    let e11 = unit(4, 0);
    let e12 = unit(4, 1);
    let at = |target: &dyn Fn(&[Rational]) -> bool, label: &str| -> Result<(), String> {
        let (x, o) = outcomes
            .iter()
            .find(|(x, _)| target(x.coeffs()))
            .ok_or_else(|| format!("{label} not probed"))?;
        let SimilarityOutcome::Witness { u } = o else {
            return Err(format!("transpose at {label}: {o:?}"));
        };
        let (um, xm) = (reshape(u.coeffs(), 2), reshape(x.coeffs(), 2));
        let inv = inverse(&um).ok_or_else(|| format!("{label}: u singular"))?;
        ensure(mat_mul(&mat_mul(&um, &xm), &inv) == transpose(&xm), || {
            format!("{label}: u x u⁻¹ ≠ xᵀ")
        })
    };
    at(&|c| c == e12.as_slice(), "e12")?;
    at(&|c| c == e11.as_slice(), "e11")?;
    let is_basis_or_unit = |c: &[Rational]| c == one.as_slice() || (0..4).any(|i| c == unit(4, i).as_slice());
    at(&|c| !is_basis_or_unit(c), "random x")?;

    let doubling = local_inner_automorphism_test(&a, &LinearMap::scalar(4, &q(2)), 7, 3, 16).unwrap();
    let (_, o) = doubling
        .iter()
        .find(|(x, _)| x.coeffs() == one.as_slice())
        .ok_or("2·id: unit not probed")?;
    // u·1 = 2·1·u forces u = 0
    ensure(*o == SimilarityOutcome::Infeasible, || format!("2·id at 1: {o:?}"))?;
    Ok(format!(
        "{checked} basis derivations local; identity fails at 1; transpose similar; 2·id infeasible at 1"
    ))
}

/// Known ideals of a base algebra, in its own coordinates.
fn ideal_bases() -> Vec<IdealCase> {
    let sign: Vec<Rational> = [1, -1, -1, 1, 1, -1].iter().map(|&s| q(s)).collect();
    vec![
        ("T2", upper_triangular(2).unwrap(), vec![vec![unit(3, 1)]]),
        (
            "T3",
            upper_triangular(3).unwrap(),
            vec![vec![unit(6, 1), unit(6, 2), unit(6, 4)], vec![unit(6, 2)]],
        ),
        (
            "M2xQ[C2]",
            m2_x_qc2(),
            vec![
                (0..4).map(|i| unit(6, i)).collect(),
                vec![unit(6, 4), unit(6, 5)],
                vec![add(&unit(6, 4), &unit(6, 5))],
            ],
        ),
        ("Q[S3]", qg(&s3()), vec![vec![vec![q(1); 6]], vec![sign]]),
        (
            "M2xT2",
            direct_product(&m(2), &upper_triangular(2).unwrap()).unwrap(),
            vec![(0..4).map(|i| unit(7, i)).collect(), vec![unit(7, 5)]],
        ),
        (
            "Z3",
            zero_product_algebra(3).unwrap(),
            vec![vec![unit(3, 0)], vec![add(&unit(3, 1), &unit(3, 2))]],
        ),
    ]
}

fn criterion8() -> Outcome {
    let bases = ideal_bases();
    for (name, a, ideals) in &bases {
        for j in ideals {
            ensure(is_ideal(a, j), || format!("oracle ideal on {name} is not an ideal"))?;
        }
    }
    let mut rng = rng_from_seed(88);
    for trial in 0..100 {
        let (name, base, ideals) = &bases[trial % bases.len()];
        let n = base.dim();
        let p = random_invertible(&mut rng, n);
        let a = base.change_basis(&p).map_err(|e| e.to_string())?;
        let p_rows: Vec<Vec<Rational>> = (0..n).map(|r| p.row(r).to_vec()).collect();
        let p_inv = inverse(&p_rows).ok_or("oracle: P singular")?;
        let injected: Vec<Vec<Vec<Rational>>> = ideals
            .iter()
            .filter(|_| rng.gen_bool(0.7))
            .map(|j| j.iter().map(|v| mat_vec(&p_inv, v)).collect())
            .collect();
        let mut gens: Vec<Vec<Rational>> = injected.iter().flatten().cloned().collect();
        for _ in 0..rng.gen_range(0..=2) {
            gens.push(random_vector(&mut rng, n));
        }
        let v = Subspace::span(n, gens.clone());
        let l = largest_ideal_within(&a, &v).map_err(|e| e.to_string())?;
        let v_oracle = Echelon::of(gens);
        let l_oracle = Echelon::of(l.basis().iter().cloned());
        ensure(is_ideal(&a, l.basis()), || {
            format!("trial {trial} ({name}): output not an ideal")
        })?;
        ensure(l.basis().iter().all(|x| v_oracle.contains(x)), || {
            format!("trial {trial} ({name}): output ⊄ V")
        })?;
        ensure(injected.iter().flatten().all(|x| l_oracle.contains(x)), || {
            format!("trial {trial} ({name}): injected ideal missing")
        })?;

        let rad = radical(&a);
        ensure(is_ideal(&a, rad.basis()), || {
            format!("trial {trial}: radical not an ideal")
        })?;
        let chain = power_chain(&a, &rad);
        ensure(
            chain.last().is_some_and(Subspace::is_zero) && chain.len() - 1 <= n,
            || {
                format!(
                    "trial {trial} ({name}): radical chain {:?}",
                    chain.iter().map(Subspace::dim).collect::<Vec<_>>()
                )
            },
        )?;
        // independent powers of the radical
        let mut power: Vec<Vec<Rational>> = rad.basis().to_vec();
        let mut steps = 0;
        while !power.is_empty() {
            let next = Echelon::of(
                rad.basis()
                    .iter()
                    .flat_map(|r| power.iter().map(|s| product(&a, r, s)))
                    .collect::<Vec<_>>(),
            );
            power = next.rows();
            steps += 1;
            ensure(steps <= n, || {
                format!("trial {trial} ({name}): radical not nilpotent within dim")
            })?;
        }
        if !rad.is_full() {
            let quotient = a.quotient(&rad).map_err(|e| e.to_string())?;
            ensure(radical(&quotient).is_zero(), || {
                format!("trial {trial} ({name}): rad(A/rad A) ≠ 0")
            })?;
        }
    }
    Ok("100 random basis-changed algebras: ideals, radical chains and quotients check out".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("commutator-simplicity of the families", criterion1),
        ("trace route", criterion2),
        ("hypothesis space equals derivations", criterion3),
        ("inner derivations in the hypothesis space", criterion4),
        ("Jordan derivations on semiprime algebras", criterion5),
        ("transpose and the Jordan criterion", criterion6),
        ("local derivations and local inner automorphisms", criterion7),
        ("largest ideals and radicals", criterion8),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {title} [{secs:.2}s] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title} [{secs:.2}s] {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
