//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use euler_medians::arith::{gcd, is_perfect_square, Integer, Rational};
use euler_medians::construction::{
    compute_mn, compute_pq_rational, construct, integerize, Classification, Parameters, Route,
};
use euler_medians::search::{enumerate, SearchBound};
use euler_medians::triangle::{dual, dual_identities_hold, normalize, similar, verify, MedianTriangle, Sextuple};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(f: u64, g: u64) -> Parameters {
    Parameters::new(f, g).unwrap()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn int(n: i64) -> Integer {
    Integer::from(n)
}

fn tri(v: [i64; 6]) -> MedianTriangle {
    MedianTriangle::from_values(v).unwrap()
}

fn sorted_sides(t: &MedianTriangle) -> [Integer; 3] {
    let mut s = t.sides();
    s.sort();
    s
}

fn c1_golden_2_1() -> Check {
    let out = construct(&params(2, 1), Route::RationalPipeline).map_err(|e| e.to_string())?;
    let tr = &out.trace;
    ensure(tr.m == r(1, 4) && tr.n == r(11, 16), || format!("m, n = {}, {}", tr.m, tr.n))?;
    ensure(tr.p_rat == Some(r(15, 4)) && tr.q_rat == Some(r(-975, 256)), || {
        format!("rational p, q = {:?}, {:?}", tr.p_rat, tr.q_rat)
    })?;
    ensure(tr.p == int(64) && tr.q == int(-65), || format!("p, q = {}, {}", tr.p, tr.q))?;
    let expected = tri([131, 127, 158, 255, 261, 204]);
    ensure(out.triangle.as_ref() == Some(&expected), || format!("triangle {:?}", out.triangle))?;
    ensure(expected.is_primitive(), || "not primitive".into())
}

fn c2_golden_1_2() -> Check {
    let cf = construct(&params(1, 2), Route::ClosedForm).map_err(|e| e.to_string())?;
    let tr = &cf.trace;
    ensure(tr.p == int(-64) && tr.q == int(185) && tr.t == r(-101, 1) && tr.u == r(-471, 1), || {
        format!("p, q, t, u = {}, {}, {}, {}", tr.p, tr.q, tr.t, tr.u)
    })?;
    let expected = tri([619, 377, 404, 477, 975, 942]);
    ensure(cf.triangle.as_ref() == Some(&expected), || format!("closed form gave {:?}", cf.triangle))?;
    let rp = construct(&params(1, 2), Route::RationalPipeline).map_err(|e| e.to_string())?;
    ensure(rp.triangle == cf.triangle, || format!("pipeline gave {:?}", rp.triangle))
}

fn c3_duality() -> Check {
    let t11 = tri([131, 127, 158, 255, 261, 204]);
    let d11 = dual(&t11).map_err(|e| e.to_string())?;
    ensure(sorted_sides(&d11) == [136, 170, 174].map(Integer::from), || format!("dual(§11) = {d11}"))?;

    let t16 = tri([619, 377, 404, 477, 975, 942]);
    let d16 = dual(&t16).map_err(|e| e.to_string())?;
    ensure(d16 == tri([159, 325, 314, 619, 377, 404]), || format!("dual(§16) = {d16}"))?;

    for t in [&t11, &t16] {
        let dd = dual(&dual(t).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(similar(&dd, t), || format!("dual∘dual({t}) = {dd}"))?;
    }
    Ok(())
}

/// Coprime (f, g) in [1, 30]², excluding f = g and f = 3g.
fn sweep_pairs() -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for f in 1..=30u64 {
        for g in 1..=30u64 {
            if f != g && f != 3 * g && gcd(&int(f as i64), &int(g as i64)) == int(1) {
                v.push((f, g));
            }
        }
    }
    v
}

fn sweep_valid_triangles() -> Result<Vec<MedianTriangle>, String> {
    let mut valid = Vec::new();
    for (f, g) in sweep_pairs() {
        let p = params(f, g);
        let a = construct(&p, Route::RationalPipeline).map_err(|e| format!("({f},{g}): {e}"))?;
        let b = construct(&p, Route::ClosedForm).map_err(|e| format!("({f},{g}): {e}"))?;
        ensure(a.classification == b.classification, || {
            format!("({f},{g}): {} vs {}", a.classification, b.classification)
        })?;
        ensure(a.triangle == b.triangle, || format!("({f},{g}): {:?} vs {:?}", a.triangle, b.triangle))?;
        if let Some(t) = a.triangle {
            valid.push(t);
        }
    }
    Ok(valid)
}

fn c4_route_equivalence() -> Check {
    let start = Instant::now();
    let valid = sweep_valid_triangles()?;
    ensure(!valid.is_empty(), || "no valid triangles in sweep".into())?;
    let sq = |v: &Integer| v * v;
    for t in &valid {
        let s = t.sextuple();
        let rep = verify(s);
        ensure(rep.all_pass() && rep.primitive, || format!("{t}: {rep}"))?;
        // §2, recomputed here
        ensure(sq(&s.x) - sq(&s.y) == (sq(&s.b) - sq(&s.a)) * 3u32, || format!("{t}: I"))?;
        ensure(sq(&s.x) + sq(&s.y) == sq(&s.c) * 4u32 + sq(&s.a) + sq(&s.b), || format!("{t}: II"))?;
        ensure(sq(&s.z) == sq(&s.a) * 2u32 + sq(&s.b) * 2u32 - sq(&s.c), || format!("{t}: III"))?;
        ensure(dual_identities_hold(s), || format!("{t}: duality identities"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))
}

fn c5_oracle() -> Check {
    let start = Instant::now();
    let list = enumerate(SearchBound::new(200).unwrap());
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    for v in [[68, 85, 87, 158, 131, 127], [127, 131, 158, 261, 255, 204], [159, 314, 325, 619, 404, 377]] {
        let t = tri(v);
        if !list.contains(&t) {
            let max = u64::try_from(t.max_half_side()).unwrap();
            let found_at_max = enumerate(SearchBound::new(max).unwrap()).contains(&t);
            problems.push(format!(
                "({}, {}, {}) not in enumerate(200); its max half-side is {max} (listed at bound {max}: {found_at_max})",
                v[0], v[1], v[2]
            ));
        }
    }
    if !enumerate(SearchBound::new(10).unwrap()).is_empty() {
        problems.push("enumerate(10) not empty".into());
    }
    let bound = Integer::from(200);
    for t in sweep_valid_triangles()? {
        let c = t.canonical();
        if *c.max_half_side() <= bound && !list.contains(&c) {
            problems.push(format!("sweep triangle {c} missing from oracle"));
        }
    }
    if elapsed >= Duration::from_secs(60) {
        problems.push(format!("enumerate(200) took {elapsed:?}"));
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn run_prop<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Check {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn frac() -> impl Strategy<Value = (i64, i64)> {
    (-10_000i64..=10_000, prop_oneof![-10_000i64..=-1, 1i64..=10_000])
}

/// A small triangle from the family, sampled through its parameters.
fn family_triangle() -> impl Strategy<Value = MedianTriangle> {
    (1u64..=25, 1u64..=25)
        .prop_filter_map("degenerate", |(f, g)| construct(&params(f, g), Route::ClosedForm).unwrap().triangle)
}

fn c6_properties() -> Check {
    const CASES: u32 = 10_000;
    let cross = |n: &Integer, d: &Integer, r: &Rational| r.numerator() * d == r.denominator() * n;

    run_prop(CASES, (frac(), frac(), frac()), |((an, ad), (bn, bd), (cn, cd))| {
        let (a, b, c) = (r(an, ad), r(bn, bd), r(cn, cd));
        let (an, ad, bn, bd) = (int(an), int(ad), int(bn), int(bd));
        prop_assert!(cross(&(&an * &bd + &bn * &ad), &(&ad * &bd), &(&a + &b)));
        prop_assert!(cross(&(&an * &bd - &bn * &ad), &(&ad * &bd), &(&a - &b)));
        prop_assert!(cross(&(&an * &bn), &(&ad * &bd), &(&a * &b)));
        if !b.is_zero() {
            prop_assert!(cross(&(&an * &bd), &(&ad * &bn), &a.checked_div(&b).unwrap()));
        }
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        Ok(())
    })
    .map_err(|e| format!("field laws: {e}"))?;

    run_prop(CASES, (0u64..u64::MAX, 1u64..=1_000_000), |(n, k)| {
        let n = Integer::from(n);
        prop_assert_eq!(is_perfect_square(&(&n * &n)), Some(n.clone()));
        // n² < n² + k < (n+1)² for 1 ≤ k ≤ 2n
        if Integer::from(k) <= &n * 2u32 {
            prop_assert_eq!(is_perfect_square(&(&n * &n + k)), None);
        }
        Ok(())
    })
    .map_err(|e| format!("perfect squares: {e}"))?;

    run_prop(CASES, (family_triangle(), 1u64..=10_000), |(t, k)| {
        let n = normalize(t.sextuple()).unwrap();
        prop_assert_eq!(normalize(n.sextuple()).unwrap(), n.clone());
        let scaled: Sextuple = t.sextuple().scale(&Integer::from(k));
        prop_assert!(verify(&scaled).all_pass());
        prop_assert_eq!(normalize(&scaled).unwrap(), n);
        Ok(())
    })
    .map_err(|e| format!("normalize/scaling: {e}"))?;

    run_prop(CASES, (1u64..=1000, 1u64..=1000), |(f, g)| {
        let (m, n) = compute_mn(&params(f, g));
        let (f, g) = (Integer::from(f), Integer::from(g));
        let (ff, gg) = (&f * &f, &g * &g);
        let scale = Rational::from(&ff * &gg * 4u32);
        prop_assert_eq!(&scale * &(&m + &n), Rational::from(-((&gg - &ff) * (&gg * 9u32 - &ff))));
        prop_assert_eq!(&scale * &(&m - &n), Rational::from((&gg * 3u32 + &ff) * (&gg * 3u32 - &ff)));
        Ok(())
    })
    .map_err(|e| format!("factorizations: {e}"))
}

fn c7_degeneracy() -> Check {
    for g in 1..=20u64 {
        for f in [g, 3 * g] {
            if f > 20 {
                continue;
            }
            for route in [Route::RationalPipeline, Route::ClosedForm] {
                let p = params(f, g);
                let out = std::panic::catch_unwind(|| construct(&p, route))
                    .map_err(|_| format!("({f},{g}) {route}: panicked"))?
                    .map_err(|e| format!("({f},{g}) {route}: {e}"))?;
                ensure(out.classification == Classification::Degenerate, || {
                    format!("({f},{g}) {route}: {}", out.classification)
                })?;
                ensure(out.triangle.is_none(), || format!("({f},{g}) {route}: emitted a triangle"))?;
            }
        }
    }
    // integerize itself refuses the vanishing ratio rather than inventing one
    let (m, n) = compute_mn(&params(5, 5));
    let (p, q) = compute_pq_rational(&m, &n);
    ensure(integerize(&p, &q).is_err(), || "integerize(0, 0) succeeded".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 golden example (f,g)=(2,1)", c1_golden_2_1),
        ("2 golden example (f,g)=(1,2), both routes", c2_golden_1_2),
        ("3 duality and dual∘dual similarity", c3_duality),
        ("4 route equivalence sweep, 1<=f,g<=30", c4_route_equivalence),
        ("5 oracle cross-check at bound 200", c5_oracle),
        ("6 property suites (10^4 cases each)", c6_properties),
        ("7 degeneracy at f=g and f=3g", c7_degeneracy),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  criterion {name}  ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}  ({:.2?}): {msg}", start.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
