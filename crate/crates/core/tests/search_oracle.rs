use std::collections::HashMap;

use euler_medians::construction::{construct, Parameters, Route};
use euler_medians::search::{coverage, enumerate, SearchBound};
use euler_medians::triangle::{dual, verify, MedianTriangle};
use euler_medians::Integer;

/// Direct triple loop over every (a, b, c) in [1, n]³, no pruning and no
/// shared code with the search module. Squares are looked up in a table.
fn naive(n: i64) -> Vec<[i64; 6]> {
    let roots: HashMap<i64, i64> = (0..=3 * n).map(|r| (r * r, r)).collect();
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let x = roots.get(&(2 * b * b + 2 * c * c - a * a));
                let y = roots.get(&(2 * c * c + 2 * a * a - b * b));
                let z = roots.get(&(2 * a * a + 2 * b * b - c * c));
                let (Some(&x), Some(&y), Some(&z)) = (x, y, z) else { continue };
                let ordered = a <= b && b <= c;
                let triangle = c < a + b;
                let g = [b, c, x, y, z].into_iter().fold(a, gcd);
                if ordered && triangle && g == 1 {
                    out.push([a, b, c, x, y, z]);
                }
            }
        }
    }
    out
}

fn listed(bound: u64) -> Vec<[i64; 6]> {
    enumerate(SearchBound::new(bound).unwrap())
        .iter()
        .map(|t| {
            let v: Vec<i64> = t.sextuple().iter().map(|v| i64::try_from(v).unwrap()).collect();
            v.try_into().unwrap()
        })
        .collect()
}

#[test]
fn matches_naive_enumeration() {
    let reference = naive(160);
    assert!(reference.contains(&[68, 85, 87, 158, 131, 127]));
    assert!(reference.contains(&[127, 131, 158, 261, 255, 204]));
    for bound in [1, 10, 30, 60, 87, 100, 157, 158, 160] {
        let expected: Vec<_> = reference.iter().filter(|t| t[2] <= bound as i64).copied().collect();
        assert_eq!(listed(bound), expected, "bound {bound}");
    }
}

#[test]
fn enumerated_triangles_are_sound() {
    for t in enumerate(SearchBound::new(400).unwrap()) {
        let r = verify(t.sextuple());
        assert!(r.all_pass() && r.primitive, "{t}: {r}");
        assert!(t.is_canonical());
    }
}

#[test]
fn closed_under_duality() {
    let bound = 400u64;
    let list = enumerate(SearchBound::new(bound).unwrap());
    for t in &list {
        let d = dual(t).unwrap().canonical();
        if *d.max_half_side() <= Integer::from(bound) {
            assert!(list.contains(&d), "dual of {t} = {d} missing");
        }
    }
}

#[test]
fn every_small_construction_is_found() {
    let bound = 1000u64;
    let list = enumerate(SearchBound::new(bound).unwrap());
    let mut checked = 0;
    for f in 1..=30u64 {
        for g in 1..=30u64 {
            let out = construct(&Parameters::new(f, g).unwrap(), Route::RationalPipeline).unwrap();
            let Some(t) = out.triangle else { continue };
            let c = t.canonical();
            if *c.max_half_side() <= Integer::from(bound) {
                assert!(list.contains(&c), "(f={f}, g={g}) gives {c}, not listed");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn coverage_reports_provenance() {
    let rep = coverage(SearchBound::new(200).unwrap(), 3, 3).unwrap();
    assert_eq!(rep.oracle_count, rep.euler_hits.len() + rep.euler_misses.len());
    assert!(rep.unmatched.is_empty());
    let small = MedianTriangle::from_values([127, 131, 158, 261, 255, 204]).unwrap();
    let hit = rep.euler_hits.iter().find(|h| h.triangle == small).expect("(127,131,158) hit");
    assert_eq!(hit.provenance, vec![(2, 1)]);

    // (1, 2) reaches the canonical (377, 404, 619) triangle, beyond 200.
    let rep = coverage(SearchBound::new(700).unwrap(), 3, 3).unwrap();
    let big = MedianTriangle::from_values([377, 404, 619, 975, 942, 477]).unwrap();
    let hit = rep.euler_hits.iter().find(|h| h.triangle == big).expect("(377,404,619) hit");
    assert_eq!(hit.provenance, vec![(1, 2)]);
}

#[test]
fn output_independent_of_worker_count() {
    let bound = SearchBound::new(300).unwrap();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| enumerate(bound));
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| enumerate(bound));
    assert_eq!(one, four);
}
