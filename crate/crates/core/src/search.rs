//! Exhaustive enumeration of primitive integer-median triangles, and
//! coverage of the parametric family against it.

use std::collections::BTreeMap;

use num_integer::Integer as _;
use rayon::prelude::*;

use crate::arith::{is_perfect_square_u64, Integer};
use crate::construction::{construct, Parameters, Route};
use crate::error::{Error, Result};
use crate::triangle::{MedianTriangle, Sextuple};

/// Largest supported bound. Keeps `2a² + 2b²` well inside `u64`.
pub const MAX_HALF_SIDE: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBound(u64);

impl SearchBound {
    pub fn new(max_half_side: u64) -> Result<Self> {
        if max_half_side == 0 {
            return Err(Error::InvalidBound("max half-side must be >= 1".into()));
        }
        if max_half_side > MAX_HALF_SIDE {
            return Err(Error::InvalidBound(format!("max half-side {max_half_side} exceeds {MAX_HALF_SIDE}")));
        }
        Ok(SearchBound(max_half_side))
    }

    pub fn max_half_side(self) -> u64 {
        self.0
    }
}

/// Triangles with outer half-side `a`, in `(b, c)` order.
fn scan_row(a: u64, bound: u64) -> Vec<MedianTriangle> {
    let mut out = Vec::new();
    let aa = a * a;
    for b in a..=bound {
        let bb = b * b;
        let two_ab = 2 * (aa + bb);
        // strict triangle inequality: c < a + b
        let c_max = bound.min(a + b - 1);
        for c in b..=c_max {
            let cc = c * c;
            // z² = 2a² + 2b² − c² is the cheapest: no further additions.
            let Some(z) = is_perfect_square_u64(two_ab - cc) else { continue };
            let Some(y) = is_perfect_square_u64(2 * (cc + aa) - bb) else { continue };
            let Some(x) = is_perfect_square_u64(2 * (bb + cc) - aa) else { continue };
            let g = [b, c, x, y, z].iter().fold(a, |acc, v| acc.gcd(v));
            if g != 1 {
                continue;
            }
            let s = Sextuple::new(a, b, c, x, y, z);
            out.push(MedianTriangle::new(s).expect("identities checked above"));
        }
    }
    out
}

/// Every primitive median triangle with `a ≤ b ≤ c ≤ bound`, sorted by
/// `(a, b, c)`. Parallel over `a`; the output does not depend on the number
/// of worker threads.
pub fn enumerate(bound: SearchBound) -> Vec<MedianTriangle> {
    let n = bound.0;
    (1..=n).into_par_iter().flat_map_iter(|a| scan_row(a, n)).collect()
}

/// An oracle triangle reached by the construction, with every `(f, g)` that
/// reaches it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageHit {
    pub triangle: MedianTriangle,
    pub provenance: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub bound: u64,
    pub f_max: u64,
    pub g_max: u64,
    pub oracle_count: usize,
    pub euler_hits: Vec<CoverageHit>,
    pub euler_misses: Vec<MedianTriangle>,
    /// Valid constructions whose largest half-side exceeds the bound.
    pub beyond_bound: usize,
    /// Valid constructions within the bound that the oracle did not list.
    /// Always empty unless one side has a bug.
    pub unmatched: Vec<CoverageHit>,
}

/// A grid point and, when valid, its canonical triangle.
pub type GridEntry = ((u64, u64), Option<MedianTriangle>);

/// Canonical primitive triangle reached from each `(f, g)` in the grid, in
/// f-major order.
pub fn construct_grid(f_max: u64, g_max: u64, route: Route) -> Result<Vec<GridEntry>> {
    let pairs: Vec<(u64, u64)> = (1..=f_max).flat_map(|f| (1..=g_max).map(move |g| (f, g))).collect();
    pairs
        .into_par_iter()
        .map(|(f, g)| {
            let out = construct(&Parameters::new(f, g)?, route)?;
            Ok(((f, g), out.triangle.map(|t| t.canonical())))
        })
        .collect()
}

pub fn coverage(bound: SearchBound, f_max: u64, g_max: u64) -> Result<CoverageReport> {
    if f_max == 0 || g_max == 0 {
        return Err(Error::InvalidParameters("f_max and g_max must be >= 1".into()));
    }
    let oracle = enumerate(bound);
    let limit = Integer::from(bound.0);

    let mut reached: BTreeMap<MedianTriangle, Vec<(u64, u64)>> = BTreeMap::new();
    let mut beyond_bound = 0;
    for (fg, tri) in construct_grid(f_max, g_max, Route::RationalPipeline)? {
        let Some(t) = tri else { continue };
        if *t.max_half_side() > limit {
            beyond_bound += 1;
            continue;
        }
        reached.entry(t).or_default().push(fg);
    }

    let mut euler_hits = Vec::new();
    let mut euler_misses = Vec::new();
    for t in &oracle {
        match reached.remove(t) {
            Some(provenance) => euler_hits.push(CoverageHit { triangle: t.clone(), provenance }),
            None => euler_misses.push(t.clone()),
        }
    }
    let unmatched = reached.into_iter().map(|(triangle, provenance)| CoverageHit { triangle, provenance }).collect();

    Ok(CoverageReport {
        bound: bound.0,
        f_max,
        g_max,
        oracle_count: oracle.len(),
        euler_hits,
        euler_misses,
        beyond_bound,
        unmatched,
    })
}
