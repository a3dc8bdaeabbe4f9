//! Triangles with integer half-sides and integer medians.
//!
//! Half-sides `(a, b, c)` stand for a triangle with sides `2a, 2b, 2c`. The
//! median `x` bisects side `2a`, `y` bisects `2b` and `z` bisects `2c`, so
//!
//! ```text
//! x² = 2b² + 2c² − a²
//! y² = 2c² + 2a² − b²
//! z² = 2a² + 2b² − c²
//! ```

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{gcd_all, Integer};
use crate::error::{Error, Result};

/// Six signed integers `(a, b, c, x, y, z)`: half-sides then medians.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sextuple {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub x: Integer,
    pub y: Integer,
    pub z: Integer,
}

impl Sextuple {
    pub fn new(
        a: impl Into<Integer>,
        b: impl Into<Integer>,
        c: impl Into<Integer>,
        x: impl Into<Integer>,
        y: impl Into<Integer>,
        z: impl Into<Integer>,
    ) -> Self {
        Sextuple { a: a.into(), b: b.into(), c: c.into(), x: x.into(), y: y.into(), z: z.into() }
    }

    pub fn from_array(v: [Integer; 6]) -> Self {
        let [a, b, c, x, y, z] = v;
        Sextuple { a, b, c, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0, 0, 0, 0)
    }

    pub fn to_array(&self) -> [Integer; 6] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Integer> {
        [&self.a, &self.b, &self.c, &self.x, &self.y, &self.z].into_iter()
    }

    pub fn abs(&self) -> Sextuple {
        self.map(|v| v.abs())
    }

    pub fn scale(&self, k: &Integer) -> Sextuple {
        self.map(|v| v * k)
    }

    pub fn gcd(&self) -> Integer {
        gcd_all(self.iter())
    }

    fn map(&self, f: impl Fn(&Integer) -> Integer) -> Sextuple {
        Sextuple { a: f(&self.a), b: f(&self.b), c: f(&self.c), x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }

    /// Divides every entry by the common gcd. The all-zero sextuple is
    /// returned unchanged.
    pub fn reduced(&self) -> Sextuple {
        let g = self.gcd();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.map(|v| v / &g)
    }
}

impl fmt::Display for Sextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {}, {}, {})", self.a, self.b, self.c, self.x, self.y, self.z)
    }
}

/// The three median squares `(2b²+2c²−a², 2c²+2a²−b², 2a²+2b²−c²)`.
pub fn median_squares(a: &Integer, b: &Integer, c: &Integer) -> (Integer, Integer, Integer) {
    let (aa, bb, cc) = (a * a, b * b, c * c);
    let two = Integer::from(2);
    (&two * (&bb + &cc) - &aa, &two * (&cc + &aa) - &bb, &two * (&aa + &bb) - &cc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    None,
    /// Largest half-side equals the sum of the other two.
    Collinear,
    ZeroSide,
}

impl Degeneracy {
    pub fn as_str(self) -> &'static str {
        match self {
            Degeneracy::None => "none",
            Degeneracy::Collinear => "collinear",
            Degeneracy::ZeroSide => "zero-side",
        }
    }
}

/// Outcome of checking a sextuple against every median-triangle condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_x: bool,
    pub identity_y: bool,
    pub identity_z: bool,
    /// `x²−y² = 3(b²−a²)`, `x²+y² = 4c²+a²+b²` and `z² = 2a²+2b²−c²`,
    /// recomputed independently of the three identities above.
    pub derived_identities: bool,
    /// Strict triangle inequality on the absolute half-sides.
    pub triangle_inequality: bool,
    /// All six entries strictly positive.
    pub positive: bool,
    pub primitive: bool,
    pub degeneracy: Degeneracy,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.identity_x
            && self.identity_y
            && self.identity_z
            && self.derived_identities
            && self.triangle_inequality
            && self.positive
    }

    /// Names of the checks that failed, in a fixed order.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.identity_x, "identity_x"),
            (self.identity_y, "identity_y"),
            (self.identity_z, "identity_z"),
            (self.derived_identities, "derived_identities"),
            (self.triangle_inequality, "triangle_inequality"),
            (self.positive, "positive"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.all_pass() {
            write!(f, "all checks pass")
        } else {
            write!(f, "failed: {}", self.failures().join(", "))?;
            if self.degeneracy != Degeneracy::None {
                write!(f, " ({})", self.degeneracy.as_str())?;
            }
            Ok(())
        }
    }
}

/// Classifies the absolute half-sides `(a, b, c)`.
pub fn side_degeneracy(a: &Integer, b: &Integer, c: &Integer) -> (Degeneracy, bool) {
    let mut s = [a.abs(), b.abs(), c.abs()];
    s.sort();
    if s.iter().any(Zero::is_zero) {
        return (Degeneracy::ZeroSide, false);
    }
    let rest = &s[0] + &s[1];
    if s[2] == rest {
        (Degeneracy::Collinear, false)
    } else {
        (Degeneracy::None, s[2] < rest)
    }
}

pub fn verify(s: &Sextuple) -> VerificationReport {
    let (xx, yy, zz) = (&s.x * &s.x, &s.y * &s.y, &s.z * &s.z);
    let (aa, bb, cc) = (&s.a * &s.a, &s.b * &s.b, &s.c * &s.c);
    let (mx, my, mz) = median_squares(&s.a, &s.b, &s.c);

    let three = Integer::from(3);
    let four = Integer::from(4);
    let derived = &xx - &yy == &three * (&bb - &aa)
        && &xx + &yy == &four * &cc + &aa + &bb
        && zz == Integer::from(2) * &aa + Integer::from(2) * &bb - &cc;

    let (degeneracy, triangle_inequality) = side_degeneracy(&s.a, &s.b, &s.c);
    VerificationReport {
        identity_x: xx == mx,
        identity_y: yy == my,
        identity_z: zz == mz,
        derived_identities: derived,
        triangle_inequality,
        positive: s.iter().all(Signed::is_positive),
        primitive: s.gcd().is_one(),
        degeneracy,
    }
}

/// `2x²+2y²−z² = 9c²`, `2y²+2z²−x² = 9a²` and `2z²+2x²−y² = 9b²`.
pub fn dual_identities_hold(s: &Sextuple) -> bool {
    let (a, b, c) = median_squares(&s.x, &s.y, &s.z);
    let nine = Integer::from(9);
    // median_squares(x, y, z) yields (2y²+2z²−x², 2z²+2x²−y², 2x²+2y²−z²).
    a == &nine * &s.a * &s.a && b == &nine * &s.b * &s.b && c == &nine * &s.c * &s.c
}

/// A verified triangle with positive integer half-sides and medians.
///
/// The pairing of each half-side with its median is always preserved.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MedianTriangle(Sextuple);

impl MedianTriangle {
    /// Accepts `s` as is, without taking absolute values or reducing.
    pub fn new(s: Sextuple) -> Result<Self> {
        let report = verify(&s);
        if report.all_pass() {
            Ok(MedianTriangle(s))
        } else {
            Err(Error::NotAMedianTriangle(report))
        }
    }

    pub fn from_values(v: [i64; 6]) -> Result<Self> {
        Self::new(Sextuple::from_array(v.map(Integer::from)))
    }

    pub fn sextuple(&self) -> &Sextuple {
        &self.0
    }

    pub fn into_sextuple(self) -> Sextuple {
        self.0
    }

    pub fn half_sides(&self) -> [&Integer; 3] {
        [&self.0.a, &self.0.b, &self.0.c]
    }

    pub fn sides(&self) -> [Integer; 3] {
        self.half_sides().map(|h| h * 2)
    }

    pub fn medians(&self) -> [&Integer; 3] {
        [&self.0.x, &self.0.y, &self.0.z]
    }

    pub fn max_half_side(&self) -> &Integer {
        self.half_sides().into_iter().max().expect("three sides")
    }

    pub fn is_primitive(&self) -> bool {
        self.0.gcd().is_one()
    }

    /// Divides out the common factor, keeping the current order.
    pub fn primitive(&self) -> MedianTriangle {
        MedianTriangle(self.0.reduced())
    }

    /// Primitive form with the (half-side, median) pairs sorted by ascending
    /// half-side, ties broken by ascending median.
    pub fn canonical(&self) -> MedianTriangle {
        let s = self.0.reduced();
        let mut pairs = [(s.a, s.x), (s.b, s.y), (s.c, s.z)];
        pairs.sort();
        let [(a, x), (b, y), (c, z)] = pairs;
        MedianTriangle(Sextuple { a, b, c, x, y, z })
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    pub fn scale(&self, k: &Integer) -> MedianTriangle {
        assert!(k.is_positive(), "scale factor must be positive");
        MedianTriangle(self.0.scale(k))
    }
}

impl fmt::Display for MedianTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Takes absolute values, verifies, and returns the canonical primitive form.
pub fn normalize(s: &Sextuple) -> Result<MedianTriangle> {
    Ok(MedianTriangle::new(s.abs())?.canonical())
}

/// The median triangle: half-sides `(x, y, z)` with medians `(3a, 3b, 3c)`,
/// reduced to primitive form with the pairing order kept.
///
/// The factor 3 is never divided out directly; the gcd reduction removes it
/// when it is present.
pub fn dual(t: &MedianTriangle) -> Result<MedianTriangle> {
    let s = t.sextuple();
    if !dual_identities_hold(s) {
        return Err(Error::Internal(format!("dual identities fail for {s}")));
    }
    let three = Integer::from(3);
    let d = Sextuple {
        a: s.x.clone(),
        b: s.y.clone(),
        c: s.z.clone(),
        x: &three * &s.a,
        y: &three * &s.b,
        z: &three * &s.c,
    };
    MedianTriangle::new(d)
        .map(|t| t.primitive())
        .map_err(|e| Error::Internal(format!("dual of {s} failed verification: {e}")))
}

/// Same canonical primitive form.
pub fn similar(t1: &MedianTriangle, t2: &MedianTriangle) -> bool {
    t1.canonical() == t2.canonical()
}
