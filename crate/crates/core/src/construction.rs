//! Parametric construction of integer-median triangles from a generator
//! pair `(f, g)`.
//!
//! Two independent routes are provided:
//!
//! * [`Route::RationalPipeline`] evaluates the rational intermediates
//!   `m = (5g²−f²)/(4g²)`, `n = (5f²−9g²)/(4f²)`, then `p : q = 4(m+n) : (m−n)²−4`,
//!   clears denominators, and assembles the six values from `p` and `q`.
//! * [`Route::ClosedForm`] evaluates integer polynomials in `f` and `g`
//!   directly: `p = −16f²g²`, `q = (g²+f²)(9g²+f²)`.
//!
//! Both produce signed values; magnitudes are taken only when classifying.
//!
//! Note on `m`: some printings of the recipe give the denominator as `4f²`.
//! Only `4g²` reproduces `m = 1/4` at `(f, g) = (2, 1)`, so that is what is
//! used here. Likewise the median is `z = f(m−n)p − 2fq`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::Signed;

use crate::arith::{gcd, Integer, Rational};
use crate::error::{Error, Result};
use crate::triangle::{dual_identities_hold, side_degeneracy, verify, Degeneracy, MedianTriangle, Sextuple};

/// The generator pair. Both entries are at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parameters {
    f: Integer,
    g: Integer,
}

impl Parameters {
    pub fn new(f: impl Into<Integer>, g: impl Into<Integer>) -> Result<Self> {
        let (f, g) = (f.into(), g.into());
        if !f.is_positive() || !g.is_positive() {
            return Err(Error::InvalidParameters(format!("f and g must be >= 1, got ({f}, {g})")));
        }
        Ok(Parameters { f, g })
    }

    pub fn f(&self) -> &Integer {
        &self.f
    }

    pub fn g(&self) -> &Integer {
        &self.g
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(f={}, g={})", self.f, self.g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Route {
    #[default]
    RationalPipeline,
    ClosedForm,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::RationalPipeline => "rational-pipeline",
            Route::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "rational-pipeline" | "rational" | "pipeline" => Ok(Route::RationalPipeline),
            "closed-form" | "closed" => Ok(Route::ClosedForm),
            other => Err(format!("unknown route {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Valid,
    Degenerate,
    Zero,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Valid => "valid",
            Classification::Degenerate => "degenerate",
            Classification::Zero => "zero",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "valid" => Ok(Classification::Valid),
            "degenerate" => Ok(Classification::Degenerate),
            "zero" => Ok(Classification::Zero),
            other => Err(format!("unknown classification {other:?}")),
        }
    }
}

/// Every intermediate of one construction run.
///
/// `p_rat` and `q_rat` are only produced by the rational pipeline. For that
/// route `(p, q)` is coprime; the closed form reports its polynomial values
/// unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub route: Route,
    pub m: Rational,
    pub n: Rational,
    pub p_rat: Option<Rational>,
    pub q_rat: Option<Rational>,
    pub p: Integer,
    pub q: Integer,
    pub t: Rational,
    pub u: Rational,
    /// Set when `4(m+n)` and `(m−n)²−4` vanish together (`f = g` or
    /// `f = 3g`). The ratio
    /// is then taken from its reduced polynomial form.
    pub indeterminate_ratio: bool,
    pub raw: Sextuple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionOutcome {
    pub trace: ConstructionTrace,
    pub classification: Classification,
    /// Primitive triangle, in construction order. Present iff `Valid`.
    pub triangle: Option<MedianTriangle>,
}

/// `m = (5g²−f²)/(4g²)` and `n = (5f²−9g²)/(4f²)`.
pub fn compute_mn(params: &Parameters) -> (Rational, Rational) {
    let ff = &params.f * &params.f;
    let gg = &params.g * &params.g;
    let m = Rational::new(Integer::from(5) * &gg - &ff, Integer::from(4) * &gg);
    let n = Rational::new(Integer::from(5) * &ff - Integer::from(9) * &gg, Integer::from(4) * &ff);
    (m.expect("g >= 1"), n.expect("f >= 1"))
}

/// `p = 4(m+n)`, `q = (m−n)² − 4`.
pub fn compute_pq_rational(m: &Rational, n: &Rational) -> (Rational, Rational) {
    let p = &Rational::from(4) * &(m + n);
    let q = &(m - n).square() - &Rational::from(4);
    (p, q)
}

/// The coprime integer pair with the same ratio and the same signs as
/// `(p, q)`.
pub fn integerize(p: &Rational, q: &Rational) -> Result<(Integer, Integer)> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegenerateRatio);
    }
    let l = p.denominator().lcm(q.denominator());
    let pn = p.numerator() * (&l / p.denominator());
    let qn = q.numerator() * (&l / q.denominator());
    let g = gcd(&pn, &qn);
    Ok((pn / &g, qn / &g))
}

/// `t = ½(m−n)p + q`, `u = ½(m−n)p − q`.
pub fn compute_tu(m: &Rational, n: &Rational, p: &Integer, q: &Integer) -> (Rational, Rational) {
    let half = Rational::new(1, 2).expect("nonzero");
    let shared = &(&half * &(m - n)) * &Rational::from(p.clone());
    let q = Rational::from(q.clone());
    (&shared + &q, &shared - &q)
}

/// Evaluates the six signed values from `p` and `q`:
///
/// ```text
/// a = (f−g)p + (f+g)q      x = (3g+f)p + (3g−f)q
/// b = (f+g)p + (f−g)q      y = (3g−f)p + (3g+f)q
/// c = g(m−n)p + 2gq        z = f(m−n)p − 2fq
/// ```
pub fn assemble_triangle(
    params: &Parameters,
    m: &Rational,
    n: &Rational,
    p: &Integer,
    q: &Integer,
) -> Result<Sextuple> {
    let (f, g) = (&params.f, &params.g);
    let three_g = g * 3;

    let a = (f - g) * p + (f + g) * q;
    let b = (f + g) * p + (f - g) * q;
    let x = (&three_g + f) * p + (&three_g - f) * q;
    let y = (&three_g - f) * p + (&three_g + f) * q;

    let mnp = &(m - n) * &Rational::from(p.clone());
    let two_q = Rational::from(q * 2);
    let c = &Rational::from(g.clone()) * &(&mnp + &two_q);
    let z = &Rational::from(f.clone()) * &(&mnp - &two_q);
    let (Some(c), Some(z)) = (c.to_integer(), z.to_integer()) else {
        return Err(Error::Internal(format!("non-integral c or z at {params} with p={p}, q={q}: c={c}, z={z}")));
    };
    Ok(Sextuple { a, b, c, x, y, z })
}

/// Integer polynomial evaluation of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub p: Integer,
    pub q: Integer,
    pub t: Integer,
    pub u: Integer,
    pub raw: Sextuple,
}

/// ```text
/// p = −16f²g²              t =  (g²+f²)(9g²+f²) − 2(3g²+f²)(3g²−f²)
/// q = (g²+f²)(9g²+f²)      u = −(g²+f²)(9g²+f²) − 2(3g²+f²)(3g²−f²)
/// c = 2gt,  z = 2fu
/// a + b = 2f(p+q),  b − a = 2g(p−q)
/// x + y = 6g(p+q),  x − y = 2f(p−q)
/// ```
pub fn closed_form(params: &Parameters) -> ClosedForm {
    let (f, g) = (&params.f, &params.g);
    let ff = f * f;
    let gg = g * g;
    let nine_gg = &gg * 9u32;
    let three_gg = &gg * 3u32;

    let p: Integer = -(&ff * &gg * 16u32);
    let q = (&gg + &ff) * (&nine_gg + &ff);
    let cross = (&three_gg + &ff) * (&three_gg - &ff) * 2u32;
    let t = &q - &cross;
    let u = -&q - &cross;

    let sum = &p + &q;
    let diff = &p - &q;
    // a = ((a+b) − (b−a))/2 etc.; the halves are taken before multiplying.
    let a = f * &sum - g * &diff;
    let b = f * &sum + g * &diff;
    let x = &sum * g * 3u32 + f * &diff;
    let y = &sum * g * 3u32 - f * &diff;
    let c = g * &t * 2u32;
    let z = f * &u * 2u32;

    ClosedForm { p, q, t, u, raw: Sextuple { a, b, c, x, y, z } }
}

fn classify(raw: &Sextuple) -> Classification {
    match side_degeneracy(&raw.a, &raw.b, &raw.c) {
        (Degeneracy::ZeroSide, _) => Classification::Zero,
        (Degeneracy::Collinear, _) | (Degeneracy::None, false) => Classification::Degenerate,
        (Degeneracy::None, true) => Classification::Valid,
    }
}

fn run_pipeline(params: &Parameters) -> Result<ConstructionTrace> {
    let (m, n) = compute_mn(params);
    let (p_rat, q_rat) = compute_pq_rational(&m, &n);
    let (p, q, indeterminate_ratio) = match integerize(&p_rat, &q_rat) {
        Ok((p, q)) => (p, q, false),
        Err(Error::DegenerateRatio) => {
            // 4(m+n) and (m−n)²−4 share the factor (g²−f²)(9g²−f²); with it
            // cancelled the ratio is −16f²g² : (g²+f²)(9g²+f²).
            let cf = closed_form(params);
            let (p, q) = integerize(&Rational::from(cf.p), &Rational::from(cf.q))?;
            (p, q, true)
        }
        Err(e) => return Err(e),
    };
    let (t, u) = compute_tu(&m, &n, &p, &q);
    let raw = assemble_triangle(params, &m, &n, &p, &q)?;

    let two = Rational::from(2);
    let c_check = &(&two * &Rational::from(params.g.clone())) * &t;
    let z_check = &(&two * &Rational::from(params.f.clone())) * &u;
    if c_check != Rational::from(raw.c.clone()) || z_check != Rational::from(raw.z.clone()) {
        return Err(Error::Internal(format!("c != 2gt or z != 2fu at {params}")));
    }

    Ok(ConstructionTrace {
        route: Route::RationalPipeline,
        m,
        n,
        p_rat: Some(p_rat),
        q_rat: Some(q_rat),
        p,
        q,
        t,
        u,
        indeterminate_ratio,
        raw,
    })
}

fn run_closed_form(params: &Parameters) -> ConstructionTrace {
    let (m, n) = compute_mn(params);
    let cf = closed_form(params);
    ConstructionTrace {
        route: Route::ClosedForm,
        m,
        n,
        p_rat: None,
        q_rat: None,
        indeterminate_ratio: false,
        t: Rational::from(cf.t),
        u: Rational::from(cf.u),
        p: cf.p,
        q: cf.q,
        raw: cf.raw,
    }
}

/// Runs one route end to end and classifies the result.
///
/// Degenerate parameter choices are reported through the classification,
/// never as errors. A `Valid` triangle has been checked against every median
/// identity before it is returned.
pub fn construct(params: &Parameters, route: Route) -> Result<ConstructionOutcome> {
    let trace = match route {
        Route::RationalPipeline => run_pipeline(params)?,
        Route::ClosedForm => run_closed_form(params),
    };

    let raw = &trace.raw;
    let sq = |v: &Integer| v * v;
    if sq(&raw.x) - sq(&raw.y) != (sq(&raw.b) - sq(&raw.a)) * 3 {
        return Err(Error::Internal(format!("x²−y² != 3(b²−a²) at {params}: {raw}")));
    }

    let classification = classify(raw);
    let triangle = match classification {
        Classification::Valid => {
            let abs = raw.abs();
            let report = verify(&abs);
            if !report.all_pass() || !dual_identities_hold(&abs) {
                return Err(Error::Internal(format!("{params} produced {raw}: {report}")));
            }
            Some(MedianTriangle::new(abs.reduced())?)
        }
        _ => None,
    };
    Ok(ConstructionOutcome { trace, classification, triangle })
}

/// True when `(f, g)` is known to collapse: `f = g` or `f = 3g`.
pub fn is_known_degenerate(params: &Parameters) -> bool {
    params.f == params.g || params.f == &params.g * 3
}

impl ConstructionOutcome {
    pub fn is_valid(&self) -> bool {
        self.classification == Classification::Valid
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(f: i64, g: i64) -> Parameters {
        Parameters::new(f, g).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn parameters_must_be_positive() {
        assert!(Parameters::new(0, 1).is_err());
        assert!(Parameters::new(1, -2).is_err());
    }

    #[test]
    fn compute_mn_examples() {
        assert_eq!(compute_mn(&params(2, 1)), (r(1, 4), r(11, 16)));
        assert_eq!(compute_mn(&params(1, 2)), (r(19, 16), r(-31, 4)));
        assert_eq!(compute_mn(&params(1, 1)), (r(1, 1), r(-1, 1)));
    }

    #[test]
    fn compute_pq_examples() {
        assert_eq!(compute_pq_rational(&r(1, 4), &r(11, 16)), (r(15, 4), r(-975, 256)));
        assert_eq!(compute_pq_rational(&r(19, 16), &r(-31, 4)), (r(-105, 4), r(19425, 256)));
        let (_, q) = compute_pq_rational(&r(5, 3), &r(-1, 3));
        assert!(q.is_zero());
    }

    #[test]
    fn integerize_examples() {
        assert_eq!(integerize(&r(15, 4), &r(-975, 256)).unwrap(), (int(64), int(-65)));
        assert_eq!(integerize(&r(-105, 4), &r(19425, 256)).unwrap(), (int(-64), int(185)));
        assert_eq!(integerize(&r(3, 1), &r(0, 1)).unwrap(), (int(1), int(0)));
        assert_eq!(integerize(&r(0, 1), &r(-2, 7)).unwrap(), (int(0), int(-1)));
        assert_eq!(integerize(&Rational::zero(), &Rational::zero()), Err(Error::DegenerateRatio));
    }

    #[test]
    fn compute_tu_examples() {
        assert_eq!(compute_tu(&r(1, 4), &r(11, 16), &int(64), &int(-65)), (r(-79, 1), r(51, 1)));
        assert_eq!(compute_tu(&r(19, 16), &r(-31, 4), &int(-64), &int(185)), (r(-101, 1), r(-471, 1)));
        assert_eq!(compute_tu(&r(3, 7), &r(1, 9), &int(0), &int(5)), (r(5, 1), r(-5, 1)));
    }

    #[test]
    fn assemble_examples() {
        let s = assemble_triangle(&params(2, 1), &r(1, 4), &r(11, 16), &int(64), &int(-65)).unwrap();
        assert_eq!(s, Sextuple::new(-131, 127, -158, 255, -261, 204));
        let s = assemble_triangle(&params(1, 2), &r(19, 16), &r(-31, 4), &int(-64), &int(185)).unwrap();
        assert_eq!(s, Sextuple::new(619, -377, -404, 477, 975, -942));
        let s = assemble_triangle(&params(2, 1), &r(1, 4), &r(11, 16), &int(0), &int(0)).unwrap();
        assert_eq!(s, Sextuple::zero());
    }

    #[test]
    fn assemble_rejects_non_integral() {
        let e = assemble_triangle(&params(2, 1), &r(1, 4), &r(11, 16), &int(1), &int(0));
        assert!(matches!(e, Err(Error::Internal(_))));
    }

    #[test]
    fn closed_form_one_two() {
        let cf = closed_form(&params(1, 2));
        assert_eq!(
            (cf.p.clone(), cf.q.clone(), cf.t.clone(), cf.u.clone()),
            (int(-64), int(185), int(-101), int(-471))
        );
        assert_eq!((cf.raw.c.clone(), cf.raw.z.clone()), (int(-404), int(-942)));
        let s = &cf.raw;
        assert_eq!(&s.b - &s.a, int(-996));
        assert_eq!(&s.a + &s.b, int(242));
        assert_eq!(&s.x + &s.y, int(1452));
        assert_eq!(&s.x - &s.y, int(-498));
    }

    #[test]
    fn closed_form_degenerate_examples() {
        let cf = closed_form(&params(1, 1));
        assert_eq!((cf.p.clone(), cf.q.clone(), cf.t.clone()), (int(-16), int(20), int(4)));
        assert_eq!(cf.raw, Sextuple::new(40, -32, 8, -24, 48, -72));

        let out = construct(&params(3, 1), Route::ClosedForm).unwrap();
        assert_eq!(out.trace.raw.a.abs(), int(432));
        assert_eq!(out.trace.raw.b.abs(), int(216));
        assert_eq!(out.trace.raw.c.abs(), int(648));
        assert_eq!(out.classification, Classification::Degenerate);
    }

    #[test]
    fn construct_golden() {
        let out = construct(&params(2, 1), Route::RationalPipeline).unwrap();
        assert_eq!(out.trace.p, int(64));
        assert_eq!(out.trace.q, int(-65));
        assert_eq!(out.classification, Classification::Valid);
        assert_eq!(out.triangle, Some(MedianTriangle::from_values([131, 127, 158, 255, 261, 204]).unwrap()));

        for route in [Route::RationalPipeline, Route::ClosedForm] {
            let out = construct(&params(1, 2), route).unwrap();
            assert_eq!(out.triangle, Some(MedianTriangle::from_values([619, 377, 404, 477, 975, 942]).unwrap()));
        }
    }

    #[test]
    fn construct_equal_parameters_is_degenerate_on_both_routes() {
        for route in [Route::RationalPipeline, Route::ClosedForm] {
            let out = construct(&params(1, 1), route).unwrap();
            assert_eq!(out.classification, Classification::Degenerate);
            assert!(out.triangle.is_none());
        }
        let out = construct(&params(4, 4), Route::RationalPipeline).unwrap();
        assert!(out.trace.indeterminate_ratio);
        assert_eq!(out.trace.p_rat, Some(Rational::zero()));
    }

    #[test]
    fn pipeline_at_three_to_one_is_indeterminate() {
        // m = −1, n = 1: both 4(m+n) and (m−n)²−4 vanish.
        let out = construct(&params(6, 2), Route::RationalPipeline).unwrap();
        assert!(out.trace.indeterminate_ratio);
        assert_eq!((out.trace.p.clone(), out.trace.q.clone()), (int(-4), int(5)));
        assert_eq!(out.classification, Classification::Degenerate);
    }

    #[test]
    fn known_degenerate() {
        assert!(is_known_degenerate(&params(3, 1)));
        assert!(is_known_degenerate(&params(5, 5)));
        assert!(!is_known_degenerate(&params(1, 3)));
    }

    #[test]
    fn route_parse() {
        assert_eq!("closed-form".parse::<Route>().unwrap(), Route::ClosedForm);
        assert_eq!("rational-pipeline".parse::<Route>().unwrap(), Route::RationalPipeline);
        assert!("x".parse::<Route>().is_err());
    }
}
