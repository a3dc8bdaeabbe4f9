//! Interchange records: JSON lines and CSV.
//!
//! Integers are written as plain decimal JSON numbers of any magnitude.
//! Rationals are written as strings such as `"-975/256"`.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{Integer, Rational};
use crate::construction::{Classification, ConstructionOutcome, ConstructionTrace, Parameters, Route};
use crate::triangle::{MedianTriangle, Sextuple, VerificationReport};

/// Column order of CSV triangle records.
pub const CSV_HEADER: [&str; 10] = ["f", "g", "a", "b", "c", "x", "y", "z", "primitive", "classification"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// An integer serialized as an exact JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub Integer);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map(JsonInt).map_err(|_| serde::de::Error::custom(format!("not an integer: {n}")))
    }
}

impl From<Integer> for JsonInt {
    fn from(n: Integer) -> Self {
        JsonInt(n)
    }
}

impl From<&Integer> for JsonInt {
    fn from(n: &Integer) -> Self {
        JsonInt(n.clone())
    }
}

/// A rational serialized as its `n/d` string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(JsonRational).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub f: JsonInt,
    pub g: JsonInt,
    pub route: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub m: JsonRational,
    pub n: JsonRational,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p_rat: Option<JsonRational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q_rat: Option<JsonRational>,
    pub p: JsonInt,
    pub q: JsonInt,
    pub t: JsonRational,
    pub u: JsonRational,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub indeterminate_ratio: bool,
    /// Signed values before magnitudes are taken.
    pub raw: [JsonInt; 6],
}

impl From<&ConstructionTrace> for TraceRecord {
    fn from(t: &ConstructionTrace) -> Self {
        TraceRecord {
            m: JsonRational(t.m.clone()),
            n: JsonRational(t.n.clone()),
            p_rat: t.p_rat.clone().map(JsonRational),
            q_rat: t.q_rat.clone().map(JsonRational),
            p: (&t.p).into(),
            q: (&t.q).into(),
            t: JsonRational(t.t.clone()),
            u: JsonRational(t.u.clone()),
            indeterminate_ratio: t.indeterminate_ratio,
            raw: t.raw.to_array().map(JsonInt),
        }
    }
}

/// One triangle (or one failed construction) for interchange.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<Provenance>,
    pub classification: String,
    pub primitive: bool,
    pub half_sides: Option<[JsonInt; 3]>,
    pub sides: Option<[JsonInt; 3]>,
    pub medians: Option<[JsonInt; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<TraceRecord>,
}

impl TriangleRecord {
    pub fn from_triangle(t: &MedianTriangle) -> Self {
        let s = t.sextuple();
        TriangleRecord {
            provenance: None,
            classification: Classification::Valid.as_str().to_owned(),
            primitive: t.is_primitive(),
            half_sides: Some([(&s.a).into(), (&s.b).into(), (&s.c).into()]),
            sides: Some(t.sides().map(JsonInt)),
            medians: Some([(&s.x).into(), (&s.y).into(), (&s.z).into()]),
            trace: None,
        }
    }

    pub fn from_outcome(params: &Parameters, route: Route, outcome: &ConstructionOutcome, with_trace: bool) -> Self {
        let mut rec = match &outcome.triangle {
            Some(t) => Self::from_triangle(t),
            None => TriangleRecord {
                provenance: None,
                classification: String::new(),
                primitive: false,
                half_sides: None,
                sides: None,
                medians: None,
                trace: None,
            },
        };
        rec.classification = outcome.classification.as_str().to_owned();
        rec.provenance =
            Some(Provenance { f: params.f().into(), g: params.g().into(), route: route.as_str().to_owned() });
        if with_trace {
            rec.trace = Some((&outcome.trace).into());
        }
        rec
    }

    /// The `(a, b, c, x, y, z)` values, if the record carries a triangle.
    pub fn sextuple(&self) -> Option<Sextuple> {
        let (Some([a, b, c]), Some([x, y, z])) = (&self.half_sides, &self.medians) else {
            return None;
        };
        Some(Sextuple::from_array([a, b, c, x, y, z].map(|v| v.0.clone())))
    }

    /// The `sides` column agrees with `half_sides`.
    pub fn sides_consistent(&self) -> bool {
        match (&self.half_sides, &self.sides) {
            (Some(h), Some(s)) => h.iter().zip(s).all(|(h, s)| &h.0 * 2 == s.0),
            (None, None) => true,
            _ => false,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn csv_row(&self) -> [String; 10] {
        let opt = |v: Option<&JsonInt>| v.map(|v| v.0.to_string()).unwrap_or_default();
        let (f, g) = match &self.provenance {
            Some(p) => (p.f.0.to_string(), p.g.0.to_string()),
            None => (String::new(), String::new()),
        };
        let h = self.half_sides.as_ref();
        let m = self.medians.as_ref();
        [
            f,
            g,
            opt(h.map(|h| &h[0])),
            opt(h.map(|h| &h[1])),
            opt(h.map(|h| &h[2])),
            opt(m.map(|m| &m[0])),
            opt(m.map(|m| &m[1])),
            opt(m.map(|m| &m[2])),
            self.primitive.to_string(),
            self.classification.clone(),
        ]
    }

    fn from_csv_row(row: &csv::StringRecord) -> Result<Self, String> {
        if row.len() != CSV_HEADER.len() {
            return Err(format!("expected {} columns, found {}", CSV_HEADER.len(), row.len()));
        }
        let int = |i: usize| -> Result<Option<Integer>, String> {
            let v = row[i].trim();
            if v.is_empty() {
                Ok(None)
            } else {
                v.parse().map(Some).map_err(|_| format!("column {}: not an integer: {v:?}", CSV_HEADER[i]))
            }
        };
        let provenance = match (int(0)?, int(1)?) {
            (Some(f), Some(g)) => Some(Provenance { f: JsonInt(f), g: JsonInt(g), route: String::new() }),
            (None, None) => None,
            _ => return Err("f and g must both be present or both be empty".into()),
        };
        let vals = (2..8).map(int).collect::<Result<Vec<_>, _>>()?;
        let (half_sides, sides, medians) = if vals.iter().all(Option::is_some) {
            let v: Vec<Integer> = vals.into_iter().flatten().collect();
            (
                Some([JsonInt(v[0].clone()), JsonInt(v[1].clone()), JsonInt(v[2].clone())]),
                Some([JsonInt(&v[0] * 2), JsonInt(&v[1] * 2), JsonInt(&v[2] * 2)]),
                Some([JsonInt(v[3].clone()), JsonInt(v[4].clone()), JsonInt(v[5].clone())]),
            )
        } else if vals.iter().all(Option::is_none) {
            (None, None, None)
        } else {
            return Err("a, b, c, x, y, z must all be present or all be empty".into());
        };
        let primitive = row[8].trim().parse().map_err(|_| format!("column primitive: {:?}", &row[8]))?;
        let classification = row[9].trim().to_owned();
        Classification::from_str(&classification)?;
        Ok(TriangleRecord { provenance, classification, primitive, half_sides, sides, medians, trace: None })
    }
}

/// Writes records in `format`. CSV output always begins with the header row.
pub fn write_records<W: Write>(out: W, records: &[TriangleRecord], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut out = out;
            for r in records {
                writeln!(out, "{}", r.to_json_line())?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                w.write_record(r.csv_row())?;
            }
            w.flush()
        }
    }
}

/// A parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// One parsed input entry: its line number and the record.
pub type Entry = (usize, TriangleRecord);

/// Parses whitespace-separated sextuples `a b c x y z`, one per line.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_plain(text: &str) -> Result<Vec<Entry>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let s = parse_sextuple(line).map_err(|message| ParseError { line: i + 1, message })?;
        out.push((i + 1, raw_record(&s)));
    }
    Ok(out)
}

pub fn parse_sextuple(text: &str) -> Result<Sextuple, String> {
    let vals = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Integer>().map_err(|_| format!("not an integer: {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let vals: [Integer; 6] =
        vals.try_into().map_err(|v: Vec<_>| format!("expected 6 integers (a b c x y z), found {}", v.len()))?;
    Ok(Sextuple::from_array(vals))
}

/// A record holding an unverified sextuple.
pub fn raw_record(s: &Sextuple) -> TriangleRecord {
    TriangleRecord {
        provenance: None,
        classification: String::new(),
        primitive: s.gcd() == Integer::from(1),
        half_sides: Some([(&s.a).into(), (&s.b).into(), (&s.c).into()]),
        sides: Some([JsonInt(&s.a * 2), JsonInt(&s.b * 2), JsonInt(&s.c * 2)]),
        medians: Some([(&s.x).into(), (&s.y).into(), (&s.z).into()]),
        trace: None,
    }
}

pub fn parse_json_lines(text: &str) -> Result<Vec<Entry>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: TriangleRecord =
            serde_json::from_str(line).map_err(|e| ParseError { line: i + 1, message: e.to_string() })?;
        if !rec.sides_consistent() {
            return Err(ParseError { line: i + 1, message: "sides are not twice the half-sides".into() });
        }
        out.push((i + 1, rec));
    }
    Ok(out)
}

pub fn parse_csv(text: &str) -> Result<Vec<Entry>, ParseError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| ParseError { line: 1, message: e.to_string() })?;
    if header.iter().map(str::trim).ne(CSV_HEADER) {
        return Err(ParseError { line: 1, message: format!("expected header {}", CSV_HEADER.join(",")) });
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row
            .map_err(|e| ParseError { line: e.position().map_or(0, |p| p.line() as usize), message: e.to_string() })?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let rec = TriangleRecord::from_csv_row(&row).map_err(|message| ParseError { line, message })?;
        out.push((line, rec));
    }
    Ok(out)
}

/// Detects JSON lines, CSV (by its header row) or plain sextuples.
pub fn parse_any(text: &str) -> Result<Vec<Entry>, ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.starts_with('{') => parse_json_lines(text),
        Some(l) if l.replace(' ', "") == CSV_HEADER.join(",") => parse_csv(text),
        Some(_) => parse_plain(text),
    }
}

pub fn read_to_string<R: BufRead>(mut r: R) -> std::io::Result<String> {
    let mut s = String::new();
    r.read_to_string(&mut s)?;
    Ok(s)
}

/// A verification result for one input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub line: usize,
    pub input: [JsonInt; 6],
    pub identity_x: bool,
    pub identity_y: bool,
    pub identity_z: bool,
    pub derived_identities: bool,
    pub triangle_inequality: bool,
    pub positive: bool,
    pub primitive: bool,
    pub degeneracy: &'static str,
    pub pass: bool,
}

impl VerifyRecord {
    pub const CSV_HEADER: [&'static str; 15] = [
        "line",
        "a",
        "b",
        "c",
        "x",
        "y",
        "z",
        "identity_x",
        "identity_y",
        "identity_z",
        "derived_identities",
        "triangle_inequality",
        "primitive",
        "degeneracy",
        "pass",
    ];

    pub fn new(line: usize, s: &Sextuple, r: &VerificationReport) -> Self {
        VerifyRecord {
            line,
            input: s.to_array().map(JsonInt),
            identity_x: r.identity_x,
            identity_y: r.identity_y,
            identity_z: r.identity_z,
            derived_identities: r.derived_identities,
            triangle_inequality: r.triangle_inequality,
            positive: r.positive,
            primitive: r.primitive,
            degeneracy: r.degeneracy.as_str(),
            pass: r.all_pass(),
        }
    }

    pub fn csv_row(&self) -> Vec<String> {
        let mut row = vec![self.line.to_string()];
        row.extend(self.input.iter().map(|v| v.0.to_string()));
        row.extend(
            [
                self.identity_x,
                self.identity_y,
                self.identity_z,
                self.derived_identities,
                self.triangle_inequality,
                self.primitive,
            ]
            .map(|b| b.to_string()),
        );
        row.push(self.degeneracy.to_owned());
        row.push(self.pass.to_string());
        row
    }
}
