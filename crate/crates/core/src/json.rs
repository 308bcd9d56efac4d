//! JSON encodings. Complex numbers are `[re, im]` pairs throughout.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analytic::AnalyticFunction;
use crate::e3space::{Point3, Triple};
use crate::error::{Error, Result};
use crate::monogenic::{GMonogenicMap, QuaternionSeries, Side};
use crate::pde::{PdeOperator, Term};
use crate::qalg::{IjkQuaternion, Quaternion};

pub const TRIPLE_PRESET_T0: &str = "laplace-t0";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum QuaternionJson {
    E { e: [Complex64; 4] },
    Ijk { ijk: [Complex64; 4] },
}

impl QuaternionJson {
    pub fn to_quaternion(&self) -> Quaternion {
        match self {
            QuaternionJson::E { e } => Quaternion { e: *e },
            QuaternionJson::Ijk { ijk } => Quaternion::from_ijk(&IjkQuaternion { q: *ijk }),
        }
    }
}

impl From<&Quaternion> for QuaternionJson {
    fn from(q: &Quaternion) -> Self {
        QuaternionJson::E { e: q.e }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TripleJson {
    Preset(String),
    Explicit {
        a1: Complex64,
        a2: Complex64,
        b1: Complex64,
        b2: Complex64,
    },
}

impl TripleJson {
    pub fn to_triple(&self) -> Result<Triple> {
        match self {
            TripleJson::Preset(name) if name == TRIPLE_PRESET_T0 => Ok(Triple::t0()),
            TripleJson::Preset(name) => Err(Error::Parse(format!("unknown triple preset {name:?}"))),
            TripleJson::Explicit { a1, a2, b1, b2 } => Ok(Triple::new(*a1, *a2, *b1, *b2)),
        }
    }
}

impl From<&Triple> for TripleJson {
    fn from(t: &Triple) -> Self {
        TripleJson::Explicit { a1: t.a1, a2: t.a2, b1: t.b1, b2: t.b2 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum FunctionJson {
    Poly(Vec<Complex64>),
    Series {
        center: Complex64,
        coeffs: Vec<Complex64>,
        radius: f64,
    },
    Exp {
        amp: Complex64,
        rate: Complex64,
    },
    Lincomb(Vec<(Complex64, FunctionJson)>),
}

impl FunctionJson {
    pub fn to_function(&self) -> Result<AnalyticFunction> {
        let f = match self {
            FunctionJson::Poly(c) => AnalyticFunction::polynomial(c.clone()),
            FunctionJson::Series { center, coeffs, radius } => {
                AnalyticFunction::power_series(*center, coeffs.clone(), *radius)?
            }
            FunctionJson::Exp { amp, rate } => AnalyticFunction::exp_scaled(*amp, *rate),
            FunctionJson::Lincomb(terms) => AnalyticFunction::linear_combination(
                terms
                    .iter()
                    .map(|(w, f)| Ok((*w, f.to_function()?)))
                    .collect::<Result<Vec<_>>>()?,
            )?,
        };
        f.validate()?;
        Ok(f)
    }
}

impl From<&AnalyticFunction> for FunctionJson {
    fn from(f: &AnalyticFunction) -> Self {
        match f {
            AnalyticFunction::Polynomial(c) => FunctionJson::Poly(c.clone()),
            AnalyticFunction::PowerSeries { center, coeffs, radius } => {
                FunctionJson::Series { center: *center, coeffs: coeffs.clone(), radius: *radius }
            }
            AnalyticFunction::ExpScaled { amplitude, rate } => {
                FunctionJson::Exp { amp: *amplitude, rate: *rate }
            }
            AnalyticFunction::LinearCombination(t) => {
                FunctionJson::Lincomb(t.iter().map(|(w, f)| (*w, f.into())).collect())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SideJson {
    Right,
    Left,
}

impl From<SideJson> for Side {
    fn from(s: SideJson) -> Side {
        match s {
            SideJson::Right => Side::Right,
            SideJson::Left => Side::Left,
        }
    }
}

impl From<Side> for SideJson {
    fn from(s: Side) -> SideJson {
        match s {
            Side::Right => SideJson::Right,
            Side::Left => SideJson::Left,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub side: SideJson,
    pub triple: TripleJson,
    #[serde(rename = "F1")]
    pub f1: FunctionJson,
    #[serde(rename = "F2")]
    pub f2: FunctionJson,
    #[serde(rename = "F3")]
    pub f3: FunctionJson,
    #[serde(rename = "F4")]
    pub f4: FunctionJson,
}

impl MapJson {
    pub fn to_map(&self) -> Result<GMonogenicMap> {
        GMonogenicMap::new(
            self.side.into(),
            self.triple.to_triple()?,
            [
                self.f1.to_function()?,
                self.f2.to_function()?,
                self.f3.to_function()?,
                self.f4.to_function()?,
            ],
        )
    }
}

impl From<&GMonogenicMap> for MapJson {
    fn from(m: &GMonogenicMap) -> Self {
        let c = m.components();
        MapJson {
            side: m.side().into(),
            triple: m.triple().into(),
            f1: (&c[0]).into(),
            f2: (&c[1]).into(),
            f3: (&c[2]).into(),
            f4: (&c[3]).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub side: SideJson,
    pub triple: TripleJson,
    pub coeffs: Vec<QuaternionJson>,
}

impl SeriesJson {
    pub fn to_series(&self) -> Result<QuaternionSeries> {
        Ok(QuaternionSeries::new(
            self.side.into(),
            self.triple.to_triple()?,
            self.coeffs.iter().map(QuaternionJson::to_quaternion).collect(),
        ))
    }
}

/// Either a [`MapJson`] or a [`SeriesJson`]; series are canonicalized.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapOrSeriesJson {
    Map(MapJson),
    Series(SeriesJson),
}

impl MapOrSeriesJson {
    pub fn to_map(&self) -> Result<GMonogenicMap> {
        match self {
            MapOrSeriesJson::Map(m) => m.to_map(),
            MapOrSeriesJson::Series(s) => s.to_series()?.canonicalize(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub a: u32,
    pub b: u32,
    pub g: u32,
    pub c: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PdeJson {
    Preset(String),
    Explicit { n: u32, terms: Vec<TermJson> },
}

impl PdeJson {
    pub fn to_operator(&self) -> Result<PdeOperator> {
        match self {
            PdeJson::Preset(name) => PdeOperator::preset(name)
                .ok_or_else(|| Error::Parse(format!("unknown PDE preset {name:?}"))),
            PdeJson::Explicit { n, terms } => PdeOperator::new(
                *n,
                terms.iter().map(|t| Term::new(t.a, t.b, t.g, t.c)).collect(),
            ),
        }
    }
}

impl From<&PdeOperator> for PdeJson {
    fn from(op: &PdeOperator) -> Self {
        PdeJson::Explicit {
            n: op.order(),
            terms: op
                .terms()
                .iter()
                .map(|t| TermJson { a: t.alpha, b: t.beta, g: t.gamma, c: t.c })
                .collect(),
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid {what} JSON: {e}")))
}

pub fn parse_quaternion(text: &str) -> Result<Quaternion> {
    Ok(parse::<QuaternionJson>(text, "quaternion")?.to_quaternion())
}

pub fn parse_triple(text: &str) -> Result<Triple> {
    parse::<TripleJson>(text, "triple")?.to_triple()
}

pub fn parse_point(text: &str) -> Result<Point3> {
    let v: [f64; 3] = parse(text, "point")?;
    Ok(v.into())
}

pub fn parse_function(text: &str) -> Result<AnalyticFunction> {
    parse::<FunctionJson>(text, "function")?.to_function()
}

/// Accepts both map and series encodings.
pub fn parse_map(text: &str) -> Result<GMonogenicMap> {
    parse::<MapOrSeriesJson>(text, "map")?.to_map()
}

pub fn parse_series(text: &str) -> Result<QuaternionSeries> {
    parse::<SeriesJson>(text, "series")?.to_series()
}

/// A PDE document, or a bare preset name such as `laplace3d`.
pub fn parse_pde(text: &str) -> Result<PdeOperator> {
    let trimmed = text.trim();
    if let Some(op) = PdeOperator::preset(trimmed) {
        return Ok(op);
    }
    parse::<PdeJson>(trimmed, "PDE")?.to_operator()
}

pub fn quaternion_to_value(q: &Quaternion) -> serde_json::Value {
    serde_json::to_value(QuaternionJson::from(q)).expect("quaternion serializes")
}

pub fn map_to_string(m: &GMonogenicMap) -> String {
    serde_json::to_string(&MapJson::from(m)).expect("map serializes")
}
