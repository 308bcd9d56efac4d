//! Right- and left-G-monogenic mappings `E3 → H(C)`.
//!
//! A canonical map is built from four analytic functions of one complex
//! variable:
//!
//! * right: `Φ(ζ) = F1(ξ1) e1 + F2(ξ2) e2 + F3(ξ1) e3 + F4(ξ2) e4`
//! * left:  `Φ̂(ζ) = F1(ξ1) e1 + F2(ξ2) e2 + F3(ξ2) e3 + F4(ξ1) e4`
//!
//! Right maps satisfy `∂Φ/∂y = i2 ∂Φ/∂x`, `∂Φ/∂z = i3 ∂Φ/∂x`; left maps the
//! same with the factors `i2`, `i3` on the right. [`cr_residual`] measures
//! both by central differences for arbitrary fields.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::analytic::AnalyticFunction;
use crate::e3space::{Line, Point3, Triple};
use crate::error::{Error, Result};
use crate::qalg::{Quaternion, DEFAULT_TOL};

/// Default step for Cauchy–Riemann finite-difference checks.
pub const DEFAULT_CR_STEP: f64 = 1e-5;

/// Minimum number of trapezoidal nodes accepted by [`cauchy_eval`].
pub const MIN_CAUCHY_NODES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    /// Spectral character feeding component `k` (0-based) of a canonical map.
    pub fn slot(self, k: usize) -> Line {
        match (self, k) {
            (_, 0) => Line::L1,
            (_, 1) => Line::L2,
            (Side::Right, 2) | (Side::Left, 3) => Line::L1,
            (Side::Right, 3) | (Side::Left, 2) => Line::L2,
            _ => panic!("component index out of range: {k}"),
        }
    }

    /// `h·Φ'` for right maps, `Φ'·h` for left maps.
    pub fn apply(self, factor: &Quaternion, value: &Quaternion) -> Quaternion {
        match self {
            Side::Right => factor.product(value),
            Side::Left => value.product(factor),
        }
    }
}

/// Anything that can be sampled as an `H(C)`-valued field on `R³`.
pub trait QuaternionField {
    fn value(&self, p: &Point3) -> Result<Quaternion>;
}

impl<F> QuaternionField for F
where
    F: Fn(&Point3) -> Result<Quaternion>,
{
    fn value(&self, p: &Point3) -> Result<Quaternion> {
        self(p)
    }
}

/// Canonical right or left G-monogenic map.
#[derive(Debug, Clone, PartialEq)]
pub struct GMonogenicMap {
    side: Side,
    triple: Triple,
    components: [AnalyticFunction; 4],
}

impl GMonogenicMap {
    /// Builds a map after checking the triple and the component functions.
    pub fn new(side: Side, triple: Triple, components: [AnalyticFunction; 4]) -> Result<Self> {
        let report = triple.validate();
        if !report.is_valid() {
            return Err(Error::InvalidTriple(report.problems().join("; ")));
        }
        for f in &components {
            f.validate()?;
        }
        Ok(GMonogenicMap { side, triple, components })
    }

    /// The identity map `ζ ↦ ζ` (`F1 = F2 = w`).
    pub fn identity(side: Side, triple: Triple) -> Result<Self> {
        let id = AnalyticFunction::identity();
        let zero = AnalyticFunction::zero();
        GMonogenicMap::new(side, triple, [id.clone(), id, zero.clone(), zero])
    }

    /// The constant map with value `c`.
    pub fn constant(side: Side, triple: Triple, c: &Quaternion) -> Result<Self> {
        GMonogenicMap::new(side, triple, c.e.map(AnalyticFunction::constant))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn components(&self) -> &[AnalyticFunction; 4] {
        &self.components
    }

    pub fn eval(&self, p: &Point3) -> Result<Quaternion> {
        let (xi1, xi2) = self.triple.xi(p);
        let mut e = [Complex64::new(0.0, 0.0); 4];
        for (k, f) in self.components.iter().enumerate() {
            let w = match self.side.slot(k) {
                Line::L1 => xi1,
                Line::L2 => xi2,
            };
            e[k] = f.eval(w)?;
        }
        Ok(Quaternion { e })
    }

    /// Gateaux derivative: every component replaced by its exact derivative.
    pub fn gateaux_derivative(&self) -> GMonogenicMap {
        GMonogenicMap {
            side: self.side,
            triple: self.triple,
            components: self.components.clone().map(|f| f.derivative1()),
        }
    }

    pub fn nth_derivative(&self, n: usize) -> GMonogenicMap {
        GMonogenicMap {
            side: self.side,
            triple: self.triple,
            components: self.components.clone().map(|f| f.derivative(n)),
        }
    }

    /// Remainder of the Gateaux difference quotient in the direction `h`:
    /// `(Φ(ζ+εh) − Φ(ζ))/ε − h·Φ'(ζ)` (right) or `… − Φ'(ζ)·h` (left).
    ///
    /// Its norm is `O(ε)` for twice-differentiable components.
    pub fn limit_probe(&self, p: &Point3, h: &Point3, eps: f64) -> Result<Quaternion> {
        if !(eps > 0.0) {
            return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
        }
        let quotient = (self.eval(&p.offset(h, eps))? - self.eval(p)?).scale_real(1.0 / eps);
        let direction = self.triple.zeta(h);
        let derivative = self.gateaux_derivative().eval(p)?;
        Ok(quotient - self.side.apply(&direction, &derivative))
    }

    /// True iff `F3` and `F4` are constant, i.e. the map is both right- and
    /// left-G-monogenic. Checked by evaluating `F3'`, `F4'` on a probe set.
    pub fn both_sided(&self, tol: f64) -> bool {
        self.components[2..].iter().all(|f| {
            let d = f.derivative1();
            probe_points(f).iter().all(|&w| d.eval(w).is_ok_and(|v| v.norm() <= tol))
        })
    }

    /// The splitting `Φ = Φ_I + Φ_II` into canonical maps
    /// valued in the right ideals `I1 = span{e2,e4}` and `I2 = span{e1,e3}`
    /// (for left maps: the left ideals `Î1 = span{e2,e3}`, `Î2 = span{e1,e4}`).
    /// The first part depends on `ξ2` only and the second on `ξ1` only.
    pub fn ideal_decomposition(&self) -> (GMonogenicMap, GMonogenicMap) {
        let keep = |line: Line| {
            let mut comps = self.components.clone();
            for (k, f) in comps.iter_mut().enumerate() {
                if self.side.slot(k) != line {
                    *f = AnalyticFunction::zero();
                }
            }
            GMonogenicMap { side: self.side, triple: self.triple, components: comps }
        };
        (keep(Line::L2), keep(Line::L1))
    }
}

impl QuaternionField for GMonogenicMap {
    fn value(&self, p: &Point3) -> Result<Quaternion> {
        self.eval(p)
    }
}

fn probe_points(f: &AnalyticFunction) -> Vec<Complex64> {
    let base = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-0.6, 0.8),
        Complex64::new(0.3, -0.7),
        Complex64::new(-0.5, -0.5),
    ];
    match f.domain_disc() {
        Some((center, radius)) => base.iter().map(|w| center + w * (0.5 * radius)).collect(),
        None => base.iter().map(|w| w * 1.5).collect(),
    }
}

/// Polynomial map `Σ ζ^k c_k` (right) or `Σ c_k ζ^k` (left).
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionSeries {
    pub side: Side,
    pub triple: Triple,
    pub coeffs: Vec<Quaternion>,
}

impl QuaternionSeries {
    pub fn new(side: Side, triple: Triple, coeffs: Vec<Quaternion>) -> Self {
        QuaternionSeries { side, triple, coeffs }
    }

    /// Direct evaluation with algebra products and powers of `ζ`.
    pub fn eval_direct(&self, p: &Point3) -> Quaternion {
        let zeta = self.triple.zeta(p);
        let mut power = Quaternion::ONE;
        let mut acc = Quaternion::ZERO;
        for c in &self.coeffs {
            acc += self.side.apply(&power, c);
            power = power.product(&zeta);
        }
        acc
    }

    /// Canonical form: component `k` is the polynomial `Σ_j c_{j,k} w^j`.
    ///
    /// For right series `ζ^j c = ξ1^j (c1 e1 + c3 e3) + ξ2^j (c2 e2 + c4 e4)`;
    /// for left series `c ζ^j = ξ1^j (c1 e1 + c4 e4) + ξ2^j (c2 e2 + c3 e3)`,
    /// which matches the slot assignment of each side.
    pub fn canonicalize(&self) -> Result<GMonogenicMap> {
        let comps: [AnalyticFunction; 4] = std::array::from_fn(|k| {
            AnalyticFunction::polynomial(self.coeffs.iter().map(|c| c.e[k]).collect())
        });
        GMonogenicMap::new(self.side, self.triple, comps)
    }
}

/// Central-difference Cauchy–Riemann residuals
/// `(‖D_yΦ − i2·D_xΦ‖, ‖D_zΦ − i3·D_xΦ‖)`, with the products reversed for
/// left maps.
pub fn cr_residual<F: QuaternionField + ?Sized>(
    field: &F,
    side: Side,
    triple: &Triple,
    p: &Point3,
    step: f64,
) -> Result<(f64, f64)> {
    if !(step > 0.0) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    let diff = |axis: Point3| -> Result<Quaternion> {
        let fwd = field.value(&p.offset(&axis, step))?;
        let bwd = field.value(&p.offset(&axis, -step))?;
        Ok((fwd - bwd).scale_real(0.5 / step))
    };
    let dx = diff(Point3::new(1.0, 0.0, 0.0))?;
    let dy = diff(Point3::new(0.0, 1.0, 0.0))?;
    let dz = diff(Point3::new(0.0, 0.0, 1.0))?;
    let ry = (dy - side.apply(&triple.i2(), &dx)).norm();
    let rz = (dz - side.apply(&triple.i3(), &dx)).norm();
    Ok((ry, rz))
}

/// Pointwise product `p ↦ A(p)·B(p)` of two maps, as a sampled field.
#[derive(Debug, Clone)]
pub struct ProductField {
    a: GMonogenicMap,
    b: GMonogenicMap,
}

impl QuaternionField for ProductField {
    fn value(&self, p: &Point3) -> Result<Quaternion> {
        Ok(self.a.eval(p)?.product(&self.b.eval(p)?))
    }
}

pub fn pointwise_product(a: &GMonogenicMap, b: &GMonogenicMap) -> Result<ProductField> {
    if a.side != b.side || a.triple != b.triple {
        return Err(Error::InvalidArgument(
            "pointwise product needs maps with the same side and triple".into(),
        ));
    }
    Ok(ProductField { a: a.clone(), b: b.clone() })
}

/// Symbolic product of two maps valued in `span{e1, e2}`: `(F1 G1, F2 G2, 0, 0)`.
pub fn bicomplex_product(a: &GMonogenicMap, b: &GMonogenicMap) -> Result<GMonogenicMap> {
    if a.side != b.side || a.triple != b.triple {
        return Err(Error::InvalidArgument(
            "product needs maps with the same side and triple".into(),
        ));
    }
    let bicomplex_valued =
        |m: &GMonogenicMap| m.components[2..].iter().all(AnalyticFunction::is_structurally_zero);
    if !bicomplex_valued(a) || !bicomplex_valued(b) {
        return Err(Error::InvalidArgument(
            "symbolic product requires F3 = F4 = 0 in both factors".into(),
        ));
    }
    let f1 = a.components[0].product(&b.components[0])?;
    let f2 = a.components[1].product(&b.components[1])?;
    GMonogenicMap::new(a.side, a.triple, [f1, f2, AnalyticFunction::zero(), AnalyticFunction::zero()])
}

/// `(t − ζ)^{-1} = e1/(t − ξ1) + e2/(t − ξ2)`.
pub fn resolvent(triple: &Triple, p: &Point3, t: Complex64) -> Result<Quaternion> {
    resolvent_with_tol(triple, p, t, DEFAULT_TOL)
}

pub fn resolvent_with_tol(
    triple: &Triple,
    p: &Point3,
    t: Complex64,
    tol: f64,
) -> Result<Quaternion> {
    let (xi1, xi2) = triple.xi(p);
    resolvent_at(xi1, xi2, t, tol)
}

fn resolvent_at(xi1: Complex64, xi2: Complex64, t: Complex64, tol: f64) -> Result<Quaternion> {
    let (d1, d2) = (t - xi1, t - xi2);
    let gap = d1.norm().min(d2.norm());
    if gap <= tol {
        return Err(Error::Singular { det: gap, tol });
    }
    Ok(Quaternion::bicomplex(d1.inv(), d2.inv()))
}

/// Circle radius used by [`cauchy_eval`] around each spectral character.
pub fn contour_radius(xi1: Complex64, xi2: Complex64) -> Result<f64> {
    let gap = (xi1 - xi2).norm();
    if gap <= DEFAULT_TOL {
        return Err(Error::DegenerateSpectrum { gap });
    }
    Ok((0.5 * gap).min(1.0))
}

/// Evaluates a canonical map through its Cauchy integral representation,
/// with trapezoidal quadrature on circles `Γk` of radius
/// `min(1, |ξ1 − ξ2|/2)` around `ξk`.
pub fn cauchy_eval(map: &GMonogenicMap, p: &Point3, nodes: usize) -> Result<Quaternion> {
    if nodes < MIN_CAUCHY_NODES {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_CAUCHY_NODES} quadrature nodes are required, got {nodes}"
        )));
    }
    let (xi1, xi2) = map.triple.xi(p);
    let radius = contour_radius(xi1, xi2)?;
    let mut total = Quaternion::ZERO;
    for (line, center) in [(Line::L1, xi1), (Line::L2, xi2)] {
        let mut acc = Quaternion::ZERO;
        for j in 0..nodes {
            let theta = 2.0 * PI * j as f64 / nodes as f64;
            let offset = Complex64::from_polar(radius, theta);
            let t = center + offset;
            let mut density = Quaternion::ZERO;
            for (k, f) in map.components.iter().enumerate() {
                if map.side.slot(k) == line {
                    density.e[k] = f.eval(t)?;
                }
            }
            let res = resolvent_at(xi1, xi2, t, 0.0)?;
            // dt / (2πi) = offset dθ / (2π)
            let term = match map.side {
                Side::Right => res.product(&density),
                Side::Left => density.product(&res),
            };
            acc += term.scale(offset);
        }
        total += acc.scale_real(1.0 / nodes as f64);
    }
    Ok(total)
}
