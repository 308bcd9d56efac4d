//! Constant-coefficient operators `L_n = Σ C_{αβγ} ∂^n / ∂x^α ∂y^β ∂z^γ` and
//! their link to monogenic maps.
//!
//! For a right map `L_n Φ = (Σ C i2^β i3^γ) Φ^{(n)}(ζ)`; for a left map the
//! characteristic element multiplies from the right. A triple whose
//! characteristic element vanishes therefore turns every canonical map into a
//! solution, and the real and imaginary parts of every component are scalar
//! solutions.

use std::collections::HashMap;
use std::ops::Add;
use std::ops::Mul;

use num_complex::Complex64;

use crate::analytic::AnalyticFunction;
use crate::e3space::{Point3, Triple, TripleReport};
use crate::error::{Error, Result};
use crate::monogenic::{GMonogenicMap, QuaternionField, Side};
use crate::qalg::Quaternion;
use crate::roots::{eval_poly, roots};

/// Finite-difference step for operators of order at most two.
pub const FD_STEP_LOW_ORDER: f64 = 1e-3;
/// Finite-difference step for higher-order operators.
pub const FD_STEP_HIGH_ORDER: f64 = 5e-2;

/// One term `c ∂x^α ∂y^β ∂z^γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub c: f64,
}

impl Term {
    pub fn new(alpha: u32, beta: u32, gamma: u32, c: f64) -> Self {
        Term { alpha, beta, gamma, c }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PdeOperator {
    order: u32,
    terms: Vec<Term>,
}

fn cpow(z: Complex64, n: u32) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, _| acc * z)
}

impl PdeOperator {
    pub fn new(order: u32, terms: Vec<Term>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOperator("order must be positive".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for t in &terms {
            if t.alpha + t.beta + t.gamma != order {
                return Err(Error::InvalidOperator(format!(
                    "term ({}, {}, {}) does not have total order {order}",
                    t.alpha, t.beta, t.gamma
                )));
            }
            if !t.c.is_finite() {
                return Err(Error::InvalidOperator("non-finite coefficient".into()));
            }
            if !seen.insert((t.alpha, t.beta, t.gamma)) {
                return Err(Error::InvalidOperator(format!(
                    "duplicate term ({}, {}, {})",
                    t.alpha, t.beta, t.gamma
                )));
            }
        }
        if terms.iter().all(|t| t.c == 0.0) {
            return Err(Error::InvalidOperator("all coefficients are zero".into()));
        }
        Ok(PdeOperator { order, terms })
    }

    /// Three-dimensional Laplacian.
    pub fn laplace3d() -> Self {
        PdeOperator::new(
            2,
            vec![Term::new(2, 0, 0, 1.0), Term::new(0, 2, 0, 1.0), Term::new(0, 0, 2, 1.0)],
        )
        .expect("valid preset")
    }

    /// `∂⁵/∂x⁵ + ∂⁵/∂x∂y²∂z² + ∂⁵/∂x∂z⁴`, non-elliptic with `P(a, b) > 0`.
    pub fn example5() -> Self {
        PdeOperator::new(
            5,
            vec![Term::new(5, 0, 0, 1.0), Term::new(1, 2, 2, 1.0), Term::new(1, 0, 4, 1.0)],
        )
        .expect("valid preset")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "laplace3d" => Some(PdeOperator::laplace3d()),
            "example5" => Some(PdeOperator::example5()),
            _ => None,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Default finite-difference step for this operator's order.
    pub fn default_fd_step(&self) -> f64 {
        if self.order <= 2 {
            FD_STEP_LOW_ORDER
        } else {
            FD_STEP_HIGH_ORDER
        }
    }

    /// `Σ C a^β b^γ` for complex `a`, `b`.
    pub fn char_scalar(&self, a: Complex64, b: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|t| cpow(a, t.beta) * cpow(b, t.gamma) * t.c)
            .sum()
    }

    /// `Σ C i2^β i3^γ`, computed in the commutative span of `e1, e2`.
    pub fn char_element(&self, triple: &Triple) -> Quaternion {
        Quaternion::bicomplex(
            self.char_scalar(triple.a1, triple.b1),
            self.char_scalar(triple.a2, triple.b2),
        )
    }

    /// `P(a, b) = Σ C a^β b^γ` for real arguments.
    pub fn p_polynomial(&self, a: f64, b: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.c * a.powi(t.beta as i32) * b.powi(t.gamma as i32))
            .sum()
    }

    /// Grid scan of `|P|` over `[-R, R]²` with spacing close to `step`.
    ///
    /// A positive minimum is only heuristic evidence that `P` has no real
    /// zeros; sampling cannot prove it.
    pub fn p_scan(&self, range: f64, step: f64) -> Result<PScan> {
        if !(range > 0.0 && step > 0.0) {
            return Err(Error::InvalidArgument("range and step must be positive".into()));
        }
        let n = ((2.0 * range / step).round() as usize).max(1);
        let coord = |i: usize| range * (2.0 * i as f64 / n as f64 - 1.0);
        let mut best = PScan { min_abs: f64::INFINITY, argmin: (0.0, 0.0), samples: 0 };
        for i in 0..=n {
            let a = coord(i);
            for j in 0..=n {
                let b = coord(j);
                let v = self.p_polynomial(a, b).abs();
                best.samples += 1;
                if v < best.min_abs {
                    best.min_abs = v;
                    best.argmin = (a, b);
                }
            }
        }
        Ok(best)
    }

    /// Coefficients (ascending in `b`) of `Σ C a^β b^γ` for fixed `a`.
    pub fn char_poly_in_b(&self, a: Complex64) -> Result<Vec<Complex64>> {
        let max_gamma = self.terms.iter().map(|t| t.gamma).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); max_gamma + 1];
        for t in &self.terms {
            coeffs[t.gamma as usize] += cpow(a, t.beta) * t.c;
        }
        while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::DegeneratePolynomial);
        }
        Ok(coeffs)
    }

    /// Roots `b` of the characteristic equation for fixed `a`, with residuals.
    pub fn solve_for_b(&self, a: Complex64) -> Result<CharRoots> {
        let poly = self.char_poly_in_b(a)?;
        let found = roots(&poly)?;
        let roots = found
            .into_iter()
            .map(|b| CharRoot { b, residual: self.char_scalar(a, b).norm() })
            .collect();
        Ok(CharRoots { a, poly, roots })
    }

    /// `L_n Φ` from the characteristic identity: `char · Φ^{(n)}` (right) or
    /// `Φ^{(n)} · char` (left).
    pub fn residual_via_formula(&self, map: &GMonogenicMap, p: &Point3) -> Result<Quaternion> {
        let ch = self.char_element(map.triple());
        let dn = map.nth_derivative(self.order as usize).eval(p)?;
        Ok(match map.side() {
            Side::Right => ch.product(&dn),
            Side::Left => dn.product(&ch),
        })
    }

    /// Applies the operator by composed central differences to a scalar field.
    pub fn apply_fd<F: ScalarField + ?Sized>(
        &self,
        field: &F,
        p: &Point3,
        step: f64,
    ) -> Result<Complex64> {
        self.fd_generic(p, step, |q| field.value(q))
    }

    /// Componentwise finite-difference application to a quaternion field.
    pub fn apply_fd_quaternion<F: QuaternionField + ?Sized>(
        &self,
        field: &F,
        p: &Point3,
        step: f64,
    ) -> Result<Quaternion> {
        self.fd_generic(p, step, |q| field.value(q))
    }

    fn fd_generic<V, E>(&self, p: &Point3, step: f64, eval: E) -> Result<V>
    where
        V: Copy + Default + Add<Output = V> + Mul<f64, Output = V>,
        E: Fn(&Point3) -> Result<V>,
    {
        if !(step > 0.0) {
            return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
        }
        let mut cache: HashMap<(i32, i32, i32), V> = HashMap::new();
        let mut total = V::default();
        for t in &self.terms {
            if t.c == 0.0 {
                continue;
            }
            let (sx, sy, sz) = (stencil_1d(t.alpha), stencil_1d(t.beta), stencil_1d(t.gamma));
            let mut acc = V::default();
            for &(i, wx) in &sx {
                for &(j, wy) in &sy {
                    for &(k, wz) in &sz {
                        let v = match cache.get(&(i, j, k)) {
                            Some(v) => *v,
                            None => {
                                let q = Point3::new(
                                    p.x + i as f64 * step,
                                    p.y + j as f64 * step,
                                    p.z + k as f64 * step,
                                );
                                let v = eval(&q)?;
                                cache.insert((i, j, k), v);
                                v
                            }
                        };
                        acc = acc + v * (wx * wy * wz);
                    }
                }
            }
            total = total + acc * (t.c / step.powi(self.order as i32));
        }
        Ok(total)
    }
}

/// Unscaled 1D central-difference weights for the `m`-th derivative: `m/2`
/// copies of `[1, -2, 1]` convolved with `[-1/2, 0, 1/2]` when `m` is odd.
/// Dividing by `h^m` gives a second-order accurate approximation.
fn stencil_1d(m: u32) -> Vec<(i32, f64)> {
    let mut w: Vec<(i32, f64)> = vec![(0, 1.0)];
    let conv = |a: &[(i32, f64)], b: &[(i32, f64)]| {
        let mut map: std::collections::BTreeMap<i32, f64> = Default::default();
        for &(i, x) in a {
            for &(j, y) in b {
                *map.entry(i + j).or_insert(0.0) += x * y;
            }
        }
        map.into_iter().filter(|(_, v)| *v != 0.0).collect::<Vec<_>>()
    };
    for _ in 0..m / 2 {
        w = conv(&w, &[(-1, 1.0), (0, -2.0), (1, 1.0)]);
    }
    if m % 2 == 1 {
        w = conv(&w, &[(-1, -0.5), (1, 0.5)]);
    }
    w
}

/// Result of [`PdeOperator::p_scan`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PScan {
    pub min_abs: f64,
    pub argmin: (f64, f64),
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRoot {
    pub b: Complex64,
    /// `|Σ C a^β b^γ|` at the computed root.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharRoots {
    pub a: Complex64,
    pub poly: Vec<Complex64>,
    pub roots: Vec<CharRoot>,
}

impl CharRoots {
    pub fn pairs(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.roots.iter().map(move |r| (self.a, r.b))
    }
}

/// Every ordered assignment of solution pairs to `(a1, b1)` and `(a2, b2)`,
/// paired with its validation report.
pub fn assemble_triples(pairs: &[(Complex64, Complex64)]) -> Vec<(Triple, TripleReport)> {
    let mut out = Vec::new();
    for &(a1, b1) in pairs {
        for &(a2, b2) in pairs {
            let t = Triple::new(a1, a2, b1, b2);
            out.push((t, t.validate()));
        }
    }
    out
}

/// Parameters of a harmonic triple `a1 = i sin t, b1 = i cos t, a2 = i sin τ, b2 = i cos τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicParams {
    pub t: Complex64,
    pub tau: Complex64,
}

/// `(sin t, cos t)` from the exponential formulas.
pub fn sin_cos(t: Complex64) -> (Complex64, Complex64) {
    let i = Complex64::i();
    let (p, m) = ((i * t).exp(), (-i * t).exp());
    ((p - m) / (2.0 * i), (p + m) * 0.5)
}

/// Harmonic triple for the Laplace equation; fails when the vectors are
/// R-dependent or a pair is real.
pub fn laplace_triple(h: HarmonicParams) -> Result<Triple> {
    let i = Complex64::i();
    let (st, ct) = sin_cos(h.t);
    let (sa, ca) = sin_cos(h.tau);
    let triple = Triple::new(i * st, i * sa, i * ct, i * ca);
    let report = triple.validate();
    if !report.is_valid() {
        return Err(Error::InvalidTriple(report.problems().join("; ")));
    }
    Ok(triple)
}

/// A complex-valued field on `R³`.
pub trait ScalarField {
    fn value(&self, p: &Point3) -> Result<Complex64>;
}

impl<F> ScalarField for F
where
    F: Fn(&Point3) -> Result<Complex64>,
{
    fn value(&self, p: &Point3) -> Result<Complex64> {
        self(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

/// `U(x, y, z) = Re or Im F(x + i y sin t + i z cos t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSolution {
    pub f: AnalyticFunction,
    pub t: Complex64,
    pub part: Part,
    sin_t: Complex64,
    cos_t: Complex64,
}

impl HarmonicSolution {
    pub fn new(f: AnalyticFunction, t: Complex64, part: Part) -> Self {
        let (sin_t, cos_t) = sin_cos(t);
        HarmonicSolution { f, t, part, sin_t, cos_t }
    }

    /// The complex argument `ξ = x + i y sin t + i z cos t`.
    pub fn argument(&self, p: &Point3) -> Complex64 {
        let i = Complex64::i();
        i * self.sin_t * p.y + i * self.cos_t * p.z + p.x
    }

    pub fn eval(&self, p: &Point3) -> Result<f64> {
        let v = self.f.eval(self.argument(p))?;
        Ok(match self.part {
            Part::Re => v.re,
            Part::Im => v.im,
        })
    }
}

impl ScalarField for HarmonicSolution {
    fn value(&self, p: &Point3) -> Result<Complex64> {
        Ok(Complex64::new(self.eval(p)?, 0.0))
    }
}

pub fn harmonic_solution(f: AnalyticFunction, t: Complex64, part: Part) -> HarmonicSolution {
    HarmonicSolution::new(f, t, part)
}

/// Residual of `|poly(b)|` used by callers that hold only coefficients.
pub fn poly_residual(poly: &[Complex64], b: Complex64) -> f64 {
    eval_poly(poly, b).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn quintic_triple() -> Triple {
        let i = Complex64::i();
        Triple::new(i, i, Complex64::from_polar(1.0, PI / 6.0), Complex64::from_polar(1.0, -PI / 6.0))
    }

    #[test]
    fn operator_validation() {
        assert!(PdeOperator::new(2, vec![Term::new(1, 0, 0, 1.0)]).is_err());
        assert!(PdeOperator::new(2, vec![Term::new(2, 0, 0, 1.0), Term::new(2, 0, 0, 2.0)]).is_err());
        assert!(PdeOperator::new(2, vec![Term::new(2, 0, 0, 0.0)]).is_err());
        assert!(PdeOperator::new(0, vec![]).is_err());
        assert!(PdeOperator::preset("laplace3d").is_some());
        assert!(PdeOperator::preset("heat").is_none());
    }

    #[test]
    fn char_element_cases() {
        let lap = PdeOperator::laplace3d();
        let t = laplace_triple(HarmonicParams { t: c(0.0, 0.0), tau: c(PI / 2.0, 0.0) }).unwrap();
        assert!(lap.char_element(&t).norm() <= 1e-14);

        let real = Triple::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        let el = lap.char_element(&real);
        assert_eq!(el, Quaternion::bicomplex(c(2.0, 0.0), c(2.0, 0.0)));

        assert!(PdeOperator::example5().char_element(&quintic_triple()).norm() <= 1e-12);
    }

    #[test]
    fn char_element_matches_algebra_powers() {
        let t = Triple::new(c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.1), c(0.0, 4.0));
        for op in [PdeOperator::laplace3d(), PdeOperator::example5()] {
            let mut via_algebra = Quaternion::ZERO;
            for term in op.terms() {
                let pw = t.i2().powi(term.beta).product(&t.i3().powi(term.gamma));
                via_algebra += pw.scale_real(term.c);
            }
            assert_eq!(op.char_element(&t), via_algebra);
        }
    }

    #[test]
    fn char_scalar_cases() {
        let lap = PdeOperator::laplace3d();
        assert_eq!(lap.char_scalar(c(0.0, 0.0), c(0.0, 1.0)), c(0.0, 0.0));
        assert_eq!(lap.char_scalar(c(0.0, 0.0), c(0.0, 0.0)), c(1.0, 0.0));
        let r = PdeOperator::example5().char_scalar(c(0.0, 1.0), Complex64::from_polar(1.0, PI / 6.0));
        assert!(r.norm() <= 1e-14);
    }

    #[test]
    fn p_scan_cases() {
        let s = PdeOperator::laplace3d().p_scan(10.0, 0.1).unwrap();
        assert_eq!(s.min_abs, 1.0);
        assert_eq!(s.argmin, (0.0, 0.0));

        let q = PdeOperator::example5();
        assert_eq!(q.p_polynomial(2.0, 3.0), 1.0 + 36.0 + 81.0);
        let s = q.p_scan(10.0, 0.1).unwrap();
        assert_eq!(s.min_abs, 1.0);
        assert_eq!(s.argmin.1, 0.0);

        let wave = PdeOperator::new(2, vec![Term::new(2, 0, 0, 1.0), Term::new(0, 2, 0, -1.0)]).unwrap();
        assert_eq!(wave.p_polynomial(1.0, 0.0), 0.0);
        assert!(wave.p_scan(10.0, 0.1).unwrap().min_abs <= 1e-12);
    }

    #[test]
    fn char_poly_cases() {
        let lap = PdeOperator::laplace3d();
        assert_eq!(lap.char_poly_in_b(c(0.0, 0.0)).unwrap(), vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let s = 0.6;
        let p = lap.char_poly_in_b(c(0.0, s)).unwrap();
        assert!((p[0] - c(1.0 - s * s, 0.0)).norm() < 1e-15);
        assert_eq!(p[2], c(1.0, 0.0));
        let q = PdeOperator::example5().char_poly_in_b(c(0.0, 1.0)).unwrap();
        assert_eq!(q, vec![c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);

        // no b-dependence and a zero constant column: ∂²/∂x∂y at a = 0
        let mixed = PdeOperator::new(2, vec![Term::new(1, 1, 0, 1.0)]).unwrap();
        assert_eq!(mixed.char_poly_in_b(c(0.0, 0.0)), Err(Error::DegeneratePolynomial));
    }

    #[test]
    fn solve_for_b_residuals() {
        let sol = PdeOperator::example5().solve_for_b(c(0.0, 1.0)).unwrap();
        assert_eq!(sol.roots.len(), 4);
        assert!(sol.roots.iter().all(|r| r.residual <= 1e-12));
    }

    #[test]
    fn assembled_quintic_triple_is_valid() {
        let pairs = [
            (c(0.0, 1.0), Complex64::from_polar(1.0, PI / 6.0)),
            (c(0.0, 1.0), Complex64::from_polar(1.0, -PI / 6.0)),
        ];
        let all = assemble_triples(&pairs);
        assert_eq!(all.len(), 4);
        let valid: Vec<_> = all.iter().filter(|(_, r)| r.is_valid()).collect();
        assert_eq!(valid.len(), 2);
        assert!(valid.iter().any(|(t, _)| *t == quintic_triple()));
    }

    #[test]
    fn laplace_triple_cases() {
        let t0 = laplace_triple(HarmonicParams { t: c(0.0, 0.0), tau: c(PI / 2.0, 0.0) }).unwrap();
        let expected = Triple::t0();
        assert!((t0.a1 - expected.a1).norm() < 1e-15);
        assert!((t0.a2 - expected.a2).norm() < 1e-15);
        assert!((t0.b1 - expected.b1).norm() < 1e-15);
        assert!((t0.b2 - expected.b2).norm() < 1e-15);

        let t = laplace_triple(HarmonicParams { t: c(0.3, 0.2), tau: c(1.1, -0.4) }).unwrap();
        assert!(PdeOperator::laplace3d().char_element(&t).norm() <= 1e-14);

        assert!(matches!(
            laplace_triple(HarmonicParams { t: c(0.5, 0.0), tau: c(0.5, 0.0) }),
            Err(Error::InvalidTriple(_))
        ));
    }

    #[test]
    fn stencils() {
        assert_eq!(stencil_1d(0), vec![(0, 1.0)]);
        assert_eq!(stencil_1d(1), vec![(-1, -0.5), (1, 0.5)]);
        assert_eq!(stencil_1d(2), vec![(-1, 1.0), (0, -2.0), (1, 1.0)]);
        // weights of the m-th difference annihilate polynomials of degree < m
        for m in 1..=5u32 {
            let w = stencil_1d(m);
            for deg in 0..m {
                let s: f64 = w.iter().map(|&(i, x)| x * (i as f64).powi(deg as i32)).sum();
                assert!(s.abs() < 1e-12, "m={m} deg={deg}");
            }
        }
    }

    #[test]
    fn harmonic_solution_examples() {
        let u = harmonic_solution(AnalyticFunction::monomial(2), c(0.0, 0.0), Part::Re);
        let p = Point3::new(0.3, -0.7, 0.4);
        assert!((u.eval(&p).unwrap() - (0.09 - 0.16)).abs() < 1e-15);

        let t = c(0.3, 0.2);
        let lin = harmonic_solution(AnalyticFunction::identity(), t, Part::Re);
        let (s, co) = sin_cos(t);
        let expected = p.x - p.y * s.im - p.z * co.im;
        assert!((lin.eval(&p).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn fd_laplacian_examples() {
        let lap = PdeOperator::laplace3d();
        let h = 1e-3;
        let u = |q: &Point3| Ok(c(q.x * q.x - q.z * q.z, 0.0));
        let p = Point3::new(0.3, -0.2, 0.5);
        assert!(lap.apply_fd(&u, &p, h).unwrap().norm() <= 1e-9);
        let x2 = |q: &Point3| Ok(c(q.x * q.x, 0.0));
        assert!((lap.apply_fd(&x2, &p, h).unwrap() - 2.0).norm() <= 1e-9);

        let cube = harmonic_solution(AnalyticFunction::monomial(3), c(0.3, 0.2), Part::Re);
        assert!(lap.apply_fd(&cube, &p, h).unwrap().norm() <= 1e-8);
    }

    #[test]
    fn residual_formula_zero_cases() {
        let lap = PdeOperator::laplace3d();
        let t = laplace_triple(HarmonicParams { t: c(0.3, 0.2), tau: c(1.1, -0.4) }).unwrap();
        let m = GMonogenicMap::new(
            Side::Right,
            t,
            [
                AnalyticFunction::monomial(4),
                AnalyticFunction::exp(),
                AnalyticFunction::monomial(3),
                AnalyticFunction::sin(c(1.0, 0.0)),
            ],
        )
        .unwrap();
        let p = Point3::new(0.2, 0.1, -0.3);
        assert!(lap.residual_via_formula(&m, &p).unwrap().norm() <= 1e-13);

        let k = Quaternion::new(c(1.0, 0.0), c(0.0, 1.0), c(2.0, 2.0), c(-1.0, 0.0));
        let constant = GMonogenicMap::constant(Side::Left, Triple::t0(), &k).unwrap();
        for op in [PdeOperator::laplace3d(), PdeOperator::example5()] {
            assert_eq!(op.residual_via_formula(&constant, &p).unwrap(), Quaternion::ZERO);
        }
    }
}
