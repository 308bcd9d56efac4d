//! The real three-dimensional subspace `E3 = span_R{1, i2, i3}` of `H(C)`.
//!
//! A [`Triple`] fixes `i2 = a1 e1 + a2 e2` and `i3 = b1 e1 + b2 e2`; a point
//! `(x, y, z)` maps to `ζ = x + y i2 + z i3 = ξ1 e1 + ξ2 e2` with
//! `ξk = x + y a_k + z b_k`.
//!
//! The representation formulas for monogenic maps are valid on domains convex
//! in the directions of the singular lines `L1`, `L2`. That hypothesis is not
//! checked here: canonical maps are evaluated wherever their component
//! functions are defined.

use num_complex::Complex64;

use crate::qalg::Quaternion;

/// Threshold on `|Im|` for a coefficient to count as non-real.
pub const NONREAL_TOL: f64 = 1e-12;

/// Relative threshold on the 3×3 minors in the independence test.
pub const INDEPENDENCE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple {
    pub a1: Complex64,
    pub a2: Complex64,
    pub b1: Complex64,
    pub b2: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Which spectral character / singular line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    L1,
    L2,
}

/// Outcome of [`Triple::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct TripleReport {
    /// `{1, i2, i3}` linearly independent over the reals.
    pub independent: bool,
    /// Largest 3×3 minor of the real coordinate matrix, divided by the
    /// product of the row norms.
    pub independence_measure: f64,
    /// `f1(E3) = C`: at least one of `a1, b1` is non-real.
    pub surjective_1: bool,
    /// `f2(E3) = C`: at least one of `a2, b2` is non-real.
    pub surjective_2: bool,
}

impl TripleReport {
    pub fn is_valid(&self) -> bool {
        self.independent && self.surjective_1 && self.surjective_2
    }

    /// Human-readable reasons for rejection; empty when valid.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.independent {
            out.push(format!(
                "1, i2, i3 are linearly dependent over R (measure {:e})",
                self.independence_measure
            ));
        }
        if !self.surjective_1 {
            out.push("a1 and b1 are both real, so f1(E3) != C".to_string());
        }
        if !self.surjective_2 {
            out.push("a2 and b2 are both real, so f2(E3) != C".to_string());
        }
        out
    }
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn offset(&self, d: &Point3, s: f64) -> Point3 {
        Point3::new(self.x + s * d.x, self.y + s * d.y, self.z + s * d.z)
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(v: [f64; 3]) -> Self {
        Point3::new(v[0], v[1], v[2])
    }
}

impl Triple {
    pub fn new(a1: Complex64, a2: Complex64, b1: Complex64, b2: Complex64) -> Self {
        Triple { a1, a2, b1, b2 }
    }

    /// `T0`: `i2 = i e2`, `i3 = i e1` (`a1 = 0, b1 = i, a2 = i, b2 = 0`).
    pub fn t0() -> Self {
        let i = Complex64::i();
        let z = Complex64::new(0.0, 0.0);
        Triple::new(z, i, i, z)
    }

    pub fn i2(&self) -> Quaternion {
        Quaternion::bicomplex(self.a1, self.a2)
    }

    pub fn i3(&self) -> Quaternion {
        Quaternion::bicomplex(self.b1, self.b2)
    }

    /// Coefficients `(a_k, b_k)` of the `k`-th spectral character.
    pub fn pair(&self, line: Line) -> (Complex64, Complex64) {
        match line {
            Line::L1 => (self.a1, self.b1),
            Line::L2 => (self.a2, self.b2),
        }
    }

    pub fn xi(&self, p: &Point3) -> (Complex64, Complex64) {
        (self.xi_k(Line::L1, p), self.xi_k(Line::L2, p))
    }

    pub fn xi_k(&self, line: Line, p: &Point3) -> Complex64 {
        let (a, b) = self.pair(line);
        a * p.y + b * p.z + p.x
    }

    /// `ζ = x + y i2 + z i3`.
    pub fn zeta(&self, p: &Point3) -> Quaternion {
        let (xi1, xi2) = self.xi(p);
        Quaternion::bicomplex(xi1, xi2)
    }

    /// Whether `ζ(p)` lies on the line `L_k` where `ξ_k` vanishes.
    pub fn on_singular_line(&self, p: &Point3, line: Line, tol: f64) -> bool {
        self.xi_k(line, p).norm() <= tol
    }

    /// A nonzero real direction spanning `L_k`, i.e. `ξ_k(d) = 0`.
    ///
    /// Requires `(Im a_k, Im b_k) != 0`, which holds for surjective triples.
    pub fn singular_line_direction(&self, line: Line) -> Point3 {
        let (a, b) = self.pair(line);
        let y = b.im;
        let z = -a.im;
        let x = -(y * a.re + z * b.re);
        Point3::new(x, y, z)
    }

    /// Rows `1, i2, i3` written as real 4-vectors `(Re c1, Im c1, Re c2, Im c2)`.
    fn real_rows(&self) -> [[f64; 4]; 3] {
        [
            [1.0, 0.0, 1.0, 0.0],
            [self.a1.re, self.a1.im, self.a2.re, self.a2.im],
            [self.b1.re, self.b1.im, self.b2.re, self.b2.im],
        ]
    }

    /// Independence via all four 3×3 minors of the real 3×4 coordinate
    /// matrix, plus the per-pair non-real test.
    pub fn validate(&self) -> TripleReport {
        let rows = self.real_rows();
        let scale: f64 = rows
            .iter()
            .map(|r| r.iter().map(|v| v * v).sum::<f64>().sqrt())
            .product();
        let mut max_minor = 0.0f64;
        for skip in 0..4 {
            let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            let m = |r: usize, c: usize| rows[r][cols[c]];
            let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
            max_minor = max_minor.max(det.abs());
        }
        let measure = if scale > 0.0 { max_minor / scale } else { 0.0 };
        let nonreal = |c: Complex64| c.im.abs() > NONREAL_TOL;
        TripleReport {
            independent: measure > INDEPENDENCE_TOL,
            independence_measure: measure,
            surjective_1: nonreal(self.a1) || nonreal(self.b1),
            surjective_2: nonreal(self.a2) || nonreal(self.b2),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn t0_point_values() {
        let t = Triple::t0();
        let p = Point3::new(1.0, 2.0, 3.0);
        assert_eq!(t.xi(&p), (c(1.0, 3.0), c(1.0, 2.0)));
        let zeta = t.zeta(&p);
        assert_eq!(zeta, Quaternion::bicomplex(c(1.0, 3.0), c(1.0, 2.0)));
        assert!((zeta.norm() - 15f64.sqrt()).abs() < 1e-14);
        assert_eq!(zeta.f1(), c(1.0, 3.0));
        assert_eq!(zeta.f2(), c(1.0, 2.0));
    }

    #[test]
    fn unit_point_is_one() {
        let t = Triple::new(c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.1), c(0.0, 4.0));
        assert_eq!(t.zeta(&Point3::new(1.0, 0.0, 0.0)), Quaternion::ONE);
        assert_eq!(t.xi(&Point3::default()), (c(0.0, 0.0), c(0.0, 0.0)));
    }

    #[test]
    fn singular_lines() {
        let t = Triple::t0();
        assert!(t.on_singular_line(&Point3::default(), Line::L1, 0.0));
        assert!(t.on_singular_line(&Point3::default(), Line::L2, 0.0));
        assert!(t.on_singular_line(&Point3::new(0.0, 5.0, 0.0), Line::L1, 1e-12));
        assert!(!t.on_singular_line(&Point3::new(1.0, 2.0, 3.0), Line::L1, 1e-12));
        assert!((t.xi_k(Line::L1, &Point3::new(1.0, 2.0, 3.0)).norm() - 10f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn singular_direction_annihilates_xi() {
        let t = Triple::new(c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.1), c(0.0, 4.0));
        for line in [Line::L1, Line::L2] {
            let d = t.singular_line_direction(line);
            assert!(d.to_array().iter().any(|v| v.abs() > 0.0));
            assert!(t.xi_k(line, &d).norm() < 1e-14);
        }
    }

    #[test]
    fn validation_cases() {
        assert!(Triple::t0().is_valid());

        let real = Triple::new(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0));
        let r = real.validate();
        assert!(!r.surjective_1 && !r.surjective_2);
        assert!(!r.is_valid());

        let t: f64 = 0.7;
        let (s, co) = (t.sin(), t.cos());
        let dep = Triple::new(c(0.0, s), c(0.0, s), c(0.0, co), c(0.0, co));
        let r = dep.validate();
        assert!(!r.independent);
        assert!(r.surjective_1 && r.surjective_2);
        assert_eq!(r.problems().len(), 1);
    }

    #[test]
    fn invertibility_matches_singular_lines() {
        let t = Triple::t0();
        let on_line = Point3::new(0.0, 5.0, 0.0);
        assert!(t.zeta(&on_line).inverse().is_err());
        assert!(t.zeta(&Point3::new(1.0, 2.0, 3.0)).inverse().is_ok());
    }
}
