//! Complexified quaternions `H(C)` in the idempotent basis `{e1, e2, e3, e4}`.
//!
//! Multiplication table of the basis:
//!
//! | ·  | e1 | e2 | e3 | e4 |
//! |----|----|----|----|----|
//! | e1 | e1 | 0  | e3 | 0  |
//! | e2 | 0  | e2 | 0  | e4 |
//! | e3 | 0  | e3 | 0  | e1 |
//! | e4 | e4 | 0  | e2 | 0  |
//!
//! The unit is `e1 + e2`. The algebra is isomorphic to 2×2 complex matrices
//! via `e1 ↦ E11`, `e2 ↦ E22`, `e3 ↦ E12`, `e4 ↦ E21`, which is the model used
//! by the inverse and by the test oracles.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default absolute equality tolerance for unit-scale data.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Relative threshold used by [`Quaternion::inverse`].
pub const INVERSE_REL_TOL: f64 = 1e-14;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// An element `a1 e1 + a2 e2 + a3 e3 + a4 e4` of `H(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub e: [Complex64; 4],
}

/// The same element written in the classical basis `{1, I, J, K}`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IjkQuaternion {
    pub q: [Complex64; 4],
}

/// The four maximal one-sided ideals of `H(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ideal {
    /// Right ideal `span{e2, e4}`.
    I1,
    /// Right ideal `span{e1, e3}`.
    I2,
    /// Left ideal `span{e2, e3}`.
    HatI1,
    /// Left ideal `span{e1, e4}`.
    HatI2,
}

impl Ideal {
    /// Indices (0-based) of the coefficients that must vanish for membership.
    fn complement(self) -> [usize; 2] {
        match self {
            Ideal::I1 => [0, 2],
            Ideal::I2 => [1, 3],
            Ideal::HatI1 => [0, 3],
            Ideal::HatI2 => [1, 2],
        }
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { e: [ZERO; 4] };
    pub const ONE: Quaternion = Quaternion { e: [ONE, ONE, ZERO, ZERO] };
    pub const E1: Quaternion = Quaternion { e: [ONE, ZERO, ZERO, ZERO] };
    pub const E2: Quaternion = Quaternion { e: [ZERO, ONE, ZERO, ZERO] };
    pub const E3: Quaternion = Quaternion { e: [ZERO, ZERO, ONE, ZERO] };
    pub const E4: Quaternion = Quaternion { e: [ZERO, ZERO, ZERO, ONE] };

    pub fn new(a1: Complex64, a2: Complex64, a3: Complex64, a4: Complex64) -> Self {
        Quaternion { e: [a1, a2, a3, a4] }
    }

    /// Basis element `e_k`, `k` in `1..=4`.
    pub fn basis(k: usize) -> Self {
        assert!((1..=4).contains(&k), "basis index must be in 1..=4, got {k}");
        let mut e = [ZERO; 4];
        e[k - 1] = ONE;
        Quaternion { e }
    }

    /// Scalar multiple of the unit, `c·(e1 + e2)`.
    pub fn scalar(c: Complex64) -> Self {
        Quaternion::new(c, c, ZERO, ZERO)
    }

    /// Element `ξ1 e1 + ξ2 e2` of the commutative (bicomplex) subalgebra.
    pub fn bicomplex(xi1: Complex64, xi2: Complex64) -> Self {
        Quaternion::new(xi1, xi2, ZERO, ZERO)
    }

    pub fn a1(&self) -> Complex64 {
        self.e[0]
    }
    pub fn a2(&self) -> Complex64 {
        self.e[1]
    }
    pub fn a3(&self) -> Complex64 {
        self.e[2]
    }
    pub fn a4(&self) -> Complex64 {
        self.e[3]
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Product under the multiplication table of the idempotent basis.
    pub fn product(&self, b: &Quaternion) -> Quaternion {
        let [a1, a2, a3, a4] = self.e;
        let [b1, b2, b3, b4] = b.e;
        Quaternion::new(
            a1 * b1 + a3 * b4,
            a2 * b2 + a4 * b3,
            a1 * b3 + a3 * b2,
            a2 * b4 + a4 * b1,
        )
    }

    pub fn scale(&self, c: Complex64) -> Quaternion {
        Quaternion { e: self.e.map(|x| x * c) }
    }

    pub fn scale_real(&self, s: f64) -> Quaternion {
        Quaternion { e: self.e.map(|x| x * s) }
    }

    /// Euclidean norm `sqrt(Σ |a_k|²)`.
    pub fn norm(&self) -> f64 {
        self.e.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Determinant of the 2×2 matrix image, `a1 a2 - a3 a4`.
    pub fn det(&self) -> Complex64 {
        self.a1() * self.a2() - self.a3() * self.a4()
    }

    /// Two-sided inverse; fails on zero divisors.
    ///
    /// An element is declared singular when `|a1 a2 - a3 a4| <= 1e-14 (1 + ‖a‖²)`.
    pub fn inverse(&self) -> Result<Quaternion> {
        let tol = INVERSE_REL_TOL * (1.0 + self.norm().powi(2));
        self.inverse_with_tol(tol)
    }

    pub fn inverse_with_tol(&self, tol: f64) -> Result<Quaternion> {
        let det = self.det();
        if det.norm() <= tol {
            return Err(Error::Singular { det: det.norm(), tol });
        }
        let inv = det.inv();
        Ok(Quaternion::new(
            self.a2() * inv,
            self.a1() * inv,
            -self.a3() * inv,
            -self.a4() * inv,
        ))
    }

    /// Integer power by repeated multiplication; `a^0 = 1`.
    pub fn powi(&self, n: u32) -> Quaternion {
        (0..n).fold(Quaternion::ONE, |acc, _| acc.product(self))
    }

    /// `f1(a) = a1 + a3`, annihilates `I1`, right-multiplicative on `E3`.
    pub fn f1(&self) -> Complex64 {
        self.a1() + self.a3()
    }

    /// `f2(a) = a2 + a4`, annihilates `I2`.
    pub fn f2(&self) -> Complex64 {
        self.a2() + self.a4()
    }

    /// `f̂1(a) = a1 + a4`, annihilates `Î1`, left-multiplicative on `E3`.
    pub fn fhat1(&self) -> Complex64 {
        self.a1() + self.a4()
    }

    /// `f̂2(a) = a2 + a3`, annihilates `Î2`.
    pub fn fhat2(&self) -> Complex64 {
        self.a2() + self.a3()
    }

    /// Splits `a = e2·a + e1·a` into its `I1` and `I2` parts (right ideals).
    pub fn ideal_split(&self) -> (Quaternion, Quaternion) {
        (Quaternion::E2.product(self), Quaternion::E1.product(self))
    }

    /// Splits `a = a·e2 + a·e1` into its `Î1` and `Î2` parts (left ideals).
    pub fn ideal_split_left(&self) -> (Quaternion, Quaternion) {
        (self.product(&Quaternion::E2), self.product(&Quaternion::E1))
    }

    /// Membership test: the coefficients outside the ideal have modulus `<= tol`.
    pub fn in_ideal(&self, which: Ideal, tol: f64) -> bool {
        which.complement().iter().all(|&k| self.e[k].norm() <= tol)
    }

    pub fn to_ijk(&self) -> IjkQuaternion {
        let [a1, a2, a3, a4] = self.e;
        IjkQuaternion {
            q: [
                (a1 + a2) * 0.5,
                I * (a1 - a2) * 0.5,
                I * (a3 + a4) * 0.5,
                (a4 - a3) * 0.5,
            ],
        }
    }

    pub fn from_ijk(q: &IjkQuaternion) -> Quaternion {
        let [q0, q1, q2, q3] = q.q;
        Quaternion::new(q0 - I * q1, q0 + I * q1, -I * q2 - q3, -I * q2 + q3)
    }

    /// Largest coefficient-wise distance to `other`.
    pub fn max_abs_diff(&self, other: &Quaternion) -> f64 {
        self.e
            .iter()
            .zip(other.e.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Quaternion, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

impl IjkQuaternion {
    pub fn new(q0: Complex64, q1: Complex64, q2: Complex64, q3: Complex64) -> Self {
        IjkQuaternion { q: [q0, q1, q2, q3] }
    }

    pub fn one() -> Self {
        IjkQuaternion::new(ONE, ZERO, ZERO, ZERO)
    }
    pub fn unit_i() -> Self {
        IjkQuaternion::new(ZERO, ONE, ZERO, ZERO)
    }
    pub fn unit_j() -> Self {
        IjkQuaternion::new(ZERO, ZERO, ONE, ZERO)
    }
    pub fn unit_k() -> Self {
        IjkQuaternion::new(ZERO, ZERO, ZERO, ONE)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(rhs.e) {
            *x += y;
        }
        Quaternion { e }
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self + (-rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { e: self.e.map(|x| -x) }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        self.product(&rhs)
    }
}

impl Mul<Complex64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Complex64) -> Quaternion {
        self.scale(rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale_real(rhs)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.e.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i)e{}", c.re, c.im, k + 1)?;
        }
        Ok(())
    }
}
