//! Analytic functions of one complex variable, closed under differentiation.
//!
//! These are the scalar ingredients `F1..F4` of canonical monogenic maps and
//! the `F` of harmonic solutions. `sin` and `cos` are built from exponentials,
//! so every supported function has an exact derivative of every order inside
//! the same family.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Maximum nesting depth of linear combinations.
pub const MAX_DEPTH: usize = 8;

/// Power series are only evaluated on `|w - center| <= DOMAIN_FRACTION * radius`.
pub const DOMAIN_FRACTION: f64 = 0.9;

/// Term cap for power-series summation.
pub const MAX_SERIES_TERMS: usize = 512;

const SERIES_TAIL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticFunction {
    /// `Σ c_k w^k`, coefficients in ascending degree.
    Polynomial(Vec<Complex64>),
    /// `Σ c_k (w - center)^k`, convergent for `|w - center| < radius`.
    PowerSeries {
        center: Complex64,
        coeffs: Vec<Complex64>,
        radius: f64,
    },
    /// `w ↦ amplitude · exp(rate · w)`.
    ExpScaled { amplitude: Complex64, rate: Complex64 },
    /// `Σ weight · f`.
    LinearCombination(Vec<(Complex64, AnalyticFunction)>),
}

fn trim(mut coeffs: Vec<Complex64>) -> Vec<Complex64> {
    while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
        coeffs.pop();
    }
    coeffs
}

fn convolve(a: &[Complex64], b: &[Complex64], limit: usize) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(limit);
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < len {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Re-expand `Σ c_k w^k` around `center` (repeated synthetic division).
fn taylor_shift(coeffs: &[Complex64], center: Complex64) -> Vec<Complex64> {
    let mut work = coeffs.to_vec();
    let n = work.len();
    for k in 0..n {
        for j in (k..n - 1).rev() {
            let next = work[j + 1];
            work[j] += center * next;
        }
    }
    work
}

impl AnalyticFunction {
    /// Polynomial with trailing zero coefficients removed.
    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        AnalyticFunction::Polynomial(trim(coeffs))
    }

    pub fn zero() -> Self {
        AnalyticFunction::Polynomial(Vec::new())
    }

    pub fn constant(c: Complex64) -> Self {
        AnalyticFunction::polynomial(vec![c])
    }

    /// `w ↦ w`.
    pub fn identity() -> Self {
        AnalyticFunction::polynomial(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
    }

    /// `w ↦ w^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        AnalyticFunction::Polynomial(coeffs)
    }

    pub fn exp_scaled(amplitude: Complex64, rate: Complex64) -> Self {
        AnalyticFunction::ExpScaled { amplitude, rate }
    }

    /// `exp(w)`.
    pub fn exp() -> Self {
        AnalyticFunction::exp_scaled(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// `sin(λw) = (e^{iλw} - e^{-iλw}) / (2i)`.
    pub fn sin(lambda: Complex64) -> Self {
        let i = Complex64::i();
        let half_over_i = Complex64::new(0.0, -0.5);
        AnalyticFunction::LinearCombination(vec![
            (half_over_i, AnalyticFunction::exp_scaled(1.0.into(), i * lambda)),
            (-half_over_i, AnalyticFunction::exp_scaled(1.0.into(), -i * lambda)),
        ])
    }

    /// `cos(λw) = (e^{iλw} + e^{-iλw}) / 2`.
    pub fn cos(lambda: Complex64) -> Self {
        let i = Complex64::i();
        let half = Complex64::new(0.5, 0.0);
        AnalyticFunction::LinearCombination(vec![
            (half, AnalyticFunction::exp_scaled(1.0.into(), i * lambda)),
            (half, AnalyticFunction::exp_scaled(1.0.into(), -i * lambda)),
        ])
    }

    pub fn power_series(center: Complex64, coeffs: Vec<Complex64>, radius: f64) -> Result<Self> {
        let f = AnalyticFunction::PowerSeries { center, coeffs, radius };
        f.validate()?;
        Ok(f)
    }

    pub fn linear_combination(terms: Vec<(Complex64, AnalyticFunction)>) -> Result<Self> {
        let f = AnalyticFunction::LinearCombination(terms);
        f.validate()?;
        Ok(f)
    }

    /// Nesting depth; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            AnalyticFunction::LinearCombination(terms) => {
                1 + terms.iter().map(|(_, f)| f.depth()).max().unwrap_or(0)
            }
            _ => 0,
        }
    }

    /// Checks the representation invariants.
    pub fn validate(&self) -> Result<()> {
        if self.depth() > MAX_DEPTH {
            return Err(Error::InvalidFunction(format!(
                "linear combinations nested deeper than {MAX_DEPTH}"
            )));
        }
        self.validate_leaves()
    }

    fn validate_leaves(&self) -> Result<()> {
        let finite = |c: &Complex64| c.re.is_finite() && c.im.is_finite();
        match self {
            AnalyticFunction::Polynomial(coeffs) => {
                if !coeffs.iter().all(finite) {
                    return Err(Error::InvalidFunction("non-finite polynomial coefficient".into()));
                }
                if coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
                    return Err(Error::InvalidFunction(
                        "polynomial has a zero leading coefficient".into(),
                    ));
                }
            }
            AnalyticFunction::PowerSeries { center, coeffs, radius } => {
                if !(radius.is_finite() && *radius > 0.0) {
                    return Err(Error::InvalidFunction(format!(
                        "power series radius must be positive and finite, got {radius}"
                    )));
                }
                if !finite(center) || !coeffs.iter().all(finite) {
                    return Err(Error::InvalidFunction("non-finite power series data".into()));
                }
            }
            AnalyticFunction::ExpScaled { amplitude, rate } => {
                if !finite(amplitude) || !finite(rate) {
                    return Err(Error::InvalidFunction("non-finite exponential parameters".into()));
                }
            }
            AnalyticFunction::LinearCombination(terms) => {
                for (w, f) in terms {
                    if !finite(w) {
                        return Err(Error::InvalidFunction("non-finite weight".into()));
                    }
                    f.validate_leaves()?;
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, w: Complex64) -> Result<Complex64> {
        match self {
            AnalyticFunction::Polynomial(coeffs) => Ok(coeffs
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, c| acc * w + c)),
            AnalyticFunction::PowerSeries { center, coeffs, radius } => {
                eval_series(*center, coeffs, *radius, w)
            }
            AnalyticFunction::ExpScaled { amplitude, rate } => Ok(amplitude * (rate * w).exp()),
            AnalyticFunction::LinearCombination(terms) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (weight, f) in terms {
                    acc += weight * f.eval(w)?;
                }
                Ok(acc)
            }
        }
    }

    /// Exact first derivative in the same representation family.
    pub fn derivative1(&self) -> AnalyticFunction {
        match self {
            AnalyticFunction::Polynomial(coeffs) => AnalyticFunction::polynomial(
                coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * k as f64)
                    .collect(),
            ),
            AnalyticFunction::PowerSeries { center, coeffs, radius } => {
                AnalyticFunction::PowerSeries {
                    center: *center,
                    coeffs: coeffs
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(k, c)| c * k as f64)
                        .collect(),
                    radius: *radius,
                }
            }
            AnalyticFunction::ExpScaled { amplitude, rate } => AnalyticFunction::ExpScaled {
                amplitude: amplitude * rate,
                rate: *rate,
            },
            AnalyticFunction::LinearCombination(terms) => AnalyticFunction::LinearCombination(
                terms.iter().map(|(w, f)| (*w, f.derivative1())).collect(),
            ),
        }
    }

    /// Exact `k`-th derivative (`k = 0` returns a clone).
    pub fn derivative(&self, k: usize) -> AnalyticFunction {
        (0..k).fold(self.clone(), |f, _| f.derivative1())
    }

    /// True when the representation is the zero function.
    pub fn is_structurally_zero(&self) -> bool {
        let zero = Complex64::new(0.0, 0.0);
        match self {
            AnalyticFunction::Polynomial(coeffs) => coeffs.iter().all(|c| *c == zero),
            AnalyticFunction::PowerSeries { coeffs, .. } => coeffs.iter().all(|c| *c == zero),
            AnalyticFunction::ExpScaled { amplitude, .. } => *amplitude == zero,
            AnalyticFunction::LinearCombination(terms) => terms
                .iter()
                .all(|(w, f)| *w == zero || f.is_structurally_zero()),
        }
    }

    /// Smallest power-series disc occurring in the representation, if any.
    /// `None` means the function is entire.
    pub fn domain_disc(&self) -> Option<(Complex64, f64)> {
        match self {
            AnalyticFunction::PowerSeries { center, radius, .. } => Some((*center, *radius)),
            AnalyticFunction::LinearCombination(terms) => terms
                .iter()
                .filter_map(|(_, f)| f.domain_disc())
                .min_by(|a, b| a.1.total_cmp(&b.1)),
            _ => None,
        }
    }

    /// Symbolic product, when it stays inside the family.
    pub fn product(&self, other: &AnalyticFunction) -> Result<AnalyticFunction> {
        use AnalyticFunction::*;
        if self.is_structurally_zero() || other.is_structurally_zero() {
            return Ok(AnalyticFunction::zero());
        }
        match (self, other) {
            (LinearCombination(terms), g) => Ok(LinearCombination(
                terms
                    .iter()
                    .map(|(w, f)| Ok((*w, f.product(g)?)))
                    .collect::<Result<_>>()?,
            )),
            (f, LinearCombination(terms)) => Ok(LinearCombination(
                terms
                    .iter()
                    .map(|(w, g)| Ok((*w, f.product(g)?)))
                    .collect::<Result<_>>()?,
            )),
            (Polynomial(a), Polynomial(b)) => {
                Ok(AnalyticFunction::polynomial(convolve(a, b, usize::MAX)))
            }
            (ExpScaled { amplitude: a1, rate: r1 }, ExpScaled { amplitude: a2, rate: r2 }) => {
                Ok(ExpScaled { amplitude: a1 * a2, rate: r1 + r2 })
            }
            (
                PowerSeries { center: c1, coeffs: k1, radius: r1 },
                PowerSeries { center: c2, coeffs: k2, radius: r2 },
            ) => {
                if c1 != c2 {
                    return Err(Error::NotRepresentable(
                        "power series with different centers".into(),
                    ));
                }
                Ok(PowerSeries {
                    center: *c1,
                    coeffs: convolve(k1, k2, MAX_SERIES_TERMS),
                    radius: r1.min(*r2),
                })
            }
            (Polynomial(p), PowerSeries { center, coeffs, radius })
            | (PowerSeries { center, coeffs, radius }, Polynomial(p)) => {
                let shifted = taylor_shift(p, *center);
                Ok(PowerSeries {
                    center: *center,
                    coeffs: convolve(&shifted, coeffs, MAX_SERIES_TERMS),
                    radius: *radius,
                })
            }
            _ => Err(Error::NotRepresentable(
                "product of an exponential with a polynomial or power series".into(),
            )),
        }
    }
}

fn eval_series(
    center: Complex64,
    coeffs: &[Complex64],
    radius: f64,
    w: Complex64,
) -> Result<Complex64> {
    let z = w - center;
    let dist = z.norm();
    let limit = DOMAIN_FRACTION * radius;
    if dist > limit {
        return Err(Error::OutOfDomain {
            re: w.re,
            im: w.im,
            reason: format!("|w - center| = {dist} exceeds {DOMAIN_FRACTION} * radius = {limit}"),
        });
    }
    let ratio = dist / radius;
    // Cauchy-type envelope over the summed terms: |c_k| <= envelope / radius^k
    let mut envelope = 0.0f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut scale = 1.0f64;
    for c in coeffs.iter().take(MAX_SERIES_TERMS) {
        sum += c * power;
        envelope = envelope.max(c.norm() * scale);
        power *= z;
        scale *= radius;
    }
    if coeffs.len() > MAX_SERIES_TERMS {
        let bound = envelope * ratio.powi(MAX_SERIES_TERMS as i32) / (1.0 - ratio);
        if bound > SERIES_TAIL_TOL * sum.norm().max(1.0) {
            return Err(Error::OutOfDomain {
                re: w.re,
                im: w.im,
                reason: format!(
                    "series truncated at {MAX_SERIES_TERMS} terms with tail bound {bound:e}"
                ),
            });
        }
    }
    Ok(sum)
}
