//! Lévy exponents, numerically inverted innovation pdfs, and potential functions.
//!
//! A prior is the log-characteristic function f(ω) of the white innovation
//! driving the signal model. Observing the innovation through a sampled spline
//! window turns f into the exponent of the discrete innovation by quadrature;
//! inverting exp(f) numerically yields the first-order pdf, and the potential
//! is its negative logarithm, normalized so Φ(0) = 0. Constants and leading
//! factors are dropped throughout: regularization strength comes from λ alone.

use std::f64::consts::PI;

use thiserror::Error;

/// exp(f(Ω)) must fall below this before the inversion integral is truncated.
const DECAY_THRESHOLD: f64 = 1e-12;
/// Hard cap on the truncation frequency; exceeding it is a typed error.
const OMEGA_CAP: f64 = 1e6;
/// Uniform quadrature nodes cover [0, min(Ω, CORE_LIMIT)].
const CORE_LIMIT: f64 = 64.0;
const CORE_INTERVALS: usize = 16_384;
/// Logarithmic node density beyond the core, for slowly decaying exponents.
const TAIL_PER_DECADE: usize = 1024;
/// Synthesized densities this far below zero are clamped; anything lower is an error.
const NEG_CLAMP: f64 = -1e-9;

#[derive(Debug, Error)]
pub enum PriorError {
    #[error("invalid prior parameter: {0}")]
    InvalidParameter(String),
    #[error("omega {omega} outside tabulated grid [-{max}, {max}]")]
    OutOfDomain { omega: f64, max: f64 },
    #[error("no scalar exponent for Student's family with r != 1/2; only the potential is available")]
    UnsupportedExponent,
    #[error("window must contain at least two samples")]
    EmptyWindow,
    #[error("characteristic function does not decay below {DECAY_THRESHOLD:e} at omega = {OMEGA_CAP:e}")]
    NonDecayingCharacteristic,
    #[error("invalid pdf grid: {0}")]
    InvalidGrid(String),
    #[error("synthesized density is {value:e} at u = {u}; inversion failed")]
    NegativeDensity { u: f64, value: f64 },
    #[error("density vanishes inside the table at x = {x}; increase n or u_max")]
    InfinitePotential { x: f64 },
    #[error("no closed-form potential for this family; synthesize the pdf instead")]
    UnsupportedClosedForm,
}

/// A Lévy exponent family with parameters; the statistical identity of the innovation.
///
/// Every built-in exponent is real, even, and vanishes at the origin.
#[derive(Debug, Clone, PartialEq)]
pub enum PriorModel {
    /// f(ω) = -½σ₀²ω²
    Gaussian { sigma0: f64 },
    /// f(ω) = log(τ²/(τ²+ω²))
    Laplace { tau: f64 },
    /// Student's with scale ε and exponent r; the scalar exponent (and hence
    /// pdf synthesis) is only available for r = 1/2, which is the Cauchy case.
    Student { epsilon: f64, r: f64 },
    /// f(ω) = -s₀|ω|
    Cauchy { s0: f64 },
    /// f(ω) = -s₀|ω|^α with α ∈ [1, 2]
    AlphaStable { alpha: f64, s0: f64 },
    /// Exponent sampled uniformly on [0, ω_max], extended evenly.
    Tabulated { omega_max: f64, values: Vec<f64> },
}

impl PriorModel {
    pub fn gaussian(sigma0: f64) -> Result<Self, PriorError> {
        let m = PriorModel::Gaussian { sigma0 };
        m.validate()?;
        Ok(m)
    }

    pub fn laplace(tau: f64) -> Result<Self, PriorError> {
        let m = PriorModel::Laplace { tau };
        m.validate()?;
        Ok(m)
    }

    pub fn student(epsilon: f64) -> Result<Self, PriorError> {
        let m = PriorModel::Student { epsilon, r: 0.5 };
        m.validate()?;
        Ok(m)
    }

    pub fn cauchy(s0: f64) -> Result<Self, PriorError> {
        let m = PriorModel::Cauchy { s0 };
        m.validate()?;
        Ok(m)
    }

    pub fn alpha_stable(alpha: f64, s0: f64) -> Result<Self, PriorError> {
        let m = PriorModel::AlphaStable { alpha, s0 };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), PriorError> {
        let positive = |v: f64, what: &str| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(PriorError::InvalidParameter(format!("{what} must be positive, got {v}")))
            }
        };
        match self {
            PriorModel::Gaussian { sigma0 } => positive(*sigma0, "sigma0"),
            PriorModel::Laplace { tau } => positive(*tau, "tau"),
            PriorModel::Student { epsilon, r } => {
                positive(*epsilon, "epsilon")?;
                positive(*r, "r")
            }
            PriorModel::Cauchy { s0 } => positive(*s0, "s0"),
            PriorModel::AlphaStable { alpha, s0 } => {
                positive(*s0, "s0")?;
                if (1.0..=2.0).contains(alpha) {
                    Ok(())
                } else {
                    Err(PriorError::InvalidParameter(format!(
                        "alpha must lie in [1, 2], got {alpha}"
                    )))
                }
            }
            PriorModel::Tabulated { omega_max, values } => {
                positive(*omega_max, "omega_max")?;
                if values.len() < 2 {
                    return Err(PriorError::InvalidParameter(
                        "tabulated exponent needs at least two samples".into(),
                    ));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(PriorError::InvalidParameter(
                        "tabulated exponent contains non-finite samples".into(),
                    ));
                }
                if values[0].abs() > 1e-12 {
                    return Err(PriorError::InvalidParameter(
                        "tabulated exponent must vanish at the origin".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Evaluates the Lévy exponent f(ω).
    pub fn exponent(&self, omega: f64) -> Result<f64, PriorError> {
        match self {
            PriorModel::Gaussian { sigma0 } => Ok(-0.5 * sigma0 * sigma0 * omega * omega),
            PriorModel::Laplace { tau } => {
                let t2 = tau * tau;
                Ok((t2 / (t2 + omega * omega)).ln())
            }
            PriorModel::Student { epsilon, r } => {
                if (*r - 0.5).abs() < 1e-12 {
                    Ok(-epsilon * omega.abs())
                } else {
                    Err(PriorError::UnsupportedExponent)
                }
            }
            PriorModel::Cauchy { s0 } => Ok(-s0 * omega.abs()),
            PriorModel::AlphaStable { alpha, s0 } => Ok(-s0 * omega.abs().powf(*alpha)),
            PriorModel::Tabulated { omega_max, values } => {
                let t = omega.abs();
                if t > *omega_max {
                    return Err(PriorError::OutOfDomain { omega, max: *omega_max });
                }
                let step = omega_max / (values.len() - 1) as f64;
                let pos = t / step;
                let i = (pos.floor() as usize).min(values.len() - 2);
                let frac = pos - i as f64;
                Ok(values[i] * (1.0 - frac) + values[i + 1] * frac)
            }
        }
    }

    /// Exponent of the discrete innovation observed through `window`.
    pub fn innovation_exponent(&self, window: Window) -> Result<InnovationExponent, PriorError> {
        self.validate()?;
        Ok(InnovationExponent { model: self.clone(), window })
    }

    /// Half-width over which the synthesized pdf carries all but ~1e-3 of its mass.
    pub fn default_pdf_range(&self) -> f64 {
        match self {
            PriorModel::Gaussian { sigma0 } => 10.0 * sigma0,
            PriorModel::Laplace { tau } => 16.0 / tau,
            PriorModel::Cauchy { s0 } => 1500.0 * s0,
            PriorModel::Student { epsilon, .. } => 1500.0 * epsilon,
            PriorModel::AlphaStable { alpha, s0 } => {
                // SαS tail mass ≈ (2/π)·sin(πα/2)·s₀·x^(-α); solve for 5e-4,
                // with a Gaussian-scale floor for α near 2.
                let tail = (2.0 / PI) * (PI * alpha / 2.0).sin() * s0;
                let from_tail = (tail / 5e-4).powf(1.0 / alpha);
                let floor = 8.0 * (2.0 * s0).powf(1.0 / alpha);
                from_tail.max(floor)
            }
            PriorModel::Tabulated { .. } => 10.0,
        }
    }
}

/// Uniform samples of the spline window β_L over its support.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    x0: f64,
    dx: f64,
    values: Vec<f64>,
}

impl Window {
    pub fn new(x0: f64, dx: f64, values: Vec<f64>) -> Result<Self, PriorError> {
        if values.len() < 2 {
            return Err(PriorError::EmptyWindow);
        }
        if !(dx > 0.0) || !x0.is_finite() || values.iter().any(|v| !v.is_finite()) {
            return Err(PriorError::InvalidParameter("window grid must be finite".into()));
        }
        Ok(Self { x0, dx, values })
    }

    /// The unit rectangle on [0, 1]; the window of the first-order difference.
    pub fn rect(samples: usize) -> Self {
        let samples = samples.max(2);
        Self {
            x0: 0.0,
            dx: 1.0 / (samples - 1) as f64,
            values: vec![1.0; samples],
        }
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        for v in &mut self.values {
            *v *= factor;
        }
        self
    }

    /// Trapezoid rule for ∫ f(β(x)) dx over the sampled support.
    fn integrate(&self, mut f: impl FnMut(f64) -> Result<f64, PriorError>) -> Result<f64, PriorError> {
        let mut acc = 0.0;
        let mut prev = f(self.values[0])?;
        for v in &self.values[1..] {
            let cur = f(*v)?;
            acc += 0.5 * (prev + cur) * self.dx;
            prev = cur;
        }
        Ok(acc)
    }
}

/// Anything usable as the exponent ω ↦ f(ω) of an infinitely divisible law.
pub trait LevyExponent {
    fn eval(&self, omega: f64) -> Result<f64, PriorError>;
}

impl LevyExponent for PriorModel {
    fn eval(&self, omega: f64) -> Result<f64, PriorError> {
        self.exponent(omega)
    }
}

impl<F: Fn(f64) -> f64> LevyExponent for F {
    fn eval(&self, omega: f64) -> Result<f64, PriorError> {
        Ok(self(omega))
    }
}

/// Exponent of the discrete innovation: f_β(ω) = ∫ f(ω·β(x)) dx.
#[derive(Debug, Clone)]
pub struct InnovationExponent {
    model: PriorModel,
    window: Window,
}

impl LevyExponent for InnovationExponent {
    fn eval(&self, omega: f64) -> Result<f64, PriorError> {
        self.window.integrate(|beta| self.model.exponent(omega * beta))
    }
}

/// First-order pdf of the discrete innovation, sampled on a symmetric grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PdfTable {
    pub u_max: f64,
    pub n: usize,
    /// p_U at u_j = -u_max + j·(2·u_max/n); even, so u = +u_max wraps to index 0.
    pub density: Vec<f64>,
}

impl PdfTable {
    pub fn spacing(&self) -> f64 {
        2.0 * self.u_max / self.n as f64
    }

    pub fn grid(&self, j: usize) -> f64 {
        -self.u_max + j as f64 * self.spacing()
    }

    /// Linear interpolation; clamps to the edge values outside the table.
    pub fn density_at(&self, u: f64) -> f64 {
        let pos = (u + self.u_max) / self.spacing();
        if pos <= 0.0 {
            return self.density[0];
        }
        let i = pos.floor() as usize;
        if i + 1 >= self.n {
            // even continuation: the sample at +u_max is density[0]
            if i >= self.n {
                return self.density[0];
            }
            let frac = pos - i as f64;
            return self.density[i] * (1.0 - frac) + self.density[0] * frac;
        }
        let frac = pos - i as f64;
        self.density[i] * (1.0 - frac) + self.density[i + 1] * frac
    }

    /// Trapezoid integral over the table, closing the grid by even continuation.
    pub fn trapezoid_integral(&self) -> f64 {
        let du = self.spacing();
        let mut acc = 0.0;
        for j in 0..self.n {
            let a = self.density[j];
            let b = if j + 1 < self.n { self.density[j + 1] } else { self.density[0] };
            acc += 0.5 * (a + b) * du;
        }
        acc
    }

    /// Prefix trapezoid masses at the n+1 cell edges from -u_max to +u_max.
    pub fn cumulative(&self) -> Vec<f64> {
        let du = self.spacing();
        let mut out = Vec::with_capacity(self.n + 1);
        let mut acc = 0.0;
        out.push(0.0);
        for j in 0..self.n {
            let a = self.density[j];
            let b = if j + 1 < self.n { self.density[j + 1] } else { self.density[0] };
            acc += 0.5 * (a + b) * du;
            out.push(acc);
        }
        out
    }
}

/// Sampled potential Φ_U = -log p_U on [0, x_max], normalized so Φ(0) = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialTable {
    pub x_max: f64,
    pub n: usize,
    pub values: Vec<f64>,
    /// Linear extrapolation slope beyond x_max, fitted on the last 10% of the table.
    pub slope_tail: f64,
}

impl PotentialTable {
    /// Builds the potential from a synthesized pdf.
    pub fn from_pdf(pdf: &PdfTable) -> Result<Self, PriorError> {
        let half = pdf.n / 2;
        let center = pdf.density[half];
        if !(center > 0.0) {
            return Err(PriorError::InfinitePotential { x: 0.0 });
        }
        let log_center = center.ln();
        let mut values = Vec::with_capacity(half + 1);
        for j in 0..=half {
            // sample at +u_max lives at index 0 by even continuation
            let d = if j < half { pdf.density[half + j] } else { pdf.density[0] };
            if !(d > 0.0) {
                return Err(PriorError::InfinitePotential { x: j as f64 * pdf.spacing() });
            }
            values.push(log_center - d.ln());
        }
        let n = values.len();
        let x_max = pdf.u_max;
        let step = x_max / (n - 1) as f64;

        // least-squares slope over the last 10% of the table
        let start = ((n - 1) as f64 * 0.9).floor() as usize;
        let start = start.min(n - 2);
        let (mut sx, mut sy, mut sxx, mut sxy, mut count) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for j in start..n {
            let x = j as f64 * step;
            let y = values[j];
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            count += 1.0;
        }
        let denom = count * sxx - sx * sx;
        let slope_tail = if denom.abs() > 0.0 { (count * sxy - sx * sy) / denom } else { 0.0 };

        Ok(Self { x_max, n, values, slope_tail })
    }

    /// Even lookup with linear interpolation and linear tail extrapolation.
    pub fn eval(&self, x: f64) -> f64 {
        let t = x.abs();
        if t >= self.x_max {
            return self.values[self.n - 1] + self.slope_tail * (t - self.x_max);
        }
        let step = self.x_max / (self.n - 1) as f64;
        let pos = t / step;
        let i = (pos.floor() as usize).min(self.n - 2);
        let frac = pos - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }
}

/// Potential function with unit leading coefficient and Φ(0) = 0.
#[derive(Debug, Clone, PartialEq)]
pub enum Potential {
    /// x²
    Quadratic,
    /// |x|
    Abs,
    /// log((x² + ε²)/ε²)
    StudentLog { epsilon: f64 },
    /// log((x² + s₀²)/s₀²)
    CauchyLog { s0: f64 },
    Table(PotentialTable),
}

impl Potential {
    /// Closed-form potential for the four tabulated families.
    pub fn closed_form(model: &PriorModel) -> Result<Self, PriorError> {
        model.validate()?;
        match model {
            PriorModel::Gaussian { .. } => Ok(Potential::Quadratic),
            PriorModel::Laplace { .. } => Ok(Potential::Abs),
            PriorModel::Student { epsilon, .. } => Ok(Potential::StudentLog { epsilon: *epsilon }),
            PriorModel::Cauchy { s0 } => Ok(Potential::CauchyLog { s0: *s0 }),
            PriorModel::AlphaStable { .. } | PriorModel::Tabulated { .. } => {
                Err(PriorError::UnsupportedClosedForm)
            }
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Potential::Quadratic => x * x,
            Potential::Abs => x.abs(),
            Potential::StudentLog { epsilon } => {
                let e2 = epsilon * epsilon;
                ((x * x + e2) / e2).ln()
            }
            Potential::CauchyLog { s0 } => {
                let s2 = s0 * s0;
                ((x * x + s2) / s2).ln()
            }
            Potential::Table(t) => t.eval(x),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Potential::Quadratic => "quadratic",
            Potential::Abs => "abs",
            Potential::StudentLog { .. } => "student",
            Potential::CauchyLog { .. } => "cauchy",
            Potential::Table(_) => "table",
        }
    }
}

/// Synthesizes the first-order pdf by inverting exp(f) numerically.
///
/// The truncation frequency Ω is grown until exp(f(Ω)) < 1e-12, capped at 1e6;
/// a characteristic function still above threshold at the cap is rejected. The
/// cosine integral (the exponent is even) is evaluated per output sample with a
/// trapezoidal rule that integrates the piecewise-linear envelope against
/// cos(ωu) exactly, so the node spacing only has to resolve exp(f), not the
/// oscillation. `n` must be a power of two ≥ 64; the grid then contains u = 0.
pub fn synthesize_pdf<E: LevyExponent>(exponent: &E, u_max: f64, n: usize) -> Result<PdfTable, PriorError> {
    if !(u_max > 0.0) || !u_max.is_finite() {
        return Err(PriorError::InvalidGrid(format!("u_max must be positive, got {u_max}")));
    }
    if n < 64 || !n.is_power_of_two() {
        return Err(PriorError::InvalidGrid(format!("n must be a power of two >= 64, got {n}")));
    }

    let cutoff = find_cutoff(exponent)?;
    let nodes = omega_grid(cutoff);
    let mut envelope = Vec::with_capacity(nodes.len());
    for &w in &nodes {
        envelope.push(exponent.eval(w)?.exp());
    }

    let du = 2.0 * u_max / n as f64;
    let half = n / 2;
    let mut positive_half = vec![0.0; half + 1];
    for (j, slot) in positive_half.iter_mut().enumerate() {
        let u = j as f64 * du;
        let value = cosine_filon(&nodes, &envelope, u) / PI;
        if value < NEG_CLAMP {
            return Err(PriorError::NegativeDensity { u, value });
        }
        *slot = value.max(0.0);
    }

    let mut density = vec![0.0; n];
    for (j, &v) in positive_half.iter().enumerate() {
        if half + j < n {
            density[half + j] = v;
        }
        density[half - j] = v;
    }
    Ok(PdfTable { u_max, n, density })
}

fn find_cutoff<E: LevyExponent>(exponent: &E) -> Result<f64, PriorError> {
    let mut omega = 1e-3;
    loop {
        let g = exponent.eval(omega)?.exp();
        if g < DECAY_THRESHOLD {
            return Ok(omega);
        }
        if omega >= OMEGA_CAP {
            return Err(PriorError::NonDecayingCharacteristic);
        }
        omega = (omega * 2.0).min(OMEGA_CAP);
    }
}

/// Uniform nodes on [0, min(Ω, CORE_LIMIT)], then log-spaced out to Ω.
fn omega_grid(cutoff: f64) -> Vec<f64> {
    let core_end = cutoff.min(CORE_LIMIT);
    let mut nodes = Vec::with_capacity(CORE_INTERVALS + 1);
    for j in 0..=CORE_INTERVALS {
        nodes.push(core_end * j as f64 / CORE_INTERVALS as f64);
    }
    if cutoff > core_end {
        let decades = (cutoff / core_end).log10();
        let m = (decades * TAIL_PER_DECADE as f64).ceil() as usize;
        let log_start = core_end.log10();
        let log_step = decades / m as f64;
        for k in 1..=m {
            nodes.push(10f64.powf(log_start + k as f64 * log_step));
        }
    }
    nodes
}

/// ∫ g(ω)·cos(ωu) dω with g piecewise linear between the given nodes.
///
/// Per cell [a, b]: I = g_a·(W0 - W1) + g_b·W1 with W0 = ∫cos(ωu)dω and
/// W1 = ∫((ω-a)/h)·cos(ωu)dω, evaluated in closed form; a series in θ = uh
/// replaces the closed form when cancellation would dominate. At u = 0 this
/// reduces to the plain trapezoid rule.
fn cosine_filon(nodes: &[f64], g: &[f64], u: f64) -> f64 {
    debug_assert_eq!(nodes.len(), g.len());
    if u == 0.0 {
        let mut acc = 0.0;
        for i in 1..nodes.len() {
            acc += 0.5 * (g[i - 1] + g[i]) * (nodes[i] - nodes[i - 1]);
        }
        return acc;
    }

    const SMALL_THETA: f64 = 1e-2;
    let mut acc = 0.0;
    let mut ca = (u * nodes[0]).cos();
    let mut sa = (u * nodes[0]).sin();
    for i in 1..nodes.len() {
        let a = nodes[i - 1];
        let b = nodes[i];
        let h = b - a;
        let cb = (u * b).cos();
        let sb = (u * b).sin();
        let theta = u * h;
        let (w0, w1) = if theta.abs() < SMALL_THETA {
            let t2 = theta * theta;
            let w0 = h * (ca * (1.0 - t2 / 6.0 + t2 * t2 / 120.0)
                - sa * theta * (0.5 - t2 / 24.0));
            let w1 = h * (ca * (0.5 - t2 / 8.0 + t2 * t2 / 144.0)
                + sa * theta * (-1.0 / 3.0 + t2 / 30.0));
            (w0, w1)
        } else {
            let w0 = (sb - sa) / u;
            let w1 = sb / u + (cb - ca) / (h * u * u);
            (w0, w1)
        };
        acc += g[i - 1] * (w0 - w1) + g[i] * w1;
        ca = cb;
        sa = sb;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn gaussian_exponent_value() {
        let m = PriorModel::gaussian(1.0).unwrap();
        assert_abs_diff_eq!(m.exponent(2.0).unwrap(), -2.0, epsilon = 1e-15);
    }

    #[test]
    fn laplace_exponent_vanishes_at_origin() {
        let m = PriorModel::laplace(1.0).unwrap();
        assert_eq!(m.exponent(0.0).unwrap(), 0.0);
    }

    #[test]
    fn laplace_exponent_value() {
        // log(τ²/(τ²+ω²)) at τ = 2, ω = 2 is log(4/8) = -log 2
        let m = PriorModel::laplace(2.0).unwrap();
        assert_abs_diff_eq!(m.exponent(2.0).unwrap(), -(2f64.ln()), epsilon = 1e-14);
    }

    #[test]
    fn student_general_r_has_no_exponent() {
        let m = PriorModel::Student { epsilon: 0.01, r: 1.0 };
        assert!(matches!(m.exponent(1.0), Err(PriorError::UnsupportedExponent)));
    }

    #[test]
    fn tabulated_out_of_domain() {
        let m = PriorModel::Tabulated { omega_max: 2.0, values: vec![0.0, -1.0, -2.0] };
        assert!(m.exponent(1.5).is_ok());
        assert!(matches!(
            m.exponent(2.5),
            Err(PriorError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(PriorModel::gaussian(0.0).is_err());
        assert!(PriorModel::laplace(-1.0).is_err());
        assert!(PriorModel::alpha_stable(2.5, 1.0).is_err());
        assert!(PriorModel::alpha_stable(0.5, 1.0).is_err());
    }

    #[test]
    fn rect_window_reproduces_exponent() {
        // the unit rectangle makes the integrand constant, so the trapezoid is exact
        let m = PriorModel::laplace(1.0).unwrap();
        let inn = m.innovation_exponent(Window::rect(257)).unwrap();
        for &w in &[0.0, 0.3, 1.0, 2.7, 10.0, -4.2] {
            let direct = m.exponent(w).unwrap();
            let via_window = inn.eval(w).unwrap();
            assert_abs_diff_eq!(via_window, direct, epsilon = 1e-10);
        }
    }

    #[test]
    fn rect_window_gaussian_unit_variance() {
        let m = PriorModel::gaussian(1.0).unwrap();
        let inn = m.innovation_exponent(Window::rect(129)).unwrap();
        for &w in &[0.5, 1.0, 3.0] {
            assert_abs_diff_eq!(inn.eval(w).unwrap(), -0.5 * w * w, epsilon = 1e-12);
        }
    }

    #[test]
    fn scaled_rect_window_gaussian() {
        // β ≡ 2 on [0,1]: ∫ -½(2ω)² dx = -2ω²
        let m = PriorModel::gaussian(1.0).unwrap();
        let inn = m.innovation_exponent(Window::rect(129).scaled(2.0)).unwrap();
        for &w in &[0.5, 1.0, 2.0] {
            assert_abs_diff_eq!(inn.eval(w).unwrap(), -2.0 * w * w, epsilon = 1e-12);
        }
    }

    #[test]
    fn empty_window_rejected() {
        assert!(Window::new(0.0, 0.1, vec![1.0]).is_err());
    }

    #[test]
    fn laplace_pdf_matches_analytic() {
        let m = PriorModel::laplace(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 10.0, 1024).unwrap();
        let mut sup = 0.0f64;
        for j in 0..pdf.n {
            let u = pdf.grid(j);
            let exact = 0.5 * (-u.abs()).exp();
            sup = sup.max((pdf.density[j] - exact).abs());
        }
        assert!(sup <= 1e-4, "sup error {sup:e}");
        assert_abs_diff_eq!(pdf.density_at(0.0), 0.5, epsilon = 1e-4);
    }

    #[test]
    fn gaussian_pdf_matches_standard_normal() {
        let m = PriorModel::gaussian(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 10.0, 1024).unwrap();
        let norm = 1.0 / (2.0 * PI).sqrt();
        let mut sup = 0.0f64;
        for j in 0..pdf.n {
            let u = pdf.grid(j);
            let exact = norm * (-0.5 * u * u).exp();
            sup = sup.max((pdf.density[j] - exact).abs());
        }
        assert!(sup <= 1e-6, "sup error {sup:e}");
    }

    #[test]
    fn cauchy_pdf_center_value() {
        let m = PriorModel::cauchy(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 10.0, 1024).unwrap();
        assert_abs_diff_eq!(pdf.density_at(0.0), 1.0 / PI, epsilon = 1e-4);
    }

    #[test]
    fn laplace_above_unit_scale_hits_cap() {
        // exp(f(1e6)) = 4/(4+1e12) > 1e-12 for τ = 2
        let m = PriorModel::laplace(2.0).unwrap();
        assert!(matches!(
            synthesize_pdf(&m, 10.0, 256),
            Err(PriorError::NonDecayingCharacteristic)
        ));
    }

    #[test]
    fn coarse_grid_rejected() {
        let m = PriorModel::gaussian(1.0).unwrap();
        assert!(synthesize_pdf(&m, 10.0, 32).is_err());
        assert!(synthesize_pdf(&m, 10.0, 100).is_err());
    }

    #[test]
    fn pdf_integrates_to_one_for_builtin_families() {
        let families = vec![
            PriorModel::gaussian(1.0).unwrap(),
            PriorModel::laplace(1.0).unwrap(),
            PriorModel::cauchy(1.0).unwrap(),
            PriorModel::student(0.01).unwrap(),
            PriorModel::alpha_stable(1.5, 1.0).unwrap(),
        ];
        for m in families {
            let pdf = synthesize_pdf(&m, m.default_pdf_range(), 8192).unwrap();
            let total = pdf.trapezoid_integral();
            assert!(
                (total - 1.0).abs() <= 1e-3,
                "{m:?}: integral {total} out of tolerance"
            );
        }
    }

    #[test]
    fn potential_normalized_at_origin() {
        let m = PriorModel::laplace(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 10.0, 1024).unwrap();
        let pot = PotentialTable::from_pdf(&pdf).unwrap();
        assert_eq!(pot.values[0], 0.0);
        assert_eq!(pot.eval(0.0), 0.0);
    }

    #[test]
    fn laplace_potential_is_abs() {
        let m = PriorModel::laplace(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 10.0, 1024).unwrap();
        let pot = PotentialTable::from_pdf(&pdf).unwrap();
        assert_abs_diff_eq!(pot.eval(2.0), 2.0, epsilon = 1e-3);
        // affine agreement with the closed form on [-5, 5]
        let closed = Potential::Abs;
        let mut sup = 0.0f64;
        let step = pot.x_max / (pot.n - 1) as f64;
        for j in 0..pot.n {
            let x = j as f64 * step;
            if x > 5.0 {
                break;
            }
            sup = sup.max((pot.eval(x) - closed.eval(x)).abs());
            sup = sup.max((pot.eval(-x) - closed.eval(-x)).abs());
        }
        assert!(sup <= 1e-3, "sup deviation {sup:e}");
    }

    #[test]
    fn gaussian_potential_value() {
        // -log N(3;0,1) + log N(0;0,1) = 9/2; u_max = 5 keeps the tail density
        // above quadrature noise
        let m = PriorModel::gaussian(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 5.0, 1024).unwrap();
        let pot = PotentialTable::from_pdf(&pdf).unwrap();
        assert_abs_diff_eq!(pot.eval(3.0), 4.5, epsilon = 1e-3);
    }

    #[test]
    fn potential_rejects_underflowed_tail() {
        // N(10;0,1) is far below the inversion accuracy, so the clamped zeros
        // must be rejected rather than mapped to an infinite potential
        let m = PriorModel::gaussian(1.0).unwrap();
        let pdf = synthesize_pdf(&m, 10.0, 1024).unwrap();
        assert!(matches!(
            PotentialTable::from_pdf(&pdf),
            Err(PriorError::InfinitePotential { .. })
        ));
    }

    #[test]
    fn closed_form_potentials() {
        let student = Potential::closed_form(&PriorModel::student(1e-2).unwrap()).unwrap();
        assert_eq!(student.eval(0.0), 0.0);
        assert_abs_diff_eq!(student.eval(1.0), (1.0001f64 / 1e-4).ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(student.eval(1.0), 9.2104, epsilon = 1e-4);

        let laplace = Potential::closed_form(&PriorModel::laplace(1.0).unwrap()).unwrap();
        assert_eq!(laplace.eval(-3.0), 3.0);

        assert!(matches!(
            Potential::closed_form(&PriorModel::alpha_stable(1.5, 1.0).unwrap()),
            Err(PriorError::UnsupportedClosedForm)
        ));
    }

    #[test]
    fn student_pdf_requires_half_r() {
        let m = PriorModel::Student { epsilon: 0.01, r: 1.0 };
        assert!(synthesize_pdf(&m, 10.0, 256).is_err());
    }

    proptest! {
        #[test]
        fn exponents_even_and_vanishing(omega in -50.0f64..50.0, tau in 0.2f64..1.0, alpha in 1.0f64..2.0) {
            let models = vec![
                PriorModel::gaussian(1.0).unwrap(),
                PriorModel::laplace(tau).unwrap(),
                PriorModel::cauchy(1.0).unwrap(),
                PriorModel::alpha_stable(alpha, 0.7).unwrap(),
            ];
            for m in models {
                let plus = m.exponent(omega).unwrap();
                let minus = m.exponent(-omega).unwrap();
                prop_assert!((plus - minus).abs() <= 1e-12 * plus.abs().max(1.0));
                prop_assert_eq!(m.exponent(0.0).unwrap(), 0.0);
            }
        }
    }
}
