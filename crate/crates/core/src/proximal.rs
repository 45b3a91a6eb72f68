//! Scalar and vectorial proximity operators.
//!
//! Gaussian and Laplace potentials have closed forms; every other admissible
//! potential goes through a lookup table built by exhaustive scalar
//! minimization. prox(z; λ) is the minimizer of ½(z-x)² + λΦ(x).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProxError {
    #[error("prox table needs at least 16 samples, got {0}")]
    TableTooCoarse(usize),
    #[error("invalid prox parameter: {0}")]
    InvalidParameter(String),
    #[error("prox values decrease at entry {index} ({prev} -> {value}); potential is not even-unimodal")]
    NonMonotone { index: usize, prev: f64, value: f64 },
    #[error("prox exceeds |z| at z = {z} (got {value}); potential is not minimized at 0")]
    NotShrinking { z: f64, value: f64 },
}

/// prox of λ·x²: z/(1+2λ).
pub fn prox_quadratic(z: f64, lambda: f64) -> f64 {
    z / (1.0 + 2.0 * lambda)
}

/// prox of λ·|x|: soft threshold.
pub fn prox_abs(z: f64, lambda: f64) -> f64 {
    let shrunk = (z.abs() - lambda).max(0.0);
    if z < 0.0 {
        -shrunk
    } else {
        shrunk
    }
}

/// Magnitude shrinkage with direction preserved: z·prox(‖z‖)/‖z‖.
pub fn prox_vectorial(scalar_prox: impl Fn(f64) -> f64, z: &[f64]) -> Vec<f64> {
    let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return vec![0.0; z.len()];
    }
    let scale = scalar_prox(norm) / norm;
    z.iter().map(|v| v * scale).collect()
}

/// Precomputed proximity map of an even potential on [0, z_max].
///
/// Only z ≥ 0 is stored; lookups extend oddly. Values are monotone
/// nondecreasing and never exceed z, both enforced at build time.
#[derive(Debug, Clone, PartialEq)]
pub struct ProxTable {
    lambda: f64,
    z_max: f64,
    values: Vec<f64>,
}

/// Tolerated numerical wiggle before monotonicity/shrinkage counts as violated.
const BUILD_SLACK: f64 = 1e-6;

impl ProxTable {
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn z_max(&self) -> f64 {
        self.z_max
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn grid(&self, j: usize) -> f64 {
        j as f64 * self.z_max / (self.values.len() - 1) as f64
    }

    /// Odd-symmetric linear interpolation; unit-slope extrapolation past z_max.
    pub fn eval(&self, z: f64) -> f64 {
        let t = z.abs();
        let n = self.values.len();
        let out = if t >= self.z_max {
            self.values[n - 1] + (t - self.z_max)
        } else {
            let step = self.z_max / (n - 1) as f64;
            let pos = t / step;
            let i = (pos.floor() as usize).min(n - 2);
            let frac = pos - i as f64;
            self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
        };
        if z < 0.0 {
            -out
        } else {
            out
        }
    }
}

/// Table lookup as a free function, mirroring `ProxTable::eval`.
pub fn prox_lookup(table: &ProxTable, z: f64) -> f64 {
    table.eval(z)
}

/// Tabulates prox(z; λ) for an even potential with Φ(0) = 0.
///
/// Each entry minimizes ½(z-x)² + λΦ(x) by a dense grid scan at resolution
/// z_max/(8n) followed by golden-section refinement; ties break toward smaller
/// |x|. Evenness confines the minimizer for z ≥ 0 to [0, z_max], so only that
/// half is scanned.
pub fn build_prox_table(
    potential: impl Fn(f64) -> f64,
    lambda: f64,
    z_max: f64,
    n: usize,
) -> Result<ProxTable, ProxError> {
    if n < 16 {
        return Err(ProxError::TableTooCoarse(n));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(ProxError::InvalidParameter(format!("lambda must be positive, got {lambda}")));
    }
    if !(z_max > 0.0) || !z_max.is_finite() {
        return Err(ProxError::InvalidParameter(format!("z_max must be positive, got {z_max}")));
    }

    let scan_step = z_max / (8 * n) as f64;
    let scan_points = 8 * n;
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        let z = j as f64 * z_max / (n - 1) as f64;
        let objective = |x: f64| 0.5 * (z - x) * (z - x) + lambda * potential(x);

        let mut best_k = 0usize;
        let mut best_val = objective(0.0);
        for k in 1..=scan_points {
            let x = k as f64 * scan_step;
            let val = objective(x);
            if val < best_val {
                best_val = val;
                best_k = k;
            }
        }
        let lo = (best_k.saturating_sub(1)) as f64 * scan_step;
        let hi = ((best_k + 1).min(scan_points)) as f64 * scan_step;
        let x = golden_section(objective, lo, hi);
        values.push(x);
    }

    // monotonicity and shrinkage, with clamping of sub-slack wiggles
    let mut prev = 0.0f64;
    for j in 0..n {
        let z = j as f64 * z_max / (n - 1) as f64;
        let v = values[j];
        if v < prev - BUILD_SLACK {
            return Err(ProxError::NonMonotone { index: j, prev, value: v });
        }
        if v > z + BUILD_SLACK {
            return Err(ProxError::NotShrinking { z, value: v });
        }
        let clamped = v.max(prev).min(z);
        values[j] = clamped;
        prev = clamped;
    }

    Ok(ProxTable { lambda, z_max, values })
}

/// Golden-section minimization on [lo, hi] down to a ~1e-11 bracket.
fn golden_section(objective: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    for _ in 0..120 {
        if hi - lo <= 1e-11 {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = objective(x2);
        }
    }
    0.5 * (lo + hi)
}
