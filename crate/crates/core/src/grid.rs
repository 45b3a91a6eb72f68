//! Sample grids and gradient-domain fields shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("data length {got} does not match dims (expected {expected})")]
    LengthMismatch { got: usize, expected: usize },
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("dimensions must be positive")]
    Empty,
}

/// Grid dimensions; rank 1 or 2, row-major layout for rank 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dims {
    One(usize),
    Two { rows: usize, cols: usize },
}

impl Dims {
    pub fn len(&self) -> usize {
        match *self {
            Dims::One(n) => n,
            Dims::Two { rows, cols } => rows * cols,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self) -> usize {
        match self {
            Dims::One(_) => 1,
            Dims::Two { .. } => 2,
        }
    }
}

impl std::fmt::Display for Dims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Dims::One(n) => write!(f, "{n}"),
            Dims::Two { rows, cols } => write!(f, "{rows}x{cols}"),
        }
    }
}

/// Boundary convention for difference operators and convolutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    #[default]
    Periodic,
    Neumann,
}

/// A d-dimensional (d ∈ {1, 2}) real sample array with a boundary convention.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSignal {
    pub dims: Dims,
    pub data: Vec<f64>,
    pub boundary: Boundary,
}

impl GridSignal {
    /// Builds a signal, checking the length and finiteness invariants.
    pub fn new(dims: Dims, data: Vec<f64>, boundary: Boundary) -> Result<Self, GridError> {
        if dims.is_empty() {
            return Err(GridError::Empty);
        }
        if data.len() != dims.len() {
            return Err(GridError::LengthMismatch {
                got: data.len(),
                expected: dims.len(),
            });
        }
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(GridError::NonFinite(i));
        }
        Ok(Self { dims, data, boundary })
    }

    pub fn zeros(dims: Dims) -> Self {
        Self {
            dims,
            data: vec![0.0; dims.len()],
            boundary: Boundary::default(),
        }
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

/// Stacked per-axis difference planes of a signal: one plane in 1-D, two in 2-D.
///
/// Houses the split variable u and the Lagrange multiplier of the solver as
/// well as gradients proper.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientField {
    pub dims: Dims,
    pub boundary: Boundary,
    pub components: usize,
    /// Component-major: plane c occupies `c * dims.len() .. (c + 1) * dims.len()`.
    pub data: Vec<f64>,
}

impl GradientField {
    pub fn zeros(dims: Dims, boundary: Boundary) -> Self {
        let components = dims.rank();
        Self {
            dims,
            boundary,
            components,
            data: vec![0.0; components * dims.len()],
        }
    }

    pub fn plane(&self, c: usize) -> &[f64] {
        let n = self.dims.len();
        &self.data[c * n..(c + 1) * n]
    }

    pub fn plane_mut(&mut self, c: usize) -> &mut [f64] {
        let n = self.dims.len();
        &mut self.data[c * n..(c + 1) * n]
    }

    /// Euclidean norm of the length-d vector at sample k.
    pub fn sample_norm(&self, k: usize) -> f64 {
        let n = self.dims.len();
        match self.components {
            1 => self.data[k].abs(),
            2 => (self.data[k] * self.data[k] + self.data[n + k] * self.data[n + k]).sqrt(),
            _ => (0..self.components)
                .map(|c| self.data[c * n + k])
                .map(|v| v * v)
                .sum::<f64>()
                .sqrt(),
        }
    }
}
