//! Exact polyhedral geometry of Newton diagrams.
//!
//! A [`Support`] is the set of exponent vectors of a convenient germ. From it
//! [`NewtonPolyhedron::build`] recovers the compact facets of
//! `conv(support) + R_{>=0}^{n+1}`, the poset of compact faces (with the
//! empty face), and the Newton weight. [`volumes`] gives the coordinate-plane
//! volumes `V_1..V_{n+1}`.

mod hull;
mod volume;

pub use hull::{Face, Facet, NewtonPolyhedron, EMPTY_FACE};
pub use volume::{cone_volume, volumes};

use crate::{Error, Result};

/// Maximum number of variables handled by the hull enumeration.
pub const MAX_VARS: usize = 4;

/// Exponent support of a germ: distinct nonzero points of `N^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Support {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl Support {
    /// Validates and normalizes (sorts, removes duplicates) a point set.
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 || dim > MAX_VARS {
            return Err(Error::UnsupportedDimension(dim));
        }
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    point: p.clone(),
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|&c| c < 0) {
                return Err(Error::NegativeCoordinate(p.clone()));
            }
            if p.iter().all(|&c| c == 0) {
                return Err(Error::OriginInSupport);
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        if points.len() > 128 {
            return Err(Error::TooManyPoints(points.len()));
        }
        Ok(Support { dim, points })
    }

    /// Brieskorn–Pham support `{d_0 e_0, ..., d_n e_n}`.
    pub fn brieskorn_pham(exponents: &[i64]) -> Result<Self> {
        let dim = exponents.len();
        let points = exponents
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut p = vec![0; dim];
                p[i] = d;
                p
            })
            .collect();
        Support::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// First axis that carries no support point, if any.
    pub fn missing_axis(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            !self
                .points
                .iter()
                .any(|p| p.iter().enumerate().all(|(j, &c)| (j == i) == (c != 0)))
        })
    }

    pub fn is_convenient(&self) -> bool {
        self.missing_axis().is_none()
    }

    /// Smallest support coordinate on each axis (the axis intercepts of Γ).
    pub(crate) fn axis_intercepts(&self) -> Vec<i64> {
        (0..self.dim)
            .map(|i| {
                self.points
                    .iter()
                    .filter(|p| p.iter().enumerate().all(|(j, &c)| j == i || c == 0))
                    .map(|p| p[i])
                    .min()
                    .unwrap_or(0)
            })
            .collect()
    }
}

/// Multiplies every support point by `factor`.
pub fn scale_support(support: &Support, factor: i64) -> Result<Support> {
    if factor < 1 {
        return Err(Error::InvalidScale);
    }
    let points = support
        .points
        .iter()
        .map(|p| p.iter().map(|&c| c * factor).collect())
        .collect();
    Support::new(support.dim, points)
}
