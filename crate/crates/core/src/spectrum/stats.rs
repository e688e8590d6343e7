use num_traits::Zero;

use super::FracPoly;
use crate::{Error, Result, Q};

/// Spectral numbers `α_1 ≤ ... ≤ α_μ` with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumStats {
    pub alphas: Vec<Q>,
    pub mu: usize,
    pub n_plus_1: usize,
}

impl SpectrumStats {
    pub fn new(mut alphas: Vec<Q>, n_plus_1: usize) -> Self {
        alphas.sort();
        SpectrumStats {
            mu: alphas.len(),
            alphas,
            n_plus_1,
        }
    }

    /// `{α_i} = {n+1-α_i}` as multisets.
    pub fn is_symmetric(&self) -> bool {
        let top = Q::from_integer(self.n_plus_1 as i128);
        self.alphas
            .iter()
            .zip(self.alphas.iter().rev())
            .all(|(a, b)| *a + *b == top)
    }

    /// All spectral numbers in the open interval `(0, n+1)`.
    pub fn in_range(&self) -> bool {
        let top = Q::from_integer(self.n_plus_1 as i128);
        self.alphas.iter().all(|a| *a > Q::zero() && *a < top)
    }

    /// Number of spectral numbers `≤ r`.
    pub fn count_le(&self, r: Q) -> usize {
        self.alphas.partition_point(|a| *a <= r)
    }

    /// Number of spectral numbers `< r`.
    pub fn count_lt(&self, r: Q) -> usize {
        self.alphas.partition_point(|a| *a < r)
    }
}

/// Expands a spectrum polynomial into its sorted multiset.
pub fn spectrum_stats(sp: &FracPoly, n_plus_1: usize) -> Result<SpectrumStats> {
    let mut alphas = Vec::with_capacity(sp.mass().max(0) as usize);
    for (e, c) in sp.terms() {
        if c < 0 {
            return Err(Error::InternalCancellationFailure(format!(
                "negative multiplicity {c}"
            )));
        }
        alphas.extend(std::iter::repeat_n(e, c as usize));
    }
    Ok(SpectrumStats::new(alphas, n_plus_1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarianceCheck {
    pub lhs: Q,
    pub rhs: Q,
    pub ok: bool,
}

/// Spectral variance about `(n+1)/2` against `(α_μ - α_1)/12`.
pub fn variance_check(stats: &SpectrumStats) -> VarianceCheck {
    let (Some(first), Some(last)) = (stats.alphas.first(), stats.alphas.last()) else {
        return VarianceCheck {
            lhs: Q::zero(),
            rhs: Q::zero(),
            ok: true,
        };
    };
    let center = Q::new(stats.n_plus_1 as i128, 2);
    let lhs = stats
        .alphas
        .iter()
        .map(|a| (*a - center) * (*a - center))
        .sum::<Q>()
        / Q::from_integer(stats.mu as i128);
    let rhs = (*last - *first) / Q::from_integer(12);
    VarianceCheck {
        lhs,
        rhs,
        ok: lhs <= rhs,
    }
}
