//! Spectrum polynomials from Newton diagrams.
//!
//! The spectrum is assembled from the compact face poset as
//!
//! ```text
//! Sp(t) = Σ_σ (-1)^{n+1-d(σ)} (1-t)^{k(σ)} p_{A_σ}(t)
//!       = Σ_{τ≤σ} (-1)^{n+1-d(σ)} (1-t)^{k(σ)-d(σ)} q_τ(t)
//! ```
//!
//! where `p_{A_σ}` is the Poincaré series of the lattice points of the cone
//! over `σ` graded by the Newton weight, and the empty face contributes
//! `p = 1`. The series are truncated at `n+2`; every term of the sum outside
//! `(0, n+1)` must cancel, which is checked.

mod fracpoly;
mod poincare;
mod stats;

pub use fracpoly::FracPoly;
pub use poincare::{poincare_all, poincare_cone, q_from_cones, q_sigma};
pub use stats::{spectrum_stats, variance_check, SpectrumStats, VarianceCheck};

use num_traits::{One, Zero};
use poincare::sign;

use crate::lattice::{volumes, NewtonPolyhedron, Support};
use crate::rational::{factorial, fmt_q};
use crate::{Error, Result, Q};

fn cone_cutoff(poly: &NewtonPolyhedron) -> Q {
    Q::from_integer(poly.dim() as i128 + 1)
}

/// Checks the raw face sum and truncates it to `(0, n+1)`.
fn finish(poly: &NewtonPolyhedron, raw: FracPoly) -> Result<FracPoly> {
    let top = Q::from_integer(poly.dim() as i128);
    for (e, c) in raw.terms() {
        if e <= Q::zero() || e >= top {
            return Err(Error::InternalCancellationFailure(format!(
                "term {c}*t^{} outside (0, {})",
                fmt_q(&e),
                poly.dim()
            )));
        }
        if c < 0 {
            return Err(Error::InternalCancellationFailure(format!(
                "negative coefficient {c} at t^{}",
                fmt_q(&e)
            )));
        }
    }
    Ok(raw.truncated(top))
}

/// Face sum over `(1-t)^{k(σ)} p_{A_σ}`.
pub fn spectrum_of(poly: &NewtonPolyhedron) -> Result<FracPoly> {
    let n1 = poly.dim();
    let cones = poincare_all(poly, cone_cutoff(poly));
    let mut sum = FracPoly::zero(poly.denominator(), cone_cutoff(poly));
    for (face, p) in poly.faces().iter().zip(&cones) {
        sum += &p.mul_one_minus_t_pow(face.k).scaled(sign(n1 - face.d));
    }
    finish(poly, sum)
}

/// Face sum over pairs `τ ≤ σ` of `(1-t)^{k(σ)-d(σ)} q_τ`.
pub fn spectrum_q_of(poly: &NewtonPolyhedron) -> Result<FracPoly> {
    let n1 = poly.dim();
    let cones = poincare_all(poly, cone_cutoff(poly));
    let qs: Vec<FracPoly> = (0..poly.faces().len())
        .map(|s| q_from_cones(poly, &cones, s))
        .collect();
    let mut sum = FracPoly::zero(poly.denominator(), cone_cutoff(poly));
    for face in poly.faces() {
        let mut inner = FracPoly::zero(poly.denominator(), cone_cutoff(poly));
        for &t in &face.subfaces {
            inner += &qs[t];
        }
        sum += &inner
            .mul_one_minus_t_pow(face.k - face.d)
            .scaled(sign(n1 - face.d));
    }
    finish(poly, sum)
}

/// Spectrum polynomial `Sp_f(t)` of a convenient Newton non-degenerate germ.
pub fn steenbrink_spectrum(support: &Support) -> Result<FracPoly> {
    spectrum_of(&NewtonPolyhedron::build(support)?)
}

/// Same as [`steenbrink_spectrum`] via the interior series `q_τ`.
pub fn steenbrink_spectrum_q(support: &Support) -> Result<FracPoly> {
    spectrum_q_of(&NewtonPolyhedron::build(support)?)
}

/// `Σ_{j=0}^{n+1} (-1)^{n+1-j} j! w^j V_j` with `V_0 = 1`; at `w = 1` this is
/// Kouchnirenko's Milnor number, at general `w` the Milnor number of the
/// diagram scaled by `w`.
pub fn milnor_polynomial(volumes: &[Q], w: i64) -> Q {
    let n1 = volumes.len();
    let w = Q::from_integer(w as i128);
    let mut acc = Q::from_integer(sign(n1) as i128);
    let mut wp = Q::one();
    for (j, v) in volumes.iter().enumerate() {
        let j = j + 1;
        wp *= w;
        acc += Q::from_integer(sign(n1 - j) as i128 * factorial(j as u32)) * wp * v;
    }
    acc
}

/// Milnor number from volumes.
pub fn milnor_kouchnirenko(poly: &NewtonPolyhedron) -> Result<i64> {
    let mu = milnor_polynomial(&volumes(poly), 1);
    if !mu.is_integer() {
        return Err(Error::NonIntegerResult(fmt_q(&mu)));
    }
    Ok(mu.to_integer() as i64)
}
