//! Irreducible plane curve singularities via their value semigroup.
//!
//! A branch is given by the minimal generators `β̄_0 < ... < β̄_g` of its
//! value semigroup. From them [`CurveData`] derives the gcd chain `e_i`, the
//! ratios `n_i = e_{i-1}/e_i`, `q_i = β̄_i/e_i`, the characteristic exponents
//! `β_i` and the Milnor number.

mod semigroup;
mod sweep;

pub use semigroup::SemigroupView;
pub use sweep::{enumerate_generators, thm34_sweep, SweepReport, KNOWN_EXCEPTIONS};

use num_integer::Integer;

use crate::{Error, Result, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    /// Minimal semigroup generators `β̄_0..β̄_g`.
    pub gens: Vec<u64>,
    /// `e_0..e_g`.
    pub e: Vec<u64>,
    /// `n_1..n_g`.
    pub n: Vec<u64>,
    /// `q_1..q_g`.
    pub q: Vec<u64>,
    /// Characteristic exponents `β_0..β_g`.
    pub beta: Vec<u64>,
    pub mu: u64,
    pub conductor: u64,
}

fn invalid(msg: String) -> Error {
    Error::InvalidCharSequence(msg)
}

/// Validates minimal generators and derives the characteristic data.
pub fn curve_from_generators(gens: &[u64]) -> Result<CurveData> {
    if gens.len() < 2 {
        return Err(invalid(format!("need at least two generators, got {}", gens.len())));
    }
    if gens[0] < 2 {
        return Err(invalid(format!("multiplicity β̄_0 = {} must be at least 2", gens[0])));
    }
    if let Some(w) = gens.windows(2).find(|w| w[0] >= w[1]) {
        return Err(invalid(format!("generators not strictly increasing at {} >= {}", w[0], w[1])));
    }
    let mut e = vec![gens[0]];
    for &b in &gens[1..] {
        e.push(e.last().unwrap().gcd(&b));
    }
    let g = gens.len() - 1;
    if e[g] != 1 {
        return Err(invalid(format!("e_g = gcd of all generators = {}, must be 1", e[g])));
    }
    if let Some(i) = (1..=g).find(|&i| e[i] >= e[i - 1]) {
        return Err(invalid(format!(
            "gcd chain not strictly decreasing: e_{} = {} >= e_{} = {}",
            i,
            e[i],
            i - 1,
            e[i - 1]
        )));
    }
    let n: Vec<u64> = (1..=g).map(|i| e[i - 1] / e[i]).collect();
    for i in 2..=g {
        if n[i - 2] * gens[i - 1] >= gens[i] {
            return Err(invalid(format!(
                "n_{} β̄_{} = {} is not below β̄_{} = {}",
                i - 1,
                i - 1,
                n[i - 2] * gens[i - 1],
                i,
                gens[i]
            )));
        }
    }
    for i in 1..=g {
        let member = semigroup::sieve(&gens[..i], gens[i] as usize + 1);
        if member[gens[i] as usize] {
            return Err(invalid(format!("β̄_{} = {} is not a minimal generator", i, gens[i])));
        }
    }
    let q: Vec<u64> = (1..=g).map(|i| gens[i] / e[i]).collect();
    let mut beta = vec![gens[0], gens[1]];
    for i in 2..=g {
        beta.push(gens[i] - n[i - 2] * gens[i - 1] + beta[i - 1]);
    }
    let mut cd = CurveData {
        gens: gens.to_vec(),
        e,
        n,
        q,
        beta,
        mu: 0,
        conductor: semigroup::conductor(gens),
    };
    cd.mu = milnor_zariski(&cd);
    Ok(cd)
}

impl CurveData {
    /// Number of Puiseux pairs.
    pub fn g(&self) -> usize {
        self.gens.len() - 1
    }

    fn single_pair(&self) -> Result<(u64, u64)> {
        match self.gens[..] {
            [p, q] => Ok((p, q)),
            _ => Err(Error::NotSinglePair(self.g())),
        }
    }
}

/// `μ = Σ β_i (e_{i-1} - e_i) - β_0 + 1`.
pub fn milnor_zariski(cd: &CurveData) -> u64 {
    let s: u64 = (1..cd.e.len())
        .map(|i| cd.beta[i] * (cd.e[i - 1] - cd.e[i]))
        .sum();
    s + 1 - cd.beta[0]
}

/// `μ = Σ e_i (n_i - 1)(q_i - 1)`.
pub fn milnor_acampo(cd: &CurveData) -> u64 {
    (1..cd.e.len())
        .map(|i| cd.e[i] * (cd.n[i - 1] - 1) * (cd.q[i - 1] - 1))
        .sum()
}

pub fn semigroup_view(cd: &CurveData, bound: u64) -> SemigroupView {
    SemigroupView::new(&cd.gens, bound)
}

/// Log canonical threshold `1/β̄_0 + 1/β̄_1`.
pub fn lct(cd: &CurveData) -> Q {
    Q::new(1, cd.gens[0] as i128) + Q::new(1, cd.gens[1] as i128)
}

/// `Φ_f(lct) = lct²/2 - 1/μ`: below 1 the limit CDF is `r²/2` and the lct is
/// the smallest spectral number, with multiplicity one.
pub fn phi_at_lct(cd: &CurveData) -> Q {
    let l = lct(cd);
    l * l / Q::from_integer(2) - Q::new(1, cd.mu as i128)
}

/// Spectral numbers below 1 for a single pair `(p, q)`: `(k + p + q)/(pq)`
/// for semigroup elements `k ≤ μ - 2`.
pub fn spectral_below_one(cd: &CurveData) -> Result<Vec<Q>> {
    let (p, q) = cd.single_pair()?;
    let view = semigroup_view(cd, cd.mu);
    let d = (p * q) as i128;
    Ok(view
        .elements_below_conductor
        .iter()
        .filter(|&&k| k + 2 <= cd.mu)
        .map(|&k| Q::new(k as i128 + (p + q) as i128, d))
        .collect())
}

/// `Φ_f` at the largest spectral number below one, `1 - 1/(pq)`, from the
/// definition: `r²/2 - p_g/μ` with `p_g` the number of spectral numbers `≤ r`.
pub fn phi_at_top(cd: &CurveData) -> Result<Q> {
    let below = spectral_below_one(cd)?;
    let r = *below.last().expect("a singular branch has p_g >= 1");
    let pg = below.len() as i128;
    Ok(r * r / Q::from_integer(2) - Q::new(pg, cd.mu as i128))
}

/// One jump of the spectral staircase `r ↦ #{α ≤ r}/μ`. `x = r·pq - p - q`
/// is the abscissa in semigroup units, so `x ∈ S` below one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub x: i64,
    pub r: Q,
    pub y: Q,
}

/// All spectral numbers of a single pair branch, sorted: the values below one
/// and their mirror images `2 - α`.
pub fn single_pair_spectrum(cd: &CurveData) -> Result<Vec<Q>> {
    let below = spectral_below_one(cd)?;
    let two = Q::from_integer(2);
    let above: Vec<Q> = below.iter().rev().map(|a| two - a).collect();
    let mut out = below;
    out.extend(above);
    Ok(out)
}

/// Jumps of the spectral counting function up to `r_max`, each of height `1/μ`.
pub fn spectral_staircase(cd: &CurveData, r_max: Q) -> Result<Vec<Step>> {
    let (p, q) = cd.single_pair()?;
    let d = Q::from_integer((p * q) as i128);
    let mu = cd.mu as i128;
    Ok(single_pair_spectrum(cd)?
        .into_iter()
        .take_while(|r| *r <= r_max)
        .enumerate()
        .map(|(i, r)| Step {
            x: (r * d).to_integer() as i64 - (p + q) as i64,
            r,
            y: Q::new(i as i128 + 1, mu),
        })
        .collect())
}
