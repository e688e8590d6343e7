//! Exhaustive sweeps over plane-branch semigroups.

use num_integer::Integer;
use num_traits::Zero;

use super::{curve_from_generators, milnor_acampo, milnor_zariski, phi_at_lct, CurveData};
use crate::{par, Q};

/// Semigroups `<2,3>` and `<2,5>`, where `Φ_f(lct) < 0`.
pub const KNOWN_EXCEPTIONS: [[u64; 2]; 2] = [[2, 3], [2, 5]];

/// All minimal generator tuples of plane-branch semigroups with at most
/// `max_g` Puiseux pairs and every generator `<= max_gen`, in lexicographic order.
pub fn enumerate_generators(max_g: usize, max_gen: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, e: u64, max_g: usize, max_gen: u64, out: &mut Vec<Vec<u64>>) {
        let i = prefix.len();
        let last = *prefix.last().unwrap();
        // n_{i-1} β̄_{i-1} < β̄_i from the second pair on
        let lower = if i == 1 {
            last + 1
        } else {
            let e_prev = prefix[..i - 1].iter().fold(0, |a, &b| a.gcd(&b));
            e_prev / e * last + 1
        };
        for b in lower..=max_gen {
            let next_e = e.gcd(&b);
            if next_e == e {
                continue;
            }
            prefix.push(b);
            if next_e == 1 {
                out.push(prefix.clone());
            } else if prefix.len() <= max_g {
                extend(prefix, next_e, max_g, max_gen, out);
            }
            prefix.pop();
        }
    }
    if max_g == 0 {
        return Vec::new();
    }
    let starts: Vec<u64> = (2..=max_gen).collect();
    par::map(&starts, |&b0| {
        let mut out = Vec::new();
        extend(&mut vec![b0], b0, max_g, max_gen, &mut out);
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Outcome of [`thm34_sweep`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub max_g: usize,
    pub max_gen: u64,
    /// Instances per number of pairs, index `g - 1`.
    pub instances_by_g: Vec<usize>,
    /// Instances with `Φ_f(lct) <= 0`, and the value.
    pub exceptions: Vec<(Vec<u64>, Q)>,
    /// Instances where the two Milnor formulas disagree.
    pub milnor_mismatches: Vec<Vec<u64>>,
    /// Instances violating `μ > -β_g + β_0 β_1 - β_0`.
    pub lower_bound_violations: Vec<Vec<u64>>,
    /// `g = 2` instances violating `μ - e_1² μ_1 > 0`.
    pub two_pair_violations: Vec<Vec<u64>>,
}

impl SweepReport {
    pub fn instances(&self) -> usize {
        self.instances_by_g.iter().sum()
    }

    /// Exceptions outside `<2,3>`, `<2,5>`.
    pub fn unexpected_exceptions(&self) -> Vec<&(Vec<u64>, Q)> {
        self.exceptions
            .iter()
            .filter(|(g, _)| !KNOWN_EXCEPTIONS.iter().any(|k| k[..] == g[..]))
            .collect()
    }

    pub fn is_clean(&self) -> bool {
        self.unexpected_exceptions().is_empty()
            && self.milnor_mismatches.is_empty()
            && self.lower_bound_violations.is_empty()
            && self.two_pair_violations.is_empty()
    }
}

struct Checked {
    gens: Vec<u64>,
    g: usize,
    phi: Q,
    milnor_ok: bool,
    lower_ok: bool,
    two_pair_ok: bool,
}

fn check(cd: &CurveData) -> Checked {
    let g = cd.g();
    let mu = cd.mu as i128;
    let b = |i: usize| cd.beta[i] as i128;
    let lower_ok = mu > -b(g) + b(0) * b(1) - b(0);
    let two_pair_ok = g != 2 || {
        let mu1 = ((cd.n[0] - 1) * (cd.q[0] - 1)) as i128;
        let e1 = cd.e[1] as i128;
        mu - e1 * e1 * mu1 > 0
    };
    Checked {
        gens: cd.gens.clone(),
        g,
        phi: phi_at_lct(cd),
        milnor_ok: milnor_zariski(cd) == milnor_acampo(cd) && cd.mu == cd.conductor,
        lower_ok,
        two_pair_ok,
    }
}

/// Evaluates `Φ_f(lct)` and the Milnor-number inequalities on every
/// semigroup from [`enumerate_generators`].
pub fn thm34_sweep(max_g: usize, max_gen: u64) -> SweepReport {
    let tuples = enumerate_generators(max_g, max_gen);
    let checked = par::map(&tuples, |gens| {
        let cd = curve_from_generators(gens).expect("enumerated tuples are valid");
        check(&cd)
    });
    let mut report = SweepReport {
        max_g,
        max_gen,
        instances_by_g: vec![0; max_g],
        ..Default::default()
    };
    for c in checked {
        report.instances_by_g[c.g - 1] += 1;
        if c.phi <= Q::zero() {
            report.exceptions.push((c.gens.clone(), c.phi));
        }
        if !c.milnor_ok {
            report.milnor_mismatches.push(c.gens.clone());
        }
        if !c.lower_ok {
            report.lower_bound_violations.push(c.gens.clone());
        }
        if !c.two_pair_ok {
            report.two_pair_violations.push(c.gens);
        }
    }
    report
}
