use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;

use crate::rational::fmt_q;
use crate::Q;

/// A truncated series `Σ c_e t^e` with nonnegative rational exponents.
///
/// Exponents are stored as numerators over a common denominator `den`; every
/// term has exponent strictly below `cutoff`. Arithmetic results are exact
/// for all exponents below the (smaller) cutoff of the operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracPoly {
    den: i64,
    /// Exclusive bound on stored numerators.
    bound: i64,
    cutoff: Q,
    terms: BTreeMap<i64, i64>,
}

fn ceil_num(cutoff: Q, den: i64) -> i64 {
    (cutoff * Q::from_integer(den as i128)).ceil().to_integer() as i64
}

impl FracPoly {
    pub fn zero(den: i64, cutoff: Q) -> Self {
        assert!(den > 0, "denominator must be positive");
        FracPoly {
            den,
            bound: ceil_num(cutoff, den),
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(den: i64, cutoff: Q) -> Self {
        let mut p = FracPoly::zero(den, cutoff);
        p.add_num(0, 1);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, widening the
    /// denominator as needed.
    pub fn from_terms(cutoff: Q, terms: impl IntoIterator<Item = (Q, i64)>) -> Self {
        let mut p = FracPoly::zero(1, cutoff);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn cutoff(&self) -> Q {
        self.cutoff
    }

    /// Adds `c t^{num/den}`; silently drops terms at or beyond the cutoff.
    pub(crate) fn add_num(&mut self, num: i64, c: i64) {
        if num >= self.bound || c == 0 {
            return;
        }
        let slot = self.terms.entry(num).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&num);
        }
    }

    pub fn add_term(&mut self, e: Q, c: i64) {
        let need = *e.denom() as i64;
        if self.den % need != 0 {
            self.rescale(self.den.lcm(&need));
        }
        let num = (e * Q::from_integer(self.den as i128)).to_integer() as i64;
        self.add_num(num, c);
    }

    /// Re-expresses exponents over `den`, which must be a multiple of the current one.
    pub fn rescale(&mut self, den: i64) {
        assert_eq!(den % self.den, 0, "rescale target must be a multiple");
        let f = den / self.den;
        self.terms = self.terms.iter().map(|(&e, &c)| (e * f, c)).collect();
        self.den = den;
        self.bound = ceil_num(self.cutoff, den);
    }

    fn aligned(&self, other: &FracPoly) -> (FracPoly, FracPoly) {
        let den = self.den.lcm(&other.den);
        let cutoff = self.cutoff.min(other.cutoff);
        let mut a = self.clone();
        let mut b = other.clone();
        a.rescale(den);
        b.rescale(den);
        (a.truncated(cutoff), b.truncated(cutoff))
    }

    pub fn coeff(&self, e: Q) -> i64 {
        let scaled = e * Q::from_integer(self.den as i128);
        if !scaled.is_integer() {
            return 0;
        }
        self.terms.get(&(scaled.to_integer() as i64)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Q, i64)> + '_ {
        self.terms
            .iter()
            .map(|(&e, &c)| (Q::new(e as i128, self.den as i128), c))
    }

    /// Number of distinct exponents.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn truncated(&self, cutoff: Q) -> FracPoly {
        let cutoff = cutoff.min(self.cutoff);
        let bound = ceil_num(cutoff, self.den);
        FracPoly {
            den: self.den,
            bound,
            cutoff,
            terms: self.terms.range(..bound).map(|(&e, &c)| (e, c)).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> FracPoly {
        let mut p = FracPoly::zero(self.den, self.cutoff);
        for (&e, &c) in &self.terms {
            p.add_num(e, c * k);
        }
        p
    }

    /// Multiplies by `(1 - t)^k`.
    pub fn mul_one_minus_t_pow(&self, k: usize) -> FracPoly {
        let mut p = self.clone();
        for _ in 0..k {
            let mut next = p.clone();
            for (&e, &c) in &p.terms {
                next.add_num(e + self.den, -c);
            }
            p = next;
        }
        p
    }
}

impl AddAssign<&FracPoly> for FracPoly {
    fn add_assign(&mut self, rhs: &FracPoly) {
        if self.den == rhs.den && self.cutoff <= rhs.cutoff {
            for (&e, &c) in &rhs.terms {
                self.add_num(e, c);
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Add for &FracPoly {
    type Output = FracPoly;
    fn add(self, rhs: &FracPoly) -> FracPoly {
        let (mut a, b) = self.aligned(rhs);
        for (&e, &c) in &b.terms {
            a.add_num(e, c);
        }
        a
    }
}

impl Neg for &FracPoly {
    type Output = FracPoly;
    fn neg(self) -> FracPoly {
        self.scaled(-1)
    }
}

impl Sub for &FracPoly {
    type Output = FracPoly;
    fn sub(self, rhs: &FracPoly) -> FracPoly {
        self + &(-rhs)
    }
}

impl Mul for &FracPoly {
    type Output = FracPoly;
    fn mul(self, rhs: &FracPoly) -> FracPoly {
        let (a, b) = self.aligned(rhs);
        let mut out = FracPoly::zero(a.den, a.cutoff);
        for (&e1, &c1) in &a.terms {
            for (&e2, &c2) in b.terms.range(..a.bound - e1) {
                out.add_num(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| format!("{c}*t^({})", fmt_q(&e)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn truncation_drops_terms() {
        let p = FracPoly::from_terms(qi(1), [(q(1, 2), 1), (qi(1), 3), (q(3, 2), 1)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(q(1, 2)), 1);
    }

    #[test]
    fn no_zero_coefficients() {
        let mut p = FracPoly::one(6, qi(2));
        p.add_term(qi(0), -1);
        assert!(p.is_zero());
    }

    #[test]
    fn geometric_series_times_one_minus_t() {
        // (1 + t + t^2 + ...)(1 - t) = 1 below the cutoff
        let mut g = FracPoly::zero(1, qi(5));
        for e in 0..5 {
            g.add_num(e, 1);
        }
        let p = g.mul_one_minus_t_pow(1);
        assert_eq!(p, FracPoly::one(1, qi(5)));
    }

    #[test]
    fn product_of_fractional_series() {
        let mut a = FracPoly::zero(2, qi(2));
        let mut b = FracPoly::zero(3, qi(2));
        for e in 0..4 {
            a.add_num(e, 1);
        }
        for e in 0..6 {
            b.add_num(e, 1);
        }
        let p = &a * &b;
        assert_eq!(p.den(), 6);
        // exponents i/2 + j/3 < 2
        let mut expect = 0;
        for i in 0..4 {
            for j in 0..6 {
                if 3 * i + 2 * j < 12 {
                    expect += 1;
                }
            }
        }
        assert_eq!(p.mass(), expect);
        assert_eq!(p.coeff(qi(1)), 2);
    }

    #[test]
    fn mixed_denominators_add() {
        let a = FracPoly::from_terms(qi(3), [(q(1, 2), 1)]);
        let b = FracPoly::from_terms(qi(2), [(q(1, 3), 2), (q(1, 2), -1)]);
        let s = &a + &b;
        assert_eq!(s.cutoff(), qi(2));
        assert_eq!(s.terms().collect::<Vec<_>>(), vec![(q(1, 3), 2)]);
        assert_eq!((&a - &a).len(), 0);
    }
}
