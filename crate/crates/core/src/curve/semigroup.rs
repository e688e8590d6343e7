/// Membership table of the numerical semigroup generated by `gens`, for `0..len`.
pub(crate) fn sieve(gens: &[u64], len: usize) -> Vec<bool> {
    let mut member = vec![false; len];
    if len > 0 {
        member[0] = true;
    }
    for k in 1..len {
        member[k] = gens
            .iter()
            .any(|&g| (g as usize) <= k && member[k - g as usize]);
    }
    member
}

/// Least `c` such that every integer `>= c` is in the semigroup.
///
/// A run of `gens[0]` consecutive members forces all larger integers in.
pub(crate) fn conductor(gens: &[u64]) -> u64 {
    let run = gens[0] as usize;
    let mut len = 4 * gens.iter().max().copied().unwrap_or(1) as usize * run;
    loop {
        let member = sieve(gens, len);
        let mut streak = 0;
        for (k, &m) in member.iter().enumerate() {
            streak = if m { streak + 1 } else { 0 };
            if streak == run {
                return (k + 1 - run) as u64;
            }
        }
        len *= 2;
    }
}

/// Elements and gaps of a plane-branch value semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupView {
    pub elements_below_conductor: Vec<u64>,
    pub gaps: Vec<u64>,
    pub conductor: u64,
    member: Vec<bool>,
}

impl SemigroupView {
    pub(crate) fn new(gens: &[u64], bound: u64) -> Self {
        let conductor = conductor(gens);
        let len = bound.max(conductor) as usize + 1;
        let member = sieve(gens, len);
        let c = conductor as usize;
        SemigroupView {
            elements_below_conductor: (0..c).filter(|&k| member[k]).map(|k| k as u64).collect(),
            gaps: (0..c).filter(|&k| !member[k]).map(|k| k as u64).collect(),
            conductor,
            member,
        }
    }

    pub fn contains(&self, k: u64) -> bool {
        k >= self.conductor || self.member[k as usize]
    }

    /// Whether `a ↦ c - 1 - a` maps `S ∩ [0, c)` bijectively onto the gaps.
    pub fn is_symmetric(&self) -> bool {
        let c = self.conductor;
        c > 0
            && self.elements_below_conductor.len() == self.gaps.len()
            && self
                .elements_below_conductor
                .iter()
                .all(|&a| !self.contains(c - 1 - a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_and_conductor() {
        assert_eq!(conductor(&[2, 3]), 2);
        assert_eq!(conductor(&[5, 9]), 32);
        assert_eq!(conductor(&[4, 6, 13]), 16);
        let m = sieve(&[3, 5], 9);
        assert_eq!(m, vec![true, false, false, true, false, true, true, false, true]);
    }

    #[test]
    fn view_of_two_three() {
        let v = SemigroupView::new(&[2, 3], 2);
        assert_eq!(v.gaps, vec![1]);
        assert_eq!(v.elements_below_conductor, vec![0]);
        assert!(v.contains(1000));
        assert!(v.is_symmetric());
    }
}
