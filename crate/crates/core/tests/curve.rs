use num_integer::Integer;
use proptest::prelude::*;
use spectre::curve::{
    curve_from_generators, enumerate_generators, lct, milnor_acampo, milnor_zariski,
    phi_at_lct, phi_at_top, semigroup_view, single_pair_spectrum, spectral_below_one,
};
use spectre::dist::phi_f;
use spectre::lattice::Support;
use spectre::rational::to_f64;
use spectre::spectrum::{spectrum_stats, steenbrink_spectrum};
use spectre::{Error, Q};

/// Gaps of the numerical semigroup by dynamic programming over `0..limit`.
fn gap_count(gens: &[u64], limit: usize) -> usize {
    let mut member = vec![false; limit];
    member[0] = true;
    for k in 1..limit {
        member[k] = gens.iter().any(|&g| g as usize <= k && member[k - g as usize]);
    }
    member.iter().filter(|m| !**m).count()
}

fn pair_spectrum(p: u64, q: u64) -> Vec<Q> {
    let s = Support::brieskorn_pham(&[p as i64, q as i64]).unwrap();
    spectrum_stats(&steenbrink_spectrum(&s).unwrap(), 2).unwrap().alphas
}

#[test]
fn milnor_is_twice_the_gap_count() {
    for gens in enumerate_generators(2, 36) {
        let cd = curve_from_generators(&gens).unwrap();
        let delta = gap_count(&gens, 4 * cd.mu as usize + 4);
        assert_eq!(cd.mu, 2 * delta as u64, "{gens:?}");
        assert_eq!(milnor_zariski(&cd), milnor_acampo(&cd));
    }
}

#[test]
fn semigroups_are_gorenstein() {
    for gens in enumerate_generators(2, 30) {
        let cd = curve_from_generators(&gens).unwrap();
        let view = semigroup_view(&cd, 2 * cd.mu);
        assert!(view.is_symmetric(), "{gens:?}");
        assert_eq!(view.conductor, cd.mu);
        assert!(!view.contains(cd.mu - 1));
        assert!(view.contains(cd.mu.saturating_sub(2)) || cd.mu < 2);
    }
}

#[test]
fn single_pair_spectra_match_the_newton_route() {
    for p in 2..=12u64 {
        for q in p + 1..=12 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let cd = curve_from_generators(&[p, q]).unwrap();
            let full = pair_spectrum(p, q);
            let below: Vec<Q> = full.iter().copied().filter(|a| *a < Q::from_integer(1)).collect();
            assert_eq!(spectral_below_one(&cd).unwrap(), below, "({p},{q})");
            assert_eq!(single_pair_spectrum(&cd).unwrap(), full, "({p},{q})");
            assert_eq!(*full.first().unwrap(), lct(&cd));
        }
    }
}

#[test]
fn extremal_values_agree_with_phi_f() {
    for (p, qq) in [(2u64, 3u64), (3, 7), (5, 9), (4, 11)] {
        let cd = curve_from_generators(&[p, qq]).unwrap();
        let s = Support::brieskorn_pham(&[p as i64, qq as i64]).unwrap();
        let st = spectrum_stats(&steenbrink_spectrum(&s).unwrap(), 2).unwrap();
        assert_eq!(phi_f(&st, lct(&cd)).unwrap(), phi_at_lct(&cd));
        let top = Q::from_integer(1) - Q::new(1, (p * qq) as i128);
        assert_eq!(phi_f(&st, top).unwrap(), phi_at_top(&cd).unwrap());
    }
}

#[test]
fn lct_value_tends_to_zero() {
    let vals: Vec<f64> = [10u64, 100, 1000]
        .iter()
        .map(|&p| to_f64(&phi_at_lct(&curve_from_generators(&[p, p + 1]).unwrap())))
        .collect();
    assert!(vals.iter().all(|v| *v > 0.0));
    assert!(vals.windows(2).all(|w| w[1] < w[0]));
    assert!(vals[2] < 1e-5);
}

#[test]
fn top_value_is_small_for_large_pairs() {
    let cd = curve_from_generators(&[1009, 1013]).unwrap();
    let v = phi_at_top(&cd).unwrap();
    assert!(v < Q::from_integer(0));
    assert!(to_f64(&v).abs() < 1e-6);
}

#[test]
fn rejects_invalid_sequences() {
    for gens in [&[5u64][..], &[1, 3], &[4, 6], &[9, 5], &[4, 6, 9], &[4, 10, 11], &[3, 5, 7]] {
        assert!(matches!(curve_from_generators(gens), Err(Error::InvalidCharSequence(_))), "{gens:?}");
    }
    let cd = curve_from_generators(&[4, 6, 13]).unwrap();
    assert_eq!(spectral_below_one(&cd), Err(Error::NotSinglePair(2)));
}

proptest! {
    #[test]
    fn pair_invariants(p in 2u64..40, q in 3u64..60) {
        prop_assume!(p < q && p.gcd(&q) == 1);
        let cd = curve_from_generators(&[p, q]).unwrap();
        prop_assert_eq!(cd.mu, (p - 1) * (q - 1));
        let below = spectral_below_one(&cd).unwrap();
        prop_assert_eq!(below.len() as u64, cd.mu / 2);
        prop_assert_eq!(*below.last().unwrap(), Q::from_integer(1) - Q::new(1, (p * q) as i128));
        prop_assert_eq!(below[0], Q::new(1, p as i128) + Q::new(1, q as i128));
        prop_assert!(phi_at_top(&cd).unwrap() < Q::from_integer(0));
    }
}
