mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use spectre::dist::{
    chi, default_grid, fourier_n, ih_cdf, ih_pdf, irwin_hall_density, ks_distance_exact,
    lemma9_kernel, phi_f,
};
use spectre::lattice::Support;
use spectre::rational::{q, qi};
use spectre::spectrum::{spectrum_stats, steenbrink_spectrum, SpectrumStats};
use spectre::{Error, Q};
use std::f64::consts::PI;

use common::{brieskorn_pham_spectrum, fourier_of_density};

#[test]
fn fourier_transform_matches_quadrature() {
    for m in 1..=3 {
        for t in [-2.3, -0.7, 0.25, 1.0, 1.5, 3.1] {
            let err = (fourier_n(m, t) - fourier_of_density(m, t, 32)).norm();
            assert!(err < 1e-6, "m = {m}, t = {t}: {err:e}");
        }
    }
}

#[test]
fn piecewise_route_matches_closed_form() {
    for m in 1..=6 {
        let density = irwin_hall_density(m);
        let cdf = density.antiderivative();
        assert_eq!(density.breakpoints().len(), m + 1);
        for i in 0..=12 * m as i128 {
            let s = q(i, 12);
            if m > 1 || s < qi(1) {
                assert_eq!(density.eval(s), ih_pdf(m, s).unwrap(), "m = {m}, s = {s}");
            }
            assert_eq!(cdf.eval(s), ih_cdf(m, s).unwrap(), "m = {m}, s = {s}");
        }
        assert_eq!(ih_cdf(m, qi(m as i128)).unwrap(), qi(1));
    }
}

#[test]
fn domain_errors() {
    assert!(matches!(ih_pdf(3, q(-1, 2)), Err(Error::OutOfDomain { .. })));
    assert!(matches!(ih_cdf(2, q(5, 2)), Err(Error::OutOfDomain { .. })));
    assert!(matches!(lemma9_kernel(0.5, 4.0), Err(Error::PoleAtArgument(_))));
}

#[test]
fn known_distances() {
    let cusp = SpectrumStats::new(vec![q(5, 6), q(7, 6)], 2);
    assert_eq!(ks_distance_exact(&cusp, 2), q(25, 72));
    assert_eq!(phi_f(&cusp, q(5, 6)).unwrap(), q(25, 72) - q(1, 2));
    assert_eq!(phi_f(&cusp, q(4, 6)).unwrap(), q(2, 9));
    let grid = default_grid();
    assert_eq!(grid.len(), 201);
    assert_eq!((grid[0], grid[100], grid[200]), (-5.0, 0.0, 5.0));
}

fn bp_stats() -> impl Strategy<Value = SpectrumStats> {
    prop::collection::vec(2i64..8, 1..4).prop_map(|e| {
        let n = e.len();
        SpectrumStats::new(brieskorn_pham_spectrum(&e), n)
    })
}

proptest! {
    #[test]
    fn chi_bounded_and_conjugate(st in bp_stats(), t in -5.0f64..5.0) {
        let c = chi(&st, t);
        prop_assert!(c.norm() <= 1.0 + 1e-12);
        prop_assert!((chi(&st, -t) - c.conj()).norm() < 1e-12);
    }

    // a spectrum symmetric about (n+1)/2 has a real centred transform
    #[test]
    fn centred_chi_is_real(st in bp_stats(), t in -5.0f64..5.0) {
        let centred = Complex64::from_polar(1.0, -PI * t * st.n_plus_1 as f64) * chi(&st, t);
        prop_assert!(centred.im.abs() < 1e-10);
    }

    #[test]
    fn cdf_is_symmetric(m in 1usize..7, num in 0i128..=600) {
        let r = q(num, 100).min(qi(m as i128));
        let mm = qi(m as i128);
        prop_assert_eq!(ih_cdf(m, r).unwrap() + ih_cdf(m, mm - r).unwrap(), qi(1));
    }

    #[test]
    fn phi_f_vanishes_at_the_ends(a in 2i64..9, b in 2i64..9) {
        let s = Support::brieskorn_pham(&[a, b]).unwrap();
        let st = spectrum_stats(&steenbrink_spectrum(&s).unwrap(), 2).unwrap();
        prop_assert_eq!(phi_f(&st, Q::from_integer(0)).unwrap(), qi(0));
        prop_assert_eq!(phi_f(&st, Q::from_integer(2)).unwrap(), qi(0));
    }
}
