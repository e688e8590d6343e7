//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use spectre::lattice::Support;
use spectre::Q;

/// Quasihomogeneous spectrum `{Σ_j (i_j + 1)/d_j : 0 ≤ i_j ≤ d_j - 2}`, sorted.
pub fn brieskorn_pham_spectrum(exps: &[i64]) -> Vec<Q> {
    let mut out = vec![Q::from_integer(0)];
    for &d in exps {
        let mut next = Vec::new();
        for a in &out {
            for i in 1..d {
                next.push(*a + Q::new(i as i128, d as i128));
            }
        }
        out = next;
    }
    out.sort();
    out
}

pub fn support(points: &[&[i64]]) -> Support {
    Support::new(points[0].len(), points.iter().map(|p| p.to_vec()).collect()).unwrap()
}

/// Thirty convenient diagrams, half in two and half in three variables.
pub fn diagram_corpus() -> Vec<Support> {
    let two: Vec<Vec<&[i64]>> = vec![
        vec![&[2, 0], &[0, 3]],
        vec![&[3, 0], &[0, 4]],
        vec![&[4, 0], &[0, 6]],
        vec![&[5, 0], &[0, 9]],
        vec![&[7, 0], &[0, 7]],
        vec![&[4, 0], &[1, 1], &[0, 4]],
        vec![&[5, 0], &[2, 1], &[0, 4]],
        vec![&[6, 0], &[2, 2], &[0, 6]],
        vec![&[8, 0], &[3, 1], &[1, 3], &[0, 8]],
        vec![&[6, 0], &[1, 2], &[0, 5]],
        vec![&[9, 0], &[4, 1], &[1, 3], &[0, 7]],
        vec![&[5, 0], &[3, 1], &[1, 2], &[0, 6]],
        vec![&[3, 0], &[1, 2], &[0, 9]],
        vec![&[10, 0], &[2, 3], &[0, 5]],
        vec![&[6, 0], &[3, 1], &[2, 2], &[0, 4]],
    ];
    let three: Vec<Vec<&[i64]>> = vec![
        vec![&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]],
        vec![&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]],
        vec![&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]],
        vec![&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]],
        vec![&[3, 0, 0], &[0, 4, 0], &[0, 0, 5]],
        vec![&[3, 0, 0], &[0, 4, 0], &[0, 0, 3], &[1, 1, 1]],
        vec![&[4, 0, 0], &[0, 4, 0], &[0, 0, 4], &[1, 1, 1]],
        vec![&[4, 0, 0], &[0, 4, 0], &[0, 0, 4], &[2, 1, 0]],
        vec![&[5, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 1, 1], &[2, 0, 1]],
        vec![&[4, 0, 0], &[0, 5, 0], &[0, 0, 3], &[1, 2, 0], &[0, 1, 1]],
        vec![&[6, 0, 0], &[0, 4, 0], &[0, 0, 3], &[2, 1, 0], &[1, 0, 1]],
        vec![&[3, 0, 0], &[0, 5, 0], &[0, 0, 5], &[1, 1, 1], &[0, 2, 2]],
        vec![&[2, 0, 0], &[0, 4, 0], &[0, 0, 6], &[0, 2, 1]],
        vec![&[5, 0, 0], &[0, 5, 0], &[0, 0, 2], &[1, 1, 0]],
        vec![&[4, 0, 0], &[0, 6, 0], &[0, 0, 4], &[1, 2, 1], &[2, 0, 1]],
    ];
    two.iter().chain(&three).map(|p| support(p)).collect()
}

/// `N_m(s)` by recursive Gauss–Legendre quadrature of `∫_0^1 N_{m-1}(s - x) dx`,
/// splitting at the integer breakpoints so each panel integrates a polynomial.
pub fn convolution_density(m: usize, s: f64) -> f64 {
    if m == 1 {
        return if (0.0..=1.0).contains(&s) { 1.0 } else { 0.0 };
    }
    let mut cuts = vec![0.0];
    let mut k = (s - 1.0).floor() + 1.0;
    while k < s {
        let x = s - k;
        if x > 0.0 && x < 1.0 {
            cuts.push(x);
        }
        k += 1.0;
    }
    cuts.push(1.0);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.windows(2)
        .map(|w| gauss_legendre(w[0], w[1], |x| convolution_density(m - 1, s - x)))
        .sum()
}

const GL_NODES: [f64; 4] = [
    -0.861_136_311_594_052_6,
    -0.339_981_043_584_856_3,
    0.339_981_043_584_856_3,
    0.861_136_311_594_052_6,
];
const GL_WEIGHTS: [f64; 4] = [
    0.347_854_845_137_453_9,
    0.652_145_154_862_546_1,
    0.652_145_154_862_546_1,
    0.347_854_845_137_453_9,
];

pub fn gauss_legendre<F: Fn(f64) -> f64>(a: f64, b: f64, f: F) -> f64 {
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    GL_NODES
        .iter()
        .zip(GL_WEIGHTS)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// `∫_0^m e^{2πits} N_m(s) ds` by composite Gauss–Legendre on the exact density.
pub fn fourier_of_density(m: usize, t: f64, panels_per_unit: usize) -> Complex64 {
    let h = 1.0 / panels_per_unit as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..m * panels_per_unit {
        let (a, b) = (i as f64 * h, (i + 1) as f64 * h);
        let re = gauss_legendre(a, b, |s| convolution_density(m, s) * (2.0 * PI * t * s).cos());
        let im = gauss_legendre(a, b, |s| convolution_density(m, s) * (2.0 * PI * t * s).sin());
        acc += Complex64::new(re, im);
    }
    acc
}
