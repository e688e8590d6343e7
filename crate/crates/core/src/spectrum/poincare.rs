//! Truncated Poincaré series of the graded semigroup rings of face cones.

use super::FracPoly;
use crate::lattice::{NewtonPolyhedron, EMPTY_FACE};
use crate::{par, Q};

/// Per-coordinate increments of a lower bound for `den * ν`.
///
/// `ν` is superadditive and `ν(e_i) = 1/m_i` for the axis intercept `m_i`,
/// so `ν(x) >= Σ x_i / m_i`; each `den / m_i` is an integer because `1/m_i`
/// is a component of the facet through `m_i e_i`.
fn axis_steps(poly: &NewtonPolyhedron) -> Vec<i64> {
    poly.support()
        .axis_intercepts()
        .iter()
        .map(|&m| poly.denominator() / m)
        .collect()
}

/// Visits all lattice points supported on `coords` whose lower weight bound
/// is below `bound`, splitting the first coordinate across workers. Each
/// worker folds into its own accumulator; accumulators come back in order.
fn fold_points<A, I, V>(
    poly: &NewtonPolyhedron,
    coords: &[usize],
    bound: i64,
    init: I,
    visit: V,
) -> Vec<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[i64]) + Sync + Send,
{
    let steps = axis_steps(poly);
    let dim = poly.dim();
    let Some((&first, rest)) = coords.split_first() else {
        let mut acc = init();
        visit(&mut acc, &vec![0; dim]);
        return vec![acc];
    };
    let first_len = ((bound + steps[first] - 1) / steps[first]).max(0) as usize;

    fn walk<A>(
        rest: &[usize],
        steps: &[i64],
        budget: i64,
        x: &mut Vec<i64>,
        acc: &mut A,
        visit: &dyn Fn(&mut A, &[i64]),
    ) {
        let Some((&c, tail)) = rest.split_first() else {
            visit(acc, x);
            return;
        };
        let mut v = 0;
        while v * steps[c] < budget {
            x[c] = v;
            walk(tail, steps, budget - v * steps[c], x, acc, visit);
            v += 1;
        }
        x[c] = 0;
    }

    par::map_range(first_len, |v| {
        let mut acc = init();
        let mut x = vec![0; dim];
        x[first] = v as i64;
        walk(rest, &steps, bound - v as i64 * steps[first], &mut x, &mut acc, &visit);
        acc
    })
}

fn cutoff_bound(poly: &NewtonPolyhedron, cutoff: Q) -> i64 {
    (cutoff * Q::from_integer(poly.denominator() as i128))
        .ceil()
        .to_integer() as i64
}

/// `p_{A_σ}(t)` truncated below `cutoff`: the sum of `t^{ν(x)}` over lattice
/// points of the closed cone over `σ`. The empty face gives `1`.
pub fn poincare_cone(poly: &NewtonPolyhedron, sigma: usize, cutoff: Q) -> FracPoly {
    let den = poly.denominator();
    if sigma == EMPTY_FACE {
        return FracPoly::one(den, cutoff);
    }
    let bound = cutoff_bound(poly, cutoff);
    let coords = &poly.faces()[sigma].coords;
    let parts = fold_points(
        poly,
        coords,
        bound,
        || FracPoly::zero(den, cutoff),
        |acc, x| {
            if poly.in_cone(sigma, x) {
                acc.add_num(poly.weight_num(x), 1);
            }
        },
    );
    let mut out = FracPoly::zero(den, cutoff);
    for p in &parts {
        out += p;
    }
    out
}

/// `p_{A_σ}` for every face at once: one pass over the lattice points sorts
/// each point into the relative interior of its carrier face, then each cone
/// series is the sum over the faces of `σ`.
pub fn poincare_all(poly: &NewtonPolyhedron, cutoff: Q) -> Vec<FracPoly> {
    let den = poly.denominator();
    let n_faces = poly.faces().len();
    let all: Vec<usize> = (0..poly.dim()).collect();
    let bound = cutoff_bound(poly, cutoff);
    let parts = fold_points(
        poly,
        &all,
        bound,
        || vec![FracPoly::zero(den, cutoff); n_faces],
        |acc, x| acc[poly.carrier(x)].add_num(poly.weight_num(x), 1),
    );
    let mut relint = vec![FracPoly::zero(den, cutoff); n_faces];
    for part in &parts {
        for (r, p) in relint.iter_mut().zip(part) {
            *r += p;
        }
    }
    poly.faces()
        .iter()
        .map(|f| {
            let mut p = FracPoly::zero(den, cutoff);
            for &t in &f.subfaces {
                p += &relint[t];
            }
            p
        })
        .collect()
}

pub(crate) fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `q_σ = Σ_{τ≤σ} (-1)^{d(σ)-d(τ)} (1-t)^{d(τ)} p_{A_τ}` from precomputed cone series.
pub fn q_from_cones(poly: &NewtonPolyhedron, cones: &[FracPoly], sigma: usize) -> FracPoly {
    let s = &poly.faces()[sigma];
    let mut q = FracPoly::zero(cones[sigma].den(), cones[sigma].cutoff());
    for &t in &s.subfaces {
        let tau = &poly.faces()[t];
        let term = cones[t].mul_one_minus_t_pow(tau.d).scaled(sign(s.d - tau.d));
        q += &term;
    }
    q
}

/// `q_σ(t)`, the interior part of `A_σ / (F_{0,σ}, ..., F_{n,σ})`, truncated below `cutoff`.
pub fn q_sigma(poly: &NewtonPolyhedron, sigma: usize, cutoff: Q) -> FracPoly {
    let cones: Vec<FracPoly> = (0..poly.faces().len())
        .map(|t| {
            if poly.is_face_of(t, sigma) {
                poincare_cone(poly, t, cutoff)
            } else {
                FracPoly::zero(poly.denominator(), cutoff)
            }
        })
        .collect();
    q_from_cones(poly, &cones, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Support;
    use crate::rational::{q, qi};

    fn cusp() -> NewtonPolyhedron {
        NewtonPolyhedron::build(&Support::new(2, vec![vec![2, 0], vec![0, 3]]).unwrap()).unwrap()
    }

    fn face(poly: &NewtonPolyhedron, verts: &[&[i64]]) -> usize {
        let v: Vec<Vec<i64>> = verts.iter().map(|v| v.to_vec()).collect();
        poly.faces().iter().position(|f| f.vertices == v).unwrap()
    }

    #[test]
    fn segment_cone_matches_double_loop() {
        let p = cusp();
        let seg = face(&p, &[&[0, 3], &[2, 0]]);
        let got = poincare_cone(&p, seg, qi(2));
        // oracle: every (i, j) >= 0 with i/2 + j/3 < 2
        let mut want = FracPoly::zero(6, qi(2));
        for i in 0..4 {
            for j in 0..6 {
                want.add_term(q(i, 2) + q(j, 3), 1);
            }
        }
        assert_eq!(got, want);
        assert_eq!(got.coeff(qi(1)), 2);
        assert_eq!(got.coeff(q(5, 6)), 1);
    }

    #[test]
    fn vertex_ray() {
        let p = cusp();
        let v = face(&p, &[&[2, 0]]);
        let got = poincare_cone(&p, v, qi(2));
        let want = FracPoly::from_terms(qi(2), [(qi(0), 1), (q(1, 2), 1), (qi(1), 1), (q(3, 2), 1)]);
        assert_eq!(got.terms().collect::<Vec<_>>(), want.terms().collect::<Vec<_>>());
    }

    #[test]
    fn empty_face_is_one() {
        let p = cusp();
        assert_eq!(poincare_cone(&p, EMPTY_FACE, qi(2)).terms().collect::<Vec<_>>(), vec![(qi(0), 1)]);
        assert_eq!(q_sigma(&p, EMPTY_FACE, qi(2)).terms().collect::<Vec<_>>(), vec![(qi(0), 1)]);
    }

    #[test]
    fn binned_equals_direct() {
        let p = NewtonPolyhedron::build(
            &Support::new(3, vec![vec![3, 0, 0], vec![0, 4, 0], vec![0, 0, 3], vec![1, 1, 1]]).unwrap(),
        )
        .unwrap();
        let all = poincare_all(&p, qi(3));
        for (i, got) in all.iter().enumerate() {
            assert_eq!(got, &poincare_cone(&p, i, qi(3)), "face {i}");
        }
    }

    #[test]
    fn q_of_vertex_and_segment() {
        let p = cusp();
        let v = face(&p, &[&[2, 0]]);
        // C[u]/(u^2) with deg u = 1/2: interior monomial u
        assert_eq!(q_sigma(&p, v, qi(3)).terms().collect::<Vec<_>>(), vec![(q(1, 2), 1)]);
        let seg = face(&p, &[&[0, 3], &[2, 0]]);
        assert_eq!(
            q_sigma(&p, seg, qi(3)).terms().collect::<Vec<_>>(),
            vec![(q(5, 6), 1), (q(7, 6), 1)]
        );
    }
}
