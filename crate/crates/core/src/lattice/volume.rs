use num_traits::Zero;

use super::NewtonPolyhedron;
use crate::linalg;
use crate::rational::factorial;
use crate::Q;

/// Pulling triangulation of a face: each simplex is a list of `d(σ)` vertices.
fn triangulate(poly: &NewtonPolyhedron, sigma: usize) -> Vec<Vec<Vec<i64>>> {
    let face = &poly.faces()[sigma];
    if face.dim == 0 {
        return vec![face.vertices.clone()];
    }
    let apex = &face.vertices[0];
    let mut out = Vec::new();
    for tau in poly.facets_of_face(sigma) {
        if poly.faces()[tau].vertices.contains(apex) {
            continue;
        }
        for mut simplex in triangulate(poly, tau) {
            simplex.push(apex.clone());
            out.push(simplex);
        }
    }
    out
}

/// Volume of `conv(σ ∪ {0})` inside the coordinate plane spanned by the
/// face's coordinates; requires `k(σ) = d(σ)`.
pub fn cone_volume(poly: &NewtonPolyhedron, sigma: usize) -> Q {
    let face = &poly.faces()[sigma];
    if face.is_empty() || face.k != face.d {
        return Q::zero();
    }
    let norm = Q::from_integer(factorial(face.d as u32));
    triangulate(poly, sigma)
        .iter()
        .map(|simplex| {
            let m: Vec<Vec<i64>> = simplex
                .iter()
                .map(|v| face.coords.iter().map(|&c| v[c]).collect())
                .collect();
            linalg::abs_det(&m) / norm
        })
        .sum()
}

/// `[V_1, ..., V_{n+1}]`: `V_k` sums the k-volumes of `conv(Γ ∪ {0})` cut by
/// the k-dimensional coordinate planes.
pub fn volumes(poly: &NewtonPolyhedron) -> Vec<Q> {
    let mut v = vec![Q::zero(); poly.dim()];
    for (i, face) in poly.faces().iter().enumerate() {
        if !face.is_empty() && face.k == face.d {
            v[face.d - 1] += cone_volume(poly, i);
        }
    }
    v
}
