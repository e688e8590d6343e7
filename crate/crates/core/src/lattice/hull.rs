use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Support;
use crate::linalg;
use crate::{Error, Result, Q};

/// Index of the empty face in [`NewtonPolyhedron::faces`].
pub const EMPTY_FACE: usize = 0;

/// A compact facet: the supporting hyperplane `<a, x> = 1` with `a > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// The functional `a`, exact.
    pub functional: Vec<Q>,
    /// `a * den` where `den` is the polyhedron-wide common denominator.
    pub(crate) numerators: Vec<i64>,
    pub(crate) mask: u128,
}

/// A compact face of the Newton diagram, or the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Vertices in lexicographic order.
    pub vertices: Vec<Vec<i64>>,
    /// Affine dimension; `-1` for the empty face.
    pub dim: i32,
    /// `dim + 1`.
    pub d: usize,
    /// Dimension of the smallest coordinate subspace containing the face.
    pub k: usize,
    /// Coordinates that are nonzero somewhere on the face.
    pub coords: Vec<usize>,
    /// Compact facets containing the face.
    pub facets: Vec<usize>,
    /// All faces `τ ≤ σ` (including the empty face and the face itself).
    pub subfaces: Vec<usize>,
    pub(crate) mask: u128,
}

impl Face {
    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

/// The Newton polyhedron of a convenient support.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    support: Support,
    facets: Vec<Facet>,
    faces: Vec<Face>,
    den: i64,
    index: HashMap<u128, usize>,
    zero_masks: Vec<u128>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn dot(a: &[Q], x: &[i64]) -> Q {
    a.iter()
        .zip(x)
        .map(|(ai, &xi)| *ai * Q::from_integer(xi as i128))
        .sum()
}

impl NewtonPolyhedron {
    /// Builds the compact facets and the compact face poset.
    pub fn build(support: &Support) -> Result<Self> {
        if let Some(axis) = support.missing_axis() {
            return Err(Error::NotConvenient { axis });
        }
        let dim = support.dim();
        let pts = support.points();

        // Candidate normals through every `dim`-subset of support points.
        let mut normals: BTreeSet<Vec<Q>> = BTreeSet::new();
        for subset in combinations(pts.len(), dim) {
            let m: Vec<Vec<Q>> = subset
                .iter()
                .map(|&i| pts[i].iter().map(|&c| Q::from_integer(c as i128)).collect())
                .collect();
            let ones = vec![Q::from_integer(1); dim];
            let Some(a) = linalg::solve(&m, &ones) else {
                continue;
            };
            if !a.iter().all(Signed::is_positive) {
                continue;
            }
            if pts.iter().all(|p| dot(&a, p) >= Q::from_integer(1)) {
                normals.insert(a);
            }
        }

        let den = normals
            .iter()
            .flatten()
            .fold(1i128, |acc, a| acc.lcm(a.denom()));
        let den = i64::try_from(den).map_err(|_| Error::Parse("facet denominator overflow".into()))?;
        let one = Q::from_integer(1);
        let facets: Vec<Facet> = normals
            .into_iter()
            .map(|a| {
                let mask = pts
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| dot(&a, p) == one)
                    .fold(0u128, |m, (i, _)| m | (1 << i));
                let numerators = a
                    .iter()
                    .map(|ai| (*ai * Q::from_integer(den as i128)).to_integer() as i64)
                    .collect();
                Facet {
                    functional: a,
                    numerators,
                    mask,
                }
            })
            .collect();

        let zero_masks: Vec<u128> = (0..dim)
            .map(|i| {
                pts.iter()
                    .enumerate()
                    .filter(|(_, p)| p[i] == 0)
                    .fold(0u128, |m, (j, _)| m | (1 << j))
            })
            .collect();

        // Every compact face is an intersection of a compact facet with other
        // facets of the polyhedron (compact ones and coordinate hyperplanes).
        let cutters: Vec<u128> = facets
            .iter()
            .map(|f| f.mask)
            .chain(zero_masks.iter().copied())
            .collect();
        let mut masks: BTreeSet<u128> = facets.iter().map(|f| f.mask).collect();
        let mut work: Vec<u128> = masks.iter().copied().collect();
        while let Some(m) = work.pop() {
            for &c in &cutters {
                let next = m & c;
                if next != 0 && masks.insert(next) {
                    work.push(next);
                }
            }
        }

        let points_of = |mask: u128| -> Vec<usize> {
            (0..pts.len()).filter(|&i| mask >> i & 1 == 1).collect()
        };
        let dim_of = |mask: u128| -> i32 {
            let idx = points_of(mask);
            let base = &pts[idx[0]];
            let diffs: Vec<Vec<i64>> = idx[1..]
                .iter()
                .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            linalg::rank(&diffs) as i32
        };
        let dims: HashMap<u128, i32> = masks.iter().map(|&m| (m, dim_of(m))).collect();
        let vertex_masks: Vec<u128> = masks.iter().copied().filter(|m| dims[m] == 0).collect();

        let mut faces: Vec<Face> = masks
            .iter()
            .map(|&mask| {
                let mut vertices: Vec<Vec<i64>> = vertex_masks
                    .iter()
                    .filter(|&&v| v & !mask == 0)
                    .map(|&v| pts[v.trailing_zeros() as usize].clone())
                    .collect();
                vertices.sort();
                let coords: Vec<usize> = (0..dim)
                    .filter(|&i| points_of(mask).iter().any(|&p| pts[p][i] != 0))
                    .collect();
                let d = dims[&mask];
                Face {
                    vertices,
                    dim: d,
                    d: (d + 1) as usize,
                    k: coords.len(),
                    coords,
                    facets: facets
                        .iter()
                        .enumerate()
                        .filter(|(_, f)| mask & !f.mask == 0)
                        .map(|(i, _)| i)
                        .collect(),
                    subfaces: Vec::new(),
                    mask,
                }
            })
            .collect();
        faces.push(Face {
            vertices: Vec::new(),
            dim: -1,
            d: 0,
            k: 0,
            coords: Vec::new(),
            facets: (0..facets.len()).collect(),
            subfaces: Vec::new(),
            mask: 0,
        });
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        let masks_sorted: Vec<u128> = faces.iter().map(|f| f.mask).collect();
        for f in &mut faces {
            f.subfaces = masks_sorted
                .iter()
                .enumerate()
                .filter(|(_, &m)| m & !f.mask == 0)
                .map(|(i, _)| i)
                .collect();
        }
        let index = faces.iter().enumerate().map(|(i, f)| (f.mask, i)).collect();

        Ok(NewtonPolyhedron {
            support: support.clone(),
            facets,
            faces,
            den,
            index,
            zero_masks,
        })
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn dim(&self) -> usize {
        self.support.dim()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Compact faces sorted by dimension then vertices; index 0 is the empty face.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The face poset relation `τ ≤ σ`.
    pub fn is_face_of(&self, tau: usize, sigma: usize) -> bool {
        self.faces[tau].mask & !self.faces[sigma].mask == 0
    }

    /// Common denominator of all facet functionals; Newton weights of
    /// lattice points lie in `(1/den) Z`.
    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// `den * ν(x)`, an integer.
    pub(crate) fn weight_num(&self, x: &[i64]) -> i64 {
        self.facets
            .iter()
            .map(|f| f.numerators.iter().zip(x).map(|(a, b)| a * b).sum::<i64>())
            .min()
            .unwrap_or(0)
    }

    /// Newton weight `ν(x) = min_F <a_F, x>`.
    pub fn newton_weight(&self, x: &[i64]) -> Result<Q> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                point: x.to_vec(),
                expected: self.dim(),
                got: x.len(),
            });
        }
        if x.iter().any(|&c| c < 0) {
            return Err(Error::NegativeCoordinate(x.to_vec()));
        }
        Ok(Q::new(self.weight_num(x) as i128, self.den as i128))
    }

    /// Smallest face whose cone contains `x` (the empty face for `x = 0`).
    pub(crate) fn carrier(&self, x: &[i64]) -> usize {
        if x.iter().all(|&c| c == 0) {
            return EMPTY_FACE;
        }
        let vals: Vec<i64> = self
            .facets
            .iter()
            .map(|f| f.numerators.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect();
        let min = *vals.iter().min().expect("convenient polyhedron has a facet");
        let mut mask = u128::MAX;
        for (f, v) in self.facets.iter().zip(&vals) {
            if *v == min {
                mask &= f.mask;
            }
        }
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                mask &= self.zero_masks[i];
            }
        }
        self.index[&mask]
    }

    /// Whether `x` lies in the closed cone `R_{>=0} σ`.
    pub fn in_cone(&self, sigma: usize, x: &[i64]) -> bool {
        self.is_face_of(self.carrier(x), sigma)
    }

    /// Faces `τ < σ` with `dim τ = dim σ - 1`.
    pub fn facets_of_face(&self, sigma: usize) -> Vec<usize> {
        let s = &self.faces[sigma];
        s.subfaces
            .iter()
            .copied()
            .filter(|&t| self.faces[t].dim == s.dim - 1)
            .collect()
    }

    /// Checks `<a_F, v> = 1` for every vertex of every face on every facet
    /// containing it, and `<a_F, x> >= 1` on the support.
    pub fn verify(&self) -> bool {
        let one = Q::from_integer(1);
        let supporting = self
            .facets
            .iter()
            .all(|f| self.support.points().iter().all(|p| dot(&f.functional, p) >= one));
        let incident = self.faces.iter().all(|s| {
            s.facets
                .iter()
                .all(|&fi| s.vertices.iter().all(|v| dot(&self.facets[fi].functional, v) == one))
        });
        let not_zero = self.facets.iter().all(|f| f.functional.iter().all(|a| !a.is_zero()));
        supporting && incident && not_zero
    }
}
