//! Permutation realizations of matrix groups over finite rings.

use std::collections::BTreeMap;

use super::field::{FiniteField, Ring, Zmod};
use super::group::{Caps, Group};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Square matrix with entries encoded in some `Ring`.
pub type Matrix = Vec<Vec<u32>>;

/// Which points a matrix group acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    /// All `q^dim` row vectors, zero included.
    #[default]
    Vectors,
    /// The smallest orbit on nonzero vectors on which the action is faithful.
    Orbit,
    /// The smallest faithful orbit on one-dimensional subspaces (fields only).
    Projective,
}

impl Action {
    pub fn keyword(self) -> &'static str {
        match self {
            Action::Vectors => "vectors",
            Action::Orbit => "orbit",
            Action::Projective => "projective",
        }
    }
}

pub fn mat_mul<R: Ring>(r: &R, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(0, |acc, k| r.add(acc, r.mul(a[i][k], b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn identity_matrix(dim: usize) -> Matrix {
    (0..dim).map(|i| (0..dim).map(|j| u32::from(i == j)).collect()).collect()
}

/// Determinant by permutation expansion; dimensions here are at most 4.
pub fn determinant<R: Ring>(r: &R, a: &Matrix) -> u32 {
    let n = a.len();
    let mut total = 0;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(r, a, &mut perm, 0, &mut total);
    total
}

fn permute<R: Ring>(r: &R, a: &Matrix, perm: &mut Vec<usize>, k: usize, total: &mut u32) {
    let n = perm.len();
    if k == n {
        let mut prod = r.one();
        for (i, &j) in perm.iter().enumerate() {
            prod = r.mul(prod, a[i][j]);
        }
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        if inversions % 2 == 1 {
            prod = r.neg(prod);
        }
        *total = r.add(*total, prod);
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(r, a, perm, k + 1, total);
        perm.swap(k, i);
    }
}

pub fn matrix_order<R: Ring>(r: &R, a: &Matrix) -> u64 {
    let id = identity_matrix(a.len());
    let mut cur = a.clone();
    let mut k = 1;
    while cur != id {
        cur = mat_mul(r, &cur, a);
        k += 1;
    }
    k
}

fn decode(mut idx: usize, q: usize, dim: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(dim);
    for _ in 0..dim {
        v.push((idx % q) as u32);
        idx /= q;
    }
    v
}

fn encode(v: &[u32], q: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
}

fn row_times<R: Ring>(r: &R, v: &[u32], a: &Matrix) -> Vec<u32> {
    let n = v.len();
    (0..n).map(|j| (0..n).fold(0, |acc, i| r.add(acc, r.mul(v[i], a[i][j])))).collect()
}

/// The permutation of all `q^dim` row vectors induced by `v -> v a`, without
/// any invertibility check.
pub fn vector_permutation<R: Ring>(r: &R, a: &Matrix) -> Permutation {
    let (q, dim) = (r.size(), a.len());
    let points = q.pow(dim as u32);
    Permutation::from_images_unchecked((0..points).map(|i| encode(&row_times(r, &decode(i, q, dim), a), q) as u32).collect())
}

/// Checks shapes and invertibility, then builds the action on all vectors.
fn vector_action<R: Ring>(r: &R, gens: &[Matrix], dim: usize, caps: &Caps) -> Result<Vec<Permutation>> {
    let q = r.size();
    let points = (q as u64).checked_pow(dim as u32).unwrap_or(u64::MAX);
    if points > caps.coset_degree {
        return Err(Error::over_cap("module size", points, caps.coset_degree));
    }
    let mut out = Vec::with_capacity(gens.len());
    for (gi, a) in gens.iter().enumerate() {
        if a.len() != dim || a.iter().any(|row| row.len() != dim) {
            return Err(Error::Precondition(format!("generator {} is not {dim}x{dim}", gi + 1)));
        }
        if !r.is_unit(determinant(r, a)) {
            return Err(Error::Precondition(format!("generator {} is not invertible", gi + 1)));
        }
        out.push(vector_permutation(r, a));
    }
    Ok(out)
}

/// The faithful permutation image of `⟨matGens⟩ ≤ GL(dim, Z/m)` acting on all
/// `m^dim` vectors.
pub fn matrix_group_to_perm(mat_gens: &[Vec<Vec<i64>>], modulus: u32, dim: usize) -> Result<Group> {
    let r = Zmod::new(modulus)?;
    let gens: Vec<Matrix> = mat_gens
        .iter()
        .map(|m| m.iter().map(|row| row.iter().map(|&v| r.from_int(v)).collect()).collect())
        .collect();
    realize(&r, &gens, dim, Action::Vectors, &Caps::default())
}

pub fn realize<R: Ring>(r: &R, gens: &[Matrix], dim: usize, action: Action, caps: &Caps) -> Result<Group> {
    let perms = vector_action(r, gens, dim, caps)?;
    let degree = r.size().pow(dim as u32);
    let full = Group::new(degree, perms)?.with_caps(*caps);
    match action {
        Action::Vectors => Ok(full),
        Action::Orbit => smallest_faithful_orbit(&full, |i| i != 0),
        Action::Projective => Err(Error::Precondition("projective action needs a field".into())),
    }
}

pub fn realize_over_field(f: &FiniteField, gens: &[Matrix], dim: usize, action: Action, caps: &Caps) -> Result<Group> {
    if action != Action::Projective {
        return realize(f, gens, dim, action, caps);
    }
    let perms = vector_action(f, gens, dim, caps)?;
    let q = f.size();
    let degree = q.pow(dim as u32);
    let full = Group::new(degree, perms)?.with_caps(*caps);
    // normalized vectors: first nonzero coordinate equal to one
    let normalized = |i: usize| {
        let v = decode(i, q, dim);
        v.iter().find(|&&c| c != 0).is_some_and(|&c| c == 1)
    };
    let scale = |v: &[u32]| -> Vec<u32> {
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
        let inv = f.inv(lead);
        v.iter().map(|&c| f.mul(c, inv)).collect()
    };
    let points: Vec<usize> = (0..degree).filter(|&i| normalized(i)).collect();
    let pos: BTreeMap<usize, usize> = points.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let proj_gens = full
        .generators()
        .iter()
        .map(|g| {
            let images = points
                .iter()
                .map(|&i| pos[&encode(&scale(&decode(g.image(i), q, dim)), q)] as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    let proj = Group::new(points.len(), proj_gens)?.with_caps(*caps);
    smallest_faithful_orbit(&proj, |_| true)
}

/// Restricts to the smallest orbit (ties broken by least point) on which the
/// group acts faithfully. Orbits are drawn from points passing `allowed`.
fn smallest_faithful_orbit(g: &Group, allowed: impl Fn(usize) -> bool) -> Result<Group> {
    let n = g.degree();
    let mut seen = vec![false; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] || !allowed(start) {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            for s in g.generators() {
                let y = s.image(orbit[head]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort_by_key(|o| (o.len(), o[0]));
    let order = g.order();
    for orbit in orbits {
        let mut local = vec![u32::MAX; n];
        for (k, &pt) in orbit.iter().enumerate() {
            local[pt] = k as u32;
        }
        let gens: Vec<Permutation> = g
            .generators()
            .iter()
            .map(|s| Permutation::from_images_unchecked(orbit.iter().map(|&pt| local[s.image(pt)]).collect()))
            .collect();
        let h = Group::new(orbit.len(), gens)?.with_caps(g.caps());
        if h.order() == order {
            return Ok(h);
        }
    }
    Err(Error::ConstructionFailed("no single orbit carries a faithful action".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_mod_5_and_25() {
        let gens = vec![vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]];
        assert_eq!(matrix_group_to_perm(&gens, 5, 2).unwrap().order_u64(), 120);
        let g = matrix_group_to_perm(&gens, 25, 2).unwrap();
        assert_eq!(g.degree(), 625);
        assert_eq!(g.order_u64(), 15000);
    }

    #[test]
    fn identity_only_is_trivial() {
        let g = matrix_group_to_perm(&[vec![vec![1, 0], vec![0, 1]]], 7, 2).unwrap();
        assert_eq!(g.order_u64(), 1);
    }

    #[test]
    fn rejects_singular() {
        assert!(matrix_group_to_perm(&[vec![vec![5, 0], vec![0, 5]]], 25, 2).is_err());
    }

    #[test]
    fn generator_orders_preserved() {
        let r = Zmod::new(25).unwrap();
        let a: Matrix = vec![vec![1, 1], vec![0, 1]];
        let b: Matrix = vec![vec![0, 1], vec![24, 0]];
        let g = realize(&r, &[a.clone(), b.clone()], 2, Action::Vectors, &Caps::default()).unwrap();
        assert_eq!(g.generators()[0].order(), matrix_order(&r, &a));
        assert_eq!(g.generators()[1].order(), matrix_order(&r, &b));
    }

    #[test]
    fn sl3_2_on_seven_vectors_and_sl3_3_projectively() {
        let f2 = FiniteField::new(2).unwrap();
        let gens: Vec<Matrix> = vec![
            vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]],
        ];
        let g = realize(&f2, &gens, 3, Action::Orbit, &Caps::default()).unwrap();
        assert_eq!((g.degree(), g.order_u64()), (7, 168));
        let f3 = FiniteField::new(3).unwrap();
        let g = realize_over_field(&f3, &gens, 3, Action::Projective, &Caps::default()).unwrap();
        assert_eq!((g.degree(), g.order_u64()), (13, 5616));
    }
}
