//! Extraspecial groups `p^(1+2n)` in their regular representation.
//!
//! Elements are pairs `(v, c)` with `v` in `F_p^(2n)` and `c` in `F_p`,
//! multiplied by `(v, c)(w, d) = (v + w, c + d + β(v, w))` for a bilinear
//! cocycle `β`. For odd `p`, `β` is half the standard symplectic form, giving
//! exponent `p`. For `p = 2`, `β` is chosen with `β(v, v) = Q(v)` for a
//! quadratic form `Q`, so that squares are `(0, Q(v))` and the type of `Q`
//! is the type of the group.

use serde::Serialize;

use crate::arith::inv_mod;
use crate::error::{Error, Result};
use crate::permcore::{Group, Matrix, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ExtraspecialVariant {
    PlusExponentP,
    Minus2,
    Plus2,
}

/// A quadratic form over `F_2` given by `Q(e_i)` and its polarization.
#[derive(Clone, Debug)]
pub struct QuadraticForm2 {
    pub diag: Vec<u32>,
    pub polar: Vec<Vec<u32>>,
}

impl QuadraticForm2 {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn eval(&self, v: &[u32]) -> u32 {
        let n = self.dim();
        let mut s = 0;
        for i in 0..n {
            s ^= self.diag[i] & v[i];
            for j in i + 1..n {
                s ^= self.polar[i][j] & v[i] & v[j];
            }
        }
        s
    }

    /// Sum of hyperbolic planes, with the last plane anisotropic when `minus`.
    pub fn standard(n: usize, minus: bool) -> QuadraticForm2 {
        let dim = 2 * n;
        let mut polar = vec![vec![0; dim]; dim];
        for i in 0..n {
            polar[i][n + i] = 1;
            polar[n + i][i] = 1;
        }
        let mut diag = vec![0; dim];
        if minus {
            diag[n - 1] = 1;
            diag[2 * n - 1] = 1;
        }
        QuadraticForm2 { diag, polar }
    }

    /// Orthogonal sum, coordinates of `self` first.
    pub fn sum(&self, other: &QuadraticForm2) -> QuadraticForm2 {
        let (a, b) = (self.dim(), other.dim());
        let mut polar = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            polar[i][..a].copy_from_slice(&self.polar[i]);
        }
        for i in 0..b {
            polar[a + i][a..].copy_from_slice(&other.polar[i]);
        }
        let mut diag = self.diag.clone();
        diag.extend(&other.diag);
        QuadraticForm2 { diag, polar }
    }

    /// Whether `v -> v m` preserves the form.
    pub fn preserved_by(&self, m: &Matrix) -> bool {
        let n = self.dim();
        (0..1usize << n).all(|bits| {
            let v: Vec<u32> = (0..n).map(|i| (bits >> i) as u32 & 1).collect();
            let w: Vec<u32> = (0..n).map(|j| (0..n).fold(0, |acc, i| acc ^ (v[i] & m[i][j]))).collect();
            self.eval(&v) == self.eval(&w)
        })
    }
}

/// An extraspecial group together with its coordinates.
#[derive(Clone, Debug)]
pub struct Extraspecial {
    pub p: u32,
    pub dim: usize,
    /// Cocycle matrix `β(e_i, e_j)`.
    pub beta: Vec<Vec<u32>>,
    pub group: Group,
}

impl Extraspecial {
    fn points(&self) -> usize {
        (self.p as usize).pow(self.dim as u32 + 1)
    }

    fn decode(&self, mut idx: usize) -> (Vec<u32>, u32) {
        let p = self.p as usize;
        let mut v = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            v.push((idx % p) as u32);
            idx /= p;
        }
        (v, idx as u32)
    }

    fn encode(&self, v: &[u32], c: u32) -> usize {
        let p = self.p as usize;
        let low = v.iter().rev().fold(0usize, |acc, &x| acc * p + x as usize);
        low + c as usize * p.pow(self.dim as u32)
    }

    fn cocycle(&self, v: &[u32], w: &[u32]) -> u32 {
        let p = self.p as u64;
        let mut s = 0u64;
        for i in 0..self.dim {
            if v[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                s += v[i] as u64 * w[j] as u64 * self.beta[i][j] as u64;
            }
        }
        (s % p) as u32
    }

    /// Right multiplication by `(w, d)`.
    pub fn translation(&self, w: &[u32], d: u32) -> Permutation {
        let p = self.p;
        let images = (0..self.points())
            .map(|i| {
                let (v, c) = self.decode(i);
                let sum: Vec<u32> = v.iter().zip(w).map(|(a, b)| (a + b) % p).collect();
                let cc = (c + d + self.cocycle(&v, w)) % p;
                self.encode(&sum, cc) as u32
            })
            .collect();
        Permutation::from_images(images).expect("translations are bijective")
    }

    pub fn central_generator(&self) -> Permutation {
        self.translation(&vec![0; self.dim], 1)
    }

    fn build(p: u32, beta: Vec<Vec<u32>>) -> Extraspecial {
        let dim = beta.len();
        let mut e = Extraspecial { p, dim, beta, group: Group::trivial(1) };
        let gens = (0..dim)
            .map(|i| {
                let mut w = vec![0; dim];
                w[i] = 1;
                e.translation(&w, 0)
            })
            .collect();
        e.group = Group::new(e.points(), gens).expect("consistent degrees");
        e
    }

    /// `p^(1+2n)` of exponent `p`, `p` odd.
    pub fn odd(p: u32, n: usize) -> Result<Extraspecial> {
        if p.is_multiple_of(2) || n == 0 {
            return Err(Error::Precondition(format!("need odd p and n >= 1, got p={p} n={n}")));
        }
        let half = inv_mod(2, p as u64) as u32;
        let dim = 2 * n;
        let mut beta = vec![vec![0; dim]; dim];
        for i in 0..n {
            beta[i][n + i] = half;
            beta[n + i][i] = p - half;
        }
        Ok(Self::build(p, beta))
    }

    /// `2^(1+2n)` with squaring map `Q`.
    pub fn from_form(q: &QuadraticForm2) -> Extraspecial {
        let dim = q.dim();
        let mut beta = vec![vec![0; dim]; dim];
        for i in 0..dim {
            beta[i][i] = q.diag[i];
            for j in i + 1..dim {
                beta[i][j] = q.polar[i][j];
            }
        }
        Self::build(2, beta)
    }

    /// The automorphism `(v, c) -> (v a, c + f(v))` for a linear map `a`
    /// preserving the commutator form, with `f` a quadratic correction
    /// making it a homomorphism. Fails when no such `f` exists.
    pub fn automorphism(&self, a: &Matrix) -> Result<Permutation> {
        let (p, n) = (self.p, self.dim);
        let pu = p as u64;
        let row = |i: usize| -> Vec<u32> { a[i].clone() };
        // D(e_i, e_j) = β(e_i a, e_j a) - β(e_i, e_j) must be symmetric
        let mut d = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = self.cocycle(&row(i), &row(j)) as u64;
                d[i][j] = ((v + pu - self.beta[i][j] as u64) % pu) as u32;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if d[i][j] != d[j][i] {
                    return Err(Error::ConstructionFailed("map does not preserve the commutator form".into()));
                }
            }
            if p == 2 && d[i][i] != 0 {
                return Err(Error::ConstructionFailed("map does not preserve the squaring form".into()));
            }
        }
        let half = if p == 2 { 0 } else { inv_mod(2, pu) };
        let f = |v: &[u32]| -> u32 {
            let mut s = 0u64;
            for i in 0..n {
                s += half * d[i][i] as u64 * v[i] as u64 * v[i] as u64;
                for j in i + 1..n {
                    s += d[i][j] as u64 * v[i] as u64 * v[j] as u64;
                }
            }
            (s % pu) as u32
        };
        let images: Vec<u32> = (0..self.points())
            .map(|idx| {
                let (v, c) = self.decode(idx);
                let w: Vec<u32> = (0..n)
                    .map(|j| ((0..n).map(|i| v[i] as u64 * a[i][j] as u64).sum::<u64>() % pu) as u32)
                    .collect();
                self.encode(&w, (c + f(&v)) % p) as u32
            })
            .collect();
        let phi = Permutation::from_images(images).map_err(|_| Error::ConstructionFailed("matrix is singular".into()))?;
        // a bijection normalizing the regular action and fixing the identity point is an automorphism
        let ok = phi.images()[0] == 0
            && self.group.generators().iter().all(|s| self.group.has(&s.conjugate_by(&phi)));
        if !ok {
            return Err(Error::ConstructionFailed("map is not an automorphism".into()));
        }
        Ok(phi)
    }

    /// The split extension by the group generated by the given linear maps.
    pub fn extend(&self, mats: &[Matrix]) -> Result<(Group, Vec<Permutation>)> {
        let autos: Vec<Permutation> = mats.iter().map(|m| self.automorphism(m)).collect::<Result<_>>()?;
        let mut gens = self.group.generators().to_vec();
        gens.extend(autos.iter().cloned());
        Ok((Group::new(self.points(), gens)?, autos))
    }
}

pub fn extraspecial_group(p: u32, n: usize, variant: ExtraspecialVariant) -> Result<Group> {
    let e = match variant {
        ExtraspecialVariant::PlusExponentP => Extraspecial::odd(p, n)?,
        ExtraspecialVariant::Minus2 | ExtraspecialVariant::Plus2 => {
            if p != 2 || n == 0 {
                return Err(Error::Precondition(format!("type +/- needs p = 2 and n >= 1, got p={p} n={n}")));
            }
            Extraspecial::from_form(&QuadraticForm2::standard(n, variant == ExtraspecialVariant::Minus2))
        }
    };
    let points = (p as u64).pow(2 * n as u32 + 1);
    let cap = e.group.caps().coset_degree;
    if points > cap {
        return Err(Error::over_cap("extraspecial degree", points, cap));
    }
    Ok(e.group)
}

/// `p^(1+2):Q8` for `p` in {3, 5}, with `Q8 <= SL2(p)` acting on `E/Z(E)`.
/// Returns the group and its normal subgroup `E`.
pub fn extraspecial_by_quaternion(p: u32) -> Result<(Group, Group)> {
    let mats: Vec<Matrix> = match p {
        3 => vec![vec![vec![0, 1], vec![2, 0]], vec![vec![1, 1], vec![1, 2]]],
        5 => vec![vec![vec![2, 0], vec![0, 3]], vec![vec![0, 1], vec![4, 0]]],
        _ => return Err(Error::Precondition(format!("only p = 3 or 5, got {p}"))),
    };
    let e = Extraspecial::odd(p, 1)?;
    let (g, _) = e.extend(&mats)?;
    Ok((g, e.group))
}
