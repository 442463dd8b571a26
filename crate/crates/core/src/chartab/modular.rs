//! Linear algebra over a prime field F_l, l < 2^32.

use crate::arith::{inv_mod, mul_mod};

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }
    pub fn inv(self, a: u64) -> u64 {
        inv_mod(a, self.p)
    }
    pub fn from_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

pub type Mat = Vec<Vec<u64>>;

/// Characteristic polynomial `det(xI - a)`, coefficients from the constant
/// term upward, via reduction to Hessenberg form.
pub fn char_poly(f: Fp, a: &Mat) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = f.mul(u, h[m][c]);
                h[i][c] = f.sub(h[i][c], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[i]);
                row[m] = f.add(row[m], t);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (x - h_kk) p_k
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[k][k], c));
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = f.mul(t, h[i + 1][i]);
            let coef = f.mul(h[i][k], t);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

pub fn poly_eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Distinct roots in ascending order, by exhaustive evaluation.
pub fn roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    (0..f.p).filter(|&x| poly_eval(f, poly, x) == 0).collect()
}

/// Reduced row echelon form of the given rows; returns (rows, pivot columns).
pub fn echelon(f: Fp, rows: &[Vec<u64>]) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let u = m[i][c];
                for k in 0..ncols {
                    let t = f.mul(u, m[r][k]);
                    m[i][k] = f.sub(m[i][k], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the right null space `{y : a y = 0}`.
pub fn null_space(f: Fp, a: &Mat) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let (rref, pivots) = echelon(f, a);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut y = vec![0u64; n];
            y[fc] = 1;
            for (row, &pc) in rref.iter().zip(&pivots) {
                y[pc] = f.sub(0, row[fc]);
            }
            y
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_companion_matrix() {
        let f = Fp { p: 101 };
        // companion of x^3 - 2x^2 + 5x - 7
        let a = vec![vec![0, 0, 7], vec![1, 0, f.from_i64(-5)], vec![0, 1, 2]];
        assert_eq!(char_poly(f, &a), vec![f.from_i64(-7), 5, f.from_i64(-2), 1]);
    }

    #[test]
    fn char_poly_matches_determinant_definition() {
        let f = Fp { p: 13 };
        let a = vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]];
        let poly = char_poly(f, &a);
        for x in 0..13 {
            let m: Vec<Vec<u64>> = (0..3)
                .map(|i| (0..3).map(|j| if i == j { f.sub(x, a[i][j]) } else { f.sub(0, a[i][j]) }).collect())
                .collect();
            let det = f.sub(
                f.add(
                    f.add(f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1]))),
                        f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])))),
                    0,
                ),
                f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0]))),
            );
            assert_eq!(poly_eval(f, &poly, x), det);
        }
    }

    #[test]
    fn null_space_is_annihilated() {
        let f = Fp { p: 7 };
        let a = vec![vec![1, 2, 3, 4], vec![2, 4, 6, 1]];
        let ns = null_space(f, &a);
        // second row is twice the first mod 7
        assert_eq!(ns.len(), 3);
        for y in ns {
            for row in &a {
                let s = row.iter().zip(&y).fold(0, |acc, (&x, &v)| f.add(acc, f.mul(x, v)));
                assert_eq!(s, 0);
            }
        }
    }
}
