//! Exact elements of cyclotomic fields, kept in the Zumbroich basis of the
//! smallest field containing them, so equality is coefficient-wise.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::prime_factors;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    /// Basis exponents with nonzero coefficients, ascending.
    terms: Vec<(u32, BigRational)>,
}

/// Coefficient types the basis reduction can run over.
pub trait Coeff: Clone + Zero + AddAssign + SubAssign {}
impl Coeff for BigRational {}
impl Coeff for i128 {}
impl Coeff for i64 {}

fn mod_inv(a: u64, m: u64) -> u64 {
    // m is small here; extended Euclid keeps it exact for non-prime moduli.
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i64) as u64
}

/// Rewrites a dense coefficient vector over exponents mod `n` into the
/// Zumbroich basis of Q(ζ_n), in place. `n` must not be 2 mod 4.
pub fn zumbroich_reduce<T: Coeff>(n: u32, coeffs: &mut [T]) {
    debug_assert_eq!(coeffs.len(), n as usize);
    debug_assert!(n % 4 != 2);
    let n64 = n as u64;
    for (p, a) in prime_factors(n64) {
        let q = p.pow(a);
        let m = n64 / q;
        let minv = if q == 1 { 0 } else { mod_inv(m % q, q) };
        let step = n64 / p;
        for k in 0..n64 {
            if coeffs[k as usize].is_zero() {
                continue;
            }
            let kq = (k * minv) % q;
            let excluded = if p == 2 {
                kq >= q / 2
            } else {
                let half = (q / p - 1) / 2;
                kq <= half || kq >= q - half
            };
            if !excluded {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[k as usize], T::zero());
            if p == 2 {
                // ζ^k = -ζ^(k + n/2)
                coeffs[((k + step) % n64) as usize] -= c;
            } else {
                // ζ^k = -Σ_{j=1}^{p-1} ζ^(k + j n/p)
                for j in 1..p {
                    coeffs[((k + j * step) % n64) as usize] -= c.clone();
                }
            }
        }
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { conductor: 1, terms: vec![(0, q)] }
        }
    }

    /// `ζ_n^k` with `ζ_n = exp(2πi/n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let mut dense = vec![BigRational::zero(); n as usize];
        dense[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_dense(n, dense)
    }

    /// `Σ coeffs[k] ζ_n^k` for any `n >= 1`.
    pub fn from_dense(n: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(n >= 1 && coeffs.len() == n as usize);
        let (n, mut coeffs) = if n % 4 == 2 {
            // ζ_{2m}^k = (-1)^k ζ_m^{k(m+1)/2}
            let m = n / 2;
            let mut out = vec![BigRational::zero(); m as usize];
            for (k, c) in coeffs.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = ((k as u64 * (m as u64 + 1) / 2) % m as u64) as usize;
                if k % 2 == 1 {
                    out[e] -= c;
                } else {
                    out[e] += c;
                }
            }
            (m, out)
        } else {
            (n, coeffs)
        };
        zumbroich_reduce(n, &mut coeffs);
        Self::shrink(n, coeffs)
    }

    /// Same as `from_dense` for integer coefficients.
    pub fn from_dense_int(n: u32, coeffs: &[i64]) -> Self {
        Self::from_dense(n, coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    /// Moves a reduced dense vector to the smallest subfield containing it.
    fn shrink(mut n: u32, mut coeffs: Vec<BigRational>) -> Self {
        'outer: loop {
            if n == 1 {
                break;
            }
            for (p, a) in prime_factors(n as u64) {
                let p = p as u32;
                if let Some((m, sub)) = Self::descend(n, p, a, &coeffs) {
                    n = m;
                    coeffs = sub;
                    continue 'outer;
                }
            }
            break;
        }
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Cyclotomic { conductor: n, terms }
    }

    /// Tries to express a reduced element of Q(ζ_n) in the next subfield
    /// dropping one factor of the prime `p` (or the whole 4 when 4 ∥ n).
    fn descend(n: u32, p: u32, a: u32, coeffs: &[BigRational]) -> Option<(u32, Vec<BigRational>)> {
        let nz = || coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        if p == 2 && a == 2 || (p != 2 && a >= 2) || (p == 2 && a >= 3) {
            // compatible bases: the subfield uses exponents divisible by `div`
            let div = if p == 2 && a == 2 { 4 } else { p };
            let m = n / div;
            if nz().any(|(k, _)| !(k as u32).is_multiple_of(div)) {
                return None;
            }
            let mut sub = vec![BigRational::zero(); m as usize];
            for (k, c) in nz() {
                sub[k / div as usize] = c.clone();
            }
            return Some((m, sub));
        }
        // p odd with p ∥ n: constant along each class {k + j n/p}
        let m = n / p;
        let mut sub = vec![BigRational::zero(); m as usize];
        let mut done = vec![false; n as usize];
        let pinv = if m == 1 { 0 } else { mod_inv(p as u64 % m as u64, m as u64) };
        let minv_p = mod_inv(m as u64 % p as u64, p as u64);
        for (k, c) in nz() {
            if done[k] {
                continue;
            }
            let members: Vec<usize> = (0..p).map(|j| (k + (j * m) as usize) % n as usize).collect();
            for &x in &members {
                done[x] = true;
            }
            // the p-1 members with nonzero p-part are basis elements; all
            // must carry the same coefficient
            let mismatch = members
                .iter()
                .filter(|&&x| !(x as u64 * minv_p).is_multiple_of(p as u64))
                .any(|&x| &coeffs[x] != c);
            if mismatch {
                return None;
            }
            let j = if m == 1 { 0 } else { ((k as u64 * pinv) % m as u64) as usize };
            sub[j] = -c.clone();
        }
        Some((m, sub))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.conductor != 1 {
            return None;
        }
        Some(self.terms.first().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Dense coefficients over exponents mod `n` (a multiple of the conductor).
    pub fn dense_at(&self, n: u32) -> Vec<BigRational> {
        assert!(n.is_multiple_of(self.conductor));
        let mut out = vec![BigRational::zero(); n as usize];
        let f = n / self.conductor;
        for (k, c) in &self.terms {
            out[(k * f) as usize] += c.clone();
        }
        out
    }

    fn binary(&self, other: &Self, f: impl Fn(&mut Vec<BigRational>, &Vec<BigRational>)) -> Self {
        let n = self.conductor.lcm(&other.conductor);
        let mut a = self.dense_at(n);
        let b = other.dense_at(n);
        f(&mut a, &b);
        Self::from_dense(n, a)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Image under `ζ ↦ ζ^j`, `j` coprime to the conductor.
    pub fn galois(&self, j: i64) -> Self {
        let n = self.conductor;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (k, c) in &self.terms {
            dense[((*k as i64) * j).rem_euclid(n as i64) as usize] += c.clone();
        }
        Self::from_dense(n, dense)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic { conductor: self.conductor, terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect() }
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * (*k as f64) / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    /// Text in the `c*E(n)^k + ...` syntax; rationals print as plain numbers.
    pub fn export(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        if self.conductor == 1 {
            return self.terms[0].1.to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&format!("{}*E({})^{}", mag, self.conductor, k));
        }
        out
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.export())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self.export())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, |a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y.clone();
            }
        })
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, |a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x -= y.clone();
            }
        })
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let n = self.conductor.lcm(&rhs.conductor);
        let (fa, fb) = (n / self.conductor, n / rhs.conductor);
        let mut acc = vec![BigRational::zero(); n as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                acc[((ka * fa + kb * fb) % n) as usize] += ca * cb;
            }
        }
        Cyclotomic::from_dense(n, acc)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2u32, 3, 4, 5, 6, 8, 9, 12, 15, 20, 25, 36] {
            let mut s = Cyclotomic::zero();
            for k in 0..n as i64 {
                s = &s + &e(n, k);
            }
            assert!(s.is_zero(), "n = {n}: {s}");
        }
    }

    #[test]
    fn conductor_shrinks() {
        assert_eq!(e(6, 2), e(3, 1));
        assert_eq!(e(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(e(12, 3), e(4, 1));
        assert_eq!(e(20, 4), e(5, 1));
        assert_eq!(e(36, 12), e(3, 1));
        // E(5) + E(5)^4 is real and lies in Q(sqrt 5), still conductor 5
        let r = &e(5, 1) + &e(5, 4);
        assert_eq!(r.conductor(), 5);
        // E(3) + E(3)^2 = -1
        assert_eq!(&e(3, 1) + &e(3, 2), Cyclotomic::from_int(-1));
    }

    #[test]
    fn multiplication_is_exponent_addition() {
        for (a, b) in [(3u32, 4u32), (5, 6), (8, 12), (9, 15), (7, 7)] {
            for i in 0..a as i64 {
                for j in 0..b as i64 {
                    let n = a.lcm(&b) as i64;
                    let lhs = &e(a, i) * &e(b, j);
                    let rhs = e(n as u32, i * (n / a as i64) + j * (n / b as i64));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn conjugation_and_norm() {
        let x = &e(7, 1) + &e(7, 2);
        let x = &x + &e(7, 4);
        // (-1 + sqrt(-7))/2 has norm 2
        assert_eq!(&x * &x.conj(), Cyclotomic::from_int(2));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn export_syntax() {
        assert_eq!(Cyclotomic::from_int(-3).export(), "-3");
        assert_eq!(e(3, 1).export(), "1*E(3)^1");
        assert_eq!((-&e(4, 1)).export(), "-1*E(4)^1");
    }
}
