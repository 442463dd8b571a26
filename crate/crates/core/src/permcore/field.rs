//! Coefficient rings for matrix groups: integers mod m and GF(p^k).

use crate::arith::{is_prime, prime_factors};
use crate::error::{Error, Result};

/// A finite commutative ring whose elements are encoded as `0..size()`.
pub trait Ring {
    fn size(&self) -> usize;
    fn add(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn is_unit(&self, a: u32) -> bool;
    /// Multiplicative inverse of a unit.
    fn inv(&self, a: u32) -> u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
}

#[derive(Clone, Debug)]
pub struct Zmod {
    m: u32,
}

impl Zmod {
    pub fn new(m: u32) -> Result<Zmod> {
        if m < 2 {
            return Err(Error::Precondition(format!("modulus {m} must be at least 2")));
        }
        Ok(Zmod { m })
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.m as i64) as u32
    }
}

impl Ring for Zmod {
    fn size(&self) -> usize {
        self.m as usize
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.m
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.m as u64) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        (self.m - a) % self.m
    }
    fn is_unit(&self, a: u32) -> bool {
        num_integer::gcd(a, self.m) == 1
    }
    fn inv(&self, a: u32) -> u32 {
        (1..self.m).find(|&b| self.mul(a, b) == 1).expect("unit has an inverse")
    }
}

/// GF(q), q = p^k. Element `i` is the polynomial whose base-p digits are
/// the coefficients of `1, z, z^2, ...`, where `z` is a root of the first
/// primitive polynomial in the order described at `primitive_polynomial`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    /// `exp[i] = z^i` for `0 <= i < q-1`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    pub fn new(q: u32) -> Result<FiniteField> {
        let factors = prime_factors(q as u64);
        if factors.len() != 1 || !is_prime(factors[0].0) {
            return Err(Error::Precondition(format!("{q} is not a prime power")));
        }
        if q > 1024 {
            return Err(Error::over_cap("field size", q, 1024));
        }
        let (p, k) = (factors[0].0 as u32, factors[0].1);
        let poly = primitive_polynomial(p, k);
        let qs = q as usize;
        let add: Vec<u32> = (0..qs * qs)
            .map(|ab| {
                let (mut a, mut b) = ((ab / qs) as u32, (ab % qs) as u32);
                let mut out = 0;
                let mut place = 1;
                for _ in 0..k {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            })
            .collect();
        // powers of z by repeated multiplication by x modulo the polynomial
        let mut exp = Vec::with_capacity(qs - 1);
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        for _ in 0..q - 1 {
            exp.push(encode(&cur, p));
            cur = times_x(&cur, &poly, p);
        }
        let mut log = vec![u32::MAX; qs];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let mul = (0..qs * qs)
            .map(|ab| {
                let (a, b) = (ab / qs, ab % qs);
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[((log[a] + log[b]) % (q - 1)) as usize]
                }
            })
            .collect();
        Ok(FiniteField { p, k, q, add, mul, exp, log })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// `z^e`.
    pub fn z_pow(&self, e: i64) -> u32 {
        self.exp[e.rem_euclid(self.q as i64 - 1) as usize]
    }

    /// Discrete log base `z` of a nonzero element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Image of an integer under the prime-field embedding.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// `a^(p^e)`.
    pub fn frobenius(&self, a: u32, e: u32) -> u32 {
        let mut out = a;
        for _ in 0..e {
            out = self.pow(out, self.p as u64);
        }
        out
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let l = (self.log[a as usize] as u64 * e) % (self.q as u64 - 1);
        self.exp[l as usize]
    }
}

impl Ring for FiniteField {
    fn size(&self) -> usize {
        self.q as usize
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q as usize + b as usize]
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q as usize + b as usize]
    }
    fn neg(&self, a: u32) -> u32 {
        self.mul(a, self.from_int(-1))
    }
    fn is_unit(&self, a: u32) -> bool {
        a != 0
    }
    fn inv(&self, a: u32) -> u32 {
        self.exp[((self.q - 1 - self.log[a as usize]) % (self.q - 1)) as usize]
    }
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies `c_0 + c_1 x + ...` by x modulo the monic polynomial whose
/// lower coefficients are `poly`.
fn times_x(cur: &[u32], poly: &[u32], p: u32) -> Vec<u32> {
    let k = cur.len();
    let top = cur[k - 1];
    let mut out = vec![0u32; k];
    for i in (1..k).rev() {
        out[i] = cur[i - 1];
    }
    for i in 0..k {
        out[i] = (out[i] + (p - poly[i]) * top) % p;
    }
    out
}

/// Lower coefficients `a_0..a_{k-1}` of the first monic degree-k polynomial
/// `x^k + a_{k-1}x^{k-1} + ... + a_0` for which x generates the unit group,
/// scanning the integer `a_0 + a_1 p + ...` upward.
fn primitive_polynomial(p: u32, k: u32) -> Vec<u32> {
    let q = p.pow(k);
    for code in 1..q {
        let mut poly = Vec::with_capacity(k as usize);
        let mut c = code;
        for _ in 0..k {
            poly.push(c % p);
            c /= p;
        }
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        let one = cur.clone();
        let mut period = 0;
        loop {
            cur = times_x(&cur, &poly, p);
            period += 1;
            if cur == one || period > q - 1 {
                break;
            }
        }
        if cur == one && period == q - 1 {
            return poly;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2u32, 3, 4, 5, 8, 9, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    for c in [0, 1, q - 1] {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gf8_uses_x3_plus_x_plus_1() {
        let f = FiniteField::new(8).unwrap();
        // z^3 = z + 1, encoded as 1 + 2 = 3
        assert_eq!(f.z_pow(3), 3);
    }

    #[test]
    fn zmod_units() {
        let r = Zmod::new(25).unwrap();
        assert!(r.is_unit(2));
        assert!(!r.is_unit(5));
        assert_eq!(r.mul(2, r.inv(2)), 1);
        assert!(FiniteField::new(6).is_err());
    }
}
