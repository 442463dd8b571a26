use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{0, .., deg-1}`, acting on the right.
///
/// `a.mul(&b)` applies `a` first, then `b`, so `i^(ab) = (i^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_boxed_slice() })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images: images.into_boxed_slice() }
    }

    /// Builds a permutation from 0-indexed disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::NotAPermutation(format!("point {pt} out of range for degree {degree}")));
                }
                if used[pt] {
                    return Err(Error::NotAPermutation(format!("point {pt} repeated")));
                }
                used[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images: images.into_boxed_slice() })
    }

    /// Parses 1-indexed cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let bad = || Error::NotAPermutation(text.to_string());
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_start = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner_start.find(')').ok_or_else(bad)?;
            let inner = &inner_start[..close];
            let pts: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(bad))
                .collect::<Result<_>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = inner_start[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Product `self * other`: apply `self`, then `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let o = &other.images;
        Permutation { images: self.images.iter().map(|&x| o[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv.into_boxed_slice() }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // i -> g(self(g^-1(i))) rewritten pointwise: (i^g)^(x^g) = (i^x)^g
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out.into_boxed_slice() }
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.image(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.image(cur);
            }
            out.push(cyc);
        }
        out
    }

    /// Lengths of all cycles including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Degree minus the number of cycles (fixed points counted as cycles).
    pub fn ind(&self) -> usize {
        let cycles = self.cycles();
        let moved: usize = cycles.iter().map(Vec::len).sum();
        let count = cycles.len() + (self.degree() - moved);
        self.degree() - count
    }

    pub fn lowest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

/// Identity counts as a p-element for every prime.
pub fn is_p_element(p: &Permutation, prime: u64) -> bool {
    let mut o = p.order();
    while o.is_multiple_of(prime) {
        o /= prime;
    }
    o == 1
}

impl fmt::Display for Permutation {
    /// 1-indexed cycle notation, the same convention as group files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, pt) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        Permutation::mul(self, rhs)
    }
}

/// Serialized as `{degree, cycles}` with 1-indexed cycle text.
#[derive(Serialize, Deserialize)]
struct PermRepr {
    degree: usize,
    cycles: String,
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr { degree: self.degree(), cycles: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PermRepr::deserialize(d)?;
        Permutation::parse_cycles(r.degree, &r.cycles).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(deg, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(p(5, &[&[0, 1, 2], &[3, 4]]).order(), 6);
        assert_eq!(Permutation::identity(4).order(), 1);
        let seven = p(7, &[&[0, 1, 2, 3, 4, 5, 6]]);
        assert_eq!(seven.order(), 7);
        assert!(is_p_element(&seven, 7));
        assert!(!is_p_element(&seven, 2));
        for prime in [2, 3, 5, 7] {
            assert!(is_p_element(&Permutation::identity(3), prime));
        }
    }

    #[test]
    fn product_applies_left_factor_first() {
        let a = p(3, &[&[0, 1]]);
        let b = p(3, &[&[1, 2]]);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(a.mul(&b), p(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn display_round_trips() {
        let x = p(6, &[&[0, 3, 2], &[4, 5]]);
        assert_eq!(x.to_string(), "(1 4 3)(5 6)");
        assert_eq!(Permutation::parse_cycles(6, &x.to_string()).unwrap(), x);
        assert_eq!(Permutation::parse_cycles(4, "()").unwrap(), Permutation::identity(4));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = p(5, &[&[0, 1, 2]]);
        let g = p(5, &[&[0, 3], &[1, 4]]);
        assert_eq!(x.conjugate_by(&g), g.inverse().mul(&x).mul(&g));
    }

    #[test]
    fn ind_counts_codimension() {
        assert_eq!(p(5, &[&[0, 1, 2, 3, 4]]).ind(), 4);
        assert_eq!(p(5, &[&[0, 1], &[2, 3]]).ind(), 2);
        assert_eq!(Permutation::identity(5).ind(), 0);
    }
}
