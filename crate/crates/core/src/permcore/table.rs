//! Enumerated element lists keyed by base images.
//!
//! A group element is determined by the images of the base points, so lookups
//! and products only ever touch `|base|` points instead of the full degree.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use super::group::Group;
use super::perm::Permutation;

enum KeyMap {
    Packed { bits: u32, map: FxHashMap<u128, u32> },
    Wide(FxHashMap<Box<[u32]>, u32>),
}

pub struct ElementTable {
    /// Breadth-first order from the identity (index 0) over the generators.
    pub elements: Vec<Permutation>,
    base: Vec<usize>,
    keys: KeyMap,
    inverse: Vec<u32>,
}

impl ElementTable {
    pub(crate) fn build(g: &Group) -> ElementTable {
        let base = g.chain().base();
        let order = g.order_u64() as usize;
        let bits = usize::BITS - g.degree().leading_zeros();
        let keys = if bits as usize * base.len() <= 128 {
            KeyMap::Packed { bits, map: FxHashMap::default() }
        } else {
            KeyMap::Wide(FxHashMap::default())
        };
        let mut t = ElementTable { elements: Vec::with_capacity(order), base, keys, inverse: Vec::new() };
        let id = g.identity();
        t.insert(&id);
        let mut head = 0;
        while head < t.elements.len() {
            for s in g.generators() {
                let y = t.elements[head].mul(s);
                if t.index_of(&y).is_none() {
                    t.insert(&y);
                }
            }
            head += 1;
        }
        debug_assert_eq!(t.elements.len(), order);
        t.inverse = (0..t.elements.len())
            .map(|i| t.index_of(&t.elements[i].inverse()).expect("closed under inverses") as u32)
            .collect();
        t
    }

    fn insert(&mut self, p: &Permutation) {
        let idx = self.elements.len() as u32;
        let img: Vec<u32> = self.base.iter().map(|&b| p.images()[b]).collect();
        match &mut self.keys {
            KeyMap::Packed { bits, map } => {
                map.insert(pack(&img, *bits), idx);
            }
            KeyMap::Wide(map) => {
                map.insert(img.into_boxed_slice(), idx);
            }
        }
        self.elements.push(p.clone());
    }

    fn lookup(&self, img: impl Iterator<Item = u32>) -> Option<usize> {
        match &self.keys {
            KeyMap::Packed { bits, map } => {
                let mut k = 0u128;
                for x in img {
                    k = (k << bits) | x as u128;
                }
                map.get(&k).map(|&i| i as usize)
            }
            KeyMap::Wide(map) => {
                let v: Vec<u32> = img.collect();
                map.get(v.as_slice()).map(|&i| i as usize)
            }
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Index of `p`, assuming `p` is a group member (non-members may collide).
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        let im = p.images();
        self.lookup(self.base.iter().map(|&b| im[b]))
    }

    /// Index of `elements[i] * elements[j]`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> usize {
        let a = self.elements[i].images();
        let b = self.elements[j].images();
        self.lookup(self.base.iter().map(|&pt| b[a[pt] as usize])).expect("closed under products")
    }

    /// Index of `elements[i] * p` for a member `p`.
    pub fn product_with(&self, i: usize, p: &Permutation) -> usize {
        let a = self.elements[i].images();
        let b = p.images();
        self.lookup(self.base.iter().map(|&pt| b[a[pt] as usize])).expect("closed under products")
    }

    /// Index of `s^-1 * elements[i] * s`, given both `s` and its inverse.
    pub fn conjugate(&self, i: usize, s: &Permutation, s_inv: &Permutation) -> usize {
        let x = self.elements[i].images();
        let si = s_inv.images();
        let sv = s.images();
        self.lookup(self.base.iter().map(|&pt| sv[x[si[pt] as usize] as usize]))
            .expect("closed under conjugation")
    }

    #[inline]
    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Index of `elements[i]^k`, `k >= 0`.
    pub fn power(&self, i: usize, mut k: u64) -> usize {
        let (mut acc, mut sq) = (0, i);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.product(acc, sq);
            }
            sq = self.product(sq, sq);
            k >>= 1;
        }
        acc
    }

    /// Members of the subgroup generated by the given indices.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        self.closure_within(gens, usize::MAX, None).expect("no bound given")
    }

    /// Like [`closure`](Self::closure), but gives up (returning `None`) once
    /// more than `limit` members are found or a member of `avoid` other than
    /// the identity shows up.
    pub fn closure_within(&self, gens: &[usize], limit: usize, avoid: Option<&FixedBitSet>) -> Option<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.len());
        seen.insert(0);
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let m = members[head];
            for &g in gens {
                let y = self.product(m, g);
                if !seen.put(y) {
                    if avoid.is_some_and(|a| a.contains(y)) || members.len() >= limit {
                        return None;
                    }
                    members.push(y);
                }
            }
            head += 1;
        }
        Some(members)
    }

    pub fn to_bitset(&self, members: &[usize]) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.len());
        b.extend(members.iter().copied());
        b
    }
}

fn pack(img: &[u32], bits: u32) -> u128 {
    img.iter().fold(0u128, |k, &x| (k << bits) | x as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn table_matches_closure_on_s4() {
        let g = Group::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let t = g.table().unwrap();
        assert_eq!(t.len(), 24);
        let set: HashSet<_> = t.elements.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        for i in 0..t.len() {
            assert!(t.elements[t.inverse(i)].mul(&t.elements[i]).is_identity());
            for j in 0..t.len() {
                assert_eq!(t.elements[t.product(i, j)], t.elements[i].mul(&t.elements[j]));
            }
        }
    }
}
