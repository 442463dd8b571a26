use rustc_hash::FxHashMap;

use super::bsgs::StabChain;
use super::group::Group;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// The action of a group on the right cosets of a subgroup.
pub struct CosetAction {
    pub image: Group,
    reps: Vec<Permutation>,
    sub_chain: StabChain,
    ids: FxHashMap<Vec<u32>, u32>,
}

/// Acts on right cosets `Hx` of `h` in `g`.
///
/// Each coset is named by the base image of its canonical representative:
/// walking the subgroup's chain (built over `g`'s base), pick at every level
/// the transversal element that minimizes the image of the next base point.
/// Two members of one coset with equal base images differ by an element of
/// `h` fixing the whole base, which is trivial, so the name is unique.
pub fn coset_action(g: &Group, h: &Group) -> Result<CosetAction> {
    let order = g.order_u64();
    let sub = h.order_u64();
    if !order.is_multiple_of(sub) || !h.is_subgroup_of(g) {
        return Err(Error::NotAMember);
    }
    let index = order / sub;
    if index > g.caps().coset_degree {
        return Err(Error::over_cap("coset index", index, g.caps().coset_degree));
    }
    let sub_chain = StabChain::with_base_prefix(g.degree(), h.generators(), &g.chain().base());
    let mut act = CosetAction {
        image: Group::trivial(1),
        reps: vec![g.identity()],
        sub_chain,
        ids: FxHashMap::default(),
    };
    let key = act.canonical_key(&g.identity());
    act.ids.insert(key, 0);
    let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(index as usize); g.generators().len()];
    let mut c = 0;
    while c < act.reps.len() {
        for (si, s) in g.generators().iter().enumerate() {
            let y = act.reps[c].mul(s);
            let key = act.canonical_key(&y);
            let next = act.ids.len() as u32;
            let id = *act.ids.entry(key).or_insert(next);
            if id == next {
                act.reps.push(y);
            }
            images[si].push(id);
        }
        c += 1;
    }
    debug_assert_eq!(act.reps.len() as u64, index);
    let deg = act.reps.len();
    let gens = images.into_iter().map(Permutation::from_images_unchecked).collect();
    act.image = Group::new_unchecked(deg, gens).with_caps(g.caps());
    Ok(act)
}

impl CosetAction {
    fn canonical_key(&self, x: &Permutation) -> Vec<u32> {
        let mut cur = x.clone();
        let base = self.sub_chain.base();
        for (lvl, &b) in base.iter().enumerate() {
            let orbit = self.sub_chain.orbit(lvl);
            if orbit.len() > 1 {
                let best = *orbit.iter().min_by_key(|&&d| cur.image(d as usize)).expect("orbit is nonempty");
                if best as usize != b {
                    let u = self.sub_chain.transversal(lvl, best as usize).expect("orbit point");
                    cur = u.mul(&cur);
                }
            }
        }
        base.iter().map(|&b| cur.images()[b]).collect()
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// The coset `Hx` containing `x`.
    pub fn coset_of(&self, x: &Permutation) -> usize {
        self.ids[&self.canonical_key(x)] as usize
    }

    pub fn rep(&self, c: usize) -> &Permutation {
        &self.reps[c]
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    /// Image of `x` in the coset action.
    pub fn image_of(&self, x: &Permutation) -> Permutation {
        let images = self.reps.iter().map(|r| self.coset_of(&r.mul(x)) as u32).collect();
        Permutation::from_images_unchecked(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(deg: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(deg, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn quotient_of_s4_by_klein_four() {
        let s4 = Group::new(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]).unwrap();
        let v4 = s4.subgroup(vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])]).unwrap();
        let act = coset_action(&s4, &v4).unwrap();
        assert_eq!(act.index(), 6);
        assert_eq!(act.image.order_u64(), 6);
        for x in s4.elements(100).unwrap() {
            assert_eq!(act.image_of(x).is_identity(), v4.has(x));
        }
    }

    #[test]
    fn trivial_and_whole_subgroup() {
        let a5 = Group::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let regular = coset_action(&a5, &Group::trivial(5)).unwrap();
        assert_eq!(regular.index(), 60);
        assert_eq!(regular.image.order_u64(), 60);
        let whole = coset_action(&a5, &a5).unwrap();
        assert_eq!(whole.index(), 1);
        assert_eq!(whole.image.order_u64(), 1);
    }

    #[test]
    fn cosets_of_non_normal_subgroup() {
        let a5 = Group::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let c5 = a5.subgroup(vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let act = coset_action(&a5, &c5).unwrap();
        assert_eq!(act.index(), 12);
        assert_eq!(act.image.order_u64(), 60);
        for x in a5.elements(100).unwrap() {
            let c = act.coset_of(x);
            assert!(c5.has(&x.mul(&act.rep(c).inverse())));
        }
    }
}
