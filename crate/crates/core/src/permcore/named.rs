//! Standard small permutation groups.

use super::group::Group;
use super::perm::Permutation;

fn cycle(deg: usize, pts: impl IntoIterator<Item = usize>) -> Permutation {
    Permutation::from_cycles(deg, &[pts.into_iter().collect::<Vec<_>>()]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> Group {
    Group::new_unchecked(n, vec![cycle(n, 0..n)])
}

pub fn symmetric(n: usize) -> Group {
    if n < 2 {
        return Group::trivial(n.max(1));
    }
    Group::new_unchecked(n, vec![cycle(n, 0..n), cycle(n, 0..2)])
}

pub fn alternating(n: usize) -> Group {
    if n < 3 {
        return Group::trivial(n.max(1));
    }
    // (1 2 3) together with an n- or (n-1)-cycle, whichever is even
    let long = if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) };
    Group::new_unchecked(n, vec![cycle(n, 0..3), long])
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion() -> Group {
    let i = Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).expect("valid");
    let j = Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 7, 3, 5]]).expect("valid");
    Group::new_unchecked(8, vec![i, j])
}

/// `x -> a x + b` over `Z/p`, for `a` in the subgroup of order `k` of the
/// unit group.
pub fn affine(p: usize, k: usize) -> Group {
    let root = crate::arith::primitive_root(p as u64) as usize;
    let a = crate::arith::pow_mod(root as u64, ((p - 1) / k) as u64, p as u64) as usize;
    let translate = Permutation::from_images((0..p).map(|x| ((x + 1) % p) as u32).collect()).expect("bijection");
    let scale = Permutation::from_images((0..p).map(|x| (x * a % p) as u32).collect()).expect("bijection");
    Group::new_unchecked(p, vec![translate, scale])
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (da, db) = (a.degree(), b.degree());
    let shift = |p: &Permutation, off: usize, deg: usize| {
        let mut img: Vec<u32> = (0..deg as u32).collect();
        for (i, &x) in p.images().iter().enumerate() {
            img[i + off] = x + off as u32;
        }
        Permutation::from_images_unchecked(img)
    };
    let mut gens: Vec<Permutation> = a.generators().iter().map(|p| shift(p, 0, da + db)).collect();
    gens.extend(b.generators().iter().map(|p| shift(p, da, da + db)));
    Group::new_unchecked(da + db, gens)
}
