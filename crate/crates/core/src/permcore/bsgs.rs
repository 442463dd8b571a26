//! Deterministic Schreier–Sims with Schreier-vector transversals.

use num_bigint::BigUint;

use super::perm::Permutation;

const NOT_IN_ORBIT: i32 = -1;
const ROOT: i32 = -2;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    /// Orbit of the base point in discovery order; never reordered so
    /// transversal words of old points stay fixed as generators are added.
    orbit: Vec<u32>,
    /// Generator index whose application reached the point, or a sentinel.
    label: Vec<i32>,
    /// For orbit position `j`, how many generators have had their Schreier
    /// generator sifted already.
    checked: Vec<u32>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut label = vec![NOT_IN_ORBIT; degree];
        label[base_point] = ROOT;
        Level {
            base_point,
            gens: Vec::new(),
            gens_inv: Vec::new(),
            orbit: vec![base_point as u32],
            label,
            checked: vec![0],
        }
    }

    fn push_gen(&mut self, g: Permutation) {
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
        self.extend_orbit();
    }

    fn extend_orbit(&mut self) {
        let mut idx = 0;
        while idx < self.orbit.len() {
            let pt = self.orbit[idx] as usize;
            for (gi, g) in self.gens.iter().enumerate() {
                let img = g.image(pt);
                if self.label[img] == NOT_IN_ORBIT {
                    self.label[img] = gi as i32;
                    self.orbit.push(img as u32);
                    self.checked.push(0);
                }
            }
            idx += 1;
        }
    }

    /// Replaces `h` by `h * u^-1` where `u` maps the base point to `h(base)`.
    /// Returns false when `h(base)` is outside the orbit.
    fn strip_in_place(&self, h: &mut Vec<u32>) -> bool {
        let mut beta = h[self.base_point] as usize;
        if self.label[beta] == NOT_IN_ORBIT {
            return false;
        }
        while self.label[beta] != ROOT {
            let gi = self.label[beta] as usize;
            let inv = self.gens_inv[gi].images();
            for x in h.iter_mut() {
                *x = inv[*x as usize];
            }
            beta = inv[beta] as usize;
        }
        true
    }

    fn transversal(&self, point: usize) -> Option<Permutation> {
        if self.label[point] == NOT_IN_ORBIT {
            return None;
        }
        let mut word = Vec::new();
        let mut beta = point;
        while self.label[beta] != ROOT {
            let gi = self.label[beta] as usize;
            word.push(gi);
            beta = self.gens_inv[gi].image(beta);
        }
        let mut u = Permutation::identity(self.label.len());
        for &gi in word.iter().rev() {
            u = u.mul(&self.gens[gi]);
        }
        Some(u)
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Builds a chain whose base starts with `prefix` (levels may be redundant).
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit(&self, level: usize) -> &[u32] {
        &self.levels[level].orbit
    }

    pub fn in_orbit(&self, level: usize, point: usize) -> bool {
        self.levels[level].label[point] != NOT_IN_ORBIT
    }

    /// Element of the level stabilizer mapping the base point to `point`.
    pub fn transversal(&self, level: usize, point: usize) -> Option<Permutation> {
        self.levels[level].transversal(point)
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].gens
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    /// Strips `g` from level `from` downward; returns the residue and the
    /// level at which stripping stopped (`depth()` if it went all the way).
    fn sift_from(&self, g: &Permutation, from: usize) -> (Vec<u32>, usize) {
        let mut h = g.images().to_vec();
        for (li, level) in self.levels.iter().enumerate().skip(from) {
            if !level.strip_in_place(&mut h) {
                return (h, li);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, lvl) = self.sift_from(g, 0);
        lvl == self.levels.len() && is_identity_images(&h)
    }

    /// Adds `g`; returns false if it was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (h, lvl) = self.sift_from(g, 0);
        if lvl == self.levels.len() && is_identity_images(&h) {
            return false;
        }
        let y = Permutation::from_images_unchecked(h);
        let top = self.insert_residue(y, 0, lvl);
        self.complete(top);
        true
    }

    /// Adds residue `y` (fixing the first `lvl` base points) to levels `from..=lvl`.
    fn insert_residue(&mut self, y: Permutation, from: usize, lvl: usize) -> usize {
        // Stripping only stops at a level whose base point the residue moves,
        // so a new level is needed only when it passed every level.
        if lvl == self.levels.len() {
            let b = y.lowest_moved_point().expect("residue is not the identity");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=lvl {
            self.levels[l].push_gen(y.clone());
        }
        lvl
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let li = i as usize;
            match self.find_unsifted_schreier_generator(li) {
                Some((y, j)) => {
                    let top = self.insert_residue(y, li + 1, j);
                    i = top as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_unsifted_schreier_generator(&mut self, li: usize) -> Option<(Permutation, usize)> {
        let mut j = 0;
        while j < self.levels[li].orbit.len() {
            let ngens = self.levels[li].gens.len();
            while (self.levels[li].checked[j] as usize) < ngens {
                let gi = self.levels[li].checked[j] as usize;
                self.levels[li].checked[j] += 1;
                let level = &self.levels[li];
                let beta = level.orbit[j] as usize;
                let u = level.transversal(beta).expect("orbit point has a transversal");
                let h = u.mul(&level.gens[gi]);
                let (res, lvl) = self.sift_from(&h, li);
                if !(lvl == self.levels.len() && is_identity_images(&res)) {
                    debug_assert!(lvl > li);
                    return Some((Permutation::from_images_unchecked(res), lvl));
                }
            }
            j += 1;
        }
        None
    }

    /// Images of the base points under `g`, which identify `g` within the group.
    pub fn base_image(&self, g: &Permutation) -> Vec<u32> {
        self.levels.iter().map(|l| g.images()[l.base_point]).collect()
    }
}

fn is_identity_images(h: &[u32]) -> bool {
    h.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(deg: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(deg, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn alternating_group_of_degree_five() {
        let chain = StabChain::new(5, &[cyc(5, &[0, 1, 2, 3, 4]), cyc(5, &[0, 1, 2])]);
        assert_eq!(chain.order(), BigUint::from(60u32));
        assert!(chain.contains(&cyc(5, &[2, 3, 4])));
        assert!(!chain.contains(&cyc(5, &[0, 1])));
        assert!(chain.contains(&Permutation::identity(5)));
    }

    #[test]
    fn symmetric_group_of_degree_four() {
        let chain = StabChain::new(4, &[cyc(4, &[0, 1, 2, 3]), cyc(4, &[0, 1])]);
        assert_eq!(chain.order(), BigUint::from(24u32));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(4, &[Permutation::identity(4)]);
        assert_eq!(chain.order(), BigUint::from(1u32));
        assert_eq!(chain.depth(), 0);
    }

    #[test]
    fn base_prefix_levels_may_be_redundant() {
        let chain = StabChain::with_base_prefix(5, &[cyc(5, &[2, 3, 4])], &[0, 1]);
        assert_eq!(chain.order(), BigUint::from(3u32));
        assert_eq!(&chain.base()[..2], &[0, 1]);
    }

    #[test]
    fn transversals_map_base_point() {
        let chain = StabChain::new(6, &[cyc(6, &[0, 1, 2, 3, 4, 5]), cyc(6, &[0, 1])]);
        assert_eq!(chain.order(), BigUint::from(720u32));
        for lvl in 0..chain.depth() {
            let b = chain.base()[lvl];
            for &pt in chain.orbit(lvl) {
                let u = chain.transversal(lvl, pt as usize).unwrap();
                assert_eq!(u.image(b), pt as usize);
            }
        }
    }
}
