use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::bsgs::StabChain;
use super::classes::{ClassData, ConjClass};
use super::table::ElementTable;
use super::perm::Permutation;
use crate::chartab::CharTable;
use crate::error::{Error, Result};
use crate::structure::NormalLattice;

/// Size bounds for the exact algorithms. Exceeding one is an error, never a
/// silent approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub elements: u64,
    pub lattice_order: u64,
    pub lattice_subgroups: u64,
    pub pair_product: u64,
    pub coset_degree: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 1_000_000,
            lattice_order: 10_000,
            lattice_subgroups: 100_000,
            pair_product: 100_000_000,
            coset_degree: 100_000,
        }
    }
}

/// A permutation group given by generators. Subgroups are groups on the same
/// point set; memoized data is filled at most once and never changes.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    caps: Caps,
    chain: OnceLock<Arc<StabChain>>,
    table: OnceLock<Arc<ElementTable>>,
    classes: OnceLock<Arc<ClassData>>,
    center: OnceLock<Arc<Group>>,
    derived: OnceLock<Arc<Group>>,
    char_table: OnceLock<Arc<CharTable>>,
    normals: OnceLock<Arc<NormalLattice>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish_non_exhaustive()
    }
}

pub fn group_from_generators(gens: Vec<Permutation>, degree: usize) -> Result<Group> {
    Group::new(degree, gens)
}

impl Group {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
        }
        Ok(Self::new_unchecked(degree, generators))
    }

    pub(crate) fn new_unchecked(degree: usize, generators: Vec<Permutation>) -> Group {
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Group {
            degree,
            generators,
            caps: Caps::default(),
            chain: OnceLock::new(),
            table: OnceLock::new(),
            classes: OnceLock::new(),
            center: OnceLock::new(),
            derived: OnceLock::new(),
            char_table: OnceLock::new(),
            normals: OnceLock::new(),
        }
    }

    pub(crate) fn from_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain, caps: Caps) -> Group {
        let g = Self::new_unchecked(degree, generators).with_caps(caps);
        let _ = g.chain.set(Arc::new(chain));
        g
    }

    pub fn trivial(degree: usize) -> Group {
        Self::new_unchecked(degree, Vec::new())
    }

    pub fn with_caps(mut self, caps: Caps) -> Group {
        self.caps = caps;
        self
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub(crate) fn char_table_cell(&self) -> &OnceLock<Arc<CharTable>> {
        &self.char_table
    }

    pub(crate) fn normal_lattice_cell(&self) -> &OnceLock<Arc<NormalLattice>> {
        &self.normals
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| Arc::new(StabChain::new(self.degree, &self.generators)))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as a machine word; every group handled here fits.
    pub fn order_u64(&self) -> u64 {
        self.chain().order_u64().expect("group order fits in u64")
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: p.degree() });
        }
        Ok(self.chain().contains(p))
    }

    /// Membership for an element already known to have the right degree.
    pub fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::over_cap("group order", order, cap));
        }
        Ok(())
    }

    /// Full element table, built once; errors when the order exceeds the cap.
    pub fn table(&self) -> Result<&ElementTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        self.check_cap(self.caps.elements)?;
        Ok(self.table.get_or_init(|| Arc::new(ElementTable::build(self))))
    }

    pub fn elements(&self, cap: u64) -> Result<&[Permutation]> {
        self.check_cap(cap)?;
        Ok(&self.table()?.elements)
    }

    pub fn class_data(&self) -> Result<&ClassData> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let table = self.table()?;
        Ok(self.classes.get_or_init(|| Arc::new(ClassData::build(self, table))))
    }

    pub fn conjugacy_classes(&self) -> Result<&[ConjClass]> {
        Ok(&self.class_data()?.classes)
    }

    /// The subgroup generated by `gens`, which must lie in this group.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<Group> {
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::NotAMember);
            }
        }
        Ok(Self::new_unchecked(self.degree, gens).with_caps(self.caps))
    }

    /// Subgroup spanned by a list of members, picking generators greedily in
    /// list order. `target` (if known) lets the scan stop early.
    pub fn subgroup_from_elements<'a>(
        &self,
        elements: impl IntoIterator<Item = &'a Permutation>,
        target: Option<u64>,
    ) -> Group {
        let mut chain = StabChain::new(self.degree, &[]);
        let mut gens = Vec::new();
        for e in elements {
            if target.is_some_and(|t| chain.order_u64() == Some(t)) {
                break;
            }
            if chain.add_generator(e) {
                gens.push(e.clone());
            }
        }
        Group::from_chain(self.degree, gens, chain, self.caps)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.generators.iter().all(|g| other.has(g))
    }

    pub fn same_as(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, parent: &Group) -> bool {
        parent
            .generators
            .iter()
            .all(|s| self.generators.iter().all(|n| self.has(&n.conjugate_by(s))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].mul(&g[j]) == g[j].mul(&g[i])))
    }

    pub fn centralizer(&self, x: &Permutation) -> Result<Group> {
        if !self.contains(x)? {
            return Err(Error::NotAMember);
        }
        let table = self.table()?;
        let xi = table.index_of(x).expect("member has an index");
        let members: Vec<&Permutation> = (0..table.len())
            .filter(|&i| table.product(xi, i) == table.product(i, xi))
            .map(|i| &table.elements[i])
            .collect();
        let target = members.len() as u64;
        Ok(self.subgroup_from_elements(members, Some(target)))
    }

    pub fn center(&self) -> Result<&Group> {
        if let Some(z) = self.center.get() {
            return Ok(z);
        }
        let data = self.class_data()?;
        let members: Vec<&Permutation> =
            data.classes.iter().filter(|c| c.size_u64 == 1).map(|c| &c.rep).collect();
        let target = members.len() as u64;
        let z = self.subgroup_from_elements(members, Some(target));
        Ok(self.center.get_or_init(|| Arc::new(z)))
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<Group> {
        for s in seed {
            if !self.contains(s)? {
                return Err(Error::NotAMember);
            }
        }
        Ok(self.normal_closure_unchecked(seed))
    }

    pub(crate) fn normal_closure_unchecked(&self, seed: &[Permutation]) -> Group {
        let mut chain = StabChain::new(self.degree, &[]);
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seed {
            if chain.add_generator(s) {
                gens.push(s.clone());
            }
        }
        let mut i = 0;
        while i < gens.len() {
            for s in &self.generators {
                let c = gens[i].conjugate_by(s);
                if chain.add_generator(&c) {
                    gens.push(c);
                }
            }
            i += 1;
        }
        Group::from_chain(self.degree, gens, chain, self.caps)
    }

    pub fn derived_subgroup(&self) -> &Group {
        self.derived.get_or_init(|| {
            let g = &self.generators;
            let mut comms = Vec::new();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    let c = Permutation::commutator(&g[i], &g[j]);
                    if !c.is_identity() {
                        comms.push(c);
                    }
                }
            }
            Arc::new(self.normal_closure_unchecked(&comms))
        })
    }

    /// Subgroup generated by this group's and `other`'s generators.
    pub fn join(&self, other: &Group) -> Group {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        let mut chain = StabChain::new(self.degree, &[]);
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| chain.add_generator(g)).collect();
        Group::from_chain(self.degree, gens, chain, self.caps)
    }

    pub fn exponent(&self) -> Result<u64> {
        let data = self.class_data()?;
        Ok(data.classes.iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.element_order)))
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        crate::arith::prime_factors(self.order_u64()).into_iter().map(|(p, _)| p).collect()
    }

    pub fn order_f64(&self) -> f64 {
        self.order().to_f64().unwrap_or(f64::INFINITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(deg: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(deg, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn a5() -> Group {
        Group::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap()
    }

    #[test]
    fn rejects_bad_degree() {
        assert!(matches!(
            Group::new(5, vec![Permutation::identity(4)]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(Group::new(0, vec![]), Err(Error::EmptyDegree)));
    }

    #[test]
    fn elements_respect_cap() {
        let g = a5();
        assert_eq!(g.elements(1_000_000).unwrap().len(), 60);
        assert!(matches!(g.elements(59), Err(Error::OverCap { .. })));
    }

    #[test]
    fn derived_and_normal_closure() {
        let s4 = Group::new(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(s4.derived_subgroup().order_u64(), 12);
        let g = a5();
        assert_eq!(g.normal_closure(&[cyc(5, &[&[0, 1, 2]])]).unwrap().order_u64(), 60);
        let c6 = Group::new(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(c6.derived_subgroup().order_u64(), 1);
    }

    #[test]
    fn centralizer_and_center() {
        let g = a5();
        assert_eq!(g.center().unwrap().order_u64(), 1);
        let x = cyc(5, &[&[0, 1, 2]]);
        assert_eq!(g.centralizer(&x).unwrap().order_u64(), 3);
        assert!(g.centralizer(&cyc(5, &[&[0, 1]])).is_err());
        let c6 = Group::new(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let y = c6.generators()[0].pow(2);
        assert_eq!(c6.centralizer(&y).unwrap().order_u64(), 6);
    }
}
