//! Normal subgroups as unions of conjugacy classes.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::permcore::Group;

#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    /// Indices of the classes of the parent group making up this subgroup.
    pub classes: FixedBitSet,
    pub order: u64,
    pub group: Group,
}

impl NormalSubgroup {
    pub fn contains(&self, other: &NormalSubgroup) -> bool {
        other.classes.is_subset(&self.classes)
    }
}

/// Every normal subgroup, sorted by order and then by class set. Index 0 is
/// the trivial subgroup and the last entry is the whole group.
#[derive(Debug)]
pub struct NormalLattice {
    pub subgroups: Vec<NormalSubgroup>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn whole(&self) -> &NormalSubgroup {
        self.subgroups.last().expect("the whole group is normal")
    }

    pub fn trivial(&self) -> &NormalSubgroup {
        &self.subgroups[0]
    }

    /// Position of a normal subgroup given as a group.
    pub fn position_of(&self, h: &Group) -> Option<usize> {
        let order = h.order_u64();
        self.subgroups.iter().position(|n| n.order == order && n.group.is_subgroup_of(h))
    }

    /// Largest member containing `base` for which `accept(|M| / |base|)`
    /// holds. The accepted members must be closed under joins.
    pub fn largest_above(&self, base: usize, accept: impl Fn(u64) -> bool) -> usize {
        let b = &self.subgroups[base];
        (0..self.len())
            .rev()
            .find(|&i| {
                let m = &self.subgroups[i];
                m.contains(b) && accept(m.order / b.order)
            })
            .expect("base itself is accepted")
    }
}

/// All normal subgroups: normal closures of single classes, closed under
/// joins.
pub fn normal_subgroups(g: &Group) -> Result<Arc<NormalLattice>> {
    if let Some(l) = g.normal_lattice_cell().get() {
        return Ok(l.clone());
    }
    let data = g.class_data()?;
    let classes = &data.classes;
    let class_set = |h: &Group| -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(classes.len());
        for c in classes {
            if h.has(&c.rep) {
                b.insert(c.index);
            }
        }
        b
    };
    let make = |h: Group| -> NormalSubgroup {
        let set = class_set(&h);
        let order = set.ones().map(|c| classes[c].size_u64).sum();
        debug_assert_eq!(order, h.order_u64());
        NormalSubgroup { classes: set, order, group: h }
    };

    let mut list: Vec<NormalSubgroup> = vec![make(Group::trivial(g.degree()).with_caps(g.caps()))];
    let mut seen: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
    seen.insert(list[0].classes.clone(), 0);
    for c in classes.iter().skip(1) {
        let n = make(g.normal_closure_unchecked(std::slice::from_ref(&c.rep)));
        if !seen.contains_key(&n.classes) {
            seen.insert(n.classes.clone(), list.len());
            list.push(n);
        }
    }
    let mut i = 1;
    while i < list.len() {
        for j in 1..i {
            if list[i].contains(&list[j]) || list[j].contains(&list[i]) {
                continue;
            }
            let mut union = list[i].classes.clone();
            union.union_with(&list[j].classes);
            // a known subgroup equal to the union is already the join
            if seen.contains_key(&union) {
                continue;
            }
            let n = make(list[i].group.join(&list[j].group));
            if !seen.contains_key(&n.classes) {
                seen.insert(n.classes.clone(), list.len());
                list.push(n);
            }
        }
        i += 1;
    }
    list.sort_by(|a, b| (a.order, a.classes.as_slice()).cmp(&(b.order, b.classes.as_slice())));
    let lattice = Arc::new(NormalLattice { subgroups: list });
    Ok(g.normal_lattice_cell().get_or_init(|| lattice).clone())
}
