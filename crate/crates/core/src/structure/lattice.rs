//! Full subgroup lattice by cyclic extension, for small groups only. Used as
//! an independent check on the Frattini and complement searches.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashSet;

use super::sylow::IndexedSubgroup;
use crate::error::{Error, Result};
use crate::permcore::Group;

/// All subgroups, sorted by order then member set.
pub fn subgroup_lattice(g: &Group) -> Result<Vec<IndexedSubgroup>> {
    let caps = g.caps();
    let order = g.order_u64();
    if order > caps.lattice_order {
        return Err(Error::over_cap("lattice group order", order, caps.lattice_order));
    }
    let table = g.table()?;
    let mut seen: FxHashSet<FixedBitSet> = FxHashSet::default();
    let mut cyclic_gens = Vec::new();
    let mut all = Vec::new();
    for x in 0..table.len() {
        let h = IndexedSubgroup::generated(table, if x == 0 { vec![] } else { vec![x] });
        if seen.insert(h.members.clone()) {
            if x != 0 {
                cyclic_gens.push(x);
            }
            all.push(h);
        }
    }
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for &x in &cyclic_gens {
                if all[i].members.contains(x) {
                    continue;
                }
                let mut gens = all[i].gens.clone();
                gens.push(x);
                let h = IndexedSubgroup::generated(table, gens);
                if seen.insert(h.members.clone()) {
                    if all.len() as u64 >= caps.lattice_subgroups {
                        return Err(Error::over_cap("subgroup count", all.len() + 1, caps.lattice_subgroups));
                    }
                    next.push(all.len());
                    all.push(h);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| (a.order, a.members.as_slice()).cmp(&(b.order, b.members.as_slice())));
    Ok(all)
}

pub fn maximal_subgroups(lattice: &[IndexedSubgroup]) -> Vec<&IndexedSubgroup> {
    let Some(top) = lattice.last() else { return Vec::new() };
    lattice
        .iter()
        .filter(|h| h.order < top.order)
        .filter(|h| !lattice.iter().any(|k| k.order > h.order && k.order < top.order && h.members.is_subset(&k.members)))
        .collect()
}

/// Frattini subgroup as the intersection of the maximal subgroups.
pub fn frattini_by_lattice(g: &Group) -> Result<Group> {
    let lattice = subgroup_lattice(g)?;
    let table = g.table()?;
    let mut meet = lattice.last().expect("whole group").members.clone();
    for m in maximal_subgroups(&lattice) {
        meet.intersect_with(&m.members);
    }
    let elems: Vec<_> = meet.ones().map(|i| &table.elements[i]).collect();
    let n = elems.len() as u64;
    Ok(g.subgroup_from_elements(elems, Some(n)))
}

/// Whether some subgroup meets `n` trivially and has order `|G| / |n|`.
pub fn complement_by_lattice(g: &Group, n: &Group) -> Result<bool> {
    let lattice = subgroup_lattice(g)?;
    let table = g.table()?;
    let index = (g.order_u64() / n.order_u64()) as usize;
    Ok(lattice.iter().any(|h| {
        h.order == index && h.members.ones().all(|i| i == 0 || !n.has(&table.elements[i]))
    }))
}
