use super::lifts::proper_supplement;
use super::normal::normal_subgroups;
use crate::error::{Error, Result};
use crate::permcore::Group;

/// Intersection of the maximal subgroups.
///
/// A normal subgroup lies in every maximal subgroup exactly when it has no
/// proper supplement, and the Frattini subgroup is itself normal, so it is
/// the largest normal subgroup without a proper supplement.
pub fn frattini(g: &Group) -> Result<Group> {
    let lattice = normal_subgroups(g)?;
    for n in lattice.subgroups.iter().rev() {
        if proper_supplement(g, &n.group)?.is_none() {
            return Ok(n.group.clone());
        }
    }
    unreachable!("the trivial subgroup has no proper supplement")
}

/// Minimal members among the normal subgroups of `g` inside `inside` that
/// are not central; the first by (order, class set) is returned.
pub fn minimal_noncentral_normal(g: &Group, inside: &Group) -> Result<Group> {
    if !inside.is_normal_in(g) || !inside.is_subgroup_of(g) {
        return Err(Error::Precondition("the enclosing subgroup must be normal".into()));
    }
    let lattice = normal_subgroups(g)?;
    let center = g.center()?;
    lattice
        .subgroups
        .iter()
        .find(|n| n.group.is_subgroup_of(inside) && !n.group.is_subgroup_of(center))
        .map(|n| n.group.clone())
        .ok_or_else(|| Error::NoneFound("every normal subgroup inside is central".into()))
}
