use serde::Serialize;

use super::normal::normal_subgroups;
use crate::arith::is_prime_power;
use crate::error::Result;
use crate::permcore::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    /// Alternating `O_p'` / `O_p` radicals, every term normal in the group.
    PChiefFlags,
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Strictly descending, starting at the whole group.
    pub terms: Vec<Group>,
    pub verdict: bool,
}

impl SeriesReport {
    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(Group::order_u64).collect()
    }
}

/// Derived series down to its stable term.
pub fn derived_series(g: &Group) -> SeriesReport {
    let mut terms = vec![g.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        let next = last.derived_subgroup().clone();
        if next.order() == last.order() {
            break;
        }
        terms.push(next);
    }
    let verdict = terms.last().expect("nonempty").is_trivial();
    SeriesReport { kind: SeriesKind::Derived, terms, verdict }
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).verdict
}

/// The radical tower for `p`: starting from the trivial subgroup, repeatedly
/// take the largest normal subgroup above the current term whose quotient by
/// it is a `p'`-group, then one whose quotient is a `p`-group. The group is
/// `p`-solvable iff the tower reaches the whole group.
pub fn p_radical_series(g: &Group, p: u64) -> Result<SeriesReport> {
    let lattice = normal_subgroups(g)?;
    let mut cur = 0;
    let mut tower = vec![cur];
    let mut coprime_step = true;
    let mut stalled = 0;
    while stalled < 2 {
        let next = if coprime_step {
            lattice.largest_above(cur, |idx| idx % p != 0)
        } else {
            lattice.largest_above(cur, |idx| is_prime_power(idx, p))
        };
        if next == cur {
            stalled += 1;
        } else {
            stalled = 0;
            tower.push(next);
            cur = next;
        }
        coprime_step = !coprime_step;
    }
    let verdict = cur == lattice.len() - 1;
    let terms = tower.iter().rev().map(|&i| lattice.subgroups[i].group.clone()).collect();
    Ok(SeriesReport { kind: SeriesKind::PChiefFlags, terms, verdict })
}

pub fn is_p_solvable(g: &Group, p: u64) -> Result<bool> {
    if !g.order_u64().is_multiple_of(p) || is_solvable(g) {
        return Ok(true);
    }
    Ok(p_radical_series(g, p)?.verdict)
}

/// Largest solvable normal subgroup.
pub fn solvable_radical(g: &Group) -> Result<Group> {
    let lattice = normal_subgroups(g)?;
    let best = lattice
        .subgroups
        .iter()
        .rev()
        .find(|n| is_solvable(&n.group))
        .expect("the trivial subgroup is solvable");
    Ok(best.group.clone())
}
