//! Supplements and complements of normal subgroups by lifting generators.
//!
//! If `H N = G` then `H` meets every coset `g N`, so choosing one element of
//! `H` in each coset `g_i N` (for generators `g_i` of `G` modulo `N`) gives a
//! tuple generating a subgroup of `H` that still supplements `N`. Searching
//! all such tuples is therefore exhaustive. Conjugating a tuple by an element
//! of `N` preserves its cosets, so the first entry only ranges over orbit
//! representatives of `N` acting on `g_1 N`.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::permcore::{ElementTable, Group, StabChain};

pub(crate) struct LiftProblem<'a> {
    table: &'a ElementTable,
    n_members: Vec<usize>,
    n_set: FixedBitSet,
    /// Cosets `g_i N` as index lists, in table order of `n_members`.
    cosets: Vec<Vec<usize>>,
}

impl<'a> LiftProblem<'a> {
    pub(crate) fn new(g: &Group, n: &Group, table: &'a ElementTable) -> LiftProblem<'a> {
        let n_gens: Vec<usize> =
            n.generators().iter().map(|x| table.index_of(x).expect("member")).collect();
        let mut n_members = table.closure(&n_gens);
        n_members.sort_unstable();
        let n_set = table.to_bitset(&n_members);
        let mut chain = StabChain::new(g.degree(), n.generators());
        let reps: Vec<usize> = g
            .generators()
            .iter()
            .filter(|s| chain.add_generator(s))
            .map(|s| table.index_of(s).expect("member"))
            .collect();
        let cosets = reps.iter().map(|&r| n_members.iter().map(|&m| table.product(r, m)).collect()).collect();
        LiftProblem { table, n_members, n_set, cosets }
    }

    fn first_candidates(&self) -> Vec<usize> {
        let Some(first) = self.cosets.first() else { return Vec::new() };
        let t = self.table;
        let mut seen = FixedBitSet::with_capacity(t.len());
        let mut reps = Vec::new();
        for &h in first {
            if seen.contains(h) {
                continue;
            }
            reps.push(h);
            for &m in &self.n_members {
                seen.insert(t.conjugate(h, &t.elements[m], &t.elements[t.inverse(m)]));
            }
        }
        reps
    }

    /// Depth-first search over lift tuples. `limit` and `avoid_n` bound every
    /// partial closure; `prune` rejects partial closures early; `keep`
    /// filters candidates per coset; `done` accepts a full closure.
    fn search(
        &self,
        limit: usize,
        avoid_n: bool,
        keep: &dyn Fn(usize, usize) -> bool,
        prune: &dyn Fn(&[usize]) -> bool,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut avoid = self.n_set.clone();
        avoid.set(0, false);
        let avoid = avoid_n.then_some(&avoid);
        let mut tuple = Vec::with_capacity(self.cosets.len());
        self.dfs(&mut tuple, limit, avoid, keep, prune)
    }

    fn dfs(
        &self,
        tuple: &mut Vec<usize>,
        limit: usize,
        avoid: Option<&FixedBitSet>,
        keep: &dyn Fn(usize, usize) -> bool,
        prune: &dyn Fn(&[usize]) -> bool,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let depth = tuple.len();
        if depth == self.cosets.len() {
            let closure = self.table.closure_within(tuple, limit, avoid)?;
            return Some((tuple.clone(), closure));
        }
        let candidates = if depth == 0 { self.first_candidates() } else { self.cosets[depth].clone() };
        for h in candidates {
            if !keep(depth, h) {
                continue;
            }
            tuple.push(h);
            let ok = self
                .table
                .closure_within(tuple, limit, avoid)
                .is_some_and(|c| depth + 1 == self.cosets.len() || !prune(&c));
            if ok {
                if let Some(found) = self.dfs(tuple, limit, avoid, keep, prune) {
                    return Some(found);
                }
            }
            tuple.pop();
        }
        None
    }
}

/// A proper subgroup `H` with `H N = G`, if one exists.
pub fn proper_supplement(g: &Group, n: &Group) -> Result<Option<Group>> {
    let table = g.table()?;
    let order = table.len();
    if order == 1 {
        return Ok(None);
    }
    let prob = LiftProblem::new(g, n, table);
    // a partial closure containing N already forces the whole group
    let contains_n = |c: &[usize]| {
        let set = table.to_bitset(c);
        prob.n_set.is_subset(&set)
    };
    let found = prob.search(order / 2, false, &|_, _| true, &contains_n);
    Ok(found.and_then(|(tuple, closure)| {
        (closure.len() < order).then(|| {
            let elems = tuple.iter().map(|&i| &table.elements[i]);
            g.subgroup_from_elements(elems, Some(closure.len() as u64))
        })
    }))
}

/// A subgroup `U` with `U N = G` and `U ∩ N = 1`, if one exists.
pub fn complement_exists(g: &Group, n: &Group) -> Result<Option<Group>> {
    let table = g.table()?;
    let prob = LiftProblem::new(g, n, table);
    let index = table.len() / prob.n_members.len();
    // a lift must have the order of its image modulo N
    let image_order: Vec<u64> = prob
        .cosets
        .iter()
        .map(|c| {
            let r = c[0];
            let (mut k, mut x) = (1u64, r);
            while !prob.n_set.contains(x) {
                x = table.product(x, r);
                k += 1;
            }
            k
        })
        .collect();
    let keep = |depth: usize, h: usize| table.power(h, image_order[depth]) == 0;
    let found = prob.search(index, true, &keep, &|_| false);
    Ok(found.and_then(|(tuple, closure)| {
        (closure.len() == index).then(|| {
            let elems = tuple.iter().map(|&i| &table.elements[i]);
            g.subgroup_from_elements(elems, Some(index as u64))
        })
    }))
}
