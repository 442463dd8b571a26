use fixedbitset::FixedBitSet;

use crate::arith::{is_prime_power, p_part};
use crate::error::Result;
use crate::permcore::{ElementTable, Group};

/// A subgroup of the element table: member set plus generating indices.
#[derive(Clone, Debug)]
pub struct IndexedSubgroup {
    pub members: FixedBitSet,
    pub gens: Vec<usize>,
    pub order: usize,
}

impl IndexedSubgroup {
    pub fn generated(table: &ElementTable, gens: Vec<usize>) -> IndexedSubgroup {
        let m = table.closure(&gens);
        IndexedSubgroup { order: m.len(), members: table.to_bitset(&m), gens }
    }

    pub fn to_group(&self, g: &Group, table: &ElementTable) -> Group {
        let elems = self.gens.iter().map(|&i| &table.elements[i]);
        g.subgroup_from_elements(elems, Some(self.order as u64))
    }

    /// Elements of the table normalizing this subgroup, in table order.
    pub fn normalizer(&self, table: &ElementTable) -> Vec<usize> {
        (0..table.len())
            .filter(|&x| {
                let s = &table.elements[x];
                let si = &table.elements[table.inverse(x)];
                self.gens.iter().all(|&h| self.members.contains(table.conjugate(h, s, si)))
            })
            .collect()
    }

    /// The conjugate `x^-1 H x`.
    pub fn conjugate(&self, table: &ElementTable, x: usize) -> IndexedSubgroup {
        let s = &table.elements[x];
        let si = &table.elements[table.inverse(x)];
        let mut members = FixedBitSet::with_capacity(table.len());
        members.extend(self.members.ones().map(|h| table.conjugate(h, s, si)));
        let gens = self.gens.iter().map(|&h| table.conjugate(h, s, si)).collect();
        IndexedSubgroup { members, gens, order: self.order }
    }
}

/// A Sylow `p`-subgroup as table indices. Seeds with the first nontrivial
/// `p`-element in table order, then repeatedly adjoins the first element of
/// the normalizer lying outside the current subgroup whose `p`-th power lies
/// inside it.
pub fn sylow_indexed(g: &Group, p: u64) -> Result<IndexedSubgroup> {
    let table = g.table()?;
    let data = g.class_data()?;
    let full = p_part(g.order_u64(), p) as usize;
    let order_of = |i: usize| data.classes[data.class_of_index(i)].element_order;
    let mut cur = IndexedSubgroup::generated(table, Vec::new());
    if full == 1 {
        return Ok(cur);
    }
    let seed = (1..table.len()).find(|&i| is_prime_power(order_of(i), p)).expect("Cauchy");
    cur = IndexedSubgroup::generated(table, vec![seed]);
    while cur.order < full {
        let y = cur
            .normalizer(table)
            .into_iter()
            .find(|&y| !cur.members.contains(y) && cur.members.contains(table.power(y, p)))
            .expect("a non-Sylow p-subgroup grows inside its normalizer");
        let mut gens = cur.gens.clone();
        gens.push(y);
        cur = IndexedSubgroup::generated(table, gens);
    }
    Ok(cur)
}

/// A Sylow `p`-subgroup; trivial when `p` does not divide the order.
pub fn sylow(g: &Group, p: u64) -> Result<Group> {
    let s = sylow_indexed(g, p)?;
    Ok(s.to_group(g, g.table()?))
}
