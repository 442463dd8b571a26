use fixedbitset::FixedBitSet;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{ElementTable, Group};
use crate::structure::{sylow_indexed, IndexedSubgroup};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SylowProductResult {
    pub primes: [u64; 3],
    pub all_equal: bool,
    /// Number of Sylow choices `(P1, P2, P3)` compared.
    pub checked: u64,
    /// First choice in enumeration order with `|P1 P2 P3| < |P1||P2||P3|`.
    #[serde(skip)]
    pub counterexample: Option<[Group; 3]>,
    pub counterexample_size: Option<u64>,
}

/// All Sylow `p`-subgroups, as the conjugates of one, in order of the first
/// conjugating element in the table.
fn all_sylows(g: &Group, table: &ElementTable, p: u64) -> Result<Vec<IndexedSubgroup>> {
    let rep = sylow_indexed(g, p)?;
    let mut seen: FxHashSet<FixedBitSet> = FxHashSet::default();
    let mut out = Vec::new();
    for x in 0..table.len() {
        let c = rep.conjugate(table, x);
        if seen.insert(c.members.clone()) {
            out.push(c);
        }
    }
    Ok(out)
}

/// `|a b c|`, or with `exact` unset any value below `|a||b||c|` once that
/// inequality is certain.
fn product_size(table: &ElementTable, a: &IndexedSubgroup, b: &IndexedSubgroup, c: &IndexedSubgroup, exact: bool) -> usize {
    let mut ab = FixedBitSet::with_capacity(table.len());
    for x in a.members.ones() {
        for y in b.members.ones() {
            ab.insert(table.product(x, y));
        }
    }
    if !exact && ab.count_ones(..) < a.order * b.order {
        return ab.count_ones(..) * c.order;
    }
    let mut abc = FixedBitSet::with_capacity(table.len());
    for u in ab.ones() {
        for z in c.members.ones() {
            abc.insert(table.product(u, z));
        }
    }
    abc.count_ones(..)
}

/// Compares `|P1 P2 P3|` with `|P1||P2||P3|` over every choice of Sylow
/// subgroups, stopping at the first inequality. Products are bounded by the
/// pair-product cap; running out of budget before a decision is an error.
pub fn sylow_product_test(g: &Group, p1: u64, p2: u64, p3: u64) -> Result<SylowProductResult> {
    let primes = [p1, p2, p3];
    let order = g.order_u64();
    let mut result = SylowProductResult { primes, all_equal: true, checked: 0, counterexample: None, counterexample_size: None };
    if primes.iter().any(|&p| !order.is_multiple_of(p)) {
        return Ok(result);
    }
    let table = g.table()?;
    let sets = [all_sylows(g, table, p1)?, all_sylows(g, table, p2)?, all_sylows(g, table, p3)?];
    let full = sets[0][0].order * sets[1][0].order * sets[2][0].order;
    let budget = g.caps().pair_product;
    let mut spent = 0u64;
    for a in &sets[0] {
        for b in &sets[1] {
            for c in &sets[2] {
                spent += (a.order * b.order + full) as u64;
                if spent > budget {
                    return Err(Error::over_cap("Sylow product work", spent, budget));
                }
                result.checked += 1;
                if product_size(table, a, b, c, false) != full {
                    result.all_equal = false;
                    result.counterexample_size = Some(product_size(table, a, b, c, true) as u64);
                    result.counterexample = Some([a, b, c].map(|s| s.to_group(g, table)));
                    return Ok(result);
                }
            }
        }
    }
    Ok(result)
}

/// Every ordered triple of distinct prime divisors.
pub fn sylow_product_all(g: &Group) -> Result<Vec<SylowProductResult>> {
    let primes = g.prime_divisors();
    let mut out = Vec::new();
    for &a in &primes {
        for &b in &primes {
            for &c in &primes {
                if a != b && b != c && a != c {
                    out.push(sylow_product_test(g, a, b, c)?);
                }
            }
        }
    }
    Ok(out)
}
