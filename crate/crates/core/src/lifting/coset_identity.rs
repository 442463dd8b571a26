//! The product of the sets `g_i [g_i, N]` for an abelian minimal noncentral
//! normal p-subgroup `N`.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::prime_factors;
use crate::error::{Error, Result};
use crate::permcore::{Group, Permutation};
use crate::structure::minimal_noncentral_normal;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CosetIdentityReport {
    pub prime: u64,
    /// `|[g_i, N]|` for each `i`.
    pub commutator_sizes: Vec<usize>,
    pub product_size: usize,
    pub coset_size: u64,
    /// Each `g_i [g_i, N]` lies in `g_i N` and consists of `N`-conjugates of `g_i`.
    pub conjugates_ok: bool,
    pub holds: bool,
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

pub fn abelian_coset_identity_check(g: &Group, n: &Group, g_reps: &[Permutation]) -> Result<CosetIdentityReport> {
    let no = n.order_u64();
    let factors = prime_factors(no);
    if factors.len() != 1 {
        return Err(hypothesis(format!("N has order {no}, not a nontrivial prime power")));
    }
    let p = factors[0].0;
    if !n.is_abelian() {
        return Err(hypothesis("N is not abelian"));
    }
    if !n.is_normal_in(g) {
        return Err(hypothesis("N is not normal"));
    }
    for x in g_reps {
        if !g.has(x) {
            return Err(hypothesis("an element is not in G"));
        }
    }
    let generated = g.subgroup(g_reps.to_vec())?;
    if generated.order_u64() != g.order_u64() {
        return Err(hypothesis("the elements do not generate G"));
    }
    match minimal_noncentral_normal(g, n) {
        Ok(m) if m.order_u64() == no => {}
        Ok(_) => return Err(hypothesis("N is not minimal among noncentral normal subgroups")),
        Err(Error::NoneFound(_)) => return Err(hypothesis("N is central")),
        Err(e) => return Err(e),
    }
    let all_p_prime = g_reps.iter().all(|x| x.order() % p != 0);
    if !all_p_prime {
        // O^p(G) is the normal closure of the p'-elements
        let table = g.table()?;
        let seeds: Vec<Permutation> = table.elements.iter().filter(|x| x.order() % p != 0).cloned().collect();
        if g.normal_closure(&seeds)?.order_u64() != g.order_u64() {
            return Err(hypothesis(format!("G is not generated by {p}'-elements and some element has order divisible by {p}")));
        }
    }

    let n_elems = n.elements(g.caps().elements)?.to_vec();
    let mut conjugates_ok = true;
    let mut sets: Vec<Vec<Permutation>> = Vec::with_capacity(g_reps.len());
    let mut commutator_sizes = Vec::with_capacity(g_reps.len());
    for x in g_reps {
        let c: HashSet<Permutation> = n_elems.iter().map(|m| Permutation::commutator(x, m)).collect();
        commutator_sizes.push(c.len());
        let xinv = x.inverse();
        let shifted: Vec<Permutation> = c.iter().map(|k| x.mul(k)).collect();
        for y in &shifted {
            conjugates_ok &= n.has(&xinv.mul(y)) && n_elems.iter().any(|m| &x.conjugate_by(m) == y);
        }
        sets.push(shifted);
    }
    let mut current = vec![g.identity()];
    for s in &sets {
        let next: HashSet<Permutation> = current.iter().flat_map(|a| s.iter().map(move |b| a.mul(b))).collect();
        current = next.into_iter().collect();
    }
    let base = g_reps.iter().fold(g.identity(), |acc, x| acc.mul(x));
    let coset: HashSet<Permutation> = n_elems.iter().map(|m| base.mul(m)).collect();
    let product: HashSet<Permutation> = current.into_iter().collect();
    Ok(CosetIdentityReport {
        prime: p,
        commutator_sizes,
        product_size: product.len(),
        coset_size: no,
        conjugates_ok,
        holds: product == coset,
    })
}
