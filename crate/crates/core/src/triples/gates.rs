use num_traits::Zero;
use serde::Serialize;

use super::brute::triple_count_bruteforce;
use super::report::{GateKind, GateVerdict, Method, TripleReport};
use crate::arith::{is_prime, is_prime_power};
use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::permcore::Group;
use crate::structure::{is_p_solvable, is_solvable, normal_subgroups};

/// Which nontrivial elements count as `p`-elements in a scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderMode {
    PrimePower,
    /// Only elements of order exactly `p`; too weak for the gates, kept to
    /// show the difference.
    PrimeOnly,
}

fn candidate_classes(g: &Group, p: u64, mode: OrderMode) -> Result<Vec<usize>> {
    let data = g.class_data()?;
    Ok(data
        .classes
        .iter()
        .filter(|c| match mode {
            OrderMode::PrimePower => c.element_order > 1 && is_prime_power(c.element_order, p),
            OrderMode::PrimeOnly => c.element_order == p,
        })
        .map(|c| c.index)
        .collect())
}

pub fn pqr_triple_exists(g: &Group, p: u64, q: u64, r: u64) -> Result<Option<TripleReport>> {
    pqr_triple_exists_with(g, [p, q, r], OrderMode::PrimePower)
}

/// Scans class triples `(i,j,k)` ascending, with `C_i, C_j, C_k` made of
/// nontrivial `p`-, `q`-, `r`-elements, and returns the first one with a
/// positive count together with the first witness in `C_i x C_j`.
pub fn pqr_triple_exists_with(g: &Group, primes: [u64; 3], mode: OrderMode) -> Result<Option<TripleReport>> {
    let [p, q, r] = primes;
    if !(is_prime(p) && is_prime(q) && is_prime(r)) || p == q || q == r || p == r {
        return Err(Error::InvalidPrimes(format!("({p},{q},{r}) must be three distinct primes")));
    }
    let order = g.order_u64();
    if primes.iter().any(|&s| !order.is_multiple_of(s)) {
        return Ok(None);
    }
    let data = g.class_data()?;
    let (ci, cj, ck) = (candidate_classes(g, p, mode)?, candidate_classes(g, q, mode)?, candidate_classes(g, r, mode)?);
    let table_result = character_table(g);
    let chars = match &table_result {
        Ok(t) => Some(t.clone()),
        Err(Error::OverCap { .. }) => None,
        Err(_) => return Err(table_result.expect_err("checked")),
    };
    for &i in &ci {
        for &j in &cj {
            for &k in &ck {
                let (count, method) = match &chars {
                    Some(t) => (t.triple_count(i, j, k), Method::CharacterFormula),
                    None => (triple_count_bruteforce(g, i, j, k)?, Method::BruteForce),
                };
                if count.is_zero() {
                    continue;
                }
                let witness = find_witness(g, i, j, k)?;
                let report = TripleReport {
                    primes,
                    class_triple: Some([i, j, k]),
                    class_labels: Some([i, j, k].map(|c| data.label(c).to_string())),
                    count: Some(count),
                    witness: Some(witness),
                    method,
                };
                let out = report.canonicalize(|c| data.inverse_class(c), |c| data.label(c).to_string());
                debug_assert!(out.witness_is_valid());
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

/// First `(a, b, (ab)^-1)` over `C_i x C_j` in table order with the last
/// entry in `C_k`.
fn find_witness(g: &Group, i: usize, j: usize, k: usize) -> Result<[crate::Permutation; 3]> {
    let table = g.table()?;
    let data = g.class_data()?;
    for &a in data.members(i) {
        for &b in data.members(j) {
            let c = table.inverse(table.product(a as usize, b as usize));
            if data.class_of_index(c) == k {
                return Ok([a as usize, b as usize, c].map(|x| table.elements[x].clone()));
            }
        }
    }
    unreachable!("positive count guarantees a witness")
}

/// Solvable iff no (p1,p2,p3)-triple exists for distinct primes dividing the
/// order. Prime sets are tried in ascending lexicographic order.
pub fn solvability_gate(g: &Group) -> Result<GateVerdict> {
    let primes = g.prime_divisors();
    let mut witness = None;
    'scan: for a in 0..primes.len() {
        for b in a + 1..primes.len() {
            for c in b + 1..primes.len() {
                if let Some(r) = pqr_triple_exists(g, primes[a], primes[b], primes[c])? {
                    witness = Some(r);
                    break 'scan;
                }
            }
        }
    }
    let verdict = witness.is_none();
    Ok(GateVerdict { kind: GateKind::Solvable, verdict, witness, cross_check: verdict == is_solvable(g) })
}

/// For a non-solvable group, a triple of a 2-element, a `p2`-element with
/// `p2` in {3, 5} and a `p3`-element with `p3 > p2` odd. `None` for
/// solvable groups, and also if the search fails, which would be a bug.
pub fn main3_witness(g: &Group) -> Result<Option<TripleReport>> {
    if is_solvable(g) {
        return Ok(None);
    }
    let primes = g.prime_divisors();
    for p2 in [3, 5] {
        if !primes.contains(&p2) {
            continue;
        }
        for &p3 in primes.iter().filter(|&&s| s > p2) {
            if let Some(r) = pqr_triple_exists(g, 2, p2, p3)? {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

/// `p`-solvable iff there is no (2,p,q)-triple for an odd prime `q != p`.
pub fn psolvable_gate(g: &Group, p: u64) -> Result<GateVerdict> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidPrimes(format!("{p} must be an odd prime")));
    }
    let mut witness = None;
    for q in g.prime_divisors() {
        if q == 2 || q == p {
            continue;
        }
        if let Some(r) = pqr_triple_exists(g, 2, p, q)? {
            witness = Some(r);
            break;
        }
    }
    let verdict = witness.is_none();
    let cross_check = verdict == is_p_solvable(g, p)?;
    Ok(GateVerdict { kind: GateKind::PSolvable { prime: p }, verdict, witness, cross_check })
}

/// Orders of the factors of a chief series, bottom up.
pub fn chief_factor_orders(g: &Group) -> Result<Vec<u64>> {
    let lattice = normal_subgroups(g)?;
    let mut cur = 0;
    let mut out = Vec::new();
    while cur + 1 < lattice.len() {
        let here = &lattice.subgroups[cur];
        let next = (cur + 1..lattice.len())
            .find(|&i| lattice.subgroups[i].order > here.order && lattice.subgroups[i].contains(here))
            .expect("the whole group lies above");
        out.push(lattice.subgroups[next].order / here.order);
        cur = next;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Conjecture2pqRow {
    pub q: u64,
    pub p: u64,
    /// Some chief factor (hence some composition factor) has order divisible by `pq`.
    pub factor_divisible: bool,
    pub triple_exists: bool,
    pub agrees: bool,
}

/// Exploratory: compares the two sides of the (2,p,q) conjecture for every
/// pair of odd primes `q < p` dividing the order.
pub fn conjecture_2pq(g: &Group) -> Result<Vec<Conjecture2pqRow>> {
    let factors = chief_factor_orders(g)?;
    let odd: Vec<u64> = g.prime_divisors().into_iter().filter(|&s| s != 2).collect();
    let mut rows = Vec::new();
    for (a, &q) in odd.iter().enumerate() {
        for &p in &odd[a + 1..] {
            let factor_divisible = factors.iter().any(|&f| f % (p * q) == 0);
            let triple_exists = pqr_triple_exists(g, 2, p, q)?.is_some();
            rows.push(Conjecture2pqRow { q, p, factor_divisible, triple_exists, agrees: factor_divisible == triple_exists });
        }
    }
    Ok(rows)
}

