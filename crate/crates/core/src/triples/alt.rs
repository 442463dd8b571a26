use serde::Serialize;

use super::report::{Method, TripleReport};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::permcore::Permutation;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AltConstruction {
    pub s: usize,
    pub t: usize,
    pub ind_x: usize,
    pub ind_y: usize,
    pub ind_xy: usize,
    pub report: TripleReport,
}

/// A (2,q,p)-triple in `A_p` for odd primes `q < p`, built without any
/// enumeration.
///
/// Write `p = s q + t` with `0 < t < q`. `y` is a product of `s` disjoint
/// `q`-cycles on blocks `O_1..O_s`, leaving `t` fixed points. `x` joins each
/// block to the next by one transposition and sends every fixed point of `y`
/// into the blocks, avoiding points already used. `<x, y>` is then
/// transitive, and the index bound forces `xy` to be a `p`-cycle.
pub fn alt_triple_construct(p: usize, q: usize) -> Result<AltConstruction> {
    if !(is_prime(p as u64) && is_prime(q as u64)) || q < 3 || q >= p {
        return Err(Error::InvalidPrimes(format!("need odd primes q < p, got q={q} p={p}")));
    }
    let (s, t) = (p / q, p % q);
    let cycles: Vec<Vec<usize>> = (0..s).map(|b| (b * q..(b + 1) * q).collect()).collect();
    let y = Permutation::from_cycles(p, &cycles)?;

    let mut used = vec![false; p];
    let mut transpositions = Vec::new();
    for b in 0..s.saturating_sub(1) {
        let (from, to) = ((b + 1) * q - 1, (b + 1) * q);
        used[from] = true;
        used[to] = true;
        transpositions.push(vec![from, to]);
    }
    let mut free = (0..s * q).filter(|&i| !used[i]);
    for j in s * q..p {
        let partner = free.next().expect("s q - 2(s - 1) >= t free block points");
        transpositions.push(vec![j, partner]);
    }
    let x = Permutation::from_cycles(p, &transpositions)?;
    let xy = x.mul(&y);
    let z = xy.inverse();

    let (ind_x, ind_y, ind_xy) = (x.ind(), y.ind(), xy.ind());
    let ok = x.is_even()
        && x.order() == 2
        && y.order() == q as u64
        && xy.order() == p as u64
        && xy.cycle_type() == vec![p]
        && ind_x + ind_y + ind_xy >= 2 * p - 2;
    if !ok {
        return Err(Error::ConstructionFailed(format!("construction failed at p={p} q={q}")));
    }
    let report = TripleReport {
        primes: [2, q as u64, p as u64],
        class_triple: None,
        class_labels: None,
        count: None,
        witness: Some([x, y, z]),
        method: Method::Constructive,
    };
    Ok(AltConstruction { s, t, ind_x, ind_y, ind_xy, report })
}
