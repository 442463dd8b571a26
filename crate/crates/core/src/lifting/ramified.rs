//! Ramification of central characters of a normal p-subgroup.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::prime_factors;
use crate::chartab::{character_table, Cyclotomic};
use crate::error::{Error, Result};
use crate::permcore::Group;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Ramification {
    /// Index of the linear character of `Z(N)` in the table of `Z(N)`.
    pub central_character: usize,
    /// Irreducible constituents of the induced character, with multiplicities.
    pub constituents: Vec<(usize, u64)>,
    pub e: u64,
    pub index: u64,
    pub ok: bool,
}

/// Characters `φ` of `Z(n)` that are nontrivial on `[n, n]`, paired with the
/// decomposition of `φ` induced to `n`.
fn ramifications(g: &Group, n: &Group, exhaust: bool) -> Result<Vec<Ramification>> {
    if !n.is_normal_in(g) {
        return Err(Error::Precondition("subgroup is not normal".into()));
    }
    let order = n.order_u64();
    if prime_factors(order).len() != 1 {
        return Err(Error::Precondition(format!("order {order} is not a prime power")));
    }
    let derived = n.derived_subgroup();
    if n.is_abelian() || derived.is_trivial() {
        return Err(Error::NoSuchCharacter("the subgroup is abelian".into()));
    }
    let z = n.center()?.clone();
    let zt = character_table(&z)?;
    let nt = character_table(n)?;
    let (ztab, zcd) = (z.table()?, z.class_data()?);
    let (ntab, ncd) = (n.table()?, n.class_data()?);
    // central elements are singleton classes in both groups
    let pairs: Vec<(usize, usize, bool)> = zcd
        .classes
        .iter()
        .map(|c| {
            let nc = ncd.class_of(ntab, &c.rep).expect("center lies in the subgroup");
            (c.index, nc, derived.has(&c.rep))
        })
        .collect();
    debug_assert_eq!(zcd.len(), ztab.len());
    let zo = BigRational::from_integer(z.order_u64().into());
    let one = Cyclotomic::one();
    let mut out = Vec::new();
    for phi in 0..zt.len() {
        let nontrivial = pairs.iter().any(|&(zc, _, in_derived)| in_derived && *zt.value(phi, zc) != one);
        if !nontrivial {
            continue;
        }
        let mut constituents = Vec::new();
        for theta in 0..nt.len() {
            let mut s = Cyclotomic::zero();
            for &(zc, nc, _) in &pairs {
                s = s + zt.value(phi, zc) * &nt.value(theta, nc).conj();
            }
            let m = s.to_rational().expect("inner products are rational") / &zo;
            if !m.is_zero() {
                let m = m.to_integer().try_into().expect("multiplicity is a small nonnegative integer");
                constituents.push((theta, m));
            }
        }
        let index = order / z.order_u64();
        let e = if constituents.len() == 1 { constituents[0].1 } else { 0 };
        let ok = constituents.len() == 1 && e * e == index && nt.degree(constituents[0].0) == e;
        out.push(Ramification { central_character: phi, constituents, e, index, ok });
        if !exhaust {
            break;
        }
    }
    if out.is_empty() {
        return Err(Error::NoSuchCharacter("no central character is nontrivial on the derived subgroup".into()));
    }
    Ok(out)
}

/// The first `φ` nontrivial on `[n, n]` in table order.
pub fn fully_ramified_check(g: &Group, n: &Group) -> Result<Ramification> {
    Ok(ramifications(g, n, false)?.remove(0))
}

/// Every `φ` nontrivial on `[n, n]`.
pub fn fully_ramified_all(g: &Group, n: &Group) -> Result<Vec<Ramification>> {
    ramifications(g, n, true)
}
