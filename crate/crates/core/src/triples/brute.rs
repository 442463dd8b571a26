//! Enumeration oracle, independent of any character theory.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::permcore::Group;

fn check_pairs(g: &Group, i: usize, j: usize) -> Result<()> {
    let data = g.class_data()?;
    let pairs = data.classes[i].size_u64 as u128 * data.classes[j].size_u64 as u128;
    let cap = g.caps().pair_product;
    if pairs > cap as u128 {
        return Err(Error::over_cap("class pair product", pairs, cap));
    }
    Ok(())
}

/// `hist[k]` is the number of `(a,b)` in `C_i x C_j` with `(ab)^-1` in `C_k`.
pub fn pair_histogram(g: &Group, i: usize, j: usize) -> Result<Vec<u64>> {
    check_pairs(g, i, j)?;
    let table = g.table()?;
    let data = g.class_data()?;
    let mut hist = vec![0u64; data.len()];
    for &a in data.members(i) {
        for &b in data.members(j) {
            let ab = table.product(a as usize, b as usize);
            hist[data.class_of_index(table.inverse(ab))] += 1;
        }
    }
    Ok(hist)
}

/// Number of `(a,b,c)` in `C_i x C_j x C_k` with `abc = 1`.
pub fn triple_count_bruteforce(g: &Group, i: usize, j: usize, k: usize) -> Result<BigUint> {
    check_pairs(g, i, j)?;
    let table = g.table()?;
    let data = g.class_data()?;
    let mut n = 0u64;
    for &a in data.members(i) {
        for &b in data.members(j) {
            let ab = table.product(a as usize, b as usize);
            if data.class_of_index(table.inverse(ab)) == k {
                n += 1;
            }
        }
    }
    Ok(BigUint::from(n))
}
