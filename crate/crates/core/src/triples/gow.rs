use num_traits::Zero;

use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::permcore::Group;

/// Whether `C_i C_j` meets every noncentral class of elements of order
/// coprime to `char_prime`. Both `C_i` and `C_j` must be noncentral of order
/// coprime to `char_prime`.
pub fn gow_coverage_check(g: &Group, char_prime: u64, i: usize, j: usize) -> Result<bool> {
    let t = character_table(g)?;
    let semisimple_noncentral = |c: usize| {
        let cl = &t.classes[c];
        cl.size_u64 > 1 && cl.element_order % char_prime != 0
    };
    for c in [i, j] {
        if !semisimple_noncentral(c) {
            return Err(Error::ClassNotRegularSemisimple(c));
        }
    }
    // ab lands in C_k iff (a, b, (ab)^-1) is a triple ending in the inverse class
    Ok((0..t.len())
        .filter(|&k| semisimple_noncentral(k))
        .all(|k| !t.triple_count(i, j, t.inverse_map[k]).is_zero()))
}
