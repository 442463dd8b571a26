use serde::Serialize;

use crate::arith::is_prime_power;
use crate::error::Result;
use crate::permcore::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtraspecialType {
    /// `p = 2`, the quadratic form has maximal Witt index.
    Plus,
    Minus,
    ExponentP,
    ExponentP2,
}

/// Recognizes `p^(1+2n)`: centre of order `p` equal to the derived subgroup,
/// with elementary abelian central quotient. For `p = 2` the type comes from
/// counting involutions; for odd `p` from the exponent.
pub fn is_extraspecial(g: &Group, p: u64) -> Result<Option<ExtraspecialType>> {
    let order = g.order_u64();
    if order < p * p * p || !is_prime_power(order, p) || order.ilog(p).is_multiple_of(2) {
        return Ok(None);
    }
    let z = g.center()?;
    if z.order_u64() != p || !g.derived_subgroup().same_as(z) {
        return Ok(None);
    }
    // G/Z is abelian, so generators of order dividing p there make it elementary
    if !g.generators().iter().all(|s| z.has(&s.pow(p as i64))) {
        return Ok(None);
    }
    let classes = g.conjugacy_classes()?;
    if p == 2 {
        let n = (order.ilog2() - 1) / 2;
        let involutions: u64 = classes.iter().filter(|c| c.element_order == 2).map(|c| c.size_u64).sum();
        // squares to 1 exactly on the preimages of singular vectors
        let plus = (1u64 << (2 * n)) + (1u64 << n) - 1;
        return Ok(Some(if involutions == plus { ExtraspecialType::Plus } else { ExtraspecialType::Minus }));
    }
    let exp = classes.iter().map(|c| c.element_order).max().unwrap_or(1);
    Ok(Some(if exp == p { ExtraspecialType::ExponentP } else { ExtraspecialType::ExponentP2 }))
}
