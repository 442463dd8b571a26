//! The faithful character of `2^(1+2n)_-` extended to a cyclic group of
//! order `2^m + 1` acting on a `2m`-dimensional minus-type summand.

use num_bigint::BigInt;
use serde::Serialize;

use super::extraspecial::{Extraspecial, QuadraticForm2};
use crate::chartab::{character_table, Cyclotomic};
use crate::error::{Error, Result};
use crate::permcore::field::{FiniteField, Ring};
use crate::permcore::{Group, Matrix, Permutation};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ValueFormulaReport {
    pub n: usize,
    pub n_i: usize,
    pub group_order: u64,
    pub automorphism_order: u64,
    /// Faithful characters of degree `2^n`.
    pub faithful: usize,
    /// Those among them with a rational value at the automorphism.
    pub rational: usize,
    /// The rational value, when exactly one exists.
    pub value: Option<String>,
    pub expected: i64,
    pub ok: bool,
}

/// Norm-trace form on `GF(2^(2m))` over `GF(2)`: `Tr(x^(2^m + 1))`.
/// It has Witt defect 1, and multiplication by norm-one scalars preserves it.
fn norm_trace_form(f: &FiniteField, m: u32) -> QuadraticForm2 {
    let q = |x: u32| -> u32 {
        let nrm = f.pow(x, (1u64 << m) + 1);
        (0..m).fold(0, |acc, i| f.add(acc, f.frobenius(nrm, i)))
    };
    let dim = 2 * m as usize;
    let diag: Vec<u32> = (0..dim).map(|i| q(1 << i)).collect();
    let mut polar = vec![vec![0; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                polar[i][j] = q((1 << i) | (1 << j)) ^ diag[i] ^ diag[j];
            }
        }
    }
    QuadraticForm2 { diag, polar }
}

/// Builds `E:C` with `E = 2^(1+2n)_-` and `C` of order `2^m + 1`, returning
/// the group, the central involution and a generator of `C`.
pub fn value_formula_group(n: usize, m: usize) -> Result<(Group, Permutation, Permutation)> {
    if m == 0 || m > n {
        return Err(Error::Precondition(format!("need 1 <= n_i <= n, got n={n} n_i={m}")));
    }
    if 2 * m > 10 {
        return Err(Error::over_cap("field size", 1u64 << (2 * m), 1024));
    }
    let f = FiniteField::new(1 << (2 * m))?;
    let w = norm_trace_form(&f, m as u32);
    let form = w.sum(&QuadraticForm2::standard(n - m, false));
    // z^(2^m - 1) has norm one and order 2^m + 1
    let scalar = f.z_pow((1i64 << m) - 1);
    let dim = 2 * n;
    let mut a: Matrix = vec![vec![0; dim]; dim];
    for i in 0..2 * m {
        let img = f.mul(1 << i, scalar);
        for j in 0..2 * m {
            a[i][j] = (img >> j) & 1;
        }
    }
    for i in 2 * m..dim {
        a[i][i] = 1;
    }
    if !form.preserved_by(&a) {
        return Err(Error::ConstructionFailed(format!("scalar action does not preserve the form at n={n} n_i={m}")));
    }
    let e = Extraspecial::from_form(&form);
    let (x, autos) = e.extend(std::slice::from_ref(&a))?;
    Ok((x, e.central_generator(), autos[0].clone()))
}

pub fn value_formula_check(n: usize, n_i: usize) -> Result<ValueFormulaReport> {
    let (x, z, g) = value_formula_group(n, n_i)?;
    let t = character_table(&x)?;
    let table = x.table()?;
    let cd = x.class_data()?;
    let cz = cd.class_of(table, &z).ok_or(Error::NotAMember)?;
    let cg = cd.class_of(table, &g).ok_or(Error::NotAMember)?;
    let deg = 1u64 << n;
    let faithful: Vec<usize> =
        (0..t.len()).filter(|&c| t.degree(c) == deg && t.value(c, cz).to_integer() == Some(BigInt::from(-(deg as i64)))).collect();
    let rational: Vec<&Cyclotomic> = faithful.iter().map(|&c| t.value(c, cg)).filter(|v| v.is_rational()).collect();
    let expected = -(1i64 << (n - n_i));
    let value = (rational.len() == 1).then(|| rational[0].clone());
    let ok = value.as_ref().is_some_and(|v| *v == Cyclotomic::from_int(expected));
    Ok(ValueFormulaReport {
        n,
        n_i,
        group_order: x.order_u64(),
        automorphism_order: g.order(),
        faithful: faithful.len(),
        rational: rational.len(),
        value: value.map(|v| v.to_string()),
        expected,
        ok,
    })
}
