//! Exact finite-group computations around (p,q,r)-triples: permutation groups,
//! character tables, solvability gates and Frattini-cover lifting checks.

pub mod arith;
pub mod error;
pub mod ingest;
pub mod chartab;
pub mod lifting;
pub mod permcore;
pub mod structure;
pub mod triples;

pub use error::{Error, Result};
pub use permcore::{Caps, ConjClass, Group, Permutation};

pub(crate) mod bigser {
    //! Big integers serialize as decimal strings.
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn uint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn opt_uint<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }
}
