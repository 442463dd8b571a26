use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::is_prime_power;
use crate::permcore::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Method {
    CharacterFormula,
    BruteForce,
    Constructive,
}

/// A (p,q,r)-triple found in a group, primes ascending.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TripleReport {
    pub primes: [u64; 3],
    pub class_triple: Option<[usize; 3]>,
    pub class_labels: Option<[String; 3]>,
    #[serde(serialize_with = "crate::bigser::opt_uint")]
    pub count: Option<BigUint>,
    pub witness: Option<[Permutation; 3]>,
    pub method: Method,
}

impl TripleReport {
    /// Witness elements are nontrivial of the tagged prime-power orders and
    /// multiply to the identity.
    pub fn witness_is_valid(&self) -> bool {
        let Some([x, y, z]) = &self.witness else { return false };
        let tags_ok = [x, y, z]
            .iter()
            .zip(self.primes)
            .all(|(e, p)| !e.is_identity() && is_prime_power(e.order(), p));
        tags_ok && x.mul(y).mul(z).is_identity()
    }

    /// Reorders the roles so the primes ascend. Rotating `(x,y,z)` keeps the
    /// product trivial, and so does reversing it while inverting each entry
    /// (which sends each class to its inverse class).
    pub(crate) fn canonicalize(mut self, inverse_class: impl Fn(usize) -> usize, label: impl Fn(usize) -> String) -> TripleReport {
        let p = self.primes;
        let target = {
            let mut s = p;
            s.sort_unstable();
            s
        };
        for reversed in [false, true] {
            for shift in 0..3 {
                let order: [usize; 3] = if reversed {
                    [(2 + 3 - shift) % 3, (1 + 3 - shift) % 3, (3 - shift) % 3]
                } else {
                    [shift, (shift + 1) % 3, (shift + 2) % 3]
                };
                if order.map(|i| p[i]) != target {
                    continue;
                }
                self.primes = target;
                if let Some(w) = self.witness.take() {
                    self.witness = Some(order.map(|i| if reversed { w[i].inverse() } else { w[i].clone() }));
                }
                if let Some(c) = self.class_triple {
                    let c = order.map(|i| if reversed { inverse_class(c[i]) } else { c[i] });
                    self.class_triple = Some(c);
                    if self.class_labels.is_some() {
                        self.class_labels = Some(c.map(&label));
                    }
                }
                return self;
            }
        }
        unreachable!("some rotation or reflection sorts three entries")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "gate")]
pub enum GateKind {
    Solvable,
    PSolvable { prime: u64 },
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GateVerdict {
    #[serde(flatten)]
    pub kind: GateKind,
    /// Solvable, or `p`-solvable for the `p` in `kind`.
    pub verdict: bool,
    pub witness: Option<TripleReport>,
    /// Agreement with the series-based predicate.
    pub cross_check: bool,
}
