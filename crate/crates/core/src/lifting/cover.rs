//! Frattini covers `X -> X/F` with an explicit quotient action.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::{is_prime, prime_factors};
use crate::error::{Error, Result};
use crate::permcore::{coset_action, matrix_group_to_perm, vector_permutation, CosetAction, Group, Permutation, Zmod};
use crate::structure::frattini;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind", content = "detail")]
pub enum FrattiniEvidence {
    /// Not machine checked at this size; the string says why it holds.
    Asserted(String),
    /// `F <= Φ(X)` checked directly.
    Computed(bool),
}

pub struct CoverScenario {
    pub name: String,
    pub x: Group,
    pub f: Group,
    pub quotient: CosetAction,
    pub frattini_contained: FrattiniEvidence,
    pub kernel_prime: u64,
    /// Whether the Schur multiplier of `X/F` is prime to the kernel prime.
    /// Taken from the literature, never computed.
    pub multiplier_coprime: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LiftSet {
    /// Coset of `F` containing the lifts, as a point of the quotient action.
    pub base_coset: usize,
    pub order: u64,
    pub members: Vec<Permutation>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LiftProductReport {
    pub lift_sizes: Vec<usize>,
    pub products: Vec<Permutation>,
    /// `|[F, X]|`.
    pub j_order: u64,
    /// The products form exactly one coset of `[F, X]`.
    pub single_coset: bool,
    /// The products fill all of `F`.
    pub whole_kernel: bool,
    /// Whether the identity is among the products.
    pub contains_identity: bool,
}

impl CoverScenario {
    /// Packages `X` over the normal subgroup `F`, whose order must be a power
    /// of `kernel_prime`.
    pub fn new(name: &str, x: Group, f: Group, kernel_prime: u64, evidence: FrattiniEvidence) -> Result<CoverScenario> {
        if !f.is_normal_in(&x) {
            return Err(Error::Precondition(format!("{name}: kernel is not normal")));
        }
        let fo = f.order_u64();
        if fo > 1 && !(is_prime(kernel_prime) && prime_factors(fo).iter().all(|&(q, _)| q == kernel_prime)) {
            return Err(Error::Precondition(format!("{name}: kernel order {fo} is not a power of {kernel_prime}")));
        }
        let quotient = coset_action(&x, &f)?;
        debug_assert_eq!(quotient.image.order_u64() * fo, x.order_u64());
        Ok(CoverScenario {
            name: name.to_string(),
            x,
            f,
            quotient,
            frattini_contained: evidence,
            kernel_prime,
            multiplier_coprime: None,
        })
    }

    /// Replaces the containment evidence by a direct Frattini computation.
    pub fn compute_frattini(&mut self) -> Result<bool> {
        let phi = frattini(&self.x)?;
        let ok = self.f.is_subgroup_of(&phi);
        self.frattini_contained = FrattiniEvidence::Computed(ok);
        Ok(ok)
    }

    pub fn quotient(&self) -> &Group {
        &self.quotient.image
    }

    /// Some element of `X` over the quotient element `g`.
    pub fn preimage_rep(&self, g: &Permutation) -> &Permutation {
        // the quotient acts on cosets F r_c, and F maps to the coset g sends F to
        self.quotient.rep(g.image(0))
    }

    fn kernel_elements(&self) -> Result<Vec<Permutation>> {
        let cap = self.x.caps().elements;
        Ok(self.f.elements(cap)?.to_vec())
    }

    /// `{x in X : xF = g, |x| = |g|}`.
    pub fn lift_set(&self, g: &Permutation) -> Result<LiftSet> {
        if !self.quotient().has(g) {
            return Err(Error::NotAMember);
        }
        let rep = self.preimage_rep(g);
        let order = g.order();
        let members = self.kernel_elements()?.iter().map(|f| f.mul(rep)).filter(|x| x.order() == order).collect();
        Ok(LiftSet { base_coset: g.image(0), order, members })
    }

    /// `[F, X]`, the normal closure of commutators of generators.
    pub fn commutator_with_kernel(&self) -> Result<Group> {
        let seed: Vec<Permutation> = self
            .f
            .generators()
            .iter()
            .flat_map(|a| self.x.generators().iter().map(move |b| Permutation::commutator(a, b)))
            .filter(|c| !c.is_identity())
            .collect();
        self.x.normal_closure(&seed)
    }

    /// The set `X_1 ... X_r` of products of same-order lifts.
    pub fn lift_product_set(&self, g_reps: &[Permutation]) -> Result<LiftProductReport> {
        let fo = self.f.order_u64();
        let deg = self.quotient().degree();
        let prod = g_reps.iter().fold(Permutation::identity(deg), |acc, g| acc.mul(g));
        if !prod.is_identity() {
            return Err(Error::Precondition("the quotient elements do not multiply to the identity".into()));
        }
        if let Some(g) = g_reps.iter().find(|g| num_integer::gcd(g.order(), fo) != 1) {
            return Err(Error::Precondition(format!("element of order {} is not prime to |F| = {fo}", g.order())));
        }
        let lifts: Vec<LiftSet> = g_reps.iter().map(|g| self.lift_set(g)).collect::<Result<_>>()?;
        let cap = self.x.caps().pair_product;
        let mut current: Vec<Permutation> = vec![Permutation::identity(self.x.degree())];
        for l in &lifts {
            let work = current.len() as u64 * l.members.len() as u64;
            if work > cap {
                return Err(Error::over_cap("lift product work", work, cap));
            }
            let mut seen = HashSet::new();
            for a in &current {
                for b in &l.members {
                    seen.insert(a.mul(b));
                }
            }
            current = seen.into_iter().collect();
        }
        current.sort();
        let j = self.commutator_with_kernel()?;
        let single_coset = match current.first() {
            None => false,
            Some(p0) => {
                let p0i = p0.inverse();
                current.len() as u64 == j.order_u64() && current.iter().all(|p| j.has(&p0i.mul(p)))
            }
        };
        Ok(LiftProductReport {
            lift_sizes: lifts.iter().map(|l| l.members.len()).collect(),
            whole_kernel: current.len() as u64 == fo,
            contains_identity: current.iter().any(Permutation::is_identity),
            products: current,
            j_order: j.order_u64(),
            single_coset,
        })
    }
}

/// `SL2(Z/p^2)` over the kernel of reduction mod `p`, for `p` in {5, 7}.
pub fn sl2_zm(m: u32) -> Result<CoverScenario> {
    let p = match m {
        25 => 5u32,
        49 => 7,
        _ => return Err(Error::Precondition(format!("modulus must be 25 or 49, got {m}"))),
    };
    let x = matrix_group_to_perm(&[vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]], m, 2)?;
    let r = Zmod::new(m)?;
    let kernel_mats = [
        vec![vec![1, p], vec![0, 1]],
        vec![vec![1, 0], vec![p, 1]],
        vec![vec![1 + p, 0], vec![0, m + 1 - p]],
    ];
    let gens = kernel_mats.iter().map(|a| vector_permutation(&r, a)).collect();
    let f = x.subgroup(gens)?;
    let why = format!(
        "the kernel of SL2(Z/{m}) -> SL2({p}) is the adjoint module and the extension does not split; \
         check with complement_exists"
    );
    let mut sc = CoverScenario::new(&format!("SL2(Z/{m})"), x, f, p as u64, FrattiniEvidence::Asserted(why))?;
    // SL2(p) has trivial multiplier for p >= 5
    sc.multiplier_coprime = Some(true);
    Ok(sc)
}

/// The first tuple `(g_1, ..., g_len)` in element-table order that generates
/// `g`, has product 1, and has `order_ok(i, |g_i|)` for every position `i`.
/// The last entry is the inverse of the product of the others; the first
/// ranges over class representatives only.
pub fn generating_tuple(g: &Group, len: usize, order_ok: impl Fn(usize, u64) -> bool) -> Result<Option<Vec<Permutation>>> {
    if len < 2 {
        return Err(Error::Precondition("need at least two entries".into()));
    }
    let table = g.table()?;
    let cd = g.class_data()?;
    let order = g.order_u64();
    let orders: Vec<u64> = table.elements.iter().map(|x| x.order()).collect();
    let candidates: Vec<Vec<usize>> =
        (0..len).map(|pos| (0..table.len()).filter(|&i| order_ok(pos, orders[i])).collect()).collect();
    let firsts: Vec<usize> = cd
        .classes
        .iter()
        .filter(|c| order_ok(0, c.element_order))
        .map(|c| table.index_of(&c.rep).expect("member"))
        .collect();
    let mut tuple = Vec::with_capacity(len);
    for &f in &firsts {
        tuple.clear();
        tuple.push(f);
        if let Some(found) = extend_tuple(g, table, &candidates, &mut tuple, order, &order_ok) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn extend_tuple(
    g: &Group,
    table: &crate::permcore::ElementTable,
    candidates: &[Vec<usize>],
    tuple: &mut Vec<usize>,
    order: u64,
    order_ok: &impl Fn(usize, u64) -> bool,
) -> Option<Vec<Permutation>> {
    let len = candidates.len();
    if tuple.len() == len - 1 {
        let prod = tuple.iter().skip(1).fold(tuple[0], |acc, &i| table.product(acc, i));
        let last = table.inverse(prod);
        if !order_ok(len - 1, table.elements[last].order()) {
            return None;
        }
        let mut out: Vec<Permutation> = tuple.iter().map(|&i| table.elements[i].clone()).collect();
        out.push(table.elements[last].clone());
        let span = g.subgroup(out.clone()).ok()?;
        return (span.order_u64() == order).then_some(out);
    }
    for &c in &candidates[tuple.len()] {
        tuple.push(c);
        if let Some(found) = extend_tuple(g, table, candidates, tuple, order, order_ok) {
            return Some(found);
        }
        tuple.pop();
    }
    None
}
