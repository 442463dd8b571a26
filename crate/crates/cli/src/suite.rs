//! The verification suite: a fixed registry of checks, each exact, run over
//! the corpus or over purpose-built groups.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use solvtrip::chartab::{character_table, verify_orthogonality, Cyclotomic};
use solvtrip::ingest::{corpus_with, CorpusEntry};
use solvtrip::lifting::{
    abelian_coset_identity_check, extraspecial_by_quaternion, fully_ramified_all, fully_ramified_check,
    generating_tuple, sl2_zm, value_formula_check, CoverScenario, FrattiniEvidence,
};
use solvtrip::permcore::{coset_action, Caps, Group, Permutation};
use solvtrip::structure::{
    complement_by_lattice, complement_exists, frattini, is_solvable, minimal_noncentral_normal, solvable_radical,
    sylow,
};
use solvtrip::triples::{
    alt_triple_construct, gow_coverage_check, main3_witness, pair_histogram, pqr_triple_exists_with,
    psolvable_gate, solvability_gate, sylow_product_all, OrderMode,
};
use solvtrip::{Error, Result};

/// Shared state for one suite run. The corpus is loaded once and its groups
/// keep their memoized tables across checks.
pub struct Context {
    pub caps: Caps,
    corpus: OnceLock<Result<Vec<CorpusEntry>>>,
}

impl Context {
    pub fn new(caps: Caps) -> Context {
        Context { caps, corpus: OnceLock::new() }
    }

    pub fn corpus(&self) -> Result<&[CorpusEntry]> {
        match self.corpus.get_or_init(|| corpus_with(&self.caps)) {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn entry(&self, name: &str) -> Result<&CorpusEntry> {
        self.corpus()?
            .iter()
            .find(|e| e.meta.matches(name))
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    fn group(&self, name: &str) -> Result<&Group> {
        Ok(&self.entry(name)?.group)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub passed: bool,
    pub summary: String,
    pub details: Vec<Value>,
}

impl Outcome {
    fn new(passed: bool, summary: impl Into<String>, details: Vec<Value>) -> Outcome {
        Outcome { passed, summary: summary.into(), details }
    }
}

pub struct Check {
    pub criterion: Option<u8>,
    pub section: &'static str,
    pub title: &'static str,
    pub run: fn(&Context) -> Result<Outcome>,
}

/// Other names accepted by `--section`.
const SECTION_ALIASES: &[(&str, &str)] = &[
    ("main1", "kernel-fill"),
    ("main2", "solvable"),
    ("main3", "sharpness"),
    ("main4", "psolvable"),
    ("a7", "central-lift"),
    ("qs", "tables"),
];

pub fn checks() -> Vec<Check> {
    let c = |criterion, section, title, run| Check { criterion, section, title, run };
    vec![
        c(Some(1), "oracle", "character formula equals enumeration on every class triple", oracle as fn(&Context) -> Result<Outcome>),
        c(Some(2), "solvable", "solvability gate agrees with the derived series", solvable),
        c(Some(3), "sharpness", "nonsolvable witnesses for Sz(8) and L2(7)", sharpness),
        c(Some(4), "psolvable", "p-solvability gate agrees with the p-series", psolvable),
        c(Some(5), "sylow", "Sylow triple products", sylow_products),
        c(Some(6), "central-lift", "A7 triple lifts to a nontrivial central product in 3.A7", central_lift),
        c(Some(7), "kernel-fill", "lift products fill the kernel of SL2(Z/25)", kernel_fill),
        c(Some(8), "split", "extraspecial central characters are fully ramified", ramified),
        c(Some(9), "split", "complements for split extraspecial extensions", complements),
        c(Some(10), "alt", "constructed triples in alternating groups", alt_triples),
        c(Some(11), "regular", "regular semisimple class products in SL2(5), SL2(7)", regular),
        c(Some(12), "value", "character value at the cyclic automorphism", value),
        c(Some(13), "tables", "character table orthogonality and the SL3(3) vanishing pattern", tables),
        c(None, "minimal", "Frattini subgroup is nilpotent and equals the radical in perfect groups", minimal),
        c(None, "abelian", "coset identity for abelian minimal normal subgroups", abelian),
        c(None, "prime-order", "prime-order scanning misses SL2(5)", prime_order),
    ]
}

/// Checks for a `--section` value: a section name, an alias, a criterion
/// number, or `all`.
pub fn select(section: Option<&str>) -> std::result::Result<Vec<Check>, String> {
    let all = checks();
    let Some(s) = section.map(str::to_ascii_lowercase) else { return Ok(all) };
    if s == "all" {
        return Ok(all);
    }
    let name = SECTION_ALIASES.iter().find(|(a, _)| *a == s).map_or(s.as_str(), |(_, n)| n);
    let by_number: Option<u8> = s.parse().ok();
    let picked: Vec<Check> =
        all.into_iter().filter(|c| c.section == name || (by_number.is_some() && c.criterion == by_number)).collect();
    if picked.is_empty() {
        let mut names: Vec<&str> = checks().iter().map(|c| c.section).collect();
        names.dedup();
        return Err(format!("unknown section {s}; known: all, {}", names.join(", ")));
    }
    Ok(picked)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    OverCap,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub criterion: Option<u8>,
    pub section: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub summary: String,
    pub details: Vec<Value>,
    #[serde(skip)]
    pub seconds: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::OverCap => "OVERCAP",
            Status::Error => "ERROR",
        };
        let id = self.criterion.map_or_else(|| "extra".to_string(), |c| format!("criterion {c:>2}"));
        format!("{tag} {id} [{}] {}: {} ({:.2}s)", self.section, self.title, self.summary, self.seconds)
    }
}

pub fn run_check(ctx: &Context, check: &Check) -> CheckResult {
    let t = Instant::now();
    let (status, summary, details) = match (check.run)(ctx) {
        Ok(o) => (if o.passed { Status::Pass } else { Status::Fail }, o.summary, o.details),
        Err(e @ Error::OverCap { .. }) => (Status::OverCap, e.to_string(), Vec::new()),
        Err(e) => (Status::Error, e.to_string(), Vec::new()),
    };
    CheckResult {
        criterion: check.criterion,
        section: check.section,
        title: check.title,
        status,
        summary,
        details,
        seconds: t.elapsed().as_secs_f64(),
    }
}

fn labels(g: &Group, classes: &[usize]) -> Result<Vec<String>> {
    let data = g.class_data()?;
    Ok(classes.iter().map(|&c| data.label(c).to_string()).collect())
}

fn product(perms: &[Permutation]) -> Permutation {
    let deg = perms.first().map_or(1, Permutation::degree);
    perms.iter().fold(Permutation::identity(deg), |acc, x| acc.mul(x))
}

fn orders(perms: &[Permutation]) -> Vec<u64> {
    perms.iter().map(Permutation::order).collect()
}

fn generates(g: &Group, perms: &[Permutation]) -> Result<bool> {
    Ok(g.subgroup(perms.to_vec())?.order_u64() == g.order_u64())
}

const ORACLE_ORDER_LIMIT: u64 = 10_000;
/// Groups small enough to also run the character sum in exact arithmetic.
const EXACT_ORDER_LIMIT: u64 = 200;

fn oracle(ctx: &Context) -> Result<Outcome> {
    let entries: Vec<&CorpusEntry> = ctx.corpus()?.iter().filter(|e| e.group.order_u64() <= ORACLE_ORDER_LIMIT).collect();
    let rows: Vec<Result<(Value, bool)>> = entries
        .par_iter()
        .map(|e| {
            let g = &e.group;
            let t = character_table(g)?;
            let k = t.len();
            let exact = g.order_u64() <= EXACT_ORDER_LIMIT;
            let mut mismatches = Vec::new();
            for i in 0..k {
                for j in 0..k {
                    let hist = pair_histogram(g, i, j)?;
                    for (l, &h) in hist.iter().enumerate() {
                        let formula = t.triple_count(i, j, l);
                        let mut agree = formula == h.into();
                        if exact {
                            agree &= t.triple_count_exact(i, j, l) == Some(h.into());
                        }
                        if !agree {
                            mismatches.push([i, j, l]);
                        }
                    }
                }
            }
            let ok = mismatches.is_empty();
            let row = json!({
                "group": e.name, "classes": k, "triples": k * k * k,
                "exactArithmetic": exact, "mismatches": mismatches,
            });
            Ok((row, ok))
        })
        .collect();
    let mut details = Vec::new();
    let (mut triples, mut bad) = (0usize, 0usize);
    for r in rows {
        let (row, ok) = r?;
        triples += row["triples"].as_u64().unwrap_or(0) as usize;
        bad += usize::from(!ok);
        details.push(row);
    }
    Ok(Outcome::new(bad == 0, format!("{} groups, {triples} class triples, {bad} groups with mismatches", details.len()), details))
}

fn solvable(ctx: &Context) -> Result<Outcome> {
    let corpus = ctx.corpus()?;
    let rows: Vec<Result<Value>> = corpus
        .par_iter()
        .map(|e| {
            let v = solvability_gate(&e.group)?;
            let witness = v.witness.as_ref().map(|w| json!({ "primes": w.primes, "classes": w.class_labels, "valid": w.witness_is_valid() }));
            Ok(json!({ "group": e.name, "solvable": v.verdict, "crossCheck": v.cross_check, "witness": witness }))
        })
        .collect();
    let details: Vec<Value> = rows.into_iter().collect::<Result<_>>()?;
    let agree = details.iter().filter(|d| d["crossCheck"] == true).count();
    let witnesses_ok = details.iter().all(|d| d["witness"].is_null() || d["witness"]["valid"] == true);
    let nonsolvable = details.iter().filter(|d| d["solvable"] == false).count();
    let passed = details.len() >= 20 && agree == details.len() && witnesses_ok && nonsolvable > 0;
    Ok(Outcome::new(passed, format!("{agree}/{} agree, {nonsolvable} nonsolvable", details.len()), details))
}

fn sharpness(ctx: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;
    // the middle prime, and the last one where it is forced
    for (name, middle, last) in [("Sz(8)", 5, None), ("SL3(2)", 3, Some(7))] {
        let r = main3_witness(ctx.group(name)?)?;
        let ok = r.as_ref().is_some_and(|r| {
            r.witness_is_valid() && r.primes[0] == 2 && r.primes[1] == middle && last.is_none_or(|l| r.primes[2] == l)
        });
        passed &= ok;
        details.push(json!({
            "group": name, "ok": ok,
            "primes": r.as_ref().map(|r| r.primes), "classes": r.as_ref().and_then(|r| r.class_labels.clone()),
        }));
    }
    let summary = details.iter().map(|d| format!("{} {}", d["group"].as_str().unwrap_or(""), d["primes"])).collect::<Vec<_>>().join(", ");
    Ok(Outcome::new(passed, summary, details))
}

fn psolvable(ctx: &Context) -> Result<Outcome> {
    let corpus = ctx.corpus()?;
    let rows: Vec<Result<Vec<Value>>> = corpus
        .par_iter()
        .map(|e| {
            let mut out = Vec::new();
            for p in e.group.prime_divisors().into_iter().filter(|&p| p != 2) {
                let v = psolvable_gate(&e.group, p)?;
                let w = v.witness.as_ref();
                out.push(json!({
                    "group": e.name, "prime": p, "pSolvable": v.verdict, "crossCheck": v.cross_check,
                    "witnessPrimes": w.map(|w| w.primes), "witnessClasses": w.and_then(|w| w.class_labels.clone()),
                    "witnessValid": w.map(|w| w.witness_is_valid()),
                }));
            }
            Ok(out)
        })
        .collect();
    let mut details = Vec::new();
    for r in rows {
        details.extend(r?);
    }
    let gates = details.len();
    let agree = details.iter().filter(|d| d["crossCheck"] == true && d["witnessValid"] != false).count();

    // 3 does not divide |Sz(8)|, so the loop above never asks
    let sz8 = psolvable_gate(ctx.group("Sz(8)")?, 3)?;
    let sz8_ok = sz8.verdict && sz8.cross_check && sz8.witness.is_none();
    details.push(json!({ "group": "Sz(8)", "prime": 3, "pSolvable": sz8.verdict, "crossCheck": sz8.cross_check, "witnessPrimes": null }));
    let su_ok = details.iter().find(|d| d["group"] == "SU3(3)" && d["prime"] == 7).is_some_and(|d| d["pSolvable"] == false && d["witnessValid"] == true);

    // x in 7A, y in 2A with xy in 3B, and only the principal character
    // survives in the product of values
    let g = ctx.group("SU3(3)")?;
    let t = character_table(g)?;
    let data = g.class_data()?;
    let cls = |l: &str| data.class_by_label(l).ok_or_else(|| Error::NoneFound(format!("class {l} in SU3(3)")));
    let (a, b, c) = (cls("7A")?, cls("2A")?, cls("3B")?);
    let count = t.class_mult_coefficient(a, b, c);
    let nonvanishing: Vec<usize> = (0..t.len())
        .filter(|&chi| !(&(t.value(chi, a) * t.value(chi, b)) * &t.value(chi, c).conj()).is_zero())
        .collect();
    let only_principal = nonvanishing.len() == 1 && is_principal(t.row(nonvanishing[0]));
    let pattern = json!({
        "group": "SU3(3)", "classes": ["7A", "2A", "3B"], "productCount": count.to_string(),
        "nonvanishingCharacters": nonvanishing,
    });
    details.push(pattern);
    let pattern_ok = !count.is_zero() && only_principal;

    let passed = agree == gates && sz8_ok && su_ok && pattern_ok;
    Ok(Outcome::new(
        passed,
        format!(
            "{agree}/{gates} gates agree; Sz(8) 3-solvable without witness: {sz8_ok}; SU3(3) (2,7,q) witness: {su_ok}; 7A*2A meets 3B with only the principal character: {pattern_ok}"
        ),
        details,
    ))
}

fn is_principal(row: &[Cyclotomic]) -> bool {
    row.iter().all(|v| *v == Cyclotomic::one())
}

/// `|P1 P2 P3|` by listing the products, independent of the engine's counting.
fn product_set_size(groups: &[Group; 3], cap: u64) -> Result<usize> {
    let mut current: HashSet<Permutation> = groups[0].elements(cap)?.iter().cloned().collect();
    for h in &groups[1..] {
        let elems = h.elements(cap)?;
        current = current.iter().flat_map(|a| elems.iter().map(move |b| a.mul(b))).collect();
    }
    Ok(current.len())
}

fn sylow_products(ctx: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;
    for name in ["A5", "S5", "SL2(7)"] {
        let g = ctx.group(name)?;
        let results = sylow_product_all(g)?;
        let bad = results.iter().find(|r| !r.all_equal);
        let (claimed, actual, full) = match bad.and_then(|r| r.counterexample.as_ref().map(|c| (r, c))) {
            Some((r, c)) => {
                let full: u64 = c.iter().map(Group::order_u64).product();
                (r.counterexample_size, Some(product_set_size(c, ctx.caps.elements)? as u64), Some(full))
            }
            None => (None, None, None),
        };
        let ok = claimed.is_some() && claimed == actual && actual < full;
        passed &= ok;
        details.push(json!({
            "group": name, "violated": bad.is_some(), "primes": bad.map(|r| r.primes),
            "productSize": actual, "orderProduct": full, "ok": ok,
        }));
    }
    let solvable_entries: Vec<&CorpusEntry> =
        ctx.corpus()?.iter().filter(|e| e.group.prime_divisors().len() >= 3 && is_solvable(&e.group)).collect();
    for e in &solvable_entries {
        let results = sylow_product_all(&e.group)?;
        let ok = results.iter().all(|r| r.all_equal);
        passed &= ok;
        details.push(json!({
            "group": e.name, "violated": !ok, "primeTriples": results.len(),
            "choices": results.iter().map(|r| r.checked).sum::<u64>(), "ok": ok,
        }));
    }
    passed &= !solvable_entries.is_empty();
    let names: Vec<&str> = solvable_entries.iter().map(|e| e.name.as_str()).collect();
    Ok(Outcome::new(
        passed,
        format!("violations in A5, S5, SL2(7); equality in {}", names.join(", ")),
        details,
    ))
}

const A7_ORDERS: [u64; 3] = [2, 5, 7];

fn central_lift(ctx: &Context) -> Result<Outcome> {
    let a7 = ctx.group("A7")?;
    let t = generating_tuple(a7, 3, |i, o| o == A7_ORDERS[i])?.ok_or_else(|| Error::NoneFound("(2,5,7) tuple in A7".into()))?;
    let a7_ok = product(&t).is_identity() && generates(a7, &t)? && orders(&t) == A7_ORDERS;

    let x = ctx.group("3A7")?.clone();
    let z = x.center()?.clone();
    let sc = CoverScenario::new(
        "3.A7",
        x.clone(),
        z.clone(),
        3,
        FrattiniEvidence::Asserted("perfect group: the center lies in the derived subgroup, hence in every maximal subgroup".into()),
    )?;
    let perfect = x.derived_subgroup().order_u64() == x.order_u64();
    let q = sc.quotient();
    let tq = generating_tuple(q, 3, |i, o| o == A7_ORDERS[i])?
        .ok_or_else(|| Error::NoneFound("(2,5,7) tuple in 3.A7 / Z".into()))?;
    let r = sc.lift_product_set(&tq)?;
    let single = r.products.len() == 1;
    let central_nontrivial = single && !r.products[0].is_identity() && z.has(&r.products[0]);

    // no (2,5,7) triple of exact orders with product 1 anywhere in 3.A7
    let tab = character_table(&x)?;
    let data = x.class_data()?;
    let by_order = |o: u64| data.classes.iter().filter(|c| c.element_order == o).map(|c| c.index).collect::<Vec<_>>();
    let mut total = num_bigint::BigUint::zero();
    for &i in &by_order(2) {
        for &j in &by_order(5) {
            for &k in &by_order(7) {
                total += tab.triple_count(i, j, k);
            }
        }
    }
    let passed = a7_ok && perfect && q.order_u64() == 2520 && central_nontrivial && total.is_zero();
    let details = vec![json!({
        "a7Tuple": t, "a7TupleOk": a7_ok, "kernelOrder": z.order_u64(), "liftSizes": r.lift_sizes,
        "products": r.products.len(), "centralNontrivial": central_nontrivial, "exactOrderTriples": total.to_string(),
    })];
    Ok(Outcome::new(
        passed,
        format!(
            "A7 tuple ok: {a7_ok}; lift sizes {:?}; {} product(s), nontrivial central: {central_nontrivial}; exact-order (2,5,7) triples in 3.A7: {total}",
            r.lift_sizes,
            r.products.len()
        ),
        details,
    ))
}

fn kernel_fill(ctx: &Context) -> Result<Outcome> {
    let sc = sl2_zm(25)?;
    let q = sc.quotient();
    let t = generating_tuple(q, 4, |_, o| o % 5 != 0)?.ok_or_else(|| Error::NoneFound("generating 5'-tuple in SL2(5)".into()))?;
    let r = sc.lift_product_set(&t)?;
    let mut kernel: Vec<Permutation> = sc.f.elements(ctx.caps.elements)?.to_vec();
    kernel.sort();
    let equal = r.products == kernel;
    let tuple_ok = product(&t).is_identity() && generates(q, &t)?;
    let passed = equal && tuple_ok && r.whole_kernel && q.order_u64() == 120;
    let details = vec![json!({
        "quotientOrder": q.order_u64(), "tupleOrders": orders(&t), "liftSizes": r.lift_sizes,
        "products": r.products.len(), "kernelOrder": kernel.len(), "commutatorOrder": r.j_order, "setEqual": equal,
    })];
    Ok(Outcome::new(
        passed,
        format!("orders {:?}, {} products, kernel {} elements, equal: {equal}", orders(&t), r.products.len(), kernel.len()),
        details,
    ))
}

fn ramified(ctx: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;
    for name in ["3^(1+2)", "5^(1+2)", "2^(1+4)-", "2^(1+4)+"] {
        let g = ctx.group(name)?;
        let first = fully_ramified_check(g, g)?;
        let all = fully_ramified_all(g, g)?;
        let quotient = g.order_u64() / g.center()?.order_u64();
        let ok = first.ok && first.e * first.e == quotient && first.index == quotient && all.iter().all(|r| r.ok);
        passed &= ok;
        details.push(json!({ "group": name, "e": first.e, "index": quotient, "centralCharacters": all.len(), "ok": ok }));
    }
    let summary = details.iter().map(|d| format!("{} e={}", d["group"].as_str().unwrap_or(""), d["e"])).collect::<Vec<_>>().join(", ");
    Ok(Outcome::new(passed, summary, details))
}

/// `h` meets `n` trivially and has the complementary order.
fn is_complement(g: &Group, n: &Group, h: &Group, cap: u64) -> Result<bool> {
    let meets_trivially = h.elements(cap)?.iter().all(|x| x.is_identity() || !n.has(x));
    Ok(meets_trivially && h.order_u64() * n.order_u64() == g.order_u64() && h.is_subgroup_of(g))
}

fn complements(ctx: &Context) -> Result<Outcome> {
    let cap = ctx.caps.elements;
    let mut details = Vec::new();
    let mut passed = true;
    for p in [3u32, 5] {
        let (g, e) = extraspecial_by_quaternion(p)?;
        let h = complement_exists(&g, &e)?;
        let ok_g = match &h {
            Some(h) => is_complement(&g, &e, h, cap)?,
            None => false,
        };
        let lattice = if g.order_u64() <= ctx.caps.lattice_order { Some(complement_by_lattice(&g, &e)?) } else { None };

        let z = e.center()?.clone();
        let act = coset_action(&g, &z)?;
        let gq = act.image.clone();
        let eq = gq.subgroup(e.generators().iter().map(|x| act.image_of(x)).collect())?;
        let hq = complement_exists(&gq, &eq)?;
        let ok_q = match &hq {
            Some(h) => is_complement(&gq, &eq, h, cap)?,
            None => false,
        };
        let lattice_q = if gq.order_u64() <= ctx.caps.lattice_order { Some(complement_by_lattice(&gq, &eq)?) } else { None };
        let ok = ok_g && ok_q && lattice != Some(false) && lattice_q != Some(false);
        passed &= ok;
        details.push(json!({
            "group": format!("{p}^(1+2):Q8"), "complement": ok_g, "complementModCenter": ok_q,
            "lattice": lattice, "latticeModCenter": lattice_q, "ok": ok,
        }));
    }
    let sc = sl2_zm(25)?;
    let none = complement_exists(&sc.x, &sc.f)?.is_none();
    passed &= none;
    details.push(json!({ "group": "SL2(Z/25)", "complement": !none, "ok": none }));
    Ok(Outcome::new(
        passed,
        format!("complements in 3^(1+2):Q8, 5^(1+2):Q8 and modulo their centers; none over the SL2(Z/25) kernel: {none}"),
        details,
    ))
}

/// Degree minus number of cycles, fixed points counted.
fn index_of(x: &Permutation) -> usize {
    let n = x.degree();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = x.image(i);
        }
    }
    n - cycles
}

fn is_full_cycle(x: &Permutation) -> bool {
    let n = x.degree();
    let mut i = 0;
    for step in 1..=n {
        i = x.image(i);
        if i == 0 {
            return step == n;
        }
    }
    false
}

fn alt_triples(_: &Context) -> Result<Outcome> {
    let primes = [3usize, 5, 7, 11, 13];
    let mut details = Vec::new();
    let mut passed = true;
    for (a, &q) in primes.iter().enumerate() {
        for &p in &primes[a + 1..] {
            let c = alt_triple_construct(p, q)?;
            let [x, y, z] = c.report.witness.clone().ok_or_else(|| Error::NoneFound("witness".into()))?;
            let xy = x.mul(&y);
            let sum = index_of(&x) + index_of(&y) + index_of(&xy);
            let ok = x.is_even()
                && !x.is_identity()
                && x.order() == 2
                && y.order() == q as u64
                && is_full_cycle(&xy)
                && x.mul(&y).mul(&z).is_identity()
                && sum >= 2 * p - 2;
            passed &= ok;
            details.push(json!({ "p": p, "q": q, "indexSum": sum, "bound": 2 * p - 2, "ok": ok }));
        }
    }
    Ok(Outcome::new(passed, format!("{} prime pairs", details.len()), details))
}

fn regular(ctx: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;
    for (name, p) in [("SL2(5)", 5u64), ("SL2(7)", 7)] {
        let g = ctx.group(name)?;
        let data = g.class_data()?;
        let rs: Vec<usize> = data.classes.iter().filter(|c| c.size_u64 > 1 && c.element_order % p != 0).map(|c| c.index).collect();
        let mut pairs = 0;
        let mut failures = Vec::new();
        for &i in &rs {
            for &j in &rs {
                pairs += 1;
                if !gow_coverage_check(g, p, i, j)? {
                    failures.push(labels(g, &[i, j])?);
                }
            }
        }
        passed &= failures.is_empty() && pairs > 0;
        details.push(json!({ "group": name, "regularClasses": labels(g, &rs)?, "pairs": pairs, "failures": failures }));
    }
    let summary = details.iter().map(|d| format!("{} {} pairs", d["group"].as_str().unwrap_or(""), d["pairs"])).collect::<Vec<_>>().join(", ");
    Ok(Outcome::new(passed, summary, details))
}

fn value(_: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;
    for (n, n_i) in [(2usize, 1usize), (2, 2), (3, 1), (3, 3), (3, 2)] {
        let r = value_formula_check(n, n_i)?;
        let want = -(1i64 << (n - n_i));
        let ok = r.ok && r.expected == want && r.value.as_deref() == Some(want.to_string().as_str());
        passed &= ok;
        details.push(json!({ "n": n, "nI": n_i, "value": r.value, "expected": want, "groupOrder": r.group_order, "ok": ok }));
    }
    let summary = details.iter().map(|d| format!("({},{})={}", d["n"], d["nI"], d["value"].as_str().unwrap_or("?"))).collect::<Vec<_>>().join(" ");
    Ok(Outcome::new(passed, summary, details))
}

fn tables(ctx: &Context) -> Result<Outcome> {
    let corpus = ctx.corpus()?;
    let rows: Vec<Result<Value>> = corpus
        .par_iter()
        .map(|e| {
            let t = character_table(&e.group)?;
            Ok(json!({ "group": e.name, "characters": t.len(), "orthogonal": verify_orthogonality(&t) }))
        })
        .collect();
    let mut details: Vec<Value> = rows.into_iter().collect::<Result<_>>()?;
    let orthogonal = details.iter().filter(|d| d["orthogonal"] == true).count();

    let g = ctx.group("SL3(3)")?;
    let t = character_table(g)?;
    let data = g.class_data()?;
    let by_order = |o: u64| data.classes.iter().filter(|c| c.element_order == o).map(|c| c.index).collect::<Vec<_>>();
    let mut found = None;
    'scan: for &i in &by_order(2) {
        for &j in &by_order(3) {
            for &k in &by_order(13) {
                let survivors: Vec<usize> =
                    (0..t.len()).filter(|&chi| !(&(t.value(chi, i) * t.value(chi, j)) * t.value(chi, k)).is_zero()).collect();
                if survivors.len() == 1 && is_principal(t.row(survivors[0])) {
                    found = Some([i, j, k]);
                    break 'scan;
                }
            }
        }
    }
    let pattern = match found {
        Some(c) => {
            let count = t.triple_count(c[0], c[1], c[2]);
            Some((labels(g, &c)?, count))
        }
        None => None,
    };
    let pattern_ok = pattern.as_ref().is_some_and(|(_, n)| !n.is_zero());
    details.push(json!({
        "group": "SL3(3)", "classes": pattern.as_ref().map(|p| &p.0), "count": pattern.as_ref().map(|p| p.1.to_string()),
    }));
    let passed = orthogonal == corpus.len() && pattern_ok;
    Ok(Outcome::new(
        passed,
        format!(
            "{orthogonal}/{} tables orthogonal; SL3(3) principal-only triple: {}",
            corpus.len(),
            pattern.as_ref().map_or("none".to_string(), |p| p.0.join(" "))
        ),
        details,
    ))
}

fn is_nilpotent(g: &Group) -> Result<bool> {
    for p in g.prime_divisors() {
        if !sylow(g, p)?.is_normal_in(g) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn minimal(ctx: &Context) -> Result<Outcome> {
    let corpus = ctx.corpus()?;
    let rows: Vec<Result<(Value, bool)>> = corpus
        .par_iter()
        .map(|e| {
            let g = &e.group;
            let phi = frattini(g)?;
            let nilpotent = phi.is_normal_in(g) && is_nilpotent(&phi)?;
            let perfect = g.derived_subgroup().order_u64() == g.order_u64();
            let radical_equal = if perfect { Some(solvable_radical(g)?.same_as(&phi)) } else { None };
            let ok = nilpotent && radical_equal != Some(false);
            Ok((json!({ "group": e.name, "frattiniOrder": phi.order_u64(), "nilpotent": nilpotent, "perfect": perfect, "radicalIsFrattini": radical_equal }), ok))
        })
        .collect();
    let mut details = Vec::new();
    let mut passed = true;
    for r in rows {
        let (row, ok) = r?;
        passed &= ok;
        details.push(row);
    }
    let perfect = details.iter().filter(|d| d["perfect"] == true).count();
    Ok(Outcome::new(passed, format!("{} groups, {perfect} perfect with radical equal to the Frattini subgroup", details.len()), details))
}

fn abelian(ctx: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    let mut passed = true;

    let g = ctx.group("C7:C6")?;
    let n = minimal_noncentral_normal(g, g)?;
    let table = g.table()?;
    let p_prime: Vec<&Permutation> = table.elements.iter().filter(|x| x.order() % 7 != 0 && !x.is_identity()).collect();
    let mut reps = None;
    'pairs: for a in &p_prime {
        for b in &p_prime {
            if generates(g, &[(*a).clone(), (*b).clone()])? {
                reps = Some(vec![(*a).clone(), (*b).clone()]);
                break 'pairs;
            }
        }
    }
    let reps = reps.ok_or_else(|| Error::NoneFound("generating 7'-pair in C7:C6".into()))?;
    let r = abelian_coset_identity_check(g, &n, &reps)?;
    passed &= r.holds && r.conjugates_ok;
    details.push(json!({ "group": "C7:C6", "report": r }));

    let sc = sl2_zm(25)?;
    let t = generating_tuple(sc.quotient(), 4, |_, o| o % 5 != 0)?.ok_or_else(|| Error::NoneFound("generating 5'-tuple".into()))?;
    let lifts: Vec<Permutation> = t
        .iter()
        .map(|x| sc.lift_set(x).map(|l| l.members[0].clone()))
        .collect::<Result<_>>()?;
    let r = abelian_coset_identity_check(&sc.x, &sc.f, &lifts)?;
    passed &= r.holds && r.conjugates_ok;
    details.push(json!({ "group": "SL2(Z/25)", "report": r }));
    Ok(Outcome::new(passed, "C7:C6 over C7 and SL2(Z/25) over its kernel", details))
}

fn prime_order(ctx: &Context) -> Result<Outcome> {
    let g = ctx.group("SL2(5)")?;
    let only = pqr_triple_exists_with(g, [2, 3, 5], OrderMode::PrimeOnly)?;
    let power = pqr_triple_exists_with(g, [2, 3, 5], OrderMode::PrimePower)?;
    let gate = solvability_gate(g)?;
    let passed = only.is_none() && power.as_ref().is_some_and(|r| r.witness_is_valid()) && !gate.verdict && gate.cross_check;
    let details = vec![json!({
        "group": "SL2(5)", "primeOrderTriple": only.is_some(),
        "primePowerClasses": power.as_ref().and_then(|r| r.class_labels.clone()),
    })];
    Ok(Outcome::new(
        passed,
        format!(
            "prime orders only: {}; prime powers: {}",
            if only.is_some() { "found" } else { "none" },
            power.as_ref().and_then(|r| r.class_labels.as_ref()).map_or("none".into(), |l| l.join(" "))
        ),
        details,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_by_name_alias_and_number() {
        assert_eq!(select(None).unwrap().len(), checks().len());
        let split = select(Some("split")).unwrap();
        assert_eq!(split.iter().map(|c| c.criterion).collect::<Vec<_>>(), vec![Some(8), Some(9)]);
        assert_eq!(select(Some("main2")).unwrap()[0].section, "solvable");
        assert_eq!(select(Some("7")).unwrap()[0].section, "kernel-fill");
        assert!(select(Some("nope")).is_err());
    }

    #[test]
    fn every_criterion_is_registered_once() {
        let mut nums: Vec<u8> = checks().iter().filter_map(|c| c.criterion).collect();
        nums.sort_unstable();
        assert_eq!(nums, (1..=13).collect::<Vec<_>>());
    }

    #[test]
    fn cycle_helpers() {
        let x = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(index_of(&x), 2);
        assert!(!is_full_cycle(&x));
        assert!(is_full_cycle(&Permutation::from_cycles(5, &[vec![0, 3, 1, 4, 2]]).unwrap()));
    }
}
