//! One function per subcommand. Each writes records through a `Reporter`
//! and raises its exit status; none of them exits the process.

use std::path::Path;

use serde_json::json;
use solvtrip::chartab::character_table;
use solvtrip::ingest::{corpus_entry_with, corpus_manifest, corpus_with, parse_group_file};
use solvtrip::lifting::{generating_tuple, CoverScenario, FrattiniEvidence};
use solvtrip::permcore::{Caps, Group, Permutation};
use solvtrip::structure::{derived_series, is_p_solvable};
use solvtrip::triples::{conjecture_2pq, pqr_triple_exists, TripleReport};
use solvtrip::{Error, Result};

use crate::report::{Exit, Format, Reporter};
use crate::suite::{run_check, select, Context};

/// A corpus name or alias, or a path to a group file.
pub fn resolve(group_ref: &str, caps: &Caps) -> Result<(String, Group)> {
    let path = Path::new(group_ref);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{group_ref}: {e}")))?;
        let spec = parse_group_file(&text)?;
        let g = spec.build(caps)?;
        let name = spec.name.clone().unwrap_or_else(|| group_ref.to_string());
        spec.validate(&g, &name)?;
        return Ok((name, g));
    }
    let e = corpus_entry_with(group_ref, caps)?;
    Ok((e.name, e.group))
}

fn resolved(rep: &mut Reporter, group_ref: &str, caps: &Caps) -> Option<(String, Group)> {
    match rep.phase("load", |_| resolve(group_ref, caps)) {
        Ok((name, g)) => {
            rep.input(&name);
            Some((name, g))
        }
        Err(e) => {
            rep.error(group_ref, &e);
            None
        }
    }
}

pub fn analyze(rep: &mut Reporter, group_ref: &str, caps: &Caps) {
    let Some((name, g)) = resolved(rep, group_ref, caps) else { return };
    if let Err(e) = rep.phase("analyze", |rep| analyze_group(rep, &name, &g)) {
        rep.error(&name, &e);
    }
}

fn analyze_group(rep: &mut Reporter, name: &str, g: &Group) -> Result<()> {
    let order = g.order();
    let center = g.center()?.order_u64();
    let series = derived_series(g);
    let data = g.class_data()?;
    let census: Vec<_> = data
        .classes
        .iter()
        .map(|c| json!({ "label": data.label(c.index), "size": c.size_u64, "elementOrder": c.element_order }))
        .collect();
    let mut psolv = Vec::new();
    for p in g.prime_divisors() {
        psolv.push((p, is_p_solvable(g, p)?));
    }
    let mut text = format!(
        "{name}: order {order}, degree {}, center {center}, {} classes, {}\nderived series {:?}\n",
        g.degree(),
        data.len(),
        if series.verdict { "solvable" } else { "nonsolvable" },
        series.orders()
    );
    for (p, ok) in &psolv {
        text.push_str(&format!("{p}-solvable: {ok}\n"));
    }
    text.push_str("classes:");
    for c in &data.classes {
        text.push_str(&format!(" {}({})", data.label(c.index), c.size_u64));
    }
    rep.record(
        "analysis",
        json!({
            "group": name, "order": order.to_string(), "degree": g.degree(), "centerOrder": center,
            "classCount": data.len(), "solvable": series.verdict, "derivedSeries": series.orders(),
            "pSolvable": psolv.iter().map(|(p, ok)| json!({ "prime": p, "pSolvable": ok })).collect::<Vec<_>>(),
            "classes": census,
        }),
        text,
    );
    Ok(())
}

fn triple_text(name: &str, r: &TripleReport) -> String {
    let labels = r.class_labels.as_ref().map_or(String::new(), |l| format!(" classes {}", l.join(" ")));
    let count = r.count.as_ref().map_or(String::new(), |c| format!(" count {c}"));
    let witness = r.witness.as_ref().map_or(String::new(), |w| format!("\n  x = {}\n  y = {}\n  z = {}", w[0], w[1], w[2]));
    format!("{name}: ({},{},{})-triple{labels}{count} via {:?}{witness}", r.primes[0], r.primes[1], r.primes[2], r.method)
}

pub struct TripleArgs {
    pub primes: Vec<u64>,
    pub all: bool,
    pub lifted: bool,
}

pub fn triples(rep: &mut Reporter, group_ref: &str, args: &TripleArgs, caps: &Caps) {
    if args.all == (args.primes.len() == 3) || !(args.primes.is_empty() || args.primes.len() == 3) {
        rep.usage("triples: give three primes or --all");
        return;
    }
    if args.lifted && args.all {
        rep.usage("triples: --lifted needs explicit element orders");
        return;
    }
    let Some((name, g)) = resolved(rep, group_ref, caps) else { return };
    let r = rep.phase("triples", |rep| {
        if args.lifted {
            lifted(rep, &name, &g, &args.primes)
        } else if args.all {
            all_triples(rep, &name, &g)
        } else {
            one_triple(rep, &name, &g, [args.primes[0], args.primes[1], args.primes[2]])
        }
    });
    if let Err(e) = r {
        rep.error(&name, &e);
    }
}

fn one_triple(rep: &mut Reporter, name: &str, g: &Group, primes: [u64; 3]) -> Result<()> {
    match pqr_triple_exists(g, primes[0], primes[1], primes[2])? {
        Some(r) => {
            let text = triple_text(name, &r);
            rep.record("triple", json!({ "group": name, "found": true, "report": r }), text);
        }
        None => rep.record(
            "triple",
            json!({ "group": name, "found": false, "primes": primes }),
            format!("{name}: no ({},{},{})-triple", primes[0], primes[1], primes[2]),
        ),
    }
    Ok(())
}

fn all_triples(rep: &mut Reporter, name: &str, g: &Group) -> Result<()> {
    let primes = g.prime_divisors();
    let mut scanned = 0;
    for a in 0..primes.len() {
        for b in a + 1..primes.len() {
            for c in b + 1..primes.len() {
                scanned += 1;
                one_triple(rep, name, g, [primes[a], primes[b], primes[c]])?;
            }
        }
    }
    if scanned == 0 {
        rep.record(
            "triple",
            json!({ "group": name, "found": false, "primeDivisors": primes }),
            format!("{name}: no distinct-prime triples; prime divisors {primes:?}"),
        );
    }
    Ok(())
}

/// Cap on the number of lift tuples multiplied out when counting those with
/// product 1.
const LIFT_TUPLE_CAP: u64 = 10_000_000;

/// Over the center `Z`: a generating tuple of `G/Z` with the given element
/// orders and product 1, its same-order lifts, and how many lift tuples
/// multiply to 1.
fn lifted(rep: &mut Reporter, name: &str, x: &Group, wanted: &[u64]) -> Result<()> {
    let z = x.center()?.clone();
    let zo = z.order_u64();
    let kernel_prime = solvtrip::arith::prime_factors(zo).first().map_or(2, |f| f.0);
    let sc = CoverScenario::new(name, x.clone(), z.clone(), kernel_prime, FrattiniEvidence::Asserted("not checked".into()))?;
    let tuple = generating_tuple(sc.quotient(), wanted.len(), |i, o| o == wanted[i])?;
    let Some(tuple) = tuple else {
        rep.record(
            "lifted",
            json!({ "group": name, "kernelOrder": zo, "orders": wanted, "tupleFound": false }),
            format!("{name}: no generating tuple of orders {wanted:?} with product 1 in G/Z"),
        );
        return Ok(());
    };
    let r = sc.lift_product_set(&tuple)?;
    let lifts: Vec<Vec<Permutation>> = tuple.iter().map(|t| sc.lift_set(t).map(|l| l.members)).collect::<Result<_>>()?;
    let work: u64 = lifts.iter().map(|l| l.len() as u64).product();
    if work > LIFT_TUPLE_CAP {
        return Err(Error::OverCap { what: "lift tuples", size: work.to_string(), cap: LIFT_TUPLE_CAP });
    }
    let count = count_identity_products(&lifts, x.degree());
    let central = r.products.iter().all(|p| z.has(p));
    let obstruction = count == 0;
    let text = format!(
        "{name}: G/Z order {}, tuple orders {wanted:?}, lift sizes {:?}, {} product(s), all central: {central}, lift tuples with product 1: {count}{}",
        sc.quotient().order_u64(),
        r.lift_sizes,
        r.products.len(),
        if obstruction { " (obstruction: the tuple does not lift)" } else { "" }
    );
    rep.record(
        "lifted",
        json!({
            "group": name, "kernelOrder": zo, "orders": wanted, "tupleFound": true,
            "liftSizes": r.lift_sizes, "products": r.products, "productsCentral": central,
            "singleCoset": r.single_coset, "identityCount": count, "obstruction": obstruction,
        }),
        text,
    );
    Ok(())
}

fn count_identity_products(lifts: &[Vec<Permutation>], degree: usize) -> u64 {
    fn go(lifts: &[Vec<Permutation>], acc: &Permutation) -> u64 {
        match lifts.split_first() {
            None => u64::from(acc.is_identity()),
            Some((first, rest)) => first.iter().map(|x| go(rest, &acc.mul(x))).sum(),
        }
    }
    go(lifts, &Permutation::identity(degree))
}

pub fn table(rep: &mut Reporter, group_ref: &str, caps: &Caps) {
    let Some((name, g)) = resolved(rep, group_ref, caps) else { return };
    match rep.phase("table", |_| character_table(&g)) {
        Ok(t) => {
            let text = format!("{name}\n{}", t.export_text().trim_end());
            rep.record("table", json!({ "group": name, "table": t.export_machine() }), text);
        }
        Err(e) => rep.error(&name, &e),
    }
}

pub fn corpus(rep: &mut Reporter, caps: &Caps) {
    let manifest = match corpus_manifest() {
        Ok(m) => m,
        Err(e) => return rep.error("manifest", &e),
    };
    let loaded = match rep.phase("load", |_| corpus_with(caps)) {
        Ok(c) => c,
        Err(e) => return rep.error("corpus", &e),
    };
    for m in &manifest {
        let ok = loaded.iter().any(|e| e.name == m.name);
        rep.input(&m.name);
        let text = format!(
            "{:<14} order {:<7} center {:<4} classes {:<4} {}{}",
            m.name,
            m.order,
            m.center.map_or("-".into(), |c| c.to_string()),
            m.classes.map_or("-".into(), |c| c.to_string()),
            m.source,
            if ok { "" } else { "  [not loaded]" }
        );
        rep.record("corpus", json!({ "entry": m, "validated": ok }), text);
        if !ok && !m.optional {
            rep.raise(Exit::Failed);
        }
    }
}

pub fn conjecture(rep: &mut Reporter, group_ref: Option<&str>, caps: &Caps) {
    let groups: Vec<(String, Group)> = match group_ref {
        Some(r) => match resolved(rep, r, caps) {
            Some(x) => vec![x],
            None => return,
        },
        None => match rep.phase("load", |_| corpus_with(caps)) {
            Ok(c) => c.into_iter().map(|e| (e.name, e.group)).collect(),
            Err(e) => return rep.error("corpus", &e),
        },
    };
    for (name, g) in &groups {
        match rep.phase(name, |_| conjecture_2pq(g)) {
            Ok(rows) => {
                for row in rows {
                    let text = format!(
                        "{name}: (2,{},{}) factor divisible {} triple {} {}",
                        row.p,
                        row.q,
                        row.factor_divisible,
                        row.triple_exists,
                        if row.agrees { "agree" } else { "DISAGREE" }
                    );
                    rep.record("conjecture", json!({ "group": name, "row": row }), text);
                }
            }
            Err(e) => rep.error(name, &e),
        }
    }
}

pub fn verify(rep: &mut Reporter, section: Option<&str>, caps: &Caps) {
    let checks = match select(section) {
        Ok(c) => c,
        Err(msg) => return rep.usage(&msg),
    };
    let ctx = Context::new(*caps);
    for check in &checks {
        let name = check.criterion.map_or_else(|| check.section.to_string(), |c| format!("criterion {c}"));
        let result = rep.phase(&name, |_| run_check(&ctx, check));
        rep.raise(match result.status {
            crate::suite::Status::Pass => Exit::Ok,
            crate::suite::Status::OverCap => Exit::OverCap,
            _ => Exit::Failed,
        });
        let line = result.line();
        if rep.format() == Format::Machine {
            rep.record("check", &result, "");
        } else {
            rep.record("check", json!({}), line);
        }
    }
}
