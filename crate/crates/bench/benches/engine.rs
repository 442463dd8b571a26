use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use solvtrip::chartab::character_table;
use solvtrip::lifting::{generating_tuple, sl2_zm};
use solvtrip::triples::{pair_histogram, solvability_gate};
use solvtrip_bench::fresh;

fn permcore(c: &mut Criterion) {
    c.bench_function("schreier-sims Sz(8)", |b| b.iter_batched(|| fresh("Sz(8)"), |g| g.order_u64(), BatchSize::SmallInput));
    c.bench_function("classes SU3(3)", |b| {
        b.iter_batched(|| fresh("SU3(3)"), |g| g.class_data().map(|d| d.len()).unwrap(), BatchSize::SmallInput)
    });
}

fn chartab(c: &mut Criterion) {
    let mut group = c.benchmark_group("character table");
    group.sample_size(10);
    for name in ["A7", "SL3(3)", "3A7"] {
        group.bench_function(name, |b| {
            b.iter_batched(|| fresh(name), |g| character_table(&g).unwrap().len(), BatchSize::SmallInput)
        });
    }
    group.finish();
}

fn triples(c: &mut Criterion) {
    let a7 = fresh("A7");
    let t = character_table(&a7).unwrap();
    let k = t.len();
    c.bench_function("formula all pairs A7", |b| {
        b.iter(|| (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| t.triple_count(i, j, 0)).collect::<Vec<_>>())
    });
    c.bench_function("enumeration all pairs A7", |b| {
        b.iter(|| (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| pair_histogram(&a7, i, j).unwrap()[0]).sum::<u64>())
    });
    let mut group = c.benchmark_group("gate");
    group.sample_size(10);
    group.bench_function("solvability SL2(7)", |b| {
        b.iter_batched(|| fresh("SL2(7)"), |g| solvability_gate(&g).unwrap().verdict, BatchSize::SmallInput)
    });
    group.finish();
}

fn lifting(c: &mut Criterion) {
    let sc = sl2_zm(25).unwrap();
    let tuple = generating_tuple(sc.quotient(), 4, |_, o| o % 5 != 0).unwrap().unwrap();
    let mut group = c.benchmark_group("lifting");
    group.sample_size(10);
    group.bench_function("lift products SL2(Z/25)", |b| b.iter(|| sc.lift_product_set(&tuple).unwrap().products.len()));
    group.finish();
}

criterion_group!(benches, permcore, chartab, triples, lifting);
criterion_main!(benches);
