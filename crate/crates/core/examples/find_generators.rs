//! Searches for matrix generators of corpus groups that have no short
//! textbook generating set, and prints them in the group-file grammar.
//!
//! The output was pasted into `corpus/*.grp`; every entry is validated by
//! order, center and class count when the corpus loads, so the search itself
//! is not trusted.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use solvtrip::permcore::field::{FiniteField, Ring};
use solvtrip::permcore::matrix::{determinant, mat_mul, matrix_order};
use solvtrip::permcore::{realize_over_field, Action, Caps, Group, Matrix};

fn conj(f: &FiniteField, q: u32, a: &Matrix) -> Matrix {
    a.iter().map(|r| r.iter().map(|&x| f.pow(x, q as u64)).collect()).collect()
}

fn transpose(a: &Matrix) -> Matrix {
    (0..a.len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Unitary for the antidiagonal form over `GF(q^2)` with determinant one.
fn is_special_unitary(f: &FiniteField, q: u32, a: &Matrix) -> bool {
    let n = a.len();
    let j: Matrix = (0..n).map(|i| (0..n).map(|k| u32::from(i + k == n - 1)).collect()).collect();
    let lhs = mat_mul(f, &mat_mul(f, a, &j), &transpose(&conj(f, q, a)));
    lhs == j && determinant(f, a) == 1
}

fn all_vectors(f: &FiniteField, len: usize) -> Vec<Vec<u32>> {
    let q = f.size() as u32;
    (0..q.pow(len as u32))
        .map(|mut i| {
            (0..len)
                .map(|_| {
                    let d = i % q;
                    i /= q;
                    d
                })
                .collect()
        })
        .collect()
}

/// Triangular, diagonal and antidiagonal 3x3 candidates.
fn structured(f: &FiniteField) -> Vec<Matrix> {
    let mut out = Vec::new();
    for v in all_vectors(f, 3) {
        let (a, b, c) = (v[0], v[1], v[2]);
        out.push(vec![vec![1, a, b], vec![0, 1, c], vec![0, 0, 1]]);
        out.push(vec![vec![1, 0, 0], vec![a, 1, 0], vec![b, c, 1]]);
        out.push(vec![vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]]);
        out.push(vec![vec![0, 0, a], vec![0, b, 0], vec![c, 0, 0]]);
    }
    out.retain(|m| f.is_unit(determinant(f, m)));
    out
}

fn order_of(f: &FiniteField, gens: &[Matrix]) -> u64 {
    realize_over_field(f, gens, gens[0].len(), Action::Vectors, &Caps::default()).expect("realizable").order_u64()
}

/// Greedy generating set from the candidates reaching the target order.
fn greedy(f: &FiniteField, candidates: &[Matrix], target: u64) -> Vec<Matrix> {
    let mut gens: Vec<Matrix> = Vec::new();
    let mut order = 1;
    for c in candidates {
        if c.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == u32::from(i == j))) {
            continue;
        }
        let mut trial = gens.clone();
        trial.push(c.clone());
        let o = order_of(f, &trial);
        if o > order {
            gens = trial;
            order = o;
            if order == target {
                return gens;
            }
        }
    }
    panic!("candidates only reach order {order}, wanted {target}");
}

struct Walk {
    state: Vec<Matrix>,
    rng: StdRng,
}

impl Walk {
    fn new(f: &FiniteField, gens: &[Matrix], seed: u64) -> Walk {
        let mut state = gens.to_vec();
        while state.len() < 10 {
            state.extend(gens.iter().cloned());
        }
        let mut w = Walk { state, rng: StdRng::seed_from_u64(seed) };
        for _ in 0..100 {
            w.next_with(f);
        }
        w
    }

    fn next_with(&mut self, f: &FiniteField) -> Matrix {
        let n = self.state.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        self.state[i] = mat_mul(f, &self.state[i], &self.state[j]);
        self.state[i].clone()
    }
}

fn entry(f: &FiniteField, v: u32) -> String {
    if v < f.characteristic() {
        v.to_string()
    } else {
        format!("z^{}", f.log(v).unwrap())
    }
}

fn print(f: &FiniteField, title: &str, gens: &[Matrix]) {
    println!("# {title}");
    for m in gens {
        let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.iter().map(|&v| entry(f, v)).collect::<Vec<_>>().join(","))).collect();
        println!("gen [{}]", rows.join(","));
    }
}

/// Random `(a, b)` in `⟨gens⟩` with the given orders generating a subgroup of
/// the target order.
fn two_generated(f: &FiniteField, gens: &[Matrix], orders: (u64, u64), target: u64, seed: u64) -> Vec<Matrix> {
    let mut walk = Walk::new(f, gens, seed);
    let mut pick = |o: u64| loop {
        let m = walk.next_with(f);
        let k = matrix_order(f, &m);
        if k.is_multiple_of(o) {
            let mut p = m.clone();
            for _ in 1..k / o {
                p = mat_mul(f, &p, &m);
            }
            return p;
        }
    };
    for _ in 0..10_000 {
        let a = pick(orders.0);
        let b = pick(orders.1);
        let pair = vec![a, b];
        if order_of(f, &pair) == target {
            return pair;
        }
    }
    panic!("no pair found");
}

fn faithful_degree(f: &FiniteField, gens: &[Matrix], action: Action) -> usize {
    realize_over_field(f, gens, gens[0].len(), action, &Caps::default()).map(|g: Group| g.degree()).unwrap_or(0)
}

/// Generators of `Sz(8)` in its 4-dimensional representation: a lower
/// unitriangular element of the Borel subgroup, a torus element and the
/// antidiagonal involution. `θ` is `x -> x^4`, so that `θ^2` squares.
fn suzuki8(f: &FiniteField) -> Vec<Matrix> {
    let t = |x: u32| f.pow(x, 4);
    let borel = |a: u32, b: u32| -> Matrix {
        let a2t = f.mul(f.mul(a, a), t(a));
        let corner = f.add(f.add(a2t, f.mul(a, b)), t(b));
        vec![
            vec![1, 0, 0, 0],
            vec![a, 1, 0, 0],
            vec![b, t(a), 1, 0],
            vec![corner, f.add(f.mul(a, t(a)), b), a, 1],
        ]
    };
    let k = f.z_pow(1);
    let torus = vec![
        vec![f.pow(k, 3), 0, 0, 0],
        vec![0, f.pow(k, 2), 0, 0],
        vec![0, 0, f.z_pow(-2), 0],
        vec![0, 0, 0, f.z_pow(-3)],
    ];
    let w = vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]];
    vec![borel(1, 0), torus, w]
}

fn main() {
    let f8 = FiniteField::new(8).unwrap();
    let sz = suzuki8(&f8);
    let g = realize_over_field(&f8, &sz, 4, Action::Projective, &Caps::default()).unwrap();
    print(&f8, &format!("Sz(8), order {}, projective degree {}", g.order(), g.degree()), &sz);

    // SU3(3) over GF(9)
    let f9 = FiniteField::new(9).unwrap();
    let su: Vec<Matrix> = structured(&f9).into_iter().filter(|m| is_special_unitary(&f9, 3, m)).collect();
    let su33 = greedy(&f9, &su, 27 * 28 * 8);
    print(&f9, &format!("SU3(3), projective degree {}", faithful_degree(&f9, &su33, Action::Projective)), &su33);

    // 3.A6 inside SL3(4): A6 has generators of orders 2 and 4
    let f4 = FiniteField::new(4).unwrap();
    let sl: Vec<Matrix> = structured(&f4).into_iter().filter(|m| determinant(&f4, m) == 1).collect();
    let sl34 = greedy(&f4, &sl, 64 * 63 * 15);
    let a6 = two_generated(&f4, &sl34, (2, 4), 1080, 1);
    print(&f4, &format!("3.A6, orbit degree {}", faithful_degree(&f4, &a6, Action::Orbit)), &a6);

    // 3.A7 inside SU3(5): generators of orders 2 and 7
    let f25 = FiniteField::new(25).unwrap();
    let su5: Vec<Matrix> = structured(&f25).into_iter().filter(|m| is_special_unitary(&f25, 5, m)).collect();
    let su35 = greedy(&f25, &su5, 125 * 126 * 24);
    let a7 = two_generated(&f25, &su35, (2, 7), 7560, 2);
    print(&f25, &format!("3.A7, orbit degree {}", faithful_degree(&f25, &a7, Action::Orbit)), &a7);
}
