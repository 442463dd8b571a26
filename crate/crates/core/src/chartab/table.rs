use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::cyclotomic::{zumbroich_reduce, Cyclotomic};
use super::modular::{char_poly, echelon, null_space, roots, Fp};
use crate::arith::{isqrt, pow_mod, prime_one_mod, primitive_root};
use crate::error::{Error, Result};
use crate::permcore::{ConjClass, Group};

/// Irreducible complex characters (rows) evaluated on conjugacy classes.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub classes: Vec<ConjClass>,
    pub group_order: u64,
    pub exponent: u64,
    pub inverse_map: Vec<usize>,
    values: Vec<Vec<Cyclotomic>>,
    /// `mults[chi][k][t]`: multiplicity of the eigenvalue ζ_o^t of a
    /// representation affording `chi` on the class-`k` representative.
    mults: Vec<Vec<Vec<u32>>>,
    counting: Counting,
}

/// Character values reduced modulo a prime large enough that class-algebra
/// constants (at most |G|^2) are recovered exactly from their residues.
#[derive(Clone, Debug)]
struct Counting {
    f: Fp,
    values: Vec<Vec<u64>>,
}

pub fn character_table(g: &Group) -> Result<Arc<CharTable>> {
    if let Some(t) = g.char_table_cell().get() {
        return Ok(t.clone());
    }
    let t = Arc::new(build(g)?);
    Ok(g.char_table_cell().get_or_init(|| t).clone())
}

fn build(g: &Group) -> Result<CharTable> {
    let table = g.table()?;
    let data = g.class_data()?;
    let n = g.order_u64();
    let r = data.len();
    let e = g.exponent()?;
    let sizes: Vec<u64> = data.classes.iter().map(|c| c.size_u64).collect();

    let l = prime_one_mod(e, 2 * (isqrt(n - 1) + 1));
    let f = Fp { p: l };
    let root = primitive_root(l);

    // class matrix j: entry [a][b] counts x in C_j with x^-1 z_b in C_a
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for b in 0..r {
            let zb = table.index_of(&data.classes[b].rep).expect("rep is a member");
            for &x in data.members(j) {
                let a = data.class_of_index(table.product(table.inverse(x as usize), zb));
                m[a][b] += 1;
            }
        }
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= l;
            }
        }
        m
    };

    // common eigenvectors of all class matrices, by successive splitting
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let mut next = Vec::new();
        for basis in spaces {
            let d = basis.len();
            if d == 1 {
                next.push(basis);
                continue;
            }
            let (basis, piv) = echelon(f, &basis);
            let image: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| (0..r).map(|a| m[a].iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))).collect())
                .collect();
            // restricted[i][c] = coordinate i of M v_c
            let restricted: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|c| image[c][piv[i]]).collect()).collect();
            let eig = roots(f, &char_poly(f, &restricted));
            if eig.len() <= 1 {
                next.push(basis);
                continue;
            }
            let mut total = 0;
            for lam in eig {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| (0..d).map(|c| if i == c { f.sub(restricted[i][c], lam) } else { restricted[i][c] }).collect())
                    .collect();
                let coords = null_space(f, &shifted);
                total += coords.len();
                let vectors: Vec<Vec<u64>> = coords
                    .iter()
                    .map(|y| {
                        (0..r)
                            .map(|k| (0..d).fold(0, |acc, c| f.add(acc, f.mul(y[c], basis[c][k]))))
                            .collect()
                    })
                    .collect();
                next.push(vectors);
            }
            if total != d {
                return Err(Error::ConstructionFailed(format!("class matrix {j} is not diagonalizable mod {l}")));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::ConstructionFailed("class matrices do not separate the characters".into()));
    }

    let zeta = |o: u64| pow_mod(root, (l - 1) / o, l);
    let mut rows: Vec<(u64, Vec<Vec<u32>>)> = Vec::with_capacity(r);
    for space in spaces {
        let w0 = &space[0];
        let s = f.inv(w0[0]);
        let w: Vec<u64> = w0.iter().map(|&x| f.mul(x, s)).collect();
        // sum_k w_k w_k' / |C_k| = |G| / chi(1)^2
        let norm = (0..r).fold(0, |acc, k| {
            let t = f.mul(f.mul(w[k], w[data.inverse_class(k)]), f.inv(sizes[k] % l));
            f.add(acc, t)
        });
        let d2 = f.mul(n % l, f.inv(norm));
        let deg = (1..=isqrt(n)).find(|&d| (d * d) % l == d2).ok_or_else(|| {
            Error::ConstructionFailed("no degree matches the norm of a central character".into())
        })?;
        let chi_mod: Vec<u64> = (0..r).map(|k| f.mul(f.mul(w[k], deg), f.inv(sizes[k] % l))).collect();
        let mut per_class = Vec::with_capacity(r);
        for k in 0..r {
            let o = data.classes[k].element_order;
            let z = zeta(o);
            let zinv = f.inv(z);
            let oinv = f.inv(o % l);
            let mut m = Vec::with_capacity(o as usize);
            for t in 0..o {
                let step = pow_mod(zinv, t, l);
                let mut acc = 0;
                let mut zpow = 1;
                for s in 0..o {
                    let v = chi_mod[data.power_class(k, s as i64)];
                    acc = f.add(acc, f.mul(v, zpow));
                    zpow = f.mul(zpow, step);
                }
                let mt = f.mul(acc, oinv);
                if mt > deg {
                    return Err(Error::ConstructionFailed("eigenvalue multiplicity out of range".into()));
                }
                m.push(mt as u32);
            }
            if m.iter().map(|&x| x as u64).sum::<u64>() != deg {
                return Err(Error::ConstructionFailed("eigenvalue multiplicities do not sum to the degree".into()));
            }
            per_class.push(m);
        }
        rows.push((deg, per_class));
    }
    // degree ascending; within a degree the principal character (multiplicity
    // vector [1,0,..] everywhere) is largest, so descending puts it first
    rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));

    let values: Vec<Vec<Cyclotomic>> = rows
        .iter()
        .map(|(_, per)| {
            per.iter()
                .map(|m| Cyclotomic::from_dense_int(m.len() as u32, &m.iter().map(|&x| x as i64).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let mults: Vec<Vec<Vec<u32>>> = rows.into_iter().map(|(_, per)| per).collect();
    let counting = Counting::new(n, e, &mults);
    Ok(CharTable {
        classes: data.classes.clone(),
        group_order: n,
        exponent: e,
        inverse_map: (0..r).map(|k| data.inverse_class(k)).collect(),
        values,
        mults,
        counting,
    })
}

impl Counting {
    fn new(n: u64, e: u64, mults: &[Vec<Vec<u32>>]) -> Counting {
        let bound = 2 * (n as u128 * n as u128);
        let l = prime_one_mod(e, bound.min(u64::MAX as u128 / 4) as u64);
        let f = Fp { p: l };
        let omega = pow_mod(primitive_root(l), (l - 1) / e, l);
        let values = mults
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| {
                        let o = m.len() as u64;
                        let z = pow_mod(omega, e / o, l);
                        let mut zp = 1;
                        let mut acc = 0;
                        for &c in m {
                            acc = f.add(acc, f.mul(c as u64, zp));
                            zp = f.mul(zp, z);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Counting { f, values }
    }
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.mults[chi][0][0] as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.len()).map(|c| self.degree(c)).collect()
    }

    /// A copy with one entry replaced; used to exercise the soundness gate.
    pub fn with_value(&self, chi: usize, class: usize, v: Cyclotomic) -> CharTable {
        let mut t = self.clone();
        t.values[chi][class] = v;
        t
    }

    /// `Σ_χ χ(x_i)χ(x_j)χ(x_k)/χ(1)` reduced modulo the counting prime,
    /// with `conj_k` using the inverse class for the third argument.
    fn frobenius_residue(&self, i: usize, j: usize, k: usize) -> u64 {
        let f = self.counting.f;
        (0..self.len()).fold(0, |acc, chi| {
            let v = &self.counting.values[chi];
            let t = f.mul(f.mul(f.mul(v[i], v[j]), v[k]), f.inv(self.degree(chi) % f.p));
            f.add(acc, t)
        })
    }

    fn recover(&self, prefactor_num: u128, residue: u64, bound: u128) -> BigUint {
        let f = self.counting.f;
        let n_inv = f.inv(self.group_order % f.p);
        let pre = (prefactor_num % f.p as u128) as u64;
        let v = f.mul(f.mul(pre, n_inv), residue);
        assert!(
            (v as u128) <= bound,
            "class-algebra constant {v} exceeds its bound {bound}: inconsistent table"
        );
        BigUint::from(v)
    }

    /// Number of `(a,b)` in `C_i x C_j` with `ab` equal to the fixed
    /// representative of `C_k`.
    pub fn class_mult_coefficient(&self, i: usize, j: usize, k: usize) -> BigUint {
        let (si, sj) = (self.classes[i].size_u64 as u128, self.classes[j].size_u64 as u128);
        let res = self.frobenius_residue(i, j, self.inverse_map[k]);
        self.recover(si * sj, res, si.min(sj))
    }

    /// Number of `(a,b,c)` in `C_i x C_j x C_k` with `abc = 1`:
    /// `|C_i||C_j||C_k|/|G| · Σ_χ χ(x_i)χ(x_j)χ(x_k)/χ(1)`.
    pub fn triple_count(&self, i: usize, j: usize, k: usize) -> BigUint {
        let (si, sj, sk) = (
            self.classes[i].size_u64 as u128,
            self.classes[j].size_u64 as u128,
            self.classes[k].size_u64 as u128,
        );
        let res = self.frobenius_residue(i, j, k);
        self.recover(si * sj * sk, res, si * sj)
    }

    /// The character sum of `triple_count`, in exact cyclotomic arithmetic.
    pub fn frobenius_sum_exact(&self, i: usize, j: usize, k: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for chi in 0..self.len() {
            let prod = &(&self.values[chi][i] * &self.values[chi][j]) * &self.values[chi][k];
            let d = BigRational::from_integer(BigInt::from(self.degree(chi)));
            acc = &acc + &prod.scale(&(BigRational::one() / d));
        }
        acc
    }

    /// `triple_count` evaluated entirely in exact arithmetic (slow).
    pub fn triple_count_exact(&self, i: usize, j: usize, k: usize) -> Option<BigUint> {
        let s = self.frobenius_sum_exact(i, j, k).to_rational()?;
        let pre = BigRational::new(
            BigInt::from(self.classes[i].size_u64) * self.classes[j].size_u64 * self.classes[k].size_u64,
            BigInt::from(self.group_order),
        );
        let v = s * pre;
        (v.is_integer() && v >= BigRational::zero()).then(|| v.to_integer().to_biguint().expect("nonnegative"))
    }

    pub fn export_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("order {} classes {}\n", self.group_order, self.len()));
        out.push_str("sizes");
        for c in &self.classes {
            out.push_str(&format!(" {}", c.size_u64));
        }
        out.push_str("\norders");
        for c in &self.classes {
            out.push_str(&format!(" {}", c.element_order));
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            out.push_str(&format!("chi{}:", i + 1));
            for v in row {
                out.push_str(&format!(" [{}]", v.export()));
            }
            out.push('\n');
        }
        out
    }

    pub fn export_machine(&self) -> TableExport {
        TableExport {
            order: self.group_order.to_string(),
            class_sizes: self.classes.iter().map(|c| c.size_u64.to_string()).collect(),
            element_orders: self.classes.iter().map(|c| c.element_order).collect(),
            inverse_map: self.inverse_map.clone(),
            rows: self.values.iter().map(|r| r.iter().map(Cyclotomic::export).collect()).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct TableExport {
    pub order: String,
    pub class_sizes: Vec<String>,
    pub element_orders: Vec<u64>,
    pub inverse_map: Vec<usize>,
    pub rows: Vec<Vec<String>>,
}

/// Dense integer numerators over exponents mod `e`, or `None` when some
/// coefficient is not an integer.
fn integral_dense(v: &Cyclotomic, e: u32) -> Option<Vec<(usize, i128)>> {
    if !e.is_multiple_of(v.conductor()) {
        return None;
    }
    let f = e / v.conductor();
    v.terms()
        .iter()
        .map(|(k, c)| {
            use num_traits::ToPrimitive;
            c.is_integer().then(|| c.to_integer().to_i128()).flatten().map(|x| ((k * f) as usize, x))
        })
        .collect()
}

/// Exact row and column orthogonality, degree sum, divisibility and
/// principal-row checks.
pub fn verify_orthogonality(t: &CharTable) -> bool {
    let r = t.len();
    let n = t.group_order;
    if t.values.len() != r || t.values.iter().any(|row| row.len() != r) {
        return false;
    }
    if t.values[0].iter().any(|v| *v != Cyclotomic::one()) {
        return false;
    }
    let mut degs = Vec::with_capacity(r);
    for row in &t.values {
        match row[0].to_integer().and_then(|d| u64::try_from(d).ok()) {
            Some(d) if d > 0 && n.is_multiple_of(d) => degs.push(d),
            _ => return false,
        }
    }
    if degs.iter().map(|d| d * d).sum::<u64>() != n {
        return false;
    }
    let e = {
        let mut e = 1u32;
        for row in &t.values {
            for v in row {
                e = num_integer::lcm(e, v.conductor());
            }
        }
        e
    };
    let dense: Option<Vec<Vec<Vec<(usize, i128)>>>> =
        t.values.iter().map(|row| row.iter().map(|v| integral_dense(v, e)).collect()).collect();
    let sizes: Vec<i128> = t.classes.iter().map(|c| c.size_u64 as i128).collect();
    match dense {
        Some(d) => orthogonality_integral(&d, &sizes, &t.inverse_map, n, e),
        None => orthogonality_exact(t),
    }
}

fn zero_after_reduction(e: u32, mut acc: Vec<i128>) -> bool {
    zumbroich_reduce(e, &mut acc);
    acc.iter().all(|&x| x == 0)
}

fn orthogonality_integral(d: &[Vec<Vec<(usize, i128)>>], sizes: &[i128], inv: &[usize], n: u64, e: u32) -> bool {
    let r = d.len();
    let eu = e as usize;
    let conj = |terms: &Vec<(usize, i128)>| -> Vec<(usize, i128)> {
        terms.iter().map(|&(k, c)| ((eu - k) % eu, c)).collect()
    };
    for a in 0..r {
        for b in a..r {
            let mut acc = vec![0i128; eu];
            for k in 0..r {
                for &(x, cx) in &d[a][k] {
                    for (y, cy) in conj(&d[b][k]) {
                        acc[(x + y) % eu] += sizes[k] * cx * cy;
                    }
                }
            }
            if a == b {
                acc[0] -= n as i128;
            }
            if !zero_after_reduction(e, acc) {
                return false;
            }
        }
    }
    for k in 0..r {
        for l in k..r {
            let mut acc = vec![0i128; eu];
            for row in d {
                for &(x, cx) in &row[k] {
                    for (y, cy) in conj(&row[l]) {
                        acc[(x + y) % eu] += cx * cy;
                    }
                }
            }
            if k == l {
                acc[0] -= (n as i128) / sizes[k];
            }
            if !zero_after_reduction(e, acc) {
                return false;
            }
        }
    }
    // values at inverse classes are complex conjugates
    (0..r).all(|k| d.iter().all(|row| {
        let mut acc = vec![0i128; eu];
        for &(x, c) in &row[inv[k]] {
            acc[x] += c;
        }
        for (y, c) in conj(&row[k]) {
            acc[y] -= c;
        }
        zero_after_reduction(e, acc)
    }))
}

fn orthogonality_exact(t: &CharTable) -> bool {
    let r = t.len();
    let n = Cyclotomic::from_int(t.group_order as i64);
    for a in 0..r {
        for b in 0..r {
            let mut acc = Cyclotomic::zero();
            for k in 0..r {
                let term = &t.values[a][k] * &t.values[b][k].conj();
                acc = &acc + &term.scale(&BigRational::from_integer(BigInt::from(t.classes[k].size_u64)));
            }
            let expect = if a == b { n.clone() } else { Cyclotomic::zero() };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;

    fn cyc(deg: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(deg, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn a5_degrees_and_soundness() {
        let g = Group::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        assert!(verify_orthogonality(&t));
        let bad = t.with_value(1, 1, &t.values[1][1] + &Cyclotomic::one());
        assert!(!verify_orthogonality(&bad));
    }

    #[test]
    fn cyclic_three_is_fourier_matrix() {
        let g = Group::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1]);
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        let mut rows: Vec<Vec<Cyclotomic>> = t.values().to_vec();
        rows.sort_by_key(|r| r[1].export());
        let mut expect = vec![
            vec![Cyclotomic::one(), Cyclotomic::one(), Cyclotomic::one()],
            vec![Cyclotomic::one(), w.clone(), w2.clone()],
            vec![Cyclotomic::one(), w2, w],
        ];
        expect.sort_by_key(|r| r[1].export());
        assert_eq!(rows, expect);
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn trivial_group_table() {
        let g = Group::trivial(3);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1]);
        assert!(verify_orthogonality(&t));
    }
}
