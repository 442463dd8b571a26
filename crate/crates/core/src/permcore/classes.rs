use num_bigint::BigUint;
use serde::Serialize;

use super::group::Group;
use super::perm::Permutation;
use super::table::ElementTable;

#[derive(Clone, Debug, Serialize)]
pub struct ConjClass {
    pub index: usize,
    pub rep: Permutation,
    #[serde(serialize_with = "crate::bigser::uint")]
    pub size: BigUint,
    #[serde(skip)]
    pub size_u64: u64,
    pub element_order: u64,
}

/// Conjugacy classes with lookup structures over the group's element table.
pub struct ClassData {
    pub classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    inverse: Vec<usize>,
    /// `powers[c][s]` is the class of `rep_c^s` for `0 <= s < order`.
    powers: Vec<Vec<u32>>,
    labels: Vec<String>,
}

impl ClassData {
    pub(crate) fn build(g: &Group, table: &ElementTable) -> ClassData {
        let n = table.len();
        let gens: Vec<(Permutation, Permutation)> =
            g.generators().iter().map(|s| (s.clone(), s.inverse())).collect();
        let mut orbit_of = vec![u32::MAX; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            let mut orbit = vec![start as u32];
            orbit_of[start] = id;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head] as usize;
                for (s, si) in &gens {
                    let y = table.conjugate(x, s, si);
                    if orbit_of[y] == u32::MAX {
                        orbit_of[y] = id;
                        orbit.push(y as u32);
                    }
                }
                head += 1;
            }
            orbits.push(orbit);
        }

        let mut keyed: Vec<(u64, usize, usize, Vec<u32>)> = orbits
            .into_iter()
            .map(|mut members| {
                let canon = *members
                    .iter()
                    .min_by(|&&a, &&b| table.elements[a as usize].cmp(&table.elements[b as usize]))
                    .expect("orbits are nonempty") as usize;
                members.sort_unstable();
                (table.elements[canon].order(), members.len(), canon, members)
            })
            .collect();
        keyed.sort_by(|a, b| {
            (a.0, a.1)
                .cmp(&(b.0, b.1))
                .then_with(|| table.elements[a.2].cmp(&table.elements[b.2]))
        });

        let mut class_of = vec![0u32; n];
        let mut classes = Vec::with_capacity(keyed.len());
        let mut members = Vec::with_capacity(keyed.len());
        for (ci, (order, size, canon, mem)) in keyed.into_iter().enumerate() {
            for &m in &mem {
                class_of[m as usize] = ci as u32;
            }
            classes.push(ConjClass {
                index: ci,
                rep: table.elements[canon].clone(),
                size: BigUint::from(size),
                size_u64: size as u64,
                element_order: order,
            });
            members.push(mem);
        }

        let inverse = classes
            .iter()
            .map(|c| {
                let i = table.index_of(&c.rep).expect("rep is a member");
                class_of[table.inverse(i)] as usize
            })
            .collect();

        let powers = classes
            .iter()
            .map(|c| {
                let mut out = Vec::with_capacity(c.element_order as usize);
                let mut acc = Permutation::identity(c.rep.degree());
                for _ in 0..c.element_order {
                    out.push(class_of[table.index_of(&acc).expect("power is a member")]);
                    acc = acc.mul(&c.rep);
                }
                out
            })
            .collect();

        let labels = atlas_style_labels(&classes);
        ClassData { classes, class_of, members, inverse, powers, labels }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class of the element with table index `i`.
    #[inline]
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_of(&self, table: &ElementTable, p: &Permutation) -> Option<usize> {
        table.index_of(p).map(|i| self.class_of_index(i))
    }

    /// Element-table indices of the members of class `c`, ascending.
    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[c]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }

    /// Class of `rep_c^k` for any integer `k`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let o = self.classes[c].element_order as i64;
        self.powers[c][k.rem_euclid(o) as usize] as usize
    }

    /// Labels in the usual order-plus-letter style: within one element order,
    /// letters follow increasing class size, i.e. decreasing centralizer order.
    /// Ties between equal-size classes are broken by representative, so
    /// algebraically conjugate classes may swap letters relative to other
    /// conventions.
    pub fn label(&self, c: usize) -> &str {
        &self.labels[c]
    }

    pub fn class_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn atlas_style_labels(classes: &[ConjClass]) -> Vec<String> {
    let mut out = Vec::with_capacity(classes.len());
    let mut k = 0;
    let mut prev = 0;
    for c in classes {
        if c.element_order != prev {
            k = 0;
            prev = c.element_order;
        }
        let letter = if k < 26 { ((b'A' + k as u8) as char).to_string() } else { format!("_{k}") };
        out.push(format!("{}{}", c.element_order, letter));
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(deg: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(deg, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn a5_class_sizes() {
        let g = Group::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let sizes: Vec<u64> = g.conjugacy_classes().unwrap().iter().map(|c| c.size_u64).collect();
        assert_eq!(sizes, vec![1, 15, 20, 12, 12]);
        let data = g.class_data().unwrap();
        assert_eq!(data.label(3), "5A");
        assert_eq!(data.label(4), "5B");
        // 5-cycles are real in A5, so each 5-class is self-inverse
        assert_eq!(data.inverse_class(3), 3);
        // squaring swaps the two 5-classes
        assert_eq!(data.power_class(3, 2), 4);
    }

    #[test]
    fn s4_one_class_per_cycle_type() {
        let g = Group::new(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.len(), 5);
        let mut types: Vec<Vec<usize>> = classes.iter().map(|c| c.rep.cycle_type()).collect();
        types.dedup();
        assert_eq!(types.len(), 5);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = Group::new(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.size_u64 == 1));
    }
}
