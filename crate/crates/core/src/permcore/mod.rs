//! Permutations, groups, stabilizer chains, classes and coset actions.

pub mod bsgs;
pub mod classes;
pub mod coset;
pub mod field;
pub mod group;
pub mod matrix;
pub mod named;
pub mod perm;
pub mod table;

pub use bsgs::StabChain;
pub use classes::{ClassData, ConjClass};
pub use coset::{coset_action, CosetAction};
pub use field::{FiniteField, Ring, Zmod};
pub use group::{group_from_generators, Caps, Group};
pub use matrix::{matrix_group_to_perm, realize, realize_over_field, vector_permutation, Action, Matrix};
pub use perm::{element_order, is_p_element, Permutation};
pub use table::ElementTable;
