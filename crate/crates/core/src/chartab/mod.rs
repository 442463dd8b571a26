//! Exact character tables and class-algebra constants.

pub mod cyclotomic;
pub mod modular;
pub mod table;

pub use cyclotomic::Cyclotomic;
pub use table::{character_table, verify_orthogonality, CharTable, TableExport};
