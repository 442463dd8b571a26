//! Fixtures shared by the benchmarks.

use solvtrip::ingest::corpus_entry;
use solvtrip::Group;

/// A corpus group rebuilt from its generators, so no memoized data carries
/// over between iterations.
pub fn fresh(name: &str) -> Group {
    let g = corpus_entry(name).expect("bundled corpus entry").group;
    Group::new(g.degree(), g.generators().to_vec()).expect("generators are valid")
}
