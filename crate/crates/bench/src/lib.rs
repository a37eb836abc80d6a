//! Fixtures shared by the benchmarks.

use burnside_core::catalog::build;
use burnside_core::{Analysis, FiniteGroup};

pub fn group(spec: &str) -> FiniteGroup {
    build(spec).expect("catalog spec")
}

/// S5 with its lattice, Möbius table and the index of A5.
pub fn s5_over_a5() -> (Analysis, usize) {
    let analysis = Analysis::new(&group("S5")).expect("S5 lattice");
    let a5 = analysis
        .lattice
        .normal_subgroups()
        .into_iter()
        .find(|&n| analysis.lattice.order(n) == 60)
        .expect("A5 is normal in S5");
    (analysis, a5)
}
