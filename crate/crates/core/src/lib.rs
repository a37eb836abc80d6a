//! Exact computations on subgroup lattices of small permutation groups:
//! Möbius functions, the Burnside-ring invariant `m_{G,N}` by three
//! independent routes, and the topology of the class posets `T_C(G)`.
//!
//! ```
//! use burnside_core::{catalog, invariants::{m_gn, Analysis}};
//!
//! let s5 = catalog::build("S5").unwrap();
//! let a = Analysis::new(&s5).unwrap();
//! let a5 = a.lattice.find_elements(catalog::build("A5").unwrap().elements()).unwrap();
//! assert!(m_gn(&a.lattice, &a.mu, a5).unwrap().is_zero());
//! ```

pub mod bitset;
pub mod catalog;
pub mod error;
pub mod group;
pub mod invariants;
pub mod iso;
pub mod lattice;
pub mod moebius;
pub mod oracle;
pub mod perm;
pub mod rank;
pub mod rational;
pub mod report;
pub mod suite;
pub mod topology;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use group::{closure, CayleyTable, FiniteGroup};
pub use invariants::Analysis;
pub use iso::is_isomorphic;
pub use lattice::{enumerate_subgroups, QuotientPresentation, SubgroupLattice};
pub use moebius::{compute_heights, compute_moebius, euler_totient, HeightTable, MoebiusTable};
pub use perm::Permutation;
pub use rational::Rational;
pub use topology::{ClassPoset, NerveSummary};
