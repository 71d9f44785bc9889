//! Brute-force oracles shared by the test suites of the cgt workspace.
//!
//! Everything in this crate is deliberately naive: groups are enumerated
//! element by element, character tables come from closed formulas
//! (Murnaghan–Nakayama for symmetric groups, root-of-unity formulas for
//! cyclic and dihedral groups, tensoring for direct products), and the
//! linear algebra used by the module and double-coset oracles is a local
//! reimplementation rather than a call into the code under test.  The
//! oracles favour obviousness over speed and panic on misuse — they only
//! ever run inside tests.

pub mod blocks;
pub mod cohoracle;
pub mod enumgrp;
pub mod modoracle;
pub mod pairs;
pub mod tables;

pub(crate) mod linalg;

pub use blocks::{block_mul, double_coset_orbit_count, enumerate_block_group};
pub use cohoracle::trivial_module_h2_dims;
pub use enumgrp::{
    brute_classes, brute_fusion, brute_order, centralizer_elements, centralizer_order,
    conjugacy_class_of, elements, is_conjugate, random_permutation,
};
pub use modoracle::{invariant_span_dims, is_irreducible_exhaustive};
pub use pairs::{power_involution, thompson_pair_count};
pub use tables::{
    check_class_data, cyclic_table, dihedral_table, partitions, product_table, sn_table,
    OracleTable,
};
