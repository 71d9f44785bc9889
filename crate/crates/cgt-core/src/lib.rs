//! Computational group theory primitives at "desk scale": exact dense linear
//! algebra over prime fields, permutation groups with stabilizer chains,
//! coset enumeration for finitely presented groups, module (Meataxe)
//! computations, character-table calculus including the Thompson order
//! formula, double-coset counting in block groups, and second cohomology
//! with extension assembly from relator tails.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); disable the
//! default `std` feature to use it in a `no_std` environment. All algorithms
//! are deterministic: randomized procedures take explicit seeds, and every
//! enumeration has a stable order.
//!
//! Module map:
//!
//! * [`gf`] — prime fields GF(p), dense matrices, generator words,
//!   polynomial factorization.
//! * [`perm`] — permutations, Schreier–Sims stabilizer chains,
//!   matrix-to-permutation conversion, conjugacy classes and power maps.
//! * [`fpgrp`] — presentations, relator verification, Todd–Coxeter coset
//!   enumeration, coset actions, short-word lookup.
//! * [`modrep`] — modules over GF(p): spinning, Meataxe irreducibility,
//!   module isomorphism, tensor products, idempotent projection.
//! * [`chartab`] — cyclotomic numbers, character tables, class functions,
//!   permutation characters, fusion restriction, compatible pairs, and the
//!   Thompson order formula.
//! * [`amalgam`] — block diagonal groups, double-coset counting (Burnside
//!   and normal-form methods), staged scalar-unknown conjugacy solving.
//! * [`cohom`] — brute-force second cohomology and extensions built from
//!   relator tails.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod amalgam;
pub mod chartab;
pub mod cohom;
pub mod elem;
pub mod fpgrp;
pub mod gf;
pub mod modrep;
pub mod perm;
