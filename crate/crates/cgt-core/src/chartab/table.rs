//! Character table storage and structural verification.
//!
//! A [`CharacterTable`] couples per-class data (element order, centralizer
//! order, power maps) with rows of exact [`Cyclotomic`] character values.
//! Construction enforces the structural invariants every other operation
//! leans on (identity class first, centralizer orders dividing the group
//! order, rectangular value matrix); [`verify_table`] re-derives the
//! arithmetic consequences — orthogonality, degree sums, class-size sums,
//! power-map consistency — and reports every violation with indices, so a
//! hand-transcribed table can be audited check by check.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cyclo::Cyclotomic;
use super::CharError;

/// One conjugacy class as recorded in a character table.
///
/// The class *size* is not stored: it is the group order divided by the
/// centralizer order, and construction of the owning table checks that the
/// division is exact. Power maps send this class to the class of the p-th
/// power of its elements and may be given for any exponent, though fixtures
/// conventionally list prime exponents only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableClass {
    /// Display name, e.g. `"2a"`. Names must be unique within a table.
    pub name: String,
    /// Order of the elements in the class.
    pub order: u64,
    /// Order of the centralizer of a class representative.
    pub centralizer: BigUint,
    /// Exponent → index of the class containing the powered elements.
    pub power_maps: BTreeMap<u64, usize>,
}

impl TableClass {
    /// A class record with no power maps.
    pub fn new(name: &str, order: u64, centralizer: BigUint) -> Self {
        TableClass {
            name: String::from(name),
            order,
            centralizer,
            power_maps: BTreeMap::new(),
        }
    }

    /// Builder-style addition of one power map entry.
    #[must_use]
    pub fn with_power_map(mut self, exponent: u64, target: usize) -> Self {
        self.power_maps.insert(exponent, target);
        self
    }
}

/// An ordinary character table: class data plus rows of cyclotomic values.
///
/// Rows are characters, columns are classes. The table may carry fewer rows
/// than classes (a partial transcription, or none at all for a
/// classes-only fixture); operations that need the full irreducible set say
/// so and fail with [`CharError::MissingData`] otherwise.
///
/// Structural invariants enforced at construction:
/// * class 0 is the unique class of element order 1 (the identity class),
///   and its centralizer order is the group order;
/// * every centralizer order divides the group order exactly;
/// * every value row has exactly one entry per class;
/// * power-map targets are in range and class names are unique.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    order: BigUint,
    conductor: u64,
    classes: Vec<TableClass>,
    chars: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    /// Build a table from class data and (possibly empty, possibly partial)
    /// character rows, checking the structural invariants listed on the
    /// type.
    pub fn new(
        order: BigUint,
        classes: Vec<TableClass>,
        chars: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, CharError> {
        if order.is_zero() {
            return Err(CharError::Shape(String::from("group order must be positive")));
        }
        if classes.is_empty() {
            return Err(CharError::Shape(String::from("a table needs at least one class")));
        }
        let count = classes.len();
        for (k, class) in classes.iter().enumerate() {
            if class.order == 0 {
                return Err(CharError::Shape(format!("class {k} has element order 0")));
            }
            if class.order == 1 && k != 0 {
                return Err(CharError::Shape(format!(
                    "class {k} has element order 1; the identity class must be class 0 and unique"
                )));
            }
            if class.centralizer.is_zero() || !(&order % &class.centralizer).is_zero() {
                return Err(CharError::Shape(format!(
                    "centralizer order of class {k} does not divide the group order"
                )));
            }
            for (&exponent, &target) in &class.power_maps {
                if target >= count {
                    return Err(CharError::ClassIndex { index: target, count });
                }
                if exponent == 0 {
                    return Err(CharError::Shape(format!(
                        "class {k} maps the exponent 0; power maps need positive exponents"
                    )));
                }
            }
        }
        if classes[0].order != 1 {
            return Err(CharError::Shape(String::from(
                "class 0 must be the identity class (element order 1)",
            )));
        }
        if classes[0].centralizer != order {
            return Err(CharError::Shape(String::from(
                "the identity class centralizer must equal the group order",
            )));
        }
        let mut names: Vec<&str> = classes.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(CharError::Shape(String::from("class names must be unique")));
        }
        let mut conductor = 1u64;
        for (i, row) in chars.iter().enumerate() {
            if row.len() != count {
                return Err(CharError::Shape(format!(
                    "character row {i} has {} values for {count} classes",
                    row.len()
                )));
            }
            for value in row {
                conductor = conductor.lcm(&value.conductor());
            }
        }
        Ok(CharacterTable { order, conductor, classes, chars })
    }

    /// The group order.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Least common multiple of the conductors of all stored values (1 for
    /// a classes-only table). Every value of the table lives in Q(ζₙ) for
    /// this n.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of conjugacy classes (columns).
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Number of character rows currently stored.
    pub fn char_count(&self) -> usize {
        self.chars.len()
    }

    /// The class records, in column order.
    pub fn classes(&self) -> &[TableClass] {
        &self.classes
    }

    /// The values of character `i`, one per class.
    pub fn character(&self, i: usize) -> &[Cyclotomic] {
        &self.chars[i]
    }

    /// The value of character `i` at class `k`.
    pub fn value(&self, i: usize, k: usize) -> &Cyclotomic {
        &self.chars[i][k]
    }

    /// Size of class `k`: group order divided by the centralizer order.
    pub fn class_size(&self, k: usize) -> BigUint {
        &self.order / &self.classes[k].centralizer
    }

    /// Index of the identity class. Always 0 by construction.
    pub fn identity_class(&self) -> usize {
        0
    }

    /// The degree of character `i`, i.e. its value at the identity class,
    /// which must be a positive integer.
    pub fn degree(&self, i: usize) -> Result<BigUint, CharError> {
        let value = &self.chars[i][0];
        let r = value
            .try_rational()
            .ok_or_else(|| CharError::NotIntegral(format!("degree of character {i}: {value}")))?;
        if !r.is_integer() || !r.is_positive() {
            return Err(CharError::NotIntegral(format!(
                "degree of character {i} is {r}, not a positive integer"
            )));
        }
        Ok(r.to_integer().to_biguint().expect("positive integer"))
    }

    /// Index of the class with the given name, if any.
    pub fn class_by_name(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }
}

/// `(1/|G|) Σ_K |K| · f(K) · conj(g(K))` over raw value slices.
///
/// Shared by [`verify_table`] row orthogonality and the public class
/// function inner product; lengths must already match the class count.
pub(crate) fn inner_product_rows(
    table: &CharacterTable,
    f: &[Cyclotomic],
    g: &[Cyclotomic],
) -> Cyclotomic {
    let mut sum = Cyclotomic::zero();
    for k in 0..table.class_count() {
        let size = BigRational::from_integer(BigInt::from(table.class_size(k)));
        sum = sum.add(&f[k].mul(&g[k].conj()).scale(&size));
    }
    let order = BigRational::from_integer(BigInt::from(table.order.clone()));
    sum.scale(&order.recip())
}

/// One failed check from [`verify_table`], with the indices that locate it.
#[derive(Debug, Clone, PartialEq)]
pub enum TableFailure {
    /// The identity-class value of a row is not a positive integer.
    BadDegree {
        /// Character row.
        row: usize,
    },
    /// Σ degree² differs from the group order.
    DegreeSum {
        /// The computed sum of squared degrees.
        got: Cyclotomic,
        /// The group order.
        expected: BigUint,
    },
    /// `⟨χᵢ, χⱼ⟩ ≠ δᵢⱼ` for a pair of rows.
    RowOrthogonality {
        /// First row.
        i: usize,
        /// Second row.
        j: usize,
        /// The computed inner product.
        got: Cyclotomic,
    },
    /// `Σ_χ χ(K)·conj(χ(L)) ≠ δ_{KL}·|C(K)|` for a pair of columns.
    ColumnOrthogonality {
        /// First class.
        k: usize,
        /// Second class.
        l: usize,
        /// The computed column sum.
        got: Cyclotomic,
    },
    /// Class sizes do not sum to the group order.
    ClassSizeSum {
        /// The computed sum of class sizes.
        got: BigUint,
        /// The group order.
        expected: BigUint,
    },
    /// `|class| · |centralizer| ≠ |G|` for one class.
    CentralizerProduct {
        /// Offending class.
        class: usize,
    },
    /// A power map lands in a class of the wrong element order.
    PowerMap {
        /// Source class.
        class: usize,
        /// Exponent of the map.
        exponent: u64,
        /// Target class recorded in the table.
        target: usize,
        /// Element order the target must have.
        expected_order: u64,
        /// Element order the target actually has.
        found_order: u64,
    },
}

impl fmt::Display for TableFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableFailure::BadDegree { row } => {
                write!(f, "character {row}: identity value is not a positive integer")
            }
            TableFailure::DegreeSum { got, expected } => {
                write!(f, "sum of squared degrees is {got}, group order is {expected}")
            }
            TableFailure::RowOrthogonality { i, j, got } => {
                write!(f, "rows {i} and {j}: inner product {got}")
            }
            TableFailure::ColumnOrthogonality { k, l, got } => {
                write!(f, "columns {k} and {l}: orthogonality sum {got}")
            }
            TableFailure::ClassSizeSum { got, expected } => {
                write!(f, "class sizes sum to {got}, group order is {expected}")
            }
            TableFailure::CentralizerProduct { class } => {
                write!(f, "class {class}: size times centralizer is not the group order")
            }
            TableFailure::PowerMap { class, exponent, target, expected_order, found_order } => {
                write!(
                    f,
                    "class {class}: power map ^{exponent} lands in class {target} of element \
                     order {found_order}, expected order {expected_order}"
                )
            }
        }
    }
}

/// The outcome of [`verify_table`]: every failed check, plus notes on
/// checks that could not run on this table.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TableReport {
    failures: Vec<TableFailure>,
    skipped: Vec<String>,
    checks: usize,
}

impl TableReport {
    /// True when every check that ran passed.
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// The failed checks, in the order they were found.
    pub fn failures(&self) -> &[TableFailure] {
        &self.failures
    }

    /// Human-readable notes on checks skipped for lack of data.
    pub fn skipped(&self) -> &[String] {
        &self.skipped
    }

    /// Number of individual checks performed.
    pub fn checks(&self) -> usize {
        self.checks
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "all {} checks passed", self.checks)?;
        } else {
            write!(f, "{} of {} checks failed", self.failures.len(), self.checks)?;
            for failure in &self.failures {
                write!(f, "\n  {failure}")?;
            }
        }
        for note in &self.skipped {
            write!(f, "\n  skipped: {note}")?;
        }
        Ok(())
    }
}

/// Audit a character table: class-size sum, centralizer products, power-map
/// order consistency, degrees, Σ degree² = |G|, and first and second
/// orthogonality.
///
/// Row orthogonality runs on whatever rows are present (each stored row is
/// expected to be irreducible). The degree-sum and column-orthogonality
/// checks need the complete set of irreducibles, so they are skipped — with
/// a note — when the row count differs from the class count; a classes-only
/// table skips all character checks.
pub fn verify_table(table: &CharacterTable) -> TableReport {
    let mut report = TableReport::default();
    let n = table.class_count();

    let mut size_sum = BigUint::zero();
    for k in 0..n {
        let size = table.class_size(k);
        report.checks += 1;
        if &size * &table.classes[k].centralizer != table.order {
            report.failures.push(TableFailure::CentralizerProduct { class: k });
        }
        size_sum += size;
    }
    report.checks += 1;
    if size_sum != table.order {
        report
            .failures
            .push(TableFailure::ClassSizeSum { got: size_sum, expected: table.order.clone() });
    }

    for (k, class) in table.classes.iter().enumerate() {
        for (&exponent, &target) in &class.power_maps {
            report.checks += 1;
            let expected_order = class.order / class.order.gcd(&exponent);
            let found_order = table.classes[target].order;
            if found_order != expected_order {
                report.failures.push(TableFailure::PowerMap {
                    class: k,
                    exponent,
                    target,
                    expected_order,
                    found_order,
                });
            }
        }
    }

    let rows = table.char_count();
    if rows == 0 {
        report
            .skipped
            .push(String::from("no character rows: orthogonality and degree checks skipped"));
        return report;
    }

    let mut degrees_ok = true;
    for i in 0..rows {
        report.checks += 1;
        if table.degree(i).is_err() {
            degrees_ok = false;
            report.failures.push(TableFailure::BadDegree { row: i });
        }
    }

    for i in 0..rows {
        for j in i..rows {
            report.checks += 1;
            let got = inner_product_rows(table, &table.chars[i], &table.chars[j]);
            let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if got != expected {
                report.failures.push(TableFailure::RowOrthogonality { i, j, got });
            }
        }
    }

    if rows != n {
        report.skipped.push(format!(
            "{rows} character rows over {n} classes: degree-sum and column-orthogonality \
             checks need the full table and were skipped"
        ));
        return report;
    }

    if degrees_ok {
        report.checks += 1;
        let mut sum = Cyclotomic::zero();
        for i in 0..rows {
            let d = &table.chars[i][0];
            sum = sum.add(&d.mul(d));
        }
        let expected = BigRational::from_integer(BigInt::from(table.order.clone()));
        if sum.try_rational().as_ref() != Some(&expected) {
            report
                .failures
                .push(TableFailure::DegreeSum { got: sum, expected: table.order.clone() });
        }
    } else {
        report.skipped.push(String::from(
            "a row has a malformed degree: the degree-sum check was skipped",
        ));
    }

    for k in 0..n {
        for l in k..n {
            report.checks += 1;
            let mut sum = Cyclotomic::zero();
            for i in 0..rows {
                sum = sum.add(&table.chars[i][k].mul(&table.chars[i][l].conj()));
            }
            let expected = if k == l {
                Cyclotomic::rational(BigRational::from_integer(BigInt::from(
                    table.classes[k].centralizer.clone(),
                )))
            } else {
                Cyclotomic::zero()
            };
            if sum != expected {
                report.failures.push(TableFailure::ColumnOrthogonality { k, l, got: sum });
            }
        }
    }

    report
}
