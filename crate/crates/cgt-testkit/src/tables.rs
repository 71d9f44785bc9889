//! Character tables built from closed formulas, paired with explicit
//! class representatives.
//!
//! Symmetric group tables come from the Murnaghan–Nakayama rule on
//! partitions, cyclic and dihedral tables from root-of-unity formulas, and
//! direct products from tensoring.  Each builder returns an
//! [`OracleTable`]: a [`CharacterTable`] plus one permutation
//! representative per class, embedded at a caller-chosen ambient degree so
//! centralizer tables inside a bigger symmetric group can be assembled
//! from commuting factors.  [`check_class_data`] re-derives every piece of
//! class data (orders, centralizers, sizes, power maps) from the
//! representatives by brute force.

use crate::enumgrp::{centralizer_order, conjugacy_class_of, elements, is_conjugate};
use cgt_core::chartab::{CharacterTable, Cyclotomic, TableClass};
use cgt_core::elem::GroupElement;
use cgt_core::perm::Permutation;
use num_bigint::BigUint;
use std::collections::BTreeMap;

/// A character table together with one explicit representative per class.
pub struct OracleTable {
    /// The table; class k of the table is represented by `reps[k]`.
    pub table: CharacterTable,
    /// Class representatives, all of one ambient degree.
    pub reps: Vec<Permutation>,
}

impl OracleTable {
    /// Pairs an existing table with replacement representatives — used to
    /// transplant an abstract table onto an isomorphic permutation group.
    /// The pairing is validated by [`check_class_data`].
    pub fn with_reps(table: CharacterTable, reps: Vec<Permutation>) -> OracleTable {
        assert_eq!(table.class_count(), reps.len(), "one representative per class");
        let t = OracleTable { table, reps };
        check_class_data(&t);
        t
    }
}

/// All partitions of `n` in descending-lexicographic order, each with
/// weakly decreasing parts; the first is `[n]`, the last `[1, …, 1]`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}

/// Murnaghan–Nakayama value χ_λ(ρ), via beta numbers: a border strip of
/// size k removable from λ corresponds to a beta number b with b ≥ k and
/// b − k not a beta number; its height is the number of beta numbers
/// strictly between b − k and b.
fn mn(
    lambda: &[usize],
    rho: &[usize],
    memo: &mut BTreeMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if rho.is_empty() {
        debug_assert!(lambda.is_empty());
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = rho[0];
    let rest = &rho[1..];
    let m = lambda.len();
    let betas: Vec<usize> = (0..m).map(|i| lambda[i] + (m - 1 - i)).collect();
    let mut total = 0i64;
    for (pos, &b) in betas.iter().enumerate() {
        if b < k || betas.contains(&(b - k)) {
            continue;
        }
        let height = betas.iter().filter(|&&x| b - k < x && x < b).count();
        let mut nb = betas.clone();
        nb[pos] = b - k;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let mut nl: Vec<usize> = (0..m).map(|i| nb[i] - (m - 1 - i)).collect();
        while nl.last() == Some(&0) {
            nl.pop();
        }
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&nl, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The cycle type of the p-th power of an element of the given cycle type:
/// a k-cycle powers to gcd(k,p) cycles of length k/gcd(k,p).
fn powered_type(t: &[usize], p: u64) -> Vec<usize> {
    let mut out = Vec::new();
    for &k in t {
        let g = gcd(k as u64, p) as usize;
        for _ in 0..g {
            out.push(k / g);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn type_name(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|k| k.to_string()).collect();
    format!("t{}", parts.join("_"))
}

/// The character table of the symmetric group Sₙ by Murnaghan–Nakayama,
/// acting on the `n` points `offset+1 … offset+n` of `0 … degree−1`
/// (1-based points).  Classes are cycle types, identity first; power maps
/// are supplied for every prime ≤ n.
pub fn sn_table(n: usize, degree: usize, offset: usize) -> OracleTable {
    assert!(n >= 1 && offset + n <= degree);
    let parts = partitions(n);
    // Identity class (all parts 1) first, the rest in enumeration order.
    let mut types: Vec<Vec<usize>> = vec![vec![1; n]];
    types.extend(parts.iter().filter(|t| t.len() != n).cloned());
    let index: BTreeMap<Vec<usize>, usize> =
        types.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();

    let order: u64 = (1..=n as u64).product();
    let primes = primes_up_to(n as u64);
    let mut classes = Vec::with_capacity(types.len());
    let mut reps = Vec::with_capacity(types.len());
    for t in &types {
        // Centralizer order z_ρ = ∏ k^{m_k}·m_k!.
        let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
        for &k in t {
            *mult.entry(k).or_insert(0) += 1;
        }
        let mut cent: u64 = 1;
        for (&k, &m) in &mult {
            cent *= (k as u64).pow(m as u32) * (1..=m).product::<u64>();
        }
        let elt_order = t.iter().fold(1u64, |a, &k| lcm(a, k as u64));
        let mut class = TableClass::new(&type_name(t), elt_order, BigUint::from(cent));
        for &p in &primes {
            class = class.with_power_map(p, index[&powered_type(t, p)]);
        }
        classes.push(class);

        let mut cycles = Vec::new();
        let mut next = offset + 1;
        for &k in t {
            cycles.push((next..next + k).collect::<Vec<usize>>());
            next += k;
        }
        reps.push(Permutation::from_cycles(degree, &cycles).expect("consecutive cycles"));
    }

    let mut memo = BTreeMap::new();
    let chars: Vec<Vec<Cyclotomic>> = parts
        .iter()
        .map(|lambda| {
            types.iter().map(|rho| Cyclotomic::integer(mn(lambda, rho, &mut memo))).collect()
        })
        .collect();

    let table = CharacterTable::new(BigUint::from(order), classes, chars)
        .expect("symmetric group table data is well formed");
    OracleTable { table, reps }
}

/// The character table of the cyclic group generated by `gen`, of order n:
/// classes gᵏ in power order, characters χᵢ(gᵏ) = ζₙ^{ik}.
pub fn cyclic_table(n: u64, gen: &Permutation) -> OracleTable {
    assert!(n >= 1 && gen.order() == n);
    let primes = primes_up_to(n);
    let mut classes = Vec::new();
    let mut reps = Vec::new();
    for j in 0..n {
        let mut class = TableClass::new(
            &format!("c{j}"),
            n / gcd(n, j),
            BigUint::from(n),
        );
        for &p in &primes {
            class = class.with_power_map(p, ((j * p) % n) as usize);
        }
        classes.push(class);
        reps.push(gen.power(j as i64));
    }
    let chars: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| (0..n).map(|j| Cyclotomic::root_of_unity(n, (i * j) % n)).collect())
        .collect();
    let table = CharacterTable::new(BigUint::from(n), classes, chars)
        .expect("cyclic table data is well formed");
    OracleTable { table, reps }
}

/// The character table of the dihedral group ⟨r, s | rᵐ, s², (rs)²⟩ of
/// order 2m, m ≥ 3, with the given generators (validated).  Linear
/// characters and the two-dimensional χ_t(rʲ) = ζᵐ^{tj} + ζᵐ^{−tj} follow
/// the textbook case split on the parity of m.
pub fn dihedral_table(m: u64, r: &Permutation, s: &Permutation) -> OracleTable {
    assert!(m >= 3);
    assert_eq!(r.order(), m, "r must have order m");
    assert_eq!(s.order(), 2, "s must be an involution");
    assert_eq!(r.conjugate(s), r.power(-1), "s must invert r");
    let order = BigUint::from(2 * m);
    let primes = primes_up_to(m.max(2));
    let even = m % 2 == 0;
    let h = m / 2;

    // Class list: rotations by exponent, then reflection class(es).
    // rotation_exponents[k] is the exponent of class k's representative.
    let mut rotation_exponents: Vec<u64> = vec![0];
    if even {
        rotation_exponents.push(h);
    }
    rotation_exponents.extend(1..=(m - 1) / 2);
    let rot_count = rotation_exponents.len();
    let class_of_exponent = |e: u64| -> usize {
        let e = e % m;
        let canon = e.min(m - e);
        rotation_exponents.iter().position(|&x| x == canon).expect("canonical exponent listed")
    };

    let mut classes = Vec::new();
    let mut reps = Vec::new();
    for &j in &rotation_exponents {
        let name = match () {
            _ if j == 0 => String::from("e"),
            _ if even && j == h => String::from("z"),
            _ => format!("r{j}"),
        };
        let cent = if j == 0 || (even && j == h) { 2 * m } else { m };
        let mut class = TableClass::new(&name, m / gcd(m, j), BigUint::from(cent));
        for &p in &primes {
            class = class.with_power_map(p, class_of_exponent(j * p));
        }
        classes.push(class);
        reps.push(r.power(j as i64));
    }
    let reflection_classes: Vec<(String, Permutation)> = if even {
        vec![
            (String::from("s"), s.clone()),
            (String::from("sr"), s.compose_checked(r).expect("one degree")),
        ]
    } else {
        vec![(String::from("s"), s.clone())]
    };
    for (name, rep) in &reflection_classes {
        let cent = if even { 4 } else { 2 };
        let mut class = TableClass::new(name, 2, BigUint::from(cent));
        for &p in &primes {
            // Odd powers of a reflection are the reflection itself.
            class = class.with_power_map(p, if p == 2 { 0 } else { classes.len() });
        }
        classes.push(class);
        reps.push(rep.clone());
    }

    let mut chars: Vec<Vec<Cyclotomic>> = Vec::new();
    // Linear characters: (χ(r), χ(s)) = (1,1), (1,−1), and for even m also
    // (−1,1), (−1,−1).
    let linear: Vec<(i64, i64)> =
        if even { vec![(1, 1), (1, -1), (-1, 1), (-1, -1)] } else { vec![(1, 1), (1, -1)] };
    for (vr, vs) in linear {
        let mut row: Vec<Cyclotomic> = rotation_exponents
            .iter()
            .map(|&j| Cyclotomic::integer(if vr == 1 || j % 2 == 0 { 1 } else { -1 }))
            .collect();
        row.push(Cyclotomic::integer(vs));
        if even {
            // On sr^1 the value is χ(s)·χ(r).
            row.push(Cyclotomic::integer(vs * vr));
        }
        chars.push(row);
    }
    for t in 1..=(m - 1) / 2 {
        let mut row: Vec<Cyclotomic> = rotation_exponents
            .iter()
            .map(|&j| {
                let e = (t * j) % m;
                Cyclotomic::root_of_unity(m, e).add(&Cyclotomic::root_of_unity(m, (m - e) % m))
            })
            .collect();
        for _ in &reflection_classes {
            row.push(Cyclotomic::zero());
        }
        chars.push(row);
    }
    debug_assert_eq!(classes.len(), rot_count + reflection_classes.len());
    let table =
        CharacterTable::new(order, classes, chars).expect("dihedral table data is well formed");
    OracleTable { table, reps }
}

/// The character table of a direct product from the factor tables: classes
/// are pairs (first factor major), characters are tensor products, and the
/// representatives are the composites of the factor representatives, which
/// must commute elementwise (e.g. disjoint supports at one ambient degree).
pub fn product_table(a: &OracleTable, b: &OracleTable) -> OracleTable {
    let (na, nb) = (a.table.class_count(), b.table.class_count());
    let order = a.table.order() * b.table.order();
    let mut classes = Vec::with_capacity(na * nb);
    let mut reps = Vec::with_capacity(na * nb);
    for (i, ca) in a.table.classes().iter().enumerate() {
        for (j, cb) in b.table.classes().iter().enumerate() {
            let mut class = TableClass::new(
                &format!("{}|{}", ca.name, cb.name),
                lcm(ca.order, cb.order),
                ca.centralizer.clone() * cb.centralizer.clone(),
            );
            for (&p, &ta) in &ca.power_maps {
                if let Some(&tb) = cb.power_maps.get(&p) {
                    class = class.with_power_map(p, ta * nb + tb);
                }
            }
            classes.push(class);
            let (ra, rb) = (&a.reps[i], &b.reps[j]);
            let fwd = ra.compose_checked(rb).expect("one ambient degree");
            assert_eq!(
                fwd,
                rb.compose_checked(ra).expect("one ambient degree"),
                "factor representatives must commute"
            );
            reps.push(fwd);
        }
    }
    let mut chars = Vec::with_capacity(a.table.char_count() * b.table.char_count());
    for ra in 0..a.table.char_count() {
        for rb in 0..b.table.char_count() {
            let mut row = Vec::with_capacity(na * nb);
            for i in 0..na {
                for j in 0..nb {
                    row.push(a.table.value(ra, i).mul(b.table.value(rb, j)));
                }
            }
            chars.push(row);
        }
    }
    let table =
        CharacterTable::new(order, classes, chars).expect("product table data is well formed");
    OracleTable { table, reps }
}

/// Re-derives all class data of an oracle table from its representatives
/// by brute force and panics on any mismatch: group order, element orders,
/// centralizer orders, class sizes (they must partition the group), the
/// pairwise non-conjugacy of representatives, and every power map entry.
pub fn check_class_data(t: &OracleTable) {
    // A full set of class representatives always generates the group.
    let group = elements(&t.reps);
    assert_eq!(BigUint::from(group.len()), *t.table.order(), "group order");
    let mut size_sum = 0usize;
    for (k, class) in t.table.classes().iter().enumerate() {
        let rep = &t.reps[k];
        assert_eq!(rep.order(), class.order, "element order of class {k}");
        assert_eq!(
            BigUint::from(centralizer_order(&group, rep)),
            class.centralizer,
            "centralizer order of class {k}"
        );
        let class_size = conjugacy_class_of(&group, rep).len();
        assert_eq!(BigUint::from(class_size), t.table.class_size(k), "size of class {k}");
        size_sum += class_size;
        for (&p, &target) in &class.power_maps {
            assert!(
                is_conjugate(&group, &rep.power(p as i64), &t.reps[target]),
                "power map {p} of class {k}"
            );
        }
        for (j, other) in t.reps.iter().enumerate().skip(k + 1) {
            assert!(!is_conjugate(&group, rep, other), "classes {k} and {j} coincide");
        }
    }
    assert_eq!(BigUint::from(size_sum), *t.table.order(), "classes partition the group");
}
