//! Exact consistency checks for character tables.

use crate::arith::unit_group_generators;
use crate::group::FiniteGroup;

use super::CharacterTable;

/// Failing index pairs of the two orthogonality relations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrthogonalityReport {
    /// Character pairs `(χ, ψ)` with `Σ_c |C_c| χ(c) conj(ψ(c)) != |G| δ`.
    pub row_failures: Vec<(usize, usize)>,
    /// Class pairs `(c, d)` with `Σ_χ χ(c) conj(χ(d)) != |C_G(c)| δ`.
    pub column_failures: Vec<(usize, usize)>,
    /// Whether `Σ χ(1)² = |G|`.
    pub degree_sum_ok: bool,
    /// Whether the number of rows equals the number of classes.
    pub square: bool,
}

impl OrthogonalityReport {
    pub fn is_ok(&self) -> bool {
        self.row_failures.is_empty() && self.column_failures.is_empty() && self.degree_sum_ok && self.square
    }
}

/// Dense accumulator for sums of products of cyclotomic integers.
struct Accumulator {
    e: u64,
    slots: Vec<i128>,
    touched: Vec<u32>,
}

impl Accumulator {
    fn new(e: u64) -> Self {
        Accumulator {
            e,
            slots: vec![0; e as usize],
            touched: Vec::new(),
        }
    }

    /// Adds `weight · a · conj(b)`.
    fn add_product(&mut self, weight: i128, a: &[(u32, i64)], b: &[(u32, i64)]) {
        for &(i, x) in a {
            for &(j, y) in b {
                let idx = ((i as u64 + self.e - j as u64) % self.e) as u32;
                if self.slots[idx as usize] == 0 {
                    self.touched.push(idx);
                }
                self.slots[idx as usize] += weight * x as i128 * y as i128;
            }
        }
    }

    /// Whether the accumulated value equals the integer `target`; resets.
    fn finish_equals(&mut self, t: &CharacterTable, target: i128) -> bool {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut canon: Vec<(u32, i128)> = Vec::new();
        let mut buf = Vec::new();
        for &idx in &self.touched {
            let c = std::mem::take(&mut self.slots[idx as usize]);
            if c == 0 {
                continue;
            }
            t.basis().expand_root(idx as u64, &mut buf);
            canon.extend(buf.iter().map(|&(x, s)| (x, s as i128 * c)));
        }
        self.touched.clear();
        canon.sort_unstable_by_key(|p| p.0);
        let mut merged: Vec<(u32, i128)> = Vec::new();
        for (x, c) in canon {
            match merged.last_mut() {
                Some(last) if last.0 == x => last.1 += c,
                _ => merged.push((x, c)),
            }
        }
        merged.retain(|p| p.1 != 0);
        match merged.as_slice() {
            [] => target == 0,
            [(0, c)] => *c == target,
            _ => false,
        }
    }
}

/// Checks both orthogonality relations exactly.
///
/// Values with a non-integral coefficient cannot be character values; every
/// pair involving one is reported as a failure.
pub fn verify_orthogonality(t: &CharacterTable) -> OrthogonalityReport {
    let r = t.num_characters();
    let k = t.classes().num_classes();
    let sizes = t.classes().sizes();
    let order = t.group_order() as i128;
    let ints: Vec<Vec<Option<Vec<(u32, i64)>>>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|v| v.integer_terms()).collect())
        .collect();
    let mut acc = Accumulator::new(t.exponent());
    let mut report = OrthogonalityReport {
        degree_sum_ok: t.degrees().iter().map(|&d| d as i128 * d as i128).sum::<i128>() == order,
        square: r == k,
        ..Default::default()
    };

    for a in 0..r {
        for b in a..r {
            let mut ok = true;
            for c in 0..k {
                match (&ints[a][c], &ints[b][c]) {
                    (Some(x), Some(y)) => acc.add_product(sizes[c] as i128, x, y),
                    _ => ok = false,
                }
            }
            let target = if a == b { order } else { 0 };
            if !acc.finish_equals(t, target) || !ok {
                report.row_failures.push((a, b));
            }
        }
    }
    for c in 0..k {
        for d in c..k {
            let mut ok = true;
            for row in &ints {
                match (&row[c], &row[d]) {
                    (Some(x), Some(y)) => acc.add_product(1, x, y),
                    _ => ok = false,
                }
            }
            let target = if c == d { order / sizes[c] as i128 } else { 0 };
            if !acc.finish_equals(t, target) || !ok {
                report.column_failures.push((c, d));
            }
        }
    }
    report
}

/// Checks `χ^{σ_k}(g) = χ(g^k)` for every character, class and unit `k`
/// modulo `e`, returning the failing `(χ, class, k)` triples.
///
/// Only a generating set of the unit group is tested directly. For each
/// generator `k` this checks that the value-level conjugate `χ^{σ_k}` is a
/// row of the table and agrees with `χ` composed with the `k`-th power map,
/// for every row `χ`. That statement is closed under products of exponents,
/// so it then holds for every unit.
pub fn galois_cross_check(g: &FiniteGroup, t: &CharacterTable) -> Vec<(usize, usize, u64)> {
    let e = t.exponent();
    let mut failures = Vec::new();
    for k in unit_group_generators(e, |_| true) {
        let power = t.classes().power_map(g, k as i64);
        for chi in 0..t.num_characters() {
            let image: Vec<_> = t.row(chi).iter().map(|v| v.galois_with(t.basis(), k as i64)).collect();
            let in_table = t.find_row(&image).is_some();
            for (c, v) in image.iter().enumerate() {
                if !in_table || *v != *t.value(chi, power[c]) {
                    failures.push((chi, c, k));
                }
            }
        }
    }
    failures
}
