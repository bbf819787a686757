//! Exact elements of the cyclotomic field `Q(ζ_e)`.
//!
//! Values are stored sparsely on a fixed basis of `Q(ζ_e)` consisting of
//! powers of `ζ_e`. With `e = ∏ p^k`, the field is the tensor product of the
//! `Q(ζ_{p^k})`, each with power basis `ζ_{p^k}^a`, `0 <= a < φ(p^k)`, where
//! `ζ_{p^k} = ζ_e^{e/p^k}`. The basis elements are the products of those,
//! which are again powers of `ζ_e`. Rewriting an arbitrary `ζ_e^j` uses
//! only the relation `Φ_{p^k}(ζ_{p^k}) = 0` factor by factor:
//!
//! ```text
//! ζ^{(p-1)p^(k-1) + r} = - Σ_{i<p-1} ζ^{r + i p^(k-1)}      (r < p^(k-1))
//! ```
//!
//! so every root of unity expands into at most `∏ (p-1)` basis terms with
//! coefficients `±1`. The representation is unique: two values are equal
//! exactly when their term lists are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{factorize, gcd, mod_inverse};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy)]
struct PrimePowerPart {
    p: u32,
    /// `p^(k-1)`
    lower: u32,
    /// `p^k`
    full: u32,
    /// `e / p^k`
    cofactor: u32,
    /// Inverse of `cofactor` modulo `p^k`.
    cofactor_inv: u32,
}

/// Precomputed basis data for `Q(ζ_e)`.
#[derive(Debug, Clone)]
pub struct CyclotomicBasis {
    conductor: u32,
    parts: Vec<PrimePowerPart>,
}

impl CyclotomicBasis {
    pub fn new(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let e = conductor as u64;
        let parts = factorize(e)
            .into_iter()
            .map(|(p, k)| {
                let full = p.pow(k);
                let cofactor = e / full;
                PrimePowerPart {
                    p: p as u32,
                    lower: (full / p) as u32,
                    full: full as u32,
                    cofactor: cofactor as u32,
                    cofactor_inv: mod_inverse(cofactor % full, full).unwrap() as u32,
                }
            })
            .collect();
        CyclotomicBasis { conductor, parts }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Dimension of `Q(ζ_e)` over `Q`.
    pub fn dimension(&self) -> usize {
        self.parts
            .iter()
            .map(|pp| ((pp.p - 1) * pp.lower) as usize)
            .product()
    }

    pub fn is_basis_exponent(&self, j: u32) -> bool {
        self.parts.iter().all(|pp| {
            let a = (j as u64 * pp.cofactor_inv as u64 % pp.full as u64) as u32;
            a < (pp.p - 1) * pp.lower
        })
    }

    /// Canonical expansion of `ζ_e^j` as `(basis exponent, ±1)` terms.
    pub fn expand_root(&self, j: u64, out: &mut Vec<(u32, i64)>) {
        out.clear();
        out.push((0, 1));
        let e = self.conductor as u64;
        let j = j % e;
        let mut next = Vec::new();
        for pp in &self.parts {
            let full = pp.full as u64;
            let a = j * pp.cofactor_inv as u64 % full;
            let phi = ((pp.p - 1) * pp.lower) as u64;
            let shift = |a: u64| a * pp.cofactor as u64;
            next.clear();
            if a < phi {
                for &(x, c) in out.iter() {
                    next.push((((x as u64 + shift(a)) % e) as u32, c));
                }
            } else {
                let r = a - phi;
                for i in 0..(pp.p - 1) as u64 {
                    let s = shift(r + i * pp.lower as u64);
                    for &(x, c) in out.iter() {
                        next.push((((x as u64 + s) % e) as u32, -c));
                    }
                }
            }
            std::mem::swap(out, &mut next);
        }
    }

    /// Canonical coefficients of `Σ coeff·ζ_e^j` for integer coefficients,
    /// sorted by exponent with zeros dropped.
    pub fn reduce_integer_terms(&self, terms: impl IntoIterator<Item = (u64, i64)>) -> Vec<(u32, i64)> {
        let mut acc: Vec<(u32, i64)> = Vec::new();
        let mut buf = Vec::new();
        for (j, c) in terms {
            if c == 0 {
                continue;
            }
            self.expand_root(j, &mut buf);
            acc.extend(buf.iter().map(|&(x, s)| (x, s * c)));
        }
        acc.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(u32, i64)> = Vec::with_capacity(acc.len());
        for (x, c) in acc {
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 += c,
                _ => out.push((x, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        out
    }

    /// Canonical value of `Σ coeff·ζ_e^j` for integer coefficients.
    pub fn from_integer_terms(&self, terms: impl IntoIterator<Item = (u64, i64)>) -> CyclotomicValue {
        CyclotomicValue {
            conductor: self.conductor,
            terms: self
                .reduce_integer_terms(terms)
                .into_iter()
                .map(|(j, c)| (j, Rational::from_integer(c)))
                .collect(),
        }
    }

    /// Canonical value of `Σ coeff·ζ_e^j`.
    pub fn from_terms<'a>(&self, terms: impl IntoIterator<Item = (u64, &'a Rational)>) -> CyclotomicValue {
        let mut acc: BTreeMap<u32, Rational> = BTreeMap::new();
        let mut buf = Vec::new();
        for (j, c) in terms {
            if c.is_zero() {
                continue;
            }
            self.expand_root(j, &mut buf);
            for &(x, s) in &buf {
                let entry = acc.entry(x).or_insert_with(Rational::zero);
                if s > 0 {
                    *entry += c;
                } else {
                    *entry = &*entry - c;
                }
            }
        }
        CyclotomicValue {
            conductor: self.conductor,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// An element of `Q(ζ_e)` in canonical form.
///
/// `terms` lists `(exponent, coefficient)` pairs with nonzero coefficients
/// in increasing exponent order; each exponent indexes a basis element
/// `ζ_e^j` of [`CyclotomicBasis`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicValue {
    conductor: u32,
    terms: Vec<(u32, Rational)>,
}

impl CyclotomicValue {
    pub fn zero(conductor: u32) -> Self {
        CyclotomicValue {
            conductor,
            terms: Vec::new(),
        }
    }

    pub fn from_rational(conductor: u32, r: Rational) -> Self {
        let terms = if r.is_zero() { Vec::new() } else { vec![(0, r)] };
        CyclotomicValue { conductor, terms }
    }

    pub fn from_integer(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(n))
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(conductor, 1)
    }

    /// `ζ_e^j`.
    pub fn root(conductor: u32, j: i64) -> Self {
        let e = conductor as i64;
        CyclotomicBasis::new(conductor).from_integer_terms([(j.rem_euclid(e) as u64, 1)])
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficients as `i64`, if all are integers that fit.
    pub fn integer_terms(&self) -> Option<Vec<(u32, i64)>> {
        self.terms
            .iter()
            .map(|(j, c)| c.to_i64().map(|c| (*j, c)))
            .collect()
    }

    fn map_exponents(&self, basis: &CyclotomicBasis, k: i64) -> Self {
        let e = self.conductor as i64;
        basis.from_terms(
            self.terms
                .iter()
                .map(|(j, c)| ((*j as i64 * k).rem_euclid(e) as u64, c)),
        )
    }

    /// Image under the Galois automorphism `ζ_e -> ζ_e^k`, `gcd(k, e) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        assert_eq!(
            gcd(k.rem_euclid(self.conductor as i64) as u64, self.conductor as u64),
            1,
            "Galois exponent must be a unit modulo the conductor"
        );
        self.galois_with(&CyclotomicBasis::new(self.conductor), k)
    }

    pub fn galois_with(&self, basis: &CyclotomicBasis, k: i64) -> Self {
        debug_assert_eq!(basis.conductor, self.conductor);
        self.map_exponents(basis, k)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.conductor);
        }
        CyclotomicValue {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(j, c)| (*j, c * r)).collect(),
        }
    }

    pub fn mul_with(&self, basis: &CyclotomicBasis, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let e = self.conductor as u64;
        let products: Vec<(u64, Rational)> = self
            .terms
            .iter()
            .flat_map(|(i, a)| {
                other
                    .terms
                    .iter()
                    .map(move |(j, b)| ((*i as u64 + *j as u64) % e, a * b))
            })
            .collect();
        basis.from_terms(products.iter().map(|(j, c)| (*j, c)))
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, other: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let mut acc: BTreeMap<u32, Rational> = self.terms.iter().cloned().collect();
        for (j, c) in &other.terms {
            *acc.entry(*j).or_insert_with(Rational::zero) += c;
        }
        CyclotomicValue {
            conductor: self.conductor,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, other: &CyclotomicValue) -> CyclotomicValue {
        self + &(-other)
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn mul(self, other: &CyclotomicValue) -> CyclotomicValue {
        self.mul_with(&CyclotomicBasis::new(self.conductor), other)
    }
}

impl fmt::Display for CyclotomicValue {
    /// GAP-like notation: `E(e)^j` is `ζ_e^j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (j, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let coeff = if c.is_integer() {
                c.numer().to_string()
            } else {
                format!("({c})")
            };
            if *j == 0 {
                f.write_str(&coeff)?;
            } else {
                write!(f, "{coeff}*E({})^{j}", self.conductor)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[Q(E({}))] {}", self.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dimensions() {
        for (e, phi) in [(1, 1), (2, 1), (4, 2), (6, 2), (12, 4), (620, 240), (12656, 5376)] {
            let b = CyclotomicBasis::new(e);
            assert_eq!(b.dimension(), phi);
            assert_eq!((0..e).filter(|&j| b.is_basis_exponent(j)).count(), phi);
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [2u32, 3, 4, 5, 6, 8, 9, 12, 15, 30, 36] {
            let b = CyclotomicBasis::new(e);
            let total = b.from_integer_terms((0..e as u64).map(|j| (j, 1)));
            assert!(total.is_zero(), "sum of all {e}-th roots");
        }
    }

    #[test]
    fn small_identities() {
        // ζ_3 + ζ_3^2 = -1
        let b = CyclotomicBasis::new(3);
        let v = b.from_integer_terms([(1, 1), (2, 1)]);
        assert_eq!(v.to_rational(), Some(Rational::from_integer(-1)));
        // ζ_4^2 = -1 and ζ_2 = -1
        assert_eq!(CyclotomicValue::root(4, 2), CyclotomicValue::from_integer(4, -1));
        assert_eq!(CyclotomicValue::root(2, 1), CyclotomicValue::from_integer(2, -1));
        // ζ_6 = -ζ_3^2 expressed in Q(ζ_6)
        let z6 = CyclotomicValue::root(6, 1);
        assert_eq!(&z6 * &z6, CyclotomicValue::root(6, 2));
        assert_eq!(&z6 + &CyclotomicValue::root(6, 4), CyclotomicValue::zero(6));
        assert_eq!(CyclotomicValue::root(5, 1).galois(2), CyclotomicValue::root(5, 2));
        assert_eq!(CyclotomicValue::root(5, 1).conj(), CyclotomicValue::root(5, 4));
    }

    #[test]
    fn galois_fixes_rationals() {
        let v = CyclotomicValue::from_rational(12, Rational::new(3, 7));
        for k in [1, 5, 7, 11] {
            assert_eq!(v.galois(k), v);
        }
    }

    fn value(e: u32) -> impl Strategy<Value = CyclotomicValue> {
        prop::collection::vec((0..e as u64, -3i64..4), 0..6)
            .prop_map(move |t| CyclotomicBasis::new(e).from_integer_terms(t))
    }

    fn conductor_and_values() -> impl Strategy<Value = (u32, CyclotomicValue, CyclotomicValue, CyclotomicValue)> {
        prop::sample::select(vec![1u32, 2, 3, 4, 6, 8, 9, 10, 12, 15, 20, 21, 24, 30, 36, 45])
            .prop_flat_map(|e| (Just(e), value(e), value(e), value(e)))
    }

    proptest! {
        #[test]
        fn ring_axioms((_e, a, b, c) in conductor_and_values()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn galois_is_a_ring_automorphism((e, a, b, _c) in conductor_and_values(), k in 1i64..200) {
            prop_assume!(gcd(k as u64, e as u64) == 1);
            prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
            prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
            prop_assert_eq!(a.conj().conj(), a.clone());
        }

        #[test]
        fn canonical_form_is_independent_of_presentation(e in prop::sample::select(vec![4u32, 6, 12, 18, 30]), j in 0u64..1000) {
            // ζ^j written directly versus as ζ^(j - e) · ζ^e
            let b = CyclotomicBasis::new(e);
            let direct = b.from_integer_terms([(j % e as u64, 1)]);
            let via = &b.from_integer_terms([((j + 1) % e as u64, 1)]) * &b.from_integer_terms([(e as u64 - 1, 1)]);
            prop_assert_eq!(direct.clone(), via);
            for &(x, _) in direct.terms() {
                prop_assert!(b.is_basis_exponent(x));
            }
        }
    }
}
