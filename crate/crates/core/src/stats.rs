//! Average character degrees as exact rationals, and closed forms.

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::fieldvals::{irr_subset, FieldSpec};
use crate::group::{FiniteGroup, SubgroupHandle};
use crate::rational::Rational;

/// Which characters to average over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcdQuery {
    pub field: FieldSpec,
    /// Keep only degrees not divisible by this prime.
    pub p_filter: Option<u64>,
    /// Average over `Irr(G/N)` instead, as the rows whose kernel contains `N`.
    pub quotient_by: Option<SubgroupHandle>,
}

impl AcdQuery {
    pub fn new(field: FieldSpec) -> Self {
        AcdQuery {
            field,
            p_filter: None,
            quotient_by: None,
        }
    }

    pub fn p_prime(mut self, p: u64) -> Self {
        self.p_filter = Some(p);
        self
    }

    pub fn quotient(mut self, n: SubgroupHandle) -> Self {
        self.quotient_by = Some(n);
        self
    }
}

/// Exact mean of a nonempty list.
pub fn ave(values: &[Rational]) -> Result<Rational> {
    if values.is_empty() {
        return Err(Error::domain("average of an empty list"));
    }
    let sum: Rational = values.iter().sum();
    Ok(sum / Rational::from(values.len()))
}

/// Rows selected by `q`.
pub fn selected_rows(g: &FiniteGroup, t: &CharacterTable, q: &AcdQuery) -> Result<Vec<usize>> {
    let mut rows = irr_subset(t, &q.field, q.p_filter)?;
    if let Some(n) = &q.quotient_by {
        g.check_parent(n)?;
        if !g.is_normal(n) {
            return Err(Error::input("quotient subgroup is not normal"));
        }
        let classes = t.classes();
        let mut meets = vec![false; classes.num_classes()];
        for &x in n.members() {
            meets[classes.class_of(x)] = true;
        }
        rows.retain(|&chi| {
            let deg = t.value(chi, 0);
            meets
                .iter()
                .enumerate()
                .all(|(c, &m)| !m || t.value(chi, c) == deg)
        });
    }
    Ok(rows)
}

/// Average degree over the characters selected by `q`.
pub fn acd(g: &FiniteGroup, t: &CharacterTable, q: &AcdQuery) -> Result<Rational> {
    let rows = selected_rows(g, t, q)?;
    let degrees: Vec<Rational> = rows.iter().map(|&chi| Rational::from(t.degree(chi))).collect();
    ave(&degrees)
}

fn big_pow(p: u64, x: u64) -> BigInt {
    num_traits::pow(BigInt::from(p), x as usize)
}

/// `f(x) = 2(p^x + 1)/(p^x + 3)` for integers `x >= 1`.
pub fn bound_f(p: u64, x: &Rational) -> Result<Rational> {
    if p < 2 {
        return Err(Error::domain(format!("bound_f needs p >= 2, got {p}")));
    }
    if !x.is_integer() || *x < 1 {
        return Err(Error::domain(format!("bound_f is evaluated at integers x >= 1, got {x}")));
    }
    let x = x
        .to_i64()
        .ok_or_else(|| Error::domain("exponent too large"))? as u64;
    let px = big_pow(p, x);
    Rational::from_bigints(2 * (&px + 1), px + 3)
}

/// `2(p + 1)/(p + 3)`.
pub fn first_bound(p: u64) -> Rational {
    Rational::new(2 * (p as i64 + 1), p as i64 + 3)
}

/// `d (index + p^a - 1) / (d·index + p^a - 1)`, the average over `Irr_k(G)`
/// for `G = V ⋊ H` with `|V| = p^a`, `|H| = d` abelian, and
/// `index = |H : A^k(H)|`.
pub fn abelian3_formula(p: u64, a: u32, d: u64, index: u64) -> Result<Rational> {
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    if a == 0 || d == 0 || index == 0 {
        return Err(Error::input("a, d and index must be positive"));
    }
    let q = big_pow(p, a as u64);
    let q1 = &q - 1;
    if &q1 % d != BigInt::from(0) {
        return Err(Error::input(format!("{d} does not divide {p}^{a} - 1")));
    }
    if !d.is_multiple_of(index) {
        return Err(Error::input(format!("{index} does not divide {d}")));
    }
    let d = BigInt::from(d);
    let index = BigInt::from(index);
    Rational::from_bigints(&d * (&index + &q1), &d * &index + &q1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::constructions::{build, dihedral};
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn averages() {
        assert_eq!(ave(&ints(&[1, 1, 2])).unwrap(), r(4, 3));
        assert_eq!(ave(&ints(&[1, 1, 2, 3, 3])).unwrap(), r(2, 1));
        assert_eq!(ave(&ints(&[1, 1, 2, 3])).unwrap(), r(7, 4));
        assert!(matches!(ave(&[]), Err(Error::Domain(_))));
    }

    #[test]
    fn acd_examples() {
        let g = build(&"A(5)".parse().unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(acd(&g, &t, &AcdQuery::new(FieldSpec::Complexes)).unwrap(), r(16, 5));

        for p in [3, 5, 7, 11, 13] {
            let g = dihedral(p).unwrap();
            let t = character_table(&g).unwrap();
            let q = AcdQuery::new(FieldSpec::Complexes).p_prime(p);
            assert_eq!(acd(&g, &t, &q).unwrap(), first_bound(p), "p = {p}");
        }

        let g = build(&"S(4)".parse().unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        let v4 = g.minimal_normal_subgroups().unwrap().remove(0);
        assert_eq!(v4.order(), 4);
        let q = AcdQuery::new(FieldSpec::Complexes).quotient(v4);
        assert_eq!(acd(&g, &t, &q).unwrap(), r(4, 3));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bound_f(3, &Rational::from(1)).unwrap(), r(4, 3));
        assert_eq!(bound_f(5, &Rational::from(1)).unwrap(), r(3, 2));
        for p in [2, 3, 5] {
            let f: Vec<Rational> = (1..=3).map(|x| bound_f(p, &Rational::from(x)).unwrap()).collect();
            assert!(f[0] < f[1] && f[1] < f[2]);
        }
        assert!(matches!(bound_f(3, &Rational::from(0)), Err(Error::Domain(_))));
        assert!(matches!(bound_f(3, &r(3, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(abelian3_formula(7, 1, 3, 3).unwrap(), r(9, 5));
        assert_eq!(abelian3_formula(5, 1, 4, 4).unwrap(), r(8, 5));
        for (p, a) in [(3, 1), (5, 1), (3, 2), (7, 2)] {
            let pa = (p as i64).pow(a);
            assert_eq!(abelian3_formula(p, a, 2, 2).unwrap(), r(2 * (pa + 1), pa + 3));
        }
        assert!(abelian3_formula(7, 1, 4, 4).is_err());
        assert!(abelian3_formula(7, 1, 6, 4).is_err());
        assert!(abelian3_formula(6, 1, 5, 5).is_err());
    }

    fn rationals(min: i64) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((min..50i64, 1..8i64).prop_map(|(n, d)| r(n, d)), 1..12)
    }

    proptest! {
        #[test]
        fn concatenation_keeps_lower_bound(a in rationals(-20), b in rationals(-20), dn in -10..10i64, dd in 1..5i64) {
            let d = r(dn, dd);
            let min_b = b.iter().min().unwrap().clone();
            prop_assume!(min_b >= d && ave(&a).unwrap() >= d);
            let mut all = a.clone();
            all.extend(b);
            prop_assert!(ave(&all).unwrap() >= d);
        }

        #[test]
        fn bound_is_increasing(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), x in 1..12i64) {
            let f1 = bound_f(p, &Rational::from(x)).unwrap();
            let f2 = bound_f(p, &Rational::from(x + 1)).unwrap();
            prop_assert!(f1 < f2);
            prop_assert!(f2 < 2);
        }
    }
}
