//! Fields of values: which characters take all their values in a field `k`,
//! and the subgroup `A^k(G)`.
//!
//! Membership is decided by Galois fixedness. A character with values in
//! `Q(ζ_e)` has values in `Q(ζ_m)` exactly when it is fixed by every
//! `σ_t: ζ_e -> ζ_e^t` with `t ≡ 1 (mod gcd(m, e))`, and in `R` exactly
//! when it equals its complex conjugate.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, is_prime, unit_group_generators};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupHandle};

/// A subfield of `C` that is abelian over `Q`: `Q(ζ_m)`, `R` or `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// `Q(ζ_m)`; `m = 1` is `Q` and an odd prime `m = p` is `Q_p`.
    Cyclotomic(u64),
    Reals,
    Complexes,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec::Cyclotomic(1);

    /// Whether `self ⊆ other` as subfields of `C`.
    pub fn is_subfield_of(&self, other: &FieldSpec) -> bool {
        use FieldSpec::*;
        match (self, other) {
            (_, Complexes) => true,
            (Complexes, _) => false,
            (Reals, Reals) => true,
            (Reals, Cyclotomic(_)) => false,
            (Cyclotomic(m), Reals) => normalize(*m) == 1,
            (Cyclotomic(m), Cyclotomic(n)) => normalize(*n).is_multiple_of(normalize(*m)),
        }
    }

    /// Whether the field contains a primitive `n`-th root of unity.
    pub fn contains_root_of_unity(&self, n: u64) -> bool {
        match self {
            FieldSpec::Complexes => true,
            FieldSpec::Reals => n <= 2,
            FieldSpec::Cyclotomic(m) => FieldSpec::Cyclotomic(n).is_subfield_of(&FieldSpec::Cyclotomic(*m)),
        }
    }

    /// Exponents `t` whose automorphisms `σ_t` of `Q(ζ_e)` generate the
    /// group fixing `self ∩ Q(ζ_e)`. Empty means no condition.
    pub fn fixing_exponents(&self, e: u64) -> Vec<u64> {
        match self {
            FieldSpec::Complexes => Vec::new(),
            FieldSpec::Reals if e <= 2 => Vec::new(),
            FieldSpec::Reals => vec![e - 1],
            FieldSpec::Cyclotomic(m) => {
                let g = gcd(*m, e);
                unit_group_generators(e, |t| t % g == 1 % g)
            }
        }
    }
}

/// `Q(ζ_m) = Q(ζ_{m/2})` when `m ≡ 2 (mod 4)`.
fn normalize(m: u64) -> u64 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Cyclotomic(1) => write!(f, "Q"),
            FieldSpec::Cyclotomic(m) if *m > 2 && is_prime(*m) => write!(f, "Qp({m})"),
            FieldSpec::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
            FieldSpec::Reals => write!(f, "R"),
            FieldSpec::Complexes => write!(f, "C"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `R`, `C`, `Qp(p)` and `Q(zeta_m)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let number = |inner: &str| -> Result<u64> {
            inner
                .parse::<u64>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::input(format!("invalid field `{s}`: expected a positive integer, found `{inner}`")))
        };
        match compact.as_str() {
            "Q" => Ok(FieldSpec::Cyclotomic(1)),
            "R" => Ok(FieldSpec::Reals),
            "C" => Ok(FieldSpec::Complexes),
            _ => {
                if let Some(inner) = compact.strip_prefix("Qp(").and_then(|r| r.strip_suffix(')')) {
                    let p = number(inner)?;
                    if !is_prime(p) {
                        return Err(Error::input(format!("invalid field `{s}`: {p} is not prime")));
                    }
                    Ok(FieldSpec::Cyclotomic(p))
                } else if let Some(inner) = compact.strip_prefix("Q(zeta_").and_then(|r| r.strip_suffix(')')) {
                    Ok(FieldSpec::Cyclotomic(number(inner)?))
                } else {
                    Err(Error::input(format!(
                        "invalid field `{s}`: expected Q, R, C, Qp(p) or Q(zeta_m)"
                    )))
                }
            }
        }
    }
}

/// Whether every value of `χ` lies in `k`.
pub fn has_values_in(t: &CharacterTable, chi: usize, k: &FieldSpec) -> bool {
    let exps = k.fixing_exponents(t.exponent());
    fixed_by_all(t, chi, &exps)
}

fn fixed_by_all(t: &CharacterTable, chi: usize, exps: &[u64]) -> bool {
    exps.iter().all(|&s| {
        t.row(chi)
            .iter()
            .all(|v| v.to_rational().is_some() || v.galois_with(t.basis(), s as i64) == *v)
    })
}

/// Rows with values in `k` and, when `p` is given, degree prime to `p`.
pub fn irr_subset(t: &CharacterTable, k: &FieldSpec, p: Option<u64>) -> Result<Vec<usize>> {
    if let Some(p) = p {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
    }
    let exps = k.fixing_exponents(t.exponent());
    Ok((0..t.num_characters())
        .filter(|&chi| p.is_none_or(|p| !t.degree(chi).is_multiple_of(p)))
        .filter(|&chi| fixed_by_all(t, chi, &exps))
        .collect())
}

/// Linear characters with values in `k`.
pub fn linear_rows_in(t: &CharacterTable, k: &FieldSpec) -> Vec<usize> {
    let exps = k.fixing_exponents(t.exponent());
    (0..t.num_characters())
        .filter(|&chi| t.is_linear(chi) && fixed_by_all(t, chi, &exps))
        .collect()
}

/// `A^k(G)`: the intersection of the kernels of the linear characters of
/// `G` with values in `k`.
pub fn a_k_subgroup(g: &FiniteGroup, t: &CharacterTable, k: &FieldSpec) -> Result<SubgroupHandle> {
    let linear = linear_rows_in(t, k);
    let mut result = g.whole();
    for chi in linear {
        result = result.intersection(&t.character_kernel(g, chi)?)?;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::constructions::build;

    fn setup(spec: &str) -> (FiniteGroup, CharacterTable) {
        let g = build(&spec.parse().unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        (g, t)
    }

    #[test]
    fn parse_and_display() {
        for (text, field, shown) in [
            ("Q", FieldSpec::Cyclotomic(1), "Q"),
            ("R", FieldSpec::Reals, "R"),
            ("C", FieldSpec::Complexes, "C"),
            ("Qp(7)", FieldSpec::Cyclotomic(7), "Qp(7)"),
            ("Q(zeta_21)", FieldSpec::Cyclotomic(21), "Q(zeta_21)"),
            (" Q( zeta_3 ) ", FieldSpec::Cyclotomic(3), "Qp(3)"),
        ] {
            let parsed: FieldSpec = text.parse().unwrap();
            assert_eq!(parsed, field);
            assert_eq!(parsed.to_string(), shown);
        }
        for bad in ["Qp(9)", "Q(zeta_0)", "F", "Qp(x)", ""] {
            assert!(matches!(bad.parse::<FieldSpec>(), Err(Error::Input(_))), "{bad}");
        }
    }

    #[test]
    fn subfield_relation() {
        use FieldSpec::*;
        assert!(Cyclotomic(1).is_subfield_of(&Reals));
        assert!(Reals.is_subfield_of(&Complexes));
        assert!(Cyclotomic(3).is_subfield_of(&Cyclotomic(21)));
        assert!(Cyclotomic(6).is_subfield_of(&Cyclotomic(3)));
        assert!(!Cyclotomic(7).is_subfield_of(&Reals));
        assert!(!Cyclotomic(7).contains_root_of_unity(3));
        assert!(Cyclotomic(21).contains_root_of_unity(3));
    }

    #[test]
    fn c5_linear_character() {
        let (_, t) = setup("C(5)");
        for chi in 0..5 {
            assert!(has_values_in(&t, chi, &FieldSpec::Complexes));
            assert!(has_values_in(&t, chi, &FieldSpec::Cyclotomic(5)));
            assert_eq!(has_values_in(&t, chi, &FieldSpec::RATIONALS), chi == 0);
            assert_eq!(has_values_in(&t, chi, &FieldSpec::Reals), chi == 0);
        }
    }

    #[test]
    fn a4_examples() {
        let (g, t) = setup("A(4)");
        let three = (0..4).find(|&c| t.degree(c) == 3).unwrap();
        assert!(has_values_in(&t, three, &FieldSpec::RATIONALS));
        assert_eq!(a_k_subgroup(&g, &t, &FieldSpec::RATIONALS).unwrap().order(), 12);
        let v4 = a_k_subgroup(&g, &t, &FieldSpec::Cyclotomic(3)).unwrap();
        assert_eq!(v4, g.derived_subgroup());
        assert_eq!(a_k_subgroup(&g, &t, &FieldSpec::Complexes).unwrap(), g.derived_subgroup());
    }

    #[test]
    fn subset_examples() {
        let (_, t) = setup("S(4)");
        assert_eq!(irr_subset(&t, &FieldSpec::Complexes, None).unwrap().len(), 5);
        let rows = irr_subset(&t, &FieldSpec::RATIONALS, Some(2)).unwrap();
        let degs: Vec<u64> = rows.iter().map(|&c| t.degree(c)).collect();
        assert_eq!(degs, vec![1, 1, 3, 3]);
        assert!(irr_subset(&t, &FieldSpec::RATIONALS, Some(4)).is_err());

        let (_, t) = setup("F(7,3)");
        let rows = irr_subset(&t, &FieldSpec::Complexes, Some(7)).unwrap();
        let degs: Vec<u64> = rows.iter().map(|&c| t.degree(c)).collect();
        assert_eq!(degs, vec![1, 1, 1, 3, 3]);
    }
}
