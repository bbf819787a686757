//! Exact statistics of the named fixtures.

use acdlab_core::arith::divisors;
use acdlab_core::constructions::{build, dihedral, parse_group_spec};
use acdlab_core::fieldvals::a_k_subgroup;
use acdlab_core::stats::{abelian3_formula, acd, first_bound, AcdQuery};
use acdlab_core::{character_table, CharacterTable, FieldSpec, FiniteGroup, Rational};

fn load(spec: &str) -> (FiniteGroup, CharacterTable) {
    let g = build(&parse_group_spec(spec).unwrap()).unwrap();
    let t = character_table(&g).unwrap();
    (g, t)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn dihedral_p_prime_average() {
    for p in [3, 5, 7, 11, 13] {
        let g = dihedral(p).unwrap();
        let t = character_table(&g).unwrap();
        let value = acd(&g, &t, &AcdQuery::new(FieldSpec::Complexes).p_prime(p)).unwrap();
        // Two linear characters and (p - 1)/2 of degree 2.
        let pi = p as i64;
        assert_eq!(value, r(2 + (pi - 1), 2 + (pi - 1) / 2));
        assert_eq!(value, r(2 * (pi + 1), pi + 3));
        assert_eq!(value, first_bound(p));
    }
}

#[test]
fn symmetric_four() {
    let (g, t) = load("S(4)");
    for field in [FieldSpec::Complexes, FieldSpec::RATIONALS, FieldSpec::Reals] {
        assert_eq!(acd(&g, &t, &AcdQuery::new(field)).unwrap(), r(1 + 1 + 2 + 3 + 3, 5));
    }
    let q = AcdQuery::new(FieldSpec::RATIONALS).p_prime(2);
    assert_eq!(acd(&g, &t, &q).unwrap(), r(1 + 1 + 3 + 3, 4));
}

#[test]
fn frobenius_twenty_one() {
    let (g, t) = load("F(7,3)");
    let q = AcdQuery::new(FieldSpec::Complexes).p_prime(7);
    assert_eq!(acd(&g, &t, &q).unwrap(), r(1 + 1 + 1 + 3 + 3, 5));
    assert!(!g.is_p_nilpotent(7).unwrap());
}

#[test]
fn alternating_five() {
    let (g, t) = load("A(5)");
    assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
    assert_eq!(acd(&g, &t, &AcdQuery::new(FieldSpec::Complexes)).unwrap(), r(16, 5));
}

/// `G = C2 × S3` with `K` the central `C2`: both sides equal the average of
/// the degrees `1, 1, 2` of `S3`.
#[test]
fn central_quotient() {
    let (g, t) = load("C(2)*S(3)");
    let z = g.center();
    assert_eq!(z.order(), 2);
    assert!(z.intersection(&g.derived_subgroup()).unwrap().is_trivial());
    let whole = acd(&g, &t, &AcdQuery::new(FieldSpec::Complexes)).unwrap();
    let quotient = acd(&g, &t, &AcdQuery::new(FieldSpec::Complexes).quotient(z)).unwrap();
    assert_eq!(whole, r(4, 3));
    assert_eq!(quotient, r(4, 3));
}

fn complement_index(g: &FiniteGroup, k: &FieldSpec) -> u64 {
    let h = g.subgroup_as_group(&g.point_stabilizer(0));
    let ht = character_table(&h).unwrap();
    (h.order() / a_k_subgroup(&h, &ht, k).unwrap().order()) as u64
}

#[test]
fn abelian_complement_exceptions() {
    // |V| = 4 and 7 with d = 3 and k containing a cube root of unity.
    for (spec, q) in [("SD(2,2,3)", 4i64), ("F(7,3)", 7)] {
        let (g, t) = load(spec);
        for k in [FieldSpec::Cyclotomic(21), FieldSpec::Complexes] {
            let (p, a) = if q == 4 { (2, 2) } else { (7, 1) };
            if !k.contains_root_of_unity(p) {
                continue;
            }
            let value = acd(&g, &t, &AcdQuery::new(k).p_prime(p)).unwrap();
            assert_eq!(complement_index(&g, &k), 3);
            assert_eq!(value, r(3 * (q + 2), q + 8), "{spec} {k}");
            assert_eq!(value, abelian3_formula(p, a, 3, 3).unwrap());
        }
    }
    // d = p^a - 1 and k = C.
    for (p, a) in [(3u64, 1u32), (5, 1), (2, 3), (3, 2), (11, 1)] {
        let q = p.pow(a);
        let (g, t) = load(&format!("SD({p},{a},{})", q - 1));
        let value = acd(&g, &t, &AcdQuery::new(FieldSpec::Complexes).p_prime(p)).unwrap();
        let qi = q as i64;
        assert_eq!(value, r(2 * (qi - 1), qi), "q = {q}");
    }
}

#[test]
fn abelian_complement_formula_small() {
    for (p, a) in [(2u64, 2u32), (2, 3), (3, 2), (5, 1), (7, 1), (13, 1)] {
        let q = p.pow(a);
        for d in divisors(q - 1).into_iter().filter(|&d| d > 1) {
            let Ok(g) = build(&acdlab_core::GroupSpec::field_semidirect(p, a, d)) else {
                continue;
            };
            let t = character_table(&g).unwrap();
            for m in divisors(d * p).into_iter().filter(|m| m % p == 0) {
                let k = FieldSpec::Cyclotomic(m);
                let value = acd(&g, &t, &AcdQuery::new(k).p_prime(p)).unwrap();
                let expected = abelian3_formula(p, a, d, complement_index(&g, &k)).unwrap();
                assert_eq!(value, expected, "SD({p},{a},{d}) over {k}");
                assert!(value >= first_bound(p));
            }
        }
    }
}

#[test]
fn nonabelian_complements_reach_two() {
    let (g, t) = load("S(4)");
    let q = AcdQuery::new(FieldSpec::RATIONALS).p_prime(2);
    assert_eq!(acd(&g, &t, &q).unwrap(), r(2, 1));
    for spec in ["MAT(3;[[0,2],[1,0]],[[1,1],[1,2]])", "MAT(5;[[0,4],[1,4]],[[0,1],[1,0]])"] {
        let (g, t) = load(spec);
        let p = if spec.starts_with("MAT(3") { 3 } else { 5 };
        for k in [FieldSpec::Cyclotomic(p), FieldSpec::Complexes] {
            let value = acd(&g, &t, &AcdQuery::new(k).p_prime(p)).unwrap();
            assert!(value > r(2, 1), "{spec} {k}: {value}");
        }
    }
}

#[test]
fn builds_are_reproducible() {
    for spec in ["S(4)", "SD(2,3,7)", "MAT(3;[[0,2],[1,0]],[[1,1],[1,2]])", "C(3)*F(7,3)"] {
        let a = load(spec);
        let b = load(spec);
        assert_eq!(a.0.elements(), b.0.elements());
        assert_eq!(a.1.rows(), b.1.rows());
    }
}
