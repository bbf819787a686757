use std::collections::HashSet;

use super::GroupSpec;
use crate::arith::{divisors, is_prime, multiplicative_order};
use crate::error::{Error, Result};

/// Module orders `p^a <= 125` in increasing order, as `(p, a)`.
fn prime_powers_up_to(limit: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in 2..=limit {
        for p in (2..=q).filter(|&p| is_prime(p)) {
            let mut a = 1;
            let mut pa = p;
            while pa < q {
                pa *= p;
                a += 1;
            }
            if pa == q {
                out.push((p, a));
                break;
            }
        }
    }
    out
}

fn mat(p: u64, matrices: &[[[u64; 2]; 2]]) -> GroupSpec {
    GroupSpec::MatrixSemidirect {
        p,
        matrices: matrices
            .iter()
            .map(|m| m.iter().map(|row| row.to_vec()).collect())
            .collect(),
    }
}

/// The deterministic audit catalog.
///
/// Cyclic groups up to order 60, dihedral groups `D(2m)` for `2 <= m <= 25`,
/// `S(n)`/`A(n)` for `n <= 5`, the quaternion group, every valid field
/// semidirect product with module order at most 125, a set of matrix
/// semidirect products with nonabelian complements, and a few direct
/// products.
pub fn default_catalog() -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    specs.extend((1..=60).map(GroupSpec::Cyclic));
    specs.extend((2..=25).map(GroupSpec::Dihedral));
    specs.extend([3, 4, 5].map(GroupSpec::Symmetric));
    specs.extend([4, 5].map(GroupSpec::Alternating));
    specs.push(GroupSpec::Dicyclic(8));

    for (p, a) in prime_powers_up_to(125) {
        let q = p.pow(a);
        for d in divisors(q - 1) {
            let valid = if d == 1 {
                a > 1
            } else {
                multiplicative_order(p, d) == Some(a as u64)
            };
            if valid {
                specs.push(GroupSpec::FieldSemidirect { p, a, d });
            }
        }
    }

    specs.extend([
        // C3 and S3 on F_2^2: A4 and S4.
        mat(2, &[[[0, 1], [1, 1]]]),
        mat(2, &[[[0, 1], [1, 1]], [[0, 1], [1, 0]]]),
        // Faithful 2-dimensional S3-modules.
        mat(5, &[[[0, 4], [1, 4]], [[0, 1], [1, 0]]]),
        mat(7, &[[[0, 6], [1, 6]], [[0, 1], [1, 0]]]),
        // Q8, D8, SL(2,3) and GL(2,3) on F_3^2.
        mat(3, &[[[0, 2], [1, 0]], [[1, 1], [1, 2]]]),
        mat(3, &[[[0, 1], [1, 0]], [[1, 0], [0, 2]]]),
        mat(3, &[[[0, 2], [1, 0]], [[1, 1], [1, 2]], [[1, 1], [0, 1]]]),
        mat(3, &[[[0, 2], [1, 0]], [[1, 1], [1, 2]], [[1, 1], [0, 1]], [[2, 0], [0, 1]]]),
        // D8 on F_5^2.
        mat(5, &[[[0, 1], [1, 0]], [[1, 0], [0, 4]]]),
    ]);

    let product = |fs: Vec<GroupSpec>| GroupSpec::direct_product(fs);
    specs.extend([
        product(vec![GroupSpec::Cyclic(2), GroupSpec::Symmetric(3)]),
        product(vec![GroupSpec::Cyclic(3), GroupSpec::Dihedral(5)]),
        product(vec![GroupSpec::Cyclic(2), GroupSpec::Alternating(4)]),
        product(vec![GroupSpec::Cyclic(3), GroupSpec::Symmetric(3)]),
        product(vec![GroupSpec::Cyclic(3), GroupSpec::field_semidirect(7, 1, 3)]),
        product(vec![GroupSpec::Cyclic(5), GroupSpec::field_semidirect(11, 1, 5)]),
        product(vec![GroupSpec::Symmetric(3), GroupSpec::Symmetric(3)]),
    ]);

    let mut seen = HashSet::new();
    specs.retain(|s| seen.insert(s.to_string()));
    specs
}

/// Parses a catalog file: one group spec per line, `#` starts a comment.
pub fn parse_catalog(text: &str) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let spec = line
            .parse::<GroupSpec>()
            .map_err(|e| Error::input(format!("catalog line {}: {e}", n + 1)))?;
        out.push(spec);
    }
    Ok(out)
}
