//! Named groups, semidirect products and the audit catalog.

mod catalog;
mod parse;

pub use parse::parse_group_spec;

use std::fmt;

pub use catalog::{default_catalog, parse_catalog};

use crate::arith::{is_prime, multiplicative_order};
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::group::{FiniteGroup, Perm, DEFAULT_ORDER_CAP};

/// Square matrix over `F_p`, row-major.
pub type Matrix = Vec<Vec<u64>>;

/// Description of a group to construct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Dihedral group of order `2m`, written `D(2m)`.
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    /// Dicyclic group of order `n` (quaternion for `n = 8`), written `Q(n)`.
    Dicyclic(u64),
    DirectProduct(Vec<GroupSpec>),
    /// Additive group of `F_{p^a}` extended by the order-`d` subgroup of
    /// its multiplicative group, acting by multiplication.
    FieldSemidirect { p: u64, a: u32, d: u64 },
    /// `F_p^n` extended by the matrix group generated by `matrices`.
    MatrixSemidirect { p: u64, matrices: Vec<Matrix> },
}

impl GroupSpec {
    pub fn field_semidirect(p: u64, a: u32, d: u64) -> Self {
        GroupSpec::FieldSemidirect { p, a, d }
    }

    /// Product of the given factors; nested products are flattened.
    pub fn direct_product(factors: Vec<GroupSpec>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupSpec::DirectProduct(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            GroupSpec::DirectProduct(flat)
        }
    }

    /// Checks parameter constraints, naming the first violated condition.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::construction(msg));
        match self {
            GroupSpec::Cyclic(n) if *n == 0 => fail("C(n) requires n >= 1".into()),
            GroupSpec::Dihedral(m) if *m == 0 => fail("D(2m) requires m >= 1".into()),
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) if *n == 0 || *n > 6 => {
                fail(format!("symmetric and alternating groups require 1 <= n <= 6, got {n}"))
            }
            GroupSpec::Dicyclic(n) if *n < 8 || n % 4 != 0 => {
                fail(format!("Q(n) requires n divisible by 4 and n >= 8, got {n}"))
            }
            GroupSpec::DirectProduct(fs) => {
                if fs.len() < 2 {
                    return fail("a direct product needs at least two factors".into());
                }
                fs.iter().try_for_each(GroupSpec::validate)
            }
            GroupSpec::FieldSemidirect { p, a, d } => validate_field_semidirect(*p, *a, *d),
            GroupSpec::MatrixSemidirect { p, matrices } => validate_matrices(*p, matrices),
            _ => Ok(()),
        }
    }

    /// Group order implied by the parameters, where it is known without
    /// enumeration.
    pub fn predicted_order(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(m) => Some(2 * m),
            GroupSpec::Symmetric(n) => Some((1..=*n).product()),
            GroupSpec::Alternating(n) => Some(((1..=*n).product::<u64>() / 2).max(1)),
            GroupSpec::Dicyclic(n) => Some(*n),
            GroupSpec::DirectProduct(fs) => fs
                .iter()
                .map(GroupSpec::predicted_order)
                .try_fold(1u64, |acc, o| acc.checked_mul(o?)),
            GroupSpec::FieldSemidirect { p, a, d } => p.checked_pow(*a)?.checked_mul(*d),
            GroupSpec::MatrixSemidirect { .. } => None,
        }
    }

    /// For the semidirect kinds, the characteristic `p` and the module order `p^a`.
    pub fn module_data(&self) -> Option<(u64, u64)> {
        match self {
            GroupSpec::FieldSemidirect { p, a, .. } => Some((*p, p.pow(*a))),
            GroupSpec::MatrixSemidirect { p, matrices } => {
                Some((*p, p.pow(matrices[0].len() as u32)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(m) => write!(f, "D({})", 2 * m),
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::Dicyclic(n) => write!(f, "Q({n})"),
            GroupSpec::DirectProduct(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            GroupSpec::FieldSemidirect { p, a: 1, d } => write!(f, "F({p},{d})"),
            GroupSpec::FieldSemidirect { p, a, d } => write!(f, "SD({p},{a},{d})"),
            GroupSpec::MatrixSemidirect { p, matrices } => {
                write!(f, "MAT({p};")?;
                for (i, m) in matrices.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    for (j, row) in m.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                        write!(f, "[{}]", cells.join(","))?;
                    }
                    f.write_str("]")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn validate_field_semidirect(p: u64, a: u32, d: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::construction(format!("SD(p,a,d) requires p prime, got p = {p}")));
    }
    if a == 0 || d == 0 {
        return Err(Error::construction("SD(p,a,d) requires a >= 1 and d >= 1"));
    }
    let q = p
        .checked_pow(a)
        .filter(|&q| q <= DEFAULT_ORDER_CAP as u64 * 64)
        .ok_or_else(|| Error::construction(format!("module order {p}^{a} is too large")))?;
    if (q - 1) % d != 0 {
        return Err(Error::construction(format!(
            "SD({p},{a},{d}) requires d | p^a - 1, but {d} does not divide {}",
            q - 1
        )));
    }
    // d = 1 gives the elementary abelian group; the module is not irreducible
    // for a > 1 but the group is still well defined.
    if d > 1 && multiplicative_order(p, d) != Some(a as u64) {
        return Err(Error::construction(format!(
            "SD({p},{a},{d}) requires the multiplicative order of p mod d to equal a \
             (irreducible action), but ord_{d}({p}) = {}",
            multiplicative_order(p, d).unwrap_or(0)
        )));
    }
    Ok(())
}

fn validate_matrices(p: u64, matrices: &[Matrix]) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::construction(format!("MAT(p;..) requires p prime, got p = {p}")));
    }
    let n = matrices
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::construction("MAT(p;..) requires at least one matrix"))?;
    if n == 0 {
        return Err(Error::construction("MAT(p;..) matrices must be nonempty"));
    }
    if p.checked_pow(n as u32).is_none_or(|q| q > DEFAULT_ORDER_CAP as u64 * 64) {
        return Err(Error::construction(format!("module order {p}^{n} is too large")));
    }
    for (i, m) in matrices.iter().enumerate() {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::construction(format!(
                "matrix {i} is not {n}x{n} like the first matrix"
            )));
        }
        if m.iter().flatten().any(|&x| x >= p) {
            return Err(Error::construction(format!(
                "matrix {i} has an entry outside 0..{p}"
            )));
        }
        if determinant_mod(m, p) == 0 {
            return Err(Error::construction(format!("matrix {i} is not invertible mod {p}")));
        }
    }
    Ok(())
}

fn determinant_mod(m: &Matrix, p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.clone();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let inv = crate::arith::mod_inverse(a[col][col], p).unwrap();
        for r in col + 1..n {
            let factor = a[r][col] * inv % p;
            for c in col..n {
                a[r][c] = (a[r][c] + p * p - factor * a[col][c] % p) % p;
            }
        }
    }
    det
}

/// Enumerates the group described by `spec` with the default order cap.
pub fn build(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_with_cap(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    spec.validate()?;
    if let Some(order) = spec.predicted_order() {
        if order > cap as u64 {
            return Err(Error::SizeLimit { cap });
        }
    }
    let (degree, gens) = generators(spec)?;
    FiniteGroup::generate_with_cap(degree, &gens, cap)
}

/// Dihedral group of order `2p` for an odd prime `p`.
pub fn dihedral(p: u64) -> Result<FiniteGroup> {
    if p == 2 || !is_prime(p) {
        return Err(Error::input(format!("dihedral(p) requires an odd prime, got {p}")));
    }
    build(&GroupSpec::Dihedral(p))
}

/// Whether `F_p^n` is an irreducible module for the group generated by
/// `matrices` acting on column vectors: the submodule generated by every
/// nonzero vector must be the whole space.
pub fn module_is_irreducible(p: u64, matrices: &[Matrix]) -> bool {
    let Some(n) = matrices.first().map(Vec::len) else {
        return false;
    };
    let q = p.pow(n as u32) as usize;
    let decode = |mut v: usize| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let x = v as u64 % p;
                v /= p as usize;
                x
            })
            .collect()
    };
    let encode = |v: &[u64]| v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize);
    let act = |m: &Matrix, v: &[u64]| -> Vec<u64> {
        m.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum::<u64>() % p)
            .collect()
    };
    (1..q).all(|start| {
        // Span of the orbit: closed under the action and under addition.
        let mut member = vec![false; q];
        member[0] = true;
        member[start] = true;
        let mut elems = vec![0usize, start];
        let mut i = 1;
        while i < elems.len() {
            let v = decode(elems[i]);
            let mut new = Vec::new();
            for m in matrices {
                new.push(encode(&act(m, &v)));
            }
            for &w in &elems {
                let w = decode(w);
                let sum: Vec<u64> = v.iter().zip(&w).map(|(a, b)| (a + b) % p).collect();
                new.push(encode(&sum));
            }
            for x in new {
                if !member[x] {
                    member[x] = true;
                    elems.push(x);
                }
            }
            i += 1;
        }
        elems.len() == q
    })
}

fn cycle_perm(degree: usize, cycle: Vec<usize>) -> Perm {
    Perm::from_cycles(degree, &[cycle]).expect("valid cycle")
}

fn images(v: Vec<u64>) -> Perm {
    Perm::new(v.into_iter().map(|x| x as u32).collect()).expect("generator is a bijection")
}

/// Permutation degree and generators for a validated spec.
fn generators(spec: &GroupSpec) -> Result<(usize, Vec<Perm>)> {
    Ok(match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            (n, vec![cycle_perm(n, (0..n).collect())])
        }
        GroupSpec::Dihedral(m) => match *m {
            1 => (2, vec![cycle_perm(2, vec![0, 1])]),
            2 => (
                4,
                vec![
                    Perm::parse_cycles(4, "(0,1)(2,3)")?,
                    Perm::parse_cycles(4, "(0,2)(1,3)")?,
                ],
            ),
            m => {
                let m = m as usize;
                let reflection = images((0..m as u64).map(|i| (m as u64 - i) % m as u64).collect());
                (m, vec![cycle_perm(m, (0..m).collect()), reflection])
            }
        },
        GroupSpec::Symmetric(n) => match *n as usize {
            1 => (1, vec![]),
            2 => (2, vec![cycle_perm(2, vec![0, 1])]),
            n => (n, vec![cycle_perm(n, vec![0, 1]), cycle_perm(n, (0..n).collect())]),
        },
        GroupSpec::Alternating(n) => {
            let n = *n as usize;
            let gens = (2..n).map(|i| cycle_perm(n, vec![0, 1, i])).collect();
            (n, gens)
        }
        GroupSpec::Dicyclic(order) => dicyclic_generators(*order),
        GroupSpec::DirectProduct(factors) => {
            let parts = factors.iter().map(generators).collect::<Result<Vec<_>>>()?;
            let total: usize = parts.iter().map(|(d, _)| d).sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for (deg, fgens) in parts {
                for g in fgens {
                    let mut im: Vec<u32> = (0..total as u32).collect();
                    for x in 0..deg {
                        im[offset + x] = (offset + g.apply(x)) as u32;
                    }
                    gens.push(Perm::new(im)?);
                }
                offset += deg;
            }
            (total, gens)
        }
        GroupSpec::FieldSemidirect { p, a, d } => {
            let field = GaloisField::new(*p, *a)?;
            let q = field.order();
            let mut gens: Vec<Perm> = (0..*a)
                .map(|i| images((0..q).map(|x| field.add(x, p.pow(i))).collect()))
                .collect();
            if *d > 1 {
                let h = field.pow(field.primitive_element(), (q - 1) / d);
                gens.push(images((0..q).map(|x| field.mul(h, x)).collect()));
            }
            (q as usize, gens)
        }
        GroupSpec::MatrixSemidirect { p, matrices } => {
            let n = matrices[0].len();
            let q = p.pow(n as u32);
            let decode = |mut v: u64| -> Vec<u64> {
                (0..n)
                    .map(|_| {
                        let x = v % p;
                        v /= p;
                        x
                    })
                    .collect()
            };
            let encode = |v: &[u64]| v.iter().rev().fold(0, |acc, &x| acc * p + x);
            let mut gens: Vec<Perm> = (0..n)
                .map(|i| {
                    images(
                        (0..q)
                            .map(|v| {
                                let mut c = decode(v);
                                c[i] = (c[i] + 1) % p;
                                encode(&c)
                            })
                            .collect(),
                    )
                })
                .collect();
            for m in matrices {
                gens.push(images(
                    (0..q)
                        .map(|v| {
                            let c = decode(v);
                            let out: Vec<u64> = m
                                .iter()
                                .map(|row| row.iter().zip(&c).map(|(x, y)| x * y).sum::<u64>() % p)
                                .collect();
                            encode(&out)
                        })
                        .collect(),
                ));
            }
            (q as usize, gens)
        }
    })
}

/// Right-regular action of the dicyclic group `<a, x | a^2m, x^2 = a^m, a^x = a^-1>`.
fn dicyclic_generators(order: u64) -> (usize, Vec<Perm>) {
    let m = order / 4;
    let n = 2 * m;
    // point i + n*j stands for a^i x^j
    let point = |i: u64, j: u64| (i % n + n * j) as u32;
    let mut by_a = Vec::new();
    let mut by_x = Vec::new();
    for j in 0..2 {
        for i in 0..n {
            by_a.push(if j == 0 { point(i + 1, 0) } else { point(i + n - 1, 1) });
            by_x.push(if j == 0 { point(i, 1) } else { point(i + m, 0) });
        }
    }
    let deg = order as usize;
    (
        deg,
        vec![
            Perm::new(by_a).expect("bijection"),
            Perm::new(by_x).expect("bijection"),
        ],
    )
}
