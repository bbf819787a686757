//! Dixon's modular step: central characters over `F_q` and the exact lift.

use crate::arith::{isqrt, primitive_root};
use crate::cyclotomic::{CyclotomicBasis, CyclotomicValue};
use crate::error::{Error, Result};
use crate::group::{ClassData, FiniteGroup};
use crate::modular::{choose_conductor_prime, Fq};

use super::coefficients::ClassCoefficients;

/// The character table reduced modulo a prime `q ≡ 1 (mod e)`.
#[derive(Debug, Clone)]
pub struct ModTable {
    pub q: u64,
    /// Primitive `e`-th root of unity modulo `q`.
    pub omega: u64,
    pub exponent: u64,
    /// Central characters `ω_χ(K_j)`, one row per character.
    pub central: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
    /// Character values modulo `q`.
    pub values: Vec<Vec<u64>>,
}

impl ModTable {
    pub fn compute(g: &FiniteGroup, classes: &ClassData, coeffs: &ClassCoefficients) -> Result<Self> {
        let r = classes.num_classes();
        let n = g.order() as u64;
        let e = g.exponent();
        let q = choose_conductor_prime(e, n);
        let f = Fq::new(q);
        let omega = f.pow(primitive_root(q), (q - 1) / e);

        let central = split_spaces(&f, coeffs)?;
        if central.len() != r {
            return Err(Error::internal("eigenspace splitting produced the wrong number of characters"));
        }

        let sizes_inv: Vec<u64> = classes.sizes().iter().map(|&s| f.inv(s as u64 % q)).collect();
        let inverse = classes.inverse_classes(g);
        let bound = isqrt(n);
        let mut degrees = Vec::with_capacity(r);
        let mut values = Vec::with_capacity(r);
        for w in &central {
            let s = (0..r).fold(0, |acc, j| {
                f.add(acc, f.mul(f.mul(w[j], w[inverse[j]]), sizes_inv[j]))
            });
            if s == 0 {
                return Err(Error::internal("degenerate central character"));
            }
            let d2 = f.mul(n % q, f.inv(s));
            let d = (1..=bound)
                .find(|&d| d * d % q == d2 && n.is_multiple_of(d))
                .ok_or_else(|| Error::internal("no character degree matches modular norm"))?;
            values.push((0..r).map(|j| f.mul(f.mul(w[j], d % q), sizes_inv[j])).collect());
            degrees.push(d);
        }
        Ok(ModTable {
            q,
            omega,
            exponent: e,
            central,
            degrees,
            values,
        })
    }

    /// Lifts every value to a cyclotomic integer through the multiplicities
    /// of eigenvalues `ζ_o^j` of a representing matrix of `g_c`.
    pub fn lift(&self, g: &FiniteGroup, classes: &ClassData, basis: &CyclotomicBasis) -> Result<Vec<Vec<CyclotomicValue>>> {
        let f = Fq::new(self.q);
        let e = self.exponent;
        let r = classes.num_classes();
        let mut rows = vec![Vec::with_capacity(r); r];
        for c in 0..r {
            let rep = classes.reps()[c];
            let o = classes.rep_order(c);
            let mut power_classes = Vec::with_capacity(o as usize);
            let mut cur = g.identity();
            for _ in 0..o {
                power_classes.push(classes.class_of(cur));
                cur = g.mul(cur, rep);
            }
            let w = f.pow(self.omega, e / o);
            let pw: Vec<u64> = (0..o).scan(1u64, |acc, _| {
                let v = *acc;
                *acc = f.mul(*acc, w);
                Some(v)
            }).collect();
            let o_inv = f.inv(o % self.q);
            for (chi, vals) in self.values.iter().enumerate() {
                let deg = self.degrees[chi];
                let mut terms = Vec::new();
                let mut total = 0u64;
                for j in 0..o {
                    let mut m = 0u64;
                    for (t, &pc) in power_classes.iter().enumerate() {
                        let idx = (o - j * t as u64 % o) % o;
                        m = f.add(m, f.mul(vals[pc], pw[idx as usize]));
                    }
                    let m = f.mul(m, o_inv);
                    if m > deg {
                        return Err(Error::internal("eigenvalue multiplicity exceeds the degree"));
                    }
                    total += m;
                    if m != 0 {
                        terms.push((j * (e / o), m as i64));
                    }
                }
                if total != deg {
                    return Err(Error::internal("eigenvalue multiplicities do not sum to the degree"));
                }
                rows[chi].push(basis.from_integer_terms(terms));
            }
        }
        Ok(rows)
    }
}

/// Simultaneous eigenvectors `w` of the matrices `M_i = (a[i][j][k])_{jk}`,
/// normalized so that `w[0] = 1`.
fn split_spaces(f: &Fq, coeffs: &ClassCoefficients) -> Result<Vec<Vec<u64>>> {
    let r = coeffs.num_classes();
    let q = f.modulus();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let pivots: Vec<usize> = space
                .iter()
                .map(|row| row.iter().position(|&x| x != 0).unwrap())
                .collect();
            let dim = space.len();
            // restricted[b][c]: coordinate of M_i w_b along w_c.
            let restricted: Vec<Vec<u64>> = space
                .iter()
                .map(|w| {
                    pivots
                        .iter()
                        .map(|&j| {
                            coeffs.row(i, j).iter().zip(w).fold(0u64, |acc, (&a, &x)| {
                                (acc + a as u64 % q * x) % q
                            })
                        })
                        .collect()
                })
                .collect();
            let scalar = (0..dim).all(|b| {
                (0..dim).all(|c| restricted[b][c] == if b == c { restricted[0][0] } else { 0 })
            });
            if scalar {
                next.push(space);
                continue;
            }
            let roots = f.distinct_roots(&f.charpoly(&restricted));
            let mut found = 0;
            for lambda in roots {
                // Coordinates x with x·R = λx, i.e. (Rᵀ - λI) xᵀ = 0.
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|c| {
                        (0..dim)
                            .map(|b| {
                                let v = restricted[b][c];
                                if b == c { f.sub(v, lambda) } else { v }
                            })
                            .collect()
                    })
                    .collect();
                let mut sub: Vec<Vec<u64>> = f
                    .nullspace(&shifted)
                    .into_iter()
                    .map(|x| {
                        let mut v = vec![0u64; r];
                        for (b, &xb) in x.iter().enumerate() {
                            if xb != 0 {
                                for (vk, &wk) in v.iter_mut().zip(&space[b]) {
                                    *vk = f.add(*vk, f.mul(xb, wk));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                f.rref(&mut sub);
                found += sub.len();
                next.push(sub);
            }
            if found != dim {
                return Err(Error::internal("class matrix is not diagonalizable over F_q"));
            }
        }
        spaces = next;
    }
    spaces
        .into_iter()
        .map(|mut s| {
            if s.len() != 1 || s[0][0] == 0 {
                return Err(Error::internal("eigenspaces did not split into lines"));
            }
            let mut w = s.pop().unwrap();
            let inv = f.inv(w[0]);
            for x in w.iter_mut() {
                *x = f.mul(*x, inv);
            }
            Ok(w)
        })
        .collect()
}
