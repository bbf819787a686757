//! Linear algebra over a prime field `F_q` with `q < 2^32`.

use crate::arith::{is_prime, mod_inverse, mod_pow};

/// Smallest prime `q ≡ 1 (mod e)` with `q > 2·sqrt(order)`.
pub fn choose_conductor_prime(e: u64, order: u64) -> u64 {
    assert!(e >= 1 && order >= 1);
    let mut q = e + 1;
    loop {
        if q as u128 * q as u128 > 4 * order as u128 && is_prime(q) {
            return q;
        }
        q += e;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fq {
    q: u64,
}

impl Fq {
    pub fn new(q: u64) -> Self {
        assert!(is_prime(q) && q < 1 << 32, "modulus must be a prime below 2^32");
        Fq { q }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a) % self.q
    }

    pub fn inv(&self, a: u64) -> u64 {
        mod_inverse(a, self.q).expect("inverse of zero in F_q")
    }

    pub fn pow(&self, a: u64, k: u64) -> u64 {
        mod_pow(a, k, self.q)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.q as i64) as u64
    }

    /// Brings `rows` to reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][col]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for c in col..ncols {
                        let t = self.mul(f, rows[r][c]);
                        rows[i][c] = self.sub(rows[i][c], t);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : M v = 0}` for a square or rectangular `m`.
    pub fn nullspace(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let ncols = m.first().map_or(0, Vec::len);
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; ncols];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.neg(row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients low to high.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        // Similarity transform to upper Hessenberg form.
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if piv != j + 1 {
                h.swap(piv, j + 1);
                for row in h.iter_mut() {
                    row.swap(piv, j + 1);
                }
            }
            let inv = self.inv(h[j + 1][j]);
            for k in j + 2..n {
                if h[k][j] == 0 {
                    continue;
                }
                let u = self.mul(h[k][j], inv);
                for c in 0..n {
                    let t = self.mul(u, h[j + 1][c]);
                    h[k][c] = self.sub(h[k][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[k]);
                    row[j + 1] = self.add(row[j + 1], t);
                }
            }
        }
        // p_m = (x - h_mm) p_{m-1} - Σ_i h_im (∏_{i<l<=m} h_{l,l-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            let prev = &polys[m];
            let mut next = vec![0u64; m + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[m][m], c));
            }
            let mut prod = 1u64;
            for i in (0..m).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let coef = self.mul(h[i][m], prod);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Distinct roots of `poly` in `F_q`, in increasing order.
    ///
    /// Works on the squarefree part and splits it with
    /// `gcd(f, (x + a)^((q-1)/2) - 1)` for `a = 0, 1, ...`. Only roots in
    /// `F_q` are returned; for `q = 2` it falls back to evaluation.
    pub fn distinct_roots(&self, poly: &[u64]) -> Vec<u64> {
        let f = self.trim(poly.to_vec());
        if f.len() <= 1 {
            return Vec::new();
        }
        if self.q == 2 {
            return (0..2).filter(|&x| self.eval(&f, x) == 0).collect();
        }
        let g = self.poly_gcd(f.clone(), self.derivative(&f));
        let sqfree = self.poly_divmod(&f, &g).0;
        // Keep only the factors that split over F_q: gcd with x^q - x.
        let xq = self.poly_powmod(&[0, 1], self.q, &sqfree);
        let mut xq_minus_x = xq;
        xq_minus_x.resize(xq_minus_x.len().max(2), 0);
        xq_minus_x[1] = self.sub(xq_minus_x[1], 1);
        let split = self.poly_gcd(sqfree, self.trim(xq_minus_x));
        let mut out = Vec::new();
        self.split_roots(split, &mut out);
        out.sort_unstable();
        out
    }

    fn split_roots(&self, f: Vec<u64>, out: &mut Vec<u64>) {
        match f.len() {
            0 | 1 => return,
            2 => {
                out.push(self.mul(self.neg(f[0]), self.inv(f[1])));
                return;
            }
            _ => {}
        }
        for a in 0..self.q {
            let mut h = self.poly_powmod(&[a, 1], (self.q - 1) / 2, &f);
            if h.is_empty() {
                h.push(0);
            }
            h[0] = self.sub(h[0], 1);
            let d = self.poly_gcd(f.clone(), self.trim(h));
            if d.len() > 1 && d.len() < f.len() {
                let rest = self.poly_divmod(&f, &d).0;
                self.split_roots(d, out);
                self.split_roots(rest, out);
                return;
            }
        }
        unreachable!("polynomial with distinct roots in F_q failed to split");
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    fn trim(&self, mut p: Vec<u64>) -> Vec<u64> {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    fn derivative(&self, p: &[u64]) -> Vec<u64> {
        let d = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.q))
            .collect();
        self.trim(d)
    }

    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.q;
            }
        }
        self.trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    fn poly_divmod(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let b = self.trim(b.to_vec());
        let mut r = self.trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = self.inv(*b.last().expect("division by zero polynomial"));
        let mut quot = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), lead_inv);
            quot[shift] = c;
            for (i, &y) in b.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(c, y));
            }
            r = self.trim(r);
        }
        (self.trim(quot), r)
    }

    /// Monic gcd.
    fn poly_gcd(&self, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
        a = self.trim(a);
        b = self.trim(b);
        while !b.is_empty() {
            let r = self.poly_divmod(&a, &b).1;
            a = b;
            b = r;
        }
        if let Some(&lead) = a.last() {
            let inv = self.inv(lead);
            for c in a.iter_mut() {
                *c = self.mul(*c, inv);
            }
        }
        a
    }

    fn poly_powmod(&self, base: &[u64], mut k: u64, modulus: &[u64]) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = self.poly_divmod(base, modulus).1;
        while k > 0 {
            if k & 1 == 1 {
                result = self.poly_divmod(&self.poly_mul(&result, &b), modulus).1;
            }
            b = self.poly_divmod(&self.poly_mul(&b, &b), modulus).1;
            k >>= 1;
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conductor_prime_examples() {
        assert_eq!(choose_conductor_prime(1, 1), 3);
        assert_eq!(choose_conductor_prime(6, 6), 7);
        assert_eq!(choose_conductor_prime(4, 8), 13);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let f = Fq::new(101);
        // [[2,1],[1,3]]: x^2 - 5x + 5
        assert_eq!(f.charpoly(&[vec![2, 1], vec![1, 3]]), vec![5, 96, 1]);
        // A matrix needing a row swap during the Hessenberg reduction.
        let a = vec![vec![1, 2, 3], vec![0, 4, 5], vec![6, 0, 7]];
        let cp = f.charpoly(&a);
        // det(xI - A) at x = 0 is -det(A) = -(1*28 - 2*(-30) + 3*(-24)) = -16
        assert_eq!(cp[0], f.from_i64(-16));
        assert_eq!(cp[3], 1);
        assert_eq!(cp[2], f.from_i64(-12));
    }

    #[test]
    fn nullspace_and_roots() {
        let f = Fq::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let dot = row.iter().zip(&v).fold(0, |acc, (a, b)| f.add(acc, f.mul(*a, *b)));
                assert_eq!(dot, 0);
            }
        }
        // (x - 2)(x - 5) = x^2 - 7x + 10 ≡ x^2 + 3 (mod 7)
        assert_eq!(f.distinct_roots(&[3, 0, 1]), vec![2, 5]);
        // x^2 + 1 is irreducible mod 7.
        assert!(f.distinct_roots(&[1, 0, 1]).is_empty());
    }

    #[test]
    fn distinct_roots_with_multiplicity() {
        let f = Fq::new(10007);
        let mut poly = vec![1u64];
        for &r in &[5u64, 5, 5, 17, 9000, 17, 3] {
            poly = f.poly_mul(&poly, &[f.neg(r), 1]);
        }
        assert_eq!(f.distinct_roots(&poly), vec![3, 5, 17, 9000]);
        for x in [3, 5, 17, 9000] {
            assert_eq!(f.eval(&poly, x), 0);
        }
    }
}
