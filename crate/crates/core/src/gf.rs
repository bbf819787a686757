//! Arithmetic in the finite field of order `p^a`.
//!
//! Elements are encoded as integers in `0..p^a` whose base-`p` digits are the
//! coefficients of a polynomial in a root `t` of the defining polynomial,
//! least significant digit first. Encoding `1` is the field's one and
//! encoding `p^i` is `t^i`.

use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u64,
    a: u32,
    order: u64,
    /// Monic defining polynomial, coefficients low to high (length `a + 1`).
    modulus: Vec<u64>,
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl GaloisField {
    pub fn new(p: u64, a: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        if a == 0 {
            return Err(Error::input("field degree must be positive"));
        }
        let order = p
            .checked_pow(a)
            .filter(|&q| q <= 1 << 24)
            .ok_or_else(|| Error::input(format!("field of order {p}^{a} is too large")))?;
        let modulus = first_irreducible(p, a as usize);
        let mut field = GaloisField {
            p,
            a,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.a
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.a {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        if x == 0 || y == 0 {
            return 0;
        }
        let n = self.order - 1;
        self.exp[((self.log[x as usize] + self.log[y as usize]) % n) as usize]
    }

    /// The generator used for the log tables (least primitive element).
    pub fn primitive_element(&self) -> u64 {
        self.exp[1 % self.exp.len()]
    }

    pub fn pow(&self, x: u64, k: u64) -> u64 {
        if x == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let n = self.order - 1;
        self.exp[((self.log[x as usize] as u128 * k as u128) % n as u128) as usize]
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        (0..self.a)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn poly_mul_mod(&self, x: u64, y: u64) -> u64 {
        let (xs, ys) = (self.digits(x), self.digits(y));
        let a = self.a as usize;
        let mut prod = vec![0u64; 2 * a];
        for (i, &u) in xs.iter().enumerate() {
            for (j, &v) in ys.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        for k in (a..2 * a).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..=a {
                let sub = c * self.modulus[i] % self.p;
                prod[k - a + i] = (prod[k - a + i] + self.p - sub) % self.p;
            }
        }
        self.encode(&prod[..a])
    }

    fn build_log_tables(&mut self) {
        let n = self.order - 1;
        for g in 1..self.order {
            let mut exp = Vec::with_capacity(n as usize);
            let mut x = 1;
            loop {
                exp.push(x);
                x = self.poly_mul_mod(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() as u64 == n {
                let mut log = vec![0; self.order as usize];
                for (i, &v) in exp.iter().enumerate() {
                    log[v as usize] = i as u64;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic");
    }
}

/// Least monic irreducible polynomial of degree `a` over `F_p`, ordered by
/// the base-`p` encoding of its lower coefficients.
fn first_irreducible(p: u64, a: usize) -> Vec<u64> {
    if a == 1 {
        return vec![0, 1];
    }
    let count = p.pow(a as u32);
    (0..count)
        .map(|low| {
            let mut poly = Vec::with_capacity(a + 1);
            let mut x = low;
            for _ in 0..a {
                poly.push(x % p);
                x /= p;
            }
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("irreducible polynomials exist in every degree")
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for fdeg in 1..=deg / 2 {
        for low in 0..p.pow(fdeg as u32) {
            let mut factor = Vec::with_capacity(fdeg + 1);
            let mut x = low;
            for _ in 0..fdeg {
                factor.push(x % p);
                x /= p;
            }
            factor.push(1);
            if poly_rem(poly, &factor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `num` by the monic `den` over `F_p`.
fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    for k in (dd..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for i in 0..=dd {
            let sub = c * den[i] % p;
            r[k - dd + i] = (r[k - dd + i] + p - sub) % p;
        }
    }
    r.truncate(dd);
    r
}
