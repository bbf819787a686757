//! Small integer number theory used across the crate.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// The part of `n` coprime to `p`.
pub fn p_prime_part(mut n: u64, p: u64) -> u64 {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = extended_gcd(a as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative order of `a` modulo `m`. The order modulo 1 is 1.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a, m) != 1 {
        return None;
    }
    let phi = euler_phi(m);
    divisors(phi).into_iter().find(|&d| mod_pow(a, d, m) == 1)
}

/// Smallest generator of the multiplicative group of the prime field `F_q`.
pub fn primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    let factors = prime_divisors(q - 1);
    (2..q)
        .find(|&g| factors.iter().all(|&r| mod_pow(g, (q - 1) / r, q) != 1))
        .expect("prime fields have primitive roots")
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Greedy generating set of the subgroup `{t in (Z/m)^* : member(t)}`.
///
/// `member` must describe a subgroup. Generators are chosen in increasing
/// order, each one not in the span of the previous ones.
pub fn unit_group_generators(m: u64, member: impl Fn(u64) -> bool) -> Vec<u64> {
    if m <= 2 {
        return Vec::new();
    }
    let mut span = vec![false; m as usize];
    span[1] = true;
    let mut elems = vec![1u64];
    let mut gens = Vec::new();
    for t in 2..m {
        if span[t as usize] || gcd(t, m) != 1 || !member(t) {
            continue;
        }
        gens.push(t);
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gens {
                let y = x * g % m;
                if !span[y as usize] {
                    span[y as usize] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_phi() {
        assert_eq!(factorize(12656), vec![(2, 4), (7, 1), (113, 1)]);
        assert_eq!(euler_phi(12656), 8 * 6 * 112);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(p_prime_part(24, 2), 3);
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(multiplicative_order(5, 31), Some(3));
        assert_eq!(multiplicative_order(2, 63), Some(6));
        assert_eq!(multiplicative_order(4, 6), None);
        assert_eq!(multiplicative_order(7, 1), Some(1));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(isqrt(24), 4);
    }

    #[test]
    fn unit_generators_span() {
        assert!(unit_group_generators(2, |_| true).is_empty());
        assert_eq!(unit_group_generators(7, |_| true), vec![2, 3]);
        assert_eq!(unit_group_generators(8, |_| true), vec![3, 5]);
        // {t ≡ 1 mod 3} inside (Z/21)^* is {1, 4, 10, 13, 16, 19}, cyclic of order 6.
        let gens = unit_group_generators(21, |t| t % 3 == 1);
        assert_eq!(gens, vec![4, 10]);
    }
}
