use std::fmt;

use crate::arith::lcm;
use crate::error::{Error, Result};

/// A permutation of `{0, .., degree - 1}` stored as its image list.
///
/// Products compose left to right: `a.then(&b)` maps `x` to `b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::input(format!(
                    "image list {images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Perm::from_images_unchecked((0..degree as u32).collect())
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::input(format!("point {x} outside degree {degree}")));
                }
                if touched[x] {
                    return Err(Error::input(format!("point {x} repeated in cycles")));
                }
                touched[x] = true;
                images[x] = cycle[(pos + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm::from_images_unchecked(images))
    }

    /// Parses cycle notation such as `(0,1)(2,3)` or `(0 1 2)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::input(format!("expected '(' in {text:?}")))?;
            let end = body
                .find(')')
                .ok_or_else(|| Error::input(format!("unclosed cycle in {text:?}")))?;
            let points = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::input(format!("bad point {t:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[end + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm::from_images_unchecked(
            self.images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        )
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm::from_images_unchecked(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `n >= 1` with `self^n = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// `self^k` for any integer `k`, computed by walking cycles.
    pub fn pow(&self, k: i64) -> Perm {
        let n = self.degree();
        let mut images = vec![0u32; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(pos + shift) % cycle.len()] as u32;
            }
        }
        Perm::from_images_unchecked(images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![2, 0]).is_err());
        assert!(Perm::new(vec![1, 2, 0]).is_ok());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse_cycles(3, "(0,1)").unwrap();
        let b = Perm::parse_cycles(3, "(1,2)").unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).to_string(), "(0,2,1)");
    }

    #[test]
    fn orders_and_powers() {
        let g = Perm::parse_cycles(5, "(0 1)(2 3 4)").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.pow(6).is_identity());
        assert_eq!(g.pow(-1), g.inverse());
        assert_eq!(g.pow(2), g.then(&g));
        let v = Perm::parse_cycles(4, "(0,1)(2,3)").unwrap();
        assert_eq!(v.order(), 2);
        assert_eq!(Perm::identity(3).order(), 1);
    }
}
