use crate::group::{ClassData, FiniteGroup};

/// Class multiplication coefficients `a[i][j][k]`: the number of pairs
/// `(x, y)` in `C_i × C_j` with `xy = z` for a fixed `z` in `C_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCoefficients {
    r: usize,
    data: Vec<u32>,
}

impl ClassCoefficients {
    pub fn compute(g: &FiniteGroup, classes: &ClassData) -> Self {
        let r = classes.num_classes();
        let mut data = vec![0u32; r * r * r];
        for (k, &z) in classes.reps().iter().enumerate() {
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), z);
                let i = classes.class_of(x);
                let j = classes.class_of(y);
                data[(i * r + j) * r + k] += 1;
            }
        }
        ClassCoefficients { r, data }
    }

    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.r + j) * self.r + k]
    }

    /// The row `a[i][j][..]`.
    pub fn row(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.r + j) * self.r;
        &self.data[start..start + self.r]
    }
}

/// Convenience wrapper computing the classes as well.
pub fn class_coefficients(g: &FiniteGroup, classes: &ClassData) -> ClassCoefficients {
    ClassCoefficients::compute(g, classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, GroupSpec};

    #[test]
    fn identity_class_is_kronecker_delta() {
        let g = build(&GroupSpec::Symmetric(4)).unwrap();
        let cd = g.conjugacy_classes();
        let a = class_coefficients(&g, &cd);
        for j in 0..cd.num_classes() {
            for k in 0..cd.num_classes() {
                assert_eq!(a.get(0, j, k), u32::from(j == k));
            }
        }
    }

    #[test]
    fn transposition_square_in_s3() {
        let g = build(&GroupSpec::Symmetric(3)).unwrap();
        let cd = g.conjugacy_classes();
        let a = class_coefficients(&g, &cd);
        let t = (0..cd.num_classes()).find(|&c| cd.sizes()[c] == 3).unwrap();
        assert_eq!(a.get(t, t, 0), 3);
    }

    #[test]
    fn row_sums_count_all_products() {
        for spec in ["S(4)", "A(5)", "F(7,3)", "Q(8)"] {
            let g = build(&spec.parse().unwrap()).unwrap();
            let cd = g.conjugacy_classes();
            let a = class_coefficients(&g, &cd);
            let s = cd.sizes();
            for i in 0..s.len() {
                for j in 0..s.len() {
                    let total: usize = (0..s.len()).map(|k| a.get(i, j, k) as usize * s[k]).sum();
                    assert_eq!(total, s[i] * s[j], "{spec} {i} {j}");
                }
            }
        }
    }
}
