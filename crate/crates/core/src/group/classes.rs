use std::collections::VecDeque;

use super::FiniteGroup;

/// Conjugacy classes of a [`FiniteGroup`].
///
/// Class 0 is the identity class; the remaining classes are ordered by their
/// least element index, which is also the stored representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    reps: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<usize>,
    rep_orders: Vec<u64>,
}

impl ClassData {
    pub(crate) fn compute(g: &FiniteGroup) -> Self {
        const UNSET: usize = usize::MAX;
        let mut class_of = vec![UNSET; g.order()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..g.order() {
            if class_of[start] != UNSET {
                continue;
            }
            let c = reps.len();
            class_of[start] = c;
            let mut size = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &s in g.generators() {
                    let y = g.conjugate(x, s);
                    if class_of[y] == UNSET {
                        class_of[y] = c;
                        size += 1;
                        queue.push_back(y);
                    }
                }
            }
            reps.push(start);
            sizes.push(size);
        }
        let rep_orders = reps.iter().map(|&r| g.element_order(r)).collect();
        ClassData {
            reps,
            sizes,
            class_of,
            rep_orders,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    /// Order of the elements in class `c`.
    pub fn rep_order(&self, c: usize) -> u64 {
        self.rep_orders[c]
    }

    pub fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter_map(move |(x, &k)| (k == c).then_some(x))
    }

    /// The class map `class(g) -> class(g^k)`.
    pub fn power_map(&self, g: &FiniteGroup, k: i64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| self.class_of[g.pow(r, k)])
            .collect()
    }

    /// `class(g) -> class(g^-1)`.
    pub fn inverse_classes(&self, g: &FiniteGroup) -> Vec<usize> {
        self.power_map(g, -1)
    }
}
