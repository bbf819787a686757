//! Fully enumerated permutation groups.
//!
//! A [`FiniteGroup`] stores every element. Elements are addressed by their
//! index in a canonical breadth-first ordering from the sorted generators,
//! so the same generators always give the same indices, class order and
//! character table row order.

mod classes;
mod perm;
mod subgroup;

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

pub use classes::ClassData;
pub use perm::Perm;
pub use subgroup::SubgroupHandle;

use crate::arith::{is_prime, lcm, p_prime_part};
use crate::error::{Error, Result};

/// Default upper bound on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

const NO_PARENT: u32 = u32::MAX;

#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    // Breadth-first tree: element i = tree[i].0 * generators[tree[i].1].
    tree: Vec<(u32, u32)>,
    fingerprint: u64,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generator_perms())
            .finish()
    }
}

impl FiniteGroup {
    /// Closure of `gens` with the default order cap.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Self> {
        Self::generate_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(degree: usize, gens: &[Perm], cap: usize) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::input(format!(
                "generator {bad} has degree {}, expected {degree}",
                bad.degree()
            )));
        }
        let mut sorted: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        sorted.sort();
        sorted.dedup();

        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut tree = vec![(NO_PARENT, NO_PARENT)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for (gi, g) in sorted.iter().enumerate() {
                let next = elements[cur].then(g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::SizeLimit { cap });
                }
                index.insert(next.clone(), elements.len());
                tree.push((cur as u32, gi as u32));
                queue.push_back(elements.len());
                elements.push(next);
            }
        }

        let generators = sorted.iter().map(|g| index[g]).collect();
        let inverses = elements.iter().map(|x| index[&x.inverse()]).collect();
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        sorted.hash(&mut hasher);
        elements.len().hash(&mut hasher);
        Ok(FiniteGroup {
            degree,
            elements,
            index,
            generators,
            inverses,
            tree,
            fingerprint: hasher.finish(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Index of the identity element; always 0.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    /// Generator element indices, in sorted-permutation order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<&Perm> {
        self.generators.iter().map(|&g| &self.elements[g]).collect()
    }

    pub fn index_of(&self, perm: &Perm) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let p = self.elements[self.inverses[g]]
            .then(&self.elements[x])
            .then(&self.elements[g]);
        self.index[&p]
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let p = self.elements[self.inverses[a]]
            .then(&self.elements[self.inverses[b]])
            .then(&self.elements[a])
            .then(&self.elements[b]);
        self.index[&p]
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        self.index[&self.elements[g].pow(k)]
    }

    /// Word in the generators (indices into [`Self::generators`]) whose
    /// product is element `g`.
    pub fn word(&self, mut g: usize) -> Vec<usize> {
        let mut word = Vec::new();
        while self.tree[g].0 != NO_PARENT {
            word.push(self.tree[g].1 as usize);
            g = self.tree[g].0 as usize;
        }
        word.reverse();
        word
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.elements[g].order()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, g| lcm(acc, g.order()))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.elements[a].then(&self.elements[b]) == self.elements[b].then(&self.elements[a]))
        })
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn conjugacy_classes(&self) -> ClassData {
        ClassData::compute(self)
    }

    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle::from_sorted(self.fingerprint, (0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle::from_sorted(self.fingerprint, vec![0])
    }

    /// Membership mask of the subgroup generated by `gens`.
    fn closure_mask(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for &g in gens {
                let next = self.mul(cur, g);
                if !mask[next] {
                    mask[next] = true;
                    queue.push_back(next);
                }
            }
        }
        mask
    }

    fn handle_from_mask(&self, mask: &[bool]) -> SubgroupHandle {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        SubgroupHandle::from_sorted(self.fingerprint, members)
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> SubgroupHandle {
        self.handle_from_mask(&self.closure_mask(gens))
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[usize]) -> SubgroupHandle {
        let mut gens: Vec<usize> = seed.iter().copied().filter(|&x| x != 0).collect();
        let mut mask = self.closure_mask(&gens);
        let mut checked = 0;
        // Every generator of N must have its conjugates by the generators
        // of G inside N; newly found conjugates become generators too.
        while checked < gens.len() {
            let n = gens[checked];
            checked += 1;
            for &g in &self.generators {
                let c = self.conjugate(n, g);
                if !mask[c] {
                    gens.push(c);
                    mask = self.closure_mask(&gens);
                }
            }
        }
        self.handle_from_mask(&mask)
    }

    pub fn is_normal(&self, h: &SubgroupHandle) -> bool {
        let mask = h.mask(self.order());
        h.members().iter().all(|&x| {
            self.generators
                .iter()
                .all(|&g| mask[self.conjugate(x, g)])
        })
    }

    /// Normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> SubgroupHandle {
        let mut seeds = Vec::new();
        for (i, &a) in self.generators.iter().enumerate() {
            for &b in &self.generators[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// Terms of the derived series, as groups, ending at the first repeat.
    pub fn derived_series(&self) -> Vec<FiniteGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let d = last.derived_subgroup();
            if d.order() == last.order() {
                return series;
            }
            let next = last.subgroup_as_group(&d);
            let done = next.order() == 1;
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    pub fn center(&self) -> SubgroupHandle {
        let members = (0..self.order())
            .filter(|&x| {
                self.generators.iter().all(|&g| {
                    self.elements[x].then(&self.elements[g]) == self.elements[g].then(&self.elements[x])
                })
            })
            .collect();
        SubgroupHandle::from_sorted(self.fingerprint, members)
    }

    pub fn point_stabilizer(&self, point: usize) -> SubgroupHandle {
        let members = (0..self.order())
            .filter(|&x| self.elements[x].apply(point) == point)
            .collect();
        SubgroupHandle::from_sorted(self.fingerprint, members)
    }

    /// All minimal normal subgroups, ordered by (order, member list).
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<SubgroupHandle>> {
        if self.order() == 1 {
            return Err(Error::domain("the trivial group has no minimal normal subgroups"));
        }
        // A minimal normal subgroup is the normal closure of any of its
        // elements of prime order, so those classes suffice.
        let classes = self.conjugacy_classes();
        let mut closures: Vec<SubgroupHandle> = (1..classes.num_classes())
            .filter(|&c| is_prime(classes.rep_order(c)))
            .map(|c| self.normal_closure(&[classes.reps()[c]]))
            .collect();
        closures.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        closures.dedup();
        let minimal: Vec<SubgroupHandle> = closures
            .iter()
            .filter(|n| {
                !closures
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subset_of(n))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    pub fn intersection(&self, a: &SubgroupHandle, b: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_parent(a)?;
        a.intersection(b)
    }

    pub(crate) fn check_parent(&self, h: &SubgroupHandle) -> Result<()> {
        if h.parent() != self.fingerprint {
            return Err(Error::input("subgroup belongs to a different group"));
        }
        Ok(())
    }

    /// The normal `p`-complement, if `G` has one.
    ///
    /// `G` is `p`-nilpotent exactly when the elements of order prime to `p`
    /// form a subgroup of order `|G|_{p'}`; that set is then the complement
    /// and is automatically normal.
    pub fn p_complement(&self, p: u64) -> Result<Option<SubgroupHandle>> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let target = p_prime_part(self.order() as u64, p) as usize;
        let mask: Vec<bool> = self
            .elements
            .iter()
            .map(|g| g.order() % p != 0)
            .collect();
        let count = mask.iter().filter(|&&m| m).count();
        if count != target {
            return Ok(None);
        }
        // Closed under multiplication iff the subgroup it generates is itself.
        let mut gens = Vec::new();
        let mut span = self.closure_mask(&gens);
        for x in 0..self.order() {
            if mask[x] && !span[x] {
                gens.push(x);
                span = self.closure_mask(&gens);
                if span.iter().filter(|&&m| m).count() > target {
                    return Ok(None);
                }
            }
        }
        if span != mask {
            return Ok(None);
        }
        Ok(Some(self.handle_from_mask(&mask)))
    }

    pub fn is_p_nilpotent(&self, p: u64) -> Result<bool> {
        Ok(self.p_complement(p)?.is_some())
    }

    /// Re-enumerates a subgroup as a group in its own right.
    pub fn subgroup_as_group(&self, h: &SubgroupHandle) -> FiniteGroup {
        let mut gens = Vec::new();
        let mut span = self.closure_mask(&gens);
        for &x in h.members() {
            if !span[x] {
                gens.push(x);
                span = self.closure_mask(&gens);
            }
        }
        let perms: Vec<Perm> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        FiniteGroup::generate_with_cap(self.degree, &perms, usize::MAX)
            .expect("subgroup generators share the parent degree")
    }
}
