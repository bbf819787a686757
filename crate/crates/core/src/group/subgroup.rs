use crate::error::{Error, Result};

/// A subgroup of a [`super::FiniteGroup`], as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupHandle {
    parent: u64,
    members: Vec<usize>,
}

impl SubgroupHandle {
    pub(crate) fn from_sorted(parent: u64, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubgroupHandle { parent, members }
    }

    pub(crate) fn parent(&self) -> u64 {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &SubgroupHandle) -> bool {
        self.parent == other.parent && self.members.iter().all(|&x| other.contains(x))
    }

    pub(crate) fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    pub fn intersection(&self, other: &SubgroupHandle) -> Result<SubgroupHandle> {
        if self.parent != other.parent {
            return Err(Error::input("subgroups belong to different groups"));
        }
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Ok(SubgroupHandle::from_sorted(self.parent, members))
    }
}
