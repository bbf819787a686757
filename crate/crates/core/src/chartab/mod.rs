//! Irreducible character tables.
//!
//! [`character_table`] runs Dixon's method: the class matrices are
//! simultaneously diagonalized over a prime field `F_q` with
//! `q ≡ 1 (mod e)`, degrees are recovered from the modular norm, and each
//! value is lifted to an exact cyclotomic integer from the multiplicities of
//! the eigenvalues of a representing matrix.

mod coefficients;
mod dixon;
mod json;
mod verify;

use std::collections::HashMap;

pub use coefficients::{class_coefficients, ClassCoefficients};
pub use dixon::ModTable;
pub use json::{TableJson, TABLE_FORMAT_VERSION};
pub use verify::{galois_cross_check, verify_orthogonality, OrthogonalityReport};

use crate::arith::gcd;
use crate::cyclotomic::{CyclotomicBasis, CyclotomicValue};
use crate::error::{Error, Result};
use crate::group::{ClassData, FiniteGroup, SubgroupHandle};

/// Exact character table of a finite group.
///
/// Row 0 is the trivial character; the other rows are sorted by degree and
/// then by their canonical values. Columns follow the class order of
/// [`ClassData`].
#[derive(Debug, Clone)]
pub struct CharacterTable {
    parent: u64,
    order: usize,
    exponent: u64,
    classes: ClassData,
    basis: CyclotomicBasis,
    rows: Vec<Vec<CyclotomicValue>>,
    degrees: Vec<u64>,
    lookup: HashMap<Vec<CyclotomicValue>, usize>,
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    CharacterTable::compute(g, g.conjugacy_classes())
}

impl CharacterTable {
    pub fn compute(g: &FiniteGroup, classes: ClassData) -> Result<Self> {
        let coeffs = ClassCoefficients::compute(g, &classes);
        let modular = ModTable::compute(g, &classes, &coeffs)?;
        let e = modular.exponent;
        let conductor = u32::try_from(e).map_err(|_| Error::input("group exponent too large"))?;
        let basis = CyclotomicBasis::new(conductor);
        let rows = modular.lift(g, &classes, &basis)?;

        let one = CyclotomicValue::one(conductor);
        let mut order: Vec<usize> = (0..rows.len()).collect();
        let trivial = order
            .iter()
            .position(|&i| rows[i].iter().all(|v| *v == one))
            .ok_or_else(|| Error::internal("no trivial character found"))?;
        order.remove(trivial);
        order.sort_by(|&a, &b| {
            modular.degrees[a]
                .cmp(&modular.degrees[b])
                .then_with(|| rows[a].cmp(&rows[b]))
        });
        order.insert(0, trivial);

        let mut slots: Vec<Option<Vec<CyclotomicValue>>> = rows.into_iter().map(Some).collect();
        let rows: Vec<Vec<CyclotomicValue>> = order.iter().map(|&i| slots[i].take().unwrap()).collect();
        let degrees: Vec<u64> = order.iter().map(|&i| modular.degrees[i]).collect();
        Ok(Self::from_parts(g, classes, basis, rows, degrees))
    }

    fn from_parts(
        g: &FiniteGroup,
        classes: ClassData,
        basis: CyclotomicBasis,
        rows: Vec<Vec<CyclotomicValue>>,
        degrees: Vec<u64>,
    ) -> Self {
        let lookup = rows.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        CharacterTable {
            parent: g.fingerprint(),
            order: g.order(),
            exponent: basis.conductor() as u64,
            classes,
            basis,
            rows,
            degrees,
            lookup,
        }
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// The exponent `e` of the group; all values lie in `Q(ζ_e)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn basis(&self) -> &CyclotomicBasis {
        &self.basis
    }

    pub fn num_characters(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<CyclotomicValue>] {
        &self.rows
    }

    pub fn row(&self, chi: usize) -> &[CyclotomicValue] {
        &self.rows[chi]
    }

    pub fn value(&self, chi: usize, class: usize) -> &CyclotomicValue {
        &self.rows[chi][class]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn is_linear(&self, chi: usize) -> bool {
        self.degrees[chi] == 1
    }

    /// Index of the row with exactly these values.
    pub fn find_row(&self, values: &[CyclotomicValue]) -> Option<usize> {
        self.lookup.get(values).copied()
    }

    /// Classes on which `χ` takes the value `χ(1)`.
    pub fn kernel_classes(&self, chi: usize) -> Vec<usize> {
        let deg = &self.rows[chi][0];
        (0..self.classes.num_classes())
            .filter(|&c| self.rows[chi][c] == *deg)
            .collect()
    }

    /// `ker χ = {g : χ(g) = χ(1)}`.
    pub fn character_kernel(&self, g: &FiniteGroup, chi: usize) -> Result<SubgroupHandle> {
        if g.fingerprint() != self.parent {
            return Err(Error::input("table belongs to a different group"));
        }
        if chi >= self.rows.len() {
            return Err(Error::input(format!("no character with index {chi}")));
        }
        let in_kernel = {
            let mut mask = vec![false; self.classes.num_classes()];
            for c in self.kernel_classes(chi) {
                mask[c] = true;
            }
            mask
        };
        let members = (0..self.order)
            .filter(|&x| in_kernel[self.classes.class_of(x)])
            .collect();
        Ok(SubgroupHandle::from_sorted(self.parent, members))
    }

    /// Row of `χ^σ` where `σ: ζ_e -> ζ_e^k`.
    pub fn galois_conjugate(&self, chi: usize, k: i64) -> Result<usize> {
        let e = self.exponent as i64;
        if gcd(k.rem_euclid(e) as u64, e as u64) != 1 {
            return Err(Error::input(format!("{k} is not coprime to the exponent {e}")));
        }
        if chi >= self.rows.len() {
            return Err(Error::input(format!("no character with index {chi}")));
        }
        let image: Vec<CyclotomicValue> = self.rows[chi]
            .iter()
            .map(|v| v.galois_with(&self.basis, k))
            .collect();
        self.find_row(&image)
            .ok_or_else(|| Error::internal("Galois image of a character is not in the table"))
    }

    #[cfg(test)]
    pub(crate) fn set_value(&mut self, chi: usize, class: usize, value: CyclotomicValue) {
        self.rows[chi][class] = value;
    }
}
