use super::field::PrimeField;
use super::monomial::Monomial;
use super::poly::{BiPolynomial, Homogeneity};

/// An element of a free module `A^q`, one polynomial per slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    entries: Vec<BiPolynomial>,
}

impl ModuleVector {
    pub fn new(entries: Vec<BiPolynomial>) -> Self {
        ModuleVector { entries }
    }

    pub fn zero(rank: usize) -> Self {
        ModuleVector {
            entries: vec![BiPolynomial::zero(); rank],
        }
    }

    /// The `slot`-th standard basis vector of `A^rank`.
    pub fn unit(rank: usize, slot: usize, nx: usize, nt: usize) -> Self {
        let mut v = Self::zero(rank);
        v.entries[slot] = BiPolynomial::monomial(Monomial::one(nx, nt), super::field::Fp::ONE);
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BiPolynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiPolynomial::is_zero)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        self.entries
            .iter()
            .fold(Homogeneity::Zero, |h, e| h.merge(e.homogeneity()))
    }

    pub fn scale_by(&self, f: &BiPolynomial, field: &PrimeField) -> Self {
        ModuleVector {
            entries: self.entries.iter().map(|e| e.mul(f, field)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        ModuleVector {
            entries: self.entries.iter().map(|e| e.mul_monomial(m)).collect(),
        }
    }

    /// Iterates `(slot, monomial, coefficient)` over all nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Monomial, super::field::Fp)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(slot, p)| p.terms().iter().map(move |(m, c)| (slot, m, *c)))
    }
}
