use std::collections::BTreeMap;
use std::fmt;

use super::field::{Fp, PrimeField};
use super::monomial::Monomial;

/// Degree profile of a polynomial or vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Bihomogeneous(u32, u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn merge(self, other: Homogeneity) -> Homogeneity {
        use Homogeneity::*;
        match (self, other) {
            (Zero, h) | (h, Zero) => h,
            (Bihomogeneous(a, b), Bihomogeneous(c, d)) if a == c && b == d => self,
            _ => Inhomogeneous,
        }
    }
}

/// Sparse polynomial over a prime field. Terms are kept sorted with the
/// largest monomial first and never carry a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPolynomial {
    terms: Vec<(Monomial, Fp)>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        BiPolynomial { terms: Vec::new() }
    }

    pub fn monomial(m: Monomial, c: Fp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            BiPolynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary terms, combining repeats.
    pub fn from_terms(field: &PrimeField, terms: impl IntoIterator<Item = (Monomial, Fp)>) -> Self {
        let mut acc: BTreeMap<Monomial, Fp> = BTreeMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert(Fp::ZERO);
            *slot = field.add(*slot, c);
        }
        BiPolynomial {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, Fp)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        self.terms
            .iter()
            .fold(Homogeneity::Zero, |h, (m, _)| {
                let (a, b) = m.bidegree();
                h.merge(Homogeneity::Bihomogeneous(a, b))
            })
    }

    pub fn add(&self, other: &Self, field: &PrimeField) -> Self {
        Self::from_terms(field, self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn neg(&self, field: &PrimeField) -> Self {
        BiPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self, field: &PrimeField) -> Self {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: Fp, field: &PrimeField) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPolynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // multiplication by a monomial preserves the term order
        BiPolynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, field: &PrimeField) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_terms(
            field,
            self.terms.iter().flat_map(|(a, ca)| {
                other
                    .terms
                    .iter()
                    .map(move |(b, cb)| (a.mul(b), field.mul(*ca, *cb)))
            }),
        )
    }

    pub fn display<'a>(&'a self, field: &'a PrimeField) -> impl fmt::Display + 'a {
        DisplayPoly { poly: self, field }
    }
}

impl fmt::Debug for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{m}")?;
        }
        Ok(())
    }
}

struct DisplayPoly<'a> {
    poly: &'a BiPolynomial,
    field: &'a PrimeField,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let v = self.field.signed(*c);
            let (sign, mag) = if v < 0 { ("-", -v) } else { ("+", v) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            match (mag, m.is_one()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{m}")?,
                _ => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}
