//! Exact arithmetic: prime-field scalars, bigraded monomials and polynomials,
//! module vectors, and ranks of coefficient matrices.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rank;
pub mod vector;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use field::{Fp, PrimeField, DEFAULT_PRIME};
pub use monomial::{binomial, count_monomials, monomial_basis, Monomial};
pub use poly::{BiPolynomial, Homogeneity};
pub use rank::{rank_of, Echelon, SparseRow};
pub use vector::ModuleVector;

use crate::error::{Error, Result};

/// Column lookup for one bidegree: position of each monomial in
/// [`monomial_basis`].
#[derive(Debug)]
pub struct BasisIndex {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl BasisIndex {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// The bigraded ring `A = F_q[x_1..x_d][T_1..T_p]`.
///
/// Configuration is immutable after construction; the basis cache is the
/// only interior state and is safe to share across threads.
#[derive(Debug)]
pub struct Ring {
    field: PrimeField,
    nx: usize,
    nt: usize,
    bases: RwLock<HashMap<(u32, u32), Arc<BasisIndex>>>,
}

impl Clone for Ring {
    fn clone(&self) -> Self {
        Ring {
            field: self.field,
            nx: self.nx,
            nt: self.nt,
            bases: RwLock::default(),
        }
    }
}

impl Ring {
    pub fn new(nx: usize, nt: usize, prime: u32) -> Result<Self> {
        if nx == 0 {
            return Err(Error::Precondition("the base ring needs at least one variable".into()));
        }
        Ok(Ring {
            field: PrimeField::new(prime)?,
            nx,
            nt,
            bases: RwLock::default(),
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.modulus()
    }

    /// Number of base variables `d`.
    pub fn nx(&self) -> usize {
        self.nx
    }

    /// Number of fiber variables `p`.
    pub fn nt(&self) -> usize {
        self.nt
    }

    /// Same variables over a different prime.
    pub fn with_prime(&self, prime: u32) -> Result<Self> {
        Ring::new(self.nx, self.nt, prime)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nx, self.nt)
    }

    pub fn x_var(&self, i: usize) -> Monomial {
        let mut x = vec![0; self.nx];
        x[i] = 1;
        Monomial::from_exponents(&x, &vec![0; self.nt])
    }

    pub fn t_var(&self, j: usize) -> Monomial {
        let mut t = vec![0; self.nt];
        t[j] = 1;
        Monomial::from_exponents(&vec![0; self.nx], &t)
    }

    pub fn monomial_basis(&self, x_degree: u32, t_degree: u32) -> Vec<Monomial> {
        monomial_basis(self.nx, self.nt, x_degree, t_degree)
    }

    pub fn piece_size(&self, x_degree: u32, t_degree: u32) -> usize {
        (count_monomials(self.nx, x_degree) * count_monomials(self.nt, t_degree)) as usize
    }

    pub fn basis(&self, x_degree: u32, t_degree: u32) -> Arc<BasisIndex> {
        let key = (x_degree, t_degree);
        if let Some(b) = self.bases.read().expect("basis cache poisoned").get(&key) {
            return Arc::clone(b);
        }
        let monomials = self.monomial_basis(x_degree, t_degree);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let built = Arc::new(BasisIndex { monomials, index });
        let mut cache = self.bases.write().expect("basis cache poisoned");
        Arc::clone(cache.entry(key).or_insert(built))
    }

    /// Sparse coefficient row of `mult * v` in the bidegree piece whose basis
    /// is `basis`; columns are `(slot, monomial)` pairs, slot-major.
    pub fn coefficient_row(&self, v: &ModuleVector, mult: &Monomial, basis: &BasisIndex) -> SparseRow {
        let width = basis.len();
        let mut row: SparseRow = v
            .support()
            .map(|(slot, m, c)| {
                let pos = basis
                    .position(&m.mul(mult))
                    .expect("product lies outside the requested bidegree");
                (slot * width + pos, c)
            })
            .collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        row
    }
}

/// Dimension over the field of the span of `vectors` inside the bidegree
/// `(x_degree, t_degree)` piece of the free module.
pub fn span_dimension(ring: &Ring, vectors: &[ModuleVector], x_degree: u32, t_degree: u32) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let q = first.rank();
    let basis = ring.basis(x_degree, t_degree);
    let mut ech = Echelon::new(*ring.field(), q * basis.len());
    let one = ring.one();
    for (index, v) in vectors.iter().enumerate() {
        if v.rank() != q {
            return Err(Error::Precondition(format!(
                "vector {index} has rank {} but the span lives in rank {q}",
                v.rank()
            )));
        }
        match v.homogeneity() {
            Homogeneity::Zero => continue,
            Homogeneity::Bihomogeneous(a, b) if (a, b) == (x_degree, t_degree) => {}
            Homogeneity::Bihomogeneous(a, b) => {
                return Err(Error::Inhomogeneous {
                    index,
                    detail: format!("bidegree ({a}, {b}) differs from requested ({x_degree}, {t_degree})"),
                })
            }
            Homogeneity::Inhomogeneous => {
                return Err(Error::Inhomogeneous {
                    index,
                    detail: "terms of several bidegrees".into(),
                })
            }
        }
        ech.insert(&ring.coefficient_row(v, &one, &basis));
    }
    Ok(ech.rank())
}
