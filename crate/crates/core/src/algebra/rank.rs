//! Incremental row echelon form over a prime field.
//!
//! Rows are sparse `(column, value)` lists. Each accepted row is stored
//! normalized (leading entry 1) under its leading column, so reducing a new
//! row walks its nonzero columns left to right and clears every column that
//! already owns a pivot. Pivoting is deterministic: a row's pivot is its
//! first nonzero column after reduction.

use super::field::{Fp, PrimeField};

pub type SparseRow = Vec<(usize, Fp)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    pivots: Vec<Option<SparseRow>>,
    rank: usize,
    scratch: Vec<Fp>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            pivots: vec![None; ncols],
            rank: 0,
            scratch: vec![Fp::ZERO; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.ncols
    }

    /// Adds a row; returns true when it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, Fp)]) -> bool {
        if row.is_empty() || self.is_full() {
            return false;
        }
        let f = self.field;
        let mut lo = usize::MAX;
        for &(c, v) in row {
            debug_assert!(c < self.ncols);
            self.scratch[c] = f.add(self.scratch[c], v);
            lo = lo.min(c);
        }

        let mut lead = None;
        for c in lo..self.ncols {
            let v = self.scratch[c];
            if v.is_zero() {
                continue;
            }
            match &self.pivots[c] {
                Some(p) => {
                    let factor = v;
                    for &(pc, pv) in p {
                        self.scratch[pc] = f.sub(self.scratch[pc], f.mul(factor, pv));
                    }
                }
                None => {
                    lead = Some(c);
                    break;
                }
            }
        }

        let Some(lead) = lead else {
            return false;
        };
        let inv = f.inv(self.scratch[lead]);
        let mut stored = Vec::new();
        for c in lead..self.ncols {
            let v = self.scratch[c];
            if !v.is_zero() {
                stored.push((c, f.mul(v, inv)));
                self.scratch[c] = Fp::ZERO;
            }
        }
        self.pivots[lead] = Some(stored);
        self.rank += 1;
        true
    }
}

/// Rank of a sparse matrix given row by row.
pub fn rank_of<I>(field: PrimeField, ncols: usize, rows: I) -> usize
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut ech = Echelon::new(field, ncols);
    for r in rows {
        ech.insert(&r);
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}
