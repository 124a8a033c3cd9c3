//! Exact recovery of eventually polynomial functions in the binomial basis
//! `C(s+k, k) · C(n+l, l)`.
//!
//! A block of table values determines the Newton form of the interpolating
//! polynomial around the block origin. The binomial-basis coefficients are
//! then read off as iterated backward differences at `(-1, -1)`, because
//! `∇ C(s+k, k) = C(s+k-1, k-1)` and `C(-1+k, k)` vanishes for `k > 0`.
//! Everything is integer arithmetic: an integer-valued polynomial has
//! integer coordinates in this basis.

use std::collections::BTreeMap;

use serde::Serialize;

use super::HilbertTable;
use crate::error::{Error, Result};

/// `C(u, a)` for any integer `u`.
pub fn gbinom(u: i128, a: usize) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..a as i128 {
        acc = acc * (u - i) / (i + 1);
    }
    acc
}

/// Value of the binomial basis element `C(s+k, k)` at `s >= 0`.
fn basis_at(s: i128, k: usize) -> i128 {
    gbinom(s + k as i128, k)
}

/// Coefficients `a_{k,l}` with `k + l <= D - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialFit {
    pub total_degree_bound: usize,
    pub coefficients: BTreeMap<(usize, usize), i128>,
    pub validated: bool,
}

impl BinomialFit {
    pub fn coefficient(&self, k: usize, l: usize) -> i128 {
        self.coefficients.get(&(k, l)).copied().unwrap_or(0)
    }

    pub fn evaluate(&self, s: i128, n: i128) -> i128 {
        self.coefficients
            .iter()
            .map(|(&(k, l), &a)| a * basis_at(s, k) * basis_at(n, l))
            .sum()
    }
}

/// Fits a polynomial of total degree at most `d - 1` to `table`, using the
/// lower-left `(d+1) x (d+1)` block and validating on every cell.
pub fn fit_binomial(table: &HilbertTable, d: usize) -> Result<BinomialFit> {
    if d == 0 {
        return Err(Error::Precondition("dimension bound D must be at least 1".into()));
    }
    let block = d + 1;
    if table.height() < block + 1 || table.width() < block + 1 {
        return Err(Error::Precondition(format!(
            "a {}x{} window is too small to fit and validate D = {d}",
            table.height(),
            table.width()
        )));
    }

    // forward differences Δ_s^a Δ_n^b at the block origin
    let mut delta: Vec<Vec<i128>> = (0..block)
        .map(|a| (0..block).map(|b| table.values[a][b] as i128).collect())
        .collect();
    for row in delta.iter_mut() {
        for level in 1..block {
            for b in (level..block).rev() {
                row[b] -= row[b - 1];
            }
        }
    }
    for b in 0..block {
        for level in 1..block {
            for a in (level..block).rev() {
                delta[a][b] -= delta[a - 1][b];
            }
        }
    }

    let (s0, n0) = (table.origin.0 as i128, table.origin.1 as i128);
    let newton = |s: i128, n: i128| -> i128 {
        let mut v = 0;
        for (a, row) in delta.iter().enumerate() {
            let cs = gbinom(s - s0, a);
            for (b, &dv) in row.iter().enumerate() {
                if dv != 0 {
                    v += dv * cs * gbinom(n - n0, b);
                }
            }
        }
        v
    };

    let mut coefficients = BTreeMap::new();
    for k in 0..d {
        for l in 0..d - k {
            let mut a = 0i128;
            for i in 0..=k {
                for j in 0..=l {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    a += sign * gbinom(k as i128, i) * gbinom(l as i128, j) * newton(-1 - i as i128, -1 - j as i128);
                }
            }
            if a != 0 {
                coefficients.insert((k, l), a);
            }
        }
    }

    let mut fit = BinomialFit { total_degree_bound: d - 1, coefficients, validated: false };
    fit.validated = table.cells().all(|(s, n, v)| fit.evaluate(s as i128, n as i128) == v as i128);
    Ok(fit)
}

/// Single-variable analogue: `P(n) = Σ_k a_k C(n+k, k)`, `k <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnivariateFit {
    pub origin: u32,
    pub coefficients: Vec<i128>,
    pub validated: bool,
}

impl UnivariateFit {
    pub fn evaluate(&self, n: i128) -> i128 {
        self.coefficients.iter().enumerate().map(|(k, a)| a * basis_at(n, k)).sum()
    }

    /// Degree of the fitted polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|&a| a != 0)
    }

    /// `a_k`; for `k` the degree this is `k!` times the leading coefficient.
    pub fn coefficient(&self, k: usize) -> i128 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }
}

/// Fits `values[i] = P(origin + i)` with `deg P <= max_degree` from the first
/// `max_degree + 1` values and validates on the rest.
pub fn fit_univariate(origin: u32, values: &[i128], max_degree: usize) -> Result<UnivariateFit> {
    let block = max_degree + 1;
    if values.len() < block + 1 {
        return Err(Error::Precondition(format!(
            "{} values cannot fit and validate a degree {max_degree} polynomial",
            values.len()
        )));
    }
    let mut delta: Vec<i128> = values[..block].to_vec();
    for level in 1..block {
        for b in (level..block).rev() {
            delta[b] -= delta[b - 1];
        }
    }
    let o = origin as i128;
    let newton = |n: i128| -> i128 { delta.iter().enumerate().map(|(a, &dv)| dv * gbinom(n - o, a)).sum() };
    let coefficients: Vec<i128> = (0..block)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * gbinom(k as i128, i) * newton(-1 - i as i128)
                })
                .sum()
        })
        .collect();
    let mut fit = UnivariateFit { origin, coefficients, validated: false };
    fit.validated = values.iter().enumerate().all(|(i, &v)| fit.evaluate(o + i as i128) == v);
    Ok(fit)
}
