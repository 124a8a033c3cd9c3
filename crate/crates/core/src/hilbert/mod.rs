//! Exact bigraded Hilbert tables and the multiplicity sequences read off
//! their fitted leading coefficients.

pub mod fit;
pub mod functions;

use std::fmt::{self, Write as _};

use serde::Serialize;

pub use fit::{fit_binomial, fit_univariate, BinomialFit, UnivariateFit};
pub use functions::{module_dimension, AchillesManaresi, IdealModulePair};

use crate::error::{Error, Result};

pub const DEFAULT_WINDOW_CAP: u32 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HilbertKind {
    /// First sum transform of the Hilbert function of `G_m(A_1 G_I(M))`.
    #[serde(rename = "hsharp")]
    HSharp,
    /// First sum transform of the Hilbert function of `G_m(G_I(M))`.
    #[serde(rename = "hstar")]
    HStar,
    /// First sum transform for `G_I(M) / A_1 G_I(M)`.
    #[serde(rename = "b")]
    B,
    /// Double sum transform of the Achilles-Manaresi function.
    #[serde(rename = "am")]
    AchillesManaresi,
}

impl HilbertKind {
    pub fn name(self) -> &'static str {
        match self {
            HilbertKind::HSharp => "hsharp",
            HilbertKind::HStar => "hstar",
            HilbertKind::B => "b",
            HilbertKind::AchillesManaresi => "am",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [HilbertKind::HSharp, HilbertKind::HStar, HilbertKind::B, HilbertKind::AchillesManaresi]
            .into_iter()
            .find(|k| k.name() == name)
    }
}

impl fmt::Display for HilbertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rectangular block `s0 <= s < s0+H`, `n0 <= n < n0+W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub origin: (u32, u32),
    pub size: (usize, usize),
}

impl Window {
    pub fn square(origin: u32, size: usize) -> Self {
        Window { origin: (origin, origin), size: (size, size) }
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (s0, n0) = self.origin;
        (0..self.size.0 as u32).flat_map(move |a| (0..self.size.1 as u32).map(move |b| (s0 + a, n0 + b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub kind: HilbertKind,
    pub origin: (u32, u32),
    /// `values[a][b] = h(s0 + a, n0 + b)`
    pub values: Vec<Vec<u64>>,
}

impl HilbertTable {
    pub fn height(&self) -> usize {
        self.values.len()
    }

    pub fn width(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn window(&self) -> Window {
        Window { origin: self.origin, size: (self.height(), self.width()) }
    }

    pub fn get(&self, s: u32, n: u32) -> Option<u64> {
        let a = s.checked_sub(self.origin.0)? as usize;
        let b = n.checked_sub(self.origin.1)? as usize;
        self.values.get(a)?.get(b).copied()
    }

    /// `(s, n, value)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        let (s0, n0) = self.origin;
        self.values.iter().enumerate().flat_map(move |(a, row)| {
            row.iter().enumerate().map(move |(b, &v)| (s0 + a as u32, n0 + b as u32, v))
        })
    }

    /// Tab-separated export: a `#` header line with the table kind, origin
    /// and ring, a column line of `n` values, then one row per `s`.
    pub fn to_tsv(&self, ring: &str) -> String {
        let mut out = String::new();
        let (s0, n0) = self.origin;
        let _ = writeln!(out, "# kind={}\torigin={s0},{n0}\t{ring}", self.kind);
        out.push_str("s\\n");
        for b in 0..self.width() {
            let _ = write!(out, "\t{}", n0 as usize + b);
        }
        out.push('\n');
        for (a, row) in self.values.iter().enumerate() {
            let _ = write!(out, "{}", s0 as usize + a);
            for v in row {
                let _ = write!(out, "\t{v}");
            }
            out.push('\n');
        }
        out
    }
}

/// `D` and `c_0, ..., c_{D-1}`, with the table and window that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicitySequence {
    #[serde(rename = "D")]
    pub dimension_bound: usize,
    pub c: Vec<i64>,
    pub kind: HilbertKind,
    pub window: Window,
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `c_k = a_{k, D-1-k}`; when the fitted degree is below `D - 1` these slots
/// are all zero, which is the zero padding for modules of smaller dimension.
pub fn extract_ck(fit: &BinomialFit, d: usize, kind: HilbertKind, window: Window) -> Result<MultiplicitySequence> {
    if !fit.validated {
        return Err(Error::NotPolynomial { what: format!("{kind} fit"), cap: window.origin.0 as usize });
    }
    if fit.total_degree_bound + 1 != d {
        return Err(Error::Precondition(format!(
            "fit has degree bound {} but D = {d}",
            fit.total_degree_bound
        )));
    }
    let mut c = Vec::with_capacity(d);
    for k in 0..d {
        let l = d - 1 - k;
        let a = fit.coefficient(k, l);
        if a < 0 {
            return Err(Error::NegativeLeading { k, l, value: a });
        }
        c.push(i64::try_from(a).map_err(|_| Error::Precondition(format!("coefficient a[{k},{l}] overflows")))?);
    }
    Ok(MultiplicitySequence { dimension_bound: d, c, kind, window })
}

/// Origins tried by the stabilization search: `1, 3, 5, ...` up to `cap`.
pub fn origins(cap: u32) -> impl Iterator<Item = u32> {
    (1..=cap.max(1)).step_by(2)
}

/// Fits a `(D+3) x (D+3)` window, moving its origin diagonally until the
/// fit validates or the origin passes `cap`.
pub fn stabilized_fit<F>(kind: HilbertKind, d: usize, cap: u32, mut build: F) -> Result<(BinomialFit, HilbertTable)>
where
    F: FnMut(Window) -> Result<HilbertTable>,
{
    for origin in origins(cap) {
        let table = build(Window::square(origin, d + 3))?;
        let fit = fit_binomial(&table, d)?;
        if fit.validated {
            return Ok((fit, table));
        }
    }
    Err(Error::NotPolynomial { what: format!("{kind} table"), cap: cap as usize })
}

/// One-variable version of [`stabilized_fit`] over `max_degree + 3` points.
pub fn stabilized_univariate<F>(what: &str, max_degree: usize, cap: u32, mut value: F) -> Result<UnivariateFit>
where
    F: FnMut(u32) -> Result<i128>,
{
    for origin in origins(cap) {
        let values = (origin..origin + max_degree as u32 + 3).map(&mut value).collect::<Result<Vec<_>>>()?;
        let fit = fit_univariate(origin, &values, max_degree)?;
        if fit.validated {
            return Ok(fit);
        }
    }
    Err(Error::NotPolynomial { what: what.to_string(), cap: cap as usize })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn fit_with(coeffs: &[((usize, usize), i128)], d: usize) -> BinomialFit {
        BinomialFit { total_degree_bound: d - 1, coefficients: BTreeMap::from_iter(coeffs.iter().copied()), validated: true }
    }

    #[test]
    fn extraction_reads_the_top_diagonal() {
        let w = Window::square(1, 6);
        let s = extract_ck(&fit_with(&[((1, 1), 1), ((1, 0), -1)], 3), 3, HilbertKind::HSharp, w).unwrap();
        assert_eq!(s.c, vec![0, 1, 0]);
        let s = extract_ck(&fit_with(&[((0, 1), 2), ((0, 0), -2)], 2), 2, HilbertKind::HSharp, w).unwrap();
        assert_eq!(s.c, vec![2, 0]);
        let s = extract_ck(&fit_with(&[], 4), 4, HilbertKind::HSharp, w).unwrap();
        assert_eq!(s.c, vec![0, 0, 0, 0]);
        assert_eq!(s.to_string(), "(0,0,0,0)");
    }

    #[test]
    fn extraction_rejects_bad_fits() {
        let w = Window::square(1, 6);
        let neg = extract_ck(&fit_with(&[((0, 1), -3)], 2), 2, HilbertKind::HSharp, w).unwrap_err();
        assert!(matches!(neg, Error::NegativeLeading { k: 0, l: 1, value: -3 }));
        let mut unvalidated = fit_with(&[], 2);
        unvalidated.validated = false;
        assert!(matches!(extract_ck(&unvalidated, 2, HilbertKind::HSharp, w), Err(Error::NotPolynomial { .. })));
    }

    #[test]
    fn stabilization_moves_the_window() {
        // polynomial only once s >= 4
        let build = |w: Window| -> Result<HilbertTable> {
            let values = (0..w.size.0)
                .map(|a| {
                    (0..w.size.1)
                        .map(|b| {
                            let (s, n) = (w.origin.0 as u64 + a as u64, w.origin.1 as u64 + b as u64);
                            s.min(4) * n
                        })
                        .collect()
                })
                .collect();
            Ok(HilbertTable { kind: HilbertKind::HSharp, origin: w.origin, values })
        };
        let (fit, table) = stabilized_fit(HilbertKind::HSharp, 2, 15, build).unwrap();
        assert_eq!(table.origin, (5, 5));
        assert_eq!(fit.coefficient(0, 1), 4);
        assert!(matches!(stabilized_fit(HilbertKind::HSharp, 2, 3, build), Err(Error::NotPolynomial { .. })));
    }

    #[test]
    fn tsv_layout() {
        let t = HilbertTable { kind: HilbertKind::B, origin: (1, 2), values: vec![vec![1, 2], vec![3, 4]] };
        assert_eq!(t.to_tsv("prime=101"), "# kind=b\torigin=1,2\tprime=101\ns\\n\t2\t3\n1\t1\t2\n2\t3\t4\n");
        assert_eq!(t.get(2, 3), Some(4));
        assert_eq!(t.get(0, 3), None);
    }
}
