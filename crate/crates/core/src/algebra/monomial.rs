use std::cmp::Ordering;
use std::fmt;

/// A monomial `x^a T^b` in `d` base variables and `p` fiber variables.
///
/// The exponent vector stores the x-block first, then the T-block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    nx: u16,
}

impl Monomial {
    pub fn one(nx: usize, nt: usize) -> Self {
        Monomial {
            exps: vec![0; nx + nt].into_boxed_slice(),
            nx: nx as u16,
        }
    }

    pub fn from_exponents(x: &[u16], t: &[u16]) -> Self {
        let mut exps = Vec::with_capacity(x.len() + t.len());
        exps.extend_from_slice(x);
        exps.extend_from_slice(t);
        Monomial {
            exps: exps.into_boxed_slice(),
            nx: x.len() as u16,
        }
    }

    pub fn x_exponents(&self) -> &[u16] {
        &self.exps[..self.nx as usize]
    }

    pub fn t_exponents(&self) -> &[u16] {
        &self.exps[self.nx as usize..]
    }

    pub fn x_degree(&self) -> u32 {
        self.x_exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn t_degree(&self) -> u32 {
        self.t_exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.x_degree(), self.t_degree())
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, nx: self.nx }
    }
}

/// Graded order: x-degree, then T-degree, then lexicographic on the x-block
/// followed by the T-block (larger leading exponent is larger).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| self.t_degree().cmp(&other.t_degree()))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let names = self
            .x_exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| (format!("x{}", i + 1), e))
            .chain(
                self.t_exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (format!("T{}", i + 1), e)),
            );
        for (name, e) in names {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors of length `n` summing to `degree`, in descending
/// lexicographic order.
fn compositions(n: usize, degree: u32) -> Vec<Vec<u16>> {
    fn go(n: usize, left: u32, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == n {
            prefix.push(left as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e as u16);
            go(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, degree, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every monomial of bidegree `(x_degree, t_degree)`, largest first.
pub fn monomial_basis(nx: usize, nt: usize, x_degree: u32, t_degree: u32) -> Vec<Monomial> {
    let xs = compositions(nx, x_degree);
    let ts = compositions(nt, t_degree);
    let mut out = Vec::with_capacity(xs.len() * ts.len());
    for x in &xs {
        for t in &ts {
            out.push(Monomial::from_exponents(x, t));
        }
    }
    out
}

/// `C(n, k)` for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `degree` in `n` variables.
pub fn count_monomials(n: usize, degree: u32) -> u64 {
    if n == 0 {
        return u64::from(degree == 0);
    }
    binomial(degree as u64 + n as u64 - 1, n as u64 - 1)
}
