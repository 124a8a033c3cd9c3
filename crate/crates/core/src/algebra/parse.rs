//! Polynomial strings.
//!
//! `term (('+' | '-') term)*`, where a term is a `*`-separated product of
//! integer or `a/b` coefficients and variable powers such as `x1^3` or
//! `T2`. Base variables answer to `x1..xd`, to the names configured for the
//! ring, and to `x, y, z` when `d <= 3`. Fiber variables are `T1..Tp`
//! (plain `T` when `p = 1`).

use std::collections::HashMap;

use super::field::Fp;
use super::monomial::Monomial;
use super::poly::BiPolynomial;
use super::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    X(usize),
    T(usize),
}

#[derive(Clone, Debug)]
pub struct VariableNames {
    nx: usize,
    nt: usize,
    names: HashMap<String, Var>,
}

impl VariableNames {
    pub fn new(ring: &Ring, x_names: &[String]) -> Result<Self> {
        let (nx, nt) = (ring.nx(), ring.nt());
        let mut names = HashMap::new();
        if nx <= 3 {
            for (i, n) in ["x", "y", "z"].iter().take(nx).enumerate() {
                names.insert(n.to_string(), Var::X(i));
            }
        }
        for i in 0..nx {
            names.insert(format!("x{}", i + 1), Var::X(i));
        }
        for j in 0..nt {
            names.insert(format!("T{}", j + 1), Var::T(j));
        }
        if nt == 1 {
            names.insert("T".into(), Var::T(0));
        }
        for (i, n) in x_names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::parse(format!("ring.x_vars[{i}]"), format!("invalid variable name {n:?}")));
            }
            if let Some(Var::T(_)) = names.get(n) {
                return Err(Error::parse(format!("ring.x_vars[{i}]"), format!("{n:?} names a fiber variable")));
            }
            names.insert(n.clone(), Var::X(i));
        }
        Ok(VariableNames { nx, nt, names })
    }

    pub fn parse(&self, ring: &Ring, text: &str) -> Result<BiPolynomial> {
        parse_polynomial(self, ring, text)
    }
}

fn split_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    let mut expecting_term = true;
    for ch in text.chars() {
        match ch {
            c if c.is_whitespace() => {}
            '+' | '-' => {
                if expecting_term {
                    if !cur.is_empty() {
                        return Err(Error::parse("polynomial", format!("unexpected sign in {text:?}")));
                    }
                    if ch == '-' {
                        negative = !negative;
                    }
                } else {
                    terms.push((negative, std::mem::take(&mut cur)));
                    negative = ch == '-';
                    expecting_term = true;
                }
            }
            c => {
                cur.push(c);
                expecting_term = c == '*' || c == '^' || c == '/';
            }
        }
    }
    if expecting_term {
        return Err(Error::parse("polynomial", format!("dangling operator in {text:?}")));
    }
    terms.push((negative, cur));
    Ok(terms)
}

fn parse_int(s: &str, text: &str) -> Result<i64> {
    s.parse::<i64>()
        .map_err(|_| Error::parse("polynomial", format!("bad integer {s:?} in {text:?}")))
}

pub fn parse_polynomial(names: &VariableNames, ring: &Ring, text: &str) -> Result<BiPolynomial> {
    let field = ring.field();
    if text.trim().is_empty() {
        return Err(Error::parse("polynomial", "empty string"));
    }
    let mut out = Vec::new();
    for (negative, term) in split_terms(text)? {
        let mut coef = if negative { field.from_i64(-1) } else { Fp::ONE };
        let mut x = vec![0u16; names.nx];
        let mut t = vec![0u16; names.nt];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::parse("polynomial", format!("empty factor in {text:?}")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                let c = match factor.split_once('/') {
                    Some((a, b)) => field.from_ratio(parse_int(a, text)?, parse_int(b, text)?)?,
                    None => field.from_i64(parse_int(factor, text)?),
                };
                coef = field.mul(coef, c);
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e = e
                        .parse::<u16>()
                        .map_err(|_| Error::parse("polynomial", format!("bad exponent {e:?} in {text:?}")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            match names.names.get(name) {
                Some(Var::X(i)) => x[*i] += exp,
                Some(Var::T(j)) => t[*j] += exp,
                None => {
                    return Err(Error::parse("polynomial", format!("unknown variable {name:?} in {text:?}")))
                }
            }
        }
        out.push((Monomial::from_exponents(&x, &t), coef));
    }
    Ok(BiPolynomial::from_terms(field, out))
}
