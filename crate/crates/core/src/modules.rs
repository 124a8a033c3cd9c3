//! Bihomogeneous submodules of `M = A ⊗ N` and the quotient lengths every
//! Hilbert function in this crate is built from.
//!
//! All submodules live in the free module `A^q` that presents `N`; the
//! relations of `N` (extended to `A`) are added to every span, so a piece
//! dimension is always measured inside `M = A^q / K`.

use std::collections::HashSet;
use std::sync::{Arc, Mutex};

use crate::algebra::{BiPolynomial, Echelon, Homogeneity, ModuleVector, Ring};
use crate::error::{Error, Result};

pub const DEFAULT_GEN_CAP: usize = 20_000;

/// A finitely generated bihomogeneous submodule of `A^q`, stored as a
/// generator list. The zero submodule has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubmodule {
    rank: usize,
    gens: Vec<ModuleVector>,
    degrees: Vec<(u32, u32)>,
}

impl GradedSubmodule {
    pub fn new(rank: usize, gens: Vec<ModuleVector>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        let mut degrees = Vec::with_capacity(gens.len());
        for (index, g) in gens.into_iter().enumerate() {
            if g.rank() != rank {
                return Err(Error::Precondition(format!(
                    "generator {index} has rank {} in an ambient module of rank {rank}",
                    g.rank()
                )));
            }
            match g.homogeneity() {
                Homogeneity::Zero => {}
                Homogeneity::Bihomogeneous(a, b) => {
                    kept.push(g);
                    degrees.push((a, b));
                }
                Homogeneity::Inhomogeneous => {
                    return Err(Error::Inhomogeneous {
                        index,
                        detail: "entries of different bidegrees".into(),
                    })
                }
            }
        }
        Ok(GradedSubmodule { rank, gens: kept, degrees })
    }

    pub fn zero(rank: usize) -> Self {
        GradedSubmodule { rank, gens: Vec::new(), degrees: Vec::new() }
    }

    /// The whole free module `A^rank`.
    pub fn free(ring: &Ring, rank: usize) -> Self {
        let gens = (0..rank).map(|j| ModuleVector::unit(rank, j, ring.nx(), ring.nt())).collect();
        GradedSubmodule { rank, gens, degrees: vec![(0, 0); rank] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.gens
    }

    pub fn bidegrees(&self) -> &[(u32, u32)] {
        &self.degrees
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_gen_xdeg(&self) -> u32 {
        self.degrees.iter().map(|d| d.0).max().unwrap_or(0)
    }

    pub fn min_gen_xdeg(&self) -> u32 {
        self.degrees.iter().map(|d| d.0).min().unwrap_or(0)
    }

    pub fn max_gen_tdeg(&self) -> u32 {
        self.degrees.iter().map(|d| d.1).max().unwrap_or(0)
    }

    pub fn min_gen_tdeg(&self) -> u32 {
        self.degrees.iter().map(|d| d.1).min().unwrap_or(0)
    }

    /// The common T-degree of all generators, if there is one.
    pub fn single_t_degree(&self) -> Option<u32> {
        let t = self.degrees.first()?.1;
        self.degrees.iter().all(|d| d.1 == t).then_some(t)
    }

    /// `A^q`-direct sum with another submodule, slots of `self` first.
    pub fn direct_sum(&self, other: &GradedSubmodule) -> GradedSubmodule {
        let pad = |v: &ModuleVector, before: usize, after: usize| {
            let mut e = vec![BiPolynomial::zero(); before];
            e.extend_from_slice(v.entries());
            e.extend(std::iter::repeat_n(BiPolynomial::zero(), after));
            ModuleVector::new(e)
        };
        let mut gens: Vec<_> = self.gens.iter().map(|v| pad(v, 0, other.rank)).collect();
        gens.extend(other.gens.iter().map(|v| pad(v, self.rank, 0)));
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        GradedSubmodule { rank: self.rank + other.rank, gens, degrees }
    }
}

/// `N = R^q / relations`, generated in degree zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    free_rank: usize,
    relations: GradedSubmodule,
}

impl ModulePresentation {
    pub fn new(free_rank: usize, relations: Vec<ModuleVector>) -> Result<Self> {
        if free_rank == 0 {
            return Err(Error::Precondition("N needs free rank at least 1".into()));
        }
        let relations = GradedSubmodule::new(free_rank, relations)?;
        if relations.max_gen_tdeg() > 0 {
            return Err(Error::Precondition("relations of N may not involve fiber variables".into()));
        }
        Ok(ModulePresentation { free_rank, relations })
    }

    /// `N = R^q`.
    pub fn free(free_rank: usize) -> Self {
        ModulePresentation { free_rank, relations: GradedSubmodule::zero(free_rank) }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn relations(&self) -> &GradedSubmodule {
        &self.relations
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> ModulePresentation {
        ModulePresentation {
            free_rank: self.free_rank + other.free_rank,
            relations: self.relations.direct_sum(&other.relations),
        }
    }
}

/// A submodule together with a lower bound on the bidegree of the
/// multipliers applied to its generators: `Shifted { min_x: a, min_t: b }`
/// spans `m^a · A_b · X` (with `A_b` the T-degree `>= b` part of `A`).
#[derive(Clone, Copy, Debug)]
pub struct Shifted<'a> {
    pub module: &'a GradedSubmodule,
    pub min_x: u32,
    pub min_t: u32,
}

impl<'a> Shifted<'a> {
    pub fn plain(module: &'a GradedSubmodule) -> Self {
        Shifted { module, min_x: 0, min_t: 0 }
    }

    pub fn times_fiber(module: &'a GradedSubmodule) -> Self {
        Shifted { module, min_x: 0, min_t: 1 }
    }

    fn times_maximal_power(self, k: u32) -> Self {
        Shifted { min_x: self.min_x + k, ..self }
    }
}

/// Everything needed to measure graded pieces of submodules of `M = A ⊗ N`.
#[derive(Debug)]
pub struct Ambient {
    ring: Ring,
    presentation: ModulePresentation,
    gen_cap: usize,
}

impl Ambient {
    pub fn new(ring: Ring, presentation: ModulePresentation) -> Self {
        Ambient { ring, presentation, gen_cap: DEFAULT_GEN_CAP }
    }

    pub fn with_gen_cap(mut self, cap: usize) -> Self {
        self.gen_cap = cap;
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn presentation(&self) -> &ModulePresentation {
        &self.presentation
    }

    pub fn gen_cap(&self) -> usize {
        self.gen_cap
    }

    pub fn rank(&self) -> usize {
        self.presentation.free_rank
    }

    /// `M = A ⊗ N` itself, generated by the basis slots in bidegree (0,0).
    pub fn module(&self) -> GradedSubmodule {
        GradedSubmodule::free(&self.ring, self.rank())
    }

    /// Rank of `K + Σ parts` in bidegree `(e, n)` of `A^q`.
    pub fn piece_rank(&self, parts: &[Shifted<'_>], e: u32, n: u32) -> usize {
        let ring = &self.ring;
        let basis = ring.basis(e, n);
        let mut ech = Echelon::new(*ring.field(), self.rank() * basis.len());
        if ech.ncols() == 0 {
            return 0;
        }
        let relations = Shifted::plain(&self.presentation.relations);
        for part in std::iter::once(&relations).chain(parts) {
            for (g, &(a, b)) in part.module.gens.iter().zip(&part.module.degrees) {
                if e < a + part.min_x || n < b + part.min_t {
                    continue;
                }
                for mult in ring.basis(e - a, n - b).monomials.iter() {
                    ech.insert(&ring.coefficient_row(g, mult, &basis));
                    if ech.is_full() {
                        return ech.rank();
                    }
                }
            }
        }
        ech.rank()
    }

    /// `dim [X]_{(e,n)}` as a subspace of `[M]_{(e,n)}`.
    pub fn graded_piece_dim(&self, x: &GradedSubmodule, e: u32, n: u32) -> usize {
        self.piece_rank(&[Shifted::plain(x)], e, n) - self.piece_rank(&[], e, n)
    }

    /// `ℓ [X / (m^{s+1} X + Y)]_n` for shifted `X ⊇ Y`, summed over x-degrees.
    ///
    /// Every element of `X` of x-degree at least
    /// `max_gen_xdeg + min_x + s + 1` already lies in `m^{s+1} X`, so the
    /// sum stops there. With `audit` set, `Y ⊆ X` is checked in each summed
    /// degree.
    pub fn bracket_length(&self, x: Shifted<'_>, y: Shifted<'_>, s: u32, n: u32, audit: bool) -> Result<u64> {
        if x.module.is_zero() {
            if audit && !y.module.is_zero() {
                for e in 0..=y.module.max_gen_xdeg() + y.min_x {
                    if self.piece_rank(&[y], e, n) != self.piece_rank(&[], e, n) {
                        return Err(Error::NotSubmodule { x_degree: e, t_degree: n });
                    }
                }
            }
            return Ok(0);
        }
        let lo = x.module.min_gen_xdeg() + x.min_x;
        let bound = x.module.max_gen_xdeg() + x.min_x + s + 1;
        let reduced = x.times_maximal_power(s + 1);
        let mut total = 0u64;
        for e in lo..bound {
            let full = self.piece_rank(&[x], e, n);
            if full == self.piece_rank(&[], e, n) {
                continue;
            }
            if audit && self.piece_rank(&[x, y], e, n) != full {
                return Err(Error::NotSubmodule { x_degree: e, t_degree: n });
            }
            let sub = self.piece_rank(&[reduced, y], e, n);
            total += (full - sub) as u64;
        }
        #[cfg(debug_assertions)]
        for e in bound..bound + 3 {
            debug_assert_eq!(
                self.piece_rank(&[x], e, n),
                self.piece_rank(&[reduced, y], e, n),
                "truncation bound is not tight at x-degree {e}"
            );
        }
        Ok(total)
    }

    /// `ℓ_R [X / (m^{s+1} X + Y)]_n`, after verifying `Y ⊆ X`.
    pub fn quotient_length(&self, x: &GradedSubmodule, y: &GradedSubmodule, s: u32, n: u32) -> Result<u64> {
        self.bracket_length(Shifted::plain(x), Shifted::plain(y), s, n, true)
    }

    /// Equality of `X ⊆ Y`, both generated in one common T-degree.
    pub fn submodule_equals(&self, x: &GradedSubmodule, y: &GradedSubmodule) -> Result<bool> {
        let t = match (x.single_t_degree(), y.single_t_degree()) {
            (_, None) if y.is_zero() => return Ok(true),
            (None, Some(_)) if x.is_zero() => return Ok(false),
            (Some(a), Some(b)) if a == b => a,
            _ => {
                return Err(Error::Precondition(
                    "equality test needs both modules generated in one common T-degree".into(),
                ))
            }
        };
        let lo = x.min_gen_xdeg().min(y.min_gen_xdeg());
        for e in lo..=y.max_gen_xdeg() {
            if self.graded_piece_dim(x, e, t) != self.graded_piece_dim(y, e, t) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators of `I · X`, duplicates removed, in first-seen order.
    pub fn ideal_times(&self, ideal: &[BiPolynomial], x: &GradedSubmodule) -> Result<GradedSubmodule> {
        let field = self.ring.field();
        let mut seen = HashSet::new();
        let mut gens = Vec::new();
        for v in x.generators() {
            for f in ideal {
                let w = v.scale_by(f, field);
                if w.is_zero() || !seen.insert(w.clone()) {
                    continue;
                }
                gens.push(w);
                if gens.len() > self.gen_cap {
                    return Err(Error::ResourceCap {
                        what: "generator count",
                        count: gens.len(),
                        cap: self.gen_cap,
                    });
                }
            }
        }
        GradedSubmodule::new(x.rank(), gens)
    }

    /// `I^i · X` generated by products over multisets of size `i`.
    pub fn power_product(&self, ideal: &[BiPolynomial], i: usize, x: &GradedSubmodule) -> Result<GradedSubmodule> {
        let mut cur = x.clone();
        for _ in 0..i {
            cur = self.ideal_times(ideal, &cur)?;
        }
        Ok(cur)
    }
}

/// `w(h) = h_1 T_1 + ... + h_p T_p` for each nonzero generator `h ∈ R^p`.
pub fn rees_linear_forms(ring: &Ring, gens: &[ModuleVector]) -> Result<Vec<BiPolynomial>> {
    let field = ring.field();
    let mut out = Vec::new();
    for (index, h) in gens.iter().enumerate() {
        if h.rank() != ring.nt() {
            return Err(Error::Precondition(format!(
                "generator {index} has {} entries but p = {}",
                h.rank(),
                ring.nt()
            )));
        }
        match h.homogeneity() {
            Homogeneity::Zero => continue,
            Homogeneity::Bihomogeneous(_, 0) => {}
            Homogeneity::Bihomogeneous(_, _) => {
                return Err(Error::Inhomogeneous {
                    index,
                    detail: "entries of E may not involve fiber variables".into(),
                })
            }
            Homogeneity::Inhomogeneous => {
                return Err(Error::Inhomogeneous {
                    index,
                    detail: "mixed x-degrees across entries".into(),
                })
            }
        }
        let form = h
            .entries()
            .iter()
            .enumerate()
            .fold(BiPolynomial::zero(), |acc, (j, hj)| acc.add(&hj.mul_monomial(&ring.t_var(j)), field));
        out.push(form);
    }
    Ok(out)
}

/// Lazily computed powers `I^i · X`, shared between table cells.
#[derive(Debug)]
pub struct PowerTower {
    ideal: Vec<BiPolynomial>,
    powers: Mutex<Vec<Arc<GradedSubmodule>>>,
}

impl PowerTower {
    pub fn new(ideal: Vec<BiPolynomial>, base: GradedSubmodule) -> Self {
        PowerTower { ideal, powers: Mutex::new(vec![Arc::new(base)]) }
    }

    pub fn ideal(&self) -> &[BiPolynomial] {
        &self.ideal
    }

    pub fn base(&self) -> Arc<GradedSubmodule> {
        Arc::clone(&self.powers.lock().expect("power cache poisoned")[0])
    }

    pub fn power(&self, ambient: &Ambient, i: usize) -> Result<Arc<GradedSubmodule>> {
        let mut powers = self.powers.lock().expect("power cache poisoned");
        while powers.len() <= i {
            let next = ambient.ideal_times(&self.ideal, powers.last().expect("base present"))?;
            powers.push(Arc::new(next));
        }
        Ok(Arc::clone(&powers[i]))
    }
}
