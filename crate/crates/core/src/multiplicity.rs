//! Multiplicity sequences of linear-form ideals of `A`, together with the
//! scalar multiplicities of ideals and finite-colength submodules.

use serde::Serialize;

use crate::algebra::{BiPolynomial, ModuleVector, Ring};
use crate::error::{Error, Result};
use crate::hilbert::{
    extract_ck, module_dimension, stabilized_fit, stabilized_univariate, AchillesManaresi, HilbertKind,
    IdealModulePair, MultiplicitySequence, DEFAULT_WINDOW_CAP,
};
use crate::modules::{rees_linear_forms, Ambient, GradedSubmodule, ModulePresentation, DEFAULT_GEN_CAP};

/// How far past the generator degrees a colength sum may run.
pub const COLENGTH_SCAN_CAP: u32 = 512;

/// How far past the generator degrees the finite-length check looks for a
/// vanishing graded piece.
pub const FINITE_LENGTH_SCAN: u32 = 64;

pub const DEFAULT_N_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub gen_cap: usize,
    pub window_cap: u32,
    pub n_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { gen_cap: DEFAULT_GEN_CAP, window_cap: DEFAULT_WINDOW_CAP, n_max: DEFAULT_N_MAX }
    }
}

/// The data `(R, E ⊆ R^p, N)`, optionally with a second module `F ⊇ E`.
#[derive(Debug)]
pub struct ProblemInstance {
    ambient: Ambient,
    e: Vec<ModuleVector>,
    f: Option<Vec<ModuleVector>>,
    limits: Limits,
}

impl ProblemInstance {
    pub fn new(
        ring: Ring,
        presentation: ModulePresentation,
        e: Vec<ModuleVector>,
        f: Option<Vec<ModuleVector>>,
        limits: Limits,
    ) -> Result<Self> {
        rees_linear_forms(&ring, &e)?;
        if let Some(f) = &f {
            rees_linear_forms(&ring, f)?;
        }
        let ambient = Ambient::new(ring, presentation).with_gen_cap(limits.gen_cap);
        Ok(ProblemInstance { ambient, e, f, limits })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    pub fn e(&self) -> &[ModuleVector] {
        &self.e
    }

    pub fn f(&self) -> Option<&[ModuleVector]> {
        self.f.as_deref()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn is_e_zero(&self) -> bool {
        self.e.iter().all(ModuleVector::is_zero)
    }

    /// The same `E` and `F` acting on another module.
    pub fn with_presentation(&self, presentation: ModulePresentation) -> Result<Self> {
        Self::new(self.ring().clone(), presentation, self.e.clone(), self.f.clone(), self.limits)
    }

    /// The pair `(R_1(E)·A, A ⊗ N)`.
    pub fn pair(&self) -> Result<IdealModulePair<'_>> {
        IdealModulePair::rees(&self.ambient, &self.e)
    }

    /// When `p = 1`, the ideal of `R` whose generators are the entries of `E`.
    pub fn e_as_ideal(&self) -> Result<Vec<BiPolynomial>> {
        if self.ring().nt() != 1 {
            return Err(Error::Precondition("E is an ideal of R only when p = 1".into()));
        }
        Ok(self.e.iter().map(|h| h.entries()[0].clone()).filter(|f| !f.is_zero()).collect())
    }

    pub fn module_dimension(&self) -> Result<usize> {
        module_dimension(&self.ambient, self.limits.window_cap)
    }
}

/// Stabilized fit of one of the `A`-side tables at degree bound `D - 1`.
pub fn sequence_of(pair: &IdealModulePair<'_>, kind: HilbertKind, d: usize, window_cap: u32) -> Result<MultiplicitySequence> {
    if d == 0 {
        return Err(Error::Precondition("D must be at least 1".into()));
    }
    if pair.is_zero_ideal() {
        return Err(Error::Precondition("the ideal is zero, so its M-height is 0".into()));
    }
    let (fit, table) = stabilized_fit(kind, d, window_cap, |w| pair.table(kind, w))?;
    extract_ck(&fit, d, kind, table.window())
}

/// `c_k(E, N)` with `D = dim N + p`.
pub fn multiplicity_sequence(inst: &ProblemInstance) -> Result<MultiplicitySequence> {
    if inst.is_e_zero() {
        return Err(Error::Precondition("E is zero, so ht_M(I) = 0".into()));
    }
    let d = inst.module_dimension()? + inst.ring().nt();
    sequence_of(&inst.pair()?, HilbertKind::HSharp, d, inst.limits.window_cap)
}

pub fn csharp_sequence(pair: &IdealModulePair<'_>, d: usize, window_cap: u32) -> Result<MultiplicitySequence> {
    sequence_of(pair, HilbertKind::HSharp, d, window_cap)
}

pub fn cstar_sequence(pair: &IdealModulePair<'_>, d: usize, window_cap: u32) -> Result<MultiplicitySequence> {
    sequence_of(pair, HilbertKind::HStar, d, window_cap)
}

pub fn b_sequence(pair: &IdealModulePair<'_>, d: usize, window_cap: u32) -> Result<MultiplicitySequence> {
    sequence_of(pair, HilbertKind::B, d, window_cap)
}

/// The Achilles-Manaresi sequence of an ideal `J ⊆ R` on `N`, `D = dim N + 1`.
pub fn achilles_manaresi_sequence(ambient: &Ambient, j: Vec<BiPolynomial>, window_cap: u32) -> Result<MultiplicitySequence> {
    let am = AchillesManaresi::new(ambient, j)?;
    if am.ideal().is_empty() {
        return Err(Error::Precondition("J is zero".into()));
    }
    if am.is_unit_ideal() {
        return Err(Error::Precondition("J is the unit ideal".into()));
    }
    let d = module_dimension(ambient, window_cap)? + 1;
    let kind = HilbertKind::AchillesManaresi;
    let (fit, table) = stabilized_fit(kind, d, window_cap, |w| am.table(w))?;
    extract_ck(&fit, d, kind, table.window())
}

/// `ℓ [X / Y]_n` for `Y ⊆ X`, summed over x-degrees until the quotient
/// vanishes in a degree where both are already generated.
pub fn colength(ambient: &Ambient, x: &GradedSubmodule, y: &GradedSubmodule, n: u32) -> Result<u64> {
    let top = x.max_gen_xdeg().max(y.max_gen_xdeg());
    let mut total = 0u64;
    for e in 0..=top + COLENGTH_SCAN_CAP {
        let (a, b) = (ambient.graded_piece_dim(x, e, n), ambient.graded_piece_dim(y, e, n));
        if b > a {
            return Err(Error::NotSubmodule { x_degree: e, t_degree: n });
        }
        if a == b && e >= top {
            return Ok(total);
        }
        total += (a - b) as u64;
    }
    Err(Error::NotFiniteColength(format!(
        "quotient in T-degree {n} is still nonzero at x-degree {}", top + COLENGTH_SCAN_CAP
    )))
}

/// Checks that `[X / Y]_n` has finite length. Past the generator degrees
/// `X_{e+1} = m X_e`, so a single vanishing degree forces every later one
/// to vanish; the scan looks for one within `FINITE_LENGTH_SCAN` degrees.
fn require_finite_colength(ambient: &Ambient, x: &GradedSubmodule, y: &GradedSubmodule, n: u32, what: &str) -> Result<()> {
    let top = x.max_gen_xdeg().max(y.max_gen_xdeg());
    for e in top..=top + FINITE_LENGTH_SCAN {
        if ambient.graded_piece_dim(x, e, n) == ambient.graded_piece_dim(y, e, n) {
            return Ok(());
        }
    }
    Err(Error::NotFiniteColength(format!(
        "{what} is still nonzero in x-degree {}",
        top + FINITE_LENGTH_SCAN
    )))
}

/// `e_BR(E, N)`: `(D-1)!` times the leading coefficient of
/// `ℓ(S_n(R^p) ⊗ N / R_n(E) N)`, with `D = dim N + p`.
pub fn buchsbaum_rim(inst: &ProblemInstance) -> Result<u64> {
    if inst.ring().nt() == 0 {
        return Err(Error::Precondition("the Buchsbaum-Rim multiplicity needs p >= 1".into()));
    }
    let ambient = inst.ambient();
    let cap = inst.limits.window_cap;
    let pair = inst.pair()?;
    let m = pair.module();
    let im = pair.power(1)?;
    require_finite_colength(ambient, &m, &im, 1, "S_1(R^p) N / E N")?;
    let d = inst.module_dimension()? + inst.ring().nt();
    let fit = stabilized_univariate("Buchsbaum-Rim colength", d - 1, cap, |n| {
        Ok(colength(ambient, &m, &*pair.power(n as usize)?, n)? as i128)
    })?;
    leading(fit.coefficient(d - 1), "Buchsbaum-Rim")
}

/// `e(J, N)`: `(dim N)!` times the leading coefficient of `ℓ(N / J^n N)`.
pub fn hilbert_samuel(ambient: &Ambient, j: Vec<BiPolynomial>, window_cap: u32) -> Result<u64> {
    let am = AchillesManaresi::new(ambient, j)?;
    let n_module = ambient.module();
    let jn = am.power(1)?;
    require_finite_colength(ambient, &n_module, &jn, 0, "N / J N")
        .map_err(|e| match e {
            Error::NotFiniteColength(msg) => Error::NotFiniteColength(format!("J is not m-primary on N: {msg}")),
            other => other,
        })?;
    let dim = module_dimension(ambient, window_cap)?;
    let fit = stabilized_univariate("Hilbert-Samuel colength", dim, window_cap, |n| {
        Ok(colength(ambient, &n_module, &*am.power(n as usize)?, 0)? as i128)
    })?;
    leading(fit.coefficient(dim), "Hilbert-Samuel")
}

fn leading(a: i128, what: &str) -> Result<u64> {
    u64::try_from(a).map_err(|_| Error::Inconsistent(format!("{what} multiplicity came out as {a}")))
}
