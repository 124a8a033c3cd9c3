//! The tabulated functions.
//!
//! For an ideal `I ⊆ A` generated by forms of T-degree one and a graded
//! submodule `M`, with `P_i = I^i M`:
//!
//! * `h♯(s,n) = Σ_i ℓ[A_1 P_i / (m^{s+1} A_1 P_i + P_{i+1})]_n`
//! * `h*(s,n) = Σ_i ℓ[P_i / (m^{s+1} P_i + P_{i+1})]_n`
//! * `b(s,n)  = Σ_i ℓ[P_i / (m^{s+1} P_i + A_1 P_i)]_n`
//!
//! When `M` is generated in T-degree zero, `[A_1 P_i]_n = [P_i]_n` for
//! `i < n` and vanishes for `i >= n`, so `h♯` runs over `i < n` and `b` is
//! the single `i = n` term.

use rayon::prelude::*;

use super::{HilbertKind, HilbertTable, Window};
use crate::algebra::{BiPolynomial, Homogeneity, ModuleVector};
use crate::error::{Error, Result};
use crate::modules::{rees_linear_forms, Ambient, GradedSubmodule, PowerTower, Shifted};

fn build_table<F>(kind: HilbertKind, window: Window, value: F) -> Result<HilbertTable>
where
    F: Fn(u32, u32) -> Result<u64> + Sync,
{
    let cells: Vec<(u32, u32)> = window.cells().collect();
    let flat = cells.par_iter().map(|&(s, n)| value(s, n)).collect::<Result<Vec<u64>>>()?;
    let values = flat.chunks(window.size.1.max(1)).map(<[u64]>::to_vec).collect();
    Ok(HilbertTable { kind, origin: window.origin, values })
}

/// An ideal of `A` generated by T-degree-one forms acting on a graded
/// submodule `M` of `A ⊗ N`.
#[derive(Debug)]
pub struct IdealModulePair<'a> {
    ambient: &'a Ambient,
    tower: PowerTower,
}

impl<'a> IdealModulePair<'a> {
    pub fn new(ambient: &'a Ambient, ideal: Vec<BiPolynomial>, module: GradedSubmodule) -> Result<Self> {
        let ideal: Vec<_> = ideal.into_iter().filter(|f| !f.is_zero()).collect();
        for (index, f) in ideal.iter().enumerate() {
            match f.homogeneity() {
                Homogeneity::Bihomogeneous(_, 1) => {}
                _ => {
                    return Err(Error::Inhomogeneous {
                        index,
                        detail: "ideal generators must be bihomogeneous of T-degree 1".into(),
                    })
                }
            }
        }
        if module.rank() != ambient.rank() {
            return Err(Error::Precondition("module does not live in A ⊗ N".into()));
        }
        Ok(IdealModulePair { ambient, tower: PowerTower::new(ideal, module) })
    }

    /// `I = R_1(E)·A` acting on `M = A ⊗ N`.
    pub fn rees(ambient: &'a Ambient, e_gens: &[ModuleVector]) -> Result<Self> {
        let forms = rees_linear_forms(ambient.ring(), e_gens)?;
        Self::new(ambient, forms, ambient.module())
    }

    pub fn ambient(&self) -> &'a Ambient {
        self.ambient
    }

    pub fn ideal(&self) -> &[BiPolynomial] {
        self.tower.ideal()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.tower.ideal().is_empty()
    }

    pub fn module(&self) -> GradedSubmodule {
        (*self.tower.base()).clone()
    }

    /// `I^i M`.
    pub fn power(&self, i: usize) -> Result<std::sync::Arc<GradedSubmodule>> {
        self.tower.power(self.ambient, i)
    }

    /// The same ideal acting on `I^t M`.
    pub fn on_power(&self, t: usize) -> Result<IdealModulePair<'a>> {
        let m = (*self.power(t)?).clone();
        IdealModulePair::new(self.ambient, self.ideal().to_vec(), m)
    }

    fn base_tdeg(&self) -> Option<u32> {
        let base = self.tower.base();
        (!base.is_zero()).then(|| base.min_gen_tdeg())
    }

    pub fn hsharp_value(&self, s: u32, n: u32) -> Result<u64> {
        let Some(t0) = self.base_tdeg() else { return Ok(0) };
        let mut total = 0;
        let mut i = 0usize;
        while i as u32 + t0 < n {
            let x = self.power(i)?;
            if x.is_zero() {
                break;
            }
            let y = self.power(i + 1)?;
            total += self.ambient.bracket_length(Shifted::times_fiber(&x), Shifted::plain(&y), s, n, false)?;
            i += 1;
        }
        Ok(total)
    }

    pub fn hstar_value(&self, s: u32, n: u32) -> Result<u64> {
        let Some(t0) = self.base_tdeg() else { return Ok(0) };
        let mut total = 0;
        let mut i = 0usize;
        while i as u32 + t0 <= n {
            let x = self.power(i)?;
            if x.is_zero() {
                break;
            }
            let y = self.power(i + 1)?;
            total += self.ambient.bracket_length(Shifted::plain(&x), Shifted::plain(&y), s, n, false)?;
            i += 1;
        }
        Ok(total)
    }

    pub fn b_value(&self, s: u32, n: u32) -> Result<u64> {
        let Some(t0) = self.base_tdeg() else { return Ok(0) };
        if n < t0 {
            return Ok(0);
        }
        let single = self.tower.base().single_t_degree().is_some();
        let range = if single { (n - t0) as usize..=(n - t0) as usize } else { 0..=(n - t0) as usize };
        let mut total = 0;
        for i in range {
            let x = self.power(i)?;
            if x.is_zero() {
                break;
            }
            total += self.ambient.bracket_length(Shifted::plain(&x), Shifted::times_fiber(&x), s, n, false)?;
        }
        Ok(total)
    }

    pub fn value(&self, kind: HilbertKind, s: u32, n: u32) -> Result<u64> {
        match kind {
            HilbertKind::HSharp => self.hsharp_value(s, n),
            HilbertKind::HStar => self.hstar_value(s, n),
            HilbertKind::B => self.b_value(s, n),
            HilbertKind::AchillesManaresi => Err(Error::Precondition(
                "the Achilles-Manaresi table is built from an ideal of R, not of A".into(),
            )),
        }
    }

    pub fn table(&self, kind: HilbertKind, window: Window) -> Result<HilbertTable> {
        // powers are computed once, sequentially, before the parallel fill
        let top = window.origin.1 as usize + window.size.1 + 1;
        self.power(top)?;
        build_table(kind, window, |s, n| self.value(kind, s, n))
    }
}

/// An ideal `J` of the base ring acting on `N`: the Achilles-Manaresi
/// function `ℓ((m^s J^i N + J^{i+1} N) / (m^{s+1} J^i N + J^{i+1} N))`.
#[derive(Debug)]
pub struct AchillesManaresi<'a> {
    ambient: &'a Ambient,
    tower: PowerTower,
}

impl<'a> AchillesManaresi<'a> {
    pub fn new(ambient: &'a Ambient, ideal: Vec<BiPolynomial>) -> Result<Self> {
        let ideal: Vec<_> = ideal.into_iter().filter(|f| !f.is_zero()).collect();
        for (index, f) in ideal.iter().enumerate() {
            match f.homogeneity() {
                Homogeneity::Bihomogeneous(_, 0) => {}
                _ => {
                    return Err(Error::Inhomogeneous {
                        index,
                        detail: "ideal generators must be homogeneous elements of R".into(),
                    })
                }
            }
        }
        Ok(AchillesManaresi { ambient, tower: PowerTower::new(ideal, ambient.module()) })
    }

    pub fn ideal(&self) -> &[BiPolynomial] {
        self.tower.ideal()
    }

    pub fn ambient(&self) -> &'a Ambient {
        self.ambient
    }

    /// True when some generator is a unit, so `J = R`.
    pub fn is_unit_ideal(&self) -> bool {
        self.ideal().iter().any(|f| f.homogeneity() == Homogeneity::Bihomogeneous(0, 0))
    }

    /// `J^i N`.
    pub fn power(&self, i: usize) -> Result<std::sync::Arc<GradedSubmodule>> {
        self.tower.power(self.ambient, i)
    }

    /// `ℓ(J^i N / (m^{s+1} J^i N + J^{i+1} N))`.
    fn cumulative(&self, s: u32, i: usize) -> Result<u64> {
        let x = self.power(i)?;
        let y = self.power(i + 1)?;
        self.ambient.bracket_length(Shifted::plain(&x), Shifted::plain(&y), s, 0, false)
    }

    pub fn am_value(&self, s: u32, i: usize) -> Result<u64> {
        let upper = self.cumulative(s, i)?;
        let lower = if s == 0 { 0 } else { self.cumulative(s - 1, i)? };
        Ok(upper - lower)
    }

    /// `h^{(1,1)}(s, n) = Σ_{v <= s} Σ_{i <= n} am_value(v, i)`.
    pub fn double_sum(&self, s: u32, n: u32) -> Result<u64> {
        (0..=n as usize).map(|i| self.cumulative(s, i)).sum()
    }

    pub fn table(&self, window: Window) -> Result<HilbertTable> {
        let top = window.origin.1 as usize + window.size.1 + 1;
        self.power(top)?;
        build_table(HilbertKind::AchillesManaresi, window, |s, n| self.double_sum(s, n))
    }
}

/// Krull dimension of `N`: one more than the degree of its Hilbert
/// polynomial, and zero when that polynomial vanishes.
pub fn module_dimension(ambient: &Ambient, window_cap: u32) -> Result<usize> {
    let m = ambient.module();
    let d = ambient.ring().nx();
    let fit = super::stabilized_univariate("Hilbert function of N", d - 1, window_cap, |e| {
        Ok(ambient.graded_piece_dim(&m, e, 0) as i128)
    })?;
    Ok(fit.degree().map_or(0, |k| k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::VariableNames;
    use crate::algebra::{Ring, DEFAULT_PRIME};
    use crate::modules::ModulePresentation;

    fn ambient(nx: usize, nt: usize, relations: &[&str]) -> (Ambient, VariableNames) {
        let ring = Ring::new(nx, nt, DEFAULT_PRIME).unwrap();
        let names = VariableNames::new(&ring, &[]).unwrap();
        let rels = relations
            .iter()
            .map(|r| ModuleVector::new(vec![names.parse(&ring, r).unwrap()]))
            .collect();
        (Ambient::new(ring, ModulePresentation::new(1, rels).unwrap()), names)
    }

    fn vectors(amb: &Ambient, names: &VariableNames, rows: &[&[&str]]) -> Vec<ModuleVector> {
        rows.iter()
            .map(|r| ModuleVector::new(r.iter().map(|s| names.parse(amb.ring(), s).unwrap()).collect()))
            .collect()
    }

    fn polys(amb: &Ambient, names: &VariableNames, ss: &[&str]) -> Vec<BiPolynomial> {
        ss.iter().map(|s| names.parse(amb.ring(), s).unwrap()).collect()
    }

    #[test]
    fn hsharp_by_hand() {
        // I = (x²T) over k[x]: each summand min(s+1, 2)
        let (amb, nm) = ambient(1, 1, &[]);
        let pair = IdealModulePair::rees(&amb, &vectors(&amb, &nm, &[&["x^2"]])).unwrap();
        assert_eq!(pair.hsharp_value(1, 2).unwrap(), 4);
        assert_eq!(pair.hstar_value(1, 2).unwrap(), 6);
        assert_eq!(pair.b_value(1, 2).unwrap(), 2);
        assert_eq!(pair.hsharp_value(1, 0).unwrap(), 0);

        // I = (xT) over k[x,y]: residues {1, y, y²} in each of three summands
        let (amb, nm) = ambient(2, 1, &[]);
        let pair = IdealModulePair::rees(&amb, &vectors(&amb, &nm, &[&["x"]])).unwrap();
        assert_eq!(pair.hsharp_value(2, 3).unwrap(), 9);

        // I = (xT1, xT2) over k[x]: summand (n+1)·1 for i = 0, 1, 2
        let (amb, nm) = ambient(1, 2, &[]);
        let pair = IdealModulePair::rees(&amb, &vectors(&amb, &nm, &[&["x", "0"], &["0", "x"]])).unwrap();
        assert_eq!(pair.hsharp_value(1, 3).unwrap(), 12);
        // h*(1,2) = h♯(1,2) + ℓ[x² S_2 k[x] / x⁴ S_2 k[x]] = 6 + 3·2
        assert_eq!(pair.hsharp_value(1, 2).unwrap(), 6);
        assert_eq!(pair.b_value(1, 2).unwrap(), 6);
        assert_eq!(pair.hstar_value(1, 2).unwrap(), 12);
    }

    #[test]
    fn zero_and_unit_ideals() {
        let (amb, nm) = ambient(2, 1, &[]);
        let zero = IdealModulePair::rees(&amb, &vectors(&amb, &nm, &[&["0"]])).unwrap();
        assert!(zero.is_zero_ideal());
        // only the i = 0 term: ℓ[M / m^{s+1} M]_n = C(s+2, 2)
        for (s, n) in [(0, 1), (2, 3), (3, 0)] {
            let expect = (s as u64 + 1) * (s as u64 + 2) / 2;
            assert_eq!(zero.hstar_value(s, n).unwrap(), expect);
        }

        let unit = IdealModulePair::rees(&amb, &vectors(&amb, &nm, &[&["1"]])).unwrap();
        for (s, n) in [(1, 1), (2, 3)] {
            assert_eq!(unit.hsharp_value(s, n).unwrap(), 0);
            assert_eq!(unit.b_value(s, n).unwrap(), (s as u64 + 1) * (s as u64 + 2) / 2);
        }
    }

    #[test]
    fn achilles_manaresi_by_hand() {
        let (amb, nm) = ambient(1, 0, &[]);
        let am = AchillesManaresi::new(&amb, polys(&amb, &nm, &["x^2"])).unwrap();
        for i in 0..4 {
            assert_eq!(am.am_value(0, i).unwrap(), 1);
            assert_eq!(am.am_value(1, i).unwrap(), 1);
            assert_eq!(am.am_value(2, i).unwrap(), 0);
            assert_eq!(am.am_value(5, i).unwrap(), 0);
        }

        let (amb, nm) = ambient(2, 0, &[]);
        let am = AchillesManaresi::new(&amb, polys(&amb, &nm, &["x"])).unwrap();
        for s in 0..4 {
            for i in 0..4 {
                assert_eq!(am.am_value(s, i).unwrap(), 1);
            }
            assert_eq!(am.double_sum(s, 2).unwrap(), 3 * (s as u64 + 1));
        }

        let unit = AchillesManaresi::new(&amb, polys(&amb, &nm, &["1"])).unwrap();
        assert!(unit.is_unit_ideal());
        for s in 0..3 {
            for i in 0..3 {
                assert_eq!(unit.am_value(s, i).unwrap(), 0);
            }
        }
    }

    #[test]
    fn dimensions_of_small_modules() {
        let (amb, _) = ambient(2, 0, &[]);
        assert_eq!(module_dimension(&amb, 15).unwrap(), 2);
        let (amb, _) = ambient(2, 0, &["x"]);
        assert_eq!(module_dimension(&amb, 15).unwrap(), 1);
        let (amb, _) = ambient(2, 0, &["x^2", "y^2"]);
        assert_eq!(module_dimension(&amb, 15).unwrap(), 0);
    }

    #[test]
    fn tables_are_filled_row_major() {
        let (amb, nm) = ambient(2, 1, &[]);
        let pair = IdealModulePair::rees(&amb, &vectors(&amb, &nm, &[&["x"]])).unwrap();
        let t = pair.table(HilbertKind::HSharp, Window::square(1, 4)).unwrap();
        for (s, n, v) in t.cells() {
            assert_eq!(v, (s as u64 + 1) * n as u64);
        }
    }
}
