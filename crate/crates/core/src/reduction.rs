//! Is `E` a reduction of `F` on `N`? Directly, by searching for an `n`
//! with `I J^n M = J^{n+1} M`, and numerically, by comparing the two
//! multiplicity sequences.

use serde::Serialize;

use crate::algebra::ModuleVector;
use crate::error::{Error, Result};
use crate::hilbert::{stabilized_univariate, MultiplicitySequence};
use crate::modules::{rees_linear_forms, Ambient, GradedSubmodule, ModulePresentation, PowerTower};
use crate::multiplicity::{multiplicity_sequence, ProblemInstance};

pub const QUASI_UNMIXED_CAVEAT: &str = "quasi-unmixedness of N assumed, not verified";
pub const QUASI_UNMIXED_ASSERTED: &str = "quasi-unmixedness of N asserted by the user";
pub const HEIGHT_CAVEAT: &str = "ht_M(I) > 0 checked by the advisory dimension-drop test";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DirectVerdict {
    /// `I J^n M = J^{n+1} M` for this least `n`.
    Yes { witness: usize },
    /// No witness with `n <= searched_up_to`.
    No { searched_up_to: usize },
    Skipped,
}

impl DirectVerdict {
    pub fn is_yes(self) -> bool {
        matches!(self, DirectVerdict::Yes { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightCheck {
    pub positive: bool,
    pub quotient_dimension: Option<usize>,
    pub module_dimension: usize,
    pub advisory: bool,
    pub diagnostic: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalVerdict {
    pub e: MultiplicitySequence,
    pub f: MultiplicitySequence,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionVerdict {
    pub direct: DirectVerdict,
    pub numerical: Option<NumericalVerdict>,
    pub conclusion: String,
    pub caveats: Vec<String>,
}

fn required_f(inst: &ProblemInstance) -> Result<&[ModuleVector]> {
    inst.f().ok_or_else(|| Error::Precondition("this check needs F".into()))
}

/// Checks `E ⊆ F` inside `R^p` by comparing the spans of the Rees forms in
/// each bidegree `(deg h, 1)`.
pub fn check_containment(inst: &ProblemInstance) -> Result<()> {
    let ring = inst.ring();
    let f = required_f(inst)?;
    let a = Ambient::new(ring.clone(), ModulePresentation::free(1));
    let as_module = |forms: Vec<_>| GradedSubmodule::new(1, forms.into_iter().map(|w| ModuleVector::new(vec![w])).collect());
    let span_f = as_module(rees_linear_forms(ring, f)?)?;
    for (index, w) in rees_linear_forms(ring, inst.e())?.into_iter().enumerate() {
        let crate::algebra::Homogeneity::Bihomogeneous(e, t) = w.homogeneity() else { continue };
        let mut gens = span_f.generators().to_vec();
        gens.push(ModuleVector::new(vec![w]));
        let with_w = GradedSubmodule::new(1, gens)?;
        if a.graded_piece_dim(&with_w, e, t) != a.graded_piece_dim(&span_f, e, t) {
            return Err(Error::Precondition(format!("E is not contained in F: generator E[{index}] lies outside F")));
        }
    }
    Ok(())
}

/// The least `n <= n_max` with `I J^n M = J^{n+1} M`, after verifying `E ⊆ F`.
pub fn is_reduction_direct(inst: &ProblemInstance, n_max: usize) -> Result<DirectVerdict> {
    check_containment(inst)?;
    let ambient = inst.ambient();
    let ring = inst.ring();
    let i_forms = rees_linear_forms(ring, inst.e())?;
    let tower = PowerTower::new(rees_linear_forms(ring, required_f(inst)?)?, ambient.module());
    for n in 0..=n_max {
        let lhs = ambient.ideal_times(&i_forms, &*tower.power(ambient, n)?)?;
        if ambient.submodule_equals(&lhs, &*tower.power(ambient, n + 1)?)? {
            return Ok(DirectVerdict::Yes { witness: n });
        }
    }
    Ok(DirectVerdict::No { searched_up_to: n_max })
}

/// Advisory test for `ht_M(I) > 0`: `dim M/IM < dim N + p`.
pub fn height_positive(inst: &ProblemInstance) -> Result<HeightCheck> {
    let ambient = inst.ambient();
    let (d, p) = (inst.ring().nx(), inst.ring().nt());
    let module_dimension = inst.module_dimension()? + p;
    let pair = inst.pair()?;
    let m = pair.module();
    let im = pair.power(1)?;
    let fit = stabilized_univariate("Hilbert function of M/IM", d + p - 1, inst.limits().window_cap, |k| {
        let mut total = 0i128;
        for n in 0..=k {
            let e = k - n;
            total += ambient.graded_piece_dim(&m, e, n) as i128 - ambient.graded_piece_dim(&im, e, n) as i128;
        }
        Ok(total)
    });
    Ok(match fit {
        Ok(fit) => {
            let q = fit.degree().map_or(0, |k| k + 1);
            HeightCheck {
                positive: q < module_dimension,
                quotient_dimension: Some(q),
                module_dimension,
                advisory: true,
                diagnostic: None,
            }
        }
        Err(err @ Error::NotPolynomial { .. }) => HeightCheck {
            positive: false,
            quotient_dimension: None,
            module_dimension,
            advisory: true,
            diagnostic: Some(err.to_string()),
        },
        Err(err) => return Err(err),
    })
}

/// Compares `c_k(E, N)` with `c_k(F, N)`.
pub fn is_reduction_numerical(inst: &ProblemInstance, assert_quasi_unmixed: bool) -> Result<ReductionVerdict> {
    check_containment(inst)?;
    let height = height_positive(inst)?;
    if !height.positive {
        return Err(Error::Precondition(format!(
            "the height check for E failed (dim M/IM = {:?}, dim M = {})",
            height.quotient_dimension, height.module_dimension
        )));
    }
    let f_inst = ProblemInstance::new(
        inst.ring().clone(),
        inst.ambient().presentation().clone(),
        required_f(inst)?.to_vec(),
        None,
        inst.limits(),
    )?;
    let (e, f) = rayon::join(|| multiplicity_sequence(inst), || multiplicity_sequence(&f_inst));
    let (e, f) = (e?, f?);
    let equal = e.c == f.c;
    let mut caveats = vec![HEIGHT_CAVEAT.to_string()];
    let conclusion = if equal {
        caveats.push(if assert_quasi_unmixed { QUASI_UNMIXED_ASSERTED } else { QUASI_UNMIXED_CAVEAT }.to_string());
        "reduction, conditional on N quasi-unmixed"
    } else {
        "not a reduction"
    };
    Ok(ReductionVerdict {
        direct: DirectVerdict::Skipped,
        numerical: Some(NumericalVerdict { e, f, equal }),
        conclusion: conclusion.to_string(),
        caveats,
    })
}

/// Both checks, run concurrently, with the consistency between them enforced.
pub fn compare(inst: &ProblemInstance, n_max: usize, assert_quasi_unmixed: bool) -> Result<ReductionVerdict> {
    let (direct, numerical) =
        rayon::join(|| is_reduction_direct(inst, n_max), || is_reduction_numerical(inst, assert_quasi_unmixed));
    let direct = direct?;
    let mut verdict = numerical?;
    let equal = verdict.numerical.as_ref().is_some_and(|v| v.equal);
    if direct.is_yes() && !equal {
        return Err(Error::Inconsistent(format!(
            "direct check found {direct:?} but the multiplicity sequences differ"
        )));
    }
    verdict.direct = direct;
    if let DirectVerdict::Yes { .. } = direct {
        verdict.conclusion = "reduction".to_string();
        verdict.caveats.retain(|c| c != QUASI_UNMIXED_CAVEAT && c != QUASI_UNMIXED_ASSERTED);
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::VariableNames;
    use crate::algebra::{Ring, DEFAULT_PRIME};
    use crate::multiplicity::Limits;

    fn instance(nx: usize, nt: usize, e: &[&[&str]], f: Option<&[&[&str]]>) -> ProblemInstance {
        let ring = Ring::new(nx, nt, DEFAULT_PRIME).unwrap();
        let names = VariableNames::new(&ring, &[]).unwrap();
        let vecs = |rows: &[&[&str]]| -> Vec<ModuleVector> {
            rows.iter()
                .map(|r| ModuleVector::new(r.iter().map(|s| names.parse(&ring, s).unwrap()).collect()))
                .collect()
        };
        let (e, f) = (vecs(e), f.map(vecs));
        ProblemInstance::new(ring, ModulePresentation::free(1), e, f, Limits::default()).unwrap()
    }

    #[test]
    fn direct_examples() {
        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x^2"], &["x*y"], &["y^2"]]));
        assert_eq!(is_reduction_direct(&inst, 3).unwrap(), DirectVerdict::Yes { witness: 1 });
        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x^2"], &["y^2"]]));
        assert_eq!(is_reduction_direct(&inst, 3).unwrap(), DirectVerdict::Yes { witness: 0 });
        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x"], &["y"]]));
        assert_eq!(is_reduction_direct(&inst, 5).unwrap(), DirectVerdict::No { searched_up_to: 5 });
    }

    #[test]
    fn reductions_persist() {
        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x^2"], &["x*y"], &["y^2"]]));
        let ambient = inst.ambient();
        let ring = inst.ring();
        let i = rees_linear_forms(ring, inst.e()).unwrap();
        let tower = PowerTower::new(rees_linear_forms(ring, inst.f().unwrap()).unwrap(), ambient.module());
        for m in 1..=4 {
            let lhs = ambient.ideal_times(&i, &tower.power(ambient, m).unwrap()).unwrap();
            assert!(ambient.submodule_equals(&lhs, &tower.power(ambient, m + 1).unwrap()).unwrap());
        }
    }

    #[test]
    fn containment_is_enforced() {
        let inst = instance(2, 1, &[&["x"]], Some(&[&["x^2"], &["y"]]));
        assert!(matches!(is_reduction_direct(&inst, 2), Err(Error::Precondition(_))));
        // module case: (x, 0) lies in the span of (x, y), (0, y)
        let inst = instance(2, 2, &[&["x", "0"]], Some(&[&["x", "y"], &["0", "y"]]));
        assert!(check_containment(&inst).is_ok());
        let inst = instance(2, 2, &[&["x", "0"]], Some(&[&["x", "y"]]));
        assert!(check_containment(&inst).is_err());
    }

    #[test]
    fn height_examples() {
        let h = height_positive(&instance(2, 1, &[&["x"]], None)).unwrap();
        assert!(h.positive);
        assert_eq!((h.quotient_dimension, h.module_dimension), (Some(2), 3));
        assert!(!height_positive(&instance(2, 1, &[&["0"]], None)).unwrap().positive);
        assert!(height_positive(&instance(2, 1, &[&["x^2"], &["y^3"]], None)).unwrap().positive);
        assert!(height_positive(&instance(1, 1, &[&["x"]], None)).unwrap().positive);
    }

    #[test]
    fn numerical_and_combined() {
        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x^2"], &["x*y"], &["y^2"]]));
        let v = compare(&inst, 3, false).unwrap();
        assert_eq!(v.direct, DirectVerdict::Yes { witness: 1 });
        let num = v.numerical.unwrap();
        assert_eq!((num.e.c.clone(), num.f.c.clone()), (vec![4, 0, 0], vec![4, 0, 0]));

        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x"], &["y"]]));
        let v = compare(&inst, 5, false).unwrap();
        assert_eq!(v.direct, DirectVerdict::No { searched_up_to: 5 });
        let num = v.numerical.unwrap();
        assert_eq!((num.e.c.clone(), num.f.c.clone()), (vec![4, 0, 0], vec![1, 0, 0]));
        assert_eq!(v.conclusion, "not a reduction");

        let inst = instance(2, 1, &[&["x^2"], &["y^2"]], Some(&[&["x^2"], &["y^2"]]));
        let v = is_reduction_numerical(&inst, false).unwrap();
        assert!(v.numerical.unwrap().equal);
        assert!(v.caveats.iter().any(|c| c == QUASI_UNMIXED_CAVEAT));
    }
}
