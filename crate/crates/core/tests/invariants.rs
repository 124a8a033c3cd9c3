//! Structural identities checked on random monomial ideals of k[x,y].

use proptest::prelude::*;
use reesmult::document::{parse_problem, ParsedProblem};
use reesmult::hilbert::HilbertKind;
use reesmult::modules::ModulePresentation;
use reesmult::multiplicity::{
    achilles_manaresi_sequence, b_sequence, buchsbaum_rim, csharp_sequence, cstar_sequence, hilbert_samuel,
    multiplicity_sequence, Limits, ProblemInstance,
};
use reesmult::reduction::{height_positive, is_reduction_direct, is_reduction_numerical, DirectVerdict};
use serde_json::json;

fn monomial((a, b): (u32, u32)) -> String {
    format!("x^{a}*y^{b}")
}

fn problem(prime: u32, e: &[(u32, u32)], f: Option<&[(u32, u32)]>) -> ParsedProblem {
    let rows = |g: &[(u32, u32)]| g.iter().map(|&m| vec![monomial(m)]).collect::<Vec<_>>();
    let mut doc = json!({ "ring": { "prime": prime, "x_vars": ["x", "y"], "p": 1 }, "E": rows(e) });
    if let Some(f) = f {
        doc["F"] = json!(rows(f));
    }
    parse_problem(&doc.to_string()).unwrap()
}

fn instance(e: &[(u32, u32)]) -> ProblemInstance {
    problem(32003, e, None).instance(Limits::default()).unwrap()
}

/// Proper nonzero monomial ideals with at most three generators.
fn ideal() -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((0u32..4, 0u32..3), 1..4).prop_filter("proper", |g| g.iter().all(|&m| m != (0, 0)))
}

/// `(x^a, y^b)` plus possibly one mixed monomial.
fn m_primary() -> impl Strategy<Value = Vec<(u32, u32)>> {
    (1u32..4, 1u32..4, prop::option::of((1u32..3, 1u32..3))).prop_map(|(a, b, mixed)| {
        let mut g = vec![(a, 0), (0, b)];
        g.extend(mixed);
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn m_primary_degeneration(gens in m_primary()) {
        let inst = instance(&gens);
        let j = inst.e_as_ideal().unwrap();
        let e = hilbert_samuel(inst.ambient(), j.clone(), 15).unwrap() as i64;
        prop_assert_eq!(achilles_manaresi_sequence(inst.ambient(), j, 15).unwrap().c, vec![e, 0, 0]);
        prop_assert_eq!(buchsbaum_rim(&inst).unwrap() as i64, e);
        prop_assert_eq!(multiplicity_sequence(&inst).unwrap().c, vec![e, 0, 0]);
    }

    #[test]
    fn module_path_matches_achilles_manaresi(gens in ideal()) {
        let inst = instance(&gens);
        let am = achilles_manaresi_sequence(inst.ambient(), inst.e_as_ideal().unwrap(), 15).unwrap();
        prop_assert_eq!(multiplicity_sequence(&inst).unwrap().c, am.c);
    }

    #[test]
    fn star_is_sharp_plus_b(gens in ideal()) {
        let inst = instance(&gens);
        let pair = inst.pair().unwrap();
        let star = cstar_sequence(&pair, 3, 15).unwrap();
        let sharp = csharp_sequence(&pair, 3, 15).unwrap();
        let b = b_sequence(&pair, 3, 15).unwrap();
        for k in 0..3 {
            prop_assert_eq!(star.c[k], sharp.c[k] + b.c[k]);
        }
    }

    #[test]
    fn doubling_the_module_doubles_the_sequence(gens in ideal()) {
        let inst = instance(&gens);
        let doubled = inst.with_presentation(ModulePresentation::free(2)).unwrap();
        let single = multiplicity_sequence(&inst).unwrap();
        let twice: Vec<i64> = single.c.iter().map(|c| 2 * c).collect();
        prop_assert_eq!(multiplicity_sequence(&doubled).unwrap().c, twice);
    }

    #[test]
    fn sequences_survive_passing_to_i_m(gens in ideal()) {
        let inst = instance(&gens);
        prop_assume!(height_positive(&inst).unwrap().positive);
        let pair = inst.pair().unwrap();
        let shifted = pair.on_power(1).unwrap();
        prop_assert_eq!(csharp_sequence(&shifted, 3, 15).unwrap().c, csharp_sequence(&pair, 3, 15).unwrap().c);
        prop_assert_eq!(cstar_sequence(&shifted, 3, 15).unwrap().c, cstar_sequence(&pair, 3, 15).unwrap().c);
    }

    #[test]
    fn tables_grow_with_s(gens in ideal(), n in 0u32..5) {
        let inst = instance(&gens);
        let pair = inst.pair().unwrap();
        for kind in [HilbertKind::HSharp, HilbertKind::HStar, HilbertKind::B] {
            let row: Vec<u64> = (0..4).map(|s| pair.value(kind, s, n).unwrap()).collect();
            prop_assert!(row.windows(2).all(|w| w[0] <= w[1]), "{:?} {:?}", kind, row);
        }
    }

    #[test]
    fn characteristic_does_not_matter(gens in ideal()) {
        let a = problem(32003, &gens, None).instance(Limits::default()).unwrap();
        let b = problem(101, &gens, None).instance(Limits::default()).unwrap();
        prop_assert_eq!(multiplicity_sequence(&a).unwrap().c, multiplicity_sequence(&b).unwrap().c);
    }

    /// `E` is a random subset of the generators of `F`.
    #[test]
    fn direct_and_numerical_checks_agree(f in m_primary(), keep in prop::collection::vec(any::<bool>(), 3)) {
        let e: Vec<(u32, u32)> = f.iter().zip(keep.iter().chain(std::iter::repeat(&true))).filter(|(_, k)| **k).map(|(m, _)| *m).collect();
        prop_assume!(!e.is_empty());
        let inst = problem(32003, &e, Some(&f)).instance(Limits::default()).unwrap();
        let direct = is_reduction_direct(&inst, 4).unwrap();
        let numerical = is_reduction_numerical(&inst, false).unwrap().numerical.unwrap();
        if direct.is_yes() {
            prop_assert!(numerical.equal);
        }
        if !numerical.equal {
            prop_assert_eq!(direct, DirectVerdict::No { searched_up_to: 4 });
        }
    }
}

#[test]
fn reductions_stay_reductions() {
    // once I J^n M = J^{n+1} M holds it holds for every larger n
    let inst = problem(32003, &[(3, 0), (0, 3)], Some(&[(3, 0), (2, 1), (1, 2), (0, 3)])).instance(Limits::default()).unwrap();
    let DirectVerdict::Yes { witness } = is_reduction_direct(&inst, 6).unwrap() else { panic!("expected a reduction") };
    let ambient = inst.ambient();
    let ring = inst.ring();
    let i = reesmult::modules::rees_linear_forms(ring, inst.e()).unwrap();
    let tower = reesmult::modules::PowerTower::new(reesmult::modules::rees_linear_forms(ring, inst.f().unwrap()).unwrap(), ambient.module());
    for m in witness..=witness + 3 {
        let lhs = ambient.ideal_times(&i, &tower.power(ambient, m).unwrap()).unwrap();
        assert!(ambient.submodule_equals(&lhs, &tower.power(ambient, m + 1).unwrap()).unwrap(), "fails at n = {m}");
    }
}
