//! The built-in corpus of hand-checked values.
//!
//! Each case renders its result as a string and compares it with the
//! expected rendering, so failures show both sides verbatim.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::parse::VariableNames;
use crate::algebra::{span_dimension, BiPolynomial, ModuleVector, Ring, DEFAULT_PRIME};
use crate::document::parse_problem;
use crate::error::Result;
use crate::hilbert::{extract_ck, fit_binomial, module_dimension, AchillesManaresi, HilbertKind, HilbertTable, IdealModulePair};
use crate::modules::{rees_linear_forms, Ambient, GradedSubmodule, ModulePresentation};
use crate::multiplicity::{
    achilles_manaresi_sequence, b_sequence, buchsbaum_rim, csharp_sequence, cstar_sequence, hilbert_samuel,
    multiplicity_sequence, Limits, ProblemInstance,
};
use crate::reduction::{compare, height_positive, is_reduction_direct, is_reduction_numerical};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub cases: Vec<CaseResult>,
    pub total: usize,
    pub passed: usize,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            if c.passed {
                let _ = writeln!(out, "PASS {}: {}", c.name, c.actual);
            } else {
                let _ = writeln!(out, "FAIL {}: expected {}, got {}", c.name, c.expected, c.actual);
            }
        }
        let _ = writeln!(out, "{} cases, {} passed", self.total, self.passed);
        out
    }
}

type Runner = Box<dyn Fn() -> Result<String> + Send + Sync>;

struct Case {
    name: &'static str,
    expected: String,
    run: Runner,
}

fn case(name: &'static str, expected: impl Into<String>, run: impl Fn() -> Result<String> + Send + Sync + 'static) -> Case {
    Case { name, expected: expected.into(), run: Box::new(run) }
}

/// Ring plus variable names, for building corpus objects from strings.
struct Ctx {
    ring: Ring,
    names: VariableNames,
}

impl Ctx {
    fn new(nx: usize, nt: usize) -> Self {
        let ring = Ring::new(nx, nt, DEFAULT_PRIME).expect("corpus ring");
        let names = VariableNames::new(&ring, &[]).expect("corpus names");
        Ctx { ring, names }
    }

    fn poly(&self, s: &str) -> Result<BiPolynomial> {
        self.names.parse(&self.ring, s)
    }

    fn polys(&self, ss: &[&str]) -> Result<Vec<BiPolynomial>> {
        ss.iter().map(|s| self.poly(s)).collect()
    }

    fn vecs(&self, rows: &[&[&str]]) -> Result<Vec<ModuleVector>> {
        rows.iter().map(|r| Ok(ModuleVector::new(self.polys(r)?))).collect()
    }

    /// The submodule of `A` generated by the given polynomials.
    fn ideal_module(&self, gens: &[&str]) -> Result<GradedSubmodule> {
        GradedSubmodule::new(1, self.polys(gens)?.into_iter().map(|g| ModuleVector::new(vec![g])).collect())
    }

    fn ambient(&self) -> Ambient {
        Ambient::new(self.ring.clone(), ModulePresentation::free(1))
    }

    fn instance(&self, e: &[&[&str]], f: Option<&[&[&str]]>) -> Result<ProblemInstance> {
        let f = f.map(|f| self.vecs(f)).transpose()?;
        ProblemInstance::new(self.ring.clone(), ModulePresentation::free(1), self.vecs(e)?, f, Limits::default())
    }

    fn show(&self, p: &BiPolynomial) -> String {
        p.display(self.ring.field()).to_string()
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
}

fn generator_list(ctx: &Ctx, m: &GradedSubmodule) -> String {
    let mut gens: Vec<String> = m.generators().iter().map(|v| ctx.show(&v.entries()[0])).collect();
    gens.sort();
    format!("{{{}}}", gens.join(","))
}

fn algebra_cases() -> Vec<Case> {
    vec![
        case("monomial basis d=2 degree 3", "x1^3,x1^2*x2,x1*x2^2,x2^3", || {
            Ok(join(Ctx::new(2, 0).ring.monomial_basis(3, 0)))
        }),
        case("monomial basis d=1 p=2 bidegree (0,1)", "T1,T2", || Ok(join(Ctx::new(1, 2).ring.monomial_basis(0, 1)))),
        case("monomial basis d=2 p=1 bidegree (1,1)", "x1*T1,x2*T1", || {
            Ok(join(Ctx::new(2, 1).ring.monomial_basis(1, 1)))
        }),
        case("(x+y)(x-y)", "x1^2 - x2^2", || {
            let c = Ctx::new(2, 0);
            Ok(c.show(&c.poly("x+y")?.mul(&c.poly("x-y")?, c.ring.field())))
        }),
        case("(x T1)(x T2)", "x1^2*T1*T2", || {
            let c = Ctx::new(1, 2);
            Ok(c.show(&c.poly("x*T1")?.mul(&c.poly("x*T2")?, c.ring.field())))
        }),
        case("f times zero", "0", || {
            let c = Ctx::new(2, 1);
            Ok(c.show(&c.poly("x*T + y*T")?.mul(&BiPolynomial::zero(), c.ring.field())))
        }),
        case("span of duplicate rows", "1", || {
            let c = Ctx::new(2, 0);
            Ok(span_dimension(&c.ring, &c.vecs(&[&["x^2"], &["x^2"]])?, 2, 0)?.to_string())
        }),
        case("span of all quadrics", "3", || {
            let c = Ctx::new(2, 0);
            Ok(span_dimension(&c.ring, &c.vecs(&[&["x^2"], &["x*y"], &["y^2"]])?, 2, 0)?.to_string())
        }),
        case("span of x T1, x T2", "2", || {
            let c = Ctx::new(1, 2);
            Ok(span_dimension(&c.ring, &c.vecs(&[&["x*T1"], &["x*T2"]])?, 1, 1)?.to_string())
        }),
    ]
}

fn module_cases() -> Vec<Case> {
    vec![
        case("Rees forms of (x,0) and (x,y)", "x1*T1;x1*T1 + x2*T2", || {
            let c = Ctx::new(2, 2);
            let forms = rees_linear_forms(&c.ring, &c.vecs(&[&["x", "0"], &["x", "y"]])?)?;
            Ok(forms.iter().map(|f| c.show(f)).collect::<Vec<_>>().join(";"))
        }),
        case("Rees form of (x, y^2) is rejected", "E_INHOMOGENEOUS", || {
            let c = Ctx::new(2, 2);
            Ok(match rees_linear_forms(&c.ring, &c.vecs(&[&["x", "y^2"]])?) {
                Ok(_) => "accepted".into(),
                Err(e) => e.code().into(),
            })
        }),
        case("(x T1)^2 A", "{x1^2*T1^2}", || {
            let c = Ctx::new(1, 1);
            let amb = c.ambient();
            Ok(generator_list(&c, &amb.power_product(&c.polys(&["x*T"])?, 2, &amb.module())?))
        }),
        case("(x T1, x T2) A", "{x1*T1,x1*T2}", || {
            let c = Ctx::new(1, 2);
            let amb = c.ambient();
            Ok(generator_list(&c, &amb.power_product(&c.polys(&["x*T1", "x*T2"])?, 1, &amb.module())?))
        }),
        case("(x^2 T, y^2 T)^2 A", "{x1^2*x2^2*T1^2,x1^4*T1^2,x2^4*T1^2}", || {
            let c = Ctx::new(2, 1);
            let amb = c.ambient();
            Ok(generator_list(&c, &amb.power_product(&c.polys(&["x^2*T", "y^2*T"])?, 2, &amb.module())?))
        }),
        case("piece (1,1) of (x T1, x T2) A", "2", || {
            let c = Ctx::new(1, 2);
            Ok(c.ambient().graded_piece_dim(&c.ideal_module(&["x*T1", "x*T2"])?, 1, 1).to_string())
        }),
        case("pieces of the zero module", "0,0,0", || {
            let c = Ctx::new(2, 2);
            let amb = c.ambient();
            let z = GradedSubmodule::zero(1);
            Ok(join([(0, 0), (1, 2), (3, 1)].map(|(e, n)| amb.graded_piece_dim(&z, e, n))))
        }),
        case("pieces of A itself over k[x,y][T1,T2]", "1,6,12", || {
            let c = Ctx::new(2, 2);
            let amb = c.ambient();
            let m = amb.module();
            Ok(join([(0, 0), (2, 1), (3, 2)].map(|(e, n)| amb.graded_piece_dim(&m, e, n))))
        }),
        case("ℓ[(x^2)^i / (m^{s+1}(x^2)^i + (x^2)^{i+1})] for s=1,0", "2,1", || {
            let c = Ctx::new(1, 0);
            let amb = c.ambient();
            let (x, y) = (c.ideal_module(&["x^4"])?, c.ideal_module(&["x^6"])?);
            Ok(join([1, 0].map(|s| amb.quotient_length(&x, &y, s, 0)).into_iter().collect::<Result<Vec<_>>>()?))
        }),
        case("ℓ[x^i R / (m^{s+1} x^i R + x^{i+1} R)] over k[x,y], s=0..3", "1,2,3,4", || {
            let c = Ctx::new(2, 0);
            let amb = c.ambient();
            let (x, y) = (c.ideal_module(&["x^2"])?, c.ideal_module(&["x^3"])?);
            Ok(join((0..4).map(|s| amb.quotient_length(&x, &y, s, 0)).collect::<Result<Vec<_>>>()?))
        }),
        case("ℓ[X / (m^{s+1} X + X)]", "0,0", || {
            let c = Ctx::new(2, 0);
            let amb = c.ambient();
            let x = c.ideal_module(&["x^2", "x*y"])?;
            Ok(join([0, 3].map(|s| amb.quotient_length(&x, &x, s, 0)).into_iter().collect::<Result<Vec<_>>>()?))
        }),
        case("X = X", "true", || {
            let c = Ctx::new(2, 1);
            let x = c.ideal_module(&["x^2*T", "x*y*T"])?;
            Ok(c.ambient().submodule_equals(&x, &x)?.to_string())
        }),
        case("(x^2, xy) A vs (x^2, xy, y^2) A", "false", || {
            let c = Ctx::new(2, 1);
            let x = c.ideal_module(&["x^2*T", "x*y*T"])?;
            let y = c.ideal_module(&["x^2*T", "x*y*T", "y^2*T"])?;
            Ok(c.ambient().submodule_equals(&x, &y)?.to_string())
        }),
        case("E F A vs F^2 A for E=(x^2,y^2), F=(x^2,xy,y^2)", "true", || {
            let c = Ctx::new(2, 1);
            let amb = c.ambient();
            let f = c.polys(&["x^2*T", "x*y*T", "y^2*T"])?;
            let e = c.polys(&["x^2*T", "y^2*T"])?;
            let ef = amb.ideal_times(&e, &amb.ideal_times(&f, &amb.module())?)?;
            let ff = amb.power_product(&f, 2, &amb.module())?;
            Ok(amb.submodule_equals(&ef, &ff)?.to_string())
        }),
    ]
}

fn pair_value(nx: usize, nt: usize, e: &'static [&'static [&'static str]], kind: HilbertKind, s: u32, n: u32) -> Result<String> {
    let c = Ctx::new(nx, nt);
    let amb = c.ambient();
    let pair = IdealModulePair::rees(&amb, &c.vecs(e)?)?;
    Ok(pair.value(kind, s, n)?.to_string())
}

fn hilbert_cases() -> Vec<Case> {
    const X2: &[&[&str]] = &[&["x^2"]];
    const X: &[&[&str]] = &[&["x"]];
    const XX: &[&[&str]] = &[&["x", "0"], &["0", "x"]];
    vec![
        case("hsharp (x^2) at (1,2)", "4", || pair_value(1, 1, X2, HilbertKind::HSharp, 1, 2)),
        case("hsharp (x) over k[x,y] at (2,3)", "9", || pair_value(2, 1, X, HilbertKind::HSharp, 2, 3)),
        case("hsharp (x T1, x T2) at (1,3)", "12", || pair_value(1, 2, XX, HilbertKind::HSharp, 1, 3)),
        case("hstar (x^2) at (1,2)", "6", || pair_value(1, 1, X2, HilbertKind::HStar, 1, 2)),
        case("hstar of the zero ideal is ℓ[M/m^{s+1}M]_n", "3,6,10", || {
            let c = Ctx::new(2, 1);
            let amb = c.ambient();
            let pair = IdealModulePair::rees(&amb, &c.vecs(&[&["0"]])?)?;
            Ok(join([(1, 0), (2, 3), (3, 1)].map(|(s, n)| pair.hstar_value(s, n)).into_iter().collect::<Result<Vec<_>>>()?))
        }),
        case("hsharp, b, hstar of (x T1, x T2) at (1,2)", "6,6,12", || {
            Ok(join([HilbertKind::HSharp, HilbertKind::B, HilbertKind::HStar]
                .map(|k| pair_value(1, 2, XX, k, 1, 2))
                .into_iter()
                .collect::<Result<Vec<_>>>()?))
        }),
        case("b (x^2) at (1,2)", "2", || pair_value(1, 1, X2, HilbertKind::B, 1, 2)),
        case("b = hstar - hsharp on (x) over k[x,y]", "true", || {
            let c = Ctx::new(2, 1);
            let amb = c.ambient();
            let pair = IdealModulePair::rees(&amb, &c.vecs(X)?)?;
            for s in 0..3 {
                for n in 0..4 {
                    if pair.b_value(s, n)? + pair.hsharp_value(s, n)? != pair.hstar_value(s, n)? {
                        return Ok("false".into());
                    }
                }
            }
            Ok("true".into())
        }),
        case("b for E = R^2 over k[x] is C(n+1,1)(s+1)", "4,9", || {
            let c = Ctx::new(1, 2);
            let amb = c.ambient();
            let pair = IdealModulePair::rees(&amb, &c.vecs(&[&["1", "0"], &["0", "1"]])?)?;
            Ok(join([(1, 1), (2, 2)].map(|(s, n)| pair.b_value(s, n)).into_iter().collect::<Result<Vec<_>>>()?))
        }),
        case("am (x^2) in k[x]: s=0,1,2 at i=0..2", "1,1,1;1,1,1;0,0,0", || {
            let c = Ctx::new(1, 0);
            let amb = c.ambient();
            let am = AchillesManaresi::new(&amb, c.polys(&["x^2"])?)?;
            let rows = (0..3)
                .map(|s| Ok(join((0..3).map(|i| am.am_value(s, i)).collect::<Result<Vec<_>>>()?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(rows.join(";"))
        }),
        case("am (x) in k[x,y] is 1", "1,1,1,1", || {
            let c = Ctx::new(2, 0);
            let amb = c.ambient();
            let am = AchillesManaresi::new(&amb, c.polys(&["x"])?)?;
            Ok(join([(0, 0), (1, 2), (3, 1), (2, 3)].map(|(s, i)| am.am_value(s, i)).into_iter().collect::<Result<Vec<_>>>()?))
        }),
        case("am of the unit ideal is 0", "0,0,0", || {
            let c = Ctx::new(2, 0);
            let amb = c.ambient();
            let am = AchillesManaresi::new(&amb, c.polys(&["1"])?)?;
            Ok(join([(0, 0), (1, 2), (3, 1)].map(|(s, i)| am.am_value(s, i)).into_iter().collect::<Result<Vec<_>>>()?))
        }),
        case("fit of (s+1)(n+1), D=3", "{(1,1):1}", || synthetic_fit(|s, n| (s + 1) * (n + 1), 3)),
        case("fit of n(n+1), D=3", "{(0,1):-2,(0,2):2}", || synthetic_fit(|_, n| n * (n + 1), 3)),
        case("fit of zero, D=2", "{}", || synthetic_fit(|_, _| 0, 2)),
        case("extract from a(1,1)=1, D=3", "(0,1,0)", || synthetic_extract(|s, n| (s + 1) * (n + 1), 3)),
        case("extract from 2n, D=2", "(2,0)", || synthetic_extract(|_, n| 2 * n, 2)),
        case("extract from zero, D=4", "(0,0,0,0)", || synthetic_extract(|_, _| 0, 4)),
        case("dim k[x,y], k[x,y]/(x), k[x,y]/(x^2,y^2)", "2,1,0", || {
            let c = Ctx::new(2, 0);
            let dims = [&[][..], &["x"][..], &["x^2", "y^2"][..]]
                .iter()
                .map(|rels| {
                    let rels = rels.iter().map(|r| Ok(ModuleVector::new(vec![c.poly(r)?]))).collect::<Result<Vec<_>>>()?;
                    let amb = Ambient::new(c.ring.clone(), ModulePresentation::new(1, rels)?);
                    module_dimension(&amb, 15)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(join(dims))
        }),
    ]
}

fn synthetic_table(f: fn(i128, i128) -> i128, d: usize) -> HilbertTable {
    let size = d + 3;
    let values = (0..size).map(|a| (0..size).map(|b| f(1 + a as i128, 1 + b as i128) as u64).collect()).collect();
    HilbertTable { kind: HilbertKind::HSharp, origin: (1, 1), values }
}

fn synthetic_fit(f: fn(i128, i128) -> i128, d: usize) -> Result<String> {
    let fit = fit_binomial(&synthetic_table(f, d), d)?;
    let parts: Vec<String> = fit.coefficients.iter().map(|((k, l), a)| format!("({k},{l}):{a}")).collect();
    Ok(format!("{{{}}}", parts.join(",")))
}

fn synthetic_extract(f: fn(i128, i128) -> i128, d: usize) -> Result<String> {
    let table = synthetic_table(f, d);
    let fit = fit_binomial(&table, d)?;
    Ok(extract_ck(&fit, d, HilbertKind::HSharp, table.window())?.to_string())
}

fn sequence(r: Result<crate::hilbert::MultiplicitySequence>) -> Result<String> {
    Ok(r?.to_string())
}

fn multiplicity_cases() -> Vec<Case> {
    vec![
        case("c(E) for E={(x,0),(0,x)} over k[x]", "(2,0,0)", || {
            sequence(multiplicity_sequence(&Ctx::new(1, 2).instance(&[&["x", "0"], &["0", "x"]], None)?))
        }),
        case("c(E) for E=(x) over k[x,y]", "(0,1,0)", || {
            sequence(multiplicity_sequence(&Ctx::new(2, 1).instance(&[&["x"]], None)?))
        }),
        case("c(E) for E=R^2 over k[x,y]", "(0,0,0,0)", || {
            sequence(multiplicity_sequence(&Ctx::new(2, 2).instance(&[&["1", "0"], &["0", "1"]], None)?))
        }),
        case("c#((x^2)A, A) D=2 and D=3", "(2,0);(0,0,0)", || {
            let inst = Ctx::new(1, 1).instance(&[&["x^2"]], None)?;
            let pair = inst.pair()?;
            Ok(format!("{};{}", csharp_sequence(&pair, 2, 15)?, csharp_sequence(&pair, 3, 15)?))
        }),
        case("c# of the zero ideal is rejected", "E_PRECONDITION", || {
            let inst = Ctx::new(1, 1).instance(&[&["0"]], None)?;
            Ok(csharp_sequence(&inst.pair()?, 2, 15).map_or_else(|e| e.code().to_string(), |s| s.to_string()))
        }),
        case("c*, c#, b of (x^2)A, D=2", "(2,1)=(2,0)+(0,1)", || {
            let inst = Ctx::new(1, 1).instance(&[&["x^2"]], None)?;
            let pair = inst.pair()?;
            Ok(format!("{}={}+{}", cstar_sequence(&pair, 2, 15)?, csharp_sequence(&pair, 2, 15)?, b_sequence(&pair, 2, 15)?))
        }),
        case("c* = c# + b for (x) over k[x,y], D=3", "true", || {
            let inst = Ctx::new(2, 1).instance(&[&["x"]], None)?;
            let pair = inst.pair()?;
            let (star, sharp, b) = (cstar_sequence(&pair, 3, 15)?, csharp_sequence(&pair, 3, 15)?, b_sequence(&pair, 3, 15)?);
            Ok((0..3).all(|k| star.c[k] == sharp.c[k] + b.c[k]).to_string())
        }),
        case("AM sequence of (x^2,y^3)", "(6,0,0)", || am_case(&["x^2", "y^3"])),
        case("AM sequence of (x)", "(0,1,0)", || am_case(&["x"])),
        case("AM sequence of (x,y)", "(1,0,0)", || am_case(&["x", "y"])),
        case("e_BR of {(x,0),(0,x)}", "2", || {
            Ok(buchsbaum_rim(&Ctx::new(1, 2).instance(&[&["x", "0"], &["0", "x"]], None)?)?.to_string())
        }),
        case("e_BR of R^2", "0", || {
            Ok(buchsbaum_rim(&Ctx::new(1, 2).instance(&[&["1", "0"], &["0", "1"]], None)?)?.to_string())
        }),
        case("e_BR of (x^2) over k[x]", "2", || Ok(buchsbaum_rim(&Ctx::new(1, 1).instance(&[&["x^2"]], None)?)?.to_string())),
        case("e((x^2,y^3))", "6", || hs_case(&["x^2", "y^3"])),
        case("e((x,y))", "1", || hs_case(&["x", "y"])),
        case("e((x^2,y^2))", "4", || hs_case(&["x^2", "y^2"])),
    ]
}

fn am_case(j: &[&str]) -> Result<String> {
    let c = Ctx::new(2, 0);
    sequence(achilles_manaresi_sequence(&c.ambient(), c.polys(j)?, 15))
}

fn hs_case(j: &[&str]) -> Result<String> {
    let c = Ctx::new(2, 0);
    Ok(hilbert_samuel(&c.ambient(), c.polys(j)?, 15)?.to_string())
}

const E_SQ: &[&[&str]] = &[&["x^2"], &["y^2"]];
const F_QUAD: &[&[&str]] = &[&["x^2"], &["x*y"], &["y^2"]];
const F_MAX: &[&[&str]] = &[&["x"], &["y"]];

fn reduction_cases() -> Vec<Case> {
    vec![
        case("direct: (x^2,y^2) in (x^2,xy,y^2)", "Yes { witness: 1 }", || {
            Ok(format!("{:?}", is_reduction_direct(&Ctx::new(2, 1).instance(E_SQ, Some(F_QUAD))?, 3)?))
        }),
        case("direct: E = F", "Yes { witness: 0 }", || {
            Ok(format!("{:?}", is_reduction_direct(&Ctx::new(2, 1).instance(F_QUAD, Some(F_QUAD))?, 3)?))
        }),
        case("direct: (x^2,y^2) in (x,y)", "No { searched_up_to: 5 }", || {
            Ok(format!("{:?}", is_reduction_direct(&Ctx::new(2, 1).instance(E_SQ, Some(F_MAX))?, 5)?))
        }),
        case("numerical: (x^2,y^2) in (x^2,xy,y^2)", "(4,0,0) (4,0,0) reduction, conditional on N quasi-unmixed", || {
            numerical_case(E_SQ, F_QUAD)
        }),
        case("numerical: (x^2,y^2) in (x,y)", "(4,0,0) (1,0,0) not a reduction", || numerical_case(E_SQ, F_MAX)),
        case("numerical: E = F", "(1,0,0) (1,0,0) reduction, conditional on N quasi-unmixed", || numerical_case(F_MAX, F_MAX)),
        case("height: (x) over k[x,y]", "true", || height_case(&[&["x"]])),
        case("height: E = 0", "false", || height_case(&[&["0"]])),
        case("height: (x^2,y^3)", "true", || height_case(&[&["x^2"], &["y^3"]])),
    ]
}

fn numerical_case(e: &[&[&str]], f: &[&[&str]]) -> Result<String> {
    let v = is_reduction_numerical(&Ctx::new(2, 1).instance(e, Some(f))?, false)?;
    let num = v.numerical.expect("numerical part");
    Ok(format!("{} {} {}", num.e, num.f, v.conclusion))
}

fn height_case(e: &[&[&str]]) -> Result<String> {
    Ok(height_positive(&Ctx::new(2, 1).instance(e, None)?)?.positive.to_string())
}

fn document_cases() -> Vec<Case> {
    vec![
        case("document for the d=1, p=2 instance", "d=1 p=2 |E|=2", || {
            let p = parse_problem(
                r#"{"ring":{"prime":32003,"x_vars":["x"],"p":2},"N":{"free_rank":1,"relations":[]},"E":[["x","0"],["0","x"]]}"#,
            )?;
            Ok(format!("d={} p={} |E|={}", p.ring.nx(), p.ring.nt(), p.e.len()))
        }),
        case("document with E[0] = (x, y^2)", "E_INHOMOGENEOUS at E[0]", || {
            let err = parse_problem(r#"{"ring":{"x_vars":["x","y"],"p":2},"E":[["x","y^2"]]}"#).err();
            Ok(err.map_or("accepted".into(), |e| {
                format!("{} at {}", e.code(), if e.to_string().contains("E[0]") { "E[0]" } else { "?" })
            }))
        }),
        case("document without ring", "E_PARSE", || {
            Ok(parse_problem(r#"{"E":[["x"]]}"#).err().map_or("accepted".into(), |e| e.code().to_string()))
        }),
        case("compare on (x^2,y^2) in (x^2,xy,y^2)", "Yes { witness: 1 } (4,0,0) (4,0,0)", || {
            let v = compare(&Ctx::new(2, 1).instance(E_SQ, Some(F_QUAD))?, 8, false)?;
            let num = v.numerical.expect("numerical part");
            Ok(format!("{:?} {} {}", v.direct, num.e, num.f))
        }),
    ]
}

fn corpus() -> Vec<Case> {
    let mut all = algebra_cases();
    all.extend(module_cases());
    all.extend(hilbert_cases());
    all.extend(multiplicity_cases());
    all.extend(reduction_cases());
    all.extend(document_cases());
    all
}

/// Runs every corpus case; results keep corpus order.
pub fn run_selftest() -> SelftestReport {
    let cases: Vec<CaseResult> = corpus()
        .par_iter()
        .map(|c| {
            let actual = match (c.run)() {
                Ok(s) => s,
                Err(e) => format!("error {}: {e}", e.code()),
            };
            CaseResult { name: c.name.to_string(), passed: actual == c.expected, expected: c.expected.clone(), actual }
        })
        .collect();
    let passed = cases.iter().filter(|c| c.passed).count();
    SelftestReport { total: cases.len(), passed, cases }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        let report = run_selftest();
        let failures: Vec<_> = report.cases.iter().filter(|c| !c.passed).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(report.render_text().ends_with(&format!("{0} cases, {0} passed\n", report.total)));
    }
}
