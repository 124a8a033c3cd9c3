//! The ten acceptance criteria, each reported on its own PASS/FAIL line.
//!
//! Every value the criteria need is computed once per prime into a map; the
//! first eight criteria read the map for 32003, the ninth compares the maps
//! for 32003 and 101, and the tenth runs the binary's self-test twice.

use std::collections::BTreeMap;
use std::process::Command;

use reesmult::document::{parse_problem, ParsedProblem};
use reesmult::hilbert::MultiplicitySequence;
use reesmult::modules::ModulePresentation;
use reesmult::multiplicity::{
    achilles_manaresi_sequence, b_sequence, buchsbaum_rim, csharp_sequence, cstar_sequence, hilbert_samuel,
    multiplicity_sequence, Limits, ProblemInstance,
};
use reesmult::reduction::{height_positive, is_reduction_direct, DirectVerdict};
use serde_json::json;

type Values = BTreeMap<String, String>;
type Outcome = Result<String, String>;

const XY: &[&str] = &["x", "y"];
const X: &[&str] = &["x"];

struct Inst {
    name: &'static str,
    x_vars: &'static [&'static str],
    p: usize,
    e: &'static [&'static [&'static str]],
}

/// Ideal instances (`p = 1`).
const IDEALS: &[Inst] = &[
    Inst { name: "(x) in k[x,y]", x_vars: XY, p: 1, e: &[&["x"]] },
    Inst { name: "(x^2,y^3)", x_vars: XY, p: 1, e: &[&["x^2"], &["y^3"]] },
    Inst { name: "(x^2,y^2)", x_vars: XY, p: 1, e: &[&["x^2"], &["y^2"]] },
    Inst { name: "(x^2,xy,y^2)", x_vars: XY, p: 1, e: &[&["x^2"], &["x*y"], &["y^2"]] },
    Inst { name: "(x,y)", x_vars: XY, p: 1, e: &[&["x"], &["y"]] },
    Inst { name: "(x^2,xy)", x_vars: XY, p: 1, e: &[&["x^2"], &["x*y"]] },
    Inst { name: "(x^2) in k[x]", x_vars: X, p: 1, e: &[&["x^2"]] },
];

/// Module instances (`p = 2`).
const MODULES: &[Inst] = &[
    Inst { name: "{(x,0),(0,x)} in k[x]^2", x_vars: X, p: 2, e: &[&["x", "0"], &["0", "x"]] },
    Inst { name: "{(x,y)} in k[x,y]^2", x_vars: XY, p: 2, e: &[&["x", "y"]] },
    Inst { name: "{(x,0),(0,y)} in k[x,y]^2", x_vars: XY, p: 2, e: &[&["x", "0"], &["0", "y"]] },
];

fn problem(prime: u32, x_vars: &[&str], p: usize, e: &[&[&str]], f: Option<&[&[&str]]>) -> ParsedProblem {
    let mut doc = json!({ "ring": { "prime": prime, "x_vars": x_vars, "p": p }, "E": e });
    if let Some(f) = f {
        doc["F"] = json!(f);
    }
    parse_problem(&doc.to_string()).expect("corpus document")
}

fn instance(prime: u32, inst: &Inst) -> ProblemInstance {
    problem(prime, inst.x_vars, inst.p, inst.e, None).instance(Limits::default()).expect("corpus instance")
}

fn show(r: reesmult::Result<MultiplicitySequence>) -> String {
    match r {
        Ok(s) => s.to_string(),
        Err(e) => format!("error {}", e.code()),
    }
}

fn show_num(r: reesmult::Result<u64>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error {}", e.code()),
    }
}

fn all_instances() -> impl Iterator<Item = &'static Inst> {
    IDEALS.iter().chain(MODULES)
}

/// Every value the criteria need, computed over `F_prime`.
fn values(prime: u32) -> Values {
    let mut v = Values::new();
    let limits = Limits::default();
    let cap = limits.window_cap;

    // criteria 1 and 3: ideal of R on N = R
    for (key, j) in [("c1", &["x^2", "y^3"][..]), ("c3", &["x"][..])] {
        let pb = problem(prime, XY, 1, &[], None);
        let inst = pb.instance(limits).unwrap();
        let j = j.iter().map(|s| pb.names.parse(&pb.ring, s).unwrap()).collect::<Vec<_>>();
        v.insert(format!("{key}.hs"), show_num(hilbert_samuel(inst.ambient(), j.clone(), cap)));
        v.insert(format!("{key}.am"), show(achilles_manaresi_sequence(inst.ambient(), j, cap)));
    }
    let c3 = instance(prime, &IDEALS[0]);
    v.insert("c3.mult".into(), show(multiplicity_sequence(&c3)));

    // criterion 2
    let c2 = instance(prime, &MODULES[0]);
    v.insert("c2.br".into(), show_num(buchsbaum_rim(&c2)));
    v.insert("c2.mult".into(), show(multiplicity_sequence(&c2)));

    // criterion 4
    for (key, f, n_max) in [("yes", &IDEALS[3], 3), ("no", &IDEALS[4], 5)] {
        let inst = problem(prime, XY, 1, IDEALS[2].e, Some(f.e)).instance(limits).unwrap();
        let direct = is_reduction_direct(&inst, n_max).map(|d| format!("{d:?}")).unwrap_or_else(|e| e.code().into());
        v.insert(format!("c4.{key}.direct"), direct);
        v.insert(format!("c4.{key}.F"), show(multiplicity_sequence(&instance(prime, f))));
    }
    v.insert("c4.E".into(), show(multiplicity_sequence(&instance(prime, &IDEALS[2]))));

    for inst in all_instances() {
        let pi = instance(prime, inst);
        let d = pi.module_dimension().unwrap() + inst.p;
        let pair = pi.pair().unwrap();

        // criterion 5
        v.insert(format!("c5.{}.star", inst.name), show(cstar_sequence(&pair, d, cap)));
        v.insert(format!("c5.{}.sharp", inst.name), show(csharp_sequence(&pair, d, cap)));
        v.insert(format!("c5.{}.b", inst.name), show(b_sequence(&pair, d, cap)));

        // criterion 6
        let positive = height_positive(&pi).map(|h| h.positive).unwrap_or(false);
        v.insert(format!("c6.{}.height", inst.name), positive.to_string());
        for t in 1..=2 {
            let shifted = pair.on_power(t).unwrap();
            v.insert(format!("c6.{}.sharp.{t}", inst.name), show(csharp_sequence(&shifted, d, cap)));
            v.insert(format!("c6.{}.star.{t}", inst.name), show(cstar_sequence(&shifted, d, cap)));
        }

        // criterion 7
        let doubled = pi.with_presentation(ModulePresentation::free(2)).unwrap();
        v.insert(format!("c7.{}.single", inst.name), show(multiplicity_sequence(&pi)));
        v.insert(format!("c7.{}.double", inst.name), show(multiplicity_sequence(&doubled)));

        // criterion 8
        if inst.p == 1 {
            let j = pi.e_as_ideal().unwrap();
            v.insert(format!("c8.{}.am", inst.name), show(achilles_manaresi_sequence(pi.ambient(), j, cap)));
        }
    }
    v
}

fn get<'a>(v: &'a Values, key: &str) -> &'a str {
    v.get(key).map(String::as_str).unwrap_or("<missing>")
}

fn expect_eq(v: &Values, key: &str, want: &str) -> Result<(), String> {
    let got = get(v, key);
    if got == want {
        Ok(())
    } else {
        Err(format!("{key} = {got}, expected {want}"))
    }
}

fn parse_seq(s: &str) -> Option<Vec<i64>> {
    s.strip_prefix('(')?.strip_suffix(')')?.split(',').map(|t| t.parse().ok()).collect()
}

fn criterion_1(v: &Values) -> Outcome {
    expect_eq(v, "c1.hs", "6")?;
    expect_eq(v, "c1.am", "(6,0,0)")?;
    Ok("e = 6, AM sequence (6,0,0)".into())
}

fn criterion_2(v: &Values) -> Outcome {
    expect_eq(v, "c2.br", "2")?;
    expect_eq(v, "c2.mult", "(2,0,0)")?;
    Ok("e_BR = 2, c = (2,0,0)".into())
}

fn criterion_3(v: &Values) -> Outcome {
    expect_eq(v, "c3.mult", "(0,1,0)")?;
    expect_eq(v, "c3.am", "(0,1,0)")?;
    Ok("c = AM sequence = (0,1,0)".into())
}

fn criterion_4(v: &Values) -> Outcome {
    expect_eq(v, "c4.yes.direct", &format!("{:?}", DirectVerdict::Yes { witness: 1 }))?;
    expect_eq(v, "c4.E", "(4,0,0)")?;
    expect_eq(v, "c4.yes.F", "(4,0,0)")?;
    expect_eq(v, "c4.no.direct", &format!("{:?}", DirectVerdict::No { searched_up_to: 5 }))?;
    expect_eq(v, "c4.no.F", "(1,0,0)")?;
    Ok("yes(1) with (4,0,0) = (4,0,0); no up to 5 with (4,0,0) vs (1,0,0)".into())
}

fn criterion_5(v: &Values) -> Outcome {
    for inst in all_instances() {
        let seq = |part: &str| {
            let key = format!("c5.{}.{part}", inst.name);
            parse_seq(get(v, &key)).ok_or_else(|| format!("{key} = {}", get(v, &key)))
        };
        let (star, sharp, b) = (seq("star")?, seq("sharp")?, seq("b")?);
        if (0..star.len()).any(|k| star[k] != sharp[k] + b[k]) {
            return Err(format!("{}: c* = {star:?}, c# = {sharp:?}, b = {b:?}", inst.name));
        }
    }
    Ok(format!("c* = c# + b on {} instances", all_instances().count()))
}

fn criterion_6(v: &Values) -> Outcome {
    let mut checked = 0;
    for inst in all_instances() {
        if get(v, &format!("c6.{}.height", inst.name)) != "true" {
            continue;
        }
        for kind in ["sharp", "star"] {
            let base = get(v, &format!("c5.{}.{kind}", inst.name));
            parse_seq(base).ok_or_else(|| format!("{}: {kind} = {base}", inst.name))?;
            for t in 1..=2 {
                expect_eq(v, &format!("c6.{}.{kind}.{t}", inst.name), base)?;
            }
        }
        checked += 1;
    }
    if checked < 5 {
        return Err(format!("only {checked} instances passed the height check"));
    }
    Ok(format!("invariant under I^t M for t = 1, 2 on {checked} instances"))
}

fn criterion_7(v: &Values) -> Outcome {
    let mut checked = 0;
    for inst in all_instances() {
        let single = get(v, &format!("c7.{}.single", inst.name));
        let Some(c) = parse_seq(single) else { continue };
        let doubled: Vec<String> = c.iter().map(|x| (2 * x).to_string()).collect();
        expect_eq(v, &format!("c7.{}.double", inst.name), &format!("({})", doubled.join(",")))?;
        checked += 1;
    }
    if checked < 3 {
        return Err(format!("only {checked} instances produced a sequence"));
    }
    Ok(format!("c(E, N+N) = 2 c(E, N) on {checked} instances"))
}

fn criterion_8(v: &Values) -> Outcome {
    let mut checked = 0;
    for inst in IDEALS {
        let module_path = get(v, &format!("c7.{}.single", inst.name));
        parse_seq(module_path).ok_or_else(|| format!("{}: {module_path}", inst.name))?;
        expect_eq(v, &format!("c8.{}.am", inst.name), module_path)?;
        checked += 1;
    }
    Ok(format!("module path = AM path on {checked} ideals"))
}

fn criterion_9(a: &Values, b: &Values) -> Outcome {
    for (key, va) in a {
        let vb = get(b, key);
        if va != vb {
            return Err(format!("{key}: {va} over F_32003 but {vb} over F_101"));
        }
    }
    if a.len() != b.len() {
        return Err("different value sets".into());
    }
    Ok(format!("{} values agree over F_32003 and F_101", a.len()))
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_reesmult"))
            .args(["selftest", "--output", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    if !first.status.success() {
        return Err(format!("selftest exited with {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("the two selftest reports differ".into());
    }
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    Ok(format!("{} bytes, identical; {} of {} cases passed", first.stdout.len(), report["passed"], report["total"]))
}

#[test]
fn acceptance_criteria() {
    let (main, small) = std::thread::scope(|s| {
        let a = s.spawn(|| values(32003));
        let b = s.spawn(|| values(101));
        (a.join().unwrap(), b.join().unwrap())
    });
    let results: Vec<(&str, Outcome)> = vec![
        ("m-primary degeneration", criterion_1(&main)),
        ("Buchsbaum-Rim degeneration", criterion_2(&main)),
        ("non-finite-colength ideal", criterion_3(&main)),
        ("reduction soundness", criterion_4(&main)),
        ("c* = c# + b", criterion_5(&main)),
        ("power invariance", criterion_6(&main)),
        ("additivity on N + N", criterion_7(&main)),
        ("p = 1 path consistency", criterion_8(&main)),
        ("characteristic independence", criterion_9(&main, &small)),
        ("selftest determinism", criterion_10()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {why}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
