//! Hilbert-Samuel multiplicities of m-primary ideals, on R and on a
//! quotient module.

use reesmult::document::parse_problem;
use reesmult::multiplicity::{hilbert_samuel, Limits};

fn main() -> reesmult::Result<()> {
    let problem = parse_problem(include_str!("../problems/staircase.json"))?;
    let inst = problem.instance(Limits::default())?;
    println!("e((x^2, y^3), R) = {}", hilbert_samuel(inst.ambient(), problem.ideal()?, 15)?);

    for j in [r#"["x","y"]"#, r#"["x^2","y^2"]"#, r#"["x^3","x*y","y^4"]"#] {
        let text = format!(r#"{{"ring":{{"x_vars":["x","y"],"p":0}},"J":{j}}}"#);
        let problem = parse_problem(&text)?;
        let inst = problem.instance(Limits::default())?;
        println!("e({j}, R) = {}", hilbert_samuel(inst.ambient(), problem.ideal()?, 15)?);
    }

    // N = R/(y) + R/(x^2): e(m, N) = 1 + 2
    let problem = parse_problem(include_str!("../problems/quotient_module.json"))?;
    let inst = problem.instance(Limits::default())?;
    println!("e(m, R/(y) + R/(x^2)) = {}", hilbert_samuel(inst.ambient(), problem.ideal()?, 15)?);
    Ok(())
}
