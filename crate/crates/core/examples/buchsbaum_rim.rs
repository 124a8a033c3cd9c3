//! Buchsbaum-Rim multiplicities of finite-colength modules, and the
//! degeneration `c(E) = (e_BR(E), 0, ..., 0)`.

use reesmult::document::parse_problem;
use reesmult::multiplicity::{buchsbaum_rim, multiplicity_sequence, Limits};

fn main() -> reesmult::Result<()> {
    let docs = [
        include_str!("../problems/diagonal_x.json"),
        include_str!("../problems/maximal_squared.json"),
        r#"{"ring":{"x_vars":["x"],"p":1},"E":[["x^2"]]}"#,
    ];
    for text in docs {
        let inst = parse_problem(text)?.instance(Limits::default())?;
        println!("e_BR = {}  c = {}", buchsbaum_rim(&inst)?, multiplicity_sequence(&inst)?);
    }

    // E = (x) in k[x,y] does not have finite colength
    let inst = parse_problem(include_str!("../problems/principal_x.json"))?.instance(Limits::default())?;
    match buchsbaum_rim(&inst) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("(x) in k[x,y]: {} ({})", e.code(), e),
    }
    Ok(())
}
