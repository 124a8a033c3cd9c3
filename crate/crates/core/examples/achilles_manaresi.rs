//! The Achilles-Manaresi sequence of an ideal of k[x,y], next to the
//! module-path sequence of the same ideal viewed as `E ⊆ R^1`.

use reesmult::document::parse_problem;
use reesmult::multiplicity::{achilles_manaresi_sequence, multiplicity_sequence, Limits};
use serde_json::json;

fn main() -> reesmult::Result<()> {
    let ideals: [&[&str]; 4] = [&["x"], &["x^2", "y^3"], &["x^2", "x*y"], &["x", "y"]];
    for gens in ideals {
        let rows: Vec<[&str; 1]> = gens.iter().map(|g| [*g]).collect();
        let doc = json!({ "ring": { "x_vars": ["x", "y"], "p": 1 }, "E": rows });
        let problem = parse_problem(&doc.to_string())?;
        let limits = Limits::default();
        let inst = problem.instance(limits)?;
        let am = achilles_manaresi_sequence(inst.ambient(), problem.ideal()?, limits.window_cap)?;
        let module_path = multiplicity_sequence(&inst)?;
        println!("J = ({:<10}) AM {am}   module path {module_path}", gens.join(","));
    }
    Ok(())
}
