//! Is E a reduction of F? The direct search and the sequence comparison.

use reesmult::document::parse_problem;
use reesmult::reduction::compare;

fn main() -> reesmult::Result<()> {
    for (label, text) in [
        ("(x^2,y^2) in (x^2,xy,y^2)", include_str!("../problems/squares_in_quadrics.json")),
        ("(x^2,y^2) in (x,y)", include_str!("../problems/squares_in_maximal.json")),
    ] {
        let problem = parse_problem(text)?;
        let limits = problem.limits(&Default::default());
        let verdict = compare(&problem.instance(limits)?, limits.n_max, false)?;
        println!("{label}: {}", verdict.conclusion);
        println!("  direct: {:?}", verdict.direct);
        if let Some(num) = &verdict.numerical {
            println!("  c(E) = {}, c(F) = {}", num.e, num.f);
        }
        for c in &verdict.caveats {
            println!("  caveat: {c}");
        }
    }
    Ok(())
}
