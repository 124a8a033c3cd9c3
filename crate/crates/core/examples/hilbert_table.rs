//! Raw h#, h*, b tables for E = (x^2, xy), printed as TSV, followed by
//! the fitted polynomial of the h# table.

use reesmult::document::parse_problem;
use reesmult::hilbert::{fit_binomial, HilbertKind};
use reesmult::multiplicity::Limits;

fn main() -> reesmult::Result<()> {
    let problem = parse_problem(include_str!("../problems/table.json"))?;
    let inst = problem.instance(Limits::default())?;
    let pair = inst.pair()?;
    let window = problem.table_window();
    for kind in [HilbertKind::HSharp, HilbertKind::HStar, HilbertKind::B] {
        print!("{}", pair.table(kind, window)?.to_tsv(&problem.spec.to_string()));
        println!();
    }

    let table = pair.table(HilbertKind::HSharp, reesmult::hilbert::Window::square(1, 6))?;
    let fit = fit_binomial(&table, 3)?;
    println!("h#(s,n) = sum of a[k,l] C(s+k,k) C(n+l,l), validated = {}", fit.validated);
    for ((k, l), a) in &fit.coefficients {
        println!("  a[{k},{l}] = {a}");
    }
    Ok(())
}
