//! c* = c# + b, and invariance of c# and c* under replacing M by I^t M.

use reesmult::document::parse_problem;
use reesmult::multiplicity::{b_sequence, csharp_sequence, cstar_sequence, Limits};

fn main() -> reesmult::Result<()> {
    let problem = parse_problem(include_str!("../problems/table.json"))?;
    let inst = problem.instance(Limits::default())?;
    let d = inst.module_dimension()? + 1;
    let pair = inst.pair()?;
    println!("c*  = {}", cstar_sequence(&pair, d, 15)?);
    println!("c#  = {}", csharp_sequence(&pair, d, 15)?);
    println!("b   = {}", b_sequence(&pair, d, 15)?);
    for t in 1..=2 {
        let shifted = pair.on_power(t)?;
        println!("on I^{t} M: c# = {}, c* = {}", csharp_sequence(&shifted, d, 15)?, cstar_sequence(&shifted, d, 15)?);
    }
    Ok(())
}
