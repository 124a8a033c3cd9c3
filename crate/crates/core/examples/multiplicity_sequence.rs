//! `c_k(E, N)` for a few small modules, read from problem documents.

use reesmult::document::parse_problem;
use reesmult::multiplicity::{multiplicity_sequence, Limits};

fn main() -> reesmult::Result<()> {
    let docs = [
        ("E = (x) in k[x,y]", include_str!("../problems/principal_x.json")),
        ("E = {(x,0),(0,x)} in k[x]^2", include_str!("../problems/diagonal_x.json")),
        ("E = columns of [[x,y,0],[0,x,y]]", include_str!("../problems/maximal_squared.json")),
        ("E = (x^2, xy) in k[x,y]", include_str!("../problems/table.json")),
    ];
    for (label, text) in docs {
        let inst = parse_problem(text)?.instance(Limits::default())?;
        let seq = multiplicity_sequence(&inst)?;
        println!("{label:<36} D = {}  c = {seq}  (window origin {:?})", seq.dimension_bound, seq.window.origin);
    }
    Ok(())
}
