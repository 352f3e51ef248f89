//! Exact branch-width and branch-depth with their witnesses.

use fanforge::decomposition::{branch_depth, branch_width, graph_branch_width, is_kr_decomposition};
use fanforge::{Matroid, MultiGraph};

fn main() -> fanforge::Result<()> {
    let cases = [
        ("U(2,4)", Matroid::uniform(2, 4)?),
        ("M(K4)", Matroid::graphic_numbered(MultiGraph::complete(4))),
        ("M(F4)", Matroid::fan(4)?),
    ];
    for (name, m) in &cases {
        let bw = branch_width(m)?;
        let bd = branch_depth(m)?;
        println!("{name}: branch-width {}, branch-depth {}", bw.value, bd.value);
        for round in &bd.lower_bound_trace {
            println!("  depth bound {}: feasible {} after {} states", round.bound, round.feasible, round.states);
        }
        if let Some(d) = bd.decomposition() {
            println!("  witness checks: {}", is_kr_decomposition(m, d, bd.value, bd.value)?);
        }
    }
    let k5 = MultiGraph::complete(5);
    println!("graph branch-width of K5: {}", graph_branch_width(&k5)?.value);
    Ok(())
}
