//! A twisted matroid from a base, its fundamental graph, and a pivot.

use fanforge::twisted::{pivot_agrees, pivot_exact, pivot_predict, twist_of, verify_twisted_axioms};
use fanforge::{Matroid, MultiGraph};

fn main() -> fanforge::Result<()> {
    let m = Matroid::graphic_numbered(MultiGraph::complete(4));
    let b = m.some_base();
    let w = twist_of(&m, b)?;
    println!("M(K4) * {:?}: {} feasible sets", w.names(b), w.feasible().len());
    println!("axioms hold: {}", verify_twisted_axioms(&w).all());

    let g = m.fundamental_graph(b)?;
    let u = b.into_iter().next().expect("non-empty base");
    let v = g.neighbours(u).into_iter().next().expect("u has a neighbour");
    let predicted = pivot_predict(&g, u, v)?;
    let exact = pivot_exact(&m, b, u, v)?;
    println!("pivot on ({u},{v}) predicted correctly: {}", pivot_agrees(&predicted, &exact));
    Ok(())
}
