//! Bicircular and graphic tripartitions and the width bound.

use fanforge::quasigraphic::{bicircular_fan, branch_width_bound_check, validate_tripartition, QuasiGraphicMatroid, Tripartition};
use fanforge::{GroundSet, MultiGraph};

fn main() -> fanforge::Result<()> {
    for n in 1..=4 {
        let q = bicircular_fan(n)?;
        let m = q.to_matroid();
        let iso = fanforge::matroid::is_isomorphic(&m, &fanforge::Matroid::fan(n)?)?.is_some();
        let bound = branch_width_bound_check(&q)?;
        println!(
            "looped path {n}: {} circuits, fan: {iso}, bw(G) {} bw(M) {} bound holds {}",
            q.circuits().len(),
            bound.graph_width,
            bound.matroid_width,
            bound.holds
        );
    }
    let g = MultiGraph::complete(4);
    let t = Tripartition::graphic(g.clone(), GroundSet::numbered(g.edge_count()))?;
    println!("graphic K4 report: {:?}", validate_tripartition(&t)?);
    let q = QuasiGraphicMatroid::new(t)?;
    println!("rank of M(K4) via cycles: {}", q.to_matroid().rank_of_matroid());
    Ok(())
}
