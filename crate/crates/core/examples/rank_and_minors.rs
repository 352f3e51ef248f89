//! Rank, connectivity and minors of the cycle matroid of K4.

use fanforge::{Matroid, MultiGraph, Subset};

fn main() -> fanforge::Result<()> {
    let k4 = Matroid::graphic_numbered(MultiGraph::complete(4));
    println!("M(K4): {} elements, rank {}", k4.len(), k4.rank_of_matroid());
    println!("bases: {}, circuits: {}", k4.bases()?.len(), k4.circuits()?.len());

    let triangle = Subset::from_indices([0, 1, 3]);
    println!("r(triangle) = {}, lambda(triangle) = {}", k4.rank(triangle)?, k4.lambda(triangle)?);

    // contracting one edge of K4 leaves a triangle with two parallel pairs
    let minor = k4.contract(Subset::singleton(0))?;
    println!("M(K4) / 0: {} elements, rank {}", minor.len(), minor.rank_of_matroid());
    let dual = k4.dual();
    println!("dual rank {}, self-dual: {}", dual.rank_of_matroid(), fanforge::matroid::is_isomorphic(&k4, &dual)?.is_some());
    Ok(())
}
