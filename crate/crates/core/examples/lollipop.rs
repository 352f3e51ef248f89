//! Growing a lollipop inside a twisted matroid and reading its witness.
//!
//! Certified rigor would demand branch-depth at least `f_w(a, b)`, far
//! beyond anything this small, so depth premises are skipped here.

use fanforge::lollipop::{find_lollipop, validate_lollipop_minor, Rigor};
use fanforge::twisted::twist_of;
use fanforge::Matroid;

fn main() -> fanforge::Result<()> {
    let m = Matroid::fan(8)?;
    let w = twist_of(&m, fanforge::Subset::full(8))?;
    let found = find_lollipop(&w, 1, 0, 3, Rigor::Opportunistic)?;
    let names = found.lollipop.names();
    println!("twist {:?}", w.names(found.twist));
    println!("stick {:?}, z = {}, candy {:?}", names.stick, names.z, names.candy);
    println!("check: {:?}", validate_lollipop_minor(&w, &found));
    Ok(())
}
