//! Matroids up to isomorphism on small ground sets.

use fanforge::catalog::matroid_catalog;
use fanforge::decomposition::branch_width;

fn main() -> fanforge::Result<()> {
    for (n, level) in matroid_catalog(6)?.iter().enumerate() {
        let mut widths = std::collections::BTreeMap::new();
        for m in level {
            *widths.entry(branch_width(m)?.value).or_insert(0) += 1;
        }
        println!("{n} elements: {} classes, branch-width histogram {widths:?}", level.len());
    }
    Ok(())
}
