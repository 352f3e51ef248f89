//! Finding fan minors through induced paths of fundamental graphs.

use fanforge::lollipop::{find_fan_minor, Rigor, Strategy};
use fanforge::twisted::{fan_minor_sets, validate_fan_certificate};
use fanforge::{Matroid, MultiGraph};

fn main() -> fanforge::Result<()> {
    let k4 = Matroid::graphic_numbered(MultiGraph::complete(4));
    for n in 1..=3 {
        match find_fan_minor(&k4, n, Strategy::Direct)? {
            Some(c) => {
                let (deleted, contracted) = fan_minor_sets(&k4, &c);
                println!(
                    "F{n}: path {:?} in base {:?}; delete {:?}, contract {:?}; valid: {}",
                    c.path,
                    c.base,
                    deleted,
                    contracted,
                    validate_fan_certificate(&k4, &c).is_ok()
                );
            }
            None => println!("F{n}: none"),
        }
    }
    let f4 = Matroid::fan(4)?;
    // the lollipop induction needs far more connectivity than a 7-element fan has
    match find_fan_minor(&f4, 2, Strategy::Constructive(Rigor::Opportunistic)) {
        Ok(c) => println!("constructive F2 in M(F4): {:?}", c.map(|c| c.path)),
        Err(e) => println!("constructive F2 in M(F4) gave up: {e}"),
    }
    Ok(())
}
