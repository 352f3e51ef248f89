//! Running a property suite and catching a planted fault.

use fanforge::verify::{run_suite, Mutant, Suite, SuiteConfig};

fn main() -> fanforge::Result<()> {
    let clean = run_suite(&SuiteConfig::new(Suite::Twisted, 7).cases(200))?;
    for c in &clean.checks {
        println!("{}: {} instances, {} violations", c.name, c.instances, c.violations);
    }
    let planted = run_suite(&SuiteConfig::new(Suite::Twisted, 7).cases(200).mutant(Mutant::Family))?;
    println!("clean passed: {}, mutant caught: {}", clean.passed, !planted.passed);
    if let Some(v) = planted.violations.first() {
        println!("first violation: {} #{}: {}", v.check, v.instance, v.detail);
    }
    Ok(())
}
