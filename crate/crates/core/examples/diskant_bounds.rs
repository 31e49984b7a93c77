//! Diskant's inequality and the certified inradius/outradius brackets.

use nefcalc::bounds::{self, BoundsOptions};
use nefcalc::certified::CertifiedReal;
use nefcalc::rational::int;
use nefcalc::NefSequence;

fn main() -> nefcalc::Result<()> {
    let seq = NefSequence::from_ints(&[1, 2, 2])?;

    let inner = bounds::inradius_bounds(&seq, 4096)?;
    let outer = bounds::outradius_bounds(&seq, 4096)?;
    println!("inradius in [{}, {}]", inner.lower.enclose(64)?, inner.upper.enclose(64)?);
    println!("outradius in [{}, {}]", outer.lower.enclose(64)?, outer.upper.enclose(64)?);

    let dk = bounds::diskant_check(&seq, &CertifiedReal::int(1), 4096, 64)?;
    println!("Diskant at slope 1: {} >= {} ({})", dk.inequality.lhs, dk.inequality.rhs, dk.inequality.comparison.verdict);

    let homothetic = NefSequence::from_ints(&[8, 4, 2])?;
    let b = bounds::inradius_bounds(&homothetic, 4096)?;
    println!("(8, 4, 2): bounds collapse = {}", b.collapsed());

    let report = bounds::bounds_report(&seq, &BoundsOptions { radii: Some((int(1), int(2))), ..Default::default() })?;
    for v in &report.verdicts {
        println!("  {:<32} {}", v.label, v.comparison.verdict);
    }

    match bounds::inradius_bounds(&NefSequence::from_ints(&[5, 4, 5])?, 4096) {
        Err(e) => println!("(5, 4, 5): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
