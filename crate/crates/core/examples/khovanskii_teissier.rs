//! Exact Khovanskii-Teissier checks on realized and free sequences.

use nefcalc::nefseq;
use nefcalc::{intersection_sequence, NefSequence, Polytope};

fn show(seq: &NefSequence) -> nefcalc::Result<()> {
    println!("s = {}", seq.to_json());
    for report in [nefseq::check_log_concavity(seq)?, nefseq::check_kt_power(seq)] {
        for e in &report.entries {
            println!("  {} i={}: deficit {} {}", report.name, e.index, e.deficit, if e.holds() { "ok" } else { "VIOLATED" });
        }
    }
    let m = nefseq::check_minkowski_sequence(seq, 4096, 64)?;
    println!("  Minkowski superadditivity: {}", m.inequality.comparison.verdict);
    Ok(())
}

fn main() -> nefcalc::Result<()> {
    let square = Polytope::unit_cube(2);
    let triangle = Polytope::standard_simplex(2);
    show(&intersection_sequence(&square, &triangle)?)?;

    // two disjoint planes with swapped line bundles: not from a pair of nef classes
    show(&NefSequence::from_ints(&[5, 4, 5])?)?;

    let conds = nefseq::check_equality_conditions_for(&square, &square.scale(&nefcalc::rational::int(3))?)?;
    println!("homothetic pair equality conditions: {conds:?}");
    Ok(())
}
