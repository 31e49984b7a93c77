//! Bonnesen's inequality on polygons and the proportionality criterion.

use nefcalc::bounds;
use nefcalc::generate::Generator;
use nefcalc::{intersection_sequence, radii};

fn main() -> nefcalc::Result<()> {
    let mut g = Generator::new(11);
    let (p, q) = g.pair(2, 7)?;
    let seq = intersection_sequence(&p, &q)?;
    let r = radii::slope(&p, &q)?;
    let big_r = radii::outradius(&p, &q)?.value;
    let b = bounds::bonnesen_check(&seq, &r.clone().into(), &big_r.clone().into(), 4096, 64)?;
    println!("r = {r}, R = {big_r}");
    println!("Bonnesen: {} <= {} ({})", b.lhs, b.rhs, b.comparison.verdict);

    let (p, q, lambda, _) = g.homothetic_pair(3, 8)?;
    let prop = bounds::proportionality_test_polytopes(&p, &q, 64)?;
    println!("lambda = {lambda}: proportional = {}, ratio = {}", prop.proportional, prop.ratio_enclosure.unwrap());
    Ok(())
}
