//! Exact inradius and outradius from the containment LP, with dual certificates.

use nefcalc::radii;
use nefcalc::rational::int;
use nefcalc::Polytope;

fn main() -> nefcalc::Result<()> {
    let square = Polytope::unit_cube(2);
    let triangle = Polytope::standard_simplex(2);

    let r = radii::inradius(&square, &triangle)?;
    println!("r(square; triangle) = {} at x = {:?}", r.t_star, r.translation.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("active facets {:?}, dual multipliers {:?}", r.active_facets, r.dual_certificate.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("certificate verifies: {}", r.verify(&square, &triangle));

    let big_r = radii::outradius(&square, &triangle)?;
    println!("R(square; triangle) = {}", big_r.value);

    let q = square.scale(&nefcalc::rational::ratio(5, 2))?.translate(&[int(1), int(-3)]);
    if let Some((lambda, x)) = radii::homothety_witness(&square, &q)? {
        println!("Q = {lambda} P + ({}, {})", x[0], x[1]);
    }
    Ok(())
}
