//! Mixed volumes, the volume polynomial and the intersection sequence of a pair.

use nefcalc::mixedvol::{self, sequence_by_interpolation, sequence_by_polarization};
use nefcalc::Polytope;

fn main() -> nefcalc::Result<()> {
    let cube = Polytope::unit_cube(3);
    let simplex = Polytope::standard_simplex(3);
    let octahedron = Polytope::from_ints(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])?;

    println!("vol(octahedron) = {}", mixedvol::volume(&octahedron));
    println!("V(cube, simplex, octahedron) = {}", mixedvol::mixed_volume(&[cube.clone(), simplex.clone(), octahedron])?);

    let poly = mixedvol::volume_polynomial(&cube, &simplex)?;
    println!("vol(cube + t simplex) coefficients: {}", poly.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    let a = sequence_by_polarization(&cube, &simplex)?;
    let b = sequence_by_interpolation(&cube, &simplex)?;
    assert_eq!(a.values(), b.values());
    println!("s = {}  ({} and {} agree)", a.to_json(), a.provenance().unwrap(), b.provenance().unwrap());
    Ok(())
}
