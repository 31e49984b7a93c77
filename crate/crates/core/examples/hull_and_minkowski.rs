//! Convex hulls, Minkowski sums and support functions with exact rationals.

use nefcalc::rational::{int, ratio};
use nefcalc::Polytope;

fn main() -> nefcalc::Result<()> {
    let points: Vec<Vec<_>> = [(0, 0), (4, 0), (0, 4), (1, 1), (2, 0)]
        .iter()
        .map(|&(x, y)| vec![int(x), int(y)])
        .collect();
    let triangle = Polytope::hull(&points, 2)?;
    println!("vertices: {:?}", triangle.vertices().iter().map(|v| format!("({}, {})", v[0], v[1])).collect::<Vec<_>>());
    for f in triangle.facets() {
        println!("facet: {:?} . x <= {}", f.normal, f.offset);
    }

    let collinear = Polytope::from_ints(&[&[0, 0], &[1, 0], &[2, 0]])?;
    println!("collinear input: affine dimension {}", collinear.affine_dim());

    let square = Polytope::unit_cube(2);
    let sum = square.minkowski_sum(&triangle)?;
    println!("square + triangle has {} vertices", sum.vertices().len());
    let u = [int(1), ratio(1, 2)];
    println!("h_(P+Q)(u) = {} = {} + {}", sum.support(&u), square.support(&u), triangle.support(&u));
    println!("{}", sum.to_json());
    Ok(())
}
