//! Exact beneath-beyond convex hull.
//!
//! The boundary is kept as a simplicial complex. A point strictly above a facet's
//! hyperplane sees it; coplanar points never do, so every new simplex is
//! nondegenerate and coplanar simplices are merged into true facets at the end.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::linalg::{self, Point};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    /// Primitive outward integer normal.
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

pub(crate) struct HullData {
    pub affine_dim: usize,
    pub vertices: Vec<Point>,
    pub facets: Vec<Facet>,
    pub boundary: Vec<Vec<usize>>,
}

struct Simplex {
    verts: Vec<usize>,
    normal: Vec<BigInt>,
    offset: Rational,
}

pub(crate) fn compute(points: &[Point], dim: usize) -> HullData {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();

    let (affine_dim, basis) = affine_basis(&pts);
    if affine_dim < dim {
        return degenerate(pts, affine_dim, &basis);
    }
    if dim == 1 {
        let lo = pts.first().unwrap().clone();
        let hi = pts.last().unwrap().clone();
        let facets = vec![
            Facet { normal: vec![BigInt::from(-1)], offset: -lo[0].clone() },
            Facet { normal: vec![BigInt::from(1)], offset: hi[0].clone() },
        ];
        return HullData {
            affine_dim: 1,
            vertices: vec![lo, hi],
            facets,
            boundary: vec![vec![0], vec![1]],
        };
    }

    let first = full_dim(&pts, dim);
    let used: Vec<usize> = {
        let mut u: Vec<usize> = first.iter().flat_map(|s| s.verts.iter().copied()).collect();
        u.sort_unstable();
        u.dedup();
        u
    };
    let facets = merge_facets(&first);
    let is_vertex = |p: &Point| {
        let normals: Vec<Vec<Rational>> = facets
            .iter()
            .filter(|f| linalg::dot_int(&f.normal, p) == f.offset)
            .map(|f| f.normal.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        linalg::rank(&normals) == dim
    };
    let vertices: Vec<Point> = used.iter().map(|&i| pts[i].clone()).filter(|p| is_vertex(p)).collect();

    // Re-triangulate over the true vertices when coplanar points crept into the complex.
    let simplices = if vertices.len() == used.len() {
        let remap: HashMap<usize, usize> = used.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        first.iter().map(|s| s.verts.iter().map(|i| remap[i]).collect()).collect()
    } else {
        full_dim(&vertices, dim).into_iter().map(|s| s.verts).collect()
    };

    HullData { affine_dim: dim, vertices, facets, boundary: simplices }
}

/// Affine dimension and a basis of direction vectors.
fn affine_basis(pts: &[Point]) -> (usize, Vec<Point>) {
    let origin = &pts[0];
    let mut basis: Vec<Point> = Vec::new();
    for p in &pts[1..] {
        let v = linalg::sub(p, origin);
        let mut trial = basis.clone();
        trial.push(v.clone());
        if linalg::rank(&trial) > basis.len() {
            basis.push(v);
        }
    }
    (basis.len(), basis)
}

fn degenerate(pts: Vec<Point>, k: usize, basis: &[Point]) -> HullData {
    if k == 0 {
        return HullData { affine_dim: 0, vertices: vec![pts[0].clone()], facets: vec![], boundary: vec![] };
    }
    // project onto coordinates that are injective on the direction space
    let mut m = basis.to_vec();
    let coords = linalg::rref(&mut m);
    let projected: Vec<Point> = pts.iter().map(|p| coords.iter().map(|&c| p[c].clone()).collect()).collect();
    let sub = compute(&projected, k);
    let vertices: Vec<Point> = sub
        .vertices
        .iter()
        .map(|v| pts[projected.iter().position(|q| q == v).unwrap()].clone())
        .collect();
    let mut vertices = vertices;
    vertices.sort();
    HullData { affine_dim: k, vertices, facets: vec![], boundary: vec![] }
}

fn hyperplane(pts: &[Point], verts: &[usize], interior: &Point) -> (Vec<BigInt>, Rational) {
    let base = &pts[verts[0]];
    let rows: Vec<Point> = verts[1..].iter().map(|&i| linalg::sub(&pts[i], base)).collect();
    let ns = linalg::nullspace(&rows, base.len());
    debug_assert_eq!(ns.len(), 1, "facet simplex must span a hyperplane");
    let mut normal = linalg::primitive(&ns[0]);
    let mut offset = linalg::dot_int(&normal, base);
    if linalg::dot_int(&normal, interior) > offset {
        normal.iter_mut().for_each(|x| *x = -x.clone());
        offset = -offset;
    }
    (normal, offset)
}

fn full_dim(pts: &[Point], dim: usize) -> Vec<Simplex> {
    // initial simplex from greedily independent points
    let mut init = vec![0usize];
    let mut dirs: Vec<Point> = Vec::new();
    for i in 1..pts.len() {
        if init.len() == dim + 1 {
            break;
        }
        let v = linalg::sub(&pts[i], &pts[0]);
        let mut trial = dirs.clone();
        trial.push(v.clone());
        if linalg::rank(&trial) > dirs.len() {
            dirs.push(v);
            init.push(i);
        }
    }
    let n = Rational::from_integer(BigInt::from(dim + 1));
    let interior: Point = (0..dim)
        .map(|c| init.iter().map(|&i| pts[i][c].clone()).sum::<Rational>() / &n)
        .collect();

    let make = |verts: Vec<usize>| {
        let (normal, offset) = hyperplane(pts, &verts, &interior);
        Simplex { verts, normal, offset }
    };
    let mut simplices: Vec<Simplex> = (0..=dim)
        .map(|skip| {
            let verts: Vec<usize> = init.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
            make(verts)
        })
        .collect();

    for (p_idx, p) in pts.iter().enumerate() {
        if init.contains(&p_idx) {
            continue;
        }
        let visible: Vec<bool> = simplices.iter().map(|s| linalg::dot_int(&s.normal, p) > s.offset).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (s, _) in simplices.iter().zip(&visible).filter(|(_, &v)| v) {
            for skip in 0..s.verts.len() {
                let mut r: Vec<usize> = s.verts.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
                r.sort_unstable();
                *ridges.entry(r).or_default() += 1;
            }
        }
        let mut kept: Vec<Simplex> = simplices
            .into_iter()
            .zip(visible)
            .filter(|(_, v)| !v)
            .map(|(s, _)| s)
            .collect();
        for (ridge, count) in ridges {
            if count == 1 {
                let mut verts = ridge;
                verts.push(p_idx);
                kept.push(make(verts));
            }
        }
        simplices = kept;
    }
    simplices
}

fn merge_facets(simplices: &[Simplex]) -> Vec<Facet> {
    let mut facets: Vec<Facet> = simplices
        .iter()
        .map(|s| Facet { normal: s.normal.clone(), offset: s.offset.clone() })
        .collect();
    facets.sort();
    facets.dedup();
    facets
}

/// `true` when `p` satisfies every facet inequality.
pub(crate) fn satisfies(facets: &[Facet], p: &[Rational]) -> bool {
    facets.iter().all(|f| linalg::dot_int(&f.normal, p) <= f.offset)
}

pub(crate) fn signed_simplex_volume(apex: &Point, face: &[&Point]) -> Rational {
    let rows: Vec<Point> = face.iter().map(|v| linalg::sub(v, apex)).collect();
    linalg::det(&rows)
}
