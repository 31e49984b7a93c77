//! Bounded convex rational polytopes in dual V/H representation.
//!
//! A full-dimensional polytope stands in for a nef and big class, a
//! lower-dimensional one for a nef class that is not big.

mod hull;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use hull::Facet;

use crate::error::{invalid, Error, Result};
use crate::linalg::{self, Point};
use crate::rational::{self, Rational};

#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    /// Simplices (vertex indices) triangulating the boundary; empty when degenerate.
    boundary: Vec<Vec<usize>>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        // vertices are kept sorted, so this is set equality
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    /// Convex hull of a finite point set in `Q^dim`.
    pub fn hull(points: &[Point], dim: usize) -> Result<Self> {
        if dim == 0 {
            return invalid("ambient dimension must be at least 1");
        }
        if points.is_empty() {
            return invalid("convex hull of an empty point set");
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return invalid(format!("point of length {} in dimension {dim}", p.len()));
        }
        let h = hull::compute(points, dim);
        Ok(Polytope {
            dim,
            affine_dim: h.affine_dim,
            vertices: h.vertices,
            facets: h.facets,
            boundary: h.boundary,
        })
    }

    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        let pts: Vec<Point> = points.iter().map(|p| p.iter().map(|&x| rational::int(x)).collect()).collect();
        Self::hull(&pts, dim)
    }

    /// `[0,1]^dim`.
    pub fn unit_cube(dim: usize) -> Self {
        let pts: Vec<Point> = (0..1usize << dim)
            .map(|mask| (0..dim).map(|i| rational::int(((mask >> i) & 1) as i64)).collect())
            .collect();
        Self::hull(&pts, dim).expect("cube is well formed")
    }

    /// `conv{0, e_1, ..., e_dim}`.
    pub fn standard_simplex(dim: usize) -> Self {
        let mut pts = vec![vec![Rational::zero(); dim]];
        for i in 0..dim {
            let mut e = vec![Rational::zero(); dim];
            e[i] = Rational::one();
            pts.push(e);
        }
        Self::hull(&pts, dim).expect("simplex is well formed")
    }

    pub fn point(p: Point) -> Self {
        let dim = p.len();
        Polytope { dim, affine_dim: 0, vertices: vec![p], facets: vec![], boundary: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// Minimal vertex list in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Irredundant facet inequalities `<x, normal> <= offset`; empty when degenerate.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertex_centroid(&self) -> Point {
        let n = Rational::from_integer(BigInt::from(self.vertices.len()));
        (0..self.dim)
            .map(|c| self.vertices.iter().map(|v| v[c].clone()).sum::<Rational>() / &n)
            .collect()
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return invalid(format!("Minkowski sum of dimensions {} and {}", self.dim, other.dim));
        }
        if self == other {
            return self.scale(&rational::int(2));
        }
        if other.vertices.len() == 1 {
            return Ok(self.translate(&other.vertices[0]));
        }
        if self.vertices.len() == 1 {
            return Ok(other.translate(&self.vertices[0]));
        }
        let sums: Vec<Point> = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| linalg::add(p, q)))
            .collect();
        Polytope::hull(&sums, self.dim)
    }

    /// Dilation by `t >= 0` about the origin; `t = 0` collapses to the origin.
    pub fn scale(&self, t: &Rational) -> Result<Polytope> {
        if t.is_negative() {
            return invalid(format!("negative scale factor {}", rational::format(t)));
        }
        if t.is_zero() {
            return Ok(Polytope::point(vec![Rational::zero(); self.dim]));
        }
        Ok(Polytope {
            dim: self.dim,
            affine_dim: self.affine_dim,
            vertices: self.vertices.iter().map(|v| linalg::scale(v, t)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset * t })
                .collect(),
            boundary: self.boundary.clone(),
        })
    }

    pub fn translate(&self, x: &[Rational]) -> Polytope {
        Polytope {
            dim: self.dim,
            affine_dim: self.affine_dim,
            vertices: self.vertices.iter().map(|v| linalg::add(v, x)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset + linalg::dot_int(&f.normal, x) })
                .collect(),
            boundary: self.boundary.clone(),
        }
    }

    /// Support function `max <v, u>` over the vertices.
    pub fn support(&self, u: &[Rational]) -> Rational {
        self.vertices
            .iter()
            .map(|v| linalg::dot(v, u))
            .max()
            .expect("polytopes are nonempty")
    }

    pub fn support_int(&self, u: &[BigInt]) -> Rational {
        self.vertices
            .iter()
            .map(|v| linalg::dot_int(u, v))
            .max()
            .expect("polytopes are nonempty")
    }

    /// Outward primitive facet normals, sorted and deduplicated.
    pub fn normal_directions(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_full_dimensional() {
            return Err(Error::DegenerateInput(format!(
                "affine hull has dimension {} < {}",
                self.affine_dim, self.dim
            )));
        }
        let mut normals: Vec<Vec<BigInt>> = self.facets.iter().map(|f| f.normal.clone()).collect();
        normals.sort();
        normals.dedup();
        Ok(normals)
    }

    pub fn contains_point(&self, p: &[Rational]) -> bool {
        if self.is_full_dimensional() {
            return hull::satisfies(&self.facets, p);
        }
        crate::lp::in_convex_hull(&self.vertices, p)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains_point(v))
    }

    /// Every vertex satisfies every facet, and each facet carries at least `dim` vertices.
    pub fn check_representation(&self) -> bool {
        if !self.is_full_dimensional() {
            return self.facets.is_empty();
        }
        self.vertices.iter().all(|v| hull::satisfies(&self.facets, v))
            && self.facets.iter().all(|f| {
                let on: Vec<Point> = self
                    .vertices
                    .iter()
                    .filter(|v| linalg::dot_int(&f.normal, v) == f.offset)
                    .cloned()
                    .collect();
                on.len() >= self.dim && {
                    let dirs: Vec<Point> = on[1..].iter().map(|v| linalg::sub(v, &on[0])).collect();
                    linalg::rank(&dirs) == self.dim - 1
                }
            })
    }

    pub(crate) fn simplex_volume_sum(&self) -> Rational {
        let c = self.vertex_centroid();
        self.boundary
            .iter()
            .map(|s| {
                let face: Vec<&Point> = s.iter().map(|&i| &self.vertices[i]).collect();
                hull::signed_simplex_volume(&c, &face).abs()
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolytopeFile::from(self)).expect("polytope serializes")
    }

    pub fn from_json(s: &str) -> Result<Polytope> {
        let f: PolytopeFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        f.into_polytope()
    }
}

/// On-disk polytope: `{"dim": 2, "vertices": [["0/1","0/1"], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl From<&Polytope> for PolytopeFile {
    fn from(p: &Polytope) -> Self {
        PolytopeFile {
            dim: p.dim,
            vertices: p.vertices.iter().map(|v| v.iter().map(rational::format).collect()).collect(),
        }
    }
}

impl PolytopeFile {
    pub fn into_polytope(self) -> Result<Polytope> {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|s| rational::parse(s)).collect::<Result<Point>>())
            .collect::<Result<_>>()?;
        Polytope::hull(&pts, self.dim)
    }
}
