//! Seeded random rational polytopes for property campaigns.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::linalg::Point;
use crate::polytope::Polytope;
use crate::rational::{ratio, Rational};

pub const MAX_DIM: usize = 4;

/// Deterministic source of random polytopes.
#[derive(Debug, Clone)]
pub struct Generator {
    rng: ChaCha8Rng,
    /// Coordinates lie in `[-coord_range, coord_range]`.
    pub coord_range: i64,
    /// Largest coordinate denominator.
    pub max_denominator: i64,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), coord_range: 4, max_denominator: 3 }
    }

    fn coordinate(&mut self) -> Rational {
        let den = self.rng.gen_range(1..=self.max_denominator);
        let span = self.coord_range * den;
        ratio(self.rng.gen_range(-span..=span), den)
    }

    pub fn point(&mut self, d: usize) -> Point {
        (0..d).map(|_| self.coordinate()).collect()
    }

    /// Rational in `(0, max]` with denominator at most `max_denominator`.
    pub fn positive_rational(&mut self, max: i64) -> Rational {
        let den = self.rng.gen_range(1..=self.max_denominator);
        ratio(self.rng.gen_range(1..=max * den), den)
    }

    /// Full-dimensional hull of at most `max_vertices` random points, resampled
    /// until full-dimensional.
    pub fn polytope(&mut self, d: usize, max_vertices: usize) -> Result<Polytope> {
        if !(1..=MAX_DIM).contains(&d) {
            return invalid(format!("dimension must be in [1, {MAX_DIM}], got {d}"));
        }
        if max_vertices < d + 1 {
            return invalid(format!("a full-dimensional polytope in dimension {d} needs at least {} vertices", d + 1));
        }
        loop {
            let n = self.rng.gen_range(d + 1..=max_vertices);
            let points: Vec<Point> = (0..n).map(|_| self.point(d)).collect();
            let p = Polytope::hull(&points, d)?;
            if p.is_full_dimensional() {
                return Ok(p);
            }
        }
    }

    pub fn pair(&mut self, d: usize, max_vertices: usize) -> Result<(Polytope, Polytope)> {
        Ok((self.polytope(d, max_vertices)?, self.polytope(d, max_vertices)?))
    }

    /// `(P, Q, lambda, x)` with `Q = lambda P + x`.
    pub fn homothetic_pair(&mut self, d: usize, max_vertices: usize) -> Result<(Polytope, Polytope, Rational, Point)> {
        let p = self.polytope(d, max_vertices)?;
        let lambda = self.positive_rational(3);
        let x = self.point(d);
        let q = p.scale(&lambda)?.translate(&x);
        Ok((p, q, lambda, x))
    }
}

/// `count` polytopes from one seed.
pub fn generate(seed: u64, d: usize, max_vertices: usize, count: usize) -> Result<Vec<Polytope>> {
    let mut g = Generator::new(seed);
    (0..count).map(|_| g.polytope(d, max_vertices)).collect()
}
