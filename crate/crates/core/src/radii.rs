//! Exact LP oracle for the slope `s(P, Q) = max { t : tQ + x ⊆ P }`, the
//! inradius `r(P; Q) = s(P, Q)` and the outradius `R(P; Q) = 1 / s(Q, P)`.
//!
//! Containment `tQ + x ⊆ P` is tested on the facets of `P` only:
//! `t h_Q(u) + <x, u> <= h_P(u)` for every facet normal `u`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Point};
use crate::lp::{LinearProgram, Outcome, Relation};
use crate::polytope::Polytope;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiiResult {
    /// Optimal dilation factor.
    pub t_star: Rational,
    /// Lexicographically smallest translation achieving `t_star`.
    pub translation: Point,
    /// Facets of the outer body that are tight at the optimum.
    pub active_facets: Vec<usize>,
    /// Nonnegative facet multipliers `y` with `sum y_j u_j = 0`,
    /// `sum y_j h_Q(u_j) >= 1` and `sum y_j h_P(u_j) = t_star`.
    pub dual_certificate: Vec<Rational>,
}

impl RadiiResult {
    /// Re-checks primal feasibility and the dual optimality certificate exactly.
    pub fn verify(&self, outer: &Polytope, inner: &Polytope) -> bool {
        let placed = match inner.scale(&self.t_star) {
            Ok(p) => p.translate(&self.translation),
            Err(_) => return false,
        };
        if !outer.contains(&placed) {
            return false;
        }
        let facets = outer.facets();
        if self.dual_certificate.len() != facets.len() || self.dual_certificate.iter().any(Signed::is_negative) {
            return false;
        }
        let d = outer.dim();
        let mut balance = vec![Rational::zero(); d];
        let mut inner_weight = Rational::zero();
        let mut value = Rational::zero();
        for (y, f) in self.dual_certificate.iter().zip(facets) {
            if y.is_zero() {
                continue;
            }
            for (b, u) in balance.iter_mut().zip(&f.normal) {
                *b += y * Rational::from_integer(u.clone());
            }
            inner_weight += y * inner.support_int(&f.normal);
            value += y * &f.offset;
        }
        linalg::is_zero_vec(&balance) && inner_weight >= Rational::from_integer(1.into()) && value == self.t_star
    }
}

fn require_full(p: &Polytope, which: &str) -> Result<()> {
    if !p.is_full_dimensional() {
        return Err(Error::DegenerateInput(format!(
            "{which} body has affine dimension {} < {}",
            p.affine_dim(),
            p.dim()
        )));
    }
    Ok(())
}

/// Containment LP rows `(h_inner(u), u) . (t, x) <= h_outer(u)` over the given normals.
fn containment_lp(outer_rows: &[(Vec<Rational>, Rational)], inner: &Polytope, objective: Vec<Rational>) -> LinearProgram {
    let d = inner.dim();
    let mut lp = LinearProgram::new(objective);
    for k in 1..=d {
        lp.free[k] = true;
    }
    for (u, b) in outer_rows {
        let mut row = Vec::with_capacity(d + 1);
        row.push(inner.support(u));
        row.extend(u.iter().cloned());
        lp.constrain(row, Relation::Le, b.clone());
    }
    lp
}

fn facet_rows(outer: &Polytope) -> Vec<(Vec<Rational>, Rational)> {
    outer
        .facets()
        .iter()
        .map(|f| (f.normal.iter().map(|x| Rational::from_integer(x.clone())).collect(), f.offset.clone()))
        .collect()
}

/// Largest `t` with `tQ + x ⊆ P` for some `x`, with witness and dual certificate.
pub fn inradius(p: &Polytope, q: &Polytope) -> Result<RadiiResult> {
    if p.dim() != q.dim() {
        return Err(Error::InvalidInput(format!("pair of dimensions {} and {}", p.dim(), q.dim())));
    }
    require_full(p, "outer")?;
    require_full(q, "inner")?;
    let d = p.dim();
    let rows = facet_rows(p);

    let mut objective = vec![Rational::zero(); d + 1];
    objective[0] = Rational::from_integer(1.into());
    let first = match containment_lp(&rows, q, objective).solve() {
        Outcome::Optimal(s) => s,
        Outcome::Unbounded => return Err(Error::Unbounded("containment LP is unbounded".into())),
        Outcome::Infeasible => return Err(Error::DegenerateInput("containment LP is infeasible".into())),
    };
    let t_star = first.value.clone();
    let dual_certificate = first.duals.clone();

    // lexicographic minimum of the translation among optimal solutions
    let mut fixed: Vec<Rational> = vec![t_star.clone()];
    for k in 1..=d {
        let mut objective = vec![Rational::zero(); d + 1];
        objective[k] = -Rational::from_integer(1.into());
        let mut lp = containment_lp(&rows, q, objective);
        for (j, v) in fixed.iter().enumerate() {
            let mut e = vec![Rational::zero(); d + 1];
            e[j] = Rational::from_integer(1.into());
            lp.constrain(e, Relation::Eq, v.clone());
        }
        match lp.solve() {
            Outcome::Optimal(s) => fixed.push(s.x[k].clone()),
            _ => unreachable!("the optimal face is nonempty and bounded"),
        }
    }
    let translation: Point = fixed[1..].to_vec();
    let active_facets = rows
        .iter()
        .enumerate()
        .filter(|(_, (u, b))| &t_star * q.support(u) + linalg::dot(u, &translation) == *b)
        .map(|(j, _)| j)
        .collect();
    Ok(RadiiResult { t_star, translation, active_facets, dual_certificate })
}

/// Alias of [`inradius`]`(P, Q).t_star`.
pub fn slope(p: &Polytope, q: &Polytope) -> Result<Rational> {
    Ok(inradius(p, q)?.t_star)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutradiusResult {
    /// `R(P; Q) = 1 / s(Q, P)`.
    pub value: Rational,
    /// The inradius problem `tP + x ⊆ Q` whose reciprocal gives `value`.
    pub reciprocal_of: RadiiResult,
}

pub fn outradius(p: &Polytope, q: &Polytope) -> Result<OutradiusResult> {
    let inner = inradius(q, p)?;
    if inner.t_star.is_zero() {
        return Err(Error::Unbounded("no dilate of the first body fits in the second".into()));
    }
    Ok(OutradiusResult { value: inner.t_star.recip(), reciprocal_of: inner })
}

/// `Some((lambda, x))` with `Q = lambda P + x` when the pair is homothetic.
pub fn homothety_witness(p: &Polytope, q: &Polytope) -> Result<Option<(Rational, Point)>> {
    let fit = inradius(q, p)?;
    let image = p.scale(&fit.t_star)?.translate(&fit.translation);
    Ok((image == *q).then_some((fit.t_star, fit.translation)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn square() -> Polytope {
        Polytope::unit_cube(2)
    }

    fn triangle() -> Polytope {
        Polytope::standard_simplex(2)
    }

    #[test]
    fn inradius_examples() {
        let sq = square();
        let r = inradius(&sq, &sq.scale(&int(2)).unwrap()).unwrap();
        assert_eq!(r.t_star, ratio(1, 2));
        assert_eq!(r.translation, vec![int(0), int(0)]);
        assert!(r.verify(&sq, &sq.scale(&int(2)).unwrap()));

        let r = inradius(&sq, &triangle()).unwrap();
        assert_eq!(r.t_star, int(1));
        assert_eq!(r.translation, vec![int(0), int(0)]);
        assert!(r.verify(&sq, &triangle()));

        assert_eq!(inradius(&sq, &sq).unwrap().t_star, int(1));
    }

    #[test]
    fn outradius_examples() {
        let sq = square();
        assert_eq!(outradius(&sq, &sq.scale(&int(2)).unwrap()).unwrap().value, ratio(1, 2));
        let r = outradius(&sq, &triangle()).unwrap();
        assert_eq!(r.value, int(2));
        assert_eq!(r.reciprocal_of.t_star, ratio(1, 2));
        assert_eq!(outradius(&sq, &sq).unwrap().value, int(1));
    }

    #[test]
    fn slope_homogeneity() {
        let sq = square();
        let two = sq.scale(&int(2)).unwrap();
        assert_eq!(slope(&sq, &sq).unwrap(), int(1));
        assert_eq!(slope(&sq, &two).unwrap(), ratio(1, 2));
        assert_eq!(slope(&two, &sq).unwrap(), int(2));
        assert_eq!(slope(&sq, &triangle()).unwrap(), int(1));
    }

    #[test]
    fn lexicographic_witness_on_a_degenerate_optimum() {
        // a unit segment-like thin box slides freely along x inside [0,3]x[0,1]
        let outer = Polytope::from_ints(&[&[0, 0], &[3, 0], &[0, 1], &[3, 1]]).unwrap();
        let inner = Polytope::from_ints(&[&[5, 5], &[6, 5], &[5, 6], &[6, 6]]).unwrap();
        let r = inradius(&outer, &inner).unwrap();
        assert_eq!(r.t_star, int(1));
        assert_eq!(r.translation, vec![int(-5), int(-5)]);
        assert!(r.verify(&outer, &inner));
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let seg = Polytope::from_ints(&[&[0, 0], &[1, 0]]).unwrap();
        assert!(matches!(inradius(&square(), &seg), Err(Error::DegenerateInput(_))));
        assert!(matches!(inradius(&seg, &square()), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn homothety_detection() {
        let sq = square();
        let q = sq.scale(&ratio(3, 2)).unwrap().translate(&[int(-1), ratio(2, 7)]);
        let (lambda, x) = homothety_witness(&sq, &q).unwrap().unwrap();
        assert_eq!(lambda, ratio(3, 2));
        assert_eq!(x, vec![int(-1), ratio(2, 7)]);
        assert!(homothety_witness(&sq, &triangle()).unwrap().is_none());
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let sq = square();
        let t = triangle();
        let mut r = inradius(&sq, &t).unwrap();
        r.t_star = ratio(11, 10);
        assert!(!r.verify(&sq, &t));
    }
}
