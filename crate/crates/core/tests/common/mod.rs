//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's hull or volume code.

#![allow(dead_code)]

use nefcalc::Rational;
use num_traits::{Signed, Zero};

pub type P2 = (Rational, Rational);

fn cross(o: &P2, a: &P2, b: &P2) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Counter-clockwise convex hull by the monotone chain.
pub fn hull2(points: &[P2]) -> Vec<P2> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Shoelace area of the convex hull of `points`.
pub fn area(points: &[P2]) -> Rational {
    let h = hull2(points);
    let mut twice = Rational::zero();
    for i in 0..h.len() {
        let (a, b) = (&h[i], &h[(i + 1) % h.len()]);
        twice += &a.0 * &b.1 - &b.0 * &a.1;
    }
    twice.abs() / Rational::from_integer(2.into())
}

pub fn sum2(p: &[P2], q: &[P2]) -> Vec<P2> {
    p.iter().flat_map(|a| q.iter().map(move |b| (&a.0 + &b.0, &a.1 + &b.1))).collect()
}

pub fn to_p2(vertices: &[Vec<Rational>]) -> Vec<P2> {
    vertices.iter().map(|v| (v[0].clone(), v[1].clone())).collect()
}

/// `(s_0, s_1, s_2)` for a polygon pair: `s_2 = 2 area(P)`, `s_0 = 2 area(Q)`,
/// `s_1 = area(P + Q) - area(P) - area(Q)`.
pub fn polygon_sequence(p: &[P2], q: &[P2]) -> [Rational; 3] {
    let two = Rational::from_integer(2.into());
    let (ap, aq) = (area(p), area(q));
    let s1 = area(&sum2(p, q)) - &ap - &aq;
    [aq * &two, s1, ap * &two]
}

pub fn ri(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn pts(v: &[(i64, i64)]) -> Vec<P2> {
    v.iter().map(|&(a, b)| (ri(a), ri(b))).collect()
}
