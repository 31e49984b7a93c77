//! Exact volumes, mixed volumes and intersection sequences of polytope pairs.
//!
//! Normalization: `s_i = d! V(P[i], Q[d-i])`, so `s_d = d! vol(P)` plays the
//! role of the top self-intersection of the class carried by `P`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::polytope::Polytope;
use crate::rational::{self, Rational};

/// Which route produced the entries of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Polarization,
    Interpolation,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::Polarization => "polarization",
            Algorithm::Interpolation => "interpolation",
        })
    }
}

/// `s_0, ..., s_d` with `s_i = (alpha^i . beta^(d-i))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefSequence {
    s: Vec<Rational>,
    realized: bool,
    provenance: Option<Algorithm>,
}

#[derive(Serialize, Deserialize)]
struct SequenceFile {
    d: usize,
    #[serde(with = "rational::serde_vec")]
    s: Vec<Rational>,
    #[serde(default)]
    realized: bool,
}

impl NefSequence {
    /// A user-supplied sequence; not guaranteed to come from any pair of classes.
    pub fn free(s: Vec<Rational>) -> Result<Self> {
        if s.len() < 2 {
            return invalid("a sequence needs degree d >= 1, i.e. at least two entries");
        }
        if s.iter().any(Signed::is_negative) {
            return invalid("intersection numbers of nef classes are nonnegative");
        }
        Ok(NefSequence { s, realized: false, provenance: None })
    }

    pub fn from_ints(s: &[i64]) -> Result<Self> {
        Self::free(s.iter().map(|&x| rational::int(x)).collect())
    }

    pub(crate) fn realized(s: Vec<Rational>, provenance: Algorithm) -> Self {
        NefSequence { s, realized: true, provenance: Some(provenance) }
    }

    pub fn degree(&self) -> usize {
        self.s.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.s
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.s[i]
    }

    pub fn is_realized(&self) -> bool {
        self.realized
    }

    pub fn provenance(&self) -> Option<Algorithm> {
        self.provenance
    }

    /// `(alpha^d) > 0`.
    pub fn alpha_big(&self) -> bool {
        self.s[self.degree()].is_positive()
    }

    /// `(beta^d) > 0`.
    pub fn beta_big(&self) -> bool {
        self.s[0].is_positive()
    }

    pub(crate) fn require_big(&self) -> Result<()> {
        if !self.beta_big() || !self.alpha_big() {
            return Err(Error::NotBig(format!(
                "need s_0 > 0 and s_d > 0, got s_0 = {} and s_d = {}",
                rational::format(&self.s[0]),
                rational::format(&self.s[self.degree()])
            )));
        }
        Ok(())
    }

    /// The sequence of the swapped pair `(beta, alpha)`.
    pub fn reversed(&self) -> NefSequence {
        let mut s = self.s.clone();
        s.reverse();
        NefSequence { s, realized: self.realized, provenance: self.provenance }
    }

    /// `((alpha + beta)^d) = sum C(d,i) s_i`.
    pub fn sum_self_intersection(&self) -> Rational {
        let d = self.degree();
        self.s
            .iter()
            .enumerate()
            .map(|(i, s)| s * Rational::from_integer(rational::binomial(d, i)))
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SequenceFile { d: self.degree(), s: self.s.clone(), realized: self.realized })
            .expect("sequence serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: SequenceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if f.s.len() != f.d + 1 {
            return Err(Error::Parse(format!("degree {} needs {} entries, got {}", f.d, f.d + 1, f.s.len())));
        }
        let mut seq = NefSequence::free(f.s)?;
        seq.realized = f.realized;
        Ok(seq)
    }
}

/// Exact Euclidean volume; zero for lower-dimensional polytopes.
pub fn volume(p: &Polytope) -> Rational {
    if !p.is_full_dimensional() {
        return Rational::zero();
    }
    p.simplex_volume_sum() / Rational::from_integer(rational::factorial(p.dim()))
}

/// `V(P_1, ..., P_d)`, normalized so that `V(P, ..., P) = vol(P)`.
pub fn mixed_volume(polytopes: &[Polytope]) -> Result<Rational> {
    let Some(first) = polytopes.first() else {
        return invalid("mixed volume of an empty list");
    };
    let d = first.dim();
    if polytopes.len() != d {
        return invalid(format!("mixed volume in dimension {d} takes {d} bodies, got {}", polytopes.len()));
    }
    if polytopes.iter().any(|p| p.dim() != d) {
        return invalid("mixed volume of bodies in different dimensions");
    }
    let mut distinct: Vec<&Polytope> = Vec::new();
    let mut mults: Vec<usize> = Vec::new();
    for p in polytopes {
        match distinct.iter().position(|q| *q == p) {
            Some(k) => mults[k] += 1,
            None => {
                distinct.push(p);
                mults.push(1);
            }
        }
    }
    let raw = polarize(d, &mults, |counts| combination_volume(&distinct, counts))?;
    Ok(raw / Rational::from_integer(rational::factorial(d)))
}

/// `d! V(P_1[m_1], ..., P_k[m_k])` by inclusion-exclusion over count vectors.
fn polarize(
    d: usize,
    mults: &[usize],
    mut vol_of: impl FnMut(&[usize]) -> Result<Rational>,
) -> Result<Rational> {
    let mut counts = vec![0usize; mults.len()];
    let mut acc = Rational::zero();
    loop {
        // odometer increment
        let mut k = 0;
        while k < counts.len() && counts[k] == mults[k] {
            counts[k] = 0;
            k += 1;
        }
        if k == counts.len() {
            break;
        }
        counts[k] += 1;
        let total: usize = counts.iter().sum();
        let weight: BigInt = counts.iter().zip(mults).map(|(&c, &m)| rational::binomial(m, c)).product();
        let term = vol_of(&counts)? * Rational::from_integer(weight);
        if (d - total).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn combination_volume(bodies: &[&Polytope], counts: &[usize]) -> Result<Rational> {
    let mut sum: Option<Polytope> = None;
    for (p, &c) in bodies.iter().zip(counts) {
        if c == 0 {
            continue;
        }
        let scaled = p.scale(&rational::int(c as i64))?;
        sum = Some(match sum {
            None => scaled,
            Some(s) => s.minkowski_sum(&scaled)?,
        });
    }
    Ok(sum.map_or_else(Rational::zero, |s| volume(&s)))
}

fn check_pair(p: &Polytope, q: &Polytope) -> Result<usize> {
    if p.dim() != q.dim() {
        return invalid(format!("pair of dimensions {} and {}", p.dim(), q.dim()));
    }
    Ok(p.dim())
}

/// Largest degree for which the polarization route is the default.
pub const POLARIZATION_MAX_DEGREE: usize = 4;

/// `s_i = d! V(P[i], Q[d-i])` for `i = 0..=d`.
pub fn intersection_sequence(p: &Polytope, q: &Polytope) -> Result<NefSequence> {
    let d = check_pair(p, q)?;
    if d > POLARIZATION_MAX_DEGREE {
        return sequence_by_interpolation(p, q);
    }
    sequence_by_polarization(p, q)
}

pub fn sequence_by_polarization(p: &Polytope, q: &Polytope) -> Result<NefSequence> {
    let d = check_pair(p, q)?;
    let mut cache: HashMap<(usize, usize), Rational> = HashMap::new();
    let bodies = [p, q];
    let s = (0..=d)
        .map(|i| {
            polarize(d, &[i, d - i], |c| {
                if let Some(v) = cache.get(&(c[0], c[1])) {
                    return Ok(v.clone());
                }
                let v = combination_volume(&bodies, c)?;
                cache.insert((c[0], c[1]), v.clone());
                Ok(v)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NefSequence::realized(s, Algorithm::Polarization))
}

/// Reads the sequence off the coefficients of `t -> vol(P + tQ)`.
pub fn sequence_by_interpolation(p: &Polytope, q: &Polytope) -> Result<NefSequence> {
    let d = check_pair(p, q)?;
    let coeffs = volume_polynomial(p, q)?;
    let fact = Rational::from_integer(rational::factorial(d));
    // c_i = C(d,i) V(P[d-i], Q[i]) = C(d,i) s_{d-i} / d!
    let mut s = vec![Rational::zero(); d + 1];
    for (i, c) in coeffs.iter().enumerate() {
        s[d - i] = c * &fact / Rational::from_integer(rational::binomial(d, i));
    }
    Ok(NefSequence::realized(s, Algorithm::Interpolation))
}

/// Coefficients `c_0..c_d` of `vol(P + tQ) = sum c_i t^i`, by exact evaluation at
/// `t = 0, ..., d` and Vandermonde interpolation.
pub fn volume_polynomial(p: &Polytope, q: &Polytope) -> Result<Vec<Rational>> {
    let d = check_pair(p, q)?;
    let values = (0..=d)
        .map(|t| {
            let scaled = q.scale(&rational::int(t as i64))?;
            Ok(volume(&p.minkowski_sum(&scaled)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&values))
}

/// Coefficients of the polynomial of degree `< n` through `(t, values[t])`, `t = 0..n`.
pub(crate) fn interpolate(values: &[Rational]) -> Vec<Rational> {
    let n = values.len();
    let vandermonde: Vec<Vec<Rational>> = (0..n)
        .map(|t| (0..n).map(|k| rational::pow(&rational::int(t as i64), k as i32)).collect())
        .collect();
    linalg::solve(&vandermonde, values).expect("Vandermonde matrix at distinct nodes is invertible")
}
