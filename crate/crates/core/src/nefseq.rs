//! Khovanskii-Teissier checks on intersection sequences, Minkowski
//! superadditivity, and the equivalent forms of the equality case.

use num_traits::{Signed, Zero};

use crate::certified::{CertifiedReal, Direction, Inequality, DEFAULT_MAX_BITS};
use crate::error::{invalid, Result};
use crate::mixedvol::{self, NefSequence};
use crate::polytope::Polytope;
use crate::rational::{self, Rational};

/// Verdict at one index: `deficit = lhs - rhs`, which must be `>= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVerdict {
    pub index: usize,
    pub deficit: Rational,
}

impl IndexVerdict {
    pub fn holds(&self) -> bool {
        !self.deficit.is_negative()
    }

    pub fn is_equality(&self) -> bool {
        self.deficit.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub name: &'static str,
    pub entries: Vec<IndexVerdict>,
}

impl SequenceReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(IndexVerdict::holds)
    }

    pub fn all_equalities(&self) -> bool {
        self.entries.iter().all(IndexVerdict::is_equality)
    }

    pub fn violations(&self) -> impl Iterator<Item = &IndexVerdict> {
        self.entries.iter().filter(|e| !e.holds())
    }
}

/// `s_i^2 >= s_{i-1} s_{i+1}` for `1 <= i <= d-1`.
pub fn check_log_concavity(seq: &NefSequence) -> Result<SequenceReport> {
    let d = seq.degree();
    if d < 2 {
        return invalid(format!("log-concavity needs degree at least 2, got {d}"));
    }
    let s = seq.values();
    let entries = (1..d)
        .map(|i| IndexVerdict { index: i, deficit: &s[i] * &s[i] - &s[i - 1] * &s[i + 1] })
        .collect();
    Ok(SequenceReport { name: "log-concavity", entries })
}

/// `s_i^d >= s_0^(d-i) s_d^i` for `0 <= i <= d`, compared as exact integer powers.
pub fn check_kt_power(seq: &NefSequence) -> SequenceReport {
    let d = seq.degree();
    let s = seq.values();
    let entries = (0..=d)
        .map(|i| {
            let lhs = rational::pow(&s[i], d as i32);
            let rhs = rational::pow(&s[0], (d - i) as i32) * rational::pow(&s[d], i as i32);
            IndexVerdict { index: i, deficit: lhs - rhs }
        })
        .collect();
    SequenceReport { name: "power form", entries }
}

#[derive(Debug, Clone)]
pub struct MinkowskiReport {
    /// `((alpha + beta)^d)` computed directly as `d! vol(P + Q)`.
    pub sum_top: Rational,
    /// `sum_top == sum_i C(d,i) s_i`.
    pub expansion_identity: bool,
    /// `sum_top^(1/d) >= s_d^(1/d) + s_0^(1/d)`.
    pub inequality: Inequality,
}

impl MinkowskiReport {
    pub fn passed(&self) -> bool {
        self.expansion_identity && self.inequality.holds()
    }
}

/// Minkowski superadditivity `((a+b)^d)^(1/d) >= (a^d)^(1/d) + (b^d)^(1/d)`.
pub fn check_minkowski(p: &Polytope, q: &Polytope) -> Result<MinkowskiReport> {
    check_minkowski_with(p, q, DEFAULT_MAX_BITS, 64)
}

pub fn check_minkowski_with(p: &Polytope, q: &Polytope, max_bits: u32, report_bits: u32) -> Result<MinkowskiReport> {
    let seq = mixedvol::intersection_sequence(p, q)?;
    let d = seq.degree();
    let sum = p.minkowski_sum(q)?;
    let sum_top = mixedvol::volume(&sum) * Rational::from_integer(rational::factorial(d));
    minkowski_from_parts(&seq, sum_top, max_bits, report_bits)
}

/// Minkowski superadditivity for a sequence alone, taking `((alpha + beta)^d)`
/// from the binomial expansion.
pub fn check_minkowski_sequence(seq: &NefSequence, max_bits: u32, report_bits: u32) -> Result<MinkowskiReport> {
    minkowski_from_parts(seq, seq.sum_self_intersection(), max_bits, report_bits)
}

pub(crate) fn minkowski_from_parts(
    seq: &NefSequence,
    sum_top: Rational,
    max_bits: u32,
    report_bits: u32,
) -> Result<MinkowskiReport> {
    let d = seq.degree() as u32;
    let expansion_identity = sum_top == seq.sum_self_intersection();
    let lhs = CertifiedReal::from(&sum_top).pow(1, d);
    let rhs = CertifiedReal::from(seq.get(d as usize)).pow(1, d) + CertifiedReal::from(seq.get(0)).pow(1, d);
    let inequality = Inequality::check("Minkowski superadditivity", &lhs, Direction::Ge, &rhs, max_bits, report_bits)?;
    Ok(MinkowskiReport { sum_top, expansion_identity, inequality })
}

/// The equivalent equality conditions for a pair of nef and big classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityConditions {
    /// `s_i^2 = s_{i-1} s_{i+1}` for all `1 <= i <= d-1`.
    pub log_affine: bool,
    /// `s_i^d = s_0^(d-i) s_d^i` for all `i`.
    pub power_equalities: bool,
    /// `s_{d-1}^d = s_0 s_d^(d-1)`.
    pub top_equality: bool,
    /// Equality in Minkowski superadditivity; only known when the polytopes are supplied.
    pub minkowski_equality: Option<bool>,
}

impl EqualityConditions {
    pub fn cond4_input_needed(&self) -> bool {
        self.minkowski_equality.is_none()
    }

    /// All evaluated conditions agree.
    pub fn all_equivalent(&self) -> bool {
        let first = self.log_affine;
        self.power_equalities == first
            && self.top_equality == first
            && self.minkowski_equality.is_none_or(|m| m == first)
    }

    pub fn holds(&self) -> bool {
        self.all_equivalent() && self.top_equality
    }
}

pub fn check_equality_conditions(seq: &NefSequence) -> Result<EqualityConditions> {
    seq.require_big()?;
    let d = seq.degree();
    let s = seq.values();
    let log_affine = (1..d).all(|i| &s[i] * &s[i] == &s[i - 1] * &s[i + 1]);
    let power_equalities = check_kt_power(seq).all_equalities();
    let top_equality =
        rational::pow(&s[d - 1], d as i32) == &s[0] * rational::pow(&s[d], (d - 1) as i32);
    Ok(EqualityConditions { log_affine, power_equalities, top_equality, minkowski_equality: None })
}

/// As [`check_equality_conditions`], with the Minkowski condition evaluated on the pair.
pub fn check_equality_conditions_for(p: &Polytope, q: &Polytope) -> Result<EqualityConditions> {
    let seq = mixedvol::intersection_sequence(p, q)?;
    let mut conds = check_equality_conditions(&seq)?;
    let mink = check_minkowski(p, q)?;
    conds.minkowski_equality = Some(mink.inequality.is_tie());
    Ok(conds)
}
