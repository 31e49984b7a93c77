//! Diskant's inequality, the inradius/outradius bounds it implies, Bonnesen's
//! inequality on surfaces, and the proportionality criterion.

use num_traits::Zero;

use crate::certified::{self, CertifiedReal, Comparison, Direction, Inequality, Interval, Verdict};
use crate::error::{invalid, Error, Result};
use crate::linalg::Point;
use crate::mixedvol::{self, NefSequence};
use crate::nefseq;
use crate::polytope::Polytope;
use crate::radii;
use crate::rational::{self, Rational};

fn c(r: &Rational) -> CertifiedReal {
    CertifiedReal::from(r)
}

fn require_degree(seq: &NefSequence, min: usize) -> Result<usize> {
    let d = seq.degree();
    if d < min {
        return invalid(format!("needs degree at least {min}, got {d}"));
    }
    Ok(d)
}

/// Certified interval `[lower, upper]` for a radius.
#[derive(Debug, Clone)]
pub struct RadiusBounds {
    pub lower: CertifiedReal,
    pub upper: CertifiedReal,
    /// `lower` compared with `upper`; `Eq` when the bounds collapse.
    pub order: Comparison,
}

impl RadiusBounds {
    pub fn collapsed(&self) -> bool {
        self.order.is_tie()
    }

    pub fn ordered(&self) -> bool {
        self.order.is_le()
    }
}

/// Lower bound on the slope from Diskant's inequality:
/// `(b^(1/(d-1)) - (b^(d/(d-1)) - a^(1/(d-1)) top)^(1/d)) / a^(1/(d-1))`
/// where `a = s_0`, `b = s_{d-1}`, `top = s_d`.
fn slope_lower_bound(a: &Rational, b: &Rational, top: &Rational, d: usize) -> Result<CertifiedReal> {
    let e = (d - 1) as u32;
    // radicand >= 0  <=>  b^d >= a top^(d-1), decided exactly
    let lhs = rational::pow(b, d as i32);
    let rhs = a * rational::pow(top, (d - 1) as i32);
    if lhs < rhs {
        return Err(Error::UnrealizableSequence(format!(
            "s_(d-1)^d = {} < s_0 s_d^(d-1) = {}",
            rational::format(&lhs),
            rational::format(&rhs)
        )));
    }
    let root = if lhs == rhs {
        CertifiedReal::int(0)
    } else {
        (c(b).pow(d as i64, e) - c(a).pow(1, e) * c(top)).pow(1, d as u32)
    };
    Ok((c(b).pow(1, e) - root) / c(a).pow(1, e))
}

/// `lower <= r(alpha; beta) <= s_d / s_{d-1}`.
pub fn inradius_bounds(seq: &NefSequence, max_bits: u32) -> Result<RadiusBounds> {
    let d = require_degree(seq, 2)?;
    seq.require_big()?;
    let s = seq.values();
    let lower = slope_lower_bound(&s[0], &s[d - 1], &s[d], d)?;
    let upper = c(&(&s[d] / &s[d - 1]));
    let order = certified::compare(&lower, &upper, max_bits)?;
    Ok(RadiusBounds { lower, upper, order })
}

/// `s_1 / s_0 <= R(alpha; beta) <= 1 / lower(reversed)`, by swapping the roles
/// of the two classes in [`inradius_bounds`] since `R(alpha; beta) = 1 / s(beta, alpha)`.
pub fn outradius_bounds(seq: &NefSequence, max_bits: u32) -> Result<RadiusBounds> {
    let d = require_degree(seq, 2)?;
    seq.require_big()?;
    let rev = seq.reversed();
    let t = rev.values();
    let lower = c(&(seq.get(1) / seq.get(0)));
    let upper = CertifiedReal::int(1) / slope_lower_bound(&t[0], &t[d - 1], &t[d], d)?;
    let order = certified::compare(&lower, &upper, max_bits)?;
    Ok(RadiusBounds { lower, upper, order })
}

#[derive(Debug, Clone)]
pub struct DiskantReport {
    /// `s_{d-1}^(d/(d-1)) - s_d s_0^(1/(d-1)) >= (s_{d-1}^(1/(d-1)) - s s_0^(1/(d-1)))^d`.
    pub inequality: Inequality,
    /// Enclosure of `lhs - rhs`.
    pub deficit: Interval,
}

impl DiskantReport {
    pub fn passed(&self) -> bool {
        self.inequality.holds()
    }
}

pub fn diskant_sides(seq: &NefSequence, slope: &CertifiedReal) -> Result<(CertifiedReal, CertifiedReal)> {
    let d = require_degree(seq, 2)?;
    seq.require_big()?;
    let s = seq.values();
    let e = (d - 1) as u32;
    let lhs = c(&s[d - 1]).pow(d as i64, e) - c(&s[d]) * c(&s[0]).pow(1, e);
    let rhs = (c(&s[d - 1]).pow(1, e) - slope * c(&s[0]).pow(1, e)).pow(d as i64, 1);
    Ok((lhs, rhs))
}

/// Diskant's inequality at the given slope, which must lie in `[0, s_d / s_{d-1}]`.
pub fn diskant_check(seq: &NefSequence, slope: &CertifiedReal, max_bits: u32, report_bits: u32) -> Result<DiskantReport> {
    let (lhs, rhs) = diskant_sides(seq, slope)?;
    let d = seq.degree();
    let cap = c(&(seq.get(d) / seq.get(d - 1)));
    if certified::compare(slope, &CertifiedReal::int(0), max_bits)?.verdict == Verdict::Lt {
        return invalid("slope must be nonnegative");
    }
    if certified::compare(slope, &cap, max_bits)?.verdict == Verdict::Gt {
        return invalid("slope exceeds the upper bound s_d / s_(d-1)");
    }
    let inequality = Inequality::check("Diskant", &lhs, Direction::Ge, &rhs, max_bits, report_bits)?;
    let deficit = if inequality.is_tie() {
        Interval::point(Rational::zero())
    } else {
        (&lhs - &rhs).enclose(report_bits)?
    };
    Ok(DiskantReport { inequality, deficit })
}

/// `(s_0^2 / 4) (R - r)^2 <= s_1^2 - s_0 s_2` on surfaces.
pub fn bonnesen_check(
    seq: &NefSequence,
    r: &CertifiedReal,
    outer: &CertifiedReal,
    max_bits: u32,
    report_bits: u32,
) -> Result<Inequality> {
    if seq.degree() != 2 {
        return invalid(format!("Bonnesen's inequality is for degree 2, got {}", seq.degree()));
    }
    seq.require_big()?;
    let s = seq.values();
    let gap = outer - r;
    let lhs = c(&(&s[0] * &s[0] / rational::int(4))) * &gap * &gap;
    let rhs = c(&(&s[1] * &s[1] - &s[0] * &s[2]));
    Inequality::check("Bonnesen", &lhs, Direction::Le, &rhs, max_bits, report_bits)
}

/// The chain `lower_G <= r <= s_d/s_{d-1} <= s_1/s_0 <= R <= upper_H`, one link per entry.
pub fn sandwich(seq: &NefSequence, r: &Rational, outer: &Rational, max_bits: u32, report_bits: u32) -> Result<Vec<Inequality>> {
    let d = require_degree(seq, 2)?;
    let inner = inradius_bounds(seq, max_bits)?;
    let outer_b = outradius_bounds(seq, max_bits)?;
    let top_ratio = c(&(seq.get(d) / seq.get(d - 1)));
    let links = [
        ("inradius lower bound <= r", &inner.lower, c(r)),
        ("r <= s_d/s_(d-1)", &c(r), top_ratio.clone()),
        ("s_d/s_(d-1) <= s_1/s_0", &top_ratio, outer_b.lower.clone()),
        ("s_1/s_0 <= R", &outer_b.lower, c(outer)),
        ("R <= outradius upper bound", &c(outer), outer_b.upper.clone()),
    ];
    links
        .iter()
        .map(|(label, a, b)| Inequality::check(*label, a, Direction::Le, b, max_bits, report_bits))
        .collect()
}

#[derive(Debug, Clone)]
pub struct Proportionality {
    pub proportional: bool,
    /// `(s_d / s_0)^(1/d)`, the factor with `alpha = ratio * beta`.
    pub ratio: Option<CertifiedReal>,
    pub ratio_enclosure: Option<Interval>,
    /// `(lambda, x)` with `Q = lambda P + x`, when polytopes were supplied.
    pub witness: Option<(Rational, Point)>,
}

/// Proportionality from the exact top equality `s_{d-1}^d = s_0 s_d^(d-1)`.
pub fn proportionality_test(seq: &NefSequence, tolerance_bits: u32) -> Result<Proportionality> {
    let conds = nefseq::check_equality_conditions(seq)?;
    let proportional = conds.top_equality;
    let (ratio, ratio_enclosure) = if proportional {
        let d = seq.degree() as u32;
        let ratio = c(&(seq.get(d as usize) / seq.get(0))).pow(1, d);
        let enc = ratio.enclose(tolerance_bits)?;
        (Some(ratio), Some(enc))
    } else {
        (None, None)
    };
    Ok(Proportionality { proportional, ratio, ratio_enclosure, witness: None })
}

/// As [`proportionality_test`], adding the geometric witness `Q = lambda P + x`.
pub fn proportionality_test_polytopes(p: &Polytope, q: &Polytope, tolerance_bits: u32) -> Result<Proportionality> {
    let seq = mixedvol::intersection_sequence(p, q)?;
    let mut out = proportionality_test(&seq, tolerance_bits)?;
    out.witness = radii::homothety_witness(p, q)?;
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct BoundsOptions {
    /// Width target for reported enclosures.
    pub precision_bits: u32,
    /// Cap for the refinement loop of every comparison.
    pub max_bits: u32,
    /// Slope used in Diskant's inequality; defaults to the LP inradius when radii are known.
    pub slope: Option<Rational>,
    /// LP inradius and outradius.
    pub radii: Option<(Rational, Rational)>,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions { precision_bits: 64, max_bits: certified::DEFAULT_MAX_BITS, slope: None, radii: None }
    }
}

#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub degree: usize,
    pub s: NefSequence,
    pub inradius_lower: Interval,
    pub inradius_upper: Interval,
    pub outradius_lower: Interval,
    pub outradius_upper: Interval,
    pub diskant: Option<DiskantReport>,
    pub bonnesen: Option<Inequality>,
    /// Certified inequalities in report order.
    pub verdicts: Vec<Inequality>,
    pub precision_bits_used: u32,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Inequality::holds)
    }

    pub fn any_violation(&self) -> bool {
        self.verdicts.iter().any(Inequality::is_violated)
    }

    pub fn undecided(&self) -> impl Iterator<Item = &Inequality> {
        self.verdicts.iter().filter(|v| v.is_undecided())
    }
}

pub fn bounds_report(seq: &NefSequence, opts: &BoundsOptions) -> Result<BoundsReport> {
    let bits = opts.precision_bits;
    let inner = inradius_bounds(seq, opts.max_bits)?;
    let outer = outradius_bounds(seq, opts.max_bits)?;
    let mut verdicts = vec![
        Inequality::check("inradius lower <= upper", &inner.lower, Direction::Le, &inner.upper, opts.max_bits, bits)?,
        Inequality::check("outradius lower <= upper", &outer.lower, Direction::Le, &outer.upper, opts.max_bits, bits)?,
    ];

    let slope = opts.slope.clone().or_else(|| opts.radii.as_ref().map(|(r, _)| r.clone()));
    let diskant = match &slope {
        Some(s) => Some(diskant_check(seq, &c(s), opts.max_bits, bits)?),
        None => None,
    };
    if let Some(dk) = &diskant {
        verdicts.push(dk.inequality.clone());
    }

    let mut bonnesen = None;
    if let Some((r, big_r)) = &opts.radii {
        verdicts.extend(sandwich(seq, r, big_r, opts.max_bits, bits)?);
        if seq.degree() == 2 {
            let b = bonnesen_check(seq, &c(r), &c(big_r), opts.max_bits, bits)?;
            verdicts.push(b.clone());
            bonnesen = Some(b);
        }
    }

    let precision_bits_used = verdicts.iter().map(|v| v.comparison.bits_used).max().unwrap_or(0).max(bits);
    Ok(BoundsReport {
        degree: seq.degree(),
        s: seq.clone(),
        inradius_lower: inner.lower.enclose(bits)?,
        inradius_upper: inner.upper.enclose(bits)?,
        outradius_lower: outer.lower.enclose(bits)?,
        outradius_upper: outer.upper.enclose(bits)?,
        diskant,
        bonnesen,
        verdicts,
        precision_bits_used,
    })
}
