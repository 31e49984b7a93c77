//! Certified comparison of real expressions built from rationals with
//! `+ - * /` and rational powers.
//!
//! Two mechanisms cooperate. Interval evaluation over dyadic rational endpoints,
//! with outward rounding, separates values that differ. A symbolic normal form
//! (a sum of rational multiples of radical monomials `prod b_k^(e_k)`) proves
//! exact ties: monomials whose ratio is rational are merged, and distinct
//! monomials over rational bases are linearly independent over the rationals,
//! so a normal form without opaque atoms vanishes iff the expression does.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Starting precision of the refinement loop, in fractional bits.
pub const START_BITS: u32 = 64;
/// Default precision cap.
pub const DEFAULT_MAX_BITS: u32 = 4096;

/// A closed interval with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(r: Rational) -> Self {
        Interval { lo: r.clone(), hi: r }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    fn intersect(&self, other: &Interval) -> Interval {
        Interval { lo: (&self.lo).max(&other.lo).clone(), hi: (&self.hi).min(&other.hi).clone() }
    }

    fn round(self, bits: u32) -> Interval {
        if self.is_exact() {
            return self;
        }
        Interval { lo: rational::floor_dyadic(&self.lo, bits), hi: rational::ceil_dyadic(&self.hi, bits) }
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / rational::int(2)).to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", rational::format(&self.lo))
        } else {
            write!(f, "[{}, {}]", rational::format(&self.lo), rational::format(&self.hi))
        }
    }
}

#[derive(Debug)]
enum Kind {
    Const(Rational),
    Add(Arc<Node>, Arc<Node>),
    Sub(Arc<Node>, Arc<Node>),
    Mul(Arc<Node>, Arc<Node>),
    Div(Arc<Node>, Arc<Node>),
    /// `base^(p/q)` with `q >= 1`.
    Pow(Arc<Node>, i64, u32),
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    normal: OnceLock<Option<NormalForm>>,
}

impl Node {
    fn new(kind: Kind) -> Arc<Node> {
        Arc::new(Node { kind, normal: OnceLock::new() })
    }

    fn normal_form(&self) -> Option<&NormalForm> {
        self.normal.get_or_init(|| NormalForm::of(self)).as_ref()
    }
}

enum EvalFailure {
    /// The enclosure at this precision cannot decide a side condition.
    Imprecise,
    Domain(String),
}

/// A real number given by an expression tree, with a cached certified enclosure.
#[derive(Debug, Clone)]
pub struct CertifiedReal {
    expr: Arc<Node>,
    enclosure: Option<Interval>,
    precision: u32,
}

impl CertifiedReal {
    pub fn rational(r: Rational) -> Self {
        Self::wrap(Node::new(Kind::Const(r)))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rational::int(n))
    }

    fn wrap(expr: Arc<Node>) -> Self {
        CertifiedReal { expr, enclosure: None, precision: 0 }
    }

    /// `self^(p/q)`; the base must be nonnegative when `q > 1`.
    pub fn pow(&self, p: i64, q: u32) -> Self {
        assert!(q >= 1, "root index must be positive");
        let g = p.unsigned_abs().gcd(&(q as u64));
        let (p, q) = if g > 1 { (p / g as i64, q / g as u32) } else { (p, q) };
        Self::wrap(Node::new(Kind::Pow(self.expr.clone(), p, q)))
    }

    pub fn sqrt(&self) -> Self {
        self.pow(1, 2)
    }

    /// Exact value when the expression folds to a rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match eval(&self.expr, START_BITS) {
            Ok(iv) if iv.is_exact() => Some(iv.lo),
            _ => self.symbolic_rational(),
        }
    }

    fn symbolic_rational(&self) -> Option<Rational> {
        let nf = self.expr.normal_form()?;
        match nf.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.radicals.is_empty() && t.atoms.is_empty() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn enclosure(&self) -> Option<&Interval> {
        self.enclosure.as_ref()
    }

    /// Encloses the value at `bits` fractional bits, intersected with any earlier
    /// enclosure so successive refinements never widen.
    pub fn refine(&mut self, bits: u32) -> Result<Interval> {
        let mut b = bits.max(START_BITS);
        loop {
            match eval(&self.expr, b) {
                Ok(iv) => {
                    let iv = match &self.enclosure {
                        Some(prev) => prev.intersect(&iv),
                        None => iv,
                    };
                    self.enclosure = Some(iv.clone());
                    self.precision = self.precision.max(b);
                    return Ok(iv);
                }
                Err(EvalFailure::Domain(msg)) => return Err(Error::DomainError(msg)),
                Err(EvalFailure::Imprecise) if b < DEFAULT_MAX_BITS.max(bits) * 4 => b *= 2,
                Err(EvalFailure::Imprecise) => {
                    return Err(Error::DomainError(
                        "side condition (nonzero divisor or nonnegative radicand) could not be certified".into(),
                    ))
                }
            }
        }
    }

    /// Enclosure of width at most `2^-bits`, unless the value is known exactly.
    pub fn enclose(&self, bits: u32) -> Result<Interval> {
        if let Some(r) = self.symbolic_rational() {
            // still evaluate once so domain errors surface
            self.clone().refine(START_BITS)?;
            return Ok(Interval::point(r));
        }
        let mut c = self.clone();
        let target = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
        let mut b = bits.max(START_BITS);
        loop {
            let iv = c.refine(b)?;
            if iv.is_exact() || iv.width() <= target {
                return Ok(iv);
            }
            b *= 2;
        }
    }

    /// `Some(true)` when the value is provably zero, `Some(false)` when provably nonzero.
    pub fn symbolic_zero(&self) -> Option<bool> {
        let nf = self.expr.normal_form()?;
        if nf.terms.is_empty() {
            Some(true)
        } else if nf.is_rational_radical() {
            Some(false)
        } else {
            None
        }
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Const(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Kind::Const(r) => write!(f, "({})", rational::format(r)),
            Kind::Add(a, b) => write!(f, "({a} + {b})"),
            Kind::Sub(a, b) => write!(f, "({a} - {b})"),
            Kind::Mul(a, b) => write!(f, "{a}*{b}"),
            Kind::Div(a, b) => write!(f, "{a}/{b}"),
            Kind::Pow(a, p, 1) => write!(f, "{a}^{p}"),
            Kind::Pow(a, p, q) => write!(f, "{a}^({p}/{q})"),
        }
    }
}

impl From<Rational> for CertifiedReal {
    fn from(r: Rational) -> Self {
        CertifiedReal::rational(r)
    }
}

impl From<&Rational> for CertifiedReal {
    fn from(r: &Rational) -> Self {
        CertifiedReal::rational(r.clone())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $kind:ident) => {
        impl $trait<&CertifiedReal> for &CertifiedReal {
            type Output = CertifiedReal;
            fn $method(self, rhs: &CertifiedReal) -> CertifiedReal {
                CertifiedReal::wrap(Node::new(Kind::$kind(self.expr.clone(), rhs.expr.clone())))
            }
        }
        impl $trait<CertifiedReal> for CertifiedReal {
            type Output = CertifiedReal;
            fn $method(self, rhs: CertifiedReal) -> CertifiedReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CertifiedReal> for CertifiedReal {
            type Output = CertifiedReal;
            fn $method(self, rhs: &CertifiedReal) -> CertifiedReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<CertifiedReal> for &CertifiedReal {
            type Output = CertifiedReal;
            fn $method(self, rhs: CertifiedReal) -> CertifiedReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for &CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        &CertifiedReal::int(0) - self
    }
}

impl Neg for CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        -&self
    }
}

// ---------------------------------------------------------------------------
// interval evaluation

fn eval(node: &Node, bits: u32) -> std::result::Result<Interval, EvalFailure> {
    let iv = match &node.kind {
        Kind::Const(r) => Interval::point(r.clone()),
        Kind::Add(a, b) => {
            let (a, b) = (eval(a, bits)?, eval(b, bits)?);
            Interval { lo: a.lo + b.lo, hi: a.hi + b.hi }
        }
        Kind::Sub(a, b) => {
            let (a, b) = (eval(a, bits)?, eval(b, bits)?);
            Interval { lo: a.lo - b.hi, hi: a.hi - b.lo }
        }
        Kind::Mul(a, b) => mul(&eval(a, bits)?, &eval(b, bits)?),
        Kind::Div(a, b) => {
            let den = eval(b, bits)?;
            if den.contains_zero() {
                if den.is_exact() || b.normal_form().is_some_and(|nf| nf.terms.is_empty()) {
                    return Err(EvalFailure::Domain("division by zero".into()));
                }
                return Err(EvalFailure::Imprecise);
            }
            mul(&eval(a, bits)?, &recip(&den))
        }
        Kind::Pow(base, p, q) => {
            let b = eval(base, bits)?;
            if *q == 1 {
                int_pow(&b, *p)?
            } else {
                root_pow(base, &b, *p, *q, bits)?
            }
        }
    };
    Ok(iv.round(bits))
}

fn mul(a: &Interval, b: &Interval) -> Interval {
    let c = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
    let lo = c.iter().min().unwrap().clone();
    let hi = c.iter().max().unwrap().clone();
    Interval { lo, hi }
}

fn recip(a: &Interval) -> Interval {
    Interval { lo: a.hi.recip(), hi: a.lo.recip() }
}

fn int_pow(b: &Interval, p: i64) -> std::result::Result<Interval, EvalFailure> {
    if p < 0 {
        if b.contains_zero() {
            return Err(if b.is_exact() {
                EvalFailure::Domain("zero to a negative power".into())
            } else {
                EvalFailure::Imprecise
            });
        }
        return int_pow(&recip(b), -p);
    }
    let e = p as i32;
    let (lo_p, hi_p) = (rational::pow(&b.lo, e), rational::pow(&b.hi, e));
    Ok(if !b.lo.is_negative() || p % 2 == 1 {
        Interval { lo: lo_p, hi: hi_p }
    } else if !b.hi.is_positive() {
        Interval { lo: hi_p, hi: lo_p }
    } else {
        Interval { lo: Rational::zero(), hi: lo_p.max(hi_p) }
    })
}

fn root_pow(base: &Node, b: &Interval, p: i64, q: u32, bits: u32) -> std::result::Result<Interval, EvalFailure> {
    if b.hi.is_negative() {
        return Err(EvalFailure::Domain(format!("negative base {} under a {q}-th root", b)));
    }
    if b.lo.is_negative() || (b.lo.is_zero() && p < 0) {
        if let Some(nf) = base.normal_form() {
            if nf.terms.is_empty() {
                return if p > 0 {
                    Ok(Interval::point(Rational::zero()))
                } else {
                    Err(EvalFailure::Domain("zero to a negative power".into()))
                };
            }
            if nf.terms.len() == 1 && nf.is_rational_radical() && nf.terms[0].coeff.is_negative() {
                return Err(EvalFailure::Domain(format!("negative base under a {q}-th root")));
            }
        }
        return Err(EvalFailure::Imprecise);
    }
    // extra working bits so the final power stays tight
    let work = bits + 16 + 2 * (p.unsigned_abs() as u32).min(64);
    let lo = rational::root_bounds(&b.lo, q, work).0;
    let hi = rational::root_bounds(&b.hi, q, work).1;
    int_pow(&Interval { lo, hi }, p)
}

// ---------------------------------------------------------------------------
// symbolic normal form

const MAX_TERMS: usize = 96;

/// `coeff * prod base^exp * prod atom^exp` with positive rational bases and
/// rational exponents in `(0, 1)` for the rational part.
#[derive(Debug, Clone)]
struct Monomial {
    coeff: Rational,
    radicals: Vec<(Rational, Rational)>,
    atoms: Vec<(String, Rational)>,
}

#[derive(Debug, Clone)]
struct NormalForm {
    terms: Vec<Monomial>,
}

impl Monomial {
    fn constant(c: Rational) -> Self {
        Monomial { coeff: c, radicals: vec![], atoms: vec![] }
    }

    fn normalize(mut self) -> Self {
        let mut radicals: Vec<(Rational, Rational)> = Vec::new();
        for (b, e) in self.radicals.drain(..) {
            match radicals.iter_mut().find(|(b2, _)| *b2 == b) {
                Some((_, e2)) => *e2 += e,
                None => radicals.push((b, e)),
            }
        }
        let mut kept = Vec::new();
        for (b, e) in radicals {
            if b.is_one() {
                continue;
            }
            let whole = e.floor();
            let frac = &e - &whole;
            if !whole.is_zero() {
                let w = whole.to_integer().to_i32().expect("small exponent");
                self.coeff *= rational::pow(&b, w);
            }
            if !frac.is_zero() {
                match rational::exact_root(&b, frac.denom().to_u32().expect("small root index")) {
                    Some(r) => self.coeff *= rational::pow(&r, frac.numer().to_i32().unwrap()),
                    None => kept.push((b, frac)),
                }
            }
        }
        if kept.len() > 1 {
            if let Some(c) = radical_value(&kept) {
                self.coeff *= c;
                kept.clear();
            }
        }
        kept.sort();
        self.radicals = kept;
        let mut atoms: Vec<(String, Rational)> = Vec::new();
        for (k, e) in self.atoms.drain(..) {
            match atoms.iter_mut().find(|(k2, _)| *k2 == k) {
                Some((_, e2)) => *e2 += e,
                None => atoms.push((k, e)),
            }
        }
        atoms.retain(|(_, e)| !e.is_zero());
        atoms.sort();
        self.atoms = atoms;
        self
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            radicals: self.radicals.iter().chain(&other.radicals).cloned().collect(),
            atoms: self.atoms.iter().chain(&other.atoms).cloned().collect(),
        }
        .normalize()
    }

    /// Radical part to the rational power `r` (coefficient excluded).
    fn radical_pow(&self, r: &Rational) -> Monomial {
        Monomial {
            coeff: Rational::one(),
            radicals: self.radicals.iter().map(|(b, e)| (b.clone(), e * r)).collect(),
            atoms: self.atoms.iter().map(|(k, e)| (k.clone(), e * r)).collect(),
        }
    }

    /// `Some(c)` when `self`'s radical part equals `c` times `other`'s.
    fn ratio_to(&self, other: &Monomial) -> Option<Rational> {
        if self.atoms != other.atoms {
            return None;
        }
        let mut factors: Vec<(Rational, Rational)> = self.radicals.clone();
        factors.extend(other.radicals.iter().map(|(b, e)| (b.clone(), -e.clone())));
        radical_value(&factors)
    }

    fn key(&self) -> String {
        let mut s = rational::format(&self.coeff);
        for (b, e) in &self.radicals {
            s += &format!("*{}^{}", rational::format(b), rational::format(e));
        }
        for (k, e) in &self.atoms {
            s += &format!("*<{k}>^{}", rational::format(e));
        }
        s
    }
}

/// `prod base^exp` when that product is rational.
fn radical_value(factors: &[(Rational, Rational)]) -> Option<Rational> {
    let l = factors.iter().fold(BigInt::one(), |acc, (_, e)| acc.lcm(e.denom()));
    let l_rat = Rational::from_integer(l.clone());
    let power: Rational = factors
        .iter()
        .map(|(b, e)| rational::pow(b, (e * &l_rat).to_integer().to_i32().expect("small exponent")))
        .product();
    rational::exact_root(&power, l.to_u32()?)
}

impl NormalForm {
    fn constant(c: Rational) -> Self {
        if c.is_zero() {
            NormalForm { terms: vec![] }
        } else {
            NormalForm { terms: vec![Monomial::constant(c)] }
        }
    }

    fn from_terms(raw: Vec<Monomial>) -> Option<Self> {
        let mut terms: Vec<Monomial> = Vec::new();
        'next: for m in raw {
            for t in terms.iter_mut() {
                if let Some(c) = m.ratio_to(t) {
                    t.coeff += &m.coeff * c;
                    continue 'next;
                }
            }
            terms.push(m);
        }
        terms.retain(|t| !t.coeff.is_zero());
        if terms.len() > MAX_TERMS {
            return None;
        }
        terms.sort_by_cached_key(Monomial::key);
        Some(NormalForm { terms })
    }

    fn is_rational_radical(&self) -> bool {
        self.terms.iter().all(|t| t.atoms.is_empty())
    }

    fn key(&self) -> String {
        self.terms.iter().map(Monomial::key).collect::<Vec<_>>().join("+")
    }

    fn add(&self, other: &NormalForm, sign: i64) -> Option<NormalForm> {
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().map(|t| Monomial { coeff: &t.coeff * rational::int(sign), ..t.clone() }));
        NormalForm::from_terms(raw)
    }

    fn mul(&self, other: &NormalForm) -> Option<NormalForm> {
        if self.terms.len() * other.terms.len() > MAX_TERMS * 4 {
            return None;
        }
        let raw = self.terms.iter().flat_map(|a| other.terms.iter().map(move |b| a.mul(b))).collect();
        NormalForm::from_terms(raw)
    }

    /// `self^(p/q)`; multi-term bases become opaque atoms.
    fn pow(&self, p: i64, q: u32) -> Option<NormalForm> {
        if self.terms.is_empty() {
            return if p > 0 { Some(self.clone()) } else { None };
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            if q > 1 && t.coeff.is_negative() {
                return None;
            }
            let r = Rational::new(p.into(), q.into());
            let mut m = t.radical_pow(&r);
            if q == 1 {
                m.coeff = rational::pow(&t.coeff, p as i32);
            } else {
                m.radicals.push((t.coeff.clone(), r));
            }
            return Some(NormalForm { terms: vec![m.normalize()] });
        }
        if q == 1 && (0..=8).contains(&p) {
            let mut acc = NormalForm::constant(Rational::one());
            for _ in 0..p {
                acc = acc.mul(self)?;
            }
            return Some(acc);
        }
        let atom = Monomial {
            coeff: Rational::one(),
            radicals: vec![],
            atoms: vec![(self.key(), Rational::new(p.into(), q.into()))],
        };
        Some(NormalForm { terms: vec![atom] })
    }

    fn of(node: &Node) -> Option<NormalForm> {
        match &node.kind {
            Kind::Const(r) => Some(NormalForm::constant(r.clone())),
            Kind::Add(a, b) => a.normal_form()?.add(b.normal_form()?, 1),
            Kind::Sub(a, b) => a.normal_form()?.add(b.normal_form()?, -1),
            Kind::Mul(a, b) => a.normal_form()?.mul(b.normal_form()?),
            Kind::Div(a, b) => a.normal_form()?.mul(&b.normal_form()?.pow(-1, 1)?),
            Kind::Pow(a, p, q) => a.normal_form()?.pow(*p, *q),
        }
    }
}

// ---------------------------------------------------------------------------
// comparison

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Lt,
    Gt,
    Eq,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Lt => "LT",
            Verdict::Gt => "GT",
            Verdict::Eq => "EQ",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub verdict: Verdict,
    /// Settled by the symbolic certificate rather than by separated enclosures.
    pub exact: bool,
    pub bits_used: u32,
    /// Enclosure of `a - b` at the last precision tried.
    pub difference: Interval,
}

impl Comparison {
    /// `a >= b` is certified.
    pub fn is_ge(&self) -> bool {
        matches!(self.verdict, Verdict::Gt | Verdict::Eq)
    }

    pub fn is_le(&self) -> bool {
        matches!(self.verdict, Verdict::Lt | Verdict::Eq)
    }

    pub fn is_tie(&self) -> bool {
        self.verdict == Verdict::Eq
    }
}

/// Compares `a` with `b`, doubling precision from [`START_BITS`] up to `max_bits`.
pub fn compare(a: &CertifiedReal, b: &CertifiedReal, max_bits: u32) -> Result<Comparison> {
    let diff = a - b;
    let symbolic = diff.expr.normal_form().cloned();
    if let Some(nf) = &symbolic {
        if nf.terms.is_empty() {
            return Ok(Comparison {
                verdict: Verdict::Eq,
                exact: true,
                bits_used: 0,
                difference: Interval::point(Rational::zero()),
            });
        }
        if nf.terms.len() == 1 && nf.is_rational_radical() {
            let c = &nf.terms[0].coeff;
            let verdict = if c.is_positive() { Verdict::Gt } else { Verdict::Lt };
            let difference = diff.clone().refine(START_BITS)?;
            return Ok(Comparison { verdict, exact: true, bits_used: 0, difference });
        }
    }
    let mut diff = diff;
    let mut bits = START_BITS.min(max_bits.max(1));
    loop {
        let iv = diff.refine(bits)?;
        let verdict = if iv.lo.is_positive() {
            Some(Verdict::Gt)
        } else if iv.hi.is_negative() {
            Some(Verdict::Lt)
        } else if iv.is_exact() {
            Some(Verdict::Eq)
        } else {
            None
        };
        if let Some(verdict) = verdict {
            return Ok(Comparison { verdict, exact: verdict == Verdict::Eq, bits_used: bits, difference: iv });
        }
        if bits >= max_bits {
            return Ok(Comparison { verdict: Verdict::Undecided, exact: false, bits_used: bits, difference: iv });
        }
        bits = (bits * 2).min(max_bits);
    }
}

/// Exact three-way comparison of rationals packaged as a [`Comparison`].
pub fn compare_rational(a: &Rational, b: &Rational) -> Comparison {
    let verdict = match a.cmp(b) {
        std::cmp::Ordering::Less => Verdict::Lt,
        std::cmp::Ordering::Greater => Verdict::Gt,
        std::cmp::Ordering::Equal => Verdict::Eq,
    };
    Comparison { verdict, exact: true, bits_used: 0, difference: Interval::point(a - b) }
}

/// Which way an inequality points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `lhs >= rhs`
    Ge,
    /// `lhs <= rhs`
    Le,
}

/// One certified inequality `lhs (>=|<=) rhs` with enclosures of both sides.
#[derive(Debug, Clone)]
pub struct Inequality {
    pub label: String,
    pub direction: Direction,
    pub lhs: Interval,
    pub rhs: Interval,
    pub comparison: Comparison,
}

impl Inequality {
    /// Certifies `lhs direction rhs`; enclosures are reported to `report_bits`.
    pub fn check(
        label: impl Into<String>,
        lhs: &CertifiedReal,
        direction: Direction,
        rhs: &CertifiedReal,
        max_bits: u32,
        report_bits: u32,
    ) -> Result<Self> {
        let comparison = compare(lhs, rhs, max_bits)?;
        Ok(Inequality {
            label: label.into(),
            direction,
            lhs: lhs.enclose(report_bits)?,
            rhs: rhs.enclose(report_bits)?,
            comparison,
        })
    }

    pub fn holds(&self) -> bool {
        match self.direction {
            Direction::Ge => self.comparison.is_ge(),
            Direction::Le => self.comparison.is_le(),
        }
    }

    pub fn is_violated(&self) -> bool {
        match self.direction {
            Direction::Ge => self.comparison.verdict == Verdict::Lt,
            Direction::Le => self.comparison.verdict == Verdict::Gt,
        }
    }

    pub fn is_undecided(&self) -> bool {
        self.comparison.verdict == Verdict::Undecided
    }

    pub fn is_tie(&self) -> bool {
        self.comparison.is_tie()
    }
}
