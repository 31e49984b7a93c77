//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nefcalc::bounds::{self, RadiusBounds};
use nefcalc::certified::{self, Interval, Verdict};
use nefcalc::generate::Generator;
use nefcalc::mixedvol::{self, NefSequence};
use nefcalc::nefseq;
use nefcalc::radii;
use nefcalc::rational::{int, ratio};
use nefcalc::{Polytope, Rational};

const CAP_BITS: u32 = 1024;
const REPORT_BITS: u32 = 64;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs(seed: u64, count: usize, dims: &[usize], max_vertices: usize) -> Vec<(Polytope, Polytope)> {
    let mut g = Generator::new(seed);
    (0..count).map(|i| g.pair(dims[i % dims.len()], max_vertices).unwrap()).collect()
}

fn homothetic(seed: u64, count: usize, dims: &[usize]) -> Vec<(Polytope, Polytope, Rational)> {
    let mut g = Generator::new(seed);
    (0..count)
        .map(|i| {
            let (p, q, lambda, _) = g.homothetic_pair(dims[i % dims.len()], 8).unwrap();
            (p, q, lambda)
        })
        .collect()
}

fn lp_radii(p: &Polytope, q: &Polytope) -> Result<(Rational, Rational), String> {
    let inner = radii::inradius(p, q).map_err(|e| e.to_string())?;
    let outer = radii::outradius(p, q).map_err(|e| e.to_string())?;
    ensure(inner.verify(p, q), || "inradius certificate rejected".into())?;
    ensure(outer.reciprocal_of.verify(q, p), || "outradius certificate rejected".into())?;
    Ok((inner.t_star, outer.value))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let pairs = pairs(101, 200, &[2, 3], 10);
    for (k, (p, q)) in pairs.iter().enumerate() {
        let a = mixedvol::sequence_by_polarization(p, q).map_err(|e| e.to_string())?;
        let b = mixedvol::sequence_by_interpolation(p, q).map_err(|e| e.to_string())?;
        ensure(a.values() == b.values(), || format!("pair {k}: {:?} != {:?}", a.values(), b.values()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(60), || format!("took {elapsed:.1?}, budget 60s"))?;
    Ok(format!("200/200 pairs agree exactly in {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    for (k, (p, q)) in pairs(202, 200, &[2, 3], 10).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let lc = nefseq::check_log_concavity(&s).map_err(|e| e.to_string())?;
        let pw = nefseq::check_kt_power(&s);
        ensure(lc.passed() && pw.passed(), || format!("realized pair {k} fails: {:?}", s.values()))?;
    }
    let free = NefSequence::from_ints(&[5, 4, 5]).unwrap();
    let lc = nefseq::check_log_concavity(&free).map_err(|e| e.to_string())?;
    let bad: Vec<_> = lc.violations().map(|v| (v.index, v.deficit.clone())).collect();
    ensure(bad == vec![(1, int(16 - 25))], || format!("(5,4,5) violations {bad:?}"))?;
    Ok("200/200 realized sequences pass; (5,4,5) violated at i=1 (16 < 25)".into())
}

fn criterion_3() -> Outcome {
    let mut max_bits = 0;
    for (k, (p, q)) in pairs(303, 100, &[2, 3], 8).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let (r, big_r) = lp_radii(p, q)?;
        let chain = bounds::sandwich(&s, &r, &big_r, CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        for link in &chain {
            ensure(!link.is_undecided(), || format!("pair {k}: '{}' undecided at {CAP_BITS} bits", link.label))?;
            ensure(link.holds(), || format!("pair {k}: '{}' violated", link.label))?;
            max_bits = max_bits.max(link.comparison.bits_used);
        }
    }
    Ok(format!("100/100 chains certified, max {max_bits} bits"))
}

fn criterion_4() -> Outcome {
    for (k, (p, q)) in pairs(404, 100, &[2, 3], 8).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let (r, _) = lp_radii(p, q)?;
        let dk = bounds::diskant_check(&s, &r.into(), CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(dk.passed(), || format!("pair {k}: Diskant {}", dk.inequality.comparison.verdict))?;
    }
    let zero = Interval::point(int(0));
    for (k, (p, q, _)) in homothetic(405, 40, &[2, 3]).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let (r, _) = lp_radii(p, q)?;
        let dk = bounds::diskant_check(&s, &r.into(), CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(dk.inequality.is_tie() && dk.inequality.comparison.exact, || format!("homothetic {k}: no exact tie"))?;
        ensure(dk.inequality.lhs == zero && dk.inequality.rhs == zero, || {
            format!("homothetic {k}: sides {} and {}", dk.inequality.lhs, dk.inequality.rhs)
        })?;
    }
    Ok("100/100 generic pairs certified; 40/40 homothetic pairs have both sides exactly 0".into())
}

fn collapsed_to(b: &RadiusBounds, value: &Rational) -> bool {
    b.collapsed() && b.lower.as_rational().as_ref() == Some(value) && b.upper.as_rational().as_ref() == Some(value)
}

fn criterion_5() -> Outcome {
    for (k, (p, q, lambda)) in homothetic(505, 50, &[2, 3]).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let c = nefseq::check_equality_conditions(&s).map_err(|e| e.to_string())?;
        ensure(c.log_affine && c.power_equalities && c.top_equality, || format!("homothetic {k}: {c:?}"))?;
        let inv = lambda.recip();
        let b = bounds::inradius_bounds(&s, CAP_BITS).map_err(|e| e.to_string())?;
        ensure(collapsed_to(&b, &inv), || format!("homothetic {k}: inradius bounds do not collapse to {inv}"))?;
        let prop = bounds::proportionality_test_polytopes(p, q, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(prop.proportional, || format!("homothetic {k}: not proportional"))?;
        let ratio = prop.ratio.as_ref().and_then(|r| r.as_rational());
        ensure(ratio.as_ref() == Some(&inv), || format!("homothetic {k}: ratio {ratio:?}, want {inv}"))?;
        ensure(prop.witness.as_ref().map(|w| &w.0) == Some(lambda), || format!("homothetic {k}: witness"))?;
    }
    let mut agree = 0;
    for (k, (p, q)) in pairs(506, 50, &[2, 3], 8).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let c = nefseq::check_equality_conditions(&s).map_err(|e| e.to_string())?;
        ensure(!c.log_affine && !c.power_equalities && !c.top_equality, || format!("generic {k}: {c:?}"))?;
        agree += usize::from(c.all_equivalent());
    }
    ensure(agree == 50, || format!("pairwise agreement {agree}/50"))?;
    Ok("50/50 homothetic pairs collapse with exact ratio 1/lambda; 50/50 generic pairs fail all three".into())
}

fn criterion_6() -> Outcome {
    for (k, (p, q)) in pairs(606, 100, &[2], 8).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let (r, big_r) = lp_radii(p, q)?;
        let b = bounds::bonnesen_check(&s, &r.into(), &big_r.into(), CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(b.holds() && !b.is_undecided(), || format!("polygon pair {k}: {}", b.comparison.verdict))?;
    }
    for (k, (p, q, _)) in homothetic(607, 30, &[2]).iter().enumerate() {
        let s = mixedvol::intersection_sequence(p, q).map_err(|e| e.to_string())?;
        let (r, big_r) = lp_radii(p, q)?;
        let b = bounds::bonnesen_check(&s, &r.into(), &big_r.into(), CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(b.is_tie() && b.comparison.exact, || format!("homothetic polygon pair {k}: {}", b.comparison.verdict))?;
    }
    Ok("100/100 polygon pairs certified; 30/30 homothetic pairs exact equality".into())
}

fn criterion_7() -> Outcome {
    let mut planar = 0;
    for (k, (p, q)) in pairs(707, 200, &[2, 3], 10).iter().enumerate() {
        let d = p.dim();
        let poly = mixedvol::volume_polynomial(p, q).map_err(|e| e.to_string())?;
        let mut args = vec![p.clone(); d - 1];
        args.push(q.clone());
        let dv = mixedvol::mixed_volume(&args).map_err(|e| e.to_string())? * int(d as i64);
        ensure(poly[1] == dv, || format!("pair {k}: t-coefficient {} != d V = {dv}", poly[1]))?;
        if d == 2 {
            let (pp, qq) = (common::to_p2(p.vertices()), common::to_p2(q.vertices()));
            let s = common::polygon_sequence(&pp, &qq);
            ensure(poly[1] == s[1], || format!("pair {k}: shoelace oracle gives {}", s[1]))?;
            planar += 1;
        }
    }
    Ok(format!("200/200 exact ({planar} also against the shoelace oracle)"))
}

fn criterion_8() -> Outcome {
    for (k, (p, q)) in pairs(808, 200, &[2, 3], 8).iter().enumerate() {
        let m = nefseq::check_minkowski_with(p, q, CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(m.expansion_identity, || format!("pair {k}: binomial expansion mismatch"))?;
        ensure(m.inequality.holds() && !m.inequality.is_undecided(), || format!("pair {k}: {}", m.inequality.comparison.verdict))?;
    }
    for (k, (p, q, _)) in homothetic(809, 50, &[2, 3]).iter().enumerate() {
        let m = nefseq::check_minkowski_with(p, q, CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
        ensure(m.passed() && m.inequality.is_tie() && m.inequality.comparison.exact, || {
            format!("homothetic {k}: {}", m.inequality.comparison.verdict)
        })?;
    }
    Ok("200/200 generic pairs certified; 50/50 homothetic pairs exact equality".into())
}

fn criterion_9() -> Outcome {
    let square = Polytope::unit_cube(2);
    let big = square.scale(&int(2)).unwrap();
    let triangle = Polytope::standard_simplex(2);
    let sq = common::pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
    let sq2 = common::pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
    let tri = common::pts(&[(0, 0), (1, 0), (0, 1)]);

    let s = mixedvol::intersection_sequence(&square, &big).map_err(|e| e.to_string())?;
    let want = [int(8), int(4), int(2)];
    ensure(s.values() == want, || format!("square/2 square: {:?}", s.values()))?;
    ensure(common::polygon_sequence(&sq, &sq2) == want, || "shoelace oracle disagrees on (8,4,2)".into())?;
    let (r, big_r) = lp_radii(&square, &big)?;
    ensure(r == ratio(1, 2) && big_r == ratio(1, 2), || format!("square/2 square radii {r}, {big_r}"))?;

    let s = mixedvol::intersection_sequence(&square, &triangle).map_err(|e| e.to_string())?;
    let want = [int(1), int(2), int(2)];
    ensure(s.values() == want, || format!("square/triangle: {:?}", s.values()))?;
    ensure(common::polygon_sequence(&sq, &tri) == want, || "shoelace oracle disagrees on (1,2,2)".into())?;
    let (r, big_r) = lp_radii(&square, &triangle)?;
    ensure(r == int(1) && big_r == int(2), || format!("square/triangle radii {r}, {big_r}"))?;
    let dk = bounds::diskant_check(&s, &r.into(), CAP_BITS, REPORT_BITS).map_err(|e| e.to_string())?;
    ensure(
        dk.inequality.lhs == Interval::point(int(2))
            && dk.inequality.rhs == Interval::point(int(1))
            && dk.deficit == Interval::point(int(1))
            && dk.inequality.comparison.verdict == Verdict::Gt,
        || format!("Diskant sides {} and {}", dk.inequality.lhs, dk.inequality.rhs),
    )?;
    let lower = bounds::inradius_bounds(&s, CAP_BITS).map_err(|e| e.to_string())?.lower;
    let two = certified::CertifiedReal::int(2);
    let tie = certified::compare(&lower, &(&two - two.sqrt()), CAP_BITS).map_err(|e| e.to_string())?;
    ensure(tie.is_tie(), || "inradius lower bound is not 2 - sqrt 2".into())?;
    Ok("(8,4,2) with r = R = 1/2; (1,2,2) with r = 1, R = 2, Diskant 2 - 1 = 1".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("mixed-volume dual-oracle equivalence", criterion_1),
        ("Khovanskii-Teissier on realized sequences", criterion_2),
        ("inradius/outradius sandwich", criterion_3),
        ("Diskant at the LP slope", criterion_4),
        ("equality conditions and proportionality", criterion_5),
        ("Bonnesen on polygons", criterion_6),
        ("derivative identity", criterion_7),
        ("Minkowski superadditivity", criterion_8),
        ("golden values", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
