//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every tolerance is pinned here; nothing defers to later calibration.

use hupkit::certificate::{verify_vanishing, PairKind, Side};
use hupkit::cone::{
    cross_validate_hyperbola, decide_cone, decide_two_hyperplanes, ConeInstance, ConicClass,
    RationalityResult,
};
use hupkit::curve::MonotoneBijection;
use hupkit::decide::{decide, decide_axis, DecideConfig, Decision, Evidence};
use hupkit::dynamics::TailOrdering;
use hupkit::gapset::{FamilyPart, GapSet, GeometricGapFamily};
use hupkit::interval::{interval_order, Interval, IntervalOrder};
use hupkit::wave::{wave_demo, WaveGrid};
use hupkit::{CrossInstance, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn iv(a: f64, b: f64) -> Interval {
    Interval::new(a, b).unwrap()
}

fn affine(s: f64, c: f64) -> MonotoneBijection {
    MonotoneBijection::affine(s, c).unwrap()
}

fn gaps(ivs: &[(f64, f64)]) -> GapSet {
    GapSet::from_intervals(ivs.iter().map(|&(a, b)| iv(a, b)).collect()).unwrap()
}

fn family(lambda: f64, seed: f64, depth: u32, part: FamilyPart) -> GeometricGapFamily {
    GeometricGapFamily::new(lambda, seed, depth, part).unwrap()
}

fn pass(name: &str) {
    println!("[acceptance] {name}: PASS");
}

fn annihilator(d: &Decision) -> (&hupkit::certificate::FourierPair, &hupkit::certificate::VerificationReport) {
    match &d.evidence {
        Evidence::Annihilator { pair, report } => (pair, report),
        other => panic!("expected an annihilator certificate, got {other:?}"),
    }
}

/// A1: axis-cross instances decide by density, and every counterexample
/// verifies at 1e-8 with nontriviality at least 0.5 over 10^4 samples.
#[test]
fn a01_axis_cross_suite() {
    let cfg = DecideConfig::default();

    let t0 = Instant::now();
    let dense = CrossInstance::AxisAxis {
        a: 0.0,
        b: 0.0,
        gaps1: GapSet::empty(),
        gaps2: GapSet::empty(),
    };
    assert_eq!(decide_axis(&dense, &cfg).unwrap().verdict, Verdict::Hup);
    assert!(t0.elapsed().as_secs_f64() < 1.0);

    let single_gaps: Vec<(f64, f64, Side)> = vec![
        (1.0, 2.0, Side::F),
        (-3.5, -1.25, Side::F),
        (-0.5, 0.5, Side::F), // gap across the partner offset
        (10.0, 10.5, Side::G),
        (-2.0, 3.0, Side::G),
    ];
    for (lo, hi, side) in single_gaps {
        let t0 = Instant::now();
        let inst = match side {
            Side::F => CrossInstance::AxisAxis {
                a: 0.0,
                b: 0.0,
                gaps1: gaps(&[(lo, hi)]),
                gaps2: GapSet::empty(),
            },
            Side::G => CrossInstance::AxisAxis {
                a: 0.0,
                b: 0.0,
                gaps1: GapSet::empty(),
                gaps2: gaps(&[(lo, hi)]),
            },
        };
        let d = decide_axis(&inst, &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NotHup, "gap ({lo}, {hi})");
        let (pair, report) = annihilator(&d);
        assert!(matches!(pair.kind, PairKind::AxisGap { .. }));
        assert!(report.pass, "{report:?}");
        assert!(report.max_violation <= 1e-8, "violation {}", report.max_violation);
        assert!(report.nontriviality >= 0.5, "nontriviality {}", report.nontriviality);
        assert!(report.samples >= 10_000);
        // independent replay at the pinned tolerance
        let replay = verify_vanishing(pair, &inst, 10_000, 1e-8).unwrap();
        assert!(replay.pass);
        assert!(t0.elapsed().as_secs_f64() < 1.0, "instance took {:?}", t0.elapsed());
    }

    // randomized single gaps on either axis
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
    for _ in 0..25 {
        let lo = rng.gen_range(-20.0..20.0);
        let gap = (lo, lo + rng.gen_range(0.05..6.0));
        let on_first: bool = rng.gen_bool(0.5);
        let inst = CrossInstance::AxisAxis {
            a: rng.gen_range(-3.0..3.0),
            b: rng.gen_range(-3.0..3.0),
            gaps1: if on_first { gaps(&[gap]) } else { GapSet::empty() },
            gaps2: if on_first { GapSet::empty() } else { gaps(&[gap]) },
        };
        let t0 = Instant::now();
        let d = decide_axis(&inst, &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NotHup, "gap {gap:?}");
        let (_, report) = annihilator(&d);
        assert!(report.pass && report.max_violation <= 1e-8 && report.nontriviality >= 0.5);
        assert!(t0.elapsed().as_secs_f64() < 1.0);
    }
    pass("A1 axis-cross density suite");
}

/// A2: mirror lines produce an identity-interval counterexample whose
/// annihilation identities hold on all of the line at 1e-10.
#[test]
fn a02_mirror_lines_identity_certificate() {
    let cfg = DecideConfig::default();
    for k in [1.0, 2.0, 0.5] {
        let t0 = Instant::now();
        let t1 = affine(k, 0.0);
        let t2 = affine(-k, 0.0);
        let inst = CrossInstance::GraphGraph {
            t1: t1.clone(),
            t2: t2.clone(),
            gaps1: GapSet::empty(),
            gaps2: GapSet::empty(),
        };
        let d = decide(&inst, &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NotHup, "k = {k}");
        let (pair, report) = annihilator(&d);
        assert!(matches!(pair.kind, PairKind::IdentityInterval { .. }), "k = {k}");
        assert!(report.pass);

        // both identities on a dense global sample, not just on the zero set
        let hull = pair
            .supports()
            .into_iter()
            .reduce(|a, b| a.hull(&b))
            .unwrap();
        let reach = 3.0 * (1.0 + hull.lo.abs().max(hull.hi.abs()));
        let mut worst: f64 = 0.0;
        for i in 0..10_000 {
            let x = -reach + 2.0 * reach * i as f64 / 9_999.0;
            worst = worst.max((pair.f_hat(x) + pair.g_hat(t1.eval(x).unwrap())).abs());
            worst = worst.max((pair.f_hat(x) + pair.g_hat(t2.eval(x).unwrap())).abs());
        }
        assert!(worst <= 1e-10, "k = {k}: global violation {worst}");
        assert!(t0.elapsed().as_secs_f64() < 1.0);
    }
    pass("A2 mirror-line identity certificates");
}

/// A3: the bounded gap (4, 20) under the scale-4 pair returns at exponent 1,
/// and the orbit-chain certificate verifies at 1e-8.
#[test]
fn a03_returning_gap_orbit_certificate() {
    let t0 = Instant::now();
    let cfg = DecideConfig::default();
    let inst = CrossInstance::GraphGraph {
        t1: affine(1.0, 0.0),
        t2: affine(4.0, 0.0),
        gaps1: gaps(&[(4.0, 20.0)]),
        gaps2: GapSet::empty(),
    };
    let d = decide(&inst, &cfg).unwrap();
    assert_eq!(d.verdict, Verdict::NotHup);
    let (pair, report) = annihilator(&d);
    match pair.kind {
        PairKind::OrbitChain { m, case, .. } => {
            assert_eq!(m, 1);
            assert_eq!(case, 1);
        }
        ref other => panic!("expected an orbit chain, got {other:?}"),
    }
    assert!(report.pass && report.max_violation <= 1e-8, "{report:?}");
    assert!(t0.elapsed().as_secs_f64() < 1.0);
    pass("A3 returning-gap orbit certificate");
}

/// A4: the two-sided geometric family wanders; every traced orbit respects
/// the closed-form ordering with endpoint identities at 1e-12.
#[test]
fn a04_geometric_family_wanders() {
    let t0 = Instant::now();
    let cfg = DecideConfig::default();
    let lambda = 4.0;
    let fam_pos = family(lambda, 1.0, 50, FamilyPart::Full);
    let fam_neg = family(lambda, -1.0, 50, FamilyPart::Full);
    let inst = CrossInstance::GraphGraph {
        t1: affine(1.0, 0.0),
        t2: affine(4.0, 0.0),
        gaps1: GapSet { intervals: vec![], families: vec![fam_pos.clone(), fam_neg.clone()] },
        gaps2: GapSet::empty(),
    };
    let d = decide(&inst, &cfg).unwrap();
    assert_eq!(d.verdict, Verdict::Hup, "trace: {:?}", d.trace);
    let Evidence::WanderingSet { family_tail: Some(tail), .. } = &d.evidence else {
        panic!("expected a family tail certificate");
    };
    assert!(!tail.traces.is_empty());
    assert!(tail.max_endpoint_error <= 1e-12, "endpoint error {}", tail.max_endpoint_error);

    // independent re-derivation of every trace from the closed form
    let endpoint = |seed: f64, n: i64| {
        lambda * seed - 0.5f64.powi(n as i32) * (lambda - 1.0) * seed
    };
    let gap_of = |seed: f64, idx: i64| {
        let scale = lambda.powi(idx as i32);
        let (e0, e1) = (scale * endpoint(seed, idx), scale * endpoint(seed, idx + 1));
        (e0.min(e1), e0.max(e1))
    };
    for tr in &tail.traces {
        assert!(tr.endpoint_error <= 1e-12);
        let (img_lo, img_hi) = (tr.image.lo, tr.image.hi);
        let slack = 1e-12 * (1.0 + img_lo.abs().max(img_hi.abs()));
        match tr.ordering {
            TailOrdering::InsideCore => {
                // strictly between the origin and the seed
                if tr.seed > 0.0 {
                    assert!(img_lo > -slack && img_hi <= tr.seed + slack, "{tr:?}");
                } else {
                    assert!(img_hi < slack && img_lo >= tr.seed - slack, "{tr:?}");
                }
            }
            TailOrdering::BetweenGaps { left } => {
                let (_, lower_hi) = gap_of(tr.seed, left);
                let (upper_lo, _) = gap_of(tr.seed, left + 1);
                let (lo, hi) = if tr.seed > 0.0 {
                    (lower_hi, upper_lo)
                } else {
                    let (upper_lo2, _) = gap_of(tr.seed, left);
                    let (_, lower_hi2) = gap_of(tr.seed, left + 1);
                    (lower_hi2, upper_lo2)
                };
                assert!(
                    img_lo >= lo - slack && img_hi <= hi + slack,
                    "image ({img_lo}, {img_hi}) escapes the gap ({lo}, {hi}) for {tr:?}"
                );
            }
        }
    }
    assert!(t0.elapsed().as_secs_f64() < 5.0, "took {:?}", t0.elapsed());
    pass("A4 wandering geometric family with closed-form tail");
}

/// A5: the split-gap assignment across the two curves still wanders, and the
/// gap-width growth law is reproduced exactly.
#[test]
fn a05_split_gap_assignment() {
    let cfg = DecideConfig::default();
    let lambda = 4.0;
    let inst = CrossInstance::GraphGraph {
        t1: affine(1.0, 0.0),
        t2: affine(4.0, 0.0),
        gaps1: GapSet {
            intervals: vec![],
            families: vec![
                family(lambda, 1.0, 50, FamilyPart::FirstHalf),
                family(lambda, -1.0, 50, FamilyPart::FirstHalf),
            ],
        },
        gaps2: GapSet {
            intervals: vec![],
            families: vec![
                family(lambda, 1.0, 50, FamilyPart::SecondHalf),
                family(lambda, -1.0, 50, FamilyPart::SecondHalf),
            ],
        },
    };
    let d = decide(&inst, &cfg).unwrap();
    assert_eq!(d.verdict, Verdict::Hup, "trace: {:?}", d.trace);

    // widths grow as ((λ−1)/2)(λ/2)^j · a0, exactly in this arithmetic
    let full = family(lambda, 1.0, 12, FamilyPart::Full);
    for j in 0..=10u32 {
        let expect = (lambda - 1.0) / 2.0 * (lambda / 2.0).powi(j as i32) * 1.0;
        assert_eq!(full.gap_width(j), expect, "width of gap {j}");
    }
    // growth without bound once λ > 2
    assert!(full.gap_width(10) > full.gap_width(0) * 500.0);
    pass("A5 split-gap assignment and width law");
}

/// A6: orbit chains from shrunk seeds stay pairwise disjoint to depth 32 on
/// a thousand random affine maps.
#[test]
fn a06_orbit_chain_disjointness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1A14);
    let mut failures = 0u32;
    let mut runs = 0u32;
    while runs < 1000 {
        let mag = if rng.gen_bool(0.5) {
            rng.gen_range(0.55..0.95)
        } else {
            rng.gen_range(1.05..1.8)
        };
        let slope = if rng.gen_bool(0.5) { mag } else { -mag };
        let phi = affine(slope, rng.gen_range(-3.0..3.0));
        let lo = rng.gen_range(-8.0..8.0);
        let seed_iv = iv(lo, lo + rng.gen_range(0.2..1.0));
        let Ok(seed) = hupkit::certificate::shrink_seed(&phi, &seed_iv) else {
            continue; // does not count as a run
        };
        runs += 1;
        let mut orbit = vec![seed];
        let mut ok = true;
        for k in 1..=32 {
            orbit.push(hupkit::dynamics::iterate(&phi, &seed, k).unwrap());
        }
        'outer: for a in 0..orbit.len() {
            for b in (a + 1)..orbit.len() {
                if interval_order(&orbit[a], &orbit[b]) == IntervalOrder::Overlap {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if !ok {
            failures += 1;
        }
    }
    assert_eq!(failures, 0, "{failures} of {runs} chains overlapped");
    pass("A6 orbit-chain disjointness, 1000 seeds, zero failures");
}

/// A7: the traveling-wave witness vanishes along both lines to 1e-12 and the
/// discrete wave residual converges at second order.
#[test]
fn a07_wave_demo() {
    for k1 in [2.0, 3.0, 0.5] {
        let r = wave_demo(k1, &WaveGrid::default()).unwrap();
        assert!(r.line_trace_max <= 1e-12, "k1 = {k1}: line trace {}", r.line_trace_max);

        let span = 1.5f64;
        let mut residuals = Vec::new();
        for k in 0..3 {
            let h = 1.0 / (128.0 * 2f64.powi(k));
            let n = (2.0 * span / h) as usize + 1;
            residuals.push(wave_demo(k1, &WaveGrid { n, h }).unwrap().pde_residual);
        }
        for w in residuals.windows(2) {
            let order = (w[0] / w[1]).log2();
            assert!(
                (order - 2.0).abs() <= 0.2,
                "k1 = {k1}: observed order {order}, residuals {residuals:?}"
            );
        }
    }
    pass("A7 wave demo: line traces and second-order residual");
}

/// A8: the cone criteria on the pinned instances, plus a thousand seeded
/// cross-validation trials with zero disagreements.
#[test]
fn a08_cone_suite() {
    let t0 = Instant::now();
    let mk = |u1: Vec<f64>, u2: Vec<f64>| ConeInstance {
        n: u1.len(),
        u1,
        u2,
        theta_pi_rational: None,
        q_max: None,
    };

    // parabolic slice
    let r = 0.5f64.sqrt();
    let quarter = std::f64::consts::FRAC_PI_4;
    let parab = mk(
        vec![1.0, 0.0, 0.0],
        vec![quarter.cos(), quarter.sin() * r, quarter.sin() * r],
    );
    let d = decide_cone(&parab, 10_000, 1e-9).unwrap();
    assert_eq!(d.classification, ConicClass::Parabola);
    assert_eq!(d.verdict, Verdict::Hup);

    // hyperbola at a right angle with vanishing cross coefficient
    let d = decide_cone(&mk(vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]), 10_000, 1e-9).unwrap();
    assert_eq!(d.classification, ConicClass::Hyperbola);
    assert_eq!(d.verdict, Verdict::NotHup);

    // the 45-degree boost: slice form A=1, C=-1, B=0; the direction is
    // light-like, so the total decision inherits uniqueness from the single
    // hyperplane
    let boosted = mk(vec![1.0, 0.0, 0.0], vec![quarter.cos(), 0.0, quarter.sin()]);
    let d = decide_two_hyperplanes(&boosted, 10_000, 1e-9).unwrap();
    assert_eq!(d.classification, ConicClass::Hyperbola);
    assert_eq!(d.verdict, Verdict::Hup);

    // exact circle slice at 60 degrees
    let third = std::f64::consts::FRAC_PI_3;
    let mut circle = mk(vec![1.0, 0.0, 0.0], vec![third.cos(), third.sin(), 0.0]);
    circle.theta_pi_rational = Some((1, 3));
    let d = decide_cone(&circle, 10_000, 1e-9).unwrap();
    assert_eq!(d.classification, ConicClass::Ellipse);
    assert_eq!(d.verdict, Verdict::NotHup);
    assert!(matches!(d.rationality, Some(RationalityResult::ExactRational { p: 1, q: 3 })));
    assert!(!d.conditional);

    // seeded cross-validation of the two hyperbolic criteria
    let mut rng = ChaCha8Rng::seed_from_u64(0x7E57);
    let report = cross_validate_hyperbola(3, 1000, 1e-9, &mut rng).unwrap();
    assert!(report.disagreements.is_empty(), "{:?}", report.disagreements);
    assert!(report.hyperbolas > 100);

    assert!(t0.elapsed().as_secs_f64() < 5.0, "took {:?}", t0.elapsed());
    pass("A8 cone criteria and hyperbola cross-validation");
}

/// A9: verdicts are invariant under curve swap, axis translation, positive
/// scaling conjugation, and spatial rotation of the cone directions.
#[test]
fn a09_invariance_suite() {
    let cfg = DecideConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1337);

    let rand_slope = |rng: &mut ChaCha8Rng| {
        let mag = rng.gen_range(0.3..3.0);
        if rng.gen_bool(0.5) {
            mag
        } else {
            -mag
        }
    };
    let rand_gaps = |rng: &mut ChaCha8Rng| {
        let count = rng.gen_range(0..3);
        let mut lo = rng.gen_range(-10.0..0.0);
        let mut list = Vec::new();
        for _ in 0..count {
            let width = rng.gen_range(0.2..2.0);
            list.push(iv(lo, lo + width));
            lo += width + rng.gen_range(0.5..3.0);
        }
        GapSet::from_intervals(list).unwrap()
    };

    // swap symmetry
    for _ in 0..200 {
        let (t1, t2) = (
            affine(rand_slope(&mut rng), rng.gen_range(-2.0..2.0)),
            affine(rand_slope(&mut rng), rng.gen_range(-2.0..2.0)),
        );
        let (g1, g2) = (rand_gaps(&mut rng), rand_gaps(&mut rng));
        let a = decide(
            &CrossInstance::GraphGraph {
                t1: t1.clone(),
                t2: t2.clone(),
                gaps1: g1.clone(),
                gaps2: g2.clone(),
            },
            &cfg,
        )
        .unwrap();
        let b = decide(&CrossInstance::GraphGraph { t1: t2, t2: t1, gaps1: g2, gaps2: g1 }, &cfg)
            .unwrap();
        assert_eq!(a.verdict, b.verdict, "swap changed the verdict: {:?} / {:?}", a.trace, b.trace);
    }

    // translation invariance of the axis case, certificates included
    for _ in 0..200 {
        let (g1, g2) = (rand_gaps(&mut rng), rand_gaps(&mut rng));
        let (a_off, b_off) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let centered = decide(
            &CrossInstance::AxisAxis { a: 0.0, b: 0.0, gaps1: g1.clone(), gaps2: g2.clone() },
            &cfg,
        )
        .unwrap();
        let shifted = decide(
            &CrossInstance::AxisAxis { a: a_off, b: b_off, gaps1: g1, gaps2: g2 },
            &cfg,
        )
        .unwrap();
        assert_eq!(centered.verdict, shifted.verdict);
        if let Evidence::Annihilator { report, .. } = &shifted.evidence {
            assert!(report.pass, "offset certificate failed: {report:?}");
        }
    }

    // scaling conjugation on affine graph instances
    for _ in 0..200 {
        let (k1, c1) = (rand_slope(&mut rng), rng.gen_range(-2.0..2.0));
        let (k2, c2) = (rand_slope(&mut rng), rng.gen_range(-2.0..2.0));
        let (g1, g2) = (rand_gaps(&mut rng), rand_gaps(&mut rng));
        let s = rng.gen_range(0.25..4.0);
        let scale_gaps = |g: &GapSet| {
            GapSet::from_intervals(
                g.intervals
                    .iter()
                    .map(|i| {
                        if s >= 0.0 {
                            iv(s * i.lo, s * i.hi)
                        } else {
                            iv(s * i.hi, s * i.lo)
                        }
                    })
                    .collect(),
            )
            .unwrap()
        };
        let base = decide(
            &CrossInstance::GraphGraph {
                t1: affine(k1, c1),
                t2: affine(k2, c2),
                gaps1: g1.clone(),
                gaps2: g2.clone(),
            },
            &cfg,
        )
        .unwrap();
        let conj = decide(
            &CrossInstance::GraphGraph {
                t1: affine(k1, s * c1),
                t2: affine(k2, s * c2),
                gaps1: scale_gaps(&g1),
                gaps2: scale_gaps(&g2),
            },
            &cfg,
        )
        .unwrap();
        assert_eq!(base.verdict, conj.verdict, "scaling by {s} changed the verdict");
    }

    // spatial rotation of cone instances
    let mut done = 0;
    while done < 200 {
        let n = 3 + rng.gen_range(0usize..2);
        let u1 = hupkit::cone::random_unit(n, &mut rng);
        let u2 = hupkit::cone::random_unit(n, &mut rng);
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let j = 1 + rng.gen_range(0usize..n - 2);
        let rot = |v: &[f64]| {
            let mut w = v.to_vec();
            let (c, s) = (angle.cos(), angle.sin());
            w[0] = c * v[0] - s * v[j];
            w[j] = s * v[0] + c * v[j];
            w
        };
        let mk = |u1: Vec<f64>, u2: Vec<f64>| ConeInstance {
            n,
            u1,
            u2,
            theta_pi_rational: None,
            q_max: None,
        };
        let a = decide_cone(&mk(u1.clone(), u2.clone()), 10_000, 1e-9);
        let b = decide_cone(&mk(rot(&u1), rot(&u2)), 10_000, 1e-9);
        match (a, b) {
            (Ok(x), Ok(y)) => {
                assert_eq!(x.verdict, y.verdict);
                assert_eq!(x.classification, y.classification);
                assert!((x.theta0 - y.theta0).abs() <= 1e-10);
                done += 1;
            }
            (Err(_), Err(_)) => {}
            (x, y) => panic!("rotation broke the decision: {x:?} vs {y:?}"),
        }
    }

    pass("A9 invariance suite: swap, translation, scaling, rotation");
}

/// A10: identical inputs and a fixed seed produce byte-identical CLI output.
#[test]
fn a10_determinism() {
    use std::process::Command;
    let exe = env!("CARGO_BIN_EXE_hupkit");
    let dir = tempfile::tempdir().unwrap();

    let inst_path = dir.path().join("instance.json");
    std::fs::write(
        &inst_path,
        r#"{"kind":"graph_graph",
            "T1":{"type":"affine","slope":1.0,"intercept":0.0},
            "T2":{"type":"affine","slope":4.0,"intercept":0.0},
            "gaps1":{"intervals":[[4.0,20.0]]},
            "gaps2":{"intervals":[]}}"#,
    )
    .unwrap();
    let cone_path = dir.path().join("cone.json");
    std::fs::write(
        &cone_path,
        r#"{"n":3,"u1":[1.0,0.0,0.0],"u2":[0.0,0.0,1.0]}"#,
    )
    .unwrap();

    let run = |args: &[&str]| {
        let out = Command::new(exe)
            .args(args)
            .env("HUPKIT_SEED", "7")
            .output()
            .expect("binary runs");
        out.stdout
    };
    for args in [
        vec!["decide", inst_path.to_str().unwrap()],
        vec!["cone", cone_path.to_str().unwrap()],
        vec!["xval", "hyperbola", "--trials", "100"],
        vec!["demo", "wave", "--k1", "2"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(!first.is_empty());
        assert_eq!(first, second, "output of {args:?} not byte-identical");
    }
    pass("A10 byte-identical outputs under a fixed seed");
}
