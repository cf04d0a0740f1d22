//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and enforcing its stated tolerances and runtime bound. Run with
//! `cargo test -p limzero-cli --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use limzero::exactpoly::{rat, CPoint, RatPoly};
use limzero::harness::{
    convergence_report, default_grid, identity_suite, random_general_spec, scan_oracle,
};
use limzero::limits::{
    accepted_points, classify, isolated_limits, stability_necessary, LimitSet,
};
use limzero::recurrence::RecurrenceSpec;
use limzero::spectra::discriminant;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ladder() -> RecurrenceSpec {
    RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[1, 1], &[2, 6, 8])
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_limzero"))
}

fn assert_runtime(criterion: &str, elapsed: Duration, bound: Duration) {
    assert!(
        elapsed < bound,
        "ACCEPTANCE {criterion}: FAIL — runtime {elapsed:?} exceeds {bound:?}"
    );
}

#[test]
fn a1_ladder_classification() {
    let start = Instant::now();
    let spec = ladder();
    let (_, set) = classify(&spec).expect("ladder is general");
    let arc = match &set {
        LimitSet::Arc(a) => a,
        other => panic!("ACCEPTANCE 1 (ladder classification): FAIL — shape {other:?}"),
    };
    assert!(
        (arc.end_plus - CPoint::new(-0.1, 0.2)).norm() < 1e-9,
        "ACCEPTANCE 1: FAIL — end_plus {}",
        arc.end_plus
    );
    assert!(
        (arc.end_minus - CPoint::new(-0.1, -0.2)).norm() < 1e-9,
        "ACCEPTANCE 1: FAIL — end_minus {}",
        arc.end_minus
    );
    assert_eq!(
        arc.through, -0.5,
        "ACCEPTANCE 1: FAIL — through-point must be exactly -1/2"
    );
    assert_eq!(
        discriminant(&spec),
        RatPoly::from_integers(&[4, 16, 80]),
        "ACCEPTANCE 1: FAIL — discriminant is not exactly 4 + 16z + 80z^2"
    );
    let iso = isolated_limits(&spec).expect("general");
    assert!(
        accepted_points(&iso).is_empty(),
        "ACCEPTANCE 1: FAIL — accepted isolated limits should be empty"
    );
    // endpoint correctness on the fixture: Delta at both endpoints below 1e-10
    let delta = discriminant(&spec);
    for end in [arc.end_plus, arc.end_minus] {
        let v = delta.eval_complex(end, delta.default_precision());
        assert!(
            v.norm() < 1e-10,
            "ACCEPTANCE 1: FAIL — |Delta(endpoint)| = {:e}",
            v.norm()
        );
    }
    let elapsed = start.elapsed();
    assert_runtime("1", elapsed, Duration::from_secs(1));
    println!(
        "ACCEPTANCE 1 (ladder classification): PASS — arc ends {} / {}, through {}, in {elapsed:?}",
        arc.end_plus, arc.end_minus, arc.through
    );
}

#[test]
fn a2_isolated_limit_after_exact_division() {
    let start = Instant::now();
    let one_z = RatPoly::from_integers(&[1, 1]);
    let sq = one_z.mul(&one_z);
    let w0_raw = RatPoly::from_integers(&[144])
        .mul(&sq)
        .mul(&sq);
    let w1_raw = RatPoly::from_integers(&[64])
        .mul(&sq)
        .mul(&RatPoly::from_integers(&[4, 16, 31, 21]));
    let w0 = w0_raw.exact_divide(&sq).expect("(1+z)^2 divides W0");
    let w1 = w1_raw.exact_divide(&sq).expect("(1+z)^2 divides W1");
    let spec = RecurrenceSpec::new(
        rat(4, 1),
        rat(2, 1),
        rat(16, 1),
        rat(0, 1),
        rat(0, 1),
        w0,
        w1,
    );
    let iso = isolated_limits(&spec).expect("quotient sequence is general");
    let accepted = accepted_points(&iso);
    assert_eq!(
        accepted.len(),
        1,
        "ACCEPTANCE 2: FAIL — expected exactly one accepted point, got {accepted:?}"
    );
    let z = accepted[0];
    assert!(
        z.im.abs() < 5e-4 && (z.re + 0.8102).abs() < 5e-4,
        "ACCEPTANCE 2: FAIL — accepted point {z} is not within 5e-4 of -0.8102"
    );
    let quartic = RatPoly::from_integers(&[4, 28, 169, 312, 171]);
    let value = quartic.eval_complex(z, quartic.default_precision());
    let residual = value.norm() / (312.0 * (1.0 + z.norm()).powi(4));
    assert!(
        residual < 1e-8,
        "ACCEPTANCE 2: FAIL — residual {residual:e} of the quartic at {z}"
    );
    let elapsed = start.elapsed();
    assert_runtime("2", elapsed, Duration::from_secs(1));
    println!(
        "ACCEPTANCE 2 (isolated limit of the quotient sequence): PASS — point {z}, quartic residual {residual:e}, in {elapsed:?}"
    );
}

#[test]
fn a3_figure_reproduction() {
    let start = Instant::now();
    let output = binary()
        .args(["roots", &fixture("ladder.json"), "--n", "6"])
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "ACCEPTANCE 3: FAIL — roots exited nonzero");
    let stdout = String::from_utf8(output.stdout).expect("utf8");
    let rows: Vec<(f64, f64)> = stdout
        .lines()
        .skip(1)
        .map(|line| {
            let mut parts = line.split(',');
            let re = parts.next().unwrap().parse().unwrap();
            let im = parts.next().unwrap().parse().unwrap();
            (re, im)
        })
        .collect();
    assert_eq!(
        rows.len(),
        11,
        "ACCEPTANCE 3 (figure reproduction): FAIL — expected 11 roots from --n 6, got {}: {rows:?}",
        rows.len()
    );
    let near = |target: (f64, f64)| {
        rows.iter()
            .any(|&(re, im)| (re - target.0).abs() < 5e-4 && (im - target.1).abs() < 5e-4)
    };
    for target in [
        (-6.042, 0.0),
        (-4.5756, 2.1021),
        (-4.5756, -2.1021),
        (-2.7579, 2.6028),
        (-2.7579, -2.6028),
        (-1.7627, 2.4209),
        (-1.7627, -2.4209),
        (-1.2815, 2.1922),
        (-1.2815, -2.1922),
        (-1.0632, 2.0477),
        (-1.0632, -2.0477),
    ] {
        assert!(
            near(target),
            "ACCEPTANCE 3 (figure reproduction): FAIL — no root within 5e-4 of {target:?}"
        );
    }
    let elapsed = start.elapsed();
    assert_runtime("3", elapsed, Duration::from_secs(1));
    println!("ACCEPTANCE 3 (figure reproduction): PASS — in {elapsed:?}");
}

/// The eleven roots of W_10 of the ladder fixture, pinned as regression
/// data; five conjugate pairs plus one real transient root.
#[test]
fn ladder_w10_root_positions_pinned() {
    let spec = ladder();
    let poly = spec.nth_poly(10);
    let roots = limzero::rootfind::find_roots(&poly, &Default::default()).unwrap();
    assert!(roots.converged);
    let expected = [
        (-0.604197567088, 0.000000000000),
        (-0.457561212953, -0.210205954712),
        (-0.457561212953, 0.210205954712),
        (-0.275785800727, -0.260284076773),
        (-0.275785800727, 0.260284076773),
        (-0.176270177859, -0.242094116688),
        (-0.176270177859, 0.242094116688),
        (-0.128146795672, -0.219224069469),
        (-0.128146795672, 0.219224069469),
        (-0.106317784800, -0.204770212368),
        (-0.106317784800, 0.204770212368),
    ];
    assert_eq!(roots.roots.len(), expected.len());
    for (&(re, im), root) in expected.iter().zip(&roots.roots) {
        assert!(
            (root.re - re).abs() < 1e-9 && (root.im - im).abs() < 1e-9,
            "{root} drifted from pinned ({re}, {im})"
        );
    }
}

#[test]
fn a4_oracle_equivalence_on_random_corpus() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..100 {
        let spec = random_general_spec(&mut rng);
        let (_, set) = classify(&spec).expect("general by construction");
        let grid = default_grid(&set, 256);
        let scan = scan_oracle(&spec, &set, &grid).expect("general");
        assert!(
            scan.passed,
            "ACCEPTANCE 4: FAIL — spec {i} ({}): {} false negatives, {} false positives",
            set.shape_name(),
            scan.false_negatives.len(),
            scan.false_positives.len()
        );
    }
    let elapsed = start.elapsed();
    assert_runtime("4", elapsed, Duration::from_secs(120));
    println!(
        "ACCEPTANCE 4 (oracle equivalence on 100 random specs at 256^2): PASS — in {elapsed:?}"
    );
}

#[test]
fn a5_exact_identity_suite() {
    let start = Instant::now();
    let result = identity_suite(42, 100).expect("count >= 1");
    assert!(
        result.passed(),
        "ACCEPTANCE 5: FAIL — {} identity failures, first: {:?}",
        result.failures.len(),
        result.failures.first()
    );
    let elapsed = start.elapsed();
    assert_runtime("5", elapsed, Duration::from_secs(30));
    println!(
        "ACCEPTANCE 5 (exact identity suite on {} specs): PASS — in {elapsed:?}",
        result.total
    );
}

#[test]
fn a6_ladder_convergence() {
    let start = Instant::now();
    let report = convergence_report(&ladder(), &[6, 12, 24]).expect("general");
    let first = &report.per_n[0];
    let last = &report.per_n[2];
    assert!(
        last.max_dist < first.max_dist,
        "ACCEPTANCE 6: FAIL — max_dist at n=24 ({}) not below n=6 ({})",
        last.max_dist,
        first.max_dist
    );
    assert!(
        last.mean_dist < 0.05,
        "ACCEPTANCE 6: FAIL — mean_dist at n=24 is {}",
        last.mean_dist
    );
    let elapsed = start.elapsed();
    assert_runtime("6", elapsed, Duration::from_secs(30));
    println!(
        "ACCEPTANCE 6 (ladder convergence): PASS — max {:.4} -> {:.4}, mean {:.4} -> {:.4}, in {elapsed:?}",
        first.max_dist, last.max_dist, first.mean_dist, last.mean_dist
    );
}

#[test]
fn a7_stability_checkers() {
    let start = Instant::now();

    // full real line: Delta is the negative constant -4
    let line_spec = RecurrenceSpec::from_integers(2, 0, -1, 0, -1, &[1], &[1, 1]);
    let (scalars, set) = classify(&line_spec).expect("general");
    assert_eq!(set, LimitSet::Real(limzero::limits::RealSubset::FullLine));
    let report = stability_necessary(&line_spec, &scalars, &set);
    // by hand: Delta(x_A) = 4 B(0) = -4 < 0 and Delta is a negative constant
    let delta_at_xa = rat(4, 1) * &scalars.b_at_xa;
    assert!(delta_at_xa < rat(0, 1));
    assert!(scalars.lead.clone() == rat(0, 1) && scalars.mid.clone() == rat(0, 1));
    assert!(
        report.real_rooted_necessary,
        "ACCEPTANCE 7: FAIL — full-line spec must satisfy the real-rooted necessary condition"
    );

    let spec = ladder();
    let (scalars, set) = classify(&spec).expect("general");
    let report = stability_necessary(&spec, &scalars, &set);
    // by hand: Delta(x_A) = 4 * 4 = 16 > 0, so not eventually real-rooted
    assert_eq!(rat(4, 1) * &scalars.b_at_xa, rat(16, 1));
    assert!(
        !report.real_rooted_necessary,
        "ACCEPTANCE 7: FAIL — ladder cannot satisfy the real-rooted necessary condition"
    );
    // by hand: lead = 80 > 0, |x_Delta|^2 = const/lead = 4/80 <= 1, |x_A| = 1/2 <= 1
    assert_eq!(scalars.lead, rat(80, 1));
    let (_, _, konst) = spec.delta_coeffs();
    assert!(konst.clone() / &scalars.lead <= rat(1, 1));
    assert!(
        report.schur_necessary,
        "ACCEPTANCE 7: FAIL — ladder must satisfy the Schur necessary condition"
    );

    let elapsed = start.elapsed();
    assert_runtime("7", elapsed, Duration::from_secs(1));
    println!("ACCEPTANCE 7 (stability checkers): PASS — in {elapsed:?}");
}

#[test]
fn a8_byte_identical_outputs() {
    let run = |args: &[&str]| -> Vec<u8> {
        let out = binary().args(args).output().expect("binary runs");
        assert!(out.status.success(), "command {args:?} failed");
        out.stdout
    };
    let ladder_path = fixture("ladder.json");

    let c1 = run(&["classify", &ladder_path]);
    let c2 = run(&["classify", &ladder_path]);
    assert_eq!(c1, c2, "ACCEPTANCE 8: FAIL — classify output differs across runs");

    let r1 = run(&["roots", &ladder_path, "--n", "6"]);
    let r2 = run(&["roots", &ladder_path, "--n", "6"]);
    assert_eq!(r1, r2, "ACCEPTANCE 8: FAIL — roots output differs across runs");

    let dir = std::env::temp_dir();
    let p1 = dir.join("limzero_accept_plot_1.svg");
    let p2 = dir.join("limzero_accept_plot_2.svg");
    run(&["plot", &ladder_path, "--n", "6", "-o", p1.to_str().unwrap()]);
    run(&["plot", &ladder_path, "--n", "6", "-o", p2.to_str().unwrap()]);
    let f1 = std::fs::read(&p1).expect("plot output exists");
    let f2 = std::fs::read(&p2).expect("plot output exists");
    assert!(!f1.is_empty());
    assert_eq!(f1, f2, "ACCEPTANCE 8: FAIL — plot output differs across runs");
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);

    println!("ACCEPTANCE 8 (byte-identical outputs): PASS");
}
