//! End-to-end verification: grid scans comparing the classified limit set
//! against the pointwise `|lambda_+| = |lambda_-|` oracle and the secondary
//! `f(z) < -1` oracle, convergence-of-zeros reports across `n`, and exact
//! identity suites over randomly generated general specs.
//!
//! The tolerances in this module are engineering choices: the theory gives
//! no quantitative convergence rate, so every threshold is documented at its
//! point of use and reports carry raw numbers.

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactpoly::{rat, rational_to_f64, CPoint, RatPoly, Rational};
use crate::limits::{
    accepted_points, classification_scalars, classify, distance_to, isolated_limits, LimitSet,
    LimitsError,
};
use crate::recurrence::{GeneralityReport, RecurrenceSpec};
use crate::rootfind::{find_roots, RootFindOptions};
use crate::spectra::{alpha_pm, SpectralParams};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarnessError {
    #[error("sequence is not general: {0:?}")]
    NotGeneral(GeneralityReport),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl From<LimitsError> for HarnessError {
    fn from(e: LimitsError) -> Self {
        match e {
            LimitsError::NotGeneral(r) => HarnessError::NotGeneral(r),
            LimitsError::Invalid(err) => HarnessError::Precondition(err.to_string()),
        }
    }
}

/// Rectangular evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_lo: f64,
    pub x_hi: f64,
    pub y_lo: f64,
    pub y_hi: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn cell_diagonal(&self) -> f64 {
        let dx = (self.x_hi - self.x_lo) / (self.nx.max(2) - 1) as f64;
        let dy = (self.y_hi - self.y_lo) / (self.ny.max(2) - 1) as f64;
        dx.hypot(dy)
    }
}

/// Grid over the limit set's bounding box inflated by 50%, at least two
/// units across in each direction.
pub fn default_grid(set: &LimitSet, resolution: usize) -> GridSpec {
    let landmarks = set.landmarks();
    let mut x_lo = f64::INFINITY;
    let mut x_hi = f64::NEG_INFINITY;
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for p in &landmarks {
        x_lo = x_lo.min(p.re);
        x_hi = x_hi.max(p.re);
        y_lo = y_lo.min(p.im);
        y_hi = y_hi.max(p.im);
    }
    let ensure_span = |lo: &mut f64, hi: &mut f64| {
        let mid = (*lo + *hi) / 2.0;
        let half = ((*hi - *lo) / 2.0).max(1.0) * 1.5;
        *lo = mid - half;
        *hi = mid + half;
    };
    ensure_span(&mut x_lo, &mut x_hi);
    ensure_span(&mut y_lo, &mut y_hi);
    GridSpec {
        x_lo,
        x_hi,
        y_lo,
        y_hi,
        nx: resolution,
        ny: resolution,
    }
}

/// Result of one grid scan.
///
/// A grid point is oracle-positive when its membership residual is below
/// what a point one cell diagonal away from the residual's zero set would
/// show: `local_slope * diagonal`, floored by a float-noise guard
/// `1e-12 (1 + |lambda_+|^2 + |lambda_-|^2)`. The slope calibration is what
/// makes "positive implies near the set" true for every general spec: any
/// fixed residual threshold fails for near-degenerate specs whose residual
/// field is almost flat (B'(x_A) near zero produces huge circles with
/// residual slopes around 1e-5). Positives farther than two cell diagonals
/// from the classified set are false negatives of the classification;
/// positives on which the secondary `A Delta = 0 or f < -1` oracle
/// disagrees are false positives.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleScan {
    pub grid: GridSpec,
    pub false_negatives: Vec<CPoint>,
    pub false_positives: Vec<CPoint>,
    pub passed: bool,
}

/// Points where the residual vanishes for several reasons at once are
/// excluded from the scan inside this radius: zeros of `A` and `Delta`,
/// accepted isolated limits, and `x_C` where a circle or arc crosses the
/// real part of the set (the residual gradient degenerates at crossings).
const CLIP_RADIUS: f64 = 1e-2;

fn clip_points(spec: &RecurrenceSpec) -> Vec<CPoint> {
    let scalars = classification_scalars(spec);
    let mut pts = vec![CPoint::new(rational_to_f64(&scalars.x_a), 0.0)];
    if let Some(x_c) = &scalars.x_c {
        pts.push(CPoint::new(rational_to_f64(x_c), 0.0));
    }
    let delta = crate::spectra::discriminant(spec);
    if delta.degree().is_some_and(|d| d >= 1) {
        if let Ok(rs) = find_roots(&delta, &RootFindOptions::default()) {
            pts.extend(rs.roots);
        }
    }
    if let Ok(iso) = isolated_limits(spec) {
        pts.extend(accepted_points(&iso));
    }
    pts
}

pub fn scan_oracle(
    spec: &RecurrenceSpec,
    set: &LimitSet,
    grid: &GridSpec,
) -> Result<OracleScan, HarnessError> {
    let report = spec.validate().map_err(LimitsError::from)?;
    if !report.is_general() {
        return Err(HarnessError::NotGeneral(report));
    }
    if grid.nx < 64 || grid.ny < 64 {
        return Err(HarnessError::Precondition(format!(
            "grid resolution {}x{} below the 64x64 minimum",
            grid.nx, grid.ny
        )));
    }
    let params = SpectralParams::from_spec(spec);
    let clips = clip_points(spec);
    let clip_radius = CLIP_RADIUS.max(3.0 * grid.cell_diagonal());
    let dist_threshold = 2.0 * grid.cell_diagonal();
    let mut false_negatives = Vec::new();
    let mut false_positives = Vec::new();

    let diag = grid.cell_diagonal();
    let h = diag / 2.0;
    for iy in 0..grid.ny {
        let y = grid.y_lo + (grid.y_hi - grid.y_lo) * iy as f64 / (grid.ny - 1) as f64;
        for ix in 0..grid.nx {
            let x = grid.x_lo + (grid.x_hi - grid.x_lo) * ix as f64 / (grid.nx - 1) as f64;
            let z = CPoint::new(x, y);
            if clips.iter().any(|c| (z - c).norm() < clip_radius) {
                continue;
            }
            let sp = params.point(z);
            let lambda_max = sp.lambda_plus.norm().max(sp.lambda_minus.norm());
            // cheap screen before estimating the local slope
            if sp.residual >= 10.0 * (1.0 + lambda_max) * diag {
                continue;
            }
            let slope = [
                CPoint::new(h, 0.0),
                CPoint::new(-h, 0.0),
                CPoint::new(0.0, h),
                CPoint::new(0.0, -h),
            ]
            .iter()
            .map(|&dz| (params.point(z + dz).residual - sp.residual).abs() / h)
            .fold(0.0f64, f64::max);
            let noise_floor =
                1e-12 * (1.0 + sp.lambda_plus.norm_sqr() + sp.lambda_minus.norm_sqr());
            if sp.residual >= (slope * diag).max(noise_floor) {
                continue;
            }
            if distance_to(set, z) > dist_threshold {
                false_negatives.push(z);
            }
            if !second_oracle_agrees(&params, z, &sp, h, diag) {
                false_positives.push(z);
            }
        }
    }
    let passed = false_negatives.is_empty() && false_positives.is_empty();
    Ok(OracleScan {
        grid: *grid,
        false_negatives,
        false_positives,
        passed,
    })
}

/// Secondary membership oracle: `A(z) Delta(z) = 0` or `f(z) = 4B/A^2` real
/// and below -1. Oracle-positive points sit within about one cell diagonal
/// of the residual zero set, so `f` is compared against its own variation
/// over that distance, estimated from the same axis neighbors.
fn second_oracle_agrees(
    params: &SpectralParams,
    z: CPoint,
    sp: &crate::spectra::SpectralPoint,
    h: f64,
    diag: f64,
) -> bool {
    let a_scale = 1.0 + sp.a_val.norm();
    let d_scale = 1.0 + sp.delta_val.norm();
    if sp.a_val.norm() * sp.delta_val.norm() < 1e-3 * a_scale * d_scale * (1.0 + z.norm()) * 1e-2 {
        return true;
    }
    let f_at = |w: CPoint| -> CPoint {
        let a = params.a_at(w);
        params.b_at(w) * 4.0 / (a * a)
    };
    let f = f_at(z);
    if !f.re.is_finite() || !f.im.is_finite() {
        return true; // next to a zero of A; the product test above governs
    }
    let f_slope = [
        CPoint::new(h, 0.0),
        CPoint::new(-h, 0.0),
        CPoint::new(0.0, h),
        CPoint::new(0.0, -h),
    ]
    .iter()
    .map(|&dz| {
        let fn_val = f_at(z + dz);
        if fn_val.re.is_finite() && fn_val.im.is_finite() {
            (fn_val - f).norm() / h
        } else {
            f64::INFINITY
        }
    })
    .fold(0.0f64, f64::max);
    // positives are at most two cell diagonals from the set
    let tol = f_slope * 2.0 * diag + 1e-9 * (1.0 + f.norm());
    f.im.abs() <= tol && f.re <= -1.0 + tol
}

/// Distance statistics of the roots of one `W_n` against the union of the
/// classified set and the accepted isolated limits.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceEntry {
    pub n: usize,
    pub max_dist: f64,
    pub mean_dist: f64,
    pub num_roots: usize,
    /// Roots strictly closer to an accepted isolated limit than to the set.
    pub num_near_isolated: usize,
    /// Root finder convergence flag for this `n`; a false value is reported,
    /// never raised as an error.
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub per_n: Vec<ConvergenceEntry>,
    /// Whether `max_dist` is non-increasing over the last three entries.
    pub monotone_tail: bool,
}

pub fn convergence_report(
    spec: &RecurrenceSpec,
    n_values: &[usize],
) -> Result<ConvergenceReport, HarnessError> {
    if n_values.is_empty() {
        return Err(HarnessError::Precondition("empty n_values".into()));
    }
    if n_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HarnessError::Precondition(
            "n_values must be strictly ascending".into(),
        ));
    }
    if n_values[0] < 2 {
        return Err(HarnessError::Precondition("each n must be >= 2".into()));
    }
    let (_, set) = classify(spec)?;
    let isolated = accepted_points(&isolated_limits(spec)?);
    let mut per_n = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let poly = spec.nth_poly(n);
        let roots = find_roots(&poly, &RootFindOptions::default())
            .expect("W_n of a general sequence is nonzero");
        let mut max_dist = 0.0f64;
        let mut sum = 0.0f64;
        let mut near_isolated = 0usize;
        for &r in &roots.roots {
            let d_set = distance_to(&set, r);
            let d_iso = isolated
                .iter()
                .map(|&s| (r - s).norm())
                .fold(f64::INFINITY, f64::min);
            if d_iso < d_set {
                near_isolated += 1;
            }
            let d = d_set.min(d_iso);
            max_dist = max_dist.max(d);
            sum += d;
        }
        per_n.push(ConvergenceEntry {
            n,
            max_dist,
            mean_dist: sum / roots.roots.len().max(1) as f64,
            num_roots: roots.roots.len(),
            num_near_isolated: near_isolated,
            converged: roots.converged,
        });
    }
    let tail = per_n.iter().rev().take(3).collect::<Vec<_>>();
    let monotone_tail = tail.windows(2).all(|w| w[0].max_dist <= w[1].max_dist);
    Ok(ConvergenceReport {
        per_n,
        monotone_tail,
    })
}

/// One failed check of the identity suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteFailure {
    pub spec_index: usize,
    pub spec: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub total: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> RatPoly {
    loop {
        let deg = rng.gen_range(0..=2usize);
        let coeffs: Vec<Rational> = (0..=deg).map(|_| random_rational(rng)).collect();
        let p = RatPoly::from_rationals(&coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Rejection-samples a random general spec with small rational coefficients
/// (numerators and denominators within [-20, 20]).
pub fn random_general_spec(rng: &mut ChaCha8Rng) -> RecurrenceSpec {
    loop {
        let spec = RecurrenceSpec::new(
            random_nonzero_rational(rng),
            random_rational(rng),
            random_nonzero_rational(rng),
            random_rational(rng),
            random_rational(rng),
            random_poly(rng),
            random_poly(rng),
        );
        if let Ok(report) = spec.validate() {
            if report.is_general() {
                return spec;
            }
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> CPoint {
    CPoint::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
}

/// Runs every exact identity and pointwise identity for a single general
/// spec; returns the failures.
pub fn check_spec_identities(
    spec: &RecurrenceSpec,
    spec_index: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<SuiteFailure> {
    let mut failures = Vec::new();
    let fail = |check: &'static str, detail: String| SuiteFailure {
        spec_index,
        spec: format!(
            "a={} b={} c={} d={} e={} W0={} W1={}",
            spec.a, spec.b, spec.c, spec.d, spec.e, spec.w0, spec.w1
        ),
        check,
        detail,
    };

    let (scalars, set) = match classify(spec) {
        Ok(v) => v,
        Err(e) => {
            failures.push(fail("classify", format!("{e}")));
            return failures;
        }
    };
    let (lead, mid, konst) = spec.delta_coeffs();

    // discriminant route: Delta_Delta must equal mid^2 - 4 lead const exactly
    let disc = &mid * &mid - rat(4, 1) * &lead * &konst;
    if scalars.delta_delta != disc {
        failures.push(fail(
            "delta_delta_identity",
            format!("{} != {}", scalars.delta_delta, disc),
        ));
    }

    // (x_A - x_C)(x_A - x_Delta) = 4 B(x_A) / lead, exact, when defined
    if !lead.is_zero() {
        if let Some(x_c) = &scalars.x_c {
            let x_delta = -(&spec.a * &spec.b + rat(2, 1) * &spec.d) / &lead;
            let lhs = (&scalars.x_a - x_c) * (&scalars.x_a - &x_delta);
            let rhs = rat(4, 1) * &scalars.b_at_xa / &lead;
            if lhs != rhs {
                failures.push(fail("vertex_identity", format!("{lhs} != {rhs}")));
            }
        }
    }

    // emitted endpoint data must agree with the exact quantities:
    // x of the endpoints is the rational vertex, y^2 = -Delta_Delta/(4 lead^2)
    if scalars.delta_delta.is_negative() {
        let endpoint = match &set {
            LimitSet::Arc(a) | LimitSet::ArcUnionReal { arc: a } => Some(a.end_plus),
            LimitSet::VerticalSegment { x, y_half }
            | LimitSet::TwoVerticalRaysUnionReal { x, y_half } => Some(CPoint::new(*x, *y_half)),
            _ => None,
        };
        if let Some(end) = endpoint {
            let x_exact = rational_to_f64(
                &(-(&spec.a * &spec.b + rat(2, 1) * &spec.d) / &lead),
            );
            let y_sq_exact =
                rational_to_f64(&(-&scalars.delta_delta / (rat(4, 1) * &lead * &lead)));
            let x_err = (end.re - x_exact).abs() / (1.0 + x_exact.abs());
            let y_err = (end.im * end.im - y_sq_exact).abs() / (1.0 + y_sq_exact.abs());
            if x_err > 1e-12 || y_err > 1e-12 {
                failures.push(fail(
                    "endpoint_accuracy",
                    format!("x_err={x_err:e} y_err={y_err:e}"),
                ));
            }
        }
    }

    let params = SpectralParams::from_spec(spec);

    // Vieta at random points
    for _ in 0..10 {
        let z = random_point(rng);
        let sp = params.point(z);
        let sum_err = (sp.lambda_plus + sp.lambda_minus - sp.a_val).norm();
        let prod_err = (sp.lambda_plus * sp.lambda_minus + sp.b_val).norm();
        if sum_err > 1e-10 * (1.0 + sp.a_val.norm()) || prod_err > 1e-10 * (1.0 + sp.b_val.norm())
        {
            failures.push(fail(
                "vieta",
                format!("z={z} sum_err={sum_err:e} prod_err={prod_err:e}"),
            ));
            break;
        }
    }

    // g(z) = -alpha_+ alpha_- Delta(z) at 50 random points away from Delta = 0
    let g = spec.compute_g();
    let g_prec = g.default_precision();
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 50 && attempts < 500 {
        attempts += 1;
        let z = random_point(rng);
        let (ap, am) = match alpha_pm(spec, z) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let sp = params.point(z);
        let lhs = g.eval_complex(z, g_prec);
        let rhs = -(ap * am * sp.delta_val);
        let w0 = spec.w0.eval_complex(z, spec.w0.default_precision());
        let h = spec
            .compute_h()
            .eval_complex(z, spec.compute_h().default_precision());
        let scale = lhs
            .norm()
            .max(rhs.norm())
            .max(w0.norm_sqr() * sp.delta_val.norm() / 4.0)
            .max(h.norm_sqr() / 4.0)
            .max(1e-30);
        if (lhs - rhs).norm() > 1e-9 * scale {
            failures.push(fail(
                "g_factorization",
                format!("z={z} |lhs-rhs|={:e} scale={scale:e}", (lhs - rhs).norm()),
            ));
            break;
        }
        checked += 1;
    }

    // Binet reconstruction for n <= 12 where Delta is bounded away from zero
    let delta_scale = rational_to_f64(&crate::spectra::discriminant(spec).max_abs_coeff()).abs();
    let mut binet_done = 0;
    let mut attempts = 0;
    while binet_done < 4 && attempts < 200 {
        attempts += 1;
        let z = random_point(rng);
        let sp = params.point(z);
        if sp.delta_val.norm() < 0.05 * (1.0 + z.norm_sqr()) * delta_scale.max(1e-30) {
            continue;
        }
        let (ap, am) = match alpha_pm(spec, z) {
            Ok(v) => v,
            Err(_) => continue,
        };
        for n in [2usize, 7, 12] {
            let wn = spec.nth_poly(n);
            let direct = wn.eval_complex(z, wn.default_precision());
            let mut lp = CPoint::new(1.0, 0.0);
            let mut lm = CPoint::new(1.0, 0.0);
            for _ in 0..n {
                lp *= sp.lambda_plus;
                lm *= sp.lambda_minus;
            }
            let closed = ap * lp + am * lm;
            let scale = ap.norm() * lp.norm() + am.norm() * lm.norm();
            if (direct - closed).norm() > 1e-6 * scale.max(1e-30) {
                failures.push(fail(
                    "binet",
                    format!(
                        "z={z} n={n} err={:e} scale={scale:e}",
                        (direct - closed).norm()
                    ),
                ));
                break;
            }
        }
        binet_done += 1;
    }

    // conjugate symmetry of the residual
    for _ in 0..5 {
        let z = random_point(rng);
        let r1 = params.point(z).residual;
        let r2 = params.point(z.conj()).residual;
        if (r1 - r2).abs() > 1e-12 * (1.0 + r1.abs()) {
            failures.push(fail("conjugate_symmetry", format!("z={z}")));
            break;
        }
    }

    // every sampled point of the classified set is oracle-positive
    let samples = set.sample_points(200, 1e-3, 5.0);
    for z in samples {
        let sp = params.point(z);
        let scale = sp.lambda_plus.norm().max(sp.lambda_minus.norm()).max(1.0);
        if sp.residual > 1e-6 * (1.0 + z.norm()) * scale {
            failures.push(fail(
                "set_on_oracle",
                format!("z={z} residual={:e} scale={scale:e}", sp.residual),
            ));
            break;
        }
    }

    // accepted isolated limits must null one alpha with the right dominance
    match isolated_limits(spec) {
        Ok(iso) => {
            for l in iso.iter().filter(|l| !l.ambiguous) {
                match alpha_pm(spec, l.z) {
                    Ok((ap, am)) => {
                        let sp = params.point(l.z);
                        let minus_ok = am.norm() < 1e-6 && sp.lambda_minus.norm() > sp.lambda_plus.norm();
                        let plus_ok = ap.norm() < 1e-6 && sp.lambda_plus.norm() > sp.lambda_minus.norm();
                        if !(minus_ok || plus_ok) {
                            failures.push(fail(
                                "isolated_alpha",
                                format!(
                                    "z={} |a+|={:e} |a-|={:e}",
                                    l.z,
                                    ap.norm(),
                                    am.norm()
                                ),
                            ));
                        }
                    }
                    Err(e) => failures.push(fail("isolated_alpha", format!("{e}"))),
                }
            }
            // conjugation closure of the reported multiset
            for l in &iso {
                if !iso.iter().any(|m| (m.z - l.z.conj()).norm() < 1e-6) {
                    failures.push(fail(
                        "isolated_conjugation",
                        format!("missing conjugate of {}", l.z),
                    ));
                }
            }
        }
        Err(e) => failures.push(fail("isolated_limits", format!("{e}"))),
    }

    failures
}

/// Generates `count` random general specs from the seed and asserts every
/// exact and pointwise identity on each.
pub fn identity_suite(corpus_seed: u64, count: usize) -> Result<SuiteResult, HarnessError> {
    if count == 0 {
        return Err(HarnessError::Precondition("count must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(corpus_seed);
    let mut failures = Vec::new();
    for i in 0..count {
        let spec = random_general_spec(&mut rng);
        failures.extend(check_spec_identities(&spec, i, &mut rng));
    }
    Ok(SuiteResult {
        total: count,
        failures,
    })
}
