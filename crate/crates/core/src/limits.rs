//! Exact classification of the limit sets of zeros.
//!
//! For a general sequence the set of non-isolated limits of zeros is one of
//! six geometric shapes (arc, circle, vertical line or segment, subsets of
//! the real line, and certain unions); which one occurs is decided entirely
//! by rational sign tests on a handful of exact scalars, because the
//! classification is discontinuous in the coefficients. Floating point
//! appears only in the emitted geometry. The finite set of isolated limits
//! is obtained by filtering the roots of `g = W1^2 - A W0 W1 - B W0^2`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactpoly::{rat, rational_to_f64, CPoint, Rational};
use crate::recurrence::{GeneralityReport, RecurrenceError, RecurrenceSpec};
use crate::rootfind::{find_roots, RootFindOptions};
use crate::spectra::{spectral_point, SpectralParams};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LimitsError {
    /// The generality assumptions fail, so the classification does not
    /// apply. The report says which assumption broke.
    #[error("sequence is not general: {0:?}")]
    NotGeneral(GeneralityReport),
    #[error(transparent)]
    Invalid(#[from] RecurrenceError),
}

/// The exact scalars driving every classification branch.
///
/// `delta_b = d^2 - 4ce`, `delta_delta = 16 (delta_b - a^2 B(x_A))` (equal to
/// the discriminant of `Delta` itself), `lead = a^2 + 4c`, `mid = 2ab + 4d`.
/// `r = B(x_A)/B'(x_A)` and `x_c = x_A - 2r` are absent iff `B'(x_A) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationScalars {
    pub x_a: Rational,
    pub b_at_xa: Rational,
    pub bprime_at_xa: Rational,
    pub delta_b: Rational,
    pub delta_delta: Rational,
    pub lead: Rational,
    pub mid: Rational,
    pub r: Option<Rational>,
    pub x_c: Option<Rational>,
}

/// Circular arc symmetric about the real axis, stored as its circle plus the
/// conjugate endpoint pair and the real point the arc passes through.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcShape {
    /// Real center of the carrying circle.
    pub center: f64,
    pub radius: f64,
    /// Endpoint with positive imaginary part.
    pub end_plus: CPoint,
    /// Conjugate of `end_plus`.
    pub end_minus: CPoint,
    /// The real point on the arc: `x_A` or `x_C`.
    pub through: f64,
}

/// Subset of the real line that `{x : Delta(x) <= 0}` can take.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RealSubset {
    FullLine,
    Interval { lo: f64, hi: f64 },
    /// `(-inf, endpoint]` when `toward_minus_infinity`, else `[endpoint, inf)`.
    Ray { endpoint: f64, toward_minus_infinity: bool },
    /// `(-inf, lo_end] U [hi_end, inf)`.
    TwoRays { lo_end: f64, hi_end: f64 },
}

/// The classified set of non-isolated limits of zeros. Every variant is
/// symmetric about the real axis.
#[derive(Debug, Clone, PartialEq)]
pub enum LimitSet {
    Arc(ArcShape),
    /// Degenerate arc: segment from `(x, -y_half)` to `(x, y_half)`.
    VerticalSegment { x: f64, y_half: f64 },
    ArcUnionReal { arc: ArcShape },
    /// Degenerate arc-union: `{x + iy : |y| >= y_half}` together with the
    /// real line.
    TwoVerticalRaysUnionReal { x: f64, y_half: f64 },
    Real(RealSubset),
    RealUnionCircle {
        real: RealSubset,
        circle_center: f64,
        circle_radius: f64,
    },
    RealUnionVerticalLine { real: RealSubset, x: f64 },
    Circle { center: f64, radius: f64 },
    VerticalLine { x: f64 },
}

/// One root of `g` that survived (or sits on the boundary of) the
/// isolated-limit filter `Re(W1 conj(A)/W0) < |A|^2 / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsolatedLimit {
    pub z: CPoint,
    /// `Re(W1(z) conj(A(z)) / W0(z))`.
    pub filter_lhs: f64,
    /// `|A(z)|^2 / 2`.
    pub filter_rhs: f64,
    /// `filter_rhs - filter_lhs`; accepted points have `margin > 0`.
    pub margin: f64,
    /// Within the acceptance tolerance band of the strict inequality, or the
    /// `W0` magnitude guard tripped; reported but not accepted.
    pub ambiguous: bool,
}

/// Necessary conditions for the sequence to be eventually real-rooted,
/// Hurwitz, or Schur stable. Never sufficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub real_rooted_necessary: bool,
    pub hurwitz_necessary: bool,
    pub schur_necessary: bool,
    pub details: String,
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Computes the exact branch scalars for a spec with `a != 0`.
pub fn classification_scalars(spec: &RecurrenceSpec) -> ClassificationScalars {
    let x_a = spec.x_a();
    let b_poly = spec.b_poly();
    let b_at_xa = b_poly.eval_rational(&x_a);
    let bprime_at_xa = b_poly.derivative().eval_rational(&x_a);
    let delta_b = &spec.d * &spec.d - rat(4, 1) * &spec.c * &spec.e;
    let delta_delta = rat(16, 1) * (&delta_b - &spec.a * &spec.a * &b_at_xa);
    let (lead, mid, _) = spec.delta_coeffs();
    let (r, x_c) = if bprime_at_xa.is_zero() {
        (None, None)
    } else {
        let r = &b_at_xa / &bprime_at_xa;
        let x_c = &x_a - rat(2, 1) * &r;
        (Some(r), Some(x_c))
    };
    ClassificationScalars {
        x_a,
        b_at_xa,
        bprime_at_xa,
        delta_b,
        delta_delta,
        lead,
        mid,
        r,
        x_c,
    }
}

/// How `{x in R : Delta(x) <= 0}` resolves once `delta_delta >= 0`.
enum JDelta {
    Empty,
    /// Double real root of `Delta`; always absorbed by the circle or line.
    Singleton,
    Set(RealSubset),
}

fn j_delta(spec: &RecurrenceSpec, scalars: &ClassificationScalars) -> JDelta {
    let (lead, mid, konst) = spec.delta_coeffs();
    let dd = &scalars.delta_delta;
    match (sign(&lead), sign(&mid)) {
        (1, _) => {
            if dd.is_zero() {
                JDelta::Singleton
            } else {
                let (lo, hi) = real_quadratic_roots(&lead, &mid, &konst, dd);
                JDelta::Set(RealSubset::Interval { lo, hi })
            }
        }
        (-1, _) => {
            if dd.is_zero() {
                // downward parabola touching zero: nonpositive everywhere
                JDelta::Set(RealSubset::FullLine)
            } else {
                let (lo, hi) = real_quadratic_roots(&lead, &mid, &konst, dd);
                JDelta::Set(RealSubset::TwoRays {
                    lo_end: lo,
                    hi_end: hi,
                })
            }
        }
        (0, ms) if ms != 0 => {
            let endpoint = rational_to_f64(&(-&konst / &mid));
            JDelta::Set(RealSubset::Ray {
                endpoint,
                toward_minus_infinity: ms > 0,
            })
        }
        (0, 0) => match sign(&konst) {
            -1 => JDelta::Set(RealSubset::FullLine),
            1 => JDelta::Empty,
            _ => unreachable!("Delta identically zero is rejected by the validator"),
        },
        _ => unreachable!(),
    }
}

/// Both real roots of `lead x^2 + mid x + konst` (`lead != 0`,
/// discriminant `dd > 0`), via the cancellation-safe quadratic formula.
fn real_quadratic_roots(
    lead: &Rational,
    mid: &Rational,
    konst: &Rational,
    dd: &Rational,
) -> (f64, f64) {
    let lead_f = rational_to_f64(lead);
    let mid_f = rational_to_f64(mid);
    let konst_f = rational_to_f64(konst);
    let s = rational_to_f64(dd).sqrt();
    let q = if mid_f >= 0.0 {
        -(mid_f + s) / 2.0
    } else {
        (-mid_f + s) / 2.0
    };
    let r1 = q / lead_f;
    let r2 = if konst_f == 0.0 { 0.0 } else { konst_f / q };
    (r1.min(r2), r1.max(r2))
}

/// Classifies the set of non-isolated limits of zeros. The branch is chosen
/// by exact rational sign tests on `delta_delta`, `lead`, `B(x_A)` and
/// `B'(x_A)`; only the emitted geometry is floating point.
pub fn classify(spec: &RecurrenceSpec) -> Result<(ClassificationScalars, LimitSet), LimitsError> {
    let report = spec.validate()?;
    if !report.is_general() {
        return Err(LimitsError::NotGeneral(report));
    }
    let scalars = classification_scalars(spec);
    let x_a_f = rational_to_f64(&scalars.x_a);

    let set = if sign(&scalars.delta_delta) < 0 {
        // a^2 + 4c = 0 forces delta_delta >= 0, so lead has a strict sign here
        let lead_sign = sign(&scalars.lead);
        debug_assert!(lead_sign != 0);
        let x_delta = -(&spec.a * &spec.b + rat(2, 1) * &spec.d) / &scalars.lead;
        let y_delta = rational_to_f64(&(-&scalars.delta_delta)).sqrt()
            / (2.0 * rational_to_f64(&scalars.lead).abs());
        let xd = rational_to_f64(&x_delta);
        let end_plus = CPoint::new(xd, y_delta);
        match (&scalars.r, lead_sign) {
            (Some(r), 1) => LimitSet::Arc(make_arc(&scalars.x_a, r, end_plus, x_a_f)),
            (Some(r), _) => {
                let through = rational_to_f64(scalars.x_c.as_ref().unwrap());
                LimitSet::ArcUnionReal {
                    arc: make_arc(&scalars.x_a, r, end_plus, through),
                }
            }
            (None, 1) => LimitSet::VerticalSegment {
                x: x_a_f,
                y_half: y_delta,
            },
            (None, _) => LimitSet::TwoVerticalRaysUnionReal {
                x: x_a_f,
                y_half: y_delta,
            },
        }
    } else {
        match sign(&scalars.b_at_xa) {
            -1 => match j_delta(spec, &scalars) {
                JDelta::Set(rs) => LimitSet::Real(rs),
                // B(x_A) < 0 means Delta(x_A) < 0, so J is never empty or a point
                _ => unreachable!("J_Delta degenerate with B(x_A) < 0"),
            },
            1 => {
                let j = j_delta(spec, &scalars);
                match &scalars.r {
                    Some(r) => {
                        let center = rational_to_f64(&(&scalars.x_a - r));
                        let radius = rational_to_f64(&r.abs());
                        match j {
                            JDelta::Empty | JDelta::Singleton => {
                                LimitSet::Circle { center, radius }
                            }
                            JDelta::Set(rs) => LimitSet::RealUnionCircle {
                                real: rs,
                                circle_center: center,
                                circle_radius: radius,
                            },
                        }
                    }
                    None => match j {
                        JDelta::Empty | JDelta::Singleton => LimitSet::VerticalLine { x: x_a_f },
                        JDelta::Set(rs) => LimitSet::RealUnionVerticalLine { real: rs, x: x_a_f },
                    },
                }
            }
            _ => unreachable!("generality guarantees B(x_A) != 0"),
        }
    };
    Ok((scalars, set))
}

fn make_arc(x_a: &Rational, r: &Rational, end_plus: CPoint, through: f64) -> ArcShape {
    ArcShape {
        center: rational_to_f64(&(x_a - r)),
        radius: rational_to_f64(&r.abs()),
        end_plus,
        end_minus: end_plus.conj(),
        through,
    }
}

impl ArcShape {
    /// Endpoint angle measured from the center, in `(0, pi)`.
    fn end_angle(&self) -> f64 {
        (self.end_plus.im).atan2(self.end_plus.re - self.center)
    }

    /// Whether the arc crosses the real axis to the right of the center.
    fn through_right(&self) -> bool {
        self.through >= self.center
    }

    pub fn distance(&self, z: CPoint) -> f64 {
        let dx = z.re - self.center;
        let dy = z.im;
        let phi = dy.atan2(dx);
        let theta = self.end_angle();
        let on_arc = if self.through_right() {
            phi.abs() <= theta
        } else {
            phi.abs() >= theta
        };
        if on_arc {
            (dx.hypot(dy) - self.radius).abs()
        } else {
            let dp = (z - self.end_plus).norm();
            let dm = (z - self.end_minus).norm();
            dp.min(dm)
        }
    }
}

impl RealSubset {
    pub fn distance(&self, z: CPoint) -> f64 {
        let dx = match *self {
            RealSubset::FullLine => 0.0,
            RealSubset::Interval { lo, hi } => (lo - z.re).max(z.re - hi).max(0.0),
            RealSubset::Ray {
                endpoint,
                toward_minus_infinity,
            } => {
                if toward_minus_infinity {
                    (z.re - endpoint).max(0.0)
                } else {
                    (endpoint - z.re).max(0.0)
                }
            }
            RealSubset::TwoRays { lo_end, hi_end } => {
                if z.re <= lo_end || z.re >= hi_end {
                    0.0
                } else {
                    (z.re - lo_end).min(hi_end - z.re)
                }
            }
        };
        dx.hypot(z.im)
    }
}

fn circle_distance(center: f64, radius: f64, z: CPoint) -> f64 {
    ((z.re - center).hypot(z.im) - radius).abs()
}

fn segment_distance(x: f64, y_half: f64, z: CPoint) -> f64 {
    let dy = (z.im.abs() - y_half).max(0.0);
    (z.re - x).hypot(dy)
}

fn two_rays_distance(x: f64, y_half: f64, z: CPoint) -> f64 {
    let dy = (y_half - z.im.abs()).max(0.0);
    (z.re - x).hypot(dy)
}

/// Euclidean distance from `z` to the classified point set.
pub fn distance_to(set: &LimitSet, z: CPoint) -> f64 {
    match set {
        LimitSet::Arc(arc) => arc.distance(z),
        LimitSet::VerticalSegment { x, y_half } => segment_distance(*x, *y_half, z),
        LimitSet::ArcUnionReal { arc } => arc.distance(z).min(z.im.abs()),
        LimitSet::TwoVerticalRaysUnionReal { x, y_half } => {
            two_rays_distance(*x, *y_half, z).min(z.im.abs())
        }
        LimitSet::Real(rs) => rs.distance(z),
        LimitSet::RealUnionCircle {
            real,
            circle_center,
            circle_radius,
        } => real
            .distance(z)
            .min(circle_distance(*circle_center, *circle_radius, z)),
        LimitSet::RealUnionVerticalLine { real, x } => {
            real.distance(z).min((z.re - x).abs())
        }
        LimitSet::Circle { center, radius } => circle_distance(*center, *radius, z),
        LimitSet::VerticalLine { x } => (z.re - x).abs(),
    }
}

/// `| |lambda_+(z)| - |lambda_-(z)| |`; zero exactly on the set of
/// non-isolated limits.
pub fn membership_residual(spec: &RecurrenceSpec, z: CPoint) -> f64 {
    spectral_point(spec, z).residual
}

/// Roots of `g` that pass (or graze) the isolated-limit filter.
///
/// All roots are found numerically; each is accepted iff
/// `margin = |A|^2/2 - Re(W1 conj(A)/W0)` exceeds the tolerance
/// `1e-8 (1 + |A|^2)`. Points within the tolerance band, and points where
/// the `W0` magnitude guard trips, are reported with `ambiguous = true` and
/// belong to no accepted list.
pub fn isolated_limits(spec: &RecurrenceSpec) -> Result<Vec<IsolatedLimit>, LimitsError> {
    let report = spec.validate()?;
    if !report.is_general() {
        return Err(LimitsError::NotGeneral(report));
    }
    let g = spec.compute_g();
    if g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let roots = find_roots(&g, &RootFindOptions::default())
        .expect("g is nonzero for a general sequence");
    let params = SpectralParams::from_spec(spec);
    let w0_scale = rational_to_f64(&spec.w0.max_abs_coeff());
    let w0_deg = spec.w0.degree().unwrap_or(0) as i32;
    let prec = spec.w1.default_precision().max(spec.w0.default_precision());

    let mut out = Vec::new();
    for &z in &roots.roots {
        let a_val = params.a_at(z);
        let rhs = a_val.norm_sqr() / 2.0;
        let tol = 1e-8 * (1.0 + a_val.norm_sqr());
        let w0_val = spec.w0.eval_complex(z, prec);
        let guard = 1e-12 * (1.0 + z.norm()).powi(w0_deg) * w0_scale;
        if w0_val.norm() <= guard {
            // a near-common zero of W0 and g; cannot be a genuine isolated
            // limit for a general sequence, so report it as a boundary case
            out.push(IsolatedLimit {
                z,
                filter_lhs: rhs,
                filter_rhs: rhs,
                margin: 0.0,
                ambiguous: true,
            });
            continue;
        }
        let w1_val = spec.w1.eval_complex(z, prec);
        let lhs = (w1_val * a_val.conj() / w0_val).re;
        let margin = rhs - lhs;
        if margin > tol {
            out.push(IsolatedLimit {
                z,
                filter_lhs: lhs,
                filter_rhs: rhs,
                margin,
                ambiguous: false,
            });
        } else if margin.abs() <= tol {
            out.push(IsolatedLimit {
                z,
                filter_lhs: lhs,
                filter_rhs: rhs,
                margin,
                ambiguous: true,
            });
        }
    }
    Ok(out)
}

/// The accepted isolated-limit points from a filter result.
pub fn accepted_points(limits: &[IsolatedLimit]) -> Vec<CPoint> {
    limits
        .iter()
        .filter(|l| !l.ambiguous)
        .map(|l| l.z)
        .collect()
}

/// Necessary conditions for eventual real-rootedness, Hurwitz stability and
/// Schur stability of the sequence, each evaluated by exact rational sign
/// tests on the coefficients of `Delta` and on `x_A`.
pub fn stability_necessary(
    spec: &RecurrenceSpec,
    scalars: &ClassificationScalars,
    set: &LimitSet,
) -> StabilityReport {
    let (lead, mid, konst) = spec.delta_coeffs();
    // Delta(x_A) = A(x_A)^2 + 4 B(x_A) = 4 B(x_A)
    let delta_at_xa = rat(4, 1) * &scalars.b_at_xa;
    let delta_constant = lead.is_zero() && mid.is_zero();

    let real_rooted_necessary = sign(&delta_at_xa) < 0
        && ((delta_constant && sign(&konst) < 0) || sign(&scalars.delta_delta) >= 0);

    // roots of Delta lie in the closed left half-plane iff (with lead > 0)
    // the sum is nonpositive and the product nonnegative: mid >= 0, konst >= 0
    let hurwitz_necessary = sign(&lead) > 0
        && sign(&scalars.x_a) <= 0
        && sign(&mid) >= 0
        && sign(&konst) >= 0;

    // |x_A| <= 1 iff b^2 <= a^2; both roots of Delta in the closed unit disk
    // iff |konst| <= lead and |mid| <= lead + konst (exact Schur-Cohn test)
    let a_sq = &spec.a * &spec.a;
    let b_sq = &spec.b * &spec.b;
    let schur_necessary = sign(&lead) > 0
        && b_sq <= a_sq
        && konst.abs() <= lead
        && mid.abs() <= &lead + &konst;

    let details = format!(
        "shape={}; Delta(x_A)={}; Delta_Delta={}; lead={}; mid={}; const={}; x_A={}",
        shape_name(set),
        delta_at_xa,
        scalars.delta_delta,
        lead,
        mid,
        konst,
        scalars.x_a
    );
    StabilityReport {
        real_rooted_necessary,
        hurwitz_necessary,
        schur_necessary,
        details,
    }
}

/// Stable machine-readable tag for each shape.
pub fn shape_name(set: &LimitSet) -> &'static str {
    match set {
        LimitSet::Arc(_) => "arc",
        LimitSet::VerticalSegment { .. } => "vertical_segment",
        LimitSet::ArcUnionReal { .. } => "arc_union_real",
        LimitSet::TwoVerticalRaysUnionReal { .. } => "two_vertical_rays_union_real",
        LimitSet::Real(_) => "real_subset",
        LimitSet::RealUnionCircle { .. } => "real_subset_union_circle",
        LimitSet::RealUnionVerticalLine { .. } => "real_subset_union_vertical_line",
        LimitSet::Circle { .. } => "circle",
        LimitSet::VerticalLine { .. } => "vertical_line",
    }
}

impl LimitSet {
    pub fn shape_name(&self) -> &'static str {
        shape_name(self)
    }

    /// Finite landmark points: endpoints, centers, circle extremes, real
    /// interval ends. Used to derive view boxes for grids and figures.
    pub fn landmarks(&self) -> Vec<CPoint> {
        fn circle_pts(center: f64, radius: f64) -> Vec<CPoint> {
            vec![
                CPoint::new(center - radius, 0.0),
                CPoint::new(center + radius, 0.0),
                CPoint::new(center, radius),
                CPoint::new(center, -radius),
            ]
        }
        fn real_pts(rs: &RealSubset) -> Vec<CPoint> {
            match *rs {
                RealSubset::FullLine => vec![CPoint::new(0.0, 0.0)],
                RealSubset::Interval { lo, hi } => {
                    vec![CPoint::new(lo, 0.0), CPoint::new(hi, 0.0)]
                }
                RealSubset::Ray { endpoint, .. } => vec![CPoint::new(endpoint, 0.0)],
                RealSubset::TwoRays { lo_end, hi_end } => {
                    vec![CPoint::new(lo_end, 0.0), CPoint::new(hi_end, 0.0)]
                }
            }
        }
        match self {
            LimitSet::Arc(a) | LimitSet::ArcUnionReal { arc: a } => {
                let mut pts = circle_pts(a.center, a.radius);
                pts.push(a.end_plus);
                pts.push(a.end_minus);
                pts.push(CPoint::new(a.through, 0.0));
                pts
            }
            LimitSet::VerticalSegment { x, y_half }
            | LimitSet::TwoVerticalRaysUnionReal { x, y_half } => vec![
                CPoint::new(*x, *y_half),
                CPoint::new(*x, -*y_half),
                CPoint::new(*x, 0.0),
            ],
            LimitSet::Real(rs) => real_pts(rs),
            LimitSet::RealUnionCircle {
                real,
                circle_center,
                circle_radius,
            } => {
                let mut pts = circle_pts(*circle_center, *circle_radius);
                pts.extend(real_pts(real));
                pts
            }
            LimitSet::RealUnionVerticalLine { real, x } => {
                let mut pts = real_pts(real);
                pts.push(CPoint::new(*x, 0.0));
                pts
            }
            LimitSet::Circle { center, radius } => circle_pts(*center, *radius),
            LimitSet::VerticalLine { x } => vec![CPoint::new(*x, 0.0)],
        }
    }

    /// Deterministic sample points on the set: `per_component` per connected
    /// piece, keeping `endpoint_margin` away from arc/segment/interval ends,
    /// and truncating unbounded pieces at `extent` from their landmarks.
    pub fn sample_points(
        &self,
        per_component: usize,
        endpoint_margin: f64,
        extent: f64,
    ) -> Vec<CPoint> {
        let n = per_component.max(2);
        let linspace = |lo: f64, hi: f64| -> Vec<f64> {
            (0..n)
                .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
                .collect()
        };
        let arc_points = |a: &ArcShape| -> Vec<CPoint> {
            let theta = a.end_angle();
            let dm = (endpoint_margin / a.radius).min(theta / 4.0);
            let range = if a.through_right() {
                (-theta + dm, theta - dm)
            } else {
                (theta + dm, 2.0 * std::f64::consts::PI - theta - dm)
            };
            linspace(range.0, range.1)
                .into_iter()
                .map(|phi| {
                    CPoint::new(
                        a.center + a.radius * phi.cos(),
                        a.radius * phi.sin(),
                    )
                })
                .collect()
        };
        let circle_points = |center: f64, radius: f64| -> Vec<CPoint> {
            (0..n)
                .map(|k| {
                    let phi = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                    CPoint::new(center + radius * phi.cos(), radius * phi.sin())
                })
                .collect()
        };
        let real_points = |rs: &RealSubset| -> Vec<CPoint> {
            let xs = match *rs {
                RealSubset::FullLine => linspace(-extent, extent),
                RealSubset::Interval { lo, hi } => {
                    let m = endpoint_margin.min((hi - lo) / 4.0);
                    linspace(lo + m, hi - m)
                }
                RealSubset::Ray {
                    endpoint,
                    toward_minus_infinity,
                } => {
                    if toward_minus_infinity {
                        linspace(endpoint - extent, endpoint - endpoint_margin)
                    } else {
                        linspace(endpoint + endpoint_margin, endpoint + extent)
                    }
                }
                RealSubset::TwoRays { lo_end, hi_end } => {
                    let mut xs = linspace(lo_end - extent, lo_end - endpoint_margin);
                    xs.extend(linspace(hi_end + endpoint_margin, hi_end + extent));
                    xs
                }
            };
            xs.into_iter().map(|x| CPoint::new(x, 0.0)).collect()
        };
        match self {
            LimitSet::Arc(a) => arc_points(a),
            LimitSet::ArcUnionReal { arc } => {
                let mut pts = arc_points(arc);
                pts.extend(
                    linspace(arc.center - extent, arc.center + extent)
                        .into_iter()
                        .map(|x| CPoint::new(x, 0.0)),
                );
                pts
            }
            LimitSet::VerticalSegment { x, y_half } => {
                let m = endpoint_margin.min(y_half / 4.0);
                linspace(-y_half + m, y_half - m)
                    .into_iter()
                    .map(|y| CPoint::new(*x, y))
                    .collect()
            }
            LimitSet::TwoVerticalRaysUnionReal { x, y_half } => {
                let mut pts: Vec<CPoint> = linspace(y_half + endpoint_margin, y_half + extent)
                    .into_iter()
                    .flat_map(|y| [CPoint::new(*x, y), CPoint::new(*x, -y)])
                    .collect();
                pts.extend(
                    linspace(x - extent, x + extent)
                        .into_iter()
                        .map(|xr| CPoint::new(xr, 0.0)),
                );
                pts
            }
            LimitSet::Real(rs) => real_points(rs),
            LimitSet::RealUnionCircle {
                real,
                circle_center,
                circle_radius,
            } => {
                let mut pts = circle_points(*circle_center, *circle_radius);
                pts.extend(real_points(real));
                pts
            }
            LimitSet::RealUnionVerticalLine { real, x } => {
                let mut pts: Vec<CPoint> = linspace(-extent, extent)
                    .into_iter()
                    .map(|y| CPoint::new(*x, y))
                    .collect();
                pts.extend(real_points(real));
                pts
            }
            LimitSet::Circle { center, radius } => circle_points(*center, *radius),
            LimitSet::VerticalLine { x } => linspace(-extent, extent)
                .into_iter()
                .map(|y| CPoint::new(*x, y))
                .collect(),
        }
    }
}
