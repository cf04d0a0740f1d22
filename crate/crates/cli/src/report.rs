//! Serializable report structures with a stable field order; rationals are
//! emitted as exact "p/q" strings and floats in shortest round-trip form.

use limzero::exactpoly::CPoint;
use limzero::limits::{
    ArcShape, ClassificationScalars, IsolatedLimit, LimitSet, RealSubset, StabilityReport,
};
use limzero::recurrence::{GeneralityReport, RecurrenceSpec};
use serde::Serialize;

#[derive(Serialize)]
pub struct CPointDto {
    pub re: f64,
    pub im: f64,
}

impl From<CPoint> for CPointDto {
    fn from(z: CPoint) -> Self {
        CPointDto { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
pub struct GeneralityDto {
    pub g_not_identically_zero: bool,
    pub a_b_coprime: bool,
    pub w0_w1_coprime: bool,
    pub delta_not_identically_zero: bool,
    pub is_general: bool,
}

impl From<&GeneralityReport> for GeneralityDto {
    fn from(r: &GeneralityReport) -> Self {
        GeneralityDto {
            g_not_identically_zero: r.g_not_identically_zero,
            a_b_coprime: r.a_b_coprime,
            w0_w1_coprime: r.w0_w1_coprime,
            delta_not_identically_zero: r.delta_not_identically_zero,
            is_general: r.is_general(),
        }
    }
}

#[derive(Serialize)]
pub struct ScalarsDto {
    #[serde(rename = "x_A")]
    pub x_a: String,
    #[serde(rename = "B_at_xA")]
    pub b_at_xa: String,
    #[serde(rename = "Bprime_at_xA")]
    pub bprime_at_xa: String,
    #[serde(rename = "Delta_B")]
    pub delta_b: String,
    #[serde(rename = "Delta_Delta")]
    pub delta_delta: String,
    pub lead: String,
    pub mid: String,
    pub r: Option<String>,
    #[serde(rename = "x_C")]
    pub x_c: Option<String>,
}

impl From<&ClassificationScalars> for ScalarsDto {
    fn from(s: &ClassificationScalars) -> Self {
        ScalarsDto {
            x_a: s.x_a.to_string(),
            b_at_xa: s.b_at_xa.to_string(),
            bprime_at_xa: s.bprime_at_xa.to_string(),
            delta_b: s.delta_b.to_string(),
            delta_delta: s.delta_delta.to_string(),
            lead: s.lead.to_string(),
            mid: s.mid.to_string(),
            r: s.r.as_ref().map(|v| v.to_string()),
            x_c: s.x_c.as_ref().map(|v| v.to_string()),
        }
    }
}

#[derive(Serialize)]
pub struct ArcDto {
    pub center: f64,
    pub radius: f64,
    pub end_plus: CPointDto,
    pub end_minus: CPointDto,
    pub through: f64,
}

impl From<&ArcShape> for ArcDto {
    fn from(a: &ArcShape) -> Self {
        ArcDto {
            center: a.center,
            radius: a.radius,
            end_plus: a.end_plus.into(),
            end_minus: a.end_minus.into(),
            through: a.through,
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealDto {
    FullLine,
    Interval { lo: f64, hi: f64 },
    Ray { endpoint: f64, direction: &'static str },
    TwoRays { lo_end: f64, hi_end: f64 },
}

impl From<&RealSubset> for RealDto {
    fn from(r: &RealSubset) -> Self {
        match *r {
            RealSubset::FullLine => RealDto::FullLine,
            RealSubset::Interval { lo, hi } => RealDto::Interval { lo, hi },
            RealSubset::Ray {
                endpoint,
                toward_minus_infinity,
            } => RealDto::Ray {
                endpoint,
                direction: if toward_minus_infinity {
                    "minus_infinity"
                } else {
                    "plus_infinity"
                },
            },
            RealSubset::TwoRays { lo_end, hi_end } => RealDto::TwoRays { lo_end, hi_end },
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum LimitSetDto {
    Arc(ArcDto),
    VerticalSegment {
        x: f64,
        y_half: f64,
    },
    ArcUnionReal {
        arc: ArcDto,
    },
    TwoVerticalRaysUnionReal {
        x: f64,
        y_half: f64,
    },
    RealSubset {
        real: RealDto,
    },
    RealSubsetUnionCircle {
        real: RealDto,
        circle_center: f64,
        circle_radius: f64,
    },
    RealSubsetUnionVerticalLine {
        real: RealDto,
        x: f64,
    },
    Circle {
        center: f64,
        radius: f64,
    },
    VerticalLine {
        x: f64,
    },
}

impl From<&LimitSet> for LimitSetDto {
    fn from(set: &LimitSet) -> Self {
        match set {
            LimitSet::Arc(a) => LimitSetDto::Arc(a.into()),
            LimitSet::VerticalSegment { x, y_half } => LimitSetDto::VerticalSegment {
                x: *x,
                y_half: *y_half,
            },
            LimitSet::ArcUnionReal { arc } => LimitSetDto::ArcUnionReal { arc: arc.into() },
            LimitSet::TwoVerticalRaysUnionReal { x, y_half } => {
                LimitSetDto::TwoVerticalRaysUnionReal {
                    x: *x,
                    y_half: *y_half,
                }
            }
            LimitSet::Real(rs) => LimitSetDto::RealSubset { real: rs.into() },
            LimitSet::RealUnionCircle {
                real,
                circle_center,
                circle_radius,
            } => LimitSetDto::RealSubsetUnionCircle {
                real: real.into(),
                circle_center: *circle_center,
                circle_radius: *circle_radius,
            },
            LimitSet::RealUnionVerticalLine { real, x } => {
                LimitSetDto::RealSubsetUnionVerticalLine {
                    real: real.into(),
                    x: *x,
                }
            }
            LimitSet::Circle { center, radius } => LimitSetDto::Circle {
                center: *center,
                radius: *radius,
            },
            LimitSet::VerticalLine { x } => LimitSetDto::VerticalLine { x: *x },
        }
    }
}

#[derive(Serialize)]
pub struct IsolatedDto {
    pub z: CPointDto,
    pub filter_lhs: f64,
    pub filter_rhs: f64,
    pub margin: f64,
    pub ambiguous: bool,
}

impl From<&IsolatedLimit> for IsolatedDto {
    fn from(l: &IsolatedLimit) -> Self {
        IsolatedDto {
            z: l.z.into(),
            filter_lhs: l.filter_lhs,
            filter_rhs: l.filter_rhs,
            margin: l.margin,
            ambiguous: l.ambiguous,
        }
    }
}

#[derive(Serialize)]
pub struct StabilityDto {
    pub real_rooted_necessary: bool,
    pub hurwitz_necessary: bool,
    pub schur_necessary: bool,
    pub details: String,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub general: bool,
    pub generality: GeneralityDto,
    pub scalars: ScalarsDto,
    /// Coefficients of Delta, ascending, as exact rational strings.
    pub delta: Vec<String>,
    pub limit_set: LimitSetDto,
    /// Accepted isolated limits.
    pub isolated: Vec<IsolatedDto>,
    /// Boundary cases of the isolated-limit filter, reported but not accepted.
    pub ambiguous: Vec<IsolatedDto>,
    pub stability: StabilityDto,
}

#[derive(Serialize)]
pub struct NotGeneralReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub general: bool,
    pub generality: GeneralityDto,
}

pub fn classify_report(
    spec: &RecurrenceSpec,
    label: Option<String>,
    report: &GeneralityReport,
    scalars: &ClassificationScalars,
    set: &LimitSet,
    isolated: &[IsolatedLimit],
    stability: &StabilityReport,
) -> ClassifyReport {
    let delta = limzero::spectra::discriminant(spec)
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    ClassifyReport {
        label,
        general: report.is_general(),
        generality: report.into(),
        scalars: scalars.into(),
        delta,
        limit_set: set.into(),
        isolated: isolated
            .iter()
            .filter(|l| !l.ambiguous)
            .map(IsolatedDto::from)
            .collect(),
        ambiguous: isolated
            .iter()
            .filter(|l| l.ambiguous)
            .map(IsolatedDto::from)
            .collect(),
        stability: StabilityDto {
            real_rooted_necessary: stability.real_rooted_necessary,
            hurwitz_necessary: stability.hurwitz_necessary,
            schur_necessary: stability.schur_necessary,
            details: stability.details.clone(),
        },
    }
}

#[derive(Serialize)]
pub struct CheckDto {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub checks: Vec<CheckDto>,
    pub passed: bool,
}
