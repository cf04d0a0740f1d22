//! Deterministic SVG figures: the roots of one sequence member as filled
//! balls, the classified limit set as a thick path, and accepted isolated
//! limits as diamond markers. No timestamps, no generated ids; identical
//! input produces byte-identical output.

use limzero::exactpoly::CPoint;
use limzero::limits::{ArcShape, LimitSet, RealSubset};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const SET_STYLE: &str = "fill=\"none\" stroke=\"#1a6faf\" stroke-width=\"4\" stroke-linecap=\"round\"";
const AXIS_STYLE: &str = "stroke=\"#b0b0b0\" stroke-width=\"1\"";

struct Viewport {
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Viewport {
    /// Bounding box of roots, isolated limits and the set's finite
    /// landmarks, padded by 20%; unbounded set components are later clipped
    /// to this box.
    fn new(set: &LimitSet, roots: &[CPoint], isolated: &[CPoint]) -> Viewport {
        let mut pts = set.landmarks();
        pts.extend_from_slice(roots);
        pts.extend_from_slice(isolated);
        let mut x_lo = f64::INFINITY;
        let mut x_hi = f64::NEG_INFINITY;
        let mut y_lo = f64::INFINITY;
        let mut y_hi = f64::NEG_INFINITY;
        for p in &pts {
            x_lo = x_lo.min(p.re);
            x_hi = x_hi.max(p.re);
            y_lo = y_lo.min(p.im);
            y_hi = y_hi.max(p.im);
        }
        let pad = |lo: &mut f64, hi: &mut f64| {
            let mid = (*lo + *hi) / 2.0;
            let half = ((*hi - *lo) / 2.0).max(0.1) * 1.2;
            *lo = mid - half;
            *hi = mid + half;
        };
        pad(&mut x_lo, &mut x_hi);
        pad(&mut y_lo, &mut y_hi);
        let margin = 20.0;
        let scale =
            ((WIDTH - 2.0 * margin) / (x_hi - x_lo)).min((HEIGHT - 2.0 * margin) / (y_hi - y_lo));
        let off_x = (WIDTH - scale * (x_hi - x_lo)) / 2.0;
        let off_y = (HEIGHT - scale * (y_hi - y_lo)) / 2.0;
        Viewport {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
            scale,
            off_x,
            off_y,
        }
    }

    fn px(&self, x: f64) -> f64 {
        self.off_x + (x - self.x_lo) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        self.off_y + (self.y_hi - y) * self.scale
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

fn line(out: &mut String, vp: &Viewport, x1: f64, y1: f64, x2: f64, y2: f64, style: &str) {
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n",
        fmt(vp.px(x1)),
        fmt(vp.py(y1)),
        fmt(vp.px(x2)),
        fmt(vp.py(y2)),
        style
    ));
}

fn circle_path(out: &mut String, vp: &Viewport, center: f64, radius: f64) {
    out.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>\n",
        fmt(vp.px(center)),
        fmt(vp.py(0.0)),
        fmt(radius * vp.scale),
        SET_STYLE
    ));
}

fn arc_path(out: &mut String, vp: &Viewport, arc: &ArcShape) {
    let theta = (arc.end_plus.im).atan2(arc.end_plus.re - arc.center);
    let (phi_lo, phi_hi) = if arc.through >= arc.center {
        (-theta, theta)
    } else {
        (theta, 2.0 * std::f64::consts::PI - theta)
    };
    let segments = 256;
    let mut d = String::new();
    for k in 0..=segments {
        let phi = phi_lo + (phi_hi - phi_lo) * k as f64 / segments as f64;
        let x = arc.center + arc.radius * phi.cos();
        let y = arc.radius * phi.sin();
        d.push_str(if k == 0 { "M " } else { " L " });
        d.push_str(&fmt(vp.px(x)));
        d.push(' ');
        d.push_str(&fmt(vp.py(y)));
    }
    out.push_str(&format!("  <path d=\"{d}\" {SET_STYLE}/>\n"));
}

fn real_subset_path(out: &mut String, vp: &Viewport, rs: &RealSubset) {
    let mut seg = |lo: f64, hi: f64| {
        let lo = lo.max(vp.x_lo);
        let hi = hi.min(vp.x_hi);
        if lo < hi {
            line(out, vp, lo, 0.0, hi, 0.0, SET_STYLE);
        }
    };
    match *rs {
        RealSubset::FullLine => seg(f64::NEG_INFINITY, f64::INFINITY),
        RealSubset::Interval { lo, hi } => seg(lo, hi),
        RealSubset::Ray {
            endpoint,
            toward_minus_infinity,
        } => {
            if toward_minus_infinity {
                seg(f64::NEG_INFINITY, endpoint)
            } else {
                seg(endpoint, f64::INFINITY)
            }
        }
        RealSubset::TwoRays { lo_end, hi_end } => {
            seg(f64::NEG_INFINITY, lo_end);
            seg(hi_end, f64::INFINITY);
        }
    }
}

fn vertical_span(out: &mut String, vp: &Viewport, x: f64, y_lo: f64, y_hi: f64) {
    let lo = y_lo.max(vp.y_lo);
    let hi = y_hi.min(vp.y_hi);
    if lo < hi {
        line(out, vp, x, lo, x, hi, SET_STYLE);
    }
}

fn set_paths(out: &mut String, vp: &Viewport, set: &LimitSet) {
    match set {
        LimitSet::Arc(arc) => arc_path(out, vp, arc),
        LimitSet::VerticalSegment { x, y_half } => vertical_span(out, vp, *x, -y_half, *y_half),
        LimitSet::ArcUnionReal { arc } => {
            arc_path(out, vp, arc);
            real_subset_path(out, vp, &RealSubset::FullLine);
        }
        LimitSet::TwoVerticalRaysUnionReal { x, y_half } => {
            vertical_span(out, vp, *x, *y_half, f64::INFINITY);
            vertical_span(out, vp, *x, f64::NEG_INFINITY, -y_half);
            real_subset_path(out, vp, &RealSubset::FullLine);
        }
        LimitSet::Real(rs) => real_subset_path(out, vp, rs),
        LimitSet::RealUnionCircle {
            real,
            circle_center,
            circle_radius,
        } => {
            circle_path(out, vp, *circle_center, *circle_radius);
            real_subset_path(out, vp, real);
        }
        LimitSet::RealUnionVerticalLine { real, x } => {
            vertical_span(out, vp, *x, f64::NEG_INFINITY, f64::INFINITY);
            real_subset_path(out, vp, real);
        }
        LimitSet::Circle { center, radius } => circle_path(out, vp, *center, *radius),
        LimitSet::VerticalLine { x } => {
            vertical_span(out, vp, *x, f64::NEG_INFINITY, f64::INFINITY)
        }
    }
}

pub fn render_figure(set: &LimitSet, roots: &[CPoint], isolated: &[CPoint]) -> String {
    let vp = Viewport::new(set, roots, isolated);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    if vp.y_lo < 0.0 && vp.y_hi > 0.0 {
        line(&mut out, &vp, vp.x_lo, 0.0, vp.x_hi, 0.0, AXIS_STYLE);
    }
    if vp.x_lo < 0.0 && vp.x_hi > 0.0 {
        line(&mut out, &vp, 0.0, vp.y_lo, 0.0, vp.y_hi, AXIS_STYLE);
    }
    set_paths(&mut out, &vp, set);
    for p in isolated {
        let (cx, cy) = (vp.px(p.re), vp.py(p.im));
        out.push_str(&format!(
            "  <path d=\"M {} {} L {} {} L {} {} L {} {} Z\" fill=\"#c43131\"/>\n",
            fmt(cx),
            fmt(cy - 6.0),
            fmt(cx + 6.0),
            fmt(cy),
            fmt(cx),
            fmt(cy + 6.0),
            fmt(cx - 6.0),
            fmt(cy)
        ));
    }
    for r in roots {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#27418f\"/>\n",
            fmt(vp.px(r.re)),
            fmt(vp.py(r.im))
        ));
    }
    out.push_str("</svg>\n");
    out
}
