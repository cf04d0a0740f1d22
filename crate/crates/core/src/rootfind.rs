//! Simultaneous root finding for [`RatPoly`] by Aberth-Ehrlich iteration.
//!
//! Coefficients are normalized exactly by the largest coefficient magnitude
//! before iterating, and every polynomial evaluation inside the iteration is
//! carried out in extended-precision binary floats so that the residual
//! certificates remain trustworthy when coefficients span many orders of
//! magnitude. Exact zero roots at the origin are deflated symbolically.
//! The solver is deterministic: identical input and options give
//! bit-identical output.

use num_traits::Zero;
use thiserror::Error;

use crate::dyadic::{horner, Dc};
use crate::exactpoly::{rat, rational_to_f64, CPoint, RatPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootFindError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFindOptions {
    /// Stop once the largest per-root correction of a sweep falls below this.
    pub tol: f64,
    /// Maximum number of Aberth sweeps.
    pub max_iter: usize,
}

impl Default for RootFindOptions {
    fn default() -> Self {
        RootFindOptions {
            tol: 1e-12,
            max_iter: 500,
        }
    }
}

/// All complex roots of one polynomial, with residual certificates.
///
/// Roots are sorted lexicographically by `(re, im)`. For real-coefficient
/// inputs the multiset is closed under conjugation up to pairing tolerance.
/// `residuals[i]` is `|p(root_i)| / (max|coeff| * (1+|root_i|)^deg)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<CPoint>,
    pub residuals: Vec<f64>,
    /// Size of the cluster of radius 1e-6 around each root; repeated roots
    /// are reported as repeated points, never merged.
    pub multiplicity: Vec<usize>,
    pub iterations: usize,
    pub converged: bool,
}

/// Mean-of-roots center and a Cauchy-bound radius enclosing all roots,
/// used to place the initial iterates. Requires degree >= 1.
pub fn initial_circle(p: &RatPoly) -> (CPoint, f64) {
    let deg = p.degree().expect("initial_circle needs a nonzero polynomial");
    assert!(deg >= 1, "initial_circle needs degree >= 1");
    let lead = p.leading_coeff().unwrap();
    let center = -p.coeff(deg - 1) / (rat(deg as i64, 1) * lead);
    let mut max_ratio = 0.0f64;
    for k in 0..deg {
        let ratio = rational_to_f64(&(p.coeff(k) / lead)).abs();
        max_ratio = max_ratio.max(ratio);
    }
    (CPoint::new(rational_to_f64(&center), 0.0), 1.0 + max_ratio)
}

struct DyadicPoly {
    coeffs: Vec<Dc>,
    prec: u32,
}

impl DyadicPoly {
    fn new(p: &RatPoly, prec: u32) -> Self {
        DyadicPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| Dc::from_rational(c, prec))
                .collect(),
            prec,
        }
    }

    fn eval(&self, z: CPoint) -> Dc {
        horner(&self.coeffs, &Dc::from_c64(z), self.prec)
    }
}

/// Newton correction `p(z)/p'(z)` with the division done in extended
/// precision; `None` at an exact critical point.
fn newton_ratio(p: &DyadicPoly, dp: &DyadicPoly, z: CPoint) -> Option<CPoint> {
    let dv = dp.eval(z);
    if dv.is_zero() {
        return None;
    }
    let pv = p.eval(z);
    if pv.is_zero() {
        return Some(CPoint::new(0.0, 0.0));
    }
    Some(pv.div(&dv, p.prec).to_c64())
}

fn is_finite(z: CPoint) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Finds all complex roots of `p`.
///
/// Exact zero roots at the origin are recorded with residual 0; the deflated
/// polynomial is solved by Aberth-Ehrlich iteration started on a circle of
/// Cauchy-bound radius, then each root is polished by two Newton steps in
/// extended precision. Failure to converge is not an error: the best
/// iterates are returned with `converged = false`.
pub fn find_roots(p: &RatPoly, opts: &RootFindOptions) -> Result<RootSet, RootFindError> {
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let zero_roots = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let deflated = RatPoly::new(p.coeffs()[zero_roots..].to_vec());
    let deg = deflated.degree().unwrap();

    let mut roots: Vec<CPoint> = vec![CPoint::new(0.0, 0.0); zero_roots];
    let mut iterations = 0;
    let mut converged = true;

    if deg >= 1 {
        let max_coeff = deflated.max_abs_coeff();
        let inv = rat(1, 1) / &max_coeff;
        let scaled = deflated.scale(&inv);
        let prec = (2 * deg as u32 + 64).max(53);
        let poly = DyadicPoly::new(&scaled, prec);
        let deriv = DyadicPoly::new(&scaled.derivative(), prec);

        let (center, radius) = initial_circle(&scaled);
        let mut zs: Vec<CPoint> = (0..deg)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
                center + CPoint::new(radius * theta.cos(), radius * theta.sin())
            })
            .collect();

        converged = false;
        for sweep in 1..=opts.max_iter {
            let mut max_corr = 0.0f64;
            for i in 0..deg {
                let zi = zs[i];
                let correction = match newton_ratio(&poly, &deriv, zi) {
                    None => {
                        // landed exactly on a critical point; deterministic nudge
                        let bump = 1e-3 * (1.0 + zi.norm());
                        zs[i] = zi + CPoint::new(bump, 0.5 * bump);
                        max_corr = f64::MAX;
                        continue;
                    }
                    Some(nv) if is_finite(nv) => {
                        let mut sum = CPoint::new(0.0, 0.0);
                        for (j, zj) in zs.iter().enumerate() {
                            if j != i {
                                let d = zi - zj;
                                if d.norm_sqr() > 0.0 {
                                    sum += d.inv();
                                }
                            }
                        }
                        let denom = CPoint::new(1.0, 0.0) - nv * sum;
                        let w = if denom.norm_sqr() > 0.0 { nv / denom } else { nv };
                        if is_finite(w) {
                            w
                        } else {
                            nv
                        }
                    }
                    Some(_) => continue,
                };
                if !is_finite(correction) {
                    continue;
                }
                zs[i] = zi - correction;
                max_corr = max_corr.max(correction.norm());
            }
            iterations = sweep;
            if max_corr < opts.tol {
                converged = true;
                break;
            }
        }

        // two Newton polish steps per root
        for z in zs.iter_mut() {
            for _ in 0..2 {
                if let Some(nv) = newton_ratio(&poly, &deriv, *z) {
                    let candidate = *z - nv;
                    if is_finite(candidate) {
                        *z = candidate;
                    }
                }
            }
        }
        for z in zs.iter_mut() {
            if !is_finite(*z) {
                *z = center;
                converged = false;
            }
        }
        roots.extend(zs);
    }

    roots.sort_by(|u, v| {
        u.re.partial_cmp(&v.re)
            .unwrap()
            .then(u.im.partial_cmp(&v.im).unwrap())
    });

    // residuals against the full normalized input polynomial
    let full_scale = p.max_abs_coeff();
    let inv = rat(1, 1) / &full_scale;
    let normalized = p.scale(&inv);
    let full_prec = normalized.default_precision();
    let full_poly = DyadicPoly::new(&normalized, full_prec);
    let full_deg = p.degree().unwrap() as i32;
    let residuals: Vec<f64> = roots
        .iter()
        .map(|&r| {
            if r.is_zero() && zero_roots > 0 {
                0.0
            } else {
                let v = full_poly.eval(r).to_c64();
                v.norm() / (1.0 + r.norm()).powi(full_deg)
            }
        })
        .collect();

    let multiplicity: Vec<usize> = roots
        .iter()
        .map(|&r| roots.iter().filter(|&&s| (r - s).norm() <= 1e-6).count())
        .collect();

    Ok(RootSet {
        roots,
        residuals,
        multiplicity,
        iterations,
        converged,
    })
}
