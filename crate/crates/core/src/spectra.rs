//! Pointwise analytic quantities of the recurrence at a fixed `z`: the
//! discriminant `Delta = A^2 + 4B`, the principal square root, the
//! characteristic values `lambda_+- = (A +- sqrt(Delta))/2`, the
//! closed-form coefficients `alpha_+-`, the ratio `f = 4B/A^2`, and the
//! residual `||lambda_+| - |lambda_-||` whose zero set is exactly the set
//! of non-isolated limits of zeros.

use thiserror::Error;

use crate::exactpoly::{rational_to_f64, CPoint, RatPoly, Rational};
use crate::recurrence::RecurrenceSpec;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    /// `Delta(z)` is numerically zero, so `alpha_+-` is undefined there.
    #[error("Delta vanishes at z = {z}")]
    DeltaVanishes { z: CPoint },
    /// `A(z)` is numerically zero, so `f = 4B/A^2` is undefined there.
    #[error("A vanishes at z = {z}")]
    AVanishes { z: CPoint },
}

/// All characteristic quantities at one evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    pub z: CPoint,
    pub a_val: CPoint,
    pub b_val: CPoint,
    pub delta_val: CPoint,
    /// Principal square root of `delta_val`: argument in (-pi/2, pi/2].
    pub sqrt_delta: CPoint,
    pub lambda_plus: CPoint,
    pub lambda_minus: CPoint,
    /// `| |lambda_+| - |lambda_-| |`.
    pub residual: f64,
}

/// Exact discriminant polynomial
/// `Delta = (a^2+4c) z^2 + (2ab+4d) z + (b^2+4e)`.
pub fn discriminant(spec: &RecurrenceSpec) -> RatPoly {
    let (lead, mid, konst) = spec.delta_coeffs();
    RatPoly::new(vec![konst, mid, lead])
}

/// Principal square root: for `w = r e^{i theta}` with `theta` in `(-pi, pi]`
/// returns `sqrt(r) e^{i theta/2}`, so the result argument lies in
/// `(-pi/2, pi/2]`. Computed from half-angle formulas on `(re, im)` rather
/// than polar transcendentals; the branch cut on the negative real axis maps
/// to the positive imaginary axis.
pub fn principal_sqrt(w: CPoint) -> CPoint {
    let (x, y) = (w.re, w.im);
    if y == 0.0 {
        // covers -0.0: the cut itself belongs to the upper half-plane
        return if x >= 0.0 {
            CPoint::new(x.sqrt(), 0.0)
        } else {
            CPoint::new(0.0, (-x).sqrt())
        };
    }
    let r = x.hypot(y);
    let s = ((r + x.abs()) / 2.0).sqrt();
    if x >= 0.0 {
        CPoint::new(s, y / (2.0 * s))
    } else {
        CPoint::new(y.abs() / (2.0 * s), y.signum() * s)
    }
}

/// Reusable f64 view of one recurrence's coefficient polynomials, for bulk
/// pointwise evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SpectralParams {
    a0: f64,
    a1: f64,
    b0: f64,
    b1: f64,
    b2: f64,
}

impl SpectralParams {
    pub fn from_spec(spec: &RecurrenceSpec) -> Self {
        SpectralParams {
            a0: rational_to_f64(&spec.b),
            a1: rational_to_f64(&spec.a),
            b0: rational_to_f64(&spec.e),
            b1: rational_to_f64(&spec.d),
            b2: rational_to_f64(&spec.c),
        }
    }

    pub fn a_at(&self, z: CPoint) -> CPoint {
        z * self.a1 + self.a0
    }

    pub fn b_at(&self, z: CPoint) -> CPoint {
        (z * self.b2 + self.b1) * z + self.b0
    }

    pub fn point(&self, z: CPoint) -> SpectralPoint {
        let a_val = self.a_at(z);
        let b_val = self.b_at(z);
        let delta_val = a_val * a_val + b_val * 4.0;
        let sqrt_delta = principal_sqrt(delta_val);
        let lambda_plus = (a_val + sqrt_delta) / 2.0;
        let lambda_minus = (a_val - sqrt_delta) / 2.0;
        let residual = (lambda_plus.norm() - lambda_minus.norm()).abs();
        SpectralPoint {
            z,
            a_val,
            b_val,
            delta_val,
            sqrt_delta,
            lambda_plus,
            lambda_minus,
            residual,
        }
    }
}

/// All characteristic quantities at `z`; no clamping, callers receive the
/// raw values together with the residual.
pub fn spectral_point(spec: &RecurrenceSpec, z: CPoint) -> SpectralPoint {
    SpectralParams::from_spec(spec).point(z)
}

fn eval_f64(p: &RatPoly, z: CPoint) -> CPoint {
    let mut acc = CPoint::new(0.0, 0.0);
    for c in p.coeffs().iter().rev() {
        acc = acc * z + rational_to_f64(c);
    }
    acc
}

fn max_abs_f64(r: &Rational) -> f64 {
    rational_to_f64(r).abs()
}

/// The closed-form solution coefficients
/// `alpha_+- = (W0 sqrt(Delta) +- (2 W1 - W0 A)) / (2 sqrt(Delta))`,
/// defined only where `Delta(z) != 0`. The vanishing test is relative:
/// `|Delta(z)| < 1e-12 (1+|z|^2) max|Delta coeffs|`.
pub fn alpha_pm(spec: &RecurrenceSpec, z: CPoint) -> Result<(CPoint, CPoint), SpectraError> {
    let params = SpectralParams::from_spec(spec);
    let sp = params.point(z);
    let delta_scale = max_abs_f64(&discriminant(spec).max_abs_coeff());
    if sp.delta_val.norm() < 1e-12 * (1.0 + z.norm_sqr()) * delta_scale {
        return Err(SpectraError::DeltaVanishes { z });
    }
    let w0 = eval_f64(&spec.w0, z);
    let h = eval_f64(&spec.compute_h(), z);
    let two_sqrt = sp.sqrt_delta * 2.0;
    let alpha_plus = (w0 * sp.sqrt_delta + h) / two_sqrt;
    let alpha_minus = (w0 * sp.sqrt_delta - h) / two_sqrt;
    Ok((alpha_plus, alpha_minus))
}

/// `f(z) = 4 B(z) / A(z)^2`; on the limit set away from zeros of `A Delta`
/// this is real and less than -1. The vanishing test on `A` is relative:
/// `|A(z)| < 1e-12 (1+|z|) max(|a|,|b|)`.
pub fn f_value(spec: &RecurrenceSpec, z: CPoint) -> Result<CPoint, SpectraError> {
    let params = SpectralParams::from_spec(spec);
    let a_val = params.a_at(z);
    let a_scale = max_abs_f64(&spec.a).max(max_abs_f64(&spec.b));
    if a_val.norm() < 1e-12 * (1.0 + z.norm()) * a_scale {
        return Err(SpectraError::AVanishes { z });
    }
    Ok(params.b_at(z) * 4.0 / (a_val * a_val))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::RatPoly;

    fn ladder() -> RecurrenceSpec {
        RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[1, 1], &[2, 6, 8])
    }

    #[test]
    fn discriminant_ladder() {
        assert_eq!(discriminant(&ladder()), RatPoly::from_integers(&[4, 16, 80]));
    }

    #[test]
    fn discriminant_degenerate_cases() {
        // a^2+4c = 0, 2ab+4d = 0, b^2+4e = 0: identically zero
        let spec = RecurrenceSpec::from_integers(2, 0, -1, 0, 0, &[1], &[0, 1]);
        assert!(discriminant(&spec).is_zero());
        let spec = RecurrenceSpec::from_integers(1, 0, -1, 0, 1, &[1], &[0, 1]);
        assert_eq!(discriminant(&spec), RatPoly::from_integers(&[4, 0, -3]));
    }

    #[test]
    fn principal_sqrt_branch() {
        assert_eq!(principal_sqrt(CPoint::new(4.0, 0.0)), CPoint::new(2.0, 0.0));
        assert_eq!(principal_sqrt(CPoint::new(-1.0, 0.0)), CPoint::new(0.0, 1.0));
        assert_eq!(principal_sqrt(CPoint::new(-4.0, 0.0)), CPoint::new(0.0, 2.0));
        // negative zero imaginary part sits on the cut, not below it
        assert_eq!(
            principal_sqrt(CPoint::new(-4.0, -0.0)),
            CPoint::new(0.0, 2.0)
        );
    }

    #[test]
    fn principal_sqrt_squares_back() {
        let samples = [
            CPoint::new(3.0, 4.0),
            CPoint::new(-3.0, 4.0),
            CPoint::new(-3.0, -4.0),
            CPoint::new(3.0, -4.0),
            CPoint::new(0.0, 2.0),
            CPoint::new(0.0, -2.0),
        ];
        for w in samples {
            let s = principal_sqrt(w);
            assert!((s * s - w).norm() < 1e-12 * (1.0 + w.norm()));
            assert!(s.re >= 0.0);
        }
    }

    #[test]
    fn spectral_point_hand_values() {
        let spec = ladder();
        // at x_A the two characteristic values are opposite
        let at_xa = spectral_point(&spec, CPoint::new(-0.5, 0.0));
        assert!(at_xa.a_val.norm() < 1e-15);
        assert!(at_xa.residual < 1e-15);
        // at a zero of Delta they coincide
        let at_xd = spectral_point(&spec, CPoint::new(-0.1, 0.2));
        assert!(at_xd.delta_val.norm() < 1e-14);
        assert!(at_xd.residual < 1e-7);
        // at z = 1: A = 6, B = 16, Delta = 100
        let at_one = spectral_point(&spec, CPoint::new(1.0, 0.0));
        assert_eq!(at_one.a_val, CPoint::new(6.0, 0.0));
        assert_eq!(at_one.b_val, CPoint::new(16.0, 0.0));
        assert_eq!(at_one.delta_val, CPoint::new(100.0, 0.0));
        assert_eq!(at_one.lambda_plus, CPoint::new(8.0, 0.0));
        assert_eq!(at_one.lambda_minus, CPoint::new(-2.0, 0.0));
        assert_eq!(at_one.residual, 6.0);
    }

    #[test]
    fn alpha_hand_values() {
        let spec = ladder();
        let (plus, minus) = alpha_pm(&spec, CPoint::new(1.0, 0.0)).unwrap();
        assert!((plus - CPoint::new(2.0, 0.0)).norm() < 1e-14);
        assert!(minus.norm() < 1e-14);
        // alpha_+ + alpha_- = W0
        let z = CPoint::new(0.3, 0.7);
        let (p, m) = alpha_pm(&spec, z).unwrap();
        let w0 = eval_f64(&spec.w0, z);
        assert!((p + m - w0).norm() < 1e-12);
        // W0(z) = 0 collapses the pair to +-h/(2 sqrt Delta)
        let (p, m) = alpha_pm(&spec, CPoint::new(-1.0, 0.0)).unwrap();
        assert!((p + m).norm() < 1e-13);
        assert!(matches!(
            alpha_pm(&spec, CPoint::new(-0.1, 0.2)),
            Err(SpectraError::DeltaVanishes { .. })
        ));
    }

    #[test]
    fn f_hand_values() {
        let spec = ladder();
        let f = f_value(&spec, CPoint::new(1.0, 0.0)).unwrap();
        assert!((f - CPoint::new(16.0 / 9.0, 0.0)).norm() < 1e-14);
        assert!(matches!(
            f_value(&spec, CPoint::new(-0.5, 0.0)),
            Err(SpectraError::AVanishes { .. })
        ));
        // real z inside the negative-discriminant interval: f real, < -1
        let spec2 = RecurrenceSpec::from_integers(2, 0, -1, 0, -1, &[1], &[1, 1]);
        let f = f_value(&spec2, CPoint::new(0.3, 0.0)).unwrap();
        assert_eq!(f.im, 0.0);
        assert!(f.re < -1.0);
    }

    #[test]
    fn residual_branch_swap_invariant() {
        let spec = ladder();
        for z in [CPoint::new(0.4, 0.9), CPoint::new(-0.3, 0.1)] {
            let sp = spectral_point(&spec, z);
            let swapped_plus = (sp.a_val - sp.sqrt_delta) / 2.0;
            let swapped_minus = (sp.a_val + sp.sqrt_delta) / 2.0;
            let swapped_residual = (swapped_plus.norm() - swapped_minus.norm()).abs();
            assert_eq!(sp.residual, swapped_residual);
        }
    }

    #[test]
    fn residual_conjugate_symmetry() {
        let spec = ladder();
        for z in [CPoint::new(0.4, 0.9), CPoint::new(-0.17, 0.23)] {
            let r1 = spectral_point(&spec, z).residual;
            let r2 = spectral_point(&spec, z.conj()).residual;
            assert!((r1 - r2).abs() < 1e-15);
        }
    }
}
