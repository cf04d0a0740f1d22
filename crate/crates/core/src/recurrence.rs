//! The recurrence specification: coefficient data, generality validation,
//! exact generation of the sequence `W_n`, and the auxiliary polynomials
//! `g = W1^2 - A W0 W1 - B W0^2` and `h = 2 W1 - W0 A`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactpoly::{rat, RatPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("invalid recurrence specification: {0}")]
    InvalidSpec(String),
}

/// The five coefficients of `W_n = (a z + b) W_{n-1} + (c z^2 + d z + e) W_{n-2}`
/// together with the initial polynomials. `A(z) = b + a z` and
/// `B(z) = e + d z + c z^2` are always derived, never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub w0: RatPoly,
    pub w1: RatPoly,
}

/// Outcome of the generality checks. The sequence is *general* exactly when
/// all four flags hold; only then is the limit-set classification valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralityReport {
    /// `g` is not identically zero (the sequence truly has order two).
    pub g_not_identically_zero: bool,
    /// `A` and `B` share no zero.
    pub a_b_coprime: bool,
    /// `W0` and `W1` share no zero.
    pub w0_w1_coprime: bool,
    /// The discriminant `A^2 + 4B` is not identically zero.
    pub delta_not_identically_zero: bool,
}

impl GeneralityReport {
    pub fn is_general(&self) -> bool {
        self.g_not_identically_zero
            && self.a_b_coprime
            && self.w0_w1_coprime
            && self.delta_not_identically_zero
    }
}

impl RecurrenceSpec {
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        e: Rational,
        w0: RatPoly,
        w1: RatPoly,
    ) -> Self {
        RecurrenceSpec {
            a,
            b,
            c,
            d,
            e,
            w0,
            w1,
        }
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_integers(a: i64, b: i64, c: i64, d: i64, e: i64, w0: &[i64], w1: &[i64]) -> Self {
        RecurrenceSpec::new(
            rat(a, 1),
            rat(b, 1),
            rat(c, 1),
            rat(d, 1),
            rat(e, 1),
            RatPoly::from_integers(w0),
            RatPoly::from_integers(w1),
        )
    }

    /// `A(z) = b + a z`.
    pub fn a_poly(&self) -> RatPoly {
        RatPoly::new(vec![self.b.clone(), self.a.clone()])
    }

    /// `B(z) = e + d z + c z^2`.
    pub fn b_poly(&self) -> RatPoly {
        RatPoly::new(vec![self.e.clone(), self.d.clone(), self.c.clone()])
    }

    /// The zero of `A`: `x_A = -b/a`. Requires `a != 0`.
    pub fn x_a(&self) -> Rational {
        -&self.b / &self.a
    }

    /// Checks the generality assumptions with exact arithmetic.
    ///
    /// Returns `InvalidSpec` when `a = 0`, `c = 0`, or both initial
    /// polynomials are identically zero; otherwise reports the four flags.
    pub fn validate(&self) -> Result<GeneralityReport, RecurrenceError> {
        if self.a.is_zero() {
            return Err(RecurrenceError::InvalidSpec(
                "coefficient a must be nonzero (A must be linear)".into(),
            ));
        }
        if self.c.is_zero() {
            return Err(RecurrenceError::InvalidSpec(
                "coefficient c must be nonzero (B must be quadratic)".into(),
            ));
        }
        if self.w0.is_zero() && self.w1.is_zero() {
            return Err(RecurrenceError::InvalidSpec(
                "W0 and W1 must not both be identically zero".into(),
            ));
        }
        let g_not_identically_zero = !self.compute_g().is_zero();
        let a_b_coprime = !self
            .a_poly()
            .resultant(&self.b_poly())
            .expect("A and B nonzero when a, c nonzero")
            .is_zero();
        let w0_w1_coprime = coprime_initials(&self.w0, &self.w1);
        let (lead, mid, konst) = self.delta_coeffs();
        let delta_not_identically_zero = !(lead.is_zero() && mid.is_zero() && konst.is_zero());
        Ok(GeneralityReport {
            g_not_identically_zero,
            a_b_coprime,
            w0_w1_coprime,
            delta_not_identically_zero,
        })
    }

    /// The three coefficients of `Delta = A^2 + 4B`, low degree first:
    /// `(b^2 + 4e, 2ab + 4d, a^2 + 4c)` reversed to `(lead, mid, const)`.
    pub fn delta_coeffs(&self) -> (Rational, Rational, Rational) {
        let lead = &self.a * &self.a + rat(4, 1) * &self.c;
        let mid = rat(2, 1) * &self.a * &self.b + rat(4, 1) * &self.d;
        let konst = &self.b * &self.b + rat(4, 1) * &self.e;
        (lead, mid, konst)
    }

    /// Exact `W_n` by iterating the recurrence.
    pub fn nth_poly(&self, n: usize) -> RatPoly {
        match n {
            0 => return self.w0.clone(),
            1 => return self.w1.clone(),
            _ => {}
        }
        let a = self.a_poly();
        let b = self.b_poly();
        let mut prev = self.w0.clone();
        let mut cur = self.w1.clone();
        for _ in 2..=n {
            let next = a.mul(&cur).add(&b.mul(&prev));
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `g = W1^2 - A W0 W1 - B W0^2`, whose filtered roots are the isolated
    /// limits of zeros.
    pub fn compute_g(&self) -> RatPoly {
        let w1_sq = self.w1.mul(&self.w1);
        let a_w0_w1 = self.a_poly().mul(&self.w0).mul(&self.w1);
        let b_w0_sq = self.b_poly().mul(&self.w0).mul(&self.w0);
        w1_sq.sub(&a_w0_w1).sub(&b_w0_sq)
    }

    /// `h = 2 W1 - W0 A`.
    pub fn compute_h(&self) -> RatPoly {
        self.w1
            .scale(&rat(2, 1))
            .sub(&self.w0.mul(&self.a_poly()))
    }
}

/// Shared-zero test for the initial pair. A nonzero constant has no zeros,
/// so any pair containing one is coprime without a resultant; an
/// identically-zero member shares every zero of the other.
fn coprime_initials(w0: &RatPoly, w1: &RatPoly) -> bool {
    let nonzero_constant =
        |p: &RatPoly| !p.is_zero() && p.degree() == Some(0) && !p.coeff(0).is_zero();
    if nonzero_constant(w0) || nonzero_constant(w1) {
        return true;
    }
    if w0.is_zero() || w1.is_zero() {
        // the other member is non-constant here, hence has zeros
        return false;
    }
    !w0.resultant(w1)
        .expect("both nonzero")
        .is_zero()
}

#[allow(dead_code)]
fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::RatPoly;

    /// The "ladder" fixture:
    /// `W_n = (2 + 4z) W_{n-1} + 16 z^2 W_{n-2}`, `W0 = 1+z`, `W1 = 2+6z+8z^2`.
    pub fn ladder() -> RecurrenceSpec {
        RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[1, 1], &[2, 6, 8])
    }

    #[test]
    fn ladder_is_general() {
        let report = ladder().validate().unwrap();
        assert!(report.g_not_identically_zero);
        assert!(report.a_b_coprime);
        assert!(report.w0_w1_coprime);
        assert!(report.delta_not_identically_zero);
        assert!(report.is_general());
    }

    #[test]
    fn shared_initial_zero_flagged() {
        let spec = RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[0, 1], &[0, 1]);
        let report = spec.validate().unwrap();
        assert!(!report.w0_w1_coprime);
        assert!(!report.is_general());
    }

    #[test]
    fn shared_ab_zero_flagged() {
        // A = 2z, B = z^2 share the zero 0
        let spec = RecurrenceSpec::from_integers(2, 0, 1, 0, 0, &[1, 1], &[1, 2]);
        let report = spec.validate().unwrap();
        assert!(!report.a_b_coprime);
    }

    #[test]
    fn invalid_specs_rejected() {
        let zero_a = RecurrenceSpec::from_integers(0, 2, 16, 0, 0, &[1, 1], &[2, 6, 8]);
        assert!(zero_a.validate().is_err());
        let zero_c = RecurrenceSpec::from_integers(4, 2, 0, 0, 0, &[1, 1], &[2, 6, 8]);
        assert!(zero_c.validate().is_err());
        let zero_inits = RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[], &[]);
        assert!(zero_inits.validate().is_err());
    }

    #[test]
    fn nth_poly_base_cases() {
        let spec = ladder();
        assert_eq!(spec.nth_poly(0), spec.w0);
        assert_eq!(spec.nth_poly(1), spec.w1);
    }

    #[test]
    fn nth_poly_expansion() {
        // (2+4z)(2+6z+8z^2) + 16z^2(1+z) = 4 + 20z + 56z^2 + 48z^3
        let w2 = ladder().nth_poly(2);
        assert_eq!(w2, RatPoly::from_integers(&[4, 20, 56, 48]));
    }

    #[test]
    fn nth_poly_satisfies_recurrence() {
        let spec = ladder();
        let a = spec.a_poly();
        let b = spec.b_poly();
        for n in 2..=10 {
            let lhs = spec.nth_poly(n);
            let rhs = a.mul(&spec.nth_poly(n - 1)).add(&b.mul(&spec.nth_poly(n - 2)));
            assert_eq!(lhs, rhs, "recurrence identity at n = {n}");
        }
    }

    #[test]
    fn degree_growth() {
        let spec = ladder();
        for n in 0..=12 {
            assert_eq!(spec.nth_poly(n).degree(), Some(n + 1));
        }
    }

    #[test]
    fn g_expansion_ladder() {
        // W1^2 = 4+24z+68z^2+96z^3+64z^4
        // A W0 W1 = 4+24z+60z^2+72z^3+32z^4
        // B W0^2 = 16z^2+32z^3+16z^4
        // g = -8z^2 - 8z^3 + 16z^4 = 8z^2 (2z+1)(z-1)
        assert_eq!(
            ladder().compute_g(),
            RatPoly::from_integers(&[0, 0, -8, -8, 16])
        );
    }

    #[test]
    fn g_of_quotient_sequence_factors_exactly() {
        // initials divided by (1+z)^2: W0 = 144(1+z)^2,
        // W1 = 64(4+16z+31z^2+21z^3); g carries a quartic factor whose real
        // root near -0.8102 is the lone isolated limit
        let spec = RecurrenceSpec::from_integers(
            4,
            2,
            16,
            0,
            0,
            &[144, 288, 144],
            &[256, 1024, 1984, 1344],
        );
        let g = spec.compute_g();
        assert_eq!(g.degree(), Some(6));
        let quartic = RatPoly::from_integers(&[4, 28, 169, 312, 171]);
        let quotient = g.exact_divide(&quartic).unwrap();
        assert_eq!(quotient, RatPoly::from_integers(&[-2048, -2048, 4096]));
    }

    #[test]
    fn g_collapses_to_w1_squared() {
        let spec = RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[], &[1]);
        assert_eq!(spec.compute_g(), RatPoly::from_integers(&[1]));
    }

    #[test]
    fn h_expansion() {
        assert_eq!(ladder().compute_h(), RatPoly::from_integers(&[2, 6, 12]));
        let no_w0 = RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[], &[2, 6, 8]);
        assert_eq!(no_w0.compute_h(), RatPoly::from_integers(&[4, 12, 16]));
        // W1 = W0 A / 2 makes h vanish identically: W0 = 2, A = 2+4z -> W1 = 2+4z
        let cancel = RecurrenceSpec::from_integers(4, 2, 16, 0, 0, &[2], &[2, 4]);
        assert!(cancel.compute_h().is_zero());
    }
}
