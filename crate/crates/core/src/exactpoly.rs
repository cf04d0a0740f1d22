//! Exact univariate polynomial arithmetic over arbitrary-precision rationals,
//! plus high-accuracy complex evaluation.
//!
//! Coefficients are stored ascending by degree and kept canonical: the
//! highest-index entry is nonzero, and the zero polynomial is the empty list.
//! All arithmetic on [`RatPoly`] is exact; floating point enters only through
//! [`RatPoly::eval_complex`], which evaluates by Horner's scheme in binary
//! floats of a requested precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::dyadic::{horner, Dc, Df};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Complex evaluation point / result with f64 components.
pub type CPoint = num_complex::Complex<f64>;

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Round a rational to the nearest f64, robust to numerators and
/// denominators far outside the f64 exponent range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    Df::from_rational(r, 64).to_f64()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// `exact_divide` was asked for a quotient that leaves a remainder.
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    /// The operation is undefined for the identically-zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Univariate polynomial with exact rational coefficients, ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the representation is canonical.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        RatPoly::new(coeffs.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero-padded beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, factor: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64, 1))
                .collect(),
        )
    }

    /// Exact evaluation by Horner's scheme in rationals.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in binary floats of `precision_bits` bits, rounded
    /// to f64 components at the end. Relative error stays below
    /// `2^(-precision_bits + 2*degree)` of the intermediate magnitudes.
    pub fn eval_complex(&self, z: CPoint, precision_bits: u32) -> CPoint {
        assert!(precision_bits >= 53, "precision below f64 is not supported");
        let prec = precision_bits;
        let coeffs: Vec<Dc> = self
            .coeffs
            .iter()
            .map(|c| Dc::from_rational(c, prec))
            .collect();
        horner(&coeffs, &Dc::from_c64(z), prec).to_c64()
    }

    /// Default evaluation precision: generous enough that residuals stay
    /// meaningful as coefficients grow geometrically with the degree.
    pub fn default_precision(&self) -> u32 {
        let deg = self.degree().unwrap_or(0) as u32;
        (2 * deg + 64).max(53)
    }

    /// Largest coefficient magnitude; zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn divrem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / lc;
            let shift = k - dd;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let idx = shift + j;
                let sub = &factor * b;
                rem[idx] -= sub;
            }
            debug_assert!(rem[k].is_zero());
            rem.pop();
            quot[shift] = factor;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Exact quotient; the divisor must divide `self` with zero remainder.
    pub fn exact_divide(&self, divisor: &RatPoly) -> Result<RatPoly, PolyError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm; the gcd of
    /// two zero polynomials is zero.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("divisor checked nonzero");
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lc) => {
                let inv = Rational::one() / lc;
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// Exact resultant via the subresultant pseudo-remainder sequence.
    /// Nonzero iff the two polynomials share no root.
    pub fn resultant(&self, other: &RatPoly) -> Result<Rational, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let dp = self.degree().unwrap();
        let dq = other.degree().unwrap();
        let (pz, pden) = self.integer_coeffs();
        let (qz, qden) = other.integer_coeffs();
        let res = integer_resultant(pz, qz);
        let denom = pden.pow(dq as u32) * qden.pow(dp as u32);
        Ok(Rational::new(res, denom))
    }

    /// Scales to integer coefficients: returns `(P, s)` with `self = P / s`.
    fn integer_coeffs(&self) -> (Vec<BigInt>, BigInt) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (ints, lcm)
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl std::ops::Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::neg(self)
    }
}

fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a  mod  b`, all integer.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let da = deg(a);
    let db = deg(b);
    debug_assert!(da >= db && db >= 1);
    let lcb = b[db].clone();
    let mut r = a.to_vec();
    for k in (db..=da).rev() {
        let top = r[k].clone();
        for c in r.iter_mut() {
            *c *= &lcb;
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] -= &top * bj;
        }
        debug_assert!(r[k].is_zero());
        r.pop();
    }
    trim(r)
}

fn integer_resultant(a: Vec<BigInt>, b: Vec<BigInt>) -> BigInt {
    let mut a = trim(a);
    let mut b = trim(b);
    debug_assert!(!a.is_empty() && !b.is_empty());
    let mut sign = 1i8;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        let res = b[0].pow(deg(&a) as u32);
        return if sign < 0 { -res } else { res };
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = deg(&a);
        let db = deg(&b);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            // positive-degree common factor
            return BigInt::zero();
        }
        let divisor = &g * h.pow(delta);
        let next: Vec<BigInt> = r.iter().map(|c| c / &divisor).collect();
        a = b;
        b = next;
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta) / h.pow(delta - 1),
        };
        if deg(&b) == 0 {
            let da = deg(&a);
            let num = b[0].pow(da as u32);
            let res = if da >= 1 { num / h.pow(da as u32 - 1) } else { num };
            return if sign < 0 { -res } else { res };
        }
    }
}
