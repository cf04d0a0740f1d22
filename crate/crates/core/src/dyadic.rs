//! Binary floating-point numbers of configurable precision on top of
//! `BigInt`, used for polynomial evaluation at precisions beyond f64.
//!
//! A value is `mantissa * 2^exp` with the mantissa kept to at most `prec`
//! bits after every operation (truncation toward zero, so each operation
//! contributes at most one unit in the last place of relative error).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactpoly::Rational;

/// One dyadic float: `m * 2^e`, `m == 0` iff the value is zero.
#[derive(Clone, Debug)]
pub(crate) struct Df {
    m: BigInt,
    e: i64,
}

impl Df {
    pub fn zero() -> Self {
        Df {
            m: BigInt::zero(),
            e: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn neg(&self) -> Self {
        Df {
            m: -&self.m,
            e: self.e,
        }
    }

    /// Exact conversion; panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "dyadic conversion of non-finite f64");
        if x == 0.0 {
            return Df::zero();
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mag, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let mut m = BigInt::from(mag);
        if negative {
            m = -m;
        }
        Df { m, e }
    }

    /// Round a rational to `prec` significant bits.
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        if r.is_zero() {
            return Df::zero();
        }
        let num = r.numer();
        let den = r.denom();
        let shift = (prec as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0) as usize;
        let q = (num << shift) / den;
        Df { m: q, e: -(shift as i64) }.rounded(prec)
    }

    fn rounded(mut self, prec: u32) -> Self {
        if self.m.is_zero() {
            self.e = 0;
            return self;
        }
        let nb = self.m.magnitude().bits();
        if nb > prec as u64 {
            let s = (nb - prec as u64) as usize;
            let sign = self.m.sign();
            let mag = self.m.magnitude() >> s;
            self.m = BigInt::from_biguint(sign, mag);
            self.e += s as i64;
        }
        self
    }

    /// Position of the most significant bit: value magnitude is in
    /// `[2^(top-1), 2^top)`. Meaningless for zero.
    fn top(&self) -> i64 {
        self.e + self.m.magnitude().bits() as i64
    }

    pub fn add(&self, other: &Df, prec: u32) -> Df {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (hi, lo) = if self.top() >= other.top() {
            (self, other)
        } else {
            (other, self)
        };
        // lo entirely below the result's last kept bit: absorb it
        if hi.top() - lo.top() > prec as i64 + 4 {
            return hi.clone();
        }
        let (a, b) = if hi.e >= lo.e { (hi, lo) } else { (lo, hi) };
        let de = (a.e - b.e) as usize;
        let m = (&a.m << de) + &b.m;
        Df { m, e: b.e }.rounded(prec)
    }

    pub fn sub(&self, other: &Df, prec: u32) -> Df {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Df, prec: u32) -> Df {
        if self.is_zero() || other.is_zero() {
            return Df::zero();
        }
        Df {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
        .rounded(prec)
    }

    /// Quotient to `prec` bits; panics on a zero divisor.
    pub fn div(&self, other: &Df, prec: u32) -> Df {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Df::zero();
        }
        let na = self.m.magnitude().bits() as i64;
        let nb = other.m.magnitude().bits() as i64;
        let s = (prec as i64 + 2 + nb - na).max(0) as usize;
        let q = (&self.m << s) / &other.m;
        Df {
            m: q,
            e: self.e - s as i64 - other.e,
        }
        .rounded(prec)
    }

    /// Nearest f64, saturating to +/-inf far outside the exponent range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let negative = self.m.is_negative();
        let mag = self.m.magnitude();
        let nb = mag.bits();
        let (t, e2) = if nb > 54 {
            let s = (nb - 54) as usize;
            ((mag >> s).to_u64().unwrap(), self.e + (nb - 54) as i64)
        } else {
            let s = (54 - nb) as usize;
            (mag.to_u64().unwrap() << s, self.e - (54 - nb) as i64)
        };
        // t has exactly 54 bits; round to 53
        let mut mant = (t >> 1) + (t & 1);
        let mut e3 = e2 + 1;
        if mant >> 53 == 1 {
            mant >>= 1;
            e3 += 1;
        }
        let val = ldexp(mant as f64, e3);
        if negative {
            -val
        } else {
            val
        }
    }
}

fn ldexp(x: f64, e: i64) -> f64 {
    let mut r = x;
    let mut k = e;
    while k > 1000 {
        r *= 2f64.powi(1000);
        k -= 1000;
        if r.is_infinite() {
            return r;
        }
    }
    while k < -1000 {
        r *= 2f64.powi(-1000);
        k += 1000;
        if r == 0.0 {
            return r;
        }
    }
    r * 2f64.powi(k as i32)
}

/// Complex number with dyadic components.
#[derive(Clone, Debug)]
pub(crate) struct Dc {
    pub re: Df,
    pub im: Df,
}

impl Dc {
    pub fn from_c64(z: num_complex::Complex<f64>) -> Self {
        Dc {
            re: Df::from_f64(z.re),
            im: Df::from_f64(z.im),
        }
    }

    pub fn to_c64(&self) -> num_complex::Complex<f64> {
        num_complex::Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Dc {
            re: Df::from_rational(r, prec),
            im: Df::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Dc, prec: u32) -> Dc {
        Dc {
            re: self.re.add(&other.re, prec),
            im: self.im.add(&other.im, prec),
        }
    }

    pub fn mul(&self, other: &Dc, prec: u32) -> Dc {
        let ac = self.re.mul(&other.re, prec);
        let bd = self.im.mul(&other.im, prec);
        let ad = self.re.mul(&other.im, prec);
        let bc = self.im.mul(&other.re, prec);
        Dc {
            re: ac.sub(&bd, prec),
            im: ad.add(&bc, prec),
        }
    }

    pub fn norm_sqr(&self, prec: u32) -> Df {
        let rr = self.re.mul(&self.re, prec);
        let ii = self.im.mul(&self.im, prec);
        rr.add(&ii, prec)
    }

    pub fn div(&self, other: &Dc, prec: u32) -> Dc {
        let conj = Dc {
            re: other.re.clone(),
            im: other.im.neg(),
        };
        let n = self.mul(&conj, prec);
        let d = other.norm_sqr(prec);
        Dc {
            re: n.re.div(&d, prec),
            im: n.im.div(&d, prec),
        }
    }
}

/// Horner evaluation of a polynomial (ascending dyadic coefficients) at `z`.
pub(crate) fn horner(coeffs: &[Dc], z: &Dc, prec: u32) -> Dc {
    let mut acc = match coeffs.last() {
        Some(c) => c.clone(),
        None => {
            return Dc {
                re: Df::zero(),
                im: Df::zero(),
            }
        }
    };
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(z, prec).add(c, prec);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn f64_round_trip() {
        for &x in &[0.0, 1.0, -1.5, 0.1, 1e300, -3.7e-200, 123456789.123456] {
            assert_eq!(Df::from_f64(x).to_f64(), x);
        }
    }

    #[test]
    fn rational_conversion_accuracy() {
        let third = rat(1, 3);
        let x = Df::from_rational(&third, 80).to_f64();
        assert!((x - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn arithmetic_with_rounding() {
        let p = 64;
        let a = Df::from_f64(1.0 / 3.0);
        let b = Df::from_f64(3.0);
        let prod = a.mul(&b, p).to_f64();
        assert!((prod - 1.0).abs() < 1e-15);
        let q = Df::from_f64(1.0).div(&Df::from_f64(7.0), p);
        assert!((q.to_f64() - 1.0 / 7.0).abs() < 1e-16);
    }

    #[test]
    fn absorption_keeps_dominant_term() {
        let p = 64;
        let big = Df::from_f64(1e30);
        let tiny = Df::from_f64(1e-30);
        assert_eq!(big.add(&tiny, p).to_f64(), 1e30);
    }

    #[test]
    fn complex_division() {
        let p = 96;
        let a = Dc::from_c64(num_complex::Complex::new(1.0, 2.0));
        let b = Dc::from_c64(num_complex::Complex::new(3.0, -1.0));
        let q = a.div(&b, p).to_c64();
        let expect = num_complex::Complex::new(1.0, 2.0) / num_complex::Complex::new(3.0, -1.0);
        assert!((q - expect).norm() < 1e-15);
    }
}
