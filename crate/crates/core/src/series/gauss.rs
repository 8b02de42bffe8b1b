//! Gaussian rationals ℚ(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_i64(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        GaussRat::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        GaussRat::new(r, BigRational::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        GaussRat::from_i64(0)
    }

    pub fn one() -> Self {
        GaussRat::from_i64(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(GaussRat::from_rational(self.re.recip()));
        }
        let n = self.norm();
        Some(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// An exact `n`-th root in ℚ(i), if one exists and can be found.
    ///
    /// Real inputs are handled exactly. Non-real inputs are reduced to a
    /// Gaussian integer and candidate roots are located numerically and
    /// then verified exactly, so very large non-real inputs may report
    /// `None` even when a root exists.
    pub fn nth_root(&self, n: u32) -> Option<Self> {
        assert!(n >= 1);
        if n == 1 || self.is_zero() {
            return Some(self.clone());
        }
        if self.is_real() {
            if let Some(r) = real_nth_root(&self.re, n) {
                return Some(GaussRat::from_rational(r));
            }
        }
        // Clear denominators: c = z / d with z a Gaussian integer, so that
        // c·d^n = z·d^(n-1) is a Gaussian integer whose root divided by d is a
        // root of c.
        let d = self.re.denom().lcm(self.im.denom());
        let dq = BigRational::from_integer(d.clone());
        let scaled = self * &GaussRat::from_rational(dq.clone()).pow(n);
        let zr = scaled.re.to_integer();
        let zi = scaled.im.to_integer();
        let root = gaussian_integer_root(&zr, &zi, n)?;
        Some(&root * &GaussRat::from_rational(dq.recip()))
    }
}

fn real_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    let negative = r.is_negative();
    if negative && n.is_multiple_of(2) {
        return None;
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if num::pow(&rn, n) == num && num::pow(&rd, n) == den {
        let root = BigRational::new(rn, rd);
        Some(if negative { -root } else { root })
    } else {
        None
    }
}

mod num {
    use num_bigint::BigInt;
    use num_traits::One;

    pub fn pow(b: &BigInt, e: u32) -> BigInt {
        let mut acc = BigInt::one();
        for _ in 0..e {
            acc *= b;
        }
        acc
    }
}

fn gaussian_integer_root(re: &BigInt, im: &BigInt, n: u32) -> Option<GaussRat> {
    let target = GaussRat::new(BigRational::from_integer(re.clone()), BigRational::from_integer(im.clone()));
    let (x, y) = (re.to_f64()?, im.to_f64()?);
    let modulus = (x * x + y * y).sqrt().powf(1.0 / n as f64);
    let arg = y.atan2(x);
    for k in 0..n {
        let theta = (arg + 2.0 * std::f64::consts::PI * k as f64) / n as f64;
        let (cr, ci) = (modulus * theta.cos(), modulus * theta.sin());
        if !cr.is_finite() || !ci.is_finite() {
            return None;
        }
        for dr in [-1.0, 0.0, 1.0] {
            for di in [-1.0, 0.0, 1.0] {
                let a = BigInt::from((cr.round() + dr) as i64);
                let b = BigInt::from((ci.round() + di) as i64);
                let cand = GaussRat::new(BigRational::from_integer(a), BigRational::from_integer(b));
                if cand.pow(n) == target {
                    return Some(cand);
                }
            }
        }
    }
    None
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::from_rational(&self.re + &o.re);
        }
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::from_rational(&self.re - &o.re);
        }
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::from_rational(&self.re * &o.re);
        }
        GaussRat::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl GaussRat {
    /// True when the printed form is a single signed factor (no `+`).
    pub fn is_atomic(&self) -> bool {
        self.re.is_zero() || self.im.is_zero()
    }

    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }

    pub fn sign_of_leading(&self) -> Sign {
        if !self.re.is_zero() {
            self.re.numer().sign()
        } else {
            self.im.numer().sign()
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-self.im.clone()).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}*i", fmt_rat(&self.im))
                }
            }
            (false, false) => {
                let im = if self.im.is_one() {
                    "i".to_string()
                } else if (-self.im.clone()).is_one() {
                    "-i".to_string()
                } else {
                    format!("{}*i", fmt_rat(&self.im))
                };
                if let Some(stripped) = im.strip_prefix('-') {
                    write!(f, "({} - {})", fmt_rat(&self.re), stripped)
                } else {
                    write!(f, "({} + {})", fmt_rat(&self.re), im)
                }
            }
        }
    }
}
