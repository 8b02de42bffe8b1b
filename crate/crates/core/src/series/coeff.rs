//! The exact coefficient field ℚ(i)(τ₁,…,τ_m).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::gauss::GaussRat;
use super::poly::MPoly;
use crate::error::{Error, Result};

/// Element of ℚ(i)(τ₁,…,τ_m) in canonical form.
///
/// Constants are stored directly. Proper fractions keep a numerator and a
/// monic denominator with their gcd removed, so equal field elements have
/// identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coefficient {
    Const(GaussRat),
    Frac(Arc<(MPoly, MPoly)>),
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::Const(GaussRat::zero())
    }

    pub fn one() -> Self {
        Coefficient::Const(GaussRat::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Coefficient::Const(GaussRat::from_i64(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Coefficient::Const(GaussRat::ratio(num, den))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coefficient::Const(GaussRat::from_rational(r))
    }

    pub fn i() -> Self {
        Coefficient::Const(GaussRat::i())
    }

    /// The residue indeterminate `tau<index>`, 1-based.
    pub fn tau(index: usize) -> Self {
        assert!(index >= 1, "tau indices start at 1");
        Coefficient::Frac(Arc::new((MPoly::var(index - 1), MPoly::one())))
    }

    /// Builds `num / den`, normalizing.
    pub fn from_fraction(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn from_poly(p: MPoly) -> Self {
        normalize(p, MPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coefficient::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coefficient::Const(c) if c.is_one())
    }

    pub fn as_const(&self) -> Option<&GaussRat> {
        match self {
            Coefficient::Const(c) => Some(c),
            Coefficient::Frac(_) => None,
        }
    }

    /// True when some `tau` occurs in the canonical form.
    pub fn involves_tau(&self) -> bool {
        matches!(self, Coefficient::Frac(_))
    }

    /// 1-based indices of the residue indeterminates that occur.
    pub fn taus(&self) -> Vec<usize> {
        match self {
            Coefficient::Const(_) => Vec::new(),
            Coefficient::Frac(f) => {
                let mut v = f.0.variables();
                for x in f.1.variables() {
                    if !v.contains(&x) {
                        v.push(x);
                    }
                }
                v.sort_unstable();
                v.into_iter().map(|i| i + 1).collect()
            }
        }
    }

    pub fn numer(&self) -> MPoly {
        match self {
            Coefficient::Const(c) => MPoly::constant(c.clone()),
            Coefficient::Frac(f) => f.0.clone(),
        }
    }

    pub fn denom(&self) -> MPoly {
        match self {
            Coefficient::Const(_) => MPoly::one(),
            Coefficient::Frac(f) => f.1.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            Coefficient::Const(c) => c.inv().map(Coefficient::Const).ok_or(Error::DivisionByZero),
            Coefficient::Frac(f) => Ok(normalize(f.1.clone(), f.0.clone())),
        }
    }

    pub fn div(&self, o: &Coefficient) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            Coefficient::Const(c) => Coefficient::Const(c.pow(e)),
            Coefficient::Frac(f) => Coefficient::Frac(Arc::new((f.0.pow(e), f.1.pow(e)))),
        }
    }

    /// An `n`-th root inside the coefficient field when the canonical form
    /// is a perfect `n`-th power; `None` otherwise.
    pub fn nth_root(&self, n: u32) -> Option<Self> {
        assert!(n >= 1);
        match self {
            Coefficient::Const(c) => c.nth_root(n).map(Coefficient::Const),
            Coefficient::Frac(f) => {
                let num = f.0.nth_root(n)?;
                let den = f.1.nth_root(n)?;
                let r = normalize(num, den);
                (r.pow(n) == *self).then_some(r)
            }
        }
    }

    fn is_atomic(&self) -> bool {
        match self {
            Coefficient::Const(c) => c.is_atomic(),
            Coefficient::Frac(f) => f.1.is_one() && f.0.len() == 1,
        }
    }

    /// Display form that can be juxtaposed with `*` without ambiguity.
    pub fn factor_string(&self) -> String {
        let s = self.to_string();
        if self.is_atomic() || s.starts_with('(') && matches!(self, Coefficient::Const(_)) {
            s
        } else {
            format!("({})", s)
        }
    }

    pub fn is_negative_real(&self) -> bool {
        matches!(self, Coefficient::Const(c) if c.is_negative_real())
    }
}

fn normalize(num: MPoly, den: MPoly) -> Coefficient {
    if num.is_zero() {
        return Coefficient::zero();
    }
    if let Some(d) = den.constant_value() {
        let dinv = d.inv().expect("nonzero denominator");
        if let Some(n) = num.constant_value() {
            return Coefficient::Const(&n * &dinv);
        }
        return Coefficient::Frac(Arc::new((num.scale(&dinv), MPoly::one())));
    }
    let g = MPoly::gcd(&num, &den);
    let (num, den) = if g.is_one() {
        (num, den)
    } else {
        (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
    };
    let lc_inv = den.leading().expect("nonzero").1.inv().expect("nonzero");
    let (num, den) = (num.scale(&lc_inv), den.scale(&lc_inv));
    if den.is_one() {
        if let Some(n) = num.constant_value() {
            return Coefficient::Const(n);
        }
    }
    Coefficient::Frac(Arc::new((num, den)))
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, o: &Coefficient) -> Coefficient {
        match (self, o) {
            (Coefficient::Const(a), Coefficient::Const(b)) => Coefficient::Const(a + b),
            _ => {
                let (an, ad, bn, bd) = (self.numer(), self.denom(), o.numer(), o.denom());
                if ad == bd {
                    normalize(an.add(&bn), ad)
                } else {
                    normalize(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
                }
            }
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, o: &Coefficient) -> Coefficient {
        match (self, o) {
            (Coefficient::Const(a), Coefficient::Const(b)) => Coefficient::Const(a - b),
            _ => self + &(-o),
        }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, o: &Coefficient) -> Coefficient {
        match (self, o) {
            (Coefficient::Const(a), Coefficient::Const(b)) => Coefficient::Const(a * b),
            (Coefficient::Const(a), Coefficient::Frac(f)) | (Coefficient::Frac(f), Coefficient::Const(a)) => {
                if a.is_zero() {
                    Coefficient::zero()
                } else {
                    Coefficient::Frac(Arc::new((f.0.scale(a), f.1.clone())))
                }
            }
            (Coefficient::Frac(f), Coefficient::Frac(g)) => normalize(f.0.mul(&g.0), f.1.mul(&g.1)),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Const(c) => Coefficient::Const(-c),
            Coefficient::Frac(f) => Coefficient::Frac(Arc::new((f.0.neg(), f.1.clone()))),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, o: Coefficient) -> Coefficient { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_i64(n)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Const(c) => write!(f, "{}", c),
            Coefficient::Frac(fr) => {
                if fr.1.is_one() {
                    write!(f, "{}", fr.0)
                } else {
                    let num = if fr.0.len() == 1 { fr.0.to_string() } else { format!("({})", fr.0) };
                    write!(f, "{}/({})", num, fr.1)
                }
            }
        }
    }
}
