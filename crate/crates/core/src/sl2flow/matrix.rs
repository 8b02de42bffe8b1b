//! 2×2 matrices over the series and realization fields, the four elements
//! of ℤ/4ℤ, and the decomposition `g = z · (1 0; α 1) · (β γ; 0 β⁻¹)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::hahn::HahnElement;
use crate::series::LaurentSeries;

/// The field operations the matrix code needs.
pub trait Field: Clone + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// Exact zero test (may report a precision-horizon error).
    fn is_zero(&self) -> Result<bool>;
}

impl Field for LaurentSeries {
    fn zero() -> Self {
        LaurentSeries::zero()
    }
    fn one() -> Self {
        LaurentSeries::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        LaurentSeries::inv(self)
    }
    fn is_zero(&self) -> Result<bool> {
        LaurentSeries::is_zero(self)
    }
}

impl Field for HahnElement {
    fn zero() -> Self {
        HahnElement::zero()
    }
    fn one() -> Self {
        HahnElement::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        HahnElement::inv(self)
    }
    fn is_zero(&self) -> Result<bool> {
        HahnElement::is_zero(self)
    }
}

/// The matrix `(x1 x2; x3 x4)`.
#[derive(Clone, Debug)]
pub struct Matrix2<T> {
    pub x1: T,
    pub x2: T,
    pub x3: T,
    pub x4: T,
}

impl<T: Field> Matrix2<T> {
    pub fn new(x1: T, x2: T, x3: T, x4: T) -> Self {
        Matrix2 { x1, x2, x3, x4 }
    }

    pub fn identity() -> Self {
        Matrix2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn diag(a: T) -> Result<Self> {
        let b = a.inv()?;
        Ok(Matrix2::new(a, T::zero(), T::zero(), b))
    }

    /// `(1 0; α 1)`.
    pub fn lower(alpha: T) -> Self {
        Matrix2::new(T::one(), T::zero(), alpha, T::one())
    }

    /// `(β γ; 0 β⁻¹)`.
    pub fn borel(beta: T, gamma: T) -> Result<Self> {
        let bi = beta.inv()?;
        Ok(Matrix2::new(beta, gamma, T::zero(), bi))
    }

    pub fn mul(&self, o: &Matrix2<T>) -> Matrix2<T> {
        Matrix2::new(
            self.x1.mul(&o.x1).add(&self.x2.mul(&o.x3)),
            self.x1.mul(&o.x2).add(&self.x2.mul(&o.x4)),
            self.x3.mul(&o.x1).add(&self.x4.mul(&o.x3)),
            self.x3.mul(&o.x2).add(&self.x4.mul(&o.x4)),
        )
    }

    pub fn det(&self) -> T {
        self.x1.mul(&self.x4).sub(&self.x2.mul(&self.x3))
    }

    /// Exact check that the determinant is `1`.
    pub fn has_unit_det(&self) -> Result<bool> {
        self.det().sub(&T::one()).is_zero()
    }

    /// Exact entrywise equality.
    pub fn try_eq(&self, o: &Matrix2<T>) -> Result<bool> {
        Ok(self.x1.sub(&o.x1).is_zero()?
            && self.x2.sub(&o.x2).is_zero()?
            && self.x3.sub(&o.x3).is_zero()?
            && self.x4.sub(&o.x4).is_zero()?)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix2<U> {
        Matrix2 { x1: f(&self.x1), x2: f(&self.x2), x3: f(&self.x3), x4: f(&self.x4) }
    }
}

impl Matrix2<LaurentSeries> {
    pub fn embed(&self) -> Matrix2<HahnElement> {
        self.map(HahnElement::embed)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.x1, self.x2, self.x3, self.x4)
    }
}

/// An element of ℤ/4ℤ as the power `Wᵉ` of `W = (0 −1; 1 0)`:
/// `I`, `W`, `−I`, `−W`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Z4(u8);

impl Z4 {
    pub const I: Z4 = Z4(0);
    pub const W: Z4 = Z4(1);
    pub const NEG_I: Z4 = Z4(2);
    pub const NEG_W: Z4 = Z4(3);

    pub fn all() -> [Z4; 4] {
        [Z4::I, Z4::W, Z4::NEG_I, Z4::NEG_W]
    }

    pub fn power(e: i64) -> Z4 {
        Z4(e.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn compose(self, o: Z4) -> Z4 {
        Z4((self.0 + o.0) % 4)
    }

    /// True for `±W`, the elements that swap the diagonal.
    pub fn is_quarter_turn(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn matrix<T: Field>(self) -> Matrix2<T> {
        let (o, z) = (T::one(), T::zero());
        match self.0 {
            0 => Matrix2::new(o, z.clone(), z, T::one()),
            1 => Matrix2::new(z.clone(), o.neg(), o, z),
            2 => Matrix2::new(o.neg(), z.clone(), z, o.neg()),
            _ => Matrix2::new(z.clone(), o.clone(), o.neg(), z),
        }
    }

    pub fn parse(s: &str) -> Option<Z4> {
        match s {
            "I" => Some(Z4::I),
            "W" => Some(Z4::W),
            "-I" => Some(Z4::NEG_I),
            "-W" => Some(Z4::NEG_W),
            _ => None,
        }
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["I", "W", "-I", "-W"][self.0 as usize])
    }
}

/// The factors `(z, α, β, γ)` of `g = z · (1 0; α 1) · (β γ; 0 β⁻¹)`.
#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub z: Z4,
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

/// Splits a determinant-one matrix: `x1 ≠ 0` gives `z = I, α = x3/x1,
/// β = x1, γ = x2`; `x1 = 0` gives `z = W, α = 0, β = x3, γ = x4`.
pub fn decompose<T: Field>(g: &Matrix2<T>) -> Result<Decomposition<T>> {
    if !g.has_unit_det()? {
        return Err(Error::Determinant(format!("det({}) = {}", g, g.det())));
    }
    if !g.x1.is_zero()? {
        Ok(Decomposition { z: Z4::I, alpha: g.x3.mul(&g.x1.inv()?), beta: g.x1.clone(), gamma: g.x2.clone() })
    } else {
        Ok(Decomposition { z: Z4::W, alpha: T::zero(), beta: g.x3.clone(), gamma: g.x4.clone() })
    }
}

/// `z · (1 0; α 1) · (β γ; 0 β⁻¹)`.
pub fn compose<T: Field>(z: Z4, alpha: &T, beta: &T, gamma: &T) -> Result<Matrix2<T>> {
    if beta.is_zero()? {
        return Err(Error::DivisionByZero);
    }
    let h = Matrix2::lower(alpha.clone());
    let b = Matrix2::borel(beta.clone(), gamma.clone())?;
    Ok(z.matrix().mul(&h.mul(&b)))
}
