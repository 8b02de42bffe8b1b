//! Lazy exact formal Laurent series in `t` over [`Coefficient`].
//!
//! A series built from finitely presented data (polynomials and field
//! operations on them) carries an exact normal form `t^shift · num / den`
//! with `num(0) ≠ 0`, `den(0) = 1` and `gcd(num, den) = 1`. Zero detection
//! and valuation are then decided exactly. Series that involve an opaque
//! coefficient stream are evaluated lazily; any leading-term search on them
//! is bounded by the series' horizon and fails loudly past it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use super::coeff::Coefficient;
use super::upoly::{self, UPoly};
use crate::error::{Error, Result};

/// Default bound on leading-term searches.
pub const DEFAULT_HORIZON: usize = 256;

#[derive(Clone, PartialEq, Eq, Debug)]
struct RatForm {
    shift: i64,
    num: UPoly,
    den: UPoly,
}

impl RatForm {
    fn zero() -> Self {
        RatForm { shift: 0, num: Vec::new(), den: vec![Coefficient::one()] }
    }

    /// Normal form of `t^shift · num / den`.
    fn new(mut shift: i64, mut num: UPoly, mut den: UPoly) -> Result<Self> {
        upoly::trim(&mut num);
        upoly::trim(&mut den);
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if num.is_empty() {
            return Ok(RatForm::zero());
        }
        let nz = upoly::low_zeros(&num);
        let dz = upoly::low_zeros(&den);
        num.drain(..nz);
        den.drain(..dz);
        shift += nz as i64 - dz as i64;
        if den.len() > 1 {
            let g = upoly::gcd(&num, &den);
            if g.len() > 1 {
                num = upoly::divrem(&num, &g).0;
                den = upoly::divrem(&den, &g).0;
            }
        }
        if !den[0].is_one() {
            let inv = den[0].inv()?;
            num = upoly::scale(&num, &inv);
            den = upoly::scale(&den, &inv);
        }
        Ok(RatForm { shift, num, den })
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn is_polynomial(&self) -> bool {
        upoly::is_one(&self.den)
    }

    fn add(&self, o: &RatForm) -> RatForm {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(o.shift);
        let a = upoly::shift_up(&self.num, (self.shift - m) as usize);
        let b = upoly::shift_up(&o.num, (o.shift - m) as usize);
        let r = if self.den == o.den {
            RatForm::new(m, upoly::add(&a, &b), self.den.clone())
        } else {
            RatForm::new(
                m,
                upoly::add(&upoly::mul(&a, &o.den), &upoly::mul(&b, &self.den)),
                upoly::mul(&self.den, &o.den),
            )
        };
        r.expect("product of nonzero denominators")
    }

    fn neg(&self) -> RatForm {
        RatForm { shift: self.shift, num: upoly::neg(&self.num), den: self.den.clone() }
    }

    fn mul(&self, o: &RatForm) -> RatForm {
        if self.is_zero() || o.is_zero() {
            return RatForm::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return RatForm { shift: self.shift + o.shift, num: upoly::mul(&self.num, &o.num), den: self.den.clone() };
        }
        RatForm::new(self.shift + o.shift, upoly::mul(&self.num, &o.num), upoly::mul(&self.den, &o.den))
            .expect("product of nonzero denominators")
    }

    fn inv(&self) -> Result<RatForm> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatForm::new(-self.shift, self.den.clone(), self.num.clone())
    }
}

type Stream = Arc<dyn Fn(i64) -> Coefficient + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Exact,
    Add(LaurentSeries, LaurentSeries),
    Neg(LaurentSeries),
    Mul(LaurentSeries, LaurentSeries),
    Inv { x: LaurentSeries, v: i64, lead_inv: Coefficient },
    Stream(Stream),
}

struct Node {
    exact: Option<RatForm>,
    kind: Kind,
    /// No term has an exponent below `offset`.
    offset: i64,
    horizon: usize,
    /// Coefficients at exponents `offset, offset + 1, …`, filled in order.
    memo: Mutex<Vec<Coefficient>>,
}

/// A formal Laurent series `∑ aᵢ tⁱ` with exact coefficients.
#[derive(Clone)]
pub struct LaurentSeries(Arc<Node>);

impl LaurentSeries {
    fn from_form(form: RatForm, horizon: usize) -> Self {
        LaurentSeries(Arc::new(Node {
            offset: form.shift,
            exact: Some(form),
            kind: Kind::Exact,
            horizon,
            memo: Mutex::new(Vec::new()),
        }))
    }

    fn lazy(kind: Kind, offset: i64, horizon: usize) -> Self {
        LaurentSeries(Arc::new(Node { exact: None, kind, offset, horizon, memo: Mutex::new(Vec::new()) }))
    }

    pub fn zero() -> Self {
        LaurentSeries::from_form(RatForm::zero(), DEFAULT_HORIZON)
    }

    pub fn one() -> Self {
        LaurentSeries::constant(Coefficient::one())
    }

    pub fn from_i64(n: i64) -> Self {
        LaurentSeries::constant(Coefficient::from_i64(n))
    }

    pub fn constant(c: Coefficient) -> Self {
        LaurentSeries::monomial(c, 0)
    }

    /// The monomial `c · t^k`.
    pub fn monomial(c: Coefficient, k: i64) -> Self {
        LaurentSeries::polynomial(k, vec![c])
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        LaurentSeries::monomial(Coefficient::one(), k)
    }

    /// The Laurent polynomial `∑ coeffs[i] · t^(offset + i)`.
    pub fn polynomial(offset: i64, coeffs: Vec<Coefficient>) -> Self {
        let form = RatForm::new(offset, coeffs, vec![Coefficient::one()]).expect("unit denominator");
        LaurentSeries::from_form(form, DEFAULT_HORIZON)
    }

    /// The rational function `t^shift · num / den`.
    pub fn rational(shift: i64, num: Vec<Coefficient>, den: Vec<Coefficient>) -> Result<Self> {
        Ok(LaurentSeries::from_form(RatForm::new(shift, num, den)?, DEFAULT_HORIZON))
    }

    /// A series given by an opaque coefficient function, zero below `offset`.
    /// No exact normal form is available, so zero tests on it are bounded by
    /// the horizon.
    pub fn from_fn(offset: i64, f: impl Fn(i64) -> Coefficient + Send + Sync + 'static) -> Self {
        LaurentSeries::lazy(Kind::Stream(Arc::new(f)), offset, DEFAULT_HORIZON)
    }

    pub fn with_horizon(&self, horizon: usize) -> Self {
        assert!(horizon > 0, "horizon must be positive");
        let n = &*self.0;
        LaurentSeries(Arc::new(Node {
            exact: n.exact.clone(),
            kind: n.kind.clone(),
            offset: n.offset,
            horizon,
            memo: Mutex::new(Vec::new()),
        }))
    }

    pub fn horizon(&self) -> usize {
        self.0.horizon
    }

    /// Lower bound for the support; equals the valuation for exact nonzero series.
    pub fn offset(&self) -> i64 {
        self.0.offset
    }

    pub fn is_exact(&self) -> bool {
        self.0.exact.is_some()
    }

    /// True only when the series is known to be exactly zero.
    pub fn is_certified_zero(&self) -> bool {
        self.0.exact.as_ref().is_some_and(RatForm::is_zero)
    }

    /// Exact zero test; lazy series that show no nonzero term within the
    /// horizon yield a precision-horizon error.
    pub fn is_zero(&self) -> Result<bool> {
        if let Some(f) = &self.0.exact {
            return Ok(f.is_zero());
        }
        self.valuation().map(|_| false)
    }

    /// Coefficient of `t^n`.
    pub fn coeff(&self, n: i64) -> Coefficient {
        let node = &*self.0;
        if n < node.offset {
            return Coefficient::zero();
        }
        if let Some(f) = &node.exact {
            if f.is_polynomial() {
                return f.num.get((n - f.shift) as usize).cloned().unwrap_or_else(Coefficient::zero);
            }
        }
        let idx = (n - node.offset) as usize;
        let mut memo = node.memo.lock().unwrap_or_else(|e| e.into_inner());
        while memo.len() <= idx {
            let next = node.compute(memo.len(), &memo);
            memo.push(next);
        }
        memo[idx].clone()
    }

    /// Least exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Result<i64> {
        let node = &*self.0;
        if let Some(f) = &node.exact {
            return if f.is_zero() { Err(Error::ValuationOfZero) } else { Ok(f.shift) };
        }
        let start = node.offset;
        for e in start..start + node.horizon as i64 {
            if !self.coeff(e).is_zero() {
                return Ok(e);
            }
        }
        Err(Error::horizon(node.horizon, format!("searching for a leading term from t^{}", start)))
    }

    /// `(valuation, leading coefficient)`.
    pub fn leading(&self) -> Result<(i64, Coefficient)> {
        let v = self.valuation()?;
        Ok((v, self.coeff(v)))
    }

    /// The `t⁰` coefficient of an element of the valuation ring.
    pub fn residue(&self) -> Result<Coefficient> {
        if self.is_certified_zero() {
            return Ok(Coefficient::zero());
        }
        let v = self.valuation()?;
        if v < 0 {
            return Err(Error::NotInValuationRing { valuation: v });
        }
        Ok(self.coeff(0))
    }

    /// `res(t^{-γ} x)` for `x` of valuation `γ`.
    pub fn angular(&self, gamma: i64) -> Result<Coefficient> {
        let v = self.valuation()?;
        if v != gamma {
            return Err(Error::Precondition(format!("valuation is {}, not {}", v, gamma)));
        }
        Ok(self.coeff(gamma))
    }

    /// All nonzero terms with exponent below `n`, in increasing order.
    pub fn truncate(&self, n: i64) -> Vec<(i64, Coefficient)> {
        if self.is_certified_zero() {
            return Vec::new();
        }
        (self.offset()..n)
            .filter_map(|e| {
                let c = self.coeff(e);
                (!c.is_zero()).then_some((e, c))
            })
            .collect()
    }

    /// The Laurent polynomial of all terms below `t^n`.
    pub fn truncated(&self, n: i64) -> LaurentSeries {
        let start = self.offset();
        if n <= start {
            return LaurentSeries::zero();
        }
        LaurentSeries::polynomial(start, (start..n).map(|e| self.coeff(e)).collect())
    }

    /// Coefficients as `(offset, coefficients)` when the series is an exact
    /// Laurent polynomial.
    pub fn as_polynomial(&self) -> Option<(i64, &[Coefficient])> {
        match &self.0.exact {
            Some(f) if f.is_polynomial() => Some((f.shift, &f.num)),
            _ => None,
        }
    }

    /// `(shift, num, den)` of the exact normal form, if any.
    pub fn rational_parts(&self) -> Option<(i64, &[Coefficient], &[Coefficient])> {
        self.0.exact.as_ref().map(|f| (f.shift, f.num.as_slice(), f.den.as_slice()))
    }

    /// Whether the exact normal form mentions a residue indeterminate;
    /// `None` for lazily defined series.
    pub fn exact_involves_tau(&self) -> Option<bool> {
        self.0.exact.as_ref().map(|f| f.num.iter().chain(f.den.iter()).any(Coefficient::involves_tau))
    }

    /// Indices of residue indeterminates in the exact normal form.
    pub fn taus(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(f) = &self.0.exact {
            for c in f.num.iter().chain(f.den.iter()) {
                for i in c.taus() {
                    if !out.contains(&i) {
                        out.push(i);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Coefficientwise agreement for all exponents below `n`.
    pub fn agrees_to(&self, o: &LaurentSeries, n: i64) -> bool {
        let start = self.offset().min(o.offset());
        (start..n).all(|e| self.coeff(e) == o.coeff(e))
    }

    /// Equality decided exactly when both sides have normal forms, otherwise
    /// by comparing up to the horizon; agreement up to the horizon on lazy
    /// input is reported as a precision-horizon error.
    pub fn try_eq(&self, o: &LaurentSeries) -> Result<bool> {
        if let (Some(a), Some(b)) = (&self.0.exact, &o.0.exact) {
            return Ok(a == b);
        }
        let h = self.horizon().max(o.horizon());
        let start = self.offset().min(o.offset());
        if (start..start + h as i64).all(|e| self.coeff(e) == o.coeff(e)) {
            Err(Error::horizon(h, "comparing lazily defined series"))
        } else {
            Ok(false)
        }
    }

    pub fn inv(&self) -> Result<LaurentSeries> {
        if let Some(f) = &self.0.exact {
            return Ok(LaurentSeries::from_form(f.inv()?, self.horizon()));
        }
        let (v, lead) = self.leading()?;
        let lead_inv = lead.inv()?;
        Ok(LaurentSeries::lazy(Kind::Inv { x: self.clone(), v, lead_inv }, -v, self.horizon()))
    }

    pub fn div(&self, o: &LaurentSeries) -> Result<LaurentSeries> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<LaurentSeries> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = LaurentSeries::one().with_horizon(self.horizon());
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coefficient) -> LaurentSeries {
        self * &LaurentSeries::constant(c.clone())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentSeries {
        self * &LaurentSeries::t_pow(k)
    }

    fn combine_horizon(&self, o: &LaurentSeries) -> usize {
        self.horizon().min(o.horizon())
    }
}

impl Node {
    fn compute(&self, k: usize, memo: &[Coefficient]) -> Coefficient {
        let e = self.offset + k as i64;
        match &self.kind {
            Kind::Exact => {
                let f = self.exact.as_ref().expect("exact node");
                let mut c = f.num.get(k).cloned().unwrap_or_else(Coefficient::zero);
                for j in 1..f.den.len().min(k + 1) {
                    if !f.den[j].is_zero() {
                        c = &c - &(&f.den[j] * &memo[k - j]);
                    }
                }
                c
            }
            Kind::Add(a, b) => &a.coeff(e) + &b.coeff(e),
            Kind::Neg(a) => -&a.coeff(e),
            Kind::Mul(a, b) => {
                let mut c = Coefficient::zero();
                for i in a.offset()..=e - b.offset() {
                    let x = a.coeff(i);
                    if !x.is_zero() {
                        let y = b.coeff(e - i);
                        if !y.is_zero() {
                            c = &c + &(&x * &y);
                        }
                    }
                }
                c
            }
            Kind::Inv { x, v, lead_inv } => {
                if k == 0 {
                    return lead_inv.clone();
                }
                let mut c = Coefficient::zero();
                for j in 1..=k {
                    let u = x.coeff(v + j as i64);
                    if !u.is_zero() {
                        c = &c + &(&u * &memo[k - j]);
                    }
                }
                -&(&c * lead_inv)
            }
            Kind::Stream(f) => f(e),
        }
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, o: &LaurentSeries) -> LaurentSeries {
        let h = self.combine_horizon(o);
        if let (Some(a), Some(b)) = (&self.0.exact, &o.0.exact) {
            return LaurentSeries::from_form(a.add(b), h);
        }
        let off = self.offset().min(o.offset());
        LaurentSeries::lazy(Kind::Add(self.clone(), o.clone()), off, h)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        if let Some(a) = &self.0.exact {
            return LaurentSeries::from_form(a.neg(), self.horizon());
        }
        LaurentSeries::lazy(Kind::Neg(self.clone()), self.offset(), self.horizon())
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, o: &LaurentSeries) -> LaurentSeries {
        self + &(-o)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, o: &LaurentSeries) -> LaurentSeries {
        let h = self.combine_horizon(o);
        if let (Some(a), Some(b)) = (&self.0.exact, &o.0.exact) {
            return LaurentSeries::from_form(a.mul(b), h);
        }
        if self.is_certified_zero() || o.is_certified_zero() {
            return LaurentSeries::zero().with_horizon(h);
        }
        let off = self.offset() + o.offset();
        LaurentSeries::lazy(Kind::Mul(self.clone(), o.clone()), off, h)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, o: LaurentSeries) -> LaurentSeries { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

impl From<i64> for LaurentSeries {
    fn from(n: i64) -> Self {
        LaurentSeries::from_i64(n)
    }
}

impl From<Coefficient> for LaurentSeries {
    fn from(c: Coefficient) -> Self {
        LaurentSeries::constant(c)
    }
}

/// Exact normal forms compare structurally; lazily defined series compare
/// up to the larger horizon.
impl PartialEq for LaurentSeries {
    fn eq(&self, o: &LaurentSeries) -> bool {
        if Arc::ptr_eq(&self.0, &o.0) {
            return true;
        }
        self.try_eq(o).unwrap_or(true)
    }
}

/// Formats `c·t^e` as a signed addend: `(negative, magnitude text)`.
pub fn format_term(c: &Coefficient, e: i64, var: &str) -> (bool, String) {
    let negative = c.is_negative_real();
    let mag = if negative { -c } else { c.clone() };
    let body = if e == 0 {
        mag.to_string()
    } else {
        let v = if e == 1 { var.to_string() } else { format!("{}^{}", var, e) };
        if mag.is_one() {
            v
        } else {
            format!("{}*{}", mag.factor_string(), v)
        }
    };
    (negative, body)
}

/// Joins signed addends into `a + b - c` form.
pub fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in terms {
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_poly(shift: i64, coeffs: &[Coefficient]) -> String {
    join_terms(
        coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format_term(c, shift + i as i64, "t")),
    )
}

/// Number of terms shown for lazily defined series.
const DISPLAY_TERMS: i64 = 16;

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.exact {
            Some(r) if r.is_polynomial() || r.is_zero() => write!(f, "{}", format_poly(r.shift, &r.num)),
            Some(r) => {
                let body = format!("({})/({})", format_poly(0, &r.num), format_poly(0, &r.den));
                match r.shift {
                    0 => write!(f, "{}", body),
                    1 => write!(f, "t*{}", body),
                    s => write!(f, "t^{}*{}", s, body),
                }
            }
            None => {
                let stop = self.offset() + DISPLAY_TERMS;
                let terms = self.truncate(stop);
                let head = join_terms(terms.iter().map(|(e, c)| format_term(c, *e, "t")));
                write!(f, "{} + O(t^{})", head, stop)
            }
        }
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coefficient {
        Coefficient::from_i64(n)
    }

    fn poly(offset: i64, cs: &[i64]) -> LaurentSeries {
        LaurentSeries::polynomial(offset, cs.iter().map(|&x| c(x)).collect())
    }

    fn t() -> LaurentSeries {
        LaurentSeries::t_pow(1)
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentSeries::one();
        let p = &(&one + &t()) * &(&one - &t());
        assert_eq!(p.truncate(10), vec![(0, c(1)), (2, c(-1))]);
        assert_eq!(p, poly(0, &[1, 0, -1]));
    }

    #[test]
    fn geometric_series() {
        let g = poly(0, &[1, -1]).inv().unwrap();
        assert!((0..4).all(|e| g.coeff(e) == c(1)));
        assert_eq!(g.truncate(3), vec![(0, c(1)), (1, c(1)), (2, c(1))]);
    }

    #[test]
    fn monomials_multiply() {
        assert_eq!(&LaurentSeries::t_pow(-2) * &LaurentSeries::t_pow(5), LaurentSeries::t_pow(3));
    }

    #[test]
    fn valuations() {
        assert_eq!(poly(2, &[3, 0, 0, 1]).valuation(), Ok(2));
        assert_eq!(poly(-3, &[1, 1]).valuation(), Ok(-3));
        let z = &(&poly(0, &[1, 1]) - &LaurentSeries::one()) - &t();
        assert!(z.is_certified_zero());
        assert_eq!(z.valuation(), Err(Error::ValuationOfZero));
    }

    #[test]
    fn residues_and_angular_components() {
        assert_eq!(poly(0, &[5, 1]).residue(), Ok(c(5)));
        assert_eq!(LaurentSeries::t_pow(2).residue(), Ok(c(0)));
        assert_eq!(LaurentSeries::t_pow(-1).residue(), Err(Error::NotInValuationRing { valuation: -1 }));
        assert_eq!(poly(2, &[3, 0, 0, 1]).angular(2), Ok(c(3)));
        assert_eq!(LaurentSeries::t_pow(-1).angular(-1), Ok(c(1)));
        assert!(matches!(poly(2, &[3]).angular(1), Err(Error::Precondition(_))));
    }

    #[test]
    fn truncations() {
        assert!(LaurentSeries::t_pow(5).truncate(3).is_empty());
        assert_eq!(poly(0, &[1, 2]).truncate(10), vec![(0, c(1)), (1, c(2))]);
    }

    #[test]
    fn rational_normal_form_is_canonical() {
        // (1 - t^2)/(1 - t) = 1 + t
        let a = poly(0, &[1, 0, -1]).div(&poly(0, &[1, -1])).unwrap();
        assert_eq!(a.as_polynomial().map(|(s, cs)| (s, cs.to_vec())), Some((0, vec![c(1), c(1)])));
    }

    #[test]
    fn lazy_series_round_trip() {
        let s = LaurentSeries::from_fn(0, |e| Coefficient::from_i64(e + 1));
        let inv = s.inv().unwrap();
        let prod = &s * &inv;
        assert!(prod.agrees_to(&LaurentSeries::one(), 40));
        // reading out of order returns the memoized values
        let fresh = s.inv().unwrap();
        let a: Vec<_> = [7, 2, 9, 0].iter().map(|&e| fresh.coeff(e)).collect();
        let b: Vec<_> = [7, 2, 9, 0].iter().map(|&e| inv.coeff(e)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn lazy_zero_hits_the_horizon() {
        let z = LaurentSeries::from_fn(0, |_| Coefficient::zero()).with_horizon(16);
        assert!(z.valuation().unwrap_err().is_horizon());
        assert!(z.inv().unwrap_err().is_horizon());
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(LaurentSeries::zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn display() {
        assert_eq!(poly(-1, &[1, 1, 0, 2]).to_string(), "t^-1 + 1 + 2*t^2");
        assert_eq!(poly(0, &[1, -1]).inv().unwrap().to_string(), "(1)/(1 - t)");
        assert_eq!(LaurentSeries::zero().to_string(), "0");
        let half = LaurentSeries::monomial(Coefficient::ratio(-1, 2), 3);
        assert_eq!(half.to_string(), "-1/2*t^3");
    }
}
