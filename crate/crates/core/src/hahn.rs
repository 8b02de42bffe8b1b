//! The realization field: generalized series in `t` and infinite-level
//! generators `s1, …, sL` with value group `(ℚ^L ⊕ ℤ, lex)`.
//!
//! An element is stored as a quotient `P / Q` of Laurent polynomials in the
//! generators whose coefficients are Laurent series in `t`. The value of a
//! generator monomial `c · s^λ` is `(λ, v(c))`; distinct exponent vectors
//! have distinct level parts, so the value of `P` is the value of its
//! lex-least monomial. `Q` is kept normalized so that its least monomial is
//! `s^0` with coefficient `1`; consequently the leading term of `P / Q` is
//! the leading term of `P`, and zero tests reduce to exact zero tests on the
//! coefficients of `P`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::series::laurent::{format_term, join_terms};
use crate::series::{Coefficient, LaurentSeries};

/// A value in `ℚ^L ⊕ ℤ`, ordered lexicographically with the highest level
/// most significant and the `t`-exponent least significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Value {
    /// Index 0 is level 1; trailing zeros are trimmed.
    levels: Vec<Ratio<i64>>,
    std: i64,
}

impl Value {
    /// The embedded integer value `(0, …, 0 | n)`.
    pub fn standard(n: i64) -> Self {
        Value { levels: Vec::new(), std: n }
    }

    /// `levels[i]` is the component at level `i + 1`.
    pub fn new(levels: Vec<Ratio<i64>>, std: i64) -> Self {
        let mut v = Value { levels, std };
        v.trim();
        v
    }

    pub fn from_int_levels(levels: &[i64], std: i64) -> Self {
        Value::new(levels.iter().map(|&x| Ratio::from_integer(x)).collect(), std)
    }

    fn trim(&mut self) {
        while self.levels.last().is_some_and(Zero::is_zero) {
            self.levels.pop();
        }
    }

    pub fn std(&self) -> i64 {
        self.std
    }

    /// Component at `level` (1-based).
    pub fn level(&self, level: usize) -> Ratio<i64> {
        assert!(level >= 1);
        self.levels.get(level - 1).copied().unwrap_or_else(Ratio::zero)
    }

    /// True when every level component vanishes.
    pub fn is_standard(&self) -> bool {
        self.levels.is_empty()
    }

    /// The most significant nonzero level and its component.
    pub fn leading_level(&self) -> Option<(usize, Ratio<i64>)> {
        self.levels.last().map(|r| (self.levels.len(), *r))
    }

    /// Sign of the most significant level component: `Greater` means above
    /// every integer, `Less` below every integer, `Equal` standard.
    pub fn level_sign(&self) -> Ordering {
        match self.leading_level() {
            None => Ordering::Equal,
            Some((_, r)) if r.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    /// Divisibility of the value by `n` in `Γ`: level parts are rational, so
    /// only the integer part constrains.
    pub fn divisible_by(&self, n: i64) -> bool {
        assert!(n >= 1);
        self.std.rem_euclid(n) == 0
    }

    pub fn scale(&self, k: i64) -> Value {
        Value::new(self.levels.iter().map(|r| r * k).collect(), self.std * k)
    }
}

impl Ord for Value {
    fn cmp(&self, o: &Value) -> Ordering {
        let n = self.levels.len().max(o.levels.len());
        for i in (0..n).rev() {
            let a = self.levels.get(i).copied().unwrap_or_else(Ratio::zero);
            let b = o.levels.get(i).copied().unwrap_or_else(Ratio::zero);
            match a.cmp(&b) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        self.std.cmp(&o.std)
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, o: &Value) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Add for &Value {
    type Output = Value;
    fn add(self, o: &Value) -> Value {
        let n = self.levels.len().max(o.levels.len());
        let levels = (0..n)
            .map(|i| {
                self.levels.get(i).copied().unwrap_or_else(Ratio::zero)
                    + o.levels.get(i).copied().unwrap_or_else(Ratio::zero)
            })
            .collect();
        Value::new(levels, self.std + o.std)
    }
}

impl Neg for &Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value::new(self.levels.iter().map(|r| -r).collect(), -self.std)
    }
}

impl Sub for &Value {
    type Output = Value;
    fn sub(self, o: &Value) -> Value {
        self + &(-o)
    }
}

fn fmt_ratio(r: &Ratio<i64>) -> String {
    let sign = if r.is_negative() { "-" } else { "+" };
    let a = r.abs();
    if *a.denom() == 1 {
        format!("{}{}", sign, a.numer())
    } else {
        format!("{}{}/{}", sign, a.numer(), a.denom())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.levels.len())
            .rev()
            .filter(|&i| !self.levels[i].is_zero())
            .map(|i| format!("level{} {}", i + 1, fmt_ratio(&self.levels[i])))
            .collect();
        if parts.is_empty() {
            write!(f, "(0 | std {})", self.std)
        } else {
            write!(f, "({} | std {})", parts.join(", "), self.std)
        }
    }
}

/// Exponent vector of a generator monomial; index 0 is level 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LevelMonomial(SmallVec<[i32; 4]>);

impl LevelMonomial {
    pub fn one() -> Self {
        LevelMonomial(SmallVec::new())
    }

    /// `s_level^exp`.
    pub fn generator(level: usize, exp: i32) -> Self {
        assert!(level >= 1);
        let mut v = SmallVec::from_elem(0, level);
        v[level - 1] = exp;
        LevelMonomial::from_vec(v)
    }

    fn from_vec(mut v: SmallVec<[i32; 4]>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        LevelMonomial(v)
    }

    pub fn from_exponents(exps: &[i32]) -> Self {
        LevelMonomial::from_vec(exps.iter().copied().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, level: usize) -> i32 {
        self.0.get(level - 1).copied().unwrap_or(0)
    }

    /// Highest level with a nonzero exponent (0 for the unit monomial).
    pub fn max_level(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, o: &LevelMonomial) -> LevelMonomial {
        let n = self.0.len().max(o.0.len());
        LevelMonomial::from_vec((1..=n).map(|l| self.exponent(l) + o.exponent(l)).collect())
    }

    pub fn inv(&self) -> LevelMonomial {
        LevelMonomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn value_levels(&self) -> Vec<Ratio<i64>> {
        self.0.iter().map(|&e| Ratio::from_integer(e as i64)).collect()
    }
}

impl Ord for LevelMonomial {
    fn cmp(&self, o: &LevelMonomial) -> Ordering {
        let n = self.0.len().max(o.0.len());
        for l in (1..=n).rev() {
            match self.exponent(l).cmp(&o.exponent(l)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for LevelMonomial {
    fn partial_cmp(&self, o: &LevelMonomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for LevelMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { format!("s{}", i + 1) } else { format!("s{}^{}", i + 1, e) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Laurent polynomial in the generators with Laurent-series coefficients;
/// stored coefficients are never certified zero.
type SPoly = BTreeMap<LevelMonomial, LaurentSeries>;

fn spoly_insert(p: &mut SPoly, m: LevelMonomial, c: LaurentSeries) {
    if c.is_certified_zero() {
        return;
    }
    match p.remove(&m) {
        None => {
            p.insert(m, c);
        }
        Some(old) => {
            let s = &old + &c;
            if !s.is_certified_zero() {
                p.insert(m, s);
            }
        }
    }
}

fn spoly_add(a: &SPoly, b: &SPoly) -> SPoly {
    let mut out = a.clone();
    for (m, c) in b {
        spoly_insert(&mut out, m.clone(), c.clone());
    }
    out
}

fn spoly_neg(a: &SPoly) -> SPoly {
    a.iter().map(|(m, c)| (m.clone(), -c)).collect()
}

fn spoly_mul(a: &SPoly, b: &SPoly) -> SPoly {
    let mut out = SPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            spoly_insert(&mut out, ma.mul(mb), ca * cb);
        }
    }
    out
}

fn spoly_mul_term(a: &SPoly, m: &LevelMonomial, c: &LaurentSeries) -> SPoly {
    let mut out = SPoly::new();
    for (ma, ca) in a {
        spoly_insert(&mut out, ma.mul(m), ca * c);
    }
    out
}

fn spoly_one() -> SPoly {
    let mut p = SPoly::new();
    p.insert(LevelMonomial::one(), LaurentSeries::one());
    p
}

fn spoly_is_one(p: &SPoly) -> bool {
    p.len() == 1
        && p.iter().next().is_some_and(|(m, c)| {
            m.is_one() && c.as_polynomial().is_some_and(|(s, cs)| s == 0 && cs.len() == 1 && cs[0].is_one())
        })
}

/// Terms enumerated so far, with the not-yet-enumerated remainder.
type TermCache = (Vec<(Value, Coefficient)>, Option<HahnElement>);

struct Inner {
    num: SPoly,
    /// `None` means denominator `1`.
    den: Option<SPoly>,
    terms: Mutex<TermCache>,
}

/// An element of the realization field.
#[derive(Clone)]
pub struct HahnElement(Arc<Inner>);

impl HahnElement {
    fn from_parts(num: SPoly, den: Option<SPoly>) -> Self {
        let den = if num.is_empty() { None } else { den.filter(|d| !spoly_is_one(d)) };
        HahnElement(Arc::new(Inner { num, den, terms: Mutex::new((Vec::new(), None)) }))
    }

    pub fn zero() -> Self {
        HahnElement::from_parts(SPoly::new(), None)
    }

    pub fn one() -> Self {
        HahnElement::embed(&LaurentSeries::one())
    }

    pub fn from_i64(n: i64) -> Self {
        HahnElement::embed(&LaurentSeries::from_i64(n))
    }

    /// The image of a Laurent series under `M ≺ M̄`.
    pub fn embed(x: &LaurentSeries) -> Self {
        let mut num = SPoly::new();
        spoly_insert(&mut num, LevelMonomial::one(), x.clone());
        HahnElement::from_parts(num, None)
    }

    /// `c · s^m`.
    pub fn monomial(c: &LaurentSeries, m: LevelMonomial) -> Self {
        let mut num = SPoly::new();
        spoly_insert(&mut num, m, c.clone());
        HahnElement::from_parts(num, None)
    }

    /// `s_level^{sign}`, for `1 ≤ level ≤ max_levels`.
    pub fn generator(level: usize, sign: i32, max_levels: usize) -> Result<Self> {
        if level == 0 || level > max_levels {
            return Err(Error::LevelOutOfRange { level, max: max_levels });
        }
        assert!(sign == 1 || sign == -1, "generator sign must be ±1");
        Ok(HahnElement::monomial(&LaurentSeries::one(), LevelMonomial::generator(level, sign)))
    }

    pub fn is_certified_zero(&self) -> bool {
        self.0.num.is_empty()
    }

    /// Zero test; exact whenever the coefficients carry normal forms.
    pub fn is_zero(&self) -> Result<bool> {
        if self.is_certified_zero() {
            return Ok(true);
        }
        for c in self.0.num.values() {
            if !c.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The element as a Laurent series, when no generator occurs.
    pub fn as_series(&self) -> Option<LaurentSeries> {
        if self.is_certified_zero() {
            return Some(LaurentSeries::zero());
        }
        if self.0.den.is_some() || self.0.num.len() != 1 {
            return None;
        }
        let (m, c) = self.0.num.iter().next()?;
        m.is_one().then(|| c.clone())
    }

    /// Highest level mentioned in the element (0 if none).
    pub fn max_level(&self) -> usize {
        let n = self.0.num.keys().map(LevelMonomial::max_level).max().unwrap_or(0);
        let d = self.0.den.iter().flat_map(|d| d.keys()).map(LevelMonomial::max_level).max().unwrap_or(0);
        n.max(d)
    }

    /// Residue indeterminates occurring in the element's coefficients.
    pub fn taus(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let all = self.0.num.values().chain(self.0.den.iter().flat_map(|d| d.values()));
        for c in all {
            for i in c.taus() {
                if !out.contains(&i) {
                    out.push(i);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn lowest(p: &SPoly) -> Result<(&LevelMonomial, &LaurentSeries)> {
        p.iter().next().ok_or(Error::ValuationOfZero)
    }

    fn den_lead(&self) -> Result<(Value, Coefficient)> {
        match &self.0.den {
            None => Ok((Value::standard(0), Coefficient::one())),
            Some(d) => {
                let (m, c) = HahnElement::lowest(d)?;
                let (v, lc) = c.leading()?;
                Ok((Value::new(m.value_levels(), v), lc))
            }
        }
    }

    /// `(value, coefficient)` of the least term.
    pub fn leading(&self) -> Result<(Value, Coefficient)> {
        let (m, c) = HahnElement::lowest(&self.0.num)?;
        let (v, lc) = c.leading()?;
        let (dv, dc) = self.den_lead()?;
        let val = &Value::new(m.value_levels(), v) - &dv;
        let coeff = if dc.is_one() { lc } else { lc.div(&dc)? };
        Ok((val, coeff))
    }

    pub fn valuation(&self) -> Result<Value> {
        Ok(self.leading()?.0)
    }

    /// The coefficient series of all terms with vanishing level part, when
    /// the leading level is zero; `None` when the value lies off the
    /// standard levels.
    pub fn level_zero_part(&self) -> Result<Option<LaurentSeries>> {
        let (m, c) = HahnElement::lowest(&self.0.num)?;
        if !m.is_one() {
            return Ok(None);
        }
        match &self.0.den {
            None => Ok(Some(c.clone())),
            Some(d) => {
                let (dm, dc) = HahnElement::lowest(d)?;
                debug_assert!(dm.is_one());
                Ok(Some(c.div(dc)?))
            }
        }
    }

    /// The first `n` terms in increasing value order (fewer if the element
    /// has finite support).
    pub fn terms(&self, n: usize) -> Result<Vec<(Value, Coefficient)>> {
        let mut guard = self.0.terms.lock().unwrap_or_else(|e| e.into_inner());
        let (done, rest) = &mut *guard;
        if done.is_empty() && rest.is_none() {
            *rest = Some(self.clone());
        }
        while done.len() < n {
            let r = match rest.as_ref() {
                Some(r) if !r.is_certified_zero() => r.clone(),
                _ => break,
            };
            let (v, c) = r.leading()?;
            let term = HahnElement::term(&v, &c)?;
            *rest = Some(&r - &term);
            done.push((v, c));
        }
        Ok(done.iter().take(n).cloned().collect())
    }

    /// The single term `c · t^std · s^levels` (integer levels only).
    pub fn term(v: &Value, c: &Coefficient) -> Result<HahnElement> {
        let mut exps = Vec::new();
        for l in 1..=v.levels.len() {
            let r = v.level(l);
            if !r.is_integer() {
                return Err(Error::Precondition(format!("fractional level exponent {}", r)));
            }
            exps.push(r.to_integer() as i32);
        }
        Ok(HahnElement::monomial(&LaurentSeries::monomial(c.clone(), v.std()), LevelMonomial::from_exponents(&exps)))
    }

    pub fn inv(&self) -> Result<HahnElement> {
        if self.is_certified_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = &self.0.num;
        let (m, c) = HahnElement::lowest(num)?;
        // normalize by the least monomial of the new denominator
        let c_inv = c.inv()?;
        let m_inv = m.inv();
        let new_num = spoly_mul_term(self.0.den.as_ref().unwrap_or(&spoly_one()), &m_inv, &c_inv);
        if num.len() == 1 {
            return Ok(HahnElement::from_parts(new_num, None));
        }
        let new_den = spoly_mul_term(num, &m_inv, &c_inv);
        Ok(HahnElement::from_parts(new_num, Some(new_den)))
    }

    pub fn div(&self, o: &HahnElement) -> Result<HahnElement> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<HahnElement> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = HahnElement::one();
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

    /// Equality of field elements, decided by an exact zero test on the
    /// difference.
    pub fn try_eq(&self, o: &HahnElement) -> Result<bool> {
        (self - o).is_zero()
    }

    /// Coefficientwise agreement of the first `n` terms of both expansions.
    pub fn agrees_to(&self, o: &HahnElement, n: usize) -> Result<bool> {
        Ok(self.terms(n)? == o.terms(n)?)
    }
}

/// Splits `x` into its maximal standard, residue-free initial segment and
/// the remainder.
///
/// The base collects the terms of value `(0 | k)` in increasing order until
/// the first coefficient mentioning a residue indeterminate; every
/// indeterminate is treated as designated. The remainder `x − base` is
/// either certified zero or has a leading term breaking one of these
/// conditions.
pub fn standard_prefix(x: &HahnElement) -> Result<(LaurentSeries, HahnElement)> {
    if x.is_certified_zero() {
        return Ok((LaurentSeries::zero(), HahnElement::zero()));
    }
    let c0 = match x.level_zero_part()? {
        None => return Ok((LaurentSeries::zero(), x.clone())),
        Some(c0) => c0,
    };
    let base = match c0.exact_involves_tau() {
        Some(false) => c0,
        _ => {
            let start = c0.offset();
            let stop = start + c0.horizon() as i64;
            let cut = (start..stop)
                .find(|&e| c0.coeff(e).involves_tau())
                .ok_or_else(|| Error::horizon(c0.horizon(), "looking for the end of the standard part"))?;
            c0.truncated(cut)
        }
    };
    let rem = x - &HahnElement::embed(&base);
    Ok((base, rem))
}

impl Add for &HahnElement {
    type Output = HahnElement;
    fn add(self, o: &HahnElement) -> HahnElement {
        if self.is_certified_zero() {
            return o.clone();
        }
        if o.is_certified_zero() {
            return self.clone();
        }
        match (&self.0.den, &o.0.den) {
            (None, None) => HahnElement::from_parts(spoly_add(&self.0.num, &o.0.num), None),
            (Some(a), Some(b)) if a == b => HahnElement::from_parts(spoly_add(&self.0.num, &o.0.num), Some(a.clone())),
            (None, Some(d)) => {
                HahnElement::from_parts(spoly_add(&spoly_mul(&self.0.num, d), &o.0.num), Some(d.clone()))
            }
            (Some(d), None) => {
                HahnElement::from_parts(spoly_add(&self.0.num, &spoly_mul(&o.0.num, d)), Some(d.clone()))
            }
            (Some(a), Some(b)) => HahnElement::from_parts(
                spoly_add(&spoly_mul(&self.0.num, b), &spoly_mul(&o.0.num, a)),
                Some(spoly_mul(a, b)),
            ),
        }
    }
}

impl Neg for &HahnElement {
    type Output = HahnElement;
    fn neg(self) -> HahnElement {
        HahnElement::from_parts(spoly_neg(&self.0.num), self.0.den.clone())
    }
}

impl Sub for &HahnElement {
    type Output = HahnElement;
    fn sub(self, o: &HahnElement) -> HahnElement {
        self + &(-o)
    }
}

impl Mul for &HahnElement {
    type Output = HahnElement;
    fn mul(self, o: &HahnElement) -> HahnElement {
        if self.is_certified_zero() || o.is_certified_zero() {
            return HahnElement::zero();
        }
        let num = spoly_mul(&self.0.num, &o.0.num);
        let den = match (&self.0.den, &o.0.den) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(spoly_mul(a, b)),
        };
        HahnElement::from_parts(num, den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for HahnElement {
            type Output = HahnElement;
            fn $m(self, o: HahnElement) -> HahnElement { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for HahnElement {
    type Output = HahnElement;
    fn neg(self) -> HahnElement {
        -&self
    }
}

impl From<LaurentSeries> for HahnElement {
    fn from(x: LaurentSeries) -> Self {
        HahnElement::embed(&x)
    }
}

/// Equality by exact zero test of the difference; undecidable comparisons
/// of lazily defined coefficients count as equal.
impl PartialEq for HahnElement {
    fn eq(&self, o: &HahnElement) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || self.try_eq(o).unwrap_or(true)
    }
}

fn format_spoly(p: &SPoly) -> String {
    join_terms(p.iter().map(|(m, c)| {
        if m.is_one() {
            let s = c.to_string();
            return match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
        }
        match c.as_polynomial() {
            Some((shift, cs)) if cs.len() == 1 => {
                let (neg, body) = format_term(&cs[0], shift, "t");
                if body == "1" {
                    (neg, m.to_string())
                } else {
                    (neg, format!("{}*{}", wrap_factor(&body), m))
                }
            }
            _ => (false, format!("({})*{}", c, m)),
        }
    }))
}

fn wrap_factor(s: &str) -> String {
    let depth_zero_sum = {
        let mut depth = 0i32;
        let mut found = false;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > 0 => found = true,
                '/' if depth == 0 => found = true,
                _ => {}
            }
        }
        found
    };
    if depth_zero_sum {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

impl fmt::Display for HahnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_spoly(&self.0.num);
        match &self.0.den {
            None => write!(f, "{}", num),
            Some(d) => write!(f, "({})/({})", num, format_spoly(d)),
        }
    }
}

impl fmt::Debug for HahnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HahnElement({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: usize = 8;

    fn s(level: usize, sign: i32) -> HahnElement {
        HahnElement::generator(level, sign, L).unwrap()
    }

    fn t(k: i64) -> HahnElement {
        HahnElement::embed(&LaurentSeries::t_pow(k))
    }

    fn c(n: i64) -> Coefficient {
        Coefficient::from_i64(n)
    }

    #[test]
    fn embedding_terms() {
        let x = HahnElement::embed(&LaurentSeries::polynomial(0, vec![c(1), c(1)]));
        assert_eq!(x.terms(5).unwrap(), vec![(Value::standard(0), c(1)), (Value::standard(1), c(1))]);
        assert!(HahnElement::embed(&LaurentSeries::zero()).is_certified_zero());
        let g = LaurentSeries::polynomial(0, vec![c(1), c(-1)]).inv().unwrap();
        let terms = HahnElement::embed(&g).terms(4).unwrap();
        assert_eq!(terms.len(), 4);
        assert!(terms.iter().enumerate().all(|(i, (v, k))| *v == Value::standard(i as i64) && *k == c(1)));
    }

    #[test]
    fn generators() {
        assert_eq!(s(1, 1).valuation().unwrap(), Value::from_int_levels(&[1], 0));
        assert_eq!(s(1, -1).valuation().unwrap(), Value::from_int_levels(&[-1], 0));
        assert_eq!(HahnElement::generator(L + 1, 1, L).unwrap_err(), Error::LevelOutOfRange { level: L + 1, max: L });
    }

    #[test]
    fn field_operations() {
        assert!((&s(1, 1) * &s(1, -1)).try_eq(&HahnElement::one()).unwrap());
        let x = (&HahnElement::one() + &s(1, 1)).inv().unwrap();
        let lv = |k: i64| Value::from_int_levels(&[k], 0);
        assert_eq!(x.terms(3).unwrap(), vec![(lv(0), c(1)), (lv(1), c(-1)), (lv(2), c(1))]);
        let p = &(&t(1) * &s(1, -1)) * &(&t(2) * &s(1, 1));
        assert!(p.try_eq(&t(3)).unwrap());
    }

    #[test]
    fn valuations() {
        assert_eq!((&t(2) * &s(1, 1)).valuation().unwrap(), Value::from_int_levels(&[1], 2));
        assert_eq!((&s(2, -1) + &t(1)).valuation().unwrap(), Value::from_int_levels(&[0, -1], 0));
        assert_eq!(HahnElement::from_i64(5).valuation().unwrap(), Value::standard(0));
        assert_eq!(HahnElement::zero().valuation().unwrap_err(), Error::ValuationOfZero);
    }

    #[test]
    fn value_order_is_lexicographic() {
        let a = Value::from_int_levels(&[5], -100);
        let b = Value::from_int_levels(&[0, 1], -1000);
        let z = Value::standard(1_000_000);
        assert!(z < a && a < b);
        assert!(Value::from_int_levels(&[-1], 0) < Value::standard(-1_000_000));
    }

    #[test]
    fn standard_prefix_examples() {
        let g = LaurentSeries::polynomial(0, vec![c(1), c(-1)]).inv().unwrap();
        let x = &HahnElement::embed(&g) + &s(1, 1);
        let (base, rem) = standard_prefix(&x).unwrap();
        assert_eq!(base, g);
        assert!(rem.try_eq(&s(1, 1)).unwrap());

        let tau = LaurentSeries::monomial(Coefficient::tau(1), 3);
        let y = HahnElement::embed(&(&tau + &LaurentSeries::from_i64(2)));
        let (base, rem) = standard_prefix(&y).unwrap();
        assert_eq!(base, LaurentSeries::from_i64(2));
        assert!(rem.try_eq(&HahnElement::embed(&tau)).unwrap());

        let z = HahnElement::embed(&LaurentSeries::polynomial(0, vec![c(5), c(1)]));
        let (base, rem) = standard_prefix(&z).unwrap();
        assert_eq!(base, LaurentSeries::polynomial(0, vec![c(5), c(1)]));
        assert!(rem.is_certified_zero());
    }

    #[test]
    fn quotient_leading_terms() {
        // (t + s1) / (1 + t*s2^-1): the denominator's least term is t*s2^-1
        let n = &t(1) + &s(1, 1);
        let d = &HahnElement::one() + &(&t(1) * &s(2, -1));
        let q = n.div(&d).unwrap();
        let back = &q * &d;
        assert!(back.try_eq(&n).unwrap());
        assert_eq!(q.valuation().unwrap(), Value::from_int_levels(&[0, 1], 0));
    }

    #[test]
    fn display_round_trip_shape() {
        let x = &(&t(2) * &s(1, 1)) + &HahnElement::from_i64(-3);
        assert_eq!(x.to_string(), "-3 + t^2*s1");
    }
}
