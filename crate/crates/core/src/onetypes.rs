//! Complete 1-types over `M = ℂ((t))`: the four kinds of the
//! classification lemma, classification of realization-field elements,
//! canonical and heir realizations, and the polynomial-evaluation argument
//! deciding `Pₙ(f(x))` and `v(f(x))` under a type.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::hahn::{standard_prefix, HahnElement, LevelMonomial, Value};
use crate::series::{Coefficient, LaurentSeries};
use crate::valfield::CosetLabel;
use crate::Config;

/// A complete 1-type over `M` in normal form.
#[derive(Clone, PartialEq, Debug)]
pub enum OneType {
    /// Kind (a): `x = a`.
    Realized(LaurentSeries),
    /// Kind (b): `v(x − a)` above every integer, `x − a` in coset `k`.
    Infinitesimal(LaurentSeries, CosetLabel),
    /// Kind (c): `v(x)` below every integer, `x` in coset `k`.
    Unbounded(CosetLabel),
    /// Kind (d): `v(x − a) = n` with transcendental angular component;
    /// `a` is a Laurent polynomial of degree below `n`.
    Residual { a: LaurentSeries, n: i64, tau: usize },
}

impl OneType {
    /// Checked constructor for kind (d).
    pub fn residual(a: LaurentSeries, n: i64, tau: usize) -> Result<OneType> {
        if tau == 0 {
            return Err(Error::Precondition("residue indeterminates are numbered from 1".into()));
        }
        if !a.is_certified_zero() {
            let (shift, cs) = a
                .as_polynomial()
                .ok_or_else(|| Error::Precondition("residual base point must be a Laurent polynomial".into()))?;
            if shift + cs.len() as i64 > n {
                return Err(Error::Precondition(format!("residual base point {} must have degree below {}", a, n)));
            }
            if cs.iter().any(Coefficient::involves_tau) {
                return Err(Error::Precondition("residual base point must not mention tau".into()));
            }
        }
        Ok(OneType::Residual { a, n, tau })
    }

    /// Short kind name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            OneType::Realized(_) => "realized",
            OneType::Infinitesimal(..) => "infinitesimal",
            OneType::Unbounded(_) => "unbounded",
            OneType::Residual { .. } => "residual",
        }
    }

    /// True for the type of `0`.
    pub fn is_zero_type(&self) -> bool {
        matches!(self, OneType::Realized(a) if a.is_certified_zero())
    }

    /// Coset label of any realization.
    pub fn coset_label(&self) -> Result<CosetLabel> {
        match self {
            OneType::Realized(a) => a.valuation(),
            OneType::Infinitesimal(a, k) => {
                if a.is_certified_zero() {
                    Ok(*k)
                } else {
                    a.valuation()
                }
            }
            OneType::Unbounded(k) => Ok(*k),
            OneType::Residual { a, n, .. } => {
                if a.is_certified_zero() {
                    Ok(*n)
                } else {
                    a.valuation()
                }
            }
        }
    }
}

impl fmt::Display for OneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OneType::Realized(a) => write!(f, "real[a={}]", a),
            OneType::Infinitesimal(a, k) => write!(f, "pzero[a={},k={}]", a, k),
            OneType::Unbounded(k) => write!(f, "pinf[k={}]", k),
            OneType::Residual { a, n, tau } => write!(f, "res[a={},n={},tau={}]", a, n, tau),
        }
    }
}

/// Bookkeeping of levels and residue indeterminates used so far by a chain
/// of realizations.
#[derive(Clone, Debug)]
pub struct Allocator {
    max_levels: usize,
    top_level: usize,
    taus: Vec<usize>,
}

impl Allocator {
    pub fn new(max_levels: usize) -> Self {
        Allocator { max_levels, top_level: 0, taus: Vec::new() }
    }

    pub fn max_levels(&self) -> usize {
        self.max_levels
    }

    /// Highest level allocated so far (0 if none).
    pub fn top_level(&self) -> usize {
        self.top_level
    }

    /// A level strictly above everything used so far.
    pub fn fresh_level(&mut self) -> Result<usize> {
        let next = self.top_level + 1;
        if next > self.max_levels {
            return Err(Error::LevelsExhausted { needed: next, available: self.max_levels });
        }
        self.top_level = next;
        Ok(next)
    }

    /// Claims `tau` if unused, otherwise a fresh indeterminate.
    pub fn claim_tau(&mut self, tau: usize) -> usize {
        let t = if self.taus.contains(&tau) { self.taus.iter().max().copied().unwrap_or(0) + 1 } else { tau };
        self.taus.push(t);
        t
    }

    /// Records the levels and indeterminates occurring in `x`.
    pub fn observe(&mut self, x: &HahnElement) {
        self.top_level = self.top_level.max(x.max_level());
        for t in x.taus() {
            if !self.taus.contains(&t) {
                self.taus.push(t);
            }
        }
    }
}

/// Canonical realization with a fresh allocation context.
pub fn realize(p: &OneType, cfg: &Config) -> Result<HahnElement> {
    heir_realize(p, &mut Allocator::new(cfg.levels))
}

/// Realization of the heir of `p` over everything allocated in `ctx`: the
/// fresh generator lives strictly above every level in use, so its value
/// lies above (infinitesimal) or below (unbounded) everything previously
/// definable.
pub fn heir_realize(p: &OneType, ctx: &mut Allocator) -> Result<HahnElement> {
    match p {
        OneType::Realized(a) => Ok(HahnElement::embed(a)),
        OneType::Infinitesimal(a, k) => {
            let l = ctx.fresh_level()?;
            let eps = HahnElement::monomial(&LaurentSeries::t_pow(*k), LevelMonomial::generator(l, 1));
            Ok(&HahnElement::embed(a) + &eps)
        }
        OneType::Unbounded(k) => {
            let l = ctx.fresh_level()?;
            Ok(HahnElement::monomial(&LaurentSeries::t_pow(*k), LevelMonomial::generator(l, -1)))
        }
        OneType::Residual { a, n, tau } => {
            let tau = ctx.claim_tau(*tau);
            let r = LaurentSeries::monomial(Coefficient::tau(tau), *n);
            Ok(HahnElement::embed(&(a + &r)))
        }
    }
}

/// The complete 1-type over `M` of `x`.
pub fn classify(x: &HahnElement) -> Result<OneType> {
    let (a, r) = standard_prefix(x)?;
    if r.is_zero()? {
        return Ok(OneType::Realized(a));
    }
    let (vr, cr) = r.leading()?;
    if vr.is_standard() && cr.involves_tau() {
        let tau = cr.taus()[0];
        return OneType::residual(a, vr.std(), tau);
    }
    let vx = x.valuation()?;
    if vx.level_sign() == Ordering::Less {
        return Ok(OneType::Unbounded(vx.std()));
    }
    if vr.level_sign() == Ordering::Greater {
        return Ok(OneType::Infinitesimal(a, vr.std()));
    }
    Err(Error::Unclassifiable(format!("remainder {} of {} has leading value {}", r, x, vr)))
}

/// A polynomial over `M`, coefficients listed from the constant term up.
pub type PolyM = [LaurentSeries];

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Taylor coefficients `c_k = f^{(k)}(a)/k!`, so that `f(a + y) = ∑ c_k yᵏ`.
pub fn taylor_coefficients(f: &PolyM, a: &LaurentSeries) -> Vec<LaurentSeries> {
    let d = f.len();
    let mut powers = vec![LaurentSeries::one()];
    for i in 1..d {
        powers.push(&powers[i - 1] * a);
    }
    (0..d)
        .map(|k| {
            let mut c = LaurentSeries::zero();
            for i in k..d {
                if !f[i].is_certified_zero() {
                    let b = LaurentSeries::from_i64(binomial(i, k));
                    c = &c + &(&(&f[i] * &b) * &powers[i - k]);
                }
            }
            c
        })
        .collect()
}

fn degree(f: &PolyM) -> Option<usize> {
    f.iter().rposition(|c| !c.is_certified_zero())
}

/// `v(f(x))` under `p`, read off the Taylor expansion at the base point as
/// in the proof of the classification lemma; level components refer to the
/// canonical realization (fresh level 1).
pub fn decide_valuation_of_polynomial(p: &OneType, f: &PolyM) -> Result<Value> {
    let d = degree(f).ok_or_else(|| Error::Precondition("the zero polynomial has no valuation".into()))?;
    match p {
        OneType::Realized(a) => {
            let c = &taylor_coefficients(f, a)[0];
            if c.is_zero()? {
                return Err(Error::Precondition(format!("f vanishes at the realized point {}", a)));
            }
            Ok(Value::standard(c.valuation()?))
        }
        OneType::Infinitesimal(a, m) => {
            let cs = taylor_coefficients(f, a);
            for (j, c) in cs.iter().enumerate() {
                if !c.is_zero()? {
                    return Ok(Value::from_int_levels(&[j as i64], c.valuation()? + j as i64 * m));
                }
            }
            unreachable!("a nonzero polynomial has a nonzero Taylor coefficient")
        }
        OneType::Unbounded(m) => Ok(Value::from_int_levels(&[-(d as i64)], f[d].valuation()? + d as i64 * m)),
        OneType::Residual { a, n, .. } => {
            let cs = taylor_coefficients(f, a);
            let mut best: Option<i64> = None;
            for (j, c) in cs.iter().enumerate() {
                if !c.is_zero()? {
                    let v = c.valuation()? + j as i64 * n;
                    best = Some(best.map_or(v, |b| b.min(v)));
                }
            }
            Ok(Value::standard(best.expect("nonzero polynomial")))
        }
    }
}

/// `Pₙ(f(x))` under `p`, by the lemma-proof shortcut: `Pₙ` depends only on
/// the value of `f(x)`.
pub fn decide_pn_of_polynomial(p: &OneType, f: &PolyM, n: u32) -> Result<bool> {
    assert!(n >= 1);
    Ok(decide_valuation_of_polynomial(p, f)?.divisible_by(n as i64))
}

/// `f(x)` evaluated at a realization `x` (Horner).
pub fn evaluate(f: &PolyM, x: &HahnElement) -> HahnElement {
    let mut acc = HahnElement::zero();
    for c in f.iter().rev() {
        acc = &(&acc * x) + &HahnElement::embed(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valfield::pn_holds;

    fn cfg() -> Config {
        Config::default()
    }

    fn c(n: i64) -> Coefficient {
        Coefficient::from_i64(n)
    }

    fn poly(offset: i64, cs: &[i64]) -> LaurentSeries {
        LaurentSeries::polynomial(offset, cs.iter().map(|&x| c(x)).collect())
    }

    fn gen(level: usize, sign: i32) -> HahnElement {
        HahnElement::generator(level, sign, 8).unwrap()
    }

    #[test]
    fn classify_examples() {
        let x = HahnElement::embed(&poly(0, &[5, 1]));
        assert_eq!(classify(&x).unwrap(), OneType::Realized(poly(0, &[5, 1])));

        let y = &HahnElement::embed(&LaurentSeries::t_pow(2)) * &gen(1, 1);
        assert_eq!(classify(&y).unwrap(), OneType::Infinitesimal(LaurentSeries::zero(), 2));
        // oracle: y / t^2 lies in every Pn
        let unit = y.div(&HahnElement::embed(&LaurentSeries::t_pow(2))).unwrap();
        assert!((1..=10).all(|n| pn_holds(&unit, n).unwrap()));

        assert_eq!(classify(&gen(1, -1)).unwrap(), OneType::Unbounded(0));

        let z = HahnElement::embed(&(&LaurentSeries::from_i64(2) + &LaurentSeries::monomial(Coefficient::tau(1), 3)));
        assert_eq!(classify(&z).unwrap(), OneType::residual(LaurentSeries::from_i64(2), 3, 1).unwrap());
    }

    #[test]
    fn realize_examples() {
        let x = realize(&OneType::Unbounded(0), &cfg()).unwrap();
        assert!(x.try_eq(&gen(1, -1)).unwrap());
        let y = realize(&OneType::Infinitesimal(poly(0, &[1, 1]), 2), &cfg()).unwrap();
        let expected =
            &HahnElement::embed(&poly(0, &[1, 1])) + &(&HahnElement::embed(&LaurentSeries::t_pow(2)) * &gen(1, 1));
        assert!(y.try_eq(&expected).unwrap());
        let z = realize(&OneType::residual(LaurentSeries::zero(), 3, 1).unwrap(), &cfg()).unwrap();
        assert!(z.try_eq(&HahnElement::embed(&LaurentSeries::monomial(Coefficient::tau(1), 3))).unwrap());
    }

    #[test]
    fn heir_realize_examples() {
        let mut ctx = Allocator::new(8);
        for _ in 0..3 {
            ctx.fresh_level().unwrap();
        }
        let x = heir_realize(&OneType::Unbounded(0), &mut ctx).unwrap();
        assert!(x.try_eq(&gen(4, -1)).unwrap());
        let a = poly(0, &[1, 1]);
        assert!(heir_realize(&OneType::Realized(a.clone()), &mut ctx)
            .unwrap()
            .try_eq(&HahnElement::embed(&a))
            .unwrap());
        let mut ctx = Allocator::new(8);
        ctx.fresh_level().unwrap();
        ctx.fresh_level().unwrap();
        let y = heir_realize(&OneType::Infinitesimal(LaurentSeries::zero(), 1), &mut ctx).unwrap();
        assert!(y.try_eq(&(&HahnElement::embed(&LaurentSeries::t_pow(1)) * &gen(3, 1))).unwrap());
        let mut small = Allocator::new(1);
        small.fresh_level().unwrap();
        assert!(matches!(heir_realize(&OneType::Unbounded(0), &mut small), Err(Error::LevelsExhausted { .. })));
    }

    #[test]
    fn pn_of_polynomial_examples() {
        let p = OneType::residual(LaurentSeries::zero(), 3, 1).unwrap();
        let x_plus_1 = [LaurentSeries::one(), LaurentSeries::one()];
        assert!((1..=10).all(|n| decide_pn_of_polynomial(&p, &x_plus_1, n).unwrap()));
        let x_plus_t = [LaurentSeries::t_pow(1), LaurentSeries::one()];
        assert!(!decide_pn_of_polynomial(&p, &x_plus_t, 2).unwrap());
        // oracle: evaluate at the realization
        let r = realize(&p, &cfg()).unwrap();
        assert!(!pn_holds(&evaluate(&x_plus_t, &r), 2).unwrap());
        let x = [LaurentSeries::zero(), LaurentSeries::one()];
        assert!(decide_pn_of_polynomial(&OneType::Unbounded(0), &x, 7).unwrap());
    }

    #[test]
    fn valuation_of_polynomial_examples() {
        let p = OneType::residual(LaurentSeries::zero(), 3, 1).unwrap();
        let x2 = [LaurentSeries::zero(), LaurentSeries::zero(), LaurentSeries::one()];
        assert_eq!(decide_valuation_of_polynomial(&p, &x2).unwrap(), Value::standard(6));
        let r = realize(&p, &cfg()).unwrap();
        assert_eq!(evaluate(&x2, &r).valuation().unwrap(), Value::standard(6));
        let x = [LaurentSeries::zero(), LaurentSeries::one()];
        assert_eq!(
            decide_valuation_of_polynomial(&OneType::Unbounded(0), &x).unwrap(),
            Value::from_int_levels(&[-1], 0)
        );
        let x1 = [LaurentSeries::one(), LaurentSeries::one()];
        assert_eq!(
            decide_valuation_of_polynomial(&OneType::Realized(LaurentSeries::t_pow(2)), &x1).unwrap(),
            Value::standard(0)
        );
        let vanish = [LaurentSeries::from_i64(-2), LaurentSeries::one()];
        assert!(decide_valuation_of_polynomial(&OneType::Realized(LaurentSeries::from_i64(2)), &vanish).is_err());
    }

    #[test]
    fn residual_constructor_checks_degree() {
        assert!(OneType::residual(poly(0, &[1, 1]), 1, 1).is_err());
        assert!(OneType::residual(poly(0, &[1, 1]), 2, 1).is_ok());
    }

    #[test]
    fn display_is_dsl() {
        assert_eq!(OneType::Unbounded(0).to_string(), "pinf[k=0]");
        assert_eq!(OneType::Infinitesimal(LaurentSeries::t_pow(-1), -2).to_string(), "pzero[a=t^-1,k=-2]");
        assert_eq!(OneType::residual(LaurentSeries::from_i64(2), 3, 1).unwrap().to_string(), "res[a=2,n=3,tau=1]");
    }
}
