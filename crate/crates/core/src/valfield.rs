//! Valuation-theoretic predicates `Pₙ`, `N`, `∣`, coset labels of
//! `K*/K*⁰`, and Hensel lifting by Newton iteration.

use crate::error::{Error, Result};
use crate::hahn::{HahnElement, Value};
use crate::series::{Coefficient, LaurentSeries};

/// Index of a coset of `K*⁰ = ⋂ₙ Pₙ`: the integer part of the valuation.
pub type CosetLabel = i64;

fn nonzero_value(x: &HahnElement) -> Result<Value> {
    if x.is_zero()? {
        return Err(Error::ValuationOfZero);
    }
    x.valuation()
}

/// `Pₙ(x)`: `x` is an `n`-th power.
///
/// Decided by divisibility of the value: the residue field is algebraically
/// closed and the field is henselian, so a unit has all roots, and level
/// components are rational and therefore always divisible.
pub fn pn_holds(x: &HahnElement, n: u32) -> Result<bool> {
    assert!(n >= 1, "Pn needs n ≥ 1");
    Ok(nonzero_value(x)?.divisible_by(n as i64))
}

/// `N(x)`: `v(x) = 1`.
pub fn n_pred(x: &HahnElement) -> Result<bool> {
    Ok(nonzero_value(x)? == Value::standard(1))
}

/// `x ∣ y`: `v(x) ≤ v(y)`.
pub fn divides_pred(x: &HahnElement, y: &HahnElement) -> Result<bool> {
    Ok(nonzero_value(x)? <= nonzero_value(y)?)
}

/// The coset of `x` modulo `K*⁰`.
pub fn coset_label(x: &HahnElement) -> Result<CosetLabel> {
    Ok(nonzero_value(x)?.std())
}

/// Coset label of a Laurent series.
pub fn series_label(x: &LaurentSeries) -> Result<CosetLabel> {
    x.valuation()
}

fn newton_iterations(precision: usize) -> usize {
    let mut log = 0;
    while (1usize << log) < precision.max(1) {
        log += 1;
    }
    log + 2
}

/// Truncated power series `a₀ + a₁t + …` modulo `t^N`.
type Ps = Vec<Coefficient>;

fn ps_of(x: &LaurentSeries, n: usize) -> Ps {
    (0..n as i64).map(|e| x.coeff(e)).collect()
}

fn ps_mul(a: &Ps, b: &Ps, n: usize) -> Ps {
    let mut out = vec![Coefficient::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn ps_inv(a: &Ps, n: usize) -> Result<Ps> {
    let a0_inv = a.first().ok_or(Error::DivisionByZero)?.inv()?;
    let mut out: Ps = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            out.push(a0_inv.clone());
            continue;
        }
        let mut c = Coefficient::zero();
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            if !a[j].is_zero() {
                c = &c + &(&a[j] * &out[k - j]);
            }
        }
        out.push(-&(&c * &a0_inv));
    }
    Ok(out)
}

fn ps_sub(a: &Ps, b: &Ps) -> Ps {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

/// `x^{1/n}` modulo `t^N` for `x` with constant term 1.
fn ps_root(x: &Ps, n: u32, len: usize) -> Ps {
    let n = n as i64;
    let mut y: Ps = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            y.push(Coefficient::one());
            continue;
        }
        let mut acc = Coefficient::zero();
        for j in 1..=k.min(x.len().saturating_sub(1)) {
            if x[j].is_zero() || y[k - j].is_zero() {
                continue;
            }
            let (j, k64) = (j as i64, k as i64);
            let w = Coefficient::ratio(j * (n + 1) - k64 * n, n * k64);
            acc = &acc + &(&w * &(&x[j as usize] * &y[k - j as usize]));
        }
        y.push(acc);
    }
    y
}

fn ps_to_series(a: Ps) -> LaurentSeries {
    LaurentSeries::polynomial(0, a)
}

/// Evaluates `∑ f[i]·Xⁱ` at `x` modulo `t^N`, with its derivative.
fn ps_eval_with_derivative(f: &[Ps], x: &Ps, n: usize) -> (Ps, Ps) {
    let mut val = vec![Coefficient::zero(); n];
    let mut der = vec![Coefficient::zero(); n];
    for c in f.iter().rev() {
        der = ps_mul(&der, x, n);
        der = der.iter().zip(val.iter()).map(|(d, v)| d + v).collect();
        val = ps_mul(&val, x, n);
        val = val.iter().zip(c.iter()).map(|(v, a)| v + a).collect();
    }
    (val, der)
}

/// The `n`-th root of a 1-unit with residue 1, correct to precision `N`.
///
/// For a standard element, precision means agreement of `rootⁿ` with `x`
/// below `t^N`; for an element with level parts it means that the first `N`
/// terms of the root are exact. Standard inputs use the power recurrence
/// `k·y_k = ∑_{j=1..k} ((1/n + 1)·j − k)·x_j·y_{k−j}`; other inputs use
/// Newton iteration on `Yⁿ − x` from `Y = 1` with `⌈log₂ N⌉ + 2` steps.
pub fn nth_root_unit(x: &HahnElement, n: u32, precision: usize) -> Result<HahnElement> {
    assert!(n >= 1, "root index must be positive");
    let one = HahnElement::one();
    let eps = x - &one;
    if eps.is_zero()? {
        return Ok(one);
    }
    let gamma = eps.valuation()?;
    if gamma <= Value::standard(0) {
        return Err(Error::NotOneUnit(format!("v(x − 1) = {} is not positive", gamma)));
    }
    if n == 1 {
        return Ok(x.clone());
    }
    if let Some(s) = x.as_series() {
        return Ok(HahnElement::embed(&ps_to_series(ps_root(&ps_of(&s, precision), n, precision))));
    }
    let iterations = newton_iterations(precision);
    let nn = HahnElement::from_i64(n as i64);
    let mut y = one;
    for _ in 0..iterations {
        let y_pow = y.pow(n as i64 - 1)?;
        let f = &(&y_pow * &y) - x;
        let step = f.div(&(&nn * &y_pow))?;
        y = truncate_terms(&(&y - &step), precision)?;
    }
    Ok(y)
}

/// Certifies `yⁿ ≡ x (mod t^N)` for standard 1-units `x`, `y` with residue 1
/// without forming `yⁿ`: for such `x`, `y` the congruence is equivalent to
/// `n·x·y′ ≡ x′·y (mod t^{N−1})` (the quotient `yⁿ/x` has constant term 1
/// and logarithmic derivative `n·y′/y − x′/x`).  The cost is linear in `N`
/// times the number of nonzero coefficients of `x`.
pub fn root_certificate(x: &LaurentSeries, y: &LaurentSeries, n: u32, precision: usize) -> bool {
    if precision == 0 {
        return true;
    }
    let (xs, ys) = (ps_of(x, precision), ps_of(y, precision));
    if (-1..0).any(|e| !x.coeff(e).is_zero() || !y.coeff(e).is_zero()) || !xs[0].is_one() || !ys[0].is_one() {
        return false;
    }
    let m = precision - 1;
    let deriv = |a: &Ps| -> Ps { (1..precision).map(|k| &a[k] * &Coefficient::from_i64(k as i64)).collect() };
    let (dx, dy) = (deriv(&xs), deriv(&ys));
    let nn = Coefficient::from_i64(n as i64);
    let lhs: Ps = ps_mul(&xs, &dy, m).iter().map(|c| c * &nn).collect();
    let rhs = ps_mul(&dx, &ys, m);
    lhs == rhs
}

/// The sum of the first `n` terms of `x`.
pub fn truncate_terms(x: &HahnElement, n: usize) -> Result<HahnElement> {
    let mut acc = HahnElement::zero();
    for (v, c) in x.terms(n)? {
        acc = &acc + &HahnElement::term(&v, &c)?;
    }
    Ok(acc)
}

/// The root of `f = ∑ f[i]·Xⁱ` (coefficients in the valuation ring) with
/// residue `a0`, correct modulo `t^N`; `a0` must be a simple root of the
/// residue polynomial.
pub fn hensel_lift_root(f: &[LaurentSeries], a0: &Coefficient, precision: usize) -> Result<HahnElement> {
    for c in f {
        if !c.is_certified_zero() {
            let v = c.valuation()?;
            if v < 0 {
                return Err(Error::NotInValuationRing { valuation: v });
            }
        }
    }
    let residues: Vec<Coefficient> = f.iter().map(|c| c.residue()).collect::<Result<_>>()?;
    let (mut fa, mut dfa) = (Coefficient::zero(), Coefficient::zero());
    for c in residues.iter().rev() {
        dfa = &(&dfa * a0) + &fa;
        fa = &(&fa * a0) + c;
    }
    if !fa.is_zero() {
        return Err(Error::NotSimpleRoot(format!("residue polynomial does not vanish at {}", a0)));
    }
    if dfa.is_zero() {
        return Err(Error::NotSimpleRoot(format!("{} is a multiple root of the residue polynomial", a0)));
    }
    let n = precision.max(1);
    let fs: Vec<Ps> = f.iter().map(|c| ps_of(c, n)).collect();
    let mut r = vec![a0.clone()];
    let mut known = 1;
    while known < n {
        // Newton doubles the number of correct coefficients.
        known = (2 * known).min(n);
        r.resize(known, Coefficient::zero());
        let (val, der) = ps_eval_with_derivative(&fs, &r, known);
        let step = ps_mul(&val, &ps_inv(&der, known)?, known);
        r = ps_sub(&r, &step);
    }
    r.truncate(precision);
    Ok(HahnElement::embed(&ps_to_series(r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coefficient {
        Coefficient::from_i64(n)
    }

    fn q(a: i64, b: i64) -> Coefficient {
        Coefficient::ratio(a, b)
    }

    fn series(offset: i64, cs: &[Coefficient]) -> LaurentSeries {
        LaurentSeries::polynomial(offset, cs.to_vec())
    }

    fn h(x: &LaurentSeries) -> HahnElement {
        HahnElement::embed(x)
    }

    #[test]
    fn pn_examples() {
        let one_plus_t = h(&series(0, &[c(1), c(1)]));
        assert!((1..=10).all(|n| pn_holds(&one_plus_t, n).unwrap()));
        assert!(!pn_holds(&h(&LaurentSeries::t_pow(3)), 2).unwrap());
        // t^6(1 + t) = (t^2 · root)^3 with root the cube root of 1 + t
        let x = h(&series(6, &[c(1), c(1)]));
        assert!(pn_holds(&x, 3).unwrap());
        let root = nth_root_unit(&one_plus_t, 3, 16).unwrap();
        let w = &h(&LaurentSeries::t_pow(2)) * &root;
        let cube = w.pow(3).unwrap().as_series().unwrap();
        assert!(cube.agrees_to(&series(6, &[c(1), c(1)]), 6 + 16));
        assert_eq!(pn_holds(&HahnElement::zero(), 2), Err(Error::ValuationOfZero));
    }

    #[test]
    fn root_certificates() {
        let x = series(0, &[c(1), c(2), q(-1, 3)]);
        let r = nth_root_unit(&h(&x), 3, 20).unwrap().as_series().unwrap();
        assert!(root_certificate(&x, &r, 3, 20));
        let direct = (&(&r * &r) * &r).truncated(20);
        assert!(direct.agrees_to(&x, 20));
        assert!(!root_certificate(&x, &r, 2, 20));
        let wrong = &r + &LaurentSeries::t_pow(7);
        assert!(!root_certificate(&x, &wrong, 3, 20));
        assert!(root_certificate(&x, &wrong, 3, 7));
    }

    #[test]
    fn n_and_divides() {
        assert!(n_pred(&h(&series(1, &[c(1), c(1)]))).unwrap());
        assert!(divides_pred(&h(&LaurentSeries::t_pow(1)), &h(&LaurentSeries::t_pow(3))).unwrap());
        let s1_inv = HahnElement::generator(1, -1, 8).unwrap();
        let x = &s1_inv * &h(&LaurentSeries::t_pow(9));
        assert!(divides_pred(&x, &h(&LaurentSeries::t_pow(-9))).unwrap());
    }

    #[test]
    fn coset_labels() {
        let x = h(&series(5, &[c(2), c(1)]));
        assert_eq!(coset_label(&x), Ok(5));
        let unit = x.div(&h(&LaurentSeries::t_pow(5))).unwrap();
        assert!((1..=10).all(|n| pn_holds(&unit, n).unwrap()));
        assert_eq!(coset_label(&h(&series(0, &[c(1), c(1)]))), Ok(0));
        assert_eq!(coset_label(&HahnElement::generator(1, -1, 8).unwrap()), Ok(0));
    }

    #[test]
    fn square_root_of_one_plus_t() {
        let r = nth_root_unit(&h(&series(0, &[c(1), c(1)])), 2, 4).unwrap();
        let expected = series(0, &[c(1), q(1, 2), q(-1, 8), q(1, 16)]);
        assert_eq!(r.as_series().unwrap(), expected);
        // oracle: square and compare
        let sq = r.pow(2).unwrap().as_series().unwrap();
        assert!(sq.agrees_to(&series(0, &[c(1), c(1)]), 4));
        assert!(nth_root_unit(&HahnElement::one(), 5, 10).unwrap().try_eq(&HahnElement::one()).unwrap());
        assert!(matches!(nth_root_unit(&h(&LaurentSeries::t_pow(1)), 2, 4), Err(Error::NotOneUnit(_))));
    }

    #[test]
    fn root_of_a_nonstandard_unit() {
        let x = &HahnElement::one() + &HahnElement::generator(1, 1, 8).unwrap();
        let r = nth_root_unit(&x, 2, 4).unwrap();
        let diff = &r.pow(2).unwrap() - &x;
        assert!(diff.valuation().unwrap() >= Value::from_int_levels(&[4], 0));
        assert_eq!(r.terms(4).unwrap()[3].1, q(1, 16));
    }

    #[test]
    fn hensel_examples() {
        let f = vec![series(0, &[c(-1), c(-1)]), LaurentSeries::zero(), LaurentSeries::one()];
        let r = hensel_lift_root(&f, &c(1), 4).unwrap().as_series().unwrap();
        assert_eq!(r, series(0, &[c(1), q(1, 2), q(-1, 8), q(1, 16)]));
        let r = hensel_lift_root(&f, &c(-1), 4).unwrap().as_series().unwrap();
        assert_eq!(r, series(0, &[c(-1), q(-1, 2), q(1, 8), q(-1, 16)]));
        // evaluate f at the root
        let val = &(&r * &r) - &series(0, &[c(1), c(1)]);
        assert!(val.is_certified_zero() || val.valuation().unwrap() >= 4);
        let g = vec![series(1, &[c(-1)]), LaurentSeries::zero(), LaurentSeries::one()];
        assert!(matches!(hensel_lift_root(&g, &c(0), 4), Err(Error::NotSimpleRoot(_))));
    }
}
