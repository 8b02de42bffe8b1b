//! Ellis semigroup products on the additive flow `𝔾ₐ`, the multiplicative
//! flow `𝔾ₘ`, and the group `𝒥` of Borel types `p_{k𝕂*⁰}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::onetypes::OneType;
use crate::series::LaurentSeries;
use crate::sl2flow::matrix::Matrix2;
use crate::valfield::CosetLabel;

/// The type `p_{k𝕂*⁰} ∈ 𝒥`, realized by a pair `(β, γ)` of coset `k` with
/// `v(β)` above ℤ and `v(γ)` below everything defined before it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BorelTypeJ {
    pub label: CosetLabel,
}

impl BorelTypeJ {
    pub fn new(label: CosetLabel) -> Self {
        BorelTypeJ { label }
    }
}

impl fmt::Display for BorelTypeJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pj[k={}]", self.label)
    }
}

/// `q * p_{∞,C}`: the unbounded types are fixed points of `𝔾ₐ`.
pub fn ga_product(_q: &OneType, p: &OneType) -> Result<OneType> {
    match p {
        OneType::Unbounded(_) => Ok(p.clone()),
        _ => Err(Error::Precondition(format!("{} is not an unbounded type", p))),
    }
}

/// `q * p` for `p ∈ P₀ ∪ P_∞`: multiplication shifts the coset by the
/// label of `q` and keeps the kind of `p`.
pub fn gm_product(q: &OneType, p: &OneType) -> Result<OneType> {
    if q.is_zero_type() {
        return Err(Error::Precondition("the left factor concentrates on 0".into()));
    }
    let shift = q.coset_label()?;
    match p {
        OneType::Infinitesimal(a, k) if a.is_certified_zero() => {
            Ok(OneType::Infinitesimal(LaurentSeries::zero(), k + shift))
        }
        OneType::Unbounded(k) => Ok(OneType::Unbounded(k + shift)),
        _ => Err(Error::Precondition(format!("{} is not in P₀ ∪ P_∞", p))),
    }
}

/// The label-truncated `𝔾ₘ(M)`-orbit of `p`, translating by `tʲ`, `|j| ≤ B`.
pub fn gm_orbit(p: &OneType, bound: u32) -> Result<Vec<OneType>> {
    let b = bound as i64;
    let mut out: Vec<OneType> = Vec::new();
    for j in -b..=b {
        let r = gm_product(&OneType::Realized(LaurentSeries::t_pow(j)), p)?;
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort_by_key(|x| x.coset_label().unwrap_or(0));
    Ok(out)
}

/// Whether translation by `a` fixes the unbounded type `p`: always.
pub fn stab_add_contains(_a: &LaurentSeries, p: &OneType) -> Result<bool> {
    match p {
        OneType::Unbounded(_) => Ok(true),
        _ => Err(Error::Precondition(format!("{} is not an unbounded type", p))),
    }
}

/// Whether multiplication by `a` fixes `p ∈ P₀ ∪ P_∞`: iff `a ∈ 𝕂*⁰`.
pub fn stab_mul_contains(a: &LaurentSeries, p: &OneType) -> Result<bool> {
    if a.is_zero()? {
        return Err(Error::Precondition("stabilizer of the multiplicative flow needs a ≠ 0".into()));
    }
    match p {
        OneType::Unbounded(_) => {}
        OneType::Infinitesimal(b, _) if b.is_certified_zero() => {}
        _ => return Err(Error::Precondition(format!("{} is not in P₀ ∪ P_∞", p))),
    }
    Ok(a.valuation()? == 0)
}

pub fn j_identity() -> BorelTypeJ {
    BorelTypeJ::new(0)
}

pub fn j_product(x: BorelTypeJ, y: BorelTypeJ) -> BorelTypeJ {
    BorelTypeJ::new(x.label + y.label)
}

pub fn j_inverse(x: BorelTypeJ) -> BorelTypeJ {
    BorelTypeJ::new(-x.label)
}

/// `(b c; 0 b⁻¹) · p_x`: `(bβ, bγ + cβ⁻¹)` lies in coset `x + v(b)`.
pub fn j_action(b: &LaurentSeries, _c: &LaurentSeries, x: BorelTypeJ) -> Result<BorelTypeJ> {
    if b.is_zero()? {
        return Err(Error::Precondition("the diagonal entry b must be nonzero".into()));
    }
    Ok(BorelTypeJ::new(x.label + b.valuation()?))
}

/// Representative `diag(t^k, t^{-k})` of the coset of `B(M)⁰` matching `p_k`.
pub fn pi_iso(x: BorelTypeJ) -> Matrix2<LaurentSeries> {
    Matrix2::new(
        LaurentSeries::t_pow(x.label),
        LaurentSeries::zero(),
        LaurentSeries::zero(),
        LaurentSeries::t_pow(-x.label),
    )
}

/// The coset label of a diagonal-type representative, read from `x1`.
pub fn pi_label(g: &Matrix2<LaurentSeries>) -> Result<CosetLabel> {
    g.x1.valuation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Coefficient;

    fn poly(offset: i64, cs: &[i64]) -> LaurentSeries {
        LaurentSeries::polynomial(offset, cs.iter().map(|&x| Coefficient::from_i64(x)).collect())
    }

    #[test]
    fn ga_examples() {
        let p0 = OneType::Unbounded(0);
        assert_eq!(ga_product(&OneType::Realized(LaurentSeries::from_i64(5)), &p0).unwrap(), p0);
        let p3 = OneType::Unbounded(3);
        assert_eq!(ga_product(&OneType::Infinitesimal(LaurentSeries::zero(), 0), &p3).unwrap(), p3);
        assert_eq!(ga_product(&OneType::Unbounded(2), &p0).unwrap(), p0);
    }

    #[test]
    fn gm_examples() {
        let z = LaurentSeries::zero();
        assert_eq!(
            gm_product(&OneType::Realized(poly(3, &[1, 1])), &OneType::Infinitesimal(z.clone(), 0)).unwrap(),
            OneType::Infinitesimal(z.clone(), 3)
        );
        assert_eq!(
            gm_product(&OneType::Realized(LaurentSeries::one()), &OneType::Unbounded(4)).unwrap(),
            OneType::Unbounded(4)
        );
        assert_eq!(gm_product(&OneType::Unbounded(2), &OneType::Unbounded(3)).unwrap(), OneType::Unbounded(5));
        assert!(gm_product(&OneType::Realized(z), &OneType::Unbounded(0)).is_err());
    }

    #[test]
    fn gm_orbits() {
        let z = LaurentSeries::zero();
        let orbit = gm_orbit(&OneType::Infinitesimal(z.clone(), 0), 2).unwrap();
        assert_eq!(orbit, (-2..=2).map(|j| OneType::Infinitesimal(z.clone(), j)).collect::<Vec<_>>());
        assert_eq!(
            gm_orbit(&OneType::Unbounded(1), 1).unwrap(),
            vec![OneType::Unbounded(0), OneType::Unbounded(1), OneType::Unbounded(2)]
        );
        assert_eq!(gm_orbit(&OneType::Unbounded(0), 0).unwrap(), vec![OneType::Unbounded(0)]);
    }

    #[test]
    fn stabilizers() {
        assert!(stab_add_contains(&LaurentSeries::t_pow(-7), &OneType::Unbounded(0)).unwrap());
        assert!(stab_mul_contains(&poly(0, &[1, 1]), &OneType::Unbounded(0)).unwrap());
        assert!(!stab_mul_contains(&LaurentSeries::t_pow(1), &OneType::Unbounded(0)).unwrap());
    }

    #[test]
    fn j_group() {
        let j = BorelTypeJ::new;
        assert_eq!(j_product(j_identity(), j(7)), j(7));
        assert_eq!(j_product(j(2), j(3)), j(5));
        assert_eq!(j_inverse(j(4)), j(-4));
        assert_eq!(j_action(&LaurentSeries::t_pow(2), &LaurentSeries::zero(), j(0)).unwrap(), j(2));
        assert_eq!(j_action(&poly(0, &[1, 1]), &LaurentSeries::from_i64(5), j(3)).unwrap(), j(3));
        assert_eq!(j_action(&LaurentSeries::one(), &LaurentSeries::zero(), j(-6)).unwrap(), j(-6));
        assert!(j_action(&LaurentSeries::zero(), &LaurentSeries::one(), j(0)).is_err());
    }

    #[test]
    fn pi_examples() {
        assert!(pi_iso(BorelTypeJ::new(0)).try_eq(&Matrix2::identity()).unwrap());
        let m = pi_iso(BorelTypeJ::new(3));
        assert_eq!(m.x1, LaurentSeries::t_pow(3));
        assert_eq!(m.x4, LaurentSeries::t_pow(-3));
        let prod = pi_iso(BorelTypeJ::new(1)).mul(&pi_iso(BorelTypeJ::new(2)));
        assert_eq!(pi_label(&prod).unwrap(), j_product(BorelTypeJ::new(1), BorelTypeJ::new(2)).label);
    }
}
