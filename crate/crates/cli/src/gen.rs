//! Seeded generators for the verification suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sl2dyn::onetypes::OneType;
use sl2dyn::sl2flow::matrix::Matrix2;
use sl2dyn::{Coefficient, LaurentSeries};

/// An independent stream per suite, so that a suite run alone and as part
/// of `all` sees the same samples.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`.
pub fn rational(rng: &mut impl Rng) -> Coefficient {
    Coefficient::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Coefficient {
    loop {
        let c = rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A nonzero Laurent polynomial with exponents in `[lo, hi]`.
pub fn laurent_poly(rng: &mut impl Rng, lo: i64, hi: i64) -> LaurentSeries {
    let start = rng.gen_range(lo..=hi);
    let len = rng.gen_range(1..=(hi - start + 1).min(4)) as usize;
    let mut cs: Vec<Coefficient> = (0..len).map(|_| rational(rng)).collect();
    cs[0] = nonzero_rational(rng);
    LaurentSeries::polynomial(start, cs)
}

pub fn monomial(rng: &mut impl Rng, lo: i64, hi: i64) -> LaurentSeries {
    LaurentSeries::monomial(nonzero_rational(rng), rng.gen_range(lo..=hi))
}

/// A nonzero element: a Laurent polynomial or a quotient of two.
pub fn series(rng: &mut impl Rng) -> LaurentSeries {
    let a = laurent_poly(rng, -3, 3);
    if rng.gen_bool(0.5) {
        a
    } else {
        a.div(&laurent_poly(rng, -3, 3)).expect("nonzero denominator")
    }
}

/// A determinant-one matrix with Laurent-polynomial entries (exponents in
/// `[−4, 4]` before completion): `x1` a monomial, `x4 = (1 + x2·x3)/x1`;
/// one in ten has `x1 = 0`, `x2 = −1/x3`.
pub fn sl2_matrix(rng: &mut impl Rng) -> Matrix2<LaurentSeries> {
    if rng.gen_ratio(1, 10) {
        let x3 = monomial(rng, -4, 4);
        let x2 = -&x3.inv().expect("monomial");
        return Matrix2::new(LaurentSeries::zero(), x2, x3, laurent_poly(rng, -4, 4));
    }
    let x1 = monomial(rng, -4, 4);
    let x2 = laurent_poly(rng, -4, 4);
    let x3 = laurent_poly(rng, -4, 4);
    let x4 = (&LaurentSeries::one() + &(&x2 * &x3)).div(&x1).expect("monomial");
    Matrix2::new(x1, x2, x3, x4)
}

/// `1 + c₁t + c₂t² + c₃t³` with small rational `cᵢ`.
pub fn one_unit(rng: &mut impl Rng) -> LaurentSeries {
    let mut cs = vec![Coefficient::one()];
    cs.extend((0..3).map(|_| rational(rng)));
    LaurentSeries::polynomial(0, cs)
}

/// `f` over the valuation ring whose residue polynomial has the simple
/// root `a0`: `(X − a0)·∏(X − bᵢ)` with `bᵢ ≠ a0`, each coefficient
/// perturbed by `t·g(t)`.
pub fn hensel_instance(rng: &mut impl Rng) -> (Vec<LaurentSeries>, Coefficient) {
    let a0 = nonzero_rational(rng);
    let others = rng.gen_range(1..=2);
    let mut roots = vec![a0.clone()];
    while roots.len() < others + 1 {
        let b = rational(rng);
        if b != a0 {
            roots.push(b);
        }
    }
    // coefficients of ∏(X − r), constant term first
    let mut poly = vec![Coefficient::one()];
    for r in &roots {
        let mut next = vec![Coefficient::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * r);
        }
        poly = next;
    }
    let f = poly
        .into_iter()
        .map(|c| {
            let g = laurent_poly(rng, 1, 3);
            &LaurentSeries::constant(c) + &g
        })
        .collect();
    (f, a0)
}

/// A base point: `0` or a Laurent polynomial with exponents in `[−3, 3]`.
pub fn base_point(rng: &mut impl Rng) -> LaurentSeries {
    if rng.gen_ratio(1, 4) {
        LaurentSeries::zero()
    } else {
        laurent_poly(rng, -3, 3)
    }
}

/// A 1-type of a random kind with labels in `[−bound, bound]`.
pub fn one_type(rng: &mut impl Rng, bound: i64) -> OneType {
    let k = rng.gen_range(-bound..=bound);
    match rng.gen_range(0..4) {
        0 => OneType::Realized(base_point(rng)),
        1 => OneType::Infinitesimal(base_point(rng), k),
        2 => OneType::Unbounded(k),
        _ => {
            let a = if rng.gen_bool(0.5) { LaurentSeries::zero() } else { laurent_poly(rng, k - 3, k - 1) };
            OneType::residual(a, k, rng.gen_range(1..=2)).expect("degree below n")
        }
    }
}

/// A shuffled copy of `0..n`.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
