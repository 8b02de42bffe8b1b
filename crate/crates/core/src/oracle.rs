//! Brute-force verifier: realizes a product of type factors as a concrete
//! matrix over the realization field (each nonstandard factor on fresh
//! levels above everything to its left), multiplies, decomposes, and
//! classifies the factors again.
//!
//! The oracle uses only the series, realization-field, valuation and
//! 1-type primitives; it never consults the symbolic flow rules.

use std::cmp::Ordering;
use std::fmt;

use crate::abflows::BorelTypeJ;
use crate::error::{Error, Result};
use crate::hahn::{HahnElement, LevelMonomial};
use crate::onetypes::{classify, heir_realize, Allocator, OneType};
use crate::series::LaurentSeries;
use crate::sl2flow::matrix::{decompose, Matrix2, Z4};
use crate::sl2flow::SL2TypeNF;
use crate::valfield::CosetLabel;
use crate::Config;

/// Upper-triangular factor of a product word.
#[derive(Clone, Debug)]
pub enum BFactor {
    /// `p_k ∈ 𝒥`, realized by `(tᵏ·s_f, tᵏ·s_g⁻¹)` with `g > f` fresh.
    J(CosetLabel),
    /// Heirs of the two given types, `β` first.
    Pair(OneType, OneType),
}

/// One factor of a product word.
#[derive(Clone, Debug)]
pub enum Factor {
    /// A matrix over `M`.
    M(Matrix2<LaurentSeries>),
    /// `(1 0; α 1)` with `α` realizing the heir of a 1-type.
    H(OneType),
    /// `(β γ; 0 β⁻¹)`.
    B(BFactor),
    /// An element of ℤ/4ℤ.
    Z(Z4),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::M(m) => write!(f, "M[{}]", m),
            Factor::H(q) => write!(f, "H[{}]", q),
            Factor::B(BFactor::J(k)) => write!(f, "B[{}]", BorelTypeJ::new(*k)),
            Factor::B(BFactor::Pair(p, q)) => write!(f, "B[{};{}]", p, q),
            Factor::Z(z) => write!(f, "Z[{}]", z),
        }
    }
}

/// An ordered product of factors, realized left to right.
#[derive(Clone, Debug, Default)]
pub struct ProductWord {
    pub factors: Vec<Factor>,
}

impl ProductWord {
    pub fn new(factors: Vec<Factor>) -> Self {
        ProductWord { factors }
    }

    /// The word `p_{∞,C₀} * p_j = [H(Unbounded(0)), B(J(j))]`, or with a
    /// general 1-type in the unipotent slot.
    pub fn hj(q: OneType, j: CosetLabel) -> Self {
        ProductWord::new(vec![Factor::H(q), Factor::B(BFactor::J(j))])
    }

    pub fn then(mut self, other: ProductWord) -> Self {
        self.factors.extend(other.factors);
        self
    }

    pub fn push(mut self, f: Factor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn prepend(mut self, f: Factor) -> Self {
        self.factors.insert(0, f);
        self
    }
}

impl fmt::Display for ProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" · "))
    }
}

/// A realized word: the product matrix and the number of levels it used.
#[derive(Clone, Debug)]
pub struct Realization {
    pub matrix: Matrix2<HahnElement>,
    pub levels_used: usize,
}

/// Placement of the realization levels: `skip` levels are left unused
/// below the word and `gap` levels between consecutive nonstandard
/// factors.  Every spacing is an order-preserving relabeling of the
/// compact one, so classifications must not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Spacing {
    pub skip: usize,
    pub gap: usize,
}

/// Realizes `w` left to right with the given level spacing.
pub fn realize_word_spaced(w: &ProductWord, cfg: &Config, spacing: Spacing) -> Result<Realization> {
    let mut ctx = Allocator::new(cfg.levels);
    for _ in 0..spacing.skip {
        ctx.fresh_level()?;
    }
    let mut acc: Matrix2<HahnElement> = Matrix2::identity();
    let mut first = true;
    for factor in &w.factors {
        if matches!(factor, Factor::H(_) | Factor::B(_)) {
            if !first {
                for _ in 0..spacing.gap {
                    ctx.fresh_level()?;
                }
            }
            first = false;
        }
        let m = match factor {
            Factor::M(g) => g.embed(),
            Factor::Z(z) => z.matrix(),
            Factor::H(q) => Matrix2::lower(heir_realize(q, &mut ctx)?),
            Factor::B(BFactor::J(k)) => {
                let lb = ctx.fresh_level()?;
                let lg = ctx.fresh_level()?;
                let tk = LaurentSeries::t_pow(*k);
                let beta = HahnElement::monomial(&tk, LevelMonomial::generator(lb, 1));
                let gamma = HahnElement::monomial(&tk, LevelMonomial::generator(lg, -1));
                Matrix2::borel(beta, gamma)?
            }
            Factor::B(BFactor::Pair(p, q)) => {
                let beta = heir_realize(p, &mut ctx)?;
                let gamma = heir_realize(q, &mut ctx)?;
                Matrix2::borel(beta, gamma)?
            }
        };
        acc = acc.mul(&m);
    }
    Ok(Realization { matrix: acc, levels_used: ctx.top_level() - spacing.skip })
}

/// Realizes `w` starting with the first `skip` levels already taken.
pub fn realize_word_from(w: &ProductWord, cfg: &Config, skip: usize) -> Result<Realization> {
    realize_word_spaced(w, cfg, Spacing { skip, gap: 0 })
}

pub fn realize_word(w: &ProductWord, cfg: &Config) -> Result<Realization> {
    realize_word_from(w, cfg, 0)
}

/// Reads the `𝒥`-label of a realized Borel pair `(β, γ)`: `β` must be
/// infinitesimal at `0` and `γ` unbounded, in the same coset, with `γ`
/// living on a higher level than `β`.
pub fn classify_borel_pair(beta: &HahnElement, gamma: &HahnElement) -> Result<BorelTypeJ> {
    let pb = classify(beta)?;
    let pg = classify(gamma)?;
    let k1 = match &pb {
        OneType::Infinitesimal(a, k) if a.is_certified_zero() => *k,
        other => return Err(Error::Unclassifiable(format!("β realizes {}, not an infinitesimal at 0", other))),
    };
    let k2 = match &pg {
        OneType::Unbounded(k) => *k,
        other => return Err(Error::Unclassifiable(format!("γ realizes {}, not an unbounded type", other))),
    };
    let lb = beta.valuation()?.leading_level().map_or(0, |(l, _)| l);
    let lg = gamma.valuation()?.leading_level().map_or(0, |(l, _)| l);
    if lg.cmp(&lb) != Ordering::Greater {
        return Err(Error::Unclassifiable(format!("γ (level {}) does not dominate β (level {})", lg, lb)));
    }
    if k1 != k2 {
        return Err(Error::Unclassifiable(format!("β in coset {} but γ in coset {}", k1, k2)));
    }
    Ok(BorelTypeJ::new(k1))
}

/// Realizes, decomposes and classifies a word with the given spacing.
pub fn classify_word_spaced(w: &ProductWord, cfg: &Config, spacing: Spacing) -> Result<SL2TypeNF> {
    let r = realize_word_spaced(w, cfg, spacing)?;
    let d = decompose(&r.matrix)?;
    let q = classify(&d.alpha)?;
    let j = classify_borel_pair(&d.beta, &d.gamma)?;
    Ok(SL2TypeNF { z: d.z, q, j })
}

/// Realizes, decomposes and classifies a word.
pub fn classify_word_from(w: &ProductWord, cfg: &Config, skip: usize) -> Result<SL2TypeNF> {
    classify_word_spaced(w, cfg, Spacing { skip, gap: 0 })
}

pub fn classify_word(w: &ProductWord, cfg: &Config) -> Result<SL2TypeNF> {
    classify_word_from(w, cfg, 0)
}

/// Coset of the Borel coordinate of `p_j * q`: realizes `(β γ; 0 β⁻¹)`
/// and then the heir of `q` in the unipotent slot, and reads the coset of
/// the resulting `x₁ = β + γα`.
pub fn reduce_label(q: &OneType, j: CosetLabel, cfg: &Config) -> Result<BorelTypeJ> {
    let w = ProductWord::new(vec![Factor::B(BFactor::J(j)), Factor::H(q.clone())]);
    let r = realize_word(&w, cfg)?;
    Ok(BorelTypeJ::new(classify(&r.matrix.x1)?.coset_label()?))
}

/// `p_i * p_j` read as the Borel label of the word `[J(i), J(j)]`; the
/// unipotent part must be the type of `0`.
pub fn j_product_label(i: CosetLabel, j: CosetLabel, cfg: &Config) -> Result<BorelTypeJ> {
    let w = ProductWord::new(vec![Factor::B(BFactor::J(i)), Factor::B(BFactor::J(j))]);
    let nf = classify_word(&w, cfg)?;
    if nf.z != Z4::I || !nf.q.is_zero_type() {
        return Err(Error::Unclassifiable(format!("{} is not a Borel type", nf)));
    }
    Ok(nf.j)
}

/// `g · p_x` for an upper-triangular `g`, read from the word `[g, J(x)]`.
pub fn j_action_label(g: &Matrix2<LaurentSeries>, x: CosetLabel, cfg: &Config) -> Result<BorelTypeJ> {
    let w = ProductWord::new(vec![Factor::M(g.clone()), Factor::B(BFactor::J(x))]);
    Ok(classify_word(&w, cfg)?.j)
}

/// `tp(a + b/M)` with `a ∈ M` and `b` realizing `p`.
pub fn translate_type(a: &LaurentSeries, p: &OneType, cfg: &Config) -> Result<OneType> {
    let b = heir_realize(p, &mut Allocator::new(cfg.levels))?;
    classify(&(&HahnElement::embed(a) + &b))
}

/// `tp(a · b/M)` with `a ∈ M` and `b` realizing `p`.
pub fn scale_type(a: &LaurentSeries, p: &OneType, cfg: &Config) -> Result<OneType> {
    let b = heir_realize(p, &mut Allocator::new(cfg.levels))?;
    classify(&(&HahnElement::embed(a) * &b))
}

/// `tp(a + b/M)` with `a ⊨ q` and `b` realizing the heir of `p`.
pub fn add_types(q: &OneType, p: &OneType, cfg: &Config) -> Result<OneType> {
    let mut ctx = Allocator::new(cfg.levels);
    let a = heir_realize(q, &mut ctx)?;
    ctx.observe(&a);
    let b = heir_realize(p, &mut ctx)?;
    classify(&(&a + &b))
}

/// `tp(a · b/M)` with `a ⊨ q` and `b` realizing the heir of `p`.
pub fn mul_types(q: &OneType, p: &OneType, cfg: &Config) -> Result<OneType> {
    let mut ctx = Allocator::new(cfg.levels);
    let a = heir_realize(q, &mut ctx)?;
    ctx.observe(&a);
    let b = heir_realize(p, &mut ctx)?;
    classify(&(&a * &b))
}

/// Outcome of comparing a symbolic rule against the oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Indeterminate => "INDETERMINATE",
        })
    }
}

/// A verdict with the evidence behind it.
#[derive(Clone, Debug)]
pub struct Check {
    pub verdict: Verdict,
    pub details: String,
}

impl Check {
    pub fn pass(details: impl Into<String>) -> Self {
        Check { verdict: Verdict::Pass, details: details.into() }
    }

    pub fn fail(details: impl Into<String>) -> Self {
        Check { verdict: Verdict::Fail, details: details.into() }
    }

    /// Horizon errors are indeterminate; every other error is a failure.
    pub fn from_error(context: &str, e: &Error) -> Self {
        let verdict = if e.is_horizon() { Verdict::Indeterminate } else { Verdict::Fail };
        Check { verdict, details: format!("{}: {}", context, e) }
    }

    /// Compares an expected value with an oracle computation.
    pub fn compare<T: PartialEq + fmt::Display>(context: &str, expected: &T, actual: Result<T>) -> Self {
        match actual {
            Ok(a) if &a == expected => Check::pass(format!("{}: {}", context, a)),
            Ok(a) => Check::fail(format!("{}: expected {}, oracle gives {}", context, expected, a)),
            Err(e) => Check::from_error(context, &e),
        }
    }
}

/// Checks a symbolic normal form against the oracle's reading of `word`.
pub fn check_rule(expected: &SL2TypeNF, word: &ProductWord, cfg: &Config) -> Check {
    match realize_word(word, cfg) {
        Err(e) => Check::from_error(&format!("realizing {}", word), &e),
        Ok(r) => {
            let levels = r.levels_used;
            match classify_word(word, cfg) {
                Ok(actual) if &actual == expected => {
                    Check::pass(format!("{} ⇒ {} (levels 1..={})", word, actual, levels))
                }
                Ok(actual) => Check::fail(format!(
                    "{}: expected {}, oracle gives {} (levels 1..={})",
                    word, expected, actual, levels
                )),
                Err(e) => Check::from_error(&format!("classifying {}", word), &e),
            }
        }
    }
}
