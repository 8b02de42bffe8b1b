//! The `SL₂(M)`-flow on 1-types of the Borel-type decomposition: normal
//! forms `(z, q, p_j)`, the minimal subflow `V`, the symbolic actions of
//! `H`, `B` and ℤ/4ℤ, truncated orbit enumeration, and the Ellis-group
//! reduction.

pub mod matrix;

use std::fmt;

use crate::abflows::BorelTypeJ;
use crate::error::{Error, Result};
use crate::onetypes::OneType;
use crate::oracle::{classify_word, Factor, ProductWord};
use crate::series::LaurentSeries;
use crate::valfield::CosetLabel;
use crate::Config;

use self::matrix::{Matrix2, Z4};

/// Normal form `z · q · p_j` of a type in the flow: `z ∈ ℤ/4ℤ`, `q` the
/// type of the unipotent coordinate `α`, `p_j ∈ 𝒥` the Borel part.
#[derive(Clone, PartialEq, Debug)]
pub struct SL2TypeNF {
    pub z: Z4,
    pub q: OneType,
    pub j: BorelTypeJ,
}

impl SL2TypeNF {
    pub fn new(z: Z4, q: OneType, j: CosetLabel) -> Self {
        SL2TypeNF { z, q, j: BorelTypeJ::new(j) }
    }

    /// `p_{∞,C₀} * p_{0}`.
    pub fn idempotent() -> Self {
        SL2TypeNF::new(Z4::I, OneType::Unbounded(0), 0)
    }

    /// The labels truncation applies to: the stored coset of `q` and `j`.
    pub fn labels(&self) -> Vec<CosetLabel> {
        let mut out = Vec::with_capacity(2);
        match &self.q {
            OneType::Infinitesimal(_, k) | OneType::Unbounded(k) => out.push(*k),
            OneType::Residual { n, .. } => out.push(*n),
            OneType::Realized(_) => {}
        }
        out.push(self.j.label);
        out
    }

    /// The word `z · h_q · p_j` whose realization this normal form reads.
    pub fn word(&self) -> ProductWord {
        let w = ProductWord::hj(self.q.clone(), self.j.label);
        if self.z == Z4::I {
            w
        } else {
            w.prepend(Factor::Z(self.z))
        }
    }
}

impl fmt::Display for SL2TypeNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.z, self.q, self.j)
    }
}

/// Membership in `V`: `z = I`, `q = p_{∞,C_m}` or `q = p_{a,C_m}` with
/// `a ≠ 0`, and `m = −2j`.
pub fn in_v(nf: &SL2TypeNF) -> bool {
    if nf.z != Z4::I {
        return false;
    }
    let m = match &nf.q {
        OneType::Unbounded(m) => *m,
        OneType::Infinitesimal(a, m) if !a.is_certified_zero() => *m,
        _ => return false,
    };
    m == -2 * nf.j.label
}

/// The `V`-element with Borel label `k` and unbounded unipotent part,
/// `(I, p_{∞,C_{−2k}}, p_k)`.
pub fn v_member(k: CosetLabel) -> SL2TypeNF {
    SL2TypeNF::new(Z4::I, OneType::Unbounded(-2 * k), k)
}

/// The same element as written with the `C_{2k}` parametrization.
pub fn statement_v_member(k: CosetLabel) -> SL2TypeNF {
    SL2TypeNF::new(Z4::I, OneType::Unbounded(2 * k), k)
}

/// The extra component produced by applying `W` to the `C_{2k}`
/// parametrization: `(I, p_{0,C_{−2k}}, p_{3k})`.
pub fn statement_rule_image(k: CosetLabel) -> SL2TypeNF {
    SL2TypeNF::new(Z4::I, OneType::Infinitesimal(LaurentSeries::zero(), -2 * k), 3 * k)
}

/// `(1 0; a 1) · nf`: lower unipotent translations fix types whose
/// unipotent part is unbounded.
pub fn h_action(_a: &LaurentSeries, nf: &SL2TypeNF) -> Result<SL2TypeNF> {
    match (&nf.z, &nf.q) {
        (&Z4::I, OneType::Unbounded(_)) => Ok(nf.clone()),
        _ => Err(Error::Precondition(format!("{} does not have an unbounded unipotent part", nf))),
    }
}

/// `(b c; 0 b⁻¹) · (I, p_{∞,C₀}, p_0)`.
pub fn b_action(b: &LaurentSeries, c: &LaurentSeries) -> Result<SL2TypeNF> {
    if b.is_zero()? {
        return Err(Error::Precondition("the diagonal entry b must be nonzero".into()));
    }
    if c.is_zero()? {
        let vb = b.valuation()?;
        return Ok(SL2TypeNF::new(Z4::I, OneType::Unbounded(-2 * vb), vb));
    }
    let vc = c.valuation()?;
    let a = (b * c).inv()?;
    Ok(SL2TypeNF::new(Z4::I, OneType::Infinitesimal(a, -2 * vc), vc))
}

/// A preimage `(b, c)` of a `V`-element under [`b_action`].
pub fn b_action_solve(target: &SL2TypeNF) -> Result<(LaurentSeries, LaurentSeries)> {
    if !in_v(target) {
        return Err(Error::NotInV(target.to_string()));
    }
    let k = target.j.label;
    match &target.q {
        OneType::Unbounded(_) => Ok((LaurentSeries::t_pow(k), LaurentSeries::zero())),
        OneType::Infinitesimal(a, _) => {
            let b = (a * &LaurentSeries::t_pow(k)).inv()?;
            Ok((b, LaurentSeries::t_pow(k)))
        }
        _ => Err(Error::NotInV(target.to_string())),
    }
}

/// `z · nf` for `nf = (I, q, p_j)` with `q` unbounded or infinitesimal at `0`:
/// `±I` fixes it, `±W` exchanges `p_{∞,C_m}` and `p_{0,C_{−m}}` and moves
/// the Borel label to `m + j`.
pub fn z4_action(z: Z4, nf: &SL2TypeNF) -> Result<SL2TypeNF> {
    if nf.z != Z4::I {
        return Err(Error::Precondition(format!("{} is not in the I-component", nf)));
    }
    let j = nf.j.label;
    match &nf.q {
        OneType::Unbounded(_) if !z.is_quarter_turn() => Ok(nf.clone()),
        OneType::Infinitesimal(a, _) if !z.is_quarter_turn() && a.is_certified_zero() => Ok(nf.clone()),
        OneType::Unbounded(m) => Ok(SL2TypeNF::new(Z4::I, OneType::Infinitesimal(LaurentSeries::zero(), -m), m + j)),
        OneType::Infinitesimal(a, m) if a.is_certified_zero() => {
            Ok(SL2TypeNF::new(Z4::I, OneType::Unbounded(-m), m + j))
        }
        q => Err(Error::Precondition(format!("{} is neither unbounded nor infinitesimal at 0", q))),
    }
}

/// The rule-preimage of `(I, p_{0,C_m}, p_j)` under `W`:
/// `(I, p_{∞,C_{−m}}, p_{j+m})`, returned whether or not it lies in `V`
/// (it does exactly when `2j + m = 0`).
pub fn z4_solve(target: &SL2TypeNF) -> Result<(Z4, SL2TypeNF)> {
    if target.z != Z4::I {
        return Err(Error::Precondition(format!("{} is not in the I-component", target)));
    }
    match &target.q {
        OneType::Infinitesimal(a, m) if a.is_certified_zero() => {
            Ok((Z4::W, SL2TypeNF::new(Z4::I, OneType::Unbounded(-m), target.j.label + m)))
        }
        q => Err(Error::Precondition(format!("{} is not infinitesimal at 0", q))),
    }
}

/// One enumerated orbit element with the group element that produced it.
#[derive(Clone, Debug)]
pub struct OrbitEntry {
    pub nf: SL2TypeNF,
    pub provenance: String,
}

/// The label-truncated orbit of the idempotent.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub bound: u32,
    pub elements: Vec<OrbitEntry>,
    /// Elements of the form [`statement_rule_image`] within the bound,
    /// flagged by whether they occur among `elements`.
    pub statement_elements: Vec<(SL2TypeNF, bool)>,
}

impl Orbit {
    pub fn contains(&self, nf: &SL2TypeNF) -> bool {
        self.elements.iter().any(|e| &e.nf == nf)
    }
}

fn within(nf: &SL2TypeNF, bound: i64) -> bool {
    nf.labels().iter().all(|l| l.abs() <= 2 * bound)
}

/// Enumerates the orbit of `(I, p_{∞,C₀}, p_0)` under `(tᵏ c; 0 t⁻ᵏ)` with
/// `|k| ≤ B`, `c ∈ {0} ∪ {tᵐ : |m| ≤ B}`, closed once under `±W`, keeping
/// elements whose labels lie in `[−2B, 2B]`.  For `B = 0` only the identity
/// is applied.
pub fn orbit(bound: u32) -> Result<Orbit> {
    let b = bound as i64;
    let mut elements: Vec<OrbitEntry> = Vec::new();
    let push = |nf: SL2TypeNF, provenance: String, out: &mut Vec<OrbitEntry>| {
        if within(&nf, b) && !out.iter().any(|e| e.nf == nf) {
            out.push(OrbitEntry { nf, provenance });
        }
    };
    let cs: Vec<Option<i64>> =
        if b == 0 { vec![None] } else { std::iter::once(None).chain((-b..=b).map(Some)).collect() };
    for k in -b..=b {
        for c in &cs {
            let (cval, cname) = match c {
                None => (LaurentSeries::zero(), "0".to_string()),
                Some(m) => (LaurentSeries::t_pow(*m), format!("t^{}", m)),
            };
            let nf = b_action(&LaurentSeries::t_pow(k), &cval)?;
            push(nf, format!("(t^{} {}; 0 t^{})", k, cname, -k), &mut elements);
        }
    }
    let base: Vec<OrbitEntry> = elements.clone();
    for e in &base {
        let turnable = match &e.nf.q {
            OneType::Unbounded(_) => true,
            OneType::Infinitesimal(a, _) => a.is_certified_zero(),
            _ => false,
        };
        if turnable {
            for z in [Z4::W, Z4::NEG_W] {
                let nf = z4_action(z, &e.nf)?;
                push(nf, format!("{} · {}", z, e.provenance), &mut elements);
            }
        }
    }
    elements.sort_by_key(|e| e.nf.to_string());
    let mut statement_elements = Vec::new();
    for k in -b..=b {
        let nf = statement_rule_image(k);
        if within(&nf, b) {
            let present = elements.iter().any(|e| e.nf == nf);
            statement_elements.push((nf, present));
        }
    }
    Ok(Orbit { bound, elements, statement_elements })
}

/// The `𝒥`-label of `p_j * q`: the Borel coordinate keeps its coset when
/// `q` is `0` or infinitesimal at `0`, and otherwise absorbs the coset of `q`.
pub fn ellis_reduce(q: &OneType, j: BorelTypeJ) -> Result<BorelTypeJ> {
    match q {
        OneType::Realized(a) if a.is_certified_zero() => Ok(j),
        OneType::Infinitesimal(a, _) if a.is_certified_zero() => Ok(j),
        _ => Ok(BorelTypeJ::new(j.label + q.coset_label()?)),
    }
}

/// True when [`ellis_reduce`] is applied outside the kinds the group
/// structure was established for (residual types).
pub fn ellis_reduce_is_extrapolation(q: &OneType) -> bool {
    matches!(q, OneType::Residual { .. })
}

/// Product in the Ellis group `𝒥 ≅ ℤ`.
pub fn ellis_product(i: BorelTypeJ, j: BorelTypeJ) -> BorelTypeJ {
    BorelTypeJ::new(i.label + j.label)
}

/// A group element moving `p_i` off itself: `diag(t, t⁻¹) · p_i = p_{i+1}`.
pub fn amenability_witness(i: BorelTypeJ) -> (Matrix2<LaurentSeries>, BorelTypeJ) {
    let g =
        Matrix2::new(LaurentSeries::t_pow(1), LaurentSeries::zero(), LaurentSeries::zero(), LaurentSeries::t_pow(-1));
    (g, BorelTypeJ::new(i.label + 1))
}

/// Realizes `p_{∞,C₀} * p_0 * p_{∞,C₀} * p_0` as successive heirs and checks
/// that it classifies back to the idempotent.  Needs six levels.
pub fn idempotent_check(cfg: &Config) -> Result<bool> {
    let e = SL2TypeNF::idempotent();
    let w = e.word().then(e.word());
    Ok(classify_word(&w, cfg)? == e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{check_rule, Verdict};
    use crate::series::Coefficient;

    fn cfg() -> Config {
        Config::default()
    }

    fn t(k: i64) -> LaurentSeries {
        LaurentSeries::t_pow(k)
    }

    fn assert_oracle(expected: &SL2TypeNF, word: ProductWord) {
        let c = check_rule(expected, &word, &cfg());
        assert_eq!(c.verdict, Verdict::Pass, "{}", c.details);
    }

    fn b_word(b: &LaurentSeries, c: &LaurentSeries) -> ProductWord {
        let g = Matrix2::new(b.clone(), c.clone(), LaurentSeries::zero(), b.inv().unwrap());
        SL2TypeNF::idempotent().word().prepend(Factor::M(g))
    }

    #[test]
    fn display_form() {
        assert_eq!(SL2TypeNF::idempotent().to_string(), "(I, pinf[k=0], pj[k=0])");
    }

    #[test]
    fn v_membership() {
        assert!(in_v(&SL2TypeNF::idempotent()));
        assert!(in_v(&v_member(3)));
        assert!(!in_v(&statement_v_member(3)));
        assert!(in_v(&statement_v_member(0)));
        assert!(in_v(&SL2TypeNF::new(Z4::I, OneType::Infinitesimal(t(-1), -2), 1)));
        assert!(!in_v(&SL2TypeNF::new(Z4::I, OneType::Infinitesimal(LaurentSeries::zero(), -2), 1)));
        assert!(!in_v(&SL2TypeNF::new(Z4::W, OneType::Unbounded(0), 0)));
    }

    #[test]
    fn h_action_fixes_unbounded() {
        let nf = v_member(2);
        assert_eq!(h_action(&t(-5), &nf).unwrap(), nf);
        let g = Matrix2::lower(t(-5));
        assert_oracle(&nf, nf.word().prepend(Factor::M(g)));
        assert!(h_action(&t(1), &SL2TypeNF::new(Z4::I, OneType::Realized(t(1)), 0)).is_err());
    }

    #[test]
    fn b_action_diagonal_case() {
        let nf = b_action(&t(2), &LaurentSeries::zero()).unwrap();
        assert_eq!(nf, SL2TypeNF::new(Z4::I, OneType::Unbounded(-4), 2));
        assert_oracle(&nf, b_word(&t(2), &LaurentSeries::zero()));
    }

    #[test]
    fn b_action_offdiagonal_case() {
        let nf = b_action(&LaurentSeries::one(), &t(1)).unwrap();
        assert_eq!(nf, SL2TypeNF::new(Z4::I, OneType::Infinitesimal(t(-1), -2), 1));
        assert_oracle(&nf, b_word(&LaurentSeries::one(), &t(1)));
        let b = LaurentSeries::polynomial(-1, vec![Coefficient::from_i64(2), Coefficient::from_i64(1)]);
        let c = LaurentSeries::monomial(Coefficient::i(), -2);
        let nf = b_action(&b, &c).unwrap();
        assert!(in_v(&nf));
        assert_oracle(&nf, b_word(&b, &c));
    }

    #[test]
    fn b_action_errors() {
        assert!(b_action(&LaurentSeries::zero(), &t(1)).is_err());
    }

    #[test]
    fn b_action_solve_roundtrip() {
        for nf in [v_member(-2), SL2TypeNF::new(Z4::I, OneType::Infinitesimal(t(3), 4), -2)] {
            let (b, c) = b_action_solve(&nf).unwrap();
            assert_eq!(b_action(&b, &c).unwrap(), nf);
        }
        assert!(matches!(b_action_solve(&statement_v_member(1)), Err(Error::NotInV(_))));
    }

    #[test]
    fn z4_action_rules() {
        let nf = v_member(1);
        assert_eq!(z4_action(Z4::I, &nf).unwrap(), nf);
        assert_eq!(z4_action(Z4::NEG_I, &nf).unwrap(), nf);
        let w = z4_action(Z4::W, &nf).unwrap();
        assert_eq!(w, SL2TypeNF::new(Z4::I, OneType::Infinitesimal(LaurentSeries::zero(), 2), -1));
        for z in Z4::all() {
            assert_oracle(&z4_action(z, &nf).unwrap(), nf.word().prepend(Factor::Z(z)));
            assert_oracle(&z4_action(z, &w).unwrap(), w.word().prepend(Factor::Z(z)));
        }
        assert!(z4_action(Z4::W, &SL2TypeNF::new(Z4::I, OneType::Infinitesimal(t(1), 0), 0)).is_err());
    }

    #[test]
    fn z4_on_statement_parametrization() {
        let nf = statement_v_member(1);
        let img = z4_action(Z4::W, &nf).unwrap();
        assert_eq!(img, statement_rule_image(1));
        assert_oracle(&img, nf.word().prepend(Factor::Z(Z4::W)));
    }

    #[test]
    fn z4_solve_inverts() {
        let target = SL2TypeNF::new(Z4::I, OneType::Infinitesimal(LaurentSeries::zero(), 2), -1);
        let (z, pre) = z4_solve(&target).unwrap();
        assert_eq!(pre, v_member(1));
        assert_eq!(z4_action(z, &pre).unwrap(), target);
        assert!(z4_solve(&v_member(0)).is_err());
    }

    #[test]
    fn orbit_small_bounds() {
        let o = orbit(0).unwrap();
        assert_eq!(o.elements.len(), 2);
        assert!(o.contains(&SL2TypeNF::idempotent()));
        assert!(o.contains(&SL2TypeNF::new(Z4::I, OneType::Infinitesimal(LaurentSeries::zero(), 0), 0)));
        let o = orbit(1).unwrap();
        assert!(o.contains(&v_member(1)) && o.contains(&v_member(-1)));
        assert!(o.elements.iter().all(|e| within(&e.nf, 1)));
        let names: Vec<String> = o.elements.iter().map(|e| e.nf.to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn orbit_entries_match_oracle() {
        let o = orbit(1).unwrap();
        for e in &o.elements {
            if in_v(&e.nf) {
                let (b, c) = b_action_solve(&e.nf).unwrap();
                assert_oracle(&e.nf, b_word(&b, &c));
            } else {
                let (z, pre) = z4_solve(&e.nf).unwrap();
                assert_oracle(&e.nf, pre.word().prepend(Factor::Z(z)));
            }
        }
    }

    #[test]
    fn statement_elements_are_outside_the_orbit() {
        let o = orbit(3).unwrap();
        let off: Vec<_> = o.statement_elements.iter().filter(|(_, present)| !present).collect();
        assert!(!off.is_empty());
        assert!(o.statement_elements.iter().any(|(nf, present)| *present && nf == &statement_rule_image(0)));
    }

    #[test]
    fn ellis_reduction() {
        let j = BorelTypeJ::new;
        assert_eq!(ellis_reduce(&OneType::Realized(LaurentSeries::one()), j(0)).unwrap(), j(0));
        assert_eq!(ellis_reduce(&OneType::Unbounded(-2), j(1)).unwrap(), j(-1));
        assert_eq!(ellis_reduce(&OneType::Unbounded(2), j(1)).unwrap(), j(3));
        assert_eq!(ellis_reduce(&OneType::Infinitesimal(LaurentSeries::zero(), 4), j(2)).unwrap(), j(2));
        assert_eq!(ellis_product(j(2), j(-5)), j(-3));
        assert!(ellis_reduce_is_extrapolation(&OneType::residual(LaurentSeries::zero(), 0, 1).unwrap()));
    }

    #[test]
    fn amenability() {
        let (g, img) = amenability_witness(BorelTypeJ::new(4));
        assert_eq!(img, BorelTypeJ::new(5));
        let w = ProductWord::new(vec![Factor::M(g), Factor::B(crate::oracle::BFactor::J(4))]);
        assert_eq!(classify_word(&w, &cfg()).unwrap().j, img);
    }

    #[test]
    fn idempotent_needs_six_levels() {
        assert!(idempotent_check(&cfg()).unwrap());
        assert!(matches!(idempotent_check(&Config { levels: 2, ..cfg() }), Err(Error::LevelsExhausted { .. })));
    }
}
