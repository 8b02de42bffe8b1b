//! The computational subcommands: each yields a human-readable rendering
//! and a JSON value.

use serde_json::{json, Value as Json};
use thiserror::Error;

use sl2dyn::abflows::{ga_product, gm_product, j_product};
use sl2dyn::onetypes::{classify, OneType};
use sl2dyn::oracle::{classify_word, ProductWord};
use sl2dyn::sl2flow::matrix::{compose, decompose};
use sl2dyn::sl2flow::{in_v, orbit};
use sl2dyn::Config;

use crate::parse::{Grammar, ParseError, TypeLit};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(#[from] sl2dyn::Error),
}

impl CommandError {
    /// 2 for unreadable input, 3 when a precision horizon was reached,
    /// 1 for any other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Parse(_) | CommandError::Usage(_) => 2,
            CommandError::Compute(e) if e.is_horizon() => 3,
            CommandError::Compute(_) => 1,
        }
    }
}

pub type CommandResult = Result<Output, CommandError>;

/// What a command prints: `text` normally, `json` under `--json`.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Json,
}

impl Output {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("values serialize")
        } else {
            self.text.clone()
        }
    }
}

/// The 1-type over `M` realized by an element of the realization field.
pub fn classify_element(text: &str, cfg: &Config) -> CommandResult {
    let x = Grammar::from_config(cfg).element(text)?.into_hahn();
    let q = classify(&x)?;
    let label = q.coset_label().ok();
    Ok(Output {
        text: format!("{}\n", q),
        json: json!({ "input": text, "element": x.to_string(), "type": q.to_string(), "kind": q.kind(), "coset_label": label }),
    })
}

/// `g = z · (1 0; α 1) · (β γ; 0 β⁻¹)`, checked by recomposition.
pub fn decompose_matrix(text: &str, cfg: &Config) -> CommandResult {
    let g = Grammar::from_config(cfg).matrix(text)?;
    let d = decompose(&g)?;
    let back = compose(d.z, &d.alpha, &d.beta, &d.gamma)?;
    let verified = back.try_eq(&g)?;
    Ok(Output {
        text: format!(
            "z = {}\nalpha = {}\nbeta = {}\ngamma = {}\nrecomposed: {}\n",
            d.z,
            d.alpha,
            d.beta,
            d.gamma,
            if verified { "ok" } else { "MISMATCH" }
        ),
        json: json!({
            "input": g.to_string(),
            "z": d.z.to_string(),
            "alpha": d.alpha.to_string(),
            "beta": d.beta.to_string(),
            "gamma": d.gamma.to_string(),
            "verified": verified,
        }),
    })
}

/// The flow used for products of two 1-types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flow {
    Add,
    Mul,
}

/// `q * p`: in `Ga` or `Gm` for two 1-types, in `𝒥` for two Borel types,
/// and the `SL₂` type `q * p_j` (read off by the oracle) for a 1-type
/// followed by a Borel type.
pub fn type_product(left: &str, right: &str, flow: Flow, cfg: &Config) -> CommandResult {
    let grammar = Grammar::from_config(cfg);
    let (q, p) = (grammar.type_lit(left)?, grammar.type_lit(right)?);
    let (result, via) = match (&q, &p) {
        (TypeLit::One(q), TypeLit::One(p)) => match flow {
            Flow::Add => (ga_product(q, p)?.to_string(), "additive flow"),
            Flow::Mul => (gm_product(q, p)?.to_string(), "multiplicative flow"),
        },
        (TypeLit::J(a), TypeLit::J(b)) => (j_product(*a, *b).to_string(), "Borel group"),
        (TypeLit::One(q), TypeLit::J(j)) => {
            check_sl2_factor(q)?;
            (classify_word(&ProductWord::hj(q.clone(), j.label), cfg)?.to_string(), "SL2 oracle")
        }
        (TypeLit::J(_), TypeLit::One(_)) => {
            return Err(CommandError::Usage("a Borel type must follow the unipotent 1-type".into()));
        }
    };
    Ok(Output {
        text: format!("{}\n", result),
        json: json!({ "left": q.to_string(), "right": p.to_string(), "via": via, "product": result }),
    })
}

fn check_sl2_factor(q: &OneType) -> Result<(), CommandError> {
    match q {
        OneType::Residual { .. } => {
            Err(CommandError::Usage(format!("{} has no realization in a product word over levels", q)))
        }
        _ => Ok(()),
    }
}

/// The label-truncated orbit of the idempotent `(I, pinf[k=0], pj[k=0])`.
pub fn orbit_listing(bound: i64) -> CommandResult {
    let bound = u32::try_from(bound).map_err(|_| CommandError::Usage(format!("--coset-bound {} < 0", bound)))?;
    let o = orbit(bound)?;
    let mut text = String::new();
    for e in &o.elements {
        let tag = if in_v(&e.nf) { "V " } else { "WV" };
        text.push_str(&format!("{}  {}  from {}\n", tag, e.nf, e.provenance));
    }
    for (nf, inside) in &o.statement_elements {
        text.push_str(&format!("stated {}  {}\n", nf, if *inside { "in orbit" } else { "not in orbit" }));
    }
    text.push_str(&format!(
        "{} elements with labels in [{}, {}]\n",
        o.elements.len(),
        -2 * i64::from(bound),
        2 * bound
    ));
    let elements: Vec<Json> = o
        .elements
        .iter()
        .map(|e| json!({ "element": e.nf.to_string(), "in_v": in_v(&e.nf), "provenance": e.provenance }))
        .collect();
    let stated: Vec<Json> = o
        .statement_elements
        .iter()
        .map(|(nf, inside)| json!({ "element": nf.to_string(), "in_orbit": inside }))
        .collect();
    Ok(Output { text, json: json!({ "bound": bound, "elements": elements, "stated_elements": stated }) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn classify_prints_type() {
        let out = classify_element("1 + s1^-1", &cfg()).unwrap();
        assert_eq!(out.json["kind"], "unbounded");
        assert!(classify_element("1 + (", &cfg()).unwrap_err().exit_code() == 2);
    }

    #[test]
    fn decompose_recomposes() {
        let out = decompose_matrix("t,1;0,t^-1", &cfg()).unwrap();
        assert_eq!(out.json["verified"], true);
        assert_eq!(out.json["z"], "I");
    }

    #[test]
    fn products() {
        let j = type_product("pj[k=2]", "pj[k=-5]", Flow::Add, &cfg()).unwrap();
        assert_eq!(j.json["product"], "pj[k=-3]");
        let e = type_product("pinf[k=0]", "pj[k=0]", Flow::Add, &cfg()).unwrap();
        assert_eq!(e.json["product"], "(I, pinf[k=0], pj[k=0])");
        let m = type_product("pinf[k=1]", "pzero[a=0,k=2]", Flow::Mul, &cfg()).unwrap();
        assert_eq!(m.json["product"], "pzero[a=0,k=3]");
    }

    #[test]
    fn orbit_lists_idempotent() {
        let out = orbit_listing(1).unwrap();
        assert!(out.text.contains("(I, pinf[k=0], pj[k=0])"));
        assert_eq!(orbit_listing(-1).unwrap_err().exit_code(), 2);
    }
}
