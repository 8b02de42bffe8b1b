//! Parsers for series and realization-field expressions, matrix literals
//! `m11,m12;m21,m22`, and the type DSL
//! `real[a=…] | pzero[a=…,k=…] | pinf[k=…] | res[a=…,n=…(,tau=…)] | pj[k=…]`.
//!
//! Expression grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*      -- O(t^N) terms are dropped
//! unary   := '-' unary | power
//! power   := primary ('^' ['-'] integer)?
//! primary := integer | 'i' | 'tau' integer | 't' | 's' integer | '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use sl2dyn::abflows::BorelTypeJ;
use sl2dyn::onetypes::OneType;
use sl2dyn::sl2flow::matrix::Matrix2;
use sl2dyn::{Coefficient, HahnElement, LaurentSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

impl From<sl2dyn::Error> for ParseError {
    fn from(e: sl2dyn::Error) -> Self {
        ParseError::Semantic(e.to_string())
    }
}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

/// A parsed expression: a series over `M` as long as no `sN` occurs.
#[derive(Clone, Debug)]
pub enum Expr {
    Series(LaurentSeries),
    Hahn(HahnElement),
}

impl Expr {
    pub fn into_hahn(self) -> HahnElement {
        match self {
            Expr::Series(s) => HahnElement::embed(&s),
            Expr::Hahn(h) => h,
        }
    }

    fn binary(
        self,
        o: Expr,
        fs: impl Fn(&LaurentSeries, &LaurentSeries) -> sl2dyn::Result<LaurentSeries>,
        fh: impl Fn(&HahnElement, &HahnElement) -> sl2dyn::Result<HahnElement>,
    ) -> ParseResult<Expr> {
        Ok(match (self, o) {
            (Expr::Series(a), Expr::Series(b)) => Expr::Series(fs(&a, &b)?),
            (a, b) => Expr::Hahn(fh(&a.into_hahn(), &b.into_hahn())?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Series(s) => write!(f, "{}", s),
            Expr::Hahn(h) => write!(f, "{}", h),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

/// Parsing options: the number of generators `s1..sL` accepted and the
/// precision horizon given to every parsed series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grammar {
    pub levels: usize,
    pub horizon: usize,
}

impl Default for Grammar {
    fn default() -> Self {
        let cfg = sl2dyn::Config::default();
        Grammar { levels: cfg.levels, horizon: cfg.horizon }
    }
}

impl Grammar {
    pub fn from_config(cfg: &sl2dyn::Config) -> Self {
        Grammar { levels: cfg.levels, horizon: cfg.horizon }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    grammar: Grammar,
}

fn lex(text: &str) -> ParseResult<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((col, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()[]=,;".contains(c) {
            out.push((col, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax { col, msg: format!("unexpected character '{}'", c) });
        }
    }
    Ok(out)
}

impl Parser {
    fn new(text: &str, grammar: Grammar) -> ParseResult<Parser> {
        let toks = lex(text)?;
        Ok(Parser { toks, pos: 0, end: text.chars().count() + 1, grammar })
    }

    fn leaf(&self, s: LaurentSeries) -> Expr {
        Expr::Series(s.with_horizon(self.grammar.horizon))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> ParseResult<T> {
        Err(ParseError::Syntax { col: self.col(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c))
        }
    }

    fn finish(&self) -> ParseResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.err("unexpected trailing input"),
        }
    }

    fn int(&mut self) -> ParseResult<i64> {
        let negative = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let v: i64 = n
                    .try_into()
                    .map_err(|_| ParseError::Syntax { col: self.col(), msg: "integer too large".into() })?;
                Ok(if negative { -v } else { v })
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> ParseResult<Expr> {
        let mut acc: Option<Expr> = None;
        let mut negate = self.eat('-');
        loop {
            if let Some(term) = self.term()? {
                let term = if negate {
                    Expr::Series(LaurentSeries::zero()).binary(term, |a, b| Ok(a - b), |a, b| Ok(a - b))?
                } else {
                    term
                };
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.binary(term, |a, b| Ok(a + b), |a, b| Ok(a + b))?,
                });
            }
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(acc.unwrap_or(Expr::Series(LaurentSeries::zero())))
    }

    /// A product of factors, or `None` for an `O(t^N)` marker.
    fn term(&mut self) -> ParseResult<Option<Expr>> {
        if self.peek() == Some(&Tok::Ident("O".into())) {
            self.pos += 1;
            self.expect('(')?;
            self.expr()?;
            self.expect(')')?;
            return Ok(None);
        }
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let r = self.unary()?;
                acc = acc.binary(r, |a, b| Ok(a * b), |a, b| Ok(a * b))?;
            } else if self.eat('/') {
                let col = self.col();
                let r = self.unary()?;
                acc = acc.binary(r, |a, b| a.div(b), |a, b| a.div(b)).map_err(|e| match e {
                    ParseError::Semantic(m) => ParseError::Semantic(format!("column {}: {}", col, m)),
                    other => other,
                })?;
            } else {
                return Ok(Some(acc));
            }
        }
    }

    fn unary(&mut self) -> ParseResult<Expr> {
        if self.eat('-') {
            let x = self.unary()?;
            return Expr::Series(LaurentSeries::zero()).binary(x, |a, b| Ok(a - b), |a, b| Ok(a - b));
        }
        let base = self.primary()?;
        if self.eat('^') {
            let e = self.int()?;
            return Ok(match base {
                Expr::Series(s) => Expr::Series(s.pow(e)?),
                Expr::Hahn(h) => Expr::Hahn(h.pow(e)?),
            });
        }
        Ok(base)
    }

    fn primary(&mut self) -> ParseResult<Expr> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.leaf(LaurentSeries::constant(Coefficient::from_rational(BigRational::from_integer(n)))))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let index = |prefix: &str| -> Option<usize> {
                    let rest = name.strip_prefix(prefix)?;
                    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
                        return None;
                    }
                    rest.parse().ok()
                };
                if name == "t" {
                    Ok(self.leaf(LaurentSeries::t_pow(1)))
                } else if name == "i" {
                    Ok(self.leaf(LaurentSeries::constant(Coefficient::i())))
                } else if let Some(k) = index("tau") {
                    if k == 0 {
                        return Err(ParseError::Syntax {
                            col,
                            msg: "residue indeterminates are numbered from tau1".into(),
                        });
                    }
                    Ok(self.leaf(LaurentSeries::constant(Coefficient::tau(k))))
                } else if let Some(l) = index("s") {
                    let g = HahnElement::generator(l, 1, self.grammar.levels)
                        .map_err(|e| ParseError::Syntax { col, msg: e.to_string() })?;
                    Ok(Expr::Hahn(g))
                } else {
                    Err(ParseError::Syntax { col, msg: format!("unknown identifier '{}'", name) })
                }
            }
            Some(t) => self.err(format!("unexpected '{}'", tok_text(&t))),
            None => self.err("unexpected end of input"),
        }
    }

    fn series(&mut self) -> ParseResult<LaurentSeries> {
        let col = self.col();
        match self.expr()? {
            Expr::Series(s) => Ok(s),
            Expr::Hahn(h) => h
                .as_series()
                .ok_or_else(|| ParseError::Semantic(format!("column {}: expected an element of M, found {}", col, h))),
        }
    }

    fn ident(&mut self) -> ParseResult<String> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected a name"),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Int(n) => n.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Sym(c) => c.to_string(),
    }
}

impl Grammar {
    /// Parses an element of the realization field with generators `s1..sL`.
    pub fn element(&self, text: &str) -> ParseResult<Expr> {
        let mut p = Parser::new(text, *self)?;
        let e = p.expr()?;
        p.finish()?;
        Ok(e)
    }

    /// Parses an element of `M = ℂ((t))`.
    pub fn series(&self, text: &str) -> ParseResult<LaurentSeries> {
        let mut p = Parser::new(text, *self)?;
        let s = p.series()?;
        p.finish()?;
        Ok(s)
    }

    /// Parses `m11,m12;m21,m22` and checks that the determinant is 1.
    pub fn matrix(&self, text: &str) -> ParseResult<Matrix2<LaurentSeries>> {
        let mut p = Parser::new(text, *self)?;
        let x1 = p.series()?;
        p.expect(',')?;
        let x2 = p.series()?;
        p.expect(';')?;
        let x3 = p.series()?;
        p.expect(',')?;
        let x4 = p.series()?;
        p.finish()?;
        let g = Matrix2::new(x1, x2, x3, x4);
        if !g.has_unit_det()? {
            return Err(ParseError::Semantic(format!("determinant of {} is {}, not 1", g, g.det())));
        }
        Ok(g)
    }

    /// Parses the type DSL.
    pub fn type_lit(&self, text: &str) -> ParseResult<TypeLit> {
        let mut p = Parser::new(text, *self)?;
        let t = p.type_lit()?;
        p.finish()?;
        Ok(t)
    }
}

pub fn parse_element(text: &str, levels: usize) -> ParseResult<Expr> {
    Grammar { levels, ..Grammar::default() }.element(text)
}

pub fn parse_series(text: &str) -> ParseResult<LaurentSeries> {
    Grammar::default().series(text)
}

pub fn parse_matrix(text: &str) -> ParseResult<Matrix2<LaurentSeries>> {
    Grammar::default().matrix(text)
}

pub fn parse_type(text: &str) -> ParseResult<TypeLit> {
    Grammar::default().type_lit(text)
}

/// A parsed type: a 1-type over `M` or an element of `𝒥`.
#[derive(Clone, Debug, PartialEq)]
pub enum TypeLit {
    One(OneType),
    J(BorelTypeJ),
}

impl fmt::Display for TypeLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLit::One(q) => write!(f, "{}", q),
            TypeLit::J(j) => write!(f, "{}", j),
        }
    }
}

enum Field {
    Series(LaurentSeries),
    Int(i64),
}

impl Parser {
    fn type_lit(&mut self) -> ParseResult<TypeLit> {
        let p = self;
        let name = p.ident()?;
        let allowed: &[&str] = match name.as_str() {
            "real" => &["a"],
            "pzero" => &["a", "k"],
            "pinf" | "pj" => &["k"],
            "res" => &["a", "n", "tau"],
            _ => return Err(ParseError::Syntax { col: 1, msg: format!("unknown type '{}'", name) }),
        };
        p.expect('[')?;
        let mut fields: Vec<(String, Field)> = Vec::new();
        loop {
            let col = p.col();
            let key = p.ident()?;
            if !allowed.contains(&key.as_str()) {
                return Err(ParseError::Syntax { col, msg: format!("'{}' takes no field '{}'", name, key) });
            }
            if fields.iter().any(|(k, _)| k == &key) {
                return Err(ParseError::Syntax { col, msg: format!("field '{}' given twice", key) });
            }
            p.expect('=')?;
            let value = if key == "a" { Field::Series(p.series()?) } else { Field::Int(p.int()?) };
            fields.push((key, value));
            if !p.eat(',') {
                break;
            }
        }
        p.expect(']')?;
        let series = |k: &str| -> ParseResult<LaurentSeries> {
            match fields.iter().find(|(key, _)| key == k) {
                Some((_, Field::Series(s))) => Ok(s.clone()),
                _ => Err(ParseError::Semantic(format!("'{}' needs field '{}'", name, k))),
            }
        };
        let int = |k: &str| -> ParseResult<Option<i64>> {
            Ok(match fields.iter().find(|(key, _)| key == k) {
                Some((_, Field::Int(n))) => Some(*n),
                _ => None,
            })
        };
        let required = |k: &str| -> ParseResult<i64> {
            int(k)?.ok_or_else(|| ParseError::Semantic(format!("'{}' needs field '{}'", name, k)))
        };
        Ok(match name.as_str() {
            "real" => TypeLit::One(OneType::Realized(series("a")?)),
            "pzero" => TypeLit::One(OneType::Infinitesimal(series("a")?, required("k")?)),
            "pinf" => TypeLit::One(OneType::Unbounded(required("k")?)),
            "pj" => TypeLit::J(BorelTypeJ::new(required("k")?)),
            _ => {
                let tau = int("tau")?.unwrap_or(1);
                if tau < 1 {
                    return Err(ParseError::Semantic("tau must be at least 1".into()));
                }
                TypeLit::One(OneType::residual(series("a")?, required("n")?, tau as usize)?)
            }
        })
    }
}

/// Parses a 1-type, rejecting `pj[…]`.
pub fn parse_one_type(text: &str) -> ParseResult<OneType> {
    match parse_type(text)? {
        TypeLit::One(q) => Ok(q),
        TypeLit::J(j) => Err(ParseError::Semantic(format!("{} is not a 1-type", j))),
    }
}
