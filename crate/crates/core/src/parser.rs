//! Factored-polynomial text such as `x*y^2*z^2*(x+y+z)`.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! input   := [ "vars" ident ("," ident)* ";" ] product
//! product := ["-"] factor ( ["*"] factor )*
//! factor  := ( ident | number | "(" linear ")" ) [ "^" uint ]
//! linear  := ["+"|"-"] term ( ("+"|"-") term )*
//! term    := number [ ["*"] ident ] | ident
//! number  := uint [ "/" uint ]
//! ```
//!
//! Nonzero constant factors are accepted and ignored since they do not
//! change the zero locus.

use num_traits::{One, Signed, Zero};

use crate::arrangement::{ArrangementSpec, NormalizedArrangement};
use crate::error::{Error, Result};
use crate::ratlinalg::RationalMatrix;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b',' => out.push((start, Tok::Comma)),
            b';' => out.push((start, Tok::Semi)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let lit = &text[start..i];
                let value = rational::parse(lit).map_err(|_| Error::Syntax {
                    pos: start,
                    message: format!("invalid number `{lit}`"),
                })?;
                out.push((start, Tok::Num(value)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax { pos: start, message: format!("unexpected character `{ch}`") });
            }
        }
        i += 1;
    }
    Ok(out)
}

/// A parsed factor: coefficients keyed by variable index, constant term,
/// exponent.
struct Factor {
    coeffs: Vec<(usize, Rational)>,
    constant: Rational,
    exponent: u64,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: Vec<String>,
    declared: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), message: message.into() })
    }

    fn var_index(&mut self, name: &str, pos: usize) -> Result<usize> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Ok(i);
        }
        if self.declared {
            return Err(Error::UnknownVariable { name: name.to_string(), pos });
        }
        self.vars.push(name.to_string());
        Ok(self.vars.len() - 1)
    }

    fn declarations(&mut self) -> Result<()> {
        if !matches!(self.peek(), Some(Tok::Ident(k)) if k == "vars") {
            return Ok(());
        }
        // `vars` is only a keyword when followed by a name list.
        if !matches!(self.toks.get(self.pos + 1), Some((_, Tok::Ident(_)))) {
            return Ok(());
        }
        self.pos += 1;
        self.declared = true;
        loop {
            let pos = self.offset();
            match self.bump() {
                Some(Tok::Ident(name)) => {
                    if self.vars.contains(&name) {
                        return Err(Error::Syntax { pos, message: format!("variable `{name}` declared twice") });
                    }
                    self.vars.push(name);
                }
                _ => {
                    self.pos -= 1;
                    return self.syntax("expected a variable name");
                }
            }
            match self.bump() {
                Some(Tok::Comma) => continue,
                Some(Tok::Semi) => return Ok(()),
                _ => {
                    self.pos -= 1;
                    return self.syntax("expected `,` or `;` in variable declaration");
                }
            }
        }
    }

    fn exponent(&mut self) -> Result<u64> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let pos = self.offset();
        match self.bump() {
            Some(Tok::Num(k)) if k.is_integer() => {
                u64::try_from(k.to_integer()).map_err(|_| Error::Syntax {
                    pos,
                    message: "exponent out of range".into(),
                })
            }
            _ => Err(Error::Syntax { pos, message: "expected a non-negative integer exponent".into() }),
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let pos = self.offset();
        let (coeffs, constant) = match self.bump() {
            Some(Tok::Ident(name)) => {
                let i = self.var_index(&name, pos)?;
                (vec![(i, Rational::one())], Rational::zero())
            }
            Some(Tok::Num(c)) => (Vec::new(), c),
            Some(Tok::LParen) => {
                let lin = self.linear()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.syntax("expected `)`");
                }
                lin
            }
            _ => {
                self.pos = self.pos.saturating_sub(1).min(self.toks.len());
                return Err(Error::Syntax { pos, message: "expected a factor".into() });
            }
        };
        let exponent = self.exponent()?;
        Ok(Factor { coeffs, constant, exponent })
    }

    fn linear(&mut self) -> Result<(Vec<(usize, Rational)>, Rational)> {
        let mut coeffs: Vec<(usize, Rational)> = Vec::new();
        let mut constant = Rational::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    Rational::one()
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    -Rational::one()
                }
                _ if first => Rational::one(),
                _ => break,
            };
            first = false;
            let pos = self.offset();
            let (var, value) = match self.bump() {
                Some(Tok::Num(c)) => {
                    if self.peek() == Some(&Tok::Star) {
                        self.pos += 1;
                    }
                    let vpos = self.offset();
                    match self.peek().cloned() {
                        Some(Tok::Ident(name)) => {
                            self.pos += 1;
                            (Some(self.var_index(&name, vpos)?), c)
                        }
                        _ if self.toks[self.pos - 1].1 == Tok::Star => {
                            return self.syntax("expected a variable after `*`");
                        }
                        _ => (None, c),
                    }
                }
                Some(Tok::Ident(name)) => (Some(self.var_index(&name, pos)?), Rational::one()),
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(Error::Syntax { pos, message: "expected a term".into() });
                }
            };
            match self.peek() {
                Some(Tok::Caret) => {
                    return Err(Error::Nonlinear {
                        pos: self.offset(),
                        message: "exponent inside a linear factor".into(),
                    })
                }
                Some(Tok::Star) | Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::Num(_)) => {
                    return Err(Error::Nonlinear {
                        pos: self.offset(),
                        message: "product inside a linear factor".into(),
                    })
                }
                _ => {}
            }
            let value = sign * value;
            match var {
                Some(i) => match coeffs.iter_mut().find(|(j, _)| *j == i) {
                    Some((_, c)) => *c += value,
                    None => coeffs.push((i, value)),
                },
                None => constant += value,
            }
        }
        Ok((coeffs, constant))
    }

    fn product(&mut self) -> Result<Vec<Factor>> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
        }
        let mut factors = vec![self.factor()?];
        while self.pos < self.toks.len() {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            }
            match self.peek() {
                Some(Tok::Ident(_)) | Some(Tok::Num(_)) | Some(Tok::LParen) => factors.push(self.factor()?),
                Some(Tok::Caret) => {
                    return Err(Error::Syntax { pos: self.offset(), message: "repeated exponent".into() })
                }
                _ => return self.syntax("expected `*` or a factor"),
            }
        }
        Ok(factors)
    }
}

/// Parses a product of linear factors into an arrangement; one row per
/// factor occurrence, exponents become multiplicities.
pub fn parse_factored_product(text: &str) -> Result<ArrangementSpec> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), vars: Vec::new(), declared: false };
    p.declarations()?;
    if p.pos >= p.toks.len() {
        return p.syntax("empty product");
    }
    let factors = p.product()?;
    let d = p.vars.len();
    if d == 0 {
        return Err(Error::EmptyArrangement);
    }

    let mut rows = Vec::new();
    let mut offsets = Vec::new();
    let mut mults = Vec::new();
    for f in factors {
        let mut row = vec![Rational::zero(); d];
        for (i, c) in f.coeffs {
            row[i] += c;
        }
        if row.iter().all(Zero::is_zero) {
            if f.constant.is_zero() && f.exponent > 0 {
                return Err(Error::Domain("polynomial is identically zero".into()));
            }
            continue;
        }
        rows.push(row);
        offsets.push(f.constant);
        mults.push(f.exponent as i64);
    }
    Ok(ArrangementSpec {
        variables: Some(p.vars),
        normals: RationalMatrix::from_rows(rows, d)?,
        offsets,
        multiplicities: mults,
    })
}

/// Renders an arrangement as `vars ...; factor*factor^k*...`, which
/// [`parse_factored_product`] reads back to the same arrangement.
pub fn to_factored_text(arr: &NormalizedArrangement) -> String {
    let names = arr.variable_names();
    let mut out = format!("vars {};", names.join(","));
    for i in 0..arr.len() {
        out.push(' ');
        if i > 0 {
            out.push_str("* ");
        }
        let normal = arr.normal(i);
        let offset = &arr.offsets()[i];
        let nonzero: Vec<usize> = (0..normal.len()).filter(|&j| !normal[j].is_zero()).collect();
        if offset.is_zero() && nonzero.len() == 1 && normal[nonzero[0]].is_one() {
            out.push_str(&names[nonzero[0]]);
        } else {
            out.push('(');
            let mut first = true;
            for &j in &nonzero {
                push_term(&mut out, &normal[j], Some(&names[j]), first);
                first = false;
            }
            if !offset.is_zero() {
                push_term(&mut out, offset, None, first);
            }
            out.push(')');
        }
        let s = arr.multiplicities()[i];
        if s != 1 {
            out.push_str(&format!("^{s}"));
        }
    }
    out
}

fn push_term(out: &mut String, c: &Rational, var: Option<&str>, first: bool) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = c.abs();
    match var {
        Some(v) if mag.is_one() => out.push_str(v),
        Some(v) => out.push_str(&format!("{mag}*{v}")),
        None => out.push_str(&mag.to_string()),
    }
}
