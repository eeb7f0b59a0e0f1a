//! Text syntax for field elements and polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' uint]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Variables are the names adjoined in the field
//! tower (`t`, `u`, `w`, ...).

use num_bigint::BigInt;

use super::{poly, Elem, Field, FieldKind, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

/// Arithmetic target of the parser.
trait Domain {
    type V;
    fn int(&self, n: &BigInt) -> Self::V;
    fn var(&self, name: &str) -> Option<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn pow(&self, a: &Self::V, e: u64) -> Self::V;
}

struct Parser<'a, D: Domain> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    dom: &'a D,
}

impl<D: Domain> Parser<'_, D> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<D::V> {
        let neg = self.peek() == Some(&Tok::Op('-'));
        if neg {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = self.dom.neg(&acc);
        }
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { self.dom.add(&acc, &rhs) } else { self.dom.sub(&acc, &rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<D::V> {
        let mut acc = self.factor()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            let at = self.here();
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if c == '*' {
                self.dom.mul(&acc, &rhs)
            } else {
                self.dom.div(&acc, &rhs).map_err(|e| match e {
                    Error::DivisionByZero => Error::Syntax { pos: at, msg: "division by zero".into() },
                    e => e,
                })?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<D::V> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let e: u64 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(self.dom.pow(&base, e));
                }
                _ => return self.err("expected non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<D::V> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.dom.int(&n))
            }
            Some(Tok::Ident(name)) => match self.dom.var(&name) {
                Some(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                None => self.err(&format!("unknown variable {name:?}")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn run<D: Domain>(text: &str, dom: &D) -> Result<D::V> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count(), dom };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

struct ElemDomain<'a>(&'a Field);

/// Resolves a tower variable to the corresponding element of `field`.
fn tower_var(field: &Field, name: &str) -> Option<Elem> {
    let mut level = Some(field);
    while let Some(f) = level {
        if f.var() == Some(name) {
            return field.embed_from(f, f.generator()?).ok();
        }
        level = f.base();
    }
    None
}

impl Domain for ElemDomain<'_> {
    type V = Elem;
    fn int(&self, n: &BigInt) -> Elem {
        self.0.from_bigint(n)
    }
    fn var(&self, name: &str) -> Option<Elem> {
        tower_var(self.0, name)
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.add(a, b)
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.sub(a, b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.mul(a, b)
    }
    fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.0.div(a, b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        self.0.neg(a)
    }
    fn pow(&self, a: &Elem, e: u64) -> Elem {
        self.0.pow(a, e as u128)
    }
}

struct PolyDomain<'a> {
    field: &'a Field,
    var: &'a str,
}

impl Domain for PolyDomain<'_> {
    type V = Vec<Elem>;
    fn int(&self, n: &BigInt) -> Vec<Elem> {
        poly::trim(self.field, vec![self.field.from_bigint(n)])
    }
    fn var(&self, name: &str) -> Option<Vec<Elem>> {
        if name == self.var {
            Some(vec![self.field.zero(), self.field.one()])
        } else {
            tower_var(self.field, name).map(|e| vec![e])
        }
    }
    fn add(&self, a: &Vec<Elem>, b: &Vec<Elem>) -> Vec<Elem> {
        poly::add(self.field, a, b)
    }
    fn sub(&self, a: &Vec<Elem>, b: &Vec<Elem>) -> Vec<Elem> {
        poly::sub(self.field, a, b)
    }
    fn mul(&self, a: &Vec<Elem>, b: &Vec<Elem>) -> Vec<Elem> {
        poly::mul(self.field, a, b)
    }
    fn div(&self, a: &Vec<Elem>, b: &Vec<Elem>) -> Result<Vec<Elem>> {
        match b.len() {
            0 => Err(Error::DivisionByZero),
            1 => Ok(poly::scale(self.field, a, &self.field.inv(&b[0])?)),
            _ => Err(Error::Invalid("division by a non-constant polynomial".into())),
        }
    }
    fn neg(&self, a: &Vec<Elem>) -> Vec<Elem> {
        poly::neg(self.field, a)
    }
    fn pow(&self, a: &Vec<Elem>, e: u64) -> Vec<Elem> {
        poly::pow(self.field, a, e)
    }
}

pub fn parse_element(text: &str, field: &Field) -> Result<Elem> {
    run(text, &ElemDomain(field))
}

pub fn parse_polynomial(text: &str, field: &Field, var: &str) -> Result<Polynomial> {
    let coeffs = run(text, &PolyDomain { field, var })?;
    Ok(Polynomial::new(field.clone(), coeffs))
}

fn is_atomic(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_alphanumeric())
}

fn paren(s: String) -> String {
    if is_atomic(&s) {
        s
    } else {
        format!("({s})")
    }
}

/// Returns `(negative, magnitude text)` for a coefficient.
fn signed(field: &Field, c: &Elem) -> (bool, String) {
    match c {
        Elem::Q(r) if r.is_negative() => (true, r.neg().to_string()),
        _ => (false, format_element(c, field)),
    }
}

pub fn format_poly(field: &Field, coeffs: &[Elem], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let (neg, body) = signed(field, c);
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let term = if k == 0 {
            if body.starts_with('-') {
                format!("({body})")
            } else {
                body
            }
        } else if body == "1" {
            mono
        } else {
            format!("{}*{mono}", paren(body))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_element(a: &Elem, field: &Field) -> String {
    match (field.kind(), a) {
        (FieldKind::Rationals, Elem::Q(r)) => r.to_string(),
        (FieldKind::Prime(_), Elem::P(v)) => v.to_string(),
        (FieldKind::RationalFunctions { base, var }, Elem::Frac(n, d)) => {
            let num = format_poly(base, n, var);
            if d.len() == 1 {
                num
            } else {
                format!("{}/{}", paren(num), paren(format_poly(base, d, var)))
            }
        }
        (FieldKind::Extension { base, var, .. }, Elem::Res(c)) => format_poly(base, c, var),
        _ => panic!("element does not belong to field {field}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_examples() {
        let q = Field::rationals();
        let a = q.parse("-3/4").unwrap();
        assert_eq!(q.format(&a), "-3/4");

        let f2 = Field::prime(2).unwrap();
        let f2t = Field::rational_functions(&f2, "t").unwrap();
        let r = f2t.parse("(t^2+1)/(t+1)").unwrap();
        assert_eq!(r, f2t.parse("t+1").unwrap());
        // independent check: (t+1)^2 = t^2+1 in GF(2)[t]
        let sq = poly::mul(&f2, &[Elem::P(1), Elem::P(1)], &[Elem::P(1), Elem::P(1)]);
        assert_eq!(sq, vec![Elem::P(1), Elem::P(0), Elem::P(1)]);

        let f4 = Field::extension_str(&f2, "w^2+w+1", "w").unwrap();
        let e = f4.parse("w+1").unwrap();
        assert_eq!(e, Elem::Res(vec![Elem::P(1), Elem::P(1)]));
        assert_eq!(f4.format(&e), "w+1");
    }

    #[test]
    fn errors_carry_positions() {
        let q = Field::rationals();
        assert!(matches!(q.parse("1/0"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(q.parse("2*(3"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(q.parse("x"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(q.parse("1 $ 2"), Err(Error::Syntax { pos: 2, .. })));
        assert!(q.parse("").is_err());
    }

    #[test]
    fn nested_tower_syntax() {
        let q = Field::rationals();
        let qt = Field::rational_functions(&q, "t").unwrap();
        let k = Field::extension_str(&qt, "w^2-t", "w").unwrap();
        let x = k.parse("(1-t)/(t+2)*w - 1/t").unwrap();
        let s = k.format(&x);
        assert_eq!(k.parse(&s).unwrap(), x, "{s}");
        let w = k.generator().unwrap();
        assert_eq!(k.mul(&w, &w), k.parse("t").unwrap());
    }
}
