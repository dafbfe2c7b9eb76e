//! Relation templates over the 8-leaf neighborhood.
//!
//! Syntax: terms joined by `+`; factors joined by `*` or juxtaposition.
//!
//! | factor | meaning |
//! |---|---|
//! | `0`, `1` | constants |
//! | `x1` … `x8` | fixed leaves |
//! | `xi`, `xj`, `xk`, `xl` | leaf holes, filled per tuple |
//! | `x9` | center |
//! | `xp9`, `x'9` | next center state |
//! | `sM` | degree-`M` elementary symmetric polynomial in all leaves |
//! | `sM[i]`, `sM[ij]`, `sM[i,j]` | the same with the listed holes' leaves omitted |
//! | `( … )`, `{ … }` | grouping |
//!
//! `σ` may be written instead of `s`. Whitespace is ignored.

use std::fmt;

use super::{esym, F2Poly, F2PolyError};

pub(crate) const TEMPLATE_K: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hole {
    I,
    J,
    K,
    L,
}

impl Hole {
    fn from_char(c: char) -> Option<Hole> {
        match c {
            'i' => Some(Hole::I),
            'j' => Some(Hole::J),
            'k' => Some(Hole::K),
            'l' => Some(Hole::L),
            _ => None,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['i', 'j', 'k', 'l'][self.slot()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Const(bool),
    Leaf(u32),
    HoleVar(Hole),
    Center,
    Next,
    Sigma { degree: u32, omit: Vec<Hole> },
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
}

/// A parsed relation with leaf holes. Instantiating it with a strictly
/// increasing tuple of leaf indices (one per hole, holes in `i j k l` order)
/// gives a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTemplate {
    source: String,
    expr: Expr,
    holes: Vec<Hole>,
}

impl RelationTemplate {
    pub fn parse(text: &str) -> Result<Self, F2PolyError> {
        let mut p = Parser { chars: text.char_indices().collect(), pos: 0, len: text.len() };
        let expr = p.sum()?;
        p.skip_ws();
        if let Some(&(at, c)) = p.chars.get(p.pos) {
            return Err(F2PolyError::Parse { pos: at, msg: format!("unexpected {c:?}") });
        }
        let mut holes = Vec::new();
        collect_holes(&expr, &mut holes);
        holes.sort();
        holes.dedup();
        Ok(RelationTemplate { source: text.to_string(), expr, holes })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn holes(&self) -> &[Hole] {
        &self.holes
    }

    pub fn arity(&self) -> usize {
        self.holes.len()
    }

    /// All strictly increasing tuples in `1..=8` of length [`arity`](Self::arity).
    pub fn tuples(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        increasing(self.arity(), 1, &mut cur, &mut out);
        out
    }

    pub fn instantiate(&self, tuple: &[u32]) -> Result<F2Poly, F2PolyError> {
        if tuple.len() != self.arity() {
            return Err(F2PolyError::Unsupported(format!(
                "template has {} holes, tuple has {} entries",
                self.arity(),
                tuple.len()
            )));
        }
        if tuple.iter().any(|&t| !(1..=TEMPLATE_K).contains(&t)) || tuple.windows(2).any(|w| w[0] >= w[1]) {
            return Err(F2PolyError::Unsupported(format!("tuple {tuple:?} is not strictly increasing in 1..=8")));
        }
        let mut binding = [0u32; 4];
        for (h, &t) in self.holes.iter().zip(tuple) {
            binding[h.slot()] = t;
        }
        Ok(eval(&self.expr, &binding))
    }
}

impl fmt::Display for RelationTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn increasing(len: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for v in from..=TEMPLATE_K {
        cur.push(v);
        increasing(len, v + 1, cur, out);
        cur.pop();
    }
}

fn collect_holes(e: &Expr, out: &mut Vec<Hole>) {
    match e {
        Expr::HoleVar(h) => out.push(*h),
        Expr::Sigma { omit, .. } => out.extend(omit.iter().copied()),
        Expr::Sum(xs) | Expr::Product(xs) => xs.iter().for_each(|x| collect_holes(x, out)),
        _ => {}
    }
}

fn eval(e: &Expr, binding: &[u32; 4]) -> F2Poly {
    let k = TEMPLATE_K;
    match e {
        Expr::Const(true) => F2Poly::one(k),
        Expr::Const(false) => F2Poly::zero(k),
        Expr::Leaf(i) => F2Poly::leaf(k, *i),
        Expr::HoleVar(h) => F2Poly::leaf(k, binding[h.slot()]),
        Expr::Center => F2Poly::center(k),
        Expr::Next => F2Poly::next(k),
        Expr::Sigma { degree, omit } => {
            let skipped: Vec<u32> = omit.iter().map(|h| binding[h.slot()] - 1).collect();
            let vars: Vec<u32> = (0..k).filter(|v| !skipped.contains(v)).collect();
            esym(k, *degree, &vars)
        }
        Expr::Sum(xs) => xs.iter().fold(F2Poly::zero(k), |acc, x| acc.add(&eval(x, binding))),
        Expr::Product(xs) => xs.iter().fold(F2Poly::one(k), |acc, x| acc.mul(&eval(x, binding))),
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(at, _)| at)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, F2PolyError> {
        Err(F2PolyError::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).map(|&(_, c)| c);
        self.pos += 1;
        c
    }

    fn number(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().map(|&(_, c)| c).collect::<String>().parse().ok()
    }

    fn sum(&mut self) -> Result<Expr, F2PolyError> {
        let mut terms = vec![self.product()?];
        while self.peek() == Some('+') {
            self.bump();
            terms.push(self.product()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn product(&mut self) -> Result<Expr, F2PolyError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Some(c) if c == '(' || c == '{' || c == 'x' || c == 's' || c == 'σ' || c.is_ascii_digit() => {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, F2PolyError> {
        match self.peek() {
            None => self.err("expected a factor, found end of input"),
            Some(open @ ('(' | '{')) => {
                self.bump();
                let inner = self.sum()?;
                let close = if open == '(' { ')' } else { '}' };
                if self.peek() != Some(close) {
                    return self.err(format!("expected {close:?}"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                match self.number() {
                    Some(0) => Ok(Expr::Const(false)),
                    Some(1) => Ok(Expr::Const(true)),
                    _ => {
                        self.pos = start;
                        self.err("only the constants 0 and 1 exist over GF(2)")
                    }
                }
            }
            Some('x') => {
                let start = self.pos;
                self.bump();
                self.variable().or_else(|e| {
                    self.pos = start;
                    match e {
                        F2PolyError::Parse { msg, .. } => self.err(msg),
                        other => Err(other),
                    }
                })
            }
            Some('s' | 'σ') => {
                self.bump();
                self.sigma()
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
        }
    }

    fn variable(&mut self) -> Result<Expr, F2PolyError> {
        let primed = match self.chars.get(self.pos).map(|&(_, c)| c) {
            Some('p' | '\'') => {
                self.pos += 1;
                if self.chars.get(self.pos).is_some_and(|&(_, c)| c == '_') {
                    self.pos += 1;
                }
                true
            }
            Some('_') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        if let Some(h) = self.chars.get(self.pos).and_then(|&(_, c)| Hole::from_char(c)) {
            if primed {
                return self.err("only the center has a next-state variable");
            }
            self.pos += 1;
            return Ok(Expr::HoleVar(h));
        }
        match self.number() {
            Some(9) if primed => Ok(Expr::Next),
            Some(9) => Ok(Expr::Center),
            Some(n @ 1..=8) if !primed => Ok(Expr::Leaf(n)),
            _ => self.err("expected x1..x9, xp9 or a hole variable xi/xj/xk/xl"),
        }
    }

    fn sigma(&mut self) -> Result<Expr, F2PolyError> {
        let Some(degree) = self.number() else {
            return self.err("expected the degree of the symmetric polynomial");
        };
        let mut omit = Vec::new();
        if self.chars.get(self.pos).is_some_and(|&(_, c)| c == '[') {
            self.pos += 1;
            loop {
                self.skip_ws();
                match self.bump() {
                    Some(']') => break,
                    Some(',') => {}
                    Some(c) => match Hole::from_char(c) {
                        Some(h) if !omit.contains(&h) => omit.push(h),
                        Some(_) => {
                            self.pos -= 1;
                            return self.err(format!("hole {c} listed twice"));
                        }
                        None => {
                            self.pos -= 1;
                            return self.err(format!("expected a hole letter i/j/k/l, found {c:?}"));
                        }
                    },
                    None => return self.err("unclosed '['"),
                }
            }
        }
        Ok(Expr::Sigma { degree, omit })
    }
}
