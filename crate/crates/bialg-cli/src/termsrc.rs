//! Concrete syntax for razor and stream terms:
//!
//! ```text
//! expr = atom { "+" atom }          -- left-associative
//! atom = nat | "amb" "(" expr "," expr ")" | "(" expr ")"
//! ```
//!
//! The stream language accepts the same grammar without `amb`. Literals are
//! capped like the process language's, so sums stay far from overflow.

use bialg::lang::razor::{self, Razor, RazorF};
use bialg::lang::stream::{self, ValAddF};
use bialg::rec::Term;
use ccs_syntax::MAX_LITERAL;

pub struct TermSyntaxError(pub String);

impl std::fmt::Display for TermSyntaxError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn parse_razor(src: &str) -> Result<Term<RazorF>, TermSyntaxError> {
    Parser::new(src, true)?.run()
}

pub fn parse_stream(src: &str) -> Result<Term<ValAddF>, TermSyntaxError> {
    let razor = Parser::new(src, false)?.run()?;
    Ok(strip_amb(&razor))
}

// The amb-free fragment embeds into the plain literal/addition signature.
fn strip_amb(t: &Term<RazorF>) -> Term<ValAddF> {
    match t.node() {
        Razor::Val(n) => stream::val(n),
        Razor::Add(l, r) => stream::add(strip_amb(&l), strip_amb(&r)),
        Razor::Amb(_, _) => unreachable!("rejected during parsing"),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Nat(u64),
    Amb,
    Plus,
    Comma,
    LParen,
    RParen,
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    at: usize,
    len: usize,
    allow_amb: bool,
}

impl Parser {
    fn new(src: &str, allow_amb: bool) -> Result<Self, TermSyntaxError> {
        let mut tokens = Vec::new();
        let mut chars = src.char_indices().peekable();
        while let Some(&(at, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c.is_ascii_digit() {
                let mut value: u64 = 0;
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    chars.next();
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64 - '0' as u64))
                        .filter(|&v| v <= MAX_LITERAL)
                        .ok_or_else(|| {
                            TermSyntaxError(format!(
                                "column {}: numeric literal exceeds the maximum {}",
                                at + 1,
                                MAX_LITERAL
                            ))
                        })?;
                }
                tokens.push((Tok::Nat(value), at));
            } else if c.is_alphabetic() {
                let mut word = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !(d.is_alphanumeric() || d == '_') {
                        break;
                    }
                    word.push(d);
                    chars.next();
                }
                if word == "amb" {
                    tokens.push((Tok::Amb, at));
                } else {
                    return Err(TermSyntaxError(format!(
                        "column {}: unknown word `{word}` (only `amb` is recognised)",
                        at + 1
                    )));
                }
            } else {
                let tok = match c {
                    '+' => Tok::Plus,
                    ',' => Tok::Comma,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => {
                        return Err(TermSyntaxError(format!(
                            "column {}: unexpected character `{other}`",
                            at + 1
                        )))
                    }
                };
                chars.next();
                tokens.push((tok, at));
            }
        }
        Ok(Parser {
            tokens,
            at: 0,
            len: src.len(),
            allow_amb,
        })
    }

    fn run(mut self) -> Result<Term<RazorF>, TermSyntaxError> {
        let t = self.expr()?;
        match self.peek() {
            None => Ok(t),
            Some((tok, at)) => Err(TermSyntaxError(format!(
                "column {}: unexpected {tok:?} after the term",
                at + 1
            ))),
        }
    }

    fn peek(&self) -> Option<(Tok, usize)> {
        self.tokens.get(self.at).cloned()
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.peek();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), TermSyntaxError> {
        match self.bump() {
            Some((tok, _)) if tok == want => Ok(()),
            Some((tok, at)) => Err(TermSyntaxError(format!(
                "column {}: expected {what}, found {tok:?}",
                at + 1
            ))),
            None => Err(TermSyntaxError(format!(
                "column {}: expected {what}, found end of input",
                self.len + 1
            ))),
        }
    }

    fn expr(&mut self) -> Result<Term<RazorF>, TermSyntaxError> {
        let mut t = self.atom()?;
        while matches!(self.peek(), Some((Tok::Plus, _))) {
            self.bump();
            let rhs = self.atom()?;
            t = razor::add(t, rhs);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term<RazorF>, TermSyntaxError> {
        match self.bump() {
            Some((Tok::Nat(n), _)) => Ok(razor::val(n)),
            Some((Tok::Amb, at)) => {
                if !self.allow_amb {
                    return Err(TermSyntaxError(format!(
                        "column {}: `amb` is not part of the stream language",
                        at + 1
                    )));
                }
                self.expect(Tok::LParen, "`(`")?;
                let l = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let r = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(razor::amb(l, r))
            }
            Some((Tok::LParen, _)) => {
                let t = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Some((tok, at)) => Err(TermSyntaxError(format!(
                "column {}: expected a term, found {tok:?}",
                at + 1
            ))),
            None => Err(TermSyntaxError(
                "empty input: expected a term".to_string(),
            )),
        }
    }
}
