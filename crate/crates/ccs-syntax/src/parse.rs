//! Recursive-descent parser for the grammar in the crate docs. Reports the
//! first error with its line and column and what was expected there.

use std::rc::Rc;

use thiserror::Error;

use crate::ast::{Expr, ExprKind, Pos, Proc, ProcKind, Span};
use crate::lex::{lex, Token, TokenKind};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{pos}: unexpected {found}; expected {expected}")]
    Syntax {
        pos: Pos,
        found: String,
        expected: String,
    },
    #[error("{pos}: numeric literal exceeds the maximum {max}")]
    NumberTooLarge { pos: Pos, max: u64 },
}

pub fn parse(src: &str) -> Result<Proc, ParseError> {
    let tokens = lex(src)?;
    let mut parser = Parser { tokens, at: 0 };
    let proc = parser.process()?;
    parser.expect_eof()?;
    Ok(proc)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at.min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.at.min(self.tokens.len() - 1)].clone();
        if self.at < self.tokens.len() - 1 {
            self.at += 1;
        }
        tok
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        let tok = self.peek();
        Err(ParseError::Syntax {
            pos: tok.pos,
            found: tok.kind.describe(),
            expected: expected.into(),
        })
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<Token, ParseError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            self.error(expected)
        }
    }

    fn expect_eof(&mut self) -> Result<(), ParseError> {
        if self.peek().kind == TokenKind::Eof {
            Ok(())
        } else {
            self.error("end of input")
        }
    }

    fn expect_ident(&mut self, expected: &str) -> Result<(String, Pos), ParseError> {
        match &self.peek().kind {
            TokenKind::Ident(name) if name != "rep" => {
                let name = name.clone();
                let pos = self.peek().pos;
                self.bump();
                Ok((name, pos))
            }
            _ => self.error(expected),
        }
    }

    fn span_from(&self, start: Pos) -> Span {
        // End position: the start of the token after the construct; close
        // enough for diagnostics and well-nested by construction.
        Span {
            start,
            end: self.peek().pos,
        }
    }

    // process = parallel { "\" ident }
    fn process(&mut self) -> Result<Proc, ParseError> {
        let start = self.peek().pos;
        let mut proc = self.parallel()?;
        while self.peek().kind == TokenKind::Backslash {
            self.bump();
            let (chan, _) = self.expect_ident("a channel name after `\\`")?;
            proc = Proc {
                kind: ProcKind::Restrict {
                    chan,
                    body: Rc::new(proc),
                },
                span: self.span_from(start),
            };
        }
        Ok(proc)
    }

    // parallel = sum { "|" sum }, left-associative
    fn parallel(&mut self) -> Result<Proc, ParseError> {
        let start = self.peek().pos;
        let mut proc = self.sum()?;
        while self.peek().kind == TokenKind::Pipe {
            self.bump();
            let rhs = self.sum()?;
            proc = Proc {
                kind: ProcKind::Par(Rc::new(proc), Rc::new(rhs)),
                span: self.span_from(start),
            };
        }
        Ok(proc)
    }

    // sum = prefix { "+" prefix }, left-associative
    fn sum(&mut self) -> Result<Proc, ParseError> {
        let start = self.peek().pos;
        let mut proc = self.prefix()?;
        while self.peek().kind == TokenKind::Plus {
            self.bump();
            let rhs = self.prefix()?;
            proc = Proc {
                kind: ProcKind::Sum(Rc::new(proc), Rc::new(rhs)),
                span: self.span_from(start),
            };
        }
        Ok(proc)
    }

    fn prefix(&mut self) -> Result<Proc, ParseError> {
        let start = self.peek().pos;
        match self.peek().kind.clone() {
            TokenKind::Nat(0) => {
                self.bump();
                Ok(Proc {
                    kind: ProcKind::Nil,
                    span: self.span_from(start),
                })
            }
            TokenKind::Nat(_) => self.error("a process (`0` is the only numeric process)"),
            TokenKind::LParen => {
                self.bump();
                let proc = self.process()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(proc)
            }
            TokenKind::Ident(name) if name == "rep" => {
                self.bump();
                self.expect(TokenKind::LParen, "`(` after `rep`")?;
                let body = self.process()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(Proc {
                    kind: ProcKind::Rep(Rc::new(body)),
                    span: self.span_from(start),
                })
            }
            TokenKind::Ident(chan) => {
                self.bump();
                match self.peek().kind {
                    TokenKind::Bang => {
                        self.bump();
                        self.expect(TokenKind::LParen, "`(`")?;
                        let value = self.expr()?;
                        self.expect(TokenKind::RParen, "`)`")?;
                        self.expect(TokenKind::Dot, "`.` and a continuation process")?;
                        let cont = self.prefix()?;
                        Ok(Proc {
                            kind: ProcKind::Send {
                                chan,
                                value,
                                cont: Rc::new(cont),
                            },
                            span: self.span_from(start),
                        })
                    }
                    TokenKind::Question => {
                        self.bump();
                        self.expect(TokenKind::LParen, "`(`")?;
                        let (binder, _) = self.expect_ident("a binder name")?;
                        self.expect(TokenKind::RParen, "`)`")?;
                        self.expect(TokenKind::Dot, "`.` and a continuation process")?;
                        let cont = self.prefix()?;
                        Ok(Proc {
                            kind: ProcKind::Recv {
                                chan,
                                binder,
                                cont: Rc::new(cont),
                            },
                            span: self.span_from(start),
                        })
                    }
                    _ => self.error("`!` (send) or `?` (receive) after the channel name"),
                }
            }
            _ => self.error("a process"),
        }
    }

    // expr = mul { "+" mul }
    fn expr(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().pos;
        let mut expr = self.mul()?;
        while self.peek().kind == TokenKind::Plus {
            self.bump();
            let rhs = self.mul()?;
            expr = Expr {
                kind: ExprKind::Add(Rc::new(expr), Rc::new(rhs)),
                span: self.span_from(start),
            };
        }
        Ok(expr)
    }

    // mul = atom { "*" atom }
    fn mul(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().pos;
        let mut expr = self.atom()?;
        while self.peek().kind == TokenKind::Star {
            self.bump();
            let rhs = self.atom()?;
            expr = Expr {
                kind: ExprKind::Mul(Rc::new(expr), Rc::new(rhs)),
                span: self.span_from(start),
            };
        }
        Ok(expr)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().pos;
        match self.peek().kind.clone() {
            TokenKind::Nat(n) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Lit(n),
                    span: self.span_from(start),
                })
            }
            TokenKind::Ident(name) if name != "rep" => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Var(name),
                    span: self.span_from(start),
                })
            }
            TokenKind::LParen => {
                self.bump();
                let expr = self.expr()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(expr)
            }
            _ => self.error("a value expression (number, variable, or parenthesis)"),
        }
    }
}
