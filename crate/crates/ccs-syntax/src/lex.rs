//! Longest-match lexer with line/column tracking.

use crate::ast::Pos;
use crate::parse::ParseError;

/// Largest accepted numeric literal. Keeping literals below 2^32 means a
/// single `+` or `*` of two literals cannot overflow 64-bit arithmetic.
pub const MAX_LITERAL: u64 = u32::MAX as u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Nat(u64),
    Bang,
    Question,
    Dot,
    Pipe,
    Plus,
    Star,
    Backslash,
    LParen,
    RParen,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier `{name}`"),
            TokenKind::Nat(n) => format!("number `{n}`"),
            TokenKind::Bang => "`!`".into(),
            TokenKind::Question => "`?`".into(),
            TokenKind::Dot => "`.`".into(),
            TokenKind::Pipe => "`|`".into(),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Backslash => "`\\`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

pub fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut chars = src.chars().peekable();

    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else {
            tokens.push(Token {
                kind: TokenKind::Eof,
                pos,
            });
            return Ok(tokens);
        };

        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };

        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '-' {
            // Only comments start with '-'; require the second dash.
            let mut ahead = chars.clone();
            ahead.next();
            if ahead.peek() == Some(&'-') {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
                continue;
            }
            return Err(ParseError::Syntax {
                pos,
                found: "`-`".into(),
                expected: "`--` (comment) or a token".into(),
            });
        }
        if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                bump(&mut chars);
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as u64 - '0' as u64))
                    .filter(|&v| v <= MAX_LITERAL)
                    .ok_or(ParseError::NumberTooLarge {
                        pos,
                        max: MAX_LITERAL,
                    })?;
            }
            tokens.push(Token {
                kind: TokenKind::Nat(value),
                pos,
            });
            continue;
        }
        if c.is_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                name.push(bump(&mut chars));
            }
            tokens.push(Token {
                kind: TokenKind::Ident(name),
                pos,
            });
            continue;
        }
        let kind = match c {
            '!' => TokenKind::Bang,
            '?' => TokenKind::Question,
            '.' => TokenKind::Dot,
            '|' => TokenKind::Pipe,
            '+' => TokenKind::Plus,
            '*' => TokenKind::Star,
            '\\' => TokenKind::Backslash,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    found: format!("`{other}`"),
                    expected: "a token".into(),
                })
            }
        };
        bump(&mut chars);
        tokens.push(Token { kind, pos });
    }
}
