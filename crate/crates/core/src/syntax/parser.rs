//! Hand-written lexer and recursive-descent parser for the clause grammar:
//!
//! ```text
//! program  := { clause "." }
//! clause   := atom [ ":-" body ]
//! body     := literal { "," literal }
//! literal  := [ "not" ] atom
//! atom     := lowercase-ident [ "(" term { "," term } ")" ]
//! term     := lowercase-ident | Uppercase-ident
//! ```
//!
//! `%` starts a comment running to the end of the line.

use super::{Atom, Clause, SourceProgram, Term};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lower(String),
    Upper(String),
    LParen,
    RParen,
    Comma,
    Dot,
    If,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lower(s) | Tok::Upper(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::If => "`:-`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);

    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            '%' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            '(' | ')' | ',' | '.' => {
                bump(&mut chars);
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Dot,
                };
                out.push(Spanned {
                    tok,
                    line: l,
                    column: col,
                });
            }
            ':' => {
                bump(&mut chars);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars);
                    out.push(Spanned {
                        tok: Tok::If,
                        line: l,
                        column: col,
                    });
                } else {
                    return Err(syntax(l, col, "expected `:-`"));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                let tok = if c.is_ascii_uppercase() {
                    Tok::Upper(ident)
                } else {
                    Tok::Lower(ident)
                };
                out.push(Spanned {
                    tok,
                    line: l,
                    column: col,
                });
            }
            other => return Err(syntax(l, col, format!("unexpected character `{other}`"))),
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T> {
        let t = self.peek();
        Err(syntax(
            t.line,
            t.column,
            format!("expected {expected}, found {}", t.tok.describe()),
        ))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            self.unexpected(expected)
        }
    }

    fn program(&mut self) -> Result<Vec<Clause>> {
        let mut clauses = Vec::new();
        while self.peek().tok != Tok::Eof {
            clauses.push(self.clause()?);
        }
        Ok(clauses)
    }

    fn clause(&mut self) -> Result<Clause> {
        let head = self.atom()?;
        let mut clause = Clause::fact(head);
        if self.peek().tok == Tok::If {
            self.next();
            loop {
                let (negated, atom) = self.literal()?;
                if negated {
                    clause.neg_body.push(atom);
                } else {
                    clause.pos_body.push(atom);
                }
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Dot, "`.` ending the clause")?;
        Ok(clause)
    }

    fn literal(&mut self) -> Result<(bool, Atom)> {
        // `not` is a keyword only when an atom follows it
        let is_not = matches!(&self.peek().tok, Tok::Lower(s) if s == "not")
            && matches!(self.peek_at(1), Tok::Lower(_));
        if is_not {
            self.next();
        }
        Ok((is_not, self.atom()?))
    }

    fn atom(&mut self) -> Result<Atom> {
        let predicate = match &self.peek().tok {
            Tok::Lower(s) => s.clone(),
            Tok::Upper(_) => {
                let t = self.peek();
                return Err(syntax(
                    t.line,
                    t.column,
                    "predicate names must start with a lowercase letter",
                ));
            }
            _ => return self.unexpected("an atom"),
        };
        self.next();
        let mut args = Vec::new();
        if self.peek().tok == Tok::LParen {
            self.next();
            loop {
                let term = match self.next().tok {
                    Tok::Lower(s) => Term::Const(s),
                    Tok::Upper(s) => Term::Var(s),
                    _ => {
                        self.pos -= 1;
                        return self.unexpected("a term");
                    }
                };
                args.push(term);
                match self.peek().tok {
                    Tok::Comma => {
                        self.next();
                    }
                    Tok::RParen => {
                        self.next();
                        break;
                    }
                    _ => return self.unexpected("`,` or `)`"),
                }
            }
        }
        Ok(Atom { predicate, args })
    }
}

/// Parses program text into clauses in source order.
pub fn parse_program(text: &str) -> Result<SourceProgram> {
    let toks = lex(text)?;
    let clauses = Parser { toks, pos: 0 }.program()?;
    Ok(SourceProgram::new(clauses))
}
