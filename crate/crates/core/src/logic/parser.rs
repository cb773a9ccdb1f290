//! Recursive-descent parser for propositional formulas.
//!
//! ```text
//! iff     := implies ( "<->" implies )*        left-associative
//! implies := or ( "->" implies )?              right-associative
//! or      := and ( "|" and )*
//! and     := unary ( "&" unary )*
//! unary   := "~" unary | atom
//! atom    := IDENT | "(" iff ")"
//! ```
//!
//! `¬ ∧ ∨ → ↔` are accepted in place of `~ & | -> <->`. Positions are
//! character offsets from the start of the input.

use std::fmt;

use thiserror::Error;

use super::{Formula, Universe};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(name) => write!(f, "variable {name:?}"),
            TokenKind::Not => f.write_str("'~'"),
            TokenKind::And => f.write_str("'&'"),
            TokenKind::Or => f.write_str("'|'"),
            TokenKind::Implies => f.write_str("'->'"),
            TokenKind::Iff => f.write_str("'<->'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at position {pos}")]
    Lexical { pos: usize, ch: char },
    #[error("expected {expected} at position {pos}, found {found}")]
    Syntax {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { pos: usize, name: String },
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let rest = |s: &str| chars[i..].iter().copied().take(s.chars().count()).eq(s.chars());
        let (kind, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '¬' => (TokenKind::Not, 1),
            '&' | '∧' => (TokenKind::And, 1),
            '|' | '∨' => (TokenKind::Or, 1),
            '→' => (TokenKind::Implies, 1),
            '↔' => (TokenKind::Iff, 1),
            '(' => (TokenKind::LParen, 1),
            ')' => (TokenKind::RParen, 1),
            '-' if rest("->") => (TokenKind::Implies, 2),
            '<' if rest("<->") => (TokenKind::Iff, 3),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                (TokenKind::Ident(chars[i..i + len].iter().collect()), len)
            }
            ch => return Err(ParseError::Lexical { pos, ch }),
        };
        tokens.push(Token { kind, pos });
        i += width;
    }
    Ok(tokens)
}

/// Parses a formula over whatever variables occur in it.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    Parser::new(text, None)?.parse_all()
}

/// Parses a formula, rejecting variables outside `universe`.
pub fn parse_in(text: &str, universe: &Universe) -> Result<Formula, ParseError> {
    Parser::new(text, Some(universe))?.parse_all()
}

struct Parser<'u> {
    tokens: Vec<Token>,
    next: usize,
    end: usize,
    universe: Option<&'u Universe>,
}

impl<'u> Parser<'u> {
    fn new(text: &str, universe: Option<&'u Universe>) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            next: 0,
            end: text.chars().count(),
            universe,
        })
    }

    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.next).map(|t| &t.kind)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.next += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &'static str) -> ParseError {
        match self.tokens.get(self.next) {
            Some(t) => ParseError::Syntax {
                pos: t.pos,
                expected,
                found: t.kind.to_string(),
            },
            None => ParseError::Syntax {
                pos: self.end,
                expected,
                found: "end of input".into(),
            },
        }
    }

    fn parse_all(mut self) -> Result<Formula, ParseError> {
        let f = self.iff()?;
        if self.next < self.tokens.len() {
            return Err(self.error("end of input"));
        }
        Ok(f)
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.implies()?;
        while self.eat(&TokenKind::Iff) {
            f = Formula::iff(f, self.implies()?);
        }
        Ok(f)
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let f = self.or()?;
        if self.eat(&TokenKind::Implies) {
            return Ok(Formula::implies(f, self.implies()?));
        }
        Ok(f)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and()?;
        while self.eat(&TokenKind::Or) {
            f = Formula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.eat(&TokenKind::And) {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&TokenKind::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let Some(token) = self.tokens.get(self.next).cloned() else {
            return Err(self.error("a variable or '('"));
        };
        match token.kind {
            TokenKind::Ident(name) => {
                if let Some(u) = self.universe {
                    if u.position(&name).is_none() {
                        return Err(ParseError::UnknownVariable {
                            pos: token.pos,
                            name,
                        });
                    }
                }
                self.next += 1;
                Ok(Formula::Var(name))
            }
            TokenKind::LParen => {
                self.next += 1;
                let f = self.iff()?;
                if !self.eat(&TokenKind::RParen) {
                    return Err(self.error("')'"));
                }
                Ok(f)
            }
            _ => Err(self.error("a variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    #[test]
    fn precedence_examples() {
        assert_eq!(
            parse("~(P | Q)").unwrap(),
            Formula::not(Formula::or(v("P"), v("Q")))
        );
        assert_eq!(
            parse("P & Q | R").unwrap(),
            Formula::or(Formula::and(v("P"), v("Q")), v("R"))
        );
        assert_eq!(
            parse("P -> Q -> R").unwrap(),
            Formula::implies(v("P"), Formula::implies(v("Q"), v("R")))
        );
    }

    #[test]
    fn left_associative_connectives() {
        assert_eq!(
            parse("P <-> Q <-> R").unwrap(),
            Formula::iff(Formula::iff(v("P"), v("Q")), v("R"))
        );
        assert_eq!(
            parse("P | Q | R").unwrap(),
            Formula::or(Formula::or(v("P"), v("Q")), v("R"))
        );
        assert_eq!(
            parse("P -> Q <-> R | S").unwrap(),
            Formula::iff(
                Formula::implies(v("P"), v("Q")),
                Formula::or(v("R"), v("S"))
            )
        );
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("¬P ∧ Q → R ↔ S ∨ T").unwrap(), parse("~P & Q -> R <-> S | T").unwrap());
    }

    #[test]
    fn lexical_error_reports_position() {
        assert_eq!(
            parse("P & $Q").unwrap_err(),
            ParseError::Lexical { pos: 4, ch: '$' }
        );
        assert_eq!(
            parse("P - Q").unwrap_err(),
            ParseError::Lexical { pos: 2, ch: '-' }
        );
    }

    #[test]
    fn syntax_errors_report_position() {
        assert!(matches!(
            parse("P & ").unwrap_err(),
            ParseError::Syntax { pos: 4, .. }
        ));
        assert!(matches!(
            parse("(P | Q").unwrap_err(),
            ParseError::Syntax { pos: 6, expected: "')'", .. }
        ));
        assert!(matches!(
            parse("P Q").unwrap_err(),
            ParseError::Syntax { pos: 2, .. }
        ));
        assert!(parse("").is_err());
    }

    #[test]
    fn declared_universe_rejects_strangers() {
        let u = Universe::new(["P", "Q"]).unwrap();
        assert!(parse_in("P & Q", &u).is_ok());
        assert_eq!(
            parse_in("P & R", &u).unwrap_err(),
            ParseError::UnknownVariable {
                pos: 4,
                name: "R".into()
            }
        );
    }

    #[test]
    fn identifiers_may_be_long() {
        assert_eq!(parse("rain_2 -> wet").unwrap(), Formula::implies(v("rain_2"), v("wet")));
    }
}
