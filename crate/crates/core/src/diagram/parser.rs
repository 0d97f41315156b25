//! Recursive-descent parser for the diagram grammar
//!
//! ```text
//! expr   := tensor { "." tensor }
//! tensor := atom { "*" atom }
//! atom   := NAME [ "[" NAME { "," NAME } "]" ] | "(" expr ")"
//! ```
//!
//! Both operators associate to the left; `#` starts a comment running to
//! the end of the line.

use super::ast::DiagramExpr;
use super::DiagramError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Dot,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

impl Lexer {
    fn new(src: &str) -> Result<Self, DiagramError> {
        let mut toks = Vec::new();
        let (mut line, mut col) = (1, 1);
        let mut chars = src.chars().peekable();
        while let Some(&ch) = chars.peek() {
            let (l0, c0) = (line, col);
            let single = match ch {
                '.' => Some(Tok::Dot),
                '*' => Some(Tok::Star),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                ',' => Some(Tok::Comma),
                _ => None,
            };
            if let Some(t) = single {
                chars.next();
                col += 1;
                toks.push((t, l0, c0));
            } else if ch == '\n' {
                chars.next();
                line += 1;
                col = 1;
            } else if ch.is_whitespace() {
                chars.next();
                col += 1;
            } else if ch == '#' {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            } else if ch.is_ascii_alphabetic() || ch == '_' {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Name(name), l0, c0));
            } else {
                return Err(DiagramError::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        }
        toks.push((Tok::End, line, col));
        Ok(Lexer { toks })
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn error(&self, msg: &str) -> DiagramError {
        let (t, line, col) = &self.toks[self.pos];
        let found = match t {
            Tok::Name(n) => format!("`{n}`"),
            Tok::End => "end of input".to_string(),
            other => format!("{other:?}"),
        };
        DiagramError::Syntax {
            line: *line,
            col: *col,
            msg: format!("{msg}, found {found}"),
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), DiagramError> {
        if *self.peek() == t {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {what}")))
        }
    }

    fn name(&mut self) -> Result<String, DiagramError> {
        if let Tok::Name(n) = self.peek().clone() {
            self.pos += 1;
            Ok(n)
        } else {
            Err(self.error("expected a name"))
        }
    }

    fn expr(&mut self) -> Result<DiagramExpr, DiagramError> {
        let mut e = self.tensor()?;
        while *self.peek() == Tok::Dot {
            self.pos += 1;
            let rhs = self.tensor()?;
            e = DiagramExpr::compose(e, rhs);
        }
        Ok(e)
    }

    fn tensor(&mut self) -> Result<DiagramExpr, DiagramError> {
        let mut e = self.atom()?;
        while *self.peek() == Tok::Star {
            self.pos += 1;
            let rhs = self.atom()?;
            e = DiagramExpr::tensor(e, rhs);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<DiagramExpr, DiagramError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Name(_) => {
                let name = self.name()?;
                let mut args = Vec::new();
                if *self.peek() == Tok::LBracket {
                    self.pos += 1;
                    args.push(self.name()?);
                    while *self.peek() == Tok::Comma {
                        self.pos += 1;
                        args.push(self.name()?);
                    }
                    self.expect(Tok::RBracket, "`]` or `,`")?;
                }
                if name == "id" && !args.is_empty() {
                    let mut it = args.into_iter();
                    let mut e = DiagramExpr::Identity(it.next().unwrap());
                    for a in it {
                        e = DiagramExpr::tensor(e, DiagramExpr::Identity(a));
                    }
                    return Ok(e);
                }
                Ok(DiagramExpr::Generator { name, args })
            }
            _ => Err(self.error("expected a generator or `(`")),
        }
    }
}

/// Parses a diagram expression.
pub fn parse_expr(src: &str) -> Result<DiagramExpr, DiagramError> {
    let toks = Lexer::new(src)?.toks;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("expected `.`, `*` or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use DiagramExpr as E;

    #[test]
    fn antipode_expression() {
        let e = parse_expr("mu . (S * id[A]) . Delta").unwrap();
        let expected = E::compose(
            E::compose(E::gen("mu", &[]), E::tensor(E::gen("S", &[]), E::id("A"))),
            E::gen("Delta", &[]),
        );
        assert_eq!(e, expected);
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn generator_arguments_and_comments() {
        let e = parse_expr("braid[X,Y] # swap\n").unwrap();
        assert_eq!(e, E::gen("braid", &["X", "Y"]));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_expr("mu . . Delta") {
            Err(DiagramError::Syntax { line, col, .. }) => assert_eq!((line, col), (1, 6)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_expr("mu[").is_err());
        assert!(parse_expr("(mu").is_err());
        assert!(parse_expr("mu $").is_err());
        match parse_expr("mu .\n  )") {
            Err(DiagramError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
