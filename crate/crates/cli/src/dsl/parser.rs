use super::ast::{Binding, DefKind, Definition, Expr, Func, Pos, TermFile};
use super::lexer::{tokenize, Tok};
use super::ParseError;

/// Names every definition may use without binding them.
pub const VARIABLES: [&str; 5] = ["n", "k", "s", "t", "x"];
pub const CONSTANTS: [&str; 1] = ["pi"];

pub fn parse(src: &str) -> Result<TermFile, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0, scope: Vec::new() };
    let mut definitions = Vec::new();
    while p.peek() != &Tok::Eof {
        definitions.push(p.definition()?);
    }
    Ok(TermFile { definitions })
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    scope: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ParseError> {
        let (tok, pos) = self.next();
        if tok == want {
            Ok(pos)
        } else {
            Err(ParseError::syntax(
                pos,
                format!("expected {}, found {}", want.describe(), tok.describe()),
            ))
        }
    }

    fn definition(&mut self) -> Result<Definition, ParseError> {
        let (tok, pos) = self.next();
        let kind = match &tok {
            Tok::Ident(s) => DefKind::from_keyword(s),
            _ => None,
        }
        .ok_or_else(|| {
            ParseError::syntax(
                pos,
                format!("expected `term`, `pair`, `integrand` or `series`, found {}", tok.describe()),
            )
        })?;
        let name = match self.next() {
            (Tok::Str(s), _) => s,
            (t, p) => return Err(ParseError::syntax(p, format!("expected a quoted name, found {}", t.describe()))),
        };
        self.expect(Tok::LBrace)?;
        self.scope.clear();
        let mut bindings = Vec::new();
        while self.peek() != &Tok::RBrace {
            bindings.push(self.binding()?);
        }
        self.expect(Tok::RBrace)?;
        Ok(Definition { kind, name, bindings, pos })
    }

    fn binding(&mut self) -> Result<Binding, ParseError> {
        let (tok, pos) = self.next();
        let name = match tok {
            Tok::Ident(s) if Func::from_name(&s).is_none() => s,
            t => return Err(ParseError::syntax(pos, format!("expected a binding name, found {}", t.describe()))),
        };
        if ["n", "k", "s", "pi"].contains(&name.as_str()) {
            return Err(ParseError::syntax(pos, format!("`{name}` cannot be rebound")));
        }
        if self.scope.contains(&name) {
            return Err(ParseError::syntax(pos, format!("`{name}` is already bound")));
        }
        self.expect(Tok::Eq)?;
        let value = self.expr()?;
        self.expect(Tok::Semi)?;
        self.scope.push(name.clone());
        Ok(Binding { name, value, pos })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == &Tok::Minus {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Caret {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek() == &Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            (Tok::Int(e), pos) => {
                let e = i64::try_from(e).map_err(|_| ParseError::syntax(pos, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), if negative { -e } else { e }))
            }
            (t, pos) => Err(ParseError::syntax(
                pos,
                format!("expected an integer exponent, found {}", t.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.next();
        match tok {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if self.peek() == &Tok::LParen {
                    let f = Func::from_name(&name)
                        .ok_or_else(|| ParseError::syntax(pos, format!("unknown function `{name}`")))?;
                    self.next();
                    let mut args = vec![self.expr()?];
                    while self.peek() == &Tok::Comma {
                        self.next();
                        args.push(self.expr()?);
                    }
                    let close = self.pos();
                    if args.len() != f.arity() {
                        return Err(ParseError::syntax(
                            close,
                            format!("`{}` takes {} argument(s), got {}", f.name(), f.arity(), args.len()),
                        ));
                    }
                    self.expect(Tok::RParen)?;
                    return Ok(Expr::Call(f, args));
                }
                if Func::from_name(&name).is_some() {
                    return Err(ParseError::syntax(pos, format!("`{name}` must be called with arguments")));
                }
                if VARIABLES.contains(&name.as_str())
                    || CONSTANTS.contains(&name.as_str())
                    || self.scope.contains(&name)
                {
                    Ok(Expr::Name(name))
                } else {
                    Err(ParseError::UndefinedName { pos, name })
                }
            }
            t => Err(ParseError::syntax(pos, format!("expected an expression, found {}", t.describe()))),
        }
    }
}
