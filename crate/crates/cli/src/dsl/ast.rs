use std::fmt;

/// A location in the source, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefKind {
    Term,
    Pair,
    Integrand,
    Series,
}

impl DefKind {
    pub fn keyword(self) -> &'static str {
        match self {
            DefKind::Term => "term",
            DefKind::Pair => "pair",
            DefKind::Integrand => "integrand",
            DefKind::Series => "series",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "term" => Some(DefKind::Term),
            "pair" => Some(DefKind::Pair),
            "integrand" => Some(DefKind::Integrand),
            "series" => Some(DefKind::Series),
            _ => None,
        }
    }
}

/// Built-in functions and their arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Poch,
    Gamma,
    Pow,
    Sign,
    Fact,
    Rf,
    Sqrt,
}

impl Func {
    pub const ALL: [Func; 7] = [Func::Poch, Func::Gamma, Func::Pow, Func::Sign, Func::Fact, Func::Rf, Func::Sqrt];

    pub fn name(self) -> &'static str {
        match self {
            Func::Poch => "poch",
            Func::Gamma => "gamma",
            Func::Pow => "pow",
            Func::Sign => "sign",
            Func::Fact => "fact",
            Func::Rf => "rf",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Poch | Func::Pow | Func::Rf => 2,
            _ => 1,
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Name(String),
    Call(Func, Vec<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub value: Expr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub kind: DefKind,
    pub name: String,
    pub bindings: Vec<Binding>,
    pub pos: Pos,
}

impl Definition {
    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|b| b.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TermFile {
    pub definitions: Vec<Definition>,
}

impl TermFile {
    /// Equality ignoring source positions.
    pub fn same_structure(&self, other: &TermFile) -> bool {
        self.definitions.len() == other.definitions.len()
            && self.definitions.iter().zip(&other.definitions).all(|(a, b)| {
                a.kind == b.kind
                    && a.name == b.name
                    && a.bindings.len() == b.bindings.len()
                    && a.bindings
                        .iter()
                        .zip(&b.bindings)
                        .all(|(x, y)| x.name == y.name && x.value == y.value)
            })
    }
}
