//! Syntax tree of diagram expressions.

use std::fmt;

/// A string diagram. `Compose(upper, lower)` applies `lower` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramExpr {
    Generator { name: String, args: Vec<String> },
    Identity(String),
    Compose(Box<DiagramExpr>, Box<DiagramExpr>),
    Tensor(Box<DiagramExpr>, Box<DiagramExpr>),
}

impl DiagramExpr {
    pub fn gen(name: &str, args: &[&str]) -> Self {
        DiagramExpr::Generator {
            name: name.to_string(),
            args: args.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn id(space: &str) -> Self {
        DiagramExpr::Identity(space.to_string())
    }

    pub fn compose(upper: DiagramExpr, lower: DiagramExpr) -> Self {
        DiagramExpr::Compose(Box::new(upper), Box::new(lower))
    }

    pub fn tensor(left: DiagramExpr, right: DiagramExpr) -> Self {
        DiagramExpr::Tensor(Box::new(left), Box::new(right))
    }

    fn is_compose(&self) -> bool {
        matches!(self, DiagramExpr::Compose(..))
    }

    fn is_tensor(&self) -> bool {
        matches!(self, DiagramExpr::Tensor(..))
    }
}

impl fmt::Display for DiagramExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramExpr::Generator { name, args } => {
                if args.is_empty() {
                    write!(f, "{name}")
                } else {
                    write!(f, "{name}[{}]", args.join(","))
                }
            }
            DiagramExpr::Identity(x) => write!(f, "id[{x}]"),
            DiagramExpr::Compose(u, l) => {
                write!(f, "{u} . ")?;
                if l.is_compose() {
                    write!(f, "({l})")
                } else {
                    write!(f, "{l}")
                }
            }
            DiagramExpr::Tensor(a, b) => {
                if a.is_compose() {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                write!(f, " * ")?;
                if b.is_compose() || b.is_tensor() {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}
