//! Type checking and evaluation of diagram expressions.
//!
//! Evaluation never forms Kronecker products of whole matrices: it computes
//! the image of each domain basis vector, caching the columns of every
//! subexpression.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::exactmath::morphism::{split_index, total_dim};
use crate::exactmath::sparse::Accumulator;
use crate::exactmath::{CycScalar, Matrix, Space, SparseVec, TypedMorphism};

use super::ast::DiagramExpr;
use super::env::Environment;
use super::DiagramError;

#[derive(Clone, Debug)]
enum TypedKind {
    Matrix(Arc<Matrix>),
    Identity,
    Compose(Box<TypedExpr>, Box<TypedExpr>),
    Tensor(Box<TypedExpr>, Box<TypedExpr>),
}

/// A type-checked expression; every node knows its wires.
#[derive(Clone, Debug)]
pub struct TypedExpr {
    id: usize,
    pub dom: Vec<Space>,
    pub cod: Vec<Space>,
    dom_dim: usize,
    cod_dim: usize,
    kind: TypedKind,
}

fn wires(s: &[Space]) -> String {
    if s.is_empty() {
        "[]".to_string()
    } else {
        format!("[{}]", s.iter().map(|x| x.name.to_string()).collect::<Vec<_>>().join(", "))
    }
}

struct Checker<'a> {
    env: &'a Environment,
    next: usize,
}

impl Checker<'_> {
    fn node(&mut self, dom: Vec<Space>, cod: Vec<Space>, kind: TypedKind) -> TypedExpr {
        let id = self.next;
        self.next += 1;
        TypedExpr {
            id,
            dom_dim: total_dim(&dom),
            cod_dim: total_dim(&cod),
            dom,
            cod,
            kind,
        }
    }

    fn check(&mut self, e: &DiagramExpr) -> Result<TypedExpr, DiagramError> {
        match e {
            DiagramExpr::Identity(x) => {
                let s = self.env.space(x)?.clone();
                Ok(self.node(vec![s.clone()], vec![s], TypedKind::Identity))
            }
            DiagramExpr::Generator { name, args } if name == "id" && args.is_empty() => {
                let d = self
                    .env
                    .default_space()
                    .ok_or_else(|| DiagramError::Unbound("id (no default space)".into()))?;
                let s = self.env.space(d)?.clone();
                Ok(self.node(vec![s.clone()], vec![s], TypedKind::Identity))
            }
            DiagramExpr::Generator { name, args } => {
                let m = self.env.generator(name, args)?;
                Ok(self.node(m.dom, m.cod, TypedKind::Matrix(m.matrix)))
            }
            DiagramExpr::Compose(u, l) => {
                let lower = self.check(l)?;
                let upper = self.check(u)?;
                if lower.cod != upper.dom {
                    return Err(DiagramError::Type {
                        node: e.to_string(),
                        expected: wires(&upper.dom),
                        actual: wires(&lower.cod),
                    });
                }
                let (dom, cod) = (lower.dom.clone(), upper.cod.clone());
                Ok(self.node(dom, cod, TypedKind::Compose(Box::new(upper), Box::new(lower))))
            }
            DiagramExpr::Tensor(a, b) => {
                let left = self.check(a)?;
                let right = self.check(b)?;
                let dom = left.dom.iter().chain(&right.dom).cloned().collect();
                let cod = left.cod.iter().chain(&right.cod).cloned().collect();
                Ok(self.node(dom, cod, TypedKind::Tensor(Box::new(left), Box::new(right))))
            }
        }
    }
}

/// Annotates every node with its domain and codomain.
pub fn typecheck_expr(e: &DiagramExpr, env: &Environment) -> Result<TypedExpr, DiagramError> {
    Checker { env, next: 0 }.check(e)
}

struct Evaluator {
    caches: HashMap<usize, HashMap<usize, Arc<SparseVec>>>,
}

impl Evaluator {
    fn column(&mut self, node: &TypedExpr, j: usize) -> Arc<SparseVec> {
        if let TypedKind::Identity = node.kind {
            return Arc::new(SparseVec::unit(j));
        }
        if let Some(c) = self.caches.get(&node.id).and_then(|m| m.get(&j)) {
            return c.clone();
        }
        let col = match &node.kind {
            TypedKind::Identity => unreachable!(),
            TypedKind::Matrix(m) => Arc::new(m.column(j).clone()),
            TypedKind::Compose(u, l) => {
                let lower = self.column(l, j);
                let mut acc = Accumulator::new();
                for (t, c) in lower.iter() {
                    let up = self.column(u, *t);
                    acc.add_scaled(&up, c);
                }
                Arc::new(acc.finish())
            }
            TypedKind::Tensor(f, g) => {
                let (i, k) = (j / g.dom_dim, j % g.dom_dim);
                let a = self.column(f, i);
                let b = self.column(g, k);
                Arc::new(a.kron(&b, g.cod_dim))
            }
        };
        self.caches.entry(node.id).or_default().insert(j, col.clone());
        col
    }
}

/// Evaluates a checked expression to an exact matrix.
pub fn eval_expr(t: &TypedExpr, _env: &Environment) -> TypedMorphism {
    let mut ev = Evaluator {
        caches: HashMap::new(),
    };
    let cols: Vec<SparseVec> = (0..t.dom_dim)
        .map(|j| (*ev.column(t, j)).clone())
        .collect();
    TypedMorphism {
        dom: t.dom.clone(),
        cod: t.cod.clone(),
        matrix: Arc::new(Matrix::from_columns(t.cod_dim, cols)),
    }
}

/// Location of the first entry where two diagrams differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Output multi-index (one index per codomain factor).
    pub row: Vec<usize>,
    /// Input multi-index (one index per domain factor).
    pub col: Vec<usize>,
    pub lhs: CycScalar,
    pub rhs: CycScalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input {:?} output {:?}: {} vs {}",
            self.col, self.row, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equality {
    pub equal: bool,
    pub witness: Option<Witness>,
}

/// Compares two diagrams as exact matrices, stopping at the first difference.
pub fn check_equal(
    lhs: &DiagramExpr,
    rhs: &DiagramExpr,
    env: &Environment,
) -> Result<Equality, DiagramError> {
    let l = typecheck_expr(lhs, env)?;
    let r = typecheck_expr(rhs, env)?;
    if l.dom != r.dom || l.cod != r.cod {
        return Err(DiagramError::ShapeMismatch {
            lhs: format!("{} -> {}", wires(&l.dom), wires(&l.cod)),
            rhs: format!("{} -> {}", wires(&r.dom), wires(&r.cod)),
        });
    }
    // node ids restart for each expression, so each side needs its own cache
    let mut ev_l = Evaluator {
        caches: HashMap::new(),
    };
    let mut ev_r = Evaluator {
        caches: HashMap::new(),
    };
    let dom_dims: Vec<usize> = l.dom.iter().map(|s| s.dim).collect();
    let cod_dims: Vec<usize> = l.cod.iter().map(|s| s.dim).collect();
    for j in 0..l.dom_dim {
        let a = ev_l.column(&l, j);
        let b = ev_r.column(&r, j);
        if a != b {
            let d = a.sub(&b);
            let i = d.entries()[0].0;
            return Ok(Equality {
                equal: false,
                witness: Some(Witness {
                    row: split_index(i, &cod_dims),
                    col: split_index(j, &dom_dims),
                    lhs: a.get(i).cloned().unwrap_or_else(|| CycScalar::zero(1)),
                    rhs: b.get(i).cloned().unwrap_or_else(|| CycScalar::zero(1)),
                }),
            });
        }
    }
    Ok(Equality {
        equal: true,
        witness: None,
    })
}
