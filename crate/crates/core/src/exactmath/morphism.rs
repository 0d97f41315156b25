//! Matrices with a factored tensor domain and codomain.

use std::fmt;
use std::sync::Arc;

use super::{Matrix, MathError};

/// Degree vector of each basis element of a graded space.
pub type Grading = Arc<Vec<Vec<i32>>>;

/// A named finite-dimensional space, optionally graded by a lattice `Z^r`.
#[derive(Clone)]
pub struct Space {
    pub name: Arc<str>,
    pub dim: usize,
    pub grading: Option<Grading>,
}

impl Space {
    pub fn new(name: &str, dim: usize) -> Self {
        Space {
            name: Arc::from(name),
            dim,
            grading: None,
        }
    }

    pub fn graded(name: &str, dim: usize, grading: Option<Grading>) -> Self {
        if let Some(g) = &grading {
            assert_eq!(g.len(), dim, "grading length must equal the dimension");
        }
        Space {
            name: Arc::from(name),
            dim,
            grading,
        }
    }

    pub fn renamed(&self, name: &str) -> Self {
        Space {
            name: Arc::from(name),
            ..self.clone()
        }
    }

    /// Degree of basis vector `i`; the empty vector stands for degree zero.
    pub fn degree(&self, i: usize) -> &[i32] {
        match &self.grading {
            Some(g) => &g[i],
            None => &[],
        }
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.dim == other.dim
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.dim)
    }
}

pub fn total_dim(spaces: &[Space]) -> usize {
    spaces.iter().map(|s| s.dim).product()
}

/// Splits a flat tensor index into factor indices (leftmost most significant).
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn join_index(multi: &[usize], dims: &[usize]) -> usize {
    multi.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

/// A linear map between tensor products of spaces.
#[derive(Clone, Debug)]
pub struct TypedMorphism {
    pub dom: Vec<Space>,
    pub cod: Vec<Space>,
    pub matrix: Arc<Matrix>,
}

impl TypedMorphism {
    pub fn new(dom: Vec<Space>, cod: Vec<Space>, matrix: Matrix) -> Result<Self, MathError> {
        Self::from_arc(dom, cod, Arc::new(matrix))
    }

    pub fn from_arc(dom: Vec<Space>, cod: Vec<Space>, matrix: Arc<Matrix>) -> Result<Self, MathError> {
        if matrix.cols() != total_dim(&dom) || matrix.rows() != total_dim(&cod) {
            return Err(MathError::Shape(format!(
                "matrix {}x{} does not fit {:?} -> {:?}",
                matrix.rows(),
                matrix.cols(),
                dom,
                cod
            )));
        }
        Ok(TypedMorphism { dom, cod, matrix })
    }

    pub fn identity(spaces: Vec<Space>) -> Self {
        let n = total_dim(&spaces);
        TypedMorphism {
            dom: spaces.clone(),
            cod: spaces,
            matrix: Arc::new(Matrix::identity(n)),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &TypedMorphism) -> Result<TypedMorphism, MathError> {
        if self.dom != inner.cod {
            return Err(MathError::Shape(format!(
                "cannot compose {:?} -> {:?} after {:?} -> {:?}",
                self.dom, self.cod, inner.dom, inner.cod
            )));
        }
        Ok(TypedMorphism {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            matrix: Arc::new(self.matrix.compose(&inner.matrix)?),
        })
    }
}

/// Tensor product of morphisms.
pub fn kron(f: &TypedMorphism, g: &TypedMorphism) -> TypedMorphism {
    TypedMorphism {
        dom: f.dom.iter().chain(&g.dom).cloned().collect(),
        cod: f.cod.iter().chain(&g.cod).cloned().collect(),
        matrix: Arc::new(f.matrix.kron(&g.matrix)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{CycScalar, SparseVec};

    fn flip(d: usize) -> Matrix {
        let targets: Vec<_> = (0..d * d)
            .map(|k| ((k % d) * d + k / d, CycScalar::one(1)))
            .collect();
        Matrix::monomial(d * d, &targets)
    }

    #[test]
    fn kron_examples() {
        let a = Space::new("A", 2);
        let b = Space::new("B", 3);
        let id = kron(&TypedMorphism::identity(vec![a.clone()]), &TypedMorphism::identity(vec![b]));
        assert!(id.matrix.is_identity());
        let unit = TypedMorphism::identity(vec![]);
        let f = TypedMorphism::new(vec![a.clone(), a.clone()], vec![a.clone(), a.clone()], flip(2)).unwrap();
        let fu = kron(&f, &unit);
        assert_eq!(*fu.matrix, *f.matrix);
        let g = kron(&f, &TypedMorphism::identity(vec![a]));
        let e = join_index(&[0, 1, 0], &[2, 2, 2]);
        let out = g.matrix.apply(&SparseVec::unit(e));
        assert_eq!(out, SparseVec::unit(join_index(&[1, 0, 0], &[2, 2, 2])));
        assert_eq!(split_index(5, &[2, 3]), vec![1, 2]);
    }
}
