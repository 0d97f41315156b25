//! Braidings of the base category: lattice-graded vector spaces with the
//! braiding `c(x⊗y) = χ(|x|,|y|) y⊗x` for a bicharacter `χ`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::exactmath::{CycScalar, Matrix, Space};

use super::DiagramError;

/// Supplies `c_{X,Y}: X⊗Y → Y⊗X` and `c⁻¹_{X,Y}: Y⊗X → X⊗Y`.
pub trait BraidingProvider: Send + Sync {
    fn braid(&self, x: &Space, y: &Space) -> Result<Matrix, DiagramError>;
    fn braid_inv(&self, x: &Space, y: &Space) -> Result<Matrix, DiagramError>;
}

/// Memoized bicharacter values keyed by the pair of degrees.
type ChiCache = Mutex<HashMap<(Vec<i32>, Vec<i32>), CycScalar>>;

/// Vector spaces graded by `Z^rank` with bicharacter
/// `χ(α,β) = ∏ q_kl^{α_k β_l}`. Rank zero is the category of plain vector
/// spaces with the flip.
pub struct BaseCategory {
    q: Vec<Vec<CycScalar>>,
    chi_cache: ChiCache,
}

impl std::fmt::Debug for BaseCategory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BaseCategory").field("q", &self.q).finish()
    }
}

impl BaseCategory {
    /// Plain vector spaces.
    pub fn vect() -> Self {
        BaseCategory::graded(Vec::new())
    }

    pub fn graded(q: Vec<Vec<CycScalar>>) -> Self {
        assert!(q.iter().all(|r| r.len() == q.len()), "bicharacter matrix must be square");
        BaseCategory {
            q,
            chi_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn q(&self) -> &[Vec<CycScalar>] {
        &self.q
    }

    /// `χ(α, β)`; missing coordinates count as zero.
    pub fn chi(&self, a: &[i32], b: &[i32]) -> CycScalar {
        if a.iter().all(|&x| x == 0) || b.iter().all(|&x| x == 0) {
            return CycScalar::one(1);
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(v) = self.chi_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = CycScalar::one(1);
        for (k, &ak) in a.iter().enumerate() {
            for (l, &bl) in b.iter().enumerate() {
                let e = ak as i64 * bl as i64;
                if e != 0 {
                    acc = &acc * &self.q[k][l].pow(e);
                }
            }
        }
        self.chi_cache.lock().unwrap().insert(key, acc.clone());
        acc
    }

    fn check_grading(&self, s: &Space) -> Result<(), DiagramError> {
        if let Some(g) = &s.grading {
            if g.iter().any(|d| d.len() > self.rank() && d[self.rank()..].iter().any(|&x| x != 0)) {
                return Err(DiagramError::Braiding(format!(
                    "space {} is graded beyond the rank-{} lattice",
                    s.name,
                    self.rank()
                )));
            }
        }
        Ok(())
    }
}

impl BraidingProvider for BaseCategory {
    fn braid(&self, x: &Space, y: &Space) -> Result<Matrix, DiagramError> {
        self.check_grading(x)?;
        self.check_grading(y)?;
        let (dx, dy) = (x.dim, y.dim);
        let mut targets = Vec::with_capacity(dx * dy);
        for i in 0..dx {
            for j in 0..dy {
                targets.push((j * dx + i, self.chi(x.degree(i), y.degree(j))));
            }
        }
        Ok(Matrix::monomial(dx * dy, &targets))
    }

    fn braid_inv(&self, x: &Space, y: &Space) -> Result<Matrix, DiagramError> {
        self.check_grading(x)?;
        self.check_grading(y)?;
        let (dx, dy) = (x.dim, y.dim);
        let mut targets = Vec::with_capacity(dx * dy);
        for j in 0..dy {
            for i in 0..dx {
                targets.push((i * dy + j, self.chi(x.degree(i), y.degree(j)).inv()));
            }
        }
        Ok(Matrix::monomial(dx * dy, &targets))
    }
}
