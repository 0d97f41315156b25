//! Finite groups by multiplication table, their group algebras and
//! function algebras.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactmath::{CycScalar, Matrix, SparseVec};
use crate::hopf::{HopfAlgebra, HopfParts};
use crate::{Error, Result};

/// `N ⋊ Q` data: the factor tables and the action `Q×N → N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectData {
    pub n_table: Vec<Vec<usize>>,
    pub q_table: Vec<Vec<usize>>,
    /// `action[q][n] = q ▷ n`.
    pub action: Vec<Vec<usize>>,
}

/// A finite group. Elements are `0..order`; `table[a][b]` is `ab`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semidirect: Option<SemidirectData>,
}

fn check_table(table: &[Vec<usize>], identity: usize, what: &str) -> Result<()> {
    let n = table.len();
    let bad = |m: String| Err(Error::BadParams(format!("{what}: {m}")));
    if n == 0 || identity >= n {
        return bad("empty table or identity out of range".into());
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return bad("table is not square or has entries out of range".into());
    }
    for a in 0..n {
        if table[identity][a] != a || table[a][identity] != a {
            return bad(format!("{identity} is not an identity for {a}"));
        }
        if !(0..n).any(|b| table[a][b] == identity) {
            return bad(format!("{a} has no inverse"));
        }
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return bad(format!("associativity fails at ({a},{b},{c})"));
                }
            }
        }
    }
    Ok(())
}

impl GroupPresentation {
    /// Validates the group axioms (and semidirect data if present).
    pub fn new(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Result<Self> {
        check_table(&table, identity, "group")?;
        if labels.len() != table.len() {
            return Err(Error::BadParams("one label per element is required".into()));
        }
        Ok(GroupPresentation {
            order: table.len(),
            table,
            identity,
            labels,
            semidirect: None,
        })
    }

    /// Re-runs every check; used after deserialization.
    pub fn validate(&self) -> Result<()> {
        if self.order != self.table.len() || self.labels.len() != self.order {
            return Err(Error::BadParams("order, table and labels disagree".into()));
        }
        check_table(&self.table, self.identity, "group")?;
        if let Some(sd) = &self.semidirect {
            let rebuilt = semidirect_table(sd)?;
            if rebuilt != self.table {
                return Err(Error::BadParams("semidirect data does not match the table".into()));
            }
        }
        Ok(())
    }

    /// `ℤ_n` with generator labelled `gen`.
    pub fn cyclic(n: usize, gen: &str) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupPresentation {
            order: n,
            table,
            identity: 0,
            labels: (0..n).map(|k| power_label(gen, k)).collect(),
            semidirect: None,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.table[a][b] == self.identity).expect("validated group")
    }

    /// `N ⋊ Q` with `(n,q)(n′,q′) = (n·(q▷n′), qq′)`; element `(n,q)` has
    /// index `n·|Q| + q`.
    pub fn semidirect(n: &GroupPresentation, q: &GroupPresentation, action: Vec<Vec<usize>>) -> Result<Self> {
        let sd = SemidirectData {
            n_table: n.table.clone(),
            q_table: q.table.clone(),
            action,
        };
        let table = semidirect_table(&sd)?;
        let mut labels = Vec::with_capacity(n.order * q.order);
        for a in &n.labels {
            for b in &q.labels {
                labels.push(match (a == "1", b == "1") {
                    (true, true) => "1".to_string(),
                    (false, true) => a.clone(),
                    (true, false) => b.clone(),
                    (false, false) => format!("{a}{b}"),
                });
            }
        }
        let mut g = GroupPresentation::new(table, n.identity * q.order + q.identity, labels)?;
        g.semidirect = Some(sd);
        Ok(g)
    }

    /// `S₃ = ℤ₃ ⋊ ℤ₂` with generators `r` (order 3) and `s` (order 2).
    pub fn s3() -> Self {
        let n = GroupPresentation::cyclic(3, "r");
        let q = GroupPresentation::cyclic(2, "s");
        let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
        GroupPresentation::semidirect(&n, &q, action).expect("S3 data is valid")
    }
}

fn power_label(gen: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => gen.to_string(),
        _ => format!("{gen}^{k}"),
    }
}

fn semidirect_table(sd: &SemidirectData) -> Result<Vec<Vec<usize>>> {
    let (nn, nq) = (sd.n_table.len(), sd.q_table.len());
    check_table(&sd.n_table, 0, "normal factor")?;
    check_table(&sd.q_table, 0, "complement")?;
    if sd.action.len() != nq || sd.action.iter().any(|r| r.len() != nn || r.iter().any(|&x| x >= nn)) {
        return Err(Error::BadParams("action has the wrong shape".into()));
    }
    for q in 0..nq {
        for a in 0..nn {
            for b in 0..nn {
                if sd.action[q][sd.n_table[a][b]] != sd.n_table[sd.action[q][a]][sd.action[q][b]] {
                    return Err(Error::BadParams(format!("{q} does not act by an automorphism")));
                }
            }
        }
        for p in 0..nq {
            for a in 0..nn {
                if sd.action[sd.q_table[q][p]][a] != sd.action[q][sd.action[p][a]] {
                    return Err(Error::BadParams("the action is not a group action".into()));
                }
            }
        }
    }
    let mut table = vec![vec![0; nn * nq]; nn * nq];
    for (n1, q1) in itertools::iproduct!(0..nn, 0..nq) {
        for (n2, q2) in itertools::iproduct!(0..nn, 0..nq) {
            let n = sd.n_table[n1][sd.action[q1][n2]];
            let q = sd.q_table[q1][q2];
            table[n1 * nq + q1][n2 * nq + q2] = n * nq + q;
        }
    }
    Ok(table)
}

fn one() -> CycScalar {
    CycScalar::one(1)
}

/// `ℂ[G]`: grouplike basis.
pub fn group_algebra(g: &GroupPresentation, name: &str) -> Result<Arc<HopfAlgebra>> {
    let n = g.order;
    let mu = Matrix::from_columns(
        n,
        (0..n * n).map(|k| SparseVec::unit(g.mul(k / n, k % n))).collect(),
    );
    let eta = Matrix::monomial(n, &[(g.identity, one())]);
    let delta = Matrix::from_columns(n * n, (0..n).map(|a| SparseVec::unit(a * n + a)).collect());
    let eps = Matrix::from_columns(1, vec![SparseVec::unit(0); n]);
    let mut parts = HopfParts::new(name, g.labels.clone(), mu, eta, delta, eps);
    parts.s = Some(Matrix::from_columns(n, (0..n).map(|a| SparseVec::unit(g.inv(a))).collect()));
    Ok(Arc::new(HopfAlgebra::new(parts)?))
}

/// `ℂ^G`: the dual basis `e_g` of orthogonal idempotents.
pub fn function_algebra(g: &GroupPresentation, name: &str) -> Result<Arc<HopfAlgebra>> {
    let n = g.order;
    let mu = Matrix::from_columns(
        n,
        (0..n * n)
            .map(|k| if k / n == k % n { SparseVec::unit(k / n) } else { SparseVec::new() })
            .collect(),
    );
    let eta = Matrix::from_columns(n, vec![SparseVec::from_entries((0..n).map(|a| (a, one())))]);
    let mut cols = vec![Vec::new(); n];
    for (a, b) in itertools::iproduct!(0..n, 0..n) {
        cols[g.mul(a, b)].push((a * n + b, one()));
    }
    let delta = Matrix::from_columns(n * n, cols.into_iter().map(SparseVec::from_entries).collect());
    let eps = Matrix::from_columns(
        1,
        (0..n)
            .map(|a| if a == g.identity { SparseVec::unit(0) } else { SparseVec::new() })
            .collect(),
    );
    let labels = g.labels.iter().map(|l| format!("e_{l}")).collect();
    let mut parts = HopfParts::new(name, labels, mu, eta, delta, eps);
    parts.s = Some(Matrix::from_columns(n, (0..n).map(|a| SparseVec::unit(g.inv(a))).collect()));
    Ok(Arc::new(HopfAlgebra::new(parts)?))
}

/// The evaluation pairing `ℂ[G] ⊗ ℂ^G → 1`, `⟨g, e_h⟩ = δ_{g,h}`.
pub fn evaluation_values(g: &GroupPresentation) -> Matrix {
    Matrix::identity(g.order)
}
