//! The expression language: parsing, typing, evaluation and the braiding of
//! the graded base category, checked against direct formulas.

use std::sync::Arc;

use hopfdual::catalog::{hat_taft, taft};
use hopfdual::diagram::{parse_expr, BaseCategory, DiagramExpr, Environment};
use hopfdual::exactmath::{CycScalar, Matrix, Space, SparseVec};
use hopfdual::yd::tensor_space;
use proptest::prelude::*;

fn graded_env(q: Vec<Vec<CycScalar>>, spaces: &[(&str, Vec<Vec<i32>>)]) -> Environment {
    let mut env = Environment::new(Arc::new(BaseCategory::graded(q)));
    for (name, g) in spaces {
        env.add_space(Space::graded(name, g.len(), Some(Arc::new(g.clone()))));
    }
    env
}

/// `c(e_i⊗f_j) = χ(|e_i|,|f_j|) f_j⊗e_i` written out entry by entry.
fn braid_oracle(q: &[Vec<CycScalar>], gx: &[Vec<i32>], gy: &[Vec<i32>]) -> Matrix {
    let (dx, dy) = (gx.len(), gy.len());
    let cols = (0..dx * dy)
        .map(|k| {
            let (i, j) = (k / dy, k % dy);
            let mut c = CycScalar::one(1);
            for (a, &ai) in gx[i].iter().enumerate() {
                for (b, &bj) in gy[j].iter().enumerate() {
                    c = &c * &q[a][b].pow(i64::from(ai) * i64::from(bj));
                }
            }
            SparseVec::from_entries([(j * dx + i, c)])
        })
        .collect();
    Matrix::from_columns(dx * dy, cols)
}

fn degrees(rank: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i32>>> {
    prop::collection::vec(prop::collection::vec(-2i32..=2, rank), dim)
}

fn bicharacter(n: u64) -> impl Strategy<Value = Vec<Vec<CycScalar>>> {
    prop::collection::vec(0i64..n as i64, 4)
        .prop_map(move |k| vec![
            vec![CycScalar::root_of_unity(n, k[0]), CycScalar::root_of_unity(n, k[1])],
            vec![CycScalar::root_of_unity(n, k[2]), CycScalar::root_of_unity(n, k[3])],
        ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn base_braiding_matches_bicharacter(q in bicharacter(6), gx in degrees(2, 3), gy in degrees(2, 2)) {
        let env = graded_env(q.clone(), &[("X", gx.clone()), ("Y", gy.clone())]);
        let c = env.eval("braid[X,Y]").unwrap();
        prop_assert_eq!(c.matrix.as_ref(), &braid_oracle(&q, &gx, &gy));
        prop_assert!(env.braiding_invertible("X", "Y").unwrap());
    }

    #[test]
    fn hexagon_identities(q in bicharacter(4), gx in degrees(2, 2), gy in degrees(2, 2), gz in degrees(2, 2)) {
        let mut env = graded_env(q, &[("X", gx), ("Y", gy), ("Z", gz)]);
        let (x, y, z) = (env.space("X").unwrap().clone(), env.space("Y").unwrap().clone(), env.space("Z").unwrap().clone());
        env.add_space(tensor_space("YZ", &y, &z));
        env.add_space(tensor_space("XY", &x, &y));
        let lhs = env.eval("braid[X,YZ]").unwrap();
        let rhs = env.eval("(id[Y] * braid[X,Z]) . (braid[X,Y] * id[Z])").unwrap();
        prop_assert_eq!(lhs.matrix.as_ref(), rhs.matrix.as_ref());
        let lhs = env.eval("braid[XY,Z]").unwrap();
        let rhs = env.eval("(braid[X,Z] * id[Y]) . (id[X] * braid[Y,Z])").unwrap();
        prop_assert_eq!(lhs.matrix.as_ref(), rhs.matrix.as_ref());
    }

    #[test]
    fn yang_baxter(q in bicharacter(3), g in degrees(2, 2)) {
        let env = graded_env(q, &[("X", g)]);
        let eq = env
            .equal(
                "(braid[X,X] * id[X]) . (id[X] * braid[X,X]) . (braid[X,X] * id[X])",
                "(id[X] * braid[X,X]) . (braid[X,X] * id[X]) . (id[X] * braid[X,X])",
            )
            .unwrap();
        prop_assert!(eq.equal);
    }
}

#[test]
fn composition_applies_right_operand_first() {
    let h = taft(2, 1).unwrap();
    let env = h.env("H");
    let lhs = env.eval("mu . (S * id)").unwrap();
    let rhs = h.mu.mul(&h.s.kron(&Matrix::identity(h.dim)));
    assert_eq!(lhs.matrix.as_ref(), &rhs);
}

#[test]
fn tensor_binds_tighter_than_composition() {
    let e = parse_expr("mu . S * id[H] . Delta").unwrap();
    let expected = DiagramExpr::compose(
        DiagramExpr::compose(
            DiagramExpr::gen("mu", &[]),
            DiagramExpr::tensor(DiagramExpr::gen("S", &[]), DiagramExpr::id("H")),
        ),
        DiagramExpr::gen("Delta", &[]),
    );
    assert_eq!(e, expected);
}

#[test]
fn antipode_axiom_evaluates_to_unit_counit() {
    let h = hat_taft(4, 2, 2).unwrap();
    let env = h.env("H");
    assert!(env.equal("mu . (S * id) . Delta", "eta . eps").unwrap().equal);
    assert!(env.equal("mu . (id * S) . Delta", "eta . eps").unwrap().equal);
}

#[test]
fn inequality_carries_a_witness() {
    let h = taft(3, 1).unwrap();
    let env = h.env("H");
    let eq = env.equal("S . S", "id[H]").unwrap();
    assert!(!eq.equal);
    assert!(eq.witness.is_some());
}

#[test]
fn type_errors_are_rejected() {
    let h = taft(2, 1).unwrap();
    let env = h.env("H");
    assert!(env.eval("mu . mu").is_err());
    assert!(env.eval("eps . mu . Delta . Delta").is_err());
    assert!(env.eval("nosuch . mu").is_err());
    assert!(env.eval("mu . (id *").is_err());
    assert!(env.equal("mu", "Delta").is_err());
}

#[test]
fn vect_braiding_is_the_flip() {
    let mut env = Environment::vect();
    env.add_space(Space::new("X", 2));
    env.add_space(Space::new("Y", 3));
    let c = env.eval("braid[X,Y]").unwrap();
    for i in 0..2 {
        for j in 0..3 {
            assert!(c.matrix.get(j * 2 + i, i * 3 + j).is_one());
        }
    }
    assert_eq!(c.matrix.nnz(), 6);
}
