mod common;

use common::bareiss_rank;
use lasso_matroid::exact::{
    feasible, find_point, int, integer_rank, kernel_basis, rank, CoordinateSolver, LinearSystem,
    Rational, RationalMatrix, Relation, SpanBasis,
};
use num_traits::Zero;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn ranks_agree(rows in small_matrix()) {
        let expected = bareiss_rank(to_i128(&rows));
        prop_assert_eq!(integer_rank(&rows), expected);
        let m = RationalMatrix::from_integer_rows(rows[0].len(), &rows).unwrap();
        prop_assert_eq!(rank(&m), expected);
        let mut span = SpanBasis::new(rows[0].len());
        for r in &rows {
            let was_in = span.contains(r);
            prop_assert_eq!(span.insert(r), !was_in);
        }
        prop_assert_eq!(span.rank(), expected);
    }

    #[test]
    fn kernel_is_exact(rows in small_matrix()) {
        let cols = rows[0].len();
        let m = RationalMatrix::from_integer_rows(cols, &rows).unwrap();
        let kernel = kernel_basis(&m);
        prop_assert_eq!(kernel.len() + rank(&m), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn coordinates_reconstruct(rows in small_matrix(), mix in prop::collection::vec(-4i64..=4, 6)) {
        let cols = rows[0].len();
        let mut basis: Vec<Vec<i64>> = Vec::new();
        let mut span = SpanBasis::new(cols);
        for r in &rows {
            if span.insert(r) {
                basis.push(r.clone());
            }
        }
        prop_assume!(!basis.is_empty());
        let target: Vec<i64> = (0..cols)
            .map(|c| basis.iter().zip(&mix).map(|(b, m)| b[c] * m).sum())
            .collect();
        let solver = CoordinateSolver::new(&basis, cols).unwrap();
        let coords = solver.coordinates(&target).unwrap().unwrap();
        for (k, x) in coords.iter().enumerate() {
            prop_assert_eq!(x, &int(mix[k]));
        }
    }

    #[test]
    fn planted_points_are_found(
        point in prop::collection::vec(-5i64..=5, 1..6),
        rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 6), 0u8..3, 0i64..3), 0..8),
    ) {
        let dim = point.len();
        let p: Vec<Rational> = point.iter().map(|&x| int(x)).collect();
        let mut sys = LinearSystem::new(dim);
        for (coeffs, kind, slack) in rows {
            let c: Vec<Rational> = coeffs[..dim].iter().map(|&x| int(x)).collect();
            let value: Rational = c.iter().zip(&p).map(|(a, b)| a * b).sum();
            match kind {
                0 => sys.push(c, Relation::Eq, value).unwrap(),
                1 => sys.push(c, Relation::Ge, value - int(slack)).unwrap(),
                _ => sys.push(c, Relation::Gt, value - int(slack + 1)).unwrap(),
            }
        }
        prop_assert!(feasible(&sys, 24).unwrap());
        let found = find_point(&sys, 24).unwrap().unwrap();
        prop_assert!(sys.is_satisfied_by(&found));
    }

    #[test]
    fn planted_contradictions_are_infeasible(
        dim in 1usize..6,
        coeffs in prop::collection::vec(-3i64..=3, 6),
        extra in prop::collection::vec((prop::collection::vec(-3i64..=3, 6), -3i64..=3), 0..6),
        strict in any::<bool>(),
    ) {
        let c: Vec<Rational> = coeffs[..dim].iter().map(|&x| int(x)).collect();
        prop_assume!(c.iter().any(|x| !x.is_zero()));
        let neg: Vec<Rational> = c.iter().map(|x| -x).collect();
        let mut sys = LinearSystem::new(dim);
        // c.x >= 1 and -c.x >= 0 (or c.x > 0 and -c.x >= 0) cannot both hold
        if strict {
            sys.push(c, Relation::Gt, int(0)).unwrap();
        } else {
            sys.push(c, Relation::Ge, int(1)).unwrap();
        }
        sys.push(neg, Relation::Ge, int(0)).unwrap();
        for (e, rhs) in extra {
            sys.push(e[..dim].iter().map(|&x| int(x)).collect(), Relation::Ge, int(rhs)).unwrap();
        }
        prop_assert!(!feasible(&sys, 24).unwrap());
        prop_assert!(find_point(&sys, 24).unwrap().is_none());
    }
}

#[test]
fn strictness_matters() {
    // x > 0, y > 0, x + y = 0 has no solution; with >= it has x = y = 0
    let mut strict = LinearSystem::new(2);
    strict
        .push(vec![int(1), int(0)], Relation::Gt, int(0))
        .unwrap();
    strict
        .push(vec![int(0), int(1)], Relation::Gt, int(0))
        .unwrap();
    strict
        .push(vec![int(1), int(1)], Relation::Eq, int(0))
        .unwrap();
    assert!(!feasible(&strict, 24).unwrap());
    let mut weak = LinearSystem::new(2);
    weak.push(vec![int(1), int(0)], Relation::Ge, int(0))
        .unwrap();
    weak.push(vec![int(0), int(1)], Relation::Ge, int(0))
        .unwrap();
    weak.push(vec![int(1), int(1)], Relation::Eq, int(0))
        .unwrap();
    assert_eq!(find_point(&weak, 24).unwrap(), Some(vec![int(0), int(0)]));
}

#[test]
fn variable_bound() {
    let sys = LinearSystem::new(30);
    assert!(feasible(&sys, 24).is_err());
    assert!(LinearSystem::new(2)
        .push(vec![int(1)], Relation::Eq, int(0))
        .is_err());
}
