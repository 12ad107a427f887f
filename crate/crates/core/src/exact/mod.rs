//! Exact rational linear algebra: rank, coordinates over a basis, kernels,
//! and feasibility of mixed equality / strict / weak inequality systems.
//!
//! There is no floating point anywhere in here. Rank-type questions run on
//! integer rows (denominators cleared per row) through a fraction-free
//! elimination that starts on `i128` and silently moves to big integers on
//! overflow.

mod feasibility;
mod integer;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use integer::{big_rank, to_big, to_small, Echelon, IntScalar};

pub use feasibility::{
    feasible, find_point, Constraint, LinearSystem, Relation, DEFAULT_MAX_VARIABLES,
};

/// Exact rational scalar; always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("basis rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("system has {actual} variables, above the configured bound {limit}")]
    TooManyVariables { limit: usize, actual: usize },
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(ExactError::Dimension {
                    expected: cols,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_integer_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// `M x`.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if x.len() != self.cols {
            return Err(ExactError::Dimension {
                expected: self.cols,
                actual: x.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), x)).collect())
    }

    /// `y^T M`.
    pub fn left_mul_vec(&self, y: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if y.len() != self.rows {
            return Err(ExactError::Dimension {
                expected: self.rows,
                actual: y.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (r, coef) in y.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                *slot += coef * self.get(r, c);
            }
        }
        Ok(out)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| clear_denominators(self.row(r)))
            .collect()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Scale a rational row by the lcm of its denominators.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Matrix rank, exact.
pub fn rank(m: &RationalMatrix) -> usize {
    big_rank(&m.integer_rows())
}

/// Fully reduced echelon form over the integers, tried on `i128` first.
fn reduced_echelon(rows: Vec<Vec<BigInt>>) -> Echelon<BigInt> {
    if let Some(small) = rows.iter().map(|r| to_small(r)).collect::<Option<Vec<_>>>() {
        let mut ech = Echelon::<i128>::new();
        let ok = small.into_iter().all(|r| ech.insert(r).is_some());
        if ok {
            if let Some(red) = ech.into_reduced() {
                return Echelon {
                    rows: red.rows.into_iter().map(|(p, r)| (p, to_big(&r))).collect(),
                };
            }
        }
    }
    let mut ech = Echelon::<BigInt>::new();
    for r in rows {
        ech.insert(r).expect("bigint arithmetic cannot overflow");
    }
    ech.into_reduced()
        .expect("bigint arithmetic cannot overflow")
}

/// Basis of the right null space `{x : M x = 0}`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let ech = reduced_echelon(m.integer_rows());
    let pivots: Vec<usize> = ech.rows.iter().map(|(p, _)| *p).collect();
    let mut out = Vec::new();
    for free in (0..m.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (p, row) in &ech.rows {
            if !IntScalar::is_zero(&row[free]) {
                v[*p] = -Rational::new(row[free].clone(), row[*p].clone());
            }
        }
        out.push(v);
    }
    out
}

/// Coefficients expressing `target` as a combination of the rows of
/// `basis_rows`; `Ok(None)` when `target` is outside their span.
pub fn solve_coordinates(
    basis_rows: &RationalMatrix,
    target: &[Rational],
) -> Result<Option<Vec<Rational>>, ExactError> {
    if target.len() != basis_rows.cols {
        return Err(ExactError::Dimension {
            expected: basis_rows.cols,
            actual: target.len(),
        });
    }
    let k = basis_rows.rows;
    let r = rank(basis_rows);
    if r < k {
        return Err(ExactError::RankDeficient { rank: r, rows: k });
    }
    // columns of the basis, augmented by the target entry
    let augmented: Vec<Vec<Rational>> = (0..basis_rows.cols)
        .map(|c| {
            let mut row: Vec<Rational> = (0..k).map(|i| basis_rows.get(i, c).clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();
    let ech = reduced_echelon(augmented.iter().map(|r| clear_denominators(r)).collect());
    let mut coeffs = vec![Rational::zero(); k];
    for (p, row) in &ech.rows {
        if *p == k {
            return Ok(None);
        }
        coeffs[*p] = Rational::new(row[k].clone(), row[*p].clone());
    }
    Ok(Some(coeffs))
}

/// Incrementally built row space of integer vectors.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    dim: usize,
    storage: SpanStorage,
}

#[derive(Clone, Debug)]
enum SpanStorage {
    Small(Echelon<i128>),
    Big(Echelon<BigInt>),
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis {
            dim,
            storage: SpanStorage::Small(Echelon::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        match &self.storage {
            SpanStorage::Small(e) => e.rows.len(),
            SpanStorage::Big(e) => e.rows.len(),
        }
    }

    fn promote(&mut self) {
        if let SpanStorage::Small(e) = &self.storage {
            let rows = e.rows.iter().map(|(p, r)| (*p, to_big(r))).collect();
            self.storage = SpanStorage::Big(Echelon { rows });
        }
    }

    /// Add a vector; returns `true` when it was outside the current span.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length must match the span dimension"
        );
        if let SpanStorage::Small(e) = &mut self.storage {
            if let Some(grew) = e.insert(v.iter().map(|&x| x as i128).collect()) {
                return grew;
            }
            self.promote();
        }
        match &mut self.storage {
            SpanStorage::Big(e) => e
                .insert(v.iter().map(|&x| BigInt::from(x)).collect())
                .expect("bigint arithmetic cannot overflow"),
            SpanStorage::Small(_) => unreachable!(),
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length must match the span dimension"
        );
        if let SpanStorage::Small(e) = &self.storage {
            if let Some(r) = e.reduce(v.iter().map(|&x| x as i128).collect()) {
                return r.iter().all(|x| *x == 0);
            }
        }
        let big = match &self.storage {
            SpanStorage::Small(e) => Echelon {
                rows: e.rows.iter().map(|(p, r)| (*p, to_big(r))).collect(),
            },
            SpanStorage::Big(e) => e.clone(),
        };
        big.reduce(v.iter().map(|&x| BigInt::from(x)).collect())
            .expect("bigint arithmetic cannot overflow")
            .iter()
            .all(IntScalar::is_zero)
    }
}

/// Rank of a family of integer vectors.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    integer::integer_rank(&small)
}

/// Coordinates over a fixed basis, prepared once and evaluated for many
/// targets.
///
/// For basis rows `b_1..b_k` in ℚ^m, the solver stores the reduced form of
/// `[B^T | I_m]`; pivot row `c` then reads `p_c * rho_c(t) = R_c . t` for every
/// target `t` in the span.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    k: usize,
    m: usize,
    reduced: SolverStorage,
}

#[derive(Clone, Debug)]
enum SolverStorage {
    Small(Echelon<i128>),
    Big(Echelon<BigInt>),
}

/// A linear functional `t -> (numer . t) / denom` with integer data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledFunctional {
    pub numer: Vec<BigInt>,
    pub denom: BigInt,
}

impl ScaledFunctional {
    pub fn eval(&self, t: &[i64]) -> Rational {
        let s: BigInt = self
            .numer
            .iter()
            .zip(t)
            .map(|(a, &b)| a * BigInt::from(b))
            .sum();
        Rational::new(s, self.denom.clone())
    }

    /// Whether the functional takes the integer value `value` at `t`.
    pub fn takes_value(&self, t: &[i64], value: i64) -> bool {
        let s: BigInt = self
            .numer
            .iter()
            .zip(t)
            .map(|(a, &b)| a * BigInt::from(b))
            .sum();
        s == &self.denom * BigInt::from(value)
    }
}

/// Same as [`ScaledFunctional`] but on machine integers, for hot loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallFunctional {
    pub numer: Vec<i128>,
    pub denom: i128,
}

impl SmallFunctional {
    /// `None` on overflow.
    pub fn takes_value(&self, t: &[i64], value: i64) -> Option<bool> {
        let mut s: i128 = 0;
        for (a, &b) in self.numer.iter().zip(t) {
            if b != 0 {
                s = i128::checked_add(s, i128::checked_mul(*a, b as i128)?)?;
            }
        }
        Some(s == self.denom.checked_mul(value as i128)?)
    }
}

fn build_solver<T: IntScalar>(basis: &[Vec<T>], m: usize, one: T) -> Option<Echelon<T>> {
    let k = basis.len();
    let mut ech = Echelon::new();
    for c in 0..m {
        let mut row: Vec<T> = basis.iter().map(|b| b[c].clone()).collect();
        row.extend((0..m).map(|i| if i == c { one.clone() } else { T::zero() }));
        ech.insert(row)?;
    }
    let red = ech.into_reduced()?;
    debug_assert!(red.rows.iter().filter(|(p, _)| *p < k).count() <= k);
    Some(red)
}

fn coordinates_generic<T: IntScalar>(
    ech: &Echelon<T>,
    k: usize,
    target: &[T],
) -> Option<Option<Vec<(T, T)>>> {
    let mut out: Vec<Option<(T, T)>> = vec![None; k];
    for (p, row) in &ech.rows {
        let mut acc = T::zero();
        for (coef, t) in row[k..].iter().zip(target) {
            if !coef.is_zero() && !t.is_zero() {
                acc = acc.checked_add(&coef.checked_mul(t)?)?;
            }
        }
        if *p >= k {
            if !acc.is_zero() {
                return Some(None);
            }
        } else {
            out[*p] = Some((acc, row[*p].clone()));
        }
    }
    Some(Some(
        out.into_iter()
            .map(|x| x.expect("full rank basis"))
            .collect(),
    ))
}

impl CoordinateSolver {
    /// Prepare a solver for the rows of `basis` (each of length `m`), which
    /// must be linearly independent.
    pub fn new(basis: &[Vec<i64>], m: usize) -> Result<Self, ExactError> {
        let k = basis.len();
        for b in basis {
            if b.len() != m {
                return Err(ExactError::Dimension {
                    expected: m,
                    actual: b.len(),
                });
            }
        }
        let small: Vec<Vec<i128>> = basis
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let reduced = match build_solver(&small, m, 1i128) {
            Some(e) => SolverStorage::Small(e),
            None => {
                let big: Vec<Vec<BigInt>> = small.iter().map(|r| to_big(r)).collect();
                SolverStorage::Big(
                    build_solver(&big, m, BigInt::one())
                        .expect("bigint arithmetic cannot overflow"),
                )
            }
        };
        let pivots_in_basis = match &reduced {
            SolverStorage::Small(e) => e.rows.iter().filter(|(p, _)| *p < k).count(),
            SolverStorage::Big(e) => e.rows.iter().filter(|(p, _)| *p < k).count(),
        };
        if pivots_in_basis < k {
            return Err(ExactError::RankDeficient {
                rank: pivots_in_basis,
                rows: k,
            });
        }
        Ok(CoordinateSolver { k, m, reduced })
    }

    pub fn basis_len(&self) -> usize {
        self.k
    }

    /// Coordinates of `target`, or `None` when it lies outside the span.
    pub fn coordinates(&self, target: &[i64]) -> Result<Option<Vec<Rational>>, ExactError> {
        if target.len() != self.m {
            return Err(ExactError::Dimension {
                expected: self.m,
                actual: target.len(),
            });
        }
        let pairs: Option<Vec<(BigInt, BigInt)>> = match &self.reduced {
            SolverStorage::Small(e) => {
                let t: Vec<i128> = target.iter().map(|&x| x as i128).collect();
                match coordinates_generic(e, self.k, &t) {
                    Some(res) => res.map(|v| {
                        v.into_iter()
                            .map(|(a, b)| (BigInt::from(a), BigInt::from(b)))
                            .collect()
                    }),
                    None => {
                        let big = Echelon {
                            rows: e.rows.iter().map(|(p, r)| (*p, to_big(r))).collect(),
                        };
                        let t: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
                        coordinates_generic(&big, self.k, &t)
                            .expect("bigint arithmetic cannot overflow")
                    }
                }
            }
            SolverStorage::Big(e) => {
                let t: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
                coordinates_generic(e, self.k, &t).expect("bigint arithmetic cannot overflow")
            }
        };
        Ok(pairs.map(|v| v.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
    }

    /// The functional `t -> sum_b weights[b] * rho_t(b)` on targets in the span.
    pub fn weighted_coordinate_sum(&self, weights: &[i64]) -> ScaledFunctional {
        assert_eq!(weights.len(), self.k, "one weight per basis vector");
        let rows: Vec<(usize, Vec<BigInt>)> = match &self.reduced {
            SolverStorage::Small(e) => e.rows.iter().map(|(p, r)| (*p, to_big(r))).collect(),
            SolverStorage::Big(e) => e.rows.clone(),
        };
        let mut denom = BigInt::one();
        for (p, row) in &rows {
            if *p < self.k && weights[*p] != 0 {
                denom = denom.lcm(&row[*p]);
            }
        }
        let mut numer = vec![<BigInt as Zero>::zero(); self.m];
        for (p, row) in &rows {
            if *p < self.k && weights[*p] != 0 {
                let scale = BigInt::from(weights[*p]) * (&denom / &row[*p]);
                for (slot, coef) in numer.iter_mut().zip(&row[self.k..]) {
                    *slot += &scale * coef;
                }
            }
        }
        ScaledFunctional { numer, denom }
    }

    /// Machine-integer version of [`Self::weighted_coordinate_sum`]; `None`
    /// when the data does not fit.
    pub fn weighted_coordinate_sum_small(&self, weights: &[i64]) -> Option<SmallFunctional> {
        let SolverStorage::Small(e) = &self.reduced else {
            return None;
        };
        let mut denom: i128 = 1;
        for (p, row) in &e.rows {
            if *p < self.k && weights[*p] != 0 {
                let g = denom.gcd_with(&row[*p])?;
                denom = denom.checked_mul(row[*p] / g)?;
            }
        }
        let mut numer = vec![0i128; self.m];
        for (p, row) in &e.rows {
            if *p < self.k && weights[*p] != 0 {
                let scale = (weights[*p] as i128).checked_mul(denom / row[*p])?;
                for (slot, coef) in numer.iter_mut().zip(&row[self.k..]) {
                    *slot = slot.checked_add(scale.checked_mul(*coef)?)?;
                }
            }
        }
        Some(SmallFunctional { numer, denom })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_integer_rows(
            cols,
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let rows = vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(3, 2), int(1)]];
        assert_eq!(rank(&RationalMatrix::from_rows(2, rows).unwrap()), 1);
    }

    #[test]
    fn coordinates_in_plane() {
        let b = m(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            solve_coordinates(&b, &[int(2), int(3)]).unwrap(),
            Some(vec![int(2), int(3)])
        );
        let b = m(&[&[1, 1]]);
        assert_eq!(solve_coordinates(&b, &[int(1), int(0)]).unwrap(), None);
    }

    #[test]
    fn coordinates_reject_dependent_basis() {
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            solve_coordinates(&b, &[int(1), int(1)]),
            Err(ExactError::RankDeficient { rank: 1, rows: 2 })
        ));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(kernel_basis(&RationalMatrix::identity(4)).is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = kernel_basis(&a);
        assert_eq!(ker.len(), 4 - rank(&a));
        for v in ker {
            assert!(a.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn span_basis_tracks_rank() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(&[1, 1, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 2, 1]));
        assert!(s.contains(&[2, 1, -1]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn coordinate_solver_matches_direct_solve() {
        let basis = vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 1, 1]];
        let solver = CoordinateSolver::new(&basis, 4).unwrap();
        let target = vec![2, 1, -1, 0];
        let direct = solve_coordinates(
            &RationalMatrix::from_integer_rows(4, &basis).unwrap(),
            &target.iter().map(|&x| int(x)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(solver.coordinates(&target).unwrap(), direct);
        assert_eq!(solver.coordinates(&[0, 0, 0, 1]).unwrap(), None);

        let weights = [1, 0, 2];
        let f = solver.weighted_coordinate_sum(&weights);
        let rho = direct.unwrap();
        let expected = &rho[0] + int(2) * &rho[2];
        assert_eq!(f.eval(&target), expected);
        let small = solver.weighted_coordinate_sum_small(&weights).unwrap();
        assert_eq!(small.takes_value(&target, 2).unwrap(), expected == int(2));
    }
}
