//! Fraction-free row reduction over the integers.
//!
//! Every routine here works on integer rows and only ever replaces a row by
//! an integer combination `a * row - b * other` followed by division by the
//! row content, so row spaces over ℚ are preserved exactly. The same code runs
//! on `i128` (checked, returns `None` on overflow) and on `BigInt` (never
//! fails); callers try the former first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) trait IntScalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    /// Non-negative gcd.
    fn gcd_with(&self, other: &Self) -> Option<Self>;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl IntScalar for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    fn gcd_with(&self, other: &Self) -> Option<Self> {
        let mut a = self.checked_abs()?;
        let mut b = other.checked_abs()?;
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        Some(a)
    }
    fn div_exact(&self, other: &Self) -> Self {
        *self / *other
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl IntScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd_with(&self, other: &Self) -> Option<Self> {
        Some(Integer::gcd(self, other))
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Divide a row by the gcd of its entries.
pub(crate) fn normalize<T: IntScalar>(row: &mut [T]) -> Option<()> {
    let mut g = T::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd_with(x)?;
            if g.is_one() {
                return Some(());
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return Some(());
    }
    for x in row.iter_mut() {
        *x = x.div_exact(&g);
    }
    Some(())
}

/// `target <- a * target - b * source`, where `a = source[col]` and
/// `b = target[col]`, so that `target[col]` becomes zero.
pub(crate) fn eliminate<T: IntScalar>(target: &mut [T], source: &[T], col: usize) -> Option<()> {
    let b = target[col].clone();
    if b.is_zero() {
        return Some(());
    }
    let a = source[col].clone();
    for (t, s) in target.iter_mut().zip(source) {
        let lhs = a.checked_mul(t)?;
        let rhs = b.checked_mul(s)?;
        *t = lhs.checked_sub(&rhs)?;
    }
    normalize(target)
}

pub(crate) fn first_nonzero<T: IntScalar>(row: &[T]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Rows in echelon form: row `k` is zero in the pivot columns of rows `0..k`.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<T> {
    pub(crate) rows: Vec<(usize, Vec<T>)>,
}

impl<T: IntScalar> Echelon<T> {
    pub(crate) fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduce `row` against the stored rows; the result is zero at every pivot.
    pub(crate) fn reduce(&self, mut row: Vec<T>) -> Option<Vec<T>> {
        for (pivot, basis_row) in &self.rows {
            eliminate(&mut row, basis_row, *pivot)?;
        }
        Some(row)
    }

    /// Insert a row; `Some(true)` when the rank increased.
    pub(crate) fn insert(&mut self, row: Vec<T>) -> Option<bool> {
        let reduced = self.reduce(row)?;
        match first_nonzero(&reduced) {
            Some(p) => {
                self.rows.push((p, reduced));
                Some(true)
            }
            None => Some(false),
        }
    }

    /// Back-substitute so that every row is zero in every other row's pivot.
    pub(crate) fn into_reduced(mut self) -> Option<Self> {
        let n = self.rows.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let (pj, rj) = {
                    let (p, r) = &self.rows[j];
                    (*p, r.clone())
                };
                eliminate(&mut self.rows[i].1, &rj, pj)?;
            }
        }
        // positive pivots make downstream sign handling uniform
        for (p, row) in self.rows.iter_mut() {
            if row[*p].is_negative() {
                for x in row.iter_mut() {
                    *x = x.checked_neg()?;
                }
            }
        }
        Some(self)
    }
}

pub(crate) fn to_big(row: &[i128]) -> Vec<BigInt> {
    row.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn to_small(row: &[BigInt]) -> Option<Vec<i128>> {
    row.iter().map(|x| i128::try_from(x).ok()).collect()
}

/// Rank of integer rows, exact.
pub(crate) fn integer_rank(rows: &[Vec<i128>]) -> usize {
    let mut ech = Echelon::<i128>::new();
    let mut ok = true;
    for r in rows {
        if ech.insert(r.clone()).is_none() {
            ok = false;
            break;
        }
    }
    if ok {
        return ech.rows.len();
    }
    let mut big = Echelon::<BigInt>::new();
    for r in rows {
        big.insert(to_big(r))
            .expect("bigint arithmetic cannot overflow");
    }
    big.rows.len()
}

pub(crate) fn big_rank(rows: &[Vec<BigInt>]) -> usize {
    if let Some(small) = rows.iter().map(|r| to_small(r)).collect::<Option<Vec<_>>>() {
        return integer_rank(&small);
    }
    let mut big = Echelon::<BigInt>::new();
    for r in rows {
        big.insert(r.clone())
            .expect("bigint arithmetic cannot overflow");
    }
    big.rows.len()
}
