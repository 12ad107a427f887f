//! Exact feasibility of linear systems mixing equalities, strict and weak
//! inequalities.
//!
//! Equalities are eliminated first by exact Gauss-Jordan substitution; the
//! remaining inequalities go through Fourier-Motzkin elimination in ascending
//! variable order, with strictness propagated (a combination is strict when
//! either parent is). A satisfying point is recovered by back-substitution, so
//! every positive answer comes with a certificate.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

pub const DEFAULT_MAX_VARIABLES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `row . x = rhs`
    Eq,
    /// `row . x > rhs`
    Gt,
    /// `row . x >= rhs`
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs = super::dot(&self.coeffs, x);
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Gt => lhs > self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// A conjunction of linear constraints over `dim` rational variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem {
            dim,
            constraints: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(
        &mut self,
        coeffs: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<(), ExactError> {
        if coeffs.len() != self.dim {
            return Err(ExactError::Dimension {
                expected: self.dim,
                actual: coeffs.len(),
            });
        }
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn equal(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<(), ExactError> {
        self.push(coeffs, Relation::Eq, rhs)
    }

    pub fn greater(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<(), ExactError> {
        self.push(coeffs, Relation::Gt, rhs)
    }

    pub fn greater_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<(), ExactError> {
        self.push(coeffs, Relation::Ge, rhs)
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.holds_at(x))
    }
}

/// `coeffs . y + constant > 0` (strict) or `>= 0`.
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Rational>,
    constant: Rational,
    strict: bool,
}

enum Normalized {
    Trivial,
    Contradiction,
    Kept(Ineq),
}

impl Ineq {
    /// Scale so the first non-zero coefficient has magnitude one.
    fn normalize(mut self) -> Normalized {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => {
                let ok = if self.strict {
                    self.constant.is_positive()
                } else {
                    !self.constant.is_negative()
                };
                if ok {
                    Normalized::Trivial
                } else {
                    Normalized::Contradiction
                }
            }
            Some(lead) => {
                let scale = lead.abs();
                if !scale.is_one() {
                    for c in self.coeffs.iter_mut() {
                        *c /= &scale;
                    }
                    self.constant /= &scale;
                }
                Normalized::Kept(self)
            }
        }
    }
}

/// Keep, per coefficient direction, only the tightest inequality.
#[derive(Default)]
struct IneqSet {
    by_direction: HashMap<Vec<Rational>, (Rational, bool)>,
}

impl IneqSet {
    /// Returns `false` when a contradiction was found.
    fn add(&mut self, ineq: Ineq) -> bool {
        match ineq.normalize() {
            Normalized::Trivial => true,
            Normalized::Contradiction => false,
            Normalized::Kept(ineq) => {
                use std::collections::hash_map::Entry;
                match self.by_direction.entry(ineq.coeffs) {
                    Entry::Vacant(v) => {
                        v.insert((ineq.constant, ineq.strict));
                    }
                    Entry::Occupied(mut o) => {
                        // smaller constant is the tighter bound; strict wins ties
                        let (c0, s0) = o.get_mut();
                        if ineq.constant < *c0 {
                            *c0 = ineq.constant;
                            *s0 = ineq.strict;
                        } else if ineq.constant == *c0 {
                            *s0 |= ineq.strict;
                        }
                    }
                }
                true
            }
        }
    }

    fn into_vec(self) -> Vec<Ineq> {
        let mut v: Vec<Ineq> = self
            .by_direction
            .into_iter()
            .map(|(coeffs, (constant, strict))| Ineq {
                coeffs,
                constant,
                strict,
            })
            .collect();
        // deterministic processing order
        v.sort_by(|a, b| {
            a.coeffs
                .cmp(&b.coeffs)
                .then_with(|| a.constant.cmp(&b.constant))
                .then_with(|| a.strict.cmp(&b.strict))
        });
        v
    }
}

/// Equalities solved for pivot variables: `x[pivot] = constant - sum coeffs[j] * x[j]`
/// over free variables `j`.
struct EqualityElimination {
    /// (pivot variable, coefficients over all variables with pivot entry 1, rhs)
    pivots: Vec<(usize, Vec<Rational>, Rational)>,
}

fn eliminate_equalities(dim: usize, eqs: &[&Constraint]) -> Option<EqualityElimination> {
    let mut rows: Vec<(Vec<Rational>, Rational)> = eqs
        .iter()
        .map(|c| (c.coeffs.clone(), c.rhs.clone()))
        .collect();
    let mut pivots: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    let mut next = 0;
    for col in 0..dim {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let lead = rows[next].0[col].clone();
        for v in rows[next].0.iter_mut() {
            *v /= &lead;
        }
        rows[next].1 /= &lead;
        let (pc, pr) = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && !row.0[col].is_zero() {
                let f = row.0[col].clone();
                for (v, p) in row.0.iter_mut().zip(&pc) {
                    *v -= &f * p;
                }
                row.1 -= &f * &pr;
            }
        }
        next += 1;
    }
    for row in &rows[next..] {
        if !row.1.is_zero() {
            return None;
        }
    }
    for row in rows.into_iter().take(next) {
        let col = row.0.iter().position(|v| !v.is_zero()).expect("pivot row");
        pivots.push((col, row.0, row.1));
    }
    Some(EqualityElimination { pivots })
}

/// Decide whether some rational point satisfies every constraint.
pub fn feasible(system: &LinearSystem, max_variables: usize) -> Result<bool, ExactError> {
    Ok(find_point(system, max_variables)?.is_some())
}

/// A satisfying rational point, or `None` when the system is infeasible.
pub fn find_point(
    system: &LinearSystem,
    max_variables: usize,
) -> Result<Option<Vec<Rational>>, ExactError> {
    let dim = system.dim;
    if dim > max_variables {
        return Err(ExactError::TooManyVariables {
            limit: max_variables,
            actual: dim,
        });
    }
    let eqs: Vec<&Constraint> = system
        .constraints
        .iter()
        .filter(|c| c.relation == Relation::Eq)
        .collect();
    let Some(elim) = eliminate_equalities(dim, &eqs) else {
        return Ok(None);
    };
    let pivot_vars: Vec<usize> = elim.pivots.iter().map(|p| p.0).collect();
    let free: Vec<usize> = (0..dim).filter(|v| !pivot_vars.contains(v)).collect();
    let slot: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // substitute x[pivot] = rhs - sum_{free j} a_j x_j into each inequality
    let mut set = IneqSet::default();
    for c in system
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
    {
        let mut coeffs = vec![Rational::zero(); free.len()];
        let mut constant = -c.rhs.clone();
        for (var, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if let Some(&s) = slot.get(&var) {
                coeffs[s] += a;
            } else {
                let (_, prow, prhs) = elim.pivots.iter().find(|p| p.0 == var).expect("pivot");
                constant += a * prhs;
                for (j, pa) in prow.iter().enumerate() {
                    if j != var && !pa.is_zero() {
                        coeffs[slot[&j]] -= a * pa;
                    }
                }
            }
        }
        if !set.add(Ineq {
            coeffs,
            constant,
            strict: c.relation == Relation::Gt,
        }) {
            return Ok(None);
        }
    }

    // Fourier-Motzkin over the free variables, remembering each stage
    let mut stages: Vec<Vec<Ineq>> = Vec::with_capacity(free.len());
    let mut current = set.into_vec();
    for j in 0..free.len() {
        let mut next = IneqSet::default();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for ineq in &current {
            let a = &ineq.coeffs[j];
            if a.is_zero() {
                if !next.add(ineq.clone()) {
                    return Ok(None);
                }
            } else if a.is_positive() {
                lower.push(ineq);
            } else {
                upper.push(ineq);
            }
        }
        for lo in &lower {
            for up in &upper {
                let wl = -up.coeffs[j].clone();
                let wu = lo.coeffs[j].clone();
                let coeffs: Vec<Rational> = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(l, u)| &wl * l + &wu * u)
                    .collect();
                let combined = Ineq {
                    coeffs,
                    constant: &wl * &lo.constant + &wu * &up.constant,
                    strict: lo.strict || up.strict,
                };
                if !next.add(combined) {
                    return Ok(None);
                }
            }
        }
        stages.push(current);
        current = next.into_vec();
    }
    debug_assert!(current.is_empty());

    // back-substitution, last eliminated variable first
    let mut y = vec![Rational::zero(); free.len()];
    for j in (0..free.len()).rev() {
        let mut lo: Option<(Rational, bool)> = None;
        let mut hi: Option<(Rational, bool)> = None;
        for ineq in &stages[j] {
            let a = &ineq.coeffs[j];
            if a.is_zero() {
                continue;
            }
            let rest: Rational = ineq
                .coeffs
                .iter()
                .enumerate()
                .skip(j + 1)
                .fold(ineq.constant.clone(), |acc, (k, c)| acc + c * &y[k]);
            let bound = -rest / a;
            if a.is_positive() {
                let tighter = match &lo {
                    None => true,
                    Some((b, s)) => bound > *b || (bound == *b && ineq.strict && !s),
                };
                if tighter {
                    lo = Some((bound, ineq.strict));
                }
            } else {
                let tighter = match &hi {
                    None => true,
                    Some((b, s)) => bound < *b || (bound == *b && ineq.strict && !s),
                };
                if tighter {
                    hi = Some((bound, ineq.strict));
                }
            }
        }
        y[j] = match (lo, hi) {
            (Some((l, _)), Some((h, _))) if l < h => (l + h) / Rational::from_integer(2.into()),
            (Some((l, _)), Some(_)) => l,
            (Some((l, _)), None) => l + Rational::one(),
            (None, Some((h, _))) => h - Rational::one(),
            (None, None) => Rational::zero(),
        };
    }

    let mut x = vec![Rational::zero(); dim];
    for (i, &v) in free.iter().enumerate() {
        x[v] = y[i].clone();
    }
    for (p, prow, prhs) in &elim.pivots {
        let mut value = prhs.clone();
        for (j, a) in prow.iter().enumerate() {
            if j != *p && !a.is_zero() {
                value -= a * &x[j];
            }
        }
        x[*p] = value;
    }
    debug_assert!(
        system.is_satisfied_by(&x),
        "back-substituted point must satisfy the system"
    );
    Ok(Some(x))
}
