//! Exact Gauss-Jordan elimination over any field.

use num_traits::{One, Zero};

use super::{BigRat, RatFun};
use crate::error::{Error, Result};

/// The operations elimination needs from a coefficient field.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `other` is nonzero.
    fn div(&self, other: &Self) -> Self;
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self.checked_div(other).expect("pivot is nonzero")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    NoSolution,
    /// Consistent but rank-deficient. `particular` sets every free
    /// variable to zero.
    UnderDetermined { particular: Vec<F>, nullity: usize },
}

impl<F> Solution<F> {
    /// The unique solution, or the particular one when under-determined.
    pub fn any_solution(self) -> Option<Vec<F>> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::UnderDetermined { particular, .. } => Some(particular),
            Solution::NoSolution => None,
        }
    }
}

/// Solve `a x = b` exactly. `a` is a list of rows.
pub fn solve_linear_system<F: Field>(a: &[Vec<F>], b: &[F]) -> Result<Solution<F>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} rows but {} right-hand entries",
            a.len(),
            b.len()
        )));
    }
    let cols = a.first().map_or(0, Vec::len);
    if let Some(bad) = a.iter().position(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "row {bad} has {} entries, expected {cols}",
            a[bad].len()
        )));
    }
    let rows = a.len();
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = F::one().div(&m[row][col]);
        for v in m[row].iter_mut().skip(col) {
            *v = v.mul(&inv);
        }
        for r in 0..rows {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            #[allow(clippy::needless_range_loop)] // reads row `row` while writing row `r`
            for c in col..=cols {
                let delta = f.mul(&m[row][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return Ok(Solution::NoSolution);
    }
    let mut x = vec![F::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    let nullity = cols - pivots.len();
    Ok(if nullity == 0 {
        Solution::Unique(x)
    } else {
        Solution::UnderDetermined {
            particular: x,
            nullity,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRat {
        BigRat::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRat>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let a = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = vec![q(4), q(-2), q(7)];
        assert_eq!(solve_linear_system(&a, &b).unwrap(), Solution::Unique(b));
    }

    #[test]
    fn two_by_two() {
        let a = mat(&[&[1, 1], &[1, -1]]);
        let sol = solve_linear_system(&a, &[q(2), q(0)]).unwrap();
        assert_eq!(sol, Solution::Unique(vec![q(1), q(1)]));
    }

    #[test]
    fn inconsistent() {
        let a = mat(&[&[1], &[1]]);
        assert_eq!(
            solve_linear_system(&a, &[q(1), q(2)]).unwrap(),
            Solution::NoSolution
        );
    }

    #[test]
    fn under_determined_reports_nullity() {
        let a = mat(&[&[1, 1, 0], &[2, 2, 0]]);
        match solve_linear_system(&a, &[q(3), q(6)]).unwrap() {
            Solution::UnderDetermined { particular, nullity } => {
                assert_eq!(nullity, 2);
                assert_eq!(&particular[0] + &particular[1], q(3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = mat(&[&[1, 2]]);
        assert!(matches!(
            solve_linear_system(&a, &[q(1), q(2)]),
            Err(Error::DimensionMismatch(_))
        ));
        let ragged = vec![vec![q(1), q(2)], vec![q(1)]];
        assert!(solve_linear_system(&ragged, &[q(1), q(2)]).is_err());
    }

    #[test]
    fn over_ratfun_field() {
        // (1 - t) x = 1  ->  x = 1/(1-t)
        let a = vec![vec![RatFun::from_ints(&[1, -1], &[1]).unwrap()]];
        let sol = solve_linear_system(&a, &[RatFun::one()]).unwrap();
        assert_eq!(
            sol,
            Solution::Unique(vec![RatFun::from_ints(&[1], &[1, -1]).unwrap()])
        );
    }
}
