//! Gaussian elimination over an exact field.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact_arith::{Rational, UniPoly, UniRatFunc};

pub(crate) trait Field: Clone {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Basis of the right nullspace of `m` (rows × cols), one vector per free column.
pub(crate) fn nullspace<T: Field>(mut m: Vec<Vec<T>>, cols: usize, proto: &T) -> Vec<Vec<T>> {
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = proto.one_like().div(&m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![proto.zero_like(); cols];
        v[free] = proto.one_like();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = m[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m·x = rhs`, if any.
pub(crate) fn solve<T: Field>(m: Vec<Vec<T>>, rhs: Vec<T>, cols: usize, proto: &T) -> Option<Vec<T>> {
    let aug: Vec<Vec<T>> = m
        .into_iter()
        .zip(rhs)
        .map(|(mut row, b)| {
            row.push(b.neg());
            row
        })
        .collect();
    let ns = nullspace(aug, cols + 1, proto);
    let v = ns.into_iter().find(|v| !v[cols].is_zero())?;
    let s = proto.one_like().div(&v[cols]);
    Some(v[..cols].iter().map(|x| x.mul(&s)).collect())
}


/// Fraction-free (Bareiss) row echelon form over Q[x]. Returns the pivot
/// columns; rows below the rank are zero.
pub(crate) fn bareiss(m: &mut [Vec<UniPoly>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let var = m.first().map_or(crate::exact_arith::Var::N, |r| r[0].var());
    let mut prev = UniPoly::one(var);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][c] = UniPoly::zero(var);
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Nullspace basis over Q(x) from a Bareiss echelon form, by back substitution.
pub(crate) fn echelon_nullspace(m: &[Vec<UniPoly>], pivots: &[usize], cols: usize) -> Vec<Vec<UniRatFunc>> {
    let var = m[0][0].var();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![UniRatFunc::zero(var); cols];
        v[free] = UniRatFunc::one(var);
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut s = UniRatFunc::zero(var);
            for j in pc + 1..cols {
                if !v[j].is_zero() && !m[row][j].is_zero() {
                    s = s.add(&v[j].mul(&UniRatFunc::from_poly(m[row][j].clone())));
                }
            }
            v[pc] = s
                .neg()
                .div(&UniRatFunc::from_poly(m[row][pc].clone()))
                .expect("pivot is nonzero");
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;

    #[test]
    fn rational_nullspace() {
        // x + y - z = 0, 2x + 2y - 2z = 0 → two-dimensional nullspace
        let m = vec![
            vec![int(1), int(1), int(-1)],
            vec![int(2), int(2), int(-2)],
        ];
        let ns = nullspace(m.clone(), 3, &int(0));
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(Zero::is_zero(&s));
            }
        }
    }

    #[test]
    fn rational_solve() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(-1)]];
        let x = solve(m, vec![int(5), int(1)], 2, &int(0)).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        let m = vec![vec![int(1), int(1)], vec![int(1), int(1)]];
        assert!(solve(m, vec![int(1), int(2)], 2, &int(0)).is_none());
    }

    #[test]
    fn bareiss_nullspace_over_polynomials() {
        use crate::exact_arith::Var;
        let p = |cs: &[i64]| UniPoly::from_ints(Var::N, cs);
        // rows (n, 1, -n-1) and (n^2, n, -n^2-n): rank 1
        let orig = vec![
            vec![p(&[0, 1]), p(&[1]), p(&[-1, -1])],
            vec![p(&[0, 0, 1]), p(&[0, 1]), p(&[0, -1, -1])],
        ];
        let mut m = orig.clone();
        let piv = bareiss(&mut m, 3);
        assert_eq!(piv, vec![0]);
        let ns = echelon_nullspace(&m, &piv, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &orig {
                let s = row.iter().zip(v).fold(UniRatFunc::zero(Var::N), |acc, (a, b)| {
                    acc.add(&UniRatFunc::from_poly(a.clone()).mul(b))
                });
                assert!(s.is_zero());
            }
        }
    }
}
