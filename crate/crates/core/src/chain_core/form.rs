//! Inertia of symmetric integer forms by exact congruence diagonalization.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Counts of positive, negative and zero entries in a diagonalized form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct FormSignature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl FormSignature {
    /// `positive - negative`.
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.null
    }
}

/// Inertia of the symmetric matrix `s`.
///
/// The form is diagonalized over the rationals by symmetric row and column
/// operations. A nonzero diagonal entry is used as pivot when one exists;
/// otherwise a nonzero off-diagonal entry `a` splits off a block `[[0, a], [a, 0]]`,
/// which contributes one positive and one negative direction.
pub fn signature_of_form(s: &IntMatrix) -> Result<FormSignature> {
    if !s.is_square() {
        return Err(Error::Dimension(format!("form matrix is {}x{}, expected square", s.rows(), s.cols())));
    }
    if let Some((row, col)) = s.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let n = s.rows();
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|r| s.row(r).iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
    let mut out = FormSignature::default();
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_symmetric(&mut a, k, p);
            let pivot = a[k][k].clone();
            for r in (k + 1)..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &pivot;
                add_symmetric(&mut a, r, k, &-f);
            }
            if pivot.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            k += 1;
            continue;
        }
        let partner = (k..n).find_map(|i| ((i + 1)..n).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)));
        let Some((i, j)) = partner else {
            out.null += n - k;
            break;
        };
        swap_symmetric(&mut a, k, i);
        swap_symmetric(&mut a, k + 1, j);
        // Block [[0, b], [b, 0]]; clear the rest of both rows and columns.
        let b = a[k][k + 1].clone();
        for r in (k + 2)..n {
            let x = &a[r][k + 1] / &b;
            let y = &a[r][k] / &b;
            add_symmetric(&mut a, r, k, &-x);
            add_symmetric(&mut a, r, k + 1, &-y);
        }
        out.positive += 1;
        out.negative += 1;
        k += 2;
    }
    Ok(out)
}

/// Signature `n_+ - n_-` of a symmetric integer matrix.
pub fn signature(s: &IntMatrix) -> Result<i64> {
    Ok(signature_of_form(s)?.signature())
}

fn swap_symmetric(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Replaces row and column `target` by themselves plus `f` times `source`.
fn add_symmetric(a: &mut [Vec<BigRational>], target: usize, source: usize, f: &BigRational) {
    let n = a.len();
    for c in 0..n {
        let v = &a[source][c] * f;
        a[target][c] += v;
    }
    for r in 0..n {
        let v = &a[r][source] * f;
        a[r][target] += v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(rows: &[&[i64]]) -> FormSignature {
        signature_of_form(&IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn fs(positive: usize, negative: usize, null: usize) -> FormSignature {
        FormSignature { positive, negative, null }
    }

    #[test]
    fn small_forms() {
        assert_eq!(sig(&[&[1]]), fs(1, 0, 0));
        assert_eq!(sig(&[&[0, 1], &[1, 0]]), fs(1, 1, 0));
        assert_eq!(sig(&[&[2, 1], &[1, 2]]), fs(2, 0, 0));
        assert_eq!(sig(&[&[-3]]), fs(0, 1, 0));
        assert_eq!(sig(&[&[0, 0], &[0, 0]]), fs(0, 0, 2));
        assert_eq!(signature_of_form(&IntMatrix::zeros(0, 0)).unwrap(), fs(0, 0, 0));
    }

    #[test]
    fn hyperbolic_block_is_cleared_from_other_rows() {
        // Zero diagonal with a coupled third vector.
        let s = sig(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        // Eigenvalues 2, -1, -1.
        assert_eq!(s, fs(1, 2, 0));
        let t = sig(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 0]]);
        assert_eq!(t, fs(1, 1, 1));
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let m = IntMatrix::from_rows(&[[1i64, 2], [3, 4]]).unwrap();
        assert_eq!(signature_of_form(&m), Err(Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn figure_eight_goeritz_is_indefinite() {
        assert_eq!(sig(&[&[2, 1], &[1, -2]]), fs(1, 1, 0));
        assert_eq!(sig(&[&[-3, 1, 1], &[1, -3, 1], &[1, 1, -3]]).signature(), -3);
    }
}
