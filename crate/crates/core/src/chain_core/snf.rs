//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `left * M * right = D` of an integer matrix `M`.
///
/// `D` is diagonal with positive entries `d_1 | d_2 | ... | d_rank` followed by
/// zeros; `left` and `right` are unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// The nonzero diagonal entries, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// Unimodular row transform (`rows x rows`).
    pub left: IntMatrix,
    /// Unimodular column transform (`cols x cols`).
    pub right: IntMatrix,
}

impl SmithForm {
    /// The diagonal matrix `D`.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, f) in self.invariant_factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }

    /// Columns of `right` past the rank: a basis of the kernel of `M`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.right.cols()).map(|c| self.right.column(c)).collect()
    }
}

/// Invariant factors and rank of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> (Vec<BigInt>, usize) {
    let form = smith_form(m);
    (form.invariant_factors, form.rank)
}

/// Full Smith normal form with transforms.
///
/// Pivots are chosen as the nonzero entry of smallest absolute value in the
/// remaining block, ties broken by lowest row then lowest column.
pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let mut calc = Calc { a: m.clone(), left: IntMatrix::identity(m.rows()), right: IntMatrix::identity(m.cols()) };
    let limit = m.rows().min(m.cols());
    let mut t = 0;
    while t < limit {
        let Some((pr, pc)) = calc.smallest_pivot(t) else { break };
        calc.swap_rows(t, pr);
        calc.swap_cols(t, pc);
        if !calc.clear_cross(t) {
            continue;
        }
        if let Some(row) = calc.non_divisible_row(t) {
            // Fold the offending row into the pivot row and redo this step.
            calc.add_row_multiple(t, row, &BigInt::one());
            continue;
        }
        if calc.a.get(t, t).is_negative() {
            calc.a.negate_row(t);
            calc.left.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors = (0..t).map(|i| calc.a.get(i, i).clone()).collect();
    SmithForm { invariant_factors, rank: t, left: calc.left, right: calc.right }
}

struct Calc {
    a: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
}

impl Calc {
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let v = self.a.get(r, c);
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                if best.as_ref().is_none_or(|(b, _, _)| abs < *b) {
                    best = Some((abs, r, c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        self.left.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        self.right.swap_cols(a, b);
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_row_multiple(target, source, factor);
        self.left.add_row_multiple(target, source, factor);
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_col_multiple(target, source, factor);
        self.right.add_col_multiple(target, source, factor);
    }

    /// Reduces column `t` below and row `t` right of the pivot by the pivot.
    /// Returns false when a nonzero remainder appeared, so a smaller pivot exists.
    fn clear_cross(&mut self, t: usize) -> bool {
        let pivot = self.a.get(t, t).clone();
        let mut clean = true;
        for r in (t + 1)..self.a.rows() {
            let v = self.a.get(r, t).clone();
            if v.is_zero() {
                continue;
            }
            let q = v.div_floor(&pivot);
            self.add_row_multiple(r, t, &-q);
            if !self.a.get(r, t).is_zero() {
                clean = false;
            }
        }
        for c in (t + 1)..self.a.cols() {
            let v = self.a.get(t, c).clone();
            if v.is_zero() {
                continue;
            }
            let q = v.div_floor(&pivot);
            self.add_col_multiple(c, t, &-q);
            if !self.a.get(t, c).is_zero() {
                clean = false;
            }
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = self.a.get(t, t);
        for r in (t + 1)..self.a.rows() {
            for c in (t + 1)..self.a.cols() {
                if !self.a.get(r, c).is_multiple_of(pivot) {
                    return Some(r);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_transforms(a: &IntMatrix) -> SmithForm {
        let f = smith_form(a);
        let d = f.left.mul(a).unwrap().mul(&f.right).unwrap();
        assert_eq!(d, f.diagonal_matrix(a.rows(), a.cols()));
        assert_eq!(f.left.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(f.right.determinant().unwrap().abs(), BigInt::one());
        for w in f.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        f
    }

    #[test]
    fn trefoil_boundary_has_factors_one_and_three() {
        let a = m(&[&[1, -1, 2], &[1, 2, -1], &[-2, -1, -1]]);
        assert_eq!(smith_normal_form(&a), (ints(&[1, 3]), 2));
        check_transforms(&a);
    }

    #[test]
    fn empty_and_identity() {
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 0)), (vec![], 0));
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)), (ints(&[1, 1, 1]), 3));
        assert_eq!(smith_normal_form(&IntMatrix::zeros(2, 3)), (vec![], 0));
    }

    #[test]
    fn divisibility_is_restored() {
        // diag(2, 3) has Smith form diag(1, 6).
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(smith_normal_form(&a), (ints(&[1, 6]), 2));
        check_transforms(&a);
        let b = m(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        assert_eq!(smith_normal_form(&b), (ints(&[2, 2, 60]), 3));
        check_transforms(&b);
    }

    #[test]
    fn kernel_basis_is_annihilated() {
        let a = m(&[&[2, 4, 6], &[1, 2, 3]]);
        let f = check_transforms(&a);
        assert_eq!(f.rank, 1);
        let kernel = f.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in kernel {
            assert!(a.apply(&v).unwrap().iter().all(Zero::is_zero));
        }
    }
}
