//! Sublattices of `Z^n`: kernels, canonical bases and complements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_form;

/// A basis of the kernel of `m` in row-style Hermite normal form.
///
/// Each returned vector has length `m.cols()`. The basis is canonical: two
/// matrices with the same kernel give the same list.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    hermite_basis(smith_form(m).kernel_basis())
}

/// Canonical basis of the lattice spanned by `vectors` (row Hermite normal form).
///
/// Rows are in echelon form, every pivot is positive, and the entries above a
/// pivot lie in `[0, pivot)`. Zero rows are dropped.
pub fn hermite_basis(vectors: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let Some(n) = vectors.first().map(Vec::len) else { return Vec::new() };
    let mut rows = vectors;
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == rows.len() {
            break;
        }
        // Euclid on the column below pivot_row until one nonzero entry remains.
        loop {
            let best = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for r in (pivot_row + 1)..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                let (head, tail) = rows.split_at_mut(r);
                axpy(&mut tail[0], &head[pivot_row], &-q);
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for v in rows[pivot_row].iter_mut() {
                *v = -std::mem::take(v);
            }
        }
        for r in 0..pivot_row {
            let q = rows[r][col].div_floor(&rows[pivot_row][col]);
            let (head, tail) = rows.split_at_mut(pivot_row);
            axpy(&mut head[r], &tail[0], &-q);
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

/// Given vectors spanning a sublattice `S` of `Z^n`, returns a basis of a
/// complement of the saturation of `S`, so that `Z^n / sat(S)` is free on it.
pub fn saturation_complement(n: usize, vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return (0..n).map(|i| unit(n, i)).collect();
    }
    // Columns of M are the spanning vectors. With L M R = D, the first `rank`
    // columns of L^{-1} span sat(S); the remaining columns span a complement.
    let m = IntMatrix::from_columns(n, vectors).expect("vectors of length n");
    let form = smith_form(&m);
    let inverse = unimodular_inverse(&form.left);
    (form.rank..n).map(|c| inverse.column(c)).collect()
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(1);
    v
}

/// Inverse of a unimodular matrix, computed from its own Smith form.
pub fn unimodular_inverse(u: &IntMatrix) -> IntMatrix {
    // L U R = I, hence U^{-1} = R L.
    let form = smith_form(u);
    debug_assert!(form.invariant_factors.iter().all(|d| d == &BigInt::from(1)));
    form.right.mul(&form.left).expect("square factors")
}

fn axpy(target: &mut [BigInt], source: &[BigInt], factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        *t += s * factor;
    }
}
