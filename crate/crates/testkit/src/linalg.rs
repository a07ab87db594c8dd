//! Small dense linear algebra on `i64` matrices, written independently of
//! `braco-core`.

pub type Matrix = Vec<Vec<i64>>;

/// Signature (positive minus negative eigenvalues) of a symmetric matrix,
/// from cyclic Jacobi rotations in floating point.
pub fn eigen_signature(m: &Matrix) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n)
        .map(|i| {
            if a[i][i] > 1e-7 {
                1
            } else if a[i][i] < -1e-7 {
                -1
            } else {
                0
            }
        })
        .sum()
}

/// Determinant by fraction-free Gaussian elimination.
pub fn determinant(m: &Matrix) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut previous = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| a[r][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn multiply(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|r| (0..cols).map(|j| (0..inner).map(|k| r[k] * b[k][j]).sum()).collect()).collect()
}

/// `uᵀ a u`.
pub fn congruent_image(a: &Matrix, u: &Matrix) -> Matrix {
    multiply(&multiply(&transpose(u), a), u)
}

/// Searches for a unimodular `u` with entries in `[-bound, bound]` and
/// `uᵀ a u = b`.
pub fn find_congruence(a: &Matrix, b: &Matrix, bound: i64) -> Option<Matrix> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let width = (2 * bound + 1) as u64;
    let total = width.checked_pow((n * n) as u32)?;
    (0..total).find_map(|code| {
        let mut c = code;
        let u: Matrix = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = (c % width) as i64 - bound;
                        c /= width;
                        v
                    })
                    .collect()
            })
            .collect();
        (determinant(&u).abs() == 1 && &congruent_image(a, &u) == b).then_some(u)
    })
}

/// Removes row and column `index`.
pub fn minor(m: &Matrix, index: usize) -> Matrix {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != index).map(|(_, &x)| x).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures_of_small_forms() {
        assert_eq!(eigen_signature(&vec![vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(eigen_signature(&vec![vec![-2, 1], vec![1, -2]]), -2);
        assert_eq!(eigen_signature(&vec![vec![3, 1], vec![1, 2]]), 2);
        assert_eq!(eigen_signature(&vec![vec![0, 0], vec![0, -5]]), -1);
        assert_eq!(eigen_signature(&vec![]), 0);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&vec![vec![2, 1], vec![1, 3]]), 5);
        assert_eq!(determinant(&vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 4]]), -4);
        assert_eq!(determinant(&vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn congruence_search() {
        let a = vec![vec![3, 1], vec![1, 2]];
        let b = vec![vec![3, -2], vec![-2, 3]];
        let u = find_congruence(&a, &b, 2).expect("congruent");
        assert_eq!(congruent_image(&a, &u), b);
        assert!(find_congruence(&vec![vec![2]], &vec![vec![-2]], 2).is_none());
    }
}
