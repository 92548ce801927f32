use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

/// Largest dimension for which [`char_poly`] cross-checks its constant term
/// against a Bareiss determinant.
pub const BAREISS_CROSS_CHECK_MAX_DIM: usize = 30;

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> IntMatrix {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<IntMatrix> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Domain(format!(
                    "row of length {} in a {dim}x{dim} matrix",
                    row.len()
                )));
            }
            entries.extend(row.into_iter().map(Into::into));
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn nonzero_rows(&self) -> Vec<Vec<(usize, &BigInt)>> {
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .collect()
            })
            .collect()
    }
}

/// Symmetric 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zero(n);
    for (u, v) in g.edges() {
        m.entries[u * n + v] = BigInt::one();
        m.entries[v * n + u] = BigInt::one();
    }
    m
}

// Row i of `self * other`, skipping zero entries of `self`.
fn product_row(sparse_row: &[(usize, &BigInt)], other: &IntMatrix) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); other.dim];
    for &(l, a) in sparse_row {
        let src = other.row(l);
        if a.is_one() {
            for (o, s) in out.iter_mut().zip(src) {
                *o += s;
            }
        } else {
            for (o, s) in out.iter_mut().zip(src) {
                *o += a * s;
            }
        }
    }
    out
}

/// Characteristic polynomial `det(xI - M)`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    char_poly_with(m, Execution::default())
}

/// Faddeev–LeVerrier: `M_1 = I`, `c_{d-k} = -tr(A M_k) / k`,
/// `M_{k+1} = A M_k + c_{d-k} I`. Every division is exact over the
/// integers; a nonzero remainder is reported as an internal error.
pub fn char_poly_with(m: &IntMatrix, exec: Execution) -> Result<IntPolynomial> {
    let d = m.dim;
    if d == 0 {
        return Err(Error::Domain(
            "characteristic polynomial of a 0x0 matrix".into(),
        ));
    }
    let sparse = m.nonzero_rows();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut current = IntMatrix::identity(d);
    for k in 1..=d {
        let rows = exec.map_slice(&sparse, |row| product_row(row, &current));
        let trace: BigInt = rows.iter().enumerate().map(|(i, r)| &r[i]).sum();
        let (c, rem) = (-trace).div_rem(&BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "Faddeev-LeVerrier step {k} left remainder {rem}"
            )));
        }
        if k < d {
            let mut entries: Vec<BigInt> = rows.into_iter().flatten().collect();
            for i in 0..d {
                entries[i * d + i] += &c;
            }
            current = IntMatrix { dim: d, entries };
        }
        coeffs[d - k] = c;
    }
    let poly = IntPolynomial::new(coeffs);
    if d <= BAREISS_CROSS_CHECK_MAX_DIM {
        let det = bareiss_determinant(m);
        let expected = if d.is_multiple_of(2) { det } else { -det };
        if poly.coeff(0) != expected {
            return Err(Error::Internal(format!(
                "constant term {} disagrees with (-1)^d det = {expected}",
                poly.coeff(0)
            )));
        }
    }
    Ok(poly)
}

/// Fraction-free Gaussian elimination determinant.
pub fn bareiss_determinant(m: &IntMatrix) -> BigInt {
    let d = m.dim;
    if d == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..d).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..d - 1 {
        if a[k][k].is_zero() {
            match (k + 1..d).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[d - 1][d - 1]
}
