//! Exact integer matrices: fraction-free (Bareiss) determinant and solve.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.n.max(1)).map(<[BigInt]>::to_vec).collect()
    }

    /// Determinant by Bareiss elimination; every intermediate is an integer.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.rows();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                eliminate(&mut a, i, k, n, &prev);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Solves `M x = b` exactly.
    ///
    /// Forward elimination is fraction-free on the augmented matrix; the
    /// back substitution divides once per row.
    pub fn solve(&self, b: &[BigInt]) -> Result<Vec<BigRational>> {
        let n = self.n;
        assert_eq!(b.len(), n, "right-hand side has wrong length");
        let mut a: Vec<Vec<BigInt>> = self
            .rows()
            .into_iter()
            .zip(b)
            .map(|(mut row, bi)| {
                row.push(bi.clone());
                row
            })
            .collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
                a.swap(k, swap);
            }
            for i in k + 1..n {
                eliminate(&mut a, i, k, n + 1, &prev);
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = BigRational::from_integer(a[i][n].clone());
            for j in i + 1..n {
                acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
            }
            x[i] = acc / BigRational::from_integer(a[i][i].clone());
        }
        Ok(x)
    }
}

/// One Bareiss row update, `a[i][j] = (a[i][j] a[k][k] - a[i][k] a[k][j]) / prev`
/// for `j` in `k+1..cols`; zero entries stay cheap so sparse input stays fast.
fn eliminate(a: &mut [Vec<BigInt>], i: usize, k: usize, cols: usize, prev: &BigInt) {
    let (top, bottom) = a.split_at_mut(i);
    let (pivot_row, row) = (&top[k], &mut bottom[0]);
    let lead = row[k].clone();
    for j in k + 1..cols {
        let keep = !row[j].is_zero();
        let mix = !lead.is_zero() && !pivot_row[j].is_zero();
        row[j] = match (keep, mix) {
            (false, false) => continue,
            (true, false) => &row[j] * &pivot_row[k] / prev,
            (false, true) => -(&lead * &pivot_row[j]) / prev,
            (true, true) => (&row[j] * &pivot_row[k] - &lead * &pivot_row[j]) / prev,
        };
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
