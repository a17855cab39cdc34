//! Exact rank of integer matrices over a field.
//!
//! Every matrix the crate builds (simplicial and cellular boundaries, their
//! tensor products) has small integer entries, so matrices are stored over
//! `i64` and reduced into the target field only when a rank is needed.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::Field;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Keeps only the listed rows, in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for &r in keep {
            data.extend_from_slice(self.row(r));
        }
        Matrix { rows: keep.len(), cols: self.cols, data }
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_cols(&self, keep: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * keep.len());
        for r in 0..self.rows {
            data.extend(keep.iter().map(|&c| self.get(r, c)));
        }
        Matrix { rows: self.rows, cols: keep.len(), data }
    }

    /// Integer product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.add_to(i, j, a * rhs.get(k, j));
                }
            }
        }
        out
    }

    /// Rank over `field`.
    pub fn rank(&self, field: Field) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            Field::Rational => rank_bareiss(self),
            Field::Prime(p) => rank_mod_p(self, u64::from(p)),
        }
    }
}

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
/// of the input, so the division by the previous pivot is exact.
fn rank_bareiss(m: &Matrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|r| m.row(r).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        // smallest nonzero pivot keeps the numbers short
        let pivot =
            (rank..m.rows).filter(|&r| !a[r][col].is_zero()).min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(m: &Matrix, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> =
        (0..m.rows).map(|r| m.row(r).iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(piv) = (rank..m.rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let inv = inverse_mod(a[rank][col], p);
        for x in &mut a[rank][col..] {
            *x = *x * inv % p;
        }
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in below {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn inverse_mod(x: u64, p: u64) -> u64 {
    // Fermat; p is prime and below 2^32 so products fit in u64
    let mut base = x % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Leibniz-expansion determinant; exponential, only for tiny matrices.
    fn det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0i128;
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let term = i128::from(m[0][c]) * det(&minor);
            total += if c % 2 == 0 { term } else { -term };
        }
        total
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }

    /// Rank as the size of the largest minor that is nonzero in the field.
    fn rank_by_minors(m: &Matrix, p: Option<i128>) -> usize {
        let rows: Vec<Vec<i64>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
                    let d = det(&sub);
                    let nonzero = match p {
                        None => d != 0,
                        Some(p) => d.rem_euclid(p) != 0,
                    };
                    if nonzero {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn boundary_of_triangle() {
        // edges 12, 13, 23 -> vertices 1, 2, 3
        let d1 = Matrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1.rank(Field::Rational), 2);
        assert_eq!(d1.rank(Field::Prime(2)), 2);
    }

    #[test]
    fn multiplication_by_two_depends_on_characteristic() {
        let m = Matrix::from_rows(&[vec![2]]);
        assert_eq!(m.rank(Field::Rational), 1);
        assert_eq!(m.rank(Field::Prime(2)), 0);
        assert_eq!(m.rank(Field::Prime(3)), 1);
    }

    #[test]
    fn empty_shapes_have_rank_zero() {
        assert_eq!(Matrix::zeros(0, 4).rank(Field::Rational), 0);
        assert_eq!(Matrix::zeros(3, 0).rank(Field::Prime(5)), 0);
        assert_eq!(Matrix::zeros(3, 3).rank(Field::Rational), 0);
    }

    #[test]
    fn row_and_column_selection() {
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(m.select_rows(&[1]), Matrix::from_rows(&[vec![4, 5, 6]]));
        assert_eq!(m.select_cols(&[2, 0]), Matrix::from_rows(&[vec![3, 1], vec![6, 4]]));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
                .prop_map(|rows| Matrix::from_rows(&rows))
        })
    }

    proptest! {
        #[test]
        fn rational_rank_matches_minors(m in small_matrix()) {
            prop_assert_eq!(m.rank(Field::Rational), rank_by_minors(&m, None));
        }

        #[test]
        fn prime_rank_matches_minors(m in small_matrix(), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
            prop_assert_eq!(m.rank(Field::Prime(p)), rank_by_minors(&m, Some(i128::from(p))));
        }
    }
}
