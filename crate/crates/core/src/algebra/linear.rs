//! Exact rational linear algebra: dense elimination and an incremental sparse echelon basis.

use std::collections::BTreeMap;

use num::{BigRational, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::from_integer(1.into());
        }
        m
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), rows * cols, "rational matrix shape");
        Self { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| BigRational::from_integer(v.into()))
            })
            .collect();
        Self::from_vec(rows.len(), cols, data)
    }

    /// Dense matrix from sparse rows `(col, value)`.
    pub fn from_sparse_rows(cols: usize, rows: &[Vec<(usize, BigRational)>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row {
                m.data[r * cols + c] += v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BigRational::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Option<Self> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Some(out)
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen by largest `|num·den|`
    /// among the candidate rows; ties go to the topmost row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let best = (row..self.rows)
                .filter(|&r| !a[r][col].is_zero())
                .max_by(|&x, &y| {
                    let kx = (a[x][col].numer() * a[x][col].denom()).abs();
                    let ky = (a[y][col].numer() * a[y][col].denom()).abs();
                    // prefer the earlier row on ties
                    kx.cmp(&ky).then(y.cmp(&x))
                });
            let Some(p) = best else { continue };
            a.swap(row, p);
            let inv = a[row][col].recip();
            for v in a[row].iter_mut().skip(col) {
                *v *= &inv;
            }
            let pivot_row = a[row].clone();
            for (r, other) in a.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let f = other[col].clone();
                for (v, pv) in other.iter_mut().zip(&pivot_row).skip(col) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let data = a.into_iter().flatten().collect();
        (Self::from_vec(self.rows, self.cols, data), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Dimension of the right kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Incrementally built echelon basis of a row space, for systems too large to hold densely.
///
/// Each stored row is monic at its pivot, which is its smallest column index.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    cols: usize,
    pivots: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduces `row` against the basis and keeps the remainder if it is nonzero.
    /// Returns whether the rank grew.
    pub fn insert<I>(&mut self, row: I) -> bool
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut r: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.cols);
            let slot = r.entry(c).or_insert_with(BigRational::zero);
            *slot += v;
            if slot.is_zero() {
                r.remove(&c);
            }
        }
        let mut cursor = 0;
        loop {
            let Some((&lead, _)) = r.range(cursor..).next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(basis_row) => {
                    let f = r.remove(&lead).expect("lead present");
                    for (c, v) in basis_row.iter().skip(1) {
                        let slot = r.entry(*c).or_insert_with(BigRational::zero);
                        *slot -= &f * v;
                        if slot.is_zero() {
                            r.remove(c);
                        }
                    }
                    cursor = lead + 1;
                }
                None => {
                    let inv = r[&lead].recip();
                    for v in r.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, r);
                    return true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullity_examples() {
        assert_eq!(RationalMatrix::zeros(3, 7).nullity(), 7);
        assert_eq!(RationalMatrix::identity(6).nullity(), 0);
        let m = RationalMatrix::from_i64_rows(&[vec![1, 2, 3], vec![0, 1, 4]]);
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn rref_of_dependent_rows() {
        let m = RationalMatrix::from_i64_rows(&[vec![2, 4, 6], vec![1, 2, 3], vec![1, 0, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m.rank(), 2);
        let one = BigRational::new(1.into(), 1.into());
        assert_eq!(r.get(0, 0), &one);
        assert!(r.get(2, 2).is_zero());
    }

    #[test]
    fn sparse_echelon_matches_dense() {
        let rows = vec![
            vec![1, -1, 0, 0, 1],
            vec![0, 1, -1, 0, 0],
            vec![1, 0, -1, 0, 1],
            vec![0, 0, 0, 2, 0],
            vec![3, 0, -3, 4, 3],
        ];
        let dense = RationalMatrix::from_i64_rows(&rows);
        let mut sparse = SparseEchelon::new(5);
        for row in &rows {
            sparse.insert(
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, BigRational::from_integer((*v).into()))),
            );
        }
        assert_eq!(dense.rank(), 3);
        assert_eq!(sparse.rank(), dense.rank());
        assert_eq!(sparse.nullity(), 2);
    }
}
