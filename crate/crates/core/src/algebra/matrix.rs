use std::fmt;

use super::laurent::HalfLaurent;
use super::linear::RationalMatrix;
use crate::error::AlgebraError;

/// Dense matrix over the Laurent ring `Q[q^{1/2}, q^{-1/2}]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    data: Vec<HalfLaurent>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![HalfLaurent::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = HalfLaurent::one();
        }
        m
    }

    pub fn diagonal(entries: &[HalfLaurent]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<HalfLaurent>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Ragged);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<HalfLaurent>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::Ragged);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &HalfLaurent {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: HalfLaurent) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[HalfLaurent] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[HalfLaurent] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, rhs: &Self, op: &'static str, f: impl Fn(&HalfLaurent, &HalfLaurent) -> HalfLaurent) -> Result<Self, AlgebraError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(AlgebraError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> Result<HalfLaurent, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(HalfLaurent::is_zero)
    }

    /// First `(row, col)` in row-major order where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.cols, idx % self.cols))
    }

    /// Entry-wise value at `q = 1`.
    pub fn at_one(&self) -> RationalMatrix {
        RationalMatrix::from_vec(
            self.rows,
            self.cols,
            self.data.iter().map(HalfLaurent::eval_one).collect(),
        )
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != skip_r) {
            for c in (0..self.cols).filter(|&c| c != skip_c) {
                data.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// Fraction-free (Bareiss) determinant; every division is exact in the Laurent ring.
    pub fn determinant(&self) -> Result<HalfLaurent, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(HalfLaurent::one());
        }
        let mut a: Vec<Vec<HalfLaurent>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = HalfLaurent::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(HalfLaurent::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).ok_or(AlgebraError::InexactDivision)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Exact inverse via the adjugate; defined when the determinant is a unit (a monomial).
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let det = self.determinant()?;
        let det_inv = det.inverse_monomial().ok_or(AlgebraError::Singular)?;
        let n = self.rows;
        if n == 1 {
            return Ok(Self::from_vec(1, 1, vec![det_inv]).expect("1x1"));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).determinant()?;
                let cof = if (i + j) % 2 == 1 { -cof } else { cof };
                out.set(j, i, &cof * &det_inv);
            }
        }
        Ok(out)
    }

    /// Entry-wise map.
    pub fn map(&self, f: impl Fn(&HalfLaurent) -> HalfLaurent) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn count_nonzero(&self) -> usize {
        self.data.iter().filter(|e| !e.is_zero()).count()
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    fn sample(seed: i64, n: usize) -> RingMatrix {
        let data = (0..n * n)
            .map(|i| {
                let i = i as i64;
                HalfLaurent::from_int_terms(&[((i * seed) % 5 - 2, (i + seed) % 3 - 1), (i % 3, seed - i)])
            })
            .collect();
        RingMatrix::from_vec(n, n, data).unwrap()
    }

    #[test]
    fn identity_trace_and_products() {
        let id = RingMatrix::identity(5);
        assert_eq!(id.trace().unwrap(), HalfLaurent::from_int(5));
        let a = sample(3, 5);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(id.mul(&a).unwrap(), a);
    }

    #[test]
    fn cyclic_trace() {
        let a = sample(2, 4);
        let b = sample(7, 4);
        assert_eq!(
            a.mul(&b).unwrap().trace().unwrap(),
            b.mul(&a).unwrap().trace().unwrap()
        );
    }

    #[test]
    fn dimension_errors() {
        let a = RingMatrix::zeros(2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.trace().is_err());
        assert!(RingMatrix::from_rows(vec![vec![HalfLaurent::one()], vec![]]).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RingMatrix::from_rows(vec![
            vec![p("q"), p("1")],
            vec![p("0"), p("-q^-1")],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), p("-1"));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let sing = RingMatrix::from_rows(vec![vec![p("q + 1"), p("0")], vec![p("0"), p("1")]]).unwrap();
        assert!(matches!(sing.inverse(), Err(AlgebraError::Singular)));
    }

    #[test]
    fn kron_shape() {
        let a = RingMatrix::identity(2);
        let b = sample(1, 3);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k.get(4, 5), b.get(1, 2));
        assert!(k.get(1, 4).is_zero());
    }
}
