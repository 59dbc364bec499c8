use super::echelon::{to_sparse, Echelon, SparseRow};
use super::field::Field;
use super::guard;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Result<Self> {
        let n = guard::check_entries(
            || format!("dense {rows}x{cols} matrix"),
            rows as u128 * cols as u128,
        )?;
        Ok(Matrix {
            data: vec![field.zero(); n],
            field: field.clone(),
            rows,
            cols,
        })
    }

    pub fn identity(field: &K, n: usize) -> Result<Self> {
        let mut m = Self::zeros(field, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        Ok(m)
    }

    pub fn from_rows(field: &K, rows: Vec<Vec<K::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: ncols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Self::from_vec(field, nrows, ncols, data)
    }

    pub fn from_vec(field: &K, rows: usize, cols: usize, data: Vec<K::Elem>) -> Result<Self> {
        guard::check_entries(
            || format!("dense {rows}x{cols} matrix"),
            rows as u128 * cols as u128,
        )?;
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Integer entries, mapped into the field.
    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, rows)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn as_slice(&self) -> &[K::Elem] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.mul_add_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix<K>) -> Result<Matrix<K>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols)?;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        f.mul_add_assign(&mut out.data[r * other.cols + c], a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_sparse(&self) -> SparseMatrix<K> {
        SparseMatrix {
            field: self.field.clone(),
            ncols: self.cols,
            rows: (0..self.rows)
                .map(|r| to_sparse(&self.field, self.row(r)))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.to_sparse().rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<K::Elem>> {
        self.to_sparse().kernel_basis()
    }

    pub fn solve(&self, b: &[K::Elem]) -> Result<Option<Vec<K::Elem>>> {
        self.to_sparse().solve(b)
    }

    pub fn invert(&self) -> Result<Matrix<K>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "inverse of non-square matrix",
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let mut ech = Echelon::new(f.clone(), 2 * n);
        for r in 0..n {
            let mut row = to_sparse(f, self.row(r));
            row.push((n + r, f.one()));
            ech.insert(&row);
        }
        let rref = ech.rref_rows();
        if rref.len() < n || rref[n - 1][0].0 >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(f, n, n)?;
        for (r, row) in rref.iter().enumerate() {
            for (c, v) in row.iter() {
                if *c >= n {
                    inv.set(r, c - n, v.clone());
                }
            }
        }
        Ok(inv)
    }
}

/// Row-major sparse matrix; rows are [`SparseRow`]s.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<K: Field> {
    field: K,
    ncols: usize,
    rows: Vec<SparseRow<K::Elem>>,
}

impl<K: Field> SparseMatrix<K> {
    pub fn new(field: &K, ncols: usize) -> Self {
        SparseMatrix {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
        }
    }

    /// Rows must be sorted by column and free of explicit zeros.
    pub fn push_row(&mut self, row: SparseRow<K::Elem>) {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        self.rows.push(row);
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, K::Elem)] {
        &self.rows[r]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn to_dense(&self) -> Result<Matrix<K>> {
        let mut m = Matrix::zeros(&self.field, self.rows.len(), self.ncols)?;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                context: "sparse matrix-vector product",
                expected: self.ncols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok(self
            .rows
            .iter()
            .map(|row| {
                let mut acc = f.zero();
                for (c, a) in row {
                    if !f.is_zero(&v[*c]) {
                        f.mul_add_assign(&mut acc, a, &v[*c]);
                    }
                }
                acc
            })
            .collect())
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix<K>) -> Result<SparseMatrix<K>> {
        if self.ncols != other.rows.len() {
            return Err(Error::DimensionMismatch {
                context: "sparse matrix product",
                expected: self.ncols,
                found: other.rows.len(),
            });
        }
        let f = &self.field;
        let mut acc: Vec<Option<K::Elem>> = vec![None; other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut out = SparseMatrix::new(f, other.ncols);
        for row in &self.rows {
            for (k, a) in row {
                for (c, b) in &other.rows[*k] {
                    match &mut acc[*c] {
                        Some(x) => f.mul_add_assign(x, a, b),
                        slot @ None => {
                            *slot = Some(f.mul(a, b));
                            touched.push(*c);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut res = Vec::new();
            for c in touched.drain(..) {
                if let Some(v) = acc[c].take() {
                    if !f.is_zero(&v) {
                        res.push((c, v));
                    }
                }
            }
            out.rows.push(res);
        }
        Ok(out)
    }

    pub fn echelon(&self) -> Echelon<K> {
        let mut ech = Echelon::new(self.field.clone(), self.ncols);
        for row in &self.rows {
            ech.insert(row);
            if ech.rank() == self.ncols {
                break;
            }
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<K::Elem>> {
        self.echelon().kernel_basis()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[K::Elem]) -> Result<Option<Vec<K::Elem>>> {
        if b.len() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                context: "right-hand side",
                expected: self.rows.len(),
                found: b.len(),
            });
        }
        let f = &self.field;
        let n = self.ncols;
        let mut ech = Echelon::new(f.clone(), n + 1);
        for (row, rhs) in self.rows.iter().zip(b) {
            let mut aug = row.clone();
            if !f.is_zero(rhs) {
                aug.push((n, rhs.clone()));
            }
            if ech.insert(&aug) == Some(n) {
                return Ok(None);
            }
        }
        let mut x = vec![f.zero(); n];
        for row in ech.rref_rows() {
            if let Some((c, v)) = row.last() {
                if *c == n {
                    x[row[0].0] = v.clone();
                }
            }
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};

    #[test]
    fn rank_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(Matrix::identity(&f7, 5).unwrap().rank(), 5);
        assert_eq!(Matrix::zeros(&Rationals, 3, 4).unwrap().rank(), 0);
        let m = Matrix::from_i64(&Rationals, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let q = Rationals;
        let k = Matrix::zeros(&q, 2, 3).unwrap().kernel_basis();
        assert_eq!(k, Matrix::identity(&q, 3).unwrap().transpose().to_rows());
        assert!(Matrix::identity(&q, 4).unwrap().kernel_basis().is_empty());
    }

    #[test]
    fn kernel_over_f2_matches_enumeration() {
        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_i64(&f2, &[&[1, 1]]).unwrap();
        // Enumerate F_2^2 and keep the vectors sent to zero.
        let nonzero_solutions: Vec<Vec<u32>> = (0..4u32)
            .map(|bits| vec![bits & 1, (bits >> 1) & 1])
            .filter(|v| v.iter().any(|&x| x != 0))
            .filter(|v| m.mul_vec(v).unwrap() == vec![0])
            .collect();
        assert_eq!(nonzero_solutions, vec![vec![1, 1]]);
        assert_eq!(m.kernel_basis(), nonzero_solutions);
    }

    #[test]
    fn solve_examples() {
        let q = Rationals;
        let id = Matrix::identity(&q, 3).unwrap();
        let b: Vec<_> = [4, -1, 7].iter().map(|&x| q.from_i64(x)).collect();
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));
        let z = Matrix::zeros(&q, 2, 2).unwrap();
        assert_eq!(z.solve(&[q.one(), q.zero()]).unwrap(), None);
        let f5 = PrimeField::new(5).unwrap();
        let two = Matrix::from_i64(&f5, &[&[2]]).unwrap();
        assert_eq!(two.solve(&[1]).unwrap(), Some(vec![3]));
        assert!(matches!(
            id.solve(&b[..2]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn invert_examples() {
        let q = Rationals;
        let id = Matrix::identity(&q, 3).unwrap();
        assert_eq!(id.invert().unwrap(), id);
        let swap = Matrix::from_i64(&q, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(swap.invert().unwrap(), swap);
        let f7 = PrimeField::new(7).unwrap();
        let two = Matrix::from_i64(&f7, &[&[2]]).unwrap();
        assert_eq!(two.invert().unwrap().as_slice(), &[4]);
        let sing = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(matches!(sing.invert(), Err(Error::Singular)));
    }

    #[test]
    fn guard_rejects_huge_dense() {
        let q = Rationals;
        assert!(matches!(
            Matrix::zeros(&q, 1 << 20, 1 << 20),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn sparse_product_matches_dense() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[&[1, 0, 2], &[0, -1, 3]]).unwrap();
        let b = Matrix::from_i64(&q, &[&[1, 1], &[2, 0], &[0, -1]]).unwrap();
        let dense = a.mul(&b).unwrap();
        let sparse = a.to_sparse().mul(&b.to_sparse()).unwrap();
        assert_eq!(sparse.to_dense().unwrap(), dense);
    }

    impl<K: Field> Matrix<K> {
        fn to_rows(&self) -> Vec<Vec<K::Elem>> {
            (0..self.rows).map(|r| self.row(r).to_vec()).collect()
        }
    }
}
