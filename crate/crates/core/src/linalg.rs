//! Dense exact matrices, row reduction and affine solution sets.
//!
//! Linear maps `V → W` are stored as `dim W × dim V` matrices whose columns are
//! images of basis vectors. Tensor products are flattened row-major:
//! `e_i ⊗ f_j ↦ i·dim(F) + j`, which is exactly the convention of [`Matrix::kron`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError, Scalar, ScalarText};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("solution set is empty")]
    EmptySolutionSet,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.field.format(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix with integer entries, handy for fixed examples.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    /// `n × 1` matrix holding `v`.
    pub fn column(field: &Field, v: Vec<Scalar>) -> Self {
        Matrix {
            field: field.clone(),
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    /// `1 × n` matrix holding `v`.
    pub fn row(field: &Field, v: Vec<Scalar>) -> Self {
        Matrix {
            field: field.clone(),
            rows: 1,
            cols: v.len(),
            data: v,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) {
        assert_eq!(
            self.shape(),
            other.shape(),
            "{op}: shape {:?} vs {:?}",
            self.shape(),
            other.shape()
        );
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other, "add");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other, "sub");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
        }
    }

    /// Matrix product `self · other`. Skips zero entries, which dominate
    /// structure-constant matrices.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "mul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    /// Product of a chain `ms[0] · ms[1] · … · ms[n-1]`, parenthesized by
    /// the classic dynamic program on dimensions.
    pub fn chain(ms: &[&Matrix]) -> Matrix {
        let n = ms.len();
        assert!(n > 0, "nonempty chain");
        let dims: Vec<usize> = std::iter::once(ms[0].rows).chain(ms.iter().map(|m| m.cols)).collect();
        let mut cost = vec![vec![0usize; n]; n];
        let mut split = vec![vec![0usize; n]; n];
        for len in 1..n {
            for i in 0..n - len {
                let j = i + len;
                cost[i][j] = usize::MAX;
                for k in i..j {
                    let c = cost[i][k] + cost[k + 1][j] + dims[i] * dims[k + 1] * dims[j + 1];
                    if c < cost[i][j] {
                        cost[i][j] = c;
                        split[i][j] = k;
                    }
                }
            }
        }
        fn go(ms: &[&Matrix], split: &[Vec<usize>], i: usize, j: usize) -> Matrix {
            if i == j {
                return ms[i].clone();
            }
            let k = split[i][j];
            go(ms, split, i, k).mul(&go(ms, split, k + 1, j))
        }
        go(ms, &split, 0, n - 1)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(f.zero(), |acc, k| {
                    let a = self.get(i, k);
                    if f.is_zero(a) || f.is_zero(&v[k]) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, &v[k]))
                    }
                })
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product: `kron(a, b)[(i,j),(k,l)] = a[i,k]·b[j,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let (r2, c2) = other.shape();
        let mut out = Matrix::zeros(f, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(j, l);
                        if !f.is_zero(b) {
                            out.set(i * r2 + j, k * c2 + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of several factors, left to right.
    pub fn kron_all(ms: &[&Matrix]) -> Matrix {
        let (first, rest) = ms.split_first().expect("nonempty product");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        if self.rows == 0 {
            return (Matrix::zeros(f, 0, self.cols), Vec::new());
        }
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row_vec(i)).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
                continue;
            };
            rows.swap(r, p);
            let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
            for x in rows[r].iter_mut().skip(c) {
                *x = f.mul(x, &inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || f.is_zero(&row[c]) {
                    continue;
                }
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !f.is_zero(p) {
                        *x = f.sub(x, &f.mul(&factor, p));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Matrix::from_rows(f, rows).expect("rectangular"), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(&self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack rows");
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Index of the first column where `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Matrix) -> Option<usize> {
        self.check_same_shape(other, "compare");
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| ScalarText(self.field.format(self.get(i, j))))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(field: &Field, json: &MatrixJson) -> Result<Matrix, LinalgError> {
        if json.entries.len() != json.rows || json.entries.iter().any(|r| r.len() != json.cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "declared {}x{} does not match entries",
                json.rows, json.cols
            )));
        }
        let mut data = Vec::with_capacity(json.rows * json.cols);
        for row in &json.entries {
            for t in row {
                data.push(field.parse(&t.0)?);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: json.rows,
            cols: json.cols,
            data,
        })
    }

    /// Random matrix with small entries.
    pub fn random<R: rand::Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| field.random(rng))
    }

    /// Random invertible square matrix.
    pub fn random_invertible<R: rand::Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> Matrix {
        loop {
            let m = Matrix::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }
}

/// `{"rows":r,"cols":c,"entries":[[…]]}` with scalar strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<ScalarText>>,
}

/// The permutation `V ⊗ W → W ⊗ V`.
pub fn swap(field: &Field, dim_v: usize, dim_w: usize) -> Matrix {
    let n = dim_v * dim_w;
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..dim_v {
        for j in 0..dim_w {
            m.set(j * dim_v + i, i * dim_w + j, field.one());
        }
    }
    m
}

/// Flat index of a basis tuple under the row-major convention.
pub fn flatten_index(index: &[usize], dims: &[usize]) -> usize {
    index.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

/// Inverse of [`flatten_index`].
pub fn unflatten_index(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// Standard basis vector.
pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let f = r.field();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, fc));
            }
            v
        })
        .collect()
}

/// Affine solution set `particular + span(kernel)`; `particular == None` means empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: Option<Vec<Scalar>>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }
}

/// All solutions of `a·x = b`. The particular solution has every free
/// variable set to zero.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<SolutionSet, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let aug = a.hstack(&Matrix::column(a.field(), b.to_vec()));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(SolutionSet {
            particular: None,
            kernel: Vec::new(),
        });
    }
    let f = a.field();
    let mut x = vec![f.zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, n).clone();
    }
    let coeffs = Matrix::from_fn(f, r.rows(), n, |i, j| r.get(i, j).clone());
    Ok(SolutionSet {
        particular: Some(x),
        kernel: kernel_from_rref(&coeffs, &pivots, n),
    })
}

/// The solution with all free variables zero.
pub fn canonical_witness(s: &SolutionSet) -> Result<Vec<Scalar>, LinalgError> {
    s.particular.clone().ok_or(LinalgError::EmptySolutionSet)
}

/// An affine condition on an unknown `rows × cols` matrix, linearized into
/// `coefficients · vec(X) = rhs` with `vec` row-major.
pub struct LinearizedSystem {
    pub coefficients: Matrix,
    pub rhs: Vec<Scalar>,
    pub shape: (usize, usize),
}

impl LinearizedSystem {
    /// Builds the system by probing `residual` at zero and at each matrix unit.
    /// `residual` must be affine in its argument; every entry of every returned
    /// matrix becomes one equation `entry = 0`.
    pub fn probe<F>(field: &Field, rows: usize, cols: usize, residual: F) -> Self
    where
        F: Fn(&Matrix) -> Vec<Matrix> + Sync,
    {
        let flat = |ms: Vec<Matrix>| -> Vec<Scalar> { ms.into_iter().flat_map(Matrix::into_entries).collect() };
        let base = flat(residual(&Matrix::zeros(field, rows, cols)));
        let columns: Vec<Vec<Scalar>> = (0..rows * cols)
            .into_par_iter()
            .map(|k| {
                let mut unit = Matrix::zeros(field, rows, cols);
                unit.set(k / cols, k % cols, field.one());
                let image = flat(residual(&unit));
                image.iter().zip(&base).map(|(x, b)| field.sub(x, b)).collect()
            })
            .collect();
        let n = rows * cols;
        let mut eq_rows = Vec::new();
        let mut rhs = Vec::new();
        for (e, b) in base.iter().enumerate() {
            let row: Vec<Scalar> = (0..n).map(|k| columns[k][e].clone()).collect();
            if row.iter().all(|x| field.is_zero(x)) && field.is_zero(b) {
                continue;
            }
            eq_rows.push(row);
            rhs.push(field.neg(b));
        }
        let coefficients = if eq_rows.is_empty() {
            Matrix::zeros(field, 0, n)
        } else {
            Matrix::from_rows(field, eq_rows).expect("rectangular")
        };
        LinearizedSystem {
            coefficients,
            rhs,
            shape: (rows, cols),
        }
    }

    pub fn solve(&self) -> SolutionSet {
        solve_affine(&self.coefficients, &self.rhs).expect("consistent dimensions")
    }

    pub fn reshape(&self, v: Vec<Scalar>) -> Matrix {
        let (r, c) = self.shape;
        Matrix::from_fn(self.coefficients.field(), r, c, |i, j| v[i * c + j].clone())
    }
}

/// Canonical matrix solution of an affine matrix condition, if any.
pub fn solve_matrix<F>(field: &Field, rows: usize, cols: usize, residual: F) -> Option<Matrix>
where
    F: Fn(&Matrix) -> Vec<Matrix> + Sync,
{
    let sys = LinearizedSystem::probe(field, rows, cols, residual);
    sys.solve().particular.map(|v| sys.reshape(v))
}

/// Basis of the solution space of a homogeneous (linear) matrix condition.
pub fn matrix_kernel<F>(field: &Field, rows: usize, cols: usize, residual: F) -> Vec<Matrix>
where
    F: Fn(&Matrix) -> Vec<Matrix> + Sync,
{
    let sys = LinearizedSystem::probe(field, rows, cols, residual);
    debug_assert!(sys.rhs.iter().all(|x| field.is_zero(x)), "condition is not linear");
    sys.coefficients.kernel().into_iter().map(|v| sys.reshape(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_small_examples() {
        let q = Field::rationals();
        let id = Matrix::identity(&q, 3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::zeros(&q, 2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        let m = Matrix::from_ints(&q, &[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_ints(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn solve_affine_examples() {
        let q = Field::rationals();
        let b: Vec<Scalar> = vec![q.from_int(3), q.from_int(-1)];
        let s = solve_affine(&Matrix::identity(&q, 2), &b).unwrap();
        assert_eq!(s.particular.as_deref(), Some(&b[..]));
        assert!(s.kernel.is_empty());

        let s = solve_affine(&Matrix::zeros(&q, 1, 2), &[q.one()]).unwrap();
        assert!(s.is_empty());
        assert_eq!(canonical_witness(&s), Err(LinalgError::EmptySolutionSet));

        let f2 = Field::prime(2).unwrap();
        let s = solve_affine(&Matrix::from_ints(&f2, &[&[1, 1]]), &[f2.one()]).unwrap();
        assert_eq!(s.particular, Some(vec![f2.one(), f2.zero()]));
        assert_eq!(s.kernel, vec![vec![f2.one(), f2.one()]]);
    }

    #[test]
    fn solve_affine_checks_dimensions() {
        let q = Field::rationals();
        assert!(matches!(
            solve_affine(&Matrix::identity(&q, 2), &[q.one()]),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn canonical_witness_sets_free_variables_to_zero() {
        let q = Field::rationals();
        let s = solve_affine(&Matrix::from_ints(&q, &[&[1, 1]]), &[q.one()]).unwrap();
        assert_eq!(canonical_witness(&s).unwrap(), vec![q.one(), q.zero()]);
    }

    #[test]
    fn kron_examples() {
        let q = Field::rationals();
        let i2 = Matrix::identity(&q, 2);
        let i3 = Matrix::identity(&q, 3);
        assert_eq!(i2.kron(&i3), Matrix::identity(&q, 6));
        let x = Matrix::from_ints(&q, &[&[0, 1], &[1, 0]]);
        let swapped = x.kron(&i2);
        let v: Vec<Scalar> = (0..4).map(|i| q.from_int(i)).collect();
        let w = swapped.mul_vec(&v);
        assert_eq!(w, vec![q.from_int(2), q.from_int(3), q.from_int(0), q.from_int(1)]);
    }

    #[test]
    fn swap_is_involution_and_flips_legs() {
        let q = Field::rationals();
        let s = swap(&q, 2, 3);
        assert_eq!(s.mul(&swap(&q, 3, 2)), Matrix::identity(&q, 6));
        // e_1 ⊗ f_2 ↦ f_2 ⊗ e_1
        let v = unit_vector(&q, 6, flatten_index(&[1, 2], &[2, 3]));
        let w = s.mul_vec(&v);
        assert_eq!(w, unit_vector(&q, 6, flatten_index(&[2, 1], &[3, 2])));
    }

    #[test]
    fn flatten_roundtrip() {
        let dims = [3, 4, 2];
        for flat in 0..24 {
            assert_eq!(flatten_index(&unflatten_index(flat, &dims), &dims), flat);
        }
    }

    #[test]
    fn inverse_of_singular_is_none() {
        let q = Field::rationals();
        assert!(Matrix::from_ints(&q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let m = Matrix::from_ints(&q, &[&[1, 2], &[3, 4]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(&q, 2));
    }

    #[test]
    fn probing_recovers_an_affine_condition() {
        // X·A = B for a 1x2 unknown X
        let q = Field::rationals();
        let a = Matrix::from_ints(&q, &[&[1, 1], &[0, 1]]);
        let b = Matrix::from_ints(&q, &[&[2, 5]]);
        let x = solve_matrix(&q, 1, 2, |x| vec![x.mul(&a).sub(&b)]).unwrap();
        assert_eq!(x, Matrix::from_ints(&q, &[&[2, 3]]));
    }
}
