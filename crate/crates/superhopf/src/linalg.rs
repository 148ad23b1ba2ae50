//! Dense exact linear algebra over a [`Field`]: row reduction, kernels,
//! canonical subspaces and linear maps.

use crate::field::Field;

pub type Vector<F> = Vec<F>;

pub fn zero_vec<F: Field>(n: usize) -> Vector<F> {
    vec![F::zero(); n]
}

pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vec(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += c * v`
pub fn axpy<F: Field>(acc: &mut [F], c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

pub fn scale<F: Field>(c: &F, v: &[F]) -> Vector<F> {
    v.iter().map(|x| c.mul_ref(x)).collect()
}

pub fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    let mut out = a.to_vec();
    for (o, y) in out.iter_mut().zip(b) {
        *o += y;
    }
    out
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<F>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let (lo, hi) = (i * other.cols, (i + 1) * other.cols);
                axpy(&mut out.data[lo..hi], a, other.row(k));
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.rows, "shape mismatch");
        let mut out = zero_vec(self.cols);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j).mul_ref(&inv);
                self.set(r, j, v);
            }
            let pivot_row: Vector<F> = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let neg = -f;
                let (lo, hi) = (i * self.cols, (i + 1) * self.cols);
                axpy(&mut self.data[lo..hi], &neg, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vector<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vec(self.cols);
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of {w : w M = 0}.
    pub fn left_kernel(&self) -> Vec<Vector<F>> {
        self.transpose().kernel()
    }

    /// Some x with M x = b.
    pub fn solve(&self, b: &[F]) -> Option<Vector<F>> {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// A subspace of F^n held as a basis in reduced row echelon form, so two
/// subspaces are equal exactly when their matrices are.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: vec![], pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vec(ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector<F>>>(ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.rows.clone(), self.ambient)
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[F]) -> Vector<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                axpy(&mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vector<F>> {
        let coords: Vector<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = zero_vec(self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            axpy(&mut rebuilt, c, row);
        }
        if rebuilt.as_slice() == v {
            Some(coords)
        } else {
            None
        }
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector<F>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        for x in w.iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &w);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Self) -> Self {
        // solve a·A = b·B
        let k = self.dim();
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        if stacked.is_empty() {
            return Self::zero(self.ambient);
        }
        let m = Matrix::from_rows(stacked, self.ambient);
        let rel = m.left_kernel();
        Self::span(
            self.ambient,
            rel.into_iter().map(|c| {
                let mut v = zero_vec(self.ambient);
                for (ci, row) in c[..k].iter().zip(&self.rows) {
                    axpy(&mut v, ci, row);
                }
                v
            }),
        )
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    /// Coordinates on the complement: indices of non-pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| self.pivots.binary_search(c).is_err()).collect()
    }
}

/// A linear map F^source → F^target; column j is the image of e_j.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<F> {
    pub source: usize,
    pub target: usize,
    pub matrix: Matrix<F>,
}

impl<F: Field> LinearMap<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        LinearMap { source: matrix.cols, target: matrix.rows, matrix }
    }

    pub fn from_images(images: &[Vector<F>], target: usize) -> Self {
        Self::new(Matrix::from_columns(images, target))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn apply(&self, v: &[F]) -> Vector<F> {
        self.matrix.apply(v)
    }

    pub fn image_of_basis(&self, j: usize) -> Vector<F> {
        self.matrix.column(j)
    }

    pub fn compose(&self, first: &Self) -> Self {
        Self::new(self.matrix.mul(&first.matrix))
    }

    pub fn is_bijective(&self) -> bool {
        self.source == self.target && self.matrix.rank() == self.source
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(Self::new)
    }
}

/// Coordinates with respect to an arbitrary linearly independent family.
#[derive(Clone, Debug)]
pub struct Frame<F> {
    pub vectors: Vec<Vector<F>>,
    rows: Vec<usize>,
    inv: Matrix<F>,
}

impl<F: Field> Frame<F> {
    /// `None` when the vectors are dependent.
    pub fn new(vectors: Vec<Vector<F>>, ambient: usize) -> Option<Self> {
        let m = vectors.len();
        let mut t = Matrix::from_rows(vectors.clone(), ambient);
        let rows = t.rref();
        if rows.len() < m {
            return None;
        }
        let square = Matrix::from_rows(
            rows.iter().map(|&r| vectors.iter().map(|v| v[r].clone()).collect()).collect(),
            m,
        );
        let inv = square.inverse()?;
        Some(Frame { vectors, rows, inv })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Coordinates of `v`, if it lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vector<F>> {
        let sel: Vector<F> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.apply(&sel);
        let mut rebuilt = zero_vec(v.len());
        for (ci, b) in c.iter().zip(&self.vectors) {
            axpy(&mut rebuilt, ci, b);
        }
        (rebuilt.as_slice() == v).then_some(c)
    }
}
