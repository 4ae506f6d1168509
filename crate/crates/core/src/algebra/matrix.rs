//! Dense matrices over a [`Field`] context: reduced row echelon form,
//! nullspaces, and congruence diagonalization of symmetric 3×3 forms.

use super::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Copy + Eq + core::fmt::Debug> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![f.zero(); rows * cols])
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)]);
            }
        }
        Matrix::new(self.cols, self.rows, data)
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn mul_row_vector<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![f.zero(); self.cols];
        for i in 0..self.rows {
            if f.is_zero(v[i]) {
                continue;
            }
            for j in 0..self.cols {
                out[j] = f.add(out[j], f.mul(v[i], self[(i, j)]));
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form, pivoting on the first
    /// nonzero entry of each column in order. Returns the pivot columns.
    pub fn rref<F: Field<Elem = E>>(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self[(i, col)])) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self[(r, col)]).expect("pivot nonzero");
            for j in col..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && !f.is_zero(self[(i, col)]) {
                    let factor = self[(i, col)];
                    for j in col..self.cols {
                        let t = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], t);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis of the right nullspace `{x : M·x = 0}`, one vector per row of the
    /// returned matrix, in reduced-echelon canonical form. `None` when the
    /// nullspace is trivial.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Option<Matrix<E>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return None;
        }
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis[(k, fc)] = f.one();
            for (pi, &pc) in pivots.iter().enumerate() {
                basis[(k, pc)] = f.neg(m[(pi, fc)]);
            }
        }
        // canonicalize the basis itself
        basis.rref(f);
        Some(basis)
    }

    /// Basis of the left nullspace `{w : w·M = 0}` as rows, in
    /// reduced-echelon canonical form.
    pub fn left_nullspace<F: Field<Elem = E>>(&self, f: &F) -> Option<Matrix<E>> {
        self.transpose().kernel(f)
    }

    /// Whether `v` lies in the row span.
    pub fn row_span_contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut m = Matrix::new(self.rows + 1, self.cols, {
            let mut d = self.data.clone();
            d.extend_from_slice(v);
            d
        });
        m.rref(f).len() == self.rank(f)
    }

    /// Inverse of a square matrix, by row reduction of `[A | I]`.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Matrix<E>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = f.one();
        }
        let pivots = aug.rref(f);
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut out = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&i| !f.is_zero(m[(i, col)])) else {
                return f.zero();
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = f.neg(det);
            }
            det = f.mul(det, m[(col, col)]);
            let inv = f.inv(m[(col, col)]).expect("pivot nonzero");
            for i in col + 1..n {
                if !f.is_zero(m[(i, col)]) {
                    let factor = f.mul(m[(i, col)], inv);
                    for j in col..n {
                        let t = f.mul(factor, m[(col, j)]);
                        m[(i, j)] = f.sub(m[(i, j)], t);
                    }
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<E> core::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> core::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

/// Congruence diagonalization of a symmetric 3×3 matrix: returns `(T, d)` with
/// `Tᵗ·M·T = diag(d)`, `T` invertible, and zero diagonal entries sorted last.
pub fn diagonalize_symmetric3<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, [F::Elem; 3]) {
    assert_eq!((m.rows(), m.cols()), (3, 3));
    debug_assert!({
        (0..3).all(|i| (0..3).all(|j| m[(i, j)] == m[(j, i)]))
    });
    let mut a = m.clone();
    let mut t = Matrix::identity(f, 3);
    let two = f.add(f.one(), f.one());

    // col_op: V_dst ← V_dst + c·V_src applied as congruence (column, then row)
    let col_op = |a: &mut Matrix<F::Elem>, t: &mut Matrix<F::Elem>, dst: usize, src: usize, c: F::Elem| {
        for i in 0..3 {
            let v = f.mul(c, a[(i, src)]);
            a[(i, dst)] = f.add(a[(i, dst)], v);
        }
        for j in 0..3 {
            let v = f.mul(c, a[(src, j)]);
            a[(dst, j)] = f.add(a[(dst, j)], v);
        }
        for i in 0..3 {
            let v = f.mul(c, t[(i, src)]);
            t[(i, dst)] = f.add(t[(i, dst)], v);
        }
    };
    let swap_cong = |a: &mut Matrix<F::Elem>, t: &mut Matrix<F::Elem>, x: usize, y: usize| {
        if x == y {
            return;
        }
        for i in 0..3 {
            let tmp = a[(i, x)];
            a[(i, x)] = a[(i, y)];
            a[(i, y)] = tmp;
        }
        for j in 0..3 {
            let tmp = a[(x, j)];
            a[(x, j)] = a[(y, j)];
            a[(y, j)] = tmp;
        }
        for i in 0..3 {
            let tmp = t[(i, x)];
            t[(i, x)] = t[(i, y)];
            t[(i, y)] = tmp;
        }
    };

    for k in 0..3 {
        if f.is_zero(a[(k, k)]) {
            // bring a nonzero diagonal entry to position k, or create one
            if let Some(i) = (k + 1..3).find(|&i| !f.is_zero(a[(i, i)])) {
                swap_cong(&mut a, &mut t, k, i);
            } else if let Some((i, j)) = (k..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .find(|&(i, j)| !f.is_zero(a[(i, j)]))
            {
                // V_i ← V_i + V_j makes the (i,i) entry 2·a_ij ≠ 0 (char ≠ 2)
                debug_assert!(!f.is_zero(two));
                col_op(&mut a, &mut t, i, j, f.one());
                swap_cong(&mut a, &mut t, k, i);
            } else {
                break; // remaining block is zero
            }
        }
        let pivot_inv = f.inv(a[(k, k)]).expect("pivot nonzero");
        for i in k + 1..3 {
            if !f.is_zero(a[(k, i)]) {
                let c = f.neg(f.mul(a[(k, i)], pivot_inv));
                col_op(&mut a, &mut t, i, k, c);
            }
        }
    }

    // zeros last
    for k in 0..3 {
        if f.is_zero(a[(k, k)]) {
            if let Some(i) = (k + 1..3).find(|&i| !f.is_zero(a[(i, i)])) {
                swap_cong(&mut a, &mut t, k, i);
            }
        }
    }
    debug_assert!((0..3).all(|i| (0..3).all(|j| i == j || f.is_zero(a[(i, j)]))));
    (t, [a[(0, 0)], a[(1, 1)], a[(2, 2)]])
}
