use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::Scalar;
use super::subspace::Subspace;
use super::LinalgError;

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    /// Single-entry matrix `E_ij`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[(i, j)] = Scalar::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (k, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::Ragged { row: k, expected: ncols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: nrows, cols: ncols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Self { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn row_vector(v: &[Scalar]) -> Self {
        Self { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (k, x) in d.iter().enumerate() {
            m[(k, k)] = x.clone();
        }
        m
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_list(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(Scalar::conj).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|k| self[(k, k)].clone()).sum()
    }

    pub fn checked_mul(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != o.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(k, c)];
                    if !b.is_zero() {
                        out.data[r * o.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, o: &Matrix) -> Result<(), LinalgError> {
        if self.shape() != o.shape() {
            return Err(LinalgError::Shape(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(o)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(o)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "block out of range");
        Self::from_fn(nr, nc, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(a.rows, a.cols, b);
        m
    }

    pub fn kron(&self, o: &Matrix) -> Matrix {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            &self[(r / o.rows, c / o.cols)] * &o[(r % o.rows, c % o.cols)]
        })
    }

    pub fn vstack(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != o.cols && self.rows > 0 && o.rows > 0 {
            return Err(LinalgError::Shape("vstack column mismatch".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { o.cols };
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Self { rows: self.rows + o.rows, cols, data })
    }

    pub fn hstack(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        Ok(self.transpose().vstack(&o.transpose())?.transpose())
    }

    /// Row reduction; pivots are taken as the first nonzero entry scanning columns
    /// left to right and rows top to bottom, so results are reproducible.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = m[(prow, c)].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for k in c..m.cols {
                    let v = &m.data[prow * m.cols + k] * &inv;
                    m.data[prow * m.cols + k] = v;
                }
            }
            let pivot_row: Vec<Scalar> = m.row(prow)[c..].to_vec();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let f = m[(r, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (k, p) in pivot_row.iter().enumerate() {
                    if !p.is_zero() {
                        let idx = r * m.cols + c + k;
                        m.data[idx] -= &(&f * p);
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Null space `{x : self * x = 0}` as a subspace of the column space dimension.
    pub fn kernel(&self) -> Subspace {
        Subspace::from_canonical_basis(self.cols, self.kernel_vectors())
    }

    /// A kernel basis in the standard free-variable form (not re-reduced).
    pub fn kernel_vectors(&self) -> Vec<Vec<Scalar>> {
        let ech = self.echelon();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &ech.pivots {
                v[p] = true;
            }
            v
        };
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut x = vec![Scalar::zero(); self.cols];
            x[f] = Scalar::one();
            for (row, &p) in ech.pivots.iter().enumerate() {
                x[p] = -&ech.reduced[(row, f)];
            }
            out.push(x);
        }
        out
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, &self.transpose().row_list())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.cols, &self.row_list())
    }

    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if r != c {
                m.swap_rows(r, c);
                det = -det;
            }
            let p = m[(c, c)].clone();
            det = &det * &p;
            let inv = p.inv()?;
            for r2 in c + 1..n {
                let f = &m[(r2, c)] * &inv;
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let v = &f * &m[(c, k)];
                    m[(r2, k)] -= &v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        Ok(ech.reduced.block(0, n, n, n))
    }

    /// Some solution `x` of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Shape("right-hand side length".into()));
        }
        let aug = self.hstack(&Matrix::column_vector(b))?;
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Flatten row-major into a vector of length `rows * cols`.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!("{} entries for {}x{}", data.len(), rows, cols)));
        }
        Ok(Self { rows, cols, data })
    }

    /// Parse `a,b;c,d` (rows split by `;`, entries by `,`). The shape must be given
    /// for the keyword `zero`.
    pub fn parse_with_shape(s: &str, shape: Option<(usize, usize)>) -> Result<Matrix, LinalgError> {
        let t = s.trim();
        if t == "zero" {
            let (r, c) = shape.ok_or_else(|| LinalgError::Parse("`zero` needs a known shape".into()))?;
            return Ok(Matrix::zeros(r, c));
        }
        let rows: Vec<Vec<Scalar>> = t
            .split(';')
            .map(|row| row.split(',').map(str::parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        let m = Matrix::from_rows(rows)?;
        if let Some(sh) = shape {
            if m.shape() != sh {
                return Err(LinalgError::Shape(format!(
                    "expected {}x{} matrix, got {}x{}",
                    sh.0, sh.1, m.rows, m.cols
                )));
            }
        }
        Ok(m)
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        &(self * o) - &(o * self)
    }

    pub fn anticommutator(&self, o: &Matrix) -> Matrix {
        &(self * o) + &(o * self)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Operator forms panic on shape mismatch; the `checked_*` methods do not.
impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        self.checked_mul(o).expect("matrix product shape")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        self.checked_add(o).expect("matrix sum shape")
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        self.checked_sub(o).expect("matrix difference shape")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Matrix {
    /// Literal form `a,b;c,d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl FromStr for Matrix {
    type Err = LinalgError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Matrix::parse_with_shape(s, None)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.row_list().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Matrix {
        s.parse().unwrap()
    }

    #[test]
    fn rank_of_singular_example() {
        assert_eq!(m("1,2;2,4").rank(), 1);
        let k = m("1,2;2,4").kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Scalar::from_int(-2), Scalar::one()]));
    }

    #[test]
    fn gaussian_rank_example() {
        assert_eq!(m("1,i;i,-1").rank(), 1);
        assert_eq!(m("1,i;-i,1").rank(), 1);
        assert_eq!(m("1,i;i,1").rank(), 2);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1,2;3".parse::<Matrix>().is_err());
        assert!("1,x".parse::<Matrix>().is_err());
        assert!(Matrix::parse_with_shape("zero", None).is_err());
        assert_eq!(Matrix::parse_with_shape("zero", Some((2, 3))).unwrap(), Matrix::zeros(2, 3));
        assert!(Matrix::parse_with_shape("1,2", Some((2, 1))).is_err());
    }

    #[test]
    fn literal_round_trip() {
        let a = m("1/2+3/4*i,0;-i,7");
        assert_eq!(m(&a.to_string()), a);
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m("2,i;1,1");
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert_eq!(a.determinant().unwrap(), "2-i".parse().unwrap());
        assert!(m("1,2;2,4").inverse().is_err());
        assert_eq!(m("1,2;2,4").determinant().unwrap(), Scalar::zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m("1,2;2,4");
        let x = a.solve(&[Scalar::from_int(3), Scalar::from_int(6)]).unwrap().unwrap();
        assert_eq!(a.apply(&x).unwrap(), vec![Scalar::from_int(3), Scalar::from_int(6)]);
        assert!(a.solve(&[Scalar::from_int(3), Scalar::from_int(5)]).unwrap().is_none());
    }

    #[test]
    fn shape_errors() {
        assert!(m("1,2").checked_mul(&m("1,2")).is_err());
        assert!(m("1,2").checked_add(&m("1;2")).is_err());
        assert!(m("1,2").determinant().is_err());
    }
}
