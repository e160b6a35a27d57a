use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, LinError, Scalar};

/// A dense matrix over an exact field, stored row-major.
///
/// A linear map `V → W` is a `dim W × dim V` matrix; `f * g` is the composite `f ∘ g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Serialized as a list of rows.
impl serde::Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                debug_assert_eq!(s.field(), field);
                data.push(s);
            }
        }
        Mat { field, rows, cols, data }
    }

    /// Row-major construction; panics if `data.len() != rows * cols`.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Mat { field, rows, cols, data }
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, data: &[i64]) -> Mat {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Mat::from_vec(field, rows, cols, data.iter().map(|&n| field.from_i64(n)).collect())
    }

    /// The unit matrix with a single `1` at `(row, col)`.
    pub fn unit(field: Field, rows: usize, cols: usize, row: usize, col: usize) -> Mat {
        let mut m = Mat::zeros(field, rows, cols);
        m.set(row, col, field.one());
        m
    }

    /// The standard basis column vector `e_index` of length `n`.
    pub fn basis_vector(field: Field, n: usize, index: usize) -> Mat {
        Mat::unit(field, n, 1, index, 0)
    }

    /// The swap map `V ⊗ W → W ⊗ V`.
    pub fn swap(field: Field, dim_v: usize, dim_w: usize) -> Mat {
        Mat::leg_permutation(field, &[dim_v, dim_w], &[1, 0])
    }

    /// The map `V₀ ⊗ … ⊗ V_{n-1} → V_{perm[0]} ⊗ … ⊗ V_{perm[n-1]}` rearranging tensor legs.
    pub fn leg_permutation(field: Field, dims: &[usize], perm: &[usize]) -> Mat {
        assert_eq!(dims.len(), perm.len(), "permutation length");
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&k| dims[k]).collect();
        let mut m = Mat::zeros(field, total, total);
        let mut digits = vec![0usize; dims.len()];
        for src in 0..total {
            let mut rest = src;
            for k in (0..dims.len()).rev() {
                digits[k] = rest % dims[k];
                rest /= dims[k];
            }
            let mut dst = 0;
            for (k, &leg) in perm.iter().enumerate() {
                dst = dst * out_dims[k] + digits[leg];
            }
            m.set(dst, src, field.one());
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[row * self.cols + col] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Mat {
        Mat::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, cols.len(), |i, k| self.get(i, cols[k]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), self.cols, |k, j| self.get(rows[k], j).clone())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Reinterprets the row-major entry list with a new shape.
    pub fn reshape(&self, rows: usize, cols: usize) -> Mat {
        assert_eq!(rows * cols, self.rows * self.cols, "reshape size");
        Mat::from_vec(self.field, rows, cols, self.data.clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_vec(self.field, self.rows, self.cols, self.data.iter().map(|x| x * s).collect())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    /// Stacks several matrices with equal column count; `cols` is used when the list is empty.
    pub fn vstack_all(field: Field, cols: usize, parts: &[Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for part in parts {
            assert_eq!(part.cols, cols, "vstack column mismatch");
            rows += part.rows;
            data.extend(part.data.iter().cloned());
        }
        Mat::from_vec(field, rows, cols, data)
    }

    /// Composite `self ∘ other`; panics on shape or field mismatch.
    pub fn compose(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "cannot compose {}x{} after {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        if self.field == Field::Rational {
            return self.compose_rational(other);
        }
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// Rational composite on integer numerators: rows of `self` and columns of `other` are
    /// cleared of denominators first, so each output entry is reduced only once.
    fn compose_rational(&self, other: &Mat) -> Mat {
        let numer = |s: &Scalar| match s {
            Scalar::Q(q) => q.clone(),
            Scalar::Fp { .. } => unreachable!("residue in rational matrix"),
        };
        let lcm_of = |it: &mut dyn Iterator<Item = &Scalar>| {
            it.fold(BigInt::one(), |l, s| match s {
                Scalar::Q(q) if !q.is_integer() => l.lcm(q.denom()),
                _ => l,
            })
        };
        let row_scale: Vec<BigInt> = (0..self.rows).map(|i| lcm_of(&mut self.row(i).iter())).collect();
        let col_scale: Vec<BigInt> = (0..other.cols)
            .map(|j| lcm_of(&mut (0..other.rows).map(|k| other.get(k, j))))
            .collect();
        let left: Vec<Vec<(usize, BigInt)>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&k| !self.get(i, k).is_zero())
                    .map(|k| {
                        let q = numer(self.get(i, k)) * BigRational::from_integer(row_scale[i].clone());
                        (k, q.to_integer())
                    })
                    .collect()
            })
            .collect();
        let right: Vec<Vec<(usize, BigInt)>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .filter(|&j| !other.get(k, j).is_zero())
                    .map(|j| {
                        let q = numer(other.get(k, j)) * BigRational::from_integer(col_scale[j].clone());
                        (j, q.to_integer())
                    })
                    .collect()
            })
            .collect();
        let mut data = Vec::with_capacity(self.rows * other.cols);
        let mut acc = vec![BigInt::zero(); other.cols];
        for (i, row) in left.iter().enumerate() {
            for a in acc.iter_mut() {
                a.set_zero();
            }
            for (k, a) in row {
                for (j, b) in &right[*k] {
                    acc[*j] += a * b;
                }
            }
            for (j, sum) in acc.iter().enumerate() {
                data.push(if sum.is_zero() {
                    Field::Rational.zero()
                } else {
                    Scalar::Q(BigRational::new(sum.clone(), &row_scale[i] * &col_scale[j]))
                });
            }
        }
        Mat::from_vec(Field::Rational, self.rows, other.cols, data)
    }

    /// Checked composite.
    pub fn try_compose(&self, other: &Mat) -> Result<Mat, LinError> {
        if self.field != other.field {
            return Err(LinError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinError::DimensionMismatch {
                op: "compose",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(self.compose(other))
    }

    /// Kronecker product; the first factor indexes the major position.
    pub fn kron(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "field mismatch");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Mat::zeros(self.field, rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of a list; the empty product is the 1×1 identity.
    pub fn kron_all(field: Field, factors: &[&Mat]) -> Mat {
        factors
            .iter()
            .fold(Mat::identity(field, 1), |acc, f| acc.kron(f))
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat, LinError> {
        self.check_same(other, "add")?;
        Ok(self + other)
    }

    fn check_same(&self, other: &Mat, op: &'static str) -> Result<(), LinError> {
        if self.field != other.field {
            return Err(LinError::FieldMismatch);
        }
        if self.shape() != other.shape() {
            return Err(LinError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape(), "comparing matrices of different shape");
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Maps every entry into `field` (rationals reduce mod p).
    pub fn convert(&self, field: Field) -> Result<Mat, LinError> {
        let data = self
            .data
            .iter()
            .map(|s| field.reduce(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Mat::from_vec(field, self.rows, self.cols, data))
    }
}

fn elementwise(a: &Mat, b: &Mat, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Mat {
    assert_eq!(a.field, b.field, "field mismatch");
    assert_eq!(a.shape(), b.shape(), "shape mismatch {:?} vs {:?}", a.shape(), b.shape());
    Mat::from_vec(
        a.field,
        a.rows,
        a.cols,
        a.data.iter().zip(&b.data).map(|(x, y)| op(x, y)).collect(),
    )
}

macro_rules! mat_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Mat> for &Mat {
            type Output = Mat;
            fn $method(self, rhs: &Mat) -> Mat {
                $body(self, rhs)
            }
        }
        impl $trait<Mat> for Mat {
            type Output = Mat;
            fn $method(self, rhs: Mat) -> Mat {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Mat> for Mat {
            type Output = Mat;
            fn $method(self, rhs: &Mat) -> Mat {
                $body(&self, rhs)
            }
        }
        impl $trait<Mat> for &Mat {
            type Output = Mat;
            fn $method(self, rhs: Mat) -> Mat {
                $body(self, &rhs)
            }
        }
    };
}

mat_binop!(Mul, mul, |a: &Mat, b: &Mat| a.compose(b));
mat_binop!(Add, add, |a: &Mat, b: &Mat| elementwise(a, b, |x, y| x + y));
mat_binop!(Sub, sub, |a: &Mat, b: &Mat| elementwise(a, b, |x, y| x - y));

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::from_vec(self.field, self.rows, self.cols, self.data.iter().map(|x| -x).collect())
    }
}

impl Neg for Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        -&self
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Checked Kronecker product.
pub fn kron(a: &Mat, b: &Mat) -> Result<Mat, LinError> {
    if a.field() != b.field() {
        return Err(LinError::FieldMismatch);
    }
    Ok(a.kron(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn swap_squares_to_identity() {
        let s = Mat::swap(q(), 2, 3);
        let back = Mat::swap(q(), 3, 2);
        assert_eq!(&back * &s, Mat::identity(q(), 6));
    }

    #[test]
    fn kron_is_first_factor_major() {
        let a = Mat::from_i64(q(), 2, 1, &[1, 2]);
        let b = Mat::from_i64(q(), 2, 1, &[3, 5]);
        assert_eq!(a.kron(&b), Mat::from_i64(q(), 4, 1, &[3, 5, 6, 10]));
    }

    #[test]
    fn swap_exchanges_kron_factors() {
        let a = Mat::from_i64(q(), 2, 2, &[1, 2, 3, 4]);
        let b = Mat::from_i64(q(), 3, 1, &[1, -1, 7]);
        let lhs = Mat::swap(q(), 2, 3) * a.kron(&b);
        let rhs = b.kron(&a) * Mat::swap(q(), 2, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leg_permutation_cycles() {
        let dims = [2, 3, 2];
        let p = Mat::leg_permutation(q(), &dims, &[1, 2, 0]);
        let p_inv = Mat::leg_permutation(q(), &[3, 2, 2], &[2, 0, 1]);
        assert_eq!(&p_inv * &p, Mat::identity(q(), 12));
        // e_1 ⊗ e_2 ⊗ e_0 goes to e_2 ⊗ e_0 ⊗ e_1
        let src = 6 + 2 * 2;
        let dst = 2 * 4 + 1;
        assert!(p.get(dst, src).is_one());
    }

    #[test]
    fn checked_ops_report_errors() {
        let a = Mat::zeros(q(), 2, 3);
        let b = Mat::zeros(q(), 2, 3);
        assert!(matches!(a.try_compose(&b), Err(LinError::DimensionMismatch { .. })));
        let c = Mat::zeros(Field::prime(3).unwrap(), 2, 3);
        assert!(matches!(kron(&a, &c), Err(LinError::FieldMismatch)));
    }
}
