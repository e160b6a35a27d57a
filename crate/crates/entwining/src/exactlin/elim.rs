//! Row reduction. Over ℚ the forward pass is fraction-free (Bareiss) on integer rows; over
//! 𝔽_p it is plain Gauss-Jordan. Both end in the reduced row echelon form, which is
//! canonical, so results never depend on pivot choices.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{inv_mod, mul_mod};
use super::{Field, LinError, Mat, Scalar};

/// Reduced row echelon form: the nonzero rows of the RREF and their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rref: Mat,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.rref.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.rref.cols()).filter(|&j| !is_pivot[j]).collect()
    }
}

pub fn echelon(m: &Mat) -> Echelon {
    match m.field() {
        Field::Rational => echelon_rational(m),
        Field::Prime { p } => echelon_prime(m, p),
    }
}

pub fn rank(m: &Mat) -> usize {
    echelon(m).rank()
}

fn echelon_rational(m: &Mat) -> Echelon {
    let cols = m.cols();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        if row.iter().all(Scalar::is_zero) {
            continue;
        }
        let mut lcm = BigInt::one();
        for s in row {
            if let Scalar::Q(q) = s {
                lcm = lcm.lcm(q.denom());
            }
        }
        let mut ints: Vec<BigInt> = row
            .iter()
            .map(|s| match s {
                Scalar::Q(q) => q.numer() * (&lcm / q.denom()),
                Scalar::Fp { .. } => unreachable!("residue in rational matrix"),
            })
            .collect();
        // primitive with positive leading entry, so proportional rows coincide
        let gcd = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let scale = if lead_negative { -gcd } else { gcd };
        for x in ints.iter_mut() {
            *x = &*x / &scale;
        }
        if seen.insert(ints.clone()) {
            rows.push(ints);
        }
    }
    if rows.len() > 1 {
        // Eliminate only rows independent modulo a large prime, then confirm exactly that
        // the result spans every row; an unlucky prime falls back to all rows.
        let chosen: Vec<Vec<BigInt>> = independent_mod_p(&rows, SCREEN_PRIME)
            .into_iter()
            .map(|i| rows[i].clone())
            .collect();
        if chosen.len() < rows.len() {
            let candidate = bareiss(chosen, cols);
            if spans_all(&candidate, &rows) {
                return candidate;
            }
        }
    }
    bareiss(rows, cols)
}

/// `2⁶¹ − 1`, used to screen out dependent rows before exact elimination.
const SCREEN_PRIME: u64 = (1 << 61) - 1;

/// Indices of a maximal set of rows independent over `𝔽_p`, in input order.
fn independent_mod_p(rows: &[Vec<BigInt>], p: u64) -> Vec<usize> {
    let modulus = BigInt::from(p);
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (index, row) in rows.iter().enumerate() {
        let mut v: Vec<u64> = row
            .iter()
            .map(|x| x.mod_floor(&modulus).try_into().expect("residue fits"))
            .collect();
        for (pc, b) in &basis {
            let factor = v[*pc];
            if factor == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if *y != 0 {
                    *x = (*x + p - mul_mod(factor, *y, p)) % p;
                }
            }
        }
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            continue;
        };
        let inv = inv_mod(v[pc], p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        basis.push((pc, v));
        chosen.push(index);
    }
    chosen
}

/// Whether every row lies in the row space of `ech` (which is spanned by some of the rows).
fn spans_all(ech: &Echelon, rows: &[Vec<BigInt>]) -> bool {
    let kernel = kernel_from_echelon(ech, Field::Rational);
    (0..kernel.cols()).all(|k| {
        let column = kernel.column(k);
        let lcm = column.entries().iter().fold(BigInt::one(), |l, s| match s {
            Scalar::Q(q) => l.lcm(q.denom()),
            Scalar::Fp { .. } => unreachable!("residue in rational matrix"),
        });
        let ints: Vec<BigInt> = column
            .entries()
            .iter()
            .map(|s| match s {
                Scalar::Q(q) => q.numer() * (&lcm / q.denom()),
                Scalar::Fp { .. } => unreachable!("residue in rational matrix"),
            })
            .collect();
        rows.iter().all(|row| {
            row.iter()
                .zip(&ints)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    })
}

/// Fraction-free forward elimination followed by normalization and back-substitution.
fn bareiss(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col..cols {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                let (quot, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division is exact");
                row[j] = quot;
            }
        }
        prev = rows[r][col].clone();
        pivots.push(col);
        r += 1;
        let mut i = r;
        while i < rows.len() {
            if rows[i].iter().all(Zero::is_zero) {
                rows.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }
    rows.truncate(r);

    // Normalize and back-substitute over ℚ.
    let mut reduced: Vec<Vec<BigRational>> = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let pivot = row[pc].clone();
            row.into_iter()
                .map(|x| BigRational::new(x, pivot.clone()))
                .collect()
        })
        .collect();
    for k in (0..reduced.len()).rev() {
        let pc = pivots[k];
        let (above, rest) = reduced.split_at_mut(k);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for j in pc..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &factor * &pivot_row[j];
                }
            }
        }
    }
    let rank = reduced.len();
    let data = reduced.into_iter().flatten().map(Scalar::Q).collect();
    Echelon {
        rref: Mat::from_vec(Field::Rational, rank, cols, data),
        pivots,
    }
}

fn echelon_prime(m: &Mat, p: u64) -> Echelon {
    let cols = m.cols();
    let mut seen = HashSet::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..m.rows() {
        let mut row: Vec<u64> = m
            .row(i)
            .iter()
            .map(|s| match s {
                Scalar::Fp { v, .. } => *v,
                Scalar::Q(_) => unreachable!("rational in residue matrix"),
            })
            .collect();
        let Some(&lead) = row.iter().find(|&&v| v != 0) else {
            continue;
        };
        // monic, so proportional rows coincide
        let inv = inv_mod(lead, p);
        for x in row.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        if seen.insert(row.clone()) {
            rows.push(row);
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for j in col..cols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(factor, pivot_row[j], p)) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        let mut i = r;
        while i < rows.len() {
            if rows[i].iter().all(|&v| v == 0) {
                rows.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }
    rows.truncate(r);
    let data = rows
        .into_iter()
        .flatten()
        .map(|v| Scalar::Fp { v, p })
        .collect();
    Echelon {
        rref: Mat::from_vec(Field::Prime { p }, r, cols, data),
        pivots,
    }
}

/// A subspace given by independent basis columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub ambient_dim: usize,
    pub basis: Mat,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of the columns of `vectors` in this basis, if they lie in the subspace.
    pub fn coordinates(&self, vectors: &Mat) -> Option<Mat> {
        solve_matrix(&self.basis, vectors).expect("ambient dimension matches")
    }
}

/// A presentation of `ambient / image(relations)`.
///
/// `projection` (q × ambient) has kernel exactly the image of `relations`, and
/// `section` (ambient × q) satisfies `projection ∘ section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    pub relations: Mat,
    pub projection: Mat,
    pub section: Mat,
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

/// A basis of the kernel, one vector per free column of the RREF (`1` at the free column,
/// minus the RREF column at the pivots).
pub fn kernel_basis(m: &Mat) -> SubspaceBasis {
    let ech = echelon(m);
    SubspaceBasis {
        ambient_dim: m.cols(),
        basis: kernel_from_echelon(&ech, m.field()),
    }
}

fn kernel_from_echelon(ech: &Echelon, field: Field) -> Mat {
    let n = ech.rref.cols();
    let free = ech.free_columns();
    let mut basis = Mat::zeros(field, n, free.len());
    for (k, &fc) in free.iter().enumerate() {
        basis.set(fc, k, field.one());
        for (r, &pc) in ech.pivots.iter().enumerate() {
            let v = ech.rref.get(r, fc);
            if !v.is_zero() {
                basis.set(pc, k, -v);
            }
        }
    }
    basis
}

pub fn cokernel(m: &Mat) -> QuotientPresentation {
    let field = m.field();
    let ech = echelon(&m.transpose());
    let projection = kernel_from_echelon(&ech, field).transpose();
    let free = ech.free_columns();
    let mut section = Mat::zeros(field, m.rows(), free.len());
    for (k, &fc) in free.iter().enumerate() {
        section.set(fc, k, field.one());
    }
    QuotientPresentation {
        ambient_dim: m.rows(),
        relations: m.clone(),
        projection,
        section,
    }
}

/// Solution set of `a x = b`: one particular solution plus the kernel of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Mat,
    pub nullspace: SubspaceBasis,
}

/// Solves `a x = b` for a column `b`; `None` iff `b` is not in the image of `a`.
pub fn solve_affine(a: &Mat, b: &Mat) -> Result<Option<AffineSolution>, LinError> {
    let Some(particular) = solve_matrix(a, b)? else {
        return Ok(None);
    };
    Ok(Some(AffineSolution {
        particular,
        nullspace: kernel_basis(a),
    }))
}

/// Some `x` with `a x = b` for a block of right-hand sides, or `None` if inconsistent.
///
/// Free variables are set to zero, so the answer is canonical.
pub fn solve_matrix(a: &Mat, b: &Mat) -> Result<Option<Mat>, LinError> {
    if a.field() != b.field() {
        return Err(LinError::FieldMismatch);
    }
    if a.rows() != b.rows() {
        return Err(LinError::DimensionMismatch {
            op: "solve",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let n = a.cols();
    let ech = echelon(&a.hstack(b));
    if ech.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Mat::zeros(a.field(), n, b.cols());
    for (r, &pc) in ech.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(pc, j, ech.rref.get(r, n + j).clone());
        }
    }
    Ok(Some(x))
}

/// Solves `x ∘ a = b` for `x`, i.e. factors `b` through `a`.
pub fn solve_left(a: &Mat, b: &Mat) -> Result<Option<Mat>, LinError> {
    Ok(solve_matrix(&a.transpose(), &b.transpose())?.map(|x| x.transpose()))
}

/// The pivot columns of `m`, a basis of its column space.
pub fn image_basis(m: &Mat) -> SubspaceBasis {
    let ech = echelon(m);
    SubspaceBasis {
        ambient_dim: m.rows(),
        basis: m.select_columns(&ech.pivots),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> Vec<Field> {
        vec![Field::Rational, Field::prime(7).unwrap()]
    }

    #[test]
    fn rref_of_known_matrix() {
        let m = Mat::from_i64(Field::Rational, 3, 4, &[2, 4, 0, 2, 1, 2, 1, 3, 3, 6, 1, 5]);
        let ech = echelon(&m);
        assert_eq!(ech.pivots, vec![0, 2]);
        assert_eq!(ech.rref.to_string(), "[1 2 0 1]\n[0 0 1 2]\n");
    }

    #[test]
    fn kernel_and_cokernel_are_exact() {
        for f in fields() {
            let m = Mat::from_i64(f, 3, 4, &[2, 4, 0, 2, 1, 2, 1, 3, 3, 6, 1, 5]);
            let k = kernel_basis(&m).basis;
            assert_eq!(k.cols(), 2);
            assert!((&m * &k).is_zero());
            let c = cokernel(&m);
            assert_eq!(c.projection.rows(), 1);
            assert!((&c.projection * &m).is_zero());
            assert_eq!(&c.projection * &c.section, Mat::identity(f, 1));
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = Field::Rational;
        let a = Mat::from_i64(f, 2, 2, &[1, 1, 2, 2]);
        assert!(solve_affine(&a, &Mat::from_i64(f, 2, 1, &[1, 3])).unwrap().is_none());
        let sol = solve_affine(&a, &Mat::from_i64(f, 2, 1, &[1, 2])).unwrap().unwrap();
        assert_eq!(&a * &sol.particular, Mat::from_i64(f, 2, 1, &[1, 2]));
        assert_eq!(sol.nullspace.dim(), 1);
    }

    #[test]
    fn rational_rows_with_denominators() {
        let f = Field::Rational;
        let half = f.parse("1/2").unwrap();
        let third = f.parse("1/3").unwrap();
        let m = Mat::from_vec(f, 2, 2, vec![half.clone(), third.clone(), f.one(), f.parse("2/3").unwrap()]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn rows_dependent_only_modulo_the_screen_prime() {
        let f = Field::Rational;
        let p = SCREEN_PRIME as i64;
        let m = Mat::from_i64(f, 3, 2, &[1, 0, 1, p, 2, 0]);
        assert_eq!(rank(&m), 2);
        assert_eq!(kernel_basis(&m).dim(), 0);
    }

    #[test]
    fn screening_keeps_proportional_rows_out() {
        let f = Field::Rational;
        let m = Mat::from_i64(f, 4, 3, &[1, 2, 3, -2, -4, -6, 0, 1, 1, 3, 6, 9]);
        let ech = echelon(&m);
        assert_eq!(ech.pivots, vec![0, 1]);
        assert_eq!(ech.rref.to_string(), "[1 0 1]\n[0 1 1]\n");
    }
}
