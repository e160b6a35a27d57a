//! Hom-functor plumbing and the generic linear-constraint solver behind every hom space.
//!
//! `Hom(V, Y)` is vectorized as `Y ⊗ V*` with the `Y` index major, so a map `h` becomes its
//! row-major entry list. The nested notation `(V₁, …, Vₙ, M)` stands for
//! `Hom(Vₙ ⊗ … ⊗ V₁, M) ≅ M ⊗ Vₙ* ⊗ … ⊗ V₁*`, and with this vectorization the nesting
//! `(V₁, (V₂, M))` lands on the same coordinates automatically.

use crate::exactlin::{kernel_basis, solve_matrix, tensor, Field, Mat, SubspaceBasis};
use crate::report::Report;

/// The map `(f₁, …, fₙ, g)`: `h ↦ g ∘ h ∘ (fₙ ⊗ … ⊗ f₁)`, from `Hom(Wₙ⊗…⊗W₁, M)` to
/// `Hom(Vₙ⊗…⊗V₁, M′)` where `fᵢ: Vᵢ → Wᵢ` and `g: M → M′`.
pub fn hom_map(slots: &[&Mat], target: &Mat) -> Mat {
    if slots.is_empty() {
        return target.clone();
    }
    let reversed: Vec<&Mat> = slots.iter().rev().copied().collect();
    target.kron(&tensor(&reversed).transpose())
}

/// Precomposition `(f, Y): Hom(W, Y) → Hom(V, Y)` for `f: V → W`.
pub fn pull(f: &Mat, target_dim: usize) -> Mat {
    Mat::identity(f.field(), target_dim).kron(&f.transpose())
}

/// Postcomposition `(V, g): Hom(V, Y) → Hom(V, Z)` for `g: Y → Z`, where `dim V = source_dim`.
pub fn push(source_dim: usize, g: &Mat) -> Mat {
    g.kron(&Mat::identity(g.field(), source_dim))
}

/// Coordinate of the elementary map in `(V₁, …, Vₙ, M)` sending the basis vector
/// `vₙ ⊗ … ⊗ v₁` to `m` (and every other basis tensor to zero).
///
/// `slots` lists `(index, dim)` for `V₁, …, Vₙ` in the order they are written.
pub fn hom_coordinate(m: usize, slots: &[(usize, usize)]) -> usize {
    let mut source = 0;
    let mut size = 1;
    for &(index, dim) in slots.iter().rev() {
        source = source * dim + index;
        size *= dim;
    }
    m * size + source
}

/// Converts a left action `A ⊗ M → M` into its adjoint `μ_M: M → (A, M)`.
pub fn left_action_to_mu(action: &Mat, alg_dim: usize) -> Mat {
    let m = action.rows();
    let f = action.field();
    let mut mu = Mat::zeros(f, m * alg_dim, m);
    for target in 0..m {
        for a in 0..alg_dim {
            for source in 0..m {
                let v = action.get(target, a * m + source);
                if !v.is_zero() {
                    mu.set(hom_coordinate(target, &[(a, alg_dim)]), source, v.clone());
                }
            }
        }
    }
    mu
}

/// Inverse of [`left_action_to_mu`].
pub fn mu_to_left_action(mu: &Mat, alg_dim: usize) -> Mat {
    let m = mu.cols();
    let f = mu.field();
    Mat::from_fn(f, m, alg_dim * m, |target, col| {
        let (a, source) = (col / m.max(1), col % m.max(1));
        mu.get(hom_coordinate(target, &[(a, alg_dim)]), source).clone()
    })
}

/// An affine system `matrix · x = rhs` assembled from a residual function.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub matrix: Mat,
    pub rhs: Mat,
}

fn flatten(field: Field, parts: &[Mat]) -> Vec<crate::exactlin::Scalar> {
    let mut out = Vec::new();
    for p in parts {
        debug_assert_eq!(p.field(), field);
        out.extend(p.entries().iter().cloned());
    }
    out
}

impl LinearSystem {
    /// Probes an affine residual `x ↦ [r₁(x), r₂(x), …]` on zero and on each unit vector;
    /// the solutions of the system are exactly the `x` at which every residual vanishes.
    pub fn assemble(field: Field, unknowns: usize, residual: impl Fn(&Mat) -> Vec<Mat>) -> LinearSystem {
        let offset = flatten(field, &residual(&Mat::zeros(field, unknowns, 1)));
        let height = offset.len();
        let mut matrix = Mat::zeros(field, height, unknowns);
        for k in 0..unknowns {
            let column = flatten(field, &residual(&Mat::basis_vector(field, unknowns, k)));
            assert_eq!(column.len(), height, "residual size depends on the unknown");
            for (row, (v, b)) in column.iter().zip(&offset).enumerate() {
                let d = v - b;
                if !d.is_zero() {
                    matrix.set(row, k, d);
                }
            }
        }
        let rhs = Mat::from_vec(field, height, 1, offset.iter().map(|b| -b).collect());
        LinearSystem { matrix, rhs }
    }

    pub fn solutions(&self) -> SubspaceBasis {
        kernel_basis(&self.matrix)
    }

    pub fn particular(&self) -> Option<Mat> {
        solve_matrix(&self.matrix, &self.rhs).expect("system shapes agree")
    }

    pub fn stack(field: Field, unknowns: usize, parts: &[LinearSystem]) -> LinearSystem {
        let matrix = Mat::vstack_all(field, unknowns, &parts.iter().map(|p| p.matrix.clone()).collect::<Vec<_>>());
        let rhs = Mat::vstack_all(field, 1, &parts.iter().map(|p| p.rhs.clone()).collect::<Vec<_>>());
        LinearSystem { matrix, rhs }
    }
}

/// All `rows × cols` matrices `f` with every constraint `c(f)` zero; constraints must be linear.
pub fn linear_maps(field: Field, rows: usize, cols: usize, constraints: impl Fn(&Mat) -> Vec<Mat>) -> SubspaceBasis {
    LinearSystem::assemble(field, rows * cols, |x| constraints(&x.reshape(rows, cols))).solutions()
}

/// The basis of a map space as matrices.
pub fn basis_maps(space: &SubspaceBasis, rows: usize, cols: usize) -> Vec<Mat> {
    (0..space.dim())
        .map(|k| space.basis.column(k).reshape(rows, cols))
        .collect()
}

/// Whether the map `f` lies in the map space.
pub fn contains_map(space: &SubspaceBasis, f: &Mat) -> bool {
    let v = f.reshape(f.rows() * f.cols(), 1);
    if v.rows() != space.ambient_dim {
        return false;
    }
    space.coordinates(&v).is_some()
}

/// Coordinates of `f` in the basis of the map space.
pub fn map_coordinates(space: &SubspaceBasis, f: &Mat) -> Option<Mat> {
    space.coordinates(&f.reshape(f.rows() * f.cols(), 1))
}

/// A hom space together with the shape of its member maps.
#[derive(Clone, Debug)]
pub struct MapSpace {
    pub space: SubspaceBasis,
    pub rows: usize,
    pub cols: usize,
}

impl MapSpace {
    pub fn solve(field: Field, rows: usize, cols: usize, constraints: impl Fn(&Mat) -> Vec<Mat>) -> MapSpace {
        MapSpace {
            space: linear_maps(field, rows, cols, constraints),
            rows,
            cols,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<Mat> {
        basis_maps(&self.space, self.rows, self.cols)
    }

    pub fn contains(&self, f: &Mat) -> bool {
        f.shape() == (self.rows, self.cols) && contains_map(&self.space, f)
    }
}

/// Verifies that `forward: left → right` and `backward: right → left` are mutually inverse
/// bijections between two hom spaces, by evaluating both on bases.
pub fn bijection_report(
    subject: &str,
    left: &MapSpace,
    right: &MapSpace,
    forward: impl Fn(&Mat) -> Mat,
    backward: impl Fn(&Mat) -> Mat,
) -> Report {
    let mut r = Report::new(subject);
    r.push_bool(
        "dimensions",
        left.dim() == right.dim(),
        Some(format!("{} vs {}", left.dim(), right.dim())),
    );
    let left_basis = left.basis();
    let right_basis = right.basis();
    let images: Vec<Mat> = left_basis.iter().map(&forward).collect();
    let preimages: Vec<Mat> = right_basis.iter().map(&backward).collect();
    r.push_bool("forward-lands", images.iter().all(|m| right.contains(m)), None);
    r.push_bool("backward-lands", preimages.iter().all(|m| left.contains(m)), None);
    let as_columns = |maps: &[Mat], rows: usize| {
        let cols: Vec<Mat> = maps.iter().map(|m| m.reshape(rows, 1).transpose()).collect();
        Mat::vstack_all(left.space.basis.field(), rows, &cols).transpose()
    };
    let lsize = left.rows * left.cols;
    let rsize = right.rows * right.cols;
    if images.iter().all(|m| m.shape() == (right.rows, right.cols))
        && preimages.iter().all(|m| m.shape() == (left.rows, left.cols))
    {
        let round_left: Vec<Mat> = images.iter().map(&backward).collect();
        let round_right: Vec<Mat> = preimages.iter().map(&forward).collect();
        r.push_eq(
            "backward-after-forward",
            &as_columns(&round_left, lsize),
            &as_columns(&left_basis, lsize),
            &[left_basis.len()],
            &[left.rows, left.cols],
        );
        r.push_eq(
            "forward-after-backward",
            &as_columns(&round_right, rsize),
            &as_columns(&right_basis, rsize),
            &[right_basis.len()],
            &[right.rows, right.cols],
        );
    } else {
        r.push_bool("shapes", false, Some("bijection maps produced wrong shapes".into()));
    }
    r
}
