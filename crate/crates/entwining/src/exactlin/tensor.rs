use super::{Field, LinError, Mat, Scalar};

/// Whether a tensor leg is consumed (input) or produced (output) by the linear map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leg {
    In,
    Out,
}

/// A multi-indexed array with labelled legs, stored row-major over its shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    shape: Vec<usize>,
    legs: Vec<Leg>,
    entries: Vec<Scalar>,
}

impl Tensor {
    pub fn new(field: Field, shape: Vec<usize>, legs: Vec<Leg>, entries: Vec<Scalar>) -> Result<Tensor, LinError> {
        if shape.len() != legs.len() || entries.len() != shape.iter().product::<usize>() {
            return Err(LinError::Shape(format!(
                "shape {shape:?} with {} legs and {} entries",
                legs.len(),
                entries.len()
            )));
        }
        Ok(Tensor {
            field,
            shape,
            legs,
            entries,
        })
    }

    /// The tensor of a linear map `In₀ ⊗ … → Out₀ ⊗ …`, output legs first.
    pub fn from_mat(m: &Mat, out_dims: &[usize], in_dims: &[usize]) -> Result<Tensor, LinError> {
        if out_dims.iter().product::<usize>() != m.rows() || in_dims.iter().product::<usize>() != m.cols() {
            return Err(LinError::Shape(format!(
                "{}x{} matrix cannot carry legs {out_dims:?} <- {in_dims:?}",
                m.rows(),
                m.cols()
            )));
        }
        let mut shape = out_dims.to_vec();
        shape.extend_from_slice(in_dims);
        let mut legs = vec![Leg::Out; out_dims.len()];
        legs.extend(std::iter::repeat_n(Leg::In, in_dims.len()));
        Tensor::new(m.field(), shape, legs, m.entries().to_vec())
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn strides(shape: &[usize]) -> Vec<usize> {
        let mut strides = vec![1; shape.len()];
        for k in (0..shape.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * shape[k + 1];
        }
        strides
    }

    /// New leg `k` is old leg `perm[k]`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<Tensor, LinError> {
        let n = self.shape.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&k| k >= n || std::mem::replace(&mut seen[k], true)) {
            return Err(LinError::Shape(format!("{perm:?} is not a permutation of {n} legs")));
        }
        let shape: Vec<usize> = perm.iter().map(|&k| self.shape[k]).collect();
        let legs = perm.iter().map(|&k| self.legs[k]).collect();
        let old_strides = Tensor::strides(&self.shape);
        let mut entries = Vec::with_capacity(self.entries.len());
        let mut index = vec![0usize; n];
        for _ in 0..self.entries.len() {
            let src: usize = index
                .iter()
                .zip(perm)
                .map(|(&i, &leg)| i * old_strides[leg])
                .sum();
            entries.push(self.entries[src].clone());
            for k in (0..n).rev() {
                index[k] += 1;
                if index[k] < shape[k] {
                    break;
                }
                index[k] = 0;
            }
        }
        Tensor::new(self.field, shape, legs, entries)
    }

    /// Flattens to the matrix whose rows run over the output legs and columns over the
    /// input legs, each in their order of appearance.
    pub fn to_mat(&self) -> Mat {
        let outs: Vec<usize> = (0..self.legs.len()).filter(|&k| self.legs[k] == Leg::Out).collect();
        let ins: Vec<usize> = (0..self.legs.len()).filter(|&k| self.legs[k] == Leg::In).collect();
        let mut perm = outs.clone();
        perm.extend(&ins);
        let arranged = self.permute_legs(&perm).expect("split is a permutation");
        let rows = outs.iter().map(|&k| self.shape[k]).product();
        let cols = ins.iter().map(|&k| self.shape[k]).product();
        Mat::from_vec(self.field, rows, cols, arranged.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_of_matrix_legs_is_transpose() {
        let f = Field::Rational;
        let m = Mat::from_i64(f, 2, 3, &[1, 2, 3, 4, 5, 6]);
        let t = Tensor::from_mat(&m, &[2], &[3]).unwrap();
        let swapped = t.permute_legs(&[1, 0]).unwrap();
        assert_eq!(swapped.shape(), &[3, 2]);
        assert_eq!(swapped.entries(), m.transpose().entries());
        assert_eq!(swapped.permute_legs(&[1, 0]).unwrap(), t);
        // legs travel with their labels, so the flattening is unchanged
        assert_eq!(swapped.to_mat(), m);
    }

    #[test]
    fn rejects_bad_permutations() {
        let t = Tensor::from_mat(&Mat::identity(Field::Rational, 2), &[2], &[2]).unwrap();
        assert!(t.permute_legs(&[0, 0]).is_err());
        assert!(t.permute_legs(&[0]).is_err());
    }
}
