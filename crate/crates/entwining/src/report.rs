//! Machine-readable results of identity checks.

use serde::Serialize;

use crate::exactlin::{Mat, Scalar};

/// The first entry where the two sides of an identity disagree.
///
/// `input_legs`/`output_legs` are the basis indices of the tensor legs of the column and row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub column: usize,
    pub input_legs: Vec<usize>,
    pub output_legs: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

fn split_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut legs = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        legs[k] = index % dims[k].max(1);
        index /= dims[k].max(1);
    }
    legs
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Records whether `lhs == rhs`, naming the first differing entry on failure.
    ///
    /// Both sides are maps from `in_dims` (tensor product, first leg major) to `out_dims`.
    pub fn push_eq(&mut self, id: impl Into<String>, lhs: &Mat, rhs: &Mat, in_dims: &[usize], out_dims: &[usize]) {
        let id = id.into();
        if lhs.shape() != rhs.shape() {
            self.checks.push(Check {
                id,
                pass: false,
                witness: None,
                note: Some(format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape())),
            });
            return;
        }
        let witness = lhs.first_difference(rhs).map(|(row, column)| Witness {
            row,
            column,
            input_legs: split_index(column, in_dims),
            output_legs: split_index(row, out_dims),
            lhs: lhs.get(row, column).clone(),
            rhs: rhs.get(row, column).clone(),
        });
        self.checks.push(Check {
            id,
            pass: witness.is_none(),
            witness,
            note: None,
        });
    }

    pub fn push_bool(&mut self, id: impl Into<String>, pass: bool, note: Option<String>) {
        self.checks.push(Check {
            id: id.into(),
            pass,
            witness: None,
            note,
        });
    }

    /// Appends another report's checks with ids prefixed by `prefix/` (unless `prefix` is empty).
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut check in other.checks {
            if !prefix.is_empty() {
                check.id = format!("{prefix}/{}", check.id);
            }
            self.checks.push(check);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.failures().map(|c| c.id.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn witness_splits_multi_indices() {
        let f = Field::Rational;
        let lhs = Mat::zeros(f, 4, 6);
        let mut rhs = lhs.clone();
        rhs.set(3, 5, f.one());
        let mut report = Report::new("t");
        report.push_eq("eq", &lhs, &rhs, &[2, 3], &[2, 2]);
        let w = report.checks[0].witness.as_ref().unwrap();
        assert_eq!(w.input_legs, vec![1, 2]);
        assert_eq!(w.output_legs, vec![1, 1]);
        assert!(!report.passed());
    }
}
