use crate::exactlin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("{what}: expected shape {expected:?}, found {found:?}")]
    Shape {
        what: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("structures live over different fields")]
    FieldMismatch,
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn expect_shape(what: &str, m: &crate::exactlin::Mat, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::Shape {
            what: what.to_string(),
            expected: (rows, cols),
            found: m.shape(),
        });
    }
    Ok(())
}
