use thiserror::Error;

/// Errors raised by the geometry operations.
///
/// Offending values are carried as `f64` regardless of the scalar type in use.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({re}, {im}) is not inside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("point ({re}, {im}) has a non-finite coordinate")]
    NonFinite { re: f64, im: f64 },

    #[error("transform has a pole at ({re}, {im})")]
    Pole { re: f64, im: f64 },

    #[error("degenerate transform: |ad - bc| = {det} after normalization")]
    DegenerateTransform { det: f64 },

    #[error("parameter `{name}` = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("invalid polyline: {0}")]
    InvalidPolyline(&'static str),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
