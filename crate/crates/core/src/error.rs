use crate::report::CheckReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{op}: dimension mismatch between {}x{} and {}x{}", left.0, left.1, right.0, right.1)]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },

    #[error("{what}: index {index:?} outside bounds {bound:?}")]
    IndexOutOfRange { what: &'static str, index: Vec<usize>, bound: Vec<usize> },

    #[error("site {site} with span {span} does not fit in {sites} sites")]
    SiteRange { site: usize, span: usize, sites: usize },

    #[error("matrix is singular: rank {rank} < {dim}")]
    Singular { rank: usize, dim: usize },

    #[error("leading series coefficient is singular: rank {rank} < {dim} (defect {})", dim - rank)]
    SingularLeading { rank: usize, dim: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("inadmissible multi-index {0}")]
    Inadmissible(String),

    #[error("precondition failed: {}", .0.name)]
    Precondition(Box<CheckReport>),
}

pub type Result<T> = std::result::Result<T, Error>;
