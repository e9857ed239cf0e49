use thiserror::Error;

/// Errors raised by the geometry routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("the zero vector does not define a ray")]
    ZeroVector,
    #[error("state is not normalized (norm = {norm})")]
    Normalization { norm: f64 },
    #[error("non-finite component in input")]
    NonFinite,
    #[error("geodesic is not unique or not defined: {0}")]
    DegenerateGeodesic(&'static str),
    #[error("point lies on the excluded pole of the stereographic chart")]
    PoleSingularity,
    #[error("point or coordinate outside the chart domain: {0}")]
    ChartDomain(String),
    #[error("point ({x}, {y}) is not on the manifold")]
    OffManifold { x: f64, y: f64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("solver did not converge after {iterations} iterations (gradient max-norm {gradient_norm:e})")]
    Convergence {
        iterations: usize,
        gradient_norm: f64,
    },
    #[error("consecutive loop vertices {index} and {next} are orthogonal")]
    OrthogonalSegment { index: usize, next: usize },
}

impl GeomError {
    /// Stable machine-readable identifier of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            GeomError::Dimension { .. } => "dimension",
            GeomError::ZeroVector => "zero_vector",
            GeomError::Normalization { .. } => "normalization",
            GeomError::NonFinite => "non_finite",
            GeomError::DegenerateGeodesic(_) => "degenerate_geodesic",
            GeomError::PoleSingularity => "pole_singularity",
            GeomError::ChartDomain(_) => "chart_domain",
            GeomError::OffManifold { .. } => "off_manifold",
            GeomError::Domain(_) => "domain",
            GeomError::Convergence { .. } => "convergence",
            GeomError::OrthogonalSegment { .. } => "orthogonal_segment",
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
