use thiserror::Error;

use crate::kernel::KernelError;

/// Errors raised by the triangle, conic and affine-map layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("triangle vertices are collinear or not ordinary")]
    DegenerateTriangle,
    #[error("point lies on a sideline of the reference triangle")]
    OnSideline,
    #[error("point lies on a sideline of the triangle or of its anticomplementary triangle")]
    Inadmissible,
    #[error("point is the centroid")]
    IsCentroid,
    #[error("direction is parallel to a sideline")]
    SidelineDirection,
    #[error("expected a point at infinity")]
    NotInfinite,
    #[error("five points do not determine a unique conic")]
    NoUniqueConic,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("point is not on the conic")]
    NotOnConic,
    #[error("line does not pass through the point")]
    NotIncident,
    #[error("triangle correspondence has collinear or infinite vertices")]
    CollinearInput,
    #[error("homology center lies on its axis")]
    CenterOnAxis,
    #[error("matrix does not fix the line at infinity")]
    NotAffine,
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
