use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed field literal: {0}")]
    Parse(String),
    #[error("expected a pure quaternion")]
    NotPure,
    #[error("root must be nonzero")]
    ZeroRoot,
    #[error("the length of the root lies outside Q(√2, √5): norm {0}")]
    NormNotInField(String),
    #[error("element does not preserve the pure quaternions")]
    NotThreeDimensional,
    #[error("closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown Coxeter diagram {0:?}")]
    UnknownDiagram(String),
    #[error("unknown lattice kind {0:?}")]
    UnknownLattice(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation needs a rank-3 diagram")]
    NeedsRank3,
    #[error("element is not in the octahedral group")]
    NotInOctahedral,
    #[error("degenerate point set: {0}")]
    DegenerateHull(String),
    #[error("origin is not strictly inside the polyhedron")]
    OriginNotInterior,
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("polyhedron has no faces; run the hull step first")]
    Faceless,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
