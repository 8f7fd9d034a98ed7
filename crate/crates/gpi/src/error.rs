use thiserror::Error;

pub type Result<T> = core::result::Result<T, GpiError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GpiError {
    /// A conversion divides by a quantity that vanishes for this input.
    #[error("degenerate parametrization: {denominator} vanishes")]
    DegenerateParametrization { denominator: &'static str },
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("wavenumber is not on the physical sheet (Im k must be positive)")]
    InvalidSheet,
    #[error("wavenumber must be a positive real number")]
    InvalidWavenumber,
    #[error("resolvent evaluated at a pole")]
    PoleEvaluation,
    #[error("no bound state on the selected branch (kappa = {kappa})")]
    NoBoundState { kappa: f64 },
    #[error("overlap between consecutive loop states vanishes")]
    DegenerateOverlap,
    #[error("separating coupling cannot be used for a periodic array")]
    SeparatingLattice,
    #[error("band-edge grid too coarse near k = {k}")]
    GridTooCoarse { k: f64 },
    #[error("need at least 5 bands in the fit range, got {available}")]
    InsufficientBands { available: usize },
}
