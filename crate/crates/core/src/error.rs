use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A physical or numerical parameter is outside its admissible range.
    #[error("{name} must be {constraint}, got {value}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
    /// A size or count parameter is outside its admissible range.
    #[error("{name} must be {constraint}, got {value}")]
    InvalidCount {
        name: &'static str,
        value: usize,
        constraint: &'static str,
    },
    /// Fano factor 0/0: neither signal nor displacement carries energy.
    #[error("Fano factor is undefined when both the amplitude and the displacement are zero")]
    DegenerateFano,
    /// Moments of a distribution with no mass above zero counts.
    #[error("distribution has zero mean; Fano factor is undefined")]
    ZeroMean,
    /// The fringe carries no usable phase information.
    #[error(
        "fringe envelope spread {spread:.3e} is below the flat-fringe threshold {threshold:.3e}; \
         no phase information present"
    )]
    FlatFringe { spread: f64, threshold: f64 },
    /// Fringe extrema too close together to assign arccos branches.
    #[error(
        "fringe extrema at steps {first} and {second} are closer than {min_spacing} steps; \
         branch assignment is ambiguous"
    )]
    BranchAmbiguity {
        first: usize,
        second: usize,
        min_spacing: usize,
    },
    /// A post-selection window contains no sweep steps.
    #[error(
        "post-selection window [{lo:.6}, {hi:.6}] rad (center {center:.6}, width {gamma:.6}) \
         contains no steps"
    )]
    EmptyWindow {
        center: f64,
        gamma: f64,
        lo: f64,
        hi: f64,
    },
    /// A sample statistic was requested on data that cannot support it.
    #[error("{0}")]
    DegenerateSamples(&'static str),
    /// A serialized dataset does not match the expected schema.
    #[error("malformed dataset at line {line}: {what}")]
    Malformed { line: usize, what: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: f64, constraint: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            constraint,
        }
    }

    pub(crate) fn invalid_count(name: &'static str, value: usize, constraint: &'static str) -> Self {
        Error::InvalidCount {
            name,
            value,
            constraint,
        }
    }
}

pub(crate) fn require_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::invalid(name, value, "finite"))
    }
}
