use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("gcd of two zero polynomials is undefined")]
    ZeroPolynomials,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exhaustive search would exceed its configured bound.
    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    /// An odd vertex subset with no vertex of odd out-degree in its induced subgraph.
    #[error("premise violated: odd subset U = {subset:?} has no vertex of odd out-degree")]
    PremiseViolation { subset: Vec<usize> },

    #[error("graph has a directed arc {from} -> {to} without its reverse")]
    Directed { from: usize, to: usize },

    #[error("press set does not light every lamp")]
    DoesNotLightAll,

    #[error("lamp {lamp} is not toggled by any button")]
    UntoggledLamp { lamp: usize },

    #[error("no press set lights more than half of {lamps} lamps within the search cap (best found lights {best})")]
    NoMajorityWitness { lamps: usize, best: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A self-check on a computed witness failed.
    #[error("internal verification failed: {0}")]
    Verification(String),
}
