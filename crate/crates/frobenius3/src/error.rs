use thiserror::Error;

/// Errors produced by validation and by the exact and numeric computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The input list is empty or longer than three entries.
    #[error("expected 1 to 3 generators, got {0}")]
    UnsupportedLength(usize),

    /// Generators must be listed in strictly increasing order.
    #[error("generators must be strictly increasing: d[{index}] = {value} does not exceed its predecessor")]
    NotStrictlyIncreasing { index: usize, value: i64 },

    /// The generators share a common factor, so the semigroup misses whole
    /// residue classes and has no finite Frobenius number.
    #[error("gcd is {0}, must be 1")]
    GcdNotOne(i64),

    /// The smallest generator is below the minimum the embedding dimension
    /// allows (no m-generator minimal tuple exists with d1 < m, and every
    /// generator must be at least 2).
    #[error("smallest generator {d1} is below the minimum {min} for {m} generators")]
    MultiplicityTooSmall { d1: i64, min: i64, m: usize },

    /// One generator is a non-negative combination of the others, so the
    /// tuple does not minimally generate its semigroup. Index is 1-based.
    #[error("generator {index} is representable by the others; the tuple is not minimal")]
    NonMinimal { index: usize },

    /// Exact arithmetic would leave the configured magnitude guard.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Matrix representation of the gap set requires d1 >= 3.
    #[error("pair ({d1},{d2}) is degenerate for the gap matrix: d1 must be at least 3")]
    PairTooSmall { d1: i64, d2: i64 },

    /// A series operation needs coefficients beyond the truncation horizon.
    #[error("horizon {horizon} too small: {needed} is required")]
    HorizonTooSmall { horizon: u64, needed: u64 },

    /// A set-valued operation received a series with a coefficient outside {0,1}.
    #[error("series is not a characteristic function: coefficient {coeff} at exponent {exponent}")]
    NotCharacteristic { exponent: u64, coeff: i64 },

    /// Quadrature contour must satisfy |z| < r < 1.
    #[error("invalid contour: need |z| = {z_abs} < r = {r} < 1")]
    InvalidContour { z_abs: f64, r: f64 },

    /// No zero found while scanning the admissible range for a diagonal
    /// element. For a validated tuple this signals an internal bug.
    #[error("no zero of the axis-{k} indicator in 2..={bound}")]
    NoZeroInRange { k: usize, bound: i64 },

    /// The off-diagonal construction is undefined for symmetric semigroups.
    #[error("semigroup is symmetric (pair {i},{j}): off-diagonal elements are not determined by the root construction")]
    SymmetricSemigroup { i: usize, j: usize },

    /// The discriminant that should be a perfect square is not one.
    #[error("discriminant {0} is not a perfect square")]
    NotPerfectSquare(i128),

    /// Both candidate root assemblies satisfy every integrality and relation
    /// check, so the construction cannot decide between them.
    #[error("root selection ambiguous: both sign assemblies pass all checks")]
    RootSelectionAmbiguous,
}

pub type Result<T> = std::result::Result<T, Error>;
