//! Crate-wide error type.

use thiserror::Error;

use crate::lattice::{Point, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A family asked for more steps than the enumeration bound allows.
    #[error("enumeration budget exceeded: family needs {required} steps, bound is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    /// `binomial(n, m)` requires n >= 0; only m has a zero convention.
    #[error("binomial upper index must be nonnegative, got n = {n}")]
    NegativeBinomial { n: i64 },

    /// The perpendicular bisector of a point and itself is undefined.
    #[error("perpendicular bisector undefined: points coincide at {0}")]
    CoincidentPoints(Point),

    /// The bisector exists but its reflection moves some integer points
    /// off the lattice (segment is neither axis-parallel nor slope +-1).
    #[error("perpendicular bisector of {v} and {w} does not stabilize the integer lattice")]
    NonStabilizingBisector { v: Point, w: Point },

    /// reflect_tail needs at least one vertex on the line.
    #[error("path has no vertex on the reflection line")]
    NoIntersection,

    /// Reflecting this step across the line leaves the step alphabet
    /// (e.g. a D step across a vertical line has displacement [-1,1]).
    #[error("reflected image of step {step} is not a representable step")]
    UnrepresentableStep { step: Step },

    /// mode_indices of an empty sequence.
    #[error("empty sequence has no mode")]
    EmptySequence,

    /// Partition parts must be weakly decreasing and positive.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Text-form parse failure (paths, polynomials, sequences).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
