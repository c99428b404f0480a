use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("letter {0} does not occur in the word")]
    LetterNotPresent(i32),

    #[error("polynomial is not symmetric with center {d}/2")]
    NotSymmetric { d: u32 },

    #[error("gamma peel left a nonzero remainder: {0}")]
    NonzeroRemainder(String),

    #[error("no expansion in the requested basis exists")]
    NoExpansion,

    #[error("expansion coefficients are not integral: {0}")]
    NonIntegral(String),

    #[error("b-vector is not integral (class not invariant under the action?): {0}")]
    NonIntegralB(String),

    #[error("position {0} is not a descent")]
    NotADescent(usize),

    #[error("size {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("word {0} contains an occurrence of 231")]
    Not231Avoiding(String),

    #[error("malformed Dyck path: {0}")]
    MalformedPath(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("poset is not sign-graded: chain [{}] vs chain [{}] ({reason})", first.join(" < "), second.join(" < "))]
    NotSignGraded {
        first: Vec<String>,
        second: Vec<String>,
        reason: String,
    },

    #[error("labeling is not canonical")]
    NotCanonical,

    #[error("rank {0} is outside {{0, 1}}")]
    RankOutOfRange(i64),

    #[error("cannot extend the poset by a top element with a canonical labeling")]
    CannotCanonicalize,

    #[error("word {0} is not a linear extension of the poset")]
    NotALinearExtension(String),

    #[error("internal invariant broken: {0}")]
    BrokenInvariant(String),

    #[error("orbit of {0} has no member without double descents")]
    NoCanonicalRep(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown report format `{0}`")]
    UnknownFormat(String),

    #[error("parse error: {0}")]
    Parse(String),
}
