use thiserror::Error;

/// Everything that can go wrong when building or combining the library's values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {degree} exceeds the cap of {cap} points")]
    DegreeCap { degree: u128, cap: usize },
    #[error("point {point} is outside [1, {degree}]")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("points {offset}..{end} do not form an invariant block", end = offset + len)]
    NotInvariant { offset: usize, len: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("primes must be strictly increasing")]
    UnsortedBasis,
    #[error("{value} has a prime factor outside the basis")]
    OutsideBasis { value: u64 },
    #[error("prime basis does not cover all primes up to {0}")]
    BasisTooSmall(usize),
    #[error("prime exponent vectors are over different bases")]
    BasisMismatch,
    #[error("the divisor does not divide the dividend")]
    NotDivisible,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("ord(rho) does not divide ord(pi)")]
    OrderNotDividing,
    #[error("order {0} exceeds the search budget")]
    OrderBudget(String),
    #[error("generators do not commute")]
    NotCommuting,
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("{0}")]
    InvalidWitness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
