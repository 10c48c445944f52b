use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {label}{rank}: {reason}")]
    InvalidType {
        label: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("simple root index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("subset is not closed under addition: {0:?} + {1:?} is a root outside it")]
    NotClosed(Vec<i64>, Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("rank {rank} too large for Weyl group enumeration (limit {limit})")]
    RankTooLarge { rank: usize, limit: usize },
    #[error("alcove reduction did not terminate within {0} steps")]
    ReductionCap(usize),
    #[error("matrix is not p-nilpotent (X^p != 0)")]
    NotPNilpotent,
    #[error("matrix is not p-unipotent ((u - 1)^p != 0)")]
    NotPUnipotent,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not square or has the wrong size: {0}")]
    BadMatrix(String),
    #[error("matrices live over different fields (p = {0} and p = {1})")]
    FieldMismatch(u64, u64),
    #[error("BCH degree {degree} not usable modulo {p} (need degree < p and degree <= {limit})")]
    BchDegree { degree: usize, p: u64, limit: usize },
    #[error("products of length {0} in X and Y do not vanish; the truncated BCH series does not apply")]
    BracketsDoNotVanish(usize),
    #[error("characteristic coefficient of T^{power} is nonzero ({value})")]
    CharacteristicCoefficient { power: usize, value: u64 },
    #[error("Conrad parameters must be nonzero mod p (entry {0} is zero)")]
    ZeroParameter(usize),
}

impl Error {
    /// Contract violations are distinguished from malformed input by the CLI exit code.
    pub fn is_contract_violation(&self) -> bool {
        matches!(
            self,
            Error::NotPNilpotent
                | Error::NotPUnipotent
                | Error::NotNilpotent
                | Error::BracketsDoNotVanish(_)
                | Error::CharacteristicCoefficient { .. }
                | Error::ReductionCap(_)
                | Error::NotClosed(..)
                | Error::NotDominant(_)
                | Error::NotARoot(_)
                | Error::ZeroParameter(_)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidType { .. } => "invalid_type",
            Error::NotARoot(_) => "not_a_root",
            Error::Dimension { .. } => "dimension",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::NotClosed(..) => "not_closed",
            Error::NotDominant(_) => "not_dominant",
            Error::NotPrime(_) => "not_prime",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::MalformedRational(_) => "malformed_rational",
            Error::RankTooLarge { .. } => "rank_too_large",
            Error::ReductionCap(_) => "reduction_cap",
            Error::NotPNilpotent => "not_p_nilpotent",
            Error::NotPUnipotent => "not_p_unipotent",
            Error::NotNilpotent => "not_nilpotent",
            Error::BadMatrix(_) => "bad_matrix",
            Error::FieldMismatch(..) => "field_mismatch",
            Error::BchDegree { .. } => "bch_degree",
            Error::BracketsDoNotVanish(_) => "brackets_do_not_vanish",
            Error::CharacteristicCoefficient { .. } => "characteristic_coefficient",
            Error::ZeroParameter(_) => "zero_parameter",
        }
    }
}
