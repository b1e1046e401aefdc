use num_bigint::BigUint;
use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants fall into two groups. `ZeroModulus`, `TooManyFactors`,
/// `EmptySystem`, `SupportIndexOutOfRange` and `LiftDidNotConverge` are
/// validation or internal failures; the rest report that a mathematical
/// hypothesis of the requested construction does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1 (Z/0Z has no finite structure)")]
    ZeroModulus,

    #[error(
        "moduli at positions {i} and {j} share the factor {gcd}: \
         pairwise coprimality (comaximal ideals) fails"
    )]
    NonCoprimeModuli { i: usize, j: usize, gcd: BigUint },

    #[error("residues live in different rings: Z/{left}Z vs Z/{right}Z")]
    ModulusMismatch { left: BigUint, right: BigUint },

    #[error("{value} is not idempotent mod {modulus}: {value}^2 != {value}")]
    NotIdempotent { value: BigUint, modulus: BigUint },

    #[error(
        "{value} is not idempotent modulo the nilradical of Z/{modulus}Z: \
         {value}^2 - {value} is not nilpotent"
    )]
    NotLiftable { value: BigUint, modulus: BigUint },

    #[error("{n} distinct primes exceeds the enumeration cap of {cap} (2^{n} idempotents)")]
    TooManyFactors { n: usize, cap: usize },

    #[error("a congruence system needs at least one constraint")]
    EmptySystem,

    #[error("support index {index} out of range for {n} prime factors")]
    SupportIndexOutOfRange { index: usize, n: usize },

    #[error("Newton lifting of {value} mod {modulus} did not converge in {iterations} steps")]
    LiftDidNotConverge {
        value: BigUint,
        modulus: BigUint,
        iterations: u32,
    },
}

impl Error {
    /// True when the error reports a failed mathematical hypothesis rather
    /// than malformed input.
    pub fn is_precondition_failure(&self) -> bool {
        matches!(
            self,
            Error::NonCoprimeModuli { .. }
                | Error::ModulusMismatch { .. }
                | Error::NotIdempotent { .. }
                | Error::NotLiftable { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
