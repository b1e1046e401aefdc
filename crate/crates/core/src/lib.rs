//! Computations in the rings Z/mZ with arbitrary-precision modulus.
//!
//! - [`arith`]: factorization, extended gcd, modular powers, primality.
//! - [`crt`]: the orthogonal CRT basis and congruence-system solving.
//! - [`idempotents`]: all `2^n` idempotents of Z/mZ, their Boolean algebra
//!   and Boolean ring structure, supports, and the nilradical.
//! - [`lifting`]: lifting idempotents modulo the nilradical.
//! - [`cli`]: the `zmod` command-line front end.
//!
//! ```
//! use num_bigint::BigUint;
//! use zmod::{enumerate_idempotents, factor};
//!
//! let f = factor(&BigUint::from(765u32)).unwrap();
//! let set = enumerate_idempotents(&f).unwrap();
//! let members: Vec<u32> = set.members().iter().map(|x| x.try_into().unwrap()).collect();
//! assert_eq!(members, [0, 1, 136, 171, 306, 460, 595, 630]);
//! ```

pub mod arith;
pub mod cli;
pub mod crt;
mod error;
pub mod idempotents;
pub mod lifting;
mod residue;

pub use arith::{extended_gcd, factor, is_prime, mod_inverse, mod_pow, Factorization, Natural};
pub use crt::{crt_basis, crt_join, crt_solve, crt_split, CongruenceSystem, CrtBasis};
pub use error::{Error, Result};
pub use idempotents::{
    complement, enumerate_idempotents, enumerate_idempotents_with_cap, from_support, is_idempotent,
    join, meet, nilradical, primitive_basis, support, xor_add, IdempotentSet, Nilradical,
    DEFAULT_ENUMERATION_CAP,
};
pub use lifting::{
    is_nilpotent, lift_by_projection, lift_idempotent, nilpotency_exponent, LiftResult,
};
pub use residue::Residue;
