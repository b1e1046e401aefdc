//! Lifting idempotents of Z/mZ modulo its nilradical.
//!
//! If `f^2 - f` is nilpotent, there is exactly one idempotent `g` with
//! `f - g` nilpotent. [`lift_idempotent`] finds it with the Newton step
//! `g <- 3g^2 - 2g^3`, which needs no factorization: if `e = g^2 - g` then the
//! next error is divisible by `e^2`, so the nilpotency order of the error at
//! least halves each step and the iteration stops after at most
//! `ceil(log2(max c_k))` steps.
//!
//! [`lift_by_projection`] reaches the same `g` through the factorization,
//! sending `f` to 0 or 1 in each local factor Z/p^c Z.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{Factorization, Natural};
use crate::error::{Error, Result};
use crate::idempotents::{is_idempotent, primitive_basis};
use crate::residue::Residue;

/// Outcome of a successful lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    /// The idempotent `g`.
    pub lifted: Residue,
    /// `f - g`, nilpotent.
    pub difference: Residue,
    /// Newton steps taken; 0 when the input was already idempotent.
    pub iterations: u32,
}

/// `ceil(log2 m)`, or 1 when `m <= 2`. Every nilpotent `x` mod `m` has
/// `x^K = 0` for this `K`, since `max c_k <= log2 m`.
pub fn nilpotency_exponent(m: &Natural) -> u64 {
    if m <= &BigUint::from(2u32) {
        1
    } else {
        (m - 1u32).bits()
    }
}

fn ceil_log2(k: u64) -> u32 {
    if k <= 1 {
        0
    } else {
        64 - (k - 1).leading_zeros()
    }
}

/// True iff `r^K = 0 (mod m)` with `K` from [`nilpotency_exponent`].
pub fn is_nilpotent(r: &Residue) -> bool {
    let k = nilpotency_exponent(r.modulus());
    r.pow(&BigUint::from(k)).value().is_zero()
}

/// Lifts `f` to the unique idempotent congruent to it modulo the nilradical.
pub fn lift_idempotent(f: &Residue) -> Result<LiftResult> {
    let defect = f.square().sub(f)?;
    if !is_nilpotent(&defect) {
        return Err(Error::NotLiftable {
            value: f.value().clone(),
            modulus: f.modulus().clone(),
        });
    }

    let max_iterations = ceil_log2(nilpotency_exponent(f.modulus())) + 2;
    let three = Residue::from_natural(&BigUint::from(3u32), f.modulus())?;
    let two = Residue::from_natural(&BigUint::from(2u32), f.modulus())?;

    let mut g = f.clone();
    let mut iterations = 0;
    while !is_idempotent(&g) {
        if iterations == max_iterations {
            return Err(Error::LiftDidNotConverge {
                value: f.value().clone(),
                modulus: f.modulus().clone(),
                iterations,
            });
        }
        let g2 = g.square();
        let g3 = g2.mul(&g)?;
        g = three.mul(&g2)?.sub(&two.mul(&g3)?)?;
        iterations += 1;
    }

    let difference = f.sub(&g)?;
    Ok(LiftResult {
        lifted: g,
        difference,
        iterations,
    })
}

/// Lifts `f` through the factorization: in each factor Z/p^c Z the lift is 0
/// if `p | f` and 1 if `p | f - 1`; anything else is not liftable.
pub fn lift_by_projection(f: &Residue, factorization: &Factorization) -> Result<Residue> {
    if f.modulus() != factorization.modulus() {
        return Err(Error::ModulusMismatch {
            left: f.modulus().clone(),
            right: factorization.modulus().clone(),
        });
    }
    let eps = factorization
        .primes()
        .map(|p| {
            let r = f.value() % p;
            if r.is_zero() {
                Ok(BigUint::zero())
            } else if r.is_one() {
                Ok(BigUint::one())
            } else {
                Err(Error::NotLiftable {
                    value: f.value().clone(),
                    modulus: f.modulus().clone(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(primitive_basis(factorization).combine(&eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factor;

    fn res(v: i64, m: u64) -> Residue {
        Residue::new(v, m).unwrap()
    }

    #[test]
    fn exponent_bound() {
        let k = |m: u64| nilpotency_exponent(&BigUint::from(m));
        assert_eq!(k(1), 1);
        assert_eq!(k(2), 1);
        assert_eq!(k(3), 2);
        assert_eq!(k(4), 2);
        assert_eq!(k(5), 3);
        assert_eq!(k(1024), 10);
        assert_eq!(k(1025), 11);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent(&res(255, 765)));
        assert!(!is_nilpotent(&res(6, 858)));
        assert!(is_nilpotent(&res(0, 858)));
        assert!(is_nilpotent(&res(0, 1)));
        assert!(is_nilpotent(&res(512, 1024)));
        assert!(is_nilpotent(&res(2, 1024)));
        assert!(!is_nilpotent(&res(3, 1024)));
    }

    #[test]
    fn lifts_ten_mod_twelve() {
        let out = lift_idempotent(&res(10, 12)).unwrap();
        assert_eq!(out.lifted, res(4, 12));
        assert_eq!(out.difference, res(6, 12));
        assert!(out.iterations >= 1);
    }

    #[test]
    fn idempotent_is_a_fixed_point() {
        let out = lift_idempotent(&res(144, 858)).unwrap();
        assert_eq!(out.lifted, res(144, 858));
        assert_eq!(out.iterations, 0);
        assert_eq!(out.difference, res(0, 858));
    }

    #[test]
    fn lifts_into_the_765_set() {
        // 391 = 1 mod 9, 1 mod 5, 0 mod 17 up to nilpotents; scan gives 136.
        let out = lift_idempotent(&res(391, 765)).unwrap();
        assert_eq!(out.lifted, res(136, 765));
        assert!(is_nilpotent(&out.difference));
    }

    #[test]
    fn four_mod_765_is_not_liftable() {
        // 4 mod 5 is neither 0 nor 1, so 4^2 - 4 = 12 is not a multiple of 255.
        assert_eq!(
            lift_idempotent(&res(4, 765)),
            Err(Error::NotLiftable {
                value: BigUint::from(4u32),
                modulus: BigUint::from(765u32)
            })
        );
        let f = factor(&BigUint::from(765u32)).unwrap();
        assert!(matches!(
            lift_by_projection(&res(4, 765), &f),
            Err(Error::NotLiftable { .. })
        ));
    }

    #[test]
    fn deep_prime_power_needs_several_steps() {
        // 2^20: f = 1 + 2 is 1 mod 2, so it lifts to 1; the error 2 has
        // nilpotency order 20 and needs ceil(log2 20) = 5 halvings at most.
        let m = 1u64 << 20;
        let out = lift_idempotent(&res(3, m)).unwrap();
        assert_eq!(out.lifted, res(1, m));
        assert!(out.iterations <= 5 + 1);
        assert!(out.iterations >= 2);
    }

    #[test]
    fn projection_agrees_on_small_moduli() {
        for m in 1u64..=300 {
            let fact = factor(&BigUint::from(m)).unwrap();
            for v in 0..m {
                let f = res(v as i64, m);
                match (lift_idempotent(&f), lift_by_projection(&f, &fact)) {
                    (Ok(out), Ok(g)) => assert_eq!(out.lifted, g, "{f}"),
                    (Err(Error::NotLiftable { .. }), Err(Error::NotLiftable { .. })) => {}
                    other => panic!("disagreement at {f}: {other:?}"),
                }
            }
        }
    }
}
