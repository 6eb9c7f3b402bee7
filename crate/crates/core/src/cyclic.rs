//! Deciding whether a cyclic group `⟨π⟩` contains an element with the cycle
//! type of `ρ`.
//!
//! Any power `π^q` with `ct(π^q) = ct(ρ)` has order `ord(ρ)`, so `ord(ρ)` must
//! divide `ord(π)`. When it does, `⟨π⟩` has exactly one subgroup of that
//! order, generated by `π^d` with `d = ord(π)/ord(ρ)`, and every generator of
//! that subgroup has the cycle type of `π^d`. So `π^d` is the only candidate
//! that needs checking; no exponent search takes place.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::{basis_for_degree, Permutation};
use crate::prime_arith::{PrimeBasis, PrimeExponentVector};

/// Why the decider answered the way it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionReason {
    /// `ord(ρ) ∤ ord(π)`.
    OrderNotDividing,
    /// `ord(ρ) | ord(π)` but `ct(π^d) ≠ ct(ρ)`.
    TypeMismatchAtD,
    Match,
}

impl DecisionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            DecisionReason::OrderNotDividing => "order-not-dividing",
            DecisionReason::TypeMismatchAtD => "type-mismatch",
            DecisionReason::Match => "match",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecision {
    pub answer: bool,
    /// `pe(d)`, present iff `answer`.
    pub witness_d: Option<PrimeExponentVector>,
    pub reason: DecisionReason,
}

fn shared_basis(a: &Permutation, b: &Permutation) -> Arc<PrimeBasis> {
    basis_for_degree(a.degree().max(b.degree()))
}

/// Whether `ord(ρ)` divides `ord(π)`. Degrees may differ.
pub fn order_divides(rho: &Permutation, pi: &Permutation) -> bool {
    let basis = shared_basis(rho, pi);
    let o_rho = rho.order_pe(&basis).expect("basis covers both degrees");
    let o_pi = pi.order_pe(&basis).expect("basis covers both degrees");
    o_rho.divides(&o_pi).expect("same basis")
}

/// `pe(d)` for `d = ord(π)/ord(ρ)`.
pub fn order_quotient(pi: &Permutation, rho: &Permutation) -> Result<PrimeExponentVector> {
    let basis = shared_basis(rho, pi);
    let o_rho = rho.order_pe(&basis)?;
    let o_pi = pi.order_pe(&basis)?;
    o_pi.quotient(&o_rho).map_err(|_| Error::OrderNotDividing)
}

/// `π^d` for `d = ord(π)/ord(ρ)`. Each point advances `d mod ℓ` steps
/// along its cycle of length `ℓ`.
pub fn power_quotient(pi: &Permutation, rho: &Permutation) -> Result<Permutation> {
    let d = order_quotient(pi, rho)?;
    Ok(pi.power(&d))
}

/// Decides whether some power of `π` has the cycle type of `ρ`.
pub fn decide_cycletype_cyclic(pi: &Permutation, rho: &Permutation) -> Result<CyclicDecision> {
    if pi.degree() != rho.degree() {
        return Err(Error::DegreeMismatch { left: pi.degree(), right: rho.degree() });
    }
    let d = match order_quotient(pi, rho) {
        Ok(d) => d,
        Err(Error::OrderNotDividing) => {
            return Ok(CyclicDecision {
                answer: false,
                witness_d: None,
                reason: DecisionReason::OrderNotDividing,
            })
        }
        Err(e) => return Err(e),
    };
    if pi.power(&d).cycle_type() == rho.cycle_type() {
        Ok(CyclicDecision { answer: true, witness_d: Some(d), reason: DecisionReason::Match })
    } else {
        Ok(CyclicDecision { answer: false, witness_d: None, reason: DecisionReason::TypeMismatchAtD })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(cycles: &[&[usize]], n: usize) -> Permutation {
        Permutation::from_cycles(cycles, n).unwrap()
    }

    fn six() -> Permutation {
        Permutation::cycle_power(6, 1u64).unwrap()
    }

    fn iterate_order(p: &Permutation) -> u64 {
        let mut cur = p.clone();
        let mut i = 1;
        while !cur.is_identity() {
            cur = cur.compose(p).unwrap();
            i += 1;
        }
        i
    }

    #[test]
    fn order_divides_examples() {
        assert!(order_divides(&cyc(&[&[1, 2]], 2), &six()));
        assert!(!order_divides(&Permutation::cycle_power(4, 1u64).unwrap(), &six()));
        let rho = cyc(&[&[1, 2], &[3, 4, 5]], 5);
        let pi = Permutation::cycle_power(12, 1u64).unwrap();
        assert_eq!(iterate_order(&rho), 6);
        assert_eq!(iterate_order(&pi), 12);
        assert!(order_divides(&rho, &pi));
    }

    #[test]
    fn power_quotient_examples() {
        let rho = cyc(&[&[1, 2], &[3, 4]], 6);
        let cube = six().compose(&six()).unwrap().compose(&six()).unwrap();
        assert_eq!(power_quotient(&six(), &rho).unwrap(), cube);
        assert_eq!(cube, cyc(&[&[1, 4], &[2, 5], &[3, 6]], 6));

        let same_order = cyc(&[&[1, 2, 3], &[4, 5]], 6);
        assert_eq!(power_quotient(&six(), &same_order).unwrap(), six());

        let pi = cyc(&[&[1, 2, 3], &[4, 5]], 5);
        let rho = cyc(&[&[1, 2, 3]], 5);
        let squared = pi.compose(&pi).unwrap();
        assert_eq!(power_quotient(&pi, &rho).unwrap(), squared);
        assert_eq!(squared, cyc(&[&[1, 3, 2]], 5));

        let four = Permutation::cycle_power(4, 1u64).unwrap();
        assert_eq!(power_quotient(&six(), &four), Err(Error::OrderNotDividing));
    }

    #[test]
    fn decide_examples() {
        let rho = cyc(&[&[1, 2], &[3, 4], &[5, 6]], 6);
        let d = decide_cycletype_cyclic(&six(), &rho).unwrap();
        assert!(d.answer);
        assert_eq!(d.reason, DecisionReason::Match);
        assert_eq!(d.witness_d.unwrap().to_u128(), Some(3));

        let p = cyc(&[&[1, 4, 2], &[3, 5]], 6);
        let d = decide_cycletype_cyclic(&p, &p).unwrap();
        assert!(d.answer);
        assert_eq!(d.witness_d.unwrap().to_u128(), Some(1));

        let rho = cyc(&[&[1, 2], &[3, 4]], 6);
        let d = decide_cycletype_cyclic(&six(), &rho).unwrap();
        assert!(!d.answer);
        assert_eq!(d.reason, DecisionReason::TypeMismatchAtD);
        assert_eq!(d.witness_d, None);

        let rho = cyc(&[&[1, 2, 3, 4]], 6);
        let d = decide_cycletype_cyclic(&six(), &rho).unwrap();
        assert_eq!(d.reason, DecisionReason::OrderNotDividing);

        assert!(decide_cycletype_cyclic(&six(), &Permutation::identity(5).unwrap()).is_err());
    }

    #[test]
    fn decide_against_brute_force_q_scan() {
        // π = 6-cycle: only q = 3 yields three 2-cycles.
        let rho = cyc(&[&[1, 2], &[3, 4], &[5, 6]], 6);
        let hits: Vec<u64> =
            (0..6u64).filter(|&q| six().power(q).cycle_type() == rho.cycle_type()).collect();
        assert_eq!(hits, vec![3]);
        let rho = cyc(&[&[1, 2], &[3, 4]], 6);
        assert!((0..6u64).all(|q| six().power(q).cycle_type() != rho.cycle_type()));
    }
}
