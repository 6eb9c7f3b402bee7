//! Brute-force oracles and witness verifiers.
//!
//! The exponent searches here are exponential in the input size and exist to
//! cross-check the decision procedure and the reductions on small inputs. For
//! commuting `π₁, π₂`, every element of `⟨π₁, π₂⟩` is `π₁^{x₁}π₂^{x₂}` with
//! `x₁ < ord(π₁)` and `x₂ < ord(π₂)`, so those ranges are exhaustive.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::prime_arith::Exponent;
use crate::reductions::{ReducedCycleTypeInstance, ReducedFpfInstance, WitnessExponents};

/// Default cap for [`enumerate_group`].
pub const GROUP_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_pairs: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_pairs: 10_000_000, time_limit: Duration::from_secs(60) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    FoundWitness,
    /// The whole range `[0, ord(π₁)) × [0, ord(π₂))` was searched.
    ExhaustedNoWitness,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub witness: Option<WitnessExponents>,
    pub pairs_tried: u64,
}

fn search_ab2(
    pi1: &Permutation,
    pi2: &Permutation,
    budget: SearchBudget,
    mut accept: impl FnMut(&Permutation) -> bool,
) -> Result<SolveResult> {
    if !pi1.commutes_with(pi2)? {
        return Err(Error::NotCommuting);
    }
    let start = Instant::now();
    let (o1, o2) = (pi1.order(), pi2.order());
    let total = &o1 * &o2;
    let exceeded = |tried| Ok(SolveResult { status: SolveStatus::BudgetExceeded, witness: None, pairs_tried: tried });
    let (Some(o1), Some(o2)) = (o1.to_u64(), o2.to_u64()) else {
        return exceeded(0);
    };

    let mut tried = 0u64;
    let mut row = Permutation::identity(pi1.degree())?;
    for x1 in 0..o1 {
        let mut cur = row.clone();
        for x2 in 0..o2 {
            if tried >= budget.max_pairs || start.elapsed() > budget.time_limit {
                return exceeded(tried);
            }
            tried += 1;
            if accept(&cur) {
                return Ok(SolveResult {
                    status: SolveStatus::FoundWitness,
                    witness: Some(WitnessExponents::new(x1, x2)),
                    pairs_tried: tried,
                });
            }
            cur = cur.compose(pi2)?;
        }
        row = row.compose(pi1)?;
    }
    debug_assert_eq!(BigUint::from(tried), total);
    Ok(SolveResult { status: SolveStatus::ExhaustedNoWitness, witness: None, pairs_tried: tried })
}

/// Searches `⟨π₁, π₂⟩` (commuting generators) for an element with the cycle
/// type of `ρ`, in lexicographic order of `(x₁, x₂)`.
pub fn solve_cycletype_ab2(
    pi1: &Permutation,
    pi2: &Permutation,
    rho: &Permutation,
    budget: SearchBudget,
) -> Result<SolveResult> {
    if pi1.degree() != rho.degree() {
        return Err(Error::DegreeMismatch { left: pi1.degree(), right: rho.degree() });
    }
    let target = rho.cycle_type();
    search_ab2(pi1, pi2, budget, |p| p.cycle_type() == target)
}

/// Searches `⟨π₁, π₂⟩` (commuting generators) for a fixpoint-free element.
pub fn solve_fpf_ab2(pi1: &Permutation, pi2: &Permutation, budget: SearchBudget) -> Result<SolveResult> {
    search_ab2(pi1, pi2, budget, Permutation::is_fixpoint_free)
}

/// The smallest `q < ord(π)` with `ct(π^q) = ct(ρ)`, found by scanning.
pub fn brute_cyclic(pi: &Permutation, rho: &Permutation, max_order: u64) -> Result<Option<u64>> {
    if pi.degree() != rho.degree() {
        return Err(Error::DegreeMismatch { left: pi.degree(), right: rho.degree() });
    }
    let ord = pi.order();
    let ord = match ord.to_u64() {
        Some(o) if o <= max_order => o,
        _ => return Err(Error::OrderBudget(ord.to_string())),
    };
    let target = rho.cycle_type();
    let mut cur = Permutation::identity(pi.degree())?;
    for q in 0..ord {
        if cur.cycle_type() == target {
            return Ok(Some(q));
        }
        cur = cur.compose(pi)?;
    }
    Ok(None)
}

/// `π₁^{x₁}π₂^{x₂}`, powering each cycle separately.
pub fn power_product<E1: Exponent, E2: Exponent>(
    pi1: &Permutation,
    x1: E1,
    pi2: &Permutation,
    x2: E2,
) -> Result<Permutation> {
    pi1.power(x1).compose(&pi2.power(x2))
}

pub fn verify_witness_cycletype(inst: &ReducedCycleTypeInstance, w: &WitnessExponents) -> bool {
    if inst.is_coset() && !w.x1.is_one() {
        return false;
    }
    match power_product(inst.pi1(), &w.x1, inst.pi2(), &w.x2) {
        Ok(p) => p.cycle_type() == *inst.target_cycle_type(),
        Err(_) => false,
    }
}

pub fn verify_witness_fpf(inst: &ReducedFpfInstance, w: &WitnessExponents) -> bool {
    if inst.is_coset() && !w.x1.is_one() {
        return false;
    }
    match power_product(inst.pi1(), &w.x1, inst.pi2(), &w.x2) {
        Ok(p) => p.is_fixpoint_free(),
        Err(_) => false,
    }
}

/// Closure of `gens` under composition, by breadth-first search. Fails once
/// more than `cap` elements have been found.
pub fn enumerate_group(gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroDegree);
    };
    let id = Permutation::identity(first.degree())?;
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut order = vec![id];
    let mut i = 0;
    while i < order.len() {
        let g = order[i].clone();
        for s in gens {
            let h = g.compose(s)?;
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                order.push(h);
            }
        }
        i += 1;
    }
    Ok(order)
}

/// All of `Sym(n)` in lexicographic order of the pointwise representation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_images(&cur).expect("a permutation"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleType;

    fn cyc(cycles: &[&[usize]], n: usize) -> Permutation {
        Permutation::from_cycles(cycles, n).unwrap()
    }

    #[test]
    fn ab2_examples() {
        let b = SearchBudget::default();
        let (a, c) = (cyc(&[&[1, 2]], 4), cyc(&[&[3, 4]], 4));
        let r = solve_cycletype_ab2(&a, &c, &cyc(&[&[1, 2], &[3, 4]], 4), b).unwrap();
        assert_eq!(r.status, SolveStatus::FoundWitness);
        assert_eq!(r.witness, Some(WitnessExponents::new(1u32, 1u32)));

        let r = solve_cycletype_ab2(&a, &c, &cyc(&[&[1, 2, 3]], 4), b).unwrap();
        assert_eq!(r.status, SolveStatus::ExhaustedNoWitness);
        assert_eq!(r.pairs_tried, 4);
        assert_eq!(r.witness, None);

        let (a, c) = (cyc(&[&[1, 2, 3]], 5), cyc(&[&[4, 5]], 5));
        let rho = CycleType::from_counts([(3, 1), (1, 2)]).representative().unwrap();
        let r = solve_cycletype_ab2(&a, &c, &rho, b).unwrap();
        assert_eq!(r.witness, Some(WitnessExponents::new(1u32, 0u32)));
    }

    #[test]
    fn fpf_examples() {
        let b = SearchBudget::default();
        let r = solve_fpf_ab2(&cyc(&[&[1, 2]], 4), &cyc(&[&[3, 4]], 4), b).unwrap();
        assert_eq!(r.witness, Some(WitnessExponents::new(1u32, 1u32)));
        let r = solve_fpf_ab2(&cyc(&[&[1, 2]], 3), &Permutation::identity(3).unwrap(), b).unwrap();
        assert_eq!(r.status, SolveStatus::ExhaustedNoWitness);
        let r = solve_fpf_ab2(&cyc(&[&[1, 2, 3]], 5), &cyc(&[&[4, 5]], 5), b).unwrap();
        assert_eq!(r.witness, Some(WitnessExponents::new(1u32, 1u32)));
    }

    #[test]
    fn solver_errors_and_budget() {
        let b = SearchBudget::default();
        let (a, c) = (cyc(&[&[1, 2]], 3), cyc(&[&[2, 3]], 3));
        assert_eq!(solve_fpf_ab2(&a, &c, b), Err(Error::NotCommuting));
        let id = Permutation::identity(3).unwrap();
        let tight = SearchBudget { max_pairs: 1, ..b };
        let r = solve_fpf_ab2(&cyc(&[&[1, 2]], 3), &id, tight).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert_eq!(r.pairs_tried, 1);
        // Exactly enough budget for the whole range is an exhaustive search.
        let exact = SearchBudget { max_pairs: 2, ..b };
        let r = solve_fpf_ab2(&cyc(&[&[1, 2]], 3), &id, exact).unwrap();
        assert_eq!(r.status, SolveStatus::ExhaustedNoWitness);
    }

    #[test]
    fn brute_cyclic_examples() {
        let six = Permutation::cycle_power(6, 1u64).unwrap();
        assert_eq!(brute_cyclic(&six, &cyc(&[&[1, 2], &[3, 4], &[5, 6]], 6), 100).unwrap(), Some(3));
        assert_eq!(brute_cyclic(&six, &Permutation::identity(6).unwrap(), 100).unwrap(), Some(0));
        assert_eq!(brute_cyclic(&six, &cyc(&[&[1, 2]], 6), 100).unwrap(), None);
        assert!(matches!(brute_cyclic(&six, &six, 5), Err(Error::OrderBudget(_))));
    }

    #[test]
    fn group_enumeration() {
        assert_eq!(all_permutations(4).len(), 24);
        let g = enumerate_group(&[cyc(&[&[1, 2]], 4), cyc(&[&[1, 2, 3, 4]], 4)], 100).unwrap();
        assert_eq!(g.len(), 24);
        assert_eq!(
            enumerate_group(&[cyc(&[&[1, 2]], 4), cyc(&[&[1, 2, 3, 4]], 4)], 10),
            Err(Error::GroupTooLarge(10))
        );
    }
}
