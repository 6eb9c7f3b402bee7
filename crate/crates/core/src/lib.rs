//! Cycle types in permutation groups.
//!
//! * [`perm`]: permutation algebra, cycle decompositions and cycle types.
//! * [`prime_arith`]: prime bases, factored integers and CRT.
//! * [`cyclic`]: deciding whether `⟨π⟩` contains an element with a given cycle type.
//! * [`reductions`]: exact 3-hitting set and 3-SAT reductions into 2-generated
//!   abelian permutation groups, with witness translation both ways.
//! * [`solvers`]: brute-force oracles and witness verifiers.
//! * [`notation`], [`dimacs`], [`json`]: text and file formats.

pub mod cyclic;
pub mod dimacs;
pub mod error;
pub mod json;
pub mod notation;
pub mod perm;
pub mod prime_arith;
pub mod reductions;
pub mod solvers;

pub use cyclic::{decide_cycletype_cyclic, order_divides, power_quotient, CyclicDecision, DecisionReason};
pub use error::{Error, Result};
pub use perm::{CycleDecomposition, CycleType, Permutation, DEGREE_CAP};
pub use prime_arith::{CongruenceSystem, Exponent, PrimeBasis, PrimeExponentVector};
pub use reductions::{
    extract_assignment, extract_hitting_set, reduce_3sat, reduce_x3hs, witness_from_assignment,
    witness_from_hitting_set, Cnf3Instance, Instance, Literal, ReducedCycleTypeInstance,
    ReducedFpfInstance, ReductionLayout, WitnessExponents, X3hsInstance,
};
pub use solvers::{
    brute_cyclic, solve_cycletype_ab2, solve_fpf_ab2, verify_witness_cycletype, verify_witness_fpf,
    SearchBudget, SolveResult, SolveStatus,
};
