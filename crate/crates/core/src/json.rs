//! JSON documents: source instances, reduced instances and witnesses.
//!
//! Large integers are written as decimal strings. Permutations are written
//! pointwise (1-based). A reduced instance embeds its source, the layout and
//! the generators; on load the document is checked against a fresh reduction
//! of the embedded source.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::perm::Permutation;
use crate::reductions::{
    reduce_3sat, reduce_x3hs, Cnf3Instance, Instance, ReducedCycleTypeInstance, ReducedFpfInstance,
    ReductionLayout, WitnessExponents, X3hsInstance,
};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("line {}, column {}: {0}", .0.line(), .0.column())]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// Either kind of reduced instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedInstance {
    CycleType(ReducedCycleTypeInstance),
    FixpointFree(ReducedFpfInstance),
}

#[derive(Serialize)]
#[serde(tag = "type")]
enum ReducedOut<'a> {
    #[serde(rename = "reduced-x3hs")]
    CycleType {
        coset: bool,
        source: &'a X3hsInstance,
        n_total: usize,
        layout: &'a ReductionLayout,
        rho: &'a Permutation,
        pi1: &'a Permutation,
        pi2: &'a Permutation,
    },
    #[serde(rename = "reduced-cnf3")]
    FixpointFree {
        coset: bool,
        source: &'a Cnf3Instance,
        n_total: usize,
        layout: &'a ReductionLayout,
        pi1: &'a Permutation,
        pi2: &'a Permutation,
    },
}

#[derive(Deserialize)]
#[serde(tag = "type")]
enum ReducedIn {
    #[serde(rename = "reduced-x3hs")]
    CycleType {
        coset: bool,
        source: X3hsInstance,
        n_total: usize,
        layout: ReductionLayout,
        rho: Permutation,
        pi1: Permutation,
        pi2: Permutation,
    },
    #[serde(rename = "reduced-cnf3")]
    FixpointFree {
        coset: bool,
        source: Cnf3Instance,
        n_total: usize,
        layout: ReductionLayout,
        pi1: Permutation,
        pi2: Permutation,
    },
}

pub fn read_instance(text: &str) -> Result<Instance, JsonError> {
    let inst: Instance = serde_json::from_str(text)?;
    // The constructors sort each block and clause before validating.
    Ok(match inst {
        Instance::X3hs(i) => Instance::X3hs(X3hsInstance::new(i.n, i.blocks)?),
        Instance::Cnf3(i) => Instance::Cnf3(Cnf3Instance::new(i.n, i.clauses)?),
    })
}

pub fn write_instance(inst: &Instance) -> String {
    serde_json::to_string(inst).expect("instances serialize")
}

pub fn write_reduced(inst: &ReducedInstance) -> String {
    let doc = match inst {
        ReducedInstance::CycleType(r) => ReducedOut::CycleType {
            coset: r.is_coset(),
            source: r.source(),
            n_total: r.degree(),
            layout: r.layout(),
            rho: r.rho(),
            pi1: r.pi1(),
            pi2: r.pi2(),
        },
        ReducedInstance::FixpointFree(r) => ReducedOut::FixpointFree {
            coset: r.is_coset(),
            source: r.source(),
            n_total: r.degree(),
            layout: r.layout(),
            pi1: r.pi1(),
            pi2: r.pi2(),
        },
    };
    serde_json::to_string(&doc).expect("reduced instances serialize")
}

fn mismatch() -> JsonError {
    JsonError::Invalid(Error::InvalidInstance("reduced instance does not match its source".into()))
}

pub fn read_reduced(text: &str) -> Result<ReducedInstance, JsonError> {
    match serde_json::from_str::<ReducedIn>(text)? {
        ReducedIn::CycleType { coset, source, n_total, layout, rho, pi1, pi2 } => {
            let fresh = reduce_x3hs(&source)?.with_coset(coset);
            if n_total != fresh.degree()
                || layout != *fresh.layout()
                || rho != *fresh.rho()
                || pi1 != *fresh.pi1()
                || pi2 != *fresh.pi2()
            {
                return Err(mismatch());
            }
            Ok(ReducedInstance::CycleType(fresh))
        }
        ReducedIn::FixpointFree { coset, source, n_total, layout, pi1, pi2 } => {
            let fresh = reduce_3sat(&source)?.with_coset(coset);
            if n_total != fresh.degree() || layout != *fresh.layout() || pi1 != *fresh.pi1() || pi2 != *fresh.pi2() {
                return Err(mismatch());
            }
            Ok(ReducedInstance::FixpointFree(fresh))
        }
    }
}

pub fn read_witness(text: &str) -> Result<WitnessExponents, JsonError> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_witness(w: &WitnessExponents) -> String {
    serde_json::to_string(w).expect("witnesses serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::Literal;

    #[test]
    fn reduced_round_trip() {
        let src = X3hsInstance::new(3, vec![[1, 2, 3]]).unwrap();
        let red = ReducedInstance::CycleType(reduce_x3hs(&src).unwrap().coset_restrict());
        let text = write_reduced(&red);
        assert!(text.starts_with(r#"{"type":"reduced-x3hs","coset":true,"source":{"n":3,"blocks":[[1,2,3]]},"n_total":53523,"#));
        assert!(text.contains(r#""t":"1541""#));
        assert_eq!(read_reduced(&text).unwrap(), red);

        let f = Cnf3Instance::new(3, vec![[Literal::pos(1), Literal::neg(2), Literal::pos(3)]]).unwrap();
        let red = ReducedInstance::FixpointFree(reduce_3sat(&f).unwrap());
        let text = write_reduced(&red);
        assert_eq!(read_reduced(&text).unwrap(), red);
    }

    #[test]
    fn tampered_reduced_instance_is_rejected() {
        let src = X3hsInstance::new(3, vec![[1, 2, 3]]).unwrap();
        let text = write_reduced(&ReducedInstance::CycleType(reduce_x3hs(&src).unwrap()));
        let tampered = text.replacen(r#""t":"1541""#, r#""t":"1542""#, 1);
        assert!(matches!(read_reduced(&tampered), Err(JsonError::Invalid(_))));
        let e = read_reduced("{\n  \"type\": 3").unwrap_err();
        assert!(e.to_string().starts_with("line 2"), "{e}");
    }

    #[test]
    fn instance_validation_on_read() {
        assert!(read_instance(r#"{"type":"x3hs","n":3,"blocks":[[1,2,2]]}"#).is_err());
        assert!(read_instance(r#"{"type":"x3hs","n":3,"blocks":[[1,2]]}"#).is_err());
        let i = read_instance(r#"{"type":"x3hs","n":3,"blocks":[[3,1,2]]}"#).unwrap();
        assert_eq!(write_instance(&i), r#"{"type":"x3hs","n":3,"blocks":[[1,2,3]]}"#);
    }

    #[test]
    fn witness_text() {
        let w = read_witness(r#"{"x1":"1","x2":"123456789012345678901234567890"}"#).unwrap();
        assert_eq!(w.x2.to_string(), "123456789012345678901234567890");
        assert_eq!(write_witness(&w), r#"{"x1":"1","x2":"123456789012345678901234567890"}"#);
        assert!(read_witness(r#"{"x1":"-1","x2":"0"}"#).is_err());
    }
}
