//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function takes text fields from the page and returns a JSON
//! string. The `*_json` functions hold the logic so they can be tested
//! natively.

use num_bigint::BigUint;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cycletype::notation::{format_permutation, parse_permutation};
use cycletype::reductions::reduce_x3hs_with_cap;
use cycletype::{
    decide_cycletype_cyclic, extract_hitting_set, verify_witness_cycletype, witness_from_hitting_set,
    Permutation, X3hsInstance,
};

/// Keeps the gadget view responsive in a browser tab.
pub const GADGET_DEGREE_CAP: usize = 2_000_000;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn parse_pair(pi: &str, rho: &str) -> Result<(Permutation, Permutation), String> {
    let deg = [pi, rho].iter().filter_map(|t| parse_permutation(t, None).ok()).map(|p| p.degree()).max();
    let pi = parse_permutation(pi, deg).map_err(|e| format!("π: {e}"))?;
    let rho = parse_permutation(rho, deg).map_err(|e| format!("ρ: {e}"))?;
    Ok((pi, rho))
}

/// Decimal, or a product like `2^3·5`.
fn parse_exponent(text: &str) -> Result<BigUint, String> {
    let bad = || format!("{text:?}: expected a nonnegative integer or a product like 2^3·5");
    let mut acc = BigUint::from(1u32);
    for factor in text.trim().split(['·', '*']) {
        let (base, exp) = match factor.trim().split_once('^') {
            Some((b, e)) => (b, e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let base: BigUint = base.trim().parse().map_err(|_| bad())?;
        acc *= base.pow(exp);
    }
    Ok(acc)
}

fn ct_json(p: &Permutation) -> Value {
    json!({
        "text": p.cycle_type().to_string(),
        "order": p.order().to_string(),
        "fixpoints": p.cycle_type().fixpoints(),
    })
}

/// Cycles, cycle type and order of `π` and of `π^x`.
pub fn explore_power_json(perm: &str, exp: &str) -> Result<String, String> {
    let p = parse_permutation(perm, None).map_err(err)?;
    let x = parse_exponent(exp)?;
    let q = p.power(&x);
    Ok(json!({
        "pi": { "cycles": format_permutation(&p, false), "type": ct_json(&p) },
        "power": { "exponent": x.to_string(), "cycles": format_permutation(&q, false), "type": ct_json(&q) },
    })
    .to_string())
}

/// Whether some power of `π` has the cycle type of `ρ`.
pub fn decide_cyclic_json(pi: &str, rho: &str) -> Result<String, String> {
    let (pi, rho) = parse_pair(pi, rho)?;
    let d = decide_cycletype_cyclic(&pi, &rho).map_err(err)?;
    let power = d.witness_d.as_ref().map(|w| format_permutation(&pi.power(w), false));
    Ok(json!({
        "answer": d.answer,
        "reason": d.reason.as_str(),
        "d": d.witness_d.as_ref().map(|w| w.to_string()),
        "power": power,
        "pi_type": pi.cycle_type().to_string(),
        "rho_type": rho.cycle_type().to_string(),
    })
    .to_string())
}

fn parse_blocks(text: &str) -> Result<Vec<[usize; 3]>, String> {
    text.split([';', '\n'])
        .map(str::trim)
        .filter(|b| !b.is_empty())
        .map(|b| {
            let pts: Vec<usize> = b
                .split([' ', ',', '{', '}'])
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| format!("not a point: {s:?}")))
                .collect::<Result<_, _>>()?;
            pts.try_into().map_err(|_| format!("a block needs three points: {b:?}"))
        })
        .collect()
}

fn parse_subset(text: &str) -> Result<Vec<usize>, String> {
    let mut t: Vec<usize> = text
        .split([' ', ',', '{', '}'])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("not a point: {s:?}")))
        .collect::<Result<_, _>>()?;
    t.sort_unstable();
    t.dedup();
    Ok(t)
}

/// Builds the cycle-type gadget for an X3HS instance and, for a candidate
/// set `T`, the witness and the cycle type it produces on every block.
pub fn x3hs_gadget_json(n: usize, blocks: &str, subset: &str) -> Result<String, String> {
    let inst = X3hsInstance::new(n, parse_blocks(blocks)?).map_err(err)?;
    let red = reduce_x3hs_with_cap(&inst, GADGET_DEGREE_CAP).map_err(err)?;
    let components: Vec<Value> = red
        .layout()
        .components
        .iter()
        .map(|c| json!({ "label": c.label, "degree": c.degree, "rho": c.rho, "pi1": c.pi1, "pi2": c.pi2 }))
        .collect();
    let blocks: Vec<Value> = red
        .blocks()
        .iter()
        .map(|b| json!({ "elements": b.elements, "primes": b.primes, "q": b.q, "r": b.r, "s": b.s, "t": b.t }))
        .collect();
    let t = parse_subset(subset)?;
    let candidate = if subset.trim().is_empty() {
        Value::Null
    } else if !inst.is_exact_hitting_set(&t) {
        json!({ "set": t, "exact": false })
    } else {
        let w = witness_from_hitting_set(&red, &t).map_err(err)?;
        let prod = red.pi1().power(&w.x1).compose(&red.pi2().power(&w.x2)).map_err(err)?;
        let per_block: Vec<Value> = (1..=red.blocks().len())
            .map(|j| {
                let (off, len) = red.block_range(j);
                let got = prod.restrict(off, len).map(|p| p.cycle_type().to_string());
                let want = red.rho().restrict(off, len).map(|p| p.cycle_type().to_string());
                json!({ "block": j, "product": got.ok(), "rho": want.ok() })
            })
            .collect();
        json!({
            "set": t,
            "exact": true,
            "x1": w.x1.to_string(),
            "x2": w.x2.to_string(),
            "verified": verify_witness_cycletype(&red, &w),
            "extracted": extract_hitting_set(&red, &w).ok(),
            "blocks": per_block,
        })
    };
    Ok(json!({
        "n_total": red.degree(),
        "target_type": red.target_cycle_type().to_string(),
        "components": components,
        "blocks": blocks,
        "candidate": candidate,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn explore_power(perm: &str, exp: &str) -> Result<String, JsValue> {
    explore_power_json(perm, exp).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decide_cyclic(pi: &str, rho: &str) -> Result<String, JsValue> {
    decide_cyclic_json(pi, rho).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn x3hs_gadget(n: usize, blocks: &str, subset: &str) -> Result<String, JsValue> {
    x3hs_gadget_json(n, blocks, subset).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn power_view() {
        let out = v(explore_power_json("(1 2 3 4 5 6)", "2"));
        assert_eq!(out["power"]["cycles"], "deg=6 (1 3 5)(2 4 6)");
        assert_eq!(out["power"]["type"]["text"], "3^2");
        assert_eq!(out["pi"]["type"]["order"], "6");
        let out = v(explore_power_json("(1 2 3 4 5 6)", "2^2·3"));
        assert_eq!(out["power"]["cycles"], "deg=6 ()");
        assert!(explore_power_json("(1 2", "2").is_err());
        assert_eq!(v(explore_power_json("(1 2)", "0"))["power"]["cycles"], "deg=2 ()");
        assert!(explore_power_json("(1 2)", "x").is_err());
    }

    #[test]
    fn decide_view() {
        let out = v(decide_cyclic_json("(1 2 3 4 5 6)", "(1 2)(3 4)(5 6)"));
        assert_eq!(out["answer"], true);
        assert_eq!(out["d"], "3");
        assert_eq!(out["power"], "deg=6 (1 4)(2 5)(3 6)");
        let out = v(decide_cyclic_json("(1 2 3 4 5 6)", "(1 2 3 4)"));
        assert_eq!(out["reason"], "order-not-dividing");
    }

    #[test]
    fn gadget_view() {
        let out = v(x3hs_gadget_json(3, "1 2 3", "1"));
        assert_eq!(out["n_total"], 53523);
        assert_eq!(out["components"].as_array().unwrap().len(), 9);
        assert_eq!(out["blocks"][0]["t"], 1541);
        let c = &out["candidate"];
        assert_eq!(c["x2"], "231");
        assert_eq!(c["verified"], true);
        assert_eq!(c["extracted"], json!([1]));
        assert_eq!(c["blocks"][0]["product"], c["blocks"][0]["rho"]);

        let out = v(x3hs_gadget_json(3, "{1,2,3}", "1 2"));
        assert_eq!(out["candidate"]["exact"], false);
        let out = v(x3hs_gadget_json(3, "1 2 3", ""));
        assert!(out["candidate"].is_null());
        assert!(x3hs_gadget_json(3, "1 2", "").is_err());
        assert!(x3hs_gadget_json(9, "1 2 3; 4 5 6; 7 8 9", "").is_err());
    }
}
