//! Algebraic laws checked against naive oracles.

use std::sync::Arc;

use num_bigint::BigUint;
use proptest::prelude::*;

use cycletype::perm::basis_for_degree;
use cycletype::prime_arith::{pe, primes_upto, PrimeBasis};
use cycletype::solvers::{all_permutations, power_product};
use cycletype::{CongruenceSystem, CycleType, Permutation, PrimeExponentVector};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn naive_power(p: &Permutation, x: u64) -> Permutation {
    let mut acc = Permutation::identity(p.degree()).unwrap();
    for _ in 0..x {
        acc = acc.compose(p).unwrap();
    }
    acc
}

fn naive_order(p: &Permutation) -> u64 {
    let mut cur = p.clone();
    let mut k = 1;
    while !cur.is_identity() {
        cur = cur.compose(p).unwrap();
        k += 1;
    }
    k
}

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(perm_of)
}

fn triple(max: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm_of(n), perm_of(n), perm_of(n)))
}

proptest! {
    #[test]
    fn group_laws((a, b, c) in triple(50)) {
        let id = Permutation::identity(a.degree()).unwrap();
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn right_action(a in arb_perm(30), seed in any::<u64>()) {
        let b = {
            let n = a.degree();
            let mut v: Vec<usize> = (1..=n).collect();
            v.rotate_left((seed as usize) % n);
            Permutation::from_images(&v).unwrap()
        };
        let ab = a.compose(&b).unwrap();
        for x in 1..=a.degree() {
            prop_assert_eq!(ab.image(x), b.image(a.image(x)));
        }
    }

    #[test]
    fn power_is_repeated_composition(p in arb_perm(30), x in 0u64..64) {
        prop_assert_eq!(p.power(x), naive_power(&p, x));
    }

    #[test]
    fn power_with_huge_exponent(p in arb_perm(40), x in any::<u64>(), y in any::<u64>()) {
        let big = BigUint::from(x) * BigUint::from(y);
        let ord = naive_order(&p);
        let reduced = (&big % ord).iter_u64_digits().next().unwrap_or(0);
        prop_assert_eq!(p.power(&big), naive_power(&p, reduced));
    }

    #[test]
    fn factored_exponent_agrees(p in arb_perm(30), a in 1u64..5000) {
        let basis = basis_for_degree(5000);
        let v = pe(a, &basis).unwrap();
        prop_assert_eq!(p.power(&v), p.power(a));
    }

    #[test]
    fn cycles_round_trip(p in arb_perm(60)) {
        prop_assert_eq!(p.to_cycles().to_permutation(), p.clone());
        let cycles = p.to_cycles();
        prop_assert_eq!(Permutation::from_cycles(cycles.cycles(), p.degree()).unwrap(), p.clone());
        prop_assert_eq!(p.cycle_type().degree(), p.degree());
    }

    #[test]
    fn conjugation_preserves_type((r, s, _) in triple(30)) {
        let conj = s.inverse().compose(&r).unwrap().compose(&s).unwrap();
        prop_assert_eq!(conj.cycle_type(), r.cycle_type());
        let sigma = conj.conjugator(&r).unwrap().expect("same cycle type");
        prop_assert_eq!(sigma.inverse().compose(&r).unwrap().compose(&sigma).unwrap(), conj);
    }

    #[test]
    fn direct_sum_types(a in arb_perm(20), b in arb_perm(20)) {
        let s = Permutation::direct_sum(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(s.cycle_type(), a.cycle_type().union(&b.cycle_type()));
        prop_assert_eq!(s.restrict(0, a.degree()).unwrap(), a.clone());
        prop_assert_eq!(s.restrict(a.degree(), b.degree()).unwrap(), b);
    }

    #[test]
    fn representative_has_type(parts in proptest::collection::vec(1usize..12, 1..8)) {
        let ct = CycleType::from_lengths(parts);
        prop_assert_eq!(ct.representative().unwrap().cycle_type(), ct);
    }
}

#[test]
fn cycle_power_splits_by_gcd() {
    for l in 1..=60usize {
        for x in 0..=130u64 {
            let g = gcd(x, l as u64) as usize;
            let want = CycleType::from_counts([(l / g, g)]);
            assert_eq!(Permutation::cycle_power(l, x).unwrap().cycle_type(), want, "l={l} x={x}");
        }
    }
}

#[test]
fn conjugacy_iff_same_type_small() {
    for n in 1..=5 {
        let all = all_permutations(n);
        for r in &all {
            // Orbit of r under conjugation, computed by brute force.
            let orbit: std::collections::HashSet<Permutation> =
                all.iter().map(|s| s.inverse().compose(r).unwrap().compose(s).unwrap()).collect();
            for p in &all {
                let same = p.cycle_type() == r.cycle_type();
                assert_eq!(orbit.contains(p), same);
                assert_eq!(r.conjugator(p).unwrap().is_some(), same);
            }
        }
    }
}

#[test]
fn order_matches_iteration() {
    for n in 1..=6 {
        let basis = basis_for_degree(n);
        for p in all_permutations(n) {
            let want = naive_order(&p);
            assert_eq!(p.order(), BigUint::from(want));
            assert_eq!(p.order_pe(&basis).unwrap().to_u128(), Some(want as u128));
        }
    }
}

#[test]
fn commuting_product_power() {
    let a = Permutation::from_cycles(&[vec![1, 2, 3], vec![4, 5]], 7).unwrap();
    let b = Permutation::from_cycles(&[vec![6, 7]], 7).unwrap();
    for x1 in 0..8u64 {
        for x2 in 0..4u64 {
            let want = naive_power(&a, x1).compose(&naive_power(&b, x2)).unwrap();
            assert_eq!(power_product(&a, x1, &b, x2).unwrap(), want);
        }
    }
}

// Factored integers against plain integer arithmetic.

fn trial_factor(mut a: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= a {
        let mut e = 0;
        while a % p == 0 {
            a /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if a > 1 {
        out.push((a, 1));
    }
    out
}

#[test]
fn pe_round_trip_exhaustive() {
    let basis = Arc::new(primes_upto(100_000));
    for a in 1..=100_000u64 {
        let v = pe(a, &basis).unwrap();
        assert_eq!(v.to_u128(), Some(a as u128));
        for (p, e) in trial_factor(a) {
            assert_eq!(v.valuation(p), e);
        }
    }
}

// About a minute on one core; run with `cargo test -- --ignored`.
#[test]
#[ignore]
fn pe_round_trip_to_a_million() {
    let basis = million_basis();
    for a in 1..=1_000_000u64 {
        assert_eq!(pe(a, &basis).unwrap().to_u128(), Some(a as u128));
    }
}

fn million_basis() -> Arc<PrimeBasis> {
    use std::sync::OnceLock;
    static B: OnceLock<Arc<PrimeBasis>> = OnceLock::new();
    B.get_or_init(|| Arc::new(primes_upto(1_000_000))).clone()
}

proptest! {
    #[test]
    fn pe_round_trip_sampled(a in 1u64..=1_000_000) {
        let v = pe(a, &million_basis()).unwrap();
        prop_assert_eq!(v.to_u128(), Some(a as u128));
    }

    #[test]
    fn lcm_divides_quotient(a in 1u64..=1_000_000, b in 1u64..=1_000_000) {
        let basis = million_basis();
        let (va, vb) = (pe(a, &basis).unwrap(), pe(b, &basis).unwrap());
        let l = a / gcd(a, b) * b;
        prop_assert_eq!(va.lcm(&vb).unwrap().to_u128(), Some(l as u128));
        prop_assert_eq!(va.divides(&vb).unwrap(), b % a == 0);
        if b % a == 0 {
            prop_assert_eq!(vb.quotient(&va).unwrap().to_u128(), Some((b / a) as u128));
        } else {
            prop_assert!(vb.quotient(&va).is_err());
        }
    }

    #[test]
    fn mod_of_matches_integer(exps in proptest::collection::vec(0u32..6, 10), m in 1u64..1_000_000_007) {
        let basis = basis_for_degree(30);
        let v = PrimeExponentVector::from_exponents(basis, exps).unwrap();
        let want = v.to_biguint() % m;
        prop_assert_eq!(BigUint::from(v.mod_of(m).unwrap()), want);
    }

    #[test]
    fn crt_is_smallest_positive(
        picks in proptest::collection::vec((0usize..10, any::<i32>()), 1..5)
    ) {
        // Pairwise coprime moduli drawn from a fixed list of prime powers.
        const MODULI: [u64; 10] = [4, 9, 5, 7, 11, 13, 17, 19, 23, 29];
        let mut sys = CongruenceSystem::new();
        let mut used = Vec::new();
        let mut product = 1u64;
        for (i, r) in picks {
            if used.contains(&i) || product * MODULI[i] > 1_000_000 {
                continue;
            }
            used.push(i);
            product *= MODULI[i];
            sys.push(r as i64, MODULI[i]).unwrap();
        }
        let x = sys.crt_smallest();
        prop_assert!(sys.is_satisfied_by(&x));
        let x = u64::try_from(x).unwrap();
        prop_assert!(x >= 1 && x <= product);
        let residues: Vec<(u64, u64)> = sys.pairs().to_vec();
        let first = (1..=product).find(|y| residues.iter().all(|&(r, m)| y % m == r)).unwrap();
        prop_assert_eq!(x, first);
    }
}
