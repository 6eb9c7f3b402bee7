//! Permutations of `[n] = {1, …, n}`.
//!
//! Permutations act on the right: the image of `a` under `π` is written `aπ`,
//! and the product `πτ` first applies `π`, then `τ`, so `a(πτ) = (aπ)τ`.
//! Points are 1-based at every public boundary and stored 0-based.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::prime_arith::{primes_upto, Exponent, PrimeBasis, PrimeExponentVector};

/// Largest supported degree.
pub const DEGREE_CAP: usize = 1 << 24;

/// A permutation in pointwise representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    fn check_degree(n: u128) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if n > DEGREE_CAP as u128 {
            return Err(Error::DegreeCap { degree: n, cap: DEGREE_CAP });
        }
        Ok(())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::check_degree(n as u128)?;
        Ok(Permutation { images: (0..n as u32).collect() })
    }

    /// Builds from a 1-based image list: `images[a - 1] = aπ`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        Self::check_degree(n as u128)?;
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &b in images {
            if b == 0 || b > n {
                return Err(Error::PointOutOfRange { point: b, degree: n });
            }
            if std::mem::replace(&mut seen[b - 1], true) {
                return Err(Error::DuplicatePoint(b));
            }
            out.push((b - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Trusted constructor for 0-based images already known to be a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(!images.is_empty());
        Permutation { images }
    }

    /// Builds from disjoint cycles over `[n]`; unlisted points are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], n: usize) -> Result<Self> {
        let mut p = Self::identity(n)?;
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &a in cycle {
                if a == 0 || a > n {
                    return Err(Error::PointOutOfRange { point: a, degree: n });
                }
                if std::mem::replace(&mut seen[a - 1], true) {
                    return Err(Error::DuplicatePoint(a));
                }
            }
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                p.images[a - 1] = (b - 1) as u32;
            }
        }
        Ok(p)
    }

    /// `([len])^exp`: the standard `len`-cycle `(1, 2, …, len)` raised to `exp`.
    pub fn cycle_power<E: Exponent>(len: usize, exp: E) -> Result<Self> {
        Self::check_degree(len as u128)?;
        let k = exp.residue(len as u64) as usize;
        Ok(Permutation { images: (0..len).map(|a| ((a + k) % len) as u32).collect() })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `aπ` for a 1-based point.
    pub fn image(&self, a: usize) -> usize {
        self.images[a - 1] as usize + 1
    }

    /// The 1-based pointwise representation.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&b| b as usize + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a as u32 == b)
    }

    pub fn is_fixpoint_free(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a as u32 != b)
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// `πτ`, with `a(πτ) = (aπ)τ`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(Permutation { images: self.images.iter().map(|&b| other.images[b as usize]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            inv[b as usize] = a as u32;
        }
        Permutation { images: inv }
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        self.check_same_degree(other)?;
        Ok(self.images.iter().enumerate().all(|(a, &b)| {
            other.images[b as usize] == self.images[other.images[a] as usize]
        }))
    }

    /// Calls `f` on every cycle (0-based points), starting each cycle at its
    /// smallest point and visiting cycles in order of that point.
    pub(crate) fn for_each_cycle(&self, mut f: impl FnMut(&[u32])) {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut buf = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            buf.clear();
            let mut a = start as u32;
            loop {
                seen[a as usize] = true;
                buf.push(a);
                a = self.images[a as usize];
                if a as usize == start {
                    break;
                }
            }
            f(&buf);
        }
    }

    pub fn to_cycles(&self) -> CycleDecomposition {
        let mut cycles = Vec::new();
        self.for_each_cycle(|c| cycles.push(c.iter().map(|&a| a as usize + 1).collect()));
        CycleDecomposition { degree: self.degree(), cycles }
    }

    /// `π^x`, computed on each cycle as a rotation by `x mod ℓ`.
    pub fn power<E: Exponent>(&self, exp: E) -> Self {
        let mut out = vec![0u32; self.images.len()];
        let mut shifts: HashMap<usize, usize> = HashMap::new();
        self.for_each_cycle(|c| {
            let len = c.len();
            let k = *shifts.entry(len).or_insert_with(|| exp.residue(len as u64) as usize);
            for (i, &a) in c.iter().enumerate() {
                out[a as usize] = c[(i + k) % len];
            }
        });
        Permutation { images: out }
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        self.for_each_cycle(|c| *counts.entry(c.len()).or_insert(0) += 1);
        CycleType { entries: counts.into_iter().collect() }
    }

    /// `pe(ord(π))` over `basis`, which must contain every prime `<= n`.
    pub fn order_pe(&self, basis: &Arc<PrimeBasis>) -> Result<PrimeExponentVector> {
        if !basis.covers_upto(self.degree()) {
            return Err(Error::BasisTooSmall(self.degree()));
        }
        self.cycle_type().order_pe(basis)
    }

    /// `ord(π)` as an integer.
    pub fn order(&self) -> BigUint {
        self.cycle_type().order()
    }

    /// Some `σ` with `π = σ⁻¹ρσ`, or `None` when the cycle types differ.
    pub fn conjugator(&self, rho: &Self) -> Result<Option<Self>> {
        self.check_same_degree(rho)?;
        let mut mine: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
        self.for_each_cycle(|c| mine.entry(c.len()).or_default().push(c.to_vec()));
        let mut sigma = vec![u32::MAX; self.degree()];
        let mut ok = true;
        // σ carries the k-th cycle of ρ of each length onto the k-th cycle of π.
        rho.for_each_cycle(|c| {
            match mine.get_mut(&c.len()).and_then(|v| v.pop()) {
                Some(target) => {
                    for (&b, &a) in c.iter().zip(&target) {
                        sigma[b as usize] = a;
                    }
                }
                None => ok = false,
            }
        });
        if !ok || mine.values().any(|v| !v.is_empty()) {
            return Ok(None);
        }
        Ok(Some(Permutation { images: sigma }))
    }

    /// Block-diagonal embedding of `parts` into `Sym(Σ degrees)`; part `k`
    /// acts on the points following those of parts `0..k`.
    pub fn direct_sum(parts: &[Permutation]) -> Result<Self> {
        let total: u128 = parts.iter().map(|p| p.degree() as u128).sum();
        Self::check_degree(total)?;
        let mut images = Vec::with_capacity(total as usize);
        for p in parts {
            let offset = images.len() as u32;
            images.extend(p.images.iter().map(|&b| b + offset));
        }
        Ok(Permutation { images })
    }

    /// The action on points `offset+1 ..= offset+len`, renumbered to `[len]`.
    /// Fails unless that block is invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Result<Self> {
        Self::check_degree(len as u128)?;
        let block = self
            .images
            .get(offset..offset + len)
            .ok_or(Error::NotInvariant { offset, len })?;
        let mut images = Vec::with_capacity(len);
        for &b in block {
            let b = b as usize;
            if b < offset || b >= offset + len {
                return Err(Error::NotInvariant { offset, len });
            }
            images.push((b - offset) as u32);
        }
        Ok(Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation(deg={}, {})", self.degree(), self.to_cycles())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.images())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(&v).map_err(D::Error::custom)
    }
}

/// Disjoint cycles covering `[n]`, fixpoints included as 1-cycles.
///
/// Canonical form: each cycle starts at its smallest point and cycles are
/// sorted by that point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(&self.cycles, self.degree).expect("canonical decomposition")
    }

    /// Cycle notation, e.g. `(1 2)(3 4 5)`. Fixpoints are dropped unless
    /// `explicit_fixpoints`; the identity with suppressed fixpoints is `()`.
    pub fn notation(&self, explicit_fixpoints: bool) -> String {
        let mut s = String::new();
        for c in self.cycles.iter().filter(|c| explicit_fixpoints || c.len() > 1) {
            s.push('(');
            for (i, a) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&a.to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation(false))
    }
}

/// The multiset of cycle lengths, as `(length, multiplicity)` pairs with
/// strictly increasing lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    entries: Vec<(usize, usize)>,
}

impl CycleType {
    pub fn from_lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let mut counts = BTreeMap::new();
        for l in lengths {
            assert!(l > 0, "cycle length must be positive");
            *counts.entry(l).or_insert(0) += 1;
        }
        CycleType { entries: counts.into_iter().collect() }
    }

    /// From `(length, multiplicity)` pairs in any order; repeated lengths add up.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(counts: I) -> Self {
        let mut map = BTreeMap::new();
        for (l, m) in counts {
            assert!(l > 0, "cycle length must be positive");
            if m > 0 {
                *map.entry(l).or_insert(0) += m;
            }
        }
        CycleType { entries: map.into_iter().collect() }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn count(&self, length: usize) -> usize {
        self.entries
            .binary_search_by_key(&length, |e| e.0)
            .map_or(0, |i| self.entries[i].1)
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|&(l, m)| l * m).sum()
    }

    pub fn fixpoints(&self) -> usize {
        self.count(1)
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        CycleType::from_counts(self.entries.iter().chain(&other.entries).copied())
    }

    pub fn order(&self) -> BigUint {
        self.entries
            .iter()
            .fold(BigUint::from(1u32), |acc, &(l, _)| acc.lcm(&BigUint::from(l)))
    }

    pub fn order_pe(&self, basis: &Arc<PrimeBasis>) -> Result<PrimeExponentVector> {
        let mut acc = PrimeExponentVector::one(Arc::clone(basis));
        for &(l, _) in &self.entries {
            acc = acc.lcm(&PrimeExponentVector::of(l as u64, basis)?)?;
        }
        Ok(acc)
    }

    /// A permutation with this cycle type: consecutive points per cycle,
    /// cycles in increasing length.
    pub fn representative(&self) -> Result<Permutation> {
        let mut cycles = Vec::new();
        let mut next = 1;
        for &(l, m) in &self.entries {
            for _ in 0..m {
                cycles.push((next..next + l).collect::<Vec<_>>());
                next += l;
            }
        }
        Permutation::from_cycles(&cycles, self.degree())
    }
}

/// `length^multiplicity` separated by spaces, e.g. `1^1 2^1 3^1`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}^{m}")?;
        }
        Ok(())
    }
}

/// Convenience for a basis covering every prime up to the degree.
pub fn basis_for_degree(n: usize) -> Arc<PrimeBasis> {
    Arc::new(primes_upto(n))
}
