//! Prime bases, factored integers and Chinese remaindering.
//!
//! Orders of permutations and the witness exponents produced by the
//! reductions are kept as prime exponent vectors over a fixed ascending
//! basis. Residues of such numbers are computed by modular multiplication
//! without ever forming the integer itself.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic trial division. Adequate for the magnitudes the reductions use.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// A strictly increasing list of primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeBasis {
    primes: Vec<u64>,
}

impl PrimeBasis {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        for w in primes.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::UnsortedBasis);
            }
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeBasis { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    /// True if every prime `<= n` is in the basis.
    pub fn covers_upto(&self, n: usize) -> bool {
        let below = self.primes.iter().take_while(|&&p| p <= n as u64).count();
        self.primes[..below] == primes_upto(n).primes[..]
    }
}

/// All primes `<= n` in ascending order (sieve of Eratosthenes).
pub fn primes_upto(n: usize) -> PrimeBasis {
    if n < 2 {
        return PrimeBasis { primes: Vec::new() };
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    PrimeBasis { primes }
}

/// The `k` smallest primes strictly greater than `bound`.
pub fn first_k_primes_above(bound: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    let mut c = bound;
    while out.len() < k {
        c += 1;
        if is_prime(c) {
            out.push(c);
        }
    }
    out
}

/// `base^exp mod m` with 128-bit intermediates.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Anything that can be reduced modulo a cycle length. Used to raise
/// permutations to exponents that do not fit a machine word.
pub trait Exponent {
    /// `self mod modulus`; `modulus` is never zero.
    fn residue(&self, modulus: u64) -> u64;
}

impl Exponent for u64 {
    fn residue(&self, modulus: u64) -> u64 {
        self % modulus
    }
}

impl Exponent for u32 {
    fn residue(&self, modulus: u64) -> u64 {
        *self as u64 % modulus
    }
}

impl Exponent for usize {
    fn residue(&self, modulus: u64) -> u64 {
        *self as u64 % modulus
    }
}

impl Exponent for u128 {
    fn residue(&self, modulus: u64) -> u64 {
        (self % modulus as u128) as u64
    }
}

impl Exponent for BigUint {
    fn residue(&self, modulus: u64) -> u64 {
        (self % modulus).to_u64().expect("residue below a u64 modulus")
    }
}

impl Exponent for PrimeExponentVector {
    fn residue(&self, modulus: u64) -> u64 {
        self.mod_of(modulus).expect("modulus is nonzero")
    }
}

impl<E: Exponent + ?Sized> Exponent for &E {
    fn residue(&self, modulus: u64) -> u64 {
        (**self).residue(modulus)
    }
}

/// `pe(a)`: the exponents of `a`'s factorization over a shared basis.
#[derive(Debug, Clone)]
pub struct PrimeExponentVector {
    basis: Arc<PrimeBasis>,
    exps: Vec<u32>,
}

impl PartialEq for PrimeExponentVector {
    fn eq(&self, other: &Self) -> bool {
        self.same_basis(other) && self.exps == other.exps
    }
}

impl Eq for PrimeExponentVector {}

impl PrimeExponentVector {
    /// The vector of `1`.
    pub fn one(basis: Arc<PrimeBasis>) -> Self {
        let exps = vec![0; basis.len()];
        PrimeExponentVector { basis, exps }
    }

    pub fn from_exponents(basis: Arc<PrimeBasis>, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != basis.len() {
            return Err(Error::BasisMismatch);
        }
        Ok(PrimeExponentVector { basis, exps })
    }

    /// Factor `a` over `basis`.
    pub fn of(a: u64, basis: &Arc<PrimeBasis>) -> Result<Self> {
        if a == 0 {
            return Err(Error::OutsideBasis { value: 0 });
        }
        let mut rest = a;
        let mut exps = vec![0u32; basis.len()];
        for (e, &p) in exps.iter_mut().zip(basis.primes()) {
            if p.saturating_mul(p) > rest {
                break;
            }
            while rest % p == 0 {
                rest /= p;
                *e += 1;
            }
        }
        // What is left is 1 or a single prime.
        if rest != 1 {
            match basis.index_of(rest) {
                Some(i) => exps[i] += 1,
                None => return Err(Error::OutsideBasis { value: a }),
            }
        }
        Ok(PrimeExponentVector { basis: Arc::clone(basis), exps })
    }

    pub fn basis(&self) -> &Arc<PrimeBasis> {
        &self.basis
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `ν_p`, or 0 if `p` is not in the basis.
    pub fn valuation(&self, p: u64) -> u32 {
        self.basis.index_of(p).map_or(0, |i| self.exps[i])
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn same_basis(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.same_basis(other) {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Ok(PrimeExponentVector { basis: Arc::clone(&self.basis), exps })
    }

    /// Whether `self` divides `other`: componentwise `<=`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_basis(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// `self / divisor`, componentwise difference.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        if !divisor.divides(self)? {
            return Err(Error::NotDivisible);
        }
        let exps = self.exps.iter().zip(&divisor.exps).map(|(&a, &b)| a - b).collect();
        Ok(PrimeExponentVector { basis: Arc::clone(&self.basis), exps })
    }

    /// The represented integer modulo `modulus`.
    pub fn mod_of(&self, modulus: u64) -> Result<u64> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = modulus as u128;
        let mut acc = 1u128 % m;
        for (&p, &e) in self.basis.primes().iter().zip(&self.exps) {
            if e > 0 {
                acc = acc * pow_mod(p, e as u64, modulus) as u128 % m;
            }
        }
        Ok(acc as u64)
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in self.basis.primes().iter().zip(&self.exps) {
            if e > 0 {
                acc *= BigUint::from(p).pow(e);
            }
        }
        acc
    }

    /// The integer value when it fits in 128 bits.
    pub fn to_u128(&self) -> Option<u128> {
        let mut acc = 1u128;
        for (&p, &e) in self.basis.primes().iter().zip(&self.exps) {
            for _ in 0..e {
                acc = acc.checked_mul(p as u128)?;
            }
        }
        Some(acc)
    }
}

/// Factored rendering, e.g. `2^2·3·7`; the empty product prints as `1`.
impl fmt::Display for PrimeExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&p, &e) in self.basis.primes().iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A system `x ≡ r_i (mod m_i)` with pairwise coprime moduli.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CongruenceSystem {
    pairs: Vec<(u64, u64)>,
}

impl CongruenceSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `x ≡ residue (mod modulus)`. Negative residues are reduced into
    /// `[0, modulus)`.
    pub fn push(&mut self, residue: i64, modulus: u64) -> Result<&mut Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(&(_, m)) = self.pairs.iter().find(|&&(_, m)| m.gcd(&modulus) != 1) {
            return Err(Error::NotCoprime(m, modulus));
        }
        let r = (residue as i128).rem_euclid(modulus as i128) as u64;
        self.pairs.push((r, modulus));
        Ok(self)
    }

    pub fn with(mut self, residue: i64, modulus: u64) -> Result<Self> {
        self.push(residue, modulus)?;
        Ok(self)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn modulus_product(&self) -> BigUint {
        self.pairs.iter().map(|&(_, m)| BigUint::from(m)).product()
    }

    pub fn is_satisfied_by(&self, x: &BigUint) -> bool {
        self.pairs.iter().all(|&(r, m)| x.residue(m) == r)
    }

    /// The smallest positive solution. When the solution class is that of 0,
    /// this is the product of the moduli rather than 0.
    pub fn crt_smallest(&self) -> BigUint {
        let mut x = BigUint::zero();
        let mut modulus = BigUint::one();
        for &(r, m) in &self.pairs {
            // x + modulus·k ≡ r (mod m)
            let x_m = x.residue(m);
            let mod_m = modulus.residue(m);
            let inv = inv_mod(mod_m, m).expect("moduli are pairwise coprime");
            let diff = (r as u128 + m as u128 - x_m as u128) % m as u128;
            let k = diff * inv as u128 % m as u128;
            x += &modulus * BigUint::from(k as u64);
            modulus *= m;
        }
        if x.is_zero() {
            modulus
        } else {
            x
        }
    }
}

/// Shorthand for [`PrimeExponentVector::of`].
pub fn pe(a: u64, basis: &Arc<PrimeBasis>) -> Result<PrimeExponentVector> {
    PrimeExponentVector::of(a, basis)
}
