//! NP-hardness reductions into groups generated by two commuting permutations.
//!
//! * [`reduce_x3hs`] maps an exact 3-hitting-set instance to `(ρ, π₁, π₂)` such
//!   that some `π₁^{x₁}π₂^{x₂}` has the cycle type of `ρ` iff the instance has
//!   an exact hitting set.
//! * [`reduce_3sat`] maps a 3-CNF formula to `(π₁, π₂)` such that some
//!   `π₁^{z₁}π₂^{z₂}` is fixpoint-free iff the formula is satisfiable.
//!
//! Both constructions are direct products of factors `Sym(d)` on which every
//! generator acts as a power of the standard cycle `([d]) = (1, 2, …, d)`. The
//! [`ReductionLayout`] records each factor's degree, offset in `Sym(N)` and
//! exponents, together with the primes and CRT constants used.
//!
//! Factors are placed in a fixed order: per-element (per-variable) factors by
//! increasing index, then per-block (per-clause) factors by increasing index,
//! sub-factors in tuple order.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation, DEGREE_CAP};
use crate::prime_arith::{first_k_primes_above, CongruenceSystem, Exponent};
use crate::solvers::{verify_witness_cycletype, verify_witness_fpf};

/// Exact 3-hitting set: ground set `[n]` and blocks of exactly three elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3hsInstance {
    pub n: usize,
    pub blocks: Vec<[usize; 3]>,
}

impl X3hsInstance {
    /// Validates and sorts each block ascending.
    pub fn new(n: usize, blocks: Vec<[usize; 3]>) -> Result<Self> {
        let mut inst = X3hsInstance { n, blocks };
        for b in &mut inst.blocks {
            b.sort_unstable();
        }
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInstance("ground set must be nonempty".into()));
        }
        for (j, b) in self.blocks.iter().enumerate() {
            if b.iter().any(|&i| i == 0 || i > self.n) {
                return Err(Error::InvalidInstance(format!(
                    "block {} has an element outside [1, {}]",
                    j + 1,
                    self.n
                )));
            }
            if !(b[0] < b[1] && b[1] < b[2]) {
                return Err(Error::InvalidInstance(format!(
                    "block {} must have three distinct elements in increasing order",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// `|T ∩ C| = 1` for every block `C`.
    pub fn is_exact_hitting_set(&self, t: &[usize]) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().filter(|i| t.contains(i)).count() == 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub neg: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, neg: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, neg: true }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] != self.neg
    }
}

/// A conjunction of clauses, each over exactly three distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf3Instance {
    pub n: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl Cnf3Instance {
    /// Validates and sorts each clause by variable.
    pub fn new(n: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        let mut inst = Cnf3Instance { n, clauses };
        for c in &mut inst.clauses {
            c.sort_unstable();
        }
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInstance("formula must have at least one variable".into()));
        }
        for (j, c) in self.clauses.iter().enumerate() {
            if c.iter().any(|l| l.var == 0 || l.var > self.n) {
                return Err(Error::InvalidInstance(format!(
                    "clause {} has a variable outside [1, {}]",
                    j + 1,
                    self.n
                )));
            }
            if !(c[0].var < c[1].var && c[1].var < c[2].var) {
                return Err(Error::InvalidInstance(format!(
                    "clause {} must mention three distinct variables in increasing order",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n
            && self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment)))
    }
}

/// Source instances as read from JSON, tagged by `"type"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Instance {
    #[serde(rename = "x3hs")]
    X3hs(X3hsInstance),
    #[serde(rename = "cnf3")]
    Cnf3(Cnf3Instance),
}

impl Instance {
    pub fn validate(&self) -> Result<()> {
        match self {
            Instance::X3hs(i) => i.validate(),
            Instance::Cnf3(i) => i.validate(),
        }
    }
}

/// One factor `Sym(degree)` of the product group, placed at points
/// `offset+1 ..= offset+degree`. Each generator acts on it as `([degree])^e`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub label: String,
    pub degree: usize,
    pub offset: usize,
    /// Exponent for `ρ`; absent for the fixpoint-freeness reduction.
    #[serde_as(as = "Option<DisplayFromStr>")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<u64>,
    #[serde_as(as = "DisplayFromStr")]
    pub pi1: u64,
    #[serde_as(as = "DisplayFromStr")]
    pub pi2: u64,
}

/// Which generator of a reduced instance to look at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Rho,
    Pi1,
    Pi2,
}

impl Component {
    pub fn exponent(&self, g: Generator) -> Option<u64> {
        match g {
            Generator::Rho => self.rho,
            Generator::Pi1 => Some(self.pi1),
            Generator::Pi2 => Some(self.pi2),
        }
    }

    pub fn permutation(&self, g: Generator) -> Result<Permutation> {
        let e = self
            .exponent(g)
            .ok_or_else(|| Error::InvalidInstance("layout has no target permutation".into()))?;
        Permutation::cycle_power(self.degree, e)
    }
}

/// Constants of one block `C_j = {i₁ < i₂ < i₃}` in the cycle-type reduction.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockConstants {
    pub elements: [usize; 3],
    #[serde_as(as = "[DisplayFromStr; 3]")]
    pub primes: [u64; 3],
    #[serde_as(as = "DisplayFromStr")]
    pub q: u64,
    /// `q · p_{i₁} p_{i₂} p_{i₃}`.
    #[serde_as(as = "DisplayFromStr")]
    pub r: u64,
    #[serde_as(as = "[DisplayFromStr; 6]")]
    pub s: [u64; 6],
    #[serde_as(as = "DisplayFromStr")]
    pub t: u64,
}

/// Residues of `s_{j,1..6}` modulo `p_{i₁}, p_{i₂}, p_{i₃}`; all are `≡ 1 (mod q_j)`.
const S_RESIDUES: [[i64; 3]; 6] = [
    [-1, 0, 0],
    [0, -1, 0],
    [0, 0, -1],
    [-1, -2, -3],
    [-3, -1, -2],
    [-2, -3, -1],
];

impl BlockConstants {
    fn s_system(&self, d: usize) -> Result<CongruenceSystem> {
        let mut sys = CongruenceSystem::new();
        for (c, &p) in self.primes.iter().enumerate() {
            sys.push(S_RESIDUES[d][c], p)?;
        }
        sys.push(1, self.q)?;
        Ok(sys)
    }

    fn t_system(&self) -> Result<CongruenceSystem> {
        let mut sys = CongruenceSystem::new();
        for &p in &self.primes {
            sys.push(1, p)?;
        }
        sys.push(0, self.q)?;
        Ok(sys)
    }

    /// `ct(η_j)`: `P` cycles of length `q`, `p_{i₁}` of length `p_{i₂}p_{i₃}q`,
    /// `p_{i₂}` of length `p_{i₁}p_{i₃}q`, `p_{i₃}` of length `p_{i₁}p_{i₂}q`
    /// and two of length `r`.
    pub fn expected_cycle_type(&self) -> CycleType {
        let [a, b, c] = self.primes.map(|p| p as usize);
        let q = self.q as usize;
        CycleType::from_counts([
            (q, a * b * c),
            (b * c * q, a),
            (a * c * q, b),
            (a * b * q, c),
            (self.r as usize, 2),
        ])
    }
}

/// Constants attached to variable `x_i` in the fixpoint-freeness reduction.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableConstants {
    #[serde_as(as = "DisplayFromStr")]
    pub p: u64,
    #[serde_as(as = "DisplayFromStr")]
    pub pbar: u64,
    /// `s_{i,l,k}` at index `(l-1)(p̄-1) + (k-1)`.
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub s: Vec<u64>,
}

impl VariableConstants {
    pub fn s(&self, l: u64, k: u64) -> u64 {
        self.s[((l - 1) * (self.pbar - 1) + (k - 1)) as usize]
    }
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseConstants {
    /// `p̃` of each literal.
    #[serde_as(as = "[DisplayFromStr; 3]")]
    pub primes: [u64; 3],
    #[serde_as(as = "DisplayFromStr")]
    pub r: u64,
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum LayoutConstants {
    #[serde(rename = "cycle-type")]
    CycleType {
        #[serde_as(as = "Vec<DisplayFromStr>")]
        primes_p: Vec<u64>,
        #[serde_as(as = "Vec<DisplayFromStr>")]
        primes_q: Vec<u64>,
        blocks: Vec<BlockConstants>,
    },
    #[serde(rename = "fixpoint-free")]
    FixpointFree {
        #[serde_as(as = "Vec<DisplayFromStr>")]
        primes_p: Vec<u64>,
        #[serde_as(as = "Vec<DisplayFromStr>")]
        primes_pbar: Vec<u64>,
        variables: Vec<VariableConstants>,
        clauses: Vec<ClauseConstants>,
    },
}

/// Factor list and constants of a reduced instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionLayout {
    pub total_degree: usize,
    pub components: Vec<Component>,
    pub constants: LayoutConstants,
}

impl ReductionLayout {
    fn from_parts(components: Vec<(String, usize, Option<u64>, u64, u64)>, constants: LayoutConstants, cap: usize) -> Result<Self> {
        let total: u128 = components.iter().map(|c| c.1 as u128).sum();
        if total > cap as u128 {
            return Err(Error::DegreeCap { degree: total, cap });
        }
        let mut offset = 0;
        let components = components
            .into_iter()
            .map(|(label, degree, rho, pi1, pi2)| {
                let c = Component { label, degree, offset, rho, pi1, pi2 };
                offset += degree;
                c
            })
            .collect();
        Ok(ReductionLayout { total_degree: offset, components, constants })
    }

    /// Offsets are prefix sums of degrees and the degrees sum to `N`.
    pub fn check_integrity(&self) -> Result<()> {
        let mut offset = 0;
        for c in &self.components {
            if c.offset != offset || c.degree == 0 {
                return Err(Error::InvalidInstance(format!("component {} is misplaced", c.label)));
            }
            offset += c.degree;
        }
        if offset != self.total_degree {
            return Err(Error::InvalidInstance("component degrees do not sum to N".into()));
        }
        Ok(())
    }

    /// Re-reduces every stored CRT constant modulo its primes and checks the
    /// defining congruences and ranges.
    pub fn check_constants(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidInstance(format!("constant {what} is wrong")));
        match &self.constants {
            LayoutConstants::CycleType { blocks, .. } => {
                for (j, b) in blocks.iter().enumerate() {
                    if b.r != b.q * b.primes.iter().product::<u64>() {
                        return bad(format!("r_{}", j + 1));
                    }
                    for d in 0..6 {
                        let s = BigUint::from(b.s[d]);
                        if b.s[d] == 0 || b.s[d] >= b.r || !b.s_system(d)?.is_satisfied_by(&s) {
                            return bad(format!("s_{},{}", j + 1, d + 1));
                        }
                    }
                    if b.t == 0 || b.t >= b.r || !b.t_system()?.is_satisfied_by(&BigUint::from(b.t)) {
                        return bad(format!("t_{}", j + 1));
                    }
                }
            }
            LayoutConstants::FixpointFree { variables, clauses, .. } => {
                for (i, v) in variables.iter().enumerate() {
                    if v.s.len() as u64 != (v.p - 1) * (v.pbar - 1) {
                        return bad(format!("table s_{}", i + 1));
                    }
                    for l in 1..v.p {
                        for k in 1..v.pbar {
                            let s = v.s(l, k);
                            if s == 0 || s >= v.p * v.pbar || s % v.p != l || s % v.pbar != k {
                                return bad(format!("s_{},{},{}", i + 1, l, k));
                            }
                        }
                    }
                }
                for (j, c) in clauses.iter().enumerate() {
                    if c.r != c.primes.iter().product::<u64>() {
                        return bad(format!("r_{}", j + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds one generator by writing each factor's cycle power in place.
    pub fn assemble(&self, g: Generator) -> Result<Permutation> {
        let mut images = Vec::with_capacity(self.total_degree);
        for c in &self.components {
            let e = c
                .exponent(g)
                .ok_or_else(|| Error::InvalidInstance("layout has no target permutation".into()))?;
            let k = e.residue(c.degree as u64) as usize;
            let base = c.offset;
            images.extend((0..c.degree).map(|a| (base + (a + k) % c.degree) as u32));
        }
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        Ok(Permutation::from_raw(images))
    }

    pub fn component(&self, label: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.label == label)
    }
}

/// A witness `(x₁, x₂)` (or `(z₁, z₂)`), serialized as decimal strings.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessExponents {
    #[serde_as(as = "DisplayFromStr")]
    pub x1: BigUint,
    #[serde_as(as = "DisplayFromStr")]
    pub x2: BigUint,
}

impl WitnessExponents {
    pub fn new(x1: impl Into<BigUint>, x2: impl Into<BigUint>) -> Self {
        WitnessExponents { x1: x1.into(), x2: x2.into() }
    }
}

/// Output of [`reduce_x3hs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCycleTypeInstance {
    source: X3hsInstance,
    layout: ReductionLayout,
    rho: Permutation,
    pi1: Permutation,
    pi2: Permutation,
    target: CycleType,
    coset: bool,
}

impl ReducedCycleTypeInstance {
    pub fn source(&self) -> &X3hsInstance {
        &self.source
    }

    pub fn layout(&self) -> &ReductionLayout {
        &self.layout
    }

    pub fn rho(&self) -> &Permutation {
        &self.rho
    }

    pub fn pi1(&self) -> &Permutation {
        &self.pi1
    }

    pub fn pi2(&self) -> &Permutation {
        &self.pi2
    }

    /// `ct(ρ)`.
    pub fn target_cycle_type(&self) -> &CycleType {
        &self.target
    }

    pub fn degree(&self) -> usize {
        self.layout.total_degree
    }

    pub fn is_coset(&self) -> bool {
        self.coset
    }

    /// Restricts the question to the coset `π₁⟨π₂⟩`: witnesses must have
    /// `x₁ = 1`.
    pub fn coset_restrict(mut self) -> Self {
        self.coset = true;
        self
    }

    pub fn with_coset(mut self, coset: bool) -> Self {
        self.coset = coset;
        self
    }

    fn primes_p(&self) -> &[u64] {
        match &self.layout.constants {
            LayoutConstants::CycleType { primes_p, .. } => primes_p,
            LayoutConstants::FixpointFree { .. } => unreachable!("built by reduce_x3hs"),
        }
    }

    pub fn blocks(&self) -> &[BlockConstants] {
        match &self.layout.constants {
            LayoutConstants::CycleType { blocks, .. } => blocks,
            LayoutConstants::FixpointFree { .. } => unreachable!("built by reduce_x3hs"),
        }
    }

    /// The six consecutive factors of block `j` (1-based) as `(offset, length)`.
    pub fn block_range(&self, j: usize) -> (usize, usize) {
        let first = self.source.n + 6 * (j - 1);
        let c = &self.layout.components[first];
        (c.offset, 6 * c.degree)
    }
}

/// Output of [`reduce_3sat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedFpfInstance {
    source: Cnf3Instance,
    layout: ReductionLayout,
    pi1: Permutation,
    pi2: Permutation,
    coset: bool,
}

impl ReducedFpfInstance {
    pub fn source(&self) -> &Cnf3Instance {
        &self.source
    }

    pub fn layout(&self) -> &ReductionLayout {
        &self.layout
    }

    pub fn pi1(&self) -> &Permutation {
        &self.pi1
    }

    pub fn pi2(&self) -> &Permutation {
        &self.pi2
    }

    pub fn degree(&self) -> usize {
        self.layout.total_degree
    }

    pub fn is_coset(&self) -> bool {
        self.coset
    }

    /// Restricts the question to the coset `π₁⟨π₂⟩`: witnesses must have
    /// `z₁ = 1`.
    pub fn coset_restrict(mut self) -> Self {
        self.coset = true;
        self
    }

    pub fn with_coset(mut self, coset: bool) -> Self {
        self.coset = coset;
        self
    }

    pub fn variables(&self) -> &[VariableConstants] {
        match &self.layout.constants {
            LayoutConstants::FixpointFree { variables, .. } => variables,
            LayoutConstants::CycleType { .. } => unreachable!("built by reduce_3sat"),
        }
    }

    pub fn clauses(&self) -> &[ClauseConstants] {
        match &self.layout.constants {
            LayoutConstants::FixpointFree { clauses, .. } => clauses,
            LayoutConstants::CycleType { .. } => unreachable!("built by reduce_3sat"),
        }
    }
}

fn small_crt(sys: &CongruenceSystem) -> u64 {
    sys.crt_smallest().to_u64().expect("product of a few small primes")
}

pub fn reduce_x3hs(inst: &X3hsInstance) -> Result<ReducedCycleTypeInstance> {
    reduce_x3hs_with_cap(inst, DEGREE_CAP)
}

pub fn reduce_x3hs_with_cap(inst: &X3hsInstance, cap: usize) -> Result<ReducedCycleTypeInstance> {
    inst.validate()?;
    let n = inst.n;
    // p_1 < … < p_{2n} are the first 2n primes above 3; q_1 < … < q_m follow.
    let p = first_k_primes_above(3, 2 * n);
    let q = first_k_primes_above(p[2 * n - 1], inst.blocks.len());

    let mut parts = Vec::with_capacity(n + 6 * inst.blocks.len());
    for i in 0..n {
        let deg = checked_degree(&[p[i], p[n + i]], cap)?;
        parts.push((format!("var[{}]", i + 1), deg, Some(1), 1, 0));
    }

    let mut blocks = Vec::with_capacity(inst.blocks.len());
    for (j, block) in inst.blocks.iter().enumerate() {
        let primes = block.map(|i| p[i - 1]);
        let mut b = BlockConstants {
            elements: *block,
            primes,
            q: q[j],
            r: 0,
            s: [0; 6],
            t: 0,
        };
        let r = checked_degree(&[q[j], primes[0], primes[1], primes[2]], cap)?;
        b.r = r as u64;
        for d in 0..6 {
            b.s[d] = small_crt(&b.s_system(d)?);
        }
        b.t = small_crt(&b.t_system()?);

        let product = primes.iter().product::<u64>();
        let rho_exps = [product, primes[0], primes[1], primes[2], 1, 1];
        for d in 0..6 {
            parts.push((format!("block[{}][{}]", j + 1, d + 1), r, Some(rho_exps[d]), b.s[d], b.t));
        }
        blocks.push(b);
    }

    let constants = LayoutConstants::CycleType { primes_p: p, primes_q: q, blocks };
    let layout = ReductionLayout::from_parts(parts, constants, cap)?;
    let rho = layout.assemble(Generator::Rho)?;
    let pi1 = layout.assemble(Generator::Pi1)?;
    let pi2 = layout.assemble(Generator::Pi2)?;
    let target = rho.cycle_type();
    Ok(ReducedCycleTypeInstance { source: inst.clone(), layout, rho, pi1, pi2, target, coset: false })
}

fn checked_degree(factors: &[u64], cap: usize) -> Result<usize> {
    let d = factors.iter().try_fold(1u128, |acc, &f| acc.checked_mul(f as u128));
    match d {
        Some(d) if d <= cap as u128 => Ok(d as usize),
        Some(d) => Err(Error::DegreeCap { degree: d, cap }),
        None => Err(Error::DegreeCap { degree: u128::MAX, cap }),
    }
}

/// `x₁ = 1` and `x₂` the smallest positive integer with `x₂ ≡ 1 (mod p_i)`
/// for `i ∈ T` and `x₂ ≡ 0 (mod p_i)` otherwise.
pub fn witness_from_hitting_set(red: &ReducedCycleTypeInstance, t: &[usize]) -> Result<WitnessExponents> {
    if !red.source.is_exact_hitting_set(t) || t.iter().any(|&i| i == 0 || i > red.source.n) {
        return Err(Error::InvalidWitness("not an exact hitting set".into()));
    }
    let mut sys = CongruenceSystem::new();
    for (i, &p) in red.primes_p()[..red.source.n].iter().enumerate() {
        sys.push(t.contains(&(i + 1)) as i64, p)?;
    }
    Ok(WitnessExponents { x1: BigUint::one(), x2: sys.crt_smallest() })
}

/// `T = {i ∈ [n] : x₂ ≢ 0 (mod p_i)}` for a verifying witness.
pub fn extract_hitting_set(red: &ReducedCycleTypeInstance, w: &WitnessExponents) -> Result<Vec<usize>> {
    if !verify_witness_cycletype(red, w) {
        return Err(Error::InvalidWitness("witness does not verify".into()));
    }
    let t: Vec<usize> = red.primes_p()[..red.source.n]
        .iter()
        .enumerate()
        .filter(|&(_, &p)| w.x2.residue(p) != 0)
        .map(|(i, _)| i + 1)
        .collect();
    if !red.source.is_exact_hitting_set(&t) {
        return Err(Error::InvalidWitness("extracted set is not an exact hitting set".into()));
    }
    Ok(t)
}

pub fn reduce_3sat(inst: &Cnf3Instance) -> Result<ReducedFpfInstance> {
    reduce_3sat_with_cap(inst, DEGREE_CAP)
}

pub fn reduce_3sat_with_cap(inst: &Cnf3Instance, cap: usize) -> Result<ReducedFpfInstance> {
    inst.validate()?;
    let n = inst.n;
    // The first 2n primes, interleaved: p_1, p̄_1, p_2, p̄_2, …
    let first = first_k_primes_above(1, 2 * n);
    let primes_p: Vec<u64> = first.iter().step_by(2).copied().collect();
    let primes_pbar: Vec<u64> = first.iter().skip(1).step_by(2).copied().collect();

    let mut total: u128 = 0;
    for i in 0..n {
        let (p, pb) = (primes_p[i] as u128, primes_pbar[i] as u128);
        total += p + pb + p * pb * ((p - 1) * (pb - 1) + 1);
    }
    let literal_prime = |l: &Literal| if l.neg { primes_pbar[l.var - 1] } else { primes_p[l.var - 1] };
    for c in &inst.clauses {
        total += c.iter().map(|l| literal_prime(l) as u128).product::<u128>();
    }
    if total > cap as u128 {
        return Err(Error::DegreeCap { degree: total, cap });
    }

    let mut parts = Vec::new();
    let mut variables = Vec::with_capacity(n);
    for i in 0..n {
        let (p, pb) = (primes_p[i], primes_pbar[i]);
        let pp = (p * pb) as usize;
        let v = i + 1;
        parts.push((format!("var[{v}].pos"), p as usize, None, 1, 0));
        parts.push((format!("var[{v}].neg"), pb as usize, None, 1, 0));
        parts.push((format!("var[{v}].both"), pp, None, 0, 1));
        let mut s = Vec::with_capacity(((p - 1) * (pb - 1)) as usize);
        for l in 1..p {
            for k in 1..pb {
                let sys = CongruenceSystem::new().with(l as i64, p)?.with(k as i64, pb)?;
                let slk = small_crt(&sys);
                s.push(slk);
                parts.push((format!("var[{v}].pair[{l},{k}]"), pp, None, slk, 1));
            }
        }
        variables.push(VariableConstants { p, pbar: pb, s });
    }
    let mut clauses = Vec::with_capacity(inst.clauses.len());
    for (j, c) in inst.clauses.iter().enumerate() {
        let primes = c.map(|l| literal_prime(&l));
        let r = primes.iter().product::<u64>();
        parts.push((format!("clause[{}]", j + 1), r as usize, None, 0, 1));
        clauses.push(ClauseConstants { primes, r });
    }

    let constants = LayoutConstants::FixpointFree { primes_p, primes_pbar, variables, clauses };
    let layout = ReductionLayout::from_parts(parts, constants, cap)?;
    let pi1 = layout.assemble(Generator::Pi1)?;
    let pi2 = layout.assemble(Generator::Pi2)?;
    Ok(ReducedFpfInstance { source: inst.clone(), layout, pi1, pi2, coset: false })
}

/// `z₁ = 1` and `z₂` the smallest positive integer with `z₂ ≡ σ(x_i) (mod p_i)`
/// and `z₂ ≡ 1 − σ(x_i) (mod p̄_i)`.
pub fn witness_from_assignment(red: &ReducedFpfInstance, assignment: &[bool]) -> Result<WitnessExponents> {
    if !red.source.is_satisfied_by(assignment) {
        return Err(Error::InvalidWitness("assignment does not satisfy the formula".into()));
    }
    let mut sys = CongruenceSystem::new();
    for (v, &value) in red.variables().iter().zip(assignment) {
        sys.push(value as i64, v.p)?;
        sys.push(1 - value as i64, v.pbar)?;
    }
    Ok(WitnessExponents { x1: BigUint::one(), x2: sys.crt_smallest() })
}

/// `σ(x_i) = [z₂ ≢ 0 (mod p_i)]` for a verifying witness.
pub fn extract_assignment(red: &ReducedFpfInstance, w: &WitnessExponents) -> Result<Vec<bool>> {
    if !verify_witness_fpf(red, w) {
        return Err(Error::InvalidWitness("witness does not verify".into()));
    }
    let sigma: Vec<bool> = red.variables().iter().map(|v| w.x2.residue(v.p) != 0).collect();
    if !red.source.is_satisfied_by(&sigma) {
        return Err(Error::InvalidWitness("extracted assignment does not satisfy the formula".into()));
    }
    Ok(sigma)
}
