//! Literal enumeration of the triple family
//!
//! ```text
//! Y(n, m) = { (A, B, C) : A, B ⊆ [m], C ⊆ [m+n] \ [n], |A| = |B| = |C| = n,
//!             A ⊆ B Δ [n], B \ [n] ⊆ C }
//! ```
//!
//! and the two closed-form counts it is supposed to equal. `m = 2n` is the
//! standard family, whose size is the fourth Franel number.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::{binom, binomial, Integer};
use crate::error::OracleError;
use crate::identities::Sides;

/// Largest `binomial(m, n)` the enumerators accept.
pub const ENUMERATION_LIMIT: u64 = 10_000;
/// Largest ground set an [`IndexSet`] can hold.
pub const MAX_GROUND: u32 = 64;

/// Subset of `{1, ..., ground}` packed into a `u64`; element `e` is bit `e - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    ground: u8,
    bits: u64,
}

fn prefix_mask(len: u32) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl IndexSet {
    pub fn empty(ground: u32) -> Self {
        assert!(ground <= MAX_GROUND, "ground set larger than {MAX_GROUND}");
        IndexSet { ground: ground as u8, bits: 0 }
    }

    /// `{1, ..., k}` inside a ground set of size `ground`.
    pub fn prefix(ground: u32, k: u32) -> Self {
        assert!(k <= ground);
        IndexSet { bits: prefix_mask(k), ..Self::empty(ground) }
    }

    /// `{lo + 1, ..., hi}`, i.e. `[hi] \ [lo]`.
    pub fn interval(ground: u32, lo: u32, hi: u32) -> Self {
        assert!(lo <= hi && hi <= ground);
        IndexSet { bits: prefix_mask(hi) & !prefix_mask(lo), ..Self::empty(ground) }
    }

    pub fn from_bits(ground: u32, bits: u64) -> Self {
        let s = Self::empty(ground);
        assert_eq!(bits & !prefix_mask(ground), 0, "bits outside the ground set");
        IndexSet { bits, ..s }
    }

    pub fn from_elements(ground: u32, elems: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::empty(ground);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn insert(&mut self, e: u32) {
        assert!(e >= 1 && e <= self.ground as u32, "element {e} outside [1, {}]", self.ground);
        self.bits |= 1 << (e - 1);
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn ground(self) -> u32 {
        self.ground as u32
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, e: u32) -> bool {
        e >= 1 && e <= self.ground as u32 && self.bits >> (e - 1) & 1 == 1
    }

    pub fn union(self, o: Self) -> Self {
        IndexSet { bits: self.bits | o.bits, ..self }
    }

    pub fn intersection(self, o: Self) -> Self {
        IndexSet { bits: self.bits & o.bits, ..self }
    }

    pub fn difference(self, o: Self) -> Self {
        IndexSet { bits: self.bits & !o.bits, ..self }
    }

    pub fn symmetric_difference(self, o: Self) -> Self {
        IndexSet { bits: self.bits ^ o.bits, ..self }
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.bits & !o.bits == 0
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        let bits = self.bits;
        (0..64u32).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    /// All `k`-element subsets of `self`, in increasing order of bit pattern.
    pub fn subsets_of_size(self, k: u32) -> KSubsets {
        KSubsets::new(self, k)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the `k`-subsets of a fixed set.
///
/// Gosper's hack runs over the compressed index space `0..|S|` and each
/// pattern is scattered back onto the members of `S`.
#[derive(Debug, Clone)]
pub struct KSubsets {
    base: IndexSet,
    positions: Vec<u32>,
    k: u32,
    state: Option<u64>,
}

impl KSubsets {
    fn new(base: IndexSet, k: u32) -> Self {
        let positions: Vec<u32> = (0..64).filter(|i| base.bits >> i & 1 == 1).collect();
        let state = if k as usize > positions.len() { None } else { Some(prefix_mask(k)) };
        KSubsets { base, positions, k, state }
    }

    fn scatter(&self, compact: u64) -> u64 {
        self.positions
            .iter()
            .enumerate()
            .filter(|(i, _)| compact >> i & 1 == 1)
            .fold(0, |acc, (_, p)| acc | 1 << p)
    }
}

impl Iterator for KSubsets {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        let cur = self.state?;
        let len = self.positions.len() as u32;
        self.state = if self.k == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            let next = if ripple == 0 { None } else { Some((((cur ^ ripple) >> 2) / low) | ripple) };
            next.filter(|&nx| len >= 64 || nx < 1u64 << len)
        };
        Some(IndexSet { bits: self.scatter(cur), ..self.base })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characterization {
    /// `A ⊆ B Δ [n]` and `B \ [n] ⊆ C`.
    Delta,
    /// `A \ [n] ⊆ B`, `B \ [n] ⊆ C` and `A ∩ B ∩ [n] = ∅`.
    Split,
    /// As printed: `A ∩ B ∩ C ∩ [n] = ∅` in place of `A ∩ B ∩ [n] = ∅`.
    /// Vacuous since `C` avoids `[n]`, so this overcounts.
    SplitLiteral,
}

impl Characterization {
    pub fn name(self) -> &'static str {
        match self {
            Characterization::Delta => "delta",
            Characterization::Split => "split",
            Characterization::SplitLiteral => "split-literal",
        }
    }
}

impl fmt::Display for Characterization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Characterization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "delta" => Ok(Characterization::Delta),
            "split" => Ok(Characterization::Split),
            "split-literal" => Ok(Characterization::SplitLiteral),
            other => Err(format!("unknown characterization {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub n: u64,
    pub m: u64,
}

impl FamilySpec {
    pub fn standard(n: u64) -> Self {
        FamilySpec { n, m: 2 * n }
    }

    pub fn validate(self) -> Result<(), OracleError> {
        let FamilySpec { n, m } = self;
        if m < n {
            return Err(OracleError::Infeasible { n, m });
        }
        if binomial(m, n) > ENUMERATION_LIMIT.into() {
            return Err(OracleError::OverBudget { n, m, limit: ENUMERATION_LIMIT });
        }
        if m + n > MAX_GROUND as u64 {
            return Err(OracleError::GroundTooLarge(m + n));
        }
        Ok(())
    }

    fn ground(self) -> u32 {
        (self.m + self.n) as u32
    }

    /// `[n]`
    pub fn low(self) -> IndexSet {
        IndexSet::prefix(self.ground(), self.n as u32)
    }

    /// `[m]`, where `A` and `B` live.
    pub fn ab_universe(self) -> IndexSet {
        IndexSet::prefix(self.ground(), self.m as u32)
    }

    /// `[m + n] \ [n]`, where `C` lives.
    pub fn c_universe(self) -> IndexSet {
        IndexSet::interval(self.ground(), self.n as u32, self.ground())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub a: IndexSet,
    pub b: IndexSet,
    pub c: IndexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub count: u64,
    pub witnesses: Option<Vec<Witness>>,
    pub characterization: Characterization,
}

/// Membership test straight from the definition of the chosen characterization.
pub fn is_member(spec: FamilySpec, ch: Characterization, w: &Witness) -> bool {
    let n = spec.n as u32;
    let low = spec.low();
    let Witness { a, b, c } = *w;
    let shape = a.is_subset(spec.ab_universe())
        && b.is_subset(spec.ab_universe())
        && c.is_subset(spec.c_universe())
        && a.len() == n
        && b.len() == n
        && c.len() == n;
    let b_high_in_c = b.difference(low).is_subset(c);
    shape
        && b_high_in_c
        && match ch {
            Characterization::Delta => a.is_subset(b.symmetric_difference(low)),
            Characterization::Split => {
                a.difference(low).is_subset(b) && a.intersection(b).intersection(low).is_empty()
            }
            Characterization::SplitLiteral => {
                a.difference(low).is_subset(b)
                    && a.intersection(b).intersection(c).intersection(low).is_empty()
            }
        }
}

/// Counts (and optionally lists) `Y(n, m)` with `B` outermost.
///
/// For each `B`, the admissible `C` are `B \ [n]` plus any
/// `n - |B \ [n]|` further elements of `[m+n] \ [n]`. In the delta form,
/// `A` ranges directly over the `n`-subsets of `B Δ [n]`; the split forms
/// scan every `n`-subset of `[m]` and filter.
pub fn enumerate_y(
    spec: FamilySpec,
    ch: Characterization,
    collect_witnesses: bool,
) -> Result<EnumerationResult, OracleError> {
    spec.validate()?;
    let n = spec.n as u32;
    let low = spec.low();
    let ab = spec.ab_universe();
    let c_univ = spec.c_universe();
    let bs: Vec<IndexSet> = ab.subsets_of_size(n).collect();
    let all_a: Vec<IndexSet> = if ch == Characterization::Delta { Vec::new() } else { bs.clone() };

    let per_b: Vec<(u64, Vec<Witness>)> = bs
        .par_iter()
        .map(|&b| {
            let forced = b.difference(low);
            let free = c_univ.difference(forced);
            let cs: Vec<IndexSet> = free
                .subsets_of_size(n - forced.len())
                .map(|extra| extra.union(forced))
                .collect();
            let mut count = 0u64;
            let mut wits = Vec::new();
            let mut emit = |a: IndexSet, c: IndexSet| {
                count += 1;
                if collect_witnesses {
                    wits.push(Witness { a, b, c });
                }
            };
            match ch {
                Characterization::Delta => {
                    for a in b.symmetric_difference(low).subsets_of_size(n) {
                        for &c in &cs {
                            emit(a, c);
                        }
                    }
                }
                Characterization::Split => {
                    for &a in &all_a {
                        if a.difference(low).is_subset(b) && a.intersection(b).intersection(low).is_empty() {
                            for &c in &cs {
                                emit(a, c);
                            }
                        }
                    }
                }
                Characterization::SplitLiteral => {
                    for &a in &all_a {
                        if !a.difference(low).is_subset(b) {
                            continue;
                        }
                        for &c in &cs {
                            if a.intersection(b).intersection(c).intersection(low).is_empty() {
                                emit(a, c);
                            }
                        }
                    }
                }
            }
            (count, wits)
        })
        .collect();

    let count = per_b.iter().map(|(c, _)| c).sum();
    let witnesses = collect_witnesses.then(|| per_b.into_iter().flat_map(|(_, w)| w).collect());
    Ok(EnumerationResult { count, witnesses, characterization: ch })
}

/// Full triple product `A × B × C` filtered by [`is_member`]. Cubic in
/// `binomial(m, n)`; intended as a cross-check for small cases.
pub fn enumerate_y_naive(
    spec: FamilySpec,
    ch: Characterization,
    collect_witnesses: bool,
) -> Result<EnumerationResult, OracleError> {
    spec.validate()?;
    let n = spec.n as u32;
    let abs: Vec<IndexSet> = spec.ab_universe().subsets_of_size(n).collect();
    let cs: Vec<IndexSet> = spec.c_universe().subsets_of_size(n).collect();
    let mut count = 0;
    let mut witnesses = Vec::new();
    for &b in &abs {
        for &a in &abs {
            for &c in &cs {
                let w = Witness { a, b, c };
                if is_member(spec, ch, &w) {
                    count += 1;
                    if collect_witnesses {
                        witnesses.push(w);
                    }
                }
            }
        }
    }
    Ok(EnumerationResult {
        count,
        witnesses: collect_witnesses.then_some(witnesses),
        characterization: ch,
    })
}

/// Count by `k = |B \ [n]|`:
/// `sum_k binomial(n,k) binomial(n,n-k) binomial(2k,n) binomial(2n-k,n-k)`.
pub fn count_formula_21(n: u64) -> Integer {
    (0..=n)
        .map(|k| binom(n, k) * binom(n, n - k) * binom(2 * k, n) * binom(2 * n - k, n - k))
        .sum()
}

/// Count by `k = |A ∩ [n]|`: `sum_k binomial(n,k) binomial(n,n-k) binomial(n,k)^2`.
pub fn count_formula_22(n: u64) -> Integer {
    (0..=n)
        .map(|k| binom(n, k) * binom(n, n - k) * binom(n, k) * binom(n, k))
        .sum()
}

/// Both counts of the generalized family `Y(n, m)`; sums run over
/// `0 <= k <= min(m - n, n)` and are empty when `m < n`.
pub fn count_formula_16(n: u64, m: u64) -> Sides<Integer> {
    let top = if m < n { None } else { Some((m - n).min(n)) };
    let ks = top.into_iter().flat_map(|t| 0..=t);
    let mut lhs = Integer::from(0);
    let mut rhs = Integer::from(0);
    for k in ks {
        lhs += binom(m - n, k) * binom(n, n - k) * binom(2 * k, n) * binom(m - k, n - k);
        rhs += binom(n, k) * binom(m - n, n - k) * binom(m - n, k) * binom(n, k);
    }
    Sides { lhs, rhs }
}
