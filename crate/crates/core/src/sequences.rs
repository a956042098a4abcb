//! Binomial power sums: central binomial / beta, Franel, fourth Franel
//! and Domb numbers, each by direct summation and (where one exists) by
//! its recurrence.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{One, Pow};

use crate::arith::{binom, binomial, binomial_row, exact_div, Integer};
use crate::error::SequenceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    Beta,
    Franel3,
    Franel4,
    Domb,
    CentralBinomial,
}

impl SequenceId {
    pub const ALL: [SequenceId; 5] = [
        SequenceId::Beta,
        SequenceId::Franel3,
        SequenceId::Franel4,
        SequenceId::Domb,
        SequenceId::CentralBinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Beta => "beta",
            SequenceId::Franel3 => "franel3",
            SequenceId::Franel4 => "franel4",
            SequenceId::Domb => "domb",
            SequenceId::CentralBinomial => "central-binomial",
        }
    }

    pub fn has_recurrence(self) -> bool {
        !matches!(self, SequenceId::Domb)
    }

    /// Evaluates a single term by direct summation.
    pub fn direct(self, n: u64) -> Integer {
        match self {
            SequenceId::Beta => beta_direct(n),
            SequenceId::Franel3 => franel3_direct(n),
            SequenceId::Franel4 => franel4_direct(n),
            SequenceId::Domb => domb_direct(n),
            SequenceId::CentralBinomial => binom(2 * n, n),
        }
    }

    /// Terms `0..=to` by recurrence.
    pub fn recurrence_table(self, to: u64) -> Result<Vec<Integer>, SequenceError> {
        match self {
            SequenceId::Beta | SequenceId::CentralBinomial => Ok(beta_rec_table(to)),
            SequenceId::Franel3 => franel3_rec_table(to),
            SequenceId::Franel4 => franel4_rec_table(to),
            SequenceId::Domb => Err(SequenceError::NoRecurrence(self.name())),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| SequenceError::UnknownSequence(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Recurrence,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceEntry {
    pub n: u64,
    pub value: Integer,
    pub method: Method,
}

/// Contiguous run of sequence values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub id: SequenceId,
    pub entries: Vec<SequenceEntry>,
}

impl SequenceTable {
    pub fn get(&self, n: u64) -> Option<&Integer> {
        let first = self.entries.first()?.n;
        let idx = n.checked_sub(first)? as usize;
        self.entries.get(idx).map(|e| &e.value)
    }

    pub fn values(&self) -> impl Iterator<Item = &Integer> {
        self.entries.iter().map(|e| &e.value)
    }
}

/// `sum_k binomial(n, k)^power`, using the row symmetry to halve the work.
fn power_sum(n: u64, power: u32) -> Integer {
    let row = binomial_row(n);
    let half = row.len() / 2;
    let mut total = Integer::from(0);
    for c in row.iter().take(half) {
        total += Integer::from(c.pow(power));
    }
    total *= 2u32;
    if row.len() % 2 == 1 {
        let middle = &row[half];
        total += Integer::from(middle.pow(power));
    }
    total
}

pub fn beta_direct(n: u64) -> Integer {
    power_sum(n, 2)
}

pub fn franel3_direct(n: u64) -> Integer {
    power_sum(n, 3)
}

pub fn franel4_direct(n: u64) -> Integer {
    power_sum(n, 4)
}

/// `sum_k binomial(n,k)^2 binomial(2k,k) binomial(2(n-k), n-k)`
pub fn domb_direct(n: u64) -> Integer {
    let row = binomial_row(n);
    let central: Vec<_> = (0..=n).map(|k| binomial(2 * k, k)).collect();
    let mut total = Integer::from(0);
    for k in 0..=n as usize {
        let term = &row[k] * &row[k] * &central[k] * &central[n as usize - k];
        total += Integer::from(term);
    }
    total
}

/// `n beta_n = 2(2n - 1) beta_{n-1}`, `beta_0 = 1`.
fn beta_rec_table(to: u64) -> Vec<Integer> {
    let mut out = Vec::with_capacity(to as usize + 1);
    let mut b = Integer::one();
    out.push(b.clone());
    for n in 1..=to {
        b = b * (2 * (2 * n - 1)) / n;
        out.push(b.clone());
    }
    out
}

/// `(n+1)^2 f_{n+1} = (7n^2 + 7n + 2) f_n + 8 n^2 f_{n-1}`, `f_0 = 1`, `f_1 = 2`.
fn franel3_rec_table(to: u64) -> Result<Vec<Integer>, SequenceError> {
    let mut out = vec![Integer::from(1), Integer::from(2)];
    for n in 1..to {
        let n_i = Integer::from(n);
        let rhs = (&n_i * &n_i * 7u32 + &n_i * 7u32 + 2u32) * &out[n as usize]
            + &n_i * &n_i * 8u32 * &out[n as usize - 1];
        let d = Integer::from(n + 1).pow(2u32);
        let next = exact_div(&rhs, &d).ok_or(SequenceError::InexactDivision {
            sequence: "franel3",
            n: n + 1,
        })?;
        out.push(next);
    }
    out.truncate(to as usize + 1);
    Ok(out)
}

/// `(n+1)^3 phi_{n+1} = 2(2n+1)(3n^2+3n+1) phi_n + 4n(4n-1)(4n+1) phi_{n-1}`,
/// `phi_0 = 1`, `phi_1 = 2`.
fn franel4_rec_table(to: u64) -> Result<Vec<Integer>, SequenceError> {
    let mut out = vec![Integer::from(1), Integer::from(2)];
    for n in 1..to {
        let n_i = Integer::from(n);
        let a = Integer::from(2 * (2 * n + 1)) * (&n_i * &n_i * 3u32 + &n_i * 3u32 + 1u32);
        let b = Integer::from(4 * n) * (4 * n - 1) * (4 * n + 1);
        let rhs = a * &out[n as usize] + b * &out[n as usize - 1];
        let d = Integer::from(n + 1).pow(3u32);
        let next = exact_div(&rhs, &d).ok_or(SequenceError::InexactDivision {
            sequence: "franel4",
            n: n + 1,
        })?;
        out.push(next);
    }
    out.truncate(to as usize + 1);
    Ok(out)
}

pub fn beta_rec(n: u64) -> Integer {
    beta_rec_table(n).pop().expect("table is non-empty")
}

pub fn franel3_rec(n: u64) -> Result<Integer, SequenceError> {
    Ok(franel3_rec_table(n)?.pop().expect("table is non-empty"))
}

pub fn franel4_rec(n: u64) -> Result<Integer, SequenceError> {
    Ok(franel4_rec_table(n)?.pop().expect("table is non-empty"))
}

/// Builds a table for `from..=to`. The recurrence route always starts
/// from the initial values, so its cost is linear in `to`.
pub fn generate(
    id: SequenceId,
    from: u64,
    to: u64,
    method: Method,
) -> Result<SequenceTable, SequenceError> {
    if from > to {
        return Err(SequenceError::Range { from, to });
    }
    let entries = match method {
        Method::Direct => (from..=to)
            .map(|n| SequenceEntry { n, value: id.direct(n), method })
            .collect(),
        Method::Recurrence => id
            .recurrence_table(to)?
            .into_iter()
            .enumerate()
            .skip(from as usize)
            .map(|(n, value)| SequenceEntry { n: n as u64, value, method })
            .collect(),
    };
    Ok(SequenceTable { id, entries })
}

/// Grow-only memo of recurrence values for one sequence.
///
/// Entries are appended under the write lock and never modified, so a
/// value observed once is the value every later reader sees.
#[derive(Debug)]
pub struct RecurrenceMemo {
    id: SequenceId,
    values: RwLock<Vec<Integer>>,
}

impl RecurrenceMemo {
    pub fn new(id: SequenceId) -> Result<Self, SequenceError> {
        if !id.has_recurrence() {
            return Err(SequenceError::NoRecurrence(id.name()));
        }
        Ok(Self { id, values: RwLock::new(Vec::new()) })
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn get(&self, n: u64) -> Result<Integer, SequenceError> {
        if let Some(v) = self.values.read().expect("memo lock poisoned").get(n as usize) {
            return Ok(v.clone());
        }
        let mut values = self.values.write().expect("memo lock poisoned");
        if values.len() <= n as usize {
            let table = self.id.recurrence_table(n)?;
            let have = values.len();
            values.extend(table.into_iter().skip(have));
        }
        Ok(values[n as usize].clone())
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone)]
pub struct BenchResult {
    pub id: SequenceId,
    pub to: u64,
    pub direct: std::time::Duration,
    pub recurrence: Option<std::time::Duration>,
    pub agree: bool,
}

/// Times direct summation against the recurrence over `0..=to`.
pub fn bench(id: SequenceId, to: u64) -> Result<BenchResult, SequenceError> {
    let start = std::time::Instant::now();
    let direct = generate(id, 0, to, Method::Direct)?;
    let direct_time = start.elapsed();
    if !id.has_recurrence() {
        return Ok(BenchResult { id, to, direct: direct_time, recurrence: None, agree: true });
    }
    let start = std::time::Instant::now();
    let rec = generate(id, 0, to, Method::Recurrence)?;
    let rec_time = start.elapsed();
    let agree = direct.values().eq(rec.values());
    Ok(BenchResult { id, to, direct: direct_time, recurrence: Some(rec_time), agree })
}
