//! Partitions, strict partitions and (skew) shifted diagrams.
//!
//! Cells are 1-based `(row, col)` pairs. The shifted diagram of a strict
//! partition puts row `i` in columns `i ..= λ_i + i - 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("∅");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn componentwise_contains(outer: &[usize], inner: &[usize]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        componentwise_contains(&self.parts, &other.parts)
    }

    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Cells of the ordinary diagram, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// All partitions `μ ⊆ self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() || cap == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            out.push(Partition { parts: cur.clone() });
            for v in 1..=outer[i].min(cap) {
                cur.push(v);
                rec(outer, i + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Every partition of weight at most `max_weight`.
    pub fn all_up_to(max_weight: usize) -> Vec<Partition> {
        fn rec(rem: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            for p in (1..=rem.min(cap)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(max_weight, max_weight, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Strictly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(Error::NotStrict(format!("{parts:?}")));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        componentwise_contains(&self.parts, &other.parts)
    }

    pub fn to_partition(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }

    /// Cells of the shifted diagram `S(λ)`, row-major.
    pub fn shifted_diagram(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (i + 1..i + 1 + p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Strict partitions with parts `<= max_part` and length `<= max_len`.
    pub fn all_bounded(max_part: usize, max_len: usize) -> Vec<StrictPartition> {
        fn rec(cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition { parts: cur.clone() });
            if left == 0 {
                return;
            }
            for p in (1..=cap).rev() {
                cur.push(p);
                rec(p - 1, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Every strict partition of weight at most `max_weight`.
    pub fn all_up_to(max_weight: usize) -> Vec<StrictPartition> {
        StrictPartition::all_bounded(max_weight, max_weight)
            .into_iter()
            .filter(|p| p.weight() <= max_weight)
            .collect()
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// The cell set `S(outer) - S(inner)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShiftedShape {
    outer: StrictPartition,
    inner: StrictPartition,
    cells: Vec<(usize, usize)>,
}

impl SkewShiftedShape {
    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    /// Row-major.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Column range of row `i` (1-based), possibly empty.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        let start = i + self.inner.part(i);
        let end = i + self.outer.part(i);
        start..end.max(start)
    }
}

pub fn shifted_cells(lambda: &StrictPartition, mu: &StrictPartition) -> Result<SkewShiftedShape> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            outer: lambda.to_string(),
            inner: mu.to_string(),
        });
    }
    let cells = (1..=lambda.len())
        .flat_map(|i| (i + mu.part(i)..i + lambda.part(i)).map(move |j| (i, j)))
        .collect();
    Ok(SkewShiftedShape {
        outer: lambda.clone(),
        inner: mu.clone(),
        cells,
    })
}

/// All strict `ν` with `μ ⊆ ν ⊆ λ`, in increasing order.
pub fn enum_strict_between(mu: &StrictPartition, lambda: &StrictPartition) -> Vec<StrictPartition> {
    if !lambda.contains(mu) {
        return Vec::new();
    }
    fn rec(
        lam: &[usize],
        mu: &StrictPartition,
        i: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<StrictPartition>,
    ) {
        // Parts beyond the current prefix are all zero from here on.
        if mu.len() <= i {
            out.push(StrictPartition { parts: cur.clone() });
        }
        if i == lam.len() {
            return;
        }
        let lo = mu.part(i + 1).max(1);
        let hi = match cur.last() {
            Some(&p) => lam[i].min(p - 1),
            None => lam[i],
        };
        for v in lo..=hi {
            cur.push(v);
            rec(lam, mu, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), mu, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Part lists for the Pfaffian block matrix, padded so the total size is
/// even. With `μ = ∅` a trailing 0 goes on `λ`; otherwise on `μ`.
pub fn pad_for_pfaffian(lambda: &StrictPartition, mu: &StrictPartition) -> (Vec<usize>, Vec<usize>) {
    let mut l = lambda.parts().to_vec();
    let mut m = mu.parts().to_vec();
    if m.is_empty() {
        if l.len() % 2 == 1 {
            l.push(0);
        }
    } else if (l.len() + m.len()) % 2 == 1 {
        m.push(0);
    }
    (l, m)
}
