//! Partitions, bar partitions, Frobenius symbols and β-sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition stored as weakly decreasing positive parts.
///
/// The empty partition is a valid value of size 0.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), or 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn frobenius(&self) -> FrobeniusSymbol {
        let conj = self.conjugate();
        let rank = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(k, &p)| p > k)
            .count();
        FrobeniusSymbol {
            arms: (0..rank).map(|k| self.parts[k] - k - 1).collect(),
            legs: (0..rank).map(|k| conj.parts[k] - k - 1).collect(),
        }
    }

    pub fn from_frobenius(f: &FrobeniusSymbol) -> Partition {
        let rank = f.rank();
        let mut parts: Vec<usize> = (0..rank).map(|k| f.arms[k] + k + 1).collect();
        let columns: Vec<usize> = (0..rank).map(|k| f.legs[k] + k + 1).collect();
        let depth = columns.first().copied().unwrap_or(0);
        for row in rank..depth {
            parts.push(columns.iter().filter(|&&c| c > row).count());
        }
        Partition { parts }
    }

    /// Reads a doubled partition back as the bar partition it doubles.
    pub fn undouble(&self) -> Result<BarPartition> {
        let f = self.frobenius();
        let doubled = f
            .arms
            .iter()
            .zip(&f.legs)
            .all(|(&a, &l)| a >= 1 && l + 1 == a);
        if !doubled {
            return Err(Error::NotDoubledForm(self.parts.clone()));
        }
        Ok(BarPartition { parts: f.arms })
    }

    /// `{p[i] + t - i - 1 : i < t}`, padding with zero parts.
    pub fn beta_set(&self, t: usize) -> Result<BetaSet> {
        if t < self.len() {
            return Err(Error::SizeTooSmall {
                size: t,
                parts: self.len(),
            });
        }
        Ok(BetaSet {
            elements: (0..t).map(|i| self.part(i) + t - i - 1).collect(),
        })
    }

    /// Hook length of the 1-based cell `(row, col)` computed on the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 || self.part(row - 1) < col {
            return None;
        }
        let arm = self.part(row - 1) - col;
        let leg = self.parts[row..].iter().take_while(|&&p| p >= col).count();
        Some(arm + leg + 1)
    }

    /// 1-based cells `(row, col)` in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts).map_err(|e| Error::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A partition into distinct positive parts `a_1 > … > a_m > 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BarPartition {
    parts: Vec<usize>,
}

impl BarPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.last() == Some(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotABarPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, `m`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `n = Σ a_i`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The doubled partition with Frobenius symbol `(a_1, …, a_m | a_1 - 1, …, a_m - 1)`.
    pub fn double(&self) -> Partition {
        let f = FrobeniusSymbol {
            arms: self.parts.clone(),
            legs: self.parts.iter().map(|&a| a - 1).collect(),
        };
        Partition::from_frobenius(&f)
    }

    pub fn as_partition(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for BarPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        BarPartition::new(parts).map_err(|e| Error::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<usize>> for BarPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        BarPartition::new(parts)
    }
}

impl TryFrom<&Partition> for BarPartition {
    type Error = Error;

    fn try_from(p: &Partition) -> Result<Self> {
        BarPartition::new(p.parts.clone())
    }
}

/// Arm and leg lengths of the diagonal hooks of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSymbol {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusSymbol {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius(format!(
                "{} arms but {} legs",
                arms.len(),
                legs.len()
            )));
        }
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidFrobenius(
                "arms and legs must be strictly decreasing".into(),
            ));
        }
        Ok(Self { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join(&self.arms), join(&self.legs))
    }
}

/// A finite set of distinct non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BetaSet {
    elements: BTreeSet<usize>,
}

impl BetaSet {
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        Self {
            elements: elements.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.elements.last().copied()
    }

    /// `{0} ∪ {x + 1 : x ∈ X}`: the same partition with one more bead.
    pub fn shifted(&self) -> BetaSet {
        let mut elements: BTreeSet<usize> = self.elements.iter().map(|x| x + 1).collect();
        elements.insert(0);
        BetaSet { elements }
    }

    /// The partition `x_k - (t - k)` read off the descending elements.
    pub fn to_partition(&self) -> Partition {
        let t = self.elements.len();
        let parts = self
            .elements
            .iter()
            .rev()
            .enumerate()
            .map(|(k, &x)| x - (t - 1 - k))
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }
}

impl FromIterator<usize> for BetaSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        BetaSet::new(iter)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<usize> = self.iter().collect();
        write!(f, "{{{}}}", join(&v))
    }
}

/// All bar partitions of `n` in descending lexicographic order.
pub fn enumerate_bar_partitions(n: usize) -> Vec<BarPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    strict_rec(n, n, &mut current, &mut out);
    out
}

fn strict_rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<BarPartition>) {
    if rest == 0 {
        out.push(BarPartition {
            parts: current.clone(),
        });
        return;
    }
    // the remaining parts are distinct and at most `max`
    for a in (1..=max.min(rest)).rev() {
        if a * (a + 1) / 2 < rest {
            break;
        }
        current.push(a);
        strict_rec(rest - a, a - 1, current, out);
        current.pop();
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    weak_rec(n, n, &mut current, &mut out);
    out
}

fn weak_rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for a in (1..=max.min(rest)).rev() {
        current.push(a);
        weak_rec(rest - a, a, current, out);
        current.pop();
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: format!("{tok:?}: {e}"),
            })
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        f.write_str("-")
    } else {
        f.write_str(&join(parts))
    }
}

pub(crate) fn join(v: &[usize]) -> String {
    v.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
