//! Bar lengths of bar partitions, read through the doubled partition.
//!
//! The hooks of `D(λ)` split by corner cell `(r, c)`, with `m` the number of
//! parts of `λ`:
//!
//! | kind | cells |
//! |------|-------|
//! | `DP` | diagonal, `r = c ≤ m` |
//! | `P`  | column `m + 1`, `r ≤ m` |
//! | `B`  | rest of the rows `r ≤ m` strictly right of the diagonal |
//! | `NB` | everything else |
//!
//! `P ∪ B` is the shifted diagram of `λ` and its hook lengths are the bar
//! lengths of `λ`. Runner counts for modified lengths of the quotient
//! partition always come from the abacus of `D(λ)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::abacus::{self, Abacus, Hook, Modulus, RunnerCounts};
use crate::error::{Error, Result};
use crate::multiset::IntMultiset;
use crate::partitions::{BarPartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HookKind {
    /// Corresponds to a part of `μ`.
    #[serde(rename = "P")]
    Part,
    /// Diagonal hook, twice a part.
    #[serde(rename = "DP")]
    DoubledPart,
    /// A bar that is not a part.
    #[serde(rename = "B")]
    Bar,
    /// Lower-half counterpart of a bar.
    #[serde(rename = "NB")]
    NonBar,
}

impl HookKind {
    /// Kind of the hook with corner `(row, col)` in `D(μ)`, `μ` with `m` parts.
    pub fn of_cell(row: usize, col: usize, m: usize) -> HookKind {
        if row > m {
            HookKind::NonBar
        } else if row == col {
            HookKind::DoubledPart
        } else if col == m + 1 {
            HookKind::Part
        } else if col > row {
            HookKind::Bar
        } else {
            HookKind::NonBar
        }
    }
}

impl fmt::Display for HookKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HookKind::Part => "P",
            HookKind::DoubledPart => "DP",
            HookKind::Bar => "B",
            HookKind::NonBar => "NB",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedHook {
    pub hook: Hook,
    pub kind: HookKind,
}

/// Every hook of `D(λ)` with its kind, indexed by corner cell.
#[derive(Clone, Debug)]
pub struct HookClassification {
    lambda: BarPartition,
    d: Modulus,
    hooks: Vec<ClassifiedHook>,
    by_cell: HashMap<(usize, usize), usize>,
}

impl HookClassification {
    pub fn lambda(&self) -> &BarPartition {
        &self.lambda
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn hooks(&self) -> &[ClassifiedHook] {
        &self.hooks
    }

    pub fn of_kind(&self, kind: HookKind) -> impl Iterator<Item = &ClassifiedHook> + '_ {
        self.hooks.iter().filter(move |z| z.kind == kind)
    }

    pub fn lengths(&self, kind: HookKind) -> IntMultiset {
        self.of_kind(kind).map(|z| z.hook.length as i64).collect()
    }

    pub fn at(&self, row: usize, col: usize) -> Option<&ClassifiedHook> {
        self.by_cell.get(&(row, col)).map(|&k| &self.hooks[k])
    }

    /// The lower-half counterpart `z*` of a bar `z` at `(r, c)`: the hook at
    /// `(σ(c), r)`, where `σ` skips column `m + 1`.
    pub fn star(&self, z: &ClassifiedHook) -> Result<&ClassifiedHook> {
        let (r, c) = (z.hook.row, z.hook.col);
        if z.kind != HookKind::Bar {
            return Err(Error::NotABar { row: r, col: c });
        }
        let m = self.lambda.len();
        let row = if c <= m { c } else { c - 1 };
        self.at(row, r)
            .ok_or(Error::NoSuchCell { row, col: r })
    }

    /// The diagonal hook `z^{×2}` paired with the part hook `z` at `(i, m + 1)`.
    pub fn doubled_partner(&self, z: &ClassifiedHook) -> Result<&ClassifiedHook> {
        let row = z.hook.row;
        if z.kind != HookKind::Part {
            return Err(Error::StructureViolation(format!(
                "hook at ({row}, {}) is not a part hook",
                z.hook.col
            )));
        }
        self.at(row, row)
            .ok_or(Error::NoSuchCell { row, col: row })
    }
}

/// Classifies every hook of `D(λ)`, with runner labels from its minimally
/// normalized `d`-abacus.
pub fn classify_hooks(lambda: &BarPartition, d: Modulus) -> HookClassification {
    let m = lambda.len();
    let hooks: Vec<ClassifiedHook> = abacus::hooks(&lambda.double(), d)
        .into_iter()
        .map(|hook| ClassifiedHook {
            hook,
            kind: HookKind::of_cell(hook.row, hook.col, m),
        })
        .collect();
    let by_cell = hooks
        .iter()
        .enumerate()
        .map(|(k, z)| ((z.hook.row, z.hook.col), k))
        .collect();
    HookClassification {
        lambda: lambda.clone(),
        d,
        hooks,
        by_cell,
    }
}

/// `B(λ)` straight from the parts: row `i` contributes
/// `{1, …, a_i} ∪ {a_i + a_j : j > i} \ {a_i - a_j : j > i}`.
pub fn bar_lengths_direct(lambda: &BarPartition) -> IntMultiset {
    let a = lambda.parts();
    a.iter()
        .enumerate()
        .flat_map(|(i, &ai)| bar_row(a, i, ai))
        .map(|v| v as i64)
        .collect()
}

fn bar_row(a: &[usize], i: usize, ai: usize) -> Vec<usize> {
    let later = &a[i + 1..];
    let mut row: Vec<usize> = (1..=ai)
        .filter(|&k| !later.contains(&(ai - k)))
        .collect();
    row.extend(later.iter().map(|&aj| ai + aj));
    row.sort_unstable_by(|x, y| y.cmp(x));
    row
}

/// Rows of the shifted diagram filled with bar lengths, read off `D(λ)`:
/// row `r` holds the hook lengths of cells `(r, r + 1), …, (r, r + a_r)`.
pub fn shifted_bar_rows(lambda: &BarPartition) -> Vec<Vec<usize>> {
    let doubled = lambda.double();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let r = k + 1;
            (r + 1..=r + a)
                .map(|c| doubled.hook_length(r, c).expect("cell inside D(λ)"))
                .collect()
        })
        .collect()
}

/// `B(λ) = P(D(λ)) ∪ B(D(λ))`.
pub fn bar_lengths_via_doubling(lambda: &BarPartition) -> IntMultiset {
    let c = classify_hooks(lambda, Modulus::THREE);
    c.lengths(HookKind::Part).union(&c.lengths(HookKind::Bar))
}

/// Bar lengths of `λ` divisible by `d`.
pub fn bars_divisible_by_d(lambda: &BarPartition, d: Modulus) -> IntMultiset {
    let d = d.get() as i64;
    bar_lengths_direct(lambda).filter(|v| v % d == 0)
}

/// No bar length divisible by `d`.
pub fn is_bar_core(lambda: &BarPartition, d: Modulus) -> bool {
    bars_divisible_by_d(lambda, d).is_empty()
}

/// The d̄-core, the bar partition whose double is the d-core of `D(λ)`.
pub fn dbar_core(lambda: &BarPartition, d: Modulus) -> Result<BarPartition> {
    abacus::d_core(&lambda.double(), d).undouble()
}

/// `(μ_0, μ_1, …, μ_{(d-1)/2})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BarQuotient {
    pub mu0: BarPartition,
    pub mus: Vec<Partition>,
}

impl BarQuotient {
    pub fn empty(d: Modulus) -> Self {
        Self {
            mu0: BarPartition::empty(),
            mus: vec![Partition::empty(); d.half()],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.mu0.is_empty() && self.mus.iter().all(Partition::is_empty)
    }

    /// `|μ_0| + Σ |μ_i|`.
    pub fn weight(&self) -> usize {
        self.mu0.size() + self.mus.iter().map(Partition::size).sum::<usize>()
    }

    /// The d-quotient of `D(λ)`: `(D(μ_0), μ_1, …, μ_h, μ_h*, …, μ_1*)`.
    pub fn doubled_quotient(&self, d: Modulus) -> Result<Vec<Partition>> {
        if self.mus.len() != d.half() {
            return Err(Error::QuotientArity {
                expected: d.half(),
                got: self.mus.len(),
            });
        }
        let mut comps = Vec::with_capacity(d.get());
        comps.push(self.mu0.double());
        comps.extend(self.mus.iter().cloned());
        comps.extend(self.mus.iter().rev().map(Partition::conjugate));
        Ok(comps)
    }
}

impl fmt::Display for BarQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}", self.mu0)?;
        for mu in &self.mus {
            write!(f, ", {mu:?}")?;
        }
        f.write_str(")")
    }
}

/// The d̄-quotient, read from the d-quotient of `D(λ)`.
pub fn dbar_quotient(lambda: &BarPartition, d: Modulus) -> Result<BarQuotient> {
    let comps = abacus::d_quotient(&lambda.double(), d);
    let mu0 = comps[0].undouble().map_err(|_| {
        Error::StructureViolation(format!(
            "runner 0 of D({lambda:?}) carries {:?}, not a doubled partition",
            comps[0]
        ))
    })?;
    for i in 1..=d.half() {
        let partner = &comps[d.get() - i];
        if *partner != comps[i].conjugate() {
            return Err(Error::StructureViolation(format!(
                "runner {} of D({lambda:?}) carries {partner:?}, not the conjugate of {:?}",
                d.get() - i,
                comps[i]
            )));
        }
    }
    Ok(BarQuotient {
        mu0,
        mus: comps[1..=d.half()].to_vec(),
    })
}

/// `q̄_d(λ)`: empty d̄-core, same d̄-quotient as `λ`.
pub fn dbar_quotient_partition(lambda: &BarPartition, d: Modulus) -> Result<BarPartition> {
    abacus::quotient_partition(&lambda.double(), d).undouble()
}

/// The bar partition with the given d̄-core and d̄-quotient.
pub fn reconstruct(core: &BarPartition, quotient: &BarQuotient, d: Modulus) -> Result<BarPartition> {
    if !is_bar_core(core, d) {
        return Err(Error::NotACore(core.parts().to_vec(), d.get()));
    }
    let comps = quotient.doubled_quotient(d)?;
    let doubled_core = core.double();
    let mut k = Abacus::minimal(&doubled_core, d).bead_count() / d.get();
    let x = loop {
        let x = Abacus::with_rows(&doubled_core, d, k)?.runner_counts();
        if comps.iter().enumerate().all(|(i, c)| c.len() <= x.get(i)) {
            break x;
        }
        k += 1;
    };
    let mut positions = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        positions.extend(comp.beta_set(x.get(i))?.iter().map(|row| row * d.get() + i));
    }
    crate::partitions::BetaSet::new(positions)
        .to_partition()
        .undouble()
}

/// Modified lengths over the hooks of `D(q̄_d(λ))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModifiedBars {
    pub quotient_partition: BarPartition,
    /// Runner counts of the minimally normalized abacus of `D(λ)`.
    pub runner_counts: RunnerCounts,
    /// `B̄(q̄_d(λ))`: `|h̄|` over the `P` and `B` hooks.
    pub bars: IntMultiset,
    /// `P̄(q̄_d(λ))`: `|h̄|` over the `P` hooks; a set.
    pub parts: IntMultiset,
    /// Every hook of `D(q̄_d(λ))` with its signed modified length.
    #[serde(skip)]
    pub hooks: Vec<(ClassifiedHook, i64)>,
}

/// Computes `B̄(q̄_d(λ))` and `P̄(q̄_d(λ))`.
pub fn modified_bar_data(lambda: &BarPartition, d: Modulus) -> Result<ModifiedBars> {
    let x = Abacus::minimal(&lambda.double(), d).runner_counts();
    let quotient_partition = dbar_quotient_partition(lambda, d)?;
    let classes = classify_hooks(&quotient_partition, d);
    let hooks: Vec<(ClassifiedHook, i64)> = classes
        .hooks()
        .iter()
        .map(|&z| (z, abacus::modified_hook_length(&z.hook, &x)))
        .collect();
    let of = |kinds: &[HookKind]| -> IntMultiset {
        hooks
            .iter()
            .filter(|(z, _)| kinds.contains(&z.kind))
            .map(|&(_, h)| h.abs())
            .collect()
    };
    let bars = of(&[HookKind::Part, HookKind::Bar]);
    let parts = of(&[HookKind::Part]);
    if !parts.is_set() {
        return Err(Error::StructureViolation(format!(
            "modified part lengths {parts} of {quotient_partition:?} repeat"
        )));
    }
    Ok(ModifiedBars {
        quotient_partition,
        runner_counts: x,
        bars,
        parts,
        hooks,
    })
}

/// The pieces of `B(λ) = B(c̄_d(λ)) ∪ B̃(q̄_d(λ))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarDecomposition {
    pub lambda: BarPartition,
    pub d: Modulus,
    pub core: BarPartition,
    pub quotient: BarQuotient,
    pub quotient_partition: BarPartition,
    pub runner_counts: RunnerCounts,
    /// `B(λ)`.
    pub bars: IntMultiset,
    /// `B(c̄_d(λ))`.
    pub core_bars: IntMultiset,
    /// `B̄(q̄_d(λ))`.
    pub modified_bars: IntMultiset,
    /// `P(λ)`.
    pub parts: IntMultiset,
    /// `P(c̄_d(λ))`.
    pub core_parts: IntMultiset,
    /// `P̄(q̄_d(λ))`.
    pub modified_parts: IntMultiset,
    /// `I = P(c̄_d(λ)) ∩ P̄(q̄_d(λ))`.
    pub overlap: IntMultiset,
    /// `I^{×2}`.
    pub overlap_doubled: IntMultiset,
    /// `B̃(q̄_d(λ)) = B̄ \ I ∪ I^{×2}`.
    pub adjusted_bars: IntMultiset,
    /// `B(c̄_d(λ)) ∪ B̃(q̄_d(λ))`, to be compared with `B(λ)`.
    pub total: IntMultiset,
    pub checks: DecompositionChecks,
}

/// Each identity the decomposition is expected to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionChecks {
    /// `B(λ) = B(c̄) ∪ B̃(q̄)`.
    pub decomposition: bool,
    /// `B(c̄) ⊂ B(λ)`.
    pub core_bars_contained: bool,
    /// `B̄(q̄) ⊂ B(λ)`.
    pub modified_bars_contained: bool,
    /// `P(λ) = P(c̄) ∘ P̄(q̄)`.
    pub parts_symmetric_difference: bool,
    /// `m(c̄) + m(q̄) = m(λ) + 2|I|`.
    pub part_count_balance: bool,
    /// `B(λ) = B(c̄) ∪ B̄(q̄)` exactly when `m(λ) = m(c̄) + m(q̄)`.
    pub coincidence_criterion: bool,
    /// Whether `m(λ) = m(c̄) + m(q̄)` holds for this `λ`.
    pub coincidence: bool,
}

impl DecompositionChecks {
    pub fn all_hold(&self) -> bool {
        self.decomposition
            && self.core_bars_contained
            && self.modified_bars_contained
            && self.parts_symmetric_difference
            && self.part_count_balance
            && self.coincidence_criterion
    }
}

fn parts_of(lambda: &BarPartition) -> IntMultiset {
    lambda.parts().iter().map(|&a| a as i64).collect()
}

pub fn decompose_bars(lambda: &BarPartition, d: Modulus) -> Result<BarDecomposition> {
    let core = dbar_core(lambda, d)?;
    let quotient = dbar_quotient(lambda, d)?;
    let modified = modified_bar_data(lambda, d)?;

    let bars = bar_lengths_direct(lambda);
    let core_bars = bar_lengths_direct(&core);
    let parts = parts_of(lambda);
    let core_parts = parts_of(&core);
    let overlap = core_parts.intersection(&modified.parts);
    let overlap_doubled = overlap.doubled();
    let adjusted_bars = modified
        .bars
        .checked_difference(&overlap)?
        .union(&overlap_doubled);
    let total = core_bars.union(&adjusted_bars);

    let (m, mc, mq) = (lambda.len(), core.len(), modified.quotient_partition.len());
    let coincidence = m == mc + mq;
    let plain_union = core_bars.union(&modified.bars) == bars;
    let checks = DecompositionChecks {
        decomposition: total == bars,
        core_bars_contained: core_bars.is_submultiset_of(&bars),
        modified_bars_contained: modified.bars.is_submultiset_of(&bars),
        parts_symmetric_difference: parts == core_parts.symmetric_difference(&modified.parts),
        part_count_balance: mc + mq == m + 2 * overlap.len(),
        coincidence_criterion: plain_union == coincidence,
        coincidence,
    };

    Ok(BarDecomposition {
        lambda: lambda.clone(),
        d,
        core,
        quotient,
        quotient_partition: modified.quotient_partition,
        runner_counts: modified.runner_counts,
        bars,
        core_bars,
        modified_bars: modified.bars,
        parts,
        core_parts,
        modified_parts: modified.parts,
        overlap,
        overlap_doubled,
        adjusted_bars,
        total,
        checks,
    })
}
