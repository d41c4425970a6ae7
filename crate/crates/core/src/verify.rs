//! Exhaustive verification of every identity the library relies on.
//!
//! Checks run per bar partition, per bar partition and modulus, per ordinary
//! partition and modulus, and per size for the degree square sum. Each check
//! has a stable property id; failures are collected as counterexamples and
//! sorted so that the report does not depend on evaluation order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display, Write as _};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::{self, Abacus, Modulus};
use crate::bars::{self, HookKind};
use crate::degrees;
use crate::error::Error;
use crate::multiset::IntMultiset;
use crate::partitions::{enumerate_bar_partitions, enumerate_partitions, BarPartition, Partition};
use crate::Degree;

pub mod property {
    pub const DIRECT_VS_DOUBLING: &str = "direct-vs-doubling";
    pub const DOUBLE_ROUNDTRIP: &str = "double-roundtrip";
    pub const RUNNER_SYMMETRY: &str = "runner-symmetry";
    pub const STAR_PAIRING: &str = "star-pairing";
    pub const QUOTIENT_STRUCTURE: &str = "quotient-structure";
    pub const CORE_IS_BAR_CORE: &str = "core-is-bar-core";
    pub const WEIGHT: &str = "weight";
    pub const QUOTIENT_PARTITION: &str = "quotient-partition";
    pub const DIVISIBLE_BARS: &str = "divisible-bars";
    pub const RECONSTRUCT_ROUNDTRIP: &str = "reconstruct-roundtrip";
    pub const MODIFIED_STAR_INVARIANCE: &str = "modified-star-invariance";
    pub const MODIFIED_DOUBLING: &str = "modified-doubling";
    pub const MODIFIED_PARTS_DISTINCT: &str = "modified-parts-distinct";
    pub const BAR_DECOMPOSITION: &str = "bar-decomposition";
    pub const CORE_BARS_CONTAINED: &str = "core-bars-contained";
    pub const MODIFIED_BARS_CONTAINED: &str = "modified-bars-contained";
    pub const PARTS_SYMMETRIC_DIFFERENCE: &str = "parts-symmetric-difference";
    pub const PART_COUNT_BALANCE: &str = "part-count-balance";
    pub const COINCIDENCE_CRITERION: &str = "coincidence-criterion";
    pub const RELATIVE_DEGREE: &str = "relative-degree";
    pub const BAR_PRODUCT: &str = "bar-product";
    pub const SIGMA_LEDGER: &str = "sigma-ledger";
    pub const FROBENIUS_ROUNDTRIP: &str = "frobenius-roundtrip";
    pub const CONJUGATE_INVOLUTION: &str = "conjugate-involution";
    pub const BETA_SET_ROUNDTRIP: &str = "beta-set-roundtrip";
    pub const HOOK_DECOMPOSITION: &str = "hook-decomposition";
    pub const HOOK_LABELS: &str = "hook-labels";
    pub const CORE_QUOTIENT_WEIGHT: &str = "core-quotient-weight";
    pub const CORE_IS_CORE: &str = "core-is-core";
    pub const QUOTIENT_PARTITION_CORE: &str = "quotient-partition-core";
    pub const RUNNER_SHIFT: &str = "runner-shift";
    pub const DEGREE_SQUARE_SUM: &str = "degree-square-sum";
}

use property as p;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub expected: String,
    pub actual: String,
}

impl From<Error> for Mismatch {
    fn from(e: Error) -> Self {
        Mismatch {
            expected: "no error".into(),
            actual: e.to_string(),
        }
    }
}

type Check = Result<(), Mismatch>;
type CheckField = fn(&bars::DecompositionChecks) -> bool;

fn ensure(cond: bool, expected: impl Display, actual: impl Display) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Mismatch {
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

fn ensure_eq<T: PartialEq + fmt::Debug>(expected: T, actual: T) -> Check {
    ensure(
        expected == actual,
        format!("{expected:?}"),
        format!("{actual:?}"),
    )
}

/// One evaluated property on one input.
#[derive(Clone, Debug)]
pub struct Finding {
    pub property: &'static str,
    pub subject: Vec<usize>,
    pub d: Option<usize>,
    pub outcome: Check,
}

struct Recorder<'a> {
    subject: &'a [usize],
    d: Option<usize>,
    out: Vec<Finding>,
}

impl<'a> Recorder<'a> {
    fn new(subject: &'a [usize], d: Option<Modulus>) -> Self {
        Self {
            subject,
            d: d.map(Modulus::get),
            out: Vec::new(),
        }
    }

    fn check(&mut self, property: &'static str, f: impl FnOnce() -> Check) {
        self.out.push(Finding {
            property,
            subject: self.subject.to_vec(),
            d: self.d,
            outcome: f(),
        });
    }
}

/// Modulus-free checks on a bar partition.
pub fn check_bar_partition(lambda: &BarPartition) -> Vec<Finding> {
    let mut rec = Recorder::new(lambda.parts(), None);
    rec.check(p::DIRECT_VS_DOUBLING, || {
        let direct = bars::bar_lengths_direct(lambda);
        ensure_eq(lambda.size(), direct.len())?;
        ensure_eq(direct, bars::bar_lengths_via_doubling(lambda))
    });
    rec.check(p::DOUBLE_ROUNDTRIP, || {
        let doubled = lambda.double();
        ensure_eq(2 * lambda.size(), doubled.size())?;
        ensure_eq(lambda.clone(), doubled.undouble()?)
    });
    rec.out
}

/// Every modulus-dependent check on a bar partition.
pub fn check_bar_partition_mod(lambda: &BarPartition, d: Modulus) -> Vec<Finding> {
    let mut rec = Recorder::new(lambda.parts(), Some(d));
    let doubled = lambda.double();
    let x = Abacus::minimal(&doubled, d).runner_counts();

    rec.check(p::RUNNER_SYMMETRY, || {
        let sums: BTreeSet<usize> = (0..d.get())
            .map(|i| x.get(i) + x.get(d.conjugate_runner(i)))
            .collect();
        ensure(sums.len() == 1, "constant x_i + x_i*", format!("x = ({x})"))
    });

    rec.check(p::STAR_PAIRING, || star_pairing(lambda, d));

    rec.check(p::QUOTIENT_STRUCTURE, || {
        bars::dbar_quotient(lambda, d)?;
        Ok(())
    });

    rec.check(p::CORE_IS_BAR_CORE, || {
        let core = bars::dbar_core(lambda, d)?;
        ensure(
            bars::is_bar_core(&core, d),
            "no bar divisible by d",
            bars::bars_divisible_by_d(&core, d),
        )?;
        ensure_eq(core.clone(), bars::dbar_core(&core, d)?)
    });

    rec.check(p::WEIGHT, || {
        let core = bars::dbar_core(lambda, d)?;
        let qp = bars::dbar_quotient_partition(lambda, d)?;
        let quotient = bars::dbar_quotient(lambda, d)?;
        ensure_eq(lambda.size(), core.size() + qp.size())?;
        ensure_eq(qp.size(), d.get() * quotient.weight())
    });

    rec.check(p::QUOTIENT_PARTITION, || {
        let qp = bars::dbar_quotient_partition(lambda, d)?;
        ensure_eq(BarPartition::empty(), bars::dbar_core(&qp, d)?)?;
        ensure_eq(bars::dbar_quotient(lambda, d)?, bars::dbar_quotient(&qp, d)?)
    });

    rec.check(p::DIVISIBLE_BARS, || {
        let qp = bars::dbar_quotient_partition(lambda, d)?;
        ensure_eq(
            bars::bars_divisible_by_d(lambda, d),
            bars::bars_divisible_by_d(&qp, d),
        )
    });

    rec.check(p::RECONSTRUCT_ROUNDTRIP, || {
        let core = bars::dbar_core(lambda, d)?;
        let quotient = bars::dbar_quotient(lambda, d)?;
        ensure_eq(lambda.clone(), bars::reconstruct(&core, &quotient, d)?)
    });

    let modified = bars::dbar_quotient_partition(lambda, d).map(|qp| {
        let classes = bars::classify_hooks(&qp, d);
        (classes, x.clone())
    });

    rec.check(p::MODIFIED_STAR_INVARIANCE, || {
        let (classes, x) = modified.clone()?;
        for z in classes.of_kind(HookKind::Bar) {
            let s = classes.star(z)?;
            let (hz, hs) = (
                abacus::modified_hook_length(&z.hook, &x),
                abacus::modified_hook_length(&s.hook, &x),
            );
            ensure(
                hz == hs,
                format!("h̄ = {hz} at ({}, {})", s.hook.row, s.hook.col),
                hs,
            )?;
        }
        Ok(())
    });

    rec.check(p::MODIFIED_DOUBLING, || {
        let (classes, x) = modified.clone()?;
        for z in classes.of_kind(HookKind::Part) {
            let zz = classes.doubled_partner(z)?;
            ensure_eq(2 * z.hook.length, zz.hook.length)?;
            let (hz, hzz) = (
                abacus::modified_hook_length(&z.hook, &x),
                abacus::modified_hook_length(&zz.hook, &x),
            );
            ensure_eq(2 * hz, hzz)?;
        }
        Ok(())
    });

    rec.check(p::MODIFIED_PARTS_DISTINCT, || {
        let (classes, x) = modified.clone()?;
        for kind in [HookKind::Part, HookKind::DoubledPart] {
            let values: IntMultiset = classes
                .of_kind(kind)
                .map(|z| abacus::modified_hook_length(&z.hook, &x).abs())
                .collect();
            ensure(values.is_set(), format!("distinct values over {kind}"), &values)?;
        }
        Ok(())
    });

    let dec = bars::decompose_bars(lambda, d).map_err(Mismatch::from);
    let pieces: [(&'static str, CheckField); 6] = [
        (p::BAR_DECOMPOSITION, |c| c.decomposition),
        (p::CORE_BARS_CONTAINED, |c| c.core_bars_contained),
        (p::MODIFIED_BARS_CONTAINED, |c| c.modified_bars_contained),
        (p::PARTS_SYMMETRIC_DIFFERENCE, |c| c.parts_symmetric_difference),
        (p::PART_COUNT_BALANCE, |c| c.part_count_balance),
        (p::COINCIDENCE_CRITERION, |c| c.coincidence_criterion),
    ];
    for (id, get) in pieces {
        rec.check(id, || {
            let dec = dec.clone()?;
            ensure(
                get(&dec.checks),
                format!("B(λ) = {}", dec.bars),
                format!(
                    "core {} ∪ adjusted {} (overlap {})",
                    dec.core_bars, dec.adjusted_bars, dec.overlap
                ),
            )
        });
    }

    let relative = degrees::relative_degree_report::<Degree>(lambda, d).map_err(Mismatch::from);
    rec.check(p::RELATIVE_DEGREE, || {
        let r = relative.clone()?;
        ensure(r.direct == r.relative, &r.direct, &r.relative)
    });
    rec.check(p::BAR_PRODUCT, || {
        let r = relative.clone()?;
        ensure(r.product_identity, "πB(λ) = 2^δ πB̄ πB(c̄)", "unequal products")
    });
    rec.check(p::SIGMA_LEDGER, || {
        let c = relative.clone()?.context;
        ensure(
            c.sigma_identity_holds() && c.delta_identity_holds(),
            "σ and δ ledgers balance",
            format!("{c:?}"),
        )
    });

    rec.out
}

fn star_pairing(lambda: &BarPartition, d: Modulus) -> Check {
    let classes = bars::classify_hooks(lambda, d);
    let mut images = BTreeSet::new();
    let mut by_class: BTreeMap<(usize, usize), (IntMultiset, IntMultiset)> = BTreeMap::new();
    for z in classes.of_kind(HookKind::Bar) {
        let s = classes.star(z)?;
        let (i, j) = (z.hook.hand_runner, z.hook.foot_runner);
        let target = (d.conjugate_runner(j), d.conjugate_runner(i));
        ensure_eq(HookKind::NonBar, s.kind)?;
        ensure_eq(z.hook.length, s.hook.length)?;
        ensure_eq(target, (s.hook.hand_runner, s.hook.foot_runner))?;
        images.insert((s.hook.row, s.hook.col));
        by_class.entry((i, j)).or_default().0.insert(z.hook.length as i64);
    }
    for s in classes.of_kind(HookKind::NonBar) {
        let (k, l) = (s.hook.hand_runner, s.hook.foot_runner);
        // NB_{j*→i*} is compared with B_{i→j}
        let source = (d.conjugate_runner(l), d.conjugate_runner(k));
        by_class.entry(source).or_default().1.insert(s.hook.length as i64);
    }
    ensure_eq(classes.of_kind(HookKind::NonBar).count(), images.len())?;
    for (class, (b, nb)) in by_class {
        ensure(b == nb, format!("B_{class:?} = {b}"), format!("NB image {nb}"))?;
    }
    Ok(())
}

/// Modulus-free checks on an ordinary partition.
pub fn check_partition(q: &Partition) -> Vec<Finding> {
    let mut rec = Recorder::new(q.parts(), None);
    rec.check(p::FROBENIUS_ROUNDTRIP, || {
        ensure_eq(q.clone(), Partition::from_frobenius(&q.frobenius()))
    });
    rec.check(p::CONJUGATE_INVOLUTION, || {
        ensure_eq(q.clone(), q.conjugate().conjugate())
    });
    rec.check(p::BETA_SET_ROUNDTRIP, || {
        for t in q.len()..q.len() + 4 {
            let x = q.beta_set(t)?;
            ensure_eq(q.clone(), x.to_partition())?;
            ensure_eq(q.beta_set(t + 1)?, x.shifted())?;
        }
        Ok(())
    });
    rec.out
}

/// Every modulus-dependent check on an ordinary partition.
pub fn check_partition_mod(q: &Partition, d: Modulus) -> Vec<Finding> {
    let mut rec = Recorder::new(q.parts(), Some(d));
    let core = abacus::d_core(q, d);
    let quotient = abacus::d_quotient(q, d);
    let qp = abacus::quotient_partition(q, d);

    rec.check(p::HOOK_DECOMPOSITION, || {
        let r = abacus::verify_hook_decomposition(q, d);
        ensure(
            r.holds,
            format!("H = {}", r.hook_lengths),
            format!(
                "core {} ∪ modified {} (failing pairs {:?}, zeros {})",
                r.core_hook_lengths, r.modified_lengths, r.failing_pairs, r.zero_modified
            ),
        )
    });

    rec.check(p::HOOK_LABELS, || {
        for z in abacus::hooks(q, d) {
            ensure_eq(Some(z.length), q.hook_length(z.row, z.col))?;
            ensure_eq(z.hand_runner, z.hand_residue(d))?;
            ensure_eq((z.foot_runner + 1) % d.get(), z.foot_residue(d))?;
            ensure_eq(
                d.residue(z.length as i64),
                d.residue(z.hand_runner as i64 - z.foot_runner as i64),
            )?;
        }
        Ok(())
    });

    rec.check(p::CORE_QUOTIENT_WEIGHT, || {
        let w: usize = quotient.iter().map(Partition::size).sum();
        ensure_eq(q.size(), core.size() + d.get() * w)?;
        ensure_eq(qp.size(), d.get() * w)
    });

    rec.check(p::CORE_IS_CORE, || {
        ensure_eq(core.clone(), abacus::d_core(&core, d))?;
        let divisible: Vec<usize> = abacus::hooks(&core, d)
            .into_iter()
            .map(|z| z.length)
            .filter(|h| h % d.get() == 0)
            .collect();
        ensure_eq(Vec::new(), divisible)
    });

    rec.check(p::QUOTIENT_PARTITION_CORE, || {
        ensure_eq(Partition::empty(), abacus::d_core(&qp, d))?;
        ensure_eq(quotient.clone(), abacus::d_quotient(&qp, d))?;
        ensure_eq(qp.clone(), abacus::quotient_partition(&qp, d))?;
        let k = quotient.iter().map(Partition::len).max().unwrap_or(0).max(1);
        ensure_eq(
            qp.clone(),
            abacus::partition_from_quotient_with_rows(&quotient, d, k + 1)?,
        )
    });

    rec.check(p::RUNNER_SHIFT, || {
        let a = Abacus::minimal(q, d);
        let b = Abacus::with_rows(q, d, a.bead_count() / d.get() + 1)?;
        let (xa, xb) = (a.runner_counts(), b.runner_counts());
        for i in 0..d.get() {
            ensure_eq(xa.get(i) + 1, xb.get(i))?;
        }
        ensure_eq(q.clone(), b.partition())
    });

    rec.out
}

/// The degree square sum for size `n`.
pub fn check_square_sum(n: usize) -> Vec<Finding> {
    let subject = [n];
    let mut rec = Recorder::new(&subject, None);
    rec.check(p::DEGREE_SQUARE_SUM, || {
        let s = degrees::spin_degree_sum_check::<Degree>(n)?;
        ensure(s.holds(), &s.factorial, &s.sum)
    });
    rec.out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Bar partitions of every size `1..=max_n`.
    pub max_n: usize,
    /// Ordinary partitions of every size `1..=partitions_max_n`.
    pub partitions_max_n: usize,
    /// Degree square sums for `1..=square_sum_max_n`.
    pub square_sum_max_n: usize,
    pub moduli: Vec<Modulus>,
    pub jobs: usize,
}

impl VerifyConfig {
    pub fn new(max_n: usize, moduli: Vec<Modulus>) -> Self {
        Self {
            max_n,
            partitions_max_n: max_n,
            square_sum_max_n: max_n,
            moduli,
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub d: Option<usize>,
    /// Parts of the partition checked, or `[n]` for per-size properties.
    pub partition: Vec<usize>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub partitions_max_n: usize,
    pub square_sum_max_n: usize,
    pub d: Vec<usize>,
    pub jobs: usize,
    pub checks: usize,
    pub properties: BTreeMap<String, Tally>,
    pub counterexamples: Vec<Counterexample>,
    pub verdict: bool,
    pub duration_ms: u128,
}

impl VerifyReport {
    /// Counts per property and the counterexamples, without timing.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let ds: Vec<String> = self.d.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "bar partitions n <= {}, partitions n <= {}, square sums n <= {}, d = {}",
            self.max_n,
            self.partitions_max_n,
            self.square_sum_max_n,
            ds.join(",")
        );
        let width = self.properties.keys().map(String::len).max().unwrap_or(0);
        for (name, t) in &self.properties {
            let _ = writeln!(
                out,
                "{name:<width$}  {:>7} passed  {:>5} failed",
                t.passed, t.failed
            );
        }
        for c in &self.counterexamples {
            let d = c.d.map_or_else(|| "-".to_string(), |d| d.to_string());
            let _ = writeln!(
                out,
                "counterexample {} d={} ({}): expected {}, got {}",
                c.property,
                d,
                crate::partitions::join(&c.partition),
                c.expected,
                c.actual
            );
        }
        let _ = writeln!(
            out,
            "{} checks, {} counterexamples: {}",
            self.checks,
            self.counterexamples.len(),
            if self.verdict { "pass" } else { "FAIL" }
        );
        out
    }
}

enum Job {
    Bar(BarPartition),
    BarMod(BarPartition, Modulus),
    Part(Partition),
    PartMod(Partition, Modulus),
    SquareSum(usize),
}

impl Job {
    fn run(&self) -> Vec<Finding> {
        match self {
            Job::Bar(l) => check_bar_partition(l),
            Job::BarMod(l, d) => check_bar_partition_mod(l, *d),
            Job::Part(q) => check_partition(q),
            Job::PartMod(q, d) => check_partition_mod(q, *d),
            Job::SquareSum(n) => check_square_sum(*n),
        }
    }
}

/// Folds findings into a report.
pub fn summarize(
    config: &VerifyConfig,
    findings: impl IntoIterator<Item = Finding>,
    duration_ms: u128,
) -> VerifyReport {
    let mut properties: BTreeMap<String, Tally> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut checks = 0;
    for f in findings {
        checks += 1;
        let tally = properties.entry(f.property.to_string()).or_default();
        match f.outcome {
            Ok(()) => tally.passed += 1,
            Err(m) => {
                tally.failed += 1;
                counterexamples.push(Counterexample {
                    property: f.property.to_string(),
                    d: f.d,
                    partition: f.subject,
                    expected: m.expected,
                    actual: m.actual,
                });
            }
        }
    }
    counterexamples.sort();
    VerifyReport {
        max_n: config.max_n,
        partitions_max_n: config.partitions_max_n,
        square_sum_max_n: config.square_sum_max_n,
        d: config.moduli.iter().map(|d| d.get()).collect(),
        jobs: config.jobs,
        checks,
        verdict: counterexamples.is_empty(),
        properties,
        counterexamples,
        duration_ms,
    }
}

/// Runs every check over the configured ranges on `config.jobs` threads.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport, rayon::ThreadPoolBuildError> {
    let start = Instant::now();
    let mut jobs = Vec::new();
    for n in 1..=config.max_n {
        for l in enumerate_bar_partitions(n) {
            for &d in &config.moduli {
                jobs.push(Job::BarMod(l.clone(), d));
            }
            jobs.push(Job::Bar(l));
        }
    }
    for n in 1..=config.partitions_max_n {
        for q in enumerate_partitions(n) {
            for &d in &config.moduli {
                jobs.push(Job::PartMod(q.clone(), d));
            }
            jobs.push(Job::Part(q));
        }
    }
    jobs.extend((1..=config.square_sum_max_n).map(Job::SquareSum));

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()?;
    let findings: Vec<Finding> = pool.install(|| jobs.par_iter().flat_map_iter(Job::run).collect());
    Ok(summarize(config, findings, start.elapsed().as_millis()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let config = VerifyConfig::new(8, vec![Modulus::THREE, Modulus::new(5).unwrap()]);
        let report = run(&config).unwrap();
        assert!(report.verdict, "{}", report.summary());
        assert!(report.properties.len() >= 30);
        assert!(report.summary().ends_with("pass\n"));
    }

    #[test]
    fn single_partition_run() {
        let config = VerifyConfig::new(1, vec![Modulus::THREE]);
        let report = run(&config).unwrap();
        assert!(report.verdict);
        assert_eq!(report.properties[p::BAR_DECOMPOSITION].passed, 1);
    }

    #[test]
    fn counterexamples_are_sorted_and_fail_the_verdict() {
        let config = VerifyConfig::new(2, vec![Modulus::THREE]);
        let bad = |parts: Vec<usize>| Finding {
            property: p::WEIGHT,
            subject: parts,
            d: Some(3),
            outcome: Err(Mismatch {
                expected: "a".into(),
                actual: "b".into(),
            }),
        };
        let report = summarize(&config, vec![bad(vec![2]), bad(vec![1])], 0);
        assert!(!report.verdict);
        assert_eq!(report.counterexamples[0].partition, vec![1]);
        assert_eq!(report.properties[p::WEIGHT].failed, 2);
    }
}
