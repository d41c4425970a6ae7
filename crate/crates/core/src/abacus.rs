//! The d-runner abacus of a β-set, and the hooks, cores and quotients read off it.
//!
//! Position `p` sits on runner `[p]_d` at row `⌊p/d⌋`. Every abacus built here
//! has a multiple of `d` beads, so runner labels agree with the residue
//! labelling `[col - row]_d` of the Young diagram and runner counts of
//! different partitions can be compared.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multiset::IntMultiset;
use crate::partitions::{BetaSet, Partition};

/// An odd modulus `d ≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Modulus(usize);

impl Modulus {
    pub const THREE: Modulus = Modulus(3);

    pub fn new(d: usize) -> Result<Self> {
        if d < 3 || d.is_multiple_of(2) {
            return Err(Error::BadModulus(d));
        }
        Ok(Self(d))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// `[ℓ]_d`, the least non-negative representative.
    pub fn residue(self, l: i64) -> usize {
        l.rem_euclid(self.0 as i64) as usize
    }

    /// `i* = [d - i]_d`.
    pub fn conjugate_runner(self, i: usize) -> usize {
        (self.0 - i % self.0) % self.0
    }

    /// Number of components `μ_1, …` in a bar quotient, `(d - 1) / 2`.
    pub fn half(self) -> usize {
        (self.0 - 1) / 2
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<usize> for Modulus {
    type Error = Error;

    fn try_from(d: usize) -> Result<Self> {
        Modulus::new(d)
    }
}

/// `[ℓ]_d` with `d` validated on the spot.
pub fn residue(l: i64, d: usize) -> Result<usize> {
    Ok(Modulus::new(d)?.residue(l))
}

/// Bead counts `x_0, …, x_{d-1}` per runner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunnerCounts {
    d: Modulus,
    counts: Vec<usize>,
}

impl Serialize for RunnerCounts {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(serializer)
    }
}

impl RunnerCounts {
    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn get(&self, i: usize) -> usize {
        self.counts[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }

    /// `x_i - x_j`.
    pub fn difference(&self, i: usize, j: usize) -> i64 {
        self.counts[i] as i64 - self.counts[j] as i64
    }
}

impl fmt::Display for RunnerCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::partitions::join(&self.counts))
    }
}

/// A β-set laid out on `d` runners, with a multiple of `d` beads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus {
    d: Modulus,
    positions: BetaSet,
}

impl Abacus {
    pub fn new(d: Modulus, positions: BetaSet) -> Result<Self> {
        if positions.is_empty() || !positions.len().is_multiple_of(d.get()) {
            return Err(Error::NotNormalized {
                d: d.get(),
                beads: positions.len(),
            });
        }
        Ok(Self { d, positions })
    }

    /// The minimally normalized abacus of `p`: the least positive multiple
    /// of `d` beads that is at least the number of parts.
    pub fn minimal(p: &Partition, d: Modulus) -> Self {
        let k = p.len().div_ceil(d.get()).max(1);
        Self::with_rows(p, d, k).expect("k * d >= number of parts")
    }

    /// The abacus of `p` with `k * d` beads.
    pub fn with_rows(p: &Partition, d: Modulus, k: usize) -> Result<Self> {
        Self::new(d, p.beta_set(k * d.get())?)
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn positions(&self) -> &BetaSet {
        &self.positions
    }

    pub fn bead_count(&self) -> usize {
        self.positions.len()
    }

    pub fn runner(&self, pos: usize) -> usize {
        pos % self.d.get()
    }

    pub fn row(&self, pos: usize) -> usize {
        pos / self.d.get()
    }

    pub fn partition(&self) -> Partition {
        self.positions.to_partition()
    }

    pub fn runner_counts(&self) -> RunnerCounts {
        let mut counts = vec![0; self.d.get()];
        for pos in self.positions.iter() {
            counts[self.runner(pos)] += 1;
        }
        RunnerCounts { d: self.d, counts }
    }

    /// Rows occupied by beads on runner `i`, as a β-set.
    pub fn runner_beta_set(&self, i: usize) -> BetaSet {
        self.positions
            .iter()
            .filter(|&pos| self.runner(pos) == i)
            .map(|pos| self.row(pos))
            .collect()
    }

    /// Every bead pushed as far up its runner as it goes.
    pub fn pushed_up(&self) -> Abacus {
        let d = self.d.get();
        let counts = self.runner_counts();
        let positions = (0..d)
            .flat_map(|i| (0..counts.get(i)).map(move |row| row * d + i))
            .collect();
        Abacus {
            d: self.d,
            positions,
        }
    }

    /// The text rendering: a header of runner indices, then one line per row,
    /// `●` for a bead and `·` for a gap.
    pub fn render(&self, color: bool) -> String {
        let d = self.d.get();
        let width = (d - 1).to_string().len();
        let rows = self.positions.max().map_or(0, |m| m / d + 1);
        let mut out = String::new();
        let header: Vec<String> = (0..d).map(|i| format!("{i:>width$}")).collect();
        out.push_str(&header.join(" "));
        out.push('\n');
        for row in 0..rows {
            let cells: Vec<String> = (0..d)
                .map(|i| {
                    let glyph = if self.positions.contains(row * d + i) {
                        if color {
                            "\x1b[1;36m●\x1b[0m"
                        } else {
                            "●"
                        }
                    } else {
                        "·"
                    };
                    format!("{}{glyph}", " ".repeat(width - 1))
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// A hook, seen both as a bead/gap pair on the abacus and as a cell of the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hook {
    /// Bead position `a ∈ X`.
    pub bead: usize,
    /// Gap position `b ∉ X`, `b < a`.
    pub gap: usize,
    /// `h = a - b`.
    pub length: usize,
    /// 1-based corner row.
    pub row: usize,
    /// 1-based corner column.
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    /// Runner of the bead, `i = [a]_d`; also the residue of the hand node.
    pub hand_runner: usize,
    /// Runner of the gap, `j = [b]_d`; the foot node has residue `[j + 1]_d`.
    pub foot_runner: usize,
}

impl Hook {
    /// Residue label `[col - row]_d` of the node at the end of the arm.
    pub fn hand_residue(&self, d: Modulus) -> usize {
        d.residue((self.col + self.arm) as i64 - self.row as i64)
    }

    /// Residue label of the node at the bottom of the leg.
    pub fn foot_residue(&self, d: Modulus) -> usize {
        d.residue(self.col as i64 - (self.row + self.leg) as i64)
    }

    /// Unordered runner pair `{i, j}` with `i ≤ j`.
    pub fn runner_pair(&self) -> (usize, usize) {
        let (i, j) = (self.hand_runner, self.foot_runner);
        (i.min(j), i.max(j))
    }
}

/// All hooks of `p`, via its minimally normalized abacus.
pub fn hooks(p: &Partition, d: Modulus) -> Vec<Hook> {
    hooks_on(&Abacus::minimal(p, d), p)
}

fn hooks_on(abacus: &Abacus, p: &Partition) -> Vec<Hook> {
    let beads: Vec<usize> = abacus.positions().iter().collect();
    let t = beads.len();
    let top = beads.last().map_or(0, |&m| m + 1);
    let mut member = vec![false; top];
    for &a in &beads {
        member[a] = true;
    }
    // below[v] = #{x ∈ X : x < v}
    let mut below = vec![0usize; top + 1];
    for v in 0..top {
        below[v + 1] = below[v] + usize::from(member[v]);
    }
    let mut out = Vec::with_capacity(p.size());
    for (k, &a) in beads.iter().enumerate() {
        let row = t - k;
        let part = p.part(row - 1);
        for b in (0..a).filter(|&b| !member[b]) {
            let length = a - b;
            let leg = k - below[b + 1];
            let arm = length - 1 - leg;
            out.push(Hook {
                bead: a,
                gap: b,
                length,
                row,
                col: part - arm,
                arm,
                leg,
                hand_runner: abacus.runner(a),
                foot_runner: abacus.runner(b),
            });
        }
    }
    out
}

/// The d-core: beads pushed up on their runners.
pub fn d_core(p: &Partition, d: Modulus) -> Partition {
    Abacus::minimal(p, d).pushed_up().partition()
}

/// The d-quotient, component `i` read off runner `i`.
pub fn d_quotient(p: &Partition, d: Modulus) -> Vec<Partition> {
    let abacus = Abacus::minimal(p, d);
    (0..d.get())
        .map(|i| abacus.runner_beta_set(i).to_partition())
        .collect()
}

/// The unique partition with empty d-core and the given d-quotient.
///
/// Uses `k` beads on every runner, `k` the largest number of parts of a
/// component (at least 1).
pub fn partition_from_quotient(quotient: &[Partition], d: Modulus) -> Result<Partition> {
    let k = quotient.iter().map(Partition::len).max().unwrap_or(0).max(1);
    partition_from_quotient_with_rows(quotient, d, k)
}

/// As [`partition_from_quotient`], with an explicit bead count per runner.
pub fn partition_from_quotient_with_rows(
    quotient: &[Partition],
    d: Modulus,
    k: usize,
) -> Result<Partition> {
    if quotient.len() != d.get() {
        return Err(Error::QuotientArity {
            expected: d.get(),
            got: quotient.len(),
        });
    }
    let mut positions = Vec::with_capacity(k * d.get());
    for (i, comp) in quotient.iter().enumerate() {
        positions.extend(comp.beta_set(k)?.iter().map(|row| row * d.get() + i));
    }
    Ok(BetaSet::new(positions).to_partition())
}

/// The d-quotient partition of `p`: empty d-core, same d-quotient.
pub fn quotient_partition(p: &Partition, d: Modulus) -> Partition {
    partition_from_quotient(&d_quotient(p, d), d).expect("quotient has d components")
}

/// `h̄(z) = h(z) + (x_i - x_j) d` for `z` on runner pair `i → j`.
pub fn modified_hook_length(z: &Hook, x: &RunnerCounts) -> i64 {
    z.length as i64 + x.difference(z.hand_runner, z.foot_runner) * x.modulus().get() as i64
}

/// Outcome of checking `H(p) = H(p_(d)) ∪ abs(H̄(q_d(p)))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookDecompositionReport {
    pub hook_lengths: IntMultiset,
    pub core_hook_lengths: IntMultiset,
    pub modified_lengths: IntMultiset,
    /// Runner pairs `{i, j}` on which the refined identity fails.
    pub failing_pairs: Vec<(usize, usize)>,
    /// Hooks of the quotient partition whose modified length is zero.
    pub zero_modified: usize,
    pub holds: bool,
}

/// Checks the hook-length decomposition of `p` against its d-core and the
/// modified hook lengths of its d-quotient partition, also one runner pair
/// `{i, j}` at a time. Runner counts come from `p`'s minimally normalized abacus.
pub fn verify_hook_decomposition(p: &Partition, d: Modulus) -> HookDecompositionReport {
    let x = Abacus::minimal(p, d).runner_counts();
    let core = d_core(p, d);
    let quotient = quotient_partition(p, d);

    let own = hooks(p, d);
    let core_hooks = hooks(&core, d);
    let modified: Vec<(Hook, i64)> = hooks(&quotient, d)
        .into_iter()
        .map(|z| (z, modified_hook_length(&z, &x).abs()))
        .collect();

    let hook_lengths: IntMultiset = own.iter().map(|z| z.length as i64).collect();
    let core_hook_lengths: IntMultiset = core_hooks.iter().map(|z| z.length as i64).collect();
    let modified_lengths: IntMultiset = modified.iter().map(|&(_, h)| h).collect();
    let zero_modified = modified.iter().filter(|&&(_, h)| h == 0).count();

    let n = d.get();
    let mut failing_pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            let pair = (i, j);
            let lhs: IntMultiset = own
                .iter()
                .filter(|z| z.runner_pair() == pair)
                .map(|z| z.length as i64)
                .collect();
            let core_side: IntMultiset = core_hooks
                .iter()
                .filter(|z| z.runner_pair() == pair)
                .map(|z| z.length as i64)
                .collect();
            let quotient_side: IntMultiset = modified
                .iter()
                .filter(|(z, _)| z.runner_pair() == pair)
                .map(|&(_, h)| h)
                .collect();
            if lhs != core_side.union(&quotient_side) {
                failing_pairs.push(pair);
            }
        }
    }
    let holds = zero_modified == 0
        && failing_pairs.is_empty()
        && hook_lengths == core_hook_lengths.union(&modified_lengths);
    HookDecompositionReport {
        hook_lengths,
        core_hook_lengths,
        modified_lengths,
        failing_pairs,
        zero_modified,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, BarPartition};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn m(d: usize) -> Modulus {
        Modulus::new(d).unwrap()
    }

    fn d7532() -> Partition {
        BarPartition::new(vec![7, 5, 3, 2]).unwrap().double()
    }

    fn d13_10_4() -> Partition {
        BarPartition::new(vec![13, 10, 4]).unwrap().double()
    }

    // oracle: hook lengths straight from the diagram
    fn diagram_hooks(q: &Partition) -> IntMultiset {
        q.cells()
            .map(|(r, c)| q.hook_length(r, c).unwrap() as i64)
            .collect()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(16, 3), Ok(1));
        assert_eq!(residue(-1, 3), Ok(2));
        assert_eq!(residue(0, 5), Ok(0));
        assert_eq!(residue(4, 4), Err(Error::BadModulus(4)));
        assert_eq!(residue(4, 1), Err(Error::BadModulus(1)));
        assert_eq!(m(5).conjugate_runner(0), 0);
        assert_eq!(m(5).conjugate_runner(2), 3);
    }

    #[test]
    fn abacus_examples() {
        let a = Abacus::minimal(&d7532(), m(3));
        assert_eq!(a.positions(), &BetaSet::new([0, 1, 3, 5, 8, 11, 12, 14, 16]));
        assert_eq!(a.runner_counts().as_slice(), &[3, 2, 4]);

        let a = Abacus::minimal(&d13_10_4(), m(3));
        assert_eq!(
            a.positions(),
            &BetaSet::new([0, 1, 3, 4, 6, 7, 8, 9, 10, 12, 13, 14, 19, 25, 28])
        );
        assert_eq!(a.runner_counts().as_slice(), &[5, 8, 2]);

        let a = Abacus::minimal(&Partition::empty(), m(3));
        assert_eq!(a.positions(), &BetaSet::new([0, 1, 2]));
        assert_eq!(a.runner_counts().as_slice(), &[1, 1, 1]);

        assert!(Abacus::new(m(3), BetaSet::new([0, 1])).is_err());
    }

    #[test]
    fn hooks_examples() {
        let hs = hooks(&p(&[3, 1]), m(3));
        assert_eq!(hs.len(), 4);
        let lengths: IntMultiset = hs.iter().map(|z| z.length as i64).collect();
        assert_eq!(lengths, [4, 2, 1, 1].into_iter().collect());

        let hs = hooks(&p(&[1]), m(3));
        assert_eq!(hs.len(), 1);
        assert_eq!((hs[0].length, hs[0].row, hs[0].col), (1, 1, 1));

        let hs = hooks(&d7532(), m(3));
        let z = hs.iter().find(|z| z.bead == 16 && z.gap == 9).unwrap();
        assert_eq!((z.length, z.row, z.col), (7, 1, 5));
        let z = hs.iter().find(|z| z.bead == 14 && z.gap == 7).unwrap();
        assert_eq!((z.length, z.row, z.col), (7, 2, 4));
    }

    #[test]
    fn hooks_match_diagram_and_labels() {
        for n in 0..=12 {
            for q in enumerate_partitions(n) {
                for d in [3, 5, 7] {
                    let d = m(d);
                    let hs = hooks(&q, d);
                    assert_eq!(hs.len(), q.size());
                    let lengths: IntMultiset = hs.iter().map(|z| z.length as i64).collect();
                    assert_eq!(lengths, diagram_hooks(&q));
                    for z in &hs {
                        assert_eq!(q.hook_length(z.row, z.col), Some(z.length));
                        assert_eq!(z.hand_residue(d), z.hand_runner);
                        assert_eq!(z.foot_residue(d), (z.foot_runner + 1) % d.get());
                        assert_eq!(
                            d.residue(z.length as i64),
                            d.residue(z.hand_runner as i64 - z.foot_runner as i64)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn core_examples() {
        assert_eq!(d_core(&d7532(), m(3)), p(&[3, 1]));
        assert_eq!(d_core(&p(&[3, 1]), m(3)), p(&[3, 1]));
        assert_eq!(d_core(&Partition::empty(), m(5)), Partition::empty());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(
            d_quotient(&d7532(), m(3)),
            vec![p(&[2]), p(&[4]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(d_quotient(&Partition::empty(), m(5)), vec![Partition::empty(); 5]);

        let q = d_quotient(&d13_10_4(), m(3));
        assert!(q[0].undouble().is_ok());
        assert_eq!(q[2], q[1].conjugate());
    }

    #[test]
    fn quotient_partition_examples() {
        let q = quotient_partition(&d7532(), m(3));
        assert_eq!(q, p(&[11, 5, 5, 3, 1, 1, 1, 1, 1, 1]));
        assert_eq!(quotient_partition(&q, m(3)), q);
        assert_eq!(quotient_partition(&p(&[3, 1]), m(3)), Partition::empty());

        let quotient = d_quotient(&d7532(), m(3));
        for k in 4..8 {
            assert_eq!(partition_from_quotient_with_rows(&quotient, m(3), k).unwrap(), q);
        }
        assert_eq!(
            partition_from_quotient(&quotient[..2], m(3)),
            Err(Error::QuotientArity { expected: 3, got: 2 })
        );
    }

    #[test]
    fn modified_hook_length_examples() {
        let d = m(3);
        let x = Abacus::minimal(&d13_10_4(), d).runner_counts();
        let hook = |length, i, j| Hook {
            bead: 0,
            gap: 0,
            length,
            row: 1,
            col: 1,
            arm: 0,
            leg: 0,
            hand_runner: i,
            foot_runner: j,
        };
        assert_eq!(modified_hook_length(&hook(4, 1, 0), &x), 13);
        assert_eq!(modified_hook_length(&hook(8, 2, 0), &x), -1);
        assert_eq!(modified_hook_length(&hook(5, 1, 1), &x), 5);
    }

    #[test]
    fn hook_decomposition_examples() {
        let d = m(3);
        let core = p(&[3, 1]);
        let r = verify_hook_decomposition(&core, d);
        assert!(r.holds);
        assert_eq!(r.core_hook_lengths, r.hook_lengths);
        assert!(r.modified_lengths.is_empty());
        assert!(verify_hook_decomposition(&d7532(), d).holds);
        assert!(verify_hook_decomposition(&d13_10_4(), d).holds);
    }

    #[test]
    fn runner_shift_law() {
        for q in enumerate_partitions(9) {
            let d = m(5);
            let a = Abacus::minimal(&q, d);
            let k = a.bead_count() / 5;
            let b = Abacus::with_rows(&q, d, k + 1).unwrap();
            let (xa, xb) = (a.runner_counts(), b.runner_counts());
            for i in 0..5 {
                assert_eq!(xb.get(i), xa.get(i) + 1);
            }
            assert_eq!(b.partition(), q);
        }
    }

    #[test]
    fn render_abacus() {
        let a = Abacus::minimal(&d7532(), m(3));
        let expected = "0 1 2\n● ● ·\n● · ●\n· · ●\n· · ●\n● · ●\n· ● ·\n";
        assert_eq!(a.render(false), expected);
    }
}
