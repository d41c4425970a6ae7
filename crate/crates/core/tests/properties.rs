use std::collections::BTreeSet;

use barlens::abacus;
use barlens::bars;
use barlens::degrees;
use barlens::verify;
use barlens::{BarPartition, Degree, Modulus, Partition};
use proptest::prelude::*;

fn bar_partition() -> impl Strategy<Value = BarPartition> {
    prop::collection::btree_set(1usize..=24, 0..=6).prop_map(|s: BTreeSet<usize>| {
        BarPartition::new(s.into_iter().rev().collect()).unwrap()
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=12, 0..=8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn modulus() -> impl Strategy<Value = Modulus> {
    prop::sample::select(vec![3usize, 5, 7, 9, 11, 13]).prop_map(|d| Modulus::new(d).unwrap())
}

fn assert_clean(findings: Vec<verify::Finding>) -> Result<(), TestCaseError> {
    for f in findings {
        if let Err(m) = f.outcome {
            return Err(TestCaseError::fail(format!(
                "{} on {:?} d={:?}: expected {}, got {}",
                f.property, f.subject, f.d, m.expected, m.actual
            )));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bar_checks_hold_beyond_exhaustive_range(l in bar_partition(), d in modulus()) {
        assert_clean(verify::check_bar_partition(&l))?;
        assert_clean(verify::check_bar_partition_mod(&l, d))?;
    }

    #[test]
    fn partition_checks_hold(p in partition(), d in modulus()) {
        assert_clean(verify::check_partition(&p))?;
        assert_clean(verify::check_partition_mod(&p, d))?;
    }

    #[test]
    fn quotient_partition_has_empty_core_and_same_quotient(l in bar_partition(), d in modulus()) {
        let qp = bars::dbar_quotient_partition(&l, d).unwrap();
        prop_assert_eq!(bars::dbar_core(&qp, d).unwrap(), BarPartition::empty());
        prop_assert_eq!(bars::dbar_quotient(&qp, d).unwrap(), bars::dbar_quotient(&l, d).unwrap());
    }

    #[test]
    fn doubled_core_is_core_of_double(l in bar_partition(), d in modulus()) {
        let core = bars::dbar_core(&l, d).unwrap();
        prop_assert_eq!(core.double(), abacus::d_core(&l.double(), d));
    }

    #[test]
    fn relative_degree_matches_bar_formula(l in bar_partition(), d in modulus()) {
        let direct = degrees::spin_degree::<Degree>(&l).unwrap();
        prop_assert_eq!(degrees::relative_spin_degree::<Degree>(&l, d).unwrap(), direct);
    }
}

#[test]
fn core_reconstructs_with_empty_quotient() {
    let d = Modulus::THREE;
    let core = BarPartition::new(vec![7, 4, 1]).unwrap();
    let q = bars::BarQuotient::empty(d);
    assert_eq!(bars::reconstruct(&core, &q, d).unwrap(), core);
}

#[test]
fn reconstruct_rejects_non_core() {
    let d = Modulus::THREE;
    let not_core = BarPartition::new(vec![3]).unwrap();
    let q = bars::BarQuotient::empty(d);
    assert!(matches!(
        bars::reconstruct(&not_core, &q, d),
        Err(barlens::Error::NotACore(..))
    ));
}
