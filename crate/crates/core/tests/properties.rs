use proptest::prelude::*;

use fintop::carrier::{subsets_iter, Family, PointSet};
use fintop::constructors::{metric_topology, MetricAxiom, MetricTable};
use fintop::document::{emit_space, parse_space};
use fintop::enumeration::all_topologies;
use fintop::space::discrete;
use fintop::Error;

/// Random positive weights closed under shortest paths: always a metric.
fn metric_tables() -> impl Strategy<Value = Vec<Vec<u64>>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(1u64..50, n * n).prop_map(move |w| {
            let mut d = vec![vec![0u64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        d[i][j] = w[i.min(j) * n + i.max(j)];
                    }
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                    }
                }
            }
            d
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn metric_topologies_are_discrete(d in metric_tables()) {
        let n = d.len();
        let m = MetricTable::new(d).unwrap();
        prop_assert_eq!(metric_topology(&m).unwrap(), discrete(n).unwrap());
    }

    #[test]
    fn asymmetric_tables_are_rejected(d in metric_tables(), bump in 1u64..5) {
        let n = d.len();
        prop_assume!(n >= 2);
        let mut d = d;
        d[0][1] += bump;
        match MetricTable::new(d) {
            Err(Error::InvalidMetric { axiom, .. }) => prop_assert_eq!(axiom, MetricAxiom::Symmetry),
            other => prop_assert!(false, "accepted: {:?}", other),
        }
    }

    #[test]
    fn family_union_and_intersection_bound_members(n in 0usize..=8, masks in prop::collection::vec(any::<u32>(), 1..6)) {
        let full = (1u32 << n) - 1;
        let fam = Family::from_bits(n, masks.iter().map(|m| m & full)).unwrap();
        let meet = fam.intersection().unwrap();
        for m in fam.iter() {
            prop_assert!(m.is_subset(fam.union()));
            prop_assert!(meet.is_subset(m));
        }
    }

    #[test]
    fn complement_is_an_involution(n in 0usize..=8, bits in any::<u32>()) {
        let a = PointSet::from_bits(n, bits & ((1u32 << n) - 1)).unwrap();
        prop_assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn documents_round_trip(index in 0usize..355, shuffle in any::<u64>()) {
        let all = all_topologies(4).unwrap();
        let s = &all[index];
        let text = emit_space(s);
        prop_assert_eq!(&parse_space(&text).unwrap(), s);
        // same document with members and points in a scrambled order
        let mut lists = s.opens().to_lists();
        let k = lists.len();
        lists.rotate_left((shuffle as usize) % k);
        for l in &mut lists {
            l.reverse();
        }
        let scrambled = serde_json::json!({ "opens": lists, "n": 4 }).to_string();
        prop_assert_eq!(emit_space(&parse_space(&scrambled).unwrap()), text);
    }
}

#[test]
fn subsets_iter_yields_distinct_power_set() {
    for n in 0..=10 {
        let v: Vec<u32> = subsets_iter(n).unwrap().map(PointSet::bits).collect();
        let distinct: std::collections::BTreeSet<u32> = v.iter().copied().collect();
        assert_eq!(v.len(), 1 << n);
        assert_eq!(distinct.len(), 1 << n);
    }
}
