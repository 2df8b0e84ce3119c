//! Definitional consistency of the tableau property catalog.

use hecke_traces::network::network_of;
use hecke_traces::partition::IntPartition;
use hecke_traces::perm::Permutation;
use hecke_traces::tableau::{enumerate, has_property, TabProperty};

#[test]
fn standard_means_column_strict_and_row_semistrict() {
    for n in 1..=5 {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w).unwrap();
            let e = Permutation::identity(n);
            for shape in IntPartition::all(n) {
                let std = enumerate(&net, &shape, &[TabProperty::Standard], Some(&e)).unwrap();
                let both = enumerate(
                    &net,
                    &shape,
                    &[TabProperty::ColumnStrict, TabProperty::RowSemistrict],
                    Some(&e),
                )
                .unwrap();
                assert_eq!(std, both, "definitions split at w={w} shape={shape}");
            }
        }
    }
}

#[test]
fn record_free_rows_have_no_dominating_prefix() {
    for w in ["3421", "23154", "41235"] {
        let w = Permutation::parse(w).unwrap();
        let n = w.n();
        let net = network_of(&w).unwrap();
        let e = Permutation::identity(n);
        for shape in IntPartition::all(n) {
            for t in enumerate(
                &net,
                &shape,
                &[TabProperty::RecordFree, TabProperty::RowSemistrict],
                Some(&e),
            )
            .unwrap()
            {
                // re-derive the predicate from scratch: every non-leftmost
                // cell has an earlier cell it does not dominate in the poset
                for row in &t.rows {
                    for p in 1..row.len() {
                        let dominated_all = (0..p).all(|q| {
                            row[q].src < row[p].src && !net.paths_intersect(row[q].path, row[p].path)
                        });
                        assert!(!dominated_all, "nontrivial record survived at {w}");
                    }
                }
                assert!(has_property(&net, &t, TabProperty::RecordFree));
            }
        }
    }
}

#[test]
fn anchored_rows_lead_with_least_source() {
    let w = Permutation::parse("3421").unwrap();
    let net = network_of(&w).unwrap();
    for shape in IntPartition::all(4) {
        for t in enumerate(
            &net,
            &shape,
            &[TabProperty::Cylindrical, TabProperty::LeftAnchored],
            None,
        )
        .unwrap()
        {
            for row in &t.rows {
                let min = row.iter().map(|c| c.src).min().unwrap();
                assert_eq!(row[0].src, min);
            }
        }
    }
}
