mod common;

use std::collections::BTreeSet;

use dm_core::{
    count_table, enumerate_family, enumerate_involutions, involution_descent_table,
    validate_membership, EnumerationBound, MatrixFamilyKey,
};

fn bound() -> EnumerationBound {
    EnumerationBound::default()
}

#[test]
fn family_matches_exhaustive_grid_filter() {
    // every upper-triangle vector with entries 0..=n, then filtered
    for n in 1..=4u64 {
        for k in 1..=n as usize {
            for z in [false, true] {
                let key = MatrixFamilyKey::new(n as usize, k, z).unwrap();
                let got: BTreeSet<_> = enumerate_family(&key, bound())
                    .unwrap()
                    .map(|x| x.to_rows())
                    .collect();
                assert_eq!(
                    got,
                    common::brute_force_family(n, k, z),
                    "n={n} k={k} zero_diagonal={z}"
                );
            }
        }
    }
}

#[test]
fn family_matches_sum_bounded_recursion() {
    for n in 5..=7u64 {
        for k in 1..=n as usize {
            for z in [false, true] {
                let key = MatrixFamilyKey::new(n as usize, k, z).unwrap();
                let got: Vec<_> = enumerate_family(&key, bound()).unwrap().collect();
                assert!(got.iter().all(|x| validate_membership(x, &key)));
                let got: BTreeSet<_> = got.iter().map(|x| x.to_rows()).collect();
                assert_eq!(
                    got,
                    common::bounded_family(n, k, z),
                    "n={n} k={k} zero_diagonal={z}"
                );
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let key = MatrixFamilyKey::new(7, 4, false).unwrap();
    let a: Vec<_> = enumerate_family(&key, bound()).unwrap().collect();
    let b: Vec<_> = enumerate_family(&key, bound()).unwrap().collect();
    assert_eq!(a, b);
    let render = |v: &[dm_core::SymMatrix]| v.iter().map(|x| x.to_string()).collect::<String>();
    assert_eq!(render(&a), render(&b));
}

#[test]
fn table_edges() {
    for n in 1..=12 {
        let t = count_table(n, false, bound()).unwrap();
        assert_eq!(t[0], 1, "T({n},1)");
        let w = count_table(n, true, bound()).unwrap();
        assert_eq!(w[0], 0, "W({n},1)");
        if n % 2 == 1 {
            assert!(w.iter().all(|&c| c == 0));
        }
    }
}

#[test]
fn involutions_match_brute_force() {
    for n in 1..=8 {
        let got: Vec<Vec<usize>> = enumerate_involutions(n, bound())
            .unwrap()
            .map(|i| i.images().to_vec())
            .collect();
        assert_eq!(got, common::brute_force_involutions(n), "n={n}");
        assert_eq!(
            involution_descent_table(n, bound()).unwrap(),
            common::brute_force_descent_row(n)
        );
    }
}

#[test]
fn descent_rows_are_symmetric_and_unimodal() {
    for n in 1..=12 {
        let row = involution_descent_table(n, bound()).unwrap();
        assert!(row.iter().eq(row.iter().rev()), "n={n}: {row:?}");
        let peak = row.windows(2).take_while(|w| w[0] <= w[1]).count();
        assert!(
            row[peak..].windows(2).all(|w| w[0] >= w[1]),
            "n={n}: {row:?}"
        );
    }
}
