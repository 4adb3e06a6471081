mod common;

use common::multicycle_chi_oracle;
use graphcert::bishop_rook::{canonical_bishop_coloring, cyan};
use graphcert::multicycle::{
    chromatic_index, derive, derive_with_edges, exact_coloring, regular_coloring, sigma_offset_periodic_at,
    verify_multicycle_coloring, Multicycle,
};
use proptest::prelude::*;

#[test]
fn derived_multicycle_counts_cyan_edges() {
    for m in (3..=9).step_by(2) {
        for n in (m..=31).step_by(2) {
            let (c, _) = canonical_bishop_coloring(m, n).unwrap();
            let cyan_edges = c.histogram().get(&cyan(m)).copied().unwrap_or(0);
            let d = derive_with_edges(m, n).unwrap();
            assert_eq!(d.multicycle.sigma(), cyan_edges, "({m}, {n})");
            assert_eq!(d.edges.len(), cyan_edges);
        }
    }
    assert_eq!(derive(5, 11).unwrap().mult(), &[3, 5, 3, 4, 4]);
}

#[test]
fn regular_closed_form() {
    for m in (3..=11).step_by(2) {
        let k = (m - 1) / 2;
        for a in 1..=8 {
            let mc = Multicycle::regular(m, a).unwrap();
            let c = regular_coloring(m, a).unwrap();
            assert!(verify_multicycle_coloring(&mc, &c).ok);
            assert_eq!(c.color_count(), 2 * a + a.div_ceil(k), "C_{{{m},{a}}}");
        }
    }
}

#[test]
fn sigma_offset_has_period() {
    for m in [5, 7] {
        for n in (m..m + 40).step_by(2) {
            assert!(sigma_offset_periodic_at(m, n).unwrap(), "({m}, {n})");
        }
    }
}

#[test]
fn exact_solver_refuses_below_the_index() {
    let mc = Multicycle::new(vec![0, 0, 0, 1, 2]).unwrap();
    assert!(exact_coloring(&mc, 2).is_none());
    assert!(exact_coloring(&mc, 3).is_some());
}

fn multiplicities() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![Just(3usize), Just(5), Just(7), Just(9), Just(11)]
        .prop_flat_map(|m| proptest::collection::vec(0usize..7, m))
        .prop_filter("oracle size", |v| v.iter().sum::<usize>() <= 36)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn chromatic_index_matches_oracle(mult in multiplicities()) {
        let mc = Multicycle::new(mult.clone()).unwrap();
        let ci = chromatic_index(&mc);
        prop_assert!(verify_multicycle_coloring(&mc, &ci.coloring).ok);
        prop_assert_eq!(ci.coloring.color_count(), ci.upper);
        prop_assert!(ci.lower >= mc.lower_bound());
        prop_assert_eq!(ci.exact(), Some(multicycle_chi_oracle(&mult)));
    }
}
