mod common;

use common::{check_edge_coloring, keller_adjacent};
use graphcert::keller::{self, ColorKernel, FixtureTable, IndependenceSquare, KellerVertex};
use graphcert::kempe::SearchBudget;
use graphcert::verify::{verify_clique_cover, verify_vertex_coloring};
use proptest::prelude::*;

#[test]
fn choice_sets_agree_for_opposite_odd_colors() {
    for d in 2..=4 {
        let k = ColorKernel::new(d).unwrap();
        for &s in &k.s1 {
            assert_eq!(
                k.representatives(s),
                k.representatives(k.neg(s)),
                "d = {d}, s = {}",
                keller::digits(d, s)
            );
            assert_eq!(k.representatives(s).len(), keller::vertex_count(d) / 4);
        }
    }
}

#[test]
fn color_classes_are_perfect_matchings() {
    for d in 2..=4 {
        let (c, k) = keller::class1_coloring(d).unwrap();
        let n = keller::vertex_count(d);
        let hist = c.histogram();
        assert_eq!(hist.len(), k.s.len());
        assert!(hist.values().all(|&x| x == n / 2), "d = {d}");
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| keller_adjacent(d, u, v))
            .collect();
        assert_eq!(check_edge_coloring(n, &edges, c.iter()), Ok(keller::degree(d)));
    }
}

#[test]
fn squares_and_vertex_colorings_to_dimension_five() {
    for d in 2..=5 {
        let g = keller::build(d).unwrap();
        IndependenceSquare::new(d).unwrap().verify(&g).unwrap();
        let r = verify_vertex_coloring(&g, &keller::independence_square_coloring(d).unwrap());
        assert!(r.ok && r.colors_used == 1 << d, "d = {d}");
    }
}

#[test]
fn automorphisms_fix_rows_for_all_masks() {
    for d in 2..=4 {
        let g = keller::build(d).unwrap();
        let sq = IndependenceSquare::new(d).unwrap();
        for b in 0..1 << d {
            let bits = format!("{b:0d$b}");
            let p = keller::bitstring_automorphism(d, &bits).unwrap();
            assert!(keller::is_automorphism(&g, &p));
            for row in &sq.cells {
                let mut img: Vec<usize> = row.iter().map(|&v| p[v]).collect();
                let mut orig = row.clone();
                img.sort_unstable();
                orig.sort_unstable();
                assert_eq!(img, orig);
            }
        }
    }
}

#[test]
fn fixture_encodings() {
    // the first entry of each table, decoded two ways
    let t1 = keller::load_fixture(FixtureTable::G3Decomposition).unwrap();
    assert_eq!(t1.len(), 17);
    assert!(t1.iter().all(|c| c.len() == 64));
    let t7 = keller::load_fixture(FixtureTable::G5Cover).unwrap();
    let covered: usize = t7.iter().map(Vec::len).sum();
    assert_eq!(covered, 1024);
    for t in [FixtureTable::G3Cover, FixtureTable::G4Cover] {
        let sets = keller::load_fixture(t).unwrap();
        let first = KellerVertex::new(t.dimension(), sets[0][0]).unwrap();
        let token = t.text().split_whitespace().nth(1).unwrap();
        assert_eq!(first.to_string(), token);
    }
}

#[test]
fn g3_decomposition_by_search() {
    let d = keller::ham_decomposition_search(3, &SearchBudget::default())
        .unwrap()
        .unwrap();
    assert_eq!(d.cycles.len(), 17);
    assert!(d.matching.is_none());
}

#[test]
fn doubling_table_five_twice() {
    let t5 = keller::load_fixture(FixtureTable::G3Cover).unwrap();
    let c4 = keller::double_clique_cover(3, &t5).unwrap();
    let c5 = keller::double_clique_cover(4, &c4).unwrap();
    assert_eq!(c5.len(), 52);
    assert!(verify_clique_cover(&keller::build(5).unwrap(), &c5).ok);
}

#[test]
fn theta_bounds_against_shipped_covers() {
    for (t, size) in [
        (FixtureTable::G3Cover, 13),
        (FixtureTable::G4Cover, 22),
        (FixtureTable::G5Cover, 40),
    ] {
        let d = t.dimension();
        let lb = keller::theta_lower_bound(d, keller::known_omega(d).unwrap());
        assert!(lb <= size, "d = {d}: bound {lb}, cover {size}");
    }
}

#[test]
#[ignore = "long run: doubles the G_5 cover into an 80-clique cover of G_6"]
fn doubling_table_seven() {
    let t7 = keller::load_fixture(FixtureTable::G5Cover).unwrap();
    let c6 = keller::double_clique_cover(5, &t7).unwrap();
    assert_eq!(c6.len(), 80);
    assert!(verify_clique_cover(&keller::build(6).unwrap(), &c6).ok);
}

proptest! {
    #[test]
    fn automorphism_preserves_random_edges(b in 0usize..16, picks in proptest::collection::vec((0usize..256, 0usize..171), 100)) {
        let d = 4;
        let bits = format!("{b:04b}");
        let p = keller::bitstring_automorphism(d, &bits).unwrap();
        let k = ColorKernel::new(d).unwrap();
        for (u, i) in picks {
            let v = keller::add(d, u, k.s[i]);
            prop_assert!(keller_adjacent(d, u, v));
            prop_assert!(keller_adjacent(d, p[u], p[v]));
        }
    }

    #[test]
    fn adjacency_matches_definition(d in 2usize..=8, u in 0usize..65536, v in 0usize..65536) {
        let n = keller::vertex_count(d);
        let (u, v) = (u % n, v % n);
        prop_assert_eq!(keller::is_adjacent(d, u, v), keller_adjacent(d, u, v));
    }

    #[test]
    fn digit_strings_round_trip(d in 2usize..=8, v in 0usize..65536) {
        let v = v % keller::vertex_count(d);
        let s = keller::digits(d, v);
        prop_assert_eq!(KellerVertex::parse_digits(&s).unwrap().value, v);
        prop_assert_eq!(KellerVertex::parse_int(d, &v.to_string()).unwrap().value, v);
    }
}
