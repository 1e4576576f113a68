//! Checks anchored to the bundled catalog of 12-vertex tournaments without
//! a perfect tiling by transitive 4-sets (`data/appendix.txt`).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tourtile::exec::{self, Parallelism};
use tourtile::fractional;
use tourtile::graph::{Tournament, VertexSet};
use tourtile::iso;
use tourtile::rational::int;
use tourtile::tiling;

fn catalog_lines() -> Vec<String> {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../data/appendix.txt"
    ))
    .expect("bundled catalog is readable");
    text.lines()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

#[test]
fn line_one_parses_to_an_untileable_tournament() {
    let lines = catalog_lines();
    let t = Tournament::from_upper_triangle(&lines[0], 12).unwrap();
    assert!(tiling::has_perfect_tiling(t.as_graph(), 4)
        .unwrap()
        .is_none());
}

#[test]
fn line_seventeen_round_trips() {
    let lines = catalog_lines();
    let t = Tournament::from_upper_triangle(&lines[16], 12).unwrap();
    assert_eq!(t.to_upper_triangle(), lines[16]);
}

#[test]
fn line_one_canonical_form_is_relabeling_invariant() {
    let lines = catalog_lines();
    let t = Tournament::from_upper_triangle(&lines[0], 12).unwrap();
    let base = iso::canonical_form(&t).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1717);
    for _ in 0..2 {
        let mut perm: Vec<usize> = (0..12).collect();
        perm.shuffle(&mut rng);
        assert_eq!(iso::canonical_form(&t.relabel(&perm)).unwrap(), base);
    }
}

#[test]
fn line_one_copy_census_matches_subset_oracle() {
    let lines = catalog_lines();
    let t = Tournament::from_upper_triangle(&lines[0], 12).unwrap();
    let listed = t.transitive_copies(4).len();
    let mut brute = 0usize;
    for subset in 0u64..1 << 12 {
        let s = VertexSet(subset);
        if s.len() == 4 && t.induces_transitive(s) {
            brute += 1;
        }
    }
    assert_eq!(listed, brute);
}

#[test]
fn line_one_maximum_tiling_is_two() {
    // Untileability caps the maximum at 2; the verified witness shows 2 is
    // reached.
    let lines = catalog_lines();
    let t = Tournament::from_upper_triangle(&lines[0], 12).unwrap();
    let (value, witness) = tiling::max_tiling(t.as_graph(), 4).unwrap();
    assert_eq!(value, 2);
    assert!(tiling::verify_tiling(t.as_graph(), &witness));
    assert_eq!(witness.parts.len(), 2);
}

#[test]
fn every_catalog_vertex_extends_to_at_least_three() {
    let lines = catalog_lines();
    assert_eq!(lines.len(), 43);
    let shortfalls: usize = exec::map(Parallelism::Auto, &lines, |line| {
        let t = Tournament::from_upper_triangle(line, 12).expect("catalog line parses");
        (0..12)
            .filter(|&v| {
                fractional::v_extendable_value(t.as_graph(), 4, v).expect("vertex in range")
                    < int(3)
            })
            .count()
    })
    .into_iter()
    .sum();
    assert_eq!(shortfalls, 0);
}
