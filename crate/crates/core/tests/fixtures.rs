use std::path::PathBuf;

use graded_core::oracle::{classify, Family};
use graded_core::poset::{canonical_form, contains, grading, ChainSumPattern, Grading, Poset};
use graded_core::seeds::{clone_vertex, is_primitive, is_seed, seed_of};

fn load(name: &str) -> Poset {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap().parse().unwrap()
}

#[test]
fn chain_and_side_path_is_not_graded() {
    let p = load("not_graded.poset");
    assert_eq!(grading(&p), Grading::NotGraded);
    let c = classify(&p);
    assert!(!c.contains(Family::WeaklyGraded));
}

#[test]
fn short_branch_is_weakly_graded() {
    let g = grading(&load("weakly_graded.poset"));
    assert!(matches!(g, Grading::Weak(_)));
    assert_eq!(g.ranked().unwrap().ranks(), &[0, 1, 1, 2]);
}

#[test]
fn two_chains_from_a_root_are_strongly_graded() {
    let g = grading(&load("two_chains_from_root.poset"));
    assert!(g.is_strong());
    assert_eq!(g.ranked().unwrap().ranks(), &[0, 1, 1, 2, 2]);
}

#[test]
fn graded_poset_containing_31() {
    let p = load("graded_with_31.poset");
    let g = grading(&p);
    assert!(g.is_strong());
    assert_eq!(g.ranked().unwrap().ranks(), &[0, 1, 1, 2, 2, 0]);
    assert!(contains(&p, &ChainSumPattern::three_plus_one()));
    assert!(!contains(&p, &ChainSumPattern::two_plus_two()));
    let c = classify(&p);
    assert!(c.contains(Family::GradedInterval));
    assert!(!c.contains(Family::Semiorder));
    let rp = g.ranked().unwrap();
    assert!(rp.avoids_22_local());
    assert!(!rp.avoids_31_local());
}

#[test]
fn skeleton_seeing_pattern() {
    let p = load("skeleton.poset");
    let g = grading(&p);
    let rp = g.ranked().unwrap();
    assert!(rp.is_strong());
    assert_eq!(rp.ranks(), &[0, 0, 1, 1, 1, 1, 2, 2, 2]);
    let names = ["a", "b", "i", "c", "d", "e", "f", "g", "h"];
    let all: Vec<&str> = (0..9).filter(|&v| rp.seeing(v).all()).map(|v| names[v]).collect();
    assert_eq!(all, vec!["a", "i", "c", "f"]);
    let down_only: Vec<&str> = (0..9)
        .filter(|&v| rp.seeing(v).down && !rp.seeing(v).up)
        .map(|v| names[v])
        .collect();
    assert_eq!(down_only, vec!["b", "d"]);
    let up_only: Vec<&str> = (0..9)
        .filter(|&v| rp.seeing(v).up && !rp.seeing(v).down)
        .map(|v| names[v])
        .collect();
    assert_eq!(up_only, vec!["e", "g", "h"]);
    assert!(rp.avoids_both_local());
    assert!(classify(&p).contains(Family::GradedSemiorder));
}

#[test]
fn n_shape_is_a_primitive_graded_interval_seed() {
    let p = load("n_shape.poset");
    assert!(is_seed(&p));
    assert!(is_primitive(&p));
    assert!(classify(&p).contains(Family::GradedInterval));
}

#[test]
fn two_plus_two_is_an_imprimitive_seed() {
    let p = load("two_plus_two.poset");
    assert_eq!(p, Poset::chain_sum(&[2, 2]));
    assert!(is_seed(&p));
    assert!(!is_primitive(&p));
}

#[test]
fn cloned_rows_declone_to_their_seed() {
    let seed = load("cloning_seed.poset");
    assert!(is_seed(&seed));
    let mut row = vec![seed.clone()];
    for _ in 0..3 {
        let next = clone_vertex(row.last().unwrap(), 1).unwrap();
        row.push(next);
    }
    for p in &row {
        let d = seed_of(p);
        assert_eq!(canonical_form(&d.seed), canonical_form(&seed));
        assert_eq!(d.multiplicity.iter().sum::<usize>(), p.len());
    }
    // the left neighbour of a sprout is not its seed unless it is the first
    assert_ne!(canonical_form(&seed_of(&row[2]).seed), canonical_form(&row[1]));
}
