//! Small worked instances used by tests, the CLI and the acceptance suite.

use crate::gamma::{degeneracy, ideal_map_from_triple, multichain_poset, IdealMap};
use crate::poset::{Poset, PosetMorphism};

fn labelled(p: Poset, names: &[&str]) -> Poset {
    p.with_labels(names.iter().map(|s| s.to_string()).collect())
}

/// `{1, 2, 3}` with `1 < 3` and `2 < 3`.
pub fn vee() -> Poset {
    labelled(Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap(), &["1", "2", "3"])
}

/// The chain `a < b < c < d`.
pub fn four_chain() -> Poset {
    labelled(Poset::chain(4), &["a", "b", "c", "d"])
}

/// `f : vee -> {i < j < k}` with `1, 2, 3 ↦ i, j, k`, and
/// `g : a < b < c < d -> {i < j < k}` with `a ↦ i`, `b ↦ j`, `c, d ↦ k`.
pub fn vee_over_chain_triple() -> (PosetMorphism, PosetMorphism) {
    let z = labelled(Poset::chain(3), &["i", "j", "k"]);
    let f = PosetMorphism::new(vee(), z.clone(), vec![0, 1, 2]).unwrap();
    let g = PosetMorphism::new(four_chain(), z, vec![0, 1, 2, 2]).unwrap();
    (f, g)
}

/// `F(a) = {1}`, `F(b) = {1, 2}`, `F(c) = F(d) = {1, 2, 3}`.
pub fn vee_over_chain() -> IdealMap {
    IdealMap::from_lists(vee(), four_chain(), &[vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 1, 2]])
        .unwrap()
}

/// `X` = 2-chains of `vee`, `Y = Z` = 3-chains, `f(i ≤ j) = (i ≤ i ≤ j)`, `g = id`.
pub fn two_chain_degeneracy_triple() -> (PosetMorphism, PosetMorphism) {
    let f = degeneracy(&vee(), 2, 0);
    let g = PosetMorphism::identity(&multichain_poset(&vee(), 3).0);
    (f, g)
}

pub fn two_chain_degeneracy() -> IdealMap {
    let (f, g) = two_chain_degeneracy_triple();
    ideal_map_from_triple(&f, &g).unwrap()
}
