//! Exhaustive and random generators of small posets and ideal maps.

use rand::Rng;

use num_traits::FromPrimitive;

use crate::gamma::IdealMap;
use crate::iso::is_isomorphic;
use crate::linalg::Matrix;
use crate::poset::Poset;
use crate::rep::{cokernel, projective_map, projective_sum, Module};
use crate::Rational;

/// Edge probability of the random cover relation.
pub const EDGE_PROBABILITY: f64 = 0.3;
/// Probability that an element of `X` is drawn as a new generator of `F(y)`.
pub const GENERATOR_PROBABILITY: f64 = 0.3;

/// All posets on `n` elements, one per isomorphism class.
///
/// Every class has a representative whose index order is a linear
/// extension, so only relations `u < v` with `u < v` are enumerated.
pub fn posets_of_size(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "exhaustive enumeration is for tiny posets");
    let mut reps: Vec<Poset> = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[u * n + v] = true;
            }
        }
        let Ok(p) = Poset::from_relation(n, leq) else { continue };
        if !reps.iter().any(|q| is_isomorphic(q, &p).is_some()) {
            reps.push(p);
        }
    }
    reps
}

/// Isomorphism-class representatives of all posets with at most `n` elements.
pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(posets_of_size).collect()
}

/// Every monotone map `Y -> J(X)`.
pub fn all_ideal_maps(x: &Poset, y: &Poset) -> Vec<IdealMap> {
    let ideals = x.ideals().expect("desk-scale X").ideals;
    let order = y.linear_extension();
    let mut choice = vec![usize::MAX; y.size()];
    let mut out = Vec::new();
    assign(x, y, &ideals, &order, 0, &mut choice, &mut out);
    out
}

fn assign(
    x: &Poset,
    y: &Poset,
    ideals: &[Vec<bool>],
    order: &[usize],
    depth: usize,
    choice: &mut Vec<usize>,
    out: &mut Vec<IdealMap>,
) {
    let Some(&yi) = order.get(depth) else {
        let sets = choice.iter().map(|&c| ideals[c].clone()).collect();
        out.push(IdealMap::new(x.clone(), y.clone(), sets).expect("monotone by construction"));
        return;
    };
    for (c, ideal) in ideals.iter().enumerate() {
        let above_lower = order[..depth].iter().filter(|&&w| y.leq(w, yi)).all(|&w| {
            ideals[choice[w]].iter().zip(ideal).all(|(&a, &b)| !a || b)
        });
        if above_lower {
            choice[yi] = c;
            assign(x, y, ideals, order, depth + 1, choice, out);
        }
    }
    choice[yi] = usize::MAX;
}

/// Random poset: each pair `u < v` of indices is a cover with probability
/// [`EDGE_PROBABILITY`], followed by transitive closure.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Poset {
    let covers: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(EDGE_PROBABILITY))
        .collect();
    Poset::from_covers(n, &covers).expect("index-increasing covers are acyclic")
}

/// Random monotone ideal map, built bottom-up over a linear extension of `Y`:
/// `F(y)` is the union of `F(y')` over lower covers `y'` together with the
/// down-closure of a random subset of `X`.
pub fn random_ideal_map<R: Rng + ?Sized>(rng: &mut R, x: &Poset, y: &Poset) -> IdealMap {
    let mut sets = vec![vec![false; x.size()]; y.size()];
    for yi in y.linear_extension() {
        let generators: Vec<bool> = (0..x.size()).map(|_| rng.gen_bool(GENERATOR_PROBABILITY)).collect();
        let mut s = x.down_closure(&generators);
        for w in y.lower_covers(yi) {
            for (a, &b) in s.iter_mut().zip(&sets[w]) {
                *a |= b;
            }
        }
        sets[yi] = s;
    }
    IdealMap::new(x.clone(), y.clone(), sets).expect("monotone by construction")
}

/// A random `(X, Y, F)` with `1 ≤ |X| ≤ max_x` and `1 ≤ |Y| ≤ max_y`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, max_x: usize, max_y: usize) -> IdealMap {
    let nx = rng.gen_range(1..=max_x);
    let ny = rng.gen_range(1..=max_y);
    let x = random_poset(rng, nx);
    let y = random_poset(rng, ny);
    random_ideal_map(rng, &x, &y)
}

/// A random finitely presented module: the cokernel of a random map
/// `⊕ P_{s_j} -> ⊕ P_{t_k}` with at most `max_generators` generators on each
/// side and integer coefficients in `[-2, 2]`. Each relation generator `s_j`
/// is drawn above some target generator so that relations are rarely void.
pub fn random_module<R: Rng + ?Sized>(rng: &mut R, base: &Poset, max_generators: usize) -> Module<Rational> {
    if base.is_empty() {
        return Module::zero(base);
    }
    let n = rng.gen_range(0..=max_generators);
    let target: Vec<usize> = (0..n).map(|_| rng.gen_range(0..base.size())).collect();
    let n = if target.is_empty() { 0 } else { rng.gen_range(0..=max_generators) };
    let source: Vec<usize> = (0..n)
        .map(|_| {
            let above = base.up_set(target[rng.gen_range(0..target.len())]);
            above[rng.gen_range(0..above.len())]
        })
        .collect();
    let coeffs = Matrix::from_fn(target.len(), source.len(), |k, j| {
        if base.leq(target[k], source[j]) {
            Rational::from_i64(rng.gen_range(-2..=2)).unwrap()
        } else {
            Rational::from_i64(0).unwrap()
        }
    });
    let f = projective_map(base, &source, &target, &coeffs).expect("coefficients respect the order");
    cokernel(&projective_sum(base, &target), &f).0
}
