//! Lattice paths in an `a × b` rectangle and rational Dyck paths.
//!
//! A path from `(0, 0)` to `(b, a)` takes `b` east steps `E` and `a` north
//! steps `N`. It is stored as the abscissas `x_1 ≤ ... ≤ x_a` of its north
//! steps. A path lies below another when it turns north later at every
//! height, so `λ ≤ μ` iff `x_k(λ) ≥ x_k(μ)` for all `k`. For example in the
//! `2 × 2` square, `EENN` (abscissas `2, 2`) is the minimum and `NNEE`
//! (abscissas `0, 0`) the maximum.

use std::fmt;

use num_integer::Integer as _;

use crate::algebra::{derived_invariant_report, incidence_category, InvariantReport};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest number of lattice paths enumerated by default.
pub const DEFAULT_PATH_BOUND: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    a: usize,
    b: usize,
    verticals: Vec<usize>,
}

impl LatticePath {
    pub fn new(a: usize, b: usize, verticals: Vec<usize>) -> Result<Self> {
        let ok = verticals.len() == a
            && verticals.windows(2).all(|w| w[0] <= w[1])
            && verticals.iter().all(|&x| x <= b);
        if !ok {
            return Err(Error::Parse { line: 0, msg: format!("{verticals:?} is not a lattice path in {a}x{b}") });
        }
        Ok(LatticePath { a, b, verticals })
    }

    /// Parses a word over `{E, N}`.
    pub fn from_word(word: &str) -> Result<Self> {
        let (mut x, mut verticals) = (0, Vec::new());
        for ch in word.chars() {
            match ch {
                'E' => x += 1,
                'N' => verticals.push(x),
                _ => return Err(Error::Parse { line: 0, msg: format!("unexpected step {ch:?}") }),
            }
        }
        Ok(LatticePath { a: verticals.len(), b: x, verticals })
    }

    pub fn word(&self) -> String {
        let mut s = String::with_capacity(self.a + self.b);
        let mut x = 0;
        for &v in &self.verticals {
            while x < v {
                s.push('E');
                x += 1;
            }
            s.push('N');
        }
        while x < self.b {
            s.push('E');
            x += 1;
        }
        s
    }

    pub fn verticals(&self) -> &[usize] {
        &self.verticals
    }

    /// Whether `self` lies weakly below `other`.
    pub fn lies_below(&self, other: &LatticePath) -> bool {
        self.verticals.iter().zip(&other.verticals).all(|(x, y)| x >= y)
    }

    /// Whether the path stays weakly above the diagonal from `(0, 0)` to `(b, a)`.
    ///
    /// Only the corner `(x_k, k - 1)` before each north step can dip below,
    /// and it is above iff `b (k - 1) ≥ a x_k`.
    pub fn is_dyck(&self) -> bool {
        self.verticals.iter().enumerate().all(|(k, &x)| self.b * k >= self.a * x)
    }

    /// Cycling: the first step moves to the end of the word.
    pub fn rotate(&self) -> LatticePath {
        let w = self.word();
        let rotated: String = w.chars().skip(1).chain(w.chars().take(1)).collect();
        LatticePath::from_word(&rotated).expect("rotation of a path")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All lattice paths in the `a × b` rectangle, ordered by abscissa tuple.
pub fn lattice_paths(a: usize, b: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(a);
    fn go(a: usize, b: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<LatticePath>) {
        if current.len() == a {
            out.push(LatticePath { a, b, verticals: current.clone() });
            return;
        }
        for x in from..=b {
            current.push(x);
            go(a, b, x, current, out);
            current.pop();
        }
    }
    go(a, b, 0, &mut current, &mut out);
    out
}

fn path_poset(paths: &[LatticePath]) -> Poset {
    let p = Poset::from_fn(paths.len(), |u, v| paths[u].lies_below(&paths[v])).expect("below is an order");
    p.with_labels(paths.iter().map(LatticePath::word).collect())
}

/// `L_{a,b}` with its paths.
pub fn lattice_paths_poset(a: usize, b: usize) -> Result<(Poset, Vec<LatticePath>)> {
    lattice_paths_poset_bounded(a, b, DEFAULT_PATH_BOUND)
}

pub fn lattice_paths_poset_bounded(a: usize, b: usize, bound: usize) -> Result<(Poset, Vec<LatticePath>)> {
    let count = binomial(a + b, b);
    if count > bound {
        return Err(Error::Size(format!("{count} lattice paths exceed the bound {bound}")));
    }
    let paths = lattice_paths(a, b);
    Ok((path_poset(&paths), paths))
}

fn check_coprime(a: usize, b: usize) -> Result<()> {
    if a.gcd(&b) != 1 {
        return Err(Error::Coprimality(a, b));
    }
    Ok(())
}

/// `Dyck_{a,b}`, the rational Dyck paths with the induced order.
pub fn dyck_paths_poset(a: usize, b: usize) -> Result<(Poset, Vec<LatticePath>)> {
    check_coprime(a, b)?;
    let (_, all) = lattice_paths_poset(a, b)?;
    let dyck: Vec<LatticePath> = all.into_iter().filter(LatticePath::is_dyck).collect();
    Ok((path_poset(&dyck), dyck))
}

/// Orbits of the cycling action, as indices into [`lattice_paths`]`(a, b)`.
pub fn cycling_orbits(a: usize, b: usize) -> Result<Vec<Vec<usize>>> {
    check_coprime(a, b)?;
    let (_, paths) = lattice_paths_poset(a, b)?;
    let mut seen = vec![false; paths.len()];
    let mut orbits = Vec::new();
    for start in 0..paths.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut p = paths[start].clone();
        loop {
            let i = paths.binary_search(&p).expect("rotation stays in the rectangle");
            if seen[i] {
                break;
            }
            seen[i] = true;
            orbit.push(i);
            p = p.rotate();
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// `(j, i)` for a path in a `2 × b` rectangle: `i` and `j` are the abscissas
/// of the first and second north steps.
///
/// Reading `{0, ..., b}` in decreasing order, `(j, i)` is the interval
/// `[j, i]`, and `λ ≤ μ` iff `j(λ) ≥ j(μ)` and `i(λ) ≥ i(μ)`.
pub fn interval_encoding_2xb(path: &LatticePath) -> (usize, usize) {
    assert_eq!(path.a, 2, "encoding is defined for two north steps");
    (path.verticals[1], path.verticals[0])
}

/// Derived invariants of `A_{a+b} × Dyck_{a,b}` (left) and `L_{a,b}` (right).
///
/// Equal Coxeter polynomials are evidence for a derived equivalence, not a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub a: usize,
    pub b: usize,
    pub invariants: InvariantReport,
}

impl ConjectureReport {
    pub fn equal(&self) -> bool {
        self.invariants.polynomials_equal()
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a, self.b);
        writeln!(f, "left: A_{} x Dyck_{{{a},{b}}}, right: L_{{{a},{b}}}", a + b)?;
        write!(f, "{}", self.invariants.human_text())?;
        for line in self.invariants.machine_lines() {
            writeln!(f, "{line}")?;
        }
        write!(f, "evidence only: the comparison cannot prove or refute a derived equivalence")
    }
}

pub fn conjecture_report(a: usize, b: usize) -> Result<ConjectureReport> {
    let (dyck, _) = dyck_paths_poset(a, b)?;
    let (lattice, _) = lattice_paths_poset(a, b)?;
    let product = Poset::chain(a + b).product(&dyck);
    let invariants = derived_invariant_report(&incidence_category(&product), &incidence_category(&lattice))?;
    Ok(ConjectureReport { a, b, invariants })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn words_roundtrip() {
        let p = LatticePath::from_word("ENEEN").unwrap();
        assert_eq!(p.verticals(), &[1, 3]);
        assert_eq!(p.word(), "ENEEN");
        assert_eq!(p.rotate().word(), "NEENE");
        assert!(LatticePath::from_word("NX").is_err());
    }

    #[test]
    fn square_orientation() {
        let low = LatticePath::from_word("EENN").unwrap();
        let high = LatticePath::from_word("NNEE").unwrap();
        assert!(low.lies_below(&high) && !high.lies_below(&low));
    }

    #[test]
    fn small_counts() {
        assert_eq!(lattice_paths_poset(2, 3).unwrap().0.size(), 10);
        let (l11, _) = lattice_paths_poset(1, 1).unwrap();
        assert!(is_isomorphic(&l11, &Poset::chain(2)).is_some());
        let (d23, paths) = dyck_paths_poset(2, 3).unwrap();
        assert_eq!(d23.size(), 2);
        assert!(is_isomorphic(&d23, &Poset::chain(2)).is_some());
        assert!(paths.iter().all(|p| p.word().starts_with('N')));
        assert_eq!(dyck_paths_poset(3, 4).unwrap().0.size(), 5);
        assert_eq!(dyck_paths_poset(2, 4), Err(Error::Coprimality(2, 4)));
    }

    #[test]
    fn size_bound() {
        assert!(matches!(lattice_paths_poset_bounded(5, 6, 100), Err(Error::Size(_))));
    }

    #[test]
    fn orbits_2_3() {
        let orbits = cycling_orbits(2, 3).unwrap();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len() == 5));
    }

    #[test]
    fn dyck_encodings() {
        for b in [3, 5, 7] {
            let (_, dyck) = dyck_paths_poset(2, b).unwrap();
            let mut codes: Vec<_> = dyck.iter().map(interval_encoding_2xb).collect();
            codes.sort_unstable();
            let expected: Vec<_> = (0..=(b - 1) / 2).map(|j| (j, 0)).collect();
            assert_eq!(codes, expected);
        }
        assert_eq!(interval_encoding_2xb(&LatticePath::from_word("NNEEE").unwrap()), (0, 0));
    }

    #[test]
    fn trivial_conjecture_case() {
        let r = conjecture_report(1, 1).unwrap();
        assert_eq!(r.invariants.rows[0].left, "2");
        assert!(r.equal());
    }
}
