//! Interval posets of the orientations of a line.
//!
//! An orientation of the line `0 - 1 - ... - (n-1)` is a bitmask over its
//! `n - 1` edges: bit `k` set means `k < k+1`, unset means `k+1 < k`.

use std::fmt;

use crate::algebra::poset_coxeter_polynomial;
use crate::poset::Poset;
use crate::IntPolynomial;

pub fn orientation_poset(n: usize, mask: usize) -> Poset {
    let covers: Vec<(usize, usize)> =
        (0..n.saturating_sub(1)).map(|k| if mask >> k & 1 == 1 { (k, k + 1) } else { (k + 1, k) }).collect();
    Poset::from_covers(n, &covers).expect("a line has no cycles")
}

/// `0<1>2<3` style description of an orientation.
pub fn orientation_name(n: usize, mask: usize) -> String {
    let mut s = String::from("0");
    for k in 0..n.saturating_sub(1) {
        s.push(if mask >> k & 1 == 1 { '<' } else { '>' });
        s.push_str(&(k + 1).to_string());
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationReport {
    pub n: usize,
    /// `(name, |Int|, Coxeter polynomial of Int)` per orientation, by mask.
    pub entries: Vec<(String, usize, IntPolynomial)>,
    /// Index pairs into `entries` whose polynomials differ.
    pub differing: Vec<(usize, usize)>,
}

impl fmt::Display for OrientationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "orientations of the {}-element line: {}", self.n, self.entries.len())?;
        for (name, size, poly) in &self.entries {
            writeln!(f, "  {name}: |Int| = {size}, coxeter {poly}")?;
        }
        for &(i, j) in &self.differing {
            writeln!(f, "differing pair: {} vs {}", self.entries[i].0, self.entries[j].0)?;
        }
        if self.differing.is_empty() {
            write!(f, "no differing pair: all interval posets share one Coxeter polynomial")
        } else {
            write!(f, "{} differing pairs: those interval posets are not derived equivalent", self.differing.len())
        }
    }
}

/// Coxeter polynomials of `Int(P)` for all `2^{n-1}` orientations `P`.
pub fn orientations_int_search(n: usize) -> OrientationReport {
    let count = if n == 0 { 1 } else { 1usize << (n - 1) };
    let entries: Vec<(String, usize, IntPolynomial)> = (0..count)
        .map(|mask| {
            let (int, _) = orientation_poset(n, mask).interval_poset();
            (orientation_name(n, mask), int.size(), poset_coxeter_polynomial(&int))
        })
        .collect();
    let mut differing = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].2 != entries[j].2 {
                differing.push((i, j));
            }
        }
    }
    OrientationReport { n, entries, differing }
}
