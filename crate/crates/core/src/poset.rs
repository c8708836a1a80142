//! Finite posets on dense indices `0..size`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Upper bound on the number of ideals enumerated by [`Poset::ideals`].
pub const DEFAULT_IDEAL_BOUND: usize = 1 << 20;

/// A finite partially ordered set.
///
/// The order is stored as a full relation table; covers are recomputed on
/// demand. Values are immutable once constructed and every constructor
/// checks the three order axioms.
#[derive(Clone, Debug)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    /// Equality of carriers and relations; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.leq == other.leq
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from a full relation table, checking the order axioms.
    pub fn from_relation(size: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != size * size {
            return Err(Error::NotAnOrder(format!(
                "relation table has {} entries, expected {}",
                leq.len(),
                size * size
            )));
        }
        let p = Poset { size, leq, labels: None };
        p.check_axioms()?;
        Ok(p)
    }

    /// Builds a poset from a predicate `leq(u, v)`.
    pub fn from_fn(size: usize, mut leq: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut table = Vec::with_capacity(size * size);
        for u in 0..size {
            for v in 0..size {
                table.push(leq(u, v));
            }
        }
        Self::from_relation(size, table)
    }

    /// Reflexive-transitive closure of a cover relation.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(u, v) in covers {
            for w in [u, v] {
                if w >= size {
                    return Err(Error::Index { index: w, size });
                }
            }
            if u == v {
                return Err(Error::Cycle(u));
            }
            leq[u * size + v] = true;
        }
        // Iterated composition R <- R ∘ R until stable.
        loop {
            let mut changed = false;
            for u in 0..size {
                for w in 0..size {
                    if !leq[u * size + w] || u == w {
                        continue;
                    }
                    for v in 0..size {
                        if leq[w * size + v] && !leq[u * size + v] {
                            leq[u * size + v] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for u in 0..size {
            for v in 0..size {
                if u != v && leq[u * size + v] && leq[v * size + u] {
                    return Err(Error::Cycle(u.min(v)));
                }
            }
        }
        Ok(Poset { size, leq, labels: None })
    }

    /// The total order `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, |u, v| u <= v).expect("chain is a partial order")
    }

    /// The discrete order on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Self::from_fn(n, |u, v| u == v).expect("antichain is a partial order")
    }

    pub fn empty() -> Self {
        Self::antichain(0)
    }

    /// Product order; element `(p, q)` has index `p * other.size() + q`.
    pub fn product(&self, other: &Poset) -> Poset {
        let m = other.size;
        let mut p = Self::from_fn(self.size * m, |u, v| {
            self.leq(u / m, v / m) && other.leq(u % m, v % m)
        })
        .expect("product of orders is an order");
        p.labels = Some(
            (0..self.size * m)
                .map(|i| format!("({},{})", self.label(i / m), other.label(i % m)))
                .collect(),
        );
        p
    }

    /// Disjoint union; elements of `other` are shifted by `self.size()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let n = self.size;
        Self::from_fn(n + other.size, |u, v| match (u < n, v < n) {
            (true, true) => self.leq(u, v),
            (false, false) => other.leq(u - n, v - n),
            _ => false,
        })
        .expect("disjoint union of orders is an order")
    }

    /// The opposite order.
    pub fn dual(&self) -> Poset {
        let mut p = Self::from_fn(self.size, |u, v| self.leq(v, u)).expect("dual of an order");
        p.labels = self.labels.clone();
        p
    }

    /// The induced order on `elements`; element `i` of the result is `elements[i]`.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let mut p = Self::from_fn(elements.len(), |u, v| self.leq(elements[u], elements[v]))
            .expect("induced order");
        p.labels = Some(elements.iter().map(|&e| self.label(e)).collect());
        p
    }

    /// The poset of intervals `[a, b]`, ordered coordinatewise.
    ///
    /// Returns the poset together with the `(a, b)` pair of each element,
    /// listed lexicographically.
    pub fn interval_poset(&self) -> (Poset, Vec<(usize, usize)>) {
        let pairs: Vec<(usize, usize)> = (0..self.size)
            .flat_map(|a| (0..self.size).map(move |b| (a, b)))
            .filter(|&(a, b)| self.leq(a, b))
            .collect();
        let mut p = Self::from_fn(pairs.len(), |u, v| {
            let ((a, b), (c, d)) = (pairs[u], pairs[v]);
            self.leq(a, c) && self.leq(b, d)
        })
        .expect("interval order");
        p.labels = Some(
            pairs.iter().map(|&(a, b)| format!("[{},{}]", self.label(a), self.label(b))).collect(),
        );
        (p, pairs)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size);
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq[u * self.size + v]
    }

    #[inline]
    pub fn lt(&self, u: usize, v: usize) -> bool {
        u != v && self.leq(u, v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.leq(u, v) || self.leq(v, u)
    }

    /// Whether `v` covers `u`.
    pub fn covers_pair(&self, u: usize, v: usize) -> bool {
        self.lt(u, v) && !(0..self.size).any(|w| self.lt(u, w) && self.lt(w, v))
    }

    /// All Hasse covers `(u, v)` with `u < v`, in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.size {
            for v in 0..self.size {
                if self.covers_pair(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn lower_covers(&self, v: usize) -> Vec<usize> {
        (0..self.size).filter(|&u| self.covers_pair(u, v)).collect()
    }

    /// `[., x]`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&u| self.leq(u, x)).collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&u| self.leq(x, u)).collect()
    }

    /// Whether `subset` (as a membership vector) is downward closed.
    pub fn is_closed(&self, subset: &[bool]) -> bool {
        (0..self.size).all(|x| !subset[x] || (0..self.size).all(|u| !self.leq(u, x) || subset[u]))
    }

    pub fn down_closure(&self, subset: &[bool]) -> Vec<bool> {
        (0..self.size).map(|u| (0..self.size).any(|x| subset[x] && self.leq(u, x))).collect()
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.size];
        for &v in &self.linear_extension() {
            h[v] = (0..self.size).filter(|&u| self.lt(u, v)).map(|u| h[u] + 1).max().unwrap_or(0);
        }
        h
    }

    /// A linear extension, taking the smallest available index first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size;
        let mut indeg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&u| self.lt(u, v)).count()).collect();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n).find(|&v| !placed[v] && indeg[v] == 0).expect("acyclic order");
            placed[next] = true;
            order.push(next);
            for (w, d) in indeg.iter_mut().enumerate() {
                if self.lt(next, w) {
                    *d -= 1;
                }
            }
        }
        order
    }

    /// Connected components of the comparability graph, each sorted,
    /// listed by smallest element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![];
            let mut queue = VecDeque::from([start]);
            comp[start] = id;
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for (v, c) in comp.iter_mut().enumerate() {
                    if *c == usize::MAX && self.comparable(u, v) {
                        *c = id;
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// All closed subsets, `∅` first, with the inclusion-ordered poset `J(P)`.
    pub fn ideals(&self) -> Result<IdealLattice> {
        self.ideals_bounded(DEFAULT_IDEAL_BOUND)
    }

    pub fn ideals_bounded(&self, bound: usize) -> Result<IdealLattice> {
        let order = self.linear_extension();
        let mut ideals = Vec::new();
        let mut current = vec![false; self.size];
        self.extend_ideals(&order, 0, &mut current, &mut ideals, bound)?;
        ideals.sort_by_key(|s: &Vec<bool>| (s.iter().filter(|&&b| b).count(), s.iter().map(|&b| !b).collect::<Vec<_>>()));
        let poset = Poset::from_fn(ideals.len(), |i, j| {
            ideals[i].iter().zip(&ideals[j]).all(|(&a, &b)| !a || b)
        })
        .expect("inclusion order");
        Ok(IdealLattice { ideals, poset })
    }

    fn extend_ideals(
        &self,
        order: &[usize],
        depth: usize,
        current: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
        bound: usize,
    ) -> Result<()> {
        if depth == order.len() {
            if out.len() >= bound {
                return Err(Error::Size(format!("more than {bound} ideals")));
            }
            out.push(current.clone());
            return Ok(());
        }
        let x = order[depth];
        self.extend_ideals(order, depth + 1, current, out, bound)?;
        // Everything below x precedes it in the linear extension.
        if (0..self.size).all(|u| !self.lt(u, x) || current[u]) {
            current[x] = true;
            self.extend_ideals(order, depth + 1, current, out, bound)?;
            current[x] = false;
        }
        Ok(())
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        for u in 0..n {
            if !self.leq(u, u) {
                return Err(Error::NotAnOrder(format!("{u} is not below itself")));
            }
            for v in 0..n {
                if u != v && self.leq(u, v) && self.leq(v, u) {
                    return Err(Error::NotAnOrder(format!("{u} and {v} violate antisymmetry")));
                }
                if !self.leq(u, v) {
                    continue;
                }
                for w in 0..n {
                    if self.leq(v, w) && !self.leq(u, w) {
                        return Err(Error::NotAnOrder(format!(
                            "{u} <= {v} <= {w} but not {u} <= {w}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The closed subsets of a poset and their inclusion order.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    /// Membership vectors; `ideals[i]` is element `i` of `poset`.
    pub ideals: Vec<Vec<bool>>,
    pub poset: Poset,
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, subset: &[bool]) -> Option<usize> {
        self.ideals.iter().position(|s| s.as_slice() == subset)
    }
}

/// An order-preserving map between posets.
#[derive(Clone, Debug, PartialEq)]
pub struct PosetMorphism {
    source: Poset,
    target: Poset,
    map: Vec<usize>,
}

impl PosetMorphism {
    pub fn new(source: Poset, target: Poset, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::Morphism(format!(
                "map has {} entries for a source of size {}",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&m| m >= target.size()) {
            return Err(Error::Index { index: bad, size: target.size() });
        }
        for u in 0..source.size() {
            for v in 0..source.size() {
                if source.leq(u, v) && !target.leq(map[u], map[v]) {
                    return Err(Error::Morphism(format!(
                        "{u} <= {v} but f({u}) = {} is not below f({v}) = {}",
                        map[u], map[v]
                    )));
                }
            }
        }
        Ok(PosetMorphism { source, target, map })
    }

    pub fn identity(p: &Poset) -> Self {
        PosetMorphism { source: p.clone(), target: p.clone(), map: (0..p.size()).collect() }
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn apply(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_build_chain_and_antichain() {
        let c = Poset::from_covers(2, &[(0, 1)]).unwrap();
        assert!(c.leq(0, 1) && !c.leq(1, 0));
        let a = Poset::from_covers(3, &[]).unwrap();
        assert_eq!(a, Poset::antichain(3));
    }

    #[test]
    fn cover_cycle_rejected() {
        assert_eq!(Poset::from_covers(2, &[(0, 1), (1, 0)]), Err(Error::Cycle(0)));
        assert!(matches!(Poset::from_covers(2, &[(0, 2)]), Err(Error::Index { .. })));
    }

    #[test]
    fn cover_order_irrelevant() {
        let a = Poset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Poset::from_covers(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, Poset::chain(4));
    }

    #[test]
    fn chains() {
        assert_eq!(Poset::chain(1).size(), 1);
        let c3 = Poset::chain(3);
        let trues = (0..3).flat_map(|u| (0..3).map(move |v| (u, v))).filter(|&(u, v)| c3.leq(u, v)).count();
        assert_eq!(trues, 6);
        assert!(Poset::chain(0).is_empty());
    }

    #[test]
    fn products() {
        let d = Poset::chain(2).product(&Poset::chain(2));
        assert_eq!(d.size(), 4);
        let incomparable = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .filter(|&(u, v)| !d.comparable(u, v))
            .count();
        assert_eq!(incomparable, 1);
        assert_eq!(Poset::chain(3).product(&Poset::chain(1)), Poset::chain(3));
        assert_eq!(Poset::chain(5).product(&Poset::chain(2)).size(), 10);
    }

    #[test]
    fn intervals_of_chains() {
        assert_eq!(Poset::chain(1).interval_poset().0.size(), 1);
        let (i2, pairs) = Poset::chain(2).interval_poset();
        assert_eq!(pairs, vec![(0, 0), (0, 1), (1, 1)]);
        assert!(i2.leq(0, 1) && i2.leq(1, 2));
        assert_eq!(i2, Poset::chain(3));
        for n in 0..=8 {
            assert_eq!(Poset::chain(n).interval_poset().0.size(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn ideals_small() {
        let j = Poset::chain(2).ideals().unwrap();
        assert_eq!(j.ideals, vec![vec![false, false], vec![true, false], vec![true, true]]);
        assert_eq!(Poset::antichain(2).ideals().unwrap().len(), 4);
        let e = Poset::empty().ideals().unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn ideal_bound() {
        assert!(matches!(Poset::antichain(5).ideals_bounded(10), Err(Error::Size(_))));
    }

    #[test]
    fn components() {
        assert_eq!(Poset::antichain(3).connected_components().len(), 3);
        assert_eq!(Poset::chain(5).connected_components().len(), 1);
        let u = Poset::chain(2).disjoint_union(&Poset::chain(3));
        assert_eq!(u.connected_components(), vec![vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn linear_extensions() {
        assert_eq!(Poset::chain(4).linear_extension(), vec![0, 1, 2, 3]);
        assert_eq!(Poset::antichain(3).linear_extension(), vec![0, 1, 2]);
        // Int(A_2) listed as [2,2], [1,1], [1,2].
        let p = Poset::from_covers(3, &[(1, 2), (2, 0)]).unwrap();
        assert_eq!(p.linear_extension(), vec![1, 2, 0]);
    }

    #[test]
    fn morphism_checks_order() {
        let c = Poset::chain(2);
        assert!(PosetMorphism::new(c.clone(), c.clone(), vec![1, 0]).is_err());
        assert!(PosetMorphism::new(c.clone(), c.clone(), vec![0, 0]).is_ok());
    }
}
