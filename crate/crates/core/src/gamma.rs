//! Generalized intervals: the poset `Γ ⊆ X × Y` cut out by a monotone map
//! `F : Y -> J(X)`, and the zero-relation pattern on `Γ`.

use crate::error::{Error, Result};
use crate::poset::{Poset, PosetMorphism};

/// A monotone assignment of closed subsets `y ↦ F(y) ⊆ X`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealMap {
    x: Poset,
    y: Poset,
    sets: Vec<Vec<bool>>,
}

impl IdealMap {
    /// Validates closedness of each `F(y)` and monotonicity in `y`.
    pub fn new(x: Poset, y: Poset, sets: Vec<Vec<bool>>) -> Result<Self> {
        if sets.len() != y.size() {
            return Err(Error::IdealMap(format!(
                "{} subsets given for {} elements of Y",
                sets.len(),
                y.size()
            )));
        }
        for (yi, s) in sets.iter().enumerate() {
            if s.len() != x.size() {
                return Err(Error::IdealMap(format!("F({yi}) has the wrong length")));
            }
            if !x.is_closed(s) {
                return Err(Error::IdealMap(format!("F({yi}) is not closed")));
            }
        }
        for u in 0..y.size() {
            for v in 0..y.size() {
                if y.leq(u, v) && sets[u].iter().zip(&sets[v]).any(|(&a, &b)| a && !b) {
                    return Err(Error::IdealMap(format!(
                        "{u} <= {v} in Y but F({u}) is not contained in F({v})"
                    )));
                }
            }
        }
        Ok(IdealMap { x, y, sets })
    }

    /// Builds the map from element lists `F(y)`.
    pub fn from_lists(x: Poset, y: Poset, lists: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for l in lists {
            let mut s = vec![false; x.size()];
            for &e in l {
                if e >= x.size() {
                    return Err(Error::Index { index: e, size: x.size() });
                }
                s[e] = true;
            }
            sets.push(s);
        }
        Self::new(x, y, sets)
    }

    pub fn x(&self) -> &Poset {
        &self.x
    }

    pub fn y(&self) -> &Poset {
        &self.y
    }

    pub fn contains(&self, y: usize, x: usize) -> bool {
        self.sets[y][x]
    }

    pub fn set(&self, y: usize) -> &[bool] {
        &self.sets[y]
    }

    /// Elements of `F(y)` in increasing index order.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.x.size()).filter(|&x| self.sets[y][x]).collect()
    }

    /// `F(y)` with the order induced from `X`.
    pub fn fiber_poset(&self, y: usize) -> Poset {
        self.x.induced(&self.fiber(y))
    }
}

/// The poset `Γ` of generalized intervals for an [`IdealMap`].
#[derive(Clone, Debug)]
pub struct GammaData {
    source: IdealMap,
    poset: Poset,
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl GammaData {
    pub fn source(&self) -> &IdealMap {
        &self.source
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// The `(x, y)` pair of each element of `Γ`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        if x >= self.source.x.size() || y >= self.source.y.size() {
            return None;
        }
        self.index[x * self.source.y.size() + y]
    }

    /// `dim Hom((x, y), (x', y'))` in the zero-relation category.
    pub fn zero_hom(&self, from: (usize, usize), to: (usize, usize)) -> Result<usize> {
        let u = self.index_of(from.0, from.1).ok_or(Error::Element(from.0, from.1))?;
        let v = self.index_of(to.0, to.1).ok_or(Error::Element(to.0, to.1))?;
        Ok(usize::from(self.zero_hom_at(u, v)))
    }

    /// Zero-relation hom predicate on element indices of `Γ`:
    /// `x ≤ x'`, `y ≤ y'` and `x' ∈ F(y)`.
    pub fn zero_hom_at(&self, u: usize, v: usize) -> bool {
        let ((x, y), (x2, y2)) = (self.pairs[u], self.pairs[v]);
        self.source.x.leq(x, x2) && self.source.y.leq(y, y2) && self.source.contains(y, x2)
    }
}

/// `Γ = ⊔_y F(y) × {y}` with the product order, listed y-major then by x.
pub fn build_gamma(map: &IdealMap) -> GammaData {
    let (nx, ny) = (map.x.size(), map.y.size());
    let mut pairs = Vec::new();
    let mut index = vec![None; nx * ny];
    for y in 0..ny {
        for x in 0..nx {
            if map.contains(y, x) {
                index[x * ny + y] = Some(pairs.len());
                pairs.push((x, y));
            }
        }
    }
    let mut poset = Poset::from_fn(pairs.len(), |u, v| {
        let ((x, y), (x2, y2)) = (pairs[u], pairs[v]);
        map.x.leq(x, x2) && map.y.leq(y, y2)
    })
    .expect("sub-order of a product");
    let labels = pairs.iter().map(|&(x, y)| format!("({},{})", map.x.label(x), map.y.label(y))).collect();
    poset = poset.with_labels(labels);
    GammaData { source: map.clone(), poset, pairs, index }
}

/// `F(y) = { x : f(x) ≤ g(y) }` for order-preserving `f : X -> Z`, `g : Y -> Z`.
pub fn ideal_map_from_triple(f: &PosetMorphism, g: &PosetMorphism) -> Result<IdealMap> {
    if f.target() != g.target() {
        return Err(Error::Morphism("f and g have different targets".into()));
    }
    let (x, y, z) = (f.source(), g.source(), f.target());
    let sets = (0..y.size())
        .map(|yi| (0..x.size()).map(|xi| z.leq(f.apply(xi), g.apply(yi))).collect())
        .collect();
    IdealMap::new(x.clone(), y.clone(), sets)
}

/// Like [`ideal_map_from_triple`] but from raw index maps, validating both.
pub fn ideal_map_from_maps(x: &Poset, y: &Poset, z: &Poset, f: &[usize], g: &[usize]) -> Result<IdealMap> {
    let f = PosetMorphism::new(x.clone(), z.clone(), f.to_vec())?;
    let g = PosetMorphism::new(y.clone(), z.clone(), g.to_vec())?;
    ideal_map_from_triple(&f, &g)
}

/// `Y = X` and `F(x) = [., x]`; its `Γ` is the interval poset of `X`.
pub fn interval_ideal_map(x: &Poset) -> IdealMap {
    let sets = (0..x.size()).map(|b| (0..x.size()).map(|a| x.leq(a, b)).collect()).collect();
    IdealMap::new(x.clone(), x.clone(), sets).expect("down-sets form a monotone ideal map")
}

/// Monotone `l`-tuples `p_1 ≤ ... ≤ p_l` of `p`, ordered componentwise.
///
/// Returns the poset together with the tuple of each element, in
/// lexicographic order.
pub fn multichain_poset(p: &Poset, l: usize) -> (Poset, Vec<Vec<usize>>) {
    assert!(l >= 1, "chains have at least one entry");
    let mut tuples: Vec<Vec<usize>> = (0..p.size()).map(|e| vec![e]).collect();
    for _ in 1..l {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                let last = *t.last().unwrap();
                (0..p.size()).filter(move |&e| p.leq(last, e)).map(move |e| {
                    let mut t2 = t.clone();
                    t2.push(e);
                    t2
                })
            })
            .collect();
    }
    tuples.sort();
    let poset = Poset::from_fn(tuples.len(), |u, v| {
        tuples[u].iter().zip(&tuples[v]).all(|(&a, &b)| p.leq(a, b))
    })
    .expect("componentwise order");
    let labels = tuples
        .iter()
        .map(|t| t.iter().map(|&e| p.label(e)).collect::<Vec<_>>().join("<="))
        .collect();
    (poset.with_labels(labels), tuples)
}

/// The map from `l`-chains to `(l+1)`-chains repeating the entry at `position`.
pub fn degeneracy(p: &Poset, l: usize, position: usize) -> PosetMorphism {
    assert!(position < l);
    let (src, src_tuples) = multichain_poset(p, l);
    let (dst, dst_tuples) = multichain_poset(p, l + 1);
    let map = src_tuples
        .iter()
        .map(|t| {
            let mut t2 = t.clone();
            t2.insert(position, t[position]);
            dst_tuples.binary_search(&t2).expect("degenerate chain is a chain")
        })
        .collect();
    PosetMorphism::new(src, dst, map).expect("degeneracies preserve order")
}

/// The map from `(l+1)`-chains to `l`-chains dropping the entry at `position`.
pub fn face(p: &Poset, l: usize, position: usize) -> PosetMorphism {
    assert!(position <= l);
    let (src, src_tuples) = multichain_poset(p, l + 1);
    let (dst, dst_tuples) = multichain_poset(p, l);
    let map = src_tuples
        .iter()
        .map(|t| {
            let mut t2 = t.clone();
            t2.remove(position);
            dst_tuples.binary_search(&t2).expect("face of a chain is a chain")
        })
        .collect();
    PosetMorphism::new(src, dst, map).expect("faces preserve order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;
    use crate::samples;

    #[test]
    fn vee_example_gamma() {
        let g = build_gamma(&samples::vee_over_chain());
        assert_eq!(g.len(), 9);
        // (1,b) -> (3,c) vanishes since 3 is not in F(b).
        assert_eq!(g.zero_hom((0, 1), (2, 2)).unwrap(), 0);
        assert_eq!(g.zero_hom((0, 1), (0, 1)).unwrap(), 1);
        assert_eq!(g.zero_hom((2, 0), (2, 2)), Err(Error::Element(2, 0)));
    }

    #[test]
    fn empty_fibers() {
        let m = IdealMap::from_lists(Poset::chain(2), Poset::chain(3), &[vec![], vec![], vec![]]).unwrap();
        assert!(build_gamma(&m).is_empty());
    }

    #[test]
    fn interval_map_gamma() {
        let x = Poset::chain(2);
        let g = build_gamma(&interval_ideal_map(&x));
        assert_eq!(g.len(), 3);
        assert!(is_isomorphic(g.poset(), &x.interval_poset().0).is_some());
        // (1,1) -> (2,2): 2 is not in F(1).
        assert_eq!(g.zero_hom((0, 0), (1, 1)).unwrap(), 0);
        let single = build_gamma(&interval_ideal_map(&Poset::chain(1)));
        assert_eq!(single.len(), 1);
        assert!(single.zero_hom_at(0, 0));
    }

    #[test]
    fn triple_reproduces_listed_map() {
        let (f, g) = samples::vee_over_chain_triple();
        assert_eq!(ideal_map_from_triple(&f, &g).unwrap(), samples::vee_over_chain());
    }

    #[test]
    fn triple_with_identity_g() {
        let (f, g) = samples::two_chain_degeneracy_triple();
        let m = ideal_map_from_triple(&f, &g).unwrap();
        for y in 0..m.y().size() {
            for x in 0..m.x().size() {
                assert_eq!(m.contains(y, x), m.y().leq(f.apply(x), y));
            }
        }
    }

    #[test]
    fn triple_with_constant_minimum() {
        let x = Poset::antichain(2);
        let y = Poset::chain(2);
        let z = Poset::chain(3);
        let m = ideal_map_from_maps(&x, &y, &z, &[0, 0], &[1, 2]).unwrap();
        assert!((0..2).all(|yi| m.fiber(yi) == vec![0, 1]));
    }

    #[test]
    fn triple_rejects_non_monotone() {
        let c = Poset::chain(2);
        let r = ideal_map_from_maps(&c, &c, &c, &[1, 0], &[0, 1]);
        assert!(matches!(r, Err(Error::Morphism(_))));
    }

    #[test]
    fn invalid_ideal_maps() {
        let c = Poset::chain(2);
        assert!(IdealMap::from_lists(c.clone(), c.clone(), &[vec![1], vec![0, 1]]).is_err());
        assert!(IdealMap::from_lists(c.clone(), c.clone(), &[vec![0, 1], vec![0]]).is_err());
    }

    #[test]
    fn multichains() {
        let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(multichain_poset(&p, 2).0.size(), 5);
        assert_eq!(multichain_poset(&p, 3).0.size(), 7);
        for l in 1..4 {
            assert_eq!(multichain_poset(&Poset::chain(1), l).0.size(), 1);
        }
        let d = degeneracy(&p, 2, 0);
        assert_eq!(d.source().size(), 5);
        assert_eq!(d.target().size(), 7);
        let back = face(&p, 2, 0);
        for u in 0..5 {
            assert_eq!(back.apply(d.apply(u)), u);
        }
    }
}
