//! Thin k-linear categories, Cartan matrices and Coxeter polynomials.

use std::fmt;

use num_integer::Integer as IntegerOps;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gamma::GammaData;
use crate::linalg::Matrix;
use crate::polynomial::{char_poly, Polynomial};
use crate::poset::Poset;
use crate::{IntPolynomial, Integer};

/// A finite k-linear category whose hom spaces have dimension 0 or 1.
///
/// Composition of two nonzero generators is a scalar multiple of the
/// generator of the composite hom space; `composes(u, v, w)` records
/// whether that scalar is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinCategory {
    n: usize,
    hom: Vec<bool>,
    composes: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl ThinCategory {
    /// Builds and validates a thin category.
    ///
    /// `composes` is only consulted on triples with both homs nonzero.
    pub fn new(
        n: usize,
        hom: impl Fn(usize, usize) -> bool,
        composes: impl Fn(usize, usize, usize) -> bool,
    ) -> Result<Self> {
        let hom: Vec<bool> = (0..n * n).map(|i| hom(i / n, i % n)).collect();
        let mut table = vec![false; n * n * n];
        for u in 0..n {
            for v in 0..n {
                if !hom[u * n + v] {
                    continue;
                }
                for w in 0..n {
                    if hom[v * n + w] {
                        table[(u * n + v) * n + w] = composes(u, v, w);
                    }
                }
            }
        }
        let cat = ThinCategory { n, hom, composes: table, labels: None };
        cat.check()?;
        Ok(cat)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn hom(&self, u: usize, v: usize) -> bool {
        self.hom[u * self.n + v]
    }

    pub fn hom_dim(&self, u: usize, v: usize) -> usize {
        usize::from(self.hom(u, v))
    }

    /// Whether the composite `u -> v -> w` of nonzero generators is nonzero.
    #[inline]
    pub fn composes(&self, u: usize, v: usize, w: usize) -> bool {
        self.hom(u, v) && self.hom(v, w) && self.composes[(u * self.n + v) * self.n + w]
    }

    /// The opposite category.
    pub fn op(&self) -> ThinCategory {
        let mut c = ThinCategory::new(self.n, |u, v| self.hom(v, u), |u, v, w| self.composes(w, v, u))
            .expect("opposite of a valid thin category");
        c.labels = self.labels.clone();
        c
    }

    /// Length-2 composites of nonzero generators `u -> v -> w` (all distinct) that vanish.
    pub fn zero_composites(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if u != v && v != w && u != w && self.hom(u, v) && self.hom(v, w) && !self.composes(u, v, w) {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }

    /// The preorder generated by nonzero homs, as a poset.
    pub fn object_order(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && self.hom(u, v))
            .collect();
        Poset::from_covers(self.n, &covers)
            .map_err(|_| Error::Associativity("nonzero homs form a cycle between distinct objects".into()))
    }

    /// Connected components of the graph with an edge wherever a hom is nonzero.
    pub fn component_count(&self) -> usize {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for u in 0..n {
            for v in 0..n {
                if self.hom(u, v) {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    parent[a] = b;
                }
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Same hom matrix and same composition pattern.
    pub fn same_structure(&self, other: &ThinCategory) -> bool {
        self.n == other.n && self.hom == other.hom && {
            let n = self.n;
            (0..n).all(|u| (0..n).all(|v| (0..n).all(|w| self.composes(u, v, w) == other.composes(u, v, w))))
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.n;
        for u in 0..n {
            if !self.hom(u, u) {
                return Err(Error::Associativity(format!("object {u} has no identity")));
            }
        }
        for u in 0..n {
            for v in 0..n {
                if !self.hom(u, v) {
                    continue;
                }
                if !self.composes(u, u, v) || !self.composes(u, v, v) {
                    return Err(Error::Associativity(format!("identity at {u} or {v} kills {u} -> {v}")));
                }
                for w in 0..n {
                    if self.composes(u, v, w) && !self.hom(u, w) {
                        return Err(Error::Associativity(format!(
                            "{u} -> {v} -> {w} is nonzero but Hom({u}, {w}) = 0"
                        )));
                    }
                    if !self.hom(v, w) {
                        continue;
                    }
                    for t in 0..n {
                        if !self.hom(w, t) {
                            continue;
                        }
                        let left = self.composes(u, v, w) && self.composes(u, w, t);
                        let right = self.composes(v, w, t) && self.composes(u, v, t);
                        if left != right {
                            return Err(Error::Associativity(format!(
                                "composition {u} -> {v} -> {w} -> {t} depends on bracketing"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The incidence category of `p`: `Hom(u, v) = k` iff `u ≤ v`, composites never vanish.
pub fn incidence_category(p: &Poset) -> ThinCategory {
    let c = ThinCategory::new(p.size(), |u, v| p.leq(u, v), |_, _, _| true).expect("poset categories are thin");
    c.with_labels((0..p.size()).map(|i| p.label(i)).collect())
}

/// The zero-relation category on `Γ`; a composite of nonzero generators is
/// nonzero exactly when the composite hom space is.
pub fn gamma_zero_category(g: &GammaData) -> Result<ThinCategory> {
    let c = ThinCategory::new(g.len(), |u, v| g.zero_hom_at(u, v), |u, _, w| g.zero_hom_at(u, w))?;
    Ok(c.with_labels((0..g.len()).map(|i| g.poset().label(i)).collect()))
}

/// `C[i][j] = dim Hom(order[i], order[j])`.
pub fn cartan_matrix(t: &ThinCategory, order: &[usize]) -> Matrix<Integer> {
    assert_eq!(order.len(), t.len());
    Matrix::from_fn(t.len(), t.len(), |i, j| Integer::from(t.hom_dim(order[i], order[j])))
}

/// `Φ = -C^{-T} C`, exact. Fails when `C` is not invertible over the integers.
pub fn coxeter_matrix<T>(c: &Matrix<T>) -> Result<Matrix<T>>
where
    T: Clone + fmt::Debug + IntegerOps + Signed,
{
    if !c.is_square() {
        return Err(Error::Singular);
    }
    let q = c.map(|x| Ratio::from_integer(x.clone()));
    let inv_t = q.transpose().inverse().ok_or(Error::Singular)?;
    if (0..inv_t.rows()).any(|i| (0..inv_t.cols()).any(|j| !inv_t[(i, j)].is_integer())) {
        return Err(Error::Singular);
    }
    let inv_t = inv_t.map(|x| x.to_integer());
    Ok((&inv_t * c).map(|x| -x.clone()))
}

/// Cartan matrix, Coxeter matrix and Coxeter polynomial of a thin category.
#[derive(Clone, Debug, PartialEq)]
pub struct CoxeterReport {
    /// Object order used for the matrices (a linear extension).
    pub order: Vec<usize>,
    pub cartan: Matrix<Integer>,
    pub coxeter: Matrix<Integer>,
    pub polynomial: IntPolynomial,
}

pub fn coxeter_report(t: &ThinCategory) -> Result<CoxeterReport> {
    let order = t.object_order()?.linear_extension();
    let cartan = cartan_matrix(t, &order);
    let coxeter = coxeter_matrix(&cartan)?;
    let polynomial = char_poly(&coxeter);
    Ok(CoxeterReport { order, cartan, coxeter, polynomial })
}

/// Characteristic polynomial of the Coxeter matrix.
pub fn coxeter_polynomial(t: &ThinCategory) -> Result<IntPolynomial> {
    Ok(coxeter_report(t)?.polynomial)
}

/// Coxeter polynomial of the incidence category of a poset.
pub fn poset_coxeter_polynomial(p: &Poset) -> IntPolynomial {
    coxeter_polynomial(&incidence_category(p)).expect("incidence Cartan matrices are unitriangular")
}

/// Exact characteristic polynomial of a square integer matrix.
pub fn char_poly_exact<T>(m: &Matrix<T>) -> Polynomial<T>
where
    T: Clone + fmt::Debug + IntegerOps + Signed + FromPrimitive,
{
    char_poly(m)
}

/// One derived invariant evaluated on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRow {
    pub name: &'static str,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

/// Side-by-side comparison of derived-equivalence invariants.
///
/// Equality of every row is a necessary condition for derived equivalence,
/// never a proof of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub rows: Vec<InvariantRow>,
    pub left_polynomial: IntPolynomial,
    pub right_polynomial: IntPolynomial,
}

impl InvariantReport {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }

    pub fn polynomials_equal(&self) -> bool {
        self.left_polynomial == self.right_polynomial
    }

    /// Lines `invariant <name> <left> <right> <equal|differ>`; polynomial
    /// coefficients are comma-separated so each field is one token.
    pub fn machine_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                format!("invariant {} {} {} {}", r.name, r.left, r.right, if r.equal { "equal" } else { "differ" })
            })
            .collect()
    }

    pub fn human_text(&self) -> String {
        let mut s = String::from("necessary-condition check (equal invariants do not prove derived equivalence)\n");
        s.push_str(&format!("  left  Coxeter polynomial: {}\n", self.left_polynomial.pretty()));
        s.push_str(&format!("  right Coxeter polynomial: {}\n", self.right_polynomial.pretty()));
        for r in &self.rows {
            s.push_str(&format!("  {:<10} {} vs {}: {}\n", r.name, r.left, r.right, if r.equal { "equal" } else { "differ" }));
        }
        s.push_str(if self.polynomials_equal() { "polynomials equal\n" } else { "polynomials differ\n" });
        s
    }
}

fn comma_poly(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Object count, component count and Coxeter polynomial of both categories.
pub fn derived_invariant_report(a: &ThinCategory, b: &ThinCategory) -> Result<InvariantReport> {
    let pa = coxeter_polynomial(a)?;
    let pb = coxeter_polynomial(b)?;
    let row = |name, l: String, r: String| InvariantRow { name, equal: l == r, left: l, right: r };
    let rows = vec![
        row("objects", a.len().to_string(), b.len().to_string()),
        row("components", a.component_count().to_string(), b.component_count().to_string()),
        row("coxeter", comma_poly(&pa), comma_poly(&pb)),
    ];
    Ok(InvariantReport { rows, left_polynomial: pa, right_polynomial: pb })
}

/// Pairs `u < w` of `order` with `Hom(u, w) = 0` that are not forced by a
/// zero pair `(v, w)` with `u < v` or `(u, v)` with `v < w`; these are the
/// zero relations of a presentation by generators and relations.
pub fn minimal_zero_relations(order: &Poset, t: &ThinCategory) -> Vec<(usize, usize)> {
    let n = order.size();
    let zero = |u: usize, w: usize| order.lt(u, w) && !t.hom(u, w);
    let mut out = Vec::new();
    for u in 0..n {
        for w in 0..n {
            if zero(u, w) && !(0..n).any(|v| (order.lt(u, v) && zero(v, w)) || (order.lt(v, w) && zero(u, v))) {
                out.push((u, w));
            }
        }
    }
    out
}

/// Whether `m` is upper unitriangular.
pub fn is_upper_unitriangular(m: &Matrix<Integer>) -> bool {
    (0..m.rows()).all(|i| {
        m[(i, i)].is_one() && (0..i).all(|j| m[(i, j)].is_zero())
    })
}
