use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;

use super::module::{Module, Morphism};

/// The space of natural transformations between two modules.
#[derive(Clone, Debug)]
pub struct HomSpace<F> {
    pub dimension: usize,
    /// A basis; every member satisfies all naturality squares.
    pub basis: Vec<Morphism<F>>,
}

/// Solves the naturality equations for `Hom(m, n)` as one linear system.
///
/// Unknowns are the entries of every component matrix; each cover `u -> v`
/// contributes the equations `N(u→v) φ_u - φ_v M(u→v) = 0`.
pub fn hom_space<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<HomSpace<F>> {
    if m.base() != n.base() {
        return Err(Error::Base("Hom between modules over different posets".into()));
    }
    let size = m.base().size();
    let mut offset = Vec::with_capacity(size + 1);
    offset.push(0);
    for v in 0..size {
        offset.push(offset[v] + n.dim(v) * m.dim(v));
    }
    let unknowns = offset[size];
    // Entry (r, c) of φ_v is unknown offset[v] + r * dim M(v) + c.
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dim(v) + c;

    let mut rows: Vec<Vec<F>> = Vec::new();
    for (k, &(u, v)) in m.covers().iter().enumerate() {
        let (mu_v, nu_v) = (&m.cover_maps()[k], &n.cover_maps()[k]);
        for r in 0..n.dim(v) {
            for c in 0..m.dim(u) {
                let mut eq = vec![F::zero(); unknowns];
                for t in 0..n.dim(u) {
                    let a = &nu_v[(r, t)];
                    if !a.is_negligible() {
                        eq[var(u, t, c)] = eq[var(u, t, c)].clone() + a.clone();
                    }
                }
                for t in 0..m.dim(v) {
                    let b = &mu_v[(t, c)];
                    if !b.is_negligible() {
                        eq[var(v, r, t)] = eq[var(v, r, t)].clone() - b.clone();
                    }
                }
                rows.push(eq);
            }
        }
    }
    let system = Matrix::from_rows(rows.len(), unknowns, rows);
    let null = system.nullspace();
    let basis = (0..null.cols())
        .map(|k| Morphism {
            components: (0..size)
                .map(|v| Matrix::from_fn(n.dim(v), m.dim(v), |r, c| null[(var(v, r, c), k)].clone()))
                .collect(),
        })
        .collect();
    Ok(HomSpace { dimension: null.cols(), basis })
}

/// Scales a morphism so its first nonzero entry, in element order, is 1.
pub fn normalize<F: Field>(f: &Morphism<F>) -> Morphism<F> {
    let pivot = f
        .components
        .iter()
        .flat_map(|c| (0..c.rows()).flat_map(move |r| (0..c.cols()).map(move |k| c[(r, k)].clone())))
        .find(|x| !x.is_negligible());
    match pivot {
        None => f.clone(),
        Some(p) => {
            let s = F::one() / p;
            Morphism { components: f.components.iter().map(|c| c.scale(&s)).collect() }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use crate::rep::module::{interval_module, projective_module};
    use crate::Rational;

    #[test]
    fn interval_homs_on_a3() {
        let a3 = Poset::chain(3);
        let m12 = interval_module::<Rational>(&a3, 0, 1).unwrap();
        let m23 = interval_module::<Rational>(&a3, 1, 2).unwrap();
        assert_eq!(hom_space(&m12, &m23).unwrap().dimension, 0);
        assert_eq!(hom_space(&m23, &m12).unwrap().dimension, 1);
    }

    #[test]
    fn projective_homs_on_a3() {
        let a3 = Poset::chain(3);
        for x in 0..3 {
            for y in 0..3 {
                let px = projective_module::<Rational>(&a3, x);
                let py = projective_module::<Rational>(&a3, y);
                let h = hom_space(&px, &py).unwrap();
                assert_eq!(h.dimension, usize::from(y <= x));
                for b in &h.basis {
                    assert!(b.is_natural(&px, &py));
                }
            }
        }
    }

    #[test]
    fn endomorphisms_of_projective() {
        let p = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let p0 = projective_module::<Rational>(&p, 0);
        let h = hom_space(&p0, &p0).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(normalize(&h.basis[0]), Morphism::identity(&p0));
    }

    #[test]
    fn float_scalars_give_same_dimension() {
        let a3 = Poset::chain(3);
        let m = interval_module::<f64>(&a3, 1, 2).unwrap();
        let n = interval_module::<f64>(&a3, 0, 1).unwrap();
        assert_eq!(hom_space(&m, &n).unwrap().dimension, 1);
    }
}
