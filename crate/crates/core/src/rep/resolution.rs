use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poset::Poset;
use crate::scalar::Field;

use super::module::{generators_at, kernel, projective_map, projective_sum, Module, Morphism};

/// A finite projective resolution `... -> Q_1 -> Q_0 -> M -> 0`.
///
/// Each `Q_i = ⊕_j P_{generators[i][j]}`. By Yoneda a map `P_y -> Q` is an
/// element of `Q(y)`, so the differential `Q_i -> Q_{i-1}` is stored as a
/// coefficient matrix with one row per generator of `Q_{i-1}` and one column
/// per generator of `Q_i`; entry `(k, j)` can only be nonzero when
/// `generators[i-1][k] ≤ generators[i][j]`.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution<F> {
    base: Poset,
    generators: Vec<Vec<usize>>,
    differentials: Vec<Matrix<F>>,
    /// For each generator `j` of `Q_0`, its image in `M(generators[0][j])`.
    augmentation: Vec<Matrix<F>>,
}

/// A projective cover: generators with their images in `m`.
fn projective_cover<F: Field>(m: &Module<F>) -> (Vec<usize>, Vec<Matrix<F>>) {
    let base = m.base();
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for v in 0..base.size() {
        if m.dim(v) == 0 {
            continue;
        }
        // rad M(v) is spanned by the images of the lower covers.
        let mut radical = Matrix::zeros(m.dim(v), 0);
        for u in base.lower_covers(v) {
            radical = radical.hstack(m.transition(u, v));
        }
        for e in radical.complement_in_standard_basis() {
            let mut vec = Matrix::zeros(m.dim(v), 1);
            vec[(e, 0)] = F::one();
            gens.push(v);
            images.push(vec);
        }
    }
    (gens, images)
}

/// The map `⊕_j P_{gens[j]} -> m` sending generator `j` to `images[j]`.
fn yoneda_map<F: Field>(m: &Module<F>, gens: &[usize], images: &[Matrix<F>]) -> Morphism<F> {
    let base = m.base();
    let components = (0..base.size())
        .map(|z| {
            let mut c = Matrix::zeros(m.dim(z), 0);
            for j in generators_at(base, gens, z) {
                c = c.hstack(&(m.transition(gens[j], z) * &images[j]));
            }
            c
        })
        .collect();
    Morphism { components }
}

/// Iterated projective covers, stopping at the first zero kernel.
pub fn projective_resolution<F: Field>(m: &Module<F>) -> Result<ProjectiveResolution<F>> {
    let base = m.base().clone();
    let (gens0, augmentation) = projective_cover(m);
    let mut generators = vec![gens0];
    let mut differentials: Vec<Matrix<F>> = Vec::new();

    let q0: Module<F> = projective_sum(&base, &generators[0]);
    let aug_map = yoneda_map(m, &generators[0], &augmentation);
    let (mut syzygy, mut inclusion) = kernel(&q0, &aug_map);

    while !syzygy.is_zero_module() {
        if differentials.len() >= base.size() {
            return Err(Error::Length(base.size()));
        }
        let prev_gens = generators.last().unwrap().clone();
        let (gens, images) = projective_cover(&syzygy);
        // Express each generator's image in the generator coordinates of Q_{i-1}.
        let mut d = Matrix::zeros(prev_gens.len(), gens.len());
        for (j, (&y, img)) in gens.iter().zip(&images).enumerate() {
            let coords = &inclusion.components[y] * img;
            for (r, k) in generators_at(&base, &prev_gens, y).into_iter().enumerate() {
                d[(k, j)] = coords[(r, 0)].clone();
            }
        }
        let cover_map = yoneda_map(&syzygy, &gens, &images);
        let q: Module<F> = projective_sum(&base, &gens);
        let (next, next_incl) = kernel(&q, &cover_map);
        differentials.push(d);
        generators.push(gens);
        syzygy = next;
        inclusion = next_incl;
    }
    Ok(ProjectiveResolution { base, generators, differentials, augmentation })
}

impl<F: Field> ProjectiveResolution<F> {
    pub fn base(&self) -> &Poset {
        &self.base
    }

    /// Index of the last nonzero term.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn generators(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    /// Coefficient matrix of `d_i : Q_i -> Q_{i-1}`, `1 ≤ i ≤ length`.
    pub fn differential(&self, i: usize) -> &Matrix<F> {
        &self.differentials[i - 1]
    }

    pub fn term(&self, i: usize) -> Module<F> {
        projective_sum(&self.base, &self.generators[i])
    }

    /// `d_i` evaluated at `z`: rows and columns restricted to generators below `z`.
    pub fn differential_at(&self, i: usize, z: usize) -> Matrix<F> {
        self.differential_morphism(i).components.swap_remove(z)
    }

    pub fn differential_morphism(&self, i: usize) -> Morphism<F> {
        projective_map(&self.base, &self.generators[i], &self.generators[i - 1], self.differential(i))
            .expect("differentials respect the order")
    }

    pub fn augmentation_morphism(&self, m: &Module<F>) -> Morphism<F> {
        yoneda_map(m, &self.generators[0], &self.augmentation)
    }

    /// `d ∘ d = 0`, the augmentation kills `d_1`, and every evaluation
    /// `... -> Q_1(z) -> Q_0(z) -> M(z) -> 0` is exact by rank count.
    pub fn check(&self, m: &Module<F>) -> bool {
        let len = self.length();
        for i in 2..=len {
            if !(self.differential(i - 1) * self.differential(i)).is_zero() {
                return false;
            }
        }
        let aug = self.augmentation_morphism(m);
        if len >= 1 && !self.differential_morphism(1).then(&aug).is_zero() {
            return false;
        }
        for z in 0..self.base.size() {
            let mut ranks = vec![aug.components[z].rank()];
            for i in 1..=len {
                ranks.push(self.differential_at(i, z).rank());
            }
            ranks.push(0);
            if ranks[0] != m.dim(z) {
                return false;
            }
            for i in 0..=len {
                let dim_q = generators_at(&self.base, &self.generators[i], z).len();
                if dim_q != ranks[i] + ranks[i + 1] {
                    return false;
                }
            }
        }
        true
    }

    /// `dim Hom(Q_i, n) = Σ_j dim n(generators[i][j])`.
    fn cochain_dim(&self, n: &Module<F>, i: usize) -> usize {
        self.generators[i].iter().map(|&y| n.dim(y)).sum()
    }

    /// `Hom(Q_{i-1}, n) -> Hom(Q_i, n)`, precomposition with `d_i`.
    fn coboundary(&self, n: &Module<F>, i: usize) -> Matrix<F> {
        let (src, dst) = (&self.generators[i - 1], &self.generators[i]);
        let offsets = |gens: &[usize]| {
            let mut o = vec![0];
            for &y in gens {
                o.push(o.last().unwrap() + n.dim(y));
            }
            o
        };
        let (so, to) = (offsets(src), offsets(dst));
        let d = self.differential(i);
        let mut out = Matrix::zeros(*to.last().unwrap(), *so.last().unwrap());
        for (j, &yj) in dst.iter().enumerate() {
            for (k, &yk) in src.iter().enumerate() {
                let coef = &d[(k, j)];
                if coef.is_negligible() {
                    continue;
                }
                out.set_block(to[j], so[k], &n.transition(yk, yj).scale(coef));
            }
        }
        out
    }

    /// `dim Ext^i(M, n)` for `0 ≤ i ≤ length`.
    pub fn ext_dims(&self, n: &Module<F>) -> Result<Vec<usize>> {
        if n.base() != &self.base {
            return Err(Error::Base("Ext between modules over different posets".into()));
        }
        let len = self.length();
        let ranks: Vec<usize> = (1..=len).map(|i| self.coboundary(n, i).rank()).collect();
        let rank_into = |i: usize| if i == 0 { 0 } else { ranks[i - 1] };
        let rank_out = |i: usize| if i == len { 0 } else { ranks[i] };
        Ok((0..=len).map(|i| self.cochain_dim(n, i) - rank_into(i) - rank_out(i)).collect())
    }
}

/// `dim Ext^i(m, n)` via a projective resolution of `m`.
pub fn ext_dim<F: Field>(m: &Module<F>, n: &Module<F>, i: usize) -> Result<usize> {
    let res = projective_resolution(m)?;
    Ok(res.ext_dims(n)?.get(i).copied().unwrap_or(0))
}
