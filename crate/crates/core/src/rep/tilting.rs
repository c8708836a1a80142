use std::fmt;

use crate::algebra::{gamma_zero_category, ThinCategory};
use crate::error::{Error, Result};
use crate::gamma::GammaData;
use crate::scalar::Field;

use super::adjoint::pushforward;
use super::hom::{hom_space, normalize};
use super::module::{direct_sum, projective_module, Module};
use super::resolution::projective_resolution;

/// `T = ⊕_{(x, y) ∈ Γ} (i_y)_⋆ P_x`, with its summands kept in `Γ` order.
#[derive(Clone, Debug)]
pub struct TiltingModule<F> {
    pub pairs: Vec<(usize, usize)>,
    pub summands: Vec<Module<F>>,
    pub total: Module<F>,
}

pub fn tilting_module<F: Field>(g: &GammaData) -> Result<TiltingModule<F>> {
    let map = g.source();
    let mut summands = Vec::with_capacity(g.len());
    for &(x, y) in g.pairs() {
        let fiber = map.fiber(y);
        let local = fiber.binary_search(&x).expect("x lies in F(y)");
        let p = projective_module(&map.fiber_poset(y), local);
        summands.push(pushforward(g, y, &p)?);
    }
    let total = direct_sum(g.poset(), &summands)?;
    Ok(TiltingModule { pairs: g.pairs().to_vec(), summands, total })
}

/// The endomorphism category of a list of modules with one-dimensional
/// (or zero) hom spaces; a morphism `s -> t` is a map `summands[s] -> summands[t]`.
pub fn end_category<F: Field>(summands: &[Module<F>]) -> Result<ThinCategory> {
    let n = summands.len();
    let mut generators = vec![None; n * n];
    for s in 0..n {
        for t in 0..n {
            let h = hom_space(&summands[s], &summands[t])?;
            if h.dimension > 1 {
                return Err(Error::Thickness { source_index: s, target: t, dim: h.dimension });
            }
            generators[s * n + t] = h.basis.first().map(normalize);
        }
    }
    ThinCategory::new(
        n,
        |s, t| generators[s * n + t].is_some(),
        |u, v, w| {
            let (f, g) = (generators[u * n + v].as_ref().unwrap(), generators[v * n + w].as_ref().unwrap());
            !f.then(g).is_zero()
        },
    )
}

/// Outcome of checking `T` against the zero-relation category of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingReport {
    pub gamma_size: usize,
    pub summand_count: usize,
    pub resolution_length: usize,
    /// `dim Ext^i(T, T)` for `0 ≤ i ≤ resolution_length`.
    pub ext_dims: Vec<usize>,
    /// `End(T)^op` and the zero-relation category have equal hom matrices.
    pub hom_matrices_equal: bool,
    /// ... and equal composition patterns.
    pub compositions_equal: bool,
}

impl TiltingReport {
    pub fn ext_vanishes(&self) -> bool {
        self.ext_dims.iter().skip(1).all(|&d| d == 0)
    }

    pub fn passes(&self) -> bool {
        self.ext_vanishes()
            && self.hom_matrices_equal
            && self.compositions_equal
            && self.summand_count == self.gamma_size
    }
}

impl fmt::Display for TiltingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAILED" };
        writeln!(f, "tilting check over |Γ| = {}", self.gamma_size)?;
        writeln!(f, "  summands: {} ({})", self.summand_count, mark(self.summand_count == self.gamma_size))?;
        writeln!(
            f,
            "  Ext^i(T,T), i = 0..{}: {:?} ({})",
            self.resolution_length,
            self.ext_dims,
            mark(self.ext_vanishes())
        )?;
        writeln!(f, "  End(T)^op hom matrix vs zero-relation category: {}", mark(self.hom_matrices_equal))?;
        writeln!(f, "  End(T)^op composition pattern vs zero-relation category: {}", mark(self.compositions_equal))?;
        writeln!(f, "  convention: a morphism s -> t of End(T) is a map T_s -> T_t; compared after taking op")?;
        write!(f, "  not checked: that add(T) generates the perfect complexes")
    }
}

/// Ext-vanishing for `T`, `End(T)^op` against the zero-relation category
/// under the pair indexing, and the summand count.
pub fn verify_tilting<F: Field>(g: &GammaData) -> Result<TiltingReport> {
    let t = tilting_module::<F>(g)?;
    let res = projective_resolution(&t.total)?;
    let ext_dims = res.ext_dims(&t.total)?;
    let end_op = end_category(&t.summands)?.op();
    let zero = gamma_zero_category(g)?;
    let n = g.len();
    let hom_matrices_equal = (0..n).all(|u| (0..n).all(|v| end_op.hom(u, v) == zero.hom(u, v)));
    let compositions_equal = hom_matrices_equal && end_op.same_structure(&zero);
    Ok(TiltingReport {
        gamma_size: n,
        summand_count: t.summands.len(),
        resolution_length: res.length(),
        ext_dims,
        hom_matrices_equal,
        compositions_equal,
    })
}
