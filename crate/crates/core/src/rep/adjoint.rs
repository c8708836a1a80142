//! Restriction along `i_y : F(y) -> Γ, x ↦ (x, y)` and its exact right adjoint.

use crate::error::{Error, Result};
use crate::gamma::GammaData;
use crate::linalg::Matrix;
use crate::scalar::Field;

use super::module::{Module, Morphism};

fn local_index(fiber: &[usize], x: usize) -> usize {
    fiber.binary_search(&x).expect("element of the fiber")
}

/// `(i_y)_⋆ φ`: `φ(a)` at `(a, b)` when `b ≤ y`, zero otherwise.
///
/// Since `Hom((a, b), (a, y))` is one-dimensional when `b ≤ y`, the value is
/// identified with `φ(a)`; the structure maps are those of `φ` in the
/// `x`-direction and identities in the `y`-direction.
pub fn pushforward<F: Field>(g: &GammaData, y: usize, phi: &Module<F>) -> Result<Module<F>> {
    let map = g.source();
    if y >= map.y().size() {
        return Err(Error::Index { index: y, size: map.y().size() });
    }
    if phi.base() != &map.fiber_poset(y) {
        return Err(Error::Base(format!("module is not based on F({y})")));
    }
    let fiber = map.fiber(y);
    let below = |e: usize| map.y().leq(g.pairs()[e].1, y);
    let dims = (0..g.len())
        .map(|e| if below(e) { phi.dim(local_index(&fiber, g.pairs()[e].0)) } else { 0 })
        .collect::<Vec<_>>();
    Module::from_cover_fn(g.poset().clone(), dims.clone(), |e1, e2| {
        if below(e2) {
            let (a, c) = (g.pairs()[e1].0, g.pairs()[e2].0);
            phi.transition(local_index(&fiber, a), local_index(&fiber, c)).clone()
        } else {
            Matrix::zeros(dims[e2], dims[e1])
        }
    })
}

/// `(i_y)_⋆ η` for a morphism `η : φ -> ψ` of `F(y)`-modules.
pub fn pushforward_morphism<F: Field>(g: &GammaData, y: usize, eta: &Morphism<F>) -> Morphism<F> {
    let map = g.source();
    let fiber = map.fiber(y);
    let components = g
        .pairs()
        .iter()
        .map(|&(a, b)| {
            if map.y().leq(b, y) {
                eta.components[local_index(&fiber, a)].clone()
            } else {
                Matrix::zeros(0, 0)
            }
        })
        .collect();
    Morphism { components }
}

/// `i_y^{-1} G`: `x ↦ G(x, y)` on `F(y)`.
pub fn restriction<F: Field>(g: &GammaData, y: usize, module: &Module<F>) -> Result<Module<F>> {
    if module.base() != g.poset() {
        return Err(Error::Base("module is not based on Γ".into()));
    }
    let map = g.source();
    let fiber = map.fiber(y);
    let at = |x: usize| g.index_of(x, y).expect("fiber element lies in Γ");
    let dims = fiber.iter().map(|&x| module.dim(at(x))).collect();
    Module::from_cover_fn(map.fiber_poset(y), dims, |u, v| module.transition(at(fiber[u]), at(fiber[v])).clone())
}

/// `i_y^{-1} η`.
pub fn restriction_morphism<F: Field>(g: &GammaData, y: usize, eta: &Morphism<F>) -> Morphism<F> {
    let components = g
        .source()
        .fiber(y)
        .iter()
        .map(|&x| eta.components[g.index_of(x, y).expect("fiber element lies in Γ")].clone())
        .collect();
    Morphism { components }
}
