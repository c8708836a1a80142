use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poset::Poset;
use crate::scalar::Field;

/// A representation of a finite poset: a vector space per element and a
/// linear map per Hasse cover, with all cover-path composites between two
/// elements equal.
#[derive(Clone, Debug)]
pub struct Module<F> {
    base: Poset,
    covers: Vec<(usize, usize)>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
    /// Structure map `u -> v` for every `u ≤ v`, row-major by `(u, v)`.
    transitions: Vec<Option<Matrix<F>>>,
}

impl<F: Field> Module<F> {
    /// Builds a module from one matrix per cover of `base` (in the order of
    /// [`Poset::covers`]), checking shapes and commutativity.
    pub fn new(base: Poset, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let covers = base.covers();
        if dims.len() != base.size() {
            return Err(Error::Module(format!("{} dimensions for {} elements", dims.len(), base.size())));
        }
        if maps.len() != covers.len() {
            return Err(Error::Module(format!("{} maps for {} covers", maps.len(), covers.len())));
        }
        for (&(u, v), m) in covers.iter().zip(&maps) {
            if m.rows() != dims[v] || m.cols() != dims[u] {
                return Err(Error::Module(format!(
                    "map {u} -> {v} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[v],
                    dims[u]
                )));
            }
        }
        let mut module = Module { base, covers, dims, maps, transitions: Vec::new() };
        module.transitions = module.compose_transitions()?;
        Ok(module)
    }

    /// Builds a module from a closure giving the matrix of each cover.
    pub fn from_cover_fn(base: Poset, dims: Vec<usize>, mut f: impl FnMut(usize, usize) -> Matrix<F>) -> Result<Self> {
        let maps = base.covers().into_iter().map(|(u, v)| f(u, v)).collect();
        Self::new(base, dims, maps)
    }

    pub fn zero(base: &Poset) -> Self {
        let dims = vec![0; base.size()];
        Self::from_cover_fn(base.clone(), dims, |_, _| Matrix::zeros(0, 0)).expect("zero module")
    }

    fn compose_transitions(&self) -> Result<Vec<Option<Matrix<F>>>> {
        let n = self.base.size();
        let mut t: Vec<Option<Matrix<F>>> = vec![None; n * n];
        for v in self.base.linear_extension() {
            t[v * n + v] = Some(Matrix::identity(self.dims[v]));
            let lower: Vec<(usize, &Matrix<F>)> = self
                .covers
                .iter()
                .zip(&self.maps)
                .filter(|(&(_, b), _)| b == v)
                .map(|(&(a, _), m)| (a, m))
                .collect();
            for u in 0..n {
                if !self.base.lt(u, v) {
                    continue;
                }
                let mut found: Option<Matrix<F>> = None;
                for &(w, m) in &lower {
                    if !self.base.leq(u, w) {
                        continue;
                    }
                    let path = m * t[u * n + w].as_ref().expect("computed earlier in the extension");
                    match &found {
                        None => found = Some(path),
                        Some(prev) if !prev.sub(&path).is_zero() => {
                            return Err(Error::Module(format!(
                                "paths from {u} to {v} through different covers disagree"
                            )));
                        }
                        _ => {}
                    }
                }
                t[u * n + v] = found;
            }
        }
        Ok(t)
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero_module(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// The structure map `M(u) -> M(v)`; panics unless `u ≤ v`.
    pub fn transition(&self, u: usize, v: usize) -> &Matrix<F> {
        self.transitions[u * self.base.size() + v]
            .as_ref()
            .unwrap_or_else(|| panic!("{u} is not below {v}"))
    }

    /// Equal bases, dimensions and cover matrices.
    pub fn same_as(&self, other: &Module<F>) -> bool {
        self.base == other.base && self.dims == other.dims && self.maps == other.maps
    }
}

fn unit_or_zero<F: Field>(rows: usize, cols: usize) -> Matrix<F> {
    if rows == 1 && cols == 1 {
        Matrix::identity(1)
    } else {
        Matrix::zeros(rows, cols)
    }
}

/// A module with dimension 0 or 1 at each element of `support` and identity
/// maps between supported elements.
fn indicator<F: Field>(base: &Poset, support: impl Fn(usize) -> bool) -> Result<Module<F>> {
    let dims: Vec<usize> = (0..base.size()).map(|v| usize::from(support(v))).collect();
    Module::from_cover_fn(base.clone(), dims.clone(), |u, v| unit_or_zero(dims[v], dims[u]))
}

/// `M_{a,b}`: `k` on `[a, b]`, identity maps inside the interval.
pub fn interval_module<F: Field>(base: &Poset, a: usize, b: usize) -> Result<Module<F>> {
    if !base.leq(a, b) {
        return Err(Error::Interval(a, b));
    }
    indicator(base, |x| base.leq(a, x) && base.leq(x, b))
}

/// `P_y`: `k` on the up-set of `y`.
pub fn projective_module<F: Field>(base: &Poset, y: usize) -> Module<F> {
    indicator(base, |z| base.leq(y, z)).expect("projectives are modules")
}

/// `I_y`: `k` on the down-set of `y`.
pub fn injective_module<F: Field>(base: &Poset, y: usize) -> Module<F> {
    indicator(base, |z| base.leq(z, y)).expect("injectives are modules")
}

/// The simple module at `y`.
pub fn simple_module<F: Field>(base: &Poset, y: usize) -> Module<F> {
    indicator(base, |z| z == y).expect("simples are modules")
}

/// Generators `j` of `⊕_j P_{gens[j]}` that are nonzero at `z`, in order.
pub(crate) fn generators_at(base: &Poset, gens: &[usize], z: usize) -> Vec<usize> {
    (0..gens.len()).filter(|&j| base.leq(gens[j], z)).collect()
}

/// `⊕_j P_{gens[j]}`; the basis at `z` is the generators below `z`, in order.
pub fn projective_sum<F: Field>(base: &Poset, gens: &[usize]) -> Module<F> {
    let dims: Vec<usize> = (0..base.size()).map(|z| generators_at(base, gens, z).len()).collect();
    Module::from_cover_fn(base.clone(), dims, |u, v| {
        let (gu, gv) = (generators_at(base, gens, u), generators_at(base, gens, v));
        Matrix::from_fn(gv.len(), gu.len(), |r, c| if gv[r] == gu[c] { F::one() } else { F::zero() })
    })
    .expect("sums of projectives are modules")
}

/// The map `⊕_j P_{source[j]} -> ⊕_k P_{target[k]}` whose coefficient matrix
/// has entry `(k, j)` for the generator `k` term of the image of generator `j`.
///
/// Entries with `target[k] ≰ source[j]` must be zero.
pub fn projective_map<F: Field>(base: &Poset, source: &[usize], target: &[usize], coeffs: &Matrix<F>) -> Result<Morphism<F>> {
    if coeffs.rows() != target.len() || coeffs.cols() != source.len() {
        return Err(Error::Module("coefficient matrix has the wrong shape".into()));
    }
    for (k, &t) in target.iter().enumerate() {
        for (j, &s) in source.iter().enumerate() {
            if !base.leq(t, s) && !coeffs[(k, j)].is_negligible() {
                return Err(Error::Module(format!("no map from P_{s} to P_{t}")));
            }
        }
    }
    let components = (0..base.size())
        .map(|z| {
            let (rows, cols) = (generators_at(base, target, z), generators_at(base, source, z));
            Matrix::from_fn(rows.len(), cols.len(), |r, c| coeffs[(rows[r], cols[c])].clone())
        })
        .collect();
    Ok(Morphism { components })
}

/// Direct sum with block-diagonal structure maps.
pub fn direct_sum<F: Field>(base: &Poset, summands: &[Module<F>]) -> Result<Module<F>> {
    for s in summands {
        if s.base() != base {
            return Err(Error::Base("direct summands over different posets".into()));
        }
    }
    let dims = (0..base.size()).map(|v| summands.iter().map(|s| s.dim(v)).sum()).collect();
    let maps = (0..base.covers().len())
        .map(|k| Matrix::block_diagonal(&summands.iter().map(|s| s.cover_maps()[k].clone()).collect::<Vec<_>>()))
        .collect();
    Module::new(base.clone(), dims, maps)
}

/// A natural transformation, one matrix `M(v) -> N(v)` per element.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism<F> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> Morphism<F> {
    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        let components = (0..source.base().size()).map(|v| Matrix::zeros(target.dim(v), source.dim(v))).collect();
        Morphism { components }
    }

    pub fn identity(m: &Module<F>) -> Self {
        Morphism { components: m.dims().iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism<F>) -> Morphism<F> {
        let components = self.components.iter().zip(&other.components).map(|(f, g)| g * f).collect();
        Morphism { components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    /// Whether the components have the right shapes and commute with every cover map.
    pub fn is_natural(&self, source: &Module<F>, target: &Module<F>) -> bool {
        if self.components.len() != source.base().size() {
            return false;
        }
        let shapes = self
            .components
            .iter()
            .enumerate()
            .all(|(v, c)| c.rows() == target.dim(v) && c.cols() == source.dim(v));
        shapes
            && source.covers().iter().enumerate().all(|(k, &(u, v))| {
                let lhs = &target.cover_maps()[k] * &self.components[u];
                let rhs = &self.components[v] * &source.cover_maps()[k];
                lhs.sub(&rhs).is_zero()
            })
    }

    /// Rank of each component.
    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(Matrix::rank).collect()
    }
}

/// Kernel of `f : source -> target` with its inclusion into `source`.
pub fn kernel<F: Field>(source: &Module<F>, f: &Morphism<F>) -> (Module<F>, Morphism<F>) {
    let base = source.base();
    let bases: Vec<Matrix<F>> = f.components.iter().map(Matrix::nullspace).collect();
    let dims = bases.iter().map(Matrix::cols).collect();
    let k = Module::from_cover_fn(base.clone(), dims, |u, v| {
        let pushed = source.transition(u, v) * &bases[u];
        bases[v].solve(&pushed).expect("kernel is a submodule")
    })
    .expect("kernels are modules");
    (k, Morphism { components: bases })
}

/// Cokernel of `f : source -> target` with its projection from `target`.
pub fn cokernel<F: Field>(target: &Module<F>, f: &Morphism<F>) -> (Module<F>, Morphism<F>) {
    let base = target.base();
    // Rows spanning the annihilator of the image give the projection.
    let projections: Vec<Matrix<F>> = f.components.iter().map(|c| c.transpose().nullspace().transpose()).collect();
    let sections: Vec<Matrix<F>> = projections
        .iter()
        .map(|p| p.right_inverse().expect("projection has full row rank"))
        .collect();
    let dims = projections.iter().map(Matrix::rows).collect();
    let c = Module::from_cover_fn(base.clone(), dims, |u, v| &(&projections[v] * target.transition(u, v)) * &sections[u])
        .expect("cokernels are modules");
    (c, Morphism { components: projections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type M = Module<Rational>;

    #[test]
    fn interval_modules() {
        let a2 = Poset::chain(2);
        let m: M = interval_module(&a2, 0, 1).unwrap();
        assert_eq!(m.dims(), &[1, 1]);
        assert_eq!(m.cover_maps()[0], Matrix::identity(1));
        let s: M = interval_module(&a2, 0, 0).unwrap();
        assert_eq!(s.dims(), &[1, 0]);
        assert!(matches!(interval_module::<Rational>(&a2, 1, 0), Err(Error::Interval(1, 0))));
        let d = Poset::chain(2).product(&Poset::chain(2));
        let full: M = interval_module(&d, 0, 3).unwrap();
        assert_eq!(full.dims(), &[1, 1, 1, 1]);
        assert_eq!(full.transition(0, 3), &Matrix::identity(1));
    }

    #[test]
    fn projectives_and_injectives() {
        let a2 = Poset::chain(2);
        assert_eq!(projective_module::<Rational>(&a2, 0).dims(), &[1, 1]);
        assert_eq!(projective_module::<Rational>(&a2, 1).dims(), &[0, 1]);
        assert_eq!(injective_module::<Rational>(&a2, 1).dims(), &[1, 1]);
        assert_eq!(injective_module::<Rational>(&a2, 0).dims(), &[1, 0]);
        let p = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        for z in 0..4 {
            let total: usize = (0..4).map(|y| projective_module::<Rational>(&p, y).dim(z)).sum();
            assert_eq!(total, p.down_set(z).len());
        }
    }

    #[test]
    fn non_commuting_square_rejected() {
        let d = Poset::chain(2).product(&Poset::chain(2));
        let one = Matrix::<Rational>::identity(1);
        let mut maps = vec![one.clone(); 4];
        maps[3] = one.scale(&Rational::from_integer(2.into()));
        assert!(matches!(Module::new(d, vec![1; 4], maps), Err(Error::Module(_))));
    }

    #[test]
    fn kernel_and_cokernel_of_cover() {
        // P_1 -> P_0 on A_2 is the inclusion; its cokernel is the simple at 0.
        let a2 = Poset::chain(2);
        let p0: M = projective_module(&a2, 0);
        let p1: M = projective_module(&a2, 1);
        let f = Morphism { components: vec![Matrix::zeros(1, 0), Matrix::identity(1)] };
        assert!(f.is_natural(&p1, &p0));
        let (k, _) = kernel(&p1, &f);
        assert!(k.is_zero_module());
        let (c, proj) = cokernel(&p0, &f);
        assert_eq!(c.dims(), &[1, 0]);
        assert!(proj.is_natural(&p0, &c));
    }

    #[test]
    fn sums() {
        let a2 = Poset::chain(2);
        let s = projective_sum::<Rational>(&a2, &[0, 1]);
        assert_eq!(s.dims(), &[1, 2]);
        let d = direct_sum(&a2, &[projective_module(&a2, 0), projective_module(&a2, 1)]).unwrap();
        assert!(d.same_as(&s));
    }
}
