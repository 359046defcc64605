//! Finite-dimensional right modules over the incidence algebra of a poset,
//! stored as representations of its Hasse quiver.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{column_basis, complement_coordinates, Field, Mat};
use crate::poset::{ElemSet, Poset};

/// A vector space at every element and a linear map along every cover.
///
/// The map for the cover `a ⋖ b` has shape `dims[b] × dims[a]` and is stored
/// at the index of `(a, b)` in `poset.covers()`.
#[derive(Clone, Debug, PartialEq)]
pub struct PosetModule<F: Field> {
    poset: Arc<Poset>,
    field: F,
    dims: Vec<usize>,
    edges: Vec<Mat<F>>,
}

/// A natural transformation between modules over the same poset.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism<F: Field> {
    source: PosetModule<F>,
    target: PosetModule<F>,
    maps: Vec<Mat<F>>,
}

/// A direct sum of indecomposable projectives `P(x)`, one entry per summand,
/// kept in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProjTerm {
    summands: Vec<usize>,
}

/// Maps `T(x, y)` along a fixed maximal chain for every `x <= y`.
#[derive(Clone, Debug)]
pub struct Transfers<F: Field> {
    n: usize,
    maps: Vec<Option<Mat<F>>>,
}

impl<F: Field> Transfers<F> {
    pub fn get(&self, x: usize, y: usize) -> Option<&Mat<F>> {
        self.maps[x * self.n + y].as_ref()
    }
}

impl ProjTerm {
    pub fn new(mut summands: Vec<usize>) -> Self {
        summands.sort_unstable();
        ProjTerm { summands }
    }

    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiplicity of `P(x)` for each element `x` of an `n`-element poset.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &s in &self.summands {
            out[s] += 1;
        }
        out
    }

    /// Positions of the summands that are nonzero at `z`, i.e. with `s <= z`.
    pub fn supported_at(&self, p: &Poset, z: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| p.leq(self.summands[i], z)).collect()
    }

    /// The module `⊕ P(s)` with the standard basis `p_z^s` at each `z`.
    pub fn realize<F: Field>(&self, poset: &Arc<Poset>, field: &F) -> PosetModule<F> {
        let p = poset.as_ref();
        let support: Vec<Vec<usize>> = (0..p.len()).map(|z| self.supported_at(p, z)).collect();
        let dims = support.iter().map(Vec::len).collect();
        let edges = p
            .covers()
            .iter()
            .map(|&(a, b)| {
                Mat::from_fn(field, support[b].len(), support[a].len(), |i, j| {
                    if support[b][i] == support[a][j] {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
            })
            .collect();
        PosetModule {
            poset: Arc::clone(poset),
            field: field.clone(),
            dims,
            edges,
        }
    }

    /// The morphism `⊕ P(s_j) -> ⊕ P(t_i)` whose `(i, j)` entry is a scalar
    /// multiple of the path from `t_i` to `s_j`. Entries with `t_i ≰ s_j` are
    /// ignored, since there is no such path.
    pub fn realize_map<F: Field>(
        poset: &Arc<Poset>,
        field: &F,
        source: &ProjTerm,
        target: &ProjTerm,
        matrix: &Mat<F>,
    ) -> ModuleMorphism<F> {
        let p = poset.as_ref();
        let maps = (0..p.len())
            .map(|z| {
                let rows = target.supported_at(p, z);
                let cols = source.supported_at(p, z);
                Mat::from_fn(field, rows.len(), cols.len(), |i, j| {
                    if p.leq(target.summands[rows[i]], source.summands[cols[j]]) {
                        matrix.get(rows[i], cols[j]).clone()
                    } else {
                        field.zero()
                    }
                })
            })
            .collect();
        ModuleMorphism {
            source: source.realize(poset, field),
            target: target.realize(poset, field),
            maps,
        }
    }

    pub fn format(&self, p: &Poset) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.summands.iter().map(|&s| format!("P({})", p.label(s))).collect();
        parts.join(" ⊕ ")
    }
}

impl<F: Field> PosetModule<F> {
    /// Checks matrix shapes; path independence is checked by `validate`.
    pub fn new(poset: Arc<Poset>, field: F, dims: Vec<usize>, edges: Vec<Mat<F>>) -> Result<Self> {
        if dims.len() != poset.len() {
            return Err(Error::Shape(format!(
                "{} dimensions for {} elements",
                dims.len(),
                poset.len()
            )));
        }
        if edges.len() != poset.covers().len() {
            return Err(Error::Shape(format!(
                "{} maps for {} covers",
                edges.len(),
                poset.covers().len()
            )));
        }
        for (&(a, b), e) in poset.covers().iter().zip(&edges) {
            if e.rows() != dims[b] || e.cols() != dims[a] {
                return Err(Error::Shape(format!(
                    "map {a}->{b} is {}x{}, expected {}x{}",
                    e.rows(),
                    e.cols(),
                    dims[b],
                    dims[a]
                )));
            }
        }
        Ok(PosetModule {
            poset,
            field,
            dims,
            edges,
        })
    }

    pub fn zero(poset: &Arc<Poset>, field: &F) -> Self {
        Self::indicator(poset, field, ElemSet::EMPTY)
    }

    /// One-dimensional on `support`, identity maps inside it. Only a module
    /// when `support` is convex.
    fn indicator(poset: &Arc<Poset>, field: &F, support: ElemSet) -> Self {
        let dims: Vec<usize> = (0..poset.len()).map(|x| support.contains(x) as usize).collect();
        let edges = poset
            .covers()
            .iter()
            .map(|&(a, b)| {
                if dims[a] == 1 && dims[b] == 1 {
                    Mat::identity(field, 1)
                } else {
                    Mat::zeros(field, dims[b], dims[a])
                }
            })
            .collect();
        PosetModule {
            poset: Arc::clone(poset),
            field: field.clone(),
            dims,
            edges,
        }
    }

    /// The simple module `S_x`. Panics if `x` is out of range.
    pub fn simple(poset: &Arc<Poset>, field: &F, x: usize) -> Self {
        Self::indicator(poset, field, ElemSet::singleton(x))
    }

    /// `P(x) = e_x A`, supported on `{ y : y >= x }`.
    pub fn projective(poset: &Arc<Poset>, field: &F, x: usize) -> Self {
        Self::indicator(poset, field, poset.above(x))
    }

    /// `I(x) = D(A e_x)`, supported on `{ y : y <= x }`.
    pub fn injective(poset: &Arc<Poset>, field: &F, x: usize) -> Self {
        Self::indicator(poset, field, poset.below(x))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let edges = self
            .edges
            .iter()
            .zip(&other.edges)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        PosetModule {
            poset: Arc::clone(&self.poset),
            field: self.field.clone(),
            dims,
            edges,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn poset_arc(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn edges(&self) -> &[Mat<F>] {
        &self.edges
    }

    /// Map along the cover `a ⋖ b`, if it is one.
    pub fn edge(&self, a: usize, b: usize) -> Option<&Mat<F>> {
        self.poset.cover_index(a, b).map(|i| &self.edges[i])
    }

    pub fn transfers(&self) -> Transfers<F> {
        let p = self.poset.as_ref();
        let n = p.len();
        let mut maps: Vec<Option<Mat<F>>> = vec![None; n * n];
        for z in p.linear_extension() {
            maps[z * n + z] = Some(Mat::identity(&self.field, self.dims[z]));
            for x in p.below(z).iter().filter(|&x| x != z) {
                let a = p.cocovers_of(z).intersection(p.above(x)).first().expect("x < z");
                let m = self.edge(a, z).unwrap().mul(maps[x * n + a].as_ref().unwrap());
                maps[x * n + z] = Some(m);
            }
        }
        Transfers { n, maps }
    }

    /// Map from the fibre at `x` to the fibre at `y`, or `None` unless `x <= y`.
    pub fn transfer(&self, x: usize, y: usize) -> Option<Mat<F>> {
        self.transfers().get(x, y).cloned()
    }

    /// Checks that all parallel paths act identically.
    pub fn validate(&self) -> Result<()> {
        let p = self.poset.as_ref();
        let t = self.transfers();
        for (k, &(a, b)) in p.covers().iter().enumerate() {
            for x in p.below(a).iter() {
                if self.edges[k].mul(t.get(x, a).unwrap()) != *t.get(x, b).unwrap() {
                    return Err(Error::PathIndependence { x, a, b });
                }
            }
        }
        Ok(())
    }

    /// Columns spanning the radical at `y`: the images of all arrows into `y`.
    fn radical_span(&self, y: usize) -> Mat<F> {
        self.poset
            .cocovers_of(y)
            .iter()
            .fold(Mat::zeros(&self.field, self.dims[y], 0), |acc, a| {
                acc.hcat(self.edge(a, y).unwrap())
            })
    }

    /// Standard basis vectors at `y` completing the radical to the full fibre.
    pub fn top_coordinates(&self, y: usize) -> Vec<usize> {
        complement_coordinates(&self.radical_span(y))
    }

    /// Multiplicity of `S_y` in the top, for every `y`.
    pub fn top(&self) -> Vec<usize> {
        (0..self.poset.len())
            .map(|y| self.dims[y] - self.radical_span(y).rank())
            .collect()
    }

    /// Multiplicity of `S_y` in the socle, for every `y`.
    pub fn socle(&self) -> Vec<usize> {
        (0..self.poset.len())
            .map(|y| {
                let stacked = self
                    .poset
                    .covers_of(y)
                    .iter()
                    .fold(Mat::zeros(&self.field, 0, self.dims[y]), |acc, b| {
                        acc.vcat(self.edge(y, b).unwrap())
                    });
                self.dims[y] - stacked.rank()
            })
            .collect()
    }

    pub fn radical(&self) -> (PosetModule<F>, ModuleMorphism<F>) {
        let bases = (0..self.poset.len())
            .map(|y| column_basis(&self.radical_span(y)))
            .collect();
        self.submodule(bases)
    }

    /// Submodule spanned by a column basis at every element. The subspaces
    /// must be closed under the arrows.
    pub fn submodule(&self, bases: Vec<Mat<F>>) -> (PosetModule<F>, ModuleMorphism<F>) {
        let edges = self
            .poset
            .covers()
            .iter()
            .zip(&self.edges)
            .map(|(&(a, b), e)| {
                bases[b]
                    .solve(&e.mul(&bases[a]))
                    .expect("subspaces are closed under the action")
            })
            .collect();
        let sub = PosetModule {
            poset: Arc::clone(&self.poset),
            field: self.field.clone(),
            dims: bases.iter().map(Mat::cols).collect(),
            edges,
        };
        let incl = ModuleMorphism {
            source: sub.clone(),
            target: self.clone(),
            maps: bases,
        };
        (sub, incl)
    }

    /// Quotient by a family of closed subspaces, given by spanning columns.
    pub fn quotient(&self, spans: &[Mat<F>]) -> (PosetModule<F>, ModuleMorphism<F>) {
        let f = &self.field;
        let n = self.poset.len();
        let mut lifts = Vec::with_capacity(n);
        let mut projections = Vec::with_capacity(n);
        for (y, span) in spans.iter().enumerate() {
            let d = self.dims[y];
            let basis = column_basis(span);
            let keep = complement_coordinates(&basis);
            let all: Vec<usize> = (0..d).collect();
            let lift = Mat::identity(f, d).select(&all, &keep);
            let inv = basis.hcat(&lift).inverse().expect("complement completes a basis");
            let rows: Vec<usize> = (basis.cols()..d).collect();
            projections.push(inv.select(&rows, &all));
            lifts.push(lift);
        }
        let edges = self
            .poset
            .covers()
            .iter()
            .zip(&self.edges)
            .map(|(&(a, b), e)| projections[b].mul(&e.mul(&lifts[a])))
            .collect();
        let quot = PosetModule {
            poset: Arc::clone(&self.poset),
            field: f.clone(),
            dims: lifts.iter().map(Mat::cols).collect(),
            edges,
        };
        let proj = ModuleMorphism {
            source: self.clone(),
            target: quot.clone(),
            maps: projections,
        };
        (quot, proj)
    }

    /// The projective cover `⊕ P(y)^{top_y} -> self`.
    pub fn projective_cover(&self) -> (ProjTerm, ModuleMorphism<F>) {
        let p = self.poset.as_ref();
        let mut generators = Vec::new();
        for y in 0..p.len() {
            for k in self.top_coordinates(y) {
                generators.push((y, k));
            }
        }
        let term = ProjTerm {
            summands: generators.iter().map(|g| g.0).collect(),
        };
        let t = self.transfers();
        let maps = (0..p.len())
            .map(|z| {
                let columns: Vec<Vec<F::Elem>> = term
                    .supported_at(p, z)
                    .into_iter()
                    .map(|j| {
                        let (y, k) = generators[j];
                        t.get(y, z).unwrap().column_vec(k)
                    })
                    .collect();
                Mat::from_columns(&self.field, self.dims[z], &columns)
            })
            .collect();
        let cover = term.realize(&self.poset, &self.field);
        (
            term,
            ModuleMorphism {
                source: cover,
                target: self.clone(),
                maps,
            },
        )
    }

    /// The summands of `self` if it is projective.
    pub fn decompose_projective(&self) -> Option<ProjTerm> {
        let (term, epi) = self.projective_cover();
        (epi.source.total_dim() == self.total_dim()).then_some(term)
    }

    /// `D(self) = Hom_K(self, K)` over the opposite poset.
    pub fn dual(&self) -> PosetModule<F> {
        self.dual_over(&Arc::new(self.poset.opposite()))
    }

    /// Like `dual`, reusing an already built opposite poset.
    pub fn dual_over(&self, op: &Arc<Poset>) -> PosetModule<F> {
        let edges = op
            .covers()
            .iter()
            .map(|&(b, a)| {
                self.edge(a, b)
                    .expect("opposite covers are reversed covers")
                    .transpose()
            })
            .collect();
        PosetModule {
            poset: Arc::clone(op),
            field: self.field.clone(),
            dims: self.dims.clone(),
            edges,
        }
    }

    /// Dimension vector as `label:dim` pairs over the support.
    pub fn format_dims(&self) -> String {
        let parts: Vec<String> = (0..self.poset.len())
            .filter(|&x| self.dims[x] > 0)
            .map(|x| format!("{}:{}", self.poset.label(x), self.dims[x]))
            .collect();
        format!("[{}]", parts.join(" "))
    }
}

impl<F: Field> ModuleMorphism<F> {
    /// Checks shapes and naturality.
    pub fn new(source: PosetModule<F>, target: PosetModule<F>, maps: Vec<Mat<F>>) -> Result<Self> {
        let f = ModuleMorphism { source, target, maps };
        let n = f.source.poset.len();
        if f.target.poset.len() != n || f.maps.len() != n {
            return Err(Error::Shape("morphism between different posets".into()));
        }
        for (y, m) in f.maps.iter().enumerate() {
            if m.rows() != f.target.dims[y] || m.cols() != f.source.dims[y] {
                return Err(Error::Shape(format!("vertex map at {y} has the wrong shape")));
            }
        }
        if let Some((a, b)) = f.first_non_natural_cover() {
            return Err(Error::Shape(format!("morphism is not natural along {a}->{b}")));
        }
        Ok(f)
    }

    pub fn identity(m: &PosetModule<F>) -> Self {
        let maps = m.dims.iter().map(|&d| Mat::identity(&m.field, d)).collect();
        ModuleMorphism {
            source: m.clone(),
            target: m.clone(),
            maps,
        }
    }

    pub fn zero(source: &PosetModule<F>, target: &PosetModule<F>) -> Self {
        let maps = (0..source.poset.len())
            .map(|y| Mat::zeros(&source.field, target.dims[y], source.dims[y]))
            .collect();
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &PosetModule<F> {
        &self.source
    }

    pub fn target(&self) -> &PosetModule<F> {
        &self.target
    }

    pub fn maps(&self) -> &[Mat<F>] {
        &self.maps
    }

    pub fn first_non_natural_cover(&self) -> Option<(usize, usize)> {
        self.source.poset.covers().iter().enumerate().find_map(|(k, &(a, b))| {
            let lhs = self.target.edges[k].mul(&self.maps[a]);
            let rhs = self.maps[b].mul(&self.source.edges[k]);
            (lhs != rhs).then_some((a, b))
        })
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.mul(b)).collect();
        ModuleMorphism {
            source: g.source.clone(),
            target: self.target.clone(),
            maps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Mat::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().zip(&self.source.dims).all(|(m, &d)| m.rank() == d)
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().zip(&self.target.dims).all(|(m, &d)| m.rank() == d)
    }

    pub fn kernel(&self) -> (PosetModule<F>, ModuleMorphism<F>) {
        let bases = self.maps.iter().map(Mat::kernel_basis).collect();
        self.source.submodule(bases)
    }

    pub fn cokernel(&self) -> (PosetModule<F>, ModuleMorphism<F>) {
        self.target.quotient(&self.maps)
    }

    pub fn image(&self) -> (PosetModule<F>, ModuleMorphism<F>) {
        let bases = self.maps.iter().map(column_basis).collect();
        self.target.submodule(bases)
    }

    /// Factors `self` through the monomorphism `incl`, whose image must
    /// contain the image of `self`.
    pub fn lift_through(&self, incl: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        let maps = self
            .maps
            .iter()
            .zip(&incl.maps)
            .map(|(m, i)| i.solve(m).expect("image lies in the subobject"))
            .collect();
        ModuleMorphism {
            source: self.source.clone(),
            target: incl.source.clone(),
            maps,
        }
    }
}

/// `N_C = Σ p_x^m A` for an antichain `C`, with its inclusion into `P(m)`.
pub fn antichain_submodule<F: Field>(
    l: &Lattice,
    field: &F,
    c: ElemSet,
) -> Result<(PosetModule<F>, ModuleMorphism<F>)> {
    let p = l.poset();
    if !c.is_subset(p.elements()) || !p.is_antichain(c) {
        return Err(Error::NotAnAntichain);
    }
    let poset = l.poset_arc();
    let pm = PosetModule::projective(&poset, field, l.min_elt());
    let support = p.up_set(c);
    let bases = (0..p.len())
        .map(|u| {
            if support.contains(u) {
                Mat::identity(field, 1)
            } else {
                Mat::zeros(field, pm.dims[u], 0)
            }
        })
        .collect();
    Ok(pm.submodule(bases))
}

/// `M_C = P(m) / N_C`.
pub fn antichain_module<F: Field>(l: &Lattice, field: &F, c: ElemSet) -> Result<PosetModule<F>> {
    let (_, incl) = antichain_submodule(l, field, c)?;
    Ok(incl.cokernel().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ideal_lattice, Lattice};
    use crate::linalg::{PrimeField, Rationals};

    fn arc(p: Poset) -> Arc<Poset> {
        Arc::new(p)
    }

    fn b2() -> Lattice {
        ideal_lattice(&Poset::antichain(2).unwrap()).unwrap()
    }

    fn diamond() -> Arc<Poset> {
        arc(Poset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap())
    }

    #[test]
    fn constructors_on_a_chain() {
        let c3 = arc(Poset::chain(3).unwrap());
        let q = Rationals;
        assert_eq!(PosetModule::projective(&c3, &q, 0).dims(), &[1, 1, 1]);
        assert_eq!(PosetModule::injective(&c3, &q, 1).dims(), &[1, 1, 0]);
        for x in 0..3 {
            let s = PosetModule::simple(&c3, &q, x);
            assert_eq!(s.total_dim(), 1);
            s.validate().unwrap();
        }
    }

    #[test]
    fn projective_injective_on_b2() {
        let l = b2();
        let p = l.poset_arc();
        let q = Rationals;
        let pm = PosetModule::projective(&p, &q, l.min_elt());
        assert_eq!(pm, PosetModule::injective(&p, &q, l.max_elt()));
        assert_eq!(pm.dims(), &[1, 1, 1, 1]);
    }

    #[test]
    fn detects_non_commuting_square() {
        let l = b2();
        let p = l.poset_arc();
        let q = Rationals;
        let mut edges: Vec<Mat<Rationals>> = p.covers().iter().map(|_| Mat::identity(&q, 1)).collect();
        edges[0] = Mat::from_i64(&q, 1, 1, &[2]);
        let m = PosetModule::new(Arc::clone(&p), q, vec![1; 4], edges).unwrap();
        assert!(matches!(m.validate(), Err(Error::PathIndependence { .. })));
        let good = PosetModule::projective(&p, &q, 0).direct_sum(&PosetModule::injective(&p, &q, 3));
        good.validate().unwrap();
    }

    #[test]
    fn shape_errors() {
        let p = arc(Poset::chain(2).unwrap());
        let q = Rationals;
        let bad = PosetModule::new(p, q, vec![1, 1], vec![Mat::zeros(&q, 2, 1)]);
        assert!(matches!(bad, Err(Error::Shape(_))));
    }

    #[test]
    fn tops_and_socles() {
        let p = diamond();
        let q = Rationals;
        for x in 0..5 {
            let mut e = vec![0; 5];
            e[x] = 1;
            assert_eq!(PosetModule::projective(&p, &q, x).top(), e);
            assert_eq!(PosetModule::injective(&p, &q, x).socle(), e);
        }
        let ix = PosetModule::injective(&p, &q, 2);
        assert_eq!(ix.top(), vec![1, 0, 0, 0, 0]);
        assert_eq!(PosetModule::projective(&p, &q, 0).socle(), vec![0, 0, 0, 0, 1]);
        let (rad, incl) = PosetModule::projective(&p, &q, 0).radical();
        assert_eq!(rad.dims(), &[0, 1, 1, 1, 1]);
        assert!(incl.is_injective());
    }

    #[test]
    fn projective_covers() {
        let p = diamond();
        let q = Rationals;
        let (term, epi) = PosetModule::projective(&p, &q, 2).projective_cover();
        assert_eq!(term.summands(), &[2]);
        assert!(epi.is_surjective() && epi.is_injective());
        let (term, epi) = PosetModule::injective(&p, &q, 3).projective_cover();
        assert_eq!(term.summands(), &[0]);
        assert!(epi.is_surjective());
        assert_eq!(epi.first_non_natural_cover(), None);
        let (term, _) = PosetModule::simple(&p, &q, 1).projective_cover();
        assert_eq!(term.summands(), &[1]);
    }

    #[test]
    fn kernels_and_cokernels() {
        let c2 = arc(Poset::chain(2).unwrap());
        let q = Rationals;
        let p0 = PosetModule::projective(&c2, &q, 0);
        let (k, _) = ModuleMorphism::identity(&p0).kernel();
        assert!(k.is_zero());
        let (k, _) = ModuleMorphism::zero(&p0, &p0).kernel();
        assert_eq!(k.dims(), p0.dims());
        let p1 = PosetModule::projective(&c2, &q, 1);
        let incl = ModuleMorphism::new(p1, p0, vec![Mat::zeros(&q, 1, 0), Mat::identity(&q, 1)]).unwrap();
        let (coker, proj) = incl.cokernel();
        assert_eq!(coker.dims(), &[1, 0]);
        assert!(proj.is_surjective());
        coker.validate().unwrap();
    }

    #[test]
    fn duality() {
        let p = diamond();
        let op = Arc::new(p.opposite());
        let f = PrimeField::new(3).unwrap();
        for x in 0..5 {
            assert_eq!(
                PosetModule::simple(&p, &f, x).dual_over(&op),
                PosetModule::simple(&op, &f, x)
            );
            assert_eq!(
                PosetModule::projective(&p, &f, x).dual_over(&op),
                PosetModule::injective(&op, &f, x)
            );
            assert_eq!(
                PosetModule::injective(&p, &f, x).dual_over(&op),
                PosetModule::projective(&op, &f, x)
            );
        }
        let m = PosetModule::injective(&p, &f, 3).direct_sum(&PosetModule::projective(&p, &f, 1));
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn antichain_modules_on_b2() {
        let l = b2();
        let q = Rationals;
        let m = l.min_elt();
        let (n, _) = antichain_submodule(&l, &q, ElemSet::EMPTY).unwrap();
        assert!(n.is_zero());
        assert_eq!(
            antichain_module(&l, &q, ElemSet::EMPTY).unwrap(),
            PosetModule::projective(&l.poset_arc(), &q, m)
        );
        assert!(antichain_module(&l, &q, ElemSet::singleton(m)).unwrap().is_zero());
        let atoms = l.poset().covers_of(m);
        let mc = antichain_module(&l, &q, atoms).unwrap();
        assert_eq!(mc, PosetModule::simple(&l.poset_arc(), &q, m));
        assert_eq!(antichain_module(&l, &q, ElemSet(0b0011)), Err(Error::NotAnAntichain));
    }

    #[test]
    fn projectivity() {
        let p = diamond();
        let q = Rationals;
        let m = PosetModule::projective(&p, &q, 3).direct_sum(&PosetModule::projective(&p, &q, 1));
        assert_eq!(m.decompose_projective().unwrap().summands(), &[1, 3]);
        assert_eq!(PosetModule::simple(&p, &q, 1).decompose_projective(), None);
        assert_eq!(
            PosetModule::injective(&p, &q, 4)
                .decompose_projective()
                .unwrap()
                .summands(),
            &[0]
        );
    }

    #[test]
    fn realize_map_drops_entries_without_a_path() {
        // Square 0 < 1, 2 < 3: no map P(1) -> P(3), so that entry must vanish.
        let p = arc(Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap());
        let q = Rationals;
        let source = ProjTerm::new(vec![1]);
        let target = ProjTerm::new(vec![0, 0, 3]);
        let f = ProjTerm::realize_map(&p, &q, &source, &target, &Mat::from_i64(&q, 3, 1, &[-1, 0, -1]));
        assert_eq!(f.first_non_natural_cover(), None);
        let (coker, _) = f.cokernel();
        assert_eq!(coker.validate(), Ok(()));
        assert_eq!(coker.dims(), &[2, 1, 2, 2]);
    }
}
