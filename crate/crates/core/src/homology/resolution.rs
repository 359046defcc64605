use std::sync::Arc;

use super::{Dim, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::module::{ModuleMorphism, PosetModule, ProjTerm};
use crate::poset::Poset;

/// A minimal projective resolution with its augmentation and syzygies.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub complex: ProjComplex<F>,
    /// `P_0 -> M`; the zero map when `M = 0`.
    pub augmentation: ModuleMorphism<F>,
    /// `syzygies[k] = Ω^k(M)`, ending with the first zero syzygy.
    pub syzygies: Vec<PosetModule<F>>,
}

impl<F: Field> Resolution<F> {
    /// Projective dimension; 0 for the zero module.
    pub fn length(&self) -> usize {
        self.complex.length()
    }

    pub fn terms(&self) -> &[ProjTerm] {
        self.complex.terms()
    }

    /// `Hom_A(P_•, A)` over the opposite poset.
    pub fn hom_complex(&self, op: &Arc<Poset>) -> ProjComplex<F> {
        self.complex.hom_to_a(op)
    }

    /// Dimension vectors of `Ext^i(M, A)` for `i = 0..=pdim M`.
    pub fn ext_dims(&self, op: &Arc<Poset>) -> Vec<Vec<usize>> {
        let n = self.terms().len();
        let h = self.hom_complex(op);
        (0..n).map(|i| h.homology_dims(n - 1 - i)).collect()
    }

    /// `Ext^i(M, A)` as a module over the opposite poset.
    pub fn ext_module(&self, op: &Arc<Poset>, i: usize) -> PosetModule<F> {
        let n = self.terms().len();
        if i >= n {
            return PosetModule::zero(op, self.complex.field());
        }
        self.hom_complex(op).homology(n - 1 - i)
    }

    /// Least `i` with `Ext^i(M, A) != 0`.
    pub fn grade(&self, op: &Arc<Poset>) -> Dim {
        self.ext_dims(op)
            .iter()
            .position(|d| d.iter().any(|&x| x > 0))
            .map_or(Dim::Infinite, Dim::Finite)
    }

    /// Checks that the augmented complex is exact at every vertex.
    pub fn is_exact(&self) -> bool {
        let m = self.augmentation.target();
        let c = &self.complex;
        if c.terms().is_empty() {
            return m.is_zero();
        }
        c.homology_dims(0) == m.dims()
            && self.augmentation.is_surjective()
            && (1..=c.length()).all(|r| c.homology_dims(r).iter().all(|&d| d == 0))
            && self.augmentation.compose(&c.realize_diff(1)).is_zero()
    }
}

/// Minimal projective resolution, built by iterated projective covers.
///
/// Fails with `CapExceeded` if the resolution would be longer than the number
/// of poset elements, which cannot happen for a valid module.
pub fn minimal_proj_resolution<F: Field>(m: &PosetModule<F>) -> Result<Resolution<F>> {
    let poset = Arc::clone(m.poset_arc());
    let field = m.field().clone();
    let cap = poset.len();
    if m.is_zero() {
        let zero = PosetModule::zero(&poset, &field);
        return Ok(Resolution {
            complex: ProjComplex::empty(poset, field),
            augmentation: ModuleMorphism::zero(&zero, m),
            syzygies: vec![m.clone()],
        });
    }
    let (t0, augmentation) = m.projective_cover();
    let mut terms = vec![t0];
    let mut diffs = Vec::new();
    let mut syzygies = vec![m.clone()];
    let (mut k, mut incl) = augmentation.kernel();
    while !k.is_zero() {
        if terms.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        syzygies.push(k.clone());
        let (t, pi) = k.projective_cover();
        let d = incl.compose(&pi);
        diffs.push(scalar_matrix(&poset, &field, &t, terms.last().unwrap(), &d));
        terms.push(t);
        (k, incl) = pi.kernel();
    }
    syzygies.push(k);
    let complex = ProjComplex::new_unchecked(poset, field, terms, diffs);
    debug_assert!(complex.validate().is_ok());
    Ok(Resolution {
        complex,
        augmentation,
        syzygies,
    })
}

/// Reads off the scalar matrix of a morphism between realized projectives:
/// column `j` is the image of the generator of the `j`-th source summand.
fn scalar_matrix<F: Field>(
    p: &Poset,
    field: &F,
    source: &ProjTerm,
    target: &ProjTerm,
    d: &ModuleMorphism<F>,
) -> Mat<F> {
    let mut out = Mat::zeros(field, target.len(), source.len());
    for (j, &s) in source.summands().iter().enumerate() {
        let here = source.supported_at(p, s);
        let col = here
            .iter()
            .position(|&x| x == j)
            .expect("generator lives at its vertex");
        for (row, i) in target.supported_at(p, s).into_iter().enumerate() {
            out.set(i, j, d.maps()[s].get(row, col).clone());
        }
    }
    out
}

pub fn syzygy<F: Field>(m: &PosetModule<F>, k: usize) -> Result<PosetModule<F>> {
    let r = minimal_proj_resolution(m)?;
    Ok(r.syzygies
        .get(k)
        .cloned()
        .unwrap_or_else(|| PosetModule::zero(m.poset_arc(), m.field())))
}

pub fn pdim<F: Field>(m: &PosetModule<F>) -> Result<usize> {
    Ok(minimal_proj_resolution(m)?.length())
}

/// Injective dimension, as the projective dimension of the dual.
pub fn idim<F: Field>(m: &PosetModule<F>) -> Result<usize> {
    pdim(&m.dual())
}

/// A minimal injective coresolution `0 -> M -> I^0 -> I^1 -> ⋯`, obtained by
/// dualizing the minimal projective resolution of `D(M)`.
#[derive(Clone, Debug)]
pub struct InjCoresolution<F: Field> {
    /// `terms[i]` lists the summands `I(x)` of `I^i`.
    pub terms: Vec<ProjTerm>,
    pub dual_resolution: Resolution<F>,
}

impl<F: Field> InjCoresolution<F> {
    pub fn length(&self) -> usize {
        self.dual_resolution.length()
    }

    /// `mu[i][x]`: multiplicity of `I(x)` in `I^i`.
    pub fn bass_numbers(&self, n: usize) -> Vec<Vec<usize>> {
        self.terms.iter().map(|t| t.multiplicities(n)).collect()
    }
}

pub fn min_inj_coresolution<F: Field>(m: &PosetModule<F>) -> Result<InjCoresolution<F>> {
    let dual_resolution = minimal_proj_resolution(&m.dual())?;
    Ok(InjCoresolution {
        terms: dual_resolution.terms().to_vec(),
        dual_resolution,
    })
}

pub fn bass_numbers<F: Field>(m: &PosetModule<F>) -> Result<Vec<Vec<usize>>> {
    Ok(min_inj_coresolution(m)?.bass_numbers(m.poset().len()))
}
