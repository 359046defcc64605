use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{minimal_proj_resolution, Dim};
use crate::error::Result;
use crate::linalg::{Field, FieldSpec, PrimeField, Rationals};
use crate::module::{PosetModule, ProjTerm};
use crate::poset::Poset;

/// `μ^i(x, P(y))`: multiplicity of `I(x)` in the `i`-th term of the minimal
/// injective coresolution of `P(y)`. Only nonzero entries are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BassEntry {
    pub x: usize,
    pub i: usize,
    pub y: usize,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GradeBijection {
    /// `map[x] = y` where `top(D Ext^g(S_x, A)) = S_y` and `g = grade S_x`.
    Defined {
        map: Vec<usize>,
    },
    Undefined {
        diagnostics: Vec<String>,
    },
}

impl GradeBijection {
    pub fn map(&self) -> Option<&[usize]> {
        match self {
            GradeBijection::Defined { map } => Some(map),
            GradeBijection::Undefined { .. } => None,
        }
    }
}

/// Homological invariants of the incidence algebra `A` of a poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomProfile {
    pub pdim_simple: Vec<usize>,
    pub idim_simple: Vec<usize>,
    pub grade_simple: Vec<Dim>,
    pub cograde_simple: Vec<Dim>,
    pub pdim_injective: Vec<usize>,
    pub idim_projective: Vec<usize>,
    pub gldim: usize,
    pub domdim: Dim,
    /// Largest `n` such that `pdim I^i <= i` for all `i < n`.
    pub gorenstein_upto: Dim,
    pub auslander_regular: bool,
    pub diagonal: bool,
    /// Terms `I^i` of the minimal injective coresolution of `A`, as lists of
    /// the elements `x` of the summands `I(x)`.
    pub coresolution: Vec<ProjTerm>,
    pub bass: Vec<BassEntry>,
    /// Elements `x` with `I(x)` projective.
    pub projective_injective: Vec<usize>,
    pub grade_bijection: GradeBijection,
    pub warnings: Vec<String>,
}

struct ElementData {
    pdim_simple: usize,
    grade_simple: Dim,
    bijection_image: std::result::Result<usize, String>,
    idim_simple: usize,
    cograde_simple: Dim,
    pdim_injective: usize,
    injective_resolution: Vec<ProjTerm>,
    idim_projective: usize,
    projective_coresolution: Vec<ProjTerm>,
}

fn element_data<F: Field>(p: &Arc<Poset>, op: &Arc<Poset>, field: &F, x: usize) -> Result<ElementData> {
    let label = p.label(x);
    let simple = minimal_proj_resolution(&PosetModule::simple(p, field, x))?;
    let grade_simple = simple.grade(op);
    let g = grade_simple.finite().expect("nonzero modules have finite grade here");
    let top = simple.ext_module(op, g).dual_over(p).top();
    let bijection_image = match top.iter().sum::<usize>() {
        1 => Ok(top.iter().position(|&t| t == 1).unwrap()),
        k => Err(format!("top of D Ext^{g}(S_{label}, A) has {k} simple summands")),
    };
    let simple_op = minimal_proj_resolution(&PosetModule::simple(op, field, x))?;
    let injective = minimal_proj_resolution(&PosetModule::injective(p, field, x))?;
    let projective_dual = minimal_proj_resolution(&PosetModule::injective(op, field, x))?;
    Ok(ElementData {
        pdim_simple: simple.length(),
        grade_simple,
        bijection_image,
        idim_simple: simple_op.length(),
        cograde_simple: simple_op.grade(p),
        pdim_injective: injective.length(),
        injective_resolution: injective.terms().to_vec(),
        idim_projective: projective_dual.length(),
        projective_coresolution: projective_dual.terms().to_vec(),
    })
}

/// Summands of the termwise direct sum of several complexes.
fn sum_terms<'a>(lists: impl Iterator<Item = &'a [ProjTerm]>) -> Vec<ProjTerm> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for list in lists {
        for (i, t) in list.iter().enumerate() {
            if out.len() <= i {
                out.resize(i + 1, Vec::new());
            }
            out[i].extend_from_slice(t.summands());
        }
    }
    out.into_iter().map(ProjTerm::new).collect()
}

/// Computes the full profile, resolving simples, projectives and injectives
/// of both `A` and its opposite in parallel.
pub fn profile<F: Field>(poset: &Poset, field: &F) -> Result<HomProfile> {
    let n = poset.len();
    let p = Arc::new(poset.clone());
    let op = Arc::new(poset.opposite());
    let data: Vec<ElementData> = (0..n)
        .into_par_iter()
        .map(|x| element_data(&p, &op, field, x))
        .collect::<Result<_>>()?;

    let mut warnings = Vec::new();
    if !poset.is_connected() {
        warnings.push("poset is not connected; invariants are those of the product of its components".into());
    }

    let pdim_injective: Vec<usize> = data.iter().map(|d| d.pdim_injective).collect();
    let idim_projective: Vec<usize> = data.iter().map(|d| d.idim_projective).collect();
    let coresolution = sum_terms(data.iter().map(|d| d.projective_coresolution.as_slice()));
    let dual_resolution = sum_terms(data.iter().map(|d| d.injective_resolution.as_slice()));

    let first_term = |pred: &dyn Fn(usize, usize) -> bool| {
        coresolution
            .iter()
            .enumerate()
            .find(|(i, t)| t.summands().iter().any(|&x| pred(*i, x)))
            .map_or(Dim::Infinite, |(i, _)| Dim::Finite(i))
    };
    let gorenstein_upto = first_term(&|i, x| pdim_injective[x] > i);
    let domdim = first_term(&|_, x| pdim_injective[x] > 0);
    let auslander_regular = gorenstein_upto == Dim::Infinite;
    let diagonal = coresolution
        .iter()
        .enumerate()
        .all(|(i, t)| t.summands().iter().all(|&x| pdim_injective[x] == i))
        && dual_resolution
            .iter()
            .enumerate()
            .all(|(i, t)| t.summands().iter().all(|&x| idim_projective[x] == i));

    let mut bass = Vec::new();
    for (y, d) in data.iter().enumerate() {
        for (i, t) in d.projective_coresolution.iter().enumerate() {
            for (x, &mu) in t.multiplicities(n).iter().enumerate() {
                if mu > 0 {
                    bass.push(BassEntry { x, i, y, mu });
                }
            }
        }
    }
    bass.sort_by_key(|b| (b.x, b.i, b.y));

    Ok(HomProfile {
        pdim_simple: data.iter().map(|d| d.pdim_simple).collect(),
        idim_simple: data.iter().map(|d| d.idim_simple).collect(),
        grade_simple: data.iter().map(|d| d.grade_simple).collect(),
        cograde_simple: data.iter().map(|d| d.cograde_simple).collect(),
        gldim: data.iter().map(|d| d.pdim_simple).max().unwrap_or(0),
        domdim,
        gorenstein_upto,
        auslander_regular,
        diagonal,
        projective_injective: (0..n).filter(|&x| pdim_injective[x] == 0).collect(),
        grade_bijection: grade_bijection(poset, &data),
        pdim_injective,
        idim_projective,
        coresolution,
        bass,
        warnings,
    })
}

fn grade_bijection(p: &Poset, data: &[ElementData]) -> GradeBijection {
    let mut diagnostics = Vec::new();
    let mut map = Vec::with_capacity(data.len());
    for d in data {
        match &d.bijection_image {
            Ok(y) => map.push(*y),
            Err(msg) => diagnostics.push(msg.clone()),
        }
    }
    if diagnostics.is_empty() {
        let mut preimage: Vec<Option<usize>> = vec![None; data.len()];
        for (x, &y) in map.iter().enumerate() {
            match preimage[y] {
                Some(x0) => diagnostics.push(format!(
                    "S_{} and S_{} are both sent to S_{}",
                    p.label(x0),
                    p.label(x),
                    p.label(y)
                )),
                None => preimage[y] = Some(x),
            }
        }
    }
    if diagnostics.is_empty() {
        GradeBijection::Defined { map }
    } else {
        GradeBijection::Undefined { diagnostics }
    }
}

pub fn profile_over(p: &Poset, field: FieldSpec) -> Result<HomProfile> {
    match field {
        FieldSpec::Rationals => profile(p, &Rationals),
        FieldSpec::Prime(q) => profile(p, &PrimeField::new(q)?),
    }
}
