//! Property checks shared by the proptest suite and the acceptance target.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use incidence::homology::{grade, minimal_proj_resolution, pdim, syzygy, Dim};
use incidence::lattice::{ideal_lattice, rowmotion};
use incidence::linalg::{Field, Mat};
use incidence::module::{PosetModule, ProjTerm};
use incidence::poset::{canonical_form, enumerate_posets, ElemSet, Poset};
use proptest::prelude::*;

/// `(rows, cols, entries)` with small integer entries.
pub fn matrix_entries() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (0usize..8, 0usize..8).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-4i64..5, r * c)))
}

pub fn rank_nullity<F: Field>(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Result<(), TestCaseError> {
    let a = Mat::from_i64(field, rows, cols, entries);
    let k = a.kernel_basis();
    prop_assert_eq!(k.rows(), cols);
    prop_assert_eq!(a.rank() + k.cols(), cols);
    prop_assert!(a.mul(&k).is_zero());
    prop_assert_eq!(k.rank(), k.cols());
    prop_assert_eq!(a.rank(), a.transpose().rank());
    Ok(())
}

/// Down-closure of the minimal elements outside `ideal`, straight from the
/// order relation.
fn rowmotion_by_definition(p: &Poset, ideal: ElemSet) -> ElemSet {
    let n = p.len();
    let outside: Vec<usize> = (0..n).filter(|&x| !ideal.contains(x)).collect();
    let minimal: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| !outside.iter().any(|&y| y != x && p.leq(y, x)))
        .collect();
    (0..n).filter(|&u| minimal.iter().any(|&m| p.leq(u, m))).collect()
}

/// Rowmotion permutes the order ideals of `p`, agrees with its definition,
/// and agrees with rowmotion computed on the ideal lattice.
pub fn rowmotion_is_bijection(p: &Poset) -> Result<(), String> {
    let ideals = p.all_order_ideals().map_err(|e| e.to_string())?;
    let mut images = BTreeSet::new();
    for i in &ideals {
        let r = rowmotion(p, i.members()).map_err(|e| e.to_string())?;
        if r.members() != rowmotion_by_definition(p, i.members()) {
            return Err(format!("rowmotion of {:?} disagrees with the definition", i.members()));
        }
        images.insert(r.members());
    }
    if images.len() != ideals.len() {
        return Err(format!("{} ideals but {} images", ideals.len(), images.len()));
    }
    let l = ideal_lattice(p).map_err(|e| e.to_string())?;
    let perm = l.rowmotion().map_err(|e| e.to_string())?;
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if distinct.len() != l.len() {
        return Err("lattice rowmotion is not a permutation".into());
    }
    Ok(())
}

/// Modules built from `p`: simples, projectives, injectives, first syzygies of
/// simples, and one direct sum.
pub fn constructed_modules<F: Field>(p: &Arc<Poset>, field: &F) -> Vec<PosetModule<F>> {
    let mut out = Vec::new();
    for x in 0..p.len() {
        let s = PosetModule::simple(p, field, x);
        out.push(syzygy(&s, 1).expect("syzygies exist"));
        out.push(s);
        out.push(PosetModule::projective(p, field, x));
        out.push(PosetModule::injective(p, field, x));
    }
    if p.len() >= 2 {
        out.push(PosetModule::injective(p, field, 0).direct_sum(&PosetModule::simple(p, field, 1)));
    }
    out
}

pub fn dual_involution<F: Field + PartialEq>(m: &PosetModule<F>) -> Result<(), String> {
    let d = m.dual();
    d.validate().map_err(|e| e.to_string())?;
    if d.dims() != m.dims() {
        return Err("duality changed the dimension vector".into());
    }
    if &d.dual() != m {
        return Err(format!("D(D(M)) differs from M with dims {}", m.format_dims()));
    }
    Ok(())
}

/// The cokernel of a map between sums of projectives whose scalar matrix has
/// the given entries (entries with no path between the summands are ignored).
pub fn presented_module<F: Field>(
    p: &Arc<Poset>,
    field: &F,
    targets: Vec<usize>,
    sources: Vec<usize>,
    entries: &[i64],
) -> PosetModule<F> {
    let t = ProjTerm::new(targets);
    let s = ProjTerm::new(sources);
    let m = Mat::from_i64(field, t.len(), s.len(), &entries[..t.len() * s.len()]);
    ProjTerm::realize_map(p, field, &s, &t, &m).cokernel().0
}

/// Resolution is exact and minimal, and grade never exceeds pdim.
pub fn grade_at_most_pdim<F: Field>(m: &PosetModule<F>) -> Result<(), String> {
    let r = minimal_proj_resolution(m).map_err(|e| e.to_string())?;
    if !r.is_exact() || !r.complex.is_minimal() {
        return Err(format!("resolution of {} is not exact and minimal", m.format_dims()));
    }
    let g = grade(m).map_err(|e| e.to_string())?;
    let pd = pdim(m).map_err(|e| e.to_string())?;
    if m.is_zero() {
        return if g == Dim::Infinite {
            Ok(())
        } else {
            Err("zero module has finite grade".into())
        };
    }
    if g > Dim::Finite(pd) {
        return Err(format!("grade {g} exceeds pdim {pd} for {}", m.format_dims()));
    }
    Ok(())
}

/// `P` is recovered, up to isomorphism, from the join-irreducibles of its
/// ideal lattice.
pub fn birkhoff_round_trip(p: &Poset) -> Result<(), String> {
    let l = ideal_lattice(p).map_err(|e| e.to_string())?;
    let b = l.birkhoff_poset().map_err(|e| e.to_string())?;
    if canonical_form(&b.poset).0 != canonical_form(p).0 {
        return Err("join-irreducibles are not isomorphic to the original poset".into());
    }
    for a in 0..l.len() {
        if b.element_of(b.iso[a]) != Some(a) {
            return Err(format!("element {a} does not round-trip through its ideal"));
        }
    }
    Ok(())
}

/// Number of unlabelled posets on `n` points, by brute force: every strict
/// order is isomorphic to one contained in `i < j`, so enumerate transitive
/// subsets of those pairs and deduplicate by the minimum adjacency code over
/// all relabellings.
pub fn brute_force_poset_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = mask >> k & 1 == 1;
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel[a][b] && rel[b][c]) || rel[a][c])));
        if !transitive {
            continue;
        }
        let code = perms
            .iter()
            .map(|perm| {
                let mut code = 0u64;
                for a in 0..n {
                    for b in 0..n {
                        code = code << 1 | rel[perm[a]][perm[b]] as u64;
                    }
                }
                code
            })
            .min()
            .unwrap_or(0);
        seen.insert(code);
    }
    seen.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(|k| enumerate_posets(k).unwrap()).collect()
}
