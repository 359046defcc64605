//! Closed-form complexes for lattices built from antichains.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::homology::ProjComplex;
use crate::lattice::Lattice;
use crate::linalg::{Field, Mat};
use crate::module::ProjTerm;
use crate::poset::{ElemSet, OrderIdeal, Poset};

/// Largest antichain accepted by the Koszul construction.
pub const MAX_KOSZUL_ANTICHAIN: usize = 16;

/// The Koszul complex of the antichain `c` based at the minimum.
pub fn koszul_complex<F: Field>(l: &Lattice, field: &F, c: ElemSet) -> Result<ProjComplex<F>> {
    koszul_complex_at(l, field, l.min_elt(), c)
}

/// Degree `r` holds `P(base ∨ ⋁S)` for every `r`-subset `S` of `c`; the entry
/// from `S` to `S ∖ {y}` is `(-1)^{|{z ∈ S : z < y}|}`, ordering `c` by
/// element index.
pub fn koszul_complex_at<F: Field>(l: &Lattice, field: &F, base: usize, c: ElemSet) -> Result<ProjComplex<F>> {
    let p = l.poset();
    p.check_index(base)?;
    if !c.is_subset(p.elements()) || !p.is_antichain(c) {
        return Err(Error::NotAnAntichain);
    }
    let elems = c.to_vec();
    let k = elems.len();
    if k > MAX_KOSZUL_ANTICHAIN {
        return Err(Error::Size {
            what: "Koszul antichain",
            size: k,
            cap: MAX_KOSZUL_ANTICHAIN,
        });
    }
    let vertex = |mask: u32| {
        (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(base, |acc, i| l.join(acc, elems[i]))
    };
    let mut degrees: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for mask in 0..1u32 << k {
        degrees[mask.count_ones() as usize].push(mask);
    }
    for d in &mut degrees {
        d.sort_by_key(|&m| (vertex(m), m));
    }
    let position: Vec<HashMap<u32, usize>> = degrees
        .iter()
        .map(|d| d.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let terms = degrees
        .iter()
        .map(|d| ProjTerm::new(d.iter().map(|&m| vertex(m)).collect()))
        .collect();
    let diffs = (1..=k)
        .map(|r| {
            let mut d = Mat::zeros(field, degrees[r - 1].len(), degrees[r].len());
            for (j, &s) in degrees[r].iter().enumerate() {
                for y in (0..k).filter(|&y| s >> y & 1 == 1) {
                    let below = (s & ((1 << y) - 1)).count_ones();
                    let sign = if below % 2 == 0 {
                        field.one()
                    } else {
                        field.neg(&field.one())
                    };
                    d.set(position[r - 1][&(s & !(1 << y))], j, sign);
                }
            }
            d
        })
        .collect();
    ProjComplex::new(l.poset_arc(), field.clone(), terms, diffs)
}

/// Koszul resolution of `I(x)` on `C = min([m, x]^c)`.
pub fn closed_form_resolution_injective<F: Field>(l: &Lattice, field: &F, x: usize) -> Result<ProjComplex<F>> {
    koszul_complex(l, field, l.min_complement(x))
}

/// Koszul resolution of `S_x`, built on the interval `[x, M]` with
/// `C = cov(x)` and read over the whole lattice.
pub fn closed_form_resolution_simple<F: Field>(l: &Lattice, field: &F, x: usize) -> Result<ProjComplex<F>> {
    koszul_complex_at(l, field, x, l.poset().covers_of(x))
}

/// Dimension vector of `P(base) / Σ p_c A`: one on `{ u >= base : u ≱ c }`.
pub fn koszul_cokernel_dims(p: &Poset, base: usize, c: ElemSet) -> Vec<usize> {
    let blocked = p.up_set(c);
    (0..p.len())
        .map(|u| (p.leq(base, u) && !blocked.contains(u)) as usize)
        .collect()
}

/// Exactness in positive degrees, `H_0` with the given dimensions, and the
/// vertexwise Euler characteristic identity.
pub fn is_resolution_of<F: Field>(c: &ProjComplex<F>, h0: &[usize]) -> bool {
    let euler: Vec<i64> = h0.iter().map(|&d| d as i64).collect();
    c.euler_characteristic() == euler
        && c.homology_dims(0) == h0
        && (1..=c.length()).all(|r| c.homology_dims(r).iter().all(|&d| d == 0))
}

/// `μ^i(x, P(y))` for the lattice of order ideals of `p`: one exactly when
/// `i = |cov(x)|` and `min(P ∖ x) ⊆ max(y)`.
pub fn bass_formula(p: &Poset, x: OrderIdeal, y: OrderIdeal, i: usize) -> usize {
    let missing = p.min_of(p.elements().difference(x.members()));
    (i == missing.len() && missing.is_subset(p.max_of(y.members()))) as usize
}

/// `μ^i(x, A)`, summing `bass_formula` over all ideals `y`.
pub fn bass_formula_regular(p: &Poset, x: OrderIdeal, i: usize) -> Result<usize> {
    Ok(p.all_order_ideals()?
        .into_iter()
        .map(|y| bass_formula(p, x, y, i))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ideal_lattice;
    use crate::linalg::Rationals;

    #[test]
    fn b2_koszul_complex() {
        let l = ideal_lattice(&Poset::antichain(2).unwrap()).unwrap();
        let atoms = l.poset().covers_of(l.min_elt());
        let c = koszul_complex(&l, &Rationals, atoms).unwrap();
        let shapes: Vec<usize> = c.terms().iter().map(ProjTerm::len).collect();
        assert_eq!(shapes, vec![1, 2, 1]);
        assert_eq!(c.diff(2).unwrap(), &Mat::from_i64(&Rationals, 2, 1, &[-1, 1]));
        assert!(c.is_minimal());
        let h0 = koszul_cokernel_dims(l.poset(), l.min_elt(), atoms);
        assert_eq!(h0, vec![1, 0, 0, 0]);
        assert!(is_resolution_of(&c, &h0));
    }

    #[test]
    fn empty_antichain() {
        let l = ideal_lattice(&Poset::antichain(2).unwrap()).unwrap();
        let c = koszul_complex(&l, &Rationals, ElemSet::EMPTY).unwrap();
        assert_eq!(c.terms().len(), 1);
        assert_eq!(c.terms()[0].summands(), &[l.min_elt()]);
        assert!(koszul_complex(&l, &Rationals, l.poset().elements()).is_err());
    }

    #[test]
    fn bass_formula_on_full_ideal() {
        let p = Poset::antichain(2).unwrap();
        let full = OrderIdeal::new(&p, p.elements()).unwrap();
        for y in p.all_order_ideals().unwrap() {
            assert_eq!(bass_formula(&p, full, y, 0), 1);
        }
        let x = OrderIdeal::new(&p, ElemSet::singleton(0)).unwrap();
        let y = OrderIdeal::new(&p, ElemSet::singleton(0)).unwrap();
        assert_eq!(bass_formula(&p, x, y, 1), 0);
    }
}
