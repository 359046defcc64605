use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::module::{ModuleMorphism, PosetModule, ProjTerm};
use crate::poset::Poset;

/// A complex of projectives `⋯ -> P_1 -> P_0` with scalar differentials.
///
/// `diffs[r - 1]` is `d_r : P_r -> P_{r-1}`; its `(i, j)` entry is the
/// coefficient of the path from the `i`-th summand of `P_{r-1}` to the `j`-th
/// summand of `P_r`, so it must vanish unless `t_i <= s_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjComplex<F: Field> {
    poset: Arc<Poset>,
    field: F,
    terms: Vec<ProjTerm>,
    diffs: Vec<Mat<F>>,
}

impl<F: Field> ProjComplex<F> {
    pub fn new(poset: Arc<Poset>, field: F, terms: Vec<ProjTerm>, diffs: Vec<Mat<F>>) -> Result<Self> {
        let c = ProjComplex {
            poset,
            field,
            terms,
            diffs,
        };
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(poset: Arc<Poset>, field: F, terms: Vec<ProjTerm>, diffs: Vec<Mat<F>>) -> Self {
        ProjComplex {
            poset,
            field,
            terms,
            diffs,
        }
    }

    pub fn empty(poset: Arc<Poset>, field: F) -> Self {
        ProjComplex {
            poset,
            field,
            terms: vec![],
            diffs: vec![],
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

    pub fn terms(&self) -> &[ProjTerm] {
        &self.terms
    }

    pub fn term(&self, r: usize) -> Option<&ProjTerm> {
        self.terms.get(r)
    }

    pub fn diffs(&self) -> &[Mat<F>] {
        &self.diffs
    }

    /// `d_r` for `r >= 1`.
    pub fn diff(&self, r: usize) -> Option<&Mat<F>> {
        r.checked_sub(1).and_then(|i| self.diffs.get(i))
    }

    /// Index of the last term (0 for a single term or an empty complex).
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Shapes, the support gate and `d_r ∘ d_{r+1} = 0`.
    pub fn validate(&self) -> Result<()> {
        if self.diffs.len() != self.terms.len().saturating_sub(1) {
            return Err(Error::Shape(format!(
                "{} differentials for {} terms",
                self.diffs.len(),
                self.terms.len()
            )));
        }
        let p = self.poset.as_ref();
        for (k, d) in self.diffs.iter().enumerate() {
            let (target, source) = (&self.terms[k], &self.terms[k + 1]);
            if d.rows() != target.len() || d.cols() != source.len() {
                return Err(Error::Shape(format!("d_{} has the wrong shape", k + 1)));
            }
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    let allowed = p.leq(target.summands()[i], source.summands()[j]);
                    if !allowed && !self.field.is_zero(d.get(i, j)) {
                        return Err(Error::Support {
                            degree: k + 1,
                            row: i,
                            col: j,
                        });
                    }
                }
            }
        }
        for r in 1..self.diffs.len() {
            if !self.diffs[r - 1].mul(&self.diffs[r]).is_zero() {
                return Err(Error::Shape(format!("d_{} ∘ d_{} is not zero", r, r + 1)));
            }
        }
        Ok(())
    }

    /// No differential entry joins two summands at the same vertex.
    pub fn is_minimal(&self) -> bool {
        self.same_vertex_pivot().is_none()
    }

    fn same_vertex_pivot(&self) -> Option<(usize, usize, usize)> {
        self.diffs.iter().enumerate().find_map(|(k, d)| {
            let (target, source) = (&self.terms[k], &self.terms[k + 1]);
            (0..d.rows()).find_map(|i| {
                (0..d.cols()).find_map(|j| {
                    (target.summands()[i] == source.summands()[j] && !self.field.is_zero(d.get(i, j))).then_some((
                        k + 1,
                        i,
                        j,
                    ))
                })
            })
        })
    }

    /// Cancels contractible summands `P(x) --c--> P(x)` until the complex is
    /// minimal. The homotopy type is unchanged.
    pub fn minimize(&self) -> ProjComplex<F> {
        let f = &self.field;
        let mut c = self.clone();
        while let Some((r, i, j)) = c.same_vertex_pivot() {
            let d = &c.diffs[r - 1];
            let cinv = f.inv(d.get(i, j)).expect("pivot is nonzero");
            let rows: Vec<usize> = (0..d.rows()).filter(|&k| k != i).collect();
            let cols: Vec<usize> = (0..d.cols()).filter(|&l| l != j).collect();
            let reduced = Mat::from_fn(f, rows.len(), cols.len(), |a, b| {
                let (k, l) = (rows[a], cols[b]);
                let correction = f.mul(&f.mul(d.get(k, j), &cinv), d.get(i, l));
                f.sub(d.get(k, l), &correction)
            });
            c.diffs[r - 1] = reduced;
            if let Some(next) = c.diffs.get(r) {
                let keep: Vec<usize> = (0..next.rows()).filter(|&k| k != j).collect();
                let all: Vec<usize> = (0..next.cols()).collect();
                c.diffs[r] = next.select(&keep, &all);
            }
            if r >= 2 {
                let prev = &c.diffs[r - 2];
                let all: Vec<usize> = (0..prev.rows()).collect();
                let keep: Vec<usize> = (0..prev.cols()).filter(|&l| l != i).collect();
                c.diffs[r - 2] = prev.select(&all, &keep);
            }
            c.terms[r] = remove_summand(&c.terms[r], j);
            c.terms[r - 1] = remove_summand(&c.terms[r - 1], i);
        }
        while c.terms.len() > 1 && c.terms.last().is_some_and(ProjTerm::is_empty) {
            c.terms.pop();
            c.diffs.pop();
        }
        c
    }

    pub fn realize_term(&self, r: usize) -> PosetModule<F> {
        match self.terms.get(r) {
            Some(t) => t.realize(&self.poset, &self.field),
            None => PosetModule::zero(&self.poset, &self.field),
        }
    }

    /// `d_r` as a module morphism; the zero map outside the complex.
    pub fn realize_diff(&self, r: usize) -> ModuleMorphism<F> {
        match self.diff(r) {
            Some(d) => ProjTerm::realize_map(&self.poset, &self.field, &self.terms[r], &self.terms[r - 1], d),
            None => {
                let source = self.realize_term(r);
                let target = match r.checked_sub(1) {
                    Some(q) => self.realize_term(q),
                    None => PosetModule::zero(&self.poset, &self.field),
                };
                ModuleMorphism::zero(&source, &target)
            }
        }
    }

    /// All terms and differentials as concrete modules and morphisms.
    pub fn realize(&self) -> (Vec<PosetModule<F>>, Vec<ModuleMorphism<F>>) {
        let modules = (0..self.terms.len()).map(|r| self.realize_term(r)).collect();
        let maps = (1..self.terms.len()).map(|r| self.realize_diff(r)).collect();
        (modules, maps)
    }

    /// Dimension of `H_r = ker d_r / im d_{r+1}` at every vertex.
    pub fn homology_dims(&self, r: usize) -> Vec<usize> {
        let p = self.poset.as_ref();
        let Some(term) = self.terms.get(r) else {
            return vec![0; p.len()];
        };
        (0..p.len())
            .map(|z| {
                let here = term.supported_at(p, z);
                let kernel = match self.diff(r) {
                    Some(d) => here.len() - d.select(&self.terms[r - 1].supported_at(p, z), &here).rank(),
                    None => here.len(),
                };
                let image = match self.diff(r + 1) {
                    Some(d) => d.select(&here, &self.terms[r + 1].supported_at(p, z)).rank(),
                    None => 0,
                };
                kernel - image
            })
            .collect()
    }

    /// `H_r` as a module.
    pub fn homology(&self, r: usize) -> PosetModule<F> {
        let (_, incl) = self.realize_diff(r).kernel();
        self.realize_diff(r + 1).lift_through(&incl).cokernel().0
    }

    /// `Hom_A(-, A)` applied termwise: a complex over the opposite poset with
    /// transposed differentials and degrees reversed, so that its degree
    /// `length - i` computes `Ext^i(-, A)`.
    pub fn hom_to_a(&self, op: &Arc<Poset>) -> ProjComplex<F> {
        let terms: Vec<ProjTerm> = self.terms.iter().rev().cloned().collect();
        let diffs = self.diffs.iter().rev().map(Mat::transpose).collect();
        ProjComplex {
            poset: Arc::clone(op),
            field: self.field.clone(),
            terms,
            diffs,
        }
    }

    /// Alternating sum of term dimensions at every vertex.
    pub fn euler_characteristic(&self) -> Vec<i64> {
        let p = self.poset.as_ref();
        (0..p.len())
            .map(|z| {
                self.terms
                    .iter()
                    .enumerate()
                    .map(|(r, t)| {
                        let d = t.supported_at(p, z).len() as i64;
                        if r % 2 == 0 {
                            d
                        } else {
                            -d
                        }
                    })
                    .sum()
            })
            .collect()
    }
}

fn remove_summand(t: &ProjTerm, i: usize) -> ProjTerm {
    let mut s = t.summands().to_vec();
    s.remove(i);
    ProjTerm::new(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn c2() -> Arc<Poset> {
        Arc::new(Poset::chain(2).unwrap())
    }

    #[test]
    fn support_gate() {
        let q = Rationals;
        let terms = vec![ProjTerm::new(vec![1]), ProjTerm::new(vec![0])];
        let bad = ProjComplex::new(c2(), q, terms, vec![Mat::from_i64(&q, 1, 1, &[1])]);
        assert_eq!(
            bad,
            Err(Error::Support {
                degree: 1,
                row: 0,
                col: 0
            })
        );
    }

    #[test]
    fn realize_single_term_and_empty() {
        let q = Rationals;
        let c = ProjComplex::new(c2(), q, vec![ProjTerm::new(vec![0])], vec![]).unwrap();
        assert_eq!(c.realize().0[0], PosetModule::projective(&c2(), &q, 0));
        let e = ProjComplex::empty(c2(), q);
        assert!(e.realize_term(0).is_zero());
    }

    #[test]
    fn hom_of_a_two_term_complex() {
        let q = Rationals;
        let terms = vec![ProjTerm::new(vec![0]), ProjTerm::new(vec![1])];
        let c = ProjComplex::new(c2(), q, terms, vec![Mat::from_i64(&q, 1, 1, &[1])]).unwrap();
        let op = Arc::new(c2().opposite());
        let h = c.hom_to_a(&op);
        h.validate().unwrap();
        assert_eq!(h.terms()[0].summands(), &[1]);
        assert_eq!(h.terms()[1].summands(), &[0]);
        assert_eq!(h.homology_dims(0), vec![0, 1]);
        assert_eq!(h.homology_dims(1), vec![0, 0]);
    }

    #[test]
    fn minimize_cancels_identity_pairs() {
        let q = Rationals;
        // P(1) ⊕ P(1) -> P(0) ⊕ P(1): the second summands cancel
        let terms = vec![ProjTerm::new(vec![0, 1]), ProjTerm::new(vec![1, 1])];
        let d = Mat::from_i64(&q, 2, 2, &[1, 0, 0, 1]);
        let c = ProjComplex::new(c2(), q, terms, vec![d]).unwrap();
        assert!(!c.is_minimal());
        let m = c.minimize();
        assert!(m.is_minimal());
        assert_eq!(m.terms()[0].summands(), &[0]);
        assert_eq!(m.terms()[1].summands(), &[1]);
        assert_eq!(m.homology_dims(0), c.homology_dims(0));
        assert_eq!(m.euler_characteristic(), c.euler_characteristic());
    }
}
