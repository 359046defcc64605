//! Finite lattices: join/meet tables, distributivity, Birkhoff's
//! representation and rowmotion.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{width, ElemSet, OrderIdeal, Poset};

/// Cap on the size of a lattice of order ideals.
pub const MAX_IDEAL_LATTICE: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct Lattice {
    poset: Arc<Poset>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SublatticeKind {
    Pentagon,
    Diamond,
}

/// A five-element sublattice isomorphic to the pentagon or the diamond.
///
/// For a diamond `middle` holds the three atoms. For a pentagon it holds
/// `[low, high, side]` with `low < high` and `side` incomparable to both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SublatticeWitness {
    pub kind: SublatticeKind,
    pub elements: [usize; 5],
    pub bottom: usize,
    pub top: usize,
    pub middle: [usize; 3],
}

/// Output of Birkhoff's representation.
#[derive(Clone, Debug)]
pub struct Birkhoff {
    /// Induced subposet on the join-irreducibles, in increasing index order.
    pub poset: Poset,
    /// Lattice index of each element of `poset`.
    pub irreducibles: Vec<usize>,
    /// For every lattice element `a`, the ideal `{ p : p <= a }` of `poset`.
    pub iso: Vec<OrderIdeal>,
}

impl Birkhoff {
    /// Lattice element corresponding to an ideal of `poset`.
    pub fn element_of(&self, ideal: OrderIdeal) -> Option<usize> {
        self.iso.iter().position(|&i| i == ideal)
    }
}

impl Lattice {
    /// Builds join and meet tables, failing on the first pair without a
    /// unique least upper or greatest lower bound.
    pub fn new(p: Poset) -> Result<Self> {
        let n = p.len();
        if n == 0 {
            return Err(Error::NotALattice {
                a: 0,
                b: 0,
                reason: "belong to an empty poset".into(),
            });
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let ub = p.above(a).intersection(p.above(b));
                let least = p.min_of(ub);
                if least.len() != 1 {
                    let reason = if ub.is_empty() {
                        "have no upper bound"
                    } else {
                        "have no least upper bound"
                    };
                    return Err(Error::NotALattice {
                        a,
                        b,
                        reason: reason.into(),
                    });
                }
                let lb = p.below(a).intersection(p.below(b));
                let greatest = p.max_of(lb);
                if greatest.len() != 1 {
                    let reason = if lb.is_empty() {
                        "have no lower bound"
                    } else {
                        "have no greatest lower bound"
                    };
                    return Err(Error::NotALattice {
                        a,
                        b,
                        reason: reason.into(),
                    });
                }
                let (j, m) = (least.first().unwrap(), greatest.first().unwrap());
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        let bottom = p.minimum().expect("lattices are bounded");
        let top = p.maximum().expect("lattices are bounded");
        Ok(Lattice {
            poset: Arc::new(p),
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn poset_arc(&self) -> Arc<Poset> {
        Arc::clone(&self.poset)
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    /// Join of a set; the join of the empty set is the minimum.
    pub fn join_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the meet of the empty set is the maximum.
    pub fn meet_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn min_elt(&self) -> usize {
        self.bottom
    }

    pub fn max_elt(&self) -> usize {
        self.top
    }

    /// Exhaustive check of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))))
        })
    }

    /// The lexicographically first 5-subset forming a pentagon or diamond
    /// sublattice, if any.
    pub fn find_forbidden_sublattice(&self) -> Option<SublatticeWitness> {
        let n = self.len();
        let p = &self.poset;
        let mut best: Option<SublatticeWitness> = None;
        let mut offer = |w: SublatticeWitness| {
            if best.as_ref().is_none_or(|b| w.elements < b.elements) {
                best = Some(w);
            }
        };
        for x in 0..n {
            for y in x + 1..n {
                if p.comparable(x, y) {
                    continue;
                }
                let (o, i) = (self.meet(x, y), self.join(x, y));
                for z in y + 1..n {
                    if p.comparable(x, z) || p.comparable(y, z) {
                        continue;
                    }
                    if self.meet(x, z) == o && self.meet(y, z) == o && self.join(x, z) == i && self.join(y, z) == i {
                        offer(witness(SublatticeKind::Diamond, o, i, [x, y, z]));
                    }
                }
            }
        }
        for low in 0..n {
            for high in 0..n {
                if !p.lt(low, high) {
                    continue;
                }
                for side in 0..n {
                    if p.comparable(side, low) || p.comparable(side, high) {
                        continue;
                    }
                    let (o, i) = (self.meet(low, side), self.join(low, side));
                    if self.meet(high, side) == o && self.join(high, side) == i {
                        offer(witness(SublatticeKind::Pentagon, o, i, [low, high, side]));
                    }
                }
            }
        }
        best
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| self.poset.cocovers_of(x).len() == 1)
            .collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| self.poset.covers_of(x).len() == 1)
            .collect()
    }

    /// Join-irreducibles straight from the definition: `p != m` and
    /// `p = x ∨ y` forces `p ∈ {x, y}`.
    pub fn join_irreducibles_by_definition(&self) -> ElemSet {
        let n = self.len();
        (0..n)
            .filter(|&p| p != self.bottom && (0..n).all(|x| (0..n).all(|y| self.join(x, y) != p || x == p || y == p)))
            .collect()
    }

    pub fn meet_irreducibles_by_definition(&self) -> ElemSet {
        let n = self.len();
        (0..n)
            .filter(|&p| p != self.top && (0..n).all(|x| (0..n).all(|y| self.meet(x, y) != p || x == p || y == p)))
            .collect()
    }

    pub fn birkhoff_poset(&self) -> Result<Birkhoff> {
        if !self.is_distributive() {
            return Err(Error::NotDistributive);
        }
        let irreducibles = self.join_irreducibles().to_vec();
        let poset = self.poset.induced(&irreducibles);
        let iso: Vec<OrderIdeal> = (0..self.len())
            .map(|a| {
                let members: ElemSet = irreducibles
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.poset.leq(j, a))
                    .map(|(i, _)| i)
                    .collect();
                OrderIdeal::new(&poset, members).expect("down-sets of irreducibles are ideals")
            })
            .collect();
        let mut images: Vec<OrderIdeal> = iso.clone();
        images.sort_unstable();
        if images != poset.all_order_ideals()? {
            return Err(Error::NotDistributive);
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                let (ia, ib) = (iso[a].members(), iso[b].members());
                if iso[self.join(a, b)].members() != ia.union(ib)
                    || iso[self.meet(a, b)].members() != ia.intersection(ib)
                {
                    return Err(Error::NotDistributive);
                }
            }
        }
        Ok(Birkhoff {
            poset,
            irreducibles,
            iso,
        })
    }

    /// The unique irredundant decomposition of `a` into join-irreducibles.
    pub fn irredundant_join_decomposition(&self, a: usize) -> Result<ElemSet> {
        self.poset.check_index(a)?;
        if a == self.bottom {
            return Err(Error::MinElement);
        }
        if !self.is_distributive() {
            return Err(Error::NotDistributive);
        }
        let below = self.join_irreducibles().intersection(self.poset.below(a));
        Ok(self.poset.max_of(below))
    }

    /// `min([m, x]^c)`: minimal elements not below `x`.
    pub fn min_complement(&self, x: usize) -> ElemSet {
        self.poset.min_of(self.poset.elements().difference(self.poset.below(x)))
    }

    /// `max([y, M]^c)`: maximal elements not above `y`.
    pub fn max_complement(&self, y: usize) -> ElemSet {
        self.poset.max_of(self.poset.elements().difference(self.poset.above(y)))
    }

    /// Order dimension of a distributive lattice as its largest cover count.
    pub fn order_dimension_distributive(&self) -> Result<usize> {
        if self.len() < 2 {
            return Err(Error::TooSmall);
        }
        if !self.is_distributive() {
            return Err(Error::NotDistributive);
        }
        Ok(self.max_cover_count())
    }

    pub fn max_cover_count(&self) -> usize {
        (0..self.len())
            .map(|x| self.poset.covers_of(x).len())
            .max()
            .unwrap_or(0)
    }

    /// Rowmotion as a permutation of lattice elements, computed on the
    /// Birkhoff poset of join-irreducibles.
    pub fn rowmotion(&self) -> Result<Vec<usize>> {
        let b = self.birkhoff_poset()?;
        let lookup: HashMap<OrderIdeal, usize> = b.iso.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        (0..self.len())
            .map(|a| {
                let image = rowmotion(&b.poset, b.iso[a].members())?;
                Ok(lookup[&image])
            })
            .collect()
    }

    /// Width of the join-irreducible subposet.
    pub fn join_irreducible_width(&self) -> usize {
        let irr = self.join_irreducibles().to_vec();
        width(&self.poset.induced(&irr)).width
    }
}

fn witness(kind: SublatticeKind, bottom: usize, top: usize, middle: [usize; 3]) -> SublatticeWitness {
    let mut elements = [bottom, top, middle[0], middle[1], middle[2]];
    elements.sort_unstable();
    SublatticeWitness {
        kind,
        elements,
        bottom,
        top,
        middle,
    }
}

pub fn as_lattice(p: &Poset) -> Result<Lattice> {
    Lattice::new(p.clone())
}

/// All order ideals of `p` ordered by inclusion, labelled by their members.
pub fn ideal_lattice(p: &Poset) -> Result<Lattice> {
    Ok(ideal_lattice_with_ideals(p)?.0)
}

/// Like `ideal_lattice`, also returning the ideal behind each element.
pub fn ideal_lattice_with_ideals(p: &Poset) -> Result<(Lattice, Vec<OrderIdeal>)> {
    let ideals = p.all_order_ideals()?;
    if ideals.len() > MAX_IDEAL_LATTICE {
        return Err(Error::Size {
            what: "ideal lattice",
            size: ideals.len(),
            cap: MAX_IDEAL_LATTICE,
        });
    }
    let index: HashMap<ElemSet, usize> = ideals.iter().enumerate().map(|(i, id)| (id.members(), i)).collect();
    let mut covers = Vec::new();
    for (i, id) in ideals.iter().enumerate() {
        let s = id.members();
        for x in p.min_of(p.elements().difference(s)).iter() {
            let mut t = s;
            t.insert(x);
            covers.push((i, index[&t]));
        }
    }
    let labels: Vec<String> = ideals.iter().map(|id| p.format_set(id.members())).collect();
    let poset = Poset::from_covers(ideals.len(), &covers)?.with_labels(labels)?;
    Ok((Lattice::new(poset)?, ideals))
}

/// `row(x)`: the ideal generated by the minimal elements of the complement.
pub fn rowmotion(p: &Poset, x: ElemSet) -> Result<OrderIdeal> {
    if !p.is_order_ideal(x) {
        return Err(Error::NotAnIdeal);
    }
    let generators = p.min_of(p.elements().difference(x));
    Ok(p.down_set(generators))
}
