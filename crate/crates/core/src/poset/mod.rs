//! Finite posets stored as bitset relations.
//!
//! Elements are `0..n` with optional labels. The order is kept both as the
//! full relation (`below`/`above` sets) and as the cover relation, which is
//! the Hasse quiver: an arrow `a -> b` exists iff `b` covers `a`.

mod dimension;
mod enumerate;
mod width;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use dimension::{is_realizer, linear_extensions, order_dimension_oracle, OrderDimension, DEFAULT_EXTENSION_BUDGET};
pub use enumerate::{canonical_form, enumerate_posets, MAX_ENUMERATION_SIZE};
pub use width::{width, Width};

use crate::error::{Error, Result};

/// Hard cap on poset size; element sets are single machine words.
pub const MAX_ELEMENTS: usize = 64;

/// Cap for listing all order ideals.
pub const MAX_IDEAL_POSET: usize = 20;

/// A set of poset elements, as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(x: usize) -> Self {
        ElemSet(1 << x)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1 << x);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(x)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A downward-closed set of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal(ElemSet);

impl OrderIdeal {
    /// Checks downward closure in `p`.
    pub fn new(p: &Poset, members: ElemSet) -> Result<Self> {
        if p.is_order_ideal(members) {
            Ok(OrderIdeal(members))
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    pub fn members(self) -> ElemSet {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    below: Vec<ElemSet>,
    above: Vec<ElemSet>,
    covers: Vec<(usize, usize)>,
    upper: Vec<ElemSet>,
    lower: Vec<ElemSet>,
    labels: Vec<String>,
}

/// Poset file format: `[i, j]` in `covers` means `i` is covered by `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds a poset from (not necessarily reduced) cover pairs `(a, b)`
    /// meaning `a < b`. Redundant pairs are dropped from the stored covers.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Size {
                what: "poset",
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        let mut reach = vec![ElemSet::EMPTY; n];
        for &(a, b) in covers {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if a == b {
                return Err(Error::Cycle { a, b });
            }
            reach[a].insert(b);
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i].contains(k) {
                    reach[i] = reach[i].union(reach[k]);
                }
            }
        }
        for i in 0..n {
            if reach[i].contains(i) {
                let b = reach[i].iter().find(|&k| k != i && reach[k].contains(i)).unwrap_or(i);
                return Err(Error::Cycle {
                    a: i.min(b),
                    b: i.max(b),
                });
            }
        }
        let mut above = reach;
        let mut below = vec![ElemSet::EMPTY; n];
        for (x, up) in above.iter_mut().enumerate() {
            up.insert(x);
            for y in up.iter() {
                below[y].insert(x);
            }
        }
        Ok(Self::from_relation(
            n,
            below,
            above,
            (0..n).map(|i| i.to_string()).collect(),
        ))
    }

    fn from_relation(n: usize, below: Vec<ElemSet>, above: Vec<ElemSet>, labels: Vec<String>) -> Self {
        let mut covers = Vec::new();
        let mut upper = vec![ElemSet::EMPTY; n];
        let mut lower = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            let strict_above = above[a].difference(ElemSet::singleton(a));
            for b in strict_above.iter() {
                let strict_below_b = below[b].difference(ElemSet::singleton(b));
                if strict_above.intersection(strict_below_b).is_empty() {
                    covers.push((a, b));
                    upper[a].insert(b);
                    lower[b].insert(a);
                }
            }
        }
        covers.sort_unstable();
        Poset {
            n,
            below,
            above,
            covers,
            upper,
            lower,
            labels,
        }
    }

    /// Replaces the element labels.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::Shape(format!("{} labels for {} elements", labels.len(), self.n)));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &covers)
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_covers(n, &[])
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let covers: Vec<(usize, usize)> = json.covers.iter().map(|&[a, b]| (a, b)).collect();
        Self::from_covers(json.elements.len(), &covers)?.with_labels(json.elements.iter().cloned())
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: x, n: self.n })
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{ y : y <= x }`
    pub fn below(&self, x: usize) -> ElemSet {
        self.below[x]
    }

    /// `{ y : y >= x }`
    pub fn above(&self, x: usize) -> ElemSet {
        self.above[x]
    }

    /// Cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_index(&self, a: usize, b: usize) -> Option<usize> {
        self.covers.binary_search(&(a, b)).ok()
    }

    /// Elements covering `x`.
    pub fn covers_of(&self, x: usize) -> ElemSet {
        self.upper[x]
    }

    /// Elements covered by `x`.
    pub fn cocovers_of(&self, x: usize) -> ElemSet {
        self.lower[x]
    }

    pub fn interval(&self, a: usize, b: usize) -> ElemSet {
        self.above[a].intersection(self.below[b])
    }

    pub fn down_set(&self, s: ElemSet) -> OrderIdeal {
        OrderIdeal(s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.below[x])))
    }

    pub fn up_set(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.above[x]))
    }

    pub fn min_of(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .filter(|&x| self.below[x].intersection(s) == ElemSet::singleton(x))
            .collect()
    }

    pub fn max_of(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .filter(|&x| self.above[x].intersection(s) == ElemSet::singleton(x))
            .collect()
    }

    pub fn is_order_ideal(&self, s: ElemSet) -> bool {
        s.is_subset(self.elements()) && s.iter().all(|x| self.below[x].is_subset(s))
    }

    pub fn is_antichain(&self, s: ElemSet) -> bool {
        s.iter().all(|x| {
            self.below[x].intersection(s) == ElemSet::singleton(x)
                && self.above[x].intersection(s) == ElemSet::singleton(x)
        })
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.comparable(a, b)))
    }

    /// Every order ideal exactly once, sorted by bitmask value.
    pub fn all_order_ideals(&self) -> Result<Vec<OrderIdeal>> {
        if self.n > MAX_IDEAL_POSET {
            return Err(Error::Size {
                what: "poset for ideal enumeration",
                size: self.n,
                cap: MAX_IDEAL_POSET,
            });
        }
        let order = self.linear_extension();
        let mut out = Vec::new();
        self.ideals_from(&order, 0, ElemSet::EMPTY, &mut out);
        out.sort_unstable();
        Ok(out.into_iter().map(OrderIdeal).collect())
    }

    fn ideals_from(&self, order: &[usize], i: usize, current: ElemSet, out: &mut Vec<ElemSet>) {
        let Some(&x) = order.get(i) else {
            out.push(current);
            return;
        };
        self.ideals_from(order, i + 1, current, out);
        if self.lower[x].is_subset(current) {
            let mut with = current;
            with.insert(x);
            self.ideals_from(order, i + 1, with, out);
        }
    }

    /// A linear extension, always taking the smallest available index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = ElemSet::EMPTY;
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let x = (0..self.n)
                .find(|&x| !placed.contains(x) && self.lower[x].is_subset(placed))
                .expect("posets are acyclic");
            placed.insert(x);
            out.push(x);
        }
        out
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.above[x] == self.elements())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.below[x] == self.elements())
    }

    pub fn is_bounded(&self) -> bool {
        self.minimum().is_some() && self.maximum().is_some()
    }

    /// Connectivity of the Hasse diagram as an undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = ElemSet::singleton(0);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for y in self.upper[x].union(self.lower[x]).iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen == self.elements()
    }

    /// The same elements with the order reversed.
    pub fn opposite(&self) -> Poset {
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        Poset {
            n: self.n,
            below: self.above.clone(),
            above: self.below.clone(),
            covers,
            upper: self.lower.clone(),
            lower: self.upper.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Induced subposet on `subset`, reindexed in the given order.
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let k = subset.len();
        let mut below = vec![ElemSet::EMPTY; k];
        let mut above = vec![ElemSet::EMPTY; k];
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                if self.leq(a, b) {
                    below[j].insert(i);
                    above[i].insert(j);
                }
            }
        }
        let labels = subset.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_relation(k, below, above, labels)
    }

    /// Formats a set of elements with labels, e.g. `{a,b}`.
    pub fn format_set(&self, s: ElemSet) -> String {
        let parts: Vec<&str> = s.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean2() -> Poset {
        // 0 = {}, 1 = {1}, 2 = {2}, 3 = {1,2}
        Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn chain_from_covers() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn one_point_poset() {
        let p = Poset::from_covers(1, &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.is_bounded());
    }

    #[test]
    fn two_cycle_is_rejected() {
        assert_eq!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::Cycle { a: 0, b: 1 })
        );
        assert!(matches!(
            Poset::from_covers(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn redundant_covers_are_reduced() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cover_queries() {
        let b2 = boolean2();
        assert_eq!(b2.covers_of(0).to_vec(), vec![1, 2]);
        let c3 = Poset::chain(3).unwrap();
        assert!(c3.covers_of(2).is_empty());
        let diamond = Poset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(diamond.covers_of(0).len(), 3);
        assert_eq!(diamond.cocovers_of(4).len(), 3);
    }

    #[test]
    fn down_sets() {
        let c3 = Poset::chain(3).unwrap();
        assert_eq!(c3.down_set(ElemSet::EMPTY).members(), ElemSet::EMPTY);
        assert_eq!(c3.down_set(ElemSet::singleton(2)).members().to_vec(), vec![0, 1, 2]);
        let a2 = Poset::antichain(2).unwrap();
        assert_eq!(a2.down_set(ElemSet::singleton(1)).members().to_vec(), vec![1]);
    }

    #[test]
    fn min_and_max() {
        let b2 = boolean2();
        let s: ElemSet = [1, 2, 3].into_iter().collect();
        assert_eq!(b2.min_of(s).to_vec(), vec![1, 2]);
        assert_eq!(b2.min_of(ElemSet::singleton(3)).to_vec(), vec![3]);
        assert!(b2.min_of(ElemSet::EMPTY).is_empty());
        let c4 = Poset::chain(4).unwrap();
        assert_eq!(c4.min_of(c4.elements()).to_vec(), vec![0]);
        assert_eq!(c4.max_of(c4.elements()).to_vec(), vec![3]);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(Poset::antichain(2).unwrap().all_order_ideals().unwrap().len(), 4);
        for n in 1..8 {
            assert_eq!(Poset::chain(n).unwrap().all_order_ideals().unwrap().len(), n + 1);
        }
        assert_eq!(Poset::antichain(1).unwrap().all_order_ideals().unwrap().len(), 2);
        assert!(Poset::antichain(21).unwrap().all_order_ideals().is_err());
    }

    #[test]
    fn ideals_are_sorted_and_closed() {
        let p = boolean2();
        let ideals = p.all_order_ideals().unwrap();
        assert!(ideals.windows(2).all(|w| w[0] < w[1]));
        assert!(ideals.iter().all(|i| p.is_order_ideal(i.members())));
        assert_eq!(ideals.len(), 6);
    }

    #[test]
    fn bounded_and_connected() {
        let c = Poset::chain(4).unwrap();
        assert!(c.is_bounded() && c.is_connected());
        let a = Poset::antichain(2).unwrap();
        assert!(!a.is_bounded() && !a.is_connected());
        let pentagon = Poset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(pentagon.is_bounded() && pentagon.is_connected());
    }

    #[test]
    fn opposite_is_an_involution() {
        let p = boolean2();
        assert_eq!(p.opposite().opposite(), p);
        assert!(p.opposite().leq(3, 0));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"elements": ["a", "b", "c"], "covers": [[0, 1], [0, 2]]}"#;
        let p = Poset::from_json_str(text).unwrap();
        assert_eq!(p.label(1), "b");
        assert_eq!(Poset::from_json(&p.to_json()).unwrap(), p);
        assert!(matches!(Poset::from_json_str("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn induced_subposet() {
        let p = boolean2();
        let q = p.induced(&[1, 2, 3]);
        assert_eq!(q.covers(), &[(0, 2), (1, 2)]);
    }
}
