use super::{ElemSet, Poset};
use crate::error::{Error, Result};

/// Default cap on the number of linear extensions the oracle will enumerate.
pub const DEFAULT_EXTENSION_BUDGET: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderDimension {
    /// Smallest `dimension` together with a realizer of that size.
    Exact {
        dimension: usize,
        realizer: Vec<Vec<usize>>,
    },
    ExceedsMax {
        t_max: usize,
    },
}

impl OrderDimension {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            OrderDimension::Exact { dimension, .. } => Some(*dimension),
            OrderDimension::ExceedsMax { .. } => None,
        }
    }
}

/// All linear extensions in lexicographic order, failing once more than
/// `budget` have been produced.
pub fn linear_extensions(p: &Poset, budget: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p.len());
    extend(p, ElemSet::EMPTY, &mut current, &mut out, budget)?;
    Ok(out)
}

fn extend(
    p: &Poset,
    placed: ElemSet,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: usize,
) -> Result<()> {
    if current.len() == p.len() {
        if out.len() == budget {
            return Err(Error::Budget { budget });
        }
        out.push(current.clone());
        return Ok(());
    }
    for x in 0..p.len() {
        if !placed.contains(x) && p.cocovers_of(x).is_subset(placed) {
            let mut next = placed;
            next.insert(x);
            current.push(x);
            extend(p, next, current, out, budget)?;
            current.pop();
        }
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq)]
struct PairSet(Vec<u64>);

impl PairSet {
    fn empty(len: usize) -> Self {
        PairSet(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn minus(&self, other: &PairSet) -> PairSet {
        PairSet(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.contains(i))
    }
}

struct Search<'a> {
    p: &'a Poset,
    pairs: Vec<(usize, usize)>,
    extensions: Vec<Vec<usize>>,
    /// For each extension, the ordered incomparable pairs `(x, y)` it places
    /// with `y` before `x`.
    reversed: Vec<PairSet>,
}

impl Search<'_> {
    fn cover(&self, remaining: &PairSet, depth: usize, chosen: &mut Vec<Vec<usize>>) -> bool {
        let Some(u) = remaining.first() else {
            return true;
        };
        if depth == 1 {
            return match self.complete(remaining) {
                Some(ext) => {
                    chosen.push(ext);
                    true
                }
                None => false,
            };
        }
        for (ext, rev) in self.extensions.iter().zip(&self.reversed) {
            if !rev.contains(u) {
                continue;
            }
            chosen.push(ext.clone());
            if self.cover(&remaining.minus(rev), depth - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// A linear extension placing `y` before `x` for every `(x, y)` in
    /// `remaining`, if one exists.
    fn complete(&self, remaining: &PairSet) -> Option<Vec<usize>> {
        let n = self.p.len();
        let mut preds: Vec<ElemSet> = (0..n).map(|x| self.p.cocovers_of(x)).collect();
        for i in remaining.iter() {
            let (x, y) = self.pairs[i];
            preds[x].insert(y);
        }
        let mut placed = ElemSet::EMPTY;
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let x = (0..n).find(|&x| !placed.contains(x) && preds[x].is_subset(placed))?;
            placed.insert(x);
            out.push(x);
        }
        Some(out)
    }
}

/// Exhaustive order dimension: the least `t <= t_max` such that some `t`
/// linear extensions intersect to the order, with a realizer witness.
pub fn order_dimension_oracle(p: &Poset, t_max: usize, budget: usize) -> Result<OrderDimension> {
    let n = p.len();
    if n == 0 {
        return Ok(OrderDimension::Exact {
            dimension: 0,
            realizer: vec![],
        });
    }
    let extensions = linear_extensions(p, budget)?;
    let mut pairs = Vec::new();
    let mut index = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            if x != y && !p.comparable(x, y) {
                index[x * n + y] = pairs.len();
                pairs.push((x, y));
            }
        }
    }
    let reversed = extensions
        .iter()
        .map(|ext| {
            let mut pos = vec![0; n];
            for (i, &x) in ext.iter().enumerate() {
                pos[x] = i;
            }
            let mut s = PairSet::empty(pairs.len());
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if pos[y] < pos[x] {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let search = Search {
        p,
        pairs,
        extensions,
        reversed,
    };
    let all = PairSet::full(search.pairs.len());
    for t in 1..=t_max {
        let mut chosen = Vec::new();
        if search.cover(&all, t, &mut chosen) {
            while chosen.len() < t {
                chosen.push(search.extensions[0].clone());
            }
            return Ok(OrderDimension::Exact {
                dimension: t,
                realizer: chosen,
            });
        }
    }
    Ok(OrderDimension::ExceedsMax { t_max })
}

/// Checks that the given linear orders intersect exactly to `p`.
pub fn is_realizer(p: &Poset, realizer: &[Vec<usize>]) -> bool {
    let n = p.len();
    let positions: Vec<Vec<usize>> = realizer
        .iter()
        .map(|ext| {
            let mut pos = vec![usize::MAX; n];
            for (i, &x) in ext.iter().enumerate() {
                pos[x] = i;
            }
            pos
        })
        .collect();
    if positions.iter().any(|pos| pos.contains(&usize::MAX)) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let all_before = positions.iter().all(|pos| pos[x] <= pos[y]);
            all_before == p.leq(x, y)
        })
    })
}
