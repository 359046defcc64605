use std::collections::BTreeMap;

use super::{ElemSet, Poset};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_SIZE: usize = 6;

/// Largest size `canonical_form` accepts (the code must fit in 64 bits).
const MAX_CANONICAL_SIZE: usize = 8;

/// All posets on `n` elements up to isomorphism, sorted by canonical code.
///
/// Naturally labelled posets are grown one element at a time (each new element
/// sits on top of an order ideal of the previous ones) and deduplicated by
/// `canonical_form`. Every returned poset is relabelled canonically.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::Size {
            what: "poset enumeration",
            size: n,
            cap: MAX_ENUMERATION_SIZE,
        });
    }
    // Each labelled poset is stored as its `below` sets.
    let mut layer: Vec<Vec<ElemSet>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for below in &layer {
            let p = from_below(below);
            for ideal in p.all_order_ideals()? {
                let mut b = below.clone();
                let mut own = ideal.members();
                own.insert(k);
                b.push(own);
                next.push(b);
            }
        }
        layer = next;
    }
    let mut classes: BTreeMap<u64, Poset> = BTreeMap::new();
    for below in &layer {
        let p = from_below(below);
        let (code, perm) = canonical_form(&p);
        classes.entry(code).or_insert_with(|| relabel(&p, &perm));
    }
    Ok(classes.into_values().collect())
}

fn from_below(below: &[ElemSet]) -> Poset {
    let covers: Vec<(usize, usize)> = below
        .iter()
        .enumerate()
        .flat_map(|(y, s)| s.iter().filter(move |&x| x != y).map(move |x| (x, y)))
        .collect();
    Poset::from_covers(below.len(), &covers).expect("naturally labelled relations are acyclic")
}

/// Poset with element `perm[i]` of `p` renamed to `i`.
fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let n = p.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if p.lt(perm[i], perm[j]) {
                covers.push((i, j));
            }
        }
    }
    Poset::from_covers(n, &covers).expect("relabelling preserves acyclicity")
}

/// Lexicographically minimal encoding of the strict order relation over all
/// relabellings, with the minimizing permutation (`perm[i]` = old index of new
/// element `i`). Intended for `n <= 8`.
pub fn canonical_form(p: &Poset) -> (u64, Vec<usize>) {
    let n = p.len();
    assert!(
        n <= MAX_CANONICAL_SIZE,
        "canonical form is limited to {MAX_CANONICAL_SIZE} elements"
    );
    let mut best = (u64::MAX, Vec::new());
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = ElemSet::EMPTY;
    search(p, &mut perm, &mut used, &mut best);
    best
}

fn search(p: &Poset, perm: &mut Vec<usize>, used: &mut ElemSet, best: &mut (u64, Vec<usize>)) {
    let n = p.len();
    if perm.len() == n {
        let code = encode(p, perm);
        if code < best.0 {
            *best = (code, perm.clone());
        }
        return;
    }
    for x in 0..n {
        if used.contains(x) {
            continue;
        }
        used.insert(x);
        perm.push(x);
        search(p, perm, used, best);
        perm.pop();
        used.remove(x);
    }
}

fn encode(p: &Poset, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                code = code << 1 | p.lt(perm[i], perm[j]) as u64;
            }
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_posets(0).unwrap().len(), 1);
        assert_eq!(enumerate_posets(1).unwrap().len(), 1);
        assert_eq!(enumerate_posets(2).unwrap().len(), 2);
        assert_eq!(enumerate_posets(3).unwrap().len(), 5);
        assert_eq!(enumerate_posets(4).unwrap().len(), 16);
        assert!(enumerate_posets(7).is_err());
    }

    #[test]
    fn isomorphic_posets_share_a_code() {
        let a = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let b = Poset::from_covers(3, &[(2, 0), (2, 1)]).unwrap();
        let c = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(canonical_form(&a).0, canonical_form(&b).0);
        assert_ne!(canonical_form(&a).0, canonical_form(&c).0);
    }

    #[test]
    fn relabelled_output_has_canonical_code() {
        for p in enumerate_posets(4).unwrap() {
            let (code, perm) = canonical_form(&p);
            assert_eq!(encode(&p, &(0..p.len()).collect::<Vec<_>>()), code, "{perm:?}");
        }
    }
}
