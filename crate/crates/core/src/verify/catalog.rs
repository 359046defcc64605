use crate::error::{Error, Result};
use crate::lattice::{as_lattice, Lattice};
use crate::poset::{enumerate_posets, Poset, MAX_ENUMERATION_SIZE};

/// Largest lattice size in the catalog.
pub const MAX_CATALOG_SIZE: usize = MAX_ENUMERATION_SIZE + 2;

/// `p` with a new minimum (index 0) and maximum (index `n + 1`).
pub fn adjoin_bounds(p: &Poset) -> Poset {
    let n = p.len();
    let mut covers: Vec<(usize, usize)> = p.covers().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    for x in 0..n {
        covers.push((0, x + 1));
        covers.push((x + 1, n + 1));
    }
    if n == 0 {
        covers.push((0, 1));
    }
    Poset::from_covers(n + 2, &covers).expect("adding bounds keeps the order acyclic")
}

/// Every lattice with exactly `n` elements, up to isomorphism.
///
/// A lattice with at least two elements is a bounded poset, so removing its
/// bounds is a bijection onto posets with `n - 2` elements; the catalog
/// adjoins bounds to each enumerated poset and keeps the lattices.
pub fn lattices_of_size(n: usize) -> Result<Vec<Lattice>> {
    if n > MAX_CATALOG_SIZE {
        return Err(Error::Size {
            what: "lattice catalog",
            size: n,
            cap: MAX_CATALOG_SIZE,
        });
    }
    match n {
        0 => Ok(vec![]),
        1 => Ok(vec![as_lattice(&Poset::chain(1)?)?]),
        _ => Ok(enumerate_posets(n - 2)?
            .iter()
            .filter_map(|p| as_lattice(&adjoin_bounds(p)).ok())
            .collect()),
    }
}

/// Every lattice with at most `max_n` elements, by increasing size.
pub fn lattice_catalog(max_n: usize) -> Result<Vec<Lattice>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(lattices_of_size(n)?);
    }
    Ok(out)
}
