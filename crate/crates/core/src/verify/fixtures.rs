//! Named posets with known invariants.

use serde::Serialize;

use crate::error::Result;
use crate::lattice::ideal_lattice;
use crate::poset::Poset;

/// A claimed property of a fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expected {
    IsLattice {
        value: bool,
    },
    Distributive {
        value: bool,
    },
    Gldim {
        value: usize,
    },
    AuslanderRegular {
        value: bool,
    },
    Diagonal {
        value: bool,
    },
    /// Largest `n` for which the algebra is `n`-Gorenstein.
    GorensteinUpto {
        value: usize,
    },
    PdimSimple {
        element: String,
        value: usize,
    },
    GradeSimple {
        element: String,
        value: usize,
    },
    OrderDimension {
        value: usize,
    },
    /// `(x, y)` label pairs with `g(S_x) = S_y`.
    GradeBijection {
        pairs: Vec<(String, String)>,
    },
    /// Summand labels of each term of the minimal resolution of `I(x)`.
    InjectiveResolution {
        element: String,
        terms: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Expectation {
    pub expected: Expected,
    pub citation: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    #[serde(serialize_with = "serialize_poset")]
    pub poset: Poset,
    pub expectations: Vec<Expectation>,
}

fn serialize_poset<S: serde::Serializer>(p: &Poset, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_json().serialize(s)
}

/// Poset on the given labels from `(lower, upper)` label pairs.
pub fn labelled(labels: &[&str], covers: &[(&str, &str)]) -> Result<Poset> {
    let idx = |l: &str| {
        labels
            .iter()
            .position(|&x| x == l)
            .expect("fixture labels are consistent")
    };
    let pairs: Vec<(usize, usize)> = covers.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Poset::from_covers(labels.len(), &pairs)?.with_labels(labels.iter().copied())
}

fn s(x: &str) -> String {
    x.to_string()
}

fn expect(expected: Expected, citation: &'static str) -> Expectation {
    Expectation { expected, citation }
}

pub fn chain(n: usize) -> Result<Fixture> {
    Ok(Fixture {
        name: "chain",
        poset: Poset::chain(n)?,
        expectations: vec![
            expect(
                Expected::Gldim { value: 1 },
                "a chain with at least two elements has global dimension one",
            ),
            expect(
                Expected::Diagonal { value: true },
                "chains give diagonal Auslander regular algebras",
            ),
        ],
    })
}

/// The Boolean lattice of subsets of `{1, …, n}`, labelled like `{1,3}`.
pub fn boolean_lattice(n: usize) -> Result<Poset> {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let atoms = Poset::antichain(n)?.with_labels(labels)?;
    Ok(ideal_lattice(&atoms)?.poset().clone())
}

pub fn boolean(n: usize) -> Result<Fixture> {
    Ok(Fixture {
        name: "boolean",
        poset: boolean_lattice(n)?,
        expectations: vec![
            expect(
                Expected::Gldim { value: n },
                "the Boolean lattice on n atoms has global dimension n",
            ),
            expect(
                Expected::Diagonal { value: true },
                "Boolean lattices give diagonal Auslander regular algebras",
            ),
            expect(
                Expected::Distributive { value: true },
                "Boolean lattices are distributive",
            ),
        ],
    })
}

pub fn diamond() -> Result<Fixture> {
    let poset = labelled(
        &["m", "a", "b", "c", "M"],
        &[("m", "a"), ("m", "b"), ("m", "c"), ("a", "M"), ("b", "M"), ("c", "M")],
    )?;
    Ok(Fixture {
        name: "diamond",
        poset,
        expectations: vec![
            expect(
                Expected::PdimSimple {
                    element: s("m"),
                    value: 2,
                },
                "S_m has projective dimension two although m has three covers",
            ),
            expect(
                Expected::Gldim { value: 2 },
                "global dimension two, strictly below the maximal number of covers",
            ),
            expect(
                Expected::Distributive { value: false },
                "the diamond is a forbidden sublattice",
            ),
            expect(
                Expected::GorensteinUpto { value: 1 },
                "lattices are 1-Gorenstein; non-distributive lattices are not 2-Gorenstein",
            ),
        ],
    })
}

pub fn pentagon() -> Result<Fixture> {
    let poset = labelled(
        &["m", "a", "b", "c", "M"],
        &[("m", "a"), ("a", "b"), ("b", "M"), ("m", "c"), ("c", "M")],
    )?;
    Ok(Fixture {
        name: "pentagon",
        poset,
        expectations: vec![
            expect(
                Expected::Distributive { value: false },
                "the pentagon is a forbidden sublattice",
            ),
            expect(
                Expected::GorensteinUpto { value: 1 },
                "non-distributive lattices are not 2-Gorenstein",
            ),
        ],
    })
}

pub fn l9() -> Result<Fixture> {
    let labels = ["v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"];
    let poset = labelled(
        &labels,
        &[
            ("v0", "v1"),
            ("v0", "v2"),
            ("v0", "v4"),
            ("v1", "v3"),
            ("v2", "v5"),
            ("v2", "v6"),
            ("v3", "v5"),
            ("v3", "v7"),
            ("v4", "v6"),
            ("v4", "v7"),
            ("v5", "v8"),
            ("v6", "v8"),
            ("v7", "v8"),
        ],
    )?;
    Ok(Fixture {
        name: "l9",
        poset,
        expectations: vec![
            expect(
                Expected::GradeSimple {
                    element: s("v0"),
                    value: 2,
                },
                "nine-element lattice whose bottom simple is not perfect: grade two",
            ),
            expect(
                Expected::PdimSimple {
                    element: s("v0"),
                    value: 3,
                },
                "nine-element lattice whose bottom simple is not perfect: projective dimension three",
            ),
        ],
    })
}

pub fn l10() -> Result<Fixture> {
    let labels = ["v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"];
    let poset = labelled(
        &labels,
        &[
            ("v1", "v2"),
            ("v1", "v3"),
            ("v1", "v7"),
            ("v1", "v8"),
            ("v1", "v9"),
            ("v2", "v0"),
            ("v2", "v5"),
            ("v2", "v6"),
            ("v3", "v0"),
            ("v8", "v5"),
            ("v9", "v6"),
            ("v0", "v4"),
            ("v5", "v4"),
            ("v6", "v4"),
            ("v7", "v4"),
        ],
    )?;
    Ok(Fixture {
        name: "l10",
        poset,
        expectations: vec![
            expect(
                Expected::Gldim { value: 2 },
                "ten-element lattice with global dimension two",
            ),
            expect(
                Expected::OrderDimension { value: 3 },
                "the same lattice has order dimension three",
            ),
            expect(
                Expected::Distributive { value: false },
                "global dimension and order dimension differ, so the lattice is not distributive",
            ),
        ],
    })
}

pub fn p7() -> Result<Fixture> {
    let labels = ["v1", "v2", "v3", "v4", "v5", "v6", "v7"];
    let poset = labelled(
        &labels,
        &[
            ("v1", "v2"),
            ("v1", "v4"),
            ("v2", "v3"),
            ("v2", "v6"),
            ("v4", "v5"),
            ("v4", "v6"),
            ("v3", "v5"),
            ("v5", "v7"),
            ("v6", "v7"),
        ],
    )?;
    Ok(Fixture {
        name: "p7",
        poset,
        expectations: vec![
            expect(
                Expected::IsLattice { value: false },
                "seven-element bounded poset that is not a lattice",
            ),
            expect(
                Expected::AuslanderRegular { value: true },
                "its incidence algebra is nevertheless Auslander regular",
            ),
            expect(Expected::Gldim { value: 3 }, "with global dimension three"),
        ],
    })
}

pub fn p8() -> Result<Fixture> {
    let labels = ["1", "2", "3", "4", "5", "6", "7", "8"];
    let poset = labelled(
        &labels,
        &[
            ("1", "2"),
            ("1", "4"),
            ("2", "3"),
            ("2", "7"),
            ("4", "5"),
            ("4", "6"),
            ("3", "5"),
            ("6", "7"),
            ("5", "8"),
            ("7", "8"),
        ],
    )?;
    let pairs = [
        ("1", "8"),
        ("2", "5"),
        ("3", "4"),
        ("4", "7"),
        ("5", "6"),
        ("6", "2"),
        ("7", "3"),
        ("8", "1"),
    ]
    .iter()
    .map(|&(a, b)| (s(a), s(b)))
    .collect();
    Ok(Fixture {
        name: "p8",
        poset,
        expectations: vec![
            expect(
                Expected::IsLattice { value: false },
                "eight-element non-lattice with a diagonal Auslander regular incidence algebra",
            ),
            expect(
                Expected::GradeBijection { pairs },
                "its grade bijection sends S_1 to S_8, S_2 to S_5, and so on",
            ),
            expect(
                Expected::AuslanderRegular { value: true },
                "its incidence algebra is Auslander regular",
            ),
            expect(Expected::Diagonal { value: true }, "and diagonal"),
            expect(Expected::Gldim { value: 3 }, "with global dimension three"),
        ],
    })
}

/// `I({4})` over the Boolean lattice on four atoms.
pub fn b4_injective() -> Result<Fixture> {
    let terms = vec![
        vec![s("{}")],
        vec![s("{1}"), s("{2}"), s("{3}")],
        vec![s("{1,2}"), s("{1,3}"), s("{2,3}")],
        vec![s("{1,2,3}")],
    ];
    Ok(Fixture {
        name: "b4",
        poset: boolean_lattice(4)?,
        expectations: vec![
            expect(
                Expected::InjectiveResolution {
                    element: s("{4}"),
                    terms,
                },
                "the Koszul resolution of I({4}) over the Boolean lattice on four atoms is minimal",
            ),
            expect(
                Expected::Gldim { value: 4 },
                "the Boolean lattice on n atoms has global dimension n",
            ),
        ],
    })
}

/// Every named fixture, with the chain on three elements and `B_2` as
/// representatives of the parametric families.
pub fn all_fixtures() -> Result<Vec<Fixture>> {
    Ok(vec![
        chain(3)?,
        boolean(2)?,
        diamond()?,
        pentagon()?,
        l9()?,
        l10()?,
        p7()?,
        p8()?,
        b4_injective()?,
    ])
}

pub fn fixture_by_name(name: &str) -> Result<Option<Fixture>> {
    Ok(all_fixtures()?.into_iter().find(|f| f.name == name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::as_lattice;

    #[test]
    fn fixture_shapes() {
        assert_eq!(l9().unwrap().poset.len(), 9);
        assert_eq!(l10().unwrap().poset.len(), 10);
        assert!(as_lattice(&l9().unwrap().poset).is_ok());
        assert!(as_lattice(&l10().unwrap().poset).is_ok());
        assert!(as_lattice(&p7().unwrap().poset).is_err());
        assert!(as_lattice(&p8().unwrap().poset).is_err());
        assert!(p8().unwrap().poset.is_bounded());
        let b4 = boolean_lattice(4).unwrap();
        assert_eq!(b4.len(), 16);
        assert!(b4.index_of("{4}").is_some() && b4.index_of("{}").is_some());
    }
}
