//! Published data for the two worked examples: the Boolean semiring and the
//! ring `ℤ₄`, both at rank 2. Nothing here is computed; the reproduction
//! command compares the pipeline against these tables.

use std::sync::Arc;

use serde::Serialize;

use crate::error::ModuleError;
use crate::poset::FinitePoset;
use crate::semimodule::{free_semimodule, FreeSemimodule};
use crate::semiring::{boolean_semiring, modular_ring, FiniteSemiring};
use crate::sublattice::{SubLattice, Subsemimodule};

pub struct GoldenExample {
    pub id: &'static str,
    pub builtin: &'static str,
    pub rank: usize,
    /// Named subsemimodules with their members, as coordinate labels.
    pub subsemimodules: &'static [(&'static str, &'static [[&'static str; 2]])],
    /// `(U, U^⊥)`.
    pub perp: &'static [(&'static str, &'static str)],
    pub closed: &'static [&'static str],
    pub splitting: &'static [&'static str],
    /// Cover relation of the whole lattice, as drawn.
    pub lattice_covers: &'static [(&'static str, &'static str)],
    /// Cover relation of the second diagram, drawn on `diagram_members`.
    pub diagram_members: &'static [&'static str],
    pub diagram_covers: &'static [(&'static str, &'static str)],
}

pub const EXAMPLE1: GoldenExample = GoldenExample {
    id: "example1",
    builtin: "bool",
    rank: 2,
    subsemimodules: &[
        ("U1", &[["0", "0"]]),
        ("U2", &[["0", "0"], ["0", "1"]]),
        ("U3", &[["0", "0"], ["1", "1"]]),
        ("U4", &[["0", "0"], ["1", "0"]]),
        ("U5", &[["0", "0"], ["0", "1"], ["1", "1"]]),
        ("U6", &[["0", "0"], ["1", "0"], ["1", "1"]]),
        ("M", &[["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]),
    ],
    perp: &[
        ("U1", "M"),
        ("U2", "U4"),
        ("U3", "U1"),
        ("U4", "U2"),
        ("U5", "U1"),
        ("U6", "U1"),
        ("M", "U1"),
    ],
    closed: &["U1", "U2", "U4", "M"],
    splitting: &["U1", "U2", "U4", "M"],
    lattice_covers: &[
        ("U1", "U2"),
        ("U1", "U3"),
        ("U1", "U4"),
        ("U2", "U5"),
        ("U3", "U5"),
        ("U3", "U6"),
        ("U4", "U6"),
        ("U5", "M"),
        ("U6", "M"),
    ],
    diagram_members: &["U1", "U2", "U4", "M"],
    diagram_covers: &[("U1", "U2"), ("U1", "U4"), ("U2", "M"), ("U4", "M")],
};

pub const EXAMPLE2: GoldenExample = GoldenExample {
    id: "example2",
    builtin: "z4",
    rank: 2,
    subsemimodules: &[
        ("U1", &[["0", "0"]]),
        ("U2", &[["0", "0"], ["0", "2"]]),
        ("U3", &[["0", "0"], ["2", "2"]]),
        ("U4", &[["0", "0"], ["2", "0"]]),
        ("U5", &[["0", "0"], ["0", "1"], ["0", "2"], ["0", "3"]]),
        ("U6", &[["0", "0"], ["0", "2"], ["2", "1"], ["2", "3"]]),
        ("U7", &[["0", "0"], ["1", "1"], ["2", "2"], ["3", "3"]]),
        ("U8", &[["0", "0"], ["0", "2"], ["2", "0"], ["2", "2"]]),
        ("U9", &[["0", "0"], ["1", "3"], ["2", "2"], ["3", "1"]]),
        ("U10", &[["0", "0"], ["1", "2"], ["2", "0"], ["3", "2"]]),
        ("U11", &[["0", "0"], ["1", "0"], ["2", "0"], ["3", "0"]]),
        (
            "U12",
            &[["0", "0"], ["0", "1"], ["0", "2"], ["0", "3"], ["2", "0"], ["2", "1"], ["2", "2"], ["2", "3"]],
        ),
        (
            "U13",
            &[["0", "0"], ["0", "2"], ["1", "1"], ["1", "3"], ["2", "0"], ["2", "2"], ["3", "1"], ["3", "3"]],
        ),
        (
            "U14",
            &[["0", "0"], ["0", "2"], ["1", "0"], ["1", "2"], ["2", "0"], ["2", "2"], ["3", "0"], ["3", "2"]],
        ),
        (
            "M",
            &[
                ["0", "0"], ["0", "1"], ["0", "2"], ["0", "3"],
                ["1", "0"], ["1", "1"], ["1", "2"], ["1", "3"],
                ["2", "0"], ["2", "1"], ["2", "2"], ["2", "3"],
                ["3", "0"], ["3", "1"], ["3", "2"], ["3", "3"],
            ],
        ),
    ],
    perp: &[
        ("U1", "M"),
        ("U2", "U14"),
        ("U3", "U13"),
        ("U4", "U12"),
        ("U5", "U11"),
        ("U6", "U10"),
        ("U7", "U9"),
        ("U8", "U8"),
        ("U9", "U7"),
        ("U10", "U6"),
        ("U11", "U5"),
        ("U12", "U4"),
        ("U13", "U3"),
        ("U14", "U2"),
        ("M", "U1"),
    ],
    closed: &[
        "U1", "U2", "U3", "U4", "U5", "U6", "U7", "U8", "U9", "U10", "U11", "U12", "U13", "U14", "M",
    ],
    splitting: &["U1", "U5", "U6", "U10", "U11", "M"],
    lattice_covers: &[
        ("U1", "U2"),
        ("U1", "U3"),
        ("U1", "U4"),
        ("U2", "U5"),
        ("U2", "U6"),
        ("U2", "U8"),
        ("U3", "U7"),
        ("U3", "U8"),
        ("U3", "U9"),
        ("U4", "U8"),
        ("U4", "U10"),
        ("U4", "U11"),
        ("U5", "U12"),
        ("U6", "U12"),
        ("U7", "U13"),
        ("U8", "U12"),
        ("U8", "U13"),
        ("U8", "U14"),
        ("U9", "U13"),
        ("U10", "U14"),
        ("U11", "U14"),
        ("U12", "M"),
        ("U13", "M"),
        ("U14", "M"),
    ],
    diagram_members: &["U1", "U5", "U6", "U10", "U11", "M"],
    diagram_covers: &[
        ("U1", "U5"),
        ("U1", "U6"),
        ("U1", "U10"),
        ("U1", "U11"),
        ("U5", "M"),
        ("U6", "M"),
        ("U10", "M"),
        ("U11", "M"),
    ],
};

pub const EXAMPLES: [&GoldenExample; 2] = [&EXAMPLE1, &EXAMPLE2];

pub fn example(id: &str) -> Option<&'static GoldenExample> {
    EXAMPLES.into_iter().find(|e| e.id == id)
}

/// One comparison between computed and published data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub item: String,
    pub matches: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub differences: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reproduction {
    pub example: String,
    pub comparisons: Vec<Comparison>,
}

impl Reproduction {
    pub fn matches(&self) -> bool {
        self.comparisons.iter().all(|c| c.matches)
    }
}

impl GoldenExample {
    pub fn semiring(&self) -> FiniteSemiring {
        match self.builtin {
            "bool" => boolean_semiring(),
            _ => modular_ring(4).expect("ℤ₄ is a ring"),
        }
    }

    pub fn ambient(&self) -> Arc<FreeSemimodule> {
        free_semimodule(self.semiring(), self.rank).expect("rank-2 examples are small")
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.subsemimodules.iter().map(|(n, _)| *n).collect()
    }

    /// The published subsemimodules as sets over `m`, or the name of the
    /// first one that is not a subsemimodule.
    pub fn published(&self, m: &Arc<FreeSemimodule>) -> Result<Vec<Subsemimodule>, String> {
        self.subsemimodules
            .iter()
            .map(|(name, members)| {
                let ids: Option<Vec<_>> = members.iter().map(|v| m.id_from_labels(v)).collect();
                ids.and_then(|ids| Subsemimodule::try_from_members(m, ids)).ok_or_else(|| name.to_string())
            })
            .collect()
    }

    /// Published names for the members of `lattice`, if every member is
    /// one of the published subsemimodules.
    pub fn overlay(&self, lattice: &SubLattice) -> Option<Vec<String>> {
        let published = self.published(lattice.ambient()).ok()?;
        lattice
            .subs()
            .iter()
            .map(|u| published.iter().position(|p| p == u).map(|i| self.subsemimodules[i].0.to_string()))
            .collect()
    }

    /// Regenerates everything from scratch and compares it with the tables.
    pub fn reproduce(&self) -> Result<Reproduction, ModuleError> {
        let m = self.ambient();
        let mut lattice = SubLattice::new(&m, 1000)?;
        let mut comparisons = Vec::new();

        let published = match self.published(&m) {
            Ok(p) => p,
            Err(name) => {
                comparisons.push(Comparison {
                    item: "subsemimodules".into(),
                    matches: false,
                    differences: vec![format!("{name} is not a subsemimodule")],
                });
                return Ok(Reproduction { example: self.id.into(), comparisons });
            }
        };
        let mut diffs = Vec::new();
        for (u, (name, _)) in published.iter().zip(self.subsemimodules) {
            if lattice.index_of(u).is_none() {
                diffs.push(format!("{name} = {} was not found", u.format()));
            }
        }
        for u in lattice.subs() {
            if !published.contains(u) {
                diffs.push(format!("unlisted subsemimodule {}", u.format()));
            }
        }
        if lattice.len() != published.len() {
            diffs.push(format!("found {} subsemimodules, expected {}", lattice.len(), published.len()));
        }
        let ok = diffs.is_empty();
        comparisons.push(Comparison { item: "subsemimodules".into(), matches: ok, differences: diffs });
        if !ok {
            return Ok(Reproduction { example: self.id.into(), comparisons });
        }
        lattice.set_labels(self.overlay(&lattice).expect("every member is published"));
        let idx = |name: &str| lattice.labels().iter().position(|l| l == name).expect("published name");

        let mut diffs = Vec::new();
        for &(u, p) in self.perp {
            let got = lattice.label(lattice.perp_index(idx(u)));
            if got != p {
                diffs.push(format!("{u}^⊥ = {got}, expected {p}"));
            }
        }
        if self.perp.len() != lattice.len() {
            diffs.push(format!("⊥ table has {} rows, expected {}", self.perp.len(), lattice.len()));
        }
        comparisons.push(Comparison { item: "perp-table".into(), matches: diffs.is_empty(), differences: diffs });

        let names = |ids: Vec<usize>| -> Vec<String> { ids.into_iter().map(|i| lattice.label(i).to_string()).collect() };
        comparisons.push(compare_sets("closed", &names(lattice.closed_indices()), self.closed));
        comparisons.push(compare_sets("splitting", &names(lattice.splitting_indices()), self.splitting));

        comparisons.push(compare_covers("lattice-diagram", &lattice.poset(), self.lattice_covers));
        let members: Vec<usize> = self.diagram_members.iter().map(|n| idx(n)).collect();
        match lattice.poset_of(&members) {
            Ok(p) => comparisons.push(compare_covers("sub-diagram", &p, self.diagram_covers)),
            Err(e) => comparisons.push(Comparison {
                item: "sub-diagram".into(),
                matches: false,
                differences: vec![e.to_string()],
            }),
        }
        Ok(Reproduction { example: self.id.into(), comparisons })
    }
}

fn compare_sets(item: &str, got: &[String], expected: &[&str]) -> Comparison {
    let mut differences = Vec::new();
    for g in got {
        if !expected.contains(&g.as_str()) {
            differences.push(format!("unexpected {g}"));
        }
    }
    for e in expected {
        if !got.iter().any(|g| g == e) {
            differences.push(format!("missing {e}"));
        }
    }
    Comparison { item: item.into(), matches: differences.is_empty(), differences }
}

/// Compares the cover relation of `poset` (by label) with a drawn diagram.
pub fn compare_covers(item: &str, poset: &FinitePoset, expected: &[(&str, &str)]) -> Comparison {
    let got: Vec<(String, String)> = poset
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| (poset.label(a).to_string(), poset.label(b).to_string()))
        .collect();
    let mut differences = Vec::new();
    for (a, b) in &got {
        if !expected.iter().any(|&(x, y)| x == a && y == b) {
            differences.push(format!("extra cover {a} ⋖ {b}"));
        }
    }
    for &(x, y) in expected {
        if !got.iter().any(|(a, b)| a == x && b == y) {
            differences.push(format!("missing cover {x} ⋖ {y}"));
        }
    }
    Comparison { item: item.into(), matches: differences.is_empty(), differences }
}
