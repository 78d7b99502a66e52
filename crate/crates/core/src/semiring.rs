//! Finite commutative semirings given by operation tables.
//!
//! Elements are indices `0..n` into a label array. The additive and
//! multiplicative tables are stored row-major, row index = left operand.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SemiringError;

/// Index of a semiring element.
pub type Elem = usize;

/// Default upper bound on the number of semiring elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 16;

/// The semiring axioms, in the order in which they are checked and reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    Distributive,
    Annihilation,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::AddIdentity,
        Axiom::MulAssociative,
        Axiom::MulCommutative,
        Axiom::MulIdentity,
        Axiom::Distributive,
        Axiom::Annihilation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::Distributive => "distributive",
            Axiom::Annihilation => "annihilation",
        }
    }

    /// Number of free variables in the axiom, i.e. the witness arity.
    pub fn arity(self) -> usize {
        match self {
            Axiom::AddAssociative | Axiom::MulAssociative | Axiom::Distributive => 3,
            Axiom::AddCommutative | Axiom::MulCommutative => 2,
            Axiom::AddIdentity | Axiom::MulIdentity | Axiom::Annihilation => 1,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed axiom together with the lexicographically smallest witness tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

/// Raw, unvalidated operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringTables {
    pub name: String,
    pub labels: Vec<String>,
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
    pub zero: Elem,
    pub one: Elem,
}

impl SemiringTables {
    fn check_shape(&self, max_elements: usize) -> Result<(), SemiringError> {
        let n = self.labels.len();
        if n == 0 {
            return Err(SemiringError::Shape("semiring has no elements".into()));
        }
        if n > max_elements {
            return Err(SemiringError::TooLarge { n, max: max_elements });
        }
        for (name, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n {
                return Err(SemiringError::Shape(format!(
                    "{name} table has {} rows, expected {n}",
                    table.len()
                )));
            }
            for (r, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(SemiringError::Shape(format!(
                        "{name} table row {r} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                if let Some(&bad) = row.iter().find(|&&e| e >= n) {
                    return Err(SemiringError::Shape(format!(
                        "{name} table row {r} contains out-of-range element {bad}"
                    )));
                }
            }
        }
        for (name, e) in [("zero", self.zero), ("one", self.one)] {
            if e >= n {
                return Err(SemiringError::Shape(format!("{name} index {e} out of range")));
            }
        }
        Ok(())
    }

    /// Exhaustively checks every axiom and reports the first witness of each
    /// failing one. Assumes the tables are well-shaped.
    pub fn axiom_violations(&self) -> Vec<Violation> {
        let n = self.labels.len();
        let add = |x: Elem, y: Elem| self.add[x][y];
        let mul = |x: Elem, y: Elem| self.mul[x][y];
        let (zero, one) = (self.zero, self.one);

        let mut out = Vec::new();
        for axiom in Axiom::ALL {
            let holds = |w: &[Elem]| -> bool {
                match axiom {
                    Axiom::AddAssociative => add(add(w[0], w[1]), w[2]) == add(w[0], add(w[1], w[2])),
                    Axiom::AddCommutative => add(w[0], w[1]) == add(w[1], w[0]),
                    Axiom::AddIdentity => add(w[0], zero) == w[0] && add(zero, w[0]) == w[0],
                    Axiom::MulAssociative => mul(mul(w[0], w[1]), w[2]) == mul(w[0], mul(w[1], w[2])),
                    Axiom::MulCommutative => mul(w[0], w[1]) == mul(w[1], w[0]),
                    Axiom::MulIdentity => mul(w[0], one) == w[0] && mul(one, w[0]) == w[0],
                    Axiom::Distributive => {
                        mul(w[0], add(w[1], w[2])) == add(mul(w[0], w[1]), mul(w[0], w[2]))
                            && mul(add(w[1], w[2]), w[0]) == add(mul(w[1], w[0]), mul(w[2], w[0]))
                    }
                    Axiom::Annihilation => mul(w[0], zero) == zero && mul(zero, w[0]) == zero,
                }
            };
            if let Some(witness) = tuples(n, axiom.arity()).find(|w| !holds(w)) {
                out.push(Violation { axiom, witness });
            }
        }
        out
    }
}

/// All tuples in `[0,n)^arity` in lexicographic order.
fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = n.pow(arity as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}

/// A validated finite commutative semiring. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    name: String,
    labels: Vec<String>,
    n: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    zero: Elem,
    one: Elem,
    neg: Option<Vec<Elem>>,
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

/// Validates tables against the commutative semiring axioms with the default
/// size cap.
pub fn validate_semiring(tables: SemiringTables) -> Result<FiniteSemiring, SemiringError> {
    FiniteSemiring::new(tables, DEFAULT_MAX_ELEMENTS)
}

impl FiniteSemiring {
    pub fn new(tables: SemiringTables, max_elements: usize) -> Result<Self, SemiringError> {
        tables.check_shape(max_elements)?;
        let violations = tables.axiom_violations();
        if !violations.is_empty() {
            return Err(SemiringError::AxiomViolation(violations));
        }
        let n = tables.labels.len();
        let flat = |t: &Vec<Vec<Elem>>| t.iter().flatten().copied().collect::<Vec<_>>();
        let mut s = FiniteSemiring {
            name: tables.name.clone(),
            n,
            add: flat(&tables.add),
            mul: flat(&tables.mul),
            zero: tables.zero,
            one: tables.one,
            labels: tables.labels,
            neg: None,
        };
        s.neg = (0..n)
            .map(|x| (0..n).find(|&y| s.add(x, y) == s.zero))
            .collect::<Option<Vec<_>>>();
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn element(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.n + y]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.n + y]
    }

    /// Additive inverse, available only when the semiring is a ring.
    #[inline]
    pub fn neg(&self, x: Elem) -> Option<Elem> {
        self.neg.as_ref().map(|t| t[x])
    }

    /// True iff every element has an additive inverse.
    pub fn is_ring(&self) -> bool {
        self.neg.is_some()
    }

    /// True iff both operations are idempotent, absorption holds and 0/1 are
    /// the bottom/top of the order `x <= y <=> x + y = y`.
    pub fn is_bounded_distributive_lattice(&self) -> bool {
        let all = || self.elements();
        all().all(|x| self.add(x, x) == x && self.mul(x, x) == x)
            && all().all(|x| {
                all().all(|y| self.add(x, self.mul(x, y)) == x && self.mul(x, self.add(x, y)) == x)
            })
            && all().all(|x| self.add(x, self.zero) == x && self.add(x, self.one) == self.one)
    }

    /// `x * y = 0` implies `x = 0` or `y = 0`, with `*` read as lattice meet.
    pub fn is_zero_meet_irreducible(&self) -> Result<bool, SemiringError> {
        if !self.is_bounded_distributive_lattice() {
            return Err(SemiringError::NotALattice);
        }
        Ok(self.elements().all(|x| {
            self.elements()
                .all(|y| self.mul(x, y) != self.zero || x == self.zero || y == self.zero)
        }))
    }

    pub fn tables(&self) -> SemiringTables {
        let rows = |t: &[Elem]| t.chunks(self.n).map(<[Elem]>::to_vec).collect();
        SemiringTables {
            name: self.name.clone(),
            labels: self.labels.clone(),
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero,
            one: self.one,
        }
    }

    pub fn classification(&self) -> Classification {
        let lattice = self.is_bounded_distributive_lattice();
        Classification {
            ring: self.is_ring(),
            bounded_distributive_lattice: lattice,
            zero_meet_irreducible: if lattice { self.is_zero_meet_irreducible().ok() } else { None },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub ring: bool,
    pub bounded_distributive_lattice: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_meet_irreducible: Option<bool>,
}

fn from_fns(
    name: &str,
    labels: Vec<String>,
    zero: Elem,
    one: Elem,
    add: impl Fn(Elem, Elem) -> Elem,
    mul: impl Fn(Elem, Elem) -> Elem,
) -> SemiringTables {
    let n = labels.len();
    SemiringTables {
        name: name.to_string(),
        add: (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect(),
        mul: (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect(),
        labels,
        zero,
        one,
    }
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Tables of the two-element Boolean semiring: `+` is or, `*` is and.
pub fn boolean_tables() -> SemiringTables {
    from_fns("bool", numeric_labels(2), 0, 1, |x, y| x | y, |x, y| x & y)
}

/// Tables of the residue ring Z_n.
pub fn modular_ring_tables(n: usize) -> SemiringTables {
    let one = if n == 1 { 0 } else { 1 };
    from_fns(&format!("z{n}"), numeric_labels(n), 0, one, |x, y| (x + y) % n, |x, y| (x * y) % n)
}

/// Tables of the n-element chain as a lattice semiring (max, min).
/// Elements are labelled `0, a1, ..., a{n-2}, 1`.
pub fn chain_lattice_tables(n: usize) -> SemiringTables {
    let labels = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => format!("a{i}"),
        })
        .collect();
    from_fns(&format!("chain{n}"), labels, 0, n - 1, usize::max, usize::min)
}

pub fn boolean_semiring() -> FiniteSemiring {
    validate_semiring(boolean_tables()).expect("Boolean semiring is valid")
}

/// Z_n; `n` must be at least 1.
pub fn modular_ring(n: usize) -> Result<FiniteSemiring, SemiringError> {
    if n == 0 {
        return Err(SemiringError::Shape("Z_0 is not finite".into()));
    }
    FiniteSemiring::new(modular_ring_tables(n), n.max(DEFAULT_MAX_ELEMENTS))
}

/// The n-element chain; `n` must be at least 2.
pub fn chain_lattice(n: usize) -> Result<FiniteSemiring, SemiringError> {
    if n < 2 {
        return Err(SemiringError::Shape("a chain lattice needs at least 2 elements".into()));
    }
    FiniteSemiring::new(chain_lattice_tables(n), n.max(DEFAULT_MAX_ELEMENTS))
}

/// The one-element semiring in which 0 = 1.
pub fn trivial_semiring() -> FiniteSemiring {
    modular_ring(1).expect("trivial semiring is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product_of_two_chains() -> SemiringTables {
        // pairs (a,b) with a,b in {0,1}, encoded as 2a+b
        from_fns(
            "2x2",
            vec!["00".into(), "01".into(), "10".into(), "11".into()],
            0,
            3,
            |x, y| x | y,
            |x, y| x & y,
        )
    }

    #[test]
    fn boolean_is_valid() {
        let s = boolean_semiring();
        assert_eq!(s.len(), 2);
        assert!(!s.is_ring());
        assert!(s.is_bounded_distributive_lattice());
        assert_eq!(s.is_zero_meet_irreducible(), Ok(true));
    }

    #[test]
    fn trivial_semiring_degenerates() {
        let s = trivial_semiring();
        assert_eq!(s.zero(), s.one());
        assert!(s.is_ring());
        assert!(s.is_bounded_distributive_lattice());
        assert_eq!(s.is_zero_meet_irreducible(), Ok(true));
    }

    #[test]
    fn z4_is_a_ring_not_a_lattice() {
        let z4 = modular_ring(4).unwrap();
        assert!(z4.is_ring());
        assert!(!z4.is_bounded_distributive_lattice());
        assert_eq!(z4.is_zero_meet_irreducible(), Err(SemiringError::NotALattice));
        for x in z4.elements() {
            assert_eq!(z4.add(x, z4.neg(x).unwrap()), z4.zero());
        }
    }

    #[test]
    fn chains_are_zero_meet_irreducible() {
        for n in 2..6 {
            let c = chain_lattice(n).unwrap();
            assert!(c.is_bounded_distributive_lattice());
            assert_eq!(c.is_zero_meet_irreducible(), Ok(true));
        }
    }

    #[test]
    fn square_lattice_zero_is_not_meet_irreducible() {
        let s = validate_semiring(product_of_two_chains()).unwrap();
        assert!(s.is_bounded_distributive_lattice());
        assert_eq!(s.is_zero_meet_irreducible(), Ok(false));
    }

    #[test]
    fn xor_mutation_of_boolean_is_gf2() {
        // Changing 1+1 from 1 to 0 turns the Boolean tables into those of Z_2.
        let mut t = boolean_tables();
        t.add[1][1] = 0;
        let s = validate_semiring(t).unwrap();
        assert!(s.is_ring());
        assert_eq!(s.tables().add, modular_ring_tables(2).add);
    }

    #[test]
    fn asymmetric_mutation_reports_commutativity() {
        let mut t = boolean_tables();
        t.add[0][1] = 0;
        match validate_semiring(t) {
            Err(SemiringError::AxiomViolation(v)) => {
                let axioms: Vec<_> = v.iter().map(|v| v.axiom).collect();
                // the mutated addition is the left projection x + y = x
                assert_eq!(axioms, vec![Axiom::AddCommutative, Axiom::AddIdentity]);
                assert_eq!(v[0].witness, vec![0, 1]);
                assert_eq!(v[1].witness, vec![1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let mut t = boolean_tables();
        t.mul[1].push(0);
        assert!(matches!(validate_semiring(t), Err(SemiringError::Shape(_))));
        let mut t = boolean_tables();
        t.add[0][0] = 7;
        assert!(matches!(validate_semiring(t), Err(SemiringError::Shape(_))));
        let mut t = boolean_tables();
        t.one = 2;
        assert!(matches!(validate_semiring(t), Err(SemiringError::Shape(_))));
        assert!(matches!(
            FiniteSemiring::new(modular_ring_tables(5), 4),
            Err(SemiringError::TooLarge { n: 5, max: 4 })
        ));
    }

    #[test]
    fn zero_and_one_may_be_listed_anywhere() {
        // Boolean semiring with the elements listed as [1, 0].
        let t = SemiringTables {
            name: "bool-reversed".into(),
            labels: vec!["1".into(), "0".into()],
            add: vec![vec![0, 0], vec![0, 1]],
            mul: vec![vec![0, 1], vec![1, 1]],
            zero: 1,
            one: 0,
        };
        let s = validate_semiring(t).unwrap();
        assert!(s.is_bounded_distributive_lattice());
    }
}
