//! Finite bounded posets with an optional unary operation.
//!
//! Suprema and infima are computed from the definition (least common upper
//! bound, greatest common lower bound) and are never assumed to exist.

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::PosetError;
use crate::sublattice::Subsemimodule;

type JoinMeet = Arc<(Vec<usize>, Vec<usize>)>;
type Tables = Option<JoinMeet>;

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    size: usize,
    leq: Vec<bool>,
    bottom: usize,
    top: usize,
    unary: Option<Vec<usize>>,
    tables: OnceLock<Tables>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.size == other.size
            && self.leq == other.leq
            && self.unary == other.unary
    }
}

impl Eq for FinitePoset {}

/// Pentagon sublattice `zero < low < high < one`, `zero < side < one`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pentagon {
    pub zero: usize,
    pub low: usize,
    pub high: usize,
    pub side: usize,
    pub one: usize,
}

impl Pentagon {
    pub fn members(&self) -> [usize; 5] {
        let mut m = [self.zero, self.low, self.high, self.side, self.one];
        m.sort_unstable();
        m
    }
}

/// Diamond sublattice: three pairwise incomparable atoms over a common
/// bottom and under a common top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Diamond {
    pub zero: usize,
    pub atoms: [usize; 3],
    pub one: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthomodularViolation {
    pub x: usize,
    pub y: usize,
    pub reason: String,
}

impl FinitePoset {
    /// Builds a poset from an order predicate on `0..size`.
    pub fn from_relation(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
        unary: Option<Vec<usize>>,
    ) -> Result<Self, PosetError> {
        if size == 0 {
            return Err(PosetError::Empty);
        }
        let mut rel = vec![false; size * size];
        for i in 0..size {
            for j in 0..size {
                rel[i * size + j] = leq(i, j);
            }
        }
        let r = |i: usize, j: usize| rel[i * size + j];
        for i in 0..size {
            if !r(i, i) {
                return Err(PosetError::NotPartialOrder(format!("{i} ≤ {i} fails")));
            }
            for j in 0..size {
                if i != j && r(i, j) && r(j, i) {
                    return Err(PosetError::NotPartialOrder(format!("{i} and {j} are mutually below")));
                }
                if !r(i, j) {
                    continue;
                }
                if let Some(k) = (0..size).find(|&k| r(j, k) && !r(i, k)) {
                    return Err(PosetError::NotPartialOrder(format!("{i} ≤ {j} ≤ {k} but not {i} ≤ {k}")));
                }
            }
        }
        let bottom = (0..size).find(|&b| (0..size).all(|x| r(b, x))).ok_or(PosetError::NoBounds("bottom"))?;
        let top = (0..size).find(|&t| (0..size).all(|x| r(x, t))).ok_or(PosetError::NoBounds("top"))?;
        if let Some(u) = &unary {
            if u.len() != size || u.iter().any(|&x| x >= size) {
                return Err(PosetError::InvolutionNotClosed);
            }
        }
        Ok(FinitePoset {
            labels: (0..size).map(|i| i.to_string()).collect(),
            size,
            leq: rel,
            bottom,
            top,
            unary,
            tables: OnceLock::new(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size);
        self.labels = labels;
        self
    }

    pub fn with_unary(mut self, unary: Option<Vec<usize>>) -> Result<Self, PosetError> {
        if let Some(u) = &unary {
            if u.len() != self.size || u.iter().any(|&x| x >= self.size) {
                return Err(PosetError::InvolutionNotClosed);
            }
        }
        self.unary = unary;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn unary(&self) -> Option<&[usize]> {
        self.unary.as_deref()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Least upper bound of `x` and `y`, if it exists.
    pub fn sup(&self, x: usize, y: usize) -> Option<usize> {
        let ub: Vec<usize> = self.elements().filter(|&z| self.leq(x, z) && self.leq(y, z)).collect();
        ub.iter().copied().find(|&z| ub.iter().all(|&w| self.leq(z, w)))
    }

    /// Greatest lower bound of `x` and `y`, if it exists.
    pub fn inf(&self, x: usize, y: usize) -> Option<usize> {
        let lb: Vec<usize> = self.elements().filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
        lb.iter().copied().find(|&z| lb.iter().all(|&w| self.leq(w, z)))
    }

    /// Join and meet tables, or `None` if some pair lacks a sup or inf.
    fn lattice_tables(&self) -> Tables {
        self.tables.get_or_init(|| self.compute_tables().map(Arc::new)).clone()
    }

    fn compute_tables(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.size;
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let s = self.sup(i, j)?;
                let t = self.inf(i, j)?;
                join[i * n + j] = s;
                join[j * n + i] = s;
                meet[i * n + j] = t;
                meet[j * n + i] = t;
            }
        }
        Some((join, meet))
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_tables().is_some()
    }

    fn require_lattice(&self) -> Result<JoinMeet, PosetError> {
        self.lattice_tables().ok_or(PosetError::NotALattice)
    }

    /// Every pentagon sublattice, each listed once.
    ///
    /// Uses the characterisation: `a < b` with some `c` such that
    /// `a ∨ c = b ∨ c` and `a ∧ c = b ∧ c`; such a `c` is incomparable to both
    /// and `{a∧c, a, b, c, a∨c}` is a pentagon.
    pub fn n5_sublattices(&self) -> Result<Vec<Pentagon>, PosetError> {
        let mut out = Vec::new();
        self.scan_n5(|p| {
            out.push(p);
            true
        })?;
        Ok(out)
    }

    /// Calls `f` on each pentagon until it returns `false`.
    fn scan_n5(&self, mut f: impl FnMut(Pentagon) -> bool) -> Result<(), PosetError> {
        let n = self.size;
        let tables = self.require_lattice()?;
        let (join, meet) = (&tables.0, &tables.1);
        for a in 0..n {
            for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                for c in 0..n {
                    if join[a * n + c] == join[b * n + c]
                        && meet[a * n + c] == meet[b * n + c]
                        && !f(Pentagon { zero: meet[a * n + c], low: a, high: b, side: c, one: join[a * n + c] })
                    {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n5_witness(&self) -> Result<Option<Pentagon>, PosetError> {
        let mut found = None;
        self.scan_n5(|p| {
            found = Some(p);
            false
        })?;
        Ok(found)
    }

    pub fn is_modular(&self) -> Result<bool, PosetError> {
        Ok(self.n5_witness()?.is_none())
    }

    pub fn m3_witness(&self) -> Result<Option<Diamond>, PosetError> {
        let n = self.size;
        let tables = self.require_lattice()?;
        let (join, meet) = (&tables.0, &tables.1);
        for x in 0..n {
            for y in x + 1..n {
                if self.comparable(x, y) {
                    continue;
                }
                let (j, m) = (join[x * n + y], meet[x * n + y]);
                for z in y + 1..n {
                    if !self.comparable(x, z)
                        && !self.comparable(y, z)
                        && join[x * n + z] == j
                        && join[y * n + z] == j
                        && meet[x * n + z] == m
                        && meet[y * n + z] == m
                    {
                        return Ok(Some(Diamond { zero: m, atoms: [x, y, z], one: j }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// No pentagon and no diamond sublattice.
    pub fn is_distributive(&self) -> Result<bool, PosetError> {
        Ok(self.n5_witness()?.is_none() && self.m3_witness()?.is_none())
    }

    /// Every element has a lattice complement.
    pub fn is_complemented(&self) -> Result<bool, PosetError> {
        let n = self.size;
        let tables = self.require_lattice()?;
        let (join, meet) = (&tables.0, &tables.1);
        Ok((0..n).all(|x| (0..n).any(|y| join[x * n + y] == self.top && meet[x * n + y] == self.bottom)))
    }

    pub fn is_boolean_algebra(&self) -> Result<bool, PosetError> {
        Ok(self.is_distributive()? && self.is_complemented()?)
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.covers(self.bottom, a)).collect()
    }

    /// Every element other than the bottom lies above an atom.
    pub fn is_atomic(&self) -> bool {
        let atoms = self.atoms();
        self.elements()
            .filter(|&x| x != self.bottom)
            .all(|x| atoms.iter().any(|&a| self.leq(a, x)))
    }

    fn require_unary(&self) -> Result<&[usize], PosetError> {
        self.unary.as_deref().ok_or(PosetError::NoInvolution)
    }

    /// `x ≤ y ⇒ y' ≤ x'` and `x'' = x`.
    pub fn is_antitone_involution(&self) -> Result<bool, PosetError> {
        let u = self.require_unary()?;
        Ok(self.elements().all(|x| u[u[x]] == x)
            && self.elements().all(|x| self.elements().all(|y| !self.leq(x, y) || self.leq(u[y], u[x]))))
    }

    /// `sup(x, x') = 1` and `inf(x, x') = 0` for every `x`.
    pub fn is_complementation(&self) -> Result<bool, PosetError> {
        let u = self.require_unary()?;
        Ok(self
            .elements()
            .all(|x| self.sup(x, u[x]) == Some(self.top) && self.inf(x, u[x]) == Some(self.bottom)))
    }

    pub fn is_orthoposet(&self) -> Result<bool, PosetError> {
        Ok(self.is_antitone_involution()? && self.is_complementation()?)
    }

    /// First pair `x ≤ y` at which the orthomodular law fails, if any.
    pub fn orthomodular_violation(&self) -> Result<Option<OrthomodularViolation>, PosetError> {
        if !self.is_orthoposet()? {
            return Err(PosetError::NotOrthoposet);
        }
        let u = self.unary.as_deref().unwrap();
        for x in self.elements() {
            for y in self.elements() {
                if !self.leq(x, y) {
                    continue;
                }
                let fail = |reason: String| Ok(Some(OrthomodularViolation { x, y, reason }));
                if self.sup(x, y).is_none() {
                    return fail("x ∨ y does not exist".into());
                }
                let Some(m) = self.inf(y, u[x]) else {
                    return fail("y ∧ x' does not exist".into());
                };
                let Some(j) = self.sup(x, m) else {
                    return fail("x ∨ (y ∧ x') does not exist".into());
                };
                if j != y {
                    return fail(format!("x ∨ (y ∧ x') = {} ≠ y", self.labels[j]));
                }
            }
        }
        Ok(None)
    }

    pub fn is_orthomodular_poset(&self) -> Result<bool, PosetError> {
        Ok(self.orthomodular_violation()?.is_none())
    }

    /// The order-dual poset; the unary operation is kept.
    pub fn dual(&self) -> FinitePoset {
        let n = self.size;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(j, i);
            }
        }
        FinitePoset {
            labels: self.labels.clone(),
            size: n,
            leq,
            bottom: self.top,
            top: self.bottom,
            unary: self.unary.clone(),
            tables: OnceLock::new(),
        }
    }

    /// Invariants used to prune the isomorphism search.
    fn fingerprints(&self) -> Vec<(usize, usize, usize)> {
        let h = self.heights();
        self.elements()
            .map(|x| {
                let down = self.elements().filter(|&y| self.leq(y, x)).count();
                let up = self.elements().filter(|&y| self.leq(x, y)).count();
                (h[x], down, up)
            })
            .collect()
    }

    /// An order isomorphism onto `other` (preserving the unary operation if
    /// requested), as the image of each element.
    pub fn find_isomorphism(&self, other: &FinitePoset, respect_unary: bool) -> Option<Vec<usize>> {
        let n = self.size;
        if n != other.size {
            return None;
        }
        if respect_unary && (self.unary.is_none() || other.unary.is_none()) {
            return None;
        }
        let (fa, fb) = (self.fingerprints(), other.fingerprints());
        let mut sa = fa.clone();
        let mut sb = fb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| (fa[x].0, fa[x].1, x));

        struct Search<'a> {
            a: &'a FinitePoset,
            b: &'a FinitePoset,
            fa: &'a [(usize, usize, usize)],
            fb: &'a [(usize, usize, usize)],
            order: &'a [usize],
            map: Vec<Option<usize>>,
            used: Vec<bool>,
            respect_unary: bool,
        }

        impl Search<'_> {
            fn consistent(&self, x: usize, y: usize) -> bool {
                for (z, fz) in self.map.iter().enumerate() {
                    let Some(w) = *fz else { continue };
                    if self.a.leq(x, z) != self.b.leq(y, w) || self.a.leq(z, x) != self.b.leq(w, y) {
                        return false;
                    }
                }
                if self.respect_unary {
                    let (ua, ub) = (self.a.unary.as_ref().unwrap(), self.b.unary.as_ref().unwrap());
                    let img = |z: usize| if z == x { Some(y) } else { self.map[z] };
                    if let Some(t) = img(ua[x]) {
                        if t != ub[y] {
                            return false;
                        }
                    }
                    for (z, fz) in self.map.iter().enumerate() {
                        if let Some(w) = *fz {
                            if ua[z] == x && ub[w] != y {
                                return false;
                            }
                        }
                    }
                }
                true
            }

            fn run(&mut self, depth: usize) -> bool {
                if depth == self.order.len() {
                    return true;
                }
                let x = self.order[depth];
                for y in 0..self.b.size {
                    if self.used[y] || self.fa[x] != self.fb[y] || !self.consistent(x, y) {
                        continue;
                    }
                    self.map[x] = Some(y);
                    self.used[y] = true;
                    if self.run(depth + 1) {
                        return true;
                    }
                    self.map[x] = None;
                    self.used[y] = false;
                }
                false
            }
        }

        let mut s = Search {
            a: self,
            b: other,
            fa: &fa,
            fb: &fb,
            order: &order,
            map: vec![None; n],
            used: vec![false; n],
            respect_unary,
        };
        s.run(0).then(|| s.map.into_iter().map(Option::unwrap).collect())
    }

    /// Isomorphic, with the unary operation, to the six-element `MO_2`.
    pub fn is_iso_mo2(&self) -> bool {
        self.unary.is_some() && self.find_isomorphism(&FinitePoset::mo2(), true).is_some()
    }

    /// There is a bijection `f` from the subsets of `{0..k}` with
    /// `S ⊆ T ⇔ f(T) ≤ f(S)`.
    pub fn antiisomorphic_to_powerset(&self, k: usize) -> bool {
        k < usize::BITS as usize - 1
            && self.size == 1 << k
            && FinitePoset::powerset(k).dual().find_isomorphism(self, false).is_some()
    }

    #[inline]
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !self.elements().any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// Cover pairs `(x, y)` with `x ⋖ y`, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| self.elements().filter(|&y| self.leq(y, x)).count());
        let mut h = vec![0; self.size];
        for &x in &order {
            h[x] = order
                .iter()
                .filter(|&&y| self.lt(y, x))
                .map(|&y| h[y] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// Graphviz rendering of the Hasse diagram, bottom to top.
    pub fn to_dot(&self) -> String {
        let h = self.heights();
        let mut s = String::from("digraph {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for x in self.elements() {
            let _ = writeln!(s, "  n{x} [label=\"{}\"];", self.labels[x].replace('"', "\\\""));
        }
        let max_h = h.iter().copied().max().unwrap_or(0);
        for level in 0..=max_h {
            let nodes: Vec<String> = self.elements().filter(|&x| h[x] == level).map(|x| format!("n{x};")).collect();
            let _ = writeln!(s, "  {{ rank=same; {} }}", nodes.join(" "));
        }
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(s, "  n{x} -> n{y};");
        }
        s.push_str("}\n");
        s
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> FinitePoset {
        FinitePoset::from_relation(n, |i, j| i <= j, None).expect("chain is a bounded poset")
    }

    /// Subsets of `{0..k}` under inclusion, with set complement.
    pub fn powerset(k: usize) -> FinitePoset {
        let n = 1usize << k;
        let full = n - 1;
        let labels = (0..n)
            .map(|s| {
                let items: Vec<String> = (0..k).filter(|i| s & (1 << i) != 0).map(|i| i.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        FinitePoset::from_relation(n, |a, b| a & b == a, Some((0..n).map(|s| full ^ s).collect()))
            .expect("powerset is a bounded poset")
            .with_labels(labels)
    }

    /// `MO_2`: bottom, top and two complementary pairs of atoms.
    pub fn mo2() -> FinitePoset {
        // 0 = bottom, 1..=4 atoms (1<->2, 3<->4), 5 = top
        FinitePoset::from_relation(6, |i, j| i == j || i == 0 || j == 5, Some(vec![5, 2, 1, 4, 3, 0]))
            .expect("MO2 is a bounded poset")
            .with_labels(["0", "a", "a'", "b", "b'", "1"].map(String::from).to_vec())
    }

    /// The benzene ring `O_6`: `0 < x < y < 1`, `0 < y' < x' < 1`. An
    /// orthoposet (even an ortholattice) that is not orthomodular.
    pub fn benzene() -> FinitePoset {
        // 0 = bottom, 1 = x, 2 = y, 3 = y', 4 = x', 5 = top
        let below = |i: usize, j: usize| matches!((i, j), (1, 2) | (3, 4));
        FinitePoset::from_relation(6, |i, j| i == j || i == 0 || j == 5 || below(i, j), Some(vec![5, 4, 3, 2, 1, 0]))
            .expect("O6 is a bounded poset")
            .with_labels(["0", "x", "y", "y'", "x'", "1"].map(String::from).to_vec())
    }
}

/// Orders a list of subsemimodules by inclusion. The optional unary map must
/// send each listed set to a listed set.
pub fn poset_from_subsets<F>(sets: &[Subsemimodule], unary: Option<F>) -> Result<FinitePoset, PosetError>
where
    F: Fn(&Subsemimodule) -> Subsemimodule,
{
    let unary = match unary {
        None => None,
        Some(f) => Some(
            sets.iter()
                .map(|s| {
                    let image = f(s);
                    sets.iter().position(|t| *t == image).ok_or(PosetError::InvolutionNotClosed)
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let labels = sets.iter().map(Subsemimodule::format).collect();
    Ok(FinitePoset::from_relation(sets.len(), |i, j| sets[i].is_subset(&sets[j]), unary)?.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> FinitePoset {
        // 0 < 1 < 2 < 4, 0 < 3 < 4
        FinitePoset::from_relation(
            5,
            |i, j| i == j || i == 0 || j == 4 || (i, j) == (1, 2),
            None,
        )
        .unwrap()
    }

    fn diamond() -> FinitePoset {
        FinitePoset::from_relation(5, |i, j| i == j || i == 0 || j == 4, None).unwrap()
    }

    #[test]
    fn rejects_non_orders() {
        assert!(matches!(
            FinitePoset::from_relation(2, |_, _| true, None),
            Err(PosetError::NotPartialOrder(_))
        ));
        assert!(matches!(
            FinitePoset::from_relation(3, |i, j| i == j || (i, j) == (0, 1) || (i, j) == (1, 2), None),
            Err(PosetError::NotPartialOrder(_))
        ));
        assert_eq!(
            FinitePoset::from_relation(2, |i, j| i == j, None).unwrap_err(),
            PosetError::NoBounds("bottom")
        );
        assert_eq!(FinitePoset::from_relation(0, |_, _| true, None).unwrap_err(), PosetError::Empty);
        assert_eq!(
            FinitePoset::from_relation(2, |i, j| i <= j, Some(vec![0, 2])).unwrap_err(),
            PosetError::InvolutionNotClosed
        );
    }

    #[test]
    fn pentagon_and_diamond() {
        let n5 = pentagon();
        assert!(n5.is_lattice());
        assert!(!n5.is_modular().unwrap());
        let w = n5.n5_witness().unwrap().unwrap();
        assert_eq!((w.zero, w.low, w.high, w.side, w.one), (0, 1, 2, 3, 4));
        assert_eq!(n5.n5_sublattices().unwrap().len(), 1);

        let m3 = diamond();
        assert!(m3.is_modular().unwrap());
        assert!(!m3.is_distributive().unwrap());
        assert_eq!(m3.m3_witness().unwrap().unwrap().atoms, [1, 2, 3]);
        assert!(m3.is_complemented().unwrap());
        assert!(!m3.is_boolean_algebra().unwrap());
    }

    #[test]
    fn lattice_requirements() {
        // two incomparable middle pairs: 0 < a,b < c,d < 1 with no join of a,b
        let p = FinitePoset::from_relation(6, |i, j| i == j || i == 0 || j == 5 || (matches!(i, 1 | 2) && matches!(j, 3 | 4)), None).unwrap();
        assert!(!p.is_lattice());
        assert_eq!(p.sup(1, 2), None);
        assert_eq!(p.is_modular(), Err(PosetError::NotALattice));
        assert_eq!(p.is_boolean_algebra(), Err(PosetError::NotALattice));
        assert!(p.is_atomic());
    }

    #[test]
    fn chains() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.hasse_edges(), vec![(0, 1), (1, 2)]);
        assert!(c.is_distributive().unwrap());
        assert!(!c.is_complemented().unwrap());
        let two = FinitePoset::chain(2).with_unary(Some(vec![1, 0])).unwrap();
        assert!(two.is_orthoposet().unwrap());
        assert!(two.is_orthomodular_poset().unwrap());
        assert!(two.is_boolean_algebra().unwrap());
        assert_eq!(FinitePoset::chain(3).is_orthoposet(), Err(PosetError::NoInvolution));
        assert!(FinitePoset::chain(1).is_atomic());
    }

    #[test]
    fn mo2_and_benzene() {
        let mo2 = FinitePoset::mo2();
        assert!(mo2.is_orthoposet().unwrap());
        assert!(mo2.is_orthomodular_poset().unwrap());
        assert!(mo2.is_modular().unwrap());
        assert!(!mo2.is_distributive().unwrap());
        assert!(mo2.is_iso_mo2());
        assert_eq!(mo2.hasse_edges().len(), 8);

        let o6 = FinitePoset::benzene();
        assert!(o6.is_orthoposet().unwrap());
        assert!(o6.is_lattice());
        let v = o6.orthomodular_violation().unwrap().unwrap();
        assert_eq!((v.x, v.y), (1, 2));
        assert!(!o6.is_iso_mo2());
        assert_eq!(FinitePoset::chain(3).is_orthomodular_poset(), Err(PosetError::NoInvolution));
        let bad = FinitePoset::chain(3).with_unary(Some(vec![0, 1, 2])).unwrap();
        assert_eq!(bad.is_orthomodular_poset(), Err(PosetError::NotOrthoposet));
    }

    #[test]
    fn powerset_is_self_antiisomorphic() {
        for k in 0..4 {
            let p = FinitePoset::powerset(k);
            assert!(p.antiisomorphic_to_powerset(k));
            assert!(p.is_boolean_algebra().unwrap());
            assert!(p.is_atomic());
            assert!(p.is_orthomodular_poset().unwrap());
        }
        assert!(!FinitePoset::chain(4).antiisomorphic_to_powerset(2));
        assert!(!FinitePoset::mo2().antiisomorphic_to_powerset(2));
    }

    #[test]
    fn isomorphism_respects_unary() {
        let a = FinitePoset::powerset(2);
        // same order, but the involution fixes the atoms
        let b = FinitePoset::powerset(2).with_unary(Some(vec![3, 1, 2, 0])).unwrap();
        assert!(a.find_isomorphism(&b, false).is_some());
        assert!(a.find_isomorphism(&b, true).is_none());
    }

    #[test]
    fn dot_output() {
        let dot = FinitePoset::chain(2).with_labels(vec!["lo".into(), "hi".into()]).to_dot();
        assert_eq!(
            dot,
            "digraph {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"lo\"];\n  n1 [label=\"hi\"];\n  { rank=same; n0; }\n  { rank=same; n1; }\n  n0 -> n1;\n}\n"
        );
    }
}
