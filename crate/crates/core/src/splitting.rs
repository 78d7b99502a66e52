//! Splitting subsemimodules, projections and the correspondence between them
//! over rings.
//!
//! A linear self-map of `S^k` is stored as a `k×k` matrix whose column `c`
//! is the image of the basis vector `b_c`. With this convention
//! `(P b_i)·b_j = P[j][i]` and `b_i·(P b_j) = P[i][j]`, so a linear map is
//! self-adjoint exactly when its matrix is symmetric.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::ModuleError;
use crate::poset::FinitePoset;
use crate::report::CheckReport;
use crate::semimodule::{FreeSemimodule, VecId};
use crate::semiring::Elem;
use crate::sublattice::Subsemimodule;

/// Default upper bound on the number of candidate matrices scanned.
pub const DEFAULT_MAX_CANDIDATES: u128 = 1_000_000;

#[derive(Clone)]
pub struct LinearMap {
    ambient: Arc<FreeSemimodule>,
    matrix: Vec<Elem>,
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for LinearMap {}

impl Ord for LinearMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.matrix.cmp(&other.matrix)
    }
}

impl PartialOrd for LinearMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl LinearMap {
    /// Builds a map from row-major matrix entries.
    pub fn from_rows(ambient: &Arc<FreeSemimodule>, rows: &[Vec<Elem>]) -> Result<Self, ModuleError> {
        let k = ambient.rank();
        if rows.len() != k {
            return Err(ModuleError::RankMismatch { expected: k, found: rows.len() });
        }
        let mut matrix = Vec::with_capacity(k * k);
        for row in rows {
            if row.len() != k {
                return Err(ModuleError::RankMismatch { expected: k, found: row.len() });
            }
            if let Some(&bad) = row.iter().find(|&&e| e >= ambient.semiring().len()) {
                return Err(ModuleError::BadCoordinate(bad));
            }
            matrix.extend_from_slice(row);
        }
        Ok(LinearMap { ambient: ambient.clone(), matrix })
    }

    fn from_fn(ambient: &Arc<FreeSemimodule>, f: impl Fn(usize, usize) -> Elem) -> Self {
        let k = ambient.rank();
        let matrix = (0..k * k).map(|i| f(i / k, i % k)).collect();
        LinearMap { ambient: ambient.clone(), matrix }
    }

    /// The constant map onto the zero vector.
    pub fn zero(ambient: &Arc<FreeSemimodule>) -> Self {
        let z = ambient.semiring().zero();
        Self::from_fn(ambient, |_, _| z)
    }

    pub fn identity(ambient: &Arc<FreeSemimodule>) -> Self {
        let s = ambient.semiring();
        Self::from_fn(ambient, |r, c| if r == c { s.one() } else { s.zero() })
    }

    pub fn ambient(&self) -> &Arc<FreeSemimodule> {
        &self.ambient
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Elem {
        self.matrix[row * self.ambient.rank() + col]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.matrix.chunks(self.ambient.rank()).map(<[Elem]>::to_vec).collect()
    }

    /// Rows as arrays of element labels.
    pub fn label_rows(&self) -> Vec<Vec<String>> {
        let s = self.ambient.semiring();
        self.matrix
            .chunks(self.ambient.rank())
            .map(|r| r.iter().map(|&e| s.label(e).to_string()).collect())
            .collect()
    }

    pub fn format(&self) -> String {
        let rows: Vec<String> = self.label_rows().iter().map(|r| format!("[{}]", r.join(","))).collect();
        format!("[{}]", rows.join(","))
    }

    /// `Σ_i x_i · column_i`.
    pub fn apply(&self, x: VecId) -> VecId {
        let s = self.ambient.semiring();
        let k = self.ambient.rank();
        let xs = self.ambient.coords(x);
        let coords: Vec<Elem> = (0..k)
            .map(|r| (0..k).fold(s.zero(), |acc, c| s.add(acc, s.mul(xs[c], self.entry(r, c)))))
            .collect();
        self.ambient.id_of(&coords.into()).expect("image lies in the ambient semimodule")
    }

    /// `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let s = self.ambient.semiring();
        let k = self.ambient.rank();
        Self::from_fn(&self.ambient, |r, c| {
            (0..k).fold(s.zero(), |acc, t| s.add(acc, s.mul(self.entry(r, t), other.entry(t, c))))
        })
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        let s = self.ambient.semiring();
        Self::from_fn(&self.ambient, |r, c| s.add(self.entry(r, c), other.entry(r, c)))
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap, ModuleError> {
        let s = self.ambient.semiring();
        if !s.is_ring() {
            return Err(ModuleError::NotARing);
        }
        Ok(Self::from_fn(&self.ambient, |r, c| s.add(self.entry(r, c), s.neg(other.entry(r, c)).unwrap())))
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.ambient.rank();
        (0..k).all(|r| (0..r).all(|c| self.entry(r, c) == self.entry(c, r)))
    }

    /// `(Px)·y = x·(Py)` checked on every pair of vectors.
    pub fn is_self_adjoint(&self) -> bool {
        let m = &self.ambient;
        let images: Vec<VecId> = m.ids().map(|x| self.apply(x)).collect();
        m.ids().all(|x| m.ids().all(|y| m.inner_ids(images[x], y) == m.inner_ids(x, images[y])))
    }

    pub fn is_projection(&self) -> bool {
        self.is_idempotent() && self.is_symmetric()
    }

    /// `P(M)`.
    pub fn image(&self) -> Subsemimodule {
        let members: Vec<VecId> = self.ambient.ids().map(|x| self.apply(x)).collect();
        Subsemimodule::try_from_members(&self.ambient, members).expect("image of a linear map is a subsemimodule")
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.compose(other) == other.compose(self)
    }
}

fn check_ambient(m: &Arc<FreeSemimodule>, u: &Subsemimodule) -> Result<(), ModuleError> {
    if Arc::ptr_eq(m, u.ambient()) || **m == **u.ambient() {
        Ok(())
    } else {
        Err(ModuleError::AmbientMismatch)
    }
}

/// `U + U^⊥ = M` and `U ∩ U^⊥ = {0}`.
pub fn is_splitting(m: &Arc<FreeSemimodule>, u: &Subsemimodule) -> Result<bool, ModuleError> {
    check_ambient(m, u)?;
    Ok(u.is_splitting())
}

/// Filters a list of subsemimodules down to the splitting ones, keeping order.
pub fn splitting_subsemimodules(subs: &[Subsemimodule]) -> Vec<Subsemimodule> {
    subs.iter().filter(|u| u.is_splitting()).cloned().collect()
}

/// `U_J = {x | x_i = 0 for all i ∈ J}`.
pub fn coordinate_vanishing(m: &Arc<FreeSemimodule>, coords: &[usize]) -> Subsemimodule {
    let zero = m.semiring().zero();
    let members = m.ids().filter(|&x| coords.iter().all(|&i| m.coords(x)[i] == zero));
    Subsemimodule::try_from_members(m, members).expect("U_J is a subsemimodule")
}

/// The unique `(b, c)` with `b ∈ U`, `c ∈ U^⊥` and `b + c = a`, found by
/// exhaustive search. Requires a ring and a splitting `U`.
pub fn decompose(m: &Arc<FreeSemimodule>, u: &Subsemimodule, a: VecId) -> Result<(VecId, VecId), ModuleError> {
    check_ambient(m, u)?;
    if !m.semiring().is_ring() {
        return Err(ModuleError::NotARing);
    }
    if !u.is_splitting() {
        return Err(ModuleError::NotSplitting);
    }
    let p = u.perp();
    let pairs: Vec<(VecId, VecId)> = u
        .members()
        .flat_map(|b| p.members().map(move |c| (b, c)))
        .filter(|&(b, c)| m.add_ids(b, c) == a)
        .collect();
    match pairs.as_slice() {
        [pair] => Ok(*pair),
        _ => Err(ModuleError::UniquenessViolation { vector: a, count: pairs.len() }),
    }
}

/// `P_U`: column `i` is the `U`-component of `b_i`.
pub fn projection_of(m: &Arc<FreeSemimodule>, u: &Subsemimodule) -> Result<LinearMap, ModuleError> {
    let k = m.rank();
    let mut columns = Vec::with_capacity(k);
    for b in m.basis() {
        columns.push(m.coords(decompose(m, u, b)?.0).to_vec());
    }
    Ok(LinearMap::from_fn(m, |r, c| columns[c][r]))
}

/// `P' = I − P`.
pub fn proj_complement(p: &LinearMap) -> Result<LinearMap, ModuleError> {
    LinearMap::identity(p.ambient()).sub(p)
}

/// `P ⊥ Q`, i.e. `P ≤ Q'`. Requires a ring.
pub fn proj_perp(p: &LinearMap, q: &LinearMap) -> Result<bool, ModuleError> {
    let qc = proj_complement(q)?;
    Ok(p.image().is_subset(&qc.image()))
}

/// `P ∧ Q = PQ` for commuting projections.
pub fn proj_meet(p: &LinearMap, q: &LinearMap) -> Result<LinearMap, ModuleError> {
    if !p.commutes_with(q) {
        return Err(ModuleError::NotCommuting);
    }
    Ok(p.compose(q))
}

/// `P ∨ Q = P + Q − PQ` for commuting projections over a ring.
pub fn proj_join(p: &LinearMap, q: &LinearMap) -> Result<LinearMap, ModuleError> {
    if !p.commutes_with(q) {
        return Err(ModuleError::NotCommuting);
    }
    p.add(q).sub(&p.compose(q))
}

/// Which candidate matrices the projection search visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionScan {
    /// Symmetric matrices only, tested for idempotence.
    Symmetric,
    /// Every matrix, tested for idempotence and pairwise self-adjointness.
    Full,
}

/// All projections of `M` ordered by image inclusion.
pub struct ProjectionPoset {
    ambient: Arc<FreeSemimodule>,
    projections: Vec<LinearMap>,
    images: Vec<Subsemimodule>,
    index: HashMap<Vec<Elem>, usize>,
    bottom: usize,
    top: usize,
    complement: Option<Vec<usize>>,
}

pub fn enumerate_projections(
    m: &Arc<FreeSemimodule>,
    scan: ProjectionScan,
    cap: u128,
) -> Result<ProjectionPoset, ModuleError> {
    let n = m.semiring().len();
    let k = m.rank();
    let free: Vec<(usize, usize)> = match scan {
        ProjectionScan::Symmetric => (0..k).flat_map(|r| (r..k).map(move |c| (r, c))).collect(),
        ProjectionScan::Full => (0..k).flat_map(|r| (0..k).map(move |c| (r, c))).collect(),
    };
    let candidates = (n as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(ModuleError::SearchCapExceeded { candidates, cap });
    }
    let mut found = Vec::new();
    let mut digits = vec![0; free.len()];
    for _ in 0..candidates {
        let mut matrix = vec![0; k * k];
        for (&(r, c), &d) in free.iter().zip(&digits) {
            matrix[r * k + c] = d;
            if scan == ProjectionScan::Symmetric {
                matrix[c * k + r] = d;
            }
        }
        let p = LinearMap { ambient: m.clone(), matrix };
        let keep = match scan {
            ProjectionScan::Symmetric => p.is_idempotent(),
            ProjectionScan::Full => p.is_idempotent() && p.is_self_adjoint(),
        };
        if keep {
            found.push(p);
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    found.sort();
    Ok(ProjectionPoset::new(m, found))
}

impl ProjectionPoset {
    fn new(m: &Arc<FreeSemimodule>, projections: Vec<LinearMap>) -> Self {
        let images = projections.iter().map(LinearMap::image).collect();
        let index: HashMap<Vec<Elem>, usize> =
            projections.iter().enumerate().map(|(i, p)| (p.matrix.clone(), i)).collect();
        let bottom = index[&LinearMap::zero(m).matrix];
        let top = index[&LinearMap::identity(m).matrix];
        let complement = if m.semiring().is_ring() {
            projections
                .iter()
                .map(|p| proj_complement(p).ok().and_then(|c| index.get(&c.matrix).copied()))
                .collect()
        } else {
            None
        };
        ProjectionPoset { ambient: m.clone(), projections, images, index, bottom, top, complement }
    }

    pub fn ambient(&self) -> &Arc<FreeSemimodule> {
        &self.ambient
    }

    pub fn projections(&self) -> &[LinearMap] {
        &self.projections
    }

    pub fn images(&self) -> &[Subsemimodule] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.projections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projections.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `P ↦ I − P` as indices; only over rings.
    pub fn complement(&self) -> Option<&[usize]> {
        self.complement.as_deref()
    }

    pub fn index_of(&self, p: &LinearMap) -> Option<usize> {
        self.index.get(&p.matrix).copied()
    }

    /// `P ≤ Q ⇔ P(M) ⊆ Q(M)`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.images[i].is_subset(&self.images[j])
    }

    pub fn to_poset(&self) -> Result<FinitePoset, crate::error::PosetError> {
        let labels = self.projections.iter().map(LinearMap::format).collect();
        Ok(FinitePoset::from_relation(self.len(), |i, j| self.leq(i, j), self.complement.clone())?.with_labels(labels))
    }

    fn label(&self, i: usize) -> String {
        self.projections[i].format()
    }

    /// `P ≤ Q ⇔ PQ = P ⇔ QP = P` on all pairs, and for commuting pairs `PQ`
    /// is the infimum in `Pro(M)`.
    pub fn check_projection_order(&self) -> CheckReport {
        let n = self.len();
        let ps = &self.projections;
        let mut r = CheckReport::new("projection-order");
        let mut c = r.clause("P ≤ Q ⇔ PQ = P ⇔ QP = P");
        for i in 0..n {
            for j in 0..n {
                let a = self.leq(i, j);
                let b = ps[i].compose(&ps[j]) == ps[i];
                let cc = ps[j].compose(&ps[i]) == ps[i];
                c.check(a == b && b == cc, || format!("P={}, Q={}", self.label(i), self.label(j)));
            }
        }
        c.finish();

        let mut c = r.clause("order is a partial order with bounds 0, I");
        let po = self.to_poset();
        c.check(
            po.as_ref().is_ok_and(|p| p.bottom() == self.bottom && p.top() == self.top),
            || format!("{:?}", po.as_ref().err()),
        );
        c.finish();

        let mut c = r.clause("PQ = QP ⇒ PQ = P ∧ Q");
        for i in 0..n {
            for j in 0..n {
                if !ps[i].commutes_with(&ps[j]) {
                    continue;
                }
                let meet = self.index_of(&ps[i].compose(&ps[j]));
                let ok = meet.is_some_and(|m| {
                    self.leq(m, i)
                        && self.leq(m, j)
                        && (0..n).all(|t| !(self.leq(t, i) && self.leq(t, j)) || self.leq(t, m))
                });
                c.check(ok, || format!("P={}, Q={}", self.label(i), self.label(j)));
            }
        }
        c.finish();
        r
    }

    /// `P ↦ P(M)` is monotone into `L(M)` and sends `0 ↦ {0}`, `I ↦ M`.
    pub fn check_order_homomorphism(&self) -> CheckReport {
        let n = self.len();
        let mut r = CheckReport::new("image-map");
        let mut c = r.clause("P(M) ∈ L(M)");
        for (i, u) in self.images.iter().enumerate() {
            let closed = Subsemimodule::try_from_members(&self.ambient, u.members()).is_some();
            c.check(closed, || self.label(i));
        }
        c.finish();
        let mut c = r.clause("P ≤ Q ⇒ P(M) ⊆ Q(M)");
        for i in 0..n {
            for j in 0..n {
                let pq = self.projections[i].compose(&self.projections[j]) == self.projections[i];
                c.check(!pq || self.images[i].is_subset(&self.images[j]), || {
                    format!("P={}, Q={}", self.label(i), self.label(j))
                });
            }
        }
        c.finish();
        let mut c = r.clause("0(M) = {0} and I(M) = M");
        c.check(self.images[self.bottom].is_zero() && self.images[self.top].is_whole(), String::new);
        c.finish();
        r
    }

    /// Over rings: `U ↦ P_U` and `P ↦ P(M)` are mutually inverse order
    /// isomorphisms between the splitting subsemimodules and `Pro(M)`, and
    /// `P_{U^⊥} = I − P_U`.
    pub fn check_splitting_correspondence(&self, splitting: &[Subsemimodule]) -> Result<CheckReport, ModuleError> {
        let m = &self.ambient;
        if !m.semiring().is_ring() {
            return Err(ModuleError::NotARing);
        }
        let mut r = CheckReport::new("splitting-projection-correspondence");
        let mut c = r.clause("|L_s(M)| = |Pro(M)|");
        c.check(splitting.len() == self.len(), || format!("{} vs {}", splitting.len(), self.len()));
        c.finish();

        let mut to_proj = Vec::with_capacity(splitting.len());
        let mut c = r.clause("P_U ∈ Pro(M) and P_U(M) = U");
        for u in splitting {
            let p = projection_of(m, u)?;
            let idx = self.index_of(&p);
            c.check(idx.is_some() && p.image() == *u, || u.format());
            to_proj.push(idx);
        }
        c.finish();

        let mut c = r.clause("P(M) ∈ L_s(M) and P_{P(M)} = P");
        for (i, img) in self.images.iter().enumerate() {
            let back = splitting.iter().position(|u| u == img).map(|_| projection_of(m, img));
            let ok = matches!(back, Some(Ok(ref q)) if *q == self.projections[i]);
            c.check(ok, || self.label(i));
        }
        c.finish();

        let mut c = r.clause("U ⊆ W ⇔ P_U ≤ P_W");
        for (a, u) in splitting.iter().enumerate() {
            for (b, w) in splitting.iter().enumerate() {
                let ok = match (to_proj[a], to_proj[b]) {
                    (Some(i), Some(j)) => u.is_subset(w) == self.leq(i, j),
                    _ => false,
                };
                c.check(ok, || format!("U={}, W={}", u.format(), w.format()));
            }
        }
        c.finish();

        let mut c = r.clause("P_{U^⊥} = I − P_U");
        for u in splitting {
            let lhs = projection_of(m, &u.perp());
            let rhs = proj_complement(&projection_of(m, u)?)?;
            c.check(lhs.as_ref().is_ok_and(|l| *l == rhs), || u.format());
        }
        c.finish();
        Ok(r)
    }

    /// Module-only laws on `Pro(M)`: complements, orthogonality, the
    /// antitone involution, joins of commuting pairs and the orthomodular
    /// decomposition.
    pub fn check_module_laws(&self) -> Result<CheckReport, ModuleError> {
        if !self.ambient.semiring().is_ring() {
            return Err(ModuleError::NotARing);
        }
        let n = self.len();
        let ps = &self.projections;
        let comp = self.complement.as_deref();
        let lab = |i: usize, j: usize| format!("P={}, Q={}", self.label(i), self.label(j));
        let mut r = CheckReport::new("module-projection-laws");

        let mut c = r.clause("P' ∈ Pro(M)");
        for i in 0..n {
            c.check(comp.is_some_and(|cm| cm.len() == n), || self.label(i));
        }
        c.finish();
        let Some(comp) = comp else { return Ok(r) };

        let zero = LinearMap::zero(&self.ambient);
        let mut c = r.clause("P ⊥ Q ⇔ PQ = 0 ⇔ QP = 0");
        for i in 0..n {
            for j in 0..n {
                let a = self.leq(i, comp[j]);
                let b = ps[i].compose(&ps[j]) == zero;
                let d = ps[j].compose(&ps[i]) == zero;
                c.check(a == b && b == d, || lab(i, j));
            }
        }
        c.finish();

        let mut c = r.clause("' is an antitone involution");
        for i in 0..n {
            for j in 0..n {
                c.check(comp[comp[i]] == i && (!self.leq(i, j) || self.leq(comp[j], comp[i])), || lab(i, j));
            }
        }
        c.finish();

        let mut c = r.clause("PQ = QP ⇒ P ∨ Q = P + Q − PQ");
        for i in 0..n {
            for j in 0..n {
                if !ps[i].commutes_with(&ps[j]) {
                    continue;
                }
                let join = proj_join(&ps[i], &ps[j]).ok().and_then(|p| self.index_of(&p));
                let ok = join.is_some_and(|s| {
                    self.leq(i, s)
                        && self.leq(j, s)
                        && (0..n).all(|t| !(self.leq(i, t) && self.leq(j, t)) || self.leq(s, t))
                });
                c.check(ok, || lab(i, j));
            }
        }
        c.finish();

        let mut c = r.clause("P ⊥ Q ⇒ P ∧ Q = 0 and P ∨ Q = P + Q");
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, comp[j]) {
                    continue;
                }
                let meet_ok = proj_meet(&ps[i], &ps[j]).is_ok_and(|p| p == zero);
                let join_ok = proj_join(&ps[i], &ps[j]).is_ok_and(|p| p == ps[i].add(&ps[j]));
                c.check(meet_ok && join_ok, || lab(i, j));
            }
        }
        c.finish();

        let mut c = r.clause("P ≤ Q ⇒ P ∨ (P' ∧ Q) = Q");
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                let ok = proj_meet(&ps[comp[i]], &ps[j])
                    .and_then(|m| proj_join(&ps[i], &m))
                    .is_ok_and(|q| q == ps[j]);
                c.check(ok, || lab(i, j));
            }
        }
        c.finish();
        Ok(r)
    }
}

/// Over rings: every splitting `U` decomposes each vector uniquely, and for
/// orthogonal splitting `U, W` the join in `L_s(M)` exists and equals `U + W`.
pub fn check_splitting_laws(m: &Arc<FreeSemimodule>, splitting: &[Subsemimodule]) -> Result<CheckReport, ModuleError> {
    if !m.semiring().is_ring() {
        return Err(ModuleError::NotARing);
    }
    let mut r = CheckReport::new("splitting-decomposition");
    let mut c = r.clause("unique decomposition a = b + c, b ∈ U, c ∈ U^⊥");
    for u in splitting {
        for a in m.ids() {
            let res = decompose(m, u, a);
            c.check(res.is_ok(), || format!("U={}, a={}: {:?}", u.format(), m.format(a), res.err()));
        }
    }
    c.finish();

    let mut c = r.clause("U ⊆ W^⊥ ⇒ U ∨ W = U + W in L_s(M)");
    for u in splitting {
        for w in splitting {
            if !u.is_subset(&w.perp()) {
                continue;
            }
            let ub: Vec<&Subsemimodule> = splitting.iter().filter(|t| u.is_subset(t) && w.is_subset(t)).collect();
            let least = ub.iter().find(|t| ub.iter().all(|s| t.is_subset(s)));
            let sum = u.sum(w)?;
            c.check(least.is_some_and(|t| **t == sum), || format!("U={}, W={}", u.format(), w.format()));
        }
    }
    c.finish();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semimodule::{closure, free_semimodule, Vector};
    use crate::semiring::{boolean_semiring, modular_ring, trivial_semiring};
    use crate::sublattice::enumerate_subsemimodules;

    fn z4sq() -> Arc<FreeSemimodule> {
        free_semimodule(modular_ring(4).unwrap(), 2).unwrap()
    }

    fn id(m: &FreeSemimodule, c: &[usize]) -> VecId {
        m.id_of(&Vector(c.to_vec())).unwrap()
    }

    #[test]
    fn decompose_in_u6() {
        let m = z4sq();
        let u6 = closure(&m, [id(&m, &[2, 1])]);
        let (b, c) = decompose(&m, &u6, id(&m, &[1, 0])).unwrap();
        assert_eq!((m.vector(b), m.vector(c)), (Vector(vec![0, 2]), Vector(vec![1, 2])));
        let a = id(&m, &[2, 3]);
        assert_eq!(decompose(&m, &u6, a).unwrap(), (a, m.zero_id()));
        assert_eq!(decompose(&m, &u6, m.zero_id()).unwrap(), (m.zero_id(), m.zero_id()));
    }

    #[test]
    fn decompose_errors() {
        let m = z4sq();
        let u2 = closure(&m, [id(&m, &[0, 2])]);
        assert_eq!(decompose(&m, &u2, 0), Err(ModuleError::NotSplitting));
        let b = free_semimodule(boolean_semiring(), 2).unwrap();
        let u2 = closure(&b, [1]);
        assert_eq!(decompose(&b, &u2, 0), Err(ModuleError::NotARing));
        assert_eq!(decompose(&m, &u2, 0), Err(ModuleError::AmbientMismatch));
    }

    #[test]
    fn projections_of_splitting_submodules() {
        let m = z4sq();
        let u5 = closure(&m, [id(&m, &[0, 1])]);
        assert_eq!(projection_of(&m, &u5).unwrap().rows(), vec![vec![0, 0], vec![0, 1]]);
        let u6 = closure(&m, [id(&m, &[2, 1])]);
        let p6 = projection_of(&m, &u6).unwrap();
        // columns (0,2) and (2,1)
        assert_eq!(p6.rows(), vec![vec![0, 2], vec![2, 1]]);
        assert!(p6.is_idempotent() && p6.is_symmetric() && p6.is_self_adjoint());
        assert_eq!(p6.image(), u6);
        assert_eq!(projection_of(&m, &Subsemimodule::whole(&m)).unwrap(), LinearMap::identity(&m));
        assert_eq!(projection_of(&m, &Subsemimodule::zero(&m)).unwrap(), LinearMap::zero(&m));
    }

    #[test]
    fn complements_and_lattice_ops() {
        let m = z4sq();
        let i = LinearMap::identity(&m);
        let o = LinearMap::zero(&m);
        assert_eq!(proj_complement(&o).unwrap(), i);
        assert_eq!(proj_complement(&i).unwrap(), o);
        let u5 = closure(&m, [id(&m, &[0, 1])]);
        let u11 = closure(&m, [id(&m, &[1, 0])]);
        let (p5, p11) = (projection_of(&m, &u5).unwrap(), projection_of(&m, &u11).unwrap());
        assert_eq!(proj_complement(&p5).unwrap(), p11);
        assert!(proj_perp(&p5, &p11).unwrap());
        assert_eq!(p5.compose(&p11), o);
        assert_eq!(proj_meet(&p5, &p11).unwrap(), o);
        assert_eq!(proj_join(&p5, &p11).unwrap(), i);
        assert_eq!(p5.add(&p11), i);
        assert_eq!(proj_meet(&p5, &p5).unwrap(), p5);
        assert_eq!(proj_join(&p5, &p5).unwrap(), p5);

        let u6 = closure(&m, [id(&m, &[2, 1])]);
        let p6 = projection_of(&m, &u6).unwrap();
        assert_eq!(proj_meet(&p5, &p6), Err(ModuleError::NotCommuting));
        assert_eq!(proj_join(&p5, &p6), Err(ModuleError::NotCommuting));
    }

    #[test]
    fn boolean_projections() {
        let m = free_semimodule(boolean_semiring(), 2).unwrap();
        let pro = enumerate_projections(&m, ProjectionScan::Symmetric, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(pro.len(), 5);
        assert!(pro.complement().is_none());
        let d1 = LinearMap::from_rows(&m, &[vec![1, 0], vec![0, 0]]).unwrap();
        let d2 = LinearMap::from_rows(&m, &[vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(proj_meet(&d1, &d2).unwrap(), LinearMap::zero(&m));
        assert_eq!(proj_join(&d1, &d2), Err(ModuleError::NotARing));
        assert_eq!(proj_complement(&d1), Err(ModuleError::NotARing));
        assert!(pro.check_projection_order().passed());
        assert!(pro.check_order_homomorphism().passed());
        let subs = enumerate_subsemimodules(&m, 100).unwrap();
        assert_eq!(pro.check_splitting_correspondence(&splitting_subsemimodules(&subs)).unwrap_err(), ModuleError::NotARing);
    }

    #[test]
    fn z4_projections() {
        let m = z4sq();
        let pro = enumerate_projections(&m, ProjectionScan::Symmetric, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(pro.len(), 6);
        let full = enumerate_projections(&m, ProjectionScan::Full, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(full.projections(), pro.projections());
        let subs = enumerate_subsemimodules(&m, 100).unwrap();
        let ls = splitting_subsemimodules(&subs);
        assert!(pro.check_splitting_correspondence(&ls).unwrap().passed());
        assert!(pro.check_module_laws().unwrap().passed());
        assert!(check_splitting_laws(&m, &ls).unwrap().passed());
    }

    #[test]
    fn small_cases() {
        let m = free_semimodule(modular_ring(4).unwrap(), 1).unwrap();
        let pro = enumerate_projections(&m, ProjectionScan::Symmetric, 100).unwrap();
        assert_eq!(pro.len(), 2);
        let t = free_semimodule(trivial_semiring(), 1).unwrap();
        let pro = enumerate_projections(&t, ProjectionScan::Symmetric, 100).unwrap();
        assert_eq!(pro.len(), 1);
        assert_eq!(pro.bottom(), pro.top());
        assert!(pro.check_projection_order().passed());
        assert!(pro.check_module_laws().unwrap().passed());
        let big = free_semimodule(modular_ring(4).unwrap(), 3).unwrap();
        assert_eq!(
            enumerate_projections(&big, ProjectionScan::Full, 1000).err(),
            Some(ModuleError::SearchCapExceeded { candidates: 262_144, cap: 1000 })
        );
    }

    #[test]
    fn coordinate_vanishing_sets() {
        let m = free_semimodule(boolean_semiring(), 2).unwrap();
        assert!(coordinate_vanishing(&m, &[]).is_whole());
        assert!(coordinate_vanishing(&m, &[0, 1]).is_zero());
        assert_eq!(coordinate_vanishing(&m, &[0]).members().collect::<Vec<_>>(), vec![0, 1]);
    }
}
