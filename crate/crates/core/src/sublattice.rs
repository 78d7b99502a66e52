//! Subsemimodules of a free semimodule, their lattice `L(M)` under `+` and
//! `∩`, the orthogonal complement and the closed subsemimodules `L_c(M)`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::ModuleError;
use crate::poset::FinitePoset;
use crate::report::{CheckReport, Tally};
use crate::semimodule::{closure, FreeSemimodule, VecId};

/// Default upper bound on `|L(M)|`.
pub const DEFAULT_MAX_SUBSEMIMODULES: usize = 100_000;

/// A subset of `M` containing the zero vector and closed under `+` and
/// scalar action.
#[derive(Clone)]
pub struct Subsemimodule {
    ambient: Arc<FreeSemimodule>,
    bits: BitSet,
}

impl Subsemimodule {
    /// Wraps a member set that is already known to be a subsemimodule.
    pub(crate) fn from_bits(ambient: Arc<FreeSemimodule>, bits: BitSet) -> Self {
        Subsemimodule { ambient, bits }
    }

    /// Returns `None` unless the given vectors form a subsemimodule.
    pub fn try_from_members(ambient: &Arc<FreeSemimodule>, members: impl IntoIterator<Item = VecId>) -> Option<Self> {
        let bits = BitSet::from_indices(ambient.len(), members);
        let m = ambient.as_ref();
        let ok = bits.contains(m.zero_id())
            && bits.iter().all(|x| {
                m.semiring().elements().all(|a| bits.contains(m.scale_id(a, x)))
                    && bits.iter().all(|y| bits.contains(m.add_ids(x, y)))
            });
        ok.then(|| Subsemimodule::from_bits(ambient.clone(), bits))
    }

    pub fn zero(ambient: &Arc<FreeSemimodule>) -> Self {
        Self::from_bits(ambient.clone(), BitSet::from_indices(ambient.len(), [ambient.zero_id()]))
    }

    pub fn whole(ambient: &Arc<FreeSemimodule>) -> Self {
        Self::from_bits(ambient.clone(), BitSet::full(ambient.len()))
    }

    pub fn ambient(&self) -> &Arc<FreeSemimodule> {
        &self.ambient
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// Member vector ids in increasing order.
    pub fn members(&self) -> impl Iterator<Item = VecId> + '_ {
        self.bits.iter()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, x: VecId) -> bool {
        self.bits.contains(x)
    }

    pub fn is_subset(&self, other: &Subsemimodule) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.ambient.len()
    }

    fn same_ambient(&self, other: &Subsemimodule) -> Result<(), ModuleError> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(ModuleError::AmbientMismatch)
        }
    }

    /// `U + W = {x + y | x ∈ U, y ∈ W}`.
    pub fn sum(&self, other: &Subsemimodule) -> Result<Subsemimodule, ModuleError> {
        self.same_ambient(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Subsemimodule) -> Subsemimodule {
        let m = &self.ambient;
        if other.is_subset(self) {
            return self.clone();
        }
        if self.is_subset(other) {
            return other.clone();
        }
        let mut bits = BitSet::new(m.len());
        let theirs: Vec<VecId> = other.members().collect();
        for x in self.members() {
            for &y in &theirs {
                bits.insert(m.add_ids(x, y));
            }
        }
        Subsemimodule::from_bits(m.clone(), bits)
    }

    pub fn intersect(&self, other: &Subsemimodule) -> Result<Subsemimodule, ModuleError> {
        self.same_ambient(other)?;
        Ok(Subsemimodule::from_bits(self.ambient.clone(), self.bits.intersection(&other.bits)))
    }

    /// `U^⊥`.
    pub fn perp(&self) -> Subsemimodule {
        perp(&self.ambient, self.members())
    }

    pub fn double_perp(&self) -> Subsemimodule {
        self.perp().perp()
    }

    /// `U^⊥⊥ = U`.
    pub fn is_closed(&self) -> bool {
        self.double_perp() == *self
    }

    /// `U + U^⊥ = M` and `U ∩ U^⊥ = {0}`.
    pub fn is_splitting(&self) -> bool {
        let p = self.perp();
        self.sum_unchecked(&p).is_whole() && self.bits.intersection(&p.bits).len() == 1
    }

    pub fn vectors(&self) -> Vec<Vec<String>> {
        self.members().map(|x| self.ambient.labels_of(x)).collect()
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.members().map(|x| self.ambient.format(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl PartialEq for Subsemimodule {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subsemimodule {}

impl Hash for Subsemimodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

/// Canonical order: by cardinality, then lexicographically by member ids.
impl Ord for Subsemimodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.members().cmp(other.members()))
    }
}

impl PartialOrd for Subsemimodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subsemimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// `C^⊥` for an arbitrary subset `C` of `M`.
pub fn perp(m: &Arc<FreeSemimodule>, subset: impl IntoIterator<Item = VecId>) -> Subsemimodule {
    let orth = m.orthogonal_sets();
    let mut bits = BitSet::full(m.len());
    for y in subset {
        bits.intersect_with(&orth[y]);
    }
    Subsemimodule::from_bits(m.clone(), bits)
}

/// `Σ U_j`; the empty family sums to `{0}`.
pub fn sum_family(m: &Arc<FreeSemimodule>, family: &[Subsemimodule]) -> Result<Subsemimodule, ModuleError> {
    family.iter().try_fold(Subsemimodule::zero(m), |acc, u| acc.sum(u))
}

/// `∩ U_j`; the empty family intersects to `M`.
pub fn intersect_family(m: &Arc<FreeSemimodule>, family: &[Subsemimodule]) -> Result<Subsemimodule, ModuleError> {
    family.iter().try_fold(Subsemimodule::whole(m), |acc, u| acc.intersect(u))
}

/// `U ∨ W = (U + W)^⊥⊥`, the join in `L_c(M)`.
pub fn join_closed(u: &Subsemimodule, w: &Subsemimodule) -> Result<Subsemimodule, ModuleError> {
    Ok(u.sum(w)?.double_perp())
}

/// All subsemimodules of `M` in canonical order.
///
/// Saturates from `{0}`: every subsemimodule is a finite sum of cyclic ones,
/// so repeatedly adding a cyclic subsemimodule reaches all of them.
pub fn enumerate_subsemimodules(m: &Arc<FreeSemimodule>, cap: usize) -> Result<Vec<Subsemimodule>, ModuleError> {
    let mut cyclic: Vec<Subsemimodule> = m.ids().map(|x| closure(m, [x])).collect();
    cyclic.sort();
    cyclic.dedup();

    let zero = Subsemimodule::zero(m);
    let mut seen: HashSet<BitSet> = HashSet::new();
    seen.insert(zero.bits.clone());
    let mut found = vec![zero];
    let mut next = 0;
    while next < found.len() {
        let u = found[next].clone();
        next += 1;
        for c in &cyclic {
            if c.is_subset(&u) {
                continue;
            }
            let w = u.sum_unchecked(c);
            if seen.insert(w.bits.clone()) {
                if found.len() >= cap {
                    return Err(ModuleError::EnumerationCapExceeded { cap });
                }
                found.push(w);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// `L_c(M) = {U^⊥ | U ∈ L(M)}`, canonically ordered.
pub fn closed_subsemimodules(subs: &[Subsemimodule]) -> Vec<Subsemimodule> {
    let mut out: Vec<Subsemimodule> = subs.iter().map(Subsemimodule::perp).collect();
    out.sort();
    out.dedup();
    out
}

/// The enumerated lattice `L(M)` with index-level operation tables.
pub struct SubLattice {
    ambient: Arc<FreeSemimodule>,
    subs: Vec<Subsemimodule>,
    index: HashMap<BitSet, usize>,
    perp: Vec<usize>,
    labels: Vec<String>,
}

impl SubLattice {
    pub fn new(m: &Arc<FreeSemimodule>, cap: usize) -> Result<Self, ModuleError> {
        Ok(Self::from_subs(m, enumerate_subsemimodules(m, cap)?))
    }

    pub fn from_subs(m: &Arc<FreeSemimodule>, subs: Vec<Subsemimodule>) -> Self {
        let index: HashMap<BitSet, usize> = subs.iter().enumerate().map(|(i, u)| (u.bits.clone(), i)).collect();
        let perp = subs.iter().map(|u| index[&u.perp().bits]).collect();
        let last = subs.len() - 1;
        let labels = (0..subs.len()).map(|i| if i == last { "M".to_string() } else { format!("S{}", i + 1) }).collect();
        SubLattice { ambient: m.clone(), subs, index, perp, labels }
    }

    pub fn ambient(&self) -> &Arc<FreeSemimodule> {
        &self.ambient
    }

    pub fn subs(&self) -> &[Subsemimodule] {
        &self.subs
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Replaces the display names, e.g. with a published numbering.
    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.subs.len());
        self.labels = labels;
    }

    pub fn index_of(&self, u: &Subsemimodule) -> Option<usize> {
        self.index.get(&u.bits).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn perp_index(&self, i: usize) -> usize {
        self.perp[i]
    }

    pub fn perp_table(&self) -> &[usize] {
        &self.perp
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.subs[i].is_subset(&self.subs[j])
    }

    pub fn sum_index(&self, i: usize, j: usize) -> usize {
        self.index[&self.subs[i].sum_unchecked(&self.subs[j]).bits]
    }

    pub fn meet_index(&self, i: usize, j: usize) -> usize {
        self.index[&self.subs[i].bits.intersection(&self.subs[j].bits)]
    }

    pub fn closed_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.perp[self.perp[i]] == i).collect()
    }

    pub fn splitting_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.subs[i].is_splitting()).collect()
    }

    /// Poset on the given members ordered by inclusion, with `⊥` as unary
    /// operation. Fails if `⊥` leaves the selection.
    pub fn poset_of(&self, selection: &[usize]) -> Result<FinitePoset, crate::error::PosetError> {
        let sets: Vec<Subsemimodule> = selection.iter().map(|&i| self.subs[i].clone()).collect();
        let labels = selection.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(crate::poset::poset_from_subsets(&sets, Some(Subsemimodule::perp))?.with_labels(labels))
    }

    pub fn poset(&self) -> FinitePoset {
        let all: Vec<usize> = (0..self.len()).collect();
        self.poset_of(&all).expect("⊥ maps L(M) into itself")
    }

    fn tables(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let mut sum = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let s = self.sum_index(i, j);
                let t = self.meet_index(i, j);
                sum[i * n + j] = s;
                sum[j * n + i] = s;
                meet[i * n + j] = t;
                meet[j * n + i] = t;
            }
        }
        (sum, meet)
    }

    /// Evaluates every clause of the closure-operator laws for `⊥⊥`
    /// over all pairs of subsemimodules.
    pub fn check_closure_operator(&self) -> CheckReport {
        let n = self.len();
        let l = |i: usize| self.label(i).to_string();
        let p = &self.perp;
        let mut r = CheckReport::new("closure-operator");

        let mut c = r.clause("U^⊥ ∈ L(M)");
        for u in &self.subs {
            let q = u.perp();
            c.check(
                self.index.contains_key(&q.bits) && closure(&self.ambient, q.members()) == q,
                || q.format(),
            );
        }
        c.finish();

        let mut c = r.clause("U ⊆ W ⇒ W^⊥ ⊆ U^⊥");
        for i in 0..n {
            for j in 0..n {
                c.check(!self.leq(i, j) || self.leq(p[j], p[i]), || format!("U={}, W={}", l(i), l(j)));
            }
        }
        c.finish();

        let mut c = r.clause("U ⊆ U^⊥⊥");
        for i in 0..n {
            c.check(self.leq(i, p[p[i]]), || l(i));
        }
        c.finish();

        let mut c = r.clause("U^⊥⊥⊥ = U^⊥");
        for i in 0..n {
            c.check(p[p[p[i]]] == p[i], || l(i));
        }
        c.finish();

        let mut c = r.clause("U ⊆ W^⊥ ⇔ W ⊆ U^⊥");
        for i in 0..n {
            for j in 0..n {
                c.check(self.leq(i, p[j]) == self.leq(j, p[i]), || format!("U={}, W={}", l(i), l(j)));
            }
        }
        c.finish();

        let mut c = r.clause("{0}^⊥ = M and M^⊥ = {0}");
        c.check(p[self.bottom()] == self.top() && p[self.top()] == self.bottom(), || {
            format!("{{0}}^⊥={}, M^⊥={}", l(p[self.bottom()]), l(p[self.top()]))
        });
        c.finish();

        let mut c = r.clause("⊥⊥ monotone");
        for i in 0..n {
            for j in 0..n {
                c.check(!self.leq(i, j) || self.leq(p[p[i]], p[p[j]]), || format!("U={}, W={}", l(i), l(j)));
            }
        }
        c.finish();
        r
    }

    /// Both parts of the sum/intersection complement laws over all families
    /// of at most three members (as multisets).
    pub fn check_family_complements(&self) -> CheckReport {
        let n = self.len();
        let (sum, meet) = self.tables();
        let p = &self.perp;
        let s = |i: usize, j: usize| sum[i * n + j];
        let m = |i: usize, j: usize| meet[i * n + j];
        let closed = self.closed_indices();
        let mut r = CheckReport::new("complement-of-families");

        let fam_label = |f: &[usize]| f.iter().map(|&i| self.label(i)).collect::<Vec<_>>().join(",");
        let fold = |f: &[usize], op: &dyn Fn(usize, usize) -> usize| f[1..].iter().fold(f[0], |a, &b| op(a, b));

        let mut c1 = r.clause("(Σ U_j)^⊥ = ∩ U_j^⊥");
        let mut c2 = Tally::new("(∩ U_j)^⊥ ⊇ Σ U_j^⊥");
        for_each_family(n, 3, |f| {
            let pf: Vec<usize> = f.iter().map(|&i| p[i]).collect();
            c1.check(p[fold(f, &s)] == fold(&pf, &m), || fam_label(f));
            c2.check(self.leq(fold(&pf, &s), p[fold(f, &m)]), || fam_label(f));
        });
        c1.finish();
        r.push(c2.into_clause());

        let join = |a: usize, b: usize| p[p[s(a, b)]];
        let mut c3 = r.clause("closed: (∨ U_j)^⊥ = ∩ U_j^⊥");
        let mut c4 = Tally::new("closed: (∩ U_j)^⊥ = ∨ U_j^⊥");
        for_each_family(closed.len(), 3, |f| {
            let f: Vec<usize> = f.iter().map(|&i| closed[i]).collect();
            let pf: Vec<usize> = f.iter().map(|&i| p[i]).collect();
            c3.check(p[fold(&f, &join)] == fold(&pf, &m), || fam_label(&f));
            c4.check(p[fold(&f, &m)] == fold(&pf, &join), || fam_label(&f));
        });
        c3.finish();
        r.push(c4.into_clause());

        let mut c5 = r.clause("closed: ⊥ antitone involution");
        for &i in &closed {
            for &j in &closed {
                c5.check(
                    p[p[i]] == i && (!self.leq(i, j) || self.leq(p[j], p[i])),
                    || format!("{}, {}", self.label(i), self.label(j)),
                );
            }
        }
        c5.finish();

        let mut c6 = r.clause("L(M) lattice: + is lub, ∩ is glb");
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (s(i, j), m(i, j));
                let lub = self.leq(i, a)
                    && self.leq(j, a)
                    && (0..n).all(|k| !(self.leq(i, k) && self.leq(j, k)) || self.leq(a, k));
                let glb = self.leq(b, i)
                    && self.leq(b, j)
                    && (0..n).all(|k| !(self.leq(k, i) && self.leq(k, j)) || self.leq(k, b));
                c6.check(lub && glb, || format!("{}, {}", self.label(i), self.label(j)));
            }
        }
        c6.finish();
        r
    }

    /// Decides whether `(U∩W)^⊥⊥ = U^⊥⊥ ∩ W^⊥⊥` for all pairs (and families
    /// of up to three), and when it does, verifies that `⊥⊥` is a surjective
    /// homomorphism `L(M) → L_c(M)`.
    pub fn check_double_perp_homomorphism(&self) -> (bool, CheckReport) {
        let n = self.len();
        let (sum, meet) = self.tables();
        let p = &self.perp;
        let pp = |i: usize| p[p[i]];
        let s = |i: usize, j: usize| sum[i * n + j];
        let m = |i: usize, j: usize| meet[i * n + j];
        let mut r = CheckReport::new("double-perp-homomorphism");

        let mut hyp_pairs = true;
        let mut witness = None;
        for i in 0..n {
            for j in 0..n {
                if pp(m(i, j)) != m(pp(i), pp(j)) {
                    hyp_pairs = false;
                    witness.get_or_insert_with(|| format!("U={}, W={}", self.label(i), self.label(j)));
                }
            }
        }
        let mut hyp_families = true;
        let family_count = for_each_family(n, 3, |f| {
            let lhs = pp(f[1..].iter().fold(f[0], |a, &b| m(a, b)));
            let rhs = f[1..].iter().fold(pp(f[0]), |a, &b| m(a, pp(b)));
            hyp_families &= lhs == rhs;
        });
        r.info(
            "hypothesis: (U∩W)^⊥⊥ = U^⊥⊥ ∩ W^⊥⊥",
            n * n,
            match &witness {
                None => "holds".into(),
                Some(w) => format!("does not hold at {w}"),
            },
        );
        r.info(
            "hypothesis for families of at most 3",
            family_count,
            if hyp_families { "holds" } else { "does not hold" },
        );
        if !hyp_pairs {
            r.skip("homomorphism equations", "hypothesis does not hold");
            return (false, r);
        }

        let lab = |i: usize, j: usize| format!("U={}, W={}", self.label(i), self.label(j));
        let mut c = r.clause("(U+W)^⊥⊥ = U^⊥⊥ ∨ W^⊥⊥");
        for i in 0..n {
            for j in 0..n {
                c.check(pp(s(i, j)) == pp(s(pp(i), pp(j))), || lab(i, j));
            }
        }
        c.finish();
        let mut c = r.clause("(U∩W)^⊥⊥ = U^⊥⊥ ∩ W^⊥⊥");
        for i in 0..n {
            for j in 0..n {
                c.check(pp(m(i, j)) == m(pp(i), pp(j)), || lab(i, j));
            }
        }
        c.finish();
        let mut c = r.clause("(U^⊥)^⊥⊥ = (U^⊥⊥)^⊥");
        for i in 0..n {
            c.check(pp(p[i]) == p[pp(i)], || self.label(i).to_string());
        }
        c.finish();
        let mut c = r.clause("{0}^⊥⊥ = {0} and M^⊥⊥ = M");
        c.check(pp(self.bottom()) == self.bottom() && pp(self.top()) == self.top(), String::new);
        c.finish();
        let mut c = r.clause("⊥⊥ onto L_c(M)");
        let mut image: Vec<usize> = (0..n).map(pp).collect();
        image.sort_unstable();
        image.dedup();
        c.check(image == self.closed_indices(), || format!("image has {} members", image.len()));
        c.finish();
        (r.passed(), r)
    }
}

/// Calls `f` on every non-decreasing index tuple of length 1..=max_size
/// over `0..n`, in lexicographic order. Returns the number of tuples.
pub(crate) fn for_each_family(n: usize, max_size: usize, mut f: impl FnMut(&[usize])) -> usize {
    fn rec(n: usize, max_size: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]), count: &mut usize) {
        let start = buf.last().copied().unwrap_or(0);
        for i in start..n {
            buf.push(i);
            f(buf);
            *count += 1;
            if buf.len() < max_size {
                rec(n, max_size, buf, f, count);
            }
            buf.pop();
        }
    }
    let mut count = 0;
    rec(n, max_size, &mut Vec::with_capacity(max_size), &mut f, &mut count);
    count
}
