//! Independent reference evaluators. Nothing here calls the library's
//! algorithms; only raw tables, coordinates and order relations cross over.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use semimod::semimodule::FreeSemimodule;
use semimod::semiring::{Axiom, SemiringTables};
use semimod::sublattice::Subsemimodule;

pub type Coords = Vec<usize>;
pub type VectorSet = BTreeSet<Coords>;

/// All vectors of `S^k` in odometer order, computed from scratch.
pub fn all_vectors(n: usize, k: usize) -> Vec<Coords> {
    let mut out = vec![vec![0; k]];
    loop {
        let mut v = out.last().unwrap().clone();
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
        out.push(v);
    }
}

/// Every subset of `S^k` that contains zero and is closed under addition and
/// scalar multiplication, found by filtering the full power set.
pub fn powerset_subsemimodules(t: &SemiringTables, k: usize) -> BTreeSet<VectorSet> {
    let n = t.labels.len();
    let vs = all_vectors(n, k);
    assert!(vs.len() <= 16, "power-set oracle is limited to 16 vectors");
    let pos = |v: &Coords| vs.iter().position(|w| w == v).unwrap();
    let add: Vec<Vec<usize>> = vs
        .iter()
        .map(|x| vs.iter().map(|y| pos(&x.iter().zip(y).map(|(&a, &b)| t.add[a][b]).collect())).collect())
        .collect();
    let scale: Vec<Vec<usize>> = (0..n)
        .map(|a| vs.iter().map(|x| pos(&x.iter().map(|&b| t.mul[a][b]).collect())).collect())
        .collect();
    let zero = pos(&vec![t.zero; k]);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << vs.len()) {
        let has = |i: usize| mask >> i & 1 == 1;
        if !has(zero) {
            continue;
        }
        let members: Vec<usize> = (0..vs.len()).filter(|&i| has(i)).collect();
        let sum_closed = members.iter().all(|&x| members.iter().all(|&y| has(add[x][y])));
        let scale_closed = (0..n).all(|a| members.iter().all(|&x| has(scale[a][x])));
        if sum_closed && scale_closed {
            out.insert(members.iter().map(|&i| vs[i].clone()).collect());
        }
    }
    out
}

pub fn as_vector_set(m: &FreeSemimodule, u: &Subsemimodule) -> VectorSet {
    u.members().map(|x| m.coords(x).to_vec()).collect()
}

/// Axioms that fail on the tables, by brute force.
pub fn failing_axioms(t: &SemiringTables) -> BTreeSet<Axiom> {
    let n = t.labels.len();
    let a = |x: usize, y: usize| t.add[x][y];
    let m = |x: usize, y: usize| t.mul[x][y];
    let mut out = BTreeSet::new();
    for x in 0..n {
        if a(t.zero, x) != x || a(x, t.zero) != x {
            out.insert(Axiom::AddIdentity);
        }
        if m(t.one, x) != x || m(x, t.one) != x {
            out.insert(Axiom::MulIdentity);
        }
        if m(t.zero, x) != t.zero || m(x, t.zero) != t.zero {
            out.insert(Axiom::Annihilation);
        }
        for y in 0..n {
            if a(x, y) != a(y, x) {
                out.insert(Axiom::AddCommutative);
            }
            if m(x, y) != m(y, x) {
                out.insert(Axiom::MulCommutative);
            }
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    out.insert(Axiom::AddAssociative);
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    out.insert(Axiom::MulAssociative);
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) || m(a(y, z), x) != a(m(y, x), m(z, x)) {
                    out.insert(Axiom::Distributive);
                }
            }
        }
    }
    out
}

/// A bounded poset given by its order matrix, with an optional unary map.
#[derive(Clone, Debug)]
pub struct RefPoset {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
    pub unary: Option<Vec<usize>>,
}

impl RefPoset {
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.le[x][y]
    }

    fn bottom(&self) -> usize {
        (0..self.n).find(|&b| (0..self.n).all(|x| self.le(b, x))).unwrap()
    }

    fn top(&self) -> usize {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.le(x, t))).unwrap()
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.n).filter(|&z| self.le(x, z) && self.le(y, z)).collect();
        let least: Vec<usize> = ub.iter().copied().filter(|&z| ub.iter().all(|&w| self.le(z, w))).collect();
        least.first().copied()
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.n).filter(|&z| self.le(z, x) && self.le(z, y)).collect();
        let greatest: Vec<usize> = lb.iter().copied().filter(|&z| lb.iter().all(|&w| self.le(w, z))).collect();
        greatest.first().copied()
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some()))
    }

    fn j(&self, x: usize, y: usize) -> usize {
        self.join(x, y).unwrap()
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.meet(x, y).unwrap()
    }

    /// `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
    pub fn modular_law(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| !self.le(x, z) || self.j(x, self.m(y, z)) == self.m(self.j(x, y), z)))
        })
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributive_law(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.m(x, self.j(y, z)) == self.j(self.m(x, y), self.m(x, z))))
        })
    }

    /// Every five-element subset that forms a pentagon sublattice.
    pub fn pentagon_subsets(&self) -> BTreeSet<[usize; 5]> {
        let mut out = BTreeSet::new();
        for s in five_subsets(self.n) {
            let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.j(a, b)) && s.contains(&self.m(a, b))));
            if !closed {
                continue;
            }
            let lo = *s.iter().find(|&&x| s.iter().all(|&y| self.le(x, y))).unwrap_or(&usize::MAX);
            let hi = *s.iter().find(|&&x| s.iter().all(|&y| self.le(y, x))).unwrap_or(&usize::MAX);
            if lo == usize::MAX || hi == usize::MAX {
                continue;
            }
            let mid: Vec<usize> = s.iter().copied().filter(|&x| x != lo && x != hi).collect();
            let comparable_pairs = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| self.le(mid[i], mid[j]) || self.le(mid[j], mid[i]))
                .count();
            if comparable_pairs == 1 {
                out.insert(s);
            }
        }
        out
    }

    pub fn has_diamond(&self) -> bool {
        five_subsets(self.n).into_iter().any(|s| {
            let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.j(a, b)) && s.contains(&self.m(a, b))));
            if !closed {
                return false;
            }
            let lo = s.iter().find(|&&x| s.iter().all(|&y| self.le(x, y)));
            let hi = s.iter().find(|&&x| s.iter().all(|&y| self.le(y, x)));
            match (lo, hi) {
                (Some(&lo), Some(&hi)) => {
                    let mid: Vec<usize> = s.iter().copied().filter(|&x| x != lo && x != hi).collect();
                    (0..3).all(|i| (0..3).all(|j| i == j || !self.le(mid[i], mid[j])))
                }
                _ => false,
            }
        })
    }

    pub fn complemented(&self) -> bool {
        let (b, t) = (self.bottom(), self.top());
        (0..self.n).all(|x| (0..self.n).any(|y| self.j(x, y) == t && self.m(x, y) == b))
    }

    pub fn covers(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.le(x, y) && !(0..self.n).any(|z| z != x && z != y && self.le(x, z) && self.le(z, y)) {
                    out.insert((x, y));
                }
            }
        }
        out
    }

    pub fn atomic(&self) -> bool {
        let b = self.bottom();
        let atoms: Vec<usize> = self.covers().into_iter().filter(|&(x, _)| x == b).map(|(_, y)| y).collect();
        (0..self.n).filter(|&x| x != b).all(|x| atoms.iter().any(|&a| self.le(a, x)))
    }

    pub fn antitone_involution(&self) -> bool {
        let u = self.unary.as_ref().unwrap();
        (0..self.n).all(|x| u[u[x]] == x && (0..self.n).all(|y| !self.le(x, y) || self.le(u[y], u[x])))
    }

    pub fn complementation(&self) -> bool {
        let u = self.unary.as_ref().unwrap();
        let (b, t) = (self.bottom(), self.top());
        (0..self.n).all(|x| self.join(x, u[x]) == Some(t) && self.meet(x, u[x]) == Some(b))
    }

    /// `x ≤ y ⇒ y = x ∨ (y ∧ x')`, each operation required to exist.
    pub fn orthomodular(&self) -> bool {
        let u = self.unary.as_ref().unwrap();
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                !self.le(x, y)
                    || (self.join(x, y).is_some()
                        && self.meet(y, u[x]).and_then(|w| self.join(x, w)) == Some(y))
            })
        })
    }

    /// Brute-force search over all permutations.
    pub fn isomorphic(&self, other: &RefPoset, respect_unary: bool, reverse: bool) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            let order_ok = (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    let target = if reverse { other.le(perm[y], perm[x]) } else { other.le(perm[x], perm[y]) };
                    self.le(x, y) == target
                })
            });
            let unary_ok = !respect_unary
                || match (&self.unary, &other.unary) {
                    (Some(a), Some(b)) => (0..self.n).all(|x| perm[a[x]] == b[perm[x]]),
                    _ => false,
                };
            if order_ok && unary_ok {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn five_subsets(n: usize) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        out.push([a, b, c, d, e]);
                    }
                }
            }
        }
    }
    out
}

fn transitive_closure(le: &mut [Vec<bool>]) {
    let n = le.len();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
}

/// Random bounded poset: a random DAG on the inner elements, plus bottom 0
/// and top `n-1`.
pub fn random_bounded_poset(rng: &mut StdRng, n: usize) -> RefPoset {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
        row[n - 1] = true;
    }
    le[0] = vec![true; n];
    let p: f64 = rng.gen_range(0.1..0.6);
    for i in 1..n.saturating_sub(1) {
        for j in i + 1..n - 1 {
            if rng.gen_bool(p) {
                le[i][j] = true;
            }
        }
    }
    transitive_closure(&mut le);
    RefPoset { n, le, unary: None }
}

/// Random lattice: an intersection-closed family of subsets of a small set,
/// containing the full set, with at most `max` members.
pub fn random_moore_lattice(rng: &mut StdRng, max: usize) -> RefPoset {
    let sets: Vec<u32> = loop {
        let base = rng.gen_range(2..=5u32);
        let full = (1u32 << base) - 1;
        let mut family: BTreeSet<u32> = BTreeSet::from([full]);
        for _ in 0..rng.gen_range(1..=5) {
            family.insert(rng.gen_range(0..=full));
        }
        loop {
            let v: Vec<u32> = family.iter().copied().collect();
            let before = family.len();
            for &a in &v {
                for &b in &v {
                    family.insert(a & b);
                }
            }
            if family.len() == before {
                break;
            }
        }
        if family.len() <= max {
            break family.into_iter().collect();
        }
    };
    let n = sets.len();
    let le = (0..n).map(|i| (0..n).map(|j| sets[i] & sets[j] == sets[i]).collect()).collect();
    RefPoset { n, le, unary: None }
}

/// Horizontal sum of Boolean algebras `2^{k_i}` glued at their bounds, with
/// the blockwise complement as involution. Orthomodular by construction.
pub fn horizontal_sum(blocks: &[u32]) -> RefPoset {
    // element ids: 0 bottom, 1 top, then each block's proper elements
    let mut masks: Vec<(usize, u32)> = Vec::new();
    for (b, &k) in blocks.iter().enumerate() {
        let full = (1u32 << k) - 1;
        for s in 1..full {
            masks.push((b, s));
        }
    }
    let n = masks.len() + 2;
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[0][i] = true;
        le[i][1] = true;
        le[i][i] = true;
    }
    for (i, &(bi, si)) in masks.iter().enumerate() {
        for (j, &(bj, sj)) in masks.iter().enumerate() {
            if bi == bj && si & sj == si {
                le[i + 2][j + 2] = true;
            }
        }
    }
    let mut unary = vec![1, 0];
    for &(b, s) in &masks {
        let full = (1u32 << blocks[b]) - 1;
        unary.push(2 + masks.iter().position(|&(c, t)| c == b && t == full ^ s).unwrap());
    }
    RefPoset { n, le, unary: Some(unary) }
}

/// A random involutive permutation, not necessarily order-reversing.
pub fn random_involution(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let mut u: Vec<usize> = (0..n).collect();
    for pair in idx.chunks(2) {
        if pair.len() == 2 && rng.gen_bool(0.8) {
            u[pair[0]] = pair[1];
            u[pair[1]] = pair[0];
        }
    }
    u
}

/// Subsets of `{0..k}` under inclusion.
pub fn powerset_ref(k: usize) -> RefPoset {
    let n = 1usize << k;
    let le = (0..n).map(|i| (0..n).map(|j| i & j == i).collect()).collect();
    RefPoset { n, le, unary: None }
}

pub fn mo2_ref() -> RefPoset {
    horizontal_sum(&[2, 2])
}

pub fn to_finite(r: &RefPoset) -> semimod::FinitePoset {
    semimod::FinitePoset::from_relation(r.n, |i, j| r.le(i, j), r.unary.clone()).expect("valid bounded poset")
}

/// The mixed population used for the verdict cross-check: random bounded
/// posets, random lattices, horizontal sums of Boolean algebras, some with
/// random involutions, all of size at most 12.
pub fn random_population(rng: &mut StdRng, count: usize) -> Vec<RefPoset> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = match out.len() % 5 {
            0 => {
                let n = rng.gen_range(1..=12);
                random_bounded_poset(rng, n)
            }
            1 => random_moore_lattice(rng, 12),
            2 => {
                let mut blocks = Vec::new();
                let mut size = 2;
                loop {
                    let k = rng.gen_range(1..=3u32);
                    let extra = (1usize << k) - 2;
                    if size + extra > 12 || (blocks.len() >= 2 && rng.gen_bool(0.4)) {
                        break;
                    }
                    size += extra;
                    blocks.push(k);
                }
                if blocks.is_empty() {
                    blocks.push(1);
                }
                horizontal_sum(&blocks)
            }
            3 => {
                let mut p = random_moore_lattice(rng, 12);
                p.unary = Some(random_involution(rng, p.n));
                p
            }
            _ => {
                let n = rng.gen_range(2..=12);
                let mut p = random_bounded_poset(rng, n);
                p.unary = Some(random_involution(rng, p.n));
                p
            }
        };
        out.push(p);
    }
    out
}

/// Compares every verdict of the library against the reference evaluator.
pub fn compare_verdicts(r: &RefPoset) -> Result<(), String> {
    let p = to_finite(r);
    let mut errs = Vec::new();
    let mut expect = |what: &str, got: bool, want: bool| {
        if got != want {
            errs.push(format!("{what}: library {got}, reference {want}"));
        }
    };
    let lattice = r.is_lattice();
    expect("lattice", p.is_lattice(), lattice);
    let hasse: BTreeSet<(usize, usize)> = p.hasse_edges().into_iter().collect();
    expect("cover relation", hasse == r.covers(), true);
    expect("atomic", p.is_atomic(), r.atomic());
    if lattice {
        let modular = r.modular_law();
        let distributive = r.distributive_law();
        let complemented = r.complemented();
        expect("modular", p.is_modular().unwrap(), modular);
        expect("distributive", p.is_distributive().unwrap(), distributive);
        expect("complemented", p.is_complemented().unwrap(), complemented);
        expect("boolean", p.is_boolean_algebra().unwrap(), distributive && complemented);
        let found: BTreeSet<[usize; 5]> = p
            .n5_sublattices()
            .unwrap()
            .into_iter()
            .map(|w| {
                let mut m = w.members();
                m.sort_unstable();
                m
            })
            .collect();
        expect("pentagon sublattices", found == r.pentagon_subsets(), true);
        expect("diamond", p.m3_witness().unwrap().is_some(), r.has_diamond());
    } else {
        expect("modular errors", p.is_modular().is_err(), true);
    }
    if r.unary.is_some() {
        let inv = r.antitone_involution();
        let comp = r.complementation();
        expect("antitone involution", p.is_antitone_involution().unwrap(), inv);
        expect("complementation", p.is_complementation().unwrap(), comp);
        expect("orthoposet", p.is_orthoposet().unwrap(), inv && comp);
        if inv && comp {
            expect("orthomodular", p.is_orthomodular_poset().unwrap(), r.orthomodular());
        } else {
            expect("orthomodular errors", p.is_orthomodular_poset().is_err(), true);
        }
        if r.n == 6 {
            expect("MO2", p.is_iso_mo2(), r.isomorphic(&mo2_ref(), true, false));
        } else {
            expect("MO2", p.is_iso_mo2(), false);
        }
    }
    for k in 0..=3 {
        let want = r.n == 1 << k && r.isomorphic(&powerset_ref(k), false, true);
        expect(&format!("antiisomorphic to 2^{k}"), p.antiisomorphic_to_powerset(k), want);
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(format!("{} on {:?}", errs.join("; "), r))
    }
}

/// Every builtin semiring name with at most `max_elements` elements.
pub fn builtin_names(max_elements: usize) -> Vec<String> {
    let mut names = vec!["bool".to_string()];
    names.extend((1..=max_elements).map(|n| format!("z{n}")));
    names.extend((2..=max_elements).map(|n| format!("chain{n}")));
    names
}

/// `(builtin, rank)` pairs with `|S|^rank ≤ max_module`, rank ≤ `max_rank`.
pub fn builtin_instances(max_module: usize, max_rank: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for name in builtin_names(max_module.min(16)) {
        let n = semimod::analysis::builtin(&name).unwrap().len();
        for k in 1..=max_rank {
            if n.checked_pow(k as u32).is_some_and(|size| size <= max_module) {
                out.push((name.clone(), k));
            }
        }
    }
    out
}

/// Compares the enumeration with the power-set filter; returns the count.
pub fn enumeration_matches_oracle(name: &str, k: usize) -> Result<usize, String> {
    let s = semimod::analysis::builtin(name).unwrap();
    let tables = s.tables();
    let m = semimod::free_semimodule(s, k).unwrap();
    let subs = semimod::enumerate_subsemimodules(&m, 100_000).map_err(|e| e.to_string())?;
    let got: BTreeSet<VectorSet> = subs.iter().map(|u| as_vector_set(&m, u)).collect();
    if got.len() != subs.len() {
        return Err(format!("{name}^{k}: duplicate subsemimodules"));
    }
    let want = powerset_subsemimodules(&tables, k);
    if got != want {
        return Err(format!("{name}^{k}: {} enumerated vs {} by power-set filter", got.len(), want.len()));
    }
    Ok(got.len())
}
