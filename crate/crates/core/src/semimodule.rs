//! The free semimodule `S^k` over a finite commutative semiring.
//!
//! Every vector of `S^k` gets an index in the canonical enumeration: the
//! coordinates read as a base-`n` numeral with coordinate 0 most significant.
//! Index 0 is therefore the zero vector. All set-valued computations work on
//! these indices.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::ModuleError;
use crate::semiring::{Elem, FiniteSemiring};
use crate::sublattice::Subsemimodule;

/// Default upper bound on `|S|^k`.
pub const DEFAULT_MAX_VECTORS: usize = 4096;

/// Index of a vector in the canonical enumeration of its semimodule.
pub type VecId = usize;

/// A coordinate tuple of semiring element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vector(pub Vec<Elem>);

impl Vector {
    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<Elem>> for Vector {
    fn from(v: Vec<Elem>) -> Self {
        Vector(v)
    }
}

pub struct FreeSemimodule {
    semiring: FiniteSemiring,
    rank: usize,
    size: usize,
    coords: Vec<Elem>,
    place: Vec<usize>,
    orth: OnceLock<Vec<BitSet>>,
}

impl PartialEq for FreeSemimodule {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.semiring == other.semiring
    }
}

impl Eq for FreeSemimodule {}

impl fmt::Debug for FreeSemimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.semiring.name(), self.rank)
    }
}

/// Builds `S^k` with the default size cap.
pub fn free_semimodule(semiring: FiniteSemiring, rank: usize) -> Result<Arc<FreeSemimodule>, ModuleError> {
    FreeSemimodule::new(semiring, rank, DEFAULT_MAX_VECTORS)
}

impl FreeSemimodule {
    pub fn new(semiring: FiniteSemiring, rank: usize, max_vectors: usize) -> Result<Arc<Self>, ModuleError> {
        if rank == 0 {
            return Err(ModuleError::ZeroRank);
        }
        let n = semiring.len();
        let size = (n as u128).checked_pow(rank as u32).unwrap_or(u128::MAX);
        if size > max_vectors as u128 {
            return Err(ModuleError::SizeCapExceeded { size, cap: max_vectors });
        }
        let size = size as usize;
        let place: Vec<usize> = (0..rank).map(|i| n.pow((rank - 1 - i) as u32)).collect();
        let mut coords = Vec::with_capacity(size * rank);
        for id in 0..size {
            coords.extend(place.iter().map(|&p| (id / p) % n));
        }
        Ok(Arc::new(FreeSemimodule { semiring, rank, size, coords, place, orth: OnceLock::new() }))
    }

    pub fn semiring(&self) -> &FiniteSemiring {
        &self.semiring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of vectors, `|S|^k`.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ids(&self) -> std::ops::Range<VecId> {
        0..self.size
    }

    pub fn zero_id(&self) -> VecId {
        self.encode(std::iter::repeat_n(self.semiring.zero(), self.rank))
    }

    /// Index of the standard basis vector `b_i`.
    pub fn basis_id(&self, i: usize) -> VecId {
        let s = &self.semiring;
        self.encode((0..self.rank).map(|j| if i == j { s.one() } else { s.zero() }))
    }

    pub fn basis(&self) -> Vec<VecId> {
        (0..self.rank).map(|i| self.basis_id(i)).collect()
    }

    #[inline]
    pub fn coords(&self, x: VecId) -> &[Elem] {
        &self.coords[x * self.rank..(x + 1) * self.rank]
    }

    #[inline]
    fn encode(&self, coords: impl Iterator<Item = Elem>) -> VecId {
        coords.zip(&self.place).map(|(c, p)| c * p).sum()
    }

    pub fn vector(&self, x: VecId) -> Vector {
        Vector(self.coords(x).to_vec())
    }

    pub fn id_of(&self, v: &Vector) -> Result<VecId, ModuleError> {
        if v.rank() != self.rank {
            return Err(ModuleError::RankMismatch { expected: self.rank, found: v.rank() });
        }
        if let Some(&bad) = v.coords().iter().find(|&&c| c >= self.semiring.len()) {
            return Err(ModuleError::BadCoordinate(bad));
        }
        Ok(self.encode(v.coords().iter().copied()))
    }

    #[inline]
    pub fn add_ids(&self, x: VecId, y: VecId) -> VecId {
        let s = &self.semiring;
        self.encode(self.coords(x).iter().zip(self.coords(y)).map(|(&a, &b)| s.add(a, b)))
    }

    #[inline]
    pub fn scale_id(&self, a: Elem, x: VecId) -> VecId {
        let s = &self.semiring;
        self.encode(self.coords(x).iter().map(|&c| s.mul(a, c)))
    }

    /// `x - y`; `None` unless the semiring is a ring.
    pub fn sub_ids(&self, x: VecId, y: VecId) -> Option<VecId> {
        let s = &self.semiring;
        let neg: Option<Vec<Elem>> = self.coords(y).iter().map(|&c| s.neg(c)).collect();
        let neg = self.encode(neg?.into_iter());
        Some(self.add_ids(x, neg))
    }

    #[inline]
    pub fn inner_ids(&self, x: VecId, y: VecId) -> Elem {
        let s = &self.semiring;
        self.coords(x)
            .iter()
            .zip(self.coords(y))
            .fold(s.zero(), |acc, (&a, &b)| s.add(acc, s.mul(a, b)))
    }

    pub fn add(&self, x: &Vector, y: &Vector) -> Result<Vector, ModuleError> {
        let (x, y) = (self.id_of(x)?, self.id_of(y)?);
        Ok(self.vector(self.add_ids(x, y)))
    }

    pub fn scale(&self, a: Elem, x: &Vector) -> Result<Vector, ModuleError> {
        if a >= self.semiring.len() {
            return Err(ModuleError::BadCoordinate(a));
        }
        Ok(self.vector(self.scale_id(a, self.id_of(x)?)))
    }

    pub fn inner_product(&self, x: &Vector, y: &Vector) -> Result<Elem, ModuleError> {
        Ok(self.inner_ids(self.id_of(x)?, self.id_of(y)?))
    }

    /// For each vector, the set of vectors orthogonal to it. Built on first use.
    pub fn orthogonal_sets(&self) -> &[BitSet] {
        self.orth.get_or_init(|| {
            let zero = self.semiring.zero();
            let mut sets = vec![BitSet::new(self.size); self.size];
            for x in self.ids() {
                for y in x..self.size {
                    if self.inner_ids(x, y) == zero {
                        sets[x].insert(y);
                        sets[y].insert(x);
                    }
                }
            }
            sets
        })
    }

    /// `a.x = b.x` for all `x` forces `a = b`. Tested on the basis, since
    /// `a.b_i` is the i-th coordinate of `a`.
    pub fn check_nondegenerate(&self) -> bool {
        let basis = self.basis();
        let mut seen = HashSet::with_capacity(self.size);
        self.ids()
            .all(|a| seen.insert(basis.iter().map(|&b| self.inner_ids(a, b)).collect::<Vec<_>>()))
    }

    /// Formats a vector as `(c0,c1,...)` using element labels.
    pub fn format(&self, x: VecId) -> String {
        let parts: Vec<&str> = self.coords(x).iter().map(|&c| self.semiring.label(c)).collect();
        format!("({})", parts.join(","))
    }

    /// Vector as an array of element labels.
    pub fn labels_of(&self, x: VecId) -> Vec<String> {
        self.coords(x).iter().map(|&c| self.semiring.label(c).to_string()).collect()
    }

    pub fn id_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Option<VecId> {
        if labels.len() != self.rank {
            return None;
        }
        let coords: Option<Vec<Elem>> = labels.iter().map(|l| self.semiring.element(l.as_ref())).collect();
        Some(self.encode(coords?.into_iter()))
    }
}

/// Smallest subsemimodule containing the given vectors.
pub fn closure(m: &Arc<FreeSemimodule>, generators: impl IntoIterator<Item = VecId>) -> Subsemimodule {
    let mut set = BitSet::new(m.len());
    let mut members = Vec::new();
    let mut queue = vec![m.zero_id()];
    queue.extend(generators);
    while let Some(x) = queue.pop() {
        if !set.insert(x) {
            continue;
        }
        for a in m.semiring().elements() {
            let y = m.scale_id(a, x);
            if !set.contains(y) {
                queue.push(y);
            }
        }
        members.push(x);
        for &y in &members {
            let z = m.add_ids(x, y);
            if !set.contains(z) {
                queue.push(z);
            }
        }
    }
    Subsemimodule::from_bits(m.clone(), set)
}
