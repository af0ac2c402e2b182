//! Faces as fixed-width vertex bitsets.
//!
//! Vertex labels are 1-based (`1..=128`); label `k` lives in bit `k - 1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard upper bound on vertex labels; a face is one `u128`.
pub const MAX_VERTICES: u32 = 128;

/// A vertex label, 1-based.
pub type Vertex = u32;

/// A finite set of vertices.
///
/// Ordering is lexicographic on the ascending member lists, which is the
/// canonical order used for facets and witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn vertex(v: Vertex) -> Result<Self> {
        check_label(v, MAX_VERTICES)?;
        Ok(Face(1u128 << (v - 1)))
    }

    /// Builds a face from labels, rejecting duplicates and labels outside
    /// `1..=cap`.
    pub fn from_labels_capped(labels: &[Vertex], cap: u32) -> Result<Self> {
        let mut bits = 0u128;
        for &v in labels {
            check_label(v, cap)?;
            let bit = 1u128 << (v - 1);
            if bits & bit != 0 {
                return Err(Error::DuplicateVertex(v));
            }
            bits |= bit;
        }
        Ok(Face(bits))
    }

    pub fn from_labels(labels: &[Vertex]) -> Result<Self> {
        Self::from_labels_capped(labels, MAX_VERTICES)
    }

    /// The full simplex on `1..=n`.
    pub fn range(n: u32) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 128 {
            Face(u128::MAX)
        } else {
            Face((1u128 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u128 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: Vertex) -> Face {
        Face(self.0 | (1u128 << (v - 1)))
    }

    pub fn without(self, v: Vertex) -> Face {
        Face(self.0 & !(1u128 << (v - 1)))
    }

    pub fn min_vertex(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max_vertex(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros())
    }

    /// Members in ascending order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Every subset of this face, the empty set first and the face itself
    /// last, in increasing numeric bit order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// The faces obtained by deleting one vertex, in ascending order of the
    /// deleted vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.iter().map(move |v| self.without(v))
    }
}

fn check_label(v: Vertex, cap: u32) -> Result<()> {
    let cap = cap.min(MAX_VERTICES);
    if v == 0 || v > cap {
        return Err(Error::VertexCap { label: v, cap });
    }
    Ok(())
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<Vertex>::deserialize(d)?;
        Face::from_labels(&labels).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<Vertex> for Face {
    /// Panics on labels outside `1..=128`; use [`Face::from_labels`] for
    /// untrusted input.
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        iter.into_iter().fold(Face::EMPTY, |acc, v| {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex label {v} out of range");
            acc.with(v)
        })
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// Carry-rippler enumeration of all submasks.
pub struct Subsets {
    set: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = (succ != 0).then_some(succ);
        Some(Face(cur))
    }
}

/// All `k`-subsets of `ground`, in lexicographic order.
pub fn k_subsets(ground: Face, k: usize) -> Vec<Face> {
    let members = ground.to_vec();
    let mut out = Vec::new();
    if k > members.len() {
        return out;
    }
    let n = members.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| members[i]).collect());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return out;
        };
        idx[pos] += 1;
        for t in pos + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::from_labels(v).unwrap()
    }

    #[test]
    fn lexicographic_order() {
        let mut faces = vec![f(&[2, 3]), f(&[1, 3]), f(&[1, 2, 4]), f(&[1, 2]), f(&[])];
        faces.sort();
        assert_eq!(
            faces,
            vec![f(&[]), f(&[1, 2]), f(&[1, 2, 4]), f(&[1, 3]), f(&[2, 3])]
        );
    }

    #[test]
    fn label_bounds() {
        assert!(matches!(Face::from_labels(&[0]), Err(Error::VertexCap { .. })));
        assert!(matches!(Face::from_labels(&[129]), Err(Error::VertexCap { .. })));
        assert!(Face::from_labels(&[128]).is_ok());
        assert!(matches!(
            Face::from_labels_capped(&[10], 8),
            Err(Error::VertexCap { label: 10, cap: 8 })
        ));
        assert!(matches!(Face::from_labels(&[3, 3]), Err(Error::DuplicateVertex(3))));
    }

    #[test]
    fn subsets_cover_power_set() {
        let s: Vec<Face> = f(&[1, 3, 7]).subsets().collect();
        assert_eq!(s.len(), 8);
        assert_eq!(s[0], Face::EMPTY);
        assert_eq!(*s.last().unwrap(), f(&[1, 3, 7]));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn k_subsets_are_lexicographic() {
        let s = k_subsets(f(&[1, 2, 3, 4]), 2);
        assert_eq!(
            s,
            vec![f(&[1, 2]), f(&[1, 3]), f(&[1, 4]), f(&[2, 3]), f(&[2, 4]), f(&[3, 4])]
        );
        assert_eq!(k_subsets(f(&[1, 2]), 0), vec![Face::EMPTY]);
        assert!(k_subsets(f(&[1, 2]), 3).is_empty());
        assert_eq!(k_subsets(f(&[5, 9]), 2), vec![f(&[5, 9])]);
    }

    #[test]
    fn extremes() {
        let x = f(&[4, 9, 128]);
        assert_eq!(x.min_vertex(), Some(4));
        assert_eq!(x.max_vertex(), Some(128));
        assert_eq!(Face::EMPTY.max_vertex(), None);
        assert_eq!(Face::range(128).len(), 128);
        assert_eq!(x.to_string(), "{4,9,128}");
    }
}
