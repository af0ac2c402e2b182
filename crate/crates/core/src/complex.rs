//! Finite abstract simplicial complexes stored by their facets.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::face::{Face, Vertex};
use crate::numbers::{FVector, HProfile};

/// A simplicial complex given by an antichain of facets.
///
/// Two degenerate complexes are kept apart: the *void* complex has no faces
/// at all (no facets), while the *empty* complex `{∅}` has the single facet
/// `∅`. Only the latter has `f_{-1} = 1` and `H̃_{-1} ≠ 0`.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Face,
    facets: Vec<Face>,
    faces: OnceLock<Vec<Vec<Face>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.facets.iter()).finish()
    }
}

impl SimplicialComplex {
    /// Reduces `facets` to an antichain in canonical (lexicographic) order.
    pub fn from_facets<I: IntoIterator<Item = Face>>(facets: I) -> Self {
        let mut raw: Vec<Face> = facets.into_iter().collect();
        raw.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        raw.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(raw.len());
        for f in raw {
            if !kept.iter().any(|g| f.is_subset(*g)) {
                kept.push(f);
            }
        }
        kept.sort();
        let vertices = kept.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex {
            vertices,
            facets: kept,
            faces: OnceLock::new(),
        }
    }

    /// Parses facet lists of 1-based labels, enforcing the vertex cap.
    pub fn from_labels_capped(facets: &[Vec<Vertex>], cap: u32) -> Result<Self> {
        let faces = facets
            .iter()
            .map(|f| Face::from_labels_capped(f, cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_facets(faces))
    }

    pub fn from_labels(facets: &[Vec<Vertex>]) -> Result<Self> {
        Self::from_labels_capped(facets, crate::face::MAX_VERTICES)
    }

    /// The complex with no faces.
    pub fn void() -> Self {
        Self::from_facets(std::iter::empty())
    }

    /// `{∅}`.
    pub fn empty() -> Self {
        Self::from_facets([Face::EMPTY])
    }

    /// The full simplex on `face` together with all its faces.
    pub fn simplex(face: Face) -> Self {
        Self::from_facets([face])
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; -1 for both `{∅}` and the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// `d = dim + 1`.
    pub fn d(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|g| face.is_subset(*g))
    }

    pub fn is_facet(&self, face: Face) -> bool {
        self.facets.binary_search(&face).is_ok()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(*f))
    }

    /// All faces grouped by cardinality: entry `k` lists the faces with `k`
    /// vertices in lexicographic order.
    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        self.faces.get_or_init(|| {
            let top = self.facets.iter().map(|f| f.len()).max();
            let Some(top) = top else {
                return Vec::new();
            };
            let mut seen: Vec<HashSet<u128>> = vec![HashSet::new(); top + 1];
            for facet in &self.facets {
                for sub in facet.subsets() {
                    seen[sub.len()].insert(sub.bits());
                }
            }
            seen.into_iter()
                .map(|set| {
                    let mut v: Vec<Face> = set.into_iter().map(Face::from_bits).collect();
                    v.sort();
                    v
                })
                .collect()
        })
    }

    /// Faces of dimension `j`.
    pub fn faces_of_dim(&self, j: isize) -> &[Face] {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.faces_by_size().get(k))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Every face, by increasing dimension then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces_by_size().iter().flatten().copied()
    }

    pub fn edges(&self) -> &[Face] {
        self.faces_of_dim(1)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_size().iter().map(|v| v.len() as i64).collect())
    }

    pub fn h_profile(&self) -> HProfile {
        HProfile::from_f(self.f_vector())
    }

    fn require_face(&self, face: Face) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(Error::NotAFace(face))
        }
    }

    /// `lk F = {G : F ∪ G ∈ C, F ∩ G = ∅}`.
    pub fn link(&self, face: Face) -> Result<Self> {
        self.require_face(face)?;
        Ok(Self::from_facets(
            self.facets
                .iter()
                .filter(|g| face.is_subset(**g))
                .map(|g| g.difference(face)),
        ))
    }

    /// `st F = {G : F ∪ G ∈ C}`.
    pub fn star(&self, face: Face) -> Result<Self> {
        self.require_face(face)?;
        Ok(Self::from_facets(
            self.facets.iter().filter(|g| face.is_subset(**g)).copied(),
        ))
    }

    /// Faces not containing `F`. The antistar of `∅` is the void complex.
    pub fn antistar(&self, face: Face) -> Result<Self> {
        self.require_face(face)?;
        let mut out = Vec::new();
        for &g in &self.facets {
            if face.is_subset(g) {
                out.extend(face.iter().map(|v| g.without(v)));
            } else {
                out.push(g);
            }
        }
        Ok(Self::from_facets(out))
    }

    /// `C_{-W}`: faces disjoint from `W`.
    pub fn restriction(&self, removed: Face) -> Self {
        Self::from_facets(self.facets.iter().map(|g| g.difference(removed)))
    }

    /// The induced subcomplex on `keep`, i.e. the restriction removing the
    /// complement of `keep`.
    pub fn induced(&self, keep: Face) -> Self {
        self.restriction(self.vertices.difference(keep))
    }

    /// Faces of dimension at most `l`.
    pub fn skeleton(&self, l: isize) -> Result<Self> {
        if l < 0 || l > self.dim() {
            return Err(Error::OutOfRange(format!(
                "skeleton level {l} outside 0..={}",
                self.dim()
            )));
        }
        let mut out: Vec<Face> = self.faces_of_dim(l).to_vec();
        out.extend(self.facets.iter().filter(|f| f.dim() < l));
        Ok(Self::from_facets(out))
    }

    /// Minimal non-faces on the vertex set, sorted by size then
    /// lexicographically. A candidate with `k + 1` vertices is formed only
    /// from a `k`-face and tested only if all its `k`-subsets are faces.
    pub fn missing_faces(&self) -> Vec<Face> {
        let by_size = self.faces_by_size();
        let sets: Vec<HashSet<u128>> = by_size
            .iter()
            .map(|v| v.iter().map(|f| f.bits()).collect())
            .collect();
        let is_face = |f: Face| sets.get(f.len()).is_some_and(|s| s.contains(&f.bits()));
        let mut missing = Vec::new();
        for k in 1..by_size.len() {
            for &a in &by_size[k] {
                let top = a.max_vertex().unwrap_or(0);
                for v in self.vertices.iter().filter(|&v| v > top) {
                    let cand = a.with(v);
                    if is_face(cand) {
                        continue;
                    }
                    if cand.iter().all(|u| is_face(cand.without(u))) {
                        missing.push(cand);
                    }
                }
            }
        }
        missing.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        missing
    }

    /// Largest dimension of a missing face; `None` for a simplex.
    pub fn max_missing_dim(&self) -> Option<isize> {
        self.missing_faces().iter().map(|f| f.dim()).max()
    }

    pub fn is_flag(&self) -> bool {
        self.max_missing_dim().is_none_or(|d| d <= 1)
    }

    /// Renames vertices through `map`, which must be injective on the
    /// vertex set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Self {
        Self::from_facets(self.facets.iter().map(|f| f.iter().map(&map).collect()))
    }

    pub fn max_label(&self) -> Vertex {
        self.vertices.max_vertex().unwrap_or(0)
    }

    /// Facets as label lists, canonical order.
    pub fn facet_labels(&self) -> Vec<Vec<Vertex>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::from_labels(v).unwrap()
    }

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_labels(&facets.iter().map(|x| x.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_labels(&facets).unwrap()
    }

    #[test]
    fn dedup_and_absorption() {
        let c = cx(&[&[1, 2], &[2, 3], &[1, 2]]);
        assert_eq!(c.facet_labels(), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(c.vertices(), f(&[1, 2, 3]));
        let c = cx(&[&[1, 2, 3], &[1, 2]]);
        assert_eq!(c.facet_labels(), vec![vec![1, 2, 3]]);
        let c = cx(&[&[1], &[2]]);
        assert_eq!(c.f_vector().entries(), &[1, 2]);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn void_and_empty_differ() {
        let v = SimplicialComplex::void();
        let e = SimplicialComplex::empty();
        assert_ne!(v, e);
        assert!(v.f_vector().entries().is_empty());
        assert_eq!(e.f_vector().entries(), &[1]);
        assert_eq!(e.h_profile().h, vec![1]);
        assert!(e.missing_faces().is_empty());
    }

    #[test]
    fn octahedron_counts() {
        let o = octahedron();
        assert_eq!(o.f_vector().entries(), &[1, 6, 12, 8]);
        assert_eq!(o.h_profile().h, vec![1, 3, 3, 1]);
        assert_eq!(o.missing_faces(), vec![f(&[1, 2]), f(&[3, 4]), f(&[5, 6])]);
        assert!(o.is_flag());
        assert_eq!(o.max_missing_dim(), Some(1));
    }

    #[test]
    fn links() {
        let o = octahedron();
        let lk = o.link(f(&[1])).unwrap();
        assert_eq!(
            lk.facet_labels(),
            vec![vec![3, 5], vec![3, 6], vec![4, 5], vec![4, 6]]
        );
        assert_eq!(o.link(Face::EMPTY).unwrap(), o);
        assert_eq!(o.link(f(&[1, 2])), Err(Error::NotAFace(f(&[1, 2]))));

        let tet = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let lk = tet.link(f(&[1, 2])).unwrap();
        assert_eq!(lk.facet_labels(), vec![vec![3], vec![4]]);
    }

    #[test]
    fn antistar_and_star() {
        let o = octahedron();
        let a = o.antistar(f(&[1])).unwrap();
        assert_eq!(a.vertices(), f(&[2, 3, 4, 5, 6]));
        assert_eq!(a.h_profile().h, vec![1, 2, 1, 0]);
        assert!(a.facets().iter().all(|g| g.contains(2)));
        assert_eq!(o.star(Face::EMPTY).unwrap(), o);
        assert!(o.antistar(Face::EMPTY).unwrap().is_void());
        // antistar of an edge keeps both endpoints
        let a = o.antistar(f(&[1, 3])).unwrap();
        assert_eq!(a.vertices(), o.vertices());
        assert_eq!(a.f_vector().entries(), &[1, 6, 11, 6]);
    }

    #[test]
    fn restriction_by_antipodal_pair_is_square() {
        let o = octahedron();
        let r = o.restriction(f(&[5, 6]));
        assert_eq!(
            r.facet_labels(),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert_eq!(o.restriction(o.vertices()), SimplicialComplex::empty());
    }

    #[test]
    fn skeleta() {
        let o = octahedron();
        let s = o.skeleton(1).unwrap();
        assert_eq!(s.facets().len(), 12);
        assert_eq!(o.skeleton(2).unwrap(), o);
        assert!(o.skeleton(3).is_err());
        assert!(o.skeleton(-1).is_err());
        // non-pure: an isolated vertex survives as a facet
        let c = cx(&[&[1, 2, 3], &[4]]);
        assert_eq!(c.skeleton(1).unwrap().facet_labels(), vec![
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![4]
        ]);
    }

    #[test]
    fn missing_faces_of_tetrahedron_boundary() {
        let tet = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(tet.missing_faces(), vec![f(&[1, 2, 3, 4])]);
        assert_eq!(tet.max_missing_dim(), Some(3));
        assert!(!tet.is_flag());
        assert_eq!(SimplicialComplex::simplex(f(&[1, 2, 3])).max_missing_dim(), None);
    }

    #[test]
    fn non_consecutive_labels() {
        let c = cx(&[&[3, 10], &[10, 40]]);
        assert_eq!(c.missing_faces(), vec![f(&[3, 40])]);
        assert_eq!(c.max_label(), 40);
    }
}
