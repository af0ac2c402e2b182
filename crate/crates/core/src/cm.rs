//! Cohen–Macaulay tests via Reisner's criterion, q-CM subset sweeps and
//! homology-sphere recognition, each failure carrying a witness.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::face::{k_subsets, Face};
use crate::homology::{homology, Coefficients, HomologyProfile};

/// Why a complex fails a CM-type test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CmWitness {
    /// `H̃_degree(lk face) ≠ 0` with `degree < d - |face| - 1`.
    LinkHomology { face: Face, degree: isize },
    /// `H̃_degree(lk face)` is not the coefficient ring, `degree` the top.
    TopLink { face: Face, degree: isize },
    /// Deleting `removed` lowers the dimension to `dim`.
    DimensionDrop { removed: Face, dim: isize },
    /// Deleting `removed` leaves a complex that is not CM.
    Deletion { removed: Face, inner: Box<CmWitness> },
}

impl CmWitness {
    /// Re-verifies the failure against `c` from scratch.
    pub fn recheck(&self, c: &SimplicialComplex, coeff: Coefficients) -> bool {
        let d = c.d() as isize;
        match self {
            CmWitness::LinkHomology { face, degree } => {
                let top = d - face.len() as isize - 1;
                *degree < top
                    && c.link(*face)
                        .is_ok_and(|lk| !homology(&lk, coeff).vanishes_at(*degree))
            }
            CmWitness::TopLink { face, degree } => {
                *degree == d - face.len() as isize - 1
                    && c.link(*face)
                        .is_ok_and(|lk| !homology(&lk, coeff).is_coefficient_ring_at(*degree))
            }
            CmWitness::DimensionDrop { removed, dim } => {
                let r = c.restriction(*removed);
                r.dim() == *dim && *dim != c.dim()
            }
            CmWitness::Deletion { removed, inner } => {
                let r = c.restriction(*removed);
                r.dim() == c.dim() && inner.recheck(&r, coeff)
            }
        }
    }
}

impl fmt::Display for CmWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmWitness::LinkHomology { face, degree } => {
                write!(f, "link of {face} has nonzero reduced homology in degree {degree}")
            }
            CmWitness::TopLink { face, degree } => {
                write!(f, "link of {face} has top homology (degree {degree}) not isomorphic to the coefficients")
            }
            CmWitness::DimensionDrop { removed, dim } => {
                write!(f, "deleting {removed} drops the dimension to {dim}")
            }
            CmWitness::Deletion { removed, inner } => write!(f, "deleting {removed}: {inner}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub verdict: bool,
    pub witness: Option<CmWitness>,
    pub coeff: Coefficients,
}

impl CmReport {
    fn from_witness(witness: Option<CmWitness>, coeff: Coefficients) -> Self {
        CmReport {
            verdict: witness.is_none(),
            witness,
            coeff,
        }
    }
}

/// Homology of links, keyed by the facets of the link.
#[derive(Default)]
struct LinkCache(Mutex<HashMap<Vec<Face>, HomologyProfile>>);

impl LinkCache {
    fn homology(&self, lk: &SimplicialComplex, coeff: Coefficients) -> HomologyProfile {
        if let Some(h) = self.0.lock().unwrap().get(lk.facets()) {
            return h.clone();
        }
        let h = homology(lk, coeff);
        self.0
            .lock()
            .unwrap()
            .insert(lk.facets().to_vec(), h.clone());
        h
    }
}

/// First failing face in canonical order (size, then lexicographic).
fn reisner(
    c: &SimplicialComplex,
    coeff: Coefficients,
    sphere: bool,
    cache: &LinkCache,
) -> Option<CmWitness> {
    let d = c.d() as isize;
    let faces: Vec<Face> = c.faces().collect();
    faces.par_iter().find_map_first(|&face| {
        let top = d - face.len() as isize - 1;
        if top < 0 && !sphere {
            return None;
        }
        let lk = c.link(face).expect("face of the complex");
        let h = cache.homology(&lk, coeff);
        if let Some(degree) = (-1..top).find(|&j| !h.vanishes_at(j)) {
            return Some(CmWitness::LinkHomology { face, degree });
        }
        if sphere && !h.is_coefficient_ring_at(top) {
            return Some(CmWitness::TopLink { face, degree: top });
        }
        None
    })
}

/// Reisner's criterion over all faces, `∅` included.
pub fn is_cm(c: &SimplicialComplex, coeff: Coefficients) -> CmReport {
    CmReport::from_witness(reisner(c, coeff, false, &LinkCache::default()), coeff)
}

/// CM and every link has top homology isomorphic to the coefficients.
pub fn is_homology_sphere(c: &SimplicialComplex, coeff: Coefficients) -> CmReport {
    CmReport::from_witness(reisner(c, coeff, true, &LinkCache::default()), coeff)
}

fn deletion_failure(
    c: &SimplicialComplex,
    removed: Face,
    coeff: Coefficients,
    cache: &LinkCache,
) -> Option<CmWitness> {
    let r = c.restriction(removed);
    if r.dim() != c.dim() {
        return Some(CmWitness::DimensionDrop {
            removed,
            dim: r.dim(),
        });
    }
    let inner = reisner(&r, coeff, false, cache)?;
    Some(if removed.is_empty() {
        inner
    } else {
        CmWitness::Deletion {
            removed,
            inner: Box::new(inner),
        }
    })
}

/// Smallest `s < limit` such that some `s`-set of vertices breaks CM, with
/// the first such set in (size, lexicographic) order.
fn first_failing_size(
    c: &SimplicialComplex,
    limit: usize,
    coeff: Coefficients,
) -> Option<(usize, CmWitness)> {
    let cache = LinkCache::default();
    let n = c.num_vertices();
    for s in 0..limit.min(n + 1) {
        let found = k_subsets(c.vertices(), s)
            .par_iter()
            .find_map_first(|&w| deletion_failure(c, w, coeff, &cache));
        if let Some(w) = found {
            return Some((s, w));
        }
    }
    None
}

/// `q`-CM: every deletion of at most `q - 1` vertices is CM of the same
/// dimension. Subsets are swept by size then lexicographically and the
/// first failure is the witness, so no superset of a failing set is
/// examined. `q = 0` is vacuous.
pub fn is_qcm(c: &SimplicialComplex, q: usize, coeff: Coefficients) -> CmReport {
    let found = first_failing_size(c, q, coeff).map(|(_, w)| w);
    CmReport::from_witness(found, coeff)
}

/// Largest `q <= cap` for which `c` is `q`-CM (0 if not CM).
pub fn max_cm_connectivity(c: &SimplicialComplex, coeff: Coefficients, cap: usize) -> usize {
    cm_connectivity(c, coeff, cap).0
}

/// [`max_cm_connectivity`] together with the witness that stops it below
/// `cap`, if any.
pub fn cm_connectivity(c: &SimplicialComplex, coeff: Coefficients, cap: usize) -> (usize, Option<CmWitness>) {
    match first_failing_size(c, cap, coeff) {
        Some((s, w)) => (s, Some(w)),
        None => (cap, None),
    }
}
