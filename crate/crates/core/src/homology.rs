//! Reduced simplicial homology with exact coefficients.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{self, EliminationDomain, FractionFree, PrimeField, SparseRow};

/// Coefficient domain for homology and everything built on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coefficients {
    #[default]
    Rationals,
    PrimeField(PrimeField),
    Integers,
}

impl Coefficients {
    pub fn gf(p: u64) -> Result<Self> {
        PrimeField::new(p)
            .map(Coefficients::PrimeField)
            .ok_or(Error::NotPrime(p))
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Rationals => write!(f, "q"),
            Coefficients::PrimeField(p) => write!(f, "gf:{}", p.modulus()),
            Coefficients::Integers => write!(f, "z"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = Error;

    /// Accepts `q`, `z` and `gf:p`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(Coefficients::Rationals),
            "z" => Ok(Coefficients::Integers),
            other => {
                let p = other
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown coefficient spec {s:?}")))?;
                Coefficients::gf(p)
            }
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `∂_j`: rows indexed by the `(j-1)`-faces, columns by the `j`-faces, both
/// in canonical order. Deleting the vertex in position `k` of a sorted face
/// contributes `(-1)^k`. For `j = 0` the single row is the empty face.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub j: isize,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    /// Column `c` as sparse `(row, coefficient)` pairs.
    pub columns: Vec<SparseRow<i64>>,
}

impl BoundaryMatrix {
    pub fn new(c: &SimplicialComplex, j: isize) -> Result<Self> {
        if j < 0 || j > c.dim() {
            return Err(Error::OutOfRange(format!(
                "boundary index {j} outside 0..={}",
                c.dim()
            )));
        }
        let rows = c.faces_of_dim(j - 1).to_vec();
        let cols = c.faces_of_dim(j).to_vec();
        let index: HashMap<Face, usize> = rows.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        let columns = cols
            .iter()
            .map(|face| {
                let mut col: Vec<(usize, i64)> = face
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (index[&face.without(v)], sign)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        Ok(BoundaryMatrix {
            j,
            rows,
            cols,
            columns,
        })
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map_or(0, |(_, v)| *v)
    }

    /// `self ∘ upper`, i.e. `∂_j ∘ ∂_{j+1}` for `self = ∂_j`, as a map from
    /// column index of `upper` to the nonzero entries of the product column.
    pub fn compose(&self, upper: &BoundaryMatrix) -> Vec<SparseRow<i64>> {
        assert_eq!(upper.j, self.j + 1, "boundaries are not adjacent");
        upper
            .columns
            .iter()
            .map(|col| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for (mid, a) in col {
                    for (r, b) in &self.columns[*mid] {
                        *acc.entry(*r).or_default() += a * b;
                    }
                }
                let mut out: Vec<(usize, i64)> = acc.into_iter().filter(|(_, v)| *v != 0).collect();
                out.sort_unstable();
                out
            })
            .collect()
    }

    fn rank_in<D: EliminationDomain>(&self, dom: &D) -> usize {
        linalg::rank(dom, self.columns.iter().map(|c| linalg::lift_row(dom, c)).collect())
    }

    pub fn rank(&self, coeff: Coefficients) -> usize {
        match coeff {
            Coefficients::Rationals | Coefficients::Integers => {
                self.rank_in(&FractionFree::<BigInt>::new())
            }
            Coefficients::PrimeField(p) => self.rank_in(&p),
        }
    }
}

/// Reduced Betti numbers `β̃_{-1}, ..., β̃_{d-1}` and, over ℤ, the torsion
/// invariant factors of each `H̃_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub coeff: Coefficients,
    /// Entry `k` is `β̃_{k-1}`.
    pub betti: Vec<usize>,
    /// Entry `k` lists the invariant factors `> 1` of `H̃_{k-1}`; always
    /// empty over a field.
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn betti_at(&self, j: isize) -> usize {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.betti.get(k).copied())
            .unwrap_or(0)
    }

    pub fn torsion_at(&self, j: isize) -> &[BigInt] {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.torsion.get(k))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// `H̃_j = 0` (no free part and no torsion).
    pub fn vanishes_at(&self, j: isize) -> bool {
        self.betti_at(j) == 0 && self.torsion_at(j).is_empty()
    }

    /// `H̃_j ≅ k`: rank one, no torsion.
    pub fn is_coefficient_ring_at(&self, j: isize) -> bool {
        self.betti_at(j) == 1 && self.torsion_at(j).is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let torsion: Vec<Vec<serde_json::Value>> = self
            .torsion
            .iter()
            .map(|t| {
                t.iter()
                    .map(|x| match x.to_u64() {
                        Some(v) => serde_json::Value::from(v),
                        None => serde_json::Value::from(x.to_string()),
                    })
                    .collect()
            })
            .collect();
        let mut st = s.serialize_struct("HomologyProfile", 3)?;
        st.serialize_field("coeff", &self.coeff)?;
        st.serialize_field("betti", &self.betti)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

fn boundaries(c: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    (0..=c.dim())
        .map(|j| BoundaryMatrix::new(c, j).expect("index within dimension"))
        .collect()
}

fn assemble(c: &SimplicialComplex, coeff: Coefficients, ranks: &[usize], torsion: Vec<Vec<BigInt>>) -> HomologyProfile {
    // ranks[j] = rank ∂_j for j = 0..=dim; β̃_j = f_j - rank ∂_j - rank ∂_{j+1}
    let f = c.f_vector();
    let rank_of = |j: isize| -> usize {
        usize::try_from(j)
            .ok()
            .and_then(|k| ranks.get(k).copied())
            .unwrap_or(0)
    };
    let betti = (0..f.entries().len())
        .map(|k| {
            let j = k as isize - 1;
            f.get(j) as usize - rank_of(j) - rank_of(j + 1)
        })
        .collect();
    HomologyProfile {
        coeff,
        betti,
        torsion,
    }
}

/// Reduced Betti numbers over `coeff`. Over ℤ this is
/// [`integer_homology`].
pub fn betti(c: &SimplicialComplex, coeff: Coefficients) -> HomologyProfile {
    if coeff == Coefficients::Integers {
        return integer_homology(c);
    }
    let ranks: Vec<usize> = boundaries(c).iter().map(|b| b.rank(coeff)).collect();
    let torsion = vec![Vec::new(); c.f_vector().entries().len()];
    assemble(c, coeff, &ranks, torsion)
}

/// Integer homology from the Smith normal form of every boundary matrix.
pub fn integer_homology(c: &SimplicialComplex) -> HomologyProfile {
    let forms: Vec<linalg::SmithForm<BigInt>> = boundaries(c)
        .iter()
        .map(|b| linalg::smith_normal_form::<BigInt>(&b.columns, b.rows.len()))
        .collect();
    let ranks: Vec<usize> = forms.iter().map(|s| s.rank).collect();
    let len = c.f_vector().entries().len();
    // torsion of H̃_{j-1} comes from ∂_j
    let torsion = (0..len)
        .map(|k| forms.get(k).map(|s| s.torsion()).unwrap_or_default())
        .collect();
    assemble(c, Coefficients::Integers, &ranks, torsion)
}

/// Full profile in the requested coefficients.
pub fn homology(c: &SimplicialComplex, coeff: Coefficients) -> HomologyProfile {
    betti(c, coeff)
}

/// `H̃_{d-1}(C; k) ≠ 0`. Top homology is a kernel, hence free over ℤ, so
/// over ℤ this is the rational test.
pub fn top_homology_nonvanishing(c: &SimplicialComplex, coeff: Coefficients) -> bool {
    if c.is_void() {
        return false;
    }
    let top = c.dim();
    if top < 0 {
        // {∅}: H̃_{-1} = k
        return true;
    }
    let coeff = match coeff {
        Coefficients::Integers => Coefficients::Rationals,
        other => other,
    };
    let b = BoundaryMatrix::new(c, top).expect("top boundary exists");
    b.cols.len() > b.rank(coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_labels(&facets.iter().map(|x| x.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn triangle() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3], &[1, 3]])
    }

    #[test]
    fn parse_coefficients() {
        assert_eq!("q".parse::<Coefficients>().unwrap(), Coefficients::Rationals);
        assert_eq!("Z".parse::<Coefficients>().unwrap(), Coefficients::Integers);
        assert_eq!("gf:3".parse::<Coefficients>().unwrap().to_string(), "gf:3");
        assert_eq!("gf:4".parse::<Coefficients>(), Err(Error::NotPrime(4)));
        assert!("r".parse::<Coefficients>().is_err());
    }

    #[test]
    fn triangle_boundary() {
        let c = triangle();
        let d1 = BoundaryMatrix::new(&c, 1).unwrap();
        assert_eq!((d1.rows.len(), d1.cols.len()), (3, 3));
        for col in &d1.columns {
            assert_eq!(col.iter().map(|(_, v)| v).sum::<i64>(), 0);
        }
        let d0 = BoundaryMatrix::new(&c, 0).unwrap();
        assert_eq!(d0.rows, vec![Face::EMPTY]);
        assert!(d0.columns.iter().all(|col| col == &vec![(0, 1)]));
        assert!(d0.compose(&d1).iter().all(Vec::is_empty));
        assert!(BoundaryMatrix::new(&c, 2).is_err());
    }

    #[test]
    fn small_profiles() {
        let c = triangle();
        assert_eq!(betti(&c, Coefficients::Rationals).betti, vec![0, 0, 1]);
        let pts = cx(&[&[1], &[2]]);
        assert_eq!(betti(&pts, Coefficients::Rationals).betti, vec![0, 1]);
        let e = SimplicialComplex::empty();
        assert_eq!(betti(&e, Coefficients::Rationals).betti, vec![1]);
        assert!(top_homology_nonvanishing(&e, Coefficients::Rationals));
        let v = SimplicialComplex::void();
        assert!(betti(&v, Coefficients::Rationals).betti.is_empty());
        assert!(!top_homology_nonvanishing(&v, Coefficients::Rationals));
    }

    #[test]
    fn cones_are_acyclic() {
        let cone = cx(&[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]]);
        let h = integer_homology(&cone);
        assert!(h.betti.iter().all(|&b| b == 0));
        assert!(!top_homology_nonvanishing(&cone, Coefficients::Integers));
    }
}
