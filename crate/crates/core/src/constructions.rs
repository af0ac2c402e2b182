//! Builders for the named complexes: simplex and cross-polytope boundaries,
//! cycles, joins, connected sums, the spheres `S(i, d-1)` and
//! `S(1, d-1, n)`, stacked and cross-polytopal stacked spheres, plus the
//! closed-form lower-bound function ψ.
//!
//! Dimension parameters follow the convention `d = dim + 1` throughout, so
//! `stacked_sphere(n, d)` is the `(d-1)`-sphere on `n` vertices.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::balanced::{ColoredComplex, Coloring};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face, Vertex, MAX_VERTICES};
use crate::numbers::binomial;

/// `d = q·i + r` with `1 <= r <= i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SphereParams {
    pub i: usize,
    pub d: usize,
    pub q: usize,
    pub r: usize,
}

impl SphereParams {
    pub fn new(i: usize, d: usize) -> Result<Self> {
        if i == 0 || d == 0 {
            return Err(Error::OutOfRange(format!("need i >= 1 and d >= 1, got i={i}, d={d}")));
        }
        let q = (d - 1) / i;
        Ok(SphereParams { i, d, q, r: d - q * i })
    }

    pub fn divides(&self) -> bool {
        self.r == self.i
    }
}

/// Facets to identify and the vertex bijection between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueSpec {
    pub facet_a: Face,
    pub facet_b: Face,
    /// `(vertex of facet_a, vertex of facet_b)`.
    pub bijection: Vec<(Vertex, Vertex)>,
}

impl GlueSpec {
    /// Lexicographically least facet of each side, matched in sorted order.
    pub fn default_for(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Self> {
        let (Some(&fa), Some(&fb)) = (a.facets().first(), b.facets().first()) else {
            return Err(Error::InvalidGlue("void complex".into()));
        };
        Ok(Self::order_preserving(fa, fb))
    }

    pub fn order_preserving(facet_a: Face, facet_b: Face) -> Self {
        GlueSpec {
            facet_a,
            facet_b,
            bijection: facet_a.iter().zip(facet_b.iter()).collect(),
        }
    }
}

fn check_labels(max: u64) -> Result<()> {
    if max > MAX_VERTICES as u64 {
        return Err(Error::VertexCap {
            label: max.min(u32::MAX as u64) as u32,
            cap: MAX_VERTICES,
        });
    }
    Ok(())
}

/// `∂σ^d` on vertices `1..=d+1`. `∂σ^0` is `{∅}`.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    check_labels(d as u64 + 1)?;
    let ground = Face::range(d as u32 + 1);
    Ok(SimplicialComplex::from_facets(k_subsets(ground, d)))
}

/// Boundary of the d-dimensional cross-polytope with its canonical
/// coloring: antipodal pair `{2k-1, 2k}` gets color `k`.
pub fn colored_cross_polytope(d: usize) -> Result<ColoredComplex> {
    if d == 0 {
        return Err(Error::OutOfRange("cross-polytope needs d >= 1".into()));
    }
    check_labels(2 * d as u64)?;
    let mut acc = SimplicialComplex::empty();
    let pair = simplex_boundary(1)?;
    for _ in 0..d {
        acc = join(&acc, &pair)?;
    }
    let colors = (1..=2 * d as Vertex).map(|v| (v, v.div_ceil(2))).collect();
    Ok(ColoredComplex {
        complex: acc,
        coloring: Coloring::new(colors),
    })
}

pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    Ok(colored_cross_polytope(d)?.complex)
}

/// The cycle `C_k` on `1..=k`.
pub fn cycle(k: usize) -> Result<SimplicialComplex> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("cycle needs k >= 3, got {k}")));
    }
    check_labels(k as u64)?;
    let k = k as Vertex;
    Ok(SimplicialComplex::from_facets(
        (1..=k).map(|v| Face::from_iter([v, v % k + 1])),
    ))
}

/// `A ∗ B`, with `B` shifted past the largest label of `A`.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    let offset = a.max_label();
    check_labels(offset as u64 + b.max_label() as u64)?;
    let shifted = b.relabel(|v| v + offset);
    Ok(SimplicialComplex::from_facets(
        a.facets()
            .iter()
            .flat_map(|fa| shifted.facets().iter().map(move |fb| fa.union(*fb))),
    ))
}

/// Cone over `C` with apex `max label + 1`.
pub fn cone(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    let point = SimplicialComplex::simplex(Face::from_iter([1]));
    join(c, &point)
}

fn validate_glue(a: &SimplicialComplex, b: &SimplicialComplex, glue: &GlueSpec) -> Result<()> {
    if !a.is_pure() || !b.is_pure() {
        return Err(Error::NotPure);
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    if !a.is_facet(glue.facet_a) {
        return Err(Error::NotAFacet(glue.facet_a));
    }
    if !b.is_facet(glue.facet_b) {
        return Err(Error::NotAFacet(glue.facet_b));
    }
    let dom: Face = glue.bijection.iter().map(|p| p.0).collect();
    let cod: Face = glue.bijection.iter().map(|p| p.1).collect();
    if dom != glue.facet_a
        || cod != glue.facet_b
        || glue.bijection.len() != glue.facet_a.len()
    {
        return Err(Error::InvalidGlue(
            "bijection must match the two facets vertex for vertex".into(),
        ));
    }
    Ok(())
}

/// Connected sum returning also where each vertex of `B` went.
fn connected_sum_mapped(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    glue: &GlueSpec,
) -> Result<(SimplicialComplex, HashMap<Vertex, Vertex>)> {
    validate_glue(a, b, glue)?;
    let mut map: HashMap<Vertex, Vertex> = glue.bijection.iter().map(|&(x, y)| (y, x)).collect();
    let mut next = a.max_label();
    for v in b.vertices().difference(glue.facet_b).iter() {
        next += 1;
        map.insert(v, next);
    }
    check_labels(next as u64)?;
    let facets = a
        .facets()
        .iter()
        .filter(|f| **f != glue.facet_a)
        .copied()
        .chain(
            b.facets()
                .iter()
                .filter(|f| **f != glue.facet_b)
                .map(|f| f.iter().map(|v| map[&v]).collect()),
        )
        // the glued facet goes, its boundary stays
        .chain(glue.facet_a.facets_of_boundary());
    Ok((SimplicialComplex::from_facets(facets), map))
}

/// `A #_ρ B`: identify the glue facets through `ρ`, then delete the
/// identified facet. `B`'s other vertices are renumbered past `A`'s labels
/// in ascending order. Without a glue spec the default one is used.
pub fn connected_sum(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    glue: Option<&GlueSpec>,
) -> Result<SimplicialComplex> {
    let default;
    let glue = match glue {
        Some(g) => g,
        None => {
            default = GlueSpec::default_for(a, b)?;
            &default
        }
    };
    Ok(connected_sum_mapped(a, b, glue)?.0)
}

/// Color-preserving connected sum: the bijection between the glue facets
/// is the unique one matching colors.
pub fn colored_connected_sum(
    a: &ColoredComplex,
    b: &ColoredComplex,
    facet_a: Face,
    facet_b: Face,
) -> Result<ColoredComplex> {
    let by_color: BTreeMap<u32, Vertex> = facet_b
        .iter()
        .map(|w| Ok((b.coloring.color(w).ok_or(Error::ImproperColoring(format!("vertex {w} uncolored")))?, w)))
        .collect::<Result<_>>()?;
    let bijection = facet_a
        .iter()
        .map(|v| {
            let c = a
                .coloring
                .color(v)
                .ok_or(Error::ImproperColoring(format!("vertex {v} uncolored")))?;
            by_color
                .get(&c)
                .map(|&w| (v, w))
                .ok_or_else(|| Error::InvalidGlue(format!("no vertex of color {c} in {facet_b}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let glue = GlueSpec {
        facet_a,
        facet_b,
        bijection,
    };
    let (complex, map) = connected_sum_mapped(&a.complex, &b.complex, &glue)?;
    let mut colors = a.coloring.as_map().clone();
    for (&old, &new) in &map {
        if let Some(c) = b.coloring.color(old) {
            colors.insert(new, c);
        }
    }
    Ok(ColoredComplex {
        complex,
        coloring: Coloring::new(colors),
    })
}

/// `S(i, d-1) = (∂σ^i)^{∗q} ∗ ∂σ^r`. For `d = 0` this is `{∅}`, the unit
/// of the join.
pub fn sphere_s(i: usize, d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        if i == 0 {
            return Err(Error::OutOfRange("need i >= 1".into()));
        }
        return Ok(SimplicialComplex::empty());
    }
    let p = SphereParams::new(i, d)?;
    check_labels((p.q * (p.i + 1) + p.r + 1) as u64)?;
    let block = simplex_boundary(p.i)?;
    let mut acc = SimplicialComplex::empty();
    for _ in 0..p.q {
        acc = join(&acc, &block)?;
    }
    join(&acc, &simplex_boundary(p.r)?)
}

/// The lexicographically greatest facet; after a connected sum it lies in
/// the copy added last, so gluing there chains copies linearly.
fn newest_facet(c: &SimplicialComplex) -> Face {
    *c.facets().last().expect("nonvoid complex")
}

/// `ST(n, d-1)`: connected sum of `n - d` copies of `∂σ^d`, chained
/// linearly.
pub fn stacked_sphere(n: usize, d: usize) -> Result<SimplicialComplex> {
    if d == 0 || n <= d {
        return Err(Error::OutOfRange(format!("stacked sphere needs n > d >= 1, got n={n}, d={d}")));
    }
    check_labels(n as u64)?;
    let block = simplex_boundary(d)?;
    let mut acc = block.clone();
    for _ in 1..n - d {
        let glue = GlueSpec::order_preserving(newest_facet(&acc), block.facets()[0]);
        acc = connected_sum(&acc, &block, Some(&glue))?;
    }
    Ok(acc)
}

/// `ST^×(n, d-1)`: color-preserving connected sum of `n/d - 1` copies of
/// the d-cross-polytope boundary, chained linearly.
pub fn stacked_cross_polytopal(n: usize, d: usize) -> Result<ColoredComplex> {
    if d == 0 || n % d != 0 || n < 2 * d {
        return Err(Error::OutOfRange(format!(
            "stacked cross-polytopal sphere needs d | n and n >= 2d, got n={n}, d={d}"
        )));
    }
    check_labels(n as u64)?;
    let block = colored_cross_polytope(d)?;
    let mut acc = block.clone();
    for _ in 1..n / d - 1 {
        let fa = newest_facet(&acc.complex);
        acc = colored_connected_sum(&acc, &block, fa, block.complex.facets()[0])?;
    }
    Ok(acc)
}

/// `S(1, d-1, n) = (∂σ^1)^{∗(d-2)} ∗ C_{n-2d+4}`.
pub fn sphere_s1n(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 2 || n < 2 * d {
        return Err(Error::OutOfRange(format!("S(1,d-1,n) needs d >= 2 and n >= 2d, got d={d}, n={n}")));
    }
    check_labels(n as u64)?;
    let pair = simplex_boundary(1)?;
    let mut acc = SimplicialComplex::empty();
    for _ in 0..d - 2 {
        acc = join(&acc, &pair)?;
    }
    join(&acc, &cycle(n - 2 * d + 4)?)
}

/// `ψ_{j-1}(n, d-1)`, defined for every `n`:
/// `(2^j - 1)·C(d-1, j-1)·(n-d) + d·C(d-1, j-1)` for `j < d` and
/// `(2^d - 2)(n-d) + 2d` for `j = d`.
pub fn psi(j: usize, n: usize, d: usize) -> Result<i64> {
    if j == 0 || j > d || j > 62 {
        return Err(Error::OutOfRange(format!("psi needs 1 <= j <= d, got j={j}, d={d}")));
    }
    let (n, d64) = (n as i64, d as i64);
    if j == d {
        return Ok(((1i64 << d) - 2) * (n - d64) + 2 * d64);
    }
    let c = binomial(d as u64 - 1, j as u64 - 1);
    Ok(((1i64 << j) - 1) * c * (n - d64) + d64 * c)
}

/// Order complex of the nonempty faces, colored by face size. Vertices are
/// numbered by (dimension, lexicographic) order of the faces they stand for.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> Result<ColoredComplex> {
    let faces: Vec<Face> = c.faces().filter(|f| !f.is_empty()).collect();
    check_labels(faces.len() as u64)?;
    let label: HashMap<Face, Vertex> = faces
        .iter()
        .enumerate()
        .map(|(k, f)| (*f, k as Vertex + 1))
        .collect();
    // maximal chains of each facet: one per ordering of its vertices
    let mut chains = Vec::new();
    for &facet in c.facets() {
        let verts = facet.to_vec();
        let mut perm: Vec<usize> = (0..verts.len()).collect();
        loop {
            let mut acc = Face::EMPTY;
            let mut chain = Face::EMPTY;
            for &k in &perm {
                acc = acc.with(verts[k]);
                chain = chain.with(label[&acc]);
            }
            chains.push(chain);
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    let colors = faces
        .iter()
        .map(|f| (label[f], f.len() as u32))
        .collect();
    Ok(ColoredComplex {
        complex: SimplicialComplex::from_facets(chains),
        coloring: Coloring::new(colors),
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The minimal 6-vertex triangulation of the real projective plane.
pub fn real_projective_plane() -> SimplicialComplex {
    let facets: [[Vertex; 3]; 10] = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ];
    SimplicialComplex::from_facets(facets.iter().map(|f| Face::from_iter(f.iter().copied())))
}

/// A named builder request, shared by the command line and suite catalogs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildSpec {
    /// One of `simplex-boundary`, `cross-polytope`, `cycle`, `S`,
    /// `stacked`, `stacked-cross`, `S1n`, `rp2`.
    pub build: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Replace the result by its barycentric subdivision.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub subdivide: bool,
    /// Cone over the result (after subdividing, if both are set).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cone: bool,
}

impl BuildSpec {
    pub fn new(build: &str) -> Self {
        BuildSpec {
            build: build.to_string(),
            i: None,
            d: None,
            n: None,
            k: None,
            subdivide: false,
            cone: false,
        }
    }

    pub fn with_i(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn subdivided(mut self) -> Self {
        self.subdivide = true;
        self
    }

    pub fn coned(mut self) -> Self {
        self.cone = true;
        self
    }

    fn need(&self, v: Option<usize>, name: &str) -> Result<usize> {
        v.ok_or_else(|| Error::Parse(format!("builder {:?} needs parameter {name}", self.build)))
    }

    /// Human-readable name such as `ST^x(12,2)`.
    pub fn display_name(&self) -> String {
        let d1 = |d: Option<usize>| d.map_or("?".into(), |d| (d as isize - 1).to_string());
        let opt = |v: Option<usize>| v.map_or("?".into(), |v| v.to_string());
        let base = match self.build.as_str() {
            "simplex-boundary" => format!("bd simplex^{}", opt(self.d)),
            "cross-polytope" => format!("bd cross-polytope^{}", opt(self.d)),
            "cycle" => format!("C_{}", opt(self.k)),
            "S" => format!("S({},{})", opt(self.i), d1(self.d)),
            "stacked" => format!("ST({},{})", opt(self.n), d1(self.d)),
            "stacked-cross" => format!("ST^x({},{})", opt(self.n), d1(self.d)),
            "S1n" => format!("S(1,{},{})", d1(self.d), opt(self.n)),
            other => other.to_string(),
        };
        let base = if self.subdivide { format!("sd {base}") } else { base };
        if self.cone {
            format!("cone {base}")
        } else {
            base
        }
    }

    /// Builds the complex, with its canonical coloring when it has one.
    pub fn construct(&self) -> Result<(SimplicialComplex, Option<Coloring>)> {
        let (mut c, mut col) = match self.build.as_str() {
            "simplex-boundary" => (simplex_boundary(self.need(self.d, "d")?)?, None),
            "cross-polytope" => {
                let cc = colored_cross_polytope(self.need(self.d, "d")?)?;
                (cc.complex, Some(cc.coloring))
            }
            "cycle" => (cycle(self.need(self.k, "k")?)?, None),
            "S" => (sphere_s(self.need(self.i, "i")?, self.need(self.d, "d")?)?, None),
            "stacked" => (stacked_sphere(self.need(self.n, "n")?, self.need(self.d, "d")?)?, None),
            "stacked-cross" => {
                let cc = stacked_cross_polytopal(self.need(self.n, "n")?, self.need(self.d, "d")?)?;
                (cc.complex, Some(cc.coloring))
            }
            "S1n" => (sphere_s1n(self.need(self.d, "d")?, self.need(self.n, "n")?)?, None),
            "rp2" => (real_projective_plane(), None),
            other => return Err(Error::Parse(format!("unknown builder {other:?}"))),
        };
        if self.subdivide {
            let sd = barycentric_subdivision(&c)?;
            c = sd.complex;
            col = Some(sd.coloring);
        }
        if self.cone {
            c = cone(&c)?;
            col = None;
        }
        Ok((c, col))
    }
}
