//! Claim checks on concrete complexes. Every check records its hypotheses,
//! evaluates the claim only when they hold, and lists each exact comparison
//! so that a failure names the coefficient at fault.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balanced::{
    check_balanced_lbt, check_rank_deletion_commutation, check_rank_selection_identity, find_coloring,
    Coloring,
};
use crate::cm::{cm_connectivity, is_cm, is_qcm};
use crate::complex::SimplicialComplex;
use crate::constructions::{
    connected_sum, sphere_s, stacked_cross_polytopal, BuildSpec, SphereParams,
};
use crate::error::{Error, Result};
use crate::face::{Face, Vertex};
use crate::homology::{top_homology_nonvanishing, Coefficients};
use crate::io::{ComplexFile, LoadedComplex};
use crate::iso::find_isomorphism;
use crate::numbers::{binomial, h_from_f};
use crate::polynomial::Polynomial;
use crate::report::{EqualityCase, Evidence, Relation, TheoremReport, Verdict};

/// Equality cases are checked by isomorphism search only up to this many
/// vertices.
pub const ISO_VERTEX_CAP: usize = 12;

pub const ISOMORPHIC: &str = "isomorphic to S(i,d-1)";
pub const CM_CONNECTIVITY: &str = "cm-connectivity of l-skeleton";

/// `f_j(C) >= f_j(S(i, d-1))` for every `j`, on complexes with no missing
/// face of dimension above `i` and nonvanishing top homology.
pub fn check_thm31_part1(c: &SimplicialComplex, i: usize, coeff: Coefficients) -> TheoremReport {
    lower_bound_by_s(c, i, coeff, false)
}

/// `h_j(C) >= h_j(S(i, d-1))` for every `j`, on 2-CM complexes with no
/// missing face of dimension above `i`. Also asserts `h >= 0`, `h_j >= 1`
/// and nonvanishing top homology, which every 2-CM complex satisfies.
pub fn check_thm31_part2(c: &SimplicialComplex, i: usize, coeff: Coefficients) -> TheoremReport {
    lower_bound_by_s(c, i, coeff, true)
}

fn lower_bound_by_s(c: &SimplicialComplex, i: usize, coeff: Coefficients, by_h: bool) -> TheoremReport {
    let claim = if by_h { "thm31-2" } else { "thm31-1" };
    let mut r = TheoremReport::new(claim, "");
    let d = c.d();
    let params_ok = r.hypothesis("i >= 1 and dim >= 0", i >= 1 && d >= 1);
    let missing_ok = r.hypothesis(
        format!("no missing face of dimension > {i}"),
        c.max_missing_dim().map_or(true, |m| m <= i as isize),
    );
    let main_ok = if by_h {
        let q = is_qcm(c, 2, coeff);
        if let Some(w) = q.witness {
            r.evidence.push(Evidence {
                label: "2-CM".into(),
                witness: w,
            });
        }
        r.hypothesis("2-CM", q.verdict)
    } else {
        r.hypothesis("nonvanishing top homology", top_homology_nonvanishing(c, coeff))
    };
    if !(params_ok && missing_ok && main_ok) {
        return r.finish();
    }
    let s = match sphere_s(i, d) {
        Ok(s) => s,
        Err(e) => {
            r.hypothesis(format!("S(i,d-1) constructible: {e}"), false);
            return r.finish();
        }
    };
    let p = SphereParams::new(i, d).expect("i, d >= 1");
    let triggered;
    if by_h {
        let h = c.h_profile();
        let hs = s.h_profile();
        for j in 0..=d {
            r.compare("h_j >= 0", j as i64, h.h_at(j), 0, Relation::AtLeast);
        }
        for j in 0..=d {
            r.compare("h_j >= 1", j as i64, h.h_at(j), 1, Relation::AtLeast);
        }
        let top = top_homology_nonvanishing(c, coeff) as i64;
        r.compare("top homology nonvanishing", d as i64 - 1, top, 1, Relation::Equal);
        for j in 0..=d {
            r.compare("h_j", j as i64, h.h_at(j), hs.h_at(j), Relation::AtLeast);
        }
        triggered = h.h_at(1) == hs.h_at(1) && (p.divides() || h.h_at(p.r + 1) == hs.h_at(p.r + 1));
    } else {
        let f = c.f_vector();
        let fs = s.f_vector();
        for j in 0..d as isize {
            r.compare("f_j", j as i64, f.get(j), fs.get(j), Relation::AtLeast);
        }
        let r_ = p.r as isize;
        triggered = f.get(0) == fs.get(0) && (p.divides() || f.get(r_) == fs.get(r_));
    }
    if p.divides() {
        r.note(format!(
            "i divides d: the equality trigger uses only {} (r = i)",
            if by_h { "h_1" } else { "f_0" }
        ));
    }
    r.equality = Some(equality_case(&mut r, c, &s, triggered, format!("S({i},{})", d - 1)));
    r.finish()
}

fn equality_case(
    r: &mut TheoremReport,
    c: &SimplicialComplex,
    s: &SimplicialComplex,
    triggered: bool,
    target: String,
) -> EqualityCase {
    let mut case = EqualityCase {
        target,
        triggered,
        isomorphic: None,
        isomorphism: None,
        note: None,
    };
    if !triggered {
        return case;
    }
    if c.num_vertices() > ISO_VERTEX_CAP {
        case.note = Some("equality trigger met, isomorphism unchecked".into());
        return case;
    }
    let iso = find_isomorphism(c, s);
    r.compare(ISOMORPHIC, 0, iso.is_some() as i64, 1, Relation::Equal);
    case.isomorphic = Some(iso.is_some());
    case.isomorphism = iso;
    case
}

fn ones(k: usize) -> Polynomial<i64> {
    Polynomial::all_ones(k)
}

/// `h(S(i,d-1)) <= h(∂σ^s)·h(S(i,d-1-s))` coefficientwise, both sides
/// taken from constructed complexes.
pub fn check_lemma32(i: usize, d: usize, s: usize) -> TheoremReport {
    let mut r = TheoremReport::new("lem32", format!("i={i} d={d} s={s}"));
    if !r.hypothesis("1 <= s <= i <= d", 1 <= s && s <= i && i <= d) {
        return r.finish();
    }
    let (big, small) = match (sphere_s(i, d), sphere_s(i, d - s)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            r.hypothesis(format!("spheres constructible: {e}"), false);
            return r.finish();
        }
    };
    let lhs = big.h_profile().h_polynomial();
    let rhs = &ones(s) * &small.h_profile().h_polynomial();
    for k in 0..=d {
        r.compare("product minus h(S)", k as i64, rhs.coeff(k), lhs.coeff(k), Relation::AtLeast);
    }
    r.finish()
}

fn compare_polynomials(r: &mut TheoremReport, quantity: &str, lhs: &Polynomial<i64>, rhs: &Polynomial<i64>, len: usize) {
    for k in 0..len.max(lhs.degree().map_or(0, |x| x + 1)).max(rhs.degree().map_or(0, |x| x + 1)) {
        r.compare(quantity, k as i64, lhs.coeff(k), rhs.coeff(k), Relation::Equal);
    }
}

/// `h(C) = x·h(lk v) + h(astar v)` for a pure `C` whose antistar of `v`
/// keeps the dimension.
pub fn check_lemma35(c: &SimplicialComplex, v: Vertex) -> Result<TheoremReport> {
    let face = Face::vertex(v)?;
    let lk = c.link(face)?;
    let ast = c.antistar(face)?;
    let mut r = TheoremReport::new("lem35", "");
    let pure = r.hypothesis("pure", c.is_pure());
    let same = r.hypothesis("antistar keeps the dimension", ast.dim() == c.dim());
    if pure && same {
        let lhs = c.h_profile().h_polynomial();
        let rhs = &lk.h_profile().h_polynomial().shift(1) + &ast.h_profile().h_polynomial();
        compare_polynomials(&mut r, "h(C) vs x h(lk v) + h(astar v)", &lhs, &rhs, c.d() + 1);
    }
    Ok(r.finish())
}

/// Peels the missing face `F = {v_0 < ... < v_s}` (default: the
/// lexicographically least one) vertex by vertex:
/// `h(C) = x^s h(lk F_{s-1}) + Σ_j x^j h(astar_{lk F_{j-1}} v_j)` with
/// `F_j = {v_0, ..., v_j}`.
pub fn check_telescoping(c: &SimplicialComplex, missing: Option<Face>) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("telescoping", "");
    let f = match missing {
        Some(f) => {
            if !c.missing_faces().contains(&f) {
                return Err(Error::OutOfRange(format!("{f} is not a missing face")));
            }
            f
        }
        None => match c.missing_faces().into_iter().min() {
            Some(f) => f,
            None => {
                r.hypothesis("has a missing face", false);
                return Ok(r.finish());
            }
        },
    };
    r.note(format!("missing face {f}"));
    let verts = f.to_vec();
    let s = verts.len() - 1;
    let mut lk = c.clone();
    let mut rhs = Polynomial::<i64>::new(vec![]);
    let mut keeps_dim = c.is_pure();
    for (j, &v) in verts[..s].iter().enumerate() {
        let single = Face::vertex(v)?;
        let ast = lk.antistar(single)?;
        keeps_dim &= ast.dim() == lk.dim();
        rhs = &rhs + &ast.h_profile().h_polynomial().shift(j);
        lk = lk.link(single)?;
    }
    rhs = &rhs + &lk.h_profile().h_polynomial().shift(s);
    if r.hypothesis("pure, and every antistar keeps the dimension", keeps_dim) {
        let lhs = c.h_profile().h_polynomial();
        compare_polynomials(&mut r, "h(C) vs telescoped sum", &lhs, &rhs, c.d() + 1);
    }
    Ok(r.finish())
}

/// `h(Δ) >= h(Γ)` for CM `Γ ⊆ Δ` of the same dimension.
pub fn check_subcomplex_h(delta: &SimplicialComplex, gamma: &SimplicialComplex, coeff: Coefficients) -> TheoremReport {
    let mut r = TheoremReport::new("subcomplex-h", "");
    let sub = r.hypothesis("subcomplex", gamma.is_subcomplex_of(delta));
    let dim = r.hypothesis("same dimension", gamma.dim() == delta.dim());
    let cm_d = r.hypothesis("complex is CM", is_cm(delta, coeff).verdict);
    let cm_g = r.hypothesis("subcomplex is CM", is_cm(gamma, coeff).verdict);
    if sub && dim && cm_d && cm_g {
        let (h, g) = (delta.h_profile(), gamma.h_profile());
        for j in 0..=delta.d() {
            r.compare("h_j", j as i64, h.h_at(j), g.h_at(j), Relation::AtLeast);
        }
    }
    r.finish()
}

/// `h_2 >= h_1` on 2-CM complexes of dimension at least 2.
pub fn check_h2_at_least_h1(c: &SimplicialComplex, coeff: Coefficients) -> TheoremReport {
    let mut r = TheoremReport::new("h2-vs-h1", "");
    let dim = r.hypothesis("dim >= 2", c.dim() >= 2);
    if dim && r.hypothesis("2-CM", is_qcm(c, 2, coeff).verdict) {
        let h = c.h_profile();
        r.compare("h_2 vs h_1", 2, h.h_at(2), h.h_at(1), Relation::AtLeast);
    }
    r.finish()
}

/// Every `l`-skeleton of a flag 2-CM `(d-1)`-complex is `2(d-l)`-CM. With
/// `probe`, also records whether it is `(2(d-l)+1)`-CM.
pub fn check_thm41_part1(c: &SimplicialComplex, coeff: Coefficients, probe: bool) -> TheoremReport {
    let mut r = TheoremReport::new("thm41-1", "");
    let flag = r.hypothesis("flag", c.is_flag());
    if !flag || !r.hypothesis("2-CM", is_qcm(c, 2, coeff).verdict) {
        return r.finish();
    }
    let d = c.d();
    for l in 0..d {
        let skel = c.skeleton(l as isize).expect("0 <= l <= dim");
        let q = 2 * (d - l);
        let (conn, witness) = cm_connectivity(&skel, coeff, q + probe as usize);
        r.compare(CM_CONNECTIVITY, l as i64, conn as i64, q as i64, Relation::AtLeast);
        if let Some(w) = witness {
            let label = if conn < q {
                format!("l={l}: not {q}-CM")
            } else {
                r.note(format!("l={l}: probe for {}-CM fails", q + 1));
                format!("l={l}: probe {}-CM", q + 1)
            };
            r.evidence.push(Evidence { label, witness: w });
        } else if probe {
            r.note(format!("l={l}: probe for {}-CM holds", q + 1));
        }
    }
    r.finish()
}

/// `h_i(A # B) = h_i(A) + h_i(B)`, minus one at `i = 0` and `i = d`.
pub fn check_connected_sum_h(a: &SimplicialComplex, b: &SimplicialComplex) -> TheoremReport {
    let mut r = TheoremReport::new("consum-h", "");
    let pure = r.hypothesis("both pure", a.is_pure() && b.is_pure());
    let same = r.hypothesis("equal dimension", a.dim() == b.dim() && a.dim() >= 0);
    if !(pure && same) {
        return r.finish();
    }
    let sum = match connected_sum(a, b, None) {
        Ok(s) => s,
        Err(e) => {
            r.hypothesis(format!("connected sum defined: {e}"), false);
            return r.finish();
        }
    };
    let d = a.d();
    let (ha, hb, hs) = (a.h_profile(), b.h_profile(), sum.h_profile());
    for i in 0..=d {
        let expected = ha.h_at(i) + hb.h_at(i) - (i == 0 || i == d) as i64;
        r.compare("h_i(A#B)", i as i64, hs.h_at(i), expected, Relation::Equal);
    }
    r.finish()
}

/// `j·f_{j-1}(ST^x(n, d-1))` against a table of expected values, by
/// default the closed form ψ.
pub fn check_psi_table(n: usize, d: usize, values: Option<&[i64]>) -> TheoremReport {
    let mut r = TheoremReport::new("psi-table", format!("ST^x({n},{})", d as isize - 1));
    let st = match stacked_cross_polytopal(n, d) {
        Ok(st) => st,
        Err(e) => {
            r.hypothesis(format!("d | n and n >= 2d: {e}"), false);
            return r.finish();
        }
    };
    let expected: Vec<i64> = match values {
        Some(v) => v.to_vec(),
        None => (1..=d).map(|j| crate::constructions::psi(j, n, d).expect("1 <= j <= d")).collect(),
    };
    if !r.hypothesis("one expected value per j", expected.len() == d) {
        return r.finish();
    }
    let f = st.complex.f_vector();
    for j in 1..=d {
        r.compare("j*f_(j-1)", j as i64, j as i64 * f.get(j as isize - 1), expected[j - 1], Relation::Equal);
    }
    r.finish()
}

/// The h-vector against an explicit expectation.
pub fn check_h_vector(c: &SimplicialComplex, expected: &[i64]) -> TheoremReport {
    let mut r = TheoremReport::new("h-vector", "");
    let h = c.h_profile();
    if r.hypothesis("one expected value per index", expected.len() == c.d() + 1) {
        for (j, &e) in expected.iter().enumerate() {
            r.compare("h_j", j as i64, h.h_at(j), e, Relation::Equal);
        }
    }
    r.finish()
}

/// Where a suite item gets its complex: a named builder or an inline file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    Build(BuildSpec),
    Inline(ComplexFile),
}

impl Source {
    pub fn build(spec: BuildSpec) -> Self {
        Source::Build(spec)
    }

    pub fn name(&self) -> String {
        match self {
            Source::Build(b) => b.display_name(),
            Source::Inline(f) => f.name.clone().unwrap_or_else(|| "inline complex".into()),
        }
    }

    pub fn load(&self) -> Result<LoadedComplex> {
        match self {
            Source::Build(b) => {
                let (complex, coloring) = b.construct()?;
                Ok(LoadedComplex {
                    name: Some(b.display_name()),
                    complex,
                    coloring,
                })
            }
            Source::Inline(f) => f.load(),
        }
    }

    fn colored(&self) -> Result<(SimplicialComplex, Option<Coloring>)> {
        let l = self.load()?;
        let k = l.coloring.or_else(|| find_coloring(&l.complex));
        Ok((l.complex, k))
    }
}

/// One catalog entry: a claim and its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", deny_unknown_fields)]
pub enum SuiteItem {
    /// `i` defaults to the largest missing-face dimension (at least 1).
    #[serde(rename = "thm31-1")]
    Thm31Part1 {
        complex: Source,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        i: Option<usize>,
    },
    #[serde(rename = "thm31-2")]
    Thm31Part2 {
        complex: Source,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        i: Option<usize>,
    },
    #[serde(rename = "lem32")]
    Lemma32 { i: usize, d: usize, s: usize },
    #[serde(rename = "lem35")]
    Lemma35 { complex: Source, v: Vertex },
    #[serde(rename = "telescoping")]
    Telescoping { complex: Source },
    #[serde(rename = "subcomplex-h")]
    SubcomplexH { complex: Source, delete: Vec<Vertex> },
    #[serde(rename = "thm41-1")]
    Thm41Part1 {
        complex: Source,
        #[serde(default)]
        probe: bool,
    },
    #[serde(rename = "consum-h")]
    ConsumH { a: Source, b: Source },
    #[serde(rename = "h2-vs-h1")]
    H2VsH1 { complex: Source },
    #[serde(rename = "rank-selection-identity")]
    RankIdentity { complex: Source },
    #[serde(rename = "balanced-lbt")]
    BalancedLbt { complex: Source },
    #[serde(rename = "rank-deletion-commutation")]
    Commutation { complex: Source },
    #[serde(rename = "psi-table")]
    PsiTable {
        n: usize,
        d: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        values: Option<Vec<i64>>,
    },
    #[serde(rename = "h-vector")]
    HVector { complex: Source, expected: Vec<i64> },
}

fn default_i(c: &SimplicialComplex) -> usize {
    c.max_missing_dim().map_or(1, |m| m.max(1) as usize)
}

fn no_coloring() -> TheoremReport {
    let mut r = TheoremReport::new("", "");
    r.hypothesis("balanced (a proper coloring exists)", false);
    r.finish()
}

impl SuiteItem {
    /// Runs the check. Malformed inputs are errors; a false hypothesis is
    /// a `hypotheses-not-met` report.
    pub fn run(&self, coeff: Coefficients) -> Result<TheoremReport> {
        let (subject, mut report) = match self {
            SuiteItem::Thm31Part1 { complex, i } => {
                let c = complex.load()?.complex;
                let i = i.unwrap_or_else(|| default_i(&c));
                (format!("{} i={i}", complex.name()), check_thm31_part1(&c, i, coeff))
            }
            SuiteItem::Thm31Part2 { complex, i } => {
                let c = complex.load()?.complex;
                let i = i.unwrap_or_else(|| default_i(&c));
                (format!("{} i={i}", complex.name()), check_thm31_part2(&c, i, coeff))
            }
            SuiteItem::Lemma32 { i, d, s } => (format!("i={i} d={d} s={s}"), check_lemma32(*i, *d, *s)),
            SuiteItem::Lemma35 { complex, v } => {
                let c = complex.load()?.complex;
                (format!("{} v={v}", complex.name()), check_lemma35(&c, *v)?)
            }
            SuiteItem::Telescoping { complex } => {
                (complex.name(), check_telescoping(&complex.load()?.complex, None)?)
            }
            SuiteItem::SubcomplexH { complex, delete } => {
                let c = complex.load()?.complex;
                let w = Face::from_labels(delete)?;
                (
                    format!("{} minus {w}", complex.name()),
                    check_subcomplex_h(&c, &c.restriction(w), coeff),
                )
            }
            SuiteItem::Thm41Part1 { complex, probe } => (
                complex.name(),
                check_thm41_part1(&complex.load()?.complex, coeff, *probe),
            ),
            SuiteItem::ConsumH { a, b } => (
                format!("{} # {}", a.name(), b.name()),
                check_connected_sum_h(&a.load()?.complex, &b.load()?.complex),
            ),
            SuiteItem::H2VsH1 { complex } => {
                (complex.name(), check_h2_at_least_h1(&complex.load()?.complex, coeff))
            }
            SuiteItem::RankIdentity { complex } => {
                let (c, k) = complex.colored()?;
                let rep = match k {
                    Some(k) => check_rank_selection_identity(&c, &k, coeff),
                    None => no_coloring(),
                };
                (complex.name(), rep)
            }
            SuiteItem::BalancedLbt { complex } => {
                let (c, k) = complex.colored()?;
                let rep = match k {
                    Some(k) => check_balanced_lbt(&c, &k, coeff),
                    None => no_coloring(),
                };
                (complex.name(), rep)
            }
            SuiteItem::Commutation { complex } => {
                let (c, k) = complex.colored()?;
                let rep = match k {
                    Some(k) => check_rank_deletion_commutation(&c, &k),
                    None => no_coloring(),
                };
                (complex.name(), rep)
            }
            SuiteItem::PsiTable { n, d, values } => {
                let rep = check_psi_table(*n, *d, values.as_deref());
                (rep.subject.clone(), rep)
            }
            SuiteItem::HVector { complex, expected } => {
                (complex.name(), check_h_vector(&complex.load()?.complex, expected))
            }
        };
        if report.claim.is_empty() {
            report.claim = self.claim_id().to_string();
        }
        report.subject = subject;
        Ok(report)
    }

    pub fn claim_id(&self) -> &'static str {
        match self {
            SuiteItem::Thm31Part1 { .. } => "thm31-1",
            SuiteItem::Thm31Part2 { .. } => "thm31-2",
            SuiteItem::Lemma32 { .. } => "lem32",
            SuiteItem::Lemma35 { .. } => "lem35",
            SuiteItem::Telescoping { .. } => "telescoping",
            SuiteItem::SubcomplexH { .. } => "subcomplex-h",
            SuiteItem::Thm41Part1 { .. } => "thm41-1",
            SuiteItem::ConsumH { .. } => "consum-h",
            SuiteItem::H2VsH1 { .. } => "h2-vs-h1",
            SuiteItem::RankIdentity { .. } => "rank-selection-identity",
            SuiteItem::BalancedLbt { .. } => "balanced-lbt",
            SuiteItem::Commutation { .. } => "rank-deletion-commutation",
            SuiteItem::PsiTable { .. } => "psi-table",
            SuiteItem::HVector { .. } => "h-vector",
        }
    }

    /// Recomputes the single comparison named by the report's witness and
    /// confirms it is violated with the same values. Table claims recompute
    /// from a freshly built complex with an independent h transform; other
    /// claims re-run the check and look the comparison up.
    pub fn recheck(&self, report: &TheoremReport, coeff: Coefficients) -> Result<bool> {
        let Some(w) = &report.witness else {
            return Ok(false);
        };
        let (lhs, rhs) = match self {
            SuiteItem::PsiTable { n, d, values } => {
                let j = w.index;
                if j < 1 || j as usize > *d {
                    return Ok(false);
                }
                let st = stacked_cross_polytopal(*n, *d)?;
                let count = st.complex.faces_of_dim(j as isize - 1).len() as i64;
                let expected = match values {
                    Some(v) => v[j as usize - 1],
                    None => crate::constructions::psi(j as usize, *n, *d)?,
                };
                (j * count, expected)
            }
            SuiteItem::HVector { complex, expected } => {
                let c = complex.load()?.complex;
                let j = w.index as usize;
                if j >= expected.len() {
                    return Ok(false);
                }
                let f: Vec<i64> = (0..=c.d())
                    .map(|k| c.faces_of_dim(k as isize - 1).len() as i64)
                    .collect();
                (h_from_f(&f, c.d())[j], expected[j])
            }
            _ => {
                let again = self.run(coeff)?;
                match again
                    .comparisons
                    .iter()
                    .find(|c| c.quantity == w.quantity && c.index == w.index)
                {
                    Some(c) => (c.lhs, c.rhs),
                    None => return Ok(false),
                }
            }
        };
        let same = lhs == w.lhs && rhs == w.rhs;
        let violated = match w.relation {
            Relation::AtLeast => lhs < rhs,
            Relation::Equal => lhs != rhs,
        };
        Ok(same && violated)
    }
}

/// Runs every item (concurrently), returning reports in catalog order.
pub fn run_suite(items: &[SuiteItem], coeff: Coefficients) -> Result<Vec<TheoremReport>> {
    items.par_iter().map(|it| it.run(coeff)).collect()
}

pub fn suite_passes(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fails)
}

pub fn parse_catalog(text: &str) -> Result<Vec<SuiteItem>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn b(name: &str) -> BuildSpec {
    BuildSpec::new(name)
}

fn src(spec: BuildSpec) -> Source {
    Source::Build(spec)
}

/// Closed-form h-vectors: `C(d, j)` for cross-polytopes, all ones for
/// simplex boundaries, `(n/d - 1)·C(d, j)` inside for stacked
/// cross-polytopal spheres.
pub fn closed_form_h(spec: &BuildSpec) -> Option<Vec<i64>> {
    let d = spec.d?;
    match spec.build.as_str() {
        "cross-polytope" => Some((0..=d).map(|j| binomial(d as u64, j as u64)).collect()),
        "simplex-boundary" => Some(vec![1; d + 1]),
        "stacked-cross" => {
            let n = spec.n?;
            let m = (n / d) as i64 - 1;
            Some(
                (0..=d)
                    .map(|j| if j == 0 || j == d { 1 } else { m * binomial(d as u64, j as u64) })
                    .collect(),
            )
        }
        _ => None,
    }
}

/// The built-in catalog. Everything here holds, except the cone over the
/// octahedron, whose vanishing top homology makes it a
/// `hypotheses-not-met` control.
pub fn default_catalog() -> Vec<SuiteItem> {
    let octa = || b("cross-polytope").with_d(3);
    let s = |i: usize, d: usize| b("S").with_i(i).with_d(d);
    let stx = |n: usize, d: usize| b("stacked-cross").with_n(n).with_d(d);
    let s1n = |d: usize, n: usize| b("S1n").with_d(d).with_n(n);
    let sd3 = || b("simplex-boundary").with_d(3).subdivided();
    let mut items = Vec::new();

    let thm31: Vec<(BuildSpec, usize)> = vec![
        (octa(), 1),
        (s(2, 4), 2),
        (s(2, 6), 2),
        (s(3, 5), 3),
        (stx(12, 3), 2),
        (s1n(3, 7), 1),
        (s1n(3, 8), 1),
        (sd3(), 1),
    ];
    for (spec, i) in &thm31 {
        items.push(SuiteItem::Thm31Part1 {
            complex: src(spec.clone()),
            i: Some(*i),
        });
        items.push(SuiteItem::Thm31Part2 {
            complex: src(spec.clone()),
            i: Some(*i),
        });
    }
    items.push(SuiteItem::Thm31Part1 {
        complex: src(octa().coned()),
        i: Some(1),
    });

    for d in 1..=8 {
        for i in 1..=d {
            for s_ in 1..=i {
                items.push(SuiteItem::Lemma32 { i, d, s: s_ });
            }
        }
    }

    for (spec, v) in [
        (octa(), 1),
        (b("simplex-boundary").with_d(3), 1),
        (b("stacked").with_n(6).with_d(3), 6),
    ] {
        items.push(SuiteItem::Lemma35 { complex: src(spec), v });
    }
    for spec in [s(2, 4), stx(12, 3)] {
        items.push(SuiteItem::Telescoping { complex: src(spec) });
    }
    for spec in [octa(), stx(12, 3), s1n(3, 8), s(2, 4)] {
        items.push(SuiteItem::SubcomplexH {
            complex: src(spec),
            delete: vec![1],
        });
    }
    items.push(SuiteItem::Thm41Part1 {
        complex: src(octa()),
        probe: false,
    });
    items.push(SuiteItem::Thm41Part1 {
        complex: src(s1n(3, 8)),
        probe: true,
    });
    items.push(SuiteItem::Thm41Part1 {
        complex: src(b("cross-polytope").with_d(4)),
        probe: false,
    });
    let tet = || b("simplex-boundary").with_d(3);
    items.push(SuiteItem::ConsumH {
        a: src(tet()),
        b: src(tet()),
    });
    items.push(SuiteItem::ConsumH {
        a: src(octa()),
        b: src(octa()),
    });
    items.push(SuiteItem::ConsumH {
        a: src(octa()),
        b: src(tet()),
    });
    for spec in [octa(), stx(12, 3), sd3()] {
        items.push(SuiteItem::H2VsH1 { complex: src(spec) });
    }
    for spec in [octa(), stx(12, 3), stx(8, 4)] {
        items.push(SuiteItem::RankIdentity { complex: src(spec) });
    }
    for spec in [octa(), stx(12, 3), stx(8, 4), sd3()] {
        items.push(SuiteItem::BalancedLbt { complex: src(spec) });
    }
    items.push(SuiteItem::Commutation { complex: src(octa()) });
    for (n, d) in [(12, 3), (18, 3), (8, 4), (12, 4)] {
        items.push(SuiteItem::PsiTable { n, d, values: None });
    }
    let mut closed: Vec<BuildSpec> = Vec::new();
    closed.extend((2..=8).map(|d| b("cross-polytope").with_d(d)));
    closed.extend((1..=8).map(|d| b("simplex-boundary").with_d(d)));
    closed.extend([stx(12, 3), stx(18, 3), stx(8, 4), stx(12, 4)]);
    for spec in closed {
        let expected = closed_form_h(&spec).expect("closed form known");
        items.push(SuiteItem::HVector {
            complex: src(spec),
            expected,
        });
    }
    items
}

/// Deliberately corrupted expectations; every item must report `fails`.
pub fn negative_control_catalog() -> Vec<SuiteItem> {
    vec![
        SuiteItem::PsiTable {
            n: 12,
            d: 3,
            values: Some(vec![12, 61, 60]),
        },
        SuiteItem::PsiTable {
            n: 8,
            d: 4,
            values: Some(vec![8, 48, 96, 65]),
        },
        SuiteItem::HVector {
            complex: src(b("cross-polytope").with_d(3)),
            expected: vec![1, 3, 4, 1],
        },
        SuiteItem::HVector {
            complex: src(b("stacked-cross").with_n(12).with_d(3)),
            expected: vec![1, 9, 9, 2],
        },
    ]
}
