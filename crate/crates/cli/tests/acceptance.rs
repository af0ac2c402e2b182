//! Acceptance criteria, one PASS/FAIL line each. Expected values come from
//! closed forms written out here, not from the library's own formulas.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use facenum::balanced::{
    check_balanced_lbt, check_rank_deletion_commutation, check_rank_selection_identity, ColoredComplex, Coloring, LBT_F,
    LBT_H,
};
use facenum::cm::{is_cm, is_qcm, CmWitness};
use facenum::constructions::*;
use facenum::homology::homology;
use facenum::report::{TheoremReport, Verdict};
use facenum::verify::{
    check_lemma32, check_thm31_part1, check_thm31_part2, check_thm41_part1, default_catalog,
    negative_control_catalog, run_suite, Source, SuiteItem, CM_CONNECTIVITY,
};
use facenum::{Coefficients, SimplicialComplex};

const Q: Coefficients = Coefficients::Rationals;

/// Wall-clock budgets, pinned.
const BUDGET_S: [u64; 9] = [1, 5, 60, 120, 120, 1, 300, 30, 60];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, t| acc * (n - k + t) / t)
}

fn psi_oracle(j: i64, n: i64, d: i64) -> i64 {
    if j == d {
        ((1 << d) - 2) * (n - d) + 2 * d
    } else {
        ((1 << j) - 1) * choose(d - 1, j - 1) * (n - d) + d * choose(d - 1, j - 1)
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `h(S(i, d-1))` as a product of all-ones polynomials.
fn s_h_oracle(i: usize, d: usize) -> Vec<i64> {
    let (q, r) = ((d - 1) / i, d - i * ((d - 1) / i));
    let mut h = vec![1];
    for _ in 0..q {
        h = poly_mul(&h, &vec![1; i + 1]);
    }
    poly_mul(&h, &vec![1; r + 1])
}

fn c1_closed_form_h() -> Outcome {
    for d in 2..=8usize {
        let h = cross_polytope_boundary(d).unwrap().h_profile().h;
        let want: Vec<i64> = (0..=d as i64).map(|j| choose(d as i64, j)).collect();
        ensure(h == want, || format!("cross-polytope d={d}: {h:?} != {want:?}"))?;
    }
    for d in 1..=8usize {
        let h = simplex_boundary(d).unwrap().h_profile().h;
        ensure(h == vec![1; d + 1], || format!("simplex boundary d={d}: {h:?}"))?;
    }
    Ok("cross-polytopes d=2..8, simplex boundaries d=1..8".into())
}

fn c2_stacked_cross() -> Outcome {
    for (n, d) in [(12i64, 3i64), (18, 3), (8, 4), (12, 4)] {
        let st = stacked_cross_polytopal(n as usize, d as usize).unwrap();
        let hp = st.complex.h_profile();
        for j in 1..d {
            let want = (n / d - 1) * choose(d, j);
            ensure(hp.h_at(j as usize) == want, || {
                format!("ST^x({n},{}) h_{j} = {} != {want}", d - 1, hp.h_at(j as usize))
            })?;
        }
        for j in 1..=d {
            let got = j * hp.f.get(j as isize - 1);
            let want = psi_oracle(j, n, d);
            ensure(got == want, || format!("ST^x({n},{}) j={j}: {got} != psi {want}", d - 1))?;
            ensure(psi(j as usize, n as usize, d as usize).unwrap() == want, || {
                format!("library psi({j},{n},{d}) disagrees with {want}")
            })?;
        }
    }
    Ok("(12,3) (18,3) (8,4) (12,4)".into())
}

fn sphere_betti(d: usize) -> Vec<usize> {
    let mut b = vec![0; d + 1];
    b[d] = 1;
    b
}

fn catalog_complexes() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    let mut push = |s: &Source| {
        let c = s.load().unwrap().complex;
        if !out.iter().any(|(_, x): &(String, SimplicialComplex)| *x == c) {
            out.push((s.name(), c));
        }
    };
    for item in default_catalog() {
        match &item {
            SuiteItem::Thm31Part1 { complex, .. }
            | SuiteItem::Thm31Part2 { complex, .. }
            | SuiteItem::Lemma35 { complex, .. }
            | SuiteItem::Telescoping { complex }
            | SuiteItem::SubcomplexH { complex, .. }
            | SuiteItem::Thm41Part1 { complex, .. }
            | SuiteItem::H2VsH1 { complex }
            | SuiteItem::RankIdentity { complex }
            | SuiteItem::BalancedLbt { complex }
            | SuiteItem::Commutation { complex }
            | SuiteItem::HVector { complex, .. } => push(complex),
            SuiteItem::ConsumH { a, b } => {
                push(a);
                push(b);
            }
            SuiteItem::Lemma32 { .. } | SuiteItem::PsiTable { .. } => {}
        }
    }
    out
}

fn c3_homology() -> Outcome {
    let z = Coefficients::Integers;
    let gf2 = Coefficients::gf(2).unwrap();
    for d in 1..=5 {
        for i in 1..=d {
            let s = sphere_s(i, d).unwrap();
            for coeff in [Q, gf2, z] {
                let h = homology(&s, coeff);
                ensure(h.betti == sphere_betti(d), || {
                    format!("S({i},{}) over {coeff}: {:?}", d - 1, h.betti)
                })?;
                ensure(h.torsion.iter().all(Vec::is_empty), || format!("S({i},{}) has torsion", d - 1))?;
            }
        }
    }
    let rp2 = real_projective_plane();
    let hz = homology(&rp2, z);
    ensure(hz.torsion_at(1) == [2u32.into()], || format!("RP2 H_1 torsion {:?}", hz.torsion_at(1)))?;
    let (bq, b2) = (homology(&rp2, Q).betti, homology(&rp2, gf2).betti);
    ensure(bq == vec![0, 0, 0, 0] && b2 == vec![0, 0, 1, 1], || format!("RP2 betti Q {bq:?}, GF(2) {b2:?}"))?;
    let catalog = catalog_complexes();
    for (name, c) in &catalog {
        let chi = c.f_vector().reduced_euler_characteristic();
        for coeff in [Q, gf2, z] {
            let e = homology(c, coeff).euler_characteristic();
            ensure(e == chi, || format!("{name} over {coeff}: {e} != {chi}"))?;
        }
    }
    Ok(format!("S(i,d-1) for d<=5 in 3 rings, RP2 torsion [2], Euler-Poincare on {} complexes", catalog.len()))
}

fn c4_cm() -> Outcome {
    let mut family: Vec<(String, SimplicialComplex)> = Vec::new();
    for d in 1..=5usize {
        family.push((format!("bd simplex^{d}"), simplex_boundary(d).unwrap()));
        family.push((format!("bd cross-polytope^{d}"), cross_polytope_boundary(d).unwrap()));
        for i in 1..=d {
            family.push((format!("S({i},{})", d - 1), sphere_s(i, d).unwrap()));
        }
    }
    for d in 2..=5usize {
        for n in d + 1..=14 {
            family.push((format!("ST({n},{})", d - 1), stacked_sphere(n, d).unwrap()));
        }
        for n in (2 * d..=14).step_by(d) {
            family.push((format!("ST^x({n},{})", d - 1), stacked_cross_polytopal(n, d).unwrap().complex));
        }
    }
    for (name, c) in &family {
        ensure(is_cm(c, Q).verdict, || format!("{name} not CM"))?;
        let r = is_qcm(c, 2, Q);
        ensure(r.verdict, || format!("{name} not 2-CM: {:?}", r.witness))?;
    }
    let o = cross_polytope_boundary(3).unwrap();
    let r = is_qcm(&o, 3, Q);
    let w = r.witness.ok_or("octahedron reported 3-CM")?;
    let removed = match &w {
        CmWitness::DimensionDrop { removed, .. } | CmWitness::Deletion { removed, .. } => *removed,
        other => return Err(format!("unexpected witness {other}")),
    };
    // antipodal pairs of the octahedron are exactly its non-edges
    let antipodal = removed.len() == 2 && !o.contains(removed);
    ensure(antipodal && w.recheck(&o, Q), || format!("witness {w} is not an antipodal pair"))?;
    Ok(format!("{} complexes CM and 2-CM; octahedron: {w}", family.len()))
}

fn c5_thm31() -> Outcome {
    let s = |i, d| (format!("S({i},{})", d - 1), sphere_s(i, d).unwrap(), i, true);
    let catalog = vec![
        ("octahedron".to_string(), cross_polytope_boundary(3).unwrap(), 1, true),
        s(2, 4),
        s(2, 6),
        s(3, 5),
        ("ST^x(12,2)".into(), stacked_cross_polytopal(12, 3).unwrap().complex, 2, false),
        ("S(1,2,7)".into(), sphere_s1n(3, 7).unwrap(), 1, false),
        ("S(1,2,8)".into(), sphere_s1n(3, 8).unwrap(), 1, false),
        ("sd bd simplex^3".into(), barycentric_subdivision(&simplex_boundary(3).unwrap()).unwrap().complex, 1, false),
    ];
    for (name, c, i, extremal) in &catalog {
        for r in [check_thm31_part1(c, *i, Q), check_thm31_part2(c, *i, Q)] {
            ensure(r.verdict == Verdict::Holds, || format!("{name} i={i}: {r}"))?;
            let iso = r.equality.as_ref().and_then(|e| e.isomorphic);
            ensure((iso == Some(true)) == *extremal, || format!("{name}: equality case {iso:?}"))?;
        }
    }
    let cone = cone(&cross_polytope_boundary(3).unwrap()).unwrap();
    let r = check_thm31_part1(&cone, 1, Q);
    ensure(r.verdict == Verdict::HypothesesNotMet, || format!("cone: {r}"))?;
    Ok(format!("{} complexes, both parts; cone is hypotheses-not-met", catalog.len()))
}

fn c6_lemma32() -> Outcome {
    let mut count = 0;
    for d in 1..=8usize {
        for i in 1..=d {
            let big = s_h_oracle(i, d);
            ensure(sphere_s(i, d).unwrap().h_profile().h == big, || format!("h(S({i},{})) != {big:?}", d - 1))?;
            for s in 1..=i {
                let small = if d == s { vec![1] } else { s_h_oracle(i, d - s) };
                let prod = poly_mul(&vec![1; s + 1], &small);
                ensure((0..=d).all(|k| big[k] <= prod[k]), || format!("oracle violates i={i} d={d} s={s}"))?;
                let r = check_lemma32(i, d, s);
                ensure(r.verdict == Verdict::Holds, || r.to_string())?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn c7_thm41() -> Outcome {
    let cases = [
        ("octahedron", cross_polytope_boundary(3).unwrap(), false),
        ("S(1,2,8)", sphere_s1n(3, 8).unwrap(), true),
        ("bd cross-polytope^4", cross_polytope_boundary(4).unwrap(), false),
    ];
    let mut probe_note = String::new();
    for (name, c, probe) in &cases {
        let r = check_thm41_part1(c, Q, *probe);
        ensure(r.verdict == Verdict::Holds, || format!("{name}: {r}"))?;
        let d = c.d() as i64;
        let levels: Vec<i64> = r.comparisons.iter().filter(|x| x.quantity == CM_CONNECTIVITY).map(|x| x.index).collect();
        ensure(levels == (0..d).collect::<Vec<_>>(), || format!("{name}: skeleta {levels:?}"))?;
        for x in r.comparisons.iter().filter(|x| x.quantity == CM_CONNECTIVITY) {
            ensure(x.rhs == 2 * (d - x.index), || format!("{name}: wrong target {x}"))?;
        }
        if *probe {
            let ev = r
                .evidence
                .iter()
                .find(|e| e.label == "l=1: probe 5-CM")
                .ok_or_else(|| format!("{name}: no 5-CM probe witness at l=1"))?;
            let skel = c.skeleton(1).unwrap();
            ensure(ev.witness.recheck(&skel, Q), || format!("probe witness {} does not recheck", ev.witness))?;
            ensure(is_qcm(&skel, 4, Q).verdict && !is_qcm(&skel, 5, Q).verdict, || "1-skeleton not exactly 4-CM".into())?;
            probe_note = format!("; S(1,2,8) l=1 not 5-CM: {}", ev.witness);
        }
    }
    Ok(format!("3 complexes, all skeleta{probe_note}"))
}

fn colored(c: ColoredComplex) -> (SimplicialComplex, Coloring) {
    (c.complex, c.coloring)
}

fn c8_balanced() -> Outcome {
    let octa = || colored(colored_cross_polytope(3).unwrap());
    let st = |n, d| colored(stacked_cross_polytopal(n, d).unwrap());
    for (name, (c, k)) in [("octahedron", octa()), ("ST^x(12,2)", st(12, 3)), ("ST^x(8,3)", st(8, 4))] {
        let r = check_rank_selection_identity(&c, &k, Q);
        ensure(r.verdict == Verdict::Holds && r.comparisons.len() == c.d() + 1, || format!("{name}: {r}"))?;
    }
    for (name, (c, k)) in [("octahedron", octa()), ("ST^x(12,2)", st(12, 3)), ("ST^x(18,2)", st(18, 3)), ("ST^x(8,3)", st(8, 4)), ("ST^x(12,3)", st(12, 4))] {
        let r = check_balanced_lbt(&c, &k, Q);
        ensure(r.verdict == Verdict::Holds, || format!("{name}: {r}"))?;
        ensure(r.all_tight(LBT_H) && r.all_tight(LBT_F), || format!("{name}: not tight"))?;
    }
    let (o, k) = octa();
    let r = check_rank_deletion_commutation(&o, &k);
    // every T and every vertex whose color lies in T: 6 vertices, 4 sets each
    ensure(r.verdict == Verdict::Holds && r.comparisons.len() == 6 * 4, || format!("commutation: {r}"))?;

    let (sd, ks) = colored(barycentric_subdivision(&simplex_boundary(3).unwrap()).unwrap());
    let r = check_balanced_lbt(&sd, &ks, Q);
    ensure(r.verdict == Verdict::Holds, || format!("sd bd simplex^3: {r}"))?;
    let strict = r.any_strict(LBT_H);
    let h = strict_detail(&r, LBT_H);
    ensure(strict, || format!("sd bd simplex^3 is tight, not strict: {h}"))?;
    Ok(format!("identity, tight ST^x, commutation; sd bd simplex^3 strict: {h}"))
}

fn strict_detail(r: &TheoremReport, quantity: &str) -> String {
    r.comparisons
        .iter()
        .filter(|c| c.quantity == quantity)
        .map(|c| format!("{} vs {}", c.lhs, c.rhs))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cli(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_facenum"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn c9_falsifiability() -> Outcome {
    let items = negative_control_catalog();
    let reports = run_suite(&items, Q).map_err(|e| e.to_string())?;
    for (item, r) in items.iter().zip(&reports) {
        ensure(r.verdict == Verdict::Fails, || format!("control {} did not fail: {r}", item.claim_id()))?;
        ensure(item.recheck(r, Q).unwrap_or(false), || format!("witness of {r} does not recheck"))?;
    }
    let expect = [
        (vec!["verify", "--claim", "suite"], "", 0),
        (vec!["verify", "--claim", "suite", "--negative-controls"], "", 1),
        (vec!["qcm", "--q", "3"], "{\"facets\":[[1,2,3],[1,2,4],[1,3,5],[1,4,5],[2,3,6],[2,4,6],[3,5,6],[4,5,6]]}", 1),
        (vec!["fvec"], "{\"facets\": [[1,2]", 2),
        (vec!["fvec", "--bogus"], "{\"facets\":[[1]]}", 2),
        (vec!["fvec"], "{\"facets\":[[1,129]]}", 2),
    ];
    for (args, input, code) in expect {
        let (got, _) = cli(&args, input);
        ensure(got == code, || format!("`facenum {}` exited {got}, expected {code}", args.join(" ")))?;
    }
    Ok(format!("{} controls fail with rechecked witnesses; exit codes 0/1/2", items.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("closed-form h-vectors", c1_closed_form_h),
        ("stacked cross-polytopal formulas", c2_stacked_cross),
        ("homology kernel", c3_homology),
        ("CM machinery", c4_cm),
        ("lower bound by S(i,d-1)", c5_thm31),
        ("coefficientwise product bound", c6_lemma32),
        ("skeleton CM-connectivity", c7_thm41),
        ("balanced suite", c8_balanced),
        ("falsifiability", c9_falsifiability),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let budget = Duration::from_secs(BUDGET_S[k]);
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        failed += !ok as usize;
        println!(
            "{} {} {name} [{:.2}s / {}s]: {detail}",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            took.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
