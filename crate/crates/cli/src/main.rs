use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use facenum::balanced::{
    check_balanced_lbt, check_rank_selection_identity, find_coloring, rank_selected, Coloring,
};
use facenum::cm::{is_cm, is_homology_sphere, is_qcm, CmReport};
use facenum::constructions::{colored_connected_sum, connected_sum, join, BuildSpec, GlueSpec};
use facenum::homology::homology;
use facenum::io::{read_complex, write_complex, LoadedComplex};
use facenum::iso::find_isomorphism;
use facenum::report::{TheoremReport, Verdict};
use facenum::verify::{
    check_connected_sum_h, check_lemma32, check_lemma35, check_thm31_part1, check_thm31_part2,
    check_thm41_part1, default_catalog, negative_control_catalog, parse_catalog, run_suite,
    suite_passes,
};
use facenum::{Coefficients, Face, SimplicialComplex, MAX_VERTICES};
use serde_json::json;

const CAP_VAR: &str = "FACENUM_VERTEX_CAP";

#[derive(Parser)]
#[command(name = "facenum", version, about = "Face numbers, homology and CM checks for simplicial complexes")]
struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Complex file (JSON); stdin when omitted or "-".
    file: Option<String>,
}

#[derive(Args)]
struct CoeffArg {
    /// Coefficients: q, z or gf:p.
    #[arg(long, default_value = "q")]
    coeff: Coefficients,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named complex and print it as JSON.
    Build {
        /// simplex-boundary, cross-polytope, cycle, S, stacked, stacked-cross, S1n, rp2
        name: String,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Barycentric subdivision of the result.
        #[arg(long)]
        subdivide: bool,
        /// Cone over the result.
        #[arg(long)]
        cone: bool,
    },
    /// f-vector f_{-1} .. f_{d-1}.
    Fvec(Input),
    /// h-vector h_0 .. h_d.
    Hvec(Input),
    /// Missing faces, by size then lexicographically.
    Missing(Input),
    Skeleton {
        #[arg(long)]
        l: isize,
        #[command(flatten)]
        input: Input,
    },
    Link {
        /// Comma-separated vertices, empty for the empty face.
        #[arg(long, default_value = "")]
        face: String,
        #[command(flatten)]
        input: Input,
    },
    Star {
        #[arg(long, default_value = "")]
        face: String,
        #[command(flatten)]
        input: Input,
    },
    Antistar {
        #[arg(long, default_value = "")]
        face: String,
        #[command(flatten)]
        input: Input,
    },
    /// Delete a vertex set (or keep only one with --keep).
    Restrict {
        #[arg(long, conflicts_with = "keep")]
        remove: Option<String>,
        #[arg(long)]
        keep: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    Join { a: String, b: String },
    /// Connected sum; defaults to the lexicographically least facets.
    Consum {
        a: String,
        b: String,
        #[arg(long, requires = "facet_b")]
        facet_a: Option<String>,
        #[arg(long, requires = "facet_a")]
        facet_b: Option<String>,
        /// Match the glue facets by color (both files must carry colors).
        #[arg(long)]
        colored: bool,
    },
    Homology {
        #[command(flatten)]
        coeff: CoeffArg,
        #[command(flatten)]
        input: Input,
    },
    Cm {
        #[command(flatten)]
        coeff: CoeffArg,
        #[command(flatten)]
        input: Input,
    },
    Qcm {
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        coeff: CoeffArg,
        #[command(flatten)]
        input: Input,
    },
    SphereCheck {
        #[command(flatten)]
        coeff: CoeffArg,
        #[command(flatten)]
        input: Input,
    },
    Balanced {
        #[arg(long)]
        find_coloring: bool,
        /// Comma-separated colors of the rank selection.
        #[arg(long)]
        rank: Option<String>,
        #[arg(long)]
        check_lbt: bool,
        #[arg(long)]
        check_rank_identity: bool,
        #[command(flatten)]
        coeff: CoeffArg,
        #[command(flatten)]
        input: Input,
    },
    /// Check a claim on concrete input; reports are printed as JSON lines.
    Verify {
        /// thm31-1, thm31-2, lem32, lem35, thm41-1, consum-h, suite
        #[arg(long)]
        claim: String,
        #[arg(long)]
        complex: Option<String>,
        /// Second complex for consum-h.
        #[arg(long)]
        other: Option<String>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        v: Option<u32>,
        /// Also test the next connectivity level (thm41-1).
        #[arg(long)]
        probe: bool,
        /// Suite catalog file; the built-in catalog when omitted.
        #[arg(long)]
        catalog: Option<String>,
        /// Run the corrupted-expectation catalog instead.
        #[arg(long, conflicts_with = "catalog")]
        negative_controls: bool,
        #[command(flatten)]
        coeff: CoeffArg,
    },
    /// Decide whether two complexes are isomorphic.
    Iso { a: String, b: String },
}

/// Failures that map to exit code 2.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type Outcome = std::result::Result<bool, InputError>;

fn vertex_cap() -> Result<u32> {
    match std::env::var(CAP_VAR) {
        Err(_) => Ok(MAX_VERTICES),
        Ok(v) => {
            let cap: u32 = v.trim().parse().with_context(|| format!("{CAP_VAR}={v:?} is not a number"))?;
            if cap == 0 || cap > MAX_VERTICES {
                bail!("{CAP_VAR} must lie in 1..={MAX_VERTICES}");
            }
            Ok(cap)
        }
    }
}

fn read_text(path: Option<&str>) -> Result<String> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {p}")),
    }
}

fn load(path: Option<&str>) -> Result<LoadedComplex> {
    let text = read_text(path)?;
    Ok(read_complex(&text, vertex_cap()?)?)
}

fn parse_face(s: &str) -> Result<Face> {
    let labels: Vec<u32> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().with_context(|| format!("bad vertex {t:?}")))
        .collect::<Result<_>>()?;
    Ok(Face::from_labels_capped(&labels, vertex_cap()?)?)
}

fn check_cap(c: &SimplicialComplex) -> Result<()> {
    let cap = vertex_cap()?;
    if c.max_label() > cap {
        bail!("vertex label {} exceeds the cap {cap}", c.max_label());
    }
    Ok(())
}

struct Out {
    json: bool,
    buf: io::StdoutLock<'static>,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        // a closed pipe is not worth a panic
        let _ = writeln!(self.buf, "{}", s.as_ref());
    }

    fn complex(&mut self, c: &SimplicialComplex, name: Option<&str>, coloring: Option<&Coloring>) -> Result<()> {
        check_cap(c)?;
        self.line(write_complex(c, name, coloring));
        Ok(())
    }

    fn report(&mut self, r: &TheoremReport) {
        self.line(serde_json::to_string(r).expect("report serializes"));
    }

    fn cm(&mut self, label: &str, r: &CmReport) -> bool {
        if self.json {
            self.line(serde_json::to_string(r).expect("report serializes"));
        } else if r.verdict {
            self.line(format!("{label}: yes"));
        } else {
            self.line(format!("{label}: no"));
            if let Some(w) = &r.witness {
                self.line(format!("witness: {w}"));
            }
        }
        r.verdict
    }
}

fn join_nums<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli, out: &mut Out) -> Outcome {
    match cli.command {
        Command::Build {
            name,
            i,
            d,
            n,
            k,
            subdivide,
            cone,
        } => {
            let spec = BuildSpec {
                build: name,
                i,
                d,
                n,
                k,
                subdivide,
                cone,
            };
            let (c, coloring) = spec.construct()?;
            out.complex(&c, Some(&spec.display_name()), coloring.as_ref())?;
        }
        Command::Fvec(input) => {
            let f = load(input.file.as_deref())?.complex.f_vector();
            if out.json {
                out.line(json!({ "f": f.entries() }).to_string());
            } else {
                out.line(join_nums(f.entries()));
            }
        }
        Command::Hvec(input) => {
            let h = load(input.file.as_deref())?.complex.h_profile().h;
            if out.json {
                out.line(json!({ "h": h }).to_string());
            } else {
                out.line(join_nums(&h));
            }
        }
        Command::Missing(input) => {
            let missing = load(input.file.as_deref())?.complex.missing_faces();
            if out.json {
                let lists: Vec<Vec<u32>> = missing.iter().map(|f| f.to_vec()).collect();
                out.line(json!({ "missing": lists }).to_string());
            } else {
                for f in missing {
                    out.line(join_nums(&f.to_vec()));
                }
            }
        }
        Command::Skeleton { l, input } => {
            let c = load(input.file.as_deref())?.complex;
            out.complex(&c.skeleton(l)?, None, None)?;
        }
        Command::Link { face, input } => {
            let c = load(input.file.as_deref())?.complex;
            out.complex(&c.link(parse_face(&face)?)?, None, None)?;
        }
        Command::Star { face, input } => {
            let c = load(input.file.as_deref())?.complex;
            out.complex(&c.star(parse_face(&face)?)?, None, None)?;
        }
        Command::Antistar { face, input } => {
            let c = load(input.file.as_deref())?.complex;
            out.complex(&c.antistar(parse_face(&face)?)?, None, None)?;
        }
        Command::Restrict { remove, keep, input } => {
            let c = load(input.file.as_deref())?.complex;
            let r = match (remove, keep) {
                (Some(w), None) => c.restriction(parse_face(&w)?),
                (None, Some(k)) => c.induced(parse_face(&k)?),
                _ => return Err(anyhow!("give exactly one of --remove and --keep").into()),
            };
            out.complex(&r, None, None)?;
        }
        Command::Join { a, b } => {
            let (a, b) = (load(Some(&a))?.complex, load(Some(&b))?.complex);
            out.complex(&join(&a, &b)?, None, None)?;
        }
        Command::Consum {
            a,
            b,
            facet_a,
            facet_b,
            colored,
        } => {
            let (la, lb) = (load(Some(&a))?, load(Some(&b))?);
            if colored {
                let (Some(ka), Some(kb)) = (la.coloring, lb.coloring) else {
                    return Err(anyhow!("--colored needs colors in both files").into());
                };
                let ca = facenum::balanced::ColoredComplex {
                    complex: la.complex,
                    coloring: ka,
                };
                let cb = facenum::balanced::ColoredComplex {
                    complex: lb.complex,
                    coloring: kb,
                };
                let fa = match &facet_a {
                    Some(f) => parse_face(f)?,
                    None => ca.complex.facets().first().copied().ok_or(anyhow!("void complex"))?,
                };
                let fb = match &facet_b {
                    Some(f) => parse_face(f)?,
                    None => cb.complex.facets().first().copied().ok_or(anyhow!("void complex"))?,
                };
                let sum = colored_connected_sum(&ca, &cb, fa, fb)?;
                out.complex(&sum.complex, None, Some(&sum.coloring))?;
            } else {
                let glue = match (facet_a, facet_b) {
                    (Some(fa), Some(fb)) => Some(GlueSpec::order_preserving(parse_face(&fa)?, parse_face(&fb)?)),
                    _ => None,
                };
                out.complex(&connected_sum(&la.complex, &lb.complex, glue.as_ref())?, None, None)?;
            }
        }
        Command::Homology { coeff, input } => {
            let c = load(input.file.as_deref())?.complex;
            let h = homology(&c, coeff.coeff);
            if out.json {
                out.line(serde_json::to_string(&h).expect("profile serializes"));
            } else {
                for (k, b) in h.betti.iter().enumerate() {
                    let j = k as isize - 1;
                    let t = h.torsion_at(j);
                    if t.is_empty() {
                        out.line(format!("H~_{j}: rank {b}"));
                    } else {
                        out.line(format!("H~_{j}: rank {b}, torsion {}", join_nums(t)));
                    }
                }
            }
        }
        Command::Cm { coeff, input } => {
            let c = load(input.file.as_deref())?.complex;
            return Ok(out.cm("CM", &is_cm(&c, coeff.coeff)));
        }
        Command::Qcm { q, coeff, input } => {
            if q == 0 {
                return Err(anyhow!("--q must be at least 1").into());
            }
            let c = load(input.file.as_deref())?.complex;
            return Ok(out.cm(&format!("{q}-CM"), &is_qcm(&c, q, coeff.coeff)));
        }
        Command::SphereCheck { coeff, input } => {
            let c = load(input.file.as_deref())?.complex;
            return Ok(out.cm("homology sphere", &is_homology_sphere(&c, coeff.coeff)));
        }
        Command::Balanced {
            find_coloring: find,
            rank,
            check_lbt,
            check_rank_identity,
            coeff,
            input,
        } => {
            let l = load(input.file.as_deref())?;
            let coloring = l.coloring.clone().or_else(|| find_coloring(&l.complex));
            let mut ok = true;
            if find {
                match &coloring {
                    Some(k) => out.line(json!({ "colors": k.as_map() }).to_string()),
                    None => {
                        out.line(if out.json { "{\"colors\":null}" } else { "not balanced" });
                        ok = false;
                    }
                }
            }
            let need = |k: &Option<Coloring>| -> std::result::Result<Coloring, InputError> {
                k.clone()
                    .ok_or_else(|| InputError(anyhow!("complex is not balanced (no proper coloring)")))
            };
            if let Some(t) = rank {
                let k = need(&coloring)?;
                let colors: BTreeSet<u32> = parse_face(&t)?.iter().collect();
                out.complex(&rank_selected(&l.complex, &k, &colors)?, None, None)?;
            }
            let mut show = |r: TheoremReport, out: &mut Out| {
                ok &= r.verdict != Verdict::Fails;
                if out.json {
                    out.report(&r);
                } else {
                    out.line(r.to_string());
                }
            };
            if check_rank_identity {
                let k = need(&coloring)?;
                let mut r = check_rank_selection_identity(&l.complex, &k, coeff.coeff);
                r.subject = l.name.clone().unwrap_or_default();
                show(r, out);
            }
            if check_lbt {
                let k = need(&coloring)?;
                let mut r = check_balanced_lbt(&l.complex, &k, coeff.coeff);
                r.subject = l.name.clone().unwrap_or_default();
                show(r, out);
            }
            return Ok(ok);
        }
        Command::Verify {
            claim,
            complex,
            other,
            i,
            d,
            s,
            v,
            probe,
            catalog,
            negative_controls,
            coeff,
        } => return verify(out, &claim, complex, other, (i, d, s, v), probe, catalog, negative_controls, coeff.coeff),
        Command::Iso { a, b } => {
            let (a, b) = (load(Some(&a))?.complex, load(Some(&b))?.complex);
            let iso = find_isomorphism(&a, &b);
            if out.json {
                out.line(json!({ "isomorphic": iso.is_some(), "map": iso.as_ref().map(|m| &m.map) }).to_string());
            } else if let Some(m) = &iso {
                let pairs: Vec<String> = m.map.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                out.line(format!("isomorphic: {}", pairs.join(" ")));
            } else {
                out.line("not isomorphic");
            }
            return Ok(iso.is_some());
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut Out,
    claim: &str,
    complex: Option<String>,
    other: Option<String>,
    (i, d, s, v): (Option<usize>, Option<usize>, Option<usize>, Option<u32>),
    probe: bool,
    catalog: Option<String>,
    negative_controls: bool,
    coeff: Coefficients,
) -> Outcome {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| InputError(anyhow!("--claim {claim} needs --{flag}")));
    let subject = |l: &LoadedComplex| l.name.clone().unwrap_or_else(|| complex.clone().unwrap_or_default());
    let reports: Vec<TheoremReport> = match claim {
        "suite" => {
            let items = if negative_controls {
                negative_control_catalog()
            } else if let Some(path) = &catalog {
                parse_catalog(&read_text(Some(path))?)?
            } else {
                default_catalog()
            };
            run_suite(&items, coeff)?
        }
        "lem32" => vec![check_lemma32(need(i, "i")?, need(d, "d")?, need(s, "s")?)],
        _ => {
            let l = load(complex.as_deref())?;
            let c = &l.complex;
            let mut r = match claim {
                "thm31-1" => check_thm31_part1(c, need(i, "i")?, coeff),
                "thm31-2" => check_thm31_part2(c, need(i, "i")?, coeff),
                "lem35" => {
                    let v = v.ok_or_else(|| InputError(anyhow!("--claim lem35 needs --v")))?;
                    check_lemma35(c, v)?
                }
                "thm41-1" => check_thm41_part1(c, coeff, probe),
                "consum-h" => {
                    let b = load(Some(other.as_deref().ok_or_else(|| anyhow!("--claim consum-h needs --other"))?))?;
                    check_connected_sum_h(c, &b.complex)
                }
                other => return Err(anyhow!("unknown claim {other:?}").into()),
            };
            r.subject = subject(&l);
            vec![r]
        }
    };
    for r in &reports {
        out.report(r);
    }
    Ok(suite_passes(&reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        json: cli.json,
        buf: io::stdout().lock(),
    };
    let result = run(cli, &mut out);
    let _ = out.buf.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
