//! Command-line front end. [`run`] parses arguments, executes one verb and
//! writes the report; the binary only forwards the exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::amalgam::{AmalgamSplit, Side};
use crate::basis::SubmonoidSpec;
use crate::error::{Error, Result};
use crate::exactness::{self, ExactnessReport, Verdict, DEFAULT_HEADROOM};
use crate::graph::CommutationGraph;
use crate::resolution::{homological_dimension, homology_ranks, Complex};
use crate::trace::{levi_decompose, Presentation, Trace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNVERIFIED: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Parser, Debug)]
#[command(name = "tracehom", version, about = "Trace monoids and the homology of their monoid rings")]
pub struct Cli {
    /// Presentation file (TOML with `letters` and `commuting`)
    #[arg(long, global = true)]
    pub monoid: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Foata normal form of a word
    Nf { word: String },
    /// Whether two words represent the same trace
    Eq { u: String, v: String },
    /// Product of two traces
    Mul { u: String, v: String },
    /// Projection of a word onto a set of letters
    Proj { word: String, letters: String },
    /// Levi factorization of tu = vw
    Levi { t: String, u: String, v: String, w: String },
    /// Cliques of the commutation graph, by size
    Cliques,
    /// Generators and boundaries of the resolution
    Complex {
        /// Highest degree to print
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Ranks of H_n(M, Z)
    Homology,
    /// Bounds on the homological dimension
    Hdim,
    /// Factor a word as a·u with a in the submonoid generated by sigma0
    Decompose {
        #[arg(long)]
        sigma0: String,
        word: String,
    },
    /// Split the monoid over two non-commuting letters
    Amalgam {
        /// Basis representative on the M1 side for a preimage demonstration
        u: Option<String>,
        /// Basis representative on the M2 side
        v: Option<String>,
    },
    /// Certify exactness of the resolution on bounded lengths
    Verify {
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[arg(long, default_value_t = DEFAULT_HEADROOM)]
        headroom: usize,
        #[arg(long)]
        degree: Option<usize>,
    },
}

struct Report {
    text: String,
    structured: Value,
    status: i32,
}

impl Report {
    fn ok(text: impl Into<String>, structured: Value) -> Self {
        Report { text: text.into(), structured, status: EXIT_OK }
    }
}

fn trace(p: &Presentation, word: &str) -> Result<Trace> {
    Trace::parse(p, word)
}

fn execute(p: &Presentation, command: &Command) -> Result<Report> {
    Ok(match command {
        Command::Nf { word } => {
            let t = trace(p, word)?;
            Report::ok(t.to_string(), json!({ "normal_form": t.to_string() }))
        }
        Command::Eq { u, v } => {
            let equal = trace(p, u)? == trace(p, v)?;
            Report::ok(equal.to_string(), json!({ "equal": equal }))
        }
        Command::Mul { u, v } => {
            let t = trace(p, u)?.multiply(&trace(p, v)?)?;
            Report::ok(t.to_string(), json!({ "product": t.to_string() }))
        }
        Command::Proj { word, letters } => {
            let t = trace(p, word)?.project(p.letter_set(letters)?)?;
            Report::ok(t.to_string(), json!({ "projection": t.to_string() }))
        }
        Command::Levi { t, u, v, w } => {
            let [t, u, v, w] = [t, u, v, w].map(|x| trace(p, x));
            let (t, u, v, w) = (t?, u?, v?, w?);
            match levi_decompose(&t, &u, &v, &w)? {
                None => Report::ok("none", json!({ "equal": false })),
                Some(x) => Report::ok(
                    format!("p={} q={} r={} s={}", x.p, x.q, x.r, x.s),
                    json!({ "equal": true, "p": x.p.to_string(), "q": x.q.to_string(),
                            "r": x.r.to_string(), "s": x.s.to_string() }),
                ),
            }
        }
        Command::Cliques => {
            let graph = CommutationGraph::new(p);
            let by_size = graph.all_cliques();
            let rendered: Vec<Vec<String>> =
                by_size.iter().map(|cs| cs.iter().map(|c| c.render(p)).collect()).collect();
            let text = rendered.iter().enumerate().map(|(k, cs)| format!("{k}: {}", cs.join(" "))).collect::<Vec<_>>();
            Report::ok(
                text.join("\n"),
                json!({ "clique_number": graph.clique_number(), "cliques": rendered }),
            )
        }
        Command::Complex { degree } => {
            let complex = Complex::new(p, *degree);
            let mut lines = Vec::new();
            let mut degrees = Vec::new();
            for k in 0..=complex.max_degree() {
                lines.push(format!("F{k}: rank {}", complex.rank(k)));
                let mut boundaries = Vec::new();
                for &c in complex.generators(k).iter().filter(|c| !c.is_empty()) {
                    let d = complex.boundary_of_generator(c).to_string();
                    lines.push(format!("  d{} = {d}", c.render(p)));
                    boundaries.push(json!({ "generator": c.render(p), "boundary": d }));
                }
                degrees.push(json!({ "degree": k, "rank": complex.rank(k), "boundaries": boundaries }));
            }
            let dd = complex.verify_dd_zero();
            lines.push(format!("dd=0: {} ({} checked)", dd.passed(), dd.checked));
            Report::ok(
                lines.join("\n"),
                json!({ "degrees": degrees, "dd_zero": dd.passed(), "dd_checked": dd.checked }),
            )
        }
        Command::Homology => {
            let ranks = homology_ranks(p);
            let text: Vec<String> = ranks.iter().enumerate().map(|(i, r)| format!("H{}={r}", i + 1)).collect();
            Report::ok(text.join(" "), json!({ "ranks": ranks }))
        }
        Command::Hdim => {
            let b = homological_dimension(p);
            Report::ok(format!("upper={} lower={}", b.upper, b.lower), json!({ "upper": b.upper, "lower": b.lower }))
        }
        Command::Decompose { sigma0, word } => {
            let spec = SubmonoidSpec::parse(p, sigma0)?;
            let d = spec.decompose(&trace(p, word)?)?;
            let first = p.format_set(d.u.first_block());
            let s0 = p.format_set(spec.sigma0());
            let in_basis = spec.is_in_basis(&d.u);
            Report::ok(
                format!("a={} u={}\nfirst block of u {first} avoids sigma0 {s0}: {in_basis}", d.a, d.u),
                json!({ "a": d.a.to_string(), "u": d.u.to_string(), "rounds": d.rounds,
                        "first_block": first, "sigma0": s0, "in_basis": in_basis }),
            )
        }
        Command::Amalgam { u, v } => amalgam(p, u.as_deref(), v.as_deref())?,
        Command::Verify { max_length, headroom, degree } => verify(p, *max_length, *headroom, *degree),
    })
}

fn amalgam(p: &Presentation, u: Option<&str>, v: Option<&str>) -> Result<Report> {
    let split = AmalgamSplit::find(p).ok_or_else(|| Error::Parse("commutation graph is complete, no split exists".into()))?;
    let set = |side| p.format_set(split.sigma(side));
    let check = split.check_presentation();
    let mut lines = vec![
        format!("x={} y={}", p.name(split.x()), p.name(split.y())),
        format!("sigma0={} sigma1={} sigma2={}", set(Side::M0), set(Side::M1), set(Side::M2)),
        format!("presentation check: {check}"),
    ];
    let mut out = json!({
        "x": p.name(split.x()), "y": p.name(split.y()),
        "sigma0": set(Side::M0), "sigma1": set(Side::M1), "sigma2": set(Side::M2),
        "presentation_check": check,
    });
    match (u, v) {
        (None, None) => {}
        (Some(u), Some(v)) => {
            let (u, v) = (trace(p, u)?, trace(p, v)?);
            let w = split.preimage(&u, &v)?;
            let (left, right) = split.map_i(&w)?;
            lines.push(format!("preimage={w}"));
            lines.push(format!("i(preimage)=({left}, {right})"));
            out["preimage"] = json!(w.to_string());
            out["image"] = json!([left.to_string(), right.to_string()]);
        }
        _ => return Err(Error::Parse("amalgam takes either no words or both u and v".into())),
    }
    Ok(Report { text: lines.join("\n"), structured: out, status: EXIT_OK })
}

fn verify(p: &Presentation, max_length: usize, headroom: usize, degree: Option<usize>) -> Report {
    verify_report(&exactness::verify(p, max_length, headroom, degree), max_length, headroom)
}

fn verify_report(reports: &[ExactnessReport], max_length: usize, headroom: usize) -> Report {
    let all_pass = reports.iter().all(ExactnessReport::passed);
    let mut lines = Vec::new();
    let mut degrees = Vec::new();
    for r in reports {
        lines.push(format!(
            "degree {}: cells={} kernel={} boundary_rank={} image_rank={} pass={} inconclusive={} fail={} headroom_used={}",
            r.degree,
            r.cells,
            r.kernel_rank(),
            r.boundary_rank,
            r.image_rank,
            r.passes(),
            r.inconclusive(),
            r.failures(),
            r.headroom_used
        ));
        let unresolved: Vec<Value> = r
            .generators
            .iter()
            .filter(|g| !matches!(g.verdict, Verdict::Pass { .. }))
            .map(|g| json!({ "generator": g.generator.to_string(), "verdict": g.verdict.to_string() }))
            .collect();
        for g in &unresolved {
            lines.push(format!("  {}: {}", g["verdict"].as_str().unwrap_or_default(), g["generator"].as_str().unwrap_or_default()));
        }
        degrees.push(json!({
            "degree": r.degree, "cells": r.cells, "kernel_rank": r.kernel_rank(),
            "boundary_rank": r.boundary_rank, "image_rank": r.image_rank,
            "pass": r.passes(), "inconclusive": r.inconclusive(), "fail": r.failures(),
            "headroom_used": r.headroom_used, "unresolved": unresolved,
        }));
    }
    let verdict = if all_pass { "pass" } else if reports.iter().any(|r| r.failures() > 0) { "fail" } else { "inconclusive" };
    lines.push(format!("result: {verdict}"));
    Report {
        text: lines.join("\n"),
        structured: json!({
            "max_length": max_length, "headroom": headroom, "degrees": degrees, "result": verdict,
        }),
        status: if all_pass { EXIT_OK } else { EXIT_UNVERIFIED },
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let Some(path) = cli.monoid.as_ref() else {
        let _ = writeln!(err, "error: --monoid <path> is required");
        return EXIT_INPUT;
    };
    let report = Presentation::load(path).and_then(|p| execute(&p, &cli.command));
    match report {
        Ok(report) => {
            let written = match cli.format {
                Format::Text => writeln!(out, "{}", report.text),
                Format::Structured => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&report.structured).expect("json values serialize"))
                }
            };
            if written.is_err() {
                return EXIT_INPUT;
            }
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
