//! Command-line interface to the rigida workbench.
//!
//! Every subcommand reads the JSON formats defined in `rigida::io` (pass `-`
//! to read from standard input), prints a text or JSON report, and exits with
//! 0 on success/pass, 1 on a check failure (Jacobi defect, rank-criterion
//! failure, catalog verification failure, closure failure), or 2 on a usage
//! or input error.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rigida::algebraicity::{
    algebraicity_verdict, jordan_saturation, make_linear_algebra, Witness,
};
use rigida::catalog::{emit_payload, fixture_names, load_fixture, run_manifest, Payload};
use rigida::cohomology::{cohomology_report, orbit_dimension, vn_rigidity_check, RigidityVerdict};
use rigida::exactlin::QVector;
use rigida::io;
use rigida::jordan::jordan_chevalley;
use rigida::lie::LieLaw;
use rigida::rng::DEFAULT_SEED;
use rigida::structure::{rank_theorem_check, root_decomposition, TorusSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "rigida",
    version,
    about = "Exact rigidity and algebraicity diagnostics for Lie algebras given by rational structure constants"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Suppress informational detail; print only verdict lines.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Operations on Lie laws given by structure constants.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Operations on rational matrices.
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Operations on linear Lie algebras given by matrix generators.
    #[command(subcommand)]
    Linalg(LinalgCmd),
    /// The fixture catalog.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Debug, Subcommand)]
enum LieCmd {
    /// Check the Jacobi identity; exits 1 when defects exist.
    Check { file: String },
    /// Series dimensions, center, predicates, characteristic sequence.
    Invariants {
        file: String,
        /// Number of random sample vectors for the characteristic sequence.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Sampling seed (overrides RIGIDA_SEED).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Cohomological dimensions (degree 1, 2 or both).
    Cohomology {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: Option<u8>,
    },
    /// H² certificate, orbit dimension, and the open-orbit check in the
    /// space of skew maps.
    Rigidity { file: String },
    /// Transport the law by an invertible matrix; prints the new law.
    Transport {
        file: String,
        #[arg(long)]
        map: String,
    },
    /// Rank criterion for a solvable law with trivial center.
    RankTheorem {
        file: String,
        /// Torus as 1-based basis indices, e.g. --torus 1,2.
        #[arg(long)]
        torus: String,
    },
    /// Root-space decomposition with respect to a torus.
    Roots {
        file: String,
        #[arg(long)]
        torus: String,
    },
}

#[derive(Debug, Subcommand)]
enum MatrixCmd {
    /// Jordan–Chevalley decomposition M = S + N.
    Jordan { file: String },
}

#[derive(Debug, Subcommand)]
enum LinalgCmd {
    /// Verify commutator closure of the generators; prints the induced law.
    Check { file: String },
    /// Algebraicity verdict with certificate or witness.
    Algebraicity {
        file: String,
        /// Formal eigenvalue assignment for the torus part.
        #[arg(long)]
        eigenvalues: Option<String>,
    },
    /// Jordan saturation: adjoin semisimple/nilpotent parts and re-close.
    Saturate {
        file: String,
        #[arg(long, default_value_t = 8)]
        max_rounds: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCmd {
    /// List the registered fixtures.
    List,
    /// Show a fixture; --emit prints its payload in the file format.
    Show {
        name: String,
        #[arg(long)]
        emit: bool,
    },
    /// Run the expectation manifests; exits 1 on any failure.
    Verify {
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

/// Outcome of one subcommand: structured results, rendered text, exit code.
struct Outcome {
    results: Value,
    text: String,
    exit: u8,
}

fn read_input(path: &str) -> Result<(String, String)> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    let digest = fnv1a(text.as_bytes());
    Ok((text, digest))
}

fn fnv1a(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x1000_0000_01b3);
    }
    format!("{hash:016x}")
}

fn parse_law(text: &str) -> Result<LieLaw> {
    let sc = io::read_structure_constants(text).map_err(input_error)?;
    LieLaw::new(sc).map_err(|e| anyhow!("input is not a Lie law: {e}"))
}

fn input_error(e: io::IoError) -> anyhow::Error {
    anyhow!("{e}")
}

fn parse_torus(spec: &str, dim: usize) -> Result<TorusSpec> {
    let mut indices = Vec::new();
    for part in spec.split(',') {
        let idx: usize = part
            .trim()
            .parse()
            .map_err(|_| anyhow!("bad torus index {part:?}: expected a 1-based integer"))?;
        if idx < 1 || idx > dim {
            return Err(anyhow!("torus index {idx} out of range 1..={dim}"));
        }
        indices.push(idx - 1);
    }
    Ok(TorusSpec::new(indices))
}

fn vector_json(v: &QVector) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn matrix_json(m: &rigida::QMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": (0..m.rows())
            .map(|r| m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn run_lie(cmd: &LieCmd, quiet: bool) -> Result<(Outcome, String)> {
    match cmd {
        LieCmd::Check { file } => {
            let (text, digest) = read_input(file)?;
            let sc = io::read_structure_constants(&text).map_err(input_error)?;
            let defects = sc.jacobi_defect();
            let pass = defects.is_empty();
            let mut out = String::new();
            if pass {
                out.push_str("Jacobi identity holds: the table is a Lie law\n");
            } else {
                out.push_str(&format!("Jacobi identity fails at {} places\n", defects.len()));
                if !quiet {
                    for d in defects.iter().take(10) {
                        out.push_str(&format!(
                            "  triple ({}, {}, {}), coordinate {}: {}\n",
                            d.i + 1,
                            d.j + 1,
                            d.k + 1,
                            d.coord + 1,
                            d.value
                        ));
                    }
                    if defects.len() > 10 {
                        out.push_str(&format!("  ... and {} more\n", defects.len() - 10));
                    }
                }
            }
            let results = json!({
                "is_lie_law": pass,
                "defect_count": defects.len(),
                "defects": defects.iter().take(50).map(|d| json!({
                    "i": d.i + 1, "j": d.j + 1, "k": d.k + 1,
                    "coord": d.coord + 1, "value": d.value.to_string(),
                })).collect::<Vec<_>>(),
            });
            Ok((Outcome { results, text: out, exit: if pass { 0 } else { 1 } }, digest))
        }
        LieCmd::Invariants { file, samples, seed } => {
            let (text, digest) = read_input(file)?;
            let law = parse_law(&text)?;
            let seed = seed
                .or_else(|| std::env::var("RIGIDA_SEED").ok().and_then(|s| s.parse().ok()))
                .unwrap_or(DEFAULT_SEED);
            let series = law.series_dims();
            let center = law.center();
            let two_step = law.is_two_step();
            let charseq = if series.is_nilpotent() {
                Some(law.char_seq(*samples, seed).expect("law is nilpotent").0)
            } else {
                None
            };
            let mut out = format!(
                "dim {}\nderived series dims: {:?}\nlower central dims: {:?}\n",
                law.dim(),
                series.derived,
                series.lower_central
            );
            out.push_str(&format!(
                "nilpotent: {}, solvable: {}, two-step: {}\ncenter dim: {}\n",
                series.is_nilpotent(),
                series.is_solvable(),
                two_step,
                center.len()
            ));
            match &charseq {
                Some(seq) => out.push_str(&format!(
                    "characteristic sequence: {seq} (generic lower bound, {samples} samples, seed {seed})\n"
                )),
                None => out.push_str("characteristic sequence: (law is not nilpotent)\n"),
            }
            let results = json!({
                "dim": law.dim(),
                "derived_dims": series.derived,
                "lower_central_dims": series.lower_central,
                "nilpotent": series.is_nilpotent(),
                "solvable": series.is_solvable(),
                "nilindex": series.nilindex(),
                "two_step": two_step,
                "center_dim": center.len(),
                "char_seq": charseq.as_ref().map(|s| s.parts().to_vec()),
                "samples": samples,
                "seed": seed,
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
        LieCmd::Cohomology { file, degree } => {
            let (text, digest) = read_input(file)?;
            let law = parse_law(&text)?;
            let report = cohomology_report(&law);
            let mut out = String::new();
            if degree.is_none() || *degree == Some(1) {
                out.push_str(&format!(
                    "dim Der = {}, dim Inner = {}, dim H1 = {}\n",
                    report.dim_der, report.dim_inner, report.dim_h1
                ));
            }
            if degree.is_none() || *degree == Some(2) {
                out.push_str(&format!(
                    "dim Z2 = {}, dim B2 = {}, dim H2 = {}\n",
                    report.dim_z2, report.dim_b2, report.dim_h2
                ));
            }
            let results = json!({
                "dim_der": report.dim_der,
                "dim_inner": report.dim_inner,
                "dim_z2": report.dim_z2,
                "dim_b2": report.dim_b2,
                "dim_h1": report.dim_h1,
                "dim_h2": report.dim_h2,
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
        LieCmd::Rigidity { file } => {
            let (text, digest) = read_input(file)?;
            let law = parse_law(&text)?;
            let report = cohomology_report(&law);
            let orbit = orbit_dimension(&law);
            let vn = vn_rigidity_check(law.sc());
            let mut out = format!("dim H2 = {}\nverdict: {}\n", report.dim_h2, report.verdict);
            if report.verdict == RigidityVerdict::Inconclusive && !quiet {
                out.push_str("note: H² = 0 is sufficient for rigidity, not necessary\n");
            }
            out.push_str(&format!("orbit dimension: {orbit}\n"));
            out.push_str(&format!("orbit open in the full skew space: {vn}\n"));
            let results = json!({
                "dim_h2": report.dim_h2,
                "verdict": report.verdict.to_string(),
                "orbit_dim": orbit,
                "open_in_skew_space": vn,
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
        LieCmd::Transport { file, map } => {
            let (text, digest) = read_input(file)?;
            let sc = io::read_structure_constants(&text).map_err(input_error)?;
            let (map_text, _) = read_input(map)?;
            let f = io::read_matrix(&map_text).map_err(input_error)?;
            let transported = sc.transport(&f).map_err(|e| anyhow!("{e}"))?;
            let emitted = io::write_structure_constants(&transported);
            let results: Value = serde_json::from_str(&emitted)?;
            Ok((Outcome { results, text: format!("{emitted}\n"), exit: 0 }, digest))
        }
        LieCmd::RankTheorem { file, torus } => {
            let (text, digest) = read_input(file)?;
            let law = parse_law(&text)?;
            let spec = parse_torus(torus, law.dim())?;
            let report = rank_theorem_check(&law, &spec).map_err(|e| anyhow!("{e}"))?;
            let mut out = String::new();
            out.push_str(&format!(
                "regular vector: {} (kernel dim {})\n",
                report.regular.vector, report.regular.kernel_dim
            ));
            if !quiet {
                out.push_str("system S(T0):\n");
                out.push_str(&report.system.to_string());
            }
            out.push_str(&format!(
                "rank = {}, dim nilradical - 1 = {}\n{}\n",
                report.rank,
                report.expected,
                if report.pass { "PASS" } else { "FAIL (necessary condition violated)" }
            ));
            let results = json!({
                "regular_coefficients": vector_json(&report.regular.coefficients),
                "regular_vector": vector_json(&report.regular.vector),
                "kernel_dim": report.regular.kernel_dim,
                "equations": report.system.equations.iter().map(|eq| json!({
                    "lhs": [eq.lhs.0, eq.lhs.1],
                    "rhs": eq.rhs,
                })).collect::<Vec<_>>(),
                "labels": report.system.labels,
                "rank": report.rank,
                "expected": report.expected,
                "pass": report.pass,
            });
            Ok((Outcome { results, text: out, exit: if report.pass { 0 } else { 1 } }, digest))
        }
        LieCmd::Roots { file, torus } => {
            let (text, digest) = read_input(file)?;
            let law = parse_law(&text)?;
            let spec = parse_torus(torus, law.dim())?;
            let d = root_decomposition(&law, &spec).map_err(|e| anyhow!("{e}"))?;
            let mut out = format!(
                "torus dim {}, {} roots, zero-weight dim {}\n",
                d.torus_dim,
                d.roots.len(),
                d.zero_weight.len()
            );
            for (w, space) in &d.roots {
                out.push_str(&format!("  root {}: space dim {}\n", w, space.len()));
            }
            let results = json!({
                "torus_dim": d.torus_dim,
                "roots": d.roots.iter().map(|(w, space)| json!({
                    "weight": vector_json(w),
                    "space_dim": space.len(),
                    "space": space.iter().map(vector_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "zero_weight_dim": d.zero_weight.len(),
                "total_dim": d.total_dim(),
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
    }
}

fn run_matrix(cmd: &MatrixCmd) -> Result<(Outcome, String)> {
    match cmd {
        MatrixCmd::Jordan { file } => {
            let (text, digest) = read_input(file)?;
            let m = io::read_matrix(&text).map_err(input_error)?;
            let pair = jordan_chevalley(&m).map_err(|e| anyhow!("{e}"))?;
            let out = format!("{pair}\n");
            let results = json!({
                "semisimple": matrix_json(&pair.s),
                "nilpotent": matrix_json(&pair.n),
                "conductor": pair.conductor.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "iterations": pair.iterations,
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
    }
}

fn run_linalg(cmd: &LinalgCmd, quiet: bool) -> Result<(Outcome, String)> {
    match cmd {
        LinalgCmd::Check { file } => {
            let (text, digest) = read_input(file)?;
            let (ambient, gens) = io::read_generators(&text).map_err(input_error)?;
            match make_linear_algebra(ambient, gens) {
                Ok(alg) => {
                    let out = format!(
                        "closed: {} generators span a Lie subalgebra of gl({})\ninduced law: {}\n",
                        alg.dim(),
                        ambient,
                        alg.induced_law().sc()
                    );
                    let results = json!({
                        "closed": true,
                        "ambient": ambient,
                        "dim": alg.dim(),
                        "induced_law": serde_json::from_str::<Value>(
                            &io::write_structure_constants(alg.induced_law().sc())
                        )?,
                    });
                    Ok((Outcome { results, text: out, exit: 0 }, digest))
                }
                Err(e) => {
                    let out = format!("not a linear Lie algebra: {e}\n");
                    let results = json!({ "closed": false, "error": e.to_string() });
                    Ok((Outcome { results, text: out, exit: 1 }, digest))
                }
            }
        }
        LinalgCmd::Algebraicity { file, eigenvalues } => {
            let (text, digest) = read_input(file)?;
            let (ambient, gens) = io::read_generators(&text).map_err(input_error)?;
            let alg = make_linear_algebra(ambient, gens).map_err(|e| anyhow!("{e}"))?;
            let assignment = match eigenvalues {
                Some(path) => {
                    let (atext, _) = read_input(path)?;
                    Some(io::read_assignment(&atext).map_err(input_error)?)
                }
                None => None,
            };
            let verdict = algebraicity_verdict(&alg, assignment.as_ref());
            let mut out = format!("verdict: {}\nreason: {}\n", verdict.status, verdict.reason);
            let witness_json = match &verdict.witness {
                Some(Witness::JordanPart(w)) => {
                    if !quiet {
                        out.push_str(&format!(
                            "witness: {} part of the probe with coordinates {}\n",
                            w.part, w.probe_coords
                        ));
                    }
                    json!({
                        "kind": "jordan_part",
                        "part": w.part.to_string(),
                        "probe_coords": vector_json(&w.probe_coords),
                        "matrix": matrix_json(&w.part_matrix),
                    })
                }
                Some(Witness::ReplicaMatrix { tuple, matrix }) => {
                    if !quiet {
                        out.push_str(&format!("witness replica eigenvalues: {tuple}\n"));
                    }
                    json!({
                        "kind": "replica_matrix",
                        "tuple": vector_json(tuple),
                        "matrix": matrix_json(matrix),
                    })
                }
                Some(Witness::ReplicaTuple { tuple }) => {
                    if !quiet {
                        out.push_str(&format!("witness replica eigenvalue tuple: {tuple}\n"));
                    }
                    json!({ "kind": "replica_tuple", "tuple": vector_json(tuple) })
                }
                None => Value::Null,
            };
            let results = json!({
                "status": verdict.status.to_string(),
                "reason": verdict.reason,
                "witness": witness_json,
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
        LinalgCmd::Saturate { file, max_rounds } => {
            let (text, digest) = read_input(file)?;
            let (ambient, gens) = io::read_generators(&text).map_err(input_error)?;
            let alg = make_linear_algebra(ambient, gens).map_err(|e| anyhow!("{e}"))?;
            let before = alg.dim();
            let sat = jordan_saturation(&alg, *max_rounds).map_err(|e| anyhow!("{e}"))?;
            let out = format!(
                "dimension {} -> {} in {} rounds (fixed point: {})\n{}\n",
                before,
                sat.algebra.dim(),
                sat.rounds,
                sat.fixed_point,
                io::write_generators(sat.algebra.ambient(), sat.algebra.basis())
            );
            let results = json!({
                "dim_before": before,
                "dim_after": sat.algebra.dim(),
                "rounds": sat.rounds,
                "fixed_point": sat.fixed_point,
                "generators": serde_json::from_str::<Value>(
                    &io::write_generators(sat.algebra.ambient(), sat.algebra.basis())
                )?,
            });
            Ok((Outcome { results, text: out, exit: 0 }, digest))
        }
    }
}

fn run_catalog(cmd: &CatalogCmd, quiet: bool) -> Result<(Outcome, String)> {
    match cmd {
        CatalogCmd::List => {
            let mut out = String::new();
            let mut names = Vec::new();
            for name in fixture_names() {
                let fixture = load_fixture(name).expect("registered name loads");
                out.push_str(&format!("{name:14} {}\n", fixture.description));
                names.push(json!({ "name": name, "description": fixture.description }));
            }
            Ok((Outcome { results: json!({ "fixtures": names }), text: out, exit: 0 }, fnv1a(b"")))
        }
        CatalogCmd::Show { name, emit } => {
            let fixture = load_fixture(name).map_err(|e| anyhow!("{e}"))?;
            let payload = emit_payload(&fixture);
            if *emit {
                return Ok((
                    Outcome {
                        results: serde_json::from_str(&payload)?,
                        text: format!("{payload}\n"),
                        exit: 0,
                    },
                    fnv1a(name.as_bytes()),
                ));
            }
            let kind = match &fixture.payload {
                Payload::Law(_) => "law",
                Payload::Skew(_) => "skew table",
                Payload::Linear(_) => "linear Lie algebra",
                Payload::Cochain { .. } => "cochain",
                Payload::Assignment { .. } => "eigenvalue assignment",
            };
            let mut out = format!("{}: {}\nkind: {kind}\n", fixture.name, fixture.description);
            if !quiet {
                out.push_str(&format!("expectations: {}\n", fixture.expectations.len()));
            }
            let results = json!({
                "name": fixture.name,
                "description": fixture.description,
                "kind": kind,
                "expectation_count": fixture.expectations.len(),
            });
            Ok((Outcome { results, text: out, exit: 0 }, fnv1a(name.as_bytes())))
        }
        CatalogCmd::Verify { name, all } => {
            let names: Vec<String> = if *all {
                fixture_names().into_iter().map(String::from).collect()
            } else {
                match name {
                    Some(n) => vec![n.clone()],
                    None => return Err(anyhow!("catalog verify needs NAME or --all")),
                }
            };
            let mut out = String::new();
            let mut reports = Vec::new();
            let mut all_pass = true;
            for n in &names {
                let fixture = load_fixture(n).map_err(|e| anyhow!("{e}"))?;
                let report = run_manifest(&fixture);
                all_pass &= report.all_pass();
                if quiet {
                    out.push_str(&format!(
                        "{}: {}\n",
                        report.fixture,
                        if report.all_pass() { "pass" } else { "FAIL" }
                    ));
                } else {
                    out.push_str(&report.to_string());
                }
                reports.push(json!({
                    "fixture": report.fixture,
                    "pass": report.all_pass(),
                    "properties": report.results.iter().map(|r| json!({
                        "property": r.property,
                        "provenance": r.provenance.to_string(),
                        "pass": r.pass,
                        "detail": r.detail,
                    })).collect::<Vec<_>>(),
                }));
            }
            Ok((
                Outcome {
                    results: json!({ "reports": reports, "all_pass": all_pass }),
                    text: out,
                    exit: if all_pass { 0 } else { 1 },
                },
                fnv1a(b"catalog"),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command_echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let outcome = match &cli.command {
        Command::Lie(cmd) => run_lie(cmd, cli.quiet),
        Command::Matrix(cmd) => run_matrix(cmd),
        Command::Linalg(cmd) => run_linalg(cmd, cli.quiet),
        Command::Catalog(cmd) => run_catalog(cmd, cli.quiet),
    };
    match outcome {
        Ok((outcome, digest)) => {
            match cli.format {
                Format::Text => print!("{}", outcome.text),
                Format::Json => {
                    let report = json!({
                        "command": command_echo,
                        "input_digest": digest,
                        "results": outcome.results,
                        "timing_ms": started.elapsed().as_secs_f64() * 1e3,
                    });
                    println!("{}", serde_json::to_string_pretty(&report).expect("valid JSON"));
                }
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
