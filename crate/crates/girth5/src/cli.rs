//! The `girth5` command line.  Each subcommand is a thin adapter over the
//! library.  Exit codes: 0 success, 1 verification failure, 2 usage or
//! input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use girth5_core::catalog::{
    cylinder_instances, make_chain, make_exceptional, make_mycielski, pentagonal_tube, six_ring_with_triangle,
    ChainEmbedding, ExceptionalClass,
};
use girth5_core::coloring::{extends, is_phi_critical, is_ring_critical, Precoloring};
use girth5_core::enumerate::{Search, SearchSpec, SearchTopology};
use girth5_core::regions::{cycle_class, Topology};
use girth5_core::weight::{face_weight, graph_weight};
use girth5_core::EmbeddedGraph;
use serde_json::json;

use crate::budget::Budget;
use crate::doc::{self, DocError};
use crate::parallel::Parallel;
use crate::report::exit_code;
use crate::suites;

#[derive(Parser, Debug)]
#[command(name = "girth5", version, about = "Embedded graphs with rings: coloring, weights, catalog, search and verification")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Extend a ring precoloring to a 3-coloring.
    Color(PhiArgs),
    /// Ring-criticality with witnesses; φ-criticality when a precoloring is given.
    Critical(PhiArgs),
    /// The weight w(G,R) and the per-face table.
    Weigh { file: PathBuf },
    /// Topological class of a cycle.
    ClassifyCycle {
        file: PathBuf,
        /// Vertex ids along the cycle, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<u32>,
    },
    /// Named graph families.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Exhaustive search for ring-critical graphs.
    Enumerate(EnumArgs),
    /// Run a verification suite, or `all`.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct PhiArgs {
    file: PathBuf,
    /// Ring precoloring `v=c,...`; overrides the document's.
    #[arg(long)]
    phi: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Write a family member as a graph document.
    Emit {
        #[command(subcommand)]
        family: Family,
        /// Write to this file instead of standard out.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// The (e1,e2)-chain with k steps.
    Chain {
        k: usize,
        #[arg(long, value_enum, default_value = "plane")]
        embedding: ChainKind,
    },
    /// An exceptional disk graph, class E0..E5.
    Exceptional {
        class: String,
        l: usize,
        #[arg(long, value_delimiter = ',')]
        offsets: Option<Vec<usize>>,
    },
    /// Mycielski graph of an odd cycle.
    Mycielski { l: usize },
    /// Cylinder of pentagons between two m-cycles.
    Tube { m: usize, belts: usize },
    /// A 6-ring with a triangle ring inside.
    SixRingTriangle,
    /// One of the cylinder instances used by the `concentric` suite.
    Instance { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChainKind {
    Plane,
    Klein,
    Broken,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Topo {
    Disk,
    Cylinder,
    OneRing,
}

#[derive(Args, Debug)]
struct EnumArgs {
    #[arg(long, value_enum)]
    topology: Topo,
    /// Ring length; give twice for a cylinder.
    #[arg(long = "ring", required = true)]
    rings: Vec<usize>,
    /// No cycle shorter than this.
    #[arg(long)]
    girth: Option<usize>,
    /// Forbid chords of the rings (always on for disks).
    #[arg(long)]
    induced_ring: bool,
    #[arg(long, default_value_t = 6)]
    max_internal: usize,
    #[arg(long, default_value_t = girth5_core::enumerate::DEFAULT_MAX_STATES)]
    max_states: usize,
    /// Directory for one document per instance plus index.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    /// Budget override `key=value` (repeatable).
    #[arg(long = "budget")]
    budgets: Vec<String>,
    /// Budget config file (TOML); unspecified keys keep their defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Shorthand for --budget grotzsch_n=N.
    #[arg(long)]
    n: Option<u64>,
    /// Shorthand for --budget grotzsch_trials=T.
    #[arg(long)]
    trials: Option<u64>,
    /// Write <suite>.json reports here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include elapsed time in JSON reports.
    #[arg(long)]
    timing: bool,
}

/// Runs the command line; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<(EmbeddedGraph, Option<Precoloring>)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    doc::load(&text).with_context(|| format!("in {}", path.display()))
}

fn phi_for(g: &EmbeddedGraph, doc_phi: Option<Precoloring>, flag: &Option<String>) -> anyhow::Result<Option<Precoloring>> {
    match flag {
        Some(s) => {
            let pairs = doc::parse_assignments(0, &[s.as_str()]).map_err(|e| match e {
                DocError::Syntax { msg, .. } => anyhow!("--phi: {msg}"),
                other => anyhow!(other),
            })?;
            Ok(Some(doc::precoloring_of(g, &pairs)?))
        }
        None => Ok(doc_phi),
    }
}

fn show_phi(g: &EmbeddedGraph, phi: &Precoloring) -> String {
    let parts: Vec<String> =
        phi.0.iter().enumerate().filter_map(|(v, c)| c.map(|c| format!("{}={c}", g.vertex_id(v)))).collect();
    parts.join(",")
}

fn phi_json(g: &EmbeddedGraph, phi: &Precoloring) -> serde_json::Value {
    let m: serde_json::Map<String, serde_json::Value> = phi
        .0
        .iter()
        .enumerate()
        .filter_map(|(v, c)| c.map(|c| (g.vertex_id(v).to_string(), json!(c))))
        .collect();
    serde_json::Value::Object(m)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Color(a) => {
            let (g, doc_phi) = read_graph(&a.file)?;
            let phi = phi_for(&g, doc_phi, &a.phi)?.unwrap_or_else(|| Precoloring(vec![None; g.n_vertices()]));
            let col = extends(&g, &phi)?;
            let col = col.map(|c| Precoloring(c.into_iter().map(Some).collect()));
            if json {
                let v = json!({ "extends": col.is_some(), "coloring": col.as_ref().map(|c| phi_json(&g, c)) });
                writeln!(out, "{v}")?;
            } else {
                match col {
                    Some(c) => writeln!(out, "extends: yes\ncoloring: {}", show_phi(&g, &c))?,
                    None => writeln!(out, "extends: no")?,
                }
            }
        }
        Cmd::Critical(a) => {
            let (g, doc_phi) = read_graph(&a.file)?;
            if let Some(phi) = phi_for(&g, doc_phi, &a.phi)? {
                let v = is_phi_critical(&g, &phi)?;
                if json {
                    writeln!(out, "{}", json!({ "phi_critical": v }))?;
                } else {
                    writeln!(out, "phi-critical: {v}")?;
                }
                return Ok(0);
            }
            let rep = is_ring_critical(&g);
            if json {
                let ws: Vec<_> = rep
                    .witnesses
                    .iter()
                    .map(|(e, w)| json!({ "edge": g.edge_id(*e), "witness": w.as_ref().map(|p| phi_json(&g, p)) }))
                    .collect();
                writeln!(out, "{}", json!({ "critical": rep.critical, "witnesses": ws }))?;
            } else {
                writeln!(out, "critical: {}", rep.critical)?;
                for (e, w) in &rep.witnesses {
                    match w {
                        Some(p) => writeln!(out, "edge {}: {}", g.edge_id(*e), show_phi(&g, p))?,
                        None => writeln!(out, "edge {}: no witness", g.edge_id(*e))?,
                    }
                }
            }
        }
        Cmd::Weigh { file } => {
            let (g, _) = read_graph(file)?;
            let w = graph_weight(&g);
            let rows: Vec<_> = g
                .faces()
                .iter()
                .enumerate()
                .filter(|(_, f)| !f.is_ring_face())
                .map(|(i, f)| (i, f.length, f.open_2cell, face_weight(f)))
                .collect();
            if json {
                let faces: Vec<_> = rows
                    .iter()
                    .map(|(i, l, o, w)| json!({ "face": i, "length": l, "open_2cell": o, "weight": w.to_string() }))
                    .collect();
                writeln!(out, "{}", json!({ "weight": w.to_string(), "faces": faces }))?;
            } else {
                writeln!(out, "w(G,R) = {w}")?;
                writeln!(out, "face  length  weight")?;
                for (i, l, o, fw) in rows {
                    let note = if o { "" } else { "  (not an open disk)" };
                    writeln!(out, "{i:>4}  {l:>6}  {fw}{note}")?;
                }
            }
        }
        Cmd::ClassifyCycle { file, cycle } => {
            let (g, _) = read_graph(file)?;
            let vs = cycle
                .iter()
                .map(|&v| g.vertex_index(v).ok_or_else(|| anyhow!("unknown vertex {v}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let c = cycle_class(&g, &vs).map_err(|e| anyhow!("{e}"))?;
            let topo = match &c.topology {
                Topology::Contractible => "contractible".to_string(),
                Topology::Surrounds(rs) => format!("surrounds rings {rs:?}"),
                Topology::SeparatingNoncontractible => "separating non-contractible".to_string(),
                Topology::Nonseparating => "non-separating".to_string(),
            };
            if json {
                writeln!(out, "{}", json!({ "topology": topo, "one_sided": c.one_sided, "separates": c.separates() }))?;
            } else {
                writeln!(out, "{topo}, {}", if c.one_sided { "one-sided" } else { "two-sided" })?;
            }
        }
        Cmd::Catalog { cmd: CatalogCmd::Emit { family, out: path } } => {
            let g = catalog_graph(family)?;
            let text = doc::emit_graph(&g);
            match path {
                Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Cmd::Enumerate(a) => enumerate(a, json, out)?,
        Cmd::Verify(a) => return verify(a, json, out),
    }
    Ok(0)
}

fn catalog_graph(f: &Family) -> anyhow::Result<EmbeddedGraph> {
    Ok(match f {
        Family::Chain { k, embedding } => {
            let e = match embedding {
                ChainKind::Plane => ChainEmbedding::Abstract,
                ChainKind::Klein => ChainEmbedding::CanonicalKlein,
                ChainKind::Broken => ChainEmbedding::BrokenCylinder,
            };
            make_chain(*k, e)?.graph
        }
        Family::Exceptional { class, l, offsets } => {
            let c = ExceptionalClass::ALL
                .into_iter()
                .find(|c| format!("{c:?}").eq_ignore_ascii_case(class))
                .ok_or_else(|| anyhow!("unknown class `{class}` (E0..E5)"))?;
            make_exceptional(c, *l, offsets.as_deref())?
        }
        Family::Mycielski { l } => make_mycielski(*l)?,
        Family::Tube { m, belts } => {
            if *m < 3 || *belts == 0 {
                bail!("tube needs m >= 3 and at least one belt");
            }
            pentagonal_tube(*m, *belts).0.to_embedded()?
        }
        Family::SixRingTriangle => six_ring_with_triangle(),
        Family::Instance { name } => cylinder_instances()
            .into_iter()
            .find(|i| &i.name == name)
            .map(|i| i.graph)
            .ok_or_else(|| anyhow!("unknown instance `{name}`"))?,
    })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn enumerate(a: &EnumArgs, json: bool, out: &mut dyn Write) -> anyhow::Result<()> {
    let n = a.max_internal;
    let mut spec = match (a.topology, a.rings.as_slice()) {
        (Topo::Disk, &[l]) => SearchSpec::disk(l, n),
        (Topo::Cylinder, &[l1, l2]) => SearchSpec::cylinder(l1, l2, n),
        (Topo::OneRing, &[l]) => SearchSpec::one_ring_cylinder(l, n),
        (t, r) => bail!("{t:?} takes {} ring length(s), got {}", if matches!(t, Topo::Cylinder) { 2 } else { 1 }, r.len()),
    };
    if let Some(gf) = a.girth {
        spec.girth_floor = gf;
    }
    // disks are induced already; the flag only adds the constraint
    spec.induced_ring |= a.induced_ring;
    spec.max_states = a.max_states;
    let outcome = Search::new(spec.clone())?.run(&Parallel::from_env())?;
    let topology = match spec.topology {
        SearchTopology::Disk => "disk",
        SearchTopology::Cylinder => "cylinder",
        SearchTopology::CylinderOneRing => "one-ring",
    };
    let mut entries = Vec::new();
    for (i, f) in outcome.found.iter().enumerate() {
        let g = &f.graph;
        let rep = is_ring_critical(g);
        let cert: Vec<_> = rep
            .witnesses
            .iter()
            .map(|(e, w)| json!({ "edge": g.edge_id(*e), "witness": w.as_ref().map(|p| phi_json(g, p)) }))
            .collect();
        let file = format!("{i:04}.graph");
        if let Some(dir) = &a.out {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(&file), doc::emit_graph(g))?;
        }
        entries.push(json!({
            "file": file,
            "key": hex(&f.key.to_bytes()),
            "vertices": g.n_vertices(),
            "edges": g.n_edges(),
            "critical": rep.critical,
            "certificate": cert,
        }));
    }
    let index = json!({
        "topology": topology,
        "rings": spec.ring_lengths,
        "girth": spec.girth_floor,
        "induced_ring": spec.induced_ring,
        "max_internal": spec.max_internal_vertices,
        "states": outcome.states,
        "count": entries.len(),
        "instances": entries,
    });
    if let Some(dir) = &a.out {
        std::fs::write(dir.join("index.json"), serde_json::to_string_pretty(&index)? + "\n")?;
    }
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&index)?)?;
    } else {
        writeln!(out, "{topology} rings {:?}: {} critical graphs ({} states)", spec.ring_lengths, outcome.found.len(), outcome.states)?;
        if a.out.is_none() {
            for (i, f) in outcome.found.iter().enumerate() {
                writeln!(out, "# instance {i}")?;
                out.write_all(doc::emit_graph(&f.graph).as_bytes())?;
            }
        }
    }
    Ok(())
}

fn verify(a: &VerifyArgs, json: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let mut budget = match &a.config {
        Some(p) => Budget::from_toml(&std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?,
        None => Budget::default(),
    };
    for kv in &a.budgets {
        budget.set(kv)?;
    }
    if let Some(n) = a.n {
        budget.set(&format!("grotzsch_n={n}"))?;
    }
    if let Some(t) = a.trials {
        budget.set(&format!("grotzsch_trials={t}"))?;
    }
    let reports = suites::run(&a.suite, &budget, &Parallel::from_env())?;
    if let Some(dir) = &a.out {
        std::fs::create_dir_all(dir)?;
        for r in &reports {
            std::fs::write(dir.join(format!("{}.json", r.suite)), r.to_json(a.timing) + "\n")?;
        }
    }
    if json {
        let text = match reports.as_slice() {
            [r] => r.to_json(a.timing),
            rs => {
                let parts: Vec<String> = rs.iter().map(|r| r.to_json(a.timing)).collect();
                format!("[\n{}\n]", parts.join(",\n"))
            }
        };
        writeln!(out, "{text}")?;
    } else {
        for r in &reports {
            write!(out, "{}", r.summary())?;
        }
    }
    Ok(exit_code(&reports))
}
