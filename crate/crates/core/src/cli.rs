//! The `wonderkit` command line: argument parsing, dispatch and rendering.

use crate::diagorbits::{base_orbit_dim, g2_table, minuscule_classify, two_root_classify};
use crate::dot::digraph;
use crate::error::{default_cap, Error, Result};
use crate::nodeset::NodeSet;
use crate::pieces::Pieces;
use crate::report::ReportDocument;
use crate::reps::{dim_weyl, WeightSystem};
use crate::rootsys::{parse_type, Family, RootSystem};
use crate::torus::{boundary_components, exponent_matrix, maximal_boundary_strata, monomial, normality_check_a, torus_orbit_poset};
use crate::traces::conjecture::conjecture_scan;
use crate::traces::lemmas::lemma_suite;
use crate::verify;
use crate::weyl::Weyl;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "wonderkit", version, about = "Exact combinatorics of wonderful compactifications")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Enumeration cap; defaults to WONDERKIT_CAP or 10000000.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    /// Record wall time in the report metadata.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArg {
    /// Root system type such as A3, B2xA1 or, with --max-rank, a family letter.
    #[arg(long = "type")]
    pub type_spec: String,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArg {
    /// Highest weight in fundamental-weight coordinates, e.g. 0,1,0.
    #[arg(long, conflicts_with = "node")]
    pub highest: Option<String>,
    /// Fundamental weight index (1-based).
    #[arg(long)]
    pub node: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all roots.
    Roots(TypeArg),
    #[command(subcommand)]
    Weyl(WeylCmd),
    #[command(subcommand)]
    Reps(RepsCmd),
    #[command(subcommand)]
    Orbits(OrbitsCmd),
    #[command(subcommand)]
    Pieces(PiecesCmd),
    #[command(subcommand)]
    Torus(TorusCmd),
    #[command(subcommand)]
    Conjecture(ConjectureCmd),
    /// Run every acceptance criterion.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
        samples: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    Enumerate {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Minimal left coset representatives for the parabolic subgroup on --gens.
    Cosets {
        #[command(flatten)]
        t: TypeArg,
        /// Generator labels, e.g. 1,3.
        #[arg(long, default_value = "")]
        gens: String,
    },
    DoubleCosets {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, default_value = "")]
        gens: String,
    },
    BruhatDot {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        max_length: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepsCmd {
    Weights {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArg,
    },
    Dim {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArg,
    },
    PosetDot {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum OrbitsCmd {
    Minuscule {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        node: usize,
    },
    TwoRoot {
        #[command(flatten)]
        t: TypeArg,
        /// Two non-adjacent node labels, e.g. 1,3.
        #[arg(long)]
        nodes: String,
    },
    G2Table,
}

#[derive(Subcommand, Debug)]
pub enum PiecesCmd {
    CentralFiber {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        only_maximal: bool,
    },
    ISeq {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    Maximal {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    Closure {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        only_maximal: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum TorusCmd {
    Exponents {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArg,
    },
    Boundary {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        node: usize,
    },
    Normality {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long, default_value_t = 8)]
        bound: i64,
    },
    OrbitPosetDot {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConjectureCmd {
    Scan {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    Lemmas {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// A finished command: the report, optional custom renderings and the exit code.
pub struct Output {
    pub doc: ReportDocument,
    pub table: Option<String>,
    pub dot: Option<String>,
    pub exit: i32,
}

impl Output {
    fn new(doc: ReportDocument) -> Self {
        Output { doc, table: None, dot: None, exit: 0 }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.doc.to_json()),
            Format::Csv => Ok(self.doc.to_csv()),
            Format::Dot => self.dot.clone().ok_or_else(|| Error::Unsupported("no DOT output for this command".into())),
            Format::Table => Ok(self.table.clone().or_else(|| self.dot.clone()).unwrap_or_else(|| self.doc.to_table())),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn labels(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad node label '{x}'"))))
        .collect()
}

fn node_set(rs: &RootSystem, s: &str) -> Result<NodeSet> {
    let ls = labels(s)?;
    for &l in &ls {
        if l == 0 {
            return Err(Error::NodeOutOfRange(0, rs.rank));
        }
        rs.check_node(l - 1)?;
    }
    Ok(NodeSet::from_labels(ls))
}

fn node(rs: &RootSystem, label: usize) -> Result<usize> {
    if label == 0 {
        return Err(Error::NodeOutOfRange(0, rs.rank));
    }
    rs.check_node(label - 1)?;
    Ok(label - 1)
}

fn weight(rs: &RootSystem, w: &WeightArg) -> Result<Vec<i64>> {
    match (&w.highest, w.node) {
        (Some(h), _) => {
            let v: Vec<i64> = h
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight entry '{x}'"))))
                .collect::<Result<_>>()?;
            if v.len() != rs.rank || v.iter().any(|&x| x < 0) {
                return Err(Error::Parse(format!("need {} nonnegative entries", rs.rank)));
            }
            Ok(v)
        }
        (None, Some(k)) => Ok(rs.fundamental_weight(node(rs, k)?)),
        (None, None) => Err(Error::Parse("give --highest or --node".into())),
    }
}

/// A single type, or a family letter with `--max-rank` expanded over valid ranks.
fn type_series(spec: &str, max_rank: Option<usize>) -> Result<Vec<RootSystem>> {
    let s = spec.trim();
    let mut chars = s.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        let fam = Family::from_letter(c).ok_or_else(|| Error::Parse(format!("unknown family '{c}'")))?;
        let max = max_rank.ok_or_else(|| Error::Parse("a family letter needs --max-rank".into()))?;
        return Ok((1..=max).filter(|&l| fam.valid_rank(l)).map(|l| RootSystem::new(&format!("{c}{l}"))).collect::<Result<_>>()?);
    }
    parse_type(s)?;
    Ok(vec![RootSystem::new(s)?])
}

fn weight_label(w: &[i64]) -> String {
    let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

fn run_command(cmd: &Command, cap: u128) -> Result<Output> {
    match cmd {
        Command::Roots(t) => {
            let rs = RootSystem::new(&t.type_spec)?;
            let mut doc = ReportDocument::new("roots", Some(rs.name()));
            for r in rs.roots() {
                doc.push(&json!({
                    "root": r,
                    "weight": rs.root_to_weight(&r),
                    "height": RootSystem::height(&r),
                    "norm": rs.root_norm(&r),
                }));
            }
            Ok(Output::new(doc))
        }
        Command::Weyl(c) => run_weyl(c, cap),
        Command::Reps(c) => run_reps(c, cap),
        Command::Orbits(c) => run_orbits(c, cap),
        Command::Pieces(c) => run_pieces(c, cap),
        Command::Torus(c) => run_torus(c),
        Command::Conjecture(c) => run_conjecture(c, cap),
        Command::Verify { seed, samples } => {
            let results = verify::run_all(*seed, *samples);
            let mut doc = ReportDocument::new("verify", None);
            doc.metadata.seed = Some(*seed);
            let mut table = String::new();
            for r in &results {
                doc.push(r);
                table.push_str(&verify::format_line(r));
                table.push('\n');
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            table.push_str(&format!("{} of {} criteria passed\n", results.len() - failed, results.len()));
            let mut out = Output::new(doc);
            out.table = Some(table);
            out.exit = if failed > 0 { 1 } else { 0 };
            Ok(out)
        }
    }
}

fn run_weyl(c: &WeylCmd, cap: u128) -> Result<Output> {
    let elems_of = |rs: &RootSystem, ml: Option<usize>| -> Result<Vec<_>> {
        let weyl = Weyl::new(rs);
        match ml {
            Some(l) => Ok(weyl.enumerate_up_to_length(l)),
            None => weyl.enumerate_group(cap),
        }
    };
    match c {
        WeylCmd::Enumerate { t, max_length } | WeylCmd::BruhatDot { t, max_length } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let weyl = Weyl::new(&rs);
            let elems = elems_of(&rs, *max_length)?;
            let name = if matches!(c, WeylCmd::Enumerate { .. }) { "weyl enumerate" } else { "weyl bruhat-dot" };
            let mut doc = ReportDocument::new(name, Some(rs.name()));
            for (i, w) in elems.iter().enumerate() {
                doc.push(&json!({"index": i, "element": weyl.label(w), "word": weyl.reduced_labels(w), "length": w.length()}));
            }
            let mut out = Output::new(doc);
            if matches!(c, WeylCmd::BruhatDot { .. }) {
                let names: Vec<String> = elems.iter().map(|w| weyl.label(w)).collect();
                out.dot = Some(digraph(&format!("bruhat {}", rs.name()), &names, &weyl.bruhat_covers(&elems)));
            }
            Ok(out)
        }
        WeylCmd::Cosets { t, gens } | WeylCmd::DoubleCosets { t, gens } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let weyl = Weyl::new(&rs);
            let g = node_set(&rs, gens)?;
            let double = matches!(c, WeylCmd::DoubleCosets { .. });
            let reps = if double { weyl.min_double_coset_reps(g, cap)? } else { weyl.min_coset_reps(g, cap)? };
            let mut doc = ReportDocument::new(if double { "weyl double-cosets" } else { "weyl cosets" }, Some(rs.name()));
            for w in &reps {
                doc.push(&json!({"element": weyl.label(w), "word": weyl.reduced_labels(w), "length": w.length()}));
            }
            Ok(Output::new(doc))
        }
    }
}

fn run_reps(c: &RepsCmd, cap: u128) -> Result<Output> {
    let (t, w, name) = match c {
        RepsCmd::Weights { t, w } => (t, w, "reps weights"),
        RepsCmd::Dim { t, w } => (t, w, "reps dim"),
        RepsCmd::PosetDot { t, w } => (t, w, "reps poset-dot"),
    };
    let rs = RootSystem::new(&t.type_spec)?;
    let lambda = weight(&rs, w)?;
    let mut doc = ReportDocument::new(name, Some(rs.name()));
    if let RepsCmd::Dim { .. } = c {
        let weyl_dim = dim_weyl(&rs, &lambda)?;
        let ws = WeightSystem::with_cap(&rs, &lambda, cap)?;
        doc.push(&json!({"highest": lambda, "dim_weyl": weyl_dim as u64, "dim_freudenthal": ws.dim}));
        return Ok(Output::new(doc));
    }
    let ws = WeightSystem::with_cap(&rs, &lambda, cap)?;
    for e in &ws.entries {
        doc.push(&json!({"weight": e.weight, "mult": e.mult, "depth": e.depth_coords}));
    }
    let mut out = Output::new(doc);
    if let RepsCmd::PosetDot { .. } = c {
        let names: Vec<String> = ws
            .entries
            .iter()
            .map(|e| if e.mult > 1 { format!("{} x{}", weight_label(&e.weight), e.mult) } else { weight_label(&e.weight) })
            .collect();
        out.dot = Some(digraph(&format!("weights {}", weight_label(&lambda)), &names, &ws.weight_poset()));
    }
    Ok(out)
}

const BASE_DIM_NOTE: &str = "base dimensions follow the root count, which equals dim G - l - 2 - l(w); \
                             the reading dim G - l - l(w) contradicts the family dimensions";

fn run_orbits(c: &OrbitsCmd, cap: u128) -> Result<Output> {
    match c {
        OrbitsCmd::Minuscule { t, node: n } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let weyl = Weyl::new(&rs);
            let i = node(&rs, *n)?;
            let mut doc = ReportDocument::new("orbits minuscule", Some(rs.name()));
            for w in weyl.min_double_coset_reps(NodeSet::single(i), cap)? {
                let cl = minuscule_classify(&rs, i, &w)?;
                doc.push(&json!({
                    "i": i + 1,
                    "w": weyl.label(&w),
                    "length": w.length(),
                    "kind": cl.kind,
                    "base_dim": cl.base_dim,
                    "regular": cl.has_regular(),
                    "families": cl.families,
                }));
            }
            doc.warn(BASE_DIM_NOTE);
            Ok(Output::new(doc))
        }
        OrbitsCmd::TwoRoot { t, nodes } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let weyl = Weyl::new(&rs);
            let ns = labels(nodes)?;
            if ns.len() != 2 {
                return Err(Error::Parse("--nodes needs exactly two labels".into()));
            }
            let (i, j) = (node(&rs, ns[0])?, node(&rs, ns[1])?);
            let levi = NodeSet::from_nodes([i, j]);
            let mut doc = ReportDocument::new("orbits two-root", Some(rs.name()));
            for w in weyl.min_double_coset_reps(levi, cap)? {
                let cl = two_root_classify(&rs, i, j, &w)?;
                doc.push(&json!({
                    "nodes": [i + 1, j + 1],
                    "w": weyl.label(&w),
                    "length": w.length(),
                    "kind": cl.kind,
                    "base_dim": base_orbit_dim(&rs, levi, &w)?,
                }));
            }
            Ok(Output::new(doc))
        }
        OrbitsCmd::G2Table => {
            let mut doc = ReportDocument::new("orbits g2-table", Some("G2".into()));
            for r in g2_table() {
                doc.push(&r);
            }
            doc.warn(BASE_DIM_NOTE);
            Ok(Output::new(doc))
        }
    }
}

fn piece_dot(p: &Pieces, ps: &[crate::pieces::StablePiece], cap: u128) -> Result<String> {
    let n = ps.len();
    let mut leq = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            leq[a][b] = a != b && p.closure_leq(&ps[a], &ps[b], cap)?;
        }
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if leq[a][b] && !(0..n).any(|c| leq[a][c] && leq[c][b]) {
                edges.push((a, b));
            }
        }
    }
    let names: Vec<String> = ps
        .iter()
        .map(|q| format!("J={:?} w={} dim={}", q.j.labels(), p.weyl.label(&q.w), q.dim))
        .collect();
    Ok(digraph(&format!("pieces {}", p.rs.name()), &names, &edges))
}

fn run_pieces(c: &PiecesCmd, cap: u128) -> Result<Output> {
    match c {
        PiecesCmd::CentralFiber { t, max_length, only_maximal } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let p = Pieces::new(&rs);
            let ps = if *only_maximal { p.maximal_pieces().1 } else { p.central_fiber_pieces(*max_length, cap)? };
            let mut doc = ReportDocument::new("pieces central-fiber", Some(rs.name()));
            for q in &ps {
                doc.push(&p.row(q));
            }
            Ok(Output::new(doc))
        }
        PiecesCmd::ISeq { t, max_rank } => {
            let mut doc = ReportDocument::new("pieces i-seq", Some(t.type_spec.clone()));
            let mut table = String::new();
            for rs in type_series(&t.type_spec, *max_rank)? {
                let i = Pieces::new(&rs).i_g();
                doc.push(&json!({"type": rs.name(), "i_G": i as u64}));
                table.push_str(&format!("{}: {i}\n", rs.name()));
            }
            let mut out = Output::new(doc);
            out.table = Some(table);
            Ok(out)
        }
        PiecesCmd::Maximal { t, max_rank } => {
            let mut doc = ReportDocument::new("pieces maximal", Some(t.type_spec.clone()));
            for rs in type_series(&t.type_spec, *max_rank)? {
                let p = Pieces::new(&rs);
                let (m, ps) = p.maximal_pieces();
                let rows: Vec<_> = ps.iter().map(|q| p.row(q)).collect();
                doc.push(&json!({"type": rs.name(), "m_G": m, "count": ps.len(), "pieces": rows}));
            }
            Ok(Output::new(doc))
        }
        PiecesCmd::Closure { t, only_maximal } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let p = Pieces::new(&rs);
            let ps = if *only_maximal { p.closure_maximal_central_pieces(cap)? } else { p.central_fiber_pieces(None, cap)? };
            let mut doc = ReportDocument::new("pieces closure", Some(rs.name()));
            for q in &ps {
                doc.push(&p.row(q));
            }
            let mut out = Output::new(doc);
            out.dot = Some(piece_dot(&p, &ps, cap)?);
            out.table = Some(out.doc.to_table());
            Ok(out)
        }
    }
}

fn run_torus(c: &TorusCmd) -> Result<Output> {
    match c {
        TorusCmd::Exponents { t, w } | TorusCmd::OrbitPosetDot { t, w } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let lambda = weight(&rs, w)?;
            let em = exponent_matrix(&rs, &lambda)?;
            let dot = matches!(c, TorusCmd::OrbitPosetDot { .. });
            let mut doc =
                ReportDocument::new(if dot { "torus orbit-poset-dot" } else { "torus exponents" }, Some(rs.name()));
            let out = if dot {
                let poset = torus_orbit_poset(&em, rs.rank);
                let names: Vec<String> = poset.orbits.iter().map(|o| format!("{:?}", o.subsets)).collect();
                for (k, o) in poset.orbits.iter().enumerate() {
                    doc.push(&json!({"orbit": k, "subsets": o.subsets, "surviving": o.surviving}));
                }
                let mut out = Output::new(doc);
                out.dot = Some(digraph(&format!("torus orbits {}", weight_label(&lambda)), &names, &poset.covers));
                out
            } else {
                for (r, row) in em.rows.iter().enumerate() {
                    doc.push(&json!({
                        "weight": em.weights[r],
                        "mult": em.mults[r],
                        "exponents": row,
                        "monomial": monomial(row),
                    }));
                }
                Output::new(doc)
            };
            Ok(out)
        }
        TorusCmd::Boundary { t, node: n } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let k = node(&rs, *n)?;
            let rep = boundary_components(&rs, k)?;
            let em = exponent_matrix(&rs, &rs.fundamental_weight(k))?;
            let strata = maximal_boundary_strata(&em, rs.rank);
            let mut doc = ReportDocument::new("torus boundary", Some(rs.name()));
            if !rep.consistent {
                doc.warn(format!(
                    "the count a_G - 1 = {} disagrees with the listed end-node strata ({})",
                    rep.stated_count,
                    rep.components.len()
                ));
            }
            doc.push(&json!({"report": rep, "maximal_strata": strata}));
            Ok(Output::new(doc))
        }
        TorusCmd::Normality { t, max_rank, node: n, bound } => {
            let mut doc = ReportDocument::new("torus normality", Some(t.type_spec.clone()));
            for rs in type_series(&t.type_spec, *max_rank)? {
                let ks: Vec<usize> = match n {
                    Some(n) => vec![node(&rs, *n)?],
                    None => (0..rs.rank).collect(),
                };
                for k in ks {
                    let r = normality_check_a(&rs, k, *bound)?;
                    doc.push(&json!({
                        "type": rs.name(),
                        "k": r.k,
                        "height_bound": r.height_bound,
                        "points_checked": r.points_checked,
                        "ok": r.ok(),
                        "mismatches": r.mismatches,
                    }));
                }
            }
            Ok(Output::new(doc))
        }
    }
}

fn run_conjecture(c: &ConjectureCmd, cap: u128) -> Result<Output> {
    match c {
        ConjectureCmd::Scan { t, samples, seed } => {
            let rs = RootSystem::new(&t.type_spec)?;
            let rep = conjecture_scan(&rs, *samples, *seed, cap)?;
            let mut doc = ReportDocument::new("conjecture scan", Some(rs.name()));
            doc.metadata.seed = Some(*seed);
            if rep.exploratory {
                doc.warn("no proof is known for this type; the scan is exploratory");
            }
            let table = format!(
                "type {}  samples {}  seed {}\ncounterexamples {}\npositive controls {} ({})\n\
                 weyl-related pairs {}, unrelated {}\nsamples with a vanishing fundamental character {}\n",
                rep.type_name,
                rep.samples,
                rep.seed,
                rep.counterexamples.len(),
                rep.positives,
                if rep.positives_ok { "all detected" } else { "missed" },
                rep.related_pairs,
                rep.unrelated_pairs,
                rep.vanishing_character_samples,
            );
            doc.push(&rep);
            let mut out = Output::new(doc);
            out.table = Some(table);
            Ok(out)
        }
        ConjectureCmd::Lemmas { seed } => {
            let mut doc = ReportDocument::new("conjecture lemmas", None);
            doc.metadata.seed = Some(*seed);
            let rows = lemma_suite(*seed);
            let failed = rows.iter().any(|r| !r.ok());
            for r in &rows {
                doc.push(r);
            }
            let mut out = Output::new(doc);
            out.exit = if failed { 1 } else { 0 };
            Ok(out)
        }
    }
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Result<Output> {
    let cap = cli.global.cap.unwrap_or_else(default_cap);
    let start = Instant::now();
    let mut out = run_command(&cli.command, cap)?;
    if cli.global.timing {
        out.doc.metadata.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(out)
}

/// Parse, run and print; returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = run(&cli).and_then(|out| out.render(cli.global.format).map(|s| (s, out.exit)));
    match result {
        Ok((text, exit)) => {
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
