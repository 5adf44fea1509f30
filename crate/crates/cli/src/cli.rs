//! Argument handling, command dispatch and rendering.
//!
//! [`run`] never touches the process streams; it returns the exit status
//! and both outputs so the binary and the tests share one code path.

use std::ffi::OsString;
use std::fmt::Write as _;

use artin_core::amalgam::{decomposition_tree_with, Strategy};
use artin_core::classify::is_spherical_set;
use artin_core::structure::{
    center_description_with, torsion_certificate_with, verify_center_description,
    verify_torsion_certificate, CenterDerivation, ComponentCenter, LeafStatus, SubCase,
    SubCaseBasis, TorsionNode, TrivialBasis,
};
use artin_core::{
    classify, CoxeterGraph, DecompositionTree, GroupWord, Limits, SplitPolicy, VertexSet,
    WordProblemSolver,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::parse_graph;
use crate::json::{
    CenterDoc, ClassificationDoc, Document, MembershipDoc, StepDoc, TorsionDoc, TreeDoc,
    WordProblemDoc,
};

pub const EXIT_OK: i32 = 0;
/// `verify` rejected the document, or an internal check failed.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "artin",
    version,
    about = "Artin-Tits groups from Coxeter graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print spherical / FC / large / 2-dimensional flags and components.
    Classify(Common),
    /// Decide whether a word is trivial.
    Wp {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
        /// Print the syllabic reduction steps at the root amalgam.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Rewrite a word over a vertex subset, or report NOT-MEMBER.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
        /// Whitespace-separated vertex names.
        #[arg(long)]
        subset: String,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Describe the centre, component by component.
    Center(Common),
    /// Certify torsion freeness along the decomposition tree.
    Torsion {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Split::First)]
        split: Split,
    },
    /// Print the decomposition tree along infinite edges.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Split::First)]
        split: Split,
    },
    /// Re-check a JSON document emitted by another command.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Path of the JSON document.
        #[arg(long)]
        document: String,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Graph file.
    #[arg(long)]
    graph: String,
    /// Emit a JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Maximum number of Coxeter group elements enumerated per group.
    #[arg(long, value_name = "N")]
    cap_elements: Option<usize>,
    /// Maximum number of words in one braid-move closure.
    #[arg(long, value_name = "N")]
    cap_words: Option<usize>,
    /// Maximum number of letters in an input word.
    #[arg(long, value_name = "N")]
    cap_word_len: Option<usize>,
}

impl Common {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_elements: self.cap_elements.unwrap_or(d.max_elements),
            max_words: self.cap_words.unwrap_or(d.max_words),
            max_word_len: self.cap_word_len.unwrap_or(d.max_word_len),
        }
    }
}

#[derive(Debug, Args)]
struct SolverArgs {
    #[arg(long, value_enum, default_value_t = Split::First)]
    split: Split,
    #[arg(long, value_enum, default_value_t = Order::Leftmost)]
    strategy: Order,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Split {
    First,
    Last,
}

impl From<Split> for SplitPolicy {
    fn from(s: Split) -> Self {
        match s {
            Split::First => SplitPolicy::First,
            Split::Last => SplitPolicy::Last,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Leftmost,
    Rightmost,
}

impl From<Order> for Strategy {
    fn from(o: Order) -> Self {
        match o {
            Order::Leftmost => Strategy::Leftmost,
            Order::Rightmost => Strategy::Rightmost,
        }
    }
}

/// Exit status plus captured streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure with its exit status and a one-line diagnostic that includes
/// the offending location.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message,
        }
    }

    fn core(e: artin_core::Error, location: &str) -> Failure {
        use artin_core::Error as E;
        let code = match e {
            E::UnsupportedBaseCase { .. } => EXIT_UNSUPPORTED,
            E::ResourceLimit { .. } => EXIT_RESOURCE,
            E::DuplicateVertex(_)
            | E::DuplicateEdge(..)
            | E::EmptyVertexName
            | E::SelfLoop(_)
            | E::InvalidLabel(_)
            | E::UnknownVertex(_)
            | E::TooManyVertices(_)
            | E::InvalidToken(_)
            | E::MalformedDerivation { .. } => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure {
            code,
            message: format!("{e} ({location})"),
        }
    }
}

type Step<T> = Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                // First paragraph only, on one line; it names the offending flag.
                let first: Vec<&str> = text
                    .lines()
                    .take_while(|l| !l.trim().is_empty())
                    .map(str::trim)
                    .collect();
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("{}\n", first.join(" ")),
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn load_graph(path: &str) -> Step<CoxeterGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read graph file: {e} ({path})")))?;
    parse_graph(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

/// Columns are 1-based character offsets into the flag value.
fn tokens_with_columns(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace().map(move |tok| {
        let byte = tok.as_ptr() as usize - text.as_ptr() as usize;
        (text[..byte].chars().count() + 1, tok)
    })
}

fn parse_word(g: &CoxeterGraph, text: &str) -> Step<GroupWord> {
    let mut letters = Vec::new();
    for (column, tok) in tokens_with_columns(text) {
        let w = GroupWord::parse(g, tok)
            .map_err(|e| Failure::core(e, &format!("--word, column {column}")))?;
        letters.extend(w.0);
    }
    Ok(GroupWord(letters))
}

fn parse_subset(g: &CoxeterGraph, text: &str) -> Step<VertexSet> {
    let mut set = VertexSet::default();
    for (column, tok) in tokens_with_columns(text) {
        let v = g
            .vertex(tok)
            .map_err(|e| Failure::core(e, &format!("--subset, column {column}")))?;
        set.insert(v);
    }
    Ok(set)
}

fn braces(g: &CoxeterGraph, set: VertexSet) -> String {
    format!("{{{}}}", g.format_set(set))
}

fn to_json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn dispatch(command: Command, out: &mut String) -> Step<i32> {
    match command {
        Command::Classify(common) => {
            let g = load_graph(&common.graph)?;
            let report = classify(&g);
            if common.json {
                out.push_str(&to_json(&Document::Classification(ClassificationDoc::new(
                    &g, &report,
                ))));
            } else {
                for (name, flag) in [
                    ("spherical", report.spherical),
                    ("free_of_infinity", report.free_of_infinity),
                    ("fc_type", report.fc_type),
                    ("large", report.large),
                    ("extra_large", report.extra_large),
                    ("two_dimensional", report.two_dimensional),
                    ("connected", report.connected),
                ] {
                    let _ = writeln!(out, "{name}: {flag}");
                }
                for (&c, t) in report.components.iter().zip(&report.component_types) {
                    let kind = t.map_or("not spherical".to_string(), |t| t.to_string());
                    let _ = writeln!(out, "component {}: {kind}", braces(&g, c));
                }
            }
        }
        Command::Decompose { common, split } => {
            let g = load_graph(&common.graph)?;
            let tree = decomposition_tree_with(&g, g.vertices(), split.into());
            if common.json {
                out.push_str(&to_json(&Document::Decomposition {
                    tree: TreeDoc::new(&g, &tree),
                }));
            } else {
                write_tree(&g, &tree, 0, out);
            }
        }
        Command::Wp {
            common,
            word,
            trace,
            solver,
        } => {
            let g = load_graph(&common.graph)?;
            let w = parse_word(&g, &word)?;
            let s = make_solver(&g, &common, &solver)?;
            let trivial = s
                .is_trivial(&w)
                .map_err(|e| Failure::core(e, &format!("--word \"{word}\"")))?;
            let reduced = if trace || common.json {
                s.reduce(&w)
                    .map_err(|e| Failure::core(e, &format!("--word \"{word}\"")))?
            } else {
                None
            };
            if common.json {
                let doc = WordProblemDoc::new(&g, s.tree(), &w, trivial, reduced.as_ref());
                out.push_str(&to_json(&Document::WordProblem(doc)));
            } else {
                if let (Some(r), DecompositionTree::Node { edge, .. }) = (&reduced, s.tree()) {
                    let _ = writeln!(
                        out,
                        "# amalgam along {}-{}, factor 1 on {}, factor 2 on {}",
                        g.name(edge.0),
                        g.name(edge.1),
                        braces(&g, g.vertices().without(edge.0)),
                        braces(&g, g.vertices().without(edge.1)),
                    );
                    for (i, step) in r.trace.iter().enumerate() {
                        let _ = writeln!(
                            out,
                            "# step {}: {}",
                            i + 1,
                            StepDoc::new(&g, step).describe()
                        );
                    }
                    let syllables: Vec<String> = r
                        .syllables
                        .iter()
                        .map(|s| format!("[{}: {}]", s.factor.tag(), s.word.display(&g)))
                        .collect();
                    let shown = if syllables.is_empty() {
                        "(empty)".to_string()
                    } else {
                        syllables.join(" ")
                    };
                    let _ = writeln!(out, "# reduced form, length {}: {shown}", r.len());
                } else if trace {
                    let _ = writeln!(out, "# spherical graph, decided by the Garside normal form");
                }
                out.push_str(if trivial { "TRIVIAL\n" } else { "NONTRIVIAL\n" });
            }
        }
        Command::Member {
            common,
            word,
            subset,
            solver,
        } => {
            let g = load_graph(&common.graph)?;
            let w = parse_word(&g, &word)?;
            let v = parse_subset(&g, &subset)?;
            let s = make_solver(&g, &common, &solver)?;
            let location = format!("--word \"{word}\" --subset \"{subset}\"");
            let rewritten = s
                .member_rewrite(&w, v)
                .map_err(|e| Failure::core(e, &location))?;
            let verified = match &rewritten {
                Some(r) => {
                    r.letters().is_subset(v)
                        && s.equal(&w, r).map_err(|e| Failure::core(e, &location))?
                }
                None => true,
            };
            if !verified {
                return Err(Failure {
                    code: EXIT_FAILED,
                    message: format!("rewritten word failed verification ({location})"),
                });
            }
            if common.json {
                out.push_str(&to_json(&Document::Membership(MembershipDoc {
                    word: w.display(&g),
                    subset: g.set_names(v).into_iter().map(String::from).collect(),
                    member: rewritten.is_some(),
                    rewritten: rewritten.as_ref().map(|r| r.display(&g)),
                    verified: rewritten.is_some(),
                })));
            } else {
                match rewritten {
                    Some(r) if r.is_empty() => out.push_str("(identity)\n"),
                    Some(r) => {
                        let _ = writeln!(out, "{}", r.display(&g));
                    }
                    None => out.push_str("NOT-MEMBER\n"),
                }
            }
        }
        Command::Center(common) => {
            let g = load_graph(&common.graph)?;
            let desc = center_description_with(&g, &common.limits())
                .map_err(|e| Failure::core(e, &format!("graph {}", common.graph)))?;
            if common.json {
                out.push_str(&to_json(&Document::Center(CenterDoc::new(&g, &desc))));
            } else {
                for c in &desc.components {
                    let set = braces(&g, c.vertices);
                    match &c.center {
                        ComponentCenter::InfiniteCyclic { generator } => {
                            let _ = writeln!(
                                out,
                                "component {set}: infinite cyclic, generated by {}",
                                generator.display(&g)
                            );
                        }
                        ComponentCenter::Trivial(TrivialBasis::Known { class, source }) => {
                            let _ = writeln!(out, "component {set}: trivial ({class}; {source})");
                        }
                        ComponentCenter::Trivial(TrivialBasis::Derived(d)) => {
                            let _ = writeln!(out, "component {set}: trivial, derived");
                            write_derivation(&g, d, 1, out);
                        }
                        ComponentCenter::Conditional {
                            assumption,
                            derivation,
                        } => {
                            let _ = writeln!(
                                out,
                                "component {set}: conditional, trivial if {assumption}"
                            );
                            if let Some(d) = derivation {
                                write_derivation(&g, d, 1, out);
                            }
                        }
                    }
                }
                let _ = writeln!(out, "centre: {}", desc.product_statement());
            }
        }
        Command::Torsion { common, split } => {
            let g = load_graph(&common.graph)?;
            let cert = torsion_certificate_with(&g, split.into());
            if common.json {
                out.push_str(&to_json(&Document::Torsion(TorsionDoc::new(&g, &cert))));
            } else {
                write_torsion(&g, &cert.root, 0, out);
                if cert.unconditional {
                    out.push_str("torsion free: unconditional\n");
                } else {
                    let leaves: Vec<String> = cert
                        .assumptions()
                        .into_iter()
                        .map(|v| braces(&g, v))
                        .collect();
                    let _ = writeln!(
                        out,
                        "torsion free: conditional on leaves {}",
                        leaves.join(" ")
                    );
                }
            }
        }
        Command::Verify { common, document } => {
            let g = load_graph(&common.graph)?;
            let text = std::fs::read_to_string(&document)
                .map_err(|e| Failure::usage(format!("cannot read document: {e} ({document})")))?;
            let doc: Document = serde_json::from_str(&text).map_err(|e| {
                Failure::usage(format!(
                    "{document}: line {}, column {}: {e}",
                    e.line(),
                    e.column()
                ))
            })?;
            let valid = verify_document(&g, &doc, &common.limits())
                .map_err(|f| Failure::usage(format!("{document}: {}", f.message)))?;
            out.push_str(if valid { "VALID\n" } else { "INVALID\n" });
            return Ok(if valid { EXIT_OK } else { EXIT_FAILED });
        }
    }
    Ok(EXIT_OK)
}

fn make_solver(g: &CoxeterGraph, common: &Common, args: &SolverArgs) -> Step<WordProblemSolver> {
    WordProblemSolver::with_options(g, args.split.into(), args.strategy.into(), &common.limits())
        .map_err(|e| Failure::core(e, &format!("graph {}", common.graph)))
}

fn write_tree(g: &CoxeterGraph, t: &DecompositionTree, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match t {
        DecompositionTree::Leaf { vertices } => {
            let kind = if is_spherical_set(g, *vertices) {
                "spherical"
            } else {
                "free of infinity, not spherical"
            };
            let _ = writeln!(out, "{pad}leaf {}: {kind}", braces(g, *vertices));
        }
        DecompositionTree::Node {
            vertices,
            edge,
            x,
            y,
            z,
            left,
            right,
        } => {
            let _ = writeln!(
                out,
                "{pad}node {} split {}-{}: X={} Y={} Z={}",
                braces(g, *vertices),
                g.name(edge.0),
                g.name(edge.1),
                braces(g, *x),
                braces(g, *y),
                braces(g, *z)
            );
            write_tree(g, left, depth + 1, out);
            write_tree(g, right, depth + 1, out);
        }
    }
}

fn write_derivation(g: &CoxeterGraph, d: &CenterDerivation, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let b = |s| braces(g, s);
    let _ = writeln!(
        out,
        "{pad}edge {}-{}: X={} Y={} Z={}",
        g.name(d.edge.0),
        g.name(d.edge.1),
        b(d.x),
        b(d.y),
        b(d.z)
    );
    let _ = writeln!(
        out,
        "{pad}X1={} X2={} Y1={} Y2={} Z1={}",
        b(d.x1),
        b(d.x2),
        b(d.y1),
        b(d.y2),
        b(d.z1)
    );
    let _ = writeln!(
        out,
        "{pad}X2 in Y1: {}, Y2 in X1: {}",
        d.x2_in_y1, d.y2_in_x1
    );
    for (name, case) in [("X1", &d.x1_case), ("Y1", &d.y1_case)] {
        write_sub_case(g, name, case, depth, out);
    }
}

fn write_sub_case(g: &CoxeterGraph, name: &str, c: &SubCase, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let head = format!(
        "{pad}{name} case: centre of {} meets {} trivially",
        braces(g, c.component),
        braces(g, c.inside)
    );
    match &c.basis {
        SubCaseBasis::SphericalProperParabolic => {
            let _ = writeln!(out, "{head} (spherical, proper parabolic)");
        }
        SubCaseBasis::Known { class, source } => {
            let _ = writeln!(out, "{head} ({class}; {source})");
        }
        SubCaseBasis::Assumed { assumption } => {
            let _ = writeln!(out, "{head} (assuming {assumption})");
        }
        SubCaseBasis::Derived(d) => {
            let _ = writeln!(out, "{head} (derived)");
            write_derivation(g, d, depth + 1, out);
        }
    }
}

fn write_torsion(g: &CoxeterGraph, n: &TorsionNode, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match n {
        TorsionNode::Leaf { vertices, status } => {
            let why = match status {
                LeafStatus::SphericalTorsionFree { source } => format!("spherical; {source}"),
                LeafStatus::KnownTorsionFree { class, source } => format!("{class}; {source}"),
                LeafStatus::AssumedTorsionFree { assumption } => format!("assuming {assumption}"),
            };
            let _ = writeln!(
                out,
                "{pad}leaf {}: torsion free ({why})",
                braces(g, *vertices)
            );
        }
        TorsionNode::Node {
            vertices,
            edge,
            left,
            right,
            ..
        } => {
            let _ = writeln!(
                out,
                "{pad}node {} split {}-{}: amalgam of torsion-free factors",
                braces(g, *vertices),
                g.name(edge.0),
                g.name(edge.1)
            );
            write_torsion(g, left, depth + 1, out);
            write_torsion(g, right, depth + 1, out);
        }
    }
}

/// Structural check of a decomposition tree: each node splits along an
/// `∞` edge into `V∖{s}` and `V∖{t}`, and each leaf is free of infinity.
fn tree_is_valid(g: &CoxeterGraph, t: &DecompositionTree, vertices: VertexSet) -> bool {
    if t.vertices() != vertices {
        return false;
    }
    match t {
        DecompositionTree::Leaf { vertices } => g.is_free_of_infinity_on(*vertices),
        DecompositionTree::Node {
            vertices: v,
            edge: (s, t),
            x,
            y,
            z,
            left,
            right,
        } => {
            let v = *v;
            v.contains(*s)
                && v.contains(*t)
                && g.label(*s, *t).is_infinite()
                && *x == v.without(*s)
                && *y == v.without(*t)
                && *z == x.intersection(*y)
                && tree_is_valid(g, left, *x)
                && tree_is_valid(g, right, *y)
        }
    }
}

/// Re-derives or re-checks every claim in `doc` against `g`.
pub fn verify_document(
    g: &CoxeterGraph,
    doc: &Document,
    limits: &Limits,
) -> Result<bool, VerifyError> {
    let core = |e: artin_core::Error| VerifyError {
        message: e.to_string(),
    };
    let shape = |e: crate::json::DocumentError| VerifyError {
        message: e.to_string(),
    };
    let solver = || WordProblemSolver::new(g, limits).map_err(core);
    Ok(match doc {
        Document::Classification(c) => *c == ClassificationDoc::new(g, &classify(g)),
        Document::Decomposition { tree } => {
            tree_is_valid(g, &tree.to_core(g).map_err(shape)?, g.vertices())
        }
        Document::Torsion(t) => {
            let cert = t.to_core(g).map_err(shape)?;
            verify_torsion_certificate(g, &cert).map_err(core)? && *t == TorsionDoc::new(g, &cert)
        }
        Document::Center(c) => {
            let desc = c.to_core(g).map_err(shape)?;
            verify_center_description(g, &desc, limits).map_err(core)?
                && *c == CenterDoc::new(g, &desc)
        }
        Document::WordProblem(wp) => {
            let w = GroupWord::parse(g, &wp.word).map_err(core)?;
            let tree = wp.tree.to_core(g).map_err(shape)?;
            tree_is_valid(g, &tree, g.vertices())
                && solver()?.is_trivial(&w).map_err(core)? == wp.trivial
                && wp.verification.reduced
                && wp.verification.alternating
                && wp.verification.answer_matches_length
                && wp
                    .reduction
                    .as_ref()
                    .is_none_or(|r| (r.length == 0) == wp.trivial && r.length == r.syllables.len())
        }
        Document::Membership(m) => {
            let w = GroupWord::parse(g, &m.word).map_err(core)?;
            let refs: Vec<&str> = m.subset.iter().map(String::as_str).collect();
            let v = g.vertex_set(&refs).map_err(core)?;
            let s = solver()?;
            match &m.rewritten {
                Some(r) => {
                    let r = GroupWord::parse(g, r).map_err(core)?;
                    m.member
                        && m.verified
                        && r.letters().is_subset(v)
                        && s.equal(&w, &r).map_err(core)?
                }
                None => {
                    !m.member && !m.verified && s.member_rewrite(&w, v).map_err(core)?.is_none()
                }
            }
        }
    })
}

/// The document does not fit the graph or names unknown vertices.
#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct VerifyError {
    pub message: String,
}
