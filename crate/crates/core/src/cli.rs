//! The `tamari` command line.
//!
//! [`run`] takes the argument vector and returns everything the process
//! would print, so the binary stays a two-line wrapper and tests can drive
//! the commands without spawning processes.
//!
//! With `--json` every command prints one JSON object. Big integers are
//! encoded as decimal strings and polynomials in the same text format as the
//! plain output.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::compose::{enumerate_interval_posets_uncapped, MAX_ENUMERATION_SIZE};
use crate::interval_poset::{make_interval, trees_in_interval};
use crate::mtamari::{
    enumerate_ballot_paths, phi_m_series, verify_path_counts_uncapped, MAX_PATH_ORACLE_SIZE,
};
use crate::order::{count_intervals_bruteforce_uncapped, MAX_ORACLE_TREE_SIZE};
use crate::poly::{
    chapoton_count, phi_series, tamari_poly, tamari_poly_bivar, tamari_poly_mirror, Polynomial,
};
use crate::tree::{enumerate_trees, BinaryTree};
use crate::Error;

const MAX_FORMULA_SIZE: usize = 2000;
const MAX_SERIES_SIZE: usize = 30;
const MAX_LATTICE_PATH_SIZE: usize = 5;
const MAX_VERIFY_SIZE: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "tamari",
    version,
    about = "Exact computations on Tamari intervals"
)]
struct Cli {
    /// Emit a single JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Override the size cap of the selected route. Brute-force routes are
    /// exponential.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of Tamari intervals of size N.
    Count {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Run every method and report whether they agree.
        #[arg(long, conflicts_with = "method")]
        all_methods: bool,
    },
    /// Tamari polynomial of a tree (literal like `[[_,_],_]` or a Dyck word).
    Poly {
        tree: String,
        /// Count the trees above instead of below.
        #[arg(long, conflicts_with = "bivar")]
        mirror: bool,
        /// Bivariate polynomial in x and b.
        #[arg(long)]
        bivar: bool,
        /// Evaluate at 1.
        #[arg(long)]
        at_one: bool,
    },
    /// Interval-poset of [LOWER, UPPER] and what it contains.
    Interval {
        lower: String,
        upper: String,
        #[arg(long)]
        poset: bool,
        #[arg(long)]
        trees: bool,
        #[arg(long)]
        extensions: bool,
    },
    /// Cover graph of the Tamari lattice of size N.
    Lattice {
        n: usize,
        #[arg(long)]
        dot: bool,
        /// Use the m-Tamari lattice on m-ballot paths instead.
        #[arg(long, value_name = "M")]
        mtamari: Option<usize>,
    },
    /// Generating series Φ up to y^N.
    Phi {
        n: usize,
        /// m-Tamari series Φ_m.
        #[arg(long, value_name = "M")]
        m: Option<usize>,
    },
    /// Check, for every m-ballot path D of size N, that the prefix-tree
    /// polynomial at 1 counts the paths below D.
    MtamariVerify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
    Bruteforce,
    Series,
}

impl Method {
    const ALL: [Method; 4] = [
        Method::Formula,
        Method::Enumerate,
        Method::Bruteforce,
        Method::Series,
    ];

    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Enumerate => "enumerate",
            Method::Bruteforce => "bruteforce",
            Method::Series => "series",
        }
    }

    fn default_cap(self) -> usize {
        match self {
            Method::Formula => MAX_FORMULA_SIZE,
            Method::Enumerate => MAX_ENUMERATION_SIZE,
            Method::Bruteforce => MAX_ORACLE_TREE_SIZE,
            Method::Series => MAX_SERIES_SIZE,
        }
    }

    fn exponential(self) -> bool {
        matches!(self, Method::Enumerate | Method::Bruteforce)
    }

    fn count(self, n: usize) -> String {
        match self {
            Method::Formula => chapoton_count(n as u64).to_string(),
            Method::Enumerate => enumerate_interval_posets_uncapped(n)[n].len().to_string(),
            Method::Bruteforce => count_intervals_bruteforce_uncapped(n).to_string(),
            Method::Series => phi_series(n as u32)
                .at_x_one()
                .coefficient(0, n as u32, 0)
                .to_string(),
        }
    }
}

/// What a single invocation printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

struct Session {
    json: bool,
    max_n: Option<usize>,
    out: String,
    err: String,
    code: i32,
}

impl Session {
    /// Applies the cap (or the `--max-n` override) for one route.
    fn check_cap(
        &mut self,
        what: &str,
        n: usize,
        default: usize,
        exponential: bool,
    ) -> Result<(), Failure> {
        let cap = self.max_n.unwrap_or(default);
        if n > cap {
            return Err(Failure(format!(
                "{what}: size {n} exceeds the cap {cap} (raise it with --max-n)"
            )));
        }
        if n > default && exponential {
            let _ = writeln!(
                self.err,
                "warning: {what} at size {n} is past its default cap {default}; running time grows exponentially"
            );
        }
        Ok(())
    }

    fn emit_json(&mut self, value: &impl Serialize) {
        let text = serde_json::to_string_pretty(value).expect("output types serialize");
        self.out.push_str(&text);
        self.out.push('\n');
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let mut s = Session {
        json: cli.json,
        max_n: cli.max_n,
        out: String::new(),
        err: String::new(),
        code: 0,
    };
    let result = match cli.command {
        Command::Count {
            n,
            method,
            all_methods,
        } => count(&mut s, n, method, all_methods),
        Command::Poly {
            tree,
            mirror,
            bivar,
            at_one,
        } => poly(&mut s, &tree, mirror, bivar, at_one),
        Command::Interval {
            lower,
            upper,
            poset,
            trees,
            extensions,
        } => interval(&mut s, &lower, &upper, poset, trees, extensions),
        Command::Lattice { n, dot, mtamari } => lattice(&mut s, n, dot, mtamari),
        Command::Phi { n, m } => phi(&mut s, n, m),
        Command::MtamariVerify { m, n } => mtamari_verify(&mut s, m, n),
    };
    if let Err(Failure(msg)) = result {
        let _ = writeln!(s.err, "error: {msg}");
        s.code = 1;
    }
    Outcome {
        stdout: s.out,
        stderr: s.err,
        code: s.code,
    }
}

fn parse_tree(text: &str) -> Result<BinaryTree, Failure> {
    text.parse()
        .map_err(|e: Error| Failure(format!("cannot parse tree {text:?}: {e}")))
}

#[derive(Serialize)]
struct MethodCount {
    method: &'static str,
    count: String,
}

#[derive(Serialize)]
struct CountJson {
    n: usize,
    counts: Vec<MethodCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
}

fn count(s: &mut Session, n: usize, method: Method, all: bool) -> Result<(), Failure> {
    let methods: Vec<Method> = if all {
        Method::ALL.to_vec()
    } else {
        vec![method]
    };
    for &m in &methods {
        s.check_cap(m.name(), n, m.default_cap(), m.exponential())?;
    }
    let counts: Vec<MethodCount> = methods
        .iter()
        .map(|m| MethodCount {
            method: m.name(),
            count: m.count(n),
        })
        .collect();
    let verdict = all.then(|| {
        if counts.iter().all(|c| c.count == counts[0].count) {
            "MATCH"
        } else {
            "MISMATCH"
        }
    });
    if verdict == Some("MISMATCH") {
        s.code = 1;
    }
    if s.json {
        s.emit_json(&CountJson { n, counts, verdict });
    } else if all {
        for c in &counts {
            s.line(format!("{} {}", c.method, c.count));
        }
        s.line(verdict.unwrap_or_default());
    } else {
        s.line(&counts[0].count);
    }
    Ok(())
}

#[derive(Serialize)]
struct TermJson {
    x: u32,
    y: u32,
    b: u32,
    coefficient: String,
}

#[derive(Serialize)]
struct PolyJson {
    tree: String,
    polynomial: String,
    terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_one: Option<String>,
}

fn terms_json(p: &Polynomial) -> Vec<TermJson> {
    p.terms()
        .map(|(x, y, b, c)| TermJson {
            x,
            y,
            b,
            coefficient: c.to_string(),
        })
        .collect()
}

fn poly(
    s: &mut Session,
    text: &str,
    mirror: bool,
    bivar: bool,
    at_one: bool,
) -> Result<(), Failure> {
    let tree = parse_tree(text)?;
    let p = if bivar {
        tamari_poly_bivar(&tree)
    } else if mirror {
        tamari_poly_mirror(&tree)
    } else {
        tamari_poly(&tree)
    };
    let value = at_one.then(|| p.eval_at_one().to_string());
    if s.json {
        s.emit_json(&PolyJson {
            tree: tree.to_string(),
            polynomial: p.to_string(),
            terms: terms_json(&p),
            at_one: value,
        });
    } else {
        s.line(value.unwrap_or_else(|| p.to_string()));
    }
    Ok(())
}

#[derive(Serialize)]
struct ExtensionJson {
    permutation: String,
    min: bool,
    max: bool,
}

#[derive(Serialize)]
struct IntervalJson {
    n: usize,
    relations: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trees: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extensions: Option<Vec<ExtensionJson>>,
}

fn interval(
    s: &mut Session,
    lower: &str,
    upper: &str,
    show_poset: bool,
    show_trees: bool,
    show_extensions: bool,
) -> Result<(), Failure> {
    let (lo, up) = (parse_tree(lower)?, parse_tree(upper)?);
    let p = make_interval(&lo, &up)?
        .ok_or_else(|| Failure(format!("not a Tamari interval: {lo} is not below {up}")))?;
    let show_poset = show_poset || !(show_trees || show_extensions);

    let trees = if show_trees {
        Some(
            trees_in_interval(&p)?
                .iter()
                .map(BinaryTree::to_string)
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let extensions = if show_extensions {
        match p.linear_extensions() {
            Ok(all) => {
                let (min, max) = (p.min_linear_extension(), p.max_linear_extension());
                Some(Ok(all
                    .into_iter()
                    .map(|e| ExtensionJson {
                        permutation: e.to_string(),
                        min: e == min,
                        max: e == max,
                    })
                    .collect::<Vec<_>>()))
            }
            Err(e) => Some(Err(e)),
        }
    } else {
        None
    };

    if s.json {
        let extensions = match extensions {
            Some(Err(e)) => return Err(e.into()),
            Some(Ok(v)) => Some(v),
            None => None,
        };
        s.emit_json(&IntervalJson {
            n: p.n(),
            relations: p.cover_relations(),
            trees,
            extensions,
        });
        return Ok(());
    }
    if show_poset {
        s.line(p.to_string());
    }
    if let Some(trees) = trees {
        s.line(format!("trees {}", trees.len()));
        for t in trees {
            s.line(t);
        }
    }
    match extensions {
        Some(Ok(exts)) => {
            s.line(format!("extensions {}", exts.len()));
            for e in exts {
                let mark = match (e.min, e.max) {
                    (true, true) => " min max",
                    (true, false) => " min",
                    (false, true) => " max",
                    _ => "",
                };
                s.line(format!("{}{mark}", e.permutation));
            }
        }
        Some(Err(e)) => {
            s.line(format!("extensions omitted: {e}"));
        }
        None => {}
    }
    Ok(())
}

#[derive(Serialize)]
struct LatticeJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

fn lattice(s: &mut Session, n: usize, dot: bool, mtamari: Option<usize>) -> Result<(), Failure> {
    let (name, vertices, edges) = match mtamari {
        None => {
            s.check_cap("tree lattice", n, MAX_ORACLE_TREE_SIZE, true)?;
            let trees = enumerate_trees(n);
            let edges: Vec<(String, String)> = trees
                .iter()
                .flat_map(|t| {
                    t.tamari_covers_up()
                        .into_iter()
                        .map(move |u| (t.to_string(), u.to_string()))
                })
                .collect();
            (
                "tamari".to_string(),
                trees.iter().map(BinaryTree::to_string).collect::<Vec<_>>(),
                edges,
            )
        }
        Some(m) => {
            s.check_cap("path lattice", n, MAX_LATTICE_PATH_SIZE, true)?;
            let paths = enumerate_ballot_paths(m, n)?;
            let edges: Vec<(String, String)> = paths
                .iter()
                .flat_map(|p| {
                    p.rotation_covers()
                        .into_iter()
                        .map(move |q| (p.word(), q.word()))
                })
                .collect();
            (
                format!("tamari_m{m}"),
                paths.iter().map(|p| p.word()).collect(),
                edges,
            )
        }
    };
    if s.json {
        s.emit_json(&LatticeJson { vertices, edges });
    } else if dot {
        s.line(format!("digraph {name}_{n} {{"));
        for v in &vertices {
            s.line(format!("  \"{v}\";"));
        }
        for (a, b) in &edges {
            s.line(format!("  \"{a}\" -> \"{b}\";"));
        }
        s.line("}");
    } else {
        s.line(format!("vertices {}", vertices.len()));
        s.line(format!("edges {}", edges.len()));
        for (a, b) in &edges {
            s.line(format!("{a} -> {b}"));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PhiJson {
    max_y: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    series: String,
    terms: Vec<TermJson>,
}

fn phi(s: &mut Session, n: usize, m: Option<usize>) -> Result<(), Failure> {
    s.check_cap("series", n, MAX_SERIES_SIZE, false)?;
    let series = match m {
        None => phi_series(n as u32),
        Some(m) => phi_m_series(m, n as u32)?,
    };
    if s.json {
        s.emit_json(&PhiJson {
            max_y: n,
            m,
            series: series.to_string(),
            terms: terms_json(&series),
        });
    } else {
        s.line(series.to_string());
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyJson {
    m: usize,
    n: usize,
    checks: Vec<VerifyLineJson>,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct VerifyLineJson {
    path: String,
    polynomial_at_one: String,
    paths_below: u64,
    pass: bool,
}

fn mtamari_verify(s: &mut Session, m: usize, n: usize) -> Result<(), Failure> {
    s.check_cap(
        "m-Tamari check",
        n,
        MAX_VERIFY_SIZE.min(MAX_PATH_ORACLE_SIZE),
        true,
    )?;
    let checks = verify_path_counts_uncapped(m, n)?;
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if failed > 0 {
        s.code = 1;
    }
    if s.json {
        s.emit_json(&VerifyJson {
            m,
            n,
            passed: checks.len() - failed,
            failed,
            checks: checks
                .iter()
                .map(|c| VerifyLineJson {
                    path: c.path.word(),
                    polynomial_at_one: c.polynomial_at_one.to_string(),
                    paths_below: c.paths_below,
                    pass: c.passed(),
                })
                .collect(),
        });
        return Ok(());
    }
    for c in &checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        s.line(format!(
            "{} {} {} {verdict}",
            c.path.word(),
            c.polynomial_at_one,
            c.paths_below
        ));
    }
    let summary = if failed == 0 { "PASS" } else { "FAIL" };
    s.line(format!(
        "{summary} {}/{}",
        checks.len() - failed,
        checks.len()
    ));
    Ok(())
}
