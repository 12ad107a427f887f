//! Command-line front end. [`run`] parses arguments, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code:
//! `0` success, `1` negative answer from a predicate command, `2` usage or
//! input error, `3` scale bound exceeded.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::lasso::{self, Decision, TopologyOptions};
use crate::matroid::{TreeMatroid, DEFAULT_MAX_BASIS_LEAVES};
use crate::reconstruct::{self, DEFAULT_MAX_CIRCUIT_LEAVES};
use crate::stargraph;
use crate::tree::{
    enumerate_xtrees, parse_newick, Cord, CordSet, TreeError, XTree, DEFAULT_MAX_ENUMERATION_LEAVES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lasso-matroid",
    version,
    about = "Cord matroids of phylogenetic X-trees"
)]
struct Cli {
    /// Emit one JSON object per result line.
    #[arg(long, global = true)]
    json: bool,

    /// Leaf bound for brute-force commands (overrides each command's default).
    #[arg(long, global = true, env = "LASSO_MATROID_MAX_LEAVES")]
    max_leaves: Option<usize>,

    /// Split enumeration across threads; output order is unchanged.
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TreeArgs {
    /// File holding a Newick tree.
    #[arg(long, conflicts_with = "newick")]
    tree: Option<PathBuf>,

    /// Newick tree given inline.
    #[arg(long)]
    newick: Option<String>,
}

#[derive(Debug, Args)]
struct CordArgs {
    /// Cord file: one `x y` pair per line, `#` starts a comment.
    #[arg(long, conflicts_with = "cord_list")]
    cords: Option<PathBuf>,

    /// Cords inline, comma separated: `ab,cd` or `x1-x2,x3-x4`.
    #[arg(long)]
    cord_list: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank of a cord set.
    Rank {
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        cords: CordArgs,
    },
    /// Rank, independence, lasso and basis flags of a cord set.
    Verdict {
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        cords: CordArgs,
    },
    /// Closure of a cord set.
    Closure {
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        cords: CordArgs,
    },
    /// Every basis of the matroid.
    Bases {
        #[command(flatten)]
        tree: TreeArgs,
        /// Print only the number of bases.
        #[arg(long)]
        count: bool,
    },
    /// Every circuit of the matroid.
    Circuits {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long)]
        count: bool,
        /// Largest circuit size to list.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Cords that lie in every basis.
    Coloops {
        #[command(flatten)]
        tree: TreeArgs,
    },
    /// Cord-graph analysis of a cord set on the star tree over the same leaves.
    Star {
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        cords: CordArgs,
    },
    /// Bases built from bases of the tree with one interior edge contracted.
    ContractBases {
        #[command(flatten)]
        tree: TreeArgs,
        /// Leaves on one side of the interior edge to contract, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        split: Vec<String>,
        #[arg(long)]
        count: bool,
    },
    /// Pointed covers of a binary tree for one leaf.
    PointedCovers {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long)]
        leaf: String,
    },
    /// Edge-weight, topological and strong lasso status of a cord set.
    Lasso {
        #[command(flatten)]
        tree: TreeArgs,
        #[command(flatten)]
        cords: CordArgs,
        /// Also require pendant edges to be strictly positive.
        #[arg(long)]
        strict_pendant: bool,
        /// Run the full search even when the cord graph is disconnected.
        #[arg(long)]
        no_connectivity_shortcut: bool,
    },
    /// Resolved quartets, read from rank queries only.
    Quartets {
        #[command(flatten)]
        tree: TreeArgs,
    },
    /// Rebuild a tree from the rank function of its matroid.
    Reconstruct {
        #[command(flatten)]
        tree: TreeArgs,
        /// Newick tree whose matroid serves as the rank oracle.
        #[arg(long)]
        oracle_from: Option<String>,
    },
    /// Whether the matroid is binary, with a witness when it is not.
    BinaryCheck {
        #[command(flatten)]
        tree: TreeArgs,
    },
    /// Every X-tree on the given leaves, in canonical Newick.
    EnumerateTrees {
        /// Leaf labels, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "n")]
        leaves: Vec<String>,
        /// Use the labels x1, ..., xN.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        count: bool,
    },
}

struct Output<'a> {
    json: bool,
    w: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit<T: Serialize>(&mut self, record: &T, text: impl FnOnce() -> String) -> Result<()> {
        let line = if self.json {
            serde_json::to_string(record).expect("records serialize")
        } else {
            text()
        };
        writeln!(self.w, "{line}").map_err(|e| Error::InvalidInput(format!("write failed: {e}")))
    }
}

/// Parse a cord file: one pair of whitespace-separated labels per line.
pub fn parse_cord_file(text: &str) -> Result<CordSet> {
    let mut set = CordSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [x, y] = parts.as_slice() else {
            return Err(Error::InvalidInput(format!(
                "line {}: expected two labels, got {line:?}",
                n + 1
            )));
        };
        set.insert(Cord::new(*x, *y)?);
    }
    Ok(set)
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_tree(args: &TreeArgs) -> Result<XTree> {
    let text = match (&args.tree, &args.newick) {
        (Some(path), _) => read_file(path)?,
        (None, Some(s)) => s.clone(),
        (None, None) => {
            return Err(Error::InvalidInput(
                "give --tree FILE or --newick STRING".into(),
            ))
        }
    };
    Ok(parse_newick(text.trim())?.0)
}

fn load_cords(args: &CordArgs, tree: &XTree) -> Result<CordSet> {
    let set = match (&args.cords, &args.cord_list) {
        (Some(path), _) => parse_cord_file(&read_file(path)?)?,
        (None, Some(list)) if list.trim().is_empty() => CordSet::new(),
        (None, Some(list)) => CordSet::parse_compact(list)?,
        (None, None) => {
            return Err(Error::InvalidInput(
                "give --cords FILE or --cord-list LIST".into(),
            ))
        }
    };
    tree.check_cords(&set)?;
    Ok(set)
}

fn cord_strings(set: &CordSet) -> Vec<String> {
    set.iter().map(|c| c.to_string()).collect()
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn decision_text(d: Decision) -> &'static str {
    match d {
        Decision::Yes => "true",
        Decision::No => "false",
        Decision::Undecided => "undecided (scale)",
    }
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut output = Output {
        json: cli.json,
        w: out,
    };
    match execute(&cli, &mut output) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ScaleBound { .. } => EXIT_SCALE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(cli: &Cli, out: &mut Output<'_>) -> Result<i32> {
    let bound = |default: usize| cli.max_leaves.unwrap_or(default);
    match &cli.command {
        Command::Rank { tree, cords } => {
            let t = load_tree(tree)?;
            let set = load_cords(cords, &t)?;
            let m = TreeMatroid::new(&t);
            let rank = m.rank_of(&set)?;
            out.emit(
                &json!({"rank": rank, "full_rank": m.full_rank(), "size": set.len()}),
                || rank.to_string(),
            )?;
        }
        Command::Verdict { tree, cords } => {
            let t = load_tree(tree)?;
            let set = load_cords(cords, &t)?;
            let v = TreeMatroid::new(&t).verdict(&set)?;
            out.emit(&v, || {
                format!(
                    "rank: {}\nindependent: {}\nlasso: {}\nbasis: {}",
                    v.rank,
                    flag(v.independent),
                    flag(v.lasso),
                    flag(v.basis)
                )
            })?;
            return Ok(if v.lasso { EXIT_OK } else { EXIT_NEGATIVE });
        }
        Command::Closure { tree, cords } => {
            let t = load_tree(tree)?;
            let set = load_cords(cords, &t)?;
            let closure = TreeMatroid::new(&t).closure(&set)?;
            out.emit(&json!({ "closure": closure }), || closure.to_string())?;
        }
        Command::Bases { tree, count } => {
            let t = load_tree(tree)?;
            let m = TreeMatroid::new(&t);
            let bases = m.basis_indices(bound(DEFAULT_MAX_BASIS_LEAVES), cli.parallel)?;
            emit_sets(out, &m, &bases, "basis", *count)?;
        }
        Command::Circuits {
            tree,
            count,
            max_size,
        } => {
            let t = load_tree(tree)?;
            let limit = bound(DEFAULT_MAX_CIRCUIT_LEAVES);
            if t.leaf_count() > limit {
                return Err(Error::ScaleBound {
                    what: "leaves for circuit enumeration",
                    limit,
                    actual: t.leaf_count(),
                });
            }
            let m = TreeMatroid::new(&t);
            let circuits = m.circuit_indices(max_size.unwrap_or(usize::MAX), cli.parallel);
            emit_sets(out, &m, &circuits, "circuit", *count)?;
        }
        Command::Coloops { tree } => {
            let t = load_tree(tree)?;
            let coloops = TreeMatroid::new(&t).coloops();
            out.emit(&json!({ "coloops": coloops }), || coloops.to_string())?;
        }
        Command::Star { tree, cords } => {
            let t = load_tree(tree)?;
            let set = load_cords(cords, &t)?;
            let labels = t.labels();
            let report = stargraph::analyze(labels, &set)?;
            let record = json!({
                "rank": stargraph::star_rank(labels, &set)?,
                "independent": stargraph::star_is_independent(labels, &set)?,
                "lasso": stargraph::star_is_lasso(labels, &set)?,
                "basis": stargraph::star_is_basis(labels, &set)?,
                "circuit": stargraph::star_is_circuit(labels, &set)?,
                "components": report.components,
            });
            out.emit(&record, || {
                let mut lines = vec![];
                for key in ["rank", "independent", "lasso", "basis", "circuit"] {
                    lines.push(format!("{key}: {}", record[key]));
                }
                for c in &report.components {
                    lines.push(format!(
                        "component {{{}}}: {}",
                        c.vertices.join(","),
                        if c.bipartite {
                            "bipartite"
                        } else {
                            "non-bipartite"
                        }
                    ));
                }
                lines.join("\n")
            })?;
        }
        Command::ContractBases { tree, split, count } => {
            let t = load_tree(tree)?;
            let f = t.edge_for_split(split).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "no edge of the tree has side {{{}}}",
                    split.join(",")
                ))
            })?;
            let m = TreeMatroid::new(&t);
            let bases =
                m.contraction_basis_indices(f, bound(DEFAULT_MAX_BASIS_LEAVES), cli.parallel)?;
            emit_sets(out, &m, &bases, "basis", *count)?;
        }
        Command::PointedCovers { tree, leaf } => {
            let t = load_tree(tree)?;
            for cover in lasso::pointed_covers(&t, leaf)? {
                out.emit(&json!({ "cover": cover }), || cover.to_string())?;
            }
        }
        Command::Lasso {
            tree,
            cords,
            strict_pendant,
            no_connectivity_shortcut,
        } => {
            let t = load_tree(tree)?;
            let set = load_cords(cords, &t)?;
            let options = TopologyOptions {
                strict_pendant: *strict_pendant,
                connectivity_shortcut: !no_connectivity_shortcut,
                max_leaves: bound(lasso::DEFAULT_MAX_TOPOLOGY_LEAVES),
                parallel: cli.parallel,
                ..TopologyOptions::default()
            };
            let r = lasso::lasso_report(&t, &set, &options)?;
            out.emit(&r, || {
                let mut lines = vec![
                    format!("edge-weight: {}", flag(r.edge_weight)),
                    format!("topological: {}", decision_text(r.topological)),
                    format!("strong: {}", decision_text(r.strong)),
                    format!("rank: {} of {}", r.rank, r.full_rank),
                ];
                if let Some((a, b)) = &r.bipartition {
                    lines.push(format!(
                        "bipartition: {{{}}} | {{{}}}",
                        a.join(","),
                        b.join(",")
                    ));
                }
                lines.join("\n")
            })?;
            return Ok(match r.strong {
                Decision::Yes => EXIT_OK,
                Decision::No => EXIT_NEGATIVE,
                Decision::Undecided => EXIT_SCALE,
            });
        }
        Command::Quartets { tree } => {
            let t = load_tree(tree)?;
            let m = TreeMatroid::new(&t);
            let qs = reconstruct::quartet_set_from_oracle(
                |s| m.rank_of(s).expect("tree cords"),
                t.labels(),
            )?;
            for q in &qs.resolved {
                out.emit(q, || q.to_string())?;
            }
        }
        Command::Reconstruct { tree, oracle_from } => {
            let source = match oracle_from {
                Some(s) => parse_newick(s.trim())?.0,
                None => load_tree(tree)?,
            };
            let rebuilt = reconstruct::reconstruct(&source, bound(DEFAULT_MAX_ENUMERATION_LEAVES))?;
            let newick = rebuilt.canonical_newick();
            out.emit(&json!({ "newick": newick }), || newick.clone())?;
        }
        Command::BinaryCheck { tree } => {
            let t = load_tree(tree)?;
            let check = reconstruct::is_binary_matroid(
                &t,
                bound(DEFAULT_MAX_CIRCUIT_LEAVES),
                cli.parallel,
            )?;
            let witness = reconstruct::nonbinary_witness(&t);
            let record = json!({
                "binary": check.binary,
                "circuit_count": check.circuit_count,
                "violation": check.violation,
                "witness": witness,
            });
            out.emit(&record, || {
                let mut lines = vec![
                    format!("binary: {}", flag(check.binary)),
                    format!("circuits: {}", check.circuit_count),
                ];
                if let Some((c1, c2)) = &check.violation {
                    lines.push(format!("violating pair: {c1} {c2}"));
                }
                if let Some(w) = &witness {
                    lines.push(format!(
                        "witness: {} and {} are circuits ({}), {} is independent ({})",
                        w.hexagon,
                        w.square,
                        flag(w.hexagon_is_circuit && w.square_is_circuit),
                        w.triangles,
                        flag(w.triangles_independent)
                    ));
                }
                lines.join("\n")
            })?;
            return Ok(if check.binary { EXIT_OK } else { EXIT_NEGATIVE });
        }
        Command::EnumerateTrees { leaves, n, count } => {
            let labels: Vec<String> = match n {
                Some(n) => (1..=*n).map(|i| format!("x{i}")).collect(),
                None => leaves.clone(),
            };
            let distinct: BTreeSet<&String> = labels.iter().collect();
            if distinct.len() != labels.len() {
                return Err(TreeError::DuplicateLeaf(labels.join(",")).into());
            }
            let trees = enumerate_xtrees(&labels, bound(DEFAULT_MAX_ENUMERATION_LEAVES))?;
            if *count {
                out.emit(&json!({ "count": trees.len() }), || trees.len().to_string())?;
            } else {
                for t in trees {
                    let newick = t.canonical_newick();
                    out.emit(&json!({ "newick": newick }), || newick.clone())?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit_sets(
    out: &mut Output<'_>,
    m: &TreeMatroid,
    sets: &[Vec<usize>],
    key: &str,
    count: bool,
) -> Result<()> {
    if count {
        return out.emit(&json!({ "count": sets.len() }), || sets.len().to_string());
    }
    for idx in sets {
        let set = m.cord_set(idx);
        out.emit(&json!({ key: set }), || cord_strings(&set).join(" "))?;
    }
    Ok(())
}
