//! The `lamplight` command line.
//!
//! Every command prints an [`OutputReport`], re-checks its witnesses by
//! simulation first, and exits with 0 for a positive answer, 2 for a
//! legitimate negative one (unsolvable target, singular grid, no dark-only
//! ordering) and 1 for errors.

mod report;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use report::{Fields, Outcome, OutputReport};

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::graph::{hypercube_game, Graph, DEFAULT_PREMISE_CAP};
use crate::matchings::{
    count_complete_matchings, grid_controllable, grid_matching_parity, list_complete_matchings,
    matching_parity, monomer_dimer_parity, DEFAULT_MATCHING_CAP, DEFAULT_WIDTH_CAP,
};
use crate::mikado::{self, RenderMode, MAX_DIAMOND};
use crate::solver::{
    apply, dark_only_order_with_cap, is_dark_at_press, light_all_constructive, lightable,
    majority_witness, max_lit, undirected_equivalent, ConstructiveOptions, LampConfig, PressSet,
    DEFAULT_MAJORITY_CAP, DEFAULT_ORDER_CAP, DEFAULT_RANK_CAP,
};

/// Largest hypercube game the CLI builds; uniformity is checked over all
/// `2^k` press combinations.
const MAX_HYPERCUBE: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "lamplight", version, about = "Lamp-lighting games over GF(2)")]
pub struct Cli {
    /// Print the report as JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find a press set lighting a target configuration from dark.
    Solve {
        /// Board in the text graph format.
        graph: PathBuf,
        /// `all`, or one 0/1 digit per lamp.
        #[arg(long, default_value = "all")]
        target: String,
    },
    /// Light every lamp, by linear algebra or by the inductive construction.
    LightAll {
        /// Board in the text graph format.
        graph: PathBuf,
        /// Use the inductive construction instead of solving the linear system.
        #[arg(long)]
        constructive: bool,
        /// Vertex count up to which the odd-subset premise is checked first.
        #[arg(long, default_value_t = DEFAULT_PREMISE_CAP)]
        premise_cap: usize,
    },
    /// Controllability of the looped m x n grid, three ways.
    Grid {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Largest narrow side for the transfer-matrix parity.
        #[arg(long, default_value_t = DEFAULT_WIDTH_CAP)]
        width_cap: usize,
        /// Largest cell count for which tilings are counted exactly.
        #[arg(long, default_value_t = DEFAULT_MATCHING_CAP)]
        matching_cap: usize,
    },
    /// An undirected board with the same lightable configurations.
    Equiv {
        /// Board in the text graph format.
        graph: PathBuf,
        /// Largest rank for which the reachable configurations are enumerated.
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
    /// Order an all-lamps press set so each button is pressed while dark.
    DarkOrder {
        /// Board in the text graph format.
        graph: PathBuf,
        /// Press set to order (0/1 per button); defaults to a solution of
        /// the all-lit target.
        #[arg(long)]
        presses: Option<String>,
        /// Largest press set searched over all orderings.
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
    },
    /// Generate the k-th mikado diamond and check it lights five lamps.
    Mikado {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=MAX_DIAMOND as i64))]
        k: u32,
        /// Write a plain PBM bitmap here.
        #[arg(long)]
        render: Option<PathBuf>,
        /// Draw the pressed buttons or the lit lamps.
        #[arg(long, default_value = "presses", value_parser = parse_mode)]
        mode: RenderMode,
    },
    /// Count complete matchings and compare with the determinant parity.
    Matchings {
        /// Board in the text graph format.
        graph: PathBuf,
        /// Largest vertex count for exact counting.
        #[arg(long, default_value_t = DEFAULT_MATCHING_CAP)]
        cap: usize,
        /// Also list every complete matching.
        #[arg(long)]
        list: bool,
    },
    /// Largest number of lamps lit at once.
    MaxLit {
        /// Board in the text graph format.
        graph: PathBuf,
        /// Largest rank for which the reachable configurations are enumerated.
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
    /// The game with k buttons and a lamp for every nonzero k-bit word.
    Hypercube {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_HYPERCUBE as u64))]
        k: u64,
        /// Largest button count for the exhaustive majority search.
        #[arg(long, default_value_t = DEFAULT_MAJORITY_CAP)]
        majority_cap: usize,
    },
}

fn parse_mode(s: &str) -> Result<RenderMode> {
    s.parse()
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Execution { code, stdout, stderr };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Execution {
            code: report.exit_code(),
            stdout: if cli.json { report.to_json() } else { report.to_text() },
            stderr: String::new(),
        },
        Err(e) => Execution {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(command: &Command) -> Result<OutputReport> {
    match command {
        Command::Solve { graph, target } => cmd_solve(graph, target),
        Command::LightAll {
            graph,
            constructive,
            premise_cap,
        } => cmd_light_all(graph, *constructive, *premise_cap),
        Command::Grid {
            m,
            n,
            width_cap,
            matching_cap,
        } => cmd_grid(*m as usize, *n as usize, *width_cap, *matching_cap),
        Command::Equiv { graph, rank_cap } => cmd_equiv(graph, *rank_cap),
        Command::DarkOrder {
            graph,
            presses,
            order_cap,
        } => cmd_dark_order(graph, presses.as_deref(), *order_cap),
        Command::Mikado { k, render, mode } => cmd_mikado(*k, render.as_deref(), *mode),
        Command::Matchings { graph, cap, list } => cmd_matchings(graph, *cap, *list),
        Command::MaxLit { graph, rank_cap } => cmd_max_lit(graph, *rank_cap),
        Command::Hypercube { k, majority_cap } => cmd_hypercube(*k as usize, *majority_cap),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    text.parse()
}

fn parse_bits(s: &str, len: usize, what: &str) -> Result<BitVec> {
    let bits: BitVec = s.parse()?;
    if bits.len() != len {
        return Err(Error::InvalidArgument(format!(
            "{what} has {} digits, expected {len}",
            bits.len()
        )));
    }
    Ok(bits)
}

fn verify(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

fn cmd_solve(path: &Path, target: &str) -> Result<OutputReport> {
    let g = read_graph(path)?;
    let a = g.adjacency();
    let goal = if target == "all" {
        LampConfig::all_lit(g.n())
    } else {
        LampConfig(parse_bits(target, g.n(), "target")?)
    };
    let mut r = OutputReport::new("solve");
    r.inputs.push("graph", path.display().to_string());
    r.inputs.push("target", goal.to_string());
    match lightable(&a, &goal)? {
        Some(p) => {
            let lit = apply(&a, &p, &LampConfig::dark(g.n()))?;
            verify(lit == goal, || format!("press set {p} lights {lit}, not {goal}"))?;
            r.result.push("solvable", true);
            r.witnesses.push("presses", p.to_string());
        }
        None => {
            r.result.push("solvable", false);
            r.result.push("answer", "unsolvable");
            r.outcome = Outcome::Negative;
        }
    }
    Ok(r)
}

fn cmd_light_all(path: &Path, constructive: bool, premise_cap: usize) -> Result<OutputReport> {
    let g = read_graph(path)?;
    let a = g.adjacency();
    let mut r = OutputReport::new("light-all");
    r.inputs.push("graph", path.display().to_string());
    r.inputs.push("constructive", constructive);
    let presses = if constructive {
        let opts = ConstructiveOptions {
            premise_cap,
            ..ConstructiveOptions::default()
        };
        let c = light_all_constructive(&g, opts)?;
        r.result.push("method", "constructive");
        r.result.push("subsets", c.stats.subsets);
        r.result.push("memo_hits", c.stats.memo_hits);
        r.result.push("base_cases", c.stats.base_cases);
        r.result.push("direct", c.stats.direct);
        r.result.push("even_case", c.stats.even_case);
        r.result.push("odd_case", c.stats.odd_case);
        Some(c.presses)
    } else {
        r.result.push("method", "linear algebra");
        lightable(&a, &LampConfig::all_lit(g.n()))?
    };
    match presses {
        Some(p) => {
            let lit = apply(&a, &p, &LampConfig::dark(g.n()))?;
            verify(lit.is_all_lit(), || format!("press set {p} leaves lamps dark: {lit}"))?;
            r.result.push("verification", "OK");
            r.witnesses.push("presses", p.to_string());
        }
        None => {
            r.result.push("answer", "unsolvable");
            r.outcome = Outcome::Negative;
        }
    }
    Ok(r)
}

fn parity_word(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

fn cmd_grid(m: usize, n: usize, width_cap: usize, matching_cap: usize) -> Result<OutputReport> {
    let controllable = grid_controllable(m, n)?;
    let transfer = monomer_dimer_parity(m, n, width_cap)?;
    let det = grid_matching_parity(m, n)?;
    let tilings = if m * n <= matching_cap {
        Some(count_complete_matchings(&crate::graph::grid_graph(m, n), matching_cap)?)
    } else {
        None
    };
    let agree = controllable == transfer
        && transfer == det
        && tilings.is_none_or(|t| (t % 2 == 1) == det);
    verify(agree, || {
        format!("grid {m}x{n}: gcd says {controllable}, transfer matrix {transfer}, determinant {det}, count {tilings:?}")
    })?;

    let mut r = OutputReport::new("grid");
    r.inputs.push("m", m);
    r.inputs.push("n", n);
    r.result.push("controllable", controllable);
    r.result.push("parity", parity_word(transfer));
    r.result.push("determinant", parity_word(det));
    if let Some(t) = tilings {
        r.result.push("tilings", t);
    }
    r.result.push("agree", agree);
    if !controllable {
        r.outcome = Outcome::Negative;
    }
    Ok(r)
}

fn cmd_equiv(path: &Path, rank_cap: usize) -> Result<OutputReport> {
    let g = read_graph(path)?;
    let e = undirected_equivalent(&g, rank_cap)?;
    let back = e.graph_on_original_labels();
    verify(
        back.adjacency().matrix().row_spaces_equal(g.adjacency().matrix())?,
        || "equivalent board changes the lightable configurations".into(),
    )?;
    let perm: Vec<String> = e.perm.iter().map(usize::to_string).collect();
    let mut r = OutputReport::new("equiv");
    r.inputs.push("graph", path.display().to_string());
    r.result.push("k", e.k);
    r.result.push("rank", e.rank);
    r.result.push("perm", format!("[{}]", perm.join(", ")));
    r.result.push("graph", e.graph.to_string());
    r.result.push("graph_original_labels", back.to_string());
    Ok(r)
}

fn cmd_dark_order(path: &Path, presses: Option<&str>, order_cap: usize) -> Result<OutputReport> {
    let g = read_graph(path)?;
    let mut r = OutputReport::new("dark-order");
    r.inputs.push("graph", path.display().to_string());
    let p = match presses {
        Some(s) => PressSet(parse_bits(s, g.n(), "press set")?),
        None => match lightable(&g.adjacency(), &LampConfig::all_lit(g.n()))? {
            Some(p) => p,
            None => {
                r.result.push("answer", "not every lamp can be lit");
                r.outcome = Outcome::Negative;
                return Ok(r);
            }
        },
    };
    r.inputs.push("presses", p.to_string());
    let bipartite = g.is_undirected() && g.all_loops() && g.bipartition()?.is_some();
    r.result.push("method", if bipartite { "bipartite" } else { "search" });
    match dark_only_order_with_cap(&g, &p, order_cap)? {
        Some(seq) => {
            verify(is_dark_at_press(&g, &seq) && seq.parity(g.n()) == p, || {
                format!("ordering {seq} is not a dark-only ordering of {p}")
            })?;
            r.result.push("verification", "OK");
            r.witnesses.push("order", seq.to_string());
        }
        None => {
            r.result.push("answer", "no dark-only ordering exists");
            r.outcome = Outcome::Negative;
        }
    }
    Ok(r)
}

fn cmd_mikado(k: u32, render: Option<&Path>, mode: RenderMode) -> Result<OutputReport> {
    let d = mikado::mikado_diamond(k)?;
    let lit = mikado::lit_lamps(&d);
    let reach = mikado::diamond_reach(k);
    let expected = mikado::LitSet::from_points([(0, 0), (reach, 0), (-reach, 0), (0, reach), (0, -reach)]);
    verify(lit == expected, || format!("diamond {k} lights {lit}"))?;

    let mut r = OutputReport::new("mikado");
    r.inputs.push("k", k);
    r.result.push("presses", d.len());
    r.result.push("lamps", lit.len());
    r.result.push("reach", reach);
    if let Some(path) = render {
        let bitmap = mikado::render(&d, mode);
        fs::write(path, bitmap.to_pbm())
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
        r.inputs.push("render", path.display().to_string());
        r.inputs.push("mode", mode.to_string());
        r.result.push("bitmap", format!("{}x{}", bitmap.width, bitmap.height));
    }
    r.witnesses.push("lit", lit.to_string());
    Ok(r)
}

fn cmd_matchings(path: &Path, cap: usize, list: bool) -> Result<OutputReport> {
    let g = read_graph(path)?;
    let count = count_complete_matchings(&g, cap)?;
    let odd = matching_parity(&g)?;
    verify((count % 2 == 1) == odd, || {
        format!("{count} complete matchings but determinant parity {}", parity_word(odd))
    })?;
    let mut r = OutputReport::new("matchings");
    r.inputs.push("graph", path.display().to_string());
    r.result.push("count", count);
    r.result.push("parity", parity_word(odd));
    r.result.push("controllable", odd);
    if list {
        let all = list_complete_matchings(&g, cap)?;
        let lines: Vec<String> = all.iter().map(ToString::to_string).collect();
        r.witnesses.push("matchings", lines.join("\n"));
    }
    if !odd {
        r.outcome = Outcome::Negative;
    }
    Ok(r)
}

fn cmd_max_lit(path: &Path, rank_cap: usize) -> Result<OutputReport> {
    let g = read_graph(path)?;
    let a = g.adjacency();
    let best = max_lit(&a, rank_cap)?;
    let lit = apply(&a, &best.witness, &LampConfig::dark(g.n()))?;
    verify(lit == best.lit && lit.lit_count() == best.k, || {
        format!("witness {} lights {lit}", best.witness)
    })?;
    let mut r = OutputReport::new("max-lit");
    r.inputs.push("graph", path.display().to_string());
    r.result.push("k", best.k);
    r.result.push("lamps", g.n());
    r.result.push("lit", best.lit.to_string());
    r.witnesses.push("presses", best.witness.to_string());
    Ok(r)
}

fn cmd_hypercube(k: usize, majority_cap: usize) -> Result<OutputReport> {
    let a = hypercube_game(k)?;
    let lamps = a.lamps();
    let half = 1usize << (k - 1);
    let uniform = (1u64..1 << k).all(|mask| {
        let p = PressSet(BitVec::from_u64(k, mask));
        a.matrix().combine_rows(&p.0).count_ones() == half
    });
    verify(uniform, || format!("some press combination does not light {half} lamps"))?;
    let best = max_lit(&a, k)?;
    let majority = majority_witness(&a, majority_cap)?;
    let weight = apply(&a, &majority, &LampConfig::dark(lamps))?.lit_count();
    verify(2 * weight > lamps, || format!("majority witness lights only {weight}"))?;

    let mut r = OutputReport::new("hypercube");
    r.inputs.push("k", k);
    r.result.push("buttons", k);
    r.result.push("lamps", lamps);
    r.result.push("max_lit", best.k);
    r.result.push("every_nonempty_press_lights", half);
    r.result.push("majority_lit", weight);
    r.witnesses.push("majority", majority.to_string());
    Ok(r)
}
