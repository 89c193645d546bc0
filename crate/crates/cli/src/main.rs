mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use colorful_core::coloring::{
    b_spectrum, chromatic_number, is_colorful, is_proper, Budget, Colorfulness, KStatus, SearchOptions,
};
use colorful_core::fixtures::{heawood, kg73_colorful_five, kg73_colorful_four, petersen, q3};
use colorful_core::homlift::{
    compose, is_semi_locally_surjective, kneser_step_hom, lift_coloring, SlsFailure, SlsVerdict,
};
use colorful_core::io::{load_coloring, load_graph, load_map, map_graph_paths, save_coloring, save_graph, write_map};
use colorful_core::kneser::kneser_graph;
use colorful_core::{Error, Girth, Graph};

use report::{set_string, Report, Status};

/// Colorful (b-dominating) colorings, Kneser graphs and semi-locally-surjective maps.
///
/// Exit status: 0 true/verified, 1 false/refuted, 2 inconclusive (budget), 3 input error.
#[derive(Debug, Parser)]
#[command(name = "colorful", version)]
struct Cli {
    /// Emit a flat JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kneser graph generation.
    #[command(subcommand)]
    Kneser(KneserCmd),
    /// Coloring checks and searches.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Vertex maps between graphs.
    #[command(subcommand)]
    Hom(HomCmd),
    /// Export a built-in graph (and its colorings) to DIR.
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
        #[arg(short, long, value_name = "DIR")]
        out: PathBuf,
    },
    /// Structural graph properties.
    #[command(subcommand)]
    Graph(GraphCmd),
}

#[derive(Debug, Subcommand)]
enum KneserCmd {
    /// Write KG(n, m) as a .col file with a .labels sidecar.
    Gen {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum ColorCmd {
    /// Check that a coloring is proper, and optionally colorful.
    Verify {
        #[arg(short, long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        coloring: PathBuf,
        /// Also require a b-dominating vertex in every color class.
        #[arg(long)]
        colorful: bool,
    },
    /// Exact chromatic number.
    Chromatic {
        #[arg(short, long, value_name = "FILE")]
        graph: PathBuf,
        /// Write an optimal coloring here.
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Every k admitting a colorful k-coloring, between chi and the m-degree.
    Bspectrum {
        #[arg(short, long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness for each k found as `k<K>.coloring` here.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Search-node budget per k.
    #[arg(long, value_name = "NODES", default_value_t = 2_000_000_000)]
    budget: u64,
    /// Wall-clock limit per k, in seconds.
    #[arg(long, value_name = "SECS", default_value_t = 600)]
    time_limit: u64,
    /// Parallel search workers; witnesses are reproducible only with 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: Budget {
                max_nodes: Some(self.budget),
                max_time: Some(Duration::from_secs(self.time_limit)),
            },
            workers: self.workers as usize,
        }
    }
}

#[derive(Debug, Subcommand)]
enum HomCmd {
    /// Report homomorphism, surjectivity and SLS verdicts with a certificate.
    Verify {
        #[arg(short = 'f', long = "map", value_name = "MAP")]
        map: PathBuf,
    },
    /// Write the step map KG(n+2, m+1) -> KG(n, m), plus both graphs next to it.
    KneserStep {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(short, long, value_name = "MAP")]
        out: PathBuf,
    },
    /// Write g . f for f: G -> H and g: H -> K.
    Compose {
        #[arg(short = 'f', value_name = "MAP1")]
        first: PathBuf,
        #[arg(short = 'g', value_name = "MAP2")]
        second: PathBuf,
        #[arg(short, long, value_name = "MAP")]
        out: PathBuf,
    },
    /// Pull a colorful coloring of the target back along an SLS map.
    Lift {
        #[arg(short = 'f', long = "map", value_name = "MAP")]
        map: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        coloring: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FixtureName {
    Kg73,
    Petersen,
    Q3,
    Heawood,
}

#[derive(Debug, Subcommand)]
enum GraphCmd {
    Girth {
        #[arg(short, long, value_name = "FILE")]
        graph: PathBuf,
    },
    Regularity {
        #[arg(short, long, value_name = "FILE")]
        graph: PathBuf,
    },
    Bipartite {
        #[arg(short, long, value_name = "FILE")]
        graph: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok((report, status)) => {
            print!("{}", report.render(cli.json));
            status.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: &Command) -> Result<(Report, Status)> {
    match cmd {
        Command::Kneser(KneserCmd::Gen { n, m, out }) => kneser_gen(*n, *m, out),
        Command::Color(ColorCmd::Verify {
            graph,
            coloring,
            colorful,
        }) => color_verify(graph, coloring, *colorful),
        Command::Color(ColorCmd::Chromatic { graph, out }) => color_chromatic(graph, out.as_deref()),
        Command::Color(ColorCmd::Bspectrum { graph, search, out_dir }) => {
            color_bspectrum(graph, &search.options(), out_dir.as_deref())
        }
        Command::Hom(HomCmd::Verify { map }) => hom_verify(map),
        Command::Hom(HomCmd::KneserStep { n, m, out }) => hom_kneser_step(*n, *m, out),
        Command::Hom(HomCmd::Compose { first, second, out }) => hom_compose(first, second, out),
        Command::Hom(HomCmd::Lift { map, coloring, out }) => hom_lift(map, coloring, out),
        Command::Fixture { name, out } => fixture(*name, out),
        Command::Graph(cmd) => graph_property(cmd),
    }
}

fn load(path: &Path) -> Result<Graph> {
    load_graph(path).map_err(|e| in_file(e, path))
}

/// Parse and I/O errors already name their file; anything else gets it added.
fn in_file(e: Error, path: &Path) -> anyhow::Error {
    match e {
        Error::Parse { .. } | Error::Io(_) => e.into(),
        other => anyhow::Error::new(other).context(path.display().to_string()),
    }
}

fn labels(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| g.display_label(v)).collect::<Vec<_>>().join(" ")
}

fn kneser_gen(n: usize, m: usize, out: &Path) -> Result<(Report, Status)> {
    let kg = kneser_graph(n, m)?;
    save_graph(out, kg.graph())?;
    let mut r = Report::new();
    r.put("graph", format!("KG({n},{m})"))
        .put("vertices", kg.graph().vertex_count())
        .put("edges", kg.graph().edge_count())
        .put("file", out.display().to_string());
    Ok((r, Status::True))
}

fn color_verify(graph: &Path, coloring: &Path, colorful: bool) -> Result<(Report, Status)> {
    let g = load(graph)?;
    let c = load_coloring(coloring, &g).map_err(|e| in_file(e, coloring))?;
    let mut r = Report::new();
    r.put("vertices", g.vertex_count()).put("k", c.k());
    let verdict = is_colorful(&g, &c)?;
    let proper = is_proper(&g, &c)?;
    r.put("proper", proper);
    if let Colorfulness::NotProper { edge: (u, v) } = verdict {
        r.put("monochromatic_edge", labels(&g, [u, v]));
    }
    if !colorful {
        return Ok((r, Status::from_bool(proper)));
    }
    r.put("colorful", verdict.is_colorful());
    match &verdict {
        Colorfulness::Colorful { witnesses } => {
            for (i, &w) in witnesses.iter().enumerate() {
                r.put(format!("witness_{}", i + 1), g.display_label(w));
            }
        }
        Colorfulness::NoDominatingVertex { color } => {
            r.put("undominated_color", *color);
        }
        Colorfulness::NotProper { .. } => {}
    }
    Ok((r, Status::from_bool(verdict.is_colorful())))
}

fn color_chromatic(graph: &Path, out: Option<&Path>) -> Result<(Report, Status)> {
    let g = load(graph)?;
    let res = chromatic_number(&g)?;
    if let Some(out) = out {
        save_coloring(out, &g, &res.witness)?;
    }
    let mut r = Report::new();
    r.put("vertices", g.vertex_count())
        .put("chi", res.chi)
        .put("clique_bound", res.clique_bound);
    if let Some(out) = out {
        r.put("witness_file", out.display().to_string());
    }
    Ok((r, Status::True))
}

fn color_bspectrum(graph: &Path, opts: &SearchOptions, out_dir: Option<&Path>) -> Result<(Report, Status)> {
    let g = load(graph)?;
    let rep = b_spectrum(&g, opts)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for k in rep.spectrum() {
            save_coloring(
                &dir.join(format!("k{k}.coloring")),
                &g,
                rep.witness(k).expect("found k has a witness"),
            )?;
        }
    }
    let mut r = Report::new();
    r.put("vertices", g.vertex_count())
        .put("chi", rep.chi)
        .put("m_degree", rep.upper_bound)
        .put("spectrum", set_string(&rep.spectrum()))
        .put("unknown", set_string(&rep.unknown()))
        .put("b", rep.b())
        .put("b_exact", rep.b_is_exact())
        .put("continuous", rep.continuous().to_string());
    for (k, s) in &rep.per_k {
        let s = match s {
            KStatus::Found(_) => "found",
            KStatus::NotExists => "none",
            KStatus::Unknown => "unknown",
        };
        r.put(format!("k_{k}"), s);
    }
    let status = if rep.is_complete() {
        Status::True
    } else {
        Status::Inconclusive
    };
    Ok((r, status))
}

fn load_map_at(path: &Path) -> Result<colorful_core::homlift::VertexMap> {
    load_map(path).map_err(|e| in_file(e, path))
}

fn hom_verify(path: &Path) -> Result<(Report, Status)> {
    let f = load_map_at(path)?;
    let (src, tgt) = (f.source(), f.target());
    let mut r = Report::new();
    r.put("source_vertices", src.vertex_count())
        .put("target_vertices", tgt.vertex_count())
        .put("homomorphism", f.is_homomorphism())
        .put("surjective", f.is_surjective());
    let verdict = is_semi_locally_surjective(&f);
    r.put("sls", verdict.is_yes());
    match &verdict {
        SlsVerdict::Yes(cert) => {
            for (u, w) in cert.witnesses.iter().enumerate() {
                r.put(format!("witness_{}", tgt.display_label(u)), src.display_label(w.source));
            }
        }
        SlsVerdict::No(SlsFailure::NotHomomorphism { edge: (a, b) }) => {
            r.put("broken_edge", labels(src, [*a, *b]));
        }
        SlsVerdict::No(SlsFailure::NotSurjective { target }) => {
            r.put("unreached", tgt.display_label(*target));
        }
        SlsVerdict::No(SlsFailure::NoWitness { target }) => {
            r.put("no_witness", tgt.display_label(*target));
        }
    }
    Ok((r, Status::from_bool(verdict.is_yes())))
}

fn parent_dir(path: &Path) -> &Path {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    }
}

fn hom_kneser_step(n: usize, m: usize, out: &Path) -> Result<(Report, Status)> {
    let step = kneser_step_hom(n, m)?;
    let dir = parent_dir(out);
    let src_name = format!("kg{}_{}.col", n + 2, m + 1);
    let tgt_name = format!("kg{n}_{m}.col");
    save_graph(&dir.join(&src_name), step.source.graph())?;
    save_graph(&dir.join(&tgt_name), step.target.graph())?;
    fs::write(out, write_map(&step.map, &src_name, &tgt_name)).with_context(|| format!("writing {}", out.display()))?;
    let mut r = Report::new();
    r.put("source", format!("KG({},{})", n + 2, m + 1))
        .put("target", format!("KG({n},{m})"))
        .put("source_file", dir.join(&src_name).display().to_string())
        .put("target_file", dir.join(&tgt_name).display().to_string())
        .put("map_file", out.display().to_string());
    Ok((r, Status::True))
}

/// How `file` should be named in a map header written into `dir`: its bare
/// name when it lives there, otherwise its absolute path.
fn header_name(file: &Path, dir: &Path) -> Result<String> {
    let file = fs::canonicalize(file).with_context(|| format!("resolving {}", file.display()))?;
    let dir = fs::canonicalize(dir).with_context(|| format!("resolving {}", dir.display()))?;
    if file.parent() == Some(dir.as_path()) {
        if let Some(name) = file.file_name().and_then(|s| s.to_str()) {
            return Ok(name.to_string());
        }
    }
    Ok(file.display().to_string())
}

fn hom_compose(first: &Path, second: &Path, out: &Path) -> Result<(Report, Status)> {
    let f = load_map_at(first)?;
    let g = load_map_at(second)?;
    let h = compose(&f, &g)?;
    let (src, _) = map_graph_paths(first)?;
    let (_, tgt) = map_graph_paths(second)?;
    let dir = parent_dir(out);
    let text = write_map(&h, &header_name(&src, dir)?, &header_name(&tgt, dir)?);
    fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
    let mut r = Report::new();
    r.put("source_vertices", h.source().vertex_count())
        .put("target_vertices", h.target().vertex_count())
        .put("homomorphism", h.is_homomorphism())
        .put("surjective", h.is_surjective())
        .put("map_file", out.display().to_string());
    Ok((r, Status::True))
}

fn hom_lift(map: &Path, coloring: &Path, out: &Path) -> Result<(Report, Status)> {
    let f = load_map_at(map)?;
    let c = load_coloring(coloring, f.target()).map_err(|e| in_file(e, coloring))?;
    let mut r = Report::new();
    let lifted = match lift_coloring(&f, &c) {
        Ok(l) => l,
        Err(Error::Precondition(why)) => {
            r.put("lifted", false).put("reason", why);
            return Ok((r, Status::False));
        }
        Err(e) => return Err(e.into()),
    };
    save_coloring(out, f.source(), &lifted.coloring)?;
    r.put("lifted", true).put("k", lifted.coloring.k());
    for (i, &w) in lifted.witnesses.iter().enumerate() {
        r.put(format!("witness_{}", i + 1), f.source().display_label(w));
    }
    r.put("coloring_file", out.display().to_string());
    Ok((r, Status::True))
}

fn fixture(name: FixtureName, dir: &Path) -> Result<(Report, Status)> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut r = Report::new();
    let mut written = Vec::new();
    let mut save = |file: &str, g: &Graph| -> Result<()> {
        save_graph(&dir.join(file), g)?;
        written.push(file.to_string());
        Ok(())
    };
    match name {
        FixtureName::Kg73 => {
            let fx = kg73_colorful_four();
            save("kg7_3.col", fx.graph())?;
            save_coloring(&dir.join("kg7_3_colorful4.coloring"), fx.graph(), &fx.coloring)?;
            let (kg, five) = kg73_colorful_five();
            save_coloring(&dir.join("kg7_3_colorful5.coloring"), kg.graph(), &five)?;
            written.push("kg7_3_colorful4.coloring".into());
            written.push("kg7_3_colorful5.coloring".into());
        }
        FixtureName::Petersen => save("petersen.col", &petersen())?,
        FixtureName::Q3 => save("q3.col", &q3())?,
        FixtureName::Heawood => save("heawood.col", &heawood())?,
    }
    r.put("dir", dir.display().to_string()).put("files", written.join(" "));
    Ok((r, Status::True))
}

fn graph_property(cmd: &GraphCmd) -> Result<(Report, Status)> {
    let mut r = Report::new();
    match cmd {
        GraphCmd::Girth { graph } => {
            let g = load(graph)?;
            let girth = g.girth();
            r.put("girth", girth.to_string())
                .put("acyclic", girth == Girth::Infinite);
            Ok((r, Status::True))
        }
        GraphCmd::Regularity { graph } => {
            let g = load(graph)?;
            let d = g.regularity()?;
            r.put("regular", d.is_some());
            if let Some(d) = d {
                r.put("degree", d);
            }
            Ok((r, Status::from_bool(d.is_some())))
        }
        GraphCmd::Bipartite { graph } => {
            let g = load(graph)?;
            let sides = g.bipartition();
            r.put("bipartite", sides.is_some());
            if let Some(side) = &sides {
                r.put("side_0", labels(&g, (0..g.vertex_count()).filter(|&v| side[v] == 0)));
                r.put("side_1", labels(&g, (0..g.vertex_count()).filter(|&v| side[v] == 1)));
            }
            Ok((r, Status::from_bool(sides.is_some())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
