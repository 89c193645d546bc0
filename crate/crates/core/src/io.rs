//! Text formats.
//!
//! * Graphs: DIMACS-style `.col` — `c` comment lines, one `p edge <n> <m>`
//!   line, then `m` lines `e <u> <v>` with 1-based endpoints. Vertex labels
//!   go in a sidecar `<file>.labels`, one label per line in vertex order.
//! * Colorings: a `k <int>` header, then one `<vertex> <color>` line per
//!   vertex.
//! * Vertex maps: a `map <source-file> <target-file>` header, then one
//!   `<source-vertex> <target-vertex>` line per source vertex.
//!
//! Vertices are written by label when the graph carries labels and by
//! 1-based index otherwise; readers accept either.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homlift::VertexMap;
use crate::kneser::KneserLabel;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a nonnegative integer")))
}

pub fn read_col(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(line, "expected `p edge <n> <m>`"));
                }
                let n = parse_num(line, toks.next(), "vertex count")?;
                let m = parse_num(line, toks.next(), "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = parse_num(line, toks.next(), "endpoint")?;
                let v = parse_num(line, toks.next(), "endpoint")?;
                if u < 1 || v < 1 || u > n || v > n {
                    return Err(parse_err(line, format!("edge ({u}, {v}) outside 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type {other:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last_line.max(1), "missing `p edge` line"))?;
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_col(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("write to String");
    }
    out
}

pub fn read_labels(text: &str, n: usize) -> Result<Vec<String>> {
    let labels: Vec<String> = text
        .lines()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect();
    if labels.len() != n {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("{} labels for {n} vertices", labels.len()),
        ));
    }
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if let Some(j) = seen.insert(l.as_str(), i) {
            return Err(parse_err(i + 1, format!("label {l:?} repeats vertex {}", j + 1)));
        }
        if l.contains(char::is_whitespace) {
            return Err(parse_err(i + 1, format!("label {l:?} contains whitespace")));
        }
    }
    Ok(labels)
}

pub fn write_labels(g: &Graph) -> Option<String> {
    g.labels().map(|ls| ls.iter().map(|l| format!("{l}\n")).collect())
}

/// Resolves vertex tokens against a graph's labels or 1-based indices.
struct VertexResolver<'g> {
    g: &'g Graph,
    by_label: HashMap<&'g str, usize>,
    universe: Option<usize>,
}

impl<'g> VertexResolver<'g> {
    fn new(g: &'g Graph) -> Self {
        let by_label: HashMap<&str, usize> = g
            .labels()
            .map(|ls| ls.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect())
            .unwrap_or_default();
        // Kneser labels may be written with members in any order
        let universe = g.labels().and_then(|ls| {
            ls.iter()
                .map(|l| KneserLabel::parse(64, l).ok().and_then(|k| k.members().last().copied()))
                .try_fold(0, |acc, x| x.map(|x| acc.max(x)))
        });
        Self { g, by_label, universe }
    }

    fn resolve(&self, line: usize, tok: &str) -> Result<usize> {
        if let Some(&v) = self.by_label.get(tok) {
            return Ok(v);
        }
        if let (Some(n), true) = (self.universe, tok.starts_with('{')) {
            if let Ok(l) = KneserLabel::parse(n, tok) {
                if let Some(&v) = self.by_label.get(l.to_string().as_str()) {
                    return Ok(v);
                }
            }
        }
        match tok.parse::<usize>() {
            Ok(i) if (1..=self.g.vertex_count()).contains(&i) => Ok(i - 1),
            _ => Err(parse_err(line, format!("unknown vertex {tok:?}"))),
        }
    }
}

pub fn read_coloring(text: &str, g: &Graph) -> Result<Coloring> {
    let resolver = VertexResolver::new(g);
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `k <int>` header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("k") {
        return Err(parse_err(line, "expected `k <int>` header"));
    }
    let k = parse_num(line, toks.next(), "color count")?;
    let mut colors = vec![0; g.vertex_count()];
    let mut last_line = line;
    for (line, l) in lines {
        last_line = line;
        let mut toks = l.split_whitespace();
        let v = resolver.resolve(line, toks.next().expect("line is nonblank"))?;
        let c = parse_num(line, toks.next(), "color")?;
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
        if c < 1 || c > k {
            return Err(parse_err(line, format!("color {c} outside 1..={k}")));
        }
        if colors[v] != 0 {
            return Err(parse_err(line, format!("vertex {} colored twice", g.display_label(v))));
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(parse_err(
            last_line,
            format!("vertex {} has no color", g.display_label(v)),
        ));
    }
    Coloring::new(k, colors)
}

pub fn write_coloring(g: &Graph, c: &Coloring) -> String {
    let mut out = format!("k {}\n", c.k());
    for v in 0..g.vertex_count() {
        writeln!(out, "{} {}", g.display_label(v), c.color(v)).expect("write to String");
    }
    out
}

/// File names from a map file header.
pub fn read_map_header(text: &str) -> Result<(String, String)> {
    let (line, header) = content_lines(text)
        .next()
        .ok_or_else(|| parse_err(1, "missing `map <source> <target>` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    match toks.as_slice() {
        ["map", s, t] => Ok((s.to_string(), t.to_string())),
        _ => Err(parse_err(line, "expected `map <source-file> <target-file>`")),
    }
}

pub fn read_map(text: &str, source: Arc<Graph>, target: Arc<Graph>) -> Result<VertexMap> {
    read_map_header(text)?;
    let src = VertexResolver::new(&source);
    let tgt = VertexResolver::new(&target);
    let mut image = vec![usize::MAX; source.vertex_count()];
    let mut last_line = 1;
    for (line, l) in content_lines(text).skip(1) {
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(parse_err(line, "expected `<source-vertex> <target-vertex>`"));
        };
        let a = src.resolve(line, a)?;
        let b = tgt.resolve(line, b)?;
        if image[a] != usize::MAX {
            return Err(parse_err(
                line,
                format!("vertex {} mapped twice", source.display_label(a)),
            ));
        }
        image[a] = b;
    }
    if let Some(v) = image.iter().position(|&u| u == usize::MAX) {
        return Err(parse_err(
            last_line,
            format!("vertex {} is not mapped", source.display_label(v)),
        ));
    }
    VertexMap::new(source, target, image)
}

pub fn write_map(f: &VertexMap, source_file: &str, target_file: &str) -> String {
    let mut out = format!("map {source_file} {target_file}\n");
    for v in 0..f.source().vertex_count() {
        writeln!(
            out,
            "{} {}",
            f.source().display_label(v),
            f.target().display_label(f.apply(v))
        )
        .expect("write to String");
    }
    out
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn labels_path(col: &Path) -> PathBuf {
    let mut s = col.as_os_str().to_owned();
    s.push(".labels");
    PathBuf::from(s)
}

/// Reads a `.col` file and its label sidecar, if present.
pub fn load_graph(path: &Path) -> Result<Graph> {
    let g = read_col(&read_file(path)?).map_err(|e| in_file(path, e))?;
    let lp = labels_path(path);
    if lp.exists() {
        let labels = read_labels(&read_file(&lp)?, g.vertex_count()).map_err(|e| in_file(&lp, e))?;
        return g.with_labels(labels);
    }
    Ok(g)
}

/// Writes a `.col` file, plus its label sidecar when the graph has labels.
pub fn save_graph(path: &Path, g: &Graph) -> Result<()> {
    write_file(path, &write_col(g))?;
    if let Some(labels) = write_labels(g) {
        write_file(&labels_path(path), &labels)?;
    }
    Ok(())
}

pub fn load_coloring(path: &Path, g: &Graph) -> Result<Coloring> {
    read_coloring(&read_file(path)?, g).map_err(|e| in_file(path, e))
}

pub fn save_coloring(path: &Path, g: &Graph, c: &Coloring) -> Result<()> {
    write_file(path, &write_coloring(g, c))
}

/// Source and target graph files named in a map file's header, resolved
/// against the map file's directory.
pub fn map_graph_paths(path: &Path) -> Result<(PathBuf, PathBuf)> {
    let (s, t) = read_map_header(&read_file(path)?).map_err(|e| in_file(path, e))?;
    let dir = path.parent().unwrap_or(Path::new(""));
    Ok((dir.join(s), dir.join(t)))
}

/// Reads a map file; graph file names in its header are relative to the
/// map file's directory.
pub fn load_map(path: &Path) -> Result<VertexMap> {
    let (s, t) = map_graph_paths(path)?;
    let source = Arc::new(load_graph(&s)?);
    let target = Arc::new(load_graph(&t)?);
    read_map(&read_file(path)?, source, target).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::kneser_graph;

    #[test]
    fn col_roundtrip_and_comments() {
        let text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\nc mid comment\ne 1 3\n";
        let g = read_col(text).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(write_col(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        assert_eq!(read_col(&write_col(&g)).unwrap(), g);
    }

    #[test]
    fn col_errors_carry_line_numbers() {
        let cases = [
            ("p edge 3 1\ne 1 4\n", 2),
            ("e 1 2\n", 1),
            ("p edge 3 1\ne 2 2\n", 2),
            ("p edge 3 2\ne 1 2\n", 2),
            ("p edge x 1\n", 1),
            ("p edge 3 0\nq 1 2\n", 2),
            ("", 1),
        ];
        for (text, want) in cases {
            match read_col(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn coloring_by_label_and_index() {
        let kg = kneser_graph(5, 2).unwrap();
        let g = kg.graph();
        let c = Coloring::new(3, (0..10).map(|v| v % 3 + 1).collect()).unwrap();
        let text = write_coloring(g, &c);
        assert!(text.starts_with("k 3\n{1,2} 1\n{1,3} 2\n"));
        assert_eq!(read_coloring(&text, g).unwrap(), c);
        // permuted member order and bare indices are accepted
        let alt = text.replace("{1,3} 2", "{3,1} 2").replace("{1,2} 1", "1 1");
        assert_eq!(read_coloring(&alt, g).unwrap(), c);
    }

    #[test]
    fn coloring_errors() {
        let g = Graph::path(2);
        assert!(matches!(
            read_coloring("k 2\n1 1\n", &g),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_coloring("k 2\n1 1\n1 2\n", &g),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_coloring("k 2\n1 1\n2 3\n", &g),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_coloring("k 2\n1 1\n3 1\n", &g),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_coloring("colors 2\n", &g),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn labels_validation() {
        assert_eq!(read_labels("a\nb\n", 2).unwrap(), ["a", "b"]);
        assert!(read_labels("a\n", 2).is_err());
        assert!(matches!(read_labels("a\na\n", 2), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn map_roundtrip() {
        let src = Arc::new(Graph::path(3));
        let tgt = Arc::new(Graph::complete(2));
        let f = VertexMap::new(Arc::clone(&src), Arc::clone(&tgt), vec![0, 1, 0]).unwrap();
        let text = write_map(&f, "p3.col", "k2.col");
        assert_eq!(text, "map p3.col k2.col\n1 1\n2 2\n3 1\n");
        assert_eq!(read_map_header(&text).unwrap(), ("p3.col".into(), "k2.col".into()));
        assert_eq!(read_map(&text, src.clone(), tgt.clone()).unwrap(), f);
        assert!(matches!(
            read_map("map a b\n1 1\n1 2\n3 1\n", src.clone(), tgt.clone()),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_map("map a b\n1 1\n", src, tgt),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
