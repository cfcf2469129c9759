//! Text formats for trees, palm specs and colorings, plus DOT export.
//!
//! ```text
//! tree <n>            palm <a_1>,<a_2>,...,<a_n>      coloring <n> <k>
//! <u> <v>                                             <vertex> <color>
//! ...                                                 ...
//! ```
//!
//! Tree edges are written with `u < v`, sorted; coloring lines are sorted by
//! vertex. Several documents may follow each other in one stream, which is
//! how piped commands pass a tree and its coloring along together.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::locating::Coloring;
use crate::tree::{PalmSpec, Tree};

/// Largest vertex count accepted from a file.
pub const MAX_VERTICES: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Tree(Tree),
    Palm(PalmSpec),
    Coloring(Coloring),
}

pub fn write_tree(tree: &Tree) -> String {
    let mut out = format!("tree {}\n", tree.len());
    for &(u, v) in tree.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_palm_spec(spec: &PalmSpec) -> String {
    let arms: Vec<String> = spec.arms().iter().map(usize::to_string).collect();
    format!("palm {}\n", arms.join(","))
}

pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = format!("coloring {} {}\n", coloring.len(), coloring.k());
    for (v, c) in coloring.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

/// Non-blank lines with their 1-based line numbers.
struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((no, l)) => {
                self.last = no;
                Ok((no, l))
            }
            None => Err(Error::parse(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn is_done(&mut self) -> bool {
        self.inner.peek().is_none()
    }
}

fn number(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            format!("{what}: `{token}` is not a non-negative integer"),
        )
    })
}

fn fields<const N: usize>(line: usize, text: &str, what: &str) -> Result<[usize; N]> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != N {
        return Err(Error::parse(
            line,
            format!("expected {N} integers for {what}, found {}", tokens.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = number(line, tok, what)?;
    }
    Ok(out)
}

fn located(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

fn read_tree_body(header_line: usize, rest: &str, lines: &mut Lines<'_>) -> Result<Tree> {
    let [n] = fields::<1>(header_line, rest, "vertex count")?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::parse(
            header_line,
            format!("vertex count {n} outside 1..={MAX_VERTICES}"),
        ));
    }
    let mut edges = Vec::new();
    for _ in 1..n {
        let (no, text) = lines.next_line("an edge line")?;
        let [u, v] = fields::<2>(no, text, "edge")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                no,
                format!("edge {u} {v} has an endpoint outside 0..{n}"),
            ));
        }
        edges.push((u, v));
    }
    Tree::new(n, edges).map_err(|e| located(header_line, e))
}

fn read_palm_body(line: usize, rest: &str) -> Result<PalmSpec> {
    let mut arms = Vec::new();
    let mut total: usize = 1;
    for tok in rest.split(',') {
        let a = number(line, tok.trim(), "arm length")?;
        total = total.saturating_add(a);
        arms.push(a);
    }
    if total > MAX_VERTICES {
        return Err(Error::parse(
            line,
            format!("palm has more than {MAX_VERTICES} vertices"),
        ));
    }
    PalmSpec::new(arms).map_err(|e| located(line, e))
}

fn read_coloring_body(header_line: usize, rest: &str, lines: &mut Lines<'_>) -> Result<Coloring> {
    let [n, k] = fields::<2>(header_line, rest, "coloring header")?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::parse(
            header_line,
            format!("vertex count {n} outside 1..={MAX_VERTICES}"),
        ));
    }
    let mut colors = Vec::new();
    for expected in 0..n {
        let (no, text) = lines.next_line("a vertex color line")?;
        let [v, c] = fields::<2>(no, text, "vertex color")?;
        if v != expected {
            return Err(Error::parse(
                no,
                format!("expected vertex {expected}, found {v}"),
            ));
        }
        if c == 0 || c > k {
            return Err(Error::parse(no, format!("color {c} outside 1..={k}")));
        }
        colors.push(c);
    }
    let coloring = Coloring::new(colors).map_err(|e| located(header_line, e))?;
    if coloring.k() != k {
        return Err(Error::parse(
            header_line,
            format!("header declares {k} colors but {} are used", coloring.k()),
        ));
    }
    Ok(coloring)
}

fn read_document(lines: &mut Lines<'_>) -> Result<Document> {
    let (no, header) = lines.next_line("a document header")?;
    let (keyword, rest) = header
        .split_once(char::is_whitespace)
        .unwrap_or((header, ""));
    let rest = rest.trim();
    match keyword {
        "tree" => read_tree_body(no, rest, lines).map(Document::Tree),
        "palm" => read_palm_body(no, rest).map(Document::Palm),
        "coloring" => read_coloring_body(no, rest, lines).map(Document::Coloring),
        other => Err(Error::parse(
            no,
            format!("unknown header `{other}`, expected tree, palm or coloring"),
        )),
    }
}

/// Every document in `text`, in order.
pub fn parse_documents(text: &str) -> Result<Vec<Document>> {
    let mut lines = Lines::new(text);
    let mut docs = Vec::new();
    while !lines.is_done() {
        docs.push(read_document(&mut lines)?);
    }
    Ok(docs)
}

fn single(text: &str) -> Result<Document> {
    let mut lines = Lines::new(text);
    let doc = read_document(&mut lines)?;
    if let Some((no, _)) = lines.inner.next() {
        return Err(Error::parse(no, "trailing content after document"));
    }
    Ok(doc)
}

pub fn parse_tree(text: &str) -> Result<Tree> {
    match single(text)? {
        Document::Tree(t) => Ok(t),
        _ => Err(Error::parse(1, "expected a `tree` document")),
    }
}

pub fn parse_palm_spec(text: &str) -> Result<PalmSpec> {
    match single(text)? {
        Document::Palm(p) => Ok(p),
        _ => Err(Error::parse(1, "expected a `palm` document")),
    }
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    match single(text)? {
        Document::Coloring(c) => Ok(c),
        _ => Err(Error::parse(1, "expected a `coloring` document")),
    }
}

/// A tree file or a palm spec file; palms are built in canonical numbering.
pub fn parse_tree_input(text: &str) -> Result<Tree> {
    match single(text)? {
        Document::Tree(t) => Ok(t),
        Document::Palm(p) => Ok(p.build()),
        Document::Coloring(_) => Err(Error::parse(1, "expected a `tree` or `palm` document")),
    }
}

/// Graphviz rendering with nodes and edges sorted; when a coloring is given,
/// each node is labeled with its color.
pub fn to_dot(tree: &Tree, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph tree {\n  node [shape=circle];\n");
    for v in 0..tree.len() {
        match coloring {
            Some(c) => {
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{}\", tooltip=\"vertex {v}\"];",
                    c.color(v)
                );
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for &(u, v) in tree.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
