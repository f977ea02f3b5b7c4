//! Graph files (JSON) and tree files (Newick with color annotations).
//!
//! Graphs: `{"vertices":[{"id":"a","color":"red"}, ...], "arcs":[["a","b"], ...]}`.
//!
//! Trees: Newick with every leaf annotated as `id[&color=X]`, for example
//! `((a[&color=red],b[&color=blue]),c[&color=blue]);`. Inner nodes may
//! have any number of children. Ids and colors containing whitespace or
//! any of `()[],:;'&=` are single-quoted, with `''` standing for a quote.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{align_labels, ColoredDigraph, Labels, Vertex};
use crate::tree::{PhyloTree, Shape};

#[derive(Debug, Serialize, Deserialize)]
struct VertexEntry {
    id: String,
    color: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<VertexEntry>,
    arcs: Vec<(String, String)>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn graph_to_json(g: &ColoredDigraph) -> String {
    let file = GraphFile {
        vertices: g
            .vertices()
            .map(|v| VertexEntry {
                id: g.id(v).to_string(),
                color: g.labels().color_name(g.color(v)).to_string(),
            })
            .collect(),
        arcs: g
            .arcs()
            .map(|(x, y)| (g.id(x).to_string(), g.id(y).to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<ColoredDigraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(json_error)?;
    let vertices: Vec<(String, String)> = file.vertices.into_iter().map(|v| (v.id, v.color)).collect();
    ColoredDigraph::from_parts(&vertices, &file.arcs)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<ColoredDigraph> {
    let text = read_text(path)?;
    let file: GraphFile = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    let vertices: Vec<(String, String)> = file.vertices.into_iter().map(|v| (v.id, v.color)).collect();
    ColoredDigraph::from_parts(&vertices, &file.arcs)
}

pub fn write_graph(path: &Path, g: &ColoredDigraph) -> Result<()> {
    write_text(path, &(graph_to_json(g) + "\n"))
}

fn is_special(c: char) -> bool {
    c.is_whitespace() || "()[],:;'&=".contains(c)
}

fn quote(s: &str) -> String {
    if !s.is_empty() && !s.chars().any(is_special) {
        s.to_string()
    } else {
        format!("'{}'", s.replace('\'', "''"))
    }
}

pub fn tree_to_newick(t: &PhyloTree) -> String {
    fn go(t: &PhyloTree, u: usize, out: &mut String) {
        match t.leaf_vertex(u) {
            Some(v) => {
                let l = t.labels();
                out.push_str(&quote(l.id(v)));
                out.push_str("[&color=");
                out.push_str(&quote(l.color_name(l.color(v))));
                out.push(']');
            }
            None => {
                out.push('(');
                for (i, &c) in t.children(u).iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    go(t, c, out);
                }
                out.push(')');
            }
        }
    }
    let mut out = String::new();
    go(t, t.root(), &mut out);
    out.push(';');
    out
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.text[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn eat_literal(&mut self, lit: &str) -> bool {
        if self.text[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        if self.peek() == Some('\'') {
            self.pos += 1;
            let mut out = String::new();
            loop {
                match self.peek() {
                    None => return Err(self.error("unterminated quoted name")),
                    Some('\'') => {
                        self.pos += 1;
                        if self.peek() == Some('\'') {
                            self.pos += 1;
                            out.push('\'');
                        } else {
                            return Ok(out);
                        }
                    }
                    Some(c) => {
                        self.pos += c.len_utf8();
                        out.push(c);
                    }
                }
            }
        }
        let start = self.pos;
        while let Some(c) = self.peek() {
            if is_special(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    /// Skips an optional `:length` suffix.
    fn branch_length(&mut self) {
        self.skip_ws();
        if self.peek() == Some(':') {
            self.pos += 1;
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() || "+-.eE".contains(c) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
    }

    fn subtree(&mut self, leaves: &mut Vec<(String, String)>) -> Result<Shape> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let mut children = vec![self.subtree(leaves)?];
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(',') => {
                        self.pos += 1;
                        children.push(self.subtree(leaves)?);
                    }
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
            if children.len() < 2 {
                return Err(self.error("inner node needs at least two children"));
            }
            self.skip_ws();
            if matches!(self.peek(), Some(c) if !is_special(c) || c == '\'') {
                self.name()?;
            }
            self.branch_length();
            return Ok(Shape::Inner(children));
        }
        let id = self.name()?;
        self.skip_ws();
        if !self.eat_literal("[&color=") {
            return Err(self.error(format!("leaf `{id}` lacks a `[&color=...]` annotation")));
        }
        let color = self.name()?;
        self.expect(']')?;
        self.branch_length();
        leaves.push((id, color));
        Ok(Shape::Leaf(leaves.len() - 1))
    }
}

/// Parses a Newick tree; vertices are numbered in order of appearance.
pub fn tree_from_newick(text: &str) -> Result<PhyloTree> {
    let mut p = Parser { text, pos: 0 };
    let mut leaves = Vec::new();
    let shape = p.subtree(&mut leaves)?;
    p.skip_ws();
    if p.peek() == Some(';') {
        p.pos += 1;
    }
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("trailing input after tree"));
    }
    let labels = Labels::new(leaves).map_err(|e| p.error(e.to_string()))?;
    PhyloTree::from_shape(Arc::new(labels), &shape)
}

/// The same tree over `labels`, which must hold exactly its leaves with
/// the same colors.
pub fn tree_on_labels(t: &PhyloTree, labels: &Arc<Labels>) -> Result<PhyloTree> {
    if t.labels() == labels {
        return Ok(t.clone());
    }
    let map = align_labels(t.labels(), labels)?;
    fn remap(s: &Shape, map: &[Vertex]) -> Shape {
        match s {
            Shape::Leaf(v) => Shape::Leaf(map[*v]),
            Shape::Inner(c) => Shape::Inner(c.iter().map(|x| remap(x, map)).collect()),
        }
    }
    PhyloTree::from_shape(labels.clone(), &remap(&t.shape(), &map))
}

pub fn read_tree(path: &Path) -> Result<PhyloTree> {
    tree_from_newick(&read_text(path)?)
}

pub fn write_tree(path: &Path, t: &PhyloTree) -> Result<()> {
    write_text(path, &(tree_to_newick(t) + "\n"))
}
