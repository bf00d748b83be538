//! Edge-list ingestion (SNAP-style `u v` lines) and label translation.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// An original vertex label from the input file.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Label {
    Int(u64),
    Text(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `labels[v]` is the original label of internal vertex `v`.
    pub labels: Vec<Label>,
    pub self_loops: usize,
    pub duplicates: usize,
    /// Vertices discarded when only the largest component was kept.
    pub dropped_vertices: usize,
}

impl LoadedGraph {
    pub fn label(&self, v: Vertex) -> &Label {
        &self.labels[v]
    }

    /// Reverse lookup from the textual form of a label.
    pub fn label_index(&self) -> HashMap<String, Vertex> {
        self.labels
            .iter()
            .enumerate()
            .map(|(v, l)| (l.to_string(), v))
            .collect()
    }

    /// Two-column `id,label` table.
    pub fn write_label_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "id,label")?;
        for (v, l) in self.labels.iter().enumerate() {
            writeln!(out, "{v},{l}")?;
        }
        Ok(())
    }
}

/// Reads a whitespace-separated edge list.
///
/// Lines starting with `#` and blank lines are skipped. When every label is a
/// non-negative integer, internal ids follow ascending numeric order;
/// otherwise they follow first appearance. A disconnected graph is an error
/// unless `largest_component` is set, in which case only the largest
/// component is kept (ties go to the component holding the smallest id).
pub fn load_edge_list<R: BufRead>(reader: R, largest_component: bool) -> Result<LoadedGraph> {
    let mut raw_edges: Vec<(usize, usize)> = Vec::new();
    let mut tokens: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut intern = |tok: &str, tokens: &mut Vec<String>| -> usize {
        if let Some(&i) = index.get(tok) {
            return i;
        }
        let i = tokens.len();
        tokens.push(tok.to_owned());
        index.insert(tok.to_owned(), i);
        i
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u = intern(a, &mut tokens);
                let v = intern(b, &mut tokens);
                raw_edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two labels, got {trimmed:?}"),
                })
            }
        }
    }
    if tokens.is_empty() {
        return Err(Error::EmptyGraph);
    }

    let numeric: Option<Vec<u64>> = tokens.iter().map(|t| t.parse::<u64>().ok()).collect();
    let (labels, remap): (Vec<Label>, Vec<usize>) = match numeric {
        Some(values) => {
            let mut order: Vec<usize> = (0..values.len()).collect();
            order.sort_by_key(|&i| values[i]);
            let mut remap = vec![0; values.len()];
            for (new, &old) in order.iter().enumerate() {
                remap[old] = new;
            }
            (order.iter().map(|&i| Label::Int(values[i])).collect(), remap)
        }
        None => (
            tokens.into_iter().map(Label::Text).collect(),
            (0..index.len()).collect(),
        ),
    };
    let edges: Vec<(Vertex, Vertex)> = raw_edges.iter().map(|&(u, v)| (remap[u], remap[v])).collect();

    let (graph, stats) = Graph::build_unchecked(labels.len(), &edges)?;
    if stats.self_loops > 0 {
        log::warn!("dropped {} self-loop(s)", stats.self_loops);
    }
    let (count, comp) = graph.components();
    let mut loaded = LoadedGraph {
        graph,
        labels,
        self_loops: stats.self_loops,
        duplicates: stats.duplicates,
        dropped_vertices: 0,
    };
    if count > 1 {
        if !largest_component {
            return Err(Error::Disconnected { components: count });
        }
        let mut sizes = vec![0usize; count];
        for &c in &comp {
            sizes[c as usize] += 1;
        }
        // components are numbered by smallest member, so the first max wins ties
        let best = (0..count).fold(0, |b, c| if sizes[c] > sizes[b] { c } else { b }) as u32;
        let keep: Vec<bool> = comp.iter().map(|&c| c == best).collect();
        let (sub, old_ids) = loaded.graph.induced(&keep);
        loaded.dropped_vertices = loaded.graph.n() - sub.n();
        log::warn!(
            "graph has {count} components; kept the largest ({} of {} vertices)",
            sub.n(),
            loaded.graph.n()
        );
        loaded.labels = old_ids.iter().map(|&v| loaded.labels[v].clone()).collect();
        loaded.graph = sub;
    }
    Ok(loaded)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str, lcc: bool) -> Result<LoadedGraph> {
        load_edge_list(text.as_bytes(), lcc)
    }

    #[test]
    fn two_edge_path() {
        let l = load("0 1\n1 2", false).unwrap();
        assert_eq!((l.graph.n(), l.graph.m()), (3, 2));
        assert!(l.graph.has_edge(0, 1) && l.graph.has_edge(1, 2));
    }

    #[test]
    fn dedup_counts() {
        let l = load("0 1\n1 0\n1 1", false).unwrap();
        assert_eq!((l.graph.n(), l.graph.m()), (2, 1));
        assert_eq!(l.duplicates, 1);
        assert_eq!(l.self_loops, 1);
    }

    #[test]
    fn comments_and_numeric_order() {
        let l = load("# FromNodeId ToNodeId\n30 7\n\n7 100\n", false).unwrap();
        assert_eq!(l.labels, vec![Label::Int(7), Label::Int(30), Label::Int(100)]);
        assert!(l.graph.has_edge(0, 1) && l.graph.has_edge(0, 2));
    }

    #[test]
    fn string_labels_in_first_appearance_order() {
        let l = load("b a\na c\n", false).unwrap();
        let names: Vec<String> = l.labels.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, vec!["b", "a", "c"]);
    }

    #[test]
    fn malformed_line_reports_number() {
        match load("0 1\n1\n", false) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load("0 1 2\n", false), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_and_disconnected() {
        assert!(matches!(load("# nothing\n", false), Err(Error::EmptyGraph)));
        assert!(matches!(
            load("0 1\n2 3\n3 4\n", false),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn largest_component_kept() {
        let l = load("0 1\n2 3\n3 4\n", true).unwrap();
        assert_eq!(l.graph.n(), 3);
        assert_eq!(l.dropped_vertices, 2);
        assert_eq!(l.labels, vec![Label::Int(2), Label::Int(3), Label::Int(4)]);
        assert!(l.graph.has_edge(0, 1) && l.graph.has_edge(1, 2));
    }

    #[test]
    fn label_csv() {
        let l = load("x y\n", false).unwrap();
        let mut buf = Vec::new();
        l.write_label_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "id,label\n0,x\n1,y\n");
    }
}
