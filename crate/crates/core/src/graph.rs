//! Simple undirected graphs with precomputed hop distances and geodesic
//! intervals, plus the graph combinators used to build families.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Distance between vertices in different components.
pub const UNREACHABLE: u8 = u8::MAX;

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
    dist: Vec<u8>,
    // interval[u * n + v]: vertices on some shortest u-v path
    interval: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    /// Builds from per-vertex neighbour sets, which must already be symmetric
    /// and irreflexive.
    pub(crate) fn from_adjacency(adjacency: Vec<VertexSet>) -> Self {
        let n = adjacency.len();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in adjacency[u] {
                    if row[w] == UNREACHABLE {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut interval = vec![VertexSet::EMPTY; n * n];
        for u in 0..n {
            for v in 0..n {
                let duv = dist[u * n + v];
                let set = if duv == UNREACHABLE {
                    VertexSet::singleton(u).with(v)
                } else {
                    (0..n)
                        .filter(|&w| {
                            let (a, b) = (dist[u * n + w], dist[w * n + v]);
                            a != UNREACHABLE
                                && b != UNREACHABLE
                                && a as u16 + b as u16 == duv as u16
                        })
                        .collect()
                };
                interval[u * n + v] = set;
            }
        }
        Graph {
            n,
            adjacency,
            dist,
            interval,
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Hop distance, or [`UNREACHABLE`].
    pub fn distance(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.n + v]
    }

    /// Vertices on some shortest `u`-`v` path; `{u, v}` when no path exists.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        self.interval[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Formats a vertex set using the display labels.
    pub fn format_set(&self, set: VertexSet) -> String {
        let mut s = String::from("{");
        for (i, v) in set.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&self.label(v));
        }
        s.push('}');
        s
    }

    pub fn is_connected(&self) -> bool {
        (0..self.n).all(|v| self.distance(0, v) != UNREACHABLE)
    }

    /// Largest finite distance; `None` when disconnected.
    pub fn diameter(&self) -> Option<u8> {
        if !self.is_connected() {
            return None;
        }
        self.dist.iter().copied().max()
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp: VertexSet = (0..self.n)
                .filter(|&v| self.distance(s, v) != UNREACHABLE)
                .collect();
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep`, re-indexed in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = order
            .iter()
            .map(|&v| (self.adjacency[v] & keep).map(|w| index[w]))
            .collect();
        Graph::from_adjacency(adjacency)
    }

    /// Text form: `n <count>` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// `g` followed by `h`, with `h`'s vertices shifted by `|V(g)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    check_cap(g.n + h.n)?;
    let shift = g.n;
    let adjacency = g
        .adjacency
        .iter()
        .copied()
        .chain(h.adjacency.iter().map(|a| a.map(|w| w + shift)))
        .collect();
    Ok(Graph::from_adjacency(adjacency))
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    check_cap(g.n + h.n)?;
    let n = g.n + h.n;
    let left = VertexSet::full(g.n);
    let right = VertexSet::full(n) - left;
    let adjacency = g
        .adjacency
        .iter()
        .map(|&a| a | right)
        .chain(h.adjacency.iter().map(|a| a.map(|w| w + g.n) | left))
        .collect();
    Ok(Graph::from_adjacency(adjacency))
}

/// Index of the pair `(x, y)` in `g □ h` where `|V(h)| = h_order`.
pub fn box_index(x: usize, y: usize, h_order: usize) -> usize {
    x * h_order + y
}

/// Cartesian product; vertex `(x, y)` has index `x * |V(h)| + y`.
pub fn box_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_cap(g.n * h.n)?;
    let m = h.n;
    let mut adjacency = vec![VertexSet::EMPTY; g.n * m];
    for x in 0..g.n {
        for y in 0..m {
            let a = &mut adjacency[box_index(x, y, m)];
            for y2 in h.adjacency[y] {
                a.insert(box_index(x, y2, m));
            }
            for x2 in g.adjacency[x] {
                a.insert(box_index(x2, y, m));
            }
        }
    }
    Ok(Graph::from_adjacency(adjacency))
}

/// `H ∘ K1`: pendant `v'` of vertex `v` gets index `|V(H)| + v`.
pub fn corona(h: &Graph) -> Result<Graph> {
    check_cap(2 * h.n)?;
    let n = h.n;
    let mut adjacency: Vec<VertexSet> = (0..n).map(|v| h.adjacency[v].with(n + v)).collect();
    adjacency.extend((0..n).map(VertexSet::singleton));
    Ok(Graph::from_adjacency(adjacency))
}

/// Result of gluing graphs at one shared vertex.
#[derive(Clone, Debug)]
pub struct CliqueSum {
    pub graph: Graph,
    /// `maps[i][v]` is the index in `graph` of vertex `v` of part `i`.
    pub maps: Vec<Vec<usize>>,
}

/// Glues the marked vertex of every part into vertex 0 of the result. The
/// remaining vertices follow in part order, ascending within each part.
pub fn one_clique_sum(parts: &[(&Graph, usize)]) -> Result<CliqueSum> {
    if parts.len() < 2 {
        return Err(Error::Arity {
            name: "cliquesum".into(),
            expected: "at least 2 parts".into(),
            got: parts.len(),
        });
    }
    for &(g, c) in parts {
        if c >= g.n {
            return Err(Error::VertexOutOfRange { vertex: c, n: g.n });
        }
    }
    let total = 1 + parts.iter().map(|(g, _)| g.n - 1).sum::<usize>();
    check_cap(total)?;
    let mut maps = Vec::with_capacity(parts.len());
    let mut next = 1;
    for &(g, c) in parts {
        let map: Vec<usize> = (0..g.n)
            .map(|v| {
                if v == c {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        maps.push(map);
    }
    let mut adjacency = vec![VertexSet::EMPTY; total];
    for (&(g, _), map) in parts.iter().zip(&maps) {
        for (u, v) in g.edges() {
            adjacency[map[u]].insert(map[v]);
            adjacency[map[v]].insert(map[u]);
        }
    }
    Ok(CliqueSum {
        graph: Graph::from_adjacency(adjacency),
        maps,
    })
}

/// Parses the text graph format: `#` comments, a header line `n <count>`,
/// then one `u v` line per edge with 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |line: usize, msg: String| Error::GraphFile { line, msg };
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| bad(line_no, format!("`{s}` is not a vertex index")))
        };
        match n {
            None => match fields.as_slice() {
                ["n", count] => n = Some(num(count)?),
                _ => return Err(bad(line_no, "expected header `n <count>`".into())),
            },
            Some(_) => match fields.as_slice() {
                [u, v] => edges.push((num(u)?, num(v)?)),
                _ => return Err(bad(line_no, "expected an edge `u v`".into())),
            },
        }
    }
    let n = n.ok_or_else(|| bad(0, "missing header `n <count>`".into()))?;
    Graph::new(n, &edges)
}

pub fn read_graph_file(path: impl AsRef<std::path::Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}
