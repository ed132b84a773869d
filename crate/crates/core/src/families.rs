//! Named graph families, fixed example graphs, and the textual family-spec language
//! (`grid:3x4`, `corona(multipartite:2,3)`, `cliquesum(cycle:4@1,path:2@0)`).
//!
//! Vertex indexing is fixed per family so that reported sets are stable:
//!
//! | family | indexing |
//! |---|---|
//! | `path:n`, `cycle:n`, `complete:n` | `0..n` along the path / cycle |
//! | `star:n` | centre 0, leaves `1..=n` |
//! | `hypercube:n` | vertex `i` is the binary string of `i`, first digit most significant |
//! | `grid:mxn`, `lattice:n1,..,nd` | row-major over coordinates, first coordinate most significant |
//! | `wheel:n` | hub 0, rim `1..n` in cyclic order |
//! | `genwheel:m,n` | centres `0..m`, rim `m..m+n` in cyclic order |
//! | `multipartite:m1,..,mk` | parts are contiguous ranges in the given order |
//! | `split:m,n` | clique `0..m`, independent set `m..m+n` |
//! | `windmill:nxl` | shared vertex 0, copy `i` occupies `1+i(n-1) ..` |
//! | `pan:n` | pendant 0, attachment 1, cycle order `1,2,4,5,..,n,3` |
//!
//! The fixtures (`diamond`, `petersen`, `fig-*`) keep their published
//! labelings, with `v1` at index 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::vertex_set::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Hypercube,
    Grid,
    Lattice,
    Wheel,
    GenWheel,
    Multipartite,
    Split,
    Windmill,
    Pan,
    Petersen,
    Diamond,
    FigNim7,
    FigDisj,
    FigBarP3,
    FigBlock,
}

impl Family {
    pub const ALL: [Family; 19] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Hypercube,
        Family::Grid,
        Family::Lattice,
        Family::Wheel,
        Family::GenWheel,
        Family::Multipartite,
        Family::Split,
        Family::Windmill,
        Family::Pan,
        Family::Petersen,
        Family::Diamond,
        Family::FigNim7,
        Family::FigDisj,
        Family::FigBarP3,
        Family::FigBlock,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Hypercube => "hypercube",
            Family::Grid => "grid",
            Family::Lattice => "lattice",
            Family::Wheel => "wheel",
            Family::GenWheel => "genwheel",
            Family::Multipartite => "multipartite",
            Family::Split => "split",
            Family::Windmill => "windmill",
            Family::Pan => "pan",
            Family::Petersen => "petersen",
            Family::Diamond => "diamond",
            Family::FigNim7 => "fig-nim7",
            Family::FigDisj => "fig-disj",
            Family::FigBarP3 => "fig-barP3",
            Family::FigBlock => "fig-block",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Accepted parameter counts `(min, max)`.
    fn arity(self) -> (usize, usize) {
        match self {
            Family::Path
            | Family::Cycle
            | Family::Complete
            | Family::Star
            | Family::Hypercube
            | Family::Wheel
            | Family::Pan => (1, 1),
            Family::Grid | Family::GenWheel | Family::Split | Family::Windmill => (2, 2),
            Family::Lattice => (1, usize::MAX),
            Family::Multipartite => (2, usize::MAX),
            Family::Petersen
            | Family::Diamond
            | Family::FigNim7
            | Family::FigDisj
            | Family::FigBarP3
            | Family::FigBlock => (0, 0),
        }
    }

    fn separator(self) -> char {
        match self {
            Family::Grid | Family::Windmill => 'x',
            _ => ',',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Combinator {
    Union,
    Box,
    Join,
    Corona,
}

impl Combinator {
    pub fn name(self) -> &'static str {
        match self {
            Combinator::Union => "union",
            Combinator::Box => "box",
            Combinator::Join => "join",
            Combinator::Corona => "corona",
        }
    }
}

/// Parsed graph description.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Named {
        family: Family,
        params: Vec<usize>,
    },
    Combine {
        op: Combinator,
        args: Vec<FamilySpec>,
    },
    CliqueSum(Vec<(FamilySpec, usize)>),
}

impl FamilySpec {
    pub fn named(family: Family, params: &[usize]) -> Self {
        FamilySpec::Named {
            family,
            params: params.to_vec(),
        }
    }

    pub fn combine(op: Combinator, args: Vec<FamilySpec>) -> Self {
        FamilySpec::Combine { op, args }
    }

    /// Builds the graph this spec describes.
    pub fn build(&self) -> Result<Graph> {
        family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Named { family, params } => {
                f.write_str(family.name())?;
                for (i, p) in params.iter().enumerate() {
                    let sep = if i == 0 { ':' } else { family.separator() };
                    write!(f, "{sep}{p}")?;
                }
                Ok(())
            }
            FamilySpec::Combine { op, args } => {
                write!(f, "{}(", op.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            FamilySpec::CliqueSum(parts) => {
                f.write_str("cliquesum(")?;
                for (i, (a, v)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}@{v}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_family_spec(s)
    }
}

pub fn parse_family_spec(text: &str) -> Result<FamilySpec> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(self.error("expected a family or combinator name"));
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'-' || c == b'_')
        {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn next_is_digit(&self) -> bool {
        let mut i = self.pos;
        while self.src.get(i).is_some_and(|c| c.is_ascii_whitespace()) {
            i += 1;
        }
        self.src.get(i).is_some_and(|c| c.is_ascii_digit())
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name_pos = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        let comb = match name.as_str() {
            "union" => Some(Combinator::Union),
            "box" => Some(Combinator::Box),
            "join" => Some(Combinator::Join),
            "corona" => Some(Combinator::Corona),
            "cliquesum" => None,
            _ => {
                let family =
                    Family::from_name(&name).ok_or_else(|| Error::UnknownFamily(name.clone()))?;
                return self.named(family);
            }
        };
        self.expect(b'(')?;
        let spec = match comb {
            Some(op) => {
                let mut args = vec![self.spec()?];
                while self.eat(b',') {
                    args.push(self.spec()?);
                }
                FamilySpec::Combine { op, args }
            }
            None => {
                let mut parts = Vec::new();
                loop {
                    let s = self.spec()?;
                    self.expect(b'@')?;
                    parts.push((s, self.int()?));
                    if !self.eat(b',') {
                        break;
                    }
                }
                FamilySpec::CliqueSum(parts)
            }
        };
        self.expect(b')')?;
        check_arity(&spec).map_err(|e| match e {
            Error::Arity { .. } => e,
            other => other,
        })?;
        let _ = name_pos;
        Ok(spec)
    }

    fn named(&mut self, family: Family) -> Result<FamilySpec> {
        let mut params = Vec::new();
        if self.eat(b':') {
            params.push(self.int()?);
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b'x') => {
                        self.pos += 1;
                        params.push(self.int()?);
                    }
                    Some(b',')
                        if {
                            self.pos += 1;
                            let digit = self.next_is_digit();
                            self.pos -= 1;
                            digit
                        } =>
                    {
                        self.pos += 1;
                        params.push(self.int()?);
                    }
                    _ => break,
                }
            }
        }
        let spec = FamilySpec::Named { family, params };
        check_arity(&spec)?;
        Ok(spec)
    }
}

fn check_arity(spec: &FamilySpec) -> Result<()> {
    let (name, expected, got, ok) = match spec {
        FamilySpec::Named { family, params } => {
            let (lo, hi) = family.arity();
            let expected = match (lo, hi) {
                (0, 0) => "no parameters".to_string(),
                (a, b) if a == b => format!("{a} parameter(s)"),
                (a, _) => format!("at least {a} parameters"),
            };
            (
                family.name().to_string(),
                expected,
                params.len(),
                (lo..=hi).contains(&params.len()),
            )
        }
        FamilySpec::Combine { op, args } => {
            let (expected, ok) = match op {
                Combinator::Corona => ("exactly 1 argument", args.len() == 1),
                _ => ("at least 2 arguments", args.len() >= 2),
            };
            (op.name().to_string(), expected.to_string(), args.len(), ok)
        }
        FamilySpec::CliqueSum(parts) => (
            "cliquesum".to_string(),
            "at least 2 arguments".to_string(),
            parts.len(),
            parts.len() >= 2,
        ),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Arity {
            name,
            expected,
            got,
        })
    }
}

fn invalid(family: Family, constraint: &str) -> Error {
    Error::InvalidParameter {
        family: family.name().to_string(),
        constraint: constraint.to_string(),
    }
}

fn require(cond: bool, family: Family, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(family, constraint))
    }
}

fn cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn one_based(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn fixture(n: usize, one_based_edges: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = one_based_edges
        .iter()
        .map(|&(u, v)| (u - 1, v - 1))
        .collect();
    Graph::new(n, &edges)
        .expect("fixture edges are valid")
        .with_labels(one_based(n))
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, Family::Path, "n >= 1")?;
    cap(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::new(n, &edges)?.with_labels(one_based(n)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, Family::Cycle, "n >= 3")?;
    cap(n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?.with_labels(one_based(n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, Family::Complete, "n >= 1")?;
    cap(n)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::new(n, &edges)?.with_labels(one_based(n)))
}

fn edgeless(n: usize) -> Result<Graph> {
    Graph::new(n, &[])
}

pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, Family::Star, "n >= 1")?;
    cap(n + 1)?;
    let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    let labels = std::iter::once("c".to_string()).chain(one_based(n));
    Ok(Graph::new(n + 1, &edges)?.with_labels(labels))
}

pub fn hypercube(n: usize) -> Result<Graph> {
    require(n >= 1, Family::Hypercube, "n >= 1")?;
    require(n <= 4, Family::Hypercube, "2^n <= 30")?;
    let order = 1usize << n;
    let edges: Vec<_> = (0..order)
        .flat_map(|u| (0..n).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    let labels = (0..order).map(|i| format!("{i:0n$b}"));
    Ok(Graph::new(order, &edges)?.with_labels(labels))
}

pub fn lattice(dims: &[usize]) -> Result<Graph> {
    require(!dims.is_empty(), Family::Lattice, "d >= 1")?;
    require(
        dims.iter().all(|&d| d >= 2),
        Family::Lattice,
        "every n_i >= 2",
    )?;
    let order = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    cap(order.unwrap_or(usize::MAX))?;
    let mut g = path(dims[0])?;
    for &d in &dims[1..] {
        g = graph::box_product(&g, &path(d)?)?;
    }
    let labels = (0..g.order()).map(|mut i| {
        let mut coords = vec![0; dims.len()];
        for (k, &d) in dims.iter().enumerate().rev() {
            coords[k] = i % d + 1;
            i /= d;
        }
        let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(","))
    });
    Ok(g.with_labels(labels))
}

pub fn grid(m: usize, n: usize) -> Result<Graph> {
    require(m >= 2, Family::Grid, "2 <= m")?;
    require(m <= n, Family::Grid, "m <= n")?;
    require(n >= 3, Family::Grid, "n >= 3")?;
    lattice(&[m, n])
}

pub fn wheel(n: usize) -> Result<Graph> {
    require(n >= 5, Family::Wheel, "n >= 5")?;
    cap(n)?;
    let g = graph::join(&edgeless(1)?, &cycle(n - 1)?)?;
    let labels = std::iter::once("c".to_string()).chain(one_based(n - 1));
    Ok(g.with_labels(labels))
}

/// `K̄_m + C_n`. `m = 1` is accepted and gives the wheel `W_{n+1}`.
pub fn generalized_wheel(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1, Family::GenWheel, "m >= 1")?;
    require(n >= 3, Family::GenWheel, "n >= 3")?;
    cap(m + n)?;
    let g = graph::join(&edgeless(m)?, &cycle(n)?)?;
    let labels = (1..=m).map(|i| format!("c{i}")).chain(one_based(n));
    Ok(g.with_labels(labels))
}

pub fn multipartite(parts: &[usize]) -> Result<Graph> {
    require(parts.len() >= 2, Family::Multipartite, "k >= 2")?;
    require(
        parts.iter().all(|&p| p >= 1),
        Family::Multipartite,
        "every part >= 1",
    )?;
    let n: usize = parts.iter().sum();
    cap(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Ok(Graph::new(n, &edges)?.with_labels(one_based(n)))
}

/// Complete split graph `K_m + K̄_n`.
pub fn complete_split(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1, Family::Split, "m >= 1")?;
    require(n >= 1, Family::Split, "n >= 1")?;
    cap(m + n)?;
    Ok(graph::join(&complete(m)?, &edgeless(n)?)?.with_labels(one_based(m + n)))
}

/// `l` copies of `K_n` sharing vertex 0.
pub fn windmill(n: usize, l: usize) -> Result<Graph> {
    require(n >= 2, Family::Windmill, "n >= 2")?;
    require(l >= 2, Family::Windmill, "l >= 2")?;
    cap(1 + l * (n - 1))?;
    let k = complete(n)?;
    let parts: Vec<(&Graph, usize)> = (0..l).map(|_| (&k, 0)).collect();
    let g = graph::one_clique_sum(&parts)?.graph;
    let labels = std::iter::once("c".to_string()).chain(one_based(g.order() - 1));
    Ok(g.with_labels(labels))
}

/// Cycle `C_n` with one pendant vertex.
pub fn pan(n: usize) -> Result<Graph> {
    require(n >= 3, Family::Pan, "n >= 3")?;
    cap(n + 1)?;
    let mut order = vec![1, 2];
    order.extend(4..=n);
    order.push(3);
    let mut edges = vec![(0, 1)];
    edges.extend((0..n).map(|i| (order[i], order[(i + 1) % n])));
    Ok(Graph::new(n + 1, &edges)?.with_labels(one_based(n + 1)))
}

pub fn diamond() -> Graph {
    fixture(4, &[(1, 2), (2, 4), (4, 3), (3, 1), (2, 3)])
}

pub fn petersen() -> Graph {
    fixture(
        10,
        &[
            (5, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 10),
            (10, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 10),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
}

/// Planar graph on nine vertices whose avoidance game has nim-number 7.
pub fn fig_nim7() -> Graph {
    fixture(
        9,
        &[
            (8, 3),
            (3, 7),
            (7, 5),
            (5, 8),
            (7, 2),
            (2, 5),
            (2, 8),
            (8, 9),
            (9, 4),
            (4, 8),
            (2, 9),
            (9, 3),
            (3, 6),
            (6, 9),
            (6, 1),
            (1, 9),
            (1, 4),
        ],
    )
}

/// Graph whose complemented maximal nongenerating sets are pairwise disjoint
/// but not all singletons.
pub fn fig_disj() -> Graph {
    fixture(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (5, 6),
            (6, 3),
            (3, 8),
            (8, 7),
            (7, 2),
            (2, 5),
        ],
    )
}

/// Graph whose simplicial vertices `v3, v4, v5` generate.
pub fn fig_bar_p3() -> Graph {
    fixture(
        5,
        &[
            (4, 2),
            (2, 5),
            (5, 1),
            (1, 3),
            (3, 2),
            (2, 1),
            (1, 4),
            (4, 3),
        ],
    )
}

/// Block graph with seven blocks and six cut vertices.
pub fn fig_block() -> Graph {
    fixture(
        12,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 2),
            (3, 1),
            (1, 4),
            (4, 5),
            (5, 6),
            (6, 4),
            (3, 7),
            (2, 8),
            (8, 9),
            (9, 2),
            (8, 10),
            (9, 11),
            (11, 12),
        ],
    )
}

/// Builds the graph for a parsed spec.
pub fn family(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Named { family, params } => {
            check_arity(spec)?;
            let p = params.as_slice();
            match family {
                Family::Path => path(p[0]),
                Family::Cycle => cycle(p[0]),
                Family::Complete => complete(p[0]),
                Family::Star => star(p[0]),
                Family::Hypercube => hypercube(p[0]),
                Family::Grid => grid(p[0], p[1]),
                Family::Lattice => lattice(p),
                Family::Wheel => wheel(p[0]),
                Family::GenWheel => generalized_wheel(p[0], p[1]),
                Family::Multipartite => multipartite(p),
                Family::Split => complete_split(p[0], p[1]),
                Family::Windmill => windmill(p[0], p[1]),
                Family::Pan => pan(p[0]),
                Family::Petersen => Ok(petersen()),
                Family::Diamond => Ok(diamond()),
                Family::FigNim7 => Ok(fig_nim7()),
                Family::FigDisj => Ok(fig_disj()),
                Family::FigBarP3 => Ok(fig_bar_p3()),
                Family::FigBlock => Ok(fig_block()),
            }
        }
        FamilySpec::Combine { op, args } => {
            check_arity(spec)?;
            let graphs = args.iter().map(family).collect::<Result<Vec<_>>>()?;
            match op {
                Combinator::Corona => {
                    let h = &graphs[0];
                    let g = graph::corona(h)?;
                    let base: Vec<String> = (0..h.order()).map(|v| h.label(v)).collect();
                    let labels: Vec<String> = base
                        .iter()
                        .cloned()
                        .chain(base.iter().map(|l| format!("{l}'")))
                        .collect();
                    Ok(g.with_labels(labels))
                }
                Combinator::Union => fold(graphs, graph::disjoint_union),
                Combinator::Join => fold(graphs, graph::join),
                Combinator::Box => fold(graphs, graph::box_product),
            }
        }
        FamilySpec::CliqueSum(parts) => {
            check_arity(spec)?;
            let graphs = parts
                .iter()
                .map(|(s, _)| family(s))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<(&Graph, usize)> = graphs
                .iter()
                .zip(parts)
                .map(|(g, (_, v))| (g, *v))
                .collect();
            Ok(graph::one_clique_sum(&refs)?.graph)
        }
    }
}

fn fold(graphs: Vec<Graph>, op: fn(&Graph, &Graph) -> Result<Graph>) -> Result<Graph> {
    let mut it = graphs.into_iter();
    let first = it.next().expect("arity checked");
    it.try_fold(first, |acc, g| op(&acc, &g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(spec("grid:3x4"), FamilySpec::named(Family::Grid, &[3, 4]));
        assert_eq!(
            spec("corona(multipartite:2,3)"),
            FamilySpec::combine(
                Combinator::Corona,
                vec![FamilySpec::named(Family::Multipartite, &[2, 3])]
            )
        );
        assert_eq!(
            spec("union(cycle:3,cycle:3)"),
            FamilySpec::combine(
                Combinator::Union,
                vec![
                    FamilySpec::named(Family::Cycle, &[3]),
                    FamilySpec::named(Family::Cycle, &[3])
                ]
            )
        );
        assert_eq!(
            spec("union(multipartite:2,3,cycle:4)"),
            FamilySpec::combine(
                Combinator::Union,
                vec![
                    FamilySpec::named(Family::Multipartite, &[2, 3]),
                    FamilySpec::named(Family::Cycle, &[4])
                ]
            )
        );
        assert_eq!(
            spec(" cliquesum( cycle:4@1 , path:2@0 ) "),
            FamilySpec::CliqueSum(vec![
                (FamilySpec::named(Family::Cycle, &[4]), 1),
                (FamilySpec::named(Family::Path, &[2]), 0)
            ])
        );
        assert_eq!(spec("fig-barP3"), FamilySpec::named(Family::FigBarP3, &[]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "grid:3x".parse::<FamilySpec>(),
            Err(Error::Syntax { pos: 7, .. })
        ));
        assert!(matches!(
            "blob:3".parse::<FamilySpec>(),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            "cycle:3,4".parse::<FamilySpec>(),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            "corona(cycle:3,cycle:3)".parse::<FamilySpec>(),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            "union(cycle:3)".parse::<FamilySpec>(),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            "union(cycle:3,cycle:3".parse::<FamilySpec>(),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            "petersen:3".parse::<FamilySpec>(),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            "cycle:4 extra".parse::<FamilySpec>(),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn parameter_bounds() {
        for bad in [
            "cycle:2",
            "wheel:4",
            "genwheel:2,2",
            "multipartite:3",
            "grid:2x2",
            "grid:4x3",
            "hypercube:5",
            "path:31",
        ] {
            let r = spec_result(bad);
            assert!(r.is_err(), "{bad} should be rejected");
        }
        let err = family(&spec("wheel:4")).unwrap_err();
        assert!(err.to_string().contains("n >= 5"), "{err}");
    }

    fn spec_result(s: &str) -> Result<Graph> {
        s.parse::<FamilySpec>().and_then(|s| family(&s))
    }

    #[test]
    fn family_sizes() {
        let cases = [
            ("cycle:4", 4, 4),
            ("wheel:5", 5, 8),
            ("hypercube:3", 8, 12),
            ("grid:3x4", 12, 17),
            ("genwheel:2,4", 6, 12),
            ("multipartite:2,3", 5, 6),
            ("split:2,2", 4, 5),
            ("windmill:3x3", 7, 9),
            ("pan:4", 5, 5),
            ("petersen", 10, 15),
            ("fig-nim7", 9, 17),
            ("fig-disj", 8, 9),
            ("fig-barP3", 5, 8),
            ("fig-block", 12, 16),
            ("star:3", 4, 3),
            ("corona(multipartite:2,3)", 10, 11),
            ("box(path:2,path:3)", 6, 7),
            ("lattice:2,2,2", 8, 12),
        ];
        for (s, n, m) in cases {
            let g = spec_result(s).unwrap();
            assert_eq!((g.order(), g.edge_count()), (n, m), "{s}");
        }
    }

    #[test]
    fn hypercube_edges_are_hamming_one() {
        let q3 = hypercube(3).unwrap();
        for (u, v) in q3.edges() {
            assert_eq!((u ^ v).count_ones(), 1);
        }
        assert_eq!(q3.label(5), "101");
    }

    #[test]
    fn hypercube_matches_iterated_box_product() {
        let p2 = path(2).unwrap();
        let mut g = p2.clone();
        for n in 2..=4 {
            g = graph::box_product(&g, &p2).unwrap();
            assert_eq!(g, hypercube(n).unwrap(), "Q{n}");
        }
    }

    #[test]
    fn pan_matches_reference_labeling() {
        let g = pan(4).unwrap();
        let mut edges: Vec<_> = g.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        edges.sort();
        assert_eq!(edges, vec![(1, 2), (2, 3), (2, 4), (3, 5), (4, 5)]);
    }

    #[test]
    fn grid_is_row_major() {
        let g = grid(3, 4).unwrap();
        assert!(g.is_adjacent(0, 1));
        assert!(g.is_adjacent(0, 4));
        assert!(!g.is_adjacent(3, 4));
        assert_eq!(g.label(5), "(2,2)");
    }

    #[test]
    fn multipartite_parts_are_contiguous() {
        let g = multipartite(&[1, 2, 3]).unwrap();
        assert!(!g.is_adjacent(1, 2));
        assert!(g.is_adjacent(0, 1));
        assert!(!g.is_adjacent(3, 5));
        assert!(g.is_adjacent(2, 3));
    }

    fn arb_named() -> impl Strategy<Value = FamilySpec> {
        (
            0..Family::ALL.len(),
            prop::collection::vec(1usize..40, 0..4),
        )
            .prop_map(|(i, ps)| {
                let family = Family::ALL[i];
                let (lo, hi) = family.arity();
                let mut params = ps;
                params.truncate(hi);
                while params.len() < lo {
                    params.push(3);
                }
                FamilySpec::Named { family, params }
            })
    }

    fn arb_spec() -> impl Strategy<Value = FamilySpec> {
        arb_named().prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                (0..3usize, prop::collection::vec(inner.clone(), 2..4)).prop_map(|(k, args)| {
                    let op = [Combinator::Union, Combinator::Box, Combinator::Join][k];
                    FamilySpec::Combine { op, args }
                }),
                inner.clone().prop_map(|a| FamilySpec::Combine {
                    op: Combinator::Corona,
                    args: vec![a]
                }),
                prop::collection::vec((inner, 0usize..9), 2..4).prop_map(FamilySpec::CliqueSum),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(s in arb_spec()) {
            let text = s.to_string();
            let back: FamilySpec = text.parse().unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
