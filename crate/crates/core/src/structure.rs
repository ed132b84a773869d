//! Structure digraphs: the quotient of a game digraph by structure
//! equivalence, the type calculus on it, simplified diagrams, and DOT
//! output.
//!
//! Two positions are structure equivalent when they lie in the same maximal
//! nongenerating sets. The class of `P` is named by the intersection set
//! `⌈P⌉`, and the nim-number of `P` is determined by `⌈P⌉` and the parity
//! of `|P|`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::convexity::{self, Limits, SetFamily};
use crate::error::{Error, Result};
use crate::game::{mex, GameKind, GameSpec, Nimber};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassParity {
    Even,
    Odd,
    /// The terminal class of `GEN`, which holds positions of both parities.
    Both,
}

impl ClassParity {
    fn of(set: VertexSet) -> Self {
        if set.parity() == 0 {
            ClassParity::Even
        } else {
            ClassParity::Odd
        }
    }
}

impl fmt::Display for ClassParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassParity::Even => "0",
            ClassParity::Odd => "1",
            ClassParity::Both => "both",
        })
    }
}

/// `(parity, nim₀, nim₁)` of a structure class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TypeTriple {
    pub parity: Option<u8>,
    pub nim0: Nimber,
    pub nim1: Nimber,
}

impl TypeTriple {
    pub fn nim(&self, parity: u8) -> Nimber {
        if parity == 0 {
            self.nim0
        } else {
            self.nim1
        }
    }
}

impl fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Some(p) => write!(f, "({p},{},{})", self.nim0, self.nim1),
            None => write!(f, "(*,{},{})", self.nim0, self.nim1),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureClass {
    /// The intersection set naming the class.
    pub set: VertexSet,
    pub parity: ClassParity,
    pub ty: TypeTriple,
    /// Indices of option classes, ascending.
    pub options: Vec<usize>,
    /// Length of the longest directed path starting here.
    pub height: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureDigraph {
    pub spec: GameSpec,
    pub order: usize,
    pub classes: Vec<StructureClass>,
    pub source: usize,
}

impl StructureDigraph {
    /// Builds the digraph and runs the type calculus.
    pub fn build(g: &Graph, spec: GameSpec, limits: &Limits) -> Result<Self> {
        let family = convexity::maximal_nongenerating(g, spec.closure, limits)?;
        Self::from_family(&family, spec.game, limits).map(|mut d| {
            d.spec = spec;
            d
        })
    }

    /// Builds from the maximal nongenerating sets alone; the games depend on
    /// nothing else. The closure recorded in `spec` is the hull.
    pub fn from_family(family: &SetFamily, game: GameKind, limits: &Limits) -> Result<Self> {
        let n = family.ambient();
        let full = VertexSet::full(n);
        let source_set = convexity::ceil(VertexSet::EMPTY, family);
        let mut index: HashMap<VertexSet, usize> = HashMap::from([(source_set, 0)]);
        let mut sets = vec![source_set];
        let mut edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let set = sets[i];
            if set == full {
                continue;
            }
            for v in set.complement(n) {
                let target = convexity::ceil(set.with(v), family);
                if target == full && game == GameKind::Dng {
                    continue;
                }
                let j = *index.entry(target).or_insert_with(|| {
                    sets.push(target);
                    edges.push(BTreeSet::new());
                    queue.push_back(sets.len() - 1);
                    sets.len() - 1
                });
                if sets.len() > limits.max_family {
                    return Err(Error::Guard {
                        what: "structure class count",
                        limit: limits.max_family,
                    });
                }
                edges[i].insert(j);
            }
        }

        // stable order: by size, then by bit mask
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by_key(|&i| (sets[i].len(), sets[i]));
        let mut rank = vec![0; sets.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let classes = order
            .iter()
            .map(|&i| {
                let mut options: Vec<usize> = edges[i].iter().map(|&j| rank[j]).collect();
                options.sort_unstable();
                StructureClass {
                    set: sets[i],
                    parity: if sets[i] == full {
                        ClassParity::Both
                    } else {
                        ClassParity::of(sets[i])
                    },
                    ty: TypeTriple::default(),
                    options,
                    height: 0,
                }
            })
            .collect();
        let mut d = StructureDigraph {
            spec: GameSpec::hull(game),
            order: n,
            classes,
            source: rank[0],
        };
        d.type_calculus()?;
        Ok(d)
    }

    /// Classes in an order where every class comes after all its options.
    fn reverse_topological(&self) -> Result<Vec<usize>> {
        let k = self.classes.len();
        let mut remaining: Vec<usize> = self.classes.iter().map(|c| c.options.len()).collect();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, c) in self.classes.iter().enumerate() {
            for &j in &c.options {
                preds[j].push(i);
            }
        }
        let mut ready: VecDeque<usize> = (0..k).filter(|&i| remaining[i] == 0).collect();
        let mut out = Vec::with_capacity(k);
        while let Some(j) = ready.pop_front() {
            out.push(j);
            for &i in &preds[j] {
                remaining[i] -= 1;
                if remaining[i] == 0 {
                    ready.push_back(i);
                }
            }
        }
        if out.len() == k {
            Ok(out)
        } else {
            Err(Error::Cycle)
        }
    }

    /// Fills in type triples and path heights, options first.
    pub fn type_calculus(&mut self) -> Result<()> {
        for i in self.reverse_topological()? {
            let (ty, height) = {
                let c = &self.classes[i];
                let opts = c.options.iter().map(|&j| &self.classes[j]);
                let height = opts.clone().map(|o| o.height + 1).max().unwrap_or(0);
                let ty = match c.parity {
                    ClassParity::Both => TypeTriple::default(),
                    ClassParity::Even | ClassParity::Odd => {
                        let p = c.set.parity();
                        let own = mex(opts.clone().map(|o| o.ty.nim(1 - p)));
                        let other = mex(opts.map(|o| o.ty.nim(p)).chain([own]));
                        let (nim0, nim1) = if p == 0 { (own, other) } else { (other, own) };
                        TypeTriple {
                            parity: Some(p),
                            nim0,
                            nim1,
                        }
                    }
                };
                (ty, height)
            };
            self.classes[i].ty = ty;
            self.classes[i].height = height;
        }
        Ok(())
    }

    /// Nim-number of the game: `nim₀` of the source class.
    pub fn game_nim(&self) -> Nimber {
        self.classes[self.source].ty.nim0
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.classes.iter().map(|c| c.options.len()).sum()
    }

    /// Classes with no options.
    pub fn terminals(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].options.is_empty())
            .collect()
    }

    pub fn class_of(&self, set: VertexSet) -> Option<usize> {
        self.classes.iter().position(|c| c.set == set)
    }

    pub fn simplify(&self) -> SimplifiedDiagram {
        SimplifiedDiagram::from_digraph(self)
    }

    pub fn to_dot(&self) -> String {
        let nodes = self.classes.iter().map(|c| DotNode {
            id: c.set,
            parity: c.parity,
            ty: c.ty,
            multiplicity: 1,
        });
        let edges = self
            .classes
            .iter()
            .flat_map(|c| c.options.iter().map(move |&j| (c.set, self.classes[j].set)));
        render_dot("structure", nodes, edges)
    }
}

/// Merged node of a simplified diagram.
#[derive(Clone, Debug, Serialize)]
pub struct MergedNode {
    /// Indices into the unsimplified digraph, ascending.
    pub members: Vec<usize>,
    pub parity: ClassParity,
    pub ty: TypeTriple,
    pub height: usize,
    pub options: Vec<usize>,
}

impl MergedNode {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplifiedDiagram {
    pub nodes: Vec<MergedNode>,
    pub source: usize,
    #[serde(skip)]
    ids: Vec<VertexSet>,
}

impl SimplifiedDiagram {
    /// Merges classes with equal parity, equal set of option types and equal
    /// height, then splits blocks until every member of a block has options
    /// in the same blocks.
    pub fn from_digraph(d: &StructureDigraph) -> Self {
        let k = d.classes.len();
        let initial: Vec<_> = d
            .classes
            .iter()
            .map(|c| {
                let opt_types: BTreeSet<TypeTriple> =
                    c.options.iter().map(|&j| d.classes[j].ty).collect();
                (c.parity, opt_types, c.height)
            })
            .collect();
        let mut block = relabel(&initial);
        loop {
            let keys: Vec<_> = (0..k)
                .map(|i| {
                    let succ: BTreeSet<usize> =
                        d.classes[i].options.iter().map(|&j| block[j]).collect();
                    (block[i], succ)
                })
                .collect();
            let next = relabel(&keys);
            let done = next.iter().max() == block.iter().max();
            block = next;
            if done {
                break;
            }
        }
        let count = block.iter().max().map_or(0, |m| m + 1);
        let mut members = vec![Vec::new(); count];
        for (i, &b) in block.iter().enumerate() {
            members[b].push(i);
        }
        let nodes: Vec<MergedNode> = members
            .into_iter()
            .map(|m| {
                let first = &d.classes[m[0]];
                let options: BTreeSet<usize> = first.options.iter().map(|&j| block[j]).collect();
                MergedNode {
                    parity: first.parity,
                    ty: first.ty,
                    height: first.height,
                    options: options.into_iter().collect(),
                    members: m,
                }
            })
            .collect();
        let ids = nodes.iter().map(|n| d.classes[n.members[0]].set).collect();
        SimplifiedDiagram {
            source: block[d.source],
            nodes,
            ids,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Reruns the type calculus on the merged diagram and reads off the
    /// nim-number of its source.
    pub fn recomputed_game_nim(&self) -> Nimber {
        let mut types: Vec<Option<TypeTriple>> = vec![None; self.nodes.len()];
        fn visit(
            i: usize,
            nodes: &[MergedNode],
            types: &mut Vec<Option<TypeTriple>>,
        ) -> TypeTriple {
            if let Some(t) = types[i] {
                return t;
            }
            let opts: Vec<TypeTriple> = nodes[i]
                .options
                .iter()
                .map(|&j| visit(j, nodes, types))
                .collect();
            let t = match nodes[i].parity {
                ClassParity::Both => TypeTriple::default(),
                parity => {
                    let p = u8::from(parity == ClassParity::Odd);
                    let own = mex(opts.iter().map(|o| o.nim(1 - p)));
                    let other = mex(opts.iter().map(|o| o.nim(p)).chain([own]));
                    let (nim0, nim1) = if p == 0 { (own, other) } else { (other, own) };
                    TypeTriple {
                        parity: Some(p),
                        nim0,
                        nim1,
                    }
                }
            };
            types[i] = Some(t);
            t
        }
        visit(self.source, &self.nodes, &mut types).nim0
    }

    pub fn to_dot(&self) -> String {
        let nodes = self.nodes.iter().zip(&self.ids).map(|(n, &id)| DotNode {
            id,
            parity: n.parity,
            ty: n.ty,
            multiplicity: n.multiplicity(),
        });
        let edges = self
            .nodes
            .iter()
            .zip(&self.ids)
            .flat_map(|(n, &id)| n.options.iter().map(move |&j| (id, self.ids[j])));
        render_dot("simplified", nodes, edges)
    }
}

// Dense block ids in order of first appearance.
fn relabel<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut ids = std::collections::BTreeMap::new();
    let mut first_seen: Vec<usize> = Vec::with_capacity(keys.len());
    for key in keys {
        let next = ids.len();
        first_seen.push(*ids.entry(key.clone()).or_insert(next));
    }
    first_seen
}

struct DotNode {
    id: VertexSet,
    parity: ClassParity,
    ty: TypeTriple,
    multiplicity: usize,
}

fn render_dot(
    name: &str,
    nodes: impl Iterator<Item = DotNode>,
    edges: impl Iterator<Item = (VertexSet, VertexSet)>,
) -> String {
    let mut out = format!("digraph {name} {{\n  rankdir=TB;\n");
    for n in nodes {
        let shape = match n.parity {
            ClassParity::Even => "triangle",
            ClassParity::Odd => "invtriangle",
            ClassParity::Both => "oval",
        };
        let _ = writeln!(
            out,
            "  I_{:x} [label=\"p={} n0={} n1={} ×{}\", shape={shape}];",
            n.id.bits(),
            n.parity,
            n.ty.nim0,
            n.ty.nim1,
            n.multiplicity
        );
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  I_{:x} -> I_{:x};", a.bits(), b.bits());
    }
    out.push_str("}\n");
    out
}
