//! Geodetic closure, convex hull, and the set families the games depend on:
//! maximal nongenerating sets, minimal generating sets, the Frattini subset
//! and the intersection sets.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    /// Iterated geodetic closure.
    Hull,
    /// One application of the geodetic closure `I[P]`.
    Geodetic,
}

impl ClosureKind {
    pub const BOTH: [ClosureKind; 2] = [ClosureKind::Hull, ClosureKind::Geodetic];

    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Hull => "hull",
            ClosureKind::Geodetic => "geodetic",
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ClosureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "hull" => Ok(ClosureKind::Hull),
            "geodetic" => Ok(ClosureKind::Geodetic),
            _ => Err(format!("unknown closure `{s}` (expected hull or geodetic)")),
        }
    }
}

/// Caps on enumeration work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest set family any enumeration may build.
    pub max_family: usize,
    /// Largest graph the exact-set game engine accepts.
    pub max_brute_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_family: 1 << 20,
            max_brute_vertices: 22,
        }
    }
}

/// Duplicate-free family of vertex sets in ascending bit-mask order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(n: usize, sets: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        SetFamily { n, sets }
    }

    pub fn empty(n: usize) -> Self {
        SetFamily {
            n,
            sets: Vec::new(),
        }
    }

    /// Order of the ambient vertex set.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    /// Intersection of all members; the ambient set when the family is empty.
    pub fn intersection(&self) -> VertexSet {
        self.iter().fold(VertexSet::full(self.n), |a, s| a & s)
    }

    pub fn complement(&self) -> SetFamily {
        SetFamily::new(self.n, self.iter().map(|s| s.complement(self.n)))
    }

    /// Members that share their cardinality parity, if all do.
    pub fn common_parity(&self) -> Option<u8> {
        let first = self.sets.first()?.parity();
        self.iter().all(|s| s.parity() == first).then_some(first)
    }

    pub fn format(&self, g: &Graph) -> String {
        let inner: Vec<String> = self.iter().map(|s| g.format_set(s)).collect();
        format!("{{{}}}", inner.join(", "))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.sets)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = VertexSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexSet>>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter().copied()
    }
}

pub fn interval(g: &Graph, u: usize, v: usize) -> VertexSet {
    g.interval(u, v)
}

/// `I[P]`: every vertex on a geodesic between two members of `P`.
pub fn geodetic_closure(g: &Graph, p: VertexSet) -> VertexSet {
    let mut out = p;
    let members = p.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out |= g.interval(u, v);
        }
    }
    out
}

/// Smallest convex set containing `p`.
pub fn convex_hull(g: &Graph, p: VertexSet) -> VertexSet {
    let mut hull = p;
    let mut pending = p;
    while let Some(w) = pending.first() {
        pending.remove(w);
        for x in hull {
            let fresh = g.interval(w, x) - hull;
            if !fresh.is_empty() {
                hull |= fresh;
                pending |= fresh;
            }
        }
    }
    hull
}

pub fn close(g: &Graph, p: VertexSet, kind: ClosureKind) -> VertexSet {
    match kind {
        ClosureKind::Hull => convex_hull(g, p),
        ClosureKind::Geodetic => geodetic_closure(g, p),
    }
}

pub fn is_generating(g: &Graph, p: VertexSet, kind: ClosureKind) -> bool {
    close(g, p, kind) == g.vertices()
}

/// Vertices whose neighbourhood induces a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices()
        .iter()
        .filter(|&v| {
            let nb = g.neighbors(v);
            nb.iter()
                .all(|u| (nb - g.neighbors(u)).without(u).is_empty())
        })
        .collect()
}

fn guard(count: usize, limits: &Limits) -> Result<()> {
    if count > limits.max_family {
        Err(Error::Guard {
            what: "set-family enumeration",
            limit: limits.max_family,
        })
    } else {
        Ok(())
    }
}

/// All sets fixed by the closure. A set is fixed by `I` exactly when it is
/// convex, so both kinds give the convex sets.
pub fn closed_sets(g: &Graph, _kind: ClosureKind, limits: &Limits) -> Result<SetFamily> {
    let start = convex_hull(g, VertexSet::EMPTY);
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for v in c.complement(g.order()) {
            let d = convex_hull(g, c.with(v));
            if seen.insert(d) {
                guard(seen.len(), limits)?;
                queue.push_back(d);
            }
        }
    }
    Ok(SetFamily::new(g.order(), seen))
}

/// `𝒩`: the maximal sets whose closure is not the whole vertex set.
///
/// For the hull these are the maximal proper convex sets. The geodetic
/// closure is not idempotent, so its maximal nongenerating sets need not be
/// convex; they are found by a search over the (down-closed) family of
/// nongenerating sets.
pub fn maximal_nongenerating(g: &Graph, kind: ClosureKind, limits: &Limits) -> Result<SetFamily> {
    let full = g.vertices();
    match kind {
        ClosureKind::Hull => {
            let closed = closed_sets(g, kind, limits)?;
            let maximal = closed.iter().filter(|&c| {
                c != full
                    && c.complement(g.order())
                        .iter()
                        .all(|v| convex_hull(g, c.with(v)) == full)
            });
            Ok(SetFamily::new(g.order(), maximal))
        }
        ClosureKind::Geodetic => {
            let mut found = Vec::new();
            let mut visited = 0;
            let mut stack = vec![(VertexSet::EMPTY, 0usize)];
            while let Some((p, next)) = stack.pop() {
                visited += 1;
                guard(visited, limits)?;
                let mut maximal = true;
                for v in p.complement(g.order()) {
                    if geodetic_closure(g, p.with(v)) != full {
                        maximal = false;
                        if v >= next {
                            stack.push((p.with(v), v + 1));
                        }
                    }
                }
                if maximal {
                    found.push(p);
                }
            }
            Ok(SetFamily::new(g.order(), found))
        }
    }
}

/// `𝒢`: the minimal generating sets, by increasing cardinality. Every
/// generating set contains all simplicial vertices, so the search only
/// ranges over their supersets.
pub fn minimal_generating(g: &Graph, kind: ClosureKind, limits: &Limits) -> Result<SetFamily> {
    let base = simplicial_vertices(g);
    let rest = base.complement(g.order()).to_vec();
    if rest.len() > 24 || (1usize << rest.len()) > limits.max_family.saturating_mul(16) {
        return Err(Error::Guard {
            what: "minimal generating set search",
            limit: limits.max_family,
        });
    }
    let r = rest.len();
    let mut found: Vec<VertexSet> = Vec::new();
    for k in 0..=r {
        for_each_k_subset(r, k, |mask| {
            let p = base | VertexSet::from_bits(spread(mask, &rest));
            if found.iter().any(|f| f.is_subset(p)) {
                return;
            }
            if is_generating(g, p, kind) {
                found.push(p);
            }
        });
    }
    Ok(SetFamily::new(g.order(), found))
}

fn spread(mask: u32, positions: &[usize]) -> u32 {
    VertexSet::from_bits(mask)
        .iter()
        .fold(0, |acc, i| acc | (1 << positions[i]))
}

// Calls `f` on every `k`-subset of `0..r` encoded as a bit mask.
fn for_each_k_subset(r: usize, k: usize, mut f: impl FnMut(u32)) {
    if k == 0 {
        f(0);
        return;
    }
    if k > r {
        return;
    }
    let limit = 1u64 << r;
    let mut x: u64 = (1 << k) - 1;
    while x < limit {
        f(x as u32);
        let c = x & x.wrapping_neg();
        let y = x + c;
        x = (((x ^ y) >> 2) / c) | y;
    }
}

/// `Φ`: intersection of the maximal nongenerating sets.
pub fn frattini(g: &Graph, kind: ClosureKind, limits: &Limits) -> Result<VertexSet> {
    Ok(maximal_nongenerating(g, kind, limits)?.intersection())
}

/// Closure of `family` under intersection, together with the ambient set.
pub fn intersection_lattice(family: &SetFamily, limits: &Limits) -> Result<SetFamily> {
    let n = family.ambient();
    let mut all: Vec<VertexSet> = vec![VertexSet::full(n)];
    let mut seen: HashSet<VertexSet> = all.iter().copied().collect();
    for m in family {
        let current = all.len();
        for i in 0..current {
            let x = all[i] & m;
            if seen.insert(x) {
                all.push(x);
                guard(all.len(), limits)?;
            }
        }
    }
    Ok(SetFamily::new(n, all))
}

/// `⌈P⌉`: intersection of the members of `family` containing `p`, or the
/// ambient set if there are none. Works for `𝒩` and for its intersection
/// lattice alike.
pub fn ceil(p: VertexSet, family: &SetFamily) -> VertexSet {
    family
        .iter()
        .filter(|&s| p.is_subset(s))
        .fold(VertexSet::full(family.ambient()), |a, s| a & s)
}

pub fn complement_family(family: &SetFamily) -> SetFamily {
    family.complement()
}

/// Vertices that can be dropped from every generating set, found by checking
/// all subsets. Exponential; meant as an oracle for small graphs.
pub fn nongenerators_brute(g: &Graph, kind: ClosureKind) -> VertexSet {
    let n = g.order();
    let generating: Vec<bool> = (0..1u32 << n)
        .map(|b| is_generating(g, VertexSet::from_bits(b), kind))
        .collect();
    g.vertices()
        .iter()
        .filter(|&v| {
            (0..1u32 << n).all(|b| {
                !generating[b as usize]
                    || generating[VertexSet::from_bits(b).without(v).bits() as usize]
            })
        })
        .collect()
}

/// Everything the games need to know about one closure operator on a graph.
#[derive(Clone, Debug, Serialize)]
pub struct ConvexityReport {
    pub kind: ClosureKind,
    pub order: usize,
    pub simplicial: VertexSet,
    pub maximal_nongenerating: SetFamily,
    pub minimal_generating: SetFamily,
    pub frattini: VertexSet,
    pub intersection_sets: SetFamily,
}

impl ConvexityReport {
    pub fn compute(g: &Graph, kind: ClosureKind, limits: &Limits) -> Result<Self> {
        let maximal_nongenerating = maximal_nongenerating(g, kind, limits)?;
        let minimal_generating = minimal_generating(g, kind, limits)?;
        let intersection_sets = intersection_lattice(&maximal_nongenerating, limits)?;
        Ok(ConvexityReport {
            kind,
            order: g.order(),
            simplicial: simplicial_vertices(g),
            frattini: maximal_nongenerating.intersection(),
            maximal_nongenerating,
            minimal_generating,
            intersection_sets,
        })
    }
}
