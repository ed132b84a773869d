//! Nim arithmetic and exact solvers for the achievement game `GEN` and the
//! avoidance game `DNG`.
//!
//! A position is the set of vertices selected so far. In `DNG` a move may
//! never produce a generating set, and the player unable to move loses. In
//! `GEN` the player who first produces a generating set wins.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::Serialize;

use crate::convexity::{self, ClosureKind, Limits, SetFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::StructureDigraph;
use crate::vertex_set::VertexSet;

/// A nim-number. Addition is the nim-sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Nimber(pub u32);

impl Nimber {
    pub const ZERO: Nimber = Nimber(0);

    pub fn value(self) -> u32 {
        self.0
    }
}

impl Add for Nimber {
    type Output = Nimber;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Nimber) -> Nimber {
        Nimber(self.0 ^ rhs.0)
    }
}

impl AddAssign for Nimber {
    fn add_assign(&mut self, rhs: Nimber) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Nimber {
    fn from(v: u32) -> Self {
        Nimber(v)
    }
}

/// Least nonnegative integer not among `values`.
pub fn mex(values: impl IntoIterator<Item = Nimber>) -> Nimber {
    let mut seen = 0u64;
    let mut big = Vec::new();
    for Nimber(v) in values {
        if v < 64 {
            seen |= 1 << v;
        } else {
            big.push(v);
        }
    }
    let small = (!seen).trailing_zeros();
    if small < 64 {
        return Nimber(small);
    }
    big.sort_unstable();
    let mut m = 64;
    for v in big {
        if v == m {
            m += 1;
        } else if v > m {
            break;
        }
    }
    Nimber(m)
}

pub fn nim_sum(a: Nimber, b: Nimber) -> Nimber {
    a + b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GameKind {
    #[serde(rename = "GEN")]
    Gen,
    #[serde(rename = "DNG")]
    Dng,
}

impl GameKind {
    pub const BOTH: [GameKind; 2] = [GameKind::Dng, GameKind::Gen];

    pub fn name(self) -> &'static str {
        match self {
            GameKind::Gen => "GEN",
            GameKind::Dng => "DNG",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for GameKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gen" => Ok(GameKind::Gen),
            "dng" => Ok(GameKind::Dng),
            _ => Err(format!("unknown game `{s}` (expected gen or dng)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GameSpec {
    pub game: GameKind,
    pub closure: ClosureKind,
}

impl GameSpec {
    pub fn new(game: GameKind, closure: ClosureKind) -> Self {
        GameSpec { game, closure }
    }

    pub fn hull(game: GameKind) -> Self {
        Self::new(game, ClosureKind::Hull)
    }

    pub fn geodetic(game: GameKind) -> Self {
        Self::new(game, ClosureKind::Geodetic)
    }

    /// All four game/closure combinations.
    pub fn all() -> impl Iterator<Item = GameSpec> {
        GameKind::BOTH.into_iter().flat_map(|g| {
            ClosureKind::BOTH
                .into_iter()
                .map(move |c| GameSpec::new(g, c))
        })
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.game, self.closure)
    }
}

/// Whether `p` can arise in play.
pub fn is_legal(g: &Graph, spec: GameSpec, p: VertexSet) -> bool {
    if !p.is_subset(g.vertices()) {
        return false;
    }
    let generates = |s| convexity::is_generating(g, s, spec.closure);
    match spec.game {
        GameKind::Dng => !generates(p),
        GameKind::Gen => !generates(p) || p.iter().any(|v| !generates(p.without(v))),
    }
}

/// Positions reachable in one move, in ascending order of the added vertex.
pub fn options(g: &Graph, spec: GameSpec, p: VertexSet) -> Result<Vec<VertexSet>> {
    if !is_legal(g, spec, p) {
        return Err(Error::IllegalPosition(p));
    }
    let generates = |s| convexity::is_generating(g, s, spec.closure);
    Ok(match spec.game {
        GameKind::Gen if generates(p) => Vec::new(),
        GameKind::Gen => p.complement(g.order()).iter().map(|v| p.with(v)).collect(),
        GameKind::Dng => p
            .complement(g.order())
            .iter()
            .map(|v| p.with(v))
            .filter(|&q| !generates(q))
            .collect(),
    })
}

/// Anything that can value positions of a fixed game.
pub trait Solver {
    fn spec(&self) -> GameSpec;
    fn order(&self) -> usize;
    /// Whether `p` (assumed reachable) generates.
    fn generates(&self, p: VertexSet) -> bool;
    fn nim(&mut self, p: VertexSet) -> Nimber;

    /// Least vertex whose selection leads to a position of nim-number 0.
    fn winning_move(&mut self, p: VertexSet) -> Option<usize> {
        if self.spec().game == GameKind::Gen && self.generates(p) {
            return None;
        }
        let free = p.complement(self.order());
        for v in free {
            let q = p.with(v);
            let legal = self.spec().game == GameKind::Gen || !self.generates(q);
            if legal && self.nim(q) == Nimber::ZERO {
                return Some(v);
            }
        }
        None
    }
}

const UNKNOWN: u8 = u8::MAX;

/// Game-tree recursion with one memo entry per vertex subset.
pub struct BruteSolver<'g> {
    graph: &'g Graph,
    spec: GameSpec,
    memo: Vec<u8>,
}

impl<'g> BruteSolver<'g> {
    pub fn new(graph: &'g Graph, spec: GameSpec, limits: &Limits) -> Result<Self> {
        if graph.order() > limits.max_brute_vertices {
            return Err(Error::Guard {
                what: "exact-set game engine vertex count",
                limit: limits.max_brute_vertices,
            });
        }
        Ok(BruteSolver {
            graph,
            spec,
            memo: vec![UNKNOWN; 1 << graph.order()],
        })
    }
}

impl Solver for BruteSolver<'_> {
    fn spec(&self) -> GameSpec {
        self.spec
    }

    fn order(&self) -> usize {
        self.graph.order()
    }

    fn generates(&self, p: VertexSet) -> bool {
        convexity::is_generating(self.graph, p, self.spec.closure)
    }

    fn nim(&mut self, p: VertexSet) -> Nimber {
        let slot = self.memo[p.bits() as usize];
        if slot != UNKNOWN {
            return Nimber(slot as u32);
        }
        let value = if self.spec.game == GameKind::Gen && self.generates(p) {
            Nimber::ZERO
        } else {
            let mut seen = Vec::new();
            for v in p.complement(self.order()) {
                let q = p.with(v);
                match self.spec.game {
                    GameKind::Gen => seen.push(self.nim(q)),
                    GameKind::Dng if !self.generates(q) => seen.push(self.nim(q)),
                    GameKind::Dng => {}
                }
            }
            mex(seen)
        };
        self.memo[p.bits() as usize] = value.0 as u8;
        value
    }
}

/// Recursion memoized on `(⌈P⌉, |P| mod 2)`, which determines the
/// nim-number of a position.
pub struct FastSolver {
    spec: GameSpec,
    family: SetFamily,
    memo: HashMap<(VertexSet, u8), Nimber>,
}

impl FastSolver {
    pub fn new(graph: &Graph, spec: GameSpec, limits: &Limits) -> Result<Self> {
        let family = convexity::maximal_nongenerating(graph, spec.closure, limits)?;
        Ok(Self::from_family(family, spec))
    }

    /// Builds from a precomputed family of maximal nongenerating sets.
    pub fn from_family(family: SetFamily, spec: GameSpec) -> Self {
        FastSolver {
            spec,
            family,
            memo: HashMap::new(),
        }
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }
}

impl Solver for FastSolver {
    fn spec(&self) -> GameSpec {
        self.spec
    }

    fn order(&self) -> usize {
        self.family.ambient()
    }

    fn generates(&self, p: VertexSet) -> bool {
        !self.family.iter().any(|n| p.is_subset(n))
    }

    fn nim(&mut self, p: VertexSet) -> Nimber {
        let key = (convexity::ceil(p, &self.family), p.parity());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let value = if self.spec.game == GameKind::Gen && self.generates(p) {
            Nimber::ZERO
        } else {
            let mut seen = Vec::new();
            for v in p.complement(self.order()) {
                let q = p.with(v);
                match self.spec.game {
                    GameKind::Gen => seen.push(self.nim(q)),
                    GameKind::Dng if !self.generates(q) => seen.push(self.nim(q)),
                    GameKind::Dng => {}
                }
            }
            mex(seen)
        };
        self.memo.insert(key, value);
        value
    }
}

pub fn nim_brute(g: &Graph, spec: GameSpec) -> Result<Nimber> {
    Ok(BruteSolver::new(g, spec, &Limits::default())?.nim(VertexSet::EMPTY))
}

pub fn nim_fast(g: &Graph, spec: GameSpec) -> Result<Nimber> {
    Ok(FastSolver::new(g, spec, &Limits::default())?.nim(VertexSet::EMPTY))
}

/// Least vertex moving from `p` to a position of nim-number 0, if any.
pub fn winning_move(g: &Graph, spec: GameSpec, p: VertexSet) -> Result<Option<usize>> {
    if !is_legal(g, spec, p) {
        return Err(Error::IllegalPosition(p));
    }
    let mut solver = FastSolver::new(g, spec, &Limits::default())?;
    Ok(solver.winning_move(p))
}

/// When every maximal nongenerating set has the same parity `r`, every
/// play of `DNG` has length of parity `r`, so its nim-number is `r`.
pub fn parity_forced_nim(family: &SetFamily) -> Option<Nimber> {
    family.common_parity().map(|r| Nimber(r as u32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Type calculus on the structure digraph.
    Structure,
    /// Recursion memoized by structure class and parity.
    Fast,
    /// Recursion memoized by exact position.
    Brute,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Structure => "structure",
            Engine::Fast => "fast",
            Engine::Brute => "brute",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "structure" => Ok(Engine::Structure),
            "fast" => Ok(Engine::Fast),
            "brute" => Ok(Engine::Brute),
            _ => Err(format!(
                "unknown engine `{s}` (expected structure, fast or brute)"
            )),
        }
    }
}

/// Nim-number of the starting position with the chosen engine.
pub fn nim_with(g: &Graph, spec: GameSpec, engine: Engine, limits: &Limits) -> Result<Nimber> {
    match engine {
        Engine::Structure => Ok(StructureDigraph::build(g, spec, limits)?.game_nim()),
        Engine::Fast => Ok(FastSolver::new(g, spec, limits)?.nim(VertexSet::EMPTY)),
        Engine::Brute => Ok(BruteSolver::new(g, spec, limits)?.nim(VertexSet::EMPTY)),
    }
}

/// Tries the structure engine, then the fast one, then the brute one, and
/// returns the first that stays within the limits.
pub fn nim_auto(g: &Graph, spec: GameSpec, limits: &Limits) -> Result<(Nimber, Engine)> {
    let mut last = None;
    for engine in [Engine::Structure, Engine::Fast, Engine::Brute] {
        match nim_with(g, spec, engine, limits) {
            Ok(v) => return Ok((v, engine)),
            Err(e @ Error::Guard { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one engine ran"))
}
