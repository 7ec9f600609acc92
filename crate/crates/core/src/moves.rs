//! Discrete motion of particles on a graph: configurations, single-edge
//! moves, validated loops, the two-particle exchange loop around an
//! essential vertex, its per-vertex products, breadth-first base paths, and
//! the projection of a tracked pair's trajectory to a theta-graph word.
//!
//! A move slides one particle along one whole edge; it is legal when the
//! particle sits at the edge's near end and no other particle sits at either
//! end. Loops are move sequences that replay legally and return to their
//! base configuration.

use crate::error::{Error, Result};
use crate::graph::{Graph, StarEmbedding};
use crate::words::{ThetaLetter, ThetaWord};
use indexmap::IndexMap;
use std::collections::VecDeque;
use std::fmt;

/// Positions of k particles, particle `p` (1-based) at `positions()[p-1]`;
/// all positions distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiscreteConfiguration {
    positions: Vec<String>,
}

impl DiscreteConfiguration {
    pub fn new<S: Into<String>>(positions: impl IntoIterator<Item = S>) -> Result<Self> {
        let positions: Vec<String> = positions.into_iter().map(Into::into).collect();
        if positions.is_empty() {
            return Err(Error::InvalidMove("a configuration needs k ≥ 1".into()));
        }
        for (i, p) in positions.iter().enumerate() {
            if positions[..i].contains(p) {
                return Err(Error::Collision(format!(
                    "two particles share vertex `{p}`"
                )));
            }
        }
        Ok(DiscreteConfiguration { positions })
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[String] {
        &self.positions
    }

    /// Position of a 1-based particle index.
    pub fn position(&self, particle: usize) -> Result<&str> {
        if particle == 0 || particle > self.positions.len() {
            return Err(Error::ParticleOutOfRange {
                particle,
                count: self.positions.len(),
            });
        }
        Ok(&self.positions[particle - 1])
    }

    /// The particle at `v`, if any (1-based).
    pub fn particle_at(&self, v: &str) -> Option<usize> {
        self.positions.iter().position(|p| p == v).map(|i| i + 1)
    }

    fn check_on(&self, g: &Graph) -> Result<()> {
        for p in &self.positions {
            if !g.has_vertex(p) {
                return Err(Error::UnknownVertex(p.clone()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DiscreteConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.positions.join(", "))
    }
}

/// One particle sliding along one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Move {
    pub particle: usize,
    pub from: String,
    pub to: String,
    pub edge: String,
}

impl Move {
    pub fn new(
        particle: usize,
        from: impl Into<String>,
        to: impl Into<String>,
        edge: impl Into<String>,
    ) -> Move {
        Move {
            particle,
            from: from.into(),
            to: to.into(),
            edge: edge.into(),
        }
    }

    /// The same slide backwards.
    pub fn reversed(&self) -> Move {
        Move {
            particle: self.particle,
            from: self.to.clone(),
            to: self.from.clone(),
            edge: self.edge.clone(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}: {} -> {} [{}]", self.particle, self.from, self.to, self.edge)
    }
}

/// Reverses a path of moves so that following it undoes the original.
pub fn reverse_moves(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(Move::reversed).collect()
}

/// Applies one move, checking it is legal: the edge joins `from` to `to`,
/// the particle is at `from`, and nobody else is at `from` or `to`.
pub fn apply(
    g: &Graph,
    c: &DiscreteConfiguration,
    mv: &Move,
) -> Result<DiscreteConfiguration> {
    if mv.from == mv.to {
        return Err(Error::InvalidMove(format!(
            "move along `{}` does not change vertex `{}`",
            mv.edge, mv.from
        )));
    }
    let (a, b) = g.edge_ends(&mv.edge)?;
    if !((a == mv.from && b == mv.to) || (a == mv.to && b == mv.from)) {
        return Err(Error::EdgeNotIncident {
            edge: mv.edge.clone(),
            from: mv.from.clone(),
            to: mv.to.clone(),
        });
    }
    let at = c.position(mv.particle)?;
    if at != mv.from {
        return Err(Error::ParticleNotAtSource {
            particle: mv.particle,
            at: at.to_string(),
            from: mv.from.clone(),
        });
    }
    if let Some(other) = c.particle_at(&mv.to) {
        return Err(Error::Collision(format!(
            "particle {other} already occupies `{}`",
            mv.to
        )));
    }
    let mut positions = c.positions.clone();
    positions[mv.particle - 1] = mv.to.clone();
    Ok(DiscreteConfiguration { positions })
}

/// A validated loop: a base configuration and a move sequence that replays
/// legally and ends back at the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpec {
    base: DiscreteConfiguration,
    moves: Vec<Move>,
}

impl LoopSpec {
    pub fn new(g: &Graph, base: DiscreteConfiguration, moves: Vec<Move>) -> Result<LoopSpec> {
        base.check_on(g)?;
        let spec = LoopSpec { base, moves };
        let states = spec.replay(g)?;
        if states.last() != Some(&spec.base) {
            return Err(Error::NotALoop);
        }
        Ok(spec)
    }

    pub fn base(&self) -> &DiscreteConfiguration {
        &self.base
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// All visited configurations, starting and ending with the base.
    pub fn replay(&self, g: &Graph) -> Result<Vec<DiscreteConfiguration>> {
        let mut states = vec![self.base.clone()];
        for mv in &self.moves {
            let next = apply(g, states.last().unwrap(), mv)?;
            states.push(next);
        }
        Ok(states)
    }

    /// Concatenates two loops at the same base.
    pub fn concat(&self, g: &Graph, other: &LoopSpec) -> Result<LoopSpec> {
        if self.base != other.base {
            return Err(Error::LoopPrecondition(
                "loops to concatenate must share their base configuration".into(),
            ));
        }
        let moves = self
            .moves
            .iter()
            .chain(other.moves.iter())
            .cloned()
            .collect();
        LoopSpec::new(g, self.base.clone(), moves)
    }

    /// Conjugates by a path: the result is based where the path starts, runs
    /// the path, this loop, then the reversed path.
    pub fn conjugate_by_path(
        &self,
        g: &Graph,
        start: DiscreteConfiguration,
        path: &[Move],
    ) -> Result<LoopSpec> {
        let mut moves: Vec<Move> = path.to_vec();
        moves.extend(self.moves.iter().cloned());
        moves.extend(reverse_moves(path));
        LoopSpec::new(g, start, moves)
    }
}

impl fmt::Display for LoopSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, mv) in self.moves.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{mv}")?;
        }
        Ok(())
    }
}

fn check_parked_clear(
    g: &Graph,
    base: &DiscreteConfiguration,
    moving: &[usize],
    emb: &StarEmbedding,
) -> Result<()> {
    let star = g.closed_star_vertices(emb.center())?;
    for particle in 1..=base.k() {
        if moving.contains(&particle) {
            continue;
        }
        let at = base.position(particle)?;
        if star.contains(at) {
            return Err(Error::LoopPrecondition(format!(
                "particle {particle} is parked at `{at}`, inside the closed star of `{}`",
                emb.center()
            )));
        }
        if g.is_essential(at)? {
            return Err(Error::LoopPrecondition(format!(
                "particle {particle} is parked at essential vertex `{at}`; base \
                 configurations must keep essential vertices free"
            )));
        }
    }
    Ok(())
}

/// The twelve-move exchange loop of two particles around an essential
/// vertex: each of the six arm-to-arm legs crosses the center in two moves.
/// The first pair particle starts at arm 1, the second at arm 2; every other
/// particle must sit outside the center's closed star and off every
/// essential vertex.
pub fn build_epsilon(
    g: &Graph,
    emb: &StarEmbedding,
    pair: (usize, usize),
    parking: &DiscreteConfiguration,
) -> Result<LoopSpec> {
    let (p, q) = pair;
    if p == q {
        return Err(Error::LoopPrecondition(
            "the exchanging pair needs two distinct particles".into(),
        ));
    }
    parking.check_on(g)?;
    let b = emb.boundary_vertices();
    for (particle, want_arm) in [(p, 0), (q, 1)] {
        let at = parking.position(particle)?;
        if at != b[want_arm] {
            return Err(Error::LoopPrecondition(format!(
                "particle {particle} must start at arm-{} boundary `{}` of `{}`, found at `{at}`",
                want_arm + 1,
                b[want_arm],
                emb.center()
            )));
        }
    }
    check_parked_clear(g, parking, &[p, q], emb)?;

    let c = emb.center();
    let e = [&emb.arm(0).edge, &emb.arm(1).edge, &emb.arm(2).edge];
    // Legs of the exchange: (mover, from-arm, to-arm), 0-based arms. The
    // two movers alternate, each sweeping arm i -> i+1 cyclically.
    let legs = [
        (q, 1, 2),
        (p, 0, 1),
        (q, 2, 0),
        (p, 1, 2),
        (q, 0, 1),
        (p, 2, 0),
    ];
    let mut moves = Vec::with_capacity(12);
    for (mover, from_arm, to_arm) in legs {
        moves.push(Move::new(mover, b[from_arm], c, e[from_arm].clone()));
        moves.push(Move::new(mover, c, b[to_arm], e[to_arm].clone()));
    }
    LoopSpec::new(g, parking.clone(), moves)
}

/// The per-vertex exchange loops realizing a binary W-partition: each
/// vertex's pair is placed on its first two arms (smaller index at arm 1)
/// and exchanged there. All loops share one base configuration, so they
/// concatenate in any order.
#[derive(Debug, Clone)]
pub struct PhiLambda {
    base: DiscreteConfiguration,
    loops: IndexMap<String, LoopSpec>,
}

impl PhiLambda {
    pub fn base(&self) -> &DiscreteConfiguration {
        &self.base
    }

    /// The exchange loop at one vertex of W.
    pub fn loop_at(&self, v: &str) -> Result<&LoopSpec> {
        self.loops
            .get(v)
            .ok_or_else(|| Error::InvalidQuery(format!("no exchange loop at `{v}`")))
    }

    pub fn loops(&self) -> impl Iterator<Item = (&str, &LoopSpec)> {
        self.loops.iter().map(|(v, l)| (v.as_str(), l))
    }

    /// Concatenation of the per-vertex loops in the given vertex order.
    pub fn concatenated(&self, g: &Graph, order: &[&str]) -> Result<LoopSpec> {
        if order.len() != self.loops.len() {
            return Err(Error::InvalidQuery(format!(
                "concatenation order lists {} vertices, expected {}",
                order.len(),
                self.loops.len()
            )));
        }
        let mut acc: Option<LoopSpec> = None;
        for v in order {
            let next = self.loop_at(v)?;
            acc = Some(match acc {
                None => next.clone(),
                Some(done) => done.concat(g, next)?,
            });
        }
        acc.ok_or_else(|| Error::InvalidQuery("empty concatenation order".into()))
    }
}

pub fn build_phi_lambda(g: &Graph, lam: &crate::partitions::BinaryWPartition) -> Result<PhiLambda> {
    let w_set: Vec<&str> = lam.vertices().collect();
    for (i, v) in w_set.iter().enumerate() {
        for w in &w_set[i + 1..] {
            if !g.closed_stars_disjoint(v, w)? {
                return Err(Error::StarOverlap(v.to_string(), w.to_string()));
            }
        }
    }

    let mut positions = vec![String::new(); lam.k()];
    let mut embeddings = Vec::new();
    for v in &w_set {
        let emb = g.star_embedding(v)?;
        let (i, j) = lam.pair(v)?;
        positions[i - 1] = emb.arm(0).boundary.clone();
        positions[j - 1] = emb.arm(1).boundary.clone();
        embeddings.push(emb);
    }
    let base = DiscreteConfiguration::new(positions)?;

    let mut loops = IndexMap::new();
    for (v, emb) in w_set.iter().zip(&embeddings) {
        let pair = lam.pair(v)?;
        let spec = build_epsilon(g, emb, pair, &base)?;
        loops.insert(v.to_string(), spec);
    }
    Ok(PhiLambda { base, loops })
}

/// Breadth-first search for a legal move sequence between two
/// configurations. Deterministic: particles and their edge order fix the
/// exploration order. The visited-state count is capped.
pub fn build_base_path(
    g: &Graph,
    from: &DiscreteConfiguration,
    to: &DiscreteConfiguration,
) -> Result<Vec<Move>> {
    const STATE_CAP: usize = 1_000_000;
    if from.k() != to.k() {
        return Err(Error::InvalidQuery(format!(
            "configurations have different particle counts {} and {}",
            from.k(),
            to.k()
        )));
    }
    from.check_on(g)?;
    to.check_on(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let names: Vec<&str> = g.vertices().collect();
    let vertex_index: IndexMap<&str, u32> = names
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, i as u32))
        .collect();
    // Per vertex: (far vertex, edge) in edge-order, loops skipped.
    let mut slides: Vec<Vec<(u32, &str)>> = vec![Vec::new(); names.len()];
    for (v, &vi) in &vertex_index {
        for half in g.edge_order(v)? {
            let far = g.far_end(half)?;
            if far != *v {
                slides[vi as usize].push((vertex_index[far], half.edge.as_str()));
            }
        }
    }
    let encode = |c: &DiscreteConfiguration| -> Vec<u32> {
        c.positions().iter().map(|p| vertex_index[p.as_str()]).collect()
    };

    let start = encode(from);
    let goal = encode(to);
    // parent: state -> (previous state index, mover, target, edge)
    type Parent<'a> = Option<(usize, usize, u32, &'a str)>;
    let mut seen: IndexMap<Vec<u32>, Parent> = IndexMap::new();
    seen.insert(start.clone(), None);
    let mut queue = VecDeque::from([0usize]);
    while let Some(state_idx) = queue.pop_front() {
        let state = seen.get_index(state_idx).unwrap().0.clone();
        if state == goal {
            let mut path = Vec::new();
            let mut cursor = state_idx;
            while let Some((prev, particle, to, edge)) = *seen.get_index(cursor).unwrap().1 {
                let from = seen.get_index(prev).unwrap().0[particle - 1];
                path.push(Move::new(
                    particle,
                    names[from as usize],
                    names[to as usize],
                    edge,
                ));
                cursor = prev;
            }
            path.reverse();
            return Ok(path);
        }
        for particle in 1..=state.len() {
            let at = state[particle - 1];
            for &(far, edge) in &slides[at as usize] {
                if state.contains(&far) {
                    continue;
                }
                let mut next = state.clone();
                next[particle - 1] = far;
                if seen.contains_key(&next) {
                    continue;
                }
                if seen.len() >= STATE_CAP {
                    return Err(Error::ResourceGuard {
                        what: "configuration states".into(),
                        size: seen.len() + 1,
                        cap: STATE_CAP,
                    });
                }
                let (idx, _) = seen.insert_full(next, Some((state_idx, particle, far, edge)));
                queue.push_back(idx);
            }
        }
    }
    Err(Error::Unreachable)
}

/// Projects a loop to the theta graph at an essential vertex `w`: scans the
/// moves of the two tracked particles and emits one letter per visit to
/// `w` — enter along arm `i`, leave along arm `j` gives `g(i,j)`, with
/// same-arm visits dropped. Arm numbers are 1-based positions in the edge
/// order at `w`. Everything away from `w`, and every untracked particle,
/// projects to the basepoint.
pub fn q_project(
    g: &Graph,
    spec: &LoopSpec,
    tracked: (usize, usize),
    w: &str,
) -> Result<ThetaWord> {
    if !g.is_essential(w)? {
        return Err(Error::NotEssential(w.to_string()));
    }
    let (s, t) = tracked;
    if s == t {
        return Err(Error::ProjectionPrecondition(
            "tracked pair needs two distinct particles".into(),
        ));
    }
    for particle in [s, t] {
        if spec.base().position(particle)? == w {
            return Err(Error::ProjectionPrecondition(format!(
                "tracked particle {particle} starts at `{w}`"
            )));
        }
    }
    spec.replay(g)?;

    let arm_of = |edge: &str| -> Result<u16> {
        let (a, b) = g.edge_ends(edge)?;
        let end_at_w = if a == w { 0 } else if b == w { 1 } else {
            return Err(Error::EdgeNotIncident {
                edge: edge.to_string(),
                from: w.to_string(),
                to: w.to_string(),
            });
        };
        let slot = g
            .edge_order(w)?
            .iter()
            .position(|h| h.edge == edge && h.end == end_at_w)
            .expect("incident edge has a slot");
        Ok(slot as u16 + 1)
    };

    let arms = g.valence(w)? as u16;
    let mut letters = Vec::new();
    let mut open: Option<(usize, u16)> = None; // (particle, entry arm)
    for mv in spec.moves() {
        if mv.particle != s && mv.particle != t {
            continue;
        }
        if mv.to == w {
            if let Some((other, _)) = open {
                return Err(Error::ProjectionPrecondition(format!(
                    "tracked particles {other} and {} are both inside the star of `{w}`",
                    mv.particle
                )));
            }
            open = Some((mv.particle, arm_of(&mv.edge)?));
        } else if mv.from == w {
            let Some((particle, entered)) = open.take() else {
                return Err(Error::ProjectionPrecondition(format!(
                    "particle {} leaves `{w}` without a recorded entry",
                    mv.particle
                )));
            };
            debug_assert_eq!(particle, mv.particle);
            let exit = arm_of(&mv.edge)?;
            if entered != exit {
                letters.push(ThetaLetter::gen(entered, exit));
            }
        }
    }
    if let Some((particle, _)) = open {
        return Err(Error::ProjectionPrecondition(format!(
            "tracked particle {particle} is still at `{w}` when the loop ends"
        )));
    }
    ThetaWord::new(arms, letters)
}
