//! Finite multigraphs with ordered edge incidences, essential-vertex
//! combinatorics, and the two subdivision operations used throughout the
//! crate.
//!
//! Loops and parallel edges are accepted on input. Every vertex carries an
//! ordered list of its incident half-edges (a loop contributes two); the
//! order defaults to edge declaration order and can be overridden per vertex.
//! Star embeddings and the words they produce depend on that order, so it is
//! part of the graph's identity and survives subdivision.

use crate::error::{Error, Result};
use indexmap::{IndexMap, IndexSet};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// One incidence of an edge at a vertex. `end` is 0 or 1, indexing into the
/// edge's endpoint pair; a loop at `v` shows up as two half-edges with ends 0
/// and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfEdge {
    pub edge: String,
    pub end: usize,
}

/// An immutable multigraph. Construction validates endpoint names,
/// identifier uniqueness, and any explicit edge orders; all queries after
/// that are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: IndexSet<String>,
    edges: IndexMap<String, (String, String)>,
    /// Complete half-edge order at every vertex, explicit or defaulted.
    order: IndexMap<String, Vec<HalfEdge>>,
    /// Vertices whose order differs from declaration order (echoed to JSON).
    custom_order: IndexSet<String>,
}

/// Characters that would collide with the text forms printed and parsed by
/// the CLI (partitions, move lists, vertex lists).
const FORBIDDEN_NAME_CHARS: &[char] = &[',', ':', '{', '}', '[', ']', '"', '<', '>'];

fn check_name(kind: &str, name: &str) -> Result<()> {
    if name.is_empty()
        || name.chars().any(char::is_whitespace)
        || name.contains(FORBIDDEN_NAME_CHARS)
    {
        return Err(Error::InvalidGraph(format!(
            "{kind} name `{name}` is empty or contains whitespace or one of ,:{{}}[]\"<>"
        )));
    }
    Ok(())
}

impl Graph {
    /// Builds a graph with declaration-order edge incidences.
    pub fn new<V, VS, E, ES>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VS>,
        VS: Into<String>,
        E: IntoIterator<Item = (ES, ES, ES)>,
        ES: Into<String>,
    {
        let vertex_names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let edge_records: Vec<(String, String, String)> = edges
            .into_iter()
            .map(|(id, a, b)| (id.into(), a.into(), b.into()))
            .collect();
        Self::with_orders(vertex_names, edge_records, Vec::new())
    }

    /// Builds a graph overriding the half-edge order at the listed vertices.
    /// Each override lists edge ids incident to that vertex; a loop id must
    /// appear twice and is assigned its two ends in list order.
    pub fn with_orders(
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
        orders: Vec<(String, Vec<String>)>,
    ) -> Result<Graph> {
        let mut vertex_set = IndexSet::new();
        for v in vertices {
            check_name("vertex", &v)?;
            if !vertex_set.insert(v.clone()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut edge_map = IndexMap::new();
        for (id, a, b) in edges {
            check_name("edge", &id)?;
            if !vertex_set.contains(&a) {
                return Err(Error::UnknownVertex(a));
            }
            if !vertex_set.contains(&b) {
                return Err(Error::UnknownVertex(b));
            }
            if edge_map.insert(id.clone(), (a, b)).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge id `{id}`")));
            }
        }

        let mut g = Graph {
            vertices: vertex_set,
            edges: edge_map,
            order: IndexMap::new(),
            custom_order: IndexSet::new(),
        };
        let default_orders: IndexMap<String, Vec<HalfEdge>> = g
            .vertices
            .iter()
            .map(|v| (v.clone(), g.default_order_at(v)))
            .collect();
        g.order = default_orders;

        for (v, ids) in orders {
            let slots = g.slots_from_ids(&v, &ids)?;
            if slots != g.order[&v] {
                g.custom_order.insert(v.clone());
                g.order.insert(v, slots);
            }
        }
        Ok(g)
    }

    fn default_order_at(&self, v: &str) -> Vec<HalfEdge> {
        let mut slots = Vec::new();
        for (id, (a, b)) in &self.edges {
            if a == v {
                slots.push(HalfEdge {
                    edge: id.clone(),
                    end: 0,
                });
            }
            if b == v {
                slots.push(HalfEdge {
                    edge: id.clone(),
                    end: 1,
                });
            }
        }
        slots
    }

    /// Resolves an id list into half-edge slots at `v`, checking it is a
    /// permutation of the incident half-edges.
    fn slots_from_ids(&self, v: &str, ids: &[String]) -> Result<Vec<HalfEdge>> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let mut remaining = self.default_order_at(v);
        let mut slots = Vec::with_capacity(ids.len());
        for id in ids {
            let pos = remaining
                .iter()
                .position(|h| h.edge == *id)
                .ok_or_else(|| {
                    Error::InvalidGraph(format!(
                        "edge order at `{v}` lists `{id}` more often than it is incident"
                    ))
                })?;
            slots.push(remaining.remove(pos));
        }
        if !remaining.is_empty() {
            return Err(Error::InvalidGraph(format!(
                "edge order at `{v}` misses incident edge `{}`",
                remaining[0].edge
            )));
        }
        Ok(slots)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    /// Edges in declaration order as (id, end0, end1).
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.edges
            .iter()
            .map(|(id, (a, b))| (id.as_str(), a.as_str(), b.as_str()))
    }

    pub fn edge_ends(&self, id: &str) -> Result<(&str, &str)> {
        self.edges
            .get(id)
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    /// The ordered half-edges at `v`.
    pub fn edge_order(&self, v: &str) -> Result<&[HalfEdge]> {
        self.order
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// Number of half-edges at `v`; a loop counts twice.
    pub fn valence(&self, v: &str) -> Result<usize> {
        Ok(self.edge_order(v)?.len())
    }

    pub fn is_essential(&self, v: &str) -> Result<bool> {
        Ok(self.valence(v)? >= 3)
    }

    /// Vertices of valence at least 3, in declaration order.
    pub fn essential_vertices(&self) -> Vec<&str> {
        self.vertices
            .iter()
            .filter(|v| self.order[v.as_str()].len() >= 3)
            .map(String::as_str)
            .collect()
    }

    /// The count of essential vertices, written m(Γ) in the literature.
    pub fn essential_count(&self) -> usize {
        self.essential_vertices().len()
    }

    /// The far endpoint of a half-edge at `v` (equals `v` for a loop).
    pub fn far_end(&self, half: &HalfEdge) -> Result<&str> {
        let (a, b) = self.edge_ends(&half.edge)?;
        Ok(if half.end == 0 { b } else { a })
    }

    /// Distinct neighbors of `v` (includes `v` itself when a loop is
    /// present), in half-edge order.
    pub fn neighbors(&self, v: &str) -> Result<IndexSet<&str>> {
        let mut out = IndexSet::new();
        for half in self.edge_order(v)? {
            out.insert(self.far_end(half)?);
        }
        Ok(out)
    }

    /// Adjacency lists by vertex index as (neighbor index, edge index).
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (ei, (a, b)) in self.edges.values().enumerate() {
            let ai = self.vertices.get_index_of(a).unwrap();
            let bi = self.vertices.get_index_of(b).unwrap();
            adj[ai].push((bi, ei));
            if ai != bi {
                adj[bi].push((ai, ei));
            }
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut components = 0;
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// First Betti number of the graph itself: E − V + C.
    pub fn first_betti(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// The local embedding data at an essential vertex: the first three
    /// half-edges in its order, with their far endpoints. Fails when those
    /// arms loop back or share a far endpoint, which a prior
    /// [`Graph::paper_subdivide`] rules out.
    pub fn star_embedding(&self, v: &str) -> Result<StarEmbedding> {
        let slots = self.edge_order(v)?;
        if slots.len() < 3 {
            return Err(Error::NotEssential(v.to_string()));
        }
        let mut arms = Vec::with_capacity(3);
        for half in &slots[..3] {
            let boundary = self.far_end(half)?;
            if boundary == v {
                return Err(Error::ArmsNotDisjoint(
                    v.to_string(),
                    format!("arm edge `{}` is a loop", half.edge),
                ));
            }
            arms.push(Arm {
                edge: half.edge.clone(),
                boundary: boundary.to_string(),
            });
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if arms[i].boundary == arms[j].boundary {
                    return Err(Error::ArmsNotDisjoint(
                        v.to_string(),
                        format!(
                            "arm edges `{}` and `{}` share far endpoint `{}`",
                            arms[i].edge, arms[j].edge, arms[i].boundary
                        ),
                    ));
                }
            }
        }
        let arms: [Arm; 3] = arms.try_into().unwrap();
        Ok(StarEmbedding {
            center: v.to_string(),
            arms,
        })
    }

    /// Vertices of the closed star of `v`: the vertex itself and every far
    /// endpoint of an incident edge.
    pub fn closed_star_vertices(&self, v: &str) -> Result<IndexSet<&str>> {
        let mut out = self.neighbors(v)?;
        out.insert(self.vertices.get(v).map(String::as_str).unwrap());
        Ok(out)
    }

    /// Whether the closed stars of two distinct vertices share no point:
    /// no shared vertex (hence no shared edge), i.e. not adjacent and no
    /// common neighbor.
    pub fn closed_stars_disjoint(&self, v: &str, w: &str) -> Result<bool> {
        if v == w {
            return Err(Error::InvalidQuery(format!(
                "closed-star disjointness needs two distinct vertices, got `{v}` twice"
            )));
        }
        let sv = self.closed_star_vertices(v)?;
        let sw = self.closed_star_vertices(w)?;
        Ok(sv.iter().all(|x| !sw.contains(x)))
    }

    /// Subdivides each edge into the given number of pieces. Fresh vertices
    /// on edge `e` are `e.1`, `e.2`, …; fresh edges are `e.s1`, `e.s2`, … in
    /// direction of the original endpoint pair. Explicit edge orders at
    /// surviving vertices are translated; pieces inherit the declaration
    /// slot of their parent edge, so default orders are stable too.
    fn subdivide_edges(&self, pieces: impl Fn(&str) -> usize) -> Result<Graph> {
        let mut vertices: Vec<String> = self.vertices.iter().cloned().collect();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        let mut taken: IndexSet<String> = self.vertices.clone();
        for id in self.edges.keys() {
            taken.insert(id.clone());
        }

        let claim = |name: String, taken: &mut IndexSet<String>| -> Result<String> {
            if !taken.insert(name.clone()) {
                return Err(Error::InvalidGraph(format!(
                    "subdivision name `{name}` collides with an existing identifier"
                )));
            }
            Ok(name)
        };

        // first-piece / last-piece ids per original edge, for order translation
        let mut first_piece: IndexMap<String, String> = IndexMap::new();
        let mut last_piece: IndexMap<String, String> = IndexMap::new();

        for (id, (a, b)) in &self.edges {
            let n = pieces(id).max(1);
            if n == 1 {
                edges.push((id.clone(), a.clone(), b.clone()));
                first_piece.insert(id.clone(), id.clone());
                last_piece.insert(id.clone(), id.clone());
                continue;
            }
            let mut stops = vec![a.clone()];
            for i in 1..n {
                let v = claim(format!("{id}.{i}"), &mut taken)?;
                vertices.push(v.clone());
                stops.push(v);
            }
            stops.push(b.clone());
            for s in 1..=n {
                let e = claim(format!("{id}.s{s}"), &mut taken)?;
                edges.push((e.clone(), stops[s - 1].clone(), stops[s].clone()));
                if s == 1 {
                    first_piece.insert(id.clone(), e.clone());
                }
                if s == n {
                    last_piece.insert(id.clone(), e);
                }
            }
        }

        let mut orders = Vec::new();
        for v in &self.custom_order {
            let translated: Vec<String> = self.order[v]
                .iter()
                .map(|half| {
                    if half.end == 0 {
                        first_piece[&half.edge].clone()
                    } else {
                        last_piece[&half.edge].clone()
                    }
                })
                .collect();
            orders.push((v.clone(), translated));
        }
        Graph::with_orders(vertices, edges, orders)
    }

    /// Subdivides just enough that every essential vertex has three
    /// loop-free arms with pairwise distinct far endpoints and the closed
    /// stars of distinct essential vertices are pairwise disjoint. Splits an
    /// edge joining two essential vertices (or looping at one) into three
    /// pieces, and an essential-incident edge into two when it has a
    /// parallel partner or its far endpoint touches another essential
    /// vertex. Essential vertices, their valences, and the first Betti
    /// number are unchanged.
    pub fn paper_subdivide(&self) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let essential: IndexSet<&str> = self.essential_vertices().into_iter().collect();
        let is_parallel = |id: &str, a: &str, b: &str| {
            self.edges.iter().any(|(other, (c, d))| {
                other != id && ((c == a && d == b) || (c == b && d == a))
            })
        };
        let touches_other_essential = |far: &str, center: &str| {
            self.neighbors(far)
                .map(|ns| ns.iter().any(|n| *n != center && essential.contains(n)))
                .unwrap_or(false)
        };
        self.subdivide_edges(|id| {
            let (a, b) = self.edge_ends(id).unwrap();
            let (a_ess, b_ess) = (essential.contains(a), essential.contains(b));
            match (a_ess, b_ess) {
                (true, true) => 3,
                (false, false) => 1,
                _ => {
                    let (center, far) = if a_ess { (a, b) } else { (b, a) };
                    if is_parallel(id, a, b) || touches_other_essential(far, center) {
                        2
                    } else {
                        1
                    }
                }
            }
        })
    }

    /// Uniform subdivision for the discrete configuration model at `k`
    /// particles: every edge becomes k+1 pieces, which makes every
    /// essential-to-essential distance and every cycle length at least k+1.
    pub fn abrams_subdivide(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidQuery(
                "subdivision for the discrete model needs a particle count of at least 1".into(),
            ));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        self.subdivide_edges(|_| k + 1)
    }

    /// Conservative sufficiency test for the discrete configuration model
    /// with `k` particles: every two distinct essential vertices lie at
    /// distance at least k+1 and every cycle has at least k+1 edges.
    pub fn sufficiently_subdivided(&self, k: usize) -> bool {
        let adj = self.adjacency();
        let n = self.vertices.len();

        let essential_idx: Vec<usize> = (0..n)
            .filter(|&i| self.order[self.vertices.get_index(i).unwrap()].len() >= 3)
            .collect();
        for (pos, &s) in essential_idx.iter().enumerate() {
            let dist = bfs_distances(&adj, n, s, None);
            for &t in &essential_idx[pos + 1..] {
                if dist[t].is_some_and(|d| d <= k) {
                    return false;
                }
            }
        }

        for (ei, (a, b)) in self.edges.values().enumerate() {
            let ai = self.vertices.get_index_of(a).unwrap();
            let bi = self.vertices.get_index_of(b).unwrap();
            if ai == bi {
                // A loop is a cycle of length 1.
                if k >= 1 {
                    return false;
                }
                continue;
            }
            let dist = bfs_distances(&adj, n, ai, Some(ei));
            if dist[bi].is_some_and(|d| d < k) {
                return false;
            }
        }
        true
    }

    /// Compact JSON in the graph file format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph document serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("graph document serializes")
    }

    fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.vertices.iter().cloned().collect(),
            edges: self
                .edges
                .iter()
                .map(|(id, (a, b))| EdgeDocument {
                    id: id.clone(),
                    ends: [a.clone(), b.clone()],
                })
                .collect(),
            edge_order: self
                .custom_order
                .iter()
                .map(|v| {
                    let ids = self.order[v].iter().map(|h| h.edge.clone()).collect();
                    (v.clone(), ids)
                })
                .collect(),
        }
    }

    /// Parses the graph file format, accepting keys in any order.
    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "graph JSON at line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        Graph::with_orders(
            doc.vertices,
            doc.edges.into_iter().map(|e| {
                let [a, b] = e.ends;
                (e.id, a, b)
            }).collect(),
            doc.edge_order.into_iter().collect(),
        )
    }
}

/// Serialization shape of the graph file format. Field order here fixes the
/// key order writers emit. Unknown keys are rejected rather than dropped:
/// a typoed `edge_order` would otherwise silently renumber star arms.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<String>,
    edges: Vec<EdgeDocument>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    edge_order: IndexMap<String, Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDocument {
    id: String,
    ends: [String; 2],
}

/// One arm of a star embedding: the edge and its far endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arm {
    pub edge: String,
    pub boundary: String,
}

/// The first three arms at an essential vertex, in edge order, with
/// pairwise distinct far endpoints. Arm numbers used in words are 1-based
/// positions in this list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarEmbedding {
    center: String,
    arms: [Arm; 3],
}

impl StarEmbedding {
    pub fn center(&self) -> &str {
        &self.center
    }

    pub fn arms(&self) -> &[Arm; 3] {
        &self.arms
    }

    pub fn arm(&self, index: usize) -> &Arm {
        &self.arms[index]
    }

    pub fn boundary_vertices(&self) -> [&str; 3] {
        [
            &self.arms[0].boundary,
            &self.arms[1].boundary,
            &self.arms[2].boundary,
        ]
    }
}

fn bfs_distances(
    adj: &[Vec<(usize, usize)>],
    n: usize,
    start: usize,
    skip_edge: Option<usize>,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; n];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &(w, ei) in &adj[v] {
            if Some(ei) == skip_edge || dist[w].is_some() {
                continue;
            }
            dist[w] = Some(dist[v].unwrap() + 1);
            queue.push_back(w);
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn valence_counts_half_edges() {
        let y = library::star(3);
        assert_eq!(y.valence("c").unwrap(), 3);
        assert_eq!(y.valence("a1").unwrap(), 1);
        assert!(y.valence("zzz").is_err());

        let loop_graph = Graph::new(["v"], [("l", "v", "v")]).unwrap();
        assert_eq!(loop_graph.valence("v").unwrap(), 2);
    }

    #[test]
    fn essential_vertices_examples() {
        let h = library::h_graph();
        assert_eq!(h.essential_vertices(), vec!["u", "w"]);
        assert_eq!(h.essential_count(), 2);

        let k4 = library::complete(4);
        assert_eq!(k4.essential_count(), 4);

        let c5 = library::cycle(5);
        assert!(c5.essential_vertices().is_empty());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Graph::new(["a", "a"], [] as [(&str, &str, &str); 0]).is_err());
        assert!(Graph::new(["a"], [("e", "a", "b")]).is_err());
        assert!(Graph::new(["a", "b"], [("e", "a", "b"), ("e", "b", "a")]).is_err());
        assert!(Graph::new(["a b"], [] as [(&str, &str, &str); 0]).is_err());
        assert!(Graph::new(["a:1"], [] as [(&str, &str, &str); 0]).is_err());
    }

    #[test]
    fn explicit_edge_order_round_trips() {
        let g = Graph::with_orders(
            vec!["u".into(), "a".into(), "b".into(), "c".into()],
            vec![
                ("e1".into(), "u".into(), "a".into()),
                ("e2".into(), "u".into(), "b".into()),
                ("e3".into(), "u".into(), "c".into()),
            ],
            vec![("u".into(), vec!["e2".into(), "e3".into(), "e1".into()])],
        )
        .unwrap();
        let ids: Vec<&str> = g
            .edge_order("u")
            .unwrap()
            .iter()
            .map(|h| h.edge.as_str())
            .collect();
        assert_eq!(ids, ["e2", "e3", "e1"]);

        let json = g.to_json();
        assert!(json.contains("\"edge_order\""));
        let back = Graph::from_json(&json).unwrap();
        assert_eq!(back, g);

        // Default order is not echoed.
        let plain = library::star(3);
        assert!(!plain.to_json().contains("edge_order"));
        assert_eq!(Graph::from_json(&plain.to_json()).unwrap(), plain);
    }

    #[test]
    fn edge_order_must_be_a_permutation() {
        let bad = Graph::with_orders(
            vec!["u".into(), "a".into(), "b".into()],
            vec![
                ("e1".into(), "u".into(), "a".into()),
                ("e2".into(), "u".into(), "b".into()),
            ],
            vec![("u".into(), vec!["e1".into()])],
        );
        assert!(bad.is_err());
        let bad = Graph::with_orders(
            vec!["u".into(), "a".into()],
            vec![("e1".into(), "u".into(), "a".into())],
            vec![("u".into(), vec!["e1".into(), "e1".into()])],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn json_key_order_is_fixed() {
        let h = library::h_graph();
        let json = h.to_json();
        let v = json.find("\"vertices\"").unwrap();
        let e = json.find("\"edges\"").unwrap();
        assert!(v < e);
        assert!(Graph::from_json("{\"edges\":[],\"vertices\":[\"a\"]}").is_ok());
        assert!(Graph::from_json("{\"vertices\":[\"a\"]").is_err());
        // A typoed key must fail loudly, not silently drop an edge order.
        assert!(Graph::from_json(
            "{\"vertices\":[\"a\"],\"edges\":[],\"orders\":{}}"
        )
        .is_err());
    }

    #[test]
    fn star_embedding_uses_first_three_arms() {
        let y = library::star(3);
        let emb = y.star_embedding("c").unwrap();
        assert_eq!(emb.center(), "c");
        assert_eq!(emb.boundary_vertices(), ["a1", "a2", "a3"]);
        assert_eq!(emb.arm(0).edge, "e1");

        let s5 = library::star(5);
        let emb = s5.star_embedding("c").unwrap();
        assert_eq!(emb.boundary_vertices(), ["a1", "a2", "a3"]);

        assert!(matches!(
            y.star_embedding("a1"),
            Err(Error::NotEssential(_))
        ));
    }

    #[test]
    fn star_embedding_rejects_loops_and_parallels() {
        let g = Graph::new(
            ["v", "a"],
            [("l", "v", "v"), ("e", "v", "a")],
        )
        .unwrap();
        assert!(matches!(
            g.star_embedding("v"),
            Err(Error::ArmsNotDisjoint(_, _))
        ));

        let theta = library::theta_graph(3);
        assert!(matches!(
            theta.star_embedding("u"),
            Err(Error::ArmsNotDisjoint(_, _))
        ));
        let sub = theta.paper_subdivide().unwrap();
        assert!(sub.star_embedding("u").is_ok());
    }

    #[test]
    fn closed_star_examples() {
        let h = library::h_graph();
        assert!(!h.closed_stars_disjoint("u", "w").unwrap());
        let sub = h.paper_subdivide().unwrap();
        assert!(sub.closed_stars_disjoint("u", "w").unwrap());

        let y = library::star(3);
        assert!(!y.closed_stars_disjoint("a1", "a2").unwrap());
        assert!(y.closed_stars_disjoint("a1", "a1").is_err());
    }

    #[test]
    fn paper_subdivide_examples() {
        // Star: single essential vertex, nothing to do.
        let y = library::star(3);
        assert_eq!(y.paper_subdivide().unwrap(), y);

        // Theta: adjacent essential vertices joined by parallel edges; all
        // three edges become three pieces and the stars separate.
        let theta = library::theta_graph(3);
        let sub = theta.paper_subdivide().unwrap();
        assert_eq!(sub.edge_count(), 9);
        assert_eq!(sub.vertex_count(), 8);
        assert_eq!(sub.essential_count(), 2);
        assert!(sub.closed_stars_disjoint("u", "w").unwrap());
        for v in ["u", "w"] {
            let emb = sub.star_embedding(v).unwrap();
            let b = emb.boundary_vertices();
            assert_eq!(b.len(), 3);
        }

        // H: only the bridge splits (into three), leaf edges survive.
        let h = library::h_graph();
        let sub = h.paper_subdivide().unwrap();
        assert_eq!(sub.edge_count(), 7);
        assert_eq!(sub.vertex_count(), 8);
        assert_eq!(
            sub.star_embedding("u").unwrap().boundary_vertices(),
            ["a1", "a2", "e3.1"]
        );
        assert_eq!(
            sub.star_embedding("w").unwrap().boundary_vertices(),
            ["e3.2", "b1", "b2"]
        );

        // Loop at an essential vertex becomes three pieces.
        let g = Graph::new(
            ["v", "a"],
            [("l", "v", "v"), ("e", "v", "a")],
        )
        .unwrap();
        let sub = g.paper_subdivide().unwrap();
        assert_eq!(sub.edge_count(), 4);
        assert!(sub.star_embedding("v").is_ok());
    }

    #[test]
    fn paper_subdivide_preserves_invariants() {
        for g in [
            library::star(3),
            library::h_graph(),
            library::theta_graph(3),
            library::theta_graph(4),
            library::complete(4),
            library::complete(5),
            library::complete_bipartite(3, 3),
            library::cycle(5),
        ] {
            let sub = g.paper_subdivide().unwrap();
            assert_eq!(sub.essential_count(), g.essential_count());
            assert_eq!(
                sub.essential_vertices(),
                g.essential_vertices(),
                "essential set survives with original names"
            );
            assert_eq!(sub.first_betti(), g.first_betti());
            let total: usize = sub
                .vertices()
                .map(|v| sub.valence(v).unwrap())
                .sum();
            assert_eq!(total, 2 * sub.edge_count());

            let ess = sub.essential_vertices();
            for v in &ess {
                sub.star_embedding(v).unwrap();
            }
            for (i, v) in ess.iter().enumerate() {
                for w in &ess[i + 1..] {
                    assert!(
                        sub.closed_stars_disjoint(v, w).unwrap(),
                        "stars of {v} and {w} overlap"
                    );
                }
            }
        }
    }

    #[test]
    fn abrams_subdivide_examples() {
        let c5 = library::cycle(5);
        let sub = c5.abrams_subdivide(2).unwrap();
        assert_eq!(sub.vertex_count(), 15);
        assert_eq!(sub.edge_count(), 15);
        assert_eq!(sub.first_betti(), 1);

        let edge = Graph::new(["a", "b"], [("e", "a", "b")]).unwrap();
        let sub = edge.abrams_subdivide(2).unwrap();
        assert_eq!(sub.vertex_count(), 4);
        assert_eq!(sub.edge_count(), 3);

        let h = library::h_graph();
        let sub = h.abrams_subdivide(4).unwrap();
        assert_eq!(sub.edge_count(), 25);
        assert_eq!(sub.essential_count(), 2);

        assert!(h.abrams_subdivide(0).is_err());
    }

    #[test]
    fn subdivision_names_are_deterministic() {
        let h = library::h_graph();
        let a = h.paper_subdivide().unwrap().to_json();
        let b = h.paper_subdivide().unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("e3.1") && a.contains("e3.s2"));

        // A vertex named like a generated piece is rejected rather than
        // silently merged.
        let trap = Graph::new(
            ["u", "w", "e.1", "x1", "x2", "y1", "y2"],
            [
                ("e", "u", "w"),
                ("f1", "u", "x1"),
                ("f2", "u", "x2"),
                ("g1", "w", "y1"),
                ("g2", "w", "y2"),
            ],
        )
        .unwrap();
        assert!(trap.paper_subdivide().is_err());
    }

    #[test]
    fn sufficiency_check() {
        let y = library::star(3);
        assert!(y.sufficiently_subdivided(2));

        let c5 = library::cycle(5);
        assert!(c5.sufficiently_subdivided(2));
        assert!(!c5.sufficiently_subdivided(5));
        assert!(c5.abrams_subdivide(5).unwrap().sufficiently_subdivided(5));

        let h = library::h_graph();
        assert!(!h.sufficiently_subdivided(4));
        assert!(h.abrams_subdivide(4).unwrap().sufficiently_subdivided(4));

        let loop_graph = Graph::new(["v"], [("l", "v", "v")]).unwrap();
        assert!(!loop_graph.sufficiently_subdivided(1));
        assert!(loop_graph
            .abrams_subdivide(1)
            .unwrap()
            .sufficiently_subdivided(1));
    }

    #[test]
    fn connectivity_and_betti() {
        let h = library::h_graph();
        assert!(h.is_connected());
        assert_eq!(h.first_betti(), 0);

        let k4 = library::complete(4);
        assert_eq!(k4.first_betti(), 3);

        let two = Graph::new(["a", "b"], [] as [(&str, &str, &str); 0]).unwrap();
        assert!(!two.is_connected());
        assert!(two.paper_subdivide().is_err());
        assert!(two.abrams_subdivide(2).is_err());
    }
}
