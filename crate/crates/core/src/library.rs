//! Named example graphs used in tests, documentation, and the CLI docs.
//!
//! All constructors produce connected graphs with default edge orders, so
//! star arms follow edge declaration order.

use crate::graph::Graph;

/// Star with `n` arms: center `c`, leaves `a1..an`, edges `e1..en`. The
/// 3-arm star is the Y-graph.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1, "a star needs at least one arm");
    let mut vertices = vec!["c".to_string()];
    let mut edges = Vec::new();
    for i in 1..=n {
        vertices.push(format!("a{i}"));
        edges.push((format!("e{i}"), "c".to_string(), format!("a{i}")));
    }
    Graph::with_orders(vertices, edges, Vec::new()).expect("star graph is valid")
}

/// The Y-graph: center `c`, leaves `a1,a2,a3`.
pub fn y_graph() -> Graph {
    star(3)
}

/// The H-graph: essential vertices `u` and `w` joined by edge `e3`, leaves
/// `a1,a2` at `u` (edges `e1,e2`) and `b1,b2` at `w` (edges `e4,e5`).
pub fn h_graph() -> Graph {
    Graph::new(
        ["u", "w", "a1", "a2", "b1", "b2"],
        [
            ("e1", "u", "a1"),
            ("e2", "u", "a2"),
            ("e3", "u", "w"),
            ("e4", "w", "b1"),
            ("e5", "w", "b2"),
        ],
    )
    .expect("H-graph is valid")
}

/// The theta multigraph with `n` parallel edges `e1..en` joining `u` and
/// `w`; essential at both ends once n ≥ 3.
pub fn theta_graph(n: usize) -> Graph {
    assert!(n >= 2, "a theta graph needs at least two parallel edges");
    let edges: Vec<(String, String, String)> = (1..=n)
        .map(|i| (format!("e{i}"), "u".to_string(), "w".to_string()))
        .collect();
    Graph::with_orders(vec!["u".into(), "w".into()], edges, Vec::new())
        .expect("theta graph is valid")
}

/// Cycle on `n` vertices `v1..vn` with edges `e1..en`; `n = 1` is a single
/// loop.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 1, "a cycle needs at least one vertex");
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..=n)
        .map(|i| {
            let next = if i == n { 1 } else { i + 1 };
            (format!("e{i}"), format!("v{i}"), format!("v{next}"))
        })
        .collect();
    Graph::with_orders(vertices, edges, Vec::new()).expect("cycle graph is valid")
}

/// Path on `n` vertices `v1..vn` with `n−1` edges.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "a path needs at least one vertex");
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i + 1)))
        .collect();
    Graph::with_orders(vertices, edges, Vec::new()).expect("path graph is valid")
}

/// Complete graph on vertices `v1..vn`, edge `e{i}-{j}` for i < j.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "a complete graph needs at least one vertex");
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((format!("e{i}-{j}"), format!("v{i}"), format!("v{j}")));
        }
    }
    Graph::with_orders(vertices, edges, Vec::new()).expect("complete graph is valid")
}

/// Complete bipartite graph on parts `u1..um` and `w1..wn`, edge
/// `e{i}-{j}` joining `ui` to `wj`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    assert!(m >= 1 && n >= 1, "both parts need at least one vertex");
    let mut vertices: Vec<String> = (1..=m).map(|i| format!("u{i}")).collect();
    vertices.extend((1..=n).map(|j| format!("w{j}")));
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            edges.push((format!("e{i}-{j}"), format!("u{i}"), format!("w{j}")));
        }
    }
    Graph::with_orders(vertices, edges, Vec::new()).expect("complete bipartite graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let y = y_graph();
        assert_eq!((y.vertex_count(), y.edge_count()), (4, 3));
        let h = h_graph();
        assert_eq!((h.vertex_count(), h.edge_count()), (6, 5));
        let t = theta_graph(3);
        assert_eq!((t.vertex_count(), t.edge_count()), (2, 3));
        let k5 = complete(5);
        assert_eq!((k5.vertex_count(), k5.edge_count()), (5, 10));
        let k33 = complete_bipartite(3, 3);
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        assert_eq!(k33.essential_count(), 6);
        let p4 = path(4);
        assert_eq!((p4.vertex_count(), p4.edge_count()), (4, 3));
        assert_eq!(p4.essential_count(), 0);
    }

    #[test]
    fn all_connected() {
        for g in [
            y_graph(),
            h_graph(),
            theta_graph(2),
            cycle(1),
            cycle(5),
            path(2),
            complete(4),
            complete_bipartite(3, 3),
        ] {
            assert!(g.is_connected());
        }
    }
}
