use std::fmt::Write as _;

use perm_core::KSubset;

use crate::Positroid;

/// The induced subgraph of the Johnson graph `J(k,n)` on the bases of a
/// matroid: vertices are bases, edges join bases meeting in `k−1` elements.
///
/// When oriented, each edge `{I, J}` with `J = I \ {i} ∪ {j}` and `i < j` is
/// directed `I → J`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JohnsonGraph {
    vertices: Vec<KSubset>,
    /// Index pairs into `vertices`; for the oriented graph the edge is
    /// directed from `.0` to `.1`, otherwise `.0 < .1`.
    edges: Vec<(usize, usize)>,
    oriented: bool,
}

impl JohnsonGraph {
    pub fn from_positroid(m: &Positroid, oriented: bool) -> Self {
        let vertices = m.bases();
        let mut edges = Vec::new();
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                if vertices[a].intersection_size(&vertices[b]) != m.k().saturating_sub(1)
                    || m.k() == 0
                {
                    continue;
                }
                if !oriented {
                    edges.push((a, b));
                    continue;
                }
                // Exchange pair: i leaves one basis, j enters the other.
                let i = *vertices[a]
                    .elements()
                    .iter()
                    .find(|&&e| !vertices[b].contains(e))
                    .unwrap();
                let j = *vertices[b]
                    .elements()
                    .iter()
                    .find(|&&e| !vertices[a].contains(e))
                    .unwrap();
                if i < j {
                    edges.push((a, b));
                } else {
                    edges.push((b, a));
                }
            }
        }
        Self { vertices, edges, oriented }
    }

    pub fn vertices(&self) -> &[KSubset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn oriented(&self) -> bool {
        self.oriented
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.sort_unstable();
        deg
    }

    /// True iff every vertex has the same degree (edge directions ignored).
    pub fn is_regular(&self) -> bool {
        let deg = self.degree_sequence();
        deg.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Serializes the graph in DOT format with `{i,j,…}` vertex labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let (kind, arrow) = if self.oriented { ("digraph", "->") } else { ("graph", "--") };
        writeln!(out, "{kind} johnson {{").unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for &(a, b) in &self.edges {
            writeln!(out, "  \"{}\" {arrow} \"{}\";", self.vertices[a], self.vertices[b]).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
