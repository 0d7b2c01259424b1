//! Commutation graphs: an edge `{x,y}` means the generators `x` and `y`
//! commute.

use std::collections::BTreeSet;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationGraph {
    alphabet: Alphabet,
    // Each edge stored once as (larger, smaller).
    edges: BTreeSet<(Letter, Letter)>,
    adjacency: Vec<u64>,
}

impl CommutationGraph {
    /// Builds a graph from letter pairs. Duplicate edges collapse.
    pub fn new<I>(alphabet: Alphabet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Letter, Letter)>,
    {
        let n = alphabet.len();
        let mut g = CommutationGraph {
            adjacency: vec![0; n],
            edges: BTreeSet::new(),
            alphabet,
        };
        for (a, b) in edges {
            for l in [a, b] {
                if l as usize >= n {
                    return Err(Error::LetterOutOfRange(l));
                }
            }
            if a == b {
                return Err(Error::LoopEdge(g.alphabet.name(a).to_string()));
            }
            g.edges.insert((a.max(b), a.min(b)));
            if n <= 64 {
                g.adjacency[a as usize] |= 1 << b;
                g.adjacency[b as usize] |= 1 << a;
            }
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        CommutationGraph::new(Alphabet::numbered(n), []).expect("valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n as Letter).flat_map(|a| (0..a).map(move |b| (a, b)));
        CommutationGraph::new(Alphabet::numbered(n), edges).expect("valid")
    }

    /// The path `x1 - x2 - … - xn`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n as Letter).map(|a| (a, a - 1));
        CommutationGraph::new(Alphabet::numbered(n), edges).expect("valid")
    }

    /// Graph on `x1 < … < xn` whose edges are the bits of `mask`, in the
    /// order (x1,x2), (x1,x3), …, (x1,xn), (x2,x3), ….
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let pairs = all_pairs(n);
        let edges = pairs
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p);
        CommutationGraph::new(Alphabet::numbered(n), edges).expect("valid")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphabet.is_empty()
    }

    /// Edges as `(larger, smaller)` letter pairs, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, a: Letter, b: Letter) -> bool {
        if self.adjacency.len() <= 64 {
            self.adjacency[a as usize] >> b & 1 == 1
        } else {
            self.edges.contains(&(a.max(b), a.min(b)))
        }
    }

    /// True if `b` is adjacent to every letter of `letters`.
    pub fn adjacent_to_all(&self, b: Letter, letters: &[Letter]) -> bool {
        letters.iter().all(|&y| self.adjacent(b, y))
    }

    /// `c_0, …, c_max_k`: the number of k-vertex cliques.
    pub fn clique_counts(&self, max_k: usize) -> Vec<u64> {
        let mut counts = vec![0u64; max_k + 1];
        counts[0] = 1;
        let n = self.len();
        let mut stack: Vec<Letter> = Vec::new();
        self.extend_cliques(0, n, &mut stack, &mut counts);
        counts
    }

    fn extend_cliques(&self, from: usize, n: usize, clique: &mut Vec<Letter>, counts: &mut [u64]) {
        if clique.len() + 1 >= counts.len() {
            return;
        }
        for v in from..n {
            let v = v as Letter;
            if self.adjacent_to_all(v, clique) {
                clique.push(v);
                counts[clique.len()] += 1;
                self.extend_cliques(v as usize + 1, n, clique, counts);
                clique.pop();
            }
        }
    }

    /// Canonical JSON encoding; edges listed smaller vertex first, in
    /// ascending order.
    pub fn to_json(&self) -> String {
        let vertices: Vec<Value> = self.alphabet.names().iter().cloned().map(Value::String).collect();
        let mut edges: Vec<(Letter, Letter)> = self.edges.iter().map(|&(a, b)| (b, a)).collect();
        edges.sort();
        let edges: Vec<Value> = edges
            .into_iter()
            .map(|(a, b)| {
                Value::Array(vec![
                    Value::String(self.alphabet.name(a).to_string()),
                    Value::String(self.alphabet.name(b).to_string()),
                ])
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("vertices".into(), Value::Array(vertices));
        obj.insert("edges".into(), Value::Array(edges));
        Value::Object(obj).to_string()
    }
}

fn all_pairs(n: usize) -> Vec<(Letter, Letter)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((a as Letter, b as Letter));
        }
    }
    out
}

/// Parses `{"vertices": [...], "edges": [[a, b], ...]}`.
///
/// Vertex order is the letter order. No other keys are accepted.
pub fn parse_graph(text: &[u8]) -> Result<CommutationGraph> {
    let value: Value =
        serde_json::from_slice(text).map_err(|e| Error::GraphFormat(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::GraphFormat("top level must be an object".into()))?;
    if let Some(key) = obj.keys().find(|k| *k != "vertices" && *k != "edges") {
        return Err(Error::GraphFormat(format!("unexpected key `{key}`")));
    }
    let vertices = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::GraphFormat("`vertices` must be an array".into()))?;
    let names = vertices
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::GraphFormat("vertex names must be strings".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let alphabet = Alphabet::new(names)?;
    let edges = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::GraphFormat("`edges` must be an array".into()))?;
    let mut pairs = Vec::with_capacity(edges.len());
    for e in edges {
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::GraphFormat("each edge must be a 2-element array".into()))?;
        let mut ends = [0 as Letter; 2];
        for (slot, v) in ends.iter_mut().zip(pair) {
            let name = v
                .as_str()
                .ok_or_else(|| Error::GraphFormat("edge endpoints must be strings".into()))?;
            *slot = alphabet
                .letter(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
        }
        if ends[0] == ends[1] {
            return Err(Error::LoopEdge(alphabet.name(ends[0]).to_string()));
        }
        pairs.push((ends[0], ends[1]));
    }
    CommutationGraph::new(alphabet, pairs)
}
