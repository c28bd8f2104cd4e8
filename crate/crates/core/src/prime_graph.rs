//! Gruenberg–Kegel prime graphs built from element-order spectra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::factored::factor_integer;

/// Prime graph of a spectrum: vertices are the primes dividing some element
/// order, and `{p, q}` is an edge iff `pq` is an element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
    /// The component containing 2 comes first; the rest are ordered by their
    /// smallest prime.
    components: Vec<BTreeSet<u64>>,
}

impl PrimeGraph {
    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    /// Edges as `(p, q)` with `p < q`.
    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn components(&self) -> &[BTreeSet<u64>] {
        &self.components
    }

    /// Number of connected components, `t`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    /// Whether `{p}` is a component on its own.
    pub fn is_isolated(&self, p: u64) -> Result<bool> {
        if !self.vertices.contains(&p) {
            return Err(Error::domain(format!("{p} is not a vertex of the prime graph")));
        }
        Ok(self.components.iter().any(|c| c.len() == 1 && c.contains(&p)))
    }

    /// Graphviz rendering with one cluster per component.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
        for (i, comp) in self.components.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{} {{", i + 1);
            let _ = writeln!(out, "    label=\"pi_{}\";", i + 1);
            for p in comp {
                let _ = writeln!(out, "    {p};");
            }
            let _ = writeln!(out, "  }}");
        }
        for (p, q) in &self.edges {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the prime graph of the exact spectrum `pi_e`.
pub fn build_prime_graph(pi_e: &BTreeSet<u64>) -> Result<PrimeGraph> {
    if pi_e.is_empty() {
        return Err(Error::domain("the spectrum is empty"));
    }
    if pi_e.contains(&0) {
        return Err(Error::domain("0 is not an element order"));
    }
    let mut vertices = BTreeSet::new();
    for &k in pi_e {
        vertices.extend(factor_integer(k as u128)?.primes().map(|p| p as u64));
    }
    let list: Vec<u64> = vertices.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for (i, &p) in list.iter().enumerate() {
        for &q in &list[i + 1..] {
            if p.checked_mul(q).is_some_and(|pq| pi_e.contains(&pq)) {
                edges.insert((p, q));
            }
        }
    }

    let index: BTreeMap<u64, usize> = list.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..list.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(p, q) in &edges {
        let (a, b) = (find(&mut parent, index[&p]), find(&mut parent, index[&q]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut parts: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for (i, &p) in list.iter().enumerate() {
        let root = find(&mut parent, i);
        parts.entry(root).or_default().insert(p);
    }
    // Roots are the smallest index in each part, so 2 (if present) leads.
    let components = parts.into_values().collect();
    Ok(PrimeGraph {
        vertices,
        edges,
        components,
    })
}
