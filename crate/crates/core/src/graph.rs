//! Concrete Tanner graph shared by construction, decoding and simulation.
//!
//! The graph is immutable after construction. A variable node corresponds to a
//! column of the parity-check matrix and a check node to a row; an edge means
//! the bit participates in the parity equation. Every edge carries a stable
//! integer id (variable-major order) so decoder message arrays index by edge.

use crate::error::{Error, Result};

/// Bipartite graph of `n_var` variable nodes and `n_check` check nodes with
/// per-node layer labels (0 = top layer).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    n_var: usize,
    n_check: usize,
    /// Sorted check neighbours per variable.
    var_adj: Vec<Vec<usize>>,
    /// Sorted variable neighbours per check (transpose of `var_adj`).
    check_adj: Vec<Vec<usize>>,
    /// First edge id of each variable; edge ids are variable-major, so the
    /// edges of variable `v` are `var_edge_start[v] .. var_edge_start[v + 1]`.
    var_edge_start: Vec<usize>,
    /// Per check, the edge ids matching `check_adj` entries.
    check_edge_ids: Vec<Vec<usize>>,
    var_layer: Vec<usize>,
    check_layer: Vec<usize>,
}

impl TannerGraph {
    /// Builds a graph from per-variable adjacency lists with all nodes in
    /// layer 0. Rejects parallel edges and out-of-range indices.
    pub fn new(n_var: usize, n_check: usize, var_adj: Vec<Vec<usize>>) -> Result<Self> {
        let var_layer = vec![0; n_var];
        let check_layer = vec![0; n_check];
        Self::with_layers(n_var, n_check, var_adj, var_layer, check_layer)
    }

    /// Builds a graph with explicit per-node layer labels.
    pub fn with_layers(
        n_var: usize,
        n_check: usize,
        mut var_adj: Vec<Vec<usize>>,
        var_layer: Vec<usize>,
        check_layer: Vec<usize>,
    ) -> Result<Self> {
        if var_adj.len() != n_var {
            return Err(Error::InvalidGraph(format!(
                "{} adjacency lists for {} variables",
                var_adj.len(),
                n_var
            )));
        }
        if var_layer.len() != n_var || check_layer.len() != n_check {
            return Err(Error::InvalidGraph("layer label length mismatch".into()));
        }
        for (v, checks) in var_adj.iter_mut().enumerate() {
            checks.sort_unstable();
            for pair in checks.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::InvalidGraph(format!(
                        "parallel edge between variable {v} and check {}",
                        pair[0]
                    )));
                }
            }
            if let Some(&c) = checks.last() {
                if c >= n_check {
                    return Err(Error::InvalidGraph(format!(
                        "variable {v} references check {c} >= {n_check}"
                    )));
                }
            }
        }

        let mut var_edge_start = Vec::with_capacity(n_var + 1);
        var_edge_start.push(0);
        for checks in &var_adj {
            var_edge_start.push(var_edge_start.last().unwrap() + checks.len());
        }

        let mut check_adj = vec![Vec::new(); n_check];
        let mut check_edge_ids = vec![Vec::new(); n_check];
        for (v, checks) in var_adj.iter().enumerate() {
            for (slot, &c) in checks.iter().enumerate() {
                check_adj[c].push(v);
                check_edge_ids[c].push(var_edge_start[v] + slot);
            }
        }
        // Variables are visited in ascending order, so each check's neighbour
        // list is already sorted.

        Ok(Self {
            n_var,
            n_check,
            var_adj,
            check_adj,
            var_edge_start,
            check_edge_ids,
            var_layer,
            check_layer,
        })
    }

    pub fn n_var(&self) -> usize {
        self.n_var
    }

    pub fn n_check(&self) -> usize {
        self.n_check
    }

    pub fn n_edges(&self) -> usize {
        *self.var_edge_start.last().unwrap()
    }

    /// Check neighbours of variable `v`, sorted.
    pub fn var_neighbors(&self, v: usize) -> &[usize] {
        &self.var_adj[v]
    }

    /// Variable neighbours of check `c`, sorted.
    pub fn check_neighbors(&self, c: usize) -> &[usize] {
        &self.check_adj[c]
    }

    pub fn var_degree(&self, v: usize) -> usize {
        self.var_adj[v].len()
    }

    pub fn check_degree(&self, c: usize) -> usize {
        self.check_adj[c].len()
    }

    /// First edge id of variable `v`; its k-th neighbour uses edge id
    /// `var_edge_base(v) + k`.
    pub fn var_edge_base(&self, v: usize) -> usize {
        self.var_edge_start[v]
    }

    /// Edge ids of check `c`, aligned with [`Self::check_neighbors`].
    pub fn check_edge_ids(&self, c: usize) -> &[usize] {
        &self.check_edge_ids[c]
    }

    pub fn var_layer(&self, v: usize) -> usize {
        self.var_layer[v]
    }

    pub fn check_layer(&self, c: usize) -> usize {
        self.check_layer[c]
    }

    pub fn var_layers(&self) -> &[usize] {
        &self.var_layer
    }

    pub fn check_layers(&self) -> &[usize] {
        &self.check_layer
    }

    /// Number of layers (max label + 1 over both sides).
    pub fn num_layers(&self) -> usize {
        let v = self.var_layer.iter().copied().max().unwrap_or(0);
        let c = self.check_layer.iter().copied().max().unwrap_or(0);
        v.max(c) + 1
    }

    /// Largest variable and check degrees.
    pub fn max_degrees(&self) -> (usize, usize) {
        let dv = self.var_adj.iter().map(Vec::len).max().unwrap_or(0);
        let dc = self.check_adj.iter().map(Vec::len).max().unwrap_or(0);
        (dv, dc)
    }

    /// Parity of each check equation over the hard word: component `j` is the
    /// XOR of `word` over the neighbours of check `j`.
    pub fn syndrome(&self, word: &[u8]) -> Result<Vec<u8>> {
        if word.len() != self.n_var {
            return Err(Error::LengthMismatch {
                expected: self.n_var,
                got: word.len(),
            });
        }
        let mut syn = vec![0u8; self.n_check];
        for (c, vars) in self.check_adj.iter().enumerate() {
            let mut parity = 0u8;
            for &v in vars {
                parity ^= word[v] & 1;
            }
            syn[c] = parity;
        }
        Ok(syn)
    }

    /// True when the word satisfies every parity check.
    pub fn is_codeword(&self, word: &[u8]) -> bool {
        word.len() == self.n_var
            && self.check_adj.iter().all(|vars| {
                vars.iter().fold(0u8, |acc, &v| acc ^ (word[v] & 1)) == 0
            })
    }

    /// Length of the shortest cycle, or `None` when the graph is acyclic.
    ///
    /// BFS from every variable node; any cross edge seen at depth `d` closes a
    /// cycle through the root of length at most `2d + 2`. Every cycle in a
    /// bipartite graph passes through a variable node, so roots on one side
    /// suffice.
    pub fn girth(&self) -> Option<usize> {
        // Node encoding: variables 0..n_var, checks n_var..n_var+n_check.
        let total = self.n_var + self.n_check;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        let mut queue = std::collections::VecDeque::new();
        let mut best = usize::MAX;

        for root in 0..self.n_var {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(node) = queue.pop_front() {
                let d = dist[node];
                // Cycles through deeper nodes cannot beat the current best.
                if 2 * d + 1 >= best {
                    break;
                }
                let neighbors: &[usize] = if node < self.n_var {
                    &self.var_adj[node]
                } else {
                    &self.check_adj[node - self.n_var]
                };
                for &raw in neighbors {
                    let next = if node < self.n_var { raw + self.n_var } else { raw };
                    if next == parent[node] {
                        continue;
                    }
                    if dist[next] == usize::MAX {
                        dist[next] = d + 1;
                        parent[next] = node;
                        queue.push_back(next);
                    } else {
                        best = best.min(d + dist[next] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            None
        } else {
            debug_assert!(best % 2 == 0 && best >= 4);
            Some(best)
        }
    }

    /// Realized cross polynomial of the graph: entry `(i, j)` is the fraction
    /// of layer-`i` variable edges that land on layer-`j` checks. Rows are
    /// normalized per layer; errors on a graph with no edges.
    pub fn empirical_cross_rho(&self) -> Result<Vec<Vec<f64>>> {
        if self.n_edges() == 0 {
            return Err(Error::InvalidGraph(
                "cannot measure cross polynomial of an edgeless graph".into(),
            ));
        }
        let k = self.num_layers();
        let mut counts = vec![vec![0u64; k]; k];
        for (v, checks) in self.var_adj.iter().enumerate() {
            for &c in checks {
                counts[self.var_layer[v]][self.check_layer[c]] += 1;
            }
        }
        Ok(counts
            .into_iter()
            .map(|row| {
                let total: u64 = row.iter().sum();
                if total == 0 {
                    vec![0.0; k]
                } else {
                    row.into_iter().map(|c| c as f64 / total as f64).collect()
                }
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// 6 variables, 3 checks: a small generic fixture.
    fn toy_graph() -> TannerGraph {
        TannerGraph::new(
            6,
            3,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0],
                vec![1],
                vec![2],
            ],
        )
        .unwrap()
    }

    #[test]
    fn syndrome_of_zero_word_is_zero() {
        let g = toy_graph();
        assert_eq!(g.syndrome(&[0; 6]).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn syndrome_of_unit_word_marks_neighborhood() {
        let g = toy_graph();
        for v in 0..6 {
            let mut word = vec![0u8; 6];
            word[v] = 1;
            let syn = g.syndrome(&word).unwrap();
            for c in 0..3 {
                let expected = u8::from(g.var_neighbors(v).contains(&c));
                assert_eq!(syn[c], expected, "var {v}, check {c}");
            }
        }
    }

    #[test]
    fn syndrome_matches_brute_force_on_random_words() {
        let g = toy_graph();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let word: Vec<u8> = (0..6).map(|_| rng.gen_range(0..2)).collect();
            let syn = g.syndrome(&word).unwrap();
            for c in 0..3 {
                let mut parity = 0u8;
                for v in 0..6 {
                    if g.var_neighbors(v).contains(&c) {
                        parity ^= word[v];
                    }
                }
                assert_eq!(syn[c], parity);
            }
        }
    }

    #[test]
    fn syndrome_linearity() {
        let g = toy_graph();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let a: Vec<u8> = (0..6).map(|_| rng.gen_range(0..2)).collect();
            let b: Vec<u8> = (0..6).map(|_| rng.gen_range(0..2)).collect();
            let xor: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
            let sa = g.syndrome(&a).unwrap();
            let sb = g.syndrome(&b).unwrap();
            let sx = g.syndrome(&xor).unwrap();
            let combined: Vec<u8> = sa.iter().zip(&sb).map(|(x, y)| x ^ y).collect();
            assert_eq!(sx, combined);
        }
    }

    #[test]
    fn syndrome_rejects_wrong_length() {
        assert!(matches!(
            toy_graph().syndrome(&[0; 5]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn girth_of_tree_is_none() {
        // A star: one check connected to three variables.
        let g = TannerGraph::new(3, 1, vec![vec![0], vec![0], vec![0]]).unwrap();
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn girth_of_complete_bipartite_2x2_is_4() {
        let g = TannerGraph::new(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn girth_of_six_cycle_is_6() {
        // v0-c0-v1-c1-v2-c2-v0.
        let g = TannerGraph::new(3, 3, vec![vec![0, 2], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn parallel_edges_rejected() {
        assert!(matches!(
            TannerGraph::new(1, 2, vec![vec![0, 0]]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn out_of_range_check_rejected() {
        assert!(TannerGraph::new(1, 1, vec![vec![1]]).is_err());
    }

    #[test]
    fn edge_ids_are_consistent_across_views() {
        let g = toy_graph();
        for c in 0..g.n_check() {
            for (slot, &v) in g.check_neighbors(c).iter().enumerate() {
                let edge = g.check_edge_ids(c)[slot];
                let pos = g.var_neighbors(v).iter().position(|&cc| cc == c).unwrap();
                assert_eq!(edge, g.var_edge_base(v) + pos);
            }
        }
    }

    #[test]
    fn empirical_cross_rho_single_class() {
        // Degree-3 variables all connected to degree-6 checks, one layer.
        let g = TannerGraph::new(
            4,
            2,
            vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(g.empirical_cross_rho().unwrap(), vec![vec![1.0]]);
    }

    #[test]
    fn empirical_cross_rho_rejects_edgeless() {
        let g = TannerGraph::new(2, 1, vec![vec![], vec![]]).unwrap();
        assert!(g.empirical_cross_rho().is_err());
    }

    #[test]
    fn empirical_cross_rho_two_layers() {
        let g = TannerGraph::with_layers(
            2,
            2,
            vec![vec![0, 1], vec![1]],
            vec![0, 1],
            vec![0, 1],
        )
        .unwrap();
        let rho = g.empirical_cross_rho().unwrap();
        assert_eq!(rho[0], vec![0.5, 0.5]);
        assert_eq!(rho[1], vec![0.0, 1.0]);
    }
}
