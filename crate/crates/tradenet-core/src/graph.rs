//! Construction and storage of the participant trading network.
//!
//! A node is a participant ID; an undirected edge links two participants
//! that appear together in at least one trade record, and the edge weight
//! counts how many records the pair shares. The graph is simple: self
//! matches never reach the builder (ingest drops them) and multiplicity is
//! carried in the weight, never in parallel edges.
//!
//! Networks are built in a mutable hash-map form and finalized into a
//! compact CSR layout (sorted neighbor slices) that downstream traversals
//! iterate cache-friendly at millions of edges. `extend` reopens the
//! mutable form, applies new records, and re-finalizes.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::TradeRecord;

/// Dense node index.
pub type NodeId = u32;

/// Classification of how a record batch changed the network.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GraphDelta {
    /// Participants seen for the first time.
    pub new_nodes: u64,
    /// Distinct pairs connected for the first time.
    pub new_edges: u64,
    /// Records that incremented the weight of an existing edge.
    pub strengthened_edges: u64,
}

/// Mutable accumulation form of the network.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    ids: Vec<String>,
    index: HashMap<String, NodeId>,
    // canonical key: (min(u,v) << 32) | max(u,v)
    edges: HashMap<u64, u32>,
    total_weight: u64,
}

#[inline]
fn edge_key(u: NodeId, v: NodeId) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    ((a as u64) << 32) | b as u64
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register a participant without any edge; used by graph generators.
    pub fn ensure_node(&mut self, id: &str) -> NodeId {
        if let Some(&ix) = self.index.get(id) {
            return ix;
        }
        let ix = self.ids.len() as NodeId;
        self.ids.push(id.to_string());
        self.index.insert(id.to_string(), ix);
        ix
    }

    /// Record one co-trade between two distinct participants, updating the
    /// delta counters. A self pair is ignored (ingest guarantees none).
    pub fn add_pair(&mut self, buyer: &str, seller: &str, delta: &mut GraphDelta) {
        debug_assert_ne!(buyer, seller, "self matches must be dropped upstream");
        if buyer == seller {
            return;
        }
        let before = self.ids.len();
        let u = self.ensure_node(buyer);
        let v = self.ensure_node(seller);
        delta.new_nodes += (self.ids.len() - before) as u64;
        self.total_weight += 1;
        match self.edges.entry(edge_key(u, v)) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += 1;
                delta.strengthened_edges += 1;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(1);
                delta.new_edges += 1;
            }
        }
    }

    pub fn add_record(&mut self, record: &TradeRecord, delta: &mut GraphDelta) {
        self.add_pair(&record.buyer, &record.seller, delta);
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Freeze into the compact traversal form.
    pub fn finalize(self) -> TradingNetwork {
        let n = self.ids.len();
        let mut degree = vec![0usize; n];
        for key in self.edges.keys() {
            degree[(key >> 32) as usize] += 1;
            degree[(key & 0xffff_ffff) as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut neighbors = vec![0 as NodeId; acc];
        let mut weights = vec![0u32; acc];
        let mut cursor = offsets[..n].to_vec();
        for (key, w) in &self.edges {
            let u = (key >> 32) as usize;
            let v = (key & 0xffff_ffff) as usize;
            neighbors[cursor[u]] = v as NodeId;
            weights[cursor[u]] = *w;
            cursor[u] += 1;
            neighbors[cursor[v]] = u as NodeId;
            weights[cursor[v]] = *w;
            cursor[v] += 1;
        }
        // sort each adjacency slice by neighbor id, dragging weights along
        let mut scratch: Vec<(NodeId, u32)> = Vec::new();
        for v in 0..n {
            let (s, e) = (offsets[v], offsets[v + 1]);
            if e - s < 2 {
                continue;
            }
            scratch.clear();
            scratch.extend(neighbors[s..e].iter().copied().zip(weights[s..e].iter().copied()));
            scratch.sort_unstable();
            for (i, (nb, w)) in scratch.iter().enumerate() {
                neighbors[s + i] = *nb;
                weights[s + i] = *w;
            }
        }
        TradingNetwork {
            ids: self.ids,
            index: self.index,
            offsets,
            neighbors,
            weights,
            total_weight: self.total_weight,
        }
    }
}

/// Finalized undirected weighted simple graph over participants.
///
/// Immutable once built; safe to share across parallel readers.
#[derive(Debug, Clone)]
pub struct TradingNetwork {
    ids: Vec<String>,
    index: HashMap<String, NodeId>,
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
    weights: Vec<u32>,
    total_weight: u64,
}

impl TradingNetwork {
    /// Build from a cleaned record sequence. Empty input yields the empty
    /// network (N = 0, E = 0), which is valid.
    pub fn build<I>(records: I) -> TradingNetwork
    where
        I: IntoIterator<Item = TradeRecord>,
    {
        let (net, _) = TradingNetwork::default().extend(records);
        net
    }

    /// Apply additional records; equivalent to rebuilding from the
    /// concatenation of the original and new record sequences.
    pub fn extend<I>(self, records: I) -> (TradingNetwork, GraphDelta)
    where
        I: IntoIterator<Item = TradeRecord>,
    {
        let mut builder = self.into_builder();
        let mut delta = GraphDelta::default();
        for r in records {
            builder.add_record(&r, &mut delta);
        }
        (builder.finalize(), delta)
    }

    /// Reopen the mutable form, preserving node indices and edge weights.
    pub fn into_builder(self) -> GraphBuilder {
        let mut edges = HashMap::with_capacity(self.edge_count());
        for u in 0..self.node_count() as NodeId {
            let (s, e) = (self.offsets[u as usize], self.offsets[u as usize + 1]);
            for i in s..e {
                let v = self.neighbors[i];
                if u < v {
                    edges.insert(edge_key(u, v), self.weights[i]);
                }
            }
        }
        GraphBuilder {
            ids: self.ids,
            index: self.index,
            edges,
            total_weight: self.total_weight,
        }
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Total weight W: the number of records that contributed an edge.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn mean_degree(&self) -> f64 {
        if self.ids.is_empty() {
            0.0
        } else {
            self.neighbors.len() as f64 / self.ids.len() as f64
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count())
            .map(|v| self.offsets[v + 1] - self.offsets[v])
            .max()
            .unwrap_or(0)
    }

    /// Neighbor slice of `v`, sorted ascending. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Weight slice parallel to [`Self::neighbors`].
    #[inline]
    pub fn edge_weights(&self, v: NodeId) -> &[u32] {
        &self.weights[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    fn check_node(&self, v: NodeId) -> Result<()> {
        if (v as usize) < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v as usize, n: self.node_count() })
        }
    }

    /// Number of distinct counterparties of `v`.
    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.offsets[v as usize + 1] - self.offsets[v as usize])
    }

    /// Total weight of edges incident to `v` (co-trade count).
    pub fn strength(&self, v: NodeId) -> Result<u64> {
        self.check_node(v)?;
        Ok(self.edge_weights(v).iter().map(|&w| w as u64).sum())
    }

    pub fn id(&self, v: NodeId) -> &str {
        &self.ids[v as usize]
    }

    pub fn node_index(&self, id: &str) -> Option<NodeId> {
        self.index.get(id).copied()
    }

    /// Iterate distinct edges once as (u, v, weight) with u < v.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, u32)> + '_ {
        (0..self.node_count() as NodeId).flat_map(move |u| {
            let (s, e) = (self.offsets[u as usize], self.offsets[u as usize + 1]);
            (s..e).filter_map(move |i| {
                let v = self.neighbors[i];
                (u < v).then_some((u, v, self.weights[i]))
            })
        })
    }

    /// Connected-component label per node, labels dense in discovery order
    /// (node 0 scanning upward), plus component sizes.
    pub fn components(&self) -> (Vec<u32>, Vec<usize>) {
        let n = self.node_count();
        let mut label = vec![u32::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if label[start] != u32::MAX {
                continue;
            }
            let comp = sizes.len() as u32;
            let mut size = 0usize;
            label[start] = comp;
            queue.push(start as NodeId);
            while let Some(v) = queue.pop() {
                size += 1;
                for &w in self.neighbors(v) {
                    if label[w as usize] == u32::MAX {
                        label[w as usize] = comp;
                        queue.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        (label, sizes)
    }

    /// Induced subgraph on the largest connected component and the fraction
    /// of nodes it covers. Ties go to the component containing the smallest
    /// node index, which is the first one discovered.
    pub fn largest_component(&self) -> (TradingNetwork, f64) {
        let n = self.node_count();
        if n == 0 {
            return (self.clone(), 1.0);
        }
        let (label, sizes) = self.components();
        let best = sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(i, _)| i as u32)
            .unwrap();
        let coverage = sizes[best as usize] as f64 / n as f64;
        if sizes[best as usize] == n {
            return (self.clone(), 1.0);
        }
        // remap kept nodes in increasing old-index order
        let mut remap = vec![u32::MAX; n];
        let mut ids = Vec::with_capacity(sizes[best as usize]);
        let mut index = HashMap::with_capacity(sizes[best as usize]);
        for v in 0..n {
            if label[v] == best {
                remap[v] = ids.len() as u32;
                index.insert(self.ids[v].clone(), ids.len() as u32);
                ids.push(self.ids[v].clone());
            }
        }
        let m = ids.len();
        let mut offsets = Vec::with_capacity(m + 1);
        offsets.push(0usize);
        let mut neighbors = Vec::new();
        let mut weights = Vec::new();
        let mut total_weight = 0u64;
        for v in 0..n {
            if label[v] != best {
                continue;
            }
            let (s, e) = (self.offsets[v], self.offsets[v + 1]);
            for i in s..e {
                let w = self.neighbors[i] as usize;
                neighbors.push(remap[w]);
                weights.push(self.weights[i]);
                total_weight += self.weights[i] as u64;
            }
            offsets.push(neighbors.len());
        }
        (
            TradingNetwork {
                ids,
                index,
                offsets,
                neighbors,
                weights,
                total_weight: total_weight / 2,
            },
            coverage,
        )
    }

    /// Serialize as a JSON header line followed by `u_id v_id weight` rows,
    /// one distinct edge each, sorted with u_id < v_id lexicographically.
    /// The output is canonical: load + save round-trips bit-exactly.
    pub fn save<W: Write>(&self, mut w: W) -> Result<()> {
        let mut isolated: Vec<&str> = (0..self.node_count() as NodeId)
            .filter(|&v| self.neighbors(v).is_empty())
            .map(|v| self.id(v))
            .collect();
        isolated.sort_unstable();
        let header = NetworkHeader {
            n: self.node_count() as u64,
            e: self.edge_count() as u64,
            w: self.total_weight,
            isolated: if isolated.is_empty() {
                None
            } else {
                Some(isolated.iter().map(|s| s.to_string()).collect())
            },
        };
        let mut line = serde_json::to_string(&header).expect("header serialization");
        line.push('\n');
        w.write_all(line.as_bytes())?;
        let mut rows: Vec<(&str, &str, u32)> = self
            .edges()
            .map(|(u, v, wt)| {
                let (a, b) = (self.id(u), self.id(v));
                if a < b {
                    (a, b, wt)
                } else {
                    (b, a, wt)
                }
            })
            .collect();
        rows.sort_unstable();
        let mut buf = String::new();
        for (a, b, wt) in rows {
            buf.clear();
            buf.push_str(a);
            buf.push(' ');
            buf.push_str(b);
            buf.push(' ');
            buf.push_str(&wt.to_string());
            buf.push('\n');
            w.write_all(buf.as_bytes())?;
        }
        Ok(())
    }

    pub fn save_to_path<P: AsRef<std::path::Path>>(&self, path: P) -> Result<()> {
        let f = std::fs::File::create(path)?;
        let mut w = std::io::BufWriter::new(f);
        self.save(&mut w)?;
        w.flush()?;
        Ok(())
    }

    /// Load a network serialized by [`Self::save`].
    pub fn load<R: BufRead>(mut r: R) -> Result<TradingNetwork> {
        let mut header_line = String::new();
        if r.read_line(&mut header_line)? == 0 {
            return Err(Error::Format("empty network file".into()));
        }
        let header: NetworkHeader = serde_json::from_str(header_line.trim_end())
            .map_err(|e| Error::Format(format!("bad network header: {e}")))?;
        let mut builder = GraphBuilder::new();
        let mut line = String::new();
        let mut edge_rows = 0u64;
        loop {
            line.clear();
            if r.read_line(&mut line)? == 0 {
                break;
            }
            let row = line.trim_end();
            if row.is_empty() {
                continue;
            }
            let mut parts = row.split(' ');
            let (u, v, w) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some(u), Some(v), Some(w), None) => (u, v, w),
                _ => return Err(Error::Format(format!("bad edge row: `{row}`"))),
            };
            let weight: u32 = w
                .parse()
                .map_err(|_| Error::Format(format!("bad edge weight in `{row}`")))?;
            if weight == 0 || u == v {
                return Err(Error::Format(format!("invalid edge `{row}`")));
            }
            let a = builder.ensure_node(u);
            let b = builder.ensure_node(v);
            if builder.edges.insert(edge_key(a, b), weight).is_some() {
                return Err(Error::Format(format!("duplicate edge `{row}`")));
            }
            builder.total_weight += weight as u64;
            edge_rows += 1;
        }
        if let Some(isolated) = &header.isolated {
            for id in isolated {
                builder.ensure_node(id);
            }
        }
        if edge_rows != header.e
            || builder.node_count() as u64 != header.n
            || builder.total_weight != header.w
        {
            return Err(Error::Format(format!(
                "header mismatch: stated N={} E={} W={}, file has N={} E={} W={}",
                header.n,
                header.e,
                header.w,
                builder.node_count(),
                edge_rows,
                builder.total_weight
            )));
        }
        Ok(builder.finalize())
    }

    pub fn load_from_path<P: AsRef<std::path::Path>>(path: P) -> Result<TradingNetwork> {
        let f = std::fs::File::open(path)?;
        TradingNetwork::load(std::io::BufReader::new(f))
    }
}

impl Default for TradingNetwork {
    fn default() -> Self {
        GraphBuilder::new().finalize()
    }
}

#[derive(Serialize, Deserialize)]
struct NetworkHeader {
    #[serde(rename = "N")]
    n: u64,
    #[serde(rename = "E")]
    e: u64,
    #[serde(rename = "W")]
    w: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    isolated: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn rec(buyer: &str, seller: &str) -> TradeRecord {
        TradeRecord {
            seq: 0,
            timestamp_ms: 0,
            commodity: "cu".into(),
            buyer: buyer.into(),
            seller: seller.into(),
            volume: 1,
            price: 1,
        }
    }

    fn build_pairs(pairs: &[(&str, &str)]) -> TradingNetwork {
        TradingNetwork::build(pairs.iter().map(|(b, s)| rec(b, s)))
    }

    #[test]
    fn build_counts_nodes_edges_weights() {
        let net = build_pairs(&[("A", "B"), ("A", "B"), ("A", "C")]);
        assert_eq!(net.node_count(), 3);
        assert_eq!(net.edge_count(), 2);
        assert_eq!(net.total_weight(), 3);
        let a = net.node_index("A").unwrap();
        let b = net.node_index("B").unwrap();
        let c = net.node_index("C").unwrap();
        let weight = |u: NodeId, v: NodeId| -> u32 {
            let pos = net.neighbors(u).iter().position(|&x| x == v).unwrap();
            net.edge_weights(u)[pos]
        };
        assert_eq!(weight(a, b), 2);
        assert_eq!(weight(b, a), 2);
        assert_eq!(weight(a, c), 1);
    }

    #[test]
    fn empty_input_is_a_valid_empty_network() {
        let net = TradingNetwork::build(std::iter::empty());
        assert_eq!(net.node_count(), 0);
        assert_eq!(net.edge_count(), 0);
        assert_eq!(net.total_weight(), 0);
    }

    #[test]
    fn degree_and_strength() {
        let net = build_pairs(&[("A", "B"), ("A", "B"), ("A", "C")]);
        let a = net.node_index("A").unwrap();
        let b = net.node_index("B").unwrap();
        assert_eq!(net.degree(a).unwrap(), 2);
        assert_eq!(net.strength(a).unwrap(), 3);
        assert_eq!(net.degree(b).unwrap(), 1);
        assert_eq!(net.strength(b).unwrap(), 2);
        assert!(matches!(
            net.degree(99),
            Err(Error::NodeOutOfRange { node: 99, n: 3 })
        ));
    }

    #[test]
    fn isolated_pair_has_unit_degree_and_strength() {
        let net = build_pairs(&[("X", "Y")]);
        for v in 0..2 {
            assert_eq!(net.degree(v).unwrap(), 1);
            assert_eq!(net.strength(v).unwrap(), 1);
        }
    }

    #[test]
    fn handshake_identities_on_random_input() {
        use rand::Rng;
        let mut rng = crate::math::stream_rng(11, 0);
        let ids: Vec<String> = (0..50).map(|i| format!("p{i}")).collect();
        let mut recs = Vec::new();
        for _ in 0..1000 {
            let b = rng.gen_range(0..50);
            let mut s = rng.gen_range(0..50);
            while s == b {
                s = rng.gen_range(0..50);
            }
            recs.push(rec(&ids[b], &ids[s]));
        }
        // independent unordered-pair multiset oracle
        let mut oracle: HashMap<(String, String), u64> = HashMap::new();
        for r in &recs {
            let key = if r.buyer < r.seller {
                (r.buyer.clone(), r.seller.clone())
            } else {
                (r.seller.clone(), r.buyer.clone())
            };
            *oracle.entry(key).or_default() += 1;
        }
        let net = TradingNetwork::build(recs.clone());
        assert_eq!(net.edge_count(), oracle.len());
        assert_eq!(net.total_weight(), 1000);
        for (u, v, w) in net.edges() {
            let (a, b) = (net.id(u).to_string(), net.id(v).to_string());
            let key = if a < b { (a, b) } else { (b, a) };
            assert_eq!(oracle[&key], w as u64);
        }
        let deg_sum: usize = (0..net.node_count() as NodeId)
            .map(|v| net.degree(v).unwrap())
            .sum();
        let str_sum: u64 = (0..net.node_count() as NodeId)
            .map(|v| net.strength(v).unwrap())
            .sum();
        assert_eq!(deg_sum, 2 * net.edge_count());
        assert_eq!(str_sum, 2 * net.total_weight());
    }

    #[test]
    fn extend_matches_full_rebuild() {
        let first = [("A", "B"), ("C", "D"), ("A", "C")];
        let second = [("A", "B"), ("E", "A"), ("E", "F")];
        let (extended, delta) = build_pairs(&first).extend(second.iter().map(|(b, s)| rec(b, s)));
        let all: Vec<_> = first.iter().chain(second.iter()).map(|(b, s)| rec(b, s)).collect();
        let rebuilt = TradingNetwork::build(all);
        assert_eq!(extended.node_count(), rebuilt.node_count());
        assert_eq!(extended.edge_count(), rebuilt.edge_count());
        assert_eq!(extended.total_weight(), rebuilt.total_weight());
        assert_eq!(delta.new_nodes, 2);
        assert_eq!(delta.new_edges, 2);
        assert_eq!(delta.strengthened_edges, 1);
    }

    #[test]
    fn extend_on_empty_equals_build() {
        let recs = vec![rec("A", "B"), rec("B", "C")];
        let (net, delta) = TradingNetwork::default().extend(recs.clone());
        let built = TradingNetwork::build(recs);
        assert_eq!(net.node_count(), built.node_count());
        assert_eq!(delta.new_nodes, 3);
        assert_eq!(delta.new_edges, 2);
        assert_eq!(delta.strengthened_edges, 0);
    }

    #[test]
    fn extend_with_nothing_is_identity() {
        let net = build_pairs(&[("A", "B")]);
        let (net2, delta) = net.extend(std::iter::empty());
        assert_eq!(net2.node_count(), 2);
        assert_eq!(net2.edge_count(), 1);
        assert_eq!(delta, GraphDelta::default());
    }

    #[test]
    fn strengthening_an_existing_edge() {
        let (net, delta) = build_pairs(&[("A", "B")]).extend([rec("A", "B")]);
        assert_eq!(delta.strengthened_edges, 1);
        assert_eq!(delta.new_edges, 0);
        assert_eq!(delta.new_nodes, 0);
        assert_eq!(net.total_weight(), 2);
    }

    #[test]
    fn largest_component_of_connected_graph_is_identity() {
        let net = build_pairs(&[("A", "B"), ("B", "C"), ("C", "A")]);
        let (lcc, coverage) = net.largest_component();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(coverage, 1.0);
    }

    #[test]
    fn largest_component_tie_breaks_to_smallest_index() {
        // two disjoint edges; A was indexed first
        let net = build_pairs(&[("A", "B"), ("C", "D")]);
        let (lcc, coverage) = net.largest_component();
        assert_eq!(lcc.node_count(), 2);
        assert!((coverage - 0.5).abs() < 1e-15);
        assert!(lcc.node_index("A").is_some());
        assert!(lcc.node_index("C").is_none());
    }

    #[test]
    fn largest_component_matches_union_find_oracle() {
        use rand::Rng;
        let mut rng = crate::math::stream_rng(5, 1);
        let ids: Vec<String> = (0..100).map(|i| format!("n{i:03}")).collect();
        let mut recs = Vec::new();
        for _ in 0..120 {
            let b = rng.gen_range(0..100);
            let mut s = rng.gen_range(0..100);
            while s == b {
                s = rng.gen_range(0..100);
            }
            recs.push(rec(&ids[b], &ids[s]));
        }
        let net = TradingNetwork::build(recs.clone());

        // union-find oracle over participant IDs
        let mut parent: Vec<usize> = (0..net.node_count()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for (u, v, _) in net.edges() {
            let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut comp_size: HashMap<usize, usize> = HashMap::new();
        for v in 0..net.node_count() {
            *comp_size.entry(find(&mut parent, v)).or_default() += 1;
        }
        let expected = *comp_size.values().max().unwrap();
        let (lcc, coverage) = net.largest_component();
        assert_eq!(lcc.node_count(), expected);
        assert!((coverage - expected as f64 / net.node_count() as f64).abs() < 1e-15);
        // membership agrees: every kept ID is in the oracle's largest component
        let best_root = *comp_size
            .iter()
            .max_by_key(|(root, size)| (**size, std::cmp::Reverse(**root)))
            .unwrap()
            .0;
        for v in 0..lcc.node_count() as NodeId {
            let old = net.node_index(lcc.id(v)).unwrap();
            assert_eq!(find(&mut parent, old as usize), best_root);
        }
    }

    #[test]
    fn save_load_round_trips_bit_exactly() {
        let net = build_pairs(&[("beta", "alpha"), ("alpha", "gamma"), ("beta", "alpha")]);
        let mut bytes = Vec::new();
        net.save(&mut bytes).unwrap();
        let text = String::from_utf8(bytes.clone()).unwrap();
        assert!(text.starts_with(r#"{"N":3,"E":2,"W":3}"#));
        assert!(text.contains("alpha beta 2"));
        let loaded = TradingNetwork::load(&bytes[..]).unwrap();
        let mut again = Vec::new();
        loaded.save(&mut again).unwrap();
        assert_eq!(bytes, again);
        assert_eq!(loaded.node_count(), 3);
        assert_eq!(loaded.total_weight(), 3);
    }

    #[test]
    fn load_rejects_inconsistent_header() {
        let bad = "{\"N\":5,\"E\":1,\"W\":1}\na b 1\n";
        assert!(matches!(
            TradingNetwork::load(bad.as_bytes()),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn edge_bounds_hold() {
        let net = build_pairs(&[("A", "B"), ("A", "B"), ("B", "C"), ("A", "C")]);
        let n = net.node_count() as u64;
        assert!(net.edge_count() as u64 <= net.total_weight());
        assert!(net.edge_count() as u64 <= n * (n - 1) / 2);
    }
}
