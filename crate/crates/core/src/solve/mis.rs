//! Exact maximum-weight independent set by branch and bound.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictGraph {
    pub weights: Vec<u64>,
    /// Sorted neighbour lists.
    pub adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn new(n: usize) -> Self {
        ConflictGraph { weights: vec![1; n], adjacency: vec![Vec::new(); n] }
    }

    pub fn with_weights(weights: Vec<u64>) -> Self {
        let n = weights.len();
        ConflictGraph { weights, adjacency: vec![Vec::new(); n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Adds the conflict `i`–`j`; self-conflicts are ignored.
    pub fn add_conflict(&mut self, i: usize, j: usize) {
        if i == j || self.conflicts(i, j) {
            return;
        }
        for (a, b) in [(i, j), (j, i)] {
            let list = &mut self.adjacency[a];
            let at = list.partition_point(|&x| x < b);
            list.insert(at, b);
        }
    }

    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &i)| set[k + 1..].iter().all(|&j| !self.conflicts(i, j)))
    }

    pub fn weight_of(&self, set: &[usize]) -> u64 {
        set.iter().map(|&i| self.weights[i]).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: usize,
    pub max_branches: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 512, max_branches: 50_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum MisError {
    #[error("graph has {nodes} nodes, above the limit of {limit}")]
    TooLarge { nodes: usize, limit: usize },
    #[error("search exceeded {0} branches")]
    Exhausted(u64),
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and_not(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a &= !b;
        }
    }

    fn count_and(&self, o: &Bits) -> u32 {
        self.0.iter().zip(&o.0).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b))
    }
}

struct Search<'a> {
    weights: &'a [u64],
    adj: Vec<Bits>,
    best: u64,
    branches: u64,
    limit: u64,
}

impl Search<'_> {
    /// Greedy clique cover bound on the weight attainable within `cand`.
    fn bound(&self, cand: &Bits) -> u64 {
        let mut order: Vec<usize> = cand.iter().collect();
        order.sort_by(|&a, &b| self.weights[b].cmp(&self.weights[a]).then(a.cmp(&b)));
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        let mut total = 0;
        for v in order {
            match cliques.iter_mut().find(|c| c.iter().all(|&u| self.adj[v].has(u))) {
                Some(c) => c.push(v),
                None => {
                    total += self.weights[v];
                    cliques.push(vec![v]);
                }
            }
        }
        total
    }

    fn run(&mut self, mut cand: Bits, mut acc: u64) -> Result<(), MisError> {
        self.branches += 1;
        if self.branches > self.limit {
            return Err(MisError::Exhausted(self.limit));
        }
        // Isolated candidates are always taken.
        let isolated: Vec<usize> = cand.iter().filter(|&v| self.adj[v].count_and(&cand) == 0).collect();
        for v in isolated {
            acc += self.weights[v];
            cand.clear(v);
        }
        if cand.is_empty() {
            self.best = self.best.max(acc);
            return Ok(());
        }
        if acc + self.bound(&cand) <= self.best {
            return Ok(());
        }
        let pivot =
            cand.iter().max_by_key(|&v| (self.adj[v].count_and(&cand), std::cmp::Reverse(v))).expect("nonempty");
        let mut with = cand.clone();
        with.clear(pivot);
        with.and_not(&self.adj[pivot]);
        self.run(with, acc + self.weights[pivot])?;
        cand.clear(pivot);
        self.run(cand, acc)
    }
}

/// Optimum weight over independent sets inside `cand`, plus `base`.
fn optimum(search: &mut Search, cand: Bits, base: u64, floor: u64) -> Result<u64, MisError> {
    search.best = floor;
    search.run(cand, base)?;
    Ok(search.best)
}

pub fn max_independent_set(graph: &ConflictGraph) -> Result<Vec<usize>, MisError> {
    max_independent_set_with(graph, Budget::default())
}

/// Maximum-weight independent set; among optimal sets the lexicographically
/// smallest sorted index list.
pub fn max_independent_set_with(graph: &ConflictGraph, budget: Budget) -> Result<Vec<usize>, MisError> {
    let n = graph.len();
    if n > budget.max_nodes {
        return Err(MisError::TooLarge { nodes: n, limit: budget.max_nodes });
    }
    let mut adj = vec![Bits::empty(n); n];
    for (i, list) in graph.adjacency.iter().enumerate() {
        for &j in list {
            adj[i].set(j);
        }
    }
    let mut search = Search { weights: &graph.weights, adj, best: 0, branches: 0, limit: budget.max_branches };
    let target = optimum(&mut search, Bits::full(n), 0, 0)?;

    let mut chosen = Vec::new();
    let mut taken = 0;
    let mut rest = Bits::full(n);
    for i in 0..n {
        if !rest.has(i) {
            continue;
        }
        rest.clear(i);
        let mut with = rest.clone();
        with.and_not(&search.adj[i]);
        let got = taken + graph.weights[i];
        // The bound check fails fast when `i` cannot be in an optimal set.
        if optimum(&mut search, with.clone(), got, target - 1)? >= target {
            chosen.push(i);
            taken = got;
            rest = with;
        }
    }
    Ok(chosen)
}
