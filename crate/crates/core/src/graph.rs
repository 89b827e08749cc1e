//! Signed graphs and their switching algebra.
//!
//! Vertices are dense 0-based integers. All values are immutable after
//! construction; every operation returns a fresh graph.

use crate::error::{Result, SgError};

/// Largest vertex count representable by [`SignedGraph`] and [`UGraph`].
pub const MAX_ORDER: usize = 16;

/// Index of the unordered pair `(i, j)` with `i < j` in the fixed pair order
/// `(0,1), (0,2), (1,2), (0,3), ...` (column-major, as in graph6).
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// An unsigned simple graph on at most [`MAX_ORDER`] vertices, stored as an
/// edge bitset in pair-index order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UGraph {
    n: usize,
    bits: u128,
}

impl UGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(SgError::OrderTooLarge(n, MAX_ORDER));
        }
        Ok(UGraph { n, bits: 0 })
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(SgError::VertexOutOfRange(u.max(v), n));
            }
            if u == v {
                return Err(SgError::Loop(u));
            }
            let idx = pair_index(u.min(v), u.max(v));
            if g.bits >> idx & 1 == 1 {
                return Err(SgError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.bits |= 1 << idx;
        }
        Ok(g)
    }

    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        let mut g = Self::empty(n)?;
        g.bits = bits & Self::full_mask(n);
        Ok(g)
    }

    fn full_mask(n: usize) -> u128 {
        if n < 2 {
            0
        } else {
            (1u128 << (n * (n - 1) / 2)) - 1
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits >> pair_index(u.min(v), u.max(v)) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits |= 1 << pair_index(u.min(v), u.max(v));
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> pair_index(i, j) & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> UGraph {
        UGraph {
            n: self.n,
            bits: !self.bits & Self::full_mask(self.n),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    /// Neighbor bitmasks, one per vertex.
    pub fn neighbor_masks(&self) -> Vec<u16> {
        let mut m = vec![0u16; self.n];
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> pair_index(i, j) & 1 == 1 {
                    m[i] |= 1 << j;
                    m[j] |= 1 << i;
                }
            }
        }
        m
    }

    /// Connected components, each a sorted vertex list; components ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let masks = self.neighbor_masks();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                #[allow(clippy::needless_range_loop)]
                for v in 0..self.n {
                    if masks[u] >> v & 1 == 1 && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Relabel through `pos`, where `pos[v]` is the new label of vertex `v`.
    pub fn relabel(&self, pos: &[usize]) -> UGraph {
        let mut g = UGraph {
            n: self.n,
            bits: 0,
        };
        for (u, v) in self.edges() {
            g.add_edge(pos[u], pos[v]);
        }
        g
    }
}

/// Isomorphism search between two unsigned graphs; returns `pos` with
/// `a.relabel(pos) == b` when the graphs are isomorphic.
pub fn unsigned_isomorphism(a: &UGraph, b: &UGraph) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return None;
    }
    let n = a.order();
    let da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let ma = a.neighbor_masks();
    let mb = b.neighbor_masks();
    let mut pos = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        n: usize,
        da: &[usize],
        db: &[usize],
        ma: &[u16],
        mb: &[u16],
        pos: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || da[v] != db[w] {
                continue;
            }
            // adjacency to already-mapped vertices must agree
            let ok = (0..v).all(|u| (ma[v] >> u & 1 == 1) == (mb[w] >> pos[u] & 1 == 1));
            if ok {
                pos[v] = w;
                used[w] = true;
                if rec(v + 1, n, da, db, ma, mb, pos, used) {
                    return true;
                }
                used[w] = false;
                pos[v] = usize::MAX;
            }
        }
        false
    }
    if rec(0, n, &da, &db, &ma, &mb, &mut pos, &mut used) {
        Some(pos)
    } else {
        None
    }
}

/// Backtracking isomorphism test between two signed graphs: a vertex map that
/// preserves both adjacency and edge signs. Returns the map `pos` with
/// `a.relabeled(pos) == b` semantics (image of vertex v is pos[v]), or `None`.
pub fn signed_isomorphism(a: &SignedGraph, b: &SignedGraph) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    // per-vertex (positive degree, negative degree) must match under the map
    let deg = |g: &SignedGraph, v: usize| {
        let mut d = (0usize, 0usize);
        for u in 0..n {
            match g.sign(u, v) {
                1 => d.0 += 1,
                -1 => d.1 += 1,
                _ => {}
            }
        }
        d
    };
    let da: Vec<_> = (0..n).map(|v| deg(a, v)).collect();
    let db: Vec<_> = (0..n).map(|v| deg(b, v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let mut pos = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        n: usize,
        a: &SignedGraph,
        b: &SignedGraph,
        da: &[(usize, usize)],
        db: &[(usize, usize)],
        pos: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || da[v] != db[w] {
                continue;
            }
            if (0..v).all(|u| a.sign(u, v) == b.sign(pos[u], w)) {
                pos[v] = w;
                used[w] = true;
                if rec(v + 1, n, a, b, da, db, pos, used) {
                    return true;
                }
                used[w] = false;
                pos[v] = usize::MAX;
            }
        }
        false
    }
    if rec(0, n, a, b, &da, &db, &mut pos, &mut used) {
        Some(pos)
    } else {
        None
    }
}

/// A signed graph: a simple graph with a sign in {+1, -1} on every edge.
///
/// The adjacency matrix view `a_ij = sign(ij)` (0 for non-edges) is symmetric
/// with zero diagonal. Equality is structural and independent of construction
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl std::fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SignedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SignedGraph {
    pub fn new(order: usize, edges: &[(usize, usize, i8)]) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(SgError::OrderTooLarge(order, MAX_ORDER));
        }
        let mut g = SignedGraph {
            n: order,
            adj: vec![0; order * order],
        };
        for &(u, v, s) in edges {
            if u >= order || v >= order {
                return Err(SgError::VertexOutOfRange(u.max(v), order));
            }
            if u == v {
                return Err(SgError::Loop(u));
            }
            if s != 1 && s != -1 {
                return Err(SgError::InvalidParameter(format!(
                    "sign {s} for edge {u}-{v} is not +1 or -1"
                )));
            }
            if g.adj[u * order + v] != 0 {
                return Err(SgError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u * order + v] = s;
            g.adj[v * order + u] = s;
        }
        Ok(g)
    }

    /// Build from a symmetric entry function (values in {-1, 0, 1}); the
    /// diagonal is ignored.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i8) -> Result<Self> {
        let mut edges = Vec::new();
        for j in 1..order {
            for i in 0..j {
                let s = f(i, j);
                if s != 0 {
                    edges.push((i, j, s));
                }
            }
        }
        Self::new(order, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Sign of edge `uv`: +1, -1, or 0 for a non-edge.
    #[inline]
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        self.adj[u * self.n + v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&s| s != 0).count() / 2
    }

    /// Edges as `(u, v, sign)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let s = self.sign(u, v);
                if s != 0 {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn negative_edges(&self) -> UGraph {
        let mut g = UGraph::empty(self.n).unwrap();
        for (u, v, s) in self.edges() {
            if s < 0 {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn underlying(&self) -> UGraph {
        let mut g = UGraph::empty(self.n).unwrap();
        for (u, v, _) in self.edges() {
            g.add_edge(u, v);
        }
        g
    }

    /// Switch the vertex set `xs`: negate the sign of every edge with exactly
    /// one endpoint in `xs`.
    pub fn switch(&self, xs: &[usize]) -> Result<Self> {
        let mut mask = 0u16;
        for &v in xs {
            if v >= self.n {
                return Err(SgError::VertexOutOfRange(v, self.n));
            }
            mask |= 1 << v;
        }
        Ok(self.switch_mask(mask))
    }

    pub fn switch_mask(&self, mask: u16) -> Self {
        let mut g = self.clone();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if (mask >> u & 1) != (mask >> v & 1) {
                    g.adj[u * self.n + v] = -g.adj[u * self.n + v];
                    g.adj[v * self.n + u] = -g.adj[v * self.n + u];
                }
            }
        }
        g
    }

    /// The negation: every edge sign reversed.
    pub fn negate(&self) -> Self {
        let mut g = self.clone();
        for s in g.adj.iter_mut() {
            *s = -*s;
        }
        g
    }

    /// Conjugation by a signed permutation: edge `uv` with sign `s` maps to
    /// `perm(u) perm(v)` with sign `s * flip(u) * flip(v)`.
    pub fn apply(&self, sp: &SignedPermutation) -> Result<Self> {
        if sp.perm.len() != self.n {
            return Err(SgError::InvalidParameter(format!(
                "permutation on {} vertices applied to graph of order {}",
                sp.perm.len(),
                self.n
            )));
        }
        let mut g = SignedGraph {
            n: self.n,
            adj: vec![0; self.n * self.n],
        };
        for (u, v, s) in self.edges() {
            let (a, b) = (sp.perm[u], sp.perm[v]);
            let t = s * sp.flip[u] * sp.flip[v];
            g.adj[a * self.n + b] = t;
            g.adj[b * self.n + a] = t;
        }
        Ok(g)
    }

    /// Plain relabeling: `pos[v]` is the new label of vertex `v`.
    pub fn apply_perm(&self, pos: &[usize]) -> Result<Self> {
        self.apply(&SignedPermutation::plain(pos.to_vec())?)
    }

    /// The Seidel signed graph of an unsigned graph: complete, with the edges
    /// of `h` negative and its non-edges positive.
    pub fn seidel(h: &UGraph) -> Self {
        let n = h.order();
        SignedGraph::from_fn(n, |i, j| if h.has_edge(i, j) { -1 } else { 1 }).unwrap()
    }

    /// Per-component spanning-tree normal form: a deterministic BFS tree
    /// rooted at the smallest vertex of each component is made all-positive by
    /// the unique switching that leaves the root unswitched. Returns the
    /// normalized graph and the switching set used.
    pub fn normal_form(&self) -> (Self, Vec<usize>) {
        let n = self.n;
        let mut potential = vec![0i8; n]; // 0 = unvisited
        for root in 0..n {
            if potential[root] != 0 {
                continue;
            }
            potential[root] = 1;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if self.sign(u, v) != 0 && potential[v] == 0 {
                        potential[v] = potential[u] * self.sign(u, v);
                        queue.push_back(v);
                    }
                }
            }
        }
        let set: Vec<usize> = (0..n).filter(|&v| potential[v] < 0).collect();
        (self.switch(&set).unwrap(), set)
    }

    /// If some switching maps `self` to `other` (same labeled underlying
    /// graph), return such a switching set.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<Option<Vec<usize>>> {
        if self.n != other.n || self.underlying() != other.underlying() {
            return Err(SgError::UnderlyingMismatch);
        }
        let (nf1, x1) = self.normal_form();
        let (nf2, x2) = other.normal_form();
        if nf1 != nf2 {
            return Ok(None);
        }
        let m1: u16 = x1.iter().map(|&v| 1 << v).sum();
        let m2: u16 = x2.iter().map(|&v| 1 << v).sum();
        let sym = m1 ^ m2;
        Ok(Some((0..self.n).filter(|&v| sym >> v & 1 == 1).collect()))
    }
}

/// A vertex bijection together with a per-vertex sign flip; the matrix form is
/// a signed permutation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub flip: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, flip: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if flip.len() != n {
            return Err(SgError::InvalidParameter(
                "perm and flip lengths differ".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n {
                return Err(SgError::VertexOutOfRange(p, n));
            }
            if seen[p] {
                return Err(SgError::InvalidParameter("perm is not a bijection".into()));
            }
            seen[p] = true;
        }
        if flip.iter().any(|&f| f != 1 && f != -1) {
            return Err(SgError::InvalidParameter("flip values must be ±1".into()));
        }
        Ok(SignedPermutation { perm, flip })
    }

    pub fn plain(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            flip: vec![1; n],
        }
    }
}

/// A certificate of switching isomorphism: applying `perm` (as a plain
/// relabeling) and then switching `switch_set` maps the source to the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchWitness {
    pub perm: Vec<usize>,
    pub switch_set: Vec<usize>,
}

impl SwitchWitness {
    /// Replay the witness and check it maps `source` to `target` exactly.
    pub fn replays(&self, source: &SignedGraph, target: &SignedGraph) -> bool {
        match source.apply_perm(&self.perm) {
            Ok(h) => match h.switch(&self.switch_set) {
                Ok(h2) => h2 == *target,
                Err(_) => false,
            },
            Err(_) => false,
        }
    }
}
