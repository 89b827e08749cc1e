//! Canonical forms under switching isomorphism and the sign-symmetry
//! decision, with replayable witnesses.
//!
//! Canonicalization is exhaustive over vertex permutations with lexicographic
//! pruning: at every search node only candidates extending the smallest
//! possible encoding chunk are explored, which confines branching to the
//! automorphism-like ties. Complete underlying graphs (the hard case) are
//! handled by an apex specialization: the code of a complete signed graph is
//! the minimum, over the choice of an apex vertex switched to be all-positive,
//! of the canonical encoding of the residual negative-edge graph.

use crate::error::{Result, SgError};
use crate::graph::{pair_index, SignedGraph, SwitchWitness, UGraph};

/// Size cap for canonicalization when the underlying graph is complete.
pub const MAX_CANON_COMPLETE: usize = 14;
/// Size cap for components whose underlying graph is not complete.
pub const MAX_CANON_GENERAL: usize = 12;

/// A fixed-length byte code identifying a switching-isomorphism class.
///
/// Layout: `[order]` followed by one symbol per vertex pair in the fixed pair
/// order of the canonically relabeled, switching-normalized representative
/// (0 = non-edge, 1 = positive, 2 = negative). Serializes to lowercase hex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A canonical form together with the relabeling and switching that reach it:
/// `switch(apply_perm(g, perm), switch_set)` is the canonical representative
/// whose symbol encoding is `code` (past the leading order byte).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub perm: Vec<usize>,
    pub switch_set: Vec<usize>,
}

/// Symbol encoding of a signed graph in pair order: 0 non-edge, 1 positive,
/// 2 negative.
fn symbols(g: &SignedGraph) -> Vec<u8> {
    let n = g.order();
    let mut out = vec![0u8; n * (n - 1) / 2];
    for j in 1..n {
        for i in 0..j {
            out[pair_index(i, j)] = match g.sign(i, j) {
                0 => 0,
                1 => 1,
                _ => 2,
            };
        }
    }
    out
}

// ---------------------------------------------------------------------------
// unsigned lex-min canonical labeling
// ---------------------------------------------------------------------------

struct UCanon<'a> {
    n: usize,
    masks: &'a [u16],
}

impl<'a> UCanon<'a> {
    fn new(masks: &'a [u16]) -> Self {
        UCanon {
            n: masks.len(),
            masks,
        }
    }

    /// Lex-min bit encoding over all placements, and one placement achieving
    /// it (`order[k]` = vertex placed at position `k`).
    fn best(&self) -> (Vec<u8>, Vec<usize>) {
        if self.n <= 1 {
            return (Vec::new(), (0..self.n).collect());
        }
        let total = self.n * (self.n - 1) / 2;
        let mut best = vec![2u8; total]; // sentinel above any bit
        let mut best_order = Vec::new();
        let mut order = Vec::with_capacity(self.n);
        let mut cur = Vec::with_capacity(total);
        self.rec_best(&mut order, 0, &mut cur, &mut best, &mut best_order);
        (best, best_order)
    }

    fn rec_best(
        &self,
        order: &mut Vec<usize>,
        used: u16,
        cur: &mut Vec<u8>,
        best: &mut Vec<u8>,
        best_order: &mut Vec<usize>,
    ) {
        let k = order.len();
        if k == self.n {
            if cur.as_slice() < best.as_slice() {
                *best = cur.clone();
                *best_order = order.clone();
            }
            return;
        }
        // only candidates with the minimal next chunk can extend a lex-min
        let mut min_chunk = u32::MAX;
        for v in 0..self.n {
            if used >> v & 1 == 0 {
                min_chunk = min_chunk.min(self.chunk(order, v));
            }
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.chunk(order, v) != min_chunk {
                continue;
            }
            let len0 = cur.len();
            for &o in order.iter().take(k) {
                cur.push((self.masks[o] >> v & 1) as u8);
            }
            if cur.as_slice() <= &best[..cur.len()] {
                order.push(v);
                self.rec_best(order, used | 1 << v, cur, best, best_order);
                order.pop();
            }
            cur.truncate(len0);
        }
    }

    #[inline]
    fn chunk(&self, order: &[usize], v: usize) -> u32 {
        let mut c = 0u32;
        for &u in order {
            c = c << 1 | (self.masks[u] >> v & 1) as u32;
        }
        c
    }

    /// Visit every placement whose encoding equals `best`; the callback
    /// returns false to stop early.
    fn for_each_best(&self, best: &[u8], f: &mut impl FnMut(&[usize]) -> bool) {
        let mut order = Vec::with_capacity(self.n);
        self.rec_ties(&mut order, 0, best, f);
    }

    fn rec_ties(
        &self,
        order: &mut Vec<usize>,
        used: u16,
        best: &[u8],
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = order.len();
        if k == self.n {
            return f(order);
        }
        let base = k * k.saturating_sub(1) / 2;
        'cand: for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            for i in 0..k {
                if (self.masks[order[i]] >> v & 1) as u8 != best[base + i] {
                    continue 'cand;
                }
            }
            order.push(v);
            let go_on = self.rec_ties(order, used | 1 << v, best, f);
            order.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Canonical encoding and a canonical placement for an unsigned graph
/// (lex-min adjacency bits over all permutations).
pub(crate) fn unsigned_canonical(g: &UGraph) -> (Vec<u8>, Vec<usize>) {
    let masks = g.neighbor_masks();
    UCanon::new(&masks).best()
}

/// Canonical bitset form of an unsigned graph, usable as a dedup key.
pub(crate) fn unsigned_canonical_bits(g: &UGraph) -> u128 {
    let (enc, _) = unsigned_canonical(g);
    enc.iter()
        .enumerate()
        .fold(0u128, |b, (i, &bit)| b | (bit as u128) << i)
}

// ---------------------------------------------------------------------------
// signed canonicalization
// ---------------------------------------------------------------------------

/// Canonical placement of a complete signed component via apex switching:
/// minimize, over the apex vertex placed first, the canonical encoding of the
/// graph of switching-normalized negative pairs among the rest.
fn canon_complete(comp: &SignedGraph) -> Vec<usize> {
    let m = comp.order();
    let mut best_enc: Option<Vec<u8>> = None;
    let mut best_pos = vec![0usize; m];
    for apex in 0..m {
        let rest: Vec<usize> = (0..m).filter(|&v| v != apex).collect();
        let mut masks = vec![0u16; m - 1];
        for i in 0..m - 1 {
            for j in i + 1..m - 1 {
                let (u, v) = (rest[i], rest[j]);
                let norm = comp.sign(u, v) * comp.sign(apex, u) * comp.sign(apex, v);
                if norm < 0 {
                    masks[i] |= 1 << j;
                    masks[j] |= 1 << i;
                }
            }
        }
        let (enc, order) = UCanon::new(&masks).best();
        if best_enc.as_ref().is_none_or(|b| enc < *b) {
            best_pos[apex] = 0;
            for (k, &idx) in order.iter().enumerate() {
                best_pos[rest[idx]] = k + 1;
            }
            best_enc = Some(enc);
        }
    }
    best_pos
}

/// Canonical placement of a connected, non-complete signed component:
/// among all placements minimizing the underlying encoding, minimize the
/// switching-normalized sign encoding.
fn canon_general(comp: &SignedGraph) -> Vec<usize> {
    let under = comp.underlying();
    let masks = under.neighbor_masks();
    let uc = UCanon::new(&masks);
    let (under_enc, _) = uc.best();
    // lower bound: the all-positive sign pattern on the canonical underlying
    let floor: Vec<u8> = under_enc.clone();
    let m = comp.order();
    let mut best_sym: Option<Vec<u8>> = None;
    let mut best_pos: Vec<usize> = Vec::new();
    uc.for_each_best(&under_enc, &mut |order| {
        let mut pos = vec![0usize; m];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let h = comp.apply_perm(&pos).unwrap();
        let (nf, _) = h.normal_form();
        let sym = symbols(&nf);
        if best_sym.as_ref().is_none_or(|b| sym < *b) {
            let done = sym == floor;
            best_sym = Some(sym);
            best_pos = pos;
            if done {
                return false;
            }
        }
        true
    });
    best_pos
}

fn check_caps(g: &SignedGraph, comps: &[Vec<usize>]) -> Result<()> {
    if g.order() > MAX_CANON_COMPLETE {
        return Err(SgError::OrderTooLarge(g.order(), MAX_CANON_COMPLETE));
    }
    for comp in comps {
        let m = comp.len();
        let complete = comp
            .iter()
            .enumerate()
            .all(|(i, &u)| comp[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if !complete && m > MAX_CANON_GENERAL {
            return Err(SgError::OrderTooLarge(m, MAX_CANON_GENERAL));
        }
    }
    Ok(())
}

fn induced(g: &SignedGraph, verts: &[usize]) -> SignedGraph {
    SignedGraph::from_fn(verts.len(), |i, j| g.sign(verts[i], verts[j])).unwrap()
}

/// Canonical form: code plus the relabeling and switching reaching it.
pub fn canonical_form(g: &SignedGraph) -> Result<CanonicalForm> {
    let comps = g.underlying().components();
    check_caps(g, &comps)?;
    let n = g.order();

    struct Entry {
        verts: Vec<usize>,
        pos_local: Vec<usize>,
        sym: Vec<u8>,
    }
    let mut entries: Vec<Entry> = comps
        .into_iter()
        .map(|verts| {
            let sub = induced(g, &verts);
            let pos_local = if sub.is_complete() {
                canon_complete(&sub)
            } else {
                canon_general(&sub)
            };
            let canon_sub = sub.apply_perm(&pos_local).unwrap();
            let (nf, _) = canon_sub.normal_form();
            Entry {
                verts,
                pos_local,
                sym: symbols(&nf),
            }
        })
        .collect();
    // components ordered by (size, code); switching and isomorphism factor
    // over components
    entries.sort_by(|a, b| {
        (a.verts.len(), &a.sym).cmp(&(b.verts.len(), &b.sym))
    });

    let mut perm = vec![0usize; n];
    let mut offset = 0;
    for e in &entries {
        for (local, &v) in e.verts.iter().enumerate() {
            perm[v] = offset + e.pos_local[local];
        }
        offset += e.verts.len();
    }
    let relabeled = g.apply_perm(&perm)?;
    let (nf, switch_set) = relabeled.normal_form();
    let mut bytes = Vec::with_capacity(1 + n * (n - 1) / 2);
    bytes.push(n as u8);
    bytes.extend(symbols(&nf));
    Ok(CanonicalForm {
        code: CanonicalCode(bytes),
        perm,
        switch_set,
    })
}

/// Canonical switching-isomorphism class code.
pub fn canonical_code(g: &SignedGraph) -> Result<CanonicalCode> {
    canonical_form(g).map(|f| f.code)
}

/// Decide switching isomorphism; on success return a witness that replays
/// exactly: `switch(apply_perm(g1, perm), switch_set) == g2`.
pub fn switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<SwitchWitness>> {
    if g1.order() != g2.order() {
        return Ok(None);
    }
    let f1 = canonical_form(g1)?;
    let f2 = canonical_form(g2)?;
    if f1.code != f2.code {
        return Ok(None);
    }
    let n = g1.order();
    let mut inv2 = vec![0usize; n];
    for (v, &p) in f2.perm.iter().enumerate() {
        inv2[p] = v;
    }
    let perm: Vec<usize> = (0..n).map(|v| inv2[f1.perm[v]]).collect();
    let mut mask = 0u16;
    for &x in &f1.switch_set {
        mask ^= 1 << inv2[x];
    }
    for &x in &f2.switch_set {
        mask ^= 1 << inv2[x];
    }
    let switch_set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    let witness = SwitchWitness { perm, switch_set };
    assert!(
        witness.replays(g1, g2),
        "canonical witness failed to replay; canonicalization bug"
    );
    Ok(Some(witness))
}

/// Decide sign-symmetry: is the graph switching isomorphic to its negation?
pub fn is_sign_symmetric(g: &SignedGraph) -> Result<(bool, Option<SwitchWitness>)> {
    let w = switching_isomorphic(g, &g.negate())?;
    Ok((w.is_some(), w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;

    fn rand_signed(rng: &mut impl Rng, n: usize, complete: bool) -> SignedGraph {
        SignedGraph::from_fn(n, |_, _| {
            if complete {
                *[1i8, -1].choose(rng).unwrap()
            } else {
                *[-1i8, 0, 1].choose(rng).unwrap()
            }
        })
        .unwrap()
    }

    /// Brute-force switching-isomorphism oracle: all n! permutations times all
    /// 2^n switch sets.
    fn brute_switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> bool {
        let n = g1.order();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if let Ok(h) = g1.apply_perm(&perm) {
                for mask in 0u16..1 << n {
                    if h.switch_mask(mask) == *g2 {
                        return true;
                    }
                }
            }
            // next permutation
            let mut i = n - 1;
            while i > 0 && perm[i - 1] >= perm[i] {
                i -= 1;
            }
            if i == 0 {
                return false;
            }
            let mut j = n - 1;
            while perm[j] <= perm[i - 1] {
                j -= 1;
            }
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }

    #[test]
    fn code_invariance() {
        let k3 = SignedGraph::from_fn(3, |_, _| 1).unwrap();
        let c = canonical_code(&k3).unwrap();
        assert_eq!(canonical_code(&k3.switch(&[1]).unwrap()).unwrap(), c);
        assert_ne!(canonical_code(&k3.negate()).unwrap(), c);
    }

    #[test]
    fn code_stable_under_random_perturbations() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let n = rng.gen_range(2..=7);
            let complete = rng.gen_bool(0.5);
            let g = rand_signed(&mut rng, n, complete);
            let c = canonical_code(&g).unwrap();
            for _ in 0..10 {
                let mask = rng.gen_range(0..1u16 << n);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let h = g.switch_mask(mask).apply_perm(&perm).unwrap();
                assert_eq!(canonical_code(&h).unwrap(), c);
            }
        }
    }

    #[test]
    fn witness_replays_on_planted_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(33);
        for _ in 0..25 {
            let n = rng.gen_range(2..=7);
            let g = rand_signed(&mut rng, n, false);
            let mask = rng.gen_range(0..1u16 << n);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.apply_perm(&perm).unwrap().switch_mask(mask);
            let w = switching_isomorphic(&g, &h).unwrap().expect("planted");
            assert!(w.replays(&g, &h));
        }
    }

    #[test]
    fn agrees_with_brute_force_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(55);
        // exhaustive pairwise over all signed K4
        let all_k4: Vec<SignedGraph> = (0u16..64)
            .map(|m| {
                SignedGraph::from_fn(4, |i, j| {
                    if m >> pair_index(i, j) & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .unwrap()
            })
            .collect();
        for a in all_k4.iter().step_by(3) {
            for b in all_k4.iter().step_by(5) {
                let fast = switching_isomorphic(a, b).unwrap().is_some();
                assert_eq!(fast, brute_switching_isomorphic(a, b));
            }
        }
        // random sparse pairs on 5 vertices
        for _ in 0..30 {
            let a = rand_signed(&mut rng, 5, false);
            let b = rand_signed(&mut rng, 5, false);
            let fast = switching_isomorphic(&a, &b).unwrap().is_some();
            assert_eq!(fast, brute_switching_isomorphic(&a, &b));
        }
    }

    #[test]
    fn sign_symmetry_basics() {
        // bipartite graphs are sign-symmetric
        let p4 = SignedGraph::new(4, &[(0, 1, 1), (1, 2, -1), (2, 3, 1)]).unwrap();
        let (ok, w) = is_sign_symmetric(&p4).unwrap();
        assert!(ok);
        assert!(w.unwrap().replays(&p4, &p4.negate()));
        // the relation is symmetric under negation
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..15 {
            let complete = rng.gen_bool(0.5);
            let g = rand_signed(&mut rng, 6, complete);
            let a = is_sign_symmetric(&g).unwrap().0;
            let b = is_sign_symmetric(&g.negate()).unwrap().0;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn caps_enforced() {
        let big = SignedGraph::from_fn(15, |_, _| 1).unwrap();
        assert!(matches!(
            canonical_code(&big),
            Err(SgError::OrderTooLarge(15, MAX_CANON_COMPLETE))
        ));
    }
}
