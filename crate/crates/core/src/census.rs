//! Signed cycle censuses and the elementary-subgraph reconstruction of
//! characteristic-polynomial coefficients.

use num_bigint::BigInt;

use crate::error::{Result, SgError};
use crate::graph::SignedGraph;
use crate::spectra::CharPoly;

/// Practical cap for elementary-subgraph enumeration.
pub const MAX_CENSUS_ORDER: usize = 10;

/// Counts of positive and negative simple cycles per length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCensus {
    max_len: usize,
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl CycleCensus {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// `c_l^+`.
    pub fn plus(&self, len: usize) -> u64 {
        self.plus.get(len).copied().unwrap_or(0)
    }

    /// `c_l^-`.
    pub fn minus(&self, len: usize) -> u64 {
        self.minus.get(len).copied().unwrap_or(0)
    }

    pub fn total(&self, len: usize) -> u64 {
        self.plus(len) + self.minus(len)
    }
}

/// Count every simple cycle of length 3..=max_len exactly once (rotations and
/// reflections identified), classified by the product of its edge signs.
///
/// Each cycle is produced once by a DFS rooted at its smallest vertex with the
/// traversal direction fixed by `path[1] < path[last]`.
pub fn cycle_census(g: &SignedGraph, max_len: usize) -> Result<CycleCensus> {
    let n = g.order();
    if max_len > n {
        return Err(SgError::InvalidParameter(format!(
            "max_len {max_len} exceeds order {n}"
        )));
    }
    let mut census = CycleCensus {
        max_len,
        plus: vec![0; max_len + 1],
        minus: vec![0; max_len + 1],
    };
    if max_len < 3 {
        return Ok(census);
    }
    let mut path: Vec<usize> = Vec::with_capacity(max_len);
    for root in 0..n {
        path.clear();
        path.push(root);
        let mut on_path = 1u16 << root;
        dfs_cycles(g, root, max_len, &mut path, &mut on_path, 1, &mut census);
    }
    Ok(census)
}

fn dfs_cycles(
    g: &SignedGraph,
    root: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut u16,
    sign: i8,
    census: &mut CycleCensus,
) {
    let u = *path.last().unwrap();
    let closing = g.sign(u, root);
    if path.len() >= 3 && closing != 0 && path[1] < u {
        let s = sign * closing;
        if s > 0 {
            census.plus[path.len()] += 1;
        } else {
            census.minus[path.len()] += 1;
        }
    }
    if path.len() == max_len {
        return;
    }
    for w in root + 1..g.order() {
        let s = g.sign(u, w);
        if s != 0 && *on_path >> w & 1 == 0 {
            path.push(w);
            *on_path |= 1 << w;
            dfs_cycles(g, root, max_len, path, on_path, sign * s, census);
            *on_path &= !(1 << w);
            path.pop();
        }
    }
}

/// True iff `c_l^+ = c_l^-` for every odd cycle length.
pub fn odd_cycle_balanced(g: &SignedGraph) -> bool {
    let census = cycle_census(g, g.order()).unwrap();
    (3..=g.order())
        .step_by(2)
        .all(|l| census.plus(l) == census.minus(l))
}

/// Characteristic-polynomial coefficients computed purely by enumerating
/// elementary subgraphs (vertex-disjoint packings of single edges and cycles):
/// `a_i = sum over i-vertex elementary subgraphs of (-1)^p 2^|c| sigma`.
///
/// Independent of the Berkowitz path; serves as its combinatorial oracle.
pub fn elementary_coefficients(g: &SignedGraph) -> Result<CharPoly> {
    let n = g.order();
    if n > MAX_CENSUS_ORDER {
        return Err(SgError::OrderTooLarge(n, MAX_CENSUS_ORDER));
    }
    let mut acc = vec![0i64; n + 1];
    let mut st = PackState {
        g,
        covered: 0,
        acc: &mut acc,
    };
    pack(&mut st, 0, 0, 0, 1);
    Ok(CharPoly::from_coeffs(
        (1..=n).map(|i| BigInt::from(acc[i])).collect(),
    ))
}

struct PackState<'a> {
    g: &'a SignedGraph,
    covered: u16,
    acc: &'a mut Vec<i64>,
}

/// Branch on the smallest undecided vertex: leave it uncovered, pair it into
/// an edge, or route a cycle through it.
fn pack(st: &mut PackState, v: usize, pieces: u32, cycles: u32, sign: i8) {
    let n = st.g.order();
    if v == n {
        let i = st.covered.count_ones() as usize;
        let term = (1i64 << cycles) * sign as i64 * if pieces % 2 == 1 { -1 } else { 1 };
        st.acc[i] += term;
        return;
    }
    if st.covered >> v & 1 == 1 {
        pack(st, v + 1, pieces, cycles, sign);
        return;
    }
    // skip v
    pack(st, v + 1, pieces, cycles, sign);
    // edge piece {v, w}
    for w in v + 1..n {
        if st.g.sign(v, w) != 0 && st.covered >> w & 1 == 0 {
            st.covered |= (1 << v) | (1 << w);
            pack(st, v + 1, pieces + 1, cycles, sign);
            st.covered &= !((1 << v) | (1 << w));
        }
    }
    // cycle piece with v as its smallest vertex
    let mut path = vec![v];
    st.covered |= 1 << v;
    cycle_piece(st, v, &mut path, 1, pieces, cycles, sign);
    st.covered &= !(1 << v);
}

fn cycle_piece(
    st: &mut PackState,
    root: usize,
    path: &mut Vec<usize>,
    path_sign: i8,
    pieces: u32,
    cycles: u32,
    sign: i8,
) {
    let u = *path.last().unwrap();
    let closing = st.g.sign(u, root);
    if path.len() >= 3 && closing != 0 && path[1] < u {
        pack(
            st,
            root + 1,
            pieces + 1,
            cycles + 1,
            sign * path_sign * closing,
        );
    }
    for w in root + 1..st.g.order() {
        let s = st.g.sign(u, w);
        if s != 0 && st.covered >> w & 1 == 0 {
            path.push(w);
            st.covered |= 1 << w;
            cycle_piece(st, root, path, path_sign * s, pieces, cycles, sign);
            st.covered &= !(1 << w);
            path.pop();
        }
    }
}
