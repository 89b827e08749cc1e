//! Exhaustive enumeration of switching-isomorphism classes of complete signed
//! graphs of small order, with spectral filtering and sign-symmetry
//! classification.
//!
//! Every class of signed K_n has a representative whose negative-edge graph
//! leaves vertex 0 isolated (switch the class so all edges at vertex 0 are
//! positive), so the search space is the graphs on vertices {1..n-1}: all
//! 2^C(n-1,2) edge masks for n <= 8, or an isomorphism-free catalog of the
//! 8-vertex graphs for n = 9. Survivors are deduplicated by canonical code.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::canon::{canonical_code, is_sign_symmetric, unsigned_canonical_bits, CanonicalCode};
use crate::census::cycle_census;
use crate::construct::all_graphs_up_to_iso;
use crate::error::{Result, SgError};
use crate::graph::{pair_index, SignedGraph, UGraph};
use crate::spectra::{char_poly, CharPoly};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const MIN_ENUM_ORDER: usize = 3;
pub const MAX_ENUM_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumMode {
    Full,
    SymSpectrumOnly,
}

/// One switching-isomorphism class of complete signed graphs.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub order: usize,
    pub canonical: CanonicalCode,
    /// Negative edges of the canonical representative.
    pub negative_rep: UGraph,
    pub charpoly: CharPoly,
    pub sym_spectrum: bool,
    pub sign_symmetric: bool,
    pub self_paired_under_negation: bool,
}

impl ClassRecord {
    /// The canonical representative graph, decoded from the code.
    pub fn representative(&self) -> SignedGraph {
        representative_of(&self.canonical)
    }
}

/// Decode the representative graph a canonical code describes.
pub fn representative_of(code: &CanonicalCode) -> SignedGraph {
    let bytes = code.bytes();
    let n = bytes[0] as usize;
    SignedGraph::from_fn(n, |i, j| match bytes[1 + pair_index(i, j)] {
        0 => 0,
        1 => 1,
        _ => -1,
    })
    .unwrap()
}

/// Aggregate counts for one order, under both negation conventions.
#[derive(Clone, Debug)]
pub struct EnumReport {
    pub order: usize,
    pub total_classes: usize,
    /// Symmetric-spectrum classes up to switching isomorphism.
    pub sym_spectrum_classes: usize,
    /// Symmetric-spectrum classes additionally identifying each class with
    /// its negation.
    pub sym_spectrum_classes_mod_negation: usize,
    pub sign_symmetric_classes: usize,
    pub elapsed: Duration,
}

/// The representative complete signed graph of a negative-edge graph `h` on
/// n-1 vertices: vertex 0 joined all-positive, edge {u,v} negative iff
/// {u-1, v-1} is an edge of `h`.
fn lift(h: &UGraph) -> SignedGraph {
    let n = h.order() + 1;
    SignedGraph::from_fn(n, |i, j| {
        if i > 0 && j > 0 && h.has_edge(i - 1, j - 1) {
            -1
        } else {
            1
        }
    })
    .unwrap()
}

/// Cheap class-invariant pre-filter: a_3 = 0 iff positive and negative
/// triangles balance. Works directly on the negative-edge mask.
fn triangles_balanced(h: &UGraph) -> bool {
    let m = h.order();
    let mut diff = 0i64; // c3+ - c3-, over the lifted complete graph
    // triangles through vertex 0 have sign = the remaining edge's sign
    for u in 0..m {
        for v in u + 1..m {
            diff += if h.has_edge(u, v) { -1 } else { 1 };
        }
    }
    for u in 0..m {
        for v in u + 1..m {
            for w in v + 1..m {
                let negs =
                    h.has_edge(u, v) as i64 + h.has_edge(u, w) as i64 + h.has_edge(v, w) as i64;
                diff += if negs % 2 == 1 { -1 } else { 1 };
            }
        }
    }
    diff == 0
}

/// Canonical bitsets of the distinct (up to isomorphism) negative-edge graphs
/// on n-1 vertices, from the raw 2^C(n-1,2) mask scan split across workers.
#[cfg(feature = "parallel")]
pub fn scan_masks_parallel(n: usize, mode: EnumMode) -> Vec<u128> {
    let m = n - 1;
    let total: u64 = 1 << (m * (m - 1) / 2);
    let mut keys: Vec<u128> = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let h = UGraph::from_bits(m, mask as u128).unwrap();
            if mode == EnumMode::SymSpectrumOnly && !triangles_balanced(&h) {
                return None;
            }
            Some(unsigned_canonical_bits(&h))
        })
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys
}

fn scan_masks(n: usize, mode: EnumMode) -> Vec<u128> {
    #[cfg(feature = "parallel")]
    return scan_masks_parallel(n, mode);
    #[cfg(not(feature = "parallel"))]
    scan_masks_sequential(n, mode)
}

/// Always-sequential variant of the mask scan, kept public for benchmarking
/// against the data-parallel default.
pub fn scan_masks_sequential(n: usize, mode: EnumMode) -> Vec<u128> {
    let m = n - 1;
    let total: u64 = 1 << (m * (m - 1) / 2);
    let mut keys: Vec<u128> = (0..total)
        .filter_map(|mask| {
            let h = UGraph::from_bits(m, mask as u128).unwrap();
            if mode == EnumMode::SymSpectrumOnly && !triangles_balanced(&h) {
                return None;
            }
            Some(unsigned_canonical_bits(&h))
        })
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys
}

fn candidates(n: usize, mode: EnumMode) -> Result<Vec<UGraph>> {
    if n == 9 {
        // mask scale (2^28) is out of reach of a default run; generate the
        // 8-vertex graphs isomorphism-free instead
        return all_graphs_up_to_iso(8);
    }
    Ok(scan_masks(n, mode)
        .into_iter()
        .map(|bits| UGraph::from_bits(n - 1, bits).unwrap())
        .collect())
}

/// Every switching-isomorphism class of complete signed graphs of order n
/// exactly once, sorted by canonical code. In `SymSpectrumOnly` mode only the
/// symmetric-spectrum classes are produced.
pub fn enumerate_complete_classes(n: usize, mode: EnumMode) -> Result<Vec<ClassRecord>> {
    if !(MIN_ENUM_ORDER..=MAX_ENUM_ORDER).contains(&n) {
        return Err(SgError::InvalidParameter(format!(
            "order {n} outside {MIN_ENUM_ORDER}..={MAX_ENUM_ORDER}"
        )));
    }
    let cands = candidates(n, mode)?;
    let classify = |h: &UGraph| -> Result<Option<(CanonicalCode, CharPoly)>> {
        let g = lift(h);
        let cp = char_poly(&g);
        if mode == EnumMode::SymSpectrumOnly && !cp.is_symmetric() {
            return Ok(None);
        }
        Ok(Some((canonical_code(&g)?, cp)))
    };
    #[cfg(feature = "parallel")]
    let coded: Result<Vec<_>> = cands.par_iter().map(classify).collect();
    #[cfg(not(feature = "parallel"))]
    let coded: Result<Vec<_>> = cands.iter().map(classify).collect();
    let mut coded: Vec<(CanonicalCode, CharPoly)> = coded?.into_iter().flatten().collect();
    coded.sort_by(|a, b| a.0.cmp(&b.0));
    coded.dedup_by(|a, b| a.0 == b.0);

    let finish = |(code, cp): (CanonicalCode, CharPoly)| -> Result<ClassRecord> {
        let rep = representative_of(&code);
        let (sign_symmetric, _) = is_sign_symmetric(&rep)?;
        let neg_code = canonical_code(&rep.negate())?;
        Ok(ClassRecord {
            order: n,
            negative_rep: rep.negative_edges(),
            sym_spectrum: cp.is_symmetric(),
            sign_symmetric,
            self_paired_under_negation: neg_code == code,
            canonical: code,
            charpoly: cp,
        })
    };
    #[cfg(feature = "parallel")]
    let records: Result<Vec<_>> = coded.into_par_iter().map(finish).collect();
    #[cfg(not(feature = "parallel"))]
    let records: Result<Vec<_>> = coded.into_iter().map(finish).collect();
    records
}

/// Counts for order n, aggregated from the full enumeration.
pub fn count_report(n: usize) -> Result<EnumReport> {
    let start = Instant::now();
    let classes = enumerate_complete_classes(n, EnumMode::Full)?;
    Ok(report_from_classes(n, &classes, start.elapsed()))
}

pub fn report_from_classes(n: usize, classes: &[ClassRecord], elapsed: Duration) -> EnumReport {
    let sym: Vec<&ClassRecord> = classes.iter().filter(|c| c.sym_spectrum).collect();
    let self_paired = sym.iter().filter(|c| c.self_paired_under_negation).count();
    // negation acts as an involution on the class set; orbits = (total+fixed)/2
    debug_assert_eq!((sym.len() + self_paired) % 2, 0);
    EnumReport {
        order: n,
        total_classes: classes.len(),
        sym_spectrum_classes: sym.len(),
        sym_spectrum_classes_mod_negation: (sym.len() + self_paired) / 2,
        sign_symmetric_classes: sym.iter().filter(|c| c.sign_symmetric).count(),
        elapsed,
    }
}

/// Candidate answers to the open question "do balanced odd cycle counts force
/// a symmetric spectrum?" restricted to complete signed graphs: the classes
/// with c_l+ = c_l- for every odd l but a non-symmetric spectrum. An empty
/// result means no counterexample at this order.
pub fn ques2_search(n: usize) -> Result<Vec<ClassRecord>> {
    let classes = enumerate_complete_classes(n, EnumMode::Full)?;
    let check = |c: &ClassRecord| -> Option<ClassRecord> {
        if c.sym_spectrum {
            return None;
        }
        let rep = c.representative();
        let census = cycle_census(&rep, n).unwrap();
        let balanced = (3..=n)
            .step_by(2)
            .all(|l| census.plus(l) == census.minus(l));
        balanced.then(|| c.clone())
    };
    #[cfg(feature = "parallel")]
    let out: Vec<ClassRecord> = classes.par_iter().filter_map(check).collect();
    #[cfg(not(feature = "parallel"))]
    let out: Vec<ClassRecord> = classes.iter().filter_map(check).collect();
    Ok(out)
}

#[allow(dead_code)]
fn assert_no_duplicate_codes(classes: &[ClassRecord]) {
    let set: HashSet<&CanonicalCode> = classes.iter().map(|c| &c.canonical).collect();
    assert_eq!(set.len(), classes.len());
}

/// Brute-force class-count oracle: union-find over all 2^C(n,2) complete
/// signed graphs, joining each graph with its single-vertex switchings and
/// adjacent-transposition relabelings. Only feasible for n <= 6.
pub fn brute_force_class_count(n: usize) -> Result<usize> {
    if !(MIN_ENUM_ORDER..=6).contains(&n) {
        return Err(SgError::InvalidParameter(format!(
            "brute-force oracle supports orders {MIN_ENUM_ORDER}..=6, got {n}"
        )));
    }
    let pairs = n * (n - 1) / 2;
    let total = 1usize << pairs;
    let graph_of = |mask: usize| {
        SignedGraph::from_fn(n, |i, j| {
            if mask >> pair_index(i, j) & 1 == 1 {
                -1
            } else {
                1
            }
        })
        .unwrap()
    };
    let mask_of = |g: &SignedGraph| -> usize {
        let mut m = 0;
        for (u, v, s) in g.edges() {
            if s < 0 {
                m |= 1 << pair_index(u, v);
            }
        }
        m
    };
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for mask in 0..total {
        let g = graph_of(mask);
        for v in 0..n {
            union(&mut parent, mask, mask_of(&g.switch(&[v]).unwrap()));
        }
        for v in 0..n - 1 {
            let mut pos: Vec<usize> = (0..n).collect();
            pos.swap(v, v + 1);
            union(&mut parent, mask, mask_of(&g.apply_perm(&pos).unwrap()));
        }
    }
    Ok((0..total).filter(|&x| find(&mut parent, x) == x).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_union_find_oracle_small() {
        for n in 3..=6 {
            let classes = enumerate_complete_classes(n, EnumMode::Full).unwrap();
            assert_no_duplicate_codes(&classes);
            assert_eq!(classes.len(), brute_force_class_count(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn known_class_totals() {
        // switching classes of complete signed graphs: 3, 7, 16 for n=4,5,6
        assert_eq!(
            enumerate_complete_classes(4, EnumMode::Full).unwrap().len(),
            3
        );
        assert_eq!(
            enumerate_complete_classes(5, EnumMode::Full).unwrap().len(),
            7
        );
        assert_eq!(
            enumerate_complete_classes(6, EnumMode::Full).unwrap().len(),
            16
        );
    }

    #[test]
    fn sym_only_mode_agrees_with_full_filter() {
        for n in 4..=6 {
            let full: Vec<CanonicalCode> = enumerate_complete_classes(n, EnumMode::Full)
                .unwrap()
                .into_iter()
                .filter(|c| c.sym_spectrum)
                .map(|c| c.canonical)
                .collect();
            let only: Vec<CanonicalCode> =
                enumerate_complete_classes(n, EnumMode::SymSpectrumOnly)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.canonical)
                    .collect();
            assert_eq!(full, only, "n={n}");
        }
    }

    #[test]
    fn negation_pairing_is_involution() {
        let classes = enumerate_complete_classes(6, EnumMode::Full).unwrap();
        let codes: HashSet<&CanonicalCode> = classes.iter().map(|c| &c.canonical).collect();
        for c in &classes {
            let neg_code = canonical_code(&c.representative().negate()).unwrap();
            assert!(codes.contains(&neg_code), "negation leaves the class set");
            assert_eq!(neg_code == c.canonical, c.self_paired_under_negation);
            if c.sign_symmetric {
                assert!(c.self_paired_under_negation);
            }
        }
    }

    #[test]
    fn order_bounds_enforced() {
        assert!(enumerate_complete_classes(2, EnumMode::Full).is_err());
        assert!(enumerate_complete_classes(10, EnumMode::Full).is_err());
    }

    #[test]
    fn sequential_scan_agrees() {
        for n in 4..=6 {
            assert_eq!(
                scan_masks_sequential(n, EnumMode::Full),
                super::scan_masks(n, EnumMode::Full)
            );
        }
    }

    #[test]
    fn report_counts_small() {
        let r = count_report(6).unwrap();
        assert_eq!(r.total_classes, 16);
        assert_eq!(r.sym_spectrum_classes, 4);
        assert_eq!(r.sign_symmetric_classes, 4);
        let r = count_report(4).unwrap();
        assert_eq!(r.sign_symmetric_classes, 1);
    }

    #[test]
    fn ques2_no_counterexample_at_4_and_5() {
        assert!(ques2_search(4).unwrap().is_empty());
        assert!(ques2_search(5).unwrap().is_empty());
    }
}
