//! Constructive recipes for sign-symmetric and symmetric-spectrum signed
//! graphs, named reference instances, and exhaustive small-graph catalogs.

use crate::canon::unsigned_canonical_bits;
use crate::error::{Result, SgError};
use crate::gf::Gf;
use crate::graph::{unsigned_isomorphism, SignedGraph, UGraph};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Block data for the sign-symmetric family with adjacency
/// `[[B, C], [C, -B]]`: `B`, `C` symmetric k x k over {-1,0,1}, `B` with zero
/// diagonal. Diagonal entries of `C` are the signs of the `i <-> k+i` cross
/// edges (0 = no edge).
#[derive(Clone, Debug)]
pub struct FFamilySpec {
    pub b: Vec<Vec<i8>>,
    pub c: Vec<Vec<i8>>,
}

impl FFamilySpec {
    pub fn k(&self) -> usize {
        self.b.len()
    }

    fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(SgError::InvalidParameter("k must be at least 1".into()));
        }
        for (name, m, zero_diag) in [("B", &self.b, true), ("C", &self.c, false)] {
            if m.len() != k || m.iter().any(|row| row.len() != k) {
                return Err(SgError::InvalidParameter(format!("{name} is not {k}x{k}")));
            }
            for (i, row) in m.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    if !(-1..=1).contains(cell) {
                        return Err(SgError::InvalidParameter(format!(
                            "{name}[{i}][{j}] out of {{-1,0,1}}"
                        )));
                    }
                    if m[i][j] != m[j][i] {
                        return Err(SgError::InvalidParameter(format!("{name} is not symmetric")));
                    }
                }
                if zero_diag && m[i][i] != 0 {
                    return Err(SgError::InvalidParameter(
                        "B must have a zero diagonal".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Signed graph with block adjacency `[[B, C], [C, -B]]` on 2k vertices;
/// sign-symmetric by construction.
pub fn construct_f_family(spec: &FFamilySpec) -> Result<SignedGraph> {
    spec.validate()?;
    let k = spec.k();
    SignedGraph::from_fn(2 * k, |i, j| match (i < k, j < k) {
        (true, true) => spec.b[i][j],
        (true, false) => spec.c[i][j - k],
        (false, true) => spec.c[i - k][j],
        (false, false) => -spec.b[i - k][j - k],
    })
}

/// Complete signed graph on 2m vertices whose negative edges induce `G` on
/// the first m vertices and the complement of `G` on the last m; its spectrum
/// is symmetric.
pub fn construct_gc_split(g: &UGraph) -> SignedGraph {
    let m = g.order();
    SignedGraph::from_fn(2 * m, |i, j| {
        let neg = match (i < m, j < m) {
            (true, true) => g.has_edge(i, j),
            (false, false) => !g.has_edge(i - m, j - m),
            _ => false,
        };
        if neg {
            -1
        } else {
            1
        }
    })
    .unwrap()
}

pub fn is_self_complementary(g: &UGraph) -> bool {
    unsigned_isomorphism(g, &g.complement()).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfCompMode {
    Join,
    Union,
    Cone,
}

/// Complete sign-symmetric signed graph whose negative edges induce the join
/// or disjoint union of two self-complementary graphs, or the cone over one
/// (join with a singleton).
pub fn construct_selfcomp(
    mode: SelfCompMode,
    g: &UGraph,
    h: Option<&UGraph>,
) -> Result<SignedGraph> {
    if !is_self_complementary(g) {
        return Err(SgError::NotSelfComplementary);
    }
    let single = UGraph::empty(1).unwrap();
    let h = match (mode, h) {
        (SelfCompMode::Cone, None) => &single,
        (SelfCompMode::Cone, Some(_)) => {
            return Err(SgError::InvalidParameter(
                "cone mode takes a single graph".into(),
            ))
        }
        (_, Some(h)) => h,
        (_, None) => {
            return Err(SgError::InvalidParameter(
                "join/union modes need two graphs".into(),
            ))
        }
    };
    if !is_self_complementary(h) {
        return Err(SgError::NotSelfComplementary);
    }
    let (m1, m2) = (g.order(), h.order());
    let mut neg = UGraph::empty(m1 + m2)?;
    for (u, v) in g.edges() {
        neg.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        neg.add_edge(m1 + u, m1 + v);
    }
    if matches!(mode, SelfCompMode::Join | SelfCompMode::Cone) {
        for u in 0..m1 {
            for v in 0..m2 {
                neg.add_edge(u, m1 + v);
            }
        }
    }
    Ok(SignedGraph::seidel(&neg))
}

/// Join of two signed graphs, each isomorphic to its own negation; all cross
/// edges positive, negative edges the union of the inputs' negative edges.
pub fn construct_join_signed(g1: &SignedGraph, g2: &SignedGraph) -> Result<SignedGraph> {
    for g in [g1, g2] {
        if crate::graph::signed_isomorphism(g, &g.negate()).is_none() {
            return Err(SgError::InvalidParameter(
                "join input is not isomorphic to its negation".into(),
            ));
        }
    }
    let (n1, n2) = (g1.order(), g2.order());
    SignedGraph::from_fn(n1 + n2, |i, j| match (i < n1, j < n1) {
        (true, true) => g1.sign(i, j),
        (false, false) => g2.sign(i - n1, j - n1),
        _ => 1,
    })
}

/// All graphs on m vertices up to isomorphism, generated by vertex
/// augmentation with canonical-form dedup. Representatives are canonically
/// labeled and sorted.
pub fn all_graphs_up_to_iso(m: usize) -> Result<Vec<UGraph>> {
    if m == 0 || m > 8 {
        return Err(SgError::OrderTooLarge(m, 8));
    }
    let mut level = vec![UGraph::empty(1).unwrap()];
    for size in 1..m {
        level = expand_level(&level, size);
    }
    Ok(level)
}

fn expand_level(prev: &[UGraph], size: usize) -> Vec<UGraph> {
    let expand_one = |g: &UGraph| -> Vec<u128> {
        let mut out = Vec::with_capacity(1 << size);
        for nb in 0u32..1 << size {
            let mut cand = UGraph::empty(size + 1).unwrap();
            for (u, v) in g.edges() {
                cand.add_edge(u, v);
            }
            for v in 0..size {
                if nb >> v & 1 == 1 {
                    cand.add_edge(v, size);
                }
            }
            out.push(unsigned_canonical_bits(&cand));
        }
        out
    };
    #[cfg(feature = "parallel")]
    let keys: Vec<u128> = prev.par_iter().flat_map_iter(expand_one).collect();
    #[cfg(not(feature = "parallel"))]
    let keys: Vec<u128> = prev.iter().flat_map(|g| expand_one(g)).collect();
    let mut keys = keys;
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|b| UGraph::from_bits(size + 1, b).unwrap())
        .collect()
}

/// All self-complementary graphs on m vertices up to isomorphism (m <= 9).
pub fn self_complementary_graphs(m: usize) -> Result<Vec<UGraph>> {
    if m == 0 || m > 9 {
        return Err(SgError::OrderTooLarge(m, 9));
    }
    if m % 4 == 2 || m % 4 == 3 {
        return Ok(Vec::new()); // edge count C(m,2)/2 is not an integer
    }
    if m <= 8 {
        return Ok(all_graphs_up_to_iso(m)?
            .into_iter()
            .filter(is_self_complementary)
            .collect());
    }
    // m == 9: augment the order-8 catalog, filter before dedup
    let target_edges = 9 * 8 / 2 / 2;
    let base = all_graphs_up_to_iso(8)?;
    let expand_one = |g: &UGraph| -> Vec<u128> {
        let mut out = Vec::new();
        let e = g.edge_count();
        for nb in 0u32..1 << 8 {
            if e + nb.count_ones() as usize != target_edges {
                continue;
            }
            let mut cand = UGraph::empty(9).unwrap();
            for (u, v) in g.edges() {
                cand.add_edge(u, v);
            }
            for v in 0..8 {
                if nb >> v & 1 == 1 {
                    cand.add_edge(v, 8);
                }
            }
            if is_self_complementary(&cand) {
                out.push(unsigned_canonical_bits(&cand));
            }
        }
        out
    };
    #[cfg(feature = "parallel")]
    let keys: Vec<u128> = base.par_iter().flat_map_iter(expand_one).collect();
    #[cfg(not(feature = "parallel"))]
    let keys: Vec<u128> = base.iter().flat_map(|g| expand_one(g)).collect();
    let mut keys = keys;
    keys.sort_unstable();
    keys.dedup();
    Ok(keys
        .into_iter()
        .map(|b| UGraph::from_bits(9, b).unwrap())
        .collect())
}

/// The hexagon-with-chord family: hexagon 1..6 with positive edges
/// {12,23,34,45,56,16,46} and negative edge {14}, plus s extra vertices each
/// joined positively to vertices 1 and 5. Symmetric spectrum, never
/// sign-symmetric.
pub fn construct_gamma_s(s: usize) -> Result<SignedGraph> {
    let mut edges = hexagon_core();
    for t in 0..s {
        let u = 6 + t;
        edges.push((0, u, 1));
        edges.push((4, u, 1));
    }
    SignedGraph::new(6 + s, &edges)
}

/// Shared signed hexagon core (vertices 0..5 standing for 1..6).
fn hexagon_core() -> Vec<(usize, usize, i8)> {
    vec![
        (0, 1, 1),
        (1, 2, 1),
        (2, 3, 1),
        (3, 4, 1),
        (4, 5, 1),
        (0, 5, 1),
        (3, 5, 1),
        (0, 3, -1),
    ]
}

/// The two-parameter variant: the same signed hexagon core plus s two-vertex
/// positive paths attached between vertices 1 and 4 and t such paths between
/// vertices 4 and 6 (following the figure's geometry; the caption's wording
/// is ambiguous).
pub fn construct_gamma_st(s: usize, t: usize) -> Result<SignedGraph> {
    if t < 1 {
        return Err(SgError::InvalidParameter("t must be at least 1".into()));
    }
    let mut edges = hexagon_core();
    let mut next = 6;
    for _ in 0..s {
        let (u, v) = (next, next + 1);
        next += 2;
        edges.push((0, u, 1)); // vertex 1
        edges.push((u, v, 1));
        edges.push((v, 3, 1)); // vertex 4
    }
    for _ in 0..t {
        let (u, v) = (next, next + 1);
        next += 2;
        edges.push((3, u, 1)); // vertex 4
        edges.push((u, v, 1));
        edges.push((v, 5, 1)); // vertex 6
    }
    SignedGraph::new(next, &edges)
}

/// The conference-matrix construction: Seidel graph of the Paley graph on F_q
/// extended with an isolated vertex. The adjacency matrix C of the result
/// satisfies C C^T = q I.
pub fn paley_conference(q: u64) -> Result<SignedGraph> {
    if q > 1024 {
        return Err(SgError::InvalidParameter(format!("q={q} exceeds 1024")));
    }
    if q % 4 != 1 {
        return Err(SgError::InvalidParameter(format!("q={q} is not 1 (mod 4)")));
    }
    let field = Gf::new(q)?; // also rejects non prime powers
    let sq = field.nonzero_squares();
    let n = q as usize + 1;
    SignedGraph::from_fn(n, |i, j| {
        if i < q as usize && j < q as usize && sq[field.sub(i as u64, j as u64) as usize] {
            -1
        } else {
            1
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedInstance {
    /// Complete signed K8; the negative edges form a triangle whose sides are
    /// each subdivided once, with the three subdivision vertices joined in a
    /// second triangle (two vertices untouched). Symmetric spectrum, not
    /// sign-symmetric, odd cycles balanced.
    Excep8,
    /// Complete signed K9 with a 10-edge negative graph on 6 vertices.
    /// Symmetric spectrum but c7+ != c7-.
    Excep9,
    /// A non-complete 6-vertex graph with balanced odd cycles whose spectrum
    /// is not symmetric.
    NonSign,
}

impl std::str::FromStr for NamedInstance {
    type Err = SgError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "excep8" => Ok(NamedInstance::Excep8),
            "excep9" => Ok(NamedInstance::Excep9),
            "non-sign" => Ok(NamedInstance::NonSign),
            other => Err(SgError::InvalidParameter(format!(
                "unknown instance id '{other}' (expected excep8, excep9, or non-sign)"
            ))),
        }
    }
}

pub fn named_instance(id: NamedInstance) -> SignedGraph {
    match id {
        NamedInstance::Excep8 => {
            // Outer triangle 0-1-2 with each side subdivided through 3, 4, 5;
            // the subdivision vertices form an inner triangle. Vertices 6, 7
            // carry no negative edges.
            let neg = UGraph::new(
                8,
                &[
                    (0, 3),
                    (0, 4),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 5),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                ],
            )
            .unwrap();
            SignedGraph::seidel(&neg)
        }
        NamedInstance::Excep9 => {
            // a1 a2 a3 b1 b2 b3 -> 0..5, plus 3 isolated vertices
            let neg = UGraph::new(
                9,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                ],
            )
            .unwrap();
            SignedGraph::seidel(&neg)
        }
        NamedInstance::NonSign => SignedGraph::new(
            6,
            &[
                (0, 1, 1),
                (0, 4, 1),
                (0, 5, 1),
                (2, 5, 1),
                (3, 4, 1),
                (4, 5, 1),
                (3, 5, -1),
            ],
        )
        .unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_sign_symmetric;
    use crate::census::{cycle_census, odd_cycle_balanced};
    use crate::spectra::is_symmetric_spectrum;

    #[test]
    fn f_family_basics() {
        let k2 = construct_f_family(&FFamilySpec {
            b: vec![vec![0]],
            c: vec![vec![1]],
        })
        .unwrap();
        assert_eq!(k2.order(), 2);
        assert_eq!(k2.sign(0, 1), 1);

        // k=2, B the swap matrix, C zero: positive K2 disjoint negative K2
        let g = construct_f_family(&FFamilySpec {
            b: vec![vec![0, 1], vec![1, 0]],
            c: vec![vec![0, 0], vec![0, 0]],
        })
        .unwrap();
        assert_eq!(g.sign(0, 1), 1);
        assert_eq!(g.sign(2, 3), -1);
        assert_eq!(g.edge_count(), 2);

        // validation
        assert!(construct_f_family(&FFamilySpec {
            b: vec![vec![1]],
            c: vec![vec![0]],
        })
        .is_err());
        assert!(construct_f_family(&FFamilySpec {
            b: vec![vec![0, 1], vec![-1, 0]],
            c: vec![vec![0, 0], vec![0, 0]],
        })
        .is_err());
    }

    #[test]
    fn f_family_members_are_sign_symmetric() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let k = rng.gen_range(1..=4);
            let mut b = vec![vec![0i8; k]; k];
            let mut c = vec![vec![0i8; k]; k];
            for i in 0..k {
                for j in i..k {
                    if i != j {
                        b[i][j] = *[-1, 0, 1].choose(&mut rng).unwrap();
                        b[j][i] = b[i][j];
                    }
                    c[i][j] = *[-1, 0, 1].choose(&mut rng).unwrap();
                    c[j][i] = c[i][j];
                }
            }
            let g = construct_f_family(&FFamilySpec { b, c }).unwrap();
            assert!(is_sign_symmetric(&g).unwrap().0);
        }
    }

    #[test]
    fn gc_split_has_symmetric_spectrum() {
        let g1 = UGraph::new(2, &[(0, 1)]).unwrap();
        let s = construct_gc_split(&g1);
        assert!(s.is_complete());
        // spectrum {±1, ±√5}: x^4 - 6x^2 + 5
        use num_bigint::BigInt;
        assert_eq!(
            crate::spectra::char_poly(&s).coeffs(),
            &[
                BigInt::from(0),
                BigInt::from(-6),
                BigInt::from(0),
                BigInt::from(5)
            ]
        );
        // empty G on 2 vertices lands in the same switching class
        let s2 = construct_gc_split(&UGraph::empty(2).unwrap());
        assert_eq!(
            crate::canon::canonical_code(&s).unwrap(),
            crate::canon::canonical_code(&s2).unwrap()
        );
    }

    #[test]
    fn self_complementary_counts() {
        assert_eq!(self_complementary_graphs(4).unwrap().len(), 1);
        assert_eq!(self_complementary_graphs(5).unwrap().len(), 2);
        assert_eq!(self_complementary_graphs(6).unwrap().len(), 0);
        for g in self_complementary_graphs(5).unwrap() {
            let pos = unsigned_isomorphism(&g, &g.complement()).unwrap();
            assert_eq!(g.relabel(&pos), g.complement());
        }
    }

    #[test]
    fn graph_catalog_counts() {
        // numbers of graphs up to isomorphism on 1..7 vertices
        let want = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(all_graphs_up_to_iso(i + 1).unwrap().len(), w, "m={}", i + 1);
        }
    }

    #[test]
    fn selfcomp_constructions_are_sign_symmetric() {
        let p4 = UGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cone = construct_selfcomp(SelfCompMode::Cone, &p4, None).unwrap();
        assert_eq!(cone.order(), 5);
        assert!(is_sign_symmetric(&cone).unwrap().0);

        let union = construct_selfcomp(SelfCompMode::Union, &p4, Some(&p4)).unwrap();
        assert_eq!(union.order(), 8);
        assert!(is_sign_symmetric(&union).unwrap().0);

        let k2 = UGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            construct_selfcomp(SelfCompMode::Cone, &k2, None),
            Err(SgError::NotSelfComplementary)
        );
    }

    #[test]
    fn join_signed_validates_and_builds() {
        let pos_k2 = SignedGraph::new(2, &[(0, 1, 1)]).unwrap();
        assert!(construct_join_signed(&pos_k2, &pos_k2).is_err());

        let v = SignedGraph::new(1, &[]).unwrap();
        let j = construct_join_signed(&v, &v).unwrap();
        assert_eq!(j.order(), 2);
        assert_eq!(j.sign(0, 1), 1);
        assert!(is_sign_symmetric(&j).unwrap().0);

        let seidel_p4 = SignedGraph::seidel(&UGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        let j = construct_join_signed(&seidel_p4, &seidel_p4).unwrap();
        assert_eq!(j.order(), 8);
        assert!(is_sign_symmetric(&j).unwrap().0);
    }

    #[test]
    fn gamma_s_structure() {
        let g0 = construct_gamma_s(0).unwrap();
        assert_eq!((g0.order(), g0.edge_count()), (6, 8));
        assert!(is_symmetric_spectrum(&g0));
        assert!(!is_sign_symmetric(&g0).unwrap().0);

        let g2 = construct_gamma_s(2).unwrap();
        let c = cycle_census(&g2, 5).unwrap();
        assert_eq!((c.plus(5), c.minus(5)), (3, 2));
    }

    #[test]
    fn named_instances_match_captions() {
        let e8 = named_instance(NamedInstance::Excep8);
        assert!(is_symmetric_spectrum(&e8));
        assert!(!is_sign_symmetric(&e8).unwrap().0);
        assert!(odd_cycle_balanced(&e8));

        let ns = named_instance(NamedInstance::NonSign);
        assert!(odd_cycle_balanced(&ns));
        assert!(!is_symmetric_spectrum(&ns));
    }

    #[test]
    fn paley_validation() {
        assert!(paley_conference(7).is_err()); // 3 (mod 4)
        assert!(paley_conference(12).is_err()); // not a prime power
        let c = paley_conference(5).unwrap();
        assert_eq!(c.order(), 6);
        assert!(c.is_complete());
    }
}
