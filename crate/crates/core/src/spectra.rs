//! Exact characteristic polynomials, Seidel determinants and ranks, and the
//! symmetric-spectrum predicate. Floating-point eigenvalues are display-only;
//! every predicate here is decided over exact integers.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SgError};
use crate::graph::SignedGraph;

/// Exact integer coefficients `[a_1, ..., a_n]` of
/// `p(x) = x^n + a_1 x^(n-1) + ... + a_n`, the characteristic polynomial of
/// the adjacency matrix. `a_1` is always zero (zero trace).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    /// `[a_1, ..., a_n]`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_i` for `1 <= i <= n`.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i - 1]
    }

    /// True iff every odd-indexed coefficient `a_1, a_3, a_5, ...` vanishes.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_zero())
    }

    /// `det(A) = (-1)^n a_n` for the underlying matrix.
    pub fn determinant(&self) -> BigInt {
        let n = self.coeffs.len();
        let an = self.coeffs[n - 1].clone();
        if n.is_multiple_of(2) {
            an
        } else {
            -an
        }
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.coeffs.len();
        write!(f, "x^{n}")?;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = n - 1 - k;
            let sign = if a.is_negative() { "-" } else { "+" };
            let mag = a.abs();
            match d {
                0 => write!(f, " {sign} {mag}")?,
                1 => write!(f, " {sign} {mag}*x")?,
                _ => write!(f, " {sign} {mag}*x^{d}")?,
            }
        }
        Ok(())
    }
}

fn adjacency_bigint(g: &SignedGraph) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.sign(i, j))).collect())
        .collect()
}

/// Berkowitz' division-free characteristic polynomial. Returns the monic
/// coefficient vector `[1, c_1, ..., c_n]` of `det(xI - M)`.
fn berkowitz(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut c: Vec<BigInt> = vec![BigInt::one(), -m[0][0].clone()];
    for i in 1..n {
        // Toeplitz column: [1, -m_ii, -(r·v), -(r·Av), ...] with r the i-th
        // row prefix, v the i-th column prefix, A the leading i x i block.
        let mut t: Vec<BigInt> = Vec::with_capacity(i + 2);
        t.push(BigInt::one());
        t.push(-m[i][i].clone());
        let mut v: Vec<BigInt> = (0..i).map(|k| m[k][i].clone()).collect();
        for j in 0..i {
            let dot: BigInt = (0..i).map(|k| &m[i][k] * &v[k]).sum();
            t.push(-dot);
            if j + 1 < i {
                v = (0..i)
                    .map(|r| (0..i).map(|k| &m[r][k] * &v[k]).sum())
                    .collect();
            }
        }
        // lower-triangular Toeplitz multiply: truncated convolution
        let mut next = vec![BigInt::zero(); i + 2];
        for (k, slot) in next.iter_mut().enumerate() {
            let lo = k.saturating_sub(t.len() - 1);
            for j in lo..=k.min(c.len() - 1) {
                *slot += &t[k - j] * &c[j];
            }
        }
        c = next;
    }
    c
}

/// Exact characteristic polynomial of the adjacency matrix.
pub fn char_poly(g: &SignedGraph) -> CharPoly {
    let m = adjacency_bigint(g);
    let c = berkowitz(&m);
    CharPoly::from_coeffs(c[1..].to_vec())
}

/// True iff the spectrum is symmetric about the origin. Exact: decided by the
/// vanishing of the odd characteristic-polynomial coefficients.
pub fn is_symmetric_spectrum(g: &SignedGraph) -> bool {
    char_poly(g).is_symmetric()
}

/// All adjacency eigenvalues, descending. Display support only.
pub fn eigenvalues(g: &SignedGraph) -> Vec<f64> {
    let n = g.order();
    let m = DMatrix::from_fn(n, n, |i, j| g.sign(i, j) as f64);
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev
}

/// Fraction-free Bareiss elimination; returns (rank, determinant). The
/// determinant entry is meaningful for square input (0 when rank-deficient).
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if piv_row != rank {
            m.swap(piv_row, rank);
            sign = -sign;
        }
        let piv = m[rank][col].clone();
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &piv * &m[i][j] - &m[i][col] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    let det = if rank == rows && rows == cols {
        if sign < 0 {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

fn require_complete(g: &SignedGraph) -> Result<()> {
    if g.is_complete() {
        Ok(())
    } else {
        Err(SgError::NotComplete)
    }
}

/// Exact determinant of the adjacency (Seidel) matrix of a complete signed
/// graph. The determinant of a Seidel matrix of order n is always congruent
/// to 1 - n (mod 4), and odd when n is even; both facts are checked.
pub fn seidel_det(g: &SignedGraph) -> Result<BigInt> {
    require_complete(g)?;
    let n = g.order();
    let (_, det) = bareiss(adjacency_bigint(g));
    let four = BigInt::from(4);
    let lhs = ((&det % &four) + &four) % &four;
    let rhs = ((BigInt::from(1i64 - n as i64) % &four) + &four) % &four;
    assert_eq!(lhs, rhs, "Seidel determinant violates det ≡ 1-n (mod 4)");
    if n.is_multiple_of(2) {
        assert!((&det % 2i32).abs().is_one(), "even-order Seidel det must be odd");
    }
    Ok(det)
}

/// Exact rank over the rationals of the Seidel matrix of a complete signed
/// graph, by fraction-free elimination.
pub fn seidel_rank(g: &SignedGraph) -> Result<usize> {
    require_complete(g)?;
    let (rank, _) = bareiss(adjacency_bigint(g));
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UGraph;
    use num_rational::BigRational;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Brute-force characteristic polynomial oracle: symbolic expansion of
    /// det(xI - A) over all n! permutations, coefficients collected per power.
    pub(crate) fn charpoly_oracle(g: &SignedGraph) -> Vec<BigInt> {
        let n = g.order();
        // entries are degree-1 polynomials in x: (x-coeff, const)
        let entry = |i: usize, j: usize| -> (i64, i64) {
            if i == j {
                (1, 0)
            } else {
                (0, -(g.sign(i, j) as i64))
            }
        };
        let mut acc = vec![BigInt::zero(); n + 1]; // coefficient of x^k at index k
        let mut perm: Vec<usize> = (0..n).collect();
        // Heap's algorithm with parity tracking
        fn heaps(
            k: usize,
            perm: &mut Vec<usize>,
            sign: &mut i64,
            visit: &mut impl FnMut(&[usize], i64),
        ) {
            if k == 1 {
                visit(perm, *sign);
                return;
            }
            for i in 0..k {
                heaps(k - 1, perm, sign, visit);
                if i < k - 1 {
                    if k.is_multiple_of(2) {
                        perm.swap(i, k - 1);
                    } else {
                        perm.swap(0, k - 1);
                    }
                    *sign = -*sign;
                }
            }
        }
        let mut sign = 1i64;
        heaps(n, &mut perm, &mut sign, &mut |p, s| {
            // product of n linear terms
            let mut poly = vec![BigInt::zero(); n + 1];
            poly[0] = BigInt::one();
            let mut deg = 0usize;
            for (i, &pi) in p.iter().enumerate() {
                let (a, b) = entry(i, pi);
                let mut next = vec![BigInt::zero(); n + 1];
                for d in 0..=deg {
                    if a != 0 {
                        let t = &poly[d] * big(a);
                        next[d + 1] += t;
                    }
                    if b != 0 {
                        let t = &poly[d] * big(b);
                        next[d] += t;
                    }
                }
                poly = next;
                deg += if a != 0 { 1 } else { 0 };
            }
            for d in 0..=n {
                if s > 0 {
                    acc[d] += &poly[d];
                } else {
                    acc[d] -= &poly[d];
                }
            }
        });
        // acc[d] is the coefficient of x^d; reorder to [a_1..a_n]
        (1..=n).map(|i| acc[n - i].clone()).collect()
    }

    #[test]
    fn small_charpolys() {
        let k2 = SignedGraph::new(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(char_poly(&k2).coeffs(), &[big(0), big(-1)]);

        let neg_tri = SignedGraph::new(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]).unwrap();
        assert_eq!(char_poly(&neg_tri).coeffs(), &[big(0), big(-3), big(2)]);

        // K4 with exactly one negative edge: x^4 - 6x^2 + 5
        let g = SignedGraph::from_fn(4, |i, j| if (i, j) == (0, 1) { -1 } else { 1 }).unwrap();
        assert_eq!(char_poly(&g).coeffs(), &[big(0), big(-6), big(0), big(5)]);
    }

    #[test]
    fn charpoly_matches_permutation_oracle() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let g = SignedGraph::from_fn(n, |_, _| *[-1i8, 0, 1].choose(&mut rng).unwrap());
            let g = g.unwrap();
            assert_eq!(char_poly(&g).coeffs(), charpoly_oracle(&g).as_slice());
        }
    }

    #[test]
    fn charpoly_switching_invariant_negation_law() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(2..=7);
            let g = SignedGraph::from_fn(n, |_, _| *[-1i8, 0, 1].choose(&mut rng).unwrap()).unwrap();
            let p = char_poly(&g);
            let mask = rng.gen_range(0..1u16 << n);
            assert_eq!(char_poly(&g.switch_mask(mask)).coeffs(), p.coeffs());
            // negation flips odd coefficients
            let pn = char_poly(&g.negate());
            for (i, (a, b)) in p.coeffs().iter().zip(pn.coeffs()).enumerate() {
                if i % 2 == 0 {
                    assert_eq!(*b, -a);
                } else {
                    assert_eq!(b, a);
                }
            }
            // invariance under signed permutation
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let flip: Vec<i8> = (0..n).map(|_| *[1i8, -1].choose(&mut rng).unwrap()).collect();
            let sp = crate::graph::SignedPermutation::new(perm, flip).unwrap();
            assert_eq!(char_poly(&g.apply(&sp).unwrap()).coeffs(), p.coeffs());
        }
    }

    #[test]
    fn eigenvalue_contracts() {
        let k2 = SignedGraph::new(2, &[(0, 1, 1)]).unwrap();
        let ev = eigenvalues(&k2);
        assert!((ev[0] - 1.0).abs() < 1e-9 && (ev[1] + 1.0).abs() < 1e-9);

        let k4 = SignedGraph::from_fn(4, |_, _| 1).unwrap();
        let ev = eigenvalues(&k4);
        assert!((ev[0] - 3.0).abs() < 1e-9);
        for &e in &ev[1..] {
            assert!((e + 1.0).abs() < 1e-9);
        }

        // Seidel graph of C5 plus an isolated vertex: ±√5 each ×3
        let c5 = UGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let g = SignedGraph::seidel(&c5);
        let ev = eigenvalues(&g);
        let r5 = 5f64.sqrt();
        for (i, &e) in ev.iter().enumerate() {
            let want = if i < 3 { r5 } else { -r5 };
            assert!((e - want).abs() < 1e-9);
        }

        // sum 0, sum of squares 2|E|
        let g = SignedGraph::new(5, &[(0, 1, 1), (1, 2, -1), (2, 3, 1), (3, 4, -1)]).unwrap();
        let ev = eigenvalues(&g);
        let s: f64 = ev.iter().sum();
        let s2: f64 = ev.iter().map(|e| e * e).sum();
        assert!(s.abs() < 1e-6);
        assert!((s2 - 2.0 * g.edge_count() as f64).abs() < 1e-6);
    }

    #[test]
    fn seidel_det_and_rank() {
        let k4 = SignedGraph::from_fn(4, |_, _| 1).unwrap();
        assert_eq!(seidel_det(&k4).unwrap(), big(-3));
        assert_eq!(seidel_rank(&k4).unwrap(), 4);

        let k3 = SignedGraph::from_fn(3, |_, _| 1).unwrap();
        assert_eq!(seidel_det(&k3).unwrap(), big(2));

        let path = SignedGraph::new(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(seidel_det(&path), Err(SgError::NotComplete));
    }

    #[test]
    fn rank_agrees_with_rational_elimination() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(2..=7);
            let g = SignedGraph::from_fn(n, |_, _| *[1i8, -1].choose(&mut rng).unwrap()).unwrap();
            let r = seidel_rank(&g).unwrap();
            // oracle: Gaussian elimination over BigRational
            let mut m: Vec<Vec<BigRational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigRational::from(BigInt::from(g.sign(i, j))))
                        .collect()
                })
                .collect();
            let mut rank = 0;
            for col in 0..n {
                if rank == n {
                    break;
                }
                if let Some(p) = (rank..n).find(|&r2| !m[r2][col].is_zero()) {
                    m.swap(p, rank);
                    let piv = m[rank][col].clone();
                    for i in rank + 1..n {
                        let f = &m[i][col] / &piv;
                        #[allow(clippy::needless_range_loop)]
                        for j in col..n {
                            let t = &m[rank][j] * &f;
                            m[i][j] = &m[i][j] - t;
                        }
                    }
                    rank += 1;
                }
            }
            assert_eq!(r, rank);
            // determinant cross-check against char poly
            let det = seidel_det(&g).unwrap();
            assert_eq!(det, char_poly(&g).determinant());
        }
    }
}
