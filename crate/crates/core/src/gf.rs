//! Small finite fields F_q for prime powers q, with just enough arithmetic to
//! build Paley graphs: element subtraction and the set of nonzero squares.
//!
//! Elements are indices 0..q encoding base-p digit vectors (coefficients of a
//! polynomial over Z_p reduced modulo a monic irreducible of degree k).

use crate::error::{Result, SgError};

pub struct Gf {
    p: u64,
    k: usize,
    q: u64,
    irreducible: Vec<u64>, // monic, length k+1
}

fn factor_prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Polynomial multiplication over Z_p.
fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over Z_p.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for i in 0..=dm {
                let t = (lead * m[i]) % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r.resize(dm.max(1), 0);
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=deg/2
    for d in 1..=deg / 2 {
        let mut coeffs = vec![0u64; d + 1];
        coeffs[d] = 1;
        loop {
            let r = poly_rem(f, &coeffs, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
            // next candidate divisor
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

impl Gf {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) =
            factor_prime_power(q).ok_or(SgError::InvalidParameter(format!(
                "{q} is not a prime power"
            )))?;
        // find a monic irreducible of degree k over Z_p
        let mut irreducible = vec![0u64; k + 1];
        irreducible[k] = 1;
        if k > 1 {
            #[allow(clippy::needless_range_loop)]
            'search: loop {
                for i in 0..k {
                    irreducible[i] += 1;
                    if irreducible[i] < p {
                        break;
                    }
                    irreducible[i] = 0;
                    if i == k - 1 {
                        return Err(SgError::InvalidParameter(format!(
                            "no irreducible polynomial found for q={q}"
                        )));
                    }
                }
                if is_irreducible(&irreducible, p) {
                    break 'search;
                }
            }
        }
        Ok(Gf { p, k, q, irreducible })
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut d = vec![0u64; self.k];
        for slot in d.iter_mut() {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn index(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let da = self.digits(a);
        let db = self.digits(b);
        let d: Vec<u64> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        self.index(&d)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let prod = poly_mul(&self.digits(a), &self.digits(b), self.p);
        let r = poly_rem(&prod, &self.irreducible, self.p);
        let mut d = r;
        d.resize(self.k, 0);
        self.index(&d)
    }

    /// The set of nonzero squares, as a membership table indexed by element.
    pub fn nonzero_squares(&self) -> Vec<bool> {
        let mut sq = vec![false; self.q as usize];
        for x in 1..self.q {
            sq[self.mul(x, x) as usize] = true;
        }
        sq[0] = false;
        sq
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Gf::new(5).unwrap();
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.sub(1, 3), 3);
        let sq = f.nonzero_squares();
        assert_eq!(sq, vec![false, true, false, false, true]);
    }

    #[test]
    fn f9_has_valid_arithmetic() {
        let f = Gf::new(9).unwrap();
        // multiplicative group has order 8: x^8 = 1 for all nonzero x
        for x in 1..9 {
            let mut y = 1;
            for _ in 0..8 {
                y = f.mul(y, x);
            }
            assert_eq!(y, 1, "x={x}");
        }
        // exactly (q-1)/2 nonzero squares
        let sq = f.nonzero_squares();
        assert_eq!(sq.iter().filter(|&&b| b).count(), 4);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(Gf::new(12).is_err());
        assert!(Gf::new(1).is_err());
    }
}
