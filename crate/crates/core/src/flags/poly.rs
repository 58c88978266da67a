//! Sparse integer polynomials in at most 16 variables, and Schubert
//! polynomials built from `x^δ` by divided differences.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) const MAX_VARS: usize = 16;

pub(crate) type Monomial = [u8; MAX_VARS];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Poly {
    pub(crate) terms: HashMap<Monomial, BigInt>,
}

impl Poly {
    pub(crate) fn monomial(exps: &[u8]) -> Self {
        let mut mono = [0u8; MAX_VARS];
        mono[..exps.len()].copy_from_slice(exps);
        let mut terms = HashMap::new();
        terms.insert(mono, BigInt::one());
        Poly { terms }
    }

    fn add(&mut self, mono: Monomial, coeff: BigInt) {
        let entry = self.terms.entry(mono).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// `∂_i`, acting on variables `i` and `i+1` (0-based).
    pub(crate) fn divided_difference(&self, i: usize) -> Poly {
        let mut out = Poly::default();
        for (mono, c) in &self.terms {
            let (p, q) = (mono[i], mono[i + 1]);
            if p == q {
                continue;
            }
            let (lo, hi, neg) = if p > q { (q, p, false) } else { (p, q, true) };
            for j in 0..(hi - lo) {
                let mut e = *mono;
                e[i] = lo + j;
                e[i + 1] = hi - 1 - j;
                out.add(e, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Product, discarding monomials rejected by `keep`.
    pub(crate) fn mul_pruned(&self, other: &Poly, keep: impl Fn(&Monomial) -> bool) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut e = [0u8; MAX_VARS];
                for v in 0..MAX_VARS {
                    e[v] = ma[v] + mb[v];
                }
                if keep(&e) {
                    out.add(e, ca * cb);
                }
            }
        }
        out
    }
}

static SCHUBERT: LazyLock<DashMap<Vec<u8>, Arc<Poly>>> = LazyLock::new(DashMap::new);

/// The Schubert polynomial of a permutation in one-line notation, values 1-based.
pub(crate) fn schubert_polynomial(images: &[usize]) -> Arc<Poly> {
    let mut w: Vec<u8> = images.iter().map(|&v| v as u8).collect();
    while w.len() > 1 && *w.last().unwrap() as usize == w.len() {
        w.pop();
    }
    if let Some(hit) = SCHUBERT.get(&w) {
        return Arc::clone(&hit);
    }
    let n = w.len();
    let poly = match (0..n.saturating_sub(1)).find(|&i| w[i] < w[i + 1]) {
        None => {
            let delta: Vec<u8> = (0..n).map(|i| (n - 1 - i) as u8).collect();
            Poly::monomial(&delta)
        }
        Some(i) => {
            let mut up: Vec<usize> = w.iter().map(|&v| v as usize).collect();
            up.swap(i, i + 1);
            schubert_polynomial(&up).divided_difference(i)
        }
    };
    let poly = Arc::new(poly);
    SCHUBERT.insert(w, Arc::clone(&poly));
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(&[u8], i64)]) -> Poly {
        let mut p = Poly::default();
        for (e, c) in terms {
            let mut mono = [0u8; MAX_VARS];
            mono[..e.len()].copy_from_slice(e);
            p.add(mono, BigInt::from(*c));
        }
        p
    }

    #[test]
    fn small_schubert_polynomials() {
        assert_eq!(*schubert_polynomial(&[1, 2, 3]), poly(&[(&[], 1)]));
        assert_eq!(*schubert_polynomial(&[2, 1, 3]), poly(&[(&[1], 1)]));
        assert_eq!(*schubert_polynomial(&[1, 3, 2]), poly(&[(&[1], 1), (&[0, 1], 1)]));
        assert_eq!(*schubert_polynomial(&[2, 3, 1]), poly(&[(&[1, 1], 1)]));
        assert_eq!(*schubert_polynomial(&[3, 1, 2]), poly(&[(&[2], 1)]));
        // s_{(1)} in three variables via the Grassmannian permutation [1,2,4,3]
        assert_eq!(
            *schubert_polynomial(&[1, 2, 4, 3]),
            poly(&[(&[1], 1), (&[0, 1], 1), (&[0, 0, 1], 1)])
        );
        // stable under adding fixed points
        assert_eq!(schubert_polynomial(&[2, 1]), schubert_polynomial(&[2, 1, 3, 4]));
    }

    #[test]
    fn divided_difference_kills_symmetric() {
        let p = poly(&[(&[2, 1], 1), (&[1, 2], 1)]);
        assert!(p.divided_difference(0).terms.is_empty());
        let x = poly(&[(&[1], 1)]);
        assert_eq!(x.divided_difference(0), poly(&[(&[], 1)]));
    }
}
