//! Schubert calculus on two-step flag varieties `Fl(a, b; m)`.
//!
//! Classes are indexed by permutations of `1..=m` with descents inside
//! `{a, b}`. Intersection numbers are computed with Schubert polynomials in
//! the first `b` variables: the integral of a block-symmetric `f` is the
//! signed sum of the coefficients of `f · x^{δ_a} · x'^{δ_{b−a}}` at the
//! rearrangements of `(m−1, …, m−b)`.

mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{precondition, Error, Result};
use crate::partitions::{Partition, Rect};
use crate::schur::grassmannian_intersection;

use poly::{schubert_polynomial, Monomial, Poly, MAX_VARS};

/// A permutation in one-line notation, values `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            if v == 0 || v > m || seen[v] {
                return Err(Error::Parse {
                    what: "permutation",
                    input: format!("{images:?}"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Positions `i` (1-based) with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "permutation",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let images = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images).map_err(|_| bad())
    }
}

/// `Fl(a, b; m)`. The ends `a = 0` and `b = m` are allowed and give
/// Grassmannians, so that boundary cases of the level-one construction
/// need no special handling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagShape {
    pub a: usize,
    pub b: usize,
    pub m: usize,
}

impl FlagShape {
    pub fn new(a: usize, b: usize, m: usize) -> Result<Self> {
        if a >= b || b > m {
            return Err(precondition(format!("need a < b <= m, got Fl({a},{b};{m})")));
        }
        if m > MAX_VARS {
            return Err(precondition(format!("m = {m} exceeds the supported {MAX_VARS}")));
        }
        Ok(FlagShape { a, b, m })
    }

    pub fn dim(&self) -> usize {
        self.a * (self.b - self.a) + self.b * (self.m - self.b)
    }

    pub fn admits(&self, w: &Permutation) -> bool {
        w.len() == self.m && w.descents().iter().all(|&d| d == self.a || d == self.b)
    }

    fn ensure_admits(&self, w: &Permutation) -> Result<()> {
        if self.admits(w) {
            Ok(())
        } else {
            Err(precondition(format!(
                "{w} is not a Schubert index on Fl({},{};{})",
                self.a, self.b, self.m
            )))
        }
    }

    /// The longest admissible permutation, indexing the point class.
    pub fn point_class(&self) -> Permutation {
        let (a, b, m) = (self.a, self.b, self.m);
        let mut images: Vec<usize> = (m - a + 1..=m).collect();
        images.extend(m - b + 1..=m - a);
        images.extend(1..=m - b);
        Permutation(images)
    }

    /// All admissible permutations, in lexicographic order.
    pub fn schubert_indices(&self) -> Vec<Permutation> {
        fn choose(from: &[usize], k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if from.len() < k {
                return vec![];
            }
            let mut out: Vec<Vec<usize>> = choose(&from[1..], k - 1)
                .into_iter()
                .map(|mut rest| {
                    rest.insert(0, from[0]);
                    rest
                })
                .collect();
            out.extend(choose(&from[1..], k));
            out
        }
        let all: Vec<usize> = (1..=self.m).collect();
        let mut out = Vec::new();
        for first in choose(&all, self.a) {
            let rest: Vec<usize> = all.iter().copied().filter(|v| !first.contains(v)).collect();
            for second in choose(&rest, self.b - self.a) {
                let mut images = first.clone();
                images.extend(&second);
                images.extend(rest.iter().copied().filter(|v| !second.contains(v)));
                out.push(Permutation(images));
            }
        }
        out.sort();
        out
    }

    /// The Poincaré dual index `w0 · w · w0_P`.
    pub fn dual(&self, w: &Permutation) -> Permutation {
        let m = self.m;
        let reverse = |i: usize| -> usize {
            let (lo, hi) = if i < self.a {
                (0, self.a)
            } else if i < self.b {
                (self.a, self.b)
            } else {
                (self.b, m)
            };
            lo + hi - 1 - i
        };
        Permutation((0..m).map(|i| m + 1 - w.0[reverse(i)]).collect())
    }
}

/// `w_λ(i) = λ_{r−i+1} + i` for `i ≤ r`, remaining values increasing.
pub fn grassmann_perm(lambda: &Partition, r: usize, m: usize) -> Result<Permutation> {
    if r > m {
        return Err(precondition(format!("r = {r} exceeds m = {m}")));
    }
    lambda.ensure_in(Rect::new(r, m - r))?;
    let mut images: Vec<usize> = (1..=r).map(|i| lambda.part(r - i) + i).collect();
    let rest: Vec<usize> = (1..=m).filter(|v| !images.contains(v)).collect();
    images.extend(rest);
    Ok(Permutation(images))
}

/// The index of `σ_λ^{(d)}` on `Fl(r−d, r+d; m)`: sort positions
/// `r−d+1 ..= r+d` of the Grassmann permutation.
pub fn level_d_perm(lambda: &Partition, r: usize, m: usize, d: usize) -> Result<Permutation> {
    if d == 0 || d > r || r + d > m {
        return Err(precondition(format!("level {d} out of range for r={r}, m={m}")));
    }
    let mut w = grassmann_perm(lambda, r, m)?;
    w.0[r - d..r + d].sort_unstable();
    Ok(w)
}

/// A Schubert index on `Fl(a, b; m)` written as `α ⊆ a × (b−a)` (from
/// `Gr(a, b)`) and `β ⊆ b × (m−b)` (from `Gr(b, m)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairOfPartitions {
    pub alpha: Partition,
    pub beta: Partition,
    pub shape: FlagShape,
}

impl PairOfPartitions {
    pub fn new(alpha: Partition, beta: Partition, shape: FlagShape) -> Result<Self> {
        alpha.ensure_in(Rect::new(shape.a, shape.b - shape.a))?;
        beta.ensure_in(Rect::new(shape.b, shape.m - shape.b))?;
        Ok(PairOfPartitions { alpha, beta, shape })
    }

    pub fn codim(&self) -> usize {
        self.alpha.weight() + self.beta.weight()
    }
}

/// Writes `w = w₂ w₁` with `w₁` Grassmann at `a` inside `S_b` and `w₂`
/// Grassmann at `b`, and reads `α` off `w₁`, `β` off `w₂`.
pub fn pair_factorization(w: &Permutation, shape: FlagShape) -> Result<PairOfPartitions> {
    shape.ensure_admits(w)?;
    let (a, b, m) = (shape.a, shape.b, shape.m);
    // rho sorts w(1..b)
    let mut rho: Vec<usize> = (1..=b).collect();
    rho.sort_by_key(|&i| w.0[i - 1]);
    rho.extend(b + 1..=m);
    let rho = Permutation(rho);
    let w2 = w.compose(&rho);
    let w1 = rho.inverse();
    let alpha = Partition::from_sorted((1..=a).rev().map(|i| w1.0[i - 1] - i).collect());
    let beta = Partition::from_sorted((1..=b).rev().map(|i| w2.0[i - 1] - i).collect());
    PairOfPartitions::new(alpha, beta, shape)
}

/// Inverse of [`pair_factorization`].
pub fn perm_from_pair(pair: &PairOfPartitions) -> Result<Permutation> {
    let FlagShape { a, b, m } = pair.shape;
    let mut w1 = grassmann_perm(&pair.alpha, a, b)?;
    w1.0.extend(b + 1..=m);
    let w2 = grassmann_perm(&pair.beta, b, m)?;
    Ok(w2.compose(&w1))
}

static INTERSECTIONS: LazyLock<DashMap<(FlagShape, Vec<Permutation>), BigInt>> =
    LazyLock::new(DashMap::new);

/// `∫_{Fl(a,b;m)} ∏ σ_{wⁱ}`.
pub fn flag_intersection(classes: &[Permutation], shape: FlagShape) -> Result<BigInt> {
    for w in classes {
        shape.ensure_admits(w)?;
    }
    let codim: usize = classes.iter().map(Permutation::inversions).sum();
    if codim != shape.dim() {
        return Ok(BigInt::zero());
    }
    let mut key: Vec<Permutation> = classes
        .iter()
        .filter(|w| w.inversions() > 0)
        .cloned()
        .collect();
    key.sort();
    let key = (shape, key);
    if let Some(hit) = INTERSECTIONS.get(&key) {
        return Ok(hit.clone());
    }
    let value = integrate(&key.1, shape);
    INTERSECTIONS.insert(key, value.clone());
    Ok(value)
}

fn integrate(classes: &[Permutation], shape: FlagShape) -> BigInt {
    let FlagShape { a, b, m } = shape;
    // fiber class: staircases on the two blocks of the first b variables
    let fiber: Vec<u8> = (0..a)
        .map(|i| (a - 1 - i) as u8)
        .chain((0..b - a).map(|i| (b - a - 1 - i) as u8))
        .collect();
    let mut acc = Poly::monomial(&fiber);
    // the target exponents are a rearrangement of m-1 .. m-b, so the
    // i-th largest exponent can never exceed m-i
    let keep = |e: &Monomial| -> bool {
        let mut sorted: Vec<u8> = e[..b].to_vec();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        sorted.iter().enumerate().all(|(i, &x)| (x as usize) + i < m)
    };
    let mut polys: Vec<_> = classes.iter().map(|w| schubert_polynomial(&w.0)).collect();
    polys.sort_by_key(|p| p.terms.len());
    for p in polys {
        acc = acc.mul_pruned(&p, keep);
        if acc.terms.is_empty() {
            return BigInt::zero();
        }
    }
    let mut total = BigInt::zero();
    for (mono, c) in &acc.terms {
        let exps: Vec<usize> = mono[..b].iter().map(|&x| x as usize).collect();
        let mut sorted = exps.clone();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        if sorted.iter().enumerate().any(|(i, &x)| x != m - 1 - i) {
            continue;
        }
        let inversions = (0..b)
            .map(|i| (i + 1..b).filter(|&j| exps[i] < exps[j]).count())
            .sum::<usize>();
        if inversions % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    total
}

/// A combination of Schubert classes on one flag variety.
pub type FlagExpansion = BTreeMap<Permutation, BigInt>;

/// Schubert expansion of `∏ σ_{wⁱ}`, by pairing against dual classes.
pub fn flag_multiply(classes: &[Permutation], shape: FlagShape) -> Result<FlagExpansion> {
    let codim: usize = classes.iter().map(Permutation::inversions).sum();
    let mut out = FlagExpansion::new();
    if codim > shape.dim() {
        return Ok(out);
    }
    for w in shape.schubert_indices() {
        if w.inversions() != codim {
            continue;
        }
        let mut with_dual = classes.to_vec();
        with_dual.push(shape.dual(&w));
        let c = flag_intersection(&with_dual, shape)?;
        if !c.is_zero() {
            out.insert(w, c);
        }
    }
    Ok(out)
}

/// `∫_{Gr(a,b)} ∏ σ_{αⁱ} · ∫_{Gr(b,m)} ∏ σ_{βⁱ}`, which agrees with the flag
/// integral of the classes `σ_{αⁱ,βⁱ}` whenever `Σ|αⁱ| ≤ a(b−a)`.
pub fn factorized_intersection(pairs: &[PairOfPartitions]) -> Result<BigInt> {
    let Some(first) = pairs.first() else {
        return Ok(BigInt::zero());
    };
    let shape = first.shape;
    if pairs.iter().any(|p| p.shape != shape) {
        return Err(Error::Dimension("pairs live on different flag varieties".into()));
    }
    let codim: usize = pairs.iter().map(PairOfPartitions::codim).sum();
    if codim != shape.dim() {
        return Ok(BigInt::zero());
    }
    let alpha_total: usize = pairs.iter().map(|p| p.alpha.weight()).sum();
    let top = shape.a * (shape.b - shape.a);
    if alpha_total > top {
        return Err(precondition(format!(
            "alpha weights sum to {alpha_total} > {top}; use flag_intersection"
        )));
    }
    if alpha_total < top {
        return Ok(BigInt::zero());
    }
    let alphas: Vec<Partition> = pairs.iter().map(|p| p.alpha.clone()).collect();
    let betas: Vec<Partition> = pairs.iter().map(|p| p.beta.clone()).collect();
    let left = grassmannian_intersection(&alphas, Rect::new(shape.a, shape.b - shape.a))?;
    if left.is_zero() {
        return Ok(left);
    }
    Ok(left * grassmannian_intersection(&betas, Rect::new(shape.b, shape.m - shape.b))?)
}
