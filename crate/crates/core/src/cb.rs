//! Conformal-blocks bundles `𝕍(sl_{r+1}, λ•, l)` on M̄₀,ₙ: ranks through
//! Schubert calculus, conformal weights, and first-Chern degrees.

use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{precondition, Error, Result};
use crate::gw::block_weights;
use crate::moduli::FCurve;
use crate::partitions::{total_rows, total_weight, Partition, Rect};
use crate::quantum::quantum_lr_coefficient;
use crate::schur::generalized_lr;

/// `𝕍(sl_{r+1}, λ•, l)`. Weights are partitions with width at most `l`;
/// columns of full height `r+1` are the trivial representation and are
/// stripped on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CbBundle {
    r: usize,
    level: usize,
    weights: Vec<Partition>,
}

impl CbBundle {
    pub fn new(r: usize, level: usize, weights: Vec<Partition>) -> Result<Self> {
        if r == 0 {
            return Err(precondition("sl_{r+1} needs r >= 1"));
        }
        let weights = weights
            .into_iter()
            .map(|lam| {
                if lam.num_rows() > r + 1 || lam.width() > level {
                    return Err(Error::NotInBox {
                        partition: lam.to_string(),
                        rows: r,
                        cols: level,
                    });
                }
                Ok(lam.strip_full_columns(r + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CbBundle { r, level, weights })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn weights(&self) -> &[Partition] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    fn rect(&self) -> Rect {
        Rect::new(self.r, self.level)
    }
}

/// `c(sl_{r+1}, λ•) = −1 + Σ|λⁱ| / (r+1)`.
pub fn critical_level(tuple: &[Partition], r: usize) -> BigRational {
    BigRational::new(BigInt::from(total_weight(tuple)), BigInt::from(r + 1)) - BigRational::one()
}

pub fn is_critical(tuple: &[Partition], r: usize, l: usize) -> bool {
    critical_level(tuple, r) == BigRational::from_integer(BigInt::from(l))
}

pub fn is_above_critical(tuple: &[Partition], r: usize, l: usize) -> bool {
    BigRational::from_integer(BigInt::from(l)) > critical_level(tuple, r)
}

/// Memo keyed by `(r, level, weights)`.
type Memo = LazyLock<DashMap<(usize, usize, Vec<Partition>), BigInt>>;

static RANKS: Memo = LazyLock::new(DashMap::new);

/// Rank of the bundle, read off classical or quantum Schubert calculus
/// depending on the sign of `s` in `Σ|λⁱ| = (r+1)(l+s)`.
pub fn cb_rank(bundle: &CbBundle) -> Result<BigInt> {
    let (r, l) = (bundle.r, bundle.level);
    let mut key: Vec<Partition> = bundle.weights.iter().filter(|w| !w.is_empty()).cloned().collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    let total = total_weight(&key);
    if !total.is_multiple_of(r + 1) {
        return Ok(BigInt::zero());
    }
    let cache_key = (r, l, key);
    if let Some(hit) = RANKS.get(&cache_key) {
        return Ok(hit.clone());
    }
    let weights = &cache_key.2;
    let t = total / (r + 1);
    let rank = if t <= l {
        generalized_lr(weights, &Partition::rectangle(r + 1, t))
    } else {
        let s = t - l;
        let mut extended = weights.clone();
        extended.extend(std::iter::repeat_n(Partition::rectangle(1, l), s));
        quantum_lr_coefficient(&extended, s, &Partition::rectangle(r + 1, l), r + 1, r + 1 + l)?
    };
    RANKS.insert(cache_key, rank.clone());
    Ok(rank)
}

/// Rank via the quantum branch, also valid at `s = 0`; used to check that
/// the two branches agree there.
pub fn cb_rank_quantum(bundle: &CbBundle) -> Result<BigInt> {
    let (r, l) = (bundle.r, bundle.level);
    let total = total_weight(&bundle.weights);
    if !total.is_multiple_of(r + 1) || total / (r + 1) < l {
        return Err(precondition("the quantum branch needs Σ|λ| = (r+1)(l+s) with s >= 0"));
    }
    let s = total / (r + 1) - l;
    let mut extended = bundle.weights.clone();
    extended.extend(std::iter::repeat_n(Partition::rectangle(1, l), s));
    quantum_lr_coefficient(&extended, s, &Partition::rectangle(r + 1, l), r + 1, r + 1 + l)
}

/// `Δ_λ = c(λ) / (2(l+r+1))` with `c(λ) = Σ λᵢ(λᵢ + r + 2 − 2i) − |λ|²/(r+1)`.
pub fn conformal_weight(lambda: &Partition, r: usize, l: usize) -> Result<BigRational> {
    lambda.ensure_in(Rect::new(r, l))?;
    let mut casimir = BigRational::zero();
    for (i, &part) in lambda.parts().iter().enumerate() {
        let part = part as i64;
        let row = i as i64 + 1;
        casimir += BigRational::from_integer(BigInt::from(part * (part + r as i64 + 2 - 2 * row)));
    }
    let w = BigInt::from(lambda.weight());
    casimir -= BigRational::new(&w * &w, BigInt::from(r + 1));
    Ok(casimir / BigRational::from_integer(BigInt::from(2 * (l + r + 1))))
}

/// Highest weight of the dual representation: `μ*ᵢ = λ₁ − λ_{r+2−i}`,
/// the complement of `λ` in the `(r+1) × λ₁` rectangle.
pub fn dual_weight(lambda: &Partition, r: usize) -> Result<Partition> {
    if lambda.num_rows() > r {
        return Err(precondition(format!("{lambda} has more than {r} rows")));
    }
    lambda.star_dual(r)
}

static DEGREES: Memo = LazyLock::new(DashMap::new);

const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

/// Degree of `c₁ 𝕍` on M̄₀,₄.
pub fn cb_c1_degree_m04(bundle: &CbBundle) -> Result<BigInt> {
    if bundle.n() != 4 {
        return Err(precondition(format!("need four weights, got {}", bundle.n())));
    }
    let (r, l) = (bundle.r, bundle.level);
    let rect = bundle.rect();
    for w in &bundle.weights {
        w.ensure_in(rect)?;
    }
    let mut key = bundle.weights.clone();
    key.sort_unstable_by(|a, b| b.cmp(a));
    let cache_key = (r, l, key);
    if let Some(hit) = DEGREES.get(&cache_key) {
        return Ok(hit.clone());
    }
    let weights = &bundle.weights;
    let rank = cb_rank(bundle)?;
    let mut degree = BigRational::zero();
    if !rank.is_zero() {
        let mut delta_sum = BigRational::zero();
        for w in weights {
            delta_sum += conformal_weight(w, r, l)?;
        }
        degree += delta_sum * BigRational::from_integer(rank);
    }
    let three = |a: &Partition, b: &Partition, c: &Partition| -> Result<BigInt> {
        cb_rank(&CbBundle::new(r, l, vec![a.clone(), b.clone(), c.clone()])?)
    };
    for [a, b, c, d] in PAIRINGS {
        let residue = (weights[a].weight() + weights[b].weight()) % (r + 1);
        for mu in rect.partitions() {
            if !(mu.weight() + residue).is_multiple_of(r + 1) {
                continue;
            }
            let left = three(&weights[a], &weights[b], &mu)?;
            if left.is_zero() {
                continue;
            }
            let right = three(&weights[c], &weights[d], &dual_weight(&mu, r)?)?;
            if right.is_zero() {
                continue;
            }
            degree -= conformal_weight(&mu, r, l)? * BigRational::from_integer(left * right);
        }
    }
    if !degree.is_integer() || degree.is_negative() {
        return Err(Error::Internal(format!(
            "degree of c1 for sl_{} level {l} weights {weights:?} came out as {degree}",
            r + 1
        )));
    }
    let degree = degree.to_integer();
    DEGREES.insert(cache_key, degree.clone());
    Ok(degree)
}

/// One summand of the F-curve formula for `c₁ 𝕍`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CbSummand {
    pub nu: [Partition; 4],
    pub block_ranks: [BigInt; 4],
    pub degree: BigInt,
}

/// Nonzero summands `deg(ν•) · ∏ⱼ Rk 𝕍(λ(Nⱼ) ∪ (νʲ)*, l)` with
/// `|νʲ| = Σ_{i∈Nⱼ} |λⁱ|`.
pub fn cb_summands(bundle: &CbBundle, fcurve: &FCurve) -> Result<Vec<CbSummand>> {
    let (r, l) = (bundle.r, bundle.level);
    if !is_critical(&bundle.weights, r, l) {
        return Err(precondition("F-curve pairing needs a critical-level bundle"));
    }
    let rect = bundle.rect();
    let blocks = block_weights(&bundle.weights, fcurve)?;
    let candidates: Vec<Vec<(Partition, BigInt)>> = blocks
        .iter()
        .map(|block| {
            let mut out = Vec::new();
            for nu in rect.partitions_of_weight(total_weight(block)) {
                let mut with_dual = block.clone();
                with_dual.push(nu.star_dual(r)?);
                let rank = cb_rank(&CbBundle::new(r, l, with_dual)?)?;
                if !rank.is_zero() {
                    out.push((nu, rank));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (n0, k0) in &candidates[0] {
        for (n1, k1) in &candidates[1] {
            for (n2, k2) in &candidates[2] {
                for (n3, k3) in &candidates[3] {
                    let nu = [n0.clone(), n1.clone(), n2.clone(), n3.clone()];
                    let degree = cb_c1_degree_m04(&CbBundle::new(r, l, nu.to_vec())?)?;
                    if degree.is_zero() {
                        continue;
                    }
                    out.push(CbSummand {
                        nu,
                        block_ranks: [k0.clone(), k1.clone(), k2.clone(), k3.clone()],
                        degree,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Intersection of `c₁ 𝕍` with an F-curve, for a critical-level bundle.
pub fn cb_dot_fcurve(bundle: &CbBundle, fcurve: &FCurve) -> Result<BigInt> {
    Ok(cb_summands(bundle, fcurve)?
        .into_iter()
        .map(|s| s.degree * s.block_ranks.iter().product::<BigInt>())
        .sum())
}

fn ensure_column_equality(tuple: &[Partition], r: usize, l: usize) -> Result<()> {
    let rect = Rect::new(r, l);
    for w in tuple {
        w.ensure_in(rect)?;
    }
    if total_weight(tuple) != (r + 1) * (l + 1) {
        return Err(precondition("weights must sum to (r+1)(l+1)"));
    }
    if total_rows(tuple) != 2 * (r + 1) {
        return Err(precondition("row counts must sum to 2(r+1)"));
    }
    Ok(())
}

/// Rank at the critical level as a single classical coefficient of
/// `(l^{r+1}, 1^{r+1})`, valid when `Σ#λⁱ = 2(r+1)`.
pub fn newwitten_rank(tuple: &[Partition], r: usize, l: usize) -> Result<BigInt> {
    ensure_column_equality(tuple, r, l)?;
    let mut target = vec![l; r + 1];
    target.extend(std::iter::repeat_n(1, r + 1));
    Ok(generalized_lr(tuple, &Partition::new(target)?))
}

/// `deg c₁ 𝕍(λ•, l)` next to `deg c₁ 𝕍(ᾱ•, 1) · Rk 𝕍(β•, l−1)`, where `ᾱⁱ`
/// is the first column of `λⁱ` and `βⁱ` the rest.
pub fn critical_identity(tuple: &[Partition], r: usize, l: usize) -> Result<(BigInt, BigInt)> {
    if tuple.len() != 4 {
        return Err(precondition(format!("need four weights, got {}", tuple.len())));
    }
    ensure_column_equality(tuple, r, l)?;
    let lhs = cb_c1_degree_m04(&CbBundle::new(r, l, tuple.to_vec())?)?;
    let (columns, betas): (Vec<Partition>, Vec<Partition>) = tuple
        .iter()
        .map(|lam| {
            let split = lam.split_first_column();
            (split.column, split.beta)
        })
        .unzip();
    let rank = cb_rank(&CbBundle::new(r, l - 1, betas)?)?;
    let rhs = if rank.is_zero() {
        rank
    } else {
        cb_c1_degree_m04(&CbBundle::new(r, 1, columns)?)? * rank
    };
    Ok((lhs, rhs))
}

/// `deg c₁ 𝕍(sl_{r+1}, λ•, l)` next to `deg c₁ 𝕍(sl_{l+1}, (λᵀ)•, r)`.
pub fn transpose_symmetry_check(tuple: &[Partition], r: usize, l: usize) -> Result<(BigInt, BigInt)> {
    if tuple.len() != 4 {
        return Err(precondition(format!("need four weights, got {}", tuple.len())));
    }
    if !is_critical(tuple, r, l) && !is_above_critical(tuple, r, l) {
        return Err(precondition("level is below the critical level"));
    }
    let lhs = cb_c1_degree_m04(&CbBundle::new(r, l, tuple.to_vec())?)?;
    let transposed: Vec<Partition> = tuple.iter().map(Partition::transpose).collect();
    let rhs = cb_c1_degree_m04(&CbBundle::new(l, r, transposed)?)?;
    Ok((lhs, rhs))
}
