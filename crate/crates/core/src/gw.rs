//! Gromov-Witten divisors from Grassmannians `Gr(r, r+l)`.
//!
//! Degree-one invariants become intersection numbers on `Fl(r−1, r+1; r+l)`
//! of the classes of lines meeting each Schubert variety.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{precondition, Error, Result};
use crate::flags::{flag_intersection, level_d_perm, FlagShape};
use crate::moduli::FCurve;
use crate::partitions::{column_condition, total_rows, total_weight, ColumnCondition, Partition, Rect};
use crate::schur::{grassmannian_intersection, product_in_box};

fn ensure_in_box(tuple: &[Partition], rect: Rect) -> Result<()> {
    if rect.rows == 0 || rect.cols == 0 {
        return Err(precondition("the Grassmannian box needs r, l >= 1"));
    }
    tuple.iter().try_for_each(|lam| lam.ensure_in(rect))
}

fn ensure_critical(tuple: &[Partition], rect: Rect) -> Result<()> {
    let want = (rect.rows + 1) * (rect.cols + 1);
    let got = total_weight(tuple);
    if got != want {
        return Err(precondition(format!(
            "critical level needs weights summing to (r+1)(l+1) = {want}, got {got}"
        )));
    }
    Ok(())
}

/// `I₁(σ_{λ¹}, …, σ_{λⁿ})` on `Gr(r, r+l)`.
pub fn gw_invariant_d1(tuple: &[Partition], rect: Rect) -> Result<BigInt> {
    ensure_in_box(tuple, rect)?;
    let (r, l) = (rect.rows, rect.cols);
    let n = tuple.len();
    let expected = r * l + r + l + n;
    if n < 3 || total_weight(tuple) + 3 != expected {
        return Err(Error::Dimension(format!(
            "{n}-point degree-one invariant needs weights summing to {}, got {}",
            expected.saturating_sub(3),
            total_weight(tuple)
        )));
    }
    // the unit class forces positive-degree invariants to vanish
    if tuple.iter().any(Partition::is_empty) {
        return Ok(BigInt::zero());
    }
    let shape = FlagShape::new(r - 1, r + 1, r + l)?;
    let classes = tuple
        .iter()
        .map(|lam| level_d_perm(lam, r, r + l, 1))
        .collect::<Result<Vec<_>>>()?;
    flag_intersection(&classes, shape)
}

/// Degree on M̄₀,₄ of the degree-one GW divisor of a critical-level 4-tuple.
pub fn gw_divisor_degree_m04(tuple: &[Partition], rect: Rect) -> Result<BigInt> {
    if tuple.len() != 4 {
        return Err(precondition(format!("need four weights, got {}", tuple.len())));
    }
    ensure_in_box(tuple, rect)?;
    ensure_critical(tuple, rect)?;
    gw_invariant_d1(tuple, rect)
}

/// The GW degree next to the product of Grassmannian integrals of the
/// first-column split: `αⁱ` on `Gr(r−1, r+1)`, `βⁱ` on `Gr(r+1, r+l)`.
pub fn gw_column_factorization(tuple: &[Partition], rect: Rect) -> Result<(BigInt, BigInt)> {
    let lhs = gw_divisor_degree_m04(tuple, rect)?;
    if column_condition(tuple, rect) == ColumnCondition::Fails {
        return Err(precondition(format!(
            "row counts sum to {} > 2(r+1)",
            total_rows(tuple)
        )));
    }
    let (r, l) = (rect.rows, rect.cols);
    let (alphas, betas): (Vec<Partition>, Vec<Partition>) = tuple
        .iter()
        .map(|lam| {
            let split = lam.split_first_column();
            (split.alpha, split.beta)
        })
        .unzip();
    let left = grassmannian_intersection(&alphas, Rect::new(r - 1, 2))?;
    let right = grassmannian_intersection(&betas, Rect::new(r + 1, l - 1))?;
    Ok((lhs, left * right))
}

/// The weights of the marked points in block `j` of `fcurve`.
pub(crate) fn block_weights(tuple: &[Partition], fcurve: &FCurve) -> Result<[Vec<Partition>; 4]> {
    if fcurve.n() != tuple.len() {
        return Err(precondition(format!(
            "F-curve on {} points for {} weights",
            fcurve.n(),
            tuple.len()
        )));
    }
    Ok(fcurve
        .blocks()
        .clone()
        .map(|block| block.iter().map(|&i| tuple[i - 1].clone()).collect()))
}

/// One summand of the F-curve formula: the 4-tuple `μ•` and its block factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwSummand {
    pub mu: [Partition; 4],
    pub block_factors: [BigInt; 4],
    pub degree: BigInt,
}

/// Nonzero summands `deg(μ•) · ∏ⱼ ∫ σ_{λ(Nⱼ)} σ_{(μʲ)^∨}` for the pairing
/// with `fcurve`. Candidates `μʲ` come from the support of the box-truncated
/// product of the block weights.
pub fn gw_summands(tuple: &[Partition], rect: Rect, fcurve: &FCurve) -> Result<Vec<GwSummand>> {
    ensure_in_box(tuple, rect)?;
    ensure_critical(tuple, rect)?;
    let blocks = block_weights(tuple, fcurve)?;
    // coefficient of σ_μ in the block product is the pairing with σ_{μ^∨}
    let supports: Vec<Vec<(Partition, BigInt)>> = blocks
        .iter()
        .map(|block| {
            let w = total_weight(block);
            product_in_box(block, rect)
                .iter()
                .filter(|(mu, _)| mu.weight() == w)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for (m0, c0) in &supports[0] {
        for (m1, c1) in &supports[1] {
            for (m2, c2) in &supports[2] {
                for (m3, c3) in &supports[3] {
                    let mu = [m0.clone(), m1.clone(), m2.clone(), m3.clone()];
                    let degree = gw_divisor_degree_m04(&mu, rect)?;
                    if degree.is_zero() {
                        continue;
                    }
                    out.push(GwSummand {
                        mu,
                        block_factors: [c0.clone(), c1.clone(), c2.clone(), c3.clone()],
                        degree,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Intersection of the GW divisor of `tuple` with an F-curve.
pub fn gw_dot_fcurve(tuple: &[Partition], rect: Rect, fcurve: &FCurve) -> Result<BigInt> {
    Ok(gw_summands(tuple, rect, fcurve)?
        .into_iter()
        .map(|s| s.degree * s.block_factors.iter().product::<BigInt>())
        .sum())
}
