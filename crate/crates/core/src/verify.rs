//! Sweeps comparing GW and conformal-blocks divisors, and checks of the
//! identities that tie them together.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cb::{cb_c1_degree_m04, cb_dot_fcurve, cb_rank, cb_summands, CbBundle};
use crate::error::{precondition, Error, Result};
use crate::gw::{block_weights, gw_divisor_degree_m04, gw_dot_fcurve, gw_summands};
use crate::moduli::{decimal, enumerate_fcurves, FCurve};
use crate::partitions::{column_condition, total_weight, ColumnCondition, Partition, Rect};
use crate::schur::{grassmannian_intersection, product_in_box};

/// Where sweeps get their M̄₀,₄ degrees from. The defaults compute them
/// directly; wrappers can add caching.
pub trait DegreeSource: Sync {
    fn gw_degree(&self, tuple: &[Partition], rect: Rect) -> Result<BigInt> {
        gw_divisor_degree_m04(tuple, rect)
    }

    fn cb_degree(&self, tuple: &[Partition], rect: Rect) -> Result<BigInt> {
        cb_c1_degree_m04(&CbBundle::new(rect.rows, rect.cols, tuple.to_vec())?)
    }
}

/// Computes everything from scratch (modulo in-process memo tables).
#[derive(Debug, Clone, Copy, Default)]
pub struct Direct;

impl DegreeSource for Direct {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// GW and CB totals differ.
    Degree,
    /// Same totals (or not), but the summand-by-summand decomposition differs.
    Summands,
    /// A block integral differs from the corresponding block rank.
    BlockIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    pub tuple: Vec<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fcurve: Option<FCurve>,
    #[serde(with = "decimal")]
    pub gw: BigInt,
    #[serde(with = "decimal")]
    pub cb: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub rect: Rect,
    pub n: usize,
    pub tuples_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// All `n`-tuples of partitions in `rect` with total weight `(r+1)(l+1)`.
/// With `up_to_symmetry`, one representative per multiset, in descending
/// order within each tuple.
pub fn critical_tuples(rect: Rect, n: usize, up_to_symmetry: bool) -> Vec<Vec<Partition>> {
    struct Walk {
        shapes: Vec<Partition>,
        max_weight: usize,
        symmetric: bool,
        out: Vec<Vec<Partition>>,
    }

    impl Walk {
        fn go(&mut self, from: usize, left: usize, slots: usize, current: &mut Vec<Partition>) {
            if slots == 0 {
                if left == 0 {
                    self.out.push(current.clone());
                }
                return;
            }
            if left > slots * self.max_weight {
                return;
            }
            let start = if self.symmetric { from } else { 0 };
            for i in start..self.shapes.len() {
                let w = self.shapes[i].weight();
                if w > left {
                    continue;
                }
                current.push(self.shapes[i].clone());
                self.go(i, left - w, slots - 1, current);
                current.pop();
            }
        }
    }

    let mut shapes = rect.partitions();
    shapes.sort_by(|a, b| b.cmp(a));
    let mut walk = Walk {
        shapes,
        max_weight: rect.area(),
        symmetric: up_to_symmetry,
        out: Vec::new(),
    };
    walk.go(0, (rect.rows + 1) * (rect.cols + 1), n, &mut Vec::with_capacity(n));
    walk.out
}

fn finish(rect: Rect, n: usize, tuples_checked: usize, mut mismatches: Vec<Mismatch>, start: Instant) -> SweepReport {
    mismatches.sort();
    SweepReport {
        rect,
        n,
        tuples_checked,
        mismatches,
        elapsed: start.elapsed(),
    }
}

/// Compares the GW and CB divisors of every critical-level tuple: by their
/// degree when `n = 4`, and on every F-curve otherwise.
pub fn sweep_conjecture<S>(source: &S, rect: Rect, n: usize, up_to_symmetry: bool) -> Result<SweepReport>
where
    S: DegreeSource + ?Sized,
{
    if n < 4 {
        return Err(precondition(format!("sweeps need n >= 4, got {n}")));
    }
    let start = Instant::now();
    let tuples = critical_tuples(rect, n, up_to_symmetry);
    let fcurves = if n > 4 { enumerate_fcurves(n)? } else { Vec::new() };
    let per_tuple: Vec<Vec<Mismatch>> = tuples
        .par_iter()
        .map(|tuple| {
            let mut found = Vec::new();
            if n == 4 {
                let gw = source.gw_degree(tuple, rect)?;
                let cb = source.cb_degree(tuple, rect)?;
                if gw != cb {
                    found.push(Mismatch {
                        kind: MismatchKind::Degree,
                        tuple: tuple.clone(),
                        fcurve: None,
                        gw,
                        cb,
                    });
                }
                return Ok(found);
            }
            let bundle = CbBundle::new(rect.rows, rect.cols, tuple.clone())?;
            for fcurve in &fcurves {
                let gw = gw_dot_fcurve(tuple, rect, fcurve)?;
                let cb = cb_dot_fcurve(&bundle, fcurve)?;
                if gw != cb {
                    found.push(Mismatch {
                        kind: MismatchKind::Degree,
                        tuple: tuple.clone(),
                        fcurve: Some(fcurve.clone()),
                        gw,
                        cb,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    Ok(finish(rect, n, tuples.len(), per_tuple.into_iter().flatten().collect(), start))
}

/// Pairs every critical-level `n`-tuple with every F-curve and compares the
/// GW and CB sides summand by summand. Also checks, for each block and each
/// `μ` of the block weight, that the Grassmannian integral
/// `∫ σ_{λ(Nⱼ)} σ_{μ^∨}` equals the rank of `𝕍(λ(Nⱼ) ∪ μ*, l)`.
pub fn reduction_consistency(rect: Rect, n: usize) -> Result<SweepReport> {
    if n < 4 {
        return Err(precondition(format!("need n >= 4, got {n}")));
    }
    let start = Instant::now();
    let (r, l) = (rect.rows, rect.cols);
    let tuples = critical_tuples(rect, n, false);
    let fcurves = enumerate_fcurves(n)?;
    let per_tuple: Vec<Vec<Mismatch>> = tuples
        .par_iter()
        .map(|tuple| {
            let mut found = Vec::new();
            let bundle = CbBundle::new(r, l, tuple.clone())?;
            for fcurve in &fcurves {
                let gw_terms: BTreeMap<[Partition; 4], BigInt> = gw_summands(tuple, rect, fcurve)?
                    .into_iter()
                    .map(|s| (s.mu, s.degree * s.block_factors.iter().product::<BigInt>()))
                    .collect();
                let cb_terms: BTreeMap<[Partition; 4], BigInt> = cb_summands(&bundle, fcurve)?
                    .into_iter()
                    .map(|s| (s.nu, s.degree * s.block_ranks.iter().product::<BigInt>()))
                    .collect();
                let gw: BigInt = gw_terms.values().sum();
                let cb: BigInt = cb_terms.values().sum();
                let kind = if gw != cb {
                    Some(MismatchKind::Degree)
                } else if gw_terms != cb_terms {
                    Some(MismatchKind::Summands)
                } else {
                    None
                };
                if let Some(kind) = kind {
                    found.push(Mismatch {
                        kind,
                        tuple: tuple.clone(),
                        fcurve: Some(fcurve.clone()),
                        gw,
                        cb,
                    });
                }
                for block in block_weights(tuple, fcurve)? {
                    for mu in rect.partitions_of_weight(total_weight(&block)) {
                        let mut gw_side = block.clone();
                        gw_side.push(mu.dual_in_box(rect)?);
                        let mut cb_side = block.clone();
                        cb_side.push(mu.star_dual(r)?);
                        let gw = grassmannian_intersection(&gw_side, rect)?;
                        let cb = cb_rank(&CbBundle::new(r, l, cb_side)?)?;
                        if gw != cb {
                            gw_side.pop();
                            gw_side.push(mu);
                            found.push(Mismatch {
                                kind: MismatchKind::BlockIdentity,
                                tuple: gw_side,
                                fcurve: None,
                                gw,
                                cb,
                            });
                        }
                    }
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    let mut mismatches: Vec<Mismatch> = per_tuple.into_iter().flatten().collect();
    mismatches.dedup();
    Ok(finish(rect, n, tuples.len(), mismatches, start))
}

/// A decomposition of the marked points and a 4-tuple `μ•` witnessing that
/// the GW and CB divisors are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub fcurve: FCurve,
    pub mu: [Partition; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CertificateSearch {
    Found(Certificate),
    /// The whole candidate space was searched without success. This says
    /// nothing about whether the divisor vanishes.
    NotFound { examined: usize },
    BudgetExhausted { examined: usize },
}

/// The three conditions on a candidate: positivity in the block products,
/// heights summing to `2r+2`, and a nonzero product of the `βʲ` (the `μʲ`
/// minus their first columns) on `Gr(r+1, r+l)`.
pub fn certificate_conditions_hold(tuple: &[Partition], rect: Rect, cert: &Certificate) -> Result<bool> {
    let (r, l) = (rect.rows, rect.cols);
    let blocks = block_weights(tuple, &cert.fcurve)?;
    for (block, mu) in blocks.iter().zip(&cert.mu) {
        if !product_in_box(block, rect).coefficient(mu).is_positive() {
            return Ok(false);
        }
    }
    holds_heights_and_betas(&cert.mu, r, l)
}

fn holds_heights_and_betas(mu: &[Partition; 4], r: usize, l: usize) -> Result<bool> {
    if mu.iter().map(Partition::num_rows).sum::<usize>() != 2 * r + 2 {
        return Ok(false);
    }
    let betas: Vec<Partition> = mu.iter().map(Partition::remove_first_column).collect();
    let beta_box = Rect::new(r + 1, l - 1);
    if betas.iter().any(|b| !b.fits_in(beta_box)) {
        return Ok(false);
    }
    Ok(grassmannian_intersection(&betas, beta_box)?.is_positive())
}

/// GW and CB degrees of `tuple` on the certificate's F-curve.
pub fn certificate_degrees(tuple: &[Partition], rect: Rect, cert: &Certificate) -> Result<(BigInt, BigInt)> {
    let gw = gw_dot_fcurve(tuple, rect, &cert.fcurve)?;
    let bundle = CbBundle::new(rect.rows, rect.cols, tuple.to_vec())?;
    let cb = cb_dot_fcurve(&bundle, &cert.fcurve)?;
    Ok((gw, cb))
}

/// Searches for a nonvanishing certificate. `budget` caps the number of
/// (decomposition, `μ•`) pairs examined. A certificate is re-verified by
/// evaluating both divisors on its F-curve before it is returned.
pub fn nonvanishing_certificate(tuple: &[Partition], rect: Rect, budget: usize) -> Result<CertificateSearch> {
    let (r, l) = (rect.rows, rect.cols);
    if r == 0 || l == 0 {
        return Err(precondition("the Grassmannian box needs r, l >= 1"));
    }
    for lam in tuple {
        lam.ensure_in(rect)?;
    }
    if total_weight(tuple) != (r + 1) * (l + 1) {
        return Err(precondition("weights must sum to (r+1)(l+1)"));
    }
    let mut examined = 0;
    for fcurve in enumerate_fcurves(tuple.len())? {
        let blocks = block_weights(tuple, &fcurve)?;
        let supports: Vec<Vec<Partition>> = blocks
            .iter()
            .map(|block| {
                let w = total_weight(block);
                product_in_box(block, rect)
                    .iter()
                    .filter(|(mu, c)| mu.weight() == w && c.is_positive())
                    .map(|(mu, _)| mu.clone())
                    .collect()
            })
            .collect();
        for m0 in &supports[0] {
            for m1 in &supports[1] {
                for m2 in &supports[2] {
                    for m3 in &supports[3] {
                        if examined == budget {
                            return Ok(CertificateSearch::BudgetExhausted { examined });
                        }
                        examined += 1;
                        let mu = [m0.clone(), m1.clone(), m2.clone(), m3.clone()];
                        if !holds_heights_and_betas(&mu, r, l)? {
                            continue;
                        }
                        let cert = Certificate {
                            fcurve: fcurve.clone(),
                            mu,
                        };
                        let (gw, cb) = certificate_degrees(tuple, rect, &cert)?;
                        if !gw.is_positive() || !cb.is_positive() {
                            return Err(Error::Internal(format!(
                                "certificate {cert:?} for {tuple:?} gives degrees gw={gw}, cb={cb}"
                            )));
                        }
                        return Ok(CertificateSearch::Found(cert));
                    }
                }
            }
        }
    }
    Ok(CertificateSearch::NotFound { examined })
}

/// The nonvanishing family built from `m`-row rectangles: `l` odd, `2m`
/// dividing `r+1`, `n = (2r+2)/m` copies of the `m × (l+1)/2` rectangle.
/// Returns the tuple and the certificate the construction predicts.
pub fn rectangle_family(m: usize, r: usize, l: usize) -> Result<(Vec<Partition>, Certificate)> {
    if m == 0 || l.is_multiple_of(2) || !(r + 1).is_multiple_of(2 * m) {
        return Err(precondition(format!(
            "need l odd and 2m | r+1, got m={m}, r={r}, l={l}"
        )));
    }
    let n = (2 * r + 2) / m;
    let width = l.div_ceil(2);
    let tuple = vec![Partition::rectangle(m, width); n];
    let per_block = n / 4;
    let blocks: Vec<Vec<usize>> = (0..4)
        .map(|j| (j * per_block + 1..=(j + 1) * per_block).collect())
        .collect();
    let mu = Partition::rectangle(r.div_ceil(2), width);
    let cert = Certificate {
        fcurve: FCurve::new(blocks)?,
        mu: [mu.clone(), mu.clone(), mu.clone(), mu],
    };
    Ok((tuple, cert))
}

/// `((1), (1), (l, 1^{r−1}), (l^r))`.
pub fn degree_one_tuple(r: usize, l: usize) -> Vec<Partition> {
    let mut hook = vec![l];
    hook.extend(std::iter::repeat_n(1, r - 1));
    vec![
        Partition::column(1),
        Partition::column(1),
        Partition::new(hook).expect("hook is a partition"),
        Partition::rectangle(r, l),
    ]
}

/// Degree of the GW and CB divisors of [`degree_one_tuple`]. Both must be 1.
pub fn family_degree_one(r: usize, l: usize) -> Result<BigInt> {
    if r == 0 || l == 0 {
        return Err(precondition("need r, l >= 1"));
    }
    let tuple = degree_one_tuple(r, l);
    let rect = Rect::new(r, l);
    let gw = Direct.gw_degree(&tuple, rect)?;
    let cb = Direct.cb_degree(&tuple, rect)?;
    if gw != cb || !gw.is_one() {
        return Err(Error::Disagreement {
            what: format!("degree-one family at r={r}, l={l} (gw vs cb)"),
            lhs: gw,
            rhs: cb,
        });
    }
    Ok(gw)
}

/// The tuple obtained by adding a full top row to `λ¹` and one box under
/// the first column of `λ²`.
pub fn addrow_tuple(tuple: &[Partition], l: usize) -> Vec<Partition> {
    let mut out = tuple.to_vec();
    out[0] = tuple[0].with_top_row(l);
    out[1] = tuple[1].with_box_below();
    out
}

/// `deg c₁ 𝕍(sl_{r+1}, λ•, l)` next to `deg c₁ 𝕍(sl_{r+2}, μ•, l)` for the
/// tuple `μ•` of [`addrow_tuple`].
pub fn addrow_identity(tuple: &[Partition], r: usize, l: usize) -> Result<(BigInt, BigInt)> {
    if tuple.len() != 4 {
        return Err(precondition(format!("need four weights, got {}", tuple.len())));
    }
    let rect = Rect::new(r, l);
    for lam in tuple {
        lam.ensure_in(rect)?;
    }
    if tuple.windows(2).any(|w| w[0].num_rows() < w[1].num_rows()) {
        return Err(precondition("weights must be ordered by decreasing number of rows"));
    }
    if column_condition(tuple, rect) == ColumnCondition::Fails {
        return Err(precondition("the column condition fails"));
    }
    let lifted = addrow_tuple(tuple, l);
    debug_assert_ne!(column_condition(&lifted, Rect::new(r + 1, l)), ColumnCondition::Fails);
    let lhs = Direct.cb_degree(tuple, rect)?;
    let rhs = Direct.cb_degree(&lifted, Rect::new(r + 1, l))?;
    Ok((lhs, rhs))
}

/// Tuples satisfying the column condition, rows in decreasing order, for
/// each `r, l ≤ bound`.
pub fn addrow_instances(bound: usize) -> Vec<(usize, usize, Vec<Partition>)> {
    let mut out = Vec::new();
    for r in 1..=bound {
        for l in 1..=bound {
            let rect = Rect::new(r, l);
            for mut tuple in critical_tuples(rect, 4, true) {
                if column_condition(&tuple, rect) == ColumnCondition::Fails {
                    continue;
                }
                tuple.sort_by(|a, b| b.num_rows().cmp(&a.num_rows()).then_with(|| b.cmp(a)));
                out.push((r, l, tuple));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_tuple;

    fn t(s: &str) -> Vec<Partition> {
        parse_tuple(s).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn tuple_enumeration() {
        // every tuple has the right weight and no duplicates
        let rect = Rect::new(2, 2);
        let all = critical_tuples(rect, 4, false);
        let reps = critical_tuples(rect, 4, true);
        for tuple in &all {
            assert_eq!(total_weight(tuple), 9);
        }
        let mut canon: Vec<Vec<Partition>> = all
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.sort_by(|a, b| b.cmp(a));
                t
            })
            .collect();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), reps.len());
        // brute force over 6^4 ordered tuples
        let shapes = rect.partitions();
        let mut count = 0;
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    for d in &shapes {
                        if a.weight() + b.weight() + c.weight() + d.weight() == 9 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(all.len(), count);
        // in the 1x1 box only (1)^4 is critical
        assert_eq!(critical_tuples(Rect::new(1, 1), 4, true), vec![t("[1];[1];[1];[1]")]);
        // weight-1 shapes only: C(n, 4) arrangements of four (1)s among n slots
        assert_eq!(critical_tuples(Rect::new(1, 1), 6, false).len(), binomial(6, 4));
    }

    #[test]
    fn small_sweeps() {
        let report = sweep_conjecture(&Direct, Rect::new(1, 1), 4, true).unwrap();
        assert_eq!(report.tuples_checked, 1);
        assert!(report.verified());
        let report = sweep_conjecture(&Direct, Rect::new(2, 2), 4, true).unwrap();
        assert!(report.tuples_checked > 10);
        assert!(report.verified(), "{:?}", report.mismatches);
        let report = sweep_conjecture(&Direct, Rect::new(1, 2), 5, true).unwrap();
        assert!(report.verified(), "{:?}", report.mismatches);
    }

    #[test]
    fn sweeps_report_mismatches() {
        struct Skewed;
        impl DegreeSource for Skewed {
            fn cb_degree(&self, tuple: &[Partition], rect: Rect) -> Result<BigInt> {
                Ok(Direct.cb_degree(tuple, rect)? + 1)
            }
        }
        let report = sweep_conjecture(&Skewed, Rect::new(2, 2), 4, true).unwrap();
        assert_eq!(report.mismatches.len(), report.tuples_checked);
        assert!(report.mismatches.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn reduction_small() {
        let report = reduction_consistency(Rect::new(1, 2), 5).unwrap();
        assert!(report.verified(), "{:?}", report.mismatches);
    }

    #[test]
    fn certificates() {
        let rect = Rect::new(1, 1);
        let tuple = t("[1];[1];[1];[1]");
        match nonvanishing_certificate(&tuple, rect, 100).unwrap() {
            CertificateSearch::Found(cert) => {
                assert_eq!(cert.mu, [Partition::column(1), Partition::column(1), Partition::column(1), Partition::column(1)]);
                assert!(certificate_conditions_hold(&tuple, rect, &cert).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            nonvanishing_certificate(&tuple, rect, 0).unwrap(),
            CertificateSearch::BudgetExhausted { examined: 0 }
        );
        // strictly below the column condition both divisors vanish
        let zero = t("[2,2];[2,2];[1];[]");
        assert!(matches!(
            nonvanishing_certificate(&zero, Rect::new(2, 2), 1000).unwrap(),
            CertificateSearch::NotFound { .. }
        ));
    }

    #[test]
    fn rectangle_family_construction() {
        let (tuple, cert) = rectangle_family(1, 1, 1).unwrap();
        assert_eq!(tuple, t("[1];[1];[1];[1]"));
        assert_eq!(cert.fcurve.to_string(), "{1|2|3|4}");
        let (tuple, cert) = rectangle_family(2, 3, 3).unwrap();
        assert_eq!(tuple, t("[2,2];[2,2];[2,2];[2,2]"));
        assert_eq!(cert.mu[0], Partition::rectangle(2, 2));
        assert!(certificate_conditions_hold(&tuple, Rect::new(3, 3), &cert).unwrap());
        let (tuple, cert) = rectangle_family(1, 3, 1).unwrap();
        assert_eq!(tuple.len(), 8);
        assert_eq!(cert.fcurve.to_string(), "{1,2|3,4|5,6|7,8}");
        assert!(rectangle_family(1, 2, 1).is_err());
        assert!(rectangle_family(1, 1, 2).is_err());
    }

    #[test]
    fn degree_one_small() {
        for r in 1..=3 {
            for l in 1..=3 {
                assert_eq!(family_degree_one(r, l).unwrap(), BigInt::one(), "r={r} l={l}");
            }
        }
    }

    #[test]
    fn addrow_examples() {
        let (a, b) = addrow_identity(&t("[2,2];[2,1];[1];[1]"), 2, 2).unwrap();
        assert_eq!(addrow_tuple(&t("[2,2];[2,1];[1];[1]"), 2), t("[2,2,2];[2,1,1];[1];[1]"));
        assert_eq!(a, b);
        let strict = t("[2,2];[2,2];[1];[]");
        assert_eq!(addrow_identity(&strict, 2, 2).unwrap(), (BigInt::from(0), BigInt::from(0)));
        assert!(addrow_identity(&t("[1];[2,1];[2,2];[1]"), 2, 2).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let report = SweepReport {
            rect: Rect::new(2, 2),
            n: 4,
            tuples_checked: 3,
            mismatches: vec![Mismatch {
                kind: MismatchKind::Degree,
                tuple: t("[2,2];[2,1];[1];[1]"),
                fcurve: Some("{1|2|3|4}".parse().unwrap()),
                gw: BigInt::from(1),
                cb: BigInt::from(2),
            }],
            elapsed: Duration::from_millis(12),
        };
        let json = serde_json::to_string(&report).unwrap();
        let back: SweepReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
