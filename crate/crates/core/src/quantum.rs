//! Small quantum cohomology of Grassmannians `QH*Gr(k, m)`.
//!
//! Classes are indexed by partitions in the `k × (m−k)` box. A classical Schur
//! product is pushed into the quantum ring by stripping `m`-rim-hooks. Shapes
//! here keep width at most `m−k` and may grow in length, so hooks are removed
//! from the bottom of the diagram. On the abacus of the transpose (one bead
//! per column) a hook removal slides a bead down by `m`; the sign is the
//! parity of the beads it jumps over, shifted by `m−k−1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{precondition, Error, Result};
use crate::partitions::{total_rows, total_weight, Partition, Rect};
use crate::schur::{generalized_lr, multiply_pair_bounded, Bound};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RimHookReduction {
    Zero,
    Reduced {
        sign: i8,
        degree: usize,
        shape: Partition,
    },
}

/// Reduces `lambda` into the `k × (m−k)` box by `m`-rim-hook removal.
pub fn rim_hook_reduce(lambda: &Partition, k: usize, m: usize) -> Result<RimHookReduction> {
    if k == 0 || m <= k {
        return Err(precondition(format!("need m > k >= 1, got k={k}, m={m}")));
    }
    let cols = m - k;
    if lambda.width() > cols {
        return Ok(RimHookReduction::Zero);
    }
    // beta numbers of the transpose, one bead per column
    let conj = lambda.transpose();
    let mut beads: Vec<usize> = (0..cols).map(|i| conj.part(i) + cols - 1 - i).collect();
    let mut negative = false;
    let mut degree = 0;
    while let Some(pos) = beads.iter().position(|&b| b >= m) {
        let from = beads[pos];
        let to = from - m;
        if beads.contains(&to) {
            return Ok(RimHookReduction::Zero);
        }
        let jumped = beads.iter().filter(|&&b| b > to && b < from).count();
        if (cols - 1 + jumped) % 2 == 1 {
            negative = !negative;
        }
        beads[pos] = to;
        degree += 1;
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let conj_parts: Vec<usize> = beads.iter().enumerate().map(|(i, &b)| b + i + 1 - cols).collect();
    let shape = Partition::from_sorted(conj_parts).transpose();
    Ok(RimHookReduction::Reduced {
        sign: if negative { -1 } else { 1 },
        degree,
        shape,
    })
}

/// An element `Σ c_{d,ν} q^d σ_ν` of the quantum ring.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QExpansion {
    terms: BTreeMap<(usize, Partition), BigInt>,
}

impl QExpansion {
    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, Partition::empty()), BigInt::one());
        QExpansion { terms }
    }

    pub fn coefficient(&self, degree: usize, shape: &Partition) -> BigInt {
        self.terms
            .get(&(degree, shape.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition, &BigInt)> {
        self.terms.iter().map(|((d, p), c)| (*d, p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, degree: usize, shape: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (degree, shape);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Quantum product with a single class `σ_shape`.
    pub fn times(&self, shape: &Partition, k: usize, m: usize) -> Result<QExpansion> {
        let mut out = QExpansion::default();
        let bound = Bound::MaxCols(m - k);
        for ((d, nu), c) in &self.terms {
            for (rho, e) in multiply_pair_bounded(nu, shape, &bound).iter() {
                if let RimHookReduction::Reduced { sign, degree, shape } = rim_hook_reduce(rho, k, m)? {
                    out.add_term(d + degree, shape, c * e * i32::from(sign));
                }
            }
        }
        Ok(out)
    }
}

/// `σ_{λ¹} * ⋯ * σ_{λⁿ}` in `QH*Gr(k, m)`.
pub fn quantum_multiply(tuple: &[Partition], k: usize, m: usize) -> Result<QExpansion> {
    if k == 0 || m <= k {
        return Err(precondition(format!("need m > k >= 1, got k={k}, m={m}")));
    }
    let rect = Rect::new(k, m - k);
    for lam in tuple {
        lam.ensure_in(rect)?;
    }
    let mut order: Vec<&Partition> = tuple.iter().collect();
    order.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| b.cmp(a)));
    let mut acc = QExpansion::unit();
    for lam in order {
        acc = acc.times(lam, k, m)?;
    }
    Ok(acc)
}

/// Coefficient of `q^d σ_ν` in the quantum product.
pub fn quantum_lr_coefficient(
    tuple: &[Partition],
    degree: usize,
    nu: &Partition,
    k: usize,
    m: usize,
) -> Result<BigInt> {
    let product = quantum_multiply(tuple, k, m)?;
    if total_weight(tuple) != nu.weight() + m * degree {
        return Ok(BigInt::zero());
    }
    Ok(product.coefficient(degree, nu))
}

/// The 3-point invariant `I_d(σ_a, σ_b, σ_c)` on `Gr(rows, rows+cols)`.
pub fn three_point_gw(
    a: &Partition,
    b: &Partition,
    c: &Partition,
    degree: usize,
    rect: Rect,
) -> Result<BigInt> {
    let (r, l) = (rect.rows, rect.cols);
    let total = a.weight() + b.weight() + c.weight();
    if total != r * l + (r + l) * degree {
        return Err(Error::Dimension(format!(
            "codimensions sum to {total}, expected {} for degree {degree}",
            r * l + (r + l) * degree
        )));
    }
    let dual = c.dual_in_box(rect)?;
    quantum_lr_coefficient(&[a.clone(), b.clone()], degree, &dual, r, r + l)
}

/// Degree-one quantum coefficient of `(l^{r+1})` in `σ_{λ•} * σ_{(l)}` on
/// `Gr(r+1, r+1+l)`, next to the classical coefficient of
/// `(l^{r+1}, 1^{r+1})`. The two agree when `Σ#λⁱ = 2(r+1)`.
pub fn quantum_classical_identity(tuple: &[Partition], r: usize, l: usize) -> Result<(BigInt, BigInt)> {
    let rect = Rect::new(r, l);
    for lam in tuple {
        lam.ensure_in(rect)?;
    }
    if total_weight(tuple) != (r + 1) * (l + 1) {
        return Err(precondition("weights must sum to (r+1)(l+1)"));
    }
    if total_rows(tuple) != 2 * (r + 1) {
        return Err(precondition("row counts must sum to 2(r+1)"));
    }
    let mut extended = tuple.to_vec();
    extended.push(Partition::rectangle(1, l));
    let lhs = quantum_lr_coefficient(&extended, 1, &Partition::rectangle(r + 1, l), r + 1, r + 1 + l)?;
    let mut target = vec![l; r + 1];
    target.extend(std::iter::repeat_n(1, r + 1));
    let rhs = generalized_lr(tuple, &Partition::from_sorted(target));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_tuple;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Vec<Partition> {
        parse_tuple(s).unwrap()
    }

    /// Every `m`-border strip of `lambda`, found by checking all subshapes.
    fn border_strips(lambda: &Partition, m: usize) -> Vec<(Partition, usize)> {
        let rect = Rect::new(lambda.num_rows(), lambda.width());
        let mut out = Vec::new();
        for mu in rect.partitions_of_weight(lambda.weight().saturating_sub(m)) {
            if !lambda.contains(&mu) || lambda.weight() < m {
                continue;
            }
            let cells: Vec<(usize, usize)> = (0..lambda.num_rows())
                .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (i, j)))
                .collect();
            let has = |i: usize, j: usize| cells.contains(&(i, j));
            let square = cells
                .iter()
                .any(|&(i, j)| has(i + 1, j) && has(i, j + 1) && has(i + 1, j + 1));
            // connected: union-find by flood fill
            let mut seen = vec![cells[0]];
            let mut frontier = vec![cells[0]];
            while let Some((i, j)) = frontier.pop() {
                for n in [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))] {
                    if cells.contains(&n) && !seen.contains(&n) {
                        seen.push(n);
                        frontier.push(n);
                    }
                }
            }
            if !square && seen.len() == cells.len() {
                let mut columns: Vec<usize> = cells.iter().map(|c| c.1).collect();
                columns.sort_unstable();
                columns.dedup();
                out.push((mu, columns.len()));
            }
        }
        out
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(
            rim_hook_reduce(&p("[2,1]"), 2, 4).unwrap(),
            RimHookReduction::Reduced { sign: 1, degree: 0, shape: p("[2,1]") }
        );
        assert_eq!(rim_hook_reduce(&p("[4,1]"), 2, 4).unwrap(), RimHookReduction::Zero);
        assert_eq!(rim_hook_reduce(&p("[3]"), 2, 4).unwrap(), RimHookReduction::Zero);
        assert_eq!(
            rim_hook_reduce(&p("[2,2,2,1,1]"), 2, 4).unwrap(),
            RimHookReduction::Reduced { sign: 1, degree: 1, shape: p("[2,2]") }
        );
        assert!(rim_hook_reduce(&p("[1]"), 2, 2).is_err());
    }

    #[test]
    fn single_hook_sign_matches_width_formula() {
        let mut compared = 0;
        for (k, m) in [(2, 4), (2, 5), (3, 6), (2, 6)] {
            let cols = m - k;
            for lambda in Rect::new(k + m, cols).partitions() {
                if lambda.num_rows() <= k {
                    continue;
                }
                let strips = border_strips(&lambda, m);
                if let RimHookReduction::Reduced { sign, degree: 1, shape } = rim_hook_reduce(&lambda, k, m).unwrap() {
                    let (_, width) = strips
                        .iter()
                        .find(|(mu, _)| *mu == shape)
                        .expect("abacus move is a border strip");
                    let expect = if (width + m - k) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(sign, expect, "{lambda} in Gr({k},{m})");
                    compared += 1;
                }
            }
        }
        assert!(compared > 20, "only {compared} single-hook cases");
    }

    #[test]
    fn product_examples() {
        let e = quantum_multiply(&t("[2,1];[2,1]"), 2, 4).unwrap();
        assert_eq!(e.coefficient(1, &p("[2]")), BigInt::from(1));
        assert_eq!(e.coefficient(1, &p("[1,1]")), BigInt::from(1));
        assert_eq!(e.len(), 2);

        let e = quantum_multiply(&t("[2];[2]"), 2, 4).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(0, &p("[2,2]")), BigInt::from(1));

        let e = quantum_multiply(&t("[1];[2,1]"), 2, 4).unwrap();
        assert_eq!(e.coefficient(0, &p("[2,2]")), BigInt::from(1));
        assert_eq!(e.coefficient(1, &p("[]")), BigInt::from(1));

        let e = quantum_multiply(&t("[2,1];[]"), 2, 4).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(0, &p("[2,1]")), BigInt::from(1));

        assert!(quantum_multiply(&t("[3]"), 2, 4).is_err());
    }

    #[test]
    fn qlr_examples() {
        let tuple = t("[2,1];[2,1]");
        assert_eq!(quantum_lr_coefficient(&tuple, 1, &p("[2]"), 2, 4).unwrap(), BigInt::from(1));
        assert_eq!(quantum_lr_coefficient(&tuple, 0, &p("[2]"), 2, 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn three_point_examples() {
        let rect = Rect::new(2, 2);
        assert_eq!(three_point_gw(&p("[2,1]"), &p("[2,1]"), &p("[2]"), 1, rect).unwrap(), BigInt::from(1));
        assert!(matches!(
            three_point_gw(&p("[1]"), &p("[1]"), &p("[1]"), 0, Rect::new(1, 2)),
            Err(Error::Dimension(_))
        ));
        for lam in rect.partitions() {
            let dual = lam.dual_in_box(rect).unwrap();
            assert_eq!(three_point_gw(&lam, &dual, &p("[]"), 0, rect).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn quantum_classical_examples() {
        let (a, b) = quantum_classical_identity(&t("[2,2];[2,1];[1];[1]"), 2, 2).unwrap();
        assert_eq!((a, b), (BigInt::from(1), BigInt::from(1)));
        let (a, b) = quantum_classical_identity(&t("[1];[1];[1];[1]"), 1, 1).unwrap();
        assert_eq!((a, b), (BigInt::from(1), BigInt::from(1)));
        assert!(quantum_classical_identity(&t("[2,2];[2,2];[1]"), 2, 2).is_err());
    }

    #[test]
    fn grading_holds() {
        let (k, m) = (2, 5);
        let shapes = Rect::new(k, m - k).partitions();
        for a in &shapes {
            for b in &shapes {
                let e = quantum_multiply(&[a.clone(), b.clone()], k, m).unwrap();
                for (d, nu, _) in e.iter() {
                    assert_eq!(nu.weight() + m * d, a.weight() + b.weight());
                }
            }
        }
    }
}
