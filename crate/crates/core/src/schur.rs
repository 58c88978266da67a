//! Products of Schur functions and Littlewood-Richardson coefficients.
//!
//! Pairwise products `s_λ·s_μ` are expanded by enumerating LR tableaux: the
//! content partition is laid down one letter at a time as a horizontal strip,
//! subject to the lattice-word condition on the reverse reading word. n-fold
//! products fold pairwise products from the left. Every product can be
//! restricted to shapes under a [`Bound`], which is how Grassmannian
//! truncation and targeted coefficients prune the search.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::partitions::{Partition, Rect};

/// A finite integer combination of Schur functions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `s_∅ = 1`.
    pub fn unit() -> Self {
        Self::single(Partition::empty())
    }

    pub fn single(shape: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(shape, BigInt::one());
        SchurExpansion { terms }
    }

    pub fn coefficient(&self, shape: &Partition) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, shape: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(shape) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn shapes(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `s_shape`, keeping only shapes admitted by `bound`.
    pub fn times(&self, shape: &Partition, bound: &Bound) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        for (nu, c) in &self.terms {
            let prod = multiply_pair_bounded(nu, shape, bound);
            for (rho, d) in prod.iter() {
                out.add_term(rho.clone(), c * d);
            }
        }
        out
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut out = SchurExpansion::zero();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

/// Which shapes a product is allowed to produce.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bound {
    Unbounded,
    /// Shapes inside a rectangle.
    Rect(Rect),
    /// Shapes with first row at most this long.
    MaxCols(usize),
    /// Shapes contained in the given partition.
    Within(Partition),
}

impl Bound {
    fn row_cap(&self, row: usize) -> usize {
        match self {
            Bound::Unbounded => usize::MAX,
            Bound::Rect(rect) => {
                if row < rect.rows {
                    rect.cols
                } else {
                    0
                }
            }
            Bound::MaxCols(c) => *c,
            Bound::Within(p) => p.part(row),
        }
    }

    pub fn admits(&self, shape: &Partition) -> bool {
        shape
            .parts()
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.row_cap(i))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct ProductKey {
    left: Partition,
    right: Partition,
    bound: Bound,
}

static PRODUCTS: LazyLock<DashMap<ProductKey, Arc<SchurExpansion>>> =
    LazyLock::new(DashMap::new);
static LR_TRIPLES: LazyLock<DashMap<(Partition, Partition, Partition), u64>> =
    LazyLock::new(DashMap::new);

/// Calls `visit` with the outer shape of every LR tableau of shape `?/base`
/// and content `content` whose shape is admitted by `bound`.
fn for_each_lr_tableau(
    base: &Partition,
    content: &Partition,
    bound: &Bound,
    mut visit: impl FnMut(&[usize]),
) {
    if !bound.admits(base) {
        return;
    }
    let max_rows = base.num_rows() + content.num_rows();
    let mut shape: Vec<usize> = (0..max_rows).map(|i| base.part(i)).collect();
    // counts[t][j]: copies of letter t placed in row j
    let mut counts = vec![vec![0usize; max_rows]; content.num_rows()];
    place_letter(0, content.parts(), bound, &mut shape, &mut counts, &mut visit);
}

fn place_letter(
    letter: usize,
    content: &[usize],
    bound: &Bound,
    shape: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[usize]),
) {
    if letter == content.len() {
        visit(shape);
        return;
    }
    let prev = shape.clone();
    place_row(letter, 0, content[letter], 0, 0, content, bound, &prev, shape, counts, visit);
}

#[allow(clippy::too_many_arguments)]
fn place_row(
    letter: usize,
    row: usize,
    remaining: usize,
    placed_so_far: usize,
    prev_letter_cum: usize,
    content: &[usize],
    bound: &Bound,
    prev: &[usize],
    shape: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        place_letter(letter + 1, content, bound, shape, counts, visit);
        return;
    }
    // at most one new row below the previous shape
    if row >= shape.len() || row > prev.iter().take_while(|&&p| p > 0).count() {
        return;
    }
    // horizontal strip: no two boxes of this letter in one column
    let strip_cap = if row == 0 { usize::MAX } else { prev[row - 1] };
    let cap = strip_cap.min(bound.row_cap(row));
    let room = cap.saturating_sub(prev[row]);
    // lattice word: letter t in rows <= j never outnumbers letter t-1 in rows < j
    let lattice_room = if letter == 0 {
        usize::MAX
    } else {
        prev_letter_cum.saturating_sub(placed_so_far)
    };
    let most = room.min(lattice_room).min(remaining);
    let next_prev_cum = if letter == 0 {
        0
    } else {
        prev_letter_cum + counts[letter - 1][row]
    };
    for a in (0..=most).rev() {
        shape[row] = prev[row] + a;
        counts[letter][row] = a;
        place_row(
            letter,
            row + 1,
            remaining - a,
            placed_so_far + a,
            next_prev_cum,
            content,
            bound,
            prev,
            shape,
            counts,
            visit,
        );
    }
    shape[row] = prev[row];
    counts[letter][row] = 0;
}

/// `s_a · s_b`, restricted to `bound`. Memoized.
pub fn multiply_pair_bounded(a: &Partition, b: &Partition, bound: &Bound) -> Arc<SchurExpansion> {
    // the smaller partition is the tableau content
    let (base, content) = if (b.weight(), b) <= (a.weight(), a) {
        (a, b)
    } else {
        (b, a)
    };
    let key = ProductKey {
        left: base.clone(),
        right: content.clone(),
        bound: bound.clone(),
    };
    if let Some(hit) = PRODUCTS.get(&key) {
        return Arc::clone(&hit);
    }
    let mut tally: BTreeMap<Partition, u64> = BTreeMap::new();
    for_each_lr_tableau(base, content, bound, |shape| {
        *tally
            .entry(Partition::from_sorted(shape.to_vec()))
            .or_default() += 1;
    });
    let product: SchurExpansion = tally
        .into_iter()
        .map(|(p, c)| (p, BigInt::from(c)))
        .collect();
    let product = Arc::new(product);
    PRODUCTS.insert(key, Arc::clone(&product));
    product
}

/// The Littlewood-Richardson coefficient `c^ν_{λμ}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.weight() + mu.weight() != nu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigInt::zero();
    }
    let (base, content) = if (mu.weight(), mu) <= (lambda.weight(), lambda) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let key = (base.clone(), content.clone(), nu.clone());
    if let Some(hit) = LR_TRIPLES.get(&key) {
        return BigInt::from(*hit);
    }
    let mut count = 0u64;
    let target = nu.parts();
    for_each_lr_tableau(base, content, &Bound::Within(nu.clone()), |shape| {
        let len = shape.iter().take_while(|&&p| p > 0).count();
        if shape[..len] == *target {
            count += 1;
        }
    });
    LR_TRIPLES.insert(key, count);
    BigInt::from(count)
}

/// Full Schur expansion of `s_{λ¹}⋯s_{λⁿ}`; the empty product is `s_∅`.
pub fn multiply_schur(tuple: &[Partition]) -> SchurExpansion {
    multiply_schur_bounded(tuple, &Bound::Unbounded)
}

/// As [`multiply_schur`], dropping shapes outside `bound` at every step.
/// This is exact for the surviving shapes because every shape in a product
/// contains the shapes of its factors.
pub fn multiply_schur_bounded(tuple: &[Partition], bound: &Bound) -> SchurExpansion {
    let mut acc = SchurExpansion::unit();
    if !bound.admits(&Partition::empty()) {
        return SchurExpansion::zero();
    }
    // heavier factors first keeps intermediate expansions small
    let mut order: Vec<&Partition> = tuple.iter().collect();
    order.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| b.cmp(a)));
    for shape in order {
        acc = acc.times(shape, bound);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

/// Generalized LR coefficient `c^ν_{λ•}`: coefficient of `s_ν` in the product.
pub fn generalized_lr(tuple: &[Partition], nu: &Partition) -> BigInt {
    let total: usize = tuple.iter().map(Partition::weight).sum();
    if total != nu.weight() {
        return BigInt::zero();
    }
    if tuple.len() == 2 {
        return lr_coefficient(&tuple[0], &tuple[1], nu);
    }
    multiply_schur_bounded(tuple, &Bound::Within(nu.clone())).coefficient(nu)
}

/// `∫_{Gr} ∏ σ_{λⁱ}` over the Grassmannian of the given box, i.e. the
/// coefficient of the full rectangle. A zero-area box is a point: the
/// integral is 1 exactly when every class is the unit.
pub fn grassmannian_intersection(tuple: &[Partition], rect: Rect) -> Result<BigInt> {
    for lam in tuple {
        lam.ensure_in(rect)?;
    }
    Ok(generalized_lr(tuple, &rect.full()))
}

/// Coefficients of the box-truncated product, as a map shape -> coefficient.
pub fn product_in_box(tuple: &[Partition], rect: Rect) -> SchurExpansion {
    multiply_schur_bounded(tuple, &Bound::Rect(rect))
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

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("[1,1]"), &p("[1]"), &p("[2,1]")), BigInt::from(1));
        assert_eq!(lr_coefficient(&p("[3,1]"), &p("[]"), &p("[3,1]")), BigInt::from(1));
        assert_eq!(lr_coefficient(&p("[2]"), &p("[1,1]"), &p("[2,2]")), BigInt::from(0));
        // s_21 · s_21 has s_321 with multiplicity 2
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), BigInt::from(2));
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[4,2]")), BigInt::from(1));
    }

    #[test]
    fn product_examples() {
        let e = multiply_schur(&t("[1];[1]"));
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&p("[2]")), BigInt::from(1));
        assert_eq!(e.coefficient(&p("[1,1]")), BigInt::from(1));

        let e = multiply_schur(&t("[1];[1];[1]"));
        assert_eq!(e.len(), 3);
        assert_eq!(e.coefficient(&p("[3]")), BigInt::from(1));
        assert_eq!(e.coefficient(&p("[2,1]")), BigInt::from(2));
        assert_eq!(e.coefficient(&p("[1,1,1]")), BigInt::from(1));

        assert_eq!(multiply_schur(&t("[3,1]")), SchurExpansion::single(p("[3,1]")));
        assert_eq!(multiply_schur(&[]), SchurExpansion::unit());

        let e = multiply_schur(&t("[2];[1,1]"));
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&p("[3,1]")), BigInt::from(1));
        assert_eq!(e.coefficient(&p("[2,1,1]")), BigInt::from(1));
    }

    #[test]
    fn generalized_examples() {
        assert_eq!(generalized_lr(&t("[1];[1];[1]"), &p("[2,1]")), BigInt::from(2));
        // standard Young tableaux of shape (2,2)
        assert_eq!(generalized_lr(&t("[1];[1];[1];[1]"), &p("[2,2]")), BigInt::from(2));
        assert_eq!(generalized_lr(&t("[1];[1]"), &p("[2,1]")), BigInt::from(0));
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(grassmannian_intersection(&t("[1];[1]"), Rect::new(1, 2)).unwrap(), BigInt::from(1));
        assert_eq!(grassmannian_intersection(&t("[1,1];[1]"), Rect::new(3, 1)).unwrap(), BigInt::from(1));
        assert_eq!(grassmannian_intersection(&t("[2];[1,1]"), Rect::new(2, 2)).unwrap(), BigInt::from(0));
        assert!(grassmannian_intersection(&t("[3];[1]"), Rect::new(2, 2)).is_err());
        // a point
        assert_eq!(grassmannian_intersection(&t("[];[]"), Rect::new(0, 2)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn duality_pairing() {
        for rect in [Rect::new(2, 2), Rect::new(2, 3), Rect::new(3, 2)] {
            for a in rect.partitions() {
                for b in rect.partitions_of_weight(rect.area() - a.weight()) {
                    let v = grassmannian_intersection(&[a.clone(), b.clone()], rect).unwrap();
                    let expect = if b == a.dual_in_box(rect).unwrap() { 1 } else { 0 };
                    assert_eq!(v, BigInt::from(expect), "{a} {b} in {rect:?}");
                }
            }
        }
    }

    #[test]
    fn pairwise_products_match_jacobi_trudi_oracle() {
        let shapes: Vec<Partition> = (0..=5)
            .flat_map(|w| Rect::new(3, 3).partitions_of_weight(w))
            .collect();
        for a in &shapes {
            for b in &shapes {
                let ours: BTreeMap<Partition, BigInt> = multiply_schur(&[a.clone(), b.clone()])
                    .iter()
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect();
                let oracle = oracle::product_via_jacobi_trudi(a, b);
                assert_eq!(ours, oracle, "{a} * {b}");
            }
        }
    }

    #[test]
    fn bounded_products_are_truncations() {
        let tuple = t("[2,1];[2];[1,1];[1]");
        let full = multiply_schur(&tuple);
        let rect = Rect::new(3, 3);
        let boxed = product_in_box(&tuple, rect);
        let expect: SchurExpansion = full
            .iter()
            .filter(|(k, _)| k.fits_in(rect))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        assert_eq!(boxed, expect);
        let cols = multiply_schur_bounded(&tuple, &Bound::MaxCols(2));
        assert!(cols.shapes().all(|s| s.width() <= 2));
        assert_eq!(cols.coefficient(&p("[2,2,1,1,1]")), full.coefficient(&p("[2,2,1,1,1]")));
    }

    #[test]
    fn short_product_bound_and_first_column_factorization() {
        // exhaustive over pairs and triples of small partitions
        let shapes: Vec<Partition> = (0..=4)
            .flat_map(|w| Rect::new(4, 4).partitions_of_weight(w))
            .collect();
        let mut checked = 0;
        for a in &shapes {
            for b in &shapes {
                for c in shapes.iter().filter(|c| a.weight() + b.weight() + c.weight() <= 12) {
                    let tuple = [a.clone(), b.clone(), c.clone()];
                    let rows: usize = tuple.iter().map(Partition::num_rows).sum();
                    for (nu, coeff) in multiply_schur(&tuple).iter() {
                        assert!(nu.num_rows() <= rows);
                        if nu.num_rows() == rows {
                            let hats: Vec<Partition> = tuple.iter().map(Partition::remove_first_column).collect();
                            assert_eq!(
                                *coeff,
                                generalized_lr(&hats, &nu.remove_first_column()),
                                "{tuple:?} -> {nu}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn associativity_of_splits() {
        let tuple = t("[2,1];[1,1];[2];[1]");
        let shapes = multiply_schur(&tuple);
        let prefix = multiply_schur(&tuple[..3]);
        for (nu, c) in shapes.iter() {
            let mut via = BigInt::zero();
            for (mu, d) in prefix.iter() {
                via += d * lr_coefficient(mu, &tuple[3], nu);
            }
            assert_eq!(*c, via);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_small() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(0usize..4, 0..4).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v).unwrap()
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn coefficients_are_positive_and_symmetric(a in arb_small(), b in arb_small(), c in arb_small()) {
                let abc = multiply_schur(&[a.clone(), b.clone(), c.clone()]);
                let cba = multiply_schur(&[c.clone(), b.clone(), a.clone()]);
                prop_assert!(abc.iter().all(|(_, v)| v.is_positive()));
                prop_assert_eq!(&abc, &cba);
                let w = a.weight() + b.weight() + c.weight();
                prop_assert!(abc.shapes().all(|s| s.weight() == w));
            }
        }
    }
}
