//! Integer partitions and the rectangles that bound them.
//!
//! A [`Partition`] is stored without trailing zeros, so structural equality is
//! partition equality. The text form is `[4,4,2,1]`, with `[]` for the empty
//! partition; tuples of partitions are written `[2,2];[2,1];[1];[1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{precondition, Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// The `rows x cols` rectangle `(cols^rows)`. Partitions inside it index the
/// Schubert classes of the Grassmannian of `rows`-planes in `rows + cols` space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub rows: usize,
    pub cols: usize,
}

/// Outcome of the column test on a tuple of partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnCondition {
    HoldsStrictlyBelow,
    HoldsWithEquality,
    Fails,
}

/// Result of peeling the first column off a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstColumnSplit {
    /// A column one box shorter than the first column.
    pub alpha: Partition,
    /// Everything right of the first column.
    pub beta: Partition,
    /// The first column itself.
    pub column: Partition,
}

impl Partition {
    /// Builds a partition, rejecting sequences that increase.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                what: "partition",
                input: format!("{parts:?}"),
            });
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(cols^rows)` as a partition.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    /// A single column `(1^height)`.
    pub fn column(height: usize) -> Self {
        Self::rectangle(height, 1)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows, i.e. the height of the first column.
    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of the first row.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn transpose(&self) -> Self {
        let width = self.width();
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows()
            && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    pub fn fits_in(&self, rect: Rect) -> bool {
        self.num_rows() <= rect.rows && self.width() <= rect.cols
    }

    pub fn ensure_in(&self, rect: Rect) -> Result<()> {
        if self.fits_in(rect) {
            Ok(())
        } else {
            Err(Error::NotInBox {
                partition: self.to_string(),
                rows: rect.rows,
                cols: rect.cols,
            })
        }
    }

    /// Complement inside `rect`, read from the bottom row up.
    pub fn dual_in_box(&self, rect: Rect) -> Result<Self> {
        self.ensure_in(rect)?;
        let parts = (0..rect.rows)
            .map(|i| rect.cols - self.part(rect.rows - 1 - i))
            .collect();
        Ok(Self::from_sorted(parts))
    }

    /// Complement inside the `(r+1) x λ₁` rectangle, read from the bottom
    /// row up. The empty partition is its own star dual.
    pub fn star_dual(&self, r: usize) -> Result<Self> {
        if self.num_rows() > r + 1 {
            return Err(precondition(format!(
                "star dual of {self} needs at most {} rows",
                r + 1
            )));
        }
        if self.is_empty() {
            return Ok(Self::empty());
        }
        self.dual_in_box(Rect::new(r + 1, self.width()))
    }

    /// Removes the first column (every row loses one box).
    pub fn remove_first_column(&self) -> Self {
        Self::from_sorted(self.0.iter().map(|&p| p - 1).collect())
    }

    pub fn split_first_column(&self) -> FirstColumnSplit {
        let h = self.num_rows();
        FirstColumnSplit {
            alpha: Self::column(h.saturating_sub(1)),
            beta: self.remove_first_column(),
            column: Self::column(h),
        }
    }

    /// Puts a new first row of length `len` on top. `len` must be at least
    /// the current first row.
    pub fn with_top_row(&self, len: usize) -> Self {
        assert!(len >= self.width(), "new top row shorter than {self}");
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(len);
        parts.extend_from_slice(&self.0);
        Self::from_sorted(parts)
    }

    /// Adds one box at the bottom of the first column.
    pub fn with_box_below(&self) -> Self {
        let mut parts = self.0.clone();
        parts.push(1);
        Partition(parts)
    }

    /// Drops every column of height `height` (these are the leading columns).
    pub fn strip_full_columns(&self, height: usize) -> Self {
        if height == 0 || self.num_rows() < height {
            return self.clone();
        }
        let full = self.part(height - 1);
        Self::from_sorted(self.0.iter().map(|&p| p - full).collect())
    }
}

impl Rect {
    pub fn new(rows: usize, cols: usize) -> Self {
        Rect { rows, cols }
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn full(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }

    pub fn transpose(&self) -> Self {
        Rect::new(self.cols, self.rows)
    }

    /// All partitions inside the rectangle, in lexicographic order.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.rows);
        fill_rows(self.rows, self.cols, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Partitions inside the rectangle of the given weight.
    pub fn partitions_of_weight(&self, weight: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.rows);
        fill_rows(self.rows, self.cols, weight, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn fill_rows(
    rows_left: usize,
    max_part: usize,
    weight_left: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    // usize::MAX means "any weight"
    let exact = weight_left != usize::MAX;
    if !exact || weight_left == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        if exact {
            return;
        }
    }
    if rows_left == 0 {
        return;
    }
    let top = if exact { max_part.min(weight_left) } else { max_part };
    for p in 1..=top {
        if exact && p * rows_left < weight_left {
            continue;
        }
        cur.push(p);
        let rest = if exact { weight_left - p } else { usize::MAX };
        fill_rows(rows_left - 1, p, rest, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|_| bad())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn total_weight(tuple: &[Partition]) -> usize {
    tuple.iter().map(Partition::weight).sum()
}

pub fn total_rows(tuple: &[Partition]) -> usize {
    tuple.iter().map(Partition::num_rows).sum()
}

/// Classifies `tuple` against the column condition for the `r x l` box:
/// total weight `(r+1)(l+1)` and at most `2(r+1)` rows in total.
pub fn column_condition(tuple: &[Partition], rect: Rect) -> ColumnCondition {
    let (r, l) = (rect.rows, rect.cols);
    if total_weight(tuple) != (r + 1) * (l + 1) {
        return ColumnCondition::Fails;
    }
    match total_rows(tuple).cmp(&(2 * (r + 1))) {
        Ordering::Less => ColumnCondition::HoldsStrictlyBelow,
        Ordering::Equal => ColumnCondition::HoldsWithEquality,
        Ordering::Greater => ColumnCondition::Fails,
    }
}

/// Parses `[2,2];[2,1];[1];[1]`.
pub fn parse_tuple(s: &str) -> Result<Vec<Partition>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

pub fn format_tuple(tuple: &[Partition]) -> String {
    tuple
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Cache/lookup key for quantities symmetric in the tuple: descending
/// lexicographic order, semicolon separated.
pub fn canonical_tuple_key(tuple: &[Partition]) -> String {
    let mut sorted = tuple.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    format_tuple(&sorted)
}

pub fn transpose_all(tuple: &[Partition]) -> Vec<Partition> {
    tuple.iter().map(Partition::transpose).collect()
}
