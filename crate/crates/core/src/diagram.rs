//! Partitions, cells, and the skew diagrams built from a partition.
//!
//! Rows are numbered from the bottom and columns from the left, both
//! starting at 1. Region constructors return cells in absolute coordinates;
//! shapes are compared after [`CellSet::normalize`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::multiset::{ArmLeg, Multiset};
use crate::DiagramError;

/// A partition with exactly `k` parts (trailing zeros kept), each at most `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>, k: usize, n: usize) -> Result<Self, DiagramError> {
        if k == 0 || n == 0 {
            return Err(DiagramError::ZeroBound);
        }
        if parts.len() != k {
            return Err(DiagramError::WrongLength {
                expected: k,
                actual: parts.len(),
            });
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(DiagramError::NotWeaklyDecreasing { index: pos + 2 });
        }
        if parts[0] > n {
            return Err(DiagramError::PartExceedsN { part: parts[0], n });
        }
        Ok(Partition { parts, n })
    }

    /// Like [`Partition::new`], but pads missing trailing parts with zeros.
    pub fn padded(mut parts: Vec<usize>, k: usize, n: usize) -> Result<Self, DiagramError> {
        if parts.len() < k {
            parts.resize(k, 0);
        }
        Self::new(parts, k, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Part `j` (1-based). Indices past `k` read as 0.
    ///
    /// # Panics
    /// If `j == 0`.
    pub fn part(&self, j: usize) -> usize {
        assert!(j >= 1, "parts are indexed from 1");
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `j` of the result counts the parts of `self` that are at least `j`.
    /// The result has `n` parts and is bounded by `k`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.n)
            .map(|j| self.parts.iter().take_while(|&&a| a >= j).count())
            .collect();
        Partition {
            parts,
            n: self.k(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

/// A finite set of cells, ordered by row then column.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CellSet {
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set, rejecting repeated cells and cells with a zero coordinate.
    pub fn try_from_cells<I>(cells: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut set = BTreeSet::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(DiagramError::InvalidCell(c));
            }
            if !set.insert(c) {
                return Err(DiagramError::DuplicateCell(c));
            }
        }
        Ok(CellSet { cells: set })
    }

    /// Rows `row` with the closed column interval `first..=last`.
    fn from_row_intervals<I>(rows: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut cells = BTreeSet::new();
        for (row, first, last) in rows {
            for col in first..=last {
                cells.insert(Cell { row, col });
            }
        }
        CellSet { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        CellSet {
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        CellSet {
            cells: self.cells.difference(&other.cells).copied().collect(),
        }
    }

    pub fn filter(&self, mut keep: impl FnMut(Cell) -> bool) -> CellSet {
        CellSet {
            cells: self.cells.iter().copied().filter(|&c| keep(c)).collect(),
        }
    }

    /// Cells of one row, left to right.
    pub fn row(&self, row: usize) -> impl DoubleEndedIterator<Item = Cell> + '_ {
        self.cells
            .range(Cell::new(row, 0)..=Cell::new(row, usize::MAX))
            .copied()
    }

    /// Cells of one column, bottom to top.
    pub fn column(&self, col: usize) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied().filter(move |c| c.col == col)
    }

    /// `(min_row, max_row, min_col, max_col)`, or `None` when empty.
    pub fn bounds(&self) -> Option<(usize, usize, usize, usize)> {
        let first = self.cells.first()?;
        let last = self.cells.last()?;
        let (min_col, max_col) = self
            .cells
            .iter()
            .fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c.col), hi.max(c.col)));
        Some((first.row, last.row, min_col, max_col))
    }

    /// Occupied rows with their leftmost and rightmost columns.
    pub fn row_extents(&self) -> BTreeMap<usize, (usize, usize)> {
        let mut out: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for c in &self.cells {
            out.entry(c.row)
                .and_modify(|e| e.1 = c.col)
                .or_insert((c.col, c.col));
        }
        out
    }

    /// True when every occupied row is a contiguous interval and both the
    /// left and the right edges weakly increase with the row index.
    /// Empty rows are skipped.
    pub fn is_skew(&self) -> bool {
        let extents = self.row_extents();
        for (&row, &(lo, hi)) in &extents {
            if self.row(row).count() != hi - lo + 1 {
                return false;
            }
        }
        extents
            .values()
            .zip(extents.values().skip(1))
            .all(|(below, above)| below.0 <= above.0 && below.1 <= above.1)
    }

    /// Translate by a signed offset.
    ///
    /// # Panics
    /// If a cell would leave the positive quadrant.
    pub fn translate(&self, d_row: isize, d_col: isize) -> CellSet {
        let shift = |v: usize, d: isize| {
            let out = v as isize + d;
            assert!(out >= 1, "translation leaves the positive quadrant");
            out as usize
        };
        CellSet {
            cells: self
                .cells
                .iter()
                .map(|c| Cell::new(shift(c.row, d_row), shift(c.col, d_col)))
                .collect(),
        }
    }

    /// Translate so that the lowest occupied row and leftmost occupied
    /// column are both 1. The empty set normalizes to itself.
    pub fn normalize(&self) -> CellSet {
        match self.bounds() {
            None => CellSet::new(),
            Some((r0, _, c0, _)) => self.translate(1 - r0 as isize, 1 - c0 as isize),
        }
    }

    /// Shape equality up to translation.
    pub fn same_shape(&self, other: &CellSet) -> bool {
        self.normalize() == other.normalize()
    }

    pub fn arm(&self, x: Cell) -> Result<usize, DiagramError> {
        self.require(x)?;
        Ok(self
            .cells
            .range(Cell::new(x.row, x.col + 1)..=Cell::new(x.row, usize::MAX))
            .count())
    }

    pub fn leg(&self, x: Cell) -> Result<usize, DiagramError> {
        self.require(x)?;
        Ok((1..x.row)
            .filter(|&r| self.contains(Cell::new(r, x.col)))
            .count())
    }

    pub fn coleg(&self, x: Cell) -> Result<usize, DiagramError> {
        self.require(x)?;
        Ok(self
            .cells
            .range(Cell::new(x.row + 1, 0)..)
            .filter(|c| c.col == x.col)
            .count())
    }

    pub fn arm_leg(&self, x: Cell) -> Result<ArmLeg, DiagramError> {
        Ok(ArmLeg::new(self.arm(x)?, self.leg(x)?))
    }

    pub fn hook(&self, x: Cell) -> Result<usize, DiagramError> {
        Ok(self.arm_leg(x)?.hook())
    }

    fn require(&self, x: Cell) -> Result<(), DiagramError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(DiagramError::CellNotInSet(x))
        }
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet {
            cells: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

/// `{"rows":[{"row":r,"colMin":a,"colMax":b},...]}`, one entry per
/// contiguous run, ascending.
impl Serialize for CellSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Run {
            row: usize,
            col_min: usize,
            col_max: usize,
        }

        let mut runs: Vec<Run> = Vec::new();
        for c in &self.cells {
            match runs.last_mut() {
                Some(run) if run.row == c.row && run.col_max + 1 == c.col => run.col_max = c.col,
                _ => runs.push(Run {
                    row: c.row,
                    col_min: c.col,
                    col_max: c.col,
                }),
            }
        }
        let mut st = serializer.serialize_struct("CellSet", 1)?;
        st.serialize_field("rows", &runs)?;
        st.end()
    }
}

/// The named regions built from a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionKind {
    D,
    R,
    T,
    V,
    SQ,
    TStar,
    R1,
    R2,
    T1Star,
    T2Star,
}

impl RegionKind {
    pub const ALL: [RegionKind; 10] = [
        RegionKind::D,
        RegionKind::R,
        RegionKind::T,
        RegionKind::V,
        RegionKind::SQ,
        RegionKind::TStar,
        RegionKind::R1,
        RegionKind::R2,
        RegionKind::T1Star,
        RegionKind::T2Star,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RegionKind::D => "D",
            RegionKind::R => "R",
            RegionKind::T => "T",
            RegionKind::V => "V",
            RegionKind::SQ => "SQ",
            RegionKind::TStar => "Tstar",
            RegionKind::R1 => "R1",
            RegionKind::R2 => "R2",
            RegionKind::T1Star => "T1star",
            RegionKind::T2Star => "T2star",
        }
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for RegionKind {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RegionKind::ALL
            .into_iter()
            .find(|k| k.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| DiagramError::UnknownRegion(s.to_string()))
    }
}

impl Serialize for RegionKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// Cells of the requested region, in absolute coordinates.
pub fn build_region(p: &Partition, kind: RegionKind) -> CellSet {
    let k = p.k();
    let n = p.n();
    let a = |j: usize| p.part(j);
    let a1 = a(1);
    let ak = a(k);
    // row i of D, R1, R2 and T* is governed by α_{k-i+1}
    let flip = |i: usize| a(k - i + 1);

    let rows: Vec<(usize, usize, usize)> = match kind {
        RegionKind::D => (1..=k).map(|i| (i, 1, flip(i))).collect(),
        RegionKind::R => (1..=k).map(|i| (i, 1, n)).collect(),
        RegionKind::T => (1..=k)
            .map(|i| (i, a1 - a(i) + 1, n + a1 - a(i)))
            .collect(),
        RegionKind::V => (k + 1..=2 * k)
            .map(|i| (i, n + a1 - a(i - k) + 1, n + a1))
            .collect(),
        RegionKind::SQ => {
            return build_region(p, RegionKind::T).union(&build_region(p, RegionKind::V));
        }
        RegionKind::TStar => (1..=k)
            .map(|i| (i, flip(i) - ak + 1, n + flip(i) - ak))
            .collect(),
        RegionKind::R1 => (1..=k).map(|i| (i, n - flip(i) + 1, n)).collect(),
        RegionKind::R2 => (1..=k).map(|i| (i, 1, n - flip(i))).collect(),
        RegionKind::T1Star => (1..=k)
            .map(|i| (i, flip(i) - ak + 1, n - ak))
            .collect(),
        RegionKind::T2Star => (1..=k)
            .map(|i| (i, n - ak + 1, n + flip(i) - ak))
            .collect(),
    };
    CellSet::from_row_intervals(rows)
}

/// Rotate through 180 degrees within the bounding box, then normalize.
pub fn rotate180(g: &CellSet) -> Result<CellSet, DiagramError> {
    let (r0, r1, c0, c1) = g.bounds().ok_or(DiagramError::EmptySet)?;
    Ok(g.iter()
        .map(|c| Cell::new(r0 + r1 - c.row, c0 + c1 - c.col))
        .collect::<CellSet>()
        .normalize())
}

/// Reflect about a vertical axis within the bounding box, then normalize.
pub fn reflect_vertical(g: &CellSet) -> Result<CellSet, DiagramError> {
    let (_, _, c0, c1) = g.bounds().ok_or(DiagramError::EmptySet)?;
    Ok(g.iter()
        .map(|c| Cell::new(c.row, c0 + c1 - c.col))
        .collect::<CellSet>()
        .normalize())
}

fn widest_row(g: &CellSet) -> usize {
    g.row_extents()
        .keys()
        .map(|&r| g.row(r).count())
        .max()
        .unwrap_or(0)
}

fn check_arm_index(g: &CellSet, i: usize) -> Result<(), DiagramError> {
    let max = widest_row(g);
    if i == 0 || i > max {
        Err(DiagramError::IndexOutOfRange { index: i, max })
    } else {
        Ok(())
    }
}

/// Cells of `g` with arm length exactly `i - 1`.
pub fn arm_slice(g: &CellSet, i: usize) -> Result<CellSet, DiagramError> {
    check_arm_index(g, i)?;
    Ok(g.filter(|c| g.arm(c).ok() == Some(i - 1)))
}

/// Cells of `g` with arm length at most `i - 1`.
pub fn arm_prefix(g: &CellSet, i: usize) -> Result<CellSet, DiagramError> {
    check_arm_index(g, i)?;
    Ok(g.filter(|c| g.arm(c).is_ok_and(|a| a < i)))
}

/// Multiset of `(arm, leg)` over the cells of `e`, measured in `g`.
pub fn al_multiset(g: &CellSet, e: &CellSet) -> Result<Multiset<ArmLeg>, DiagramError> {
    e.iter().map(|x| g.arm_leg(x).map_err(|_| DiagramError::NotASubset(x))).collect()
}

/// Multiset of hook lengths over the cells of `e`, measured in `g`.
pub fn hook_multiset(g: &CellSet, e: &CellSet) -> Result<Multiset<usize>, DiagramError> {
    Ok(al_multiset(g, e)?.map(ArmLeg::hook))
}

/// `AL_G(G)`.
pub fn al(g: &CellSet) -> Multiset<ArmLeg> {
    g.iter()
        .map(|x| g.arm_leg(x).expect("cell drawn from the set"))
        .collect()
}

/// `H(G)`.
pub fn hooks(g: &CellSet) -> Multiset<usize> {
    al(g).map(ArmLeg::hook)
}
