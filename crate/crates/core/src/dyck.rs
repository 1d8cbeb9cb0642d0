//! Labelled lattice paths read off the arm prefixes `T_(i)`.
//!
//! In `T_(i)` the cells with arm `i-1` carry labels `x_1..x_k` from bottom
//! to top, and the arm-0 cells carry `z_1..z_k` from top to bottom. Reading
//! the labels column by column gives `σ_i`; x labels are up steps, z labels
//! are down steps.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::diagram::{build_region, Cell, Partition, RegionKind};
use crate::DyckError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    X,
    Z,
}

impl LabelKind {
    pub fn letter(self) -> char {
        match self {
            LabelKind::X => 'x',
            LabelKind::Z => 'z',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub kind: LabelKind,
    pub index: usize,
    /// Position of the labelled cell in `T`.
    pub cell: Cell,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

/// The two label families of `T_(i)`; `x[j-1]` is `x_j`, `z[j-1]` is `z_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub i: usize,
    pub x: Vec<Label>,
    pub z: Vec<Label>,
}

fn check_index(p: &Partition, i: usize) -> Result<(), DyckError> {
    if i == 0 || i > p.n() {
        Err(DyckError::IndexOutOfRange {
            index: i,
            max: p.n(),
        })
    } else {
        Ok(())
    }
}

pub fn label_cells(p: &Partition, i: usize) -> Result<Labeling, DyckError> {
    check_index(p, i)?;
    let k = p.k();
    let t = build_region(p, RegionKind::T);
    // every row of T has n cells, so position from the right is exact
    let from_right = |row: usize, offset: usize| {
        t.row(row)
            .rev()
            .nth(offset)
            .expect("row of T has n cells")
    };
    let x = (1..=k)
        .map(|j| Label {
            kind: LabelKind::X,
            index: j,
            cell: from_right(j, i - 1),
        })
        .collect();
    let z = (1..=k)
        .map(|j| Label {
            kind: LabelKind::Z,
            index: j,
            cell: from_right(k + 1 - j, 0),
        })
        .collect();
    Ok(Labeling { i, x, z })
}

/// The permutation `σ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma {
    labels: Vec<Label>,
}

impl Sigma {
    /// Column ascending; within a column x before z; within a kind,
    /// bottom to top.
    pub fn from_labeling(l: &Labeling) -> Sigma {
        let mut labels: Vec<Label> = l.x.iter().chain(l.z.iter()).copied().collect();
        labels.sort_by_key(|lab| (lab.cell.col, lab.kind, lab.cell.row));
        Sigma { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.labels.len() / 2
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, lab) in self.labels.iter().enumerate() {
            if t > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{lab}")?;
        }
        Ok(())
    }
}

pub fn build_sigma(p: &Partition, i: usize) -> Result<Sigma, DyckError> {
    Ok(Sigma::from_labeling(&label_cells(p, i)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn delta(self) -> i64 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub dir: Direction,
    pub label: Label,
}

/// A validated Dyck path with labelled steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<Step>,
    ordinates: Vec<usize>,
}

impl DyckPath {
    /// Validates the ±1 sequence: starts and ends at 0, never negative.
    pub fn from_steps(steps: Vec<Step>) -> Result<DyckPath, DyckError> {
        let mut ordinates = Vec::with_capacity(steps.len() + 1);
        let mut y: i64 = 0;
        ordinates.push(0);
        for (t, s) in steps.iter().enumerate() {
            y += s.dir.delta();
            if y < 0 {
                return Err(DyckError::NotADyckPath(format!(
                    "ordinate drops below 0 at step {}",
                    t + 1
                )));
            }
            ordinates.push(y as usize);
        }
        if y != 0 {
            return Err(DyckError::NotADyckPath(format!("path ends at height {y}")));
        }
        Ok(DyckPath { steps, ordinates })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `y_0, ..., y_{2k}`.
    pub fn ordinates(&self) -> &[usize] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn max_height(&self) -> usize {
        self.ordinates.iter().copied().max().unwrap_or(0)
    }

    /// Height of step `t` (1-based), which is `y_{t-1}`.
    pub fn step_height(&self, t: usize) -> Result<usize, DyckError> {
        if t == 0 || t > self.steps.len() {
            return Err(DyckError::IndexOutOfRange {
                index: t,
                max: self.steps.len(),
            });
        }
        Ok(self.ordinates[t - 1])
    }

    /// Height of the step carrying the given label.
    pub fn label_height(&self, kind: LabelKind, index: usize) -> Option<usize> {
        self.steps
            .iter()
            .position(|s| s.label.kind == kind && s.label.index == index)
            .map(|t| self.ordinates[t])
    }

    /// `U`/`D` line over an aligned label line.
    pub fn render_text(&self) -> String {
        let names: Vec<String> = self.steps.iter().map(|s| s.label.to_string()).collect();
        let width = names.iter().map(String::len).max().unwrap_or(1);
        let mut dirs = String::new();
        let mut labels = String::new();
        for (s, name) in self.steps.iter().zip(&names) {
            let d = match s.dir {
                Direction::Up => "U",
                Direction::Down => "D",
            };
            dirs.push_str(&format!("{d:<width$} "));
            labels.push_str(&format!("{name:<width$} "));
        }
        format!("{}\n{}\n", dirs.trim_end(), labels.trim_end())
    }

    /// Mountain drawing with `/` and `\`, highest level first.
    pub fn render_mountain(&self) -> String {
        let h = self.max_height();
        let mut grid = vec![vec![' '; self.steps.len()]; h];
        for (t, s) in self.steps.iter().enumerate() {
            let y = self.ordinates[t];
            match s.dir {
                Direction::Up => grid[h - 1 - y][t] = '/',
                Direction::Down => grid[h - y][t] = '\\',
            }
        }
        grid.into_iter()
            .map(|line| {
                let mut s: String = line.into_iter().collect();
                s.truncate(s.trim_end().len());
                s + "\n"
            })
            .collect()
    }
}

/// `{"steps":[{"dir":1,"kind":"x","index":j},...]}`
impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct StepJson {
            dir: i64,
            kind: String,
            index: usize,
        }
        let steps: Vec<StepJson> = self
            .steps
            .iter()
            .map(|s| StepJson {
                dir: s.dir.delta(),
                kind: s.label.kind.letter().to_string(),
                index: s.label.index,
            })
            .collect();
        let mut st = serializer.serialize_struct("DyckPath", 1)?;
        st.serialize_field("steps", &steps)?;
        st.end()
    }
}

/// x labels step up, z labels step down.
pub fn build_dyck(s: &Sigma) -> Result<DyckPath, DyckError> {
    let steps = s
        .labels()
        .iter()
        .map(|&label| Step {
            dir: match label.kind {
                LabelKind::X => Direction::Up,
                LabelKind::Z => Direction::Down,
            },
            label,
        })
        .collect();
    DyckPath::from_steps(steps)
}

/// `P_i`: `z_{P(j)}` is the down step paired with the up step `x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    map: Vec<usize>,
}

impl Pairing {
    /// Index of the z label paired with `x_j`.
    pub fn get(&self, j: usize) -> usize {
        self.map[j - 1]
    }

    /// `[P(1), ..., P(k)]`.
    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map.iter().all(|&v| {
            v >= 1 && v <= seen.len() && !std::mem::replace(&mut seen[v - 1], true)
        })
    }
}

impl Serialize for Pairing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.map.serialize(serializer)
    }
}

/// Pairs each up step at height `h` with the first later down step at
/// height `h+1`. This is bracket matching: the pending up steps form a
/// stack and a down step closes the most recent one.
pub fn pair_updown(d: &DyckPath) -> Result<Pairing, DyckError> {
    let k = d.steps.iter().filter(|s| s.dir == Direction::Up).count();
    let mut map = vec![0; k];
    let mut open: Vec<usize> = Vec::new();
    for s in &d.steps {
        match s.dir {
            Direction::Up => open.push(s.label.index),
            Direction::Down => {
                let j = open
                    .pop()
                    .ok_or_else(|| DyckError::NotADyckPath("unmatched down step".into()))?;
                map[j - 1] = s.label.index;
            }
        }
    }
    if let Some(&j) = open.last() {
        let height = d.label_height(LabelKind::X, j).unwrap_or(0);
        return Err(DyckError::NoMatchingDownStep { step: j, height });
    }
    Ok(Pairing { map })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig3() -> Partition {
        Partition::new(vec![11, 11, 9, 8, 8, 6, 3, 1, 0], 9, 11).unwrap()
    }

    fn sigma_names(s: &Sigma) -> String {
        s.labels().iter().map(|l| l.to_string()).collect()
    }

    /// Pairing read literally: scan forward for the first down step whose
    /// height is one more than the up step's height.
    fn pair_by_scan(d: &DyckPath) -> Vec<usize> {
        let steps = d.steps();
        let mut out = vec![0; steps.len() / 2];
        for (t, s) in steps.iter().enumerate() {
            if s.dir != Direction::Up {
                continue;
            }
            let h = d.step_height(t + 1).unwrap();
            let (_, down) = steps
                .iter()
                .enumerate()
                .skip(t + 1)
                .find(|(u, st)| st.dir == Direction::Down && d.step_height(u + 1).unwrap() == h + 1)
                .unwrap();
            out[s.label.index - 1] = down.label.index;
        }
        out
    }

    #[test]
    fn two_row_labels() {
        let p = Partition::new(vec![1, 0], 2, 1).unwrap();
        let l = label_cells(&p, 1).unwrap();
        assert_eq!(l.x[0].cell, Cell::new(1, 1));
        assert_eq!(l.x[1].cell, Cell::new(2, 2));
        assert_eq!(l.z[0].cell, Cell::new(2, 2));
        assert_eq!(l.z[1].cell, Cell::new(1, 1));
        assert_eq!(sigma_names(&build_sigma(&p, 1).unwrap()), "x1z2x2z1");
        assert!(matches!(
            label_cells(&p, 2),
            Err(DyckError::IndexOutOfRange { index: 2, max: 1 })
        ));
    }

    #[test]
    fn fig3_sigma_and_pairing() {
        let s = build_sigma(&fig3(), 3).unwrap();
        assert_eq!(
            sigma_names(&s),
            "x1x2x3z9z8x4x5z7x6z6z5z4x7x8z3x9z2z1"
        );
        let d = build_dyck(&s).unwrap();
        assert_eq!(d.max_height(), 3);
        assert_eq!(d.label_height(LabelKind::X, 4), Some(1));
        assert_eq!(d.label_height(LabelKind::Z, 9), Some(3));
        let pairing = pair_updown(&d).unwrap();
        assert_eq!(pairing.as_slice(), &[4, 8, 9, 5, 7, 6, 1, 3, 2]);
        assert!(pairing.is_permutation());
        assert_eq!(pair_by_scan(&d), pairing.as_slice());
    }

    #[test]
    fn labels_share_rows() {
        let p = fig3();
        for i in 1..=11 {
            let l = label_cells(&p, i).unwrap();
            for j in 1..=9 {
                assert_eq!(l.x[j - 1].cell.row, l.z[9 - j].cell.row);
            }
        }
    }

    #[test]
    fn small_path_shapes() {
        let p = Partition::new(vec![1, 0], 2, 1).unwrap();
        let d = build_dyck(&build_sigma(&p, 1).unwrap()).unwrap();
        assert_eq!(d.ordinates(), &[0, 1, 0, 1, 0]);
        assert_eq!(d.step_height(1), Ok(0));
        assert!(d.step_height(5).is_err());
        assert_eq!(pair_updown(&d).unwrap().as_slice(), &[2, 1]);
        assert_eq!(d.render_text(), "U  D  U  D\nx1 z2 x2 z1\n");
        assert_eq!(d.render_mountain(), "/\\/\\\n");
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"steps":[{"dir":1,"kind":"x","index":1},{"dir":-1,"kind":"z","index":2},{"dir":1,"kind":"x","index":2},{"dir":-1,"kind":"z","index":1}]}"#
        );
    }

    #[test]
    fn nested_pairing() {
        let lab = |kind, index| Label {
            kind,
            index,
            cell: Cell::new(1, 1),
        };
        let steps = vec![
            Step { dir: Direction::Up, label: lab(LabelKind::X, 1) },
            Step { dir: Direction::Up, label: lab(LabelKind::X, 2) },
            Step { dir: Direction::Down, label: lab(LabelKind::Z, 1) },
            Step { dir: Direction::Down, label: lab(LabelKind::Z, 2) },
        ];
        let d = DyckPath::from_steps(steps).unwrap();
        // the outer up step (height 0) closes on the last down step
        assert_eq!(pair_updown(&d).unwrap().as_slice(), &[2, 1]);
        assert_eq!(pair_by_scan(&d), vec![2, 1]);
    }

    #[test]
    fn rejects_non_dyck() {
        let lab = |kind, index| Label {
            kind,
            index,
            cell: Cell::new(1, 1),
        };
        let down_first = vec![
            Step { dir: Direction::Down, label: lab(LabelKind::Z, 1) },
            Step { dir: Direction::Up, label: lab(LabelKind::X, 1) },
        ];
        assert!(matches!(
            DyckPath::from_steps(down_first),
            Err(DyckError::NotADyckPath(_))
        ));
        let unbalanced = vec![Step { dir: Direction::Up, label: lab(LabelKind::X, 1) }];
        assert!(DyckPath::from_steps(unbalanced).is_err());
    }

    #[test]
    fn sigma_starts_with_x1() {
        for k in 1..=5 {
            for n in 1..=5 {
                for p in crate::enumerate::partitions(k, n) {
                    for i in 1..=n {
                        let s = build_sigma(&p, i).unwrap();
                        let first = s.labels()[0];
                        assert_eq!((first.kind, first.index), (LabelKind::X, 1), "{p} i={i}");
                    }
                }
            }
        }
    }
}
