//! Partitions of the form `(λ | λ - 1)` and the diagonal split identity.
//!
//! For these partitions `n = k + 1` and every region has an anti-diagonal
//! `row + col = S`; `p(G)` keeps the cells on or below it and `q(G)` the
//! cells strictly above. Arm and leg lengths of cells in `p(G)` and `q(G)`
//! are measured in `G` itself.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{al_multiset, arm_prefix, arm_slice, build_region, Cell, CellSet, Partition, RegionKind};
use crate::multiset::{range_multiset, ArmLeg, Multiset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectiveError {
    #[error("parts must be strictly decreasing")]
    NotStrict,
    #[error("parts must be positive")]
    ZeroPart,
    #[error("largest part {part} exceeds k = {k}")]
    PartExceedsK { part: usize, k: usize },
    #[error("k must be positive")]
    ZeroK,
    #[error("class B needs n = k + 1, got k = {k}, n = {n}")]
    WrongN { k: usize, n: usize },
    #[error("region {0} has no diagonal")]
    KindWithoutDiagonal(RegionKind),
    #[error("arm index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no cell of T_[{i}] lies above the diagonal")]
    NoShiftRow { i: usize },
    #[error("projective counterexample at alpha = {alpha}: {detail}")]
    CounterexampleFound { alpha: Partition, detail: String },
}

/// `λ_1 > ... > λ_m > 0` with `λ_1 <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrictPartition {
    parts: Vec<usize>,
    k: usize,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>, k: usize) -> Result<Self, ProjectiveError> {
        if k == 0 {
            return Err(ProjectiveError::ZeroK);
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(ProjectiveError::NotStrict);
        }
        if parts.last() == Some(&0) {
            return Err(ProjectiveError::ZeroPart);
        }
        if let Some(&first) = parts.first() {
            if first > k {
                return Err(ProjectiveError::PartExceedsK { part: first, k });
            }
        }
        Ok(StrictPartition { parts, k })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// A partition `α` with `k` parts and `n = k + 1` whose Frobenius
/// coordinates are `(λ_1, ..., λ_m | λ_1 - 1, ..., λ_m - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassBPartition {
    alpha: Partition,
    lambda: StrictPartition,
}

impl ClassBPartition {
    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn lambda(&self) -> &StrictPartition {
        &self.lambda
    }

    pub fn k(&self) -> usize {
        self.alpha.k()
    }

    /// Number of diagonal cells of `D`.
    pub fn m(&self) -> usize {
        self.lambda.m()
    }
}

impl fmt::Display for ClassBPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (λ = {:?})", self.alpha, self.lambda.parts)
    }
}

/// Rows `j <= m` get `λ_j + j` cells; a lower row `j > m` gets one cell
/// for each diagonal column `c` whose length `λ_c + c - 1` reaches it.
pub fn alpha_from_strict(l: &StrictPartition) -> ClassBPartition {
    let k = l.k();
    let lam = l.parts();
    let m = lam.len();
    let parts = (1..=k)
        .map(|j| {
            if j <= m {
                lam[j - 1] + j
            } else {
                (1..=m).filter(|&c| lam[c - 1] + c > j).count()
            }
        })
        .collect();
    ClassBPartition {
        alpha: Partition::new(parts, k, k + 1).expect("class B parts fit in k x (k+1)"),
        lambda: l.clone(),
    }
}

/// Reads `λ_j = α_j - j` off the diagonal and accepts when the column
/// lengths match `λ_j + j - 1`.
pub fn is_class_b(p: &Partition) -> Result<Option<ClassBPartition>, ProjectiveError> {
    let k = p.k();
    if p.n() != k + 1 {
        return Err(ProjectiveError::WrongN { k, n: p.n() });
    }
    let m = (1..=k).take_while(|&j| p.part(j) >= j).count();
    let lambda: Vec<usize> = (1..=m).map(|j| p.part(j) - j).collect();
    if lambda.last() == Some(&0) {
        return Ok(None);
    }
    let columns = p.conjugate();
    if (1..=m).any(|j| columns.part(j) != lambda[j - 1] + j - 1) {
        return Ok(None);
    }
    let strict = StrictPartition::new(lambda, k)?;
    let b = alpha_from_strict(&strict);
    debug_assert_eq!(&b.alpha, p);
    Ok(Some(b))
}

/// Regions that carry a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalKind {
    D,
    R,
    T,
    SQ,
    TStar,
    /// `T_(i)`
    ArmPrefix(usize),
    /// `T_[i]`
    ArmSlice(usize),
}

impl TryFrom<RegionKind> for DiagonalKind {
    type Error = ProjectiveError;

    fn try_from(kind: RegionKind) -> Result<Self, Self::Error> {
        match kind {
            RegionKind::D => Ok(DiagonalKind::D),
            RegionKind::R => Ok(DiagonalKind::R),
            RegionKind::T => Ok(DiagonalKind::T),
            RegionKind::SQ => Ok(DiagonalKind::SQ),
            RegionKind::TStar => Ok(DiagonalKind::TStar),
            other => Err(ProjectiveError::KindWithoutDiagonal(other)),
        }
    }
}

/// The anti-diagonal `row + col = sum` of a region and its listed cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSpec {
    pub sum: usize,
    pub cells: Vec<Cell>,
}

impl DiagonalSpec {
    pub fn new(kind: DiagonalKind, b: &ClassBPartition) -> DiagonalSpec {
        let k = b.k();
        let m = b.m();
        let a1 = b.alpha.part(1);
        let ak = b.alpha.part(k);
        match kind {
            DiagonalKind::D => DiagonalSpec {
                sum: k + 1,
                cells: (1..=m).map(|j| Cell::new(k + 1 - j, j)).collect(),
            },
            DiagonalKind::R => DiagonalSpec {
                sum: k + 1,
                cells: (1..=k).map(|j| Cell::new(k + 1 - j, j)).collect(),
            },
            DiagonalKind::T | DiagonalKind::SQ | DiagonalKind::ArmPrefix(_) | DiagonalKind::ArmSlice(_) => {
                DiagonalSpec {
                    sum: k + a1 + 1,
                    cells: (1..=k - m).map(|j| Cell::new(k + 1 - j, a1 + j)).collect(),
                }
            }
            DiagonalKind::TStar => DiagonalSpec {
                sum: 2 * k + 2 - ak,
                cells: (1..=m).map(|j| Cell::new(k + 1 - j, k + 1 - ak + j)).collect(),
            },
        }
    }

    pub fn on_or_below(&self, c: Cell) -> bool {
        c.row + c.col <= self.sum
    }
}

/// Builds the region for a diagonal kind. Arm indices must lie in `1..=k+1`.
pub fn diagonal_region(b: &ClassBPartition, kind: DiagonalKind) -> Result<CellSet, ProjectiveError> {
    let region = |k| build_region(&b.alpha, k);
    let n = b.k() + 1;
    let check = |i: usize| {
        if i == 0 || i > n {
            Err(ProjectiveError::IndexOutOfRange { index: i, max: n })
        } else {
            Ok(())
        }
    };
    Ok(match kind {
        DiagonalKind::D => region(RegionKind::D),
        DiagonalKind::R => region(RegionKind::R),
        DiagonalKind::T => region(RegionKind::T),
        DiagonalKind::SQ => region(RegionKind::SQ),
        DiagonalKind::TStar => region(RegionKind::TStar),
        DiagonalKind::ArmPrefix(i) => {
            check(i)?;
            arm_prefix(&region(RegionKind::T), i).expect("index checked")
        }
        DiagonalKind::ArmSlice(i) => {
            check(i)?;
            arm_slice(&region(RegionKind::T), i).expect("index checked")
        }
    })
}

/// `(p(g), q(g))` for a region built from `b`.
pub fn split_pq(g: &CellSet, kind: DiagonalKind, b: &ClassBPartition) -> (CellSet, CellSet) {
    let diag = DiagonalSpec::new(kind, b);
    let p = g.filter(|c| diag.on_or_below(c));
    let q = g.difference(&p);
    (p, q)
}

/// Convenience for region tags; fails for regions without a diagonal.
pub fn split_region(b: &ClassBPartition, kind: RegionKind) -> Result<(CellSet, CellSet), ProjectiveError> {
    let dk = DiagonalKind::try_from(kind)?;
    Ok(split_pq(&build_region(&b.alpha, kind), dk, b))
}

/// `α_j` extended by `α_0 = ∞` and `α_j = 0` for `j > k`.
fn alpha_ext(alpha: &Partition, j: usize) -> i64 {
    if j == 0 {
        i64::MAX / 4
    } else {
        alpha.part(j) as i64
    }
}

/// Smallest row whose `T_[i]` cell lies strictly above the diagonal of `T`,
/// i.e. the smallest `a` with `a - α_a > i - 1`.
pub fn shift_row(b: &ClassBPartition, i: usize) -> Option<usize> {
    (1..=b.k()).find(|&a| a > b.alpha.part(a) + i - 1)
}

/// The split index: smallest `s` in `1..=k+1` with `α_s <= i - 1`.
pub fn split_index(b: &ClassBPartition, i: usize) -> usize {
    (1..=b.k() + 1)
        .find(|&s| b.alpha.part(s) < i)
        .expect("α_{k+1} = 0")
}

/// `T^i` together with its shift row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedT {
    pub cells: CellSet,
    pub u: Option<usize>,
    /// `α` with parts `u..=k` set to zero; `T^i` is the `T` region of it.
    pub alpha: Partition,
}

/// `T` with rows `u..=k` pushed right until they end in column `α_1 + k + 1`.
pub fn shift_ti(b: &ClassBPartition, i: usize) -> Result<ShiftedT, ProjectiveError> {
    let k = b.k();
    if i == 0 || i > k + 1 {
        return Err(ProjectiveError::IndexOutOfRange { index: i, max: k + 1 });
    }
    let t = build_region(&b.alpha, RegionKind::T);
    let Some(u) = shift_row(b, i) else {
        return Ok(ShiftedT {
            cells: t,
            u: None,
            alpha: b.alpha.clone(),
        });
    };
    let cells = t
        .iter()
        .map(|c| {
            if c.row >= u {
                Cell::new(c.row, c.col + b.alpha.part(c.row))
            } else {
                c
            }
        })
        .collect();
    let parts = (1..=k)
        .map(|a| if a >= u { 0 } else { b.alpha.part(a) })
        .collect();
    Ok(ShiftedT {
        cells,
        u: Some(u),
        alpha: Partition::new(parts, k, k + 1).expect("zeroing a suffix keeps the order"),
    })
}

/// The four parts of the shift-row proposition, each a pair of inequalities.
pub fn check_techprop(b: &ClassBPartition, i: usize) -> Result<[bool; 4], ProjectiveError> {
    let u = shift_row(b, i).ok_or(ProjectiveError::NoShiftRow { i })?;
    let a = |j: usize| alpha_ext(&b.alpha, j);
    let (ui, ii) = (u as i64, i as i64);
    let part1 = ui - a(u) > ii - 1 && (u == 1 || ui - 1 - a(u - 1) < ii);
    let part2 = u > b.m();
    let part3 = a(u - i) >= ui && a(u - i + 1) <= ui;
    let part4 = a(u) + ii <= a(u - i) && a(u - 1) + ii >= a(u - i + 1);
    Ok([part1, part2, part3, part4])
}

/// Legs of the cells of `part` with arm `arm`, both measured in `g`.
fn legs_at_arm(g: &CellSet, part: &CellSet, arm: usize, keep: impl Fn(Cell) -> bool) -> Multiset<usize> {
    part.iter()
        .filter(|&c| keep(c) && g.arm(c) == Ok(arm))
        .map(|c| g.leg(c).expect("cell of g"))
        .collect()
}

/// Leg multisets of the arm-`(i-1)` cells used for one `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDecomposition {
    pub k: usize,
    pub i: usize,
    pub u: usize,
    pub s: usize,
    /// in `T^i`
    pub m1: Multiset<usize>,
    /// in `(T^i)*`
    pub m2: Multiset<usize>,
    /// in `p(T)`
    pub m3: Multiset<usize>,
    /// in `q(D)`
    pub m4: Multiset<usize>,
    /// `M1` on or below the diagonal of `T^i`
    pub m11: Multiset<usize>,
    /// `M1` above it
    pub m12: Multiset<usize>,
    /// `M2` in columns `1..=k+1`
    pub m21: Multiset<usize>,
    /// `M2` right of column `k+1`, on or below the diagonal
    pub m22: Multiset<usize>,
    /// `M2` above the diagonal
    pub m23: Multiset<usize>,
}

impl MDecomposition {
    /// Named equalities with their outcome, in the order they are proved.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let (u, s, i, k) = (
            self.u as isize,
            self.bottom() as isize,
            self.i as isize,
            self.k as isize,
        );
        vec![
            ("M1 = M11 + M12", self.m1 == self.m11.union(&self.m12)),
            (
                "M2 = M21 + M22 + M23",
                self.m2 == self.m21.union(&self.m22).union(&self.m23),
            ),
            ("M1 = M2", self.m1 == self.m2),
            ("M11 = M3", self.m11 == self.m3),
            ("M12 = {u-s..k-s}", self.m12 == range_multiset(u - s, k - s)),
            ("M21 = {0..k-s}", self.m21 == range_multiset(0, k - s)),
            ("M22 = {u-s..i-2}", self.m22 == range_multiset(u - s, i - 2)),
            ("M23 = M4", self.m23 == self.m4),
            (
                "M3 = M4 + {0..i-2}",
                self.m3 == self.m4.union(&range_multiset(0, i - 2)),
            ),
        ]
    }

    /// Lowest row of `T^i` in the column holding its arm-`(i-1)` cells of
    /// the shifted rows: `min(s, u)`. Equals `s` whenever `s <= u`.
    pub fn bottom(&self) -> usize {
        self.s.min(self.u)
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }
}

/// Computes the four leg multisets for arm `i - 1` by enumeration.
pub fn m_decomposition(b: &ClassBPartition, i: usize) -> Result<MDecomposition, ProjectiveError> {
    let k = b.k();
    let shifted = shift_ti(b, i)?;
    let u = shifted.u.ok_or(ProjectiveError::NoShiftRow { i })?;
    let s = split_index(b, i);
    let arm = i - 1;

    let ti = &shifted.cells;
    let ti_star = build_region(&shifted.alpha, RegionKind::TStar);
    let t_sum = DiagonalSpec::new(DiagonalKind::T, b).sum;
    let star_sum = 2 * k + 2;

    let t = build_region(&b.alpha, RegionKind::T);
    let d = build_region(&b.alpha, RegionKind::D);
    let (p_t, _) = split_pq(&t, DiagonalKind::T, b);
    let (_, q_d) = split_pq(&d, DiagonalKind::D, b);

    Ok(MDecomposition {
        k,
        i,
        u,
        s,
        m1: legs_at_arm(ti, ti, arm, |_| true),
        m2: legs_at_arm(&ti_star, &ti_star, arm, |_| true),
        m3: legs_at_arm(&t, &p_t, arm, |_| true),
        m4: legs_at_arm(&d, &q_d, arm, |_| true),
        m11: legs_at_arm(ti, ti, arm, |c| c.row + c.col <= t_sum),
        m12: legs_at_arm(ti, ti, arm, |c| c.row + c.col > t_sum),
        m21: legs_at_arm(&ti_star, &ti_star, arm, |c| c.col <= k + 1),
        m22: legs_at_arm(&ti_star, &ti_star, arm, |c| c.col > k + 1 && c.row + c.col <= star_sum),
        m23: legs_at_arm(&ti_star, &ti_star, arm, |c| c.row + c.col > star_sum),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// Per-`i` outcome of the shift-row proposition and the M-set identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PerIndex {
    pub i: usize,
    pub u: Option<usize>,
    pub s: usize,
    pub techprop: Option<[bool; 4]>,
    pub m_checks: CheckStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed_checks: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProjectiveReport {
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub m: usize,
    #[serde(serialize_with = "pass_fail")]
    pub theorem: bool,
    /// `p(SQ)` and `p(T)` are the same cells with the same statistics.
    #[serde(rename = "pSqEqualsPT", serialize_with = "pass_fail")]
    pub p_sq_equals_p_t: bool,
    #[serde(skip)]
    pub lhs: Multiset<ArmLeg>,
    #[serde(skip)]
    pub rhs: Multiset<ArmLeg>,
    pub per_i: Vec<PerIndex>,
}

fn pass_fail<S: serde::Serializer>(ok: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(if *ok { "pass" } else { "fail" })
}

impl ProjectiveReport {
    pub fn passed(&self) -> bool {
        self.theorem
            && self.p_sq_equals_p_t
            && self.per_i.iter().all(|r| {
                r.m_checks != CheckStatus::Fail && r.techprop.is_none_or(|t| t.iter().all(|&b| b))
            })
    }

    pub fn first_problem(&self) -> Option<String> {
        if !self.theorem {
            let d = self.lhs.first_difference(&self.rhs)?;
            return Some(format!(
                "AL(p(SQ)) and AL(p(R)) + AL(q(D)) differ at {}: {} vs {}",
                d.value, d.left, d.right
            ));
        }
        if !self.p_sq_equals_p_t {
            return Some("p(SQ) differs from p(T)".into());
        }
        self.per_i.iter().find_map(|r| {
            if let Some(t) = r.techprop.filter(|t| !t.iter().all(|&b| b)) {
                return Some(format!("i = {}: shift-row inequalities {t:?}", r.i));
            }
            (r.m_checks == CheckStatus::Fail)
                .then(|| format!("i = {}: {}", r.i, r.failed_checks.join(", ")))
        })
    }
}

/// Enumerates both sides of `AL(p(SQ)) = AL(p(R)) ⊎ AL(q(D))` and runs the
/// per-`i` decomposition for every `i` in `1..=k+1`.
pub fn check_projective(b: &ClassBPartition) -> ProjectiveReport {
    let region = |kind| build_region(&b.alpha, kind);
    let measured = |kind: RegionKind, keep_p: bool| {
        let g = region(kind);
        let (p, q) = split_pq(&g, DiagonalKind::try_from(kind).expect("region has a diagonal"), b);
        let part = if keep_p { p } else { q };
        let stats = al_multiset(&g, &part).expect("part of g");
        (part, stats)
    };
    let (p_sq, lhs) = measured(RegionKind::SQ, true);
    let (p_t, p_t_stats) = measured(RegionKind::T, true);
    let (_, p_r) = measured(RegionKind::R, true);
    let (_, q_d) = measured(RegionKind::D, false);
    let rhs = p_r.union(&q_d);

    let per_i = (1..=b.k() + 1)
        .map(|i| {
            let u = shift_row(b, i);
            let s = split_index(b, i);
            let techprop = check_techprop(b, i).ok();
            let (m_checks, failed_checks) = match m_decomposition(b, i) {
                Ok(md) => {
                    let failed: Vec<&'static str> = md
                        .checks()
                        .into_iter()
                        .filter(|(_, ok)| !ok)
                        .map(|(name, _)| name)
                        .collect();
                    let status = if failed.is_empty() {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail
                    };
                    (status, failed)
                }
                Err(_) => (CheckStatus::Skipped, Vec::new()),
            };
            PerIndex {
                i,
                u,
                s,
                techprop,
                m_checks,
                failed_checks,
            }
        })
        .collect();

    ProjectiveReport {
        alpha: b.alpha.parts().to_vec(),
        lambda: b.lambda.parts().to_vec(),
        m: b.m(),
        theorem: lhs == rhs,
        p_sq_equals_p_t: p_sq == p_t && lhs == p_t_stats,
        lhs,
        rhs,
        per_i,
    }
}

pub fn verify_projective(b: &ClassBPartition) -> Result<ProjectiveReport, ProjectiveError> {
    let report = check_projective(b);
    match report.first_problem() {
        None => Ok(report),
        Some(detail) => Err(ProjectiveError::CounterexampleFound {
            alpha: b.alpha.clone(),
            detail,
        }),
    }
}
