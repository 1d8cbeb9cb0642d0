//! Explicit arm/leg preserving bijections and their certificates.
//!
//! `phi` maps `T` onto `T*` through the Dyck path pairings. `zeta(1..=3)`
//! are the three region correspondences `V → R1`, `T*1 → R2`, `T*2 → D`,
//! and `psi` composes them with `phi` into a bijection `SQ → R ⊎ D`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{al, build_region, hooks, Cell, CellSet, Partition, RegionKind};
use crate::dyck::{build_dyck, label_cells, pair_updown, Sigma};
use crate::multiset::{ArmLeg, Multiset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("cell {0} is not in T")]
    CellNotInT(Cell),
    #[error("counterexample for theorem {theorem} at alpha = {alpha}: {detail}")]
    CounterexampleFound {
        theorem: Theorem,
        alpha: Partition,
        detail: String,
    },
}

/// The identities checked by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `H(SQ) = H(R) ⊎ H(D)`
    Hooks,
    /// `AL(SQ) = AL(R) ⊎ AL(D)`
    ArmLegs,
    /// `AL(T) = AL(T*)`
    Symmetric,
    /// `AL(p(SQ)) = AL(p(R)) ⊎ AL(q(D))` over class B
    Projective,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Hooks => "1",
            Theorem::ArmLegs => "2",
            Theorem::Symmetric => "3",
            Theorem::Projective => "proj",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" => Ok(Theorem::Hooks),
            "2" => Ok(Theorem::ArmLegs),
            "3" => Ok(Theorem::Symmetric),
            "proj" | "projective" => Ok(Theorem::Projective),
            other => Err(format!("unknown theorem `{other}` (expected 1, 2, 3 or proj)")),
        }
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// 180 degree rotation carrying `T` onto `T*` in absolute coordinates.
pub fn rot_t(p: &Partition, x: Cell) -> Result<Cell, BijectionError> {
    if !build_region(p, RegionKind::T).contains(x) {
        return Err(BijectionError::CellNotInT(x));
    }
    Ok(rotate_t_cell(p, x, p.n()))
}

/// 180 degree rotation carrying `T_(i)` onto `(T*)_(i)`. Coincides with
/// [`rot_t`] at `i = n`; for smaller `i` the image sits `n - i` columns
/// further right.
pub fn rot_prefix(p: &Partition, i: usize, x: Cell) -> Cell {
    rotate_t_cell(p, x, i)
}

fn rotate_t_cell(p: &Partition, x: Cell, i: usize) -> Cell {
    let k = p.k();
    let n = p.n();
    let axis = 2 * n + p.part(1) - p.part(k) + 1 - i;
    Cell::new(k + 1 - x.row, axis - x.col)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub from: Cell,
    pub to: Cell,
    /// Region the image cell belongs to.
    pub target: RegionKind,
    /// Statistic of `from` in the source diagram.
    pub al: ArmLeg,
}

/// An explicit cell correspondence, entries sorted by source cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMap {
    pub source: RegionKind,
    entries: Vec<MapEntry>,
}

impl CellMap {
    fn new(source: RegionKind, mut entries: Vec<MapEntry>) -> Self {
        entries.sort_by_key(|e| e.from);
        CellMap { source, entries }
    }

    pub fn entries(&self) -> &[MapEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, from: Cell) -> Option<&MapEntry> {
        self.entries
            .binary_search_by_key(&from, |e| e.from)
            .ok()
            .map(|idx| &self.entries[idx])
    }

    pub fn image(&self, target: RegionKind) -> CellSet {
        self.entries
            .iter()
            .filter(|e| e.target == target)
            .map(|e| e.to)
            .collect()
    }
}

#[derive(Serialize)]
struct EntryJson {
    from: [usize; 2],
    to: [usize; 2],
    target: RegionKind,
    al: [usize; 2],
}

impl From<&MapEntry> for EntryJson {
    fn from(e: &MapEntry) -> Self {
        EntryJson {
            from: [e.from.row, e.from.col],
            to: [e.to.row, e.to.col],
            target: e.target,
            al: [e.al.arm, e.al.leg],
        }
    }
}

/// `[{"from":[r,c],"to":[r,c],"target":"R","al":[a,l]},...]`
impl Serialize for CellMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(EntryJson::from))
    }
}

fn stat(g: &CellSet, x: Cell) -> ArmLeg {
    g.arm_leg(x).expect("cell belongs to its source diagram")
}

/// `φ: T → T*`. The cell labelled `x_j` in `T_(i)` goes to the rotated
/// image of the cell labelled `z_{P_i(j)}`.
pub fn phi(p: &Partition) -> CellMap {
    let t = build_region(p, RegionKind::T);
    let mut entries = Vec::with_capacity(t.len());
    for i in 1..=p.n() {
        let labels = label_cells(p, i).expect("1 <= i <= n");
        let path = build_dyck(&Sigma::from_labeling(&labels)).expect("sigma_i is a Dyck word");
        let pairing = pair_updown(&path).expect("valid Dyck path");
        for x in &labels.x {
            let z = labels.z[pairing.get(x.index) - 1];
            entries.push(MapEntry {
                from: x.cell,
                to: rot_prefix(p, i, z.cell),
                target: RegionKind::TStar,
                al: stat(&t, x.cell),
            });
        }
    }
    CellMap::new(RegionKind::T, entries)
}

/// Which of the three region correspondences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zeta {
    /// `V → R1`: t-th cell from the top of the j-th column from the left.
    One,
    /// `T*1 → R2`: t-th cell from the left of each row.
    Two,
    /// `T*2 → D`: translation left by `n - α_k`.
    Three,
}

impl Zeta {
    pub fn source(self) -> RegionKind {
        match self {
            Zeta::One => RegionKind::V,
            Zeta::Two => RegionKind::T1Star,
            Zeta::Three => RegionKind::T2Star,
        }
    }

    pub fn target(self) -> RegionKind {
        match self {
            Zeta::One => RegionKind::R1,
            Zeta::Two => RegionKind::R2,
            Zeta::Three => RegionKind::D,
        }
    }

    /// Diagram in which the source statistics are measured.
    pub fn source_ambient(self) -> RegionKind {
        match self {
            Zeta::One => RegionKind::SQ,
            Zeta::Two | Zeta::Three => RegionKind::TStar,
        }
    }

    /// Diagram in which the target statistics are measured, which is also
    /// the tag recorded on each entry.
    pub fn target_ambient(self) -> RegionKind {
        match self {
            Zeta::One | Zeta::Two => RegionKind::R,
            Zeta::Three => RegionKind::D,
        }
    }

    fn apply(self, p: &Partition, x: Cell) -> Cell {
        let k = p.k();
        let n = p.n();
        match self {
            Zeta::One => {
                // V's columns are stacked on row k+1; the column over
                // n+j has as many cells as parts of size at least α_1-j+1
                let column_len = (1..=k)
                    .filter(|&a| p.part(a) + x.col > n + p.part(1))
                    .count();
                Cell::new(x.row - column_len, x.col - p.part(1))
            }
            Zeta::Two => Cell::new(x.row, x.col - (p.part(k - x.row + 1) - p.part(k))),
            Zeta::Three => Cell::new(x.row, x.col - (n - p.part(k))),
        }
    }
}

pub fn zeta(p: &Partition, which: Zeta) -> CellMap {
    let ambient = build_region(p, which.source_ambient());
    let entries = build_region(p, which.source())
        .iter()
        .map(|x| MapEntry {
            from: x,
            to: which.apply(p, x),
            target: which.target_ambient(),
            al: stat(&ambient, x),
        })
        .collect();
    CellMap::new(which.source(), entries)
}

/// `ψ: SQ → R ⊎ D`: `ζ1` on `V`; on `T`, `φ` followed by `ζ2` or `ζ3`
/// depending on which half of `T*` the image lands in.
pub fn psi(p: &Partition) -> CellMap {
    let sq = build_region(p, RegionKind::SQ);
    let t1star = build_region(p, RegionKind::T1Star);
    let mut entries: Vec<MapEntry> = build_region(p, RegionKind::V)
        .iter()
        .map(|x| MapEntry {
            from: x,
            to: Zeta::One.apply(p, x),
            target: RegionKind::R,
            al: stat(&sq, x),
        })
        .collect();
    for e in phi(p).entries() {
        let (to, target) = if t1star.contains(e.to) {
            (Zeta::Two.apply(p, e.to), RegionKind::R)
        } else {
            (Zeta::Three.apply(p, e.to), RegionKind::D)
        };
        entries.push(MapEntry {
            from: e.from,
            to,
            target,
            al: stat(&sq, e.from),
        });
    }
    CellMap::new(RegionKind::SQ, entries)
}

/// A region together with the diagram its statistics are measured in.
#[derive(Clone, Debug)]
pub struct Side {
    pub tag: RegionKind,
    pub cells: CellSet,
    pub ambient: CellSet,
}

impl Side {
    pub fn whole(p: &Partition, kind: RegionKind) -> Side {
        let g = build_region(p, kind);
        Side {
            tag: kind,
            cells: g.clone(),
            ambient: g,
        }
    }

    pub fn within(p: &Partition, tag: RegionKind, part: RegionKind, ambient: RegionKind) -> Side {
        Side {
            tag,
            cells: build_region(p, part),
            ambient: build_region(p, ambient),
        }
    }
}

/// Which statistic a certificate compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    ArmLeg,
    Hook,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertEntry {
    pub from: Cell,
    pub to: Cell,
    pub target: RegionKind,
    pub source: ArmLeg,
    pub image: ArmLeg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum CertFailure {
    StatisticMismatch {
        from: [usize; 2],
        to: [usize; 2],
        target: RegionKind,
        source: [usize; 2],
        image: [usize; 2],
    },
    MissingSource { cell: [usize; 2] },
    ExtraSource { cell: [usize; 2] },
    OutsideTarget { target: RegionKind, cell: [usize; 2] },
    NotInjective { target: RegionKind, cell: [usize; 2] },
    UnmappedTarget { target: RegionKind, cell: [usize; 2] },
    UnknownTarget { target: RegionKind },
}

fn pair(c: Cell) -> [usize; 2] {
    [c.row, c.col]
}

impl fmt::Display for CertFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertFailure::StatisticMismatch {
                from,
                to,
                target,
                source,
                image,
            } => write!(
                f,
                "{from:?} -> {target}{to:?}: (arm,leg) {source:?} != {image:?}"
            ),
            CertFailure::MissingSource { cell } => write!(f, "source cell {cell:?} is not mapped"),
            CertFailure::ExtraSource { cell } => {
                write!(f, "map entry {cell:?} is outside the source or repeated")
            }
            CertFailure::OutsideTarget { target, cell } => {
                write!(f, "image {cell:?} is not a cell of {target}")
            }
            CertFailure::NotInjective { target, cell } => {
                write!(f, "image {target}{cell:?} is hit twice")
            }
            CertFailure::UnmappedTarget { target, cell } => {
                write!(f, "target cell {target}{cell:?} is not hit")
            }
            CertFailure::UnknownTarget { target } => write!(f, "unexpected target region {target}"),
        }
    }
}

/// Per-cell record that a map is a bijection preserving a statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub statistic: Statistic,
    pub entries: Vec<CertEntry>,
    pub failures: Vec<CertFailure>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `{"statistic":..,"verdict":"pass"|"fail","failures":[..],"map":[..]}`
impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Row {
            from: [usize; 2],
            to: [usize; 2],
            target: RegionKind,
            al: [usize; 2],
            image_al: [usize; 2],
        }
        let rows: Vec<Row> = self
            .entries
            .iter()
            .map(|e| Row {
                from: pair(e.from),
                to: pair(e.to),
                target: e.target,
                al: [e.source.arm, e.source.leg],
                image_al: [e.image.arm, e.image.leg],
            })
            .collect();
        let mut st = serializer.serialize_struct("Certificate", 4)?;
        st.serialize_field("statistic", &self.statistic)?;
        st.serialize_field("verdict", if self.passed() { "pass" } else { "fail" })?;
        st.serialize_field("failures", &self.failures)?;
        st.serialize_field("map", &rows)?;
        st.end()
    }
}

/// Checks that `map` is a bijection from `source.cells` onto the disjoint
/// union of the target cell sets, and that every cell keeps its statistic.
/// Statistics are recomputed here from the ambient diagrams.
pub fn certify(map: &CellMap, source: &Side, targets: &[Side], statistic: Statistic) -> Certificate {
    let mut failures = Vec::new();
    let mut entries = Vec::with_capacity(map.len());
    let mut seen_source = BTreeSet::new();
    let mut hit: BTreeMap<RegionKind, BTreeSet<Cell>> = BTreeMap::new();

    for e in map.entries() {
        if !source.cells.contains(e.from) || !seen_source.insert(e.from) {
            failures.push(CertFailure::ExtraSource { cell: pair(e.from) });
            continue;
        }
        let Some(side) = targets.iter().find(|s| s.tag == e.target) else {
            failures.push(CertFailure::UnknownTarget { target: e.target });
            continue;
        };
        if !side.cells.contains(e.to) {
            failures.push(CertFailure::OutsideTarget {
                target: e.target,
                cell: pair(e.to),
            });
            continue;
        }
        if !hit.entry(e.target).or_default().insert(e.to) {
            failures.push(CertFailure::NotInjective {
                target: e.target,
                cell: pair(e.to),
            });
        }
        let src = source.ambient.arm_leg(e.from).expect("source cell in ambient");
        let img = side.ambient.arm_leg(e.to).expect("target cell in ambient");
        let same = match statistic {
            Statistic::ArmLeg => src == img,
            Statistic::Hook => src.hook() == img.hook(),
        };
        if !same {
            failures.push(CertFailure::StatisticMismatch {
                from: pair(e.from),
                to: pair(e.to),
                target: e.target,
                source: [src.arm, src.leg],
                image: [img.arm, img.leg],
            });
        }
        entries.push(CertEntry {
            from: e.from,
            to: e.to,
            target: e.target,
            source: src,
            image: img,
        });
    }

    for x in source.cells.iter().filter(|x| !seen_source.contains(x)) {
        failures.push(CertFailure::MissingSource { cell: pair(x) });
    }
    for side in targets {
        let covered = hit.get(&side.tag);
        for y in side.cells.iter() {
            if !covered.is_some_and(|h| h.contains(&y)) {
                failures.push(CertFailure::UnmappedTarget {
                    target: side.tag,
                    cell: pair(y),
                });
            }
        }
    }

    Certificate {
        statistic,
        entries,
        failures,
    }
}

pub fn certify_phi(p: &Partition) -> Certificate {
    certify(
        &phi(p),
        &Side::whole(p, RegionKind::T),
        &[Side::whole(p, RegionKind::TStar)],
        Statistic::ArmLeg,
    )
}

pub fn certify_psi(p: &Partition, statistic: Statistic) -> Certificate {
    certify(
        &psi(p),
        &Side::whole(p, RegionKind::SQ),
        &[Side::whole(p, RegionKind::R), Side::whole(p, RegionKind::D)],
        statistic,
    )
}

pub fn certify_zeta(p: &Partition, which: Zeta) -> Certificate {
    certify(
        &zeta(p, which),
        &Side::within(p, which.source(), which.source(), which.source_ambient()),
        &[Side::within(
            p,
            which.target_ambient(),
            which.target(),
            which.target_ambient(),
        )],
        Statistic::ArmLeg,
    )
}

/// Both sides of a checked identity, as computed by direct enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Sides {
    Hooks {
        lhs: Multiset<usize>,
        rhs: Multiset<usize>,
    },
    ArmLegs {
        lhs: Multiset<ArmLeg>,
        rhs: Multiset<ArmLeg>,
    },
}

impl Sides {
    pub fn equal(&self) -> bool {
        match self {
            Sides::Hooks { lhs, rhs } => lhs == rhs,
            Sides::ArmLegs { lhs, rhs } => lhs == rhs,
        }
    }

    /// Smallest value with differing multiplicity, rendered for reports.
    pub fn first_difference(&self) -> Option<String> {
        match self {
            Sides::Hooks { lhs, rhs } => lhs
                .first_difference(rhs)
                .map(|d| format!("hook {}: {} vs {}", d.value, d.left, d.right)),
            Sides::ArmLegs { lhs, rhs } => lhs
                .first_difference(rhs)
                .map(|d| format!("(arm,leg) {}: {} vs {}", d.value, d.left, d.right)),
        }
    }
}

/// Oracle multisets plus the certificate for one of the first three
/// identities.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub alpha: Vec<usize>,
    pub k: usize,
    pub n: usize,
    pub sides: Sides,
    pub certificate: Certificate,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.sides.equal() && self.certificate.passed()
    }

    /// First oracle difference or certificate failure, if any.
    pub fn first_problem(&self) -> Option<String> {
        self.sides
            .first_difference()
            .map(|d| format!("multisets differ at {d}"))
            .or_else(|| {
                self.certificate
                    .failures
                    .first()
                    .map(|f| format!("certificate: {f}"))
            })
    }
}

/// Computes both sides and the certificate without judging them.
///
/// # Panics
/// For [`Theorem::Projective`], which is handled by the projective module.
pub fn check_theorem(p: &Partition, which: Theorem) -> TheoremReport {
    let region = |kind| build_region(p, kind);
    let (sides, certificate) = match which {
        Theorem::Hooks => {
            let rhs = hooks(&region(RegionKind::R)).union(&hooks(&region(RegionKind::D)));
            (
                Sides::Hooks {
                    lhs: hooks(&region(RegionKind::SQ)),
                    rhs,
                },
                certify_psi(p, Statistic::Hook),
            )
        }
        Theorem::ArmLegs => {
            let rhs = al(&region(RegionKind::R)).union(&al(&region(RegionKind::D)));
            (
                Sides::ArmLegs {
                    lhs: al(&region(RegionKind::SQ)),
                    rhs,
                },
                certify_psi(p, Statistic::ArmLeg),
            )
        }
        Theorem::Symmetric => (
            Sides::ArmLegs {
                lhs: al(&region(RegionKind::T)),
                rhs: al(&region(RegionKind::TStar)),
            },
            certify_phi(p),
        ),
        Theorem::Projective => panic!("the projective identity is checked over class B"),
    };
    TheoremReport {
        theorem: which,
        alpha: p.parts().to_vec(),
        k: p.k(),
        n: p.n(),
        sides,
        certificate,
    }
}

/// Runs [`check_theorem`] and turns any discrepancy into an error.
pub fn verify_theorem(p: &Partition, which: Theorem) -> Result<TheoremReport, BijectionError> {
    let report = check_theorem(p, which);
    match report.first_problem() {
        None => Ok(report),
        Some(detail) => Err(BijectionError::CounterexampleFound {
            theorem: which,
            alpha: p.clone(),
            detail,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::arm_slice;

    fn part(parts: &[usize], n: usize) -> Partition {
        Partition::new(parts.to_vec(), parts.len(), n).unwrap()
    }

    #[test]
    fn rot_t_small() {
        let p = part(&[1, 0], 1);
        assert_eq!(rot_t(&p, Cell::new(1, 1)), Ok(Cell::new(2, 2)));
        assert_eq!(
            rot_t(&p, Cell::new(1, 2)),
            Err(BijectionError::CellNotInT(Cell::new(1, 2)))
        );
    }

    #[test]
    fn rot_t_maps_t_onto_tstar() {
        for k in 1..=5 {
            for n in 1..=5 {
                for p in crate::enumerate::partitions(k, n) {
                    let t = build_region(&p, RegionKind::T);
                    let image: CellSet = t.iter().map(|x| rot_t(&p, x).unwrap()).collect();
                    assert_eq!(image, build_region(&p, RegionKind::TStar), "{p}");
                    for x in t.iter() {
                        let y = rot_t(&p, x).unwrap();
                        assert_eq!(rotate_t_cell(&p, y, n), x);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_two_rows() {
        let p = part(&[1, 0], 1);
        let m = phi(&p);
        assert_eq!(m.get(Cell::new(1, 1)).unwrap().to, Cell::new(2, 2));
        assert_eq!(m.get(Cell::new(2, 2)).unwrap().to, Cell::new(1, 1));
        assert!(certify_phi(&p).passed());
    }

    #[test]
    fn phi_preserves_small_staircase() {
        let p = part(&[2, 1], 2);
        let cert = certify_phi(&p);
        assert!(cert.passed(), "{:?}", cert.failures);
        assert_eq!(cert.entries.len(), 4);
    }

    #[test]
    fn phi_on_equal_parts_respects_slices() {
        let p = part(&[3, 3, 3], 4);
        let m = phi(&p);
        let t = build_region(&p, RegionKind::T);
        let ts = build_region(&p, RegionKind::TStar);
        for i in 1..=4 {
            let image: CellSet = arm_slice(&t, i)
                .unwrap()
                .iter()
                .map(|x| m.get(x).unwrap().to)
                .collect();
            assert_eq!(image, arm_slice(&ts, i).unwrap());
        }
    }

    #[test]
    fn zeta_maps() {
        let p = part(&[2, 1], 2);
        let z3 = zeta(&p, Zeta::Three);
        assert_eq!(z3.get(Cell::new(1, 2)).unwrap().to, Cell::new(1, 1));

        let fig = part(&[6, 5, 3, 1], 6);
        assert_eq!(zeta(&fig, Zeta::One).len(), 15);
        assert_eq!(build_region(&fig, RegionKind::R1).len(), 15);
        for which in [Zeta::One, Zeta::Two, Zeta::Three] {
            let cert = certify_zeta(&fig, which);
            assert!(cert.passed(), "{which:?}: {:?}", cert.failures);
        }

        // α_1 = n leaves some rows of R2 empty
        let full = part(&[3, 1, 0], 3);
        let r2 = build_region(&full, RegionKind::R2);
        assert_eq!(r2.row(3).count(), 0);
        assert!(certify_zeta(&full, Zeta::Two).passed());
    }

    #[test]
    fn psi_small_cases() {
        let p = part(&[2, 1], 2);
        let m = psi(&p);
        assert_eq!(m.len(), 7);
        assert_eq!(m.image(RegionKind::R).len(), 4);
        assert_eq!(m.image(RegionKind::D).len(), 3);
        assert!(certify_psi(&p, Statistic::ArmLeg).passed());

        let zero = part(&[0, 0, 0], 2);
        let m = psi(&zero);
        assert!(m.image(RegionKind::D).is_empty());
        assert_eq!(m.len(), 6);
        let phi_zero = phi(&zero);
        for e in m.entries() {
            let via = Zeta::Two.apply(&zero, phi_zero.get(e.from).unwrap().to);
            assert_eq!(e.to, via);
        }

        let fig = part(&[6, 5, 3, 1], 6);
        let m = psi(&fig);
        assert_eq!(m.image(RegionKind::R).len(), 24);
        assert_eq!(m.image(RegionKind::D).len(), 15);
    }

    #[test]
    fn theorem_reports() {
        let p = part(&[2, 1], 2);
        let r = verify_theorem(&p, Theorem::ArmLegs).unwrap();
        let expected: Multiset<ArmLeg> =
            [(1, 0), (0, 0), (0, 0), (0, 0), (1, 1), (1, 1), (0, 1)]
                .into_iter()
                .map(|(a, l)| ArmLeg::new(a, l))
                .collect();
        assert_eq!(
            r.sides,
            Sides::ArmLegs {
                lhs: expected.clone(),
                rhs: expected
            }
        );

        let one = part(&[1], 1);
        let r = verify_theorem(&one, Theorem::Hooks).unwrap();
        assert_eq!(
            r.sides,
            Sides::Hooks {
                lhs: [1, 1].into_iter().collect(),
                rhs: [1, 1].into_iter().collect()
            }
        );

        let fig3 = part(&[11, 11, 9, 8, 8, 6, 3, 1, 0], 11);
        assert!(verify_theorem(&fig3, Theorem::Symmetric).is_ok());
    }

    #[test]
    fn certificate_catches_broken_maps() {
        let p = part(&[2, 1], 2);
        let mut m = phi(&p);
        // send two cells to the same image
        let first_to = m.entries[0].to;
        m.entries[1].to = first_to;
        let cert = certify(
            &m,
            &Side::whole(&p, RegionKind::T),
            &[Side::whole(&p, RegionKind::TStar)],
            Statistic::ArmLeg,
        );
        assert!(!cert.passed());
        assert!(cert
            .failures
            .iter()
            .any(|f| matches!(f, CertFailure::NotInjective { .. })));
        assert!(cert
            .failures
            .iter()
            .any(|f| matches!(f, CertFailure::UnmappedTarget { .. })));
    }

    #[test]
    fn rotating_whole_t_loses_arms() {
        // rot_t is a bijection T → T*, but it reverses arms; phi needs the
        // per-prefix rotation
        let p = part(&[2, 1], 2);
        let t = build_region(&p, RegionKind::T);
        let entries = t
            .iter()
            .map(|x| MapEntry {
                from: x,
                to: rot_t(&p, x).unwrap(),
                target: RegionKind::TStar,
                al: t.arm_leg(x).unwrap(),
            })
            .collect();
        let cert = certify(
            &CellMap::new(RegionKind::T, entries),
            &Side::whole(&p, RegionKind::T),
            &[Side::whole(&p, RegionKind::TStar)],
            Statistic::ArmLeg,
        );
        assert!(!cert.passed());
    }

    #[test]
    fn json_forms() {
        let p = part(&[1, 0], 1);
        let s = serde_json::to_string(&phi(&p)).unwrap();
        assert_eq!(
            s,
            r#"[{"from":[1,1],"to":[2,2],"target":"Tstar","al":[0,0]},{"from":[2,2],"to":[1,1],"target":"Tstar","al":[0,0]}]"#
        );
        let v: serde_json::Value = serde_json::to_value(certify_phi(&p)).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
}
