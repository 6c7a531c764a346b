//! Orbit partitions, their labels, and tactical-decomposition summaries.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cubic::{CubicModel, LineType, PlaneType, PointType};
use crate::error::{Error, Result};
use crate::group::{GroupAction, GroupKind};
use crate::space::{LineId, PlaneId, PointId, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectKind {
    Points,
    Planes,
    Lines,
}

impl ObjectKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Points => "points",
            ObjectKind::Planes => "planes",
            ObjectKind::Lines => "lines",
        }
    }

    fn letter(self) -> &'static str {
        match self {
            ObjectKind::Points => "M",
            ObjectKind::Planes => "N",
            ObjectKind::Lines => "L",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairKind {
    #[serde(rename = "plane-point")]
    PlanePoint,
    #[serde(rename = "line-point")]
    LinePoint,
    #[serde(rename = "line-plane")]
    LinePlane,
}

impl PairKind {
    pub const ALL: [PairKind; 3] = [PairKind::PlanePoint, PairKind::LinePoint, PairKind::LinePlane];

    pub fn name(self) -> &'static str {
        match self {
            PairKind::PlanePoint => "plane-point",
            PairKind::LinePoint => "line-point",
            PairKind::LinePlane => "line-plane",
        }
    }

    pub fn row_kind(self) -> ObjectKind {
        match self {
            PairKind::PlanePoint => ObjectKind::Planes,
            _ => ObjectKind::Lines,
        }
    }

    pub fn col_kind(self) -> ObjectKind {
        match self {
            PairKind::LinePlane => ObjectKind::Planes,
            _ => ObjectKind::Points,
        }
    }
}

/// Orbits of a permutation group given by (a generating set of) its
/// permutations, each orbit sorted, orbits ordered by smallest member.
pub fn compute_orbits(perms: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start as u32];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k] as usize;
            k += 1;
            for p in perms {
                let y = p[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y as u32);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

pub fn orbits_of(action: &GroupAction, kind: ObjectKind) -> Vec<Vec<u32>> {
    let perms = match kind {
        ObjectKind::Points => &action.points,
        ObjectKind::Planes => &action.planes,
        ObjectKind::Lines => &action.lines,
    };
    let n = perms.first().map_or(0, Vec::len);
    compute_orbits(perms, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitLabeling {
    pub kind: ObjectKind,
    pub group: GroupKind,
    /// Orbits in display order.
    pub orbits: Vec<Vec<u32>>,
    pub labels: Vec<String>,
    pub names: Vec<String>,
    /// Indices of the critical orbits each orbit unites; `[i]` for critical labelings.
    pub merge: Vec<Vec<usize>>,
    orbit_of: Vec<u32>,
}

impl OrbitLabeling {
    fn new(kind: ObjectKind, group: GroupKind, orbits: Vec<Vec<u32>>, labels: Vec<String>, merge: Vec<Vec<usize>>) -> Self {
        let n: usize = orbits.iter().map(Vec::len).sum();
        let mut orbit_of = vec![0; n];
        for (i, o) in orbits.iter().enumerate() {
            for &x in o {
                orbit_of[x as usize] = i as u32;
            }
        }
        let star = if group == GroupKind::Critical { "*" } else { "" };
        let names = (1..=orbits.len()).map(|i| format!("{}{}{}", kind.letter(), star, i)).collect();
        OrbitLabeling { kind, group, orbits, labels, names, merge, orbit_of }
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn orbit_of(&self, x: u32) -> usize {
        self.orbit_of[x as usize] as usize
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// How orbits of one line type are told apart when the type splits.
#[derive(Debug, Clone)]
pub enum SubscriptRule {
    /// Match each orbit's size and incidence profiles against reference rows.
    Reference(Vec<ReferenceLine>),
    /// Expected orbit sizes per type in subscript order.
    Sizes(BTreeMap<LineType, Vec<usize>>),
    /// Subscripts by smallest member.
    Order,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceLine {
    pub label: String,
    pub size: usize,
    /// Points of each point-orbit label on one line of the orbit.
    pub point_profile: BTreeMap<String, u32>,
    /// Planes of each plane-orbit label through one line of the orbit.
    pub plane_profile: BTreeMap<String, u32>,
}

fn plane_rank(t: PlaneType) -> usize {
    PlaneType::ALL.iter().position(|&x| x == t).unwrap()
}

fn point_rank(xi: i8, t: PointType) -> usize {
    PointType::taxonomy(xi).iter().position(|&x| x == t).unwrap_or(usize::MAX)
}

/// Display order of line types under the critical group.
fn line_rank(xi: i8, t: LineType) -> usize {
    use LineType::*;
    let order: &[LineType] = if xi == 0 {
        &[RC, T, IC, UGamma, UnGamma, A, EA, EnGamma]
    } else {
        &[RC, RA, T, IC, IA, UGamma, UnGamma, EGamma, EnGamma]
    };
    order.iter().position(|&x| x == t).unwrap_or(usize::MAX)
}

fn single_type<T: Copy + Eq + std::fmt::Debug>(orbit: &[u32], ty: impl Fn(u32) -> T, kind: &'static str) -> Result<T> {
    let t = ty(orbit[0]);
    match orbit.iter().find(|&&x| ty(x) != t) {
        Some(&x) => Err(Error::Labeling(format!(
            "{kind} orbit containing {} mixes types {t:?} and {:?}",
            orbit[0],
            ty(x)
        ))),
        None => Ok(t),
    }
}

/// Groups orbits by type in rank order and attaches `_k` subscripts,
/// by smallest member, to types that split.
fn assemble(
    kind: ObjectKind,
    mut typed: Vec<(usize, String, Vec<u32>)>,
) -> OrbitLabeling {
    typed.sort_by(|a, b| (a.0, &a.2[0]).cmp(&(b.0, &b.2[0])));
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for t in &typed {
        *count.entry(t.0).or_default() += 1;
    }
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    let mut orbits = Vec::new();
    let mut labels = Vec::new();
    for (rank, base, orbit) in typed {
        let k = seen.entry(rank).or_default();
        *k += 1;
        if count[&rank] > 1 {
            labels.push(format!("{base}_{k}"));
        } else {
            labels.push(base);
        }
        orbits.push(orbit);
    }
    let merge = (0..orbits.len()).map(|i| vec![i]).collect();
    OrbitLabeling::new(kind, GroupKind::Critical, orbits, labels, merge)
}

/// Orbits of an arbitrary group, labeled by position only.
pub fn plain_labeling(kind: ObjectKind, group: GroupKind, orbits: Vec<Vec<u32>>) -> OrbitLabeling {
    let labels = (1..=orbits.len()).map(|i| format!("{}{i}", kind.letter())).collect();
    let merge = (0..orbits.len()).map(|i| vec![i]).collect();
    OrbitLabeling::new(kind, group, orbits, labels, merge)
}

pub fn label_planes(model: &CubicModel, orbits: Vec<Vec<u32>>) -> Result<OrbitLabeling> {
    let typed = orbits
        .into_iter()
        .map(|o| {
            let t = single_type(&o, |x| model.classify_plane(PlaneId(x)), "plane")?;
            Ok((plane_rank(t), t.label().to_string(), o))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(ObjectKind::Planes, typed))
}

pub fn label_points(model: &CubicModel, orbits: Vec<Vec<u32>>) -> Result<OrbitLabeling> {
    let q = model.q();
    let typed = orbits
        .into_iter()
        .map(|o| {
            let t = single_type(&o, |x| model.classify_point(PointId(x)), "point")?;
            Ok((point_rank(model.xi(), t), t.label(q), o))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(ObjectKind::Points, typed))
}

/// Incidence profile of one line against labeled point and plane orbits.
pub fn line_profiles(
    space: &Space,
    line: u32,
    points: &OrbitLabeling,
    planes: &OrbitLabeling,
) -> (BTreeMap<String, u32>, BTreeMap<String, u32>) {
    let mut pp = BTreeMap::new();
    for &x in space.line_points(LineId(line)) {
        *pp.entry(points.labels[points.orbit_of(x)].clone()).or_default() += 1;
    }
    let mut pl = BTreeMap::new();
    for &x in space.planes_through_line(LineId(line)) {
        *pl.entry(planes.labels[planes.orbit_of(x)].clone()).or_default() += 1;
    }
    (pp, pl)
}

pub fn label_lines(
    model: &CubicModel,
    orbits: Vec<Vec<u32>>,
    points: &OrbitLabeling,
    planes: &OrbitLabeling,
    rule: &SubscriptRule,
) -> Result<OrbitLabeling> {
    let xi = model.xi();
    let mut by_type: BTreeMap<usize, (LineType, Vec<Vec<u32>>)> = BTreeMap::new();
    for o in orbits {
        let t = single_type(&o, |x| model.classify_line(LineId(x)), "line")?;
        by_type.entry(line_rank(xi, t)).or_insert((t, Vec::new())).1.push(o);
    }
    let mut typed = Vec::new();
    for (rank, (ty, group)) in by_type {
        if group.len() == 1 {
            typed.push((rank, ty.label().to_string(), group.into_iter().next().unwrap()));
            continue;
        }
        for (k, o) in subscript(model, ty, group, points, planes, rule)? {
            typed.push((rank, format!("{}_{}", ty.label(), k), o));
        }
    }
    // keep subscript order inside a type
    typed.sort_by_key(|a| (a.0, subscript_of(&a.1)));
    let labels = typed.iter().map(|t| t.1.clone()).collect();
    let orbits: Vec<Vec<u32>> = typed.into_iter().map(|t| t.2).collect();
    let merge = (0..orbits.len()).map(|i| vec![i]).collect();
    Ok(OrbitLabeling::new(ObjectKind::Lines, GroupKind::Critical, orbits, labels, merge))
}

fn subscript_of(label: &str) -> usize {
    label.rsplit_once('_').and_then(|(_, k)| k.parse().ok()).unwrap_or(0)
}

/// Line type encoded in a line label such as `EnGamma_3`.
pub fn line_type_of_label(label: &str) -> Option<LineType> {
    use LineType::*;
    let base = label.split('_').next()?;
    [RC, RA, T, IC, IA, UGamma, UnGamma, EGamma, EnGamma, A, EA]
        .into_iter()
        .find(|t| t.label() == base)
}

fn subscript(
    model: &CubicModel,
    ty: LineType,
    mut group: Vec<Vec<u32>>,
    points: &OrbitLabeling,
    planes: &OrbitLabeling,
    rule: &SubscriptRule,
) -> Result<Vec<(usize, Vec<u32>)>> {
    // ties are always broken by the smallest member
    group.sort_by_key(|o| o[0]);
    match rule {
        SubscriptRule::Order => Ok(group.into_iter().enumerate().map(|(i, o)| (i + 1, o)).collect()),
        SubscriptRule::Sizes(sizes) => {
            let expected = sizes.get(&ty).cloned().unwrap_or_default();
            let mut out = Vec::new();
            let mut rest = group;
            for (k, &size) in expected.iter().enumerate() {
                if let Some(i) = rest.iter().position(|o| o.len() == size) {
                    out.push((k + 1, rest.remove(i)));
                }
            }
            // orbits the expected list does not account for get the next subscripts
            rest.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
            let mut used: BTreeSet<usize> = out.iter().map(|x| x.0).collect();
            let mut k = 1;
            for o in rest {
                while used.contains(&k) {
                    k += 1;
                }
                used.insert(k);
                out.push((k, o));
            }
            Ok(out)
        }
        SubscriptRule::Reference(rows) => {
            let candidates: Vec<&ReferenceLine> =
                rows.iter().filter(|r| line_type_of_label(&r.label) == Some(ty)).collect();
            let mut taken = vec![false; candidates.len()];
            let mut out = Vec::new();
            for o in group {
                let (pp, pl) = line_profiles(&model.space, o[0], points, planes);
                let hit = candidates.iter().enumerate().find(|(i, r)| {
                    !taken[*i] && r.size == o.len() && r.point_profile == pp && r.plane_profile == pl
                });
                match hit {
                    Some((i, r)) => {
                        taken[i] = true;
                        out.push((subscript_of(&r.label), o));
                    }
                    None => {
                        return Err(Error::Labeling(format!(
                            "{} orbit of size {} with profiles {:?} / {:?} matches no reference row",
                            ty.label(),
                            o.len(),
                            pp,
                            pl
                        )))
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Labels a partition whose orbits are unions of critical orbits.
///
/// Point and plane orbits are ordered by their first critical constituent;
/// line orbits list unmerged critical orbits first, then the unions.
pub fn label_union(orbits: Vec<Vec<u32>>, critical: &OrbitLabeling, group: GroupKind) -> Result<OrbitLabeling> {
    let mut parts = Vec::new();
    for o in orbits {
        let mut merge: Vec<usize> = o.iter().map(|&x| critical.orbit_of(x)).collect();
        merge.sort_unstable();
        merge.dedup();
        let covered: usize = merge.iter().map(|&i| critical.orbits[i].len()).sum();
        if covered != o.len() {
            return Err(Error::Labeling(format!(
                "{} orbit containing {} is not a union of critical orbits",
                critical.kind.name(),
                o[0]
            )));
        }
        parts.push((merge, o));
    }
    if critical.kind == ObjectKind::Lines {
        parts.sort_by(|a, b| (a.0.len() > 1, a.0[0]).cmp(&(b.0.len() > 1, b.0[0])));
    } else {
        parts.sort_by_key(|p| p.0[0]);
    }
    let labels = parts
        .iter()
        .map(|(m, _)| m.iter().map(|&i| critical.labels[i].as_str()).collect::<Vec<_>>().join(","))
        .collect();
    let merge = parts.iter().map(|p| p.0.clone()).collect();
    let orbits = parts.into_iter().map(|p| p.1).collect();
    Ok(OrbitLabeling::new(critical.kind, group, orbits, labels, merge))
}

/// Labeled point, plane and line orbits of one group.
#[derive(Debug, Clone)]
pub struct Labelings {
    pub points: OrbitLabeling,
    pub planes: OrbitLabeling,
    pub lines: OrbitLabeling,
}

impl Labelings {
    pub fn get(&self, kind: ObjectKind) -> &OrbitLabeling {
        match kind {
            ObjectKind::Points => &self.points,
            ObjectKind::Planes => &self.planes,
            ObjectKind::Lines => &self.lines,
        }
    }
}

pub fn label_critical(model: &CubicModel, action: &GroupAction, rule: &SubscriptRule) -> Result<Labelings> {
    let points = label_points(model, orbits_of(action, ObjectKind::Points))?;
    let planes = label_planes(model, orbits_of(action, ObjectKind::Planes))?;
    let lines = label_lines(model, orbits_of(action, ObjectKind::Lines), &points, &planes, rule)?;
    Ok(Labelings { points, planes, lines })
}

pub fn label_full(critical: &Labelings, action: &GroupAction) -> Result<Labelings> {
    Ok(Labelings {
        points: label_union(orbits_of(action, ObjectKind::Points), &critical.points, GroupKind::Full)?,
        planes: label_union(orbits_of(action, ObjectKind::Planes), &critical.planes, GroupKind::Full)?,
        lines: label_union(orbits_of(action, ObjectKind::Lines), &critical.lines, GroupKind::Full)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub t: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSummary {
    pub pair: PairKind,
    pub q: usize,
    pub row_labels: Vec<String>,
    pub row_names: Vec<String>,
    pub row_sizes: Vec<usize>,
    pub col_labels: Vec<String>,
    pub col_names: Vec<String>,
    pub col_sizes: Vec<usize>,
    pub cells: Vec<Vec<Cell>>,
}

impl IncidenceSummary {
    pub fn cell(&self, row: &str, col: &str) -> Option<Cell> {
        let i = self.row_labels.iter().position(|l| l == row)?;
        let j = self.col_labels.iter().position(|l| l == col)?;
        Some(self.cells[i][j])
    }

    /// The same summary with rows and columns in the given label order.
    /// `None` unless both orders are permutations of the current labels.
    pub fn reordered(&self, rows: &[&str], cols: &[&str]) -> Option<Self> {
        let perm = |want: &[&str], have: &[String]| -> Option<Vec<usize>> {
            if want.len() != have.len() {
                return None;
            }
            let p: Vec<usize> = want.iter().map(|w| have.iter().position(|h| h == w)).collect::<Option<_>>()?;
            let mut seen = p.clone();
            seen.sort_unstable();
            seen.dedup();
            (seen.len() == p.len()).then_some(p)
        };
        let r = perm(rows, &self.row_labels)?;
        let c = perm(cols, &self.col_labels)?;
        let pick = |v: &[String], p: &[usize]| p.iter().map(|&i| v[i].clone()).collect::<Vec<_>>();
        Some(IncidenceSummary {
            pair: self.pair,
            q: self.q,
            row_labels: pick(&self.row_labels, &r),
            row_names: pick(&self.row_names, &r),
            row_sizes: r.iter().map(|&i| self.row_sizes[i]).collect(),
            col_labels: pick(&self.col_labels, &c),
            col_names: pick(&self.col_names, &c),
            col_sizes: c.iter().map(|&j| self.col_sizes[j]).collect(),
            cells: r.iter().map(|&i| c.iter().map(|&j| self.cells[i][j]).collect()).collect(),
        })
    }
}

fn incident_rows_of_col(space: &Space, pair: PairKind, col: u32) -> &[u32] {
    match pair {
        PairKind::PlanePoint => space.planes_through_point(PointId(col)),
        PairKind::LinePoint => space.lines_through_point(PointId(col)),
        PairKind::LinePlane => space.lines_in_plane(PlaneId(col)),
    }
}

fn incident_cols_of_row(space: &Space, pair: PairKind, row: u32) -> &[u32] {
    match pair {
        PairKind::PlanePoint => space.points_on_plane(PlaneId(row)),
        PairKind::LinePoint => space.line_points(LineId(row)),
        PairKind::LinePlane => space.planes_through_line(LineId(row)),
    }
}

/// Counts, for every object of every orbit, its incidences with each orbit
/// on the other side, and fails if a count is not constant on the orbit.
fn constant_counts(
    space: &Space,
    pair: PairKind,
    from: &OrbitLabeling,
    to: &OrbitLabeling,
    forward: bool,
) -> Result<Vec<Vec<u32>>> {
    let mut out = vec![vec![0u32; to.len()]; from.len()];
    for (i, orbit) in from.orbits.iter().enumerate() {
        for (n, &x) in orbit.iter().enumerate() {
            let mut counts = vec![0u32; to.len()];
            let inc = if forward { incident_cols_of_row(space, pair, x) } else { incident_rows_of_col(space, pair, x) };
            for &y in inc {
                counts[to.orbit_of(y)] += 1;
            }
            if n == 0 {
                out[i] = counts;
            } else if counts != out[i] {
                let j = (0..to.len()).find(|&j| counts[j] != out[i][j]).unwrap();
                let (row, col) = if forward { (i, j) } else { (j, i) };
                let (rl, cl) = if forward { (from, to) } else { (to, from) };
                return Err(Error::Constancy {
                    pair: pair.name(),
                    row: rl.names[row].clone(),
                    col: cl.names[col].clone(),
                });
            }
        }
    }
    Ok(out)
}

pub fn tactical_summary(
    space: &Space,
    pair: PairKind,
    rows: &OrbitLabeling,
    cols: &OrbitLabeling,
) -> Result<IncidenceSummary> {
    assert_eq!((rows.kind, cols.kind), (pair.row_kind(), pair.col_kind()), "orbit kinds must match the pair");
    let t = constant_counts(space, pair, rows, cols, true)?;
    let b = constant_counts(space, pair, cols, rows, false)?;
    let cells = (0..rows.len())
        .map(|i| (0..cols.len()).map(|j| Cell { t: t[i][j], b: b[j][i] }).collect())
        .collect();
    Ok(IncidenceSummary {
        pair,
        q: space.q(),
        row_labels: rows.labels.clone(),
        row_names: rows.names.clone(),
        row_sizes: rows.sizes(),
        col_labels: cols.labels.clone(),
        col_names: cols.names.clone(),
        col_sizes: cols.sizes(),
        cells,
    })
}

/// Itemized violations of the cell identities `t·|row| = b·|col|`, the
/// zero pairing and the row/column sums. Empty when everything holds.
pub fn verify_relations(s: &IncidenceSummary) -> Vec<String> {
    let q = s.q as u32;
    let (row_sum, col_sum) = match s.pair {
        PairKind::PlanePoint => (q * q + q + 1, q * q + q + 1),
        PairKind::LinePoint | PairKind::LinePlane => (q + 1, q * q + q + 1),
    };
    let mut bad = Vec::new();
    for (i, row) in s.cells.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.t as usize * s.row_sizes[i] != c.b as usize * s.col_sizes[j] {
                bad.push(format!(
                    "{} ({}, {}): t*|row| = {}*{} != b*|col| = {}*{}",
                    s.pair.name(),
                    s.row_labels[i],
                    s.col_labels[j],
                    c.t,
                    s.row_sizes[i],
                    c.b,
                    s.col_sizes[j]
                ));
            }
            if (c.t == 0) != (c.b == 0) {
                bad.push(format!("{} ({}, {}): zero pairing broken", s.pair.name(), s.row_labels[i], s.col_labels[j]));
            }
        }
        let sum: u32 = row.iter().map(|c| c.t).sum();
        if sum != row_sum {
            bad.push(format!("{} row {}: sum of t is {sum}, expected {row_sum}", s.pair.name(), s.row_labels[i]));
        }
    }
    for j in 0..s.col_labels.len() {
        let sum: u32 = s.cells.iter().map(|r| r[j].b).sum();
        if sum != col_sum {
            bad.push(format!("{} column {}: sum of b is {sum}, expected {col_sum}", s.pair.name(), s.col_labels[j]));
        }
    }
    bad
}

/// Union pattern of a full labeling as (orbit name, critical names).
pub fn merge_pattern(full: &OrbitLabeling, critical: &OrbitLabeling) -> Vec<(String, Vec<String>)> {
    full.names
        .iter()
        .zip(&full.merge)
        .map(|(n, m)| (n.clone(), m.iter().map(|&i| critical.names[i].clone()).collect()))
        .collect()
}

/// Checks that the null polarity carries plane orbits to point orbits and
/// swaps top and bottom entries of the plane-point summary accordingly.
pub fn polarity_duality_failures(
    model: &CubicModel,
    summary: &IncidenceSummary,
    planes: &OrbitLabeling,
    points: &OrbitLabeling,
) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    // plane orbit -> point orbit under the dual map, point orbit -> plane orbit under the polarity
    let mut tau = Vec::new();
    for o in &planes.orbits {
        let imgs: BTreeSet<usize> = o
            .iter()
            .map(|&x| model.dual(PlaneId(x)).map(|p| points.orbit_of(p.0)))
            .collect::<Result<_>>()?;
        if imgs.len() != 1 {
            bad.push(format!("plane orbit {} is split by the polarity", planes.labels[tau.len()]));
        }
        tau.push(*imgs.iter().next().unwrap());
    }
    let mut sigma = Vec::new();
    for o in &points.orbits {
        let imgs: BTreeSet<usize> = o
            .iter()
            .map(|&x| model.null_polarity(PointId(x)).map(|p| planes.orbit_of(p.0)))
            .collect::<Result<_>>()?;
        if imgs.len() != 1 {
            bad.push(format!("point orbit {} is split by the polarity", points.labels[sigma.len()]));
        }
        sigma.push(*imgs.iter().next().unwrap());
    }
    for i in 0..planes.len() {
        for j in 0..points.len() {
            let c = summary.cells[i][j];
            let d = summary.cells[sigma[j]][tau[i]];
            if c.t != d.b || c.b != d.t {
                bad.push(format!(
                    "cell ({}, {}) = {}/{} but polar cell ({}, {}) = {}/{}",
                    planes.labels[i], points.labels[j], c.t, c.b, planes.labels[sigma[j]], points.labels[tau[i]], d.t, d.b
                ));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::build_cubic;
    use crate::group::{critical_group, full_group, GroupAction};

    fn setup(q: usize) -> (CubicModel, GroupAction) {
        let m = build_cubic(q).unwrap();
        let g = critical_group(&m.space.field);
        let a = GroupAction::new(&m.space, &g);
        (m, a)
    }

    #[test]
    fn trivial_group_gives_singletons() {
        let id: Vec<u32> = (0..15).collect();
        let o = compute_orbits(&[id], 15);
        assert_eq!(o.len(), 15);
        assert!(o.iter().all(|x| x.len() == 1));
    }

    #[test]
    fn orbits_from_generators_equal_orbits_from_elements() {
        let m = build_cubic(3).unwrap();
        let g = critical_group(&m.space.field);
        let all = GroupAction::new(&m.space, &g);
        let gens = GroupAction::for_elements(&m.space, &g.generators);
        for k in [ObjectKind::Points, ObjectKind::Planes, ObjectKind::Lines] {
            assert_eq!(orbits_of(&all, k), orbits_of(&gens, k));
        }
    }

    #[test]
    fn critical_plane_orbits_q3() {
        let (m, a) = setup(3);
        let l = label_planes(&m, orbits_of(&a, ObjectKind::Planes)).unwrap();
        assert_eq!(l.labels, ["Gamma", "2_C", "3_C", "1bar_C", "0_C"]);
        assert_eq!(l.sizes(), [4, 12, 4, 12, 8]);
        assert_eq!(l.names[0], "N*1");
    }

    #[test]
    fn orbit_sizes_sum_to_object_counts() {
        let (m, a) = setup(4);
        let labs = label_critical(&m, &a, &SubscriptRule::Order).unwrap();
        assert_eq!(labs.points.sizes().iter().sum::<usize>(), 85);
        assert_eq!(labs.planes.sizes().iter().sum::<usize>(), 85);
        assert_eq!(labs.lines.sizes().iter().sum::<usize>(), 357);
        assert_eq!(labs.lines.len(), 16);
    }

    #[test]
    fn constancy_and_relations_hold() {
        for q in [2, 3, 4] {
            let (m, a) = setup(q);
            let labs = label_critical(&m, &a, &SubscriptRule::Order).unwrap();
            for pair in PairKind::ALL {
                let s = tactical_summary(&m.space, pair, labs.get(pair.row_kind()), labs.get(pair.col_kind())).unwrap();
                assert!(verify_relations(&s).is_empty(), "{:?}", verify_relations(&s));
            }
        }
    }

    #[test]
    fn non_orbit_partition_breaks_constancy() {
        let (m, a) = setup(2);
        let labs = label_critical(&m, &a, &SubscriptRule::Order).unwrap();
        // split the first point orbit arbitrarily
        let mut orbits = labs.points.orbits.clone();
        let first = orbits.remove(0);
        let (x, y) = first.split_at(1);
        orbits.insert(0, y.to_vec());
        orbits.insert(0, x.to_vec());
        let n = orbits.len();
        let bogus = OrbitLabeling::new(
            ObjectKind::Points,
            GroupKind::Subgroup,
            orbits,
            vec!["x".into(); n],
            (0..n).map(|i| vec![i]).collect(),
        );
        let r = tactical_summary(&m.space, PairKind::PlanePoint, &labs.planes, &bogus);
        assert!(matches!(r, Err(Error::Constancy { .. })));
    }

    #[test]
    fn full_orbits_are_unions() {
        let m = build_cubic(2).unwrap();
        let f = &m.space.field;
        let crit = label_critical(&m, &GroupAction::new(&m.space, &critical_group(f)), &SubscriptRule::Order).unwrap();
        let full = label_full(&crit, &GroupAction::new(&m.space, &full_group(f).unwrap())).unwrap();
        assert_eq!(full.planes.sizes(), [6, 6, 1, 2]);
        assert_eq!(full.planes.labels[0], "Gamma,1bar_C");
        assert_eq!(full.points.labels[1], "T,0_Gamma");
        assert_eq!(full.lines.len(), 6);
    }

    #[test]
    fn polarity_swaps_entries() {
        for q in [2, 4, 5] {
            let (m, a) = setup(q);
            let labs = label_critical(&m, &a, &SubscriptRule::Order).unwrap();
            let s = tactical_summary(&m.space, PairKind::PlanePoint, &labs.planes, &labs.points).unwrap();
            assert!(polarity_duality_failures(&m, &s, &labs.planes, &labs.points).unwrap().is_empty());
        }
    }

    #[test]
    fn relation_checker_flags_bad_cells() {
        let s = IncidenceSummary {
            pair: PairKind::LinePoint,
            q: 2,
            row_labels: vec!["a".into()],
            row_names: vec!["L1".into()],
            row_sizes: vec![35],
            col_labels: vec!["b".into()],
            col_names: vec!["M1".into()],
            col_sizes: vec![15],
            cells: vec![vec![Cell { t: 3, b: 0 }]],
        };
        let bad = verify_relations(&s);
        assert!(bad.iter().any(|m| m.contains("zero pairing")));
        assert!(bad.iter().any(|m| m.contains("t*|row|")));
        assert!(bad.iter().any(|m| m.contains("sum of b")));
    }

    #[test]
    fn label_type_parsing() {
        assert_eq!(line_type_of_label("EnGamma_3"), Some(LineType::EnGamma));
        assert_eq!(line_type_of_label("UGamma"), Some(LineType::UGamma));
        assert_eq!(line_type_of_label("bogus"), None);
    }

    #[test]
    fn reordering_keeps_cells_with_their_labels() {
        let (m, a) = setup(2);
        let l = label_critical(&m, &a, &SubscriptRule::Order).unwrap();
        let s = tactical_summary(&m.space, PairKind::PlanePoint, &l.planes, &l.points).unwrap();
        let mut rows: Vec<&str> = s.row_labels.iter().map(String::as_str).collect();
        let mut cols: Vec<&str> = s.col_labels.iter().map(String::as_str).collect();
        rows.reverse();
        cols.rotate_left(2);
        let r = s.reordered(&rows, &cols).unwrap();
        for row in &rows {
            for col in &cols {
                assert_eq!(r.cell(row, col), s.cell(row, col));
            }
        }
        assert_eq!(r.row_labels[0], rows[0]);
        cols[0] = cols[1];
        assert!(s.reordered(&rows, &cols).is_none());
        assert!(s.reordered(&rows[1..], &cols).is_none());
    }
}
