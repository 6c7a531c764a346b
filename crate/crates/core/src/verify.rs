//! End-to-end verification: builds everything for one q and compares the
//! results with the reference values in [`crate::fixtures`].

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::Serialize;

use crate::cache;
use crate::cubic::{build_cubic, osc_vector, CubicModel, PointType};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::group::{
    critical_group, extra_generators, full_group, order_spectrum, subgroup_census, GroupAction, GroupKind, GroupModel,
    SubgroupCensus,
};
use crate::orbit::{
    label_critical, label_full, orbits_of, plain_labeling, polarity_duality_failures, tactical_summary,
    verify_relations, IncidenceSummary, Labelings, ObjectKind, OrbitLabeling, PairKind,
};
use crate::space::{LineId, PointId, Space};

/// Field orders the pipeline is run for.
pub const SUPPORTED_Q: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Groups whose full stabilizer is constructed explicitly.
pub fn has_full_group(q: usize) -> bool {
    matches!(q, 2..=4)
}

/// Field, space, cubic, groups and orbit labelings for one q.
pub struct Pipeline {
    pub model: CubicModel,
    pub critical: GroupModel,
    pub full: Option<GroupModel>,
    pub critical_labels: Labelings,
    pub full_labels: Option<Labelings>,
}

impl Pipeline {
    /// Builds the pipeline, using the group cache when `TWC_CACHE_DIR` is set.
    pub fn new(q: usize) -> Result<Self> {
        Self::build(q, cache::cache_dir().as_deref())
    }

    pub fn build(q: usize, cache_dir: Option<&Path>) -> Result<Self> {
        let model = build_cubic(q)?;
        let f = &model.space.field;
        let crit_gens = critical_group(f).generators;
        let critical = cache::load_or_build(f, cache_dir, GroupKind::Critical, &crit_gens, || Ok(critical_group(f)))?;
        let full = if has_full_group(q) {
            let mut gens = crit_gens.clone();
            gens.extend(extra_generators(f)?);
            Some(cache::load_or_build(f, cache_dir, GroupKind::Full, &gens, || full_group(f))?)
        } else {
            None
        };
        // orbits only need generators
        let crit_action = GroupAction::for_elements(&model.space, &critical.generators);
        let critical_labels = label_critical(&model, &crit_action, &fixtures::subscript_rule(q))?;
        let full_labels = match &full {
            Some(g) => Some(label_full(&critical_labels, &GroupAction::for_elements(&model.space, &g.generators))?),
            None => None,
        };
        Ok(Pipeline { model, critical, full, critical_labels, full_labels })
    }

    pub fn q(&self) -> usize {
        self.model.q()
    }

    pub fn space(&self) -> &Space {
        &self.model.space
    }

    pub fn group(&self, kind: GroupKind) -> Result<&GroupModel> {
        match kind {
            GroupKind::Critical => Ok(&self.critical),
            _ => self.full.as_ref().ok_or(Error::NoExtraGenerators(self.q())),
        }
    }

    pub fn labels(&self, kind: GroupKind) -> Result<&Labelings> {
        match kind {
            GroupKind::Critical => Ok(&self.critical_labels),
            _ => self.full_labels.as_ref().ok_or(Error::NoExtraGenerators(self.q())),
        }
    }

    pub fn summary(&self, pair: PairKind, group: GroupKind) -> Result<IncidenceSummary> {
        let l = self.labels(group)?;
        tactical_summary(self.space(), pair, l.get(pair.row_kind()), l.get(pair.col_kind()))
    }

    /// The census of critical-form subgroups inside the full group.
    pub fn census(&self) -> Result<CensusReport> {
        let full = self.group(GroupKind::Full)?;
        let census = subgroup_census(&self.space().field, full, &self.critical)?;
        let action = GroupAction::new(self.space(), full);
        let mut subgroups = Vec::new();
        for (i, members) in census.subgroups.iter().enumerate() {
            let a = action.restrict(members);
            subgroups.push(SubgroupOrbits {
                class: census.class_of(i),
                critical: census.critical[i],
                points: orbits_of(&a, ObjectKind::Points),
                planes: orbits_of(&a, ObjectKind::Planes),
                lines: orbits_of(&a, ObjectKind::Lines),
            });
        }
        Ok(CensusReport { census, subgroups })
    }
}

#[derive(Debug, Clone)]
pub struct SubgroupOrbits {
    pub class: usize,
    pub critical: bool,
    pub points: Vec<Vec<u32>>,
    pub planes: Vec<Vec<u32>>,
    pub lines: Vec<Vec<u32>>,
}

impl SubgroupOrbits {
    pub fn point_sizes(&self) -> Vec<usize> {
        sorted(self.points.iter().map(Vec::len).collect())
    }
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub census: SubgroupCensus,
    pub subgroups: Vec<SubgroupOrbits>,
}

impl CensusReport {
    pub fn critical_class(&self) -> usize {
        self.subgroups.iter().find(|s| s.critical).map(|s| s.class).expect("critical subgroup listed")
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &SubgroupOrbits> {
        self.subgroups.iter().filter(move |s| s.class == class)
    }
}

/// What a check is about; one topic per acceptance criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topic {
    Counts,
    GroupOrders,
    Census,
    CriticalOrbits,
    FullOrbits,
    Tables,
    Relations,
    Polarity,
    Tactical,
    Extended,
}

impl Topic {
    pub fn name(self) -> &'static str {
        match self {
            Topic::Counts => "counts",
            Topic::GroupOrders => "group-orders",
            Topic::Census => "census",
            Topic::CriticalOrbits => "critical-orbits",
            Topic::FullOrbits => "full-orbits",
            Topic::Tables => "tables",
            Topic::Relations => "relations",
            Topic::Polarity => "polarity",
            Topic::Tactical => "tactical",
            Topic::Extended => "extended",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub topic: Topic,
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl Check {
    fn new(topic: Topic, name: impl Into<String>, failures: Vec<String>) -> Self {
        Check { topic, name: name.into(), passed: failures.is_empty(), details: failures }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(topic: Topic, name: impl Into<String>, expected: T, got: T) -> Self {
        let details = if expected == got { Vec::new() } else { vec![format!("expected {expected:?}, got {got:?}")] };
        Check::new(topic, name, details)
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

pub fn check_counts(space: &Space) -> Check {
    let q = space.q();
    let theta = q * q * q + q * q + q + 1;
    let beta = (q * q + 1) * (q * q + q + 1);
    Check::expect(
        Topic::Counts,
        format!("q={q} points, planes, lines"),
        (theta, theta, beta),
        (space.num_points(), space.num_planes(), space.num_lines()),
    )
}

fn spectrum(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

pub fn check_group_orders(p: &Pipeline) -> Vec<Check> {
    let q = p.q();
    let f = &p.space().field;
    let mut out = vec![Check::expect(
        Topic::GroupOrders,
        format!("q={q} critical group order"),
        q * q * q - q,
        p.critical.order(),
    )];
    let expected = match q {
        2 => Some(spectrum(&[(1, 1), (2, 3), (3, 2)])),
        3 => Some(spectrum(&[(1, 1), (2, 9), (3, 8), (4, 6)])),
        4 => Some(spectrum(&[(1, 1), (2, 15), (3, 20), (5, 24)])),
        _ => None,
    };
    if let Some(s) = expected {
        out.push(Check::expect(
            Topic::GroupOrders,
            format!("q={q} critical group order spectrum"),
            s,
            order_spectrum(f, &p.critical),
        ));
    }
    if let (Some(full), Some(order)) = (&p.full, fixtures::expected_group_order(q, GroupKind::Full)) {
        out.push(Check::expect(Topic::GroupOrders, format!("q={q} full group order"), order, full.order()));
        let missing = p.critical.elements.iter().filter(|g| full.index_of(g).is_none()).count();
        out.push(Check::expect(Topic::GroupOrders, format!("q={q} critical group inside full group"), 0, missing));
    }
    out
}

pub fn check_census(p: &Pipeline, report: &CensusReport) -> Vec<Check> {
    let q = p.q();
    let Some(exp) = fixtures::expected_census(q) else { return Vec::new() };
    let c = &report.census;
    let mut sizes = c.class_sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![
        Check::expect(Topic::Census, format!("q={q} subgroup count"), exp.subgroups, c.subgroups.len()),
        Check::expect(Topic::Census, format!("q={q} conjugacy class sizes"), exp.class_sizes, sizes),
        Check::expect(
            Topic::Census,
            format!("q={q} critical subgroups"),
            exp.critical,
            c.critical.iter().filter(|&&x| x).count(),
        ),
    ];
    out.extend(check_census_orbits(p, report));
    out
}

/// Sorted sizes of the orbits meeting `set`, or `None` if one of them
/// leaves it.
fn split_of(orbits: &[Vec<u32>], set: &BTreeSet<u32>) -> Option<Vec<usize>> {
    let mut sizes = Vec::new();
    for o in orbits {
        let inside = o.iter().filter(|x| set.contains(x)).count();
        if inside == 0 {
            continue;
        }
        if inside != o.len() {
            return None;
        }
        sizes.push(o.len());
    }
    Some(sorted(sizes))
}

/// Sorted sizes of the orbits disjoint from `set`.
fn rest_of(orbits: &[Vec<u32>], set: &BTreeSet<u32>) -> Vec<usize> {
    sorted(orbits.iter().filter(|o| o.iter().all(|x| !set.contains(x))).map(Vec::len).collect())
}

/// Points of the given critical point orbits.
fn point_set(p: &Pipeline, labels: &[&str]) -> BTreeSet<u32> {
    let l = &p.critical_labels.points;
    labels
        .iter()
        .flat_map(|lab| l.orbits[l.position(lab).expect("point label")].iter().copied())
        .collect()
}

/// Fixed points of the subgroups of one class inside `set`; all distinct
/// when each subgroup fixes a different point.
fn fixed_points(class: &[&SubgroupOrbits], set: &BTreeSet<u32>) -> Vec<u32> {
    class
        .iter()
        .flat_map(|s| s.points.iter().filter(|o| o.len() == 1 && set.contains(&o[0])).map(|o| o[0]))
        .collect()
}

fn check_census_orbits(p: &Pipeline, report: &CensusReport) -> Vec<Check> {
    let q = p.q();
    let p_classes: BTreeSet<usize> = report.subgroups.iter().map(|s| s.class).collect();
    let crit_class = report.critical_class();
    let crit = report.subgroups.iter().find(|s| s.critical).unwrap();
    let mut out = Vec::new();
    let classmates: Vec<&SubgroupOrbits> = report.members(crit_class).collect();
    let five = classmates.iter().filter(|s| s.points.len() != 5).count();
    out.push(Check::expect(
        Topic::Census,
        format!("q={q} subgroups conjugate to the critical one have 5 point orbits"),
        0,
        five,
    ));
    match q {
        2 => {
            // the plane x1 = x2 holds the cubic; outside it 8 points remain
            let plane: BTreeSet<u32> = p
                .space()
                .point_ids()
                .filter(|&x| {
                    let v = p.space().point_coords(x);
                    v[1] == v[2]
                })
                .map(|x| x.0)
                .collect();
            let inside = |s: &SubgroupOrbits| {
                sorted(s.points.iter().filter(|o| o.iter().all(|x| plane.contains(x))).cloned().collect::<Vec<_>>())
            };
            let reference = inside(crit);
            for c in p_classes.iter().filter(|&&c| c != crit_class) {
                let mut bad = Vec::new();
                for s in report.members(*c) {
                    if inside(s) != reference {
                        bad.push("orbits inside x1 = x2 differ from the critical class".to_string());
                    }
                    let out_sizes = rest_of(&s.points, &plane);
                    if out_sizes != [1, 1, 3, 3] {
                        bad.push(format!("orbit sizes outside x1 = x2: {out_sizes:?}"));
                    }
                    if s.points.len() != reference.len() + 4 {
                        bad.push(format!("{} point orbits", s.points.len()));
                    }
                }
                out.push(Check::new(
                    Topic::Census,
                    "q=2 other class: same orbits in x1 = x2, sizes 1,1,3,3 outside",
                    bad,
                ));
            }
        }
        3 => out.extend(check_census_q3(p, report)),
        _ => {}
    }
    out
}

fn check_census_q3(p: &Pipeline, report: &CensusReport) -> Vec<Check> {
    let c_pts = point_set(p, &["C"]);
    let to = point_set(p, &["TO"]);
    let rc = point_set(p, &["RC"]);
    let g4 = point_set(p, &["4_Gamma"]);
    let rest16 = point_set(p, &["4_Gamma", "IC"]);
    let c_to: BTreeSet<u32> = c_pts.union(&to).copied().collect();
    let mut out = Vec::new();

    let crit_class = report.critical_class();
    let mut bad = Vec::new();
    for s in report.members(crit_class) {
        for (name, set) in [("C", &c_pts), ("TO", &to), ("RC", &rc)] {
            if split_of(&s.points, set) != Some(vec![set.len()]) {
                bad.push(format!("{name} is not an orbit"));
            }
        }
        if split_of(&s.points, &rest16) != Some(vec![4, 12]) {
            bad.push("4_Gamma and IC points are not split 4 + 12".into());
        }
        if !s.critical && s.points.iter().any(|o| o.iter().copied().collect::<BTreeSet<_>>() == g4) {
            bad.push("a non-critical classmate keeps the 4_Gamma orbit".into());
        }
    }
    out.push(Check::new(Topic::Census, "q=3 critical class keeps C, TO, RC and splits the other 16 points 4 + 12", bad));

    let classes: BTreeSet<usize> = report.subgroups.iter().map(|s| s.class).collect();
    let mut to_whole = 0;
    let mut to_halves = 0;
    for &c in classes.iter().filter(|&&c| c != crit_class) {
        let members: Vec<&SubgroupOrbits> = report.members(c).collect();
        let mut bad = Vec::new();
        let name;
        if members.len() == 8 {
            name = "q=3 second class of eight: 8 orbits, C kept, TO split 1,3,4, rest 4,6,6,12";
            for s in &members {
                if s.points.len() != 8 {
                    bad.push(format!("{} point orbits", s.points.len()));
                }
                if split_of(&s.points, &c_pts) != Some(vec![4]) {
                    bad.push("C is not an orbit".into());
                }
                if split_of(&s.points, &to) != Some(vec![1, 3, 4]) {
                    bad.push(format!("TO split {:?}", split_of(&s.points, &to)));
                }
                if rest_of(&s.points, &c_to) != [4, 6, 6, 12] {
                    bad.push(format!("remaining orbits {:?}", rest_of(&s.points, &c_to)));
                }
            }
            let fixed = fixed_points(&members, &to);
            if fixed.iter().collect::<BTreeSet<_>>().len() != members.len() {
                bad.push("fixed points are not distinct".into());
            }
        } else {
            name = "q=3 classes of four: C split 1,3, TO whole or 4,4, rest 4,6,6,12";
            let mut whole = 0;
            for s in &members {
                if split_of(&s.points, &c_pts) != Some(vec![1, 3]) {
                    bad.push("C is not split 1 + 3".into());
                }
                match split_of(&s.points, &to).as_deref() {
                    Some([8]) => whole += 1,
                    Some([4, 4]) => {}
                    other => bad.push(format!("TO split {other:?}")),
                }
                if rest_of(&s.points, &c_to) != [4, 6, 6, 12] {
                    bad.push(format!("remaining orbits {:?}", rest_of(&s.points, &c_to)));
                }
            }
            match whole {
                0 => to_halves += 1,
                w if w == members.len() => to_whole += 1,
                _ => bad.push("TO behaves differently inside one class".into()),
            }
            let fixed = fixed_points(&members, &c_pts);
            if fixed.iter().collect::<BTreeSet<_>>().len() != members.len() {
                bad.push("fixed points are not distinct".into());
            }
        }
        out.push(Check::new(Topic::Census, format!("{name} (class {c})"), bad));
    }
    out.push(Check::expect(
        Topic::Census,
        "q=3 one class of four keeps TO, the other halves it",
        (1, 1),
        (to_whole, to_halves),
    ));
    out
}

fn check_labeling(topic: Topic, q: usize, l: &OrbitLabeling, expected: &[(String, usize)]) -> Check {
    let got: Vec<(String, usize)> = l.labels.iter().cloned().zip(l.sizes()).collect();
    Check::expect(topic, format!("q={q} {} {} orbits", l.group.name(), l.kind.name()), expected.to_vec(), got)
}

const KINDS: [ObjectKind; 3] = [ObjectKind::Planes, ObjectKind::Points, ObjectKind::Lines];

pub fn check_critical_orbits(p: &Pipeline) -> Vec<Check> {
    let q = p.q();
    KINDS
        .iter()
        .filter_map(|&k| {
            let exp = fixtures::expected_orbits(q, k, GroupKind::Critical)?;
            let topic = if fixtures::has_tables(q) { Topic::CriticalOrbits } else { Topic::Extended };
            Some(check_labeling(topic, q, p.critical_labels.get(k), &exp))
        })
        .collect()
}

pub fn check_full_orbits(p: &Pipeline) -> Vec<Check> {
    let q = p.q();
    let Some(full) = &p.full_labels else { return Vec::new() };
    let mut out = Vec::new();
    for k in KINDS {
        if let Some(exp) = fixtures::expected_orbits(q, k, GroupKind::Full) {
            out.push(check_labeling(Topic::FullOrbits, q, full.get(k), &exp));
        }
        if let Some(exp) = fixtures::expected_merges(q, k) {
            let got: Vec<Vec<usize>> = full.get(k).merge.iter().map(|m| m.iter().map(|i| i + 1).collect()).collect();
            out.push(Check::expect(Topic::FullOrbits, format!("q={q} {} union pattern", k.name()), exp, got));
        }
    }
    out
}

/// Label-keyed differences between a computed summary and a reference table.
pub fn table_diffs(table: &fixtures::TableFixture, s: &IncidenceSummary) -> Vec<String> {
    let mut out = Vec::new();
    let got_rows: BTreeMap<&str, usize> =
        s.row_labels.iter().map(String::as_str).zip(s.row_sizes.iter().copied()).collect();
    let got_cols: BTreeMap<&str, usize> =
        s.col_labels.iter().map(String::as_str).zip(s.col_sizes.iter().copied()).collect();
    let exp_rows: BTreeMap<&str, usize> = table.rows.iter().map(|r| (r.label, r.size)).collect();
    let exp_cols: BTreeMap<&str, usize> = table.cols.iter().copied().collect();
    for (what, exp, got) in [("row", &exp_rows, &got_rows), ("column", &exp_cols, &got_cols)] {
        if exp != got {
            out.push(format!("{}: {what} orbits expected {exp:?}, got {got:?}", table.id));
        }
    }
    for ((row, col), (t, b)) in table.cells() {
        match s.cell(row, col) {
            Some(c) if (c.t, c.b) == (t, b) => {}
            Some(c) => out.push(format!(
                "{}: row {row}, column {col}: expected {t}/{b}, got {}/{}",
                table.id, c.t, c.b
            )),
            None => out.push(format!("{}: row {row}, column {col}: expected {t}/{b}, got nothing", table.id)),
        }
    }
    out
}

pub fn check_tables(p: &Pipeline) -> Result<Vec<Check>> {
    let q = p.q();
    let mut out = Vec::new();
    for t in fixtures::tables().iter().filter(|t| t.q == q) {
        let s = p.summary(t.pair, t.group)?;
        out.push(Check::new(Topic::Tables, t.id, table_diffs(t, &s)));
    }
    Ok(out)
}

fn groups(p: &Pipeline) -> Vec<GroupKind> {
    let mut g = vec![GroupKind::Critical];
    if p.full.is_some() {
        g.push(GroupKind::Full);
    }
    g
}

pub fn check_relations(p: &Pipeline) -> Result<Vec<Check>> {
    let q = p.q();
    let mut out = Vec::new();
    for g in groups(p) {
        for pair in PairKind::ALL {
            let s = p.summary(pair, g)?;
            let topic = if fixtures::has_tables(q) { Topic::Relations } else { Topic::Extended };
            out.push(Check::new(topic, format!("q={q} {} {} relations", g.name(), pair.name()), verify_relations(&s)));
        }
    }
    Ok(out)
}

/// Null polarity checks; empty when q is divisible by 3.
pub fn check_polarity(p: &Pipeline) -> Result<Vec<Check>> {
    let m = &p.model;
    let q = p.q();
    if m.xi() == 0 {
        return Ok(Vec::new());
    }
    let space = p.space();
    let f = &space.field;
    let mut out = Vec::new();

    let mut bad = Vec::new();
    for t in 0..=q {
        let image = m.null_polarity(PointId(m.cubic_points[t]))?;
        if Some(image) != space.plane_of(&osc_vector(f, t)) {
            bad.push(format!("P({t}) is not sent to its osculating plane"));
        }
    }
    out.push(Check::new(Topic::Polarity, format!("q={q} cubic points go to osculating planes"), bad));

    let bad: Vec<String> = space
        .point_ids()
        .filter_map(|x| match m.null_polarity(x) {
            Ok(pl) if space.incident_point_plane(x, pl) => None,
            _ => Some(format!("point {} is off its polar plane", x.0)),
        })
        .collect();
    out.push(Check::new(Topic::Polarity, format!("q={q} every point lies on its polar plane"), bad));

    let image = |lines: &[u32]| -> Result<Vec<u32>> {
        let v: Vec<u32> = lines.iter().map(|&l| m.polar_line(LineId(l)).map(|x| x.0)).collect::<Result<_>>()?;
        Ok(sorted(v))
    };
    let mut bad = Vec::new();
    let rc = image(&m.real_chords)?;
    if rc != m.real_axes || rc.windows(2).any(|w| w[0] == w[1]) {
        bad.push("real chords do not map onto real axes".into());
    }
    let ic = image(&m.imaginary_chords)?;
    if ic != m.imaginary_axes_from_conjugate_planes() || ic.windows(2).any(|w| w[0] == w[1]) {
        bad.push("imaginary chords do not map onto imaginary axes".into());
    }
    if image(&m.real_axes)? != m.real_chords {
        bad.push("real axes do not map back onto real chords".into());
    }
    out.push(Check::new(Topic::Polarity, format!("q={q} chords and axes are exchanged"), bad));

    // the full group at q = 2 is not normalized by the polarity, so only
    // the critical group is expected to give a self-dual table
    let l = &p.critical_labels;
    let s = p.summary(PairKind::PlanePoint, GroupKind::Critical)?;
    let bad = polarity_duality_failures(m, &s, &l.planes, &l.points)?;
    out.push(Check::new(Topic::Polarity, format!("q={q} critical plane-point table is self-dual"), bad));
    Ok(out)
}

/// q = 3: the three EnGamma orbits meet the frame set in 1, 2 and 0 points.
pub fn check_frame_set(p: &Pipeline) -> Option<Check> {
    if p.q() != 3 {
        return None;
    }
    let frame: BTreeSet<u32> = p.model.frame_set.iter().copied().collect();
    let l = &p.critical_labels.lines;
    let mut got = Vec::new();
    for k in 1..=3 {
        let Some(i) = l.position(&format!("EnGamma_{k}")) else {
            return Some(Check::new(Topic::CriticalOrbits, "q=3 EnGamma frame-set meets", vec![format!("no EnGamma_{k}")]));
        };
        let meets: BTreeSet<usize> = l.orbits[i]
            .iter()
            .map(|&x| p.space().line_points(LineId(x)).iter().filter(|y| frame.contains(y)).count())
            .collect();
        got.push(meets.into_iter().collect::<Vec<_>>());
    }
    Some(Check::expect(Topic::CriticalOrbits, "q=3 EnGamma lines meet the frame set in 1, 2, 0 points", vec![vec![1], vec![2], vec![0]], got))
}

fn tactical_failures(space: &Space, kind: GroupKind, points: Vec<Vec<u32>>, planes: Vec<Vec<u32>>, lines: Vec<Vec<u32>>) -> Vec<String> {
    let mut bad = Vec::new();
    if points.len() != planes.len() {
        bad.push(format!("{} plane orbits but {} point orbits", planes.len(), points.len()));
    }
    let pts = plain_labeling(ObjectKind::Points, kind, points);
    let pls = plain_labeling(ObjectKind::Planes, kind, planes);
    let lns = plain_labeling(ObjectKind::Lines, kind, lines);
    for (pair, rows, cols) in [
        (PairKind::PlanePoint, &pls, &pts),
        (PairKind::LinePoint, &lns, &pts),
        (PairKind::LinePlane, &lns, &pls),
    ] {
        if let Err(e) = tactical_summary(space, pair, rows, cols) {
            bad.push(e.to_string());
        }
    }
    bad
}

/// Equal plane and point orbit counts and constancy for every group and,
/// when given, every census subgroup.
pub fn check_tactical(p: &Pipeline, census: Option<&CensusReport>) -> Result<Vec<Check>> {
    let q = p.q();
    let topic = if fixtures::has_tables(q) { Topic::Tactical } else { Topic::Extended };
    let mut out = Vec::new();
    for g in groups(p) {
        let l = p.labels(g)?;
        let bad = tactical_failures(p.space(), g, l.points.orbits.clone(), l.planes.orbits.clone(), l.lines.orbits.clone());
        out.push(Check::new(topic, format!("q={q} {} group decomposition", g.name()), bad));
    }
    if let Some(c) = census {
        let mut bad = Vec::new();
        for (i, s) in c.subgroups.iter().enumerate() {
            for e in tactical_failures(p.space(), GroupKind::Subgroup, s.points.clone(), s.planes.clone(), s.lines.clone()) {
                bad.push(format!("subgroup {i}: {e}"));
            }
        }
        out.push(Check::new(topic, format!("q={q} all {} census subgroups", c.subgroups.len()), bad));
    }
    Ok(out)
}

/// Closed-form class sizes and orbit counts for q >= 5.
pub fn check_extended(p: &Pipeline) -> Vec<Check> {
    let q = p.q();
    let m = &p.model;
    let mut out = Vec::new();
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    for &t in m.line_types() {
        *classes.entry(t.label().to_string()).or_default() += 1;
    }
    let expected: BTreeMap<String, usize> =
        fixtures::line_class_sizes(q).into_iter().map(|(t, n)| (t.label().to_string(), n)).collect();
    out.push(Check::expect(Topic::Extended, format!("q={q} line class sizes"), expected, classes));

    let lines = &p.critical_labels.lines;
    out.push(Check::expect(
        Topic::Extended,
        format!("q={q} critical line orbit count"),
        fixtures::line_orbit_count(q),
        lines.len(),
    ));

    let mut pts: BTreeMap<String, usize> = BTreeMap::new();
    for &t in m.point_types() {
        *pts.entry(t.label(q)).or_default() += 1;
    }
    let expected: BTreeMap<String, usize> = PointType::taxonomy(m.xi())
        .iter()
        .map(|t| t.label(q))
        .zip(fixtures::closed_form_orbits(q, ObjectKind::Points).into_iter().map(|x| x.1))
        .collect();
    out.push(Check::expect(Topic::Extended, format!("q={q} point class sizes"), expected, pts));
    out
}

/// Every check for one q, in topic order.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub q: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs the whole pipeline for q and collects every check. For q without
/// reference tables only the closed-form checks apply.
pub fn verify(q: usize) -> Result<VerifyReport> {
    let p = Pipeline::new(q)?;
    verify_pipeline(&p)
}

pub fn verify_pipeline(p: &Pipeline) -> Result<VerifyReport> {
    let q = p.q();
    let mut checks = vec![check_counts(p.space())];
    checks.extend(check_group_orders(p));
    let census = if p.full.is_some() { Some(p.census()?) } else { None };
    if let Some(c) = &census {
        checks.extend(check_census(p, c));
    }
    checks.extend(check_critical_orbits(p));
    checks.extend(check_frame_set(p));
    checks.extend(check_full_orbits(p));
    checks.extend(check_tables(p)?);
    checks.extend(check_relations(p)?);
    checks.extend(check_polarity(p)?);
    checks.extend(check_tactical(p, census.as_ref())?);
    if !fixtures::has_tables(q) {
        checks.extend(check_extended(p));
    }
    checks.sort_by_key(|c| c.topic);
    Ok(VerifyReport { q, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_passes_everything() {
        let r = verify(2).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn a_wrong_cell_is_reported_with_its_keys() {
        let p = Pipeline::build(2, None).unwrap();
        let table = fixtures::table(2, PairKind::PlanePoint, GroupKind::Critical).unwrap();
        let mut s = p.summary(PairKind::PlanePoint, GroupKind::Critical).unwrap();
        assert!(table_diffs(table, &s).is_empty());
        let i = s.row_labels.iter().position(|l| l == "2_C").unwrap();
        let j = s.col_labels.iter().position(|l| l == "C").unwrap();
        s.cells[i][j].t += 1;
        let d = table_diffs(table, &s);
        assert_eq!(d, ["q2-plane-point-critical: row 2_C, column C: expected 2/4, got 3/4"]);
    }

    #[test]
    fn split_helpers() {
        let orbits = vec![vec![0, 1], vec![2], vec![3, 4, 5]];
        let set: BTreeSet<u32> = [0, 1, 2].into();
        assert_eq!(split_of(&orbits, &set), Some(vec![1, 2]));
        assert_eq!(rest_of(&orbits, &set), vec![3]);
        let cut: BTreeSet<u32> = [0].into();
        assert_eq!(split_of(&orbits, &cut), None);
    }
}
