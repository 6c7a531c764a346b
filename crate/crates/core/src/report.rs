//! Report documents and their text, CSV and JSON renderings.
//!
//! JSON output is canonical: struct fields serialize in declaration order,
//! maps are ordered, and every number is an integer.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::group::GroupKind;
use crate::orbit::{IncidenceSummary, ObjectKind, OrbitLabeling, PairKind};
use crate::verify::{CensusReport, Check, Pipeline, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub q: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objects: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Vec<CensusEntry>>,
}

impl Meta {
    fn new(command: &'static str, q: Vec<usize>) -> Self {
        Meta {
            tool: "twc",
            version: env!("CARGO_PKG_VERSION"),
            command,
            q,
            group: None,
            objects: None,
            pair: None,
            census: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub q: usize,
    pub subgroups: usize,
    pub class_sizes: Vec<usize>,
    pub classes: Vec<CensusClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    pub size: usize,
    pub contains_critical: bool,
    /// Sorted point-orbit sizes of each member, critical member first.
    pub point_orbit_sizes: Vec<Vec<usize>>,
    pub plane_orbit_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub q: usize,
    pub objects: &'static str,
    pub group: &'static str,
    pub name: String,
    pub label: String,
    pub size: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub merges: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellEntry {
    pub row_label: String,
    pub col_label: String,
    pub t: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub q: usize,
    pub topic: String,
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub meta: Meta,
    pub orbits: Vec<OrbitEntry>,
    pub cells: Vec<CellEntry>,
    pub checks: Vec<CheckEntry>,
    /// The incidence grid behind `cells`, kept for the text renderer.
    #[serde(skip)]
    pub summary: Option<IncidenceSummary>,
}

impl ReportDocument {
    fn new(meta: Meta) -> Self {
        ReportDocument { meta, orbits: Vec::new(), cells: Vec::new(), checks: Vec::new(), summary: None }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Labeling(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let err = |e: csv::Error| Error::Labeling(e.to_string());
        match self.meta.command {
            "incidence" => {
                w.write_record(["row_label", "col_label", "t", "b"]).map_err(err)?;
                for c in &self.cells {
                    w.write_record([&c.row_label, &c.col_label, &c.t.to_string(), &c.b.to_string()]).map_err(err)?;
                }
            }
            "orbits" => {
                w.write_record(["name", "label", "size", "merges"]).map_err(err)?;
                for o in &self.orbits {
                    w.write_record([&o.name, &o.label, &o.size.to_string(), &o.merges.join(" ")]).map_err(err)?;
                }
            }
            _ => {
                w.write_record(["q", "topic", "check", "status"]).map_err(err)?;
                for c in &self.checks {
                    w.write_record([&c.q.to_string(), &c.topic, &c.name, c.status]).map_err(err)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Labeling(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Labeling(e.to_string()))
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(s) = &self.summary {
            out.push_str(&render_grid(s, self.meta.group.unwrap_or("")));
        } else if !self.orbits.is_empty() {
            out.push_str(&render_orbits(&self.orbits));
        }
        if let Some(census) = &self.meta.census {
            for c in census {
                out.push_str(&render_census(c));
            }
        }
        if !self.checks.is_empty() {
            if !out.is_empty() {
                out.push('\n');
            }
            for c in &self.checks {
                let tag = if c.status == "pass" { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag}  {}\n", c.name));
                for d in &c.details {
                    out.push_str(&format!("      {d}\n"));
                }
            }
            let failed = self.checks.iter().filter(|c| c.status != "pass").count();
            out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        }
        out
    }
}

fn render_orbits(orbits: &[OrbitEntry]) -> String {
    let mut out = String::new();
    let w_name = orbits.iter().map(|o| o.name.len()).max().unwrap_or(4).max(4);
    let w_size = orbits.iter().map(|o| o.size.to_string().len()).max().unwrap_or(4).max(4);
    let first = &orbits[0];
    out.push_str(&format!("q = {}, {} group, {}: {} orbits\n", first.q, first.group, first.objects, orbits.len()));
    out.push_str(&format!("{:<w_name$}  {:>w_size$}  label\n", "name", "size"));
    for o in orbits {
        out.push_str(&format!("{:<w_name$}  {:>w_size$}  {}", o.name, o.size, o.label));
        if !o.merges.is_empty() {
            out.push_str(&format!("  = {}", o.merges.join(" + ")));
        }
        out.push('\n');
    }
    out
}

/// Text grid: one header block for the columns, then two lines per
/// row orbit, the top entries over the bottom entries.
fn render_grid(s: &IncidenceSummary, group: &str) -> String {
    let heads: Vec<String> = s.row_names.iter().zip(&s.row_labels).zip(&s.row_sizes).map(|((n, l), k)| format!("{n}: {l} ({k})")).collect();
    let w0 = heads.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..s.col_labels.len())
        .map(|j| s.col_labels[j].len().max(s.col_names[j].len()).max(3))
        .collect();
    let line = |first: &str, cells: Vec<String>| -> String {
        let mut l = format!("{first:<w0$}");
        for (c, w) in cells.iter().zip(&widths) {
            l.push_str(&format!("  {c:>w$}"));
        }
        l.trim_end().to_string() + "\n"
    };
    let mut out = format!("q = {}, {group} group, {} (t over b)\n", s.q, s.pair.name());
    out.push_str(&line("", s.col_names.clone()));
    out.push_str(&line("", s.col_labels.clone()));
    out.push_str(&line("", s.col_sizes.iter().map(|x| x.to_string()).collect()));
    for (i, h) in heads.iter().enumerate() {
        out.push_str(&line(h, s.cells[i].iter().map(|c| c.t.to_string()).collect()));
        out.push_str(&line("", s.cells[i].iter().map(|c| c.b.to_string()).collect()));
    }
    out
}

fn render_census(c: &CensusEntry) -> String {
    let mut out = format!(
        "q = {}: {} subgroups of critical form, conjugacy classes {:?}\n",
        c.q, c.subgroups, c.class_sizes
    );
    for (i, cl) in c.classes.iter().enumerate() {
        let mark = if cl.contains_critical { " (contains the critical subgroup)" } else { "" };
        out.push_str(&format!("class {}: {} subgroups{mark}\n", i + 1, cl.size));
        let mut seen: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
        for s in &cl.point_orbit_sizes {
            *seen.entry(s).or_default() += 1;
        }
        for (sizes, n) in seen {
            out.push_str(&format!("  {n} x {} point orbits, sizes {:?}\n", sizes.len(), sizes));
        }
    }
    out
}

fn objects_name(kind: ObjectKind) -> &'static str {
    kind.name()
}

pub fn orbit_entries(q: usize, l: &OrbitLabeling, critical: &OrbitLabeling) -> Vec<OrbitEntry> {
    (0..l.len())
        .map(|i| OrbitEntry {
            q,
            objects: objects_name(l.kind),
            group: l.group.name(),
            name: l.names[i].clone(),
            label: l.labels[i].clone(),
            size: l.orbits[i].len(),
            merges: if l.group == GroupKind::Critical {
                Vec::new()
            } else {
                l.merge[i].iter().map(|&k| critical.names[k].clone()).collect()
            },
        })
        .collect()
}

pub fn orbits_document(p: &Pipeline, kind: ObjectKind, group: GroupKind) -> Result<ReportDocument> {
    let l = p.labels(group)?.get(kind);
    let mut meta = Meta::new("orbits", vec![p.q()]);
    meta.group = Some(group.name());
    meta.objects = Some(objects_name(kind));
    let mut doc = ReportDocument::new(meta);
    doc.orbits = orbit_entries(p.q(), l, p.critical_labels.get(kind));
    Ok(doc)
}

pub fn incidence_document(p: &Pipeline, pair: PairKind, group: GroupKind) -> Result<ReportDocument> {
    let mut s = p.summary(pair, group)?;
    // follow the reference table layout where there is one
    if let Some(t) = fixtures::table(p.q(), pair, group) {
        let rows: Vec<&str> = t.rows.iter().map(|r| r.label).collect();
        let cols: Vec<&str> = t.cols.iter().map(|c| c.0).collect();
        if let Some(r) = s.reordered(&rows, &cols) {
            s = r;
        }
    }
    let l = p.labels(group)?;
    let mut meta = Meta::new("incidence", vec![p.q()]);
    meta.group = Some(group.name());
    meta.pair = Some(pair.name());
    let mut doc = ReportDocument::new(meta);
    for kind in [pair.row_kind(), pair.col_kind()] {
        doc.orbits.extend(orbit_entries(p.q(), l.get(kind), p.critical_labels.get(kind)));
    }
    for (i, row) in s.cells.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            doc.cells.push(CellEntry {
                row_label: s.row_labels[i].clone(),
                col_label: s.col_labels[j].clone(),
                t: c.t,
                b: c.b,
            });
        }
    }
    doc.summary = Some(s);
    Ok(doc)
}

pub fn census_entry(q: usize, report: &CensusReport) -> CensusEntry {
    let crit_class = report.critical_class();
    let classes = report
        .census
        .classes
        .iter()
        .enumerate()
        .map(|(c, members)| {
            let mut subs: Vec<_> = report.members(c).collect();
            subs.sort_by_key(|s| !s.critical);
            CensusClass {
                size: members.len(),
                contains_critical: c == crit_class,
                point_orbit_sizes: subs.iter().map(|s| s.point_sizes()).collect(),
                plane_orbit_counts: subs.iter().map(|s| s.planes.len()).collect(),
            }
        })
        .collect();
    CensusEntry { q, subgroups: report.census.subgroups.len(), class_sizes: report.census.class_sizes(), classes }
}

fn check_entries(q: usize, checks: &[Check]) -> Vec<CheckEntry> {
    checks
        .iter()
        .map(|c| CheckEntry {
            q,
            topic: c.topic.name().to_string(),
            name: c.name.clone(),
            status: if c.passed { "pass" } else { "fail" },
            details: c.details.clone(),
        })
        .collect()
}

pub fn subgroups_document(p: &Pipeline) -> Result<ReportDocument> {
    let report = p.census()?;
    let mut meta = Meta::new("subgroups", vec![p.q()]);
    meta.census = Some(vec![census_entry(p.q(), &report)]);
    let mut doc = ReportDocument::new(meta);
    doc.checks = check_entries(p.q(), &crate::verify::check_census(p, &report));
    Ok(doc)
}

pub fn verify_document(reports: &[VerifyReport]) -> ReportDocument {
    let mut doc = ReportDocument::new(Meta::new("verify", reports.iter().map(|r| r.q).collect()));
    for r in reports {
        doc.checks.extend(check_entries(r.q, &r.checks));
    }
    doc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_union_labels() {
        let p = Pipeline::build(2, None).unwrap();
        let doc = incidence_document(&p, PairKind::LinePoint, GroupKind::Full).unwrap();
        let csv = doc.render(Format::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("row_label,col_label,t,b"));
        assert!(csv.contains("\"T,UGamma_1,UnGamma\",\"T,0_Gamma\",2,3\n"));
        assert!(!csv.contains('\r'));
        assert_eq!(csv.lines().count(), 1 + 6 * 4);
    }

    #[test]
    fn json_is_deterministic_and_integral() {
        let a = incidence_document(&Pipeline::build(3, None).unwrap(), PairKind::PlanePoint, GroupKind::Critical).unwrap();
        let b = incidence_document(&Pipeline::build(3, None).unwrap(), PairKind::PlanePoint, GroupKind::Critical).unwrap();
        let ja = a.render(Format::Json).unwrap();
        assert_eq!(ja, b.render(Format::Json).unwrap());
        let v: serde_json::Value = serde_json::from_str(&ja).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["cells", "checks", "meta", "orbits"]);
        assert_eq!(v["cells"].as_array().unwrap().len(), 25);
        fn integral(v: &serde_json::Value) -> bool {
            match v {
                serde_json::Value::Number(n) => n.is_u64(),
                serde_json::Value::Array(a) => a.iter().all(integral),
                serde_json::Value::Object(o) => o.values().all(integral),
                _ => true,
            }
        }
        assert!(integral(&v));
    }

    #[test]
    fn text_grid_has_two_lines_per_row() {
        let p = Pipeline::build(2, None).unwrap();
        let doc = incidence_document(&p, PairKind::PlanePoint, GroupKind::Critical).unwrap();
        let text = doc.render(Format::Text).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4 + 2 * 5);
        let row = lines.iter().position(|l| l.starts_with("N*2: 2_C (6)")).unwrap();
        let t: Vec<&str> = lines[row]["N*2: 2_C (6)".len()..].split_whitespace().collect();
        let b: Vec<&str> = lines[row + 1].split_whitespace().collect();
        // reference column order C, 3_Gamma, 1_Gamma, T, 0_Gamma
        assert_eq!(t, ["2", "0", "1", "3", "1"]);
        assert_eq!(b, ["4", "0", "2", "3", "3"]);
    }
}
