//! The twisted cubic `C = {P(t)}` with `P(t) = (t³, t², t, 1)` and
//! `P(∞) = (1, 0, 0, 0)`, its osculating planes, chords, tangents, axes,
//! the null polarity, and the point/plane/line type classifiers.
//!
//! Parameters `t ∈ F_q ∪ {∞}` are indexed `0..=q`: index `i < q` is the
//! field element `i`, index `q` is `∞`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{make_extension, Elem, ExtFieldTable, FieldTable};
use crate::space::{dot, normalize, LineId, PlaneId, PointId, Space, Vec4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneType {
    Gamma,
    TwoC,
    ThreeC,
    OneBarC,
    ZeroC,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointType {
    C,
    T,
    ThreeGamma,
    OneGamma,
    ZeroGamma,
    /// On every osculating plane; only when 3 divides q.
    AllGamma,
    TO,
    RC,
    IC,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineType {
    RC,
    RA,
    T,
    IC,
    IA,
    UGamma,
    UnGamma,
    EGamma,
    EnGamma,
    A,
    EA,
}

impl PlaneType {
    pub const ALL: [PlaneType; 5] = [
        PlaneType::Gamma,
        PlaneType::TwoC,
        PlaneType::ThreeC,
        PlaneType::OneBarC,
        PlaneType::ZeroC,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PlaneType::Gamma => "Gamma",
            PlaneType::TwoC => "2_C",
            PlaneType::ThreeC => "3_C",
            PlaneType::OneBarC => "1bar_C",
            PlaneType::ZeroC => "0_C",
        }
    }
}

impl PointType {
    pub fn label(self, q: usize) -> String {
        match self {
            PointType::C => "C".into(),
            PointType::T => "T".into(),
            PointType::ThreeGamma => "3_Gamma".into(),
            PointType::OneGamma => "1_Gamma".into(),
            PointType::ZeroGamma => "0_Gamma".into(),
            PointType::AllGamma => format!("{}_Gamma", q + 1),
            PointType::TO => "TO".into(),
            PointType::RC => "RC".into(),
            PointType::IC => "IC".into(),
        }
    }

    /// The point types that occur for the given residue of q mod 3.
    pub fn taxonomy(xi: i8) -> &'static [PointType] {
        use PointType::*;
        if xi == 0 {
            &[C, AllGamma, TO, RC, IC]
        } else {
            &[C, T, ThreeGamma, OneGamma, ZeroGamma]
        }
    }
}

impl LineType {
    pub fn label(self) -> &'static str {
        match self {
            LineType::RC => "RC",
            LineType::RA => "RA",
            LineType::T => "T",
            LineType::IC => "IC",
            LineType::IA => "IA",
            LineType::UGamma => "UGamma",
            LineType::UnGamma => "UnGamma",
            LineType::EGamma => "EGamma",
            LineType::EnGamma => "EnGamma",
            LineType::A => "A",
            LineType::EA => "EA",
        }
    }

    pub fn taxonomy(xi: i8) -> &'static [LineType] {
        use LineType::*;
        if xi == 0 {
            &[RC, T, IC, UGamma, UnGamma, EnGamma, A, EA]
        } else {
            &[RC, RA, T, IC, IA, UGamma, UnGamma, EGamma, EnGamma]
        }
    }
}

impl fmt::Display for PlaneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for LineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone)]
pub struct CubicModel {
    pub space: Space,
    pub ext: ExtFieldTable,
    /// Point index of `P(t)`, by parameter index.
    pub cubic_points: Vec<u32>,
    pub osc_planes: Vec<u32>,
    pub tangent_lines: Vec<u32>,
    pub real_chords: Vec<u32>,
    pub imaginary_chords: Vec<u32>,
    pub real_axes: Vec<u32>,
    pub imaginary_axes: Vec<u32>,
    pub pencil_axis: Option<u32>,
    /// Points on none of the `3_C` planes; populated for q = 3 only.
    pub frame_set: Vec<u32>,
    plane_types: Vec<PlaneType>,
    point_types: Vec<PointType>,
    line_types: Vec<LineType>,
}

pub fn build_cubic(q: usize) -> Result<CubicModel> {
    CubicModel::new(Space::new(q)?)
}

impl CubicModel {
    pub fn new(space: Space) -> Result<Self> {
        let ext = make_extension(&space.field)?;
        let q = space.q();
        let f = &space.field;

        let cubic_points: Vec<u32> = (0..=q)
            .map(|t| space.point_of(&cubic_vector(f, t)).unwrap().0)
            .collect();
        let osc_planes: Vec<u32> = (0..=q)
            .map(|t| space.plane_of(&osc_vector(f, t)).unwrap().0)
            .collect();
        let tangent_lines: Vec<u32> = (0..=q)
            .map(|t| {
                let (u, v) = tangent_span(f, t);
                space.line_spanned(&u, &v).unwrap().0
            })
            .collect();

        let mut real_chords = BTreeSet::new();
        for (i, &a) in cubic_points.iter().enumerate() {
            for &b in &cubic_points[i + 1..] {
                real_chords.insert(space.line_through(PointId(a), PointId(b))?.0);
            }
        }
        let imaginary_chords = imaginary_chords(&space, &ext);

        let xi = space.params.xi;
        let (mut real_axes, mut imaginary_axes, mut pencil_axis) = (BTreeSet::new(), Vec::new(), None);
        if xi != 0 {
            for (i, &a) in osc_planes.iter().enumerate() {
                for &b in &osc_planes[i + 1..] {
                    real_axes.insert(space.planes_meet(PlaneId(a), PlaneId(b))?.0);
                }
            }
            let mut ia: Vec<u32> = imaginary_chords
                .iter()
                .map(|&l| polar_line(&space, LineId(l)).map(|x| x.0))
                .collect::<Result<_>>()?;
            ia.sort_unstable();
            imaginary_axes = ia;
        } else {
            pencil_axis = Some(space.planes_meet(PlaneId(osc_planes[0]), PlaneId(osc_planes[1]))?.0);
        }

        let mut model = CubicModel {
            space,
            ext,
            cubic_points,
            osc_planes,
            tangent_lines,
            real_chords: real_chords.into_iter().collect(),
            imaginary_chords,
            real_axes: real_axes.into_iter().collect(),
            imaginary_axes,
            pencil_axis,
            frame_set: Vec::new(),
            plane_types: Vec::new(),
            point_types: Vec::new(),
            line_types: Vec::new(),
        };
        model.plane_types = model.space.plane_ids().map(|p| model.compute_plane_type(p)).collect();
        model.point_types = model
            .space
            .point_ids()
            .map(|p| model.compute_point_type(p))
            .collect::<Result<_>>()?;
        model.line_types = model
            .space
            .line_ids()
            .map(|l| model.compute_line_type(l))
            .collect::<Result<_>>()?;
        if q == 3 {
            model.frame_set = model.compute_frame_set();
        }
        Ok(model)
    }

    pub fn q(&self) -> usize {
        self.space.q()
    }

    pub fn xi(&self) -> i8 {
        self.space.params.xi
    }

    pub fn classify_plane(&self, pl: PlaneId) -> PlaneType {
        self.plane_types[pl.0 as usize]
    }

    pub fn classify_point(&self, p: PointId) -> PointType {
        self.point_types[p.0 as usize]
    }

    pub fn classify_line(&self, l: LineId) -> LineType {
        self.line_types[l.0 as usize]
    }

    pub fn plane_types(&self) -> &[PlaneType] {
        &self.plane_types
    }

    pub fn point_types(&self) -> &[PointType] {
        &self.point_types
    }

    pub fn line_types(&self) -> &[LineType] {
        &self.line_types
    }

    pub fn tangent_line_at(&self, t: usize) -> LineId {
        LineId(self.tangent_lines[t])
    }

    pub fn is_cubic_point(&self, p: u32) -> bool {
        self.cubic_points.contains(&p)
    }

    pub fn cubic_points_on_line(&self, l: LineId) -> usize {
        self.space.line_points(l).iter().filter(|&&x| self.is_cubic_point(x)).count()
    }

    pub fn cubic_points_on_plane(&self, pl: PlaneId) -> usize {
        self.cubic_points
            .iter()
            .filter(|&&x| self.space.incident_point_plane(PointId(x), pl))
            .count()
    }

    fn osc_planes_through_point(&self, p: PointId) -> usize {
        self.osc_planes
            .iter()
            .filter(|&&pl| self.space.incident_point_plane(p, PlaneId(pl)))
            .count()
    }

    fn in_some_osc_plane(&self, l: LineId) -> bool {
        self.osc_planes.iter().any(|&pl| self.space.line_in_plane(l, PlaneId(pl)))
    }

    fn on_any(&self, p: PointId, lines: &[u32]) -> bool {
        lines.iter().any(|&l| self.space.point_on_line(p, LineId(l)))
    }

    fn compute_plane_type(&self, pl: PlaneId) -> PlaneType {
        if self.osc_planes.contains(&pl.0) {
            return PlaneType::Gamma;
        }
        match self.cubic_points_on_plane(pl) {
            0 => PlaneType::ZeroC,
            1 => PlaneType::OneBarC,
            2 => PlaneType::TwoC,
            _ => PlaneType::ThreeC,
        }
    }

    fn compute_point_type(&self, p: PointId) -> Result<PointType> {
        if self.is_cubic_point(p.0) {
            return Ok(PointType::C);
        }
        let mu = self.osc_planes_through_point(p);
        if self.xi() != 0 {
            if self.on_any(p, &self.tangent_lines) {
                return Ok(PointType::T);
            }
            return match mu {
                0 => Ok(PointType::ZeroGamma),
                1 => Ok(PointType::OneGamma),
                3 => Ok(PointType::ThreeGamma),
                _ => Err(self.violation("point", p.0 as usize, format!("on {mu} osculating planes"))),
            };
        }
        if mu == self.q() + 1 {
            Ok(PointType::AllGamma)
        } else if self.on_any(p, &self.tangent_lines) {
            Ok(PointType::TO)
        } else if self.on_any(p, &self.real_chords) {
            Ok(PointType::RC)
        } else if self.on_any(p, &self.imaginary_chords) {
            Ok(PointType::IC)
        } else {
            Err(self.violation("point", p.0 as usize, "matches no point type".into()))
        }
    }

    fn compute_line_type(&self, l: LineId) -> Result<LineType> {
        let on = |set: &[u32]| set.binary_search(&l.0).is_ok();
        if self.tangent_lines.contains(&l.0) {
            return Ok(LineType::T);
        }
        let n = self.cubic_points_on_line(l);
        if n == 2 {
            return Ok(LineType::RC);
        }
        if on(&self.imaginary_chords) {
            return Ok(LineType::IC);
        }
        if self.xi() != 0 {
            if on(&self.real_axes) {
                return Ok(LineType::RA);
            }
            if on(&self.imaginary_axes) {
                return Ok(LineType::IA);
            }
        } else if self.pencil_axis == Some(l.0) {
            return Ok(LineType::A);
        }
        match n {
            1 if self.in_some_osc_plane(l) => Ok(LineType::UGamma),
            1 => Ok(LineType::UnGamma),
            0 if self.xi() != 0 && self.in_some_osc_plane(l) => Ok(LineType::EGamma),
            0 if self.xi() == 0 && self.meets_pencil_axis(l) => Ok(LineType::EA),
            0 => Ok(LineType::EnGamma),
            _ => Err(self.violation("line", l.0 as usize, format!("{n} cubic points"))),
        }
    }

    fn meets_pencil_axis(&self, l: LineId) -> bool {
        match self.pencil_axis {
            Some(a) => a != l.0 && self.space.lines_meet(l, LineId(a)).unwrap().is_some(),
            None => false,
        }
    }

    fn violation(&self, kind: &'static str, index: usize, detail: String) -> Error {
        Error::Taxonomy { kind, index, detail }
    }

    fn compute_frame_set(&self) -> Vec<u32> {
        let triples: Vec<u32> = self
            .space
            .plane_ids()
            .filter(|&p| self.classify_plane(p) == PlaneType::ThreeC)
            .map(|p| p.0)
            .collect();
        self.space
            .point_ids()
            .filter(|&p| triples.iter().all(|&pl| !self.space.incident_point_plane(p, PlaneId(pl))))
            .map(|p| p.0)
            .collect()
    }

    pub fn null_polarity(&self, p: PointId) -> Result<PlaneId> {
        null_polarity(&self.space, p)
    }

    pub fn dual(&self, pl: PlaneId) -> Result<PointId> {
        polarity_dual(&self.space, pl)
    }

    pub fn polar_line(&self, l: LineId) -> Result<LineId> {
        polar_line(&self.space, l)
    }

    /// Imaginary axes recomputed as the rational lines on conjugate pairs
    /// of osculating planes over GF(q²).
    pub fn imaginary_axes_from_conjugate_planes(&self) -> Vec<u32> {
        let e = &self.ext.ext;
        let base = &self.space.field;
        let mut out = BTreeSet::new();
        for t in e.elements().filter(|&t| !self.ext.is_rational(t)) {
            let c = osc_vector(e, t as usize);
            let pts: Vec<u32> = self
                .space
                .point_ids()
                .filter(|&p| {
                    let x = self.space.point_coords(p).map(|v| self.ext.embed(v));
                    dot(e, &x, &c) == 0
                })
                .map(|p| p.0)
                .collect();
            debug_assert_eq!(pts.len(), base.order() + 1);
            out.insert(self.space.line_through(PointId(pts[0]), PointId(pts[1])).unwrap().0);
        }
        out.into_iter().collect()
    }
}

/// Coordinates of `P(t)` for parameter index `t` over the given field.
pub fn cubic_vector(f: &FieldTable, t: usize) -> Vec4 {
    if t == f.order() {
        return [1, 0, 0, 0];
    }
    let t = t as Elem;
    let t2 = f.mul(t, t);
    [f.mul(t2, t), t2, t, 1]
}

/// Coefficients of the osculating plane `π(1, −3t, 3t², −t³)`, or `π(0,0,0,1)` at ∞.
pub fn osc_vector(f: &FieldTable, t: usize) -> Vec4 {
    if t == f.order() {
        return [0, 0, 0, 1];
    }
    let t = t as Elem;
    let (three, m3) = (f.from_int(3), f.from_int(-3));
    let t2 = f.mul(t, t);
    [1, f.mul(m3, t), f.mul(three, t2), f.neg(f.mul(t2, t))]
}

/// Two vectors spanning the tangent at `P(t)`.
pub fn tangent_span(f: &FieldTable, t: usize) -> (Vec4, Vec4) {
    if t == f.order() {
        return ([1, 0, 0, 0], [0, 1, 0, 0]);
    }
    let te = t as Elem;
    let d = [f.mul(f.from_int(3), f.mul(te, te)), f.mul(f.from_int(2), te), 1, 0];
    (cubic_vector(f, t), d)
}

fn imaginary_chords(space: &Space, ext: &ExtFieldTable) -> Vec<u32> {
    let e = &ext.ext;
    let gamma = e.primitive_element();
    let mut out = BTreeSet::new();
    for t in e.elements().filter(|&t| !ext.is_rational(t)) {
        let u = cubic_vector(e, t as usize);
        let trace = |v: Vec4| -> Vec4 {
            v.map(|x| ext.restrict(e.add(x, ext.frobenius(x))).expect("trace is rational"))
        };
        let w1 = trace(u);
        let w2 = trace(u.map(|x| e.mul(gamma, x)));
        out.insert(space.line_spanned(&w1, &w2).expect("conjugate points are distinct").0);
    }
    out.into_iter().collect()
}

fn polarity_guard(space: &Space) -> Result<()> {
    if space.params.xi == 0 {
        Err(Error::PolarityUndefined(space.q()))
    } else {
        Ok(())
    }
}

/// `P(x0,x1,x2,x3) ↦ π(x3, −3x2, 3x1, −x0)`.
pub fn null_polarity(space: &Space, p: PointId) -> Result<PlaneId> {
    polarity_guard(space)?;
    let f = &space.field;
    let x = space.point_coords(p);
    let c = [x[3], f.mul(f.from_int(-3), x[2]), f.mul(f.from_int(3), x[1]), f.neg(x[0])];
    Ok(space.plane_of(&c).expect("polarity is nonsingular"))
}

pub fn polarity_dual(space: &Space, pl: PlaneId) -> Result<PointId> {
    polarity_guard(space)?;
    let f = &space.field;
    let c = space.plane_coeffs(pl);
    let third = f.inv_nz(f.from_int(3));
    let x = [f.neg(c[3]), f.mul(third, c[2]), f.mul(third, f.neg(c[1])), c[0]];
    let x = normalize(f, &x).expect("nonzero");
    Ok(space.point_of(&x).unwrap())
}

/// Image of a line: the meet of the polar planes of two of its points.
pub fn polar_line(space: &Space, l: LineId) -> Result<LineId> {
    let pts = space.line_points(l);
    let a = null_polarity(space, PointId(pts[0]))?;
    let b = null_polarity(space, PointId(pts[1]))?;
    space.planes_meet(a, b)
}
