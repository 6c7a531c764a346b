//! Points, planes and lines of PG(3,q).
//!
//! Points and planes share one enumeration: both are canonical 4-vectors
//! whose rightmost nonzero entry is 1, listed in lexicographic order of
//! element indices. Plane `i` is the plane whose coefficient vector equals
//! the coordinates of point `i`, so the point-plane incidence relation is
//! symmetric in the index pair. Lines are keyed by the sorted indices of
//! their `q + 1` points and listed in lexicographic order of those keys.

use crate::error::{Error, Result};
use crate::field::{make_field, Elem, FieldTable};

pub type Vec4 = [Elem; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineId(pub u32);

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceParams {
    pub q: usize,
    /// q mod 3 as an element of {-1, 0, 1}.
    pub xi: i8,
    pub theta: usize,
    pub beta: usize,
}

impl SpaceParams {
    pub fn new(q: usize) -> Self {
        let xi = match q % 3 {
            0 => 0,
            1 => 1,
            _ => -1,
        };
        SpaceParams {
            q,
            xi,
            theta: q * q * q + q * q + q + 1,
            beta: (q * q + 1) * (q * q + q + 1),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Space {
    pub field: FieldTable,
    pub params: SpaceParams,
    points: Vec<Vec4>,
    /// Encoded vector -> projective point index; `NONE` for the zero vector.
    class_of: Vec<u32>,
    lines: Vec<Vec<u32>>,
    /// `line_of_pair[a * theta + b]` for distinct points `a`, `b`.
    line_of_pair: Vec<u32>,
    points_on_plane: Vec<Vec<u32>>,
    lines_through_point: Vec<Vec<u32>>,
    planes_through_line: Vec<Vec<u32>>,
    lines_in_plane: Vec<Vec<u32>>,
}

impl Space {
    pub fn new(q: usize) -> Result<Self> {
        let field = make_field(q)?;
        Ok(Self::from_field(field))
    }

    pub fn from_field(field: FieldTable) -> Self {
        let q = field.order();
        let params = SpaceParams::new(q);

        // lexicographic over (x0, x1, x2, x3) with rightmost nonzero = 1
        let mut points = Vec::with_capacity(params.theta);
        for code in 0..q.pow(4) {
            let v = decode(code, q);
            if let Some(&last) = v.iter().rev().find(|&&c| c != 0) {
                if last == 1 {
                    points.push(v);
                }
            }
        }
        let mut class_of = vec![NONE; q.pow(4)];
        for (i, p) in points.iter().enumerate() {
            for s in 1..q {
                let scaled = scale(&field, p, s as Elem);
                class_of[encode(&scaled, q)] = i as u32;
            }
        }

        let theta = points.len();
        let mut space = Space {
            field,
            params,
            points,
            class_of,
            lines: Vec::new(),
            line_of_pair: Vec::new(),
            points_on_plane: Vec::new(),
            lines_through_point: Vec::new(),
            planes_through_line: Vec::new(),
            lines_in_plane: Vec::new(),
        };

        let mut seen = vec![false; theta * theta];
        let mut lines = Vec::with_capacity(params.beta);
        for a in 0..theta {
            for b in a + 1..theta {
                if seen[a * theta + b] {
                    continue;
                }
                let pts = space.span_points(a as u32, b as u32);
                for &x in &pts {
                    for &y in &pts {
                        seen[x as usize * theta + y as usize] = true;
                    }
                }
                lines.push(pts);
            }
        }
        lines.sort();
        let mut line_of_pair = vec![NONE; theta * theta];
        for (li, pts) in lines.iter().enumerate() {
            for &x in pts {
                for &y in pts {
                    if x != y {
                        line_of_pair[x as usize * theta + y as usize] = li as u32;
                    }
                }
            }
        }

        let mut points_on_plane = vec![Vec::new(); theta];
        for (pi, plane) in space.points.iter().enumerate() {
            for (xi, x) in space.points.iter().enumerate() {
                if dot(&space.field, plane, x) == 0 {
                    points_on_plane[pi].push(xi as u32);
                }
            }
        }
        let mut lines_through_point = vec![Vec::new(); theta];
        for (li, pts) in lines.iter().enumerate() {
            for &x in pts {
                lines_through_point[x as usize].push(li as u32);
            }
        }
        let mut planes_through_line = vec![Vec::new(); lines.len()];
        let mut lines_in_plane = vec![Vec::new(); theta];
        for (li, pts) in lines.iter().enumerate() {
            let (a, b) = (pts[0] as usize, pts[1] as usize);
            // planes through a line are the planes through two of its points;
            // the incidence is symmetric in point/plane indices
            for &pl in &points_on_plane[a] {
                if points_on_plane[pl as usize].binary_search(&(b as u32)).is_ok() {
                    planes_through_line[li].push(pl);
                    lines_in_plane[pl as usize].push(li as u32);
                }
            }
        }

        space.lines = lines;
        space.line_of_pair = line_of_pair;
        space.points_on_plane = points_on_plane;
        space.lines_through_point = lines_through_point;
        space.planes_through_line = planes_through_line;
        space.lines_in_plane = lines_in_plane;
        space
    }

    pub fn q(&self) -> usize {
        self.params.q
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_planes(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point_ids(&self) -> impl Iterator<Item = PointId> {
        (0..self.points.len() as u32).map(PointId)
    }

    pub fn plane_ids(&self) -> impl Iterator<Item = PlaneId> {
        (0..self.points.len() as u32).map(PlaneId)
    }

    pub fn line_ids(&self) -> impl Iterator<Item = LineId> {
        (0..self.lines.len() as u32).map(LineId)
    }

    pub fn point_coords(&self, p: PointId) -> Vec4 {
        self.points[p.0 as usize]
    }

    pub fn plane_coeffs(&self, pl: PlaneId) -> Vec4 {
        self.points[pl.0 as usize]
    }

    /// Projective class of any nonzero vector.
    pub fn point_of(&self, v: &Vec4) -> Option<PointId> {
        let c = self.class_of[encode(v, self.q())];
        (c != NONE).then_some(PointId(c))
    }

    pub fn plane_of(&self, v: &Vec4) -> Option<PlaneId> {
        self.point_of(v).map(|p| PlaneId(p.0))
    }

    pub fn line_points(&self, l: LineId) -> &[u32] {
        &self.lines[l.0 as usize]
    }

    pub fn points_on_plane(&self, pl: PlaneId) -> &[u32] {
        &self.points_on_plane[pl.0 as usize]
    }

    pub fn planes_through_point(&self, p: PointId) -> &[u32] {
        &self.points_on_plane[p.0 as usize]
    }

    pub fn lines_through_point(&self, p: PointId) -> &[u32] {
        &self.lines_through_point[p.0 as usize]
    }

    pub fn planes_through_line(&self, l: LineId) -> &[u32] {
        &self.planes_through_line[l.0 as usize]
    }

    pub fn lines_in_plane(&self, pl: PlaneId) -> &[u32] {
        &self.lines_in_plane[pl.0 as usize]
    }

    pub fn incident_point_plane(&self, p: PointId, pl: PlaneId) -> bool {
        dot(&self.field, &self.point_coords(p), &self.plane_coeffs(pl)) == 0
    }

    pub fn line_through(&self, a: PointId, b: PointId) -> Result<LineId> {
        if a == b {
            return Err(Error::CoincidentPoints);
        }
        Ok(self.line_of_pair_unchecked(a.0, b.0))
    }

    #[inline]
    pub(crate) fn line_of_pair_unchecked(&self, a: u32, b: u32) -> LineId {
        LineId(self.line_of_pair[a as usize * self.points.len() + b as usize])
    }

    pub fn line_in_plane(&self, l: LineId, pl: PlaneId) -> bool {
        self.line_points(l).iter().all(|&x| self.incident_point_plane(PointId(x), pl))
    }

    pub fn point_on_line(&self, p: PointId, l: LineId) -> bool {
        self.line_points(l).binary_search(&p.0).is_ok()
    }

    /// Common point of two distinct lines, if they meet.
    pub fn lines_meet(&self, l1: LineId, l2: LineId) -> Result<Option<PointId>> {
        if l1 == l2 {
            return Err(Error::SameLine);
        }
        let (a, b) = (self.line_points(l1), self.line_points(l2));
        Ok(a.iter().find(|x| b.binary_search(x).is_ok()).map(|&x| PointId(x)))
    }

    /// Common line of two distinct planes.
    pub fn planes_meet(&self, a: PlaneId, b: PlaneId) -> Result<LineId> {
        if a == b {
            return Err(Error::SameLine);
        }
        let pb = self.points_on_plane(b);
        let mut common = self
            .points_on_plane(a)
            .iter()
            .filter(|x| pb.binary_search(x).is_ok());
        let x = *common.next().expect("two planes meet in a line");
        let y = *common.next().expect("two planes meet in a line");
        Ok(self.line_of_pair_unchecked(x, y))
    }

    /// The line spanned by two independent vectors.
    pub fn line_spanned(&self, u: &Vec4, v: &Vec4) -> Result<LineId> {
        let a = self.point_of(u).ok_or(Error::CoincidentPoints)?;
        let b = self.point_of(v).ok_or(Error::CoincidentPoints)?;
        self.line_through(a, b)
    }

    /// Sorted point indices on the line through points `a` and `b`.
    fn span_points(&self, a: u32, b: u32) -> Vec<u32> {
        let f = &self.field;
        let (u, v) = (self.points[a as usize], self.points[b as usize]);
        let mut pts = vec![a];
        for c in f.elements() {
            let w = [0, 1, 2, 3].map(|i| f.add(v[i], f.mul(c, u[i])));
            pts.push(self.point_of(&w).expect("independent").0);
        }
        pts.sort_unstable();
        pts
    }
}

pub fn encode(v: &Vec4, q: usize) -> usize {
    v.iter().fold(0, |acc, &c| acc * q + c as usize)
}

pub fn decode(mut code: usize, q: usize) -> Vec4 {
    let mut v = [0; 4];
    for c in v.iter_mut().rev() {
        *c = (code % q) as Elem;
        code /= q;
    }
    v
}

pub fn dot(f: &FieldTable, a: &Vec4, b: &Vec4) -> Elem {
    (0..4).fold(0, |acc, i| f.add(acc, f.mul(a[i], b[i])))
}

pub fn scale(f: &FieldTable, v: &Vec4, s: Elem) -> Vec4 {
    v.map(|c| f.mul(c, s))
}

/// Rescales so that the rightmost nonzero coordinate is 1.
pub fn normalize(f: &FieldTable, v: &Vec4) -> Option<Vec4> {
    let last = *v.iter().rev().find(|&&c| c != 0)?;
    Some(scale(f, v, f.inv_nz(last)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_theta_and_beta() {
        for q in [2, 3, 4, 5] {
            let s = Space::new(q).unwrap();
            assert_eq!(s.num_points(), s.params.theta);
            assert_eq!(s.num_lines(), s.params.beta);
        }
        let s = Space::new(2).unwrap();
        assert_eq!((s.num_points(), s.num_planes(), s.num_lines()), (15, 15, 35));
        assert_eq!(Space::new(3).unwrap().num_lines(), 130);
        assert_eq!(Space::new(4).unwrap().num_lines(), 357);
    }

    #[test]
    fn enumeration_is_lexicographic_and_canonical() {
        let s = Space::new(3).unwrap();
        assert_eq!(s.point_coords(PointId(0)), [0, 0, 0, 1]);
        for w in s.points.windows(2) {
            assert!(w[0] < w[1]);
        }
        for p in &s.points {
            assert_eq!(*p.iter().rev().find(|&&c| c != 0).unwrap(), 1);
        }
        for w in s.lines.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn plane_point_incidence_examples() {
        let s = Space::new(2).unwrap();
        let p = s.point_of(&[1, 0, 0, 0]).unwrap();
        let pl = s.plane_of(&[0, 0, 0, 1]).unwrap();
        assert!(s.incident_point_plane(p, pl));
        let all = s.point_of(&[1, 1, 1, 1]).unwrap();
        assert!(s.incident_point_plane(all, PlaneId(all.0)));
    }

    #[test]
    fn line_through_gf2_example() {
        let s = Space::new(2).unwrap();
        let a = s.point_of(&[0, 0, 0, 1]).unwrap();
        let b = s.point_of(&[1, 0, 0, 0]).unwrap();
        let c = s.point_of(&[1, 0, 0, 1]).unwrap();
        let l = s.line_through(a, b).unwrap();
        let mut want = vec![a.0, b.0, c.0];
        want.sort();
        assert_eq!(s.line_points(l), want.as_slice());
        assert_eq!(s.line_through(b, a).unwrap(), l);
        assert_eq!(s.line_through(c, a).unwrap(), l);
        assert_eq!(s.line_through(a, a), Err(Error::CoincidentPoints));
    }

    #[test]
    fn distinct_lines_over_all_pairs_equal_beta() {
        for q in [2, 3, 4] {
            let s = Space::new(q).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for a in s.point_ids() {
                for b in s.point_ids() {
                    if a != b {
                        seen.insert(s.line_through(a, b).unwrap());
                    }
                }
            }
            assert_eq!(seen.len(), s.params.beta);
        }
    }

    #[test]
    fn regularity_of_incidences() {
        for q in [2, 3, 4] {
            let s = Space::new(q).unwrap();
            let n2 = q * q + q + 1;
            for pl in s.plane_ids() {
                assert_eq!(s.points_on_plane(pl).len(), n2);
                assert_eq!(s.lines_in_plane(pl).len(), n2);
            }
            for p in s.point_ids() {
                assert_eq!(s.planes_through_point(p).len(), n2);
                assert_eq!(s.lines_through_point(p).len(), n2);
            }
            for l in s.line_ids() {
                assert_eq!(s.line_points(l).len(), q + 1);
                assert_eq!(s.planes_through_line(l).len(), q + 1);
                for &pl in s.planes_through_line(l) {
                    assert!(s.line_in_plane(l, PlaneId(pl)));
                }
            }
        }
    }

    #[test]
    fn two_planes_meet_in_one_line_and_lines_share_at_most_one_point() {
        let s = Space::new(3).unwrap();
        for a in s.plane_ids() {
            for b in s.plane_ids() {
                if a < b {
                    let l = s.planes_meet(a, b).unwrap();
                    assert!(s.line_in_plane(l, a) && s.line_in_plane(l, b));
                }
            }
        }
        for l1 in s.line_ids() {
            for l2 in s.line_ids() {
                if l1 < l2 {
                    let common = s
                        .line_points(l1)
                        .iter()
                        .filter(|x| s.line_points(l2).contains(x))
                        .count();
                    assert!(common <= 1);
                    assert_eq!(s.lines_meet(l1, l2).unwrap().is_some(), common == 1);
                }
            }
        }
    }

    #[test]
    fn coplanar_lines_meet_and_skew_lines_exist() {
        let s = Space::new(2).unwrap();
        for pl in s.plane_ids() {
            let ls = s.lines_in_plane(pl);
            for &a in ls {
                for &b in ls {
                    if a != b {
                        assert!(s.lines_meet(LineId(a), LineId(b)).unwrap().is_some());
                    }
                }
            }
        }
        let l0 = LineId(0);
        let skew = s
            .line_ids()
            .find(|&l| l != l0 && s.lines_meet(l0, l).unwrap().is_none())
            .expect("PG(3,2) has skew lines");
        assert!(s.lines_meet(l0, skew).unwrap().is_none());
        assert_eq!(s.lines_meet(l0, l0), Err(Error::SameLine));
    }

    #[test]
    fn collinearity_of_line_points() {
        let s = Space::new(4).unwrap();
        let f = &s.field;
        for l in s.line_ids() {
            let pts = s.line_points(l);
            let (u, v) = (s.point_coords(PointId(pts[0])), s.point_coords(PointId(pts[1])));
            for &x in &pts[2..] {
                let w = s.point_coords(PointId(x));
                let hit = f.elements().any(|a| {
                    f.elements().any(|b| {
                        (0..4).all(|i| f.add(f.mul(a, u[i]), f.mul(b, v[i])) == w[i])
                    })
                });
                assert!(hit);
            }
        }
    }
}
