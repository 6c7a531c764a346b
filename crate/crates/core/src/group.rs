//! Projectivities of PG(3,q) fixing the twisted cubic, and the finite
//! groups they generate.
//!
//! Points are row vectors and transform as `x ↦ x·M`. With this convention
//! the parametric matrix family below sends `P(t)` to `P((at+b)/(ct+d))`.
//! [`compose`] follows function composition: `compose(g, h)` applies `h`
//! first, so its matrix is `H·G`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldTable};
use crate::space::{LineId, PlaneId, PointId, Space, Vec4};

pub type Matrix = [Elem; 16];

/// A projectivity stored as its canonical matrix: the first nonzero entry
/// in row-major order is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Projectivity(pub Matrix);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Critical,
    Full,
    Subgroup,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Critical => "critical",
            GroupKind::Full => "full",
            GroupKind::Subgroup => "subgroup",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupModel {
    pub q: usize,
    pub kind: GroupKind,
    pub generators: Vec<Projectivity>,
    /// Sorted canonical elements.
    pub elements: Vec<Projectivity>,
}

impl GroupModel {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &Projectivity) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }
}

pub fn mat_mul(f: &FieldTable, a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [0; 16];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0;
            for k in 0..4 {
                s = f.add(s, f.mul(a[i * 4 + k], b[k * 4 + j]));
            }
            out[i * 4 + j] = s;
        }
    }
    out
}

/// Inverse by Gauss-Jordan elimination.
pub fn mat_inverse(f: &FieldTable, m: &Matrix) -> Result<Matrix> {
    let mut a = *m;
    let mut inv = identity_matrix();
    for col in 0..4 {
        let pivot = (col..4).find(|&r| a[r * 4 + col] != 0).ok_or(Error::SingularMatrix)?;
        for j in 0..4 {
            a.swap(col * 4 + j, pivot * 4 + j);
            inv.swap(col * 4 + j, pivot * 4 + j);
        }
        let s = f.inv_nz(a[col * 4 + col]);
        for j in 0..4 {
            a[col * 4 + j] = f.mul(s, a[col * 4 + j]);
            inv[col * 4 + j] = f.mul(s, inv[col * 4 + j]);
        }
        for r in (0..4).filter(|&r| r != col) {
            let k = a[r * 4 + col];
            if k == 0 {
                continue;
            }
            for j in 0..4 {
                a[r * 4 + j] = f.sub(a[r * 4 + j], f.mul(k, a[col * 4 + j]));
                inv[r * 4 + j] = f.sub(inv[r * 4 + j], f.mul(k, inv[col * 4 + j]));
            }
        }
    }
    Ok(inv)
}

pub fn identity_matrix() -> Matrix {
    let mut m = [0; 16];
    for i in 0..4 {
        m[i * 5] = 1;
    }
    m
}

fn canonical(f: &FieldTable, m: &Matrix) -> Matrix {
    let lead = *m.iter().find(|&&x| x != 0).expect("nonzero matrix");
    let s = f.inv_nz(lead);
    m.map(|x| f.mul(s, x))
}

impl Projectivity {
    pub fn identity() -> Self {
        Projectivity(identity_matrix())
    }

    pub fn from_matrix(f: &FieldTable, m: &Matrix) -> Result<Self> {
        mat_inverse(f, m)?;
        Ok(Projectivity(canonical(f, m)))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn inverse(&self, f: &FieldTable) -> Projectivity {
        Projectivity(canonical(f, &mat_inverse(f, &self.0).expect("stored matrices are invertible")))
    }

    /// Row vector times matrix.
    pub fn apply(&self, f: &FieldTable, x: &Vec4) -> Vec4 {
        let m = &self.0;
        let mut out = [0; 4];
        for (j, o) in out.iter_mut().enumerate() {
            for i in 0..4 {
                *o = f.add(*o, f.mul(x[i], m[i * 4 + j]));
            }
        }
        out
    }
}

/// `compose(g, h)` acts as `g ∘ h`: first `h`, then `g`.
pub fn compose(f: &FieldTable, g: &Projectivity, h: &Projectivity) -> Projectivity {
    Projectivity(canonical(f, &mat_mul(f, &h.0, &g.0)))
}

pub fn act_point(space: &Space, g: &Projectivity, p: PointId) -> PointId {
    let y = g.apply(&space.field, &space.point_coords(p));
    space.point_of(&y).expect("invertible image")
}

/// Planes transform by the inverse transpose: `c ↦ c·(M⁻¹)ᵀ`.
pub fn act_plane(space: &Space, g: &Projectivity, pl: PlaneId) -> PlaneId {
    let f = &space.field;
    let inv = mat_inverse(f, &g.0).expect("invertible");
    act_plane_with_inverse(space, &inv, pl)
}

fn act_plane_with_inverse(space: &Space, inv: &Matrix, pl: PlaneId) -> PlaneId {
    let f = &space.field;
    let c = space.plane_coeffs(pl);
    let mut out = [0; 4];
    for (j, o) in out.iter_mut().enumerate() {
        for k in 0..4 {
            *o = f.add(*o, f.mul(c[k], inv[j * 4 + k]));
        }
    }
    space.plane_of(&out).expect("invertible image")
}

pub fn act_line(space: &Space, g: &Projectivity, l: LineId) -> LineId {
    let pts = space.line_points(l);
    let a = act_point(space, g, PointId(pts[0]));
    let b = act_point(space, g, PointId(pts[1]));
    space.line_of_pair_unchecked(a.0, b.0)
}

/// The matrix of the parametric family for `(a, b, c, d)`, coefficients
/// reduced in the field's characteristic.
pub fn critical_matrix(f: &FieldTable, a: Elem, b: Elem, c: Elem, d: Elem) -> Matrix {
    let m = |x: Elem, y: Elem| f.mul(x, y);
    let m3 = |x: Elem, y: Elem, z: Elem| f.mul(f.mul(x, y), z);
    let k = |n: i64, x: Elem| f.mul(f.from_int(n), x);
    let (a2, b2, c2, d2) = (m(a, a), m(b, b), m(c, c), m(d, d));
    [
        m(a2, a),
        m(a2, c),
        m(a, c2),
        m(c2, c),
        k(3, m(a2, b)),
        f.add(m(a2, d), k(2, m3(a, b, c))),
        f.add(m(b, c2), k(2, m3(a, c, d))),
        k(3, m(c2, d)),
        k(3, m(a, b2)),
        f.add(m(b2, c), k(2, m3(a, b, d))),
        f.add(m(a, d2), k(2, m3(b, c, d))),
        k(3, m(c, d2)),
        m(b2, b),
        m(b2, d),
        m(b, d2),
        m(d2, d),
    ]
}

fn critical_set(f: &FieldTable) -> BTreeSet<Projectivity> {
    let mut set = BTreeSet::new();
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                for d in f.elements() {
                    if f.sub(f.mul(a, d), f.mul(b, c)) != 0 {
                        let m = critical_matrix(f, a, b, c, d);
                        set.insert(Projectivity(canonical(f, &m)));
                    }
                }
            }
        }
    }
    set
}

pub fn critical_group(f: &FieldTable) -> GroupModel {
    let elements: Vec<Projectivity> = critical_set(f).into_iter().collect();
    let q = f.order();
    let mut gens = Vec::new();
    // t ↦ t + 1, t ↦ g·t and t ↦ 1/t generate PGL(2,q)
    for (a, b, c, d) in [(1, 1, 0, 1), (f.primitive_element(), 0, 0, 1), (0, 1, 1, 0)] {
        gens.push(Projectivity(canonical(f, &critical_matrix(f, a, b, c, d))));
    }
    gens.sort();
    gens.dedup();
    GroupModel { q, kind: GroupKind::Critical, generators: gens, elements }
}

/// Exhaustive test whether `g` belongs to the parametric family.
pub fn is_critical_form(f: &FieldTable, g: &Projectivity) -> bool {
    critical_set(f).contains(g)
}

/// The additional generator families that extend the critical group to
/// the full stabilizer for q = 2, 3, 4.
pub fn extra_generators(f: &FieldTable) -> Result<Vec<Projectivity>> {
    let q = f.order();
    let mut out = BTreeSet::new();
    match q {
        2 => {
            for e in 0..2 {
                for h in 0..2 {
                    for (fv, g) in [(0, 1), (1, 0)] {
                        let m = [1, 0, 0, 0, e, fv, g, h, e, g, fv, h, 0, 0, 0, 1];
                        out.insert(Projectivity::from_matrix(f, &m)?);
                    }
                }
            }
        }
        3 => {
            for e in f.elements() {
                for fv in f.elements() {
                    for g in f.elements() {
                        let f1 = f.add(fv, 1);
                        if e == f1 || e == f.neg(f1) || g == f1 {
                            continue;
                        }
                        let last = f.sub(f1, g);
                        let m = [1, 0, 0, 0, e, f1, e, g, fv, e, f1, e, 0, 0, 0, last];
                        out.insert(Projectivity::from_matrix(f, &m)?);
                    }
                }
            }
        }
        4 => {
            let m = [1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1];
            out.insert(Projectivity::from_matrix(f, &m)?);
        }
        _ => return Err(Error::NoExtraGenerators(q)),
    }
    Ok(out.into_iter().collect())
}

/// Smallest set containing the identity and closed under composition with
/// the generators.
pub fn closure(f: &FieldTable, generators: &[Projectivity], kind: GroupKind) -> GroupModel {
    let id = Projectivity::identity();
    let mut seen: HashSet<Projectivity> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = compose(f, g, &x);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Projectivity> = seen.into_iter().collect();
    elements.sort();
    let mut gens = generators.to_vec();
    gens.sort();
    gens.dedup();
    GroupModel { q: f.order(), kind, generators: gens, elements }
}

pub fn full_group(f: &FieldTable) -> Result<GroupModel> {
    let crit = critical_group(f);
    let mut gens = crit.generators.clone();
    gens.extend(extra_generators(f)?);
    Ok(closure(f, &gens, GroupKind::Full))
}

pub fn element_order(f: &FieldTable, g: &Projectivity) -> usize {
    let id = Projectivity::identity();
    let mut x = *g;
    let mut n = 1;
    while x != id {
        x = compose(f, g, &x);
        n += 1;
    }
    n
}

pub fn order_spectrum(f: &FieldTable, group: &GroupModel) -> BTreeMap<usize, usize> {
    let mut spectrum = BTreeMap::new();
    for g in &group.elements {
        *spectrum.entry(element_order(f, g)).or_default() += 1;
    }
    spectrum
}

/// Permutations induced on points, planes and lines, one per element.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub points: Vec<Vec<u32>>,
    pub planes: Vec<Vec<u32>>,
    pub lines: Vec<Vec<u32>>,
}

impl GroupAction {
    pub fn new(space: &Space, group: &GroupModel) -> Self {
        Self::for_elements(space, &group.elements)
    }

    pub fn for_elements(space: &Space, elements: &[Projectivity]) -> Self {
        let f = &space.field;
        let mut points = Vec::with_capacity(elements.len());
        let mut planes = Vec::with_capacity(elements.len());
        let mut lines = Vec::with_capacity(elements.len());
        for g in elements {
            let pp: Vec<u32> = space.point_ids().map(|p| act_point(space, g, p).0).collect();
            let inv = mat_inverse(f, &g.0).expect("invertible");
            let pl: Vec<u32> = space
                .plane_ids()
                .map(|x| act_plane_with_inverse(space, &inv, x).0)
                .collect();
            let ll: Vec<u32> = space
                .line_ids()
                .map(|l| {
                    let pts = space.line_points(l);
                    space
                        .line_of_pair_unchecked(pp[pts[0] as usize], pp[pts[1] as usize])
                        .0
                })
                .collect();
            points.push(pp);
            planes.push(pl);
            lines.push(ll);
        }
        GroupAction { points, planes, lines }
    }

    /// Restriction to a subset of elements, by index.
    pub fn restrict(&self, indices: &[usize]) -> GroupAction {
        GroupAction {
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            planes: indices.iter().map(|&i| self.planes[i].clone()).collect(),
            lines: indices.iter().map(|&i| self.lines[i].clone()).collect(),
        }
    }
}

/// Multiplication table of a group in element-index space.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    pub n: usize,
    pub identity: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl CayleyTable {
    pub fn new(f: &FieldTable, group: &GroupModel) -> Self {
        let n = group.order();
        let index: HashMap<Projectivity, usize> =
            group.elements.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let mut mul = vec![0u16; n * n];
        for (i, g) in group.elements.iter().enumerate() {
            for (j, h) in group.elements.iter().enumerate() {
                mul[i * n + j] = index[&compose(f, g, h)] as u16;
            }
        }
        let identity = index[&Projectivity::identity()];
        let mut inv = vec![0u16; n];
        for i in 0..n {
            inv[i] = (0..n).find(|&j| mul[i * n + j] as usize == identity).unwrap() as u16;
        }
        CayleyTable { n, identity, mul, inv }
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn order_of(&self, i: usize) -> usize {
        let (mut x, mut n) = (i, 1);
        while x != self.identity {
            x = self.mul(i, x);
            n += 1;
        }
        n
    }

    /// Subgroup generated by `gens`, or `None` once it exceeds `limit` elements.
    pub fn generated(&self, gens: &[usize], limit: usize) -> Option<Vec<usize>> {
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            k += 1;
            for &g in gens {
                let y = self.mul(g, x);
                if !inside[y] {
                    if members.len() == limit {
                        return None;
                    }
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Some(members)
    }
}

pub const CENSUS_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupCensus {
    pub target_order: usize,
    pub target_spectrum: BTreeMap<usize, usize>,
    /// Each subgroup as sorted indices into the ambient group's elements.
    pub subgroups: Vec<Vec<usize>>,
    /// Conjugacy classes as sorted indices into `subgroups`.
    pub classes: Vec<Vec<usize>>,
    pub critical: Vec<bool>,
}

impl SubgroupCensus {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, subgroup: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&subgroup)).unwrap()
    }
}

/// All subgroups of `ambient` with the order and order spectrum of
/// `target`, found among the 1- and 2-generated subgroups.
pub fn subgroup_census(f: &FieldTable, ambient: &GroupModel, target: &GroupModel) -> Result<SubgroupCensus> {
    let n = ambient.order();
    if n > CENSUS_LIMIT {
        return Err(Error::CensusTooLarge { order: n, limit: CENSUS_LIMIT });
    }
    let table = CayleyTable::new(f, ambient);
    let target_order = target.order();
    let target_spectrum = order_spectrum(f, target);
    let orders: Vec<usize> = (0..n).map(|i| table.order_of(i)).collect();
    let useful: Vec<usize> = (0..n).filter(|&i| target_spectrum.contains_key(&orders[i])).collect();

    let spectrum_of = |members: &[usize]| {
        let mut s = BTreeMap::new();
        for &i in members {
            *s.entry(orders[i]).or_insert(0usize) += 1;
        }
        s
    };
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (a, &x) in useful.iter().enumerate() {
        for &y in &useful[a..] {
            if let Some(h) = table.generated(&[x, y], target_order) {
                if h.len() == target_order && !found.contains(&h) && spectrum_of(&h) == target_spectrum {
                    found.insert(h);
                }
            }
        }
    }
    let subgroups: Vec<Vec<usize>> = found.into_iter().collect();
    let position: HashMap<&Vec<usize>, usize> =
        subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let mut class_id = vec![usize::MAX; subgroups.len()];
    let mut classes = Vec::new();
    for s in 0..subgroups.len() {
        if class_id[s] != usize::MAX {
            continue;
        }
        let mut class = BTreeSet::new();
        for g in 0..n {
            let gi = table.inv(g);
            let mut conj: Vec<usize> = subgroups[s]
                .iter()
                .map(|&x| table.mul(table.mul(g, x), gi))
                .collect();
            conj.sort_unstable();
            let c = *position.get(&conj).expect("conjugate of a listed subgroup is listed");
            class.insert(c);
        }
        for &c in &class {
            class_id[c] = classes.len();
        }
        classes.push(class.into_iter().collect());
    }

    let crit = critical_set(f);
    let critical = subgroups
        .iter()
        .map(|s| s.iter().all(|&i| crit.contains(&ambient.elements[i])))
        .collect();
    Ok(SubgroupCensus { target_order, target_spectrum, subgroups, classes, critical })
}

/// Elements of a listed subgroup as a group model.
pub fn subgroup_model(ambient: &GroupModel, members: &[usize]) -> GroupModel {
    GroupModel {
        q: ambient.q,
        kind: GroupKind::Subgroup,
        generators: Vec::new(),
        elements: members.iter().map(|&i| ambient.elements[i]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::build_cubic;
    use crate::field::make_field;

    fn spectrum(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn critical_orders() {
        for (q, n) in [(2, 6), (3, 24), (4, 60), (5, 120), (7, 336)] {
            let f = make_field(q).unwrap();
            assert_eq!(critical_group(&f).order(), n);
        }
    }

    #[test]
    fn identity_is_in_the_family() {
        let f = make_field(3).unwrap();
        let id = Projectivity(canonical(&f, &critical_matrix(&f, 1, 0, 0, 1)));
        assert_eq!(id, Projectivity::identity());
    }

    #[test]
    fn full_orders() {
        for (q, n) in [(2, 48), (3, 192), (4, 120)] {
            let f = make_field(q).unwrap();
            assert_eq!(full_group(&f).unwrap().order(), n);
        }
        let f = make_field(5).unwrap();
        assert_eq!(extra_generators(&f), Err(Error::NoExtraGenerators(5)));
    }

    #[test]
    fn closure_of_critical_generators_is_the_family() {
        for q in [2, 3, 4, 5, 8] {
            let f = make_field(q).unwrap();
            let g = critical_group(&f);
            let c = closure(&f, &g.generators, GroupKind::Critical);
            assert_eq!(c.elements, g.elements);
        }
    }

    #[test]
    fn extra_generator_families() {
        let f = make_field(2).unwrap();
        let e = extra_generators(&f).unwrap();
        assert_eq!(e.len(), 8);
        assert!(e.contains(&Projectivity::identity()));

        let m = build_cubic(3).unwrap();
        let e = extra_generators(&m.space.field).unwrap();
        assert_eq!(e.len(), 8);
        for g in &e {
            for &p in &m.cubic_points {
                assert_eq!(act_point(&m.space, g, PointId(p)).0, p);
            }
            let mut img: Vec<u32> =
                m.frame_set.iter().map(|&p| act_point(&m.space, g, PointId(p)).0).collect();
            img.sort();
            assert_eq!(img, m.frame_set);
        }

        let m = build_cubic(4).unwrap();
        let f = &m.space.field;
        let e = extra_generators(f).unwrap();
        assert_eq!(e.len(), 1);
        let xi = f.primitive_element();
        let xi2 = f.mul(xi, xi);
        let img = |t: usize| act_point(&m.space, &e[0], PointId(m.cubic_points[t])).0;
        assert_eq!(img(xi as usize), m.cubic_points[xi2 as usize]);
        assert_eq!(img(xi2 as usize), m.cubic_points[xi as usize]);
        for t in [0, 1, 4] {
            assert_eq!(img(t), m.cubic_points[t]);
        }
        assert!(!is_critical_form(f, &e[0]));
        assert!(is_critical_form(f, &Projectivity::identity()));
    }

    #[test]
    fn parametric_action_on_cubic() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let m = build_cubic(q).unwrap();
            let f = &m.space.field;
            for a in f.elements() {
                for b in f.elements() {
                    for c in f.elements() {
                        for d in f.elements() {
                            if f.sub(f.mul(a, d), f.mul(b, c)) == 0 {
                                continue;
                            }
                            let g = Projectivity::from_matrix(f, &critical_matrix(f, a, b, c, d)).unwrap();
                            for t in 0..=q {
                                // image parameter (at+b)/(ct+d) computed projectively on (t : 1)
                                let (num, den) = if t == q {
                                    (a, c)
                                } else {
                                    let te = t as Elem;
                                    (f.add(f.mul(a, te), b), f.add(f.mul(c, te), d))
                                };
                                let s = if den == 0 { q } else { f.div(num, den).unwrap() as usize };
                                assert_eq!(
                                    act_point(&m.space, &g, PointId(m.cubic_points[t])).0,
                                    m.cubic_points[s]
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn groups_fix_the_cubic() {
        for q in [2, 3, 4] {
            let m = build_cubic(q).unwrap();
            let g = full_group(&m.space.field).unwrap();
            let mut c = m.cubic_points.clone();
            c.sort();
            for x in &g.elements {
                let mut img: Vec<u32> =
                    c.iter().map(|&p| act_point(&m.space, x, PointId(p)).0).collect();
                img.sort();
                assert_eq!(img, c);
            }
        }
    }

    #[test]
    fn action_is_compatible_with_composition() {
        let s = Space::new(2).unwrap();
        let f = &s.field;
        let g = full_group(f).unwrap();
        for a in &g.elements {
            for b in &g.elements {
                let ab = compose(f, a, b);
                for p in s.point_ids() {
                    assert_eq!(act_point(&s, &ab, p), act_point(&s, a, act_point(&s, b, p)));
                }
                for pl in s.plane_ids() {
                    assert_eq!(act_plane(&s, &ab, pl), act_plane(&s, a, act_plane(&s, b, pl)));
                }
            }
        }
    }

    #[test]
    fn incidence_is_preserved() {
        let s = Space::new(2).unwrap();
        let g = full_group(&s.field).unwrap();
        for x in &g.elements {
            for p in s.point_ids() {
                for pl in s.plane_ids() {
                    assert_eq!(
                        s.incident_point_plane(p, pl),
                        s.incident_point_plane(act_point(&s, x, p), act_plane(&s, x, pl))
                    );
                }
            }
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let s = Space::new(3).unwrap();
        let id = Projectivity::identity();
        assert!(s.point_ids().all(|p| act_point(&s, &id, p) == p));
        assert!(s.plane_ids().all(|p| act_plane(&s, &id, p) == p));
        assert!(s.line_ids().all(|l| act_line(&s, &id, l) == l));
    }

    #[test]
    fn inverse_and_singular() {
        let f = make_field(5).unwrap();
        let g = critical_group(&f);
        for x in &g.elements {
            assert_eq!(compose(&f, x, &x.inverse(&f)), Projectivity::identity());
        }
        let row = [1, 2, 3, 4].map(|n| f.from_int(n));
        let twice = row.map(|x| f.mul(f.from_int(2), x));
        let mut singular = identity_matrix();
        singular[..4].copy_from_slice(&row);
        singular[4..8].copy_from_slice(&twice);
        assert_eq!(Projectivity::from_matrix(&f, &singular), Err(Error::SingularMatrix));
    }

    // brute-force element orders of a permutation group given by generators
    fn perm_spectrum(gens: &[Vec<usize>]) -> BTreeMap<usize, usize> {
        let n = gens[0].len();
        let id: Vec<usize> = (0..n).collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = vec![id.clone()];
        while let Some(x) = queue.pop() {
            for g in gens {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        let mut spectrum = BTreeMap::new();
        for p in &seen {
            let mut k = 1;
            let mut x = p.clone();
            while x != id {
                x = x.iter().map(|&i| p[i]).collect();
                k += 1;
            }
            *spectrum.entry(k).or_insert(0) += 1;
        }
        spectrum
    }

    #[test]
    fn order_spectra() {
        let f = make_field(2).unwrap();
        assert_eq!(order_spectrum(&f, &critical_group(&f)), spectrum(&[(1, 1), (2, 3), (3, 2)]));
        let s4 = perm_spectrum(&[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]);
        let f = make_field(3).unwrap();
        assert_eq!(order_spectrum(&f, &critical_group(&f)), s4);
        let a5 = perm_spectrum(&[vec![1, 2, 0, 3, 4], vec![0, 1, 3, 4, 2], vec![1, 0, 3, 2, 4]]);
        let f = make_field(4).unwrap();
        assert_eq!(order_spectrum(&f, &critical_group(&f)), a5);
        assert_eq!(a5, spectrum(&[(1, 1), (2, 15), (3, 20), (5, 24)]));
    }

    #[test]
    fn census_counts() {
        for (q, sizes) in [(2, vec![4, 4]), (3, vec![8, 8, 4, 4]), (4, vec![1])] {
            let f = make_field(q).unwrap();
            let full = full_group(&f).unwrap();
            let crit = critical_group(&f);
            let c = subgroup_census(&f, &full, &crit).unwrap();
            let mut got = c.class_sizes();
            got.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(got, sizes);
            assert_eq!(c.critical.iter().filter(|&&x| x).count(), 1);
        }
    }

    #[test]
    fn census_rejects_large_groups() {
        let f = make_field(7).unwrap();
        let g = critical_group(&f);
        assert!(matches!(subgroup_census(&f, &g, &g), Err(Error::CensusTooLarge { .. })));
    }
}
