//! Exact face weights, the gen/surf functions and the cyl table.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::catalog::{classify_exceptional, ExceptionalClass};
use crate::map::{EmbeddedGraph, FaceRecord, Ring};

pub type Rational = Ratio<i128>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n as i128, d as i128)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum WeightError {
    #[error("s(l) is defined only for l >= 5 (got {0})")]
    ShortFace(usize),
    #[error("t = {t} is smaller than t0 + t1 = {0}", .t0 + .t1)]
    BadSurfParams { t: usize, t0: usize, t1: usize },
    #[error("face {0} is not omnipresent")]
    NotOmnipresent(usize),
    #[error("cyl fixpoint did not converge within {0} passes")]
    NoFixpoint(usize),
    #[error("cyl table needs a grid bound of at least 7 (got {0})")]
    GridTooSmall(usize),
}

/// ε = 2/4113.
pub fn epsilon() -> Rational {
    ratio(2, 4113)
}

/// The face-length weight function s(l), l ≥ 5.
pub fn s_value(l: usize) -> Result<Rational, WeightError> {
    Ok(match l {
        0..=4 => return Err(WeightError::ShortFace(l)),
        5 => ratio(4, 4113),
        6 => ratio(72, 4113),
        7 => ratio(540, 4113),
        8 => ratio(2184, 4113),
        _ => int(l as i64 - 8),
    })
}

fn s(l: usize) -> Rational {
    s_value(l).expect("argument at least 5")
}

/// w(f): s(|f|) for open 2-cell faces of length at least 5, |f| otherwise.
pub fn face_weight(f: &FaceRecord) -> Rational {
    if f.open_2cell && f.length >= 5 {
        s(f.length)
    } else {
        int(f.length as i64)
    }
}

/// w(G, R): the sum of w(f) over internal faces.
pub fn graph_weight(g: &EmbeddedGraph) -> Rational {
    g.faces().iter().filter(|f| !f.is_ring_face()).map(face_weight).sum()
}

/// el(f) = (Σ_{h∈S_f} |h|) − |f|.
pub fn elasticity(face_len: usize, cover_lens: &[usize]) -> Rational {
    int(cover_lens.iter().sum::<usize>() as i64 - face_len as i64)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SurfParams {
    pub g: usize,
    pub t: usize,
    pub t0: usize,
    pub t1: usize,
}

impl SurfParams {
    pub fn new(g: usize, t: usize, t0: usize, t1: usize) -> Result<Self, WeightError> {
        if t < t0 + t1 {
            return Err(WeightError::BadSurfParams { t, t0, t1 });
        }
        Ok(SurfParams { g, t, t0, t1 })
    }
}

fn gen_i(g: usize, t: usize, t0: usize, t1: usize) -> i64 {
    120 * g as i64 + 48 * t as i64 - 4 * t1 as i64 - 5 * t0 as i64 - 120
}

fn surf_i(g: usize, t: usize, t0: usize, t1: usize) -> i64 {
    debug_assert!(t >= t0 + t1);
    if g == 0 && t == 2 && t0 + t1 == 2 {
        8 - 4 * t1 as i64 - 5 * t0 as i64
    } else if g == 0 && t <= 2 && t0 + t1 < 2 {
        6 * t as i64 - 4 * t1 as i64 - 5 * t0 as i64 - 6
    } else {
        gen_i(g, t, t0, t1)
    }
}

/// (gen, surf) at the given parameters.
pub fn gen_surf(p: SurfParams) -> (Rational, Rational) {
    (int(gen_i(p.g, p.t, p.t0, p.t1)), int(surf_i(p.g, p.t, p.t0, p.t1)))
}

pub fn surf(g: usize, t: usize, t0: usize, t1: usize) -> Result<Rational, WeightError> {
    Ok(gen_surf(SurfParams::new(g, t, t0, t1)?).1)
}

/// One failed or checked inequality instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub clause: &'static str,
    pub params: Vec<i64>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub ok: bool,
}

#[derive(Clone, Default, Debug)]
pub struct CheckReport {
    /// Instances checked per clause, in clause order.
    pub counts: Vec<(&'static str, usize)>,
    pub failures: Vec<Check>,
}

impl CheckReport {
    fn record(&mut self, clause: &'static str, params: Vec<i64>, lhs: Rational, rhs: Rational, ok: bool) {
        match self.counts.iter_mut().find(|c| c.0 == clause) {
            Some(c) => c.1 += 1,
            None => self.counts.push((clause, 1)),
        }
        if !ok {
            self.failures.push(Check { clause, params, lhs, rhs, ok });
        }
    }
    pub fn total(&self) -> usize {
        self.counts.iter().map(|c| c.1).sum()
    }
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Valid (t0, t1) pairs for a given t.
fn splits(t: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=t).flat_map(move |t0| (0..=t - t0).map(move |t1| (t0, t1)))
}

/// Exhaustively checks the four surf inequalities on g ≤ gmax, t ≤ tmax.
/// With `drop_a_hypothesis`, clause (a) is also tested where its
/// hypothesis fails (used as a negative control).
pub fn check_surfineq(gmax: usize, tmax: usize, drop_a_hypothesis: bool) -> CheckReport {
    let mut rep = CheckReport::default();
    let p = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    // (a)
    for g in 0..=gmax {
        for t in 2..=tmax {
            for (t0, t1) in splits(t) {
                let hyp = !(g == 0 && t <= 2) || t0 + t1 < t;
                if !hyp && !drop_a_hypothesis {
                    continue;
                }
                for t0p in 0..=t0 {
                    for t1p in 0..=t1 {
                        if t0p + t1p + 2 < t0 + t1 || t0p + t1p > t - 1 {
                            continue;
                        }
                        let lhs = surf_i(g, t - 1, t0p, t1p);
                        let rhs = surf_i(g, t, t0, t1);
                        let clause = if hyp { "a" } else { "a-unhypothesized" };
                        rep.record(clause, p(&[g, t, t0, t1, t0p, t1p]), int(lhs), int(rhs), lhs < rhs);
                    }
                }
            }
        }
    }
    // (b)
    for g in 0..=gmax {
        for gp in 0..g {
            for t in 0..=tmax {
                if gp == 0 && t < 2 {
                    continue;
                }
                for (t0, t1) in splits(t) {
                    let lhs = surf_i(gp, t, t0, t1);
                    let rhs = surf_i(g, t, t0, t1) - 120 * (g - gp) as i64 + 32;
                    rep.record("b", p(&[g, gp, t, t0, t1]), int(lhs), int(rhs), lhs <= rhs);
                }
            }
        }
    }
    // (c)
    for g in 0..=gmax {
        for t in 0..=tmax {
            for (t0, t1) in splits(t) {
                let whole = surf_i(g, t, t0, t1);
                for gp in 0..=g {
                    let gpp = g - gp;
                    for tp in 0..=t {
                        let tpp = t - tp;
                        if !(gpp > 0 || tpp >= 1) || !(gp > 0 || tp >= 2) {
                            continue;
                        }
                        for t0p in 0..=t0 {
                            for t1p in 0..=t1 {
                                let (t0pp, t1pp) = (t0 - t0p, t1 - t1p);
                                if t0p + t1p > tp || t0pp + t1pp > tpp {
                                    continue;
                                }
                                let delta = if gpp == 0 && tpp == 1 { 16 } else { 56 };
                                let lhs = surf_i(gp, tp, t0p, t1p) + surf_i(gpp, tpp, t0pp, t1pp);
                                let rhs = whole - delta;
                                rep.record(
                                    "c",
                                    p(&[g, t, t0, t1, gp, tp, t0p, t1p]),
                                    int(lhs),
                                    int(rhs),
                                    lhs <= rhs,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    // (d)
    for g in 2..=gmax {
        for t in 0..=tmax {
            for (t0, t1) in splits(t) {
                let lhs = surf_i(g - 2, t, t0, t1);
                let rhs = surf_i(g, t, t0, t1) - 124;
                rep.record("d", p(&[g, t, t0, t1]), int(lhs), int(rhs), lhs <= rhs);
            }
        }
    }
    rep
}

/// Checks s(x)+s(y) ≤ s(x+y) ≤ s(x)+y, monotonicity, and
/// s(y)−s(x) > 5s(5) for y > x ≥ 5, over 5 ≤ x, y and x+y ≤ lmax.
pub fn check_s_properties(lmax: usize) -> CheckReport {
    check_s_properties_with(lmax, &|l| s(l))
}

/// Same as [`check_s_properties`] for an arbitrary candidate s.
pub fn check_s_properties_with(lmax: usize, s: &dyn Fn(usize) -> Rational) -> CheckReport {
    let mut rep = CheckReport::default();
    let five_s5 = s(5) * int(5);
    for x in 5..=lmax {
        for y in 5..=lmax.saturating_sub(x) {
            let (sx, sy, sxy) = (s(x), s(y), s(x + y));
            let p = vec![x as i64, y as i64];
            rep.record("superadditive", p.clone(), sx + sy, sxy, sx + sy <= sxy);
            let rhs = sx + int(y as i64);
            rep.record("subadditive", p, sxy, rhs, sxy <= rhs);
        }
        for y in x + 1..=lmax {
            let (sx, sy) = (s(x), s(y));
            let p = vec![x as i64, y as i64];
            rep.record("nondecreasing", p.clone(), sx, sy, sx <= sy);
            rep.record("gap", p, five_s5, sy - sx, sy - sx > five_s5);
        }
    }
    rep
}

/// Minimal solution of the cyl constraints on the grid 0..=xmax.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CylTable {
    pub xmax: usize,
    vals: Vec<Rational>,
    /// Number of passes until nothing changed (the last pass is the certificate).
    pub passes: usize,
}

impl CylTable {
    pub fn get(&self, x: usize, y: usize) -> Rational {
        self.vals[x * (self.xmax + 1) + y]
    }
    fn set(&mut self, x: usize, y: usize, v: Rational) {
        let n = self.xmax + 1;
        self.vals[x * n + y] = v;
        self.vals[y * n + x] = v;
    }
    /// A table with the given entries, used for controls and loading.
    pub fn from_values(xmax: usize, vals: Vec<Rational>) -> CylTable {
        assert_eq!(vals.len(), (xmax + 1) * (xmax + 1));
        CylTable { xmax, vals, passes: 0 }
    }
    pub fn values(&self) -> &[Rational] {
        &self.vals
    }
}

/// The lower bound on cyl(x, y) implied by every constraint stated in
/// terms of the ordered pair (x, y).
fn cyl_lower(t: &CylTable, x: usize, y: usize) -> Rational {
    let mut lb = Rational::zero();
    let mut raise = |v: Rational| {
        if v > lb {
            lb = v;
        }
    };
    if x > 0 {
        raise(t.get(0, y) + int(x as i64 + 13));
    }
    if x > 1 && y > 1 {
        raise(t.get(1, x) + t.get(1, y) + int(19));
    }
    for yp in 0..y {
        raise(t.get(x, yp) + s(y - yp + 8));
    }
    if !(x == 0 && y == 0) {
        // cyl(0,0) is pinned to 0, which this bound would contradict.
        raise(s(x + y + 11));
    }
    if x >= 4 {
        raise(int(886));
    }
    if x == 7 && y == 7 {
        raise(t.get(6, 7) * int(2));
    }
    let s5 = s(5);
    if x <= 4 && (5..=6).contains(&y) {
        let a = (ratio(2, 3) + epsilon() * int(52)) * int((x + y) as i64);
        raise(a + int(20) * (int(40) + int(5) * t.get(4, 4) / s5 + int(692)) / int(3));
    }
    if x <= 7 && y == 7 {
        let a = ratio(3, 2) * int((x + 7) as i64);
        raise(a + int(20) * (int(60) + int(5) * t.get(6, 6) / s5 + int(692)) / int(3));
    }
    if x >= 5 && y >= 5 {
        raise(t.get(4, x) + t.get(4, y) + t.get(4, 4));
    }
    lb
}

/// Iterates all constraints from the zero table until a full pass changes nothing.
pub fn build_cyl_table(xmax: usize) -> Result<CylTable, WeightError> {
    const CAP: usize = 1000;
    if xmax < 7 {
        return Err(WeightError::GridTooSmall(xmax));
    }
    let n = xmax + 1;
    let mut t = CylTable { xmax, vals: vec![Rational::zero(); n * n], passes: 0 };
    for pass in 1..=CAP {
        let mut changed = false;
        for x in 0..n {
            for y in x..n {
                let want = cyl_lower(&t, x, y).max(cyl_lower(&t, y, x));
                if want > t.get(x, y) {
                    t.set(x, y, want);
                    changed = true;
                }
            }
        }
        if !changed {
            t.passes = pass;
            return Ok(t);
        }
    }
    Err(WeightError::NoFixpoint(CAP))
}

/// Re-checks every cyl constraint literally on a finished table, including
/// the s(x+y+11) bound at (0,0).
pub fn verify_cyl_table(t: &CylTable) -> CheckReport {
    let mut rep = CheckReport::default();
    let n = t.xmax + 1;
    let s5 = s(5);
    let zero = Rational::zero();
    let z = t.get(0, 0);
    rep.record("cyl(0,0)=0", vec![0, 0], z, zero, z == zero);
    for x in 0..n {
        for y in 0..n {
            let v = t.get(x, y);
            let p = vec![x as i64, y as i64];
            rep.record("symmetric", p.clone(), v, t.get(y, x), v == t.get(y, x));
            if x > 0 {
                let r = t.get(0, y) + int(x as i64 + 13);
                rep.record("x>0", p.clone(), v, r, v >= r);
            }
            if x > 1 && y > 1 {
                let r = t.get(1, x) + t.get(1, y) + int(19);
                rep.record("x,y>1", p.clone(), v, r, v >= r);
            }
            for yp in 0..y {
                let r = t.get(x, yp) + s(y - yp + 8);
                let mut q = p.clone();
                q.push(yp as i64);
                rep.record("y'<y", q.clone(), v, r, v >= r);
                let r2 = t.get(x, yp) + Rational::one();
                rep.record("y'<y step", q, r, r2, r >= r2);
            }
            let r = s(x + y + 11);
            rep.record("s(x+y+11)", p.clone(), v, r, v >= r);
            if x >= 4 {
                rep.record("x>=4", p.clone(), v, int(886), v >= int(886));
            }
            if x <= 4 && (5..=6).contains(&y) {
                let r = (ratio(2, 3) + epsilon() * int(52)) * int((x + y) as i64)
                    + int(20) * (int(40) + int(5) * t.get(4, 4) / s5 + int(692)) / int(3);
                rep.record("x<=4,5<=y<=6", p.clone(), v, r, v >= r);
            }
            if x <= 7 && y == 7 {
                let r = ratio(3, 2) * int((x + 7) as i64)
                    + int(20) * (int(60) + int(5) * t.get(6, 6) / s5 + int(692)) / int(3);
                rep.record("x<=7,y=7", p.clone(), v, r, v >= r);
            }
            if x >= 5 && y >= 5 {
                let r = t.get(4, x) + t.get(4, y) + t.get(4, 4);
                rep.record("x,y>=5", p, v, r, v >= r);
            }
        }
    }
    let l = t.get(6, 7) * int(2);
    let r = t.get(7, 7);
    rep.record("2cyl(6,7)<=cyl(7,7)", vec![6, 7], l, r, l <= r);
    rep
}

/// η = 1867 + 67·cyl(7,7)/s(5).
pub fn eta_value(t: &CylTable) -> Rational {
    int(1867) + int(67) * t.get(7, 7) / s(5)
}

/// c(f′) of an omnipresent face: a rational or −∞.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Contribution {
    Finite(Rational),
    NegInfinity,
}

/// Whether face `f` is omnipresent: not open 2-cell, and every boundary walk
/// is a lone vertex ring or a cycle cutting off a disk with exactly one ring.
pub fn is_omnipresent(g: &EmbeddedGraph, f: usize) -> bool {
    let face = &g.faces()[f];
    if face.open_2cell || face.is_ring_face() {
        return false;
    }
    let ring_of = g.ring_of_vertex();
    let mut seen_comp = BTreeSet::new();
    for w in &face.walks {
        if let Some(v) = w.vertex {
            if ring_of[v].is_none() {
                return false;
            }
            seen_comp.insert(g.component_of(v));
            continue;
        }
        let vs: Vec<usize> = w.states.iter().map(|s| g.tail(s.dart)).collect();
        let mut sorted = vs.clone();
        sorted.sort();
        sorted.dedup();
        if vs.len() < 3 || sorted.len() != vs.len() {
            return false;
        }
        let c = g.component_of(vs[0]);
        if !seen_comp.insert(c) || g.component_genus(vs[0]) != 0 {
            return false;
        }
        // The disk on the far side holds the rest of the component; its other
        // faces must not be glued to anything and exactly one ring lives there.
        for (fi, other) in g.faces().iter().enumerate() {
            if fi == f {
                continue;
            }
            let touches = other.walks.iter().any(|ow| walk_component(g, ow) == Some(c));
            if touches && other.walks.len() > 1 {
                return false;
            }
        }
        let rings_here: BTreeSet<usize> = (0..g.n_vertices())
            .filter(|&v| g.component_of(v) == c)
            .filter_map(|v| ring_of[v])
            .collect();
        if rings_here.len() != 1 {
            return false;
        }
    }
    true
}

fn walk_component(g: &EmbeddedGraph, w: &crate::map::Walk) -> Option<usize> {
    match (w.vertex, w.states.first()) {
        (Some(v), _) => Some(g.component_of(v)),
        (None, Some(s)) => Some(g.component_of(g.tail(s.dart))),
        _ => None,
    }
}

/// The contribution of an omnipresent face `f` given its elasticity.
pub fn omnipresent_contribution(g: &EmbeddedGraph, f: usize, el: Rational) -> Result<Contribution, WeightError> {
    if !is_omnipresent(g, f) {
        return Err(WeightError::NotOmnipresent(f));
    }
    let ring_edges = g.ring_edges();
    let mut non_ring = Vec::new();
    for c in 0..g.n_components() {
        let vs: Vec<usize> = (0..g.n_vertices()).filter(|&v| g.component_of(v) == c).collect();
        let ring_only = {
            let ring_of = g.ring_of_vertex();
            vs.iter().all(|&v| ring_of[v].is_some())
                && (0..g.n_edges()).all(|e| g.component_of(g.endpoints(e)[0]) != c || ring_edges[e])
        };
        if !ring_only {
            non_ring.push(c);
        }
    }
    if non_ring.len() >= 2 {
        return Ok(Contribution::Finite(Rational::one()));
    }
    let s5 = s(5) * int(5);
    let class = match non_ring.first() {
        None => ExceptionalClass::E0,
        Some(&c) => {
            let comp = g.component_subgraph(c);
            match comp.rings() {
                [Ring::Facial(r)] if r.len() >= 5 => classify_exceptional(&comp).unwrap_or(ExceptionalClass::None),
                _ => ExceptionalClass::None,
            }
        }
    };
    Ok(match class {
        ExceptionalClass::E0 | ExceptionalClass::E1 | ExceptionalClass::E2 | ExceptionalClass::E3 => {
            Contribution::NegInfinity
        }
        ExceptionalClass::E4 | ExceptionalClass::E5 => Contribution::Finite(int(5) - el - s5),
        ExceptionalClass::None => Contribution::Finite(int(5) - el + s5),
    })
}

/// surf(f) = surf(g(Π_f), a, a0, a1).  Every face built here is a sphere
/// with holes, so g(Π_f) = 0.
pub fn face_surf(g: &EmbeddedGraph, f: usize) -> Rational {
    let face = &g.faces()[f];
    let a = face.walks.len();
    let (mut a0, mut a1) = (0, 0);
    for w in &face.walks {
        if let Some(v) = w.vertex {
            for r in g.rings() {
                if let Ring::Vertex { v: rv, weak, .. } = r {
                    if *rv == v {
                        if *weak {
                            a0 += 1;
                        } else {
                            a1 += 1;
                        }
                    }
                }
            }
        }
    }
    int(surf_i(0, a, a0, a1))
}

/// One bound on w(G, {R}) for a critical disk graph of girth 5.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightBullet {
    /// Whether the bullet's hypothesis holds for this graph.
    pub applies: bool,
    /// The bound, if its s-argument is at least 5.
    pub bound: Option<Rational>,
    /// Vacuous when it does not apply; false if it applies without a bound.
    pub ok: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiskWeightCheck {
    pub weight: Rational,
    pub class: ExceptionalClass,
    pub bullets: [WeightBullet; 4],
}

impl DiskWeightCheck {
    pub fn ok(&self) -> bool {
        self.bullets.iter().all(|b| b.ok)
    }
}

/// The four weight bounds for a disk graph with ring length l:
/// s(l−3)+s(5); s(l−4)+2s(5) unless E1; s(l−5)+5s(5) unless very
/// exceptional; s(l−5)−5s(5) unless exceptional.
pub fn check_disk_weight(g: &EmbeddedGraph) -> Result<DiskWeightCheck, crate::catalog::CatalogError> {
    let class = classify_exceptional(g)?;
    let l = g.rings()[0].size();
    let w = graph_weight(g);
    let s5 = s(5);
    let bound = |k: usize, extra: Rational| l.checked_sub(k).and_then(|x| s_value(x).ok()).map(|v| v + extra);
    let rows = [
        (true, bound(3, s5)),
        (class != ExceptionalClass::E1, bound(4, s5 * int(2))),
        (!class.is_very_exceptional(), bound(5, s5 * int(5))),
        (!class.is_exceptional(), bound(5, -(s5 * int(5)))),
    ];
    let bullets = rows.map(|(applies, bound)| WeightBullet {
        applies,
        ok: !applies || bound.map_or(false, |b| w <= b),
        bound,
    });
    Ok(DiskWeightCheck { weight: w, class, bullets })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_bullets_on_exceptional_graphs() {
        use crate::catalog::make_exceptional;
        for (class, l) in [(ExceptionalClass::E1, 8), (ExceptionalClass::E2, 9), (ExceptionalClass::E4, 10), (ExceptionalClass::E5, 10)] {
            let g = make_exceptional(class, l, None).unwrap();
            let c = check_disk_weight(&g).unwrap();
            assert_eq!(c.class, class);
            assert!(c.ok(), "{:?} {}: {:?}", class, l, c);
            // the last bullet never applies to an exceptional graph
            assert!(!c.bullets[3].applies);
        }
        // l = 8: the first bound is s(5) + s(5)
        let e1 = check_disk_weight(&make_exceptional(ExceptionalClass::E1, 8, None).unwrap()).unwrap();
        assert!(!e1.bullets[1].applies);
        assert_eq!(e1.bullets[0].bound, Some(s(5) + s(5)));
    }

    #[test]
    fn bullet_without_bound_fails() {
        // A bare 5-cycle disk: no internal faces, the single bullet that
        // applies with l-3 = 2 has no s-value.
        let g = crate::map::from_neighbor_rotations(
            &[vec![1, 4], vec![2, 0], vec![3, 1], vec![4, 2], vec![0, 3]],
            vec![Ring::Facial(vec![0, 1, 2, 3, 4])],
        )
        .unwrap();
        let c = check_disk_weight(&g).unwrap();
        assert_eq!(c.bullets[0].bound, None);
        assert!(!c.ok());
    }

    #[test]
    fn s_small_values() {
        assert_eq!(s_value(5).unwrap(), ratio(4, 4113));
        assert_eq!(s_value(8).unwrap(), ratio(2184, 4113));
        assert_eq!(s_value(9).unwrap(), int(1));
        assert_eq!(s_value(4), Err(WeightError::ShortFace(4)));
    }

    #[test]
    fn surf_spot_values() {
        assert_eq!(surf(0, 2, 0, 2).unwrap(), int(0));
        assert_eq!(surf(0, 2, 0, 1).unwrap(), int(2));
        assert_eq!(gen_surf(SurfParams::new(1, 1, 0, 0).unwrap()).0, int(48));
        assert!(SurfParams::new(0, 1, 1, 1).is_err());
    }

    #[test]
    fn surf_matches_gen_away_from_the_plane() {
        for g in 0..5 {
            for t in 0..9 {
                for (t0, t1) in splits(t) {
                    let (gn, sf) = gen_surf(SurfParams { g, t, t0, t1 });
                    if g > 0 || t > 3 {
                        assert_eq!(gn, sf);
                    }
                    if g == 0 && t == 2 {
                        assert!(sf <= gn + int(32));
                    }
                }
            }
        }
    }

    #[test]
    fn surfineq_holds_and_control_fails() {
        assert!(check_surfineq(3, 5, false).ok());
        let ctl = check_surfineq(1, 3, true);
        assert!(ctl.failures.iter().all(|c| c.clause == "a-unhypothesized"));
        assert!(!ctl.failures.is_empty());
    }

    #[test]
    fn clause_d_boundary() {
        let lhs = surf(0, 0, 0, 0).unwrap();
        let rhs = surf(2, 0, 0, 0).unwrap() - int(124);
        assert_eq!((lhs, rhs), (int(-6), int(-4)));
    }

    #[test]
    fn s_properties_and_altered_s() {
        assert!(check_s_properties(60).ok());
        let bad = |l: usize| if l == 7 { ratio(5000, 4113) } else { s(l) };
        assert!(!check_s_properties_with(40, &bad).ok());
    }

    #[test]
    fn cyl_small_entries() {
        let t = build_cyl_table(12).unwrap();
        assert_eq!(t.get(0, 0), int(0));
        assert_eq!(t.get(1, 0), int(14));
        assert_eq!(t.get(1, 1), int(28));
        assert!(t.get(4, 4) >= int(886));
        let rep = verify_cyl_table(&t);
        // Only the s(11) bound at (0,0) can fail: it contradicts cyl(0,0) = 0.
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].clause, "s(x+y+11)");
        assert_eq!(rep.failures[0].params, vec![0, 0]);
    }

    #[test]
    fn eta_degenerate() {
        let t = CylTable::from_values(7, vec![Rational::zero(); 64]);
        assert_eq!(eta_value(&t), int(1867));
    }
}
