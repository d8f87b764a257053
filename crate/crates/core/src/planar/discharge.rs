//! Face charges, the two redistribution rules and the face-configuration scan.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use super::{trace_faces, weak_adjacency, FaceSet, RotationSystem, WeakChain};
use crate::graph::Multigraph;
use crate::{Error, Result};

/// An exact charge, stored in eighths.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);

    pub const fn from_eighths(x: i64) -> Self {
        Charge(x)
    }

    pub const fn eighths(self) -> i64 {
        self.0
    }

    /// Reduced numerator and denominator.
    pub fn ratio(self) -> (i64, i64) {
        let mut num = self.0;
        let mut den = 8;
        while den > 1 && num % 2 == 0 {
            num /= 2;
            den /= 2;
        }
        (num, den)
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio() {
            (num, 1) => write!(f, "{num}"),
            (num, den) => write!(f, "{num}/{den}"),
        }
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, o: Charge) -> Charge {
        Charge(self.0 + o.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, o: Charge) -> Charge {
        Charge(self.0 - o.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, o: Charge) {
        self.0 += o.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, o: Charge) {
        self.0 -= o.0;
    }
}

impl Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(iter: I) -> Charge {
        iter.fold(Charge::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Charge> for Charge {
    fn sum<I: Iterator<Item = &'a Charge>>(iter: I) -> Charge {
        iter.copied().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// 3⁺-face to each 2-face on a chain, 1/4.
    R1,
    /// 5⁺-face to a face one 2-face away, 1/4.
    R2_1,
    /// 4-face spanning a cycle with a single edge somewhere, 1/8.
    R2_2,
    /// 4-face to a `T(2,2,2)` face, 1/8.
    R2_3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::R1 => "R1",
            Rule::R2_1 => "R2.1",
            Rule::R2_2 => "R2.2",
            Rule::R2_3 => "R2.3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    pub amount: Charge,
    pub rule: Rule,
}

/// Shape of the subgraph induced on a face's vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceShape {
    /// Three vertices, every pair doubled.
    T222,
    /// Four vertices inducing a 4-cycle skeleton; multiplicities around the
    /// cycle, least under rotation and reflection.
    Quad([usize; 4]),
    Other,
}

impl FaceShape {
    fn of(mult: &[Vec<usize>], vertices: &[usize]) -> FaceShape {
        match *vertices {
            [a, b, c] => {
                if mult[a][b] == 2 && mult[a][c] == 2 && mult[b][c] == 2 {
                    FaceShape::T222
                } else {
                    FaceShape::Other
                }
            }
            [_, _, _, _] => {
                let nbrs = |x: usize| vertices.iter().filter(|&&y| y != x && mult[x][y] > 0).count();
                if vertices.iter().any(|&x| nbrs(x) != 2) {
                    return FaceShape::Other;
                }
                // walk the 4-cycle from the first vertex
                let mut order = vec![vertices[0]];
                while order.len() < 4 {
                    let last = *order.last().unwrap();
                    let next = vertices
                        .iter()
                        .copied()
                        .find(|&y| y != last && mult[last][y] > 0 && !order.contains(&y))
                        .unwrap();
                    order.push(next);
                }
                let ring: [usize; 4] = core::array::from_fn(|i| mult[order[i]][order[(i + 1) % 4]]);
                FaceShape::Quad(least_dihedral(ring))
            }
            _ => FaceShape::Other,
        }
    }

    pub fn is_quad(self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self == FaceShape::Quad(least_dihedral([a, b, c, d]))
    }
}

fn least_dihedral(r: [usize; 4]) -> [usize; 4] {
    let mut best = r;
    for s in 0..4 {
        let rot: [usize; 4] = core::array::from_fn(|i| r[(i + s) % 4]);
        let refl: [usize; 4] = core::array::from_fn(|i| r[(s + 4 - i) % 4]);
        best = best.min(rot).min(refl);
    }
    best
}

/// Full record of the charge redistribution on one embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DischargeTranscript {
    pub faces: FaceSet,
    pub shapes: Vec<FaceShape>,
    pub chains: Vec<WeakChain>,
    pub ch0: Vec<Charge>,
    pub ch1: Vec<Charge>,
    pub ch2: Vec<Charge>,
    pub transfers: Vec<Transfer>,
    /// Directed pairs of 3⁺-faces sharing an edge that would trigger a second
    /// stage rule if ordinary adjacency counted; kept for review, never applied.
    pub unit_candidates: Vec<(usize, usize)>,
    /// Faces whose final charge is negative.
    pub negative: Vec<usize>,
}

impl DischargeTranscript {
    pub fn total0(&self) -> Charge {
        self.ch0.iter().sum()
    }

    pub fn total1(&self) -> Charge {
        self.ch1.iter().sum()
    }

    pub fn total2(&self) -> Charge {
        self.ch2.iter().sum()
    }
}

fn spherical_faces(g: &Multigraph, rot: &RotationSystem) -> Result<FaceSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = trace_faces(g, rot)?;
    if g.vertex_count() + faces.len() != g.edge_count() + 2 {
        return Err(Error::NonPlanar);
    }
    Ok(faces)
}

/// Charges every face `d(f) - 5/2` and applies R1 then R2, each computed from
/// the face structure alone.
pub fn discharge(g: &Multigraph, rot: &RotationSystem) -> Result<DischargeTranscript> {
    let faces = spherical_faces(g, rot)?;
    let mult = g.multiplicity_matrix();
    let shapes: Vec<FaceShape> = faces.faces().iter().map(|f| FaceShape::of(&mult, f.vertices())).collect();
    let chains = weak_adjacency(&faces);
    let deg = |f: usize| faces.face(f).degree();
    let ch0: Vec<Charge> = faces.faces().iter().map(|f| Charge(8 * f.degree() as i64 - 20)).collect();

    let mut transfers = Vec::new();
    for c in &chains {
        for &mid in &c.intermediates {
            transfers.push(Transfer { from: c.from, to: mid, amount: Charge(2), rule: Rule::R1 });
        }
    }
    let stage1 = transfers.len();
    let mut unit_candidates = Vec::new();
    for c in &chains {
        let fired = second_stage(deg(c.from), shapes[c.from], deg(c.to), shapes[c.to]);
        if c.t == 2 {
            for (rule, amount) in fired {
                transfers.push(Transfer { from: c.from, to: c.to, amount: Charge(amount), rule });
            }
        } else if c.t == 1 && !fired.is_empty() {
            unit_candidates.push((c.from, c.to));
        }
    }

    let apply = |base: &[Charge], ts: &[Transfer]| {
        let mut ch = base.to_vec();
        for t in ts {
            ch[t.from] -= t.amount;
            ch[t.to] += t.amount;
        }
        ch
    };
    let ch1 = apply(&ch0, &transfers[..stage1]);
    let ch2 = apply(&ch1, &transfers[stage1..]);
    let negative = (0..ch2.len()).filter(|&i| ch2[i].is_negative()).collect();
    Ok(DischargeTranscript { faces, shapes, chains, ch0, ch1, ch2, transfers, unit_candidates, negative })
}

fn second_stage(d1: usize, s1: FaceShape, d2: usize, s2: FaceShape) -> Vec<(Rule, i64)> {
    let mut out = Vec::new();
    if d1 >= 5 {
        out.push((Rule::R2_1, 2));
    }
    if d1 == 4 {
        if let FaceShape::Quad(r) = s1 {
            if r[0] == 1 {
                out.push((Rule::R2_2, 1));
            }
        }
        if d2 == 3 && s2 == FaceShape::T222 {
            out.push((Rule::R2_3, 1));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceCondition {
    /// A `T(2,2,2)` face must reach at least two 4⁺-faces.
    T222TwoLargeFaces,
    /// A `Q(2,3,3,3)` face must reach a 5⁺-face through one 2-face.
    Q2333FivePlus,
    /// A `Q(2,3,2,3)` or `Q(2,2,3,3)` face next to a 3-face must reach a
    /// 5⁺-face through one 2-face.
    Q2323FivePlus,
    /// A `Q(2,2,2,3)` face reaches at most two `T(2,2,2)` 3-faces through one 2-face.
    Q2223AtMostTwoT222,
}

impl fmt::Display for FaceCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FaceCondition::T222TwoLargeFaces => "T222 face reaches fewer than two 4+-faces",
            FaceCondition::Q2333FivePlus => "Q2333 face reaches no 5+-face through a 2-face",
            FaceCondition::Q2323FivePlus => "Q2323/Q2233 face beside a 3-face reaches no 5+-face through a 2-face",
            FaceCondition::Q2223AtMostTwoT222 => "Q2223 face reaches more than two T222 3-faces through 2-faces",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigViolation {
    pub face: usize,
    pub condition: FaceCondition,
    /// Faces counted by the condition.
    pub related: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceConfigReport {
    pub shapes: Vec<FaceShape>,
    /// Faces whose shape made some condition applicable.
    pub checked: Vec<usize>,
    pub violations: Vec<ConfigViolation>,
}

impl FaceConfigReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four face conditions on every face.
pub fn face_config_scan(g: &Multigraph, rot: &RotationSystem) -> Result<FaceConfigReport> {
    let faces = spherical_faces(g, rot)?;
    let mult = g.multiplicity_matrix();
    let shapes: Vec<FaceShape> = faces.faces().iter().map(|f| FaceShape::of(&mult, f.vertices())).collect();
    let chains = weak_adjacency(&faces);
    let deg = |f: usize| faces.face(f).degree();
    let reach = |f: usize, pred: &dyn Fn(&WeakChain) -> bool| {
        let mut out: Vec<usize> = chains.iter().filter(|c| c.from == f && pred(c)).map(|c| c.to).collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    let mut checked = Vec::new();
    let mut violations = Vec::new();
    for f in 0..faces.len() {
        let s = shapes[f];
        let mut flag = |condition, related| violations.push(ConfigViolation { face: f, condition, related });
        if s == FaceShape::T222 {
            checked.push(f);
            let large = reach(f, &|c| deg(c.to) >= 4);
            if large.len() < 2 {
                flag(FaceCondition::T222TwoLargeFaces, large);
            }
        } else if s.is_quad(2, 3, 3, 3) {
            checked.push(f);
            let big = reach(f, &|c| c.t == 2 && deg(c.to) >= 5);
            if big.is_empty() {
                flag(FaceCondition::Q2333FivePlus, big);
            }
        } else if s.is_quad(2, 3, 2, 3) || s.is_quad(2, 2, 3, 3) {
            checked.push(f);
            let triangles = reach(f, &|c| deg(c.to) == 3);
            if !triangles.is_empty() && reach(f, &|c| c.t == 2 && deg(c.to) >= 5).is_empty() {
                flag(FaceCondition::Q2323FivePlus, triangles);
            }
        } else if s.is_quad(2, 2, 2, 3) {
            checked.push(f);
            let t222 = reach(f, &|c| c.t == 2 && deg(c.to) == 3 && shapes[c.to] == FaceShape::T222);
            if t222.len() > 2 {
                flag(FaceCondition::Q2223AtMostTwoT222, t222);
            }
        }
    }
    Ok(FaceConfigReport { shapes, checked, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cycle, make_named, NamedPattern};
    use crate::planar::{embed, Embedding};
    use alloc::string::ToString;

    fn embedded(g: &Multigraph) -> RotationSystem {
        match embed(g).unwrap() {
            Embedding::Planar(r) => r,
            Embedding::NonPlanar(_) => panic!("expected a planar graph"),
        }
    }

    /// The 5-vertex graph with a doubled triangle `x y z` and two outer
    /// vertices `u ~ x, y` and `v ~ x, z`, drawn with the doubled triangle
    /// innermost.
    pub(crate) fn two_path_graph() -> (Multigraph, RotationSystem) {
        let (x, y, z, u, v) = (0, 1, 2, 3, 4);
        let g = Multigraph::from_edges(
            5,
            &[(x, y), (x, y), (x, z), (x, z), (y, z), (y, z), (u, y), (u, x), (v, z), (v, x)],
        )
        .unwrap();
        let rot = RotationSystem::new(
            &g,
            vec![vec![9, 7, 1, 0, 2, 3], vec![4, 0, 1, 6, 5], vec![8, 3, 2, 4, 5], vec![7, 6], vec![9, 8]],
        )
        .unwrap();
        (g, rot)
    }

    #[test]
    fn charge_display() {
        assert_eq!(Charge::from_eighths(-20).to_string(), "-5/2");
        assert_eq!(Charge::from_eighths(16).to_string(), "2");
        assert_eq!(Charge::from_eighths(1).to_string(), "1/8");
        assert_eq!(Charge::from_eighths(-6).to_string(), "-3/4");
    }

    #[test]
    fn cycle_transcript() {
        let g = cycle(4, 5).unwrap();
        let t = discharge(&g, &embedded(&g)).unwrap();
        assert_eq!(t.total0(), Charge::from_eighths(-40));
        assert_eq!(t.total2(), t.total0());
        for (i, f) in t.faces.faces().iter().enumerate() {
            match f.degree() {
                2 => assert_eq!(t.ch1[i], Charge::ZERO),
                4 => assert_eq!(t.ch1[i], Charge::from_eighths(-20)),
                d => panic!("unexpected face degree {d}"),
            }
            assert_eq!(t.ch1[i], t.ch2[i]);
        }
        assert!(t.transfers.iter().all(|x| x.rule == Rule::R1));
        assert_eq!(t.transfers.len(), 32);
        assert_eq!(t.negative.len(), 2);
        assert!(t.unit_candidates.is_empty());
    }

    #[test]
    fn parallel_class_has_no_transfers() {
        let g = make_named(&NamedPattern::AK2(5));
        let t = discharge(&g, &embedded(&g)).unwrap();
        assert!(t.transfers.is_empty());
        assert_eq!(t.total2(), Charge::from_eighths(-20));
    }

    #[test]
    fn wheel_total_is_minus_one() {
        let g = make_named(&NamedPattern::W1);
        let t = discharge(&g, &embedded(&g)).unwrap();
        assert_eq!(t.total0(), Charge::from_eighths(-8));
        assert_eq!(t.total1(), t.total0());
        assert_eq!(t.total2(), t.total0());
    }

    #[test]
    fn two_path_graph_violates_first_condition() {
        let (g, rot) = two_path_graph();
        let t = discharge(&g, &rot).unwrap();
        assert_eq!(t.faces.len(), 7);
        let report = face_config_scan(&g, &rot).unwrap();
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.condition, FaceCondition::T222TwoLargeFaces);
        assert_eq!(t.faces.face(v.face).vertices(), &[0, 1, 2]);
        assert_eq!(v.related.len(), 1);
        assert_eq!(t.faces.face(v.related[0]).degree(), 5);
        // the outer 5-face reaches the doubled triangle through one 2-face
        assert!(t.transfers.iter().any(|x| x.rule == Rule::R2_1 && x.to == v.face));
    }

    #[test]
    fn scans_pass_vacuously() {
        for g in [cycle(4, 5).unwrap(), make_named(&NamedPattern::AK2(5))] {
            let report = face_config_scan(&g, &embedded(&g)).unwrap();
            assert!(report.passes());
            assert!(report.checked.is_empty());
        }
    }

    #[test]
    fn quad_shapes() {
        let q = make_named(&NamedPattern::Q(3, 2, 3, 2));
        let mult = q.multiplicity_matrix();
        let s = FaceShape::of(&mult, &[0, 1, 2, 3]);
        assert!(s.is_quad(2, 3, 2, 3));
        assert!(!s.is_quad(2, 2, 3, 3));
        let k4 = make_named(&NamedPattern::DoubleK4);
        assert_eq!(FaceShape::of(&k4.multiplicity_matrix(), &[0, 1, 2, 3]), FaceShape::Other);
        assert_eq!(FaceShape::of(&k4.multiplicity_matrix(), &[0, 1, 2]), FaceShape::T222);
    }

    #[test]
    fn non_spherical_rotation_is_rejected() {
        let g = make_named(&NamedPattern::DoubleK4);
        let mut rots = embedded(&g).rotations().to_vec();
        rots[0].swap(0, 3);
        let rot = RotationSystem::new(&g, rots).unwrap();
        assert_eq!(discharge(&g, &rot), Err(Error::NonPlanar));
    }
}
