//! Finite quaternion sets T, T′, O, I and the point groups built from them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{FieldScalar, Quaternion};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::transform::{reflection_from_root, OrthoElement};

/// Anything closure can multiply.
pub trait GroupElement: Clone + Ord + Send + Sync {
    fn identity() -> Self;
    fn op(&self, other: &Self) -> Self;
    /// Rejects generators that cannot lie in a finite group.
    fn validate(&self) -> Result<()> {
        Ok(())
    }
}

impl GroupElement for Quaternion {
    fn identity() -> Self {
        Quaternion::one()
    }

    fn op(&self, other: &Self) -> Self {
        self * other
    }

    fn validate(&self) -> Result<()> {
        if self.norm().is_one() {
            Ok(())
        } else {
            Err(Error::Domain(format!("generator {self} is not a unit quaternion")))
        }
    }
}

impl GroupElement for OrthoElement {
    fn identity() -> Self {
        OrthoElement::identity()
    }

    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
}

/// Smallest set containing the identity and `gens` that is closed under the
/// group law, in canonical (sorted) order.
///
/// Each breadth-first layer multiplies the new elements by every generator;
/// the products of one layer are computed under `strategy`.
pub fn closure<G: GroupElement>(gens: &[G], cap: usize, strategy: Strategy) -> Result<Vec<G>> {
    for g in gens {
        g.validate()?;
    }
    let mut seen = BTreeSet::from([G::identity()]);
    let mut frontier = vec![G::identity()];
    while !frontier.is_empty() {
        let products = par::flat_map(strategy, &frontier, |x| gens.iter().map(|g| x.op(g)).collect());
        let mut next = Vec::new();
        for p in products {
            if seen.insert(p.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                next.push(p);
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Checks closure, identity and inverses of an explicit finite set.
pub fn is_group<G: GroupElement>(elements: &[G], inverse: impl Fn(&G) -> G + Sync, strategy: Strategy) -> bool {
    let set: BTreeSet<&G> = elements.iter().collect();
    set.contains(&G::identity())
        && par::all(strategy, elements, |a| {
            set.contains(&inverse(a)) && elements.iter().all(|b| set.contains(&a.op(b)))
        })
}

/// A duplicate-free, sorted set of quaternions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionSet {
    pub name: Option<String>,
    elements: Vec<Quaternion>,
}

impl QuaternionSet {
    pub fn new(name: Option<&str>, elements: impl IntoIterator<Item = Quaternion>) -> Self {
        let set: BTreeSet<Quaternion> = elements.into_iter().collect();
        Self {
            name: name.map(str::to_string),
            elements: set.into_iter().collect(),
        }
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, q: &Quaternion) -> bool {
        self.elements.binary_search(q).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Quaternion> {
        self.elements.iter()
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &Self, name: Option<&str>) -> Self {
        Self::new(name, self.iter().filter(|q| !other.contains(q)).cloned())
    }

    pub fn union(&self, other: &Self, name: Option<&str>) -> Self {
        Self::new(name, self.iter().chain(other.iter()).cloned())
    }

    /// Every product `ab` with `a ∈ self`, `b ∈ other` lies in `target`.
    pub fn products_within(&self, other: &Self, target: &Self) -> bool {
        self.iter().all(|a| other.iter().all(|b| target.contains(&(a * b))))
    }

    pub fn is_group(&self) -> bool {
        is_group(&self.elements, Quaternion::conj, Strategy::default())
    }
}

/// `T = {±1, ±e1, ±e2, ±e3, ½(±1 ± e1 ± e2 ± e3)}`.
pub fn binary_tetrahedral() -> QuaternionSet {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for s in [1, -1] {
            let mut c = [0i64; 4];
            c[i] = s;
            out.push(Quaternion::from_ints(c[0], c[1], c[2], c[3]));
        }
    }
    let h = FieldScalar::from_frac(1, 2);
    for mask in 0..16u32 {
        let c: [FieldScalar; 4] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -&h } else { h.clone() });
        out.push(Quaternion::from_array(c));
    }
    QuaternionSet::new(Some("T"), out)
}

/// `T′ = {(±eᵢ ± eⱼ)/√2}` over all pairs of the four units `1, e1, e2, e3`.
pub fn tprime() -> QuaternionSet {
    let s = FieldScalar::inv_sqrt2();
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c: [FieldScalar; 4] = Default::default();
                c[i] = &s * &FieldScalar::from_int(si);
                c[j] = &s * &FieldScalar::from_int(sj);
                out.push(Quaternion::from_array(c));
            }
        }
    }
    QuaternionSet::new(Some("T'"), out)
}

/// `O = T ∪ T′`.
pub fn binary_octahedral() -> QuaternionSet {
    binary_tetrahedral().union(&tprime(), Some("O"))
}

/// `p = ½(e1 + τe2 + σe3)` and `q = ½(1 + e1 + e2 + e3)`.
///
/// On their own these close to a group of order 24: `Re(pq) = −½`, so `pq`
/// has order 3. Adjoining `e1` brings in all of `T`, and `⟨p, T⟩` is the
/// binary icosahedral group.
pub fn icosahedral_generators() -> [Quaternion; 2] {
    let h = FieldScalar::from_frac(1, 2);
    let p = Quaternion::pure(h.clone(), &h * &FieldScalar::tau(), &h * &FieldScalar::sigma());
    let q = Quaternion::new(h.clone(), h.clone(), h.clone(), h);
    [p, q]
}

/// The binary icosahedral group `I = T ∪ S`, by closure of `⟨p, q, e1⟩`.
pub fn binary_icosahedral() -> QuaternionSet {
    binary_icosahedral_with(Strategy::default())
}

pub fn binary_icosahedral_with(strategy: Strategy) -> QuaternionSet {
    let [p, q] = icosahedral_generators();
    let elements = closure(&[p, q, Quaternion::e1()], 120, strategy).expect("⟨p, T⟩ has order 120");
    QuaternionSet::new(Some("I"), elements)
}

/// The 96 elements `S = I \ T`.
pub fn icosian_complement() -> QuaternionSet {
    binary_icosahedral().difference(&binary_tetrahedral(), Some("S"))
}

/// Names of the supported point groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    /// `W(D3) ≈ T_d`, written `W(A3)` in some sources.
    Td,
    /// `O_h ≈ Aut(D3) ≈ W(B3)`.
    Oh,
    /// Chiral octahedral group.
    O,
    /// Pyritohedral group.
    Th,
    /// Chiral tetrahedral group `[T, T̄]`.
    A4,
    /// `W(H3)`.
    Ih,
    /// Chiral icosahedral group `[I, Ī]`.
    A5,
    WA2,
    D6,
    WB2,
}

impl GroupName {
    pub const ALL: [GroupName; 10] = [
        GroupName::Td,
        GroupName::Oh,
        GroupName::O,
        GroupName::Th,
        GroupName::A4,
        GroupName::Ih,
        GroupName::A5,
        GroupName::WA2,
        GroupName::D6,
        GroupName::WB2,
    ];

    pub fn order(self) -> usize {
        match self {
            GroupName::Td | GroupName::O | GroupName::Th => 24,
            GroupName::Oh => 48,
            GroupName::A4 | GroupName::D6 => 12,
            GroupName::Ih => 120,
            GroupName::A5 => 60,
            GroupName::WA2 => 6,
            GroupName::WB2 => 8,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GroupName::Td => "W(D3)",
            GroupName::Oh => "Oh",
            GroupName::O => "O",
            GroupName::Th => "Th",
            GroupName::A4 => "A4",
            GroupName::Ih => "W(H3)",
            GroupName::A5 => "A5",
            GroupName::WA2 => "W(A2)",
            GroupName::D6 => "D6",
            GroupName::WB2 => "W(B2)",
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "wd3" | "wa3" | "td" | "d3" | "a3" => GroupName::Td,
            "oh" | "autd3" | "wb3" | "b3" => GroupName::Oh,
            "o" | "ochiral" => GroupName::O,
            "th" => GroupName::Th,
            "a4" | "a4chiral" | "t" => GroupName::A4,
            "wh3" | "h3" | "ih" => GroupName::Ih,
            "a5" | "a5chiral" | "i" => GroupName::A5,
            "wa2" | "a2" => GroupName::WA2,
            "d6" => GroupName::D6,
            "wb2" | "b2" | "d4" => GroupName::WB2,
            _ => return Err(Error::UnknownGroup(s.to_string())),
        })
    }
}

/// A finite group of O(3) elements in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointGroup {
    pub name: GroupName,
    elements: Vec<OrthoElement>,
}

/// `{[p, s·p̄] : p ∈ set}` for each sign `s` listed.
fn pairs_with_conj(set: &QuaternionSet, signs: &[i64]) -> Vec<OrthoElement> {
    let mut out = Vec::new();
    for p in set.iter() {
        for &s in signs {
            let q = p.conj().scale(&FieldScalar::from_int(s));
            out.push(OrthoElement::pair(p.clone(), q).expect("unit quaternions"));
        }
    }
    out
}

/// Mirror exchanging the two simple roots of the planar A2 embedding.
pub(crate) fn a2_diagram_symmetry() -> OrthoElement {
    let w = Quaternion::pure_ints(1, 0, -1).scale(&FieldScalar::inv_sqrt2());
    OrthoElement::pair(w.clone(), -w).expect("unit quaternion")
}

pub(crate) fn planar_reflections(roots: &[Quaternion]) -> Vec<OrthoElement> {
    roots
        .iter()
        .map(|r| reflection_from_root(r).expect("root of norm 1 or 2"))
        .collect()
}

pub fn point_group(name: GroupName) -> PointGroup {
    point_group_with(name, Strategy::default())
}

pub fn point_group_with(name: GroupName, strategy: Strategy) -> PointGroup {
    let t = binary_tetrahedral();
    let tp = tprime();
    let elements = match name {
        GroupName::A4 => pairs_with_conj(&t, &[1]),
        GroupName::Td => [pairs_with_conj(&t, &[1]), pairs_with_conj(&tp, &[-1])].concat(),
        GroupName::O => [pairs_with_conj(&t, &[1]), pairs_with_conj(&tp, &[1])].concat(),
        GroupName::Th => pairs_with_conj(&t, &[1, -1]),
        GroupName::Oh => [pairs_with_conj(&t, &[1, -1]), pairs_with_conj(&tp, &[1, -1])].concat(),
        GroupName::Ih => pairs_with_conj(&binary_icosahedral_with(strategy), &[1, -1]),
        GroupName::A5 => pairs_with_conj(&binary_icosahedral_with(strategy), &[1]),
        GroupName::WA2 | GroupName::D6 => {
            let mut gens = planar_reflections(&[Quaternion::pure_ints(1, -1, 0), Quaternion::pure_ints(0, 1, -1)]);
            if name == GroupName::D6 {
                gens.push(a2_diagram_symmetry());
            }
            closure(&gens, 12, strategy).expect("finite planar group")
        }
        GroupName::WB2 => {
            let gens = planar_reflections(&[Quaternion::pure_ints(1, -1, 0), Quaternion::pure_ints(0, 1, 0)]);
            closure(&gens, 8, strategy).expect("finite planar group")
        }
    };
    PointGroup::from_elements(name, elements)
}

impl PointGroup {
    pub fn from_elements(name: GroupName, elements: impl IntoIterator<Item = OrthoElement>) -> Self {
        let set: BTreeSet<OrthoElement> = elements.into_iter().collect();
        Self {
            name,
            elements: set.into_iter().collect(),
        }
    }

    pub fn elements(&self) -> &[OrthoElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &OrthoElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PointGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn intersection_order(&self, other: &PointGroup) -> usize {
        self.elements.iter().filter(|g| other.contains(g)).count()
    }

    pub fn is_group(&self) -> bool {
        is_group(&self.elements, OrthoElement::inverse, Strategy::default())
    }

    /// The orbit of `v`, sorted and deduplicated.
    pub fn orbit(&self, v: &Quaternion) -> Vec<Quaternion> {
        self.orbit_with(v, Strategy::default())
    }

    pub fn orbit_with(&self, v: &Quaternion, strategy: Strategy) -> Vec<Quaternion> {
        let images = par::map(strategy, &self.elements, |g| g.apply(v));
        images.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Whether every element maps `points` onto itself.
    pub fn preserves(&self, points: &[Quaternion]) -> bool {
        let set: BTreeSet<&Quaternion> = points.iter().collect();
        par::all(Strategy::default(), &self.elements, |g| {
            points.iter().all(|v| set.contains(&g.apply(v)))
        })
    }
}

/// A permutation of four labels, stored as images: `i ↦ self.0[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4(pub [usize; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        Perm4(std::array::from_fn(|i| self.0[other.0[i]]))
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4 {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation over `labels`, e.g. `(ADBC)`; `()` for the identity.
    pub fn cycle_string(&self, labels: &[&str; 4], sep: &str) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|&i| labels[i]).collect::<Vec<_>>().join(sep)))
            .collect()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

pub const TETRA_LABELS: [&str; 4] = ["A", "B", "C", "D"];
pub const DIAGONAL_LABELS: [&str; 4] = ["AB′", "CD′", "DC′", "BA′"];

/// Cube vertices `A, B, C, D, A′, B′, C′, D′`; the unprimed and primed
/// letters form the two inscribed tetrahedra.
pub fn cube_vertices() -> [Quaternion; 8] {
    let h = |x: i64, y: i64, z: i64| {
        let half = FieldScalar::from_frac(1, 2);
        Quaternion::pure_ints(x, y, z).scale(&half)
    };
    [
        h(1, 1, 1),
        h(-1, -1, 1),
        h(1, -1, -1),
        h(-1, 1, -1),
        h(1, 1, -1),
        h(-1, -1, -1),
        h(1, -1, 1),
        h(-1, 1, 1),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TetraAction {
    /// Permutes `A, B, C, D` among themselves.
    Perm(Perm4),
    /// Exchanges the two tetrahedra.
    Mixed,
}

pub fn tetrahedron_permutation(g: &OrthoElement) -> Result<TetraAction> {
    let cube = cube_vertices();
    let images: Vec<usize> = cube
        .iter()
        .map(|v| cube.iter().position(|w| *w == g.apply(v)).ok_or(Error::NotInOctahedral))
        .collect::<Result<_>>()?;
    if images[..4].iter().all(|&i| i < 4) {
        Ok(TetraAction::Perm(Perm4([images[0], images[1], images[2], images[3]])))
    } else {
        Ok(TetraAction::Mixed)
    }
}

/// Induced permutation of the four body diagonals `AB′, CD′, DC′, BA′`.
pub fn diagonal_permutation(g: &OrthoElement) -> Result<Perm4> {
    let cube = cube_vertices();
    let reps = [&cube[0], &cube[2], &cube[3], &cube[1]];
    let mut images = [0usize; 4];
    for (i, v) in reps.iter().enumerate() {
        let w = g.apply(v);
        images[i] = reps
            .iter()
            .position(|r| **r == w || -*r == w)
            .ok_or(Error::NotInOctahedral)?;
    }
    Ok(Perm4(images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: [&str; 4]) -> Quaternion {
        Quaternion::from_array(s.map(|x| x.parse().unwrap()))
    }

    fn d3() -> [OrthoElement; 3] {
        planar_reflections(&[
            Quaternion::pure_ints(1, -1, 0),
            Quaternion::pure_ints(0, 1, -1),
            Quaternion::pure_ints(0, 1, 1),
        ])
        .try_into()
        .unwrap()
    }

    fn gamma() -> OrthoElement {
        OrthoElement::pair(Quaternion::e3(), Quaternion::e3()).unwrap()
    }

    fn generators_ab() -> (OrthoElement, OrthoElement) {
        let a = OrthoElement::pair(q(["1/2", "1/2", "1/2", "1/2"]), q(["1/2", "-1/2", "-1/2", "-1/2"])).unwrap();
        let b = OrthoElement::pair(q(["1/2*r2", "1/2*r2", "0", "0"]), q(["1/2*r2", "-1/2*r2", "0", "0"])).unwrap();
        (a, b)
    }

    #[test]
    fn quaternion_set_orders() {
        let t = binary_tetrahedral();
        let tp = tprime();
        assert_eq!(t.len(), 24);
        assert_eq!(tp.len(), 24);
        assert_eq!(binary_octahedral().len(), 48);
        assert!(t.is_group());
        assert!(!tp.is_group());
        assert!(binary_octahedral().is_group());
        assert!(tp.products_within(&tp, &t));
        assert!(tp.products_within(&t, &tp));
    }

    #[test]
    fn tprime_square_lands_in_t() {
        let u = q(["1/2*r2", "1/2*r2", "0", "0"]);
        assert_eq!(&u * &u, Quaternion::e1());
        assert!(binary_tetrahedral().contains(&(&u * &u)));
    }

    #[test]
    fn closure_reproduces_t() {
        let gens = [q(["1/2", "1/2", "1/2", "1/2"]), Quaternion::e1()];
        let c = closure(&gens, 100, Strategy::Sequential).unwrap();
        assert_eq!(c, binary_tetrahedral().elements());
    }

    #[test]
    fn closure_of_identity() {
        let c = closure(&[Quaternion::one()], 10, Strategy::Sequential).unwrap();
        assert_eq!(c, vec![Quaternion::one()]);
    }

    #[test]
    fn closure_cap_and_validation() {
        let [p, q] = icosahedral_generators();
        let gens = [p, q, Quaternion::e1()];
        assert!(matches!(closure(&gens, 50, Strategy::Sequential), Err(Error::ClosureCapExceeded(50))));
        assert!(matches!(
            closure(&[Quaternion::from_ints(1, 1, 0, 0)], 10, Strategy::Sequential),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn p_and_q_alone_close_at_24() {
        let gens = icosahedral_generators();
        let g = closure(&gens, 200, Strategy::Sequential).unwrap();
        assert_eq!(g.len(), 24);
        assert_eq!((&gens[0] * &gens[1]).scalar(), &FieldScalar::from_frac(-1, 2));
        let t = binary_tetrahedral();
        assert_eq!(g.iter().filter(|x| t.contains(x)).count(), 6);
    }

    #[test]
    fn icosians() {
        let i = binary_icosahedral();
        assert_eq!(i.len(), 120);
        assert!(i.is_group());
        let t = binary_tetrahedral();
        assert!(t.iter().all(|x| i.contains(x)));
        let s = icosian_complement();
        assert_eq!(s.len(), 96);
        assert_eq!(s.union(&t, None).elements(), i.elements());
        assert_eq!(binary_icosahedral_with(Strategy::Sequential), i);
    }

    #[test]
    fn point_group_orders() {
        for name in GroupName::ALL {
            let g = point_group(name);
            assert_eq!(g.order(), name.order(), "{name}");
            assert!(g.is_group(), "{name}");
        }
    }

    #[test]
    fn group_names_parse() {
        for name in GroupName::ALL {
            assert_eq!(name.label().parse::<GroupName>().unwrap(), name);
        }
        assert_eq!("W(A3)".parse::<GroupName>().unwrap(), GroupName::Td);
        assert_eq!("Aut(D3)".parse::<GroupName>().unwrap(), GroupName::Oh);
        assert_eq!("O_chiral".parse::<GroupName>().unwrap(), GroupName::O);
        assert!("Q8".parse::<GroupName>().is_err());
    }

    #[test]
    fn reflection_generators_give_td_and_oh() {
        let gens = d3().to_vec();
        let td = closure(&gens, 48, Strategy::Sequential).unwrap();
        assert_eq!(td, point_group(GroupName::Td).elements());
        let mut b3 = gens[..2].to_vec();
        b3.push(gamma());
        let oh = closure(&b3, 48, Strategy::Sequential).unwrap();
        assert_eq!(oh, point_group(GroupName::Oh).elements());
    }

    #[test]
    fn subgroup_relations() {
        let oh = point_group(GroupName::Oh);
        let td = point_group(GroupName::Td);
        let th = point_group(GroupName::Th);
        let o = point_group(GroupName::O);
        for g in [&td, &th, &o] {
            assert!(g.is_subgroup_of(&oh));
            assert_eq!(oh.order(), 2 * g.order());
        }
        assert!(!th.is_subgroup_of(&td));
        assert_eq!(td.intersection_order(&th), 12);
        assert!(point_group(GroupName::A4).is_subgroup_of(&td));
        assert!(point_group(GroupName::A5).is_subgroup_of(&point_group(GroupName::Ih)));
        assert!(th.is_subgroup_of(&point_group(GroupName::Ih)));
    }

    #[test]
    fn gamma_conjugates_r2_to_r3() {
        let [_, r2, r3] = d3();
        let g = gamma();
        assert_eq!(g.compose(&r2).compose(&g), r3);
    }

    #[test]
    fn tetrahedron_permutations() {
        let [r1, r2, r3] = d3();
        let perm = |g: &OrthoElement| match tetrahedron_permutation(g).unwrap() {
            TetraAction::Perm(p) => p.cycle_string(&TETRA_LABELS, ""),
            TetraAction::Mixed => "mixed".into(),
        };
        assert_eq!(perm(&r1), "(CD)");
        assert_eq!(perm(&r2), "(BD)");
        assert_eq!(perm(&r3), "(AC)");
        assert_eq!(perm(&r1.compose(&r2).compose(&r3)), "(ADBC)");
        assert_eq!(perm(&gamma()), "mixed");
        assert_eq!(perm(&OrthoElement::identity()), "()");
        // Every element of W(D3) permutes the tetrahedron; S4 is realized.
        let td = point_group(GroupName::Td);
        let perms: BTreeSet<_> = td.elements().iter().map(|g| tetrahedron_permutation(g).unwrap()).map(|a| match a {
            TetraAction::Perm(p) => p,
            TetraAction::Mixed => panic!("T_d element swaps tetrahedra"),
        }).collect();
        assert_eq!(perms.len(), 24);
        let odd_coset = point_group(GroupName::Oh);
        let mixed = odd_coset.elements().iter().filter(|g| !td.contains(g)).all(|g| {
            tetrahedron_permutation(g).unwrap() == TetraAction::Mixed
        });
        assert!(mixed);
    }

    #[test]
    fn primed_letters_swap_r2_and_r3() {
        let [r1, r2, r3] = d3();
        let cube = cube_vertices();
        let on_primed = |g: &OrthoElement| -> [usize; 4] {
            std::array::from_fn(|i| cube[4..].iter().position(|w| *w == g.apply(&cube[4 + i])).unwrap())
        };
        let on_plain = |g: &OrthoElement| -> [usize; 4] {
            std::array::from_fn(|i| cube[..4].iter().position(|w| *w == g.apply(&cube[i])).unwrap())
        };
        assert_eq!(on_primed(&r1), on_plain(&r1));
        assert_eq!(on_primed(&r2), on_plain(&r3));
        assert_eq!(on_primed(&r3), on_plain(&r2));
    }

    #[test]
    fn diagonal_permutations() {
        let (a, b) = generators_ab();
        let diag = |g: &OrthoElement| diagonal_permutation(g).unwrap().cycle_string(&DIAGONAL_LABELS, " ");
        assert_eq!(diag(&a), "(CD′ DC′ BA′)");
        assert_eq!(diag(&b), "(AB′ DC′ CD′ BA′)");
        assert_eq!(diag(&OrthoElement::inversion()), "()");
        assert!(a.pow(3).is_identity());
        assert!(b.pow(4).is_identity());
        assert!(a.compose(&b).pow(2).is_identity());
        let [r1, r2, _] = d3();
        assert_eq!(r1.compose(&r2), a);
    }

    #[test]
    fn diagonal_homomorphism() {
        let o = point_group(GroupName::O);
        let image: BTreeSet<Perm4> = o.elements().iter().map(|g| diagonal_permutation(g).unwrap()).collect();
        assert_eq!(image.len(), 24);
        for g in o.elements() {
            for h in o.elements() {
                let lhs = diagonal_permutation(&g.compose(h)).unwrap();
                let rhs = diagonal_permutation(g).unwrap().compose(&diagonal_permutation(h).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        let oh = point_group(GroupName::Oh);
        let kernel: Vec<_> = oh
            .elements()
            .iter()
            .filter(|g| diagonal_permutation(g).unwrap() == Perm4::IDENTITY)
            .cloned()
            .collect();
        let mut expected = vec![OrthoElement::identity(), OrthoElement::inversion()];
        expected.sort();
        assert_eq!(kernel, expected);
    }

    #[test]
    fn outside_octahedral_group() {
        let [p, _] = icosahedral_generators();
        let g = OrthoElement::pair(p.clone(), p.conj()).unwrap();
        assert!(matches!(tetrahedron_permutation(&g), Err(Error::NotInOctahedral)));
        assert!(matches!(diagonal_permutation(&g), Err(Error::NotInOctahedral)));
    }

    #[test]
    fn perm_parity() {
        assert!(Perm4::IDENTITY.is_even());
        assert!(!Perm4([1, 0, 2, 3]).is_even());
        assert!(Perm4([1, 2, 0, 3]).is_even());
    }
}
