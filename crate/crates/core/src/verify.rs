//! Named self-checks replaying the identities of the construction, grouped
//! into the ten acceptance criteria.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{FieldScalar, Quaternion};
use crate::coxeter::{d3_gamma, diagram, rational_coords, vector_to_quaternion, DiagramName, RatMatrix};
use crate::error::Result;
use crate::lattice::{lattice_basis, member, voronoi_check, wigner_seitz, LatticeKind, Point};
use crate::par::Strategy;
use crate::polyhedra::{
    classify, edge_length_profile, fibonacci_convergence, fibonacci_family, h_of_x, mirror, polar_dual,
    proportionality, pseudoicosahedron, pseudoicosidodecahedron, pyritohedron, pyritohedron_normals, A1Policy,
    Polyhedron, SolidName,
};
use crate::qgroups::{
    binary_icosahedral, binary_octahedral, binary_tetrahedral, closure, diagonal_permutation,
    icosahedral_generators, point_group, tetrahedron_permutation, GroupName, TetraAction, DIAGONAL_LABELS,
    TETRA_LABELS,
};
use crate::transform::{reflection_from_root, OrthoElement};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub criterion: u8,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn executed(&self) -> usize {
        self.checks.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type CheckFn = fn() -> Result<(bool, String)>;

const CHECKS: &[(&str, u8, CheckFn)] = &[
    ("group_orders", 1, group_orders),
    ("eq22_d3_orbits", 2, eq22_d3_orbits),
    ("eq29_truncated_octahedron", 2, eq29_truncated_octahedron),
    ("eq36_sc_cube", 2, eq36_sc_cube),
    ("b3_110_equals_d3_111", 2, b3_110_equals_d3_111),
    ("eq17_d3_cartan", 3, eq17_d3_cartan),
    ("eq9_a2_metric", 3, eq9_a2_metric),
    ("eq13_b2_cartan_metric", 3, eq13_b2_cartan_metric),
    ("eq21_eq31_weights", 3, eq21_eq31_weights),
    ("coxeter_relations", 4, coxeter_relations),
    ("chiral_octahedral_relations", 4, chiral_octahedral_relations),
    ("eq26_tetrahedron_permutations", 4, eq26_tetrahedron_permutations),
    ("eq33_diagonal_permutations", 4, eq33_diagonal_permutations),
    ("eq46_pseudoicosahedron", 5, eq46_pseudoicosahedron),
    ("eq40a_eq41_icosahedra", 5, eq40a_eq41_icosahedra),
    ("eq37_golden_condition", 5, eq37_golden_condition),
    ("eq54_fibonacci_table", 5, eq54_fibonacci_table),
    ("edge_profile_x1", 5, edge_profile_x1),
    ("pentagon_coplanarity", 6, pentagon_coplanarity),
    ("dual_proportionality", 6, dual_proportionality),
    ("eq47_pyritohedron", 6, eq47_pyritohedron),
    ("eq42_dodecahedron", 6, eq42_dodecahedron),
    ("lattice_basis_span", 7, lattice_basis_span),
    ("wigner_seitz_cells", 7, wigner_seitz_cells),
    ("voronoi_oracle", 7, voronoi_oracle),
    ("limits_and_degeneracies", 8, limits_and_degeneracies),
    ("eq48_bcc_cell", 8, eq48_bcc_cell),
    ("eq55_icosidodecahedron", 8, eq55_icosidodecahedron),
    ("hull_integrity", 9, hull_integrity),
    ("fibonacci_convergence", 10, fibonacci_convergence_check),
];

fn execute(name: &'static str, criterion: u8, f: CheckFn) -> CheckResult {
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckResult {
        name,
        criterion,
        passed,
        detail,
    }
}

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

pub fn run() -> Report {
    Report {
        checks: CHECKS.iter().map(|&(n, c, f)| execute(n, c, f)).collect(),
    }
}

pub fn run_criterion(criterion: u8) -> Report {
    Report {
        checks: CHECKS
            .iter()
            .filter(|c| c.1 == criterion)
            .map(|&(n, c, f)| execute(n, c, f))
            .collect(),
    }
}

pub fn run_named(name: &str) -> Option<CheckResult> {
    CHECKS.iter().find(|c| c.0 == name).map(|&(n, c, f)| execute(n, c, f))
}

fn s(x: &str) -> FieldScalar {
    x.parse().expect("literal")
}

fn q3(x: &str, y: &str, z: &str) -> Quaternion {
    Quaternion::pure(s(x), s(y), s(z))
}

fn set(points: impl IntoIterator<Item = Quaternion>) -> BTreeSet<Quaternion> {
    points.into_iter().collect()
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_rows(rows: &[&[(i64, i64)]]) -> RatMatrix {
    rows.iter().map(|row| row.iter().map(|&(n, d)| r(n, d)).collect()).collect()
}

fn d3_reflections() -> Result<Vec<OrthoElement>> {
    [q3("1", "-1", "0"), q3("0", "1", "-1"), q3("0", "1", "1")]
        .iter()
        .map(reflection_from_root)
        .collect()
}

fn b3_reflections() -> Result<Vec<OrthoElement>> {
    [q3("1", "-1", "0"), q3("0", "1", "-1"), q3("0", "0", "1")]
        .iter()
        .map(reflection_from_root)
        .collect()
}

fn orbit_set(name: DiagramName, coords: [i64; 3], scale: &str) -> Result<BTreeSet<Quaternion>> {
    let c: Vec<FieldScalar> = coords.iter().map(|&x| FieldScalar::from_int(x)).collect();
    Ok(set(diagram(name).orbit(&c, &s(scale))?.quaternions()?))
}

/// `{±u e_i ± v e_j ± w e_k}` over cyclic shifts of `(u, v, w)`.
fn cyclic_signed(u: &str, v: &str, w: &str) -> BTreeSet<Quaternion> {
    let c = [s(u), s(v), s(w)];
    let mut out = BTreeSet::new();
    for shift in 0..3 {
        for sign in 0..8u8 {
            let f = |i: usize| {
                let x = c[i].clone();
                if sign >> i & 1 == 1 {
                    -x
                } else {
                    x
                }
            };
            let t = [f(0), f(1), f(2)];
            out.insert(Quaternion::pure(
                t[(3 - shift) % 3].clone(),
                t[(4 - shift) % 3].clone(),
                t[(5 - shift) % 3].clone(),
            ));
        }
    }
    out
}

fn group_orders() -> Result<(bool, String)> {
    let t = binary_tetrahedral().len();
    let o = binary_octahedral().len();
    let wd3 = closure(&d3_reflections()?, 48, Strategy::default())?.len();
    let wb3 = closure(&b3_reflections()?, 96, Strategy::default())?.len();
    let d3 = d3_reflections()?;
    let th_gens = [d3[0].compose(&d3[1]), d3[0].compose(&d3[2]), d3_gamma()];
    let th = closure(&th_gens, 48, Strategy::default())?.len();
    let i = binary_icosahedral().len();
    let [p, q] = icosahedral_generators();
    let pq = closure(&[p, q], 240, Strategy::default())?.len();
    let named = GroupName::ALL.iter().all(|&g| point_group(g).order() == g.order());
    let ok = (t, o, wd3, wb3, th, i) == (24, 48, 24, 48, 24, 120) && named;
    Ok((
        ok,
        format!("|T|={t} |O|={o} |W(D3)|={wd3} |O_h|={wb3} |T_h|={th} |I|={i} from <p,q,e1> (<p,q> alone: {pq})"),
    ))
}

fn eq22_d3_orbits() -> Result<(bool, String)> {
    let h = "1/2";
    let m = "-1/2";
    let o100 = cyclic_signed("1", "0", "0");
    let o010 = set([q3(m, m, m), q3(m, h, h), q3(h, h, m), q3(h, m, h)]);
    let o001 = set([q3(h, h, h), q3(h, m, m), q3(m, m, h), q3(m, h, m)]);
    let o011 = cyclic_signed("1", "1", "0");
    let got = [
        orbit_set(DiagramName::D3, [1, 0, 0], "1")?,
        orbit_set(DiagramName::D3, [0, 1, 0], "1")?,
        orbit_set(DiagramName::D3, [0, 0, 1], "1")?,
        orbit_set(DiagramName::D3, [0, 1, 1], "1")?,
    ];
    let sizes: Vec<usize> = got.iter().map(BTreeSet::len).collect();
    Ok((got == [o100, o010, o001, o011], format!("sizes {sizes:?}")))
}

fn eq29_set() -> BTreeSet<Quaternion> {
    let mut e = cyclic_signed("1/2", "1/4", "0");
    e.extend(cyclic_signed("1/4", "1/2", "0"));
    e
}

fn eq29_truncated_octahedron() -> Result<(bool, String)> {
    let got = orbit_set(DiagramName::D3, [1, 1, 1], "1/4")?;
    Ok((got == eq29_set(), format!("{} points", got.len())))
}

fn eq36_set() -> BTreeSet<Quaternion> {
    cyclic_signed("1/2", "1/2", "1/2")
}

fn eq36_sc_cube() -> Result<(bool, String)> {
    let got = orbit_set(DiagramName::B3, [0, 0, 1], "1")?;
    Ok((got == eq36_set(), format!("{} points", got.len())))
}

fn b3_110_equals_d3_111() -> Result<(bool, String)> {
    let a = orbit_set(DiagramName::B3, [1, 1, 0], "1")?;
    let b = orbit_set(DiagramName::D3, [1, 1, 1], "1")?;
    Ok((a == b && a.len() == 24, format!("{} and {} points", a.len(), b.len())))
}

fn eq17_d3_cartan() -> Result<(bool, String)> {
    let d = diagram(DiagramName::D3);
    let c = vec![vec![2, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]];
    let cinv = rat_rows(&[&[(4, 4), (2, 4), (2, 4)], &[(2, 4), (3, 4), (1, 4)], &[(2, 4), (1, 4), (3, 4)]]);
    Ok((d.cartan == c && d.cartan_inv == cinv, "C and C⁻¹".into()))
}

fn eq9_a2_metric() -> Result<(bool, String)> {
    let d = diagram(DiagramName::A2);
    let g = rat_rows(&[&[(2, 3), (1, 3)], &[(1, 3), (2, 3)]]);
    Ok((d.cartan == vec![vec![2, -1], vec![-1, 2]] && d.metric == g, "C and G".into()))
}

fn eq13_b2_cartan_metric() -> Result<(bool, String)> {
    let d = diagram(DiagramName::B2);
    let cinv = rat_rows(&[&[(1, 1), (1, 1)], &[(1, 2), (1, 1)]]);
    let g = rat_rows(&[&[(1, 1), (1, 2)], &[(1, 2), (1, 2)]]);
    let ok = d.cartan == vec![vec![2, -2], vec![-1, 2]] && d.cartan_inv == cinv && d.metric == g;
    Ok((ok, "C, C⁻¹ and G".into()))
}

fn eq21_eq31_weights() -> Result<(bool, String)> {
    let d3 = rat_rows(&[&[(1, 1), (0, 1), (0, 1)], &[(1, 2), (1, 2), (-1, 2)], &[(1, 2), (1, 2), (1, 2)]]);
    let b3 = rat_rows(&[&[(1, 1), (0, 1), (0, 1)], &[(1, 1), (1, 1), (0, 1)], &[(1, 2), (1, 2), (1, 2)]]);
    let ok = diagram(DiagramName::D3).weights == d3 && diagram(DiagramName::B3).weights == b3;
    Ok((ok, "D3 and B3 weights".into()))
}

fn relations_hold(gens: &[OrthoElement], m: &[[u32; 3]; 3]) -> bool {
    (0..3).all(|i| {
        (0..3).all(|j| {
            let g = gens[i].compose(&gens[j]);
            let k = m[i][j];
            g.pow(k).is_identity() && (1..k).all(|e| !g.pow(e).is_identity())
        })
    })
}

fn coxeter_relations() -> Result<(bool, String)> {
    let d3 = relations_hold(&d3_reflections()?, &[[1, 3, 3], [3, 1, 2], [3, 2, 1]]);
    let b3 = relations_hold(&b3_reflections()?, &[[1, 3, 2], [3, 1, 4], [2, 4, 1]]);
    Ok((d3 && b3, format!("D3 {d3}, B3 {b3}")))
}

fn chiral_octahedral_relations() -> Result<(bool, String)> {
    let a = OrthoElement::pair(
        Quaternion::new(s("1/2"), s("1/2"), s("1/2"), s("1/2")),
        Quaternion::new(s("1/2"), s("-1/2"), s("-1/2"), s("-1/2")),
    )?;
    let k = FieldScalar::inv_sqrt2();
    let b = OrthoElement::pair(
        Quaternion::new(k.clone(), k.clone(), FieldScalar::zero(), FieldScalar::zero()),
        Quaternion::new(k.clone(), -&k, FieldScalar::zero(), FieldScalar::zero()),
    )?;
    let ab = a.compose(&b);
    let r = b3_reflections()?;
    let ok = a.order(12) == Some(3)
        && b.order(12) == Some(4)
        && ab.order(12) == Some(2)
        && r[0].compose(&r[1]) == a
        && closure(&[a, b], 48, Strategy::default())?.len() == 24;
    Ok((ok, "a³ = b⁴ = (ab)² = 1, ⟨a, b⟩ = 24".into()))
}

fn eq26_tetrahedron_permutations() -> Result<(bool, String)> {
    let g = d3_reflections()?;
    let cyc = |e: &OrthoElement| -> Result<String> {
        Ok(match tetrahedron_permutation(e)? {
            TetraAction::Perm(p) => p.cycle_string(&TETRA_LABELS, ""),
            TetraAction::Mixed => "mixed".into(),
        })
    };
    let got = [cyc(&g[0])?, cyc(&g[1])?, cyc(&g[2])?, cyc(&g[0].compose(&g[1]).compose(&g[2]))?];
    let ok = got == ["(CD)", "(BD)", "(AC)", "(ADBC)"];
    Ok((ok, got.join(" ")))
}

fn eq33_diagonal_permutations() -> Result<(bool, String)> {
    let r = b3_reflections()?;
    let a = r[0].compose(&r[1]);
    let b = r[1].compose(&r[2]);
    let pa = diagonal_permutation(&a)?.cycle_string(&DIAGONAL_LABELS, " ");
    let pb = diagonal_permutation(&b)?.cycle_string(&DIAGONAL_LABELS, " ");
    let inv = diagonal_permutation(&OrthoElement::inversion())?.cycle_string(&DIAGONAL_LABELS, " ");
    let ok = pa == "(CD′ DC′ BA′)" && pb == "(AB′ DC′ CD′ BA′)" && inv == "()";
    Ok((ok, format!("a {pa}, b {pb}")))
}

fn eq46_pseudoicosahedron() -> Result<(bool, String)> {
    let p = pseudoicosahedron(&s("1"), &s("1"))?;
    let ok = set(p.vertices().to_vec()) == cyclic_signed("2", "1", "0");
    Ok((ok, format!("{} vertices", p.vertices().len())))
}

fn eq40a_eq41_icosahedra() -> Result<(bool, String)> {
    let p = pseudoicosahedron(&s("tau"), &s("1"))?;
    // τ(±τ, ±1, 0) and τ(±1, ±τ, 0), cyclic.
    let eq40a = cyclic_signed("3/2 + 1/2*r5", "1/2 + 1/2*r5", "0");
    let eq41 = cyclic_signed("1/2 + 1/2*r5", "3/2 + 1/2*r5", "0");
    let m = mirror(&p)?;
    let ok = set(p.vertices().to_vec()) == eq40a && set(m.vertices().to_vec()) == eq41 && classify(&p) == SolidName::Icosahedron;
    Ok((ok, "Eq 40a and its mirror".into()))
}

fn eq37_golden_condition() -> Result<(bool, String)> {
    let one = s("1");
    let golden = [s("tau"), s("sigma")].iter().all(|x| edge_length_profile(x, &one).is_regular());
    // 1 + x + x² − 2x² = −(x² − x − 1) has no rational root.
    let mut rational_hits = 0;
    for n in -40..=40 {
        for d in [1, 2, 3, 4, 5, 7] {
            if edge_length_profile(&FieldScalar::from_frac(n, d), &one).is_regular() {
                rational_hits += 1;
            }
        }
    }
    let x = s("1/2 + 1/2*r2 + 1/3*r10");
    let prof = edge_length_profile(&x, &one);
    let poly = &(&x * &x) - &(&x + &one);
    let identity = &prof.equilateral - &prof.isosceles_base == -poly;
    Ok((golden && rational_hits == 0 && identity, format!("rational solutions found: {rational_hits}")))
}

fn eq54_fibonacci_table() -> Result<(bool, String)> {
    let fam = fibonacci_family(4, A1Policy::ClearDenominators)?;
    let table = [("2", "1"), ("3", "2"), ("5", "3"), ("8", "5")];
    let ok = fam.len() == 4
        && fam
            .iter()
            .zip(table)
            .all(|(m, (a, b))| set(m.poly.vertices().to_vec()) == cyclic_signed(a, b, "0"));
    let xs: Vec<String> = fam.iter().map(|m| m.x.to_string()).collect();
    Ok((ok, format!("x_n = {}", xs.join(", "))))
}

fn edge_profile_x1() -> Result<(bool, String)> {
    let p = edge_length_profile(&s("1"), &s("1"));
    let ok = p.equilateral == s("3") && p.isosceles_base == s("2");
    Ok((ok, format!("({}, {})", p.equilateral, p.isosceles_base)))
}

const SAMPLE_X: [&str; 10] = ["3/7", "-5/3", "11/2", "2/9", "-13/4", "17/5", "-1/6", "7/11", "29/3", "-8/13"];

fn pentagon_coplanarity() -> Result<(bool, String)> {
    let mut xs: Vec<FieldScalar> = SAMPLE_X.iter().map(|x| s(x)).collect();
    xs.extend([s("tau"), s("sigma"), -s("tau")]);
    let mut ok = true;
    for x in &xs {
        let n = pyritohedron_normals(x)?;
        ok &= n.coplanarity_residue().is_zero() && n.pentagon_coplanar();
    }
    Ok((ok, format!("{} parameters", xs.len())))
}

fn dual_proportionality() -> Result<(bool, String)> {
    let mut ok = true;
    let xs = ["1", "3/2", "5/3", "tau", "1/4", "9/2"];
    for x in xs {
        let x = s(x);
        let p = pseudoicosahedron(&x, &s("1"))?;
        let dual = polar_dual(&p)?;
        let pyr = pyritohedron(&h_of_x(&x)?, &s("1"))?;
        let two = s("2");
        let expected = two.checked_div(&(&s("1") + &(&two * &x)))?;
        ok &= proportionality(dual.vertices(), pyr.vertices()) == Some(expected);
        ok &= polar_dual(&dual)?.vertices() == p.vertices();
    }
    Ok((ok, format!("x in {xs:?}, ratio 2/(1+2x), involution exact")))
}

fn eq47_pyritohedron() -> Result<(bool, String)> {
    let p = pyritohedron(&s("1/2"), &s("8"))?;
    let mut e = cyclic_signed("3", "6", "0");
    e.extend(cyclic_signed("4", "4", "4"));
    let ok = set(p.vertices().to_vec()) == e && p.face_census().get(&5) == Some(&12);
    Ok((ok, format!("{} vertices", p.vertices().len())))
}

fn eq42_dodecahedron() -> Result<(bool, String)> {
    let dual = polar_dual(&pseudoicosahedron(&s("tau"), &s("1"))?)?;
    // ½{(±σ, ±τ, 0) cyclic} ∪ ½(±1, ±1, ±1).
    let mut e: Vec<Quaternion> = cyclic_signed("1/4 - 1/4*r5", "1/4 + 1/4*r5", "0").into_iter().collect();
    e.extend(cyclic_signed("1/2", "1/2", "1/2"));
    let ratio = proportionality(dual.vertices(), &e);
    let ok = ratio.is_some() && classify(&dual) == SolidName::Dodecahedron;
    Ok((ok, format!("ratio {}", ratio.map(|r| r.to_string()).unwrap_or_else(|| "none".into()))))
}

fn solve_coefficients(basis: &[Point], p: &[BigRational]) -> Option<Vec<BigRational>> {
    // Cramer's rule on the 3×3 system Σ cᵢ bᵢ = p.
    let det = |m: [[&BigRational; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let col = |j: usize, i: usize| &basis[j][i];
    let full = det([[col(0, 0), col(1, 0), col(2, 0)], [col(0, 1), col(1, 1), col(2, 1)], [col(0, 2), col(1, 2), col(2, 2)]]);
    if full.is_zero() {
        return None;
    }
    (0..3)
        .map(|k| {
            let pick = |j: usize, i: usize| if j == k { &p[i] } else { col(j, i) };
            Some(det([[pick(0, 0), pick(1, 0), pick(2, 0)], [pick(0, 1), pick(1, 1), pick(2, 1)], [pick(0, 2), pick(1, 2), pick(2, 2)]]) / &full)
        })
        .collect()
}

fn lattice_basis_span() -> Result<(bool, String)> {
    let mut ok = true;
    let mut tested = 0usize;
    for kind in [LatticeKind::Fcc, LatticeKind::Bcc, LatticeKind::Sc] {
        let b = lattice_basis(kind);
        for c0 in -3..=3 {
            for c1 in -3..=3 {
                for c2 in -3..=3 {
                    let p: Point = (0..3).map(|i| &b[0][i] * r(c0, 1) + &b[1][i] * r(c1, 1) + &b[2][i] * r(c2, 1)).collect();
                    ok &= member(kind, &p);
                    tested += 1;
                }
            }
        }
        // Conversely, every half-integer grid point is a member exactly when
        // its basis coefficients are integers.
        for x in -6..=6 {
            for y in -6..=6 {
                for z in -6..=6 {
                    let p = vec![r(x, 2), r(y, 2), r(z, 2)];
                    let integral = solve_coefficients(&b, &p)
                        .map(|c| c.iter().all(BigRational::is_integer))
                        .unwrap_or(false);
                    ok &= integral == member(kind, &p);
                    tested += 1;
                }
            }
        }
    }
    Ok((ok, format!("{tested} points")))
}

fn ws_set(kind: LatticeKind) -> Result<BTreeSet<Quaternion>> {
    Ok(set(wigner_seitz(kind).quaternions()?))
}

fn wigner_seitz_cells() -> Result<(bool, String)> {
    let mut fig8 = cyclic_signed("1", "0", "0");
    fig8.extend(cyclic_signed("1/2", "1/2", "1/2"));
    let fcc = ws_set(LatticeKind::Fcc)? == fig8;
    let bcc = ws_set(LatticeKind::Bcc)? == eq29_set();
    let sc = ws_set(LatticeKind::Sc)? == eq36_set();
    let oh = point_group(GroupName::Oh);
    let invariant = [LatticeKind::Fcc, LatticeKind::Bcc, LatticeKind::Sc]
        .iter()
        .all(|&k| oh.preserves(&wigner_seitz(k).quaternions().unwrap_or_default()));
    Ok((fcc && bcc && sc && invariant, format!("fcc {fcc}, bcc {bcc}, sc {sc}, O_h-invariant {invariant}")))
}

fn voronoi_oracle() -> Result<(bool, String)> {
    let mut details = Vec::new();
    let mut ok = true;
    for kind in LatticeKind::ALL {
        let rep = voronoi_check(&wigner_seitz(kind));
        let min_eq = rep.vertices.iter().map(|v| v.equidistant).min().unwrap_or(0);
        ok &= rep.passes();
        details.push(format!("{kind}: min equidistant {min_eq}"));
    }
    Ok((ok, details.join("; ")))
}

fn limits_and_degeneracies() -> Result<(bool, String)> {
    let x0 = pseudoicosahedron(&s("0"), &s("1"))?;
    let h1 = pyritohedron(&s("1"), &s("1"))?;
    let ok = classify(&x0) == SolidName::Octahedron
        && x0.degenerate.is_some()
        && classify(&h1) == SolidName::RhombicDodecahedron
        && h1.degenerate.is_some();
    Ok((ok, format!("x=0: {}, h=1: {}", classify(&x0), classify(&h1))))
}

fn eq48_bcc_cell() -> Result<(bool, String)> {
    let p = pseudoicosahedron(&s("1"), &s("1"))?;
    let m = mirror(&p)?;
    let union = set(p.vertices().iter().chain(m.vertices()).cloned());
    let cell: BTreeSet<Quaternion> = ws_set(LatticeKind::Bcc)?.iter().map(|v| v.scale(&s("4"))).collect();
    Ok((union == cell, format!("{} points", union.len())))
}

fn eq55_icosidodecahedron() -> Result<(bool, String)> {
    let p = pseudoicosidodecahedron(&s("tau"), &s("1"))?;
    let ok = classify(&p) == SolidName::Icosidodecahedron && p.all_edges_equal() && p.vertices().len() == 30;
    Ok((ok, format!("{} with {} edge lengths", classify(&p), p.distinct_edge_lengths_squared().len())))
}

/// Every solid built by the library, with the face census it must have.
pub fn constructed_solids() -> Result<Vec<(String, Polyhedron)>> {
    let mut out = Vec::new();
    for x in ["1", "3/2", "5/3", "2/5", "tau", "-tau", "7"] {
        out.push((format!("pseudoicosahedron x={x}"), pseudoicosahedron(&s(x), &s("1"))?));
    }
    for h in ["1/2", "1/3", "3/4", "-1/2 + 1/2*r5"] {
        out.push((format!("pyritohedron h={h}"), pyritohedron(&s(h), &s("1"))?));
    }
    for x in ["3/2", "tau"] {
        out.push((format!("pseudoicosidodecahedron x={x}"), pseudoicosidodecahedron(&s(x), &s("1"))?));
    }
    for kind in [LatticeKind::Fcc, LatticeKind::Bcc, LatticeKind::Sc] {
        if let Some(p) = wigner_seitz(kind).polyhedron {
            out.push((format!("wigner-seitz {kind}"), p));
        }
    }
    for m in fibonacci_family(6, A1Policy::ClearDenominators)? {
        out.push((format!("fibonacci n={}", m.n), m.poly));
    }
    Ok(out)
}

fn hull_integrity() -> Result<(bool, String)> {
    let solids = constructed_solids()?;
    let mut bad = Vec::new();
    for (name, p) in &solids {
        let mut ok = p.euler_characteristic() == 2 && p.faces_planar() && p.faces_convex_and_outward();
        if name.starts_with("pseudoicosahedron") && !name.ends_with("tau") {
            ok &= p.triangle_census() == (8, 12, 0);
        }
        if name.starts_with("pyritohedron") {
            ok &= p.face_census().into_iter().collect::<Vec<_>>() == vec![(5, 12)];
        }
        if !ok {
            bad.push(name.clone());
        }
    }
    Ok((bad.is_empty(), format!("{} solids, failing: {bad:?}", solids.len())))
}

fn fibonacci_convergence_check() -> Result<(bool, String)> {
    let c = fibonacci_convergence(10);
    let alternates = c.windows(2).all(|w| w[0].0 == -w[1].0 && w[0].0 != 0);
    let decreasing = c.windows(2).all(|w| w[1].1.real_cmp(&w[0].1).is_lt());
    let signs: String = c.iter().map(|(sg, _)| if *sg > 0 { '+' } else { '-' }).collect();
    Ok((alternates && decreasing, format!("signs {signs}")))
}

/// `1` as a rational, for callers building coordinate lists.
pub fn unit() -> BigRational {
    BigRational::one()
}

/// Rational coordinates of a quaternion, when it is rational and pure.
pub fn rational_point(q: &Quaternion) -> Option<Point> {
    rational_coords(&q.vector().map(Clone::clone))
}

/// Quaternion of a rank-3 point.
pub fn point_quaternion(p: &Point) -> Result<Quaternion> {
    vector_to_quaternion(&p.iter().cloned().map(FieldScalar::from_rational).collect::<Vec<_>>())
}
