//! Hesse configurations in the projective plane: the 9-point/12-line
//! incidence structure, inflection points of the Fermat cubic, the six
//! configurations through four general points, the fifteen triangles
//! through six general points, and the pencil of cubics through a
//! configuration.

use crate::forms::{CUBIC_EXPS, CUBIC_WEIGHTS};
use crate::linalg::Mat;
use crate::pluecker::Pencil;
use crate::scalar::{FieldSpec, Scalar};
use crate::MPoly;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("duplicate point at positions {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1}, {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("field {0} has no primitive cube root of unity")]
    NoOmega(FieldSpec),
    #[error("not a Hesse configuration: {0}")]
    NotAConfiguration(String),
    #[error("evaluation kernel has dimension {0}, expected 2")]
    BadKernel(usize),
    #[error("point parse error on line {0}: {1}")]
    PointParse(usize, String),
}

/// A point of the projective plane, stored in canonical scaling (first
/// nonzero coordinate equal to 1), so that structural equality is
/// projective equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [Scalar; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [Scalar; 3]) -> Result<Self, GeomError> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(GeomError::ZeroPoint)?;
        let inv = lead.inv().expect("nonzero scalar");
        Ok(ProjectivePoint {
            coords: coords.clone().map(|c| &c * &inv),
        })
    }

    pub fn from_ints(field: FieldSpec, v: [i64; 3]) -> Self {
        ProjectivePoint::new(v.map(|n| field.from_int(n))).expect("nonzero integer point")
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> FieldSpec {
        self.coords[0].spec()
    }

    pub fn promote(&self, target: FieldSpec) -> Result<ProjectivePoint, GeomError> {
        let coords = [
            self.coords[0].promote(target),
            self.coords[1].promote(target),
            self.coords[2].promote(target),
        ];
        if coords.iter().any(|c| c.is_err()) {
            return Err(GeomError::NoOmega(target));
        }
        ProjectivePoint::new(coords.map(|c| c.unwrap()))
    }

    /// Applies a coordinate permutation, re-canonicalizing.
    fn permuted(&self, perm: [usize; 3]) -> ProjectivePoint {
        ProjectivePoint::new([
            self.coords[perm[0]].clone(),
            self.coords[perm[1]].clone(),
            self.coords[perm[2]].clone(),
        ])
        .expect("permutation preserves nonzeroness")
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A line of the projective plane in dual canonical scaling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveLine {
    coords: [Scalar; 3],
}

impl ProjectiveLine {
    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let dot = self
            .coords
            .iter()
            .zip(p.coords.iter())
            .fold(self.coords[0].spec().zero(), |acc, (a, b)| &acc + &(a * b));
        dot.is_zero()
    }
}

/// The line through two distinct points (cross product of their coordinate
/// vectors), or `None` when the points coincide.
pub fn line_through(p: &ProjectivePoint, q: &ProjectivePoint) -> Option<ProjectiveLine> {
    let a = &p.coords;
    let b = &q.coords;
    let cross = [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ];
    let point = ProjectivePoint::new(cross).ok()?;
    Some(ProjectiveLine {
        coords: point.coords,
    })
}

/// A verified Hesse configuration: 9 points, 12 lines, 3 points per line,
/// 4 lines per point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HesseConfiguration {
    points: [ProjectivePoint; 9],
}

/// Incidence report of a 9-point set: the lines through at least two of
/// the points, each with the indices of the points it contains.
#[derive(Debug, Clone)]
pub struct IncidenceReport {
    pub lines: Vec<(ProjectiveLine, Vec<usize>)>,
    pub valid: bool,
}

/// Checks the Hesse incidence invariants on 9 distinct points: exactly 12
/// connecting lines, each containing exactly 3 of the points, each point
/// lying on exactly 4 of the lines.
pub fn verify_configuration(pts: &[ProjectivePoint; 9]) -> Result<IncidenceReport, GeomError> {
    for i in 0..9 {
        for j in i + 1..9 {
            if pts[i] == pts[j] {
                return Err(GeomError::DuplicatePoint(i, j));
            }
        }
    }
    let mut lines: Vec<(ProjectiveLine, Vec<usize>)> = Vec::new();
    for i in 0..9 {
        for j in i + 1..9 {
            let line = line_through(&pts[i], &pts[j]).expect("distinct points");
            if !lines.iter().any(|(l, _)| *l == line) {
                let members: Vec<usize> =
                    (0..9).filter(|&k| line.contains(&pts[k])).collect();
                lines.push((line, members));
            }
        }
    }
    let twelve = lines.len() == 12;
    let three_per_line = lines.iter().all(|(_, m)| m.len() == 3);
    let four_per_point = (0..9).all(|k| {
        lines.iter().filter(|(_, m)| m.contains(&k)).count() == 4
    });
    Ok(IncidenceReport {
        valid: twelve && three_per_line && four_per_point,
        lines,
    })
}

impl HesseConfiguration {
    pub fn new(points: [ProjectivePoint; 9]) -> Result<Self, GeomError> {
        let report = verify_configuration(&points)?;
        if !report.valid {
            return Err(GeomError::NotAConfiguration(format!(
                "{} connecting lines with point counts {:?}",
                report.lines.len(),
                report.lines.iter().map(|(_, m)| m.len()).collect::<Vec<_>>()
            )));
        }
        Ok(HesseConfiguration { points })
    }

    pub fn points(&self) -> &[ProjectivePoint; 9] {
        &self.points
    }

    pub fn field(&self) -> FieldSpec {
        self.points[0].field()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.iter().any(|q| q == p)
    }
}

/// A primitive cube root of unity in `field`, or the standard error.
fn omega_in(field: FieldSpec) -> Result<Scalar, GeomError> {
    field.primitive_cube_root().map_err(|_| GeomError::NoOmega(field))
}

/// The standard projective frame `(1,0,0), (0,1,0), (0,0,1), (1,1,1)`.
pub fn standard_frame(field: FieldSpec) -> [ProjectivePoint; 4] {
    [
        ProjectivePoint::from_ints(field, [1, 0, 0]),
        ProjectivePoint::from_ints(field, [0, 1, 0]),
        ProjectivePoint::from_ints(field, [0, 0, 1]),
        ProjectivePoint::from_ints(field, [1, 1, 1]),
    ]
}

/// The first-case configuration through the standard frame with fifth
/// point `(0,1,1)` and free parameter `lambda`, built from the
/// construction: the four frame points, the fifth point, then
/// `(1,0,lambda)`, `p = (1,1,lambda)`, `q = (1,1-lambda,1)` and
/// `r = (lambda-1,lambda,0)`.
fn first_case_points(field: FieldSpec, lambda: &Scalar) -> [ProjectivePoint; 9] {
    let s = |n: i64| field.from_int(n);
    let pt = |v: [Scalar; 3]| ProjectivePoint::new(v).expect("construction point is nonzero");
    let frame = standard_frame(field);
    [
        frame[0].clone(),
        frame[1].clone(),
        frame[2].clone(),
        frame[3].clone(),
        pt([s(0), s(1), s(1)]),
        pt([s(1), s(0), lambda.clone()]),
        pt([s(1), s(1), lambda.clone()]),
        pt([s(1), &s(1) - lambda, s(1)]),
        pt([lambda - &s(1), lambda.clone(), s(0)]),
    ]
}

/// The six Hesse configurations through the standard frame, over any field
/// containing a primitive cube root of unity: the three fifth-point cases
/// (obtained from the first case by the coordinate swaps `x<->y` and
/// `x<->z`) times the two roots `lambda in {-w, 1+w}` of
/// `lambda^2 - lambda + 1`.
pub fn configs_through_standard_frame(
    field: FieldSpec,
) -> Result<Vec<HesseConfiguration>, GeomError> {
    let w = omega_in(field)?;
    let lambdas = [w.neg(), &field.one() + &w];
    let perms: [[usize; 3]; 3] = [[0, 1, 2], [1, 0, 2], [2, 1, 0]];
    let mut out = Vec::with_capacity(6);
    for perm in perms {
        for lambda in &lambdas {
            let pts = first_case_points(field, lambda).map(|p| p.permuted(perm));
            out.push(HesseConfiguration::new(pts)?);
        }
    }
    Ok(out)
}

/// Solves for the projectivity taking the standard frame to `pts` and
/// returns its matrix (columns are the suitably rescaled target points).
fn frame_transport(pts: &[ProjectivePoint; 4]) -> Result<Vec<Vec<Scalar>>, GeomError> {
    check_general_position(&pts[..])?;
    let field = pts[0].field();
    // solve [p1 p2 p3] w = p4 via the kernel of the augmented 3x4 matrix
    let rows: Vec<Vec<Scalar>> = (0..3)
        .map(|r| {
            vec![
                pts[0].coords[r].clone(),
                pts[1].coords[r].clone(),
                pts[2].coords[r].clone(),
                pts[3].coords[r].neg(),
            ]
        })
        .collect();
    let kernel = Mat::from_rows(field, rows).kernel_basis();
    assert_eq!(kernel.len(), 1, "independent frame points give a unique solution");
    let k = &kernel[0];
    let t_inv = k[3].inv().expect("general position makes the last coordinate nonzero");
    let w: Vec<Scalar> = (0..3).map(|i| &k[i] * &t_inv).collect();
    Ok((0..3)
        .map(|r| (0..3).map(|c| &pts[c].coords[r] * &w[c]).collect())
        .collect())
}

fn apply_matrix(m: &[Vec<Scalar>], p: &ProjectivePoint) -> ProjectivePoint {
    let field = p.field();
    let coords: [Scalar; 3] = std::array::from_fn(|r| {
        (0..3).fold(field.zero(), |acc, c| &acc + &(&m[r][c] * &p.coords[c]))
    });
    ProjectivePoint::new(coords).expect("projectivity preserves nonzeroness")
}

/// Errors with the first collinear triple among the points, if any.
pub fn check_general_position(pts: &[ProjectivePoint]) -> Result<(), GeomError> {
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i] == pts[j] {
                return Err(GeomError::DuplicatePoint(i, j));
            }
            let line = line_through(&pts[i], &pts[j]).expect("distinct");
            for k in j + 1..pts.len() {
                if line.contains(&pts[k]) {
                    return Err(GeomError::CollinearTriple(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// The six Hesse configurations through four points in general position:
/// the canonical configurations transported by the unique projectivity
/// sending the standard frame to `pts`. Rational input is promoted to the
/// omega extension.
pub fn configs_through(
    pts: &[ProjectivePoint; 4],
) -> Result<Vec<HesseConfiguration>, GeomError> {
    let field = match pts[0].field() {
        FieldSpec::Q => FieldSpec::QOmega,
        f => {
            omega_in(f)?;
            f
        }
    };
    let lifted: [ProjectivePoint; 4] = [
        pts[0].promote(field)?,
        pts[1].promote(field)?,
        pts[2].promote(field)?,
        pts[3].promote(field)?,
    ];
    let m = frame_transport(&lifted)?;
    configs_through_standard_frame(field)?
        .into_iter()
        .map(|cfg| {
            let moved = cfg.points.clone().map(|p| apply_matrix(&m, &p));
            HesseConfiguration::new(moved)
        })
        .collect()
}

/// The nine inflection points of the Fermat cubic `x^3+y^3+z^3`:
/// `(0,1,-w^k)`, `(1,0,-w^k)`, `(1,-w^k,0)` for `k = 0,1,2`.
pub fn fermat_inflection_points(field: FieldSpec) -> Result<[ProjectivePoint; 9], GeomError> {
    let w = omega_in(field)?;
    let mut pts = Vec::with_capacity(9);
    for k in 0..3u32 {
        let m = w.pow(k).neg();
        let z = field.zero();
        let o = field.one();
        pts.push(ProjectivePoint::new([z.clone(), o.clone(), m.clone()]).unwrap());
        pts.push(ProjectivePoint::new([o.clone(), z.clone(), m.clone()]).unwrap());
        pts.push(ProjectivePoint::new([o.clone(), m.clone(), z.clone()]).unwrap());
    }
    Ok(pts.try_into().unwrap())
}

/// All perfect matchings of `{0, ..., 2n-1}` into pairs.
pub fn perfect_matchings(n_points: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n_points % 2 == 0);
    fn rec(left: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if left.is_empty() {
            out.push(acc.clone());
            return;
        }
        let a = left.remove(0);
        for idx in 0..left.len() {
            let b = left.remove(idx);
            acc.push((a, b));
            rec(left, acc, out);
            acc.pop();
            left.insert(idx, b);
        }
        left.insert(0, a);
    }
    let mut left: Vec<usize> = (0..n_points).collect();
    let mut out = Vec::new();
    rec(&mut left, &mut Vec::new(), &mut out);
    out
}

/// The fifteen triangles (unions of three lines, as cubic forms in
/// `x, y, z`) through six points with no three collinear: one per perfect
/// matching of the points into pairs.
pub fn triangles_through(pts: &[ProjectivePoint; 6]) -> Result<Vec<MPoly>, GeomError> {
    check_general_position(&pts[..])?;
    let field = pts[0].field();
    let line_form = |i: usize, j: usize| -> MPoly {
        let l = line_through(&pts[i], &pts[j]).expect("distinct");
        (0..3).fold(MPoly::zero(3, field), |acc, v| {
            &acc + &MPoly::var(3, field, v).scalar_mul(&l.coords[v])
        })
    };
    Ok(perfect_matchings(6)
        .into_iter()
        .map(|matching| {
            matching
                .into_iter()
                .map(|(i, j)| line_form(i, j))
                .fold(MPoly::one(3, field), |acc, l| &acc * &l)
        })
        .collect())
}

/// The pencil of cubics through a Hesse configuration: the kernel of the
/// 9x10 evaluation matrix (rows are the weighted degree-3 monomial values
/// at the points), which must be 2-dimensional.
pub fn pencil_through_configuration(cfg: &HesseConfiguration) -> Result<Pencil, GeomError> {
    let field = cfg.field();
    let rows: Vec<Vec<Scalar>> = cfg
        .points
        .iter()
        .map(|p| {
            (0..10)
                .map(|j| {
                    let [ex, ey, ez] = CUBIC_EXPS[j];
                    let m = &(&p.coords[0].pow(ex) * &p.coords[1].pow(ey))
                        * &p.coords[2].pow(ez);
                    &m * &field.from_int(CUBIC_WEIGHTS[j])
                })
                .collect()
        })
        .collect();
    let kernel = Mat::from_rows(field, rows).kernel_basis();
    if kernel.len() != 2 {
        return Err(GeomError::BadKernel(kernel.len()));
    }
    Pencil::new(9, kernel[0].clone(), kernel[1].clone())
        .map_err(|e| GeomError::NotAConfiguration(format!("degenerate kernel pencil: {e}")))
}

/// The five non-frame points of each of the six configurations exactly as
/// printed in the reference figures (up to the figures' own scaling), over
/// the rational omega extension, in the order produced by
/// [`configs_through_standard_frame`]: case by fifth point, then
/// `lambda = -w` before `lambda = 1 + w`.
pub fn printed_figure_points() -> [[ProjectivePoint; 5]; 6] {
    let field = FieldSpec::QOmega;
    let e = field.omega().expect("omega in QOmega");
    let one = field.one();
    let zero = field.zero();
    let ep1 = &one + &e; // 1 + w, printed as epsilon + 1
    let me = e.neg(); // -w, printed as -epsilon
    let pt = |v: [&Scalar; 3]| {
        ProjectivePoint::new([v[0].clone(), v[1].clone(), v[2].clone()])
            .expect("printed points are nonzero")
    };
    [
        [
            pt([&zero, &one, &one]),
            pt([&one, &ep1, &zero]),
            pt([&one, &zero, &me]),
            pt([&one, &one, &me]),
            pt([&one, &ep1, &one]),
        ],
        [
            pt([&zero, &one, &one]),
            pt([&one, &me, &zero]),
            pt([&one, &zero, &ep1]),
            pt([&one, &one, &ep1]),
            pt([&one, &me, &one]),
        ],
        [
            pt([&one, &zero, &one]),
            pt([&ep1, &one, &zero]),
            pt([&zero, &one, &me]),
            pt([&one, &one, &me]),
            pt([&ep1, &one, &one]),
        ],
        [
            pt([&one, &zero, &one]),
            pt([&me, &one, &zero]),
            pt([&zero, &one, &ep1]),
            pt([&one, &one, &ep1]),
            pt([&me, &one, &one]),
        ],
        [
            pt([&one, &one, &zero]),
            pt([&one, &zero, &ep1]),
            pt([&zero, &one, &me]),
            pt([&one, &ep1, &one]),
            pt([&me, &one, &one]),
        ],
        [
            pt([&one, &one, &zero]),
            pt([&one, &zero, &me]),
            pt([&zero, &one, &ep1]),
            pt([&one, &me, &one]),
            pt([&ep1, &one, &one]),
        ],
    ]
}

/// Regenerates the six configurations from the construction and compares
/// their non-frame points against the printed figures, returning one
/// message per disagreement (empty means the figures check out).
pub fn figure_discrepancies() -> Vec<String> {
    let mut out = Vec::new();
    let configs = match configs_through_standard_frame(FieldSpec::QOmega) {
        Ok(c) => c,
        Err(e) => return vec![format!("regeneration failed: {e}")],
    };
    let frame = standard_frame(FieldSpec::QOmega);
    for (idx, (cfg, fig)) in configs.iter().zip(printed_figure_points().iter()).enumerate() {
        let extra: Vec<&ProjectivePoint> = cfg
            .points
            .iter()
            .filter(|p| !frame.contains(p))
            .collect();
        if extra.len() != 5 {
            out.push(format!(
                "configuration {idx}: {} non-frame points instead of 5",
                extra.len()
            ));
            continue;
        }
        for p in fig {
            if !extra.contains(&p) {
                out.push(format!(
                    "configuration {idx}: printed point {p} not among the regenerated points"
                ));
            }
        }
    }
    out
}

/// Parses the points file format: one point per line, three field elements
/// (integers or `n/d` rationals) separated by whitespace, `#` comments.
pub fn parse_points(src: &str, field: FieldSpec) -> Result<Vec<ProjectivePoint>, GeomError> {
    let mut out = Vec::new();
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(GeomError::PointParse(
                lineno + 1,
                format!("expected 3 coordinates, found {}", parts.len()),
            ));
        }
        let mut coords = Vec::with_capacity(3);
        for part in parts {
            let scalar = match part.split_once('/') {
                Some((n, d)) => {
                    let n: i64 = n.parse().map_err(|_| {
                        GeomError::PointParse(lineno + 1, format!("bad numerator `{n}`"))
                    })?;
                    let d: i64 = d.parse().map_err(|_| {
                        GeomError::PointParse(lineno + 1, format!("bad denominator `{d}`"))
                    })?;
                    field.from_ratio(n, d)
                }
                None => field.from_int(part.parse().map_err(|_| {
                    GeomError::PointParse(lineno + 1, format!("bad integer `{part}`"))
                })?),
            };
            coords.push(scalar);
        }
        out.push(
            ProjectivePoint::new(coords.try_into().unwrap())
                .map_err(|_| GeomError::PointParse(lineno + 1, "zero point".into()))?,
        );
    }
    Ok(out)
}

/// Exhaustive search over `P^2(F_p)`: counts the Hesse configurations
/// containing the standard frame, by completing deficient lines
/// depth-first. Independent of the constructive proof; cross-validates the
/// count 6 for primes `p = 1 mod 3`.
pub fn count_configs_brute_force(p: u64) -> usize {
    let field = FieldSpec::Fp(p);
    // canonical representatives of P^2(F_p)
    let mut pts: Vec<ProjectivePoint> = Vec::new();
    for b in 0..p as i64 {
        for c in 0..p as i64 {
            pts.push(ProjectivePoint::from_ints(field, [1, b, c]));
        }
    }
    for c in 0..p as i64 {
        pts.push(ProjectivePoint::from_ints(field, [0, 1, c]));
    }
    pts.push(ProjectivePoint::from_ints(field, [0, 0, 1]));
    let n = pts.len();
    let index_of = |q: &ProjectivePoint| pts.iter().position(|r| r == q).expect("point listed");

    // incidence tables: the line through each pair, and the points on each line
    let mut lines: Vec<ProjectiveLine> = Vec::new();
    let mut line_points: Vec<Vec<usize>> = Vec::new();
    let mut line_of = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let l = line_through(&pts[i], &pts[j]).expect("distinct");
            let lid = match lines.iter().position(|k| *k == l) {
                Some(lid) => lid,
                None => {
                    lines.push(l.clone());
                    line_points.push((0..n).filter(|&k| l.contains(&pts[k])).collect());
                    lines.len() - 1
                }
            };
            line_of[i][j] = lid;
            line_of[j][i] = lid;
        }
    }

    let frame: Vec<usize> = standard_frame(field).iter().map(|q| index_of(q)).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut in_set = vec![false; n];
    for &f in &frame {
        in_set[f] = true;
    }

    fn dfs(
        set: &mut Vec<usize>,
        in_set: &mut Vec<bool>,
        line_of: &Vec<Vec<usize>>,
        line_points: &Vec<Vec<usize>>,
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        // first line through two set points that still lacks its third
        let mut deficient = None;
        'outer: for a in 0..set.len() {
            for b in a + 1..set.len() {
                let lid = line_of[set[a]][set[b]];
                let cnt = line_points[lid].iter().filter(|&&q| in_set[q]).count();
                if cnt == 2 {
                    deficient = Some(lid);
                    break 'outer;
                }
            }
        }
        match deficient {
            None => {
                if set.len() == 9 {
                    // no deficient lines: check no line carries 4 or more
                    let ok = (0..set.len()).all(|a| {
                        (a + 1..set.len()).all(|b| {
                            line_points[line_of[set[a]][set[b]]]
                                .iter()
                                .filter(|&&q| in_set[q])
                                .count()
                                == 3
                        })
                    });
                    if ok {
                        let mut key = set.clone();
                        key.sort_unstable();
                        found.insert(key);
                    }
                }
            }
            Some(lid) => {
                if set.len() >= 9 {
                    return; // full but incomplete: dead end
                }
                for &q in &line_points[lid] {
                    if !in_set[q] {
                        in_set[q] = true;
                        set.push(q);
                        dfs(set, in_set, line_of, line_points, found);
                        set.pop();
                        in_set[q] = false;
                    }
                }
            }
        }
    }

    let mut set = frame.clone();
    dfs(&mut set, &mut in_set, &line_of, &line_points, &mut found);
    found.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::TernaryCubic;
    use crate::linalg::projectively_equal;
    use crate::pluecker::pluecker_of;
    use crate::sampling::rng_from_seed;
    use crate::varieties::{membership, VarietySystem};
    use rand::Rng;

    const QW: FieldSpec = FieldSpec::QOmega;

    fn w() -> Scalar {
        QW.omega().unwrap()
    }

    fn pt(v: [Scalar; 3]) -> ProjectivePoint {
        ProjectivePoint::new(v).unwrap()
    }

    fn random_point(rng: &mut rand_chacha::ChaCha8Rng) -> ProjectivePoint {
        loop {
            let v: [Scalar; 3] = std::array::from_fn(|_| Scalar::int(rng.gen_range(-9..=9)));
            if let Ok(p) = ProjectivePoint::new(v) {
                return p;
            }
        }
    }

    #[test]
    fn canonical_scaling_identifies_projective_equality() {
        let a = ProjectivePoint::from_ints(FieldSpec::Q, [2, 4, 6]);
        let b = ProjectivePoint::from_ints(FieldSpec::Q, [1, 2, 3]);
        assert_eq!(a, b);
        assert_eq!(a.coords()[0], Scalar::int(1));
        assert!(ProjectivePoint::new(std::array::from_fn(|_| Scalar::int(0))).is_err());
    }

    #[test]
    fn line_through_and_containment() {
        let q = FieldSpec::Q;
        let l = line_through(
            &ProjectivePoint::from_ints(q, [1, 0, 0]),
            &ProjectivePoint::from_ints(q, [0, 1, 0]),
        )
        .unwrap();
        assert!(l.contains(&ProjectivePoint::from_ints(q, [1, 1, 0])));
        assert!(!l.contains(&ProjectivePoint::from_ints(q, [1, 1, 1])));
        let p = ProjectivePoint::from_ints(q, [1, 2, 3]);
        assert!(line_through(&p, &p).is_none());
    }

    #[test]
    fn fermat_inflection_points_form_a_configuration() {
        let pts = fermat_inflection_points(QW).unwrap();
        // oracle: all nine lie on the Fermat cubic and on its Hessian xyz
        for p in &pts {
            let c = p.coords();
            let f = &(&c[0].pow(3) + &c[1].pow(3)) + &c[2].pow(3);
            assert!(f.is_zero());
            assert!((&(&c[0] * &c[1]) * &c[2]).is_zero());
        }
        let report = verify_configuration(&pts).unwrap();
        assert!(report.valid);
        assert_eq!(report.lines.len(), 12);
    }

    #[test]
    fn random_points_are_not_a_configuration() {
        let mut rng = rng_from_seed(3);
        let pts: [ProjectivePoint; 9] = std::array::from_fn(|_| random_point(&mut rng));
        let report = verify_configuration(&pts).unwrap();
        assert!(!report.valid);
    }

    #[test]
    fn duplicate_points_are_an_error() {
        let mut pts = fermat_inflection_points(QW).unwrap();
        pts[1] = pts[0].clone();
        assert!(matches!(
            verify_configuration(&pts),
            Err(GeomError::DuplicatePoint(0, 1))
        ));
    }

    #[test]
    fn six_configs_through_the_standard_frame() {
        let configs = configs_through_standard_frame(QW).unwrap();
        assert_eq!(configs.len(), 6);
        let frame = standard_frame(QW);
        for cfg in &configs {
            for p in &frame {
                assert!(cfg.contains(p), "configuration misses a frame point");
            }
        }
        for i in 0..6 {
            for j in i + 1..6 {
                assert_ne!(
                    {
                        let mut a = configs[i].points().to_vec();
                        a.sort_by_key(|p| format!("{p}"));
                        a
                    },
                    {
                        let mut b = configs[j].points().to_vec();
                        b.sort_by_key(|p| format!("{p}"));
                        b
                    },
                    "configurations {i} and {j} coincide"
                );
            }
        }
    }

    #[test]
    fn no_omega_is_an_error() {
        assert!(matches!(
            configs_through_standard_frame(FieldSpec::Q),
            Err(GeomError::NoOmega(FieldSpec::Q))
        ));
    }

    #[test]
    fn first_case_contains_the_stated_points() {
        let configs = configs_through_standard_frame(QW).unwrap();
        let first = &configs[0]; // fifth point (0,1,1), lambda = -w
        let one = QW.one();
        let zero = QW.zero();
        for p in [
            pt([zero.clone(), one.clone(), one.clone()]),
            pt([one.clone(), zero.clone(), w().neg()]),
            pt([one.clone(), one.clone(), w().neg()]),
            pt([one.clone(), &one + &w(), one.clone()]),
        ] {
            assert!(first.contains(&p), "first-case configuration misses {p}");
        }
    }

    #[test]
    fn recomputed_configs_match_the_printed_figures() {
        // regenerate the six configurations from the construction and
        // compare against the figure coordinates (as sets of canonical
        // points; the figures' own scaling is immaterial)
        let discrepancies = figure_discrepancies();
        assert!(discrepancies.is_empty(), "{discrepancies:?}");
    }

    #[test]
    fn configs_through_the_frame_are_the_canonical_ones() {
        let frame = standard_frame(FieldSpec::Q);
        let moved = configs_through(&frame).unwrap();
        let canonical = configs_through_standard_frame(QW).unwrap();
        assert_eq!(moved.len(), 6);
        for (a, b) in moved.iter().zip(canonical.iter()) {
            for p in b.points() {
                assert!(a.contains(p));
            }
        }
    }

    #[test]
    fn configs_through_a_random_quadruple() {
        let mut rng = rng_from_seed(17);
        let pts: [ProjectivePoint; 4] = loop {
            let cand: [ProjectivePoint; 4] = std::array::from_fn(|_| random_point(&mut rng));
            if check_general_position(&cand).is_ok() {
                break cand;
            }
        };
        let configs = configs_through(&pts).unwrap();
        assert_eq!(configs.len(), 6);
        for cfg in &configs {
            for p in &pts {
                assert!(cfg.contains(&p.promote(QW).unwrap()));
            }
        }
    }

    #[test]
    fn collinear_quadruple_is_an_error() {
        let q = FieldSpec::Q;
        let pts = [
            ProjectivePoint::from_ints(q, [1, 0, 0]),
            ProjectivePoint::from_ints(q, [0, 1, 0]),
            ProjectivePoint::from_ints(q, [1, 1, 0]),
            ProjectivePoint::from_ints(q, [1, 1, 1]),
        ];
        assert_eq!(
            configs_through(&pts).unwrap_err(),
            GeomError::CollinearTriple(0, 1, 2)
        );
    }

    #[test]
    fn fifteen_triangles_through_six_general_points() {
        assert_eq!(perfect_matchings(6).len(), 15); // 5 * 3 * 1
        let q = FieldSpec::Q;
        let pts: [ProjectivePoint; 6] = [
            ProjectivePoint::from_ints(q, [1, 0, 0]),
            ProjectivePoint::from_ints(q, [0, 1, 0]),
            ProjectivePoint::from_ints(q, [0, 0, 1]),
            ProjectivePoint::from_ints(q, [1, 1, 1]),
            ProjectivePoint::from_ints(q, [1, 2, 3]),
            ProjectivePoint::from_ints(q, [1, -1, 2]),
        ];
        let triangles = triangles_through(&pts).unwrap();
        assert_eq!(triangles.len(), 15);
        for t in &triangles {
            assert_eq!(t.total_degree(), 3);
            for p in &pts {
                assert!(t.eval(&p.coords()[..]).is_zero());
            }
        }
        let coeff_vec = |t: &MPoly| -> Vec<Scalar> {
            CUBIC_EXPS.iter().map(|e| t.coeff(&e[..])).collect()
        };
        for i in 0..15 {
            for j in i + 1..15 {
                assert!(
                    !projectively_equal(&coeff_vec(&triangles[i]), &coeff_vec(&triangles[j])),
                    "triangles {i} and {j} coincide"
                );
            }
        }
    }

    #[test]
    fn triangles_with_a_collinear_triple_error() {
        let q = FieldSpec::Q;
        let pts = [
            ProjectivePoint::from_ints(q, [1, 0, 0]),
            ProjectivePoint::from_ints(q, [0, 1, 0]),
            ProjectivePoint::from_ints(q, [1, 1, 0]),
            ProjectivePoint::from_ints(q, [1, 1, 1]),
            ProjectivePoint::from_ints(q, [1, 2, 3]),
            ProjectivePoint::from_ints(q, [1, -1, 2]),
        ];
        assert_eq!(
            triangles_through(&pts).unwrap_err(),
            GeomError::CollinearTriple(0, 1, 2)
        );
    }

    #[test]
    fn fermat_configuration_gives_the_fermat_pencil() {
        let cfg = HesseConfiguration::new(fermat_inflection_points(QW).unwrap()).unwrap();
        let pencil = pencil_through_configuration(&cfg).unwrap();
        let fermat = TernaryCubic::parse("x^3+y^3+z^3", FieldSpec::Q).unwrap();
        let xyz = TernaryCubic::parse("xyz", FieldSpec::Q).unwrap();
        let target = Pencil::new(
            9,
            fermat.coeffs.iter().map(|c| c.promote(QW).unwrap()).collect(),
            xyz.coeffs.iter().map(|c| c.promote(QW).unwrap()).collect(),
        )
        .unwrap();
        assert!(projectively_equal(
            &pluecker_of(&pencil).coords,
            &pluecker_of(&target).coords
        ));
    }

    #[test]
    fn standard_frame_configurations_induce_pencils_in_n() {
        for cfg in configs_through_standard_frame(QW).unwrap() {
            let pencil = pencil_through_configuration(&cfg).unwrap();
            assert!(membership(VarietySystem::n(), &pencil).unwrap());
            // every cubic of the pencil vanishes at all nine points
            for p in cfg.points() {
                for gen in [&pencil.a, &pencil.b] {
                    let val = (0..10).fold(QW.zero(), |acc, j| {
                        let [ex, ey, ez] = CUBIC_EXPS[j];
                        let m = &(&p.coords()[0].pow(ex) * &p.coords()[1].pow(ey))
                            * &p.coords()[2].pow(ez);
                        &acc + &(&(&gen[j] * &m) * &QW.from_int(CUBIC_WEIGHTS[j]))
                    });
                    assert!(val.is_zero());
                }
            }
        }
    }

    #[test]
    fn brute_force_count_over_small_prime_fields() {
        // p = 7 = 1 mod 3: exactly the six configurations
        assert_eq!(count_configs_brute_force(7), 6);
        // p = 5 = 2 mod 3: no cube roots of unity, no configurations
        assert_eq!(count_configs_brute_force(5), 0);
    }

    #[test]
    fn parse_points_format() {
        let src = "# comment\n1 0 0\n0 1 0 # trailing\n1 1/2 -3\n";
        let pts = parse_points(src, FieldSpec::Q).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[2], pt([Scalar::int(1), Scalar::rat(1, 2), Scalar::int(-3)]));
        assert!(parse_points("1 2", FieldSpec::Q).is_err());
    }
}
