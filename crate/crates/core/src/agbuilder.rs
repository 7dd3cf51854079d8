//! Functional codes on surfaces: evaluate degree-m forms at the rational
//! points of an affine chart.

use std::collections::HashMap;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldRef};
use crate::linalg::{dot, Matrix};
use crate::projspace::{
    monomials, HomogeneousPoly, ProjectiveLine, ProjectivePoint, Surface, SurfaceKind,
};

/// The hyperplane (line, for P^2) whose complement is the chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartChoice {
    /// Tangent plane section at a surface point.
    Tangent(ProjectivePoint),
    /// Explicit linear form, by coefficients.
    Linear(Vec<Elem>),
}

/// Surface, degree m and chart. Δ is the list of chart points, each scaled
/// so the chart form takes the value 1.
#[derive(Clone, Debug)]
pub struct EvaluationCodeSpec {
    surface: Surface,
    m: u32,
    chart: ChartChoice,
    form: Vec<Elem>,
    points: Vec<Vec<Elem>>,
    index: HashMap<ProjectivePoint, usize>,
}

/// All degree-m monomials in r+1 variables, graded lexicographic.
pub fn monomial_basis(field: &FieldRef, r: usize, m: u32) -> Vec<HomogeneousPoly> {
    monomials(r + 1, m).iter().map(|e| HomogeneousPoly::monomial(field, e)).collect()
}

/// Dimension of the space of polynomials of degree at most m in two
/// variables, as functions on GF(q)^2.
pub fn rm_dimension(q: u32, m: u32) -> usize {
    let q = q as usize;
    let m = m as usize;
    (0..q).map(|i| (0..q).filter(|j| i + j <= m).count()).sum()
}

impl EvaluationCodeSpec {
    pub fn new(surface: &Surface, m: u32, chart: ChartChoice) -> Result<Self> {
        let field = surface.field();
        let q = field.order();
        match surface.kind() {
            SurfaceKind::ProjectivePlane if m > 2 * q - 3 => {
                return Err(Error::DegreeOutOfRange { m, reason: format!("the plane code needs m <= 2q-3 = {}", 2 * q - 3) });
            }
            k if (k.is_quadric() || k.is_cubic()) && m + 2 > q => {
                return Err(Error::DegreeOutOfRange { m, reason: format!("{k} codes need m <= q-2 = {}", q as i64 - 2) });
            }
            _ => {}
        }
        let form_poly = match &chart {
            ChartChoice::Tangent(p) => surface.tangent_plane_section(p)?,
            ChartChoice::Linear(c) => {
                if c.len() != surface.ambient_dim() + 1 {
                    return Err(Error::InvalidChart(format!(
                        "linear form needs {} coefficients",
                        surface.ambient_dim() + 1
                    )));
                }
                HomogeneousPoly::linear_form(field, c)
            }
        };
        let chart_points = surface.affine_chart(&form_poly)?;
        if chart_points.is_empty() {
            return Err(Error::EmptyEvaluationSet);
        }
        let form = form_poly.linear_coeffs().expect("linear");
        let mut index = HashMap::with_capacity(chart_points.len());
        let points = chart_points
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                let s = field.inv(dot(field, &form, p.coords())).expect("chart point");
                let v = p.coords().iter().map(|&x| field.mul(x, s)).collect();
                index.insert(p, i);
                v
            })
            .collect();
        Ok(EvaluationCodeSpec { surface: surface.clone(), m, chart, form, points, index })
    }

    /// The chart used for the table presets: the tangent plane at the
    /// fixed point for quadrics, X0 = 0 for the plane, and for cubics the
    /// first plane missing every rational point (else the tangent plane at
    /// the first rational point).
    pub fn default_chart(surface: &Surface) -> Result<ChartChoice> {
        match surface.kind() {
            SurfaceKind::ProjectivePlane => Ok(ChartChoice::Linear(vec![1, 0, 0])),
            SurfaceKind::HyperbolicQuadric | SurfaceKind::EllipticQuadric => surface
                .default_chart_point()
                .map(ChartChoice::Tangent)
                .ok_or_else(|| Error::InvalidChart("no default chart point".into())),
            _ => {
                if let Some(h) = surface.find_empty_plane() {
                    return Ok(ChartChoice::Linear(h.linear_coeffs().expect("linear")));
                }
                surface
                    .points()
                    .iter()
                    .find(|p| surface.tangent_plane_section(p).is_ok())
                    .cloned()
                    .map(ChartChoice::Tangent)
                    .ok_or_else(|| Error::InvalidChart("no smooth rational point".into()))
            }
        }
    }

    pub fn preset(surface: &Surface, m: u32) -> Result<Self> {
        Self::new(surface, m, Self::default_chart(surface)?)
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn chart(&self) -> &ChartChoice {
        &self.chart
    }

    /// Coefficients of the chart linear form.
    pub fn chart_form(&self) -> &[Elem] {
        &self.form
    }

    /// Δ in order, each point scaled so the chart form equals 1.
    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    /// Position of a surface point in Δ.
    pub fn position(&self, p: &ProjectivePoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The dimension the code must have, where a closed form applies.
    pub fn expected_dimension(&self) -> Option<usize> {
        let m = self.m as usize;
        let q = self.surface.field().order();
        match self.surface.kind() {
            SurfaceKind::ProjectivePlane => Some(rm_dimension(q, self.m)),
            k if k.is_quadric() => Some((m + 1) * (m + 1)),
            k if k.is_cubic() => Some((3 * m * m + 3 * m + 2) / 2),
            _ => None,
        }
    }

    /// Monomial evaluations: one row per degree-m monomial, one column per
    /// point of Δ.
    pub fn evaluation_matrix(&self) -> Matrix {
        let field = self.surface.field();
        let basis = monomial_basis(field, self.surface.ambient_dim(), self.m);
        let n = self.points.len();
        let mut data = Vec::with_capacity(basis.len() * n);
        for mono in &basis {
            data.extend(self.points.iter().map(|p| mono.eval(p)));
        }
        Matrix::new(field, basis.len(), n, data).expect("consistent shape")
    }
}

/// The code spanned by the evaluation matrix. Fails if its dimension
/// differs from the closed form for the surface kind.
pub fn build_functional_code(spec: &EvaluationCodeSpec) -> Result<LinearCode> {
    let code = LinearCode::from_generator(&spec.evaluation_matrix())?;
    if let Some(expected) = spec.expected_dimension() {
        if code.dimension() != expected {
            return Err(Error::DimensionMismatch { rank: code.dimension(), expected });
        }
    }
    Ok(code)
}

/// Reed-Muller type code: polynomials of degree at most m on GF(q)^2.
pub fn rm_code(field: &FieldRef, m: u32) -> Result<LinearCode> {
    let plane = Surface::projective_plane(field);
    build_functional_code(&EvaluationCodeSpec::new(&plane, m, ChartChoice::Linear(vec![1, 0, 0]))?)
}

/// Affine coordinates of a chart point and its inverse, for the default
/// charts of the presets.
struct Parametrization {
    to_xy: fn(&[Elem]) -> (Elem, Elem),
    from_xy: Box<dyn Fn(Elem, Elem) -> Vec<Elem>>,
}

fn parametrization(spec: &EvaluationCodeSpec) -> Result<Parametrization> {
    let s = spec.surface();
    let f = s.field().clone();
    let tangent_form = || -> Result<Vec<Elem>> {
        let p = s.default_chart_point().ok_or_else(|| Error::InvalidChart("no default chart point".into()))?;
        Ok(s.tangent_plane_section(&p)?.linear_coeffs().expect("linear"))
    };
    let same_chart = |form: Vec<Elem>| {
        let mut a = form;
        let mut b = spec.form.clone();
        crate::projspace::canonicalize(&f, &mut a) && crate::projspace::canonicalize(&f, &mut b) && a == b
    };
    match s.kind() {
        SurfaceKind::ProjectivePlane if same_chart(vec![1, 0, 0]) => Ok(Parametrization {
            to_xy: |p| (p[1], p[2]),
            from_xy: Box::new(|x, y| vec![1, x, y]),
        }),
        SurfaceKind::HyperbolicQuadric if same_chart(tangent_form()?) => {
            // points (xy, x, y, 1) off the tangent plane X3 = 0
            Ok(Parametrization {
                to_xy: |p| (p[1], p[2]),
                from_xy: Box::new(move |x, y| vec![f.mul(x, y), x, y, 1]),
            })
        }
        SurfaceKind::EllipticQuadric if same_chart(tangent_form()?) => {
            // points (1, φ(x, y), x, y) off the tangent plane X0 = 0
            let (b, c) = Surface::elliptic_form(&f);
            Ok(Parametrization {
                to_xy: |p| (p[2], p[3]),
                from_xy: Box::new(move |x, y| {
                    let phi = f.add(f.add(f.mul(x, x), f.mul(b, f.mul(x, y))), f.mul(c, f.mul(y, y)));
                    vec![1, phi, x, y]
                }),
            })
        }
        k => Err(Error::Unsupported(format!("no translation group known for this chart of a {k}"))),
    }
}

/// Coordinate permutations of Δ induced by the translations
/// (x, y) -> (x + a, y) and (x, y) -> (x, y + a), with a running over an
/// additive basis of GF(q). They generate all q^2 translations of the
/// chart, a group acting transitively on Δ. Only the default charts of
/// the plane and the quadrics are supported.
pub fn chart_translations(spec: &EvaluationCodeSpec) -> Result<Vec<Vec<usize>>> {
    let par = parametrization(spec)?;
    let f = spec.surface().field();
    let (p, e) = (f.characteristic(), f.degree());
    let basis: Vec<Elem> = (0..e).map(|i| p.pow(i) as Elem).collect();
    let mut out = Vec::new();
    for axis in 0..2 {
        for &a in &basis {
            let mut perm = Vec::with_capacity(spec.length());
            for pt in &spec.points {
                let (x, y) = (par.to_xy)(pt);
                let (x2, y2) = if axis == 0 { (f.add(x, a), y) } else { (x, f.add(y, a)) };
                let img = ProjectivePoint::new(f, &(par.from_xy)(x2, y2))?;
                let j = spec
                    .position(&img)
                    .ok_or_else(|| Error::InvalidChart(format!("translate {img} left the chart")))?;
                perm.push(j);
            }
            out.push(perm);
        }
    }
    Ok(out)
}

/// A dual codeword of weight m+2 supported on m+2 chart points of a line
/// contained in the surface. With the points written A + tB (B on the
/// chart hyperplane), the coefficients are `prod_{j != i} (t_i - t_j)^-1`,
/// which annihilate every polynomial of degree at most m in t.
pub fn line_dual_witness(spec: &EvaluationCodeSpec, line: &ProjectiveLine) -> Result<Vec<Elem>> {
    let f = spec.surface().field();
    let need = spec.m() as usize + 2;
    let on_chart: Vec<&ProjectivePoint> = line.points().iter().filter(|p| spec.position(p).is_some()).collect();
    if on_chart.len() < need || !line.points().iter().all(|p| spec.surface().contains(p)) {
        return Err(Error::InsufficientPoints { available: on_chart.len(), needed: need });
    }
    let a = &spec.points[spec.position(on_chart[0]).expect("chart point")];
    let v = line
        .points()
        .iter()
        .find(|p| *p != on_chart[0])
        .expect("a line has at least three points")
        .coords();
    let lv = dot(f, &spec.form, v);
    // B = l(v) A - v lies on the chart hyperplane
    let b: Vec<Elem> = a.iter().zip(v).map(|(&ai, &vi)| f.sub(f.mul(lv, ai), vi)).collect();
    let ts: Vec<Elem> = f.elements().take(need).collect();
    let mut word = vec![0 as Elem; spec.length()];
    for (i, &ti) in ts.iter().enumerate() {
        let mut lambda = 1;
        for (j, &tj) in ts.iter().enumerate() {
            if i != j {
                lambda = f.mul(lambda, f.inv(f.sub(ti, tj))?);
            }
        }
        let pt: Vec<Elem> = a.iter().zip(&b).map(|(&ai, &bi)| f.add(ai, f.mul(ti, bi))).collect();
        let pos = spec
            .position(&ProjectivePoint::new(f, &pt)?)
            .ok_or_else(|| Error::InvalidChart("line point outside the chart".into()))?;
        word[pos] = lambda;
    }
    Ok(word)
}
