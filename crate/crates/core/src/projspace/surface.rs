use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::linalg::dot;
use crate::picard::PicardLattice;

use super::line::{lines_where, ProjectiveLine};
use super::point::{enumerate_points, point_index, ProjectivePoint};
use super::poly::{HomogeneousPoly, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    ProjectivePlane,
    HyperbolicQuadric,
    EllipticQuadric,
    CubicWithLines,
    CubicNoLines,
    Custom,
}

impl SurfaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::ProjectivePlane => "p2",
            SurfaceKind::HyperbolicQuadric => "hyperbolic-quadric",
            SurfaceKind::EllipticQuadric => "elliptic-quadric",
            SurfaceKind::CubicWithLines => "cubic-with-lines",
            SurfaceKind::CubicNoLines => "cubic-no-lines",
            SurfaceKind::Custom => "custom",
        }
    }

    pub fn is_quadric(self) -> bool {
        matches!(self, SurfaceKind::HyperbolicQuadric | SurfaceKind::EllipticQuadric)
    }

    pub fn is_cubic(self) -> bool {
        matches!(self, SurfaceKind::CubicWithLines | SurfaceKind::CubicNoLines)
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SurfaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "p2" | "plane" | "projective-plane" => SurfaceKind::ProjectivePlane,
            "hyperbolic-quadric" | "hyperbolic" => SurfaceKind::HyperbolicQuadric,
            "elliptic-quadric" | "elliptic" => SurfaceKind::EllipticQuadric,
            "cubic-with-lines" => SurfaceKind::CubicWithLines,
            "cubic-no-lines" => SurfaceKind::CubicNoLines,
            "custom" => SurfaceKind::Custom,
            _ => return Err(Error::Unsupported(format!("unknown surface kind {s}"))),
        })
    }
}

/// A surface in P^2 or P^3 with its rational points and rational lines
/// computed once at construction.
#[derive(Clone)]
pub struct Surface {
    field: FieldRef,
    kind: SurfaceKind,
    equation: Option<HomogeneousPoly>,
    points: Vec<ProjectivePoint>,
    lines: Vec<ProjectiveLine>,
    picard: Option<PicardLattice>,
}

impl fmt::Debug for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Surface")
            .field("field", &self.field)
            .field("kind", &self.kind)
            .field("equation", &self.equation)
            .field("points", &self.points.len())
            .field("lines", &self.lines.len())
            .finish()
    }
}

/// Least `(b, c)` such that `t^2 + b t + c` has no root in the field.
fn least_irreducible_quadratic(f: &Field) -> (Elem, Elem) {
    for b in f.elements() {
        for c in f.elements() {
            if f.elements().all(|t| f.add(f.mul(t, f.add(t, b)), c) != 0) {
                return (b, c);
            }
        }
    }
    unreachable!("every finite field has an irreducible quadratic")
}

impl Surface {
    /// P^2 itself.
    pub fn projective_plane(field: &FieldRef) -> Surface {
        Surface {
            field: Arc::clone(field),
            kind: SurfaceKind::ProjectivePlane,
            equation: None,
            points: enumerate_points(field, 2),
            lines: Vec::new(),
            picard: Some(PicardLattice::projective_plane()),
        }
    }

    /// `X0 X3 - X1 X2`
    pub fn hyperbolic_quadric(field: &FieldRef) -> Surface {
        let m1 = field.neg(1);
        let f = HomogeneousPoly::new(
            field,
            4,
            2,
            vec![Term { exps: vec![1, 0, 0, 1], coeff: 1 }, Term { exps: vec![0, 1, 1, 0], coeff: m1 }],
        )
        .unwrap();
        Self::with_kind(f, SurfaceKind::HyperbolicQuadric).expect("preset is valid")
    }

    /// `X0 X1 - (X2^2 + b X2 X3 + c X3^2)` with the least irreducible `(b, c)`.
    pub fn elliptic_quadric(field: &FieldRef) -> Surface {
        let (b, c) = least_irreducible_quadratic(field);
        let m1 = field.neg(1);
        let f = HomogeneousPoly::new(
            field,
            4,
            2,
            vec![
                Term { exps: vec![1, 1, 0, 0], coeff: 1 },
                Term { exps: vec![0, 0, 2, 0], coeff: m1 },
                Term { exps: vec![0, 0, 1, 1], coeff: field.neg(b) },
                Term { exps: vec![0, 0, 0, 2], coeff: field.neg(c) },
            ],
        )
        .unwrap();
        Self::with_kind(f, SurfaceKind::EllipticQuadric).expect("preset is valid")
    }

    /// The irreducible binary form used by [`Surface::elliptic_quadric`],
    /// as `(b, c)` in `x^2 + b x y + c y^2`.
    pub fn elliptic_form(field: &Field) -> (Elem, Elem) {
        least_irreducible_quadratic(field)
    }

    /// Builds the surface `F = 0` in P^3 and classifies it from its degree,
    /// point count and rational lines. Smoothness is not checked here; see
    /// [`Surface::smoothness_check`].
    pub fn from_equation(equation: HomogeneousPoly) -> Result<Surface> {
        if equation.nvars() != 4 {
            return Err(Error::InvalidSurface(format!(
                "expected an equation in 4 variables, got {}",
                equation.nvars()
            )));
        }
        if equation.is_zero() || equation.degree() == 0 {
            return Err(Error::InvalidSurface("zero or constant equation".into()));
        }
        let field = Arc::clone(equation.field());
        let q = field.order();
        let all = enumerate_points(&field, 3);
        let mut on = vec![false; all.len()];
        let mut points = Vec::new();
        for (i, p) in all.into_iter().enumerate() {
            if equation.eval(p.coords()) == 0 {
                on[i] = true;
                points.push(p);
            }
        }
        let lines = lines_where(&field, 3, |x| on[point_index(q, x)]);
        let qq = q as usize;
        let kind = match equation.degree() {
            2 if points.len() == (qq + 1) * (qq + 1) && lines.len() == 2 * (qq + 1) => {
                SurfaceKind::HyperbolicQuadric
            }
            2 if points.len() == qq * qq + 1 && lines.is_empty() => SurfaceKind::EllipticQuadric,
            // a smooth cubic carries at most 27 lines
            3 if (1..=27).contains(&lines.len()) => SurfaceKind::CubicWithLines,
            3 if lines.is_empty() && points.len() == qq * qq + 2 * qq + 1 => SurfaceKind::CubicNoLines,
            _ => SurfaceKind::Custom,
        };
        let picard = match kind {
            SurfaceKind::HyperbolicQuadric => Some(PicardLattice::hyperbolic_quadric()),
            SurfaceKind::EllipticQuadric => Some(PicardLattice::quadric()),
            SurfaceKind::CubicNoLines => Some(PicardLattice::cubic()),
            SurfaceKind::CubicWithLines => {
                let meets: Vec<Vec<bool>> =
                    lines.iter().map(|a| lines.iter().map(|b| a != b && a.meets(b)).collect()).collect();
                Some(PicardLattice::cubic_with_lines(&meets))
            }
            _ => None,
        };
        Ok(Surface { field, kind, equation: Some(equation), points, lines, picard })
    }

    /// Like [`Surface::from_equation`], failing unless the classification
    /// is `expected`.
    pub fn with_kind(equation: HomogeneousPoly, expected: SurfaceKind) -> Result<Surface> {
        let s = Self::from_equation(equation)?;
        if s.kind != expected {
            return Err(Error::InvalidSurface(format!(
                "expected a {expected}, found {} ({} points, {} lines)",
                s.kind,
                s.points.len(),
                s.lines.len()
            )));
        }
        Ok(s)
    }

    /// Preset by kind; cubics have no preset equation.
    pub fn preset(kind: SurfaceKind, field: &FieldRef) -> Result<Surface> {
        match kind {
            SurfaceKind::ProjectivePlane => Ok(Self::projective_plane(field)),
            SurfaceKind::HyperbolicQuadric => Ok(Self::hyperbolic_quadric(field)),
            SurfaceKind::EllipticQuadric => Ok(Self::elliptic_quadric(field)),
            k => Err(Error::Unsupported(format!("no preset equation for {k}; supply a surface file"))),
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn equation(&self) -> Option<&HomogeneousPoly> {
        self.equation.as_ref()
    }

    /// 2 for the plane, 3 otherwise.
    pub fn ambient_dim(&self) -> usize {
        if self.equation.is_some() {
            3
        } else {
            2
        }
    }

    /// Rational points in canonical order.
    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// Rational lines contained in the surface; empty for the plane.
    pub fn lines(&self) -> &[ProjectiveLine] {
        &self.lines
    }

    pub fn picard(&self) -> Option<&PicardLattice> {
        self.picard.as_ref()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        match &self.equation {
            Some(f) => p.dim() == 3 && f.eval(p.coords()) == 0,
            None => p.dim() == 2,
        }
    }

    /// The point whose tangent plane gives the default chart of a quadric.
    pub fn default_chart_point(&self) -> Option<ProjectivePoint> {
        let c = match self.kind {
            SurfaceKind::HyperbolicQuadric => vec![1, 0, 0, 0],
            SurfaceKind::EllipticQuadric => vec![0, 1, 0, 0],
            _ => return None,
        };
        let p = ProjectivePoint::new(&self.field, &c).ok()?;
        self.contains(&p).then_some(p)
    }

    /// `sum dF/dX_i (P) X_i`
    pub fn tangent_plane_section(&self, p: &ProjectivePoint) -> Result<HomogeneousPoly> {
        let f = self
            .equation
            .as_ref()
            .ok_or_else(|| Error::InvalidChart("the plane has no tangent plane section".into()))?;
        if !self.contains(p) {
            return Err(Error::InvalidChart(format!("{p} is not on the surface")));
        }
        let grad = f.gradient_at(p.coords());
        if grad.iter().all(|&g| g == 0) {
            return Err(Error::SingularPoint(p.to_string()));
        }
        Ok(HomogeneousPoly::linear_form(&self.field, &grad))
    }

    fn check_hyperplane(&self, h: &HomogeneousPoly) -> Result<Vec<Elem>> {
        let coeffs = h
            .linear_coeffs()
            .ok_or_else(|| Error::InvalidChart(format!("{h} is not a linear form")))?;
        if coeffs.len() != self.ambient_dim() + 1 {
            return Err(Error::InvalidChart(format!("{h} has the wrong number of variables")));
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::InvalidChart("zero linear form".into()));
        }
        Ok(coeffs)
    }

    /// Surface points on the hyperplane `h = 0`.
    pub fn points_on(&self, h: &HomogeneousPoly) -> Result<Vec<ProjectivePoint>> {
        let a = self.check_hyperplane(h)?;
        Ok(self.points.iter().filter(|p| dot(&self.field, &a, p.coords()) == 0).cloned().collect())
    }

    /// Surface points off the hyperplane `h = 0`, in canonical order.
    pub fn affine_chart(&self, h: &HomogeneousPoly) -> Result<Vec<ProjectivePoint>> {
        let a = self.check_hyperplane(h)?;
        Ok(self.points.iter().filter(|p| dot(&self.field, &a, p.coords()) != 0).cloned().collect())
    }

    /// First plane, in canonical order of its coefficient vector, that
    /// contains no rational point of the surface.
    pub fn find_empty_plane(&self) -> Option<HomogeneousPoly> {
        let r = self.ambient_dim();
        enumerate_points(&self.field, r)
            .into_iter()
            .find(|a| self.points.iter().all(|p| dot(&self.field, a.coords(), p.coords()) != 0))
            .map(|a| HomogeneousPoly::linear_form(&self.field, a.coords()))
    }

    /// Surface file text. The plane is written with `vars=3` and no terms.
    pub fn to_text(&self) -> String {
        match &self.equation {
            Some(f) => f.to_surface_text(),
            None => format!(
                "q={}^{}\nvars=3\n",
                self.field.characteristic(),
                self.field.degree()
            ),
        }
    }

    pub fn from_text(text: &str) -> Result<Surface> {
        let (field, nvars, poly) = HomogeneousPoly::from_surface_text(text)?;
        match (nvars, poly) {
            (3, None) => Ok(Self::projective_plane(&field)),
            (4, Some(f)) => Self::from_equation(f),
            (n, _) => Err(Error::InvalidSurface(format!("unsupported surface file with vars={n}"))),
        }
    }
}
