use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::linalg::Matrix;

use super::point::{point_count, ProjectivePoint};

/// A rational line of P^r spanned by the two rows of its reduced echelon
/// basis. `points` holds its q+1 rational points in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveLine {
    basis: [ProjectivePoint; 2],
    points: Vec<ProjectivePoint>,
}

impl ProjectiveLine {
    /// The line through two distinct points.
    pub fn through(field: &FieldRef, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::ShapeMismatch("points of different ambient spaces".into()));
        }
        let m = Matrix::from_rows(field, &[a.coords().to_vec(), b.coords().to_vec()])?;
        let rr = m.rref();
        if rr.rank != 2 {
            return Err(Error::ShapeMismatch("a line needs two distinct points".into()));
        }
        Ok(Self::from_rref_rows(field, rr.matrix.row(0).to_vec(), rr.matrix.row(1).to_vec()))
    }

    fn from_rref_rows(field: &Field, u: Vec<Elem>, v: Vec<Elem>) -> Self {
        let mut points = Vec::with_capacity(field.order() as usize + 1);
        points.push(ProjectivePoint::from_canonical(v.clone()));
        for t in field.elements() {
            let w: Vec<Elem> = u.iter().zip(&v).map(|(&a, &b)| field.add(a, field.mul(t, b))).collect();
            points.push(ProjectivePoint::from_canonical(w));
        }
        points.sort();
        ProjectiveLine {
            basis: [ProjectivePoint::from_canonical(u), ProjectivePoint::from_canonical(v)],
            points,
        }
    }

    pub fn basis(&self) -> &[ProjectivePoint; 2] {
        &self.basis
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Whether two rational lines share a rational point. Distinct lines
    /// defined over GF(q) that meet do so in a rational point.
    pub fn meets(&self, other: &ProjectiveLine) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.points.len() && j < other.points.len() {
            match self.points[i].cmp(&other.points[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// Reduced echelon bases `(u, v)` of all lines of P^r, in pivot order.
pub(crate) fn line_bases(field: &Field, r: usize) -> Vec<(Vec<Elem>, Vec<Elem>)> {
    let q = field.order() as usize;
    let mut out = Vec::new();
    for i in 0..=r {
        for j in i + 1..=r {
            // free slots: row 0 at columns > i except j, row 1 at columns > j
            let free0: Vec<usize> = (i + 1..=r).filter(|&c| c != j).collect();
            let free1: Vec<usize> = (j + 1..=r).collect();
            let nfree = free0.len() + free1.len();
            for code in 0..q.pow(nfree as u32) {
                let mut u = vec![0 as Elem; r + 1];
                let mut v = vec![0 as Elem; r + 1];
                u[i] = 1;
                v[j] = 1;
                let mut c = code;
                for &col in free0.iter().rev() {
                    u[col] = (c % q) as Elem;
                    c /= q;
                }
                for &col in free1.iter().rev() {
                    v[col] = (c % q) as Elem;
                    c /= q;
                }
                out.push((u, v));
            }
        }
    }
    out
}

/// Number of lines of P^3(GF(q)): `(q^2+1)(q^2+q+1)`.
pub fn line_count(q: u32) -> usize {
    let q = q as usize;
    (q * q + 1) * (q * q + q + 1)
}

/// All lines of P^3(GF(q)), each once.
pub fn enumerate_lines(field: &Field) -> Vec<ProjectiveLine> {
    let out: Vec<ProjectiveLine> = line_bases(field, 3)
        .into_iter()
        .map(|(u, v)| ProjectiveLine::from_rref_rows(field, u, v))
        .collect();
    debug_assert_eq!(out.len(), line_count(field.order()));
    debug_assert!(out.iter().all(|l| l.points.len() <= point_count(field.order(), 3)));
    out
}

/// Lines of P^r all of whose rational points pass `on_surface`.
pub(crate) fn lines_where(field: &Field, r: usize, mut on_surface: impl FnMut(&[Elem]) -> bool) -> Vec<ProjectiveLine> {
    let mut out = Vec::new();
    let mut w = vec![0 as Elem; r + 1];
    'lines: for (u, v) in line_bases(field, r) {
        if !on_surface(&v) {
            continue;
        }
        for t in field.elements() {
            for (k, x) in w.iter_mut().enumerate() {
                *x = field.add(u[k], field.mul(t, v[k]));
            }
            if !on_surface(&w) {
                continue 'lines;
            }
        }
        out.push(ProjectiveLine::from_rref_rows(field, u, v));
    }
    out
}
