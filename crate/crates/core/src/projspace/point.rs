use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// A point of P^r over GF(q) in canonical form: the first nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint(Vec<Elem>);

impl ProjectivePoint {
    /// Canonicalizes `coords`; fails on the zero vector.
    pub fn new(field: &Field, coords: &[Elem]) -> Result<ProjectivePoint> {
        let mut v = coords.to_vec();
        if !canonicalize(field, &mut v) {
            return Err(Error::InvalidPolynomial("the zero vector is not a projective point".into()));
        }
        Ok(ProjectivePoint(v))
    }

    pub(crate) fn from_canonical(coords: Vec<Elem>) -> ProjectivePoint {
        debug_assert_eq!(coords.iter().find(|&&c| c != 0), Some(&1));
        ProjectivePoint(coords)
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    /// Dimension r of the ambient P^r.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    fn lead(&self) -> usize {
        self.0.iter().position(|&c| c != 0).unwrap_or(self.0.len())
    }

    /// Position in [`enumerate_points`] order.
    pub fn index(&self, q: u32) -> usize {
        point_index(q, &self.0)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Canonical order: by position of the leading 1, then lexicographically.
/// This is the order of [`enumerate_points`].
impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lead().cmp(&other.lead()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Scales `v` so its first nonzero entry is 1; returns false for zero.
pub fn canonicalize(field: &Field, v: &mut [Elem]) -> bool {
    let Some(lead) = v.iter().position(|&c| c != 0) else {
        return false;
    };
    if v[lead] != 1 {
        let inv = field.inv(v[lead]).expect("nonzero");
        for c in &mut v[lead..] {
            *c = field.mul(*c, inv);
        }
    }
    true
}

/// `(q^{r+1} − 1)/(q − 1)`
pub fn point_count(q: u32, r: usize) -> usize {
    (0..=r).map(|j| (q as usize).pow(j as u32)).sum()
}

/// Index of a canonical coordinate vector in enumeration order.
pub fn point_index(q: u32, coords: &[Elem]) -> usize {
    let r = coords.len() - 1;
    let lead = coords.iter().position(|&c| c != 0).expect("nonzero point");
    let offset: usize = (0..lead).map(|j| (q as usize).pow((r - j) as u32)).sum();
    let tail = coords[lead + 1..].iter().fold(0usize, |acc, &c| acc * q as usize + c as usize);
    offset + tail
}

/// All points of P^r(GF(q)) in canonical order: leading-1 position first,
/// then the trailing coordinates lexicographically.
pub fn enumerate_points(field: &Field, r: usize) -> Vec<ProjectivePoint> {
    let q = field.order() as usize;
    let mut out = Vec::with_capacity(point_count(field.order(), r));
    for lead in 0..=r {
        let free = r - lead;
        let total = q.pow(free as u32);
        for code in 0..total {
            let mut v = vec![0 as Elem; r + 1];
            v[lead] = 1;
            let mut c = code;
            for j in (lead + 1..=r).rev() {
                v[j] = (c % q) as Elem;
                c /= q;
            }
            out.push(ProjectivePoint(v));
        }
    }
    out
}
