use serde::Serialize;

use crate::error::Result;
use crate::gf::{Elem, Field};

use super::point::enumerate_points;
use super::surface::Surface;

/// A common zero of F and its partial derivatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularWitness {
    /// Degree k of the field GF(q^k) holding `coords`.
    pub ext_degree: u32,
    /// With `exact`, the four coordinates of the singular point over
    /// GF(q^k). Otherwise `(x0:x1:x2)`: a singular point lies over it,
    /// with its last coordinate in a further extension.
    pub coords: Vec<Elem>,
    pub exact: bool,
}

/// Result of a bounded search for singular points. A pass only means no
/// singular point was found over the extensions searched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub max_ext_degree: u32,
    pub partial: bool,
    pub singular: Option<SingularWitness>,
}

impl SmoothnessReport {
    pub fn passed(&self) -> bool {
        self.singular.is_none()
    }
}

// Univariate polynomials, lowest coefficient first, no trailing zeros.

fn trim(a: &mut Vec<Elem>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn rem(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]).expect("trimmed divisor");
    while r.len() > db {
        let top = r.len() - 1;
        let c = f.mul(r[top], lead_inv);
        for (i, &bi) in b.iter().enumerate() {
            let k = top - db + i;
            r[k] = f.sub(r[k], f.mul(c, bi));
        }
        trim(&mut r);
    }
    r
}

fn gcd(f: &Field, mut a: Vec<Elem>, mut b: Vec<Elem>) -> Vec<Elem> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn horner(f: &Field, a: &[Elem], t: Elem) -> Elem {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, t), c))
}

struct Prepared {
    /// per polynomial: (coefficient in the extension, exponents of X0..X2, exponent of X3)
    terms: Vec<Vec<(Elem, [u8; 3], u8)>>,
    degree: Vec<usize>,
}

impl Surface {
    /// Searches for common zeros of F and its partials over GF(q^k) for
    /// k = 1..=max_ext_degree. For k > 1 every point whose projection from
    /// (0:0:0:1) is defined over GF(q^k) is covered.
    pub fn smoothness_check(&self, max_ext_degree: u32) -> Result<SmoothnessReport> {
        let mut report = SmoothnessReport { max_ext_degree, partial: true, singular: None };
        let Some(eq) = self.equation() else {
            return Ok(report);
        };
        let base = self.field();
        let mut polys = vec![eq.clone()];
        polys.extend((0..4).map(|i| eq.partial(i)));

        // the centre of projection is rational; test it directly
        let apex = [0, 0, 0, 1];
        if polys.iter().all(|g| g.eval(&apex) == 0) {
            report.singular = Some(SingularWitness { ext_degree: 1, coords: apex.to_vec(), exact: true });
            return Ok(report);
        }

        for k in 1..=max_ext_degree.max(1) {
            let ext = if k == 1 { (**base).clone() } else { base.extension(k)? };
            let embed = base.embed_into(&ext)?;
            let prepared = Prepared {
                terms: polys
                    .iter()
                    .map(|g| {
                        g.terms()
                            .iter()
                            .map(|t| (embed[t.coeff as usize], [t.exps[0], t.exps[1], t.exps[2]], t.exps[3]))
                            .collect()
                    })
                    .collect(),
                degree: polys.iter().map(|g| g.degree() as usize).collect(),
            };
            if let Some(w) = search_over(&ext, &prepared, k) {
                report.singular = Some(w);
                return Ok(report);
            }
        }
        Ok(report)
    }
}

fn search_over(ext: &Field, prep: &Prepared, k: u32) -> Option<SingularWitness> {
    let dmax = prep.degree.iter().copied().max().unwrap_or(0);
    let mut pw = vec![[1 as Elem; 3]; dmax + 1];
    for base_pt in enumerate_points(ext, 2) {
        let x = base_pt.coords();
        for e in 1..=dmax {
            for i in 0..3 {
                pw[e][i] = ext.mul(pw[e - 1][i], x[i]);
            }
        }
        let mut g: Vec<Elem> = Vec::new();
        for (terms, &d) in prep.terms.iter().zip(&prep.degree) {
            let mut u = vec![0 as Elem; d + 1];
            for &(c, a, e) in terms {
                let v = ext.mul(ext.mul(c, pw[a[0] as usize][0]), ext.mul(pw[a[1] as usize][1], pw[a[2] as usize][2]));
                u[e as usize] = ext.add(u[e as usize], v);
            }
            g = gcd(ext, g, u);
            if g.len() == 1 {
                break;
            }
        }
        if g.len() == 1 {
            continue;
        }
        let mut coords = x.to_vec();
        if g.is_empty() {
            // every polynomial vanishes along the whole line
            coords.push(0);
            return Some(SingularWitness { ext_degree: k, coords, exact: true });
        }
        match ext.elements().find(|&t| horner(ext, &g, t) == 0) {
            Some(t) => {
                coords.push(t);
                return Some(SingularWitness { ext_degree: k, coords, exact: true });
            }
            None => return Some(SingularWitness { ext_degree: k, coords, exact: false }),
        }
    }
    None
}
