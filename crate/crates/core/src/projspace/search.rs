use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldRef};

use super::point::enumerate_points;
use super::poly::{monomials, HomogeneousPoly, Term};
use super::smooth::SmoothnessReport;
use super::surface::{Surface, SurfaceKind};

/// Sampling family for [`find_cubic_no_lines`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicFamily {
    /// All 20 coefficients uniform.
    Generic,
    /// `N(X1,X2,X3) + X0 Q(X0..X3)` with N the norm form of GF(q^3)/GF(q)
    /// and Q a uniform quadric. The plane X0 = 0 then carries no rational
    /// point, so the chart off it is the whole surface.
    EmptyPlane,
}

#[derive(Clone, Debug)]
pub struct CubicSearchReport {
    pub surface: Surface,
    pub attempts: u64,
    pub seed: u64,
    pub family: CubicFamily,
    /// For [`CubicFamily::EmptyPlane`], the plane X0 = 0.
    pub empty_plane: Option<HomogeneousPoly>,
    pub smoothness: SmoothnessReport,
}

/// Norm form of GF(q^3)/GF(q) in the basis 1, θ, θ^2 as a cubic in three
/// variables. It has no nontrivial zero over GF(q).
pub fn norm_form(field: &FieldRef) -> Result<HomogeneousPoly> {
    let ext = field.extension(3)?;
    let embed = field.embed_into(&ext)?;
    let back: HashMap<Elem, Elem> = embed.iter().enumerate().map(|(i, &e)| (e, i as Elem)).collect();
    let q = field.order() as u64;
    let theta = ext.generator();
    // product of the three conjugate linear forms X1 + θ' X2 + θ'^2 X3
    let mut prod: HashMap<[u8; 3], Elem> = HashMap::from([([0, 0, 0], 1)]);
    for s in 0..3u32 {
        let t = ext.pow(theta, q.pow(s));
        let lin = [([1u8, 0, 0], 1), ([0, 1, 0], t), ([0, 0, 1], ext.mul(t, t))];
        let mut next: HashMap<[u8; 3], Elem> = HashMap::new();
        for (e, c) in &prod {
            for (le, lc) in &lin {
                let key = [e[0] + le[0], e[1] + le[1], e[2] + le[2]];
                let v = next.entry(key).or_insert(0);
                *v = ext.add(*v, ext.mul(*c, *lc));
            }
        }
        prod = next;
    }
    let mut terms = Vec::new();
    for (e, c) in prod {
        let coeff = *back
            .get(&c)
            .ok_or_else(|| Error::InvalidPolynomial("norm form coefficient outside the base field".into()))?;
        terms.push(Term { exps: vec![0, e[0], e[1], e[2]], coeff });
    }
    HomogeneousPoly::new(field, 4, 3, terms)
}

/// Seeded search for a cubic surface with no rational lines and exactly
/// q^2+2q+1 rational points that passes the smoothness check up to GF(q^2).
/// Candidates are filtered by point count, then lines, then smoothness.
pub fn find_cubic_no_lines(
    field: &FieldRef,
    budget: u64,
    seed: u64,
    family: CubicFamily,
) -> Result<CubicSearchReport> {
    let q = field.order() as usize;
    let target = q * q + 2 * q + 1;
    let monos = monomials(4, 3);
    let points = enumerate_points(field, 3);
    // values of every cubic monomial at every point of P^3
    let table: Vec<Vec<Elem>> = points
        .iter()
        .map(|p| {
            let x = p.coords();
            monos
                .iter()
                .map(|e| (0..4).fold(1, |acc, i| field.mul(acc, field.pow(x[i], e[i] as u64))))
                .collect()
        })
        .collect();
    let norm = match family {
        CubicFamily::EmptyPlane => Some(norm_form(field)?),
        CubicFamily::Generic => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![0 as Elem; monos.len()];
    for attempt in 1..=budget {
        match &norm {
            None => {
                for c in coeffs.iter_mut() {
                    *c = rng.gen_range(0..q) as Elem;
                }
            }
            Some(n) => {
                coeffs.iter_mut().for_each(|c| *c = 0);
                for t in n.terms() {
                    let i = monos.iter().position(|e| *e == t.exps).expect("cubic monomial");
                    coeffs[i] = t.coeff;
                }
                // X0 * Q: every monomial with a positive X0 exponent
                for (i, e) in monos.iter().enumerate() {
                    if e[0] > 0 {
                        coeffs[i] = rng.gen_range(0..q) as Elem;
                    }
                }
            }
        }
        let count = table
            .iter()
            .filter(|row| row.iter().zip(&coeffs).fold(0, |acc, (&m, &c)| field.add(acc, field.mul(m, c))) == 0)
            .count();
        if count != target {
            continue;
        }
        let terms: Vec<Term> = monos
            .iter()
            .zip(&coeffs)
            .map(|(e, &c)| Term { exps: e.clone(), coeff: c })
            .collect();
        let eq = HomogeneousPoly::new(field, 4, 3, terms)?;
        let surface = Surface::from_equation(eq)?;
        if surface.kind() != SurfaceKind::CubicNoLines {
            continue;
        }
        let smoothness = surface.smoothness_check(2)?;
        if !smoothness.passed() {
            continue;
        }
        let empty_plane = match family {
            CubicFamily::EmptyPlane => {
                let x0 = HomogeneousPoly::linear_form(field, &[1, 0, 0, 0]);
                debug_assert!(surface.points_on(&x0)?.is_empty());
                Some(x0)
            }
            CubicFamily::Generic => None,
        };
        return Ok(CubicSearchReport { surface, attempts: attempt, seed, family, empty_plane, smoothness });
    }
    Err(Error::NotFound(budget))
}
