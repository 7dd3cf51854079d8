use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};

/// A monomial exponent vector with its nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub exps: Vec<u8>,
    pub coeff: Elem,
}

/// Homogeneous polynomial in `nvars` variables. Terms are kept sorted in
/// the fixed monomial order of [`monomials`], with distinct exponent vectors
/// and nonzero coefficients.
#[derive(Clone)]
pub struct HomogeneousPoly {
    field: FieldRef,
    nvars: usize,
    degree: u32,
    terms: Vec<Term>,
}

impl PartialEq for HomogeneousPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.degree == other.degree
            && self.terms == other.terms
            && *self.field == *other.field
    }
}

impl fmt::Debug for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mono: Vec<String> = t
                    .exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("X{i}") } else { format!("X{i}^{e}") })
                    .collect();
                match (t.coeff, mono.is_empty()) {
                    (c, true) => c.to_string(),
                    (1, false) => mono.join("*"),
                    (c, false) => format!("{c}*{}", mono.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exponent vectors of all degree-`d` monomials in `nvars` variables, in
/// graded lexicographic order (`X0^d` first, `X_{n-1}^d` last).
pub fn monomials(nvars: usize, d: u32) -> Vec<Vec<u8>> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u8);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    }
    out
}

impl HomogeneousPoly {
    /// Normalizes the term list: merges repeated monomials, drops zero
    /// coefficients, sorts. Every exponent vector must sum to `degree`.
    pub fn new(field: &FieldRef, nvars: usize, degree: u32, terms: Vec<Term>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidPolynomial("no variables".into()));
        }
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.exps.len() != nvars {
                return Err(Error::InvalidPolynomial(format!(
                    "exponent vector {:?} has {} entries, expected {nvars}",
                    t.exps,
                    t.exps.len()
                )));
            }
            if t.exps.iter().map(|&e| e as u32).sum::<u32>() != degree {
                return Err(Error::InvalidPolynomial(format!(
                    "monomial {:?} is not of degree {degree}",
                    t.exps
                )));
            }
            if t.coeff as u32 >= field.order() {
                return Err(Error::InvalidPolynomial(format!("{} is not a field element", t.coeff)));
            }
            match merged.iter_mut().find(|m| m.exps == t.exps) {
                Some(m) => m.coeff = field.add(m.coeff, t.coeff),
                None => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        // descending lexicographic on exponents == graded lex at fixed degree
        merged.sort_by(|a, b| b.exps.cmp(&a.exps));
        Ok(HomogeneousPoly { field: Arc::clone(field), nvars, degree, terms: merged })
    }

    pub fn zero(field: &FieldRef, nvars: usize, degree: u32) -> Self {
        HomogeneousPoly { field: Arc::clone(field), nvars, degree, terms: Vec::new() }
    }

    /// `sum coeffs[i] X_i`
    pub fn linear_form(field: &FieldRef, coeffs: &[Elem]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut exps = vec![0u8; n];
                exps[i] = 1;
                Term { exps, coeff: c }
            })
            .collect();
        Self::new(field, n, 1, terms).expect("well-formed linear form")
    }

    /// The single monomial with exponents `exps`.
    pub fn monomial(field: &FieldRef, exps: &[u8]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self::new(field, exps.len(), degree, vec![Term { exps: exps.to_vec(), coeff: 1 }])
            .expect("well-formed monomial")
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients of a linear form, indexed by variable.
    pub fn linear_coeffs(&self) -> Option<Vec<Elem>> {
        if self.degree != 1 {
            return None;
        }
        let mut out = vec![0; self.nvars];
        for t in &self.terms {
            let i = t.exps.iter().position(|&e| e == 1).expect("linear monomial");
            out[i] = t.coeff;
        }
        Some(out)
    }

    pub fn eval(&self, x: &[Elem]) -> Elem {
        eval_terms(&self.field, &self.terms, x, self.degree)
    }

    /// Evaluates in an extension field, mapping coefficients through `embed`.
    pub fn eval_in(&self, ext: &Field, embed: &[Elem], x: &[Elem]) -> Elem {
        let mut acc = 0;
        for t in &self.terms {
            let mut v = embed[t.coeff as usize];
            for (&xi, &e) in x.iter().zip(&t.exps) {
                if e > 0 {
                    v = ext.mul(v, ext.pow(xi, e as u64));
                }
            }
            acc = ext.add(acc, v);
        }
        acc
    }

    /// Formal partial derivative with respect to `X_i`.
    pub fn partial(&self, i: usize) -> Self {
        let f = &self.field;
        if self.degree == 0 {
            return Self::zero(f, self.nvars, 0);
        }
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exps[i] > 0)
            .map(|t| {
                let mut exps = t.exps.clone();
                let k = exps[i];
                exps[i] -= 1;
                Term { exps, coeff: f.mul(t.coeff, f.from_int(k as i64)) }
            })
            .collect();
        Self::new(f, self.nvars, self.degree - 1, terms).expect("derivative stays homogeneous")
    }

    pub fn gradient_at(&self, x: &[Elem]) -> Vec<Elem> {
        (0..self.nvars).map(|i| self.partial(i).eval(x)).collect()
    }

    /// Surface file body: header `q=<p>^<e>`, `vars=<n>`, then one line per
    /// term `coeff exp0 exp1 ...` in monomial order.
    pub fn to_surface_text(&self) -> String {
        let mut s = format!(
            "q={}^{}\nvars={}\n",
            self.field.characteristic(),
            self.field.degree(),
            self.nvars
        );
        for t in &self.terms {
            s.push_str(&t.coeff.to_string());
            for e in &t.exps {
                s.push(' ');
                s.push_str(&e.to_string());
            }
            s.push('\n');
        }
        s
    }

    /// Parses a surface file. Returns the field and the equation; an empty
    /// term list stands for the projective plane (no equation).
    pub fn from_surface_text(text: &str) -> Result<(FieldRef, usize, Option<HomogeneousPoly>)> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, qline) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing q= header".into() })?;
        let qspec = qline
            .strip_prefix("q=")
            .ok_or(Error::Parse { line: ln, msg: "expected q=<p>^<e>".into() })?;
        let (p, e) = qspec
            .split_once('^')
            .and_then(|(p, e)| Some((p.parse::<u32>().ok()?, e.parse::<u32>().ok()?)))
            .ok_or(Error::Parse { line: ln, msg: format!("bad field spec {qspec}") })?;
        let field = Field::shared(p, e)?;
        let (ln, vline) = lines.next().ok_or(Error::Parse { line: ln + 1, msg: "missing vars= header".into() })?;
        let nvars: usize = vline
            .strip_prefix("vars=")
            .and_then(|v| v.parse().ok())
            .ok_or(Error::Parse { line: ln, msg: "expected vars=<n>".into() })?;
        let mut terms = Vec::new();
        let mut degree = None;
        for (ln, line) in lines {
            let nums: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|err| Error::Parse { line: ln, msg: err.to_string() })?;
            if nums.len() != nvars + 1 {
                return Err(Error::Parse { line: ln, msg: format!("expected {} integers", nvars + 1) });
            }
            if nums[0] >= field.order() {
                return Err(Error::Parse { line: ln, msg: format!("coefficient {} out of range", nums[0]) });
            }
            let exps: Vec<u8> = nums[1..].iter().map(|&e| e as u8).collect();
            let d: u32 = nums[1..].iter().sum();
            if *degree.get_or_insert(d) != d {
                return Err(Error::Parse { line: ln, msg: "terms of different degrees".into() });
            }
            terms.push(Term { exps, coeff: nums[0] as Elem });
        }
        let poly = match degree {
            Some(d) => Some(Self::new(&field, nvars, d, terms)?),
            None => None,
        };
        Ok((field, nvars, poly))
    }
}

pub(crate) fn eval_terms(f: &Field, terms: &[Term], x: &[Elem], degree: u32) -> Elem {
    // powers[i][k] = x_i^k
    let d = degree as usize;
    let mut powers = vec![1 as Elem; x.len() * (d + 1)];
    for (i, &xi) in x.iter().enumerate() {
        for k in 1..=d {
            powers[i * (d + 1) + k] = f.mul(powers[i * (d + 1) + k - 1], xi);
        }
    }
    let mut acc = 0;
    for t in terms {
        let mut v = t.coeff;
        for (i, &e) in t.exps.iter().enumerate() {
            if e > 0 {
                v = f.mul(v, powers[i * (d + 1) + e as usize]);
            }
        }
        acc = f.add(acc, v);
    }
    acc
}
