use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Which preset family a lattice belongs to. Drives the choice of point
/// bounds in [`crate::picard::theta_upper`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeKind {
    ProjectivePlane,
    /// Rank one, generated by H; the elliptic quadric.
    Quadric,
    HyperbolicQuadric,
    /// Cubic surface without rational lines, H only.
    Cubic,
    CubicWithLines,
}

/// Integer coefficient vector over a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DivisorClass(Vec<i64>);

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        DivisorClass(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.0.len(), rhs.0.len(), "classes of different lattices");
        DivisorClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.0.len(), rhs.0.len(), "classes of different lattices");
        DivisorClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// Intersection form on a set of generators of the Picard group, with the
/// canonical and hyperplane classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardLattice {
    kind: LatticeKind,
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
    canonical: DivisorClass,
    hyperplane: DivisorClass,
}

impl PicardLattice {
    pub fn new(
        kind: LatticeKind,
        labels: Vec<String>,
        gram: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        hyperplane: Vec<i64>,
    ) -> Result<Self> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::RankMismatch { expected: n, got: gram.len() });
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::ShapeMismatch("intersection matrix is not symmetric".into()));
                }
            }
        }
        for v in [&canonical, &hyperplane] {
            if v.len() != n {
                return Err(Error::RankMismatch { expected: n, got: v.len() });
            }
        }
        Ok(PicardLattice {
            kind,
            labels,
            gram,
            canonical: DivisorClass(canonical),
            hyperplane: DivisorClass(hyperplane),
        })
    }

    /// H^2 = 1, K = -3H.
    pub fn projective_plane() -> Self {
        Self::new(LatticeKind::ProjectivePlane, vec!["H".into()], vec![vec![1]], vec![-3], vec![1]).unwrap()
    }

    /// H^2 = 2, K = -2H.
    pub fn quadric() -> Self {
        Self::new(LatticeKind::Quadric, vec!["H".into()], vec![vec![2]], vec![-2], vec![1]).unwrap()
    }

    /// Basis E, F of the two rulings: E^2 = F^2 = 0, E.F = 1, H = E + F.
    pub fn hyperbolic_quadric() -> Self {
        Self::new(
            LatticeKind::HyperbolicQuadric,
            vec!["E".into(), "F".into()],
            vec![vec![0, 1], vec![1, 0]],
            vec![-2, -2],
            vec![1, 1],
        )
        .unwrap()
    }

    /// H^2 = 3, K = -H.
    pub fn cubic() -> Self {
        Self::new(LatticeKind::Cubic, vec!["H".into()], vec![vec![3]], vec![-1], vec![1]).unwrap()
    }

    /// Generators H, L_1..L_r for a cubic containing r rational lines.
    /// `meets[i][j]` says whether lines i and j intersect.
    pub fn cubic_with_lines(meets: &[Vec<bool>]) -> Self {
        let r = meets.len();
        let mut gram = vec![vec![0i64; r + 1]; r + 1];
        gram[0][0] = 3;
        for i in 0..r {
            gram[0][i + 1] = 1;
            gram[i + 1][0] = 1;
            for j in 0..r {
                gram[i + 1][j + 1] = if i == j { -1 } else { meets[i][j] as i64 };
            }
        }
        let mut labels = vec!["H".to_string()];
        labels.extend((1..=r).map(|i| format!("L{i}")));
        let mut canonical = vec![0; r + 1];
        canonical[0] = -1;
        let mut hyperplane = vec![0; r + 1];
        hyperplane[0] = 1;
        Self::new(LatticeKind::CubicWithLines, labels, gram, canonical, hyperplane).unwrap()
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn hyperplane(&self) -> &DivisorClass {
        &self.hyperplane
    }

    pub fn class(&self, coeffs: Vec<i64>) -> Result<DivisorClass> {
        if coeffs.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: coeffs.len() });
        }
        Ok(DivisorClass(coeffs))
    }

    /// The i-th generator.
    pub fn generator(&self, i: usize) -> DivisorClass {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        DivisorClass(v)
    }

    /// a·H
    pub fn multiple_of_h(&self, a: i64) -> DivisorClass {
        a * &self.hyperplane
    }

    /// Intersection number D1·D2.
    pub fn pair(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        for d in [d1, d2] {
            if d.rank() != self.rank() {
                return Err(Error::RankMismatch { expected: self.rank(), got: d.rank() });
            }
        }
        let mut s = 0;
        for (i, a) in d1.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in d2.0.iter().enumerate() {
                s += a * self.gram[i][j] * b;
            }
        }
        Ok(s)
    }

    /// Arithmetic genus `1 + D·(D+K)/2` of a curve in class D.
    pub fn adjunction_genus(&self, d: &DivisorClass) -> Result<i64> {
        let t = self.pair(d, &(d + &self.canonical))?;
        if t % 2 != 0 {
            return Err(Error::ParityViolation(t));
        }
        Ok(1 + t / 2)
    }

    /// If `d` is a multiple a·H of the hyperplane class, returns a.
    pub fn as_multiple_of_h(&self, d: &DivisorClass) -> Option<i64> {
        let h = &self.hyperplane;
        let i = h.0.iter().position(|&c| c != 0)?;
        if d.0[i] % h.0[i] != 0 {
            return None;
        }
        let a = d.0[i] / h.0[i];
        (a * h == *d).then_some(a)
    }

    /// Human-readable form such as `3H` or `E` or `H+L2`.
    pub fn describe(&self, d: &DivisorClass) -> String {
        if let Some(a) = self.as_multiple_of_h(d) {
            if self.rank() > 1 || self.labels[0] == "H" {
                return match a {
                    0 => "0".into(),
                    1 => "H".into(),
                    -1 => "-H".into(),
                    a => format!("{a}H"),
                };
            }
        }
        let mut s = String::new();
        for (c, label) in d.0.iter().zip(&self.labels) {
            match *c {
                0 => continue,
                1 if s.is_empty() => s.push_str(label),
                1 => s += &format!("+{label}"),
                -1 => s += &format!("-{label}"),
                c if c > 0 && !s.is_empty() => s += &format!("+{c}{label}"),
                c => s += &format!("{c}{label}"),
            }
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

impl fmt::Display for PicardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pic<{}>", self.labels.join(","))
    }
}
