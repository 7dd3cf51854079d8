//! Parameter tables for the dual codes: lengths, dimensions, lower bounds
//! and optionally distance searches, one CSV row per degree m.

use std::collections::HashMap;
use std::str::FromStr;

use serde::Deserialize;

use crate::agbuilder::{build_functional_code, chart_translations, line_dual_witness, EvaluationCodeSpec};
use crate::code::{min_distance_isd, weight, Certainty, DistanceResult, IsdOptions};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::picard::{bound_basic, bound_improved, BoundReport, PicardLattice, Theorem};
use crate::projspace::{Surface, SurfaceKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    Q4Quadrics,
    Q8Quadrics,
    Q16Quadrics,
    Q9Cubic,
    Rm,
}

impl Table {
    pub const ALL: [Table; 5] = [Table::Q4Quadrics, Table::Q8Quadrics, Table::Q16Quadrics, Table::Q9Cubic, Table::Rm];

    pub fn name(self) -> &'static str {
        match self {
            Table::Q4Quadrics => "q4-quadrics",
            Table::Q8Quadrics => "q8-quadrics",
            Table::Q16Quadrics => "q16-quadrics",
            Table::Q9Cubic => "q9-cubic",
            Table::Rm => "rm",
        }
    }
}

impl FromStr for Table {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Table::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown table {s}")))
    }
}

/// How much distance work to do per cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    None,
    /// Search for a codeword whose weight meets the lower bound.
    Witness,
    /// Run the exact engine.
    Exact,
}

impl FromStr for DistanceMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(DistanceMode::None),
            "witness" => Ok(DistanceMode::Witness),
            "exact" => Ok(DistanceMode::Exact),
            _ => Err(Error::Unsupported(format!("unknown distance mode {s}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReproduceOptions {
    pub distances: DistanceMode,
    pub budget: u128,
    pub workers: usize,
    /// Required for [`Table::Q9Cubic`].
    pub surface: Option<Surface>,
    /// Best known distances keyed by (q, m).
    pub reference: HashMap<(u32, u32), String>,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            distances: DistanceMode::None,
            budget: 1 << 24,
            workers: 1,
            surface: None,
            reference: HashMap::new(),
        }
    }
}

#[derive(Deserialize)]
struct ReferenceRecord {
    table: String,
    q: u32,
    m: u32,
    best_known: String,
}

/// Reads a reference CSV with header `table,q,m,best_known`, keeping the
/// rows for `table`.
pub fn read_reference(text: &str, table: Table) -> Result<HashMap<(u32, u32), String>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = HashMap::new();
    for (i, rec) in rdr.deserialize::<ReferenceRecord>().enumerate() {
        let rec = rec.map_err(|e| Error::Parse { line: i + 2, msg: e.to_string() })?;
        if rec.table == table.name() {
            out.insert((rec.q, rec.m), rec.best_known);
        }
    }
    Ok(out)
}

/// One surface column of a row.
#[derive(Clone, Debug)]
pub struct Cell {
    pub kind: SurfaceKind,
    pub bound: BoundReport,
    pub distance: Option<DistanceResult>,
}

impl Cell {
    /// `=d` once a codeword of weight equal to the bound is known or the
    /// distance is exact, `>=d` otherwise.
    pub fn marker(&self) -> String {
        let b = self.bound.bound as usize;
        match &self.distance {
            Some(d) if d.is_exact() => format!("={}", d.value.unwrap_or(0)),
            Some(d) if d.upper() == Some(b) => format!("={b}"),
            _ => format!(">={b}"),
        }
    }

    /// False if a witnessed weight falls below the claimed bound.
    pub fn consistent(&self) -> bool {
        match &self.distance {
            Some(d) => d.upper().is_none_or(|u| u >= self.bound.bound as usize),
            None => true,
        }
    }

    fn distance_tag(&self) -> String {
        match &self.distance {
            None => String::new(),
            Some(d) => match (d.certainty, d.value) {
                (_, None) => "none".into(),
                (Certainty::Exact, Some(v)) => format!("exact:{v}"),
                (Certainty::UpperBoundOnly, Some(v)) => format!("upper:{v}"),
                (Certainty::LowerBoundOnly, Some(v)) => format!("lower:{v}"),
                (Certainty::Interval { lo, hi }, _) => format!("interval:{lo}-{hi}"),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub q: u32,
    pub m: u32,
    pub length: usize,
    pub dual_dimension: usize,
    pub cells: Vec<Cell>,
    pub best_known: Option<String>,
}

struct RowSpec {
    m: u32,
    theorem: Theorem,
    /// (largest multiple of H in the class set, multiples of H forming the subset)
    e_override: Option<(i64, Vec<i64>)>,
}

fn rows(ms: impl IntoIterator<Item = u32>, theorem: Theorem) -> Vec<RowSpec> {
    ms.into_iter().map(|m| RowSpec { m, theorem, e_override: None }).collect()
}

fn bound_for(surface: &Surface, q: u32, spec: &RowSpec) -> Result<BoundReport> {
    let lat = surface
        .picard()
        .ok_or_else(|| Error::Unsupported(format!("no lattice for a {} surface", surface.kind())))?;
    match (&spec.theorem, &spec.e_override) {
        (Theorem::Basic, _) => bound_basic(lat, q, spec.m, None),
        (Theorem::Improved, None) => bound_improved(lat, q, spec.m, None, None),
        (Theorem::Improved, Some((top, e))) => {
            let dset: Vec<_> = (1..=*top).map(|a| lat.multiple_of_h(a)).collect();
            let e: Vec<_> = e.iter().map(|&a| lat.multiple_of_h(a)).collect();
            bound_improved(lat, q, spec.m, Some(&dset), Some(&e))
        }
    }
}

fn line_witness(spec: &EvaluationCodeSpec) -> Option<DistanceResult> {
    let q = spec.surface().field().order() as usize;
    let line = spec
        .surface()
        .lines()
        .iter()
        .find(|l| l.points().iter().filter(|p| spec.position(p).is_some()).count() == q)?;
    let w = line_dual_witness(spec, line).ok()?;
    let wt = weight(&w);
    Some(DistanceResult::new(Some(wt), Certainty::UpperBoundOnly, Some(w), 0))
}

fn cell(surface: &Surface, spec_row: &RowSpec, opts: &ReproduceOptions) -> Result<(Cell, usize, usize)> {
    let q = surface.field().order();
    let spec = EvaluationCodeSpec::preset(surface, spec_row.m)?;
    let code = build_functional_code(&spec)?;
    let dual = code.dual();
    let bound = bound_for(surface, q, spec_row)?;
    let distance = match opts.distances {
        DistanceMode::None => None,
        _ if surface.kind() == SurfaceKind::HyperbolicQuadric && opts.distances == DistanceMode::Witness => {
            line_witness(&spec)
        }
        mode => {
            let isd = IsdOptions {
                target: (mode == DistanceMode::Witness).then_some(bound.bound as usize),
                budget: opts.budget,
                workers: opts.workers,
                seed: 0,
                automorphisms: chart_translations(&spec).unwrap_or_default(),
            };
            let mut r = min_distance_isd(&dual, &isd)?;
            r.millis = 0;
            Some(r)
        }
    };
    Ok((Cell { kind: surface.kind(), bound, distance }, spec.length(), dual.dimension()))
}

fn quadric_table(q: u32, ell: Vec<RowSpec>, opts: &ReproduceOptions) -> Result<Vec<TableRow>> {
    let f = Field::of_order(q)?;
    let hyp = Surface::hyperbolic_quadric(&f);
    let ellq = Surface::elliptic_quadric(&f);
    let mut out = Vec::new();
    for spec in ell {
        let (h, n, dd) = cell(&hyp, &RowSpec { m: spec.m, theorem: Theorem::Basic, e_override: None }, opts)?;
        let (e, n2, dd2) = cell(&ellq, &spec, opts)?;
        if (n, dd) != (n2, dd2) {
            return Err(Error::ShapeMismatch(format!("quadric codes differ at m={}: [{n},{dd}] vs [{n2},{dd2}]", spec.m)));
        }
        out.push(TableRow {
            q,
            m: spec.m,
            length: n,
            dual_dimension: dd,
            cells: vec![h, e],
            best_known: opts.reference.get(&(q, spec.m)).cloned(),
        });
    }
    Ok(out)
}

/// Builds the rows of a table.
pub fn reproduce(table: Table, opts: &ReproduceOptions) -> Result<Vec<TableRow>> {
    match table {
        Table::Q4Quadrics => quadric_table(4, rows(1..=2, Theorem::Basic), opts),
        Table::Q8Quadrics => {
            let mut ell = rows(1..=3, Theorem::Basic);
            ell.extend(rows(4..=5, Theorem::Improved));
            // the tabulated subset for m = 6: D = {H..5H}, E = {4H}
            ell.push(RowSpec { m: 6, theorem: Theorem::Improved, e_override: Some((5, vec![4])) });
            quadric_table(8, ell, opts)
        }
        Table::Q16Quadrics => quadric_table(16, rows(8..=10, Theorem::Improved), opts),
        Table::Q9Cubic => {
            let s = opts
                .surface
                .as_ref()
                .ok_or_else(|| Error::InvalidSurface("the q9-cubic table needs a cubic surface file".into()))?;
            if s.kind() != SurfaceKind::CubicNoLines || s.field().order() != 9 {
                return Err(Error::InvalidSurface(format!(
                    "expected a cubic without rational lines over GF(9), got a {} over GF({})",
                    s.kind(),
                    s.field().order()
                )));
            }
            let mut specs = rows([2, 3, 4], Theorem::Basic);
            specs.extend(rows([6], Theorem::Improved));
            specs
                .into_iter()
                .map(|spec| {
                    let (c, n, dd) = cell(s, &spec, opts)?;
                    Ok(TableRow {
                        q: 9,
                        m: spec.m,
                        length: n,
                        dual_dimension: dd,
                        cells: vec![c],
                        best_known: opts.reference.get(&(9, spec.m)).cloned(),
                    })
                })
                .collect()
        }
        Table::Rm => {
            let mut out = Vec::new();
            for q in [4u32, 5, 7, 8] {
                let plane = Surface::projective_plane(&Field::of_order(q)?);
                for spec in rows(1..=2 * q - 3, Theorem::Improved) {
                    let (c, n, dd) = cell(&plane, &spec, opts)?;
                    out.push(TableRow {
                        q,
                        m: spec.m,
                        length: n,
                        dual_dimension: dd,
                        cells: vec![c],
                        best_known: opts.reference.get(&(q, spec.m)).cloned(),
                    });
                }
            }
            Ok(out)
        }
    }
}

fn column_name(kind: SurfaceKind) -> &'static str {
    match kind {
        SurfaceKind::HyperbolicQuadric => "hyperbolic",
        SurfaceKind::EllipticQuadric => "elliptic",
        SurfaceKind::ProjectivePlane => "plane",
        _ => "cubic",
    }
}

/// CSV with one marker column per surface (`=d` or `>=d`) followed by the
/// bound, the theorem and certification flag, and the distance search.
pub fn to_csv(rows: &[TableRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let kinds: Vec<SurfaceKind> = rows.first().map(|r| r.cells.iter().map(|c| c.kind).collect()).unwrap_or_default();
    let mut header = vec!["q".to_string(), "m".into(), "length".into(), "dual_dimension".into()];
    for k in &kinds {
        let c = column_name(*k);
        header.push(c.to_string());
        for suffix in ["bound", "theorem", "certified", "distance", "consistent"] {
            header.push(format!("{c}_{suffix}"));
        }
    }
    header.push("best_known".into());
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        let mut rec = vec![r.q.to_string(), r.m.to_string(), r.length.to_string(), r.dual_dimension.to_string()];
        for c in &r.cells {
            rec.push(c.marker());
            rec.push(c.bound.bound.to_string());
            rec.push(match c.bound.theorem {
                Theorem::Basic => "basic".into(),
                Theorem::Improved => "improved".into(),
            });
            rec.push(c.bound.certified.to_string());
            rec.push(c.distance_tag());
            rec.push(c.consistent().to_string());
        }
        rec.push(r.best_known.clone().unwrap_or_default());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Lattice used by the bounds for a surface kind without a surface file.
pub fn preset_lattice(kind: SurfaceKind) -> Result<PicardLattice> {
    match kind {
        SurfaceKind::ProjectivePlane => Ok(PicardLattice::projective_plane()),
        SurfaceKind::HyperbolicQuadric => Ok(PicardLattice::hyperbolic_quadric()),
        SurfaceKind::EllipticQuadric => Ok(PicardLattice::quadric()),
        SurfaceKind::CubicNoLines => Ok(PicardLattice::cubic()),
        SurfaceKind::CubicWithLines => Ok(PicardLattice::cubic_with_lines(&[vec![false]])),
        SurfaceKind::Custom => Err(Error::Unsupported("no lattice for a custom surface".into())),
    }
}
