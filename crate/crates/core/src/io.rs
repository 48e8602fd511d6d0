//! Points files, geometry exports and analysis report documents.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    BellReport, ContinuityReport, DegreeReport, GibbsReport, ShapeReport, Support,
};
use crate::error::{Error, Result};
use crate::interval::{Bound, IntervalSet};
use crate::rational::{format_significant, parse_rational, to_f64, to_literal, Rational};
use crate::refine::{Grid, Polygon, Topology};

/// Significant digits of decimal endpoints.
pub const DIGITS: usize = 10;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A parsed points file.
#[derive(Debug, Clone, PartialEq)]
pub enum ControlNet {
    Curve(Polygon<Rational>),
    Surface(Grid<Rational>),
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_topology(word: &str, line: usize) -> Result<Topology> {
    match word.trim() {
        "closed" => Ok(Topology::Closed),
        "open" => Ok(Topology::Open),
        other => Err(parse_err(line, format!("unknown topology '{other}'"))),
    }
}

/// Parses a points file.
///
/// ```text
/// # topology: closed
/// x,y
/// 0,0
/// 1/2,1.25
/// ```
///
/// A `# grid: RxC` comment makes it a row-major surface net; its topology
/// may name both directions (`# topology: closed,open` for rows, columns).
pub fn parse_points_csv(text: &str) -> Result<ControlNet> {
    let mut topology = (Topology::Closed, Topology::Closed);
    let mut grid: Option<(usize, usize)> = None;
    let mut dim: Option<usize> = None;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let Some((key, value)) = comment.split_once(':') else {
                continue;
            };
            match key.trim() {
                "topology" => {
                    let words: Vec<&str> = value.split(',').collect();
                    topology = match words.as_slice() {
                        [one] => {
                            let t = parse_topology(one, line_no)?;
                            (t, t)
                        }
                        [rows, cols] => (
                            parse_topology(rows, line_no)?,
                            parse_topology(cols, line_no)?,
                        ),
                        _ => return Err(parse_err(line_no, "expected 'closed', 'open' or a pair")),
                    }
                }
                "grid" => {
                    let dims = value
                        .trim()
                        .split_once(['x', 'X'])
                        .and_then(|(r, c)| Some((r.trim().parse().ok()?, c.trim().parse().ok()?)));
                    grid = Some(dims.ok_or_else(|| parse_err(line_no, "expected '# grid: RxC'"))?);
                }
                _ => {}
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let Some(d) = dim else {
            dim = Some(match fields.as_slice() {
                ["x", "y"] => 2,
                ["x", "y", "z"] => 3,
                _ => return Err(parse_err(line_no, "expected header 'x,y' or 'x,y,z'")),
            });
            continue;
        };
        if fields.len() != d {
            return Err(parse_err(
                line_no,
                format!("expected {d} fields, found {}", fields.len()),
            ));
        }
        let point = fields
            .iter()
            .map(|f| {
                if f.is_empty() {
                    return Err(parse_err(line_no, "empty field"));
                }
                parse_rational(f).map_err(|e| parse_err(line_no, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(point);
    }
    if dim.is_none() {
        return Err(parse_err(1, "missing header"));
    }
    match grid {
        None => Ok(ControlNet::Curve(Polygon::new(points, topology.0))),
        Some((rows, cols)) => {
            if rows * cols != points.len() {
                return Err(parse_err(
                    text.lines().count().max(1),
                    format!(
                        "grid {rows}x{cols} needs {} points, found {}",
                        rows * cols,
                        points.len()
                    ),
                ));
            }
            Ok(ControlNet::Surface(Grid {
                rows,
                cols,
                points,
                row_topology: topology.0,
                col_topology: topology.1,
            }))
        }
    }
}

/// Coordinate rendering for exported files.
pub trait CsvCoord {
    fn literal(&self) -> String;
    fn as_f64(&self) -> f64;
}

impl CsvCoord for Rational {
    fn literal(&self) -> String {
        to_literal(self)
    }
    fn as_f64(&self) -> f64 {
        to_f64(self)
    }
}

impl CsvCoord for f64 {
    fn literal(&self) -> String {
        format!("{self:?}")
    }
    fn as_f64(&self) -> f64 {
        *self
    }
}

fn topology_word(t: Topology) -> &'static str {
    match t {
        Topology::Closed => "closed",
        Topology::Open => "open",
    }
}

fn header(dim: usize) -> &'static str {
    if dim >= 3 {
        "x,y,z"
    } else {
        "x,y"
    }
}

fn push_rows<T: CsvCoord>(out: &mut String, points: &[Vec<T>]) {
    for p in points {
        let fields: Vec<String> = p.iter().map(CsvCoord::literal).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
}

pub fn write_curve_csv<T: CsvCoord>(p: &Polygon<T>) -> String {
    let dim = p.points.first().map_or(2, Vec::len);
    let mut out = format!(
        "# topology: {}\n{}\n",
        topology_word(p.topology),
        header(dim)
    );
    push_rows(&mut out, &p.points);
    out
}

pub fn write_grid_csv<T: CsvCoord>(g: &Grid<T>) -> String {
    let dim = g.points.first().map_or(3, Vec::len);
    let mut out = format!(
        "# grid: {}x{}\n# topology: {},{}\n{}\n",
        g.rows,
        g.cols,
        topology_word(g.row_topology),
        topology_word(g.col_topology),
        header(dim)
    );
    push_rows(&mut out, &g.points);
    out
}

pub fn write_net_csv(net: &ControlNet) -> String {
    match net {
        ControlNet::Curve(p) => write_curve_csv(p),
        ControlNet::Surface(g) => write_grid_csv(g),
    }
}

/// SVG polyline through the points (first two coordinates), with the
/// view box fitted to the bounding box plus a 5% margin.
pub fn write_curve_svg<T: CsvCoord>(p: &Polygon<T>) -> String {
    let mut xy: Vec<(f64, f64)> = p
        .points
        .iter()
        .map(|q| (q[0].as_f64(), q.get(1).map_or(0.0, CsvCoord::as_f64)))
        .collect();
    if p.topology == Topology::Closed {
        if let Some(&first) = xy.first() {
            xy.push(first);
        }
    }
    let (mut x0, mut y0, mut x1, mut y1) = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for &(x, y) in &xy {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if xy.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let (w, h) = ((x1 - x0).max(1e-9), (y1 - y0).max(1e-9));
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = 0.002 * w.max(h);
    // Flip y so the picture is upright.
    let coords: Vec<String> = xy
        .iter()
        .map(|&(x, y)| format!("{x:.6},{:.6}", -y))
        .collect();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        x0 - mx,
        -y1 - my,
        w + 2.0 * mx,
        h + 2.0 * my
    );
    let _ = writeln!(
        out,
        "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{stroke:.6}\" points=\"{}\"/>",
        coords.join(" ")
    );
    out.push_str("</svg>\n");
    out
}

/// Wavefront OBJ: vertices row-major, one quad per grid cell, with
/// wraparound faces along closed directions.
pub fn write_grid_obj<T: CsvCoord>(g: &Grid<T>) -> String {
    let mut out = String::new();
    for p in &g.points {
        let c: Vec<f64> = (0..3)
            .map(|d| p.get(d).map_or(0.0, CsvCoord::as_f64))
            .collect();
        let _ = writeln!(out, "v {:.6} {:.6} {:.6}", c[0], c[1], c[2]);
    }
    let row_cells = match g.row_topology {
        Topology::Closed => g.cols,
        Topology::Open => g.cols.saturating_sub(1),
    };
    let col_cells = match g.col_topology {
        Topology::Closed => g.rows,
        Topology::Open => g.rows.saturating_sub(1),
    };
    let idx = |r: usize, c: usize| (r % g.rows) * g.cols + (c % g.cols) + 1;
    for r in 0..col_cells {
        for c in 0..row_cells {
            let _ = writeln!(
                out,
                "f {} {} {} {}",
                idx(r, c),
                idx(r, c + 1),
                idx(r + 1, c + 1),
                idx(r + 1, c)
            );
        }
    }
    out
}

/// Output kinds understood by the writers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
    Obj,
    Json,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Svg => "svg",
            Format::Obj => "obj",
            Format::Json => "json",
            Format::Text => "text",
        }
    }

    pub fn from_name(name: &str) -> Result<Format> {
        Ok(match name.to_ascii_lowercase().as_str() {
            "csv" => Format::Csv,
            "svg" => Format::Svg,
            "obj" => Format::Obj,
            "json" => Format::Json,
            "text" | "txt" => Format::Text,
            other => return Err(Error::UnsupportedFormat(other.to_string())),
        })
    }

    /// Format implied by a file name's extension.
    pub fn from_path(path: &str) -> Option<Format> {
        let ext = std::path::Path::new(path).extension()?.to_str()?;
        Format::from_name(ext).ok()
    }
}

/// Serialises a refined curve.
pub fn write_curve<T: CsvCoord>(p: &Polygon<T>, format: Format) -> Result<String> {
    match format {
        Format::Csv => Ok(write_curve_csv(p)),
        Format::Svg => Ok(write_curve_svg(p)),
        other => Err(Error::UnsupportedFormat(format!(
            "{} output for a curve",
            other.name()
        ))),
    }
}

/// Serialises a refined surface.
pub fn write_grid<T: CsvCoord>(g: &Grid<T>, format: Format) -> Result<String> {
    match format {
        Format::Csv => Ok(write_grid_csv(g)),
        Format::Obj => Ok(write_grid_obj(g)),
        other => Err(Error::UnsupportedFormat(format!(
            "{} output for a surface",
            other.name()
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeInfo {
    pub n: u32,
    pub points: u32,
    pub arity: u32,
}

impl SchemeInfo {
    pub fn new(n: u32) -> Self {
        SchemeInfo {
            n,
            points: 2 * n + 2,
            arity: 2,
        }
    }
}

/// One endpoint, as a decimal string plus exact data when finite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointDoc {
    pub decimal: String,
    /// `p/q` literal for rational endpoints.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    /// Square-free polynomial with the endpoint as its only root in
    /// `[lo, hi]`, coefficients by ascending power.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lo: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi: Option<String>,
}

impl EndpointDoc {
    pub fn from_bound(b: &Bound) -> Self {
        let decimal = b.decimal(DIGITS);
        let mut doc = EndpointDoc {
            decimal,
            exact: None,
            polynomial: None,
            lo: None,
            hi: None,
        };
        if let Some(r) = b.exact() {
            doc.exact = Some(to_literal(r));
        } else if let Some(e) = b.as_real() {
            doc.polynomial = Some(e.poly.coeffs().iter().map(to_literal).collect());
            doc.lo = Some(to_literal(&e.lo));
            doc.hi = Some(to_literal(&e.hi));
        }
        doc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalDoc {
    pub lo: EndpointDoc,
    pub hi: EndpointDoc,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

pub fn interval_docs(set: &IntervalSet) -> Vec<IntervalDoc> {
    set.intervals()
        .iter()
        .map(|i| IntervalDoc {
            lo: EndpointDoc::from_bound(&i.lo),
            hi: EndpointDoc::from_bound(&i.hi),
            lo_closed: false,
            hi_closed: false,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub label: String,
    #[serde(default)]
    pub intervals: Vec<IntervalDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportRow {
    fn set(label: impl Into<String>, set: &IntervalSet) -> Self {
        ReportRow {
            label: label.into(),
            intervals: interval_docs(set),
            value: None,
            note: None,
        }
    }

    fn value(label: impl Into<String>, value: impl ToString) -> Self {
        ReportRow {
            label: label.into(),
            intervals: Vec::new(),
            value: Some(value.to_string()),
            note: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReportDocument {
    pub tool_version: String,
    pub scheme: SchemeInfo,
    pub analysis: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, i64>,
    pub rows: Vec<ReportRow>,
}

impl AnalysisReportDocument {
    pub fn new(n: u32, analysis: &str) -> Self {
        AnalysisReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            scheme: SchemeInfo::new(n),
            analysis: analysis.to_string(),
            parameters: BTreeMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} | n={} ({}-point scheme)",
            self.analysis, self.scheme.n, self.scheme.points
        );
        for (k, v) in &self.parameters {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
        let width = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for row in &self.rows {
            let mut body = Vec::new();
            if !row.intervals.is_empty() {
                let parts: Vec<String> = row
                    .intervals
                    .iter()
                    .map(|i| format!("({}, {})", i.lo.decimal, i.hi.decimal))
                    .collect();
                body.push(parts.join(" U "));
            }
            if let Some(v) = &row.value {
                body.push(v.clone());
            }
            if let Some(note) = &row.note {
                body.push(note.clone());
            }
            if body.is_empty() {
                body.push("{}".to_string());
            }
            let _ = writeln!(out, "{:width$}  {}", row.label, body.join("  "));
        }
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Text => Ok(self.to_text()),
            other => Err(Error::UnsupportedFormat(format!(
                "{} output for a report",
                other.name()
            ))),
        }
    }
}

pub fn continuity_document(r: &ContinuityReport) -> AnalysisReportDocument {
    let mut doc = AnalysisReportDocument::new(r.n, "continuity");
    doc.parameters.insert("L".into(), r.levels as i64);
    for row in &r.rows {
        let mut out = ReportRow::set(row.label(), &row.set);
        if row.minus_one_only() {
            out.note = Some("alpha=-1 only".into());
        }
        doc.rows.push(out);
    }
    if let Some(o) = r.alpha_minus_one_order {
        doc.rows.push(ReportRow::value("alpha=-1", format!("C{o}")));
    }
    doc
}

pub fn degree_document(n: u32, r: &DegreeReport) -> AnalysisReportDocument {
    let kind = r.kind.to_string();
    let mut doc = AnalysisReportDocument::new(n, &kind);
    doc.rows
        .push(ReportRow::value("all alpha", r.degree_all_alpha));
    doc.rows.push(ReportRow::value(
        format!("alpha={}", to_literal(&r.special_alpha)),
        r.degree_special,
    ));
    doc
}

pub fn gibbs_document(r: &GibbsReport) -> AnalysisReportDocument {
    let mut doc = AnalysisReportDocument::new(r.n, "gibbs");
    doc.parameters.insert("k".into(), r.k as i64);
    let mut row = ReportRow::set("undershoot", &r.interval);
    row.note = Some(
        if r.negative_only() {
            "within alpha<0"
        } else {
            "extends to alpha>=0"
        }
        .into(),
    );
    doc.rows.push(row);
    doc
}

pub fn bell_document(r: &BellReport) -> AnalysisReportDocument {
    let mut doc = AnalysisReportDocument::new(r.n, "bell");
    doc.rows.push(ReportRow::set("positivity", &r.positivity));
    doc.rows
        .push(ReportRow::set("monotone_rise", &r.monotone_rise));
    doc.rows.push(ReportRow::set("bell", &r.bell));
    doc
}

pub fn shape_document(r: &ShapeReport) -> AnalysisReportDocument {
    let mut doc = AnalysisReportDocument::new(r.n, "shape");
    let mut row = ReportRow::set("monotonicity_and_convexity", &r.interval);
    row.note = Some(r.verdict());
    doc.rows.push(row);
    doc.rows.push(ReportRow::value("sum_rule", r.sum_rule));
    doc.rows
        .push(ReportRow::value("square_factor", r.square_factor));
    doc
}

pub fn support_document(s: &Support, levels: &[u32]) -> AnalysisReportDocument {
    let mut doc = AnalysisReportDocument::new(s.n, "support");
    doc.rows.push(ReportRow::value(
        "supp",
        format!("[{}, {}]", -s.half_width, s.half_width),
    ));
    for &k in levels {
        let e = s.level_extent(k);
        doc.rows.push(ReportRow::value(
            format!("level {k}"),
            format!("[{}, {}]", -e, e),
        ));
    }
    doc
}

/// Mask coefficients, symbolic or at a fixed α.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaskDocument {
    pub tool_version: String,
    pub scheme: SchemeInfo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    /// Vertex rule, ascending source index.
    pub vertex: Vec<String>,
    /// Edge rule, ascending source index.
    pub edge: Vec<String>,
    /// Symbol coefficients `a_0 .. a_{4n+2}`.
    pub symbol: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol_decimal: Option<Vec<String>>,
}

impl MaskDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("mask serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "mask | n={} ({}-point scheme)",
            self.scheme.n, self.scheme.points
        );
        if let Some(a) = &self.alpha {
            let _ = write!(out, " alpha={a}");
        }
        out.push('\n');
        let _ = writeln!(out, "vertex  {}", self.vertex.join(", "));
        let _ = writeln!(out, "edge    {}", self.edge.join(", "));
        let _ = writeln!(out, "symbol  {}", self.symbol.join(", "));
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Text => Ok(self.to_text()),
            other => Err(Error::UnsupportedFormat(format!(
                "{} output for a mask",
                other.name()
            ))),
        }
    }
}

pub fn mask_document(n: u32, alpha: Option<&Rational>) -> Result<MaskDocument> {
    let mask = crate::schemes::combined_mask(n)?;
    let scheme = SchemeInfo::new(n);
    Ok(match alpha {
        None => {
            let show = |p: &crate::poly::AlphaPoly| p.to_string();
            MaskDocument {
                tool_version: TOOL_VERSION.to_string(),
                scheme,
                alpha: None,
                vertex: mask.vertex.iter().map(show).collect(),
                edge: mask.edge.iter().map(show).collect(),
                symbol: mask.symbol().dense().iter().map(show).collect(),
                symbol_decimal: None,
            }
        }
        Some(a) => {
            let m = mask.at(a);
            let sym: Vec<Rational> = m
                .symbol()
                .dense()
                .iter()
                .map(|p| p.constant_term())
                .collect();
            MaskDocument {
                tool_version: TOOL_VERSION.to_string(),
                scheme,
                alpha: Some(to_literal(a)),
                vertex: m.vertex.iter().map(to_literal).collect(),
                edge: m.edge.iter().map(to_literal).collect(),
                symbol: sym.iter().map(to_literal).collect(),
                symbol_decimal: Some(sym.iter().map(|r| format_significant(r, DIGITS)).collect()),
            }
        }
    })
}
