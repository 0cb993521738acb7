//! File formats: regions as JSON, lines and results as CSV, and a versioned
//! JSON container for built clippers.

use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::Result;
use serde::{Deserialize, Serialize};

use semidual_core::{
    Branch, ClipResult, ConvexPolygon, ConvexPolyhedron, FacetBitmap, FacetGrid, GridFrame, Point2, Point3, Segment2,
    Segment3, SemidualClipper2D, SemidualClipper3D, SemidualGrid, Subdivision,
};

/// Malformed or inconsistent input. The binary exits with status 2 on these.
#[derive(Debug)]
pub struct InputError {
    pub path: PathBuf,
    /// 1-based line and column when known.
    pub line: Option<u64>,
    pub column: Option<u64>,
    pub message: String,
}

impl InputError {
    pub fn new(path: &Path, message: impl Into<String>) -> Self {
        InputError { path: path.to_path_buf(), line: None, column: None, message: message.into() }
    }

    pub fn at(path: &Path, line: u64, column: Option<u64>, message: impl Into<String>) -> Self {
        InputError { path: path.to_path_buf(), line: Some(line), column, message: message.into() }
    }

    fn json(path: &Path, e: serde_json::Error) -> Self {
        InputError::at(path, e.line() as u64, Some(e.column() as u64), e.to_string())
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.display())?;
        if let Some(l) = self.line {
            write!(f, ":{l}")?;
            if let Some(c) = self.column {
                write!(f, ":{c}")?;
            }
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronFile {
    pub vertices: Vec<[f64; 3]>,
    pub facets: Vec<[u32; 3]>,
}

impl From<&ConvexPolygon> for PolygonFile {
    fn from(p: &ConvexPolygon) -> Self {
        PolygonFile { vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect() }
    }
}

impl From<&ConvexPolyhedron> for PolyhedronFile {
    fn from(p: &ConvexPolyhedron) -> Self {
        PolyhedronFile { vertices: p.vertices().iter().map(|v| [v.x, v.y, v.z]).collect(), facets: p.facets().to_vec() }
    }
}

impl PolygonFile {
    pub fn to_polygon(&self) -> Result<ConvexPolygon, semidual_core::GeomError> {
        ConvexPolygon::new(self.vertices.iter().map(|v| Point2::new(v[0], v[1])).collect())
    }
}

impl PolyhedronFile {
    pub fn to_polyhedron(&self) -> Result<ConvexPolyhedron, semidual_core::GeomError> {
        ConvexPolyhedron::new(
            self.vertices.iter().map(|v| Point3::new(v[0], v[1], v[2])).collect(),
            self.facets.clone(),
        )
    }
}

/// A clip region of either dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    Polygon(ConvexPolygon),
    Polyhedron(ConvexPolyhedron),
}

impl Region {
    pub fn dimension(&self) -> u8 {
        match self {
            Region::Polygon(_) => 2,
            Region::Polyhedron(_) => 3,
        }
    }

    /// Vertex count of a polygon, facet count of a polyhedron.
    pub fn size(&self) -> usize {
        match self {
            Region::Polygon(p) => p.len(),
            Region::Polyhedron(p) => p.facet_count(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyRegionFile {
    Polyhedron(PolyhedronFile),
    Polygon(PolygonFile),
}

fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError::new(path, e.to_string()))
}

pub fn parse_region(path: &Path, text: &str) -> Result<Region, InputError> {
    // parse once as a plain value for precise error positions, then by shape
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| InputError::json(path, e))?;
    let file: AnyRegionFile = serde_json::from_value(value).map_err(|_| {
        InputError::new(
            path,
            "expected {\"vertices\": [[x,y],...]} or {\"vertices\": [[x,y,z],...], \"facets\": [[i,j,k],...]}",
        )
    })?;
    match file {
        AnyRegionFile::Polygon(p) => {
            p.to_polygon().map(Region::Polygon).map_err(|e| InputError::new(path, format!("invalid polygon: {e}")))
        }
        AnyRegionFile::Polyhedron(p) => p
            .to_polyhedron()
            .map(Region::Polyhedron)
            .map_err(|e| InputError::new(path, format!("invalid polyhedron: {e}"))),
    }
}

pub fn read_region(path: &Path) -> Result<Region> {
    let text = read_text(path)?;
    Ok(parse_region(path, &text)?)
}

pub fn region_json(region: &Region) -> String {
    let mut s = match region {
        Region::Polygon(p) => serde_json::to_string_pretty(&PolygonFile::from(p)),
        Region::Polyhedron(p) => serde_json::to_string_pretty(&PolyhedronFile::from(p)),
    }
    .expect("plain data serializes");
    s.push('\n');
    s
}

/// Segments of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum Lines {
    Planar(Vec<Segment2>),
    Spatial(Vec<Segment3>),
}

impl Lines {
    pub fn len(&self) -> usize {
        match self {
            Lines::Planar(v) => v.len(),
            Lines::Spatial(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dimension(&self) -> u8 {
        match self {
            Lines::Planar(_) => 2,
            Lines::Spatial(_) => 3,
        }
    }
}

const HEADER_2D: [&str; 4] = ["x0", "y0", "x1", "y1"];
const HEADER_3D: [&str; 6] = ["x0", "y0", "z0", "x1", "y1", "z1"];

pub fn parse_lines(path: &Path, input: impl Read) -> Result<Lines, InputError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let headers = rdr.headers().map_err(|e| InputError::at(path, 1, None, e.to_string()))?.clone();
    let names: Vec<&str> = headers.iter().collect();
    let dim = if names == HEADER_2D {
        2
    } else if names == HEADER_3D {
        3
    } else {
        return Err(InputError::at(path, 1, None, "header must be x0,y0,x1,y1 or x0,y0,z0,x1,y1,z1"));
    };
    let mut planar = Vec::new();
    let mut spatial = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            InputError::at(path, line, None, e.to_string())
        })?;
        let line = rec.position().map(|p| p.line()).unwrap_or(0);
        let mut vals = Vec::with_capacity(rec.len());
        for (k, field) in rec.iter().enumerate() {
            let v: f64 = field
                .parse()
                .map_err(|_| InputError::at(path, line, Some(k as u64 + 1), format!("not a number: {field:?}")))?;
            vals.push(v);
        }
        let bad = |e: semidual_core::GeomError| InputError::at(path, line, None, e.to_string());
        if dim == 2 {
            planar.push(Segment2::new(Point2::new(vals[0], vals[1]), Point2::new(vals[2], vals[3])).map_err(bad)?);
        } else {
            spatial.push(
                Segment3::new(Point3::new(vals[0], vals[1], vals[2]), Point3::new(vals[3], vals[4], vals[5]))
                    .map_err(bad)?,
            );
        }
    }
    Ok(if dim == 2 { Lines::Planar(planar) } else { Lines::Spatial(spatial) })
}

pub fn read_lines(path: &Path) -> Result<Lines> {
    let f = fs::File::open(path).map_err(|e| InputError::new(path, e.to_string()))?;
    Ok(parse_lines(path, std::io::BufReader::new(f))?)
}

/// Lines use the shortest representation that reads back to the same value.
pub fn write_lines(out: impl Write, lines: &Lines) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match lines {
        Lines::Planar(v) => {
            w.write_record(HEADER_2D)?;
            for s in v {
                w.write_record([s.p0.x, s.p0.y, s.p1.x, s.p1.y].map(|x| x.to_string()))?;
            }
        }
        Lines::Spatial(v) => {
            w.write_record(HEADER_3D)?;
            for s in v {
                w.write_record([s.p0.x, s.p0.y, s.p0.z, s.p1.x, s.p1.y, s.p1.z].map(|x| x.to_string()))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Six significant digits, `.` as separator. Magnitudes below `1e-9` (the
/// geometric tolerance floor) print as `0`.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < 1e-9 {
        return "0".into();
    }
    let s = format!("{x:.5e}");
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        return format!("{mant}e{exp}");
    }
    let decimals = (5 - exp).max(0) as usize;
    // reparse so the fixed form keeps exactly the rounded digits
    let rounded: f64 = s.parse().expect("valid float");
    let mut out = format!("{rounded:.decimals$}");
    if out.contains('.') {
        out = out.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if out == "-0" {
        out = "0".into();
    }
    out
}

pub fn results_header(dim: u8) -> Vec<&'static str> {
    let mut h = vec!["index", "status", "t_enter", "t_exit"];
    if dim == 2 {
        h.extend(["ex0", "ey0", "ex1", "ey1"]);
    } else {
        h.extend(["ex0", "ey0", "ez0", "ex1", "ey1", "ez1"]);
    }
    h
}

/// One results row; `Empty` leaves the numeric fields blank.
pub fn result_record(index: usize, r: &ClipResult, p0: &[f64], d: &[f64]) -> Vec<String> {
    let mut row = vec![index.to_string()];
    match r.interval() {
        None => {
            row.push("empty".into());
            row.extend(std::iter::repeat_n(String::new(), 2 + 2 * p0.len()));
        }
        Some((a, b)) => {
            row.push("hit".into());
            row.push(fmt_num(a));
            row.push(fmt_num(b));
            for t in [a, b] {
                row.extend(p0.iter().zip(d).map(|(p, q)| fmt_num(p + q * t)));
            }
        }
    }
    row
}

pub fn write_results(out: impl Write, lines: &Lines, results: &[ClipResult]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(results_header(lines.dimension()))?;
    match lines {
        Lines::Planar(v) => {
            for (i, (s, r)) in v.iter().zip(results).enumerate() {
                let d = s.direction();
                w.write_record(result_record(i, r, &[s.p0.x, s.p0.y], &[d.x, d.y]))?;
            }
        }
        Lines::Spatial(v) => {
            for (i, (s, r)) in v.iter().zip(results).enumerate() {
                let d = s.direction();
                w.write_record(result_record(i, r, &[s.p0.x, s.p0.y, s.p0.z], &[d.x, d.y, d.z]))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub const CLIPPER_FORMAT: &str = "semidual-clipper";
pub const CLIPPER_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridRecord {
    pub branch: String,
    /// Projection plane, 3D only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<String>,
    pub n_slope: usize,
    pub n_intercept: usize,
    pub h: f64,
    /// Row-major cells: edge index lists in 2D, hex bitmap words
    /// (least significant word first) in 3D.
    pub cells: Vec<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClipperFile {
    pub format: String,
    pub version: u32,
    pub dimension: u8,
    pub subdivision: [usize; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polygon: Option<PolygonFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polyhedron: Option<PolyhedronFile>,
    pub grids: Vec<GridRecord>,
}

/// A built clipper of either dimension.
#[derive(Clone, Debug)]
pub enum Clipper {
    Planar(SemidualClipper2D),
    Spatial(SemidualClipper3D),
}

fn branch_name(b: Branch) -> String {
    b.name().to_string()
}

fn subdivision_array(s: Subdivision) -> [usize; 4] {
    [s.n_k, s.n_q, s.n_m, s.n_p]
}

impl ClipperFile {
    pub fn from_clipper(c: &Clipper) -> Self {
        match c {
            Clipper::Planar(c) => ClipperFile {
                format: CLIPPER_FORMAT.into(),
                version: CLIPPER_VERSION,
                dimension: 2,
                subdivision: subdivision_array(c.subdivision()),
                polygon: Some(PolygonFile::from(c.polygon())),
                polyhedron: None,
                grids: Branch::ALL
                    .iter()
                    .map(|&b| {
                        let g = c.grid(b);
                        GridRecord {
                            branch: branch_name(b),
                            plane: None,
                            n_slope: g.frame().n_slope,
                            n_intercept: g.frame().n_intercept,
                            h: g.frame().h,
                            cells: g.lists().map(|l| serde_json::json!(l)).collect(),
                        }
                    })
                    .collect(),
            },
            Clipper::Spatial(c) => ClipperFile {
                format: CLIPPER_FORMAT.into(),
                version: CLIPPER_VERSION,
                dimension: 3,
                subdivision: subdivision_array(c.subdivision()),
                polygon: None,
                polyhedron: Some(PolyhedronFile::from(c.polyhedron())),
                grids: semidual_core::Plane::ALL
                    .iter()
                    .flat_map(|&p| Branch::ALL.map(|b| (p, b)))
                    .map(|(p, b)| {
                        let g = c.plane(p).grid(b);
                        GridRecord {
                            branch: branch_name(b),
                            plane: Some(p.name().to_string()),
                            n_slope: g.frame().n_slope,
                            n_intercept: g.frame().n_intercept,
                            h: g.frame().h,
                            cells: g
                                .bitmaps()
                                .map(|bm| {
                                    let hex: Vec<String> = bm.words().iter().map(|w| format!("{w:016x}")).collect();
                                    serde_json::Value::String(hex.join(""))
                                })
                                .collect(),
                        }
                    })
                    .collect(),
            },
        }
    }

    pub fn to_clipper(&self, path: &Path) -> Result<Clipper, InputError> {
        let bad = |m: String| InputError::new(path, m);
        if self.format != CLIPPER_FORMAT {
            return Err(bad(format!("not a clipper file (format {:?})", self.format)));
        }
        if self.version != CLIPPER_VERSION {
            return Err(bad(format!("unsupported clipper version {} (expected {CLIPPER_VERSION})", self.version)));
        }
        let frame_of = |g: &GridRecord, b: Branch| {
            GridFrame::new(b, g.n_slope, g.n_intercept, g.h).map_err(|e| bad(format!("grid: {e}")))
        };
        let expect_branches = |n: usize| -> Result<(), InputError> {
            if self.grids.len() != n {
                return Err(bad(format!("expected {n} grids, found {}", self.grids.len())));
            }
            for (k, g) in self.grids.iter().enumerate() {
                if g.branch != Branch::ALL[k % 2].name() {
                    return Err(bad(format!("grid {k} has branch {:?}", g.branch)));
                }
            }
            Ok(())
        };
        match self.dimension {
            2 => {
                let poly = self.polygon.as_ref().ok_or_else(|| bad("missing polygon".into()))?;
                let poly = poly.to_polygon().map_err(|e| bad(format!("invalid polygon: {e}")))?;
                expect_branches(2)?;
                let n = poly.len();
                let mut grids = Vec::new();
                for (g, b) in self.grids.iter().zip(Branch::ALL) {
                    let lists = g
                        .cells
                        .iter()
                        .map(|c| serde_json::from_value::<Vec<u32>>(c.clone()))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| bad(format!("cell list: {e}")))?;
                    grids.push(SemidualGrid::from_lists(frame_of(g, b)?, lists, n).map_err(|e| bad(e.to_string()))?);
                }
                let mp = grids.pop().expect("two grids");
                let kq = grids.pop().expect("two grids");
                let c = SemidualClipper2D::from_parts(poly, kq, mp).map_err(|e| bad(e.to_string()))?;
                self.check_subdivision(c.subdivision(), path)?;
                Ok(Clipper::Planar(c))
            }
            3 => {
                let poly = self.polyhedron.as_ref().ok_or_else(|| bad("missing polyhedron".into()))?;
                let poly = poly.to_polyhedron().map_err(|e| bad(format!("invalid polyhedron: {e}")))?;
                expect_branches(6)?;
                let n = poly.facet_count();
                let words = n.div_ceil(64);
                let mut grids = Vec::new();
                for (k, g) in self.grids.iter().enumerate() {
                    let plane = semidual_core::Plane::ALL[k / 2];
                    if g.plane.as_deref() != Some(plane.name()) {
                        return Err(bad(format!("grid {k} should belong to plane {}", plane.name())));
                    }
                    let mut cells = Vec::with_capacity(g.cells.len());
                    for c in &g.cells {
                        let hex = c.as_str().ok_or_else(|| bad("bitmap cells must be hex strings".into()))?;
                        if hex.len() != 16 * words {
                            return Err(bad(format!("bitmap of {} hex digits, expected {}", hex.len(), 16 * words)));
                        }
                        let ws = (0..words)
                            .map(|w| u64::from_str_radix(&hex[16 * w..16 * w + 16], 16))
                            .collect::<Result<Vec<u64>, _>>()
                            .map_err(|e| bad(format!("bitmap: {e}")))?;
                        if ws.last().is_some_and(|&l| n % 64 != 0 && l >> (n % 64) != 0) {
                            return Err(bad("bitmap has bits beyond the facet count".into()));
                        }
                        cells.push(FacetBitmap::from_words(n, ws).expect("length checked"));
                    }
                    let b = Branch::ALL[k % 2];
                    grids.push(FacetGrid::from_bitmaps(frame_of(g, b)?, n, cells).map_err(|e| bad(e.to_string()))?);
                }
                let mut it = grids.into_iter();
                let mut pair = || (it.next().expect("six grids"), it.next().expect("six grids"));
                let planes = [pair(), pair(), pair()];
                let c = SemidualClipper3D::from_parts(poly, planes).map_err(|e| bad(e.to_string()))?;
                self.check_subdivision(c.subdivision(), path)?;
                Ok(Clipper::Spatial(c))
            }
            d => Err(bad(format!("dimension {d} is not 2 or 3"))),
        }
    }

    fn check_subdivision(&self, s: Subdivision, path: &Path) -> Result<(), InputError> {
        if subdivision_array(s) != self.subdivision {
            return Err(InputError::new(path, "subdivision does not match the stored grids"));
        }
        Ok(())
    }
}

pub fn clipper_json(c: &Clipper) -> String {
    let mut s = serde_json::to_string(&ClipperFile::from_clipper(c)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_clipper(path: &Path, text: &str) -> Result<Clipper, InputError> {
    let file: ClipperFile = serde_json::from_str(text).map_err(|e| InputError::json(path, e))?;
    file.to_clipper(path)
}

pub fn read_clipper(path: &Path) -> Result<Clipper> {
    let text = read_text(path)?;
    Ok(parse_clipper(path, &text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use semidual_core::fixtures;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.25), "0.25");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(1e-12), "0");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333");
        assert_eq!(fmt_num(123456789.0), "123457000");
        assert_eq!(fmt_num(9.9999996), "10");
        assert_eq!(fmt_num(-2.5e-7), "-2.5e-7");
        assert_eq!(fmt_num(6800.0 / 2020.0), "3.36634");
    }

    #[test]
    fn square_round_trips() {
        let sq = Region::Polygon(fixtures::unit_square());
        let text = region_json(&sq);
        assert_eq!(parse_region(Path::new("sq.json"), &text).unwrap(), sq);
        let cube = Region::Polyhedron(fixtures::cube());
        assert_eq!(parse_region(Path::new("c.json"), &region_json(&cube)).unwrap(), cube);
    }

    #[test]
    fn region_errors_carry_positions() {
        let e = parse_region(Path::new("r.json"), "{\"vertices\": [[0,0],\n [1,0],\n [1,]]}").unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = parse_region(Path::new("r.json"), "{\"vertices\": [[0,0],[1,0],[2,0]]}").unwrap_err();
        assert!(e.message.contains("invalid polygon"), "{e}");
    }

    #[test]
    fn lines_parse_and_report_bad_fields() {
        let ok = "x0,y0,x1,y1\n0,0,1,1\n-2,0.5,2,0.5\n";
        let l = parse_lines(Path::new("l.csv"), ok.as_bytes()).unwrap();
        assert_eq!(l.len(), 2);
        let mut out = Vec::new();
        write_lines(&mut out, &l).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), ok);
        let e = parse_lines(Path::new("l.csv"), "x0,y0,x1,y1\n0,0,1,1\n0,x,1,1\n".as_bytes()).unwrap_err();
        assert_eq!((e.line, e.column), (Some(3), Some(2)));
        let e = parse_lines(Path::new("l.csv"), "a,b\n".as_bytes()).unwrap_err();
        assert_eq!(e.line, Some(1));
        let e = parse_lines(Path::new("l.csv"), "x0,y0,x1,y1\n1,1,1,1\n".as_bytes()).unwrap_err();
        assert!(e.message.contains("zero-length"));
    }

    #[test]
    fn empty_lines_give_header_only() {
        let l = parse_lines(Path::new("l.csv"), "x0,y0,z0,x1,y1,z1\n".as_bytes()).unwrap();
        let mut out = Vec::new();
        write_results(&mut out, &l, &[]).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "index,status,t_enter,t_exit,ex0,ey0,ez0,ex1,ey1,ez1\n");
    }

    #[test]
    fn results_rows() {
        let s = Segment2::new(Point2::new(-2.0, 0.0), Point2::new(2.0, 0.0)).unwrap();
        let l = Lines::Planar(vec![s, s]);
        let r = [ClipResult::Interval { t_enter: 0.25, t_exit: 0.75 }, ClipResult::Empty];
        let mut out = Vec::new();
        write_results(&mut out, &l, &r).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text, "index,status,t_enter,t_exit,ex0,ey0,ex1,ey1\n0,hit,0.25,0.75,-1,0,1,0\n1,empty,,,,,,\n");
    }

    #[test]
    fn clipper_container_round_trips() {
        let c2 = Clipper::Planar(
            semidual_core::build_clipper_2d(fixtures::unit_square(), Subdivision::new(3, 5, 2, 7)).unwrap(),
        );
        let text = clipper_json(&c2);
        let back = parse_clipper(Path::new("c.json"), &text).unwrap();
        assert_eq!(clipper_json(&back), text);
        let c3 = Clipper::Spatial(semidual_core::build_clipper_3d(fixtures::cube(), Subdivision::uniform(3)).unwrap());
        let text = clipper_json(&c3);
        let back = parse_clipper(Path::new("c.json"), &text).unwrap();
        assert_eq!(clipper_json(&back), text);
    }

    #[test]
    fn unknown_version_is_rejected() {
        let c2 =
            Clipper::Planar(semidual_core::build_clipper_2d(fixtures::unit_square(), Subdivision::uniform(2)).unwrap());
        let text = clipper_json(&c2).replace("\"version\":1", "\"version\":99");
        let e = parse_clipper(Path::new("c.json"), &text).unwrap_err();
        assert!(e.message.contains("unsupported clipper version 99"));
        let text = clipper_json(&c2).replacen("\"n_slope\":2", "\"n_slope\":3", 1);
        assert!(parse_clipper(Path::new("c.json"), &text).is_err());
    }
}
