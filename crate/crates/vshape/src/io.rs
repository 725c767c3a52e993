//! Point-set files: CSV (`x,y` per line, `#` comments) and JSON
//! (`{"points": [[x, y], ...]}` plus optional metadata).

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use vshape_core::geom::dedup_points;
use vshape_core::Point;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("JSON line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("no points in input")]
    EmptyInput,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `.json` is JSON; everything else is read as CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    /// Generator parameters by name.
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub params: serde_json::Map<String, serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub points: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl InstanceFile {
    pub fn new(pts: &[Point], metadata: Option<Metadata>) -> Self {
        InstanceFile {
            points: pts.iter().map(|p| [p.x, p.y]).collect(),
            metadata,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }
}

/// Parsed, deduplicated points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    pub points: Vec<Point>,
    /// Rows dropped as exact duplicates.
    pub duplicates: usize,
    pub metadata: Option<Metadata>,
}

fn finish(raw: Vec<Point>, metadata: Option<Metadata>) -> Result<PointSet, ParseError> {
    if raw.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let points = dedup_points(&raw);
    Ok(PointSet {
        duplicates: raw.len() - points.len(),
        points,
        metadata,
    })
}

fn number(s: &str, line: usize) -> Result<f64, ParseError> {
    let v: f64 = s.trim().parse().map_err(|_| ParseError::Syntax {
        line,
        msg: format!("`{}` is not a number", s.trim()),
    })?;
    if !v.is_finite() {
        return Err(ParseError::Syntax {
            line,
            msg: "coordinate is not finite".into(),
        });
    }
    Ok(v)
}

pub fn parse_csv(text: &str) -> Result<PointSet, ParseError> {
    let mut raw = Vec::new();
    for (i, row) in text.lines().enumerate() {
        let line = i + 1;
        let row = row.split('#').next().unwrap_or("").trim();
        if row.is_empty() {
            continue;
        }
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 2 {
            return Err(ParseError::Syntax {
                line,
                msg: format!("expected `x,y`, found {} fields", cols.len()),
            });
        }
        raw.push(Point::new(number(cols[0], line)?, number(cols[1], line)?));
    }
    finish(raw, None)
}

pub fn parse_json(text: &str) -> Result<PointSet, ParseError> {
    let f: InstanceFile = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let mut raw = Vec::with_capacity(f.points.len());
    for (i, [x, y]) in f.points.iter().copied().enumerate() {
        if !x.is_finite() || !y.is_finite() {
            return Err(ParseError::Syntax {
                line: i + 1,
                msg: "coordinate is not finite".into(),
            });
        }
        raw.push(Point::new(x, y));
    }
    finish(raw, f.metadata)
}

pub fn parse_points_str(text: &str, format: Format) -> Result<PointSet, ParseError> {
    match format {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

/// Reads `path`; the format defaults to the file extension.
pub fn parse_points(path: &Path, format: Option<Format>) -> Result<PointSet, ParseError> {
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_points_str(&text, format.unwrap_or_else(|| Format::from_path(path)))
}

pub fn to_csv(pts: &[Point]) -> String {
    let mut s = String::with_capacity(pts.len() * 24);
    for p in pts {
        s.push_str(&format!("{},{}\n", p.x, p.y));
    }
    s
}
