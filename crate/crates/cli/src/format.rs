//! Point-set files and the JSON envelope.
//!
//! A point-set file holds optional `#` comment lines followed by one point
//! per line, written as two base-10 integers separated by a single space.

use std::fmt::Write as _;

use horton::{Drawing, Point, Scalar};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn parse_int(s: &str) -> Option<Scalar> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_points(text: &str) -> Result<Drawing, ParseError> {
    let mut points = Vec::new();
    let mut in_header = true;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let fail = |message: String| ParseError { line: i + 1, message };
        if line.starts_with('#') {
            if !in_header {
                return Err(fail("comments are only allowed before the first point".into()));
            }
            continue;
        }
        in_header = false;
        let (x, y) = line.split_once(' ').ok_or_else(|| fail(format!("expected \"x y\", got {line:?}")))?;
        match (parse_int(x), parse_int(y)) {
            (Some(x), Some(y)) => points.push(Point { x, y }),
            _ => return Err(fail(format!("expected two integers, got {line:?}"))),
        }
    }
    Ok(Drawing::new(points))
}

pub fn write_points(s: &Drawing, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    for p in s.iter() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

#[derive(Debug, Serialize)]
pub struct JsonEnvelope<A: Serialize> {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub construction: String,
    pub size: Option<String>,
    pub points: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<A>,
}

impl<A: Serialize> JsonEnvelope<A> {
    pub fn new(s: &Drawing, construction: &str, analysis: Option<A>) -> Self {
        JsonEnvelope {
            n: s.len(),
            k: s.log2_len(),
            construction: construction.to_string(),
            size: s.size().ok().map(|v| v.to_string()),
            points: s.iter().map(|p| [p.x.to_string(), p.y.to_string()]).collect(),
            analysis,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes") + "\n"
    }
}
