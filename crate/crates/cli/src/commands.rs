use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use horton::analysis::{
    count_empty_triangles_with, first_orientation_difference, horton_violation, largest_empty_hole_with,
};
use horton::construct::{classic_horton_with, small_horton_with};
use horton::exact::find_collinear_triple;
use horton::lowerbound::{choose_slab_lines, lower_bound_report, slab_r, LowerBoundReport, SlabChoice};
use horton::{orientation, Drawing, Error, Limits, Orientation};
use serde::Serialize;

use crate::format::{parse_points, write_points, JsonEnvelope};
use crate::svg::{render, Overlay};
use crate::{Construction, Format, HoleMode, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Fail = 1,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Cap(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_limit() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

type CliResult = Result<Status, CliError>;

fn env_cap<T: std::str::FromStr>(name: &str) -> Result<Option<T>, CliError> {
    match std::env::var(name) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| CliError::Input(format!("{name}={v:?} is not a valid number"))),
        Err(_) => Ok(None),
    }
}

/// Default caps, overridden by `HORTON_MAX_K` and `HORTON_MAX_N`.
pub fn limits_from_env() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Some(k) = env_cap::<u32>("HORTON_MAX_K")? {
        limits.max_small_k = k;
        limits.max_classic_k = k;
    }
    if let Some(n) = env_cap::<usize>("HORTON_MAX_N")? {
        limits.max_hole_points = n;
        limits.max_triangle_points = n;
    }
    Ok(limits)
}

fn read_drawing(path: &Path) -> Result<Drawing, CliError> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_points(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
            Ok(())
        }
    }
}

pub fn generate(
    limits: &Limits,
    k: u32,
    construction: Construction,
    format: Format,
    out: Option<&Path>,
    slab: bool,
) -> CliResult {
    let (s, tag) = match construction {
        Construction::Small => (small_horton_with(k, limits)?, "small"),
        Construction::Classic => (classic_horton_with(k, limits)?, "classic"),
    };
    let text = match format {
        Format::Text => write_points(&s, &[]),
        Format::Json => JsonEnvelope::<()>::new(&s, tag, None).to_json(),
        Format::Svg => {
            let mut overlay = Overlay::default();
            if slab && s.len() >= 4 {
                overlay.slab = Some(slab_r(&s)?);
                if k >= 4 {
                    if let SlabChoice::Lines(cfg) = choose_slab_lines(&s, 2)? {
                        overlay.lines = cfg.lines.to_vec();
                    }
                }
            }
            render(&s, &overlay)
        }
    };
    emit(out, &text)?;
    Ok(Status::Pass)
}

pub struct Checks {
    pub horton: bool,
    pub general_position: bool,
    pub order_type_equal: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct CheckResult {
    check: &'static str,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

fn side_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Left => "left turn",
        Orientation::Collinear => "collinear",
        Orientation::Right => "right turn",
    }
}

fn check_horton(s: &Drawing) -> CheckResult {
    let witness = match horton_violation(s) {
        Ok(None) => None,
        Ok(Some(v)) => Some(v.to_string()),
        Err(e) => Some(e.to_string()),
    };
    CheckResult { check: "horton", passed: witness.is_none(), witness }
}

fn check_general_position(s: &Drawing) -> CheckResult {
    let witness = find_collinear_triple(s.points()).map(|(i, j, k)| format!("p{i}, p{j}, p{k} are collinear"));
    CheckResult { check: "general-position", passed: witness.is_none(), witness }
}

fn check_order_type(a: &Drawing, b: &Drawing) -> CheckResult {
    let witness = match first_orientation_difference(a, b) {
        Ok(None) => None,
        Ok(Some((i, j, k))) => {
            let (pa, pb) = (a.points(), b.points());
            Some(format!(
                "p{i} p{j} p{k}: {} in the first set, {} in the second",
                side_name(orientation(&pa[i], &pa[j], &pa[k])),
                side_name(orientation(&pb[i], &pb[j], &pb[k]))
            ))
        }
        Err(e) => Some(e.to_string()),
    };
    CheckResult { check: "order-type-equal", passed: witness.is_none(), witness }
}

pub fn verify(file: &Path, checks: &Checks, format: Report) -> CliResult {
    let s = read_drawing(file)?;
    let other = checks.order_type_equal.as_deref().map(read_drawing).transpose()?;
    let mut results = Vec::new();
    if checks.horton || (!checks.general_position && other.is_none()) {
        results.push(check_horton(&s));
    }
    if checks.general_position {
        results.push(check_general_position(&s));
    }
    if let Some(b) = &other {
        results.push(check_order_type(&s, b));
    }
    let passed = results.iter().all(|r| r.passed);
    let text = match format {
        Report::Text => {
            let mut out = String::new();
            for r in &results {
                let _ = match &r.witness {
                    None => writeln!(out, "{}: pass", r.check),
                    Some(w) => writeln!(out, "{}: FAIL ({w})", r.check),
                };
            }
            out
        }
        Report::Json => {
            #[derive(Serialize)]
            struct Analysis {
                passed: bool,
                checks: Vec<CheckResult>,
            }
            JsonEnvelope::new(&s, "input", Some(Analysis { passed, checks: results })).to_json()
        }
    };
    emit(None, &text)?;
    Ok(if passed { Status::Pass } else { Status::Fail })
}

pub fn holes(limits: &Limits, file: &Path, mode: HoleMode, format: Report) -> CliResult {
    let s = read_drawing(file)?;
    let text = match mode {
        HoleMode::Max => {
            let r = largest_empty_hole_with(&s, limits)?;
            match format {
                Report::Text => {
                    let w: Vec<String> = r.witness.iter().map(|i| format!("p{i}")).collect();
                    format!(
                        "max_hole: {}\nwitness: {}\nempty_triangles: {}\n",
                        r.max_hole,
                        w.join(" "),
                        r.empty_triangle_count
                    )
                }
                Report::Json => JsonEnvelope::new(&s, "input", Some(r)).to_json(),
            }
        }
        HoleMode::Triangles => {
            let count = count_empty_triangles_with(&s, limits)?;
            match format {
                Report::Text => format!("empty_triangles: {count}\n"),
                Report::Json => {
                    #[derive(Serialize)]
                    struct Analysis {
                        empty_triangles: usize,
                    }
                    JsonEnvelope::new(&s, "input", Some(Analysis { empty_triangles: count })).to_json()
                }
            }
        }
    };
    emit(None, &text)?;
    Ok(Status::Pass)
}

fn describe(r: &LowerBoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}  k: {}  t: {}", r.n, r.k, r.t);
    let _ = writeln!(out, "size: {}", r.size);
    let _ = writeln!(out, "first-level non-crossing: {}", if r.noncrossing { "yes" } else { "NO" });
    match &r.slab {
        SlabChoice::Lines(cfg) => {
            let lines: Vec<String> = cfg.lines.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "slab lines: {}", lines.join(" "));
            let _ = writeln!(out, "d1: {}  d2: {}  inside R: {}", cfg.d1, cfg.d2, cfg.inside_slab);
        }
        SlabChoice::Certificate(c) => {
            let _ = writeln!(out, "size certificate: {} ({})", c.bound, c.reason);
        }
    }
    for st in &r.levels {
        let range = |o: &Option<horton::lowerbound::Range>| {
            o.as_ref().map_or_else(|| "-".to_string(), |r| format!("[{}, {}]", r.min, r.max))
        };
        let _ = writeln!(
            out,
            "level {:>2} ({} nodes): width_1 [{}, {}]  width_4 [{}, {}]  girth_1 {}  girth_4 {}",
            st.level,
            st.nodes,
            st.width_1.min,
            st.width_1.max,
            st.width_4.min,
            st.width_4.max,
            range(&st.girth_1),
            range(&st.girth_4)
        );
    }
    let _ = writeln!(out, "growth inequalities: {} checked, {} failed", r.growth_checked, r.growth_failed);
    let _ = writeln!(
        out,
        "reference: log2 n^(log n / 8) = {:.3}, log2 n^(log(n/2) / 24) = {:.3}",
        r.log2_isothetic_bound, r.log2_general_bound
    );
    out
}

pub fn lowerbound(file: &Path, t: u32, format: Report) -> CliResult {
    let s = read_drawing(file)?;
    let r = lower_bound_report(&s, t)?;
    let passed = r.passed();
    let text = match format {
        Report::Text => describe(&r),
        Report::Json => JsonEnvelope::new(&s, "input", Some(&r)).to_json(),
    };
    emit(None, &text)?;
    Ok(if passed { Status::Pass } else { Status::Fail })
}
