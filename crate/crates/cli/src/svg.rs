//! SVG rendering. Presentation only; never parsed back.

use std::fmt::Write as _;

use horton::{Drawing, Rational, Scalar};
use num_traits::{Signed, ToPrimitive};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 24.0;
/// Above this many bits of vertical spread the y axis is drawn on a log scale.
const LOG_Y_BITS: u64 = 20;

/// Optional overlay: the slab `R` and up to four vertical lines.
#[derive(Debug, Default, Clone)]
pub struct Overlay {
    pub slab: Option<(Rational, Rational)>,
    pub lines: Vec<Rational>,
}

/// `v / 2^shift` as a float.
fn scaled(v: &Scalar, shift: u64) -> f64 {
    (v >> shift).to_f64().unwrap_or(0.0)
}

/// `sign(v) * log2(1 + |v|)`, accurate for arbitrarily large `v`.
fn signed_log(v: &Scalar) -> f64 {
    let mag = v.abs() + 1u8;
    let bits = mag.bits();
    let shift = bits.saturating_sub(53);
    let l = scaled(&mag, shift).log2() + shift as f64;
    if v.is_negative() {
        -l
    } else {
        l
    }
}

struct Axis {
    lo: Scalar,
    shift: u64,
    span: f64,
}

impl Axis {
    fn new<'a>(values: impl Iterator<Item = &'a Scalar> + Clone) -> Axis {
        let lo = values.clone().min().cloned().unwrap_or_default();
        let hi = values.max().cloned().unwrap_or_default();
        let span = &hi - &lo;
        let shift = span.bits().saturating_sub(53);
        let span = scaled(&span, shift);
        Axis { lo, shift, span: if span > 0.0 { span } else { 1.0 } }
    }

    fn unit(&self, v: &Scalar) -> f64 {
        scaled(&(v - &self.lo), self.shift) / self.span
    }

    fn unit_rational(&self, v: &Rational) -> f64 {
        let whole = v.floor().to_integer();
        let frac = (v - Rational::from_integer(whole.clone())).to_f64().unwrap_or(0.0);
        self.unit(&whole) + frac / self.span / 2f64.powi(self.shift as i32)
    }
}

pub fn render(s: &Drawing, overlay: &Overlay) -> String {
    let xs = Axis::new(s.iter().map(|p| &p.x));
    let (ylo, yhi) = (s.iter().map(|p| &p.y).min(), s.iter().map(|p| &p.y).max());
    let log_y = match (ylo, yhi) {
        (Some(lo), Some(hi)) => (hi - lo).bits() > LOG_Y_BITS,
        _ => false,
    };
    let ys: Vec<f64> = if log_y {
        let logs: Vec<f64> = s.iter().map(|p| signed_log(&p.y)).collect();
        let (lo, hi) = logs.iter().fold((f64::MAX, f64::MIN), |(a, b), &v| (a.min(v), b.max(v)));
        let span = if hi > lo { hi - lo } else { 1.0 };
        logs.iter().map(|v| (v - lo) / span).collect()
    } else {
        let axis = Axis::new(s.iter().map(|p| &p.y));
        s.iter().map(|p| axis.unit(&p.y)).collect()
    };
    let px = |u: f64| MARGIN + u * (WIDTH - 2.0 * MARGIN);
    let py = |u: f64| HEIGHT - MARGIN - u * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    if let Some((a, b)) = &overlay.slab {
        let (xa, xb) = (px(xs.unit_rational(a)), px(xs.unit_rational(b)));
        let _ = writeln!(
            out,
            r##"  <rect x="{xa:.2}" y="0" width="{:.2}" height="{HEIGHT}" fill="#4a90d9" fill-opacity="0.12"/>"##,
            (xb - xa).max(0.5)
        );
    }
    for (i, l) in overlay.lines.iter().enumerate() {
        let x = px(xs.unit_rational(l));
        let _ = writeln!(
            out,
            r##"  <line x1="{x:.2}" y1="0" x2="{x:.2}" y2="{HEIGHT}" stroke="#d9534f" stroke-dasharray="4 3"><title>l{}</title></line>"##,
            i + 1
        );
    }
    for (i, (p, y)) in s.iter().zip(&ys).enumerate() {
        let _ = writeln!(
            out,
            r#"  <circle cx="{:.2}" cy="{:.2}" r="3"><title>p{i} = ({}, {})</title></circle>"#,
            px(xs.unit(&p.x)),
            py(*y),
            p.x,
            p.y
        );
    }
    if log_y {
        let _ = writeln!(out, r#"  <text x="{MARGIN}" y="14" font-size="11">y: signed log scale</text>"#);
    }
    out.push_str("</svg>\n");
    out
}
