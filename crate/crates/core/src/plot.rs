//! Figure data: density histogram of the aggregate score sample, the sine
//! continuity curve with its tangents, CSV series for every drawn element,
//! and a deterministic hand-rolled SVG rendering (two runs over the same
//! sample produce byte-identical output).
//!
//! The curve is f(x) = sin(pi (x - 1) / 4) on [1, 5]: 0 at the low anchor,
//! 1 at the midpoint 3, back to ~0 at 5, with derivative (pi/4) cos(pi
//! (x - 1) / 4). Tangents are anchored at x = 2, 3, 4.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::rng::Mt19937;
use crate::simulate::SampleSet;

pub const FIGURE_BINS: usize = 50;
pub const CURVE_POINTS: usize = 1000;
pub const TANGENT_ANCHORS: [f64; 3] = [2.0, 3.0, 4.0];
pub const FIGURE_LABEL: &str = "Monte Carlo Distribution";
/// Aggregate score distribution drawn for the default figure.
pub const AGGREGATE_MEAN: f64 = 4.1;
pub const AGGREGATE_STD: f64 = 0.27;

pub const SVG_WIDTH: u32 = 900;
pub const SVG_HEIGHT: u32 = 540;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("sample {theme:?} is empty; a histogram needs at least one value")]
    EmptySource { theme: String },
    #[error("histogram needs at least one bin")]
    ZeroBins,
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot derive series file names from {path:?}")]
    InvalidPath { path: PathBuf },
}

/// The continuity curve f(x) = sin(pi (x - 1) / 4).
pub fn kant_curve(x: f64) -> f64 {
    (PI * (x - 1.0) / 4.0).sin()
}

/// Its derivative f'(x) = (pi / 4) cos(pi (x - 1) / 4).
pub fn kant_slope(x: f64) -> f64 {
    FRAC_PI_4 * (PI * (x - 1.0) / 4.0).cos()
}

/// A tangent line in slope-intercept form: value_at(x) = slope * x +
/// intercept, touching the curve at x0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent {
    pub x0: f64,
    pub slope: f64,
    pub intercept: f64,
}

impl Tangent {
    pub fn value_at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// Tangent to the continuity curve at x0.
pub fn tangent_line(x0: f64) -> Tangent {
    let slope = kant_slope(x0);
    let intercept = kant_curve(x0) - slope * x0;
    Tangent {
        x0,
        slope,
        intercept,
    }
}

/// Histogram configuration; the figure default is 50 density-normalized
/// bins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HistogramSpec {
    pub bins: usize,
    pub density: bool,
}

impl Default for HistogramSpec {
    fn default() -> Self {
        HistogramSpec {
            bins: FIGURE_BINS,
            density: true,
        }
    }
}

/// Equal-width histogram over [min, max] of the data. `edges` has bins + 1
/// entries; `heights[i]` covers [edges[i], edges[i+1]), with the last bin
/// closed on the right so the maximum is counted. Density heights are
/// count / (n * bin width), making total mass exactly one up to summation
/// error.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub heights: Vec<f64>,
    pub density: bool,
}

impl Histogram {
    pub fn bins(&self) -> usize {
        self.heights.len()
    }

    pub fn centers(&self) -> Vec<f64> {
        self.edges
            .windows(2)
            .map(|w| 0.5 * (w[0] + w[1]))
            .collect()
    }

    /// Integral of the drawn bars: sum of height * width per bin.
    pub fn mass(&self) -> f64 {
        self.edges
            .windows(2)
            .zip(&self.heights)
            .map(|(w, h)| h * (w[1] - w[0]))
            .sum()
    }

    /// Index of the tallest bin (first on ties).
    pub fn modal_bin(&self) -> usize {
        let mut best = 0;
        for (i, h) in self.heights.iter().enumerate() {
            if *h > self.heights[best] {
                best = i;
            }
        }
        best
    }
}

/// Bin a sample. Degenerate data (all values equal) gets the unit-width
/// range around the value, mirroring the usual histogram convention.
pub fn build_histogram(sample: &SampleSet, spec: &HistogramSpec) -> Result<Histogram, PlotError> {
    if sample.is_empty() {
        return Err(PlotError::EmptySource {
            theme: sample.theme.clone(),
        });
    }
    if spec.bins == 0 {
        return Err(PlotError::ZeroBins);
    }
    let values = sample.values();
    let mut lo = values[0];
    let mut hi = values[0];
    for &v in values {
        if v < lo {
            lo = v;
        }
        if v > hi {
            hi = v;
        }
    }
    if lo == hi {
        lo -= 0.5;
        hi += 0.5;
    }
    let bins = spec.bins;
    let mut edges = Vec::with_capacity(bins + 1);
    for i in 0..bins {
        edges.push(lo + (hi - lo) * i as f64 / bins as f64);
    }
    edges.push(hi);

    let mut counts = vec![0usize; bins];
    let span = hi - lo;
    for &v in values {
        let mut idx = ((v - lo) / span * bins as f64) as usize;
        if idx >= bins {
            idx = bins - 1; // v == hi lands in the closed last bin
        }
        // Float division can disagree with the edge grid by one slot at a
        // boundary; nudge to the bin whose half-open range holds v.
        while idx > 0 && v < edges[idx] {
            idx -= 1;
        }
        while idx + 1 < bins && v >= edges[idx + 1] {
            idx += 1;
        }
        counts[idx] += 1;
    }

    let n = values.len() as f64;
    let heights = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if spec.density {
                c as f64 / (n * (edges[i + 1] - edges[i]))
            } else {
                c as f64
            }
        })
        .collect();
    Ok(Histogram {
        edges,
        heights,
        density: spec.density,
    })
}

/// x/y series of the continuity curve sampled on an even grid over [1, 5].
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSeries {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

pub fn kant_series(points: usize) -> CurveSeries {
    let points = points.max(2);
    let xs: Vec<f64> = (0..points)
        .map(|i| 1.0 + 4.0 * i as f64 / (points - 1) as f64)
        .collect();
    let ys = xs.iter().map(|&x| kant_curve(x)).collect();
    CurveSeries { xs, ys }
}

/// Everything one figure draws: the histogram, the curve, and the three
/// tangents.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotBundle {
    pub histogram: Histogram,
    pub curve: CurveSeries,
    pub tangents: Vec<Tangent>,
    pub source_label: String,
}

/// Assemble the standard figure bundle over a sample.
pub fn figure_bundle(sample: &SampleSet, label: &str) -> Result<PlotBundle, PlotError> {
    let histogram = build_histogram(sample, &HistogramSpec::default())?;
    Ok(PlotBundle {
        histogram,
        curve: kant_series(CURVE_POINTS),
        tangents: TANGENT_ANCHORS.iter().map(|&x0| tangent_line(x0)).collect(),
        source_label: label.to_string(),
    })
}

/// The default histogram source: n raw draws from Normal(4.1, 0.27) — the
/// aggregate score distribution, deliberately unclipped and unrounded.
pub fn aggregate_scores(seed: u32, n: usize) -> SampleSet {
    let mut rng = Mt19937::new(seed);
    let values: Vec<f64> = (0..n)
        .map(|_| rng.next_normal(AGGREGATE_MEAN, AGGREGATE_STD))
        .collect();
    SampleSet::new("aggregate scores", values).expect("gaussian draws are finite")
}

fn nice_step(span: f64) -> f64 {
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let unit = if norm < 1.5 {
        1.0
    } else if norm < 3.5 {
        2.0
    } else if norm < 7.5 {
        5.0
    } else {
        10.0
    };
    unit * mag
}

fn ticks(lo: f64, hi: f64) -> (Vec<f64>, f64) {
    let step = nice_step(hi - lo);
    let mut t = (lo / step).ceil() * step;
    let mut out = Vec::new();
    while t <= hi + step * 1e-9 {
        out.push(t);
        t += step;
    }
    (out, step)
}

fn tick_label(value: f64, step: f64) -> String {
    if step >= 0.999 {
        format!("{value:.0}")
    } else if step >= 0.0999 {
        format!("{value:.1}")
    } else {
        format!("{value:.2}")
    }
}

fn esc(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Render the bundle to a standalone 900x540 SVG document. Pure function of
/// the bundle — regenerating the same data yields byte-identical markup.
pub fn render_svg(bundle: &PlotBundle) -> String {
    const LEFT: f64 = 72.0;
    const RIGHT: f64 = 880.0;
    const TOP: f64 = 52.0;
    const BOTTOM: f64 = 480.0;

    let hist = &bundle.histogram;
    let curve = &bundle.curve;

    let mut x_min = curve.xs.first().copied().unwrap_or(1.0);
    let mut x_max = curve.xs.last().copied().unwrap_or(5.0);
    x_min = x_min.min(*hist.edges.first().expect("edges nonempty"));
    x_max = x_max.max(*hist.edges.last().expect("edges nonempty"));

    let mut y_min = 0.0f64;
    let mut y_max = 0.0f64;
    for &h in &hist.heights {
        y_max = y_max.max(h);
    }
    for &y in &curve.ys {
        y_min = y_min.min(y);
        y_max = y_max.max(y);
    }
    for t in &bundle.tangents {
        for x in [x_min, x_max] {
            let y = t.value_at(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
    }
    let x_pad = (x_max - x_min) * 0.05;
    let y_pad = (y_max - y_min).max(f64::MIN_POSITIVE) * 0.05;
    let (vx0, vx1) = (x_min - x_pad, x_max + x_pad);
    let (vy0, vy1) = (y_min - y_pad, y_max + y_pad);

    let px = |x: f64| LEFT + (x - vx0) / (vx1 - vx0) * (RIGHT - LEFT);
    let py = |y: f64| BOTTOM - (y - vy0) / (vy1 - vy0) * (BOTTOM - TOP);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\" font-family=\"Helvetica, Arial, sans-serif\">",
        w = SVG_WIDTH,
        h = SVG_HEIGHT
    );
    let _ = writeln!(
        svg,
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>",
        SVG_WIDTH, SVG_HEIGHT
    );

    // Grid and ticks.
    let (xticks, xstep) = ticks(vx0, vx1);
    let (yticks, ystep) = ticks(vy0, vy1);
    for &t in &xticks {
        let x = px(t);
        let _ = writeln!(
            svg,
            "<line x1=\"{x:.2}\" y1=\"{TOP}\" x2=\"{x:.2}\" y2=\"{BOTTOM}\" \
             stroke=\"#dddddd\" stroke-width=\"1\"/>"
        );
    }
    for &t in &yticks {
        let y = py(t);
        let _ = writeln!(
            svg,
            "<line x1=\"{LEFT}\" y1=\"{y:.2}\" x2=\"{RIGHT}\" y2=\"{y:.2}\" \
             stroke=\"#dddddd\" stroke-width=\"1\"/>"
        );
    }

    // Histogram bars.
    for (w, &h) in hist.edges.windows(2).zip(&hist.heights) {
        if h <= 0.0 {
            continue;
        }
        let x0 = px(w[0]);
        let x1 = px(w[1]);
        let y0 = py(h);
        let y1 = py(0.0);
        let _ = writeln!(
            svg,
            "<rect class=\"bar\" x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{:.2}\" height=\"{:.2}\" \
             fill=\"skyblue\" fill-opacity=\"0.6\" stroke=\"#7a9db0\" stroke-width=\"0.5\"/>",
            x1 - x0,
            y1 - y0
        );
    }

    // Tangents first, continuity curve on top.
    let tangent_colors = ["darkgreen", "darkorange", "purple"];
    for (t, color) in bundle.tangents.iter().zip(tangent_colors.iter().cycle()) {
        let (xa, xb) = (
            curve.xs.first().copied().unwrap_or(x_min),
            curve.xs.last().copied().unwrap_or(x_max),
        );
        let _ = writeln!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" \
             stroke-width=\"1.5\" stroke-dasharray=\"7 5\"/>",
            px(xa),
            py(t.value_at(xa)),
            px(xb),
            py(t.value_at(xb))
        );
    }
    let mut points = String::new();
    for (&x, &y) in curve.xs.iter().zip(&curve.ys) {
        let _ = write!(points, "{:.2},{:.2} ", px(x), py(y));
    }
    let _ = writeln!(
        svg,
        "<polyline points=\"{}\" fill=\"none\" stroke=\"darkred\" stroke-width=\"2.2\"/>",
        points.trim_end()
    );

    // Axes on top of the data.
    let _ = writeln!(
        svg,
        "<rect x=\"{LEFT}\" y=\"{TOP}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" \
         stroke=\"#333333\" stroke-width=\"1\"/>",
        RIGHT - LEFT,
        BOTTOM - TOP
    );
    for &t in &xticks {
        let x = px(t);
        let _ = writeln!(
            svg,
            "<line x1=\"{x:.2}\" y1=\"{BOTTOM}\" x2=\"{x:.2}\" y2=\"{:.2}\" \
             stroke=\"#333333\" stroke-width=\"1\"/>",
            BOTTOM + 5.0
        );
        let _ = writeln!(
            svg,
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\" \
             fill=\"#333333\">{}</text>",
            BOTTOM + 20.0,
            tick_label(t, xstep)
        );
    }
    for &t in &yticks {
        let y = py(t);
        let _ = writeln!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{LEFT}\" y2=\"{y:.2}\" \
             stroke=\"#333333\" stroke-width=\"1\"/>",
            LEFT - 5.0
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\" \
             fill=\"#333333\">{}</text>",
            LEFT - 9.0,
            y + 4.0,
            tick_label(t, ystep)
        );
    }

    // Title and axis labels.
    let _ = writeln!(
        svg,
        "<text x=\"{:.2}\" y=\"30\" font-size=\"17\" text-anchor=\"middle\" \
         fill=\"#111111\">{}</text>",
        (LEFT + RIGHT) / 2.0,
        esc("Monte Carlo vs. Kantian Continuity")
    );
    let _ = writeln!(
        svg,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\" \
         fill=\"#111111\">{}</text>",
        (LEFT + RIGHT) / 2.0,
        BOTTOM + 48.0,
        esc("Simulated Success Score (Likert 1-5)")
    );
    let _ = writeln!(
        svg,
        "<text x=\"20\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\" \
         fill=\"#111111\" transform=\"rotate(-90 20 {mid:.2})\">{}</text>",
        (TOP + BOTTOM) / 2.0,
        esc("Density / Value"),
        mid = (TOP + BOTTOM) / 2.0
    );

    // Legend, top-left inside the axes.
    let legend_x = LEFT + 14.0;
    let mut legend_y = TOP + 18.0;
    let entry = |svg: &mut String, y: f64, swatch: String, label: &str| {
        svg.push_str(&swatch);
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"#111111\">{}</text>",
            legend_x + 34.0,
            y + 4.0,
            esc(label)
        );
    };
    let line_swatch = |y: f64, color: &str, dashed: bool| {
        format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{color}\" \
             stroke-width=\"2\"{}/>\n",
            legend_x,
            legend_x + 26.0,
            if dashed {
                " stroke-dasharray=\"6 4\""
            } else {
                ""
            }
        )
    };
    let n_entries = 2 + bundle.tangents.len();
    let _ = writeln!(
        svg,
        "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"300\" height=\"{:.2}\" fill=\"white\" \
         fill-opacity=\"0.85\" stroke=\"#999999\" stroke-width=\"0.8\"/>",
        legend_x - 8.0,
        legend_y - 14.0,
        n_entries as f64 * 20.0 + 10.0
    );
    entry(
        &mut svg,
        legend_y,
        format!(
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"26\" height=\"12\" fill=\"skyblue\" \
             fill-opacity=\"0.6\" stroke=\"#7a9db0\" stroke-width=\"0.5\"/>\n",
            legend_x,
            legend_y - 6.0
        ),
        &bundle.source_label,
    );
    legend_y += 20.0;
    entry(
        &mut svg,
        legend_y,
        line_swatch(legend_y, "darkred", false),
        "Kantian Curve: f(x) = sin(\u{3c0}(x\u{2212}1)/4)",
    );
    for (t, color) in bundle.tangents.iter().zip(tangent_colors.iter().cycle()) {
        legend_y += 20.0;
        entry(
            &mut svg,
            legend_y,
            line_swatch(legend_y, color, true),
            &format!("Tangent at x={}", t.x0),
        );
    }

    svg.push_str("</svg>\n");
    svg
}

fn write_text(path: &Path, text: &str) -> Result<(), PlotError> {
    std::fs::write(path, text).map_err(|e| PlotError::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

fn series_csv(xs: impl Iterator<Item = f64>, ys: impl Iterator<Item = f64>) -> String {
    let mut out = String::from("x,y\n");
    for (x, y) in xs.zip(ys) {
        let _ = writeln!(out, "{x},{y}");
    }
    out
}

/// Write the SVG plus one CSV per drawn series next to it:
/// `<stem>_hist.csv` (bin center, height), `<stem>_curve.csv`, and
/// `<stem>_tangent_x<anchor>.csv`, each sharing the curve's x grid. Returns
/// every path written, SVG first.
pub fn emit_plot(bundle: &PlotBundle, svg_path: &Path) -> Result<Vec<PathBuf>, PlotError> {
    let stem = svg_path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| PlotError::InvalidPath {
            path: svg_path.to_path_buf(),
        })?
        .to_string();
    let dir = svg_path.parent().unwrap_or_else(|| Path::new(""));
    let sibling = |suffix: String| dir.join(format!("{stem}{suffix}"));

    let mut written = Vec::new();
    write_text(svg_path, &render_svg(bundle))?;
    written.push(svg_path.to_path_buf());

    let hist = &bundle.histogram;
    let hist_csv = series_csv(
        hist.centers().into_iter(),
        hist.heights.iter().copied(),
    );
    let hist_path = sibling("_hist.csv".into());
    write_text(&hist_path, &hist_csv)?;
    written.push(hist_path);

    let curve_path = sibling("_curve.csv".into());
    write_text(
        &curve_path,
        &series_csv(
            bundle.curve.xs.iter().copied(),
            bundle.curve.ys.iter().copied(),
        ),
    )?;
    written.push(curve_path);

    for t in &bundle.tangents {
        let path = sibling(format!("_tangent_x{}.csv", t.x0));
        write_text(
            &path,
            &series_csv(
                bundle.curve.xs.iter().copied(),
                bundle.curve.xs.iter().map(|&x| t.value_at(x)),
            ),
        )?;
        written.push(path);
    }
    Ok(written)
}
