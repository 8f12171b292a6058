//! Self-contained SVG line plots: axes, ticks, series, legend. CSV files
//! stay the authoritative artifact; these exist for eyeballing.

use std::fmt::Write as _;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub log_x: bool,
    pub log_y: bool,
    pub series: Vec<Series>,
}

impl Plot {
    pub fn new(title: &str, x_label: &str, y_label: &str) -> Self {
        Self {
            title: title.to_string(),
            x_label: x_label.to_string(),
            y_label: y_label.to_string(),
            log_x: false,
            log_y: false,
            series: Vec::new(),
        }
    }

    pub fn log_log(mut self) -> Self {
        self.log_x = true;
        self.log_y = true;
        self
    }

    pub fn with_series(mut self, label: &str, points: Vec<(f64, f64)>) -> Self {
        self.series.push(Series {
            label: label.to_string(),
            points,
        });
        self
    }

    pub fn to_svg(&self, provenance: &str) -> String {
        let (width, height) = (640.0, 440.0);
        let (left, right, top, bottom) = (70.0, 20.0, 40.0, 55.0);
        let plot_w = width - left - right;
        let plot_h = height - top - bottom;

        let tx = |v: f64| if self.log_x { v.max(1e-12).log10() } else { v };
        let ty = |v: f64| if self.log_y { v.max(1e-12).log10() } else { v };
        let mut xs: Vec<f64> = Vec::new();
        let mut ys: Vec<f64> = Vec::new();
        for s in &self.series {
            for &(x, y) in &s.points {
                xs.push(tx(x));
                ys.push(ty(y));
            }
        }
        let (x_min, x_max) = padded_range(&xs);
        let (y_min, y_max) = padded_range(&ys);
        let px = |x: f64| left + (tx(x) - x_min) / (x_max - x_min) * plot_w;
        let py = |y: f64| top + plot_h - (ty(y) - y_min) / (y_max - y_min) * plot_h;

        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\" font-family=\"sans-serif\">"
        );
        let _ = writeln!(out, "<!-- {provenance} -->");
        let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
        let _ = writeln!(
            out,
            "<text x=\"{:.0}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>",
            width / 2.0,
            xml_escape(&self.title)
        );
        // frame
        let _ = writeln!(
            out,
            "<rect x=\"{left}\" y=\"{top}\" width=\"{plot_w}\" height=\"{plot_h}\" fill=\"none\" stroke=\"#333\"/>"
        );
        // ticks
        for i in 0..=4 {
            let fx = x_min + (x_max - x_min) * i as f64 / 4.0;
            let fy = y_min + (y_max - y_min) * i as f64 / 4.0;
            let sx = left + plot_w * i as f64 / 4.0;
            let sy = top + plot_h - plot_h * i as f64 / 4.0;
            let x_value = if self.log_x { 10f64.powf(fx) } else { fx };
            let y_value = if self.log_y { 10f64.powf(fy) } else { fy };
            let _ = writeln!(
                out,
                "<line x1=\"{sx:.1}\" y1=\"{:.1}\" x2=\"{sx:.1}\" y2=\"{:.1}\" stroke=\"#333\"/>",
                top + plot_h,
                top + plot_h + 5.0
            );
            let _ = writeln!(
                out,
                "<text x=\"{sx:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"11\">{}</text>",
                top + plot_h + 19.0,
                tick_label(x_value)
            );
            let _ = writeln!(
                out,
                "<line x1=\"{:.1}\" y1=\"{sy:.1}\" x2=\"{left:.1}\" y2=\"{sy:.1}\" stroke=\"#333\"/>",
                left - 5.0
            );
            let _ = writeln!(
                out,
                "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"11\">{}</text>",
                left - 9.0,
                sy + 4.0,
                tick_label(y_value)
            );
        }
        // axis labels
        let _ = writeln!(
            out,
            "<text x=\"{:.0}\" y=\"{:.0}\" text-anchor=\"middle\" font-size=\"13\">{}</text>",
            left + plot_w / 2.0,
            height - 12.0,
            xml_escape(&self.x_label)
        );
        let _ = writeln!(
            out,
            "<text x=\"16\" y=\"{:.0}\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 {:.0})\">{}</text>",
            top + plot_h / 2.0,
            top + plot_h / 2.0,
            xml_escape(&self.y_label)
        );
        // series
        for (i, s) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let path: Vec<String> = s
                .points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            let _ = writeln!(
                out,
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.8\" points=\"{}\"/>",
                path.join(" ")
            );
            for &(x, y) in &s.points {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.6\" fill=\"{color}\"/>",
                    px(x),
                    py(y)
                );
            }
            let ly = top + 16.0 + 18.0 * i as f64;
            let _ = writeln!(
                out,
                "<line x1=\"{:.1}\" y1=\"{ly:.1}\" x2=\"{:.1}\" y2=\"{ly:.1}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                left + plot_w - 130.0,
                left + plot_w - 108.0
            );
            let _ = writeln!(
                out,
                "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\">{}</text>",
                left + plot_w - 102.0,
                ly + 4.0,
                xml_escape(&s.label)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn padded_range(values: &[f64]) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in values {
        min = min.min(v);
        max = max.max(v);
    }
    if !min.is_finite() || !max.is_finite() {
        return (0.0, 1.0);
    }
    if min == max {
        return (min - 0.5, max + 0.5);
    }
    let pad = (max - min) * 0.06;
    (min - pad, max + pad)
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let abs = v.abs();
    if !(0.01..1000.0).contains(&abs) {
        format!("{v:.1e}")
    } else if abs >= 10.0 {
        format!("{v:.0}")
    } else if abs >= 1.0 {
        format!("{v:.1}")
    } else {
        format!("{v:.3}")
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
