//! Deterministic SVG rendering: same scene in, same bytes out.
//!
//! Every coordinate is printed with six decimals (no locale, no shortest-float
//! wobble), the y axis is flipped so the picture matches math convention, and
//! magnet marks are strided down to at most [`MAX_MAGNET_MARKS`] so a dense
//! sampling doesn't produce a multi-megabyte file.

use lodestone::{CurveView, EscapePlan, MagnetizedCurve};

/// Upper bound on rendered magnet dots; past this we draw every k-th magnet.
pub const MAX_MAGNET_MARKS: usize = 500;

/// Fixed six-decimal formatting; negative zero collapses to zero so the
/// output never depends on the sign of a rounding error.
fn f6(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.6}")
}

/// y axis points up in the plane and down in SVG, so every y is negated.
fn fy(y: f64) -> String {
    f6(-y)
}

pub fn render_svg(mc: &MagnetizedCurve, plan: Option<&EscapePlan>) -> String {
    let (lo, hi) = mc.curve().bounding_box();
    let w = hi[0] - lo[0];
    let h = hi[1] - lo[1];
    let extent = w.max(h);
    let margin = 0.05 * extent;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        f6(lo[0] - margin),
        f6(-(hi[1] + margin)),
        f6(w + 2.0 * margin),
        f6(h + 2.0 * margin)
    ));
    svg.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" ",
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">",
        "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"crimson\"/></marker></defs>\n"
    ));

    let stroke = 0.004 * extent;
    match mc.curve().view() {
        CurveView::Circle { center, radius } => {
            svg.push_str(&format!(
                "<circle class=\"boundary\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n",
                f6(center[0]),
                fy(center[1]),
                f6(radius),
                f6(stroke)
            ));
        }
        CurveView::Loop(points) => {
            let coords: Vec<String> = points
                .iter()
                .map(|p| format!("{},{}", f6(p[0]), fy(p[1])))
                .collect();
            svg.push_str(&format!(
                "<polygon class=\"boundary\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n",
                coords.join(" "),
                f6(stroke)
            ));
        }
    }

    let n = mc.magnets().len();
    let stride = n.div_ceil(MAX_MAGNET_MARKS).max(1);
    let dot = 0.006 * extent;
    let mut id = 0;
    while id < n {
        let p = mc.magnets().position(id);
        svg.push_str(&format!(
            "<circle class=\"magnet\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"steelblue\"/>\n",
            f6(p[0]),
            fy(p[1]),
            f6(dot)
        ));
        id += stride;
    }

    if let Some(plan) = plan {
        let hiker = plan.hiker.coords();
        let exit = plan.exit_point.coords();
        svg.push_str(&format!(
            "<line class=\"escape\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"crimson\" stroke-width=\"{}\" marker-end=\"url(#arrow)\"/>\n",
            f6(hiker[0]),
            fy(hiker[1]),
            f6(exit[0]),
            fy(exit[1]),
            f6(stroke)
        ));
        svg.push_str(&format!(
            "<circle class=\"hiker\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"forestgreen\"/>\n",
            f6(hiker[0]),
            fy(hiker[1]),
            f6(2.0 * dot)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
