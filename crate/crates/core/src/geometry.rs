//! Walls as hyperbolas `(s + 1/6)·α² = α₀²/6` in the `(α, s)`-slice, point
//! classification, and static SVG diagrams.
//!
//! Everything except SVG coordinate emission is exact.

use std::fmt::Write as _;
use std::path::Path;

use crate::bounds::BoundReport;
use crate::chern::{StabilityPoint, TwistParameter};
use crate::catalog::catalog_hash;
use crate::enumerate::WallCatalog;
use crate::error::WallError;
use crate::rat::{q, Rat};

/// Points sampled per wall curve.
pub const SAMPLES_PER_WALL: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallKind {
    Killing,
    Maximal,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCurve {
    pub alpha0_sq: Rat,
    pub label: String,
    /// Only ever set from fixture metadata.
    pub actual: Option<bool>,
    pub kind: WallKind,
}

/// `s` on the wall `α₀²` at a given `α²`: `α₀²/(6α²) − 1/6`. May be `≤ 0`.
pub fn wall_s_at(alpha0_sq: &Rat, alpha_sq: &Rat) -> Rat {
    alpha0_sq / (Rat::int(6) * alpha_sq) - q(1, 6)
}

/// Where a point sits relative to the (totally ordered) walls of a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberDescriptor {
    /// `(s + 1/6)·α²` at the point.
    pub q: Rat,
    /// Walls with `α₀²/6 < q`, descending.
    pub walls_below: Vec<Rat>,
    /// Walls with `α₀²/6 > q`, descending.
    pub walls_above: Vec<Rat>,
    pub on_wall: Option<Rat>,
}

impl ChamberDescriptor {
    pub fn is_single_chamber(&self) -> bool {
        self.walls_below.is_empty() && self.walls_above.is_empty() && self.on_wall.is_none()
    }

    /// Strictly outside every wall (the Gieseker side).
    pub fn is_outermost(&self) -> bool {
        self.walls_above.is_empty() && self.on_wall.is_none()
    }
}

pub fn classify_point(p: &StabilityPoint, catalog: &WallCatalog) -> ChamberDescriptor {
    let q = p.wall_parameter();
    let mut desc = ChamberDescriptor {
        q: q.clone(),
        walls_below: Vec::new(),
        walls_above: Vec::new(),
        on_wall: None,
    };
    for (alpha0_sq, _) in &catalog.walls {
        let level = alpha0_sq / Rat::int(6);
        match level.cmp(&q) {
            std::cmp::Ordering::Less => desc.walls_below.push(alpha0_sq.clone()),
            std::cmp::Ordering::Greater => desc.walls_above.push(alpha0_sq.clone()),
            std::cmp::Ordering::Equal => desc.on_wall = Some(alpha0_sq.clone()),
        }
    }
    desc
}

/// One curve per distinct `α₀²` in the catalog.
pub fn wall_curves(catalog: &WallCatalog) -> Vec<WallCurve> {
    let max = catalog.walls.first().map(|(a, _)| a.clone());
    catalog
        .walls
        .iter()
        .map(|(alpha0_sq, _)| {
            let kind = if catalog.twist == TwistParameter::Zero && *alpha0_sq == Rat::one() {
                WallKind::Killing
            } else if Some(alpha0_sq) == max.as_ref() {
                WallKind::Maximal
            } else {
                WallKind::Other
            };
            WallCurve {
                alpha0_sq: alpha0_sq.clone(),
                label: format!("alpha0^2 = {alpha0_sq}"),
                actual: None,
                kind,
            }
        })
        .collect()
}

/// The plotted rectangle `0 < α ≤ alpha_max`, `0 < s ≤ s_max`, and its size
/// in pixels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct View {
    pub alpha_max: Rat,
    pub s_max: Rat,
    pub width: u32,
    pub height: u32,
}

impl View {
    pub fn new(alpha_max: Rat, s_max: Rat, width: u32, height: u32) -> Result<Self, WallError> {
        if !alpha_max.is_positive() {
            return Err(WallError::NotPositive { what: "alpha_max", value: alpha_max });
        }
        if !s_max.is_positive() {
            return Err(WallError::NotPositive { what: "s_max", value: s_max });
        }
        if width < 100 || height < 100 {
            return Err(WallError::NotPositive { what: "view size - 99", value: Rat::zero() });
        }
        Ok(View { alpha_max, s_max, width, height })
    }

    /// Wide enough to show every wall's `α`-intercept.
    pub fn fit(catalog: &WallCatalog) -> Self {
        let top = catalog
            .walls
            .first()
            .map(|(a, _)| a.to_f64().sqrt())
            .unwrap_or(1.0);
        let alpha_max = ((top * 1.25 * 4.0).ceil() as i64).max(4);
        View {
            alpha_max: q(alpha_max, 4),
            s_max: Rat::int(2),
            width: 640,
            height: 480,
        }
    }
}

const MARGIN: f64 = 48.0;

struct Frame {
    alpha_max: f64,
    s_max: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn x(&self, alpha: f64) -> f64 {
        MARGIN + alpha / self.alpha_max * (self.width - 2.0 * MARGIN)
    }

    fn y(&self, s: f64) -> f64 {
        self.height - MARGIN - s / self.s_max * (self.height - 2.0 * MARGIN)
    }

    fn point(&self, alpha: f64, s: f64) -> String {
        format!("{:.2},{:.2}", self.x(alpha), self.y(s))
    }
}

/// Sample the wall at `SAMPLES_PER_WALL` geometrically spaced `α` in
/// `(α₀/64, α₀]`, keeping the part inside the view. The entry point on the
/// top edge is added when the curve leaves through it.
fn wall_points(alpha0_sq: &Rat, frame: &Frame) -> Vec<(f64, f64)> {
    let a0 = alpha0_sq.to_f64().sqrt();
    let s_of = |alpha: f64| alpha0_sq.to_f64() / (6.0 * alpha * alpha) - 1.0 / 6.0;
    let mut pts = Vec::with_capacity(SAMPLES_PER_WALL + 1);
    let entry = (alpha0_sq.to_f64() / (6.0 * frame.s_max + 1.0)).sqrt();
    if entry > a0 / 64.0 && entry <= frame.alpha_max {
        pts.push((entry, frame.s_max));
    }
    for i in 0..SAMPLES_PER_WALL {
        let t = (i + 1) as f64 / SAMPLES_PER_WALL as f64;
        let alpha = a0 / 64.0 * 64f64.powf(t);
        let s = if i + 1 == SAMPLES_PER_WALL { 0.0 } else { s_of(alpha) };
        if alpha <= frame.alpha_max && s <= frame.s_max && alpha > entry {
            pts.push((alpha, s));
        }
    }
    pts
}

/// Deterministic SVG source for the catalog's walls.
pub fn svg_document(
    catalog: &WallCatalog,
    curves: &[WallCurve],
    bounds: &BoundReport,
    view: &View,
) -> String {
    let frame = Frame {
        alpha_max: view.alpha_max.to_f64(),
        s_max: view.s_max.to_f64(),
        width: view.width as f64,
        height: view.height as f64,
    };
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = view.width,
        h = view.height
    );
    let _ = writeln!(
        svg,
        "<!-- wallkit R={} D={} beta={} catalog-sha256={} -->",
        catalog.target.rank_deficit,
        catalog.target.degree,
        catalog.twist,
        catalog_hash(catalog)
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        view.width, view.height
    );

    // Rank-zero region: (s + 1/6)α² > D/3, i.e. above the α₀² = 2D curve.
    let rz = &bounds.rank_zero_threshold_sq;
    let mut region = wall_points(rz, &frame);
    if let Some(&(first_alpha, _)) = region.first() {
        if rz.to_f64().sqrt() < frame.alpha_max {
            region.push((frame.alpha_max, 0.0));
        }
        region.push((frame.alpha_max, frame.s_max));
        region.push((first_alpha, frame.s_max));
        let pts: Vec<String> = region.iter().map(|&(a, s)| frame.point(a, s)).collect();
        let _ = writeln!(
            svg,
            r##"<polygon class="rank-zero" points="{}" fill="#c8f0c8" fill-opacity="0.6" stroke="none"/>"##,
            pts.join(" ")
        );
    }

    // Axes.
    let (x0, y0) = (frame.x(0.0), frame.y(0.0));
    let _ = writeln!(
        svg,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="black"/>"#,
        frame.x(frame.alpha_max)
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{:.2}" stroke="black"/>"#,
        frame.y(frame.s_max)
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">α</text>"#,
        frame.x(frame.alpha_max) + 8.0,
        y0 + 4.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">s</text>"#,
        x0 - 4.0,
        frame.y(frame.s_max) - 10.0
    );
    for tick in 1..=(frame.alpha_max.floor() as i64) {
        let x = frame.x(tick as f64);
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{tick}</text>"#,
            y0 + 16.0
        );
    }

    for curve in curves {
        let pts = wall_points(&curve.alpha0_sq, &frame);
        if pts.is_empty() {
            continue;
        }
        let (class, color, width) = match (curve.kind, curve.actual) {
            (WallKind::Killing, _) => ("killing", "#d62728", 2.0),
            (WallKind::Maximal, _) => ("maximal", "#1f77b4", 2.0),
            (WallKind::Other, Some(true)) => ("actual", "#ff7f0e", 1.5),
            (WallKind::Other, _) => ("numerical", "#7f7f7f", 1.0),
        };
        let coords: Vec<String> = pts.iter().map(|&(a, s)| frame.point(a, s)).collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="wall {class}" points="{}" fill="none" stroke="{color}" stroke-width="{width}"><title>{}</title></polyline>"#,
            coords.join(" "),
            curve.label
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Write the diagram for `catalog` to `path`.
pub fn render_svg(
    catalog: &WallCatalog,
    bounds: &BoundReport,
    view: &View,
    path: &Path,
) -> Result<(), WallError> {
    let doc = svg_document(catalog, &wall_curves(catalog), bounds, view);
    std::fs::write(path, doc).map_err(|source| WallError::Io { path: path.to_path_buf(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bound_report;
    use crate::conditions::TargetClass;
    use crate::enumerate::{enumerate_walls, EnumerationOptions};

    fn d3() -> WallCatalog {
        enumerate_walls(&TargetClass::new(0, 3).unwrap(), &TwistParameter::Zero, &Default::default())
            .unwrap()
    }

    #[test]
    fn wall_s_at_examples() {
        assert_eq!(wall_s_at(&Rat::int(7), &Rat::one()), Rat::one());
        assert_eq!(wall_s_at(&Rat::one(), &Rat::one()), Rat::zero());
        assert_eq!(wall_s_at(&Rat::int(6), &Rat::one()), q(5, 6));
    }

    #[test]
    fn classify_examples() {
        let cat = d3();
        let p = StabilityPoint::new(Rat::int(49), Rat::one()).unwrap();
        let c = classify_point(&p, &cat);
        assert_eq!(c.q, q(343, 6));
        assert_eq!(c.walls_below, vec![Rat::int(7), Rat::one(), q(1, 7)]);
        assert!(c.is_outermost());

        let p = StabilityPoint::new(Rat::one(), Rat::one()).unwrap();
        let c = classify_point(&p, &cat);
        assert_eq!(c.on_wall, Some(Rat::int(7)));
        assert_eq!(c.walls_below, vec![Rat::one(), q(1, 7)]);
        assert!(c.walls_above.is_empty());

        let empty = enumerate_walls(
            &TargetClass::new(0, 3).unwrap(),
            &TwistParameter::Zero,
            &EnumerationOptions::with_min(Rat::int(50)),
        )
        .unwrap();
        assert!(classify_point(&p, &empty).is_single_chamber());
    }

    #[test]
    fn curves_for_d3() {
        let curves = wall_curves(&d3());
        assert_eq!(curves.len(), 3);
        assert_eq!(curves[0].kind, WallKind::Maximal);
        assert_eq!(curves[0].alpha0_sq, Rat::int(7));
        assert_eq!(curves[1].kind, WallKind::Killing);
        assert_eq!(curves[2].kind, WallKind::Other);
    }

    #[test]
    fn svg_has_three_curves_and_is_deterministic() {
        let cat = d3();
        let bounds = bound_report(3, &TwistParameter::Zero).unwrap();
        let view = View::fit(&cat);
        let a = svg_document(&cat, &wall_curves(&cat), &bounds, &view);
        let b = svg_document(&cat, &wall_curves(&cat), &bounds, &view);
        assert_eq!(a, b);
        assert_eq!(a.matches("<polyline").count(), 3);
        assert!(a.contains("wall killing"));
        assert!(a.contains("wall maximal"));
        assert!(a.contains(&catalog_hash(&cat)));
        // the killing wall meets the axis at α = 1
        let killing = a.lines().find(|l| l.contains("wall killing")).unwrap();
        let frame_x = MARGIN + 1.0 / view.alpha_max.to_f64() * (640.0 - 2.0 * MARGIN);
        let axis_y = 480.0 - MARGIN;
        assert!(killing.contains(&format!("{frame_x:.2},{axis_y:.2}\"")));
    }

    #[test]
    fn svg_empty_catalog_has_axes_only() {
        let cat = enumerate_walls(
            &TargetClass::new(0, 3).unwrap(),
            &TwistParameter::Zero,
            &EnumerationOptions::with_min(Rat::int(50)),
        )
        .unwrap();
        let bounds = bound_report(3, &TwistParameter::Zero).unwrap();
        let view = View::fit(&cat);
        let doc = svg_document(&cat, &wall_curves(&cat), &bounds, &view);
        assert_eq!(doc.matches("<polyline").count(), 0);
        assert_eq!(doc.matches("<line").count(), 2);
    }

    #[test]
    fn render_to_unwritable_path_fails() {
        let cat = d3();
        let bounds = bound_report(3, &TwistParameter::Zero).unwrap();
        let err = render_svg(&cat, &bounds, &View::fit(&cat), Path::new("/nonexistent/dir/x.svg"));
        assert!(matches!(err, Err(WallError::Io { .. })));
    }

    #[test]
    fn view_validation() {
        assert!(View::new(Rat::zero(), Rat::one(), 640, 480).is_err());
        assert!(View::new(Rat::one(), Rat::one(), 10, 480).is_err());
        assert!(View::new(Rat::int(4), Rat::int(2), 640, 480).is_ok());
    }
}
