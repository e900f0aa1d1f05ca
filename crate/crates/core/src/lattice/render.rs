//! Path-system JSON and SVG panels of wall-plane projections.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::shapes::SkewShape;

use super::{LatticePath, PathSystem, Point3};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub shape: String,
    pub m: usize,
    pub paths: Vec<Vec<Point3>>,
}

impl PathSystem {
    pub fn to_json(&self) -> String {
        let js = SystemJson {
            shape: self.shape().to_string(),
            m: self.m(),
            paths: self.paths().iter().map(|p| p.vertices().to_vec()).collect(),
        };
        serde_json::to_string(&js).expect("system serializes")
    }

    /// Reads a system; `n` is the number of listed paths.
    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let js: SystemJson = serde_json::from_str(text).map_err(|e| LatticeError::Contract(e.to_string()))?;
        let shape: SkewShape = js.shape.parse().map_err(|e| LatticeError::Contract(format!("{e}")))?;
        let paths = js.paths.into_iter().map(|v| LatticePath::new(v, js.m)).collect::<Result<Vec<_>, _>>()?;
        PathSystem::new(shape, paths.len(), js.m, paths)
    }
}

const PALETTE: [&str; 8] = ["#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#ff7f0e"];
const CELL: i64 = 32;
const PAD: i64 = 24;

/// One panel per plane `z = 0..=ℓ(λ)`, each showing the projections defined
/// there. The point where a projection first reaches its line `x = i` is
/// marked in red.
pub fn render_svg(sys: &PathSystem) -> String {
    let routes = sys.routes();
    let planes = sys.shape().outer().len() as i64;
    let (min_x, max_x) =
        routes.iter().flat_map(|r| r.vertices()).fold((0i64, sys.n() as i64), |(lo, hi), p| (lo.min(p.x), hi.max(p.x)));
    let width = (max_x - min_x + 1) * CELL + 2 * PAD;
    let height = sys.m() as i64 * CELL + 2 * PAD + 16;
    let total_w = width * (planes + 1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{height}" font-family="sans-serif" font-size="11">"#
    );
    for k in 0..=planes {
        let ox = k * width;
        let sx = |x: i64| ox + PAD + (x - min_x) * CELL;
        let sy = |y: i64| height - PAD - y * CELL;
        let _ = writeln!(out, r#"<g id="plane-{k}">"#);
        let _ =
            writeln!(out, r##"<rect x="{ox}" y="0" width="{width}" height="{height}" fill="none" stroke="#ccc"/>"##);
        let _ = writeln!(out, r#"<text x="{}" y="14">z = {k}</text>"#, ox + PAD);
        for x in min_x..=max_x {
            let _ = writeln!(
                out,
                r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#eee"/>"##,
                sx(x),
                sy(0),
                sy(sys.m() as i64)
            );
        }
        for (idx, r) in routes.iter().enumerate() {
            let Some(xs) = r.projection(k) else { continue };
            let color = PALETTE[idx % PALETTE.len()];
            let pts: Vec<String> = xs.iter().enumerate().map(|(y, &x)| format!("{},{}", sx(x), sy(y as i64))).collect();
            let dash = if r.sink_z == k { "" } else { r#" stroke-dasharray="4 3""# };
            let _ = writeln!(
                out,
                r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"{dash}/>"#,
                pts.join(" ")
            );
            let ty = xs.iter().position(|&x| x == r.sink_x).unwrap_or(xs.len() - 1);
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3" fill="red"/>"#, sx(r.sink_x), sy(ty as i64));
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_systems, DEFAULT_CAP};

    #[test]
    fn json_round_trip() {
        let shape: SkewShape = "2,2/1".parse().unwrap();
        for sys in enumerate_systems(&shape, 2, 2, DEFAULT_CAP).unwrap() {
            let js = sys.to_json();
            assert_eq!(PathSystem::from_json(&js).unwrap(), sys);
        }
    }

    #[test]
    fn json_shape() {
        let shape: SkewShape = "1".parse().unwrap();
        let sys = &enumerate_systems(&shape, 1, 1, DEFAULT_CAP).unwrap()[0];
        assert_eq!(sys.to_json(), r#"{"shape":"1/0","m":1,"paths":[[[0,0,0],[1,1,0]]]}"#);
    }

    #[test]
    fn svg_has_one_panel_per_plane() {
        let shape: SkewShape = "2,1".parse().unwrap();
        let sys = &enumerate_systems(&shape, 2, 2, DEFAULT_CAP).unwrap()[0];
        let svg = render_svg(sys);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<g id=\"plane-").count(), 3);
    }
}
