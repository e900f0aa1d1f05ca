//! The 3D weighted lattice: wall steps on planes `z = k`, floor steps on the
//! plane `y = 0`, path enumeration between sources and sinks, and the
//! signed sum over nonintersecting path systems.
//!
//! A path whose source sits one plane below its sink (which happens for a
//! column where `λ'_i = μ'_i`) starts with a single unit lift step
//! `(x, 0, z) → (x + 1, 0, z + 1)` and continues with wall steps only.

mod bijection;
mod ops;
mod render;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::poly::{Monomial, MultiPoly};
use crate::shapes::{Partition, SkewShape};

pub use bijection::{from_rpp, to_reduced_filling, to_rpp};
pub use ops::{
    cut_edge, good_sum, is_good, path_involution, project, step, step_slide, transpose, CutEdge, CutKind, Direction,
    WallProjection,
};
pub use render::{render_svg, SystemJson};

/// Default limit on the number of path systems an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct Point3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Point3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Point3 { x, y, z }
    }
}

impl From<[i64; 3]> for Point3 {
    fn from(a: [i64; 3]) -> Self {
        Point3::new(a[0], a[1], a[2])
    }
}

impl From<Point3> for [i64; 3] {
    fn from(p: Point3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `(x, y, z) → (x, y+1, z)`, weight 1
    Vertical,
    /// `(x, y, z) → (x+1, y+1, z)`, weight `x_{m-y}`
    Diagonal,
    /// `(x, 0, z) → (x, 0, z-1)`, weight `t_z`
    FloorT,
    /// `(x, 0, z) → (x-1, 0, z-1)`, weight 1
    FloorUnit,
    /// `(x, 0, z) → (x+1, 0, z+1)`, weight 1; only as the first step of a
    /// path that continues on a wall
    Lift,
}

impl StepKind {
    pub fn classify(from: Point3, to: Point3, m: usize) -> Option<StepKind> {
        let d = (to.x - from.x, to.y - from.y, to.z - from.z);
        match d {
            (0, 1, 0) if from.y >= 0 && to.y <= m as i64 => Some(StepKind::Vertical),
            (1, 1, 0) if from.y >= 0 && from.y < m as i64 => Some(StepKind::Diagonal),
            (0, 0, -1) if from.y == 0 && from.z > 0 => Some(StepKind::FloorT),
            (-1, 0, -1) if from.y == 0 => Some(StepKind::FloorUnit),
            (1, 0, 1) if from.y == 0 => Some(StepKind::Lift),
            _ => None,
        }
    }

    pub fn is_floor(self) -> bool {
        matches!(self, StepKind::FloorT | StepKind::FloorUnit)
    }

    pub fn is_wall(self) -> bool {
        matches!(self, StepKind::Vertical | StepKind::Diagonal)
    }

    /// Weight of this step when it starts at `from`.
    pub fn weight(self, from: Point3, m: usize) -> Monomial {
        let mut x = Vec::new();
        let mut t = Vec::new();
        match self {
            StepKind::Diagonal => {
                let s = m - from.y as usize;
                x.resize(s, 0);
                x[s - 1] = 1;
            }
            StepKind::FloorT => {
                let j = from.z as usize;
                t.resize(j, 0);
                t[j - 1] = 1;
            }
            _ => {}
        }
        Monomial::new(x, t)
    }
}

/// Compact description of a legal path: its sink, the kinds of its floor
/// steps and which of its wall steps are diagonal. Every geometric quantity
/// is derived from these.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Route {
    pub sink_x: i64,
    pub sink_z: i64,
    /// `floor[k - sink_z]` is true when the step between planes `k+1` and `k`
    /// is a `t`-step.
    pub floor: Vec<bool>,
    /// `diag[y]` is true when the wall step leaving height `y` is diagonal.
    pub diag: Vec<bool>,
    pub lifted: bool,
}

impl Route {
    pub fn top_z(&self) -> i64 {
        self.sink_z + self.floor.len() as i64
    }

    pub fn wall_start_x(&self) -> i64 {
        self.sink_x - self.diag.iter().filter(|&&d| d).count() as i64
    }

    /// Number of unit floor steps between the sink plane and plane `k`.
    pub fn unit_steps_below(&self, k: i64) -> i64 {
        let upto = (k - self.sink_z).clamp(0, self.floor.len() as i64) as usize;
        self.floor[..upto].iter().filter(|&&t| !t).count() as i64
    }

    /// x-coordinate where the path crosses plane `k` on the floor.
    pub fn floor_x(&self, k: i64) -> i64 {
        self.wall_start_x() + self.unit_steps_below(k)
    }

    pub fn wall_x(&self, y: usize) -> i64 {
        self.wall_start_x() + self.diag[..y].iter().filter(|&&d| d).count() as i64
    }

    /// Whether the floor step between planes `k` and `k+1` is a `t`-step.
    pub fn floor_is_t(&self, k: i64) -> Option<bool> {
        let idx = k - self.sink_z;
        if idx < 0 {
            return None;
        }
        self.floor.get(idx as usize).copied()
    }

    pub fn set_floor(&mut self, k: i64, is_t: bool) {
        let idx = (k - self.sink_z) as usize;
        self.floor[idx] = is_t;
    }

    /// x-coordinates of the projection on plane `k`, indexed by height, or
    /// `None` when undefined.
    pub fn projection(&self, k: i64) -> Option<Vec<i64>> {
        if k < self.sink_z || k > self.top_z() || self.floor_x(k) > self.sink_x {
            return None;
        }
        let shift = self.unit_steps_below(k);
        Some((0..=self.diag.len()).map(|y| (self.wall_x(y) + shift).min(self.sink_x)).collect())
    }

    pub fn vertices(&self) -> Vec<Point3> {
        let mut out = Vec::with_capacity(self.floor.len() + self.diag.len() + 2);
        if self.lifted {
            out.push(Point3::new(self.wall_start_x() - 1, 0, self.sink_z - 1));
        }
        for z in (self.sink_z..=self.top_z()).rev() {
            out.push(Point3::new(self.floor_x(z), 0, z));
        }
        for y in 1..=self.diag.len() {
            out.push(Point3::new(self.wall_x(y), y as i64, self.sink_z));
        }
        out
    }

    pub fn weight(&self, m: usize) -> Monomial {
        let mut x = vec![0u32; m];
        for (y, &d) in self.diag.iter().enumerate() {
            if d {
                x[m - 1 - y] += 1;
            }
        }
        let mut t = vec![0u32; self.top_z().max(0) as usize];
        for (idx, &is_t) in self.floor.iter().enumerate() {
            if is_t {
                t[self.sink_z as usize + idx] += 1;
            }
        }
        Monomial::new(x, t)
    }

    pub fn to_path(&self, m: usize) -> LatticePath {
        LatticePath { vertices: self.vertices(), m }
    }
}

/// A legal lattice path stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    vertices: Vec<Point3>,
    m: usize,
}

impl LatticePath {
    /// Checks that consecutive vertices differ by legal steps, floor steps
    /// precede wall steps, and the path ends at height `m`.
    pub fn new(vertices: Vec<Point3>, m: usize) -> Result<Self, LatticeError> {
        let path = LatticePath { vertices, m };
        path.route()?;
        Ok(path)
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn source(&self) -> Point3 {
        self.vertices[0]
    }

    pub fn sink(&self) -> Point3 {
        *self.vertices.last().unwrap()
    }

    pub fn steps(&self) -> Vec<StepKind> {
        self.vertices.windows(2).map(|w| StepKind::classify(w[0], w[1], self.m).expect("validated path")).collect()
    }

    pub fn weight(&self) -> MultiPoly {
        MultiPoly::monomial(self.route().expect("validated path").weight(self.m))
    }

    pub(crate) fn route(&self) -> Result<Route, LatticeError> {
        let bad = |msg: String| Err(LatticeError::IllegalPath(msg));
        let Some(&first) = self.vertices.first() else {
            return bad("no vertices".into());
        };
        if first.y != 0 {
            return bad(format!("source {first} is not on the floor"));
        }
        let mut floor = Vec::new();
        let mut diag = Vec::new();
        let mut lifted = false;
        for (idx, w) in self.vertices.windows(2).enumerate() {
            let Some(kind) = StepKind::classify(w[0], w[1], self.m) else {
                return bad(format!("{} → {} is not a step", w[0], w[1]));
            };
            match kind {
                StepKind::Lift if idx == 0 => lifted = true,
                StepKind::Lift => return bad("lift step after the start".into()),
                StepKind::FloorT | StepKind::FloorUnit => {
                    if lifted || !diag.is_empty() {
                        return bad(format!("floor step at {} after a wall step or lift", w[0]));
                    }
                    floor.push(kind == StepKind::FloorT);
                }
                StepKind::Vertical | StepKind::Diagonal => diag.push(kind == StepKind::Diagonal),
            }
        }
        let sink = self.sink();
        if diag.len() != self.m || sink.y != self.m as i64 {
            return bad(format!("path ends at {sink}, not at height {}", self.m));
        }
        floor.reverse();
        Ok(Route { sink_x: sink.x, sink_z: sink.z, floor, diag, lifted })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" → "))
    }
}

/// All legal paths from `a` to `b`: `a.z - b.z` floor steps followed by `m`
/// wall steps, or a lift followed by `m` wall steps when `a` is one plane
/// below `b`.
pub fn enumerate_paths(a: Point3, b: Point3, m: usize) -> Vec<LatticePath> {
    enumerate_routes(a, b, m).into_iter().map(|r| r.to_path(m)).collect()
}

pub(crate) fn enumerate_routes(a: Point3, b: Point3, m: usize) -> Vec<Route> {
    if a.y != 0 || b.y != m as i64 {
        return Vec::new();
    }
    let (lifted, drop) = if a.z + 1 == b.z {
        (true, 0)
    } else if a.z >= b.z {
        (false, (a.z - b.z) as usize)
    } else {
        return Vec::new();
    };
    let wall_start = if lifted { a.x + 1 } else { a.x };
    let mut out = Vec::new();
    for fmask in 0u64..(1 << drop) {
        let floor: Vec<bool> = (0..drop).map(|i| fmask >> i & 1 == 1).collect();
        // t-steps need an upper plane z > 0
        if floor.iter().enumerate().any(|(i, &t)| t && b.z + (i as i64) < 0) {
            continue;
        }
        let units = floor.iter().filter(|&&t| !t).count() as i64;
        let start_x = wall_start - units;
        let need = b.x - start_x;
        if need < 0 || need > m as i64 {
            continue;
        }
        for dmask in 0u64..(1 << m) {
            if dmask.count_ones() as i64 != need {
                continue;
            }
            let diag: Vec<bool> = (0..m).map(|y| dmask >> y & 1 == 1).collect();
            out.push(Route { sink_x: b.x, sink_z: b.z, floor: floor.clone(), diag, lifted });
        }
    }
    out.sort_by_key(|r| r.vertices());
    out
}

/// Sources `A_i = (i-1, 0, λ'_i - 1)` for `i = 1..n`.
pub fn sources(shape: &SkewShape, n: usize) -> Vec<Point3> {
    let lc = shape.outer().conjugate();
    (1..=n).map(|i| Point3::new(i as i64 - 1, 0, lc.part(i) as i64 - 1)).collect()
}

/// Sinks `B_i = (i, m, μ'_i)` for `i = 1..n`.
pub fn sinks(shape: &SkewShape, n: usize, m: usize) -> Vec<Point3> {
    let mc = shape.inner().conjugate();
    (1..=n).map(|i| Point3::new(i as i64, m as i64, mc.part(i) as i64)).collect()
}

fn t_count(shape: &SkewShape) -> usize {
    shape.outer().len().saturating_sub(1)
}

/// Weighted count of paths `A_i → B_j` (1-based indices).
pub fn pair_enumerator(lam: &Partition, mu: &Partition, i: usize, j: usize, m: usize) -> MultiPoly {
    let shape = SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ");
    let n = i.max(j);
    let a = sources(&shape, n)[i - 1];
    let b = sinks(&shape, n, m)[j - 1];
    let out: MultiPoly = enumerate_routes(a, b, m).iter().map(|r| MultiPoly::monomial(r.weight(m))).sum();
    out.with_vars(m, t_count(&shape))
}

/// A family of paths `P_1..P_n` where `P_i` ends at `B_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    shape: SkewShape,
    n: usize,
    m: usize,
    paths: Vec<LatticePath>,
}

impl PathSystem {
    /// Validates that each path is legal, that `P_i` ends at `B_i`, and that
    /// the sources are a permutation of the `A_i`.
    pub fn new(shape: SkewShape, n: usize, m: usize, paths: Vec<LatticePath>) -> Result<Self, LatticeError> {
        if n < shape.outer().first() || n < shape.inner().first() {
            return Err(LatticeError::Contract(format!("n = {n} is below λ₁ or μ₁ for {shape}")));
        }
        if paths.len() != n {
            return Err(LatticeError::Contract(format!("expected {n} paths, got {}", paths.len())));
        }
        let sys = PathSystem { shape, n, m, paths };
        for (i, (p, b)) in sys.paths.iter().zip(sinks(&sys.shape, n, m)).enumerate() {
            if p.m != m {
                return Err(LatticeError::Contract(format!("path {} uses m = {}", i + 1, p.m)));
            }
            p.route()?;
            if p.sink() != b {
                return Err(LatticeError::Contract(format!("path {} ends at {}, not {b}", i + 1, p.sink())));
            }
        }
        sys.permutation()?;
        Ok(sys)
    }

    pub(crate) fn from_routes(shape: SkewShape, n: usize, m: usize, routes: &[Route]) -> Self {
        let paths = routes.iter().map(|r| r.to_path(m)).collect();
        PathSystem { shape, n, m, paths }
    }

    pub(crate) fn routes(&self) -> Vec<Route> {
        self.paths.iter().map(|p| p.route().expect("validated path")).collect()
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    /// `σ` as a 1-based vector: `P_j` starts at `A_i` when `σ[i-1] = j`.
    pub fn permutation(&self) -> Result<Vec<usize>, LatticeError> {
        let a = sources(&self.shape, self.n);
        let mut sigma = vec![0usize; self.n];
        for (j, p) in self.paths.iter().enumerate() {
            let Some(i) = a.iter().position(|&s| s == p.source()) else {
                return Err(LatticeError::Contract(format!("path {} starts at {}, not a source", j + 1, p.source())));
            };
            if sigma[i] != 0 {
                return Err(LatticeError::Contract(format!("source {} used twice", a[i])));
            }
            sigma[i] = j + 1;
        }
        Ok(sigma)
    }

    pub fn sign(&self) -> i32 {
        let sigma = self.permutation().expect("validated system");
        let mut seen = vec![false; sigma.len()];
        let mut sign = 1;
        for start in 0..sigma.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = sigma[cur] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn weight(&self) -> MultiPoly {
        self.paths.iter().map(|p| p.weight()).product::<MultiPoly>().with_vars(self.m, t_count(&self.shape))
    }

    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().flat_map(|p| p.vertices.iter()).all(|v| seen.insert(*v))
    }
}

/// Every vertex-disjoint system from the sources to the sinks, over all
/// permutations. Fails once more than `cap` systems have been found.
pub fn enumerate_systems(shape: &SkewShape, n: usize, m: usize, cap: usize) -> Result<Vec<PathSystem>, LatticeError> {
    if n < shape.outer().first() || n < shape.inner().first() {
        return Err(LatticeError::Contract(format!("n = {n} is below λ₁ or μ₁ for {shape}")));
    }
    let a = sources(shape, n);
    let b = sinks(shape, n, m);
    // table[j][i]: routes A_i → B_j with their vertex lists
    type Candidates = Vec<(Route, Vec<Point3>)>;
    let table: Vec<Vec<Candidates>> = b
        .iter()
        .map(|&bj| {
            a.iter()
                .map(|&ai| {
                    enumerate_routes(ai, bj, m)
                        .into_iter()
                        .map(|r| {
                            let v = r.vertices();
                            (r, v)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    struct Search<'a> {
        table: &'a [Vec<Candidates>],
        used: Vec<bool>,
        occupied: HashSet<Point3>,
        chosen: Vec<Route>,
        found: Vec<Vec<Route>>,
        cap: usize,
    }

    fn go(s: &mut Search<'_>, j: usize) -> Result<(), LatticeError> {
        if j == s.table.len() {
            if s.found.len() >= s.cap {
                return Err(LatticeError::CapExceeded { cap: s.cap });
            }
            s.found.push(s.chosen.clone());
            return Ok(());
        }
        for i in 0..s.table.len() {
            if s.used[i] {
                continue;
            }
            for (route, verts) in &s.table[j][i] {
                if verts.iter().any(|v| s.occupied.contains(v)) {
                    continue;
                }
                s.used[i] = true;
                s.occupied.extend(verts.iter().copied());
                s.chosen.push(route.clone());
                let res = go(s, j + 1);
                s.chosen.pop();
                for v in verts {
                    s.occupied.remove(v);
                }
                s.used[i] = false;
                res?;
            }
        }
        Ok(())
    }

    let mut search = Search {
        table: &table,
        used: vec![false; n],
        occupied: HashSet::new(),
        chosen: Vec::new(),
        found: Vec::new(),
        cap,
    };
    go(&mut search, 0)?;
    Ok(search.found.iter().map(|r| PathSystem::from_routes(shape.clone(), n, m, r)).collect())
}

/// `Σ sgn(P) w(P)` over all nonintersecting systems.
pub fn lgv_signed_sum(shape: &SkewShape, n: usize, m: usize, cap: usize) -> Result<MultiPoly, LatticeError> {
    let mut out = MultiPoly::zero();
    for sys in enumerate_systems(shape, n, m, cap)? {
        let w = sys.weight();
        if sys.sign() > 0 {
            out += &w;
        } else {
            out -= &w;
        }
    }
    Ok(out.with_vars(m, t_count(shape)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_paths_examples() {
        let p = enumerate_paths(Point3::new(0, 0, 0), Point3::new(1, 1, 0), 1);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].weight(), poly("x1"));
        let p = enumerate_paths(Point3::new(0, 0, 1), Point3::new(1, 1, 0), 1);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].weight(), poly("t1*x1"));
        assert!(enumerate_paths(Point3::new(0, 0, 0), Point3::new(2, 1, 0), 1).is_empty());
        assert!(enumerate_paths(Point3::new(0, 0, 0), Point3::new(1, 1, 2), 1).is_empty());
    }

    #[test]
    fn lift_paths() {
        let p = enumerate_paths(Point3::new(0, 0, 1), Point3::new(1, 2, 2), 2);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].steps(), vec![StepKind::Lift, StepKind::Vertical, StepKind::Vertical]);
        assert!(p[0].weight().is_one());
        let p = enumerate_paths(Point3::new(0, 0, 1), Point3::new(2, 2, 2), 2);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn path_validation() {
        let ok = LatticePath::new(vec![Point3::new(0, 0, 1), Point3::new(0, 0, 0), Point3::new(1, 1, 0)], 1).unwrap();
        assert_eq!(ok.steps(), vec![StepKind::FloorT, StepKind::Diagonal]);
        assert_eq!(ok.route().unwrap().vertices(), ok.vertices());
        // wall step before a floor step
        let bad = LatticePath::new(vec![Point3::new(0, 0, 1), Point3::new(0, 1, 1), Point3::new(0, 1, 0)], 1);
        assert!(matches!(bad, Err(LatticeError::IllegalPath(_))));
        let bad = LatticePath::new(vec![Point3::new(0, 0, 0), Point3::new(2, 1, 0)], 1);
        assert!(bad.is_err());
        // t-step down from plane 0 has no weight
        let bad = LatticePath::new(vec![Point3::new(0, 0, 0), Point3::new(0, 0, -1), Point3::new(1, 1, -1)], 1);
        assert!(bad.is_err());
    }

    #[test]
    fn diagonal_weights_count_down_from_m() {
        let p = LatticePath::new(
            vec![Point3::new(0, 0, 0), Point3::new(1, 1, 0), Point3::new(1, 2, 0), Point3::new(2, 3, 0)],
            3,
        )
        .unwrap();
        assert_eq!(p.weight(), poly("x3*x1"));
    }

    #[test]
    fn pair_enumerator_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(pair_enumerator(&p(&[1]), &Partition::empty(), 1, 1, 1), poly("x1"));
        assert_eq!(pair_enumerator(&p(&[1, 1]), &Partition::empty(), 1, 1, 1), poly("t1*x1"));
        assert!(pair_enumerator(&p(&[2]), &Partition::empty(), 2, 1, 1).is_one());
        assert!(pair_enumerator(&p(&[2]), &Partition::empty(), 1, 2, 1).is_zero());
        // a full column lifts onto its own sink plane
        assert!(pair_enumerator(&p(&[1]), &p(&[1]), 1, 1, 2).is_one());
    }

    #[test]
    fn systems_examples() {
        let s = enumerate_systems(&shape("2"), 2, 1, DEFAULT_CAP).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].permutation().unwrap(), vec![1, 2]);
        assert_eq!(s[0].weight(), poly("x1^2"));
        assert!(s[0].is_nonintersecting());

        let s = enumerate_systems(&shape("2,1/2,1"), 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].weight().is_one());

        assert!(matches!(enumerate_systems(&shape("2,2"), 2, 2, 1), Err(LatticeError::CapExceeded { cap: 1 })));
        assert!(enumerate_systems(&shape("3"), 2, 1, DEFAULT_CAP).is_err());
    }

    #[test]
    fn lgv_examples() {
        assert_eq!(lgv_signed_sum(&shape("2"), 2, 1, DEFAULT_CAP).unwrap(), poly("x1^2"));
        assert_eq!(lgv_signed_sum(&shape("1"), 1, 1, DEFAULT_CAP).unwrap(), poly("x1"));
        assert!(lgv_signed_sum(&shape("3,1/3,1"), 3, 2, DEFAULT_CAP).unwrap().is_one());
    }
}
