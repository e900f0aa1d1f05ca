//! Operations on path systems: projections to wall planes, cut edges,
//! step/slide and their inverses, transpose, and the sign-reversing
//! involution built from them.
//!
//! All of these act on [`Route`]s. In route terms a forward step on the
//! neighbouring paths `P_i, P_{i+1}` at level `k` flips the floor step of
//! `P_i` between planes `k` and `k+1` from unit to `t`, and its wall step at
//! height `h` from diagonal to vertical; `P_{i+1}` gets the opposite flips.
//! The floor below plane `k+1` and the wall below height `h + 1` of `P_i`
//! therefore move one unit in the `+x` direction, and those of `P_{i+1}` one
//! unit in the `-x` direction, while both endpoints stay fixed.

use crate::error::LatticeError;
use crate::poly::{Monomial, MultiPoly};
use crate::shapes::SkewShape;

use super::{enumerate_systems, LatticePath, PathSystem, Point3, Route};

const SLIDE_LIMIT: usize = 100_000;

/// Projection of a path onto the wall plane `z = plane`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallProjection {
    pub plane: i64,
    pub defined: bool,
    /// Polyline from the floor point on `plane` up to `(i, m, plane)`;
    /// empty when undefined.
    pub points: Vec<Point3>,
}

/// Projection of `path` (ending at `B_i`, `i` read from its sink) on the
/// plane `z = k`.
pub fn project(path: &LatticePath, k: i64) -> WallProjection {
    let route = path.route().expect("validated path");
    match route.projection(k) {
        Some(xs) => WallProjection {
            plane: k,
            defined: true,
            points: xs.iter().enumerate().map(|(y, &x)| Point3::new(x, y as i64, k)).collect(),
        },
        None => WallProjection { plane: k, defined: false, points: Vec::new() },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutKind {
    /// Recorded by a `t`-step of the floor; weight `t_{k+1}`.
    T,
    /// Recorded by a wall edge that disappears between the two projections.
    X,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutEdge {
    /// Sink index `i` of the owning path; the edge lies on the plane `x = i`.
    pub owner: i64,
    pub level: i64,
    pub kind: CutKind,
    pub weight: Monomial,
    pub start: Point3,
    pub end: Point3,
}

/// Height where the projection first reaches `x = i`.
fn first_at_sink(xs: &[i64], sink_x: i64) -> usize {
    xs.iter().position(|&x| x == sink_x).expect("projection ends at x = i")
}

pub(crate) fn cut_edge_of(route: &Route, k: i64, m: usize) -> Result<CutEdge, LatticeError> {
    let (Some(lo), Some(hi)) = (route.projection(k), route.projection(k + 1)) else {
        return Err(LatticeError::Contract(format!("projections on planes {k} and {} are not both defined", k + 1)));
    };
    let i = route.sink_x;
    let y0 = first_at_sink(&lo, i);
    let y1 = first_at_sink(&hi, i);
    let is_t = route.floor_is_t(k) == Some(true);
    let start = Point3::new(i, y0 as i64, k);
    if y1 == y0 {
        if !is_t {
            return Err(LatticeError::Contract(format!(
                "level {k}: cut edge keeps its height across a unit floor step"
            )));
        }
        let mut t = vec![0; (k + 1) as usize];
        t[k as usize] = 1;
        Ok(CutEdge {
            owner: i,
            level: k,
            kind: CutKind::T,
            weight: Monomial::new(Vec::new(), t),
            start,
            end: Point3::new(i, y0 as i64, k + 1),
        })
    } else {
        if is_t || y0 == 0 {
            return Err(LatticeError::Contract(format!("level {k}: cut edge drops across a t-step")));
        }
        // the diagonal wall edge entering height y0 on plane k disappears on plane k+1
        let s = m - (y0 - 1);
        let mut x = vec![0; s];
        x[s - 1] = 1;
        Ok(CutEdge {
            owner: i,
            level: k,
            kind: CutKind::X,
            weight: Monomial::new(x, Vec::new()),
            start,
            end: Point3::new(i, y0 as i64 - 1, k + 1),
        })
    }
}

/// The `k`-th cut edge of `path`.
pub fn cut_edge(path: &LatticePath, k: i64) -> Result<CutEdge, LatticeError> {
    cut_edge_of(&path.route()?, k, path.m())
}

fn meets(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x == y)
}

struct Pair {
    lo_p: Vec<i64>,
    lo_q: Vec<i64>,
    hi_p: Vec<i64>,
    hi_q: Vec<i64>,
}

fn pair_projections(p: &Route, q: &Route, k: i64) -> Option<Pair> {
    Some(Pair {
        lo_p: p.projection(k)?,
        lo_q: q.projection(k)?,
        hi_p: p.projection(k + 1)?,
        hi_q: q.projection(k + 1)?,
    })
}

fn contract<T>(msg: String) -> Result<T, LatticeError> {
    Err(LatticeError::Contract(msg))
}

pub(crate) fn step_forward(routes: &mut [Route], k: i64) -> Result<bool, LatticeError> {
    for a in 0..routes.len().saturating_sub(1) {
        let Some(pr) = pair_projections(&routes[a], &routes[a + 1], k) else {
            continue;
        };
        if !meets(&pr.hi_p, &pr.hi_q) || meets(&pr.lo_p, &pr.lo_q) {
            continue;
        }
        let yc = (0..pr.hi_p.len()).find(|&y| pr.hi_p[y] == pr.hi_q[y]).unwrap();
        if yc == 0 {
            return contract(format!("step at level {k}: paths {} and {} share a floor point", a + 1, a + 2));
        }
        let h = yc - 1;
        let (p, q) = (&routes[a], &routes[a + 1]);
        let shape_ok = p.floor_is_t(k) == Some(false)
            && q.floor_is_t(k) == Some(true)
            && p.diag[h]
            && !q.diag[h]
            && pr.hi_p[yc] - pr.hi_p[h] == 1
            && pr.hi_q[yc] == pr.hi_q[h];
        if !shape_ok {
            return contract(format!(
                "step at level {k}: unexpected edges around the meeting point of paths {} and {}",
                a + 1,
                a + 2
            ));
        }
        routes[a].set_floor(k, true);
        routes[a].diag[h] = false;
        routes[a + 1].set_floor(k, false);
        routes[a + 1].diag[h] = true;
        return Ok(true);
    }
    Ok(false)
}

pub(crate) fn step_reverse(routes: &mut [Route], k: i64) -> Result<bool, LatticeError> {
    for a in (0..routes.len().saturating_sub(1)).rev() {
        let Some(pr) = pair_projections(&routes[a], &routes[a + 1], k) else {
            continue;
        };
        if !meets(&pr.lo_p, &pr.lo_q) || meets(&pr.hi_p, &pr.hi_q) {
            continue;
        }
        if first_at_sink(&pr.lo_p, routes[a].sink_x) < first_at_sink(&pr.lo_q, routes[a + 1].sink_x) {
            continue;
        }
        let h = (0..pr.lo_p.len()).rev().find(|&y| pr.lo_p[y] == pr.lo_q[y]).unwrap();
        let (p, q) = (&routes[a], &routes[a + 1]);
        if h >= p.diag.len() {
            return contract(format!("reverse step at level {k}: last meeting point is at the top"));
        }
        let shape_ok = p.floor_is_t(k) == Some(true)
            && q.floor_is_t(k) == Some(false)
            && !p.diag[h]
            && q.diag[h]
            && pr.lo_p[h] < p.sink_x
            && pr.lo_p[h + 1] == pr.lo_p[h]
            && pr.lo_q[h + 1] - pr.lo_q[h] == 1;
        if !shape_ok {
            return contract(format!(
                "reverse step at level {k}: unexpected edges after the last meeting point of paths {} and {}",
                a + 1,
                a + 2
            ));
        }
        routes[a].set_floor(k, false);
        routes[a].diag[h] = true;
        routes[a + 1].set_floor(k, true);
        routes[a + 1].diag[h] = false;
        return Ok(true);
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

fn intersecting_pair(routes: &[Route], plane: i64, max_sink: i64) -> Option<(usize, usize)> {
    let proj: Vec<Option<Vec<i64>>> =
        routes.iter().map(|r| if r.sink_z <= max_sink { r.projection(plane) } else { None }).collect();
    for a in 0..routes.len() {
        for b in a + 1..routes.len() {
            if let (Some(p), Some(q)) = (&proj[a], &proj[b]) {
                if meets(p, q) {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

pub(crate) fn check_slide(routes: &[Route], k: i64, dir: Direction) -> Result<(), LatticeError> {
    match dir {
        Direction::Forward => {
            if let Some((a, b)) = intersecting_pair(routes, k, i64::MAX) {
                return contract(format!("slide at level {k}: paths {} and {} intersect on plane {k}", a + 1, b + 1));
            }
        }
        Direction::Reverse => {
            if let Some((a, b)) = intersecting_pair(routes, k + 1, k) {
                return contract(format!(
                    "reverse slide at level {k}: paths {} and {} intersect on plane {}",
                    a + 1,
                    b + 1,
                    k + 1
                ));
            }
            let mut last: Option<(usize, usize)> = None;
            for (a, r) in routes.iter().enumerate() {
                if let (Some(lo), Some(_)) = (r.projection(k), r.projection(k + 1)) {
                    let y = first_at_sink(&lo, r.sink_x);
                    if let Some((b, prev)) = last {
                        if y > prev {
                            return contract(format!(
                                "reverse slide at level {k}: cut edge of path {} is above that of path {}",
                                a + 1,
                                b + 1
                            ));
                        }
                    }
                    last = Some((a, y));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn slide(routes: &mut [Route], k: i64, dir: Direction) -> Result<(), LatticeError> {
    check_slide(routes, k, dir)?;
    for _ in 0..SLIDE_LIMIT {
        let moved = match dir {
            Direction::Forward => step_forward(routes, k)?,
            Direction::Reverse => step_reverse(routes, k)?,
        };
        if !moved {
            return Ok(());
        }
    }
    contract(format!("slide at level {k} did not settle"))
}

/// One forward or reverse step at level `k`.
pub fn step(sys: &PathSystem, k: i64, dir: Direction) -> Result<PathSystem, LatticeError> {
    let mut routes = sys.routes();
    match dir {
        Direction::Forward => step_forward(&mut routes, k)?,
        Direction::Reverse => step_reverse(&mut routes, k)?,
    };
    Ok(PathSystem::from_routes(sys.shape().clone(), sys.n(), sys.m(), &routes))
}

/// Steps at level `k` until nothing changes.
pub fn step_slide(sys: &PathSystem, k: i64, dir: Direction) -> Result<PathSystem, LatticeError> {
    let mut routes = sys.routes();
    slide(&mut routes, k, dir)?;
    Ok(PathSystem::from_routes(sys.shape().clone(), sys.n(), sys.m(), &routes))
}

/// Exchanges the parts of two paths meeting at the leftmost, then lowest,
/// point where a path with its sink on plane `k` meets the projection of a
/// path with its sink below.
///
/// With `P_i` sinking on `k` and `P_j` on `k' < k`, `E_i`, `E_j` the points
/// where they cross plane `k` and `F_j` the start of the wall part of `P_j`,
/// the floor segment `E_j → F_j` of `P_j` is reattached at `E_i` and ends at
/// `E_i + (F_j - E_j)`. The wall of `P_i` up to the meeting point follows it
/// one level down on plane `k'`, so the new path ending at `B_j` has the
/// floor of `P_i` above `k`, the floor of `P_j` below, the wall of `P_i`
/// below the meeting height and the wall of `P_j` above it. The new path
/// ending at `B_i` takes the remaining pieces. Wall steps keep their heights,
/// so weights are unchanged, and the union of the two projections on plane
/// `k` is the same before and after.
///
/// A path that lifts onto its sink plane has no floor to exchange and is
/// never a candidate.
pub(crate) fn transpose_routes(routes: &mut [Route], k: i64) -> bool {
    let mut best: Option<(i64, usize, usize, usize)> = None;
    for a in 0..routes.len() {
        let p = &routes[a];
        if p.sink_z != k || p.lifted {
            continue;
        }
        let Some(pa) = p.projection(k) else { continue };
        for (b, q) in routes.iter().enumerate().skip(a + 1) {
            if q.sink_z >= k {
                continue;
            }
            let Some(pb) = q.projection(k) else { continue };
            for y in 0..pa.len() {
                if pa[y] == pb[y] {
                    let cand = (pa[y], y, a, b);
                    if best.is_none_or(|cur| cand < cur) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    let Some((_, yc, a, b)) = best else {
        return false;
    };
    let p = routes[a].clone();
    let q = routes[b].clone();
    let cut = (k - q.sink_z) as usize;
    let joined = |lo: &[bool], hi: &[bool]| -> Vec<bool> { lo.iter().chain(hi).copied().collect() };
    routes[b] = Route {
        sink_x: q.sink_x,
        sink_z: q.sink_z,
        floor: joined(&q.floor[..cut], &p.floor),
        diag: joined(&p.diag[..yc], &q.diag[yc..]),
        lifted: false,
    };
    routes[a] = Route {
        sink_x: p.sink_x,
        sink_z: p.sink_z,
        floor: q.floor[cut..].to_vec(),
        diag: joined(&q.diag[..yc], &p.diag[yc..]),
        lifted: q.lifted,
    };
    debug_assert_eq!(routes[b].vertices()[0], p.vertices()[0]);
    debug_assert_eq!(routes[a].vertices()[0], q.vertices()[0]);
    true
}

pub fn transpose(sys: &PathSystem, k: i64) -> PathSystem {
    let mut routes = sys.routes();
    transpose_routes(&mut routes, k);
    PathSystem::from_routes(sys.shape().clone(), sys.n(), sys.m(), &routes)
}

/// Slides up to level `k`, transposes on plane `k + 1`, and slides back.
pub(crate) fn conjugated_transpose(routes: &[Route], k: i64) -> Result<Vec<Route>, LatticeError> {
    let mut s = routes.to_vec();
    for j in 0..=k {
        slide(&mut s, j, Direction::Forward)?;
    }
    transpose_routes(&mut s, k + 1);
    for j in (0..=k).rev() {
        slide(&mut s, j, Direction::Reverse)?;
    }
    Ok(s)
}

pub(crate) fn involution_routes(routes: &[Route], levels: i64) -> Result<Vec<Route>, LatticeError> {
    for k in 0..levels {
        let s = conjugated_transpose(routes, k)?;
        if s != routes {
            return Ok(s);
        }
    }
    Ok(routes.to_vec())
}

/// The involution: the first level `k` whose conjugated transpose changes
/// the system decides the image; systems no level changes are fixed.
pub fn path_involution(sys: &PathSystem) -> Result<PathSystem, LatticeError> {
    let levels = sys.shape().outer().len() as i64;
    let routes = involution_routes(&sys.routes(), levels)?;
    Ok(PathSystem::from_routes(sys.shape().clone(), sys.n(), sys.m(), &routes))
}

pub fn is_good(sys: &PathSystem) -> Result<bool, LatticeError> {
    Ok(path_involution(sys)? == *sys)
}

/// Total weight of the fixed points of the involution.
pub fn good_sum(shape: &SkewShape, n: usize, m: usize, cap: usize) -> Result<MultiPoly, LatticeError> {
    let mut out = MultiPoly::zero();
    for sys in enumerate_systems(shape, n, m, cap)? {
        if is_good(&sys)? {
            out += &sys.weight();
        }
    }
    Ok(out.with_vars(m, shape.outer().len().saturating_sub(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DEFAULT_CAP;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    /// Path ending at (4, 4, 0) with floor steps t, 1, 1 above its sink
    /// plane and wall x-values 1, 2, 2, 3, 4.
    fn sample_path() -> LatticePath {
        let pts = [(3, 0, 3), (2, 0, 2), (1, 0, 1), (1, 0, 0), (2, 1, 0), (2, 2, 0), (3, 3, 0), (4, 4, 0)];
        LatticePath::new(pts.iter().map(|&(x, y, z)| Point3::new(x, y, z)).collect(), 4).unwrap()
    }

    #[test]
    fn projection_examples() {
        let p = sample_path();
        let own = project(&p, 0);
        assert!(own.defined);
        let wall: Vec<Point3> = p.vertices()[3..].to_vec();
        assert_eq!(own.points, wall);
        let xs: Vec<i64> = project(&p, 2).points.iter().map(|q| q.x).collect();
        assert_eq!(xs, vec![2, 3, 3, 4, 4]);
        assert!(!project(&p, 4).defined);
    }

    #[test]
    fn cut_edge_examples() {
        let p = sample_path();
        let c0 = cut_edge(&p, 0).unwrap();
        assert_eq!(c0.kind, CutKind::T);
        assert_eq!((c0.start, c0.end), (Point3::new(4, 4, 0), Point3::new(4, 4, 1)));
        assert_eq!(MultiPoly::monomial(c0.weight), poly("t1"));
        let c2 = cut_edge(&p, 2).unwrap();
        assert_eq!(c2.kind, CutKind::X);
        assert_eq!((c2.start, c2.end), (Point3::new(4, 3, 2), Point3::new(4, 2, 3)));
        assert_eq!(MultiPoly::monomial(c2.weight), poly("x2"));
        assert!(cut_edge(&p, 3).is_err());
    }

    #[test]
    fn all_t_floor_gives_t_cut_edges() {
        let pts = [(0, 0, 2), (0, 0, 1), (0, 0, 0), (1, 1, 0), (1, 2, 0)];
        let p = LatticePath::new(pts.iter().map(|&(x, y, z)| Point3::new(x, y, z)).collect(), 2).unwrap();
        for k in 0..2 {
            assert_eq!(cut_edge(&p, k).unwrap().kind, CutKind::T);
        }
    }

    #[test]
    fn slides_without_work_are_identity() {
        for sys in enumerate_systems(&shape("2"), 2, 1, DEFAULT_CAP).unwrap() {
            assert_eq!(step_slide(&sys, 0, Direction::Forward).unwrap(), sys);
        }
    }

    #[test]
    fn small_good_sums() {
        assert_eq!(good_sum(&shape("2"), 2, 1, DEFAULT_CAP).unwrap(), poly("x1^2"));
        assert_eq!(good_sum(&shape("1,1"), 1, 2, DEFAULT_CAP).unwrap(), poly("t1*x1 + t1*x2 + x1*x2"));
        assert!(good_sum(&shape("2,2/2,2"), 2, 2, DEFAULT_CAP).unwrap().is_one());
    }

    #[test]
    fn transpose_is_an_involution_on_small_family() {
        let sh = shape("2,2/1");
        for sys in enumerate_systems(&sh, 2, 2, DEFAULT_CAP).unwrap() {
            for k in 0..=2 {
                let once = transpose(&sys, k);
                assert_eq!(once.weight(), sys.weight());
                assert_eq!(transpose(&once, k), sys);
            }
        }
    }
}
