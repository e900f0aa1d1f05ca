//! Good path systems and reverse plane partitions.
//!
//! Each path is extended by a unit floor step from `F_i = (i, 0, λ'_i)` to
//! its source. After sliding level by level, the `k`-th cut edge of the
//! path ending at `B_i` fills row `k + 1` of column `i`: an `x_s` edge gives
//! the entry `s`, a `t` edge leaves the cell empty until the filling is
//! completed from below. The reverse direction rebuilds the extended paths
//! from the columns and undoes the slides.

use crate::error::LatticeError;
use crate::shapes::SkewShape;
use crate::tableaux::{complete_filling, ReducedFilling, Rpp};

use super::ops::{cut_edge_of, is_good, slide, CutKind, Direction};
use super::{PathSystem, Route};

fn extend_to_f(mut r: Route) -> Route {
    if r.lifted {
        r.lifted = false;
    } else {
        r.floor.push(false);
    }
    r
}

fn strip_f(mut r: Route) -> Result<Route, LatticeError> {
    match r.floor.pop() {
        Some(false) => Ok(r),
        Some(true) => Err(LatticeError::Contract(format!("path {} does not leave F by a unit step", r.sink_x))),
        None => {
            r.lifted = true;
            Ok(r)
        }
    }
}

/// The reverse plane partition of a good system.
pub fn to_rpp(sys: &PathSystem) -> Result<Rpp, LatticeError> {
    Ok(complete_filling(&to_reduced_filling(sys)?)?)
}

/// The filling read off the cut edges of a good system, before empty cells
/// are completed from below.
pub fn to_reduced_filling(sys: &PathSystem) -> Result<ReducedFilling, LatticeError> {
    if !is_good(sys)? {
        return Err(LatticeError::Contract("system is not fixed by the involution".into()));
    }
    let shape = sys.shape();
    let (lc, mc) = (shape.outer().conjugate(), shape.inner().conjugate());
    let mut routes: Vec<Route> = sys.routes().into_iter().map(extend_to_f).collect();
    let mut rows: Vec<Vec<Option<u32>>> =
        (1..=shape.outer().len()).map(|r| vec![None; shape.outer().part(r) - shape.inner().part(r)]).collect();
    for k in 0..shape.outer().len() as i64 {
        slide(&mut routes, k, Direction::Forward)?;
        for col in 1..=shape.outer().first() {
            if (mc.part(col) as i64) <= k && k < lc.part(col) as i64 {
                let edge = cut_edge_of(&routes[col - 1], k, sys.m())?;
                let row = k as usize + 1;
                rows[row - 1][col - shape.inner().part(row) - 1] = match edge.kind {
                    CutKind::X => Some(sys.m() as u32 + 1 - edge.start.y as u32),
                    CutKind::T => None,
                };
            }
        }
    }
    Ok(ReducedFilling::new(shape.clone(), rows)?)
}

/// The good system on `n ≥ λ₁` paths whose reverse plane partition is `rpp`.
pub fn from_rpp(rpp: &Rpp, n: usize, m: usize) -> Result<PathSystem, LatticeError> {
    let shape: &SkewShape = rpp.shape();
    if n < shape.outer().first() {
        return Err(LatticeError::Contract(format!("n = {n} is below λ₁ for {shape}")));
    }
    if rpp.max_entry() as usize > m {
        return Err(LatticeError::Contract(format!("entry {} exceeds m = {m}", rpp.max_entry())));
    }
    let mc = shape.inner().conjugate();
    let mut routes = Vec::with_capacity(n);
    for col in 1..=n {
        let entries = rpp.column(col);
        let mut diag = vec![false; m];
        // floor[j] is the step between planes μ'_i + j + 1 and μ'_i + j, which
        // records row μ'_i + j + 1
        let mut floor = Vec::with_capacity(entries.len());
        for (j, &v) in entries.iter().enumerate() {
            let repeated = entries.get(j + 1) == Some(&v);
            floor.push(repeated);
            if !repeated {
                diag[m - v as usize] = true;
            }
        }
        if floor.last() == Some(&true) {
            return Err(LatticeError::Contract(format!("column {col} ends with a t-step")));
        }
        routes.push(Route { sink_x: col as i64, sink_z: mc.part(col) as i64, floor, diag, lifted: false });
    }
    for k in (0..shape.outer().len() as i64).rev() {
        slide(&mut routes, k, Direction::Reverse)?;
    }
    let routes = routes.into_iter().map(strip_f).collect::<Result<Vec<_>, _>>()?;
    let sys = PathSystem::from_routes(shape.clone(), n, m, &routes);
    PathSystem::new(shape.clone(), n, m, sys.paths().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_systems, DEFAULT_CAP};
    use crate::tableaux::enumerate_rpp;

    #[test]
    fn single_box() {
        let shape: SkewShape = "1".parse().unwrap();
        let systems = enumerate_systems(&shape, 1, 1, DEFAULT_CAP).unwrap();
        assert_eq!(systems.len(), 1);
        let t = to_rpp(&systems[0]).unwrap();
        assert_eq!(t.rows(), &[vec![1]]);
        assert_eq!(from_rpp(&t, 1, 1).unwrap(), systems[0]);
    }

    #[test]
    fn empty_shape_round_trip() {
        let shape: SkewShape = "2,1/2,1".parse().unwrap();
        let t = enumerate_rpp(&shape, 2).pop().unwrap();
        let sys = from_rpp(&t, 2, 2).unwrap();
        assert!(sys.weight().is_one());
        assert_eq!(to_rpp(&sys).unwrap(), t);
    }

    #[test]
    fn round_trips_on_small_skew_shape() {
        let shape: SkewShape = "2,2/1".parse().unwrap();
        for t in enumerate_rpp(&shape, 2) {
            let sys = from_rpp(&t, 2, 2).unwrap();
            assert!(sys.is_nonintersecting());
            assert_eq!(sys.weight(), t.weight(true));
            assert_eq!(to_rpp(&sys).unwrap(), t);
        }
    }
}
