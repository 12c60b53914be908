//! The distance graph `G(k,t)` and its shifted-grid embedding.
//!
//! Vertices are the integers; `n` is adjacent to `n±k` and `n±t`. A connected
//! graph (`gcd(k,t)=1`) embeds into the strip `{0..t} x Z` where the point
//! `(i,j)` stands for the integer `j*t + i*k`; columns `0` and `t` are glued
//! with a vertical offset of `k` rows.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the strip. `col` lies in `[0,t]`; canonical points use `[0,t-1]`
/// (column `t` is an alias of column `0` shifted down by `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub col: i64,
    pub row: i64,
}

impl GridPoint {
    pub fn new(col: i64, row: i64) -> Self {
        Self { col, row }
    }
}

/// The pair of jump lengths `(k,t)` with `1 <= k < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistanceGraph {
    k: i64,
    t: i64,
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m` (`m >= 1`, `gcd(a,m) = 1`), in `[0, m)`.
fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        None
    } else {
        Some(s0.rem_euclid(m))
    }
}

impl DistanceGraph {
    pub fn new(k: i64, t: i64) -> Result<Self> {
        if k < 1 || k >= t {
            return Err(Error::InvalidSpec { k, t });
        }
        Ok(Self { k, t })
    }

    /// Divides out `g = gcd(k,t)`: every component of `G(k,t)` is a copy of
    /// `G(k/g, t/g)`, so chromatic values are preserved.
    pub fn reduce(k: i64, t: i64) -> Result<(Self, i64)> {
        if k < 1 || k >= t {
            return Err(Error::InvalidSpec { k, t });
        }
        let g = gcd(k, t);
        Ok((Self { k: k / g, t: t / g }, g))
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn is_connected(&self) -> bool {
        gcd(self.k, self.t) == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let g = gcd(self.k, self.t);
        if g != 1 {
            return Err(Error::NotConnected { k: self.k, t: self.t, g });
        }
        Ok(())
    }

    /// The four neighbors of `n`, ascending.
    pub fn neighbors(&self, n: i64) -> [i64; 4] {
        [n - self.t, n - self.k, n + self.k, n + self.t]
    }

    /// Canonical grid representative of the integer `n`: the unique `(i,j)`
    /// with `0 <= i <= t-1` and `n = j*t + i*k`.
    pub fn int_to_point(&self, n: i64) -> Result<GridPoint> {
        self.require_connected()?;
        let kinv = mod_inverse(self.k, self.t).expect("coprime");
        let col = (n.rem_euclid(self.t))
            .checked_mul(kinv)
            .ok_or(Error::Overflow)?
            .rem_euclid(self.t);
        let ik = col.checked_mul(self.k).ok_or(Error::Overflow)?;
        let row = n.checked_sub(ik).ok_or(Error::Overflow)? / self.t;
        Ok(GridPoint { col, row })
    }

    /// Integer represented by `p`; inverse of [`int_to_point`] on canonical
    /// points. `(t,j)` maps to the same integer as `(0,j+k)`.
    ///
    /// [`int_to_point`]: Self::int_to_point
    pub fn point_to_int(&self, p: GridPoint) -> Result<i64> {
        if p.col < 0 || p.col > self.t {
            return Err(Error::InvalidPoint { col: p.col, t: self.t });
        }
        p.row
            .checked_mul(self.t)
            .and_then(|jt| jt.checked_add(p.col.checked_mul(self.k)?))
            .ok_or(Error::Overflow)
    }

    /// Exact graph distance between integers `a` and `b`, computed as
    /// `min |alpha| + |beta|` over `alpha*k + beta*t = b - a` by enumerating
    /// the residue-constrained `alpha` range. Requires a connected graph.
    pub fn exact_distance(&self, a: i64, b: i64) -> Result<u64> {
        self.require_connected()?;
        let diff = (b as i128) - (a as i128);
        if diff == 0 {
            return Ok(0);
        }
        let (k, t) = (self.k as i128, self.t as i128);
        let kinv = mod_inverse(self.k, self.t).expect("coprime") as i128;
        let alpha0 = diff.rem_euclid(t) * kinv % t;
        // Any optimal |alpha| is below |diff|/t + k + t (a reduced solution
        // already achieves that total), so this range is exhaustive.
        let bound = diff.abs() / t + k + t + 1;
        let mut best: Option<i128> = None;
        let mut alpha = alpha0.rem_euclid(t) - t * ((bound + t) / t);
        while alpha <= bound {
            if alpha >= -bound {
                let beta = (diff - alpha * k) / t;
                let cost = alpha.abs() + beta.abs();
                best = Some(best.map_or(cost, |b: i128| b.min(cost)));
            }
            alpha += t;
        }
        Ok(best.expect("nonempty alpha range") as u64)
    }

    /// Strip distance between canonical points: the minimum of the direct
    /// term and the two wrap terms (either orientation of the column-0/t
    /// gluing). Always an upper bound on [`exact_distance`], and equal to it
    /// whenever the result is at most 2 (for `t >= 3`).
    ///
    /// [`exact_distance`]: Self::exact_distance
    pub fn grid_distance(&self, p: GridPoint, q: GridPoint) -> u64 {
        let (x, y, u, v) = (p.col, p.row, q.col, q.row);
        let direct = (x - u).abs() + (y - v).abs();
        let wrap_a = x + (self.t - u) + ((y - self.k) - v).abs();
        let wrap_b = u + (self.t - x) + ((v - self.k) - y).abs();
        direct.min(wrap_a).min(wrap_b) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn g(k: i64, t: i64) -> DistanceGraph {
        DistanceGraph::new(k, t).unwrap()
    }

    /// Breadth-first distance over Z; independent of the Diophantine route.
    fn bfs_distance(gr: &DistanceGraph, a: i64, b: i64) -> u64 {
        let mut seen: HashMap<i64, u64> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(a, 0);
        queue.push_back(a);
        while let Some(n) = queue.pop_front() {
            let d = seen[&n];
            if n == b {
                return d;
            }
            for m in gr.neighbors(n) {
                seen.entry(m).or_insert_with(|| {
                    queue.push_back(m);
                    d + 1
                });
            }
        }
        unreachable!("connected graph")
    }

    #[test]
    fn reduce_spec_examples() {
        let (s, g1) = DistanceGraph::reduce(3, 4).unwrap();
        assert_eq!((s.k(), s.t(), g1), (3, 4, 1));
        let (s, g2) = DistanceGraph::reduce(6, 10).unwrap();
        assert_eq!((s.k(), s.t(), g2), (3, 5, 2));
        assert!(matches!(
            DistanceGraph::reduce(5, 5),
            Err(Error::InvalidSpec { .. })
        ));
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(g(3, 4).neighbors(0), [-4, -3, 3, 4]);
        assert_eq!(g(3, 4).neighbors(7), [3, 4, 10, 11]);
        assert_eq!(g(3, 5).neighbors(0), [-5, -3, 3, 5]);
    }

    #[test]
    fn int_to_point_examples() {
        let gr = g(3, 4);
        assert_eq!(gr.int_to_point(0).unwrap(), GridPoint::new(0, 0));
        assert_eq!(gr.int_to_point(3).unwrap(), GridPoint::new(1, 0));
        // brute force over i in [0,3]: 1 = 4j + 3i only at (i,j) = (3,-2)
        assert_eq!(gr.int_to_point(1).unwrap(), GridPoint::new(3, -2));
    }

    #[test]
    fn int_to_point_rejects_disconnected() {
        let gr = DistanceGraph::new(2, 4).unwrap();
        assert!(matches!(gr.int_to_point(1), Err(Error::NotConnected { .. })));
    }

    #[test]
    fn point_to_int_examples() {
        let gr = g(3, 4);
        assert_eq!(gr.point_to_int(GridPoint::new(0, 0)).unwrap(), 0);
        assert_eq!(gr.point_to_int(GridPoint::new(4, -3)).unwrap(), 0);
        assert_eq!(gr.point_to_int(GridPoint::new(2, -1)).unwrap(), 2);
        assert!(matches!(
            gr.point_to_int(GridPoint::new(5, 0)),
            Err(Error::InvalidPoint { .. })
        ));
    }

    #[test]
    fn point_to_int_overflow_is_checked() {
        let gr = g(3, 4);
        assert!(matches!(
            gr.point_to_int(GridPoint::new(2, i64::MAX / 2)),
            Err(Error::Overflow)
        ));
    }

    #[test]
    fn duplicate_column_identification() {
        for (k, t) in [(3, 4), (3, 5), (4, 7), (5, 9)] {
            let gr = g(k, t);
            for j in -6..=6 {
                assert_eq!(
                    gr.point_to_int(GridPoint::new(0, j)).unwrap(),
                    gr.point_to_int(GridPoint::new(t, j - k)).unwrap()
                );
            }
        }
    }

    #[test]
    fn point_roundtrip_window() {
        for (k, t) in [(3, 4), (3, 5), (4, 7), (7, 9), (1, 2)] {
            let gr = g(k, t);
            for n in -120..=120 {
                let p = gr.int_to_point(n).unwrap();
                assert!(p.col >= 0 && p.col < t);
                assert_eq!(gr.point_to_int(p).unwrap(), n);
            }
        }
    }

    #[test]
    fn exact_distance_examples() {
        let gr = g(3, 4);
        assert_eq!(gr.exact_distance(0, 3).unwrap(), 1);
        assert_eq!(gr.exact_distance(0, 7).unwrap(), 2);
        assert_eq!(gr.exact_distance(0, 1).unwrap(), 2); // 0 -> 4 -> 1
    }

    #[test]
    fn exact_distance_matches_bfs() {
        for (k, t) in [(3, 4), (3, 5), (4, 7), (5, 6)] {
            let gr = g(k, t);
            for d in -(3 * t)..=(3 * t) {
                assert_eq!(
                    gr.exact_distance(0, d).unwrap(),
                    bfs_distance(&gr, 0, d),
                    "G({k},{t}) diff {d}"
                );
            }
        }
    }

    #[test]
    fn exact_distance_metric_properties() {
        let gr = g(3, 5);
        for a in -15..=15 {
            for b in -15..=15 {
                let dab = gr.exact_distance(a, b).unwrap();
                assert_eq!(dab, gr.exact_distance(b, a).unwrap());
                assert_eq!(dab == 0, a == b);
                assert_eq!(dab, gr.exact_distance(0, b - a).unwrap());
                for c in [-9, 0, 4] {
                    let dac = gr.exact_distance(a, c).unwrap();
                    let dcb = gr.exact_distance(c, b).unwrap();
                    assert!(dab <= dac + dcb);
                }
            }
        }
    }

    #[test]
    fn grid_distance_examples() {
        let gr = g(3, 4);
        assert_eq!(gr.grid_distance(GridPoint::new(0, 0), GridPoint::new(1, 0)), 1);
        // (0,0) vs (3,-2): integers 0 and 1, wrap term 0 + (4-3) + |(0-3)-(-2)|
        assert_eq!(gr.grid_distance(GridPoint::new(0, 0), GridPoint::new(3, -2)), 2);
        assert_eq!(gr.grid_distance(GridPoint::new(1, 0), GridPoint::new(1, 0)), 0);
    }

    #[test]
    fn grid_distance_dominates_and_agrees_below_three() {
        for (k, t) in [(3, 4), (3, 5), (4, 7), (5, 8)] {
            let gr = g(k, t);
            for a in -40..=40_i64 {
                for b in a..=40 {
                    let p = gr.int_to_point(a).unwrap();
                    let q = gr.int_to_point(b).unwrap();
                    let gd = gr.grid_distance(p, q);
                    let ed = gr.exact_distance(a, b).unwrap();
                    assert!(gd >= ed);
                    if gd <= 2 {
                        assert_eq!(gd, ed);
                    }
                }
            }
        }
    }
}
