//! The Farey graph: clockwise arcs, farthest neighbours and geodesics.
//!
//! Orientation: walking clockwise around the circle visits
//! `0 → 1 → ∞ → -1 → 0`, i.e. the extended real line in increasing order
//! with a wrap from `∞` back to the negative rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ext_rat::ExtRat;

/// True iff `x` lies in the open clockwise arc from `from` to `to`.
pub fn in_arc(x: &ExtRat, from: &ExtRat, to: &ExtRat) -> Result<bool> {
    if from == to {
        return Err(Error::DegenerateArc(from.to_string()));
    }
    Ok(if from < to { from < x && x < to } else { x > from || x < to })
}

/// Position of `x` when walking clockwise from `start`: `(lap, x)` sorts in
/// visiting order, with `start` itself first.
fn clockwise_key<'a>(start: &ExtRat, x: &'a ExtRat) -> (bool, &'a ExtRat) {
    (x < start, x)
}

/// The neighbour of `s` furthest clockwise inside the arc `(s, bound]`.
///
/// Writing the neighbours of `s` as `u + k·s` for a fixed neighbour `u`, the
/// clockwise walk from `s` visits them in decreasing `k`, and `bound`
/// itself sits at parameter `α/β` where `bound = α·s + β·u`. The answer is
/// therefore `k = ⌈α/β⌉`; no mediant iteration needed.
pub fn farthest_neighbor(s: &ExtRat, bound: &ExtRat) -> Result<ExtRat> {
    if s == bound {
        return Err(Error::DegenerateArc(s.to_string()));
    }
    let (a, b) = (s.num(), s.den());
    let (e, f) = (bound.num(), bound.den());
    // a·x + b·y = 1; then u = (c, d) = (y, -x) has det(s, u) = -1.
    let eg = a.extended_gcd(b);
    debug_assert!(eg.gcd.is_one());
    let (c, d) = (eg.y, -eg.x);
    let beta = -(a * f - b * e);
    let alpha = -(e * &d - f * &c);
    let k = ceil_div(&alpha, &beta);
    Ok(ExtRat::new(c + &k * a, d + &k * b).expect("neighbour of a reduced slope"))
}

/// Mirror of [`farthest_neighbor`]: furthest neighbour counterclockwise of
/// `s` inside the arc from `bound` clockwise to `s`.
pub fn farthest_neighbor_ccw(s: &ExtRat, bound: &ExtRat) -> Result<ExtRat> {
    Ok(farthest_neighbor(&s.negate(), &bound.negate())?.negate())
}

fn ceil_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// A path in the Farey graph, walked clockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPath {
    vertices: Vec<ExtRat>,
}

impl FareyPath {
    pub fn new(vertices: Vec<ExtRat>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[ExtRat] {
        &self.vertices
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> &ExtRat {
        &self.vertices[0]
    }

    pub fn last(&self) -> &ExtRat {
        self.vertices.last().expect("non-empty path")
    }

    /// Consecutive vertices adjacent, and visited in strictly clockwise order
    /// from the first vertex to the last.
    pub fn is_valid(&self) -> bool {
        if self.vertices.len() < 2 {
            return false;
        }
        let start = self.first();
        let edges_ok = self.vertices.windows(2).all(|w| w[0].is_farey_neighbor(&w[1]));
        let monotone = self.vertices.windows(2).all(|w| clockwise_key(start, &w[0]) < clockwise_key(start, &w[1]));
        edges_ok && monotone
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.vertices.iter().map(ExtRat::to_string).collect()
    }
}

/// Shortest path from `from` clockwise to `to`, built by repeatedly jumping
/// to the farthest neighbour short of `to`.
pub fn geodesic(from: &ExtRat, to: &ExtRat) -> Result<FareyPath> {
    if from == to {
        return Err(Error::DegenerateArc(from.to_string()));
    }
    let mut vertices = vec![from.clone()];
    let mut cur = from.clone();
    while &cur != to {
        cur = farthest_neighbor(&cur, to)?;
        vertices.push(cur.clone());
    }
    Ok(FareyPath::new(vertices))
}

/// Independent brute-force references for the routines above. They use
/// machine integers and explicit enumeration only.
pub mod oracle {
    use std::collections::{HashMap, VecDeque};

    use super::FareyPath;
    use crate::error::{Error, Result};
    use crate::ext_rat::ExtRat;

    type Frac = (i128, i128);

    fn to_frac(x: &ExtRat) -> Result<Frac> {
        let n = i128::try_from(x.num()).map_err(|_| Error::Domain(format!("{x} too large")))?;
        let d = i128::try_from(x.den()).map_err(|_| Error::Domain(format!("{x} too large")))?;
        Ok((n, d))
    }

    fn to_ext(f: Frac) -> ExtRat {
        ExtRat::new(f.0, f.1).expect("non-zero fraction")
    }

    fn normalize((n, d): Frac) -> Frac {
        if d == 0 {
            (1, 0)
        } else if d < 0 {
            (-n, -d)
        } else {
            (n, d)
        }
    }

    /// Linear comparison with `∞` on top.
    fn less(x: Frac, y: Frac) -> bool {
        match (x.1 == 0, y.1 == 0) {
            (true, _) => false,
            (false, true) => true,
            (false, false) => x.0 * y.1 < y.0 * x.1,
        }
    }

    /// Closed clockwise arc `[from, to]`.
    fn in_closed_arc(x: Frac, from: Frac, to: Frac) -> bool {
        if x == from || x == to {
            return true;
        }
        if less(from, to) {
            less(from, x) && less(x, to)
        } else {
            less(from, x) || less(x, to)
        }
    }

    /// All Farey neighbours of `v` with denominator at most `den_bound` and
    /// numerator at most `num_bound` in absolute value.
    fn neighbors(v: Frac, den_bound: i128, num_bound: i128) -> Vec<Frac> {
        let (a, b) = v;
        let mut out = Vec::new();
        if b == 0 {
            // ∞ is adjacent to the integers
            out.extend((-num_bound..=num_bound).map(|c| (c, 1)));
            return out;
        }
        for d in 0..=den_bound {
            for sign in [-1i128, 1] {
                // a d - b c = sign
                let t = a * d - sign;
                if t % b == 0 {
                    let c = t / b;
                    if c.abs() <= num_bound {
                        let f = normalize((c, d));
                        if !out.contains(&f) {
                            out.push(f);
                        }
                    }
                }
            }
        }
        out
    }

    /// Breadth-first shortest path inside the closed clockwise arc from
    /// `from` to `to`, over reduced fractions with denominator `≤ den_bound`
    /// (plus `∞`). Numerators are capped at `den_bound · (M + 2)` where `M`
    /// bounds the finite endpoints, which only matters for arcs through `∞`.
    ///
    /// Also returns the number of distinct shortest paths (saturating).
    pub fn bfs_with_count(from: &ExtRat, to: &ExtRat, den_bound: u64) -> Result<(FareyPath, u64)> {
        if from == to {
            return Err(Error::DegenerateArc(from.to_string()));
        }
        let (src, dst) = (to_frac(from)?, to_frac(to)?);
        let den_bound = den_bound as i128;
        let mag = |f: Frac| if f.1 == 0 { 0 } else { f.0.abs() / f.1 + 1 };
        let num_bound = den_bound * (mag(src).max(mag(dst)) + 2);

        let mut pred: HashMap<Frac, Option<Frac>> = HashMap::new();
        let mut dist: HashMap<Frac, usize> = HashMap::new();
        let mut count: HashMap<Frac, u64> = HashMap::new();
        let mut queue = VecDeque::new();
        pred.insert(src, None);
        dist.insert(src, 0);
        count.insert(src, 1);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let dv = dist[&v];
            if let Some(&dt) = dist.get(&dst) {
                if dv >= dt {
                    break;
                }
            }
            let cv = count[&v];
            for w in neighbors(v, den_bound, num_bound) {
                if !in_closed_arc(w, src, dst) {
                    continue;
                }
                match dist.get(&w) {
                    None => {
                        dist.insert(w, dv + 1);
                        count.insert(w, cv);
                        pred.insert(w, Some(v));
                        queue.push_back(w);
                    }
                    Some(&dw) if dw == dv + 1 => {
                        let c = count.get_mut(&w).unwrap();
                        *c = c.saturating_add(cv);
                    }
                    _ => {}
                }
            }
        }
        if !pred.contains_key(&dst) {
            return Err(Error::BoundTooSmall { target: to.to_string(), bound: den_bound as u64 });
        }
        let mut path = vec![dst];
        let mut cur = dst;
        while let Some(Some(p)) = pred.get(&cur) {
            path.push(*p);
            cur = *p;
        }
        path.reverse();
        Ok((FareyPath::new(path.into_iter().map(to_ext).collect()), count[&dst]))
    }

    /// Breadth-first shortest path; see [`bfs_with_count`].
    pub fn bfs_oracle(from: &ExtRat, to: &ExtRat, den_bound: u64) -> Result<FareyPath> {
        bfs_with_count(from, to, den_bound).map(|(p, _)| p)
    }

    /// Farthest clockwise neighbour of `s` in `(s, bound]` by scanning every
    /// neighbour with denominator `≤ den_bound` (and, for `s = ∞`, integer
    /// neighbours up to `den_bound²` in size).
    pub fn farthest_neighbor_scan(s: &ExtRat, bound: &ExtRat, den_bound: u64) -> Result<ExtRat> {
        let (sf, bf) = (to_frac(s)?, to_frac(bound)?);
        if sf == bf {
            return Err(Error::DegenerateArc(s.to_string()));
        }
        let db = den_bound as i128;
        let mut best: Option<Frac> = None;
        for w in neighbors(sf, db, db * db) {
            if w == sf || !in_closed_arc(w, sf, bf) {
                continue;
            }
            // keep the candidate closest to `bound` going clockwise
            let better = match best {
                None => true,
                Some(cur) => cur != bf && w != cur && in_closed_arc(w, cur, bf),
            };
            if better {
                best = Some(w);
            }
        }
        best.map(to_ext).ok_or(Error::BoundTooSmall { target: bound.to_string(), bound: den_bound })
    }
}

#[cfg(test)]
mod tests {
    use super::oracle::*;
    use super::*;
    use crate::contfrac::{neg_cf, CfForm};
    use crate::lens::LensSpace;

    fn r(n: i64, d: i64) -> ExtRat {
        ExtRat::new(n, d).unwrap()
    }

    fn path(v: &[(i64, i64)]) -> Vec<ExtRat> {
        v.iter().map(|&(n, d)| r(n, d)).collect()
    }

    #[test]
    fn arc_examples() {
        assert!(in_arc(&r(-2, 1), &r(-5, 2), &r(0, 1)).unwrap());
        assert!(!in_arc(&r(1, 2), &r(-1, 1), &r(0, 1)).unwrap());
        assert!(in_arc(&ExtRat::infinity(), &r(1, 1), &r(-1, 1)).unwrap());
        assert!(!in_arc(&r(0, 1), &r(1, 1), &r(-1, 1)).unwrap());
        assert!(in_arc(&r(-7, 1), &r(1, 1), &r(-1, 1)).unwrap());
        // endpoints are excluded
        assert!(!in_arc(&r(1, 1), &r(1, 1), &r(-1, 1)).unwrap());
        assert!(matches!(in_arc(&r(0, 1), &r(2, 1), &r(2, 1)), Err(Error::DegenerateArc(_))));
    }

    #[test]
    fn farthest_neighbor_examples() {
        assert_eq!(farthest_neighbor(&r(-11, 3), &r(0, 1)).unwrap(), r(-7, 2));
        assert_eq!(farthest_neighbor(&r(-5, 2), &r(0, 1)).unwrap(), r(-2, 1));
        assert_eq!(farthest_neighbor(&r(-2, 1), &r(-1, 1)).unwrap(), r(-1, 1));
        // through ∞
        assert_eq!(farthest_neighbor(&r(3, 1), &r(-1, 2)).unwrap(), ExtRat::infinity());
        assert_eq!(farthest_neighbor(&ExtRat::infinity(), &r(-5, 2)).unwrap(), r(-3, 1));
        assert!(farthest_neighbor(&r(1, 1), &r(1, 1)).is_err());
    }

    #[test]
    fn farthest_neighbor_ccw_mirror() {
        assert_eq!(farthest_neighbor_ccw(&r(-2, 1), &r(-5, 2)).unwrap(), r(-5, 2));
        assert_eq!(farthest_neighbor_ccw(&r(0, 1), &r(-5, 2)).unwrap(), r(-1, 1));
    }

    #[test]
    fn farthest_neighbor_matches_scan() {
        let slopes: Vec<ExtRat> = (-12i64..=12)
            .flat_map(|n| (1i64..=6).map(move |d| (n, d)))
            .filter(|&(n, d)| num_integer::gcd(n, d) == 1)
            .map(|(n, d)| r(n, d))
            .chain(std::iter::once(ExtRat::infinity()))
            .collect();
        for s in &slopes {
            for b in slopes.iter().step_by(7) {
                if s == b {
                    continue;
                }
                assert_eq!(
                    farthest_neighbor(s, b).unwrap(),
                    farthest_neighbor_scan(s, b, 60).unwrap(),
                    "s = {s}, bound = {b}"
                );
            }
        }
    }

    #[test]
    fn geodesic_examples() {
        let z = r(0, 1);
        assert_eq!(geodesic(&r(-2, 1), &z).unwrap().vertices(), path(&[(-2, 1), (-1, 1), (0, 1)]));
        assert_eq!(geodesic(&r(-5, 2), &z).unwrap().vertices(), path(&[(-5, 2), (-2, 1), (-1, 1), (0, 1)]));
        assert_eq!(geodesic(&r(-12, 5), &z).unwrap().vertices(), path(&[(-12, 5), (-7, 3), (-2, 1), (-1, 1), (0, 1)]));
        assert!(geodesic(&z, &z).is_err());
    }

    #[test]
    fn bfs_examples() {
        let z = r(0, 1);
        assert_eq!(bfs_oracle(&r(-2, 1), &z, 10).unwrap().vertices(), path(&[(-2, 1), (-1, 1), (0, 1)]));
        assert_eq!(bfs_oracle(&r(-5, 2), &z, 10).unwrap().vertices().len(), 4);
        assert_eq!(
            bfs_oracle(&r(-9, 2), &z, 10).unwrap().vertices(),
            path(&[(-9, 2), (-4, 1), (-3, 1), (-2, 1), (-1, 1), (0, 1)])
        );
        assert!(matches!(bfs_oracle(&r(-9, 7), &z, 3), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn geodesic_matches_bfs_through_infinity() {
        let cases = [((3, 1), (-1, 2)), ((5, 2), (-7, 3)), ((1, 3), (-1, 4)), ((-2, 1), (-3, 1))];
        for ((a, b), (c, d)) in cases {
            let (from, to) = (r(a, b), r(c, d));
            let g = geodesic(&from, &to).unwrap();
            let (bfs, n) = bfs_with_count(&from, &to, 12).unwrap();
            assert!(g.is_valid());
            assert_eq!(g, bfs, "{from} -> {to}");
            assert_eq!(n, 1);
        }
    }

    #[test]
    fn lens_geodesic_structure() {
        for lens in LensSpace::all_up_to(50) {
            let g = geodesic(&lens.slope(), &ExtRat::zero()).unwrap();
            assert!(g.is_valid());
            let v = g.vertices();
            let n = v.len();
            assert_eq!(v[n - 2], r(-1, 1));
            assert!(v[1..n - 1].iter().all(|x| x <= &r(-1, 1) && x > &lens.slope()));
            // second vertex is (p' - p)/(q - q')
            let dual = crate::contfrac::dual_fraction(lens);
            let (p, q) = (BigInt::from(lens.p()), BigInt::from(lens.q()));
            let s1 = ExtRat::new(dual.num() - &p, q - dual.den()).unwrap();
            assert_eq!(v[1], s1, "{lens}");
            // edge count is Σ|r_i + 2| + 2
            let cf = neg_cf(&lens.slope(), CfForm::Lens).unwrap();
            let expect: i64 = cf.to_i64s().unwrap().iter().map(|r| (r + 2).abs()).sum::<i64>() + 2;
            assert_eq!(g.edge_count() as i64, expect, "{lens}");
        }
    }
}
