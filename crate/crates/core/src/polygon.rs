//! Combinatorics of the labeled regular n-gon.
//!
//! Edges of the polygon carry labels `1..=n` counterclockwise; edge `i` joins
//! vertices `i - 1` and `i` (vertex `n` is vertex `0`), and vertex `i` sits at
//! angle `2πi/n`. A diagonal splits the edge labels into two arcs; we name it
//! by the arc that avoids label `n`, a block `k..=l` with `1 <= k < l <= n-1`
//! and at most `n - 2` labels.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used when concurrency of three chord lines cannot be settled
/// symbolically.
pub const CONCURRENCY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagonal {
    k: usize,
    l: usize,
    n: usize,
}

impl Diagonal {
    pub fn new(k: usize, l: usize, n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::PolygonTooSmall(n));
        }
        if !(1 <= k && k < l && l < n && l - k < n - 2) {
            return Err(Error::domain(format!(
                "[{k},{l}] is not a diagonal block of a {n}-gon"
            )));
        }
        Ok(Diagonal { k, l, n })
    }

    /// Normalizes the cyclic arc of edge labels `first, first+1, ..., last`
    /// (indices taken mod n in `1..=n`) to the block that avoids label `n`.
    pub fn from_arc(first: usize, last: usize, n: usize) -> Result<Self> {
        let wrap = |x: usize| ((x + n - 1) % n) + 1;
        let (first, last) = (wrap(first), wrap(last));
        let contains_n = first > last || last == n;
        if contains_n {
            let (cf, cl) = (wrap(last + 1), wrap(first + n - 1));
            // The complement of an arc through n is a linear block in 1..n-1.
            Diagonal::new(cf, cl, n)
        } else {
            Diagonal::new(first, last, n)
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.l - self.k + 1
    }

    pub fn contains_label(&self, x: usize) -> bool {
        self.k <= x && x <= self.l
    }

    /// Block inclusion: `other` lies on this diagonal's side.
    pub fn contains(&self, other: &Diagonal) -> bool {
        self.k <= other.k && other.l <= self.l
    }

    pub fn is_disjoint(&self, other: &Diagonal) -> bool {
        self.l < other.k || other.l < self.k
    }

    /// Interiors meet: the blocks overlap without nesting.
    pub fn crosses_unchecked(&self, other: &Diagonal) -> bool {
        (self.k < other.k && other.k <= self.l && self.l < other.l)
            || (other.k < self.k && self.k <= other.l && other.l < self.l)
    }

    /// Where `other` lands after the sub-polygon on this diagonal's side is
    /// reflected (a twist along `self`).
    pub fn transport(&self, other: &Diagonal) -> Diagonal {
        if self.contains(other) {
            let s = self.k + self.l;
            Diagonal {
                k: s - other.l,
                l: s - other.k,
                n: self.n,
            }
        } else {
            *other
        }
    }

    /// Polygon vertices joined by the chord, in `0..n`.
    pub fn chord(&self) -> (usize, usize) {
        (self.k - 1, self.l)
    }

    /// Direction class of the chord. Two chords of the regular n-gon are
    /// parallel iff their endpoint sums agree mod n; the supporting line has
    /// normal angle `π·key/n`.
    pub fn direction_key(&self) -> usize {
        let (i, j) = self.chord();
        (i + j) % self.n
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.k, self.l)
    }
}

pub fn check_polygon(n: usize) -> Result<()> {
    if n < 4 {
        Err(Error::PolygonTooSmall(n))
    } else {
        Ok(())
    }
}

pub fn diagonal_count(n: usize) -> usize {
    n * (n - 3) / 2
}

/// All `n(n-3)/2` diagonals, sorted by `(k, l)`.
pub fn diagonals(n: usize) -> Result<Vec<Diagonal>> {
    check_polygon(n)?;
    let mut out = Vec::with_capacity(diagonal_count(n));
    for k in 1..n {
        for l in (k + 1)..n {
            if l - k < n - 2 {
                out.push(Diagonal { k, l, n });
            }
        }
    }
    debug_assert_eq!(out.len(), diagonal_count(n));
    Ok(out)
}

pub fn crosses(a: &Diagonal, b: &Diagonal) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::domain(format!(
            "diagonals of different polygons ({}-gon vs {}-gon)",
            a.n, b.n
        )));
    }
    Ok(a.crosses_unchecked(b))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn direction_classes(n: usize) -> Result<BTreeMap<usize, Vec<Diagonal>>> {
    let mut classes: BTreeMap<usize, Vec<Diagonal>> = BTreeMap::new();
    for d in diagonals(n)? {
        classes.entry(d.direction_key()).or_default().push(d);
    }
    Ok(classes)
}

/// Number of unordered pairs of parallel diagonals.
pub fn count_parallel_pairs(n: usize) -> Result<u64> {
    Ok(direction_classes(n)?
        .values()
        .map(|c| binomial(c.len() as u64, 2))
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NoncrossingPairs {
    pub brute_force: u64,
    pub closed_form: u64,
}

/// Number of unordered pairs of diagonals with disjoint interiors, counted by
/// enumeration and by the closed form `C(n-3,2)·C(n+1,2)/3`; the two must
/// agree with each other and with `C(n(n-3)/2, 2) - C(n, 4)`.
pub fn count_noncrossing_pairs(n: usize) -> Result<NoncrossingPairs> {
    let ds = diagonals(n)?;
    let mut brute = 0u64;
    for (i, a) in ds.iter().enumerate() {
        brute += ds[i + 1..].iter().filter(|b| !a.crosses_unchecked(b)).count() as u64;
    }
    let nn = n as u64;
    let num = binomial(nn - 3, 2) * binomial(nn + 1, 2);
    if !num.is_multiple_of(3) {
        return Err(Error::Consistency(format!(
            "closed form for noncrossing pairs is not integral at n = {n}"
        )));
    }
    let closed = num / 3;
    let via_crossings = binomial(ds.len() as u64, 2) - binomial(nn, 4);
    if brute != closed || brute != via_crossings {
        return Err(Error::Consistency(format!(
            "noncrossing pairs at n = {n}: enumeration {brute}, closed form {closed}, \
             pairs minus crossings {via_crossings}"
        )));
    }
    Ok(NoncrossingPairs {
        brute_force: brute,
        closed_form: closed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquilateralTriples {
    pub count: u64,
    /// Triples whose concurrency was decided in floating point rather than
    /// symbolically.
    pub float_decided: u64,
}

/// Supporting line of a chord as `(cos φ, sin φ, c)` with `x cos φ + y sin φ = c`.
fn chord_line(d: &Diagonal) -> ([f64; 3], bool) {
    let (i, j) = d.chord();
    let n = d.n as f64;
    let phi = PI * (i + j) as f64 / n;
    let is_diameter = 2 * (j - i) == d.n;
    let c = if is_diameter {
        0.0
    } else {
        (PI * (j - i) as f64 / n).cos()
    };
    ([phi.cos(), phi.sin(), c], is_diameter)
}

/// Whether the supporting lines of three chords pass through one point.
/// Returns the verdict and whether it needed the floating tolerance.
pub fn lines_concurrent(a: &Diagonal, b: &Diagonal, c: &Diagonal) -> (bool, bool) {
    let (la, da) = chord_line(a);
    let (lb, db) = chord_line(b);
    let (lc, dc) = chord_line(c);
    if da && db && dc {
        return (true, false);
    }
    let det = la[0] * (lb[1] * lc[2] - lb[2] * lc[1]) - la[1] * (lb[0] * lc[2] - lb[2] * lc[0])
        + la[2] * (lb[0] * lc[1] - lb[1] * lc[0]);
    (det.abs() < CONCURRENCY_TOL, true)
}

/// Unordered triples of diagonals whose supporting lines bound an
/// equilateral triangle: directions pairwise 60° apart, not concurrent.
pub fn count_equilateral_triples(n: usize) -> Result<EquilateralTriples> {
    check_polygon(n)?;
    let mut out = EquilateralTriples {
        count: 0,
        float_decided: 0,
    };
    if !n.is_multiple_of(3) {
        return Ok(out);
    }
    let classes = direction_classes(n)?;
    let third = n / 3;
    let empty = Vec::new();
    for key in 0..third {
        let c0 = classes.get(&key).unwrap_or(&empty);
        let c1 = classes.get(&(key + third)).unwrap_or(&empty);
        let c2 = classes.get(&(key + 2 * third)).unwrap_or(&empty);
        for a in c0 {
            for b in c1 {
                for c in c2 {
                    let (concurrent, float) = lines_concurrent(a, b, c);
                    if float {
                        out.float_decided += 1;
                    }
                    if !concurrent {
                        out.count += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The extra summand printed as "n/3[n+3/6]" when 3 divides n, under the two
/// readings we consider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraTerm {
    /// `(n/3)·⌊(n+3)/6⌋`, the default reading.
    pub floor_quotient: u64,
    /// `(n/3)·⌊n + 3/6⌋ = n²/3`.
    pub literal_precedence: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtraParsing {
    FloorQuotient,
    LiteralPrecedence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MFormula {
    pub n: usize,
    /// Set for the tabulated cases n = 4 and n = 5.
    pub special_case: Option<u64>,
    pub base: u64,
    pub parallel_pairs: u64,
    pub extra: Option<ExtraTerm>,
    pub value: u64,
    pub ambiguous: bool,
}

impl MFormula {
    pub fn value_with(&self, parsing: ExtraParsing) -> u64 {
        if let Some(v) = self.special_case {
            return v;
        }
        let extra = match (self.extra, parsing) {
            (None, _) => 0,
            (Some(e), ExtraParsing::FloorQuotient) => e.floor_quotient,
            (Some(e), ExtraParsing::LiteralPrecedence) => e.literal_precedence,
        };
        self.base + self.parallel_pairs + extra
    }
}

pub fn m_formula(n: usize) -> Result<MFormula> {
    check_polygon(n)?;
    let base = diagonal_count(n) as u64;
    let parallel_pairs = count_parallel_pairs(n)?;
    let special_case = match n {
        4 => Some(1),
        5 => Some(4),
        _ => None,
    };
    let extra = (special_case.is_none() && n.is_multiple_of(3)).then(|| {
        let nn = n as u64;
        ExtraTerm {
            floor_quotient: (nn / 3) * ((nn + 3) / 6),
            literal_precedence: nn * nn / 3,
        }
    });
    let mut m = MFormula {
        n,
        special_case,
        base,
        parallel_pairs,
        extra,
        value: 0,
        ambiguous: extra.is_some(),
    };
    m.value = m.value_with(ExtraParsing::FloorQuotient);
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountsReport {
    pub n: usize,
    #[serde(rename = "P")]
    pub p: u64,
    #[serde(rename = "S")]
    pub s: u64,
    #[serde(rename = "eqTriples")]
    pub eq_triples: u64,
    #[serde(rename = "M")]
    pub m: u64,
    pub ambiguous: bool,
}

pub fn counts_report(n: usize) -> Result<CountsReport> {
    let m = m_formula(n)?;
    Ok(CountsReport {
        n,
        p: m.parallel_pairs,
        s: count_noncrossing_pairs(n)?.closed_form,
        eq_triples: count_equilateral_triples(n)?.count,
        m: m.value,
        ambiguous: m.ambiguous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(k: usize, l: usize, n: usize) -> Diagonal {
        Diagonal::new(k, l, n).unwrap()
    }

    // Oracle: actual chord direction angles on the unit circle, bucketed by
    // rounding. Independent of the modular key.
    fn parallel_pairs_by_angle(n: usize) -> u64 {
        let pt = |i: usize| {
            let t = 2.0 * PI * i as f64 / n as f64;
            (t.cos(), t.sin())
        };
        let mut buckets: BTreeMap<i64, u64> = BTreeMap::new();
        for dg in diagonals(n).unwrap() {
            let (i, j) = dg.chord();
            let (a, b) = (pt(i), pt(j));
            let mut ang = (b.1 - a.1).atan2(b.0 - a.0);
            if ang < 0.0 {
                ang += PI;
            }
            if ang >= PI - 1e-9 {
                ang -= PI;
            }
            *buckets.entry((ang * 1e6).round() as i64).or_default() += 1;
        }
        buckets.values().map(|&z| binomial(z, 2)).sum()
    }

    // Oracle: all C(m,3) triples, angles from coordinates, concurrency from
    // explicit intersection points.
    fn equilateral_by_geometry(n: usize) -> u64 {
        let pt = |i: usize| {
            let t = 2.0 * PI * i as f64 / n as f64;
            (t.cos(), t.sin())
        };
        let ds = diagonals(n).unwrap();
        let line = |dg: &Diagonal| {
            let (i, j) = dg.chord();
            (pt(i), pt(j))
        };
        let dir = |dg: &Diagonal| {
            let ((x0, y0), (x1, y1)) = line(dg);
            let a = (y1 - y0).atan2(x1 - x0);
            a.rem_euclid(PI)
        };
        let meet = |p: &Diagonal, q: &Diagonal| {
            let ((x1, y1), (x2, y2)) = line(p);
            let ((x3, y3), (x4, y4)) = line(q);
            let den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
            let a = x1 * y2 - y1 * x2;
            let b = x3 * y4 - y3 * x4;
            (
                (a * (x3 - x4) - (x1 - x2) * b) / den,
                (a * (y3 - y4) - (y1 - y2) * b) / den,
            )
        };
        let sixty = |a: f64, b: f64| {
            let g = (a - b).rem_euclid(PI);
            (g - PI / 3.0).abs() < 1e-7 || (g - 2.0 * PI / 3.0).abs() < 1e-7
        };
        let mut count = 0;
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                for k in j + 1..ds.len() {
                    let (a, b, c) = (&ds[i], &ds[j], &ds[k]);
                    let (da, db, dc) = (dir(a), dir(b), dir(c));
                    if !(sixty(da, db) && sixty(db, dc) && sixty(da, dc)) {
                        continue;
                    }
                    let p = meet(a, b);
                    let q = meet(a, c);
                    if (p.0 - q.0).hypot(p.1 - q.1) > 1e-7 {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn diagonals_small_polygons() {
        assert_eq!(diagonals(4).unwrap(), vec![d(1, 2, 4), d(2, 3, 4)]);
        assert_eq!(diagonals(5).unwrap().len(), 5);
        let six = diagonals(6).unwrap();
        assert_eq!(six.len(), 9);
        assert_eq!(six[0], d(1, 2, 6));
        assert_eq!(*six.last().unwrap(), d(4, 5, 6));
        assert_eq!(diagonals(3), Err(Error::PolygonTooSmall(3)));
    }

    #[test]
    fn diagonal_counts_match_formula() {
        for n in 4..=12 {
            assert_eq!(diagonals(n).unwrap().len(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(&d(1, 3, 6), &d(2, 4, 6)).unwrap());
        assert!(!crosses(&d(1, 2, 6), &d(3, 4, 6)).unwrap());
        assert!(!crosses(&d(2, 3, 6), &d(1, 4, 6)).unwrap());
        assert!(crosses(&d(1, 2, 5), &d(1, 2, 6)).is_err());
    }

    #[test]
    fn crossing_is_symmetric_irreflexive_and_counts_four_subsets() {
        for n in 4..=12 {
            let ds = diagonals(n).unwrap();
            let mut crossing = 0u64;
            for a in &ds {
                assert!(!a.crosses_unchecked(a));
                for b in &ds {
                    assert_eq!(a.crosses_unchecked(b), b.crosses_unchecked(a));
                    if a < b && a.crosses_unchecked(b) {
                        crossing += 1;
                    }
                }
            }
            assert_eq!(crossing, binomial(n as u64, 4), "n = {n}");
        }
    }

    #[test]
    fn from_arc_normalizes_to_block_avoiding_n() {
        assert_eq!(Diagonal::from_arc(2, 3, 6).unwrap(), d(2, 3, 6));
        // {5,6} has complement {1,2,3,4}
        assert_eq!(Diagonal::from_arc(5, 6, 6).unwrap(), d(1, 4, 6));
        // {6,1} has complement {2,3,4,5}
        assert_eq!(Diagonal::from_arc(6, 1, 6).unwrap(), d(2, 5, 6));
        assert_eq!(Diagonal::from_arc(4, 1, 5).unwrap(), d(2, 3, 5));
        // Both arcs of a chord name the same diagonal.
        for dg in diagonals(7).unwrap() {
            let other = Diagonal::from_arc(dg.l() + 1, dg.k() + 7 - 1, 7).unwrap();
            assert_eq!(other, dg);
        }
    }

    #[test]
    fn parallel_pairs_examples() {
        assert_eq!(count_parallel_pairs(4).unwrap(), 0);
        assert_eq!(count_parallel_pairs(5).unwrap(), 0);
        assert_eq!(count_parallel_pairs(6).unwrap(), 3);
        assert_eq!(count_parallel_pairs(7).unwrap(), 7);
    }

    #[test]
    fn parallel_pairs_agree_with_angle_oracle() {
        for n in 4..=16 {
            assert_eq!(
                count_parallel_pairs(n).unwrap(),
                parallel_pairs_by_angle(n),
                "n = {n}"
            );
            if n % 2 == 0 && n >= 6 {
                assert!(count_parallel_pairs(n).unwrap() > 0);
            }
        }
    }

    #[test]
    fn noncrossing_pairs_examples() {
        assert_eq!(count_noncrossing_pairs(4).unwrap().brute_force, 0);
        assert_eq!(count_noncrossing_pairs(5).unwrap().brute_force, 5);
        assert_eq!(count_noncrossing_pairs(6).unwrap().brute_force, 21);
        for n in 4..=12 {
            let s = count_noncrossing_pairs(n).unwrap();
            assert_eq!(s.brute_force, s.closed_form);
        }
    }

    #[test]
    fn equilateral_examples() {
        assert_eq!(count_equilateral_triples(5).unwrap().count, 0);
        assert_eq!(count_equilateral_triples(6).unwrap().count, 8);
        for n in 4..=13 {
            if n % 3 != 0 {
                assert_eq!(count_equilateral_triples(n).unwrap().count, 0);
            }
        }
    }

    #[test]
    fn equilateral_agrees_with_geometry_oracle() {
        for n in [6, 9, 12] {
            assert_eq!(
                count_equilateral_triples(n).unwrap().count,
                equilateral_by_geometry(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn m_formula_examples() {
        assert_eq!(m_formula(4).unwrap().value, 1);
        assert_eq!(m_formula(5).unwrap().value, 4);
        let m7 = m_formula(7).unwrap();
        assert_eq!((m7.base, m7.parallel_pairs, m7.value), (14, 7, 21));
        assert!(!m7.ambiguous);
        let m6 = m_formula(6).unwrap();
        assert!(m6.ambiguous);
        assert_eq!(m6.value_with(ExtraParsing::FloorQuotient), 9 + 3 + 2);
        assert_eq!(m6.value_with(ExtraParsing::LiteralPrecedence), 9 + 3 + 12);
    }

    #[test]
    fn transport_reflects_nested_blocks_only() {
        let e = d(1, 4, 7);
        assert_eq!(e.transport(&d(1, 2, 7)), d(3, 4, 7));
        assert_eq!(e.transport(&d(2, 3, 7)), d(2, 3, 7));
        assert_eq!(e.transport(&d(5, 6, 7)), d(5, 6, 7));
        assert_eq!(e.transport(&d(1, 5, 7)), d(1, 5, 7));
    }
}
