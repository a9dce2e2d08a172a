//! Arcs on the annulus, noncrossing arc diagrams, join- and meet-irreducibles, and arc
//! torsion classes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::tito::{Block, Kind, ReflectionIndex, Tito};
use crate::rep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Cyclic,
    Affine,
}

impl Variant {
    /// Whether an arc of length `len` belongs to this variant.
    pub fn admits(self, len: i64, n: usize) -> bool {
        match self {
            Variant::Cyclic => (1..=n as i64).contains(&len),
            Variant::Affine => (1..n as i64).contains(&len),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Cyclic => "cyclic",
            Variant::Affine => "affine",
        }
    }
}

/// The arc `γ_{a,b}`, with `b <= a + n`. Imaginary when `b = a + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub index: ReflectionIndex,
}

impl Arc {
    pub fn new(a: i64, b: i64, n: usize) -> Result<Arc> {
        if b - a > n as i64 {
            return Err(Error::ArcTooLong(a, b));
        }
        Ok(Arc { index: ReflectionIndex::new(a, b, n) })
    }

    pub fn is_imaginary(&self, n: usize) -> bool {
        self.index.len() == n as i64
    }
}

/// Every arc of the variant, in canonical order.
pub fn all_arcs(n: usize, variant: Variant) -> Vec<ReflectionIndex> {
    let mut v = Vec::new();
    for a in 1..=n as i64 {
        for len in 1..=n as i64 {
            if variant.admits(len, n) {
                v.push(ReflectionIndex { a, b: a + len });
            }
        }
    }
    v
}

/// A set of arcs, stored as canonical reflection indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcSet {
    n: usize,
    arcs: BTreeSet<ReflectionIndex>,
}

impl ArcSet {
    pub fn empty(n: usize) -> ArcSet {
        ArcSet { n, arcs: BTreeSet::new() }
    }

    /// Builds from arbitrary representatives; each pair must have `a < b <= a + n`.
    pub fn from_pairs(n: usize, pairs: &[(i64, i64)]) -> Result<ArcSet> {
        let mut s = ArcSet::empty(n);
        for &(a, b) in pairs {
            s.insert(Arc::new(a, b, n)?.index);
        }
        Ok(s)
    }

    pub fn from_indices(n: usize, it: impl IntoIterator<Item = ReflectionIndex>) -> ArcSet {
        let mut s = ArcSet::empty(n);
        for r in it {
            s.insert(r);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, r: ReflectionIndex) -> bool {
        let r = ReflectionIndex::new(r.a, r.b, self.n);
        debug_assert!(r.len() <= self.n as i64);
        self.arcs.insert(r)
    }

    pub fn contains(&self, r: ReflectionIndex) -> bool {
        self.arcs.contains(&ReflectionIndex::new(r.a, r.b, self.n))
    }

    pub fn contains_pair(&self, a: i64, b: i64) -> bool {
        a < b && b - a <= self.n as i64 && self.contains(ReflectionIndex::new(a, b, self.n))
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ReflectionIndex> + '_ {
        self.arcs.iter().copied()
    }

    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.iter().map(|r| (r.a, r.b)).collect()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.arcs.is_subset(&other.arcs)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        ArcSet { n: self.n, arcs: self.arcs.union(&other.arcs).copied().collect() }
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        ArcSet { n: self.n, arcs: self.arcs.intersection(&other.arcs).copied().collect() }
    }

    pub fn has_imaginary(&self) -> bool {
        self.iter().any(|r| r.len() == self.n as i64)
    }

    pub fn is_noncrossing(&self) -> bool {
        let v: Vec<_> = self.iter().collect();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if crosses(v[i], v[j], self.n) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

fn strictly_interleave(a: i64, b: i64, c: i64, d: i64) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Combinatorial incompatibility of two arcs on the annulus: interleaving translates, a shared
/// left or right endpoint, or an imaginary arc that does not enclose the other. Translates are
/// searched in `|k| <= 2`.
pub fn crosses(x: ReflectionIndex, y: ReflectionIndex, n: usize) -> bool {
    let x = ReflectionIndex::new(x.a, x.b, n);
    let y = ReflectionIndex::new(y.a, y.b, n);
    if x == y {
        return false;
    }
    let nn = n as i64;
    let ix = x.len() == nn;
    let iy = y.len() == nn;
    match (ix, iy) {
        (true, true) => true,
        (true, false) => !strictly_inside(y, x.a, n),
        (false, true) => !strictly_inside(x, y.a, n),
        // Two arcs may not leave from, or land on, the same point.
        (false, false) => {
            x.a == y.a
                || rep(x.b, n) == rep(y.b, n)
                || (-2..=2).any(|k| {
                    let (c, d) = y.shifted(k, n);
                    strictly_interleave(x.a, x.b, c, d)
                })
        }
    }
}

// Some translate of the real arc lies in the open interval (a, a + n).
fn strictly_inside(r: ReflectionIndex, a: i64, n: usize) -> bool {
    (-2..=2).any(|k| {
        let (c, d) = r.shifted(k, n);
        a < c && d < a + n as i64
    })
}

/// Lower walls of a 312-avoiding order.
pub fn arc_diagram(t: &Tito) -> Result<ArcSet> {
    if !t.avoids(crate::tito::Pattern::P312) {
        return Err(Error::Not312Avoiding);
    }
    Ok(lower_wall_set(t))
}

pub(crate) fn lower_wall_set(t: &Tito) -> ArcSet {
    ArcSet::from_indices(t.n(), t.lower_walls())
}

/// `j_{a,b}`: the join-irreducible whose arc diagram is `{γ_{a,b}}`.
pub fn make_jirr(r: ReflectionIndex, n: usize) -> Result<Tito> {
    let (a, b) = (r.a, r.b);
    let nn = n as i64;
    if b - a > nn || b <= a {
        return Err(Error::ArcTooLong(a, b));
    }
    let blocks = if b < a + nn {
        let mut w: Vec<i64> = (b + 1 - nn..=b).filter(|&x| x != a).collect();
        w.push(a);
        vec![Block { window: w, kind: Kind::Waxing }]
    } else {
        vec![
            Block { window: (a - nn + 1..a).collect(), kind: Kind::Waxing },
            Block { window: vec![a], kind: Kind::Waning },
        ]
    };
    Tito::new(n, blocks)
}

/// `m_{a,b}`: the 132-avoiding meet-irreducible whose only upper wall is `(a,b)`.
pub fn make_mirr(r: ReflectionIndex, n: usize) -> Result<Tito> {
    let (a, b) = (r.a, r.b);
    let nn = n as i64;
    if b - a > nn || b <= a {
        return Err(Error::ArcTooLong(a, b));
    }
    let blocks = if b < a + nn {
        let mut w: Vec<i64> = (a..=a + nn - 1).rev().filter(|&x| x != b).collect();
        w.push(b);
        vec![Block { window: w, kind: Kind::Waning }]
    } else {
        // Waning block first: the other order contains a ≺ a+n ≺ a+1, a 132 pattern.
        vec![
            Block { window: (a + 1..=a + nn - 1).rev().collect(), kind: Kind::Waning },
            Block { window: vec![a], kind: Kind::Waxing },
        ]
    };
    Tito::new(n, blocks)
}

pub fn kappa(r: ReflectionIndex, n: usize) -> Result<Tito> {
    make_mirr(r, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ftfsdl {
    /// `j_{r1} ↞ j_{r2}`: some translate has `a = c` and `b <= d`.
    pub onto: bool,
    /// `j_{r1} ↪ j_{r2}`: some translate has `b = d` and `a >= c`.
    pub into: bool,
    /// `j_{r1} → j_{r2}`: some translate has `c <= a < d <= b`.
    pub to: bool,
}

pub fn ftfsdl(r1: ReflectionIndex, r2: ReflectionIndex, n: usize) -> Ftfsdl {
    let (a, b) = (r1.a, r1.b);
    let mut out = Ftfsdl { onto: false, into: false, to: false };
    for k in -2..=2 {
        let (c, d) = r2.shifted(k, n);
        out.onto |= a == c && b <= d;
        out.into |= b == d && a >= c;
        out.to |= c <= a && a < d && d <= b;
    }
    out
}

/// Least arc torsion class containing `d`.
pub fn closure(d: &ArcSet, variant: Variant) -> ArcSet {
    let n = d.n();
    let nn = n as i64;
    let mut s = d.clone();
    loop {
        let mut added = Vec::new();
        let cur: Vec<_> = s.iter().collect();
        for &r in &cur {
            for b in r.a + 1..r.b {
                let p = ReflectionIndex::new(r.a, b, n);
                if !s.contains(p) {
                    added.push(p);
                }
            }
            for &q in &cur {
                let shift = (r.b - q.a).rem_euclid(nn);
                if shift != 0 {
                    continue;
                }
                let c = r.b + q.len();
                if variant.admits(c - r.a, n) {
                    let p = ReflectionIndex::new(r.a, c, n);
                    if !s.contains(p) {
                        added.push(p);
                    }
                }
            }
        }
        if added.is_empty() {
            return s;
        }
        for p in added {
            s.insert(p);
        }
    }
}

pub fn is_closed(d: &ArcSet, variant: Variant) -> bool {
    closure(d, variant) == *d
}

/// The arc torsion class of a 312-avoiding order.
pub fn torsion_arcs(t: &Tito, variant: Variant) -> Result<ArcSet> {
    let d = arc_diagram(t)?;
    if variant == Variant::Affine && d.has_imaginary() {
        return Err(Error::Invariant("affine torsion class of a non-real order".into()));
    }
    Ok(closure(&d, variant))
}

/// All noncrossing diagrams of the variant, found by backtracking over pairwise
/// compatibility masks.
pub fn noncrossing_diagrams(n: usize, variant: Variant) -> Vec<ArcSet> {
    let arcs = all_arcs(n, variant);
    assert!(arcs.len() <= 64);
    let compat: Vec<u64> = arcs
        .iter()
        .map(|&x| {
            arcs.iter()
                .enumerate()
                .filter(|&(_, &y)| x != y && !crosses(x, y, n))
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let all = if arcs.len() == 64 { u64::MAX } else { (1u64 << arcs.len()) - 1 };
    extend(0, all, &arcs, &compat, &mut chosen, &mut out, n);
    out
}

fn extend(
    from: usize,
    allowed: u64,
    arcs: &[ReflectionIndex],
    compat: &[u64],
    chosen: &mut Vec<ReflectionIndex>,
    out: &mut Vec<ArcSet>,
    n: usize,
) {
    out.push(ArcSet::from_indices(n, chosen.iter().copied()));
    for i in from..arcs.len() {
        if allowed >> i & 1 == 1 {
            chosen.push(arcs[i]);
            extend(i + 1, allowed & compat[i], arcs, compat, chosen, out, n);
            chosen.pop();
        }
    }
}
