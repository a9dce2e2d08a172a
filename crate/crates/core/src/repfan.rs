//! Bricks of the cyclic and affine Nakayama algebras, sτ-tilting data, type D tagged-arc
//! triangulations, g-vectors, c-matrices and stability-fan cones.
//!
//! No module category is built: every homological predicate is an inequality on indices.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arcdiag::{is_closed, torsion_arcs, ArcSet, Variant};
use crate::error::{Error, Result};
use crate::rep;
use crate::tibit::Tibit;
use crate::tito::ReflectionIndex;

/// A brick `M_{a,b}`, indexed like its arc.
pub type Brick = ReflectionIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BrickRel {
    /// `x` is a quotient of `y`.
    pub quotient: bool,
    /// `x` is a submodule of `y`.
    pub submodule: bool,
    /// Some nonzero map `x -> y`.
    pub hom: bool,
    /// `Ext¹(x, y) ≠ 0`.
    pub ext1: bool,
}

fn translates(y: Brick, n: usize) -> impl Iterator<Item = (i64, i64)> {
    (-2..=2).map(move |k| y.shifted(k, n))
}

pub fn brick_rel(x: Brick, y: Brick, n: usize) -> BrickRel {
    let (a, b) = (x.a, x.b);
    let nn = n as i64;
    let mut rel = BrickRel::default();
    for (c, d) in translates(y, n) {
        rel.quotient |= a == c && b <= d;
        rel.submodule |= b == d && a >= c;
        rel.hom |= c <= a && a < d && d <= b;
        rel.ext1 |= a < c && c <= b && b < d && d < a + nn;
    }
    rel
}

/// Whether a brick set is closed under quotients and under extensions
/// `0 -> M_{b,c} -> M_{a,c} -> M_{a,b} -> 0` that stay bricks of the variant.
pub fn is_torsion_brick_set(s: &BTreeSet<Brick>, n: usize, variant: Variant) -> bool {
    let all = crate::arcdiag::all_arcs(n, variant);
    for &x in s {
        for &q in &all {
            if brick_rel(q, x, n).quotient && !s.contains(&q) {
                return false;
            }
        }
    }
    for &x in s {
        for &y in s {
            for &z in &all {
                let len_ok = z.len() == x.len() + y.len();
                if len_ok && brick_rel(y, z, n).submodule && brick_rel(x, z, n).quotient && !s.contains(&z) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TaggedArc {
    /// `𝔞_{a,b}` with `a` in `1..=n` and `a < b <= a + n - 1`; `b - a = n - 1` is the plain
    /// radial arc.
    Plain { a: i64, b: i64 },
    /// `𝔯_a`.
    Notched { a: i64 },
}

impl TaggedArc {
    pub fn plain(a: i64, b: i64, n: usize) -> Result<TaggedArc> {
        if b <= a || b - a > n as i64 - 1 {
            return Err(Error::ArcTooLong(a, b));
        }
        let r = ReflectionIndex::new(a, b, n);
        Ok(TaggedArc::Plain { a: r.a, b: r.b })
    }

    pub fn notched(a: i64, n: usize) -> TaggedArc {
        TaggedArc::Notched { a: rep(a, n) }
    }

    pub fn is_radial(&self, n: usize) -> bool {
        match *self {
            TaggedArc::Plain { a, b } => b - a == n as i64 - 1,
            TaggedArc::Notched { .. } => true,
        }
    }

    pub fn all(n: usize) -> Vec<TaggedArc> {
        let nn = n as i64;
        let mut out: Vec<TaggedArc> =
            (1..=nn).flat_map(|a| (a + 1..a + nn).map(move |b| TaggedArc::Plain { a, b })).collect();
        out.extend((1..=nn).map(|a| TaggedArc::Notched { a }));
        out
    }
}

impl fmt::Display for TaggedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TaggedArc::Plain { a, b } => write!(f, "a({a},{b})"),
            TaggedArc::Notched { a } => write!(f, "r({a})"),
        }
    }
}

pub fn tagged_compatible(x: TaggedArc, y: TaggedArc, n: usize) -> bool {
    if x == y {
        return true;
    }
    let nn = n as i64;
    match (x, y) {
        (TaggedArc::Notched { .. }, TaggedArc::Notched { .. }) => true,
        (TaggedArc::Plain { a, b }, TaggedArc::Notched { a: c }) | (TaggedArc::Notched { a: c }, TaggedArc::Plain { a, b }) => {
            !(-2..=2).any(|k| {
                let c = c + k * nn;
                a <= c && c < b
            })
        }
        (TaggedArc::Plain { a, b }, TaggedArc::Plain { a: c, b: d }) => {
            // Hom(M_{c,d}, τ M_{a,b}) with τ M_{a,b} = M_{a+1,b+1}; projectives have τ = 0.
            let hit = |a: i64, b: i64, c: i64, d: i64| {
                b - a < nn - 1
                    && (-2..=2).any(|k| {
                        let (c, d) = (c + k * nn, d + k * nn);
                        a < c && c <= b && b < d
                    })
            };
            !hit(a, b, c, d) && !hit(c, d, a, b)
        }
    }
}

/// Summands of the sτ-tilting module of an affine arc torsion class.
pub fn stau_tilting(d: &ArcSet) -> Result<Vec<Brick>> {
    if !is_closed(d, Variant::Affine) || d.has_imaginary() {
        return Err(Error::NotClosed);
    }
    let nn = d.n() as i64;
    Ok(d
        .iter()
        .filter(|&g| {
            let (a, b) = (g.a, g.b);
            // No a < b' <= b < c < a + n with (b', c) in D.
            !(a + 1..=b).any(|bp| (b + 1..a + nn).any(|c| d.contains_pair(bp, c)))
        })
        .collect())
}

pub fn triangulation(d: &ArcSet) -> Result<Vec<TaggedArc>> {
    let n = d.n();
    let nn = n as i64;
    let mut out: Vec<TaggedArc> = stau_tilting(d)?.into_iter().map(|g| TaggedArc::Plain { a: g.a, b: g.b }).collect();
    for a in 1..=nn {
        let covered = d.iter().any(|g| (-2..=2).any(|k| g.a + k * nn <= a && a < g.b + k * nn));
        if !covered {
            out.push(TaggedArc::Notched { a });
        }
    }
    out.sort();
    Ok(out)
}

/// Triangulation of a real tree's torsion class.
pub fn triangulation_of_tree(t: &Tibit) -> Result<Vec<TaggedArc>> {
    triangulation(&torsion_arcs(&t.post_order(), Variant::Affine)?)
}

/// Integer vector in the `ϖ` basis; coordinate `i - 1` belongs to `ϖ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GVector(pub Vec<i64>);

impl GVector {
    fn zero(n: usize) -> GVector {
        GVector(vec![0; n])
    }

    fn add(mut self, i: i64, v: i64) -> GVector {
        let n = self.0.len();
        self.0[(rep(i, n) - 1) as usize] += v;
        self
    }

    /// `ϖ_a - ϖ_b`, `ϖ_a` or `-ϖ_b`.
    pub fn varpi(a: Option<i64>, b: Option<i64>, n: usize) -> GVector {
        let mut g = GVector::zero(n);
        if let Some(a) = a {
            g = g.add(a, 1);
        }
        if let Some(b) = b {
            g = g.add(b, -1);
        }
        g
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}w{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn g_vector(x: TaggedArc, n: usize) -> GVector {
    let nn = n as i64;
    match x {
        TaggedArc::Plain { a, b } if b - a < nn - 1 => GVector::varpi(Some(a), Some(b), n),
        TaggedArc::Plain { a, .. } => GVector::varpi(Some(a), None, n),
        TaggedArc::Notched { a } => GVector::varpi(None, Some(a), n),
    }
}

// `ẽ_a - ẽ_b` in the basis `ẽ_i - ẽ_{i+1}`, for a < b.
fn dim_vector(a: i64, b: i64, n: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    for i in a..b {
        v[(rep(i, n) - 1) as usize] += 1;
    }
    v
}

/// Columns of the c-matrix of a real tree: lower walls of `⊑_T`, then upper walls of
/// `⊑^{π↑spine(T)}` with reversed sign.
pub fn c_matrix(t: &Tibit) -> Result<Vec<Vec<i64>>> {
    if !t.is_real() {
        return Err(Error::Invariant("c-matrix needs a real tree".into()));
    }
    let n = t.n();
    let mut cols: Vec<Vec<i64>> = t.post_order().lower_walls().into_iter().map(|r| dim_vector(r.a, r.b, n)).collect();
    for r in t.pispine_up().reverse_post_order().upper_walls() {
        cols.push(dim_vector(r.a, r.b, n).into_iter().map(|x| -x).collect());
    }
    if cols.len() != n {
        return Err(Error::Invariant(format!("{} walls instead of {n}", cols.len())));
    }
    Ok(cols)
}

/// Determinant and inverse by exact elimination; `m` is given by columns.
pub fn det_and_inverse(cols: &[Vec<i64>]) -> Result<(Ratio<i64>, Vec<Vec<Ratio<i64>>>)> {
    let n = cols.len();
    // a[i][j] = row i, column j.
    let mut a: Vec<Vec<Ratio<i64>>> = (0..n).map(|i| (0..n).map(|j| Ratio::from_integer(cols[j][i])).collect()).collect();
    let mut inv: Vec<Vec<Ratio<i64>>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }).collect()).collect();
    let mut det = Ratio::one();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or_else(|| Error::Invariant("singular c-matrix".into()))?;
        if p != c {
            a.swap(p, c);
            inv.swap(p, c);
            det = -det;
        }
        let piv = a[c][c];
        det *= piv;
        for j in 0..n {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for j in 0..n {
                    let (x, y) = (a[c][j], inv[c][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Ok((det, inv))
}

/// Columns of `(C⁻¹)ᵀ`, each a g-vector.
pub fn g_from_cmatrix(t: &Tibit) -> Result<BTreeSet<GVector>> {
    let (det, inv) = det_and_inverse(&c_matrix(t)?)?;
    if det.abs() != Ratio::one() {
        return Err(Error::Invariant(format!("c-matrix determinant {det}")));
    }
    // Column j of the inverse transpose is row j of the inverse.
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::Invariant("fractional inverse".into())) })
                .collect::<Result<Vec<_>>>()
                .map(GVector)
        })
        .collect()
}

/// `ϖ_{T,z}`, read off the principal ideal below `v_z`.
pub fn varpi_tz(t: &Tibit, z: i64) -> GVector {
    let n = t.n();
    let w = 3 * n as i64;
    let inside: Vec<i64> = (z - w..=z + w).filter(|&x| t.is_descendant(x, z)).collect();
    let lo_open = inside.first() == Some(&(z - w));
    let hi_open = inside.last() == Some(&(z + w));
    match (lo_open, hi_open) {
        // An ideal of length n - 1 is the radial arc at its left end.
        (false, false) if *inside.last().unwrap() - inside[0] + 1 == n as i64 - 1 => GVector::varpi(Some(inside[0] - 1), None, n),
        (false, false) => GVector::varpi(Some(inside[0] - 1), Some(*inside.last().unwrap()), n),
        (false, true) => GVector::varpi(Some(inside[0] - 1), None, n),
        (true, false) => GVector::varpi(None, Some(*inside.last().unwrap()), n),
        (true, true) => unreachable!("a principal ideal is never all of Z"),
    }
}

/// A stability parameter `θ = Σ θ_i ϖ_i` with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaVector(pub Vec<i64>);

impl ThetaVector {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `θ(i) = ⟨θ, ẽ_i - ẽ_0⟩`, so that `θ(i) - θ(i+1) = θ_{i mod n}`.
    pub fn at(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let total: i64 = self.0.iter().sum();
        let (q, r) = (i.div_euclid(n), i.rem_euclid(n));
        let partial: i64 = (0..r).map(|k| self.coord(k)).sum();
        -q * total - partial
    }

    fn coord(&self, i: i64) -> i64 {
        self.0[(rep(i, self.n()) - 1) as usize]
    }

    /// `⟨θ, M_{a,b}⟩`.
    pub fn pair(&self, x: Brick) -> i64 {
        self.at(x.a) - self.at(x.b)
    }

    /// The parameter with `θ(i) = f(i)`; `f` must vanish at 0 and have constant period drop.
    pub fn from_fn(n: usize, f: impl Fn(i64) -> i64) -> ThetaVector {
        ThetaVector((1..=n as i64).map(|i| f(i) - f(i + 1)).collect())
    }

    /// All `θ(i)` distinct.
    pub fn is_regular(&self) -> bool {
        let n = self.n() as i64;
        let s: i64 = self.0.iter().sum();
        if s == 0 {
            return false;
        }
        (1..=n).all(|i| (i + 1..=n).all(|j| (self.at(i) - self.at(j)) % s != 0))
    }
}

/// `θ(i) <= θ(j)` whenever `v_i` lies below `v_j`.
pub fn theta_compatible(theta: &ThetaVector, t: &Tibit) -> bool {
    let n = t.n() as i64;
    (1..=n).all(|i| {
        (i - n..=i + n).all(|j| {
            let below = t.is_descendant(i, j);
            let above = t.is_descendant(j, i);
            (!below || theta.at(i) <= theta.at(j)) && (!above || theta.at(j) <= theta.at(i))
        })
    })
}

/// `{γ_{a,b} : b - a < n, θ(a) > θ(b') for all a < b' <= b}` for regular `θ`.
pub fn torsion_from_theta(theta: &ThetaVector) -> Result<ArcSet> {
    if !theta.is_regular() {
        return Err(Error::Invariant("torsion_from_theta needs a regular parameter".into()));
    }
    let n = theta.n();
    let nn = n as i64;
    let mut out = ArcSet::empty(n);
    for a in 1..=nn {
        for b in a + 1..a + nn {
            if (a + 1..=b).all(|bp| theta.at(a) > theta.at(bp)) {
                out.insert(ReflectionIndex::new(a, b, n));
            }
        }
    }
    Ok(out)
}

/// A regular `θ` compatible with `t`, read off a one-block linear extension.
pub fn make_regular_theta(t: &Tibit) -> Result<ThetaVector> {
    let n = t.n();
    let (order, eps) = if t.spine_sign() > 0 { (t.post_order(), 1) } else { (t.reverse_post_order().psi_reverse(), -1) };
    if order.blocks().len() == 1 {
        let pos = |i: i64| order.position(i).1;
        let theta = ThetaVector::from_fn(n, |i| eps * (pos(i) - pos(0)));
        if theta.is_regular() && theta_compatible(&theta, t) {
            return Ok(theta);
        }
    }
    search_theta(t, 0x5eed, 200_000)
}

fn search_theta(t: &Tibit, seed: u64, budget: usize) -> Result<ThetaVector> {
    let n = t.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 4 * n as i64 * n as i64;
    for _ in 0..budget {
        let theta = ThetaVector((0..n).map(|_| rng.gen_range(-span..=span)).collect());
        if theta.is_regular() && theta_compatible(&theta, t) {
            return Ok(theta);
        }
    }
    Err(Error::ThetaSearch)
}

/// Up to `count` regular parameters compatible with `t`: positive combinations of the
/// triangulation's g-vectors plus a scaled one-block parameter.
pub fn sample_regular_thetas(t: &Tibit, count: usize, seed: u64) -> Result<Vec<ThetaVector>> {
    let n = t.n();
    let base = make_regular_theta(t)?;
    let rays: Vec<GVector> = triangulation_of_tree(t)?.into_iter().map(|x| g_vector(x, n)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![base.clone()];
    let mut tries = 0;
    while out.len() < count && tries < 100 * count {
        tries += 1;
        let mut v: Vec<i64> = base.0.iter().map(|x| x * rng.gen_range(1..4)).collect();
        for g in &rays {
            let c = rng.gen_range(0..4 * n as i64);
            for (vi, gi) in v.iter_mut().zip(&g.0) {
                *vi += c * gi;
            }
        }
        let th = ThetaVector(v);
        if th.is_regular() && theta_compatible(&th, t) && !out.contains(&th) {
            out.push(th);
        }
    }
    Ok(out)
}
