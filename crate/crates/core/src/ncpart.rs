//! Noncrossing partitions of types A and B, translation-invariant noncrossing partitions of
//! the integers (TINCPs), the Kreweras complement, and the q-Catalan polynomials behind the
//! cyclic sieving statements for rowmotion.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::rep;
use crate::tibit::Tibit;
use crate::tito::Tito;

/// A noncrossing set partition of `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

fn blocks_cross(blocks: &[Vec<usize>], ground: usize) -> bool {
    let mut label = vec![0; ground + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            label[x] = i;
        }
    }
    // a < b < c < d with a ~ c and b ~ d forces a ~ b.
    for a in 1..=ground {
        for b in a + 1..=ground {
            if label[a] == label[b] {
                continue;
            }
            for c in b + 1..=ground {
                if label[c] != label[a] {
                    continue;
                }
                if (c + 1..=ground).any(|d| label[d] == label[b]) {
                    return true;
                }
            }
        }
    }
    false
}

impl NcPartition {
    pub fn new(ground: usize, blocks: Vec<Vec<usize>>) -> Result<NcPartition> {
        let mut seen = vec![false; ground + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > ground || seen[x] {
                return Err(Error::Invariant(format!("{x} is not a fresh element of 1..={ground}")));
            }
            seen[x] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Invariant("blocks do not cover the ground set".into()));
        }
        if blocks_cross(&blocks, ground) {
            return Err(Error::CrossingPartition);
        }
        Ok(NcPartition::normalized(ground, blocks))
    }

    fn normalized(ground: usize, blocks: Vec<Vec<usize>>) -> NcPartition {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        NcPartition { ground, blocks }
    }

    fn from_perm(perm: &[usize]) -> NcPartition {
        let ground = perm.len() - 1;
        let mut seen = vec![false; ground + 1];
        let mut blocks = Vec::new();
        for s in 1..=ground {
            let mut b = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                b.push(x);
                x = perm[x];
            }
            if !b.is_empty() {
                blocks.push(b);
            }
        }
        NcPartition::normalized(ground, blocks)
    }

    // Each block as a cycle, increasing and wrapping back to its minimum. Index 0 unused.
    fn perm(&self) -> Vec<usize> {
        let mut p = vec![0; self.ground + 1];
        for b in &self.blocks {
            for (i, &x) in b.iter().enumerate() {
                p[x] = b[(i + 1) % b.len()];
            }
        }
        p
    }

    pub fn singletons(ground: usize) -> NcPartition {
        NcPartition::normalized(ground, (1..=ground).map(|x| vec![x]).collect())
    }

    pub fn full(ground: usize) -> NcPartition {
        NcPartition::normalized(ground, vec![(1..=ground).collect()])
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(&i) && b.contains(&j))
    }

    pub fn is_type_b(&self) -> bool {
        if self.ground % 2 == 1 {
            return false;
        }
        self.rotate(self.ground as i64 / 2) == *self
    }

    /// Every element moves from `i` to `i + k` (cyclically).
    pub fn rotate(&self, k: i64) -> NcPartition {
        let g = self.ground as i64;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| ((x as i64 - 1 + k).rem_euclid(g) + 1) as usize).collect())
            .collect();
        NcPartition::normalized(self.ground, blocks)
    }

    /// The Kreweras complement, as the cycles of `σ⁻¹ ∘ c` where `c(i) = i + 1`.
    pub fn kreweras(&self) -> NcPartition {
        let s = self.perm();
        let mut inv = vec![0; self.ground + 1];
        for x in 1..=self.ground {
            inv[s[x]] = x;
        }
        let k: Vec<usize> = (0..=self.ground).map(|x| if x == 0 { 0 } else { inv[x % self.ground + 1] }).collect();
        NcPartition::from_perm(&k)
    }

    pub fn kreweras_inv(&self) -> NcPartition {
        let t = self.perm();
        let mut inv = vec![0; self.ground + 1];
        for x in 1..=self.ground {
            inv[t[x]] = x;
        }
        let s: Vec<usize> = (0..=self.ground).map(|x| if x == 0 { 0 } else { inv[x] % self.ground + 1 }).collect();
        NcPartition::from_perm(&s)
    }

    /// All noncrossing partitions of `1..=ground`.
    pub fn all(ground: usize) -> Vec<NcPartition> {
        let elems: Vec<usize> = (1..=ground).collect();
        nc_of(&elems).into_iter().map(|bs| NcPartition::normalized(ground, bs)).collect()
    }
}

// The block of the first element is any subset containing it; the gaps it leaves are
// filled independently.
fn nc_of(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let rest = &elems[1..];
    let mut out = Vec::new();
    for mask in 0u32..1 << rest.len() {
        let mut block = vec![elems[0]];
        let mut gaps: Vec<Vec<usize>> = vec![Vec::new()];
        for (i, &x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(x);
                gaps.push(Vec::new());
            } else {
                gaps.last_mut().unwrap().push(x);
            }
        }
        let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for g in &gaps {
            let subs = nc_of(g);
            acc = acc
                .iter()
                .flat_map(|a| {
                    subs.iter().map(move |s| {
                        let mut v = a.clone();
                        v.extend(s.iter().cloned());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A translation-invariant noncrossing partition of the integers.
///
/// Finite blocks have span `< n` and are stored once per translation class, shifted so their
/// minimum lies in `1..=n`. There is at most one infinite block; it is a union of residue
/// classes and is stored by those residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tincp {
    n: usize,
    infinite: Vec<i64>,
    finite: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiClass {
    /// No infinite block, and `i ~ i + n - 1`, with `i` in `0..n`.
    Xi(usize),
    /// Some residue class `i₀ + nZ` is a block.
    XiPrime,
    Neither,
}

impl Tincp {
    pub fn singletons(n: usize) -> Tincp {
        Tincp { n, infinite: Vec::new(), finite: (1..=n as i64).map(|x| vec![x]).collect() }
    }

    /// The finest TINCP relating every given pair (and their translates).
    pub fn from_relations(n: usize, pairs: impl IntoIterator<Item = (i64, i64)>) -> Result<Tincp> {
        let nn = n as i64;
        // Weighted union-find on residues: (r, 0) ~ (root, pot[r]) in (residue, period) terms.
        let mut parent: Vec<usize> = (0..n).collect();
        let mut pot = vec![0i64; n];
        let mut cyclic = vec![false; n];
        fn find(parent: &mut [usize], pot: &mut [i64], x: usize) -> (usize, i64) {
            if parent[x] == x {
                return (x, 0);
            }
            let (r, p) = find(parent, pot, parent[x]);
            parent[x] = r;
            pot[x] += p;
            (r, pot[x])
        }
        for (a, b) in pairs {
            let (ra, ka) = ((rep(a, n) - 1) as usize, (a - rep(a, n)) / nn);
            let (rb, kb) = ((rep(b, n) - 1) as usize, (b - rep(b, n)) / nn);
            let (root_a, pa) = find(&mut parent, &mut pot, ra);
            let (root_b, pb) = find(&mut parent, &mut pot, rb);
            if root_a == root_b {
                if pa + ka != pb + kb {
                    cyclic[root_a] = true;
                }
            } else {
                parent[root_a] = root_b;
                pot[root_a] = pb + kb - pa - ka;
                cyclic[root_b] |= cyclic[root_a];
            }
        }
        let mut comps: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for r in 0..n {
            let (root, p) = find(&mut parent, &mut pot, r);
            comps.entry(root).or_default().push(r as i64 + 1 - p * nn);
        }
        let mut infinite = Vec::new();
        let mut finite = Vec::new();
        for (root, mut elems) in comps {
            if cyclic[root] {
                if !infinite.is_empty() {
                    return Err(Error::CrossingPartition);
                }
                infinite = elems.iter().map(|&x| rep(x, n)).collect();
                infinite.sort_unstable();
            } else {
                elems.sort_unstable();
                let shift = elems[0] - rep(elems[0], n);
                finite.push(elems.iter().map(|x| x - shift).collect::<Vec<_>>());
            }
        }
        finite.sort();
        let t = Tincp { n, infinite, finite };
        if t.finite.iter().any(|b| b[b.len() - 1] - b[0] >= nn) || !t.is_noncrossing() {
            return Err(Error::CrossingPartition);
        }
        Ok(t)
    }

    fn relations(&self) -> Vec<(i64, i64)> {
        let nn = self.n as i64;
        let mut out: Vec<(i64, i64)> = self.finite.iter().flat_map(|b| b.windows(2).map(|w| (w[0], w[1]))).collect();
        if let Some(&s) = self.infinite.first() {
            out.push((s, s + nn));
            out.extend(self.infinite.windows(2).map(|w| (w[0], w[1])));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn infinite_residues(&self) -> &[i64] {
        &self.infinite
    }

    pub fn finite_shapes(&self) -> &[Vec<i64>] {
        &self.finite
    }

    /// Block identifier of `a`: `None` for the infinite block, else the block's minimum.
    pub fn block_key(&self, a: i64) -> Option<i64> {
        let r = rep(a, self.n);
        if self.infinite.contains(&r) {
            return None;
        }
        let nn = self.n as i64;
        for b in &self.finite {
            if let Some(&e) = b.iter().find(|&&e| rep(e, self.n) == r) {
                return Some(b[0] + (a - e) / nn * nn);
            }
        }
        unreachable!("every residue lies in some block")
    }

    pub fn same_block(&self, a: i64, b: i64) -> bool {
        self.block_key(a) == self.block_key(b)
    }

    pub fn has_infinite_block(&self) -> bool {
        !self.infinite.is_empty()
    }

    // Quadruple condition on four periods.
    fn is_noncrossing(&self) -> bool {
        let w: Vec<Option<i64>> = (1..=4 * self.n as i64).map(|a| self.block_key(a)).collect();
        let m = w.len();
        for a in 0..m {
            for b in a + 1..m {
                if w[a] == w[b] {
                    continue;
                }
                for c in b + 1..m {
                    if w[c] == w[a] && (c + 1..m).any(|d| w[d] == w[b]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every block moved by `k`.
    pub fn shift(&self, k: i64) -> Tincp {
        let pairs: Vec<_> = self.relations().into_iter().map(|(a, b)| (a + k, b + k)).collect();
        Tincp::from_relations(self.n, pairs).expect("translates stay noncrossing")
    }

    /// `ℛ`: reduce every block modulo `2n`.
    pub fn reduce_mod_2n(&self) -> NcPartition {
        let n = self.n as i64;
        let m = 2 * n;
        let pos = |x: i64| ((x - 1).rem_euclid(m) + 1) as usize;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        if !self.infinite.is_empty() {
            blocks.push((1..=m).filter(|&x| self.infinite.contains(&rep(x, self.n))).map(|x| x as usize).collect());
        }
        for b in &self.finite {
            blocks.push(b.iter().map(|&x| pos(x)).collect());
            blocks.push(b.iter().map(|&x| pos(x + n)).collect());
        }
        NcPartition::normalized(2 * self.n, blocks)
    }

    /// Inverse of `ℛ`. Symmetric blocks lift to the infinite block; each asymmetric block
    /// lifts to its lift of least span.
    pub fn unreduce(p: &NcPartition) -> Result<Tincp> {
        if !p.is_type_b() {
            return Err(Error::NotTypeB);
        }
        let n = p.ground() / 2;
        let m = p.ground() as i64;
        let mut pairs = Vec::new();
        for b in p.blocks() {
            let set: BTreeSet<usize> = b.iter().map(|&x| (x - 1 + n) % (2 * n) + 1).collect();
            let y: Vec<i64> = b.iter().map(|&x| x as i64).collect();
            if set.iter().copied().eq(b.iter().copied()) {
                pairs.push((y[0], y[0] + n as i64));
                pairs.extend(y.windows(2).map(|w| (w[0], w[1])));
                continue;
            }
            // Start after the widest cyclic gap.
            let k = y.len();
            let start = (0..k)
                .max_by_key(|&i| {
                    let prev = y[(i + k - 1) % k];
                    (y[i] - prev).rem_euclid(m)
                })
                .unwrap();
            let lifted: Vec<i64> = (0..k)
                .map(|j| {
                    let v = y[(start + j) % k];
                    if start + j >= k {
                        v + m
                    } else {
                        v
                    }
                })
                .collect();
            if lifted[k - 1] - lifted[0] >= n as i64 {
                return Err(Error::Invariant(format!("asymmetric block {b:?} spans a full period")));
            }
            pairs.extend(lifted.windows(2).map(|w| (w[0], w[1])));
        }
        Tincp::from_relations(n, pairs)
    }

    /// Kreweras complement, routed through type B.
    pub fn kreweras(&self) -> Tincp {
        Tincp::unreduce(&self.reduce_mod_2n().kreweras()).expect("Kreweras preserves type B")
    }

    pub fn kreweras_inv(&self) -> Tincp {
        Tincp::unreduce(&self.reduce_mod_2n().kreweras_inv()).expect("Kreweras preserves type B")
    }

    /// `π↓_NC`: a periodic singleton-residue block is dissolved, each `i₀ + kn` joining the block
    /// of `i₀ + (k+1)n - 1`.
    pub fn pi_nc_down(&self) -> Tincp {
        if self.infinite.len() != 1 {
            return self.clone();
        }
        let i0 = self.infinite[0];
        let mut pairs: Vec<_> = self.finite.iter().flat_map(|b| b.windows(2).map(|w| (w[0], w[1]))).collect();
        pairs.push((i0, i0 + self.n as i64 - 1));
        Tincp::from_relations(self.n, pairs).expect("dissolving a periodic block stays noncrossing")
    }

    pub fn xi_class(&self) -> XiClass {
        if self.infinite.len() == 1 {
            return XiClass::XiPrime;
        }
        if self.has_infinite_block() {
            return XiClass::Neither;
        }
        let nn = self.n as i64;
        (0..nn).find(|&i| self.same_block(i, i + nn - 1)).map_or(XiClass::Neither, |i| XiClass::Xi(i as usize))
    }

    /// `β`: restriction of a member of `Ξ₀` to `1..n-1`.
    pub fn beta(&self) -> Result<NcPartition> {
        if self.xi_class() != XiClass::Xi(0) {
            return Err(Error::Invariant("beta is defined on the class with 0 ~ n-1".into()));
        }
        let g = self.n - 1;
        let mut groups: BTreeMap<Option<i64>, Vec<usize>> = BTreeMap::new();
        for x in 1..=g {
            groups.entry(self.block_key(x as i64)).or_default().push(x);
        }
        NcPartition::new(g, groups.into_values().collect())
    }

    /// All TINCPs with period `n`, as unreductions of the type-B partitions.
    pub fn all(n: usize) -> Vec<Tincp> {
        NcPartition::all(2 * n).iter().filter(|p| p.is_type_b()).map(|p| Tincp::unreduce(p).unwrap()).collect()
    }
}

impl fmt::Display for Tincp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |b: &[i64]| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if !self.infinite.is_empty() {
            parts.push(format!("{{{}}}+{}Z", join(&self.infinite), self.n));
        }
        parts.extend(self.finite.iter().map(|b| format!("{{{}}}", join(b))));
        f.write_str(&parts.join(" "))
    }
}

/// `𝒫`: the TINCP generated by the arcs of a 312-avoiding order.
pub fn tincp_of(t: &Tito) -> Result<Tincp> {
    let d = crate::arcdiag::arc_diagram(t)?;
    Tincp::from_relations(t.n(), d.pairs())
}

/// `𝒫` on trees: every right child joins its parent's block.
pub fn tincp_of_tree(t: &Tibit) -> Tincp {
    Tincp::from_relations(t.n(), t.right_edges().pairs()).expect("right edges are noncrossing")
}

/// Integer polynomial in `q`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> QPoly {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        QPoly(coeffs)
    }

    pub fn constant(c: i64) -> QPoly {
        QPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `p(q^k)`.
    pub fn subst_pow(&self, k: usize) -> QPoly {
        let mut c = vec![0; self.degree() * k + 1];
        for (i, &a) in self.0.iter().enumerate() {
            c[i * k] = a;
        }
        QPoly::new(c)
    }

    /// Exact division; a nonzero remainder is an invariant breach.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let lead = *d.0.last().unwrap();
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return if r.iter().all(|&c| c == 0) {
                Ok(QPoly::constant(0))
            } else {
                Err(Error::Invariant("nonzero remainder".into()))
            };
        }
        let mut quo = vec![0; r.len() - d.0.len() + 1];
        for i in (0..quo.len()).rev() {
            let c = r[i + d.0.len() - 1];
            if c % lead != 0 {
                return Err(Error::Invariant("non-integral quotient".into()));
            }
            quo[i] = c / lead;
            for (j, &dj) in d.0.iter().enumerate() {
                r[i + j] -= quo[i] * dj;
            }
        }
        if r.iter().any(|&c| c != 0) {
            return Err(Error::Invariant("nonzero remainder".into()));
        }
        Ok(QPoly::new(quo))
    }

    /// `p(ζ^k)` for `ζ = exp(2πi/ω)`, with exponents bucketed mod `ω` first.
    pub fn eval_root(&self, k: usize, omega: usize) -> (f64, f64) {
        let mut buckets = vec![0i64; omega];
        for (e, &c) in self.0.iter().enumerate() {
            buckets[(e * k) % omega] += c;
        }
        let step = 2.0 * std::f64::consts::PI / omega as f64;
        buckets.iter().enumerate().fold((0.0, 0.0), |(re, im), (e, &c)| {
            let a = step * e as f64;
            (re + c as f64 * a.cos(), im + c as f64 * a.sin())
        })
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let mut c = vec![0; self.0.len().max(o.0.len())];
        for (i, &a) in self.0.iter().enumerate() {
            c[i] += a;
        }
        for (i, &a) in o.0.iter().enumerate() {
            c[i] += a;
        }
        QPoly::new(c)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let neg = QPoly::new(o.0.iter().map(|c| -c).collect());
        self + &neg
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| match e {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{e}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `[m]_{q^step} = 1 + q^step + ... + q^{step(m-1)}`.
pub fn q_int(m: usize, step: usize) -> QPoly {
    let mut c = vec![0; step * m.saturating_sub(1) + 1];
    for i in 0..m {
        c[i * step] = 1;
    }
    QPoly::new(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanKind {
    A,
    B,
}

/// `Cat_{A_m}(q)` or `Cat_{B_m}(q)`. `Cat_{A_0} = 1`.
pub fn q_catalan(kind: CatalanKind, m: usize) -> Result<QPoly> {
    let (num, den): (Vec<QPoly>, Vec<QPoly>) = match kind {
        CatalanKind::A => (1..=m).map(|i| (q_int(m + i + 2, 1), q_int(i + 1, 1))).unzip(),
        CatalanKind::B => (1..=m).map(|i| (q_int(2 * m + 2 * i, 1), q_int(2 * i, 1))).unzip(),
    };
    let top = num.iter().fold(QPoly::constant(1), |acc, p| &acc * p);
    den.iter().try_fold(top, |acc, d| acc.div_exact(d))
}

fn epsilon(n: usize) -> usize {
    if n % 2 == 1 {
        1
    } else {
        2
    }
}

/// The sieving polynomial for rowmotion on the affine lattice.
pub fn atam_sieve_poly(n: usize) -> Result<QPoly> {
    let cat_b = q_catalan(CatalanKind::B, n)?.subst_pow(n - 1);
    let cat_a = q_catalan(CatalanKind::A, n - 2)?;
    let middle = &q_int(2 * n, 2 * (n - 1)) * &QPoly::constant(cat_a.at_one());
    let last = &q_int(n, 4 * (n - 1)) * &cat_a.subst_pow(2 * epsilon(n));
    Ok(&(&cat_b - &middle) + &last)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CspRow {
    pub k: usize,
    pub fixed: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CspReport {
    pub omega: usize,
    pub rows: Vec<CspRow>,
    pub pass: bool,
}

/// Checks `|Fix(g^k)| = F(ζ^k)` for every `k < ω`, where `g` acts on `0..size` by `op`.
pub fn csp_verify(size: usize, op: impl Fn(usize) -> usize, omega: usize, f: &QPoly) -> Result<CspReport> {
    let img: Vec<usize> = (0..size).map(&op).collect();
    let mut pow: Vec<usize> = (0..size).collect();
    let mut fixed = Vec::with_capacity(omega);
    for _ in 0..omega {
        fixed.push(pow.iter().enumerate().filter(|&(x, &y)| x == y).count());
        pow = pow.iter().map(|&x| img[x]).collect();
    }
    if pow.iter().enumerate().any(|(x, &y)| x != y) {
        return Err(Error::Period(omega));
    }
    let mut pass = true;
    let rows = fixed
        .into_iter()
        .enumerate()
        .map(|(k, fixed)| {
            let (value, im) = f.eval_root(k, omega);
            pass &= (value - fixed as f64).abs() < 1e-6 && im.abs() < 1e-6;
            CspRow { k, fixed, value }
        })
        .collect();
    Ok(CspReport { omega, rows, pass })
}
