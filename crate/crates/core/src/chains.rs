//! Maximal chains: length spectra of the cover DAG, the ornamentation model of the affine
//! lattice, and an explicit longest chain.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arcdiag::{torsion_arcs, ArcSet, Variant};
use crate::lattice::LatticeModel;
use crate::tito::ReflectionIndex;
use crate::{check_n, Error, Result};

/// Lengths of bottom-to-top cover paths, with the number of paths of each length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpectrum {
    pub counts: BTreeMap<usize, BigUint>,
}

impl ChainSpectrum {
    pub fn lengths(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    pub fn min(&self) -> usize {
        *self.counts.keys().next().expect("a lattice has at least one maximal chain")
    }

    pub fn max(&self) -> usize {
        *self.counts.keys().next_back().expect("a lattice has at least one maximal chain")
    }

    /// No gaps between the shortest and longest chain.
    pub fn is_interval(&self) -> bool {
        self.counts.len() == self.max() - self.min() + 1
    }

    pub fn count(&self, len: usize) -> BigUint {
        self.counts.get(&len).cloned().unwrap_or_default()
    }
}

impl fmt::Display for ChainSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn length_spectrum(l: &LatticeModel) -> ChainSpectrum {
    let len = l.len();
    // Element indices form a linear extension, so one forward sweep suffices.
    let mut bits = vec![0u64; len];
    let mut counts: Vec<BTreeMap<usize, BigUint>> = vec![BTreeMap::new(); len];
    bits[l.bottom()] = 1;
    counts[l.bottom()].insert(0, BigUint::one());
    for v in 0..len {
        let (b, c) = (bits[v], std::mem::take(&mut counts[v]));
        for &w in l.up_covers(v) {
            debug_assert!(w > v);
            bits[w] |= b << 1;
            for (k, x) in &c {
                *counts[w].entry(k + 1).or_insert_with(BigUint::zero) += x;
            }
        }
        counts[v] = c;
    }
    let top = &counts[l.top()];
    debug_assert_eq!(bits[l.top()].count_ones() as usize, top.len());
    ChainSpectrum { counts: top.clone() }
}

/// Affine lengths shifted by one are exactly the cyclic lengths.
pub fn shift_check(lc: &LatticeModel, la: &LatticeModel) -> bool {
    let c = length_spectrum(lc).lengths();
    let a: Vec<usize> = length_spectrum(la).lengths().into_iter().map(|k| k + 1).collect();
    lc.n == la.n && c == a
}

/// Number of maximal chains of minimum length.
pub fn min_chain_count(l: &LatticeModel) -> BigUint {
    let s = length_spectrum(l);
    s.count(s.min())
}

/// Minimum-chain count of the affine lattice set against `n!`. Never asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub count: BigUint,
    pub factorial: BigUint,
}

impl ConjectureReport {
    pub fn matches(&self) -> bool {
        self.count == self.factorial
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.matches() { "matches" } else { "differs from" };
        write!(f, "n={}: {} shortest maximal chains, {} {}!={}", self.n, self.count, verdict, self.n, self.factorial)
    }
}

pub fn conjecture_report(la: &LatticeModel) -> ConjectureReport {
    let factorial = (1..=la.n).map(BigUint::from).product();
    ConjectureReport { n: la.n, count: min_chain_count(la), factorial }
}

/// `ϱ(i)` is the cyclic interval `{i, i+1, ..., i+len[i]-1}`; `len[i] = n` is the whole cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ornamentation {
    len: Vec<usize>,
}

impl Ornamentation {
    /// `lens[i-1]` is the size of the ornament at residue `i`.
    pub fn new(lens: Vec<usize>) -> Result<Ornamentation> {
        let n = lens.len();
        check_n(n)?;
        if let Some(i) = lens.iter().position(|&l| l == 0 || l > n) {
            return Err(Error::Ornamentation(format!("ornament at {} has size {}, not in 1..={n}", i + 1, lens[i])));
        }
        let o = Ornamentation { len: lens };
        for j in 1..=n as i64 {
            for i in 1..=n as i64 {
                if o.contains(j, i) && !o.nested(i, j) {
                    return Err(Error::Ornamentation(format!("{i} lies in the ornament at {j} but its own ornament is not inside it")));
                }
            }
        }
        Ok(o)
    }

    /// Build from explicit residue sets; each must be a cyclic interval hung at its index.
    pub fn from_sets(sets: &[Vec<i64>]) -> Result<Ornamentation> {
        let n = sets.len() as i64;
        let mut lens = Vec::with_capacity(sets.len());
        for (k, s) in sets.iter().enumerate() {
            let i = k as i64 + 1;
            let mut want: Vec<i64> = (0..s.len() as i64).map(|d| crate::rep(i + d, n as usize)).collect();
            let mut got: Vec<i64> = s.iter().map(|&x| crate::rep(x, n as usize)).collect();
            want.sort_unstable();
            got.sort_unstable();
            got.dedup();
            if s.is_empty() || got != want {
                return Err(Error::Ornamentation(format!("ornament at {i} is not an interval hung at {i}")));
            }
            lens.push(s.len());
        }
        Ornamentation::new(lens)
    }

    pub fn bottom(n: usize) -> Ornamentation {
        Ornamentation { len: vec![1; n] }
    }

    pub fn top(n: usize) -> Ornamentation {
        Ornamentation { len: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.len.len()
    }

    pub fn lens(&self) -> &[usize] {
        &self.len
    }

    /// Members of `ϱ(i)` as residues, starting from `i`.
    pub fn ornament(&self, i: i64) -> Vec<i64> {
        let n = self.n();
        let i = crate::rep(i, n);
        (0..self.len[(i - 1) as usize] as i64).map(|d| crate::rep(i + d, n)).collect()
    }

    fn size(&self, i: i64) -> usize {
        self.len[(crate::rep(i, self.n()) - 1) as usize]
    }

    /// `i ∈ ϱ(j)`.
    pub fn contains(&self, j: i64, i: i64) -> bool {
        ((i - j).rem_euclid(self.n() as i64) as usize) < self.size(j)
    }

    // ϱ(i) ⊆ ϱ(j), given i ∈ ϱ(j).
    fn nested(&self, i: i64, j: i64) -> bool {
        let n = self.n();
        self.size(j) == n || (i - j).rem_euclid(n as i64) as usize + self.size(i) <= self.size(j)
    }

    pub fn leq(&self, other: &Ornamentation) -> bool {
        self.n() == other.n() && self.len.iter().zip(&other.len).all(|(a, b)| a <= b)
    }

    /// Cover relation of the containment order.
    pub fn covered_by(&self, other: &Ornamentation) -> bool {
        if !self.leq(other) || self == other {
            return false;
        }
        // Anything strictly between lies in the box of coordinatewise sizes.
        let mut cur = self.len.clone();
        loop {
            let mut k = 0;
            while k < cur.len() && cur[k] == other.len[k] {
                cur[k] = self.len[k];
                k += 1;
            }
            if k == cur.len() {
                return true;
            }
            cur[k] += 1;
            if cur != other.len && Ornamentation::new(cur.clone()).is_ok() {
                return false;
            }
        }
    }

    /// The affine arc torsion class `{γ_{i,j} : j ∈ ϱ(i), j ≠ i}` with `j` taken in `(i, i+n)`.
    pub fn to_arcs(&self) -> ArcSet {
        let n = self.n();
        ArcSet::from_indices(
            n,
            (1..=n as i64).flat_map(|i| (1..self.size(i) as i64).map(move |d| ReflectionIndex::new(i, i + d, n))),
        )
    }
}

impl fmt::Display for Ornamentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let parts: Vec<String> = (1..=n as i64)
            .map(|i| {
                if self.size(i) == n {
                    "Z".to_string()
                } else {
                    let v: Vec<String> = self.ornament(i).iter().map(|x| x.to_string()).collect();
                    format!("{{{}}}", v.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

pub fn orn_to_arcs(o: &Ornamentation) -> ArcSet {
    o.to_arcs()
}

/// Every ornamentation, in lexicographic order of sizes.
pub fn ornamentations(n: usize) -> Result<Vec<Ornamentation>> {
    check_n(n)?;
    let mut out = Vec::new();
    let mut cur = vec![1usize; n];
    loop {
        if let Ok(o) = Ornamentation::new(cur.clone()) {
            out.push(o);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < n {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
        }
    }
}

/// Map from ornamentations to elements of `la`, checked to be an order isomorphism.
pub fn orn_embedding(la: &LatticeModel) -> Result<Vec<(Ornamentation, usize)>> {
    if la.variant != Variant::Affine {
        return Err(Error::Invariant("ornamentations model the affine lattice".into()));
    }
    let by_class: std::collections::HashMap<ArcSet, usize> = la
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| Ok((torsion_arcs(&e.tito, Variant::Affine)?, i)))
        .collect::<Result<_>>()?;
    ornamentations(la.n)?
        .into_iter()
        .map(|o| {
            let i = *by_class
                .get(&o.to_arcs())
                .ok_or_else(|| Error::Invariant(format!("{o} is not a torsion class")))?;
            Ok((o, i))
        })
        .collect()
}

/// Bijective and order-preserving in both directions.
pub fn orn_poset_iso_check(la: &LatticeModel) -> Result<bool> {
    let emb = orn_embedding(la)?;
    let mut hit = vec![false; la.len()];
    for (_, i) in &emb {
        if std::mem::replace(&mut hit[*i], true) {
            return Ok(false);
        }
    }
    if emb.len() != la.len() {
        return Ok(false);
    }
    Ok(emb.iter().all(|(o, i)| emb.iter().all(|(p, j)| o.leq(p) == la.leq(*i, *j))))
}

/// The longest chain built from the ornamentations `δ*_j` and `δ_{j,k}`; every step is
/// checked to be a cover.
pub fn witness_max_chain(n: usize) -> Result<Vec<Ornamentation>> {
    check_n(n)?;
    let star = |j: usize| Ornamentation::new((1..=n).map(|i| if i <= j { n } else { 1 }).collect());
    let mut chain = vec![star(0)?];
    for j in 1..=n {
        for k in 1..=(n - j).min(n - 2) {
            let mut lens = star(j - 1)?.len;
            lens[j - 1] = k + 1;
            chain.push(Ornamentation::new(lens)?);
        }
        chain.push(star(j)?);
    }
    for w in chain.windows(2) {
        if !w[0].covered_by(&w[1]) {
            return Err(Error::Invariant(format!("{} is not covered by {}", w[0], w[1])));
        }
    }
    Ok(chain)
}

/// The witness chain carried into `la`; fails unless it is a bottom-to-top cover path.
pub fn witness_in_lattice(la: &LatticeModel) -> Result<Vec<usize>> {
    let emb: std::collections::HashMap<Ornamentation, usize> = orn_embedding(la)?.into_iter().collect();
    let path: Vec<usize> = witness_max_chain(la.n)?.iter().map(|o| emb[o]).collect();
    let ok = path.first() == Some(&la.bottom())
        && path.last() == Some(&la.top())
        && path.windows(2).all(|w| la.up_covers(w[0]).contains(&w[1]));
    if ok {
        Ok(path)
    } else {
        Err(Error::Invariant("witness chain is not a maximal chain".into()))
    }
}
