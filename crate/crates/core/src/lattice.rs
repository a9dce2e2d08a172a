//! The finite lattices CTam(n) and ATam(n), fully materialized.
//!
//! Elements are built by breadth-first search over tree rotations from the left chain and
//! keyed by their set of right edges. They are stored in a linear extension of the order,
//! so a join is the first common upper bound and a meet the last common lower bound.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arcdiag::{ArcSet, Variant};
use crate::error::{Error, Result};
use crate::tibit::{Direction, Tibit};
use crate::tito::{ReflectionIndex, Tito};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b)
        })
    }
}

#[derive(Debug, Clone)]
pub struct Element {
    /// Right-edge classes of the tree; equals the arc diagram of `tito`.
    pub arcs: ArcSet,
    pub tree: Tibit,
    /// The 312-avoiding representative (post-order of `tree`).
    pub tito: Tito,
}

#[derive(Debug, Clone)]
pub struct LatticeModel {
    pub variant: Variant,
    pub n: usize,
    elements: Vec<Element>,
    index: HashMap<ArcSet, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    jirr: Vec<usize>,
    jirr_label: Vec<ReflectionIndex>,
    kappa: Vec<usize>,
    labels: HashMap<(usize, usize), usize>,
    row: Vec<usize>,
}

fn bfs_trees(n: usize) -> Vec<Tibit> {
    let start = Tibit::bottom(n);
    let mut seen: HashMap<ArcSet, usize> = HashMap::new();
    let mut trees = vec![start.clone()];
    seen.insert(start.right_edges(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let t = trees[i].clone();
        for c in t.rotatable(Direction::Up) {
            let u = t.rotate(c, Direction::Up).expect("up-rotation of a valid tree");
            let key = u.right_edges();
            if let Entry::Vacant(e) = seen.entry(key) {
                e.insert(trees.len());
                queue.push_back(trees.len());
                trees.push(u);
            }
        }
    }
    trees
}

// Kahn's algorithm; returns a permutation listing vertices in a linear extension.
fn topo_order(up: &[Vec<usize>]) -> Vec<usize> {
    let mut indeg = vec![0usize; up.len()];
    for v in up {
        for &w in v {
            indeg[w] += 1;
        }
    }
    let mut ready: VecDeque<usize> = (0..up.len()).filter(|&v| indeg[v] == 0).collect();
    let mut out = Vec::with_capacity(up.len());
    while let Some(v) = ready.pop_front() {
        out.push(v);
        for &w in &up[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push_back(w);
            }
        }
    }
    assert_eq!(out.len(), up.len(), "cover graph has a cycle");
    out
}

impl LatticeModel {
    pub fn build(n: usize, variant: Variant) -> Result<LatticeModel> {
        crate::check_n(n)?;
        let cyclic = LatticeModel::build_cyclic(n);
        Ok(match variant {
            Variant::Cyclic => cyclic,
            Variant::Affine => cyclic.affine_quotient(),
        })
    }

    fn build_cyclic(n: usize) -> LatticeModel {
        let trees = bfs_trees(n);
        let key: HashMap<ArcSet, usize> = trees.iter().enumerate().map(|(i, t)| (t.right_edges(), i)).collect();
        let mut up = vec![Vec::new(); trees.len()];
        for (i, t) in trees.iter().enumerate() {
            for c in t.rotatable(Direction::Up) {
                let u = t.rotate(c, Direction::Up).unwrap();
                up[i].push(key[&u.right_edges()]);
            }
        }
        let elems: Vec<Element> = trees
            .into_iter()
            .map(|t| Element { arcs: t.right_edges(), tito: t.post_order(), tree: t })
            .collect();
        LatticeModel::assemble(n, Variant::Cyclic, elems, up)
    }

    // Reorders into a linear extension and derives every table from the cover lists.
    fn assemble(n: usize, variant: Variant, elems: Vec<Element>, up: Vec<Vec<usize>>) -> LatticeModel {
        let order = topo_order(&up);
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut slots: Vec<Option<Element>> = elems.into_iter().map(Some).collect();
        let elements: Vec<Element> = order.iter().map(|&v| slots[v].take().unwrap()).collect();
        let len = elements.len();
        let mut new_up = vec![Vec::new(); len];
        let mut new_down = vec![Vec::new(); len];
        for (v, ws) in up.iter().enumerate() {
            for &w in ws {
                new_up[pos[v]].push(pos[w]);
                new_down[pos[w]].push(pos[v]);
            }
        }
        for v in new_up.iter_mut().chain(new_down.iter_mut()) {
            v.sort_unstable();
        }
        let mut below = vec![BitSet::new(len); len];
        for x in 0..len {
            below[x].insert(x);
            for &y in &new_down[x] {
                let b = below[y].clone();
                below[x].union_with(&b);
            }
        }
        let mut above = vec![BitSet::new(len); len];
        for x in (0..len).rev() {
            above[x].insert(x);
            for &y in &new_up[x] {
                let a = above[y].clone();
                above[x].union_with(&a);
            }
        }
        let index = elements.iter().enumerate().map(|(i, e)| (e.arcs.clone(), i)).collect();
        let mut m = LatticeModel {
            variant,
            n,
            elements,
            index,
            up: new_up,
            down: new_down,
            above,
            below,
            jirr: Vec::new(),
            jirr_label: Vec::new(),
            kappa: Vec::new(),
            labels: HashMap::new(),
            row: Vec::new(),
        };
        m.derive_labels();
        m
    }

    fn derive_labels(&mut self) {
        self.jirr = (0..self.len()).filter(|&x| self.down[x].len() == 1).collect();
        self.jirr_label = self
            .jirr
            .iter()
            .map(|&j| {
                let arcs = &self.elements[j].arcs;
                assert_eq!(arcs.len(), 1, "join-irreducible with {} arcs", arcs.len());
                arcs.iter().next().unwrap()
            })
            .collect();
        self.kappa = self.jirr.iter().map(|&j| self.generic_kappa(j)).collect();
        let mut labels = HashMap::new();
        for x in 0..self.len() {
            for &y in &self.up[x] {
                let found: Vec<usize> = (0..self.jirr.len())
                    .filter(|&k| {
                        let j = self.jirr[k];
                        self.leq(j, y)
                            && !self.leq(j, x)
                            && self.join(j, x) == y
                            && self.meet(self.kappa[k], y) == x
                    })
                    .collect();
                assert_eq!(found.len(), 1, "cover {x} < {y} has {} labels", found.len());
                labels.insert((x, y), found[0]);
            }
        }
        self.labels = labels;
        self.row = (0..self.len())
            .map(|u| self.meet_all(self.down[u].iter().map(|&x| self.kappa[self.labels[&(x, u)]])))
            .collect();
    }

    // The largest z with z ∧ j = j_*.
    fn generic_kappa(&self, j: usize) -> usize {
        let jstar = self.down[j][0];
        let cands: Vec<usize> = (0..self.len()).filter(|&z| self.meet(z, j) == jstar).collect();
        let top = *cands.iter().max().unwrap();
        assert!(cands.iter().all(|&z| self.leq(z, top)), "kappa of {j} is not unique");
        top
    }

    /// The real trees of the cyclic lattice, ordered as a subposet.
    fn affine_quotient(&self) -> LatticeModel {
        let keep: Vec<usize> = (0..self.len()).filter(|&x| self.elements[x].tree.is_real()).collect();
        let local: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut up = vec![Vec::new(); keep.len()];
        for (iy, &y) in keep.iter().enumerate() {
            let mut covered = BitSet::new(self.len());
            for x in (0..y).rev() {
                if local.contains_key(&x) && self.leq(x, y) && !covered.contains(x) {
                    up[local[&x]].push(iy);
                    covered.union_with(&self.below[x]);
                }
            }
        }
        let elems = keep.iter().map(|&x| self.elements[x].clone()).collect();
        LatticeModel::assemble(self.n, Variant::Affine, elems, up)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, x: usize) -> &Element {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn up_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn down_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.up[x].iter().map(move |&y| (x, y))).collect()
    }

    pub fn above(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    pub fn below(&self, x: usize) -> &BitSet {
        &self.below[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.above[x].and(&self.above[y]).first().expect("top is an upper bound")
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.below[x].and(&self.below[y]).last().expect("bottom is a lower bound")
    }

    pub fn join_all(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.bottom(), |a, b| self.join(a, b))
    }

    pub fn meet_all(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.top(), |a, b| self.meet(a, b))
    }

    pub fn find(&self, arcs: &ArcSet) -> Option<usize> {
        self.index.get(arcs).copied()
    }

    pub fn find_tree(&self, t: &Tibit) -> Option<usize> {
        self.find(&t.right_edges())
    }

    pub fn find_tito(&self, t: &Tito) -> Option<usize> {
        self.find_tree(&crate::tibit::insertion_tree(t))
    }

    /// The element whose right-edge set is `d`.
    pub fn from_right_edges(&self, d: &ArcSet) -> Result<&Tibit> {
        if !d.is_noncrossing() {
            return Err(Error::Crossing);
        }
        self.find(d).map(|x| &self.elements[x].tree).ok_or(Error::Crossing)
    }

    /// Element ids of the join-irreducibles, parallel to `jirr_labels`.
    pub fn jirr(&self) -> &[usize] {
        &self.jirr
    }

    pub fn jirr_labels(&self) -> &[ReflectionIndex] {
        &self.jirr_label
    }

    pub fn jirr_of(&self, r: ReflectionIndex) -> Option<usize> {
        let r = ReflectionIndex::new(r.a, r.b, self.n);
        self.jirr_label.iter().position(|&s| s == r).map(|k| self.jirr[k])
    }

    /// `κ(j)` for the join-irreducible labelled `r`.
    pub fn kappa_of(&self, r: ReflectionIndex) -> Option<usize> {
        let r = ReflectionIndex::new(r.a, r.b, self.n);
        self.jirr_label.iter().position(|&s| s == r).map(|k| self.kappa[k])
    }

    pub fn edge_label(&self, x: usize, y: usize) -> Result<ReflectionIndex> {
        self.labels.get(&(x, y)).map(|&k| self.jirr_label[k]).ok_or(Error::NotACover)
    }

    /// `𝒟(u)`: labels of the down edges.
    pub fn can_join_rep(&self, u: usize) -> ArcSet {
        ArcSet::from_indices(self.n, self.down[u].iter().map(|&x| self.jirr_label[self.labels[&(x, u)]]))
    }

    /// `𝒰(u)`: labels of the up edges.
    pub fn can_meet_rep(&self, u: usize) -> ArcSet {
        ArcSet::from_indices(self.n, self.up[u].iter().map(|&y| self.jirr_label[self.labels[&(u, y)]]))
    }

    pub fn rowmotion(&self, u: usize) -> usize {
        self.row[u]
    }

    pub fn row_table(&self) -> &[usize] {
        &self.row
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.row[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Least `k > 0` with `Row^k = id`.
    pub fn row_order(&self) -> usize {
        self.orbits().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Whether every lower cover and join set is as a lattice requires: the common upper
    /// bounds of each pair form exactly the principal filter of their join, and dually.
    pub fn check_lattice_laws(&self) -> bool {
        (0..self.len()).all(|x| {
            (x..self.len()).all(|y| {
                self.above[x].and(&self.above[y]) == self.above[self.join(x, y)]
                    && self.below[x].and(&self.below[y]) == self.below[self.meet(x, y)]
            })
        })
    }

    fn tables(&self) -> (Vec<u16>, Vec<u16>) {
        let n = self.len();
        let mut m = vec![0u16; n * n];
        let mut j = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                m[x * n + y] = self.meet(x, y) as u16;
                j[x * n + y] = self.join(x, y) as u16;
            }
        }
        (m, j)
    }

    /// Both semidistributive laws over every triple.
    pub fn check_semidistributive(&self) -> bool {
        let n = self.len();
        let (m, j) = self.tables();
        for x in 0..n {
            for y in 0..n {
                for z in y..n {
                    let (xy, xz) = (m[x * n + y], m[x * n + z]);
                    if xy == xz && m[x * n + j[y * n + z] as usize] != xy {
                        return false;
                    }
                    let (jy, jz) = (j[x * n + y], j[x * n + z]);
                    if jy == jz && j[x * n + m[y * n + z] as usize] != jy {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Semidistributive laws on `samples` random triples.
    pub fn check_semidistributive_sampled(&self, samples: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.len();
        (0..samples).all(|_| {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let xy = self.meet(x, y);
            let sd_meet = xy != self.meet(x, z) || self.meet(x, self.join(y, z)) == xy;
            let jy = self.join(x, y);
            let sd_join = jy != self.join(x, z) || self.join(x, self.meet(y, z)) == jy;
            sd_meet && sd_join
        })
    }

    /// The order-reversing involution: `ω` on trees, followed by the spine flip for the
    /// affine lattice.
    pub fn antiautomorphism(&self, x: usize) -> usize {
        let t = self.elements[x].tree.omega();
        let t = match self.variant {
            Variant::Cyclic => t,
            Variant::Affine => t.pispine_down(),
        };
        self.find_tree(&t).expect("image of an element")
    }

    /// Whether the antiautomorphism is a bijection that reverses every cover.
    pub fn check_selfdual(&self) -> bool {
        let img: Vec<usize> = (0..self.len()).map(|x| self.antiautomorphism(x)).collect();
        let mut sorted = img.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.len() && self.covers().iter().all(|&(x, y)| self.up[img[y]].contains(&img[x]))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The spine-flip quotient `CTam -> ATam`, as a map on element ids, with its fibers.
pub fn quotient_to_affine(cyc: &LatticeModel, aff: &LatticeModel) -> (Vec<usize>, Vec<Vec<usize>>) {
    let map: Vec<usize> = cyc
        .elements()
        .iter()
        .map(|e| aff.find_tree(&e.tree.pispine_down()).expect("spine flip lands in the affine lattice"))
        .collect();
    let mut fibers = vec![Vec::new(); aff.len()];
    for (x, &a) in map.iter().enumerate() {
        fibers[a].push(x);
    }
    (map, fibers)
}

/// A uniformly random element id, for sampled checks.
pub fn random_element(l: &LatticeModel, rng: &mut impl Rng) -> usize {
    rng.gen_range(0..l.len())
}
