//! Translation-invariant binary in-ordered trees, stored as one parent offset per residue.

use std::fmt;

use crate::arcdiag::ArcSet;
use crate::error::{Error, Result};
use crate::rep;
use crate::tito::{Block, Kind, ReflectionIndex, Tito};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Node `v_j` has parent `v_{j + d_{j mod n}}`; a child is a left child when its parent is larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tibit {
    n: usize,
    d: Vec<i64>,
}

impl Tibit {
    pub fn from_offsets(n: usize, d: Vec<i64>) -> Result<Tibit> {
        if n < 2 || d.len() != n {
            return Err(Error::BadN(n));
        }
        let t = Tibit { n, d };
        let problems = t.diagnose();
        if problems.is_empty() {
            Ok(t)
        } else {
            Err(Error::Invariant(problems.join("; ")))
        }
    }

    fn unchecked(n: usize, d: Vec<i64>) -> Tibit {
        Tibit { n, d }
    }

    /// The left chain: every `v_j` is the left child of `v_{j+1}`.
    pub fn bottom(n: usize) -> Tibit {
        Tibit::unchecked(n, vec![1; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parent_offsets(&self) -> &[i64] {
        &self.d
    }

    fn off(&self, j: i64) -> i64 {
        self.d[(rep(j, self.n) - 1) as usize]
    }

    pub fn parent(&self, j: i64) -> i64 {
        j + self.off(j)
    }

    pub fn side(&self, j: i64) -> Side {
        if self.off(j) > 0 {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn children(&self, j: i64) -> (Option<i64>, Option<i64>) {
        let (mut l, mut r) = (None, None);
        for res in 1..=self.n as i64 {
            let c = j - self.d[(res - 1) as usize];
            if rep(c, self.n) == res {
                if c < j {
                    l = Some(c);
                } else {
                    r = Some(c);
                }
            }
        }
        (l, r)
    }

    fn child_count(&self, j: i64) -> (usize, usize) {
        let (mut l, mut r) = (0, 0);
        for res in 1..=self.n as i64 {
            let c = j - self.d[(res - 1) as usize];
            if rep(c, self.n) == res {
                if c < j {
                    l += 1;
                } else {
                    r += 1;
                }
            }
        }
        (l, r)
    }

    /// Residues on the unique cycle of `i -> i + d_i (mod n)`, in upward order from the least.
    pub fn spine(&self) -> Vec<i64> {
        self.cycle().0
    }

    // (cycle residues in upward order starting from the least, sum of offsets around it)
    fn cycle(&self) -> (Vec<i64>, i64) {
        let n = self.n;
        let mut r = 1i64;
        for _ in 0..=n {
            r = rep(r + self.off(r), n);
        }
        let mut cyc = vec![r];
        let mut sum = self.off(r);
        let mut x = rep(r + self.off(r), n);
        while x != r && cyc.len() <= n {
            cyc.push(x);
            sum += self.off(x);
            x = rep(x + self.off(x), n);
        }
        let start = cyc.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i).unwrap();
        cyc.rotate_left(start);
        (cyc, sum)
    }

    /// +1 when the spine climbs to the right (all spine edges left), -1 otherwise.
    pub fn spine_sign(&self) -> i64 {
        self.cycle().1.signum()
    }

    pub fn is_spine(&self, j: i64) -> bool {
        self.spine().contains(&rep(j, self.n))
    }

    /// Whether `v_b` is a descendant of `v_a` (or equal to it).
    pub fn is_descendant(&self, b: i64, a: i64) -> bool {
        let spine = self.spine();
        let on_spine = |x: i64| spine.contains(&rep(x, self.n));
        let mut x = b;
        loop {
            if x == a {
                return true;
            }
            if on_spine(x) {
                break;
            }
            x = self.parent(x);
        }
        on_spine(a) && if self.spine_sign() > 0 { a > x } else { a < x }
    }

    /// Structural problems found on the window `[1 - 3n, 4n]`; empty means valid.
    pub fn diagnose(&self) -> Vec<String> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for (i, &d) in self.d.iter().enumerate() {
            if d == 0 || d.abs() > n {
                out.push(format!("offset {d} at residue {}", i + 1));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let mut on_cycle = 0;
        for r in 1..=n {
            let mut x = r;
            let mut seen = false;
            for _ in 0..n {
                x = rep(x + self.off(x), self.n);
                if x == r {
                    seen = true;
                    break;
                }
            }
            if seen {
                on_cycle += 1;
            }
        }
        let (cyc, sum) = self.cycle();
        if cyc.len() != on_cycle {
            out.push("residue graph has more than one cycle".into());
        }
        if sum.abs() != n {
            out.push(format!("spine period {sum}"));
        }
        if !out.is_empty() {
            return out;
        }
        for j in 1 - 3 * n..=4 * n {
            let (l, r) = self.child_count(j);
            if l > 1 || r > 1 {
                out.push(format!("node {j} has {l} left and {r} right children"));
            }
        }
        for c in 1..=n {
            let p = self.parent(c);
            for x in c.min(p) + 1..c.max(p) {
                if !self.is_descendant(x, c) {
                    out.push(format!("{x} lies between {c} and its parent {p} but is not below {c}"));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> bool {
        self.diagnose().is_empty()
    }

    /// Classes `(a, b)` with `v_b` the right child of `v_a`.
    pub fn right_edges(&self) -> ArcSet {
        self.edges(Side::Right)
    }

    pub fn left_edges(&self) -> ArcSet {
        self.edges(Side::Left)
    }

    fn edges(&self, side: Side) -> ArcSet {
        let mut s = ArcSet::empty(self.n);
        for c in 1..=self.n as i64 {
            if self.side(c) == side {
                let p = self.parent(c);
                s.insert(ReflectionIndex::new(c.min(p), c.max(p), self.n));
            }
        }
        s
    }

    /// Inversions `(a, b)` (`v_b` below `v_a`) with `1 <= a <= n` and `b - a <= 3n`.
    pub fn inversions(&self) -> Vec<ReflectionIndex> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=a + 3 * n {
                if self.is_descendant(b, a) {
                    out.push(ReflectionIndex { a, b });
                }
            }
        }
        out
    }

    /// Pairs `a < b` with `v_a` below `v_b`, same window as `inversions`.
    pub fn versions(&self) -> Vec<ReflectionIndex> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=a + 3 * n {
                if self.is_descendant(a, b) {
                    out.push(ReflectionIndex { a, b });
                }
            }
        }
        out
    }

    fn finite_order(&self, root: Option<i64>, first: Side, out: &mut Vec<i64>) {
        let Some(j) = root else { return };
        let (l, r) = self.children(j);
        let (x, y) = if first == Side::Left { (l, r) } else { (r, l) };
        self.finite_order(x, first, out);
        self.finite_order(y, first, out);
        out.push(j);
    }

    // Children before parents; `first` is the child visited first at every node.
    fn traversal(&self, first: Side) -> Tito {
        let n = self.n;
        let (cyc, sum) = self.cycle();
        let sigma = sum.signum();
        let spine_side = if sigma > 0 { Side::Left } else { Side::Right };
        let mut levels = Vec::with_capacity(cyc.len());
        let mut p = cyc[0];
        for _ in 0..cyc.len() {
            levels.push(p);
            p = self.parent(p);
        }
        let hang = |p: i64| {
            let (l, r) = self.children(p);
            let other = if spine_side == Side::Left { r } else { l };
            let mut v = Vec::new();
            self.finite_order(other, first, &mut v);
            v
        };
        let kind = |s: i64| if s > 0 { Kind::Waxing } else { Kind::Waning };
        let blocks = if spine_side == first {
            let mut w = Vec::new();
            for &p in &levels {
                w.extend(hang(p));
                w.push(p);
            }
            vec![Block { window: w, kind: kind(sigma) }]
        } else {
            let mut pre = Vec::new();
            for &p in levels.iter().rev() {
                pre.extend(hang(p));
            }
            let post = Block { window: levels.clone(), kind: kind(sigma) };
            if pre.is_empty() {
                vec![post]
            } else {
                vec![Block { window: pre, kind: kind(-sigma) }, post]
            }
        };
        Tito::new(n, blocks).expect("traversal covers every residue once")
    }

    /// `⊑_T`, the post-order reading; the unique 312-avoiding linear extension.
    pub fn post_order(&self) -> Tito {
        self.traversal(Side::Left)
    }

    /// `⊑^T`, the reverse-post-order reading; the unique 132-avoiding linear extension.
    pub fn reverse_post_order(&self) -> Tito {
        self.traversal(Side::Right)
    }

    /// Mirror image followed by negation of every index.
    pub fn omega(&self) -> Tibit {
        let n = self.n;
        let mut d = vec![0; n];
        for a in 1..=n as i64 {
            d[(rep(-a, n) - 1) as usize] = -self.off(a);
        }
        Tibit::unchecked(n, d)
    }

    /// No `k` whose parent is `k - n`.
    pub fn is_real(&self) -> bool {
        !self.d.contains(&-(self.n as i64))
    }

    /// No `k` whose parent is `k + n`.
    pub fn is_co_real(&self) -> bool {
        !self.d.contains(&(self.n as i64))
    }

    /// Flips a spine of right children `k + mn` into a spine of left children.
    pub fn pispine_down(&self) -> Tibit {
        let nn = self.n as i64;
        match self.d.iter().position(|&x| x == -nn) {
            None => self.clone(),
            Some(i) => self.rotate_at(i as i64 + 1, Direction::Down),
        }
    }

    pub fn pispine_up(&self) -> Tibit {
        let nn = self.n as i64;
        match self.d.iter().position(|&x| x == nn) {
            None => self.clone(),
            Some(i) => self.rotate_at(i as i64 + 1, Direction::Up),
        }
    }

    /// Rotates every translate of the edge above `edge_residue`. `Up` needs a left edge,
    /// `Down` a right edge.
    pub fn rotate(&self, edge_residue: i64, direction: Direction) -> Result<Tibit> {
        let c = rep(edge_residue, self.n);
        let want = match direction {
            Direction::Up => Side::Left,
            Direction::Down => Side::Right,
        };
        if self.side(c) != want {
            return Err(Error::WrongEdgeSide);
        }
        let t = self.rotate_at(c, direction);
        let problems = t.diagnose();
        if problems.is_empty() {
            Ok(t)
        } else {
            Err(Error::Invariant(format!("rotation at {c}: {}", problems.join("; "))))
        }
    }

    fn rotate_at(&self, c: i64, direction: Direction) -> Tibit {
        let n = self.n;
        let nn = n as i64;
        let mut d = self.d.clone();
        let set = |d: &mut Vec<i64>, x: i64, parent: i64| d[(rep(x, n) - 1) as usize] = parent - x;
        let p = self.parent(c);
        let (l, r) = self.children(c);
        match direction {
            Direction::Up if p == c + nn => {
                set(&mut d, c, c - nn);
                if let Some(r) = r {
                    set(&mut d, r, c + nn);
                }
            }
            Direction::Down if p == c - nn => {
                set(&mut d, c, c + nn);
                if let Some(l) = l {
                    set(&mut d, l, c - nn);
                }
            }
            Direction::Up => {
                let q = self.parent(p);
                set(&mut d, c, q);
                set(&mut d, p, c);
                if let Some(r) = r {
                    set(&mut d, r, p);
                }
            }
            Direction::Down => {
                let q = self.parent(p);
                set(&mut d, c, q);
                set(&mut d, p, c);
                if let Some(l) = l {
                    set(&mut d, l, p);
                }
            }
        }
        Tibit::unchecked(n, d)
    }

    /// Residues whose parent edge can be rotated in `direction`.
    pub fn rotatable(&self, direction: Direction) -> Vec<i64> {
        let want = match direction {
            Direction::Up => Side::Left,
            Direction::Down => Side::Right,
        };
        (1..=self.n as i64).filter(|&c| self.side(c) == want).collect()
    }
}

/// The binary insertion tree of `t`: the unique tree admitting `t` as a linear extension.
pub fn insertion_tree(t: &Tito) -> Tibit {
    let n = t.n();
    let last = t.blocks().last().unwrap();
    let k = last.window.len() as i64;
    let waxing = last.kind == Kind::Waxing;
    let is_spine = |p: i64| {
        let s = last.at(p, n);
        (p + 1..=p + k).all(|q| {
            let x = last.at(q, n);
            if waxing {
                x >= s
            } else {
                x <= s
            }
        })
    };
    let spine: Vec<i64> = (0..k).filter(|&p| is_spine(p)).collect();
    let mut d = vec![0i64; n];
    let mut set = |x: i64, parent: i64| d[(rep(x, n) - 1) as usize] = parent - x;
    for (i, &p) in spine.iter().enumerate() {
        let next = spine.get(i + 1).copied().unwrap_or(spine[0] + k);
        let s = last.at(p, n);
        let par = last.at(next, n);
        set(s, par);
        let between: Vec<i64> = (s.min(par) + 1..s.max(par)).collect();
        if let Some(root) = cartesian(t, &between, &mut set) {
            set(root, s);
        }
    }
    Tibit::unchecked(n, d)
}

// Cartesian tree of a finite interval under `t`: the last element is the root.
fn cartesian(t: &Tito, xs: &[i64], set: &mut impl FnMut(i64, i64)) -> Option<i64> {
    let (i, &root) = xs.iter().enumerate().max_by(|a, b| t.cmp_elems(*a.1, *b.1))?;
    if let Some(l) = cartesian(t, &xs[..i], set) {
        set(l, root);
    }
    if let Some(r) = cartesian(t, &xs[i + 1..], set) {
        set(r, root);
    }
    Some(root)
}

impl fmt::Display for Tibit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.d.iter().map(|x| format!("{x:+}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}
