//! Translation-invariant total orders on the integers, written in window notation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rep;

/// A pair `a < b` taken up to simultaneous translation by `n`. Stored with `1 <= a <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflectionIndex {
    pub a: i64,
    pub b: i64,
}

impl ReflectionIndex {
    pub fn new(a: i64, b: i64, n: usize) -> Self {
        assert!(a < b, "reflection index needs a < b, got ({a}, {b})");
        let shift = rep(a, n) - a;
        ReflectionIndex { a: a + shift, b: b + shift }
    }

    pub fn len(&self) -> i64 {
        self.b - self.a
    }

    /// Translate of this index starting at `a + k n`.
    pub fn shifted(&self, k: i64, n: usize) -> (i64, i64) {
        (self.a + k * n as i64, self.b + k * n as i64)
    }
}

impl fmt::Display for ReflectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Waxing,
    Waning,
}

impl Kind {
    fn flipped(self) -> Kind {
        match self {
            Kind::Waxing => Kind::Waning,
            Kind::Waning => Kind::Waxing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub window: Vec<i64>,
    pub kind: Kind,
}

impl Block {
    fn len(&self) -> usize {
        self.window.len()
    }

    /// Element at position `p` of the block's bi-infinite sequence; position 0 is `window[0]`.
    pub fn at(&self, p: i64, n: usize) -> i64 {
        let k = self.len() as i64;
        let q = p.div_euclid(k);
        let i = p.rem_euclid(k) as usize;
        match self.kind {
            Kind::Waxing => self.window[i] + q * n as i64,
            Kind::Waning => self.window[i] - q * n as i64,
        }
    }

    /// The window of `k` consecutive elements starting at position `p`.
    fn slid(&self, p: i64, n: usize) -> Block {
        let k = self.len() as i64;
        Block { window: (p..p + k).map(|q| self.at(q, n)).collect(), kind: self.kind }
    }

    fn span(&self) -> i64 {
        let lo = self.window.iter().min().unwrap();
        let hi = self.window.iter().max().unwrap();
        hi - lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallKind {
    Upper,
    Lower,
}

/// A cover relation of the order, up to translation. `Upper` means `a` precedes `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wall {
    pub index: ReflectionIndex,
    pub kind: WallKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    P312,
    P132,
    P312Bar,
    P132Bar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub compact: bool,
    pub real: bool,
    pub co_real: bool,
    pub block_count: usize,
}

/// Periods searched above `a` in pattern and inversion enumeration.
pub const SEARCH_PERIODS: i64 = 3;

/// A translation-invariant total order of period `n`, kept in canonical window form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tito {
    n: usize,
    blocks: Vec<Block>,
    // residue (0-based) -> (block, index in window)
    loc: Vec<(usize, usize)>,
}

impl Tito {
    pub fn new(n: usize, blocks: Vec<Block>) -> Result<Tito> {
        if n < 2 {
            return Err(Error::BadN(n));
        }
        let mut loc = vec![None; n];
        for (bi, b) in blocks.iter().enumerate() {
            let text = format_block(b);
            if b.window.is_empty() {
                return Err(Error::Parse { window: text, reason: "empty window".into() });
            }
            for (i, &x) in b.window.iter().enumerate() {
                let r = (rep(x, n) - 1) as usize;
                if loc[r].is_some() {
                    return Err(Error::Parse {
                        window: text,
                        reason: format!("duplicate residue of {x} mod {n}"),
                    });
                }
                loc[r] = Some((bi, i));
            }
        }
        if let Some(r) = loc.iter().position(Option::is_none) {
            return Err(Error::Parse {
                window: blocks.iter().map(format_block).collect(),
                reason: format!("missing residue {} mod {n}", r + 1),
            });
        }
        let mut t = Tito { n, blocks, loc: loc.into_iter().map(Option::unwrap).collect() };
        t.canonicalize();
        Ok(t)
    }

    // Each window starts at the least element of 1..=n in its block.
    fn canonicalize(&mut self) {
        let n = self.n;
        for bi in 0..self.blocks.len() {
            let start = self.blocks[bi].window.iter().map(|&x| rep(x, n)).min().unwrap();
            let p = self.position(start).1;
            let nb = self.blocks[bi].slid(p, n);
            self.blocks[bi] = nb;
        }
        for (bi, b) in self.blocks.iter().enumerate() {
            for (i, &x) in b.window.iter().enumerate() {
                self.loc[(rep(x, n) - 1) as usize] = (bi, i);
            }
        }
    }

    pub fn parse(text: &str, n: usize) -> Result<Tito> {
        let mut blocks = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('[') else {
                return Err(Error::Parse { window: rest.into(), reason: "expected '['".into() });
            };
            let Some(close) = body.find(']') else {
                return Err(Error::Parse { window: rest.into(), reason: "missing ']'".into() });
            };
            let group = &rest[..close + 2];
            let mut inner = body[..close].trim();
            let kind = match inner.strip_prefix('~') {
                Some(s) => {
                    inner = s;
                    Kind::Waning
                }
                None => Kind::Waxing,
            };
            if inner.trim().is_empty() {
                return Err(Error::Parse { window: group.into(), reason: "empty window".into() });
            }
            let mut window = Vec::new();
            for tok in inner.split(',') {
                let v = tok.trim().parse::<i64>().map_err(|_| Error::Parse {
                    window: group.into(),
                    reason: format!("malformed token {:?}", tok.trim()),
                })?;
                window.push(v);
            }
            blocks.push(Block { window, kind });
            rest = body[close + 1..].trim_start();
        }
        if blocks.is_empty() {
            return Err(Error::Parse { window: text.into(), reason: "no windows".into() });
        }
        Tito::new(n, blocks)
    }

    /// The identity order `[1, ..., n]`.
    pub fn identity(n: usize) -> Tito {
        Tito::new(n, vec![Block { window: (1..=n as i64).collect(), kind: Kind::Waxing }]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// (block index, position in that block's sequence).
    pub fn position(&self, x: i64) -> (usize, i64) {
        let n = self.n as i64;
        let (bi, i) = self.loc[(rep(x, self.n) - 1) as usize];
        let b = &self.blocks[bi];
        let k = b.len() as i64;
        let m = (x - b.window[i]).div_euclid(n);
        let p = match b.kind {
            Kind::Waxing => m * k + i as i64,
            Kind::Waning => -m * k + i as i64,
        };
        (bi, p)
    }

    pub fn cmp_elems(&self, x: i64, y: i64) -> Ordering {
        self.position(x).cmp(&self.position(y))
    }

    /// `x ⪯ y`.
    pub fn precedes(&self, x: i64, y: i64) -> bool {
        self.cmp_elems(x, y) != Ordering::Greater
    }

    pub fn is_inversion(&self, r: ReflectionIndex) -> bool {
        self.is_inversion_pair(r.a, r.b)
    }

    pub fn is_inversion_pair(&self, a: i64, b: i64) -> bool {
        a < b && self.cmp_elems(b, a) == Ordering::Less
    }

    /// Inversion status of `(a, b + m n)` for all large `m`.
    pub fn tail_inversion(&self, a: i64, b: i64) -> bool {
        let (ba, _) = self.position(a);
        let (bb, _) = self.position(b);
        if ba == bb {
            self.blocks[ba].kind == Kind::Waning
        } else {
            bb < ba
        }
    }

    /// Inversions `(a, b)` with `1 <= a <= n` and `b - a <= periods * n`.
    pub fn inversions_window(&self, periods: i64) -> Vec<ReflectionIndex> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=a + periods * n {
                if self.is_inversion_pair(a, b) {
                    out.push(ReflectionIndex { a, b });
                }
            }
        }
        out
    }

    /// Eventual inversion flag for each `(a, residue of b)`, both in `1..=n`.
    pub fn tail_profile(&self) -> Vec<bool> {
        let n = self.n as i64;
        let mut out = Vec::with_capacity(self.n * self.n);
        for a in 1..=n {
            for s in 1..=n {
                out.push(self.tail_inversion(a, s));
            }
        }
        out
    }

    fn max_span(&self) -> i64 {
        self.blocks.iter().map(Block::span).max().unwrap()
    }

    pub fn classify(&self) -> Classification {
        let k = self.blocks.len();
        let compact = (0..k.saturating_sub(1))
            .all(|i| !(self.blocks[i].kind == Kind::Waxing && self.blocks[i + 1].kind == Kind::Waxing));
        let real = self.blocks.iter().all(|b| b.len() > 1 || b.kind == Kind::Waxing);
        let co_real = self.blocks.iter().all(|b| b.len() > 1 || b.kind == Kind::Waning);
        Classification { compact, real, co_real, block_count: k }
    }

    fn covers(&self, x: i64, y: i64) -> bool {
        let (bx, px) = self.position(x);
        let (by, py) = self.position(y);
        bx == by && py == px + 1
    }

    /// Triples `a < b < c` with `1 <= a <= n` and `c <= a + 3n`.
    pub fn avoids(&self, pattern: Pattern) -> bool {
        let n = self.n as i64;
        for a in 1..=n {
            for c in a + 2..=a + SEARCH_PERIODS * n {
                for b in a + 1..c {
                    let hit = match pattern {
                        Pattern::P312 => self.precedes(c, a) && self.precedes(a, b),
                        Pattern::P132 => self.precedes(a, c) && self.precedes(c, b),
                        Pattern::P312Bar => self.covers(c, a) && self.precedes(a, b),
                        Pattern::P132Bar => self.covers(a, c) && self.precedes(c, b),
                    };
                    if hit {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// One wall per adjacent pair of the order, `n` in total.
    pub fn walls(&self) -> Vec<Wall> {
        let n = self.n;
        let mut out = Vec::with_capacity(n);
        for b in &self.blocks {
            for p in 0..b.len() as i64 {
                let (x, y) = (b.at(p, n), b.at(p + 1, n));
                let kind = if x < y { WallKind::Upper } else { WallKind::Lower };
                out.push(Wall { index: ReflectionIndex::new(x.min(y), x.max(y), n), kind });
            }
        }
        out
    }

    pub fn lower_walls(&self) -> Vec<ReflectionIndex> {
        self.walls_of(WallKind::Lower)
    }

    pub fn upper_walls(&self) -> Vec<ReflectionIndex> {
        self.walls_of(WallKind::Upper)
    }

    fn walls_of(&self, kind: WallKind) -> Vec<ReflectionIndex> {
        let mut v: Vec<_> = self.walls().into_iter().filter(|w| w.kind == kind).map(|w| w.index).collect();
        v.sort();
        v
    }

    /// Swaps the two ends of `w` at every translate. A wall inside a block of size one
    /// turns that block around.
    pub fn flip(&self, w: Wall) -> Result<Tito> {
        let n = self.n;
        for (bi, b) in self.blocks.iter().enumerate() {
            for p in 0..b.len() as i64 {
                let (x, y) = (b.at(p, n), b.at(p + 1, n));
                let kind = if x < y { WallKind::Upper } else { WallKind::Lower };
                if kind != w.kind || ReflectionIndex::new(x.min(y), x.max(y), n) != w.index {
                    continue;
                }
                let mut blocks = self.blocks.clone();
                if b.len() == 1 {
                    blocks[bi].kind = b.kind.flipped();
                } else {
                    let mut nb = b.slid(p, n);
                    nb.window.swap(0, 1);
                    blocks[bi] = nb;
                }
                return Tito::new(n, blocks);
            }
        }
        Err(Error::NotAWall)
    }

    fn toggle_singletons(&self, from: Kind) -> Tito {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let kind = if b.len() == 1 && b.kind == from { from.flipped() } else { b.kind };
                Block { window: b.window.clone(), kind }
            })
            .collect();
        Tito::new(self.n, blocks).unwrap()
    }

    /// Turns every waning block of size one into a waxing one.
    pub fn pi_dyer_down(&self) -> Tito {
        self.toggle_singletons(Kind::Waning)
    }

    pub fn pi_dyer_up(&self) -> Tito {
        self.toggle_singletons(Kind::Waxing)
    }

    /// The reverse order.
    pub fn psi_reverse(&self) -> Tito {
        let blocks = self
            .blocks
            .iter()
            .rev()
            .map(|b| Block { window: b.window.iter().rev().copied().collect(), kind: b.kind.flipped() })
            .collect();
        Tito::new(self.n, blocks).unwrap()
    }

    /// Conjugation by `x -> -x`.
    pub fn psi_negate(&self) -> Tito {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block { window: b.window.iter().map(|x| -x).collect(), kind: b.kind.flipped() })
            .collect();
        Tito::new(self.n, blocks).unwrap()
    }

    /// Containment of inversion sets, decided exactly: below a span-dependent bound every
    /// pair is compared, beyond it each residue pair has a constant status.
    pub fn leq(&self, other: &Tito) -> bool {
        assert_eq!(self.n, other.n);
        let n = self.n as i64;
        let periods = (self.max_span().max(other.max_span())) / n + 4;
        for a in 1..=n {
            for b in a + 1..=a + periods * n {
                if self.is_inversion_pair(a, b) && !other.is_inversion_pair(a, b) {
                    return false;
                }
            }
            for s in 1..=n {
                if self.tail_inversion(a, s) && !other.tail_inversion(a, s) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn leq_tito(t1: &Tito, t2: &Tito) -> bool {
    t1.leq(t2)
}

fn format_block(b: &Block) -> String {
    let body: Vec<String> = b.window.iter().map(i64::to_string).collect();
    match b.kind {
        Kind::Waxing => format!("[{}]", body.join(",")),
        Kind::Waning => format!("[~{}]", body.join(",")),
    }
}

impl fmt::Display for Tito {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            f.write_str(&format_block(b))?;
        }
        Ok(())
    }
}

pub fn parse_window(text: &str, n: usize) -> Result<Tito> {
    Tito::parse(text, n)
}

pub fn format_window(t: &Tito) -> String {
    t.to_string()
}
