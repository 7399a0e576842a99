//! Configuration diagrams of the irregular dihedral cover and the crossing
//! coefficients read off from them.
//!
//! The configuration diagram of arc `i` is a set of arrows on the vertices
//! `0..p` of a regular p-gon, one per index-2 lift `k_i^j` (`j = 1..=q`), with
//! the head `h_i^j` and tail `t_i^j` naming the lifts of the complementary
//! 3-cell on either side of the vertical 2-cells over that lift. Arrow 0 is
//! the degenerate arrow at `c(i)` for the index-1 lift.

use std::fmt;

use crate::coloring::{reflect, Coloring};
use crate::error::{Error, Result};
use crate::knot::OrientedDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: u32,
    pub head: u32,
}

impl Arrow {
    pub fn new(tail: u32, head: u32) -> Self {
        Self { tail, head }
    }

    pub fn flipped(self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }

    fn reflected(self, m: u32, p: u32) -> Self {
        Self {
            tail: reflect(self.tail, m, p),
            head: reflect(self.head, m, p),
        }
    }
}

/// Arrows of arc 0: the degenerate arrow at `c0`, then arrow `j` from
/// `c0 - j` to `c0 + j` for `j = 1..=q`.
pub fn initial_configuration(c0: u32, p: u32) -> Vec<Arrow> {
    let q = (p - 1) / 2;
    std::iter::once(Arrow::new(c0, c0))
        .chain((1..=q).map(|j| Arrow::new((c0 + p - j) % p, (c0 + j) % p)))
        .collect()
}

/// Checks the arrow-partition invariant for one arc colored `c`.
fn check_arc(arrows: &[Arrow], c: u32, p: u32) -> std::result::Result<(), String> {
    let q = (p as usize - 1) / 2;
    if arrows.len() != q + 1 {
        return Err(format!("{} arrows, expected {}", arrows.len(), q + 1));
    }
    if arrows[0] != Arrow::new(c, c) {
        return Err(format!(
            "arrow 0 is {:?}, expected degenerate at {c}",
            arrows[0]
        ));
    }
    let mut seen = vec![false; p as usize];
    seen[c as usize] = true;
    for (j, a) in arrows.iter().enumerate().skip(1) {
        if a.tail >= p || a.head >= p {
            return Err(format!("arrow {j} leaves the {p}-gon"));
        }
        if a.head == a.tail || reflect(a.tail, c, p) != a.head {
            return Err(format!("arrow {j} is not a pair {{m, 2c - m}} with m != c"));
        }
        for v in [a.tail, a.head] {
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(format!("vertex {v} used twice"));
            }
        }
    }
    Ok(())
}

/// Per-arc arrows `h[i][j]`, `t[i][j]` for `i < n`, `j ≤ q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationDiagram {
    p: u32,
    arrows: Vec<Vec<Arrow>>,
}

impl ConfigurationDiagram {
    /// Propagates the standard arc-0 configuration through every crossing.
    pub fn build(d: &OrientedDiagram, col: &Coloring) -> Self {
        Self::build_from(d, col, initial_configuration(col.color(0), col.p()))
            .expect("standard initial configuration is valid")
    }

    /// Propagates a caller-chosen arc-0 configuration. The choice of which
    /// lift is `k_0^j` and which side is `R_0^j` is arbitrary; the linking
    /// numbers between distinct components do not depend on it.
    pub fn build_from(d: &OrientedDiagram, col: &Coloring, initial: Vec<Arrow>) -> Result<Self> {
        let p = col.p();
        let n = d.n();
        check_arc(&initial, col.color(0), p).map_err(Error::InvalidConfiguration)?;
        let mut arrows = Vec::with_capacity(n);
        arrows.push(initial);
        for i in 0..n {
            let m = col.color(d.over(i));
            let next: Vec<Arrow> = arrows[i].iter().map(|a| a.reflected(m, p)).collect();
            if i + 1 < n {
                if let Err(e) = check_arc(&next, col.color(i + 1), p) {
                    panic!("arrow partition broken at arc {}: {e}", i + 1);
                }
                arrows.push(next);
            } else {
                assert_eq!(
                    next, arrows[0],
                    "monodromy closure failed: the reflections around the diagram do not compose to the identity"
                );
            }
        }
        Ok(Self { p, arrows })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> usize {
        (self.p as usize - 1) / 2
    }

    pub fn n(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, i: usize, j: usize) -> Arrow {
        self.arrows[i][j]
    }

    pub fn head(&self, i: usize, j: usize) -> u32 {
        self.arrows[i][j].head
    }

    pub fn tail(&self, i: usize, j: usize) -> u32 {
        self.arrows[i][j].tail
    }

    pub fn arcs(&self) -> &[Vec<Arrow>] {
        &self.arrows
    }
}

impl fmt::Display for ConfigurationDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, arc) in self.arrows.iter().enumerate() {
            write!(f, "{i}:")?;
            for (j, a) in arc.iter().enumerate() {
                write!(f, " {j}:({}→{})", a.tail, a.head)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Coefficients at crossing `i` for lift `j` and target component `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingCoefficients {
    pub a: usize,
    pub b: usize,
    pub eps_a: i8,
    pub eps_b: i8,
    pub c_a: i8,
    pub c_b: i8,
}

/// `a(i,j)`, `b(i,j)`, `ε_a(i,j)`, `ε_b(i,j)` for every crossing and lift,
/// plus the writhes needed for `C_a` and `C_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    q: usize,
    over: Vec<usize>,
    sign: Vec<i8>,
    ab: Vec<(usize, usize)>,
    eps: Vec<(i8, i8)>,
}

impl CoefficientTable {
    pub fn new(cfg: &ConfigurationDiagram, d: &OrientedDiagram) -> Self {
        let n = cfg.n();
        let q = cfg.q();
        let p = cfg.p() as usize;
        // owner[s][v]: which arrow of arc s touches vertex v
        let owner: Vec<Vec<usize>> = cfg
            .arcs()
            .iter()
            .map(|arc| {
                let mut o = vec![usize::MAX; p];
                for (j, a) in arc.iter().enumerate() {
                    o[a.head as usize] = j;
                    o[a.tail as usize] = j;
                }
                o
            })
            .collect();

        let mut ab = Vec::with_capacity(n * (q + 1));
        let mut eps = Vec::with_capacity(n * (q + 1));
        for i in 0..n {
            let s = d.over(i);
            for j in 0..=q {
                let arr = cfg.arrow(i, j);
                let a = owner[s][arr.head as usize];
                let b = owner[s][arr.tail as usize];
                let over_a = cfg.arrow(s, a);
                let over_b = cfg.arrow(s, b);
                let eps_a = match a {
                    0 => 0,
                    _ if arr.head == over_a.head => 1,
                    _ => -1,
                };
                let eps_b = match b {
                    0 => 0,
                    _ if arr.tail == over_b.tail => 1,
                    _ => -1,
                };
                ab.push((a, b));
                eps.push((eps_a, eps_b));
            }
        }
        Self {
            q,
            over: d.overstrands().to_vec(),
            sign: d.signs().to_vec(),
            ab,
            eps,
        }
    }

    pub fn n(&self) -> usize {
        self.over.len()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn over(&self, i: usize) -> usize {
        self.over[i]
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.sign[i]
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.q + 1) + j
    }

    /// The lifts of the over arc `k_{o(i)}` touched by the head and the tail
    /// of arrow `j` at arc `i`.
    pub fn ab(&self, i: usize, j: usize) -> (usize, usize) {
        self.ab[self.idx(i, j)]
    }

    /// `(ε_a, ε_b)`: +1 when head meets head (resp. tail meets tail), -1 when
    /// it meets the opposite end, 0 when the touched lift is the index-1 lift.
    pub fn eps(&self, i: usize, j: usize) -> (i8, i8) {
        self.eps[self.idx(i, j)]
    }

    /// `(C_a, C_b)` at crossing `i` for lift `j` and target component `k`.
    pub fn cconst(&self, i: usize, j: usize, k: usize) -> (i8, i8) {
        let (a, b) = self.ab(i, j);
        let (eps_a, eps_b) = self.eps(i, j);
        let w = self.sign[i];
        let c_a = if a == k && (k == 0 || w * eps_a == -1) {
            -w
        } else {
            0
        };
        let c_b = if b == k && (k == 0 || w * eps_b == 1) {
            w
        } else {
            0
        };
        (c_a, c_b)
    }

    pub fn coefficients(&self, i: usize, j: usize, k: usize) -> CrossingCoefficients {
        let (a, b) = self.ab(i, j);
        let (eps_a, eps_b) = self.eps(i, j);
        let (c_a, c_b) = self.cconst(i, j, k);
        CrossingCoefficients {
            a,
            b,
            eps_a,
            eps_b,
            c_a,
            c_b,
        }
    }
}
