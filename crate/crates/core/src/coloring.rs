//! Fox p-colorings of oriented diagrams.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::knot::OrientedDiagram;
use crate::modp;

/// An arc coloring `c(i) ∈ Z_p` satisfying `c(i) + c(i+1) ≡ 2·c(o(i)) (mod p)`
/// at every crossing, nontrivial and surjective onto the dihedral group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    p: u32,
    colors: Vec<u32>,
}

/// `Ref_m(x)`: the reflection of the p-gon vertex `x` through vertex `m`.
pub fn reflect(x: u32, m: u32, p: u32) -> u32 {
    ((2 * m as u64 + p as u64 - x as u64 % p as u64) % p as u64) as u32
}

pub fn check_p(p: u32) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::UnsupportedP(p));
    }
    Ok(())
}

/// Index of the first crossing where the Fox condition fails, if any.
pub fn fox_violation(d: &OrientedDiagram, p: u32, colors: &[u32]) -> Option<usize> {
    let n = d.n();
    let p = p as u64;
    (0..n).find(|&i| {
        let lhs = colors[i] as u64 + colors[(i + 1) % n] as u64;
        let rhs = 2 * colors[d.over(i)] as u64;
        lhs % p != rhs % p
    })
}

fn is_surjective(colors: &[u32], p: u32) -> bool {
    let c0 = colors[0] as u64;
    let g = colors
        .iter()
        .map(|&c| (c as u64 + p as u64 - c0) % p as u64)
        .fold(0u64, |g, d| g.gcd(&d));
    g.gcd(&(p as u64)) == 1
}

impl Coloring {
    /// Validates `colors` against the diagram.
    pub fn new(d: &OrientedDiagram, p: u32, colors: Vec<u32>) -> Result<Self> {
        check_p(p)?;
        if colors.len() != d.n() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} arcs",
                colors.len(),
                d.n()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidColoring(format!("color {c} not in 0..{p}")));
        }
        if let Some(i) = fox_violation(d, p, &colors) {
            return Err(Error::InvalidColoring(format!(
                "Fox condition fails at crossing {i}"
            )));
        }
        if !is_surjective(&colors, p) {
            return Err(Error::InvalidColoring(
                "coloring is trivial or not surjective onto the dihedral group".into(),
            ));
        }
        Ok(Self { p, colors })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `q = (p - 1) / 2`, the number of index-2 branch curves.
    pub fn q(&self) -> usize {
        (self.p as usize - 1) / 2
    }

    pub fn color(&self, i: usize) -> u32 {
        self.colors[i]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Image under `c ↦ a·c + b (mod p)`. `a` must be a unit.
    pub fn affine(&self, a: u32, b: u32) -> Self {
        let p = self.p as u64;
        let colors = self
            .colors
            .iter()
            .map(|&c| ((a as u64 * c as u64 + b as u64) % p) as u32)
            .collect();
        Self { p: self.p, colors }
    }

    /// The lexicographically smallest coloring in the affine orbit.
    pub fn canonical(&self) -> Self {
        let p = self.p;
        (1..p)
            .filter(|&a| modp::is_unit(a as u64, p as u64))
            .flat_map(|a| (0..p).map(move |b| (a, b)))
            .map(|(a, b)| self.affine(a, b))
            .min()
            .expect("orbit is nonempty")
    }

    /// Same coloring for the diagram relabeled by [`OrientedDiagram::rotated`].
    pub fn rotated(&self, r: usize) -> Self {
        let n = self.colors.len();
        let colors = (0..n).map(|i| self.colors[(i + r) % n]).collect();
        Self { p: self.p, colors }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `"2,3,2,2,0,4,0,1"`.
pub fn parse_colors(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .map(|t| t.trim_matches(|c| c == '[' || c == ']'))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::BadToken(t.to_string())))
        .collect()
}

/// Every Fox coloring of `d` over `Z_p`, constants included, sorted.
pub fn all_fox_solutions(d: &OrientedDiagram, p: u32) -> Result<Vec<Vec<u32>>> {
    check_p(p)?;
    let n = d.n();
    let pm = p as u64;
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = vec![0u64; n];
            row[i] = (row[i] + 1) % pm;
            row[(i + 1) % n] = (row[(i + 1) % n] + 1) % pm;
            let o = d.over(i);
            row[o] = (row[o] + pm - 2 % pm) % pm;
            row
        })
        .collect();
    let mut sols: Vec<Vec<u32>> = modp::solve_homogeneous(&rows, n, pm)?
        .into_iter()
        .map(|x| x.into_iter().map(|v| v as u32).collect())
        .collect();
    sols.sort();
    Ok(sols)
}

/// All nontrivial, surjective Fox p-colorings of `d`, sorted lexicographically.
pub fn fox_colorings(d: &OrientedDiagram, p: u32) -> Result<Vec<Coloring>> {
    Ok(all_fox_solutions(d, p)?
        .into_iter()
        .filter(|c| is_surjective(c, p))
        .map(|colors| {
            debug_assert!(fox_violation(d, p, &colors).is_none());
            Coloring { p, colors }
        })
        .collect())
}

/// One canonical representative per affine orbit, sorted.
pub fn equivalence_classes(cs: &[Coloring]) -> Vec<Coloring> {
    let mut reps: Vec<Coloring> = cs.iter().map(Coloring::canonical).collect();
    reps.sort();
    reps.dedup();
    reps
}

pub fn is_colorable(d: &OrientedDiagram, p: u32) -> Result<bool> {
    Ok(!fox_colorings(d, p)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{diagram_from_braid, diagram_from_lists};
    use proptest::prelude::*;

    fn knot_8_16() -> OrientedDiagram {
        diagram_from_lists(&[6, 4, 0, 7, 2, 3, 1, 5], &[1, 1, 1, -1, 1, -1, 1, -1]).unwrap()
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(1, 0, 5), 4);
        for p in [3, 5, 7, 9] {
            for m in 0..p {
                assert_eq!(reflect(m, m, p), m);
            }
        }
    }

    proptest! {
        #[test]
        fn reflect_is_involution(half in 1u32..20, x in 0u32..1000, m in 0u32..1000) {
            let p = 2 * half + 1;
            let (x, m) = (x % p, m % p);
            prop_assert_eq!(reflect(reflect(x, m, p), m, p), x);
        }
    }

    #[test]
    fn colorings_of_8_16() {
        let d = knot_8_16();
        let five = fox_colorings(&d, 5).unwrap();
        assert!(five.iter().any(|c| c.colors() == [2, 3, 2, 2, 0, 4, 0, 1]));
        assert_eq!(equivalence_classes(&five).len(), 1);
        let seven = fox_colorings(&d, 7).unwrap();
        assert!(seven.iter().any(|c| c.colors() == [3, 4, 5, 1, 1, 2, 0, 1]));
        assert_eq!(equivalence_classes(&seven).len(), 1);
        assert!(fox_colorings(&d, 3).unwrap().is_empty());
    }

    #[test]
    fn unknot_has_no_colorings() {
        let d = diagram_from_braid("1").unwrap();
        assert_eq!(d.n(), 2);
        for p in [3, 5, 7, 9] {
            assert!(fox_colorings(&d, p).unwrap().is_empty());
            assert_eq!(all_fox_solutions(&d, p).unwrap().len(), p as usize);
        }
    }

    #[test]
    fn colorability() {
        let trefoil = diagram_from_braid("1 1 1").unwrap();
        assert!(is_colorable(&trefoil, 3).unwrap());
        assert!(!is_colorable(&trefoil, 5).unwrap());
        let fig8 = diagram_from_braid("1 -2 1 -2").unwrap();
        assert!(is_colorable(&fig8, 5).unwrap());
        assert_eq!(is_colorable(&fig8, 4), Err(Error::UnsupportedP(4)));
        assert_eq!(is_colorable(&fig8, 1), Err(Error::UnsupportedP(1)));
    }

    #[test]
    fn orbit_collapses_to_lex_min() {
        let d = knot_8_16();
        let c = Coloring::new(&d, 5, vec![2, 3, 2, 2, 0, 4, 0, 1]).unwrap();
        // independent enumeration of all 20 affine images
        let mut images = Vec::new();
        for a in 1..5u32 {
            for b in 0..5u32 {
                images.push(
                    c.colors()
                        .iter()
                        .map(|&x| (a * x + b) % 5)
                        .collect::<Vec<_>>(),
                );
            }
        }
        let min = images.iter().min().unwrap().clone();
        for img in &images {
            let col = Coloring::new(&d, 5, img.clone()).unwrap();
            assert_eq!(col.canonical().colors(), &min[..]);
        }
        assert_eq!(min, vec![0, 1, 0, 0, 3, 2, 3, 4]);
    }

    #[test]
    fn composite_p_excludes_subgroup_colorings() {
        // 9_35 has determinant 27: colorings mod 9 exist, and the ones landing
        // in multiples of 3 are not surjective onto D_9.
        let d = diagram_from_braid("1 1 2 -1 2 2 3 -2 -2 4 -3 2 4 3").unwrap();
        let all = all_fox_solutions(&d, 9).unwrap();
        let surj = fox_colorings(&d, 9).unwrap();
        assert!(all.len() > surj.len());
        for c in &surj {
            assert!(fox_violation(&d, 9, c.colors()).is_none());
            let g = c
                .colors()
                .iter()
                .map(|&x| (x + 9 - c.color(0)) % 9)
                .fold(0u32, |g, v| g.gcd(&v));
            assert_eq!(g.gcd(&9), 1);
        }
        assert!(!surj.is_empty());
    }

    #[test]
    fn invalid_colorings_rejected() {
        let d = knot_8_16();
        assert!(matches!(
            Coloring::new(&d, 5, vec![0; 8]),
            Err(Error::InvalidColoring(_))
        ));
        assert!(matches!(
            Coloring::new(&d, 5, vec![2, 3, 2, 2, 0, 4, 0, 2]),
            Err(Error::InvalidColoring(_))
        ));
        assert!(matches!(
            Coloring::new(&d, 5, vec![2, 3]),
            Err(Error::InvalidColoring(_))
        ));
        assert_eq!(parse_colors("2,3, 2").unwrap(), vec![2, 3, 2]);
    }
}
