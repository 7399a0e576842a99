//! Braid words, braid closures and oriented knot diagrams.
//!
//! Arcs are the maximal over-segments of the diagram, numbered `0..n` in
//! traversal order. Crossing `i` sits at the head of arc `i`, where arc `i`
//! passes under; arc `i + 1 (mod n)` leaves crossing `i`. `o(i)` is the arc
//! passing over crossing `i` and `ε(i)` its local writhe.

use std::fmt;

use crate::error::{Error, Result};

/// A braid word. Letter `g > 0` is the generator `σ_g`, `g < 0` is `σ_{|g|}^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
    strands: usize,
}

impl BraidWord {
    /// Builds a braid word on `strands` strands whose closure must be a knot.
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(pos) = letters.iter().position(|&l| l == 0) {
            return Err(Error::ZeroLetter(pos));
        }
        if let Some(&l) = letters
            .iter()
            .find(|l| l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::RangeError(format!(
                "letter {l} needs more than {strands} strands"
            )));
        }
        let word = Self { letters, strands };
        let components = word.closure_components();
        if components != 1 {
            return Err(Error::NotAKnot(components));
        }
        Ok(word)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The permutation taking a strand's position at the top of the braid to
    /// its position at the bottom.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at = (0..self.strands).collect::<Vec<_>>();
        // at[pos] = which starting strand currently occupies pos
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize - 1;
            at.swap(g, g + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Number of components of the braid closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .map(|t| t.trim_matches(|c| matches!(c, '[' | ']' | '{' | '}' | '(' | ')')))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::BadToken(t.to_string())))
        .collect()
}

/// Parses a braid word written as signed integers separated by spaces or
/// commas. Surrounding brackets (`[1,-2,1,-2]`) are accepted.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let letters = parse_int_list(text)?
        .into_iter()
        .map(|l| i32::try_from(l).map_err(|_| Error::RangeError(format!("letter {l}"))))
        .collect::<Result<Vec<_>>>()?;
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    if let Some(pos) = letters.iter().position(|&l| l == 0) {
        return Err(Error::ZeroLetter(pos));
    }
    let strands = letters
        .iter()
        .map(|l| l.unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
        + 1;
    BraidWord::new(letters, strands)
}

/// Makes the crossing count even by a positive Markov stabilization
/// (appending `σ_s` on a new strand), which adds one positive kink.
pub fn ensure_even(w: BraidWord) -> BraidWord {
    if w.len().is_multiple_of(2) {
        return w;
    }
    let mut letters = w.letters;
    letters.push(w.strands as i32);
    BraidWord {
        letters,
        strands: w.strands + 1,
    }
}

/// A combinatorial oriented knot diagram with an even number of crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedDiagram {
    over: Vec<usize>,
    sign: Vec<i8>,
}

impl OrientedDiagram {
    /// Number of crossings, equal to the number of arcs.
    pub fn n(&self) -> usize {
        self.over.len()
    }

    /// `o(i)`: the arc passing over crossing `i`.
    pub fn over(&self, i: usize) -> usize {
        self.over[i]
    }

    /// `ε(i)`: the local writhe at crossing `i`.
    pub fn sign(&self, i: usize) -> i8 {
        self.sign[i]
    }

    pub fn overstrands(&self) -> &[usize] {
        &self.over
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    pub fn writhe(&self) -> i32 {
        self.sign.iter().map(|&s| s as i32).sum()
    }

    /// The mirror image: same arcs and overstrands, every writhe negated.
    pub fn mirror(&self) -> Self {
        Self {
            over: self.over.clone(),
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    /// Relabels arcs so that old arc `r` becomes arc 0.
    pub fn rotated(&self, r: usize) -> Self {
        let n = self.n();
        let r = r % n;
        let over = (0..n)
            .map(|i| (self.over[(i + r) % n] + n - r) % n)
            .collect();
        let sign = (0..n).map(|i| self.sign[(i + r) % n]).collect();
        Self { over, sign }
    }
}

/// Accepts raw overstrand and sign lists, e.g. `over = [6,4,0,7,2,3,1,5]`.
pub fn diagram_from_lists(over: &[i64], sign: &[i64]) -> Result<OrientedDiagram> {
    if over.len() != sign.len() {
        return Err(Error::LengthMismatch {
            over: over.len(),
            sign: sign.len(),
        });
    }
    let n = over.len();
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    if n == 0 {
        return Err(Error::RangeError("diagram has no crossings".into()));
    }
    let over = over
        .iter()
        .map(|&o| {
            usize::try_from(o)
                .ok()
                .filter(|&o| o < n)
                .ok_or_else(|| Error::RangeError(format!("overstrand {o} not in 0..{n}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let sign = sign
        .iter()
        .map(|&s| match s {
            1 => Ok(1),
            -1 => Ok(-1),
            _ => Err(Error::RangeError(format!("sign {s} is not +1 or -1"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrientedDiagram { over, sign })
}

/// Parses comma- or space-separated overstrand and sign lists.
pub fn parse_lists(over: &str, sign: &str) -> Result<OrientedDiagram> {
    diagram_from_lists(&parse_int_list(over)?, &parse_int_list(sign)?)
}

/// Closes the braid and reads off the oriented diagram.
///
/// Traversal starts at the top of strand 1 and runs down the braid; the
/// closure strands return from bottom to top without crossings. For `σ_g`
/// the strand moving from position `g+1` to `g` passes over and the crossing
/// is positive; for `σ_g^{-1}` the other strand passes over and the crossing
/// is negative.
pub fn braid_closure(w: &BraidWord) -> Result<OrientedDiagram> {
    let n = w.len();
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }

    // (letter index, passes under)
    let mut events = Vec::with_capacity(2 * n);
    let mut pos = 0usize;
    for _ in 0..w.strands {
        for (t, &l) in w.letters.iter().enumerate() {
            let g = l.unsigned_abs() as usize - 1;
            if pos != g && pos != g + 1 {
                continue;
            }
            let moving_left = pos == g + 1;
            let over = if l > 0 { moving_left } else { !moving_left };
            events.push((t, !over));
            pos = if moving_left { g } else { g + 1 };
        }
    }
    debug_assert_eq!(pos, 0);
    debug_assert_eq!(events.len(), 2 * n);

    let mut crossing_of = vec![usize::MAX; n];
    let mut under_order = Vec::with_capacity(n);
    for &(t, under) in &events {
        if under {
            crossing_of[t] = under_order.len();
            under_order.push(t);
        }
    }

    let mut over = vec![0; n];
    let mut arc = 0;
    for &(t, under) in &events {
        if under {
            arc += 1;
        } else {
            over[crossing_of[t]] = arc % n;
        }
    }
    let sign = under_order
        .iter()
        .map(|&t| if w.letters[t] > 0 { 1 } else { -1 })
        .collect();
    Ok(OrientedDiagram { over, sign })
}

/// Parses a braid word, stabilizes it to even length and closes it.
pub fn diagram_from_braid(text: &str) -> Result<OrientedDiagram> {
    braid_closure(&ensure_even(parse_braid(text)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_strand_word() {
        let w = parse_braid("1 1 1 1").unwrap_err();
        // closure of σ1^4 is a 2-component link
        assert_eq!(w, Error::NotAKnot(2));
        let w = parse_braid("1 1 1").unwrap();
        assert_eq!(w.letters(), &[1, 1, 1]);
        assert_eq!(w.strands(), 2);
    }

    #[test]
    fn parses_figure_eight() {
        let w = parse_braid("1 -2 1 -2").unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(w.strands(), 3);
        assert_eq!(parse_braid("[1,-2,1,-2]").unwrap(), w);
        assert_eq!(parse_braid("1, -2, 1, -2").unwrap(), w);
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(parse_braid("  "), Err(Error::EmptyWord));
        assert_eq!(parse_braid("1 0 1"), Err(Error::ZeroLetter(1)));
        assert!(matches!(parse_braid("1 x"), Err(Error::BadToken(_))));
        // σ1² σ2² induces the identity permutation on three strands
        assert_eq!(parse_braid("1 1 2 2"), Err(Error::NotAKnot(3)));
    }

    #[test]
    fn stabilizes_odd_words() {
        let w = ensure_even(parse_braid("1 1 1").unwrap());
        assert_eq!(w.letters(), &[1, 1, 1, 2]);
        assert_eq!(w.strands(), 3);
        assert_eq!(w.closure_components(), 1);
        let fig8 = parse_braid("1 -2 1 -2").unwrap();
        assert_eq!(ensure_even(fig8.clone()), fig8);
    }

    #[test]
    fn closure_of_stabilized_trefoil() {
        let d = braid_closure(&ensure_even(parse_braid("1 1 1").unwrap())).unwrap();
        assert_eq!(d.n(), 4);
        // hand trace: strand 1 goes over at letters 0 and 2 on arc 0,
        // so o = [3, 0, 3, 1] after the under-crossing renumbering
        assert_eq!(d.overstrands(), &[3, 0, 3, 1]);
        assert_eq!(d.signs(), &[1, 1, 1, 1]);
        let mut counts = [0; 4];
        for &o in d.overstrands() {
            counts[o] += 1;
        }
        assert_eq!(counts.iter().filter(|&&c| c == 2).count(), 1);
    }

    #[test]
    fn closure_requires_even_length() {
        let w = parse_braid("1 1 1").unwrap();
        assert_eq!(braid_closure(&w), Err(Error::OddLength(3)));
    }

    #[test]
    fn raw_lists() {
        let d =
            diagram_from_lists(&[6, 4, 0, 7, 2, 3, 1, 5], &[1, 1, 1, -1, 1, -1, 1, -1]).unwrap();
        assert_eq!(d.n(), 8);
        assert_eq!(d.over(0), 6);
        assert_eq!(d.sign(3), -1);
        assert_eq!(
            diagram_from_lists(&[0, 1, 2], &[1, 1, 1]),
            Err(Error::OddLength(3))
        );
        assert!(matches!(
            diagram_from_lists(&[1, 0], &[1, 0]),
            Err(Error::RangeError(_))
        ));
        assert!(matches!(
            diagram_from_lists(&[1, 2], &[1, 1]),
            Err(Error::RangeError(_))
        ));
        assert_eq!(
            diagram_from_lists(&[1, 0], &[1]),
            Err(Error::LengthMismatch { over: 2, sign: 1 })
        );
        assert_eq!(
            parse_lists("6,4,0,7,2,3,1,5", "1 1 1 -1 1 -1 1 -1").unwrap(),
            d
        );
    }

    #[test]
    fn rotation_round_trips() {
        let d =
            diagram_from_lists(&[6, 4, 0, 7, 2, 3, 1, 5], &[1, 1, 1, -1, 1, -1, 1, -1]).unwrap();
        assert_eq!(d.rotated(3).rotated(5), d);
        assert_eq!(d.rotated(1).over(0), 3);
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(d.mirror().writhe(), -d.writhe());
    }
}
