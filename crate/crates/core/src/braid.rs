//! Braid words on `n` strands, exponent templates and simple-braid partitions.
//!
//! A letter `e` stands for the Artin generator `x_|e|` when positive and its
//! inverse when negative. Letter `±i` exchanges strand positions `i` and `i+1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidWordJson", into = "BraidWordJson")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct BraidWordJson {
    strands: usize,
    letters: Vec<i32>,
}

impl TryFrom<BraidWordJson> for BraidWord {
    type Error = Error;
    fn try_from(j: BraidWordJson) -> Result<Self> {
        BraidWord::new(j.strands, j.letters)
    }
}

impl From<BraidWord> for BraidWordJson {
    fn from(w: BraidWord) -> Self {
        BraidWordJson {
            strands: w.strands,
            letters: w.letters,
        }
    }
}

/// One of the letter-level transformations exposed by [`BraidWord::transform`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordTransform {
    Mirror,
    Reverse,
    /// Raise every index by `by`, placing the word on `strands` strands.
    Shift {
        by: usize,
        strands: usize,
    },
    Destabilize,
    /// Connected-sum word `self · shift(other, n_self − 1)`.
    Concat(BraidWord),
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidWord(
                "a braid needs at least one strand".into(),
            ));
        }
        for &e in &letters {
            if e == 0 {
                return Err(Error::InvalidWord("letter 0 is not a generator".into()));
            }
            if e.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidWord(format!(
                    "letter {e} out of range for {strands} strands"
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn trivial(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// Unchecked constructor for letters already known to be in range.
    pub(crate) fn from_parts(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&e| e != 0 && (e.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    /// Exponent sum (algebraic crossing number).
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    /// Image of each position under the underlying permutation (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Lengths of the cycles of the underlying permutation, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Number of link components of the closure.
    pub fn closure_components(&self) -> usize {
        self.cycle_lengths().len()
    }

    /// Occurrence count of each generator index `1..n-1` (slot 0 unused).
    pub fn index_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands];
        for &e in &self.letters {
            counts[e.unsigned_abs() as usize] += 1;
        }
        counts
    }

    pub fn mirror(&self) -> Self {
        Self::from_parts(self.strands, self.letters.iter().map(|e| -e).collect())
    }

    pub fn reverse(&self) -> Self {
        Self::from_parts(self.strands, self.letters.iter().rev().copied().collect())
    }

    /// Conjugation by the half twist: `x_i ↦ x_{n-i}`. The closure is unchanged.
    pub fn flip(&self) -> Self {
        let n = self.strands as i32;
        Self::from_parts(
            self.strands,
            self.letters
                .iter()
                .map(|&e| e.signum() * (n - e.abs()))
                .collect(),
        )
    }

    pub fn shift(&self, by: usize, strands: usize) -> Result<Self> {
        if strands < self.strands + by {
            return Err(Error::InvalidWord(format!(
                "cannot shift a {}-strand word by {by} into {strands} strands",
                self.strands
            )));
        }
        let by = by as i32;
        Ok(Self::from_parts(
            strands,
            self.letters
                .iter()
                .map(|&e| e.signum() * (e.abs() + by))
                .collect(),
        ))
    }

    /// Removes the single occurrence of the top generator `x_{n-1}^{±1}`.
    pub fn destabilize(&self) -> Result<Self> {
        let top = self.strands as i32 - 1;
        let hits: Vec<usize> = (0..self.letters.len())
            .filter(|&k| self.letters[k].abs() == top)
            .collect();
        if top < 1 || hits.len() != 1 {
            return Err(Error::InvalidWord(format!(
                "destabilization needs exactly one x_{top}^(±1), found {}",
                hits.len()
            )));
        }
        let mut letters = self.letters.clone();
        letters.remove(hits[0]);
        Ok(Self::from_parts(self.strands - 1, letters))
    }

    /// Destabilizes at the top, or at the bottom after flipping.
    pub fn destabilize_any(&self) -> Option<Self> {
        if self.strands < 2 {
            return None;
        }
        let counts = self.index_counts();
        if counts[self.strands - 1] == 1 {
            return self.destabilize().ok();
        }
        if counts[1] == 1 {
            return self.flip().destabilize().ok();
        }
        None
    }

    /// Stabilization `w · x_n^{sign}` on one more strand.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let n = self.strands as i32;
        letters.push(if positive { n } else { -n });
        Self::from_parts(self.strands + 1, letters)
    }

    /// Connected-sum word `self · shift(other)` on `n + n' − 1` strands.
    pub fn concat(&self, other: &Self) -> Self {
        let strands = self.strands + other.strands - 1;
        let by = self.strands as i32 - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&e| e.signum() * (e.abs() + by)));
        Self::from_parts(strands, letters)
    }

    pub fn transform(&self, kind: &WordTransform) -> Result<Self> {
        match kind {
            WordTransform::Mirror => Ok(self.mirror()),
            WordTransform::Reverse => Ok(self.reverse()),
            WordTransform::Shift { by, strands } => self.shift(*by, *strands),
            WordTransform::Destabilize => self.destabilize(),
            WordTransform::Concat(other) => Ok(self.concat(other)),
        }
    }

    /// Cancels adjacent `x_i x_i⁻¹` pairs, including across the wrap-around.
    pub fn cyclically_reduced(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if stack.last() == Some(&-e) {
                stack.pop();
            } else {
                stack.push(e);
            }
        }
        let mut lo = 0;
        let mut hi = stack.len();
        while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Self::from_parts(self.strands, stack[lo..hi].to_vec())
    }

    /// Lexicographically least rotation of the letter sequence.
    pub fn min_rotation(letters: &[i32]) -> Vec<i32> {
        let n = letters.len();
        if n < 2 {
            return letters.to_vec();
        }
        let best = (0..n)
            .min_by(|&a, &b| {
                (0..n)
                    .map(|k| letters[(a + k) % n])
                    .cmp((0..n).map(|k| letters[(b + k) % n]))
            })
            .unwrap_or(0);
        letters[best..]
            .iter()
            .chain(&letters[..best])
            .copied()
            .collect()
    }

    /// Memo key invariant under rotation.
    pub fn canonical_key(&self) -> (usize, Vec<i32>) {
        (self.strands, Self::min_rotation(&self.letters))
    }

    /// Cyclic run-length encoding `(index, exponent)`; a run that wraps around
    /// the end is merged into the first run.
    pub fn cyclic_runs(&self) -> Vec<(usize, i32)> {
        let mut runs: Vec<(usize, i32)> = Vec::new();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize;
            match runs.last_mut() {
                Some((j, a)) if *j == i => *a += e.signum(),
                _ => runs.push((i, e.signum())),
            }
        }
        if runs.len() > 1 && runs[0].0 == runs[runs.len() - 1].0 {
            let (_, a) = runs.pop().expect("nonempty");
            runs[0].1 += a;
        }
        runs.retain(|r| r.1 != 0);
        runs
    }

    pub fn from_runs(strands: usize, runs: &[(usize, i32)]) -> Self {
        let mut letters = Vec::new();
        for &(i, a) in runs {
            let e = if a < 0 { -(i as i32) } else { i as i32 };
            letters.extend(std::iter::repeat_n(e, a.unsigned_abs() as usize));
        }
        Self::from_parts(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts `"B3: 1 2 -1"` or the caret form `"x1 x2^3 x1^-1 @4"`; in the
    /// caret form the strand count defaults to one more than the largest index.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix('B') {
            let (n, body) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing `:` in `{t}`")))?;
            let strands: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad strand count `{n}`")))?;
            let mut letters = Vec::new();
            for tok in body.split_whitespace() {
                let e: i32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("malformed token `{tok}`")))?;
                if e == 0 || e.unsigned_abs() as usize >= strands {
                    return Err(Error::Parse(format!(
                        "token `{tok}` is not a generator of B{strands}"
                    )));
                }
                letters.push(e);
            }
            return BraidWord::new(strands, letters);
        }
        let mut strands = None;
        let mut letters = Vec::new();
        for tok in t.split_whitespace() {
            if let Some(n) = tok.strip_prefix('@') {
                strands = Some(
                    n.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("malformed token `{tok}`")))?,
                );
                continue;
            }
            let body = tok
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("malformed token `{tok}`")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let idx: i32 = idx
                .parse()
                .map_err(|_| Error::Parse(format!("malformed token `{tok}`")))?;
            let exp: i32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("malformed token `{tok}`")))?;
            if idx < 1 {
                return Err(Error::Parse(format!("token `{tok}` has index below 1")));
            }
            let e = if exp < 0 { -idx } else { idx };
            letters.extend(std::iter::repeat_n(e, exp.unsigned_abs() as usize));
        }
        let max = letters
            .iter()
            .map(|e| e.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let strands = strands.unwrap_or(max + 1);
        if let Some(bad) = letters
            .iter()
            .find(|e| e.unsigned_abs() as usize >= strands)
        {
            return Err(Error::Parse(format!(
                "token `x{}` is not a generator of B{strands}",
                bad.abs()
            )));
        }
        BraidWord::new(strands, letters)
    }
}

/// A fixed generator sequence `(x_{i_1}, …, x_{i_k})` with exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Template {
    pub strands: usize,
    pub indices: Vec<usize>,
    pub exponents: Vec<i32>,
}

impl Template {
    pub fn new(strands: usize, indices: Vec<usize>, exponents: Vec<i32>) -> Result<Self> {
        if indices.len() != exponents.len() {
            return Err(Error::InvalidWord(
                "indices and exponents differ in length".into(),
            ));
        }
        if let Some(i) = indices.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::InvalidWord(format!(
                "index {i} out of range for B{strands}"
            )));
        }
        Ok(Self {
            strands,
            indices,
            exponents,
        })
    }

    /// Run-length template of a word (not cyclic).
    pub fn from_word(w: &BraidWord) -> Self {
        let mut indices = Vec::new();
        let mut exponents: Vec<i32> = Vec::new();
        for &e in w.letters() {
            let i = e.unsigned_abs() as usize;
            if indices.last() == Some(&i) {
                *exponents.last_mut().expect("paired") += e.signum();
            } else {
                indices.push(i);
                exponents.push(e.signum());
            }
        }
        Self {
            strands: w.strands(),
            indices,
            exponents,
        }
    }

    pub fn slots(&self) -> usize {
        self.indices.len()
    }

    pub fn with_exponents(&self, exponents: Vec<i32>) -> Self {
        assert_eq!(exponents.len(), self.indices.len());
        Self {
            strands: self.strands,
            indices: self.indices.clone(),
            exponents,
        }
    }

    pub fn to_word(&self) -> BraidWord {
        let runs: Vec<(usize, i32)> = self
            .indices
            .iter()
            .copied()
            .zip(self.exponents.iter().copied())
            .collect();
        BraidWord::from_runs(self.strands, &runs)
    }
}

/// Decreasing partition `a_1 ≥ … ≥ a_r ≥ 2` on `strands` strands with
/// `a_1 + … + a_r ≤ strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplePartition {
    parts: Vec<usize>,
    strands: usize,
}

impl SimplePartition {
    pub fn new(parts: Vec<usize>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidPartition("zero strands".into()));
        }
        if parts.iter().any(|&a| a < 2) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} must all be ≥ 2"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not decreasing"
            )));
        }
        let total: usize = parts.iter().sum();
        if total > strands {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} need {total} strands, only {strands} available"
            )));
        }
        Ok(Self { parts, strands })
    }

    /// Partition from the cycle type of a permutation (cycles of length ≥ 2).
    pub fn from_cycle_lengths(mut lengths: Vec<usize>, strands: usize) -> Result<Self> {
        lengths.retain(|&c| c >= 2);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(lengths, strands)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// `s_r = a_1 + … + a_r`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Word length of the canonical simple braid, `s_r − r`.
    pub fn degree(&self) -> usize {
        self.total() - self.parts.len()
    }

    /// Components of the closure, `n − s_r + r`.
    pub fn components(&self) -> usize {
        self.strands - self.degree()
    }

    /// `(x_1…x_{s_1−1})(x_{s_1+1}…x_{s_2−1})…`
    pub fn canonical_word(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.degree());
        let mut start = 1;
        for &a in &self.parts {
            letters.extend((start..start + a - 1).map(|i| i as i32));
            start += a;
        }
        BraidWord::from_parts(self.strands, letters)
    }

    /// All valid partitions on `strands` strands with total at most `max_total`.
    pub fn enumerate(strands: usize, max_total: usize) -> Vec<Self> {
        fn rec(
            budget: usize,
            cap: usize,
            prefix: &mut Vec<usize>,
            strands: usize,
            out: &mut Vec<SimplePartition>,
        ) {
            out.push(SimplePartition {
                parts: prefix.clone(),
                strands,
            });
            for a in (2..=cap.min(budget)).rev() {
                prefix.push(a);
                rec(budget - a, a, prefix, strands, out);
                prefix.pop();
            }
        }
        let limit = max_total.min(strands);
        let mut out = Vec::new();
        rec(limit, limit, &mut Vec::new(), strands, &mut out);
        out
    }
}

impl fmt::Display for SimplePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_grammar() {
        let b = w("B3: 1 2 1 2");
        assert_eq!((b.strands(), b.letters()), (3, &[1, 2, 1, 2][..]));
        assert_eq!(w("B2: 1 1 1").letters(), &[1, 1, 1]);
        assert_eq!(w("x1 x2^3 x1^-1 @4"), w("B4: 1 2 2 2 -1"));
        assert_eq!(w("x1^2 x3").strands(), 4);
        assert_eq!(w("B5:").len(), 0);
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = "B3: 3 1".parse::<BraidWord>().unwrap_err().to_string();
        assert!(err.contains("`3`"), "{err}");
        let err = "B3: 1 0".parse::<BraidWord>().unwrap_err().to_string();
        assert!(err.contains("`0`"), "{err}");
        let err = "B3: 1 q".parse::<BraidWord>().unwrap_err().to_string();
        assert!(err.contains("`q`"), "{err}");
        assert!("x1 x3 @3".parse::<BraidWord>().is_err());
        assert!("y1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn components() {
        assert_eq!(BraidWord::trivial(5).closure_components(), 5);
        assert_eq!(w("B2: 1 1 1").closure_components(), 1);
        let a = SimplePartition::new(vec![4, 3, 2, 2], 13).unwrap();
        assert_eq!(a.canonical_word().closure_components(), 6);
        assert_eq!(a.components(), 6);
    }

    #[test]
    fn canonical_simple_words() {
        let a = SimplePartition::new(vec![4, 3, 2, 2], 13).unwrap();
        assert_eq!(a.canonical_word().letters(), &[1, 2, 3, 5, 6, 8, 10]);
        assert_eq!(
            SimplePartition::new(vec![2], 2)
                .unwrap()
                .canonical_word()
                .letters(),
            &[1]
        );
        assert!(SimplePartition::new(vec![], 4)
            .unwrap()
            .canonical_word()
            .is_empty());
        assert!(SimplePartition::new(vec![4, 3], 6).is_err());
        assert!(SimplePartition::new(vec![2, 3], 9).is_err());
        assert!(SimplePartition::new(vec![1], 9).is_err());
    }

    #[test]
    fn transforms() {
        assert_eq!(w("B2: 1 1 1").mirror(), w("B2: -1 -1 -1"));
        assert_eq!(w("B3: 1 2").destabilize().unwrap(), w("B2: 1"));
        assert!(w("B3: 1 2 2").destabilize().is_err());
        assert_eq!(w("B2: 1 1 1").concat(&w("B2: 1 1")), w("B3: 1 1 1 2 2"));
        assert_eq!(w("B2: 1").shift(2, 4).unwrap(), w("B4: 3"));
        assert!(w("B2: 1").shift(2, 3).is_err());
        assert_eq!(w("B4: 1 -2 3").flip(), w("B4: 3 -2 1"));
        assert_eq!(
            w("B3: 1 2")
                .transform(&WordTransform::Concat(w("B2: 1")))
                .unwrap(),
            w("B4: 1 2 3")
        );
    }

    #[test]
    fn cyclic_reduction_and_runs() {
        assert_eq!(w("B3: -1 2 2 -2 1").cyclically_reduced(), w("B3: 2"));
        assert_eq!(w("B3: 1 -1").cyclically_reduced(), w("B3:"));
        assert_eq!(w("B3: 1 2 2 1 1").cyclic_runs(), vec![(1, 3), (2, 2)]);
        assert_eq!(w("B2: 1 1 1").cyclic_runs(), vec![(1, 3)]);
        assert_eq!(
            w("B3: 1 2 1 2").cyclic_runs(),
            vec![(1, 1), (2, 1), (1, 1), (2, 1)]
        );
        assert_eq!(BraidWord::min_rotation(&[2, 1, 3, 1]), vec![1, 2, 1, 3]);
    }

    #[test]
    fn template_round_trip() {
        let b = w("B3: 1 1 2 -1 -1 -1 2");
        let t = Template::from_word(&b);
        assert_eq!(t.indices, vec![1, 2, 1, 2]);
        assert_eq!(t.exponents, vec![2, 1, -3, 1]);
        assert_eq!(t.to_word(), b);
    }

    #[test]
    fn partition_enumeration() {
        let parts = SimplePartition::enumerate(7, 7);
        // (), (2), (3), (2,2), (4), (3,2), (5), (2,2,2), (4,2), (3,3), (6), (3,2,2), (4,3), (5,2), (7)
        assert_eq!(parts.len(), 15);
        assert!(parts.iter().all(|p| p.total() <= 7));
    }

    #[test]
    fn json_word() {
        let b = w("B3: 1 -2");
        let js = serde_json::to_string(&b).unwrap();
        assert_eq!(js, r#"{"strands":3,"letters":[1,-2]}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&js).unwrap(), b);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":2,"letters":[2]}"#).is_err());
    }
}
