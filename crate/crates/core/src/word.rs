//! Braid words in Artin generators.
//!
//! A word is a list of signed generator indices: `k` stands for `σ_k` and
//! `-k` for its inverse. The textual form is the same list written as
//! whitespace-separated integers, with band generators `a(t,s)` and
//! `a(t,s)^-1` accepted on input.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_STRANDS};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

/// Band generator `a_{ts}`: strand `t` crosses strand `s` in front of the
/// strands between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandGenerator {
    pub t: usize,
    pub s: usize,
}

fn check_strands(n: usize) -> Result<()> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return Err(Error::IndexOutOfRange { index: n as i64, n });
    }
    Ok(())
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(n)?;
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::IndexOutOfRange { index: l as i64, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Caller guarantees every letter is in range.
    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < n));
        BraidWord { n, letters }
    }

    pub fn identity(n: usize) -> Self {
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    /// `σ_i^e` for `e = ±1`, or the single-letter word `i` when signed.
    pub fn generator(n: usize, letter: i32) -> Result<Self> {
        Self::new(n, vec![letter])
    }

    /// Parses the integer word syntax, expanding band tokens.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        check_strands(n)?;
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if let Some(rest) = token.strip_prefix("a(") {
                let (body, inverse) = match rest.strip_suffix(")^-1") {
                    Some(body) => (body, true),
                    None => match rest.strip_suffix(')') {
                        Some(body) => (body, false),
                        None => return Err(parse_err(token, "unterminated band token")),
                    },
                };
                let (t, s) = body
                    .split_once(',')
                    .ok_or_else(|| parse_err(token, "band token needs two indices"))?;
                let t: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(token, "bad index"))?;
                let s: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(token, "bad index"))?;
                let band = band_to_artin(BandGenerator { t, s }, n)?;
                if inverse {
                    letters.extend(band.invert().letters);
                } else {
                    letters.extend(band.letters);
                }
            } else {
                let k: i32 = token
                    .parse()
                    .map_err(|_| parse_err(token, "expected a nonzero integer or a(t,s)"))?;
                if k == 0 {
                    return Err(parse_err(token, "generator index 0"));
                }
                if k.unsigned_abs() as usize >= n {
                    return Err(Error::IndexOutOfRange { index: k as i64, n });
                }
                letters.push(k);
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
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

    /// Sum of the letter signs.
    pub fn exp_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn permutation_image(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            // p followed by the transposition (i, i+1): swap those values.
            for x in p.raw_mut() {
                if *x as usize == i - 1 {
                    *x = i as u8;
                } else if *x as usize == i {
                    *x = (i - 1) as u8;
                }
            }
        }
        p
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            n: self.n,
            letters: out,
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters }.free_reduce())
    }

    pub fn invert(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
        .free_reduce()
    }

    pub fn power(&self, c: i64) -> Self {
        let base = if c < 0 {
            self.invert()
        } else {
            self.free_reduce()
        };
        let reps = c.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }.free_reduce()
    }

    /// The same letters viewed in a braid group with more strands.
    pub fn widen(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: n,
            });
        }
        BraidWord::new(n, self.letters.clone())
    }

    /// Uniform i.i.d. letters over all generators and signs.
    pub fn random<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> Self {
        let letters = (0..len)
            .map(|_| {
                let i = rng.random_range(1..n as i32);
                if rng.random_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord { n, letters }
    }
}

fn parse_err(token: &str, reason: &str) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

/// Expands `a_{ts}` as `(σ_{t-1} … σ_{s+1}) σ_s (σ_{s+1}⁻¹ … σ_{t-1}⁻¹)`.
pub fn band_to_artin(g: BandGenerator, n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let BandGenerator { t, s } = g;
    if s < 1 || s >= t || t > n {
        return Err(Error::IndexOutOfRange {
            index: if t > n { t as i64 } else { s as i64 },
            n,
        });
    }
    let mut letters: Vec<i32> = ((s + 1)..t).rev().map(|i| i as i32).collect();
    letters.push(s as i32);
    letters.extend(((s + 1)..t).map(|i| -(i as i32)));
    Ok(BraidWord { n, letters })
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            BraidWord::parse("1 -2 1", 3).unwrap().letters(),
            &[1, -2, 1]
        );
        assert!(BraidWord::parse("", 4).unwrap().is_empty());
        assert_eq!(BraidWord::parse("a(2,1)", 4).unwrap().letters(), &[1]);
        assert_eq!(
            BraidWord::parse("a(3,1)^-1", 4).unwrap().letters(),
            &[2, -1, -2]
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BraidWord::parse("1 x", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(BraidWord::parse("0", 3), Err(Error::Parse { .. })));
        assert!(matches!(
            BraidWord::parse("3", 3),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        ));
        assert!(matches!(
            BraidWord::parse("-4", 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse("a(1,2)", 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse("a(5,1)", 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse("a(2,1", 4),
            Err(Error::Parse { .. })
        ));
        assert!(BraidWord::parse("1", 1).is_err());
    }

    #[test]
    fn band_generators() {
        let a21 = band_to_artin(BandGenerator { t: 2, s: 1 }, 4).unwrap();
        assert_eq!(a21.letters(), &[1]);
        let a43 = band_to_artin(BandGenerator { t: 4, s: 3 }, 4).unwrap();
        assert_eq!(a43.letters(), &[3]);
        let a31 = band_to_artin(BandGenerator { t: 3, s: 1 }, 4).unwrap();
        assert_eq!(a31.exp_sum(), 1);
        assert_eq!(a31.permutation_image().images(), vec![3, 2, 1, 4]);
        for n in 2..8 {
            for i in 1..n {
                let b = band_to_artin(BandGenerator { t: i + 1, s: i }, n).unwrap();
                assert_eq!(b.letters(), &[i as i32]);
            }
        }
    }

    #[test]
    fn band_generators_are_transpositions() {
        let n = 6;
        for t in 2..=n {
            for s in 1..t {
                let b = band_to_artin(BandGenerator { t, s }, n).unwrap();
                let mut expected: Vec<usize> = (1..=n).collect();
                expected.swap(s - 1, t - 1);
                assert_eq!(b.permutation_image().images(), expected);
                assert_eq!(b.exp_sum(), 1);
            }
        }
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w(3, &[1, -1]).free_reduce().is_empty());
        assert!(w(3, &[1, 2, -2, -1]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, 1]).free_reduce().letters(), &[1, 2, 1]);
    }

    #[test]
    fn exp_sum_examples() {
        // σ_1 σ_3⁻³ σ_2² σ_1
        assert_eq!(w(4, &[1, -3, -3, -3, 2, 2, 1]).exp_sum(), 1);
        assert_eq!(BraidWord::identity(4).exp_sum(), 0);
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(3, &[1]).permutation_image().images(), vec![2, 1, 3]);
        assert!(BraidWord::identity(3).permutation_image().is_identity());
        assert_eq!(
            w(3, &[1, 2, 1]).permutation_image(),
            w(3, &[2, 1, 2]).permutation_image()
        );
    }

    #[test]
    fn power_and_invert() {
        assert_eq!(w(3, &[1]).power(3).letters(), &[1, 1, 1]);
        assert!(w(3, &[1, -2]).power(0).is_empty());
        assert_eq!(w(3, &[1, 2]).invert().letters(), &[-2, -1]);
        assert_eq!(w(3, &[1, -2]).power(-2), w(3, &[1, -2]).power(2).invert());
    }

    #[test]
    fn concat_rejects_strand_mismatch() {
        assert_eq!(
            w(3, &[1]).concat(&w(4, &[1])),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        );
    }

    fn word_strategy() -> impl Strategy<Value = BraidWord> {
        (3usize..7).prop_flat_map(|n| {
            proptest::collection::vec((1..n as i32, any::<bool>()), 0..30).prop_map(move |v| {
                BraidWord::new(
                    n,
                    v.into_iter().map(|(i, s)| if s { i } else { -i }).collect(),
                )
                .unwrap()
            })
        })
    }

    fn widen_pair(a: BraidWord, b: BraidWord) -> (BraidWord, BraidWord) {
        let n = a.strands().max(b.strands());
        (a.widen(n).unwrap(), b.widen(n).unwrap())
    }

    proptest! {
        #[test]
        fn exp_is_additive(a in word_strategy(), b in word_strategy()) {
            let (a, b) = widen_pair(a, b);
            prop_assert_eq!(a.concat(&b).unwrap().exp_sum(), a.exp_sum() + b.exp_sum());
        }

        #[test]
        fn exp_negated_by_inverse(a in word_strategy()) {
            prop_assert_eq!(a.invert().exp_sum(), -a.exp_sum());
            prop_assert!(a.concat(&a.invert()).unwrap().is_empty());
        }

        #[test]
        fn permutation_is_homomorphism(a in word_strategy(), b in word_strategy()) {
            let (a, b) = widen_pair(a, b);
            let ab = BraidWord::new(a.strands(), [a.letters(), b.letters()].concat()).unwrap();
            prop_assert_eq!(ab.permutation_image(), a.permutation_image().then(&b.permutation_image()));
        }

        #[test]
        fn free_reduce_idempotent_and_invariant(a in word_strategy()) {
            let r = a.free_reduce();
            prop_assert_eq!(r.free_reduce(), r.clone());
            prop_assert_eq!(r.exp_sum(), a.exp_sum());
            prop_assert_eq!(r.permutation_image(), a.permutation_image());
            prop_assert!(r.letters().windows(2).all(|p| p[0] != -p[1]));
        }

        #[test]
        fn text_round_trip(a in word_strategy()) {
            prop_assert_eq!(BraidWord::parse(&a.to_string(), a.strands()).unwrap(), a);
        }
    }
}
