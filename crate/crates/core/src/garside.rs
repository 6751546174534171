//! Left-canonical (Garside) normal form.
//!
//! Every braid is written uniquely as `Δ^r F_1 … F_k` where each `F_i` is a
//! permutation braid other than the identity and `Δ`, and every adjacent
//! pair is left-weighted: the starting set of `F_{i+1}` is contained in the
//! finishing set of `F_i`.
//!
//! A permutation braid is stored as its [`Permutation`]; the positive braid
//! in which each pair of strands crosses at most once is determined by it.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::BraidWord;

/// The fundamental word `(σ_1 … σ_{n-1})(σ_1 … σ_{n-2}) … (σ_1)`.
pub fn delta(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { index: n as i64, n });
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in (1..n).rev() {
        letters.extend(1..=top as i32);
    }
    BraidWord::new(n, letters)
}

/// Generator indices `i` (one-based) such that `σ_i` is a prefix of the
/// permutation braid.
pub fn starting_set(f: &Permutation) -> Vec<usize> {
    let p = f.raw();
    (0..p.len().saturating_sub(1))
        .filter(|&i| p[i] > p[i + 1])
        .map(|i| i + 1)
        .collect()
}

/// Generator indices `i` such that `σ_i` is a suffix of the permutation braid.
pub fn finishing_set(f: &Permutation) -> Vec<usize> {
    starting_set(&f.inverse())
}

/// Whether the pair `(first, second)` is left-weighted.
pub fn is_left_weighted(first: &Permutation, second: &Permutation) -> Result<bool> {
    if first.len() != second.len() {
        return Err(Error::StrandMismatch {
            left: first.len(),
            right: second.len(),
        });
    }
    let inv = first.inverse();
    let (a, b) = (inv.raw(), second.raw());
    Ok((0..b.len().saturating_sub(1)).all(|i| b[i] <= b[i + 1] || a[i] > a[i + 1]))
}

/// Number of crossings of the permutation braid.
pub fn crossing_count(f: &Permutation) -> usize {
    let p = f.raw();
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// A positive word for the permutation braid.
pub fn simple_to_word(f: &Permutation) -> BraidWord {
    let mut p = f.raw().to_vec();
    let mut letters = Vec::new();
    'outer: loop {
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                letters.push(i as i32 + 1);
                p.swap(i, i + 1);
                continue 'outer;
            }
        }
        break;
    }
    BraidWord::from_letters_unchecked(f.len(), letters)
}

fn tau(f: &Permutation) -> Permutation {
    let n = f.len();
    let p = f.raw();
    Permutation::from_raw(
        (0..n)
            .map(|i| (n - 1 - p[n - 1 - i] as usize) as u8)
            .collect(),
    )
}

fn tau_power(f: &Permutation, e: i64) -> Permutation {
    if e.rem_euclid(2) == 1 {
        tau(f)
    } else {
        f.clone()
    }
}

/// `X` with `X · f = Δ`.
fn left_complement(f: &Permutation) -> Permutation {
    let n = f.len();
    let inv = f.inverse();
    Permutation::from_raw((0..n).map(|i| inv.raw()[n - 1 - i]).collect())
}

fn is_delta(f: &Permutation) -> bool {
    let n = f.len();
    f.raw()
        .iter()
        .enumerate()
        .all(|(i, &x)| x as usize == n - 1 - i)
}

/// Moves generators from the front of `b` onto the end of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut a_inv = a.inverse();
    let mut changed = false;
    loop {
        let bp = b.raw();
        let ai = a_inv.raw();
        let Some(i) = (0..n - 1).find(|&i| bp[i] > bp[i + 1] && ai[i] < ai[i + 1]) else {
            return changed;
        };
        // a <- a·σ_i swaps the values i, i+1 of a; b <- σ_i⁻¹·b swaps entries.
        let (x, y) = (ai[i] as usize, ai[i + 1] as usize);
        a.raw_mut().swap(x, y);
        a_inv.raw_mut().swap(i, i + 1);
        b.raw_mut().swap(i, i + 1);
        changed = true;
    }
}

/// Incremental construction of a normal form by right multiplication.
#[derive(Debug, Clone)]
pub(crate) struct Builder {
    n: usize,
    delta: i64,
    factors: Vec<Permutation>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Self {
        Builder {
            n,
            delta: 0,
            factors: Vec::new(),
        }
    }

    pub(crate) fn from_nf(nf: &NormalForm) -> Self {
        Builder {
            n: nf.n,
            delta: nf.delta,
            factors: nf.factors.clone(),
        }
    }

    pub(crate) fn push_delta(&mut self, e: i64) -> &mut Self {
        self.delta += e;
        if e.rem_euclid(2) == 1 {
            for f in &mut self.factors {
                *f = tau(f);
            }
        }
        self
    }

    pub(crate) fn push_simple(&mut self, f: Permutation) -> &mut Self {
        debug_assert_eq!(f.len(), self.n);
        if f.is_identity() {
            return self;
        }
        self.factors.push(f);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|f| is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        self
    }

    pub(crate) fn push_simple_inverse(&mut self, f: &Permutation) -> &mut Self {
        // W·f⁻¹ = W·Δ⁻¹·X = Δ⁻¹·τ(W)·X with X·f = Δ
        self.push_delta(-1);
        self.push_simple(left_complement(f))
    }

    pub(crate) fn push_letter(&mut self, l: i32) -> &mut Self {
        let t = Permutation::transposition(self.n, l.unsigned_abs() as usize);
        if l > 0 {
            self.push_simple(t)
        } else {
            self.push_simple_inverse(&t)
        }
    }

    pub(crate) fn push_word(&mut self, w: &BraidWord) -> &mut Self {
        debug_assert_eq!(w.strands(), self.n);
        for &l in w.letters() {
            self.push_letter(l);
        }
        self
    }

    pub(crate) fn push_nf(&mut self, nf: &NormalForm) -> &mut Self {
        debug_assert_eq!(nf.n, self.n);
        if self.factors.is_empty() {
            self.delta += nf.delta;
            self.factors = nf.factors.clone();
            return self;
        }
        self.push_delta(nf.delta);
        for f in &nf.factors {
            self.push_simple(f.clone());
        }
        self
    }

    pub(crate) fn push_nf_inverse(&mut self, nf: &NormalForm) -> &mut Self {
        for f in nf.factors.iter().rev() {
            self.push_simple_inverse(f);
        }
        self.push_delta(-nf.delta)
    }

    pub(crate) fn finish(&self) -> NormalForm {
        NormalForm {
            n: self.n,
            delta: self.delta,
            factors: self.factors.clone(),
        }
    }
}

/// Canonical representative `Δ^r F_1 … F_k` of a braid.
///
/// Equality, ordering and hashing are on `(n, r, factor permutations)`, so
/// normal forms serve directly as set keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    delta: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            delta: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: usize, r: i64) -> Self {
        NormalForm {
            n,
            delta: r,
            factors: Vec::new(),
        }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        Builder::new(w.strands()).push_word(w).finish()
    }

    /// Builds the normal form of `Δ^r F_1 … F_k` for arbitrary permutation
    /// braids `F_i` (not necessarily left-weighted).
    pub fn from_factors(n: usize, r: i64, factors: &[Permutation]) -> Result<Self> {
        let mut b = Builder::new(n);
        b.push_delta(r);
        for f in factors {
            if f.len() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: f.len(),
                });
            }
            b.push_simple(f.clone());
        }
        Ok(b.finish())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn delta_exponent(&self) -> i64 {
        self.delta
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta
    }

    pub fn sup(&self) -> i64 {
        self.delta + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    pub fn exp_sum(&self) -> i64 {
        let half = (self.n * (self.n - 1) / 2) as i64;
        self.delta * half
            + self
                .factors
                .iter()
                .map(|f| crossing_count(f) as i64)
                .sum::<i64>()
    }

    pub fn permutation_image(&self) -> Permutation {
        let mut p = if self.delta.rem_euclid(2) == 1 {
            Permutation::reversal(self.n)
        } else {
            Permutation::identity(self.n)
        };
        for f in &self.factors {
            p = p.then(f);
        }
        p
    }

    /// The word `Δ^r F_1 … F_k` with `Δ^r` spelled via [`delta`].
    pub fn to_word(&self) -> BraidWord {
        let mut letters: Vec<i32> = Vec::new();
        let d = delta(self.n).expect("normal form has at least two strands");
        letters.extend(d.power(self.delta).letters());
        for f in &self.factors {
            letters.extend(simple_to_word(f).letters());
        }
        BraidWord::from_letters_unchecked(self.n, letters)
    }

    pub fn mul(&self, other: &NormalForm) -> Result<NormalForm> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Builder::from_nf(self).push_nf(other).finish())
    }

    pub fn inverse(&self) -> NormalForm {
        Builder::new(self.n).push_nf_inverse(self).finish()
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &NormalForm) -> Result<NormalForm> {
        if self.n != g.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: g.n,
            });
        }
        Ok(Builder::new(self.n)
            .push_nf_inverse(g)
            .push_nf(self)
            .push_nf(g)
            .finish())
    }

    /// `s⁻¹ · self · s` for a permutation braid `s`.
    pub fn conjugate_by_simple(&self, s: &Permutation) -> NormalForm {
        Builder::new(self.n)
            .push_simple_inverse(s)
            .push_nf(self)
            .push_simple(s.clone())
            .finish()
    }

    /// Conjugation by `Δ`, i.e. `Δ⁻¹ · self · Δ`.
    pub fn tau(&self) -> NormalForm {
        NormalForm {
            n: self.n,
            delta: self.delta,
            factors: self.factors.iter().map(tau).collect(),
        }
    }

    /// Parses the `D^r | p1 | p2 |` rendering for braids on `n` strands.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut parts = text.split('|').map(str::trim);
        let head = parts.next().unwrap_or_default();
        let r: i64 = head
            .strip_prefix("D^")
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| Error::Parse {
                token: head.to_string(),
                reason: "expected D^r".into(),
            })?;
        let mut factors = Vec::new();
        for part in parts.filter(|p| !p.is_empty()) {
            let images = part
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        token: t.to_string(),
                        reason: "expected a permutation image".into(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let perm = Permutation::from_images(&images)?;
            if perm.len() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: perm.len(),
                });
            }
            factors.push(perm);
        }
        let nf = NormalForm {
            n,
            delta: r,
            factors,
        };
        if !nf.is_valid() {
            return Err(Error::Parse {
                token: text.to_string(),
                reason: "factors are not in left normal form".into(),
            });
        }
        Ok(nf)
    }

    /// Checks the structural invariants of a normal form.
    pub fn is_valid(&self) -> bool {
        self.factors
            .iter()
            .all(|f| !f.is_identity() && !is_delta(f))
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]).unwrap_or(false))
    }
}

/// Shifts a permutation braid by conjugation with `Δ^e`.
pub(crate) fn tau_factor(f: &Permutation, e: i64) -> Permutation {
    tau_power(f, e)
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta)?;
        for p in &self.factors {
            write!(f, " {p} |")?;
        }
        Ok(())
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::from_word(w)
}

/// Decides whether two words represent the same braid.
pub fn compare(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u) == normal_form(v))
}

pub fn inf_sup(w: &BraidWord) -> (i64, i64) {
    let nf = normal_form(w);
    (nf.inf(), nf.sup())
}

/// Every permutation of `n` points, in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation::from_raw(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i)
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta(3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(delta(2).unwrap().letters(), &[1]);
        assert_eq!(delta(4).unwrap().exp_sum(), 6);
        assert_eq!(
            delta(5).unwrap().permutation_image(),
            Permutation::reversal(5)
        );
        assert!(delta(1).is_err());
    }

    #[test]
    fn simple_words_round_trip() {
        for n in 2..6 {
            for p in all_permutations(n) {
                let word = simple_to_word(&p);
                assert_eq!(word.permutation_image(), p);
                assert_eq!(word.len(), crossing_count(&p));
            }
        }
    }

    #[test]
    fn left_weighted_examples() {
        assert!(is_left_weighted(&s(3, 1), &s(3, 1)).unwrap());
        assert!(!is_left_weighted(&s(3, 1), &s(3, 2)).unwrap());
        let d = Permutation::reversal(4);
        for f in all_permutations(4) {
            // the finishing set of Δ is full
            assert!(is_left_weighted(&d, &f).unwrap());
            // X·F = Δ is simple, so every prefix of F can move into X
            let x = left_complement(&f);
            assert_eq!(x.then(&f), d);
            assert_eq!(is_left_weighted(&x, &f).unwrap(), f.is_identity());
        }
        assert!(is_left_weighted(&s(3, 1), &s(4, 1)).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&w(3, &[1, 2, 1]));
        assert_eq!((nf.delta_exponent(), nf.canonical_length()), (1, 0));
        assert!(normal_form(&w(3, &[1, -1])).is_identity());
        let nf = normal_form(&w(3, &[1, 1]));
        assert_eq!(nf.delta_exponent(), 0);
        assert_eq!(nf.factors(), &[s(3, 1), s(3, 1)]);
    }

    #[test]
    fn compare_examples() {
        assert!(compare(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(compare(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!compare(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(compare(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn inf_sup_examples() {
        let d = delta(3).unwrap();
        assert_eq!(inf_sup(&d), (1, 1));
        assert_eq!(inf_sup(&BraidWord::identity(3)), (0, 0));
        assert_eq!(inf_sup(&d.invert()), (-1, -1));
        assert!(compare(&d.concat(&d.invert()).unwrap(), &BraidWord::identity(3)).unwrap());
    }

    #[test]
    fn inverse_generator_form() {
        // σ_1⁻¹ = Δ⁻¹ · σ_1σ_2 in B_3
        let nf = normal_form(&w(3, &[-1]));
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.sup(), 0);
        assert_eq!(nf.exp_sum(), -1);
    }

    #[test]
    fn display_and_parse() {
        let nf = normal_form(&w(3, &[1, 2, 1]));
        assert_eq!(nf.to_string(), "D^1 |");
        let nf = normal_form(&w(3, &[1, 1, -2]));
        let text = nf.to_string();
        assert_eq!(NormalForm::parse(&text, 3).unwrap(), nf);
        assert!(NormalForm::parse("D^0 | 1 2 3 |", 3).is_err());
        assert!(NormalForm::parse("X^0 |", 3).is_err());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
    }
}
