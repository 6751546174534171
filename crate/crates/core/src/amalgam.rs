//! Cyclic amalgamation `G = B_{n1} *_C B_{n2}` of two braid groups along
//! `σ_k^p = τ_j^r`.
//!
//! Elements are syllable words: alternating runs of letters from the first
//! factor (`A`, generators `σ_i`) and the second (`B`, generators `τ_i`).
//! The amalgamated subgroup `H` is generated by `h = σ_k^p = τ_j^r`; powers
//! `h^c` are counted in units of `h` throughout.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::conjugacy::{
    are_conjugate_with, commutes_with_generator, conjugate_power_of_h_search_with, double_coset_nf,
    Limits,
};
use crate::error::{Error, Result};
use crate::garside::NormalForm;
use crate::gwp::{gwp, GwpResult};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Factor {
    A,
    B,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::A => Factor::B,
            Factor::B => Factor::A,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::A => "A",
            Factor::B => "B",
        })
    }
}

/// `⟨σ_1..σ_{n1-1}⟩ *_C ⟨τ_1..τ_{n2-1}⟩` with `σ_k^p = τ_j^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmalgamPresentation {
    pub n1: usize,
    pub n2: usize,
    pub k: usize,
    pub j: usize,
    pub p: i64,
    pub r: i64,
}

impl AmalgamPresentation {
    pub fn new(n1: usize, n2: usize, k: usize, j: usize, p: i64, r: i64) -> Result<Self> {
        let pres = AmalgamPresentation { n1, n2, k, j, p, r };
        pres.validate()?;
        Ok(pres)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n1 < 2 || self.n2 < 2 {
            return Err(Error::Param("strand counts must be at least 2".into()));
        }
        if self.k < 1 || self.k >= self.n1 {
            return Err(Error::Param(format!("k = {} out of range", self.k)));
        }
        if self.j < 1 || self.j >= self.n2 {
            return Err(Error::Param(format!("j = {} out of range", self.j)));
        }
        if self.p < 1 || self.r < 1 {
            return Err(Error::Param("p and r must be positive".into()));
        }
        Ok(())
    }

    pub fn strands(&self, f: Factor) -> usize {
        match f {
            Factor::A => self.n1,
            Factor::B => self.n2,
        }
    }

    /// The generator index and power whose product is `h` in factor `f`.
    pub fn h_generator(&self, f: Factor) -> (usize, i64) {
        match f {
            Factor::A => (self.k, self.p),
            Factor::B => (self.j, self.r),
        }
    }

    /// `h` spelled in factor `f`.
    pub fn h_word(&self, f: Factor) -> BraidWord {
        self.h_power_word(f, 1)
    }

    /// `h^c` spelled in factor `f`.
    pub fn h_power_word(&self, f: Factor, c: i64) -> BraidWord {
        let (g, e) = self.h_generator(f);
        BraidWord::generator(self.strands(f), g as i32)
            .expect("validated presentation")
            .power(e * c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Syllable {
    pub factor: Factor,
    #[serde(serialize_with = "ser_word")]
    pub word: BraidWord,
}

fn ser_word<S: serde::Serializer>(w: &BraidWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

impl Syllable {
    pub fn new(factor: Factor, word: BraidWord) -> Self {
        Syllable { factor, word }
    }

    fn is_trivial(&self) -> bool {
        NormalForm::from_word(&self.word).is_identity()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct AmalgamWord {
    pub syllables: Vec<Syllable>,
}

impl AmalgamWord {
    pub fn new(syllables: Vec<Syllable>) -> Self {
        AmalgamWord { syllables }
    }

    pub fn empty() -> Self {
        AmalgamWord::default()
    }

    pub fn single(factor: Factor, word: BraidWord) -> Self {
        AmalgamWord::new(vec![Syllable::new(factor, word)])
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Parses `"A: 1 2 -1; B: 2 2"`.
    pub fn parse(text: &str, pres: &AmalgamPresentation) -> Result<Self> {
        let mut syllables = Vec::new();
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (tag, body) = part.split_once(':').ok_or_else(|| Error::Parse {
                token: part.to_string(),
                reason: "expected `A: …` or `B: …`".into(),
            })?;
            let factor = match tag.trim() {
                "A" | "a" => Factor::A,
                "B" | "b" => Factor::B,
                other => {
                    return Err(Error::Parse {
                        token: other.to_string(),
                        reason: "factor must be A or B".into(),
                    })
                }
            };
            let word = BraidWord::parse(body, pres.strands(factor))?;
            syllables.push(Syllable::new(factor, word));
        }
        Ok(AmalgamWord { syllables })
    }

    pub fn inverse(&self) -> Self {
        AmalgamWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.factor, s.word.invert()))
                .collect(),
        }
    }

    pub fn concat(&self, other: &AmalgamWord) -> Self {
        let mut syllables = self.syllables.clone();
        syllables.extend(other.syllables.iter().cloned());
        AmalgamWord { syllables }
    }

    /// The word rotated to start at syllable `i`.
    pub fn rotate(&self, i: usize) -> Self {
        let mut syllables = self.syllables.clone();
        if !syllables.is_empty() {
            syllables.rotate_left(i % self.syllables.len());
        }
        AmalgamWord { syllables }
    }

    /// Whether adjacent syllables alternate and none is trivial.
    pub fn is_normalized(&self) -> bool {
        self.syllables
            .windows(2)
            .all(|w| w[0].factor != w[1].factor)
            && self.syllables.iter().all(|s| !s.is_trivial())
    }
}

impl fmt::Display for AmalgamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            if s.word.is_empty() {
                write!(f, "{}:", s.factor)?;
            } else {
                write!(f, "{}: {}", s.factor, s.word)?;
            }
        }
        Ok(())
    }
}

fn join(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.concat(b)
        .expect("syllables of one factor share a strand count")
}

/// Merges adjacent syllables of the same factor and drops trivial ones
/// until the word alternates.
pub fn normalize_syllables(w: &AmalgamWord) -> AmalgamWord {
    let mut out: Vec<Syllable> = Vec::with_capacity(w.len());
    for s in &w.syllables {
        let cur = match out.last() {
            Some(top) if top.factor == s.factor => {
                let top = out.pop().expect("peeked");
                Syllable::new(s.factor, join(&top.word, &s.word))
            }
            _ => s.clone(),
        };
        // Dropping a trivial syllable leaves the stack alternating: its
        // top is in the other factor.
        if !cur.is_trivial() {
            out.push(cur);
        }
    }
    AmalgamWord { syllables: out }
}

/// Result of [`amalgam_reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// Reduced word; empty when the element lies in `H`.
    pub word: AmalgamWord,
    /// `Some(c)` when the element collapsed to `h^c`.
    pub h_power: Option<i64>,
}

impl Reduction {
    /// The reduced element as a syllable word.
    pub fn rebuild(&self, pres: &AmalgamPresentation) -> AmalgamWord {
        match self.h_power {
            Some(0) => AmalgamWord::empty(),
            Some(c) => AmalgamWord::single(Factor::A, pres.h_power_word(Factor::A, c)),
            None => self.word.clone(),
        }
    }

    /// Syllable length of the reduced element.
    pub fn length(&self) -> usize {
        match self.h_power {
            Some(0) => 0,
            Some(_) => 1,
            None => self.word.len(),
        }
    }
}

/// Rewrites syllables lying in `H` into the other factor and merges, until
/// no syllable lies in `H` or the whole word collapses into `H`.
///
/// The scan keeps a stack of syllables already known not to lie in `H`
/// and a queue of syllables still to test. A syllable found to equal `h^c`
/// is respelled in the other factor and merged with both neighbours, which
/// then becomes the next syllable tested.
pub fn amalgam_reduce(w: &AmalgamWord, pres: &AmalgamPresentation) -> Result<Reduction> {
    pres.validate()?;
    let w = normalize_syllables(w);
    let mut done: Vec<Syllable> = Vec::with_capacity(w.len());
    let mut todo: VecDeque<Syllable> = w.syllables.into();
    if todo.is_empty() {
        return Ok(Reduction {
            word: AmalgamWord::empty(),
            h_power: Some(0),
        });
    }
    while let Some(cur) = todo.pop_front() {
        let h = pres.h_word(cur.factor);
        match gwp(&h, &cur.word)? {
            GwpResult::NotAPower => done.push(cur),
            GwpResult::Power { c } => {
                if done.is_empty() && todo.is_empty() {
                    return Ok(Reduction {
                        word: AmalgamWord::empty(),
                        h_power: Some(c),
                    });
                }
                let target = cur.factor.other();
                let mut word = pres.h_power_word(target, c);
                if let Some(left) = done.pop_if(|s| s.factor == target) {
                    word = join(&left.word, &word);
                }
                if let Some(right) = todo.pop_front_if(|s| s.factor == target) {
                    word = join(&word, &right.word);
                }
                todo.push_front(Syllable::new(target, word));
            }
        }
    }
    Ok(Reduction {
        word: AmalgamWord { syllables: done },
        h_power: None,
    })
}

pub fn amalgam_word_is_trivial(w: &AmalgamWord, pres: &AmalgamPresentation) -> Result<bool> {
    Ok(amalgam_reduce(w, pres)?.h_power == Some(0))
}

pub fn amalgam_equal(u: &AmalgamWord, v: &AmalgamWord, pres: &AmalgamPresentation) -> Result<bool> {
    amalgam_word_is_trivial(&u.concat(&v.inverse()), pres)
}

/// Conjugates a reduced word until its first and last syllables lie in
/// different factors (or it has at most one syllable).
pub fn cyclically_reduce(w: &AmalgamWord, pres: &AmalgamPresentation) -> Result<AmalgamWord> {
    let mut red = amalgam_reduce(w, pres)?;
    loop {
        if red.h_power.is_some() {
            return Ok(red.rebuild(pres));
        }
        let syl = &red.word.syllables;
        if syl.len() < 2 || syl[0].factor != syl[syl.len() - 1].factor {
            return Ok(red.word);
        }
        // last · w · last⁻¹
        let last = &syl[syl.len() - 1];
        let mut next = vec![Syllable::new(syl[0].factor, join(&last.word, &syl[0].word))];
        next.extend(syl[1..syl.len() - 1].iter().cloned());
        red = amalgam_reduce(&AmalgamWord::new(next), pres)?;
    }
}

/// `r·exp` over first-factor syllables plus `p·exp` over second-factor
/// syllables: a homomorphism `G → ℤ`, hence a conjugacy invariant.
pub fn amalgam_exp_invariant(w: &AmalgamWord, pres: &AmalgamPresentation) -> i64 {
    w.syllables
        .iter()
        .map(|s| match s.factor {
            Factor::A => pres.r * s.word.exp_sum(),
            Factor::B => pres.p * s.word.exp_sum(),
        })
        .sum()
}

/// Rotation indices and `H`-power with `h^m · rot(u) · h^{-m} = rot(v)`,
/// relative to the cyclically reduced forms of the inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjugacyWitness {
    pub shift_u: usize,
    pub shift_v: usize,
    pub h_power: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmalgamConjugacyCertificate {
    pub verdict: bool,
    pub witness: Option<ConjugacyWitness>,
}

impl AmalgamConjugacyCertificate {
    fn no() -> Self {
        AmalgamConjugacyCertificate {
            verdict: false,
            witness: None,
        }
    }

    fn yes(witness: Option<ConjugacyWitness>) -> Self {
        AmalgamConjugacyCertificate {
            verdict: true,
            witness,
        }
    }
}

pub fn amalgam_are_conjugate(
    u: &AmalgamWord,
    v: &AmalgamWord,
    pres: &AmalgamPresentation,
) -> Result<AmalgamConjugacyCertificate> {
    amalgam_are_conjugate_with(u, v, pres, &Limits::default())
}

pub fn amalgam_are_conjugate_with(
    u: &AmalgamWord,
    v: &AmalgamWord,
    pres: &AmalgamPresentation,
    limits: &Limits,
) -> Result<AmalgamConjugacyCertificate> {
    pres.validate()?;
    if amalgam_exp_invariant(u, pres) != amalgam_exp_invariant(v, pres) {
        return Ok(AmalgamConjugacyCertificate::no());
    }
    let u = cyclically_reduce(u, pres)?;
    let v = cyclically_reduce(v, pres)?;
    if u.len() != v.len() {
        return Ok(AmalgamConjugacyCertificate::no());
    }
    match u.len() {
        0 => Ok(AmalgamConjugacyCertificate::yes(None)),
        1 => single_syllable_conjugate(&u.syllables[0], &v.syllables[0], pres, limits),
        len => {
            for i in 0..len {
                let a = u.rotate(i);
                for jv in 0..len {
                    let b = v.rotate(jv);
                    if a.syllables[0].factor != b.syllables[0].factor {
                        continue;
                    }
                    if let Some(m) = h_conjugates(&a.syllables, &b.syllables, pres, limits)? {
                        return Ok(AmalgamConjugacyCertificate::yes(Some(ConjugacyWitness {
                            shift_u: i,
                            shift_v: jv,
                            h_power: m,
                        })));
                    }
                }
            }
            Ok(AmalgamConjugacyCertificate::no())
        }
    }
}

fn single_syllable_conjugate(
    u: &Syllable,
    v: &Syllable,
    pres: &AmalgamPresentation,
    limits: &Limits,
) -> Result<AmalgamConjugacyCertificate> {
    if u.factor == v.factor {
        let verdict = are_conjugate_with(&u.word, &v.word, limits)?;
        return Ok(AmalgamConjugacyCertificate {
            verdict,
            witness: None,
        });
    }
    // u ~ h^c in its factor and h^c ~ v in the other: distinct powers of h
    // are never conjugate, so the chain through H has a single link.
    let (g, e) = pres.h_generator(u.factor);
    let Some(c) = conjugate_power_of_h_search_with(&u.word, g, e, limits)? else {
        return Ok(AmalgamConjugacyCertificate::no());
    };
    let h_other = pres.h_power_word(v.factor, c);
    let verdict = are_conjugate_with(&v.word, &h_other, limits)?;
    Ok(AmalgamConjugacyCertificate {
        verdict,
        witness: None,
    })
}

/// Finds `m` with `h^m · a_1…a_n · h^{-m} = b_1…b_n`, where `a_1` and `b_1`
/// lie in the same factor.
fn h_conjugates(
    a: &[Syllable],
    b: &[Syllable],
    pres: &AmalgamPresentation,
    limits: &Limits,
) -> Result<Option<i64>> {
    debug_assert_eq!(a.len(), b.len());
    let f = a[0].factor;
    let (g, e) = pres.h_generator(f);
    let a1 = NormalForm::from_word(&a[0].word);
    if commutes_with_generator(&a1, g) {
        // b_1⁻¹ a_1 = h^c, then h^m (h^c a_2) a_3 … h^{-m} = b_2 … b_n
        let quotient = join(&b[0].word.invert(), &a[0].word);
        let GwpResult::Power { c } = gwp(&pres.h_word(f), &quotient)? else {
            return Ok(None);
        };
        if a.len() == 1 {
            return Ok((c == 0).then_some(0));
        }
        let mut rest = a[1..].to_vec();
        rest[0].word = join(&pres.h_power_word(rest[0].factor, c), &rest[0].word);
        return h_conjugates(&rest, &b[1..], pres, limits);
    }
    let b1 = NormalForm::from_word(&b[0].word);
    let Some((m, _)) = double_coset_nf(&a1, &b1, g, e, limits)? else {
        return Ok(None);
    };
    let last = a[a.len() - 1].factor;
    let mut lhs = vec![Syllable::new(f, pres.h_power_word(f, m))];
    lhs.extend(a.iter().cloned());
    lhs.push(Syllable::new(last, pres.h_power_word(last, -m)));
    let equal = amalgam_equal(&AmalgamWord::new(lhs), &AmalgamWord::new(b.to_vec()), pres)?;
    Ok(equal.then_some(m))
}

/// Whether the syllable word lies in its factor's copy of `H`.
pub fn syllable_in_h(s: &Syllable, pres: &AmalgamPresentation) -> Result<bool> {
    Ok(matches!(
        gwp(&pres.h_word(s.factor), &s.word)?,
        GwpResult::Power { .. }
    ))
}

/// Checks `h^m · rot_i(u) · h^{-m} = rot_j(v)` for a witness.
pub fn verify_witness(
    u_cyclic: &AmalgamWord,
    v_cyclic: &AmalgamWord,
    witness: &ConjugacyWitness,
    pres: &AmalgamPresentation,
) -> Result<bool> {
    let a = u_cyclic.rotate(witness.shift_u);
    let b = v_cyclic.rotate(witness.shift_v);
    let lhs = AmalgamWord::single(Factor::A, pres.h_power_word(Factor::A, witness.h_power))
        .concat(&a)
        .concat(&AmalgamWord::single(
            Factor::A,
            pres.h_power_word(Factor::A, -witness.h_power),
        ));
    amalgam_equal(&lhs, &b, pres)
}
