//! Conjugacy in `B_n`: cycling, decycling, super summit sets, and the
//! searches for conjugation by powers of a single generator.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::garside::{all_permutations, tau_factor, Builder, NormalForm};
use crate::perm::Permutation;
use crate::word::BraidWord;

/// Caps that turn runaway searches into [`Error::ResourceLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements in a super summit set.
    pub sss_cap: usize,
    /// Maximum number of conjugation steps in one direction of a
    /// generator-power search.
    pub search_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            sss_cap: 1_000_000,
            search_steps: 1_000_000,
        }
    }
}

/// Conjugates of an element with maximal inf and minimal sup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummitSet {
    pub elements: BTreeSet<NormalForm>,
    pub achieved_inf: i64,
    pub achieved_sup: i64,
}

impl SummitSet {
    pub fn contains(&self, nf: &NormalForm) -> bool {
        self.elements.contains(nf)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerSearchResult {
    None,
    Finite(BTreeSet<i64>),
    AllIntegers,
}

/// `Δ^r A_2 … A_k τ^r(A_1)`: conjugation by `τ^r(A_1)`.
pub fn cycling(nf: &NormalForm) -> NormalForm {
    let Some((first, rest)) = nf.factors().split_first() else {
        return nf.clone();
    };
    let r = nf.delta_exponent();
    let mut b = Builder::new(nf.strands());
    b.push_nf(&NormalForm::from_factors(nf.strands(), r, rest).expect("strand count"));
    b.push_simple(tau_factor(first, r));
    b.finish()
}

/// `Δ^r τ^r(A_k) A_1 … A_{k-1}`: conjugation by `A_k⁻¹`.
pub fn decycling(nf: &NormalForm) -> NormalForm {
    let Some((last, rest)) = nf.factors().split_last() else {
        return nf.clone();
    };
    let r = nf.delta_exponent();
    let mut b = Builder::new(nf.strands());
    b.push_delta(r);
    b.push_simple(tau_factor(last, r));
    for f in rest {
        b.push_simple(f.clone());
    }
    b.finish()
}

/// Cycles until inf is maximal, then decycles until sup is minimal. The
/// result lies in the super summit set of `nf`.
pub fn summit_representative(nf: &NormalForm) -> NormalForm {
    let n = nf.strands();
    let window = n * (n - 1) / 2;
    let mut x = nf.clone();
    'inf: loop {
        let mut y = x.clone();
        for _ in 0..window {
            y = cycling(&y);
            if y.inf() > x.inf() {
                x = y;
                continue 'inf;
            }
        }
        break;
    }
    'sup: loop {
        let mut y = x.clone();
        for _ in 0..window {
            y = decycling(&y);
            if y.sup() < x.sup() {
                debug_assert!(y.inf() >= x.inf());
                x = y;
                continue 'sup;
            }
        }
        break;
    }
    x
}

pub fn super_summit_set(w: &BraidWord) -> Result<SummitSet> {
    super_summit_set_with(w, &Limits::default())
}

pub fn super_summit_set_with(w: &BraidWord, limits: &Limits) -> Result<SummitSet> {
    summit_set_of(&NormalForm::from_word(w), limits)
}

/// Saturates the super summit set from one of its elements by conjugating
/// with every permutation braid.
pub fn summit_set_of(nf: &NormalForm, limits: &Limits) -> Result<SummitSet> {
    let rep = summit_representative(nf);
    let (inf, sup) = (rep.inf(), rep.sup());
    let mut elements = BTreeSet::new();
    elements.insert(rep.clone());
    if rep.canonical_length() == 0 {
        return Ok(SummitSet {
            elements,
            achieved_inf: inf,
            achieved_sup: sup,
        });
    }
    let simples: Vec<Permutation> = all_permutations(nf.strands())
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();
    let mut queue = VecDeque::from([rep]);
    while let Some(x) = queue.pop_front() {
        for s in &simples {
            let y = x.conjugate_by_simple(s);
            if y.inf() == inf && y.sup() == sup && !elements.contains(&y) {
                if elements.len() >= limits.sss_cap {
                    return Err(Error::ResourceLimit {
                        limit: limits.sss_cap,
                    });
                }
                elements.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(SummitSet {
        elements,
        achieved_inf: inf,
        achieved_sup: sup,
    })
}

pub fn are_conjugate(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    are_conjugate_with(u, v, &Limits::default())
}

pub fn are_conjugate_with(u: &BraidWord, v: &BraidWord, limits: &Limits) -> Result<bool> {
    check_strands(u, v)?;
    if u.exp_sum() != v.exp_sum() {
        return Ok(false);
    }
    nf_conjugate(&NormalForm::from_word(u), &NormalForm::from_word(v), limits)
}

pub(crate) fn nf_conjugate(u: &NormalForm, v: &NormalForm, limits: &Limits) -> Result<bool> {
    if u.exp_sum() != v.exp_sum() {
        return Ok(false);
    }
    let ru = summit_representative(u);
    let rv = summit_representative(v);
    if (ru.inf(), ru.sup()) != (rv.inf(), rv.sup()) {
        return Ok(false);
    }
    if ru == rv {
        return Ok(true);
    }
    Ok(summit_set_of(&ru, limits)?.contains(&rv))
}

/// Finds the unique `c` with `w` conjugate to `σ_k^{pc}`, if any.
pub fn conjugate_power_of_h_search(w: &BraidWord, k: usize, p: i64) -> Result<Option<i64>> {
    conjugate_power_of_h_search_with(w, k, p, &Limits::default())
}

pub fn conjugate_power_of_h_search_with(
    w: &BraidWord,
    k: usize,
    p: i64,
    limits: &Limits,
) -> Result<Option<i64>> {
    check_generator(w.strands(), k)?;
    if p < 1 {
        return Err(Error::Param(format!("power {p} must be positive")));
    }
    let e = w.exp_sum();
    if e % p != 0 {
        return Ok(None);
    }
    let c = e / p;
    let target = BraidWord::generator(w.strands(), k as i32)?.power(e);
    Ok(are_conjugate_with(w, &target, limits)?.then_some(c))
}

pub(crate) fn commutes_with_generator(a: &NormalForm, i: usize) -> bool {
    let s = Permutation::transposition(a.strands(), i);
    let mut left = Builder::new(a.strands());
    left.push_simple(s.clone()).push_nf(a);
    let mut right = Builder::from_nf(a);
    right.push_simple(s);
    left.finish() == right.finish()
}

/// Every `k` with `σ_i^{-k} · a · σ_i^k = b`.
pub fn generator_power_conjugacy_search(
    a: &BraidWord,
    b: &BraidWord,
    i: usize,
) -> Result<PowerSearchResult> {
    generator_power_conjugacy_search_with(a, b, i, &Limits::default())
}

pub fn generator_power_conjugacy_search_with(
    a: &BraidWord,
    b: &BraidWord,
    i: usize,
    limits: &Limits,
) -> Result<PowerSearchResult> {
    check_strands(a, b)?;
    check_generator(a.strands(), i)?;
    power_search_nf(
        &NormalForm::from_word(a),
        &NormalForm::from_word(b),
        i,
        limits,
    )
}

pub(crate) fn power_search_nf(
    a: &NormalForm,
    b: &NormalForm,
    i: usize,
    limits: &Limits,
) -> Result<PowerSearchResult> {
    if a.exp_sum() != b.exp_sum() {
        return Ok(PowerSearchResult::None);
    }
    if commutes_with_generator(a, i) {
        return Ok(if a == b {
            PowerSearchResult::AllIntegers
        } else {
            PowerSearchResult::None
        });
    }
    let floor = a.inf().min(b.inf());
    if let Some(k) = walk_conjugates(a, b, i, floor, limits)? {
        return Ok(PowerSearchResult::Finite(BTreeSet::from([k])));
    }
    if let Some(k) = walk_conjugates(b, a, i, floor, limits)? {
        return Ok(PowerSearchResult::Finite(BTreeSet::from([-k])));
    }
    Ok(PowerSearchResult::None)
}

/// Walks `σ_i^{-j} · from · σ_i^j` for `j = 0, 1, …` until `to` is hit,
/// inf drops below `floor`, or a form repeats.
fn walk_conjugates(
    from: &NormalForm,
    to: &NormalForm,
    i: usize,
    floor: i64,
    limits: &Limits,
) -> Result<Option<i64>> {
    let s = Permutation::transposition(from.strands(), i);
    let mut seen = HashSet::new();
    let mut x = from.clone();
    for j in 0..=limits.search_steps as i64 {
        if &x == to {
            return Ok(Some(j));
        }
        if x.inf() < floor || !seen.insert(x.clone()) {
            return Ok(None);
        }
        x = x.conjugate_by_simple(&s);
    }
    Err(Error::ResourceLimit {
        limit: limits.search_steps,
    })
}

/// Finds `(m, n)` with `σ_k^{pm} · u · σ_k^{pn} = v`.
pub fn double_coset_search(
    u: &BraidWord,
    v: &BraidWord,
    k: usize,
    p: i64,
) -> Result<Option<(i64, i64)>> {
    double_coset_search_with(u, v, k, p, &Limits::default())
}

pub fn double_coset_search_with(
    u: &BraidWord,
    v: &BraidWord,
    k: usize,
    p: i64,
    limits: &Limits,
) -> Result<Option<(i64, i64)>> {
    check_strands(u, v)?;
    check_generator(u.strands(), k)?;
    if p < 1 {
        return Err(Error::Param(format!("power {p} must be positive")));
    }
    double_coset_nf(
        &NormalForm::from_word(u),
        &NormalForm::from_word(v),
        k,
        p,
        limits,
    )
}

pub(crate) fn double_coset_nf(
    u: &NormalForm,
    v: &NormalForm,
    k: usize,
    p: i64,
    limits: &Limits,
) -> Result<Option<(i64, i64)>> {
    if commutes_with_generator(u, k) {
        return Err(Error::CommutingInput);
    }
    let diff = v.exp_sum() - u.exp_sum();
    if diff % p != 0 {
        return Ok(None);
    }
    let total = diff / p;
    // d = v·σ_k^{-p(m+n)}; then σ_k^{pm}·u·σ_k^{-pm} = d.
    let gen = BraidWord::generator(u.strands(), k as i32)?;
    let mut b = Builder::from_nf(v);
    b.push_word(&gen.power(-p * total));
    let d = b.finish();
    match power_search_nf(u, &d, k, limits)? {
        PowerSearchResult::Finite(ks) => {
            // σ_k^{-j} u σ_k^{j} = d with j = -pm.
            let j = *ks.iter().next().expect("nonempty");
            if j % p != 0 {
                return Ok(None);
            }
            let m = -j / p;
            Ok(Some((m, total - m)))
        }
        PowerSearchResult::None => Ok(None),
        PowerSearchResult::AllIntegers => unreachable!("u does not commute with the generator"),
    }
}

fn check_strands(u: &BraidWord, v: &BraidWord) -> Result<()> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(())
}

fn check_generator(n: usize, i: usize) -> Result<()> {
    if i < 1 || i >= n {
        return Err(Error::IndexOutOfRange { index: i as i64, n });
    }
    Ok(())
}
