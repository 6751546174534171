//! Shared generators and oracles for integration tests. Nothing here calls
//! into the normal-form machinery: equivalent words are produced by
//! rewriting with the defining relations directly.

#![allow(dead_code)]

use braidkit::amalgam::{AmalgamPresentation, AmalgamWord, Factor, Syllable};
use braidkit::BraidWord;
use rand::Rng;

pub fn letter<R: Rng>(rng: &mut R, n: usize) -> i32 {
    let i = rng.random_range(1..n as i32);
    if rng.random_bool(0.5) {
        i
    } else {
        -i
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    BraidWord::new(n, (0..len).map(|_| letter(rng, n)).collect()).unwrap()
}

/// One random rewrite with a defining relation or a free insertion or
/// cancellation. Returns false when the chosen move did not apply.
pub fn rewrite_once<R: Rng>(rng: &mut R, n: usize, w: &mut Vec<i32>) -> bool {
    match rng.random_range(0..5) {
        // σ_i σ_{i+1} σ_i ↔ σ_{i+1} σ_i σ_{i+1}, all letters of one sign
        0 => {
            if w.len() < 3 {
                return false;
            }
            let at = rng.random_range(0..w.len() - 2);
            let (x, y, z) = (w[at], w[at + 1], w[at + 2]);
            if x == z && x.signum() == y.signum() && (x.abs() - y.abs()).abs() == 1 {
                w[at] = y;
                w[at + 1] = x;
                w[at + 2] = y;
                true
            } else {
                false
            }
        }
        // σ_i^a σ_j^b ↔ σ_j^b σ_i^a for |i - j| > 1
        1 => {
            if w.len() < 2 {
                return false;
            }
            let at = rng.random_range(0..w.len() - 1);
            if (w[at].abs() - w[at + 1].abs()).abs() > 1 {
                w.swap(at, at + 1);
                true
            } else {
                false
            }
        }
        // insert x x⁻¹
        2 => {
            let at = rng.random_range(0..=w.len());
            let l = letter(rng, n);
            w.splice(at..at, [l, -l]);
            true
        }
        // cancel x x⁻¹
        3 => {
            if w.len() < 2 {
                return false;
            }
            let at = rng.random_range(0..w.len() - 1);
            if w[at] == -w[at + 1] {
                w.drain(at..at + 2);
                true
            } else {
                false
            }
        }
        // insert a braid relator σ_i σ_{i+1} σ_i σ_{i+1}⁻¹ σ_i⁻¹ σ_{i+1}⁻¹
        _ => {
            if n < 3 {
                return false;
            }
            let i = rng.random_range(1..n as i32 - 1);
            let at = rng.random_range(0..=w.len());
            w.splice(at..at, [i, i + 1, i, -(i + 1), -i, -(i + 1)]);
            true
        }
    }
}

/// A word equal to `w` in `B_n`, produced by `moves` random rewrites.
pub fn equivalent_word<R: Rng>(rng: &mut R, w: &BraidWord, moves: usize) -> BraidWord {
    let mut letters = w.letters().to_vec();
    let mut applied = 0;
    let mut attempts = 0;
    while applied < moves && attempts < moves * 50 {
        attempts += 1;
        if rewrite_once(rng, w.strands(), &mut letters) {
            applied += 1;
        }
    }
    BraidWord::new(w.strands(), letters).unwrap()
}

pub fn concat(parts: &[&BraidWord]) -> BraidWord {
    let n = parts[0].strands();
    BraidWord::new(n, parts.iter().flat_map(|w| w.letters().to_vec()).collect()).unwrap()
}

pub fn conjugate(g: &BraidWord, x: &BraidWord) -> BraidWord {
    concat(&[g, x, &g.invert()])
}

/// A word whose membership outside `H` is certified without the word
/// problem: either its exponent sum is not a multiple of the `H`
/// exponent, or its permutation is neither the identity nor the
/// transposition of the `H` generator.
pub fn certified_outside_h<R: Rng>(
    rng: &mut R,
    pres: &AmalgamPresentation,
    f: Factor,
    max_len: usize,
) -> BraidWord {
    let n = pres.strands(f);
    let (g, e) = pres.h_generator(f);
    loop {
        let w = random_word(rng, n, max_len);
        if w.is_empty() {
            continue;
        }
        let perm = w.permutation_image();
        let h_perm = BraidWord::new(n, vec![g as i32])
            .unwrap()
            .permutation_image();
        if w.exp_sum() % e != 0 || (!perm.is_identity() && perm != h_perm) {
            return w;
        }
    }
}

/// An alternating word of `len` syllables, none in `H`.
pub fn reduced_amalgam_word<R: Rng>(
    rng: &mut R,
    pres: &AmalgamPresentation,
    len: usize,
    max_syllable: usize,
) -> AmalgamWord {
    let mut f = if rng.random_bool(0.5) {
        Factor::A
    } else {
        Factor::B
    };
    let mut syllables = Vec::with_capacity(len);
    for _ in 0..len {
        syllables.push(Syllable::new(
            f,
            certified_outside_h(rng, pres, f, max_syllable),
        ));
        f = f.other();
    }
    AmalgamWord::new(syllables)
}

/// An arbitrary (not necessarily reduced) syllable word.
pub fn random_amalgam_word<R: Rng>(
    rng: &mut R,
    pres: &AmalgamPresentation,
    max_syllables: usize,
    max_syllable: usize,
) -> AmalgamWord {
    let len = rng.random_range(0..=max_syllables);
    AmalgamWord::new(
        (0..len)
            .map(|_| {
                let f = if rng.random_bool(0.5) {
                    Factor::A
                } else {
                    Factor::B
                };
                Syllable::new(f, random_word(rng, pres.strands(f), max_syllable))
            })
            .collect(),
    )
}

/// `σ_k^p · τ_j^{-r}`, a relator of the amalgam.
pub fn relator(pres: &AmalgamPresentation) -> AmalgamWord {
    AmalgamWord::new(vec![
        Syllable::new(Factor::A, pres.h_word(Factor::A)),
        Syllable::new(Factor::B, pres.h_word(Factor::B).invert()),
    ])
}
