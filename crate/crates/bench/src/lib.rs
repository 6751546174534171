//! Seeded instance generators shared by the benchmarks.

use braidkit::amalgam::{AmalgamPresentation, AmalgamWord, Factor, Syllable};
use braidkit::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    BraidWord::random(n, len, rng)
}

/// A word with nonzero exponent sum, as `gwp` requires.
pub fn gwp_base(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    loop {
        let x = random_word(rng, n, len);
        if x.exp_sum() != 0 {
            return x;
        }
    }
}

/// `g·w·g⁻¹` for a random `g` of the given length.
pub fn conjugate_pair(
    rng: &mut ChaCha8Rng,
    n: usize,
    len: usize,
    conj_len: usize,
) -> (BraidWord, BraidWord) {
    let w = random_word(rng, n, len);
    let g = random_word(rng, n, conj_len);
    let v = g.concat(&w).unwrap().concat(&g.invert()).unwrap();
    (w, v)
}

/// `σ_1^2 = τ_1^3` between two copies of `B_3`.
pub fn amalgam_presentation() -> AmalgamPresentation {
    AmalgamPresentation::new(3, 3, 1, 1, 2, 3).expect("fixed presentation is valid")
}

/// Alternating syllable word with `syllables` syllables of `syllable_len`
/// letters each.
pub fn amalgam_word(
    rng: &mut ChaCha8Rng,
    pres: &AmalgamPresentation,
    syllables: usize,
    syllable_len: usize,
) -> AmalgamWord {
    let mut f = if rng.random_bool(0.5) {
        Factor::A
    } else {
        Factor::B
    };
    AmalgamWord::new(
        (0..syllables)
            .map(|_| {
                let s = Syllable::new(f, random_word(rng, pres.strands(f), syllable_len));
                f = f.other();
                s
            })
            .collect(),
    )
}
