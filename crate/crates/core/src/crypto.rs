//! Seeded simulations of two braid-group key agreements: the commutator
//! protocol (shared key `[a, b] = a b a⁻¹ b⁻¹`) and the commuting-subgroup
//! Diffie–Hellman analogue (shared key `a b x b⁻¹ a⁻¹`).
//!
//! Randomness comes from ChaCha8 seeded with the 64-bit `seed` through
//! `SeedableRng::seed_from_u64`. Each party draws from its own stream of that
//! generator: stream 0 for public parameters, 1 for Alice, 2 for Bob. The
//! stream layout is part of the transcript format; changing it changes every
//! recorded transcript.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::{Builder, NormalForm};
use crate::word::BraidWord;

pub const PUBLIC_STREAM: u64 = 0;
pub const ALICE_STREAM: u64 = 1;
pub const BOB_STREAM: u64 = 2;

/// The generator for one party's stream.
pub fn party_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Message {
    pub label: String,
    pub nf: NormalForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProtocolTranscript {
    pub messages: Vec<Message>,
    pub alice_key: NormalForm,
    pub bob_key: NormalForm,
    pub agree: bool,
}

impl ProtocolTranscript {
    fn new(messages: Vec<Message>, alice_key: NormalForm, bob_key: NormalForm) -> Self {
        let agree = alice_key == bob_key;
        ProtocolTranscript {
            messages,
            alice_key,
            bob_key,
            agree,
        }
    }
}

/// Uniform i.i.d. letters `±σ_i` with `i` drawn from `indices`.
pub fn sample_letters<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    indices: RangeInclusive<usize>,
    len: usize,
) -> Result<BraidWord> {
    if indices.is_empty() || *indices.start() < 1 || *indices.end() >= n {
        return Err(Error::Param(format!(
            "generator range {indices:?} invalid for {n} strands"
        )));
    }
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(indices.clone()) as i32;
            if rng.random_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters)
}

/// A private word in a subgroup: a sequence of public generators, each
/// taken to the power `±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupWord {
    /// `(generator index, inverted)` pairs.
    pub choices: Vec<(usize, bool)>,
}

impl SubgroupWord {
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, generators: usize, len: usize) -> Self {
        SubgroupWord {
            choices: (0..len)
                .map(|_| (rng.random_range(0..generators), rng.random_bool(0.5)))
                .collect(),
        }
    }

    /// The word spelled out in Artin generators.
    pub fn word(&self, generators: &[BraidWord]) -> BraidWord {
        let n = generators[0].strands();
        let mut letters = Vec::new();
        for &(i, inv) in &self.choices {
            if inv {
                letters.extend(generators[i].invert().letters());
            } else {
                letters.extend(generators[i].letters());
            }
        }
        BraidWord::new(n, letters)
            .expect("generators share a strand count")
            .free_reduce()
    }

    /// The same product evaluated on conjugated generators.
    fn evaluate(&self, images: &[NormalForm]) -> NormalForm {
        let mut b = Builder::new(images[0].strands());
        for &(i, inv) in &self.choices {
            if inv {
                b.push_nf_inverse(&images[i]);
            } else {
                b.push_nf(&images[i]);
            }
        }
        b.finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AagParams {
    pub n: usize,
    pub gen_a: Vec<BraidWord>,
    pub gen_b: Vec<BraidWord>,
    pub secret_len: usize,
    pub seed: u64,
}

impl AagParams {
    /// Public generators drawn from the public stream: `count` words per
    /// side with lengths in `gen_len`.
    pub fn generated(
        n: usize,
        count: usize,
        gen_len: RangeInclusive<usize>,
        secret_len: usize,
        seed: u64,
    ) -> Result<Self> {
        let mut rng = party_rng(seed, PUBLIC_STREAM);
        let side = |rng: &mut ChaCha8Rng| -> Result<Vec<BraidWord>> {
            (0..count)
                .map(|_| {
                    let len = rng.random_range(gen_len.clone());
                    sample_letters(rng, n, 1..=n - 1, len)
                })
                .collect()
        };
        let gen_a = side(&mut rng)?;
        let gen_b = side(&mut rng)?;
        let params = AagParams {
            n,
            gen_a,
            gen_b,
            secret_len,
            seed,
        };
        params.validate()?;
        Ok(params)
    }

    /// `n = 8`, five generators of length 5 per side, six-factor secrets.
    pub fn desk(seed: u64) -> Self {
        Self::generated(8, 5, 5..=5, 6, seed).expect("desk parameters are valid")
    }

    /// `n = 80`, twenty generators of length 5 to 10 per side, secrets of
    /// 100 factors.
    pub fn full_scale(seed: u64) -> Self {
        Self::generated(80, 20, 5..=10, 100, seed).expect("full-scale parameters are valid")
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Param("braid index must be at least 2".into()));
        }
        if self.gen_a.is_empty() || self.gen_b.is_empty() {
            return Err(Error::Param("public subgroups need generators".into()));
        }
        if self.secret_len == 0 {
            return Err(Error::Param("secret length must be positive".into()));
        }
        if let Some(g) = self
            .gen_a
            .iter()
            .chain(&self.gen_b)
            .find(|g| g.strands() != self.n)
        {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: g.strands(),
            });
        }
        Ok(())
    }
}

/// The parties' private subgroup words, as drawn from their streams.
pub fn aag_secrets(params: &AagParams) -> Result<(SubgroupWord, SubgroupWord)> {
    params.validate()?;
    let alice = SubgroupWord::sample(
        &mut party_rng(params.seed, ALICE_STREAM),
        params.gen_a.len(),
        params.secret_len,
    );
    let bob = SubgroupWord::sample(
        &mut party_rng(params.seed, BOB_STREAM),
        params.gen_b.len(),
        params.secret_len,
    );
    Ok((alice, bob))
}

fn conjugate(g: &BraidWord, x: &BraidWord) -> NormalForm {
    let mut b = Builder::new(g.strands());
    b.push_word(g).push_word(x).push_word(&g.invert());
    b.finish()
}

pub fn aag_run(params: &AagParams) -> Result<ProtocolTranscript> {
    let (alice, bob) = aag_secrets(params)?;
    let a = alice.word(&params.gen_a);
    let b = bob.word(&params.gen_b);

    // Alice publishes a·b_i·a⁻¹, Bob publishes b·a_i·b⁻¹.
    let to_bob: Vec<NormalForm> = params.gen_b.iter().map(|bi| conjugate(&a, bi)).collect();
    let to_alice: Vec<NormalForm> = params.gen_a.iter().map(|ai| conjugate(&b, ai)).collect();

    // Alice: b·a·b⁻¹ from Bob's images, then a·(b·a·b⁻¹)⁻¹.
    let bab = alice.evaluate(&to_alice);
    let mut k = Builder::new(params.n);
    k.push_word(&a).push_nf_inverse(&bab);
    let alice_key = k.finish();

    // Bob: a·b·a⁻¹ from Alice's images, then (a·b·a⁻¹)·b⁻¹.
    let aba = bob.evaluate(&to_bob);
    let mut k = Builder::from_nf(&aba);
    k.push_word(&b.invert());
    let bob_key = k.finish();

    let mut messages = Vec::with_capacity(to_bob.len() + to_alice.len());
    for (i, nf) in to_bob.into_iter().enumerate() {
        messages.push(Message {
            label: format!("alice:b'{}", i + 1),
            nf,
        });
    }
    for (i, nf) in to_alice.into_iter().enumerate() {
        messages.push(Message {
            label: format!("bob:a'{}", i + 1),
            nf,
        });
    }
    Ok(ProtocolTranscript::new(messages, alice_key, bob_key))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlchkpParams {
    pub n: usize,
    pub l: usize,
    pub r: usize,
    pub x: BraidWord,
    pub secret_len: usize,
    pub seed: u64,
}

impl KlchkpParams {
    /// Public braid `x` of `x_len` letters drawn from the public stream.
    pub fn generated(
        n: usize,
        l: usize,
        r: usize,
        x_len: usize,
        secret_len: usize,
        seed: u64,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Param("braid index must be at least 2".into()));
        }
        let x = sample_letters(&mut party_rng(seed, PUBLIC_STREAM), n, 1..=n - 1, x_len)?;
        let params = KlchkpParams {
            n,
            l,
            r,
            x,
            secret_len,
            seed,
        };
        params.validate()?;
        Ok(params)
    }

    /// `n = 8`, `l = r = 4`, `|x| = 20`, ten-letter secrets.
    pub fn desk(seed: u64) -> Self {
        Self::generated(8, 4, 4, 20, 10, seed).expect("desk parameters are valid")
    }

    /// `n = 45`, `l = 22`, `r = 23`, `|x| = 1450`, secrets of 360 letters.
    pub fn full_scale(seed: u64) -> Self {
        Self::generated(45, 22, 23, 1450, 360, seed).expect("full-scale parameters are valid")
    }

    pub fn validate(&self) -> Result<()> {
        if self.l < 2 || self.r < 2 || self.l + self.r != self.n {
            return Err(Error::Param(format!(
                "need l, r ≥ 2 with l + r = n, got l = {}, r = {}, n = {}",
                self.l, self.r, self.n
            )));
        }
        if self.x.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: self.x.strands(),
            });
        }
        if self.secret_len == 0 {
            return Err(Error::Param("secret length must be positive".into()));
        }
        Ok(())
    }

    /// Generators `σ_1 … σ_{l-1}`.
    pub fn left_indices(&self) -> RangeInclusive<usize> {
        1..=self.l - 1
    }

    /// Generators `σ_{n-r+1} … σ_{n-1}`.
    pub fn right_indices(&self) -> RangeInclusive<usize> {
        self.n - self.r + 1..=self.n - 1
    }
}

pub fn klchkp_secrets(params: &KlchkpParams) -> Result<(BraidWord, BraidWord)> {
    params.validate()?;
    let a = sample_letters(
        &mut party_rng(params.seed, ALICE_STREAM),
        params.n,
        params.left_indices(),
        params.secret_len,
    )?;
    let b = sample_letters(
        &mut party_rng(params.seed, BOB_STREAM),
        params.n,
        params.right_indices(),
        params.secret_len,
    )?;
    Ok((a, b))
}

pub fn klchkp_run(params: &KlchkpParams) -> Result<ProtocolTranscript> {
    let (a, b) = klchkp_secrets(params)?;
    klchkp_run_with(params, &a, &b)
}

/// Runs the exchange with explicit private words, which must lie in the
/// left and right subgroups respectively.
pub fn klchkp_run_with(
    params: &KlchkpParams,
    a: &BraidWord,
    b: &BraidWord,
) -> Result<ProtocolTranscript> {
    params.validate()?;
    let within = |w: &BraidWord, range: RangeInclusive<usize>| {
        w.strands() == params.n
            && w.letters()
                .iter()
                .all(|l| range.contains(&(l.unsigned_abs() as usize)))
    };
    if !within(a, params.left_indices()) {
        return Err(Error::Param("Alice's word leaves the left subgroup".into()));
    }
    if !within(b, params.right_indices()) {
        return Err(Error::Param("Bob's word leaves the right subgroup".into()));
    }
    let axa = conjugate(a, &params.x);
    let bxb = conjugate(b, &params.x);

    let mut k = Builder::new(params.n);
    k.push_word(a).push_nf(&bxb).push_word(&a.invert());
    let alice_key = k.finish();

    let mut k = Builder::new(params.n);
    k.push_word(b).push_nf(&axa).push_word(&b.invert());
    let bob_key = k.finish();

    let messages = vec![
        Message {
            label: "alice:axa^-1".into(),
            nf: axa,
        },
        Message {
            label: "bob:bxb^-1".into(),
            nf: bxb,
        },
    ];
    Ok(ProtocolTranscript::new(messages, alice_key, bob_key))
}
