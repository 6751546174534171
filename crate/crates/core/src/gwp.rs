//! Membership in a cyclic subgroup `⟨X⟩` of `B_n` when `exp(X) ≠ 0`.
//!
//! Since `exp` is a homomorphism to `ℤ`, `Y = X^c` forces
//! `c = exp(Y) / exp(X)`. Only that one candidate is checked against the
//! word problem.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::{Builder, NormalForm};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum GwpResult {
    Power { c: i64 },
    NotAPower,
}

impl GwpResult {
    pub fn power(self) -> Option<i64> {
        match self {
            GwpResult::Power { c } => Some(c),
            GwpResult::NotAPower => None,
        }
    }
}

/// The only exponent `c` that could satisfy `X^c = Y`, if `exp(X)` divides
/// `exp(Y)`.
pub fn gwp_divisibility_gate(x: &BraidWord, y: &BraidWord) -> Result<Option<i64>> {
    let ex = x.exp_sum();
    if ex == 0 {
        return Err(Error::ZeroExponent);
    }
    let ey = y.exp_sum();
    Ok((ey % ex == 0).then(|| ey / ex))
}

pub fn gwp(x: &BraidWord, y: &BraidWord) -> Result<GwpResult> {
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    let Some(c) = gwp_divisibility_gate(x, y)? else {
        return Ok(GwpResult::NotAPower);
    };
    Ok(if power_matches(x, c, &NormalForm::from_word(y)) {
        GwpResult::Power { c }
    } else {
        GwpResult::NotAPower
    })
}

fn power_matches(x: &BraidWord, c: i64, y: &NormalForm) -> bool {
    let mut b = Builder::new(x.strands());
    b.push_word(&x.power(c));
    b.finish() == *y
}
