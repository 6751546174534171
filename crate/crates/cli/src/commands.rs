use braidkit::amalgam::{amalgam_are_conjugate_with, amalgam_reduce};
use braidkit::conjugacy::{
    are_conjugate_with, double_coset_search_with, generator_power_conjugacy_search_with,
    super_summit_set_with,
};
use braidkit::crypto::{aag_run, klchkp_run};
use braidkit::{
    compare, gwp, normal_form, AagParams, AmalgamPresentation, AmalgamWord, BraidWord, GwpResult,
    KlchkpParams, Limits, PowerSearchResult, ProtocolTranscript, Result,
};
use serde_json::{json, Value};

use crate::args::{Command, Presentation, Preset};

/// What a verb computed: the text and JSON renderings, and whether the
/// predicate it answers held.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub holds: bool,
}

impl Report {
    fn value(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            holds: true,
        }
    }

    fn verdict(holds: bool, yes: &str, no: &str, key: &str) -> Self {
        Report {
            text: if holds { yes } else { no }.to_string(),
            json: json!({ key: holds }),
            holds,
        }
    }
}

fn word(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, n)
}

fn presentation(p: &Presentation) -> Result<AmalgamPresentation> {
    AmalgamPresentation::new(p.n1, p.n2, p.k, p.j, p.p, p.r)
}

fn transcript(t: ProtocolTranscript) -> Report {
    let json = serde_json::to_value(&t).expect("transcripts serialize");
    Report {
        text: json.to_string(),
        holds: t.agree,
        json,
    }
}

pub fn execute(command: &Command, limits: &Limits) -> Result<Report> {
    Ok(match command {
        Command::Nf { strands, word: w } => {
            let nf = normal_form(&word(w, strands.n)?);
            Report::value(
                nf.to_string(),
                json!({ "nf": nf, "inf": nf.inf(), "sup": nf.sup() }),
            )
        }
        Command::Eq { strands, u, v } => {
            let equal = compare(&word(u, strands.n)?, &word(v, strands.n)?)?;
            Report::verdict(equal, "equal", "not equal", "equal")
        }
        Command::Exp { strands, word: w } => {
            let e = word(w, strands.n)?.exp_sum();
            Report::value(e.to_string(), json!({ "exp": e }))
        }
        Command::Perm { strands, word: w } => {
            let p = word(w, strands.n)?.permutation_image();
            Report::value(p.to_string(), json!({ "perm": p.images() }))
        }
        Command::Gwp { strands, x, y } => {
            let r = gwp(&word(x, strands.n)?, &word(y, strands.n)?)?;
            let text = match r {
                GwpResult::Power { c } => format!("power c={c}"),
                GwpResult::NotAPower => "not a power".to_string(),
            };
            Report {
                text,
                json: serde_json::to_value(r).expect("results serialize"),
                holds: r.power().is_some(),
            }
        }
        Command::Conj { strands, u, v } => {
            let c = are_conjugate_with(&word(u, strands.n)?, &word(v, strands.n)?, limits)?;
            Report::verdict(c, "conjugate", "not conjugate", "conjugate")
        }
        Command::ConjPower { strands, a, b, i } => {
            let r = generator_power_conjugacy_search_with(
                &word(a, strands.n)?,
                &word(b, strands.n)?,
                *i,
                limits,
            )?;
            match r {
                PowerSearchResult::None => Report {
                    text: "none".into(),
                    json: json!({ "result": "none" }),
                    holds: false,
                },
                PowerSearchResult::AllIntegers => {
                    Report::value("all integers".into(), json!({ "result": "all_integers" }))
                }
                PowerSearchResult::Finite(ks) => {
                    let list: Vec<String> = ks.iter().map(i64::to_string).collect();
                    Report::value(
                        format!("k={}", list.join(",")),
                        json!({ "result": "finite", "k": ks }),
                    )
                }
            }
        }
        Command::DoubleCoset {
            strands,
            u,
            v,
            k,
            p,
        } => {
            let r = double_coset_search_with(
                &word(u, strands.n)?,
                &word(v, strands.n)?,
                *k,
                *p,
                limits,
            )?;
            match r {
                Some((m, n)) => Report::value(format!("m={m} n={n}"), json!({ "m": m, "n": n })),
                None => Report {
                    text: "none".into(),
                    json: Value::Null,
                    holds: false,
                },
            }
        }
        Command::Sss { strands, word: w } => {
            let s = super_summit_set_with(&word(w, strands.n)?, limits)?;
            let mut elements: Vec<String> = s.elements.iter().map(ToString::to_string).collect();
            elements.sort();
            Report::value(
                elements.join("\n"),
                json!({
                    "inf": s.achieved_inf,
                    "sup": s.achieved_sup,
                    "elements": elements,
                }),
            )
        }
        Command::AmalgamWp { pres, word: w } => {
            let pres = presentation(pres)?;
            let red = amalgam_reduce(&AmalgamWord::parse(w, &pres)?, &pres)?;
            let trivial = red.h_power == Some(0);
            Report {
                text: if trivial { "trivial" } else { "nontrivial" }.into(),
                json: json!({
                    "trivial": trivial,
                    "reduced": red.rebuild(&pres).to_string(),
                    "length": red.length(),
                    "h_power": red.h_power,
                }),
                holds: trivial,
            }
        }
        Command::AmalgamConj { pres, u, v } => {
            let pres = presentation(pres)?;
            let cert = amalgam_are_conjugate_with(
                &AmalgamWord::parse(u, &pres)?,
                &AmalgamWord::parse(v, &pres)?,
                &pres,
                limits,
            )?;
            Report {
                text: if cert.verdict {
                    "conjugate"
                } else {
                    "not conjugate"
                }
                .into(),
                json: serde_json::to_value(&cert).expect("certificates serialize"),
                holds: cert.verdict,
            }
        }
        Command::Aag { seed, preset } => transcript(aag_run(&match preset {
            Preset::Desk => AagParams::desk(*seed),
            Preset::Full => AagParams::full_scale(*seed),
        })?),
        Command::Klchkp { seed, preset } => transcript(klchkp_run(&match preset {
            Preset::Desk => KlchkpParams::desk(*seed),
            Preset::Full => KlchkpParams::full_scale(*seed),
        })?),
    })
}
