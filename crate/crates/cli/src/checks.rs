//! `verify`: dispatch from check ids to the exhaustive checks of the library.

use std::fmt::Write;
use std::time::Instant;

use anyhow::bail;
use cox_core::braid::{verify_longest_factorisation, verify_longest_factorisation_all, verify_power_identities, verify_rewriting_oracle, verify_good_elements};
use cox_core::cuspidal::{
    classify_cuspidal, twisted_e6_words, verify_class_invariants, verify_inverse_conjugacy, verify_explicit_classes, verify_min_length_reduction,
    verify_length_bound, verify_support_monotonicity, verify_support_equivalence, Partition,
};
use cox_core::hecke::verify_zeta_constancy;
use cox_core::minlen::verify_twisted_reduction;
use cox_core::pieces::verify_orbit_pieces;
use cox_core::verdict::Verdict;
use cox_core::{CoxeterGroup, Error};
use serde_json::json;

use crate::commands::{to_value, Output};
use crate::params::{group, sigma, Params};
use crate::VerifyOpts;

/// Which library routine produces a check.
#[derive(Copy, Clone, Debug)]
enum Runner {
    /// Reduction statements for the `W_J`-action on `W`.
    Twisted,
    /// Sequences `φ`, `ψ` for the two-sided action.
    Sequences,
    /// Pieces and distinguished double cosets for the two-sided action.
    Pieces,
    /// Reduction statements for the two-sided action.
    PairReduction,
    OrbitPieces,
    Classification,
    MinLength,
    InverseConjugacy,
    ClassInvariants,
    LengthBound,
    SupportMonotonicity,
    SupportEquivalence,
    PowerIdentities,
    LongestFactorisation,
    GoodElements,
    GarsideOracle,
    ZetaConstancy,
    TwistedE6,
}

/// Check ids accepted by `verify`, with the routine producing them.
const CHECKS: &[(&str, Runner)] = &[
    ("thm3.2", Runner::Twisted),
    ("lemma3.6", Runner::Twisted),
    ("cor3.8", Runner::Twisted),
    ("prop1.7", Runner::Sequences),
    ("variant1.9", Runner::Sequences),
    ("cor1.8", Runner::Sequences),
    ("prop2.4", Runner::Pieces),
    ("cor2.5", Runner::Pieces),
    ("prop4.3", Runner::Pieces),
    ("lemma4.1", Runner::Pieces),
    ("lemma4.4", Runner::Pieces),
    ("cor4.5", Runner::Pieces),
    ("cor4.6", Runner::Pieces),
    ("order-antisymmetry", Runner::Pieces),
    ("cor3.5", Runner::PairReduction),
    ("prop3.4", Runner::PairReduction),
    ("cor3.7", Runner::PairReduction),
    ("cor2.6", Runner::OrbitPieces),
    ("lemma7.2", Runner::Classification),
    ("thm7.5", Runner::Classification),
    ("classification", Runner::Classification),
    ("thm7.6", Runner::MinLength),
    ("cor7.7", Runner::InverseConjugacy),
    ("charpoly", Runner::ClassInvariants),
    ("l-invariance", Runner::ClassInvariants),
    ("lemma7.3", Runner::LengthBound),
    ("lemma7.4", Runner::SupportMonotonicity),
    ("lemma7.9", Runner::SupportEquivalence),
    ("lemma7.24", Runner::PowerIdentities),
    ("cor7.25", Runner::LongestFactorisation),
    ("thm7.26", Runner::GoodElements),
    ("garside-oracle", Runner::GarsideOracle),
    ("prop6.8", Runner::ZetaConstancy),
    ("twisted-e6", Runner::TwistedE6),
];

/// `id` selects `check` itself and its parts: `thm7.5` covers `thm7.5-p1`,
/// `thm7.6` covers `thm7.6a`, but `lemma7.2` does not cover `lemma7.24`.
fn selects(id: &str, check: &str) -> bool {
    match check.strip_prefix(id) {
        Some("") => true,
        Some(rest) => !rest.starts_with(|c: char| c.is_ascii_digit() || c == '.'),
        None => false,
    }
}

fn single(g: &CoxeterGroup, p: &Params, s: Option<&str>) -> anyhow::Result<cox_core::GenMap> {
    if p.is_pair() {
        bail!("this check takes --sigma only");
    }
    if p.j.is_some() || p.delta.is_some() || p.jp.is_some() {
        bail!("this check takes --sigma, not --J/--delta");
    }
    sigma(g, s)
}

fn run(runner: Runner, g: &CoxeterGroup, p: &Params, opts: &VerifyOpts, scope: &str) -> anyhow::Result<Vec<Verdict>> {
    let sig = p.sigma.as_deref();
    Ok(match runner {
        Runner::Twisted => {
            if p.is_pair() {
                bail!("this check takes --J/--delta or --sigma");
            }
            verify_twisted_reduction(g, &p.delta(g)?, scope)?
        }
        Runner::Sequences | Runner::Pieces | Runner::PairReduction => {
            let g2 = p.second()?;
            let sp = p.pair_space(g, g2.as_ref().unwrap_or(g))?;
            match runner {
                Runner::Sequences => sp.verify_sequences(scope),
                Runner::Pieces => sp.verify_pieces(scope),
                _ => sp.verify_pair_reduction(scope),
            }
        }
        Runner::OrbitPieces => {
            if p.is_pair() {
                bail!("cor2.6 takes --J/--delta");
            }
            verify_orbit_pieces(g, &p.delta(g)?, scope)
        }
        Runner::Classification => classify_cuspidal(g, &single(g, p, sig)?, scope)?.verdicts,
        Runner::MinLength => verify_min_length_reduction(g, &single(g, p, sig)?, scope)?,
        Runner::InverseConjugacy => vec![verify_inverse_conjugacy(g, &single(g, p, sig)?, scope)?],
        Runner::ClassInvariants => verify_class_invariants(g, &single(g, p, sig)?, scope)?,
        Runner::LengthBound => vec![verify_length_bound(g, &single(g, p, sig)?, scope)],
        Runner::SupportMonotonicity => vec![verify_support_monotonicity(g, &single(g, p, sig)?, scope)?],
        Runner::SupportEquivalence => vec![verify_support_equivalence(g, &single(g, p, sig)?, scope)],
        Runner::PowerIdentities => vec![verify_power_identities(g, &single(g, p, sig)?, scope)?],
        Runner::LongestFactorisation => {
            let s = single(g, p, sig)?;
            match &opts.alpha {
                Some(a) => {
                    let parts = a
                        .split(',')
                        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(a.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    vec![verify_longest_factorisation(g, &s, &Partition::new(parts)?, scope)?]
                }
                None => vec![verify_longest_factorisation_all(g, &s, scope)?],
            }
        }
        Runner::GoodElements => vec![verify_good_elements(g, &single(g, p, sig)?, scope)],
        Runner::GarsideOracle => {
            if p.is_pair() || p.j.is_some() || p.delta.is_some() || p.sigma.is_some() {
                bail!("garside-oracle takes --max-len only");
            }
            vec![verify_rewriting_oracle(g, opts.max_len, scope)]
        }
        Runner::ZetaConstancy => {
            if p.is_pair() {
                bail!("prop6.8 takes --J/--Jp/--delta and --weights");
            }
            vec![verify_zeta_constancy(g, &p.delta(g)?, &p.weight(g)?, scope)]
        }
        Runner::TwistedE6 => {
            let label = g.system().label();
            if label != "2E6" {
                bail!("twisted-e6 applies to 2E6 only, not {label}");
            }
            vec![verify_explicit_classes(g, &single(g, p, sig)?, &twisted_e6_words(), "twisted-e6", scope)?]
        }
    })
}

pub fn verify(id: &str, group_type: &str, p: &Params, opts: &VerifyOpts) -> anyhow::Result<Output> {
    let Some(&(_, runner)) = CHECKS.iter().find(|(name, _)| *name == id) else {
        return Err(Error::UnknownCheck(id.to_string()).into());
    };
    let g = group(group_type)?;
    let scope = p.scope(&g);
    let start = Instant::now();
    let verdicts: Vec<Verdict> = run(runner, &g, p, opts, &scope)?.into_iter().filter(|v| selects(id, &v.check)).collect();
    let elapsed = start.elapsed();
    if verdicts.is_empty() {
        bail!("{id} does not apply to {scope}");
    }
    let pass = verdicts.iter().all(|v| v.pass);
    let mut json = if verdicts.len() == 1 { to_value(&verdicts[0]) } else { to_value(&verdicts) };
    if opts.timing {
        let ms = json!(elapsed.as_millis() as u64);
        match &mut json {
            serde_json::Value::Object(m) => {
                m.insert("elapsed_ms".into(), ms);
            }
            other => *other = json!({ "verdicts": other.take(), "elapsed_ms": ms }),
        }
    }
    let mut tsv = String::from("check\tscope\tpass\tcases\tcounterexample\n");
    for v in &verdicts {
        let ce = v.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        writeln!(tsv, "{}\t{}\t{}\t{}\t{}", v.check, v.scope, v.pass, v.cases, ce).unwrap();
    }
    if opts.timing {
        writeln!(tsv, "elapsed_ms\t{}", elapsed.as_millis()).unwrap();
    }
    Ok(Output { json, tsv, pass: Some(pass) })
}
