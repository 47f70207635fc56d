//! The non-verifying subcommands.

use std::fmt::Write;

use anyhow::bail;
use cox_core::braid::{good_elements as good_certificates, good_row, GoodRow};
use cox_core::cuspidal::{classify_cuspidal, ClassRow, GeneratorClasses};
use cox_core::hecke::zeta_report;
use cox_core::minlen::{chain_entries, reduce_to_min, TwistedAction};
use cox_core::pieces::orbit_decomposition;
use cox_core::GenSet;
use serde::Serialize;
use serde_json::{json, Value};

use crate::params::{group, sigma, Params};
use crate::Format;

/// A rendered result; `pass` is set by checks and decides the exit code.
pub struct Output {
    pub json: Value,
    pub tsv: String,
    pub pass: Option<bool>,
}

impl Output {
    fn new(json: Value, tsv: String) -> Self {
        Output { json, tsv, pass: None }
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialise");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv.clone(),
        }
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("values serialise")
}

fn set_text(s: GenSet) -> String {
    s.labels().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

pub fn info(group_type: &str) -> anyhow::Result<Output> {
    let g = group(group_type)?;
    let sys = g.system();
    let w0 = g.longest_element(g.full_set());
    let classes: Vec<Vec<usize>> = GeneratorClasses::new(&g).partition().into_iter().map(|s| s.labels()).collect();
    let sigma = sys.automorphism();
    let components: Vec<String> = sys.components().iter().map(|c| c.to_string()).collect();
    let json = json!({
        "type": sys.label(),
        "rank": g.rank(),
        "order": g.order(),
        "roots": sys.num_roots(),
        "positive_roots": sys.num_positive_roots(),
        "longest_length": g.length(w0),
        "longest_word": g.word_string(w0),
        "generator_classes": classes,
        "components": components,
        "sigma": sigma.to_string(),
        "sigma_order": sigma.order(),
    });
    let mut tsv = String::new();
    let class_text: Vec<String> = classes
        .iter()
        .map(|c| c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    for (k, v) in [
        ("type", sys.label().to_string()),
        ("rank", g.rank().to_string()),
        ("order", g.order().to_string()),
        ("roots", sys.num_roots().to_string()),
        ("positive_roots", sys.num_positive_roots().to_string()),
        ("longest_length", g.length(w0).to_string()),
        ("longest_word", g.word_string(w0)),
        ("generator_classes", class_text.join(" ")),
        ("components", components.join(" ")),
        ("sigma", sigma.to_string()),
        ("sigma_order", sigma.order().to_string()),
    ] {
        writeln!(tsv, "{k}\t{v}").unwrap();
    }
    Ok(Output::new(json, tsv))
}

fn charpoly_cell(r: &ClassRow) -> String {
    match r.charpoly.to_int() {
        Some(p) => format!("[{}]", p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")),
        None => r.charpoly_text.clone(),
    }
}

pub fn classes(group_type: &str, cuspidal_only: bool, sigma_arg: Option<&str>) -> anyhow::Result<Output> {
    let g = group(group_type)?;
    let s = sigma(&g, sigma_arg)?;
    let report = classify_cuspidal(&g, &s, g.system().label())?;
    let rows: Vec<ClassRow> = report
        .classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.cuspidal || !cuspidal_only)
        .map(|(k, c)| ClassRow::new(&g, c, report.label_of(k).map(str::to_string)))
        .collect();
    let mut tsv = String::from("representative\tsize\tmin_length\tcuspidal\tcharpoly\tpartition\n");
    for r in &rows {
        writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.representative,
            r.size,
            r.min_length,
            r.cuspidal,
            charpoly_cell(r),
            r.partition.as_deref().unwrap_or("-")
        )
        .unwrap();
    }
    Ok(Output::new(to_value(&rows), tsv))
}

pub fn pieces(group_type: &str, p: &Params) -> anyhow::Result<Output> {
    let g = group(group_type)?;
    if p.is_pair() {
        let g2 = p.second()?;
        let g2 = g2.as_ref().unwrap_or(&g);
        let sp = p.pair_space(&g, g2)?;
        let d = sp.decompose()?;
        let report = sp.report(&d);
        let mut tsv = String::from("w1\tw2\tI\tsize\torbits\n");
        for q in &report.pieces {
            let i: Vec<String> = q.i.iter().map(|x| x.to_string()).collect();
            writeln!(tsv, "{}\t{}\t{}\t{}\t{}", q.w1, q.w2, i.join(","), q.size, q.orbits.len()).unwrap();
        }
        return Ok(Output::new(to_value(&report), tsv));
    }
    let delta = p.delta(&g)?;
    let pieces = orbit_decomposition(&g, &delta)?;
    let words = |v: &[cox_core::Elem]| v.iter().map(|&w| g.word_string(w)).collect::<Vec<_>>();
    let rows: Vec<Value> = pieces
        .iter()
        .map(|q| {
            json!({
                "w": g.word_string(q.w),
                "I": q.i.labels(),
                "size": q.members.len(),
                "orbits": q.orbits.iter().map(|o| words(o)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let json = json!({
        "J": delta.domain().labels(),
        "Jp": delta.image().labels(),
        "delta": delta.to_string(),
        "pieces": rows,
    });
    let mut tsv = String::from("w\tI\tsize\torbits\n");
    for q in &pieces {
        writeln!(tsv, "{}\t{}\t{}\t{}", g.word_string(q.w), set_text(q.i), q.members.len(), q.orbits.len()).unwrap();
    }
    Ok(Output::new(json, tsv))
}

pub fn reduce(group_type: &str, word: &str, p: &Params) -> anyhow::Result<Output> {
    let g = group(group_type)?;
    if p.is_pair() {
        bail!("reduce acts on a single group; use --J/--delta");
    }
    let delta = p.delta(&g)?;
    let w = g.parse_element(word)?;
    let act = TwistedAction::new(&g, delta)?;
    let chain = reduce_to_min(&act, w.index())?;
    let steps: Vec<_> = chain_entries(&act, &chain).into_iter().skip(1).collect();
    let mut tsv = String::from("gen\tword\n");
    for s in &steps {
        writeln!(tsv, "{}\t{}", s.gen, s.word).unwrap();
    }
    Ok(Output::new(to_value(&steps), tsv))
}

pub fn good_elements(group_type: &str, sigma_arg: Option<&str>) -> anyhow::Result<Output> {
    let g = group(group_type)?;
    let s = sigma(&g, sigma_arg)?;
    let rows: Vec<GoodRow> = good_certificates(&g, &s)?.iter().map(|c| good_row(&g, c)).collect();
    let mut tsv = String::from("rep\td\tchain\n");
    for r in &rows {
        match r {
            GoodRow::Good { rep, d, chain } => {
                let chain: Vec<String> = chain
                    .iter()
                    .map(|i| format!("{{{}}}", i.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                writeln!(tsv, "{rep}\t{d}\t{}", chain.join(" ")).unwrap();
            }
            GoodRow::NotGood { .. } => tsv.push_str("-\t-\tnot good\n"),
        }
    }
    Ok(Output::new(to_value(&rows), tsv))
}

pub fn zeta(group_type: &str, p: &Params) -> anyhow::Result<Output> {
    let g = group(group_type)?;
    if p.is_pair() {
        bail!("zeta acts on a single group; use --J/--Jp/--delta");
    }
    let delta = p.delta(&g)?;
    let weight = p.weight(&g)?;
    let (_, report) = zeta_report(&g, &delta, &weight)?;
    let mut tsv = String::new();
    writeln!(tsv, "dimension\t{}", report.dimension).unwrap();
    tsv.push_str("representative\tsize\tmin_length\tconstant\tmin\n");
    for o in &report.orbits {
        writeln!(tsv, "{}\t{}\t{}\t{}\t{}", o.representative, o.size, o.min_length, o.constant, o.min.join(" ")).unwrap();
    }
    Ok(Output::new(to_value(&report), tsv))
}

