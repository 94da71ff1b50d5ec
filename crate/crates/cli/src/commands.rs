//! One function per subcommand; each returns an [`Outcome`].

use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use reslat_core::catalog::{enumerate_rls_with_cap, save};
use reslat_core::dot::{algebra_to_dot, kalman_to_dot, view_to_dot};
use reslat_core::kalman::{
    box_k, box_neg, build_c, check_box_k_laws, check_ck, check_mv_bullet, ck_agreement,
    kappa_search, phi, round_trip, validate_cdiff, validate_center_quantifier, KalmanListing,
    PsiMap,
};
use reslat_core::monadic::{check_mirl, check_monadic_consequences, check_monadic_fle};
use reslat_core::schema::write_text;
use reslat_core::terms::random::{sample_cd, TermShape};
use reslat_core::terms::{parse_cd, parse_cd_equation};
use reslat_core::translation::{
    context_for, paired_consequence_check, problem_suite, tau_by_name, tau_star,
    translate_equation, witness_pairs, ConsequenceLimits, Pairing, Problem,
};
use reslat_core::{
    build_k, congruence_generated, quotient, AxiomReport, CDiffView, CatalogEntry, KalmanError,
};

use crate::output::{describe, failure, pair_label, report_json, Outcome, Text};
use crate::source::{pairs, Filter, Loaded, QuantifierChoice, Source};
use crate::{CliError, Sampling};

/// Text lines, the result record and failure records for one instance.
type Checked<L, F> = Result<(L, Value, F), CliError>;

fn finish(command: &str, text: Text, results: Vec<Value>, failures: Vec<Value>) -> Outcome {
    let json = json!({
        "command": command,
        "pass": failures.is_empty(),
        "results": results,
        "failures": failures,
    });
    Outcome::new(text.into_string(), json, failures)
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn view_checks(v: &CDiffView, text: &mut Text, failures: &mut Vec<Value>) -> Value {
    let name = v.algebra.name().to_string();
    let fle = v.algebra.validate();
    let cdiff = validate_cdiff(v, v.algebra.is_distributive());
    text.line(format!("{name}: FLe axioms {}", describe(&fle)));
    text.line(format!("{name}: c-differential laws {}", describe(&cdiff)));
    let mut result = json!({
        "algebra": name,
        "fle": report_json(&fle, None),
        "cdiff": report_json(&cdiff, None),
    });
    for (check, r) in [("fle", &fle), ("cdiff", &cdiff)] {
        if !r.is_pass() {
            failures.push(failure(&name, check, r, None));
        }
    }
    if let Some(bx) = &v.center_box {
        let r = validate_center_quantifier(v, bx);
        text.line(format!("{name}: center quantifier laws {}", describe(&r)));
        result["center_box"] = report_json(&r, None);
        if !r.is_pass() {
            failures.push(failure(&name, "center quantifier", &r, None));
        }
    }
    result
}

pub fn validate(source: &Source, filter: &Filter) -> Result<Outcome, CliError> {
    let mut text = Text::default();
    let mut failures = Vec::new();
    let results = match source.load(filter)? {
        Loaded::View(v) => vec![view_checks(&v, &mut text, &mut failures)],
        Loaded::Entries(entries) => entries
            .iter()
            .map(|e| {
                let r = e.algebra.validate();
                text.line(format!("{}: FLe axioms {}", e.name, describe(&r)));
                if !r.is_pass() {
                    failures.push(failure(&e.name, "fle", &r, None));
                }
                json!({ "algebra": e.name, "size": e.size(), "fle": report_json(&r, None) })
            })
            .collect(),
    };
    Ok(finish("validate", text, results, failures))
}

pub fn classify(source: &Source, filter: &Filter) -> Result<Outcome, CliError> {
    let entries: Vec<(String, reslat_core::FiniteAlgebra)> = match source.load(filter)? {
        Loaded::View(v) => vec![(v.algebra.name().to_string(), v.algebra)],
        Loaded::Entries(e) => e.into_iter().map(|e| (e.name, e.algebra)).collect(),
    };
    let mut text = Text::default();
    let results = entries
        .iter()
        .map(|(name, a)| {
            let f = a.classify();
            let names: Vec<&str> = [
                ("integral", f.is_integral),
                ("zero-bounded", f.is_zero_bounded),
                ("distributive", f.is_distributive),
                ("involutive", f.is_involutive),
                ("prelinear", f.is_prelinear),
                ("divisible", f.is_divisible),
                ("MV", f.is_mv),
                ("RDL", f.is_rdl),
            ]
            .into_iter()
            .filter(|(_, b)| *b)
            .map(|(n, _)| n)
            .collect();
            text.line(format!("{name} (size {}): {}", a.size(), names.join(", ")));
            json!({ "algebra": name, "size": a.size(), "flags": f })
        })
        .collect();
    Ok(finish("classify", text, results, Vec::new()))
}

pub fn quantifiers(
    source: &Source,
    filter: &Filter,
    choice: &QuantifierChoice,
) -> Result<Outcome, CliError> {
    let entries = source.entries(filter, "quantifiers")?;
    let mut text = Text::default();
    let mut failures = Vec::new();
    let mut results = Vec::new();
    for e in &entries {
        text.line(format!(
            "{}: {} quantifier pairs",
            e.name,
            e.quantifiers.len()
        ));
        for (k, q) in choice.select(e)? {
            let axioms = check_monadic_fle(&e.algebra, &q)?;
            let items = check_monadic_consequences(&e.algebra, &q);
            let failed: Vec<&str> = items.violations.iter().map(|v| v.axiom.as_str()).collect();
            text.line(format!(
                "  [{k}] box {:?} diamond {:?}: M1-M7 {}; consequences failing: {}",
                q.universal,
                q.existential,
                describe(&axioms),
                if failed.is_empty() {
                    "none".to_string()
                } else {
                    failed.join(", ")
                }
            ));
            if !axioms.is_pass() {
                failures.push(failure(&e.name, &format!("monadic [{k}]"), &axioms, None));
            }
            results.push(json!({
                "algebra": e.name,
                "index": k,
                "pair": q,
                "monadic": report_json(&axioms, None),
                "consequences_failing": report_json(&items, None),
            }));
        }
    }
    Ok(finish("quantifiers", text, results, failures))
}

pub fn kalman(
    source: &Source,
    filter: &Filter,
    choice: &QuantifierChoice,
    with_box_neg: bool,
) -> Result<Outcome, CliError> {
    let entries = source.entries(filter, "kalman")?;
    let mut text = Text::default();
    let mut failures = Vec::new();
    let mut results = Vec::new();
    for e in &entries {
        let k = build_k(&e.algebra)?;
        let view = k.view();
        let labels: Vec<String> = (0..k.size()).map(|p| pair_label(&k, p)).collect();
        text.line(format!(
            "K({}): {} elements {}",
            e.name,
            k.size(),
            labels.join(" ")
        ));
        text.line(format!("  center {}", pair_label(&k, k.center())));
        let cdiff = validate_cdiff(&view, e.flags.is_distributive);
        let ck = check_ck(&view);
        text.line(format!("  c-differential laws {}", describe(&cdiff)));
        text.line(format!("  CK {}", describe(&ck)));
        for (check, r) in [("cdiff", &cdiff), ("ck", &ck)] {
            if !r.is_pass() {
                failures.push(failure(&e.name, check, r, Some(&k)));
            }
        }
        let mut boxes = Vec::new();
        if choice.is_given() {
            for (i, q) in choice.select(e)? {
                let bk = box_k(&k, &q)?;
                let laws = check_box_k_laws(&k, &q, &bk);
                let center = validate_center_quantifier(&view, &bk);
                text.line(format!(
                    "  box_K [{i}]: BK laws {}; center laws {}",
                    describe(&laws),
                    describe(&center)
                ));
                for (check, r) in [("BK laws", &laws), ("center quantifier", &center)] {
                    if !r.is_pass() {
                        failures.push(failure(&e.name, &format!("{check} [{i}]"), r, Some(&k)));
                    }
                }
                boxes.push(json!({
                    "index": i,
                    "box_k": bk,
                    "bk_laws": report_json(&laws, Some(&k)),
                    "center_laws": report_json(&center, Some(&k)),
                }));
            }
        }
        let mut result = json!({
            "algebra": e.name,
            "kalman": KalmanListing::from(&k),
            "cdiff": report_json(&cdiff, Some(&k)),
            "ck": report_json(&ck, Some(&k)),
            "boxes": boxes,
        });
        if with_box_neg {
            let bn = box_neg(&k);
            let mirl = check_mirl(k.algebra(), &bn)?;
            let center = validate_center_quantifier(&view, &bn);
            let core: Vec<&str> = ["M1", "M3", "M7"]
                .into_iter()
                .filter(|m| mirl.fails(m))
                .collect();
            text.line(format!(
                "  box_neg: M1/M3/M7 {}; center laws {}; box_neg(c) = {}",
                if core.is_empty() {
                    "hold".to_string()
                } else {
                    format!("fail ({})", core.join(", "))
                },
                describe(&center),
                pair_label(&k, bn[k.center()])
            ));
            if !mirl.is_pass() {
                failures.push(failure(&e.name, "box_neg monadic", &mirl, Some(&k)));
            }
            if !center.is_pass() {
                failures.push(failure(
                    &e.name,
                    "box_neg center quantifier",
                    &center,
                    Some(&k),
                ));
            }
            result["box_neg"] = json!({
                "map": bn,
                "at_center": k.pair(bn[k.center()]),
                "monadic": report_json(&mirl, Some(&k)),
                "center_laws": report_json(&center, Some(&k)),
            });
        }
        results.push(result);
    }
    Ok(finish("kalman", text, results, failures))
}

/// Views from a source: the loaded view, or `K(L)` of each algebra.
fn views(source: &Source, filter: &Filter) -> Result<Vec<(String, CDiffView, bool)>, CliError> {
    Ok(match source.load(filter)? {
        Loaded::View(v) => vec![(v.algebra.name().to_string(), v, false)],
        Loaded::Entries(entries) => entries
            .iter()
            .map(|e| Ok((format!("K({})", e.name), build_k(&e.algebra)?.view(), true)))
            .collect::<Result<_, KalmanError>>()?,
    })
}

pub fn center(source: &Source, filter: &Filter) -> Result<Outcome, CliError> {
    let mut text = Text::default();
    let mut results = Vec::new();
    for (name, v, _) in views(source, filter)? {
        let c = build_c(&v)?;
        let f = c.algebra().classify();
        text.line(format!(
            "C({name}): {} elements, embedded at {:?}; MV {}, involutive {}",
            c.size(),
            c.embedding(),
            f.is_mv,
            f.is_involutive
        ));
        results.push(json!({
            "algebra": name,
            "size": c.size(),
            "embedding": c.embedding(),
            "flags": f,
        }));
    }
    Ok(finish("center", text, results, Vec::new()))
}

pub fn ck(source: &Source, filter: &Filter) -> Result<Outcome, CliError> {
    let mut text = Text::default();
    let mut failures = Vec::new();
    let mut results = Vec::new();
    for (name, v, is_kalman) in views(source, filter)? {
        let cdiff = validate_cdiff(&v, v.algebra.is_distributive());
        text.line(format!("{name}: c-differential laws {}", describe(&cdiff)));
        if !cdiff.is_pass() {
            failures.push(failure(&name, "cdiff", &cdiff, None));
            results.push(json!({ "algebra": name, "cdiff": report_json(&cdiff, None) }));
            continue;
        }
        let ck = check_ck(&v);
        let psi = PsiMap::compute(&v)?;
        let agreement = ck_agreement(&v, &psi);
        let kappa = kappa_search(&v);
        let bullet = check_mv_bullet(&v);
        text.line(format!(
            "{name}: CK {}; psi injective {}, surjective {}, homomorphism {}; agreement {}",
            describe(&ck),
            psi.injective,
            psi.surjective,
            psi.homomorphism.is_pass(),
            pass_word(agreement.agrees())
        ));
        text.line(format!(
            "{name}: kappa {}; Lin/QHey {}",
            match &kappa.kappa {
                Some(k) => format!("{k:?}"),
                None => format!("absent (blocked at {:?})", kappa.blocked_at),
            },
            describe(&bullet)
        ));
        if !agreement.agrees() {
            failures
                .push(json!({ "algebra": name, "check": "ck agreement", "agreement": agreement }));
        }
        if is_kalman && !ck.is_pass() {
            failures.push(failure(&name, "ck", &ck, None));
        }
        results.push(json!({
            "algebra": name,
            "cdiff": report_json(&cdiff, None),
            "ck": report_json(&ck, None),
            "psi": psi.summary(),
            "agreement": agreement,
            "kappa": kappa,
            "mv_bullet": report_json(&bullet, None),
        }));
    }
    Ok(finish("ck", text, results, failures))
}

pub fn equivalence(
    source: &Source,
    filter: &Filter,
    choice: &QuantifierChoice,
) -> Result<Outcome, CliError> {
    let entries = source.entries(filter, "equivalence")?;
    let rows = pairs(&entries, choice)?;
    let checked: Vec<Checked<Vec<String>, Vec<Value>>> = rows
        .par_iter()
        .map(|(name, i, l, q)| {
            let label = format!("{name} [{i}]");
            let k = build_k(l)?;
            let bk = box_k(&k, q)?;
            let mut reports: Vec<(&str, AxiomReport)> = vec![
                ("BK laws", check_box_k_laws(&k, q, &bk)),
                ("center laws", validate_center_quantifier(&k.view(), &bk)),
            ];
            let mut phi_report = AxiomReport::new();
            match phi(l, Some(q)) {
                Ok(_) => {}
                Err(KalmanError::VerificationFailed { what, witness }) => {
                    phi_report.push(what, witness)
                }
                Err(e) => return Err(e.into()),
            }
            reports.push(("phi", phi_report));
            reports.push(("round trip", round_trip(l, q)?));
            let psi = PsiMap::compute(&k.view().with_center_box(bk.clone()))?;
            let mut psi_report = AxiomReport::new();
            psi_report.check("isomorphism", psi.is_isomorphism());
            psi_report.check("preserves box", psi.preserves_center_box == Some(true));
            reports.push(("psi", psi_report));
            let mut lines = Vec::new();
            let mut failures = Vec::new();
            let mut result = json!({ "algebra": name, "index": i, "pair": q });
            for (check, r) in &reports {
                lines.push(format!("{label}: {check} {}", describe(r)));
                result[*check] = report_json(r, Some(&k));
                if !r.is_pass() {
                    failures.push(failure(&label, check, r, Some(&k)));
                }
            }
            Ok((lines, result, failures))
        })
        .collect();
    let mut text = Text::default();
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for c in checked {
        let (lines, result, f) = c?;
        lines.iter().for_each(|l| text.line(l));
        results.push(result);
        failures.extend(f);
    }
    text.line(format!(
        "{} quantifier pairs, {} failed checks",
        results.len(),
        failures.len()
    ));
    Ok(finish("equivalence", text, results, failures))
}

pub fn translate(
    term: Option<&str>,
    equation: Option<&str>,
    symbol: Option<&str>,
) -> Result<Outcome, CliError> {
    let mut text = Text::default();
    let result = if let Some(s) = term {
        let t = parse_cd(s)?;
        let tr = tau_star(&t);
        let vars: Vec<String> = t.variables().into_iter().collect();
        let ctx = context_for(&vars);
        text.line(format!("term: {t}"));
        text.line(format!("first: {}", tr.first));
        text.line(format!("second: {}", tr.second));
        text.line("context:");
        ctx.equations
            .iter()
            .for_each(|e| text.line(format!("  {e}")));
        json!({
            "term": t.to_string(),
            "first": tr.first.to_string(),
            "second": tr.second.to_string(),
            "context": ctx.equations.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    } else if let Some(s) = equation {
        let eq = parse_cd_equation(s)?;
        let [e1, e2] = translate_equation(&eq);
        let vars: Vec<String> = eq.variables().into_iter().collect();
        let ctx = context_for(&vars);
        text.line(format!("equation: {eq}"));
        text.line(format!("first: {e1}"));
        text.line(format!("second: {e2}"));
        text.line("context:");
        ctx.equations
            .iter()
            .for_each(|e| text.line(format!("  {e}")));
        json!({
            "equation": eq.to_string(),
            "first": e1.to_string(),
            "second": e2.to_string(),
            "context": ctx.equations.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    } else if let Some(s) = symbol {
        let tr = tau_by_name(s)?;
        text.line(format!("{s}: first {}; second {}", tr.first, tr.second));
        json!({ "symbol": s, "first": tr.first.to_string(), "second": tr.second.to_string() })
    } else {
        return Err(CliError::Usage(
            "give one of --term, --equation or --symbol".into(),
        ));
    };
    Ok(finish("translate", text, vec![result], Vec::new()))
}

pub fn pairing(
    source: &Source,
    filter: &Filter,
    choice: &QuantifierChoice,
    sampling: &Sampling,
    term: Option<&str>,
) -> Result<Outcome, CliError> {
    let entries = source.entries(filter, "pairing")?;
    let rows = pairs(&entries, choice)?;
    let terms = match term {
        Some(s) => vec![parse_cd(s)?],
        None => {
            let shape = TermShape {
                depth: sampling.depth,
                vars: sampling.vars,
                quantifiers: true,
            };
            sample_cd(sampling.seed, &shape, sampling.sample)
        }
    };
    let checked: Vec<Checked<String, Option<Value>>> = rows
        .par_iter()
        .map(|(name, i, l, q)| {
            let pairing = Pairing::new(l, q)?;
            let mut failed = 0usize;
            let mut first = None;
            for t in &terms {
                let out = pairing.check_all(t)?;
                if !out.holds {
                    failed += 1;
                    if first.is_none() {
                        first = out.witness;
                    }
                }
            }
            let label = format!("{name} [{i}]");
            let line = format!("{label}: {} terms, {failed} mismatches", terms.len());
            let fail = first.as_ref().map(|w| {
                json!({
                    "algebra": label,
                    "check": "pairing",
                    "witness": w,
                    "witness_pairs": witness_pairs(&pairing, &w.assignment),
                })
            });
            let result =
                json!({ "algebra": name, "index": i, "terms": terms.len(), "mismatches": failed });
            Ok((line, result, fail))
        })
        .collect();
    let mut text = Text::default();
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for c in checked {
        let (line, result, fail) = c?;
        text.line(line);
        results.push(result);
        failures.extend(fail);
    }
    text.line(format!(
        "{} terms on {} quantifier pairs: {}",
        terms.len(),
        results.len(),
        pass_word(failures.is_empty())
    ));
    Ok(finish("pairing", text, results, failures))
}

pub fn consequence(
    source: &Source,
    filter: &Filter,
    choice: &QuantifierChoice,
    premises: &[String],
    conclusion: Option<&str>,
    suite: bool,
    limits: &ConsequenceLimits,
) -> Result<Outcome, CliError> {
    let entries = source.entries(filter, "consequence")?;
    let rows = pairs(&entries, choice)?;
    let problems = if suite {
        problem_suite()
    } else {
        let conclusion =
            conclusion.ok_or_else(|| CliError::Usage("--conclusion is required".into()))?;
        let premises: Vec<&str> = premises.iter().map(String::as_str).collect();
        vec![Problem::parse("given", &premises, conclusion)?]
    };
    let instances: Vec<_> = rows
        .iter()
        .map(|(_, _, l, q)| (l.clone(), q.clone()))
        .collect();
    let pairings = rows
        .iter()
        .map(|(_, _, l, q)| Pairing::new(l, q))
        .collect::<Result<Vec<_>, _>>()?;
    let reports = problems
        .par_iter()
        .map(|p| paired_consequence_check(&instances, p, limits))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = Text::default();
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for r in &reports {
        text.line(format!(
            "{}: K side {}, L side {}, {}",
            r.problem,
            if r.holds_a { "holds" } else { "fails" },
            if r.holds_b { "holds" } else { "fails" },
            if r.is_consistent() {
                "agree"
            } else {
                "DISAGREE"
            }
        ));
        // the first counter-model on the K side, as base pairs
        let counter = r
            .side_a
            .iter()
            .zip(&pairings)
            .zip(&rows)
            .find_map(|((v, p), (name, i, _, _))| {
                v.witness
                    .as_ref()
                    .map(|w| json!({ "algebra": name, "index": i, "witness_pairs": witness_pairs(p, w) }))
            });
        if !r.is_consistent() {
            failures.push(json!({
                "problem": r.problem,
                "check": "consequence agreement",
                "paired_disagreements": r.paired_disagreements,
                "counter_model": counter,
            }));
        }
        results.push(json!({ "report": r, "counter_model": counter }));
    }
    Ok(finish("consequence", text, results, failures))
}

pub fn enumerate(
    size: Option<usize>,
    max_size: Option<usize>,
    cap: usize,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let sizes: Vec<usize> = match (size, max_size) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => return Err(CliError::Usage("give --size or --max-size".into())),
    };
    let mut text = Text::default();
    let mut results = Vec::new();
    let mut all: Vec<CatalogEntry> = Vec::new();
    for n in sizes {
        let entries = enumerate_rls_with_cap(n, cap)?;
        let rdl = entries.iter().filter(|e| e.flags.is_rdl).count();
        let mv = entries.iter().filter(|e| e.flags.is_mv).count();
        let q: usize = entries.iter().map(|e| e.quantifiers.len()).sum();
        text.line(format!(
            "size {n}: {} residuated lattices, {rdl} distributive, {mv} MV, {q} quantifier pairs",
            entries.len()
        ));
        results.push(json!({ "size": n, "count": entries.len(), "rdl": rdl, "mv": mv, "quantifier_pairs": q }));
        all.extend(entries);
    }
    if let Some(path) = out {
        save(&all, path)?;
        text.line(format!(
            "saved {} algebras to {}",
            all.len(),
            path.display()
        ));
    }
    Ok(finish("enumerate", text, results, Vec::new()))
}

pub fn export_dot(
    source: &Source,
    filter: &Filter,
    kalman: bool,
    dot: Option<&Path>,
) -> Result<Outcome, CliError> {
    let graphs: Vec<String> = match source.load(filter)? {
        Loaded::View(v) => vec![view_to_dot(&v)],
        Loaded::Entries(entries) => entries
            .iter()
            .map(|e| {
                Ok(if kalman {
                    kalman_to_dot(&build_k(&e.algebra)?)
                } else {
                    algebra_to_dot(&e.algebra)
                })
            })
            .collect::<Result<_, KalmanError>>()?,
    };
    let all = graphs.concat();
    let mut text = Text::default();
    match dot {
        Some(path) => {
            write_text(path, &all)?;
            text.line(format!(
                "wrote {} graphs to {}",
                graphs.len(),
                path.display()
            ));
        }
        None => text.line(all.trim_end()),
    }
    Ok(finish(
        "export-dot",
        text,
        vec![json!({ "dot": all })],
        Vec::new(),
    ))
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--pair expects `x,y`, got `{s}`"));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        x.trim().parse().map_err(|_| bad())?,
        y.trim().parse().map_err(|_| bad())?,
    ))
}

pub fn congruence(
    source: &Source,
    filter: &Filter,
    pair: Option<&str>,
) -> Result<Outcome, CliError> {
    let entries = source.entries(filter, "congruence")?;
    let given = pair.map(parse_pair).transpose()?;
    let mut text = Text::default();
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for e in &entries {
        let a = &e.algebra;
        let n = a.size();
        let generators: Vec<(usize, usize)> = match given {
            Some((x, y)) if x >= n || y >= n => {
                return Err(CliError::Usage(format!(
                    "{}: elements are 0..{}",
                    e.name, n
                )))
            }
            Some(p) => vec![p],
            None => (0..n)
                .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
                .collect(),
        };
        for (x, y) in generators {
            let cong = congruence_generated(a, &[(x, y)]);
            let mut r = AxiomReport::new();
            r.check("compatible", cong.is_compatible(a));
            let q = quotient(a, &cong);
            match &q {
                Ok(qa) => r.extend_prefixed("quotient: ", qa.validate_rl()),
                Err(_) => r.push("quotient builds", vec![x, y]),
            }
            text.line(format!(
                "{}: Cg({x},{y}) = {:?}; {}",
                e.name,
                cong.blocks(),
                describe(&r)
            ));
            if !r.is_pass() {
                failures.push(failure(&e.name, &format!("Cg({x},{y})"), &r, None));
            }
            results.push(json!({
                "algebra": e.name,
                "generator": [x, y],
                "blocks": cong.blocks(),
                "quotient_size": q.as_ref().map(|qa| qa.size()).ok(),
                "checks": report_json(&r, None),
            }));
        }
    }
    Ok(finish("congruence", text, results, failures))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_syntax() {
        assert_eq!(parse_pair("1,2").unwrap(), (1, 2));
        assert_eq!(parse_pair(" 0 , 3 ").unwrap(), (0, 3));
        assert!(matches!(parse_pair("1"), Err(CliError::Usage(_))));
        assert!(matches!(parse_pair("a,b"), Err(CliError::Usage(_))));
    }

    #[test]
    fn translate_needs_one_input() {
        assert!(matches!(
            translate(None, None, None),
            Err(CliError::Usage(_))
        ));
        let o = translate(None, None, Some("c")).unwrap();
        assert!(o.pass);
        assert_eq!(o.json["results"][0]["first"], "0");
    }
}
