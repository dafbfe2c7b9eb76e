use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use symca::engine::{detect_cycle, load_state, run_with, save_state, RunOptions};
use symca::f2poly::{
    day_and_night_combined, decomposition_fixture, rule_to_anf, verify_implied_relation, LifeRule, Verification,
};
use symca::lattice::{classify_tiling, io, TilingClass};
use symca::pattern::{import_rle, place, render_grid};
use symca::rule::{
    count_bw_fixed, count_orbits_bruteforce, count_orbits_closed, count_rules, enumerate_orbit_reps, BsRule,
};
use symca::{CaState, Lattice, Level, RelationTemplate, SymmetricRule};

use crate::lattice_spec::{self, parse_dims};
use crate::{Cli, Command, Export, Format, LatticeArgs};

pub fn dispatch(cli: &Cli) -> Result<ExitCode> {
    let fmt = cli.format;
    match &cli.command {
        Command::Count { q, k, level, bruteforce, cap } => count(fmt, *q, *k, (*level).into(), *bruteforce, *cap),
        Command::Enumerate { k, level, limit, cap } => enumerate(fmt, *k, (*level).into(), *limit, *cap),
        Command::Lattice { lattice, export, out } => lattice_cmd(fmt, lattice, *export, out.as_deref()),
        Command::Run {
            rule,
            q,
            lattice,
            steps,
            max_steps,
            pattern,
            offset,
            state,
            seed,
            density,
            interior_only,
            census_csv,
            out_state,
        } => {
            let lat = build_lattice(lattice)?;
            let rule = parse_rule(rule, *q, lat.valence() as u32)?;
            let init = initial_state(&lat, &rule, pattern.as_deref(), offset, state.as_deref(), *seed, *density)?;
            let opts = RunOptions { interior_only: *interior_only, ..Default::default() };
            run(fmt, &lat, &rule, init, *steps, *max_steps, opts, census_csv.as_deref(), out_state.as_deref())
        }
        Command::Poly { rule, k } => poly(fmt, rule, *k),
        Command::VerifyDecomposition { rule, relation } => verify(fmt, rule, relation),
        Command::Classify { p, k } => classify(fmt, *p, *k),
    }
}

fn emit_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn parse_rule(text: &str, q: u8, k: u32) -> Result<SymmetricRule> {
    let rule = if q == 2 { SymmetricRule::parse(text, k)? } else { SymmetricRule::from_alpha(q, k, text)? };
    Ok(rule)
}

fn build_lattice(args: &LatticeArgs) -> Result<Lattice> {
    let dims = args.dims.as_deref().map(parse_dims).transpose()?;
    lattice_spec::build(&args.lattice, dims, args.layers)
}

fn count(fmt: Format, q: u8, k: u32, level: Level, bruteforce: bool, cap: u64) -> Result<ExitCode> {
    let total = count_rules(q, k, level).to_string();
    let (bw_fixed, mut orbits) = if q == 2 {
        (Some(count_bw_fixed(k, level).to_string()), Some(count_orbits_closed(k, level).to_string()))
    } else {
        (None, None)
    };
    let brute = if bruteforce { Some(count_orbits_bruteforce(q, k, level, cap)?.to_string()) } else { None };
    if orbits.is_none() {
        orbits.clone_from(&brute);
    }
    match fmt {
        Format::Json => emit_json(&json!({
            "q": q,
            "k": k,
            "level": level.name(),
            "total": total,
            "bw_fixed": bw_fixed,
            "orbits": orbits,
            "orbits_bruteforce": brute,
        })),
        Format::Csv => {
            println!("q,k,level,total,bw_fixed,orbits,orbits_bruteforce");
            let o = |v: &Option<String>| v.clone().unwrap_or_default();
            println!("{q},{k},{},{total},{},{},{}", level.name(), o(&bw_fixed), o(&orbits), o(&brute));
        }
        Format::Text => {
            let na = |v: &Option<String>| v.clone().unwrap_or_else(|| "n/a".into());
            println!("q={q} k={k} level={}", level.name());
            println!("total     {total}");
            println!("bw-fixed  {}", na(&bw_fixed));
            println!("orbits    {}", na(&orbits));
            if let Some(b) = &brute {
                println!("orbits (brute force)  {b}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bs_name(rule: &SymmetricRule) -> Option<String> {
    BsRule::from_rule(rule).ok().map(|b| b.to_string())
}

fn enumerate(fmt: Format, k: u32, level: Level, limit: Option<usize>, cap: u64) -> Result<ExitCode> {
    let reps = enumerate_orbit_reps(k, level, cap)?.take(limit.unwrap_or(usize::MAX));
    match fmt {
        Format::Text => {
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            for r in reps {
                std::io::Write::write_all(&mut out, format!("{}\n", r.alpha_string()).as_bytes())?;
            }
        }
        Format::Csv => {
            println!("alpha,bs");
            for r in reps {
                println!("{},{}", r.alpha_string(), bs_name(&r).unwrap_or_default());
            }
        }
        Format::Json => {
            let items: Vec<Value> = reps.map(|r| json!({ "alpha": r.alpha_string(), "bs": bs_name(&r) })).collect();
            emit_json(&Value::Array(items));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn lattice_report(spec: &str, l: &Lattice) -> Value {
    let chi = l.euler_characteristic().ok();
    let face_sizes: serde_json::Map<String, Value> = l
        .face_size_histogram()
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(size, &n)| (size.to_string(), json!(n)))
        .collect();
    json!({
        "lattice": spec,
        "cells": l.cell_count(),
        "edges": l.edge_count(),
        "faces": l.faces().map(<[_]>::len),
        "valence": l.valence(),
        "surface": l.surface().name(),
        "schlafli": l.schlafli().map(|(p, k)| vec![p, k]),
        "grid": l.grid().map(|(w, h)| vec![w, h]),
        "euler_characteristic": chi,
        "expected_euler_characteristic": l.surface().euler_characteristic(),
        "orientable": l.is_orientable(),
        "face_sizes": face_sizes,
        "boundary_cells": l.boundary_cells().count(),
        "valid": l.validate().is_ok(),
    })
}

fn lattice_cmd(fmt: Format, args: &LatticeArgs, export: Export, out: Option<&Path>) -> Result<ExitCode> {
    let l = build_lattice(args)?;
    let text = match export {
        Export::Report => {
            let report = lattice_report(&args.lattice, &l);
            match fmt {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text | Format::Csv => {
                    let mut s = String::new();
                    for (key, v) in report.as_object().expect("report is an object") {
                        let shown = match v {
                            Value::Null => "n/a".to_string(),
                            Value::String(x) => x.clone(),
                            other => other.to_string(),
                        };
                        if fmt == Format::Csv {
                            writeln!(s, "{key},\"{}\"", shown.replace('"', "\"\""))?;
                        } else {
                            writeln!(s, "{key}: {shown}")?;
                        }
                    }
                    s
                }
            }
        }
        Export::Edges => io::edge_list(&l),
        Export::Faces => io::format_faces(l.faces().ok_or_else(|| anyhow!("this lattice carries no faces"))?),
        Export::Embedding => io::embedding_csv(&l).ok_or_else(|| anyhow!("this lattice has no planar embedding"))?,
    };
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn initial_state(
    lattice: &Lattice,
    rule: &SymmetricRule,
    pattern: Option<&Path>,
    offset: &str,
    state: Option<&Path>,
    seed: u64,
    density: f64,
) -> Result<CaState> {
    let n = lattice.cell_count();
    if let Some(path) = state {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(load_state(&text, lattice)?);
    }
    if let Some(path) = pattern {
        if rule.q() != 2 {
            bail!("RLE patterns are binary; the rule has q={}", rule.q());
        }
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc = import_rle(&text)?;
        let offset = parse_dims(offset).context("--offset must look like X,Y")?;
        return Ok(place(&doc, lattice, &CaState::zeros(2, n)?, offset)?);
    }
    if rule.q() == 2 {
        Ok(CaState::random_binary(n, density, seed))
    } else {
        Ok(CaState::random(rule.q(), n, seed)?)
    }
}

#[allow(clippy::too_many_arguments)]
fn run(
    fmt: Format,
    lattice: &Lattice,
    rule: &SymmetricRule,
    init: CaState,
    steps: u64,
    max_steps: Option<u64>,
    opts: RunOptions,
    census_csv: Option<&Path>,
    out_state: Option<&Path>,
) -> Result<ExitCode> {
    let (last, census) = run_with(lattice, rule, &init, steps, opts)?;
    let cycle = match max_steps {
        Some(0) => bail!("--max-steps must be at least 1"),
        Some(m) => Some(detect_cycle(lattice, rule, &init, m)?),
        None => None,
    };
    if let Some(path) = census_csv {
        fs::write(path, census.to_csv()).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = out_state {
        fs::write(path, save_state(&last, lattice)).with_context(|| format!("writing {}", path.display()))?;
    }
    let final_census = census.rows.last().cloned().unwrap_or_default();
    match fmt {
        Format::Csv => print!("{}", census.to_csv()),
        Format::Json => emit_json(&json!({
            "rule": rule.alpha_string(),
            "bs": bs_name(rule),
            "cells": lattice.cell_count(),
            "generation": last.generation(),
            "census": census.rows,
            "interior_only": census.interior_only,
            "final_census": final_census,
            "cycle": cycle.map(|c| c.map(|c| json!({ "transient": c.transient, "period": c.period }))),
            "max_steps": max_steps,
            "state": save_state(&last, lattice),
        })),
        Format::Text => {
            print!("{}", render_grid(&last, lattice));
            println!("generation {}", last.generation());
            let parts: Vec<String> = final_census.iter().enumerate().map(|(s, n)| format!("s{s}={n}")).collect();
            println!("census {}", parts.join(" "));
            match (cycle, max_steps) {
                (Some(Some(c)), _) => println!("cycle transient {} period {}", c.transient, c.period),
                (Some(None), Some(m)) => println!("cycle none within {m} steps"),
                _ => {}
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn poly(fmt: Format, text: &str, k: u32) -> Result<ExitCode> {
    let rule = SymmetricRule::parse(text, k)?;
    let p = rule_to_anf(&rule)?;
    match fmt {
        Format::Json => emit_json(&json!({
            "rule": rule.alpha_string(),
            "bs": bs_name(&rule),
            "anf": p.to_string(),
            "degree": p.degree(),
            "terms": p.len(),
        })),
        Format::Csv => {
            println!("rule,degree,terms,anf");
            println!("{},{},{},{}", rule.alpha_string(), p.degree(), p.len(), p);
        }
        Format::Text => {
            println!("anf {p}");
            println!("degree {}", p.degree());
            println!("terms {}", p.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn describe_failure(v: &Verification, template: &RelationTemplate) -> Option<String> {
    let ce = v.counterexample.as_ref()?;
    let binding: Vec<String> =
        template.holes().iter().zip(&ce.tuple).map(|(h, t)| format!("{}={t}", h.name())).collect();
    let leaves: String = ce.leaves.iter().map(|b| char::from(b'0' + b)).collect();
    Some(format!("tuple ({}) x1..x8={leaves} x9={} xp9={}", binding.join(","), ce.center, ce.next))
}

fn verify(fmt: Format, name: &str, extra: &[String]) -> Result<ExitCode> {
    let (rule, mut relations): (SymmetricRule, Vec<(String, RelationTemplate)>) = match name.parse::<LifeRule>() {
        Ok(life) => {
            let mut rels: Vec<(String, RelationTemplate)> =
                decomposition_fixture(life).into_iter().enumerate().map(|(i, t)| ((i + 1).to_string(), t)).collect();
            if life == LifeRule::DayAndNight {
                rels.push(("combined".into(), day_and_night_combined()));
            }
            (life.rule().to_rule(), rels)
        }
        Err(_) => {
            let rule = SymmetricRule::parse(name, 8)
                .with_context(|| format!("{name:?} is neither a known rule name nor a rule on 8 leaves"))?;
            if extra.is_empty() {
                bail!("no published relations for {name:?}; pass --relation");
            }
            (rule, Vec::new())
        }
    };
    for (i, text) in extra.iter().enumerate() {
        relations.push((format!("custom{}", i + 1), RelationTemplate::parse(text)?));
    }
    let mut failed = false;
    let mut rows = Vec::new();
    for (label, t) in &relations {
        let v = verify_implied_relation(&rule, t)?;
        let failure = describe_failure(&v, t);
        failed |= failure.is_some();
        match fmt {
            Format::Text => match &failure {
                None => println!(
                    "PASS relation {label}: {t} ({} tuples, {} assignments)",
                    v.tuples_checked, v.assignments_checked
                ),
                Some(f) => println!("FAIL relation {label}: {t}: {f}"),
            },
            Format::Csv | Format::Json => rows.push((label.clone(), t.source().to_string(), v, failure)),
        }
    }
    match fmt {
        Format::Json => emit_json(&json!({
            "rule": rule.alpha_string(),
            "bs": bs_name(&rule),
            "relations": rows.iter().map(|(label, src, v, failure)| {
                let ce = v.counterexample.as_ref();
                json!({
                    "relation": label,
                    "text": src,
                    "holds": failure.is_none(),
                    "tuples": v.tuples_checked,
                    "assignments": v.assignments_checked,
                    "counterexample": ce.map(|c| json!({
                        "tuple": c.tuple,
                        "leaves": c.leaves,
                        "center": c.center,
                        "next": c.next,
                    })),
                })
            }).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            println!("relation,holds,tuples,assignments,counterexample");
            for (label, _, v, failure) in &rows {
                let f = failure.clone().unwrap_or_default();
                println!("{label},{},{},{},\"{f}\"", failure.is_none(), v.tuples_checked, v.assignments_checked);
            }
        }
        Format::Text => {}
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn classify(fmt: Format, p: u32, k: u32) -> Result<ExitCode> {
    let class = classify_tiling(p, k)?;
    let (name, counts) = match class {
        TilingClass::Spherical { v, e, f } => ("SPHERICAL", Some((v, e, f))),
        TilingClass::Euclidean => ("EUCLIDEAN", None),
        TilingClass::Hyperbolic => ("HYPERBOLIC", None),
    };
    match fmt {
        Format::Json => emit_json(&json!({
            "p": p,
            "k": k,
            "class": name,
            "vertices": counts.map(|c| c.0),
            "edges": counts.map(|c| c.1),
            "faces": counts.map(|c| c.2),
        })),
        Format::Csv => {
            println!("p,k,class,vertices,edges,faces");
            let (v, e, f) = counts.map_or((String::new(), String::new(), String::new()), |(v, e, f)| {
                (v.to_string(), e.to_string(), f.to_string())
            });
            println!("{p},{k},{name},{v},{e},{f}");
        }
        Format::Text => match counts {
            Some((v, e, f)) => println!("{name} V={v} E={e} F={f}"),
            None => println!("{name}"),
        },
    }
    Ok(ExitCode::SUCCESS)
}
