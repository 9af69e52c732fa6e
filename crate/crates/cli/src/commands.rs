use std::fs;
use std::path::Path;

use lattle::corpus::{builtin, serialize, BUILTIN_KEYS};
use lattle::laws::{
    check_all, lookup, recheck, run_law, search_counterexample, BindingValue, LawVerdict,
    SearchMode, SearchTarget, Status, Witness,
};
use lattle::{build_lattice, Lattice};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Format, Mode};
use crate::input::{load, CliError};
use crate::render::{dot, set_text, table, Style};
use crate::report::AnalysisReport;

/// What a command prints, plus its exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports always serialize");
    s.push('\n');
    s
}

pub fn analyze(cli: &Cli, input: &str, style: Style) -> Result<Output, CliError> {
    let l = load(input)?;
    Ok(Output::ok(match cli.format {
        Format::Dot => dot(&l),
        Format::Json => to_json(&AnalysisReport::new(
            &l,
            &cli.subset_universe(),
            cli.universe_name(),
        )),
        Format::Text => {
            AnalysisReport::new(&l, &cli.subset_universe(), cli.universe_name()).to_text(style)
        }
    }))
}

#[derive(Serialize)]
struct LawRun {
    name: String,
    size: usize,
    verdicts: Vec<LawVerdict>,
    holds: usize,
    fails: usize,
    hypothesis_never_met: usize,
}

fn binding_text(b: &BindingValue) -> String {
    match b {
        BindingValue::Element(x) => x.clone(),
        BindingValue::Set(xs) => set_text(xs),
        BindingValue::Flag(f) => f.to_string(),
    }
}

fn law_run_text(run: &LawRun, cli: &Cli, style: Style) -> String {
    let mut out = format!(
        "{} ({} elements, {} universe)\n",
        style.bold(&run.name),
        run.size,
        cli.universe_name()
    );
    let id_width = run.verdicts.iter().map(|v| v.law.len()).max().unwrap_or(0);
    for v in &run.verdicts {
        let status = format!("{:<22}", v.status.as_str());
        let status = match v.status {
            Status::Holds => style.good(&status),
            Status::Fails => style.bad(&status),
            Status::HypothesisNeverMet => style.muted(&status),
        };
        let anchor = lookup(&v.law).map(|l| l.anchor).unwrap_or("");
        out.push_str(&format!(
            "{status}{:<w$}  {:>6}  {anchor}\n",
            v.law,
            v.instances_checked,
            w = id_width
        ));
        if let Some(cx) = &v.counterexample {
            for (name, value) in &cx.bindings {
                out.push_str(&format!("    {name} = {}\n", binding_text(value)));
            }
        }
    }
    out.push_str(&format!(
        "{} holds, {} fails, {} hypothesis_never_met\n",
        run.holds, run.fails, run.hypothesis_never_met
    ));
    out
}

pub fn laws(
    cli: &Cli,
    inputs: &[String],
    ids: &[String],
    style: Style,
) -> Result<Output, CliError> {
    if cli.format == Format::Dot {
        return Err(CliError::Usage("laws has no dot output".into()));
    }
    let selected = ids
        .iter()
        .map(|id| lookup(id).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let universe = cli.subset_universe();
    let mut runs = Vec::new();
    for input in inputs {
        let l = load(input)?;
        let verdicts = if selected.is_empty() {
            check_all(&l, &universe)
        } else {
            selected
                .iter()
                .map(|law| run_law(&l, law, &universe))
                .collect()
        };
        let count = |st: Status| verdicts.iter().filter(|v| v.status == st).count();
        runs.push(LawRun {
            name: l.name().to_string(),
            size: l.len(),
            holds: count(Status::Holds),
            fails: count(Status::Fails),
            hypothesis_never_met: count(Status::HypothesisNeverMet),
            verdicts,
        });
    }
    let code = if runs.iter().any(|r| r.fails > 0) {
        4
    } else {
        0
    };
    let text = match cli.format {
        Format::Json => to_json(&json!({ "universe": cli.universe_name(), "lattices": runs })),
        _ => runs
            .iter()
            .map(|r| law_run_text(r, cli, style))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Output { text, code })
}

/// Rebuilds the hit from its serialized form and evaluates the target
/// again.
fn revalidate(target: &SearchTarget, hit: &Lattice, witness: &Witness) -> bool {
    let Ok(rebuilt) = build_lattice(&hit.to_spec()) else {
        return false;
    };
    match (target, witness) {
        (SearchTarget::Law(law), Witness::Law(v)) => v
            .counterexample
            .as_ref()
            .is_some_and(|cx| recheck(law.id, cx).unwrap_or(false)),
        (SearchTarget::Query(q), Witness::Query { filter }) => q.find(&rebuilt) == Some(*filter),
        _ => false,
    }
}

pub fn search(cli: &Cli, text: &str, style: Style) -> Result<Output, CliError> {
    let target = SearchTarget::parse(text).map_err(|e| CliError::Usage(e.to_string()))?;
    let mode = match cli.mode {
        Mode::Exhaustive => SearchMode::Exhaustive,
        Mode::Random => SearchMode::Random {
            seed: cli.seed,
            budget: cli.budget,
        },
    };
    let universe = cli.subset_universe();
    let report = search_counterexample(&target, cli.max_size, mode, &universe, cli.allow_large)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let found = report.hit.as_ref().map(|h| {
        let witness = match &h.witness {
            Witness::Law(v) => json!({ "kind": "law", "verdict": v }),
            Witness::Query { filter } => json!({
                "kind": "query",
                "filter": filter.map(|g| h.lattice.label(g).to_string()),
            }),
        };
        (h, witness, revalidate(&target, &h.lattice, &h.witness))
    });

    let out = match cli.format {
        Format::Dot => match &found {
            Some((h, _, _)) => dot(&h.lattice),
            None => "none\n".to_string(),
        },
        Format::Json => {
            let mut doc = json!({
                "target": target.describe(),
                "mode": match cli.mode { Mode::Exhaustive => "exhaustive", Mode::Random => "random" },
                "max_size": cli.max_size,
                "universe": cli.universe_name(),
                "examined": report.examined,
                "found": found.is_some(),
                "lattice": Value::Null,
                "witness": Value::Null,
                "revalidated": Value::Null,
            });
            if cli.mode == Mode::Random {
                doc["seed"] = json!(cli.seed);
                doc["budget"] = json!(cli.budget);
            }
            if let Some((h, w, ok)) = &found {
                doc["lattice"] = json!(h.lattice.to_spec());
                doc["witness"] = w.clone();
                doc["revalidated"] = json!(ok);
            }
            to_json(&doc)
        }
        Format::Text => {
            let mode = match mode {
                SearchMode::Exhaustive => format!("exhaustive, sizes 2..={}", cli.max_size),
                SearchMode::Random { seed, budget } => {
                    format!(
                        "random, sizes 2..={}, seed {seed}, budget {budget}",
                        cli.max_size
                    )
                }
            };
            let mut rows = vec![
                vec!["target".to_string(), target.describe()],
                vec!["mode".to_string(), mode],
                vec!["examined".to_string(), report.examined.to_string()],
            ];
            let mut tail = String::new();
            match &found {
                None => rows.push(vec!["found".into(), "none".into()]),
                Some((h, _, ok)) => {
                    let l = &h.lattice;
                    rows.push(vec![
                        "found".into(),
                        format!("{} ({} elements)", l.name(), l.len()),
                    ]);
                    let witness = match &h.witness {
                        Witness::Query { filter: Some(g) } => format!("filter F_{}", l.label(*g)),
                        Witness::Query { filter: None } => "the lattice itself".to_string(),
                        Witness::Law(v) => v
                            .counterexample
                            .as_ref()
                            .map(|cx| {
                                cx.bindings
                                    .iter()
                                    .map(|(k, b)| format!("{k} = {}", binding_text(b)))
                                    .collect::<Vec<_>>()
                                    .join("; ")
                            })
                            .unwrap_or_default(),
                    };
                    rows.push(vec!["witness".into(), witness]);
                    rows.push(vec![
                        "revalidated".into(),
                        if *ok {
                            style.good("yes")
                        } else {
                            style.bad("no")
                        },
                    ]);
                    tail = format!("\n{}\n{}", serialize(&l.to_spec()), dot(l));
                }
            }
            table(&rows, Style::default()) + &tail
        }
    };
    Ok(Output::ok(out))
}

pub fn corpus_list(cli: &Cli) -> Result<Output, CliError> {
    let entries: Vec<_> = BUILTIN_KEYS
        .iter()
        .map(|k| builtin(k).expect("built-in key"))
        .collect();
    Ok(Output::ok(match cli.format {
        Format::Json => to_json(
            &entries
                .iter()
                .map(|e| json!({ "key": e.key, "size": e.spec.elements.len(), "caption": e.caption }))
                .collect::<Vec<_>>(),
        ),
        Format::Dot => return Err(CliError::Usage("corpus list has no dot output".into())),
        Format::Text => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| vec![e.key.to_string(), e.spec.elements.len().to_string(), e.caption.to_string()])
                .collect();
            table(&rows, Style::default())
        }
    }))
}

pub fn corpus_show(cli: &Cli, key: &str) -> Result<Output, CliError> {
    let entry = builtin(key)?;
    Ok(Output::ok(match cli.format {
        Format::Json => serialize(&entry.spec),
        Format::Dot => dot(&entry.lattice()),
        Format::Text => {
            let covers = entry
                .spec
                .covers
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(", ");
            let mut out = format!(
                "{}: {}\nelements: {}\ncovers: {}\n",
                entry.key,
                entry.caption,
                entry.spec.elements.join(" "),
                covers
            );
            if !entry.notes.is_empty() {
                out.push_str(&format!("notes: {}\n", entry.notes));
            }
            out
        }
    }))
}

pub fn corpus_export(key: &str, path: &Path) -> Result<Output, CliError> {
    let entry = builtin(key)?;
    fs::write(path, serialize(&entry.spec))
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    Ok(Output::ok(format!("wrote {}\n", path.display())))
}
