use std::path::Path;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use cayley_theta::apps::{efp_csv, efp_grid, efp_table, EfpTableOptions};
use cayley_theta::characters::{
    import_character_table, is_positive_type, is_positive_type_class, table_to_json, CharacterTable,
    ClassFunction, GroupFunction, IrrepMatrices, JsonScalar, Spectrum, TableFile, attach_to_group,
};
use cayley_theta::graphs::{alpha_with_budget, blowup_connection, build_cayley, AlphaResult, ConnectionSet, Graph};
use cayley_theta::groups::{load_action, FiniteGroup};
use cayley_theta::registry::Registry;
use cayley_theta::scalar::Scalar;
use cayley_theta::theta::{build_lp_d, certificate_json, export_sdpa, solve_theta, CayleyGraphSpec};

use crate::report::RunReport;
use crate::{ChartableAction, Command, Target};

const BUDGET_EXHAUSTED: u8 = 3;

pub fn run(command: Command, report: &mut RunReport) -> Result<u8> {
    let registry = Registry::standard();
    match command {
        Command::Theta { target, exact, float, lp_out } => theta(&registry, report, &target, exact, float, lp_out.as_deref()),
        Command::Alpha { group, connection, graph, budget } => {
            alpha(&registry, report, group.zip(connection), graph.as_deref(), budget)
        }
        Command::EfpTable { nmax, csv, jobs, float, budget } => efp(report, nmax, csv.as_deref(), jobs, float, budget),
        Command::ExportSdpa { target, formulation, out, irreps } => {
            sdpa(&registry, report, &target, &formulation, &out, irreps.as_deref())
        }
        Command::Chartable { action, group, out } => chartable(&registry, report, action, group, out.as_deref()),
        Command::Bochner { group, function, chartable, irreps } => {
            bochner(&registry, report, &group, &function, chartable.as_deref(), irreps.as_deref())
        }
        Command::Blowup { graph, action, base, alpha, budget } => blowup(report, &graph, &action, base, alpha, budget),
    }
}

fn budget_of(seconds: Option<f64>) -> Result<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| anyhow!(cayley_theta::Error::InvalidArgument(format!("bad budget {s}")))))
        .transpose()
}

/// Records file paths hidden inside `table:FILE` or `elements:FILE`.
fn note_spec_input(report: &mut RunReport, spec: &str) {
    if let Some((kind, rest)) = spec.split_once(':') {
        if (kind == "table" || kind == "elements") && !rest.trim_start().starts_with('{') {
            report.add_input(Path::new(rest));
        }
    }
}

fn load_group(
    registry: &Registry,
    report: &mut RunReport,
    spec: &str,
    chartable: Option<&Path>,
) -> Result<(FiniteGroup, Option<CharacterTable>)> {
    note_spec_input(report, spec);
    let (group, mut table) = registry.group(spec)?;
    if let Some(path) = chartable {
        report.add_input(path);
        table = Some(import_character_table(path, &group)?);
    }
    Ok((group, table))
}

fn load_target(
    registry: &Registry,
    report: &mut RunReport,
    target: &Target,
) -> Result<(FiniteGroup, Option<CharacterTable>, ConnectionSet)> {
    let (group, table) = load_group(registry, report, &target.group, target.chartable.as_deref())?;
    note_spec_input(report, &target.connection);
    let connection = registry.connection(&group, &target.connection)?;
    Ok((group, table, connection))
}

fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(r) => Value::String(r.to_string()),
        Scalar::Approx(z) if z.im == 0.0 => json!(z.re),
        Scalar::Approx(z) => json!([z.re, z.im]),
    }
}

fn no_table() -> anyhow::Error {
    anyhow!(cayley_theta::Error::InvalidArgument(
        "no character table for this group; pass --chartable FILE".into()
    ))
}

fn theta(
    registry: &Registry,
    report: &mut RunReport,
    target: &Target,
    exact: bool,
    float: bool,
    lp_out: Option<&Path>,
) -> Result<u8> {
    let (group, table, connection) = load_target(registry, report, target)?;
    let table = table.ok_or_else(no_table)?;
    let table = if float {
        table.to_approx()
    } else if exact && !table.is_exact() {
        bail!(cayley_theta::Error::InvalidArgument(
            "the character table is not rational; use --float".into()
        ));
    } else {
        table
    };
    let size = connection.len();
    let spec = CayleyGraphSpec::new(&group, connection)?;
    if let Some(path) = lp_out {
        let lp = build_lp_d(&spec, &table)?;
        std::fs::write(path, lp.dump()).with_context(|| format!("writing {}", path.display()))?;
    }
    let cert = solve_theta(&spec, &table)?;
    report.mode = Some(if cert.exact { "exact" } else { "float" });
    match &cert.objective {
        Scalar::Exact(r) => println!("theta = {r} (exact)"),
        Scalar::Approx(z) => println!("theta ≈ {:.7}", z.re),
    }
    let mut results = certificate_json(&cert);
    results["group_order"] = json!(group.order());
    results["connection_size"] = json!(size);
    results["rigorous"] = json!(cert.exact);
    report.results = results;
    Ok(0)
}

fn alpha_json(result: &AlphaResult, labels: impl Fn(usize) -> String) -> Value {
    let witness: Vec<String> = result.witness().iter().map(|&v| labels(v)).collect();
    json!({
        "exact": result.is_exact(),
        "lower": result.lower(),
        "upper": result.upper(),
        "witness": witness,
    })
}

fn print_alpha(name: &str, result: &AlphaResult) -> u8 {
    match result {
        AlphaResult::Exact { value, .. } => {
            println!("{name} = {value}");
            0
        }
        AlphaResult::Bounds { lower, upper, .. } => {
            println!("{name} in [{lower}, {upper}] (budget exhausted)");
            BUDGET_EXHAUSTED
        }
    }
}

fn alpha(
    registry: &Registry,
    report: &mut RunReport,
    cayley: Option<(String, String)>,
    graph_path: Option<&Path>,
    budget: Option<f64>,
) -> Result<u8> {
    let budget = budget_of(budget)?;
    report.mode = Some("exact");
    let (graph, group) = match (cayley, graph_path) {
        (Some((g, c)), None) => {
            let (group, _) = load_group(registry, report, &g, None)?;
            note_spec_input(report, &c);
            let x = registry.connection(&group, &c)?;
            (build_cayley(&group, &x)?, Some(group))
        }
        (None, Some(path)) => {
            report.add_input(path);
            (Graph::load(path)?, None)
        }
        _ => bail!(cayley_theta::Error::InvalidArgument(
            "give either --group and --connection or --graph".into()
        )),
    };
    let result = alpha_with_budget(&graph, budget);
    let code = print_alpha("alpha", &result);
    report.results = alpha_json(&result, |v| match &group {
        Some(g) => g.element_label(v),
        None => v.to_string(),
    });
    Ok(code)
}

fn efp(report: &mut RunReport, nmax: usize, csv: Option<&Path>, jobs: usize, float: bool, budget: Option<f64>) -> Result<u8> {
    let options = EfpTableOptions {
        n_max: nmax,
        exact: !float,
        jobs: jobs.max(1),
        budget: budget_of(budget)?,
    };
    report.mode = Some(if float { "float" } else { "exact" });
    let cells = efp_table(&options)?;
    for c in &cells {
        let theta = c.theta.as_ref().map_or("-".to_string(), Scalar::to_text);
        let mark = if c.checkmark { " ✓" } else { "" };
        eprintln!("n={} k={} theta={theta} conjectured={}{mark} ({} ms)", c.n, c.k, c.conjectured_max, c.runtime_ms);
    }
    print!("{}", efp_grid(&cells));
    if let Some(path) = csv {
        std::fs::write(path, efp_csv(&cells)).with_context(|| format!("writing {}", path.display()))?;
    }
    let gaps = cells.iter().filter(|c| c.theta.is_none()).count();
    report.results = json!({
        "cells": cells.iter().map(|c| json!({
            "n": c.n,
            "k": c.k,
            "theta": c.theta.as_ref().map(scalar_json),
            "conjectured_max": c.conjectured_max,
            "maximizing_i": c.maximizing_i,
            "checkmark": c.checkmark,
            "lp_rows": c.lp_rows,
            "lp_cols": c.lp_cols,
        })).collect::<Vec<_>>(),
        "gaps": gaps,
    });
    if gaps > 0 {
        eprintln!("{gaps} cells not computed within the budget");
        return Ok(BUDGET_EXHAUSTED);
    }
    Ok(0)
}

fn sdpa(
    registry: &Registry,
    report: &mut RunReport,
    target: &Target,
    formulation: &str,
    out: &Path,
    irreps: Option<&Path>,
) -> Result<u8> {
    let (group, _, connection) = load_target(registry, report, target)?;
    let reps = match irreps {
        Some(path) => {
            report.add_input(path);
            Some(IrrepMatrices::load(path, &group)?)
        }
        None => None,
    };
    let spec = CayleyGraphSpec::new(&group, connection)?;
    let f = registry.formulation(formulation)?;
    let inst = f.build(&spec, reps.as_ref())?;
    export_sdpa(&inst, out)?;
    report.mode = Some("float");
    println!(
        "wrote {}: formulation {}, blocks {:?}, {} constraints",
        out.display(),
        f.name(),
        inst.block_sizes,
        inst.constraint_count()
    );
    report.results = json!({
        "formulation": f.name(),
        "out": out.display().to_string(),
        "block_sizes": inst.block_sizes,
        "constraints": inst.constraint_count(),
    });
    Ok(0)
}

fn chartable(
    registry: &Registry,
    report: &mut RunReport,
    action: Option<ChartableAction>,
    group: Option<String>,
    out: Option<&Path>,
) -> Result<u8> {
    match action {
        Some(ChartableAction::Validate { file, group }) => {
            report.add_input(&file);
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let parsed: TableFile = serde_json::from_str(&text).map_err(|e| cayley_theta::Error::Schema(e.to_string()))?;
            parsed.validate()?;
            let mut attached = false;
            if let Some(spec) = group {
                let (g, _) = load_group(registry, report, &spec, None)?;
                attach_to_group(&parsed, &g)?;
                attached = true;
            }
            report.mode = Some(if parsed.exact { "exact" } else { "float" });
            println!(
                "valid character table: {} irreps, group order {}{}",
                parsed.degrees.len(),
                parsed.group_order,
                if attached { ", matches the group" } else { "" }
            );
            report.results = json!({"valid": true, "irreps": parsed.degrees.len(), "group_order": parsed.group_order});
            Ok(0)
        }
        None => {
            let spec = group.ok_or_else(|| anyhow!(cayley_theta::Error::InvalidArgument("chartable needs --group or validate".into())))?;
            let (_, table) = load_group(registry, report, &spec, None)?;
            let table = table.ok_or_else(|| anyhow!(cayley_theta::Error::InvalidArgument(format!("no built-in character table for {spec}"))))?;
            let text = serde_json::to_string_pretty(&table_to_json(&table))? + "\n";
            match out {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    println!("wrote {} ({} irreps)", path.display(), table.irrep_count());
                }
                None => print!("{text}"),
            }
            report.mode = Some(if table.is_exact() { "exact" } else { "float" });
            report.results = json!({"irreps": table.irrep_count(), "labels": table.irrep_labels()});
            Ok(0)
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    values: Option<Vec<JsonScalar>>,
    class_values: Option<Vec<JsonScalar>>,
}

fn bochner(
    registry: &Registry,
    report: &mut RunReport,
    group_spec: &str,
    function: &Path,
    chartable: Option<&Path>,
    irreps: Option<&Path>,
) -> Result<u8> {
    let (group, table) = load_group(registry, report, group_spec, chartable)?;
    report.add_input(function);
    let text = std::fs::read_to_string(function).with_context(|| format!("reading {}", function.display()))?;
    let file: FunctionFile = serde_json::from_str(&text).map_err(|e| cayley_theta::Error::Schema(e.to_string()))?;
    let decode = |v: &[JsonScalar]| v.iter().map(JsonScalar::to_scalar).collect::<cayley_theta::Result<Vec<_>>>();
    let reps = match irreps {
        Some(path) => {
            report.add_input(path);
            Some(IrrepMatrices::load(path, &group)?)
        }
        None => None,
    };
    let verdict = match (&file.values, &file.class_values) {
        (None, Some(values)) => {
            let f = ClassFunction::new(&group, decode(values)?)?;
            report.mode = Some(if f.is_exact() { "exact" } else { "float" });
            match (&reps, &table) {
                (_, Some(t)) => is_positive_type_class(&f, t)?,
                (Some(r), None) => is_positive_type(&f.to_group_function(), Spectrum::Irreps(r))?,
                (None, None) => return Err(no_table()),
            }
        }
        (Some(values), None) => {
            let f = GroupFunction::new(&group, decode(values)?)?;
            report.mode = Some(if f.is_exact() { "exact" } else { "float" });
            match (&reps, &table) {
                (Some(r), _) => is_positive_type(&f, Spectrum::Irreps(r))?,
                (None, Some(t)) => is_positive_type(&f, Spectrum::Characters(t))?,
                (None, None) => return Err(no_table()),
            }
        }
        _ => bail!(cayley_theta::Error::Schema(
            "function file needs exactly one of `values` and `class_values`".into()
        )),
    };
    match &verdict.witness {
        None => println!("positive type: yes"),
        Some((_, label, value)) => println!("positive type: no (irrep {label}: {})", value.to_text()),
    }
    report.results = json!({
        "positive": verdict.positive,
        "witness": verdict.witness.as_ref().map(|(i, label, v)| json!({"irrep": i, "label": label, "value": scalar_json(v)})),
    });
    Ok(0)
}

fn blowup(report: &mut RunReport, graph_path: &Path, action_path: &Path, base: usize, with_alpha: bool, budget: Option<f64>) -> Result<u8> {
    report.add_input(graph_path);
    report.add_input(action_path);
    report.mode = Some("exact");
    let graph = Graph::load(graph_path)?;
    let action = load_action(action_path)?;
    let x = blowup_connection(&action, &graph, base)?;
    let group = action.group();
    let labels: Vec<String> = x.elements().iter().map(|&e| group.element_label(e)).collect();
    println!("connection set ({} elements): {{{}}}", x.len(), labels.join(", "));
    let mut results = json!({
        "group_order": group.order(),
        "vertices": graph.vertex_count(),
        "connection": labels,
    });
    let mut code = 0;
    if with_alpha {
        let cayley = build_cayley(group, &x)?;
        let result = alpha_with_budget(&cayley, budget_of(budget)?);
        code = print_alpha("alpha(Cay)", &result);
        let n = graph.vertex_count() as u128;
        let order = group.order() as u128;
        if let AlphaResult::Exact { value, .. } = &result {
            let scaled = *value as u128 * n;
            if scaled % order == 0 {
                println!("alpha(graph) = {}", scaled / order);
            } else {
                println!("alpha(graph) = {scaled}/{order}");
            }
        }
        results["alpha_cayley"] = alpha_json(&result, |v| group.element_label(v));
    }
    report.results = results;
    Ok(code)
}
