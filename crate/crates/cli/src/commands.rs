use std::sync::Arc;

use hopfrb_core::action::{
    dualize_action, dualize_coaction, verify_antipode_bicolinear, verify_antipode_bilinear, verify_bicomodule_bialgebra,
    verify_bimodule_bialgebra,
};
use hopfrb_core::format::{
    common_field, resolve_cli_path, to_canonical_json, AlgebraFile, MapFile, MapKind, ResolvedAction, ResolvedCoaction,
};
use hopfrb_core::hopf::{linear_dual, verify_hopf};
use hopfrb_core::rota_baxter::{
    assess_rb_co_operator, assess_rb_operator, check_cor24_conditions, check_cor25_conditions, check_cor34_conditions,
    check_cor35_conditions, check_cor36_conditions, check_internal_2c2d, check_internal_3b, check_thm22_conditions,
    check_thm33_conditions, is_rb_co_operator, is_rb_operator, lift_rb_co_operator, lift_rb_operator,
};
use hopfrb_core::search::{enumerate_group_rb, iff_harness_thm22, iff_harness_thm33, transpose_duality_check, linearize_group_rb, HarnessSummary};
use hopfrb_core::smash::{smash_coproduct_preconditions, smash_product_preconditions};
use hopfrb_core::{
    lr_smash_coproduct, lr_smash_product, BicomoduleCoaction, BimoduleAction, FieldKind, FiniteGroup, LinearOperator,
    RBKind, RBOperatorCandidate, Scalar, VerificationReport,
};
use serde_json::{json, Value};

use crate::{Cli, CliError, Command, Output, Which};

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn read_algebra(arg: &str) -> Result<AlgebraFile, CliError> {
    Ok(AlgebraFile::read(&resolve_cli_path(arg))?)
}

fn read_map(arg: &str) -> Result<MapFile, CliError> {
    Ok(MapFile::read(&resolve_cli_path(arg))?)
}

fn read_action(paths: &[String]) -> Result<ResolvedAction, CliError> {
    match paths {
        [act] => Ok(ResolvedAction::read(&resolve_cli_path(act), None, None)?),
        [a, h, act] => Ok(ResolvedAction::read(&resolve_cli_path(act), Some(read_algebra(a)?), Some(read_algebra(h)?))?),
        _ => Err(input("expected ACTION or A H ACTION")),
    }
}

fn read_coaction(paths: &[String]) -> Result<ResolvedCoaction, CliError> {
    match paths {
        [co] => Ok(ResolvedCoaction::read(&resolve_cli_path(co), None, None)?),
        [c, h, co] => Ok(ResolvedCoaction::read(&resolve_cli_path(co), Some(read_algebra(c)?), Some(read_algebra(h)?))?),
        _ => Err(input("expected COACTION or C H COACTION")),
    }
}

enum FileKind {
    Algebra,
    Action,
    Coaction,
    Map,
}

fn sniff(arg: &str) -> Result<FileKind, CliError> {
    let path = resolve_cli_path(arg);
    let text = std::fs::read_to_string(&path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Ok(if v.get("matrix").is_some() {
        FileKind::Map
    } else if v.get("coalgebra").is_some() {
        FileKind::Coaction
    } else if v.get("left").is_some() {
        FileKind::Action
    } else {
        FileKind::Algebra
    })
}

fn one(path: &str) -> Vec<String> {
    vec![path.to_string()]
}

fn declared_fields(cmd: &Command) -> Result<Vec<FieldKind>, CliError> {
    let action = |p: &[String]| read_action(p).map(|a| a.fields());
    let coaction = |p: &[String]| read_coaction(p).map(|c| c.fields());
    match cmd {
        Command::CheckHopf { algebra } | Command::CheckRb { algebra, .. } | Command::CheckCorb { algebra, .. } => {
            Ok(vec![read_algebra(algebra)?.field])
        }
        Command::CheckAction { paths } | Command::Smash { paths } => action(paths),
        Command::CheckCoaction { paths } | Command::Cosmash { paths } => coaction(paths),
        Command::Lift { action: a, .. } => action(&one(a)),
        Command::Colift { coaction: c, .. } => coaction(&one(c)),
        Command::CheckConditions { action: a, coaction: c, .. } | Command::Harness { action: a, coaction: c, .. } => {
            match (a, c) {
                (Some(a), _) => action(&one(a)),
                (None, Some(c)) => coaction(&one(c)),
                (None, None) => Err(input("one of --action or --coaction is required")),
            }
        }
        Command::Enumerate { .. } => Ok(Vec::new()),
        Command::Dualize { input: i } => match sniff(i)? {
            FileKind::Algebra => Ok(vec![read_algebra(i)?.field]),
            FileKind::Action => action(&one(i)),
            FileKind::Coaction => coaction(&one(i)),
            FileKind::Map => Ok(Vec::new()),
        },
    }
}

/// `--field` when given, otherwise the common field of the inputs, otherwise the rationals.
pub fn effective_field(cli: &Cli) -> Result<FieldKind, CliError> {
    let declared = declared_fields(&cli.command)?;
    match cli.field {
        Some(f) => Ok(f),
        None => Ok(common_field(&declared)?.unwrap_or(FieldKind::Rational)),
    }
}

fn report(r: &VerificationReport) -> Output {
    Output { text: to_canonical_json(r), passed: r.passed() }
}

fn operator<F: Scalar>(m: &MapFile, dim: usize, what: &str) -> Result<LinearOperator<F>, CliError> {
    if m.dim != dim {
        return Err(input(format!("{what}: field `dim`: map has dimension {}, expected {dim}", m.dim)));
    }
    m.to_operator::<F>().map_err(|e| input(format!("{what}: {e}")))
}

fn reject_kind(m: &MapFile, forbidden: MapKind, what: &str) -> Result<(), CliError> {
    if m.kind == forbidden {
        let want = if forbidden == MapKind::Operator { "co-operator" } else { "operator" };
        return Err(input(format!("{what}: field `kind`: expected \"{want}\" or \"plain\"")));
    }
    Ok(())
}

fn precondition(context: &str, r: VerificationReport) -> Result<(), CliError> {
    if r.passed() {
        Ok(())
    } else {
        Err(CliError::Precondition(context.to_string(), Some(r)))
    }
}

/// `B` on the Hopf algebra of an action or coaction, checked to be Rota-Baxter of the given kind.
fn rb_candidate<F: Scalar>(
    h: &Arc<hopfrb_core::FiniteHopfAlgebra<F>>,
    path: &str,
    kind: RBKind,
) -> Result<RBOperatorCandidate<F>, CliError> {
    let m = read_map(path)?;
    let forbidden = if kind == RBKind::Operator { MapKind::CoOperator } else { MapKind::Operator };
    reject_kind(&m, forbidden, path)?;
    let cand = RBOperatorCandidate::new(h.clone(), operator(&m, h.dim(), path)?, kind)?;
    let rep = match kind {
        RBKind::Operator => is_rb_operator(&cand)?,
        RBKind::CoOperator => is_rb_co_operator(&cand)?,
    };
    precondition(&format!("B must be a Rota-Baxter {kind} on H"), rep)?;
    Ok(cand)
}

fn r_map<F: Scalar>(path: &Option<String>, dim: usize) -> Result<LinearOperator<F>, CliError> {
    let path = path.as_deref().ok_or_else(|| input("--r is required for this condition family"))?;
    operator(&read_map(path)?, dim, path)
}

fn b_path(path: &Option<String>) -> Result<&str, CliError> {
    path.as_deref().ok_or_else(|| input("--b is required for this condition family"))
}

fn check_action<F: Scalar>(act: &BimoduleAction<F>) -> VerificationReport {
    let mut r = VerificationReport::new("bimodule Hopf algebra");
    r.absorb("A-hopf", "A is a Hopf algebra", &verify_hopf(act.algebra()));
    r.absorb("H-hopf", "H is a Hopf algebra", &verify_hopf(act.hopf()));
    r.extend_prefixed("", verify_bimodule_bialgebra(act));
    r.extend_prefixed("", verify_antipode_bilinear(act));
    r
}

fn check_coaction<F: Scalar>(co: &BicomoduleCoaction<F>) -> VerificationReport {
    let mut r = VerificationReport::new("bicomodule Hopf algebra");
    r.absorb("C-hopf", "C is a Hopf algebra", &verify_hopf(co.coalgebra()));
    r.absorb("H-hopf", "H is a Hopf algebra", &verify_hopf(co.hopf()));
    r.extend_prefixed("", verify_bicomodule_bialgebra(co));
    r.extend_prefixed("", verify_antipode_bicolinear(co));
    r
}

fn product_conditions<F: Scalar>(which: Which, action: &str, r: &Option<String>, b: &Option<String>) -> Result<Output, CliError> {
    let act = read_action(&one(action))?.build::<F>()?;
    precondition("L-R smash product preconditions", smash_product_preconditions(&act))?;
    let na = act.algebra().dim();
    let b_op = |b: &Option<String>| -> Result<LinearOperator<F>, CliError> {
        Ok(rb_candidate(act.hopf(), b_path(b)?, RBKind::Operator)?.map().clone())
    };
    let rep = match which {
        Which::Thm22 => check_thm22_conditions(&r_map(r, na)?, &b_op(b)?, &act)?,
        Which::Cor24 => check_cor24_conditions(&r_map(r, na)?, &act)?,
        Which::Cor25 => check_cor25_conditions(&b_op(b)?, &act)?,
        Which::Internal => check_internal_2c2d(&r_map(r, na)?, &b_op(b)?, &act)?,
        _ => return Err(input("this condition family needs --coaction")),
    };
    Ok(report(&rep))
}

fn coproduct_conditions<F: Scalar>(which: Which, coaction: &str, r: &Option<String>, b: &Option<String>) -> Result<Output, CliError> {
    let co = read_coaction(&one(coaction))?.build::<F>()?;
    precondition("L-R smash coproduct preconditions", smash_coproduct_preconditions(&co))?;
    let nc = co.coalgebra().dim();
    let b_op = |b: &Option<String>| -> Result<LinearOperator<F>, CliError> {
        Ok(rb_candidate(co.hopf(), b_path(b)?, RBKind::CoOperator)?.map().clone())
    };
    let rep = match which {
        Which::Thm33 => check_thm33_conditions(&r_map(r, nc)?, &b_op(b)?, &co)?,
        Which::Cor34 => check_cor34_conditions(&r_map(r, nc)?, &b_op(b)?, &co)?,
        Which::Cor35 => check_cor35_conditions(&b_op(b)?, &co)?,
        Which::Cor36 => check_cor36_conditions(&r_map(r, nc)?, &co)?,
        Which::Internal => check_internal_3b(&r_map(r, nc)?, &b_op(b)?, &co)?,
        _ => return Err(input("this condition family needs --action")),
    };
    Ok(report(&rep))
}

fn parse_group(name: &str) -> Result<FiniteGroup, CliError> {
    if name.ends_with(".json") || name.starts_with(hopfrb_core::format::FIXTURE_PREFIX) {
        let file = read_algebra(name)?;
        let table = file.group.ok_or_else(|| input(format!("{name}: field `group`: missing")))?;
        return Ok(table.to_group()?);
    }
    let factor = |f: &str| -> Result<FiniteGroup, CliError> {
        let bad = || input(format!("--group: cannot read {f:?}; expected C<n>, S<n> or a product such as C2xC2"));
        let (kind, n) = f.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        match (kind, n) {
            (_, 0) => Err(bad()),
            ("C", 1) | ("S", 1) => Ok(FiniteGroup::trivial()),
            ("C", n) => Ok(FiniteGroup::cyclic(n, "g")),
            ("S", n) if n <= 4 => Ok(FiniteGroup::symmetric(n)),
            _ => Err(bad()),
        }
    };
    let upper = name.to_ascii_uppercase();
    let mut factors = upper.split('X').filter(|f| !f.is_empty()).map(factor);
    let first = factors.next().ok_or_else(|| input("--group: empty"))??;
    factors.try_fold(first, |acc, g| Ok(acc.direct_product(&g?)))
}

fn enumerate<F: Scalar>(group: &str, bound: usize, duality: bool) -> Result<Output, CliError> {
    let g = parse_group(group)?;
    let maps = enumerate_group_rb(&g, bound)?;
    let mut text = String::new();
    for (k, m) in maps.iter().enumerate() {
        let mut line = json!({ "images": m.images, "index": k, "labels": m.image_labels() });
        if duality {
            let verdict = transpose_duality_check(&linearize_group_rb::<F>(m))?;
            line["transpose_passes"] = json!(verdict.passed());
        }
        text.push_str(&line.to_string());
        text.push('\n');
    }
    Ok(Output { text, passed: true })
}

fn harness_lines(summary: &HarnessSummary) -> Output {
    let mut text = String::new();
    for row in &summary.rows {
        text.push_str(&serde_json::to_value(row).expect("rows serialize").to_string());
        text.push('\n');
    }
    let tail = json!({
        "candidates": summary.rows.len(),
        "equivalent": summary.equivalent,
        "exceptions": summary.exceptions,
        "subject": summary.subject,
    });
    text.push_str(&tail.to_string());
    text.push('\n');
    Output { text, passed: summary.equivalent }
}

fn provenance(construction: &str, inputs: &[&str]) -> Option<Value> {
    Some(json!({ "construction": construction, "inputs": inputs }))
}

fn dualize<F: Scalar>(path: &str) -> Result<Output, CliError> {
    let text = match sniff(path)? {
        FileKind::Algebra => {
            let h = read_algebra(path)?.to_algebra::<F>()?;
            AlgebraFile::from_algebra(&linear_dual(&h)?, provenance("linear-dual", &[path])).to_canonical_string()
        }
        FileKind::Action => {
            let act = read_action(&one(path))?.build::<F>()?;
            to_canonical_json(&ResolvedCoaction::file_of(&dualize_action(&act)?, provenance("dual-coaction", &[path])))
        }
        FileKind::Coaction => {
            let co = read_coaction(&one(path))?.build::<F>()?;
            to_canonical_json(&ResolvedAction::file_of(&dualize_coaction(&co)?, provenance("dual-action", &[path])))
        }
        FileKind::Map => {
            let m = read_map(path)?;
            let kind = match m.kind {
                MapKind::Operator => MapKind::CoOperator,
                MapKind::CoOperator => MapKind::Operator,
                MapKind::Plain => MapKind::Plain,
            };
            let t = operator::<F>(&m, m.dim, path)?.transpose();
            to_canonical_json(&MapFile::from_operator(&t, kind, provenance("transpose", &[path])))
        }
    };
    Ok(Output { text, passed: true })
}

pub fn run<F: Scalar>(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::CheckHopf { algebra } => Ok(report(&verify_hopf(&read_algebra(algebra)?.to_algebra::<F>()?))),
        Command::CheckAction { paths } => Ok(report(&check_action(&read_action(paths)?.build::<F>()?))),
        Command::CheckCoaction { paths } => Ok(report(&check_coaction(&read_coaction(paths)?.build::<F>()?))),
        Command::Smash { paths } => {
            let s = lr_smash_product(&read_action(paths)?.build::<F>()?)?;
            let inputs: Vec<&str> = paths.iter().map(String::as_str).collect();
            let file = AlgebraFile::from_algebra(&s.algebra, provenance("lr-smash-product", &inputs));
            Ok(Output { text: file.to_canonical_string(), passed: true })
        }
        Command::Cosmash { paths } => {
            let s = lr_smash_coproduct(&read_coaction(paths)?.build::<F>()?)?;
            let inputs: Vec<&str> = paths.iter().map(String::as_str).collect();
            let file = AlgebraFile::from_algebra(&s.algebra, provenance("lr-smash-coproduct", &inputs));
            Ok(Output { text: file.to_canonical_string(), passed: true })
        }
        Command::CheckRb { algebra, map } => {
            let h = read_algebra(algebra)?.to_algebra::<F>()?;
            let m = read_map(map)?;
            reject_kind(&m, MapKind::CoOperator, map)?;
            let op = operator(&m, h.dim(), map)?;
            if !h.is_cocommutative() {
                return Err(CliError::Precondition(format!("{algebra} is not cocommutative"), None));
            }
            Ok(report(&assess_rb_operator(&h, &op)))
        }
        Command::CheckCorb { algebra, map } => {
            let h = read_algebra(algebra)?.to_algebra::<F>()?;
            let m = read_map(map)?;
            reject_kind(&m, MapKind::Operator, map)?;
            let op = operator(&m, h.dim(), map)?;
            if !h.is_commutative() {
                return Err(CliError::Precondition(format!("{algebra} is not commutative"), None));
            }
            Ok(report(&assess_rb_co_operator(&h, &op)))
        }
        Command::Lift { action, r, b } => {
            let act = read_action(&one(action))?.build::<F>()?;
            let r_op = operator(&read_map(r)?, act.algebra().dim(), r)?;
            let b_cand = RBOperatorCandidate::new(act.hopf().clone(), operator(&read_map(b)?, act.hopf().dim(), b)?, RBKind::Operator)?;
            let lift = lift_rb_operator(&r_op, &b_cand, &act)?;
            let file = MapFile::from_operator(&lift, MapKind::Operator, provenance("lift", &[action, r, b]));
            Ok(Output { text: to_canonical_json(&file), passed: true })
        }
        Command::Colift { coaction, r, b } => {
            let co = read_coaction(&one(coaction))?.build::<F>()?;
            let r_op = operator(&read_map(r)?, co.coalgebra().dim(), r)?;
            let b_cand = RBOperatorCandidate::new(co.hopf().clone(), operator(&read_map(b)?, co.hopf().dim(), b)?, RBKind::CoOperator)?;
            let lift = lift_rb_co_operator(&r_op, &b_cand, &co)?;
            let file = MapFile::from_operator(&lift, MapKind::CoOperator, provenance("colift", &[coaction, r, b]));
            Ok(Output { text: to_canonical_json(&file), passed: true })
        }
        Command::CheckConditions { which, action, coaction, r, b } => match (action, coaction) {
            (Some(a), _) => product_conditions::<F>(*which, a, r, b),
            (None, Some(c)) => coproduct_conditions::<F>(*which, c, r, b),
            (None, None) => Err(input("one of --action or --coaction is required")),
        },
        Command::Enumerate { group, bound, duality } => enumerate::<F>(group, *bound, *duality),
        Command::Dualize { input: path } => dualize::<F>(path),
        Command::Harness { action, coaction, b } => match (action, coaction) {
            (Some(a), _) => {
                let act = read_action(&one(a))?.build::<F>()?;
                let cand = rb_candidate(act.hopf(), b, RBKind::Operator)?;
                Ok(harness_lines(&iff_harness_thm22(&act, &cand)?))
            }
            (None, Some(c)) => {
                let co = read_coaction(&one(c))?.build::<F>()?;
                let cand = rb_candidate(co.hopf(), b, RBKind::CoOperator)?;
                Ok(harness_lines(&iff_harness_thm33(&co, &cand)?))
            }
            (None, None) => Err(input("one of --action or --coaction is required")),
        },
    }
}
