use metahecke::forms::{default_precision, shimura_check, space_basis, steinberg_detect, SpaceKind};
use metahecke::hecke::elt::BasisLabel;
use metahecke::hecke::{center, convolve, evaluate, parse_element, u0, u1, verify_relations, HeckeElt, PSModule};
use metahecke::intertwiner;
use metahecke::metaplectic::coset::{classify_double_coset, coset_decomposition, ell, CosetLabel};
use metahecke::metaplectic::group::{subgroup_member, MetaplecticElt, Subgroup};
use metahecke::metaplectic::sweep::{cocycle_sweep, splitting_sweep, SweepReport};
use metahecke::metaplectic::{finite_quotient_ktypes, GammaChar, Mat2};
use metahecke::par::Exec;
use metahecke::report::Check;
use metahecke::scalars::rational::parse_q;
use metahecke::scalars::{Cyc8, RatFunc};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{CocycleCmd, Command, CosetCmd, FormsCmd, Global, HeckeCmd, IntertwinerCmd, LabelKind};
use crate::table::{emit_table, Row};

#[derive(Debug, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    /// Text rendering used instead of the JSON result when `--json` is absent.
    #[serde(skip)]
    pub text: Option<String>,
}

impl CommandReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub type Outcome = Result<CommandReport, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn to_value(v: impl Serialize) -> Result<Value, String> {
    serde_json::to_value(v).map_err(err)
}

fn report(command: &str, inputs: Value, result: impl Serialize, checks: Vec<Check>) -> Outcome {
    Ok(CommandReport { command: command.into(), inputs, result: to_value(result)?, checks, text: None })
}

fn sweep_check(s: &SweepReport) -> Check {
    Check::new(&s.name, s.passed(), format!("{} failures in {} samples", s.failures, s.samples))
}

fn element(s: &str) -> Result<HeckeElt, String> {
    parse_element(s).map_err(|e| format!("cannot parse Hecke element {s:?}: {e}"))
}

fn sl2(entries: &[String]) -> Result<Mat2, String> {
    let q: Vec<_> = entries.iter().map(|e| parse_q(e).map_err(|x| format!("malformed rational {e:?}: {x}"))).collect::<Result<_, _>>()?;
    let [a, b, c, d] = <[_; 4]>::try_from(q).map_err(|_| "expected four matrix entries".to_string())?;
    Mat2::sl2(a, b, c, d).map_err(err)
}

/// A scalar written as four comma-separated rationals, or as an expression in rationals and `sqrt2`.
pub fn parse_cyc8(s: &str) -> Result<Cyc8, String> {
    if s.contains(',') {
        let parts: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
        if parts.len() != 4 {
            return Err(format!("expected four coefficients in {s:?}"));
        }
        return Cyc8::from_strings(&parts).map_err(err);
    }
    let e = element(s)?;
    let one = BasisLabel::T(0);
    if e.support().iter().any(|l| *l != one) {
        return Err(format!("{s:?} is not a scalar"));
    }
    Ok(e.coeff(one))
}

pub fn dispatch(cmd: &Command, g: &Global) -> Outcome {
    let gamma = GammaChar::parse(&g.gamma).map_err(err)?;
    let exec = Exec::default();
    match cmd {
        Command::Cocycle { action: CocycleCmd::Verify { samples } } => {
            let c = cocycle_sweep(*samples, g.seed, exec);
            let s = splitting_sweep(*samples, g.seed.wrapping_add(1), exec);
            let checks = vec![sweep_check(&c), sweep_check(&s)];
            report("cocycle verify", json!({"samples": samples, "seed": g.seed}), [&c, &s], checks)
        }
        Command::Hecke { action } => hecke(action, gamma),
        Command::Ktypes => {
            let k = finite_quotient_ktypes(gamma, exec).map_err(err)?;
            let checks = vec![
                Check::new("group order 96", k.order == 96, k.order.to_string()),
                Check::new("induced dimension 6", k.index == 6, k.index.to_string()),
                Check::new("trace of T_w is 0", k.trace.is_zero(), k.trace.to_string()),
                Check::new("T_w quadratic relation", k.quadratic_relation, ""),
                Check::new("multiplicities 2 and 4", k.mult_2 == 2 && k.mult_minus1 == 4, format!("mult(2) = {}, mult(-1) = {}", k.mult_2, k.mult_minus1)),
            ];
            report("ktypes", json!({"gamma": gamma}), k, checks)
        }
        Command::Coset { action } => coset(action),
        Command::Intertwiner { action: IntertwinerCmd::Verify { order } } => {
            let r = intertwiner::verify(*order, gamma, exec).map_err(err)?;
            let checks = vec![
                Check::new("shell series = closed form", r.series_matches_closed_form == [true, true], format!("{:?}", r.series_matches_closed_form)),
                Check::new("c_-1 vanishes at X^2 = 1/2", r.minus_one_vanishes_at_half, ""),
                Check::new("c_2 does not vanish at X^2 = 1/2", !r.two_vanishes_at_half, ""),
            ];
            report("intertwiner verify", json!({"order": order, "gamma": gamma}), r, checks)
        }
        Command::Forms { action } => forms(action, g.precision),
        Command::Psmodule { x } => psmodule(x),
    }
}

fn hecke(action: &HeckeCmd, gamma: GammaChar) -> Outcome {
    match action {
        HeckeCmd::Mul { lhs, rhs } => {
            let (a, b) = (element(lhs)?, element(rhs)?);
            let p = a.mul(&b);
            report("hecke mul", json!({"lhs": a.to_string(), "rhs": b.to_string()}), json!({"product": p.to_string(), "terms": p}), Vec::new())
        }
        HeckeCmd::VerifyRelations { range } => {
            let checks: Vec<Check> = verify_relations(*range).into_iter().map(|c| Check::new(c.name, c.passed, "")).collect();
            let n = checks.len();
            report("hecke verify-relations", json!({"range": range}), json!({"identities": n}), checks)
        }
        HeckeCmd::Center => {
            let z = center();
            let mut checks: Vec<Check> =
                [("U0", u0()), ("U1", u1())].into_iter().map(|(n, e)| Check::new(format!("[Z, {n}] = 0"), z.commutator(&e).is_zero(), "")).collect();
            let labels: Vec<HeckeElt> = (-5..=5).flat_map(|n| [HeckeElt::t(n), HeckeElt::u(n)]).collect();
            let central = labels.iter().all(|e| z.commutator(e).is_zero());
            checks.push(Check::new("Z commutes with T(n), U(n) for |n| <= 5", central, ""));
            report("hecke center", json!({}), json!({"center": z.to_string(), "terms": z}), checks)
        }
        HeckeCmd::Convolve { lhs, rhs, at, sign } => {
            if *sign != 1 && *sign != -1 {
                return Err(format!("sign must be 1 or -1, got {sign}"));
            }
            let (a, b) = (element(lhs)?, element(rhs)?);
            let g = MetaplecticElt::new(sl2(at)?, *sign);
            let conv = convolve(&a, &b, &g, gamma).map_err(err)?;
            let prod = evaluate(&a.mul(&b), &g, gamma).map_err(err)?;
            let checks = vec![Check::new("convolution = product", conv == prod, format!("{conv} vs {prod}"))];
            report(
                "hecke convolve",
                json!({"lhs": a.to_string(), "rhs": b.to_string(), "at": g, "gamma": gamma}),
                json!({"convolution": conv, "product": prod}),
                checks,
            )
        }
    }
}

fn coset(action: &CosetCmd) -> Outcome {
    match action {
        CosetCmd::Classify { mat } => {
            let g = MetaplecticElt::lift(sl2(mat)?);
            let d = classify_double_coset(&g).map_err(err)?;
            let back = MetaplecticElt::product([&d.left, &d.rep, &d.right]);
            let checks = vec![
                Check::new("g = left * rep * right", back.mat == g.mat, format!("left {}, right {}", d.left.mat, d.right.mat)),
                Check::new("outer factors in K0", subgroup_member(&d.left, Subgroup::K0) && subgroup_member(&d.right, Subgroup::K0), ""),
            ];
            report("coset classify", json!({"mat": g.mat}), d.label, checks)
        }
        CosetCmd::Decompose { label, n } => {
            let l = match label {
                LabelKind::T => CosetLabel::T(*n),
                LabelKind::W => CosetLabel::W(*n),
            };
            let reps = coset_decomposition(l).map_err(err)?;
            let len = ell(l).map_err(err)?;
            let mut classified = true;
            let mut distinct = true;
            for (i, a) in reps.iter().enumerate() {
                classified &= classify_double_coset(a).map(|d| d.label == l).unwrap_or(false);
                distinct &= reps[i + 1..].iter().all(|b| !subgroup_member(&a.inv().mul(b), Subgroup::K0));
            }
            let checks = vec![
                Check::new("count = 2^length", reps.len() == 1usize << len, format!("{} cosets, length {len}", reps.len())),
                Check::new("representatives lie in the double coset", classified, ""),
                Check::new("representatives are K0-inequivalent", distinct, ""),
            ];
            report("coset decompose", json!({"label": l}), json!({"length": len, "representatives": reps}), checks)
        }
    }
}

fn forms(action: &FormsCmd, precision: Option<usize>) -> Outcome {
    let prec = |r: i64| precision.unwrap_or_else(|| default_precision(r));
    match action {
        FormsCmd::Basis { kind, r } => {
            let k = SpaceKind::parse(kind).map_err(err)?;
            let space = space_basis(k, *r, prec(*r)).map_err(err)?;
            let checks = vec![Check::new("basis is linearly independent", space.independent(), format!("dimension {}", space.dim()))];
            report("forms basis", json!({"kind": k, "r": r, "precision": prec(*r)}), space, checks)
        }
        FormsCmd::Shimura { r } => {
            let rows: Vec<Row> = r.iter().map(|&r| shimura_check(r, prec(r)).map(Row::Shimura)).collect::<Result<_, _>>().map_err(err)?;
            tabulate("forms shimura", r, rows)
        }
        FormsCmd::Steinberg { r } => {
            let rows: Vec<Row> = r.iter().map(|&r| steinberg_detect(r, prec(r)).map(Row::Steinberg)).collect::<Result<_, _>>().map_err(err)?;
            tabulate("forms steinberg", r, rows)
        }
    }
}

fn tabulate(command: &str, r: &[i64], rows: Vec<Row>) -> Outcome {
    let table = emit_table(&rows).map_err(err)?;
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for row in rows {
        let (r, cs, v) = match row {
            Row::Shimura(s) => (s.r, s.checks.clone(), to_value(s)?),
            Row::Steinberg(s) => (s.r, s.checks.clone(), to_value(s)?),
        };
        checks.extend(cs.into_iter().map(|c| Check { name: format!("r = {r}: {}", c.name), ..c }));
        reports.push(v);
    }
    let mut out = report(command, json!({"r": r}), json!({"table": table, "reports": reports}), checks)?;
    out.text = Some(table.render());
    Ok(out)
}

fn psmodule(x: &str) -> Outcome {
    let x = parse_cyc8(x)?;
    if x.is_zero() {
        return Err("x must be nonzero".into());
    }
    let m = PSModule::numeric(x.clone());
    let trace = m.u1.get(0, 0).add(m.u1.get(1, 1));
    let det = m.u1.get(0, 0).mul(m.u1.get(1, 1)).sub(&m.u1.get(0, 1).mul(m.u1.get(1, 0)));
    let mut checks = vec![
        Check::new("relations hold", m.relations_hold(), ""),
        Check::new("trace U1 = 0, det U1 = -1", trace.is_zero() && det == RatFunc::constant(Cyc8::from_int(-1)), format!("trace {trace}, det {det}")),
    ];
    let line = m.dual().invariant_line();
    if let Some((i, v)) = &line {
        // At a reducible point the dual's stable line is the T_w = -1 line with U1 = -eps, eps the sign of z.
        let z = m.z.clone();
        let eps = if z == RatFunc::constant(&Cyc8::sqrt2() + &Cyc8::inv_sqrt2()) { 1 } else { -1 };
        checks.push(Check::new("stable line is St(eps)", *i == 1 && *v == RatFunc::constant(Cyc8::from_int(-eps)), format!("eps = {eps}, U1 = {v}")));
    }
    report(
        "psmodule",
        json!({"x": x}),
        json!({"z": m.z.to_string(), "reducible": m.is_reducible(), "u1": (0..2).map(|i| m.u1.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()}),
        checks,
    )
}
