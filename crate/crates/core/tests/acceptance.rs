//! The twelve acceptance criteria, one PASS/FAIL line each, with their runtime limits.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use metahecke::forms::analytic::analytic_oracle;
use metahecke::forms::operators::{kappa, plus_condition_check};
use metahecke::forms::space::{restrict, Ambient, SpaceKind, Spaces};
use metahecke::forms::transport::TransportedModule;
use metahecke::forms::{shimura_check, steinberg_detect};
use metahecke::hecke::{center, convolve, oracle_agrees, t_w, verify_relations, Character, HeckeElt, PSModule};
use metahecke::intertwiner;
use metahecke::linalg::Matrix;
use metahecke::metaplectic::group::{mu2_part_mod_k4, MetaplecticElt};
use metahecke::metaplectic::sweep::{cocycle_sweep, splitting_sweep};
use metahecke::metaplectic::{finite_quotient_ktypes, GammaChar};
use metahecke::par::Exec;
use metahecke::report::all_pass;
use metahecke::scalars::rational::{q, qf, Q};
use metahecke::scalars::{Cyc8, Poly, RatFunc};
use num_complex::Complex64;
use num_traits::{One, Zero};

type Outcome = (bool, String);

fn hecke_relations() -> Outcome {
    let checks = verify_relations(5);
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    (failed.is_empty(), format!("{} identities, failed {failed:?}", checks.len()))
}

fn labels(range: i64) -> Vec<HeckeElt> {
    (-range..=range).flat_map(|n| [HeckeElt::t(n), HeckeElt::u(n)]).collect()
}

fn convolution_oracle() -> Outcome {
    let points = [
        MetaplecticElt::identity(),
        MetaplecticElt::w(q(1)),
        MetaplecticElt::h(q(2)),
        MetaplecticElt::w(qf(1, 2)),
        MetaplecticElt::h(qf(1, 2)),
    ];
    let ls = labels(2);
    let mut n = 0;
    for gamma in [GammaChar::PlusI, GammaChar::MinusI] {
        for a in &ls {
            for b in &ls {
                for g in &points {
                    n += 1;
                    if !oracle_agrees(a, b, g, gamma).unwrap() {
                        return (false, format!("{a} * {b} at {g:?}"));
                    }
                }
            }
        }
    }
    let g = GammaChar::PlusI;
    let tw = t_w();
    let at1 = convolve(&tw, &tw, &MetaplecticElt::identity(), g).unwrap() == Cyc8::from_int(2);
    let w1 = MetaplecticElt::w(q(1));
    let atw = convolve(&tw, &tw, &w1, g).unwrap() == metahecke::hecke::evaluate(&tw, &w1, g).unwrap();
    (at1 && atw, format!("{n} comparisons; T_w^2(1) = 2: {at1}, T_w^2(w(1)) = T_w(w(1)): {atw}"))
}

fn centrality() -> Outcome {
    let z = center();
    let commute = labels(5).iter().all(|e| z.mul(e) == e.mul(&z));
    let lambda = &Cyc8::sqrt2() + &Cyc8::inv_sqrt2();
    let st = [1i8, -1].iter().all(|&eps| Character::steinberg(eps).eval(&z) == lambda.scale(&q(eps as i64)));
    (commute && st, format!("Z commutes with 22 labels: {commute}; St(eps)(Z) = eps(sqrt2 + 1/sqrt2): {st}"))
}

fn cocycle_suite() -> Outcome {
    let c = cocycle_sweep(1000, 2024, Exec::default());
    let s = splitting_sweep(500, 2025, Exec::default());
    let comm = MetaplecticElt::x(q(2)).commutator(&MetaplecticElt::y(q(2)));
    let sign = mu2_part_mod_k4(&comm).unwrap();
    (
        c.passed() && s.passed() && c.samples == 1000 && s.samples == 500 && sign == -1,
        format!("cocycle {}/{} failures, splitting {}/{} failures, [x(2), y(2)] = {sign} mod K(4)", c.failures, c.samples, s.failures, s.samples),
    )
}

fn ktypes() -> Outcome {
    let rep = finite_quotient_ktypes(GammaChar::PlusI, Exec::default()).unwrap();
    let ok = rep.order == 96 && rep.index == 6 && rep.trace.is_zero() && rep.mult_2 == 2 && rep.mult_minus1 == 4;
    (ok, format!("order {}, induced dim {}, trace {}, mult(2) {}, mult(-1) {}", rep.order, rep.index, rep.trace, rep.mult_2, rep.mult_minus1))
}

fn intertwiner_series() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for gamma in [GammaChar::PlusI, GammaChar::MinusI] {
        let rep = intertwiner::verify(40, gamma, Exec::default()).unwrap();
        ok &= rep.series_matches_closed_form == [true, true] && rep.minus_one_vanishes_at_half && !rep.two_vanishes_at_half;
        detail.push(format!(
            "gamma(-1) = {}: series = closed form {:?}, c_-1(X^2 = 1/2) = 0: {}, c_2(X^2 = 1/2) = 0: {}",
            gamma.minus_one(),
            rep.series_matches_closed_form,
            rep.minus_one_vanishes_at_half,
            rep.two_vanishes_at_half
        ));
    }
    (ok, detail.join("; "))
}

fn principal_series() -> Outcome {
    let sym = PSModule::symbolic();
    let relations = sym.relations_hold() && !sym.is_reducible();
    // The U1 entry that must vanish for a stable line is 1 - 2 z^2 / 9: degree 2, roots +-3/sqrt2.
    let z0 = &Cyc8::sqrt2() + &Cyc8::inv_sqrt2();
    let obstruction = Poly::new(vec![Cyc8::one(), Cyc8::zero(), Cyc8::from_q(qf(-2, 9))]);
    let roots = obstruction.eval(&z0).is_zero() && obstruction.eval(&-z0.clone()).is_zero() && obstruction.degree() == Some(2);
    let mut steinberg = true;
    for eps in [1i64, -1] {
        let m = PSModule::numeric(Cyc8::sqrt2().scale(&q(eps)));
        steinberg &= m.relations_hold() && m.z == RatFunc::constant(z0.scale(&q(eps)));
        let dual = m.dual();
        let line = dual.invariant_line();
        // On the dual the stable line is the T_w = -1 line, where U1 acts by -eps.
        steinberg &= line == Some((1, RatFunc::constant(Cyc8::from_int(-eps))));
    }
    let generic = !PSModule::numeric(Cyc8::from_int(3)).is_reducible() && !PSModule::numeric(Cyc8::from_q(qf(1, 5))).is_reducible();
    (
        relations && roots && steinberg && generic,
        format!("symbolic relations: {relations}; reducible exactly at +-(sqrt2 + 1/sqrt2): {roots}; U1 = -eps on St(eps): {steinberg}; generic points irreducible: {generic}"),
    )
}

fn forms_dimensions() -> Outcome {
    let dim = |r: i64, k: SpaceKind| Spaces::new(r, 100).unwrap().coords(k).len();
    let got = [dim(13, SpaceKind::M), dim(13, SpaceKind::S), dim(13, SpaceKind::SPlus), dim(15, SpaceKind::SPlus), dim(17, SpaceKind::SPlus)];
    let mut agree = true;
    for r in [13, 17, 21] {
        let s = Spaces::new(r, 100).unwrap();
        let plus = s.space(SpaceKind::SPlus).unwrap();
        let passing = plus.basis.iter().all(|f| plus_condition_check(&f.qexp, r));
        let sign = if kappa(r) % 2 == 0 { 1 } else { -1 };
        let rows: Vec<Vec<Q>> = (0..=100i64)
            .filter(|n| matches!((sign * n).rem_euclid(4), 2 | 3))
            .map(|n| s.cusp.iter().map(|c| s.ambient.expand(c).coeffs[n as usize].clone()).collect())
            .collect();
        agree &= passing && Matrix::from_rows(rows).nullspace().len() == plus.dim();
    }
    (got == [4, 2, 1, 0, 1] && agree, format!("[M13, S13, S+13, S+15, S+17] = {got:?}; plus descriptions agree for 13, 17, 21: {agree}"))
}

fn shimura() -> Outcome {
    let mut ok = true;
    let mut rows = Vec::new();
    for (r, expected) in [(13, "-24"), (17, "216"), (21, "456")] {
        let rep = shimura_check(r, 100).unwrap();
        ok &= rep.lambda2.as_deref() == Some(expected) && rep.a2_integral.as_deref() == Some(expected) && all_pass(&rep.checks);
        rows.push(format!("r={r}: lambda_2 {} / a_2 {}", rep.lambda2.unwrap_or_default(), rep.a2_integral.unwrap_or_default()));
    }
    (ok, rows.join(", ") + "; T4+ = 2^(r/2-1) q(Z) and the q(Z) bridge checked on each")
}

fn transported_module() -> Outcome {
    let mut ok = true;
    let mut failed = Vec::new();
    for r in [9, 13, 17] {
        let s = Spaces::new(r, 100).unwrap();
        let m = TransportedModule::on_cusp_forms(&s).unwrap();
        for c in m.checks().into_iter().filter(|c| !c.pass) {
            failed.push(format!("r={r}: {}", c.name));
        }
        let w = restrict(&s.w, &s.cusp).unwrap();
        let n = w.rows();
        let quad = w.add(&Matrix::identity(n)).mul(&w.sub(&Matrix::scalar(n, &q(2)))).is_zero();
        if !quad {
            failed.push(format!("r={r}: (W+1)(W-2)"));
        }
    }
    ok &= failed.is_empty();
    (ok, format!("r in {{9, 13, 17}}: U1^2, T_w quadratic, [Z, U1], [Z, T1], (W+1)(W-2); failed {failed:?}"))
}

fn steinberg() -> Outcome {
    let r9 = steinberg_detect(9, 100).unwrap();
    let r13 = steinberg_detect(13, 100).unwrap();
    let line9 = r9.dim_cusp == 1 && r9.minus_is_w4_stable && r9.steinberg.len() == 1;
    let ok = line9 && all_pass(&r9.checks) && r13.dim_minus == 1 && !r13.minus_is_w4_stable && all_pass(&r13.checks);
    let eps = r9.steinberg.first().map(|p| p.eps).unwrap_or(0);
    let charpoly = r9.steinberg.first().map(|p| p.t9_charpoly.clone()).unwrap_or_default();
    (ok, format!("r=9: W4-eigenline St({eps}), T_9 charpoly {charpoly:?} matches a_3 of eta(z)^8 eta(2z)^8; r=13: S- line W4-stable = {}", r13.minus_is_w4_stable))
}

fn analytic() -> Outcome {
    let taus = [Complex64::new(0.0, 1.0), Complex64::new(1.0 / 3.0, 1.0)];
    let mut forms = vec![("theta".to_string(), Ambient::new(1, 400).unwrap().monomial_form(0)), ("F".to_string(), Ambient::new(4, 400).unwrap().form(vec![Q::zero(), Q::one()]))];
    let amb = Ambient::new(13, 400).unwrap();
    for b in 0..amb.dim() {
        forms.push((format!("theta^{} F^{b}", 13 - 4 * b), amb.monomial_form(b)));
    }
    let mut worst = 0.0f64;
    for (name, f) in &forms {
        for &tau in &taus {
            match analytic_oracle(f, tau, 1e-8) {
                Ok(res) => worst = worst.max(res),
                Err(e) => return (false, format!("{name} at {tau}: {e}")),
            }
        }
    }
    (worst < 1e-8, format!("{} forms x 2 points, max residual {worst:.2e}", forms.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 12] = [
        ("1 Hecke relations", hecke_relations, Some(1)),
        ("2 convolution oracle", convolution_oracle, Some(10)),
        ("3 centrality", centrality, None),
        ("4 cocycle suite", cocycle_suite, Some(30)),
        ("5 K-type decomposition", ktypes, None),
        ("6 intertwiner series", intertwiner_series, Some(5)),
        ("7 principal-series module", principal_series, None),
        ("8 forms dimensions", forms_dimensions, None),
        ("9 Shimura eigenvalues", shimura, Some(60)),
        ("10 transported module", transported_module, None),
        ("11 Steinberg detection", steinberg, None),
        ("12 analytic oracle", analytic, Some(10)),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let (mut pass, mut detail) = outcome.unwrap_or_else(|_| (false, "panicked".into()));
        if let Some(secs) = limit {
            if elapsed > Duration::from_secs(secs) {
                pass = false;
                detail = format!("{detail}; over the {secs} s limit");
            }
        }
        failures += usize::from(!pass);
        println!("{} {name} ({:.2} s): {detail}", if pass { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
