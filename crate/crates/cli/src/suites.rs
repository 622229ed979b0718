use orbifold_gw::frobenius::{euler_residual, wdvv_residual_with, IdentityReport, WdvvOptions};
use orbifold_gw::models::{d4, e6, GenusOne};
use orbifold_gw::modular::{eta_expand, halphen_suite, EtaQuotient};
use orbifold_gw::{par, Rational, Result};

use crate::render::{Document, NamedSeries, TableRow};
use crate::{Model, Settings, Suite, D4_WDVV_ORDER, E6_WDVV_ORDER};

type Check<'a> = Box<dyn Fn() -> Result<Vec<IdentityReport>> + Sync + Send + 'a>;

/// Runs independent checks, in parallel when asked, keeping their order.
fn run_checks(settings: Settings, checks: Vec<Check<'_>>) -> Result<Vec<IdentityReport>> {
    let results = par::map_slice(settings.exec, &checks, |c| c());
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn typo_note(settings: Settings) -> Option<String> {
    settings
        .strict_typo
        .then(|| "strict-typo: f11 block repeats t4 t5 t6^4 in place of t4^4 t5 t6".to_string())
}

pub fn expand(spec: &EtaQuotient, settings: Settings) -> Result<Document> {
    let p = eta_expand(spec, settings.order)?;
    let mut doc = Document::new("expand", Some(&spec.to_string()), settings.order);
    doc.series.push(NamedSeries::puiseux("expansion", &p));
    Ok(doc.finish())
}

pub fn solve(model: Model, settings: Settings) -> Result<Document> {
    let t = settings.order;
    let mut doc = Document::new("solve", Some(model.label()), t);
    match model {
        Model::D4 => {
            let rec = d4::d4_recursion_solve(t);
            let ana = d4::d4_analytic(t)?;
            for (i, (x, y)) in rec.as_array().iter().zip(ana.as_array()).enumerate() {
                doc.series
                    .push(NamedSeries::laurent(&format!("f{i}"), (*x).clone()));
                doc.reports.push(IdentityReport::compare(
                    format!("f{i}-recursion=analytic"),
                    x,
                    y,
                    t,
                ));
            }
        }
        Model::E6 => {
            doc.series
                .push(NamedSeries::laurent("a", e6::e6_schwarzian_solve(t)));
            doc.reports.extend(e6::e6_schwarzian_reports(t)?);
        }
    }
    Ok(doc.finish())
}

fn d4_checks(settings: Settings) -> Vec<Check<'static>> {
    let t = settings.order;
    let w = settings.wdvv_order(D4_WDVV_ORDER);
    let exec = settings.exec;
    vec![
        Box::new(move || {
            let rec = d4::d4_recursion_solve(t);
            let ana = d4::d4_analytic(t)?;
            Ok((0..3)
                .map(|i| {
                    IdentityReport::compare(
                        format!("f{i}-recursion=analytic"),
                        rec.as_array()[i],
                        ana.as_array()[i],
                        t,
                    )
                })
                .collect())
        }),
        Box::new(move || d4::d4_ode_suite(t)),
        Box::new(move || {
            let f = d4::d4_build_potential(w)?;
            Ok(vec![
                wdvv_residual_with(
                    &f,
                    w,
                    WdvvOptions {
                        exec,
                        skip_symmetric: false,
                    },
                )?,
                euler_residual(&f),
            ])
        }),
        Box::new(move || d4::d4_elliptic_weyl_reports(t)),
    ]
}

fn e6_checks(settings: Settings) -> Vec<Check<'static>> {
    let t = settings.order;
    let w = settings.wdvv_order(E6_WDVV_ORDER);
    let exec = settings.exec;
    let strict = settings.strict_typo;
    vec![
        Box::new(move || {
            let mut out = e6::e6_schwarzian_reports(t)?;
            out.push(e6::e6_degenerate_audit(&[
                Rational::new(1, 3),
                Rational::from_integer(-2),
            ]));
            Ok(out)
        }),
        Box::new(move || e6::e6_fi_reports(t)),
        Box::new(move || {
            let f = e6::e6_build_potential(w, strict)?;
            Ok(vec![
                wdvv_residual_with(
                    &f,
                    w,
                    WdvvOptions {
                        exec,
                        skip_symmetric: false,
                    },
                )?,
                euler_residual(&f),
            ])
        }),
    ]
}

pub fn verify(suite: Suite, settings: Settings) -> Result<Document> {
    let t = settings.order;
    let mut doc = Document::new("verify", Some(suite.label()), t);
    let checks: Vec<Check<'static>> = match suite {
        Suite::D4 => d4_checks(settings),
        Suite::E6 => {
            doc.notes.extend(typo_note(settings));
            e6_checks(settings)
        }
        Suite::Halphen => vec![Box::new(move || halphen_suite(t))],
        Suite::Identities => vec![
            Box::new(move || e6::e6_rational_identities(t)),
            Box::new(move || e6::e6_cyclotomic_identities(t)),
        ],
    };
    doc.reports = run_checks(settings, checks)?;
    Ok(doc.finish())
}

pub fn gw_table(kmax: i64, settings: Settings) -> Result<Document> {
    let rows = e6::e6_gw_table_with(kmax, settings.exec)?;
    let mut doc = Document::new("gw-table", None, 3 * kmax + 2);
    doc.table = rows
        .into_iter()
        .map(|r| TableRow {
            k: r.k,
            c_k: r.eta.to_fraction_string(),
            eta: r.eta.to_fraction_string(),
            recursion: r.recursion.to_fraction_string(),
            direct: r.direct.to_fraction_string(),
        })
        .collect();
    Ok(doc.finish())
}

pub fn genus_one(model: Model, settings: Settings) -> Result<Document> {
    let t = settings.order;
    let g: GenusOne = match model {
        Model::D4 => d4::d4_genus_one(t)?,
        Model::E6 => e6::e6_genus_one(t)?,
    };
    let mut doc = Document::new("genus-one", Some(model.label()), t);
    doc.notes.push(format!("F1 = ({}) t + F1-series", g.linear));
    doc.series.push(NamedSeries::laurent("F1-series", g.series));
    doc.series
        .push(NamedSeries::laurent("q d/dq F1", g.derivative));
    doc.reports = g.reports;
    Ok(doc.finish())
}
