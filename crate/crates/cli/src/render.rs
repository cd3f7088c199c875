use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use zchelp_core::cyclotomic::{RealBasis, RealElt};
use zchelp_core::helpengine::HelpReport;
use zchelp_core::paperchecks::{CaseVerdict, IdentityCheck};
use zchelp_core::sl2data::ClassTable;

use crate::{CliError, IdentitySummary, Prop41Summary, VerifySummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

type Out = Result<String, CliError>;

fn json<T: Serialize>(v: &T) -> Out {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Out {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(std::io::Error::from)?;
    for r in rows {
        w.write_record(&r).map_err(std::io::Error::from)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn onoff(b: bool) -> &'static str {
    if b {
        "on"
    } else {
        "off"
    }
}

fn eps_text(eps: &[i64]) -> String {
    let parts: Vec<String> = eps
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(x, v)| format!("{x}: {v}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Renders a solver report. JSON and CSV are byte-deterministic for a fixed
/// report.
pub fn render_report(r: &HelpReport, f: Format) -> Out {
    match f {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["survivor", "class_rep", "class_label", "eps", "trivial"],
            r.survivors.iter().enumerate().flat_map(|(k, s)| {
                s.eps.values().iter().enumerate().map(move |(x, v)| {
                    vec![
                        k.to_string(),
                        x.to_string(),
                        r.provenance.class_labels[x].clone(),
                        v.to_string(),
                        s.trivial.to_string(),
                    ]
                })
            }),
        ),
        Format::Text => {
            let p = &r.provenance;
            let mut s = String::new();
            let _ = writeln!(s, "q = {}, n = {}, characters {:?}", r.q, r.n, r.characters);
            let _ = writeln!(
                s,
                "mode {}, normalization {}, projection {}, node cap {}",
                serde_json::to_value(&p.mode)?.as_str().unwrap_or("custom"),
                onoff(p.normalize),
                onoff(p.projection),
                p.node_cap
            );
            if let Some(e) = &p.ells {
                let _ = writeln!(s, "rows restricted to ell in {e:?}");
            }
            if let Some(poly) = &p.field_polynomial {
                let _ = writeln!(s, "field F_{} = F_p[X]/({poly})", r.q);
            }
            let _ = writeln!(
                s,
                "status {}, nodes {}, free dimension {}",
                serde_json::to_value(p.status)?.as_str().unwrap_or("?"),
                p.nodes,
                p.free_dimension
            );
            let _ = writeln!(
                s,
                "survivors: {} ({})",
                r.survivors.len(),
                if r.all_trivial { "all trivial" } else { "not all trivial" }
            );
            for sv in &r.survivors {
                let _ = writeln!(
                    s,
                    "  {} {}",
                    eps_text(sv.eps.values()),
                    if sv.trivial { "trivial" } else { "NONTRIVIAL" }
                );
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct BasisView<'a> {
    n: u64,
    residues: &'a [u64],
    labels: Vec<String>,
}

pub(crate) fn basis(b: &RealBasis, f: Format) -> Out {
    let labels: Vec<String> = b.labels().iter().map(|l| l.to_string()).collect();
    match f {
        Format::Json => json(&BasisView { n: b.n(), residues: b.residues(), labels }),
        Format::Csv => csv_table(&["label"], labels.into_iter().map(|l| vec![l])),
        Format::Text => Ok(format!(
            "n = {}\nresidues {:?}\nlabels {}\n",
            b.n(),
            b.residues(),
            labels.join(" ")
        )),
    }
}

#[derive(Serialize)]
struct ZetaView<'a> {
    n: u64,
    e: i64,
    terms: &'a [(i64, u64)],
}

pub(crate) fn zeta_expansion(n: u64, e: i64, terms: &[(i64, u64)], f: Format) -> Out {
    match f {
        Format::Json => json(&ZetaView { n, e, terms }),
        Format::Csv => csv_table(
            &["coefficient", "residue"],
            terms.iter().map(|(c, b)| vec![c.to_string(), b.to_string()]),
        ),
        Format::Text => {
            let parts: Vec<String> = terms.iter().map(|(c, b)| format!("{c:+} z^{b}")).collect();
            Ok(format!("z_{n}^{e} = {}\n", parts.join(" ")))
        }
    }
}

#[derive(Serialize)]
struct AlphaView<'a> {
    n: u64,
    i: i64,
    coefficients: &'a RealElt,
}

pub(crate) fn real_expansion(n: u64, i: i64, x: &RealElt, f: Format) -> Out {
    match f {
        Format::Json => json(&AlphaView { n, i, coefficients: x }),
        Format::Csv => csv_table(
            &["label", "coefficient"],
            x.coeffs().iter().map(|(l, c)| vec![l.to_string(), c.to_string()]),
        ),
        Format::Text => {
            let parts: Vec<String> = x.coeffs().iter().map(|(l, c)| format!("{c:+} {l}")).collect();
            Ok(format!("alpha_{i} (n = {n}) = {}\n", parts.join(" ")))
        }
    }
}

pub(crate) fn classes(t: &ClassTable, f: Format) -> Out {
    let torus = |c: &zchelp_core::sl2data::ClassInfo| {
        serde_json::to_value(c.torus).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
    };
    match f {
        Format::Json => json(t),
        Format::Csv => csv_table(
            &["label", "order", "size", "torus"],
            t.classes
                .iter()
                .map(|c| vec![c.label.clone(), c.order.to_string(), c.size.to_string(), torus(c)]),
        ),
        Format::Text => {
            let mut s = format!("SL(2, {}): {} classes\n", t.q, t.classes.len());
            for c in &t.classes {
                let _ = writeln!(s, "  {:<8} order {:<4} size {:<6} {}", c.label, c.order, c.size, torus(c));
            }
            Ok(s)
        }
    }
}

pub(crate) fn verify(v: &VerifySummary, f: Format) -> Out {
    let status = |r: &crate::VerifyRow| {
        serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
    };
    match f {
        Format::Json => json(v),
        Format::Csv => csv_table(
            &["q", "n", "status", "complete", "all_trivial", "survivors"],
            v.rows.iter().map(|r| {
                vec![
                    r.q.to_string(),
                    r.n.to_string(),
                    status(r),
                    r.complete.to_string(),
                    r.all_trivial.to_string(),
                    r.survivors.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in &v.rows {
                let mark = if r.complete && r.all_trivial { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{mark} q = {:<4} n = {:<4} {} survivors {}",
                    r.q,
                    r.n,
                    status(r),
                    r.survivors
                );
            }
            let _ = writeln!(s, "{}", if v.pass { "all orders pass" } else { "some orders fail" });
            Ok(s)
        }
    }
}

fn checks_text(s: &mut String, checks: &[IdentityCheck]) {
    for c in checks {
        let mark = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{mark} r = {} {} ({} cases)", c.r, c.name, c.cases);
        for f in c.failures.iter().take(5) {
            let _ = writeln!(s, "     {f}");
        }
    }
}

fn checks_csv(checks: &[IdentityCheck]) -> Out {
    csv_table(
        &["r", "name", "cases", "failures"],
        checks.iter().map(|c| {
            vec![c.r.to_string(), c.name.clone(), c.cases.to_string(), c.failures.len().to_string()]
        }),
    )
}

pub(crate) fn identities(v: &IdentitySummary, f: Format) -> Out {
    match f {
        Format::Json => json(v),
        Format::Csv => checks_csv(&v.checks),
        Format::Text => {
            let mut s = String::new();
            checks_text(&mut s, &v.checks);
            Ok(s)
        }
    }
}

pub(crate) fn prop41(v: &Prop41Summary, f: Format) -> Out {
    match f {
        Format::Json => json(v),
        Format::Csv => {
            let all: Vec<IdentityCheck> = v.identities.iter().chain(&v.a_given_b).cloned().collect();
            checks_csv(&all)
        }
        Format::Text => {
            let mut s = format!("order 2^{} = {} in SL(2, {})\n", v.r, 1u64 << v.r, v.q);
            checks_text(&mut s, &v.identities);
            checks_text(&mut s, &v.a_given_b);
            for (name, r) in [("normalized", &v.normalized), ("unnormalized", &v.unnormalized)] {
                let _ = writeln!(
                    s,
                    "{name}: complete {}, {} survivors, all trivial {}",
                    r.complete,
                    r.survivors.len(),
                    r.all_trivial
                );
            }
            Ok(s)
        }
    }
}

pub(crate) fn cases(v: &CaseVerdict, f: Format) -> Out {
    match f {
        Format::Json => json(v),
        Format::Csv => csv_table(
            &["n", "d", "profiles", "evading", "max_abs_diff", "bound", "g0_max_coeff"],
            [vec![
                v.n.to_string(),
                v.d.to_string(),
                v.profiles.to_string(),
                v.evading.len().to_string(),
                v.max_abs_diff.to_string(),
                v.bound.to_string(),
                v.g0_max_coeff.to_string(),
            ]],
        ),
        Format::Text => {
            let mut s = format!("n = {}, d = {}: {} profiles\n", v.n, v.d, v.profiles);
            let _ = writeln!(
                s,
                "{}",
                if v.contradiction {
                    "contradiction reproduced: no profile passes both the divisibility and size tests"
                } else {
                    "NO contradiction: some profiles pass both tests"
                }
            );
            for p in &v.evading {
                let _ = writeln!(s, "  evading nu = {:?}", p.nu);
            }
            let _ = writeln!(
                s,
                "max |C_b(chi_d(g0))| = {} (with constant {}), max |difference| = {} <= {}: {}",
                v.g0_max_coeff, v.g0_full_max_coeff, v.max_abs_diff, v.bound, v.bound_holds
            );
            let _ = writeln!(s, "literal formula mismatches: {}", v.literal_mismatches);
            Ok(s)
        }
    }
}
