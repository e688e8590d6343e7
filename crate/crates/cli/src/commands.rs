//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use spectre::curve::{
    curve_from_generators, lct, milnor_acampo, milnor_zariski, phi_at_lct, phi_at_top,
    spectral_below_one, spectral_staircase, thm34_sweep,
};
use spectre::dist::{default_grid, fourier_distance, ih_cdf, ks_distance, phi_f};
use spectre::io::DiagramFile;
use spectre::lattice::{scale_support, volumes, NewtonPolyhedron, Support};
use spectre::rational::{fmt_q, parse_q};
use spectre::spectrum::{
    milnor_kouchnirenko, milnor_polynomial, spectrum_stats, steenbrink_spectrum, variance_check,
};
use spectre::Q;

use crate::error::CliError;
use crate::report::{fmt_f64, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Metric {
    Ks,
    Fourier,
}

struct Diagram {
    bytes: Vec<u8>,
    support: Support,
}

fn read_diagram(path: &Path) -> Result<Diagram, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
    let file = DiagramFile::from_json(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Diagram { bytes, support: file.to_support()? })
}

fn parse_rational(s: &str) -> Result<Q, CliError> {
    parse_q(s).map_err(|e| CliError::Input(e.to_string()))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn join_q(xs: &[Q]) -> String {
    xs.iter().map(fmt_q).collect::<Vec<_>>().join(" ")
}

pub fn spectrum(command: String, path: &Path, scale: i64) -> Result<Report, CliError> {
    let d = read_diagram(path)?;
    let support = scale_support(&d.support, scale)?;
    let poly = NewtonPolyhedron::build(&support)?;
    let sp = steenbrink_spectrum(&support)?;
    let stats = spectrum_stats(&sp, support.dim())?;
    let mu_k = milnor_kouchnirenko(&poly)?;
    let var = variance_check(&stats);

    let mut r = Report::new(command, &d.bytes, &["exponent_num", "exponent_den", "multiplicity"]);
    r.set("vars", support.dim());
    r.set("scale", scale);
    r.set("mu_terms", stats.mu);
    r.set("mu_kouchnirenko", mu_k);
    r.set("symmetric", stats.is_symmetric());
    r.set("variance_lhs", fmt_q(&var.lhs));
    r.set("variance_rhs", fmt_q(&var.rhs));
    r.set("variance_ok", var.ok);
    for (e, c) in sp.terms() {
        r.row(vec![e.numer().to_string(), e.denom().to_string(), c.to_string()]);
    }
    r.check(stats.mu as i64 == mu_k, || {
        format!("{} spectrum terms but Kouchnirenko gives {mu_k}", stats.mu)
    });
    r.check(stats.is_symmetric(), || "spectrum is not symmetric".into());
    r.check(var.ok, || "variance bound fails".into());
    Ok(r)
}

pub fn milnor(command: String, path: &Path, scale: i64) -> Result<Report, CliError> {
    let d = read_diagram(path)?;
    let support = scale_support(&d.support, scale)?;
    let poly = NewtonPolyhedron::build(&support)?;
    let v = volumes(&poly);
    let mu = milnor_kouchnirenko(&poly)?;

    let mut r = Report::new(command, &d.bytes, &["j", "volume"]);
    r.set("vars", support.dim());
    r.set("scale", scale);
    r.set("mu_kouchnirenko", mu);
    r.set("faces", poly.faces().len() - 1);
    r.set("facets", poly.facets().len());
    for (j, vj) in v.iter().enumerate() {
        r.row(vec![(j + 1).to_string(), fmt_q(vj)]);
    }
    Ok(r)
}

pub fn curve(command: String, gens: &[u64]) -> Result<Report, CliError> {
    let cd = curve_from_generators(gens)?;
    let mut r = Report::new(command, join(gens).as_bytes(), &["quantity", "value"]);
    let mut put = |k: &str, v: String| r.rows.push(vec![k.to_string(), v]);
    put("generators", join(&cd.gens));
    put("g", cd.g().to_string());
    put("e", join(&cd.e));
    put("n", join(&cd.n));
    put("q", join(&cd.q));
    put("beta", join(&cd.beta));
    put("mu_zariski", milnor_zariski(&cd).to_string());
    put("mu_acampo", milnor_acampo(&cd).to_string());
    put("conductor", cd.conductor.to_string());
    put("lct", fmt_q(&lct(&cd)));
    put("phi_at_lct", fmt_q(&phi_at_lct(&cd)));
    if cd.g() == 1 {
        put("spectral_below_one", join_q(&spectral_below_one(&cd)?));
        put("phi_at_top", fmt_q(&phi_at_top(&cd)?));
    }
    let (z, a) = (milnor_zariski(&cd), milnor_acampo(&cd));
    r.check(z == a && z == cd.conductor, || {
        format!("Milnor numbers disagree: Zariski {z}, A'Campo {a}, conductor {}", cd.conductor)
    });
    Ok(r)
}

pub fn sweep(command: String, max_g: usize, max_gen: u64) -> Result<Report, CliError> {
    if max_g == 0 {
        return Err(CliError::Input("--max-g must be at least 1".into()));
    }
    let report = thm34_sweep(max_g, max_gen);
    let key = format!("max_g={max_g} max_gen={max_gen}");
    let mut r = Report::new(command, key.as_bytes(), &["generators", "phi_at_lct", "known"]);
    r.set("instances", report.instances());
    r.set("instances_by_g", join(&report.instances_by_g));
    r.set("milnor_mismatches", report.milnor_mismatches.len());
    r.set("lower_bound_violations", report.lower_bound_violations.len());
    r.set("two_pair_violations", report.two_pair_violations.len());
    let unexpected = report.unexpected_exceptions().len();
    for (gens, v) in &report.exceptions {
        let known = !report.unexpected_exceptions().iter().any(|(g, _)| g == gens);
        r.row(vec![join(gens), fmt_q(v), known.to_string()]);
    }
    r.check(unexpected == 0, || format!("{unexpected} unexpected exceptions"));
    r.check(report.is_clean(), || "sweep found invariant violations".into());
    Ok(r)
}

pub fn phi(command: String, path: &Path, r_text: &str) -> Result<Report, CliError> {
    let d = read_diagram(path)?;
    let rv = parse_rational(r_text)?;
    let stats = spectrum_stats(&steenbrink_spectrum(&d.support)?, d.support.dim())?;
    let value = phi_f(&stats, rv)?;
    let cols = ["r", "irwin_hall_cdf", "count_le", "mu", "phi"];
    let mut r = Report::new(command, &d.bytes, &cols);
    r.row(vec![
        fmt_q(&rv),
        fmt_q(&ih_cdf(stats.n_plus_1, rv)?),
        stats.count_le(rv).to_string(),
        stats.mu.to_string(),
        fmt_q(&value),
    ]);
    Ok(r)
}

pub fn converge(
    command: String,
    path: &Path,
    scales: &[i64],
    metric: Metric,
) -> Result<Report, CliError> {
    let d = read_diagram(path)?;
    let v = volumes(&NewtonPolyhedron::build(&d.support)?);
    let grid = default_grid();
    let n1 = d.support.dim();
    let mut r = Report::new(command, &d.bytes, &["scale", "mu", "distance"]);
    r.set("metric", format!("{metric:?}").to_lowercase());
    r.set("volumes", join_q(&v));
    for &w in scales {
        let support = scale_support(&d.support, w)?;
        let stats = spectrum_stats(&steenbrink_spectrum(&support)?, n1)?;
        let expected = milnor_polynomial(&v, w);
        r.check(Q::from_integer(stats.mu as i128) == expected, || {
            format!("scale {w}: mu = {} but the volume polynomial gives {}", stats.mu, fmt_q(&expected))
        });
        let dist = match metric {
            Metric::Ks => ks_distance(&stats, n1),
            Metric::Fourier => fourier_distance(&stats, n1, &grid),
        };
        r.row(vec![w.to_string(), stats.mu.to_string(), fmt_f64(dist)]);
    }
    Ok(r)
}

pub fn fig1(command: String, gens: &[u64], r_max_text: &str, samples: usize) -> Result<Report, CliError> {
    let cd = curve_from_generators(gens)?;
    let r_max = parse_rational(r_max_text)?;
    if r_max <= Q::from_integer(0) || r_max > Q::from_integer(2) || samples == 0 {
        return Err(CliError::Input("need 0 < r_max <= 2 and at least one sample".into()));
    }
    let steps = spectral_staircase(&cd, r_max)?;
    let mut r = Report::new(command, join(gens).as_bytes(), &["series", "x", "r", "y"]);
    r.set("generators", join(gens));
    r.set("mu", cd.mu);
    r.set("r_max", fmt_q(&r_max));
    r.set("jumps", steps.len());
    for s in &steps {
        r.row(vec!["staircase".into(), s.x.to_string(), fmt_q(&s.r), fmt_q(&s.y)]);
    }
    let two = Q::from_integer(2);
    let rs: Vec<Q> = (0..=samples)
        .map(|i| r_max * Q::new(i as i128, samples as i128))
        .collect();
    for x in &rs {
        r.row(vec!["parabola".into(), String::new(), fmt_q(x), fmt_q(&(x * x / two))]);
    }
    for x in &rs {
        r.row(vec!["irwin_hall".into(), String::new(), fmt_q(x), fmt_q(&ih_cdf(2, *x)?)]);
    }
    Ok(r)
}
