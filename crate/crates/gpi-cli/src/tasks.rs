use gpi::berry::{
    berry_phase_analytic, berry_phase_discrete, berry_phase_finite_difference, Branch, ParameterLoop,
};
use gpi::lattice::{asymptotic_regime, band_structure, LatticeSpec, RegimeValues};
use gpi::params::*;
use gpi::scheme::{classify_symmetries, is_decoupled};
use gpi::spectral::{point_spectrum, s_matrix, SpectralKind};
use gpi::{Complex64, CouplingScheme, HalflineBc, HalflineParams};

use crate::config::{JobConfig, SchemeSpec, Task};
use crate::table::{Table, Value};
use crate::CliError;

fn re(x: f64) -> Value {
    Complex64::new(x, 0.0).into()
}

fn to_scheme(spec: &SchemeSpec) -> Result<CouplingScheme, CliError> {
    let s = match spec {
        SchemeSpec::Greek(g) => CouplingScheme::from_greek(*g)?,
        SchemeSpec::Halfline(h) => CouplingScheme::from_halfline(*h)?,
        SchemeSpec::Inverse(i) => CouplingScheme::from_inverse(*i)?,
        SchemeSpec::Transfer(t) => CouplingScheme::from_transfer(*t)?,
        SchemeSpec::Carreau(p) => CouplingScheme::from_halfline(carreau_to_halfline(p)?)?,
        SchemeSpec::Seba(p) => CouplingScheme::from_halfline(seba_to_halfline(p)?)?,
        SchemeSpec::ChernoffHughes(p) => CouplingScheme::from_greek(chernoff_hughes_to_greek(p)?)?,
        SchemeSpec::Separated(sep) => CouplingScheme::Separated(*sep),
    };
    Ok(s)
}

fn bc_name(bc: HalflineBc) -> &'static str {
    match bc {
        HalflineBc::Robin(_) => "robin",
        HalflineBc::Dirichlet => "dirichlet",
        HalflineBc::Neumann => "neumann",
    }
}

fn convert(s: &CouplingScheme) -> Vec<Table> {
    let sym = classify_symmetries(s);
    let mut summary = Table::new(
        "summary",
        &["scheme", "det_a", "decoupled", "time_reversal", "space_reflection", "quasifree"],
    );
    let kind = match s {
        CouplingScheme::Coupled(_) => "coupled",
        CouplingScheme::Separated(_) => "separated",
    };
    summary.push(vec![
        kind.into(),
        s.greek().map(|g| g.det_a()).into(),
        is_decoupled(s).into(),
        sym.time_reversal.into(),
        sym.space_reflection.into(),
        sym.quasifree.into(),
    ]);

    let mut forms = Table::new("parametrizations", &["form", "field", "value"]);
    let mut add = |form: &str, fields: &[(&str, Value)]| {
        for (name, v) in fields {
            forms.push(vec![form.into(), (*name).into(), v.clone()]);
        }
    };
    let mut sides = Table::new("separated", &["side", "condition", "slope"]);
    let (greek, half) = match s {
        CouplingScheme::Coupled(g) => (Some(*g), greek_to_halfline(g).ok()),
        CouplingScheme::Separated(sep) => {
            for (side, bc) in [("right", sep.right), ("left", sep.left)] {
                sides.push(vec![side.into(), bc_name(bc).into(), bc.slope().into()]);
            }
            let half = match (sep.right, sep.left) {
                (HalflineBc::Dirichlet, _) | (_, HalflineBc::Dirichlet) => None,
                (r, l) => Some(HalflineParams::real(r.slope().unwrap_or(0.0), l.slope().unwrap_or(0.0), 0.0)),
            };
            (half.and_then(|h| halfline_to_greek(&h).ok()), half)
        }
    };
    if let Some(g) = greek {
        add("greek", &[("alpha", re(g.alpha)), ("beta", re(g.beta)), ("gamma", g.gamma.into())]);
    }
    if let Some(h) = half {
        add("halfline", &[("a", re(h.a)), ("b", re(h.b)), ("c", h.c.into())]);
    }
    let inverse = match (greek, half) {
        (_, Some(h)) => halfline_to_inverse(&h).ok(),
        (Some(g), None) => greek_to_inverse(&g).ok(),
        _ => None,
    };
    if let Some(i) = inverse {
        add("inverse", &[("A", re(i.a)), ("B", re(i.b)), ("C", i.c.into())]);
    }
    if let Some(t) = greek.and_then(|g| greek_to_transfer(&g).ok()) {
        add(
            "transfer",
            &[
                ("omega", t.omega.into()),
                ("ta", re(t.ta)),
                ("tb", re(t.tb)),
                ("tc", re(t.tc)),
                ("td", re(t.td)),
            ],
        );
    }
    if let Some(h) = half {
        let c = halfline_to_carreau(&h);
        add(
            "carreau",
            &[
                ("alpha_c", re(c.alpha_c)),
                ("beta_c", re(c.beta_c)),
                ("rho_c", re(c.rho_c)),
                ("theta_c", re(c.theta_c)),
            ],
        );
        if let Ok(p) = halfline_to_seba(&h) {
            add(
                "seba",
                &[
                    ("alpha_s", re(p.alpha_s)),
                    ("beta_s", re(p.beta_s)),
                    ("gamma_s", re(p.gamma_s)),
                    ("delta_s", re(p.delta_s)),
                ],
            );
        }
    }
    if let Some(p) = greek.and_then(|g| greek_to_chernoff_hughes(&g).ok()) {
        add("chernoff_hughes", &[("r", re(p.r)), ("z", p.z.into())]);
    }
    let mut out = vec![summary, forms];
    if !sides.rows.is_empty() {
        out.push(sides);
    }
    out
}

fn kind_name(k: SpectralKind) -> &'static str {
    match k {
        SpectralKind::Bound => "bound",
        SpectralKind::ZeroResonance => "zero_resonance",
        SpectralKind::Antibound => "antibound",
        SpectralKind::SpuriousRoot => "spurious_root",
    }
}

fn bound_states(s: &CouplingScheme) -> Vec<Table> {
    let mut t = Table::new("points", &["kappa", "energy", "kind", "mu", "nu"]);
    for p in point_spectrum(s) {
        t.push(vec![
            p.kappa.into(),
            p.energy.into(),
            kind_name(p.kind).into(),
            p.coefficients.map(|c| c.mu).into(),
            p.coefficients.map(|c| c.nu).into(),
        ]);
    }
    vec![t]
}

fn scatter(s: &CouplingScheme, kmin: f64, kmax: f64, steps: usize) -> Result<Vec<Table>, CliError> {
    let mut t = Table::new("scattering", &["k", "r", "t", "unitarity"]);
    for j in 0..steps {
        let k = if steps == 1 {
            kmin
        } else {
            kmin + (kmax - kmin) * j as f64 / (steps - 1) as f64
        };
        let a = s_matrix(s, k)?;
        t.push(vec![k.into(), a.r.into(), a.t.into(), a.unitarity().into()]);
    }
    Ok(vec![t])
}

fn berry(a: f64, c_mod: f64, samples: usize, branch: Branch) -> Result<Vec<Table>, CliError> {
    let lp = ParameterLoop::new(a, c_mod, samples, branch)?;
    let res = berry_phase_discrete(&lp)?;
    let mut summary = Table::new(
        "phase",
        &["a", "cmod", "samples", "branch", "kappa", "phase", "analytic", "finite_difference"],
    );
    summary.push(vec![
        a.into(),
        c_mod.into(),
        samples.into(),
        match branch {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
        .into(),
        lp.kappa().into(),
        res.phase.into(),
        berry_phase_analytic(&lp).into(),
        berry_phase_finite_difference(&lp)?.into(),
    ]);
    let mut overlaps = Table::new("overlaps", &["step", "overlap"]);
    for (j, o) in res.per_step_overlaps.iter().enumerate() {
        overlaps.push(vec![j.into(), (*o).into()]);
    }
    Ok(vec![summary, overlaps])
}

fn regime_rows(t: &mut Table, predicted: &RegimeValues, measured: &RegimeValues) {
    let rows = [
        ("band_width", predicted.band_width, measured.band_width),
        ("gap_width", predicted.gap_width, measured.gap_width),
        ("centre_shift", predicted.centre_shift, measured.centre_shift),
    ];
    for (name, p, m) in rows {
        if p.is_some() || m.is_some() {
            t.push(vec![name.into(), p.into(), m.into()]);
        }
    }
}

fn bands(
    s: CouplingScheme,
    ell: f64,
    m_max: usize,
    fit_range: Option<(usize, usize)>,
) -> Result<Vec<Table>, CliError> {
    let spec = LatticeSpec::new(s, ell)?;
    let (bands, gaps) = band_structure(&spec, m_max)?;
    let mut bt = Table::new("bands", &["m", "e_lo", "e_hi"]);
    let mut dt = Table::new("dispersion", &["m", "energy", "theta"]);
    for b in &bands {
        bt.push(vec![b.m.into(), b.e_lo.into(), b.e_hi.into()]);
        for &(e, th) in &b.samples {
            dt.push(vec![b.m.into(), e.into(), th.into()]);
        }
    }
    let mut gt = Table::new("gaps", &["m", "e_lo", "e_hi"]);
    for g in &gaps {
        gt.push(vec![g.m.into(), g.e_lo.into(), g.e_hi.into()]);
    }
    let mut out = vec![bt, gt, dt];

    // Without an explicit range, fit the top 21 indices when there are
    // enough of them.
    let range = fit_range.or_else(|| (m_max >= 5).then(|| (m_max.saturating_sub(20).max(1), m_max)));
    if let Some((lo, hi)) = range {
        let report = match asymptotic_regime(&spec, lo, hi) {
            Ok(r) => r,
            Err(e) if fit_range.is_some() => return Err(e.into()),
            Err(_) => return Ok(out),
        };
        let mut rt = Table::new("regime", &["regime", "m_lo", "m_hi", "relative_error"]);
        rt.push(vec![
            format!("{:?}", report.regime).as_str().into(),
            report.m_lo.into(),
            report.m_hi.into(),
            report.relative_error.into(),
        ]);
        let mut vt = Table::new("regime_values", &["quantity", "predicted", "measured"]);
        regime_rows(&mut vt, &report.predicted, &report.measured);
        let mut ft = Table::new("regime_fits", &["series", "slope", "intercept", "r_squared"]);
        for (name, f) in [("band_width", report.band_width_fit), ("gap_width", report.gap_width_fit)] {
            ft.push(vec![name.into(), f.slope.into(), f.intercept.into(), f.r_squared.into()]);
        }
        out.extend([rt, vt, ft]);
    }
    Ok(out)
}

/// Executes the job and returns its result tables.
pub fn run(job: &JobConfig) -> Result<Vec<Table>, CliError> {
    let scheme = job.scheme.as_ref().map(to_scheme).transpose()?;
    let need = || scheme.ok_or_else(|| CliError::Validation("missing 'scheme'".into()));
    match job.task {
        Task::Convert => Ok(convert(&need()?)),
        Task::BoundStates => Ok(bound_states(&need()?)),
        Task::Scatter { kmin, kmax, steps } => scatter(&need()?, kmin, kmax, steps),
        Task::Berry {
            a,
            c_mod,
            samples,
            branch,
        } => berry(a, c_mod, samples, branch),
        Task::Bands { ell, m_max, fit_range } => bands(need()?, ell, m_max, fit_range),
    }
}
