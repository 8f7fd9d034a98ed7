//! Job description assembled from a key-value file and command-line flags.

use std::collections::{BTreeMap, BTreeSet};

use gpi::berry::Branch;
use gpi::params::{CarreauParams, ChernoffHughesParams, InverseParams, SebaParams, TransferParams};
use gpi::{Complex64, GreekParams, HalflineBc, HalflineParams, SeparatedHalflineBC};

use crate::table::Format;
use crate::CliError;

pub type Settings = BTreeMap<String, String>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Splits `key=value`, trimming both sides.
pub fn parse_assignment(s: &str) -> Result<(String, String), CliError> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| invalid(format!("expected key=value, got '{s}'")))?;
    let k = k.trim();
    if k.is_empty() {
        return Err(invalid(format!("empty key in '{s}'")));
    }
    Ok((k.to_string(), v.trim().to_string()))
}

/// One `key = value` per line; blank lines and lines starting with `#`
/// are skipped. A key may appear only once.
pub fn parse_settings(text: &str) -> Result<Settings, CliError> {
    let mut out = Settings::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = parse_assignment(line).map_err(|e| invalid(format!("line {}: {e}", n + 1)))?;
        if out.insert(k.clone(), v).is_some() {
            return Err(invalid(format!("line {}: duplicate key '{k}'", n + 1)));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemeSpec {
    Greek(GreekParams),
    Halfline(HalflineParams),
    Inverse(InverseParams),
    Transfer(TransferParams),
    Carreau(CarreauParams),
    Seba(SebaParams),
    ChernoffHughes(ChernoffHughesParams),
    Separated(SeparatedHalflineBC),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Task {
    Convert,
    BoundStates,
    Scatter { kmin: f64, kmax: f64, steps: usize },
    Berry { a: f64, c_mod: f64, samples: usize, branch: Branch },
    Bands { ell: f64, m_max: usize, fit_range: Option<(usize, usize)> },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JobConfig {
    pub scheme: Option<SchemeSpec>,
    pub task: Task,
    pub format: Format,
}

struct Reader<'a> {
    settings: &'a Settings,
    used: BTreeSet<&'a str>,
}

impl<'a> Reader<'a> {
    fn raw(&mut self, key: &'a str) -> Option<&'a str> {
        let v = self.settings.get(key)?;
        self.used.insert(key);
        Some(v.as_str())
    }

    fn num(&mut self, key: &'a str) -> Result<Option<f64>, CliError> {
        let Some(v) = self.raw(key) else { return Ok(None) };
        let x: f64 = v
            .parse()
            .map_err(|_| invalid(format!("'{key}' is not a number: '{v}'")))?;
        if !x.is_finite() {
            return Err(invalid(format!("'{key}' must be finite")));
        }
        Ok(Some(x))
    }

    fn req(&mut self, key: &'a str) -> Result<f64, CliError> {
        self.num(key)?.ok_or_else(|| invalid(format!("missing '{key}'")))
    }

    fn or(&mut self, key: &'a str, default: f64) -> Result<f64, CliError> {
        Ok(self.num(key)?.unwrap_or(default))
    }

    fn count(&mut self, key: &'a str, default: usize) -> Result<usize, CliError> {
        match self.raw(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| invalid(format!("'{key}' is not a non-negative integer: '{v}'"))),
        }
    }

    fn complex(&mut self, re: &'a str, im: &'a str, default_re: Option<f64>) -> Result<Complex64, CliError> {
        let r = match default_re {
            Some(d) => self.or(re, d)?,
            None => self.req(re)?,
        };
        Ok(Complex64::new(r, self.or(im, 0.0)?))
    }

    fn side(&mut self, key: &'a str) -> Result<HalflineBc, CliError> {
        let v = self.raw(key).ok_or_else(|| invalid(format!("missing '{key}'")))?;
        match v.to_ascii_lowercase().as_str() {
            "dirichlet" => Ok(HalflineBc::Dirichlet),
            "neumann" => Ok(HalflineBc::Neumann),
            _ => {
                let x = self.req(key)?;
                Ok(HalflineBc::robin(x))
            }
        }
    }

    fn finish(self) -> Result<(), CliError> {
        let unknown: Vec<&str> = self
            .settings
            .keys()
            .map(String::as_str)
            .filter(|k| !self.used.contains(k))
            .collect();
        if unknown.is_empty() {
            Ok(())
        } else {
            Err(invalid(format!("unknown or unused keys: {}", unknown.join(", "))))
        }
    }
}

fn scheme(r: &mut Reader, name: &str) -> Result<SchemeSpec, CliError> {
    let spec = match name.to_ascii_lowercase().replace('_', "-").as_str() {
        "greek" => SchemeSpec::Greek(GreekParams::new(
            r.req("alpha")?,
            r.req("beta")?,
            r.complex("gamma_re", "gamma_im", Some(0.0))?,
        )),
        "halfline" => SchemeSpec::Halfline(HalflineParams::new(
            r.req("a")?,
            r.req("b")?,
            r.complex("c_re", "c_im", Some(0.0))?,
        )),
        "inverse" => SchemeSpec::Inverse(InverseParams::new(
            r.req("A")?,
            r.req("B")?,
            r.complex("C_re", "C_im", Some(0.0))?,
        )),
        "transfer" => SchemeSpec::Transfer(TransferParams::new(
            r.complex("omega_re", "omega_im", Some(1.0))?,
            r.req("ta")?,
            r.req("tb")?,
            r.req("tc")?,
            r.req("td")?,
        )?),
        "carreau" => SchemeSpec::Carreau(CarreauParams::new(
            r.req("alpha_c")?,
            r.req("beta_c")?,
            r.req("rho_c")?,
            r.req("theta_c")?,
        )?),
        "seba" => {
            let (g, d) = (r.req("gamma_s")?, r.req("delta_s")?);
            let p = match (r.num("alpha_s")?, r.num("beta_s")?) {
                (None, None) => SebaParams::from_gamma_delta(g, d)?,
                (Some(a), Some(b)) => SebaParams::new(a, b, g, d)?,
                _ => return Err(invalid("give both 'alpha_s' and 'beta_s' or neither")),
            };
            SchemeSpec::Seba(p)
        }
        "chernoff-hughes" | "ch" => SchemeSpec::ChernoffHughes(ChernoffHughesParams::new(
            r.req("r")?,
            r.complex("z_re", "z_im", None)?,
        )),
        "separated" => SchemeSpec::Separated(SeparatedHalflineBC::new(r.side("right")?, r.side("left")?)),
        other => return Err(invalid(format!("unknown scheme '{other}'"))),
    };
    Ok(spec)
}

fn parse_range(v: &str) -> Result<(usize, usize), CliError> {
    let bad = || invalid(format!("fit range must be LO:HI, got '{v}'"));
    let (lo, hi) = v.split_once(':').or_else(|| v.split_once("..")).ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

impl JobConfig {
    /// `task` is one of `convert`, `bound-states`, `scatter`, `berry`,
    /// `bands`.
    pub fn from_settings(task: &str, settings: &Settings) -> Result<Self, CliError> {
        let mut r = Reader {
            settings,
            used: BTreeSet::new(),
        };
        let format = match r.raw("format") {
            None | Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            Some(other) => return Err(invalid(format!("unknown format '{other}'"))),
        };
        let task = match task {
            "convert" => Task::Convert,
            "bound-states" => Task::BoundStates,
            "scatter" => Task::Scatter {
                kmin: r.or("kmin", 0.1)?,
                kmax: r.or("kmax", 10.0)?,
                steps: r.count("steps", 100)?,
            },
            "berry" => Task::Berry {
                a: r.req("a")?,
                c_mod: r.req("cmod")?,
                samples: r.count("samples", 1000)?,
                branch: match r.raw("branch").map(str::to_ascii_lowercase).as_deref() {
                    None | Some("plus") | Some("+") => Branch::Plus,
                    Some("minus") | Some("-") => Branch::Minus,
                    Some(other) => return Err(invalid(format!("unknown branch '{other}'"))),
                },
            },
            "bands" => Task::Bands {
                ell: r.or("ell", 1.0)?,
                m_max: r.count("mmax", 20)?,
                fit_range: r.raw("fit_range").map(parse_range).transpose()?,
            },
            other => return Err(invalid(format!("unknown task '{other}'"))),
        };
        let scheme = match (r.raw("scheme"), task) {
            (Some(_), Task::Berry { .. }) => return Err(invalid("berry takes no coupling scheme")),
            (None, Task::Berry { .. }) => None,
            (Some(name), _) => Some(scheme(&mut r, name)?),
            (None, _) => return Err(invalid("missing 'scheme'")),
        };
        if let Task::Scatter { kmin, kmax, steps } = task {
            if !(kmin > 0.0 && kmax >= kmin) || steps == 0 {
                return Err(invalid("scatter needs 0 < kmin <= kmax and steps >= 1"));
            }
        }
        r.finish()?;
        Ok(Self { scheme, task, format })
    }
}
