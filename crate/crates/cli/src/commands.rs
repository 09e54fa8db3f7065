//! Subcommand execution.

use dedekind_lab::{
    dedekind_sum_fast, dedekind_sum_naive, dedekind_symbol, enumerate_cosets, erdos_turan_bound,
    histogram, kloosterman_classical, kloosterman_partial_sum, kloosterman_scan,
    kloosterman_twisted, phi_cocycle, pi_count, psi_cocycle, random_group_word, sample_stream,
    vardi_check, vardi_scan, weyl_sum, zeta_partial, DoubleCoset, KloostermanValue, Result,
    SampleStream, UnimodularMatrix, Weight,
};
use serde_json::{Map, Value};

use crate::args::{Command, Method, StreamArgs, WeightingArg};
use crate::output::{Cell, Table};

struct Config(Map<String, Value>);

impl Config {
    fn new() -> Self {
        Config(Map::new())
    }

    fn set(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.into(), value.into());
        self
    }

    fn opt<T: Into<Value>>(self, key: &str, value: Option<T>) -> Self {
        match value {
            Some(v) => self.set(key, v),
            None => self,
        }
    }
}

fn weight(k: &Weight) -> Value {
    Value::String(k.to_string())
}

fn kloosterman_row(t: &mut Table, v: &KloostermanValue) {
    t.push(vec![
        v.c.into(),
        v.m.into(),
        v.n.into(),
        v.value.re.into(),
        v.value.im.into(),
        v.term_count.into(),
    ]);
}

fn stream_config(s: &StreamArgs) -> Config {
    Config::new()
        .set("k", weight(&s.k))
        .set("group", s.group.to_string())
        .set("x", s.x)
}

fn stream(s: &StreamArgs) -> Result<SampleStream> {
    sample_stream(&s.k, s.group, s.x)
}

/// Matrix entries as integers when they fit, decimal strings otherwise.
fn entries(g: &UnimodularMatrix) -> Vec<Cell> {
    match g.to_i64s() {
        Some(e) => e.iter().map(|&v| Cell::from(v)).collect(),
        None => [g.a(), g.b(), g.c(), g.d()]
            .iter()
            .map(|v| Cell::Text(v.to_string()))
            .collect(),
    }
}

pub fn execute(cmd: &Command) -> Result<Table> {
    let name = cmd.name();
    match cmd {
        Command::Dedekind(a) => {
            let method = match a.method {
                Method::Fast => "fast",
                Method::Naive => "naive",
            };
            let cfg = Config::new()
                .set("a", a.a)
                .set("c", a.c)
                .set("method", method);
            let s = match a.method {
                Method::Fast => dedekind_sum_fast(a.a, a.c)?,
                Method::Naive => dedekind_sum_naive(a.a, a.c)?,
            };
            let mut t = Table::new(name, cfg.0, &["a", "c", "s"]).scalar("s");
            t.push(vec![a.a.into(), a.c.into(), s.into()]);
            Ok(t)
        }
        Command::Phi(a) => {
            let (g, cfg) = match a.seed {
                Some(seed) => (
                    random_group_word(a.length, seed)?,
                    Config::new().set("seed", seed).set("length", a.length),
                ),
                None => {
                    let (pa, pb, pc, pd) = (
                        a.a.unwrap_or(0),
                        a.b.unwrap_or(0),
                        a.c.unwrap_or(0),
                        a.d.unwrap_or(0),
                    );
                    (
                        UnimodularMatrix::new(pa, pb, pc, pd)?,
                        Config::new()
                            .set("a", pa)
                            .set("b", pb)
                            .set("c", pc)
                            .set("d", pd),
                    )
                }
            };
            let phi = phi_cocycle(&g)?;
            let psi = psi_cocycle(&g)?;
            let mut t = Table::new(name, cfg.0, &["a", "b", "c", "d", "Phi", "psi"]).scalar("Phi");
            let mut row = entries(&g);
            row.push(phi.into());
            row.push(psi.into());
            t.push(row);
            Ok(t)
        }
        Command::Symbol(a) => {
            let cfg = Config::new()
                .set("a", a.a)
                .set("c", a.c)
                .set("group", a.group.to_string());
            let coset = DoubleCoset::new(a.group, a.a, a.c)?;
            let s = dedekind_symbol(&coset)?;
            let mut t = Table::new(name, cfg.0, &["a", "c", "symbol"]).scalar("symbol");
            t.push(vec![a.a.into(), a.c.into(), s.into()]);
            Ok(t)
        }
        Command::Cosets(a) => {
            let cfg = Config::new()
                .set("group", a.group.to_string())
                .set("x", a.x);
            let mut t = Table::new(name, cfg.0, &["c", "a", "d"]);
            for coset in enumerate_cosets(a.group, a.x)? {
                t.push(vec![coset.c().into(), coset.a().into(), coset.d().into()]);
            }
            Ok(t)
        }
        Command::Count(a) => {
            let cfg = Config::new()
                .set("group", a.group.to_string())
                .set("x", a.x);
            let r = pi_count(a.group, a.x)?;
            let mut t = Table::new(
                name,
                cfg.0,
                &["x", "count", "main_term", "ratio", "remainder"],
            );
            t.push(vec![
                r.x.into(),
                r.count.into(),
                r.main_term.into(),
                r.ratio.into(),
                r.remainder.into(),
            ]);
            Ok(t)
        }
        Command::Zeta(a) => {
            let cfg = Config::new()
                .set("group", a.group.to_string())
                .set("s", a.s)
                .set("x", a.x);
            let z = zeta_partial(a.group, a.s, a.x)?;
            let mut t = Table::new(name, cfg.0, &["s", "x", "value"]).scalar("value");
            t.push(vec![a.s.into(), a.x.into(), z.into()]);
            Ok(t)
        }
        Command::Kloosterman(a) => {
            let cfg = Config::new()
                .set("m", a.m)
                .set("n", a.n)
                .opt("c", a.c)
                .opt("cmax", a.cmax)
                .opt("x", a.x);
            if let Some(x) = a.x {
                let weighting = match a.weighting {
                    WeightingArg::Unweighted => "unweighted",
                    WeightingArg::OverC => "over-c",
                };
                let cfg = cfg.set("weighting", weighting);
                let p = kloosterman_partial_sum(a.m, a.n, x, a.weighting.into())?;
                let mut t = Table::new(name, cfg.0, &["x", "re", "im", "abs"]);
                t.push(vec![x.into(), p.re.into(), p.im.into(), p.norm().into()]);
                return Ok(t);
            }
            let mut t = Table::new(name, cfg.0, &["c", "m", "n", "re", "im", "terms"]);
            match (a.c, a.cmax) {
                (Some(c), _) => kloosterman_row(&mut t, &kloosterman_classical(a.m, a.n, c)?),
                (None, Some(cmax)) => {
                    for v in kloosterman_scan(a.m, a.n, cmax) {
                        kloosterman_row(&mut t, &v);
                    }
                }
                (None, None) => unreachable!("clap requires one of c, cmax, x"),
            }
            Ok(t)
        }
        Command::Twisted(a) => {
            let cfg = Config::new()
                .set("k", weight(&a.k))
                .set("group", a.group.to_string())
                .opt("c", a.c)
                .opt("cmax", a.cmax);
            let mut t = Table::new(name, cfg.0, &["c", "m", "n", "re", "im", "terms"]);
            let moduli = match (a.c, a.cmax) {
                (Some(c), _) => c..=c,
                (None, Some(cmax)) => 1..=cmax,
                (None, None) => unreachable!("clap requires one of c, cmax"),
            };
            for c in moduli {
                kloosterman_row(&mut t, &kloosterman_twisted(&a.k, c, a.group)?);
            }
            Ok(t)
        }
        Command::Vardi(a) => {
            let cfg = Config::new()
                .set("k", weight(&a.k))
                .opt("c", a.c)
                .opt("cmax", a.cmax);
            let mut t = Table::new(name, cfg.0, &["c", "residual"]);
            let rows = match (a.c, a.cmax) {
                (Some(c), _) => vec![(c, vardi_check(&a.k, c)?)],
                (None, Some(cmax)) => vardi_scan(&a.k, cmax)?,
                (None, None) => unreachable!("clap requires one of c, cmax"),
            };
            for (c, r) in rows {
                t.push(vec![c.into(), r.into()]);
            }
            Ok(t)
        }
        Command::Weyl(a) => {
            let cfg = stream_config(&a.stream).opt("m", a.m).set("M", a.big_m);
            let s = stream(&a.stream)?;
            let ms: Vec<i64> = match a.m {
                Some(m) => vec![m],
                None => (1..=a.big_m as i64).collect(),
            };
            let mut t = Table::new(name, cfg.0, &["m", "re", "im", "normalized"]);
            for m in ms {
                let w = weyl_sum(&s, m)?;
                t.push(vec![
                    m.into(),
                    w.weyl_sum.re.into(),
                    w.weyl_sum.im.into(),
                    w.normalized.into(),
                ]);
            }
            Ok(t)
        }
        Command::Discrepancy(a) => {
            let cfg = stream_config(&a.stream).set("M", a.big_m);
            let s = stream(&a.stream)?;
            let r = erdos_turan_bound(&s, a.big_m)?;
            let mut t = Table::new(
                name,
                cfg.0,
                &["x", "samples", "star_discrepancy", "et_bound", "M"],
            );
            t.push(vec![
                a.stream.x.into(),
                (s.len() as u64).into(),
                r.star_discrepancy.into(),
                r.et_bound.into(),
                r.truncation.into(),
            ]);
            Ok(t)
        }
        Command::Histogram(a) => {
            let cfg = stream_config(&a.stream).set("bins", a.bins);
            let s = stream(&a.stream)?;
            let counts = histogram(&s, a.bins)?;
            let mut t = Table::new(name, cfg.0, &["bin", "lo", "hi", "count"]);
            let width = 1.0 / a.bins as f64;
            for (j, n) in counts.into_iter().enumerate() {
                let j = j as u64;
                t.push(vec![
                    j.into(),
                    (j as f64 * width).into(),
                    ((j + 1) as f64 * width).into(),
                    n.into(),
                ]);
            }
            Ok(t)
        }
    }
}
