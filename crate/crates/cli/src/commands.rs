use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use subgen_core::chow::{chow_form_of_ideal, chow_weight, chow_weight_estimate, hilbert_weight};
use subgen_core::harness::{
    build_report, compare_bounds, evaluate_points, summary_json, write_comparison_csv, write_csv,
};
use subgen_core::heights::{format_real, height_point, height_poly, weil_ratio};
use subgen_core::ideals::{eliminate, hilbert_function, image_ideal, variety_dim_deg};
use subgen_core::io::{parse_config_json, IdealJson};
use subgen_core::polyring::parse_poly;
use subgen_core::position::{check_subgeneral, replace_hypersurfaces};
use subgen_core::qarith::{ln_rat, parse_rat};
use subgen_core::{
    ChowWeightResult, ConstantConvention, Error, ExperimentConfig, HeightValue, HomPoly, Monomial, Place, PlaceSet,
    Poly, PolyIdeal, ProjPoint, WeightVector,
};

use crate::args::{Command, ConfigArg, Global, RunArgs};

pub fn run(cmd: &Command, g: &Global, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Height { object, vars } => height(g, object, *vars, out),
        Command::Weil { poly, point, place } => weil(g, poly, point, place.as_deref(), out),
        Command::HilbertFn { ideal, u } => {
            let i = read_ideal(&ideal.ideal)?;
            let h = hilbert_function(&i, *u);
            if g.json {
                emit(out, &json!({ "u": u, "hilbert_function": h }))
            } else {
                Ok(writeln!(out, "{h}")?)
            }
        }
        Command::HilbertWeight { ideal, u, c } => {
            let i = read_ideal(&ideal.ideal)?;
            let w = hilbert_weight(&i, *u, &weights(c)?)?;
            if g.json {
                let basis: Vec<String> = w.basis.iter().map(monomial).collect();
                emit(out, &json!({ "u": u, "value": w.value.to_string(), "basis": basis }))
            } else {
                Ok(writeln!(out, "{}", w.value)?)
            }
        }
        Command::ChowWeight { ideal, c, u, convention, form } => {
            chow(g, &read_ideal(&ideal.ideal)?, &weights(c)?, *u, convention, *form, out)
        }
        Command::CheckPosition { config } => position(g, config, out),
        Command::Replace { config } => replace(g, config, out),
        Command::Verify { config, run, mode, csv } => verify(g, config, run, mode.as_deref(), csv.as_deref(), out),
        Command::Compare { config, run, csv } => compare(g, config, run, csv.as_deref(), out),
        Command::Eliminate { ideal, keep, map } => elim(g, &ideal.ideal, keep, map, out),
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_ideal_json(path: &Path) -> Result<IdealJson> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())).into())
}

fn read_ideal(path: &Path) -> Result<PolyIdeal> {
    Ok(read_ideal_json(path)?.to_ideal()?)
}

fn weights(c: &str) -> Result<WeightVector> {
    Ok(c.parse()?)
}

fn monomial(m: &Monomial) -> String {
    Poly::term(m.clone(), subgen_core::qarith::rat(1)).to_string()
}

fn places(g: &Global) -> Result<PlaceSet> {
    Ok(match &g.places {
        Some(s) => PlaceSet::parse_list(s)?,
        None => PlaceSet::default_s(),
    })
}

fn height_json(h: &HeightValue) -> Value {
    json!({ "height": h.log_value, "norm_product": h.exact_norm_product.to_string() })
}

fn height(g: &Global, object: &str, vars: Option<usize>, out: &mut dyn Write) -> Result<()> {
    let h = if object.trim_start().starts_with('(') {
        height_point(&object.parse::<ProjPoint>()?)
    } else {
        height_poly(&HomPoly::new(parse_poly(object, vars)?)?)?
    };
    if g.json {
        emit(out, &height_json(&h))
    } else if g.exact {
        Ok(writeln!(out, "{}", h.exact_norm_product)?)
    } else {
        Ok(writeln!(out, "{h}")?)
    }
}

fn weil(g: &Global, poly: &str, point: &str, place: Option<&str>, out: &mut dyn Write) -> Result<()> {
    let x: ProjPoint = point.parse()?;
    let q = HomPoly::new(parse_poly(poly, Some(x.num_vars()))?)?;
    let s = match place {
        Some(v) => PlaceSet::new([v.parse::<Place>()?])?,
        None => places(g)?,
    };
    let ratios = s
        .iter()
        .map(|&v| Ok((v, weil_ratio(&q, v, &x)?)))
        .collect::<subgen_core::Result<Vec<_>>>()?;
    let total: f64 = ratios.iter().map(|(_, r)| ln_rat(r)).sum();
    if g.json {
        let per: Vec<Value> = ratios
            .iter()
            .map(|(v, r)| json!({ "place": v.to_string(), "lambda": ln_rat(r), "ratio": r.to_string() }))
            .collect();
        return emit(out, &json!({ "places": per, "sum": total }));
    }
    for (v, r) in &ratios {
        if g.exact {
            writeln!(out, "{v}\t{r}")?;
        } else {
            writeln!(out, "{v}\t{}", format_real(ln_rat(r)))?;
        }
    }
    if ratios.len() > 1 {
        writeln!(out, "sum\t{}", format_real(total))?;
    }
    Ok(())
}

fn conventions(s: &str) -> Result<Vec<ConstantConvention>> {
    if s.eq_ignore_ascii_case("both") {
        Ok(ConstantConvention::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

fn chow(
    g: &Global,
    ideal: &PolyIdeal,
    c: &WeightVector,
    u: Option<u32>,
    convention: &str,
    show_form: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let convs = conventions(convention)?;
    let form = match chow_form_of_ideal(ideal) {
        Ok(f) => Some(f),
        Err(Error::UnsupportedChowForm) => None,
        Err(e) => return Err(e.into()),
    };
    let exact = form.as_ref().map(|f| chow_weight(f, c)).transpose()?;
    // Estimates are reported whenever no exact value exists, or on request.
    let estimates: Vec<ChowWeightResult> = if exact.is_none() || u.is_some() {
        let u = match u {
            Some(u) => u,
            None => variety_dim_deg(ideal)?.1 as u32 + 1,
        };
        convs
            .iter()
            .map(|&conv| chow_weight_estimate(ideal, c, u, conv))
            .collect::<subgen_core::Result<_>>()?
    } else {
        Vec::new()
    };
    if g.json {
        let est: Vec<Value> = estimates
            .iter()
            .map(|e| json!({ "lo": e.lo.to_string(), "hi": e.hi.to_string(), "detail": e.to_string() }))
            .collect();
        return emit(
            out,
            &json!({
                "exact": exact.as_ref().map(|e| e.lo.to_string()),
                "estimates": est,
                "chow_form": form.as_ref().filter(|_| show_form).map(|f| f.to_string()),
            }),
        );
    }
    if let (true, Some(f)) = (show_form, &form) {
        writeln!(out, "{f}")?;
    }
    if let Some(e) = &exact {
        writeln!(out, "{e}")?;
    }
    for e in &estimates {
        writeln!(out, "{e}")?;
    }
    Ok(())
}

/// Loads a configuration, applying command-line overrides. Nothing is
/// validated here.
fn load_config(g: &Global, arg: &ConfigArg, run: Option<&RunArgs>) -> Result<ExperimentConfig> {
    let raw = parse_config_json(&read(&arg.config)?)
        .with_context(|| format!("parsing {}", arg.config.display()))?;
    let mut cfg = raw.to_config()?;
    if let Some(n) = arg.n_big {
        cfg.n_big = n;
    }
    if g.places.is_some() {
        cfg.places = places(g)?;
    }
    if let Some(seed) = g.seed {
        cfg.seed = seed;
    }
    if let Some(run) = run {
        if let Some(h) = run.height_bound {
            cfg.height_bound = h;
        }
        if let Some(e) = &run.epsilon {
            cfg.epsilon = parse_rat(e)?;
        }
    }
    Ok(cfg)
}

fn position(g: &Global, arg: &ConfigArg, out: &mut dyn Write) -> Result<()> {
    let cfg = load_config(g, arg, None)?;
    let report = check_subgeneral(&cfg.variety, &cfg.polys, cfg.n_big)?;
    if g.json {
        return emit(
            out,
            &json!({
                "N": report.n_tested,
                "n": cfg.variety.dim(),
                "holds": report.holds,
                "witness": report.witness,
            }),
        );
    }
    match &report.witness {
        None => writeln!(out, "holds N={}", report.n_tested)?,
        Some(w) => {
            let w: Vec<String> = w.iter().map(usize::to_string).collect();
            writeln!(out, "fails N={} witness {}", report.n_tested, w.join(","))?
        }
    }
    Ok(())
}

fn replace(g: &Global, arg: &ConfigArg, out: &mut dyn Write) -> Result<()> {
    let cfg = load_config(g, arg, None)?;
    let res = replace_hypersurfaces(&cfg.variety, &cfg.polys, cfg.seed)?;
    let coeffs: Vec<Vec<String>> = res
        .coeffs
        .iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect();
    if g.json {
        let polys: Vec<String> = res.polys.iter().map(|p| p.to_string()).collect();
        return emit(
            out,
            &json!({ "seed": cfg.seed, "attempts": res.attempts, "polys": polys, "coeffs": coeffs }),
        );
    }
    writeln!(out, "attempts {}", res.attempts)?;
    for (t, p) in res.polys.iter().enumerate() {
        writeln!(out, "P{t} = {p}")?;
    }
    for (t, row) in coeffs.iter().enumerate() {
        writeln!(out, "c{} = {}", t + 1, row.join(","))?;
    }
    Ok(())
}

fn csv_sink<'a>(path: Option<&Path>, out: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(out),
    })
}

fn verify(
    g: &Global,
    arg: &ConfigArg,
    run: &RunArgs,
    mode: Option<&str>,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<()> {
    let mut cfg = load_config(g, arg, Some(run))?;
    if let Some(m) = mode {
        cfg.mode = m.parse()?;
    }
    let evals = evaluate_points(&cfg)?;
    let report = build_report(&evals, cfg.mode, cfg.coefficient(), &cfg.epsilon);
    let summary = serde_json::to_string(&summary_json(&report))?;
    if g.json {
        if csv.is_some() {
            let mut sink = csv_sink(csv, out)?;
            write_csv(&report, &mut sink)?;
            sink.flush()?;
        }
        return emit(out, &summary_json(&report));
    }
    {
        let mut sink = csv_sink(csv, out)?;
        write_csv(&report, &mut sink)?;
        sink.flush()?;
    }
    if csv.is_some() {
        writeln!(out, "{summary}")?;
    } else {
        writeln!(out, "# {summary}")?;
    }
    Ok(())
}

fn compare(g: &Global, arg: &ConfigArg, run: &RunArgs, csv: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let cfg = load_config(g, arg, Some(run))?;
    let cmp = compare_bounds(&cfg)?;
    let coefficients: serde_json::Map<String, Value> =
        cmp.coefficients.iter().map(|(m, c)| (m.name().to_string(), json!(c))).collect();
    let violations: serde_json::Map<String, Value> =
        cmp.violations.iter().map(|(m, c)| (m.name().to_string(), json!(c))).collect();
    let summary = json!({
        "coefficients": coefficients,
        "violations": violations,
        "main_le_theoremE": cmp.main_le_theorem_e,
    });
    if !g.json || csv.is_some() {
        let mut sink = csv_sink(csv, out)?;
        write_comparison_csv(&cmp, &mut sink)?;
        sink.flush()?;
    }
    if g.json {
        emit(out, &summary)
    } else if csv.is_some() {
        Ok(writeln!(out, "{summary}")?)
    } else {
        Ok(writeln!(out, "# {summary}")?)
    }
}

fn elim(g: &Global, path: &Path, keep: &[usize], map: &[String], out: &mut dyn Write) -> Result<()> {
    let src = read_ideal_json(path)?;
    let result = if map.is_empty() {
        // Generators need not be homogeneous when eliminating.
        let gens = src
            .gens
            .iter()
            .map(|s| Poly::parse(s, src.vars))
            .collect::<subgen_core::Result<Vec<_>>>()?;
        if keep.is_empty() || keep.iter().any(|&k| k >= src.vars) {
            bail!(Error::Invalid(format!("--keep must list indices below {}", src.vars)));
        }
        IdealJson {
            vars: keep.len(),
            gens: eliminate(src.vars, &gens, keep)?.iter().map(|p| p.to_string()).collect(),
        }
    } else {
        let maps = map
            .iter()
            .map(|s| HomPoly::parse(s, src.vars))
            .collect::<subgen_core::Result<Vec<_>>>()?;
        IdealJson::from_ideal(&image_ideal(&src.to_ideal()?, &maps)?)
    };
    if g.json {
        writeln!(out, "{}", serde_json::to_string(&result)?)?;
    } else {
        for p in &result.gens {
            writeln!(out, "{p}")?;
        }
    }
    Ok(())
}
