use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use spw_core::crystal::{crystal_dump, crystal_lattice_check, crystal_weight_mult};
use spw_core::exactgeom::{
    dd_convert, is_reflexive, LatticeEnumerator, parse_rat_vec, polyhedron_json, volume, write_ieq, write_poi, Rat, VPolytope,
    DEFAULT_FACE_BUDGET,
};
use spw_core::rootdata::{cominuscule_weights, minuscule_weights, DEFAULT_WORD_BUDGET};
use spw_core::stringdata::{
    anticanonical_check, census_row, e6_counterexample, gt_renaming_table, parse_cone_file, partition_to_weight,
    string_cone, string_fan_with_budget, write_cone_file, CensusSummary, Provider,
};
use spw_core::{CartanType, Error, Provenance, ReducedWord, RootSystem, StringCone, Weight};

use crate::config::Config;
use crate::report::{Format, Report};
use crate::{exit, Cli, Command, ConeArgs, EmitKind, Outcome, ProviderArgs, ProviderKind, WeightArgs};

/// Settings shared by every command.
struct Ctx {
    budget: Option<u64>,
    trust: bool,
    config: Config,
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Error::Parse(msg.into()).into()
}

fn strs(v: &[Rat]) -> Value {
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn weight_json(w: &Weight) -> Value {
    strs(&w.coords)
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Ctx> {
        let config = match &cli.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let env = match std::env::var("SPW_BUDGET") {
            Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| usage(format!("SPW_BUDGET={v} is not a number")))?),
            Err(_) => None,
        };
        Ok(Ctx {
            budget: cli.budget.or(env).or(config.budget),
            trust: cli.trust_external || config.trust_external.unwrap_or(false),
            config,
        })
    }

    fn root_system(&self, name: &str) -> Result<RootSystem> {
        Ok(RootSystem::parse(name)?)
    }

    fn word(&self, rs: &RootSystem, spec: &str) -> Result<ReducedWord> {
        let w = match spec.trim() {
            "standard" => rs.standard_word(),
            "all" => bail!(usage("--word all is only valid for census")),
            letters => ReducedWord::parse(letters)?,
        };
        rs.check_letters(&w)?;
        rs.require_reduced(&w)?;
        Ok(w)
    }

    fn weight(&self, rs: &RootSystem, args: &WeightArgs) -> Result<Weight> {
        let w = match (&args.lambda, &args.partition) {
            (Some(l), None) => Weight::parse(l)?,
            (None, Some(p)) => {
                if rs.cartan_type() != CartanType::A {
                    bail!(usage("--partition is only meaningful in type A"));
                }
                let mut parts = parse_rat_vec(p)?;
                if parts.len() > rs.rank() + 1 {
                    bail!(usage(format!("--partition has more than {} parts", rs.rank() + 1)));
                }
                parts.resize(rs.rank() + 1, Rat::from_integer(0.into()));
                partition_to_weight(&parts)
            }
            _ => bail!(usage("give λ with --lambda or --partition")),
        };
        if w.rank() != rs.rank() {
            return Err(Error::DimMismatch {
                expected: rs.rank(),
                found: w.rank(),
            }
            .into());
        }
        Ok(w)
    }

    /// A cone file for this word: the explicit one or a match from the config.
    fn cone_file(&self, rs: &RootSystem, word: &ReducedWord, explicit: &Option<PathBuf>) -> Result<String> {
        if let Some(p) = explicit {
            return Ok(p.display().to_string());
        }
        for p in &self.config.cones {
            let path = p.display().to_string();
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{path}: {e}")))?;
            let c = parse_cone_file(&text, &path)?;
            if c.root_system().name() == rs.name() && c.word() == word {
                return Ok(path);
            }
        }
        Err(Error::ProviderMismatch(format!("no cone file for {} word {word}", rs.name())).into())
    }

    fn cone(&self, rs: &RootSystem, word: &ReducedWord, args: &ProviderArgs) -> Result<StringCone> {
        let kind = if args.cone_file.is_some() {
            ProviderKind::External
        } else {
            args.provider
        };
        let empirical = Provider::Empirical { degree: args.degree };
        let c = match kind {
            ProviderKind::Builtin => string_cone(rs, word, &Provider::Builtin),
            ProviderKind::Empirical => string_cone(rs, word, &empirical),
            ProviderKind::External => {
                let path = self.cone_file(rs, word, &args.cone_file)?;
                string_cone(rs, word, &Provider::External { path, trusted: self.trust })
            }
            ProviderKind::Auto => match string_cone(rs, word, &Provider::Builtin) {
                Err(Error::ProviderMismatch(_)) if rs.cartan_type() == CartanType::A => string_cone(rs, word, &empirical),
                other => other,
            },
        };
        Ok(c?)
    }

    fn cone_args(&self, args: &ConeArgs) -> Result<(RootSystem, StringCone)> {
        let rs = self.root_system(&args.root_system)?;
        let word = self.word(&rs, &args.word)?;
        let cone = self.cone(&rs, &word, &args.provider)?;
        Ok((rs, cone))
    }

    fn echo(&self, rs: &RootSystem, word: Option<&str>, lambda: Option<&Weight>) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("root_system".into(), json!(rs.name()));
        if let Some(w) = word {
            m.insert("word".into(), json!(w));
        }
        if let Some(l) = lambda {
            m.insert("lambda".into(), weight_json(l));
        }
        m.insert("trust_external".into(), json!(self.trust));
        m
    }
}

fn cone_result(cone: &StringCone) -> Value {
    let mut v = json!({
        "dim": cone.dim(),
        "offset": cone.offset(),
        "cone": polyhedron_json(cone.cone().as_h()),
    });
    if cone.provenance() == &Provenance::BuiltinGtA {
        v["gt_renaming"] = gt_table(cone.root_system().rank());
    }
    v
}

fn gt_table(n: usize) -> Value {
    json!(gt_renaming_table(n)
        .into_iter()
        .map(|(pos, i, j)| json!({"position": pos, "i": i, "j": j}))
        .collect::<Vec<_>>())
}

/// The standard word and `k − 1` evenly spaced others.
fn sample_words(all: &[ReducedWord], standard: &ReducedWord, k: usize) -> Vec<ReducedWord> {
    let mut words = vec![standard.clone()];
    let mut step = 1;
    while words.len() < k.min(all.len()) {
        for i in 1..k {
            let w = &all[(i * all.len() / k + step - 1) % all.len()];
            if words.len() < k && !words.contains(w) {
                words.push(w.clone());
            }
        }
        step += 1;
    }
    words
}

fn range(counts: &BTreeMap<usize, usize>) -> Value {
    json!({
        "min": counts.keys().next(),
        "max": counts.keys().next_back(),
        "values": counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
    })
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let ctx = Ctx::new(cli)?;
    let start = Instant::now();
    let mut code = exit::OK;
    let mut report = match &cli.command {
        Command::Info { root_system, weight } => {
            let rs = ctx.root_system(root_system)?;
            let mut result = json!({
                "type": rs.name(),
                "rank": rs.rank(),
                "cartan": rs.cartan(),
                "symmetrizer": rs.symmetrizer(),
                "positive_roots": rs.n_positive(),
                "weyl_group_order": rs.weyl_group_order().to_string(),
                "longest_word_length": rs.n_positive(),
                "standard_word": rs.standard_word().to_string(),
                "minuscule": minuscule_weights(&rs),
                "cominuscule": cominuscule_weights(&rs),
            });
            let mut lambda = None;
            if weight.lambda.is_some() || weight.partition.is_some() {
                let l = ctx.weight(&rs, weight)?;
                result["weyl_dim"] = json!(rs.weyl_dim(&l)?);
                result["dual_weight"] = weight_json(&rs.dual_weight(&l));
                result["orbit_size"] = json!(rs.weyl_orbit(&l).len());
                lambda = Some(l);
            }
            Report::new("info", ctx.echo(&rs, None, lambda.as_ref()), result)
        }
        Command::Cone(args) => {
            let (rs, cone) = ctx.cone_args(args)?;
            let mut r = Report::new("cone", ctx.echo(&rs, Some(&cone.word().to_string()), None), cone_result(&cone));
            r.provenance = Some(cone.provenance().to_string());
            r.porta = Some(write_ieq(cone.cone().as_h()));
            r
        }
        Command::Polytope { cone: args, weight, list } => {
            let (rs, cone) = ctx.cone_args(args)?;
            let lambda = ctx.weight(&rs, weight)?;
            let poly = cone.polytope(&lambda)?;
            let d = poly.describe()?;
            let v = &d.v;
            let integral = poly.is_integral()?;
            let reflexive = if integral {
                match is_reflexive(v) {
                    Ok(b) => Some(b),
                    Err(Error::NotFullDim) => None,
                    Err(e) => return Err(e.into()),
                }
            } else {
                None
            };
            let mut result = json!({
                "dimension": d.affine_dim(),
                "vertices": d.vertex_count(),
                "facets": d.facet_count(),
                "lattice_points": poly.lattice_count()?,
                "integral": integral,
                "reflexive": reflexive,
                "highest_weight_vertex": strs(&poly.highest_weight_vertex()),
            });
            if *list {
                result["vertex_list"] = json!(v.vertices.iter().map(|p| strs(p)).collect::<Vec<_>>());
                result["lattice_point_list"] = json!(poly.lattice_points()?);
                result["inequalities"] = json!(polyhedron_json(&d.h));
            }
            if cone.provenance() == &Provenance::BuiltinGtA {
                result["gt_renaming"] = gt_table(rs.rank());
            }
            let mut r = Report::new("polytope", ctx.echo(&rs, Some(&cone.word().to_string()), Some(&lambda)), result);
            r.provenance = Some(cone.provenance().to_string());
            r.porta = Some(write_ieq(&d.h));
            r
        }
        Command::Census {
            root_system,
            word,
            sample,
            weight,
            provider,
        } => {
            let rs = ctx.root_system(root_system)?;
            let lambda = ctx.weight(&rs, weight)?;
            let budget = ctx.budget.unwrap_or(DEFAULT_WORD_BUDGET);
            let wants_all = word.is_empty() || word.iter().any(|w| w == "all");
            let words: Vec<ReducedWord> = if wants_all || sample.is_some() {
                let all: Vec<ReducedWord> = rs.all_reduced_words_with_budget(budget).collect::<spw_core::Result<_>>()?;
                match sample {
                    Some(k) => sample_words(&all, &rs.standard_word(), *k),
                    None => all,
                }
            } else {
                word.iter().map(|w| ctx.word(&rs, w)).collect::<Result<_>>()?
            };
            let rows = words
                .par_iter()
                .map(|w| Ok(census_row(&ctx.cone(&rs, w, provider)?, &lambda)?))
                .collect::<Result<Vec<_>>>()?;
            let summary = CensusSummary::from_rows(&rows);
            let provenances: Vec<&str> = {
                let mut p: Vec<&str> = rows.iter().map(|r| r.provenance.as_str()).collect();
                p.sort();
                p.dedup();
                p
            };
            let result = json!({
                "words": summary.words,
                "vertices": range(&summary.vertex_counts),
                "facets": range(&summary.facet_counts),
                "all_integral": rows.iter().all(|r| r.integral),
                "rows": rows,
            });
            let mut input = ctx.echo(&rs, None, Some(&lambda));
            input.insert("word".into(), json!(if wants_all && sample.is_none() { "all".to_string() } else { format!("{} words", words.len()) }));
            let mut r = Report::new("census", input, result);
            r.provenance = Some(provenances.join("; "));
            r.rows = Some(rows);
            r
        }
        Command::Fan(args) => {
            let (rs, cone) = ctx.cone_args(args)?;
            let fan = string_fan_with_budget(&cone, ctx.budget.unwrap_or(DEFAULT_FACE_BUDGET))?;
            let cones: Vec<Value> = fan
                .maximal_cones
                .iter()
                .zip(&fan.interior_rays)
                .map(|(c, ray)| {
                    json!({
                        "interior_ray": ray.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "cone": polyhedron_json(c.as_h()),
                    })
                })
                .collect();
            let result = json!({"maximal_cones": cones, "count": fan.len(), "trivial": fan.is_trivial()});
            let mut r = Report::new("fan", ctx.echo(&rs, Some(&cone.word().to_string()), None), result);
            r.provenance = Some(cone.provenance().to_string());
            r
        }
        Command::Fiber { cone: args, weight, mu } => {
            let (rs, cone) = ctx.cone_args(args)?;
            let lambda = ctx.weight(&rs, weight)?;
            let mu = Weight::parse(mu)?;
            if mu.rank() != rs.rank() {
                return Err(Error::DimMismatch {
                    expected: rs.rank(),
                    found: mu.rank(),
                }
                .into());
            }
            let poly = cone.polytope(&lambda)?;
            let fiber = poly.fiber(&mu)?;
            let v = match dd_convert(&fiber) {
                Err(Error::EmptyPolyhedron) => VPolytope::new(fiber.dim(), Vec::new()),
                other => other?,
            };
            let empty = v.is_empty();
            let points = if empty { 0 } else { LatticeEnumerator::new(&fiber)?.count()? };
            let vol = if empty { None } else { Some(volume(&v)?.to_string()) };
            let dual = rs.dual_weight(&lambda);
            let integral = lambda.is_integral();
            let mult = if integral { Some(rs.freudenthal_mult(&dual, &mu)?) } else { None };
            let crystal = if integral && rs.cartan_type() == CartanType::A {
                Some(crystal_weight_mult(&dual, &mu)?)
            } else {
                None
            };
            let result = json!({
                "mu": weight_json(&mu),
                "empty": empty,
                "lattice_points": points,
                "volume": vol,
                "multiplicity": mult,
                "crystal_multiplicity": crystal,
                "vertices": v.vertices.len(),
            });
            if empty {
                code = exit::EMPTY;
            }
            let mut input = ctx.echo(&rs, Some(&cone.word().to_string()), Some(&lambda));
            input.insert("mu".into(), weight_json(&mu));
            let mut r = Report::new("fiber", input, result);
            r.provenance = Some(cone.provenance().to_string());
            r.porta = Some(write_poi(&v));
            r
        }
        Command::Anticanonical(args) => {
            let (rs, cone) = ctx.cone_args(args)?;
            let rep = anticanonical_check(&cone)?;
            let mut r = Report::new(
                "anticanonical",
                ctx.echo(&rs, Some(&cone.word().to_string()), None),
                serde_json::to_value(rep)?,
            );
            r.provenance = Some(cone.provenance().to_string());
            r
        }
        Command::E6 { n } => {
            let rep = e6_counterexample(*n)?;
            let mut input = Map::new();
            input.insert("n".into(), json!(n));
            let mut r = Report::new("e6", input, serde_json::to_value(rep)?);
            r.provenance = Some(Provenance::BuiltinE6Suffix.to_string());
            r
        }
        Command::CrystalCheck { cone: args, weight } => {
            let (rs, cone) = ctx.cone_args(args)?;
            let lambda = ctx.weight(&rs, weight)?;
            let rep = crystal_lattice_check(&cone, &lambda)?;
            let mut result = serde_json::to_value(&rep)?;
            result["equal"] = json!(rep.equal());
            let mut r = Report::new(
                "crystal-check",
                ctx.echo(&rs, Some(&cone.word().to_string()), Some(&lambda)),
                result,
            );
            r.provenance = Some(cone.provenance().to_string());
            r
        }
        Command::Emit { cone: args, weight, kind } => {
            let (rs, cone) = ctx.cone_args(args)?;
            let text = match kind {
                EmitKind::Stringcone => write_cone_file(&cone),
                EmitKind::Crystal => {
                    let lambda = ctx.weight(&rs, weight)?;
                    serde_json::to_string_pretty(&crystal_dump(&lambda, &[cone.word().clone()])?)? + "\n"
                }
                EmitKind::Ieq | EmitKind::Poi => {
                    let lambda = ctx.weight(&rs, weight)?;
                    let poly = cone.polytope(&lambda)?;
                    match (poly.describe(), kind) {
                        (Ok(d), EmitKind::Ieq) => write_ieq(&d.h),
                        (Ok(d), _) => write_poi(&d.v),
                        (Err(Error::EmptyPolyhedron), _) => {
                            code = exit::EMPTY;
                            write_poi(&VPolytope::new(cone.dim(), Vec::new()))
                        }
                        (Err(e), _) => return Err(e.into()),
                    }
                }
            };
            return Ok(Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            });
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let stdout = report.render(cli.format)?;
    if cli.format == Format::Csv && report.rows.is_none() {
        unreachable!("render rejects csv without rows");
    }
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}
