use hecke_core::analysis::{
    rank_stats, twist_numbers, twist_ratio, volume_bound_curves, VolumeBounds,
};
use hecke_core::invariants::{
    alexander_of, alexander_of_faithful, homfly_of, jones_of, khovanov_of, ClosureTrace,
    KhovanovTable,
};
use hecke_core::{BraidWord, WeavingSpec};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{parse_range, Common, TargetArgs};
use crate::cache::TraceCache;
use crate::error::{CliError, CliResult};
use crate::render::{self, rational_json, Item, Target};

pub fn resolve(args: &TargetArgs) -> CliResult<Vec<Target>> {
    match (&args.weaving, &args.braid) {
        (Some(w), None) => {
            let parts: Vec<&str> = w.split(',').map(str::trim).collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| CliError::input(format!("invalid --weaving {w:?}")))
            };
            let big_n = num(parts[0])?;
            let ms: Vec<usize> = match (parts.len(), &args.m_range) {
                (2, None) => vec![num(parts[1])?],
                (1, Some(r)) => {
                    let (a, b) = parse_range(r).map_err(CliError::input)?;
                    (a..=b).collect()
                }
                (2, Some(_)) => {
                    return Err(CliError::input(
                        "give m either in --weaving N,m or via --m-range, not both",
                    ))
                }
                (1, None) => return Err(CliError::input("--weaving N needs --m-range")),
                _ => {
                    return Err(CliError::input(format!(
                        "invalid --weaving {w:?}, expected N,m"
                    )))
                }
            };
            ms.into_iter()
                .map(|m| Ok(Target::Weaving(WeavingSpec::new(big_n, m)?)))
                .collect()
        }
        (None, Some(b)) => Ok(vec![Target::Braid(BraidWord::parse(b, args.strands)?)]),
        _ => Err(CliError::input(
            "exactly one of --weaving or --braid is required",
        )),
    }
}

/// Runs `f` on every item on a pool of `jobs` threads, keeping input order.
pub fn run_jobs<T, R, F>(jobs: Option<usize>, inputs: Vec<T>, f: F) -> CliResult<Vec<R>>
where
    T: Send,
    R: Send,
    F: Fn(T) -> CliResult<R> + Sync + Send,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(CliError::input("--jobs must be at least 1"));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::internal(e.to_string()))?;
    pool.install(|| inputs.into_par_iter().map(f).collect())
}

pub struct Ctx {
    pub cache: TraceCache,
}

impl Ctx {
    pub fn new(common: &Common) -> Self {
        Ctx {
            cache: TraceCache::new(common.cache_dir.clone()),
        }
    }

    pub fn closure(&self, t: &Target) -> CliResult<ClosureTrace> {
        match t {
            Target::Weaving(spec) => self.cache.closure_trace(spec),
            Target::Braid(w) => Ok(ClosureTrace::braid(w)?),
        }
    }

    pub fn khovanov(&self, spec: &WeavingSpec) -> CliResult<KhovanovTable> {
        spec.require_knot()?;
        Ok(khovanov_of(spec, &self.closure(&Target::Weaving(*spec))?)?)
    }
}

fn weaving_only(t: &Target, what: &str) -> CliResult<WeavingSpec> {
    match t {
        Target::Weaving(s) => Ok(*s),
        Target::Braid(_) => Err(CliError::input(format!("{what} needs --weaving"))),
    }
}

pub enum Job {
    Trace,
    Alexander { faithful: bool },
    Jones,
    Homfly,
    Khovanov,
    Twist { ks: Vec<usize> },
    Bounds { ks: Vec<usize>, variant: Option<u8> },
    Stats,
}

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Trace => "trace",
            Job::Alexander { .. } => "alexander",
            Job::Jones => "jones",
            Job::Homfly => "homfly",
            Job::Khovanov => "khovanov",
            Job::Twist { .. } => "twist",
            Job::Bounds { .. } => "bounds",
            Job::Stats => "stats",
        }
    }

    pub fn run(&self, ctx: &Ctx, t: &Target) -> CliResult<Item> {
        Ok(match self {
            Job::Trace => render::trace_item(ctx.closure(t)?.trace.poly()),
            Job::Alexander { faithful } => {
                let ct = ctx.closure(t)?;
                render::half_laurent_item(&if *faithful {
                    alexander_of_faithful(&ct)?
                } else {
                    alexander_of(&ct)?
                })
            }
            Job::Jones => render::half_laurent_item(&jones_of(&ctx.closure(t)?)?),
            Job::Homfly => render::homfly_item(&homfly_of(&ctx.closure(t)?)?),
            Job::Khovanov => render::khovanov_item(&ctx.khovanov(&weaving_only(t, "khovanov")?)?),
            Job::Twist { ks } => twist_item(ctx, t, ks)?,
            Job::Bounds { ks, variant } => {
                bounds_item(ctx, &weaving_only(t, "bounds")?, ks, *variant)?
            }
            Job::Stats => stats_item(&ctx.khovanov(&weaving_only(t, "stats")?)?)?,
        })
    }
}

fn twist_item(ctx: &Ctx, t: &Target, ks: &[usize]) -> CliResult<Item> {
    let profile = twist_numbers(&jones_of(&ctx.closure(t)?)?)?;
    let ratios = match t {
        Target::Weaving(spec) => ks
            .iter()
            .map(|&k| twist_ratio(spec, &profile, k))
            .collect::<Result<Vec<_>, _>>()?,
        Target::Braid(_) => Vec::new(),
    };
    let mut plain = format!("span {}\n", profile.span());
    for (j, tj) in profile.twists.iter().enumerate() {
        plain += &format!("T_{} = {tj}\n", j + 1);
    }
    for r in &ratios {
        plain += &format!("f_{k} = {:.6}  g_{k} = {:.6}\n", r.f, r.g, k = r.k);
    }
    let csv_rows = profile
        .twists
        .iter()
        .enumerate()
        .map(|(j, tj)| {
            let r = ratios.iter().find(|r| r.k == j + 1);
            let f = r.map(|r| r.f.to_string()).unwrap_or_default();
            let g = r.map(|r| r.g.to_string()).unwrap_or_default();
            format!("{},{tj},{f},{g}", j + 1)
        })
        .collect();
    Ok(Item {
        result: json!({
            "span": profile.span(),
            "twists": profile.twists.iter().map(rational_json).collect::<Vec<_>>(),
            "ratios": ratios.iter().map(|r| json!({
                "k": r.k, "T_k": rational_json(&r.t_k), "f_exact": rational_json(&r.f_exact), "f": r.f, "g": r.g,
            })).collect::<Vec<_>>(),
        }),
        csv_header: "j,T_j,f_j,g_j".into(),
        csv_rows,
        plain,
        latex: None,
    })
}

fn bounds_item(
    ctx: &Ctx,
    spec: &WeavingSpec,
    ks: &[usize],
    variant: Option<u8>,
) -> CliResult<Item> {
    let profile = twist_numbers(&jones_of(&ctx.closure(&Target::Weaving(*spec))?)?)?;
    let vb = VolumeBounds::new(spec.n);
    let variants: Vec<u8> = variant.map_or_else(|| vec![1, 2, 3, 4], |v| vec![v]);
    let mut curves = Vec::new();
    for &k in ks {
        let ratio = twist_ratio(spec, &profile, k)?;
        for &v in &variants {
            curves.push(volume_bound_curves(spec.n, spec.m, &ratio, v)?);
        }
    }
    let opt = |x: Option<f64>| x.map(|v| format!("{v:.6}")).unwrap_or_else(|| "-".into());
    let mut plain = format!("L_n = {:.6}  U_n = {:.6}\n", vb.l_n, vb.u_n);
    for c in &curves {
        plain += &format!(
            "k={} variant {}: lower {:.6}  upper {:.6}  (plain bounds {} .. {:.6})\n",
            c.k,
            c.variant,
            c.lower,
            c.upper,
            opt(c.lower_plain),
            c.upper_plain
        );
    }
    Ok(Item {
        result: json!({
            "L_n": vb.l_n,
            "U_n": vb.u_n,
            "curves": curves.iter().map(|c| json!({
                "k": c.k, "variant": c.variant, "lower_plain": c.lower_plain,
                "upper_plain": c.upper_plain, "lower": c.lower, "upper": c.upper,
            })).collect::<Vec<_>>(),
        }),
        csv_header: "k,variant,lower_plain,upper_plain,lower,upper".into(),
        csv_rows: curves
            .iter()
            .map(|c| {
                let lp = c.lower_plain.map(|v| v.to_string()).unwrap_or_default();
                format!(
                    "{},{},{lp},{},{},{}",
                    c.k, c.variant, c.upper_plain, c.lower, c.upper
                )
            })
            .collect(),
        plain,
        latex: None,
    })
}

fn stats_item(kh: &KhovanovTable) -> CliResult<Item> {
    let s = rank_stats(kh)?;
    let dev = |d: Option<f64>| d.map(|v| v.to_string()).unwrap_or_default();
    let p: serde_json::Map<String, Value> =
        s.p.iter()
            .map(|(i, pi)| (i.to_string(), rational_json(pi)))
            .collect();
    Ok(Item {
        result: json!({
            "total_rank": s.total_rank.to_string(),
            "mu": rational_json(&s.mu),
            "mu_decimal": s.mu_f64(),
            "variance": rational_json(&s.variance),
            "sigma": s.sigma,
            "l1_dev": s.l1_dev,
            "l2_dev": s.l2_dev,
            "p": p,
        }),
        csv_header: "total_rank,mu,sigma,L1,L2".into(),
        csv_rows: vec![format!(
            "{},{},{},{},{}",
            s.total_rank,
            s.mu_f64(),
            s.sigma,
            dev(s.l1_dev),
            dev(s.l2_dev)
        )],
        plain: format!(
            "total rank {}\nmu {:.6}\nsigma {:.6}\nL1 deviation {}\nL2 deviation {}\n",
            s.total_rank,
            s.mu_f64(),
            s.sigma,
            s.l1_dev.map_or("-".into(), |v| format!("{v:.6e}")),
            s.l2_dev.map_or("-".into(), |v| format!("{v:.6e}")),
        ),
        latex: None,
    })
}

pub fn run_invariant(job: Job, target: &TargetArgs) -> CliResult<String> {
    let targets = resolve(target)?;
    let ctx = Ctx::new(&target.common);
    let items = run_jobs(target.common.jobs, targets, |t| {
        let item = job.run(&ctx, &t)?;
        Ok((t, item))
    })?;
    render::render(job.name(), target.common.format, &items)
}
