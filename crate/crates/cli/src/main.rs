use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lens_contact::bypass::{attach_bypass, Side, TorusState};
use lens_contact::ext_rat::fmt_rational;
use lens_contact::farey::geodesic;
use lens_contact::mcg::{
    contact_mcg, contact_mcg_rel_torus, contact_mcg_s1s2, inclusion_kernel, smooth_mcg, GroupDescription,
};
use lens_contact::surgery::{build_chain, rot_q_surgery, rot_spectrum};
use lens_contact::sweep::check_sweep;
use lens_contact::tight::{count_tight_lens, enumerate_tight, ShuffleClass};
use lens_contact::unknots::{legendrian_classification, mountain_range, DEFAULT_DEPTH};
use lens_contact::{ExtRat, Knot, LensSpace, OrientedKnot};

mod render;

#[derive(Parser)]
#[command(name = "lenscontact", version, about = "Exact contact invariants of lens spaces L(p,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Svg,
}

#[derive(Args)]
struct LensArgs {
    p: u64,
    q: u64,
}

impl LensArgs {
    fn lens(&self) -> Result<LensSpace, Failure> {
        LensSpace::new(self.p, self.q).map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Farey graph queries
    Farey {
        #[command(subcommand)]
        command: FareyCommand,
    },
    /// Dividing slope after attaching a bypass along a ruling of slope R
    Bypass {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(long, conflicts_with = "back", required_unless_present = "back")]
        front: bool,
        #[arg(long)]
        back: bool,
    },
    /// Count (and optionally list) tight contact structures
    TightStructures {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Linking matrix and rot_Q of a surgery presentation
    Surgery {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, value_enum)]
        knot: KnotArg,
        /// Component rotation numbers, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        rots: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Peak invariants of the rational unknots in one tight structure
    Unknots {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, allow_hyphen_values = true)]
        structure: Option<String>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Legendrian mountain range of a rational unknot
    MountainRange {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "k1")]
        knot: OrientedKnot,
        #[arg(long, allow_hyphen_values = true)]
        structure: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Mapping class groups of L(p,q), or of S1xS2 with `mcg s1s2`
    Mcg {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        #[arg(long, group = "which")]
        smooth: bool,
        #[arg(long, group = "which")]
        contact: bool,
        #[arg(long, group = "which")]
        rel_torus: bool,
        #[arg(long, group = "which")]
        kernel: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Run the cross-validation sweep
    Check {
        #[arg(long, default_value_t = 20)]
        pmax: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FareyCommand {
    /// Shortest clockwise path from FROM to TO
    Path {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KnotArg {
    K1,
    K2,
}

impl From<KnotArg> for Knot {
    fn from(k: KnotArg) -> Self {
        match k {
            KnotArg::K1 => Knot::K1,
            KnotArg::K2 => Knot::K2,
        }
    }
}

enum Failure {
    Usage(String),
    Check,
}

impl From<lens_contact::Error> for Failure {
    fn from(e: lens_contact::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn slope(s: &str) -> Result<ExtRat, Failure> {
    s.parse().map_err(|e: lens_contact::Error| Failure::Usage(e.to_string()))
}

fn no_svg(format: Format) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(Failure::Usage("--format svg is only available for mountain-range".into()));
    }
    Ok(())
}

fn structure(lens: LensSpace, signs: Option<&str>) -> Result<ShuffleClass, Failure> {
    match signs {
        Some(s) => Ok(ShuffleClass::from_sign_string(lens, s)?),
        None => Ok(enumerate_tight(lens).swap_remove(0)),
    }
}

fn group_json(g: &GroupDescription) -> Value {
    json!({
        "tag": g.tag.to_string(),
        "generators": g.generators.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "aliases": g.aliases.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "order": g.order(),
    })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let mut emit = |s: String| writeln!(out, "{s}").map_err(|e| Failure::Usage(e.to_string()));
    match cli.command {
        Command::Farey { command: FareyCommand::Path { from, to, format } } => {
            no_svg(format)?;
            let path = geodesic(&slope(&from)?, &slope(&to)?)?;
            match format {
                Format::Json => emit(json!(path.to_strings()).to_string()),
                _ => emit(path.to_strings().join("\t")),
            }
        }
        Command::Bypass { s, r, front, .. } => {
            let side = if front { Side::Front } else { Side::Back };
            let next = attach_bypass(&TorusState::two_curves(slope(&s)?), &slope(&r)?, side)?;
            emit(next.dividing_slope.to_string())
        }
        Command::TightStructures { lens, list, format } => {
            no_svg(format)?;
            let lens = lens.lens()?;
            let count = count_tight_lens(lens);
            let classes: Vec<String> =
                if list { enumerate_tight(lens).iter().map(ShuffleClass::sign_string).collect() } else { vec![] };
            match format {
                Format::Json if list => emit(json!({"count": count.to_string(), "classes": classes}).to_string()),
                Format::Json => emit(json!({"count": count.to_string()}).to_string()),
                _ => {
                    emit(count.to_string())?;
                    classes.into_iter().try_for_each(&mut emit)
                }
            }
        }
        Command::Surgery { lens, knot, rots, format } => {
            no_svg(format)?;
            let lens = lens.lens()?;
            let knot = Knot::from(knot);
            let mut chain = build_chain(lens, knot);
            if let Some(r) = rots {
                chain = chain.with_rotations(r)?;
            }
            let m = chain.linking_matrix();
            let det = m.determinant();
            let rot = match &chain.rotations {
                Some(_) => Some(fmt_rational(&rot_q_surgery(&chain.linking_data(None)?)?)),
                None => None,
            };
            match format {
                Format::Json => {
                    let rows: Vec<Vec<String>> =
                        m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                    let spectrum: Vec<String> = rot_spectrum(lens, knot).iter().map(fmt_rational).collect();
                    emit(
                        json!({
                            "framings": chain.framings,
                            "matrix": rows,
                            "det": det.to_string(),
                            "rotations": chain.rotations,
                            "rot_q": rot,
                            "spectrum": spectrum,
                        })
                        .to_string(),
                    )
                }
                _ => {
                    emit(format!("M\t{}", m.to_string().replace('\n', " ")))?;
                    emit(format!("det\t{det}"))?;
                    match rot {
                        Some(r) => emit(format!("rot_q\t{r}")),
                        None => {
                            let s: Vec<String> = rot_spectrum(lens, knot).iter().map(fmt_rational).collect();
                            emit(format!("spectrum\t{}", s.join(" ")))
                        }
                    }
                }
            }
        }
        Command::Unknots { lens, structure: signs, format } => {
            no_svg(format)?;
            let lens = lens.lens()?;
            let ts = structure(lens, signs.as_deref())?;
            let rows = legendrian_classification(&ts);
            match format {
                Format::Json => {
                    let v: Vec<Value> = rows
                        .iter()
                        .map(|c| {
                            json!({
                                "knot": c.knot.to_string(),
                                "tb_q": fmt_rational(&c.tb_q),
                                "rot_q": fmt_rational(&c.rot_q),
                                "sl_q": fmt_rational(&c.sl_q()),
                                "structure": ts.sign_string(),
                            })
                        })
                        .collect();
                    emit(Value::Array(v).to_string())
                }
                _ => {
                    emit("knot\ttb_q\trot_q\tsl_q".into())?;
                    rows.iter().try_for_each(|c| {
                        emit(format!(
                            "{}\t{}\t{}\t{}",
                            c.knot,
                            fmt_rational(&c.tb_q),
                            fmt_rational(&c.rot_q),
                            fmt_rational(&c.sl_q())
                        ))
                    })
                }
            }
        }
        Command::MountainRange { lens, knot, structure: signs, depth, format } => {
            let lens = lens.lens()?;
            let ts = structure(lens, signs.as_deref())?;
            let mr = mountain_range(&ts, knot, depth);
            match format {
                Format::Tsv => emit(render::mountain_tsv(&mr).trim_end().to_string()),
                Format::Json => emit(render::mountain_json(&mr, lens, &ts).to_string()),
                Format::Svg => emit(render::mountain_svg(&mr).trim_end().to_string()),
            }
        }
        Command::Mcg { args, smooth, contact, rel_torus, kernel, format } => {
            no_svg(format)?;
            if args.len() == 1 {
                if args[0] != "s1s2" {
                    return Err(Failure::Usage("expected `mcg P Q` or `mcg s1s2`".into()));
                }
                let g = contact_mcg_s1s2();
                return match format {
                    Format::Json => emit(group_json(&g).to_string()),
                    _ => emit(g.to_string()),
                };
            }
            let parse = |s: &str| s.parse::<u64>().map_err(|_| Failure::Usage(format!("not a number: {s}")));
            let lens = LensSpace::new(parse(&args[0])?, parse(&args[1])?)?;
            let c = contact_mcg(lens);
            let all = [
                ("smooth", smooth_mcg(lens)),
                ("contact", c.group.clone()),
                ("rel-torus", contact_mcg_rel_torus(lens)),
                ("kernel", inclusion_kernel(lens)),
            ];
            let pick = [smooth, contact, rel_torus, kernel].iter().position(|&b| b);
            match (pick, format) {
                (Some(i), Format::Json) => emit(group_json(&all[i].1).to_string()),
                (Some(i), _) => emit(all[i].1.to_string()),
                (None, Format::Json) => {
                    let mut obj = serde_json::Map::new();
                    for (name, g) in &all {
                        obj.insert(name.to_string(), group_json(g));
                    }
                    obj.insert("cont0_trivial".into(), json!(c.cont0_trivial));
                    emit(Value::Object(obj).to_string())
                }
                (None, _) => all.iter().try_for_each(|(name, g)| emit(format!("{name}\t{g}"))),
            }
        }
        Command::Check { pmax, format } => {
            no_svg(format)?;
            if pmax < 2 {
                return Err(Failure::Usage("--pmax must be at least 2".into()));
            }
            let report = check_sweep(pmax);
            match format {
                Format::Json => {
                    let checks: Vec<Value> = report
                        .checks
                        .iter()
                        .map(|c| {
                            json!({
                                "name": c.name,
                                "passed": c.passed,
                                "cases": c.cases,
                                "counterexample": c.counterexample.as_ref().map(|x| x.to_string()),
                            })
                        })
                        .collect();
                    emit(
                        json!({
                            "pmax": report.p_max,
                            "checks": checks,
                            "runtime_seconds": report.runtime.as_secs_f64(),
                        })
                        .to_string(),
                    )?;
                }
                _ => {
                    for c in &report.checks {
                        let status = if c.passed { "pass" } else { "FAIL" };
                        let ce = c.counterexample.as_ref().map(|x| x.to_string()).unwrap_or_default();
                        emit(format!("{}\t{status}\t{}\t{ce}", c.name, c.cases).trim_end().to_string())?;
                    }
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!(
                "usage: lenscontact <farey|bypass|tight-structures|surgery|unknots|mountain-range|mcg|check> ..."
            );
            ExitCode::from(2)
        }
    }
}
