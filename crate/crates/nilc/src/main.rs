use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nilc::affine_weyl;
use nilc::catalogue::{self, Height2Orbit};
use nilc::error::Error;
use nilc::export;
use nilc::orthogonal;
use nilc::poset::{self, Resolution};
use nilc::root_system::{CartanType, RootSystem, TypeLetter};
use nilc::table1;
use nilc::verify::{self, Suite};
use nilc::weyl;

/// Exact enumeration of B-orbits in the height-2 nilpotent locus, their
/// dimensions, closure order, and the catalogue of height-2 G-orbits.
#[derive(Parser)]
#[command(name = "nilc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type letter (A-G)
    #[arg(long = "type", value_name = "LETTER")]
    type_letter: String,
    /// Rank of the root system
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the height-2 nilpotent G-orbits of a root system
    Catalogue {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Enumerate B-orbits in the height-2 locus (or, with --tilde, in the
    /// resolution of one catalogued orbit)
    Enumerate {
        #[command(flatten)]
        system: SystemArgs,
        /// Restrict to one catalogued orbit, e.g. h2-020
        #[arg(long)]
        orbit: Option<String>,
        /// Enumerate the resolution G x_P a instead of the locus itself
        #[arg(long)]
        tilde: bool,
    },
    /// Compare the closures of two B-orbits given by orthogonal sets
    Compare {
        #[command(flatten)]
        system: SystemArgs,
        /// First set, e.g. "1,0" or "1,0;0,1"
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        /// Second set
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// The admissible pair (minimal resolution representative) of a set
    Admissible {
        #[command(flatten)]
        system: SystemArgs,
        /// The orthogonal set, semicolon-separated roots
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Catalogued orbit to resolve in (default: the orbit of the set)
        #[arg(long)]
        orbit: Option<String>,
    },
    /// The full resolution fiber over a B-orbit
    Fiber {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        orbit: Option<String>,
    },
    /// Export a closure poset as DOT or JSON
    Hasse {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value = "json")]
        format: String,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        orbit: Option<String>,
        #[arg(long)]
        tilde: bool,
    },
    /// Run the verification suites
    Verify {
        /// One of all|bruhat|poset|catalogue|lemmas
        #[arg(long, default_value = "all")]
        suite: String,
        /// Worker threads for independent checks
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn rank_cap() -> usize {
    std::env::var("NILC_RANK_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}

fn build_system(args: &SystemArgs) -> Result<RootSystem, Error> {
    let letter: TypeLetter = args.type_letter.parse()?;
    let cap = rank_cap();
    if matches!(
        letter,
        TypeLetter::A | TypeLetter::B | TypeLetter::C | TypeLetter::D
    ) && args.rank > cap
    {
        return Err(Error::InvalidRank(format!(
            "rank {} exceeds the classical-rank cap {cap} (override with NILC_RANK_CAP)",
            args.rank
        )));
    }
    RootSystem::build(CartanType::new(letter, args.rank)?)
}

fn find_orbit<'a>(cat: &'a [Height2Orbit], id: &str) -> Result<&'a Height2Orbit, Error> {
    cat.iter()
        .find(|o| o.id == id)
        .ok_or_else(|| Error::NotInCatalogue(format!("no orbit with id '{id}'")))
}

fn diagram_string(d: &[i64]) -> String {
    let inner: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalogue { system } => {
            let sys = build_system(&system)?;
            let cat = catalogue::catalogue(&sys);
            println!(
                "{} height-2 nilpotent orbit(s) in type {}{}",
                cat.len(),
                sys.cartan_type().letter,
                sys.cartan_type().rank
            );
            println!("id\tdiagram\trk(a)\t|Psi|\tdim Ge\tlabel");
            for o in &cat {
                let label = table1::lookup(sys.cartan_type().letter, sys.rank(), &o.diagram)
                    .map(|r| format!("{} {}", r.family, r.label))
                    .unwrap_or_else(|| "-".to_string());
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    o.id,
                    diagram_string(&o.diagram),
                    o.rank_r,
                    o.psi.len(),
                    o.dim_g_orbit(),
                    label
                );
            }
            Ok(true)
        }
        Command::Enumerate {
            system,
            orbit,
            tilde,
        } => {
            let sys = build_system(&system)?;
            let cat = catalogue::catalogue(&sys);
            if tilde {
                let orbit_id = orbit.ok_or_else(|| {
                    Error::Parse("--tilde requires --orbit <id>".to_string())
                })?;
                let o = find_orbit(&cat, &orbit_id)?;
                let res = Resolution::new(&sys, o);
                let p = res.enumerate();
                println!(
                    "{} B-orbits in the resolution of {} ({} cover edges)",
                    p.nodes.len(),
                    o.id,
                    p.covers.len()
                );
                println!("w\tS\tdim\tsigma\tadmissible");
                for n in &p.nodes {
                    println!(
                        "{}\t{}\t{}\t{}\t{}",
                        weyl::word_string(&sys, &n.w),
                        n.set,
                        n.dim,
                        affine_weyl::word_string(&sys, &n.sigma.element),
                        n.admissible
                    );
                }
            } else {
                let p = poset::enumerate_n2(&sys, &cat);
                match &orbit {
                    Some(id) => {
                        let o = find_orbit(&cat, id)?;
                        let picked: Vec<_> = p
                            .nodes
                            .iter()
                            .filter(|n| n.g_orbit == o.id)
                            .collect();
                        println!(
                            "{} B-orbits in N2 lie in the G-orbit {} of {}{}",
                            picked.len(),
                            o.id,
                            sys.cartan_type().letter,
                            sys.cartan_type().rank
                        );
                        println!("S\tdim\tsigma");
                        for n in picked {
                            println!(
                                "{}\t{}\t{}",
                                n.set,
                                n.dim,
                                affine_weyl::word_string(&sys, &n.sigma.element)
                            );
                        }
                    }
                    None => {
                        println!(
                            "{} B-orbits in N2 for type {}{} ({} cover edges)",
                            p.nodes.len(),
                            sys.cartan_type().letter,
                            sys.cartan_type().rank,
                            p.covers.len()
                        );
                        println!("S\tdim\tsigma\tG-orbit");
                        for n in &p.nodes {
                            let tag = if n.g_orbit == "zero" {
                                "zero [extension: zero orbit]".to_string()
                            } else {
                                n.g_orbit.clone()
                            };
                            println!(
                                "{}\t{}\t{}\t{}",
                                n.set,
                                n.dim,
                                affine_weyl::word_string(&sys, &n.sigma.element),
                                tag
                            );
                        }
                    }
                }
            }
            Ok(true)
        }
        Command::Compare { system, r, s } => {
            let sys = build_system(&system)?;
            let rset = orthogonal::parse_orth_set(&sys, &r)?;
            let sset = orthogonal::parse_orth_set(&sys, &s)?;
            let leq = poset::closure_leq_n2(&sys, &rset, &sset)?;
            let geq = poset::closure_leq_n2(&sys, &sset, &rset)?;
            let verdict = match (leq, geq) {
                (true, true) => "EQ",
                (true, false) => "LEQ",
                (false, true) => "GEQ",
                (false, false) => "INCOMPARABLE",
            };
            let sr = affine_weyl::sigma_of_set(&sys, &rset);
            let ss = affine_weyl::sigma_of_set(&sys, &sset);
            println!(
                "{verdict}: true (σ_R = {}, ℓ={}, dim={}; σ_S = {}, ℓ={}, dim={})",
                affine_weyl::word_string(&sys, &sr.element),
                sr.len,
                sr.inv_length(),
                affine_weyl::word_string(&sys, &ss.element),
                ss.len,
                ss.inv_length()
            );
            Ok(true)
        }
        Command::Admissible { system, set, orbit } => {
            let sys = build_system(&system)?;
            let cat = catalogue::catalogue(&sys);
            let rset = orthogonal::parse_orth_set(&sys, &set)?;
            let o = match &orbit {
                Some(id) => find_orbit(&cat, id)?,
                None if rset.is_empty() => {
                    return Err(Error::Parse(
                        "the empty set lies in every orbit closure; pass --orbit".to_string(),
                    ))
                }
                None => catalogue::g_orbit_of_set(&sys, &cat, &rset)?,
            };
            let res = Resolution::new(&sys, o);
            let p = res.admissible_pair(&rset)?;
            println!(
                "admissible pair in {}: w = {}, S = {}, dim = {}, sigma = {}",
                o.id,
                weyl::word_string(&sys, &p.w),
                p.set,
                p.dim,
                affine_weyl::word_string(&sys, &p.sigma.element)
            );
            Ok(true)
        }
        Command::Fiber { system, set, orbit } => {
            let sys = build_system(&system)?;
            let cat = catalogue::catalogue(&sys);
            let rset = orthogonal::parse_orth_set(&sys, &set)?;
            let o = match &orbit {
                Some(id) => find_orbit(&cat, id)?,
                None if rset.is_empty() => {
                    return Err(Error::Parse(
                        "the empty set lies in every orbit closure; pass --orbit".to_string(),
                    ))
                }
                None => catalogue::g_orbit_of_set(&sys, &cat, &rset)?,
            };
            let res = Resolution::new(&sys, o);
            let fiber = res.fiber(&rset)?;
            println!("{} fiber member(s) over {} in {}", fiber.len(), rset, o.id);
            println!("w\tS\tdim\tadmissible");
            for p in &fiber {
                println!(
                    "{}\t{}\t{}\t{}",
                    weyl::word_string(&sys, &p.w),
                    p.set,
                    p.dim,
                    p.admissible
                );
            }
            Ok(true)
        }
        Command::Hasse {
            system,
            format,
            out,
            orbit,
            tilde,
        } => {
            let sys = build_system(&system)?;
            let cat = catalogue::catalogue(&sys);
            let json = if tilde {
                let orbit_id = orbit.ok_or_else(|| {
                    Error::Parse("--tilde requires --orbit <id>".to_string())
                })?;
                let o = find_orbit(&cat, &orbit_id)?;
                let res = Resolution::new(&sys, o);
                export::tilde_poset_json(&sys, &cat, &res.enumerate())
            } else {
                export::n2_poset_json(&sys, &poset::enumerate_n2(&sys, &cat))
            };
            let text = match format.as_str() {
                "json" => export::to_json_string(&json),
                "dot" => export::to_dot_string(&json),
                other => {
                    return Err(Error::Parse(format!(
                        "unknown format '{other}' (expected json|dot)"
                    )))
                }
            };
            match out {
                Some(path) => {
                    let mut f = std::fs::File::create(&path)
                        .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
                    f.write_all(text.as_bytes())
                        .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
                    println!("wrote {path}");
                }
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Verify { suite, jobs } => {
            let suite: Suite = suite.parse()?;
            let checks = verify::run_suite(suite, jobs.max(1));
            let mut all_passed = true;
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                println!(
                    "[{mark}] {} — {} ({:.2?})",
                    c.name, c.detail, c.elapsed
                );
                all_passed &= c.passed;
            }
            Ok(all_passed)
        }
    }
}

fn main() -> ExitCode {
    // die quietly when stdout is closed mid-pipe
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
