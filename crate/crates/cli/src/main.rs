use std::path::PathBuf;
use std::process::ExitCode;

use affine_nilhecke::affine_perm::elements_up_to_length;
use affine_nilhecke::cache::{default_cache_dir, CACHE_ENV};
use affine_nilhecke::nilhecke::{struct_const_with, Method};
use affine_nilhecke::parse::{parse_element, parse_partition};
use affine_nilhecke::strong::{
    kschur, marked_lower_covers, pieri_prime, strong_schur, strong_strips_at,
};
use affine_nilhecke::symfunc::{cauchy_check, check_strong_expansion, weak_schur};
use affine_nilhecke::{AffinePerm, CoproductCache, NilCoxElem, SymFunc};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "affine-pieri",
    version,
    about = "Structure constants, cap operators and strong strips for the affine nilHecke ring of type A",
    after_help = "Elements are given as a reduced word (\"s1 s0\" or \"1,0\"), a window (\"[-1,4]\"), or \"id\".\n\
                  Coproducts are cached on disk under $AFFINE_NILHECKE_CACHE, else $XDG_CACHE_HOME/affine-nilhecke,\n\
                  else ~/.cache/affine-nilhecke.\n\n\
                  Exit status: 0 on success, 1 when a verification fails, 2 on a usage error."
)]
struct Cli {
    /// Rank n of the affine symmetric group (type A_{n-1})
    #[arg(short = 'n', long = "n", global = true, default_value_t = 3)]
    n: usize,

    /// Print a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Keep coproducts in memory only
    #[arg(long, global = true)]
    no_cache: bool,

    /// Cache directory
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bruhat lower covers of w
    Covers { w: String },
    /// Marked strong covers below w
    MarkedCovers { w: String },
    /// Strong strips of size m with inside w
    Strips {
        w: String,
        m: usize,
        /// Marking level l, using i <= l < j
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        level: i64,
    },
    /// The coproduct of A_w
    Coproduct {
        w: String,
        /// Evaluate coefficients at 0
        #[arg(long)]
        eval0: bool,
    },
    /// The structure constant p^w_{u,v}
    StructConst {
        w: String,
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Delta)]
        method: MethodArg,
    },
    /// The cap operator D_u applied to A_w
    Cap { u: String, w: String },
    /// Check D_i = D'_i on every A_w up to a length bound
    PieriCheck {
        #[arg(long)]
        max_len: usize,
    },
    /// Strong Schur function of w/u (u defaults to the identity)
    StrongSchur { w: String, u: Option<String> },
    /// k-Schur function of an (n-1)-bounded partition
    Kschur { partition: String },
    /// Weak Schur function of w/u (u defaults to the identity)
    WeakSchur { w: String, u: Option<String> },
    /// Check the affine Cauchy identity through a degree
    CauchyCheck {
        #[arg(long)]
        degree: usize,
    },
    /// Expand Strong_{w/u} over 0-Grassmannian strong Schur functions
    StrongExpand { w: String, u: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Delta,
    Subset,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<affine_nilhecke::Error> for Failure {
    fn from(e: affine_nilhecke::Error) -> Self {
        match e {
            affine_nilhecke::Error::Asymmetric(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    json: String,
    text: String,
    verified: bool,
}

impl Output {
    fn new(json: String, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            verified: true,
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable output")
}

#[derive(Serialize)]
struct CoverJson<'a> {
    window: &'a AffinePerm,
    word: String,
    reflection: [i64; 2],
}

#[derive(Serialize)]
struct IntTermJson<'a> {
    u: &'a AffinePerm,
    v: &'a AffinePerm,
    coeff: i64,
}

#[derive(Serialize)]
struct PieriMismatch {
    window: AffinePerm,
    i: usize,
    cap: NilCoxElem,
    strips: NilCoxElem,
}

#[derive(Serialize)]
struct PieriReport {
    n: usize,
    max_len: usize,
    checked: usize,
    pass: bool,
    mismatches: Vec<PieriMismatch>,
}

#[derive(Serialize)]
struct ExpansionTerm<'a> {
    window: &'a AffinePerm,
    word: String,
    coeff: i64,
}

#[derive(Serialize)]
struct ExpansionJson<'a> {
    coefficients: Vec<ExpansionTerm<'a>>,
    skew: &'a SymFunc,
    expanded: &'a SymFunc,
    holds: bool,
}

fn lines<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> String) -> String {
    items.into_iter().map(f).collect::<Vec<_>>().join("\n")
}

struct Context {
    n: usize,
    cache: CoproductCache,
}

impl Context {
    fn elem(&self, text: &str) -> Result<AffinePerm, Failure> {
        parse_element(self.n, text)
            .map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
    }

    fn elem_or_id(&self, text: &Option<String>) -> Result<AffinePerm, Failure> {
        match text {
            Some(t) => self.elem(t),
            None => Ok(AffinePerm::identity(self.n)),
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if cli.n < 2 {
        return Err(Failure::Usage(format!(
            "rank must be at least 2, got {}",
            cli.n
        )));
    }
    let cache = match (&cli.cache_dir, cli.no_cache) {
        (_, true) => CoproductCache::in_memory(),
        (Some(dir), false) => CoproductCache::with_dir(dir),
        (None, false) => {
            default_cache_dir().map_or_else(CoproductCache::in_memory, CoproductCache::with_dir)
        }
    };
    let ctx = Context { n: cli.n, cache };
    let n = ctx.n;
    Ok(match &cli.command {
        Command::Covers { w } => {
            let covers = ctx.elem(w)?.lower_covers();
            let json: Vec<CoverJson> = covers
                .iter()
                .map(|(v, t)| CoverJson {
                    window: v,
                    word: v.word_string(),
                    reflection: [t.a(), t.b()],
                })
                .collect();
            let text = lines(&covers, |(v, t)| format!("{v}\t{}\t{t}", v.word_string()));
            Output::new(to_json(&json), text)
        }
        Command::MarkedCovers { w } => {
            let covers = marked_lower_covers(&ctx.elem(w)?);
            let text = lines(&covers, |c| {
                format!(
                    "{} ->^{} {}\t(i,j)=({},{})",
                    c.inside, c.mark, c.outside, c.i, c.j
                )
            });
            Output::new(to_json(&covers), text)
        }
        Command::Strips { w, m, level } => {
            let strips = strong_strips_at(&ctx.elem(w)?, *m, *level);
            let text = lines(&strips, |s| {
                let mut line = s.inside().to_string();
                for c in s.covers() {
                    line += &format!(" ->^{} {}", c.mark, c.outside);
                }
                line
            });
            Output::new(to_json(&strips), text)
        }
        Command::Coproduct { w, eval0 } => {
            let delta = ctx.cache.coproduct(&ctx.elem(w)?);
            if *eval0 {
                let t = delta.eval_zero();
                let json: Vec<IntTermJson> = t
                    .iter()
                    .map(|((u, v), &coeff)| IntTermJson { u, v, coeff })
                    .collect();
                let text = lines(&t, |((u, v), c)| format!("{c} A{u} (x) A{v}"));
                Output::new(to_json(&json), text)
            } else {
                let text = lines(delta.terms(), |(u, v, p)| format!("({p}) A{u} (x) A{v}"));
                Output::new(to_json(&*delta), text)
            }
        }
        Command::StructConst { w, u, v, method } => {
            let (w, u, v) = (ctx.elem(w)?, ctx.elem(u)?, ctx.elem(v)?);
            let p = match method {
                MethodArg::Delta => ctx.cache.struct_const(&w, &u, &v)?,
                MethodArg::Subset => struct_const_with(Method::Subset, &w, &u, &v)?,
            };
            Output::new(to_json(&p), p.to_string())
        }
        Command::Cap { u, w } => {
            let x = ctx
                .cache
                .cap(&ctx.elem(u)?, &NilCoxElem::basis(&ctx.elem(w)?))?;
            Output::new(to_json(&x), x.to_string())
        }
        Command::PieriCheck { max_len } => {
            let mut checked = 0usize;
            let mut mismatches = Vec::new();
            for w in elements_up_to_length(n, *max_len) {
                let x = NilCoxElem::basis(&w);
                for i in 1..=w.length() {
                    let by_cap = ctx.cache.pieri_cap(i as i64, &x)?;
                    let by_strips = pieri_prime(i, &x);
                    checked += 1;
                    if by_cap != by_strips {
                        mismatches.push(PieriMismatch {
                            window: w.clone(),
                            i,
                            cap: by_cap,
                            strips: by_strips,
                        });
                    }
                }
            }
            let pass = mismatches.is_empty();
            let text = format!(
                "{} n={n} max_len={max_len}: {checked} checks, {} mismatches",
                if pass { "PASS" } else { "FAIL" },
                mismatches.len()
            );
            let json = to_json(&PieriReport {
                n,
                max_len: *max_len,
                checked,
                pass,
                mismatches,
            });
            Output {
                verified: pass,
                ..Output::new(json, text)
            }
        }
        Command::StrongSchur { w, u } => {
            let f = strong_schur(&ctx.elem(w)?, &ctx.elem_or_id(u)?)?;
            Output::new(to_json(&f), f.to_string())
        }
        Command::Kschur { partition } => {
            let lambda = parse_partition(partition)?;
            let f = kschur(n, &lambda)?;
            Output::new(to_json(&f), f.to_string())
        }
        Command::WeakSchur { w, u } => {
            let f = weak_schur(&ctx.elem(w)?, &ctx.elem_or_id(u)?)?;
            Output::new(to_json(&f), f.to_string())
        }
        Command::CauchyCheck { degree } => {
            let report = cauchy_check(n, *degree)?;
            let text = lines(&report.degrees, |d| {
                format!(
                    "{} degree {}{}",
                    if d.pass { "PASS" } else { "FAIL" },
                    d.degree,
                    if d.pass {
                        String::new()
                    } else {
                        format!(": {:?}", d.mismatches)
                    }
                )
            });
            Output {
                verified: report.pass(),
                ..Output::new(to_json(&report), text)
            }
        }
        Command::StrongExpand { w, u } => {
            let e = check_strong_expansion(&ctx.elem(w)?, &ctx.elem_or_id(u)?)?;
            let coefficients = e
                .coefficients
                .iter()
                .map(|(v, &coeff)| ExpansionTerm {
                    window: v,
                    word: v.word_string(),
                    coeff,
                })
                .collect();
            let mut text = lines(&e.coefficients, |(v, c)| {
                format!("{c} * Strong_{}", v.word_string())
            });
            text += &format!(
                "\n{}: Strong_(w/u) = {}",
                if e.holds() { "PASS" } else { "FAIL" },
                e.skew
            );
            let json = to_json(&ExpansionJson {
                coefficients,
                skew: &e.skew,
                expanded: &e.expanded,
                holds: e.holds(),
            });
            Output {
                verified: e.holds(),
                ..Output::new(json, text.trim_start().to_string())
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
