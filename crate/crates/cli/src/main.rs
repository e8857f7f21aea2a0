use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};

use lltlab::cache::Cache;
use lltlab::render;
use lltlab::verify;

use lltlab_core::dyck::{enum_dyck, DyckPath, MarkedPath};
use lltlab_core::epositivity::{
    areaprime_recursion, conjecture_expansion_marked, shift_and_e_expand, EExpansion,
};
use lltlab_core::hall_littlewood::{word, HLKind};
use lltlab_core::llt::{cm_run, llt_classical, llt_marked};
use lltlab_core::macdonald::htilde_t1;
use lltlab_core::epositivity::nabla_en;
use lltlab_core::symfunc::{Basis, Composition, Partition, SymF};

/// Exact LLT polynomials, operator words, and e-positivity verification.
#[derive(Parser)]
#[command(name = "lltlab", version, about)]
struct Cli {
    /// Cache directory for computed results (or set LLTLAB_CACHE)
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PathArgs {
    /// Comma-separated area word, e.g. 0,1,2,1,2,2 (empty string for the
    /// empty path)
    #[arg(long, allow_hyphen_values = true)]
    path: String,

    /// Interpret the path literal as a coarea list (entry j is (j-1) - a_j)
    #[arg(long)]
    coarea: bool,

    /// Marked corners: all, none, or pairs i:j,k:l
    #[arg(long, default_value = "all")]
    marks: String,
}

impl PathArgs {
    fn parse_path(&self) -> Result<DyckPath> {
        let p = if self.coarea {
            DyckPath::parse_coarea(&self.path)?
        } else {
            DyckPath::parse(&self.path)?
        };
        Ok(p)
    }

    fn parse_marked(&self) -> Result<MarkedPath> {
        let p = self.parse_path()?;
        let marks = MarkedPath::parse_marks(&p, &self.marks)?;
        Ok(MarkedPath::new(p, marks)?)
    }

    fn canonical_key(&self) -> Result<String> {
        let p = self.parse_path()?;
        Ok(format!("path={p}|marks={}", self.marks.trim()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute an LLT polynomial by one of the three routes
    Llt {
        #[command(flatten)]
        path: PathArgs,

        /// def: parking-function sum over PATH as the Dyck path D;
        /// perm/cm: permutation sum / operator run over PATH as the sweep
        /// image Z with MARKS
        #[arg(long, default_value = "def")]
        method: String,

        /// Output basis (e, h, p, m, s, f)
        #[arg(long, default_value = "e")]
        basis: String,

        /// Substitute q -> 1+q and print the e-expansion
        #[arg(long)]
        shift: bool,

        /// JSON output
        #[arg(long)]
        json: bool,
    },

    /// Compute the q->1+q e-expansion of a marked path's LLT
    Eexpand {
        #[command(flatten)]
        path: PathArgs,

        /// conj: poset expansion; shift: shifted permutation sum;
        /// recursion: shifted downset recursion
        #[arg(long, default_value = "conj")]
        method: String,

        /// JSON output
        #[arg(long)]
        json: bool,
    },

    /// Apply a word of creation operators to 1
    Hl {
        /// Operator: B, Bt, or C
        #[arg(long)]
        op: String,

        /// Comma-separated word, e.g. 3,1,1 (applied rightmost first)
        #[arg(long)]
        word: String,

        /// Output basis
        #[arg(long, default_value = "e")]
        basis: String,

        /// Substitute q -> 1+q and print the e-expansion
        #[arg(long)]
        shift: bool,

        /// JSON output
        #[arg(long)]
        json: bool,
    },

    /// The t=1 Macdonald specialization indexed by a partition
    Macdonald {
        /// Comma-separated partition, e.g. 3,1,1
        #[arg(long)]
        mu: String,

        /// Substitute q -> 1+q and print the e-expansion
        #[arg(long)]
        shift: bool,

        /// JSON output
        #[arg(long)]
        json: bool,
    },

    /// The combinatorial nabla e_n (bivariate in q, t)
    Nabla {
        #[arg(long)]
        n: u32,

        /// Output basis
        #[arg(long, default_value = "s")]
        basis: String,

        /// Substitute q -> 1+q (t left formal) and print the e-expansion
        #[arg(long)]
        shift: bool,

        /// JSON output
        #[arg(long)]
        json: bool,
    },

    /// Tabulate the shifted e-expansions of all size-n Dyck path LLTs
    Table {
        #[arg(long)]
        n: u32,

        /// Print unshifted e-expansions instead
        #[arg(long)]
        unshifted: bool,
    },

    /// Run a verification suite and exit 0/1 on pass/fail
    Verify {
        /// One of the suite names (see --help for the list)
        #[arg(long, value_parser = verify::SUITES.to_vec())]
        suite: String,

        /// Suite bound (size bound; instance count for cmsample)
        #[arg(long)]
        n: u32,

        /// Worker threads for independent instances
        #[arg(long)]
        jobs: Option<usize>,

        /// JSON output
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cache = Cache::from_options(cli.cache_dir);
    match cli.command {
        Command::Llt {
            path,
            method,
            basis,
            shift,
            json,
        } => {
            let key = format!(
                "v1|llt|{}|method={method}|basis={basis}|shift={shift}|json={json}",
                path.canonical_key()?
            );
            if let Some(hit) = cache.as_ref().and_then(|c| c.load(&key)) {
                println!("{hit}");
                return Ok(ExitCode::SUCCESS);
            }
            let f = match method.as_str() {
                "def" => {
                    if path.marks.trim() != "all" {
                        bail!("method def reads PATH as the Dyck path itself; use --marks all");
                    }
                    llt_classical(&path.parse_path()?)?
                }
                "perm" => llt_marked(&path.parse_marked()?)?,
                "cm" => cm_run(&path.parse_marked()?),
                other => bail!("unknown method {other:?}; expected def, perm or cm"),
            };
            let out = render_symf(&f, &basis, shift, json)?;
            if let Some(c) = cache.as_ref() {
                c.store(&key, &out);
            }
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Eexpand { path, method, json } => {
            let key = format!(
                "v1|eexpand|{}|method={method}|json={json}",
                path.canonical_key()?
            );
            if let Some(hit) = cache.as_ref().and_then(|c| c.load(&key)) {
                println!("{hit}");
                return Ok(ExitCode::SUCCESS);
            }
            let m = path.parse_marked()?;
            let ee: EExpansion = match method.as_str() {
                "conj" => conjecture_expansion_marked(&m),
                "shift" => shift_and_e_expand(&llt_marked(&m)?)?,
                "recursion" => shift_and_e_expand(&areaprime_recursion(&m)?)?,
                other => bail!("unknown method {other:?}; expected conj, shift or recursion"),
            };
            let out = if json {
                render::eexpansion_to_json(&ee)?.to_string()
            } else {
                ee.to_string()
            };
            if let Some(c) = cache.as_ref() {
                c.store(&key, &out);
            }
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Hl {
            op,
            word: w,
            basis,
            shift,
            json,
        } => {
            let kind = HLKind::parse(&op)?;
            let comp = Composition::parse(&w)?;
            let f = word(kind, &comp)?;
            let out = render_symf(&f, &basis, shift, json)?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Macdonald { mu, shift, json } => {
            let mu = Partition::parse(&mu)?;
            let f = htilde_t1(&mu)?;
            let out = render_symf(&f, "e", shift, json)?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Nabla {
            n,
            basis,
            shift,
            json,
        } => {
            let f = nabla_en(n)?;
            let out = render_symf(&f, &basis, shift, json)?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { n, unshifted } => {
            for d in enum_dyck(n as usize)? {
                let f = llt_classical(&d)?;
                let ee = if unshifted {
                    lltlab_core::epositivity::e_expansion(&f)?
                } else {
                    shift_and_e_expand(&f)?
                };
                println!("{d}\t{ee}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n,
            jobs,
            json,
        } => {
            let report = if let Some(j) = jobs {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| anyhow!("thread pool: {e}"))?;
                pool.install(|| verify::run_suite(&suite, n))?
            } else {
                verify::run_suite(&suite, n)?
            };
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn render_symf(f: &SymF, basis: &str, shift: bool, json: bool) -> Result<String> {
    if shift {
        if basis != "e" {
            bail!("--shift output is an e-expansion; use --basis e");
        }
        let ee = shift_and_e_expand(f)?;
        return Ok(if json {
            render::eexpansion_to_json(&ee)?.to_string()
        } else {
            ee.to_string()
        });
    }
    let b = Basis::parse(basis)?;
    let g = f.convert(b);
    Ok(if json {
        render::symf_to_json(&g)?.to_string()
    } else {
        g.to_string()
    })
}

// keep the set import used by tests below
#[allow(unused)]
fn _mark_set_type(_: BTreeSet<(u32, u32)>) {}
