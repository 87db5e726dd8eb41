use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use linkinv::catalog;
use linkinv::constructions::{
    bing_double, cable, clasper_surgery, realize_milnor, whitehead_double, CableSpec, TreeClasper,
    DEFAULT_CROSSING_BUDGET,
};
use linkinv::diagram::LinkDiagram;
use linkinv::harness::{verify_cmk, verify_self_ck};
use linkinv::magnus::{MilnorIndex, MilnorInvariants};
use linkinv::polynomials::{alexander, conway, derivatives_at_one, jones, LaurentPoly, DEFAULT_BRACKET_BUDGET};
use linkinv::{Error, Result};

#[derive(Parser)]
#[command(
    name = "linkinv",
    version,
    about = "Milnor invariants, link polynomials and clasper surgery"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct LinkArg {
    /// Catalog name or path to a slice-word / PD JSON file.
    #[arg(long)]
    link: String,
}

#[derive(Args)]
struct BudgetArg {
    /// Largest diagram a construction may emit.
    #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
    crossing_budget: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Milnor invariant of one index, or every index up to --max-len.
    Milnor {
        #[command(flatten)]
        link: LinkArg,
        /// A single index such as `123` (components are digits 1-9).
        #[arg(long)]
        index: Option<String>,
        /// Without --index, list every index up to this length.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Jones polynomial in q (Kauffman bracket state sum).
    Jones {
        #[command(flatten)]
        link: LinkArg,
        /// Largest crossing count the state sum accepts.
        #[arg(long, default_value_t = DEFAULT_BRACKET_BUDGET)]
        crossing_budget: usize,
        /// Also print derivatives at q = 1 of orders 1 through N.
        #[arg(long)]
        derivatives: Option<u32>,
    },
    /// Conway polynomial and one-variable Alexander polynomial.
    Conway {
        #[command(flatten)]
        link: LinkArg,
    },
    /// Linking matrix and component writhes.
    Lk {
        #[command(flatten)]
        link: LinkArg,
    },
    /// Zero-framed cable; copies per component, comma separated.
    Cable {
        #[command(flatten)]
        link: LinkArg,
        /// Parallel copies per component, e.g. `2,1`.
        #[arg(long)]
        copies: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Bing double of one component (1-based).
    Bing {
        #[command(flatten)]
        link: LinkArg,
        /// Component to double, 1-based.
        #[arg(long)]
        component: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Untwisted Whitehead double of one component (1-based).
    WhiteheadDouble {
        #[command(flatten)]
        link: LinkArg,
        /// Component to double, 1-based.
        #[arg(long)]
        component: usize,
        /// Clasp sign, 1 or -1.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        clasp: i32,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Surgery along a tree clasper given as JSON.
    Clasper {
        #[command(flatten)]
        link: LinkArg,
        /// Path to the clasper JSON.
        #[arg(long)]
        clasper: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// A link from the unlink with mu(I) = ±1 and vanishing indeterminacy.
    Realize {
        /// Target index, e.g. `1123`.
        #[arg(long)]
        index: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Named links.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Seeded verification campaigns.
    Verify {
        #[command(subcommand)]
        campaign: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Names and sizes of every entry.
    List,
    /// Print an entry as a slice word.
    Show { name: String },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Self C_k-moves keep every mu with at most k repeats; one more repeat can change.
    #[command(name = "theorem1", alias = "self-ck")]
    SelfCk {
        /// Move degree.
        #[arg(long)]
        k: usize,
        /// Longest index compared.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Number of random moves.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Seed; equal seeds give identical reports.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// C_m^(k+1)-moves keep every mu with at most k repeats.
    Cmk {
        /// Clasper degree (m + 1 leaves).
        #[arg(long)]
        m: usize,
        /// At least k + 1 leaves sit on one component; indices with at most k repeats are compared.
        #[arg(long)]
        k: usize,
        /// Longest index compared.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Number of random moves.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Seed; equal seeds give identical reports.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn component(d: &LinkDiagram, c: usize) -> Result<usize> {
    if c == 0 || c > d.n_components() {
        return Err(Error::InvalidArgument(format!(
            "component {c} out of range 1..={}",
            d.n_components()
        )));
    }
    Ok(c - 1)
}

fn diagram_out(d: &LinkDiagram, json: bool) -> Output {
    if json {
        Output::Json(d.to_json())
    } else {
        let mut s = String::new();
        for p in &d.provenance {
            let _ = writeln!(s, "# {p}");
        }
        match &d.slice {
            Some(w) => s.push_str(&w.to_string()),
            None => s.push_str(&d.pd.to_json().to_string()),
        }
        Output::Text(s)
    }
}

fn poly_json(p: &LaurentPoly, var: &str) -> Value {
    json!({"terms": p.to_json(), "text": p.render(var)})
}

enum Output {
    Text(String),
    Json(Value),
}

fn run(cli: Cli) -> Result<Output> {
    let json = cli.json;
    let text = |s: String| Ok(Output::Text(s));
    match cli.cmd {
        Cmd::Milnor { link, index, max_len } => {
            let d = catalog::load(&link.link)?;
            let indices = match index {
                Some(s) => vec![MilnorIndex::parse(&s)?],
                None => MilnorIndex::all(d.n_components(), max_len),
            };
            let len = indices.iter().map(MilnorIndex::len).max().unwrap_or(2);
            let m = MilnorInvariants::for_diagram(&d, len)?;
            let values = indices.iter().map(|i| m.mu_bar(i)).collect::<Result<Vec<_>>>()?;
            if json {
                return Ok(Output::Json(json!({
                    "link": link.link,
                    "values": values.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
                })));
            }
            let mut s = String::new();
            for v in values {
                let _ = writeln!(
                    s,
                    "mu({}): value {}, delta {}, residue {}",
                    v.index, v.value, v.delta, v.residue
                );
            }
            text(s)
        }
        Cmd::Jones {
            link,
            crossing_budget,
            derivatives,
        } => {
            let d = catalog::load(&link.link)?;
            let v = jones(&d, crossing_budget)?;
            let rows = match derivatives {
                Some(n) => derivatives_at_one(&v, n)?,
                None => Vec::new(),
            };
            if json {
                return Ok(Output::Json(json!({
                    "link": link.link,
                    "jones": poly_json(&v, "q"),
                    "derivatives_at_1": rows.iter().map(|r| json!({
                        "order": r.order,
                        "q": r.full.to_string(),
                        "sqrt_q": r.half.to_string(),
                    })).collect::<Vec<_>>(),
                })));
            }
            let mut s = format!("{v}\n");
            for r in rows {
                let _ = writeln!(s, "order {}: d/dq {}  d/d(q^1/2) {}", r.order, r.full, r.half);
            }
            text(s)
        }
        Cmd::Conway { link } => {
            let d = catalog::load(&link.link)?;
            let (z, a) = (conway(&d)?, alexander(&d)?);
            if json {
                return Ok(Output::Json(json!({
                    "link": link.link,
                    "conway": poly_json(&z, "z"),
                    "alexander": poly_json(&a, "t"),
                })));
            }
            text(format!("conway    {}\nalexander {}\n", z.render("z"), a.render("t")))
        }
        Cmd::Lk { link } => {
            let d = catalog::load(&link.link)?;
            let cd = d.component_data()?;
            if json {
                return Ok(Output::Json(json!({
                    "link": link.link,
                    "linking": cd.linking,
                    "writhe": cd.writhe,
                })));
            }
            let mut s = String::new();
            for row in &cd.linking {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
                let _ = writeln!(s, "{}", cells.join(""));
            }
            let _ = writeln!(s, "writhe {:?}", cd.writhe);
            text(s)
        }
        Cmd::Cable { link, copies, budget } => {
            let d = catalog::load(&link.link)?;
            let multiplicities = copies
                .split(',')
                .map(|c| c.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidArgument(format!("bad --copies `{copies}`")))?;
            let out = cable(&d, &CableSpec { multiplicities }, budget.crossing_budget)?;
            if json {
                let h: Vec<usize> = out.h.iter().map(|c| c + 1).collect();
                return Ok(Output::Json(json!({"diagram": out.diagram.to_json(), "h": h})));
            }
            Ok(diagram_out(&out.diagram, false))
        }
        Cmd::Bing {
            link,
            component: c,
            budget,
        } => {
            let d = catalog::load(&link.link)?;
            let c = component(&d, c)?;
            Ok(diagram_out(&bing_double(&d, c, budget.crossing_budget)?, json))
        }
        Cmd::WhiteheadDouble {
            link,
            component: c,
            clasp,
            budget,
        } => {
            let d = catalog::load(&link.link)?;
            let c = component(&d, c)?;
            Ok(diagram_out(
                &whitehead_double(&d, c, clasp, budget.crossing_budget)?,
                json,
            ))
        }
        Cmd::Clasper { link, clasper, budget } => {
            let d = catalog::load(&link.link)?;
            let src =
                std::fs::read_to_string(&clasper).map_err(|e| Error::InvalidArgument(format!("{clasper}: {e}")))?;
            let cl = TreeClasper::from_json(&src)?;
            Ok(diagram_out(&clasper_surgery(&d, &cl, budget.crossing_budget)?, json))
        }
        Cmd::Realize { index, budget } => {
            let idx = MilnorIndex::parse(&index)?;
            Ok(diagram_out(&realize_milnor(&idx, budget.crossing_budget)?, json))
        }
        Cmd::Catalog {
            action: CatalogCmd::List,
        } => {
            let names = catalog::names();
            if json {
                return Ok(Output::Json(json!(names)));
            }
            let mut s = String::new();
            for n in names {
                let d = catalog::catalog(&n)?;
                let _ = writeln!(
                    s,
                    "{n:<26} {} components, {} crossings",
                    d.n_components(),
                    d.crossing_count()
                );
            }
            text(s)
        }
        Cmd::Catalog {
            action: CatalogCmd::Show { name },
        } => {
            let d = catalog::catalog(&name)?;
            if json {
                return Ok(Output::Json(d.to_json()));
            }
            match catalog::entry(&name) {
                Ok(e) if !e.text.is_empty() => text(e.text.to_string()),
                _ => Ok(diagram_out(&d, false)),
            }
        }
        Cmd::Verify { campaign } => {
            let report = match campaign {
                VerifyCmd::SelfCk {
                    k,
                    max_len,
                    trials,
                    seed,
                } => verify_self_ck(k, max_len, trials, seed)?,
                VerifyCmd::Cmk {
                    m,
                    k,
                    max_len,
                    trials,
                    seed,
                } => verify_cmk(m, k, max_len, trials, seed)?,
            };
            if json {
                return Ok(Output::Json(report.to_json()));
            }
            text(report.render())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let text = match run(cli) {
        Ok(Output::Text(s)) => s,
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::BudgetExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            };
        }
    };
    // A closed pipe (`| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::SUCCESS
}
