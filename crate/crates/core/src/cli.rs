//! The `nonrep` command line.
//!
//! [`run`] takes the full argument vector and returns the exit code and the
//! report: 0 on success, 1 on a domain error, 2 on a parse or usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::indeterminacy::{
    gcd_pullapart_check, int1_quadruple, int1_triple, int2_linear, int2_membership,
    int2_quadratic_image, IntError, IntersectionData, LinearImage, Membership,
};
use crate::lie::{eta, lie_normalize, LieNormalForm};
use crate::milnor::{
    first_nonvanishing_order, magnus_expand, mu_invariants, parse_longitudes, verify_eta_identity,
    MeridianWord, Verdict,
};
use crate::tree::{
    forest_to_sum, lambda_rank, normalize_lambda, op_delete, op_parallel, op_reverse, op_sum,
    parse_forest, parse_tree_sum, Label, LambdaVector, TreeContext, TreeSum,
};
use crate::{Error, GroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "nonrep", version, about = "Non-repeating intersection invariants, Milnor invariants and INT indeterminacies")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct TreeArgs {
    #[arg(long)]
    order: usize,
    #[arg(long)]
    labels: Label,
    /// trivial, zk:K or free:K
    #[arg(long, default_value = "trivial", value_parser = parse_group)]
    group: GroupKind,
}

impl TreeArgs {
    fn ctx(&self) -> TreeContext {
        TreeContext::new(self.order, self.labels, self.group)
    }
}

#[derive(Args, Debug)]
struct BoxArgs {
    #[arg(long, default_value_t = 4)]
    bound: i64,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u128,
}

fn parse_group(s: &str) -> Result<GroupKind, String> {
    GroupKind::from_flag(s).ok_or_else(|| format!("`{s}` is not trivial, zk:K or free:K"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpName {
    /// Parallel copy: δ_i
    #[value(alias = "δ")]
    Delta,
    /// Band sum: σ_ij
    #[value(alias = "σ")]
    Sigma,
    /// Orientation reversal: s_i
    S,
    /// Deletion: e_i
    E,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Canonical coordinates of a forest or tree sum
    Normalize {
        #[command(flatten)]
        t: TreeArgs,
        file: PathBuf,
    },
    /// Rank of the order n group on m labels
    Rank { n: usize, m: Label },
    /// Apply a surface operation: `op delta I FILE`, `op sigma I J FILE`, `op s I FILE`, `op e I FILE`
    Op {
        #[arg(value_enum)]
        op: OpName,
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        #[command(flatten)]
        t: TreeArgs,
    },
    /// η^i of a forest or tree sum, in the right-nested basis
    Eta {
        i: Label,
        file: PathBuf,
        #[command(flatten)]
        t: TreeArgs,
    },
    /// Truncated Magnus expansion of a word in x1, x2, ...
    Magnus {
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        nonrepeating: bool,
        word: String,
    },
    /// Order n Milnor invariants of a longitude file
    Mu {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        labels: Label,
        file: PathBuf,
    },
    /// First order with a nonvanishing invariant
    Order {
        #[arg(long)]
        labels: Label,
        file: PathBuf,
    },
    /// Compare η^i of a forest with the Milnor invariants of longitudes
    VerifyMu {
        #[command(flatten)]
        t: TreeArgs,
        forest: PathBuf,
        longitudes: PathBuf,
    },
    /// Order 1 quotient on three labels
    Int1Triple { file: PathBuf },
    /// Order 1 relations on four labels
    Int1Quad { file: PathBuf },
    /// Linear order 2 relations on four labels
    Int2Linear { file: PathBuf },
    /// Bounded exploration of the quadratic order 2 image
    Int2Quad {
        file: PathBuf,
        #[command(flatten)]
        b: BoxArgs,
    },
    /// Search for a preimage of a point of Z⊕Z
    Int2Member {
        #[arg(allow_negative_numbers = true)]
        x: i64,
        #[arg(allow_negative_numbers = true)]
        y: i64,
        file: PathBuf,
        #[command(flatten)]
        b: BoxArgs,
    },
    /// Whether sphere pairings have gcd 1
    GcdCheck {
        #[arg(allow_negative_numbers = true, required = true)]
        values: Vec<i64>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

macro_rules! impl_from_domain {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Domain(e.into())
            }
        }
    )*};
}
impl_from_domain!(crate::ParseError, crate::tree::TreeError, crate::lie::LieError, crate::milnor::MilnorError, IntError);

type Out = Result<String, Failure>;

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.verb, cli.format) {
        Ok(s) => (0, s),
        Err(Failure::Usage(m)) => (2, format!("usage error: {m}\n")),
        Err(Failure::Io(m)) => (1, format!("IoError: {m}\n")),
        Err(Failure::Domain(Error::Parse(e))) => (2, format!("ParseError: {e}\n")),
        Err(Failure::Domain(e)) => (1, format!("{e}\n")),
    }
}

fn read(p: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
}

fn label(s: &str) -> Result<Label, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("`{s}` is not a label")))
}

/// Reads a forest (`+ tree` lines) or a tree sum (`INT tree` lines).
fn read_sum(p: &Path, ctx: TreeContext) -> Result<TreeSum, Failure> {
    let text = read(p)?;
    let first = crate::parse::content_lines(&text).next().map(|(_, l)| l).unwrap_or("");
    let forest = first.starts_with('+')
        || (first.starts_with('-') && first[1..].trim_start().starts_with('('));
    if forest {
        Ok(forest_to_sum(&parse_forest(&text, ctx)?)?)
    } else {
        Ok(parse_tree_sum(&text, ctx)?)
    }
}

fn no_csv(format: Format, verb: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!("{verb} has no csv output")));
    }
    Ok(())
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn dispatch(verb: Verb, format: Format) -> Out {
    match verb {
        Verb::Normalize { t, file } => {
            let v = normalize_lambda(&read_sum(&file, t.ctx())?)?;
            Ok(render_lambda(&v, format))
        }
        Verb::Rank { n, m } => {
            no_csv(format, "rank")?;
            let r = lambda_rank(n, m);
            Ok(match format {
                Format::Json => pretty(json!({ "order": n, "labels": m, "rank": r.to_string() })),
                _ => format!("{r}\n"),
            })
        }
        Verb::Op { op, args, t } => {
            let (nums, file) = args.split_at(args.len() - 1);
            let want = if op == OpName::Sigma { 2 } else { 1 };
            if nums.len() != want {
                return Err(Failure::Usage(format!("{op:?} takes {want} label(s) and a file")));
            }
            let ls = nums.iter().map(|s| label(s)).collect::<Result<Vec<_>, _>>()?;
            let s = read_sum(Path::new(&file[0]), t.ctx())?;
            let r = match op {
                OpName::Delta => op_parallel(&s, ls[0])?,
                OpName::Sigma => op_sum(&s, ls[0], ls[1])?,
                OpName::S => op_reverse(&s, ls[0])?,
                OpName::E => op_delete(&s, ls[0])?,
            };
            Ok(render_sum(&r, format))
        }
        Verb::Eta { i, file, t } => {
            no_csv(format, "eta")?;
            let nf = lie_normalize(&eta(i, &read_sum(&file, t.ctx())?)?)?;
            Ok(match format {
                Format::Json => pretty(json!({ "i": i, "value": nf.to_string() })),
                _ => format!("{}\n", nf_text(&nf)),
            })
        }
        Verb::Magnus { deg, nonrepeating, word } => {
            let w = MeridianWord::parse(0, &word, Label::MAX)?;
            let p = magnus_expand(&w, deg, nonrepeating);
            Ok(match format {
                Format::Text => format!("{p}\n"),
                Format::Json => {
                    let terms: Vec<_> = p.iter().map(|(w, k)| json!({ "word": w, "coefficient": k })).collect();
                    pretty(json!({ "degree": deg, "nonrepeating": nonrepeating, "terms": terms }))
                }
                Format::Csv => {
                    let mut s = String::from("word,coefficient\n");
                    for (w, k) in p.iter() {
                        let w: Vec<String> = w.iter().map(|l| format!("X{l}")).collect();
                        writeln!(s, "{},{k}", w.concat()).unwrap();
                    }
                    s
                }
            })
        }
        Verb::Mu { order, labels, file } => {
            let ls = parse_longitudes(&read(&file)?, labels)?;
            Ok(render_mu(order, &mu_invariants(&ls, order)?, format)?)
        }
        Verb::Order { labels, file } => {
            let ls = parse_longitudes(&read(&file)?, labels)?;
            match first_nonvanishing_order(&ls)? {
                Verdict::Order(n, mu) => Ok(render_mu(n, &mu, format)?),
                Verdict::AllVanish => {
                    no_csv(format, "order")?;
                    Ok(match format {
                        Format::Json => pretty(json!({ "order": null })),
                        _ => "all invariants of order 0..m-2 vanish\n".into(),
                    })
                }
            }
        }
        Verb::VerifyMu { t, forest, longitudes } => {
            no_csv(format, "verify-mu")?;
            let f = parse_forest(&read(&forest)?, t.ctx())?;
            let ls = parse_longitudes(&read(&longitudes)?, t.labels)?;
            let ok = verify_eta_identity(&f, &ls)?;
            Ok(match format {
                Format::Json => pretty(json!({ "agrees": ok })),
                _ => ok.iter().enumerate().map(|(k, b)| format!("{}: {b}\n", k + 1)).collect(),
            })
        }
        Verb::Int1Triple { file } => {
            no_csv(format, "int1-triple")?;
            let q = int1_triple(&data(&file)?);
            Ok(match format {
                Format::Json => pretty(serde_json::to_value(q).expect("serializes")),
                _ => format!("{q}\n"),
            })
        }
        Verb::Int1Quad { file } => render_linear(&int1_quadruple(&data(&file)?)?, format),
        Verb::Int2Linear { file } => render_linear(&int2_linear(&data(&file)?)?, format),
        Verb::Int2Quad { file, b } => {
            let d = data(&file)?;
            let (rep, note) = match int2_quadratic_image(&d, b.bound, b.budget) {
                Ok(r) => (r, None),
                Err(e @ IntError::BudgetExceeded { .. }) => {
                    let IntError::BudgetExceeded { ref partial, .. } = e else { unreachable!() };
                    ((**partial).clone(), Some(e.to_string()))
                }
                Err(e) => return Err(e.into()),
            };
            Ok(match format {
                Format::Text => {
                    let mut s = note.map(|n| format!("{n}\n")).unwrap_or_default();
                    writeln!(s, "{rep}").unwrap();
                    s
                }
                Format::Json => {
                    let mut v = rep.to_json();
                    v["budget_note"] = json!(note);
                    pretty(v)
                }
                Format::Csv => {
                    let mut s = String::from("x,y\n");
                    for (x, y) in rep.points() {
                        writeln!(s, "{x},{y}").unwrap();
                    }
                    s
                }
            })
        }
        Verb::Int2Member { x, y, file, b } => {
            no_csv(format, "int2-member")?;
            let m = int2_membership((x, y), &data(&file)?, b.bound, b.budget)?;
            Ok(match (format, &m) {
                (Format::Json, Membership::Yes(w)) => pretty(json!({ "member": "yes", "witness": w })),
                (Format::Json, _) => pretty(json!({ "member": "unknown" })),
                _ => format!("{m}\n"),
            })
        }
        Verb::GcdCheck { values } => {
            no_csv(format, "gcd-check")?;
            let map: BTreeMap<(usize, Label), i64> =
                values.iter().enumerate().map(|(k, &v)| ((k, 0), v)).collect();
            let ok = gcd_pullapart_check(&map);
            Ok(match format {
                Format::Json => pretty(json!({ "gcd_one": ok })),
                _ => format!("{ok}\n"),
            })
        }
    }
}

fn data(p: &Path) -> Result<IntersectionData, Failure> {
    let d = IntersectionData::parse(&read(p)?)?;
    d.validate()?;
    Ok(d)
}

fn nf_text(nf: &LieNormalForm) -> String {
    if nf.is_zero() {
        "0".into()
    } else {
        nf.to_string()
    }
}

fn render_lambda(v: &LambdaVector, format: Format) -> String {
    let coef = |c: &crate::GroupRingElement| {
        if v.ctx().kind == GroupKind::Trivial {
            c.iter().map(|(_, k)| k).sum::<i64>().to_string()
        } else {
            c.to_string()
        }
    };
    match format {
        Format::Text if v.is_zero() => "0\n".into(),
        Format::Text => v.to_string(),
        Format::Json => {
            let coords: Vec<_> = v
                .coords()
                .iter()
                .map(|(idx, c)| json!({ "basis": idx.to_string(), "coefficient": coef(c) }))
                .collect();
            pretty(json!({ "order": v.ctx().order, "labels": v.ctx().labels, "coordinates": coords }))
        }
        Format::Csv => {
            let mut s = String::from("basis,coefficient\n");
            for (idx, c) in v.coords() {
                writeln!(s, "{},{}", csv_quote(&idx.to_string()), csv_quote(&coef(c))).unwrap();
            }
            s
        }
    }
}

fn render_sum(t: &TreeSum, format: Format) -> String {
    match format {
        Format::Text if t.is_zero() => "0\n".into(),
        Format::Text => t.to_string(),
        Format::Json => {
            let terms: Vec<_> =
                t.iter().map(|(tr, k)| json!({ "tree": tr.to_string(), "coefficient": k })).collect();
            pretty(json!({ "order": t.ctx().order, "labels": t.ctx().labels, "terms": terms }))
        }
        Format::Csv => {
            let mut s = String::from("coefficient,tree\n");
            for (tr, k) in t.iter() {
                writeln!(s, "{k},{}", csv_quote(&tr.to_string())).unwrap();
            }
            s
        }
    }
}

fn render_mu(n: usize, mu: &BTreeMap<Label, crate::lie::LieElement>, format: Format) -> Out {
    let mut nfs = Vec::new();
    for (i, e) in mu {
        nfs.push((*i, lie_normalize(e)?));
    }
    Ok(match format {
        Format::Text => {
            let mut s = format!("order {n}\n");
            for (i, nf) in &nfs {
                writeln!(s, "mu^{i} = {}", nf_text(nf)).unwrap();
            }
            s
        }
        Format::Json => {
            let comps: BTreeMap<String, String> = nfs.iter().map(|(i, nf)| (i.to_string(), nf_text(nf))).collect();
            pretty(json!({ "order": n, "mu": comps }))
        }
        Format::Csv => {
            let mut s = String::from("component,bracket,coefficient\n");
            for (i, nf) in &nfs {
                for (w, k) in &nf.coords {
                    let b = crate::lie::Bracket::right_nested(w).to_string();
                    writeln!(s, "{i},{},{k}", csv_quote(&b)).unwrap();
                }
            }
            s
        }
    })
}

fn render_linear(l: &LinearImage, format: Format) -> Out {
    no_csv(format, "linear INT maps")?;
    Ok(match format {
        Format::Json => pretty(json!({
            "matrix": l.matrix,
            "basis": l.image.basis,
            "invariant_factors": l.image.invariant_factors,
            "quotient": l.image.quotient_description(),
        })),
        _ => format!("{l}\n"),
    })
}
