//! Command-line front end for party monoids and the Party-Hecke algebra.
//!
//! Exit codes: 0 when every check in scope passes, 1 when a check fails,
//! 2 on bad input.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use partyhecke::combinatorics::{enumerate_partitions, enumerate_permutations};
use partyhecke::diagram::{brauer_generators, closure, tonal2_generators};
use partyhecke::field::{PrimeField, Specialization, DEFAULT_PRIMES};
use partyhecke::hecke::{verify_suite, Suite};
use partyhecke::party::{
    coprime_pairs, green_classes, maximal_subgroup_party, maximal_subgroup_tied, party_subgroup_order_formula,
    tied_subgroup_order_formula, GreenRelation, MonoidKind,
};
use partyhecke::quotient::{quotient_dimension, random_rational_points, semisimplicity_certificate, Ideal};
use partyhecke::tensor::{faithfulness_rank, verify_matrix_relations, Convention, TensorSpace};
use partyhecke::twisted::{twisted_multiply, TwistKind, TwistedElement, Twisting};
use partyhecke::{
    AlgebraElement, AlgebraError, Diagram, GeneratorWord, PartyElement, PartyHecke, RelationReport, Scalar,
    SetPartition,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser, Debug)]
#[command(name = "partyhecke", version, about = "Party monoids and the Party-Hecke algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Number of points.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Number of colours (upper indices) in the tensor representation.
    #[arg(long, global = true, default_value_t = 2)]
    m: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Permit computations that take minutes.
    #[arg(long, global = true)]
    allow_long: bool,
    /// Twisting parameter, a rational function in a and q.
    #[arg(long, global = true, default_value = "q^2")]
    delta: String,
    /// Relation suite name, or `all`.
    #[arg(long, global = true, default_value = "all")]
    suite: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count (and optionally list) a family of objects.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
        #[arg(long)]
        list: bool,
    },
    /// Party monoid operations.
    Party {
        #[command(subcommand)]
        op: PartyOp,
    },
    /// Twisted monoid algebras.
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
    /// The Party-Hecke algebra.
    Ph {
        #[command(subcommand)]
        op: PhOp,
    },
    /// The tensor representation.
    Rep {
        #[command(subcommand)]
        op: RepOp,
    },
    /// Quotients and semisimplicity.
    Quot {
        #[command(subcommand)]
        op: QuotOp,
    },
    /// ASCII picture of a diagram or party element.
    Render { element: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Partitions,
    Party,
    Tied,
    Tonal2,
    Brauer,
}

#[derive(Subcommand, Debug)]
enum PartyOp {
    /// Coprime normal form of `[partition][permutation]`.
    Normalize { element: String },
    Mul { x: String, y: String },
    /// Green's classes of the party or tied monoid.
    Green {
        #[arg(long, default_value = "party")]
        monoid: String,
        #[arg(long, default_value = "J")]
        relation: String,
    },
    /// Maximal subgroup at the idempotent given by a set partition.
    Maxsub {
        partition: String,
        #[arg(long, default_value = "party")]
        monoid: String,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraOp {
    /// Twisted product of two basis elements.
    Mul {
        x: String,
        y: String,
        #[arg(long, default_value = "beta")]
        twist: String,
    },
}

#[derive(Subcommand, Debug)]
enum PhOp {
    /// Expand a word in the generators.
    Word { word: String },
    /// Multiply two elements, each a word or a sum of `c * [I][s]` terms.
    Mul { x: String, y: String },
    Verify,
    Dim,
}

#[derive(Subcommand, Debug)]
enum RepOp {
    Verify {
        #[arg(long, value_enum, default_value_t = ConventionArg::Consistent)]
        convention: ConventionArg,
    },
    Rank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Consistent,
    AsPrinted,
}

#[derive(Subcommand, Debug)]
enum QuotOp {
    Dim {
        #[arg(long, default_value = "FF")]
        ideal: String,
    },
    Semisimple {
        /// Also test at (a, q) = (1, 1).
        #[arg(long)]
        at_one: bool,
    },
}

enum Failure {
    Input(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// A finished command: JSON body, text lines, and whether its checks passed.
struct Report {
    body: Value,
    text: Vec<String>,
    pass: bool,
}

impl Report {
    fn new(body: Value, text: Vec<String>, pass: bool) -> Self {
        Self { body, text, pass }
    }
}

type Outcome = Result<Report, Failure>;

const PARTY_SIZES: [(usize, usize); 4] = [(2, 3), (3, 16), (4, 131), (5, 1496)];
const TONAL2_SIZES: [(usize, usize); 3] = [(2, 4), (3, 31), (4, 379)];
const RANKS: [(usize, usize, usize); 4] = [(2, 2, 3), (3, 2, 16), (4, 2, 131), (5, 3, 1496)];
const ENUM_CLOSURE_BOUND: usize = 5;

fn lookup(table: &[(usize, usize)], n: usize) -> Option<usize> {
    table.iter().find(|(k, _)| *k == n).map(|(_, v)| *v)
}

fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 1..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    *row.last().unwrap()
}

fn parse<T: std::str::FromStr>(what: &str, s: &str) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| Failure::Input(format!("bad {what} {s:?}: {e}")))
}

fn expect_line(label: &str, got: usize, expected: Option<usize>) -> String {
    match expected {
        Some(e) if e == got => format!("{label}: {got} (expected {e}, ok)"),
        Some(e) => format!("{label}: {got} (expected {e}, MISMATCH)"),
        None => format!("{label}: {got}"),
    }
}

fn report_json(r: &RelationReport) -> Value {
    json!({
        "suite": r.suite,
        "n": r.n,
        "pass": r.all_pass(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "holds": c.holds,
            "diagnostic": c.diagnostic,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn report_text(r: &RelationReport) -> Vec<String> {
    let mut out = vec![format!(
        "{} (n={}): {}",
        r.suite,
        r.n,
        if r.all_pass() { "all pass" } else { "FAILURES" }
    )];
    for c in &r.checks {
        let tag = match (c.diagnostic, c.holds) {
            (false, true) => "pass",
            (false, false) => "FAIL",
            (true, true) => "diag holds",
            (true, false) => "diag fails",
        };
        let detail = c.detail.as_deref().map(|d| format!(" [{d}]")).unwrap_or_default();
        out.push(format!("  {tag:<10} {}{detail}", c.name));
    }
    out
}

fn enumerate(g: &Global, kind: EnumKind, list: bool) -> Outcome {
    let n = g.n;
    let closure_bound = |name: &str| {
        if n > ENUM_CLOSURE_BOUND {
            Err(Failure::Input(format!("{name} closure supports n <= {ENUM_CLOSURE_BOUND}")))
        } else {
            Ok(())
        }
    };
    let (items, expected, oracle): (Vec<String>, Option<usize>, &str) = match kind {
        EnumKind::Partitions => (
            enumerate_partitions(n)?.map(|p| p.to_string()).collect(),
            Some(bell(n)),
            "Bell recurrence",
        ),
        EnumKind::Party => (
            coprime_pairs(n)?.iter().map(|p| p.to_string()).collect(),
            lookup(&PARTY_SIZES, n),
            "published sizes 3, 16, 131, 1496",
        ),
        EnumKind::Tied => {
            let perms = enumerate_permutations(n)?.count();
            let items = enumerate_partitions(n)?
                .flat_map(|f| {
                    enumerate_permutations(n)
                        .expect("bounded")
                        .map(move |s| format!("[{f}][{s}]"))
                })
                .collect();
            (items, Some(bell(n) * perms), "Bell(n) * n!")
        }
        EnumKind::Tonal2 => {
            closure_bound("2-tonal")?;
            let c = closure(&tonal2_generators(n), 1 << 22)?;
            (c.iter().map(|d| d.to_string()).collect(), lookup(&TONAL2_SIZES, n), "closure values 4, 31, 379")
        }
        EnumKind::Brauer => {
            closure_bound("Brauer")?;
            let c = closure(&brauer_generators(n), 1 << 22)?;
            (c.iter().map(|d| d.to_string()).collect(), Some((1..=n).map(|k| 2 * k - 1).product()), "(2n-1)!!")
        }
    };
    let count = items.len();
    let pass = expected.is_none_or(|e| e == count);
    let name = format!("{kind:?}").to_lowercase();
    let mut body = json!({ "kind": name, "n": n, "count": count, "expected": expected, "oracle": oracle });
    let mut text = vec![expect_line(&format!("{name} n={n}"), count, expected)];
    if list {
        body["items"] = json!(items);
        text.extend(items);
    }
    Ok(Report::new(body, text, pass))
}

fn party(g: &Global, op: &PartyOp) -> Outcome {
    match op {
        PartyOp::Normalize { element } => {
            let x: PartyElement = parse("party element", element)?;
            Ok(Report::new(json!({ "input": element, "normal_form": x.to_string() }), vec![x.to_string()], true))
        }
        PartyOp::Mul { x, y } => {
            let x: PartyElement = parse("party element", x)?;
            let y: PartyElement = parse("party element", y)?;
            let z = x.multiply(&y)?;
            Ok(Report::new(
                json!({ "x": x.to_string(), "y": y.to_string(), "product": z.to_string() }),
                vec![z.to_string()],
                true,
            ))
        }
        PartyOp::Green { monoid, relation } => {
            let kind: MonoidKind = parse("monoid", monoid)?;
            let rel: GreenRelation = parse("relation", relation)?;
            let classes = green_classes(kind, g.n, rel)?;
            let expected = match (kind, rel) {
                (MonoidKind::Party, GreenRelation::J) => Some(partyhecke::IntegerPartition::all(g.n).len()),
                (MonoidKind::Party, GreenRelation::L | GreenRelation::R) => Some(bell(g.n)),
                (MonoidKind::Tied, GreenRelation::J) if g.n == 3 => Some(3),
                _ => None,
            };
            let pass = expected.is_none_or(|e| e == classes.len());
            let mut text = vec![expect_line(&format!("{rel:?}-classes of {monoid} n={}", g.n), classes.len(), expected)];
            text.extend(classes.iter().map(|c| format!("  {{{}}}", c.join(", "))));
            Ok(Report::new(
                json!({ "monoid": monoid, "relation": format!("{rel:?}"), "n": g.n, "count": classes.len(),
                        "expected": expected, "classes": classes }),
                text,
                pass,
            ))
        }
        PartyOp::Maxsub { partition, monoid } => {
            let e: SetPartition = parse("set partition", partition)?;
            let kind: MonoidKind = parse("monoid", monoid)?;
            let (elements, formula): (Vec<String>, u128) = match kind {
                MonoidKind::Party => (
                    maximal_subgroup_party(&e)?.iter().map(|x| x.to_string()).collect(),
                    party_subgroup_order_formula(&e),
                ),
                MonoidKind::Tied => (
                    maximal_subgroup_tied(&e)?.iter().map(|x| x.to_string()).collect(),
                    tied_subgroup_order_formula(&e),
                ),
            };
            let pass = elements.len() as u128 == formula;
            let text = vec![format!(
                "maximal subgroup at {e} in {monoid}: order {} (product formula {formula}{})",
                elements.len(),
                if pass { ", ok" } else { ", MISMATCH" }
            )];
            Ok(Report::new(
                json!({ "idempotent": e.to_string(), "monoid": monoid, "order": elements.len(),
                        "expected": formula.to_string(), "elements": elements }),
                text,
                pass,
            ))
        }
    }
}

fn algebra(g: &Global, op: &AlgebraOp) -> Outcome {
    let AlgebraOp::Mul { x, y, twist } = op;
    let kind: TwistKind = parse("twist", twist)?;
    let delta: Scalar = parse("delta", &g.delta)?;
    let t = Twisting::new(kind, delta)?;
    let product = match kind {
        TwistKind::Beta => {
            let x = TwistedElement::basis(parse::<PartyElement>("party element", x)?);
            let y = TwistedElement::basis(parse::<PartyElement>("party element", y)?);
            twisted_multiply(&x, &y, &t)?.to_string()
        }
        TwistKind::Alpha => {
            let x = TwistedElement::basis(parse::<Diagram>("diagram", x)?);
            let y = TwistedElement::basis(parse::<Diagram>("diagram", y)?);
            twisted_multiply(&x, &y, &t)?.to_string()
        }
    };
    Ok(Report::new(
        json!({ "twist": twist, "delta": g.delta, "x": x, "y": y, "product": product }),
        vec![product],
        true,
    ))
}

/// Either a generator word or an explicit sum of basis terms.
fn ph_element(ph: &PartyHecke<partyhecke::RationalFunctions>, text: &str) -> Result<AlgebraElement, Failure> {
    if text.contains('[') {
        Ok(ph.parse_element(text)?)
    } else {
        let w: GeneratorWord = parse("word", text)?;
        Ok(ph.word_to_element(&w)?)
    }
}

fn suites(name: &str) -> Result<Vec<Suite>, Failure> {
    if name.eq_ignore_ascii_case("all") {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![parse("suite", name)?])
    }
}

fn ph(g: &Global, op: &PhOp) -> Outcome {
    if !(1..=7).contains(&g.n) {
        return Err(Failure::Input(format!("n = {} is outside 1..=7", g.n)));
    }
    let alg = PartyHecke::symbolic(g.n);
    match op {
        PhOp::Word { word } => {
            let w: GeneratorWord = parse("word", word)?;
            let x = alg.word_to_element(&w)?;
            Ok(Report::new(json!({ "n": g.n, "word": w.to_string(), "element": x.to_string() }), vec![x.to_string()], true))
        }
        PhOp::Mul { x, y } => {
            let (a, b) = (ph_element(&alg, x)?, ph_element(&alg, y)?);
            let z = alg.multiply(&a, &b)?;
            Ok(Report::new(
                json!({ "n": g.n, "x": a.to_string(), "y": b.to_string(), "product": z.to_string() }),
                vec![z.to_string()],
                true,
            ))
        }
        PhOp::Verify => {
            let mut reports = Vec::new();
            for s in suites(&g.suite)? {
                reports.push(verify_suite(s, g.n)?);
            }
            let pass = reports.iter().all(|r| r.all_pass());
            Ok(Report::new(
                json!({ "n": g.n, "pass": pass, "suites": reports.iter().map(report_json).collect::<Vec<_>>() }),
                reports.iter().flat_map(report_text).collect(),
                pass,
            ))
        }
        PhOp::Dim => {
            let d = alg.dimension();
            let expected = lookup(&PARTY_SIZES, g.n);
            Ok(Report::new(
                json!({ "n": g.n, "dimension": d, "expected": expected, "oracle": "coprime pairs" }),
                vec![expect_line(&format!("dim P_{}(p,q)", g.n), d, expected)],
                expected.is_none_or(|e| e == d),
            ))
        }
    }
}

fn prime_points(seed: u64) -> Vec<Specialization<PrimeField>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DEFAULT_PRIMES
        .iter()
        .map(|&p| Specialization::random_prime(PrimeField::new(p).expect("prime"), &mut rng))
        .collect()
}

fn rep(g: &Global, op: &RepOp) -> Outcome {
    let dim = g.m.checked_pow(g.n as u32).map(|d| d * d);
    let long = dim.is_none_or(|d| d > 1 << 16);
    if long && !g.allow_long {
        return Err(Failure::Input(format!("n={} m={} needs --allow-long", g.n, g.m)));
    }
    match op {
        RepOp::Verify { convention } => {
            let conv = match convention {
                ConventionArg::Consistent => Convention::Consistent,
                ConventionArg::AsPrinted => Convention::AsPrinted,
            };
            let (r, over) = if dim.is_some_and(|d| d <= 1 << 12) {
                (verify_matrix_relations(&TensorSpace::symbolic(g.n, g.m, conv)?)?, "Q(a,q)".to_string())
            } else {
                let pt = prime_points(g.seed).swap_remove(0);
                let over = format!("F_{} at a={} q={}", pt.field.modulus(), pt.a, pt.q);
                (verify_matrix_relations(&TensorSpace::new(g.n, g.m, pt, conv)?)?, over)
            };
            let mut body = report_json(&r);
            body["m"] = json!(g.m);
            body["field"] = json!(over);
            let mut text = report_text(&r);
            text.insert(0, format!("tensor relations, n={} m={} over {over}", g.n, g.m));
            Ok(Report::new(body, text, r.all_pass()))
        }
        RepOp::Rank => {
            let mut ranks = Vec::new();
            for pt in prime_points(g.seed) {
                let space = TensorSpace::new(g.n, g.m, pt, Convention::Consistent)?;
                ranks.push(faithfulness_rank(&space)?);
            }
            let expected = RANKS.iter().find(|r| r.0 == g.n && r.1 == g.m).map(|r| r.2);
            let agree = ranks.windows(2).all(|w| w[0] == w[1]);
            let pass = agree && expected.is_none_or(|e| ranks[0] == e);
            Ok(Report::new(
                json!({ "n": g.n, "m": g.m, "ranks": ranks, "expected": expected, "agree": agree,
                        "oracle": "number of coprime pairs" }),
                vec![format!(
                    "{} at two points: {ranks:?}",
                    expect_line(&format!("rank n={} m={}", g.n, g.m), ranks[0], expected)
                )],
                pass,
            ))
        }
    }
}

fn quot(g: &Global, op: &QuotOp) -> Outcome {
    match op {
        QuotOp::Dim { ideal } => {
            let ideal: Ideal = parse("ideal", ideal)?;
            let r = quotient_dimension(ideal, g.n, g.seed, g.allow_long)?;
            let text = vec![
                expect_line(&format!("dim P_{}/{ideal}", g.n), r.quotient_dimension, r.expected),
                format!(
                    "  ambient {}, ideal {}, points agree: {}",
                    r.ambient_dimension, r.ideal_dimension, r.agree
                ),
            ];
            let pass = r.passes();
            Ok(Report::new(serde_json::to_value(&r).expect("serialisable"), text, pass))
        }
        QuotOp::Semisimple { at_one } => {
            let bound = if g.allow_long { 5 } else { 4 };
            if g.n > bound {
                return Err(Failure::Input(format!("semisimplicity supports n <= {bound}")));
            }
            let mut points = random_rational_points(g.seed, 2);
            if *at_one {
                let one = num_rational::BigRational::from_integer(1.into());
                points.insert(0, (one.clone(), one));
            }
            let mut reports = Vec::new();
            for (a, q) in points {
                reports.push(semisimplicity_certificate(g.n, a, q)?);
            }
            let pass = reports.iter().all(|r| r.semisimple_at_point);
            let text = reports
                .iter()
                .map(|r| {
                    format!(
                        "n={} at a={} q={}: Gram rank {}/{} ({}), {}",
                        r.n,
                        r.a,
                        r.q,
                        r.gram_rank,
                        r.dimension,
                        r.method,
                        if r.semisimple_at_point { "semisimple here" } else { "degenerate here" }
                    )
                })
                .collect();
            Ok(Report::new(json!({ "n": g.n, "pass": pass, "points": reports }), text, pass))
        }
    }
}

fn render(element: &str) -> Outcome {
    let d = if element.contains('[') {
        parse::<PartyElement>("party element", element)?.to_diagram()
    } else {
        parse::<Diagram>("diagram", element)?
    };
    let pic = d.render();
    Ok(Report::new(
        json!({ "diagram": d.to_string(), "render": pic }),
        pic.lines().map(str::to_string).collect(),
        true,
    ))
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Enumerate { kind, list } => enumerate(g, *kind, *list),
        Command::Party { op } => party(g, op),
        Command::Algebra { op } => algebra(g, op),
        Command::Ph { op } => ph(g, op),
        Command::Rep { op } => rep(g, op),
        Command::Quot { op } => quot(g, op),
        Command::Render { element } => render(element),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = match cli.global.output {
                Output::Json => {
                    let mut body = report.body;
                    body["schema"] = json!(1);
                    body["pass"] = json!(report.pass);
                    serde_json::to_string_pretty(&body).expect("serialisable") + "\n"
                }
                Output::Text => report.text.iter().map(|l| format!("{l}\n")).collect(),
            };
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
