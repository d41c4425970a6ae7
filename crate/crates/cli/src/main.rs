use std::fmt::Write as _;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use barlens::bars::{self, BarDecomposition};
use barlens::degrees::{self, DegreeContext};
use barlens::partitions::Partition;
use barlens::verify::{self, VerifyConfig};
use barlens::{render, Abacus, BarPartition, Degree, IntMultiset, Modulus};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Bar lengths, cores, quotients and spin degrees of bar partitions.
#[derive(Parser)]
#[command(name = "barlens", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a diagram of a partition.
    Show {
        /// Comma-separated parts, or `-` for the empty partition.
        partition: Partition,
        #[arg(long, value_enum, default_value_t = Diagram::Shifted)]
        diagram: Diagram,
        #[arg(long, value_parser = parse_modulus, default_value = "3")]
        d: Modulus,
        /// Use the doubled partition D(λ) for young, abacus and residues.
        #[arg(long)]
        double: bool,
    },
    /// Print the d̄-core, d̄-quotient, quotient partition and runner counts.
    CoreQuotient {
        partition: BarPartition,
        #[arg(long, value_parser = parse_modulus)]
        d: Modulus,
        #[arg(long)]
        json: bool,
    },
    /// Check the bar-length decomposition through the core and quotient.
    Decompose {
        partition: BarPartition,
        #[arg(long, value_parser = parse_modulus)]
        d: Modulus,
        #[arg(long)]
        json: bool,
    },
    /// Spin character degree by the bar formula.
    Degree {
        partition: BarPartition,
        #[arg(long, value_parser = parse_modulus)]
        d: Option<Modulus>,
        /// Also evaluate the relative formula through the d̄-core (needs --d).
        #[arg(long, requires = "d")]
        relative: bool,
    },
    /// Run every identity over all bar partitions up to a size.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_parser = parse_modulus, value_delimiter = ',', default_value = "3")]
        d: Vec<Modulus>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest size for the ordinary-partition hook checks (default: max-n).
        #[arg(long)]
        partitions_max_n: Option<usize>,
        /// Largest size for the degree square sums (default: max-n).
        #[arg(long)]
        square_sum_max_n: Option<usize>,
        /// Write the full report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Diagram {
    Young,
    Shifted,
    Doubled,
    Abacus,
    Residues,
}

fn parse_modulus(s: &str) -> Result<Modulus, String> {
    let d: usize = s.parse().map_err(|e| format!("{s:?}: {e}"))?;
    Modulus::new(d).map_err(|e| e.to_string())
}

fn color_enabled() -> Result<bool, String> {
    match std::env::var("BARLENS_COLOR").as_deref() {
        Err(_) | Ok("auto") => Ok(std::io::stdout().is_terminal()),
        Ok("never") => Ok(false),
        Ok("always") => Ok(true),
        Ok(other) => Err(format!(
            "BARLENS_COLOR must be auto, never or always, got {other:?}"
        )),
    }
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<barlens::Error> for Failure {
    fn from(e: barlens::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn as_bar(p: &Partition) -> Result<BarPartition, Failure> {
    BarPartition::new(p.parts().to_vec()).map_err(|e| Failure::Usage(e.to_string()))
}

fn show(p: &Partition, diagram: Diagram, d: Modulus, double: bool) -> Result<Output, Failure> {
    let color = color_enabled().map_err(Failure::Usage)?;
    let target = if double {
        as_bar(p)?.double()
    } else {
        p.clone()
    };
    let text = match diagram {
        Diagram::Young => render::young_hooks(&target),
        Diagram::Residues => render::residues(&target, d),
        Diagram::Abacus => render::abacus(&target, d, color),
        Diagram::Shifted => render::shifted_bars(&as_bar(p)?, color),
        Diagram::Doubled => render::doubled_hooks(&as_bar(p)?),
    };
    Ok(Output::pass(text))
}

#[derive(Serialize)]
struct BarsDoc {
    lambda: IntMultiset,
    core: IntMultiset,
    modified: IntMultiset,
    divisible: IntMultiset,
    quotient_divisible: IntMultiset,
}

#[derive(Serialize)]
struct DegreesDoc {
    direct: String,
    relative: String,
    core: String,
    context: DegreeContext,
    agree: bool,
}

#[derive(Serialize)]
struct Report {
    partition: BarPartition,
    d: Modulus,
    core: BarPartition,
    quotient: bars::BarQuotient,
    quotient_partition: BarPartition,
    x: barlens::RunnerCounts,
    beta_set: barlens::BetaSet,
    bars: BarsDoc,
    decomposition: BarDecomposition,
    degrees: DegreesDoc,
    verdict: bool,
}

fn report(lambda: &BarPartition, d: Modulus) -> Result<Report, Failure> {
    let dec = bars::decompose_bars(lambda, d)?;
    let rel = degrees::relative_degree_report::<Degree>(lambda, d)?;
    let core_degree = degrees::spin_degree::<Degree>(&dec.core)?;
    let beta_set = Abacus::minimal(&lambda.double(), d).positions().clone();
    let verdict = dec.checks.all_hold() && rel.agrees();
    Ok(Report {
        partition: lambda.clone(),
        d,
        core: dec.core.clone(),
        quotient: dec.quotient.clone(),
        quotient_partition: dec.quotient_partition.clone(),
        x: dec.runner_counts.clone(),
        beta_set,
        bars: BarsDoc {
            lambda: dec.bars.clone(),
            core: dec.core_bars.clone(),
            modified: dec.modified_bars.clone(),
            divisible: bars::bars_divisible_by_d(lambda, d),
            quotient_divisible: bars::bars_divisible_by_d(&dec.quotient_partition, d),
        },
        degrees: DegreesDoc {
            direct: rel.direct.to_string(),
            relative: rel.relative.to_string(),
            core: core_degree.to_string(),
            context: rel.context.clone(),
            agree: rel.agrees(),
        },
        decomposition: dec,
        verdict,
    })
}

fn json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn core_quotient(lambda: &BarPartition, d: Modulus, as_json: bool) -> Result<Output, Failure> {
    let r = report(lambda, d)?;
    if as_json {
        return Ok(Output { text: json(&r), ok: r.verdict });
    }
    let dec = &r.decomposition;
    let weight = dec.quotient.weight();
    let mut t = String::new();
    let _ = writeln!(t, "partition:          {:?}", lambda);
    let _ = writeln!(t, "d:                  {d}");
    let _ = writeln!(t, "D(λ):               {:?}", lambda.double());
    let _ = writeln!(t, "β-set:              {}", r.beta_set);
    let _ = writeln!(t, "x:                  ({})", r.x);
    let _ = writeln!(t, "D(λ) quotient:      {}", fmt_tuple(&abacus_quotient(lambda, d)));
    let _ = writeln!(t, "core:               {:?}", r.core);
    let _ = writeln!(t, "quotient:           {}", r.quotient);
    let _ = writeln!(t, "quotient partition: {:?}", r.quotient_partition);
    let _ = writeln!(t, "D(quotient part.):  {:?}", r.quotient_partition.double());
    let _ = writeln!(t, "divisible bars:     {}", r.bars.divisible);
    let _ = writeln!(t, "  of quotient part: {}", r.bars.quotient_divisible);
    let _ = writeln!(
        t,
        "weight:             {} = {} + {} = {} + {}*{}",
        lambda.size(),
        r.core.size(),
        r.quotient_partition.size(),
        r.core.size(),
        d,
        weight
    );
    Ok(Output::pass(t))
}

fn abacus_quotient(lambda: &BarPartition, d: Modulus) -> Vec<Partition> {
    barlens::abacus::d_quotient(&lambda.double(), d)
}

fn fmt_tuple(ps: &[Partition]) -> String {
    let inner: Vec<String> = ps.iter().map(|p| format!("{p:?}")).collect();
    format!("({})", inner.join(", "))
}

fn decompose(lambda: &BarPartition, d: Modulus, as_json: bool) -> Result<Output, Failure> {
    let r = report(lambda, d)?;
    let ok = r.decomposition.checks.all_hold();
    if as_json {
        return Ok(Output { text: json(&r), ok });
    }
    let dec = &r.decomposition;
    let c = &dec.checks;
    let mut t = String::new();
    let rows: [(&str, String); 13] = [
        ("partition", format!("{:?}", lambda)),
        ("d", d.to_string()),
        ("core", format!("{:?}", dec.core)),
        ("quotient partition", format!("{:?}", dec.quotient_partition)),
        ("x", format!("({})", dec.runner_counts)),
        ("B(λ)", dec.bars.to_string()),
        ("B(core)", dec.core_bars.to_string()),
        ("modified bars", dec.modified_bars.to_string()),
        ("P(λ)", dec.parts.to_string()),
        ("P(core)", dec.core_parts.to_string()),
        ("modified parts", dec.modified_parts.to_string()),
        ("overlap I", dec.overlap.to_string()),
        ("doubled overlap", dec.overlap_doubled.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(t, "{k:<20}{v}");
    }
    let _ = writeln!(t, "{:<20}{}", "B(core) + adjusted", dec.total);
    let _ = writeln!(t, "checks");
    let checks = [
        ("bar decomposition", c.decomposition),
        ("core bars contained", c.core_bars_contained),
        ("modified bars contained", c.modified_bars_contained),
        ("parts symmetric difference", c.parts_symmetric_difference),
        ("part count balance", c.part_count_balance),
        ("coincidence criterion", c.coincidence_criterion),
    ];
    for (k, v) in checks {
        let _ = writeln!(t, "  {k:<28}{}", if v { "pass" } else { "FAIL" });
    }
    let _ = writeln!(
        t,
        "B(λ) = B(core) ∪ modified bars: {}",
        yes(c.coincidence)
    );
    let _ = writeln!(t, "verdict: {}", if ok { "pass" } else { "FAIL" });
    Ok(Output { text: t, ok })
}

fn degree(lambda: &BarPartition, d: Option<Modulus>, relative: bool) -> Result<Output, Failure> {
    let direct = degrees::spin_degree::<Degree>(lambda)?;
    if !relative {
        return Ok(Output::pass(format!("{direct}\n")));
    }
    let d = d.ok_or_else(|| Failure::Usage("--relative needs --d".into()))?;
    let r = degrees::relative_degree_report::<Degree>(lambda, d)?;
    let ctx = &r.context;
    let mut t = String::new();
    let _ = writeln!(t, "bar formula:      {}", r.direct);
    let _ = writeln!(t, "relative formula: {}", r.relative);
    let _ = writeln!(
        t,
        "core degree:      {}",
        degrees::spin_degree::<Degree>(&bars::dbar_core(lambda, d)?)?
    );
    let _ = writeln!(t, "epsilon:          {}", ctx.epsilon);
    let _ = writeln!(t, "agree:            {}", yes(r.agrees()));
    if !r.agrees() {
        return Err(Failure::Failed(
            barlens::Error::MismatchWithBarFormula {
                direct: r.direct.to_string(),
                relative: r.relative.to_string(),
            }
            .to_string(),
        ));
    }
    Ok(Output::pass(t))
}

fn run_verify(config: VerifyConfig, out: Option<PathBuf>) -> Result<Output, Failure> {
    if config.max_n == 0 {
        return Err(Failure::Usage("--max-n must be at least 1".into()));
    }
    if config.moduli.is_empty() {
        return Err(Failure::Usage("--d needs at least one modulus".into()));
    }
    let report = verify::run(&config).map_err(|e| Failure::Failed(e.to_string()))?;
    if let Some(path) = out {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        std::fs::write(&path, s)
            .map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))?;
    }
    Ok(Output {
        text: report.summary(),
        ok: report.verdict,
    })
}

fn dispatch(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Show {
            partition,
            diagram,
            d,
            double,
        } => show(&partition, diagram, d, double),
        Command::CoreQuotient { partition, d, json } => core_quotient(&partition, d, json),
        Command::Decompose { partition, d, json } => decompose(&partition, d, json),
        Command::Degree {
            partition,
            d,
            relative,
        } => degree(&partition, d, relative),
        Command::Verify {
            max_n,
            d,
            jobs,
            partitions_max_n,
            square_sum_max_n,
            json,
        } => {
            let mut config = VerifyConfig::new(max_n, d);
            config.jobs = jobs;
            config.partitions_max_n = partitions_max_n.unwrap_or(max_n);
            config.square_sum_max_n = square_sum_max_n.unwrap_or(max_n);
            run_verify(config, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
