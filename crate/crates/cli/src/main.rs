//! `polyrad`: enumerate 3-polytopes by edge count and check the radius
//! extremal claim.

mod selftest;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use polyrad::cache::{write_atomic, LevelCache};
use polyrad::extremal::{
    check_graph, classify_scenario, is_question1_counterexample, min_size_for_radius,
    path_triples, radius_pruning, recognize_prism, verify_theorem1, HypothesisReport, SearchOutcome,
};
use polyrad::generator::{Enumerator, Filter, FilterSet, MIN_SIZE};
use polyrad::invariants::{bfs_layers, diameter, radius_and_center};
use polyrad::io::report::{GraphPayload, GraphSummary, Record, ReportDocument};
use polyrad::io::{graph6, planar_code};
use polyrad::structure::{embed, vertex_connectivity_at_least};
use polyrad::{prism, Graph};

/// Largest edge count enumerated without `--allow-long`.
const SHORT_CAP: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "polyrad", version, about = "Polyhedral graph enumeration and radius extremal checks")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Skip the on-disk level cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(name = "planar_code")]
    PlanarCode,
    #[value(name = "graph6")]
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate 3-polytopes level by level and print counts per size.
    Gen {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "planar_code")]
        format: Format,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        cubic_only: bool,
        #[arg(long)]
        allow_long: bool,
    },
    /// Find the smallest 3-polytopes of a given radius.
    RadiusSearch {
        #[arg(long)]
        radius: usize,
        /// Largest edge count to enumerate; defaults to the prism size 6(r-1).
        #[arg(long)]
        cap: Option<usize>,
        /// Permit caps above 20 edges. Long runs also prune by face count.
        #[arg(long)]
        allow_long: bool,
        #[arg(long)]
        report: PathBuf,
    },
    /// Summarise the graphs in a planar_code or graph6 file.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        hypotheses: bool,
        #[arg(long)]
        scenario: bool,
        #[arg(long)]
        report: PathBuf,
    },
    /// Write the 2(r-1)-gonal prism in planar_code.
    Prism {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Cross-check the fast algorithms against brute-force oracles.
    Selftest,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let level = if cli.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot size the worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn enumerator(cli: &Cli, filters: FilterSet) -> Enumerator {
    let e = Enumerator::new(filters);
    if cli.no_cache {
        e
    } else {
        e.with_cache(LevelCache::from_env())
    }
}

fn run(cli: &Cli) -> anyhow::Result<Verdict> {
    match &cli.command {
        Command::Gen {
            max_size,
            out,
            format,
            max_order,
            cubic_only,
            allow_long,
        } => gen(cli, *max_size, out.as_deref(), *format, *max_order, *cubic_only, *allow_long),
        Command::RadiusSearch {
            radius,
            cap,
            allow_long,
            report,
        } => radius_search(cli, *radius, *cap, *allow_long, report),
        Command::Check {
            input,
            hypotheses,
            scenario,
            report,
        } => check(input, *hypotheses, *scenario, report),
        Command::Prism { r, out } => {
            let p = prism(*r)?;
            let bytes = planar_code::encode([&p])?;
            write_atomic(out, &bytes)?;
            println!("prism r={r}: order {} size {}", p.order(), p.size());
            Ok(Verdict::Ok)
        }
        Command::Selftest => Ok(if selftest::run() { Verdict::Ok } else { Verdict::Failed }),
    }
}

fn gen(
    cli: &Cli,
    max_size: usize,
    out: Option<&Path>,
    format: Format,
    max_order: Option<usize>,
    cubic_only: bool,
    allow_long: bool,
) -> anyhow::Result<Verdict> {
    if max_size < MIN_SIZE {
        bail!("--max-size must be at least {MIN_SIZE}");
    }
    if max_size > SHORT_CAP && !allow_long {
        bail!("--max-size above {SHORT_CAP} needs --allow-long");
    }
    let mut filters = Vec::new();
    if let Some(n) = max_order {
        filters.push(Filter::MaxOrder(n));
    }
    if cubic_only {
        filters.push(Filter::CubicOnly);
    }
    let filters = FilterSet::new(filters);
    let e = enumerator(cli, filters.clone());
    let mut payload = Vec::new();
    let mut stdout = io::stdout().lock();
    for level in e.levels(max_size)? {
        let level = level?;
        let emitted: Vec<_> = level.emitted(&filters).collect();
        writeln!(stdout, "{} {}", level.size(), emitted.len())?;
        if out.is_some() {
            match format {
                Format::PlanarCode => {
                    for eg in &emitted {
                        planar_code::encode_record(eg, &mut payload)?;
                    }
                }
                Format::Graph6 => {
                    graph6::write_graph6(emitted.iter().map(|eg| eg.graph()), &mut payload)?;
                }
            }
        }
    }
    if let Some(path) = out {
        if format == Format::PlanarCode {
            payload.splice(0..0, planar_code::HEADER.iter().copied());
        }
        write_atomic(path, &payload)?;
    }
    Ok(Verdict::Ok)
}

fn now() -> Option<u64> {
    SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
}

fn radius_search(cli: &Cli, r: usize, cap: Option<usize>, allow_long: bool, report: &Path) -> anyhow::Result<Verdict> {
    if r < 3 {
        bail!("--radius must be at least 3");
    }
    let cap = cap.unwrap_or(6 * (r - 1));
    if cap > SHORT_CAP && !allow_long {
        bail!("a cap of {cap} edges needs --allow-long (default limit {SHORT_CAP})");
    }
    let filters = if allow_long {
        radius_pruning(r, cap)
    } else {
        FilterSet::none()
    };
    let started = Instant::now();
    let search = min_size_for_radius(&enumerator(cli, filters.clone()), r, cap)?;
    log::info!("search finished in {:.1}s", started.elapsed().as_secs_f64());

    let mut params = BTreeMap::new();
    params.insert("radius".to_string(), r.to_string());
    params.insert("cap".to_string(), cap.to_string());
    params.insert("filters".to_string(), filters.key());
    let mut doc = ReportDocument::new("radius-search", params);
    let max_seen = search.levels.iter().map(|l| l.max_radius).max().unwrap_or(0);
    let violations: usize = search.levels.iter().map(|l| l.bound_violations).sum();
    let mut verdict = Verdict::Ok;
    match &search.outcome {
        SearchOutcome::Found(record) => {
            let theorem = verify_theorem1(record)?;
            println!(
                "radius {r}: minimum size {}, {} witness(es), unique={}, prism_match={}",
                record.min_size,
                record.witnesses.len(),
                record.unique,
                record.prism_match
            );
            if !record.unique || !record.prism_match || !theorem.passes() {
                eprintln!("radius {r}: smallest polytope is not the unique prism");
                verdict = Verdict::Failed;
            }
            for (i, w) in record.witnesses.iter().enumerate() {
                doc.graphs.push(GraphPayload {
                    name: format!("witness-{i}"),
                    format: "planar_code".into(),
                    data: w.to_hex(),
                });
            }
            doc.records.push(Record::Extremal(record.clone()));
            doc.records.push(Record::Theorem1(theorem));
        }
        SearchOutcome::Exhausted { r, cap } => {
            println!("radius {r}: no polytope with at most {cap} edges");
            // The prism itself has 6(r-1) edges, so exhausting that far is a
            // contradiction.
            if *cap >= 6 * (r - 1) {
                eprintln!("radius {r}: prism size reached without a witness");
                verdict = Verdict::Failed;
            }
            doc.records.push(Record::Exhausted { r: *r, cap: *cap });
        }
    }
    doc.records.push(Record::Levels {
        levels: search.levels.clone(),
    });
    doc.records.push(Record::Observation {
        name: "radius_bound".into(),
        holds: violations == 0,
        detail: format!("r <= p/4 + 3 on every enumerated polytope; {violations} exceptions, largest radius {max_seen}"),
    });
    doc.seal(now());
    write_atomic(report, doc.to_text().as_bytes())?;
    Ok(verdict)
}

/// Reads planar_code (header optional) or graph6 lines.
fn read_graphs(path: &Path) -> anyhow::Result<Vec<Graph>> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if bytes.starts_with(planar_code::HEADER) {
        return Ok(planar_code::decode(&bytes)?.into_iter().map(|eg| eg.into_graph()).collect());
    }
    match planar_code::decode(&bytes) {
        Ok(graphs) => Ok(graphs.into_iter().map(|eg| eg.into_graph()).collect()),
        Err(pc) => graph6::read_graph6(io::BufReader::new(&bytes[..]))
            .with_context(|| format!("{} is neither planar_code ({pc}) nor graph6", path.display())),
    }
}

fn is_polyhedral(g: &Graph) -> bool {
    g.order() >= 4 && vertex_connectivity_at_least(g, 3).unwrap_or(false) && embed(g).is_some()
}

fn check(input: &Path, hypotheses: bool, scenario: bool, report: &Path) -> anyhow::Result<Verdict> {
    let graphs = read_graphs(input)?;
    let mut params = BTreeMap::new();
    params.insert("input".to_string(), input.display().to_string());
    params.insert("hypotheses".to_string(), hypotheses.to_string());
    params.insert("scenario".to_string(), scenario.to_string());
    let mut doc = ReportDocument::new("check", params);
    let mut failed = false;
    for (index, g) in graphs.iter().enumerate() {
        let (radius, center) = radius_and_center(g).with_context(|| format!("graph {index}"))?;
        let polyhedral = is_polyhedral(g);
        let counterexample = polyhedral && is_question1_counterexample(g)?;
        doc.records.push(Record::Graph(GraphSummary {
            index,
            order: g.order(),
            size: g.size(),
            radius,
            diameter: diameter(g)?,
            polyhedral,
            prism: recognize_prism(g),
            question1_counterexample: counterexample,
        }));
        if counterexample {
            eprintln!("graph {index}: radius {radius} with {} edges and not a prism", g.size());
            failed = true;
        }
        if polyhedral && check_graph(g)?.iter().any(|c| c.is_violation()) {
            eprintln!("graph {index}: layer conditions hold but the prism conclusion fails");
            failed = true;
        }
        for &root in &center {
            let layers = bfs_layers(g, root)?;
            let hyp = HypothesisReport::from_layer_sizes(root, radius, layers.layer_sizes());
            let holds = hyp.all_hold();
            if hypotheses {
                doc.records.push(Record::Hypothesis {
                    graph: index,
                    report: hyp,
                });
            }
            if scenario && holds && polyhedral {
                let sink = layers.layer(layers.ecc())[0];
                for triple in path_triples(g, root, sink)? {
                    if triple.is_layer_aligned(&layers) {
                        doc.records.push(Record::Scenario {
                            graph: index,
                            root,
                            scenario: classify_scenario(g, &layers, &triple)?,
                        });
                    }
                }
            }
        }
    }
    println!("checked {} graph(s)", graphs.len());
    doc.seal(now());
    write_atomic(report, doc.to_text().as_bytes())?;
    Ok(if failed { Verdict::Failed } else { Verdict::Ok })
}
