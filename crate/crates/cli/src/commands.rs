use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::ValueEnum;
use serde::Serialize;
use szeged_core::generators::{benzenoid, coronoid, phenylene_from_squeeze, phenylene_star, HexCellSet};
use szeged_core::index::{ti_cut, ti_cut_tree, ti_direct, ti_tree, IndexDescriptor, WeightMode};
use szeged_core::quotient::quotient_by_group;
use szeged_core::rational::{to_decimal_string, to_exact_string};
use szeged_core::theta::{theta_star_classes, validate_c_partition, EdgePartition};
use szeged_core::{Rational, StrengthWeightedGraph};

use crate::document::{read_groups, GraphDocument};

pub const DECIMAL_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Cut,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    PhenyleneStar,
    Coronoid,
}

/// `theta` or the path of a partition file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionSource {
    Theta,
    File(PathBuf),
}

impl std::str::FromStr for PartitionSource {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "theta" => PartitionSource::Theta,
            path => PartitionSource::File(path.into()),
        })
    }
}

/// Text for stdout plus the process exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// The descriptor to evaluate with stored weights, and the mode that fills
/// in missing `we` values.
fn resolve_index(index: &str, weights: Option<WeightMode>) -> anyhow::Result<(IndexDescriptor, WeightMode)> {
    let idx = IndexDescriptor::parse(index, weights.unwrap_or(WeightMode::Unit))?;
    let mode = weights.unwrap_or(idx.weight_mode);
    Ok((idx.with_weight_mode(WeightMode::Stored), mode))
}

fn load_partition(g: &StrengthWeightedGraph, source: &PartitionSource) -> anyhow::Result<EdgePartition> {
    let tc = theta_star_classes(g)?;
    match source {
        PartitionSource::Theta => Ok(tc.to_partition()),
        PartitionSource::File(path) => {
            let groups = read_groups(path)?;
            Ok(validate_c_partition(&tc, &groups).with_context(|| format!("partition {}", path.display()))?)
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn millis(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

#[derive(Serialize)]
struct ValueRecord {
    index: String,
    method: &'static str,
    value: String,
    p: String,
    q: String,
}

pub fn compute(
    graph: &Path,
    index: &str,
    method: Method,
    partition: &PartitionSource,
    weights: Option<WeightMode>,
    format: Format,
) -> anyhow::Result<Output> {
    let (idx, mode) = resolve_index(index, weights)?;
    let g = GraphDocument::read(graph)?.to_graph(mode)?;
    let (value, elapsed) = timed(|| -> anyhow::Result<Rational> {
        Ok(match method {
            Method::Direct => ti_direct(&g, &idx)?,
            Method::Cut => ti_cut(&g, &load_partition(&g, partition)?, &idx)?,
            Method::Tree => ti_tree(&g, &idx)?,
        })
    });
    let value = value?;
    let method_name = method.to_possible_value().unwrap().get_name().to_string();
    eprintln!("time {} ms", millis(elapsed));
    let exact = to_exact_string(&value);
    let text = match format {
        Format::Text => format!(
            "index   {}\nweights {}\nmethod  {}\nvalue   {}\ndecimal {}\n",
            index,
            mode,
            method_name,
            exact,
            to_decimal_string(&value, DECIMAL_DIGITS)
        ),
        Format::Json => {
            let record = ValueRecord {
                index: index.to_string(),
                method: match method {
                    Method::Direct => "direct",
                    Method::Cut => "cut",
                    Method::Tree => "tree",
                },
                value: exact,
                p: value.numer().to_string(),
                q: value.denom().to_string(),
            };
            serde_json::to_string_pretty(&record)? + "\n"
        }
        Format::Csv => format!("index,method,p,q\n{index},{method_name},{},{}\n", value.numer(), value.denom()),
    };
    Ok(Output::ok(text))
}

pub fn classes(graph: &Path) -> anyhow::Result<Output> {
    let g = GraphDocument::read(graph)?.to_graph(WeightMode::Unit)?;
    let tc = theta_star_classes(&g)?;
    Ok(Output::ok(serde_json::to_string(tc.classes())? + "\n"))
}

pub fn quotient(
    graph: &Path,
    group: usize,
    partition: &PartitionSource,
    weights: Option<WeightMode>,
) -> anyhow::Result<Output> {
    let g = GraphDocument::read(graph)?.to_graph(weights.unwrap_or(WeightMode::Unit))?;
    let p = load_partition(&g, partition)?;
    if group >= p.len() {
        bail!("group {group} out of range: the partition has {} groups", p.len());
    }
    let q = quotient_by_group(&g, p.group(group))?;
    Ok(Output::ok(GraphDocument::from_graph(q.graph(), true).to_json() + "\n"))
}

pub enum GenerateKind {
    Benzenoid(PathBuf),
    Phenylene(PathBuf),
    PhenyleneStar(usize),
    Coronoid(usize),
    LinearChain(usize),
}

fn read_cells(path: &Path) -> anyhow::Result<HexCellSet> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let pairs: Vec<(i64, i64)> =
        serde_json::from_str(&text).with_context(|| format!("{} is not a list of [q, r] pairs", path.display()))?;
    Ok(HexCellSet::from_pairs(&pairs))
}

/// The generated graph and its natural c-partition.
pub fn generated(kind: &GenerateKind) -> anyhow::Result<(StrengthWeightedGraph, Vec<Vec<usize>>)> {
    let (g, groups) = match kind {
        GenerateKind::Benzenoid(cells) => {
            let (g, d) = benzenoid(&read_cells(cells)?)?;
            (g, d.non_empty_groups())
        }
        GenerateKind::Phenylene(cells) => {
            let (g, d) = phenylene_from_squeeze(&read_cells(cells)?)?;
            (g, d.non_empty_groups())
        }
        GenerateKind::PhenyleneStar(n) => {
            if *n == 0 {
                bail!("--n must be at least 1");
            }
            let (g, d) = phenylene_star(*n);
            (g, d.non_empty_groups())
        }
        GenerateKind::Coronoid(n) => {
            if *n == 0 {
                bail!("--n must be at least 1");
            }
            let g = coronoid(*n);
            let groups = theta_star_classes(&g)?.classes().to_vec();
            (g, groups)
        }
        GenerateKind::LinearChain(h) => {
            if *h == 0 {
                bail!("--h must be at least 1");
            }
            let (g, d) = benzenoid(&HexCellSet::linear_chain(*h))?;
            (g, d.non_empty_groups())
        }
    };
    Ok((g, groups))
}

pub fn generate(kind: &GenerateKind, out: Option<&Path>, partition_out: Option<&Path>) -> anyhow::Result<Output> {
    let (g, groups) = generated(kind)?;
    let json = GraphDocument::from_graph(&g, false).to_json() + "\n";
    if let Some(path) = partition_out {
        std::fs::write(path, serde_json::to_string(&groups)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    match out {
        Some(path) => {
            std::fs::write(path, json).with_context(|| format!("cannot write {}", path.display()))?;
            eprintln!("wrote {} vertices, {} edges to {}", g.vertex_count(), g.edge_count(), path.display());
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(json)),
    }
}

fn family_member(kind: FamilyKind, n: usize) -> anyhow::Result<(StrengthWeightedGraph, EdgePartition)> {
    Ok(match kind {
        FamilyKind::PhenyleneStar => {
            let (g, d) = phenylene_star(n);
            let p = d.validate(&theta_star_classes(&g)?)?;
            (g, p)
        }
        FamilyKind::Coronoid => {
            let g = coronoid(n);
            let p = theta_star_classes(&g)?.to_partition();
            (g, p)
        }
    })
}

fn family_index(index: &str, weights: Option<WeightMode>) -> anyhow::Result<IndexDescriptor> {
    let idx = IndexDescriptor::parse(index, weights.unwrap_or(WeightMode::Unit))?;
    Ok(match weights {
        Some(mode) => idx.with_weight_mode(mode),
        None => idx,
    })
}

fn check_range(from: usize, to: usize) -> anyhow::Result<()> {
    if from == 0 || from > to {
        bail!("need 1 <= --from <= --to, got {from}..{to}");
    }
    Ok(())
}

#[derive(Serialize)]
struct FamilyRow {
    n: usize,
    value: String,
    p: String,
    q: String,
}

pub fn family(
    kind: FamilyKind,
    index: &str,
    from: usize,
    to: usize,
    weights: Option<WeightMode>,
    format: Format,
) -> anyhow::Result<Output> {
    check_range(from, to)?;
    let idx = family_index(index, weights)?;
    let mut rows = Vec::new();
    for n in from..=to {
        let (g, p) = family_member(kind, n)?;
        let value = ti_cut(&g, &p, &idx)?;
        rows.push(FamilyRow {
            n,
            value: to_exact_string(&value),
            p: value.numer().to_string(),
            q: value.denom().to_string(),
        });
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => {
            let mut s = String::from("n,p,q\n");
            for row in &rows {
                writeln!(s, "{},{},{}", row.n, row.p, row.q)?;
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for row in &rows {
                let value: Rational = Rational::new(row.p.parse()?, row.q.parse()?);
                writeln!(s, "{:>3}  {}  {}", row.n, row.value, to_decimal_string(&value, DECIMAL_DIGITS))?;
            }
            s
        }
    };
    Ok(Output::ok(text))
}

pub fn verify(
    graph: &Path,
    index: &str,
    partition: &PartitionSource,
    weights: Option<WeightMode>,
) -> anyhow::Result<Output> {
    let (idx, mode) = resolve_index(index, weights)?;
    let g = GraphDocument::read(graph)?.to_graph(mode)?;
    let p = load_partition(&g, partition)?;
    let mut results = vec![("direct", ti_direct(&g, &idx)?), ("cut", ti_cut(&g, &p, &idx)?)];
    if g.is_tree() {
        results.push(("tree", ti_tree(&g, &idx)?));
    }
    let mut text = String::new();
    for (name, value) in &results {
        writeln!(text, "{name:<6} {}", to_exact_string(value))?;
    }
    let agree = results.iter().all(|(_, v)| *v == results[0].1);
    text.push_str(if agree { "agree\n" } else { "DISAGREE\n" });
    Ok(Output { text, code: if agree { 0 } else { 1 } })
}

pub fn bench(
    kind: FamilyKind,
    index: &str,
    from: usize,
    to: usize,
    weights: Option<WeightMode>,
) -> anyhow::Result<Output> {
    check_range(from, to)?;
    let idx = family_index(index, weights)?;
    let mut text = String::from("n,vertices,edges,direct_ms,cut_ms,cut_tree_ms\n");
    for n in from..=to {
        let (g, p) = family_member(kind, n)?;
        let (direct, t_direct) = timed(|| ti_direct(&g, &idx));
        let (cut, t_cut) = timed(|| ti_cut(&g, &p, &idx));
        let (direct, cut) = (direct?, cut?);
        if direct != cut {
            bail!("n = {n}: direct {direct} differs from cut {cut}");
        }
        let tree_ms = match timed(|| ti_cut_tree(&g, &p, &idx)) {
            (Ok(v), t) if v == direct => millis(t),
            (Ok(v), _) => bail!("n = {n}: direct {direct} differs from cut-tree {v}"),
            (Err(_), _) => "-".into(),
        };
        writeln!(text, "{n},{},{},{},{},{tree_ms}", g.vertex_count(), g.edge_count(), millis(t_direct), millis(t_cut))?;
    }
    Ok(Output::ok(text))
}
