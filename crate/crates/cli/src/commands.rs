use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use hypercenter::bfs::bfs_distances;
use hypercenter::hyperbolicity::{
    delta_four_point_exact, delta_four_point_sampled, delta_insize_exact, HalfInt, HyperbolicityReport,
    DEFAULT_EXACT_CAP, DEFAULT_INSIZE_CAP,
};
use hypercenter::io::{load_edge_list, Label, LoadedGraph};
use hypercenter::tree::{layering_partition, tree_distance};
use hypercenter::{evaluate_radius, Algo, CenterSolution, Graph, SolveOptions, Vertex};
use log::{info, warn};
use serde::Serialize;

use crate::failure::Failure;
use crate::{CertifyArgs, Format, GraphArgs, HyperbolicityArgs, SolveArgs, TreeApproxArgs};

const DEFAULT_SAMPLES: u64 = 100_000;

fn load(input: &GraphArgs) -> Result<LoadedGraph, Failure> {
    let file = File::open(&input.graph).map_err(|e| Failure::Input(format!("{}: {e}", input.graph.display())))?;
    let loaded = load_edge_list(BufReader::new(file), input.largest_component)?;
    info!(
        "loaded {}: n = {}, m = {}, {} duplicate edge(s), {} vertices dropped",
        input.graph.display(),
        loaded.graph.n(),
        loaded.graph.m(),
        loaded.duplicates,
        loaded.dropped_vertices
    );
    Ok(loaded)
}

fn resolve(index: &HashMap<String, Vertex>, label: Option<&str>) -> Result<Vertex, Failure> {
    match label {
        None => Ok(0),
        Some(l) => index
            .get(l)
            .copied()
            .ok_or_else(|| Failure::Input(format!("unknown vertex label {l:?}"))),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Hyperbolicity for the round cap: the flag, else the exact four-point value
/// when affordable, else a sampled lower estimate.
fn delta_for_cap(g: &Graph, flag: Option<HalfInt>, seed: u64, samples: u64) -> Result<HalfInt, Failure> {
    if let Some(d) = flag {
        return Ok(d);
    }
    if g.n() <= DEFAULT_EXACT_CAP {
        return Ok(delta_four_point_exact(g, DEFAULT_EXACT_CAP)?.delta_four_point);
    }
    let r = delta_four_point_sampled(g, samples, seed)?;
    warn!(
        "delta {} is a sampled lower estimate; the round cap derived from it is diagnostic only",
        r.delta_four_point
    );
    Ok(r.delta_four_point)
}

#[derive(Serialize)]
struct SolveRow<'a> {
    p: usize,
    algo: Algo,
    centers: Vec<&'a Label>,
    radius: u32,
    witness: &'a Label,
    kappa: u32,
    lower_bound: u32,
    rounds: u32,
    bfs_total: u64,
    phi_history: &'a [u64],
}

pub fn solve(a: &SolveArgs) -> Result<(), Failure> {
    let loaded = load(&a.input)?;
    let g = &loaded.graph;
    let (lo, hi) = a.p;
    if hi > g.n() {
        return Err(Failure::Usage(format!("p = {hi} exceeds the vertex count {}", g.n())));
    }
    if a.centers_out.is_some() && lo != hi {
        return Err(Failure::Usage("--centers-out needs a single p".into()));
    }
    let index = loaded.label_index();
    let algo: Algo = a.algo.into();
    let uses_packing = algo == Algo::General || (algo == Algo::Auto && hi >= 3);
    let delta = if uses_packing {
        Some(delta_for_cap(g, a.delta, a.seed, a.samples)?)
    } else {
        a.delta
    };
    let opts = SolveOptions {
        delta,
        start: resolve(&index, a.start.as_deref())?,
        root: resolve(&index, a.root.as_deref())?,
        ..Default::default()
    };

    if let Some(path) = &a.labels_out {
        let mut w = create(path)?;
        loaded.write_label_csv(&mut w)?;
        w.flush()?;
    }

    let mut results: Vec<(CenterSolution, u128)> = Vec::new();
    for p in lo..=hi {
        let t = Instant::now();
        let s = hypercenter::solve(g, p, algo, &opts)?;
        let millis = if a.no_timing { 0 } else { t.elapsed().as_millis() };
        info!(
            "p = {p}: radius {} (lower bound {}) in {millis} ms",
            s.radius, s.lower_bound
        );
        results.push((s, millis));
    }

    if let Some(path) = &a.centers_out {
        let mut w = create(path)?;
        for &c in &results[0].0.centers {
            writeln!(w, "{}", loaded.label(c))?;
        }
        w.flush()?;
    }

    match a.format {
        Format::Json => {
            let rows: Vec<SolveRow> = results
                .iter()
                .map(|(s, _)| SolveRow {
                    p: s.p,
                    algo: s.algo,
                    centers: s.centers.iter().map(|&c| loaded.label(c)).collect(),
                    radius: s.radius,
                    witness: loaded.label(s.witness),
                    kappa: s.kappa,
                    lower_bound: s.lower_bound,
                    rounds: s.rounds,
                    bfs_total: s.bfs_total,
                    phi_history: &s.phi_history,
                })
                .collect();
            write_json(&rows)
        }
        Format::Csv => {
            let mut out = io::stdout().lock();
            writeln!(out, "p,algo,radius,lower_bound,kappa,rounds,bfs_total,millis")?;
            for (s, millis) in &results {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    s.p, s.algo, s.radius, s.lower_bound, s.kappa, s.rounds, s.bfs_total, millis
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct HyperbolicityOut<'a> {
    n: usize,
    m: usize,
    delta_four_point: HalfInt,
    exact: bool,
    samples_used: u64,
    witness_quadruple: Vec<&'a Label>,
    lambda_n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_insize: Option<HalfInt>,
}

pub fn hyperbolicity(a: &HyperbolicityArgs) -> Result<(), Failure> {
    let loaded = load(&a.input)?;
    let g = &loaded.graph;
    let exact = a.exact || (a.samples.is_none() && g.n() <= a.max_n);
    let report: HyperbolicityReport = if exact {
        delta_four_point_exact(g, a.max_n)?
    } else {
        delta_four_point_sampled(g, a.samples.unwrap_or(DEFAULT_SAMPLES), a.seed)?
    };
    let delta_insize = if g.n() <= DEFAULT_INSIZE_CAP {
        match delta_insize_exact(g, DEFAULT_INSIZE_CAP) {
            Ok(d) => Some(d),
            Err(e) => {
                warn!("thin-triangle hyperbolicity skipped: {e}");
                None
            }
        }
    } else {
        None
    };
    write_json(&HyperbolicityOut {
        n: g.n(),
        m: g.m(),
        delta_four_point: report.delta_four_point,
        exact: report.exact,
        samples_used: report.samples_used,
        witness_quadruple: report.witness_quadruple.iter().map(|&v| loaded.label(v)).collect(),
        lambda_n: report.lambda_n,
        delta_insize,
    })
}

#[derive(Serialize)]
struct ErrorBucket {
    error: u32,
    pairs: u64,
}

#[derive(Serialize)]
struct TreeApproxOut<'a> {
    n: usize,
    root: &'a Label,
    clusters: usize,
    max_depth: u32,
    sources: usize,
    max_error: u32,
    histogram: Vec<ErrorBucket>,
}

pub fn tree_approx(a: &TreeApproxArgs) -> Result<(), Failure> {
    let loaded = load(&a.input)?;
    let g = &loaded.graph;
    let n = g.n();
    let root = resolve(&loaded.label_index(), a.root.as_deref())?;
    let t = layering_partition(g, root)?;

    if let Some(path) = &a.parents {
        let mut w = create(path)?;
        writeln!(w, "cluster,parent,depth,size,representative")?;
        for c in 0..t.cluster_count() {
            let parent = t.cluster_parent(c).map(|p| p.to_string()).unwrap_or_default();
            writeln!(
                w,
                "{c},{parent},{},{},{}",
                t.cluster_depth(c),
                t.members(c).len(),
                loaded.label(t.representative(c))
            )?;
        }
        w.flush()?;
    }

    // every unordered pair once, or ordered pairs from evenly spaced sources
    let sources: Vec<Vertex> = match a.sources {
        Some(k) if (k as usize) < n => (0..k as usize).map(|i| i * n / k as usize).collect(),
        _ => (0..n).collect(),
    };
    let all = sources.len() == n;
    let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
    for &s in &sources {
        let d = bfs_distances(g, s);
        let from = if all { s + 1 } else { 0 };
        for (v, &dv) in d.iter().enumerate().skip(from) {
            if v != s {
                *histogram.entry(tree_distance(&t, s, v).abs_diff(dv)).or_default() += 1;
            }
        }
    }
    write_json(&TreeApproxOut {
        n,
        root: loaded.label(root),
        clusters: t.cluster_count(),
        max_depth: t.tree().max_depth(),
        sources: sources.len(),
        max_error: histogram.keys().next_back().copied().unwrap_or(0),
        histogram: histogram
            .into_iter()
            .map(|(error, pairs)| ErrorBucket { error, pairs })
            .collect(),
    })
}

#[derive(Serialize)]
struct Comparison {
    p: usize,
    radius: u32,
    lower_bound: u32,
}

#[derive(Serialize)]
struct CertifyOut<'a> {
    centers: Vec<&'a Label>,
    radius: u32,
    witness: &'a Label,
    #[serde(skip_serializing_if = "Option::is_none")]
    solve: Option<Comparison>,
}

pub fn certify(a: &CertifyArgs) -> Result<(), Failure> {
    let loaded = load(&a.input)?;
    let g = &loaded.graph;
    let index = loaded.label_index();
    let file = File::open(&a.centers).map_err(|e| Failure::Input(format!("{}: {e}", a.centers.display())))?;
    let mut centers = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        let label = line.trim();
        if label.is_empty() || label.starts_with('#') {
            continue;
        }
        centers.push(resolve(&index, Some(label))?);
    }
    centers.sort_unstable();
    centers.dedup();
    if centers.is_empty() {
        return Err(Failure::Input(format!("{}: no centers listed", a.centers.display())));
    }
    let (radius, witness) = evaluate_radius(g, &centers);
    let solve = match a.compare_p {
        Some(p) => {
            let s = hypercenter::solve(g, p, Algo::Auto, &SolveOptions::default())?;
            Some(Comparison {
                p,
                radius: s.radius,
                lower_bound: s.lower_bound,
            })
        }
        None => None,
    };
    write_json(&CertifyOut {
        centers: centers.iter().map(|&c| loaded.label(c)).collect(),
        radius,
        witness: loaded.label(witness),
        solve,
    })
}
