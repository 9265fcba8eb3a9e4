//! The command-line pipeline as a library: one function per subcommand,
//! each reading its inputs, computing, and writing deterministic report
//! files into an output directory.
//!
//! JSON files carry a `header` object, CSV and text files a block of `# `
//! comment lines with the same fields: tool, version, command, config and
//! the corpus digest (SHA-256 over the canonical SGF of every parsed game).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::network::{build_network_par, extract_events, shuffle_baseline, GameEvents, GoNetwork, NetworkConfig};
use crate::plaquette::{ClassTable, Geometry};
use crate::sgf::{load_corpus, GameRecord};
use crate::spectral::{
    cheirank, full_spectrum, hits, lambda_c, localization_profile, pagerank, rank_correlation,
    top_entries, GoogleMatrix, RankingVector,
};
use crate::stats::{self, Label, RankedDistribution};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "GONET_OUT_DIR";

/// `$GONET_OUT_DIR`, or the current directory.
pub fn default_out_dir() -> PathBuf {
    std::env::var_os(OUT_DIR_ENV).map_or_else(|| PathBuf::from("."), PathBuf::from)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: Value,
    pub corpus_digest: Option<String>,
}

impl Header {
    pub fn new(command: &str, config: Value, corpus_digest: Option<String>) -> Header {
        Header {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            config,
            corpus_digest,
        }
    }

    fn comment_block(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# tool: {} {}", self.tool, self.version);
        let _ = writeln!(s, "# command: {}", self.command);
        let _ = writeln!(s, "# config: {}", self.config);
        let _ = writeln!(
            s,
            "# corpus_digest: {}",
            self.corpus_digest.as_deref().unwrap_or("none")
        );
        s
    }
}

/// Hex SHA-256 over the canonical SGF of every game, in order.
pub fn corpus_digest(games: &[GameRecord]) -> String {
    let mut h = Sha256::new();
    for g in games {
        h.update(g.to_sgf().as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes report files into one directory and remembers what it wrote.
#[derive(Debug)]
pub struct OutputDir {
    dir: PathBuf,
    written: Vec<PathBuf>,
}

impl OutputDir {
    pub fn create(dir: impl Into<PathBuf>) -> Result<OutputDir> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        Ok(OutputDir {
            dir,
            written: Vec::new(),
        })
    }

    pub fn path(&self) -> &Path {
        &self.dir
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }

    fn write(&mut self, name: &str, contents: &str) -> Result<PathBuf> {
        let path = self.dir.join(name);
        fs::write(&path, contents).map_err(io_err(&path))?;
        self.written.push(path.clone());
        Ok(path)
    }

    /// `body` must serialize to a JSON object; the header is added as the
    /// `header` key.
    pub fn json(&mut self, name: &str, header: &Header, body: impl Serialize) -> Result<PathBuf> {
        let mut value = serde_json::to_value(body)?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| Error::Contract("report body must be a JSON object".into()))?;
        obj.insert("header".into(), serde_json::to_value(header)?);
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        self.write(name, &text)
    }

    pub fn csv<R: AsRef<[String]>>(
        &mut self,
        name: &str,
        header: &Header,
        columns: &[&str],
        rows: impl IntoIterator<Item = R>,
    ) -> Result<PathBuf> {
        let mut text = header.comment_block();
        text.push_str(&columns.join(","));
        text.push('\n');
        for row in rows {
            let fields: Vec<String> = row.as_ref().iter().map(|f| csv_field(f)).collect();
            text.push_str(&fields.join(","));
            text.push('\n');
        }
        self.write(name, &text)
    }

    pub fn text(&mut self, name: &str, header: &Header, body: &str) -> Result<PathBuf> {
        let mut text = header.comment_block();
        text.push('\n');
        text.push_str(body);
        self.write(name, &text)
    }
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// A network file: the network's own JSON layout plus a `header` key.
pub fn read_network(path: &Path) -> Result<(Header, GoNetwork)> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let mut value: Value = serde_json::from_str(&text).map_err(|e| file_err(path, e.into()))?;
    let header = take_header(&mut value, path)?;
    let net = serde_json::from_value(value).map_err(|e| file_err(path, e.into()))?;
    Ok((header, net))
}

#[derive(Serialize, Deserialize)]
struct EventsBody {
    games: Vec<GameEvents>,
}

/// An events file: `{header, games: [{game_id, events}, ...]}`.
pub fn read_events(path: &Path) -> Result<(Header, Vec<GameEvents>)> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let mut value: Value = serde_json::from_str(&text).map_err(|e| file_err(path, e.into()))?;
    let header = take_header(&mut value, path)?;
    let body: EventsBody = serde_json::from_value(value).map_err(|e| file_err(path, e.into()))?;
    Ok((header, body.games))
}

fn file_err(path: &Path, e: Error) -> Error {
    Error::File {
        path: path.to_path_buf(),
        source: Box::new(e),
    }
}

fn take_header(value: &mut Value, path: &Path) -> Result<Header> {
    let raw = value
        .as_object_mut()
        .and_then(|o| o.remove("header"))
        .ok_or_else(|| file_err(path, Error::Contract("missing header".into())))?;
    serde_json::from_value(raw).map_err(|e| file_err(path, e.into()))
}

/// Parsed and replayed corpus.
#[derive(Debug, Clone)]
pub struct Ingested {
    pub digest: String,
    pub games: Vec<GameEvents>,
    pub warnings: Vec<String>,
}

/// Load SGF inputs and replay every game. Outside strict mode, files that
/// fail to parse and games that fail to replay are skipped with a warning.
pub fn ingest<P: AsRef<Path>>(inputs: &[P], strict: bool) -> Result<Ingested> {
    if inputs.is_empty() {
        return Err(Error::InvalidArgument("no input paths given".into()));
    }
    let corpus = load_corpus(inputs, strict)?;
    let table = ClassTable::global();
    let mut warnings = corpus.warnings;
    let mut games = Vec::with_capacity(corpus.games.len());
    let replayed: Vec<Result<GameEvents>> = {
        use rayon::prelude::*;
        corpus.games.par_iter().map(|g| extract_events(g, table)).collect()
    };
    for r in replayed {
        match r {
            Ok(g) => games.push(g),
            Err(e) if strict => return Err(e),
            Err(e) => warnings.push(format!("skipping game: {e}")),
        }
    }
    if games.is_empty() {
        return Err(Error::Empty("no playable games in the input".into()));
    }
    Ok(Ingested {
        digest: corpus_digest(&corpus.games),
        games,
        warnings,
    })
}

/// `enumerate-plaquettes`: writes `plaquettes.json` and returns the summary
/// line.
pub fn cmd_enumerate(out: &mut OutputDir, geometry: Option<Geometry>) -> Result<String> {
    let table = ClassTable::global();
    let header = Header::new("enumerate-plaquettes", json!({ "geometry": geometry }), None);
    let rows = table.census_json(geometry);
    let n_rows = rows.as_array().map_or(0, Vec::len);
    out.json(
        "plaquettes.json",
        &header,
        json!({ "summary": table.summary(), "rows": n_rows, "classes": rows }),
    )?;
    Ok(table.summary())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BuildOptions {
    pub inputs: Vec<PathBuf>,
    pub strict: bool,
    pub d: u32,
}

#[derive(Debug, Clone)]
pub struct BuildOutcome {
    pub network: GoNetwork,
    pub warnings: Vec<String>,
}

/// `build`: writes `net.json` (the network) and `events.json` (the
/// classified moves of every game, for the statistics that need order).
pub fn cmd_build(out: &mut OutputDir, opts: &BuildOptions) -> Result<BuildOutcome> {
    let config = NetworkConfig::new(opts.d)?;
    let ing = ingest(&opts.inputs, opts.strict)?;
    let net = build_network_par(&ing.games, ClassTable::global().len(), config);
    let header = Header::new("build", json!({ "d": opts.d, "strict": opts.strict }), Some(ing.digest));
    out.json("net.json", &header, &net)?;
    out.json("events.json", &header, EventsBody { games: ing.games })?;
    Ok(BuildOutcome {
        network: net,
        warnings: ing.warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatKind {
    Zipf,
    Seq,
    C1,
    C2,
    C3,
    Pd,
    Degrees,
    Cc,
    CcGames,
}

impl StatKind {
    pub fn name(self) -> &'static str {
        match self {
            StatKind::Zipf => "zipf",
            StatKind::Seq => "seq",
            StatKind::C1 => "c1",
            StatKind::C2 => "c2",
            StatKind::C3 => "c3",
            StatKind::Pd => "pd",
            StatKind::Degrees => "degrees",
            StatKind::Cc => "cc",
            StatKind::CcGames => "cc-games",
        }
    }

    fn needs_events(self) -> bool {
        !matches!(self, StatKind::Zipf | StatKind::Degrees | StatKind::Cc)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsOptions {
    pub which: StatKind,
    pub network: Option<PathBuf>,
    pub events: Option<PathBuf>,
    /// Sequence length (displacements for C3).
    pub k: usize,
    /// Linking distance; defaults to the network's.
    pub d: Option<u32>,
    /// Rank range for slope fits of ranked distributions.
    pub fit_min: usize,
    pub fit_max: usize,
}

impl Default for StatsOptions {
    fn default() -> Self {
        StatsOptions {
            which: StatKind::Zipf,
            network: None,
            events: None,
            k: 2,
            d: None,
            fit_min: 1,
            fit_max: 500,
        }
    }
}

/// Checkpoints for clustering against corpus size: 1, 2, 5, 10, 20, ...
/// up to and including `n`.
pub fn game_checkpoints(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut decade = 1;
    'outer: loop {
        for m in [1, 2, 5] {
            let c = m * decade;
            if c >= n {
                break 'outer;
            }
            out.push(c);
        }
        decade *= 10;
    }
    if n > 0 {
        out.push(n);
    }
    out
}

fn distribution_rows<L: Label>(dist: &RankedDistribution<L>) -> Vec<[String; 4]> {
    dist.rows()
        .map(|(r, l, c, i)| [r.to_string(), l, c.to_string(), i.to_string()])
        .collect()
}

/// `stats`: writes `stats_<which>.json` with fits and summaries plus the
/// CSV series. Statistics of the network itself read `net.json`; those of
/// move order read `events.json`. Returns the JSON body.
pub fn cmd_stats(out: &mut OutputDir, opts: &StatsOptions) -> Result<Value> {
    let which = opts.which;
    let (header_src, net, events) = if which.needs_events() {
        let path = opts
            .events
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument(format!("`{}` needs --events", which.name())))?;
        let (h, ev) = read_events(path)?;
        (h, None, Some(ev))
    } else {
        let path = opts
            .network
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument(format!("`{}` needs --net", which.name())))?;
        let (h, net) = read_network(path)?;
        (h, Some(net), None)
    };
    let d = match opts.d {
        Some(d) => d,
        None => header_src
            .config
            .get("d")
            .and_then(Value::as_u64)
            .map_or(NetworkConfig::default().d, |d| d as u32),
    };
    NetworkConfig::new(d)?;
    let header = Header::new(
        "stats",
        json!({
            "which": which,
            "k": opts.k,
            "d": d,
            "fit_min": opts.fit_min,
            "fit_max": opts.fit_max,
        }),
        header_src.corpus_digest,
    );
    let name = which.name();
    let csv_name = format!("stats_{name}.csv");

    fn ranked<L: Label>(
        out: &mut OutputDir,
        header: &Header,
        csv_name: &str,
        dist: &RankedDistribution<L>,
        opts: &StatsOptions,
    ) -> Result<Value> {
        out.csv(csv_name, header, &["rank", "label", "count", "integrated"], distribution_rows(dist))?;
        let fit = stats::fit_slope(&dist.integrated, opts.fit_min, opts.fit_max).ok();
        Ok(json!({ "distinct": dist.len(), "total": dist.total(), "fit": fit }))
    }

    let body = match which {
        StatKind::Zipf => {
            let net = net.expect("network loaded");
            let dist = stats::move_frequency(&net.vertex_counts)?;
            ranked(out, &header, &csv_name, &dist, opts)?
        }
        StatKind::Seq => {
            let dist = stats::sequence_frequency(events.as_deref().unwrap_or_default(), opts.k, d)?;
            ranked(out, &header, &csv_name, &dist, opts)?
        }
        StatKind::C1 => {
            let dist = stats::variant_c1(events.as_deref().unwrap_or_default(), opts.k)?;
            ranked(out, &header, &csv_name, &dist, opts)?
        }
        StatKind::C2 => {
            let dist = stats::variant_c2(events.as_deref().unwrap_or_default(), opts.k, d)?;
            ranked(out, &header, &csv_name, &dist, opts)?
        }
        StatKind::C3 => {
            let dist = stats::variant_c3(events.as_deref().unwrap_or_default(), opts.k, d)?;
            ranked(out, &header, &csv_name, &dist, opts)?
        }
        StatKind::Pd => {
            let hist = stats::distance_distribution(events.as_deref().unwrap_or_default())?;
            let rows: Vec<[String; 2]> = hist
                .probabilities
                .iter()
                .enumerate()
                .map(|(k, p)| [k.to_string(), p.to_string()])
                .collect();
            out.csv(&csv_name, &header, &["k", "P"], rows)?;
            json!({ "histogram": hist })
        }
        StatKind::Degrees => {
            let net = net.expect("network loaded");
            let deg = stats::degree_distributions(&net);
            let curve_rows = |c: &[stats::CurvePoint]| -> Vec<[String; 3]> {
                c.iter()
                    .map(|p| [p.k.to_string(), p.x.to_string(), p.fraction.to_string()])
                    .collect()
            };
            out.csv("stats_degrees_in.csv", &header, &["k", "x", "fraction"], curve_rows(&deg.in_curve))?;
            out.csv("stats_degrees_out.csv", &header, &["k", "x", "fraction"], curve_rows(&deg.out_curve))?;
            let per_vertex: Vec<[String; 5]> = (0..net.n_vertices())
                .map(|v| {
                    [
                        v.to_string(),
                        deg.in_degree[v].to_string(),
                        deg.out_degree[v].to_string(),
                        deg.weighted_in[v].to_string(),
                        deg.weighted_out[v].to_string(),
                    ]
                })
                .collect();
            out.csv(
                "stats_degrees_vertices.csv",
                &header,
                &["vertex", "in", "out", "weighted_in", "weighted_out"],
                per_vertex,
            )?;
            json!({
                "in_fit": stats::fit_curve(&deg.in_curve).ok(),
                "out_fit": stats::fit_curve(&deg.out_curve).ok(),
                "max_in": deg.in_degree.iter().max(),
                "max_out": deg.out_degree.iter().max(),
            })
        }
        StatKind::Cc => {
            let net = net.expect("network loaded");
            let cc = stats::clustering_coefficient(&net)?;
            let rows: Vec<[String; 2]> = cc
                .per_vertex
                .iter()
                .enumerate()
                .filter_map(|(v, c)| c.map(|c| [v.to_string(), c.to_string()]))
                .collect();
            out.csv(&csv_name, &header, &["vertex", "cc"], rows)?;
            json!({ "average": cc.average, "n_games": net.n_games })
        }
        StatKind::CcGames => {
            let games = events.as_deref().unwrap_or_default();
            let points = stats::cc_vs_games(
                games,
                ClassTable::global().len(),
                NetworkConfig::new(d)?,
                &game_checkpoints(games.len()),
            )?;
            let rows: Vec<[String; 2]> = points.iter().map(|(n, c)| [n.to_string(), c.to_string()]).collect();
            out.csv(&csv_name, &header, &["n_g", "cc"], rows)?;
            json!({ "final": points.last().map(|p| p.1) })
        }
    };
    out.json(&format!("stats_{name}.json"), &header, &body)?;
    Ok(body)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankAlgorithm {
    PageRank,
    CheiRank,
    Hits,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankOptions {
    pub network: PathBuf,
    pub alg: RankAlgorithm,
    pub alpha: f64,
    pub tol: f64,
    pub max_iter: usize,
    /// HITS on the unweighted adjacency.
    pub unweighted: bool,
}

impl RankOptions {
    pub fn new(network: impl Into<PathBuf>, alg: RankAlgorithm) -> RankOptions {
        RankOptions {
            network: network.into(),
            alg,
            alpha: 1.0,
            tol: 1e-12,
            max_iter: 100_000,
            unweighted: false,
        }
    }
}

#[derive(Serialize)]
struct RankBody<'a> {
    alpha: Option<f64>,
    vectors: Vec<&'a RankingVector>,
    kendall_tau: Option<f64>,
}

/// `rank`: writes `rank_<alg>.json`. PageRank and CheiRank are always
/// computed together so that `rank_kstar_k.csv` (the per-vertex rank
/// scatter) and Kendall's tau come with either. Returns the requested
/// vectors.
pub fn cmd_rank(out: &mut OutputDir, opts: &RankOptions) -> Result<Vec<RankingVector>> {
    let (src, net) = read_network(&opts.network)?;
    let header = Header::new(
        "rank",
        json!({
            "alg": opts.alg,
            "alpha": opts.alpha,
            "tol": opts.tol,
            "max_iter": opts.max_iter,
            "unweighted": opts.unweighted,
            "d": net.config.d,
        }),
        src.corpus_digest,
    );
    let name = match opts.alg {
        RankAlgorithm::PageRank => "pagerank",
        RankAlgorithm::CheiRank => "cheirank",
        RankAlgorithm::Hits => "hits",
    };
    let vectors = match opts.alg {
        RankAlgorithm::Hits => {
            let (hubs, auth) = hits(&net, !opts.unweighted, opts.tol, opts.max_iter)?;
            out.json(
                &format!("rank_{name}.json"),
                &header,
                RankBody {
                    alpha: None,
                    vectors: vec![&hubs, &auth],
                    kendall_tau: None,
                },
            )?;
            vec![hubs, auth]
        }
        alg => {
            let g = GoogleMatrix::build(&net, opts.alpha)?;
            let pr = pagerank(&g, opts.tol, opts.max_iter)?;
            let cr = cheirank(&net, opts.alpha, opts.tol, opts.max_iter)?;
            let corr = rank_correlation(&pr, &cr)?;
            let rows: Vec<[String; 3]> = corr
                .points
                .iter()
                .map(|p| [p.vertex.to_string(), p.k.to_string(), p.k_star.to_string()])
                .collect();
            out.csv("rank_kstar_k.csv", &header, &["vertex", "k", "k_star"], rows)?;
            let chosen = if alg == RankAlgorithm::PageRank { pr } else { cr };
            out.json(
                &format!("rank_{name}.json"),
                &header,
                RankBody {
                    alpha: Some(opts.alpha),
                    vectors: vec![&chosen],
                    kendall_tau: Some(corr.kendall_tau),
                },
            )?;
            vec![chosen]
        }
    };
    Ok(vectors)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumOptions {
    pub network: PathBuf,
    pub alpha: f64,
    /// Number of leading eigenvectors to report.
    pub top: usize,
    pub percentiles: Vec<f64>,
    /// Plaquette diagrams listed per eigenvector.
    pub diagrams: usize,
}

impl SpectrumOptions {
    pub fn new(network: impl Into<PathBuf>) -> SpectrumOptions {
        SpectrumOptions {
            network: network.into(),
            alpha: 1.0,
            top: 7,
            percentiles: vec![80.0, 90.0, 95.0, 99.0],
            diagrams: 10,
        }
    }
}

/// `spectrum`: writes `spectrum.json` (all eigenvalues as `[re, im]`, the
/// lambda_c table, the leading eigenvectors with their localization
/// profiles along the frequency order), `spectrum_eigenvalues.csv` and
/// `spectrum_diagrams.txt`. Returns the JSON body.
pub fn cmd_spectrum(out: &mut OutputDir, opts: &SpectrumOptions) -> Result<Value> {
    let (src, net) = read_network(&opts.network)?;
    let header = Header::new(
        "spectrum",
        json!({
            "alpha": opts.alpha,
            "top": opts.top,
            "percentiles": opts.percentiles,
            "diagrams": opts.diagrams,
            "d": net.config.d,
        }),
        src.corpus_digest,
    );
    let table = ClassTable::global();
    let g = GoogleMatrix::build(&net, opts.alpha)?;
    let report = full_spectrum(&g, opts.top)?;
    let lc = lambda_c(&report.eigenvalues, &opts.percentiles)?;
    let freq_order = net.frequency_order();

    let mut diagrams = String::new();
    let mut vectors = Vec::new();
    for (i, pair) in report.eigenvectors.iter().enumerate() {
        let profile = localization_profile(&pair.vector, &freq_order, freq_order.len());
        vectors.push(json!({
            "index": i + 1,
            "value": [pair.value.re, pair.value.im],
            "modulus": pair.value.norm(),
            "vector": pair.vector.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            "profile": profile,
        }));
        let _ = writeln!(
            diagrams,
            "eigenvector {} lambda = {} {:+}i (|lambda| = {})",
            i + 1,
            pair.value.re,
            pair.value.im,
            pair.value.norm()
        );
        for (r, e) in top_entries(&pair.vector, opts.diagrams, table).iter().enumerate() {
            let _ = writeln!(diagrams, "  #{} class {} weight {}", r + 1, e.class_id, e.weight);
            for line in e.diagram.lines() {
                let _ = writeln!(diagrams, "    {line}");
            }
        }
        diagrams.push('\n');
    }

    let rows: Vec<[String; 3]> = report
        .eigenvalues
        .iter()
        .map(|z| [z.re.to_string(), z.im.to_string(), z.norm().to_string()])
        .collect();
    out.csv("spectrum_eigenvalues.csv", &header, &["re", "im", "modulus"], rows)?;
    out.text("spectrum_diagrams.txt", &header, &diagrams)?;
    let body = json!({
        "n": g.n(),
        "alpha": opts.alpha,
        "trace": g.trace(),
        "eigenvalues": report.eigenvalues.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        "lambda_c": lc.iter().map(|(p, r)| json!({ "percent": p, "radius": r })).collect::<Vec<_>>(),
        "eigenvectors": vectors,
    });
    out.json("spectrum.json", &header, &body)?;
    Ok(body)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BaselineOptions {
    pub inputs: Vec<PathBuf>,
    pub strict: bool,
    pub d: u32,
    pub seed: u64,
}

/// `baseline`: builds the network of the corpus and of its per-game
/// shuffle, writes the shuffled network to `baseline_net.json` and a side
/// by side comparison to `baseline_report.json`. Returns the comparison.
pub fn cmd_baseline(out: &mut OutputDir, opts: &BaselineOptions) -> Result<Value> {
    let config = NetworkConfig::new(opts.d)?;
    let ing = ingest(&opts.inputs, opts.strict)?;
    let n = ClassTable::global().len();
    let original = build_network_par(&ing.games, n, config);
    let shuffled = build_network_par(&shuffle_baseline(&ing.games, opts.seed), n, config);
    let header = Header::new(
        "baseline",
        json!({ "d": opts.d, "strict": opts.strict, "shuffle_seed": opts.seed }),
        Some(ing.digest),
    );
    let summary = |net: &GoNetwork| -> Result<Value> {
        let deg = stats::degree_distributions(net);
        Ok(json!({
            "distinct_edges": net.edges.len(),
            "total_weight": net.total_weight(),
            "clustering": stats::clustering_coefficient(net)?.average,
            "in_fit": stats::fit_curve(&deg.in_curve).ok(),
            "out_fit": stats::fit_curve(&deg.out_curve).ok(),
        }))
    };
    let body = json!({
        "original": summary(&original)?,
        "shuffled": summary(&shuffled)?,
        "vertex_counts_identical": original.vertex_counts == shuffled.vertex_counts,
        "edges_identical": original.edges == shuffled.edges,
    });
    out.json("baseline_net.json", &header, &shuffled)?;
    out.json("baseline_report.json", &header, &body)?;
    Ok(body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoints() {
        assert_eq!(game_checkpoints(0), Vec::<usize>::new());
        assert_eq!(game_checkpoints(1), [1]);
        assert_eq!(game_checkpoints(7), [1, 2, 5, 7]);
        assert_eq!(game_checkpoints(20), [1, 2, 5, 10, 20]);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a b"), "a b");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    }

    #[test]
    fn network_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut out = OutputDir::create(dir.path()).unwrap();
        let net = GoNetwork::from_edges(5, &[(0, 1, 2), (4, 4, 1)]);
        let header = Header::new("test", json!({ "d": 4 }), Some("abc".into()));
        let path = out.json("net.json", &header, &net).unwrap();
        let (h, back) = read_network(&path).unwrap();
        assert_eq!(h, header);
        assert_eq!(back, net);
    }

    #[test]
    fn missing_header_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.json");
        fs::write(&path, serde_json::to_string(&GoNetwork::from_edges(2, &[])).unwrap()).unwrap();
        assert!(matches!(read_network(&path), Err(Error::File { .. })));
    }
}
