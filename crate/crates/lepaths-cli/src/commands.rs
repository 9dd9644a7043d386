//! The four verbs: `stats`, `check`, `scan` and `region`.

use std::collections::BTreeMap;

use clap::{Args, ValueEnum};
use lepaths::equality::{
    conjecture_scan, ks_equality_report, region_equality_suite, stanley_equality_report,
    vanishing_suite, ConjectureScan, EqualityReport, RegionSuite, ScanOptions, Specimen,
    VanishingSuite,
};
use lepaths::poset::unlabeled_posets;
use lepaths::region::{enumerate_regions, path_of_extension, random_region, region_of, Region};
use lepaths::stats::{self, LcReport};
use lepaths::{width2_partition, ChainPartition, LinearExtension, Poset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::document::{hash_canonical, PosetDocument};
use crate::error::{CliError, CliResult};
use crate::report::{
    int, multipoly, multizpoly, qpoly, zpoly, Instance, Report, Row, SpecimenRecord, Table, Verdict,
};

/// Largest `n` for exhaustive scans over general posets.
pub const MAX_EXHAUSTIVE_N: usize = 9;
/// Largest `a + b` for region scans.
pub const MAX_REGION_SIZE: usize = 12;
/// Largest `n` for random general posets.
pub const MAX_RANDOM_N: usize = 10;
/// Largest number of random instances per scan.
pub const MAX_RANDOM_COUNT: usize = 100_000;

#[derive(Args, Clone, Debug)]
pub struct StatsArgs {
    /// Poset document (JSON).
    pub file: String,
    /// Element `x` (1-based id or label).
    #[arg(long)]
    pub x: String,
    /// Element `y`; tabulates the gap statistic `F` instead of `N`.
    #[arg(long)]
    pub y: Option<String>,
    /// Also tabulate the `q`-analogue (needs chains).
    #[arg(long)]
    pub q: bool,
    /// Also tabulate the multivariate analogue (needs chains).
    #[arg(long)]
    pub mq: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Stanley,
    Ks,
    QStanley,
    QKs,
    MqStanley,
    MqKs,
    Equality,
}

#[derive(Args, Clone, Debug)]
pub struct CheckArgs {
    /// Poset document (JSON).
    pub file: String,
    /// Element `x` (1-based id or label).
    #[arg(long)]
    pub x: String,
    /// Element `y`, for the gap checks.
    #[arg(long)]
    pub y: Option<String>,
    /// Which inequality or equality condition to check.
    #[arg(long, value_enum)]
    pub which: Which,
    /// Smallest `k` to check (defaults to the full meaningful range).
    #[arg(long)]
    pub k_min: Option<i64>,
    /// Largest `k` to check.
    #[arg(long)]
    pub k_max: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Equality characterisation of the gap statistic on general posets.
    Conjecture,
    /// Vanishing windows against enumeration on general posets.
    Vanishing,
    /// Width-two inequality and equality suites on regions.
    Regions,
}

#[derive(Args, Clone, Debug)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub mode: ScanMode,
    #[arg(long, value_enum, default_value = "conjecture")]
    pub suite: Suite,
    /// Exhaustive: all posets with 1..=N elements (regions: all a + b <= N).
    /// Random: posets with exactly N elements.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Regions in the `A x B` box, e.g. `4,4`.
    #[arg(long, value_parser = parse_ab)]
    pub region_ab: Option<(usize, usize)>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random instances.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Edge probability of the random poset generator.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Conjecture suite: skip incomparable pairs.
    #[arg(long)]
    pub comparable_only: bool,
    /// Conjecture suite: replay the normalising construction on every
    /// witnessed instance.
    #[arg(long)]
    pub replay: bool,
}

#[derive(Args, Clone, Debug)]
pub struct RegionArgs {
    /// Poset document (JSON) of width at most two.
    pub file: String,
    /// Overlay the path of this linear extension (elements in order,
    /// comma-separated ids or labels).
    #[arg(long, value_delimiter = ',')]
    pub extension: Option<Vec<String>>,
}

/// The command-line spelling of an enum value.
fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .expect("no skipped values")
        .get_name()
        .to_string()
}

fn parse_ab(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected A,B, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad A in {s:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad B in {s:?}"))?;
    Ok((a, b))
}

struct Loaded {
    doc: PosetDocument,
    poset: Poset,
    hash: String,
}

fn load(path: &str) -> CliResult<Loaded> {
    let doc = PosetDocument::read(path)?;
    let poset = doc.poset()?;
    let hash = doc.hash()?;
    Ok(Loaded { doc, poset, hash })
}

impl Loaded {
    fn instance(&self, x: usize, y: Option<usize>) -> Instance {
        Instance {
            poset_hash: Some(self.hash.clone()),
            n: Some(self.poset.len()),
            x: Some(x + 1),
            y: y.map(|y| y + 1),
            ..Instance::default()
        }
    }

    fn elements(&self, x: &str, y: Option<&str>) -> CliResult<(usize, Option<usize>)> {
        let x = self.doc.resolve(x)?;
        let y = y.map(|y| self.doc.resolve(y)).transpose()?;
        if y == Some(x) {
            return Err(CliError::Input(format!(
                "x and y must be distinct (both are {})",
                x + 1
            )));
        }
        Ok((x, y))
    }
}

fn table<V>(name: &str, d: &stats::Distribution<V>, f: impl Fn(&V) -> Value) -> Table
where
    V: stats::StatValue,
{
    Table {
        name: name.into(),
        rows: d
            .table()
            .iter()
            .map(|(&k, v)| Row { k, value: f(v) })
            .collect(),
    }
}

pub fn cmd_stats(args: &StatsArgs) -> CliResult<Report> {
    let l = load(&args.file)?;
    let (x, y) = l.elements(&args.x, args.y.as_deref())?;
    let p = &l.poset;
    let mut report = Report::new("stats", l.instance(x, y));
    let cp = if args.q || args.mq {
        Some(l.doc.require_chains(p, "--q/--mq")?)
    } else {
        None
    };
    match y {
        None => report
            .tables
            .push(table("N", &stats::n_dist(p, x)?, |v| int(v))),
        Some(y) => report
            .tables
            .push(table("F", &stats::f_dist(p, x, y)?, |v| int(v))),
    }
    if let Some(cp) = &cp {
        if args.q {
            let d = match y {
                None => stats::n_q_dist(p, cp, x)?,
                Some(y) => stats::f_q_dist(p, cp, x, y)?,
            };
            report
                .tables
                .push(table(if y.is_none() { "N_q" } else { "F_q" }, &d, qpoly));
        }
        if args.mq {
            let d = match y {
                None => stats::n_mq_dist(p, cp, x)?,
                Some(y) => stats::f_mq_dist(p, cp, x, y)?,
            };
            report.tables.push(table(
                if y.is_none() { "N_mq" } else { "F_mq" },
                &d,
                multipoly,
            ));
        }
    }
    report.summarize("extensions", int(p.count_extensions()));
    Ok(report)
}

fn lc_verdicts<D>(
    report: &mut Report,
    name: &str,
    lc: LcReport<D>,
    range: (i64, i64),
    f: impl Fn(&D) -> Value,
) {
    for v in lc
        .verdicts
        .iter()
        .filter(|v| (range.0..=range.1).contains(&v.k))
    {
        report.push_verdict(Verdict {
            check: name.into(),
            k: Some(v.k),
            holds: v.holds,
            detail: json!({ "difference": f(&v.difference) }),
        });
    }
}

fn equality_verdict(report: &mut Report, name: &str, r: &EqualityReport) {
    let conds: BTreeMap<String, bool> = r.conds.iter().map(|(c, &v)| (c.to_string(), v)).collect();
    report.push_verdict(Verdict {
        check: name.into(),
        k: Some(r.k),
        holds: r.consistent,
        detail: json!({ "conditions": conds, "epsilon": r.epsilon }),
    });
}

pub fn cmd_check(args: &CheckArgs) -> CliResult<Report> {
    let l = load(&args.file)?;
    let (x, y) = l.elements(&args.x, args.y.as_deref())?;
    let p = &l.poset;
    let n = p.len() as i64;
    let need_y = || {
        y.ok_or_else(|| CliError::Input(format!("--which {} needs --y", value_name(args.which))))
    };
    let default = match (args.which, y) {
        (Which::Equality, None) => (1, n - 1),
        (Which::Equality, Some(_)) => (2, n - 2),
        _ => (2, n),
    };
    let range = (
        args.k_min.unwrap_or(default.0),
        args.k_max.unwrap_or(default.1),
    );
    if range.0 < default.0 || range.1 > default.1 {
        return Err(CliError::Input(format!(
            "k range {}..={} is outside {}..={}, where these conditions are stated",
            range.0, range.1, default.0, default.1
        )));
    }
    let mut instance = l.instance(x, y);
    instance.k_min = Some(range.0);
    instance.k_max = Some(range.1);
    let mut report = Report::new("check", instance);
    let chains = |what: &str| l.doc.require_chains(p, what);
    match args.which {
        Which::Stanley => lc_verdicts(
            &mut report,
            "stanley",
            stats::check_stanley(p, x)?,
            range,
            |v| int(v),
        ),
        Which::Ks => lc_verdicts(
            &mut report,
            "ks",
            stats::check_ks(p, x, need_y()?)?,
            range,
            |v| int(v),
        ),
        Which::QStanley => {
            let cp = chains("q-stanley")?;
            lc_verdicts(
                &mut report,
                "q-stanley",
                stats::check_q_stanley(p, &cp, x)?,
                range,
                zpoly,
            )
        }
        Which::QKs => {
            let cp = chains("q-ks")?;
            lc_verdicts(
                &mut report,
                "q-ks",
                stats::check_q_ks(p, &cp, x, need_y()?)?,
                range,
                zpoly,
            )
        }
        Which::MqStanley => {
            let cp = chains("mq-stanley")?;
            lc_verdicts(
                &mut report,
                "mq-stanley",
                stats::check_mq_stanley(p, &cp, x)?,
                range,
                multizpoly,
            )
        }
        Which::MqKs => {
            let cp = chains("mq-ks")?;
            lc_verdicts(
                &mut report,
                "mq-ks",
                stats::check_mq_ks(p, &cp, x, need_y()?)?,
                range,
                multizpoly,
            )
        }
        Which::Equality => {
            let cp = chains("equality")?;
            let mut skipped = Vec::new();
            match y {
                None => {
                    let d = stats::n_dist(p, x)?;
                    for k in range.0..=range.1 {
                        if d.table().contains_key(&k) {
                            equality_verdict(
                                &mut report,
                                "stanley-equality",
                                &stanley_equality_report(p, &cp, x, k)?,
                            );
                        } else {
                            skipped.push(k);
                        }
                    }
                }
                Some(y) => {
                    if !cp.same_chain(x, y) {
                        return Err(lepaths::Error::NotSameChain { x, y }.into());
                    }
                    let d = stats::f_dist(p, x, y)?;
                    for k in range.0..=range.1 {
                        if d.table().contains_key(&k) {
                            equality_verdict(
                                &mut report,
                                "ks-equality",
                                &ks_equality_report(p, &cp, x, y, k)?,
                            );
                        } else {
                            skipped.push(k);
                        }
                    }
                }
            }
            report.summarize("skipped_zero_k", json!(skipped));
        }
    }
    report.summarize("checked", report.verdicts.len());
    Ok(report)
}

fn scan_error(msg: String) -> CliError {
    CliError::Bounds(msg)
}

fn general_posets(args: &ScanArgs) -> CliResult<Vec<Poset>> {
    let n = args
        .max_n
        .ok_or_else(|| CliError::Input("this suite needs --max-n".into()))?;
    match args.mode {
        ScanMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_N {
                return Err(scan_error(format!(
                    "exhaustive scans over general posets stop at --max-n {MAX_EXHAUSTIVE_N}; use --mode random \
                     --max-n {n} --count 1000 for larger sizes"
                )));
            }
            Ok((1..=n).flat_map(unlabeled_posets).collect())
        }
        ScanMode::Random => {
            if n == 0 || n > MAX_RANDOM_N || args.count > MAX_RANDOM_COUNT {
                return Err(scan_error(format!(
                    "random scans need 1 <= --max-n <= {MAX_RANDOM_N} and --count <= {MAX_RANDOM_COUNT}"
                )));
            }
            if !(0.0..=1.0).contains(&args.density) {
                return Err(CliError::Input("--density must lie in [0, 1]".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..args.count)
                .map(|_| Poset::random(n, args.density, &mut rng).map_err(Into::into))
                .collect()
        }
    }
}

fn regions(args: &ScanArgs) -> CliResult<Vec<Region>> {
    let boxes: Vec<(usize, usize)> = match (args.region_ab, args.max_n) {
        (Some(ab), _) => vec![ab],
        (None, Some(m)) => (0..=m)
            .flat_map(|a| (0..=m - a).map(move |b| (a, b)))
            .collect(),
        (None, None) => {
            return Err(CliError::Input(
                "the regions suite needs --region-ab A,B or --max-n".into(),
            ))
        }
    };
    let largest = boxes.iter().map(|&(a, b)| a + b).max().unwrap_or(0);
    if largest > MAX_REGION_SIZE {
        return Err(scan_error(format!(
            "region scans stop at a + b = {MAX_REGION_SIZE}; try --region-ab 6,6 or --mode random"
        )));
    }
    match args.mode {
        ScanMode::Exhaustive => Ok(boxes
            .into_iter()
            .flat_map(|(a, b)| enumerate_regions(a, b))
            .collect()),
        ScanMode::Random => {
            if args.count > MAX_RANDOM_COUNT {
                return Err(scan_error(format!("--count stops at {MAX_RANDOM_COUNT}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            Ok((0..args.count)
                .map(|i| {
                    let (a, b) = boxes[i % boxes.len()];
                    random_region(a, b, &mut rng)
                })
                .collect())
        }
    }
}

fn scan_instance(args: &ScanArgs) -> Instance {
    let mut parameters = BTreeMap::new();
    parameters.insert("mode".into(), json!(value_name(args.mode)));
    parameters.insert("suite".into(), json!(value_name(args.suite)));
    if let Some(n) = args.max_n {
        parameters.insert("max_n".into(), json!(n));
    }
    if let Some((a, b)) = args.region_ab {
        parameters.insert("region_ab".into(), json!([a, b]));
    }
    if args.mode == ScanMode::Random {
        parameters.insert("seed".into(), json!(args.seed));
        parameters.insert("count".into(), json!(args.count));
        if args.suite != Suite::Regions {
            parameters.insert("density".into(), json!(args.density));
        }
    }
    if args.suite == Suite::Conjecture {
        parameters.insert("comparable_only".into(), json!(args.comparable_only));
        parameters.insert("replay".into(), json!(args.replay));
    }
    Instance {
        parameters,
        ..Instance::default()
    }
}

/// Runs `f` on every item in parallel and merges the results in input order.
fn par_merge<T: Sync, R: Send + Default>(
    items: &[T],
    f: impl Fn(&T) -> R + Sync + Send,
    merge: impl Fn(R, R) -> R,
) -> R {
    items
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(R::default(), merge)
}

pub fn specimen_record(s: &Specimen) -> SpecimenRecord {
    let poset = PosetDocument::from_poset(&s.poset, None, BTreeMap::new());
    SpecimenRecord {
        poset_hash: hash_canonical(&poset),
        poset,
        x: s.x + 1,
        y: s.y + 1,
        k: s.k,
        counts: s.counts.map(|c| c.to_string()),
    }
}

fn count_verdict(report: &mut Report, check: &str, failures: usize, detail: Value) {
    let mut detail = detail;
    detail["violations"] = json!(failures);
    report.push_verdict(Verdict {
        check: check.into(),
        k: None,
        holds: failures == 0,
        detail,
    });
}

fn conjecture_report(report: &mut Report, s: &ConjectureScan, replay: bool) {
    let comparable = s.comparable_bc_violations().count();
    report.summarize("posets", s.posets);
    report.summarize("instances", s.instances);
    report.summarize("count_a", s.count_a);
    report.summarize("count_b", s.count_b);
    report.summarize("count_c", s.count_c);
    report.summarize("specimens", s.specimens.len());
    report.summarize(
        "literal_midway_disagreements",
        s.literal_midway_disagreements,
    );
    if replay {
        report.summarize("replays", s.replays);
    }
    count_verdict(report, "b-implies-a", s.ba_violations.len(), json!({}));
    let first = s.bc_violations.first().map(specimen_record);
    count_verdict(
        report,
        "b-iff-c",
        s.bc_violations.len(),
        json!({
            "comparable_pairs": comparable,
            "incomparable_pairs": s.bc_violations.len() - comparable,
            "first": first,
        }),
    );
    if replay {
        count_verdict(
            report,
            "claim-replay",
            s.replay_failures.len(),
            json!({ "runs": s.replays }),
        );
    }
    report.specimens = s.specimens.iter().map(specimen_record).collect();
}

fn vanishing_report(report: &mut Report, s: &VanishingSuite, posets: usize) {
    report.summarize("posets", posets);
    report.summarize("position_instances", s.stanley_checked);
    report.summarize("gap_instances", s.ks_checked);
    count_verdict(
        report,
        "position-vanishing",
        s.stanley_mismatches.len(),
        json!({}),
    );
    count_verdict(report, "gap-vanishing", s.ks_mismatches.len(), json!({}));
}

fn regions_report(report: &mut Report, s: &RegionSuite, regions: usize) {
    report.summarize("regions", regions);
    report.summarize("q_ks_instances", s.q_ks_checked);
    report.summarize("position_equality_instances", s.stanley_checked);
    report.summarize("gap_equality_instances", s.ks_checked);
    report.summarize("gap_equalities", s.ks_equalities);
    report.summarize(
        "gap_equality_shifts",
        json!({ "c1_plus": s.ks_epsilons[0][0], "c1_minus": s.ks_epsilons[0][1],
                "c2_plus": s.ks_epsilons[1][0], "c2_minus": s.ks_epsilons[1][1] }),
    );
    count_verdict(
        report,
        "q-ks-coefficientwise",
        s.q_ks_failures.len(),
        json!({}),
    );
    count_verdict(
        report,
        "position-equality-conditions",
        s.stanley_discrepancies.len(),
        json!({}),
    );
    count_verdict(
        report,
        "pentagon-vs-ideal-condition",
        s.pentagon_svh_mismatches.len(),
        json!({}),
    );
    count_verdict(
        report,
        "gap-equality-conditions",
        s.ks_discrepancies.len(),
        json!({}),
    );
}

pub fn cmd_scan(args: &ScanArgs) -> CliResult<Report> {
    let mut report = Report::new("scan", scan_instance(args));
    match args.suite {
        Suite::Conjecture => {
            let posets = general_posets(args)?;
            let opts = ScanOptions {
                replay: args.replay,
                comparable_only: args.comparable_only,
            };
            let s = conjecture_scan(&posets, opts);
            conjecture_report(&mut report, &s, args.replay);
        }
        Suite::Vanishing => {
            let posets = general_posets(args)?;
            if posets.iter().any(|p| p.len() > 62) {
                return Err(scan_error("vanishing scans need n <= 62".into()));
            }
            let s = par_merge(&posets, vanishing_suite, VanishingSuite::merge);
            vanishing_report(&mut report, &s, posets.len());
        }
        Suite::Regions => {
            let rs = regions(args)?;
            let s = par_merge(&rs, region_equality_suite, RegionSuite::merge);
            regions_report(&mut report, &s, rs.len());
        }
    }
    Ok(report)
}

/// ASCII drawing of the region with its boundary step strings.
pub fn cmd_region(args: &RegionArgs) -> CliResult<String> {
    let l = load(&args.file)?;
    let p = &l.poset;
    let cp: ChainPartition = match l.doc.chain_partition(p)? {
        Some(cp) => cp,
        None => width2_partition(p)?,
    };
    let r = region_of(p, &cp);
    let overlay = match &args.extension {
        None => None,
        Some(ids) => {
            let order = ids
                .iter()
                .map(|s| l.doc.resolve(s))
                .collect::<CliResult<Vec<_>>>()?;
            let ext = LinearExtension::from_order(p, &order)?;
            Some(path_of_extension(&cp, &ext))
        }
    };
    let ids = |c: &[usize]| {
        c.iter()
            .map(|u| (u + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out: String = r
        .render(overlay.as_ref())
        .lines()
        .map(|l| format!("{}\n", l.trim_end()))
        .collect();
    out.push_str(&format!("c1: {}\nc2: {}\n", ids(cp.c1()), ids(cp.c2())));
    out.push_str(&format!(
        "lower: {}\nupper: {}\n",
        r.lower_path().step_string(),
        r.upper_path().step_string()
    ));
    if let Some(path) = &overlay {
        out.push_str(&format!("path: {}\n", path.step_string()));
    }
    Ok(out)
}
