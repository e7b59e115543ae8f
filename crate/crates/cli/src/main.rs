//! `finspace`: exact homology of finite posets from JSON documents.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand};
use finspace_cli::{render, PosetDocument, SchemaError};
use finspace_core::complex::{f_complex, relative_f_complex, ChainComplex, HomologyResult};
use finspace_core::cover::{build_cover, cover_spectral, cover_spectral_generic, pi2_report};
use finspace_core::mobius;
use finspace_core::morse::{greedy_matching, morse_complex, morse_complex_forced, verify_matching};
use finspace_core::reduction::{find_quasicellular, is_cellular, quasicellular_complex};
use finspace_core::spectral::{
    d1_paper, e1_paper, spectral_sequence, Filtration, Mode, PaperPage, SpectralReport,
};
use finspace_core::Poset;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "finspace", version, about = "Exact homology of finite posets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit machine-readable JSON instead of the human report
    #[arg(long, global = true)]
    json: bool,
    /// Write the Hasse diagram of the relevant poset as Graphviz text
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Homology of the poset by the chain-complex route
    Homology {
        file: PathBuf,
        /// Use the reduced complex (adds the empty chain in degree -1)
        #[arg(long, conflicts_with = "relative")]
        reduced: bool,
        /// Relative homology modulo the named open subset
        #[arg(long, value_name = "SUBSET")]
        relative: Option<String>,
    },
    /// Spectral sequence of a named antichain-induced filtration
    Spectral {
        file: PathBuf,
        #[arg(long, value_name = "NAME")]
        filtration: String,
        /// Treat the bottom level as a relative part
        #[arg(long)]
        relative: bool,
    },
    /// Quasicellular level map and reduced complex
    Quasicell {
        file: PathBuf,
        /// Relative pair modulo the named open subset
        #[arg(long, value_name = "SUBSET")]
        relative: Option<String>,
    },
    /// Verify a named Morse matching and compute its Morse complex
    Morse {
        file: PathBuf,
        #[arg(long, value_name = "NAME")]
        matching: String,
        /// Grade critical points by concentration degree with zero
        /// differentials even when the matching filtration is not
        /// quasicellular (may compute the wrong homology)
        #[arg(long)]
        forced: bool,
    },
    /// Mobius function (reduced Euler characteristic)
    Mobius {
        file: PathBuf,
        /// chains | incidence | open <SUBSET> | bjorner-walker <SUBSET>
        #[arg(long, num_args = 1..=2, default_values_t = vec!["incidence".to_string()])]
        method: Vec<String>,
    },
    /// Regular covering space of a named coloring
    Cover {
        file: PathBuf,
        #[arg(long, value_name = "NAME")]
        coloring: String,
        /// Also run the cover spectral sequence over this filtration
        #[arg(long, value_name = "NAME")]
        filtration: Option<String>,
        /// Relative part for the second-homotopy report
        #[arg(long, value_name = "SUBSET")]
        relative: Option<String>,
    },
    /// Beat-point core of the poset
    Reduce { file: PathBuf },
    /// Barycentric subdivision (elements are the nonempty chains)
    Subdivide { file: PathBuf },
    /// Non-Hausdorff suspension (adds two new top points)
    Suspend { file: PathBuf },
    /// Size, height, grading and related flags
    Info { file: PathBuf },
    /// Compare the chain, quasicellular and Morse routes over a corpus
    Bench { dir: PathBuf },
}

struct Output {
    human: String,
    json: Value,
    dot: String,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                println!("{}", out.human.trim_end());
            }
            if let Some(path) = &cli.dot {
                if let Err(e) = std::fs::write(path, &out.dot) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(1);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.downcast_ref::<SchemaError>().is_some() { 2 } else { 1 };
            std::process::exit(code);
        }
    }
}

fn load(file: &Path) -> Result<(PosetDocument, Poset)> {
    let doc = PosetDocument::from_path(file)?;
    let p = doc.poset()?;
    Ok((doc, p))
}

fn run(cmd: &Cmd) -> Result<Output> {
    match cmd {
        Cmd::Homology { file, reduced, relative } => homology(file, *reduced, relative.as_deref()),
        Cmd::Spectral { file, filtration, relative } => spectral(file, filtration, *relative),
        Cmd::Quasicell { file, relative } => quasicell(file, relative.as_deref()),
        Cmd::Morse { file, matching, forced } => morse(file, matching, *forced),
        Cmd::Mobius { file, method } => mobius_cmd(file, method),
        Cmd::Cover { file, coloring, filtration, relative } => {
            cover(file, coloring, filtration.as_deref(), relative.as_deref())
        }
        Cmd::Reduce { file } => transform(file, "core", |p| p.core()),
        Cmd::Subdivide { file } => transform(file, "subdivision", |p| p.barycentric_subdivision()),
        Cmd::Suspend { file } => transform(file, "suspension", |p| p.suspension()),
        Cmd::Info { file } => info(file),
        Cmd::Bench { dir } => bench(dir),
    }
}

fn homology_block(h: &HomologyResult) -> String {
    let mut out = format!("{}\n", render::homology_line(h));
    for d in h.degrees() {
        for g in &d.generators {
            match &g.order {
                Some(t) => {
                    let _ = writeln!(out, "  H{} generator (order {t}): {g}", d.degree);
                }
                None => {
                    let _ = writeln!(out, "  H{} generator: {g}", d.degree);
                }
            }
        }
    }
    out
}

fn homology(file: &Path, reduced: bool, relative: Option<&str>) -> Result<Output> {
    let (doc, p) = load(file)?;
    let cc = match relative {
        Some(name) => relative_f_complex(&p, doc.subset(name)?)?,
        None => f_complex(&p, reduced),
    };
    let h = cc.homology();
    let mut human = homology_block(&h);
    let _ = writeln!(human, "complex: {}", render::complex_summary(&cc));
    let json = json!({
        "homology": render::homology_json(&h),
        "complex": { "summary": render::complex_summary(&cc),
                     "total_generators": cc.total_generators() },
    });
    Ok(Output { human, json, dot: render::dot(&p, None, None) })
}

fn paper_page_block(page: &PaperPage) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "E^1 entries:");
    for (p, q) in page.bidegrees() {
        let entry = page.entry(p, q).unwrap();
        let _ = writeln!(out, "  E^1[{p},{q}] = {}", entry.group);
        for g in &entry.gens {
            let owner = g.owner.as_deref().unwrap_or("X0");
            let order = g
                .order
                .as_ref()
                .map(|t| format!(" (order {t})"))
                .unwrap_or_default();
            let _ = writeln!(out, "    {owner}{order}: {}", render::cycle_string(&g.cycle));
        }
    }
    let mut wrote_d1 = false;
    for (p, q) in page.bidegrees() {
        if let Some(m) = page.d1(p, q) {
            if !wrote_d1 {
                let _ = writeln!(out, "d^1 maps:");
                wrote_d1 = true;
            }
            let _ = writeln!(out, "  d^1[{p},{q}] -> [{},{q}]:", p - 1);
            let _ = writeln!(out, "{}", render::matrix_lines(m, "    "));
        }
    }
    let _ = writeln!(out, "E^2 entries:");
    for ((p, q), g) in page.e2_groups() {
        let _ = writeln!(out, "  E^2[{p},{q}] = {g}");
    }
    out
}

fn generic_report_block(report: &SpectralReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "generic engine pages:");
    for page in &report.pages {
        let entries: Vec<String> = page
            .nontrivial()
            .into_iter()
            .map(|((p, q), g)| format!("[{p},{q}]={g}"))
            .collect();
        let body = if entries.is_empty() { "0".to_string() } else { entries.join("  ") };
        let _ = writeln!(out, "  r={}: {}  (chi={})", page.r, body, page.euler_characteristic());
    }
    let _ = writeln!(out, "convergence:");
    for c in &report.convergence {
        let _ = writeln!(
            out,
            "  degree {}: E^inf rank {} torsion {} vs homology rank {} torsion {} -> {}",
            c.degree,
            c.rank_sum,
            c.torsion_product,
            c.homology_rank,
            c.homology_torsion,
            if c.ok { "ok" } else { "MISMATCH" }
        );
    }
    let _ = writeln!(out, "homology: {}", render::homology_line(&report.homology));
    out
}

fn generic_report_json(report: &SpectralReport) -> Value {
    let pages: Vec<Value> = report
        .pages
        .iter()
        .map(|page| {
            json!({
                "r": page.r,
                "entries": page.nontrivial().into_iter().map(|((p, q), g)| {
                    json!({ "p": p, "q": q, "group": render::group_json(&g) })
                }).collect::<Vec<_>>(),
                "euler_characteristic": page.euler_characteristic(),
            })
        })
        .collect();
    let convergence: Vec<Value> = report
        .convergence
        .iter()
        .map(|c| {
            json!({
                "degree": c.degree,
                "rank_sum": c.rank_sum,
                "torsion_product": c.torsion_product.to_string(),
                "homology_rank": c.homology_rank,
                "homology_torsion": c.homology_torsion.to_string(),
                "ok": c.ok,
            })
        })
        .collect();
    json!({
        "pages": pages,
        "convergence": convergence,
        "homology": render::homology_json(&report.homology),
    })
}

fn paper_page_json(page: &PaperPage) -> Value {
    let entries: Vec<Value> = page
        .bidegrees()
        .map(|(p, q)| {
            let entry = page.entry(p, q).unwrap();
            json!({
                "p": p, "q": q,
                "group": render::group_json(&entry.group),
                "generators": entry.gens.iter().map(|g| json!({
                    "owner": g.owner,
                    "order": g.order.as_ref().map(|t| t.to_string()),
                    "cycle": render::cycle_string(&g.cycle),
                })).collect::<Vec<_>>(),
                "d1": page.d1(p, q).map(render::matrix_json),
            })
        })
        .collect();
    let e2: Vec<Value> = page
        .e2_groups()
        .into_iter()
        .map(|((p, q), g)| json!({ "p": p, "q": q, "group": render::group_json(&g) }))
        .collect();
    json!({ "e1": entries, "e2": e2 })
}

fn spectral(file: &Path, name: &str, relative: bool) -> Result<Output> {
    let (doc, p) = load(file)?;
    let f = Filtration::validate(&p, doc.filtration_levels(name)?)?;
    let mode = if relative { Mode::Relative } else { Mode::Absolute };
    let page = d1_paper(&f, &e1_paper(&f, mode)?)?;
    let report = spectral_sequence(&f, mode)?;

    let sizes: Vec<String> = f.levels().iter().map(|l| l.len().to_string()).collect();
    let mut human = format!("filtration `{name}`: {} levels, sizes {}\n", f.levels().len(), sizes.join("/"));
    human.push_str(&paper_page_block(&page));
    human.push_str(&generic_report_block(&report));
    let json = json!({
        "filtration": { "name": name, "levels": f.levels() },
        "paper_page": paper_page_json(&page),
        "generic": generic_report_json(&report),
    });
    Ok(Output { human, json, dot: render::dot(&p, None, None) })
}

fn quasicell(file: &Path, relative: Option<&str>) -> Result<Output> {
    let (doc, p) = load(file)?;
    let a = match relative {
        Some(name) => Some(doc.subset(name)?.to_vec()),
        None => None,
    };
    let qm = find_quasicellular(&p, a.as_deref())?;
    let cc = quasicellular_complex(&p, &qm)?;
    let h = cc.homology();
    let oracle = match &a {
        Some(a) => relative_f_complex(&p, a)?.homology(),
        None => f_complex(&p, false).homology(),
    };

    let rho: Vec<String> = qm.map().iter().map(|(x, n)| format!("{x}->{n}")).collect();
    let mut human = format!("rho: {}\n", rho.join(" "));
    let _ = writeln!(human, "complex: {}", render::complex_summary(&cc));
    let _ = writeln!(
        human,
        "generators: {} quasicellular vs {} chains",
        cc.total_generators(),
        p.chain_count()
    );
    human.push_str(&homology_block(&h));
    let _ = writeln!(human, "matches f-complex homology: {}", h.same_groups(&oracle));
    let json = json!({
        "rho": qm.map(),
        "relative_part": qm.relative_part(),
        "complex": render::complex_json(&cc),
        "homology": render::homology_json(&h),
        "matches_oracle": h.same_groups(&oracle),
    });
    Ok(Output { human, json, dot: render::dot(&p, None, None) })
}

fn morse(file: &Path, name: &str, forced: bool) -> Result<Output> {
    let (doc, p) = load(file)?;
    let m = doc.matching(name)?.to_vec();
    let report = verify_matching(&p, &m)?;

    let mut human = String::new();
    let _ = writeln!(human, "is_matching: {}", report.is_matching);
    let _ = writeln!(human, "is_morse: {}", report.is_morse);
    let adm: Vec<String> = report
        .admissible_edges
        .iter()
        .map(|((a, b), ok)| format!("({a},{b})={ok}"))
        .collect();
    let _ = writeln!(human, "admissible: {}", adm.join(" "));
    let _ = writeln!(human, "critical points: {}", report.critical_points.join(" "));

    let result = if forced { morse_complex_forced(&p, &m) } else { morse_complex(&p, &m) };
    let cc = match result {
        Ok(cc) => cc,
        Err(e) => {
            // surface the verification report before the domain error
            println!("{}", human.trim_end());
            return Err(e.into());
        }
    };
    let h = cc.homology();
    let _ = writeln!(human, "complex: {}", render::complex_summary(&cc));
    let _ = writeln!(
        human,
        "generators: {} morse vs {} chains",
        cc.total_generators(),
        p.chain_count()
    );
    human.push_str(&homology_block(&h));
    let json = json!({
        "is_matching": report.is_matching,
        "is_morse": report.is_morse,
        "admissible_edges": report.admissible_edges.iter()
            .map(|((a, b), ok)| json!({ "edge": [a, b], "admissible": ok }))
            .collect::<Vec<_>>(),
        "critical_points": report.critical_points,
        "forced": forced,
        "complex": render::complex_json(&cc),
        "homology": render::homology_json(&h),
    });
    Ok(Output { human, json, dot: render::dot(&p, Some(&m), None) })
}

fn mobius_cmd(file: &Path, method: &[String]) -> Result<Output> {
    let (doc, p) = load(file)?;
    let report = match method[0].as_str() {
        "chains" => mobius::mobius_chains(&p),
        "incidence" => mobius::mobius_incidence(&p),
        "open" => {
            let name = method
                .get(1)
                .ok_or_else(|| SchemaError("method `open` needs a subset name".into()))?;
            mobius::mobius_open(&p, doc.subset(name)?)?
        }
        "bjorner-walker" => {
            let name = method
                .get(1)
                .ok_or_else(|| SchemaError("method `bjorner-walker` needs a subset name".into()))?;
            mobius::bjorner_walker(&p, doc.subset(name)?)?
        }
        other => return Err(SchemaError(format!("unknown method `{other}`")).into()),
    };
    let mut human = format!("{}\n", report.value);
    let _ = writeln!(human, "method: {}", report.method);
    if let Some(parts) = &report.decomposition {
        for (label, v) in parts {
            let _ = writeln!(human, "  {label}: {v}");
        }
    }
    let json = json!({
        "value": report.value.to_string(),
        "method": report.method,
        "decomposition": report.decomposition.as_ref().map(|parts| {
            parts.iter().map(|(l, v)| json!([l, v.to_string()])).collect::<Vec<_>>()
        }),
    });
    Ok(Output { human, json, dot: render::dot(&p, None, None) })
}

fn cover(
    file: &Path,
    coloring: &str,
    filtration: Option<&str>,
    relative: Option<&str>,
) -> Result<Output> {
    let (doc, p) = load(file)?;
    let c = doc.coloring(coloring, &p)?;
    let space = build_cover(&c)?;
    let h = f_complex(&space.total, false).homology();
    let a = match relative {
        Some(name) => Some(doc.subset(name)?.to_vec()),
        None => None,
    };
    let pi2 = pi2_report(&c, a.as_deref());

    let mut human = render::homology_line(&h);
    let pi2_json;
    match &pi2 {
        Ok(r) => {
            let _ = write!(human, "; pi2={}", r.pi2);
            human.push('\n');
            if let Some(ok) = r.tensor_check {
                let _ = writeln!(human, "tensor check: {ok}");
            }
            pi2_json = json!({
                "pi2": render::group_json(&r.pi2),
                "tensor_check": r.tensor_check,
            });
        }
        Err(e) => {
            human.push('\n');
            let _ = writeln!(human, "pi2 unavailable: {e}");
            pi2_json = json!({ "error": e.to_string() });
        }
    }
    let _ = writeln!(
        human,
        "cover: {} points over {} (group order {}, connected {})",
        space.total.len(),
        p.len(),
        c.group().order(),
        c.is_connected()?
    );

    let mut spectral_json = Value::Null;
    if let Some(name) = filtration {
        let f = Filtration::validate(&p, doc.filtration_levels(name)?)?;
        let page = cover_spectral(&c, &f)?;
        let report = cover_spectral_generic(&c, &f)?;
        human.push_str(&paper_page_block(&page));
        human.push_str(&generic_report_block(&report));
        spectral_json = json!({
            "paper_page": paper_page_json(&page),
            "generic": generic_report_json(&report),
        });
    }

    let json = json!({
        "points": space.total.len(),
        "group_order": c.group().order(),
        "homology": render::homology_json(&h),
        "pi2": pi2_json,
        "spectral": spectral_json,
    });
    Ok(Output { human, json, dot: render::dot(&space.total, None, None) })
}

fn transform(file: &Path, what: &str, op: impl Fn(&Poset) -> Poset) -> Result<Output> {
    let (_, p) = load(file)?;
    let q = op(&p);
    let out_doc = PosetDocument::from_poset(&q);
    let human = format!("{what}: {} -> {} points\n{}\n", p.len(), q.len(), out_doc.to_json());
    let json = json!({
        "points_before": p.len(),
        "points_after": q.len(),
        "document": serde_json::to_value(&out_doc)?,
    });
    Ok(Output { human, json, dot: render::dot(&q, None, None) })
}

fn info(file: &Path) -> Result<Output> {
    let (_, p) = load(file)?;
    let per_degree: Vec<usize> = (0..=p.height().max(0))
        .map(|n| p.chains(n).len())
        .collect();
    let cellular = is_cellular(&p);
    let mut human = String::new();
    let _ = writeln!(human, "points: {}", p.len());
    let _ = writeln!(human, "height: {}", p.height());
    let _ = writeln!(
        human,
        "chains: {} (by degree: {})",
        p.chain_count(),
        per_degree.iter().map(|n| n.to_string()).collect::<Vec<_>>().join("/")
    );
    let _ = writeln!(human, "components: {}", p.components().len());
    let _ = writeln!(human, "graded: {}", p.is_graded());
    let _ = writeln!(human, "cellular: {}", cellular.cellular);
    let _ = writeln!(human, "beat points: {}", p.beat_points().len());
    let _ = writeln!(human, "minimal: {}", p.minimal_elements().join(" "));
    let _ = writeln!(human, "maximal: {}", p.maximal_elements().join(" "));
    let _ = writeln!(human, "mobius: {}", mobius::mu(&p));
    let json = json!({
        "points": p.len(),
        "height": p.height(),
        "chain_count": p.chain_count(),
        "chains_by_degree": per_degree,
        "components": p.components().len(),
        "graded": p.is_graded(),
        "cellular": cellular.cellular,
        "beat_points": p.beat_points().len(),
        "minimal": p.minimal_elements(),
        "maximal": p.maximal_elements(),
        "mobius": mobius::mu(&p).to_string(),
    });
    Ok(Output { human, json, dot: render::dot(&p, None, None) })
}

struct RouteStats {
    generators: usize,
    largest: String,
    millis: u128,
    homology: String,
}

fn route_stats(t0: Instant, cc: &ChainComplex) -> RouteStats {
    let mut largest = (0usize, 0usize);
    for n in cc.min_degree()..=cc.max_degree() {
        let d = cc.diff(n);
        if d.rows() * d.cols() > largest.0 * largest.1 {
            largest = (d.rows(), d.cols());
        }
    }
    let h = cc.homology();
    RouteStats {
        generators: cc.total_generators(),
        largest: format!("{}x{}", largest.0, largest.1),
        millis: t0.elapsed().as_millis(),
        homology: render::homology_line(&h),
    }
}

fn bench(dir: &Path) -> Result<Output> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| SchemaError(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| path.extension().map(|x| x == "json").unwrap_or(false))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(SchemaError(format!("no .json documents in {}", dir.display())).into());
    }

    let mut human = format!(
        "{:<16} {:>6} {:>7} | {:>7} {:>9} {:>6} | {:>7} {:>9} {:>6} | {:>7} {:>9} {:>6}\n",
        "name", "points", "chains", "f-gens", "f-max", "f-ms", "q-gens", "q-max", "q-ms",
        "m-gens", "m-max", "m-ms"
    );
    let mut rows = Vec::new();
    for file in &files {
        let (_, p) = load(file)?;
        let name = file.file_stem().unwrap().to_string_lossy().to_string();

        let t0 = Instant::now();
        let full = f_complex(&p, false);
        let f_stats = route_stats(t0, &full);

        let quasi = {
            let t0 = Instant::now();
            find_quasicellular(&p, None)
                .and_then(|qm| quasicellular_complex(&p, &qm))
                .map(|cc| route_stats(t0, &cc))
        };
        let morse = {
            let t0 = Instant::now();
            greedy_matching(&p)
                .and_then(|m| morse_complex(&p, &m))
                .map(|cc| route_stats(t0, &cc))
        };

        let cell = |s: &std::result::Result<RouteStats, finspace_core::Error>| match s {
            Ok(r) => format!("{:>7} {:>9} {:>6}", r.generators, r.largest, r.millis),
            Err(_) => format!("{:>7} {:>9} {:>6}", "-", "-", "-"),
        };
        let _ = writeln!(
            human,
            "{:<16} {:>6} {:>7} | {:>7} {:>9} {:>6} | {} | {}",
            name,
            p.len(),
            p.chain_count(),
            f_stats.generators,
            f_stats.largest,
            f_stats.millis,
            cell(&quasi),
            cell(&morse),
        );
        let agree = |s: &std::result::Result<RouteStats, finspace_core::Error>| match s {
            Ok(r) => Some(r.homology == f_stats.homology),
            Err(_) => None,
        };
        let q_agree = agree(&quasi);
        let m_agree = agree(&morse);
        if q_agree == Some(false) || m_agree == Some(false) {
            let _ = writeln!(human, "  WARNING: {name}: reduced-route homology differs");
        }
        let route_json = |s: std::result::Result<RouteStats, finspace_core::Error>| match s {
            Ok(r) => json!({
                "generators": r.generators,
                "largest_differential": r.largest,
                "millis": r.millis as u64,
                "homology": r.homology,
            }),
            Err(e) => json!({ "error": e.to_string() }),
        };
        rows.push(json!({
            "name": name,
            "points": p.len(),
            "chains": p.chain_count(),
            "f_complex": route_json(Ok(f_stats)),
            "quasicellular": route_json(quasi),
            "morse": route_json(morse),
        }));
    }
    Ok(Output {
        human,
        json: json!({ "cases": rows }),
        dot: "digraph poset {\n}\n".to_string(),
    })
}
