//! Command implementations and exit-code policy.

use crate::output::{error_json, status_line, Envelope};
use crate::{BoundsArgs, Cli, Command, Format, PlanArgs, PlannerChoice, TableArgs, VerifyArgs};
use serde_json::json;
use symtc_core::bilinear::builtin_by_name;
use symtc_core::bounds::{
    bound_report, emit_table1, emit_table2, FactKind, KnownResults, Quantity, Table2Cell,
};
use symtc_core::geometry::{canonicalize, SpaceDescriptor, SpacePoint, UnitVector};
use symtc_core::planner::{DiscretePath, PlannerSpec};
use symtc_core::relations::{check_relations, RelationId};
use symtc_core::suites::{
    full_suite, hopf_suite, pair_exchange_suite, relation_suite, retraction_suite, SuiteConfig,
    SuiteReport,
};
use symtc_core::Error;

pub fn dispatch(cli: Cli) -> i32 {
    match cli.command {
        Command::Plan(args) => cmd_plan(&args).unwrap_or_else(|e| fail("plan", &args.common, &e)),
        Command::Verify(args) => {
            cmd_verify(&args).unwrap_or_else(|e| fail("verify", &args.common, &e))
        }
        Command::Bounds(args) => {
            cmd_bounds(&args).unwrap_or_else(|e| fail("bounds", &args.common, &e))
        }
        Command::Table(args) => {
            cmd_table(&args).unwrap_or_else(|e| fail("table", &args.common, &e))
        }
    }
}

fn fail(command: &'static str, common: &crate::CommonArgs, e: &Error) -> i32 {
    let kind = if e.is_singularity() {
        "singularity"
    } else {
        "usage"
    };
    match common.format {
        Format::Json => println!(
            "{}",
            error_json(command, common.seed, common.tol, kind, &e.to_string())
        ),
        _ => eprintln!("error ({kind}): {e}"),
    }
    if e.is_singularity() {
        3
    } else {
        2
    }
}

fn parse_point(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("invalid coordinate `{t}`")))
        })
        .collect()
}

fn point_on(space: SpaceDescriptor, raw: &str) -> Result<SpacePoint, Error> {
    let coords = parse_point(raw)?;
    if coords.len() != space.ambient_len() {
        return Err(Error::DimensionMismatch {
            expected: space.ambient_len(),
            got: coords.len(),
        });
    }
    canonicalize(space, UnitVector::normalized(&coords)?)
}

fn load_known(data: &Option<std::path::PathBuf>) -> Result<KnownResults, Error> {
    if let Some(path) = data {
        return KnownResults::load(path);
    }
    if let Ok(path) = std::env::var("SYMTC_DATA") {
        return KnownResults::load(std::path::Path::new(&path));
    }
    Ok(KnownResults::defaults())
}

// ---------------------------------------------------------------------------
// plan

fn cmd_plan(args: &PlanArgs) -> Result<i32, Error> {
    let space: SpaceDescriptor = args.space.parse()?;
    let from = point_on(space, &args.from)?;
    let to = point_on(space, &args.to)?;

    let choice = args.planner.unwrap_or({
        if args.map.is_some() && matches!(space, SpaceDescriptor::RealProjective { .. }) {
            PlannerChoice::Rotation
        } else {
            PlannerChoice::Lift
        }
    });
    let planner = match choice {
        PlannerChoice::Rotation => {
            let name = args
                .map
                .as_deref()
                .ok_or_else(|| Error::Parse("the rotation planner needs --map <name>".into()))?;
            PlannerSpec::rotation(builtin_by_name(name)?, space, args.n)?
        }
        PlannerChoice::Lift => PlannerSpec::lift(space, args.n)?,
    };
    let path = planner.plan(&from, &to)?;

    let total_arc: f64 = path
        .samples
        .windows(2)
        .map(|w| {
            symtc_core::geometry::orbit_distance(space, &w[0].rep, &w[1].rep).expect("same space")
        })
        .sum();
    let stats = json!({
        "segments": path.segment_count(),
        "max_step": path.max_step(),
        "total_arc": total_arc,
        "rule_id": path.rule_id,
    });

    let config = json!({
        "space": space.to_string(),
        "from": args.from,
        "to": args.to,
        "map": args.map,
        "planner": planner.name(),
        "n": args.n,
        "seed": args.common.seed,
        "tol": args.common.tol,
    });
    match args.common.format {
        Format::Json => {
            let envelope = Envelope::new(
                "plan",
                args.common.seed,
                args.common.tol,
                config,
                json!({ "path": path, "stats": stats }),
            );
            println!("{}", envelope.to_json());
        }
        Format::Csv => print_path_csv(&path, &config),
        Format::Text => {
            println!("planner {} on {}", planner.name(), space);
            if let Some(rule) = path.rule_id {
                println!("rule_id {rule}");
            }
            println!(
                "samples {}  max step {:.6e}  total arc {:.6}",
                path.samples.len(),
                path.max_step(),
                total_arc
            );
            println!("start {:?}", path.samples[0].rep_coords());
            println!(
                "end   {:?}",
                path.samples[path.samples.len() - 1].rep_coords()
            );
        }
    }
    Ok(0)
}

fn print_path_csv(path: &DiscretePath, config: &serde_json::Value) {
    println!("# symtc v{} plan {}", crate::output::VERSION, config);
    let width = path.samples[0].rep_coords().len();
    let header: Vec<String> = std::iter::once("t".to_string())
        .chain((0..width).map(|k| format!("c{k}")))
        .collect();
    println!("{}", header.join(","));
    let segments = path.segment_count();
    for (k, sample) in path.samples.iter().enumerate() {
        let mut row = vec![format!("{}", k as f64 / segments as f64)];
        row.extend(sample.rep_coords().iter().map(|c| format!("{c}")));
        println!("{}", row.join(","));
    }
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: &VerifyArgs) -> Result<i32, Error> {
    let cfg = SuiteConfig {
        samples: args.samples,
        pairs: args.pairs,
        segments: args.n,
        seed: args.common.seed,
        tol: args.common.tol,
    };
    let need_r = || {
        args.r
            .ok_or_else(|| Error::Parse(format!("target `{}` needs --r <dim>", args.target)))
    };
    let need_space = || -> Result<SpaceDescriptor, Error> {
        args.space
            .as_deref()
            .ok_or_else(|| Error::Parse(format!("target `{}` needs --space <desc>", args.target)))?
            .parse()
    };

    let mut suite = SuiteReport::empty();
    match args.target.as_str() {
        "all" => suite = full_suite(&cfg)?,
        "psi" => suite.reports = pair_exchange_suite(need_r()?, &cfg),
        "h" | "H" => suite.reports = retraction_suite(need_r()?, &cfg),
        "hopf" => {
            let name = args
                .map
                .as_deref()
                .ok_or_else(|| Error::Parse("target `hopf` needs --map <name>".into()))?;
            suite.reports = hopf_suite(&builtin_by_name(name)?, &cfg)?;
        }
        "rotation" => {
            let name = args
                .map
                .as_deref()
                .ok_or_else(|| Error::Parse("target `rotation` needs --map <name>".into()))?;
            let planner =
                PlannerSpec::rotation(builtin_by_name(name)?, need_space()?, cfg.segments)?;
            suite.sections = vec![symtc_core::planner::verify_section(
                &planner, cfg.pairs, cfg.seed, cfg.tol,
            )?];
        }
        "lift" => {
            let planner = PlannerSpec::lift(need_space()?, cfg.segments)?;
            suite.sections = vec![symtc_core::planner::verify_section(
                &planner, cfg.pairs, cfg.seed, cfg.tol,
            )?];
        }
        name => {
            let spec = builtin_by_name(name)?;
            match &args.relation {
                Some(rel) => {
                    let rel = RelationId::parse(rel)?;
                    suite.reports =
                        vec![check_relations(&spec, rel, cfg.samples, cfg.seed, cfg.tol)?];
                }
                None => suite.reports = relation_suite(&spec, &cfg)?,
            }
        }
    }

    let pass = suite.pass();
    let config = json!({
        "target": args.target,
        "r": args.r,
        "space": args.space,
        "map": args.map,
        "relation": args.relation,
        "samples": args.samples,
        "pairs": args.pairs,
        "n": args.n,
        "seed": args.common.seed,
        "tol": args.common.tol,
    });
    match args.common.format {
        Format::Json => {
            let envelope =
                Envelope::new("verify", args.common.seed, args.common.tol, config, &suite);
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            return Err(Error::Parse(
                "verify has no csv rendering; use --format json".into(),
            ))
        }
        Format::Text => {
            for report in &suite.reports {
                println!(
                    "{}",
                    status_line(
                        report.pass,
                        &format!("{}/{}", report.map, report.relation),
                        &format!(
                            "max residual {:.3e} (samples={}, seed={}, tol={:.1e})",
                            report.max_residual, report.samples, report.seed, report.tol
                        ),
                    )
                );
            }
            for section in &suite.sections {
                println!(
                    "{}",
                    status_line(
                        section.pass,
                        &format!("{}@{}", section.planner, section.space),
                        &format!(
                            "endpoint {:.2e}, step {:.4e}/{:.4e}, swap {:.2e}, coverage misses {}, singular {}",
                            section.max_endpoint_residual,
                            section.max_step,
                            section.step_bound,
                            section.max_swap_residual,
                            section.coverage_failures,
                            section.singular_failures,
                        ),
                    )
                );
            }
            let total = suite.reports.len() + suite.sections.len();
            let passed = suite.reports.iter().filter(|r| r.pass).count()
                + suite.sections.iter().filter(|s| s.pass).count();
            println!("summary: {passed}/{total} checks passed");
        }
    }
    Ok(if pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// bounds

fn quantity_label(q: Quantity) -> &'static str {
    match q {
        Quantity::Tc => "TC",
        Quantity::Tcs => "TCS",
        Quantity::EmbDim => "EMB_DIM",
        Quantity::Level => "LEVEL",
        Quantity::BSnm => "B_SNM",
        Quantity::Imm => "IMM",
    }
}

fn cmd_bounds(args: &BoundsArgs) -> Result<i32, Error> {
    let space: SpaceDescriptor = args.space.parse()?;
    let known = load_known(&args.data)?;
    let report = bound_report(space, &known)?;

    let config = json!({
        "space": space.to_string(),
        "data": args.data.as_ref().map(|p| p.display().to_string()),
        "seed": args.common.seed,
        "tol": args.common.tol,
    });
    match args.common.format {
        Format::Json => {
            let envelope =
                Envelope::new("bounds", args.common.seed, args.common.tol, config, &report);
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            return Err(Error::Parse(
                "bounds has no csv rendering; use --format json".into(),
            ))
        }
        Format::Text => {
            println!("bounds for {space}");
            for fact in &report.facts {
                let kind = match fact.kind {
                    FactKind::Exact => "exact",
                    FactKind::Lower => "lower",
                    FactKind::Upper => "upper",
                    FactKind::Relation => "relation",
                };
                let value = match &fact.value {
                    symtc_core::bounds::Value::Int(v) => v.to_string(),
                    symtc_core::bounds::Value::Symbolic(s) => s.clone(),
                };
                println!(
                    "  {:7} {:8} {:24} - {}",
                    quantity_label(fact.quantity),
                    kind,
                    value,
                    fact.provenance
                );
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// table

fn parse_rho_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, Error> {
    let bad = || Error::Parse(format!("invalid rho range `{s}` (use `1..4` or `3`)"));
    if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a.trim().parse().map_err(|_| bad())?;
        let hi: u32 = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        if lo == 0 || hi < lo {
            return Err(bad());
        }
        Ok(lo..=hi)
    } else {
        let v: u32 = s.trim().parse().map_err(|_| bad())?;
        if v == 0 {
            return Err(bad());
        }
        Ok(v..=v)
    }
}

fn cell_text(cell: &Option<Table2Cell>) -> String {
    match cell {
        None => "-".to_string(),
        Some(c) => {
            let flag = match (&c.origin, c.matches_reference) {
                (symtc_core::bounds::CellOrigin::External { .. }, Some(true)) => " (ext)",
                (symtc_core::bounds::CellOrigin::External { .. }, _) => " (ext!)",
                (_, Some(true)) => "",
                (_, Some(false)) => " (MISMATCH)",
                (_, None) => " (extrapolated)",
            };
            format!("{}{}", c.value, flag)
        }
    }
}

fn cmd_table(args: &TableArgs) -> Result<i32, Error> {
    let known = load_known(&args.data)?;
    let config = json!({
        "which": args.which,
        "rho": args.rho,
        "data": args.data.as_ref().map(|p| p.display().to_string()),
        "seed": args.common.seed,
        "tol": args.common.tol,
    });
    match args.which {
        1 => {
            let table = emit_table1();
            match args.common.format {
                Format::Json => {
                    let envelope =
                        Envelope::new("table", args.common.seed, args.common.tol, config, &table);
                    println!("{}", envelope.to_json());
                }
                Format::Csv => {
                    println!("# symtc v{} table {}", crate::output::VERSION, config);
                    println!("r,upper,lower");
                    for row in &table.rows {
                        println!("{},{},{}", row.r, row.upper, row.lower);
                    }
                }
                Format::Text => {
                    println!("tabulated bounds: lower <= TCS(P^r) <= upper");
                    println!("{:>4} {:>6} {:>6}", "r", "upper", "lower");
                    for row in &table.rows {
                        println!("{:>4} {:>6} {:>6}", row.r, row.upper, row.lower);
                    }
                }
            }
        }
        2 => {
            let table = emit_table2(parse_rho_range(&args.rho)?, &known)?;
            match args.common.format {
                Format::Json => {
                    let envelope =
                        Envelope::new("table", args.common.seed, args.common.tol, config, &table);
                    println!("{}", envelope.to_json());
                }
                Format::Csv => {
                    println!("# symtc v{} table {}", crate::output::VERSION, config);
                    println!("rho,n,row,column,value,origin,matches_reference");
                    for row in &table.rows {
                        for (kind, cells) in [("TC", &row.tc), ("Imm", &row.imm)] {
                            for (col, cell) in cells.iter().enumerate() {
                                if let Some(c) = cell {
                                    let origin = match &c.origin {
                                        symtc_core::bounds::CellOrigin::Computed => {
                                            "computed".to_string()
                                        }
                                        symtc_core::bounds::CellOrigin::External { source } => {
                                            format!("external:{source}")
                                        }
                                    };
                                    println!(
                                        "{},{},{},{},{},{},{}",
                                        row.rho,
                                        row.n,
                                        kind,
                                        table.columns[col],
                                        c.value,
                                        origin,
                                        c.matches_reference
                                            .map(|b| b.to_string())
                                            .unwrap_or_else(|| "extrapolated".into()),
                                    );
                                }
                            }
                        }
                    }
                }
                Format::Text => {
                    println!("torsion comparison along n = 2^rho + 1");
                    println!(
                        "{:>4} {:>4} {:>4} {:>22} {:>22} {:>22} {:>22}",
                        "rho",
                        "n",
                        "row",
                        table.columns[0],
                        table.columns[1],
                        table.columns[2],
                        table.columns[3]
                    );
                    for row in &table.rows {
                        println!(
                            "{:>4} {:>4} {:>4} {:>22} {:>22} {:>22} {:>22}",
                            row.rho,
                            row.n,
                            "TC",
                            cell_text(&row.tc[0]),
                            cell_text(&row.tc[1]),
                            cell_text(&row.tc[2]),
                            cell_text(&row.tc[3]),
                        );
                        println!(
                            "{:>4} {:>4} {:>4} {:>22} {:>22} {:>22} {:>22}",
                            "",
                            "",
                            "Imm",
                            cell_text(&row.imm[0]),
                            cell_text(&row.imm[1]),
                            cell_text(&row.imm[2]),
                            cell_text(&row.imm[3]),
                        );
                    }
                }
            }
        }
        other => return Err(Error::Parse(format!("no table {other}; use 1 or 2"))),
    }
    Ok(0)
}
