use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, ValueEnum};
use mckay_core::verify::{self, Section, Settings, VerificationReport, DEFAULT_MAX_PROBE_POWER};
use mckay_core::DiagramType;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Report {
    Groups,
    Characters,
    Mckay,
    Dual,
    Fourier,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Verify the McKay and dual McKay correspondences for finite subgroups of SU(2).
#[derive(Debug, Parser)]
#[command(name = "mckay", version)]
struct Args {
    /// Diagram type such as A:5, D:7 or E:8 (repeatable)
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
    types: Vec<DiagramType>,

    /// Run A:1..12, D:4..12 and E:6..8
    #[arg(long)]
    all: bool,

    #[arg(long, value_enum, default_value_t = Report::All)]
    report: Report,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Tolerance for verdicts on floating-point deviations
    #[arg(long, value_parser = parse_tolerance)]
    tolerance: Option<f64>,

    /// Largest power tried by the central-transform order probe
    #[arg(long, default_value_t = DEFAULT_MAX_PROBE_POWER)]
    max_probe_power: u64,
}

fn parse_type(s: &str) -> Result<DiagramType, String> {
    s.parse().map_err(|e: mckay_core::Error| e.to_string())
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn sections(report: Report) -> BTreeSet<Section> {
    match report {
        Report::Groups => [Section::Groups].into(),
        Report::Characters => [Section::Characters].into(),
        Report::Mckay => [Section::McKay].into(),
        Report::Dual => [Section::Dual].into(),
        Report::Fourier => [Section::Fourier].into(),
        Report::All => Section::ALL.into_iter().collect(),
    }
}

fn fmt_deviation(d: Option<f64>) -> String {
    d.map_or_else(|| "-".to_string(), |d| format!("{d:.3e}"))
}

fn write_text(out: &mut impl Write, r: &VerificationReport) -> io::Result<()> {
    writeln!(
        out,
        "{} {}  |G| = {}  classes = {}  {}",
        r.ty,
        r.group,
        r.group_order,
        r.class_count,
        r.status.to_uppercase()
    )?;
    for c in &r.checks {
        write!(
            out,
            "  {} {:<26} {:>10}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            fmt_deviation(c.deviation)
        )?;
        match &c.witness {
            Some(w) => writeln!(out, "  {w}")?,
            None => writeln!(out)?,
        }
    }
    let d = &r.details;
    if let Some(g) = &d.groups {
        let sizes: Vec<String> = g.classes.iter().map(|c| c.size.to_string()).collect();
        let orders: Vec<String> = g
            .classes
            .iter()
            .map(|c| c.element_order.to_string())
            .collect();
        writeln!(
            out,
            "  class sizes [{}], element orders [{}]",
            sizes.join(" "),
            orders.join(" ")
        )?;
        writeln!(
            out,
            "  center order {}, abelianization order {} exponent {}",
            g.center_order, g.abelianization_order, g.abelianization_exponent
        )?;
    }
    if let Some(c) = &d.characters {
        writeln!(out, "  irrep dimensions {:?}", c.dims)?;
    }
    if let Some(m) = &d.mckay {
        writeln!(
            out,
            "  dimensions along v0, v1, ...: {:?}",
            m.dims_by_vertex
        )?;
    }
    if let Some(dual) = &d.dual {
        writeln!(out, "  triple orders {}", dual.triple_orders)?;
        writeln!(
            out,
            "  vertex element orders {:?}",
            dual.vertex_element_orders
        )?;
        for s in &dual.statements {
            write!(
                out,
                "  statement ({}) {}",
                s.statement,
                if s.holds { "holds" } else { "fails" }
            )?;
            match &s.witness {
                Some(w) => writeln!(out, ": {w}")?,
                None => writeln!(out)?,
            }
        }
        if let Some(ind) = dual.mumford_order_independent {
            writeln!(out, "  neighbor product order-independent: {ind}")?;
        }
    }
    if let Some(f) = &d.fourier {
        writeln!(out, "  det C = {}", f.connection_index)?;
        match f.probe_order {
            Some(p) => writeln!(out, "  central transform order probe: T^{p} is scalar")?,
            None => writeln!(
                out,
                "  central transform order probe: no scalar power up to {}",
                f.probe_bound
            )?,
        }
    }
    let stages: Vec<String> = r
        .stages
        .iter()
        .map(|s| format!("{} {:.1} ms", s.stage, s.ms))
        .collect();
    writeln!(
        out,
        "  timing: {}; total {:.1} ms",
        stages.join(", "),
        r.elapsed_ms
    )
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut types = args.types.clone();
    if args.all {
        for ty in DiagramType::sweep() {
            if !types.contains(&ty) {
                types.push(ty);
            }
        }
    }
    if types.is_empty() {
        let mut cmd = Args::command();
        let _ = cmd
            .error(
                clap::error::ErrorKind::MissingRequiredArgument,
                "give at least one --type or --all",
            )
            .print();
        return ExitCode::from(2);
    }

    let mut settings = Settings {
        sections: sections(args.report),
        max_probe_power: args.max_probe_power,
        ..Settings::default()
    };
    if let Some(t) = args.tolerance {
        settings = settings.with_tolerance(t);
    }

    let reports: Vec<VerificationReport> = types
        .par_iter()
        .map(|&ty| verify::run(ty, &settings))
        .collect();

    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (i, r) in reports.iter().enumerate() {
        let written = match args.format {
            Format::Json => serde_json::to_writer(&mut out, r)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out)),
            Format::Text => {
                if i > 0 {
                    let _ = writeln!(out);
                }
                write_text(&mut out, r)
            }
        };
        if written.is_err() {
            return ExitCode::from(1);
        }
    }
    if reports.iter().all(VerificationReport::passes) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
