//! Command-line front end for the cyclic and affine Tamari lattices.

mod export;
mod verify;

use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclotam::chains::{conjecture_report, length_spectrum};
use cyclotam::ncpart::{atam_sieve_poly, csp_verify, q_catalan, tincp_of_tree, CatalanKind};
use cyclotam::repfan::{g_vector, triangulation_of_tree};
use cyclotam::tibit::insertion_tree;
use cyclotam::{LatticeModel, Tito, Variant};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cyclotam", version, about = "Cyclic and affine Tamari lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the lattice and print a summary.
    Build(Common),
    /// Count the elements (JSON lists them).
    Enumerate(Common),
    /// Run every verification suite at this n and print a pass/fail table.
    Verify(Common),
    /// Rowmotion orbits.
    Rowmotion(Common),
    /// Fixed points of rowmotion powers against the sieving polynomial.
    CspCheck(Common),
    /// Maximal chain length spectrum.
    Chains(Common),
    /// Tagged-arc triangulations and g-vectors of affine elements.
    Triangulate {
        #[command(flatten)]
        common: Common,
        /// Only this element, in window notation.
        #[arg(long)]
        tito: Option<String>,
    },
    /// Write the lattice, or one element's tree, as JSON or DOT.
    Export {
        #[command(flatten)]
        common: Common,
        /// Export this element's tree instead of the whole lattice.
        #[arg(long)]
        tito: Option<String>,
    },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=7))]
    n: u8,
    #[arg(long, value_enum, default_value_t = VariantArg::Cyclic)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest n checked exhaustively; beyond it suites sample.
    #[arg(long, default_value_t = 5)]
    limit: usize,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum VariantArg {
    Cyclic,
    Affine,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

impl Common {
    fn n(&self) -> usize {
        self.n as usize
    }

    fn variant(&self) -> Variant {
        match self.variant {
            VariantArg::Cyclic => Variant::Cyclic,
            VariantArg::Affine => Variant::Affine,
        }
    }

    fn lattice(&self) -> anyhow::Result<LatticeModel> {
        Ok(LatticeModel::build(self.n(), self.variant())?)
    }

    fn no_dot(&self) -> anyhow::Result<()> {
        if self.format == Format::Dot {
            bail!("--format dot is only available for export");
        }
        Ok(())
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values always serialize"));
}

fn build(o: &Common) -> anyhow::Result<()> {
    o.no_dot()?;
    let l = o.lattice()?;
    let summary = json!({
        "n": l.n,
        "variant": l.variant.name(),
        "elements": l.len(),
        "covers": l.covers().len(),
        "join_irreducibles": l.jirr().len(),
        "rowmotion_order": l.row_order(),
    });
    if o.format == Format::Json {
        print_json(&summary);
    } else {
        println!("{} n={}: {} elements, {} covers, {} join-irreducibles, rowmotion order {}", l.variant.name(), l.n, l.len(), l.covers().len(), l.jirr().len(), l.row_order());
    }
    Ok(())
}

fn enumerate(o: &Common) -> anyhow::Result<()> {
    o.no_dot()?;
    let l = o.lattice()?;
    match o.format {
        Format::Json => print_json(&export::lattice_json(&l)),
        _ => println!("{}", l.len()),
    }
    Ok(())
}

fn run_verify(o: &Common) -> anyhow::Result<bool> {
    o.no_dot()?;
    let rows = verify::run(o.n(), o.limit, o.seed, 100_000)?;
    let ok = rows.iter().all(|r| r.pass);
    if o.format == Format::Json {
        let v: Vec<_> = rows.iter().map(|r| json!({ "suite": r.name, "mode": r.mode, "pass": r.pass })).collect();
        print_json(&json!({ "n": o.n, "seed": o.seed, "suites": v, "pass": ok }));
    } else {
        for r in &rows {
            println!("{:<30} {:<10} {}", r.name, r.mode, if r.pass { "PASS" } else { "FAIL" });
        }
    }
    Ok(ok)
}

fn rowmotion(o: &Common) -> anyhow::Result<()> {
    o.no_dot()?;
    let l = o.lattice()?;
    let orbits = l.orbits();
    let windows = |orb: &Vec<usize>| orb.iter().map(|&x| l.element(x).tito.to_string()).collect::<Vec<_>>();
    if o.format == Format::Json {
        let v: Vec<_> = orbits.iter().map(windows).collect();
        print_json(&json!({ "order": l.row_order(), "orbits": v }));
    } else {
        println!("order {}, {} orbits", l.row_order(), orbits.len());
        for orb in &orbits {
            println!("{}: {}", orb.len(), windows(orb).join(" -> "));
        }
    }
    Ok(())
}

fn csp_check(o: &Common) -> anyhow::Result<bool> {
    o.no_dot()?;
    let l = o.lattice()?;
    let n = o.n();
    let (omega, f) = match l.variant {
        Variant::Cyclic => (4 * n, q_catalan(CatalanKind::B, n)?),
        Variant::Affine => (4 * n * (n - 1), atam_sieve_poly(n)?),
    };
    let rep = csp_verify(l.len(), |x| l.rowmotion(x), omega, &f)?;
    if o.format == Format::Json {
        let rows: Vec<_> = rep.rows.iter().map(|r| json!({ "k": r.k, "fixed": r.fixed, "polynomial": r.value })).collect();
        print_json(&json!({ "omega": omega, "rows": rows, "pass": rep.pass }));
    } else {
        println!("{:>4} {:>8} {:>12}", "k", "fixed", "F(zeta^k)");
        for r in &rep.rows {
            let mark = if (r.value - r.fixed as f64).abs() < 1e-6 { "pass" } else { "FAIL" };
            let shown = if r.value.abs() < 5e-7 { 0.0 } else { r.value };
            println!("{:>4} {:>8} {:>12.6} {mark}", r.k, r.fixed, shown);
        }
        println!("omega = {omega}: {}", if rep.pass { "all pass" } else { "FAIL" });
    }
    Ok(rep.pass)
}

fn chains(o: &Common) -> anyhow::Result<()> {
    o.no_dot()?;
    let l = o.lattice()?;
    let s = length_spectrum(&l);
    let report = (l.variant == Variant::Affine).then(|| conjecture_report(&l));
    if o.format == Format::Json {
        let counts: serde_json::Map<String, serde_json::Value> = s.counts.iter().map(|(k, c)| (k.to_string(), json!(c.to_string()))).collect();
        let conj = report.as_ref().map(|r| json!({ "shortest": r.count.to_string(), "factorial": r.factorial.to_string(), "matches": r.matches() }));
        print_json(&json!({ "min": s.min(), "max": s.max(), "interval": s.is_interval(), "counts": counts, "conjecture": conj }));
    } else {
        println!("max {}, min {}", s.max(), s.min());
        for (k, c) in &s.counts {
            println!("  length {k}: {c} chains");
        }
        if let Some(r) = report {
            println!("conjecture report: {r}");
        }
    }
    Ok(())
}

fn parse_tito(s: &str, n: usize) -> anyhow::Result<Tito> {
    Tito::parse(s, n).with_context(|| format!("cannot parse {s:?}"))
}

fn triangulate(o: &Common, tito: Option<&str>) -> anyhow::Result<()> {
    o.no_dot()?;
    if o.variant() != Variant::Affine {
        bail!("triangulations are defined for --variant affine");
    }
    let n = o.n();
    let trees = match tito {
        Some(s) => {
            let tree = insertion_tree(&parse_tito(s, n)?);
            if !tree.is_real() {
                bail!("{s} is not an affine element");
            }
            vec![tree]
        }
        None => o.lattice()?.elements().iter().map(|e| e.tree.clone()).collect(),
    };
    let mut out = Vec::new();
    for t in &trees {
        let tri = triangulation_of_tree(t)?;
        if o.format == Format::Json {
            out.push(json!({ "window": t.post_order().to_string(), "arcs": export::triangulation_json(&tri, n) }));
        } else {
            let parts: Vec<String> = tri.iter().map(|&x| format!("{x} g={}", g_vector(x, n))).collect();
            println!("{}: {}", t.post_order(), parts.join(", "));
        }
    }
    if o.format == Format::Json {
        print_json(&json!(out));
    }
    Ok(())
}

fn export(o: &Common, tito: Option<&str>) -> anyhow::Result<()> {
    match tito {
        Some(s) => {
            let t = insertion_tree(&parse_tito(s, o.n())?);
            match o.format {
                Format::Dot => print!("{}", export::tree_dot(&t)),
                _ => {
                    let mut v = export::tree_json(&t);
                    v["window"] = json!(t.post_order().to_string());
                    v["arcs"] = export::arcs_json(&t.right_edges());
                    v["tincp"] = export::tincp_json(&tincp_of_tree(&t));
                    print_json(&v);
                }
            }
        }
        None => {
            let l = o.lattice()?;
            match o.format {
                Format::Dot => print!("{}", export::lattice_dot(&l)),
                _ => print_json(&export::lattice_json(&l)),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(o) => build(o).map(|_| true),
        Command::Enumerate(o) => enumerate(o).map(|_| true),
        Command::Verify(o) => run_verify(o),
        Command::Rowmotion(o) => rowmotion(o).map(|_| true),
        Command::CspCheck(o) => csp_check(o),
        Command::Chains(o) => chains(o).map(|_| true),
        Command::Triangulate { common, tito } => triangulate(common, tito.as_deref()).map(|_| true),
        Command::Export { common, tito } => export(common, tito.as_deref()).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
