use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use facepair::group::{
    h1, presentation_from_cw, presentation_from_pairings, reduced_family_presentation, simplify, Presentation,
    TreeStrategy,
};
use facepair::io::{serialize_complex, serialize_presentation};
use facepair::report::{render_table, table_rows};
use facepair::symmetry::singularity_report;
use facepair::{FamilyId, Result};

#[derive(Parser)]
#[command(name = "facepair", version, about = "Face-pairing 3-manifolds M24(n) and M25(n)")]
struct Cli {
    /// Print orbit traces.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    M24,
    M25,
}

impl From<Family> for FamilyId {
    fn from(f: Family) -> Self {
        match f {
            Family::M24 => FamilyId::M24,
            Family::M25 => FamilyId::M25,
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Mode {
    #[default]
    Pairing,
    Cw,
}

#[derive(Args)]
struct Member {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Write the complex document.
    Gen {
        #[command(flatten)]
        member: Member,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cell counts, Euler characteristic and orbit census.
    Analyze {
        #[command(flatten)]
        member: Member,
    },
    /// Fundamental-group presentation.
    Pi1 {
        #[command(flatten)]
        member: Member,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        #[arg(long)]
        simplify: bool,
    },
    /// First homology as invariant factors.
    H1 {
        #[command(flatten)]
        member: Member,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Branched-covering data of a rotation.
    Symmetry {
        #[command(flatten)]
        member: Member,
        #[arg(long, default_value_t = 1)]
        step: usize,
    },
    /// Homology and covering data for a range of n.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

fn presentation(member: &Member, mode: Mode, simplified: bool) -> Result<Presentation> {
    let family = FamilyId::from(member.family);
    let c = family.build(member.n)?;
    match (mode, simplified) {
        (Mode::Pairing, false) => presentation_from_pairings(&c),
        (Mode::Pairing, true) => reduced_family_presentation(family, member.n),
        (Mode::Cw, s) => {
            let p = presentation_from_cw(&c, &TreeStrategy::Prefer(vec!["v".into()]))?;
            Ok(if s { simplify(&p) } else { p })
        }
    }
}

fn analyze(member: &Member, verbose: bool) -> Result<String> {
    let c = FamilyId::from(member.family).build(member.n)?;
    let cert = c.is_manifold()?;
    let counts = cert.counts;
    let mut out = format!(
        "{}\nsigma: {} {} {} {}\neuler characteristic: {}\nmanifold: {}\n",
        c.name,
        counts.sigma0,
        counts.sigma1,
        counts.sigma2,
        counts.sigma3,
        cert.euler_characteristic,
        if cert.is_manifold { "yes" } else { "no" }
    );
    let edges = c.edge_orbits()?;
    out.push_str(&format!("edge classes: {}\n", edges.len()));
    for o in &edges {
        out.push_str(&format!("  [{}] size {} cycle {}\n", c.edge_display(o.representative), o.len(), o.cycle_word));
        if verbose {
            let trace: Vec<String> = o.cycle.iter().map(|s| format!("{}.{}", c.faces[s.face].name, s.index)).collect();
            out.push_str(&format!("      slots {}\n", trace.join(" ")));
        }
    }
    let vertices = c.vertex_orbits()?;
    out.push_str(&format!("vertex classes: {}\n", vertices.len()));
    for v in &vertices {
        let names: Vec<&str> = v.member_vertices.iter().map(|&i| c.vertices[i].as_str()).collect();
        out.push_str(&format!("  [{}] size {}", c.vertices[v.representative], names.len()));
        if verbose {
            out.push_str(&format!(": {}", names.join(" ")));
        }
        out.push('\n');
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Gen { member, out } => {
            let text = serialize_complex(&FamilyId::from(member.family).build(member.n)?);
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| facepair::Error::Domain(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Analyze { member } => analyze(&member, cli.verbose),
        Command::Pi1 { member, mode, simplify } => {
            Ok(serialize_presentation(&presentation(&member, mode, simplify)?) + "\n")
        }
        Command::H1 { member, mode } => Ok(format!("{}\n", h1(&presentation(&member, mode, false)?))),
        Command::Symmetry { member, step } => Ok(singularity_report(member.family.into(), member.n, step)?.to_string()),
        Command::Table { family, from, to } => {
            let rows = table_rows(family.into(), from, to)?;
            Ok(render_table(family.into(), &rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
